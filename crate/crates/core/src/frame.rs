//! Finite frames: finite distributive lattices with materialized order,
//! meet, join and Heyting tables.
//!
//! Elements are plain indices `0..n`. Every table is computed once when the
//! frame is built and the frame is immutable afterwards, so a `&FiniteFrame`
//! can be shared freely between worker threads.

use crate::elements::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteFrame {
    names: Vec<String>,
    leq: Vec<bool>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    meet: Vec<u8>,
    join: Vec<u8>,
    heyting: Vec<u8>,
    bottom: usize,
    top: usize,
    primes: ElementSet,
    dense: ElementSet,
}

impl FiniteFrame {
    /// Builds a frame from an explicit order table, `leq[a][b]` meaning `a ≤ b`.
    ///
    /// The order is checked to be a distributive lattice; the Heyting table
    /// is derived from meets and verified against the residuation law.
    pub fn from_order(names: Vec<String>, leq: &[Vec<bool>]) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                what: "frame",
                size: n,
                max: MAX_ELEMENTS,
            });
        }
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                rows: leq.len(),
                names: n,
            });
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::NotAPartialOrder(format!("{a} ≰ {a}")));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::NotAPartialOrder(format!(
                        "{a} ≤ {b} and {b} ≤ {a} but {a} ≠ {b}"
                    )));
                }
                if !leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if leq[b][c] && !leq[a][c] {
                        return Err(Error::NotAPartialOrder(format!(
                            "{a} ≤ {b} ≤ {c} but {a} ≰ {c}"
                        )));
                    }
                }
            }
        }

        let mut up = vec![ElementSet::EMPTY; n];
        let mut down = vec![ElementSet::EMPTY; n];
        for a in 0..n {
            for b in 0..n {
                if leq[a][b] {
                    up[a].insert(b);
                    down[b].insert(a);
                }
            }
        }

        let mut meet = vec![0u8; n * n];
        let mut join = vec![0u8; n * n];
        for a in 0..n {
            for b in a..n {
                let lower = down[a].intersection(down[b]);
                let m =
                    lower
                        .iter()
                        .find(|&m| lower.is_subset(down[m]))
                        .ok_or(Error::NotALattice {
                            a,
                            b,
                            missing: "meet",
                        })?;
                let upper = up[a].intersection(up[b]);
                let j =
                    upper
                        .iter()
                        .find(|&j| upper.is_subset(up[j]))
                        .ok_or(Error::NotALattice {
                            a,
                            b,
                            missing: "join",
                        })?;
                meet[a * n + b] = m as u8;
                meet[b * n + a] = m as u8;
                join[a * n + b] = j as u8;
                join[b * n + a] = j as u8;
            }
        }

        let all = ElementSet::full(n);
        let bottom = all
            .iter()
            .find(|&x| up[x] == all)
            .ok_or(Error::NotALattice {
                a: 0,
                b: 0,
                missing: "bottom",
            })?;
        let top = all
            .iter()
            .find(|&x| down[x] == all)
            .ok_or(Error::NotALattice {
                a: 0,
                b: 0,
                missing: "top",
            })?;

        let mut frame = FiniteFrame {
            names,
            leq: leq.iter().flatten().copied().collect(),
            up,
            down,
            meet,
            join,
            heyting: vec![0u8; n * n],
            bottom,
            top,
            primes: ElementSet::EMPTY,
            dense: ElementSet::EMPTY,
        };

        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = frame.meet(a, frame.join(b, c));
                    let rhs = frame.join(frame.meet(a, b), frame.meet(a, c));
                    if lhs != rhs {
                        return Err(Error::NotDistributive { a, b, c });
                    }
                }
            }
        }

        for a in 0..n {
            for b in 0..n {
                let h = (0..n)
                    .filter(|&x| frame.leq(frame.meet(a, x), b))
                    .fold(bottom, |acc, x| frame.join(acc, x));
                frame.heyting[a * n + b] = h as u8;
            }
        }
        if let Some((a, b, c)) = frame.adjunction_violation() {
            // unreachable for a distributive lattice; kept as a table check
            return Err(Error::NotDistributive { a, b, c });
        }
        frame.refresh_derived();
        Ok(frame)
    }

    /// Builds a frame from an order predicate on `0..names.len()`.
    pub fn from_order_fn(names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = names.len();
        let table: Vec<Vec<bool>> = (0..n)
            .map(|a| (0..n).map(|b| leq(a, b)).collect())
            .collect();
        Self::from_order(names, &table)
    }

    fn refresh_derived(&mut self) {
        let n = self.len();
        self.primes = (0..n).filter(|&p| self.is_point(p)).collect();
        self.dense = (0..n).filter(|&a| self.is_dense(a)).collect();
    }

    /// Returns a copy with one Heyting table entry overwritten, bypassing
    /// validation. Only meant for fault-injection runs of the check harness.
    #[doc(hidden)]
    pub fn corrupt_heyting(&self, a: usize, b: usize, value: usize) -> FiniteFrame {
        let mut copy = self.clone();
        let n = copy.len();
        copy.heyting[a * n + b] = value as u8;
        copy.refresh_derived();
        copy
    }

    /// First triple `(a, b, c)` with `a ≤ b→c` disagreeing with `a∧b ≤ c`.
    pub fn adjunction_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.leq(a, self.heyting(b, c)) != self.leq(self.meet(a, b), c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    /// The Heyting implication `a → b`.
    #[inline]
    pub fn heyting(&self, a: usize, b: usize) -> usize {
        self.heyting[a * self.len() + b] as usize
    }

    /// `{x : a ≤ x}`.
    #[inline]
    pub fn up(&self, a: usize) -> ElementSet {
        self.up[a]
    }

    /// `{x : x ≤ a}`.
    #[inline]
    pub fn down(&self, a: usize) -> ElementSet {
        self.down[a]
    }

    /// Meet of a set of elements; the empty meet is the top.
    pub fn meet_all(&self, set: ElementSet) -> usize {
        set.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a set of elements; the empty join is the bottom.
    pub fn join_all(&self, set: ElementSet) -> usize {
        set.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `a* = a → 0`.
    #[inline]
    pub fn pseudocomplement(&self, a: usize) -> usize {
        self.heyting(a, self.bottom)
    }

    #[inline]
    pub fn is_dense(&self, a: usize) -> bool {
        self.pseudocomplement(a) == self.bottom
    }

    /// All elements with trivial pseudocomplement.
    pub fn dense_elements(&self) -> ElementSet {
        self.dense
    }

    pub fn is_complemented(&self, a: usize) -> bool {
        self.join(a, self.pseudocomplement(a)) == self.top
    }

    /// `a ≺ b`, i.e. `a* ∨ b = 1`.
    pub fn rather_below(&self, a: usize, b: usize) -> bool {
        self.join(self.pseudocomplement(a), b) == self.top
    }

    /// The completely-below relation as rows: `row[a]` holds every `b` with
    /// `a ≺≺ b`. Computed as the largest interpolative relation inside `≺`.
    pub fn completely_below_relation(&self) -> Vec<ElementSet> {
        let n = self.len();
        let mut rel: Vec<ElementSet> = (0..n)
            .map(|a| (0..n).filter(|&b| self.rather_below(a, b)).collect())
            .collect();
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in rel[a] {
                    let interpolates = rel[a].iter().any(|c| rel[c].contains(b));
                    if !interpolates {
                        rel[a].remove(b);
                        changed = true;
                    }
                }
            }
            if !changed {
                return rel;
            }
        }
    }

    pub fn completely_below(&self, a: usize, b: usize) -> bool {
        self.completely_below_relation()[a].contains(b)
    }

    /// `p < 1` and `a ∧ b ≤ p` forces `a ≤ p` or `b ≤ p`.
    pub fn is_point(&self, p: usize) -> bool {
        if p == self.top {
            return false;
        }
        let n = self.len();
        (0..n).all(|a| {
            self.leq(a, p) || (0..n).all(|b| !self.leq(self.meet(a, b), p) || self.leq(b, p))
        })
    }

    /// The points (prime elements) of the frame.
    pub fn points(&self) -> ElementSet {
        self.primes
    }

    pub fn is_boolean(&self) -> bool {
        self.elements().all(|a| self.is_complemented(a))
    }

    pub fn is_completely_regular(&self) -> bool {
        let rel = self.completely_below_relation();
        self.elements().all(|a| {
            let below = self.elements().filter(|&x| rel[x].contains(a)).collect();
            self.join_all(below) == a
        })
    }

    /// Backtracking search for an order isomorphism onto `other`.
    pub fn isomorphism_to(&self, other: &FiniteFrame) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let signature = |f: &FiniteFrame, a: usize| (f.up(a).len(), f.down(a).len());
        let mut image = vec![usize::MAX; n];
        let mut used = ElementSet::EMPTY;
        fn extend(
            a: usize,
            src: &FiniteFrame,
            dst: &FiniteFrame,
            image: &mut Vec<usize>,
            used: &mut ElementSet,
            sig: &dyn Fn(&FiniteFrame, usize) -> (usize, usize),
        ) -> bool {
            if a == src.len() {
                return true;
            }
            for b in 0..dst.len() {
                if used.contains(b) || sig(src, a) != sig(dst, b) {
                    continue;
                }
                let consistent = (0..a).all(|x| {
                    src.leq(x, a) == dst.leq(image[x], b) && src.leq(a, x) == dst.leq(b, image[x])
                });
                if !consistent {
                    continue;
                }
                image[a] = b;
                used.insert(b);
                if extend(a + 1, src, dst, image, used, sig) {
                    return true;
                }
                used.remove(b);
            }
            image[a] = usize::MAX;
            false
        }
        extend(0, self, other, &mut image, &mut used, &signature).then_some(image)
    }

    pub fn is_isomorphic(&self, other: &FiniteFrame) -> bool {
        self.isomorphism_to(other).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{boolean_frame, chain_frame};

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn three_chain_heyting_values() {
        let f = chain_frame(3).unwrap();
        let (zero, a, one) = (0, 1, 2);
        assert_eq!(f.heyting(a, zero), zero);
        assert_eq!(f.heyting(zero, a), one);
        assert_eq!(f.pseudocomplement(a), zero);
        assert_eq!(f.pseudocomplement(zero), one);
    }

    #[test]
    fn one_element_frame_is_degenerate() {
        let f = FiniteFrame::from_order(names(&["1"]), &[vec![true]]).unwrap();
        assert_eq!(f.bottom(), f.top());
        assert!(f.is_boolean());
        assert!(f.is_dense(0));
        assert!(f.points().is_empty());
    }

    #[test]
    fn pentagon_is_rejected() {
        // 0 < a < c < 1, 0 < b < 1, a and c incomparable with b
        let (z, a, c, b, o) = (0, 1, 2, 3, 4);
        let mut le = vec![vec![false; 5]; 5];
        for x in 0..5 {
            le[x][x] = true;
            le[z][x] = true;
            le[x][o] = true;
        }
        le[a][c] = true;
        let _ = b;
        let err = FiniteFrame::from_order(names(&["0", "a", "c", "b", "1"]), &le).unwrap_err();
        assert!(matches!(err, Error::NotDistributive { .. }), "{err:?}");
    }

    #[test]
    fn diamond_m3_is_rejected() {
        let mut le = vec![vec![false; 5]; 5];
        for x in 0..5 {
            le[x][x] = true;
            le[0][x] = true;
            le[x][4] = true;
        }
        let err = FiniteFrame::from_order(names(&["0", "a", "b", "c", "1"]), &le).unwrap_err();
        assert!(matches!(err, Error::NotDistributive { .. }));
    }

    #[test]
    fn non_lattice_is_rejected() {
        // two incomparable maximal elements
        let le = vec![
            vec![true, true, true],
            vec![false, true, false],
            vec![false, false, true],
        ];
        let err = FiniteFrame::from_order(names(&["0", "a", "b"]), &le).unwrap_err();
        assert!(matches!(err, Error::NotALattice { .. }));
    }

    #[test]
    fn non_order_is_rejected() {
        let le = vec![vec![true, true], vec![true, true]];
        assert!(matches!(
            FiniteFrame::from_order(names(&["x", "y"]), &le),
            Err(Error::NotAPartialOrder(_))
        ));
        let le = vec![vec![false, true], vec![false, true]];
        assert!(matches!(
            FiniteFrame::from_order(names(&["x", "y"]), &le),
            Err(Error::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn dense_elements_of_four_chain() {
        let f = chain_frame(4).unwrap();
        assert_eq!(f.dense_elements().to_vec(), vec![1, 2, 3]);
        assert!(f.is_dense(f.top()));
    }

    #[test]
    fn boolean_detection() {
        let b2 = boolean_frame(2).unwrap();
        assert!(b2.is_boolean());
        let p = b2.index_of("p").unwrap();
        let q = b2.index_of("q").unwrap();
        assert_eq!(b2.pseudocomplement(p), q);
        let c3 = chain_frame(3).unwrap();
        assert!(!c3.is_boolean());
        assert_ne!(c3.join(1, c3.pseudocomplement(1)), c3.top());
    }

    #[test]
    fn completely_below_on_chain_and_boolean() {
        // In a Boolean frame every element is complemented, so ≺≺ is ≤.
        let b = boolean_frame(2).unwrap();
        for x in b.elements() {
            for y in b.elements() {
                assert_eq!(b.completely_below(x, y), b.leq(x, y));
            }
        }
        assert!(b.is_completely_regular());
        // In the 3-chain a* = 0 so a ≺ b only when b = 1 (or a = 0).
        let c = chain_frame(3).unwrap();
        assert!(!c.completely_below(1, 1));
        assert!(c.completely_below(0, 1));
        assert!(c.completely_below(1, 2));
        assert!(!c.is_completely_regular());
    }

    #[test]
    fn points_of_chain_are_non_top_elements() {
        let c = chain_frame(4).unwrap();
        assert_eq!(c.points().to_vec(), vec![0, 1, 2]);
        let b = boolean_frame(2).unwrap();
        // coatoms of 2² are p and q
        assert_eq!(b.points().len(), 2);
    }

    #[test]
    fn isomorphism_search() {
        let c4 = chain_frame(4).unwrap();
        let b2 = boolean_frame(2).unwrap();
        assert!(!c4.is_isomorphic(&b2));
        let reversed =
            FiniteFrame::from_order_fn(names(&["1", "b", "a", "0"]), |x, y| x >= y).unwrap();
        assert_eq!(c4.isomorphism_to(&reversed), Some(vec![3, 2, 1, 0]));
    }
}
