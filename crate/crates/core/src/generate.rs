//! Frame generators.
//!
//! Every finite frame is the lattice of downsets of its poset of
//! join-irreducibles, so enumerating posets up to isomorphism and taking
//! downset lattices reaches every finite frame exactly once.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::FiniteFrame;

/// Default cap on poset size for exhaustive generation.
pub const DEFAULT_POSET_CAP: usize = 5;

/// A finite poset given by covering pairs `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetSeed {
    pub size: usize,
    pub covers: Vec<(usize, usize)>,
}

impl PosetSeed {
    pub fn antichain(size: usize) -> Self {
        PosetSeed {
            size,
            covers: vec![],
        }
    }

    pub fn chain(size: usize) -> Self {
        PosetSeed {
            size,
            covers: (1..size).map(|i| (i - 1, i)).collect(),
        }
    }

    /// Reflexive-transitive closure of the covering pairs as a strict-order
    /// row table: `below[x]` is the set of `y < x`, stored as a bitmask.
    pub fn strict_below(&self) -> Result<Vec<u64>> {
        if self.size > 64 {
            return Err(Error::TooLarge {
                what: "poset",
                size: self.size,
                max: 64,
            });
        }
        let mut below = vec![0u64; self.size];
        for &(lo, hi) in &self.covers {
            if lo >= self.size || hi >= self.size {
                return Err(Error::CoverOutOfRange(lo, hi));
            }
            below[hi] |= 1 << lo;
        }
        loop {
            let mut changed = false;
            for x in 0..self.size {
                let mut acc = below[x];
                for y in 0..self.size {
                    if below[x] >> y & 1 == 1 {
                        acc |= below[y];
                    }
                }
                if acc != below[x] {
                    below[x] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(x) = (0..self.size).find(|&x| below[x] >> x & 1 == 1) {
            return Err(Error::CycleInCovers(x));
        }
        Ok(below)
    }
}

/// The frame of downsets of a poset, ordered by inclusion.
///
/// Elements are named by their maximal points (`p0+p2`), with `0` for the
/// empty downset and `1` for the whole poset.
pub fn downset_frame(seed: &PosetSeed) -> Result<FiniteFrame> {
    let below = seed.strict_below()?;
    let n = seed.size;
    if n >= 20 {
        return Err(Error::TooLarge {
            what: "poset for downset enumeration",
            size: n,
            max: 19,
        });
    }
    let downsets: Vec<u64> = (0u64..1 << n)
        .filter(|&d| (0..n).all(|x| d >> x & 1 == 0 || below[x] & !d == 0))
        .collect();
    if downsets.len() > crate::elements::MAX_ELEMENTS {
        return Err(Error::TooLarge {
            what: "downset frame",
            size: downsets.len(),
            max: crate::elements::MAX_ELEMENTS,
        });
    }
    let full = (1u64 << n) - 1;
    let names = downsets
        .iter()
        .map(|&d| {
            if d == full {
                "1".to_string()
            } else if d == 0 {
                "0".to_string()
            } else {
                (0..n)
                    .filter(|&x| d >> x & 1 == 1)
                    .filter(|&x| (0..n).all(|y| d >> y & 1 == 0 || below[y] >> x & 1 == 0))
                    .map(|x| format!("p{x}"))
                    .join("+")
            }
        })
        .collect();
    FiniteFrame::from_order_fn(names, |a, b| downsets[a] & !downsets[b] == 0)
}

/// The `n`-element chain `0 < a < b < … < 1`.
pub fn chain_frame(n: usize) -> Result<FiniteFrame> {
    if n == 0 {
        return Err(Error::Empty);
    }
    let names = (0..n)
        .map(|i| {
            if i + 1 == n {
                "1".to_string()
            } else if i == 0 {
                "0".to_string()
            } else if i <= 26 {
                ((b'a' + (i - 1) as u8) as char).to_string()
            } else {
                format!("c{i}")
            }
        })
        .collect();
    FiniteFrame::from_order_fn(names, |a, b| a <= b)
}

/// The Boolean frame `2^k`; element `i` is the subset of atoms with bitmask `i`.
pub fn boolean_frame(k: usize) -> Result<FiniteFrame> {
    if k > 7 {
        return Err(Error::TooLarge {
            what: "boolean frame exponent",
            size: k,
            max: 7,
        });
    }
    let atom = |i: usize| -> String {
        if k <= 4 {
            ["p", "q", "r", "s"][i].to_string()
        } else {
            format!("e{i}")
        }
    };
    let full = (1usize << k) - 1;
    let names = (0..1usize << k)
        .map(|m| {
            if m == full {
                "1".to_string()
            } else if m == 0 {
                "0".to_string()
            } else {
                (0..k).filter(|&i| m >> i & 1 == 1).map(atom).join("+")
            }
        })
        .collect();
    FiniteFrame::from_order_fn(names, |a, b| a & !b == 0)
}

/// Cartesian product with the componentwise order.
pub fn product_frame(left: &FiniteFrame, right: &FiniteFrame) -> Result<FiniteFrame> {
    let m = right.len();
    let size = left.len() * m;
    if size > crate::elements::MAX_ELEMENTS {
        return Err(Error::TooLarge {
            what: "product frame",
            size,
            max: crate::elements::MAX_ELEMENTS,
        });
    }
    let names = (0..size)
        .map(|i| format!("({},{})", left.name(i / m), right.name(i % m)))
        .collect();
    FiniteFrame::from_order_fn(names, |a, b| {
        left.leq(a / m, b / m) && right.leq(a % m, b % m)
    })
}

/// One representative per isomorphism class of posets of exactly `size` points.
///
/// Naturally labelled relations (`x < y` only for `x < y` as integers) are
/// enumerated, closed-ness under transitivity is checked, and classes are
/// deduplicated by a canonical form minimized over all relabellings.
pub fn posets_of_size(size: usize) -> Vec<PosetSeed> {
    if size == 0 {
        return vec![PosetSeed::antichain(0)];
    }
    let pairs: Vec<(usize, usize)> = (0..size).tuple_combinations().collect();
    let perms: Vec<Vec<usize>> = (0..size).permutations(size).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut less = vec![0u64; size];
        for (bit, &(x, y)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                less[y] |= 1 << x;
            }
        }
        let transitive =
            (0..size).all(|y| (0..size).all(|x| less[y] >> x & 1 == 0 || less[x] & !less[y] == 0));
        if !transitive {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut code = 0u64;
                for y in 0..size {
                    for x in 0..size {
                        if less[y] >> x & 1 == 1 {
                            code |= 1 << (p[y] * size + p[x]);
                        }
                    }
                }
                code
            })
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            let covers = (0..size)
                .flat_map(|y| {
                    let less = &less;
                    (0..size).filter_map(move |x| {
                        let direct = less[y] >> x & 1 == 1
                            && (0..size).all(|z| !(less[y] >> z & 1 == 1 && less[z] >> x & 1 == 1));
                        direct.then_some((x, y))
                    })
                })
                .collect();
            out.push(PosetSeed { size, covers });
        }
    }
    out
}

/// Generator of exhaustive frame corpora with a configurable poset cap.
#[derive(Clone, Copy, Debug)]
pub struct FrameGenerator {
    pub poset_cap: usize,
}

impl Default for FrameGenerator {
    fn default() -> Self {
        FrameGenerator {
            poset_cap: DEFAULT_POSET_CAP,
        }
    }
}

impl FrameGenerator {
    pub fn with_cap(poset_cap: usize) -> Self {
        FrameGenerator { poset_cap }
    }

    fn check(&self, size: usize) -> Result<()> {
        if size > self.poset_cap {
            return Err(Error::SizeCapExceeded {
                what: "poset",
                size,
                cap: self.poset_cap,
            });
        }
        Ok(())
    }

    /// All posets with at most `max_size` points, up to isomorphism,
    /// in order of size.
    pub fn posets_up_to(&self, max_size: usize) -> Result<Vec<PosetSeed>> {
        self.check(max_size)?;
        Ok((0..=max_size).flat_map(posets_of_size).collect())
    }

    /// Downset frames of every poset with at most `max_size` points.
    pub fn frames_from_posets_up_to(&self, max_size: usize) -> Result<Vec<FiniteFrame>> {
        self.posets_up_to(max_size)?
            .iter()
            .map(downset_frame)
            .collect()
    }

    /// One frame per isomorphism class of frames with at most `max_elements`
    /// elements. A frame on `m` elements comes from a poset of at most
    /// `m - 1` points.
    pub fn all_frames_up_to(&self, max_elements: usize) -> Result<Vec<FiniteFrame>> {
        if max_elements == 0 {
            return Ok(vec![]);
        }
        let mut frames: Vec<_> = self
            .frames_from_posets_up_to(max_elements - 1)?
            .into_iter()
            .filter(|f| f.len() <= max_elements)
            .collect();
        frames.sort_by_key(|f| f.len());
        Ok(frames)
    }
}

/// `FrameGenerator::default().all_frames_up_to(n)`.
pub fn all_frames_up_to(max_elements: usize) -> Result<Vec<FiniteFrame>> {
    FrameGenerator::default().all_frames_up_to(max_elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts_match_known_sequence() {
        // unlabelled posets: 1, 1, 2, 5, 16, 63
        let counts: Vec<usize> = (0..=5).map(|n| posets_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn downset_frames_of_small_posets() {
        let two = downset_frame(&PosetSeed::antichain(1)).unwrap();
        assert_eq!(two.len(), 2);
        let three = downset_frame(&PosetSeed::chain(2)).unwrap();
        assert!(three.is_isomorphic(&chain_frame(3).unwrap()));
        let square = downset_frame(&PosetSeed::antichain(2)).unwrap();
        assert!(square.is_isomorphic(&boolean_frame(2).unwrap()));
        assert_eq!(square.names(), &["0", "p0", "p1", "1"]);
    }

    #[test]
    fn cyclic_covers_are_rejected() {
        let seed = PosetSeed {
            size: 2,
            covers: vec![(0, 1), (1, 0)],
        };
        assert!(matches!(downset_frame(&seed), Err(Error::CycleInCovers(_))));
        let seed = PosetSeed {
            size: 1,
            covers: vec![(0, 3)],
        };
        assert!(matches!(
            downset_frame(&seed),
            Err(Error::CoverOutOfRange(0, 3))
        ));
    }

    #[test]
    fn chain_and_boolean_generators() {
        let c3 = chain_frame(3).unwrap();
        assert_eq!(c3.names(), &["0", "a", "1"]);
        let b0 = boolean_frame(0).unwrap();
        assert_eq!(b0.len(), 1);
        assert_eq!(boolean_frame(3).unwrap().len(), 8);
        let p = product_frame(&chain_frame(2).unwrap(), &chain_frame(2).unwrap()).unwrap();
        assert!(p.is_isomorphic(&boolean_frame(2).unwrap()));
    }

    #[test]
    fn frames_with_at_most_four_elements() {
        let frames = all_frames_up_to(4).unwrap();
        let sizes: Vec<usize> = frames.iter().map(|f| f.len()).collect();
        // 1, 2, 3-chain, 2², 4-chain
        assert_eq!(sizes, vec![1, 2, 3, 4, 4]);
        for (i, f) in frames.iter().enumerate() {
            for g in &frames[i + 1..] {
                assert!(!f.is_isomorphic(g));
            }
        }
    }

    #[test]
    fn distributive_lattice_counts() {
        // unlabelled distributive lattices on n elements, n = 1..=6:
        // 1, 1, 1, 2, 3, 5
        let frames = all_frames_up_to(6).unwrap();
        let mut counts = [0usize; 7];
        for f in &frames {
            counts[f.len()] += 1;
        }
        assert_eq!(&counts[1..], &[1, 1, 1, 2, 3, 5]);
    }

    #[test]
    fn cap_is_enforced() {
        let g = FrameGenerator::default();
        assert!(matches!(
            g.posets_up_to(6),
            Err(Error::SizeCapExceeded {
                size: 6,
                cap: 5,
                ..
            })
        ));
    }
}
