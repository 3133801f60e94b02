//! Sublocales of a finite frame and the sublocale calculus: nuclei,
//! open/closed sublocales, closure, interior, boundary, joins, meets,
//! supplements, Booleanization and relative nowhere density.
//!
//! A sublocale is a member set that contains the top, is closed under meets,
//! and is closed under `x → s` for every frame element `x`. In a finite frame
//! such a set is determined by the points (primes) it contains, and every
//! subset of points generates one; enumeration walks those subsets.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::frame::FiniteFrame;

/// Default cap on frame size for [`FiniteFrame::enumerate_sublocales`].
pub const DEFAULT_SUBLOCALE_CAP: usize = 32;

/// A sublocale of a finite frame, identified by its member set.
#[derive(Clone, Copy)]
pub struct Sublocale<'f> {
    frame: &'f FiniteFrame,
    members: ElementSet,
}

impl PartialEq for Sublocale<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.frame, other.frame) && self.members == other.members
    }
}

impl Eq for Sublocale<'_> {}

impl Hash for Sublocale<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Sublocale<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.members.iter().map(|e| self.frame.name(e)))
            .finish()
    }
}

impl FiniteFrame {
    /// Closure of a set under binary meets, together with the top.
    pub fn meet_closure(&self, gens: ElementSet) -> ElementSet {
        let mut out = ElementSet::singleton(self.top());
        for g in gens {
            if out.contains(g) {
                continue;
            }
            let mut add = ElementSet::EMPTY;
            for x in out {
                add.insert(self.meet(x, g));
            }
            out = out.union(add);
        }
        out
    }

    /// Whether a member set satisfies the two sublocale closure conditions.
    pub fn is_sublocale_set(&self, set: ElementSet) -> bool {
        self.sublocale_violation(set).is_none()
    }

    fn sublocale_violation(&self, set: ElementSet) -> Option<String> {
        if !set.contains(self.top()) {
            return Some("top element missing".into());
        }
        for s in set {
            for t in set {
                if !set.contains(self.meet(s, t)) {
                    return Some(format!("{} ∧ {} missing", self.name(s), self.name(t)));
                }
            }
            for x in self.elements() {
                if !set.contains(self.heyting(x, s)) {
                    return Some(format!("{} → {} missing", self.name(x), self.name(s)));
                }
            }
        }
        None
    }

    /// Validates a member set as a sublocale.
    pub fn sublocale(&self, members: ElementSet) -> Result<Sublocale<'_>> {
        match self.sublocale_violation(members) {
            None => Ok(Sublocale {
                frame: self,
                members,
            }),
            Some(why) => Err(Error::NotASublocale(why)),
        }
    }

    /// Wraps a member set without validation.
    pub fn sublocale_unchecked(&self, members: ElementSet) -> Sublocale<'_> {
        Sublocale {
            frame: self,
            members,
        }
    }

    /// Smallest sublocale containing `set`: all meets of elements `x → g`.
    pub fn generated_sublocale(&self, set: ElementSet) -> Sublocale<'_> {
        let mut gens = ElementSet::EMPTY;
        for g in set {
            for x in self.elements() {
                gens.insert(self.heyting(x, g));
            }
        }
        self.sublocale_unchecked(self.meet_closure(gens))
    }

    /// `𝔠(a) = {x : a ≤ x}`.
    pub fn closed_sublocale(&self, a: usize) -> Sublocale<'_> {
        self.sublocale_unchecked(self.up(a))
    }

    /// `𝔬(a) = {a → x : x ∈ L}`.
    pub fn open_sublocale(&self, a: usize) -> Sublocale<'_> {
        let members = self.elements().map(|x| self.heyting(a, x)).collect();
        self.sublocale_unchecked(members)
    }

    /// The void sublocale `O = {1}`.
    pub fn void_sublocale(&self) -> Sublocale<'_> {
        self.sublocale_unchecked(ElementSet::singleton(self.top()))
    }

    pub fn whole(&self) -> Sublocale<'_> {
        self.sublocale_unchecked(self.all())
    }

    /// `𝔅L = {x → 0 : x ∈ L}`, the smallest dense sublocale.
    pub fn booleanization(&self) -> Sublocale<'_> {
        let members = self.elements().map(|x| self.pseudocomplement(x)).collect();
        self.sublocale_unchecked(members)
    }

    /// The sublocale generated by a set of points.
    pub fn sublocale_from_points(&self, points: ElementSet) -> Sublocale<'_> {
        self.sublocale_unchecked(self.meet_closure(points))
    }

    /// Every sublocale, with the default size cap.
    pub fn enumerate_sublocales(&self) -> Result<Vec<Sublocale<'_>>> {
        self.enumerate_sublocales_capped(DEFAULT_SUBLOCALE_CAP)
    }

    /// Every sublocale, one per subset of points, in a fixed order.
    pub fn enumerate_sublocales_capped(&self, cap: usize) -> Result<Vec<Sublocale<'_>>> {
        if self.len() > cap {
            return Err(Error::SizeCapExceeded {
                what: "frame for sublocale enumeration",
                size: self.len(),
                cap,
            });
        }
        Ok(self.whole().sub_sublocales())
    }

    /// Closed nowhere dense sublocales `𝔠(y)` for dense `y`. Includes the
    /// void sublocale `𝔠(1)`.
    pub fn enumerate_closed_nwd(&self) -> Vec<Sublocale<'_>> {
        self.dense_elements()
            .iter()
            .map(|y| self.closed_sublocale(y))
            .collect()
    }

    /// `Nd(L)`, the join of all nowhere dense sublocales, as `𝔠(⋀ dense)`.
    pub fn nd(&self) -> Sublocale<'_> {
        self.closed_sublocale(self.meet_all(self.dense_elements()))
    }

    /// Every sublocale as a sorted list of member sets, found by deciding
    /// elements one at a time and pruning branches whose generated sublocale
    /// hits an excluded element. Independent of the point-based enumeration.
    pub fn sublocale_sets_by_search(&self) -> Vec<ElementSet> {
        fn go(
            f: &FiniteFrame,
            i: usize,
            inc: ElementSet,
            exc: ElementSet,
            out: &mut Vec<ElementSet>,
        ) {
            if i == f.len() {
                out.push(inc);
                return;
            }
            if inc.contains(i) {
                return go(f, i + 1, inc, exc, out);
            }
            go(f, i + 1, inc, exc.with(i), out);
            let grown = f.generated_sublocale(inc.with(i)).members();
            if grown.intersection(exc).is_empty() {
                go(f, i + 1, grown, exc, out);
            }
        }
        let mut out = Vec::new();
        let start = self.generated_sublocale(ElementSet::EMPTY).members();
        go(self, 0, start, ElementSet::EMPTY, &mut out);
        out.sort();
        out
    }

    /// `Nd(L)` as the join of every enumerated nowhere dense sublocale.
    pub fn nd_by_enumeration(&self) -> Result<Sublocale<'_>> {
        let nwd: Vec<_> = self
            .enumerate_sublocales()?
            .into_iter()
            .filter(|s| s.is_nowhere_dense())
            .collect();
        Ok(join_all(self, &nwd))
    }

    /// Every dense sublocale is open.
    pub fn is_strongly_submaximal(&self) -> Result<bool> {
        Ok(self
            .enumerate_sublocales()?
            .iter()
            .filter(|s| s.is_dense())
            .all(|s| s.is_open()))
    }
}

/// Join of a family over `frame`; the empty join is `O`.
fn join_all<'f>(frame: &'f FiniteFrame, family: &[Sublocale<'f>]) -> Sublocale<'f> {
    let union = family
        .iter()
        .fold(ElementSet::EMPTY, |acc, s| acc.union(s.members));
    frame.sublocale_unchecked(frame.meet_closure(union))
}

/// Join of a non-empty family of sublocales of one frame.
pub fn join<'f>(family: &[Sublocale<'f>]) -> Result<Sublocale<'f>> {
    let first = family.first().ok_or(Error::Empty)?;
    if family.iter().any(|s| !std::ptr::eq(s.frame, first.frame)) {
        return Err(Error::MixedFrames);
    }
    Ok(join_all(first.frame, family))
}

/// Intersection of a non-empty family of sublocales of one frame.
pub fn intersect<'f>(family: &[Sublocale<'f>]) -> Result<Sublocale<'f>> {
    let first = family.first().ok_or(Error::Empty)?;
    if family.iter().any(|s| !std::ptr::eq(s.frame, first.frame)) {
        return Err(Error::MixedFrames);
    }
    let members = family
        .iter()
        .fold(first.members, |acc, s| acc.intersection(s.members));
    Ok(first.frame.sublocale_unchecked(members))
}

impl<'f> Sublocale<'f> {
    pub fn frame(&self) -> &'f FiniteFrame {
        self.frame
    }

    pub fn members(&self) -> ElementSet {
        self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    /// Member indices in ascending order.
    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn member_names(&self) -> Vec<String> {
        self.members
            .iter()
            .map(|e| self.frame.name(e).to_string())
            .collect()
    }

    fn same_frame(&self, other: &Sublocale<'_>) {
        assert!(
            std::ptr::eq(self.frame, other.frame),
            "sublocales over different frames"
        );
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Sublocale<'f>) -> bool {
        self.same_frame(other);
        self.members.is_subset(other.members)
    }

    pub fn is_void(&self) -> bool {
        self.members == ElementSet::singleton(self.frame.top())
    }

    pub fn is_whole(&self) -> bool {
        self.members == self.frame.all()
    }

    /// `0_S = ⋀S`.
    pub fn bottom(&self) -> usize {
        self.frame.meet_all(self.members)
    }

    /// `ν_S(a) = ⋀{s ∈ S : a ≤ s}`.
    pub fn nucleus(&self, a: usize) -> usize {
        self.frame
            .meet_all(self.members.intersection(self.frame.up(a)))
    }

    pub fn nucleus_table(&self) -> Vec<usize> {
        self.frame.elements().map(|a| self.nucleus(a)).collect()
    }

    /// The points of the frame lying in this sublocale.
    pub fn points(&self) -> ElementSet {
        self.members.intersection(self.frame.points())
    }

    /// Every sublocale contained in this one.
    pub fn sub_sublocales(&self) -> Vec<Sublocale<'f>> {
        let pts = self.points().to_vec();
        let mut out = Vec::with_capacity(1 << pts.len());
        for mask in 0u64..1 << pts.len() {
            let gens = pts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            out.push(self.frame.sublocale_from_points(gens));
        }
        out
    }

    pub fn join(&self, other: &Sublocale<'f>) -> Sublocale<'f> {
        self.same_frame(other);
        self.frame
            .sublocale_unchecked(self.frame.meet_closure(self.members.union(other.members)))
    }

    pub fn intersection(&self, other: &Sublocale<'f>) -> Sublocale<'f> {
        self.same_frame(other);
        self.frame
            .sublocale_unchecked(self.members.intersection(other.members))
    }

    /// `S ∩ T = O`.
    pub fn misses(&self, other: &Sublocale<'f>) -> bool {
        self.intersection(other).is_void()
    }

    /// Contains the bottom element, equivalently its closure is everything.
    pub fn is_dense(&self) -> bool {
        self.members.contains(self.frame.bottom())
    }

    /// Smallest closed sublocale containing this one: `𝔠(⋀S)`.
    pub fn closure(&self) -> Sublocale<'f> {
        self.frame.closed_sublocale(self.bottom())
    }

    /// Largest open sublocale inside: `𝔬(⋀(L∖S))`.
    pub fn interior(&self) -> Sublocale<'f> {
        self.frame.open_sublocale(self.supplement().bottom())
    }

    /// `closure(S) ∖ int(S)`, i.e. `closure(S) ∩ (L∖int(S))`.
    pub fn boundary(&self) -> Sublocale<'f> {
        self.closure().intersection(&self.interior().supplement())
    }

    pub fn is_closed(&self) -> bool {
        self.members == self.frame.up(self.bottom())
    }

    /// Whether `S = 𝔬(a)` for some element `a`.
    pub fn is_open(&self) -> bool {
        self.open_generator().is_some()
    }

    /// Some `a` with `S = 𝔬(a)`, when there is one.
    pub fn open_generator(&self) -> Option<usize> {
        self.frame
            .elements()
            .find(|&a| self.frame.open_sublocale(a).members == self.members)
    }

    /// The complement in the sublocale lattice, when one exists. Candidates
    /// are generated from the points outside the sublocale and verified.
    pub fn complement(&self) -> Option<Sublocale<'f>> {
        let other_points = self.frame.points().difference(self.members);
        let candidate = self.frame.sublocale_from_points(other_points);
        (self.misses(&candidate) && self.join(&candidate).is_whole()).then_some(candidate)
    }

    pub fn is_complemented(&self) -> bool {
        self.complement().is_some()
    }

    /// `L∖S`, the smallest `T` with `S ∨ T = L`.
    pub fn supplement(&self) -> Sublocale<'f> {
        self.complement()
            .unwrap_or_else(|| self.supplement_by_meet())
    }

    /// The supplement as the intersection of every `T` with `S ∨ T = L`.
    pub fn supplement_by_meet(&self) -> Sublocale<'f> {
        let members = self
            .frame
            .whole()
            .sub_sublocales()
            .into_iter()
            .filter(|t| self.join(t).is_whole())
            .fold(self.frame.all(), |acc, t| acc.intersection(t.members));
        self.frame.sublocale_unchecked(members)
    }

    /// The supplement found as the unique ⊆-minimal `T` with `S ∨ T = L`.
    /// `None` when the minimal element is not unique.
    pub fn supplement_by_minimality(&self) -> Option<Sublocale<'f>> {
        let candidates: Vec<_> = self
            .frame
            .whole()
            .sub_sublocales()
            .into_iter()
            .filter(|t| self.join(t).is_whole())
            .collect();
        let minimal: Vec<_> = candidates
            .iter()
            .filter(|t| {
                !candidates
                    .iter()
                    .any(|u| u.members != t.members && u.members.is_subset(t.members))
            })
            .collect();
        match minimal.as_slice() {
            [only] => Some(**only),
            _ => None,
        }
    }

    /// `S ∩ 𝔬(a)`, the `S`-open sublocale induced by `a`.
    pub fn open_in(&self, a: usize) -> Sublocale<'f> {
        self.intersection(&self.frame.open_sublocale(a))
    }

    /// `S ∩ 𝔠(a)`.
    pub fn closed_in(&self, a: usize) -> Sublocale<'f> {
        self.intersection(&self.frame.closed_sublocale(a))
    }

    /// `cl_S(A) = closure(A) ∩ S` for `A ⊆ S`.
    pub fn closure_in(&self, a: &Sublocale<'f>) -> Sublocale<'f> {
        a.closure().intersection(self)
    }

    /// `int_S(A)`: the join of every `S`-open sublocale contained in `A`.
    pub fn interior_in(&self, a: &Sublocale<'f>) -> Sublocale<'f> {
        let opens: Vec<_> = self
            .frame
            .elements()
            .map(|x| self.open_in(x))
            .filter(|o| o.is_subset_of(a))
            .collect();
        join_all(self.frame, &opens)
    }

    /// `x →_S 0_S` for `x ∈ S`.
    pub fn relative_pseudocomplement(&self, x: usize) -> usize {
        self.frame.heyting(x, self.bottom())
    }

    /// `𝔅S = {x →_S 0_S : x ∈ S}`, as a sublocale of the ambient frame.
    pub fn relative_booleanization(&self) -> Sublocale<'f> {
        let zero = self.bottom();
        let members = self
            .members
            .iter()
            .map(|x| self.nucleus(self.frame.heyting(x, zero)))
            .collect();
        self.frame.sublocale_unchecked(members)
    }

    /// Whether `ν_S(x)` is dense in the locale `S`.
    pub fn is_dense_element(&self, x: usize) -> bool {
        let x = self.nucleus(x);
        let zero = self.bottom();
        self.nucleus(self.frame.heyting(x, zero)) == zero
    }

    /// Members of `S` that are dense in `S`.
    pub fn dense_members(&self) -> ElementSet {
        let zero = self.bottom();
        self.members
            .iter()
            .filter(|&x| self.frame.heyting(x, zero) == zero)
            .collect()
    }

    /// Nowhere dense in the ambient frame: misses `𝔅L`.
    pub fn is_nowhere_dense(&self) -> bool {
        self.misses(&self.frame.booleanization())
    }

    /// Nowhere dense as a sublocale of `ambient`: misses `𝔅(ambient)`.
    pub fn is_nowhere_dense_in(&self, ambient: &Sublocale<'f>) -> Result<bool> {
        if !std::ptr::eq(self.frame, ambient.frame) {
            return Err(Error::MixedFrames);
        }
        if !self.members.is_subset(ambient.members) {
            return Err(Error::NotASublocaleOf);
        }
        Ok(self.nowhere_dense_in(ambient))
    }

    pub(crate) fn nowhere_dense_in(&self, ambient: &Sublocale<'f>) -> bool {
        self.misses(&ambient.relative_booleanization())
    }

    /// Regular-closed sublocales of a closed `𝔠(x)`: the `𝔠(a → x)`,
    /// deduplicated, in order of first appearance.
    pub fn regular_closed_of(&self) -> Result<Vec<Sublocale<'f>>> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        let x = self.bottom();
        let mut out: Vec<Sublocale<'f>> = Vec::new();
        for a in self.frame.elements() {
            let s = self.frame.closed_sublocale(self.frame.heyting(a, x));
            if !out.contains(&s) {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// `S`-regular-closed sublocales `cl_S(S ∩ 𝔬(a))`, deduplicated.
    pub fn regular_closed_parts(&self) -> Vec<Sublocale<'f>> {
        let mut out: Vec<Sublocale<'f>> = Vec::new();
        for a in self.frame.elements() {
            let s = self.closure_in(&self.open_in(a));
            if !out.contains(&s) {
                out.push(s);
            }
        }
        out
    }

    /// Whether `self` equals `cl_A(A ∩ 𝔬(a))` for some `a`.
    pub fn is_regular_closed_in(&self, ambient: &Sublocale<'f>) -> bool {
        ambient.regular_closed_parts().contains(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{boolean_frame, chain_frame};

    fn set(f: &FiniteFrame, names: &[&str]) -> ElementSet {
        names.iter().map(|n| f.index_of(n).unwrap()).collect()
    }

    /// Brute-force subset scan used as an independent enumeration oracle.
    fn sublocales_by_scan(f: &FiniteFrame) -> Vec<ElementSet> {
        let n = f.len();
        (0u128..1 << n)
            .map(ElementSet::from_bits)
            .filter(|&s| f.is_sublocale_set(s))
            .collect()
    }

    #[test]
    fn three_chain_sublocales() {
        let f = chain_frame(3).unwrap();
        let mut found: Vec<_> = f
            .enumerate_sublocales()
            .unwrap()
            .iter()
            .map(|s| s.members())
            .collect();
        found.sort();
        let mut expected = vec![
            set(&f, &["1"]),
            set(&f, &["0", "1"]),
            set(&f, &["a", "1"]),
            set(&f, &["0", "a", "1"]),
        ];
        expected.sort();
        assert_eq!(found, expected);
        assert_eq!(sublocales_by_scan(&f).len(), 4);
    }

    #[test]
    fn two_has_two_sublocales() {
        let f = chain_frame(2).unwrap();
        assert_eq!(f.enumerate_sublocales().unwrap().len(), 2);
    }

    #[test]
    fn enumeration_matches_subset_scan() {
        for f in crate::generate::all_frames_up_to(6).unwrap() {
            let mut ours: Vec<_> = f
                .enumerate_sublocales()
                .unwrap()
                .iter()
                .map(|s| s.members())
                .collect();
            ours.sort();
            ours.dedup();
            let mut scan = sublocales_by_scan(&f);
            scan.sort();
            assert_eq!(ours, scan, "frame of size {}", f.len());
            assert_eq!(f.sublocale_sets_by_search(), scan);
        }
    }

    #[test]
    fn closed_and_open_in_three_chain() {
        let f = chain_frame(3).unwrap();
        let a = f.index_of("a").unwrap();
        assert_eq!(f.closed_sublocale(a).members(), set(&f, &["a", "1"]));
        assert!(f.open_sublocale(f.bottom()).is_void());
        assert_eq!(f.open_sublocale(a).members(), set(&f, &["0", "1"]));
        assert_eq!(f.open_sublocale(a), f.booleanization());
        assert!(f.closed_sublocale(f.top()).is_void());
        assert!(f.open_sublocale(f.top()).is_whole());
    }

    #[test]
    fn closure_interior_boundary() {
        let f = chain_frame(3).unwrap();
        let a = f.index_of("a").unwrap();
        let void = f.void_sublocale();
        assert_eq!(void.closure(), void);
        assert!(f.booleanization().closure().is_whole());
        assert!(f.closed_sublocale(a).interior().is_void());
        let bd = f.open_sublocale(a).boundary();
        assert_eq!(bd, f.closed_sublocale(f.join(a, f.pseudocomplement(a))));
        assert_eq!(bd, f.closed_sublocale(a));
    }

    #[test]
    fn joins_and_intersections() {
        let f = chain_frame(3).unwrap();
        let a = f.index_of("a").unwrap();
        let b = f.booleanization();
        let c = f.closed_sublocale(a);
        assert!(b.join(&c).is_whole());
        assert_eq!(f.void_sublocale().join(&c), c);
        assert_eq!(f.whole().intersection(&c), c);
        assert_eq!(join(&[b, c]).unwrap(), f.whole());
        assert_eq!(intersect(&[b, c]).unwrap(), f.void_sublocale());
        let g = chain_frame(3).unwrap();
        assert_eq!(join(&[b, g.whole()]), Err(Error::MixedFrames));
    }

    #[test]
    fn supplements() {
        let f = chain_frame(3).unwrap();
        let a = f.index_of("a").unwrap();
        assert!(f.whole().supplement().is_void());
        assert!(f.void_sublocale().supplement().is_whole());
        assert_eq!(f.booleanization().supplement(), f.closed_sublocale(a));
        assert_eq!(f.open_sublocale(a).supplement(), f.closed_sublocale(a));
    }

    #[test]
    fn booleanizations() {
        let b = boolean_frame(2).unwrap();
        assert!(b.booleanization().is_whole());
        let c = chain_frame(3).unwrap();
        assert_eq!(c.booleanization().member_names(), vec!["0", "1"]);
        let c4 = chain_frame(4).unwrap();
        let a = c4.index_of("a").unwrap();
        let ca = c4.closed_sublocale(a);
        assert_eq!(ca.bottom(), a);
        assert_eq!(ca.relative_pseudocomplement(c4.index_of("b").unwrap()), a);
        assert_eq!(ca.relative_booleanization().member_names(), vec!["a", "1"]);
    }

    #[test]
    fn relative_nowhere_density() {
        let f = chain_frame(3).unwrap();
        let a = f.index_of("a").unwrap();
        assert!(f.void_sublocale().is_nowhere_dense_in(&f.whole()).unwrap());
        assert!(!f.whole().is_nowhere_dense_in(&f.whole()).unwrap());
        assert!(f
            .void_sublocale()
            .is_nowhere_dense_in(&f.void_sublocale())
            .unwrap());
        assert!(f.closed_sublocale(a).is_nowhere_dense());
        assert_eq!(
            f.whole().is_nowhere_dense_in(&f.closed_sublocale(a)),
            Err(Error::NotASublocaleOf)
        );

        let c4 = chain_frame(4).unwrap();
        let (a, b) = (1, 2);
        assert!(c4
            .closed_sublocale(b)
            .is_nowhere_dense_in(&c4.closed_sublocale(a))
            .unwrap());
    }

    #[test]
    fn regular_closed_parts_of_closed_sublocales() {
        let c3 = chain_frame(3).unwrap();
        let ca = c3.closed_sublocale(1);
        let parts = ca.regular_closed_of().unwrap();
        let non_void: Vec<_> = parts.iter().filter(|s| !s.is_void()).collect();
        assert_eq!(non_void, vec![&ca]);

        let c4 = chain_frame(4).unwrap();
        let ca = c4.closed_sublocale(1);
        let mut ours: Vec<_> = ca
            .regular_closed_of()
            .unwrap()
            .iter()
            .map(|s| s.members())
            .collect();
        let mut oracle: Vec<_> = ca
            .regular_closed_parts()
            .iter()
            .map(|s| s.members())
            .collect();
        ours.sort();
        oracle.sort();
        assert_eq!(ours, oracle);
        assert_eq!(ours, {
            let mut v = vec![c4.void_sublocale().members(), ca.members()];
            v.sort();
            v
        });
        assert_eq!(
            c4.booleanization().regular_closed_of(),
            Err(Error::NotClosed)
        );
    }

    #[test]
    fn nd_and_closed_nwd() {
        let b = boolean_frame(2).unwrap();
        assert!(b.nd().is_void());
        let c3 = chain_frame(3).unwrap();
        assert_eq!(c3.nd(), c3.closed_sublocale(1));
        assert_eq!(c3.nd(), c3.booleanization().supplement());
        assert_eq!(c3.nd_by_enumeration().unwrap(), c3.nd());
        let closed: Vec<_> = c3
            .enumerate_closed_nwd()
            .iter()
            .map(|s| s.member_names())
            .collect();
        assert_eq!(closed, vec![vec!["a", "1"], vec!["1"]]);
        let c4 = chain_frame(4).unwrap();
        assert_eq!(c4.nd(), c4.closed_sublocale(1));
        assert!(c4.nd().is_nowhere_dense());
        assert!(c3.is_strongly_submaximal().unwrap());
    }

    #[test]
    fn interior_agrees_with_join_of_opens() {
        for f in crate::generate::all_frames_up_to(6).unwrap() {
            for s in f.enumerate_sublocales().unwrap() {
                assert_eq!(s.interior(), f.whole().interior_in(&s));
            }
        }
    }

    #[test]
    fn sublocale_validation() {
        let f = chain_frame(3).unwrap();
        assert!(f.sublocale(set(&f, &["0", "a"])).is_err());
        assert!(f.sublocale(set(&f, &["0", "1"])).is_ok());
        // {a, 1} plus 0 is not closed under meets? it is; {0} alone lacks 1.
        assert!(matches!(
            f.sublocale(set(&f, &["0"])),
            Err(Error::NotASublocale(_))
        ));
        assert_eq!(
            f.generated_sublocale(set(&f, &["a"])),
            f.closed_sublocale(1)
        );
    }

    #[test]
    fn enumeration_cap() {
        let f = boolean_frame(3).unwrap();
        assert!(matches!(
            f.enumerate_sublocales_capped(4),
            Err(Error::SizeCapExceeded { .. })
        ));
    }
}
