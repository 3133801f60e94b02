//! Nowhere density variants, inaccessibility and remoteness of sublocales.
//!
//! Every predicate with a closed-form decision procedure also has a
//! `*_by_definition` twin that quantifies over enumerated sublocales.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::frame::FiniteFrame;
use crate::sublocale::Sublocale;

/// Why a sublocale fails to be maximal nowhere dense.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotMaximal<'f> {
    NotNowhereDense,
    /// A dense `y ≤ ⋀N` with `(⋀N) → y = y`.
    DenseWitness(usize),
    /// A nowhere dense `K` with `N` nowhere dense in `K`.
    Container(Sublocale<'f>),
}

fn contained<'f>(t: &Sublocale<'f>, s: &Sublocale<'f>) -> Result<()> {
    if !std::ptr::eq(t.frame(), s.frame()) {
        return Err(Error::MixedFrames);
    }
    if !t.members().is_subset(s.members()) {
        return Err(Error::NotContained);
    }
    Ok(())
}

/// Decides maximal nowhere density through the dense-element criterion and
/// returns the defeating `y` when there is one.
pub fn maximal_nwd_check<'f>(n: &Sublocale<'f>) -> std::result::Result<(), NotMaximal<'f>> {
    if !n.is_nowhere_dense() {
        return Err(NotMaximal::NotNowhereDense);
    }
    let f = n.frame();
    let m = n.bottom();
    match f
        .dense_elements()
        .iter()
        .find(|&y| f.leq(y, m) && f.heyting(m, y) == y)
    {
        Some(y) => Err(NotMaximal::DenseWitness(y)),
        None => Ok(()),
    }
}

pub fn is_maximal_nwd(n: &Sublocale<'_>) -> bool {
    maximal_nwd_check(n).is_ok()
}

/// Maximal nowhere density straight from the definition: no nowhere dense
/// `K` contains `N` as a nowhere dense sublocale.
pub fn maximal_nwd_check_by_definition<'f>(
    n: &Sublocale<'f>,
) -> Result<std::result::Result<(), NotMaximal<'f>>> {
    if !n.is_nowhere_dense() {
        return Ok(Err(NotMaximal::NotNowhereDense));
    }
    for k in n.frame().enumerate_sublocales()? {
        if k.is_nowhere_dense() && n.is_subset_of(&k) && n.nowhere_dense_in(&k) {
            return Ok(Err(NotMaximal::Container(k)));
        }
    }
    Ok(Ok(()))
}

pub fn is_maximal_nwd_by_definition(n: &Sublocale<'_>) -> Result<bool> {
    Ok(maximal_nwd_check_by_definition(n)?.is_ok())
}

/// Nowhere dense with no strictly larger nowhere dense sublocale.
pub fn is_strongly_maximal_nwd(n: &Sublocale<'_>) -> Result<bool> {
    if !n.is_nowhere_dense() {
        return Ok(false);
    }
    Ok(!n
        .frame()
        .enumerate_sublocales()?
        .iter()
        .any(|a| a.is_nowhere_dense() && n.is_subset_of(a) && a != n))
}

/// Closed, non-void, nowhere dense, and every non-void `𝔠(a → x)` is
/// maximal nowhere dense, where `N = 𝔠(x)`.
pub fn is_hmnd(n: &Sublocale<'_>) -> bool {
    if !n.is_closed() || n.is_void() || !n.is_nowhere_dense() {
        return false;
    }
    let f = n.frame();
    let x = n.bottom();
    f.elements()
        .map(|a| f.heyting(a, x))
        .filter(|&c| c != f.top())
        .all(|c| is_maximal_nwd(&f.closed_sublocale(c)))
}

/// The same property read off the regular-closed parts `cl(N ∩ 𝔬(a)) ∩ N`.
pub fn is_hmnd_by_definition(n: &Sublocale<'_>) -> Result<bool> {
    Ok(n.is_closed() && is_weakly_hmnd_by_definition(n)?)
}

/// Non-void nowhere dense with every non-void `N`-regular-closed part
/// maximal nowhere dense. Closedness is not required.
pub fn is_weakly_hmnd(n: &Sublocale<'_>) -> bool {
    !n.is_void()
        && n.is_nowhere_dense()
        && n.regular_closed_parts()
            .iter()
            .filter(|p| !p.is_void())
            .all(is_maximal_nwd)
}

pub fn is_weakly_hmnd_by_definition(n: &Sublocale<'_>) -> Result<bool> {
    if n.is_void() || !n.is_nowhere_dense() {
        return Ok(false);
    }
    for p in n.regular_closed_parts() {
        if !p.is_void() && !is_maximal_nwd_by_definition(&p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Elements of `S` that are dense in the locale `S`.
fn relative_dense(s: &Sublocale<'_>) -> ElementSet {
    s.dense_members()
}

/// `T` misses `𝔠(x)` for every element `x` of `L∖S` that is dense there.
pub fn is_inaccessible(t: &Sublocale<'_>, s: &Sublocale<'_>) -> Result<bool> {
    contained(t, s)?;
    let f = s.frame();
    let sup = s.supplement();
    Ok(relative_dense(&sup)
        .iter()
        .all(|x| t.misses(&f.closed_sublocale(x))))
}

/// `T ∩ closure(N) = O` for every `N` nowhere dense in `L∖S`.
pub fn is_inaccessible_by_definition(t: &Sublocale<'_>, s: &Sublocale<'_>) -> Result<bool> {
    contained(t, s)?;
    let sup = s.supplement();
    Ok(sup
        .sub_sublocales()
        .iter()
        .filter(|n| n.nowhere_dense_in(&sup))
        .all(|n| t.misses(&n.closure())))
}

/// `T ⊆ cl_S(S ∩ 𝔬(x))` for every element `x` of `L∖S` dense there.
pub fn is_almost_inaccessible(t: &Sublocale<'_>, s: &Sublocale<'_>) -> Result<bool> {
    contained(t, s)?;
    let sup = s.supplement();
    Ok(relative_dense(&sup)
        .iter()
        .all(|x| t.is_subset_of(&s.closure_in(&s.open_in(x)))))
}

/// `T ⊆ cl_S(S ∩ (L∖closure N))` for every `N` nowhere dense in `L∖S`.
pub fn is_almost_inaccessible_by_definition(t: &Sublocale<'_>, s: &Sublocale<'_>) -> Result<bool> {
    contained(t, s)?;
    let sup = s.supplement();
    Ok(sup
        .sub_sublocales()
        .iter()
        .filter(|n| n.nowhere_dense_in(&sup))
        .all(|n| {
            let outside = s.intersection(&n.closure().supplement());
            t.is_subset_of(&s.closure_in(&outside))
        }))
}

/// Misses every nowhere dense sublocale, decided through `T ∩ 𝔠(y) = O` for
/// dense `y`.
pub fn is_remote(t: &Sublocale<'_>) -> bool {
    let f = t.frame();
    f.dense_elements()
        .iter()
        .all(|y| t.misses(&f.closed_sublocale(y)))
}

pub fn is_remote_by_definition(t: &Sublocale<'_>) -> Result<bool> {
    Ok(t.frame()
        .enumerate_sublocales()?
        .iter()
        .filter(|n| n.is_nowhere_dense())
        .all(|n| t.misses(n)))
}

fn require_dense(s: &Sublocale<'_>) -> Result<()> {
    if s.is_dense() {
        Ok(())
    } else {
        Err(Error::NotDense)
    }
}

/// Remote from a dense `S`: misses `closure(N)` for every `S`-nowhere dense `N`.
pub fn is_remote_from(t: &Sublocale<'_>, s: &Sublocale<'_>) -> Result<bool> {
    require_dense(s)?;
    Ok(remote_from_unchecked(t, s))
}

pub(crate) fn remote_from_unchecked(t: &Sublocale<'_>, s: &Sublocale<'_>) -> bool {
    let f = s.frame();
    relative_dense(s)
        .iter()
        .all(|x| t.misses(&f.closed_sublocale(x)))
}

pub fn is_remote_from_by_definition(t: &Sublocale<'_>, s: &Sublocale<'_>) -> Result<bool> {
    require_dense(s)?;
    Ok(s.sub_sublocales()
        .iter()
        .filter(|n| n.nowhere_dense_in(s))
        .all(|n| t.misses(&n.closure())))
}

/// Remote from `S` and contained in `L∖S`.
pub fn is_star_remote_from(t: &Sublocale<'_>, s: &Sublocale<'_>) -> Result<bool> {
    Ok(is_remote_from(t, s)? && t.is_subset_of(&s.supplement()))
}

/// `Rs(L⋉S)`: the join of every sublocale remote from the dense `S`.
pub fn remote_part<'f>(s: &Sublocale<'f>) -> Result<Sublocale<'f>> {
    require_dense(s)?;
    remote_part_unchecked(s)
}

pub(crate) fn remote_part_unchecked<'f>(s: &Sublocale<'f>) -> Result<Sublocale<'f>> {
    let f = s.frame();
    let remote: Vec<_> = f
        .enumerate_sublocales()?
        .into_iter()
        .filter(|t| remote_from_unchecked(t, s))
        .collect();
    Ok(remote.iter().fold(f.void_sublocale(), |acc, t| acc.join(t)))
}

/// Flag map and witnesses for one sublocale.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub subject: Vec<String>,
    pub flags: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, String>,
}

impl Classification {
    pub fn flag(&self, name: &str) -> Option<bool> {
        self.flags.get(name).copied()
    }
}

fn names(s: &Sublocale<'_>) -> String {
    format!("{{{}}}", s.member_names().join(", "))
}

/// Evaluates every predicate on `n`. Relative notions are taken with `n`
/// as its own reference sublocale.
pub fn classify(n: &Sublocale<'_>) -> Result<Classification> {
    let f: &FiniteFrame = n.frame();
    let mut flags = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut set = |k: &str, v: bool| {
        flags.insert(k.to_string(), v);
    };
    set("void", n.is_void());
    set("dense", n.is_dense());
    set("closed", n.is_closed());
    set("open", n.is_open());
    set("nowhere_dense", n.is_nowhere_dense());
    match maximal_nwd_check(n) {
        Ok(()) => set("maximal_nwd", true),
        Err(why) => {
            set("maximal_nwd", false);
            let text = match why {
                NotMaximal::NotNowhereDense => "not nowhere dense".to_string(),
                NotMaximal::DenseWitness(y) => format!("dense y = {}", f.name(y)),
                NotMaximal::Container(k) => format!("contained nowhere densely in {}", names(&k)),
            };
            witnesses.insert("maximal_nwd".to_string(), text);
        }
    }
    if n.is_nowhere_dense() && !n.is_void() {
        if let Err(NotMaximal::Container(k)) = maximal_nwd_check_by_definition(n)? {
            witnesses.insert("maximal_nwd_container".to_string(), names(&k));
        }
    }
    set("strongly_maximal_nwd", is_strongly_maximal_nwd(n)?);
    set("hmnd", is_hmnd(n));
    set("weakly_hmnd", is_weakly_hmnd(n));
    set("remote", is_remote(n));
    set("self_inaccessible", is_inaccessible(n, n)?);
    set("almost_self_inaccessible", is_almost_inaccessible(n, n)?);
    let whole = f.whole();
    set("remote_from_whole", is_remote_from(n, &whole)?);
    if !is_remote(n) {
        if let Some(y) = f
            .dense_elements()
            .iter()
            .find(|&y| !n.misses(&f.closed_sublocale(y)))
        {
            witnesses.insert(
                "remote".to_string(),
                format!("meets closed 𝔠({})", f.name(y)),
            );
        }
    }
    Ok(Classification {
        subject: n.member_names(),
        flags,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{all_frames_up_to, boolean_frame, chain_frame};

    #[test]
    fn three_chain_maximal() {
        let f = chain_frame(3).unwrap();
        let ca = f.closed_sublocale(1);
        assert!(is_maximal_nwd(&ca));
        assert!(is_maximal_nwd_by_definition(&ca).unwrap());
        assert!(is_strongly_maximal_nwd(&ca).unwrap());
        assert!(is_hmnd(&ca));
        assert!(!is_maximal_nwd(&f.void_sublocale()));
        assert!(!is_remote(&ca));
    }

    #[test]
    fn four_chain_witness() {
        let f = chain_frame(4).unwrap();
        let (a, b) = (1, 2);
        assert!(is_maximal_nwd(&f.closed_sublocale(a)));
        assert_eq!(
            maximal_nwd_check(&f.closed_sublocale(b)),
            Err(NotMaximal::DenseWitness(a))
        );
        assert!(!is_maximal_nwd_by_definition(&f.closed_sublocale(b)).unwrap());
        assert!(!is_strongly_maximal_nwd(&f.closed_sublocale(b)).unwrap());
        assert!(is_hmnd(&f.closed_sublocale(a)));
        assert!(!is_hmnd(&f.closed_sublocale(b)));
    }

    #[test]
    fn boolean_frames_have_no_maximal() {
        for k in 0..=3 {
            let f = boolean_frame(k).unwrap();
            for s in f.enumerate_sublocales().unwrap() {
                assert!(!is_maximal_nwd(&s));
                assert!(!is_hmnd(&s));
                assert!(is_remote(&s));
            }
            assert!(is_strongly_maximal_nwd(&f.void_sublocale()).unwrap());
        }
    }

    #[test]
    fn inaccessibility_examples() {
        for f in all_frames_up_to(6).unwrap() {
            let whole = f.whole();
            assert!(is_inaccessible(&whole, &whole).unwrap());
            for s in f.enumerate_sublocales().unwrap() {
                if s.is_open() {
                    assert!(is_inaccessible(&s, &s).unwrap());
                }
            }
        }
        let f = chain_frame(4).unwrap();
        let ca = f.closed_sublocale(1);
        assert_eq!(ca.supplement().member_names(), vec!["0", "1"]);
        for t in ca.sub_sublocales() {
            assert!(is_inaccessible(&t, &ca).unwrap());
        }
        assert_eq!(is_inaccessible(&f.whole(), &ca), Err(Error::NotContained));
    }

    #[test]
    fn remoteness_examples() {
        for f in all_frames_up_to(6).unwrap() {
            assert!(is_remote(&f.booleanization()));
            let void = f.void_sublocale();
            let whole = f.whole();
            assert!(is_remote(&void));
            assert!(is_remote_from(&void, &whole).unwrap());
            assert!(is_star_remote_from(&void, &whole).unwrap());
        }
        let f = chain_frame(3).unwrap();
        assert_eq!(remote_part(&f.whole()).unwrap(), f.booleanization());
        let b = f.booleanization();
        assert_eq!(b.intersection(&remote_part(&b).unwrap()), b);
        assert_eq!(
            is_remote_from(&f.void_sublocale(), &f.closed_sublocale(1)),
            Err(Error::NotDense)
        );
        let two = boolean_frame(2).unwrap();
        assert!(remote_part(&two.whole()).unwrap().is_whole());
    }

    #[test]
    fn fast_paths_match_definitions() {
        for f in all_frames_up_to(6).unwrap() {
            let subs = f.enumerate_sublocales().unwrap();
            for n in &subs {
                assert_eq!(is_maximal_nwd(n), is_maximal_nwd_by_definition(n).unwrap());
                assert_eq!(is_remote(n), is_remote_by_definition(n).unwrap());
                assert_eq!(is_hmnd(n), is_hmnd_by_definition(n).unwrap());
                assert_eq!(is_weakly_hmnd(n), is_weakly_hmnd_by_definition(n).unwrap());
                for s in &subs {
                    if n.is_subset_of(s) {
                        assert_eq!(
                            is_inaccessible(n, s).unwrap(),
                            is_inaccessible_by_definition(n, s).unwrap()
                        );
                        assert_eq!(
                            is_almost_inaccessible(n, s).unwrap(),
                            is_almost_inaccessible_by_definition(n, s).unwrap()
                        );
                    }
                    if s.is_dense() {
                        assert_eq!(
                            is_remote_from(n, s).unwrap(),
                            is_remote_from_by_definition(n, s).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn classification_of_three_chain_closed() {
        let f = chain_frame(3).unwrap();
        let c = classify(&f.closed_sublocale(1)).unwrap();
        assert_eq!(c.flag("nowhere_dense"), Some(true));
        assert_eq!(c.flag("maximal_nwd"), Some(true));
        assert_eq!(c.flag("hmnd"), Some(true));
        let g = chain_frame(4).unwrap();
        let c = classify(&g.closed_sublocale(2)).unwrap();
        assert_eq!(c.witnesses["maximal_nwd"], "dense y = a");
    }
}
