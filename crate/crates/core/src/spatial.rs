//! Finite T0 spaces, their open-set frames, and induced sublocales.
//!
//! Subsets of a space are `u32` point masks. Finite T0 spaces are T_D, so
//! the subset-to-sublocale map `A ↦ Ã` is injective and order-reflecting.

use itertools::Itertools;

use crate::elements::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::frame::FiniteFrame;
use crate::generate::{posets_of_size, PosetSeed};
use crate::sublocale::Sublocale;

/// Largest number of points a space may have.
pub const MAX_POINTS: usize = 16;

/// A finite topological space with at least the T0 separation property.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    points: usize,
    opens: Vec<u32>,
}

fn mask_string(mask: u32) -> String {
    let pts = (0..32).filter(|i| mask >> i & 1 == 1).join(",");
    format!("{{{pts}}}")
}

impl FiniteSpace {
    /// Builds a space from open sets given as point lists.
    pub fn new(points: usize, opens: &[Vec<usize>]) -> Result<Self> {
        if points > MAX_POINTS {
            return Err(Error::TooLarge {
                what: "space",
                size: points,
                max: MAX_POINTS,
            });
        }
        let mut masks = Vec::with_capacity(opens.len());
        for open in opens {
            let mut m = 0u32;
            for &p in open {
                if p >= points {
                    return Err(Error::NotATopology(format!(
                        "open set mentions point {p} of a {points}-point space"
                    )));
                }
                m |= 1 << p;
            }
            masks.push(m);
        }
        Self::from_masks(points, masks)
    }

    /// Builds a space from open sets given as bit masks.
    pub fn from_masks(points: usize, mut opens: Vec<u32>) -> Result<Self> {
        if points > MAX_POINTS {
            return Err(Error::TooLarge {
                what: "space",
                size: points,
                max: MAX_POINTS,
            });
        }
        let full = full_mask(points);
        opens.sort_by_key(|&m| (m.count_ones(), m));
        opens.dedup();
        if opens.iter().any(|&m| m & !full != 0) {
            return Err(Error::NotATopology("open set outside the point set".into()));
        }
        if !opens.contains(&0) {
            return Err(Error::NotATopology("empty set is not open".into()));
        }
        if !opens.contains(&full) {
            return Err(Error::NotATopology("whole space is not open".into()));
        }
        for (&u, &v) in opens.iter().tuple_combinations() {
            if opens
                .binary_search_by_key(&((u | v).count_ones(), u | v), |&m| (m.count_ones(), m))
                .is_err()
            {
                return Err(Error::NotATopology(format!(
                    "union of {} and {} is not open",
                    mask_string(u),
                    mask_string(v)
                )));
            }
            if opens
                .binary_search_by_key(&((u & v).count_ones(), u & v), |&m| (m.count_ones(), m))
                .is_err()
            {
                return Err(Error::NotATopology(format!(
                    "intersection of {} and {} is not open",
                    mask_string(u),
                    mask_string(v)
                )));
            }
        }
        if opens.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                what: "topology",
                size: opens.len(),
                max: MAX_ELEMENTS,
            });
        }
        let space = FiniteSpace { points, opens };
        for (x, y) in (0..points).tuple_combinations() {
            if space.opens.iter().all(|&u| (u >> x & 1) == (u >> y & 1)) {
                return Err(Error::NotT0(x, y));
            }
        }
        Ok(space)
    }

    /// The Alexandrov space whose open sets are the down-sets of a poset.
    pub fn from_poset(seed: &PosetSeed) -> Result<Self> {
        let below = seed.strict_below()?;
        let n = seed.size;
        let opens = (0u32..1 << n)
            .filter(|&m| (0..n).all(|x| m >> x & 1 == 0 || below[x] as u32 & !m == 0))
            .collect();
        Self::from_masks(n, opens)
    }

    pub fn points(&self) -> usize {
        self.points
    }

    /// Open sets in order of size, then mask value.
    pub fn opens(&self) -> &[u32] {
        &self.opens
    }

    pub fn full(&self) -> u32 {
        full_mask(self.points)
    }

    pub fn is_open(&self, a: u32) -> bool {
        self.open_index(a).is_some()
    }

    pub fn open_index(&self, a: u32) -> Option<usize> {
        self.opens
            .binary_search_by_key(&(a.count_ones(), a), |&m| (m.count_ones(), m))
            .ok()
    }

    pub fn is_closed(&self, a: u32) -> bool {
        self.is_open(self.full() & !a)
    }

    pub fn interior(&self, a: u32) -> u32 {
        self.opens
            .iter()
            .filter(|&&u| u & !a == 0)
            .fold(0, |acc, &u| acc | u)
    }

    pub fn closure(&self, a: u32) -> u32 {
        self.full() & !self.interior(self.full() & !a)
    }

    /// Closure of `a` in the subspace `k`.
    pub fn closure_in(&self, a: u32, k: u32) -> u32 {
        self.closure(a) & k
    }

    /// Interior of `a` in the subspace `k`.
    pub fn interior_in(&self, a: u32, k: u32) -> u32 {
        k & !self.closure_in(k & !a, k)
    }

    /// `a ⊆ k` and the `k`-interior of the `k`-closure of `a` is empty.
    pub fn is_nowhere_dense_in(&self, a: u32, k: u32) -> bool {
        a & !k == 0 && self.interior_in(self.closure_in(a, k), k) == 0
    }

    pub fn is_nowhere_dense(&self, a: u32) -> bool {
        self.is_nowhere_dense_in(a, self.full())
    }

    pub fn subsets(&self) -> impl Iterator<Item = u32> {
        0..=self.full()
    }

    /// Nowhere dense, and not nowhere dense in any nowhere dense subset.
    pub fn is_maximal_nwd(&self, a: u32) -> bool {
        self.is_nowhere_dense(a)
            && !self
                .subsets()
                .any(|k| self.is_nowhere_dense(k) && self.is_nowhere_dense_in(a, k))
    }

    /// `F`-regular-closed subsets `cl_F(U ∩ F)` for open `U`, deduplicated.
    pub fn regular_closed_in(&self, f: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .opens
            .iter()
            .map(|&u| self.closure_in(u & f, f))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Non-empty closed nowhere dense `F` whose non-empty `F`-regular-closed
    /// subsets are all maximal nowhere dense.
    pub fn is_hmnd(&self, f: u32) -> bool {
        f != 0
            && self.is_closed(f)
            && self.is_nowhere_dense(f)
            && self
                .regular_closed_in(f)
                .into_iter()
                .filter(|&a| a != 0)
                .all(|a| self.is_maximal_nwd(a))
    }

    pub fn subset_string(&self, a: u32) -> String {
        mask_string(a)
    }

    /// The locale of open sets ordered by inclusion.
    pub fn open_set_frame(&self) -> Result<FiniteFrame> {
        let names = self.opens.iter().map(|&u| mask_string(u)).collect();
        let opens = &self.opens;
        FiniteFrame::from_order_fn(names, |i, j| opens[i] & !opens[j] == 0)
    }

    pub fn locale(&self) -> Result<SpaceLocale> {
        Ok(SpaceLocale {
            frame: self.open_set_frame()?,
            space: self.clone(),
        })
    }
}

fn full_mask(points: usize) -> u32 {
    if points >= 32 {
        u32::MAX
    } else {
        (1u32 << points) - 1
    }
}

/// A space together with its open-set frame.
#[derive(Clone, Debug)]
pub struct SpaceLocale {
    pub space: FiniteSpace,
    pub frame: FiniteFrame,
}

impl SpaceLocale {
    /// Element index of an open set.
    pub fn element(&self, open: u32) -> usize {
        self.space
            .open_index(open)
            .expect("mask is not an open set")
    }

    /// `Ã = {int((X∖A) ∪ G) : G open}`.
    pub fn induced(&self, a: u32) -> Sublocale<'_> {
        let sp = &self.space;
        let members: ElementSet = sp
            .opens()
            .iter()
            .map(|&g| self.element(sp.interior((sp.full() & !a) | g)))
            .collect();
        self.frame.sublocale_unchecked(members)
    }
}

/// All T0 spaces with `points` points up to homeomorphism, one per poset.
pub fn t0_spaces_of_size(points: usize) -> Result<Vec<FiniteSpace>> {
    posets_of_size(points)
        .iter()
        .map(FiniteSpace::from_poset)
        .collect()
}

/// All T0 spaces with at most `max_points` points up to homeomorphism.
pub fn t0_spaces_up_to(max_points: usize, cap: usize) -> Result<Vec<FiniteSpace>> {
    if max_points > cap {
        return Err(Error::SizeCapExceeded {
            what: "space",
            size: max_points,
            cap,
        });
    }
    let mut out = Vec::new();
    for n in 0..=max_points {
        out.extend(t0_spaces_of_size(n)?);
    }
    Ok(out)
}

/// Every topology on `points` points by scanning families of subsets,
/// reduced up to homeomorphism. Feasible for at most four points.
pub fn topologies_by_scan(points: usize, t0_only: bool) -> Vec<FiniteSpace> {
    assert!(points <= 4, "family scan is limited to four points");
    let full = full_mask(points);
    let inner: Vec<u32> = (1..full).collect();
    let perms: Vec<Vec<usize>> = (0..points).permutations(points).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for fam in 0u64..1 << inner.len() {
        let mut opens = vec![0, full];
        opens.extend(
            inner
                .iter()
                .enumerate()
                .filter(|(i, _)| fam >> i & 1 == 1)
                .map(|(_, &m)| m),
        );
        if points == 0 {
            opens = vec![0];
        }
        let closed = opens.iter().all(|&u| {
            opens
                .iter()
                .all(|&v| opens.contains(&(u | v)) && opens.contains(&(u & v)))
        });
        if !closed {
            continue;
        }
        let t0 = (0..points)
            .tuple_combinations()
            .all(|(x, y)| opens.iter().any(|&u| (u >> x & 1) != (u >> y & 1)));
        if t0_only && !t0 {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut v: Vec<u32> = opens
                    .iter()
                    .map(|&u| {
                        (0..points)
                            .filter(|&i| u >> i & 1 == 1)
                            .map(|i| 1u32 << p[i])
                            .sum()
                    })
                    .collect();
                v.sort_unstable();
                v
            })
            .min()
            .unwrap_or_default();
        if seen.insert(canon) {
            let mut sorted = opens.clone();
            sorted.sort_by_key(|&m| (m.count_ones(), m));
            sorted.dedup();
            out.push(FiniteSpace {
                points,
                opens: sorted,
            });
        }
    }
    out
}
