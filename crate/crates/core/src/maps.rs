//! Localic maps between finite frames, presented by their frame
//! homomorphisms, and the image and preimage functors on sublocales.

use serde_json::{json, Value};

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::frame::FiniteFrame;
use crate::sublocale::Sublocale;

/// Default frame size cap for [`enumerate_localic_maps`].
pub const DEFAULT_MAP_CAP: usize = 8;

/// A localic map `f: L → M` with its frame homomorphism `f*: M → L`.
#[derive(Clone, Debug)]
pub struct LocalicMap<'a> {
    source: &'a FiniteFrame,
    target: &'a FiniteFrame,
    f: Vec<usize>,
    f_star: Vec<usize>,
}

/// Checks that `h: M → L` preserves finite meets, binary joins, 0 and 1.
pub fn validate_frame_hom(l: &FiniteFrame, m: &FiniteFrame, h: &[usize]) -> Result<()> {
    if h.len() != m.len() {
        return Err(Error::NotAFrameHom(format!(
            "table has {} entries for a {}-element frame",
            h.len(),
            m.len()
        )));
    }
    if let Some(&v) = h.iter().find(|&&v| v >= l.len()) {
        return Err(Error::NotAFrameHom(format!("value {v} is out of range")));
    }
    if h[m.bottom()] != l.bottom() {
        return Err(Error::NotAFrameHom("bottom is not preserved".into()));
    }
    if h[m.top()] != l.top() {
        return Err(Error::NotAFrameHom("top is not preserved".into()));
    }
    for a in m.elements() {
        for b in m.elements() {
            if h[m.meet(a, b)] != l.meet(h[a], h[b]) {
                return Err(Error::NotAFrameHom(format!(
                    "meet of {} and {} is not preserved",
                    m.name(a),
                    m.name(b)
                )));
            }
            if h[m.join(a, b)] != l.join(h[a], h[b]) {
                return Err(Error::NotAFrameHom(format!(
                    "join of {} and {} is not preserved",
                    m.name(a),
                    m.name(b)
                )));
            }
        }
    }
    Ok(())
}

impl<'a> LocalicMap<'a> {
    /// The localic map `L → M` right adjoint to the frame homomorphism
    /// `h: M → L`, with `f(a) = ⋁{b : h(b) ≤ a}`.
    pub fn from_frame_hom(
        source: &'a FiniteFrame,
        target: &'a FiniteFrame,
        h: Vec<usize>,
    ) -> Result<Self> {
        validate_frame_hom(source, target, &h)?;
        let f: Vec<usize> = source
            .elements()
            .map(|a| {
                let below: ElementSet =
                    target.elements().filter(|&b| source.leq(h[b], a)).collect();
                target.join_all(below)
            })
            .collect();
        for a in source.elements() {
            for b in target.elements() {
                if source.leq(h[b], a) != target.leq(b, f[a]) {
                    return Err(Error::NotAFrameHom(format!(
                        "no right adjoint: adjunction fails at ({}, {})",
                        source.name(a),
                        target.name(b)
                    )));
                }
            }
        }
        Ok(LocalicMap {
            source,
            target,
            f,
            f_star: h,
        })
    }

    pub fn identity(frame: &'a FiniteFrame) -> Self {
        Self::from_frame_hom(frame, frame, frame.elements().collect())
            .expect("identity is a frame homomorphism")
    }

    pub fn source(&self) -> &'a FiniteFrame {
        self.source
    }

    pub fn target(&self) -> &'a FiniteFrame {
        self.target
    }

    /// `f(a)`.
    pub fn apply(&self, a: usize) -> usize {
        self.f[a]
    }

    /// `f*(b)`.
    pub fn star(&self, b: usize) -> usize {
        self.f_star[b]
    }

    pub fn table(&self) -> &[usize] {
        &self.f
    }

    pub fn star_table(&self) -> &[usize] {
        &self.f_star
    }

    /// `f[A]`, the set-theoretic image.
    pub fn image(&self, a: &Sublocale<'a>) -> Result<Sublocale<'a>> {
        if !std::ptr::eq(a.frame(), self.source) {
            return Err(Error::MixedFrames);
        }
        let members = a.members().iter().map(|x| self.f[x]).collect();
        Ok(self.target.sublocale_unchecked(members))
    }

    /// The set preimage `f⁻¹(T)`.
    pub fn raw_preimage(&self, t: &Sublocale<'a>) -> ElementSet {
        self.source
            .elements()
            .filter(|&a| t.contains(self.f[a]))
            .collect()
    }

    /// `f₋₁[T]`, the largest sublocale inside `f⁻¹(T)`, by deleting elements
    /// `s` for which some `x → s` has left the candidate set.
    pub fn preimage(&self, t: &Sublocale<'a>) -> Result<Sublocale<'a>> {
        if !std::ptr::eq(t.frame(), self.target) {
            return Err(Error::MixedFrames);
        }
        let l = self.source;
        let mut set = self.raw_preimage(t);
        loop {
            let doomed: ElementSet = set
                .iter()
                .filter(|&s| l.elements().any(|x| !set.contains(l.heyting(x, s))))
                .collect();
            if doomed.is_empty() {
                break;
            }
            set = set.difference(doomed);
        }
        // only fails when the source's tables are inconsistent
        if l.meet_closure(set) != set {
            return Err(Error::NotASublocale("pull-back is not meet-closed".into()));
        }
        Ok(l.sublocale_unchecked(set))
    }

    /// `f₋₁[T]` as the join of every enumerated sublocale inside `f⁻¹(T)`.
    pub fn preimage_by_enumeration(&self, t: &Sublocale<'a>) -> Result<Sublocale<'a>> {
        if !std::ptr::eq(t.frame(), self.target) {
            return Err(Error::MixedFrames);
        }
        let raw = self.raw_preimage(t);
        let inside: Vec<_> = self
            .source
            .enumerate_sublocales()?
            .into_iter()
            .filter(|s| s.members().is_subset(raw))
            .collect();
        Ok(inside
            .iter()
            .fold(self.source.void_sublocale(), |acc, s| acc.join(s)))
    }

    /// Every open sublocale has an open image.
    pub fn is_open_map(&self) -> bool {
        self.source.elements().all(|a| {
            let o = self.source.open_sublocale(a);
            self.image(&o).map(|i| i.is_open()).unwrap_or(false)
        })
    }

    /// `h_!(a) = ⋀{b : a ≤ h(b)}` for `h = f*`.
    pub fn lower_adjoint(&self, a: usize) -> usize {
        let above: ElementSet = self
            .target
            .elements()
            .filter(|&b| self.source.leq(a, self.f_star[b]))
            .collect();
        self.target.meet_all(above)
    }

    /// Openness through the Frobenius identity `h_!(h(m) ∧ l) = m ∧ h_!(l)`,
    /// after confirming that `h_!` is left adjoint to `h`.
    pub fn is_open_map_frobenius(&self) -> bool {
        let (l, m) = (self.source, self.target);
        let adjoint = l.elements().all(|a| {
            m.elements()
                .all(|b| m.leq(self.lower_adjoint(a), b) == l.leq(a, self.f_star[b]))
        });
        adjoint
            && m.elements().all(|b| {
                l.elements().all(|a| {
                    self.lower_adjoint(l.meet(self.f_star[b], a))
                        == m.meet(b, self.lower_adjoint(a))
                })
            })
    }

    /// `f` sends dense elements of `L` to dense elements of `M`.
    pub fn sends_dense_to_dense(&self) -> bool {
        self.source
            .dense_elements()
            .iter()
            .all(|a| self.target.is_dense(self.f[a]))
    }

    /// `f*` sends dense elements of `M` to dense elements of `L`.
    pub fn star_sends_dense_to_dense(&self) -> bool {
        self.target
            .dense_elements()
            .iter()
            .all(|b| self.source.is_dense(self.f_star[b]))
    }

    pub fn is_injective(&self) -> bool {
        let img: ElementSet = self.f.iter().copied().collect();
        img.len() == self.f.len()
    }

    /// Element-image arrays by name.
    pub fn describe(&self) -> Value {
        json!({
            "f": self.f.iter().map(|&b| self.target.name(b)).collect::<Vec<_>>(),
            "fStar": self.f_star.iter().map(|&a| self.source.name(a)).collect::<Vec<_>>(),
        })
    }
}

/// Every frame homomorphism `M → L`, by backtracking with meet and join
/// pruning.
pub fn frame_homs(m: &FiniteFrame, l: &FiniteFrame) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut out = Vec::new();
    let mut h = vec![usize::MAX; n];
    fn go(
        i: usize,
        m: &FiniteFrame,
        l: &FiniteFrame,
        h: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == m.len() {
            if validate_frame_hom(l, m, h).is_ok() {
                out.push(h.clone());
            }
            return;
        }
        let candidates: Vec<usize> = if i == m.bottom() {
            vec![l.bottom()]
        } else if i == m.top() {
            vec![l.top()]
        } else {
            l.elements().collect()
        };
        'next: for v in candidates {
            h[i] = v;
            for j in 0..=i {
                let hj = h[j];
                if hj == usize::MAX {
                    continue;
                }
                if m.leq(j, i) && !l.leq(hj, v) || m.leq(i, j) && !l.leq(v, hj) {
                    continue 'next;
                }
                let mj = h[m.meet(i, j)];
                if mj != usize::MAX && mj != l.meet(v, hj) {
                    continue 'next;
                }
                let jj = h[m.join(i, j)];
                if jj != usize::MAX && jj != l.join(v, hj) {
                    continue 'next;
                }
            }
            go(i + 1, m, l, h, out);
        }
        h[i] = usize::MAX;
    }
    go(0, m, l, &mut h, &mut out);
    out
}

/// Every localic map `L → M`, with the default cap on frame sizes.
pub fn enumerate_localic_maps<'a>(
    l: &'a FiniteFrame,
    m: &'a FiniteFrame,
) -> Result<Vec<LocalicMap<'a>>> {
    enumerate_localic_maps_capped(l, m, DEFAULT_MAP_CAP)
}

pub fn enumerate_localic_maps_capped<'a>(
    l: &'a FiniteFrame,
    m: &'a FiniteFrame,
    cap: usize,
) -> Result<Vec<LocalicMap<'a>>> {
    let size = l.len().max(m.len());
    if size > cap {
        return Err(Error::SizeCapExceeded {
            what: "frame for map enumeration",
            size,
            cap,
        });
    }
    frame_homs(m, l)
        .into_iter()
        .map(|h| LocalicMap::from_frame_hom(l, m, h))
        .collect()
}
