//! Checks over localic maps between small frames.

use serde_json::{json, Value};

use super::{frame_json, sub_json, Corpus, Domain, Recorder, TheoremCheck};
use crate::classify::{
    is_almost_inaccessible_by_definition, is_hmnd_by_definition, is_inaccessible_by_definition,
    is_maximal_nwd_by_definition, is_weakly_hmnd_by_definition,
};
use crate::error::Result;
use crate::maps::LocalicMap;
use crate::sublocale::Sublocale;

fn w(f: &LocalicMap<'_>, parts: &[(&str, &Sublocale<'_>)]) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("source".into(), frame_json(f.source()));
    map.insert("target".into(), frame_json(f.target()));
    map.insert("map".into(), f.describe());
    for (k, s) in parts {
        map.insert(k.to_string(), sub_json(s));
    }
    Value::Object(map)
}

/// Per-map data: both sublocale lattices and m.n.d flags.
struct MapCtx<'a> {
    f: LocalicMap<'a>,
    src: Vec<Sublocale<'a>>,
    tgt: Vec<Sublocale<'a>>,
    src_mnd: Vec<bool>,
    tgt_mnd: Vec<bool>,
}

impl<'a> MapCtx<'a> {
    fn mnd(&self, s: &Sublocale<'a>) -> Result<bool> {
        let (subs, flags) = if std::ptr::eq(s.frame(), self.f.source()) {
            (&self.src, &self.src_mnd)
        } else {
            (&self.tgt, &self.tgt_mnd)
        };
        match subs.iter().position(|t| t == s) {
            Some(i) => Ok(flags[i]),
            None => is_maximal_nwd_by_definition(s),
        }
    }
}

fn each_map(c: &Corpus, mut body: impl FnMut(&MapCtx<'_>) -> Result<()>) -> Result<()> {
    // m.n.d flags are cached per frame since every frame is the source or
    // target of many maps
    let mut cache: Vec<Option<Vec<bool>>> = vec![None; c.map_frames().len()];
    let mut flags = |frame: &crate::FiniteFrame, subs: &[Sublocale<'_>]| -> Result<Vec<bool>> {
        let i = c
            .map_frames()
            .iter()
            .position(|g| std::ptr::eq(g, frame))
            .expect("map frames come from the corpus");
        if cache[i].is_none() {
            cache[i] = Some(
                subs.iter()
                    .map(is_maximal_nwd_by_definition)
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok(cache[i].clone().unwrap_or_default())
    };
    for f in c.maps() {
        let f = f?;
        let src = f.source().enumerate_sublocales()?;
        let tgt = f.target().enumerate_sublocales()?;
        let src_mnd = flags(f.source(), &src)?;
        let tgt_mnd = flags(f.target(), &tgt)?;
        body(&MapCtx {
            f,
            src,
            tgt,
            src_mnd,
            tgt_mnd,
        })?;
    }
    Ok(())
}

fn c(
    id: &'static str,
    anchor: &'static str,
    vacuity: Option<&'static str>,
    eval: super::Eval,
) -> TheoremCheck {
    TheoremCheck {
        id,
        anchor,
        domain: Domain::Maps,
        vacuity,
        eval,
    }
}

pub(super) fn checks() -> Vec<TheoremCheck> {
    vec![
        c("map-preimage-identities", "preimages of 𝔠(x) and 𝔬(x) are 𝔠(f*(x)) and 𝔬(f*(x)); images and preimages are sublocales", None, preimage_identities),
        c("map-image-closure", "the image of a closure lies in the closure of the image", None, image_closure),
        c("map-open-preimage-closure", "open maps commute preimage with closure", None, open_preimage_closure),
        c("oracle-preimage", "preimage fixpoint agrees with the join of sublocales inside the set preimage", None, oracle_preimage),
        c("oracle-open-map", "open images of open sublocales iff the Frobenius identity", None, oracle_open_map),
        c("prop-mapmnd", "if f and f* send dense elements to dense elements, preimages of m.n.d sublocales are m.n.d", None, prop_mapmnd),
        c("prop-smndmap", "open dense-preserving maps send m.n.d sublocales to m.n.d sublocales", None, prop_smndmap),
        c("cor-preserve-reflect", "open dense-preserving maps preserve m.n.d sublocales and pull them back", None, cor_preserve_reflect),
        c("prop-hmndpresereflec", "open dense-preserving maps preserve weak h.m.n.d; injective ones pull back (weak) h.m.n.d", None, prop_hmndpresereflec),
        c("obs-obsopen", "the map from a non-Boolean L to 2 is open but not dense-preserving", None, obs_obsopen),
        c("prop-inaccmap", "open injective maps carry (almost) S-inaccessible sublocales to (almost) f[S]-inaccessible ones for open S", None, prop_inaccmap),
        c("prop-inacclocalicmap", "with f, f* dense-preserving, preimages of (almost) T-inaccessible sublocales are (almost) inaccessible for closed nowhere dense T", None, prop_inacclocalicmap),
    ]
}

fn preimage_identities(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        let (f, l, t) = (&m.f, m.f.source(), m.f.target());
        for x in t.elements() {
            let ok = f.preimage(&t.closed_sublocale(x))? == l.closed_sublocale(f.star(x))
                && f.preimage(&t.open_sublocale(x))? == l.open_sublocale(f.star(x));
            rec.record(true, ok, || {
                let mut v = w(f, &[]);
                v["x"] = json!(t.name(x));
                v
            });
        }
        for s in &m.src {
            let img = f.image(s)?;
            rec.record(true, t.is_sublocale_set(img.members()), || {
                w(f, &[("A", s)])
            });
        }
        for s in &m.tgt {
            let pre = f.preimage(s)?;
            rec.record(true, l.is_sublocale_set(pre.members()), || {
                w(f, &[("T", s)])
            });
        }
        Ok(())
    })
}

fn image_closure(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        for a in &m.src {
            let lhs = m.f.image(&a.closure())?;
            let rhs = m.f.image(a)?.closure();
            rec.record(true, lhs.is_subset_of(&rhs), || w(&m.f, &[("A", a)]));
        }
        Ok(())
    })
}

fn open_preimage_closure(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        let open = m.f.is_open_map();
        for a in &m.tgt {
            let lhs = m.f.preimage(&a.closure())?;
            let rhs = m.f.preimage(a)?.closure();
            rec.record(open, lhs == rhs, || w(&m.f, &[("A", a)]));
        }
        Ok(())
    })
}

fn oracle_preimage(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        for t in &m.tgt {
            let fast = m.f.preimage(t)?;
            let slow = m.f.preimage_by_enumeration(t)?;
            rec.record(true, fast == slow, || {
                w(
                    &m.f,
                    &[("T", t), ("fixpoint", &fast), ("enumeration", &slow)],
                )
            });
        }
        Ok(())
    })
}

fn oracle_open_map(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        rec.agree(
            true,
            &[
                ("images", m.f.is_open_map()),
                ("frobenius", m.f.is_open_map_frobenius()),
            ],
            || w(&m.f, &[]),
        );
        Ok(())
    })
}

fn prop_mapmnd(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        let hyp = m.f.sends_dense_to_dense() && m.f.star_sends_dense_to_dense();
        for (i, n) in m.tgt.iter().enumerate() {
            let pre = m.f.preimage(n)?;
            rec.record(hyp && m.tgt_mnd[i], m.mnd(&pre)?, || {
                w(&m.f, &[("N", n), ("preimage", &pre)])
            });
        }
        Ok(())
    })
}

fn prop_smndmap(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        let hyp = m.f.is_open_map() && m.f.sends_dense_to_dense();
        for (i, n) in m.src.iter().enumerate() {
            let img = m.f.image(n)?;
            rec.record(hyp && m.src_mnd[i], m.mnd(&img)?, || {
                w(&m.f, &[("N", n), ("image", &img)])
            });
        }
        Ok(())
    })
}

fn cor_preserve_reflect(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        let hyp = m.f.is_open_map() && m.f.sends_dense_to_dense();
        for (i, n) in m.src.iter().enumerate() {
            let img = m.f.image(n)?;
            rec.record(hyp && m.src_mnd[i], m.mnd(&img)?, || {
                let mut v = w(&m.f, &[("N", n), ("image", &img)]);
                v["direction"] = json!("preserve");
                v
            });
        }
        for (i, n) in m.tgt.iter().enumerate() {
            let pre = m.f.preimage(n)?;
            rec.record(hyp && m.tgt_mnd[i], m.mnd(&pre)?, || {
                let mut v = w(&m.f, &[("N", n), ("preimage", &pre)]);
                v["direction"] = json!("reflect");
                v
            });
        }
        Ok(())
    })
}

fn prop_hmndpresereflec(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        let base = m.f.is_open_map() && m.f.sends_dense_to_dense();
        for s in &m.src {
            let img = m.f.image(s)?;
            rec.record(
                base && is_weakly_hmnd_by_definition(s)?,
                is_weakly_hmnd_by_definition(&img)?,
                || {
                    let mut v = w(&m.f, &[("F", s), ("image", &img)]);
                    v["part"] = json!(1);
                    v
                },
            );
        }
        let inj = base && m.f.is_injective();
        for k in &m.tgt {
            let pre = m.f.preimage(k)?;
            let part2 = |v: Value, what: &str| {
                let mut v = v;
                v["part"] = json!(2);
                v["property"] = json!(what);
                v
            };
            rec.record(
                inj && is_weakly_hmnd_by_definition(k)?,
                is_weakly_hmnd_by_definition(&pre)?,
                || part2(w(&m.f, &[("K", k), ("preimage", &pre)]), "weakly h.m.n.d"),
            );
            rec.record(
                inj && is_hmnd_by_definition(k)?,
                is_hmnd_by_definition(&pre)?,
                || part2(w(&m.f, &[("K", k), ("preimage", &pre)]), "h.m.n.d"),
            );
        }
        Ok(())
    })
}

fn obs_obsopen(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        if m.f.target().len() != 2 {
            return Ok(());
        }
        let hyp = !m.f.source().is_boolean();
        rec.record(
            hyp,
            m.f.is_open_map() && !m.f.sends_dense_to_dense(),
            || w(&m.f, &[]),
        );
        Ok(())
    })
}

fn prop_inaccmap(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        let hyp = m.f.is_open_map() && m.f.is_injective();
        for s in m.src.iter().filter(|s| s.is_open()) {
            let fs = m.f.image(s)?;
            for t in s.sub_sublocales() {
                let ft = m.f.image(&t)?;
                let witness = || w(&m.f, &[("S", s), ("T", &t)]);
                rec.record(
                    hyp && is_inaccessible_by_definition(&t, s)?,
                    is_inaccessible_by_definition(&ft, &fs)?,
                    witness,
                );
                rec.record(
                    hyp && is_almost_inaccessible_by_definition(&t, s)?,
                    is_almost_inaccessible_by_definition(&ft, &fs)?,
                    witness,
                );
            }
        }
        Ok(())
    })
}

fn prop_inacclocalicmap(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_map(c, |m| {
        let dense = m.f.sends_dense_to_dense() && m.f.star_sends_dense_to_dense();
        let open = m.f.is_open_map();
        let tgt = m.f.target();
        for y in tgt.dense_elements().iter() {
            let t = tgt.closed_sublocale(y);
            let pt = m.f.preimage(&t)?;
            for a in t.sub_sublocales() {
                let pa = m.f.preimage(&a)?;
                let witness = |part: u32| {
                    let mut v = w(
                        &m.f,
                        &[("T", &t), ("A", &a), ("preimageT", &pt), ("preimageA", &pa)],
                    );
                    v["part"] = json!(part);
                    v
                };
                rec.record(
                    dense && is_inaccessible_by_definition(&a, &t)?,
                    is_inaccessible_by_definition(&pa, &pt)?,
                    || witness(1),
                );
                rec.record(
                    dense && open && is_almost_inaccessible_by_definition(&a, &t)?,
                    is_almost_inaccessible_by_definition(&pa, &pt)?,
                    || witness(2),
                );
            }
        }
        Ok(())
    })
}
