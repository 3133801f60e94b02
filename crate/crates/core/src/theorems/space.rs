//! Checks relating subsets of finite T0 spaces to the sublocales they induce.

use serde_json::{json, Value};

use super::{frame_json, sub_json, Corpus, Domain, Recorder, TheoremCheck};
use crate::classify::{is_hmnd_by_definition, is_maximal_nwd_by_definition};
use crate::error::Result;
use crate::formats::SpaceDescription;
use crate::spatial::SpaceLocale;
use crate::sublocale::Sublocale;

fn w(loc: &SpaceLocale, sets: &[(&str, u32)]) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("space".into(), json!(SpaceDescription::of(&loc.space)));
    for (k, a) in sets {
        map.insert(k.to_string(), json!(loc.space.subset_string(*a)));
    }
    Value::Object(map)
}

fn nwd_in(a: &Sublocale<'_>, b: &Sublocale<'_>) -> bool {
    a.is_subset_of(b) && a.nowhere_dense_in(b)
}

fn each_space(c: &Corpus, mut body: impl FnMut(&SpaceLocale, &[u32]) -> Result<()>) -> Result<()> {
    for loc in c.spaces() {
        let subsets: Vec<u32> = loc.space.subsets().collect();
        body(loc, &subsets)?;
    }
    Ok(())
}

fn c(id: &'static str, anchor: &'static str, eval: super::Eval) -> TheoremCheck {
    TheoremCheck {
        id,
        anchor,
        domain: Domain::Spaces,
        vacuity: None,
        eval,
    }
}

pub(super) fn checks() -> Vec<TheoremCheck> {
    vec![
        c(
            "spatial-induced-basics",
            "induced sublocales respect order, opens, closeds, closure and nowhere density",
            induced_basics,
        ),
        c(
            "spatial-induced-join",
            "the sublocale induced by A ∪ B is the join of those induced by A and B",
            induced_join,
        ),
        c(
            "spatial-supplement",
            "the sublocale induced by X∖A is the supplement of the one induced by A",
            induced_supplement,
        ),
        c(
            "lemma-binaryintersection",
            "A ∩ B induces the meet of the induced sublocales when B's is complemented",
            binary_intersection,
        ),
        c(
            "lemma-N1",
            "N ∩ A = ∅ iff the induced sublocales are disjoint",
            lemma_n1,
        ),
        c(
            "lemma-lembinaryintersection",
            "A ⊆ F is F-nowhere dense iff its sublocale is nowhere dense in F's",
            lem_binary_intersection,
        ),
        c(
            "prop-mnd",
            "a subset is m.n.d iff its induced sublocale is m.n.d",
            prop_mnd,
        ),
        c(
            "lemma-Knd",
            "relative nowhere density and relative regular closure transfer to induced sublocales",
            lemma_knd,
        ),
        c(
            "cor-regularclosedF",
            "A ⊆ F is F-regular-closed iff its sublocale is regular-closed in F's",
            cor_regular_closed,
        ),
        c(
            "prop-hmnd-conservative",
            "a closed subset is h.m.n.d iff its induced sublocale is h.m.n.d",
            prop_hmnd_conservative,
        ),
    ]
}

fn induced_basics(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_space(c, |loc, subsets| {
        let sp = &loc.space;
        let f = &loc.frame;
        for &a in subsets {
            let ia = loc.induced(a);
            let mut ok = f.is_sublocale_set(ia.members())
                && (a != sp.full() || ia.is_whole())
                && ia.closure() == loc.induced(sp.closure(a))
                && ia.is_nowhere_dense() == sp.is_nowhere_dense(a);
            if sp.is_open(a) {
                ok &= ia == f.open_sublocale(loc.element(a));
            }
            if sp.is_closed(a) {
                ok &= ia == f.closed_sublocale(loc.element(sp.full() & !a));
            }
            for &b in subsets {
                ok &= (a & !b == 0) == ia.is_subset_of(&loc.induced(b));
            }
            rec.record(true, ok, || {
                let mut x = w(loc, &[("A", a)]);
                x["induced"] = sub_json(&ia);
                x["frame"] = frame_json(f);
                x
            });
        }
        Ok(())
    })
}

fn induced_join(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_space(c, |loc, subsets| {
        for &a in subsets {
            for &b in subsets {
                let ok = loc.induced(a | b) == loc.induced(a).join(&loc.induced(b));
                rec.record(true, ok, || w(loc, &[("A", a), ("B", b)]));
            }
        }
        Ok(())
    })
}

fn induced_supplement(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_space(c, |loc, subsets| {
        for &a in subsets {
            let ok = loc.induced(loc.space.full() & !a) == loc.induced(a).supplement();
            rec.record(true, ok, || w(loc, &[("A", a)]));
        }
        Ok(())
    })
}

fn binary_intersection(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_space(c, |loc, subsets| {
        for &a in subsets {
            for &b in subsets {
                let ib = loc.induced(b);
                let ok = loc.induced(a & b) == loc.induced(a).intersection(&ib);
                rec.record(ib.is_complemented(), ok, || w(loc, &[("A", a), ("B", b)]));
            }
        }
        Ok(())
    })
}

fn lemma_n1(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_space(c, |loc, subsets| {
        for &n in subsets {
            let inn = loc.induced(n);
            for &a in subsets {
                rec.agree(
                    inn.is_complemented(),
                    &[
                        ("disjoint", n & a == 0),
                        ("misses", inn.misses(&loc.induced(a))),
                    ],
                    || w(loc, &[("N", n), ("A", a)]),
                );
            }
        }
        Ok(())
    })
}

fn lem_binary_intersection(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_space(c, |loc, subsets| {
        let sp = &loc.space;
        for &fs in subsets {
            for &a in subsets {
                if a & !fs != 0 {
                    continue;
                }
                rec.agree(
                    true,
                    &[
                        ("subset", sp.is_nowhere_dense_in(a, fs)),
                        ("sublocale", nwd_in(&loc.induced(a), &loc.induced(fs))),
                    ],
                    || w(loc, &[("A", a), ("F", fs)]),
                );
            }
        }
        Ok(())
    })
}

fn prop_mnd(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_space(c, |loc, subsets| {
        for &a in subsets {
            rec.agree(
                true,
                &[
                    ("subset", loc.space.is_maximal_nwd(a)),
                    ("sublocale", is_maximal_nwd_by_definition(&loc.induced(a))?),
                ],
                || w(loc, &[("A", a)]),
            );
        }
        Ok(())
    })
}

fn lemma_knd(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_space(c, |loc, subsets| {
        let sp = &loc.space;
        for &fs in subsets {
            let ifs = loc.induced(fs);
            let hyp = ifs.is_complemented();
            for &u in subsets {
                let meet = loc.induced(u).intersection(&ifs);
                for &k in subsets {
                    if u & fs & !k != 0 {
                        continue;
                    }
                    rec.agree(
                        hyp,
                        &[
                            ("subset", sp.is_nowhere_dense_in(u & fs, k)),
                            ("sublocale", nwd_in(&meet, &loc.induced(k))),
                        ],
                        || w(loc, &[("F", fs), ("U", u), ("K", k)]),
                    );
                }
                let target = meet.closure().intersection(&ifs);
                for &a in subsets {
                    rec.agree(
                        hyp,
                        &[
                            ("subset", a == sp.closure(fs & u) & fs),
                            ("sublocale", loc.induced(a) == target),
                        ],
                        || w(loc, &[("A", a), ("F", fs), ("U", u)]),
                    );
                }
            }
        }
        Ok(())
    })
}

fn cor_regular_closed(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_space(c, |loc, subsets| {
        let sp = &loc.space;
        for &fs in subsets {
            let spatial = sp.regular_closed_in(fs);
            let parts = loc.induced(fs).regular_closed_parts();
            for &a in subsets {
                if a & !fs != 0 {
                    continue;
                }
                rec.agree(
                    true,
                    &[
                        ("subset", spatial.contains(&a)),
                        ("sublocale", parts.contains(&loc.induced(a))),
                    ],
                    || w(loc, &[("A", a), ("F", fs)]),
                );
            }
        }
        Ok(())
    })
}

fn prop_hmnd_conservative(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_space(c, |loc, subsets| {
        for &fs in subsets {
            rec.agree(
                loc.space.is_closed(fs),
                &[
                    ("subset", loc.space.is_hmnd(fs)),
                    ("sublocale", is_hmnd_by_definition(&loc.induced(fs))?),
                ],
                || w(loc, &[("F", fs)]),
            );
        }
        Ok(())
    })
}
