//! Checks over frames and their sublocales.

use serde_json::{json, Map, Value};

use super::{frame_json, sub_json, Corpus, Domain, Recorder, TheoremCheck};
use crate::classify::{
    is_almost_inaccessible, is_almost_inaccessible_by_definition, is_hmnd, is_hmnd_by_definition,
    is_inaccessible, is_inaccessible_by_definition, is_maximal_nwd, is_maximal_nwd_by_definition,
    is_remote, is_remote_by_definition, is_remote_from, is_remote_from_by_definition,
    is_star_remote_from, is_strongly_maximal_nwd, is_weakly_hmnd, is_weakly_hmnd_by_definition,
    remote_part_unchecked,
};
use crate::elements::ElementSet;
use crate::error::Result;
use crate::frame::FiniteFrame;
use crate::generate::chain_frame;
use crate::sublocale::{join, Sublocale};

fn witness(f: &FiniteFrame, parts: &[(&str, &Sublocale<'_>)]) -> Value {
    let mut map = Map::new();
    map.insert("frame".into(), frame_json(f));
    for (k, s) in parts {
        map.insert(k.to_string(), sub_json(s));
    }
    Value::Object(map)
}

/// `a ⊆ b` and `a` nowhere dense as a sublocale of `b`.
fn nwd_in(a: &Sublocale<'_>, b: &Sublocale<'_>) -> bool {
    a.is_subset_of(b) && a.nowhere_dense_in(b)
}

/// `x^{*S}` computed as the `S`-join of the members of `S` meeting `x` in `0_S`.
pub(super) fn pseudocomplement_by_join(s: &Sublocale<'_>, x: usize) -> usize {
    let f = s.frame();
    let zero = s.bottom();
    let below: ElementSet = s
        .members()
        .iter()
        .filter(|&z| f.meet(x, z) == zero)
        .collect();
    s.nucleus(f.join_all(below))
}

/// Nowhere dense sublocales of `s`, as sublocales of `s`.
fn nwd_parts<'f>(s: &Sublocale<'f>) -> Vec<Sublocale<'f>> {
    s.sub_sublocales()
        .into_iter()
        .filter(|n| n.nowhere_dense_in(s))
        .collect()
}

/// Per-frame data shared by most checks.
struct Ctx<'f> {
    f: &'f FiniteFrame,
    subs: Vec<Sublocale<'f>>,
    mnd: Vec<bool>,
}

impl<'f> Ctx<'f> {
    fn new(f: &'f FiniteFrame) -> Result<Self> {
        let subs = f.enumerate_sublocales()?;
        let mnd = subs
            .iter()
            .map(is_maximal_nwd_by_definition)
            .collect::<Result<Vec<_>>>()?;
        Ok(Ctx { f, subs, mnd })
    }

    /// Position in the enumeration. `None` only happens when the frame's
    /// tables are inconsistent.
    fn index(&self, s: &Sublocale<'f>) -> Option<usize> {
        self.subs.iter().position(|t| t == s)
    }

    fn mnd_of(&self, s: &Sublocale<'f>) -> bool {
        match self.index(s) {
            Some(i) => self.mnd[i],
            None => is_maximal_nwd_by_definition(s).unwrap_or(false),
        }
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.subs.len();
        (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
    }

    fn w(&self, parts: &[(&str, &Sublocale<'_>)]) -> Value {
        witness(self.f, parts)
    }
}

fn each_frame(c: &Corpus, mut body: impl FnMut(&Ctx<'_>) -> Result<()>) -> Result<()> {
    for f in c.frames() {
        body(&Ctx::new(f)?)?;
    }
    Ok(())
}

/// Inaccessibility tables `[s][t]` for `t ⊆ s`, by definition.
fn inaccessibility_tables(ctx: &Ctx<'_>) -> Result<(Vec<Vec<bool>>, Vec<Vec<bool>>)> {
    let n = ctx.subs.len();
    let mut inacc = vec![vec![false; n]; n];
    let mut almost = vec![vec![false; n]; n];
    for (s, sl) in ctx.subs.iter().enumerate() {
        for (t, tl) in ctx.subs.iter().enumerate() {
            if tl.is_subset_of(sl) {
                inacc[s][t] = is_inaccessible_by_definition(tl, sl)?;
                almost[s][t] = is_almost_inaccessible_by_definition(tl, sl)?;
            }
        }
    }
    Ok((inacc, almost))
}

fn c(
    id: &'static str,
    anchor: &'static str,
    domain: Domain,
    vacuity: Option<&'static str>,
    eval: super::Eval,
) -> TheoremCheck {
    TheoremCheck {
        id,
        anchor,
        domain,
        vacuity,
        eval,
    }
}

pub(super) fn checks() -> Vec<TheoremCheck> {
    use Domain::*;
    vec![
        c("frame-adjunction", "a ≤ b→c iff a∧b ≤ c", Frames, None, frame_adjunction),
        c("frame-nucleus", "each sublocale is the fixed set of a nucleus", Sublocales, None, frame_nucleus),
        c("oracle-sublocale-enumeration", "point-subset enumeration agrees with a pruned closure search", Frames, None, oracle_enumeration),
        c("oracle-nd", "Nd(L) = 𝔠(⋀ dense) = join of nowhere dense sublocales", Frames, None, oracle_nd),
        c("oracle-supplement", "complement, coframe meet and minimality give the same supplement", Sublocales, None, oracle_supplement),
        c("oracle-interior", "interior is the join of the open sublocales inside", Sublocales, None, oracle_interior),
        c("oracle-mnd", "dense-element test for maximal nowhere density agrees with the definition", Sublocales, None, oracle_mnd),
        c("oracle-hmnd", "closed-form h.m.n.d tests agree with the regular-closed scan", Sublocales, None, oracle_hmnd),
        c("oracle-inaccessibility", "closed-form inaccessibility tests agree with the definitions", SublocalePairs, None, oracle_inaccessibility),
        c("oracle-remote", "closed-form remoteness tests agree with the definitions", SublocalePairs, None, oracle_remote),
        c("lemma-mndcmndlemma", "N is nowhere dense in K iff it is nowhere dense in the closure of K", SublocalePairs, None, lemma_mndcmndlemma),
        c("prop-mndcmnd", "five characterizations of maximal nowhere density agree", Sublocales, None, prop_mndcmnd),
        c("cor-closed-mnd", "𝔠(x) is m.n.d iff x is dense and no dense y ≤ x has x→y = y", Frames, None, cor_closed_mnd),
        c("obs-ndsubspace", "F is nowhere dense in complemented A iff A ⊆ cl(A ∩ (L∖cl F))", SublocalePairs, None, obs_ndsubspace),
        c("prop-mndprop", "nowhere dense supersets of m.n.d sublocales are m.n.d; a density condition forces m.n.d", SublocalePairs, None, prop_mndprop),
        c("obs-mnd-joins", "joins of two m.n.d sublocales are m.n.d", SublocalePairs, None, obs_mnd_joins),
        c("prop-strongly-mnd", "a strongly m.n.d sublocale exists iff Nd(L) is nowhere dense", Frames, None, prop_strongly_mnd),
        c("ex-mndexample", "O is never m.n.d; Nd(L) is m.n.d in non-Boolean strongly submaximal L", Frames, None, ex_mndexample),
        c("obs-regularclosed", "regular-closed parts of 𝔠(x) are the 𝔠(a→x)", Frames, None, obs_regularclosed),
        c("prop-hmndcharac", "three characterizations of h.m.n.d for 𝔠(x) agree", Frames, None, prop_hmndcharac),
        c("prop-hmnd-heredity", "non-void regular-closed parts of an h.m.n.d sublocale are h.m.n.d", SublocalePairs, None, prop_hmnd_heredity),
        c("prop-smndandmnd", "h.m.n.d and weakly h.m.n.d imply m.n.d; they coincide on closed sublocales", Sublocales, None, prop_smndandmnd),
        c("prop-hmnd-regular-closed", "an h.m.n.d F inside a complemented nowhere dense A is A-regular-closed", SublocalePairs, None, prop_hmnd_regular_closed),
        c("prop-inacccharact", "four characterizations of S-inaccessibility agree", SublocalePairs, None, prop_inacccharact),
        c("obs-obsinacc", "F is almost F-inaccessible iff it is dense in each F ∩ (L∖cl N)", Sublocales, None, obs_obsinacc),
        c("lemma-complalmost", "T ⊆ cl_S(S ∩ (L∖cl N)) iff T misses int_S(S ∩ cl N)", SublocaleTriples, None, lemma_complalmost),
        c("prop-complementedremote", "three characterizations of almost S-inaccessibility for complemented S agree", SublocalePairs, None, prop_complementedremote),
        c("prop-almostinaccesprop", "basic closure properties of (almost) inaccessibility", SublocaleTriples, None, prop_almostinaccesprop),
        c("thm-maximal", "almost self-inaccessible implies m.n.d; m.n.d gives an uncovered element; h.m.n.d gives almost inaccessible parts", SublocalePairs, Some("part (2) has no instance when no closed nowhere dense sublocale is m.n.d"), thm_maximal),
        c("prop-hmndclopen", "clopen parts of an h.m.n.d sublocale are almost self-inaccessible", SublocalePairs, None, prop_hmndclopen),
        c("thm-thmmnd", "six global conditions on nowhere dense sublocales agree", Frames, None, thm_thmmnd),
        c("ex-three-chain", "in 3 = {0,a,1}, 𝔠(a) is the unique non-void closed nowhere dense sublocale and is m.n.d", Frames, None, ex_three_chain),
        c("obs-remote-vs-inaccessible", "L is remote iff Boolean, yet always L-inaccessible", Frames, None, obs_remote_vs_inaccessible),
        c("prop-inaccessibility-remoteness", "for dense complemented S, (L∖S)-inaccessible equals *-remote from S", SublocalePairs, None, prop_inaccessibility_remoteness),
        c("prop-inaccrem", "remote ⇒ remote from S ⇔ *-remote ⇔ (L∖S)-inaccessible ⇒ almost", SublocalePairs, None, prop_inaccrem),
        c("prop-almostinaccesprop1", "S ∩ Rs(L⋉S) is S-inaccessible for open S; 𝔅L is S-inaccessible for dense open S", Sublocales, None, prop_almostinaccesprop1),
        c("prop-remoteandmaximal", "for open dense S, *-remote S# is m.n.d; h.m.n.d S# makes S#-remote parts *-remote", SublocalePairs, None, prop_remoteandmaximal),
    ]
}

fn frame_adjunction(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    for f in c.frames() {
        let v = f.adjunction_violation();
        rec.record(
            true,
            v.is_none(),
            || json!({"frame": frame_json(f), "triple": v}),
        );
    }
    Ok(())
}

fn frame_nucleus(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        for s in &ctx.subs {
            let nu = s.nucleus_table();
            let ok = f.is_sublocale_set(s.members())
                && f.elements().all(|a| {
                    f.leq(a, nu[a])
                        && nu[nu[a]] == nu[a]
                        && s.contains(nu[a])
                        && f.elements()
                            .all(|b| nu[f.meet(a, b)] == f.meet(nu[a], nu[b]))
                })
                && s.members().iter().all(|x| nu[x] == x);
            rec.record(true, ok, || ctx.w(&[("S", s)]));
        }
        Ok(())
    })
}

fn oracle_enumeration(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    for f in c.frames() {
        let mut fast: Vec<ElementSet> = f
            .enumerate_sublocales()?
            .iter()
            .map(|s| s.members())
            .collect();
        fast.sort();
        let slow = f.sublocale_sets_by_search();
        rec.record(
            true,
            fast == slow,
            || json!({"frame": frame_json(f), "points": fast.len(), "search": slow.len()}),
        );
    }
    Ok(())
}

fn oracle_nd(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    for f in c.frames() {
        let fast = f.nd();
        let slow = f.nd_by_enumeration()?;
        let closed = join(&f.enumerate_closed_nwd())?;
        rec.record(true, fast == slow && fast == closed, || {
            witness(
                f,
                &[
                    ("closedForm", &fast),
                    ("enumeration", &slow),
                    ("closedJoin", &closed),
                ],
            )
        });
    }
    Ok(())
}

fn oracle_supplement(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for s in &ctx.subs {
            let a = s.supplement();
            let b = s.supplement_by_meet();
            let m = s.supplement_by_minimality();
            rec.record(true, a == b && m == Some(b), || {
                let mut w = ctx.w(&[("S", s), ("supplement", &a), ("meet", &b)]);
                w["minimality"] = m.map(|m| sub_json(&m)).unwrap_or(Value::Null);
                w
            });
        }
        Ok(())
    })
}

fn oracle_interior(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        for s in &ctx.subs {
            let opens: Vec<_> = f
                .elements()
                .map(|a| f.open_sublocale(a))
                .filter(|o| o.is_subset_of(s))
                .collect();
            let by_join = join(&opens)?;
            let fast = s.interior();
            rec.record(
                true,
                fast == by_join && s.closure().members() == f.up(s.bottom()),
                || ctx.w(&[("S", s), ("interior", &fast), ("joinOfOpens", &by_join)]),
            );
        }
        Ok(())
    })
}

fn oracle_mnd(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for (i, s) in ctx.subs.iter().enumerate() {
            rec.agree(
                true,
                &[("fast", is_maximal_nwd(s)), ("definition", ctx.mnd[i])],
                || ctx.w(&[("N", s)]),
            );
        }
        Ok(())
    })
}

fn oracle_hmnd(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for s in &ctx.subs {
            rec.agree(
                true,
                &[
                    ("hmnd", is_hmnd(s)),
                    ("hmndByDefinition", is_hmnd_by_definition(s)?),
                ],
                || ctx.w(&[("N", s)]),
            );
            rec.agree(
                true,
                &[
                    ("weaklyHmnd", is_weakly_hmnd(s)),
                    ("weaklyHmndByDefinition", is_weakly_hmnd_by_definition(s)?),
                ],
                || ctx.w(&[("N", s)]),
            );
        }
        Ok(())
    })
}

fn oracle_inaccessibility(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for (i, j) in ctx.pairs() {
            let (t, s) = (&ctx.subs[i], &ctx.subs[j]);
            if !t.is_subset_of(s) {
                continue;
            }
            rec.agree(
                true,
                &[
                    ("inaccessible", is_inaccessible(t, s)?),
                    (
                        "inaccessibleByDefinition",
                        is_inaccessible_by_definition(t, s)?,
                    ),
                ],
                || ctx.w(&[("T", t), ("S", s)]),
            );
            rec.agree(
                true,
                &[
                    ("almost", is_almost_inaccessible(t, s)?),
                    (
                        "almostByDefinition",
                        is_almost_inaccessible_by_definition(t, s)?,
                    ),
                ],
                || ctx.w(&[("T", t), ("S", s)]),
            );
        }
        Ok(())
    })
}

fn oracle_remote(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for t in &ctx.subs {
            rec.agree(
                true,
                &[
                    ("remote", is_remote(t)),
                    ("remoteByDefinition", is_remote_by_definition(t)?),
                ],
                || ctx.w(&[("T", t)]),
            );
        }
        for (i, j) in ctx.pairs() {
            let (t, s) = (&ctx.subs[i], &ctx.subs[j]);
            if !s.is_dense() {
                continue;
            }
            rec.agree(
                true,
                &[
                    ("remoteFrom", is_remote_from(t, s)?),
                    (
                        "remoteFromByDefinition",
                        is_remote_from_by_definition(t, s)?,
                    ),
                ],
                || ctx.w(&[("T", t), ("S", s)]),
            );
        }
        Ok(())
    })
}

fn lemma_mndcmndlemma(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for (i, j) in ctx.pairs() {
            let (n, k) = (&ctx.subs[i], &ctx.subs[j]);
            if !n.is_subset_of(k) {
                continue;
            }
            rec.agree(
                true,
                &[
                    ("inK", nwd_in(n, k)),
                    ("inClosure", nwd_in(n, &k.closure())),
                ],
                || ctx.w(&[("N", n), ("K", k)]),
            );
        }
        Ok(())
    })
}

/// No dense `y ≤ m` with `m^{*𝔠(y)} = y`.
fn no_dense_fixpoint(f: &FiniteFrame, m: usize) -> bool {
    !f.dense_elements()
        .iter()
        .any(|y| f.leq(y, m) && pseudocomplement_by_join(&f.closed_sublocale(y), m) == y)
}

fn prop_mndcmnd(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        let closed_nwd = f.enumerate_closed_nwd();
        for (i, n) in ctx.subs.iter().enumerate() {
            let cl = n.closure();
            let c2 = !closed_nwd.iter().any(|k| nwd_in(n, k));
            let c4 = !closed_nwd.iter().any(|k| nwd_in(&cl, k));
            rec.agree(
                n.is_nowhere_dense(),
                &[
                    ("(1) definition", ctx.mnd[i]),
                    ("(2) no closed container", c2),
                    ("(3) closure m.n.d", ctx.mnd_of(&cl)),
                    ("(4) closure has no closed container", c4),
                    ("(5) no dense fixpoint", no_dense_fixpoint(f, n.bottom())),
                    ("fast path", is_maximal_nwd(n)),
                ],
                || ctx.w(&[("N", n)]),
            );
        }
        Ok(())
    })
}

fn cor_closed_mnd(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        for x in f.elements() {
            let cx = f.closed_sublocale(x);
            let formula = f.is_dense(x)
                && !f
                    .dense_elements()
                    .iter()
                    .any(|y| f.leq(y, x) && f.heyting(x, y) == y);
            rec.agree(
                true,
                &[("m.n.d", ctx.mnd_of(&cx)), ("formula", formula)],
                || ctx.w(&[("C", &cx)]),
            );
            for b in f.elements() {
                let by_join = pseudocomplement_by_join(&f.closed_sublocale(b), x);
                rec.record(
                    f.leq(b, x),
                    by_join == f.heyting(x, b),
                    || json!({"frame": frame_json(f), "a": f.name(x), "b": f.name(b)}),
                );
            }
        }
        Ok(())
    })
}

fn obs_ndsubspace(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for (i, j) in ctx.pairs() {
            let (fs, a) = (&ctx.subs[i], &ctx.subs[j]);
            if !fs.is_subset_of(a) {
                continue;
            }
            let rhs = a.is_subset_of(&a.intersection(&fs.closure().supplement()).closure());
            rec.agree(
                a.is_complemented(),
                &[("nowhere dense in A", nwd_in(fs, a)), ("density", rhs)],
                || ctx.w(&[("F", fs), ("A", a)]),
            );
        }
        Ok(())
    })
}

fn prop_mndprop(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for (i, j) in ctx.pairs() {
            let (fs, a) = (&ctx.subs[i], &ctx.subs[j]);
            if !fs.is_subset_of(a) {
                continue;
            }
            let hyp = !fs.is_void() && ctx.mnd[i] && a.is_nowhere_dense();
            rec.record(hyp, ctx.mnd[j], || {
                let mut w = ctx.w(&[("F", fs), ("A", a)]);
                w["part"] = json!(1);
                w
            });
        }
        for (i, fs) in ctx.subs.iter().enumerate() {
            let outside = fs.supplement();
            let hyp = !fs.is_void()
                && fs.is_nowhere_dense()
                && nwd_parts(&outside)
                    .iter()
                    .all(|n| !fs.misses(&n.closure().supplement()));
            rec.record(hyp, ctx.mnd[i], || {
                let mut w = ctx.w(&[("F", fs)]);
                w["part"] = json!(2);
                w
            });
        }
        Ok(())
    })
}

fn obs_mnd_joins(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for (i, j) in ctx.pairs() {
            let (a, b) = (&ctx.subs[i], &ctx.subs[j]);
            let ab = a.join(b);
            rec.record(ctx.mnd[i] && ctx.mnd[j], ctx.mnd_of(&ab), || {
                ctx.w(&[("F1", a), ("F2", b), ("join", &ab)])
            });
        }
        Ok(())
    })
}

fn prop_strongly_mnd(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        let nd = f.nd();
        let mut strongly = Vec::new();
        for s in &ctx.subs {
            if is_strongly_maximal_nwd(s)? {
                strongly.push(*s);
            }
        }
        let nd_nwd = nd.is_nowhere_dense();
        rec.agree(
            true,
            &[
                ("strongly m.n.d exists", !strongly.is_empty()),
                ("Nd nowhere dense", nd_nwd),
            ],
            || ctx.w(&[("Nd", &nd)]),
        );
        rec.record(true, strongly.iter().all(|s| *s == nd), || {
            ctx.w(&[("Nd", &nd)])
        });
        rec.agree(
            !f.is_boolean(),
            &[("Nd nowhere dense", nd_nwd), ("Nd m.n.d", ctx.mnd_of(&nd))],
            || ctx.w(&[("Nd", &nd)]),
        );
        Ok(())
    })
}

fn ex_mndexample(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        let void = f.void_sublocale();
        rec.record(true, !ctx.mnd_of(&void) && !is_maximal_nwd(&void), || {
            ctx.w(&[])
        });
        let any_mnd = ctx.mnd.iter().any(|&b| b);
        rec.record(f.is_boolean(), !any_mnd, || ctx.w(&[]));
        for (i, s) in ctx.subs.iter().enumerate() {
            rec.record(ctx.mnd[i], !s.is_open(), || ctx.w(&[("N", s)]));
        }
        let nd = f.nd();
        let b = f.booleanization();
        rec.record(nd.is_nowhere_dense(), nd == b.supplement(), || {
            ctx.w(&[("Nd", &nd), ("booleanization", &b)])
        });
        let hyp = !f.is_boolean() && f.is_strongly_submaximal()?;
        rec.record(hyp, ctx.mnd_of(&nd) && ctx.mnd_of(&b.supplement()), || {
            ctx.w(&[("Nd", &nd)])
        });
        Ok(())
    })
}

fn obs_regularclosed(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    for f in c.frames() {
        for x in f.elements() {
            let cx = f.closed_sublocale(x);
            let mut a: Vec<_> = cx
                .regular_closed_of()?
                .iter()
                .map(|s| s.members())
                .collect();
            let mut b: Vec<_> = cx
                .regular_closed_parts()
                .iter()
                .map(|s| s.members())
                .collect();
            a.sort();
            b.sort();
            rec.record(true, a == b, || witness(f, &[("C", &cx)]));
        }
    }
    Ok(())
}

fn prop_hmndcharac(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        for x in f.elements() {
            let n = f.closed_sublocale(x);
            let parts: Vec<usize> = f
                .elements()
                .map(|a| f.heyting(a, x))
                .filter(|&y| y != f.top())
                .collect();
            let c2 = parts.iter().all(|&y| ctx.mnd_of(&f.closed_sublocale(y)));
            let c3 = parts.iter().all(|&y| no_dense_fixpoint(f, y));
            rec.agree(
                f.is_dense(x) && x != f.top(),
                &[
                    ("(1) definition", is_hmnd_by_definition(&n)?),
                    ("(2) parts m.n.d", c2),
                    ("(3) no dense fixpoints", c3),
                    ("fast path", is_hmnd(&n)),
                ],
                || ctx.w(&[("N", &n)]),
            );
        }
        Ok(())
    })
}

fn prop_hmnd_heredity(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for fs in &ctx.subs {
            let hyp = fs.is_closed() && is_hmnd_by_definition(fs)?;
            for a in fs.regular_closed_parts() {
                rec.record(hyp && !a.is_void(), is_hmnd_by_definition(&a)?, || {
                    ctx.w(&[("F", fs), ("A", &a)])
                });
            }
        }
        Ok(())
    })
}

fn prop_smndandmnd(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for (i, n) in ctx.subs.iter().enumerate() {
            let h = is_hmnd_by_definition(n)?;
            let wh = is_weakly_hmnd_by_definition(n)?;
            rec.record(h, ctx.mnd[i], || ctx.w(&[("N", n)]));
            rec.record(wh, ctx.mnd[i], || ctx.w(&[("N", n)]));
            rec.agree(n.is_closed(), &[("hmnd", h), ("weakly", wh)], || {
                ctx.w(&[("N", n)])
            });
        }
        Ok(())
    })
}

fn prop_hmnd_regular_closed(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let hmnd = ctx
            .subs
            .iter()
            .map(|s| Ok(s.is_closed() && is_hmnd_by_definition(s)?))
            .collect::<Result<Vec<bool>>>()?;
        for (i, j) in ctx.pairs() {
            let (fs, a) = (&ctx.subs[i], &ctx.subs[j]);
            if !fs.is_subset_of(a) {
                continue;
            }
            let hyp = hmnd[i] && a.is_nowhere_dense() && a.is_complemented();
            rec.record(hyp, fs.is_regular_closed_in(a), || {
                ctx.w(&[("F", fs), ("A", a)])
            });
        }
        Ok(())
    })
}

fn prop_inacccharact(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        for (i, j) in ctx.pairs() {
            let (t, s) = (&ctx.subs[i], &ctx.subs[j]);
            if !t.is_subset_of(s) {
                continue;
            }
            let xs = s.supplement().dense_members();
            let c2 = xs.iter().all(|x| t.misses(&f.closed_sublocale(x)));
            let c3 = xs.iter().all(|x| t.is_subset_of(&f.open_sublocale(x)));
            let c4 = xs.iter().all(|x| t.nucleus(x) == f.top());
            rec.agree(
                true,
                &[
                    ("(1) definition", is_inaccessible_by_definition(t, s)?),
                    ("(2) misses 𝔠(x)", c2),
                    ("(3) inside 𝔬(x)", c3),
                    ("(4) ν_T(x) = 1", c4),
                ],
                || ctx.w(&[("T", t), ("S", s)]),
            );
        }
        Ok(())
    })
}

fn obs_obsinacc(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for fs in &ctx.subs {
            let parts = nwd_parts(&fs.supplement());
            let c2 = parts.iter().all(|n| {
                let inside = fs.intersection(&n.closure().supplement());
                *fs == fs.closure_in(&inside)
            });
            let c3 = parts.iter().all(|n| {
                fs.intersection(&n.closure().supplement())
                    .contains(fs.bottom())
            });
            rec.agree(
                true,
                &[
                    ("definition", is_almost_inaccessible_by_definition(fs, fs)?),
                    ("closure", c2),
                    ("contains 0_F", c3),
                ],
                || ctx.w(&[("F", fs)]),
            );
        }
        Ok(())
    })
}

fn lemma_complalmost(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for (i, j) in ctx.pairs() {
            let (t, s) = (&ctx.subs[i], &ctx.subs[j]);
            if !t.is_subset_of(s) {
                continue;
            }
            let hyp = s.is_complemented();
            for n in &ctx.subs {
                let cl = n.closure();
                let lhs = t.is_subset_of(&s.closure_in(&s.intersection(&cl.supplement())));
                let rhs = t.misses(&s.interior_in(&s.intersection(&cl)));
                rec.agree(hyp, &[("closure", lhs), ("interior", rhs)], || {
                    ctx.w(&[("T", t), ("S", s), ("N", n)])
                });
            }
        }
        Ok(())
    })
}

fn prop_complementedremote(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        for (i, j) in ctx.pairs() {
            let (t, s) = (&ctx.subs[i], &ctx.subs[j]);
            if !t.is_subset_of(s) {
                continue;
            }
            let outside = s.supplement();
            let c2 = nwd_parts(&outside)
                .iter()
                .all(|n| t.misses(&s.interior_in(&s.intersection(&n.closure()))));
            let mut values = vec![
                (
                    "(1) definition",
                    is_almost_inaccessible_by_definition(t, s)?,
                ),
                ("(2) interiors", c2),
                ("fast path", is_almost_inaccessible(t, s)?),
            ];
            if s.is_closed() {
                let (m, mt) = (s.bottom(), t.bottom());
                let c3 = outside
                    .dense_members()
                    .iter()
                    .all(|a| f.leq(f.heyting(a, m), mt));
                values.push(("(3) closed form", c3));
            }
            rec.agree(s.is_complemented(), &values, || {
                ctx.w(&[("T", t), ("S", s)])
            });
        }
        Ok(())
    })
}

fn prop_almostinaccesprop(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let (inacc, almost) = inaccessibility_tables(ctx)?;
        let subs = &ctx.subs;
        let whole = ctx.index(&ctx.f.whole()).unwrap_or(subs.len() - 1);
        let part = |w: Value, p: u32| {
            let mut w = w;
            w["part"] = json!(p);
            w
        };
        for (si, s) in subs.iter().enumerate() {
            rec.record(s.is_open(), inacc[si][si], || part(ctx.w(&[("S", s)]), 3));
            rec.record(true, inacc[whole][si], || part(ctx.w(&[("T", s)]), 4));
            let outside = s.supplement();
            let Some(oi) = ctx.index(&outside) else {
                rec.record(true, false, || {
                    part(ctx.w(&[("S", s), ("supplement", &outside)]), 5)
                });
                continue;
            };
            for (ti, t) in subs.iter().enumerate() {
                if t.is_subset_of(s) {
                    rec.record(inacc[si][ti], almost[si][ti], || {
                        part(ctx.w(&[("T", t), ("S", s)]), 1)
                    });
                }
                if t.is_subset_of(&outside) {
                    rec.record(s.is_complemented() && t.is_open(), inacc[oi][ti], || {
                        part(ctx.w(&[("T", t), ("S", s)]), 5)
                    });
                }
            }
            for (ai, a) in subs.iter().enumerate() {
                if !a.is_subset_of(s) {
                    continue;
                }
                for (bi, b) in subs.iter().enumerate() {
                    if !b.is_subset_of(s) {
                        continue;
                    }
                    if b.is_subset_of(a) {
                        rec.record(inacc[si][ai], inacc[si][bi], || {
                            part(ctx.w(&[("A", a), ("B", b), ("S", s)]), 2)
                        });
                        rec.record(almost[si][ai], almost[si][bi], || {
                            part(ctx.w(&[("A", a), ("B", b), ("S", s)]), 2)
                        });
                    }
                    let Some(ab) = ctx.index(&a.join(b)) else {
                        rec.record(true, false, || part(ctx.w(&[("A", a), ("B", b)]), 6));
                        continue;
                    };
                    rec.record(inacc[si][ai] && inacc[si][bi], inacc[si][ab], || {
                        part(ctx.w(&[("A", a), ("B", b), ("S", s)]), 6)
                    });
                    rec.record(almost[si][ai] && almost[si][bi], almost[si][ab], || {
                        part(ctx.w(&[("A", a), ("B", b), ("S", s)]), 6)
                    });
                }
            }
        }
        Ok(())
    })
}

fn thm_maximal(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for (i, fs) in ctx.subs.iter().enumerate() {
            let base = !fs.is_void() && fs.is_closed() && fs.is_nowhere_dense();
            let self_almost = is_almost_inaccessible_by_definition(fs, fs)?;
            rec.record(base && self_almost, ctx.mnd[i], || {
                let mut w = ctx.w(&[("F", fs)]);
                w["part"] = json!(1);
                w
            });
            let parts = nwd_parts(&fs.supplement());
            let uncovered = fs.members().iter().any(|x| {
                parts
                    .iter()
                    .all(|n| !fs.interior_in(&n.closure().intersection(fs)).contains(x))
            });
            rec.record(base && ctx.mnd[i], uncovered, || {
                let mut w = ctx.w(&[("F", fs)]);
                w["part"] = json!(2);
                w
            });
            let hmnd = base && is_hmnd_by_definition(fs)?;
            for b in fs.sub_sublocales() {
                rec.record(hmnd, is_almost_inaccessible_by_definition(&b, fs)?, || {
                    let mut w = ctx.w(&[("F", fs), ("B", &b)]);
                    w["part"] = json!(3);
                    w
                });
            }
        }
        Ok(())
    })
}

fn prop_hmndclopen(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        for fs in &ctx.subs {
            let hyp = !fs.is_void() && fs.is_nowhere_dense() && is_hmnd_by_definition(fs)?;
            let mut clopen: Vec<Sublocale<'_>> = Vec::new();
            for a in f.elements() {
                let o = fs.open_in(a);
                if !clopen.contains(&o) && f.elements().any(|b| fs.closed_in(b) == o) {
                    clopen.push(o);
                }
            }
            for a in &clopen {
                rec.record(hyp, is_almost_inaccessible_by_definition(a, a)?, || {
                    ctx.w(&[("F", fs), ("A", a)])
                });
            }
        }
        Ok(())
    })
}

fn thm_thmmnd(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        let nwd: Vec<usize> = (0..ctx.subs.len())
            .filter(|&i| !ctx.subs[i].is_void() && ctx.subs[i].is_nowhere_dense())
            .collect();
        let closed: Vec<Sublocale<'_>> = f
            .dense_elements()
            .iter()
            .filter(|&y| y != f.top())
            .map(|y| f.closed_sublocale(y))
            .collect();
        let c1 = nwd.iter().all(|&i| ctx.mnd[i]);
        let c2 = closed.iter().all(|s| ctx.mnd_of(s));
        let c3 = f
            .elements()
            .filter(|&x| x != f.bottom() && !f.is_complemented(x))
            .all(|x| ctx.mnd_of(&f.open_sublocale(x).boundary()));
        let mut c4 = true;
        let mut c5 = true;
        let mut c6 = true;
        for s in &closed {
            c4 &= is_hmnd_by_definition(s)?;
            c5 &= is_almost_inaccessible_by_definition(s, s)?;
            c6 &= is_inaccessible_by_definition(s, s)?;
        }
        rec.agree(
            true,
            &[
                ("(1) nowhere dense", c1),
                ("(2) closed nowhere dense", c2),
                ("(3) boundaries", c3),
                ("(4) h.m.n.d", c4),
                ("(5) almost self-inaccessible", c5),
                ("(6) self-inaccessible", c6),
            ],
            || ctx.w(&[]),
        );
        for x in f.elements() {
            let bd = f.open_sublocale(x).boundary();
            let formula = f.closed_sublocale(f.join(x, f.pseudocomplement(x)));
            rec.record(true, bd == formula, || {
                ctx.w(&[("boundary", &bd), ("formula", &formula)])
            });
        }
        Ok(())
    })
}

fn ex_three_chain(_: &Corpus, rec: &mut Recorder) -> Result<()> {
    let f = chain_frame(3)?;
    let subs = f.enumerate_sublocales()?;
    let a = f.index_of("a").expect("chain element");
    let ca = f.closed_sublocale(a);
    let closed_nwd: Vec<_> = subs
        .iter()
        .filter(|s| !s.is_void() && s.is_closed() && s.is_nowhere_dense())
        .collect();
    let b = f.booleanization();
    let ok = subs.len() == 4
        && closed_nwd == vec![&ca]
        && is_maximal_nwd_by_definition(&ca)?
        && is_maximal_nwd(&ca)
        && is_hmnd(&ca)
        && b.members() == [f.bottom(), f.top()].into_iter().collect()
        && b.supplement() == ca;
    rec.record(true, ok, || {
        witness(&f, &[("C", &ca), ("booleanization", &b)])
    });
    Ok(())
}

fn obs_remote_vs_inaccessible(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    for f in c.frames() {
        let w = f.whole();
        rec.agree(
            true,
            &[("remote", is_remote(&w)), ("Boolean", f.is_boolean())],
            || witness(f, &[]),
        );
        rec.record(true, is_inaccessible_by_definition(&w, &w)?, || {
            witness(f, &[])
        });
    }
    Ok(())
}

fn prop_inaccessibility_remoteness(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for (i, j) in ctx.pairs() {
            let (t, s) = (&ctx.subs[i], &ctx.subs[j]);
            let outside = s.supplement();
            if !t.is_subset_of(&outside) {
                continue;
            }
            let hyp = s.is_dense() && s.is_complemented();
            let star = hyp && is_remote_from_by_definition(t, s)? && t.is_subset_of(&outside);
            rec.agree(
                hyp,
                &[
                    ("inaccessible", is_inaccessible_by_definition(t, &outside)?),
                    ("*-remote", star),
                ],
                || ctx.w(&[("T", t), ("S", s)]),
            );
        }
        Ok(())
    })
}

fn prop_inaccrem(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for (i, j) in ctx.pairs() {
            let (t, s) = (&ctx.subs[i], &ctx.subs[j]);
            let outside = s.supplement();
            if !t.is_subset_of(&outside) || !s.is_dense() {
                continue;
            }
            let hyp = s.is_complemented();
            let c1 = is_remote_by_definition(t)?;
            let c2 = is_remote_from_by_definition(t, s)?;
            let c3 = is_star_remote_from(t, s)?;
            let c4 = is_inaccessible_by_definition(t, &outside)?;
            let c5 = is_almost_inaccessible_by_definition(t, &outside)?;
            let w = || ctx.w(&[("T", t), ("S", s)]);
            rec.record(hyp && c1, c2, w);
            rec.agree(
                hyp,
                &[("remote from", c2), ("*-remote", c3), ("inaccessible", c4)],
                w,
            );
            rec.record(hyp && c4, c5, w);
        }
        Ok(())
    })
}

fn prop_almostinaccesprop1(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        let f = ctx.f;
        let b = f.booleanization();
        for s in &ctx.subs {
            let rs = remote_part_unchecked(s)?;
            let part = s.intersection(&rs);
            rec.record(
                s.is_open(),
                is_inaccessible_by_definition(&part, s)?,
                || ctx.w(&[("S", s), ("Rs", &rs)]),
            );
            rec.record(s.is_dense(), part == b, || ctx.w(&[("S", s), ("Rs", &rs)]));
            let dense_open = s.is_dense() && s.is_open();
            let holds = !dense_open || is_inaccessible_by_definition(&b, s)?;
            rec.record(dense_open, holds, || ctx.w(&[("S", s)]));
        }
        Ok(())
    })
}

fn prop_remoteandmaximal(c: &Corpus, rec: &mut Recorder) -> Result<()> {
    each_frame(c, |ctx| {
        for s in &ctx.subs {
            if !(s.is_open() && s.is_dense() && !s.is_whole()) {
                continue;
            }
            let sharp = s.supplement();
            rec.record(is_star_remote_from(&sharp, s)?, ctx.mnd_of(&sharp), || {
                ctx.w(&[("S", s)])
            });
            let hmnd = is_hmnd_by_definition(&sharp)?;
            let parts = nwd_parts(&sharp);
            for a in sharp.sub_sublocales() {
                let remote_in = parts.iter().all(|n| a.misses(n));
                rec.record(hmnd && remote_in, is_star_remote_from(&a, s)?, || {
                    ctx.w(&[("S", s), ("A", &a)])
                });
            }
        }
        Ok(())
    })
}
