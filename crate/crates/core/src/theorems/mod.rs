//! A registry of executable checks evaluated exhaustively over a corpus of
//! small frames, sublocales, finite spaces and localic maps.
//!
//! Each check counts the instances it visits and how many of them satisfy
//! its hypothesis, so vacuous passes show up in reports. A failure means the
//! implementation contradicts the stated property on a concrete instance.
//! The list of check ids and the items left out of scope is kept in
//! `docs/checks.md`.

mod locale;
mod localic;
mod space;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::formats::FrameDescription;
use crate::frame::FiniteFrame;
use crate::generate::{FrameGenerator, DEFAULT_POSET_CAP};
use crate::maps::{frame_homs, LocalicMap};
use crate::spatial::{t0_spaces_up_to, SpaceLocale};
use crate::sublocale::Sublocale;

/// Upper limits accepted for corpus caps.
pub const MAX_POSET_LIMIT: usize = 5;
pub const MAX_POINTS_LIMIT: usize = 5;
pub const MAX_MAP_SIZE_LIMIT: usize = 7;

/// What a check quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    Frames,
    Sublocales,
    SublocalePairs,
    SublocaleTriples,
    Spaces,
    Maps,
}

type Eval = fn(&Corpus, &mut Recorder) -> Result<()>;

/// A named property with its evaluator.
pub struct TheoremCheck {
    pub id: &'static str,
    pub anchor: &'static str,
    pub domain: Domain,
    /// Why the hypothesis class may be empty at default caps, if it can be.
    pub vacuity: Option<&'static str>,
    eval: Eval,
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCheck")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: usize,
    pub witness: Value,
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub id: String,
    pub anchor: String,
    pub instances: usize,
    pub hypothesis_satisfied: usize,
    /// Total number of failing instances; `failures` keeps only the first few.
    pub failed: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Counts instances and keeps the first few counterexamples.
#[derive(Debug)]
pub struct Recorder {
    instances: usize,
    hypothesis: usize,
    failed: usize,
    failures: Vec<Failure>,
    cap: usize,
}

impl Recorder {
    fn new(cap: usize) -> Self {
        Recorder {
            instances: 0,
            hypothesis: 0,
            failed: 0,
            failures: Vec::new(),
            cap: cap.max(1),
        }
    }

    /// One instance: when `hypothesis` holds, `holds` must be true.
    pub fn record(&mut self, hypothesis: bool, holds: bool, witness: impl FnOnce() -> Value) {
        let index = self.instances;
        self.instances += 1;
        if hypothesis {
            self.hypothesis += 1;
            if !holds {
                self.failed += 1;
            }
            if !holds && self.failures.len() < self.cap {
                self.failures.push(Failure {
                    instance: index,
                    witness: witness(),
                });
            }
        }
    }

    /// One instance of an equivalence: when `hypothesis` holds, all
    /// `values` must agree.
    pub fn agree(
        &mut self,
        hypothesis: bool,
        values: &[(&str, bool)],
        witness: impl FnOnce() -> Value,
    ) {
        let holds = values.windows(2).all(|w| w[0].1 == w[1].1);
        self.record(hypothesis, holds, || {
            let mut w = witness();
            if let Value::Object(map) = &mut w {
                let conds: serde_json::Map<String, Value> = values
                    .iter()
                    .map(|(k, v)| (k.to_string(), Value::Bool(*v)))
                    .collect();
                map.insert("conditions".into(), Value::Object(conds));
            }
            w
        });
    }
}

/// Caps that determine the corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusConfig {
    pub max_poset: usize,
    pub max_points: usize,
    pub max_map_size: usize,
    pub max_counterexamples: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_poset: 4,
            max_points: 4,
            max_map_size: 6,
            max_counterexamples: 5,
        }
    }
}

impl CorpusConfig {
    /// Applies overrides such as `max-poset=3,max-points=2`.
    pub fn apply_overrides(&mut self, caps: &str) -> Result<()> {
        for part in caps.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| Error::Parse {
                context: "caps".into(),
                message: format!("expected key=value, got `{part}`"),
            })?;
            let value: usize = value.trim().parse().map_err(|_| Error::Parse {
                context: "caps".into(),
                message: format!("`{}` is not a non-negative integer", value.trim()),
            })?;
            match key.trim() {
                "max-poset" => self.max_poset = value,
                "max-points" => self.max_points = value,
                "max-map-size" => self.max_map_size = value,
                "max-counterexamples" => self.max_counterexamples = value,
                other => {
                    return Err(Error::Parse {
                        context: "caps".into(),
                        message: format!("unknown cap `{other}`"),
                    })
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        let limits = [
            ("poset", self.max_poset, MAX_POSET_LIMIT),
            ("space", self.max_points, MAX_POINTS_LIMIT),
            ("map frame", self.max_map_size, MAX_MAP_SIZE_LIMIT),
        ];
        for (what, size, cap) in limits {
            if size > cap {
                return Err(Error::SizeCapExceeded { what, size, cap });
            }
        }
        Ok(())
    }
}

/// Frames, spaces and maps that checks quantify over.
pub struct Corpus {
    frames: Vec<FiniteFrame>,
    spaces: Vec<SpaceLocale>,
    map_frames: Vec<FiniteFrame>,
    homs: Vec<(usize, usize, Vec<usize>)>,
    max_counterexamples: usize,
}

impl Corpus {
    pub fn build(config: &CorpusConfig) -> Result<Self> {
        config.validate()?;
        let generator = FrameGenerator::with_cap(DEFAULT_POSET_CAP.max(MAX_MAP_SIZE_LIMIT - 1));
        let frames = generator.frames_from_posets_up_to(config.max_poset)?;
        let spaces = t0_spaces_up_to(config.max_points, MAX_POINTS_LIMIT)?
            .iter()
            .map(|s| s.locale())
            .collect::<Result<Vec<_>>>()?;
        let map_frames = generator.all_frames_up_to(config.max_map_size)?;
        let mut corpus = Corpus {
            frames,
            spaces,
            map_frames,
            homs: Vec::new(),
            max_counterexamples: config.max_counterexamples,
        };
        corpus.compute_homs();
        Ok(corpus)
    }

    /// A corpus made of the given frames only; they also serve as the map
    /// frames. Used to run the registry against hand-built or mutated frames.
    pub fn from_frames(frames: Vec<FiniteFrame>) -> Self {
        let mut corpus = Corpus {
            map_frames: frames.clone(),
            frames,
            spaces: Vec::new(),
            homs: Vec::new(),
            max_counterexamples: CorpusConfig::default().max_counterexamples,
        };
        corpus.compute_homs();
        corpus
    }

    pub fn with_max_counterexamples(mut self, cap: usize) -> Self {
        self.max_counterexamples = cap;
        self
    }

    fn compute_homs(&mut self) {
        let n = self.map_frames.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|l| (0..n).map(move |m| (l, m))).collect();
        let frames = &self.map_frames;
        self.homs = pairs
            .par_iter()
            .flat_map_iter(|&(l, m)| {
                frame_homs(&frames[m], &frames[l])
                    .into_iter()
                    .map(move |h| (l, m, h))
            })
            .collect();
    }

    pub fn frames(&self) -> &[FiniteFrame] {
        &self.frames
    }

    pub fn spaces(&self) -> &[SpaceLocale] {
        &self.spaces
    }

    pub fn map_frames(&self) -> &[FiniteFrame] {
        &self.map_frames
    }

    pub fn map_count(&self) -> usize {
        self.homs.len()
    }

    /// Every localic map between map frames.
    pub fn maps(&self) -> impl Iterator<Item = Result<LocalicMap<'_>>> + '_ {
        self.homs.iter().map(|(l, m, h)| {
            LocalicMap::from_frame_hom(&self.map_frames[*l], &self.map_frames[*m], h.clone())
        })
    }
}

static REGISTRY: std::sync::OnceLock<Vec<TheoremCheck>> = std::sync::OnceLock::new();

/// Every registered check, sorted by id.
pub fn registry() -> &'static [TheoremCheck] {
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(locale::checks());
        all.extend(space::checks());
        all.extend(localic::checks());
        all.sort_by_key(|c| c.id);
        all
    })
}

pub fn find_check(id: &str) -> Result<&'static TheoremCheck> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs one check. An error or panic inside the evaluator means the
/// implementation contradicted itself, so it is reported as a failure.
fn evaluate(check: &TheoremCheck, corpus: &Corpus) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rec = Recorder::new(corpus.max_counterexamples);
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
        (check.eval)(corpus, &mut rec)
    }));
    let problem = match outcome {
        Ok(Ok(())) => None,
        Ok(Err(e)) => Some(e.to_string()),
        Err(payload) => Some(
            payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into()),
        ),
    };
    if let Some(message) = problem {
        rec.record(true, false, || serde_json::json!({ "error": message }));
    }
    Ok(CheckReport {
        id: check.id.to_string(),
        anchor: check.anchor.to_string(),
        instances: rec.instances,
        hypothesis_satisfied: rec.hypothesis,
        failed: rec.failed,
        failures: rec.failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn run_check(id: &str, corpus: &Corpus) -> Result<CheckReport> {
    evaluate(find_check(id)?, corpus)
}

/// Runs every check, in parallel, and returns reports sorted by id.
/// `jobs = 0` uses the default thread count.
pub fn run_all(corpus: &Corpus, jobs: usize) -> Result<Vec<CheckReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Parse {
            context: "jobs".into(),
            message: e.to_string(),
        })?;
    let mut reports = pool.install(|| {
        registry()
            .par_iter()
            .map(|c| evaluate(c, corpus))
            .collect::<Result<Vec<_>>>()
    })?;
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}

/// Checks, outside the registry, that are deliberately not implemented.
pub const OUT_OF_SCOPE: &[(&str, &str)] = &[
    (
        "def-inaccessible-point",
        "point-level inaccessibility needs completely regular frames; finite ones are Boolean",
    ),
    (
        "def-almost-inaccessible-point",
        "point-level almost inaccessibility; same reason",
    ),
    (
        "lemma-lemmainacc",
        "only used to transfer point-level inaccessibility from Tychonoff spaces",
    ),
    (
        "prop-vnd",
        "Tychonoff point inaccessibility; finite T1 completely regular spaces are discrete",
    ),
    (
        "prop-almost-inaccessible-point",
        "Tychonoff almost inaccessible points; same reason",
    ),
    (
        "ex-inacex",
        "points of completely regular locales; finite ones are Boolean",
    ),
    (
        "ex-exmnd",
        "Hausdorff spaces without isolated points are infinite",
    ),
    (
        "ex-remote-point",
        "remote points of the Stone-Čech remainder need infinite spaces",
    ),
    (
        "obs-hmnd-closed-maps",
        "informal remark that preservation of closedness would also be needed",
    ),
];

pub(crate) fn frame_json(f: &FiniteFrame) -> Value {
    serde_json::to_value(FrameDescription::of(f)).unwrap_or(Value::Null)
}

/// Sorted element indices; the frame description alongside gives the names.
pub(crate) fn sub_json(s: &Sublocale<'_>) -> Value {
    Value::from(s.to_vec())
}
