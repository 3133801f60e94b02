use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use localelab::formats::{parse_frame, parse_space, FrameDescription, SpaceDescription};
use localelab::generate::FrameGenerator;
use localelab::spatial::t0_spaces_up_to;
use localelab::theorems::{
    run_all, run_check, CheckReport, Corpus, CorpusConfig, MAX_POINTS_LIMIT, MAX_POSET_LIMIT,
    OUT_OF_SCOPE,
};
use localelab::{classify, ElementSet, FiniteFrame, FiniteSpace, Sublocale};

#[derive(Parser)]
#[command(
    name = "localelab",
    version,
    about = "Nowhere dense sublocales of finite frames"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the frames (and optionally spaces) of the corpus
    Generate(GenerateArgs),
    /// Classify sublocales of a frame, or subsets of a space
    Classify(ClassifyArgs),
    /// Run registered checks
    Check(CheckArgs),
    /// Run the whole registry and summarise the corpus
    Report(ReportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Caps {
    #[arg(long)]
    max_poset: Option<usize>,
    #[arg(long)]
    max_points: Option<usize>,
    #[arg(long)]
    max_map_size: Option<usize>,
    #[arg(long)]
    max_counterexamples: Option<usize>,
}

impl Caps {
    /// Defaults, then `LOCALELAB_CAPS`, then flags.
    fn config(&self) -> anyhow::Result<CorpusConfig> {
        let mut config = CorpusConfig::default();
        if let Ok(caps) = std::env::var("LOCALELAB_CAPS") {
            config.apply_overrides(&caps).context("LOCALELAB_CAPS")?;
        }
        let flags = [
            (self.max_poset, &mut config.max_poset),
            (self.max_points, &mut config.max_points),
            (self.max_map_size, &mut config.max_map_size),
            (self.max_counterexamples, &mut config.max_counterexamples),
        ];
        for (flag, slot) in flags {
            if let Some(v) = flag {
                *slot = v;
            }
        }
        if config.max_poset == 0 || config.max_map_size == 0 {
            bail!("caps must be positive");
        }
        config.validate()?;
        Ok(config)
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    caps: Caps,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, conflicts_with = "space", required_unless_present = "space")]
    frame: Option<PathBuf>,
    #[arg(long)]
    space: Option<PathBuf>,
    /// Comma-separated element names (frames) or point indices (spaces);
    /// omit to classify everything
    #[arg(long)]
    sublocale: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long = "id", required_unless_present = "all", conflicts_with = "all")]
    ids: Vec<String>,
    #[arg(long)]
    all: bool,
    /// Run against this frame alone instead of the generated corpus
    #[arg(long)]
    frame: Option<PathBuf>,
    #[command(flatten)]
    caps: Caps,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads; 0 picks the number of cores
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    caps: Caps,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Generate(args) => generate(&args),
        Command::Classify(args) => classify_cmd(&args),
        Command::Check(args) => check(&args),
        Command::Report(args) => report(&args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_frame(path: &Path) -> anyhow::Result<FiniteFrame> {
    Ok(parse_frame(&read(path)?, &path.display().to_string())?)
}

fn load_space(path: &Path) -> anyhow::Result<FiniteSpace> {
    Ok(parse_space(&read(path)?, &path.display().to_string())?)
}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn generate(args: &GenerateArgs) -> anyhow::Result<bool> {
    let config = args.caps.config()?;
    let generator = FrameGenerator::with_cap(MAX_POSET_LIMIT);
    for (i, frame) in generator
        .frames_from_posets_up_to(config.max_poset)?
        .iter()
        .enumerate()
    {
        let desc = FrameDescription::of(frame);
        match args.format {
            Format::Json => println!("{}", serde_json::to_string(&desc)?),
            Format::Text => {
                println!("# frame {i}, {} elements", frame.len());
                println!("elements: {}", serde_json::to_string(&desc.elements)?);
                println!("covers: {}\n", serde_json::to_string(&desc.covers)?);
            }
        }
    }
    if args.caps.max_points.is_some() {
        for (i, space) in t0_spaces_up_to(config.max_points, MAX_POINTS_LIMIT)?
            .iter()
            .enumerate()
        {
            let desc = SpaceDescription::of(space);
            match args.format {
                Format::Json => println!("{}", serde_json::to_string(&desc)?),
                Format::Text => {
                    println!("# space {i}");
                    println!("points: {}", desc.points);
                    println!("opens: {}\n", serde_json::to_string(&desc.opens)?);
                }
            }
        }
    }
    Ok(true)
}

fn classification_json(s: &Sublocale<'_>) -> anyhow::Result<Value> {
    let mut value = serde_json::to_value(classify(s)?)?;
    value["members"] = json!(s.to_vec());
    Ok(value)
}

fn print_classification(value: &Value, indent: &str) {
    let names: Vec<&str> = value["subject"]
        .as_array()
        .map(|a| a.iter().filter_map(Value::as_str).collect())
        .unwrap_or_default();
    println!("{indent}sublocale {{{}}}", names.join(", "));
    if let Some(flags) = value["flags"].as_object() {
        for (k, v) in flags {
            println!("{indent}  {k:<24} {v}");
        }
    }
    if let Some(witnesses) = value["witnesses"].as_object() {
        for (k, v) in witnesses {
            println!("{indent}  why not {k}: {}", v.as_str().unwrap_or_default());
        }
    }
}

fn split_list(text: &str) -> impl Iterator<Item = &str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn classify_cmd(args: &ClassifyArgs) -> anyhow::Result<bool> {
    let mut out = Vec::new();
    if let Some(path) = &args.frame {
        let frame = load_frame(path)?;
        let subjects = match &args.sublocale {
            Some(list) => {
                let mut set = ElementSet::default();
                for name in split_list(list) {
                    let e = frame
                        .index_of(name)
                        .with_context(|| format!("--sublocale: no element named `{name}`"))?;
                    set.insert(e);
                }
                let s = frame.generated_sublocale(set);
                if s.members() != set {
                    eprintln!(
                        "warning: completed to the sublocale {{{}}}",
                        s.member_names().join(", ")
                    );
                }
                vec![s]
            }
            None => frame.enumerate_sublocales()?,
        };
        for s in &subjects {
            out.push(classification_json(s)?);
        }
    } else if let Some(path) = &args.space {
        let space = load_space(path)?;
        let loc = space.locale()?;
        let subsets: Vec<u32> = match &args.sublocale {
            Some(list) => {
                let mut mask = 0u32;
                for p in split_list(list) {
                    let i: usize = p
                        .parse()
                        .ok()
                        .filter(|&i| i < space.points())
                        .with_context(|| format!("--sublocale: `{p}` is not a point index"))?;
                    mask |= 1 << i;
                }
                vec![mask]
            }
            None => space.subsets().collect(),
        };
        for a in subsets {
            let mut flags = serde_json::Map::new();
            flags.insert("open".into(), json!(space.is_open(a)));
            flags.insert("closed".into(), json!(space.is_closed(a)));
            flags.insert("nowhere_dense".into(), json!(space.is_nowhere_dense(a)));
            flags.insert("maximal_nwd".into(), json!(space.is_maximal_nwd(a)));
            if space.is_closed(a) {
                flags.insert("hmnd".into(), json!(space.is_hmnd(a)));
            }
            let points: Vec<usize> = (0..space.points()).filter(|i| a >> i & 1 == 1).collect();
            out.push(json!({
                "subset": points,
                "subsetFlags": flags,
                "induced": classification_json(&loc.induced(a))?,
            }));
        }
    }
    match args.format {
        Format::Json if out.len() == 1 => print_json(&out[0])?,
        Format::Json => print_json(&out)?,
        Format::Text => {
            for value in &out {
                if let Some(points) = value.get("subset") {
                    println!("subset {points}");
                    if let Some(flags) = value["subsetFlags"].as_object() {
                        for (k, v) in flags {
                            println!("  {k:<24} {v}");
                        }
                    }
                    print_classification(&value["induced"], "  ");
                } else {
                    print_classification(value, "");
                }
            }
        }
    }
    Ok(true)
}

fn print_reports(reports: &[CheckReport]) {
    for r in reports {
        let tag = if r.passed() { "PASS" } else { "FAIL" };
        println!(
            "{tag} {:<34} instances {:>7}  hypothesis {:>7}  failed {:>5}  {:>6} ms",
            r.id, r.instances, r.hypothesis_satisfied, r.failed, r.elapsed_ms
        );
        for f in &r.failures {
            println!("    #{} {}", f.instance, f.witness);
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{} passed, {failed} failed", reports.len() - failed);
}

fn check(args: &CheckArgs) -> anyhow::Result<bool> {
    let config = args.caps.config()?;
    let corpus = match &args.frame {
        Some(path) => Corpus::from_frames(vec![load_frame(path)?]),
        None => Corpus::build(&config)?,
    }
    .with_max_counterexamples(config.max_counterexamples);
    let reports = if args.all {
        run_all(&corpus, args.jobs)?
    } else {
        args.ids
            .iter()
            .map(|id| run_check(id, &corpus))
            .collect::<localelab::Result<Vec<_>>>()?
    };
    match args.format {
        Format::Json => print_json(&reports)?,
        Format::Text => print_reports(&reports),
    }
    Ok(reports.iter().all(CheckReport::passed))
}

fn report(args: &ReportArgs) -> anyhow::Result<bool> {
    let config = args.caps.config()?;
    let corpus = Corpus::build(&config)?;
    let reports = run_all(&corpus, args.jobs)?;
    match args.format {
        Format::Json => print_json(&json!({
            "caps": config,
            "corpus": {
                "frames": corpus.frames().len(),
                "spaces": corpus.spaces().len(),
                "mapFrames": corpus.map_frames().len(),
                "maps": corpus.map_count(),
            },
            "checks": reports,
            "outOfScope": OUT_OF_SCOPE
                .iter()
                .map(|(id, why)| json!({"id": id, "reason": why}))
                .collect::<Vec<_>>(),
        }))?,
        Format::Text => {
            println!(
                "corpus: {} frames, {} spaces, {} maps between {} frames",
                corpus.frames().len(),
                corpus.spaces().len(),
                corpus.map_count(),
                corpus.map_frames().len()
            );
            print_reports(&reports);
            println!("not checked:");
            for (id, why) in OUT_OF_SCOPE {
                println!("  {id}: {why}");
            }
        }
    }
    Ok(reports.iter().all(CheckReport::passed))
}
