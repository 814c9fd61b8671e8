//! `causal-modal` command line.
//!
//! Exit codes: 0 success or property holds, 1 counterexample or certified
//! failure, 2 usage or input error, 3 validity budget exceeded.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use causal_modal::correspondence::{fo_check, UnsupportedAxiom};
use causal_modal::formula::{parse_formula, Formula};
use causal_modal::io::{
    read_causal_frame, read_frame, read_model, write_points, FrameFile, IoError,
};
use causal_modal::kripke::{
    aaf_cluster_criterion, chains_of_clusters, check_property, clusters, format_set,
    ClusterCriterion, Frame, FrameProperty,
};
use causal_modal::ladder::{
    causal_iff_after_irreflexive, check_ladder_implications, classify, fixture_from, fixtures_from,
    DistinguishOn, FixtureBody, LoopPolicy, NOT_FRAME_CHECKABLE,
};
use causal_modal::minkowski::sample::{point_names, random_points};
use causal_modal::minkowski::{
    aa2f_witness_2d, aaf_witness, no_witness_certificate, relate, same_point, sample_frame,
    with_loop_partners, MinkPoint, Space, WitnessError,
};
use causal_modal::random::stream;
use causal_modal::regress::{check_manifest, run, RegressConfig};
use causal_modal::semantics::{
    by_left, coarsest_bisimulation, frame_validates, is_bisimulation, resolve_pairs, truth_set,
    DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "causal-modal",
    version,
    about = "Modal logic of causal structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormulaArg {
    /// Formula text, e.g. `<>p -> <><>p`.
    #[arg(long)]
    formula: Option<String>,
    /// Named axiom, e.g. `@aaf`.
    #[arg(long)]
    axiom: Option<String>,
}

#[derive(Args)]
struct PointArgs {
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: Option<String>,
    #[arg(long)]
    y1: Option<String>,
    #[arg(long)]
    y2: Option<String>,
    #[arg(long)]
    z: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    Aaf,
    Aa2f,
}

#[derive(Clone, Copy, ValueEnum)]
enum On {
    Chron,
    After,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print it back with its atoms.
    Parse {
        #[command(flatten)]
        f: FormulaArg,
    },
    /// Frame validity by valuation enumeration.
    Validate {
        #[arg(long)]
        frame: PathBuf,
        #[command(flatten)]
        f: FormulaArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// First-order correspondent of a named axiom.
    FoCheck {
        #[arg(long)]
        frame: PathBuf,
        #[arg(long)]
        axiom: String,
    },
    /// Frame properties, or truth of a formula in a model.
    Check {
        #[arg(long, conflicts_with = "model")]
        frame: Option<PathBuf>,
        #[arg(long)]
        model: Option<PathBuf>,
        /// Property name; repeatable. Defaults to every property.
        #[arg(long)]
        property: Vec<String>,
        #[command(flatten)]
        f: FormulaArg,
        #[arg(long)]
        world: Option<String>,
    },
    /// Clusters, chains of clusters and the after-formula cluster criterion.
    Clusters {
        #[arg(long)]
        frame: PathBuf,
        #[arg(long)]
        world: Option<String>,
    },
    /// Check a candidate bisimulation and print the coarsest one.
    Bisim {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Pairs `a:b,c:d`.
        #[arg(long)]
        pairs: Option<String>,
    },
    /// Causal ladder flags of a causal frame.
    Classify {
        #[arg(long)]
        frame: PathBuf,
        #[arg(long, value_enum, default_value_t = On::Chron)]
        distinguish_on: On,
        /// Skip the loop-property check on load.
        #[arg(long)]
        no_loop_check: bool,
    },
    /// Causal relations between two points.
    Relate {
        #[arg(long)]
        space: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Construct a witness for the after formulas in Minkowski space.
    Witness {
        #[arg(long, value_enum)]
        kind: WitnessKind,
        #[arg(long, default_value = "mink:1")]
        space: String,
        #[command(flatten)]
        p: PointArgs,
    },
    /// Certify that three null rays admit no after-2 witness.
    CertifyNoWitness {
        #[command(flatten)]
        p: PointArgs,
    },
    /// Sample points of a space and write their causal frame.
    Sample {
        #[arg(long)]
        space: String,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the sampled points.
        #[arg(long)]
        points_out: Option<PathBuf>,
        /// Do not add loop partners on cylinders.
        #[arg(long)]
        no_loop_partners: bool,
    },
    /// List, export or check the catalog fixtures.
    Fixtures {
        #[arg(long)]
        name: Option<String>,
        /// Directory whose files override the built-in fixtures.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Write each fixture's frame file into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
        /// Check every manifest.
        #[arg(long)]
        check: bool,
    },
    /// Run the acceptance suite.
    Regress {
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

/// Exit status with its report.
struct Outcome {
    code: u8,
    out: String,
}

struct Failure {
    code: u8,
    msg: String,
}

type Res = Result<Outcome, Failure>;

fn usage(msg: impl ToString) -> Failure {
    Failure {
        code: 2,
        msg: msg.to_string(),
    }
}

fn done(code: u8, out: String) -> Res {
    Ok(Outcome { code, out })
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn io_err(e: IoError) -> Failure {
    usage(e)
}

fn formula(f: &FormulaArg) -> Result<Formula, Failure> {
    let text = match (&f.formula, &f.axiom) {
        (Some(t), None) => t.clone(),
        (None, Some(a)) if a.starts_with('@') => a.clone(),
        (None, Some(a)) => format!("@{a}"),
        _ => return Err(usage("give exactly one of --formula or --axiom")),
    };
    parse_formula(&text).map_err(usage)
}

fn point(s: &Option<String>, name: &str) -> Result<MinkPoint, Failure> {
    let s = s
        .as_deref()
        .ok_or_else(|| usage(format!("--{name} is required")))?;
    MinkPoint::parse(s).map_err(usage)
}

fn space(s: &str) -> Result<Space, Failure> {
    Space::from_str(s).map_err(usage)
}

fn world(frame: &Frame, name: &str) -> Result<usize, Failure> {
    frame
        .id(name)
        .ok_or_else(|| usage(format!("unknown world {name:?}")))
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn cmd_validate(frame: &Path, f: &FormulaArg, budget: u64) -> Res {
    let frame = read_frame(&read(frame)?).map_err(io_err)?;
    let f = formula(f)?;
    match frame_validates(&frame, &f, budget) {
        Ok(v) => done(u8::from(!v.is_valid()), v.render(&frame) + "\n"),
        Err(e) => Err(Failure {
            code: 3,
            msg: e.to_string(),
        }),
    }
}

fn cmd_fo_check(frame: &Path, axiom: &str) -> Res {
    let frame = read_frame(&read(frame)?).map_err(io_err)?;
    let name = axiom.trim_start_matches('@').parse().map_err(usage)?;
    let v = fo_check(&frame, name).map_err(|e: UnsupportedAxiom| usage(e))?;
    done(u8::from(!v.holds()), v.render(&frame) + "\n")
}

fn cmd_check(
    frame: &Option<PathBuf>,
    model: &Option<PathBuf>,
    props: &[String],
    f: &FormulaArg,
    at: &Option<String>,
) -> Res {
    if f.formula.is_some() || f.axiom.is_some() {
        let path = model
            .as_ref()
            .or(frame.as_ref())
            .ok_or_else(|| usage("--model is required"))?;
        let m = read_model(&read(path)?).map_err(io_err)?;
        let f = formula(f)?;
        let set = truth_set(&m, &f);
        let mut out = format!("truth_set={}\n", format_set(&m.frame, &set));
        let holds = match at {
            Some(w) => set.contains(world(&m.frame, w)?),
            None => set.count_ones(..) == m.frame.len(),
        };
        writeln!(out, "holds={}", flag(holds)).unwrap();
        return done(u8::from(!holds), out);
    }
    let path = frame
        .as_ref()
        .or(model.as_ref())
        .ok_or_else(|| usage("--frame is required"))?;
    let frame = read_frame(&read(path)?).map_err(io_err)?;
    let chosen: Vec<FrameProperty> = if props.is_empty() {
        FrameProperty::ALL.to_vec()
    } else {
        props
            .iter()
            .map(|p| p.parse().map_err(usage))
            .collect::<Result<_, _>>()?
    };
    let mut out = String::new();
    let mut all = true;
    for p in chosen {
        let v = check_property(&frame, p);
        all &= v.holds();
        writeln!(out, "{}={}", p.as_str(), v.render(&frame)).unwrap();
    }
    done(u8::from(!all), out)
}

fn cmd_clusters(frame: &Path, at: &Option<String>) -> Res {
    let frame = read_frame(&read(frame)?).map_err(io_err)?;
    let dec = clusters(&frame).map_err(usage)?;
    let mut out = String::new();
    for (i, c) in dec.clusters.iter().enumerate() {
        let names: Vec<&str> = c.iter().map(|&w| frame.name(w)).collect();
        writeln!(
            out,
            "cluster={i} worlds={{{}}} degenerate={}",
            names.join(","),
            flag(dec.degenerate[i])
        )
        .unwrap();
    }
    let roots: Vec<usize> = match at {
        Some(w) => vec![world(&frame, w)?],
        None => frame.worlds().collect(),
    };
    for x in roots {
        for c in chains_of_clusters(&frame, x).map_err(usage)? {
            writeln!(out, "chain world={} {}", frame.name(x), c.render(&frame)).unwrap();
        }
    }
    let crit = aaf_cluster_criterion(&frame).map_err(usage)?;
    match &crit {
        ClusterCriterion::Holds => out.push_str("aaf_cluster_criterion=HOLDS\n"),
        ClusterCriterion::Violated {
            x,
            successor,
            y1,
            y2,
            uncovered,
        } => {
            let s: Vec<&str> = successor.iter().map(|&w| frame.name(w)).collect();
            writeln!(
                out,
                "aaf_cluster_criterion=VIOLATED x={} successor={{{}}} y1={} y2={} uncovered={}",
                frame.name(*x),
                s.join(","),
                frame.name(*y1),
                frame.name(*y2),
                frame.name(*uncovered)
            )
            .unwrap();
        }
    }
    done(u8::from(!crit.holds()), out)
}

fn cmd_bisim(left: &Path, right: &Path, pairs: &Option<String>) -> Res {
    let l = read_model(&read(left)?).map_err(io_err)?;
    let r = read_model(&read(right)?).map_err(io_err)?;
    let mut out = String::new();
    let mut code = 0;
    if let Some(text) = pairs {
        let named: Vec<(String, String)> = text
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|p| {
                p.split_once(':')
                    .map(|(a, b)| (a.to_string(), b.to_string()))
            })
            .collect::<Option<_>>()
            .ok_or_else(|| usage("pairs are written a:b,c:d"))?;
        let z = resolve_pairs(&l, &r, &named).map_err(|w| usage(format!("unknown world {w:?}")))?;
        let v = is_bisimulation(&l, &r, &z);
        code = u8::from(!v.holds());
        writeln!(out, "z={}", v.render(&l, &r)).unwrap();
    }
    match coarsest_bisimulation(&l, &r) {
        None => out.push_str("coarsest=EMPTY\n"),
        Some(b) => {
            for (a, cs) in by_left(&b) {
                let names: Vec<&str> = cs.iter().map(|&c| r.frame.name(c)).collect();
                writeln!(
                    out,
                    "coarsest {} ~ {{{}}}",
                    l.frame.name(a),
                    names.join(",")
                )
                .unwrap();
            }
        }
    }
    done(code, out)
}

fn cmd_classify(frame: &Path, on: On, no_loop_check: bool) -> Res {
    let policy = if no_loop_check {
        LoopPolicy::Ignore
    } else {
        LoopPolicy::Require
    };
    let cf = read_causal_frame(&read(frame)?, policy).map_err(io_err)?;
    let on = match on {
        On::Chron => DistinguishOn::Chron,
        On::After => DistinguishOn::After,
    };
    let pos = classify(&cf, on);
    let mut out = String::new();
    for (name, v) in pos.flags() {
        writeln!(out, "{name}={}", flag(v)).unwrap();
    }
    for name in NOT_FRAME_CHECKABLE {
        writeln!(out, "{name}=not-frame-checkable").unwrap();
    }
    let eq = causal_iff_after_irreflexive(&cf);
    writeln!(
        out,
        "caus_antisymmetric={} after_irreflexive={} equivalent={}",
        flag(eq.caus_antisymmetric),
        flag(eq.after_irreflexive),
        flag(eq.equivalent())
    )
    .unwrap();
    let broken = check_ladder_implications(&pos);
    for imp in &broken {
        writeln!(
            out,
            "implication {}=>{} VIOLATED",
            imp.premise, imp.conclusion
        )
        .unwrap();
    }
    writeln!(
        out,
        "implications={}",
        if broken.is_empty() {
            "HOLD"
        } else {
            "VIOLATED"
        }
    )
    .unwrap();
    done(u8::from(!broken.is_empty()), out)
}

fn cmd_relate(sp: &str, x: &str, y: &str) -> Res {
    let sp = space(sp)?;
    let (x, y) = (point(&Some(x.into()), "x")?, point(&Some(y.into()), "y")?);
    let v = relate(&sp, &x, &y).map_err(usage)?;
    let mut out = format!("{}\n", v.kind(same_point(&sp, &x, &y)));
    for (k, b) in [
        ("chron", v.chron),
        ("caus", v.caus),
        ("horismos", v.horismos),
        ("after", v.after),
    ] {
        writeln!(out, "{k}={}", flag(b)).unwrap();
    }
    done(0, out)
}

fn witness_err(e: WitnessError) -> Failure {
    match e {
        WitnessError::PreconditionFailed(_) => usage(e),
        WitnessError::WitnessSearchExhausted(_) => Failure {
            code: 1,
            msg: e.to_string(),
        },
    }
}

fn cmd_witness(kind: WitnessKind, sp: &str, p: &PointArgs) -> Res {
    let x = point(&Some(p.x.clone()), "x")?;
    let (y1, y2, z) = (point(&p.y1, "y1")?, point(&p.y2, "y2")?, point(&p.z, "z")?);
    let t = match kind {
        WitnessKind::Aaf => aaf_witness(&space(sp)?, &x, &point(&p.y, "y")?, &y1, &y2, &z),
        WitnessKind::Aa2f => aa2f_witness_2d(&x, &y1, &y2, &z),
    }
    .map_err(witness_err)?;
    done(0, format!("t={t}\n"))
}

fn cmd_certify(p: &PointArgs) -> Res {
    let x = point(&Some(p.x.clone()), "x")?;
    let cert = no_witness_certificate(
        &x,
        &point(&p.y1, "y1")?,
        &point(&p.y2, "y2")?,
        &point(&p.z, "z")?,
    )
    .map_err(witness_err)?;
    done(1, cert.render().join("\n") + "\n")
}

fn cmd_sample(
    sp: &str,
    count: usize,
    seed: u64,
    out: &Option<PathBuf>,
    points_out: &Option<PathBuf>,
    bare: bool,
) -> Res {
    let sp = space(sp)?;
    let mut rng = stream(seed, 0);
    let mut pts = random_points(&mut rng, &sp, count);
    if let (Space::Cylinder(c), false) = (&sp, bare) {
        pts = with_loop_partners(c, &pts);
    }
    let cf = sample_frame(&sp, &pts).map_err(usage)?;
    let json = FrameFile::from_causal(&cf).to_json() + "\n";
    let mut report = String::new();
    for (name, p) in point_names(pts.len()).iter().zip(&pts) {
        writeln!(report, "{name}={p}").unwrap();
    }
    if let Some(path) = points_out {
        write(path, &(write_points(&pts) + "\n"))?;
    }
    match out {
        Some(path) => {
            write(path, &json)?;
            writeln!(
                report,
                "worlds={} chron_pairs={} after_pairs={}",
                cf.len(),
                cf.chron().pair_count(),
                cf.after().pair_count()
            )
            .unwrap();
            done(0, report)
        }
        None => done(0, json),
    }
}

fn cmd_fixtures(
    name: &Option<String>,
    dir: &Option<PathBuf>,
    export: &Option<PathBuf>,
    check: bool,
) -> Res {
    let dir = dir.as_deref();
    let all = match name {
        Some(n) => vec![fixture_from(n, dir).map_err(usage)?],
        None => fixtures_from(dir).map_err(usage)?,
    };
    let mut out = String::new();
    let mut bad = 0;
    for fx in &all {
        writeln!(
            out,
            "fixture={} kind={} worlds={} description=\"{}\"",
            fx.name,
            fx.kind(),
            fx.frame().len(),
            fx.description
        )
        .unwrap();
        if check {
            let miss = check_manifest(fx);
            bad += miss.len();
            for m in &miss {
                writeln!(out, "  fail {m}").unwrap();
            }
        }
        if let Some(d) = export {
            let file = match &fx.body {
                FixtureBody::Frame(f) => FrameFile::from_frame(f),
                FixtureBody::Model(m) => FrameFile::from_model(m),
                FixtureBody::Causal(cf) | FixtureBody::Sample { frame: cf, .. } => {
                    FrameFile::from_causal(cf)
                }
                FixtureBody::Bisim { left, right, .. } => {
                    write(
                        &d.join(format!("{}_right.json", fx.name)),
                        &(FrameFile::from_model(right).to_json() + "\n"),
                    )?;
                    FrameFile::from_model(left)
                }
            };
            write(
                &d.join(format!("{}.json", fx.name)),
                &(file.to_json() + "\n"),
            )?;
        }
    }
    if check {
        writeln!(out, "manifest_failures={bad}").unwrap();
    }
    done(u8::from(bad > 0), out)
}

fn cmd_regress(only: &Option<String>, seed: u64, dir: &Option<PathBuf>) -> Res {
    let cfg = RegressConfig {
        seed,
        only: only.clone(),
        fixtures_dir: dir.clone(),
    };
    let report =
        run(&cfg).map_err(|e| usage(format!("{e}; criteria are 1-9, their names, or groups")))?;
    done(u8::from(!report.passed()), report.render())
}

fn dispatch(cli: &Cli) -> Res {
    match &cli.command {
        Command::Parse { f } => {
            let f = formula(f)?;
            let atoms: BTreeSet<String> = f.atoms();
            let atoms: Vec<&str> = atoms.iter().map(String::as_str).collect();
            done(
                0,
                format!(
                    "{f}\natoms={{{}}}\nmodal_depth={}\n",
                    atoms.join(","),
                    f.modal_depth()
                ),
            )
        }
        Command::Validate { frame, f, budget } => cmd_validate(frame, f, *budget),
        Command::FoCheck { frame, axiom } => cmd_fo_check(frame, axiom),
        Command::Check {
            frame,
            model,
            property,
            f,
            world,
        } => cmd_check(frame, model, property, f, world),
        Command::Clusters { frame, world } => cmd_clusters(frame, world),
        Command::Bisim { left, right, pairs } => cmd_bisim(left, right, pairs),
        Command::Classify {
            frame,
            distinguish_on,
            no_loop_check,
        } => cmd_classify(frame, *distinguish_on, *no_loop_check),
        Command::Relate { space, x, y } => cmd_relate(space, x, y),
        Command::Witness { kind, space, p } => cmd_witness(*kind, space, p),
        Command::CertifyNoWitness { p } => cmd_certify(p),
        Command::Sample {
            space,
            count,
            seed,
            out,
            points_out,
            no_loop_partners,
        } => cmd_sample(space, *count, *seed, out, points_out, *no_loop_partners),
        Command::Fixtures {
            name,
            fixtures,
            export,
            check,
        } => cmd_fixtures(name, fixtures, export, *check),
        Command::Regress {
            only,
            seed,
            fixtures,
        } => cmd_regress(only, *seed, fixtures),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            print!("{}", o.out);
            ExitCode::from(o.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
