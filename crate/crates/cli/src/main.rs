use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use csr_core::generate::{random_instance, GenParams, ReprKind, RNG_NAME};
use csr_core::interval::{sequence_for_verdict, DistanceCase};
use csr_core::oracle::{oracle_connectivity_report, OracleOutcome};
use csr_core::reductions::{isr_to_split_csr, oct_to_colorable_set, spr_to_cocomp_csr};
use csr_core::split::{split_tar_witness_with_cap, split_tj_reachable, DEFAULT_COLOR_CAP};
use csr_core::{
    oracle_distance, parse_instance, parse_reduction_source, parse_sequence, render_instance,
    render_sequence, shortest_tj_sequence, tar_distance, tj_distance, verify_sequence, Error,
    Instance, OracleLimits, ReconSequence, Representation, Result, Rule, VertexSet,
};

#[derive(Parser)]
#[command(
    name = "csr",
    version,
    about = "Reconfiguration of c-colorable vertex sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide reachability; print the distance when it is known
    Solve {
        instance: PathBuf,
        /// Write a reconfiguration sequence to --out
        #[arg(long, requires = "out")]
        emit_sequence: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Print the exact distance (`inf` if unreachable)
    Distance {
        instance: PathBuf,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Check a sequence file against an instance
    Verify {
        instance: PathBuf,
        sequence: PathBuf,
    },
    /// Brute-force distance by breadth-first search
    Oracle {
        instance: PathBuf,
        /// Print component sizes and diameters of the whole state space instead
        #[arg(long)]
        report: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Build a reduced instance and a sidecar `<out>.meta`
    Reduce {
        #[arg(value_enum)]
        from: Reduction,
        source: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Rule of the emitted instance (default: tj for isr and tar for oct, ts for spr)
        #[arg(long)]
        rule: Option<Rule>,
        /// Color budget (spr, oct); overrides the source's `c:`
        #[arg(long)]
        c: Option<usize>,
        /// Transversal size (oct); overrides the source's `k:`
        #[arg(long)]
        k: Option<usize>,
    },
    /// Write a seeded random instance
    Gen {
        #[arg(long, default_value = "interval")]
        repr: ReprKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        c: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "tar")]
        rule: Rule,
        /// Longest interval (interval graphs)
        #[arg(long, default_value_t = 8)]
        width: usize,
        /// Edge probability (split and edge-list graphs)
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Clone, Copy)]
struct LimitArgs {
    /// Largest vertex count the oracle accepts
    #[arg(long, default_value_t = OracleLimits::default().max_n)]
    max_n: usize,
    /// Largest number of oracle states
    #[arg(long, default_value_t = OracleLimits::default().max_states)]
    max_states: usize,
    /// Largest c for the split meta-graph
    #[arg(long, default_value_t = DEFAULT_COLOR_CAP)]
    cap: usize,
}

impl LimitArgs {
    fn oracle(&self) -> OracleLimits {
        OracleLimits {
            max_n: self.max_n,
            max_states: self.max_states,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduction {
    /// Independent set reconfiguration to a split graph
    Isr,
    /// Shortest path reconfiguration to a co-comparability graph
    Spr,
    /// Odd cycle transversal to colorable set
    Oct,
}

enum Answer {
    Distance(usize),
    Reachable,
    Unreachable(&'static str),
}

impl Answer {
    fn print(&self) -> ExitCode {
        match self {
            Answer::Distance(d) => println!("{d}"),
            Answer::Reachable => println!("reachable"),
            Answer::Unreachable(why) => println!("{why}"),
        }
        match self {
            Answer::Unreachable(_) => ExitCode::from(1),
            _ => ExitCode::SUCCESS,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Instance> {
    parse_instance(&read(path)?)
}

fn oracle(inst: &Instance, limits: &OracleLimits) -> Result<OracleOutcome> {
    oracle_distance(
        &inst.repr,
        inst.c,
        &inst.source,
        &inst.target,
        inst.k,
        inst.rule,
        limits,
    )
}

/// Distance (if known) and a sequence (if requested and available).
fn solve(
    inst: &Instance,
    limits: &LimitArgs,
    want_sequence: bool,
) -> Result<(Answer, Option<ReconSequence>)> {
    let (s, t, c, k) = (&inst.source, &inst.target, inst.c, inst.k);
    match (&inst.repr, inst.rule) {
        (Representation::Intervals(model), Rule::Tar) => {
            let verdict = tar_distance(model, c, s, t, k)?;
            let Some(d) = verdict.distance else {
                return Ok((Answer::Unreachable("unreachable (locked)"), None));
            };
            let seq = want_sequence
                .then(|| sequence_for_verdict(model, c, s, t, k, &verdict))
                .flatten();
            Ok((Answer::Distance(d), seq))
        }
        (Representation::Intervals(model), Rule::Tj) => {
            let Some(d) = tj_distance(model, c, s, t)? else {
                return Ok((Answer::Unreachable("unreachable (locked)"), None));
            };
            let seq = if want_sequence {
                shortest_tj_sequence(model, c, s, t)?
            } else {
                None
            };
            Ok((Answer::Distance(d), seq))
        }
        (Representation::Split(model), Rule::Tar) => {
            match split_tar_witness_with_cap(model, c, s, t, k, limits.cap)? {
                Some(seq) => Ok((Answer::Reachable, Some(seq))),
                None => Ok((Answer::Unreachable("unreachable"), None)),
            }
        }
        (Representation::Split(model), Rule::Tj) if !want_sequence => {
            match split_tj_reachable(model, c, s, t, limits.cap)? {
                true => Ok((Answer::Reachable, None)),
                false => Ok((Answer::Unreachable("unreachable"), None)),
            }
        }
        _ => {
            let out = oracle(inst, &limits.oracle())?;
            match out.distance {
                Some(d) => Ok((Answer::Distance(d), out.sequence)),
                None => Ok((Answer::Unreachable("unreachable"), None)),
            }
        }
    }
}

fn distance(inst: &Instance, limits: &LimitArgs) -> Result<ExitCode> {
    let found = match (&inst.repr, inst.rule) {
        (Representation::Intervals(model), Rule::Tar) => {
            let verdict = tar_distance(model, inst.c, &inst.source, &inst.target, inst.k)?;
            let d = verdict
                .distance
                .map_or("inf".to_string(), |d| d.to_string());
            println!("{d} {}", verdict.case.as_str());
            verdict.case != DistanceCase::LockedInG
        }
        (Representation::Intervals(model), Rule::Tj) => {
            let d = tj_distance(model, inst.c, &inst.source, &inst.target)?;
            println!("{}", d.map_or("inf".to_string(), |d| d.to_string()));
            d.is_some()
        }
        _ => {
            let d = oracle(inst, &limits.oracle())?.distance;
            println!("{}", d.map_or("inf".to_string(), |d| d.to_string()));
            d.is_some()
        }
    };
    Ok(if found {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn reduce(
    from: Reduction,
    source: &Path,
    out: &Path,
    rule: Option<Rule>,
    c: Option<usize>,
    k: Option<usize>,
) -> Result<()> {
    let src = parse_reduction_source(&read(source)?)?;
    let mut meta = String::new();
    let text = match from {
        Reduction::Isr => {
            let (i, i2) = src
                .independent
                .ok_or_else(|| Error::Input("isr source needs `I:` and `I2:`".into()))?;
            let red = isr_to_split_csr(&src.graph, &i, &i2)?;
            let inst = red.instance(rule.unwrap_or(Rule::Tj))?;
            writeln!(meta, "reduction: isr").unwrap();
            writeln!(meta, "source-n: {}", red.source_vertices).unwrap();
            for (j, (a, b)) in red.edges.iter().enumerate() {
                writeln!(meta, "edge: {} {a} {b}", red.source_vertices + j).unwrap();
            }
            render_instance(&inst)
        }
        Reduction::Spr => {
            let missing = || Error::Input("spr source needs `s:`, `t:`, `P:` and `P2:`".into());
            let (s, t) = (src.s.ok_or_else(missing)?, src.t.ok_or_else(missing)?);
            let (p, p2) = src.paths.ok_or_else(missing)?;
            let c = c
                .or(src.c)
                .ok_or_else(|| Error::Input("spr needs c".into()))?;
            let red = spr_to_cocomp_csr(&src.graph, s, t, &p, &p2, c)?;
            let inst = red.instance(rule.unwrap_or(Rule::Ts))?;
            writeln!(meta, "reduction: spr").unwrap();
            writeln!(meta, "length: {}", red.length).unwrap();
            for (i, layer) in red.layers.iter().enumerate() {
                for &v in layer {
                    writeln!(
                        meta,
                        "vertex: {v} source {} layer {i}",
                        red.origin[v].unwrap()
                    )
                    .unwrap();
                }
            }
            for (i, clique) in red.padding.iter().enumerate() {
                for &v in clique {
                    writeln!(meta, "pad: {v} layer {i}").unwrap();
                }
            }
            let order: Vec<String> = red.order.iter().map(|v| v.to_string()).collect();
            writeln!(meta, "order: {}", order.join(" ")).unwrap();
            render_instance(&inst)
        }
        Reduction::Oct => {
            let c = c
                .or(src.c)
                .ok_or_else(|| Error::Input("oct needs c".into()))?;
            let k = k
                .or(src.k)
                .ok_or_else(|| Error::Input("oct needs k".into()))?;
            let red = oct_to_colorable_set(&src.graph, c, k)?;
            let n = red.graph.n();
            let inst = Instance::new(
                Representation::Edges(red.graph.clone()),
                rule.unwrap_or(Rule::Tar),
                c,
                0,
                VertexSet::new(n),
                VertexSet::new(n),
            )?;
            writeln!(meta, "reduction: oct").unwrap();
            writeln!(meta, "source-n: {}", red.original).unwrap();
            writeln!(meta, "target: {}", red.target_size).unwrap();
            for (i, clique) in red.padding.iter().enumerate() {
                for &v in clique {
                    writeln!(meta, "pad: {v} clique {i}").unwrap();
                }
            }
            render_instance(&inst)
        }
    };
    write(out, &text)?;
    let mut meta_path = out.as_os_str().to_owned();
    meta_path.push(".meta");
    write(Path::new(&meta_path), &meta)?;
    println!("{}", out.display());
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            instance,
            emit_sequence,
            out,
            limits,
        } => {
            let inst = load(&instance)?;
            let (answer, seq) = solve(&inst, &limits, emit_sequence)?;
            if emit_sequence {
                let out = out.expect("clap enforces --out");
                match (&answer, seq) {
                    (Answer::Unreachable(_), _) => {}
                    (_, Some(seq)) => write(&out, &render_sequence(&seq))?,
                    (_, None) => {
                        eprintln!("no sequence available for this representation and rule")
                    }
                }
            }
            Ok(answer.print())
        }
        Command::Distance { instance, limits } => distance(&load(&instance)?, &limits),
        Command::Verify { instance, sequence } => {
            let inst = load(&instance)?;
            let seq = parse_sequence(&read(&sequence)?, inst.n())?;
            match verify_sequence(&inst, &seq)? {
                Ok(()) => {
                    println!("ok");
                    Ok(ExitCode::SUCCESS)
                }
                Err(violation) => {
                    println!("violation: {violation}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Oracle {
            instance,
            report,
            limits,
        } => {
            let inst = load(&instance)?;
            if report {
                let rep = oracle_connectivity_report(
                    &inst.repr,
                    inst.c,
                    inst.k,
                    inst.rule,
                    &limits.oracle(),
                )?;
                println!("states {} components {}", rep.states, rep.components.len());
                for comp in &rep.components {
                    println!("size {} diameter {}", comp.size, comp.diameter);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let d = oracle(&inst, &limits.oracle())?.distance;
            println!("{}", d.map_or("inf".to_string(), |d| d.to_string()));
            Ok(if d.is_some() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Reduce {
            from,
            source,
            out,
            rule,
            c,
            k,
        } => {
            reduce(from, &source, &out, rule, c, k)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            repr,
            n,
            c,
            k,
            seed,
            rule,
            width,
            density,
            out,
        } => {
            let params = GenParams {
                kind: repr,
                n,
                c,
                k,
                rule,
                width,
                density,
                seed,
            };
            let inst = random_instance(&params)?;
            let text = format!(
                "# gen: rng={RNG_NAME} seed={seed} repr={} n={n} c={c} k={k} rule={rule} width={width} density={density}\n{}",
                inst.repr.kind(),
                render_instance(&inst)
            );
            match out {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
