//! Command-line front end: thin adapters over the library. Every output
//! is byte-identical to the library values under the documented formats;
//! `--json` switches each subcommand to its JSON schema.

use std::fmt::Write as FmtWrite;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cfperm::bijections::{
    cycle_closures, ds_forward, ds_history, ds_inverse, ds_variant_forward, ds_variant_history,
    ds_variant_inverse, fz_forward, fz_history, fz_inverse, fz_sets, HistoryStep,
};
use cfperm::cfrac::{
    expand, factorials, genocchi, median_from_genocchi, median_genocchi, CfSpec,
};
use cfperm::paths::{LabelledPath, PathKind};
use cfperm::perm::{d_permutations, permutations, DPermClass, Permutation};
use cfperm::poly::MultiPoly;
use cfperm::stats::stat_vector;
use cfperm::theorems::{verify, TheoremId};

#[derive(Parser)]
#[command(name = "cfperm", about = "Permutation statistics, bijections and continued fractions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Bijection {
    /// Foata–Zeilberger: permutations ↔ labelled 3-coloured Motzkin paths.
    Fz,
    /// Deb–Sokal: D-permutations ↔ labelled almost-Dyck paths.
    Ds,
    /// Variant Deb–Sokal, with value-based inversion tables.
    Dsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Fwd,
    Inv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CfKind {
    S,
    J,
    T,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceName {
    Factorial,
    Genocchi,
    Median,
    MedianFromGenocchi,
}

#[derive(Subcommand)]
enum Command {
    /// List permutations of [n], or D-permutations of a class.
    Enumerate {
        n: usize,
        /// Restrict to D-permutations of the given class
        /// (all, esemi, osemi, derangement, cycle).
        #[arg(long)]
        dperm: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the statistic vector of a permutation.
    Stats {
        /// One-line word ("2 1 4 3") or cycle form ("(1,2)(3)(4)").
        sigma: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply a bijection to a permutation (fwd) or labelled path (inv).
    Biject {
        #[arg(value_enum)]
        bijection: Bijection,
        #[arg(long, value_enum)]
        dir: Direction,
        /// Permutation (fwd) or labelled path like "U:0 D:0" (inv).
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the Laguerre-digraph history of a bijection.
    History {
        #[arg(value_enum)]
        bijection: Bijection,
        /// Permutation (word or cycle form) or labelled path.
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Expand a continued fraction from a coefficient file.
    Expand {
        #[arg(long, value_enum)]
        cf: CfKind,
        /// Line-oriented coefficient file: "alpha[1]: x*y" etc.
        #[arg(long)]
        coeffs: std::path::PathBuf,
        #[arg(short = 'N')]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print an integer sequence.
    Sequence {
        #[arg(value_enum)]
        name: SequenceName,
        #[arg(short = 'N')]
        order: usize,
    },
    /// Verify a theorem by brute-force polynomial equality.
    Verify {
        theorem: String,
        #[arg(short = 'n')]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Run with the given arguments (no binary name), writing output to
/// `out`. Returns the exit code: 0 on success, 1 on invalid input, 2 on
/// verification failure.
pub fn run(args: &[&str], out: &mut dyn Write) -> i32 {
    let full = std::iter::once("cfperm").chain(args.iter().copied());
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own help/error text
            let _ = write!(out, "{err}");
            return if err.use_stderr() { 1 } else { 0 };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        // finish quietly when the consumer closed the pipe (e.g. `| head`)
        Err(msg) if msg == BROKEN_PIPE => 0,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

const BROKEN_PIPE: &str = "\u{0}broken-pipe";

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, String> {
    match cmd {
        Command::Enumerate { n, dperm, json } => {
            let words: Vec<Vec<usize>> = match dperm {
                Some(class) => {
                    let class: DPermClass = class.parse().map_err(|e| format!("{e}"))?;
                    if n % 2 != 0 {
                        return Err("D-permutations require an even size".into());
                    }
                    d_permutations(n, class).map(|p| p.word().to_vec()).collect()
                }
                None => permutations(n).map(|p| p.word().to_vec()).collect(),
            };
            if json {
                emit(out, &serde_json::to_string(&words).unwrap())?;
            } else {
                for word in words {
                    let line = word
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ");
                    emit(out, &line)?;
                }
            }
            Ok(0)
        }
        Command::Stats { sigma, json } => {
            let sigma: Permutation = sigma.parse().map_err(|e| format!("{e}"))?;
            let stats = stat_vector(&sigma);
            if json {
                emit(out, &serde_json::to_string(&stats).unwrap())?;
            } else {
                let value = serde_json::to_value(&stats).unwrap();
                for (name, v) in value.as_object().unwrap() {
                    emit(out, &format!("{name} {v}"))?;
                }
            }
            Ok(0)
        }
        Command::Biject { bijection, dir, input, json } => match dir {
            Direction::Fwd => {
                let sigma: Permutation = input.parse().map_err(|e| format!("{e}"))?;
                let output = forward_output(bijection, &sigma)?;
                if json {
                    emit(out, &serde_json::to_string(&output).unwrap())?;
                } else {
                    emit_forward_text(out, &output)?;
                }
                Ok(0)
            }
            Direction::Inv => {
                let kind = match bijection {
                    Bijection::Fz => PathKind::ColouredMotzkin,
                    _ => PathKind::AlmostDyck,
                };
                let lp = LabelledPath::parse_as(kind, &input).map_err(|e| format!("{e}"))?;
                let sigma = match bijection {
                    Bijection::Fz => fz_inverse(&lp),
                    Bijection::Ds => ds_inverse(&lp),
                    Bijection::Dsv => ds_variant_inverse(&lp),
                }
                .map_err(|e| format!("{e}"))?;
                if json {
                    emit(out, &serde_json::to_string(sigma.word()).unwrap())?;
                } else {
                    emit(out, &sigma.to_string())?;
                }
                Ok(0)
            }
        },
        Command::History { bijection, input, json } => {
            let lp = if input.contains(':') {
                let kind = match bijection {
                    Bijection::Fz => PathKind::ColouredMotzkin,
                    _ => PathKind::AlmostDyck,
                };
                LabelledPath::parse_as(kind, &input).map_err(|e| format!("{e}"))?
            } else {
                let sigma: Permutation = input.parse().map_err(|e| format!("{e}"))?;
                match bijection {
                    Bijection::Fz => fz_forward(&sigma),
                    Bijection::Ds => ds_forward(&sigma).map_err(|e| format!("{e}"))?,
                    Bijection::Dsv => ds_variant_forward(&sigma).map_err(|e| format!("{e}"))?,
                }
            };
            let history = match bijection {
                Bijection::Fz => fz_history(&lp),
                Bijection::Ds => ds_history(&lp),
                Bijection::Dsv => ds_variant_history(&lp),
            }
            .map_err(|e| format!("{e}"))?;
            if json {
                let steps: Vec<HistoryStepJson> =
                    history.iter().map(HistoryStepJson::from).collect();
                emit(out, &serde_json::to_string(&steps).unwrap())?;
            } else {
                for step in &history {
                    let mark = if step.closes_cycle { "  closes cycle" } else { "" };
                    emit(
                        out,
                        &format!(
                            "vertex {:>2}  stage ({})  edge {}->{}{}",
                            step.vertex, step.stage, step.edge.0, step.edge.1, mark
                        ),
                    )?;
                }
                let closures = cycle_closures(&history);
                let rendered = closures
                    .iter()
                    .map(|(u, v)| format!("{u}->{v}"))
                    .collect::<Vec<_>>()
                    .join(", ");
                emit(out, &format!("closures: {rendered}"))?;
            }
            Ok(0)
        }
        Command::Expand { cf, coeffs, order, json } => {
            let text = std::fs::read_to_string(&coeffs)
                .map_err(|e| format!("cannot read {}: {e}", coeffs.display()))?;
            let spec = parse_coeff_file(cf, &text, order)?;
            let series = expand(&spec, order);
            if json {
                emit(out, &serde_json::to_string(series.coeffs()).unwrap())?;
            } else {
                for (k, coeff) in series.coeffs().iter().enumerate() {
                    emit(out, &format!("{k}: {coeff}"))?;
                }
            }
            Ok(0)
        }
        Command::Sequence { name, order } => {
            let values = match name {
                SequenceName::Factorial => factorials(order),
                SequenceName::Genocchi => genocchi(order),
                SequenceName::Median => median_genocchi(order),
                SequenceName::MedianFromGenocchi => median_from_genocchi(order),
            };
            let line = values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            emit(out, &line)?;
            Ok(0)
        }
        Command::Verify { theorem, n_max, json } => {
            let id: TheoremId = theorem.parse()?;
            let report = verify(id, n_max);
            if json {
                emit(out, &serde_json::to_string(&report).unwrap())?;
            } else if report.pass {
                emit(out, &format!("{}: pass (n <= {})", id, report.n_checked))?;
            } else {
                let d = report.first_discrepancy.as_ref().unwrap();
                emit(
                    out,
                    &format!(
                        "{}: FAIL at n = {}\n  lhs: {}\n  rhs: {}",
                        id, d.n, d.lhs, d.rhs
                    ),
                )?;
            }
            Ok(if report.pass { 0 } else { 2 })
        }
    }
}

fn emit(out: &mut dyn Write, line: &str) -> Result<(), String> {
    match writeln!(out, "{line}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Err(BROKEN_PIPE.into()),
        Err(e) => Err(format!("write failed: {e}")),
    }
}

/// One three-row block of a label table: positions, the values `σ` takes
/// on them, and the label attached to each column.
#[derive(Serialize)]
struct LabelTable {
    positions: Vec<usize>,
    values: Vec<usize>,
    labels: Vec<usize>,
}

#[derive(Serialize)]
struct ForwardOutput {
    bijection: &'static str,
    permutation: String,
    path: String,
    heights: Vec<i64>,
    /// Excedance block for fz, even positions for ds/dsv.
    first_table: LabelTable,
    /// Anti-excedance block for fz, odd positions for ds/dsv.
    second_table: LabelTable,
    fixed_points: Vec<usize>,
}

fn forward_output(bijection: Bijection, sigma: &Permutation) -> Result<ForwardOutput, String> {
    match bijection {
        Bijection::Fz => {
            let lp = fz_forward(sigma);
            let sets = fz_sets(&lp.path);
            let table = |positions: &[usize]| LabelTable {
                positions: positions.to_vec(),
                values: positions.iter().map(|&i| sigma.apply(i)).collect(),
                labels: positions.iter().map(|&i| lp.labels[i - 1]).collect(),
            };
            Ok(ForwardOutput {
                bijection: "fz",
                permutation: sigma.to_string(),
                path: lp.to_string(),
                heights: lp.path.heights(),
                first_table: table(&sets.f),
                second_table: table(&sets.g),
                fixed_points: sets.h,
            })
        }
        Bijection::Ds | Bijection::Dsv => {
            let variant = bijection == Bijection::Dsv;
            let lp = if variant {
                ds_variant_forward(sigma).map_err(|e| format!("{e}"))?
            } else {
                ds_forward(sigma).map_err(|e| format!("{e}"))?
            };
            let n = sigma.n();
            // labels column-by-column: at position i for ds, at the value
            // σ(i) for the variant
            let label_of = |i: usize| {
                if variant {
                    lp.labels[sigma.apply(i) - 1]
                } else {
                    lp.labels[i - 1]
                }
            };
            let table = |positions: Vec<usize>| LabelTable {
                values: positions.iter().map(|&i| sigma.apply(i)).collect(),
                labels: positions.iter().map(|&i| label_of(i)).collect(),
                positions,
            };
            let fixed = (1..=n).filter(|&i| sigma.is_fixed_point(i)).collect();
            Ok(ForwardOutput {
                bijection: if variant { "dsv" } else { "ds" },
                permutation: sigma.to_string(),
                path: lp.to_string(),
                heights: lp.path.heights(),
                first_table: table((1..=n / 2).map(|k| 2 * k).collect()),
                second_table: table((1..=n / 2).map(|k| 2 * k - 1).collect()),
                fixed_points: fixed,
            })
        }
    }
}

fn emit_forward_text(out: &mut dyn Write, fwd: &ForwardOutput) -> Result<(), String> {
    emit(out, &format!("path: {}", fwd.path))?;
    let (first, second) = match fwd.bijection {
        "fz" => ("F", "G"),
        _ => ("even", "odd"),
    };
    let row = |name: &str, items: &[usize]| {
        let mut line = format!("{name}:");
        for v in items {
            let _ = write!(line, " {v}");
        }
        line
    };
    emit(out, &row(&format!("{first} positions"), &fwd.first_table.positions))?;
    emit(out, &row(&format!("{first} values"), &fwd.first_table.values))?;
    emit(out, &row(&format!("{first} labels"), &fwd.first_table.labels))?;
    emit(out, &row(&format!("{second} positions"), &fwd.second_table.positions))?;
    emit(out, &row(&format!("{second} values"), &fwd.second_table.values))?;
    emit(out, &row(&format!("{second} labels"), &fwd.second_table.labels))?;
    Ok(())
}

#[derive(Serialize)]
struct HistoryStepJson {
    vertex: usize,
    stage: String,
    edge: [usize; 2],
    closes_cycle: bool,
}

impl From<&HistoryStep> for HistoryStepJson {
    fn from(step: &HistoryStep) -> HistoryStepJson {
        HistoryStepJson {
            vertex: step.vertex,
            stage: step.stage.to_string(),
            edge: [step.edge.0, step.edge.1],
            closes_cycle: step.closes_cycle,
        }
    }
}

/// Parse a line-oriented coefficient file: each line `name[k]: polynomial`
/// with names `alpha` (S, T), `gamma`/`beta` (J), `delta` (T; missing
/// entries default to 0). Blank lines and `#` comments are skipped.
fn parse_coeff_file(kind: CfKind, text: &str, order: usize) -> Result<CfSpec, String> {
    use std::collections::BTreeMap;
    let mut tables: BTreeMap<&str, BTreeMap<usize, MultiPoly>> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, poly_text) = line
            .split_once(':')
            .ok_or_else(|| format!("line {}: expected \"name[k]: polynomial\"", lineno + 1))?;
        let head = head.trim();
        let open = head
            .find('[')
            .ok_or_else(|| format!("line {}: missing index in {head:?}", lineno + 1))?;
        if !head.ends_with(']') {
            return Err(format!("line {}: missing ] in {head:?}", lineno + 1));
        }
        let name = &head[..open];
        let index: usize = head[open + 1..head.len() - 1]
            .parse()
            .map_err(|_| format!("line {}: bad index in {head:?}", lineno + 1))?;
        let poly: MultiPoly = poly_text
            .trim()
            .parse()
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        let table = tables.entry(match name {
            "alpha" => "alpha",
            "beta" => "beta",
            "gamma" => "gamma",
            "delta" => "delta",
            other => return Err(format!("line {}: unknown coefficient {other:?}", lineno + 1)),
        });
        table.or_default().insert(index, poly);
    }
    let depth = order + 1;
    let take = |table: &BTreeMap<usize, MultiPoly>, idx: usize, name: &str| {
        table
            .get(&idx)
            .cloned()
            .ok_or_else(|| format!("missing {name}[{idx}] (need indices up to {depth})"))
    };
    let empty = BTreeMap::new();
    match kind {
        CfKind::S => {
            let alpha = tables.get("alpha").unwrap_or(&empty);
            let mut list = Vec::new();
            for k in 1..=depth {
                list.push(take(alpha, k, "alpha")?);
            }
            Ok(CfSpec::S { alpha: list })
        }
        CfKind::J => {
            let gamma = tables.get("gamma").unwrap_or(&empty);
            let beta = tables.get("beta").unwrap_or(&empty);
            let mut gammas = Vec::new();
            for k in 0..=depth {
                gammas.push(take(gamma, k, "gamma")?);
            }
            let mut betas = Vec::new();
            for k in 1..=depth {
                betas.push(take(beta, k, "beta")?);
            }
            Ok(CfSpec::J { gamma: gammas, beta: betas })
        }
        CfKind::T => {
            let alpha = tables.get("alpha").unwrap_or(&empty);
            let delta = tables.get("delta").unwrap_or(&empty);
            let mut alphas = Vec::new();
            let mut deltas = Vec::new();
            for k in 1..=depth {
                alphas.push(take(alpha, k, "alpha")?);
                deltas.push(delta.get(&k).cloned().unwrap_or_else(MultiPoly::zero));
            }
            Ok(CfSpec::T { alpha: alphas, delta: deltas })
        }
    }
}
