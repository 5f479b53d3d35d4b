use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use cohstab::butler::{maind_conditions, ButlerCase};
use cohstab::construct::{example_profile, overview_table, ExampleName, FORBIDDEN_ROW_LABEL};
use cohstab::curve::{clifford_gamma, secant_expected_dim, CurveModel};
use cohstab::profile::{Outcome, SystemProfile};
use cohstab::rat::Rat;
use cohstab::report::{
    parse_caps, parse_config, parse_genus_map, parse_profile, render, Atlas, Cell, Format,
    NamedValue, OracleReport, OverviewReport, VerdictReport, WallsReport,
};
use cohstab::slope::CohType;

const EXIT_INPUT: u8 = 2;
const EXIT_UNDETERMINED: u8 = 3;

/// Exact stability verdicts, walls and example constructions for coherent systems on general curves
#[derive(Parser, Debug)]
#[command(name = "cohstab", version, about)]
struct Cli {
    /// Output format
    #[arg(long, global = true, default_value = "table")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Curve invariants of a general curve
    Oracle {
        #[arg(value_enum)]
        quantity: OracleKind,
        #[arg(long)]
        genus: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
        /// Rank, for `clifford`
        #[arg(long)]
        r: Option<i64>,
        /// Number of sections, for `clifford` with a bundle
        #[arg(long)]
        h0: Option<i64>,
        /// Quotient length, for `secant`
        #[arg(long)]
        e: Option<i64>,
        /// Conditions not imposed, for `secant`
        #[arg(long)]
        f: Option<i64>,
        /// Ambient rank, for `secant`
        #[arg(long, default_value_t = 1)]
        rank: i64,
        /// Ambient sections, for `secant`
        #[arg(long)]
        sections: Option<i64>,
    },
    /// Critical values of alpha for a system type
    Walls {
        /// System type as R,D,N
        #[arg(long)]
        system: String,
        /// Caps file: a profile without the `system` key
        #[arg(long, conflicts_with = "default_caps")]
        caps: Option<PathBuf>,
        /// Slope bounds `floor(k d / r)` for rank-k subsheaves and the curve's line-bundle bound
        #[arg(long, requires = "genus")]
        default_caps: bool,
        #[arg(long)]
        genus: Option<i64>,
    },
    /// Stability verdicts for a profile file
    Verdict {
        #[arg(long)]
        profile: PathBuf,
        /// Additionally decide at this alpha (N or N/D)
        #[arg(long)]
        alpha: Option<Rat>,
    },
    /// Build one of the named example systems
    Example {
        name: ExampleName,
        #[arg(long)]
        genus: Option<i64>,
    },
    /// Stability pattern of every example, plus the pattern no system has
    Overview {
        /// Per-example genera, e.g. YYN=7,NNN=6
        #[arg(long)]
        genus_map: Option<String>,
        /// JSON file with a `genusMap` object
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Hypotheses of the Butler construction at one genus
    Butler {
        #[arg(long)]
        genus: i64,
        #[arg(long, value_enum)]
        case: CaseArg,
        /// Only require what the inequality needs (g not divisible by 3 in case A)
        #[arg(long)]
        proof_mode: bool,
    },
    /// Examples and Butler feasibility over a genus range
    Atlas {
        /// Inclusive range A..B
        #[arg(long)]
        genus_range: String,
        /// Write here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OracleKind {
    Dk,
    Beta,
    Clifford,
    Secant,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CaseArg {
    A,
    B,
}

/// Input problems exit with code 2; everything else that fails is a bug.
#[derive(Debug)]
struct InputProblem(anyhow::Error);

fn input<T, E: Into<anyhow::Error>>(r: std::result::Result<T, E>) -> Result<T> {
    r.map_err(|e| anyhow::Error::new(InputProblem(e.into())))
}

impl std::fmt::Display for InputProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for InputProblem {}

struct Output {
    text: String,
    undetermined: bool,
    /// Problems that still allow a report to be printed.
    problems: Vec<String>,
}

impl Output {
    fn plain(text: String) -> Output {
        Output {
            text,
            undetermined: false,
            problems: Vec::new(),
        }
    }
}

fn need(v: Option<i64>, flag: &str) -> Result<i64> {
    v.ok_or_else(|| anyhow!(InputProblem(anyhow!("--{flag} is required here"))))
}

fn parse_system(s: &str) -> Result<CohType> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let nums: Vec<i64> = input(
        parts
            .iter()
            .map(|p| p.parse::<i64>())
            .collect::<std::result::Result<_, _>>(),
    )
    .with_context(|| format!("bad system {s:?}"))?;
    match nums[..] {
        [r, d, n] => Ok(CohType::new(r, d, n, true)),
        _ => input(Err(anyhow!("system must be R,D,N, got {s:?}"))),
    }
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let bad = || anyhow!("genus range must be A..B, got {s:?}");
    let (a, b) = input(s.split_once("..").ok_or_else(bad))?;
    let a: i64 = input(a.trim().parse().map_err(|_| bad()))?;
    let b: i64 = input(b.trim().parse().map_err(|_| bad()))?;
    Ok((a, b))
}

fn oracle(kind: OracleKind, args: &Command, format: Format) -> Result<Output> {
    let Command::Oracle {
        genus,
        k,
        d,
        r,
        h0,
        e,
        f,
        rank,
        sections,
        ..
    } = *args
    else {
        unreachable!()
    };
    let curve = || -> Result<CurveModel> { input(CurveModel::general(need(genus, "genus")?)) };
    let report = match kind {
        OracleKind::Dk => {
            let (g, k) = (need(genus, "genus")?, need(k, "k")?);
            OracleReport {
                oracle: "gonality d_k",
                inputs: vec![
                    NamedValue {
                        name: "genus",
                        value: g,
                    },
                    NamedValue {
                        name: "k",
                        value: k,
                    },
                ],
                value: Cell::Int(input(curve()?.gonality(k))?),
            }
        }
        OracleKind::Beta => {
            let (g, k, d) = (need(genus, "genus")?, need(k, "k")?, need(d, "d")?);
            OracleReport {
                oracle: "Brill-Noether number",
                inputs: vec![
                    NamedValue {
                        name: "genus",
                        value: g,
                    },
                    NamedValue {
                        name: "k",
                        value: k,
                    },
                    NamedValue {
                        name: "d",
                        value: d,
                    },
                ],
                value: Cell::Int(input(curve()?.bn_number(k, d))?),
            }
        }
        OracleKind::Clifford => match (d, h0) {
            (Some(d), Some(h0)) => {
                let r = r.unwrap_or(1);
                OracleReport {
                    oracle: "Clifford value gamma",
                    inputs: vec![
                        NamedValue {
                            name: "r",
                            value: r,
                        },
                        NamedValue {
                            name: "d",
                            value: d,
                        },
                        NamedValue {
                            name: "h0",
                            value: h0,
                        },
                    ],
                    value: Cell::Rat(input(clifford_gamma(r, d, h0))?.gamma),
                }
            }
            (None, None) => {
                let (g, r) = (need(genus, "genus")?, r.unwrap_or(1));
                OracleReport {
                    oracle: "Clifford index",
                    inputs: vec![
                        NamedValue {
                            name: "genus",
                            value: g,
                        },
                        NamedValue {
                            name: "r",
                            value: r,
                        },
                    ],
                    value: Cell::Int(input(curve()?.clifford_index(r))?),
                }
            }
            _ => return input(Err(anyhow!("--d and --h0 go together"))),
        },
        OracleKind::Secant => {
            let (e, f, h) = (need(e, "e")?, need(f, "f")?, need(sections, "sections")?);
            OracleReport {
                oracle: "secant expected dimension",
                inputs: vec![
                    NamedValue {
                        name: "e",
                        value: e,
                    },
                    NamedValue {
                        name: "f",
                        value: f,
                    },
                    NamedValue {
                        name: "rank",
                        value: rank,
                    },
                    NamedValue {
                        name: "sections",
                        value: h,
                    },
                ],
                value: Cell::Int(input(secant_expected_dim(e, f, rank, h))?.expected_dim),
            }
        }
    };
    Ok(Output::plain(render(&report, format)))
}

fn default_caps(g: i64, sys: CohType) -> Result<SystemProfile> {
    let curve = input(CurveModel::general(g))?;
    let mut b = SystemProfile::builder(curve, sys).line_max_degree(sys.d.div_euclid(sys.r));
    for k in 2..sys.r {
        b = b.rank_max_degree(k, (k * sys.d).div_euclid(sys.r));
    }
    input(b.build())
}

fn run(cli: Cli) -> Result<Output> {
    let format = cli.format;
    match &cli.command {
        c @ Command::Oracle { quantity, .. } => oracle(*quantity, c, format),
        Command::Walls {
            system,
            caps,
            default_caps: use_default,
            genus,
        } => {
            let sys = parse_system(system)?;
            let p = match (caps, use_default) {
                (Some(path), _) => input(parse_caps(path, sys))?,
                (None, true) => default_caps(need(*genus, "genus")?, sys)?,
                (None, false) => return input(Err(anyhow!("give --caps FILE or --default-caps"))),
            };
            let walls = input(p.critical_alphas())?;
            Ok(Output::plain(render(
                &WallsReport { system: sys, walls },
                format,
            )))
        }
        Command::Verdict { profile, alpha } => {
            let p = input(parse_profile(profile))?;
            let report = input(VerdictReport::new(&p, *alpha))?;
            Ok(Output {
                undetermined: report.any_undetermined(),
                text: render(&report, format),
                problems: Vec::new(),
            })
        }
        Command::Example { name, genus } => {
            let r = input(example_profile(
                *name,
                genus.unwrap_or(name.default_genus()),
            ))?;
            Ok(Output {
                undetermined: r.computed.outcomes().contains(&Outcome::Undetermined),
                text: render(&r, format),
                problems: Vec::new(),
            })
        }
        Command::Overview { genus_map, config } => {
            let mut m = match config {
                Some(path) => input(parse_config(path))?.genus_map,
                None => Default::default(),
            };
            if let Some(s) = genus_map {
                m.extend(input(parse_genus_map(s).map_err(|e| anyhow!(e)))?);
            }
            let rows = overview_table(&m);
            let problems = rows
                .iter()
                .filter_map(|r| r.error.as_ref().map(|e| format!("{}: {e}", r.label)))
                .collect();
            let undetermined = rows
                .iter()
                .any(|r| r.label != FORBIDDEN_ROW_LABEL && r.pattern.contains('?'));
            Ok(Output {
                text: render(&OverviewReport { rows }, format),
                undetermined,
                problems,
            })
        }
        Command::Butler {
            genus,
            case,
            proof_mode,
        } => {
            let case = match case {
                CaseArg::A => ButlerCase::A,
                CaseArg::B => ButlerCase::B,
            };
            let f = input(maind_conditions(*genus, case, !proof_mode))?;
            Ok(Output::plain(render(&f, format)))
        }
        Command::Atlas { genus_range, out } => {
            let (lo, hi) = parse_range(genus_range)?;
            if lo > hi {
                return input(Err(anyhow!("empty genus range {genus_range}")));
            }
            let atlas = Atlas::build(lo, hi);
            let text = render(&atlas, format);
            let undetermined = atlas.any_undetermined();
            match out {
                Some(path) => {
                    input(
                        std::fs::write(path, &text)
                            .with_context(|| format!("writing {}", path.display())),
                    )?;
                    Ok(Output {
                        text: String::new(),
                        undetermined,
                        problems: Vec::new(),
                    })
                }
                None => Ok(Output {
                    text,
                    undetermined,
                    problems: Vec::new(),
                }),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            for p in &out.problems {
                eprintln!("error: {p}");
            }
            if !out.problems.is_empty() {
                ExitCode::from(EXIT_INPUT)
            } else if out.undetermined {
                eprintln!("some verdicts are undetermined");
                ExitCode::from(EXIT_UNDETERMINED)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputProblem>().is_some() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
