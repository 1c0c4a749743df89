//! Command-line front end. Results go to stdout as JSON (or CSV for grids);
//! diagnostics go to stderr. Exit codes: 0 ok, 1 usage or input error,
//! 2 unsupported space, 3 oracle mismatch, 4 resource guard.

use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::ExactInt;
use crate::error::{Error, Result};
use crate::eulerchar::{
    chi_b_upper, chi_bd, chi_bd_by_strata, chi_fd, chi_gamma_product, chi_sp, oracle_bd_burnside,
    oracle_fd_setpartitions,
};
use crate::fundgroup::{orbit_structure, pi1_bd, pi1_gamma_product};
use crate::graphconf::{chi_graph, discretized_chi_f2, farber_chi_f2, Graph};
use crate::invariants::{invariant_poincare, macdonald_poincare_sp};
use crate::permgroup::{enumerate_group, parse_generators, PermutationGroupModel};
use crate::spaces::{from_json, parse_space, SpaceModel};
use crate::strata::{depth, group_length, stabilizer_class_poset};
use crate::verify::{self, Suite};

pub const SCHEMA: &str = "fatdiag/1";

#[derive(Parser, Debug)]
#[command(
    name = "fatdiag",
    version,
    about = "Exact invariants of permutation products and fat diagonals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euler characteristics.
    #[command(subcommand)]
    Chi(ChiCommand),
    /// Rational Betti numbers.
    #[command(subcommand)]
    Betti(BettiCommand),
    /// Fundamental-group descriptors.
    #[command(subcommand)]
    Pi1(Pi1Command),
    /// Orbit-type stratification data.
    #[command(subcommand)]
    Strata(StrataCommand),
    /// Configuration spaces of graphs.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Run the cross-check suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Fast)]
        suite: SuiteArg,
    },
}

#[derive(Args, Debug)]
struct SpaceArg {
    /// Preset expression (`torus`, `sphere:2 x circle`), inline JSON, or a JSON file.
    #[arg(long)]
    space: String,
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long)]
    degree: usize,
    /// Generators in cycle notation, separated by `;`, e.g. "(1 2); (1 2 3)".
    #[arg(long, default_value = "")]
    gens: String,
}

#[derive(Args, Debug)]
struct FatArgs {
    #[command(flatten)]
    space: SpaceArg,
    #[arg(short = 'n')]
    n: usize,
    #[arg(short = 'd')]
    d: usize,
    /// Also run every applicable oracle; exit 3 on disagreement.
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand, Debug)]
enum ChiCommand {
    /// chi(SP^n X).
    Sp {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(short = 'n')]
        n: usize,
    },
    /// chi(B_d(X,n)). The fat-diagonal commands need an even-dimensional closed manifold.
    Bd(FatArgs),
    /// chi(F_d(X,n)).
    Fd(FatArgs),
    /// chi(B^d(X,n)).
    Bupper(FatArgs),
    /// chi(X^n / G).
    Gamma {
        #[command(flatten)]
        space: SpaceArg,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Table of a formula over 1 <= d <= n <= n-max.
    Grid {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, value_enum)]
        formula: GridFormula,
        #[arg(long)]
        n_max: usize,
        /// Emit CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Subcommand, Debug)]
enum BettiCommand {
    /// Betti numbers of X^n / G.
    Gamma {
        #[command(flatten)]
        space: SpaceArg,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Betti numbers of SP^n X from the generating function.
    Sp {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(short = 'n')]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Pi1Command {
    /// pi_1(B_d(X,n)).
    Bd {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'd')]
        d: usize,
    },
    /// pi_1(X^n / G).
    Gamma {
        #[command(flatten)]
        space: SpaceArg,
        #[command(flatten)]
        group: GroupArgs,
    },
}

#[derive(Subcommand, Debug)]
enum StrataCommand {
    /// Depth of the orbit-type stratification.
    Depth(GroupArgs),
    /// Longest chain of subgroups.
    Length(GroupArgs),
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    /// chi(F(G,2)) by Farber's formula.
    Chi2 {
        /// Fixture name (gamma1, gamma2, path:k, cycle:k, star:k) or JSON file.
        #[arg(long)]
        graph: String,
        /// Also count cells of the discretized configuration space.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Fast,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GridFormula {
    Bd,
    Fd,
    Bupper,
}

#[derive(Serialize)]
struct Envelope {
    schema: &'static str,
    command: String,
    inputs: Value,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_results: Option<Value>,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

impl Outcome {
    fn failure(err: &Error) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            exit_code: err.exit_code(),
        }
    }
}

fn int_str(x: &ExactInt) -> Value {
    Value::String(x.to_string())
}

fn load_space(arg: &SpaceArg) -> Result<SpaceModel> {
    let path = Path::new(&arg.space);
    if !arg.space.trim_start().starts_with('{') && path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("reading {}: {e}", path.display())))?;
        return from_json(&text);
    }
    parse_space(&arg.space)
}

fn space_json(x: &SpaceModel) -> Value {
    json!({
        "name": x.name,
        "betti": x.betti,
        "euler": x.euler().to_string(),
        "parity": x.parity.to_string(),
        "pi1": x.pi1.to_string(),
        "h1": x.h1.to_string(),
    })
}

fn load_group(args: &GroupArgs) -> Result<PermutationGroupModel> {
    enumerate_group(args.degree, &parse_generators(args.degree, &args.gens)?)
}

fn group_json(args: &GroupArgs, g: &PermutationGroupModel) -> Value {
    json!({ "degree": args.degree, "gens": args.gens, "order": g.order() })
}

fn load_graph(source: &str) -> Result<Graph> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("reading {}: {e}", path.display())))?;
        Graph::from_json(&text)
    } else if source.trim_start().starts_with('{') {
        Graph::from_json(source)
    } else {
        Graph::fixture(source)
    }
}

/// A finished command: the envelope, plus the first oracle disagreement if any.
struct Computed {
    envelope: Envelope,
    mismatch: Option<Error>,
}

impl From<Envelope> for Computed {
    fn from(envelope: Envelope) -> Self {
        Self {
            envelope,
            mismatch: None,
        }
    }
}

fn envelope(command: &str, inputs: Value, result: Value) -> Envelope {
    Envelope {
        schema: SCHEMA,
        command: command.to_string(),
        inputs,
        result,
        oracle_results: None,
    }
}

fn fat_inputs(x: &SpaceModel, a: &FatArgs) -> Value {
    json!({ "space": space_json(x), "n": a.n, "d": a.d })
}

fn compare(
    check: &str,
    formula: &ExactInt,
    oracles: &[(&str, ExactInt)],
) -> (Value, Option<Error>) {
    let mut map = serde_json::Map::new();
    let mut mismatch = None;
    for (name, value) in oracles {
        map.insert(name.to_string(), int_str(value));
        if value != formula && mismatch.is_none() {
            mismatch = Some(Error::OracleMismatch {
                check: format!("{check} vs {name}"),
                formula: formula.to_string(),
                oracle: value.to_string(),
            });
        }
    }
    map.insert("agree".into(), Value::Bool(mismatch.is_none()));
    (Value::Object(map), mismatch)
}

fn run_chi(cmd: ChiCommand) -> Result<Computed> {
    match cmd {
        ChiCommand::Sp { space, n } => {
            let x = load_space(&space)?;
            let value = chi_sp(&x.euler(), n);
            Ok(envelope(
                "chi sp",
                json!({ "space": space_json(&x), "n": n }),
                int_str(&value),
            )
            .into())
        }
        ChiCommand::Bd(a) => {
            let x = load_space(&a.space)?;
            let chi = x.even_manifold_euler()?;
            let value = chi_bd(&chi, a.n, a.d)?;
            let mut env = envelope("chi bd", fat_inputs(&x, &a), int_str(&value));
            let mut mismatch = None;
            if a.verify {
                let oracles = [
                    ("strata_sum", chi_bd_by_strata(&chi, a.n, a.d)?),
                    ("burnside", oracle_bd_burnside(&chi, a.n, a.d)?),
                ];
                let (report, bad) = compare("chi bd", &value, &oracles);
                env.oracle_results = Some(report);
                mismatch = bad;
            }
            Ok(Computed {
                envelope: env,
                mismatch,
            })
        }
        ChiCommand::Fd(a) => {
            let x = load_space(&a.space)?;
            let chi = x.even_manifold_euler()?;
            let value = chi_fd(&chi, a.n, a.d)?;
            let mut env = envelope("chi fd", fat_inputs(&x, &a), int_str(&value));
            let mut mismatch = None;
            if a.verify {
                let oracles = [("set_partitions", oracle_fd_setpartitions(&chi, a.n, a.d)?)];
                let (report, bad) = compare("chi fd", &value, &oracles);
                env.oracle_results = Some(report);
                mismatch = bad;
            }
            Ok(Computed {
                envelope: env,
                mismatch,
            })
        }
        ChiCommand::Bupper(a) => {
            let x = load_space(&a.space)?;
            let chi = x.even_manifold_euler()?;
            let value = chi_b_upper(&chi, a.n, a.d)?;
            let mut env = envelope("chi bupper", fat_inputs(&x, &a), int_str(&value));
            let mut mismatch = None;
            if a.verify {
                let complement = if a.d < a.n {
                    chi_sp(&chi, a.n) - oracle_bd_burnside(&chi, a.n, a.d + 1)?
                } else {
                    chi_sp(&chi, a.n)
                };
                let (report, bad) = compare("chi bupper", &value, &[("complement", complement)]);
                env.oracle_results = Some(report);
                mismatch = bad;
            }
            Ok(Computed {
                envelope: env,
                mismatch,
            })
        }
        ChiCommand::Gamma { space, group } => {
            let x = load_space(&space)?;
            let g = load_group(&group)?;
            let value = chi_gamma_product(&x.euler(), &g)?;
            let inputs = json!({ "space": space_json(&x), "group": group_json(&group, &g) });
            Ok(envelope("chi gamma", inputs, int_str(&value)).into())
        }
        ChiCommand::Grid { .. } => unreachable!("grids are rendered separately"),
    }
}

/// `(n, d, value)`.
type GridRow = (usize, usize, ExactInt);

fn grid_rows(
    space: &SpaceArg,
    formula: GridFormula,
    n_max: usize,
) -> Result<(SpaceModel, Vec<GridRow>)> {
    let x = load_space(space)?;
    let chi = x.even_manifold_euler()?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for d in 1..=n {
            let value = match formula {
                GridFormula::Bd if d >= 2 => chi_bd(&chi, n, d)?,
                GridFormula::Fd if d >= 2 => chi_fd(&chi, n, d)?,
                GridFormula::Bupper => chi_b_upper(&chi, n, d)?,
                _ => continue,
            };
            rows.push((n, d, value));
        }
    }
    Ok((x, rows))
}

fn execute(cli: Cli) -> Result<Outcome> {
    let computed: Computed = match cli.command {
        Command::Chi(ChiCommand::Grid {
            space,
            formula,
            n_max,
            csv,
        }) => {
            let (x, rows) = grid_rows(&space, formula, n_max)?;
            let name = format!("{formula:?}").to_lowercase();
            if csv {
                let mut out = String::from("n,d,value\n");
                for (n, d, v) in &rows {
                    out.push_str(&format!("{n},{d},{v}\n"));
                }
                return Ok(Outcome {
                    stdout: out,
                    stderr: String::new(),
                    exit_code: 0,
                });
            }
            let table: Vec<Value> = rows
                .iter()
                .map(|(n, d, v)| json!({ "n": n, "d": d, "value": v.to_string() }))
                .collect();
            let inputs = json!({ "space": space_json(&x), "formula": name, "n_max": n_max });
            envelope("chi grid", inputs, Value::Array(table)).into()
        }
        Command::Chi(cmd) => run_chi(cmd)?,
        Command::Betti(BettiCommand::Gamma { space, group }) => {
            let x = load_space(&space)?;
            let g = load_group(&group)?;
            let p = invariant_poincare(&x.poincare(), &g)?;
            let inputs = json!({ "space": space_json(&x), "group": group_json(&group, &g) });
            envelope(
                "betti gamma",
                inputs,
                serde_json::to_value(&p).expect("serializable"),
            )
            .into()
        }
        Command::Betti(BettiCommand::Sp { space, n }) => {
            let x = load_space(&space)?;
            let p = macdonald_poincare_sp(&x.poincare(), n);
            let inputs = json!({ "space": space_json(&x), "n": n });
            envelope(
                "betti sp",
                inputs,
                serde_json::to_value(&p).expect("serializable"),
            )
            .into()
        }
        Command::Pi1(Pi1Command::Bd { space, n, d }) => {
            let x = load_space(&space)?;
            let expr = pi1_bd(&x, n, d)?;
            let inputs = json!({ "space": space_json(&x), "n": n, "d": d });
            envelope(
                "pi1 bd",
                inputs,
                serde_json::to_value(expr.describe(&x)).expect("serializable"),
            )
            .into()
        }
        Command::Pi1(Pi1Command::Gamma { space, group }) => {
            let x = load_space(&space)?;
            let g = load_group(&group)?;
            let expr = pi1_gamma_product(&x, &g)?;
            let mut inputs = json!({ "space": space_json(&x), "group": group_json(&group, &g) });
            inputs["orbits"] = serde_json::to_value(orbit_structure(&g)).expect("serializable");
            envelope(
                "pi1 gamma",
                inputs,
                serde_json::to_value(expr.describe(&x)).expect("serializable"),
            )
            .into()
        }
        Command::Strata(StrataCommand::Depth(group)) => {
            let g = load_group(&group)?;
            let poset = stabilizer_class_poset(&g)?;
            let mut env = envelope(
                "strata depth",
                group_json(&group, &g),
                json!(depth(&g)?.to_string()),
            );
            env.inputs["stabilizer_classes"] =
                serde_json::to_value(&poset.classes).expect("serializable");
            env.into()
        }
        Command::Strata(StrataCommand::Length(group)) => {
            let g = load_group(&group)?;
            envelope(
                "strata length",
                group_json(&group, &g),
                json!(group_length(&g)?.to_string()),
            )
            .into()
        }
        Command::Graph(GraphCommand::Chi2 { graph, oracle }) => {
            let g = load_graph(&graph)?;
            let value = farber_chi_f2(&g)?;
            let inputs = json!({
                "graph": graph,
                "vertices": g.num_vertices(),
                "edges": g.num_edges(),
                "euler": chi_graph(&g).to_string(),
            });
            let mut env = envelope("graph chi2", inputs, int_str(&value));
            let mut mismatch = None;
            if oracle {
                let (report, bad) = compare(
                    "graph chi2",
                    &value,
                    &[("discretized", discretized_chi_f2(&g)?)],
                );
                env.oracle_results = Some(report);
                mismatch = bad;
            }
            Computed {
                envelope: env,
                mismatch,
            }
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Fast => Suite::Fast,
                SuiteArg::All => Suite::All,
            };
            let report = verify::run(suite);
            let mut stderr = String::new();
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                stderr.push_str(&format!(
                    "{status} {} ({} cases, {} ms)\n",
                    c.name, c.cases, c.millis
                ));
                if let Some(f) = &c.failure {
                    stderr.push_str(&format!("     {f}\n"));
                }
            }
            let passed = report.passed;
            let env = envelope(
                "verify",
                json!({ "suite": report.suite }),
                serde_json::to_value(&report).expect("serializable"),
            );
            let mut stdout = serde_json::to_string_pretty(&env).expect("serializable");
            stdout.push('\n');
            return Ok(Outcome {
                stdout,
                stderr,
                exit_code: if passed { 0 } else { 3 },
            });
        }
    };

    let mut stdout = serde_json::to_string_pretty(&computed.envelope).expect("serializable");
    stdout.push('\n');
    match computed.mismatch {
        None => Ok(Outcome {
            stdout,
            stderr: String::new(),
            exit_code: 0,
        }),
        Some(err) => Ok(Outcome {
            stdout,
            stderr: format!("error: {err}\n"),
            exit_code: err.exit_code(),
        }),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    exit_code: 1,
                }
            } else {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    exit_code: 0,
                }
            };
        }
    };
    execute(cli).unwrap_or_else(|e| Outcome::failure(&e))
}
