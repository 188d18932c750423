//! Library side of the `selfsim` command: action files, reports and the
//! subcommands, kept separate from argument parsing so they can be tested
//! in-process.

pub mod commands;
pub mod report;
pub mod spec;

use clap::{Args, Parser, Subcommand};

use selfsim::action::checks::Bounds;
use selfsim::exec::Exec;
use selfsim::germs::{germ_iso_check, OdometerDynamics, SampleConfig};
use selfsim::ugroup::sigma::odometer_sigma;
use selfsim::ugroup::FreeGroup;

use commands::{Actor, CommandError};
use report::{check_action, ReportBounds};
use spec::{ActionSpec, AnyAction};

#[derive(Debug, Parser)]
#[command(
    name = "selfsim",
    version,
    about = "Checks and explores self-similar graph actions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Action file (TOML).
    pub file: std::path::PathBuf,
    /// Group elements range over the ball of this radius.
    #[arg(long, default_value_t = 4)]
    pub radius: usize,
    /// Paths range over lengths up to this.
    #[arg(long, default_value_t = 4)]
    pub pathlen: usize,
    /// Prefix depth for pointwise comparisons and output.
    #[arg(long, default_value_t = 8)]
    pub depth: usize,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Axioms, pseudo-freeness, exhaustion, E*-unitarity, cancellation and
    /// idempotent purity, with their bounds.
    Check {
        #[command(flatten)]
        common: Common,
        /// Seed for sampled checks.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Number of sampled germ pairs.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Run the searches on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Presentation of the universal group.
    Present {
        #[command(flatten)]
        common: Common,
    },
    /// Image of a point prefix under a group element, a semigroup triple, or
    /// (for odometers) a universal-group element.
    Act {
        #[command(flatten)]
        common: Common,
        /// A group element, e.g. `z^-3`.
        #[arg(long, conflicts_with_all = ["triple", "universal"])]
        element: Option<String>,
        /// A triple written `(α, g, β)`.
        #[arg(long, conflicts_with = "universal")]
        triple: Option<String>,
        /// A universal-group element: `(q, k)` coordinates or a word in a0, Z.
        #[arg(long)]
        universal: Option<String>,
        /// Point written `head(cycle)`.
        #[arg(long)]
        point: String,
    },
    /// Orbit of a point, breadth first.
    Orbit {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        point: String,
        /// Comma-separated group words; all generators and inverses by default.
        #[arg(long, value_delimiter = ',')]
        generators: Vec<String>,
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
    /// Graphviz DOT of the restriction automaton.
    Export {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 256)]
        max_states: usize,
    },
}

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn error(msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_ERROR,
        }
    }
}

fn load(common: &Common) -> Result<(ActionSpec, AnyAction), String> {
    let text = std::fs::read_to_string(&common.file)
        .map_err(|e| format!("{}: {e}", common.file.display()))?;
    let spec = ActionSpec::parse(&text).map_err(|e| format!("{}: {e}", common.file.display()))?;
    let action = spec
        .build()
        .map_err(|e| format!("{}: {e}", common.file.display()))?;
    Ok((spec, action))
}

fn from_command(r: Result<String, CommandError>) -> Outcome {
    match r {
        Ok(s) => Outcome::ok(s),
        Err(e) => Outcome::error(e),
    }
}

pub fn run(cli: Cli) -> Outcome {
    let common = match &cli.command {
        Command::Check { common, .. }
        | Command::Present { common }
        | Command::Act { common, .. }
        | Command::Orbit { common, .. }
        | Command::Export { common, .. } => common.clone(),
    };
    let (spec, action) = match load(&common) {
        Ok(x) => x,
        Err(e) => return Outcome::error(e),
    };
    let bounds = Bounds {
        radius: common.radius,
        path_len: common.pathlen,
    };
    match cli.command {
        Command::Check {
            seed,
            samples,
            sequential,
            ..
        } => {
            let exec = if sequential {
                Exec::Sequential
            } else {
                Exec::default()
            };
            let rb = ReportBounds {
                radius: common.radius,
                path_len: common.pathlen,
                depth: common.depth,
            };
            let expect = spec.expect.as_ref();
            let report = match &action {
                AnyAction::Integers(a) => match odometer_sigma(a) {
                    Ok(sigma) => {
                        let mut r = check_action(&spec.name, a, Some(&sigma), rb, expect, exec);
                        let dynamics = OdometerDynamics {
                            bs: sigma.target().clone(),
                        };
                        let config = SampleConfig {
                            samples,
                            depth: common.depth,
                            seed,
                            bounds: Bounds {
                                radius: 2,
                                path_len: 2,
                            },
                        };
                        r.germ_map = Some(germ_iso_check(a, &sigma, Some(&dynamics), config));
                        r
                    }
                    Err(_) => check_action::<_, FreeGroup>(&spec.name, a, None, rb, expect, exec),
                },
                AnyAction::Finite(a) => {
                    check_action::<_, FreeGroup>(&spec.name, a, None, rb, expect, exec)
                }
            };
            let stdout = if common.json {
                serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
            } else {
                report.render_text()
            };
            let code = if report.has_violation() {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code,
            }
        }
        Command::Present { .. } => from_command(match &action {
            AnyAction::Integers(a) => commands::present(a, commands::is_odometer(a), common.json),
            AnyAction::Finite(a) => commands::present(a, false, common.json),
        }),
        Command::Act {
            element,
            triple,
            universal,
            point,
            ..
        } => {
            let actor = match (&element, &triple) {
                (Some(w), _) => Some(Actor::Element(w)),
                (_, Some(t)) => Some(Actor::Triple(t)),
                _ => None,
            };
            from_command(match (actor, universal, &action) {
                (Some(actor), _, AnyAction::Integers(a)) => {
                    commands::act(a, actor, &point, common.depth)
                }
                (Some(actor), _, AnyAction::Finite(a)) => {
                    commands::act(a, actor, &point, common.depth)
                }
                (None, Some(h), AnyAction::Integers(a)) => {
                    commands::act_universal(a, &h, &point, common.depth, bounds)
                }
                (None, Some(_), AnyAction::Finite(_)) => Err(CommandError::Unsupported(
                    "--universal needs an odometer action".into(),
                )),
                (None, None, _) => Err(CommandError::Input(
                    "one of --element, --triple or --universal is required".into(),
                )),
            })
        }
        Command::Orbit {
            point,
            generators,
            steps,
            ..
        } => from_command(match &action {
            AnyAction::Integers(a) => commands::orbit(a, &point, &generators, common.depth, steps),
            AnyAction::Finite(a) => commands::orbit(a, &point, &generators, common.depth, steps),
        }),
        Command::Export { max_states, .. } => {
            let (dot, truncated) = match &action {
                AnyAction::Integers(a) => commands::export(a, &spec.name, max_states),
                AnyAction::Finite(a) => commands::export(a, &spec.name, max_states),
            };
            let mut out = Outcome::ok(dot);
            if truncated {
                out.stderr = format!("warning: stopped after {max_states} states\n");
            }
            out
        }
    }
}
