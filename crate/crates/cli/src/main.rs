use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ison::verify::{self, VerifyConfig};
use ison::zerotop::check_separate_continuity;
use ison::{
    coset_of, enumerate_elements, eval_str, format, ll_leq, mg_image, mg_related, natural_leq,
    shrink_neighborhood, simple_witness, solve_left, solve_right, zmul, ChainCursor, CofiniteNbhd,
    EnumBounds, Green, Isometry, ZElem,
};

/// Environment variable overriding the default enumeration bounds.
const BOUNDS_VAR: &str = "ISON_BOUNDS";

#[derive(Parser, Debug)]
#[command(
    name = "ison",
    version,
    about = "Exact arithmetic on cofinite partial isometries of ℕ"
)]
struct Cli {
    /// Print one JSON record {verb, inputs, result, elapsed_ms} instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Evaluate a word and print its canonical form.
    Eval { word: String },
    /// Canonical data of an element.
    Canon { x: String },
    /// Product of the arguments, left to right.
    Compose {
        #[arg(required = true, num_args = 1..)]
        xs: Vec<String>,
    },
    /// The inverse partial map.
    Invert { x: String },
    /// Compare two elements in the natural order or the conjugation order.
    Order {
        kind: OrderKind,
        g: String,
        d: String,
    },
    /// The chain βᵏ·γ·αᵏ below an element.
    Chain {
        x: String,
        #[arg(long, default_value_t = 5)]
        take: usize,
        #[arg(long, default_value_t = 0)]
        from: u64,
    },
    /// Exceptional data (A, n0) of an element.
    Coset { x: String },
    /// Image in ℤ under the minimum group congruence.
    Mg { x: String },
    /// Congruence test with its idempotent witness.
    MgRel { g: String, d: String },
    /// Test one of Green's relations R, L, H, D.
    Green {
        #[arg(value_parser = parse_green)]
        relation: Green,
        g: String,
        d: String,
    },
    /// Elements u, v with u·g·v = d.
    SimpleWitness { g: String, d: String },
    /// Solve a·x = b (left) or x·a = b (right).
    Solve { side: Side, a: String, b: String },
    /// List every element inside the bounds.
    Enum {
        #[arg(long)]
        max_complement: Option<u64>,
        #[arg(long)]
        max_offset: Option<u64>,
        /// `K,M` or `default`.
        #[arg(long)]
        bounds: Option<String>,
    },
    /// Neighbourhoods of the adjoined zero.
    TauAc {
        #[command(subcommand)]
        action: TauAction,
    },
    /// Run a property suite; `all` runs every suite.
    Verify {
        suite: String,
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long)]
        max_i: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum TauAction {
    /// The excluded set of V with g·V ⊆ U and V·g ⊆ U.
    Shrink {
        g: String,
        #[arg(long = "exclude", num_args = 1..)]
        exclude: Vec<String>,
    },
    /// Shrink and validate the result over the bounded enumeration.
    Check {
        g: String,
        #[arg(long = "exclude", num_args = 1..)]
        exclude: Vec<String>,
        #[arg(long)]
        bounds: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OrderKind {
    Nat,
    Ll,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Side {
    Left,
    Right,
}

fn parse_green(s: &str) -> Result<Green, String> {
    s.parse::<Green>().map_err(|e| e.to_string())
}

#[derive(Debug)]
enum Failure {
    /// Malformed input: exit 2.
    Usage(String),
    /// Well-formed input the operation rejects, or a failed check: exit 1.
    Domain(String),
}

/// A verb's result: the text form and the JSON form.
struct Outcome {
    text: String,
    value: Value,
    ok: bool,
}

impl Outcome {
    fn new(text: impl Into<String>, value: Value) -> Self {
        Outcome {
            text: text.into(),
            value,
            ok: true,
        }
    }
}

fn element(s: &str) -> Result<ZElem, Failure> {
    if s.trim_start().starts_with("iso") {
        s.parse::<Isometry>()
            .map(ZElem::Elem)
            .map_err(|e| Failure::Usage(format!("`{s}`: {e}")))
    } else {
        eval_str(s).map_err(|e| Failure::Usage(format!("`{s}`: {e}")))
    }
}

fn nonzero(s: &str) -> Result<Isometry, Failure> {
    match element(s)? {
        ZElem::Elem(g) => Ok(g),
        ZElem::Zero => Err(Failure::Domain(format!(
            "`{s}` is the zero, which this verb does not accept"
        ))),
    }
}

fn bounds(explicit: Option<&str>) -> Result<EnumBounds, Failure> {
    let from_env = std::env::var(BOUNDS_VAR).ok();
    match explicit.or(from_env.as_deref()) {
        Some(s) => s.parse().map_err(|e| Failure::Usage(format!("{e}"))),
        None => Ok(EnumBounds::default()),
    }
}

fn word(g: &Isometry) -> String {
    g.to_string()
}

fn lines(xs: &[Isometry]) -> String {
    if xs.is_empty() {
        "(none)".to_string()
    } else {
        xs.iter().map(word).collect::<Vec<_>>().join("\n")
    }
}

fn words(xs: &[Isometry]) -> Value {
    Value::from(xs.iter().map(word).collect::<Vec<_>>())
}

fn inputs(verb: &Verb) -> Value {
    match verb {
        Verb::Eval { word } => json!({ "word": word }),
        Verb::Canon { x } | Verb::Invert { x } | Verb::Coset { x } | Verb::Mg { x } => {
            json!({ "x": x })
        }
        Verb::Compose { xs } => json!({ "xs": xs }),
        Verb::Order { kind, g, d } => {
            json!({ "kind": format!("{kind:?}").to_lowercase(), "g": g, "d": d })
        }
        Verb::Chain { x, take, from } => json!({ "x": x, "take": take, "from": from }),
        Verb::MgRel { g, d } | Verb::SimpleWitness { g, d } => json!({ "g": g, "d": d }),
        Verb::Green { relation, g, d } => {
            json!({ "relation": relation.to_string(), "g": g, "d": d })
        }
        Verb::Solve { side, a, b } => {
            json!({ "side": format!("{side:?}").to_lowercase(), "a": a, "b": b })
        }
        Verb::Enum {
            max_complement,
            max_offset,
            bounds,
        } => {
            json!({ "max_complement": max_complement, "max_offset": max_offset, "bounds": bounds })
        }
        Verb::TauAc { action } => match action {
            TauAction::Shrink { g, exclude } => {
                json!({ "action": "shrink", "g": g, "exclude": exclude })
            }
            TauAction::Check { g, exclude, bounds } => {
                json!({ "action": "check", "g": g, "exclude": exclude, "bounds": bounds })
            }
        },
        Verb::Verify {
            suite,
            bounds,
            max_i,
            samples,
            seed,
        } => {
            json!({ "suite": suite, "bounds": bounds, "max_i": max_i, "samples": samples, "seed": seed })
        }
    }
}

fn verb_name(verb: &Verb) -> &'static str {
    match verb {
        Verb::Eval { .. } => "eval",
        Verb::Canon { .. } => "canon",
        Verb::Compose { .. } => "compose",
        Verb::Invert { .. } => "invert",
        Verb::Order { .. } => "order",
        Verb::Chain { .. } => "chain",
        Verb::Coset { .. } => "coset",
        Verb::Mg { .. } => "mg",
        Verb::MgRel { .. } => "mg-rel",
        Verb::Green { .. } => "green",
        Verb::SimpleWitness { .. } => "simple-witness",
        Verb::Solve { .. } => "solve",
        Verb::Enum { .. } => "enum",
        Verb::TauAc { .. } => "tau-ac",
        Verb::Verify { .. } => "verify",
    }
}

fn neighbourhood(exclude: &[String]) -> Result<CofiniteNbhd, Failure> {
    Ok(CofiniteNbhd::excluding(
        exclude
            .iter()
            .map(|s| nonzero(s))
            .collect::<Result<Vec<_>, _>>()?,
    ))
}

fn execute(verb: &Verb) -> Result<Outcome, Failure> {
    Ok(match verb {
        Verb::Eval { word } => {
            let x = element(word)?;
            Outcome::new(format(&x), Value::from(format(&x)))
        }
        Verb::Canon { x } => {
            let g = nonzero(x)?;
            let cf = g.canonical_form();
            let text = format!("{cf}\n{}", g.iso_notation());
            Outcome::new(
                text,
                json!({
                    "form": cf.to_string(),
                    "A": cf.coset.a(),
                    "n0": cf.coset.n0(),
                    "i": cf.i,
                    "j": cf.j,
                    "dom": g.dom().to_string(),
                    "shift": g.shift(),
                    "noise": g.noise(),
                }),
            )
        }
        Verb::Compose { xs } => {
            let mut acc = ZElem::Elem(Isometry::identity());
            for x in xs {
                acc = zmul(&acc, &element(x)?);
            }
            Outcome::new(format(&acc), Value::from(format(&acc)))
        }
        Verb::Invert { x } => {
            let g = nonzero(x)?.invert();
            Outcome::new(word(&g), Value::from(word(&g)))
        }
        Verb::Order { kind, g, d } => {
            let (g, d) = (nonzero(g)?, nonzero(d)?);
            let holds = match kind {
                OrderKind::Nat => natural_leq(&g, &d),
                OrderKind::Ll => ll_leq(&g, &d),
            };
            Outcome::new(holds.to_string(), Value::from(holds))
        }
        Verb::Chain { x, take, from } => {
            let cursor = ChainCursor::new(nonzero(x)?);
            let chain: Vec<Isometry> = (0..*take as u64)
                .map(|k| cursor.element(from + k))
                .collect();
            Outcome::new(lines(&chain), words(&chain))
        }
        Verb::Coset { x } => {
            let c = coset_of(&nonzero(x)?);
            Outcome::new(
                c.to_string(),
                json!({ "A": c.a(), "n0": c.n0(), "bicyclic": c.is_bicyclic() }),
            )
        }
        Verb::Mg { x } => {
            let k = mg_image(&nonzero(x)?);
            Outcome::new(k.to_string(), Value::from(k))
        }
        Verb::MgRel { g, d } => {
            let witness = mg_related(&nonzero(g)?, &nonzero(d)?);
            match witness {
                Some(e) => Outcome::new(
                    format!("true\nwitness {e}"),
                    json!({ "related": true, "witness": word(&e) }),
                ),
                None => Outcome::new("false", json!({ "related": false, "witness": null })),
            }
        }
        Verb::Green { relation, g, d } => {
            let holds = relation.related(&nonzero(g)?, &nonzero(d)?);
            Outcome::new(holds.to_string(), Value::from(holds))
        }
        Verb::SimpleWitness { g, d } => {
            let (u, v) = simple_witness(&nonzero(g)?, &nonzero(d)?);
            Outcome::new(
                format!("u = {u}\nv = {v}"),
                json!({ "u": word(&u), "v": word(&v) }),
            )
        }
        Verb::Solve { side, a, b } => {
            let (a, b) = (nonzero(a)?, nonzero(b)?);
            let sols = match side {
                Side::Left => solve_left(&a, &b),
                Side::Right => solve_right(&a, &b),
            }
            .map_err(|e| Failure::Domain(e.to_string()))?;
            Outcome::new(lines(&sols), words(&sols))
        }
        Verb::Enum {
            max_complement,
            max_offset,
            bounds: given,
        } => {
            let base = bounds(given.as_deref())?;
            let b = EnumBounds::new(
                max_complement.unwrap_or(base.max_complement),
                max_offset.unwrap_or(base.max_offset),
            );
            let all = enumerate_elements(b);
            Outcome::new(lines(&all), words(&all))
        }
        Verb::TauAc { action } => match action {
            TauAction::Shrink { g, exclude } => {
                let u = neighbourhood(exclude)?;
                let v = shrink_neighborhood(&nonzero(g)?, &u)
                    .map_err(|e| Failure::Domain(e.to_string()))?;
                let excluded: Vec<Isometry> = v.excluded().iter().cloned().collect();
                Outcome::new(lines(&excluded), json!({ "excluded": words(&excluded) }))
            }
            TauAction::Check {
                g,
                exclude,
                bounds: given,
            } => {
                let b = bounds(given.as_deref())?;
                let u = neighbourhood(exclude)?;
                let ok = check_separate_continuity(&nonzero(g)?, &u, b)
                    .map_err(|e| Failure::Domain(e.to_string()))?;
                let verdict = if ok { "PASS" } else { "FAIL" };
                Outcome {
                    text: format!("{verdict} over {b}"),
                    value: json!({ "passed": ok, "bounds": b.to_string() }),
                    ok,
                }
            }
        },
        Verb::Verify {
            suite,
            bounds: given,
            max_i,
            samples,
            seed,
        } => {
            let mut config = VerifyConfig {
                bounds: bounds(given.as_deref())?,
                ..VerifyConfig::default()
            };
            if let Some(m) = max_i {
                config.max_i = *m;
            }
            if let Some(s) = samples {
                config.samples = *s;
            }
            if let Some(s) = seed {
                config.seed = *s;
            }
            let reports = verify::run(suite, &config).map_err(|e| Failure::Usage(e.to_string()))?;
            let ok = reports.iter().all(|r| r.passed());
            let text = reports
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let value: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.id,
                        "passed": r.passed(),
                        "cases": r.cases,
                        "failed": r.failed,
                        "failures": r.failures,
                        "notes": r.notes,
                        "elapsed_ms": r.elapsed_ms as u64,
                    })
                })
                .collect();
            Outcome {
                text,
                value: Value::from(value),
                ok,
            }
        }
    })
}

/// Parses argv; a missing or unknown verb also lists the valid ones.
fn parse_args() -> Result<Cli, ExitCode> {
    match Cli::try_parse() {
        Ok(cli) => Ok(cli),
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            if matches!(
                e.kind(),
                ErrorKind::InvalidSubcommand
                    | ErrorKind::MissingSubcommand
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) {
                let verbs: Vec<String> = Cli::command()
                    .get_subcommands()
                    .map(|c| c.get_name().to_string())
                    .collect();
                eprintln!("valid verbs: {}", verbs.join(", "));
            }
            Err(ExitCode::from(code as u8))
        }
    }
}

fn main() -> ExitCode {
    let cli = match parse_args() {
        Ok(cli) => cli,
        Err(code) => return code,
    };
    let start = Instant::now();
    let result = execute(&cli.verb);
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let record = |result: Value| {
        json!({
            "verb": verb_name(&cli.verb),
            "inputs": inputs(&cli.verb),
            "result": result,
            "elapsed_ms": elapsed_ms,
        })
    };
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", record(out.value));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Usage(m) => (2, m),
                Failure::Domain(m) => (1, m),
            };
            if cli.json {
                println!("{}", record(json!({ "error": message })));
            }
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
