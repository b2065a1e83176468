use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use leviform::algebra::form::covector_name;
use leviform::algebra::poly::{default_names, format_monomial};
use leviform::algebra::gauss::rational_to_string;
use leviform::levi::{complexify, is_levi_flat, singular_locus_is_origin};
use leviform::local::{local_algebra_basis, milnor_number};
use leviform::normal_form::{arnold_template, jet, homogeneous_report, theorem2_template, NormalFormTemplate};
use leviform::parser::{parse_holomorphic, parse_real_analytic};
use leviform::quasihomogeneous::{find_weights, newton_support, semiqh_split, WeightSystem};
use leviform::{Error, Limits, MilnorNumber};

#[derive(Parser)]
#[command(name = "leviform", version, about = "Exact Levi-flatness checks and singularity invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Number of complex variables.
    #[arg(short = 'n', long = "nvars", value_parser = clap::value_parser!(u32).range(1..))]
    nvars: u32,
    /// Emit JSON instead of plain text.
    #[arg(long)]
    json: bool,
    /// Read the expression from a file.
    #[arg(long, conflicts_with = "expr")]
    file: Option<PathBuf>,
    /// Largest S-pair degree processed by standard-basis computations.
    #[arg(long, env = "LEVIFORM_DEGREE_CAP", default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    degree_cap: u32,
    /// The expression, unless --file is given.
    #[arg(required_unless_present = "file")]
    expr: Option<String>,
}

/// Which principal part the normal form is built around.
#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    /// Homogeneous principal part: coarse template up to degree mu+1, plus
    /// the quasihomogeneous refinement when available.
    Homogeneous,
    /// Semiquasihomogeneous holomorphic part.
    Semiqh,
}

#[derive(Subcommand)]
enum Command {
    /// Milnor number of a holomorphic germ.
    Milnor(Common),
    /// Monomial basis of the local algebra.
    Basis(Common),
    /// Quasihomogeneous weights of the support.
    Weights(Common),
    /// Semiquasihomogeneous split f = Q + F'.
    Split(Common),
    /// k-jet of a holomorphic polynomial.
    Jet {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'k', long)]
        order: u32,
    },
    /// Complexification F(z, w) of a real-analytic polynomial.
    Complexify(Common),
    /// Levi-flatness certificate.
    Levicheck(Common),
    /// Whether the complexified singular locus is the origin.
    Singcheck(Common),
    /// Normal-form template for a Levi-flat hypersurface.
    Normalform {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "homogeneous")]
        shape: Shape,
    },
    /// Quasihomogeneous normal form Q + sum c_j e_j.
    Arnold(Common),
}

struct Output {
    plain: String,
    json: Value,
}

fn to_json<T: serde::Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn weights_text(w: &WeightSystem) -> String {
    let alpha: Vec<String> = w.alpha.iter().map(rational_to_string).collect();
    let mut s = format!("alpha = ({}), d = 1", alpha.join(", "));
    if w.ambiguous {
        s.push_str(" (ambiguous)");
    }
    s
}

fn template_text(t: &NormalFormTemplate) -> String {
    let mut s = format!("{t}\nmu = {}, bound = {}", t.mu, t.degree_bound);
    if t.heuristic {
        s.push_str("\nHEURISTIC");
    }
    s
}

fn read_input(c: &Common) -> Result<String, String> {
    match (&c.file, &c.expr) {
        (Some(path), _) => std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display())),
        (None, Some(e)) => Ok(e.clone()),
        (None, None) => Err("no expression given".into()),
    }
}

fn run(command: &Command, src: &str, c: &Common) -> Result<Output, Error> {
    let n = c.nvars as usize;
    let limits = Limits {
        degree_cap: c.degree_cap,
    };
    let names = default_names(n);
    Ok(match command {
        Command::Milnor(_) => {
            let f = parse_holomorphic(src, n)?;
            match milnor_number(&f, limits)? {
                MilnorNumber::Finite(mu) => Output {
                    plain: mu.to_string(),
                    json: json!({ "mu": mu }),
                },
                MilnorNumber::Infinite => return Err(Error::NonIsolated),
            }
        }
        Command::Basis(_) => {
            let b = local_algebra_basis(&parse_holomorphic(src, n)?, limits)?;
            let monos: Vec<String> = b
                .monomials
                .iter()
                .map(|e| format_monomial(e, &names).unwrap_or_else(|| "1".into()))
                .collect();
            Output {
                plain: format!("{}\nmu = {}", monos.join(", "), b.mu),
                json: to_json(&b),
            }
        }
        Command::Weights(_) => {
            let w = find_weights(&newton_support(&parse_holomorphic(src, n)?))?;
            Output {
                plain: weights_text(&w),
                json: to_json(&w),
            }
        }
        Command::Split(_) => {
            let s = semiqh_split(&parse_holomorphic(src, n)?, limits)?;
            Output {
                plain: format!(
                    "Q = {}\nF' = {}\n{}",
                    s.q.display_with(&names),
                    s.fprime.display_with(&names),
                    weights_text(&s.weights)
                ),
                json: to_json(&s),
            }
        }
        Command::Jet { order, .. } => {
            let j = jet(&parse_holomorphic(src, n)?, *order);
            Output {
                plain: j.display_with(&names).to_string(),
                json: to_json(&j),
            }
        }
        Command::Complexify(_) => {
            let fc = complexify(&parse_real_analytic(src, n)?);
            Output {
                plain: fc.to_string(),
                json: json!({ "half": n, "poly": to_json(fc.poly()) }),
            }
        }
        Command::Levicheck(_) => {
            let cert = is_levi_flat(&parse_real_analytic(src, n)?)?;
            let mut plain = cert.verdict.to_string();
            let mut out = json!({
                "verdict": to_json(&cert.verdict),
                "reduced_equation": to_json(cert.reduced_equation.poly()),
            });
            if let Some(w) = &cert.witness {
                let basis: Vec<String> = w.covectors.iter().map(|&k| covector_name(n, k)).collect();
                plain.push_str(&format!("\nwitness: ({})*{}", w.coefficient, basis.join("^")));
                out["witness"] = json!({
                    "covectors": w.covectors,
                    "coefficient": to_json(w.coefficient.poly()),
                });
            }
            Output { plain, json: out }
        }
        Command::Singcheck(_) => {
            let origin = singular_locus_is_origin(&parse_real_analytic(src, n)?, limits)?;
            Output {
                plain: origin.to_string(),
                json: json!({ "singular_locus_is_origin": origin }),
            }
        }
        Command::Normalform { shape, .. } => {
            let f = parse_real_analytic(src, n)?;
            match shape {
                Shape::Homogeneous => {
                    let r = homogeneous_report(&f, limits)?;
                    let mut plain = format!("coarse: {}", template_text(&r.coarse));
                    if let Some(t) = &r.refined {
                        plain.push_str(&format!("\nrefined: {}", template_text(t)));
                    }
                    Output {
                        plain,
                        json: json!({
                            "verdict": to_json(&r.certificate.verdict),
                            "coarse": to_json(&r.coarse),
                            "refined": r.refined.as_ref().map(to_json),
                        }),
                    }
                }
                Shape::Semiqh => {
                    let t = theorem2_template(&f, limits)?;
                    Output {
                        plain: template_text(&t),
                        json: to_json(&t),
                    }
                }
            }
        }
        Command::Arnold(_) => {
            let t = arnold_template(&parse_holomorphic(src, n)?, limits)?;
            Output {
                plain: t.to_string(),
                json: to_json(&t),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = match &cli.command {
        Command::Milnor(c)
        | Command::Basis(c)
        | Command::Weights(c)
        | Command::Split(c)
        | Command::Complexify(c)
        | Command::Levicheck(c)
        | Command::Singcheck(c)
        | Command::Arnold(c) => c,
        Command::Jet { common, .. } | Command::Normalform { common, .. } => common,
    };
    let src = match read_input(common) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(&cli.command, &src, common) {
        Ok(out) => {
            if common.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("valid json"));
            } else {
                println!("{}", out.plain);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}: {e}", e.category());
            ExitCode::from(1)
        }
    }
}
