use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use infhecke::casimir::fn_gn_table;
use infhecke::center::{central_element, verify_central};
use infhecke::derivations::{check_derivation, euler, DerivationSpec};
use infhecke::expr::{parse_delta_poly, parse_element};
use infhecke::oracle::{center_brute, compare_span, g_centralizer, OracleConfig, SpanRelation, TruncatedBasis};
use infhecke::render;
use infhecke::structure::weight1_maximal_basis;
use infhecke::{DeltaPoly, Generator, HeckeAlgebra, NcPoly, ParseError, Rational};

#[derive(Parser)]
#[command(name = "infhecke", version, about = "Exact computations in the infinitesimal Hecke algebra H_z of sl2")]
struct Cli {
    /// The parameter z as a polynomial in D (D = h^2 + 4fe + 2h).
    #[arg(long, global = true, default_value = "0", allow_hyphen_values = true)]
    z: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Largest monomial basis the oracle may build.
    #[arg(long, global = true)]
    max_basis_size: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression.
    Nf { expr: String },
    /// Commutator [a, b].
    Comm { a: String, b: String },
    /// The central element t_z and the correction ω_z.
    Center,
    /// Check that t_z commutes with every generator.
    VerifyCenter,
    /// Table of (f_k, g_k), the hx and x components of [D^k, x].
    Fngn {
        #[arg(long)]
        n: usize,
    },
    /// Brute-force bases of the sl2-centralizer (and optionally the center).
    Centralizer {
        #[arg(long)]
        max_degree: u32,
        #[arg(long)]
        full_center: bool,
    },
    /// Weight-1 maximal vectors versus t^i D^k x and t^i [D^k, x] (z = 0 only).
    Maximal {
        #[arg(long)]
        max_degree: u32,
    },
    /// Check the Leibniz rule on the defining relations.
    DerivationCheck {
        #[arg(long, conflicts_with = "images", required_unless_present = "images")]
        euler: bool,
        /// JSON object mapping generator names to expressions.
        #[arg(long)]
        images: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
}

struct Report {
    text: String,
    verified: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, verified: true }
    }
}

/// The error message, the input, and a caret under the offending column.
fn parse_error(input: &str, e: &ParseError) -> String {
    let column = input[..e.offset.min(input.len())].chars().count();
    format!("{e}\n  {input}\n  {}^", " ".repeat(column))
}

fn element(input: &str, alg: &HeckeAlgebra) -> Result<NcPoly, Failure> {
    parse_element(input, alg).map_err(|e| Failure::Usage(parse_error(input, &e)))
}

struct Ctx {
    alg: HeckeAlgebra,
    format: Format,
    config: OracleConfig,
}

impl Ctx {
    fn z(&self) -> &DeltaPoly {
        self.alg.z()
    }

    fn poly(&self, p: &NcPoly) -> String {
        match self.format {
            Format::Latex => render::latex(p),
            _ => render::plain(p),
        }
    }

    fn delta(&self, q: &DeltaPoly) -> String {
        match self.format {
            Format::Latex => render::delta_latex(q),
            _ => render::delta_plain(q),
        }
    }

    fn element_report(&self, p: &NcPoly) -> Report {
        match self.format {
            Format::Json => Report::ok(render::json(p, self.z()).to_string()),
            _ => Report::ok(self.poly(p)),
        }
    }

    fn basis_json(&self, basis: &[NcPoly]) -> Value {
        Value::Array(basis.iter().map(render::json_terms).collect())
    }

    fn basis_lines(&self, basis: &[NcPoly]) -> String {
        basis.iter().map(|b| format!("  {}\n", self.poly(b))).collect()
    }
}

fn oracle_config(max_basis_size: Option<usize>) -> OracleConfig {
    match max_basis_size {
        None => OracleConfig::default(),
        Some(limit) => {
            let mut max_degree = 0;
            while TruncatedBasis::pbw_size(max_degree + 1) <= limit {
                max_degree += 1;
            }
            OracleConfig { max_degree, max_basis_size: limit }
        }
    }
}

fn center(ctx: &Ctx) -> Report {
    let c = central_element(&ctx.alg);
    let latex = ctx.format == Format::Latex;
    let half = Rational::new(1.into(), 2.into());
    let one = Rational::from_integer(1.into());
    let (t_syms, h, d) = if latex {
        (["e y^{2}", "h x y", "f x^{2}"], "h", "\\Delta")
    } else {
        (["ey^2", "hxy", "fx^2"], "h", "D")
    };
    let power = |k: usize| match (k, latex) {
        (0, _) => String::new(),
        (1, _) => d.to_string(),
        (k, true) => format!("{d}^{{{k}}}"),
        (k, false) => format!("{d}^{k}"),
    };
    let mut terms = vec![(t_syms[0].to_string(), one.clone()), (t_syms[1].to_string(), one.clone()), (t_syms[2].to_string(), -one)];
    for (k, zk) in c.z.terms().collect::<Vec<_>>().into_iter().rev() {
        let sym = match (k, latex) {
            (0, _) => h.to_string(),
            (_, true) => format!("{h} {}", power(k)),
            (_, false) => format!("{h}{}", power(k)),
        };
        terms.push((sym, -(zk * &half)));
    }
    for (k, wk) in c.omega.terms().collect::<Vec<_>>().into_iter().rev() {
        terms.push((power(k), -wk.clone()));
    }
    let compact =
        if latex { render::combination_latex(&terms) } else { render::combination_plain(&terms) };

    match ctx.format {
        Format::Json => Report::ok(
            json!({
                "z": render::delta_plain(&c.z),
                "omega": render::delta_plain(&c.omega),
                "t_z": compact,
                "terms": render::json_terms(&c.tz),
            })
            .to_string(),
        ),
        Format::Latex => Report::ok(format!(
            "z = {}\n\\omega_z = {}\nt_z = {compact}\nt_z = {}",
            ctx.delta(&c.z),
            ctx.delta(&c.omega),
            ctx.poly(&c.tz)
        )),
        Format::Plain => Report::ok(format!(
            "z = {}\nomega = {}\nt_z = {compact}\nnormal form: {}",
            ctx.delta(&c.z),
            ctx.delta(&c.omega),
            ctx.poly(&c.tz)
        )),
    }
}

fn verify_center(ctx: &Ctx) -> Report {
    let tz = central_element(&ctx.alg).tz;
    let failures = verify_central(&tz, &ctx.alg);
    let value = |g: Generator| failures.iter().find(|(h, _)| *h == g).map(|(_, c)| c.clone()).unwrap_or_default();
    let order = [Generator::E, Generator::F, Generator::H, Generator::X, Generator::Y];
    let verified = failures.is_empty();
    let text = match ctx.format {
        Format::Json => {
            let comms: Map<String, Value> =
                order.iter().map(|g| (g.to_string(), render::json_terms(&value(*g)))).collect();
            json!({ "z": render::delta_plain(ctx.z()), "central": verified, "commutators": comms }).to_string()
        }
        _ => {
            let mut s = String::new();
            for g in order {
                s.push_str(&format!("[{g}, t_z] = {}\n", ctx.poly(&value(g))));
            }
            s.push_str(if verified { "t_z is central" } else { "t_z is NOT central" });
            s
        }
    };
    Report { text, verified }
}

fn fngn(ctx: &Ctx, n: usize) -> Report {
    let table = fn_gn_table(n);
    let rows = table.iter().enumerate().skip(1);
    let text = match ctx.format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .map(|(k, (f, g))| json!({ "n": k, "f": render::delta_plain(f), "g": render::delta_plain(g) }))
                .collect();
            json!({ "rows": rows }).to_string()
        }
        Format::Latex => rows
            .map(|(k, (f, g))| format!("f_{{{k}}} = {}, \\quad g_{{{k}}} = {}", ctx.delta(f), ctx.delta(g)))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Plain => {
            rows.map(|(k, (f, g))| format!("{k}: ({}, {})", ctx.delta(f), ctx.delta(g))).collect::<Vec<_>>().join("\n")
        }
    };
    Report::ok(text)
}

fn centralizer(ctx: &Ctx, max_degree: u32, full_center: bool) -> Result<Report, Failure> {
    let oracle = |e: infhecke::OracleError| Failure::Usage(e.to_string());
    let cent = g_centralizer(max_degree, &ctx.alg, &ctx.config).map_err(oracle)?;
    let mut verified = true;
    let mut center_part = None;
    if full_center {
        let center = center_brute(max_degree, &ctx.alg, &ctx.config).map_err(oracle)?;
        let tz = central_element(&ctx.alg).tz;
        let step = tz.total_degree().unwrap_or(1).max(1);
        let powers: Vec<NcPoly> = (0..=max_degree / step).map(|j| ctx.alg.pow(&tz, j)).collect();
        let matches = compare_span(&center, &powers) == SpanRelation::Equal;
        verified = matches;
        center_part = Some((center, matches, powers.len()));
    }
    let text = match ctx.format {
        Format::Json => {
            let mut v = json!({
                "z": render::delta_plain(ctx.z()),
                "max_degree": max_degree,
                "centralizer": { "dimension": cent.len(), "basis": ctx.basis_json(&cent) },
            });
            if let Some((center, matches, _)) = &center_part {
                v["center"] = json!({
                    "dimension": center.len(),
                    "basis": ctx.basis_json(center),
                    "equals_span_of_t_z_powers": matches,
                });
            }
            v.to_string()
        }
        _ => {
            let mut s = format!(
                "sl2-centralizer, total degree <= {max_degree}: dimension {}\n{}",
                cent.len(),
                ctx.basis_lines(&cent)
            );
            if let Some((center, matches, count)) = &center_part {
                s.push_str(&format!("center, total degree <= {max_degree}: dimension {}\n", center.len()));
                s.push_str(&ctx.basis_lines(center));
                s.push_str(&format!(
                    "center {} span of the {count} powers of t_z in range",
                    if *matches { "equals" } else { "DIFFERS FROM" }
                ));
            }
            s.trim_end().to_string()
        }
    };
    Ok(Report { text, verified })
}

fn maximal(ctx: &Ctx, max_degree: u32) -> Result<Report, Failure> {
    let r = weight1_maximal_basis(max_degree, &ctx.alg, &ctx.config).map_err(|e| Failure::Usage(e.to_string()))?;
    let verified = r.verdict == SpanRelation::Equal;
    let text = match ctx.format {
        Format::Json => json!({
            "z": render::delta_plain(ctx.z()),
            "max_degree": r.max_degree,
            "oracle_dimension": r.oracle_dimension,
            "generated_dimension": r.generated_dimension,
            "verdict": r.verdict.to_string(),
            "oracle_basis": ctx.basis_json(&r.oracle_basis),
        })
        .to_string(),
        _ => format!(
            "weight-1 maximal vectors, total degree <= {}: dimension {}\n{}generated by t^i D^k x and t^i [D^k, x]: dimension {}\nverdict (generated vs oracle): {}",
            r.max_degree,
            r.oracle_dimension,
            ctx.basis_lines(&r.oracle_basis),
            r.generated_dimension,
            r.verdict
        ),
    };
    Ok(Report { text, verified })
}

fn read_images(path: &PathBuf, alg: &HeckeAlgebra) -> Result<DerivationSpec, Failure> {
    let raw = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let map: Map<String, Value> =
        serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut images = Vec::new();
    for (key, value) in map {
        let g = match key.chars().collect::<Vec<_>>().as_slice() {
            [c] => Generator::from_symbol(*c),
            _ => None,
        }
        .ok_or_else(|| Failure::Usage(format!("unknown generator '{key}' in {}", path.display())))?;
        let text = value
            .as_str()
            .ok_or_else(|| Failure::Usage(format!("image of {key} must be a string expression")))?;
        let p = parse_element(text, alg)
            .map_err(|e| Failure::Usage(format!("image of {key}: {}", parse_error(text, &e))))?;
        images.push((g, p));
    }
    Ok(DerivationSpec::new(images))
}

fn derivation_check(ctx: &Ctx, use_euler: bool, images: Option<&PathBuf>) -> Result<Report, Failure> {
    let spec = match (use_euler, images) {
        (true, _) => euler(),
        (false, Some(path)) => read_images(path, &ctx.alg)?,
        (false, None) => return Err(Failure::Usage("pass --euler or --images <file>".into())),
    };
    let violations = check_derivation(&spec, &ctx.alg);
    let verified = violations.is_empty();
    let text = match ctx.format {
        Format::Json => {
            let vs: Vec<Value> = violations
                .iter()
                .map(|v| json!({ "relation": v.relation.label(), "defect": render::json_terms(&v.defect) }))
                .collect();
            json!({ "z": render::delta_plain(ctx.z()), "derivation": verified, "violations": vs }).to_string()
        }
        _ => {
            let mut s = String::new();
            for v in &violations {
                s.push_str(&format!("{} violated, defect {}\n", v.relation.label(), ctx.poly(&v.defect)));
            }
            s.push_str(if verified {
                "all defining relations respected: derivation"
            } else {
                "not a derivation"
            });
            s
        }
    };
    Ok(Report { text, verified })
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let z = parse_delta_poly(&cli.z).map_err(|e| Failure::Usage(format!("--z: {}", parse_error(&cli.z, &e))))?;
    let ctx = Ctx { alg: HeckeAlgebra::with_z(z), format: cli.format, config: oracle_config(cli.max_basis_size) };
    match &cli.command {
        Command::Nf { expr } => Ok(ctx.element_report(&element(expr, &ctx.alg)?)),
        Command::Comm { a, b } => {
            let (p, q) = (element(a, &ctx.alg)?, element(b, &ctx.alg)?);
            Ok(ctx.element_report(&ctx.alg.commutator(&p, &q)))
        }
        Command::Center => Ok(center(&ctx)),
        Command::VerifyCenter => Ok(verify_center(&ctx)),
        Command::Fngn { n } => Ok(fngn(&ctx, *n)),
        Command::Centralizer { max_degree, full_center } => centralizer(&ctx, *max_degree, *full_center),
        Command::Maximal { max_degree } => maximal(&ctx, *max_degree),
        Command::DerivationCheck { euler, images } => derivation_check(&ctx, *euler, images.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            println!("{}", report.text);
            if report.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
