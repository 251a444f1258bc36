use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use inttrig::cone_ops::{
    adjacent, cone_simplex, euclid_reduce, permute, plucker, sba_cones, simplex_partner_check, t_i,
    verify_adjacent_relations, verify_canonical_point, verify_cycle_products, verify_plucker_transpose,
    verify_special_det, verify_transpose_relations, Permutation, Report,
};
use inttrig::document::{
    cone_value, form_value, int_value, object, parse_document, parse_permutation, parse_rational, proj_value,
    rational_value, report_value, to_canonical, vector_value,
};
use inttrig::sample::{random_simple_cone, rng};
use inttrig::trig2d::{iarctan2, icos2, isin2, itan2, lls, sail, sba_by_t_chain, sba_classical, triangle_exists_tangents};
use inttrig::{arctan_form, Angle2D, Cone, Error};
use num_traits::Signed;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "inttrig", version, about = "Exact integer trigonometry of lattice cones")]
struct Cli {
    /// Canonical JSON output (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Plain text output.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form, sines, cosines and tangents of a cone.
    Arctan { path: String },
    /// Planar trigonometry of a rational tangent or a 2D cone file.
    Trig2d {
        input: String,
        /// Also list the strong best approximations.
        #[arg(long)]
        sba: bool,
    },
    /// Apply one operator to a cone.
    #[command(group(ArgGroup::new("op").required(true)))]
    Transform {
        path: String,
        /// Permutation in cycle "(1,3)" or one-line "[3,2,1]" notation.
        #[arg(long, group = "op")]
        transpose: Option<String>,
        #[arg(long, group = "op")]
        adjacent: Option<usize>,
        /// Euclidean reduction E_i.
        #[arg(long, group = "op")]
        reduce: Option<usize>,
        #[arg(long, group = "op")]
        t: Option<usize>,
    },
    /// Check the congruence relations on a cone file or on random simple cones.
    Verify {
        #[arg(required_unless_present = "random")]
        path: Option<String>,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Number of random simple cones to check instead of a file.
        #[arg(long, conflicts_with = "path")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of edges of the random cones (default: cycle through 2, 3, 4).
        #[arg(long)]
        dim: Option<usize>,
        /// Bound on isin_k of the random cones.
        #[arg(long, default_value_t = 1_000_000)]
        max_isin: u64,
    },
    /// Existence of a lattice triangle with the given integer tangents.
    Triangle { a: String, b: String, c: String },
    /// Strong best approximations of a rational, or of a cone file.
    Sba {
        input: String,
        #[arg(long, visible_alias = "depth", default_value_t = 16)]
        max_steps: usize,
    },
    /// Plücker coordinates and the transpose congruences.
    Plucker { path: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Transpose,
    Cycle,
    Adjacent,
    Simplex,
    Propp,
    SpecialDet,
    Plucker,
    All,
}

const SUITES: [Suite; 7] = [
    Suite::Transpose,
    Suite::Cycle,
    Suite::Adjacent,
    Suite::Simplex,
    Suite::Propp,
    Suite::SpecialDet,
    Suite::Plucker,
];

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Transpose => "transpose",
            Suite::Cycle => "cycle",
            Suite::Adjacent => "adjacent",
            Suite::Simplex => "simplex",
            Suite::Propp => "propp",
            Suite::SpecialDet => "special-det",
            Suite::Plucker => "plucker",
            Suite::All => "all",
        }
    }
}

enum Failure {
    Input(String),
    Inapplicable(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if inapplicable(&e) {
            Failure::Inapplicable(e)
        } else {
            Failure::Input(e.to_string())
        }
    }
}

/// Errors meaning "valid input, but the operator does not apply".
fn inapplicable(e: &Error) -> bool {
    matches!(
        e,
        Error::NotInvertible { .. }
            | Error::TrivialAngle
            | Error::NonPositiveTangent(_)
            | Error::NoReduction
            | Error::BranchAmbiguity(_)
            | Error::NotSimple
            | Error::CosineNotInvertible { .. }
            | Error::NotACycle
            | Error::ZeroCosine(_)
            | Error::CosineTooSmall { .. }
            | Error::TooSmall { .. }
            | Error::NonUnitEdgeLengths(..)
    )
}

type Outcome = Result<(Value, bool), Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    Ok(s)
}

fn load_cone(path: &str) -> Result<Cone, Failure> {
    Ok(parse_document(&read_input(path)?)?.to_cone()?)
}

fn merged(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn cmd_arctan(path: &str) -> Outcome {
    let f = arctan_form(&load_cone(path)?)?;
    Ok((form_value(&f), true))
}

fn angle_value(a: &Angle2D) -> Result<Value, Error> {
    let pts = sail(a)?;
    Ok(object(vec![
        ("isin", int_value(&isin2(a))),
        ("icos", int_value(&icos2(a))),
        ("itan", rational_value(&itan2(a))),
        ("lls", vector_value(lls(a)?.elements())),
        ("sail", Value::Array(pts.iter().map(|p| vector_value(p)).collect())),
    ]))
}

fn sba_value(q: &inttrig::ExactRat) -> Value {
    Value::Array(sba_classical(q).iter().map(rational_value).collect())
}

fn cmd_trig2d(input: &str, with_sba: bool) -> Outcome {
    let angle = match parse_rational(input) {
        Ok(q) => iarctan2(&q)?,
        Err(_) => Angle2D::from_cone(&load_cone(input)?)?,
    };
    let mut v = angle_value(&angle)?;
    if with_sba {
        v = merged(v, object(vec![("sba", sba_value(&itan2(&angle)))]));
    }
    Ok((v, true))
}

fn cmd_transform(path: &str, op: &Command) -> Outcome {
    let c = load_cone(path)?;
    let Command::Transform { transpose, adjacent: adj, reduce, t, .. } = op else {
        unreachable!("dispatched on Transform")
    };
    let out = if let Some(p) = transpose {
        permute(&c, &parse_permutation(p, Some(c.k()))?)?
    } else if let Some(i) = adj {
        adjacent(&c, *i)?
    } else if let Some(i) = reduce {
        euclid_reduce(&c, *i)?
    } else if let Some(i) = t {
        t_i(&c, *i)?
    } else {
        unreachable!("clap requires one operator")
    };
    let f = arctan_form(&out)?;
    Ok((merged(object(vec![("cone", cone_value(&out))]), form_value(&f)), true))
}

fn run_suite(c: &Cone, suite: Suite) -> Result<Report, Error> {
    let k = c.k();
    let mut r = Report::default();
    match suite {
        Suite::Transpose => {
            for j in 2..=k {
                for i in 1..j {
                    r.extend(verify_transpose_relations(c, i, j)?);
                }
            }
        }
        Suite::Cycle => r.extend(verify_cycle_products(c, &Permutation::standard_cycle(k))?),
        Suite::Adjacent => {
            for i in 1..=k {
                r.extend(verify_adjacent_relations(c, i)?);
            }
        }
        Suite::Simplex => r.extend(simplex_partner_check(&cone_simplex(c)?)?),
        Suite::Propp => r.extend(verify_canonical_point(c)?),
        Suite::SpecialDet => r.extend(verify_special_det(c)?),
        Suite::Plucker => {
            for i in 1..k {
                r.extend(verify_plucker_transpose(c, i)?);
            }
        }
        Suite::All => unreachable!("expanded by the caller"),
    }
    Ok(r)
}

fn selected(suite: Suite) -> Vec<Suite> {
    if suite == Suite::All {
        SUITES.to_vec()
    } else {
        vec![suite]
    }
}

fn cmd_verify_file(path: &str, suite: Suite) -> Outcome {
    let doc = parse_document(&read_input(path)?)?;
    let c = doc.to_cone()?;
    let mut report = Report::default();
    if let Some(stated) = &doc.grid {
        let computed = arctan_form(&c)?.grid().to_rows();
        let shown = |m: &[Vec<inttrig::ExactInt>]| {
            m.iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                .collect::<Vec<_>>()
                .join(";")
        };
        report.push(
            "stated grid",
            *stated == computed,
            format!("({}) = ({})", shown(stated), shown(&computed)),
        );
    }
    for s in selected(suite) {
        match run_suite(&c, s) {
            Ok(r) => report.extend(r),
            // `all` skips suites whose hypotheses fail; a single suite reports the error
            Err(e) if suite == Suite::All && inapplicable(&e) => {
                report.info(format!("{} skipped", s.name()), true, e.name())
            }
            Err(e) => return Err(e.into()),
        }
    }
    let holds = report.holds();
    let v = merged(object(vec![("suite", Value::String(suite.name().into()))]), report_value(&report));
    Ok((v, holds))
}

fn cmd_verify_random(n: usize, seed: u64, dim: Option<usize>, max_isin: u64, suite: Suite) -> Outcome {
    if dim.is_some_and(|k| !(2..=8).contains(&k)) || max_isin == 0 {
        return Err(Failure::Input("--dim must be in 2..=8 and --max-isin positive".into()));
    }
    let mut r = rng(seed);
    let suites = selected(suite);
    // per suite: passed cases, failing cases, skipped cases by error name
    let mut passed = vec![0usize; suites.len()];
    let mut failed: Vec<Vec<Value>> = vec![Vec::new(); suites.len()];
    let mut skipped: Vec<std::collections::BTreeMap<&'static str, usize>> = vec![Default::default(); suites.len()];
    for case in 0..n {
        let k = dim.unwrap_or(2 + case % 3);
        let c = random_simple_cone(&mut r, k, max_isin);
        for (si, s) in suites.iter().enumerate() {
            match run_suite(&c, *s) {
                Ok(rep) if rep.holds() => passed[si] += 1,
                Ok(rep) => {
                    let bad: Vec<String> = rep
                        .checks
                        .iter()
                        .filter(|ch| ch.required && !ch.holds)
                        .map(|ch| format!("{}: {}", ch.name, ch.details))
                        .collect();
                    failed[si].push(object(vec![
                        ("case", Value::String(case.to_string())),
                        ("cone", cone_value(&c)),
                        ("failed", Value::Array(bad.into_iter().map(Value::String).collect())),
                    ]));
                }
                Err(e) if inapplicable(&e) => *skipped[si].entry(e.name()).or_default() += 1,
                Err(e) => return Err(e.into()),
            }
        }
    }
    let mut checks = Vec::new();
    let mut holds = true;
    for (si, s) in suites.iter().enumerate() {
        holds &= failed[si].is_empty();
        let skips: serde_json::Map<String, Value> = skipped[si]
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
            .collect();
        checks.push(object(vec![
            ("name", Value::String(s.name().into())),
            ("holds", Value::Bool(failed[si].is_empty())),
            ("passed", Value::String(passed[si].to_string())),
            ("skipped", Value::Object(skips)),
            ("failures", Value::Array(failed[si].clone())),
        ]));
    }
    let v = object(vec![
        ("suite", Value::String(suite.name().into())),
        ("seed", Value::String(seed.to_string())),
        ("cases", Value::String(n.to_string())),
        ("max_isin", Value::String(max_isin.to_string())),
        ("holds", Value::Bool(holds)),
        ("checks", Value::Array(checks)),
    ]);
    Ok((v, holds))
}

fn cmd_triangle(a: &str, b: &str, c: &str) -> Outcome {
    let t = [parse_rational(a)?, parse_rational(b)?, parse_rational(c)?];
    if !t.iter().all(|q| q.is_positive()) {
        return Err(Failure::Input("tangents must be positive".into()));
    }
    let v = triangle_exists_tangents(&t)?;
    let ordering: Vec<Value> = v.ordering.iter().map(|i| Value::String((i + 1).to_string())).collect();
    let out = object(vec![
        ("exists", Value::Bool(v.exists)),
        ("ordering", Value::Array(ordering)),
        ("bracket_values", Value::Array(vec![proj_value(&v.bracket3), proj_value(&v.bracket2)])),
    ]);
    Ok((out, true))
}

fn cmd_sba(input: &str, max_steps: usize) -> Outcome {
    if let Ok(q) = parse_rational(input) {
        if !q.is_positive() {
            return Err(Failure::Input(format!("expected a positive rational, got {q}")));
        }
        let chain = match sba_by_t_chain(&q) {
            Ok(list) => Value::Array(list.iter().map(rational_value).collect()),
            Err(e) => Value::String(e.name().into()),
        };
        let v = object(vec![("sba", sba_value(&q)), ("t_chain", chain)]);
        return Ok((v, true));
    }
    let c = load_cone(input)?;
    let forms = sba_cones(&c, max_steps)?;
    let v = object(vec![
        ("count", Value::String(forms.len().to_string())),
        ("cones", Value::Array(forms.iter().map(form_value).collect())),
    ]);
    Ok((v, true))
}

fn cmd_plucker(path: &str) -> Outcome {
    let c = load_cone(path)?;
    let p = plucker(&c)?;
    let mut report = Report::default();
    for i in 1..c.k() {
        report.extend(verify_plucker_transpose(&c, i)?);
    }
    let holds = report.holds();
    Ok((merged(object(vec![("plucker", vector_value(&p))]), report_value(&report)), holds))
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::Null => Some("null".into()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items
                .iter()
                .map(|x| if x.is_array() || x.is_object() { None } else { scalar_text(x) })
                .collect();
            parts.map(|p| format!("({})", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn is_check(v: &Value) -> bool {
    v.as_object()
        .is_some_and(|m| m.contains_key("name") && m.contains_key("holds") && m.contains_key("details"))
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) if is_check(v) => {
            let tag = match (m["holds"].as_bool(), m.get("required").and_then(Value::as_bool)) {
                (_, Some(false)) => "info",
                (Some(true), _) => "PASS",
                _ => "FAIL",
            };
            let name = m["name"].as_str().unwrap_or_default();
            let details = m["details"].as_str().unwrap_or_default();
            out.push_str(&format!("{pad}{tag} {name}: {details}\n"));
        }
        Value::Object(m) => {
            for (k, x) in m {
                match scalar_text(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar_text(x) {
                    Some(s) => out.push_str(&format!("{pad}{s}\n")),
                    None if is_check(x) => render_text(x, indent, out),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(x, indent + 2, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other).unwrap_or_default())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Arctan { path } => cmd_arctan(path),
        Command::Trig2d { input, sba } => cmd_trig2d(input, *sba),
        op @ Command::Transform { path, .. } => cmd_transform(path, op),
        Command::Verify { path, suite, random, seed, dim, max_isin } => match (path, random) {
            (_, Some(n)) => cmd_verify_random(*n, *seed, *dim, *max_isin, *suite),
            (Some(p), None) => cmd_verify_file(p, *suite),
            (None, None) => Err(Failure::Input("a cone file or --random N is required".into())),
        },
        Command::Triangle { a, b, c } => cmd_triangle(a, b, c),
        Command::Sba { input, max_steps } => cmd_sba(input, *max_steps),
        Command::Plucker { path } => cmd_plucker(path),
    };
    match outcome {
        Ok((v, holds)) => {
            let mut s = String::new();
            if cli.text {
                render_text(&v, 0, &mut s);
            } else {
                s = to_canonical(&v) + "\n";
            }
            let _ = std::io::stdout().lock().write_all(s.as_bytes());
            if holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Inapplicable(e)) => {
            println!("{}", e.name());
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
