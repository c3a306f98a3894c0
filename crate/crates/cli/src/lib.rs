//! Command-line front end for `knotpoly`.
//!
//! Every subcommand produces a [`Report`]: the command, its inputs in
//! canonical text, one entry per step, and a verdict. The binary prints the
//! report as text, or as JSON with `--json`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use knotpoly::conway::{conway, conway_via_alexander, conway_via_skein, Method, DEFAULT_BUDGET};
use knotpoly::diagram::table::{bundled_table, parse_table, KnotRecord};
use knotpoly::diagram::{parse_gauss, parse_pd, DiagramCode};
use knotpoly::factor::{factor_over_prime_field, factor_over_z, Factorization, ModFactorization};
use knotpoly::poly::parse_poly;
use knotpoly::split::{
    achirality_obstructions, conant_check, kawauchi_split, solve_diophantine, verification_steps, CounterexampleData,
};
use knotpoly::tangle::{realize_within, SearchBounds};
use knotpoly::IntPoly;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepResult {
    pub name: String,
    pub anchor: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub steps: Vec<StepResult>,
    pub verdict: Verdict,
    /// The headline answer, e.g. a polynomial or `NO`.
    pub result: Option<String>,
    /// Structured form of the answer.
    pub data: Option<Value>,
    pub elapsed_us: u64,
}

impl Report {
    fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            inputs: BTreeMap::new(),
            steps: Vec::new(),
            verdict: Verdict::Pass,
            result: None,
            data: None,
            elapsed_us: 0,
        }
    }

    fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.into(), value.to_string());
    }

    fn step(&mut self, name: &str, anchor: &str, pass: bool, detail: impl Into<String>) {
        self.steps.push(StepResult {
            name: name.into(),
            anchor: anchor.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass => EXIT_OK,
            _ => EXIT_COMPUTATION,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(r) = &self.result {
            let _ = writeln!(out, "{r}");
        }
        for s in &self.steps {
            let mark = if s.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{mark}] {}: {}", s.name, s.detail);
        }
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        };
        let _ = writeln!(out, "verdict: {verdict} ({:.3} s)", self.elapsed_us as f64 / 1e6);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// What the binary should print and return.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Option<Report>,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "knotpoly", version, about = "Exact Conway polynomial toolkit")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conway polynomial of a knot diagram.
    Conway {
        #[arg(long, conflicts_with = "gauss", required_unless_present = "gauss")]
        pd: Option<String>,
        #[arg(long)]
        gauss: Option<String>,
        /// alexander, skein or both.
        #[arg(long, default_value = "alexander")]
        method: Method,
        /// Node limit for the skein engine.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Factor a polynomial over Z, or over F_p with `--mod p`.
    Factor {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Decide whether C(z) = F(z) F(-z).
    Split {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Mod 4 square test for C(z) C(z^2) C(iz).
    Conant {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Determinant and leading-coefficient checks.
    Obstructions {
        #[command(flatten)]
        poly: PolyArgs,
    },
    /// Build an arborescent knot with the given Conway polynomial.
    Realize {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        max_weight: Option<i64>,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        max_candidates: Option<usize>,
    },
    /// Search the integer system behind the octic's splitting shape.
    SolveDiophantine {
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
    /// Run the six-step check that the counterexample does not split.
    #[command(name = "verify-paper")]
    VerifyCounterexample {
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
    /// Compare both engines against a knot table (the bundled one by default).
    TableCheck {
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

#[derive(clap::Args, Debug)]
struct PolyArgs {
    /// Polynomial as text (`1+3z^2-z^4`) or ascending coefficients
    /// (`[1,0,3,0,-1]`). Repeat to multiply several factors.
    #[arg(long = "poly", required = true)]
    polys: Vec<String>,
}

impl PolyArgs {
    fn product(&self) -> Result<IntPoly, String> {
        let mut acc = IntPoly::one();
        for text in &self.polys {
            let p: IntPoly = parse_poly(text).map_err(|e| format!("--poly '{text}': {e}"))?;
            acc = &acc * &p;
        }
        Ok(acc)
    }
}

/// Ascending text form, `1+z^2` rather than `z^2+1`.
pub fn ascending(p: &IntPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c == &BigInt::from(0) {
            continue;
        }
        let neg = c < &BigInt::from(0);
        let mag = if neg { -c } else { c.clone() };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if i == 0 || mag != BigInt::from(1) {
            out.push_str(&mag.to_string());
        }
        match i {
            0 => {}
            1 => out.push('z'),
            _ => {
                let _ = write!(out, "z^{i}");
            }
        }
    }
    out
}

fn factor_json(f: &Factorization) -> Value {
    json!({
        "unit": f.unit,
        "content": f.content.to_string(),
        "factors": f.factors.iter().map(|(g, e)| json!({"poly": g.to_string(), "exp": e})).collect::<Vec<_>>(),
    })
}

fn mod_factor_json(f: &ModFactorization) -> Value {
    json!({
        "modulus": f.modulus.to_string(),
        "unit": f.unit.to_string(),
        "factors": f.factors.iter().map(|(g, e)| json!({"poly": g.to_string(), "exp": e})).collect::<Vec<_>>(),
    })
}

fn mod_factor_text(f: &ModFactorization) -> String {
    let mut parts = Vec::new();
    if f.unit != BigInt::from(1) || f.factors.is_empty() {
        parts.push(f.unit.to_string());
    }
    for (g, e) in &f.factors {
        let body = if g.coeffs().iter().filter(|c| **c != BigInt::from(0)).count() > 1 {
            format!("({g})")
        } else {
            g.to_string()
        };
        parts.push(if *e == 1 { body } else { format!("{body}^{e}") });
    }
    format!("{} (mod {})", parts.join(""), f.modulus)
}

type CmdResult = Result<(), String>;

fn cmd_conway(r: &mut Report, pd: Option<&str>, gauss: Option<&str>, method: Method, budget: usize) -> CmdResult {
    let diagram = match (pd, gauss) {
        (Some(t), _) => DiagramCode::Pd(parse_pd(t).map_err(|e| e.to_string())?),
        (None, Some(t)) => DiagramCode::Gauss(parse_gauss(t).map_err(|e| e.to_string())?),
        (None, None) => return Err("one of --pd or --gauss is required".into()),
    };
    r.input("diagram", &diagram);
    r.input("method", method);
    let c = match method {
        Method::Skein => conway_via_skein(&diagram, budget),
        _ => conway(&diagram, method),
    }
    .map_err(|e| e.to_string())?;
    r.step("conway polynomial", "engine", true, ascending(&c));
    r.result = Some(ascending(&c));
    r.data = Some(json!({ "conway": c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>() }));
    Ok(())
}

fn cmd_factor(r: &mut Report, poly: &PolyArgs, modulus: Option<u64>) -> CmdResult {
    let p = poly.product()?;
    r.input("poly", &p);
    match modulus {
        None => {
            let f = factor_over_z(&p).map_err(|e| e.to_string())?;
            let exact = f.reconstruct() == p;
            r.step("factorization over Z", "reconstruction", exact, f.to_string());
            r.result = Some(f.to_string());
            r.data = Some(factor_json(&f));
        }
        Some(m) => {
            r.input("mod", m);
            let reduced = p.reduce_mod(&BigInt::from(m)).map_err(|e| e.to_string())?;
            let f = factor_over_prime_field(&reduced).map_err(|e| e.to_string())?;
            let exact = f.reconstruct() == reduced;
            let text = mod_factor_text(&f);
            r.step("factorization over F_p", "reconstruction", exact, text.clone());
            r.result = Some(text);
            r.data = Some(mod_factor_json(&f));
        }
    }
    Ok(())
}

fn cmd_split(r: &mut Report, poly: &PolyArgs) -> CmdResult {
    let c = poly.product()?;
    r.input("poly", &c);
    let v = kawauchi_split(&c).map_err(|e| e.to_string())?;
    let obstructions: Vec<String> = v.obstructions.iter().map(|(q, e)| format!("({q})^{e}")).collect();
    let detail = match &v.witness {
        Some(f) => format!("YES, F = {f}"),
        None => format!("NO, obstruction {}", obstructions.join(", ")),
    };
    if let Some(f) = &v.witness {
        let exact = &(f * &f.substitute_neg()) == &c;
        r.step("witness identity", "F(z)F(-z) = C", exact, format!("F = {f}"));
    }
    r.step("splitting verdict", "C = F(z)F(-z)", true, detail);
    r.result = Some(if v.splits { "YES".into() } else { "NO".into() });
    r.data = Some(json!({
        "splits": v.splits,
        "witness": v.witness.as_ref().map(|f| f.to_string()),
        "obstructions": v.obstructions.iter().map(|(q, e)| json!({"poly": q.to_string(), "exp": e})).collect::<Vec<_>>(),
    }));
    Ok(())
}

fn cmd_conant(r: &mut Report, poly: &PolyArgs) -> CmdResult {
    let c = poly.product()?;
    r.input("poly", &c);
    let v = conant_check(&c).map_err(|e| e.to_string())?;
    let detail = match &v.witness {
        Some(w) => format!("square root {w} of {} in Z/4[x], x = z^2", v.rhs),
        None => format!("{} is not a square in Z/4[x], x = z^2", v.rhs),
    };
    r.step("mod 4 square test", "C(z)C(z^2)C(iz) = square mod 4", true, detail);
    r.result = Some(if v.holds { "SQUARE".into() } else { "NONE".into() });
    r.data = Some(json!({
        "holds": v.holds,
        "witness": v.witness.as_ref().map(|w| w.to_string()),
        "rhs": v.rhs.to_string(),
    }));
    Ok(())
}

fn cmd_obstructions(r: &mut Report, poly: &PolyArgs) -> CmdResult {
    let c = poly.product()?;
    r.input("poly", &c);
    let o = achirality_obstructions(&c).map_err(|e| e.to_string())?;
    let squares = match &o.two_squares {
        Some((a, b)) => format!(" = {a}^2 + {b}^2"),
        None => String::new(),
    };
    r.step(
        "determinant",
        "|C(2i)| is a sum of two squares",
        true,
        format!("{}{squares}: {}", o.determinant, upper(o.determinant_sum_of_two_squares)),
    );
    r.step(
        "leading coefficient",
        "|lc| is a perfect square",
        true,
        format!("{}: {}", o.leading_abs, upper(o.leading_is_square)),
    );
    r.result = Some(format!(
        "determinant {} two-squares {}; |lc| {} square {}",
        o.determinant,
        upper(o.determinant_sum_of_two_squares),
        o.leading_abs,
        upper(o.leading_is_square)
    ));
    r.data = Some(json!({
        "determinant": o.determinant.to_string(),
        "sum_of_two_squares": o.determinant_sum_of_two_squares,
        "two_squares": o.two_squares.as_ref().map(|(a, b)| [a.to_string(), b.to_string()]),
        "leading_abs": o.leading_abs.to_string(),
        "leading_is_square": o.leading_is_square,
    }));
    Ok(())
}

fn upper(b: bool) -> &'static str {
    if b {
        "TRUE"
    } else {
        "FALSE"
    }
}

fn cmd_realize(
    r: &mut Report,
    poly: &PolyArgs,
    max_weight: Option<i64>,
    max_vertices: Option<usize>,
    max_candidates: Option<usize>,
) -> CmdResult {
    let target = poly.product()?;
    r.input("poly", &target);
    let mut bounds = SearchBounds::for_target(&target);
    if let Some(w) = max_weight {
        bounds.max_abs_weight = w;
    }
    if let Some(v) = max_vertices {
        bounds.max_vertices = v;
    }
    if let Some(c) = max_candidates {
        bounds.max_candidates = c;
    }
    let found = realize_within(&target, bounds).map_err(|e| e.to_string())?;
    let how = if found.from_search { "search" } else { "pattern" };
    r.step("tree", how, true, found.tree.to_string());
    let diagram = DiagramCode::Pd(found.diagram.clone());
    let c = conway_via_alexander(&diagram).map_err(|e| e.to_string())?;
    r.step("engine check", "C(diagram) = target", c == target, ascending(&c));
    r.result = Some(found.diagram.to_string());
    r.data = Some(json!({
        "tree": found.tree.to_string(),
        "pd": found.diagram.to_string(),
        "crossings": found.diagram.crossing_count(),
        "conway": ascending(&c),
    }));
    Ok(())
}

fn cmd_diophantine(r: &mut Report, bound: u64) -> CmdResult {
    r.input("bound", bound);
    let d = solve_diophantine(bound).map_err(|e| e.to_string())?;
    r.step(
        "candidates",
        "4a-b^2=16 and 2a+c^2=16",
        true,
        format!("{} triples satisfy the outer equations", d.candidates),
    );
    r.step(
        "solutions",
        "a^2-2bc=16",
        true,
        format!("{} solutions with |a|,|b|,|c| <= {bound}", d.solutions.len()),
    );
    r.step(
        "reduction",
        "a,b,c = 0 mod 4 and a/4 even",
        d.reduction_checked,
        upper(d.reduction_checked).to_string(),
    );
    r.result = Some(if d.solutions.is_empty() { "NO SOLUTIONS".into() } else { format!("{:?}", d.solutions) });
    r.data = Some(json!({
        "bound": d.bound,
        "candidates": d.candidates,
        "solutions": d.solutions.iter().map(|(a, b, c)| [a.to_string(), b.to_string(), c.to_string()]).collect::<Vec<_>>(),
        "reduction_checked": d.reduction_checked,
    }));
    Ok(())
}

fn cmd_verify(r: &mut Report, bound: u64) -> CmdResult {
    let data = CounterexampleData {
        bound,
        ..CounterexampleData::default()
    };
    r.input("conway", &data.conway);
    r.input("bound", bound);
    let v = verification_steps(&data);
    for s in &v.steps {
        r.step(&s.name, &s.anchor, s.pass, s.detail.clone());
    }
    r.result = Some(if v.all_pass() { "C_K does not split".into() } else { "verification failed".into() });
    Ok(())
}

/// Both engines, mirror and shape checks for one record; `Err` describes the
/// first mismatch.
fn check_record(rec: &KnotRecord, budget: usize) -> Result<String, String> {
    let pd = rec.diagram().map_err(|e| e.to_string())?;
    let d = DiagramCode::Pd(pd);
    let expected = rec.conway_poly();
    let alex = conway_via_alexander(&d).map_err(|e| e.to_string())?;
    let skein = conway_via_skein(&d, budget).map_err(|e| e.to_string())?;
    let mirror = conway_via_alexander(&d.mirror()).map_err(|e| e.to_string())?;
    if alex != skein {
        return Err(format!("alexander {} != skein {}", ascending(&alex), ascending(&skein)));
    }
    if alex != expected {
        return Err(format!("computed {} != reference {}", ascending(&alex), ascending(&expected)));
    }
    if mirror != alex {
        return Err(format!("mirror gives {}", ascending(&mirror)));
    }
    if !alex.is_even() || alex.constant_term() != BigInt::from(1) {
        return Err(format!("{} is not even with constant term 1", ascending(&alex)));
    }
    Ok(ascending(&alex))
}

fn cmd_table(r: &mut Report, file: Option<&PathBuf>, budget: usize) -> CmdResult {
    let table = match file {
        Some(path) => {
            r.input("file", path.display());
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_table(&text).map_err(|e| e.to_string())?
        }
        None => {
            r.input("file", "bundled");
            bundled_table()
        }
    };
    let mut mismatches = 0;
    for rec in &table {
        match check_record(rec, budget) {
            Ok(c) => r.step(&rec.name, "alexander = skein = reference", true, c),
            Err(e) => {
                mismatches += 1;
                r.step(&rec.name, "alexander = skein = reference", false, e);
            }
        }
    }
    r.result = Some(format!("{} knots, {mismatches} mismatches", table.len()));
    r.data = Some(json!({ "knots": table.len(), "mismatches": mismatches }));
    Ok(())
}

fn execute(cli: &Cli, r: &mut Report) -> CmdResult {
    match &cli.command {
        Command::Conway { pd, gauss, method, budget } => {
            cmd_conway(r, pd.as_deref(), gauss.as_deref(), *method, *budget)
        }
        Command::Factor { poly, modulus } => cmd_factor(r, poly, *modulus),
        Command::Split { poly } => cmd_split(r, poly),
        Command::Conant { poly } => cmd_conant(r, poly),
        Command::Obstructions { poly } => cmd_obstructions(r, poly),
        Command::Realize {
            poly,
            max_weight,
            max_vertices,
            max_candidates,
        } => cmd_realize(r, poly, *max_weight, *max_vertices, *max_candidates),
        Command::SolveDiophantine { bound } => cmd_diophantine(r, *bound),
        Command::VerifyCounterexample { bound } => cmd_verify(r, *bound),
        Command::TableCheck { file, budget } => cmd_table(r, file.as_ref(), *budget),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Conway { .. } => "conway",
        Command::Factor { .. } => "factor",
        Command::Split { .. } => "split",
        Command::Conant { .. } => "conant",
        Command::Obstructions { .. } => "obstructions",
        Command::Realize { .. } => "realize",
        Command::SolveDiophantine { .. } => "solve-diophantine",
        Command::VerifyCounterexample { .. } => "verify-paper",
        Command::TableCheck { .. } => "table-check",
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return Outcome {
                code: if informational { EXIT_OK } else { EXIT_USAGE },
                report: None,
                stdout: if informational { e.to_string() } else { String::new() },
                stderr: if informational { String::new() } else { e.to_string() },
            };
        }
    };
    let start = Instant::now();
    let mut report = Report::new(command_name(&cli.command));
    let mut stderr = String::new();
    match execute(&cli, &mut report) {
        Ok(()) => {
            let all = !report.steps.is_empty() && report.steps.iter().all(|s| s.pass);
            report.verdict = if all { Verdict::Pass } else { Verdict::Fail };
        }
        Err(e) => {
            report.step("error", "computation", false, e.clone());
            report.verdict = Verdict::Error;
            stderr = format!("error: {e}\n");
        }
    }
    report.elapsed_us = start.elapsed().as_micros() as u64;
    let stdout = if cli.json { report.to_json() + "\n" } else { report.to_text() };
    Outcome {
        code: report.exit_code(),
        report: Some(report),
        stdout,
        stderr,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascending_text() {
        assert_eq!(ascending(&"z^2+1".parse().unwrap()), "1+z^2");
        assert_eq!(ascending(&"-2z^4+z^2-1".parse().unwrap()), "-1+z^2-2z^4");
        assert_eq!(ascending(&IntPoly::zero()), "0");
        assert_eq!(ascending(&"3z".parse().unwrap()), "3z");
    }

    #[test]
    fn repeated_polys_multiply() {
        let args = PolyArgs {
            polys: vec!["1+z".into(), "[1,-1]".into()],
        };
        assert_eq!(args.product().unwrap(), "1-z^2".parse().unwrap());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["knotpoly"]).code, EXIT_USAGE);
        assert_eq!(run(["knotpoly", "frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run(["knotpoly", "split"]).code, EXIT_USAGE);
        assert_eq!(run(["knotpoly", "conway", "--method", "guess", "--pd", "[]"]).code, EXIT_USAGE);
        assert_eq!(run(["knotpoly", "--help"]).code, EXIT_OK);
    }

    #[test]
    fn computation_error() {
        let out = run(["knotpoly", "split", "--poly", "1+z"]);
        assert_eq!(out.code, EXIT_COMPUTATION);
        assert_eq!(out.report.unwrap().verdict, Verdict::Error);
        assert!(out.stderr.contains("not even"));
    }
}
