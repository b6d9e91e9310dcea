//! The JSON algebra-spec format, the analysis commands and their reports.
//! The binary in `main.rs` is a thin argument parser over this module.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{has_unique_simple, jacobson_radical, FinDimAlgebra};
use crate::check::{all_passed, CheckResult};
use crate::coeff::{parse_rational, Coeff, Domain, DomainDescriptor};
use crate::error::{Error, Result};
use crate::hopf::{
    certify_isotypic, character_projector, check_regular_idempotent, chevalley_check, dual, dual_regular_idempotent,
    hecke_algebra, hecke_theorem_check, hecke_unit, quotient_hopf, verify_axioms, Character, HopfAlgebraData,
    IdempotentEntry,
};
use crate::linalg::{CoproductTensor, Matrix, StructureTensor, Vector};
use crate::presentation::{
    build_double_cover, build_fk3, build_group_algebra_c2, build_group_algebra_s3, build_sweedler4, double_cover_dual,
    fk3_dual, Example, Fk3Lambdas,
};

/// One sparse structure-constant entry `[i, j, k, c]`.
pub type Quadruple = (usize, usize, usize, Value);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AntipodeSpec {
    /// The token `"solve"`.
    Solve(String),
    /// Row-major matrix with `S(bⱼ)` in column `j`.
    Matrix(Vec<Vec<Value>>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterSpec {
    pub name: String,
    pub dim: usize,
    pub values: Vec<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSpecFile {
    #[serde(default)]
    pub name: String,
    pub field: DomainDescriptor,
    pub dim: usize,
    pub basis: Vec<String>,
    /// `bᵢbⱼ = Σ c·b_k`.
    pub mult: Vec<Quadruple>,
    pub unit: Vec<Value>,
    /// `Δ(bᵢ) = Σ c·bⱼ⊗b_k`.
    pub comult: Vec<Quadruple>,
    pub counit: Vec<Value>,
    pub antipode: AntipodeSpec,
    #[serde(default)]
    pub characters: Vec<CharacterSpec>,
}

fn decode_vector(domain: &Domain, values: &[Value], n: usize, what: &str) -> Result<Vector> {
    if values.len() != n {
        return Err(Error::Input(format!("{what} has {} entries, expected {n}", values.len())));
    }
    values.iter().map(|v| domain.decode(v)).collect()
}

fn decode_quadruples(
    domain: &Domain,
    quads: &[Quadruple],
    n: usize,
    what: &str,
) -> Result<Vec<(usize, usize, usize, Coeff)>> {
    quads
        .iter()
        .map(|(i, j, k, c)| {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::Input(format!("{what} entry [{i}, {j}, {k}] is out of range for dimension {n}")));
            }
            Ok((*i, *j, *k, domain.decode(c)?))
        })
        .collect()
}

fn inline_json(v: &Value) -> String {
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(inline_json).collect::<Vec<_>>().join(", ")),
        Value::Object(o) => format!(
            "{{{}}}",
            o.iter()
                .map(|(k, x)| format!("{}: {}", Value::String(k.clone()), inline_json(x)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        scalar => scalar.to_string(),
    }
}

/// Indented JSON that keeps short arrays and objects (quadruples, sparse
/// polynomial coefficients) on one line.
fn write_json(v: &Value, indent: usize, out: &mut String) {
    const WIDTH: usize = 96;
    let items: Vec<(Option<&String>, &Value)> = match v {
        Value::Array(a) => a.iter().map(|x| (None, x)).collect(),
        Value::Object(o) => o.iter().map(|(k, x)| (Some(k), x)).collect(),
        _ => Vec::new(),
    };
    let inline = inline_json(v);
    if items.is_empty() || indent + inline.len() <= WIDTH {
        out.push_str(&inline);
        return;
    }
    let (open, close) = if v.is_array() { ('[', ']') } else { ('{', '}') };
    out.push(open);
    for (n, (key, item)) in items.into_iter().enumerate() {
        out.push_str(if n == 0 { "\n" } else { ",\n" });
        out.push_str(&" ".repeat(indent + 2));
        if let Some(k) = key {
            out.push_str(&format!("{}: ", Value::String(k.clone())));
        }
        write_json(item, indent + 2, out);
    }
    out.push('\n');
    out.push_str(&" ".repeat(indent));
    out.push(close);
}

impl AlgebraSpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        write_json(&serde_json::to_value(self).expect("spec serializes"), 0, &mut out);
        out
    }

    /// Builds the Hopf algebra and characters. Axioms are not checked here.
    pub fn build(&self) -> Result<Example> {
        let domain = Domain::from_descriptor(&self.field)?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Input(format!("{} basis labels for dimension {n}", self.basis.len())));
        }
        let mult = StructureTensor::from_quadruples(n, decode_quadruples(&domain, &self.mult, n, "mult")?)?;
        let unit = decode_vector(&domain, &self.unit, n, "unit")?;
        let algebra = FinDimAlgebra::new(domain.clone(), self.basis.clone(), mult, unit)?;
        let comult = CoproductTensor::from_quadruples(n, decode_quadruples(&domain, &self.comult, n, "comult")?)?;
        let counit = decode_vector(&domain, &self.counit, n, "counit")?;
        let hopf = match &self.antipode {
            AntipodeSpec::Solve(token) if token == "solve" => {
                HopfAlgebraData::with_solved_antipode(algebra, comult, counit)?
            }
            AntipodeSpec::Solve(token) => {
                return Err(Error::Input(format!("antipode must be a matrix or \"solve\", got {token:?}")))
            }
            AntipodeSpec::Matrix(rows) => {
                if rows.len() != n {
                    return Err(Error::Input(format!("antipode has {} rows, expected {n}", rows.len())));
                }
                let rows: Vec<Vector> =
                    rows.iter().map(|r| decode_vector(&domain, r, n, "antipode row")).collect::<Result<_>>()?;
                HopfAlgebraData::new(algebra, comult, counit, Matrix::from_rows(n, &rows)?)?
            }
        };
        let characters = self
            .characters
            .iter()
            .map(|c| {
                if c.dim == 0 {
                    return Err(Error::Input(format!("character {} has dimension 0", c.name)));
                }
                Ok(Character::new(c.name.clone(), decode_vector(&domain, &c.values, n, "character")?, c.dim))
            })
            .collect::<Result<_>>()?;
        Ok(Example { name: self.name.clone(), hopf, characters })
    }

    pub fn from_example(ex: &Example) -> Self {
        let h = &ex.hopf;
        let d = h.algebra().domain();
        let enc_quads =
            |q: Vec<(usize, usize, usize, Coeff)>| q.into_iter().map(|(i, j, k, c)| (i, j, k, d.encode(&c))).collect();
        let enc_vec = |v: &Vector| v.iter().map(|c| d.encode(c)).collect();
        let s = h.antipode();
        AlgebraSpecFile {
            name: ex.name.clone(),
            field: d.descriptor(),
            dim: h.dim(),
            basis: h.labels().to_vec(),
            mult: enc_quads(h.algebra().mult().quadruples()),
            unit: enc_vec(h.algebra().unit()),
            comult: enc_quads(h.comult().quadruples()),
            counit: enc_vec(h.counit()),
            antipode: AntipodeSpec::Matrix((0..s.rows()).map(|i| enc_vec(&s.row(i))).collect()),
            characters: ex
                .characters
                .iter()
                .map(|c| CharacterSpec { name: c.name.clone(), dim: c.module_dim, values: enc_vec(&c.values) })
                .collect(),
        }
    }
}

/// Parses a spec file and builds it; axioms are checked by [`run_command`].
pub fn load_spec(text: &str) -> Result<Example> {
    AlgebraSpecFile::from_json(text)?.build()
}

pub fn emit_spec(ex: &Example) -> String {
    AlgebraSpecFile::from_example(ex).to_json()
}

/// Built-in example names accepted by [`build_example`].
pub const EXAMPLES: [&str; 7] = ["sweedler4", "double-cover", "double-cover-dual", "fk3", "fk3-star", "kc2", "ks3"];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExampleParams {
    /// `μ` for the double cover; defaults to 0, or 2 for its dual.
    pub mu: Option<String>,
    /// `λa,λb,λc` for FK3; defaults to `0,23,11`.
    pub lambda: Option<String>,
    pub symbolic: bool,
}

fn parse_lambdas(s: &str) -> Result<Fk3Lambdas> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Input(format!("--lambda needs three comma-separated rationals, got {s:?}")));
    }
    let v = [parse_rational(parts[0])?, parse_rational(parts[1])?, parse_rational(parts[2])?];
    Ok(Fk3Lambdas::Numeric(v))
}

pub fn build_example(name: &str, params: &ExampleParams) -> Result<Example> {
    let fk3_lambdas = || -> Result<Fk3Lambdas> {
        match (&params.lambda, params.symbolic) {
            (Some(_), true) => Err(Error::Input("--lambda and --symbolic are exclusive".into())),
            (Some(s), false) => parse_lambdas(s),
            (None, true) => Ok(Fk3Lambdas::Symbolic),
            (None, false) => Ok(Fk3Lambdas::from_i64(0, 23, 11)),
        }
    };
    let cover = |default: &str| -> Result<Example> {
        let mu = parse_rational(params.mu.as_deref().unwrap_or(default))?;
        let domain = if num_traits::Zero::is_zero(&mu) { Domain::gaussian() } else { Domain::Rational };
        build_double_cover(&Coeff::Rat(mu), &domain)
    };
    let unexpected = |flag: bool, what: &str| -> Result<()> {
        if flag {
            Err(Error::Input(format!("{what} does not apply to example {name}")))
        } else {
            Ok(())
        }
    };
    if !matches!(name, "fk3" | "fk3-star") {
        unexpected(params.lambda.is_some() || params.symbolic, "--lambda/--symbolic")?;
    }
    if !matches!(name, "double-cover" | "double-cover-dual") {
        unexpected(params.mu.is_some(), "--mu")?;
    }
    match name {
        "sweedler4" => build_sweedler4(),
        "double-cover" => cover("0"),
        "double-cover-dual" => Ok(double_cover_dual(&cover("2")?)),
        "fk3-star" => build_fk3(&fk3_lambdas()?),
        "fk3" => Ok(fk3_dual(&build_fk3(&fk3_lambdas()?)?)),
        "kc2" => build_group_algebra_c2(),
        "ks3" => build_group_algebra_s3(),
        _ => Err(Error::Input(format!("unknown example {name:?}; known: {}", EXAMPLES.join(", ")))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Verify,
    Radical,
    Chevalley,
    Idempotents {
        certify: bool,
    },
    Hecke,
    /// Projectors sum to 1 iff the Hecke algebra has one simple module.
    SumCriterion,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Radical => "radical",
            Command::Chevalley => "chevalley",
            Command::Idempotents { .. } => "idempotents",
            Command::Hecke => "hecke",
            Command::SumCriterion => "theorem310",
        }
    }

    pub fn parse(name: &str, certify: bool) -> Result<Self> {
        Ok(match name {
            "verify" => Command::Verify,
            "radical" => Command::Radical,
            "chevalley" => Command::Chevalley,
            "idempotents" => Command::Idempotents { certify },
            "hecke" => Command::Hecke,
            "theorem310" | "sum-criterion" => Command::SumCriterion,
            _ => return Err(Error::Input(format!("unknown command {name:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detail {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: Vec<String>,
    pub algebra: String,
    pub details: Vec<Detail>,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: f64,
    pub passed: bool,
}

impl ReportDocument {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} [{}]\n", self.command.join(" "), self.algebra);
        for d in &self.details {
            out.push_str(&format!("  {} = {}\n", d.name, d.value));
        }
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            match &c.witness {
                Some(w) => out.push_str(&format!("  [{verdict}] {}: {w}\n", c.name)),
                None => out.push_str(&format!("  [{verdict}] {}\n", c.name)),
            }
        }
        out.push_str(&format!("{} ({:.1} ms)\n", if self.passed { "PASS" } else { "FAIL" }, self.elapsed_ms));
        out
    }
}

/// 0 pass, 1 mathematical failure, 2 input or usage error.
pub fn exit_code_for_error(e: &Error) -> i32 {
    match e {
        Error::NotHopf(_) | Error::NotAnIdeal(_) | Error::Precondition(_) | Error::Confluence(_) => 1,
        _ => 2,
    }
}

fn detail(name: impl Into<String>, value: impl Into<String>) -> Detail {
    Detail { name: name.into(), value: value.into() }
}

/// Runs a command on a loaded spec. The axioms are verified first; if they
/// fail, only those checks are reported. Mathematical preconditions that
/// fail inside a command become failed checks rather than errors.
pub fn run_command(ex: &Example, cmd: Command, argv: &[String]) -> Result<ReportDocument> {
    let start = Instant::now();
    let mut details = Vec::new();
    let mut checks = verify_axioms(&ex.hopf);
    if cmd == Command::Verify {
        for chi in &ex.characters {
            for c in chi.validate(&ex.hopf)? {
                checks.push(CheckResult::new(format!("χ_{}: {}", chi.name, c.name), c.witness));
            }
        }
    } else if all_passed(&checks) {
        checks.clear();
        match analyse(ex, cmd, &mut details, &mut checks) {
            Ok(()) => {}
            Err(e) if exit_code_for_error(&e) == 1 => checks.push(CheckResult::fail(cmd.name(), e.to_string())),
            Err(e) => return Err(e),
        }
    }
    Ok(ReportDocument {
        command: argv.to_vec(),
        algebra: ex.name.clone(),
        details,
        passed: all_passed(&checks),
        checks,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn analyse(ex: &Example, cmd: Command, details: &mut Vec<Detail>, checks: &mut Vec<CheckResult>) -> Result<()> {
    let h = &ex.hopf;
    match cmd {
        Command::Verify => {}
        Command::Radical => {
            let j = jacobson_radical(h.algebra())?;
            details.push(detail("dim J", j.dim().to_string()));
            for (i, v) in j.basis().iter().enumerate() {
                details.push(detail(format!("J[{i}]"), h.format(v)));
            }
            checks.push(CheckResult::pass("J is a nilpotent ideal"));
        }
        Command::Chevalley => {
            let v = chevalley_check(h)?;
            details.push(detail("dim J", v.radical.dim().to_string()));
            checks.extend(v.checks);
        }
        Command::Idempotents { certify } => {
            let p = dual_regular_idempotent(h);
            details.push(detail("p", h.format(&p)));
            checks.extend(check_regular_idempotent(h, &p)?);
            let mut entries = Vec::with_capacity(ex.characters.len());
            for chi in &ex.characters {
                let e = character_projector(h, &p, chi)?;
                details.push(detail(format!("p̂_{}", chi.name), h.format(&e)));
                entries.push(IdempotentEntry { name: chi.name.clone(), idempotent: e, character: Some(chi.clone()) });
            }
            if certify {
                let quotient = match quotient_hopf(h) {
                    Ok(q) => Some(q),
                    Err(Error::Precondition(_)) => None,
                    Err(e) => return Err(e),
                };
                let report = certify_isotypic(h, &entries, quotient.as_ref())?;
                checks.extend(report.checks);
            }
        }
        Command::Hecke => {
            let lambda0 = hecke_unit(h)?;
            let hstar = dual(h);
            let hk = hecke_algebra(&hstar, &lambda0)?;
            details.push(detail("Λ₀", hstar.format(&lambda0)));
            details.push(detail("dim", hk.algebra.dim().to_string()));
            details.push(detail("carrier", hk.algebra.labels().join(", ")));
            let unique = has_unique_simple(&hk.algebra)?;
            checks.push(CheckResult::from_bool("Hecke algebra has a unique simple module", unique, || {
                format!("dim Z(A/J) > 1 for the {}-dimensional Hecke algebra", hk.algebra.dim())
            }));
        }
        Command::SumCriterion => {
            let t = hecke_theorem_check(h, &ex.characters)?;
            details.push(detail("Hecke dim", t.hecke_dim.to_string()));
            checks
                .push(CheckResult::from_bool("Σ p̂ᵢ = 1", t.lhs, || format!("Σ p̂ᵢ − 1 = {}", h.format(&t.defect))));
            checks.push(CheckResult::from_bool("Hecke algebra has a unique simple module", t.rhs, || {
                "dim Z(A/J) > 1".to_string()
            }));
            checks.push(CheckResult::from_bool("both sides agree", t.lhs == t.rhs, || {
                format!("Σ p̂ᵢ = 1 is {} but uniqueness is {}", t.lhs, t.rhs)
            }));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trips_bit_exactly() {
        for name in ["sweedler4", "double-cover", "kc2", "ks3"] {
            let ex = build_example(name, &ExampleParams::default()).unwrap();
            let text = emit_spec(&ex);
            let back = load_spec(&text).unwrap();
            assert_eq!(back.hopf, ex.hopf, "{name}");
            assert_eq!(back.characters, ex.characters, "{name}");
            assert_eq!(emit_spec(&back), text);
        }
    }

    #[test]
    fn out_of_range_index_is_an_input_error() {
        let ex = build_example("sweedler4", &ExampleParams::default()).unwrap();
        let mut spec = AlgebraSpecFile::from_example(&ex);
        spec.mult.push((0, 4, 1, Value::from(1)));
        let e = spec.build().unwrap_err();
        assert_eq!(exit_code_for_error(&e), 2);
    }

    #[test]
    fn solve_token() {
        let ex = build_example("sweedler4", &ExampleParams::default()).unwrap();
        let mut spec = AlgebraSpecFile::from_example(&ex);
        spec.antipode = AntipodeSpec::Solve("solve".into());
        assert_eq!(spec.build().unwrap().hopf, ex.hopf);
        spec.antipode = AntipodeSpec::Solve("guess".into());
        assert!(matches!(spec.build(), Err(Error::Input(_))));
    }

    #[test]
    fn non_chevalley_hecke_is_a_check_failure() {
        let ex = build_example("double-cover", &ExampleParams { mu: Some("2".into()), ..Default::default() }).unwrap();
        let r = run_command(&ex, Command::Hecke, &[]).unwrap();
        assert!(!r.passed);
        assert_eq!(r.exit_code(), 1);
    }
}
