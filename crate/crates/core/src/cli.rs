//! Problem descriptions, monomial parsing and the text / JSON / LaTeX
//! renderings used by the `hilbert-quasi` binary.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::WeightVector;
use crate::monomial::Monomial;
use crate::pipeline::{
    evaluations, problem_table, solve, verify_with_oracle, Problem, Solution, SolveOptions,
    VerificationReport,
};
use crate::poly::RationalPolynomial;
use crate::quasipoly::InterpolationLimits;
use crate::series::{TableMethod, DEFAULT_ENUM_NODE_LIMIT};

/// Exit status for malformed input.
pub const EXIT_PARSE: i32 = 2;
/// Exit status when a resource guard rejects the problem.
pub const EXIT_RESOURCE: i32 = 3;
/// Exit status when a result fails verification.
pub const EXIT_VERIFICATION: i32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

/// Everything a single run needs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ProblemSpec {
    pub weights: Vec<u64>,
    /// Generators, each `x1^a1*x2^a2..` or an exponent vector `[a1, .., ak]`.
    pub ideal: Vec<String>,
    pub structure: bool,
    pub table: Option<usize>,
    pub eval: Vec<u64>,
    pub format: Format,
    pub verify: bool,
}

/// Process exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_)
        | Error::InvalidWeights(_)
        | Error::TooManyVariables { .. }
        | Error::ExponentLength { .. }
        | Error::InvalidArgument(_) => EXIT_PARSE,
        Error::ResourceGuard(_) | Error::PeriodTooLarge(_) | Error::Overflow(_) => EXIT_RESOURCE,
        Error::Verification { .. } | Error::StructuralViolation(_) | Error::SingularSystem => {
            EXIT_VERIFICATION
        }
        Error::NotCoprime { .. } | Error::DeltaPrecondition { .. } => 1,
    }
}

/// Parses `"1 2 3 4 6"` or `"1,2,3,4,6"`.
pub fn parse_weights(text: &str) -> Result<Vec<u64>> {
    let weights: Vec<u64> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| Error::Parse(format!("invalid weight {s:?}")))
        })
        .collect::<Result<_>>()?;
    if weights.is_empty() {
        return Err(Error::Parse("no weights given".into()));
    }
    Ok(weights)
}

/// Parses one monomial in `k` variables: `x1^3`, `x2*x3`, `1`, or `[3,0,1]`.
pub fn parse_monomial(text: &str, k: usize) -> Result<Monomial> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    if let Some(inner) = compact
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .or_else(|| compact.strip_prefix('(').and_then(|s| s.strip_suffix(')')))
    {
        let exps: Vec<u32> = inner
            .split(',')
            .map(|e| {
                e.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("malformed exponent {e:?} in {text:?}")))
            })
            .collect::<Result<_>>()?;
        if exps.len() != k {
            return Err(Error::Parse(format!(
                "exponent vector {text:?} has {} entries, expected {k}",
                exps.len()
            )));
        }
        return Ok(Monomial::new(exps));
    }
    if compact == "1" {
        return Ok(Monomial::one(k));
    }
    let mut exps = vec![0u32; k];
    for factor in compact.split('*') {
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => {
                let e = e
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("malformed exponent {e:?} in {text:?}")))?;
                (v, e)
            }
            None => (factor, 1),
        };
        let index = var
            .strip_prefix('x')
            .ok_or_else(|| Error::Parse(format!("unknown variable {var:?} in {text:?}")))?;
        let index: usize = index
            .parse()
            .map_err(|_| Error::Parse(format!("unknown variable {var:?} in {text:?}")))?;
        if index == 0 || index > k {
            return Err(Error::Parse(format!(
                "variable {var} out of range x1..x{k}"
            )));
        }
        exps[index - 1] = exps[index - 1]
            .checked_add(exp)
            .ok_or(Error::Overflow("exponent"))?;
    }
    Ok(Monomial::new(exps))
}

/// Splits a comma-separated generator list, keeping exponent vectors intact.
pub fn split_generators(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if c == ',' && depth == 0 {
            out.push(std::mem::take(&mut current));
        } else {
            current.push(c);
        }
    }
    out.push(current);
    out.into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

impl ProblemSpec {
    pub fn problem(&self) -> Result<Problem> {
        let weights = WeightVector::new(self.weights.clone())?;
        if self.ideal.is_empty() {
            return Ok(Problem::ring(weights));
        }
        let k = weights.k();
        let gens = self
            .ideal
            .iter()
            .map(|g| parse_monomial(g, k))
            .collect::<Result<Vec<_>>>()?;
        Problem::quotient(weights, gens)
    }
}

/// A rational as decimal strings, reduced, with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(q: &BigRational) -> Self {
        RationalJson {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

impl RationalJson {
    pub fn to_rational(&self) -> Result<BigRational> {
        let num: BigInt = self
            .num
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator {:?}", self.num)))?;
        let den: BigInt = self
            .den
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator {:?}", self.den)))?;
        if den <= BigInt::from(0) {
            return Err(Error::Parse("denominator must be positive".into()));
        }
        Ok(BigRational::new(num, den))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureJson {
    pub fixed_part: Vec<RationalJson>,
    pub observed_periods: Vec<u64>,
    pub predicted_periods: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluationJson {
    pub n: u64,
    pub value: RationalJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub from: u64,
    pub to: u64,
}

/// The JSON document written by the binary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub weights: Vec<u64>,
    pub gcd: u64,
    pub normalized_weights: Vec<u64>,
    pub period: u64,
    pub delta: usize,
    pub delta_r: Vec<u64>,
    pub hvector: Vec<i64>,
    /// Per residue, coefficients of `x^0, x^1, ..`.
    pub polynomials: Vec<Vec<RationalJson>>,
    pub stabilization_index: u64,
    pub structure: Option<StructureJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evaluations: Option<Vec<EvaluationJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationJson>,
}

impl SolutionDocument {
    /// Rebuilds the residue polynomials.
    pub fn rational_polynomials(&self) -> Result<Vec<RationalPolynomial>> {
        self.polynomials
            .iter()
            .map(|p| {
                p.iter()
                    .map(RationalJson::to_rational)
                    .collect::<Result<Vec<_>>>()
                    .map(RationalPolynomial::new)
            })
            .collect()
    }
}

/// Results of a run, before rendering.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub solution: Solution,
    pub table: Option<Vec<BigInt>>,
    pub evaluations: Vec<(u64, BigRational)>,
    pub verification: Option<VerificationReport>,
    pub include_structure: bool,
}

/// Limits for [`run`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub max_n: usize,
    pub method: TableMethod,
    pub enum_node_limit: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            max_n: InterpolationLimits::default().max_table_len,
            method: TableMethod::Recursion,
            enum_node_limit: DEFAULT_ENUM_NODE_LIMIT,
        }
    }
}

/// Solves `spec` and renders the requested document.
pub fn run(spec: &ProblemSpec, opts: &RunOptions) -> Result<String> {
    let out = compute(spec, opts)?;
    Ok(render(&out, spec.format))
}

pub fn compute(spec: &ProblemSpec, opts: &RunOptions) -> Result<RunOutput> {
    let problem = spec.problem()?;
    let solve_opts = SolveOptions {
        method: opts.method,
        limits: InterpolationLimits {
            max_table_len: opts.max_n,
            ..InterpolationLimits::default()
        },
        cross_check: false,
    };
    let solution = solve(&problem, &solve_opts)?;
    let table = match spec.table {
        Some(n) if n >= opts.max_n => {
            return Err(Error::ResourceGuard(format!(
                "table length {n} exceeds --max-n {}",
                opts.max_n
            )))
        }
        Some(n) => Some(problem_table(&problem, n, opts.method)?.values().to_vec()),
        None => None,
    };
    let verification = if spec.verify {
        Some(verify_with_oracle(&problem, &solution, opts.enum_node_limit)?)
    } else {
        None
    };
    Ok(RunOutput {
        evaluations: evaluations(&solution, &spec.eval),
        solution,
        table,
        verification,
        include_structure: spec.structure,
    })
}

pub fn render(out: &RunOutput, format: Format) -> String {
    match format {
        Format::Text => render_text(out),
        Format::Json => render_json(out),
        Format::Latex => render_latex(out),
    }
}

pub fn document(out: &RunOutput) -> SolutionDocument {
    let sol = &out.solution;
    let qp = &sol.quasi_polynomial;
    SolutionDocument {
        weights: sol.weights.weights().to_vec(),
        gcd: sol.weights.gcd(),
        normalized_weights: sol.normalized_weights.weights().to_vec(),
        period: qp.period() as u64,
        delta: sol.normalized_weights.delta(),
        delta_r: sol.weights.delta_periods(),
        hvector: sol.hvector.coefficients().to_vec(),
        polynomials: qp
            .polys()
            .iter()
            .map(|p| p.coefficients().iter().map(RationalJson::from).collect())
            .collect(),
        stabilization_index: qp.stabilization_index(),
        structure: sol
            .structure
            .as_ref()
            .filter(|_| out.include_structure)
            .map(|s| StructureJson {
                fixed_part: s.fixed_part.coefficients().iter().map(RationalJson::from).collect(),
                observed_periods: s.observed_periods.clone(),
                predicted_periods: s.predicted_periods.clone(),
            }),
        table: out
            .table
            .as_ref()
            .map(|t| t.iter().map(ToString::to_string).collect()),
        evaluations: (!out.evaluations.is_empty()).then(|| {
            out.evaluations
                .iter()
                .map(|(n, v)| EvaluationJson {
                    n: *n,
                    value: v.into(),
                })
                .collect()
        }),
        verification: out.verification.as_ref().map(|v| VerificationJson {
            from: v.from,
            to: v.to,
        }),
    }
}

pub fn render_json(out: &RunOutput) -> String {
    let mut s = serde_json::to_string_pretty(&document(out)).expect("document serializes");
    s.push('\n');
    s
}

fn hvector_text(sol: &Solution) -> String {
    let poly = RationalPolynomial::new(
        sol.hvector
            .coefficients()
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect(),
    );
    poly.to_text("t")
}

fn list<T: ToString>(v: &[T]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

pub fn render_text(out: &RunOutput) -> String {
    let sol = &out.solution;
    let qp = &sol.quasi_polynomial;
    let mut s = String::new();
    writeln!(s, "weights: {}", sol.weights).unwrap();
    writeln!(s, "normalized weights: {} (scale {})", sol.normalized_weights, sol.scale).unwrap();
    writeln!(s, "period: {}", qp.period()).unwrap();
    writeln!(s, "delta: {}", sol.normalized_weights.delta()).unwrap();
    writeln!(s, "delta_r: {}", list(&sol.weights.delta_periods())).unwrap();
    writeln!(s, "h-vector: {}", hvector_text(sol)).unwrap();
    writeln!(s, "stabilization index: {}", qp.stabilization_index()).unwrap();
    for (i, p) in qp.polys().iter().enumerate() {
        writeln!(s, "P_{i}(x) = {}", p.to_text("x")).unwrap();
    }
    if let Some(rep) = sol.structure.as_ref().filter(|_| out.include_structure) {
        writeln!(s, "fixed part: {}", rep.fixed_part.to_text("x")).unwrap();
        match rep.periodic_part_degree {
            Some(deg) => writeln!(s, "periodic part degree: {deg}").unwrap(),
            None => writeln!(s, "periodic part degree: none").unwrap(),
        }
        writeln!(s, "observed periods: {}", list(&rep.observed_periods)).unwrap();
        writeln!(s, "predicted periods: {}", list(&rep.predicted_periods)).unwrap();
    }
    if let Some(t) = &out.table {
        writeln!(s, "H(0..{}): {}", t.len().saturating_sub(1), list(t)).unwrap();
    }
    for (n, v) in &out.evaluations {
        writeln!(s, "P({n}) = {v}").unwrap();
    }
    if let Some(v) = &out.verification {
        writeln!(s, "verified against enumeration on [{}, {}]", v.from, v.to).unwrap();
    }
    s
}

pub fn render_latex(out: &RunOutput) -> String {
    let sol = &out.solution;
    let qp = &sol.quasi_polynomial;
    let mut s = String::new();
    writeln!(s, "% weights {}, period {}", sol.weights, qp.period()).unwrap();
    writeln!(s, "\\begin{{tabular}}{{lll}}").unwrap();
    for (i, p) in qp.polys().iter().enumerate() {
        writeln!(s, "$P_{{{i}}}(x)$ & $=$ & ${}$ \\\\", p.to_latex("x")).unwrap();
    }
    writeln!(s, "\\end{{tabular}}").unwrap();
    if let Some(rep) = sol.structure.as_ref().filter(|_| out.include_structure) {
        writeln!(s, "% fixed part: ${}$", rep.fixed_part.to_latex("x")).unwrap();
        writeln!(s, "% observed periods: {}", list(&rep.observed_periods)).unwrap();
        writeln!(s, "% predicted periods: {}", list(&rep.predicted_periods)).unwrap();
    }
    if let Some(t) = &out.table {
        writeln!(s, "% H(0..{}): {}", t.len().saturating_sub(1), list(t)).unwrap();
    }
    for (n, v) in &out.evaluations {
        writeln!(s, "% P({n}) = {v}").unwrap();
    }
    s
}
