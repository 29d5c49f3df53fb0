//! Command-line front end. `main.rs` only forwards to [`run`].
//!
//! Exit codes: 0 success, 1 computation error, 2 bad flags, 3 an identity
//! did not hold.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::carlitz::{MomentSeq, SeqId};
use crate::error::{Error, Result};
use crate::hankel::{
    hankel_det, jfraction_for_eps, jfraction_for_theta, jfraction_for_xi, jfraction_from_moments, method_applies,
    HankelResult, JFraction, Method,
};
use crate::orthopoly::{family_polys, FamilyId, FamilyKind, ZPoly};
use crate::ratcore::{QPoly, RatFuncQ};
use crate::verify::run_suites;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Bruteforce,
    Heilermann,
    Closedform,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// `P_{l,n}`, monic.
    P,
    /// `J_{l,n}`, the big q-Jacobi specialization.
    J,
    /// `Jt_{l,n}`, monic.
    Jtilde,
}

#[derive(Debug, Parser)]
#[command(name = "qhankel", version, about = "Exact q-Euler Hankel determinants over Q(q)")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "QHANKEL_FORMAT", default_value = "text")]
    pub format: Format,
    /// Write results to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a sequence: qeuler, qbernoulli, xi<l>, theta<l>.
    Seq {
        #[arg(long)]
        id: String,
        /// Used when `--id` is a bare `xi` or `theta`.
        #[arg(long, default_value_t = 0)]
        ell: u32,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Evaluate at an exact rational point, e.g. `1` or `-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        at_q: Option<String>,
    },
    /// Print orthogonal polynomials `p_0 .. p_max_n`.
    Poly {
        #[arg(long, value_enum, default_value = "p")]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, allow_hyphen_values = true)]
        at_q: Option<String>,
    },
    /// Hankel determinant `det(s_{i+j+shift})_{0<=i,j<=n}`.
    Det {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        #[arg(long, default_value_t = 0)]
        shift: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "bruteforce")]
        method: MethodArg,
        #[arg(long, allow_hyphen_values = true)]
        at_q: Option<String>,
    },
    /// J-fraction coefficients `mu0, a_0 .. a_max_n, b_1 .. b_max_n`.
    Jfrac {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        /// For qeuler: expand `sum eps_{k+shift} x^k`, shift 0 or 1.
        #[arg(long, default_value_t = 0)]
        shift: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Recover the coefficients from the moments instead of the closed forms.
        #[arg(long)]
        from_moments: bool,
        #[arg(long, allow_hyphen_values = true)]
        at_q: Option<String>,
    },
    /// Run the identity checks and report pass/fail per case.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Only suites whose name contains this string.
        #[arg(long)]
        only: Option<String>,
    },
}

/// Parses `args` (program name first), runs, writes output, returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => match emit(&cli, &text) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_COMPUTE
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            EXIT_COMPUTE
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

fn parse_seq(id: &str, ell: u32) -> std::result::Result<SeqId, Failure> {
    match id {
        "xi" => Ok(SeqId::XiEll(ell)),
        "theta" => Ok(SeqId::ThetaEll(ell)),
        _ => id.parse().map_err(|_| Failure::Usage(format!("unknown --id {id:?}"))),
    }
}

fn parse_point(s: &Option<String>) -> std::result::Result<Option<BigRational>, Failure> {
    s.as_deref()
        .map(|t| t.trim().parse::<BigRational>().map_err(|_| Failure::Usage(format!("--at-q expects a rational such as 1 or -1/2, got {t:?}"))))
        .transpose()
}

/// A rendered scalar: symbolic or evaluated.
enum Val {
    Sym(RatFuncQ),
    Num(BigRational),
}

fn realize(v: &RatFuncQ, at: &Option<BigRational>) -> Result<Val> {
    Ok(match at {
        Some(p) => Val::Num(v.eval_at(p)?),
        None => Val::Sym(v.clone()),
    })
}

impl Val {
    fn json(&self) -> Value {
        match self {
            Val::Sym(f) => serde_json::to_value(f).expect("serializable"),
            Val::Num(r) => Value::String(r.to_string()),
        }
    }

    fn text(&self) -> String {
        match self {
            Val::Sym(f) => f.to_string(),
            Val::Num(r) => r.to_string(),
        }
    }

    fn latex(&self) -> String {
        match self {
            Val::Sym(f) => latex_ratfunc(f),
            Val::Num(r) => latex_rational(r),
        }
    }

    fn render(&self, fmt: Format) -> String {
        match fmt {
            Format::Json => self.json().to_string(),
            Format::Text => self.text(),
            Format::Latex => self.latex(),
        }
    }
}

fn latex_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

/// `c_0 + c_1 var + ...` in LaTeX, ascending powers.
fn latex_poly_terms(coeffs: &[BigInt], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{{{k}}}"),
        };
        if k == 0 || !mag.is_one() {
            let _ = write!(out, "{mag}");
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn latex_qpoly(p: &QPoly) -> String {
    latex_poly_terms(p.coeffs(), "q")
}

pub fn latex_ratfunc(f: &RatFuncQ) -> String {
    if f.den().is_one() {
        latex_qpoly(f.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", latex_qpoly(f.num()), latex_qpoly(f.den()))
    }
}

fn latex_zpoly(p: &ZPoly, at: &Option<BigRational>) -> Result<String> {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let mono = match k {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{{{k}}}"),
        };
        if c.is_one() && k > 0 && at.is_none() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "\\left({}\\right){mono}", realize(c, at)?.latex());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    Ok(out)
}

fn seq_symbol(id: SeqId, n: usize) -> String {
    match id {
        SeqId::Qeuler => format!("\\epsilon_{{{n}}}"),
        SeqId::Qbernoulli => format!("\\beta_{{{n}}}"),
        SeqId::XiEll(l) => format!("\\xi_{{{l},{n}}}"),
        SeqId::ThetaEll(l) => format!("\\Theta_{{{l}}}(z^{{{n}}})"),
    }
}

fn pretty_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> std::result::Result<(String, i32), Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Seq { id, ell, max_n, at_q } => {
            let id = parse_seq(id, *ell)?;
            let at = parse_point(at_q)?;
            let seq = MomentSeq::new(id, *max_n);
            let vals = seq.values().iter().map(|v| realize(v, &at)).collect::<Result<Vec<_>>>()?;
            let text = match fmt {
                Format::Json => pretty_json(&vals.iter().map(Val::json).collect::<Vec<_>>()),
                Format::Text => vals.iter().enumerate().map(|(n, v)| format!("{id}[{n}] = {}\n", v.text())).collect(),
                Format::Latex => vals
                    .iter()
                    .enumerate()
                    .map(|(n, v)| format!("{} = {}\n", seq_symbol(id, n), v.latex()))
                    .collect(),
            };
            Ok((text, EXIT_OK))
        }
        Command::Poly { family, ell, max_n, at_q } => {
            let at = parse_point(at_q)?;
            let kind = match family {
                FamilyArg::P => FamilyKind::PFamily,
                FamilyArg::J => FamilyKind::BigQJacobiJ,
                FamilyArg::Jtilde => FamilyKind::MonicJtilde,
            };
            let fam = FamilyId::new(kind, *ell);
            let polys = family_polys(fam, *max_n)?;
            let text = match fmt {
                Format::Json => {
                    let rows = polys
                        .iter()
                        .map(|p| p.coeffs().iter().map(|c| realize(c, &at).map(|v| v.json())).collect::<Result<Vec<_>>>())
                        .collect::<Result<Vec<_>>>()?;
                    pretty_json(&json!({ "family": fam.to_string(), "polys": rows }))
                }
                Format::Text => {
                    let mut s = String::new();
                    for (n, p) in polys.iter().enumerate() {
                        let body = match &at {
                            None => p.to_string(),
                            Some(_) => p
                                .coeffs()
                                .iter()
                                .enumerate()
                                .rev()
                                .map(|(k, c)| realize(c, &at).map(|v| format!("({})*z^{k}", v.text())))
                                .collect::<Result<Vec<_>>>()?
                                .join(" + "),
                        };
                        let _ = writeln!(s, "{fam}_{n}(z) = {body}");
                    }
                    s
                }
                Format::Latex => {
                    let name = match kind {
                        FamilyKind::PFamily => "\\mathcal{P}",
                        FamilyKind::BigQJacobiJ => "\\mathcal{J}",
                        FamilyKind::MonicJtilde => "\\widetilde{\\mathcal{J}}",
                    };
                    let mut s = String::new();
                    for (n, p) in polys.iter().enumerate() {
                        let _ = writeln!(s, "{name}_{{{ell},{n}}}(z) = {}", latex_zpoly(p, &at)?);
                    }
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Det { id, ell, shift, n, method, at_q } => {
            let seq = parse_seq(id, *ell)?;
            let at = parse_point(at_q)?;
            let methods: Vec<Method> = match method {
                MethodArg::Bruteforce => vec![Method::Bruteforce],
                MethodArg::Heilermann => vec![Method::Heilermann],
                MethodArg::Closedform => vec![Method::Closedform],
                MethodArg::All => Method::ALL.into_iter().filter(|m| method_applies(seq, *shift, *m)).collect(),
            };
            if let [m] = methods[..] {
                if !method_applies(seq, *shift, m) {
                    return Err(Failure::Usage(format!("no {m} evaluation for {seq} at shift {shift}")));
                }
            }
            let results = methods
                .iter()
                .map(|m| hankel_det(seq, *shift, *n, *m))
                .collect::<Result<Vec<HankelResult>>>()?;
            let agree = results.windows(2).all(|w| w[0].value == w[1].value);
            let code = if agree { EXIT_OK } else { EXIT_MISMATCH };
            let text = match fmt {
                Format::Json => {
                    let rows: Vec<Value> = results
                        .iter()
                        .map(|r| {
                            let mut v = serde_json::to_value(r).expect("serializable");
                            if at.is_some() {
                                v["value"] = realize(&r.value, &at)?.json();
                            }
                            Ok(v)
                        })
                        .collect::<Result<_>>()?;
                    if results.len() == 1 {
                        pretty_json(&rows[0])
                    } else {
                        pretty_json(&json!({ "results": rows, "agree": agree }))
                    }
                }
                Format::Text | Format::Latex => {
                    let mut s = String::new();
                    for r in &results {
                        let v = realize(&r.value, &at)?.render(fmt);
                        if fmt == Format::Text {
                            let _ = writeln!(s, "det({seq}, shift={shift}, n={n}) [{}] = {v}", r.method);
                        } else {
                            let _ = writeln!(
                                s,
                                "\\det_{{0\\le i,j\\le {n}}}\\left(s_{{i+j+{shift}}}\\right) = {v}"
                            );
                        }
                    }
                    if results.len() > 1 && fmt == Format::Text {
                        let _ = writeln!(s, "{}", if agree { "all methods agree" } else { "MISMATCH between methods" });
                    }
                    s
                }
            };
            Ok((text, code))
        }
        Command::Jfrac { id, ell, shift, max_n, from_moments, at_q } => {
            let seq = parse_seq(id, *ell)?;
            let at = parse_point(at_q)?;
            let jf = jfraction_for(seq, *shift, *max_n, *from_moments)?;
            let a = (0..=*max_n).map(|k| jf.a(k).and_then(|v| realize(&v, &at))).collect::<Result<Vec<_>>>()?;
            let b = (1..=*max_n).map(|k| jf.b(k).and_then(|v| realize(&v, &at))).collect::<Result<Vec<_>>>()?;
            let mu0 = realize(jf.mu0(), &at)?;
            let text = match fmt {
                Format::Json => pretty_json(&json!({
                    "seq": seq.to_string(),
                    "shift": shift,
                    "mu0": mu0.json(),
                    "a": a.iter().map(Val::json).collect::<Vec<_>>(),
                    "b": b.iter().map(Val::json).collect::<Vec<_>>(),
                })),
                _ => {
                    let mut s = String::new();
                    let (m, an, bn): (&str, Box<dyn Fn(usize) -> String>, Box<dyn Fn(usize) -> String>) = if fmt == Format::Text {
                        ("mu0", Box::new(|k| format!("a_{k}")), Box::new(|k| format!("b_{k}")))
                    } else {
                        ("\\mu_{0}", Box::new(|k| format!("a_{{{k}}}")), Box::new(|k| format!("b_{{{k}}}")))
                    };
                    let _ = writeln!(s, "{m} = {}", mu0.render(fmt));
                    for (k, v) in a.iter().enumerate() {
                        let _ = writeln!(s, "{} = {}", an(k), v.render(fmt));
                    }
                    for (k, v) in b.iter().enumerate() {
                        let _ = writeln!(s, "{} = {}", bn(k + 1), v.render(fmt));
                    }
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Verify { max_n, only } => {
            let cases = run_suites(*max_n, only.as_deref())?;
            let failed = cases.iter().filter(|c| !c.equal).count();
            let code = if failed == 0 { EXIT_OK } else { EXIT_MISMATCH };
            let text = match fmt {
                Format::Json => pretty_json(&cases),
                _ => {
                    let mut s = String::new();
                    for c in &cases {
                        let tag = if c.equal { "PASS" } else { "FAIL" };
                        let _ = writeln!(s, "{tag} {} ({} vs {})", c.case, c.lhs_method, c.rhs_method);
                    }
                    let _ = writeln!(s, "{} cases, {} failed", cases.len(), failed);
                    s
                }
            };
            Ok((text, code))
        }
    }
}

fn jfraction_for(seq: SeqId, shift: usize, depth: usize, from_moments: bool) -> std::result::Result<JFraction, Failure> {
    let known = match (seq, shift) {
        (SeqId::Qeuler, s) if s <= 1 => Some(jfraction_for_eps(s)?),
        (SeqId::XiEll(l), 0) => Some(jfraction_for_xi(l as usize)),
        (SeqId::ThetaEll(l), 0) => Some(jfraction_for_theta(l as usize)),
        _ => None,
    };
    match known {
        Some(jf) if !from_moments => Ok(jf),
        _ => {
            // a_depth needs mu_{2 depth + 1}
            let need = 2 * depth + 1 + shift;
            let s = MomentSeq::new(seq, need);
            Ok(jfraction_from_moments(&s.values()[shift..])?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let dir = std::env::temp_dir().join(format!("qhankel-cli-{}-{}", std::process::id(), args.join("_").len()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("{}.out", args.join("_").replace(['/', ' '], "-")));
        let mut full = vec!["qhankel", "--out", path.to_str().unwrap()];
        full.extend_from_slice(args);
        let code = run(full);
        let text = std::fs::read_to_string(&path).unwrap_or_default();
        (code, text)
    }

    #[test]
    fn latex_rendering() {
        let f = RatFuncQ::new(QPoly::from_i64s(&[0, -1]), QPoly::from_i64s(&[1, 0, 1])).unwrap();
        assert_eq!(latex_ratfunc(&f), "\\frac{-q}{1 + q^{2}}");
        assert_eq!(latex_rational(&BigRational::new((-17).into(), 8.into())), "-\\frac{17}{8}");
        assert_eq!(latex_qpoly(&QPoly::zero()), "0");
    }

    #[test]
    fn bad_flags_exit_2() {
        assert_eq!(run(["qhankel", "seq"]), EXIT_USAGE);
        assert_eq!(run(["qhankel", "seq", "--id", "nope"]), EXIT_USAGE);
        assert_eq!(run(["qhankel", "det", "--id", "qeuler", "--n", "1", "--shift", "5", "--method", "closedform"]), EXIT_USAGE);
        assert_eq!(run(["qhankel", "seq", "--id", "qeuler", "--at-q", "x"]), EXIT_USAGE);
    }

    #[test]
    fn pole_is_a_computation_error() {
        // beta_1 = -1/(1+q)
        let (code, _) = run_capture(&["seq", "--id", "qbernoulli", "--max-n", "0", "--at-q", "-1"]);
        assert_eq!(code, EXIT_OK);
        let (code, _) = run_capture(&["seq", "--id", "qbernoulli", "--max-n", "1", "--at-q", "-1"]);
        assert_eq!(code, EXIT_COMPUTE);
    }

    #[test]
    fn seq_outputs() {
        let (code, text) = run_capture(&["--format", "json", "seq", "--id", "qeuler", "--max-n", "0"]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v, json!([{"num": ["1"], "den": ["1"]}]));
        let (_, text) = run_capture(&["--format", "json", "seq", "--id", "qeuler", "--max-n", "9", "--at-q", "1"]);
        let v: Vec<String> = serde_json::from_str(&text).unwrap();
        assert_eq!(v, ["1", "-1/2", "0", "1/4", "0", "-1/2", "0", "17/8", "0", "-31/2"]);
    }
}
