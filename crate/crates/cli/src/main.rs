use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use qschur::affsym::pseudo_matrix_rep;
use qschur::afmat::PeriodicMatrix;
use qschur::hall::{brute_hall_number, semisimple_hall_product};
use qschur::laurent::IntVectorN;
use qschur::schur::{Basis, SchurElement};
use qschur::vbln::{
    mul_0j_left, mul_0j_right, mul_by_semisimple_minus, mul_by_semisimple_plus, reduce_j_lambda,
    VElement,
};
use qschur::verify::{run_suite, Config, SUITES};

#[derive(Parser)]
#[command(
    name = "qschur",
    version,
    about = "Exact computations in affine q-Schur, Hecke and Hall algebras"
)]
struct Cli {
    /// Worker threads for the verification sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Also write the JSON result to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    E,
    N,
}

#[derive(Clone, Copy, ValueEnum)]
enum Generator {
    /// 0(j) · x
    ZeroLeft,
    /// x · 0(j)
    ZeroRight,
    /// S_α(0) · x
    Plus,
    /// ᵗS_α(0) · x
    Minus,
}

#[derive(Subcommand)]
enum Cmd {
    /// Shortest double coset representative of a matrix and its length.
    Coset {
        /// Matrix JSON, inline or a path.
        matrix: String,
    },
    /// Product of two basis elements of the affine q-Schur algebra.
    SchurMul {
        /// Left factor (matrix JSON).
        b: String,
        /// Right factor (matrix JSON).
        a: String,
        #[arg(long, value_enum, default_value = "n")]
        basis: BasisArg,
    },
    /// Left or right multiplication by a generator of the realization algebra.
    VblnMul {
        #[arg(long, value_enum)]
        generator: Generator,
        /// j for 0(j), α for S_α(0) and ᵗS_α(0), as comma separated integers.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        /// Element JSON, inline or a path.
        element: String,
        /// Also evaluate the product at this level.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Hall polynomials of u_α ⋄ u_A with brute-force counts over F_q.
    Hall {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Matrix JSON, inline or a path.
        matrix: String,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        q: Vec<u64>,
    },
    /// Express A(j, λ) in the basis {A(j')}.
    Reduce {
        /// Matrix JSON, inline or a path.
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        #[arg(long)]
        lambda: String,
    },
    /// Run verification suites.
    Verify {
        /// Suite names; all suites when omitted.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Periods to sweep.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        /// Sweep this single level.
        #[arg(long, conflicts_with = "r_max")]
        r: Option<usize>,
        /// Largest level swept.
        #[arg(long)]
        r_max: Option<usize>,
        /// Field sizes for brute-force Hall counts.
        #[arg(long, value_delimiter = ',')]
        q: Vec<u64>,
    },
}

enum Failure {
    Input(String),
    Mismatch(Value),
}

impl From<qschur::Error> for Failure {
    fn from(e: qschur::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_json<T: DeserializeOwned>(arg: &str) -> Result<T, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::Input(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

fn parse_vector(s: &str) -> Result<IntVectorN, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map(IntVectorN::new)
        .map_err(|e| Failure::Input(format!("vector {s:?}: {e}")))
}

fn same_period(n: usize, v: &IntVectorN) -> Result<(), Failure> {
    if v.n() != n {
        return Err(Failure::Input(format!(
            "vector {v} has length {}, expected {n}",
            v.n()
        )));
    }
    Ok(())
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn coset(matrix: &str) -> Result<Value, Failure> {
    let a: PeriodicMatrix = read_json(matrix)?;
    if !a.is_nonneg() {
        return Err(Failure::Input(format!("{a} has a negative entry")));
    }
    let y = pseudo_matrix_rep(&a)?;
    let out = json!({
        "matrix": a,
        "representative": y,
        "length": y.length(),
        "length_formula": a.length_formula(),
    });
    if y.length() as i64 != a.length_formula() {
        return Err(Failure::Mismatch(out));
    }
    Ok(out)
}

fn schur_mul(b: &str, a: &str, basis: BasisArg) -> Result<Value, Failure> {
    let (b, a): (PeriodicMatrix, PeriodicMatrix) = (read_json(b)?, read_json(a)?);
    let basis = match basis {
        BasisArg::E => Basis::E,
        BasisArg::N => Basis::N,
    };
    let x = SchurElement::basis_element(b, basis)?;
    let y = SchurElement::basis_element(a, basis)?;
    Ok(serde_json::to_value(x.try_mul(&y)?).expect("serializable"))
}

fn vbln_mul(
    generator: Generator,
    vector: &str,
    element: &str,
    r: Option<usize>,
) -> Result<Value, Failure> {
    let x: VElement = read_json(element)?;
    let v = parse_vector(vector)?;
    same_period(x.n(), &v)?;
    let y = match generator {
        Generator::ZeroLeft => mul_0j_left(&v, &x),
        Generator::ZeroRight => mul_0j_right(&x, &v),
        Generator::Plus => mul_by_semisimple_plus(&v, &x)?,
        Generator::Minus => mul_by_semisimple_minus(&v, &x)?,
    };
    let mut out = json!({ "product": y });
    if let Some(r) = r {
        out["level"] = json!(r);
        out["image"] = serde_json::to_value(y.eval_at_level(r)?).expect("serializable");
    }
    Ok(out)
}

fn hall(alpha: &str, matrix: &str, q: &[u64]) -> Result<Value, Failure> {
    let a: PeriodicMatrix = read_json(matrix)?;
    let alpha = parse_vector(alpha)?;
    same_period(a.n(), &alpha)?;
    if let Some(&p) = q.iter().find(|&&p| !is_prime(p)) {
        return Err(Failure::Input(format!("q = {p} is not prime")));
    }
    let s_alpha = PeriodicMatrix::s_alpha(&alpha);
    let mut terms = Vec::new();
    let mut ok = true;
    for (c, phi) in semisimple_hall_product(&alpha, &a)? {
        let mut values = Vec::new();
        for &p in q {
            let brute = brute_hall_number(&s_alpha, &a, &c, p)?;
            let closed = phi.eval(p as i128);
            ok &= closed == Some(brute as i128);
            values.push(json!({ "q": p, "closed": closed, "brute": brute }));
        }
        terms.push(
            json!({ "matrix": c, "poly": phi, "display": phi.to_string(), "values": values }),
        );
    }
    let out = json!({ "alpha": alpha, "matrix": a, "terms": terms });
    if ok {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}

fn reduce(matrix: &str, j: &str, lambda: &str) -> Result<Value, Failure> {
    let a: PeriodicMatrix = read_json(matrix)?;
    let (j, lambda) = (parse_vector(j)?, parse_vector(lambda)?);
    same_period(a.n(), &j)?;
    same_period(a.n(), &lambda)?;
    Ok(serde_json::to_value(reduce_j_lambda(&a, &j, &lambda)?).expect("serializable"))
}

fn verify(
    suite: &[String],
    n: &[usize],
    r: Option<usize>,
    r_max: Option<usize>,
    q: &[u64],
) -> Result<Value, Failure> {
    let mut cfg = Config::default();
    if !n.is_empty() {
        if let Some(&bad) = n.iter().find(|&&k| k < 2) {
            return Err(Failure::Input(format!(
                "period n = {bad} must be at least 2"
            )));
        }
        cfg.periods = n.to_vec();
    }
    if let Some(r) = r {
        if r == 0 {
            return Err(Failure::Input("level r must be positive".into()));
        }
        cfg.r_min = r;
        cfg.r_max = r;
    }
    if let Some(r) = r_max {
        cfg.r_max = r;
    }
    if !q.is_empty() {
        if let Some(&p) = q.iter().find(|&&p| !is_prime(p) || p > 3) {
            return Err(Failure::Input(format!("q = {p} must be 2 or 3")));
        }
        cfg.primes = q.to_vec();
    }
    let names: Vec<String> = if suite.is_empty() {
        SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        suite.to_vec()
    };
    let mut reports = Vec::new();
    for name in &names {
        let rep = run_suite(name, &cfg).ok_or_else(|| {
            Failure::Input(format!(
                "unknown suite {name:?}; known: {}",
                SUITES.join(", ")
            ))
        })?;
        eprintln!("{rep}");
        reports.push(rep);
    }
    let passed = reports.iter().all(|r| r.passed());
    let out = json!({ "passed": passed, "suites": reports });
    if passed {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}

fn emit(value: &Value, out: Option<&PathBuf>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    let mut stdout = std::io::stdout().lock();
    match writeln!(stdout, "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(format!("stdout: {e}")),
        _ => {}
    }
    if let Some(path) = out {
        std::fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.cmd {
        Cmd::Coset { matrix } => coset(matrix),
        Cmd::SchurMul { b, a, basis } => schur_mul(b, a, *basis),
        Cmd::VblnMul {
            generator,
            vector,
            element,
            r,
        } => vbln_mul(*generator, vector, element, *r),
        Cmd::Hall { alpha, matrix, q } => hall(alpha, matrix, q),
        Cmd::Reduce { matrix, j, lambda } => reduce(matrix, j, lambda),
        Cmd::Verify {
            suite,
            n,
            r,
            r_max,
            q,
        } => verify(suite, n, *r, *r_max, q),
    };
    let (value, code) = match result {
        Ok(v) => (v, 0),
        Err(Failure::Mismatch(v)) => (v, 1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&value, cli.out.as_ref()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
