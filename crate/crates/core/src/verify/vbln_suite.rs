use rayon::prelude::*;

use super::{Config, SuiteReport};
use crate::afmat::PeriodicMatrix;
use crate::grid::{small_vectors, theta_pm};
use crate::laurent::{boxed, IntVectorN};
use crate::schur::{a_j_lambda_r, a_j_r, SchurElement};
use crate::vbln::{
    mul_0j_left, mul_0j_right, mul_by_semisimple_minus, mul_by_semisimple_plus, reduce_j_lambda,
    relation_e_check, triangular_check_in_v, triangular_leading_check, VElement,
};

/// A few `j ∈ ℤ^n`, including negative entries.
fn j_vectors(n: usize) -> Vec<IntVectorN> {
    let mut mixed = vec![0; n];
    mixed[0] = 1;
    mixed[n - 1] -= 2;
    vec![
        IntVectorN::zero(n),
        IntVectorN::unit(n, 1),
        IntVectorN::new(mixed),
        IntVectorN::new(vec![1; n]),
    ]
}

/// `j ∈ ℕ^n` for the triangular relation.
fn nonneg_j_vectors(n: usize) -> Vec<IntVectorN> {
    let mut out = vec![
        IntVectorN::zero(n),
        IntVectorN::unit(n, 1),
        IntVectorN::new(vec![1; n]),
    ];
    out.push(IntVectorN::unit(n, n as i64).scale(2));
    out
}

/// The commutator relation for the pairs of the acceptance grid at `n = 2`.
pub fn relation_e_suite(cfg: &Config) -> SuiteReport {
    let mut rep = SuiteReport::new("relation-e");
    let v = |x: &[i64]| IntVectorN::new(x.to_vec());
    let pairs = [
        (v(&[1, 0]), v(&[1, 0])),
        (v(&[1, 0]), v(&[0, 1])),
        (v(&[1, 1]), v(&[1, 1])),
        (v(&[2, 0]), v(&[2, 0])),
        (v(&[2, 0]), v(&[1, 0])),
    ];
    let levels: Vec<usize> = cfg.levels(2).collect();
    let parts: Vec<SuiteReport> = pairs
        .par_iter()
        .map(|(lambda, mu)| {
            let mut rep = SuiteReport::new("relation-e");
            match relation_e_check(lambda, mu, &levels) {
                Ok(c) => {
                    rep.check(c.symbolic, || {
                        format!("λ={lambda} μ={mu}: sides differ in V: {:?}", c.diff)
                    });
                    for &(r, via_v, via_s) in &c.levels {
                        rep.check(via_v, || {
                            format!("λ={lambda} μ={mu} r={r}: evaluated sides differ")
                        });
                        rep.check(via_s, || {
                            format!("λ={lambda} μ={mu} r={r}: Schur route differs: {:?}", c.diff)
                        });
                    }
                }
                Err(e) => rep.check(false, || format!("λ={lambda} μ={mu}: {e}")),
            }
            rep
        })
        .collect();
    for p in parts {
        rep.merge(p);
    }
    rep
}

fn compare(
    rep: &mut SuiteReport,
    what: &str,
    via_v: crate::Result<SchurElement>,
    via_s: crate::Result<SchurElement>,
) {
    match (via_v, via_s) {
        (Ok(x), Ok(y)) => rep.check(x == y, || format!("{what}: ζ gives {x}, Schur gives {y}")),
        (x, y) => rep.check(false, || format!("{what}: {:?} / {:?}", x.err(), y.err())),
    }
}

/// `ζ_r` commutes with the generator products, and `A(j, λ)` reduces exactly.
pub fn level_coherence_suite(cfg: &Config) -> SuiteReport {
    let mut report = SuiteReport::new("level-coherence");
    for &n in &cfg.periods {
        let zero_n = IntVectorN::zero(n);
        let grid = theta_pm(n, 2, cfg.span(n));
        let alphas = small_vectors(n, 2);
        let js = j_vectors(n);
        let lambdas = boxed(&IntVectorN::new(vec![2; n]));
        let parts: Vec<SuiteReport> = grid
            .par_iter()
            .map(|a| {
                let mut rep = SuiteReport::new("level-coherence");
                for j in &js {
                    let x = VElement::basis(a.clone(), j.clone()).expect("valid label");
                    for r in cfg.levels(1) {
                        let ar = a_j_r(a, j, r).expect("valid label");
                        for jp in &js {
                            let k = a_j_r(&PeriodicMatrix::zero(n), jp, r).expect("valid label");
                            compare(
                                &mut rep,
                                &format!("0({jp})·({a})({j}) at r={r}"),
                                mul_0j_left(jp, &x).eval_at_level(r),
                                k.try_mul(&ar),
                            );
                            compare(
                                &mut rep,
                                &format!("({a})({j})·0({jp}) at r={r}"),
                                mul_0j_right(&x, jp).eval_at_level(r),
                                ar.try_mul(&k),
                            );
                        }
                        for alpha in &alphas {
                            let s = PeriodicMatrix::s_alpha(alpha);
                            let sp = a_j_r(&s, &zero_n, r).expect("valid label");
                            let sm = a_j_r(&s.transpose(), &zero_n, r).expect("valid label");
                            compare(
                                &mut rep,
                                &format!("S_{alpha}(0)·({a})({j}) at r={r}"),
                                mul_by_semisimple_plus(alpha, &x).and_then(|y| y.eval_at_level(r)),
                                sp.try_mul(&ar),
                            );
                            compare(
                                &mut rep,
                                &format!("ᵗS_{alpha}(0)·({a})({j}) at r={r}"),
                                mul_by_semisimple_minus(alpha, &x).and_then(|y| y.eval_at_level(r)),
                                sm.try_mul(&ar),
                            );
                        }
                    }
                    for lambda in &lambdas {
                        let red = match reduce_j_lambda(a, j, lambda) {
                            Ok(y) => y,
                            Err(e) => {
                                rep.check(false, || format!("reducing ({a})({j},{lambda}): {e}"));
                                continue;
                            }
                        };
                        for r in cfg.levels(1) {
                            compare(
                                &mut rep,
                                &format!("({a})({j},{lambda}) at r={r}"),
                                red.eval_at_level(r),
                                a_j_lambda_r(a, j, lambda, r),
                            );
                        }
                    }
                }
                rep
            })
            .collect();
        for p in parts {
            report.merge(p);
        }
    }
    report
}

/// Leading term and strict `≺`-triangularity of `A^+(0) 0(j) A^-(0)` at `n = 2`.
pub fn triangular_suite(cfg: &Config) -> SuiteReport {
    let n = 2;
    let mut report = SuiteReport::new("triangular");
    let grid = theta_pm(n, 2, cfg.span(n));
    let js = nonneg_j_vectors(n);
    let parts: Vec<SuiteReport> = grid
        .par_iter()
        .map(|a| {
            let mut rep = SuiteReport::new("triangular");
            for j in &js {
                for r in cfg.levels(a.sigma().max(1) as usize) {
                    match triangular_leading_check(a, j, r) {
                        Ok(c) => {
                            rep.check(c.holds(), || format!("A={a} j={j} r={r}: {:?}", c.failures))
                        }
                        Err(e) => rep.check(false, || format!("A={a} j={j} r={r}: {e}")),
                    }
                }
            }
            rep
        })
        .collect();
    for p in parts {
        report.merge(p);
    }
    // inside V when both halves are semisimple
    for alpha in small_vectors(n, 2) {
        for beta in small_vectors(n, 2) {
            for j in &js {
                match triangular_check_in_v(&alpha, &beta, j) {
                    Ok(c) => report.check(c.holds(), || {
                        format!("S_{alpha}, ᵗS_{beta}, j={j}: {:?}", c.failures)
                    }),
                    Err(e) => report.check(false, || format!("S_{alpha}, ᵗS_{beta}, j={j}: {e}")),
                }
            }
        }
    }
    report
}
