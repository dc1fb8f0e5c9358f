use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Config, SuiteReport};
use crate::afmat::PeriodicMatrix;
use crate::grid::{small_vectors, theta_plus};
use crate::hall::{
    brute_hall_number, dim_end, end_count_f2, semisimple_hall_product, twisted_mul_semisimple,
    twisted_via_hall_polynomials,
};
use crate::laurent::IntVectorN;

/// Largest total dimension of a representation entering a brute-force count.
const MAX_DIM: i64 = 5;

/// Closed Hall polynomials against brute-force counts over `𝔽_p`, the two
/// twisted routes against each other, and `dim End` over `ℚ` against `𝔽_2`.
pub fn hall_suite(cfg: &Config) -> SuiteReport {
    let mut report = SuiteReport::new("hall");
    for &n in &cfg.periods {
        // every label of total dimension ≤ MAX_DIM, grouped by dimension vector
        let mut by_dim: BTreeMap<IntVectorN, Vec<PeriodicMatrix>> = BTreeMap::new();
        for c in theta_plus(n, MAX_DIM, MAX_DIM) {
            if c.dim_vector().sigma() <= MAX_DIM {
                by_dim.entry(c.dim_vector()).or_default().push(c);
            }
        }
        let mut cases = Vec::new();
        for a in theta_plus(n, 3, MAX_DIM) {
            for alpha in small_vectors(n, 2) {
                if a.dim_vector().sigma() + alpha.sigma() <= MAX_DIM {
                    cases.push((alpha, a.clone()));
                }
            }
        }
        let parts: Vec<SuiteReport> = cases
            .par_iter()
            .map(|(alpha, a)| {
                let mut rep = SuiteReport::new("hall");
                let s_alpha = PeriodicMatrix::s_alpha(alpha);
                let closed = semisimple_hall_product(alpha, a).expect("valid input");
                let target = &alpha.clone() + &a.dim_vector();
                for (c, phi) in &closed {
                    rep.check(c.dim_vector() == target, || {
                        format!("α={alpha} A={a}: label {c} has the wrong dimension vector")
                    });
                    for &p in &cfg.primes {
                        let brute = brute_hall_number(&s_alpha, a, c, p).expect("valid labels");
                        let value = phi.eval(p as i128);
                        rep.check(value == Some(brute as i128), || {
                            format!("α={alpha} A={a} C={c} q={p}: closed {phi} = {value:?}, brute {brute}")
                        });
                    }
                }
                // labels absent from the closed form must have Hall number zero
                let p = cfg.primes.first().copied().unwrap_or(2);
                for c in by_dim.get(&target).into_iter().flatten() {
                    if !closed.contains_key(c) {
                        let brute = brute_hall_number(&s_alpha, a, c, p).expect("valid labels");
                        rep.check(brute == 0, || {
                            format!("α={alpha} A={a}: missing label {c} with count {brute} at q={p}")
                        });
                    }
                }
                let t1 = twisted_mul_semisimple(alpha, a).expect("valid input");
                let t2 = twisted_via_hall_polynomials(alpha, a).expect("valid input");
                rep.check(t1 == t2, || format!("α={alpha} A={a}: twisted routes {t1:?} vs {t2:?}"));
                rep
            })
            .collect();
        for p in parts {
            report.merge(p);
        }
        for a in theta_plus(n, 3, MAX_DIM) {
            let d = dim_end(&a).expect("valid label");
            if let Some(count) = end_count_f2(&a, 20).expect("valid label") {
                report.check(count == 1u64 << d, || {
                    format!("End({a}): rational dimension {d}, {count} maps over F_2")
                });
            }
        }
    }
    report
}
