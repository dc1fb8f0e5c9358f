use rayon::prelude::*;

use super::{Config, SuiteReport};
use crate::afmat::PeriodicMatrix;
use crate::grid::{lower_partners, theta, upper_partners};
use crate::laurent::LaurentScalar;
use crate::schur::{
    e_mul_lower, e_mul_upper, n_mul_lower, n_mul_upper, oracle_mul, Basis, SchurElement,
};

/// `[B][A] = v^{-d_B - d_A} e_B e_A` rewritten in the `[·]` basis.
fn normalized(e_prod: &SchurElement, b: &PeriodicMatrix, a: &PeriodicMatrix) -> SchurElement {
    let shift = LaurentScalar::v_pow(-(b.d_exponent() + a.d_exponent()) as i32);
    e_prod.scale(&shift).to_basis(Basis::N)
}

/// Closed semisimple products against the Hecke oracle, and the `[·]`-basis
/// formulas against basis conversion.
pub fn schur_oracle_suite(cfg: &Config) -> SuiteReport {
    let mut report = SuiteReport::new("schur-oracle");
    for &n in &cfg.periods {
        for r in cfg.levels(2) {
            let grid = theta(n, r, cfg.span(n));
            let parts: Vec<SuiteReport> = grid
                .par_iter()
                .map(|a| {
                    let mut rep = SuiteReport::new("schur-oracle");
                    let mu = a.ro();
                    for b in upper_partners(&mu) {
                        let closed = e_mul_upper(&b, a).expect("upper shape");
                        let oracle = oracle_mul(&b, a).expect("oracle");
                        rep.check(closed == oracle, || {
                            format!("upper B={b} A={a}: closed {closed} oracle {oracle}")
                        });
                        let nb = n_mul_upper(&b, a).expect("upper shape");
                        let conv = normalized(&oracle, &b, a);
                        rep.check(nb == conv, || format!("[B][A] B={b} A={a}: {nb} vs {conv}"));
                    }
                    for c in lower_partners(&mu) {
                        let closed = e_mul_lower(&c, a).expect("lower shape");
                        let oracle = oracle_mul(&c, a).expect("oracle");
                        rep.check(closed == oracle, || {
                            format!("lower C={c} A={a}: closed {closed} oracle {oracle}")
                        });
                        let nc = n_mul_lower(&c, a).expect("lower shape");
                        let conv = normalized(&oracle, &c, a);
                        rep.check(nc == conv, || format!("[C][A] C={c} A={a}: {nc} vs {conv}"));
                    }
                    rep
                })
                .collect();
            for p in parts {
                report.merge(p);
            }
        }
    }
    report
}
