use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Config, SuiteReport};
use crate::affsym::{
    is_min_double_coset_rep, jmath, pseudo_matrix_rep, random_young_element, AffinePermutation,
};
use crate::grid::theta;
use crate::hecke::{coset_product_identity_check, HeckeElement};
use crate::laurent::{gauss_sq, gauss_sym, subset_sum_identity_check, LaurentScalar};

fn random_scalar(rng: &mut impl Rng) -> LaurentScalar {
    let k = rng.gen_range(0..4);
    LaurentScalar::from_terms((0..k).map(|_| (rng.gen_range(-4..=4), rng.gen_range(-5..=5))))
}

/// q-Pascal recursion, bar involution and the subset-sum identity.
pub fn laurent_suite(cfg: &Config) -> SuiteReport {
    let mut rep = SuiteReport::new("laurent");
    for big_n in -5..=10i64 {
        for t in 0..=10i64 {
            let lhs = gauss_sq(big_n, t);
            let rhs = if t == 0 {
                LaurentScalar::one()
            } else {
                &gauss_sq(big_n - 1, t) + &gauss_sq(big_n - 1, t - 1).shift(2 * (big_n - t) as i32)
            };
            rep.check(lhs == rhs, || format!("q-Pascal fails at N={big_n} t={t}"));
        }
    }
    for big_n in 0..=8 {
        for t in 0..=big_n {
            let s = gauss_sym(big_n, t);
            rep.check(s.bar() == s, || {
                format!("[{big_n} over {t}] is not bar-invariant")
            });
            let b = gauss_sq(big_n, t);
            let expect = b.shift(-2 * (t * (big_n - t)) as i32);
            rep.check(b.bar() == expect, || format!("bar of ⟦{big_n} over {t}⟧"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples.max(1) * 10 {
        let (x, y) = (random_scalar(&mut rng), random_scalar(&mut rng));
        rep.check(x.bar().bar() == x, || {
            format!("bar is not an involution on {x}")
        });
        rep.check((&x * &y).bar() == &x.bar() * &y.bar(), || {
            format!("bar({x} * {y})")
        });
        rep.check((&x + &y).bar() == &x.bar() + &y.bar(), || {
            format!("bar({x} + {y})")
        });
    }
    for a in 0..=3 {
        for r in 1..=5 {
            for t in 0..=r {
                rep.check(subset_sum_identity_check(a, r, t), || {
                    format!("subset-sum identity fails at a={a} r={r} t={t}")
                });
            }
        }
    }
    rep
}

/// `ℓ(y_A)` against the closed length formula, `ȷ_△` round trips, and
/// minimality of `y_A` in its double coset by sampling.
pub fn length_suite(cfg: &Config) -> SuiteReport {
    let mut report = SuiteReport::new("length");
    for &n in &cfg.periods {
        for r in cfg.levels(2) {
            let grid = theta(n, r, cfg.span(n));
            let parts: Vec<SuiteReport> = grid
                .par_iter()
                .enumerate()
                .map(|(k, a)| {
                    let mut rep = SuiteReport::new("length");
                    let y = match pseudo_matrix_rep(a) {
                        Ok(y) => y,
                        Err(e) => {
                            rep.check(false, || format!("pseudo_matrix_rep({a}): {e}"));
                            return rep;
                        }
                    };
                    let (lambda, mu) = (a.ro(), a.co());
                    let len = y.length() as i64;
                    rep.check(len == a.length_formula(), || {
                        format!("A={a}: ℓ(y_A)={len}, formula {}", a.length_formula())
                    });
                    rep.check(y.length_by_enumeration() as i64 == len, || {
                        format!("A={a}: inversion count disagrees for {y}")
                    });
                    rep.check(is_min_double_coset_rep(&y, &lambda, &mu), || {
                        format!("A={a}: {y} is not a shortest double coset representative")
                    });
                    let back = jmath(&lambda, &y, &mu);
                    rep.check(matches!(&back, Ok(b) if b == a), || {
                        format!("A={a}: ȷ(y_A) = {back:?}")
                    });
                    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (k as u64) << 8 ^ r as u64);
                    let mut shorter = 0;
                    for _ in 0..cfg.samples {
                        let u = random_young_element(&lambda, &mut rng);
                        let w = random_young_element(&mu, &mut rng);
                        if (u.compose(&y).compose(&w).length() as i64) < len {
                            shorter += 1;
                        }
                    }
                    rep.check(shorter == 0, || format!("A={a}: {shorter} shorter samples"));
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

fn random_perm(r: usize, rng: &mut impl Rng) -> AffinePermutation {
    use rand::seq::SliceRandom;
    let mut base: Vec<i64> = (1..=r as i64).collect();
    base.shuffle(rng);
    let window = base
        .iter()
        .map(|&b| b + rng.gen_range(-1..=1) * r as i64)
        .collect();
    AffinePermutation::new(window).expect("valid window")
}

fn random_element(r: usize, rng: &mut impl Rng) -> HeckeElement {
    let mut h = HeckeElement::zero(r);
    for _ in 0..rng.gen_range(1..=2) {
        let c = LaurentScalar::monomial(rng.gen_range(-2..=2i64).max(1), rng.gen_range(-2..=2));
        h.add_term(random_perm(r, rng), &c);
    }
    h
}

/// Quadratic relation, the `ρ` rules, associativity and the double coset
/// identity `x_λ T_d x_μ = ∏⟦a_{i,j}⟧! T_{𝔖_λ d 𝔖_μ}`.
pub fn hecke_suite(cfg: &Config) -> SuiteReport {
    let mut report = SuiteReport::new("hecke");
    let v2 = LaurentScalar::v_pow(2);
    for r in cfg.levels(2) {
        let one = HeckeElement::one(r);
        let rho = HeckeElement::basis(AffinePermutation::rho(r));
        let rho_inv = HeckeElement::basis(AffinePermutation::rho_pow(r, -1));
        for i in 1..=r {
            let s = HeckeElement::basis(AffinePermutation::generator_s(i, r).unwrap());
            let lhs = &s * &s;
            let rhs = &s.scale(&(&v2 - &LaurentScalar::one())) + &one.scale(&v2);
            report.check(lhs == rhs, || format!("T_s{i}^2 at r={r}: {lhs}"));
            let next = HeckeElement::basis(AffinePermutation::generator_s(i % r + 1, r).unwrap());
            let conj = &(&rho * &s) * &rho_inv;
            report.check(conj == next, || format!("ρ T_s{i} ρ^-1 at r={r}: {conj}"));
        }
        report.check(&rho * &rho_inv == one, || format!("ρ ρ^-1 at r={r}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let triples: Vec<_> = (0..1000)
        .map(|_| {
            let r = rng.gen_range(2..=cfg.r_max.max(2));
            (
                random_element(r, &mut rng),
                random_element(r, &mut rng),
                random_element(r, &mut rng),
            )
        })
        .collect();
    let parts: Vec<SuiteReport> = triples
        .par_iter()
        .map(|(x, y, z)| {
            let mut rep = SuiteReport::new("hecke");
            let lhs = &(x * y) * z;
            let rhs = x * &(y * z);
            rep.check(lhs == rhs, || {
                format!("associativity fails on ({x}) ({y}) ({z})")
            });
            // T_w T_{w'} = T_{ww'} exactly when lengths add
            for w in x.terms().keys() {
                for u in y.terms().keys() {
                    let wu = w.compose(u);
                    if wu.length() == w.length() + u.length() {
                        let p = &HeckeElement::basis(w.clone()) * &HeckeElement::basis(u.clone());
                        rep.check(p == HeckeElement::basis(wu), || {
                            format!("length-additive product {w:?}·{u:?}")
                        });
                    }
                }
            }
            rep
        })
        .collect();
    for p in parts {
        report.merge(p);
    }
    for &n in &cfg.periods {
        for r in cfg.levels(2) {
            let grid = theta(n, r, cfg.span(n));
            let parts: Vec<SuiteReport> = grid
                .par_iter()
                .map(|a| {
                    let mut rep = SuiteReport::new("hecke");
                    let ok = pseudo_matrix_rep(a)
                        .and_then(|d| coset_product_identity_check(&a.ro(), &d, &a.co()));
                    rep.check(matches!(ok, Ok(true)), || {
                        format!("double coset identity fails for {a}: {ok:?}")
                    });
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
