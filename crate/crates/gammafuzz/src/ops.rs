//! The three compositions on fuzzy subsets: sum, gamma-product, and the
//! unbounded-sum composition.
//!
//! Composition is the only nontrivial kernel. Its defining supremum
//! ranges over sums of arbitrarily many product terms, so it cannot be
//! enumerated directly. Instead we cut at each candidate grade t: collect
//! the single products whose pair grade reaches t, additively close that
//! set, and read the result off as the largest t whose closure contains
//! the target element. The candidate grades form a finite set (every pair
//! minimum plus zero), so the supremum is attained exactly.
//!
//! `compose_oracle` is the independent check: a bottleneck dynamic
//! program over sums of at most `max_terms` product terms. Sums of length
//! `|S|` already reach everything reachable, because the sets reachable
//! by at most k terms grow strictly inside the finite carrier until they
//! stabilize.

use std::sync::Arc;

use crate::algebra::GammaSemiring;
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzySubset, Membership};

fn require_same_ambient(a: &FuzzySubset, b: &FuzzySubset) -> Result<Arc<GammaSemiring>> {
    if !a.same_ambient(b) {
        return Err(Error::AmbientMismatch);
    }
    Ok(Arc::clone(a.ambient()))
}

/// `(mu1 ⊕ mu2)(x) = sup { min(mu1(u), mu2(v)) : u + v = x }`, 0 when no
/// pair represents x (cannot happen in a structure with zero, but the
/// fallback is kept anyway).
pub fn sum_oplus(mu1: &FuzzySubset, mu2: &FuzzySubset) -> Result<FuzzySubset> {
    let g = require_same_ambient(mu1, mu2)?;
    let mut grades = vec![Membership::zero(); g.s_size()];
    for u in g.s_elems() {
        for v in g.s_elems() {
            let x = g.add(u, v);
            let cand = mu1.grade(u).min(mu2.grade(v));
            if cand > grades[x.0] {
                grades[x.0] = cand;
            }
        }
    }
    FuzzySubset::new(g, grades)
}

/// `(mu1 Γ mu2)(x) = sup { min(mu1(u), mu2(v)) : u γ v = x }`, 0 when no
/// triple represents x. The fallback is reachable: structures without a
/// strong unity can leave elements outside the single-product image.
pub fn gamma_product(mu1: &FuzzySubset, mu2: &FuzzySubset) -> Result<FuzzySubset> {
    let g = require_same_ambient(mu1, mu2)?;
    let mut grades = vec![Membership::zero(); g.s_size()];
    for u in g.s_elems() {
        for v in g.s_elems() {
            let cand = mu1.grade(u).min(mu2.grade(v));
            if cand.is_zero() {
                continue;
            }
            for gamma in g.g_elems() {
                let x = g.mul(u, gamma, v);
                if cand > grades[x.0] {
                    grades[x.0] = cand;
                }
            }
        }
    }
    FuzzySubset::new(g, grades)
}

/// `(mu1 ∘ mu2)(x)`: the supremum over all decompositions
/// `x = Σ u_i γ_i v_i` of the minimum pair grade, and 0 when no sum of
/// products represents x.
///
/// Computed by the level-cut fixpoint: for each candidate grade t, the
/// elements with composition grade >= t are exactly the additive closure
/// of `{ u γ v : min(mu1(u), mu2(v)) >= t }`.
pub fn compose(mu1: &FuzzySubset, mu2: &FuzzySubset) -> Result<FuzzySubset> {
    let g = require_same_ambient(mu1, mu2)?;

    // candidate grades: all pair minima, deduplicated, descending;
    // zero is skipped because it is the fallback value anyway
    let mut thresholds: Vec<Membership> = Vec::new();
    for u in g.s_elems() {
        for v in g.s_elems() {
            let t = mu1.grade(u).min(mu2.grade(v));
            if !t.is_zero() {
                thresholds.push(t);
            }
        }
    }
    thresholds.sort();
    thresholds.dedup();

    let mut grades = vec![Membership::zero(); g.s_size()];
    // descending: the first closure containing x fixes its grade
    for &t in thresholds.iter().rev() {
        let mut products = g.empty_subset();
        for u in g.s_elems() {
            for v in g.s_elems() {
                if mu1.grade(u).min(mu2.grade(v)) >= t {
                    for gamma in g.g_elems() {
                        products.insert(g.mul(u, gamma, v));
                    }
                }
            }
        }
        let reachable = g.additive_closure(&products);
        for x in reachable.iter() {
            if grades[x.0].is_zero() {
                grades[x.0] = t;
            }
        }
    }
    FuzzySubset::new(g, grades)
}

/// Brute-force composition over sums of at most `max_terms` product
/// terms, as a dynamic program on (reached element, best min grade).
/// Equals [`compose`] whenever `max_terms >= |S|`.
pub fn compose_oracle(
    mu1: &FuzzySubset,
    mu2: &FuzzySubset,
    max_terms: usize,
) -> Result<FuzzySubset> {
    assert!(max_terms >= 1, "max_terms must be positive");
    let g = require_same_ambient(mu1, mu2)?;
    let n = g.s_size();

    // best grade over single product terms; None marks "not representable"
    let mut single: Vec<Option<Membership>> = vec![None; n];
    for u in g.s_elems() {
        for v in g.s_elems() {
            let cand = mu1.grade(u).min(mu2.grade(v));
            for gamma in g.g_elems() {
                let x = g.mul(u, gamma, v);
                if single[x.0].is_none_or(|b| cand > b) {
                    single[x.0] = Some(cand);
                }
            }
        }
    }

    let mut best = single.clone();
    let mut exact_k = single.clone(); // best over sums of exactly k terms
    for _ in 2..=max_terms {
        let mut next: Vec<Option<Membership>> = vec![None; n];
        for p in g.s_elems() {
            let Some(wp) = exact_k[p.0] else { continue };
            for q in g.s_elems() {
                let Some(wq) = single[q.0] else { continue };
                let x = g.add(p, q);
                let cand = wp.min(wq);
                if next[x.0].is_none_or(|b| cand > b) {
                    next[x.0] = Some(cand);
                }
            }
        }
        for x in 0..n {
            if let Some(w) = next[x] {
                if best[x].is_none_or(|b| w > b) {
                    best[x] = Some(w);
                }
            }
        }
        exact_k = next;
    }

    let grades = best
        .into_iter()
        .map(|o| o.unwrap_or(Membership::zero()))
        .collect();
    FuzzySubset::new(g, grades)
}
