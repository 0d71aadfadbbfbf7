//! Independent brute-force oracles for the operations, plus the derived
//! values frozen from those oracles.
//!
//! `brute_sum` and `brute_gamma` re-enumerate the defining suprema
//! directly ("for each x, scan every decomposition"), deliberately not
//! sharing the implementation's write-into-result shape. Composition is
//! cross-checked against `compose_oracle`, whose per-length dynamic
//! program takes a different route to the unbounded-sum supremum than
//! the level-cut fixpoint, and here additionally against a raw
//! term-sequence enumeration.

use std::sync::Arc;

use gammafuzz::{
    compose, compose_oracle, enumerate_ideals, gamma_product, samples, sum_oplus, Chain, ElemS,
    FuzzySubset, GammaSemiring, IdealKind, Membership,
};

fn m(s: &str) -> Membership {
    s.parse().unwrap()
}

fn subset(g: &Arc<GammaSemiring>, grades: &[&str]) -> FuzzySubset {
    FuzzySubset::new(Arc::clone(g), grades.iter().map(|s| m(s)).collect()).unwrap()
}

fn brute_sum(g: &GammaSemiring, mu1: &FuzzySubset, mu2: &FuzzySubset) -> Vec<Membership> {
    g.s_elems()
        .map(|x| {
            let mut best = Membership::zero();
            for u in g.s_elems() {
                for v in g.s_elems() {
                    if g.add(u, v) == x {
                        best = best.max(mu1.grade(u).min(mu2.grade(v)));
                    }
                }
            }
            best
        })
        .collect()
}

fn brute_gamma(g: &GammaSemiring, mu1: &FuzzySubset, mu2: &FuzzySubset) -> Vec<Membership> {
    g.s_elems()
        .map(|x| {
            let mut best = Membership::zero();
            for u in g.s_elems() {
                for gamma in g.g_elems() {
                    for v in g.s_elems() {
                        if g.mul(u, gamma, v) == x {
                            best = best.max(mu1.grade(u).min(mu2.grade(v)));
                        }
                    }
                }
            }
            best
        })
        .collect()
}

/// Exhaustive sum-of-terms enumeration: every sequence of product terms
/// up to the given length, tracking the running sum and minimum grade.
/// Exponential, so only usable on the smallest structures.
fn brute_compose(
    g: &GammaSemiring,
    mu1: &FuzzySubset,
    mu2: &FuzzySubset,
    max_len: usize,
) -> Vec<Membership> {
    struct Term {
        product: ElemS,
        grade: Membership,
    }
    let mut terms = Vec::new();
    for u in g.s_elems() {
        for gamma in g.g_elems() {
            for v in g.s_elems() {
                terms.push(Term {
                    product: g.mul(u, gamma, v),
                    grade: mu1.grade(u).min(mu2.grade(v)),
                });
            }
        }
    }

    let mut best = vec![Membership::zero(); g.s_size()];
    fn recurse(
        g: &GammaSemiring,
        terms: &[Term],
        left: usize,
        sum: Option<(ElemS, Membership)>,
        best: &mut [Membership],
    ) {
        if let Some((x, grade)) = sum {
            if grade > best[x.0] {
                best[x.0] = grade;
            }
        }
        if left == 0 {
            return;
        }
        for t in terms {
            let next = match sum {
                None => (t.product, t.grade),
                Some((x, grade)) => (g.add(x, t.product), grade.min(t.grade)),
            };
            recurse(g, terms, left - 1, Some(next), best);
        }
    }
    recurse(g, &terms, max_len, None, &mut best);
    best
}

#[test]
fn frozen_maxmin2_values_match_all_routes() {
    let g = samples::maxmin2();
    let mu1 = subset(&g, &["1", "1/2"]);
    let mu2 = subset(&g, &["1", "1/3"]);

    let sum = sum_oplus(&mu1, &mu2).unwrap();
    assert_eq!(sum.grades(), brute_sum(&g, &mu1, &mu2).as_slice());
    assert_eq!(sum, subset(&g, &["1", "1/2"]));

    let prod = gamma_product(&mu1, &mu2).unwrap();
    assert_eq!(prod.grades(), brute_gamma(&g, &mu1, &mu2).as_slice());
    assert_eq!(prod, subset(&g, &["1", "1/3"]));

    let comp = compose(&mu1, &mu2).unwrap();
    assert_eq!(comp.grades(), brute_compose(&g, &mu1, &mu2, 2).as_slice());
    assert_eq!(comp, subset(&g, &["1", "1/3"]));
}

#[test]
fn exhaustive_pool_agreement_on_small_structures() {
    // every subset over a 3-value pool, every pair, every small structure
    let pool = ["0", "1/2", "1"];
    for g in [samples::maxmin2(), samples::null2(), samples::trivial1()] {
        let n = g.s_size();
        let mut all = Vec::new();
        let count = pool.len().pow(n as u32);
        for idx in 0..count {
            let mut rest = idx;
            let grades: Vec<Membership> = (0..n)
                .map(|_| {
                    let c = rest % pool.len();
                    rest /= pool.len();
                    m(pool[c])
                })
                .collect();
            all.push(FuzzySubset::new(Arc::clone(&g), grades).unwrap());
        }
        for a in &all {
            for b in &all {
                assert_eq!(
                    sum_oplus(a, b).unwrap().grades(),
                    brute_sum(&g, a, b).as_slice()
                );
                assert_eq!(
                    gamma_product(a, b).unwrap().grades(),
                    brute_gamma(&g, a, b).as_slice()
                );
                assert_eq!(
                    compose(a, b).unwrap().grades(),
                    brute_compose(&g, a, b, n).as_slice()
                );
            }
        }
    }
}

#[test]
fn trunc3_compose_against_term_enumeration() {
    let g = samples::trunc3();
    let cases = [
        ["1", "1/2", "1"],
        ["1", "0", "1/2"],
        ["0", "1", "0"],
        ["1/2", "1/3", "1"],
    ];
    for a in &cases {
        for b in &cases {
            let mu1 = subset(&g, a);
            let mu2 = subset(&g, b);
            assert_eq!(
                compose(&mu1, &mu2).unwrap().grades(),
                brute_compose(&g, &mu1, &mu2, 3).as_slice()
            );
        }
    }
}

#[test]
fn klein4_two_term_gap_confirmed_by_enumeration() {
    let g = samples::klein4();
    let mu = subset(&g, &["1", "1/2", "1/2", "0"]);
    // term enumeration at length 2 already reaches the fixpoint value
    let brute2 = brute_compose(&g, &mu, &mu, 2);
    assert_eq!(compose(&mu, &mu).unwrap().grades(), brute2.as_slice());
    // and length 1 reproduces the plain gamma-product
    let brute1 = brute_compose(&g, &mu, &mu, 1);
    assert_eq!(gamma_product(&mu, &mu).unwrap().grades(), brute1.as_slice());
    assert_ne!(brute1, brute2);
}

#[test]
fn oracle_equivalence_over_all_enumerated_ideal_pairs() {
    let chains: [Chain; 2] = [Chain::bool_chain(), "0,1/2,1".parse().unwrap()];
    for g in [samples::maxmin2(), samples::trunc3(), samples::null2()] {
        for chain in &chains {
            for kind in IdealKind::ALL {
                let fam = enumerate_ideals(&g, chain, kind).unwrap();
                for a in fam.members() {
                    for b in fam.members() {
                        let fix = compose(a, b).unwrap();
                        let dp = compose_oracle(a, b, g.s_size()).unwrap();
                        assert_eq!(fix, dp, "{} {chain} {kind}", g.name());
                        // stabilized: longer sums change nothing
                        let dp_longer = compose_oracle(a, b, g.s_size() + 3).unwrap();
                        assert_eq!(fix, dp_longer);
                    }
                }
            }
        }
    }
}

#[test]
fn frozen_family_members() {
    let chain: Chain = "0,1/2,1".parse().unwrap();
    let g = samples::maxmin2();
    let fam = enumerate_ideals(&g, &chain, IdealKind::TwoSided).unwrap();
    let rendered: Vec<String> = fam.members().iter().map(|s| s.to_string()).collect();
    assert_eq!(rendered, vec!["[1,0]", "[1,1/2]", "[1,1]"]);

    let t = samples::trunc3();
    let fam = enumerate_ideals(&t, &chain, IdealKind::TwoSided).unwrap();
    let rendered: Vec<String> = fam.members().iter().map(|s| s.to_string()).collect();
    assert_eq!(
        rendered,
        vec![
            "[1,0,0]",
            "[1,0,1/2]",
            "[1,0,1]",
            "[1,1/2,1/2]",
            "[1,1/2,1]",
            "[1,1,1]"
        ]
    );
}

#[test]
fn gamma_product_fallback_fires_without_strong_unity() {
    // restricting trunc3's operator carrier to {0,2} leaves element 1
    // outside the single-product image entirely
    let tables = samples::trunc3_tables();
    let pick = [0usize, 2];
    let gamma_add: Vec<Vec<usize>> = pick
        .iter()
        .map(|&a| {
            pick.iter()
                .map(|&b| match tables.gamma_add[a][b] {
                    0 => 0,
                    2 => 1,
                    other => panic!("{{0,2}} is closed under +, got {other}"),
                })
                .collect()
        })
        .collect();
    let product: Vec<Vec<Vec<usize>>> = (0..3)
        .map(|a| pick.iter().map(|&g| tables.product[a][g].clone()).collect())
        .collect();
    let g = Arc::new(
        samples::Tables {
            name: "trunc3-gamma02".into(),
            s_add: tables.s_add.clone(),
            gamma_add,
            product,
            s_zero: 0,
            gamma_zero: 0,
            unities: vec![],
        }
        .build()
        .unwrap(),
    );
    assert!(g.validate().is_empty());

    let one = FuzzySubset::one(&g);
    let gp = gamma_product(&one, &one).unwrap();
    assert_eq!(gp, subset(&g, &["1", "0", "1"]));
    // sums of products cannot reach 1 either
    assert_eq!(compose(&one, &one).unwrap(), subset(&g, &["1", "0", "1"]));
    assert_eq!(
        compose_oracle(&one, &one, 3).unwrap(),
        subset(&g, &["1", "0", "1"])
    );
}
