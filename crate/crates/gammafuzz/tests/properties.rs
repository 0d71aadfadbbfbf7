//! Cross-module invariants, mostly property-based: closure algebra,
//! level cuts, chain closure of the operations, and the equivalence of
//! the composition fixpoint with its brute-force oracle on arbitrary
//! (not necessarily ideal) subsets.

use std::sync::Arc;

use proptest::prelude::*;

use gammafuzz::{
    compose, compose_oracle, enumerate_crisp_ideals, enumerate_ideals, gamma_product, samples,
    sum_oplus, Chain, CrispSubset, FuzzySubset, GammaSemiring, IdealKind, Membership,
};

fn grade_pool() -> Vec<Membership> {
    ["0", "1/5", "1/3", "1/2", "2/3", "1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

fn structures() -> Vec<Arc<GammaSemiring>> {
    let mut all = samples::all();
    all.push(samples::klein4());
    all.push(samples::leftproj3());
    all
}

/// A random structure together with a random fuzzy subset over it.
fn arb_structure_and_grades(
    subsets: usize,
) -> impl Strategy<Value = (Arc<GammaSemiring>, Vec<Vec<Membership>>)> {
    let pool = grade_pool();
    (0..structures().len()).prop_flat_map(move |i| {
        let g = structures()[i].clone();
        let n = g.s_size();
        let pool = pool.clone();
        proptest::collection::vec(proptest::collection::vec(0..pool.len(), n), subsets).prop_map(
            move |choice_rows| {
                let grades = choice_rows
                    .iter()
                    .map(|row| row.iter().map(|&c| pool[c]).collect())
                    .collect();
                (g.clone(), grades)
            },
        )
    })
}

fn subset(g: &Arc<GammaSemiring>, grades: Vec<Membership>) -> FuzzySubset {
    FuzzySubset::new(Arc::clone(g), grades).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn compose_matches_oracle_on_arbitrary_subsets(
        (g, grades) in arb_structure_and_grades(2)
    ) {
        let mu1 = subset(&g, grades[0].clone());
        let mu2 = subset(&g, grades[1].clone());
        let fix = compose(&mu1, &mu2).unwrap();
        let brute = compose_oracle(&mu1, &mu2, g.s_size()).unwrap();
        prop_assert_eq!(&fix, &brute);
        // extra terms past |S| change nothing
        let longer = compose_oracle(&mu1, &mu2, g.s_size() + 2).unwrap();
        prop_assert_eq!(&fix, &longer);
    }

    #[test]
    fn operations_never_leave_the_grade_set(
        (g, grades) in arb_structure_and_grades(2)
    ) {
        let mu1 = subset(&g, grades[0].clone());
        let mu2 = subset(&g, grades[1].clone());
        let mut allowed: Vec<Membership> = grades.concat();
        allowed.push(Membership::zero());
        allowed.push(Membership::one());
        for result in [
            sum_oplus(&mu1, &mu2).unwrap(),
            gamma_product(&mu1, &mu2).unwrap(),
            compose(&mu1, &mu2).unwrap(),
            mu1.meet(&mu2).unwrap(),
        ] {
            for &v in result.grades() {
                prop_assert!(allowed.contains(&v));
            }
        }
    }

    #[test]
    fn sum_is_commutative_and_product_below_compose(
        (g, grades) in arb_structure_and_grades(2)
    ) {
        let mu1 = subset(&g, grades[0].clone());
        let mu2 = subset(&g, grades[1].clone());
        prop_assert_eq!(
            sum_oplus(&mu1, &mu2).unwrap(),
            sum_oplus(&mu2, &mu1).unwrap()
        );
        let gp = gamma_product(&mu1, &mu2).unwrap();
        let co = compose(&mu1, &mu2).unwrap();
        prop_assert!(gp.leq(&co).unwrap());
    }

    #[test]
    fn level_cut_is_antitone(
        (g, grades) in arb_structure_and_grades(1),
        lo in 0usize..6,
        hi in 0usize..6
    ) {
        let pool = grade_pool();
        let (lo, hi) = (lo.min(hi), lo.max(hi));
        let mu = subset(&g, grades[0].clone());
        let big_cut = mu.level_cut(pool[lo]);
        let small_cut = mu.level_cut(pool[hi]);
        prop_assert!(small_cut.is_subset_of(&big_cut));
    }

    #[test]
    fn additive_closure_algebra(
        (g, _) in arb_structure_and_grades(1),
        bits_a in proptest::bits::u64::masked(0xff),
        bits_b in proptest::bits::u64::masked(0xff)
    ) {
        let n = g.s_size();
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let a = CrispSubset::from_bits(n, bits_a & mask);
        let b = CrispSubset::from_bits(n, (bits_a | bits_b) & mask);

        let (cl_a, steps) = g.additive_closure_with_steps(&a);
        // extensive
        prop_assert!(a.is_subset_of(&cl_a));
        // idempotent
        prop_assert_eq!(g.additive_closure(&cl_a), cl_a.clone());
        // monotone (b was built as a superset of a)
        prop_assert!(cl_a.is_subset_of(&g.additive_closure(&b)));
        // stabilizes within |S| growth steps
        prop_assert!(steps <= n);
    }
}

#[test]
fn zero_products_and_closures() {
    for g in structures() {
        let zero_only = CrispSubset::from_members(g.s_size(), [g.s_zero().0]);
        assert_eq!(g.crisp_product(&zero_only, &g.full_subset()), zero_only);
        assert_eq!(g.crisp_product(&g.full_subset(), &zero_only), zero_only);
        assert_eq!(g.additive_closure(&zero_only), zero_only);
    }
}

#[test]
fn characteristic_classifies_exactly_the_crisp_ideals() {
    for g in structures() {
        for bits in 0..(1u64 << g.s_size()) {
            let i = CrispSubset::from_bits(g.s_size(), bits);
            let chi = FuzzySubset::characteristic_of(&g, &i);
            let class = chi.classify();
            assert_eq!(
                class.left,
                g.is_crisp_left_ideal(&i),
                "{} left {}",
                g.name(),
                i
            );
            assert_eq!(
                class.right,
                g.is_crisp_right_ideal(&i),
                "{} right {}",
                g.name(),
                i
            );
        }
    }
}

#[test]
fn level_cuts_of_left_ideals_are_crisp_left_ideals() {
    let chain: Chain = "0,1/3,1/2,1".parse().unwrap();
    for g in structures() {
        let fam = enumerate_ideals(&g, &chain, IdealKind::Left).unwrap();
        for mu in fam.members() {
            for &t in chain.values() {
                let cut = mu.level_cut(t);
                assert!(
                    g.is_crisp_left_ideal(&cut),
                    "{}: cut of {} at {} is {}",
                    g.name(),
                    mu,
                    t,
                    cut
                );
            }
        }
    }
}

#[test]
fn families_are_closed_under_the_operations() {
    let chain: Chain = "0,1/2,1".parse().unwrap();
    for g in structures() {
        for kind in IdealKind::ALL {
            let fam = enumerate_ideals(&g, &chain, kind).unwrap();
            for a in fam.members() {
                for b in fam.members() {
                    assert!(fam.contains(&sum_oplus(a, b).unwrap()));
                    assert!(fam.contains(&compose(a, b).unwrap()));
                    assert!(fam.contains(&a.meet(b).unwrap()));
                }
            }
        }
    }
}

#[test]
fn meet_of_enumerated_left_ideals_is_a_left_ideal() {
    // the full-family intersection on maxmin2 over {0,1/2,1}
    let g = samples::maxmin2();
    let chain: Chain = "0,1/2,1".parse().unwrap();
    let fam = enumerate_ideals(&g, &chain, IdealKind::Left).unwrap();
    let met = gammafuzz::meet_family(fam.members()).unwrap();
    let class = met.classify();
    assert!(class.left && class.zero_is_one);
    assert!(fam.contains(&met));
}

#[test]
fn theta_is_least_among_zero_pinned_subsets() {
    let chain: Chain = "0,1/2,1".parse().unwrap();
    for g in structures() {
        let theta = FuzzySubset::theta(&g);
        for kind in IdealKind::ALL {
            for mu in enumerate_ideals(&g, &chain, kind).unwrap().members() {
                assert!(theta.leq(mu).unwrap());
            }
        }
    }
}

#[test]
fn crisp_ideal_counts_are_stable() {
    let expect = |g: &Arc<GammaSemiring>, kind, n| {
        assert_eq!(enumerate_crisp_ideals(g, kind).len(), n, "{}", g.name());
    };
    expect(&samples::maxmin2(), IdealKind::Left, 2);
    expect(&samples::trunc3(), IdealKind::Left, 3);
    expect(&samples::null2(), IdealKind::Left, 2);
    expect(&samples::trivial1(), IdealKind::Left, 1);
    expect(&samples::klein4(), IdealKind::Left, 4);
}
