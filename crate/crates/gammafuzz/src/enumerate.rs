//! Exhaustive enumeration of fuzzy ideals over a finite grade chain.
//!
//! Generate-and-filter: walk the full grid of grade assignments in
//! lexicographic order and keep the ones that classify as requested.
//! A candidate budget guards against accidental blowups; at desk scale
//! the grid is tiny and the simple method is obviously correct.

use std::sync::Arc;

use crate::algebra::{CrispSubset, GammaSemiring};
use crate::error::{Error, Result};
use crate::fuzzy::{Chain, FuzzySubset, IdealKind, Membership};

/// Default candidate budget for [`enumerate_ideals`].
pub const DEFAULT_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    /// Maximum number of grade assignments to visit.
    pub budget: u128,
    /// Fix `mu(0) = 1` during generation (the standing convention for
    /// the law suites). Lifting it keeps only nonempty subsets, the
    /// bare Def-2.3 reading.
    pub zero_convention: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            budget: DEFAULT_BUDGET,
            zero_convention: true,
        }
    }
}

/// All fuzzy ideals of one kind with grades in a fixed chain.
#[derive(Debug, Clone)]
pub struct IdealFamily {
    ambient: Arc<GammaSemiring>,
    chain: Chain,
    kind: IdealKind,
    members: Vec<FuzzySubset>,
}

impl IdealFamily {
    pub fn ambient(&self) -> &Arc<GammaSemiring> {
        &self.ambient
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    /// Members in lexicographic grade order.
    pub fn members(&self) -> &[FuzzySubset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Membership test; grade vectors are unique and sorted.
    pub fn contains(&self, mu: &FuzzySubset) -> bool {
        self.members
            .binary_search_by(|probe| probe.grades().cmp(mu.grades()))
            .is_ok()
    }
}

/// Enumerates the family with default options.
pub fn enumerate_ideals(
    g: &Arc<GammaSemiring>,
    chain: &Chain,
    kind: IdealKind,
) -> Result<IdealFamily> {
    enumerate_ideals_with(g, chain, kind, &EnumerateOptions::default())
}

/// Enumerates the family of all fuzzy ideals of `kind` whose grades lie
/// in `chain`. Under the zero convention, `mu(0)` is pinned to 1 and the
/// remaining `|S| - 1` positions range over the chain; otherwise every
/// position ranges freely and only nonempty subsets qualify.
pub fn enumerate_ideals_with(
    g: &Arc<GammaSemiring>,
    chain: &Chain,
    kind: IdealKind,
    opts: &EnumerateOptions,
) -> Result<IdealFamily> {
    let n = g.s_size();
    let free = if opts.zero_convention { n - 1 } else { n };
    let candidates = (chain.len() as u128).saturating_pow(free as u32);
    if candidates > opts.budget {
        return Err(Error::BudgetExceeded { candidates });
    }

    let zero = g.s_zero().0;
    let mut grades = vec![Membership::zero(); n];
    if opts.zero_convention {
        grades[zero] = Membership::one();
    } else {
        grades.iter_mut().for_each(|m| *m = chain.values()[0]);
    }

    // odometer over the free positions, most significant first, so the
    // emitted members are already in lexicographic grade order
    let free_positions: Vec<usize> = (0..n)
        .filter(|&i| !(opts.zero_convention && i == zero))
        .collect();
    let mut counters = vec![0usize; free_positions.len()];

    let mut members = Vec::new();
    loop {
        for (slot, &pos) in counters.iter().zip(&free_positions) {
            grades[pos] = chain.values()[*slot];
        }
        let mu = FuzzySubset::new(Arc::clone(g), grades.clone())?;
        let class = mu.classify();
        let admitted = if opts.zero_convention {
            class.has_kind(kind) && class.zero_is_one
        } else {
            class.has_kind(kind) && class.nonempty
        };
        if admitted {
            members.push(mu);
        }

        // advance the odometer (least significant last)
        let mut i = counters.len();
        loop {
            if i == 0 {
                return Ok(IdealFamily {
                    ambient: Arc::clone(g),
                    chain: chain.clone(),
                    kind,
                    members,
                });
            }
            i -= 1;
            counters[i] += 1;
            if counters[i] < chain.len() {
                break;
            }
            counters[i] = 0;
        }
    }
}

/// All crisp ideals of the requested kind; the empty set is excluded,
/// `{0}` always qualifies.
pub fn enumerate_crisp_ideals(g: &GammaSemiring, kind: IdealKind) -> Vec<CrispSubset> {
    let n = g.s_size();
    let mut out = Vec::new();
    for bits in 1..(1u128 << n) {
        let s = CrispSubset::from_bits(n, bits as u64);
        let ok = match kind {
            IdealKind::Left => g.is_crisp_left_ideal(&s),
            IdealKind::Right => g.is_crisp_right_ideal(&s),
            IdealKind::TwoSided => g.is_crisp_ideal(&s),
        };
        if ok {
            out.push(s);
        }
    }
    out
}
