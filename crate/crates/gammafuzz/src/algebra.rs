//! Finite gamma-semirings as dense operation tables.
//!
//! A structure couples two commutative additive monoids `(S, +)` and
//! `(Gamma, +)` through a ternary product `S x Gamma x S -> S` that is
//! biadditive, additive in the middle argument, and associative in the
//! mixed sense `a α (b β c) = (a α b) β c`. Both monoid zeros annihilate
//! the product. Elements are dense indices so every axiom instance is a
//! handful of table lookups, which keeps "exhaustive" honest.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Largest supported carrier; `CrispSubset` packs members into a `u64`.
pub const MAX_CARRIER: usize = 64;

/// Element of the carrier S, as a dense index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElemS(pub usize);

/// Element of the operator carrier Gamma, as a dense index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElemG(pub usize);

impl fmt::Display for ElemS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ElemG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which side a unity decomposition acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// A declared unity decomposition: pairs `(e_i, δ_i)` such that
/// `Σ_i e_i δ_i x = x` for every `x` (left side; mirrored on the right).
///
/// Unities are declared in the input and verified, never searched for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnityDecl {
    pub side: Side,
    pub pairs: Vec<(ElemS, ElemG)>,
}

impl UnityDecl {
    /// A strong unity is a single pair `(e, δ)` with `e δ a = a` for all `a`.
    /// Recorded but carries no extra behavior.
    pub fn is_strong(&self) -> bool {
        self.pairs.len() == 1
    }
}

/// Table or dimension defect found while constructing a structure.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("carrier must be nonempty and at most {MAX_CARRIER} elements, got {size}")]
    BadCarrierSize { size: usize },
    #[error("{table} has wrong dimensions: expected {expected}, got {got}")]
    BadDims {
        table: &'static str,
        expected: String,
        got: String,
    },
    #[error("{table}[{index}] = {value} is out of range (< {bound})")]
    EntryOutOfRange {
        table: &'static str,
        index: String,
        value: usize,
        bound: usize,
    },
    #[error("zero element {value} out of range (< {bound})")]
    ZeroOutOfRange { value: usize, bound: usize },
    #[error("unity declaration has no pairs")]
    EmptyUnity,
    #[error("unity pair ({e}, {d}) out of range")]
    UnityOutOfRange { e: usize, d: usize },
}

/// The named axioms a structure must satisfy, used to tag violations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    SAddCommutative,
    SAddAssociative,
    SAddIdentity,
    GAddCommutative,
    GAddAssociative,
    GAddIdentity,
    /// `(a+b) γ c = a γ c + b γ c`
    DistRight,
    /// `a γ (b+c) = a γ b + a γ c`
    DistLeft,
    /// `a (α+β) b = a α b + a β b`
    DistGamma,
    /// `a α (b β c) = (a α b) β c`
    ProductAssociative,
    /// `0 γ x = 0 = x γ 0`
    ZeroAnnihilatesS,
    /// `x 0_Γ y = 0`
    ZeroAnnihilatesG,
    /// a declared unity decomposition fails to reproduce some element
    UnityFails,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::SAddCommutative => "S-addition commutativity",
            Axiom::SAddAssociative => "S-addition associativity",
            Axiom::SAddIdentity => "S-addition identity",
            Axiom::GAddCommutative => "Gamma-addition commutativity",
            Axiom::GAddAssociative => "Gamma-addition associativity",
            Axiom::GAddIdentity => "Gamma-addition identity",
            Axiom::DistRight => "right distributivity (a+b)γc",
            Axiom::DistLeft => "left distributivity aγ(b+c)",
            Axiom::DistGamma => "operator distributivity a(α+β)b",
            Axiom::ProductAssociative => "product associativity aα(bβc)",
            Axiom::ZeroAnnihilatesS => "zero annihilation 0γx = xγ0 = 0",
            Axiom::ZeroAnnihilatesG => "zero annihilation x0y = 0",
            Axiom::UnityFails => "declared unity",
        };
        f.write_str(name)
    }
}

/// One failed axiom instance: the axiom, the witnessing tuple, and both
/// sides' values. For the `GAdd*` axioms `lhs`/`rhs` are Gamma indices;
/// for everything else they are S indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub s_elems: Vec<usize>,
    pub g_elems: Vec<usize>,
    pub lhs: usize,
    pub rhs: usize,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} violated at s={:?}, g={:?}: lhs={} rhs={}",
            self.axiom, self.s_elems, self.g_elems, self.lhs, self.rhs
        )
    }
}

/// A finite gamma-semiring with zero, stored as flat lookup tables.
///
/// Immutable after construction; every operation is a pure function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSemiring {
    name: String,
    s_size: usize,
    g_size: usize,
    // flat [s][s] row-major
    s_add: Vec<usize>,
    // flat [g][g] row-major
    g_add: Vec<usize>,
    // flat [s][g][s]
    prod: Vec<usize>,
    s_zero: usize,
    g_zero: usize,
    unities: Vec<UnityDecl>,
}

impl GammaSemiring {
    /// Builds a structure from nested tables, checking shape only.
    /// Axioms are checked separately by [`GammaSemiring::validate`].
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        s_add: Vec<Vec<usize>>,
        g_add: Vec<Vec<usize>>,
        prod: Vec<Vec<Vec<usize>>>,
        s_zero: usize,
        g_zero: usize,
        unities: Vec<UnityDecl>,
    ) -> Result<Self, ShapeError> {
        let s_size = s_add.len();
        let g_size = g_add.len();
        if s_size == 0 || s_size > MAX_CARRIER {
            return Err(ShapeError::BadCarrierSize { size: s_size });
        }
        if g_size == 0 || g_size > MAX_CARRIER {
            return Err(ShapeError::BadCarrierSize { size: g_size });
        }

        let mut flat_s_add = Vec::with_capacity(s_size * s_size);
        check_square("s_add", &s_add, s_size, s_size, &mut flat_s_add)?;
        let mut flat_g_add = Vec::with_capacity(g_size * g_size);
        check_square("gamma_add", &g_add, g_size, g_size, &mut flat_g_add)?;

        if prod.len() != s_size {
            return Err(ShapeError::BadDims {
                table: "product",
                expected: format!("{s_size} blocks"),
                got: format!("{} blocks", prod.len()),
            });
        }
        let mut flat_prod = Vec::with_capacity(s_size * g_size * s_size);
        for (a, block) in prod.iter().enumerate() {
            if block.len() != g_size {
                return Err(ShapeError::BadDims {
                    table: "product",
                    expected: format!("{g_size} rows in block {a}"),
                    got: format!("{} rows", block.len()),
                });
            }
            for (g, row) in block.iter().enumerate() {
                if row.len() != s_size {
                    return Err(ShapeError::BadDims {
                        table: "product",
                        expected: format!("{s_size} entries in row [{a}][{g}]"),
                        got: format!("{} entries", row.len()),
                    });
                }
                for (b, &v) in row.iter().enumerate() {
                    if v >= s_size {
                        return Err(ShapeError::EntryOutOfRange {
                            table: "product",
                            index: format!("{a}][{g}][{b}"),
                            value: v,
                            bound: s_size,
                        });
                    }
                    flat_prod.push(v);
                }
            }
        }

        if s_zero >= s_size {
            return Err(ShapeError::ZeroOutOfRange {
                value: s_zero,
                bound: s_size,
            });
        }
        if g_zero >= g_size {
            return Err(ShapeError::ZeroOutOfRange {
                value: g_zero,
                bound: g_size,
            });
        }
        for u in &unities {
            if u.pairs.is_empty() {
                return Err(ShapeError::EmptyUnity);
            }
            for &(e, d) in &u.pairs {
                if e.0 >= s_size || d.0 >= g_size {
                    return Err(ShapeError::UnityOutOfRange { e: e.0, d: d.0 });
                }
            }
        }

        Ok(GammaSemiring {
            name: name.into(),
            s_size,
            g_size,
            s_add: flat_s_add,
            g_add: flat_g_add,
            prod: flat_prod,
            s_zero,
            g_zero,
            unities,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn s_size(&self) -> usize {
        self.s_size
    }

    pub fn g_size(&self) -> usize {
        self.g_size
    }

    pub fn s_zero(&self) -> ElemS {
        ElemS(self.s_zero)
    }

    pub fn g_zero(&self) -> ElemG {
        ElemG(self.g_zero)
    }

    pub fn unities(&self) -> &[UnityDecl] {
        &self.unities
    }

    /// `a + b` in S.
    #[inline]
    pub fn add(&self, a: ElemS, b: ElemS) -> ElemS {
        ElemS(self.s_add[a.0 * self.s_size + b.0])
    }

    /// `α + β` in Gamma.
    #[inline]
    pub fn gadd(&self, a: ElemG, b: ElemG) -> ElemG {
        ElemG(self.g_add[a.0 * self.g_size + b.0])
    }

    /// The ternary product `a γ b`.
    #[inline]
    pub fn mul(&self, a: ElemS, g: ElemG, b: ElemS) -> ElemS {
        ElemS(self.prod[(a.0 * self.g_size + g.0) * self.s_size + b.0])
    }

    pub fn s_elems(&self) -> impl Iterator<Item = ElemS> + '_ {
        (0..self.s_size).map(ElemS)
    }

    pub fn g_elems(&self) -> impl Iterator<Item = ElemG> + '_ {
        (0..self.g_size).map(ElemG)
    }

    /// Checks every axiom instance exhaustively and returns all failures.
    ///
    /// The empty list means the tables form a gamma-semiring with zero and
    /// every declared unity is genuine. Product associativity dominates the
    /// cost at O(|S|^3 |Gamma|^2); everything here is desk scale.
    pub fn validate(&self) -> Vec<AxiomViolation> {
        let mut out = Vec::new();
        let n = self.s_size;
        let m = self.g_size;
        let viol =
            |axiom, s_elems: &[usize], g_elems: &[usize], lhs: usize, rhs: usize| AxiomViolation {
                axiom,
                s_elems: s_elems.to_vec(),
                g_elems: g_elems.to_vec(),
                lhs,
                rhs,
            };

        // (S,+) commutative monoid
        for a in 0..n {
            let ea = ElemS(a);
            let z = self.add(self.s_zero(), ea);
            if z != ea {
                out.push(viol(Axiom::SAddIdentity, &[a], &[], z.0, a));
            }
            let z = self.add(ea, self.s_zero());
            if z != ea {
                out.push(viol(Axiom::SAddIdentity, &[a], &[], z.0, a));
            }
            for b in 0..n {
                let eb = ElemS(b);
                let ab = self.add(ea, eb);
                let ba = self.add(eb, ea);
                if ab != ba {
                    out.push(viol(Axiom::SAddCommutative, &[a, b], &[], ab.0, ba.0));
                }
                for c in 0..n {
                    let ec = ElemS(c);
                    let l = self.add(ab, ec);
                    let r = self.add(ea, self.add(eb, ec));
                    if l != r {
                        out.push(viol(Axiom::SAddAssociative, &[a, b, c], &[], l.0, r.0));
                    }
                }
            }
        }

        // (Gamma,+) commutative monoid
        for a in 0..m {
            let ga = ElemG(a);
            let z = self.gadd(self.g_zero(), ga);
            if z != ga {
                out.push(viol(Axiom::GAddIdentity, &[], &[a], z.0, a));
            }
            let z = self.gadd(ga, self.g_zero());
            if z != ga {
                out.push(viol(Axiom::GAddIdentity, &[], &[a], z.0, a));
            }
            for b in 0..m {
                let gb = ElemG(b);
                let ab = self.gadd(ga, gb);
                let ba = self.gadd(gb, ga);
                if ab != ba {
                    out.push(viol(Axiom::GAddCommutative, &[], &[a, b], ab.0, ba.0));
                }
                for c in 0..m {
                    let gc = ElemG(c);
                    let l = self.gadd(ab, gc);
                    let r = self.gadd(ga, self.gadd(gb, gc));
                    if l != r {
                        out.push(viol(Axiom::GAddAssociative, &[], &[a, b, c], l.0, r.0));
                    }
                }
            }
        }

        // distributivity (i) and (ii)
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for g in 0..m {
                        let (ea, eb, ec, gg) = (ElemS(a), ElemS(b), ElemS(c), ElemG(g));
                        let l = self.mul(self.add(ea, eb), gg, ec);
                        let r = self.add(self.mul(ea, gg, ec), self.mul(eb, gg, ec));
                        if l != r {
                            out.push(viol(Axiom::DistRight, &[a, b, c], &[g], l.0, r.0));
                        }
                        let l = self.mul(ea, gg, self.add(eb, ec));
                        let r = self.add(self.mul(ea, gg, eb), self.mul(ea, gg, ec));
                        if l != r {
                            out.push(viol(Axiom::DistLeft, &[a, b, c], &[g], l.0, r.0));
                        }
                    }
                }
            }
        }

        // distributivity (iii) over Gamma
        for a in 0..n {
            for b in 0..n {
                for g1 in 0..m {
                    for g2 in 0..m {
                        let (ea, eb, ga, gb) = (ElemS(a), ElemS(b), ElemG(g1), ElemG(g2));
                        let l = self.mul(ea, self.gadd(ga, gb), eb);
                        let r = self.add(self.mul(ea, ga, eb), self.mul(ea, gb, eb));
                        if l != r {
                            out.push(viol(Axiom::DistGamma, &[a, b], &[g1, g2], l.0, r.0));
                        }
                    }
                }
            }
        }

        // associativity (iv)
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for g1 in 0..m {
                        for g2 in 0..m {
                            let (ea, eb, ec) = (ElemS(a), ElemS(b), ElemS(c));
                            let (ga, gb) = (ElemG(g1), ElemG(g2));
                            let l = self.mul(ea, ga, self.mul(eb, gb, ec));
                            let r = self.mul(self.mul(ea, ga, eb), gb, ec);
                            if l != r {
                                out.push(viol(
                                    Axiom::ProductAssociative,
                                    &[a, b, c],
                                    &[g1, g2],
                                    l.0,
                                    r.0,
                                ));
                            }
                        }
                    }
                }
            }
        }

        // zero laws
        for x in 0..n {
            let ex = ElemS(x);
            for g in 0..m {
                let gg = ElemG(g);
                let l = self.mul(self.s_zero(), gg, ex);
                if l != self.s_zero() {
                    out.push(viol(Axiom::ZeroAnnihilatesS, &[x], &[g], l.0, self.s_zero));
                }
                let l = self.mul(ex, gg, self.s_zero());
                if l != self.s_zero() {
                    out.push(viol(Axiom::ZeroAnnihilatesS, &[x], &[g], l.0, self.s_zero));
                }
            }
            for y in 0..n {
                let l = self.mul(ex, self.g_zero(), ElemS(y));
                if l != self.s_zero() {
                    out.push(viol(
                        Axiom::ZeroAnnihilatesG,
                        &[x, y],
                        &[],
                        l.0,
                        self.s_zero,
                    ));
                }
            }
        }

        // declared unities must be genuine
        for u in &self.unities {
            for x in self.s_elems() {
                let folded = self.fold_unity(u, x);
                if folded != x {
                    out.push(AxiomViolation {
                        axiom: Axiom::UnityFails,
                        s_elems: vec![x.0],
                        g_elems: vec![],
                        lhs: folded.0,
                        rhs: x.0,
                    });
                }
            }
        }

        out
    }

    fn fold_unity(&self, u: &UnityDecl, x: ElemS) -> ElemS {
        let mut acc = self.s_zero();
        for &(e, d) in &u.pairs {
            let term = match u.side {
                Side::Left => self.mul(e, d, x),
                Side::Right => self.mul(x, d, e),
            };
            acc = self.add(acc, term);
        }
        acc
    }

    /// True iff `Σ_i e_i δ_i x = x` for every `x` (left), mirrored for right.
    pub fn verify_unity(&self, u: &UnityDecl) -> bool {
        self.s_elems().all(|x| self.fold_unity(u, x) == x)
    }

    /// First declared unity of the given side that actually verifies.
    pub fn verified_unity(&self, side: Side) -> Option<&UnityDecl> {
        self.unities
            .iter()
            .find(|u| u.side == side && self.verify_unity(u))
    }

    /// True iff `a γ b = b γ a` for all `a`, `b`, `γ`.
    pub fn is_commutative(&self) -> bool {
        self.s_elems().all(|a| {
            self.s_elems().all(|b| {
                self.g_elems()
                    .all(|g| self.mul(a, g, b) == self.mul(b, g, a))
            })
        })
    }

    /// Empty subset of this structure's carrier.
    pub fn empty_subset(&self) -> CrispSubset {
        CrispSubset {
            bits: 0,
            universe: self.s_size,
        }
    }

    /// Subset containing all of S.
    pub fn full_subset(&self) -> CrispSubset {
        CrispSubset::full(self.s_size)
    }

    /// Crisp left ideal: closed under `+`, absorbs `s γ i` from the left,
    /// and contains zero when nonempty. The empty set counts as closed.
    pub fn is_crisp_left_ideal(&self, i: &CrispSubset) -> bool {
        self.crisp_ideal_kind_holds(i, true, false)
    }

    /// Mirror image of [`GammaSemiring::is_crisp_left_ideal`].
    pub fn is_crisp_right_ideal(&self, i: &CrispSubset) -> bool {
        self.crisp_ideal_kind_holds(i, false, true)
    }

    /// Two-sided crisp ideal.
    pub fn is_crisp_ideal(&self, i: &CrispSubset) -> bool {
        self.crisp_ideal_kind_holds(i, true, true)
    }

    fn crisp_ideal_kind_holds(&self, i: &CrispSubset, left: bool, right: bool) -> bool {
        if i.is_empty() {
            return true;
        }
        if !i.contains(self.s_zero()) {
            return false;
        }
        for a in i.iter() {
            for b in i.iter() {
                if !i.contains(self.add(a, b)) {
                    return false;
                }
            }
        }
        for member in i.iter() {
            for s in self.s_elems() {
                for g in self.g_elems() {
                    if left && !i.contains(self.mul(s, g, member)) {
                        return false;
                    }
                    if right && !i.contains(self.mul(member, g, s)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The set of single products `{ r γ l : r ∈ R, γ ∈ Γ, l ∈ L }`,
    /// before any additive closure.
    pub fn crisp_product(&self, r: &CrispSubset, l: &CrispSubset) -> CrispSubset {
        let mut out = self.empty_subset();
        for a in r.iter() {
            for b in l.iter() {
                for g in self.g_elems() {
                    out.insert(self.mul(a, g, b));
                }
            }
        }
        out
    }

    /// Smallest superset of `a` closed under S-addition. Empty stays empty.
    pub fn additive_closure(&self, a: &CrispSubset) -> CrispSubset {
        self.additive_closure_with_steps(a).0
    }

    /// Closure plus the number of growth iterations until the fixpoint.
    /// The step count is at most `|S|` because the set grows strictly
    /// inside a finite carrier.
    pub fn additive_closure_with_steps(&self, a: &CrispSubset) -> (CrispSubset, usize) {
        let mut b = a.clone();
        let mut steps = 0;
        loop {
            let mut next = b.clone();
            for x in b.iter() {
                for y in a.iter() {
                    next.insert(self.add(x, y));
                }
            }
            if next == b {
                return (b, steps);
            }
            b = next;
            steps += 1;
        }
    }

    /// Exhaustive multiplicative regularity check: every `c` must admit
    /// `(x, γ1, γ2)` with `c = (c γ1 x) γ2 c`. Scan order is fixed, so the
    /// returned witnesses are canonical.
    pub fn is_multiplicatively_regular(&self) -> Regularity {
        let mut witnesses = Vec::with_capacity(self.s_size);
        'outer: for c in self.s_elems() {
            for x in self.s_elems() {
                for g1 in self.g_elems() {
                    for g2 in self.g_elems() {
                        if self.mul(self.mul(c, g1, x), g2, c) == c {
                            witnesses.push((x, g1, g2));
                            continue 'outer;
                        }
                    }
                }
            }
            return Regularity::NotRegular { failing: c };
        }
        Regularity::Regular { witnesses }
    }
}

/// Outcome of the regularity search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularity {
    /// One witness `(x, γ1, γ2)` per element, indexed by the element.
    Regular {
        witnesses: Vec<(ElemS, ElemG, ElemG)>,
    },
    /// The first element with no witness.
    NotRegular { failing: ElemS },
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular { .. })
    }
}

/// Subset of S packed into a 64-bit mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrispSubset {
    bits: u64,
    universe: usize,
}

impl CrispSubset {
    pub fn new(universe: usize) -> Self {
        assert!(universe <= MAX_CARRIER);
        CrispSubset { bits: 0, universe }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= MAX_CARRIER);
        let bits = if universe == MAX_CARRIER {
            u64::MAX
        } else {
            (1u64 << universe) - 1
        };
        CrispSubset { bits, universe }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut s = Self::new(universe);
        for m in members {
            assert!(m < universe);
            s.bits |= 1 << m;
        }
        s
    }

    pub fn from_bits(universe: usize, bits: u64) -> Self {
        assert!(universe <= MAX_CARRIER);
        if universe < MAX_CARRIER {
            assert!(bits < (1u64 << universe));
        }
        CrispSubset { bits, universe }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, x: ElemS) -> bool {
        self.bits & (1 << x.0) != 0
    }

    pub fn insert(&mut self, x: ElemS) {
        debug_assert!(x.0 < self.universe);
        self.bits |= 1 << x.0;
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_subset_of(&self, other: &CrispSubset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = ElemS> + '_ {
        let bits = self.bits;
        (0..self.universe)
            .filter(move |i| bits & (1 << i) != 0)
            .map(ElemS)
    }
}

impl fmt::Display for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

fn check_square(
    table: &'static str,
    rows: &[Vec<usize>],
    n: usize,
    bound: usize,
    out: &mut Vec<usize>,
) -> Result<(), ShapeError> {
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(ShapeError::BadDims {
                table,
                expected: format!("{n} entries in row {i}"),
                got: format!("{} entries", row.len()),
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= bound {
                return Err(ShapeError::EntryOutOfRange {
                    table,
                    index: format!("{i}][{j}"),
                    value: v,
                    bound,
                });
            }
            out.push(v);
        }
    }
    Ok(())
}
