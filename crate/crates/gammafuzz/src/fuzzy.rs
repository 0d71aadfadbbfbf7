//! Exact-valued fuzzy subsets over a finite gamma-semiring.
//!
//! Grades are exact rationals in [0,1], so the lattice identities the
//! law checker relies on hold as equalities, never within a tolerance.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{CrispSubset, ElemS, GammaSemiring};
use crate::error::{Error, Result};

/// Problems turning text or integers into a grade.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ValueError {
    #[error("cannot parse {text:?} as a rational grade (expected \"p/q\" or an integer)")]
    Parse { text: String },
    #[error("denominator is zero in {text:?}")]
    ZeroDenominator { text: String },
    #[error("grade {text} lies outside [0,1]")]
    OutOfRange { text: String },
    #[error("decimal notation {text:?} is rejected; write an exact rational like \"1/2\"")]
    DecimalRejected { text: String },
}

/// An exact rational in [0,1], kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Membership(Ratio<u64>);

impl Membership {
    pub const fn zero() -> Self {
        Membership(Ratio::new_raw(0, 1))
    }

    pub const fn one() -> Self {
        Membership(Ratio::new_raw(1, 1))
    }

    pub fn new(num: u64, den: u64) -> std::result::Result<Self, ValueError> {
        if den == 0 {
            return Err(ValueError::ZeroDenominator {
                text: format!("{num}/{den}"),
            });
        }
        if num > den {
            return Err(ValueError::OutOfRange {
                text: format!("{num}/{den}"),
            });
        }
        Ok(Membership(Ratio::new(num, den)))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom() == &1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Membership {
    type Err = ValueError;

    fn from_str(s: &str) -> std::result::Result<Self, ValueError> {
        let t = s.trim();
        if t.contains('.') {
            return Err(ValueError::DecimalRejected {
                text: t.to_string(),
            });
        }
        let parse_int = |x: &str| -> std::result::Result<u64, ValueError> {
            x.trim().parse().map_err(|_| ValueError::Parse {
                text: t.to_string(),
            })
        };
        match t.split_once('/') {
            Some((p, q)) => Membership::new(parse_int(p)?, parse_int(q)?),
            None => {
                let n = parse_int(t)?;
                if n > 1 {
                    return Err(ValueError::OutOfRange {
                        text: t.to_string(),
                    });
                }
                Ok(Membership(Ratio::from_integer(n)))
            }
        }
    }
}

impl Serialize for Membership {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

/// Finite value set for enumeration: sorted, deduplicated, and always
/// containing 0 and 1 (they are inserted if missing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    values: Vec<Membership>,
}

impl Chain {
    pub fn new(mut values: Vec<Membership>) -> Self {
        values.push(Membership::zero());
        values.push(Membership::one());
        values.sort();
        values.dedup();
        Chain { values }
    }

    /// The two-point chain {0, 1}.
    pub fn bool_chain() -> Self {
        Chain::new(vec![])
    }

    pub fn values(&self) -> &[Membership] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, m: Membership) -> bool {
        self.values.binary_search(&m).is_ok()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for Chain {
    type Err = ValueError;

    fn from_str(s: &str) -> std::result::Result<Self, ValueError> {
        let vals = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(Membership::from_str)
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Chain::new(vals))
    }
}

/// Which ideal family a predicate or enumeration refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    Left,
    Right,
    TwoSided,
}

impl IdealKind {
    pub const ALL: [IdealKind; 3] = [IdealKind::Left, IdealKind::Right, IdealKind::TwoSided];
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealKind::Left => write!(f, "left"),
            IdealKind::Right => write!(f, "right"),
            IdealKind::TwoSided => write!(f, "two-sided"),
        }
    }
}

impl FromStr for IdealKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "left" => Ok(IdealKind::Left),
            "right" => Ok(IdealKind::Right),
            "two-sided" | "twosided" | "two_sided" => Ok(IdealKind::TwoSided),
            other => Err(format!("unknown ideal kind {other:?}")),
        }
    }
}

/// Exhaustively computed classification flags for a fuzzy subset.
///
/// `left`/`right` are the pure membership inequalities; `nonempty` and
/// `zero_is_one` are kept separate so the Def-2.3 reading (ideal must be
/// nonempty) and the standing mu(0)=1 convention can be layered on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealClass {
    pub nonempty: bool,
    pub zero_is_one: bool,
    pub left: bool,
    pub right: bool,
    pub two_sided: bool,
    pub left_k: bool,
    pub right_k: bool,
}

impl IdealClass {
    pub fn has_kind(&self, kind: IdealKind) -> bool {
        match kind {
            IdealKind::Left => self.left,
            IdealKind::Right => self.right,
            IdealKind::TwoSided => self.two_sided,
        }
    }

    pub fn has_k_flag(&self, kind: IdealKind) -> bool {
        match kind {
            IdealKind::Left => self.left_k,
            IdealKind::Right => self.right_k,
            IdealKind::TwoSided => self.left_k && self.right_k,
        }
    }
}

/// A total map S -> [0,1] over a fixed ambient structure.
#[derive(Debug, Clone)]
pub struct FuzzySubset {
    ambient: Arc<GammaSemiring>,
    grades: Vec<Membership>,
}

impl PartialEq for FuzzySubset {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other) && self.grades == other.grades
    }
}

impl Eq for FuzzySubset {}

impl FuzzySubset {
    pub fn new(ambient: Arc<GammaSemiring>, grades: Vec<Membership>) -> Result<Self> {
        if grades.len() != ambient.s_size() {
            return Err(Error::AmbientMismatch);
        }
        Ok(FuzzySubset { ambient, grades })
    }

    /// Grade 1 at zero and 0 elsewhere; the additive identity theta.
    pub fn theta(g: &Arc<GammaSemiring>) -> Self {
        let mut grades = vec![Membership::zero(); g.s_size()];
        grades[g.s_zero().0] = Membership::one();
        FuzzySubset {
            ambient: Arc::clone(g),
            grades,
        }
    }

    /// The constant-1 subset.
    pub fn one(g: &Arc<GammaSemiring>) -> Self {
        FuzzySubset {
            ambient: Arc::clone(g),
            grades: vec![Membership::one(); g.s_size()],
        }
    }

    /// Characteristic function of a crisp subset.
    pub fn characteristic_of(g: &Arc<GammaSemiring>, i: &CrispSubset) -> Self {
        let grades = g
            .s_elems()
            .map(|x| {
                if i.contains(x) {
                    Membership::one()
                } else {
                    Membership::zero()
                }
            })
            .collect();
        FuzzySubset {
            ambient: Arc::clone(g),
            grades,
        }
    }

    pub fn ambient(&self) -> &Arc<GammaSemiring> {
        &self.ambient
    }

    pub fn grades(&self) -> &[Membership] {
        &self.grades
    }

    pub fn grade(&self, x: ElemS) -> Membership {
        self.grades[x.0]
    }

    pub fn same_ambient(&self, other: &FuzzySubset) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient
    }

    /// Exhaustive classification against Def-2.3 and the k-condition.
    pub fn classify(&self) -> IdealClass {
        let g = &self.ambient;
        let nonempty = self.grades.iter().any(|m| !m.is_zero());
        let zero_is_one = self.grade(g.s_zero()).is_one();

        let mut additive = true;
        let mut kcond = true;
        for x in g.s_elems() {
            for y in g.s_elems() {
                let sum = self.grade(g.add(x, y));
                if sum < self.grade(x).min(self.grade(y)) {
                    additive = false;
                }
                // k-condition: mu(y) >= min(mu(x+y), mu(x))
                if self.grade(y) < sum.min(self.grade(x)) {
                    kcond = false;
                }
            }
        }

        let mut left = additive;
        let mut right = additive;
        'prod: for x in g.s_elems() {
            for y in g.s_elems() {
                for gamma in g.g_elems() {
                    let p = self.grade(g.mul(x, gamma, y));
                    if p < self.grade(y) {
                        left = false;
                    }
                    if p < self.grade(x) {
                        right = false;
                    }
                    if !left && !right {
                        break 'prod;
                    }
                }
            }
        }

        IdealClass {
            nonempty,
            zero_is_one,
            left,
            right,
            two_sided: left && right,
            left_k: left && kcond,
            right_k: right && kcond,
        }
    }

    /// The level cut `{ x : mu(x) >= t }`.
    pub fn level_cut(&self, t: Membership) -> CrispSubset {
        let mut out = self.ambient.empty_subset();
        for x in self.ambient.s_elems() {
            if self.grade(x) >= t {
                out.insert(x);
            }
        }
        out
    }

    /// Pointwise order.
    pub fn leq(&self, other: &FuzzySubset) -> Result<bool> {
        if !self.same_ambient(other) {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b))
    }

    /// Pointwise minimum (intersection).
    pub fn meet(&self, other: &FuzzySubset) -> Result<FuzzySubset> {
        if !self.same_ambient(other) {
            return Err(Error::AmbientMismatch);
        }
        let grades = self
            .grades
            .iter()
            .zip(&other.grades)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Ok(FuzzySubset {
            ambient: Arc::clone(&self.ambient),
            grades,
        })
    }
}

impl fmt::Display for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, m) in self.grades.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}

/// Pointwise infimum of a nonempty family; errors on empty input.
pub fn meet_family(family: &[FuzzySubset]) -> Result<FuzzySubset> {
    let (first, rest) = family.split_first().ok_or(Error::EmptyFamily)?;
    let mut acc = first.clone();
    for m in rest {
        acc = acc.meet(m)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn m(s: &str) -> Membership {
        s.parse().unwrap()
    }

    fn subset(g: &Arc<GammaSemiring>, grades: &[&str]) -> FuzzySubset {
        FuzzySubset::new(Arc::clone(g), grades.iter().map(|s| m(s)).collect()).unwrap()
    }

    #[test]
    fn membership_parsing_is_canonical() {
        assert_eq!(m("2/4"), m("1/2"));
        assert_eq!(m("1/2").to_string(), "1/2");
        assert_eq!(m("3/3"), Membership::one());
        assert_eq!(m("0").to_string(), "0");
        assert!(matches!(
            "3/2".parse::<Membership>(),
            Err(ValueError::OutOfRange { .. })
        ));
        assert!(matches!(
            "1/0".parse::<Membership>(),
            Err(ValueError::ZeroDenominator { .. })
        ));
        assert!(matches!(
            "0.5".parse::<Membership>(),
            Err(ValueError::DecimalRejected { .. })
        ));
        assert!(matches!(
            "x".parse::<Membership>(),
            Err(ValueError::Parse { .. })
        ));
    }

    #[test]
    fn chain_normalizes() {
        let c: Chain = "1/2".parse().unwrap();
        assert_eq!(c.values(), &[m("0"), m("1/2"), m("1")]);
        assert_eq!(c.to_string(), "{0,1/2,1}");
        assert_eq!(Chain::bool_chain().len(), 2);
    }

    #[test]
    fn distinguished_subsets() {
        let g = samples::maxmin2();
        assert_eq!(FuzzySubset::theta(&g).grades(), &[m("1"), m("0")]);
        assert_eq!(FuzzySubset::one(&g).grades(), &[m("1"), m("1")]);

        let t = samples::trunc3();
        assert_eq!(FuzzySubset::theta(&t).grades(), &[m("1"), m("0"), m("0")]);

        let one_elem = samples::trivial1();
        assert_eq!(FuzzySubset::theta(&one_elem).grades(), &[m("1")]);
        assert_eq!(FuzzySubset::theta(&one_elem), FuzzySubset::one(&one_elem));
    }

    #[test]
    fn characteristic_bridges_to_theta_and_one() {
        let g = samples::maxmin2();
        let zero_only = CrispSubset::from_members(2, [0]);
        assert_eq!(
            FuzzySubset::characteristic_of(&g, &zero_only),
            FuzzySubset::theta(&g)
        );
        assert_eq!(
            FuzzySubset::characteristic_of(&g, &g.full_subset()),
            FuzzySubset::one(&g)
        );
        let one_only = CrispSubset::from_members(2, [1]);
        assert_eq!(
            FuzzySubset::characteristic_of(&g, &one_only).grades(),
            &[m("0"), m("1")]
        );
    }

    #[test]
    fn classify_examples() {
        let g = samples::maxmin2();
        let theta = FuzzySubset::theta(&g).classify();
        assert!(theta.nonempty && theta.zero_is_one);
        assert!(theta.left && theta.right && theta.two_sided);
        assert!(theta.left_k && theta.right_k);

        let one = FuzzySubset::one(&g).classify();
        assert!(one.two_sided && one.left_k && one.right_k && one.zero_is_one);

        // mu = (1/2, 1): fails the left form at x=0, y=1 since mu(0γ1)=1/2 < mu(1)=1
        let c = subset(&g, &["1/2", "1"]).classify();
        assert!(c.nonempty);
        assert!(!c.zero_is_one);
        assert!(!c.left);
        assert!(!c.right);
        assert!(!c.two_sided);
    }

    #[test]
    fn classify_left_right_asymmetry() {
        // leftproj3: a δ b = a for b > 0, so the left inequality forces
        // near-constant grades while the right inequality is vacuous.
        let g = samples::leftproj3();
        let mu = subset(&g, &["1", "1/2", "1"]);
        let c = mu.classify();
        assert!(!c.left);
        assert!(c.right);
    }

    #[test]
    fn level_cut_examples() {
        let g = samples::maxmin2();
        let mu = subset(&g, &["1", "1/3"]);
        assert_eq!(mu.level_cut(m("1/2")), CrispSubset::from_members(2, [0]));
        assert_eq!(mu.level_cut(m("0")), g.full_subset());
        assert_eq!(
            FuzzySubset::theta(&g).level_cut(m("1")),
            CrispSubset::from_members(2, [0])
        );
    }

    #[test]
    fn meet_and_order() {
        let g = samples::maxmin2();
        let theta = FuzzySubset::theta(&g);
        let one = FuzzySubset::one(&g);
        assert_eq!(theta.meet(&one).unwrap(), theta);
        assert!(theta.leq(&one).unwrap());
        assert!(!one.leq(&theta).unwrap());

        let fam = vec![one.clone(), subset(&g, &["1", "1/2"]), theta.clone()];
        assert_eq!(meet_family(&fam).unwrap(), theta);
        assert!(matches!(meet_family(&[]), Err(Error::EmptyFamily)));
    }

    #[test]
    fn ambient_mismatch_is_detected() {
        let a = samples::maxmin2();
        let b = samples::null2();
        let mu = FuzzySubset::theta(&a);
        let nu = FuzzySubset::theta(&b);
        assert!(matches!(mu.meet(&nu), Err(Error::AmbientMismatch)));
        // structurally identical ambients compare equal even as separate Arcs
        let a2 = samples::maxmin2();
        let mu2 = FuzzySubset::theta(&a2);
        assert!(mu.meet(&mu2).is_ok());
    }
}
