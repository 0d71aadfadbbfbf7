//! Built-in sample structures, mirroring the shipped fixture files.
//!
//! All of them are valid gamma-semirings with zero except where a test
//! deliberately mutates a table. `maxmin2`, `trunc3`, `null2` and
//! `trivial1` correspond one-to-one to `fixtures/*.json`; `klein4` and
//! `leftproj3` exist for tests that need a structure where composition
//! strictly exceeds the single product, or a noncommutative product.

use std::sync::Arc;

use crate::algebra::{ElemG, ElemS, GammaSemiring, ShapeError, Side, UnityDecl};

/// Raw table bundle, convenient for mutation-style tests.
#[derive(Debug, Clone)]
pub struct Tables {
    pub name: String,
    pub s_add: Vec<Vec<usize>>,
    pub gamma_add: Vec<Vec<usize>>,
    pub product: Vec<Vec<Vec<usize>>>,
    pub s_zero: usize,
    pub gamma_zero: usize,
    pub unities: Vec<UnityDecl>,
}

impl Tables {
    pub fn build(self) -> Result<GammaSemiring, ShapeError> {
        GammaSemiring::new(
            self.name,
            self.s_add,
            self.gamma_add,
            self.product,
            self.s_zero,
            self.gamma_zero,
            self.unities,
        )
    }
}

fn both_unities(e: usize, d: usize) -> Vec<UnityDecl> {
    vec![
        UnityDecl {
            side: Side::Left,
            pairs: vec![(ElemS(e), ElemG(d))],
        },
        UnityDecl {
            side: Side::Right,
            pairs: vec![(ElemS(e), ElemG(d))],
        },
    ]
}

/// The Boolean semiring in gamma form: S = Γ = {0,1}, addition is max,
/// and `a γ b = min(a, γ, b)`. Regular, commutative, strong unity (1,1).
pub fn maxmin2_tables() -> Tables {
    let n = 2;
    let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect();
    let product = (0..n)
        .map(|a| {
            (0..n)
                .map(|g| (0..n).map(|b| a.min(g).min(b)).collect())
                .collect()
        })
        .collect();
    Tables {
        name: "maxmin2".into(),
        s_add: add.clone(),
        gamma_add: add,
        product,
        s_zero: 0,
        gamma_zero: 0,
        unities: both_unities(1, 1),
    }
}

pub fn maxmin2() -> Arc<GammaSemiring> {
    Arc::new(maxmin2_tables().build().unwrap())
}

/// maxmin2 with the product table edited in place. Shape must stay legal.
pub fn maxmin2_with(edit: impl FnOnce(&mut Vec<Vec<Vec<usize>>>)) -> Arc<GammaSemiring> {
    let mut t = maxmin2_tables();
    edit(&mut t.product);
    Arc::new(t.build().unwrap())
}

/// Natural numbers truncated at 2: S = Γ = {0,1,2}, `a+b = min(a+b, 2)`,
/// `a γ b = min(a·γ·b, 2)`. Regular, commutative, strong unity (1,1).
pub fn trunc3_tables() -> Tables {
    let n = 3;
    let cap = n - 1;
    let add: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a + b).min(cap)).collect())
        .collect();
    let product = (0..n)
        .map(|a| {
            (0..n)
                .map(|g| (0..n).map(|b| (a * g * b).min(cap)).collect())
                .collect()
        })
        .collect();
    Tables {
        name: "trunc3".into(),
        s_add: add.clone(),
        gamma_add: add,
        product,
        s_zero: 0,
        gamma_zero: 0,
        unities: both_unities(1, 1),
    }
}

pub fn trunc3() -> Arc<GammaSemiring> {
    Arc::new(trunc3_tables().build().unwrap())
}

/// trunc3 with the S-addition table edited in place.
pub fn trunc3_with_s_add(edit: impl FnOnce(&mut Vec<Vec<usize>>)) -> Arc<GammaSemiring> {
    let mut t = trunc3_tables();
    edit(&mut t.s_add);
    Arc::new(t.build().unwrap())
}

/// Two-element join semilattice with null multiplication: S = {0,a},
/// `a+a = a`, Γ = {0}, every product is 0. Not regular, no unity.
pub fn null2_tables() -> Tables {
    Tables {
        name: "null2".into(),
        s_add: vec![vec![0, 1], vec![1, 1]],
        gamma_add: vec![vec![0]],
        product: vec![vec![vec![0, 0]], vec![vec![0, 0]]],
        s_zero: 0,
        gamma_zero: 0,
        unities: vec![],
    }
}

pub fn null2() -> Arc<GammaSemiring> {
    Arc::new(null2_tables().build().unwrap())
}

/// One-element structure; every law holds degenerately.
pub fn trivial1_tables() -> Tables {
    Tables {
        name: "trivial1".into(),
        s_add: vec![vec![0]],
        gamma_add: vec![vec![0]],
        product: vec![vec![vec![0]]],
        s_zero: 0,
        gamma_zero: 0,
        unities: both_unities(0, 0),
    }
}

pub fn trivial1() -> Arc<GammaSemiring> {
    Arc::new(trivial1_tables().build().unwrap())
}

/// Z2 x Z2 with componentwise xor addition and bitwise-and products:
/// element i encodes the pair (i & 1, i >> 1), S = Γ, `a γ b = a & γ & b`.
/// The interesting structure here: (1,1) is not a single product of
/// elements from {(1,0), (0,1)}, but it is their sum, so composition
/// strictly exceeds the gamma-product on subsets supported off (1,1).
pub fn klein4() -> Arc<GammaSemiring> {
    let n = 4;
    let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a ^ b).collect()).collect();
    let product = (0..n)
        .map(|a| {
            (0..n)
                .map(|g| (0..n).map(|b| a & g & b).collect())
                .collect()
        })
        .collect();
    Arc::new(
        Tables {
            name: "klein4".into(),
            s_add: add.clone(),
            gamma_add: add,
            product,
            s_zero: 0,
            gamma_zero: 0,
            unities: both_unities(3, 3),
        }
        .build()
        .unwrap(),
    )
}

/// Noncommutative example: S = {0,1,2} under max, Γ = {0,δ} with δ
/// idempotent, and `a δ b = a` whenever `b > 0` (else 0). Here
/// `1 δ 2 = 1` but `2 δ 1 = 2`.
pub fn leftproj3() -> Arc<GammaSemiring> {
    let n = 3;
    let s_add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect();
    let gamma_add = vec![vec![0, 1], vec![1, 1]];
    let product = (0..n)
        .map(|a| {
            (0..2)
                .map(|g| {
                    (0..n)
                        .map(|b| if g == 1 && b > 0 { a } else { 0 })
                        .collect()
                })
                .collect()
        })
        .collect();
    Arc::new(
        Tables {
            name: "leftproj3".into(),
            s_add,
            gamma_add,
            product,
            s_zero: 0,
            gamma_zero: 0,
            unities: vec![],
        }
        .build()
        .unwrap(),
    )
}

/// The four shipped fixture structures.
pub fn all() -> Vec<Arc<GammaSemiring>> {
    vec![maxmin2(), trunc3(), null2(), trivial1()]
}
