//! Diagonal coproduct, sum-of-coefficients counit and basis-inverse
//! antipode, with checks of the coalgebra and antipode axioms.
//!
//! Elements are plain coefficient slices over the basis of a
//! [`StructureTable`]; the maps do not care which algebra they act on.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::AlgebraKind;
use crate::clifford::Sign;
use crate::scalar::{Rational, Scalar};
use crate::table::StructureTable;

/// Sparse element of `H ⊗ H`: `(i, j) → coefficient of u_i ⊗ u_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorElement<T> {
    dim: usize,
    terms: BTreeMap<(usize, usize), T>,
}

impl<T: Scalar> TensorElement<T> {
    pub fn zero(dim: usize) -> Self {
        TensorElement { dim, terms: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), T> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: usize, j: usize, value: T) {
        assert!(i < self.dim && j < self.dim, "tensor index out of range");
        if value.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&(i, j)) {
            Some(old) => old + value,
            None => value,
        };
        if !sum.is_zero() {
            self.terms.insert((i, j), sum);
        }
    }

    /// `(u_a⊗u_b)(u_c⊗u_d) = (u_au_c)⊗(u_bu_d)`, extended bilinearly.
    pub fn multiply(&self, other: &Self, table: &StructureTable) -> Self {
        let mut out = Self::zero(self.dim);
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &other.terms {
                let (k1, s1) = table.unit_product(a, c);
                let (k2, s2) = table.unit_product(b, d);
                out.add_term(k1, k2, (s1 * s2).apply(x.clone() * y.clone()));
            }
        }
        out
    }
}

/// `u_i^{-1} = sign · u_k` for every basis index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisInverseTable {
    inv: Vec<(usize, Sign)>,
}

impl BasisInverseTable {
    /// Real units are their own inverses; imaginary units invert to
    /// `u_i³ = -u_i`.
    pub fn for_algebra(kind: AlgebraKind) -> Self {
        let inv = (0..kind.dim())
            .map(|i| (i, if kind.is_real_unit(i) { Sign::Plus } else { Sign::Minus }))
            .collect();
        BasisInverseTable { inv }
    }

    pub fn get(&self, i: usize) -> (usize, Sign) {
        self.inv[i]
    }

    pub fn len(&self) -> usize {
        self.inv.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inv.is_empty()
    }

    /// Indices where `u_i·u_i^{-1}` or `u_i^{-1}·u_i` is not `u_0`.
    pub fn failures(&self, table: &StructureTable) -> Vec<usize> {
        (0..self.inv.len())
            .filter(|&i| {
                let (k, s) = self.inv[i];
                let (r1, s1) = table.unit_product(i, k);
                let (r2, s2) = table.unit_product(k, i);
                !(r1 == 0 && r2 == 0 && s * s1 == Sign::Plus && s * s2 == Sign::Plus)
            })
            .collect()
    }
}

/// `△(Σ a_iu_i) = Σ a_i (u_i ⊗ u_i)`.
pub fn coproduct<T: Scalar>(x: &[T]) -> TensorElement<T> {
    let mut t = TensorElement::zero(x.len());
    for (i, a) in x.iter().enumerate() {
        t.add_term(i, i, a.clone());
    }
    t
}

/// `ε(Σ a_iu_i) = Σ a_i`.
pub fn counit<T: Scalar>(x: &[T]) -> T {
    x.iter().fold(T::zero(), |acc, a| acc + a.clone())
}

/// `S(Σ a_iu_i) = Σ a_i u_i^{-1}`.
pub fn antipode<T: Scalar>(x: &[T], inverses: &BasisInverseTable) -> Vec<T> {
    let mut out = vec![T::zero(); x.len()];
    for (i, a) in x.iter().enumerate() {
        let (k, s) = inverses.get(i);
        out[k] = out[k].clone() + s.apply(a.clone());
    }
    out
}

/// Triple tensors keyed by `(i, j, k)`.
type Triple<T> = BTreeMap<(usize, usize, usize), T>;

fn accumulate<T: Scalar>(map: &mut Triple<T>, key: (usize, usize, usize), value: T) {
    let sum = map.remove(&key).map_or(value.clone(), |old| old + value);
    if !sum.is_zero() {
        map.insert(key, sum);
    }
}

/// `(id⊗△)△(x) = (△⊗id)△(x)`.
pub fn verify_coassociativity<T: Scalar>(x: &[T]) -> bool {
    let d = coproduct(x);
    let mut left = Triple::new();
    let mut right = Triple::new();
    for (&(i, j), c) in d.terms() {
        // id ⊗ △ splits the right factor, △ ⊗ id the left one.
        for (&(a, b), e) in coproduct(&unit_vec::<T>(x.len(), j)).terms() {
            accumulate(&mut left, (i, a, b), c.clone() * e.clone());
        }
        for (&(a, b), e) in coproduct(&unit_vec::<T>(x.len(), i)).terms() {
            accumulate(&mut right, (a, b, j), c.clone() * e.clone());
        }
    }
    left == right
}

/// `(ε⊗id)△(x) = x = (id⊗ε)△(x)` under `1⊗H ≅ H ≅ H⊗1`.
pub fn verify_counit<T: Scalar>(x: &[T]) -> bool {
    let d = coproduct(x);
    let mut left = vec![T::zero(); x.len()];
    let mut right = vec![T::zero(); x.len()];
    for (&(i, j), c) in d.terms() {
        let ei = counit(&unit_vec::<T>(x.len(), i));
        let ej = counit(&unit_vec::<T>(x.len(), j));
        left[j] = left[j].clone() + ei * c.clone();
        right[i] = right[i].clone() + c.clone() * ej;
    }
    left == x && right == x
}

/// `μ(id⊗S)△(x) = μ(S⊗id)△(x) = ε(x)·u_0`.
pub fn verify_antipode<T: Scalar>(x: &[T], table: &StructureTable, inverses: &BasisInverseTable) -> bool {
    let n = x.len();
    let mut left = vec![T::zero(); n];
    let mut right = vec![T::zero(); n];
    for (&(i, j), c) in coproduct(x).terms() {
        let ui = unit_vec::<T>(n, i);
        let uj = unit_vec::<T>(n, j);
        let l = table.multiply(&ui, &antipode(&uj, inverses));
        let r = table.multiply(&antipode(&ui, inverses), &uj);
        for k in 0..n {
            left[k] = left[k].clone() + c.clone() * l[k].clone();
            right[k] = right[k].clone() + c.clone() * r[k].clone();
        }
    }
    let mut expected = vec![T::zero(); n];
    expected[0] = counit(x);
    left == expected && right == expected
}

fn unit_vec<T: Scalar>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatibilityEntry {
    pub i: usize,
    pub j: usize,
    pub structure_sign: i8,
    pub compatible: bool,
}

/// Compare `△(u_iu_j)` with `△(u_i)△(u_j)` for every basis pair.
pub fn compatibility_report(table: &StructureTable) -> Vec<CompatibilityEntry> {
    let n = table.dim();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (ui, uj) = (unit_vec::<Rational>(n, i), unit_vec::<Rational>(n, j));
            let lhs = coproduct(&table.multiply(&ui, &uj));
            let rhs = coproduct(&ui).multiply(&coproduct(&uj), table);
            out.push(CompatibilityEntry {
                i,
                j,
                structure_sign: table.constant(i, j).to_i8(),
                compatible: lhs == rhs,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, lift};
    use crate::table::Orientation;
    use proptest::prelude::*;

    fn units(kind: AlgebraKind) -> Vec<Vec<Rational>> {
        (0..kind.dim()).map(|i| unit_vec(kind.dim(), i)).collect()
    }

    #[test]
    fn coproduct_examples() {
        let t = coproduct(&lift::<Rational, 8>([1, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(t.terms().iter().collect::<Vec<_>>(), vec![(&(0, 0), &int(1))]);
        let t = coproduct(&lift::<Rational, 8>([0, 2, 0, 0, 0, 3, 0, 0]));
        assert_eq!(t.terms().iter().collect::<Vec<_>>(), vec![(&(1, 1), &int(2)), (&(5, 5), &int(3))]);
        assert!(coproduct(&vec![int(0); 8]).is_zero());
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&unit_vec::<Rational>(8, 3)), int(1));
        assert_eq!(counit(&lift::<Rational, 8>([2, 0, 0, 0, 0, 0, 0, 3])), int(5));
        assert_eq!(counit(&vec![int(0); 8]), int(0));
    }

    #[test]
    fn antipode_examples() {
        let oct = BasisInverseTable::for_algebra(AlgebraKind::OctonionLike);
        assert_eq!(antipode(&unit_vec::<Rational>(8, 0), &oct), unit_vec(8, 0));
        let mut minus_u1 = vec![int(0); 8];
        minus_u1[1] = int(-1);
        assert_eq!(antipode(&unit_vec::<Rational>(8, 1), &oct), minus_u1);
        let sed = BasisInverseTable::for_algebra(AlgebraKind::SedenionLike);
        assert_eq!(antipode(&unit_vec::<Rational>(16, 7), &sed), unit_vec(16, 7));
    }

    #[test]
    fn imaginary_inverse_is_the_cube() {
        for kind in AlgebraKind::BOTH {
            let table = kind.table(Orientation::Positive);
            let inv = BasisInverseTable::for_algebra(kind);
            for i in 0..kind.dim() {
                let u: Vec<Rational> = unit_vec(kind.dim(), i);
                let cube = table.multiply(&table.multiply(&u, &u), &u);
                if !kind.is_real_unit(i) {
                    assert_eq!(antipode(&u, &inv), cube);
                }
            }
        }
    }

    #[test]
    fn axioms_hold_on_every_basis_element() {
        for kind in AlgebraKind::BOTH {
            let inv = BasisInverseTable::for_algebra(kind);
            for o in Orientation::BOTH {
                let table = kind.table(o);
                assert!(inv.failures(table).is_empty());
                for u in units(kind) {
                    assert!(verify_coassociativity(&u));
                    assert!(verify_counit(&u));
                    assert!(verify_antipode(&u, table, &inv));
                }
            }
        }
    }

    #[test]
    fn zero_element_passes() {
        assert!(verify_counit(&vec![int(0); 8]));
        assert!(verify_coassociativity(&vec![int(0); 16]));
    }

    #[test]
    fn broken_inverse_table_is_caught() {
        let table = AlgebraKind::OctonionLike.table(Orientation::Positive);
        let mut inv = BasisInverseTable::for_algebra(AlgebraKind::OctonionLike);
        inv.inv[7] = (7, Sign::Minus);
        assert_eq!(inv.failures(table), vec![7]);
        assert!(!verify_antipode(&unit_vec::<Rational>(8, 7), table, &inv));
    }

    #[test]
    fn compatibility_flags_negative_constants() {
        for kind in AlgebraKind::BOTH {
            for o in Orientation::BOTH {
                let table = kind.table(o);
                let report = compatibility_report(table);
                assert_eq!(report.len(), kind.dim() * kind.dim());
                for e in &report {
                    assert_eq!(e.compatible, e.structure_sign == 1, "({}, {})", e.i, e.j);
                }
                assert!(report.iter().filter(|e| e.i == 0).all(|e| e.compatible));
            }
        }
        let report = compatibility_report(AlgebraKind::OctonionLike.table(Orientation::Positive));
        assert!(!report[8 + 1].compatible);
    }

    proptest! {
        #[test]
        fn axioms_hold_on_random_elements(c in prop::array::uniform16(-9i64..=9), sed in any::<bool>()) {
            let kind = if sed { AlgebraKind::SedenionLike } else { AlgebraKind::OctonionLike };
            let x: Vec<Rational> = c[..kind.dim()].iter().map(|&v| int(v)).collect();
            let table = kind.table(Orientation::Positive);
            let inv = BasisInverseTable::for_algebra(kind);
            prop_assert!(verify_coassociativity(&x));
            prop_assert!(verify_counit(&x));
            prop_assert!(verify_antipode(&x, table, &inv));
        }
    }
}
