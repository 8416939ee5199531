//! Gradings by the even subgroup of Z2^n and the associator cocycle.
//!
//! A [`GradeVector`] is printed leftmost bit first. The leftmost bit
//! belongs to the highest generator index, so the internal bit pattern of
//! a generator-indicator degree is exactly the blade mask.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::algebra::AlgebraKind;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::table::StructureTable;
use crate::transcribed;

/// An element of Z2^n. Bit `g` of `bits` is the coordinate of generator
/// `g`, printed at position `n - 1 - g` from the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradeVector {
    bits: u32,
    n: u8,
}

impl GradeVector {
    pub fn new(n: u8, bits: u32) -> Self {
        assert!(n < 32 && bits < (1 << n), "grade vector out of range");
        GradeVector { bits, n }
    }

    pub fn zero(n: u8) -> Self {
        Self::new(n, 0)
    }

    /// From coordinates as printed, leftmost first.
    pub fn from_printed(coords: &[u8]) -> Self {
        let n = coords.len() as u8;
        let bits = coords.iter().fold(0, |acc, &c| (acc << 1) | u32::from(c & 1));
        Self::new(n, bits)
    }

    pub fn printed(self) -> Vec<u8> {
        (0..self.n).rev().map(|g| ((self.bits >> g) & 1) as u8).collect()
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn n(self) -> u8 {
        self.n
    }

    pub fn is_even(self) -> bool {
        self.bits.count_ones() % 2 == 0
    }

    /// Group operation of Z2^n.
    pub fn add(self, other: Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::new(self.n, self.bits ^ other.bits)
    }
}

impl fmt::Display for GradeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.printed().iter().map(u8::to_string).collect();
        write!(f, "({})", coords.join(","))
    }
}

impl Serialize for GradeVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.printed().serialize(s)
    }
}

/// Kernel of the parity map on Z2^n, in lexicographic order.
pub fn even_subgroup(n: u8) -> Vec<GradeVector> {
    (0..1u32 << n).map(|b| GradeVector::new(n, b)).filter(|g| g.is_even()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingAssignment {
    n: u8,
    degrees: Vec<GradeVector>,
}

impl GradingAssignment {
    pub fn new(n: u8, degrees: Vec<GradeVector>) -> Self {
        GradingAssignment { n, degrees }
    }

    /// The printed assignment for the given algebra.
    pub fn transcribed(kind: AlgebraKind) -> Self {
        match kind {
            AlgebraKind::OctonionLike => Self::new(
                4,
                transcribed::OCTONION_GRADING.iter().map(|c| GradeVector::from_printed(c)).collect(),
            ),
            AlgebraKind::SedenionLike => {
                let mut degrees = vec![GradeVector::zero(5); 16];
                for (key, coords) in transcribed::SEDENION_GRADING {
                    let i = transcribed::sedenion_index(key).expect("known key");
                    degrees[i] = GradeVector::from_printed(&coords);
                }
                Self::new(5, degrees)
            }
        }
    }

    /// Degree of each unit = indicator vector of the generators in its blade.
    pub fn constructed(kind: AlgebraKind) -> Self {
        let n = kind.generators();
        Self::new(n, kind.basis().elements().iter().map(|e| GradeVector::new(n, e.blade.mask())).collect())
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn degrees(&self) -> &[GradeVector] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> GradeVector {
        self.degrees[i]
    }

    /// Swap two degrees; used to inject faults.
    pub fn swap(&mut self, a: usize, b: usize) {
        self.degrees.swap(a, b);
    }

    /// Identity has degree zero and the degrees are exactly the even subgroup.
    pub fn is_bijection_onto_even_subgroup(&self) -> bool {
        let mut sorted = self.degrees.clone();
        sorted.sort();
        self.degrees.first() == Some(&GradeVector::zero(self.n)) && sorted == even_subgroup(self.n)
    }

    /// Basis pairs `(i, j)` where `|u_i| + |u_j| ≠ |u_iu_j|`.
    pub fn additivity_failures(&self, table: &StructureTable) -> Vec<(usize, usize)> {
        table
            .entries()
            .filter(|&(i, j, e)| self.degrees[i].add(self.degrees[j]) != self.degrees[e.index])
            .map(|(i, j, _)| (i, j))
            .collect()
    }

    pub fn verify_degree_additivity(&self, table: &StructureTable) -> bool {
        self.additivity_failures(table).is_empty()
    }

    /// `{name: bit-vector}` export.
    pub fn named(&self, names: &[&str]) -> BTreeMap<String, Vec<u8>> {
        names.iter().zip(&self.degrees).map(|(n, d)| (n.to_string(), d.printed())).collect()
    }
}

/// `φ(i, j, k)` with `(b_ib_j)b_k = φ · b_i(b_jb_k)`, indexed
/// `i·d² + j·d + k`.
pub fn associator_cocycle<T: Scalar>(table: &StructureTable) -> Result<Vec<T>> {
    let d = table.dim();
    let mut phi = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (ij, s1) = table.unit_product(i, j);
                let (left, s2) = table.unit_product(ij, k);
                let (jk, s3) = table.unit_product(j, k);
                let (right, s4) = table.unit_product(i, jk);
                // The right side is ±b_right, never zero for a monomial basis.
                let denominator = (s3 * s4).to_scalar::<T>();
                if denominator.is_zero() {
                    return Err(Error::ZeroDenominator((i, j, k)));
                }
                let numerator = if left == right { (s1 * s2).to_scalar::<T>() } else { T::zero() };
                phi.push(numerator / denominator);
            }
        }
    }
    Ok(phi)
}

pub type GroupCocycle<T> = BTreeMap<(GradeVector, GradeVector, GradeVector), T>;

/// Push an index-level cocycle down to the grading group. Fails with the
/// list of conflicting degree triples if `φ` is not constant on them.
pub fn push_to_group<T: Scalar>(
    phi: &[T],
    grading: &GradingAssignment,
) -> std::result::Result<GroupCocycle<T>, Vec<(GradeVector, GradeVector, GradeVector)>> {
    let d = grading.degrees().len();
    let mut out = GroupCocycle::new();
    let mut conflicts = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let key = (grading.degree(i), grading.degree(j), grading.degree(k));
                let v = &phi[(i * d + j) * d + k];
                match out.get(&key) {
                    Some(existing) if existing != v => conflicts.push(key),
                    Some(_) => {}
                    None => {
                        out.insert(key, v.clone());
                    }
                }
            }
        }
    }
    if conflicts.is_empty() {
        Ok(out)
    } else {
        conflicts.sort();
        conflicts.dedup();
        Err(conflicts)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", content = "tuple", rename_all = "snake_case")]
pub enum CocycleViolation {
    /// `φ(ab,c,d)φ(a,b,cd) ≠ φ(a,b,c)φ(a,bc,d)φ(b,c,d)`
    Pentagon([GradeVector; 4]),
    /// `φ(a,e,b) ≠ 1`
    Normalization([GradeVector; 2]),
}

/// Check the 3-cocycle identity and normalization over `group`. Returns
/// every violating tuple; an empty list means `φ` passes.
pub fn check_cocycle_conditions<T: Scalar>(phi: &GroupCocycle<T>, group: &[GradeVector]) -> Result<Vec<CocycleViolation>> {
    let get = |a: GradeVector, b: GradeVector, c: GradeVector| {
        phi.get(&(a, b, c)).cloned().ok_or_else(|| Error::Input(format!("cocycle undefined at ({a}, {b}, {c})")))
    };
    let Some(&first) = group.first() else {
        return Ok(Vec::new());
    };
    let e = GradeVector::zero(first.n());
    let mut out = Vec::new();
    for &a in group {
        for &b in group {
            if get(a, e, b)? != T::one() {
                out.push(CocycleViolation::Normalization([a, b]));
            }
            for &c in group {
                for &d in group {
                    let lhs = get(a.add(b), c, d)? * get(a, b, c.add(d))?;
                    let rhs = get(a, b, c)? * get(a, b.add(c), d)? * get(b, c, d)?;
                    if lhs != rhs {
                        out.push(CocycleViolation::Pentagon([a, b, c, d]));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The constant map `φ ≡ 1` on `group`.
pub fn trivial_cocycle<T: Scalar>(group: &[GradeVector]) -> GroupCocycle<T> {
    let mut phi = GroupCocycle::new();
    for &a in group {
        for &b in group {
            for &c in group {
                phi.insert((a, b, c), T::one());
            }
        }
    }
    phi
}
