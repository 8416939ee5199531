//! λ-scaled bases of even Clifford subalgebras and their structure tables.
//!
//! A basis element is `sign · λ^p · blade`. Multiplying two of them and
//! re-expressing the resulting blade in the basis gives a table entry
//! `(k, σ, p)` meaning `b_i · b_j = σ · λ^p · b_k`. Because `λ² = 1`, the
//! λ-power is the parity of `p_i + p_j + p_k`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::clifford::{blade_product, Blade, Multivector, Sign};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Global orientation λ ∈ {+1, -1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Orientation {
    #[default]
    Positive,
    Negative,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::Positive, Orientation::Negative];

    pub fn from_i64(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Orientation::Positive),
            -1 => Ok(Orientation::Negative),
            other => Err(Error::Input(format!("lambda must be 1 or -1, got {other}"))),
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    /// λ^power as a sign.
    pub fn power(self, power: u8) -> Sign {
        Sign::from_parity(self == Orientation::Negative && power % 2 == 1)
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// One basis unit `sign · λ^lambda_power · blade`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub name: &'static str,
    pub blade: Blade,
    pub sign: Sign,
    pub lambda_power: u8,
}

impl BasisElement {
    /// Build from a generator word as printed (possibly out of order).
    pub fn from_word(name: &'static str, n: u8, generators: &[u8]) -> Self {
        let sb = Blade::from_generators(n, generators).expect("basis words use valid generators");
        BasisElement {
            name,
            blade: sb.blade,
            sign: sb.sign,
            lambda_power: u8::from(!generators.is_empty()),
        }
    }

    /// Factor relating the unit to its bare blade: unit = factor · blade.
    pub fn factor(&self, orientation: Orientation) -> Sign {
        self.sign * orientation.power(self.lambda_power)
    }
}

/// An ordered basis closed under the geometric product (up to sign).
#[derive(Debug, Clone)]
pub struct Basis {
    n: u8,
    elements: Vec<BasisElement>,
    by_mask: HashMap<u32, usize>,
}

impl Basis {
    pub fn new(n: u8, elements: Vec<BasisElement>) -> Self {
        let by_mask = elements.iter().enumerate().map(|(i, e)| (e.blade.mask(), i)).collect();
        Basis { n, elements, by_mask }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.elements.iter().map(|e| e.name).collect()
    }

    pub fn index_of_blade(&self, blade: Blade) -> Option<usize> {
        self.by_mask.get(&blade.mask()).copied()
    }

    /// Derive the structure table from Clifford products of the basis blades.
    pub fn derive_table(&self, orientation: Orientation) -> Result<StructureTable> {
        let dim = self.dim();
        let mut entries = Vec::with_capacity(dim * dim);
        for a in &self.elements {
            for b in &self.elements {
                let p = blade_product(a.blade, b.blade)?;
                let k = self.index_of_blade(p.blade).ok_or_else(|| {
                    Error::Input(format!("basis not closed: {} * {} = {}", a.name, b.name, p.blade))
                })?;
                let c = &self.elements[k];
                entries.push(TableEntry {
                    index: k,
                    sign: a.sign * b.sign * p.sign * c.sign,
                    lambda_power: (a.lambda_power + b.lambda_power + c.lambda_power) % 2,
                });
            }
        }
        Ok(StructureTable { dim, orientation, entries })
    }

    /// Map coefficients to a multivector of Cl(n,0).
    pub fn embed<T: Scalar>(&self, orientation: Orientation, coeffs: &[T]) -> Multivector<T> {
        let mut mv = Multivector::zero(self.n);
        for (e, c) in self.elements.iter().zip(coeffs) {
            mv.add_term(e.blade.mask(), e.factor(orientation).apply(c.clone()));
        }
        mv
    }

    /// Inverse of [`Basis::embed`]; fails if a term lies outside the span.
    pub fn project<T: Scalar>(&self, orientation: Orientation, mv: &Multivector<T>) -> Result<Vec<T>> {
        let mut coeffs = vec![T::zero(); self.dim()];
        for (blade, v) in mv.terms() {
            let k = self
                .index_of_blade(blade)
                .ok_or_else(|| Error::Input(format!("blade {blade} is outside the basis span")))?;
            coeffs[k] = self.elements[k].factor(orientation).apply(v.clone());
        }
        Ok(coeffs)
    }
}

/// `b_i · b_j = sign · λ^lambda_power · b_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TableEntry {
    #[serde(rename = "k")]
    pub index: usize,
    #[serde(rename = "sigma", serialize_with = "ser_sign")]
    pub sign: Sign,
    #[serde(rename = "p")]
    pub lambda_power: u8,
}

fn ser_sign<S: serde::Serializer>(sign: &Sign, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_i8(sign.to_i8())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    dim: usize,
    orientation: Orientation,
    entries: Vec<TableEntry>,
}

impl StructureTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn entry(&self, i: usize, j: usize) -> TableEntry {
        self.entries[i * self.dim + j]
    }

    /// Row-major iterator over `(i, j, entry)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, TableEntry)> + '_ {
        self.entries.iter().enumerate().map(move |(n, &e)| (n / self.dim, n % self.dim, e))
    }

    /// Numeric structure constant `σ·λ^p` at this table's orientation.
    pub fn constant(&self, i: usize, j: usize) -> Sign {
        let e = self.entry(i, j);
        e.sign * self.orientation.power(e.lambda_power)
    }

    /// Product of two coefficient vectors through the table.
    pub fn multiply<T: Scalar>(&self, a: &[T], b: &[T]) -> Vec<T> {
        assert_eq!(a.len(), self.dim);
        assert_eq!(b.len(), self.dim);
        let mut out = vec![T::zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = self.entry(i, j).index;
                let term = self.constant(i, j).apply(x.clone() * y.clone());
                out[k] = out[k].clone() + term;
            }
        }
        out
    }

    /// Product of basis units `b_i b_j` as `(k, constant)`.
    pub fn unit_product(&self, i: usize, j: usize) -> (usize, Sign) {
        (self.entry(i, j).index, self.constant(i, j))
    }

    /// Render the evaluated entry with basis names, e.g. `-u_3`.
    pub fn render_entry(&self, i: usize, j: usize, names: &[&str]) -> String {
        let (k, s) = self.unit_product(i, j);
        let body = if k == 0 { "1" } else { names[k] };
        match s {
            Sign::Plus => body.to_string(),
            Sign::Minus => format!("-{body}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn quaternion_like() -> Basis {
        Basis::new(
            3,
            vec![
                BasisElement::from_word("1", 3, &[]),
                BasisElement::from_word("i", 3, &[1, 2]),
                BasisElement::from_word("j", 3, &[2, 0]),
                BasisElement::from_word("k", 3, &[0, 1]),
            ],
        )
    }

    #[test]
    fn lambda_power_tracks_non_scalar_results() {
        let basis = quaternion_like();
        let table = basis.derive_table(Orientation::Positive).unwrap();
        for (i, j, e) in table.entries() {
            let expected = u8::from(i != 0 && j != 0 && e.index != 0);
            assert_eq!(e.lambda_power, expected, "({i},{j})");
        }
        // ij = e12 e20 = e1 e0 = -e01 = -k ... at λ=+1
        assert_eq!(table.unit_product(1, 2), (3, Sign::Minus));
        let neg = basis.derive_table(Orientation::Negative).unwrap();
        assert_eq!(neg.unit_product(1, 2), (3, Sign::Plus));
        assert_eq!(neg.unit_product(1, 1), (0, Sign::Minus));
    }

    #[test]
    fn table_product_matches_embedding() {
        let basis = quaternion_like();
        for o in Orientation::BOTH {
            let table = basis.derive_table(o).unwrap();
            let a: Vec<Rational> = [1, -2, 3, 5].map(int).to_vec();
            let b: Vec<Rational> = [2, 7, -1, 4].map(int).to_vec();
            let via_table = table.multiply(&a, &b);
            let gp = basis.embed(o, &a).geometric_product(&basis.embed(o, &b)).unwrap();
            assert_eq!(basis.project(o, &gp).unwrap(), via_table);
        }
    }

    #[test]
    fn project_rejects_foreign_blades() {
        let basis = quaternion_like();
        let mv = Multivector::from_blade(Blade::new(3, 0b001).unwrap());
        assert!(basis.project::<Rational>(Orientation::Positive, &mv).is_err());
    }

    #[test]
    fn orientation_parsing() {
        assert_eq!(Orientation::from_i64(-1).unwrap(), Orientation::Negative);
        assert!(Orientation::from_i64(0).is_err());
    }
}
