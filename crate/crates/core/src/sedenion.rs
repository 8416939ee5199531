//! The 16-dimensional associative sedenion-like algebra.
//!
//! Basis `1, λe01, λe02, λe03, λe12, λe31, λe23, λe0123, λe04, λe14, λe24,
//! λe34, λe0214, λe0134, λe0324, λe1234` inside Cl(5,0). Units are named
//! by their generator word (`e0214`); the λ factor is implicit.
//!
//! The first eight units span a copy of the octonion-like algebra on
//! `e0..e3`, but in a different order and with different signs than
//! `u_0..u_7`. [`DualSplit`] therefore stores genuine octonion-like values
//! and converts to and from the printed coefficient lists explicitly.

use std::sync::OnceLock;

use serde::Serialize;

use crate::clifford::{blade_product, Blade, Multivector, Sign};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::octonion::{self, OctonionLike};
use crate::scalar::Scalar;
use crate::table::{Basis, BasisElement, Orientation, StructureTable};
use crate::transcribed;

pub const DIM: usize = 16;

pub const GENERATORS: u8 = 5;

pub const NAMES: [&str; DIM] = [
    "1", "e01", "e02", "e03", "e12", "e31", "e23", "e0123", "e04", "e14", "e24", "e34", "e0214", "e0134", "e0324",
    "e1234",
];

const WORDS: [&[u8]; DIM] = [
    &[],
    &[0, 1],
    &[0, 2],
    &[0, 3],
    &[1, 2],
    &[3, 1],
    &[2, 3],
    &[0, 1, 2, 3],
    &[0, 4],
    &[1, 4],
    &[2, 4],
    &[3, 4],
    &[0, 2, 1, 4],
    &[0, 1, 3, 4],
    &[0, 3, 2, 4],
    &[1, 2, 3, 4],
];

/// Mask of `e1e2e3e4`; the dual unit is its negative.
const DUAL_UNIT_MASK: u32 = 0b11110;

pub fn basis() -> &'static Basis {
    static BASIS: OnceLock<Basis> = OnceLock::new();
    BASIS.get_or_init(|| {
        Basis::new(
            GENERATORS,
            NAMES.iter().zip(WORDS).map(|(&name, w)| BasisElement::from_word(name, GENERATORS, w)).collect(),
        )
    })
}

pub fn basis_blades() -> Vec<BasisElement> {
    basis().elements().to_vec()
}

pub fn derive_structure_table(orientation: Orientation) -> StructureTable {
    basis().derive_table(orientation).expect("sedenion-like basis is closed")
}

pub fn structure_table(orientation: Orientation) -> &'static StructureTable {
    static TABLES: [OnceLock<StructureTable>; 2] = [OnceLock::new(), OnceLock::new()];
    let slot = match orientation {
        Orientation::Positive => 0,
        Orientation::Negative => 1,
    };
    TABLES[slot].get_or_init(|| derive_structure_table(orientation))
}

/// Grade 0 and grade 4 units square to +1; the ten bivectors to -1.
pub fn is_real_unit(i: usize) -> bool {
    basis().elements()[i].blade.grade() % 4 == 0
}

/// `ε = -e1e2e3e4` in Cl(5,0). `ε² = 1` and `ε† = ε`.
pub fn dual_unit<T: Scalar>() -> Multivector<T> {
    Multivector::from_terms(GENERATORS, [(DUAL_UNIT_MASK, -T::one())]).expect("mask fits five generators")
}

/// Signed map from units `0..8` onto `u_0..u_7`: unit `i` equals
/// `sign · u_k`. Found by matching blades in Cl(4,0).
pub fn sub_basis_relabelling() -> [(usize, Sign); 8] {
    let oct = octonion::basis();
    std::array::from_fn(|i| {
        let b = &basis().elements()[i];
        let blade = Blade::new(octonion::GENERATORS, b.blade.mask()).expect("first eight units avoid e4");
        let k = oct.index_of_blade(blade).expect("same even subalgebra");
        (k, b.sign * oct.elements()[k].sign)
    })
}

/// Whether `u_k` anticommutes with the dual unit.
fn anticommutes_with_dual_unit(k: usize) -> bool {
    let blade = Blade::new(GENERATORS, octonion::basis().elements()[k].blade.mask()).expect("fits");
    let eps = Blade::new(GENERATORS, DUAL_UNIT_MASK).expect("fits");
    let left = blade_product(blade, eps).expect("same n").sign;
    let right = blade_product(eps, blade).expect("same n").sign;
    left != right
}

/// `α(x) = εxε`, the automorphism that moves `ε` past an octonion-like
/// value: `εx = α(x)ε`.
pub fn dual_unit_twist<T: Scalar>(x: &OctonionLike<T>) -> OctonionLike<T> {
    let c = x.coeffs();
    OctonionLike::new(
        std::array::from_fn(|k| if anticommutes_with_dual_unit(k) { -c[k].clone() } else { c[k].clone() }),
        x.orientation(),
    )
}

/// `S = S_r + S_d·ε` with both parts as octonion-like values.
#[derive(Debug, Clone, PartialEq)]
pub struct DualSplit<T> {
    pub real: OctonionLike<T>,
    pub dual: OctonionLike<T>,
}

impl<T: Scalar> DualSplit<T> {
    fn to_u_basis(list: &[T; 8], orientation: Orientation) -> OctonionLike<T> {
        let mut u: [T; 8] = std::array::from_fn(|_| T::zero());
        for (i, (k, sign)) in sub_basis_relabelling().into_iter().enumerate() {
            u[k] = sign.apply(list[i].clone());
        }
        OctonionLike::new(u, orientation)
    }

    fn from_u_basis(x: &OctonionLike<T>) -> [T; 8] {
        let relabel = sub_basis_relabelling();
        std::array::from_fn(|i| relabel[i].1.apply(x.coeff(relabel[i].0).clone()))
    }

    /// Build from coefficient lists over `1, λe01, λe02, λe03, λe12, λe31,
    /// λe23, λe0123` (the order the parts are usually written in).
    pub fn from_lists(real: [T; 8], dual: [T; 8], orientation: Orientation) -> Self {
        DualSplit { real: Self::to_u_basis(&real, orientation), dual: Self::to_u_basis(&dual, orientation) }
    }

    /// Inverse of [`DualSplit::from_lists`].
    pub fn lists(&self) -> ([T; 8], [T; 8]) {
        (Self::from_u_basis(&self.real), Self::from_u_basis(&self.dual))
    }

    pub fn orientation(&self) -> Orientation {
        self.real.orientation()
    }

    /// `S_r + S_d·ε`.
    pub fn join(&self) -> SedenionLike<T> {
        let (r, d) = self.lists();
        let lambda = T::from_i64(i64::from(self.orientation().value()));
        let mut s: [T; DIM] = std::array::from_fn(|_| T::zero());
        s[..8].clone_from_slice(&r);
        for m in 0..7 {
            s[8 + m] = d[7 - m].clone();
        }
        s[15] = -(lambda * d[0].clone());
        SedenionLike::new(s, self.orientation())
    }
}

/// One cell where the printed table and the derived table disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableDiffEntry {
    pub row: String,
    pub col: String,
    pub printed_entry: String,
    pub derived_entry: String,
}

/// Compare the derived λ=+1 table against the transcribed one.
pub fn table_diff() -> Vec<TableDiffEntry> {
    let table = structure_table(Orientation::Positive);
    let printed = transcribed::sedenion_table();
    let render = |(k, sign): (usize, Sign)| {
        let body = if k == 0 { "1" } else { NAMES[k] };
        if sign.is_minus() { format!("-{body}") } else { body.to_string() }
    };
    let mut out = Vec::new();
    for i in 1..DIM {
        for j in 1..DIM {
            let printed_entry = printed[i - 1][j - 1];
            let derived = table.unit_product(i, j);
            if printed_entry != derived {
                out.push(TableDiffEntry {
                    row: NAMES[i].to_string(),
                    col: NAMES[j].to_string(),
                    printed_entry: render(printed_entry),
                    derived_entry: render(derived),
                });
            }
        }
    }
    out
}

/// Coefficients of a quadratic form in `s_0..s_15`, one per monomial
/// `s_i s_j` with `i <= j`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticForm<T> {
    pub terms: Vec<(usize, usize, T)>,
}

impl<T: Scalar> QuadraticForm<T> {
    fn support(&self) -> Vec<(usize, usize)> {
        self.terms.iter().map(|(i, j, _)| (*i, *j)).collect()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.terms.iter().map(|(i, j, c)| format!("{}·s{i}s{j}", c.render())).collect();
        parts.join(" + ")
    }
}

/// A relation of the form `s_a s_b = Σ s_i s_j`, quoted as a list of
/// monomials with signs, and the defect slot that carries it (if any).
#[derive(Debug, Clone, PartialEq)]
pub struct RelationMatch {
    pub quoted: &'static str,
    pub slot: Option<usize>,
    /// Signs found in that slot, scaled so the first monomial is positive.
    pub signs: Vec<(usize, usize, i8)>,
    /// Same monomials, same signs, equal weights.
    pub verbatim: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DefectRelations<T> {
    /// One form per `u_k` slot of the defect.
    pub forms: Vec<QuadraticForm<T>>,
    /// The forms evaluated at the element.
    pub values: [T; 8],
    pub matches: Vec<RelationMatch>,
}

impl<T: Scalar> DefectRelations<T> {
    pub fn all_hold(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

fn quoted_relations() -> [(&'static str, Vec<(usize, usize, i8)>); 2] {
    let mut first = vec![(0, 15, 1)];
    first.extend((1..=7).map(|i| (i.min(15 - i), i.max(15 - i), -1)));
    first.sort();
    let mut second = vec![(0, 8, 1)];
    second.extend((1..=7).map(|i| (i, 8 + i, -1)));
    second.sort();
    [("s0s15 = Σ_{i=1}^{7} s_i s_{15-i}", first), ("s0s8 = Σ_{i=1}^{7} s_i s_{8+i}", second)]
}

#[derive(Debug, Clone, PartialEq)]
pub struct SedenionLike<T> {
    coeffs: [T; DIM],
    orientation: Orientation,
}

impl<T: Scalar> SedenionLike<T> {
    pub fn new(coeffs: [T; DIM], orientation: Orientation) -> Self {
        SedenionLike { coeffs, orientation }
    }

    pub fn from_slice(coeffs: &[T], orientation: Orientation) -> Result<Self> {
        if coeffs.len() != DIM {
            return Err(Error::Input(format!("sedenion-like element needs {DIM} coefficients, got {}", coeffs.len())));
        }
        Ok(Self::new(std::array::from_fn(|i| coeffs[i].clone()), orientation))
    }

    pub fn zero(orientation: Orientation) -> Self {
        Self::new(std::array::from_fn(|_| T::zero()), orientation)
    }

    pub fn one(orientation: Orientation) -> Self {
        Self::unit(0, orientation)
    }

    pub fn unit(i: usize, orientation: Orientation) -> Self {
        let mut s = Self::zero(orientation);
        s.coeffs[i] = T::one();
        s
    }

    pub fn coeffs(&self) -> &[T; DIM] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(std::array::from_fn(|i| self.coeffs[i].clone() + other.coeffs[i].clone()), self.orientation)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(std::array::from_fn(|i| self.coeffs[i].clone() - other.coeffs[i].clone()), self.orientation)
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self::new(self.coeffs.clone().map(|c| c * factor.clone()), self.orientation)
    }

    fn check_orientation(&self, other: &Self) -> Result<()> {
        if self.orientation != other.orientation {
            return Err(Error::OrientationMismatch {
                left: self.orientation.value(),
                right: other.orientation.value(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_orientation(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let out = structure_table(self.orientation).multiply(&self.coeffs, &other.coeffs);
        Self::from_slice(&out, self.orientation).expect("table keeps the dimension")
    }

    /// Negate the ten bivector coefficients.
    pub fn dagger(&self) -> Self {
        Self::new(
            std::array::from_fn(|i| if is_real_unit(i) { self.coeffs[i].clone() } else { -self.coeffs[i].clone() }),
            self.orientation,
        )
    }

    pub fn to_multivector(&self) -> Multivector<T> {
        basis().embed(self.orientation, &self.coeffs)
    }

    pub fn from_multivector(mv: &Multivector<T>, orientation: Orientation) -> Result<Self> {
        if mv.n() != GENERATORS {
            return Err(Error::DimensionMismatch { left: mv.n(), right: GENERATORS });
        }
        Self::from_slice(&basis().project(orientation, mv)?, orientation)
    }

    /// `S_r = (s_0..s_7)`, `S_d = (-λs_15, s_14, …, s_8)` as lists over
    /// the first eight units.
    pub fn split(&self) -> DualSplit<T> {
        let s = &self.coeffs;
        let lambda = T::from_i64(i64::from(self.orientation.value()));
        let real: [T; 8] = std::array::from_fn(|i| s[i].clone());
        let dual: [T; 8] = std::array::from_fn(|i| if i == 0 { -(lambda.clone() * s[15].clone()) } else { s[15 - i].clone() });
        DualSplit::from_lists(real, dual, self.orientation)
    }

    /// `S_rS_d† + S_dS_r†`. Zero exactly for members of the normed set.
    pub fn orthogonality_defect(&self) -> OctonionLike<T> {
        let DualSplit { real, dual } = self.split();
        real.mul_unchecked(&dual.dagger()).add(&dual.mul_unchecked(&real.dagger()))
    }

    /// `S_r α(S_d)† + S_d α(S_r)†`, the dual part of `SS†`.
    pub fn twisted_defect(&self) -> OctonionLike<T> {
        let DualSplit { real, dual } = self.split();
        real.mul_unchecked(&dual_unit_twist(&dual).dagger())
            .add(&dual.mul_unchecked(&dual_unit_twist(&real).dagger()))
    }

    fn require_orthogonal(&self) -> Result<()> {
        let defect = self.orthogonality_defect();
        if defect.is_zero() {
            Ok(())
        } else {
            Err(Error::NotOrthogonal { defect: defect.coeffs().iter().map(Scalar::render).collect() })
        }
    }

    /// Scalar part of `SS†`, which is `Σ s_i²` for every `S`.
    pub fn self_product_scalar(&self) -> T {
        self.mul_unchecked(&self.dagger()).coeffs[0].clone()
    }

    /// `‖S‖²`, defined only when the defect vanishes.
    pub fn norm_sq(&self) -> Result<T> {
        self.require_orthogonal()?;
        Ok(self.self_product_scalar())
    }

    /// Defect of `ST` for orthogonal `S`, `T`.
    pub fn closure_check(&self, other: &Self) -> Result<OctonionLike<T>> {
        self.check_orientation(other)?;
        self.require_orthogonal()?;
        other.require_orthogonal()?;
        Ok(self.mul_unchecked(other).orthogonality_defect())
    }

    /// `(scalar(ST(ST)†), ‖S‖²‖T‖²)`. The left value is taken without
    /// requiring `ST` itself to be orthogonal.
    pub fn norm_multiplicativity_check(&self, other: &Self) -> Result<(T, T)> {
        self.check_orientation(other)?;
        let product = self.norm_sq()? * other.norm_sq()?;
        Ok((self.mul_unchecked(other).self_product_scalar(), product))
    }

    /// `SS† = S†S` and `(SS†)T = T(SS†)`.
    pub fn commutant_check(&self, other: &Self) -> Result<bool> {
        self.check_orientation(other)?;
        let n = self.mul_unchecked(&self.dagger());
        Ok(n == self.dagger().mul_unchecked(self) && n.mul_unchecked(other) == other.mul_unchecked(&n))
    }

    /// 16×16 matrix with `coeffs(ST) = L_S · coeffs(T)`.
    pub fn left_matrix(&self) -> Matrix<T> {
        let table = structure_table(self.orientation);
        let mut m = Matrix::<T>::zeros(DIM, DIM);
        for (i, j, e) in table.entries() {
            let v = m.get(e.index, j).clone() + table.constant(i, j).apply(self.coeffs[i].clone());
            m.set(e.index, j, v);
        }
        m
    }

    /// Inverse through the left matrix; `SingularMatrix` when none exists.
    pub fn try_inverse(&self) -> Result<Self> {
        let mut rhs = vec![T::zero(); DIM];
        rhs[0] = T::one();
        let y = self.left_matrix().solve(&rhs).ok_or(Error::SingularMatrix)?;
        Self::from_slice(&y, self.orientation)
    }

    /// Expand each defect coefficient as a quadratic form in `s_0..s_15`
    /// and look for the two quoted scalar relations among them.
    pub fn defect_coefficient_relations(&self) -> DefectRelations<T> {
        let o = self.orientation;
        let defect_at = |pairs: &[usize]| {
            let mut s = Self::zero(o);
            for &i in pairs {
                s.coeffs[i] = s.coeffs[i].clone() + T::one();
            }
            s.orthogonality_defect().coeffs().clone()
        };
        let diag: Vec<[T; 8]> = (0..DIM).map(|i| defect_at(&[i])).collect();
        let mut forms: Vec<QuadraticForm<T>> = (0..8).map(|_| QuadraticForm { terms: Vec::new() }).collect();
        for i in 0..DIM {
            for j in i..DIM {
                let coeff = if i == j {
                    diag[i].clone()
                } else {
                    let both = defect_at(&[i, j]);
                    std::array::from_fn(|k| both[k].clone() - diag[i][k].clone() - diag[j][k].clone())
                };
                for (k, c) in coeff.into_iter().enumerate() {
                    if !c.is_zero() {
                        forms[k].terms.push((i, j, c));
                    }
                }
            }
        }
        let matches = quoted_relations()
            .into_iter()
            .map(|(quoted, monomials)| {
                let support: Vec<(usize, usize)> = monomials.iter().map(|&(i, j, _)| (i, j)).collect();
                let Some(slot) = forms.iter().position(|f| f.support() == support) else {
                    return RelationMatch { quoted, slot: None, signs: Vec::new(), verbatim: false };
                };
                let terms = &forms[slot].terms;
                let lead = terms[0].2.to_f64().signum();
                let signs: Vec<(usize, usize, i8)> =
                    terms.iter().map(|(i, j, c)| (*i, *j, (c.to_f64().signum() * lead) as i8)).collect();
                let equal_weights = terms.iter().all(|(_, _, c)| *c == terms[0].2 || *c == -terms[0].2.clone());
                let verbatim = equal_weights && signs == monomials;
                RelationMatch { quoted, slot: Some(slot), signs, verbatim }
            })
            .collect();
        DefectRelations { forms, values: self.orthogonality_defect().coeffs().clone(), matches }
    }
}
