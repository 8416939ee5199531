//! The 8-dimensional associative octonion-like algebra.
//!
//! Basis `u_0..u_7 = 1, λe_xe_y, λe_ze_x, λe_ye_z, λe_xe_∞, λe_ye_∞,
//! λe_ze_∞, λe_xe_ye_ze_∞` inside Cl(4,0), with generators
//! `e_x, e_y, e_z, e_∞` mapped to indices `0, 1, 2, 3`. The multiplication
//! table is derived from the blade engine, never typed in.
//!
//! Two units are real (`u_0`, `u_7`, squaring to +1) and six imaginary.
//! `u_7` is central, so `XX†` always lies in `span{u_0, u_7}`.

use std::sync::OnceLock;

use num::Complex;

use crate::clifford::Multivector;
use crate::error::{Error, Result, Seminorm};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::table::{Basis, BasisElement, Orientation, StructureTable};

pub const DIM: usize = 8;

/// Generator count of the ambient Clifford algebra.
pub const GENERATORS: u8 = 4;

pub const NAMES: [&str; DIM] = ["u_0", "u_1", "u_2", "u_3", "u_4", "u_5", "u_6", "u_7"];

/// Generator words for each unit, as printed (`e_ze_x` is `[2, 0]`).
const WORDS: [&[u8]; DIM] = [&[], &[0, 1], &[2, 0], &[1, 2], &[0, 3], &[1, 3], &[2, 3], &[0, 1, 2, 3]];

pub fn basis() -> &'static Basis {
    static BASIS: OnceLock<Basis> = OnceLock::new();
    BASIS.get_or_init(|| {
        Basis::new(
            GENERATORS,
            NAMES.iter().zip(WORDS).map(|(&name, w)| BasisElement::from_word(name, GENERATORS, w)).collect(),
        )
    })
}

/// `u_0..u_7` as (blade, normalization sign, λ-power).
pub fn basis_blades() -> Vec<BasisElement> {
    basis().elements().to_vec()
}

pub fn derive_structure_table(orientation: Orientation) -> StructureTable {
    basis().derive_table(orientation).expect("octonion-like basis is closed")
}

/// Shared per-orientation table.
pub fn structure_table(orientation: Orientation) -> &'static StructureTable {
    static TABLES: [OnceLock<StructureTable>; 2] = [OnceLock::new(), OnceLock::new()];
    let slot = match orientation {
        Orientation::Positive => 0,
        Orientation::Negative => 1,
    };
    TABLES[slot].get_or_init(|| derive_structure_table(orientation))
}

/// Whether `u_i` squares to +1.
pub fn is_real_unit(i: usize) -> bool {
    i == 0 || i == 7
}

#[derive(Debug, Clone, PartialEq)]
pub struct OctonionLike<T> {
    coeffs: [T; DIM],
    orientation: Orientation,
}

impl<T: Scalar> OctonionLike<T> {
    pub fn new(coeffs: [T; DIM], orientation: Orientation) -> Self {
        OctonionLike { coeffs, orientation }
    }

    pub fn from_slice(coeffs: &[T], orientation: Orientation) -> Result<Self> {
        if coeffs.len() != DIM {
            return Err(Error::Input(format!("octonion-like element needs {DIM} coefficients, got {}", coeffs.len())));
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
        let mut x = Self::zero(orientation);
        x.coeffs[i] = T::one();
        x
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

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self::new(std::array::from_fn(|i| f(&self.coeffs[i], &other.coeffs[i])), self.orientation)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.clone().map(|c| -c), self.orientation)
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

    /// Negate the six imaginary coefficients.
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

    /// `(scalar, u_7)` coefficients of `XX†`; the six imaginary
    /// coefficients of `XX†` must vanish (exactly, or up to rounding in `f64`).
    pub fn self_conjugate_product(&self) -> (T, T) {
        let p = self.mul_unchecked(&self.dagger());
        assert!(
            (1..7).all(|i| p.coeffs[i].is_negligible(&p.coeffs[0])),
            "XX† has imaginary part {:?}: structure table is broken",
            p
        );
        let [c0, _, _, _, _, _, _, c7] = p.coeffs;
        (c0, c7)
    }

    /// Squared seminorm: `scalar(XX†) ± u_7(XX†)`.
    ///
    /// At λ=+1 this is `Σx_i² ∓ 2(x_1x_6 + x_2x_5 + x_3x_4) ± 2x_0x_7`.
    pub fn seminorm_sq(&self, which: Seminorm) -> T {
        let (scalar, u7) = self.self_conjugate_product();
        scalar + T::from_i64(which.weight()) * u7
    }

    /// `M_x` with `coeffs(XY) = M_x · coeffs(Y)`.
    pub fn left_matrix(&self) -> Matrix<T> {
        let table = structure_table(self.orientation);
        let mut m = Matrix::<T>::zeros(DIM, DIM);
        for (i, j, e) in table.entries() {
            let v = m.get(e.index, j).clone() + table.constant(i, j).apply(self.coeffs[i].clone());
            m.set(e.index, j, v);
        }
        m
    }

    /// `M_y` with `coeffs(XY) = M_y · coeffs(X)`, where `self` is `Y`.
    pub fn right_matrix(&self) -> Matrix<T> {
        let table = structure_table(self.orientation);
        let mut m = Matrix::<T>::zeros(DIM, DIM);
        for (i, j, e) in table.entries() {
            let v = m.get(e.index, i).clone() + table.constant(i, j).apply(self.coeffs[j].clone());
            m.set(e.index, i, v);
        }
        m
    }

    /// Two-sided inverse, solved from `M_x · y = (1,0,…,0)ᵀ`.
    pub fn inverse(&self) -> Result<Self> {
        for which in Seminorm::BOTH {
            if self.seminorm_sq(which).is_zero() {
                return Err(Error::SingularElement { which });
            }
        }
        let mut rhs = vec![T::zero(); DIM];
        rhs[0] = T::one();
        let y = self.left_matrix().solve(&rhs).ok_or(Error::SingularMatrix)?;
        Self::from_slice(&y, self.orientation)
    }
}

impl OctonionLike<f64> {
    /// Closed-form eigenvalues of `M_x`, in two fourfold groups.
    ///
    /// Group `w = ±1`: `x_0 + w·x_7 ± i·sqrt(Σ_{i=1..3} (x_i - w·x_{7-i})²)`,
    /// each conjugate appearing twice. For λ=-1 the coefficients of
    /// `u_1..u_7` enter with flipped sign (the map `u_i ↦ -u_i` is an
    /// isomorphism onto the λ=+1 algebra).
    pub fn closed_form_eigenvalues(&self) -> [Complex<f64>; DIM] {
        let s = f64::from(self.orientation.value());
        let x: [f64; DIM] = std::array::from_fn(|i| if i == 0 { self.coeffs[0] } else { s * self.coeffs[i] });
        let mut out = [Complex::new(0.0, 0.0); DIM];
        for (g, w) in [1.0, -1.0].into_iter().enumerate() {
            let re = x[0] + w * x[7];
            let im = (1..=3).map(|i| (x[i] - w * x[7 - i]).powi(2)).sum::<f64>().sqrt();
            out[4 * g] = Complex::new(re, im);
            out[4 * g + 1] = Complex::new(re, im);
            out[4 * g + 2] = Complex::new(re, -im);
            out[4 * g + 3] = Complex::new(re, -im);
        }
        out
    }

    /// Squared magnitudes of [`Self::closed_form_eigenvalues`].
    pub fn eigen_magnitudes_sq(&self) -> [f64; DIM] {
        self.closed_form_eigenvalues().map(|z| z.norm_sqr())
    }
}
