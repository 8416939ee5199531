//! Blade-level engine for the Euclidean Clifford algebra Cl(n,0).
//!
//! A blade is a generator bitmask: bit `i` set means `e_i` is a factor.
//! Within a mask the generators are always taken in ascending order, so
//! any monomial written out of order is normalized by absorbing the sign
//! of the sorting permutation. Every generator squares to `+1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest generator count supported by the `u32` masks.
pub const MAX_GENERATORS: u8 = 31;

/// A sign in `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    /// Multiply a coefficient by this sign.
    pub fn apply<T: Scalar>(self, x: T) -> T {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }

    pub fn to_scalar<T: Scalar>(self) -> T {
        self.apply(T::one())
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// A basis monomial of Cl(n,0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade {
    mask: u32,
    n: u8,
}

impl Blade {
    pub fn new(n: u8, mask: u32) -> Result<Self> {
        if n > MAX_GENERATORS || (mask >> n) != 0 {
            return Err(Error::Input(format!("mask {mask:#b} does not fit {n} generators")));
        }
        Ok(Self { mask, n })
    }

    pub fn scalar(n: u8) -> Self {
        Self { mask: 0, n }
    }

    /// Normalize a product of generators given in arbitrary order, e.g.
    /// `[3, 1]` for `e_3e_1`, returning the canonical blade and the sign
    /// absorbed by sorting. Repeated generators cancel.
    pub fn from_generators(n: u8, generators: &[u8]) -> Result<SignedBlade> {
        let mut acc = SignedBlade { blade: Blade::scalar(n), sign: Sign::Plus };
        for &g in generators {
            if g >= n {
                return Err(Error::Input(format!("generator e_{g} out of range for n={n}")));
            }
            let step = blade_product(acc.blade, Blade { mask: 1 << g, n })?;
            acc = SignedBlade { blade: step.blade, sign: acc.sign * step.sign };
        }
        Ok(acc)
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn n(self) -> u8 {
        self.n
    }

    pub fn grade(self) -> u32 {
        self.mask.count_ones()
    }

    /// Generator indices in ascending order.
    pub fn generators(self) -> impl Iterator<Item = u8> {
        (0..self.n).filter(move |i| self.mask & (1 << i) != 0)
    }

    /// Sign picked up by reversing the generator order: `(-1)^{k(k-1)/2}`.
    pub fn reverse_sign(self) -> Sign {
        let k = self.grade();
        Sign::from_parity((k * k.saturating_sub(1) / 2) % 2 == 1)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return f.write_str("1");
        }
        for g in self.generators() {
            write!(f, "e_{g}")?;
        }
        Ok(())
    }
}

/// A blade together with the sign of a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBlade {
    pub blade: Blade,
    pub sign: Sign,
}

/// Number of transpositions needed to bring `a·b` into ascending order:
/// each generator of `b` has to move left past every generator of `a`
/// with a larger index.
fn transpositions(a: u32, b: u32) -> u32 {
    let mut t = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        t += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    t
}

/// Geometric product of two basis blades.
pub fn blade_product(a: Blade, b: Blade) -> Result<SignedBlade> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch { left: a.n, right: b.n });
    }
    Ok(SignedBlade {
        blade: Blade { mask: a.mask ^ b.mask, n: a.n },
        sign: Sign::from_parity(transpositions(a.mask, b.mask) % 2 == 1),
    })
}

/// Symmetric half of the blade product, `(ab + ba)/2`.
pub fn dot<T: Scalar>(a: Blade, b: Blade) -> Result<Multivector<T>> {
    let ab = Multivector::from_blade(a).geometric_product(&Multivector::from_blade(b))?;
    let ba = Multivector::from_blade(b).geometric_product(&Multivector::from_blade(a))?;
    Ok(ab.add(&ba).scale(&half()))
}

/// Antisymmetric half of the blade product, `(ab - ba)/2`.
pub fn wedge<T: Scalar>(a: Blade, b: Blade) -> Result<Multivector<T>> {
    let ab = Multivector::from_blade(a).geometric_product(&Multivector::from_blade(b))?;
    let ba = Multivector::from_blade(b).geometric_product(&Multivector::from_blade(a))?;
    Ok(ab.sub(&ba).scale(&half()))
}

fn half<T: Scalar>() -> T {
    T::one() / (T::one() + T::one())
}

/// All even-grade blades of Cl(n,0), ordered by grade then mask.
pub fn even_basis(n: u8) -> Vec<Blade> {
    let mut blades: Vec<Blade> = (0..1u32 << n)
        .filter(|m| m.count_ones() % 2 == 0)
        .map(|mask| Blade { mask, n })
        .collect();
    blades.sort_by_key(|b| (b.grade(), b.mask));
    blades
}

/// Sparse multivector: mask → nonzero coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<T> {
    n: u8,
    terms: BTreeMap<u32, T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(n: u8) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn scalar(n: u8, value: T) -> Self {
        Self::zero(n).with_term(0, value)
    }

    pub fn from_blade(blade: Blade) -> Self {
        Self::zero(blade.n).with_term(blade.mask, T::one())
    }

    /// Build from `(mask, coefficient)` pairs; repeated masks accumulate.
    pub fn from_terms(n: u8, terms: impl IntoIterator<Item = (u32, T)>) -> Result<Self> {
        let mut mv = Self::zero(n);
        for (mask, value) in terms {
            Blade::new(n, mask)?;
            mv.add_term(mask, value);
        }
        Ok(mv)
    }

    fn with_term(mut self, mask: u32, value: T) -> Self {
        self.add_term(mask, value);
        self
    }

    /// Accumulate into one coefficient, keeping the map free of zeros.
    pub(crate) fn add_term(&mut self, mask: u32, value: T) {
        if value.is_zero() {
            return;
        }
        match self.terms.remove(&mask) {
            Some(old) => {
                let sum = old + value;
                if !sum.is_zero() {
                    self.terms.insert(mask, sum);
                }
            }
            None => {
                self.terms.insert(mask, value);
            }
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mask: u32) -> T {
        self.terms.get(&mask).cloned().unwrap_or_else(T::zero)
    }

    pub fn scalar_part(&self) -> T {
        self.coefficient(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &T)> {
        let n = self.n;
        self.terms.iter().map(move |(&mask, v)| (Blade { mask, n }, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, v) in &other.terms {
            out.add_term(m, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_terms(|_, v| -v.clone())
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.map_terms(|_, v| v.clone() * factor.clone())
    }

    fn map_terms(&self, f: impl Fn(Blade, &T) -> T) -> Self {
        let mut out = Self::zero(self.n);
        for (b, v) in self.terms() {
            out.add_term(b.mask, f(b, v));
        }
        out
    }

    /// Bilinear extension of [`blade_product`].
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let mut out = Self::zero(self.n);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                let p = blade_product(a, b)?;
                out.add_term(p.blade.mask, p.sign.apply(x.clone() * y.clone()));
            }
        }
        Ok(out)
    }

    pub fn reverse(&self) -> Self {
        self.map_terms(|b, v| b.reverse_sign().apply(v.clone()))
    }

    /// Keep exactly the grade-`k` terms.
    pub fn grade_projection(&self, k: u32) -> Self {
        let mut out = Self::zero(self.n);
        for (b, v) in self.terms() {
            if b.grade() == k {
                out.add_term(b.mask, v.clone());
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, v)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if b.mask == 0 {
                write!(f, "{}", v.render())?;
            } else {
                write!(f, "{}*{b}", v.render())?;
            }
        }
        Ok(())
    }
}
