//! Generalized binomial coefficients, exact rational polynomials, and Hilbert
//! polynomials in the binomial basis.
//!
//! Throughout the crate a Hilbert polynomial is stored as the integer vector
//! `c_0..c_n` of its expansion
//!
//! ```text
//! χ(z) = Σ_j  c_j · C(z + j - 1, j)
//! ```
//!
//! where `C` is the *polynomial* binomial coefficient (falling factorial over
//! `j!`, defined for every integer upper argument). In this basis `c_n` is the
//! degree of the variety and, more generally, `c_j` is the Euler
//! characteristic of the structure sheaf of a general codimension-`(n-j)`
//! linear section — so dropping `c_0` is exactly the hyperplane-section
//! operator. Keeping the coefficients integral (rather than monomial-basis
//! rationals) makes integrality checks after interpolation immediate.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from Hilbert-polynomial construction and interpolation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    /// Two sample points share the same abscissa.
    #[error("duplicate abscissa z = {z} in interpolation data")]
    DuplicateAbscissa { z: i64 },
    /// Interpolation needs exactly `dim + 1` sample points.
    #[error("expected {expected} sample points for dimension {dim}, got {got}")]
    WrongPointCount { dim: usize, expected: usize, got: usize },
    /// The interpolant is not integral in the binomial basis.
    #[error("binomial-basis coefficient c_{index} = {value} is not an integer")]
    NonIntegralCoefficients { index: usize, value: BigRational },
    /// The leading coefficient (the degree) must be a positive integer.
    #[error("leading binomial-basis coefficient (the degree) is {got}, expected >= 1")]
    DegreeNonPositive { got: BigInt },
    /// Hyperplane sections of zero-dimensional polynomials do not exist.
    #[error("cannot take a hyperplane section in dimension 0")]
    DimensionZero,
}

/// The polynomial binomial coefficient `C(x, j) = x(x-1)…(x-j+1) / j!`.
///
/// Defined for every integer `x` (negative upper arguments are *not* clamped
/// to zero; e.g. `C(-1, 2) = 1`). Returns `0` for `j < 0`. The intermediate
/// division is exact at every step because `i` consecutive integers always
/// contain a multiple of `i`.
pub fn binomial(x: i64, j: i64) -> BigInt {
    if j < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 1..=j {
        acc *= BigInt::from(x - i + 1);
        let divisor = BigInt::from(i);
        debug_assert!((&acc % &divisor).is_zero(), "accumulator must stay integral");
        acc /= divisor;
    }
    acc
}

/// A dense univariate polynomial with exact rational coefficients, lowest
/// degree first. The zero polynomial is the empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    /// Builds a polynomial from monomial-basis coefficients (constant term
    /// first), trimming trailing zeros to keep the representation canonical.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn constant(value: BigRational) -> Self {
        Self::new(vec![value])
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, z: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(z)))
    }

    /// Evaluation at an integer point, demanding an integer value.
    pub fn int_at(&self, z: i64) -> Option<BigInt> {
        let v = self.eval_int(z);
        v.is_integer().then(|| v.to_integer())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// The polynomial `z ↦ C(z + offset, j)` expanded in the monomial basis:
    /// the product of the linear factors `(z + offset - i)` for `i < j`,
    /// divided by `j!`.
    pub fn binomial_in_z(offset: i64, j: u32) -> Self {
        let mut p = Self::constant(BigRational::one());
        let mut factorial = BigInt::one();
        for i in 0..i64::from(j) {
            let linear = Self::new(vec![
                BigRational::from_integer(BigInt::from(offset - i)),
                BigRational::one(),
            ]);
            p = &p * &linear;
            factorial *= i + 1;
        }
        p.scale(&BigRational::from_integer(factorial).recip())
    }

    /// Newton interpolation through points with distinct integer abscissae.
    pub fn interpolate(points: &[(i64, BigRational)]) -> Result<Self, HilbertError> {
        for (idx, (z, _)) in points.iter().enumerate() {
            if points[..idx].iter().any(|(w, _)| w == z) {
                return Err(HilbertError::DuplicateAbscissa { z: *z });
            }
        }
        if points.is_empty() {
            return Ok(Self::zero());
        }
        // Divided-difference table, collapsed in place: after pass `level`,
        // dd[i] holds f[x_{i-level}, .., x_i] for i >= level.
        let mut dd: Vec<BigRational> = points.iter().map(|(_, v)| v.clone()).collect();
        for level in 1..points.len() {
            for i in (level..points.len()).rev() {
                let span = BigInt::from(points[i].0 - points[i - level].0);
                dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(span);
            }
        }
        // Horner assembly of Σ dd[i] · Π_{j<i} (z - x_j).
        let mut p = Self::constant(dd[points.len() - 1].clone());
        for i in (0..points.len() - 1).rev() {
            let linear = Self::new(vec![
                BigRational::from_integer(BigInt::from(-points[i].0)),
                BigRational::one(),
            ]);
            p = &(&p * &linear) + &Self::constant(dd[i].clone());
        }
        Ok(p)
    }
}

impl std::ops::Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            out.push(a + b);
        }
        RationalPoly::new(out)
    }
}

impl std::ops::Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            out.push(a - b);
        }
        RationalPoly::new(out)
    }
}

impl std::ops::Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}·")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The Euler-characteristic polynomial of an `n`-dimensional variety, stored
/// as the integers `c_0..c_n` of the binomial basis (see module docs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPoly {
    coeffs: Vec<BigInt>,
}

impl HilbertPoly {
    /// Builds from binomial-basis coefficients `c_0..c_n`; the leading
    /// coefficient is the degree and must be `>= 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self, HilbertError> {
        match coeffs.last() {
            None => Err(HilbertError::DegreeNonPositive { got: BigInt::zero() }),
            Some(lead) if lead < &BigInt::one() => {
                Err(HilbertError::DegreeNonPositive { got: lead.clone() })
            }
            Some(_) => Ok(HilbertPoly { coeffs }),
        }
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> Result<Self, HilbertError> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The dimension `n` (one less than the coefficient count).
    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Binomial-basis coefficients `c_0..c_n`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The degree `c_n`.
    pub fn degree(&self) -> &BigInt {
        self.coeffs.last().expect("coeffs are nonempty")
    }

    /// Exact evaluation `χ(z) = Σ_j c_j · C(z + j - 1, j)`.
    pub fn eval(&self, z: i64) -> BigInt {
        let mut total = BigInt::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            let j = j as i64;
            total += c * binomial(z + j - 1, j);
        }
        total
    }

    /// Interpolates the unique dimension-`dim` polynomial through exactly
    /// `dim + 1` integer sample points, then re-expands it in the binomial
    /// basis by a backward-difference triangle at `0, -1, …, -dim` (the
    /// coefficient `c_j` is the `j`-th backward difference at `0`). Fails if
    /// any `c_j` is non-integral or the leading one is not positive.
    pub fn from_values(dim: usize, points: &[(i64, BigInt)]) -> Result<Self, HilbertError> {
        if points.len() != dim + 1 {
            return Err(HilbertError::WrongPointCount {
                dim,
                expected: dim + 1,
                got: points.len(),
            });
        }
        let rational_points: Vec<(i64, BigRational)> = points
            .iter()
            .map(|(z, v)| (*z, BigRational::from_integer(v.clone())))
            .collect();
        let p = RationalPoly::interpolate(&rational_points)?;
        // Backward-difference triangle on P(0), P(-1), …, P(-dim); the head
        // of row j is Δ^j P(0) = c_j.
        let mut row: Vec<BigRational> = (0..=dim as i64).map(|i| p.eval_int(-i)).collect();
        let mut coeffs = Vec::with_capacity(dim + 1);
        for j in 0..=dim {
            let head = &row[0];
            if !head.is_integer() {
                return Err(HilbertError::NonIntegralCoefficients {
                    index: j,
                    value: head.clone(),
                });
            }
            coeffs.push(head.to_integer());
            row = row.windows(2).map(|w| &w[0] - &w[1]).collect();
        }
        Self::new(coeffs)
    }

    /// The Hilbert polynomial of a general hyperplane section: drop `c_0`.
    /// Equivalently the first difference `χ(z) - χ(z-1)` re-expanded in the
    /// binomial basis one dimension down.
    pub fn hyperplane_section(&self) -> Result<Self, HilbertError> {
        if self.dim() == 0 {
            return Err(HilbertError::DimensionZero);
        }
        Self::new(self.coeffs[1..].to_vec())
    }

    /// The same polynomial as an exact monomial-basis [`RationalPoly`].
    pub fn chi_poly(&self) -> RationalPoly {
        let mut p = RationalPoly::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            let basis = RationalPoly::binomial_in_z(j as i64 - 1, j as u32);
            p = &p + &basis.scale(&BigRational::from_integer(c.clone()));
        }
        p
    }
}

impl fmt::Display for HilbertPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        write!(f, "[{}]", strings.join(", "))
    }
}
