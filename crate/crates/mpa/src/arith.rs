//! Exact rational numbers and univariate polynomials in the indeterminate ξ.
//!
//! The whole kernel works over ℚ; there is no floating point anywhere.
//! Rationals are always stored reduced with a positive denominator so that
//! they hash and compare canonically as coefficients of algebra elements.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

use crate::error::MpaError;

/// Exact rational number, always reduced, denominator > 0.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Serializes as `"p/q"`, or `"p"` when the denominator is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_string(s: &str) -> Result<Rat, MpaError> {
    let parse_int = |t: &str| -> Result<BigInt, MpaError> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| MpaError::Malformed(format!("invalid rational literal `{s}`")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(MpaError::Malformed(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// Univariate polynomial in ξ with exact rational coefficients.
///
/// Coefficients are stored constant term first with no trailing zeros; the
/// zero polynomial is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyXi {
    coeffs: Vec<Rat>,
}

impl PolyXi {
    pub fn zero() -> Self {
        PolyXi { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    /// The polynomial ξ.
    pub fn xi() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// ξ + c for integer c (convenience for tests and falling factorials).
    pub fn xi_plus(c: i64) -> Self {
        Self::from_coeffs(vec![rat_int(c), Rat::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyXi { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &PolyXi) -> PolyXi {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
            out.push(a + b);
        }
        PolyXi::from_coeffs(out)
    }

    pub fn sub(&self, other: &PolyXi) -> PolyXi {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> PolyXi {
        PolyXi::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &PolyXi) -> PolyXi {
        if self.is_zero() || other.is_zero() {
            return PolyXi::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyXi::from_coeffs(out)
    }

    /// Exact evaluation at an integer by Horner's scheme.
    pub fn eval_int(&self, n: i64) -> Rat {
        self.eval(&rat_int(n))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// The falling factorial f·(f−1)⋯(f−l+1); the empty product for l = 0.
pub fn falling_factorial(f: &PolyXi, l: usize) -> PolyXi {
    let mut acc = PolyXi::one();
    for i in 0..l {
        acc = acc.mul(&f.sub(&PolyXi::from_int(i as i64)));
    }
    acc
}

/// The unique polynomial of degree < points.len() through all points
/// (Newton's divided differences, exact).
pub fn interpolate(points: &[(i64, Rat)]) -> Result<PolyXi, MpaError> {
    if points.is_empty() {
        return Err(MpaError::Malformed("interpolate: no points".into()));
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(MpaError::DuplicateAbscissa(*x));
        }
    }
    // Divided difference table.
    let n = points.len();
    let mut diffs: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut newton = Vec::with_capacity(n);
    newton.push(diffs[0].clone());
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = rat_int(points[i].0 - points[i - level].0);
            diffs[i] = (diffs[i].clone() - diffs[i - 1].clone()) / dx;
        }
        newton.push(diffs[level].clone());
    }
    // Expand sum_j newton[j] * prod_{i<j} (ξ - x_i).
    let mut result = PolyXi::zero();
    let mut basis = PolyXi::one();
    for (j, c) in newton.iter().enumerate() {
        result = result.add(&basis.scale(c));
        if j + 1 < n {
            basis = basis.mul(&PolyXi::xi_plus(-points[j].0));
        }
    }
    Ok(result)
}

impl fmt::Display for PolyXi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
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
            let show_coeff = deg == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", rat_to_string(&abs))?;
            }
            match deg {
                0 => {}
                1 => write!(f, "{}ξ", if show_coeff { "·" } else { "" })?,
                _ => write!(f, "{}ξ^{}", if show_coeff { "·" } else { "" }, deg)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyXi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
