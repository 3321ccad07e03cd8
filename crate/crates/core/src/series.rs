//! Truncated power series with big-integer coefficients.
//!
//! Used to solve `β(α(x)) + x = α(x)` for the generator series `β` given the
//! Cayley series `α(x) = Σ n^(n-1) x^n`: substituting `x ↦ α^{-1}(x)` gives
//! `β = x - α^{-1}`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Σ_{k <= order} c_k x^k`, everything above `order` discarded.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// Builds a series truncated (or zero-padded) to `order`.
    pub fn new(coeffs: Vec<BigInt>, order: usize) -> PowerSeries {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, BigInt::zero());
        PowerSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> PowerSeries {
        PowerSeries::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn zero(order: usize) -> PowerSeries {
        PowerSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> PowerSeries {
        let mut s = PowerSeries::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> PowerSeries {
        let mut s = PowerSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigInt::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`; zero above the truncation order.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, value: BigInt) {
        if k < self.coeffs.len() {
            self.coeffs[k] = value;
        }
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        PowerSeries::new(self.coeffs.clone(), order)
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        PowerSeries { coeffs: (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect() }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        PowerSeries { coeffs: (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect() }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut out = PowerSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// `self(inner(x))`; requires `inner(0) = 0`.
    pub fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner: g_N, then acc * h + g_k
        let mut acc = PowerSeries::zero(order);
        for k in (0..=order).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// The series `γ` with `self(γ(x)) = x`, solved one coefficient at a
    /// time. Requires a zero constant term and linear coefficient `1`.
    pub fn compositional_inverse(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        if order == 0 {
            return Ok(PowerSeries::zero(0));
        }
        if !self.coeffs[1].is_one() {
            return Err(Error::NonUnitLinearTerm);
        }
        let mut inverse = PowerSeries::x(order);
        for k in 2..=order {
            // with γ correct below degree k, [x^k] self(γ) is off by exactly γ_k's error
            let excess = self.truncate(k).compose(&inverse.truncate(k))?.coeffs[k].clone();
            inverse.coeffs[k] -= excess;
        }
        Ok(inverse)
    }
}

/// `α(x) = Σ_{n >= 1} n^(n-1) x^n` up to `order`.
pub fn cayley_series(order: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(order);
    for n in 1..=order {
        s.coeffs[n] = BigInt::from(n).pow(n as u32 - 1);
    }
    s
}

/// The generator series `β = x - α^{-1}` up to `order`.
pub fn generator_series(order: usize) -> PowerSeries {
    let alpha = cayley_series(order);
    let inverse = alpha.compositional_inverse().expect("α has the form x + O(x^2)");
    PowerSeries::x(order).sub(&inverse)
}

/// Checks `β(α(x)) + x = α(x)` coefficientwise up to `order`.
pub fn verify_functional_equation(alpha: &PowerSeries, beta: &PowerSeries, order: usize) -> bool {
    if alpha.order() < order || beta.order() < order {
        return false;
    }
    let alpha = alpha.truncate(order);
    match beta.truncate(order).compose(&alpha) {
        Ok(lhs) => lhs.add(&PowerSeries::x(order)) == alpha,
        Err(_) => false,
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::add(self, rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::sub(self, rhs)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Renders as a polynomial, e.g. `2x^2 + x^3 + 14x^4`; `0` when all
/// coefficients vanish.
impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries[{}]({self})", self.order())
    }
}
