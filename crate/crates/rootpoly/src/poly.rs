//! Univariate polynomials with exact rational coefficients.
//!
//! Counting polynomials (λ, h, h*) have nonnegative integer coefficients once
//! finalized; the Ehrhart polynomial keeps rational ones. Coefficients are
//! stored lowest degree first with trailing zeros trimmed.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use core::fmt;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rat};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![Rat::one()],
        }
    }

    pub fn from_rat_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_rat_coeffs(coeffs.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&Rat::from_integer(Int::from(x)))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_rat_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        Self::from_rat_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        Self::from_rat_coeffs(self.coeffs.iter().map(|v| v * c).collect())
    }

    /// `x^top * p(1/x)`: mirrors the coefficients within degree `top`.
    /// Fails when `deg p > top`.
    pub fn mirror(&self, top: usize) -> Result<Polynomial> {
        if let Some(d) = self.degree() {
            if d > top {
                return Err(Error::Dimension(format!(
                    "cannot mirror a degree-{d} polynomial into degree {top}"
                )));
            }
        }
        let coeffs = (0..=top).map(|k| self.coeff(top - k)).collect();
        Ok(Self::from_rat_coeffs(coeffs))
    }

    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, lowest degree first. Fails on fractional ones.
    pub fn integer_coeffs(&self) -> Result<Vec<Int>> {
        if !self.is_integer() {
            return Err(Error::Integrity(format!(
                "expected integer coefficients, got {self}"
            )));
        }
        Ok(self.coeffs.iter().map(|c| c.to_integer()).collect())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Lagrange interpolation through distinct nodes, exact over rationals.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Result<Polynomial> {
        for (i, (xi, _)) in points.iter().enumerate() {
            for (xj, _) in points.iter().skip(i + 1) {
                if xi == xj {
                    return Err(Error::Precondition("interpolation nodes must be distinct".into()));
                }
            }
        }
        let mut acc = Polynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Polynomial::one();
            let mut denom = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&Polynomial::from_rat_coeffs(vec![-xj.clone(), Rat::one()]));
                denom *= xi - xj;
            }
            acc = acc.add(&basis.scale(&(yi / denom)));
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => format!("{c}"),
                1 if c.is_one() => "t".into(),
                1 => format!("{c}*t"),
                _ if c.is_one() => format!("t^{k}"),
                _ => format!("{c}*t^{k}"),
            };
            terms.push(body);
        }
        write!(f, "{}", terms.join(" + "))
    }
}
