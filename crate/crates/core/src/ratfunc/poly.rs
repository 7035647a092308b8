//! Dense univariate polynomials over the rationals, exact arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients lowest degree first; no trailing zeros; the zero
/// polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(q(1))
    }

    pub fn constant(c: BigRational) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// The variable z.
    pub fn var() -> Poly {
        Poly::from_coeffs(vec![q(0), q(1)])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of z^i (zero when out of range).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(|| q(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![q(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Quotient and remainder; None when dividing by zero.
    pub fn divrem(&self, d: &Poly) -> Option<(Poly, Poly)> {
        let dd = d.degree()?;
        let lead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = vec![q(0); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            quo[shift] = factor.clone();
            // rem -= factor * z^shift * d
            let mut sub = vec![q(0); shift];
            sub.extend(d.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&Poly::from_coeffs(sub));
        }
        Some((Poly::from_coeffs(quo), rem))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * q(i as i64 + 1))
                .collect(),
        )
    }

    /// Product of the distinct irreducible factors: p / gcd(p, p').
    pub fn squarefree_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(&self.derivative());
        let (quo, rem) = self.divrem(&g).unwrap();
        debug_assert!(rem.is_zero());
        quo.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = q(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
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
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 2, 1]); // (z+1)^2
        let b = p(&[1, 1]);
        assert_eq!(b.mul(&b), a);
        assert_eq!(a.sub(&a), Poly::zero());
        assert_eq!(a.degree(), Some(2));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(b.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[0]).is_zero(), true);
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // z^2 - 1
        let b = p(&[1, 1]); // z + 1
        let (quo, rem) = a.divrem(&b).unwrap();
        assert_eq!(quo, p(&[-1, 1]));
        assert!(rem.is_zero());
        assert_eq!(a.gcd(&b), b);
        let c = p(&[2, 2]); // 2z + 2, gcd must be monic
        assert_eq!(a.gcd(&c), b);
        assert!(a.divrem(&Poly::zero()).is_none());
        // non-exact division leaves a remainder
        let (_, rem) = p(&[1, 0, 1]).divrem(&b).unwrap();
        assert_eq!(rem, p(&[2]));
    }

    #[test]
    fn derivative_and_squarefree() {
        let a = p(&[1, 1]).pow(3).mul(&p(&[-2, 1])); // (z+1)^3 (z-2)
        assert_eq!(a.squarefree_part(), p(&[1, 1]).mul(&p(&[-2, 1])).monic());
        assert_eq!(p(&[5]).derivative(), Poly::zero());
        assert_eq!(p(&[0, 0, 3]).derivative(), p(&[0, 6]));
    }

    #[test]
    fn eval_and_display() {
        let a = p(&[-8, 0, 0, 1]); // z^3 - 8
        assert_eq!(a.eval(&q(2)), q(0));
        assert_eq!(a.to_string(), "z^3 - 8");
        assert_eq!(p(&[0]).to_string(), "0");
        assert_eq!(p(&[-1, -2]).to_string(), "-2*z - 1");
        assert_eq!(
            Poly::from_coeffs(vec![q_ratio(1, 2), q(0), q(1)]).to_string(),
            "z^2 + 1/2"
        );
    }
}
