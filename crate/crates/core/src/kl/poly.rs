use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense integer polynomial in q used inside the engines.
pub(crate) type Poly = Vec<i64>;

pub(crate) fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub(crate) fn add_into(acc: &mut Poly, p: &[i64], shift: usize, scale: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, &c) in p.iter().enumerate() {
        acc[k + shift] += scale * c;
    }
}

pub(crate) fn mul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// A Kazhdan–Lusztig polynomial; the empty coefficient list is the zero
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct KlPolynomial {
    coeffs: Vec<BigInt>,
}

impl KlPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        KlPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        KlPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub(crate) fn from_poly(p: &[i64]) -> Self {
        Self::new(p.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Sum of the coefficients.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &KlPolynomial) -> KlPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl fmt::Display for KlPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            let term = if k == 0 {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if *c == -BigInt::one() {
                format!("-{mono}")
            } else {
                format!("{c}{mono}")
            };
            terms.push(term);
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(KlPolynomial::one().to_string(), "1");
        assert_eq!(KlPolynomial::zero().to_string(), "0");
        assert_eq!(KlPolynomial::from_poly(&[1, 1]).to_string(), "1 + q");
        assert_eq!(KlPolynomial::from_poly(&[1, 0, 2]).to_string(), "1 + 2q^2");
        assert_eq!(KlPolynomial::from_poly(&[1, -1]).to_string(), "1 - q");
    }

    #[test]
    fn products() {
        let p = KlPolynomial::from_poly(&[1, 1]);
        assert_eq!(p.mul(&p), KlPolynomial::from_poly(&[1, 2, 1]));
        assert_eq!(p.mul(&KlPolynomial::zero()), KlPolynomial::zero());
        assert_eq!(mul(&[1, -1], &[1, 1]), vec![1, 0, -1]);
        assert_eq!(p.at_one(), BigInt::from(2));
    }
}
