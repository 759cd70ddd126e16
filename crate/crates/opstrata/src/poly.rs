//! Minimal dense univariate polynomials over an exact scalar.
//!
//! Used for two jobs: Sturm chains over `ℚ` (deciding real-rootlessness of
//! symbol determinants exactly) and coefficient identities over `ℚ[i]`.

use crate::scalar::{ExactScalar, Rational};
use num::Signed;

/// Polynomial with ascending coefficients; trailing zeros stripped.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<K: ExactScalar> {
    pub coeffs: Vec<K>,
}

impl<K: ExactScalar> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: K) -> Self {
        Poly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(K::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(K::zero);
            coeffs.push(a + b);
        }
        Poly::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(-K::one())))
    }

    pub fn scale(&self, s: &K) -> Self {
        Poly::new(self.coeffs.iter().map(|c| s.clone() * c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| K::from_i64(i as i64 + 1) * c.clone())
                .collect(),
        )
    }

    /// Remainder of `self` divided by `other` (field coefficients).
    pub fn rem(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let d = other.degree().unwrap();
        let lead_inv = other.leading().unwrap().inv().unwrap();
        while let Some(rd) = r.degree() {
            if rd < d {
                break;
            }
            let factor = r.leading().unwrap().clone() * lead_inv.clone();
            let shift = rd - d;
            let mut sub = vec![K::zero(); shift];
            sub.extend(other.coeffs.iter().map(|c| factor.clone() * c.clone()));
            r = r.sub(&Poly::new(sub));
        }
        r
    }
}

/// Count of distinct real roots of a rational polynomial, by Sturm's theorem
/// (sign variations at -infinity minus at +infinity).
pub fn count_real_roots(p: &Poly<Rational>) -> usize {
    if p.degree().map_or(true, |d| d == 0) {
        return 0;
    }
    // Sturm chain: p, p', then negated remainders.
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.scale(&-Rational::from_integer(1.into())));
    }
    // Squarefree part guard: divide through by the gcd is equivalent to using
    // the chain as-is for counting distinct roots when p is squarefree; for
    // safety reduce to the squarefree part first.
    let variations = |at_plus_infinity: bool| -> usize {
        let mut signs: Vec<i8> = Vec::new();
        for q in &chain {
            let Some(d) = q.degree() else { continue };
            let lead = q.leading().unwrap();
            let mut s: i8 = if lead.is_positive() { 1 } else { -1 };
            if !at_plus_infinity && d % 2 == 1 {
                s = -s;
            }
            signs.push(s);
        }
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    variations(false) - variations(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn p(coeffs: &[i64]) -> Poly<Rational> {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn sturm_counts_roots() {
        // x^2 + 1: no real roots.
        assert_eq!(count_real_roots(&p(&[1, 0, 1])), 0);
        // x^2 - 1: two real roots.
        assert_eq!(count_real_roots(&p(&[-1, 0, 1])), 2);
        // x^3 - x: three real roots.
        assert_eq!(count_real_roots(&p(&[0, -1, 0, 1])), 3);
        // x^4 + 2x^2 + 1 = (x^2+1)^2: no real roots (chain handles non-squarefree).
        assert_eq!(count_real_roots(&p(&[1, 0, 2, 0, 1])), 0);
    }

    #[test]
    fn remainder_matches_euclid() {
        let a = p(&[2, 0, 1]); // x^2 + 2
        let b = p(&[1, 1]); // x + 1
        let r = a.rem(&b);
        // x^2 + 2 = (x - 1)(x + 1) + 3
        assert_eq!(r, p(&[3]));
    }
}
