use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// An element of `ℤ[v, v⁻¹]`, stored densely from its lowest exponent with
/// no leading or trailing zero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·v^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPolynomial { low: e, coeffs: vec![c] }
    }

    /// Sums the given `(exponent, coefficient)` terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out += &Self::monomial(c, e);
        }
        out
    }

    fn trimmed(mut low: i32, mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        low += lead as i32;
        LaurentPolynomial { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, e: i32) -> i64 {
        let i = e - self.low;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(exponent, coefficient)` terms in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    /// `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        match self.max_degree() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPolynomial { low: -hi, coeffs }
            }
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Whether every exponent is negative, i.e. `self ∈ v⁻¹ℤ[v⁻¹]`.
    pub fn is_strictly_negative(&self) -> bool {
        self.max_degree().map_or(true, |d| d < 0)
    }

    /// The bar-invariant `m` with `self - m ∈ v⁻¹ℤ[v⁻¹]`.
    pub fn bar_invariant_part(&self) -> Self {
        Self::from_terms(self.terms().filter(|&(e, _)| e >= 0).flat_map(|(e, c)| {
            let mirror = (e > 0).then_some((-e, c));
            core::iter::once((e, c)).chain(mirror)
        }))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::trimmed(self.low, self.coeffs.iter().map(|c| c * k).collect())
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.scale(sign);
        }
        let low = self.low.min(other.low);
        let high = self.max_degree().unwrap().max(other.max_degree().unwrap());
        let mut coeffs = vec![0; (high - low + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - low) as usize] += c;
        }
        for (e, c) in other.terms() {
            coeffs[(e - low) as usize] += sign * c;
        }
        Self::trimmed(low, coeffs)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        self.combine(rhs, 1)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self.combine(rhs, -1)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial::trimmed(self.low + rhs.low, coeffs)
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        *self = self.combine(rhs, 1);
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        *self = self.combine(rhs, -1);
    }
}

/// Highest power first, e.g. `v^2 - 3 + v^-1`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<(i32, i64)> = self.terms().collect();
        for (k, &(e, c)) in terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    match e {
                        1 => f.write_str("v")?,
                        _ => write!(f, "v^{e}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn lp(terms: &[(i32, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn arithmetic_trims_zeros() {
        let a = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(&a - &a, LaurentPolynomial::zero());
        assert_eq!(&a * &a, lp(&[(2, 1), (0, -2), (-2, 1)]));
        assert_eq!((&a + &lp(&[(1, -1)])).min_degree(), Some(-1));
        assert_eq!((&a + &lp(&[(1, -1)])).max_degree(), Some(-1));
        assert_eq!(LaurentPolynomial::monomial(0, 5), LaurentPolynomial::zero());
    }

    #[test]
    fn bar_and_lift() {
        let a = lp(&[(2, 3), (0, 1), (-1, 4), (-3, 2)]);
        assert_eq!(a.bar(), lp(&[(-2, 3), (0, 1), (1, 4), (3, 2)]));
        let m = a.bar_invariant_part();
        assert!(m.is_bar_invariant());
        assert!((&a - &m).is_strictly_negative());
        assert_eq!(m, lp(&[(2, 3), (0, 1), (-2, 3)]));
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(2, 1), (0, -3), (-1, 1)]).to_string(), "v^2 - 3 + v^-1");
        assert_eq!(lp(&[(1, -2)]).to_string(), "-2v");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }
}
