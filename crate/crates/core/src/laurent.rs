//! Laurent polynomials in one variable `v` with integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use smallvec::SmallVec;

type Terms = SmallVec<[(i32, i64); 4]>;

/// A finite sum `Σ c_e v^e` with `c_e ∈ Z`.
///
/// Terms are kept sorted by exponent and zero coefficients are never stored,
/// so structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: Terms,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · v^e`.
    pub fn monomial(c: i64, e: i32) -> Self {
        let mut terms = Terms::new();
        if c != 0 {
            terms.push((e, c));
        }
        Self { terms }
    }

    /// `v^e`.
    pub fn v_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, combining repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(iter: I) -> Self {
        let mut terms: Terms = iter.into_iter().collect();
        terms.sort_unstable_by_key(|t| t.0);
        let mut out = Terms::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.as_slice() == [(0, 1)]
    }

    /// Units of `Z[v, v⁻¹]` are exactly `±v^e`.
    pub fn is_unit(&self) -> bool {
        matches!(self.terms.as_slice(), [(_, c)] if c.abs() == 1)
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(e, c)] if c.abs() == 1 => Some(Self::monomial(*c, -e)),
            _ => None,
        }
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().copied()
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.terms
            .binary_search_by_key(&e, |t| t.0)
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.iter().map(|t| t.1).sum()
    }

    /// Multiplies by `v^e`.
    pub fn shift(&self, e: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|&(x, c)| (x + e, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|&(e, c)| (e, c * k)).collect(),
        }
    }

    /// Adds `k · v^e · other` in place.
    pub fn add_scaled(&mut self, other: &Laurent, k: i64, e: i32) {
        if k == 0 || other.is_zero() {
            return;
        }
        let mut out = Terms::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let next_b = b.get(j).map(|&(x, c)| (x + e, c * k));
            match (a.get(i), next_b) {
                (Some(&(xa, ca)), Some((xb, cb))) if xa == xb => {
                    if ca + cb != 0 {
                        out.push((xa, ca + cb));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(&ta), Some(tb)) if ta.0 < tb.0 => {
                    out.push(ta);
                    i += 1;
                }
                (_, Some(tb)) => {
                    out.push(tb);
                    j += 1;
                }
                (Some(&ta), None) => {
                    out.push(ta);
                    i += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        self.terms = out;
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Highest power first, e.g. `v^2 - 1` or `-v^-1 + 3`.
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, &(e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        f.write_str("v")?;
                    } else {
                        write!(f, "v^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        self.add_scaled(rhs, 1, 0);
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        self.add_scaled(rhs, -1, 0);
    }
}

impl MulAssign<&Laurent> for Laurent {
    fn mul_assign(&mut self, rhs: &Laurent) {
        *self = &*self * rhs;
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        if let [(e, c)] = self.terms.as_slice() {
            return rhs.scale(*c).shift(*e);
        }
        if let [(e, c)] = rhs.terms.as_slice() {
            return self.scale(*c).shift(*e);
        }
        #[allow(clippy::suspicious_arithmetic_impl)]
        Laurent::from_terms(
            self.terms
                .iter()
                .flat_map(|&(ea, ca)| rhs.terms.iter().map(move |&(eb, cb)| (ea + eb, ca * cb))),
        )
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: Laurent) -> Laurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: &Laurent) -> Laurent {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn l(t: &[(i32, i64)]) -> Laurent {
        Laurent::from_terms(t.iter().copied())
    }

    #[test]
    fn display() {
        assert_eq!(l(&[(2, 1), (0, -1)]).to_string(), "v^2 - 1");
        assert_eq!(l(&[(-1, -1), (0, 3)]).to_string(), "3 - v^-1");
        assert_eq!(l(&[(1, -2)]).to_string(), "-2v");
        assert_eq!(Laurent::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = l(&[(1, 1), (0, 1)]);
        let b = l(&[(1, 1), (0, -1)]);
        assert_eq!(&a - &a, Laurent::zero());
        assert_eq!(&a * &b, l(&[(2, 1), (0, -1)]));
        assert_eq!((&a * &b).terms().count(), 2);
    }

    #[test]
    fn units() {
        assert!(Laurent::monomial(-1, 5).is_unit());
        assert!(!Laurent::monomial(2, 0).is_unit());
        assert!(!l(&[(0, 1), (1, 1)]).is_unit());
        let u = Laurent::monomial(-1, 3);
        assert!((&u * &u.unit_inverse().unwrap()).is_one());
    }

    #[test]
    fn quadratic_inverse_identity() {
        // (v^-2 T + (v^-2 - 1)) is inverse to T when T^2 = (v^2-1)T + v^2.
        let q = Laurent::v_pow(2);
        let a = Laurent::v_pow(-2);
        let b = &a - &Laurent::one();
        // T·(aT + b) = a((q-1)T + q) + bT = (a(q-1) + b)T + aq
        assert!((&(&a * &(&q - &Laurent::one())) + &b).is_zero());
        assert!((&a * &q).is_one());
    }
}
