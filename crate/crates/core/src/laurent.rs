//! Integer Laurent polynomials in one and two variables.
//!
//! Terms live in a `BTreeMap`, so iteration (and therefore every printed
//! report) is ordered by exponent. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Exponent type of a Laurent monomial.
pub trait Monomial: Copy + Ord + std::hash::Hash + fmt::Debug {
    fn unit() -> Self;
    fn times(self, other: Self) -> Self;
    fn inverse(self) -> Self;
}

impl Monomial for i32 {
    fn unit() -> Self {
        0
    }
    fn times(self, other: Self) -> Self {
        self + other
    }
    fn inverse(self) -> Self {
        -self
    }
}

/// `(a-exponent, z-exponent)`
impl Monomial for (i32, i32) {
    fn unit() -> Self {
        (0, 0)
    }
    fn times(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
    fn inverse(self) -> Self {
        (-self.0, -self.1)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<M: Monomial> {
    terms: BTreeMap<M, i64>,
}

/// Laurent polynomial in one variable (`A` for the bracket and Jones polynomial).
pub type LaurentPoly1 = Laurent<i32>;

/// Laurent polynomial in `a` and `z`, keyed by `(a-exponent, z-exponent)`.
pub type LaurentPoly2 = Laurent<(i32, i32)>;

impl<M: Monomial> Laurent<M> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(M::unit(), 1)
    }

    pub fn monomial(exp: M, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (M, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: M, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: M) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (M, i64)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, exp: M, coeff: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e.times(exp), c * coeff)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Substitutes every variable by its inverse.
    pub fn invert_variables(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e.inverse(), c)))
    }
}

impl LaurentPoly1 {
    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (dlo, dhi) = (divisor.min_degree()?, divisor.max_degree()?);
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(hi) = rem.max_degree() {
            let lo = rem.min_degree().unwrap();
            if hi - lo < dhi - dlo {
                return None;
            }
            let c = rem.coeff(hi);
            if c % lead != 0 {
                return None;
            }
            let q = Self::monomial(hi - dhi, c / lead);
            rem = &rem - &(&q * divisor);
            quot += &q;
        }
        Some(quot)
    }

    /// Rewrites a polynomial in `A` as one in `t = A^-4`; `None` if some
    /// exponent is not a multiple of 4.
    pub fn to_t_variable(&self) -> Option<Self> {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            if e % 4 != 0 {
                return None;
            }
            out.add_term(-e / 4, c);
        }
        Some(out)
    }

    pub fn from_t_variable(t_poly: &Self) -> Self {
        Self::from_terms(t_poly.terms().map(|(e, c)| (-4 * e, c)))
    }
}

impl LaurentPoly2 {
    /// Highest power of `a` with a nonzero coefficient.
    pub fn max_a_degree(&self) -> Option<i32> {
        self.terms.keys().map(|(a, _)| *a).max()
    }

    pub fn min_a_degree(&self) -> Option<i32> {
        self.terms.keys().map(|(a, _)| *a).min()
    }

    /// Substitutes `a -> 1/a`, keeping `z`.
    pub fn invert_a(&self) -> Self {
        Self::from_terms(self.terms().map(|((a, z), c)| ((-a, z), c)))
    }
}

impl<M: Monomial> Add for &Laurent<M> {
    type Output = Laurent<M>;
    fn add(self, rhs: Self) -> Laurent<M> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<M: Monomial> Sub for &Laurent<M> {
    type Output = Laurent<M>;
    fn sub(self, rhs: Self) -> Laurent<M> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<M: Monomial> AddAssign<&Laurent<M>> for Laurent<M> {
    fn add_assign(&mut self, rhs: &Laurent<M>) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl<M: Monomial> SubAssign<&Laurent<M>> for Laurent<M> {
    fn sub_assign(&mut self, rhs: &Laurent<M>) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
    }
}

impl<M: Monomial> Mul for &Laurent<M> {
    type Output = Laurent<M>;
    fn mul(self, rhs: Self) -> Laurent<M> {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1.times(e2), c1 * c2);
            }
        }
        out
    }
}

impl<M: Monomial> Neg for &Laurent<M> {
    type Output = Laurent<M>;
    fn neg(self) -> Laurent<M> {
        Laurent::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }
}

impl<M: Monomial> fmt::Debug for Laurent<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Human-readable form, e.g. `-A^2 - A^-2`.
impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            write_coeff(f, *c, *e == 0, first)?;
            if *e != 0 {
                write!(f, "A")?;
                if *e != 1 {
                    write!(f, "^{e}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, z), c) in self.terms.iter() {
            write_coeff(f, *c, *a == 0 && *z == 0, first)?;
            for (name, e) in [("a", *a), ("z", *z)] {
                if e != 0 {
                    write!(f, "{name}")?;
                    if e != 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: i64, constant: bool, first: bool) -> fmt::Result {
    let sign = if c < 0 { "-" } else { "+" };
    if first {
        if c < 0 {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    if c.abs() != 1 || constant {
        write!(f, "{}", c.abs())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta() -> LaurentPoly1 {
        LaurentPoly1::from_terms([(2, -1), (-2, -1)])
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = LaurentPoly1::from_terms([(1, 2), (1, -2), (3, 1)]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(1), 0);
    }

    #[test]
    fn exact_division_recovers_factor() {
        let q = LaurentPoly1::from_terms([(-7, 1), (-3, -1), (5, 4)]);
        let p = &q * &delta();
        assert_eq!(p.exact_div(&delta()), Some(q));
        assert_eq!(LaurentPoly1::one().exact_div(&delta()), None);
    }

    #[test]
    fn t_variable_round_trip() {
        let p = LaurentPoly1::from_terms([(-4, 1), (-12, 1), (-16, -1)]);
        let t = p.to_t_variable().unwrap();
        assert_eq!(t, LaurentPoly1::from_terms([(1, 1), (3, 1), (4, -1)]));
        assert_eq!(LaurentPoly1::from_t_variable(&t), p);
    }

    #[test]
    fn display_is_ordered() {
        assert_eq!(delta().to_string(), "-A^2 - A^-2");
        let p = LaurentPoly2::from_terms([((1, -1), 1), ((-1, -1), -1), ((0, 0), 1)]);
        assert_eq!(p.to_string(), "-a^-1z^-1 + 1 + az^-1");
    }
}
