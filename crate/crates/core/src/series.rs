//! Truncated power series and the Hilbert series identities for `Q_n` and `Q_n^!`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Num;

use crate::error::{Error, Result};

/// Coefficient requirements for [`TruncatedSeries`].
pub trait Coeff: Clone + Num + Neg<Output = Self> {}
impl<T: Clone + Num + Neg<Output = T>> Coeff for T {}

/// `c_0 + c_1 t + ... + c_T t^T  (mod t^{T+1})`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

fn small<T: Coeff>(v: i64) -> T {
    let mut acc = T::zero();
    for _ in 0..v.unsigned_abs() {
        acc = acc + T::one();
    }
    if v < 0 {
        -acc
    } else {
        acc
    }
}

impl<T: Coeff> TruncatedSeries<T> {
    /// From explicit coefficients; the truncation order is `coeffs.len() - 1`.
    /// Panics on an empty vector.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    /// A polynomial, padded or truncated to `order`.
    pub fn from_polynomial(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_integers(values: &[i64], order: usize) -> Self {
        Self::from_polynomial(values.iter().map(|&v| small(v)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::from_polynomial(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_polynomial(vec![T::one()], order)
    }

    /// `c t^k`.
    pub fn monomial(k: usize, c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_polynomial(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    fn common(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let len = self.coeffs.len();
        let mut coeffs = vec![T::zero(); len];
        if k < len {
            coeffs[k..].clone_from_slice(&self.coeffs[..len - k]);
        }
        TruncatedSeries { coeffs }
    }

    /// `t ↦ -t`.
    pub fn substitute_neg_t(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::InvalidArgument(
                "cannot invert a series with zero constant term".to_string(),
            ));
        }
        let t = self.order();
        let mut inv: Vec<T> = Vec::with_capacity(t + 1);
        inv.push(T::one() / c0.clone());
        for k in 1..=t {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * inv[k - j].clone();
            }
            inv.push(-(acc / c0.clone()));
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: Coeff> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        let t = self.common(rhs);
        TruncatedSeries {
            coeffs: (0..=t)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        let t = self.common(rhs);
        TruncatedSeries {
            coeffs: (0..=t)
                .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<T: Coeff> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        let t = self.common(rhs);
        let mut coeffs = vec![T::zero(); t + 1];
        for (i, a) in self.coeffs.iter().take(t + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(t + 1 - i).enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl<T: Coeff> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{} + O(t^{})", parts.join(" "), self.order() + 1)
    }
}

impl<T: Coeff + fmt::Debug> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// `(1 - t) / (1 - t (2 - t)^n)`, the Hilbert series of `Q_n`.
pub fn theorem1_series<T: Coeff>(n: usize, order: usize) -> TruncatedSeries<T> {
    let two_minus_t = TruncatedSeries::from_integers(&[2, -1], order);
    let denom = &TruncatedSeries::one(order) - &two_minus_t.pow(n).shift(1);
    let numer = TruncatedSeries::from_integers(&[1, -1], order);
    &numer * &denom.invert().expect("constant term is 1")
}

/// `(1 + t (2 + t)^n) / (1 + t)`, the Hilbert series of `Q_n^!`.
pub fn theorem2_series<T: Coeff>(n: usize, order: usize) -> TruncatedSeries<T> {
    let two_plus_t = TruncatedSeries::from_integers(&[2, 1], order);
    let numer = &TruncatedSeries::one(order) + &two_plus_t.pow(n).shift(1);
    let denom = TruncatedSeries::from_integers(&[1, 1], order);
    &numer * &denom.invert().expect("constant term is 1")
}

/// Series of a free product: `1/H(A*B) = 1/H(A) + 1/H(B) - 1`.
pub fn free_product_series<T: Coeff>(
    a: &TruncatedSeries<T>,
    b: &TruncatedSeries<T>,
) -> Result<TruncatedSeries<T>> {
    if !a.coeff(0).is_one() || !b.coeff(0).is_one() {
        return Err(Error::InvalidArgument(
            "free product needs connected algebras (constant term 1)".to_string(),
        ));
    }
    let t = a.common(b);
    let recip = &(&a.invert()? + &b.invert()?) - &TruncatedSeries::one(t);
    recip.invert()
}

/// Series of the tensor algebra on a graded space with no degree-0 part: `1/(1 - H(W))`.
pub fn tensor_algebra_series<T: Coeff>(w: &TruncatedSeries<T>) -> Result<TruncatedSeries<T>> {
    if !w.coeff(0).is_zero() {
        return Err(Error::InvalidArgument(
            "tensor algebra series needs a zero constant term".to_string(),
        ));
    }
    (&TruncatedSeries::one(w.order()) - w).invert()
}

/// `H(Q_n)` from `1/H(Q_n) = (2 - t)/H(Q_{n-1}) - 1`, starting at `H(Q_0) = 1`.
pub fn cor49_series<T: Coeff>(n: usize, order: usize) -> TruncatedSeries<T> {
    let two_minus_t = TruncatedSeries::from_integers(&[2, -1], order);
    let one = TruncatedSeries::one(order);
    let mut recip = TruncatedSeries::one(order);
    for _ in 0..n {
        recip = &(&two_minus_t * &recip) - &one;
    }
    recip.invert().expect("constant term stays 1")
}

/// Row `n` of Pascal's triangle.
pub fn pascal_row(n: usize) -> Vec<u128> {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        0
    } else {
        pascal_row(n)[k]
    }
}

/// `Σ_{u=i}^{n} C(n,u) C(u-1,i-1)` for `i > 0`, and 1 for `i = 0`.
pub fn dual_dim_count(n: usize, i: usize) -> u128 {
    if i == 0 {
        return 1;
    }
    (i..=n)
        .map(|u| binomial(n, u) * binomial(u - 1, i - 1))
        .sum()
}

/// Integer counts as a series.
pub fn series_from_counts<T: Coeff>(counts: &[u128]) -> TruncatedSeries<T> {
    TruncatedSeries::new(
        counts
            .iter()
            .map(|&c| {
                let mut acc = T::zero();
                let mut base = T::one();
                let mut c = c;
                while c > 0 {
                    if c & 1 == 1 {
                        acc = acc + base.clone();
                    }
                    base = base.clone() + base;
                    c >>= 1;
                }
                acc
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type S = TruncatedSeries<BigRational>;

    fn ints(s: &S) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn arithmetic_examples() {
        let one_minus_t = S::from_integers(&[1, -1], 5);
        assert_eq!(ints(&one_minus_t.invert().unwrap()), vec![1; 6]);
        assert_eq!(
            ints(&S::from_integers(&[1, 1], 3).substitute_neg_t()),
            vec![1, -1, 0, 0]
        );
        assert_eq!(
            ints(&(&one_minus_t * &one_minus_t.invert().unwrap())),
            vec![1, 0, 0, 0, 0, 0]
        );
        assert!(S::from_integers(&[0, 1], 3).invert().is_err());
        assert_eq!(
            ints(&S::from_integers(&[1, 2, 3], 2).shift(1)),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn truncation_is_min_of_operands() {
        let a = S::from_integers(&[1, 1], 5);
        let b = S::from_integers(&[1, 1], 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn theorem_series_examples() {
        assert_eq!(ints(&theorem1_series(0, 4)), vec![1, 0, 0, 0, 0]);
        assert_eq!(ints(&theorem1_series(2, 5)), vec![1, 3, 8, 21, 55, 144]);
        assert_eq!(ints(&theorem1_series(3, 3)), vec![1, 7, 44, 274]);
        assert_eq!(ints(&theorem2_series(1, 3)), vec![1, 1, 0, 0]);
        assert_eq!(ints(&theorem2_series(2, 3)), vec![1, 3, 1, 0]);
        assert_eq!(ints(&theorem2_series(3, 5)), vec![1, 7, 5, 1, 0, 0]);
    }

    #[test]
    fn free_product_examples() {
        let poly = S::from_integers(&[1, -1], 6).invert().unwrap();
        let free2 = S::from_integers(&[1, -2], 6).invert().unwrap();
        assert_eq!(free_product_series(&poly, &poly).unwrap(), free2);
        assert_eq!(free_product_series(&poly, &S::one(6)).unwrap(), poly);
        assert!(free_product_series(&S::from_integers(&[2], 3), &poly).is_err());
    }

    #[test]
    fn tensor_algebra_examples() {
        let three_t = S::from_integers(&[0, 3], 4);
        assert_eq!(
            ints(&tensor_algebra_series(&three_t).unwrap()),
            vec![1, 3, 9, 27, 81]
        );
        assert_eq!(
            ints(&tensor_algebra_series(&S::zero(3)).unwrap()),
            vec![1, 0, 0, 0]
        );
        assert!(tensor_algebra_series(&S::one(3)).is_err());
    }

    #[test]
    fn cor49_examples() {
        assert_eq!(ints(&cor49_series(1, 4)), vec![1, 1, 1, 1, 1]);
        assert_eq!(ints(&cor49_series(2, 4)), vec![1, 3, 8, 21, 55]);
        assert_eq!(ints(&cor49_series(0, 3)), vec![1, 0, 0, 0]);
    }

    #[test]
    fn dual_dim_count_examples() {
        assert_eq!(dual_dim_count(3, 2), 5);
        assert_eq!(dual_dim_count(7, 0), 1);
        assert_eq!(dual_dim_count(4, 2), 17);
        assert_eq!(dual_dim_count(2, 3), 0);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 5), 0);
    }

    #[test]
    fn works_over_floats_and_integers() {
        let f: TruncatedSeries<f64> = theorem1_series(2, 4);
        assert_eq!(f.coeffs(), &[1.0, 3.0, 8.0, 21.0, 55.0]);
        let i: TruncatedSeries<i64> = theorem2_series(3, 4);
        assert_eq!(i.coeffs(), &[1, 7, 5, 1, 0]);
        let c: TruncatedSeries<i64> = series_from_counts(&[1, 3, 8]);
        assert_eq!(c.coeffs(), &[1, 3, 8]);
    }
}
