//! Tensor algebras `T(V)` and `T(V*)` on generators labelled by nonempty
//! subsets, and the letterwise pairing between them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::combinatorics::{BlockString, SubsetMask};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Primal words live in `T(V)`, dual words in `T(V*)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Primal,
    Dual,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Primal => Side::Dual,
            Side::Dual => Side::Primal,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Side::Primal => "v",
            Side::Dual => "v*",
        }
    }
}

/// A monomial: a sequence of generator labels. Ordered by degree, then
/// lexicographically by mask value.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<SubsetMask>);

impl Word {
    pub fn new(letters: Vec<SubsetMask>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(m: SubsetMask) -> Self {
        Word(vec![m])
    }

    pub fn letters(&self) -> &[SubsetMask] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Sum of the cardinalities of the letters.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|m| m.len()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn to_block_string(&self) -> BlockString {
        BlockString::new(self.0.clone())
    }

    fn fmt_with(&self, side: Side, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for m in &self.0 {
            write!(f, "{}({})", side.symbol(), m.compact())?;
        }
        Ok(())
    }
}

impl From<&BlockString> for Word {
    fn from(s: &BlockString) -> Self {
        Word(s.blocks().to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(Side::Primal, f)
    }
}

/// A finite linear combination of words, all on one side. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeElement<S> {
    side: Side,
    terms: BTreeMap<Word, S>,
}

impl<S: Field> FreeElement<S> {
    pub fn zero(side: Side) -> Self {
        FreeElement {
            side,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(side: Side) -> Self {
        Self::monomial(side, Word::empty(), S::one())
    }

    pub fn monomial(side: Side, word: Word, coeff: S) -> Self {
        let mut e = Self::zero(side);
        e.add_term(word, coeff);
        e
    }

    /// The generator `v(A)` (or `v*(A)` on the dual side).
    pub fn generator(side: Side, m: SubsetMask) -> Self {
        Self::monomial(side, Word::letter(m), S::one())
    }

    /// Monomial with coefficient one from a list of masks.
    pub fn word(side: Side, letters: &[SubsetMask]) -> Self {
        Self::monomial(side, Word::new(letters.to_vec()), S::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, S)>>(side: Side, terms: I) -> Self {
        let mut e = Self::zero(side);
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, word: Word, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(c) => {
                let sum = c.clone() + coeff;
                if sum.is_zero() {
                    self.terms.remove(&word);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &Word) -> S {
        self.terms.get(word).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Degree of a nonzero homogeneous element; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let first = self.terms.keys().next()?.degree();
        let last = self.terms.keys().next_back()?.degree();
        (first == last).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// The degree-`d` component.
    pub fn component(&self, d: usize) -> Self {
        FreeElement {
            side: self.side,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &S) -> Self {
        if factor.is_zero() {
            return Self::zero(self.side);
        }
        FreeElement {
            side: self.side,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone() * factor.clone()))
                .collect(),
        }
    }

    fn same_side(&self, other: &Self, op: &str) -> Result<()> {
        if self.side != other.side {
            return Err(Error::InvalidArgument(format!(
                "cannot {op} a {:?} element with a {:?} element",
                self.side, other.side
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_side(other, "add")?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Concatenation product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_side(other, "multiply")?;
        let mut out = Self::zero(self.side);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// Every letter is a nonempty subset of `{1..n}`.
    pub fn fits(&self, n: usize) -> bool {
        self.terms
            .keys()
            .all(|w| w.letters().iter().all(|m| !m.is_empty() && m.fits(n)))
    }
}

/// `<p, q>` with `<v(A), v*(B)> = δ_{A,B}` extended letterwise to words.
pub fn pairing<S: Field>(primal: &FreeElement<S>, dual: &FreeElement<S>) -> Result<S> {
    if primal.side != Side::Primal || dual.side != Side::Dual {
        return Err(Error::InvalidArgument(
            "pairing takes a primal element and a dual element".to_string(),
        ));
    }
    let (small, large) = if primal.terms.len() <= dual.terms.len() {
        (&primal.terms, &dual.terms)
    } else {
        (&dual.terms, &primal.terms)
    };
    let mut acc = S::zero();
    for (w, c) in small {
        if let Some(d) = large.get(w) {
            acc = acc + c.clone() * d.clone();
        }
    }
    Ok(acc)
}

impl<S: Field> Add for &FreeElement<S> {
    type Output = FreeElement<S>;
    /// Panics if the sides differ; use [`FreeElement::checked_add`] to get an error instead.
    fn add(self, rhs: Self) -> FreeElement<S> {
        self.checked_add(rhs).expect("side mismatch in addition")
    }
}

impl<S: Field> Sub for &FreeElement<S> {
    type Output = FreeElement<S>;
    fn sub(self, rhs: Self) -> FreeElement<S> {
        self.checked_sub(rhs).expect("side mismatch in subtraction")
    }
}

impl<S: Field> Mul for &FreeElement<S> {
    type Output = FreeElement<S>;
    fn mul(self, rhs: Self) -> FreeElement<S> {
        self.multiply(rhs).expect("side mismatch in multiplication")
    }
}

impl<S: Field> Neg for &FreeElement<S> {
    type Output = FreeElement<S>;
    fn neg(self) -> FreeElement<S> {
        FreeElement {
            side: self.side,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<S: Field> fmt::Display for FreeElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = S::one();
        let minus_one = -S::one();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if *c == minus_one {
                (true, None)
            } else if *c == one {
                (false, None)
            } else {
                (false, Some(c))
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if let Some(c) = mag {
                write!(f, "({c})")?;
                if w.degree() == 0 {
                    continue;
                }
            }
            w.fmt_with(self.side, f)?;
        }
        Ok(())
    }
}

impl<S: Field> fmt::Debug for FreeElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All words of a given degree over `labels`, in lexicographic order when `labels` is sorted.
pub fn words_of_degree(labels: &[SubsetMask], degree: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..degree {
        let mut next = Vec::with_capacity(out.len() * labels.len());
        for w in &out {
            for &l in labels {
                let mut v = w.0.clone();
                v.push(l);
                next.push(Word(v));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    type E = FreeElement<BigRational>;

    fn m(e: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(e.iter().copied())
    }

    fn v(e: &[usize]) -> E {
        E::generator(Side::Primal, m(e))
    }

    fn vs(e: &[usize]) -> E {
        E::generator(Side::Dual, m(e))
    }

    #[test]
    fn product_examples() {
        let p = &v(&[1]) * &v(&[2]);
        assert_eq!(p, E::word(Side::Primal, &[m(&[1]), m(&[2])]));
        let lhs = &(&v(&[1]) - &v(&[2])) * &v(&[1]);
        let rhs = &(&v(&[1]) * &v(&[1])) - &(&v(&[2]) * &v(&[1]));
        assert_eq!(lhs, rhs);
        assert!((&E::zero(Side::Primal) * &v(&[1])).is_zero());
        assert!(v(&[1]).multiply(&vs(&[1])).is_err());
    }

    #[test]
    fn pairing_examples() {
        let p = &v(&[1]) * &v(&[2]);
        let q = &vs(&[1]) * &vs(&[2]);
        let q_rev = &vs(&[2]) * &vs(&[1]);
        assert_eq!(pairing(&p, &q).unwrap(), BigRational::from_i64(1));
        assert_eq!(pairing(&p, &q_rev).unwrap(), BigRational::from_i64(0));
        assert!(pairing(&q, &p).is_err());
        // cross-degree pairs contribute nothing
        assert!(pairing(&v(&[1]), &q).unwrap().is_zero());
    }

    #[test]
    fn degree_and_components() {
        let e = &(&v(&[1]) * &v(&[2])) + &v(&[1]);
        assert_eq!(e.degree(), None);
        assert!(!e.is_homogeneous());
        assert_eq!(e.component(1), v(&[1]));
        assert_eq!(e.component(2).degree(), Some(2));
        assert!(E::zero(Side::Primal).is_homogeneous());
        assert_eq!(
            (&v(&[1, 2]) * &v(&[2])).terms().next().unwrap().0.weight(),
            3
        );
    }

    #[test]
    fn display() {
        let e = &(&v(&[1, 2]) * &v(&[1])) - &(&v(&[2]) * &v(&[2]));
        assert_eq!(e.to_string(), "-v(2)v(2) + v(12)v(1)");
        assert_eq!((&vs(&[1]) * &vs(&[1])).to_string(), "v*(1)v*(1)");
        assert_eq!(E::zero(Side::Dual).to_string(), "0");
        assert_eq!(E::one(Side::Primal).to_string(), "1");
    }

    #[test]
    fn word_order_is_degree_then_lex() {
        let a = Word::new(vec![m(&[3])]);
        let b = Word::new(vec![m(&[1]), m(&[1])]);
        let c = Word::new(vec![m(&[1]), m(&[2])]);
        assert!(a < b && b < c);
        let all = words_of_degree(&[m(&[1]), m(&[2]), m(&[1, 2])], 2);
        assert_eq!(all.len(), 9);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
