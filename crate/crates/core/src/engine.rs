//! Finitely presented quadratic algebras `T(W)/<R>` with `R ⊆ W ⊗ W`.
//!
//! Graded components are computed degree by degree. With `A_i` the degree-`i`
//! component, `A_i = (A_{i-1} ⊗ W) / image(A_{i-2} ⊗ R)`, so each step only
//! eliminates in a space of size `dim A_{i-1} · d` instead of `d^i`. Every
//! degree keeps a canonical basis of *free words*: the non-pivot columns of
//! the echelon form, with pivots chosen leftmost in degree-lexicographic word
//! order. [`QuadraticPresentation::dim_component_direct`] computes the same
//! dimensions from the full ideal in `W^{⊗ i}` and serves as a cross-check.

use std::collections::HashMap;

use crate::combinatorics::SubsetMask;
use crate::error::{Error, Result};
use crate::freealgebra::{words_of_degree, FreeElement, Side, Word};
use crate::linalg::{sparse_from_pairs, Echelon, SparseVec};
use crate::presentations::{dual_relation_sets, gr_dual_relation_sets, relations_q, relations_x};
use crate::scalar::Field;

/// Largest `d^i` a degree-`i` computation will accept.
pub const DEFAULT_MAX_WORDS: u128 = 1_000_000;

#[derive(Clone, Debug)]
pub struct QuadraticPresentation<S: Field> {
    labels: Vec<SubsetMask>,
    index: HashMap<SubsetMask, usize>,
    side: Side,
    relations: Vec<FreeElement<S>>,
    /// Relation space in coordinates `x * d + y` for the word `label[x] label[y]`.
    relation_space: Echelon<S>,
    max_words: u128,
}

impl<S: Field> QuadraticPresentation<S> {
    /// Validates and builds a presentation. Labels are sorted by mask value.
    pub fn build(
        mut labels: Vec<SubsetMask>,
        side: Side,
        relations: Vec<FreeElement<S>>,
    ) -> Result<Self> {
        labels.sort();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Validation(
                "generator labels must be distinct".to_string(),
            ));
        }
        if labels.iter().any(|l| l.is_empty()) {
            return Err(Error::Validation(
                "generator labels must be nonempty".to_string(),
            ));
        }
        let index: HashMap<SubsetMask, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let d = labels.len();
        let mut relation_space = Echelon::new();
        for (k, r) in relations.iter().enumerate() {
            if r.side() != side {
                return Err(Error::Validation(format!(
                    "relation {k} lives on the {:?} side, presentation is {:?}",
                    r.side(),
                    side
                )));
            }
            if r.is_zero() {
                continue;
            }
            if r.degree() != Some(2) {
                return Err(Error::Validation(format!(
                    "relation {k} is not homogeneous of degree 2: {r}"
                )));
            }
            let mut v = Vec::with_capacity(r.num_terms());
            for (w, c) in r.terms() {
                let l = w.letters();
                let (x, y) = match (index.get(&l[0]), index.get(&l[1])) {
                    (Some(&x), Some(&y)) => (x, y),
                    _ => {
                        return Err(Error::Validation(format!(
                            "relation {k} uses a letter outside the generator labels: {r}"
                        )))
                    }
                };
                v.push((x * d + y, c.clone()));
            }
            relation_space.insert(&sparse_from_pairs(v));
        }
        Ok(QuadraticPresentation {
            labels,
            index,
            side,
            relations,
            relation_space,
            max_words: DEFAULT_MAX_WORDS,
        })
    }

    /// Generators `v(A)` for all nonempty `A ⊆ {1..n}`.
    pub fn generators(n: usize) -> Vec<SubsetMask> {
        SubsetMask::all_nonempty(n).collect()
    }

    /// `Q_n = T(V)/<Q>`.
    pub fn qn(n: usize) -> Result<Self> {
        Self::build(Self::generators(n), Side::Primal, relations_q(n)?.elements)
    }

    /// `X_n = T(V)/<X>`, isomorphic to `gr Q_n`.
    pub fn xn(n: usize) -> Result<Self> {
        Self::build(Self::generators(n), Side::Primal, relations_x(n)?.elements)
    }

    /// `Q_n^!` presented by the four explicit relation sets.
    pub fn qn_dual_explicit(n: usize) -> Result<Self> {
        Self::build(
            Self::generators(n),
            Side::Dual,
            dual_relation_sets(n)?.all(),
        )
    }

    /// `gr Q_n^!` presented by its three relation sets.
    pub fn gr_dual(n: usize) -> Result<Self> {
        Self::build(
            Self::generators(n),
            Side::Dual,
            gr_dual_relation_sets(n)?.all(),
        )
    }

    pub fn with_max_words(mut self, max_words: u128) -> Self {
        self.max_words = max_words;
        self
    }

    pub fn labels(&self) -> &[SubsetMask] {
        &self.labels
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn relations(&self) -> &[FreeElement<S>] {
        &self.relations
    }

    pub fn num_generators(&self) -> usize {
        self.labels.len()
    }

    /// Dimension of the relation space `R`.
    pub fn relation_rank(&self) -> usize {
        self.relation_space.rank()
    }

    fn pair_word(&self, col: usize) -> Word {
        let d = self.labels.len();
        Word::new(vec![self.labels[col / d], self.labels[col % d]])
    }

    fn vector_to_element(&self, side: Side, v: &[(usize, S)]) -> FreeElement<S> {
        FreeElement::from_terms(side, v.iter().map(|(c, x)| (self.pair_word(*c), x.clone())))
    }

    /// A basis of `R` in reduced echelon form.
    pub fn relation_basis(&self) -> Vec<FreeElement<S>> {
        self.relation_space
            .reduced_rows()
            .iter()
            .map(|r| self.vector_to_element(self.side, r))
            .collect()
    }

    /// The quadratic dual: same labels on the other side, relations a basis of `R^⊥`.
    pub fn koszul_dual(&self) -> Self {
        let d = self.labels.len();
        let perp = self.relation_space.annihilator(d * d);
        let side = self.side.flip();
        let relations = perp
            .iter()
            .map(|v| self.vector_to_element(side, v))
            .collect();
        Self::build(self.labels.clone(), side, relations)
            .expect("annihilator of a valid relation space is valid")
            .with_max_words(self.max_words)
    }

    /// Relation spaces agree (both presentations must share labels and side).
    pub fn same_relation_span(&self, other: &Self) -> bool {
        if self.labels != other.labels || self.side != other.side {
            return false;
        }
        self.relation_space.reduced_rows() == other.relation_space.reduced_rows()
    }

    fn letter_index(&self, m: SubsetMask) -> Result<usize> {
        self.index
            .get(&m)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("{m} is not a generator label")))
    }

    fn check_words(&self, degree: usize) -> Result<()> {
        let d = self.labels.len() as u128;
        let words = d.checked_pow(degree as u32).unwrap_or(u128::MAX);
        if words > self.max_words {
            return Err(Error::ResourceCap(format!(
                "degree {degree} has {d}^{degree} = {words} words, cap is {}",
                self.max_words
            )));
        }
        Ok(())
    }

    /// Quotient bases for degrees `0..=max_degree`.
    pub fn tower(&self, max_degree: usize) -> Result<QuotientTower<'_, S>> {
        let mut t = QuotientTower {
            presentation: self,
            levels: Vec::new(),
        };
        t.extend_to(max_degree)?;
        Ok(t)
    }

    pub fn dim_component(&self, degree: usize) -> Result<usize> {
        Ok(self.tower(degree)?.dim(degree))
    }

    /// Dimensions of degrees `0..=max_degree`.
    pub fn dims(&self, max_degree: usize) -> Result<Vec<usize>> {
        let t = self.tower(max_degree)?;
        Ok((0..=max_degree).map(|i| t.dim(i)).collect())
    }

    pub fn quotient_coordinates(&self, e: &FreeElement<S>) -> Result<SparseVec<S>> {
        let degree = match e.degree() {
            Some(d) => d,
            None if e.is_zero() => return Ok(Vec::new()),
            None => {
                return Err(Error::InvalidArgument(format!(
                    "quotient coordinates need a homogeneous element, got {e}"
                )))
            }
        };
        self.tower(degree)?.coordinates(e)
    }

    /// The elements `w · r · w'` with `deg w = position` and `deg w' = degree - 2 - position`.
    pub fn positioned_relations(
        &self,
        degree: usize,
        position: usize,
    ) -> Result<Vec<FreeElement<S>>> {
        if degree < 2 || position > degree - 2 {
            return Err(Error::InvalidArgument(format!(
                "no relation position {position} in degree {degree}"
            )));
        }
        self.check_words(degree)?;
        let left = words_of_degree(&self.labels, position);
        let right = words_of_degree(&self.labels, degree - 2 - position);
        let mut out = Vec::new();
        for w in &left {
            let wl = FreeElement::monomial(self.side, w.clone(), S::one());
            for r in &self.relations {
                let wr = wl.multiply(r)?;
                for w2 in &right {
                    out.push(wr.multiply(&FreeElement::monomial(
                        self.side,
                        w2.clone(),
                        S::one(),
                    ))?);
                }
            }
        }
        Ok(out)
    }

    /// `dim T_i - dim <R>_i`, with `<R>_i` spanned by all `w · r · w'` over the given relations.
    pub fn dim_component_direct(&self, degree: usize) -> Result<usize> {
        self.check_words(degree)?;
        let d = self.labels.len();
        let total = d.pow(degree as u32);
        if degree < 2 {
            return Ok(total);
        }
        let mut ech = Echelon::new();
        let mut rel_vectors: Vec<Vec<(usize, usize, S)>> = Vec::new();
        for r in &self.relations {
            let mut v = Vec::new();
            for (w, c) in r.terms() {
                let l = w.letters();
                v.push((
                    self.letter_index(l[0])?,
                    self.letter_index(l[1])?,
                    c.clone(),
                ));
            }
            rel_vectors.push(v);
        }
        for m in 0..=degree - 2 {
            let right_len = degree - 2 - m;
            let left_count = d.pow(m as u32);
            let right_count = d.pow(right_len as u32);
            for left in 0..left_count {
                for rv in &rel_vectors {
                    for right in 0..right_count {
                        let v: Vec<(usize, S)> = rv
                            .iter()
                            .map(|(x, y, c)| {
                                (((left * d + x) * d + y) * right_count + right, c.clone())
                            })
                            .collect();
                        ech.insert(&sparse_from_pairs(v));
                    }
                }
            }
        }
        Ok(total - ech.rank())
    }
}

/// Canonical basis of one graded component.
#[derive(Clone, Debug)]
pub struct QuotientBasis<S> {
    degree: usize,
    free_words: Vec<Word>,
    /// For each column `f * d + x` of `A_{i-1} ⊗ W`, its position among the free words.
    column_free: Vec<Option<usize>>,
    relations: Echelon<S>,
}

impl<S: Field> QuotientBasis<S> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.free_words.len()
    }

    pub fn free_words(&self) -> &[Word] {
        &self.free_words
    }

    /// Number of columns eliminated at this degree.
    pub fn pivot_count(&self) -> usize {
        self.relations.rank()
    }

    fn to_free(&self, v: &[(usize, S)]) -> SparseVec<S> {
        self.relations
            .reduce(v)
            .into_iter()
            .map(|(c, x)| {
                (
                    self.column_free[c].expect("remainder lies on free columns"),
                    x,
                )
            })
            .collect()
    }
}

/// Quotient bases of all degrees up to some bound, borrowed from their presentation.
#[derive(Clone, Debug)]
pub struct QuotientTower<'p, S: Field> {
    presentation: &'p QuadraticPresentation<S>,
    levels: Vec<QuotientBasis<S>>,
}

impl<'p, S: Field> QuotientTower<'p, S> {
    pub fn max_degree(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, degree: usize) -> &QuotientBasis<S> {
        &self.levels[degree]
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.levels[degree].dim()
    }

    pub fn extend_to(&mut self, max_degree: usize) -> Result<()> {
        let p = self.presentation;
        let d = p.labels.len();
        while self.levels.len() <= max_degree {
            let degree = self.levels.len();
            p.check_words(degree)?;
            if degree == 0 {
                self.levels.push(QuotientBasis {
                    degree: 0,
                    free_words: vec![Word::empty()],
                    column_free: vec![Some(0)],
                    relations: Echelon::new(),
                });
                continue;
            }
            let prev = &self.levels[degree - 1];
            let mut relations = Echelon::new();
            if degree >= 2 {
                let prev2_dim = self.levels[degree - 2].dim();
                let basis = p.relation_space.reduced_rows();
                for a in 0..prev2_dim {
                    // image of a·x in A_{degree-1}, computed once per letter
                    let mut ax: Vec<Option<SparseVec<S>>> = vec![None; d];
                    for r in &basis {
                        let mut v = Vec::new();
                        for (col, c) in r {
                            let (x, y) = (col / d, col % d);
                            let coords =
                                ax[x].get_or_insert_with(|| prev.to_free(&[(a * d + x, S::one())]));
                            for (f, cf) in coords.iter() {
                                v.push((f * d + y, c.clone() * cf.clone()));
                            }
                        }
                        relations.insert(&sparse_from_pairs(v));
                    }
                }
            }
            let ncols = prev.dim() * d;
            let mut free_words = Vec::with_capacity(ncols - relations.rank());
            let mut column_free = vec![None; ncols];
            for (col, slot) in column_free.iter_mut().enumerate() {
                if !relations.is_pivot(col) {
                    *slot = Some(free_words.len());
                    let w = prev.free_words[col / d].concat(&Word::letter(p.labels[col % d]));
                    free_words.push(w);
                }
            }
            self.levels.push(QuotientBasis {
                degree,
                free_words,
                column_free,
                relations,
            });
        }
        Ok(())
    }

    /// Coordinates of a word in the free-word basis of its degree.
    pub fn word_coordinates(&self, w: &Word) -> Result<SparseVec<S>> {
        let p = self.presentation;
        let d = p.labels.len();
        if w.degree() > self.max_degree() {
            return Err(Error::InvalidArgument(format!(
                "word of degree {} beyond tower degree {}",
                w.degree(),
                self.max_degree()
            )));
        }
        let mut coords: SparseVec<S> = vec![(0, S::one())];
        for (i, &letter) in w.letters().iter().enumerate() {
            let x = p.letter_index(letter)?;
            let v: Vec<(usize, S)> = coords.into_iter().map(|(f, c)| (f * d + x, c)).collect();
            coords = self.levels[i + 1].to_free(&v);
        }
        Ok(coords)
    }

    /// Coordinates of a homogeneous element; empty exactly when it lies in the ideal.
    pub fn coordinates(&self, e: &FreeElement<S>) -> Result<SparseVec<S>> {
        if e.side() != self.presentation.side {
            return Err(Error::InvalidArgument(
                "element lives on the wrong side".to_string(),
            ));
        }
        if !e.is_homogeneous() {
            return Err(Error::InvalidArgument(format!(
                "quotient coordinates need a homogeneous element, got {e}"
            )));
        }
        let mut pairs = Vec::new();
        for (w, c) in e.terms() {
            for (f, x) in self.word_coordinates(w)? {
                pairs.push((f, c.clone() * x));
            }
        }
        Ok(sparse_from_pairs(pairs))
    }
}

/// Span of homogeneous elements of one degree, for repeated membership tests.
#[derive(Clone, Debug)]
pub struct Span<S> {
    side: Side,
    degree: Option<usize>,
    index: HashMap<Word, usize>,
    echelon: Echelon<S>,
}

impl<S: Field> Span<S> {
    pub fn new(side: Side) -> Self {
        Span {
            side,
            degree: None,
            index: HashMap::new(),
            echelon: Echelon::new(),
        }
    }

    fn check(&mut self, e: &FreeElement<S>) -> Result<()> {
        if e.side() != self.side {
            return Err(Error::InvalidArgument(
                "element lives on the wrong side".to_string(),
            ));
        }
        if e.is_zero() {
            return Ok(());
        }
        let d = e.degree().ok_or_else(|| {
            Error::InvalidArgument(format!(
                "span membership needs homogeneous elements, got {e}"
            ))
        })?;
        match self.degree {
            Some(existing) if existing != d => Err(Error::InvalidArgument(format!(
                "mixed degrees {existing} and {d} in one span"
            ))),
            _ => {
                self.degree = Some(d);
                Ok(())
            }
        }
    }

    /// Adds `e`; returns whether it enlarged the span.
    pub fn add(&mut self, e: &FreeElement<S>) -> Result<bool> {
        self.check(e)?;
        let mut v = Vec::with_capacity(e.num_terms());
        for (w, c) in e.terms() {
            let next = self.index.len();
            let i = *self.index.entry(w.clone()).or_insert(next);
            v.push((i, c.clone()));
        }
        Ok(self.echelon.insert(&sparse_from_pairs(v)).is_some())
    }

    pub fn contains(&self, e: &FreeElement<S>) -> Result<bool> {
        let mut probe = self.clone_shell();
        probe.check(e)?;
        let mut v = Vec::with_capacity(e.num_terms());
        for (w, c) in e.terms() {
            match self.index.get(w) {
                Some(&i) => v.push((i, c.clone())),
                None => return Ok(false),
            }
        }
        Ok(self.echelon.contains(&sparse_from_pairs(v)))
    }

    fn clone_shell(&self) -> Span<S> {
        Span {
            side: self.side,
            degree: self.degree,
            index: HashMap::new(),
            echelon: Echelon::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }
}

/// Is `e` in the span of `vectors`? All must be homogeneous of one degree.
pub fn in_span<S: Field>(vectors: &[FreeElement<S>], e: &FreeElement<S>) -> Result<bool> {
    let mut span = Span::new(e.side());
    for v in vectors {
        span.add(v)?;
    }
    span.contains(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_family, Family};
    use num_rational::BigRational;

    type Q = BigRational;
    type E = FreeElement<Q>;

    fn m(e: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(e.iter().copied())
    }

    fn word(side: Side, letters: &[&[usize]]) -> E {
        E::word(side, &letters.iter().map(|l| m(l)).collect::<Vec<_>>())
    }

    #[test]
    fn build_examples() {
        let q2 = QuadraticPresentation::<Q>::qn(2).unwrap();
        assert_eq!(q2.num_generators(), 3);
        assert_eq!(q2.relation_rank(), 1);
        let poly = QuadraticPresentation::<Q>::build(vec![m(&[1])], Side::Primal, vec![]).unwrap();
        assert_eq!(poly.dims(5).unwrap(), vec![1; 6]);
        let bad = word(Side::Primal, &[&[1], &[3]]);
        assert!(matches!(
            QuadraticPresentation::build(vec![m(&[1]), m(&[2])], Side::Primal, vec![bad]),
            Err(Error::Validation(_))
        ));
        let cubic = word(Side::Primal, &[&[1], &[1], &[1]]);
        assert!(QuadraticPresentation::build(vec![m(&[1])], Side::Primal, vec![cubic]).is_err());
        let dual = word(Side::Dual, &[&[1], &[1]]);
        assert!(QuadraticPresentation::build(vec![m(&[1])], Side::Primal, vec![dual]).is_err());
        assert!(
            QuadraticPresentation::<Q>::build(vec![m(&[1]), m(&[1])], Side::Primal, vec![])
                .is_err()
        );
    }

    #[test]
    fn relation_ranks() {
        assert_eq!(
            QuadraticPresentation::<Q>::qn(3).unwrap().relation_rank(),
            5
        );
        assert_eq!(
            QuadraticPresentation::<Q>::qn(1).unwrap().relation_rank(),
            0
        );
    }

    #[test]
    fn dims_small() {
        let q2 = QuadraticPresentation::<Q>::qn(2).unwrap();
        assert_eq!(q2.dims(4).unwrap(), vec![1, 3, 8, 21, 55]);
        let q3 = QuadraticPresentation::<Q>::qn(3).unwrap();
        assert_eq!(q3.dim_component(2).unwrap(), 44);
        assert_eq!(q3.dim_component(0).unwrap(), 1);
        let q3_dual = q3.koszul_dual();
        assert_eq!(q3_dual.dims(4).unwrap(), vec![1, 7, 5, 1, 0]);
    }

    #[test]
    fn incremental_and_direct_agree() {
        for n in 1..=2 {
            for p in [
                QuadraticPresentation::<Q>::qn(n).unwrap(),
                QuadraticPresentation::<Q>::xn(n).unwrap(),
                QuadraticPresentation::<Q>::qn(n).unwrap().koszul_dual(),
            ] {
                let dims = p.dims(4).unwrap();
                for (i, &dim) in dims.iter().enumerate() {
                    assert_eq!(p.dim_component_direct(i).unwrap(), dim, "n={n} degree {i}");
                }
            }
        }
        let q3 = QuadraticPresentation::<Q>::qn(3).unwrap();
        assert_eq!(q3.dim_component_direct(3).unwrap(), 274);
    }

    #[test]
    fn koszul_dual_examples() {
        let q1 = QuadraticPresentation::<Q>::qn(1).unwrap();
        let d1 = q1.koszul_dual();
        assert_eq!(d1.relation_rank(), 1);
        assert_eq!(d1.dims(3).unwrap(), vec![1, 1, 0, 0]);
        let q2 = QuadraticPresentation::<Q>::qn(2).unwrap();
        let d2 = q2.koszul_dual();
        assert_eq!(d2.relation_rank(), 8);
        assert_eq!(d2.side(), Side::Dual);
        assert_eq!(d2.dims(3).unwrap(), vec![1, 3, 1, 0]);
        assert!(d2.koszul_dual().same_relation_span(&q2));
    }

    #[test]
    fn coordinates_examples() {
        let x2 = QuadraticPresentation::<Q>::xn(2).unwrap();
        let rel = &word(Side::Primal, &[&[1, 2], &[2]]) - &word(Side::Primal, &[&[1, 2], &[1]]);
        assert!(x2.quotient_coordinates(&rel).unwrap().is_empty());
        assert!(x2
            .quotient_coordinates(&E::zero(Side::Primal))
            .unwrap()
            .is_empty());
        let mixed = &word(Side::Primal, &[&[1]]) + &word(Side::Primal, &[&[1], &[1]]);
        assert!(x2.quotient_coordinates(&mixed).is_err());

        let q2 = QuadraticPresentation::<Q>::qn(2).unwrap();
        let tower = q2.tower(2).unwrap();
        let mut basis = Echelon::new();
        let ys = enumerate_family(2, &Family::Y, 2).unwrap();
        assert_eq!(ys.len(), 8);
        for s in &ys {
            let c = tower.word_coordinates(&Word::from(s)).unwrap();
            assert!(basis.insert(&c).is_some());
        }
    }

    #[test]
    fn free_words_are_sorted_and_counted() {
        let q2 = QuadraticPresentation::<Q>::qn(2).unwrap();
        let t = q2.tower(3).unwrap();
        for i in 0..=3 {
            let lvl = t.level(i);
            assert!(lvl.free_words().windows(2).all(|w| w[0] < w[1]));
            assert_eq!(lvl.degree(), i);
        }
        assert_eq!(t.level(2).pivot_count(), 1);
    }

    #[test]
    fn span_membership() {
        let q3 = QuadraticPresentation::<Q>::qn(3).unwrap();
        let a = m(&[1, 2, 3]);
        let v3: E = crate::presentations::make_v(3, a, a).unwrap();
        let mut left = q3.positioned_relations(3, 0).unwrap();
        let right = q3.positioned_relations(3, 1).unwrap();
        assert!(in_span(&left, &v3).unwrap());
        assert!(in_span(&right, &v3).unwrap());
        left.extend(right);
        assert!(in_span(&left, &v3).unwrap());
        assert!(in_span(&left, &E::zero(Side::Primal)).unwrap());

        let q2 = QuadraticPresentation::<Q>::qn(2).unwrap();
        let square = word(Side::Primal, &[&[1], &[1]]);
        assert!(!in_span(q2.relations(), &square).unwrap());
        let mixed = vec![word(Side::Primal, &[&[1]]), square.clone()];
        assert!(in_span(&mixed, &square).is_err());
    }

    #[test]
    fn resource_cap() {
        let q2 = QuadraticPresentation::<Q>::qn(2)
            .unwrap()
            .with_max_words(100);
        assert!(matches!(q2.dims(5), Err(Error::ResourceCap(_))));
        assert!(q2.dims(4).is_ok());
    }
}
