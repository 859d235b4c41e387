//! Relation families of `Q_n`, of its associated graded `X_n`, of the dual
//! `Q_n^!` and of `gr Q_n^!`, together with the monomials `S(A:B)` that span `Q_n^!`.
//!
//! Subsets `B = {b_1 > b_2 > ... > b_k}` are always listed in decreasing order.
//! `v(∅)` is read as zero: any monomial containing the empty label is dropped.

use itertools::Itertools;

use crate::combinatorics::SubsetMask;
use crate::error::{Error, Result};
use crate::freealgebra::{FreeElement, Side, Word};
use crate::scalar::Field;

/// Which relation family a [`RelationFamily`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    QRels,
    XRels,
    S1,
    S2,
    S3,
    S4,
    S1Bar,
    S2Bar,
    S3Bar,
}

impl RelationKind {
    pub fn side(self) -> Side {
        match self {
            RelationKind::QRels | RelationKind::XRels => Side::Primal,
            _ => Side::Dual,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationFamily<S: Field> {
    pub kind: RelationKind,
    pub n: usize,
    pub elements: Vec<FreeElement<S>>,
}

impl<S: Field> RelationFamily<S> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > SubsetMask::MAX_N {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds the maximum {}",
            SubsetMask::MAX_N
        )));
    }
    Ok(())
}

/// Elements of `B` in decreasing order.
fn descending(b: SubsetMask) -> Vec<usize> {
    let mut v: Vec<usize> = b.elements().collect();
    v.reverse();
    v
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Adds `coeff * C_{idx[0]} C_{idx[1]} ...` unless a chain entry is empty.
fn push_chain_word<S: Field>(
    out: &mut FreeElement<S>,
    chain: &[SubsetMask],
    idx: &[usize],
    coeff: i64,
) {
    if idx.iter().any(|&i| chain[i].is_empty()) {
        return;
    }
    let word = Word::new(idx.iter().map(|&i| chain[i]).collect());
    out.add_term(word, S::from_i64(coeff));
}

/// The three term groups of `V(A:B)` for one ordering `b` of `B`, with
/// `C_p = A ∖ b_1 ∖ ... ∖ b_p`:
/// `C_0 C_1 ... C_{k-1} + Σ_u (-1)^u C_1 ... C_u C_u ... C_{k-1} + (-1)^k C_1 ... C_k`.
fn chain_terms<S: Field>(out: &mut FreeElement<S>, a: SubsetMask, b: &[usize], sign: i64) {
    let k = b.len();
    let mut chain = Vec::with_capacity(k + 1);
    chain.push(a);
    for &x in b {
        let last = *chain.last().expect("nonempty");
        chain.push(last.without(x));
    }
    let head: Vec<usize> = (0..k).collect();
    push_chain_word(out, &chain, &head, sign);
    for u in 1..k {
        let mut idx: Vec<usize> = (1..u).collect();
        idx.push(u);
        idx.push(u);
        idx.extend(u + 1..k);
        let s = if u % 2 == 0 { sign } else { -sign };
        push_chain_word(out, &chain, &idx, s);
    }
    let tail: Vec<usize> = (1..=k).collect();
    push_chain_word(
        out,
        &chain,
        &tail,
        if k.is_multiple_of(2) { sign } else { -sign },
    );
}

fn validate_pair(n: usize, a: SubsetMask, b: &[usize]) -> Result<()> {
    check_n(n)?;
    if a.is_empty() || !a.fits(n) {
        return Err(Error::InvalidArgument(format!(
            "A = {a} must be a nonempty subset of {{1..{n}}}"
        )));
    }
    if b.iter().any(|&x| !a.contains(x)) {
        return Err(Error::InvalidArgument(format!(
            "B must be a subset of A = {a}"
        )));
    }
    if b.iter().unique().count() != b.len() {
        return Err(Error::InvalidArgument(
            "B has repeated elements".to_string(),
        ));
    }
    Ok(())
}

/// `Σ_{σ ∈ Sym(B)} sgn(σ) σ{chain terms}` for the listed ordering of `B`.
///
/// Listing `B` in another order multiplies the result by the sign of the
/// reordering; [`make_v`] uses the decreasing order.
pub fn make_v_ordered<S: Field>(n: usize, a: SubsetMask, b: &[usize]) -> Result<FreeElement<S>> {
    validate_pair(n, a, b)?;
    if b.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "V(A:B) needs |B| >= 2, got |B| = {}",
            b.len()
        )));
    }
    let mut out = FreeElement::zero(Side::Primal);
    for perm in (0..b.len()).permutations(b.len()) {
        let permuted: Vec<usize> = perm.iter().map(|&i| b[i]).collect();
        chain_terms(&mut out, a, &permuted, permutation_sign(&perm));
    }
    Ok(out)
}

/// `V(A:B)` for `∅ ≠ B ⊆ A ⊆ {1..n}`, `|B| >= 2`; homogeneous of degree `|B|`.
pub fn make_v<S: Field>(n: usize, a: SubsetMask, b: SubsetMask) -> Result<FreeElement<S>> {
    if !b.is_subset_of(a) {
        return Err(Error::InvalidArgument(format!(
            "B = {b} is not a subset of A = {a}"
        )));
    }
    make_v_ordered(n, a, &descending(b))
}

/// `Σ_{σ ∈ Sym(B)} sgn(σ) σ{v(A∖b_1) v(A∖b_1∖b_2) ... v(A∖b_1...∖b_{k-1})}`,
/// homogeneous of degree `|B| - 1`.
pub fn alternating_tail<S: Field>(
    n: usize,
    a: SubsetMask,
    b: SubsetMask,
) -> Result<FreeElement<S>> {
    let order = descending(b);
    validate_pair(n, a, &order)?;
    if order.len() < 2 {
        return Err(Error::InvalidArgument(
            "alternating tail needs |B| >= 2".to_string(),
        ));
    }
    let k = order.len();
    let mut out = FreeElement::zero(Side::Primal);
    for perm in (0..k).permutations(k) {
        let mut cur = a;
        let mut letters = Vec::with_capacity(k - 1);
        for &i in &perm[..k - 1] {
            cur = cur.without(order[i]);
            letters.push(cur);
        }
        if letters.iter().all(|m| !m.is_empty()) {
            out.add_term(Word::new(letters), S::from_i64(permutation_sign(&perm)));
        }
    }
    Ok(out)
}

/// Pairs `{i > j}` inside `A`, ordered by `(i, j)`.
fn descending_pairs(a: SubsetMask) -> Vec<(usize, usize)> {
    let e: Vec<usize> = a.elements().collect();
    let mut out = Vec::new();
    for (x, &i) in e.iter().enumerate() {
        for &j in &e[..x] {
            out.push((i, j));
        }
    }
    out
}

/// `V(A:{i,j})` for every `A` with `|A| >= 2` and every pair in `A`.
pub fn relations_q<S: Field>(n: usize) -> Result<RelationFamily<S>> {
    check_n(n)?;
    let mut elements = Vec::new();
    for a in SubsetMask::all_nonempty(n).filter(|a| a.len() >= 2) {
        for (i, j) in descending_pairs(a) {
            elements.push(make_v_ordered(n, a, &[i, j])?);
        }
    }
    Ok(RelationFamily {
        kind: RelationKind::QRels,
        n,
        elements,
    })
}

/// `v(A)(v(A∖i) - v(A∖j))` for every `A` and pair `i > j` in `A`.
pub fn relations_x<S: Field>(n: usize) -> Result<RelationFamily<S>> {
    check_n(n)?;
    let mut elements = Vec::new();
    for a in SubsetMask::all_nonempty(n).filter(|a| a.len() >= 2) {
        for (i, j) in descending_pairs(a) {
            let mut e = FreeElement::zero(Side::Primal);
            e.add_term(Word::new(vec![a, a.without(i)]), S::one());
            e.add_term(Word::new(vec![a, a.without(j)]), -S::one());
            elements.push(e);
        }
    }
    Ok(RelationFamily {
        kind: RelationKind::XRels,
        n,
        elements,
    })
}

fn dual_word<S: Field>(letters: &[SubsetMask]) -> FreeElement<S> {
    FreeElement::word(Side::Dual, letters)
}

/// `v*(A) v*(B)` is a relation unless `B = A` or `B` is `A` minus one element.
fn s1_family<S: Field>(n: usize, kind: RelationKind) -> RelationFamily<S> {
    let mut elements = Vec::new();
    for a in SubsetMask::all_nonempty(n) {
        for b in SubsetMask::all_nonempty(n) {
            let kept = b == a || (b.is_subset_of(a) && b.len() + 1 == a.len());
            if !kept {
                elements.push(dual_word(&[a, b]));
            }
        }
    }
    RelationFamily { kind, n, elements }
}

/// `v*(C) Σ_{i∈C} v*(C∖i)`, plus `v*(C)^2` when `with_square`.
fn s2_family<S: Field>(n: usize, with_square: bool, kind: RelationKind) -> RelationFamily<S> {
    let mut elements = Vec::new();
    for c in SubsetMask::all_nonempty(n).filter(|c| c.len() >= 2) {
        let mut e = FreeElement::zero(Side::Dual);
        for i in c.elements() {
            e.add_term(Word::new(vec![c, c.without(i)]), S::one());
        }
        if with_square {
            e.add_term(Word::new(vec![c, c]), S::one());
        }
        elements.push(e);
    }
    RelationFamily { kind, n, elements }
}

/// The four spanning sets of `Q^⊥`.
#[derive(Clone, Debug)]
pub struct DualRelationSets<S: Field> {
    pub s1: RelationFamily<S>,
    pub s2: RelationFamily<S>,
    pub s3: RelationFamily<S>,
    pub s4: RelationFamily<S>,
}

impl<S: Field> DualRelationSets<S> {
    pub fn sizes(&self) -> [usize; 4] {
        [self.s1.len(), self.s2.len(), self.s3.len(), self.s4.len()]
    }

    pub fn all(&self) -> Vec<FreeElement<S>> {
        [&self.s1, &self.s2, &self.s3, &self.s4]
            .iter()
            .flat_map(|f| f.elements.iter().cloned())
            .collect()
    }
}

pub fn dual_relation_sets<S: Field>(n: usize) -> Result<DualRelationSets<S>> {
    check_n(n)?;
    let full = SubsetMask::full(n);
    let mut s3 = Vec::new();
    for c in SubsetMask::all_nonempty(n).filter(|&c| c != full) {
        let mut e = FreeElement::zero(Side::Dual);
        for i in (1..=n).filter(|&i| !c.contains(i)) {
            e.add_term(Word::new(vec![c.with(i), c]), S::one());
        }
        e.add_term(Word::new(vec![c, c]), S::one());
        s3.push(e);
    }
    let s4 = if n == 0 {
        Vec::new()
    } else {
        vec![dual_word(&[full, full])]
    };
    Ok(DualRelationSets {
        s1: s1_family(n, RelationKind::S1),
        s2: s2_family(n, true, RelationKind::S2),
        s3: RelationFamily {
            kind: RelationKind::S3,
            n,
            elements: s3,
        },
        s4: RelationFamily {
            kind: RelationKind::S4,
            n,
            elements: s4,
        },
    })
}

/// Relations of the associated graded of the dual.
#[derive(Clone, Debug)]
pub struct GrDualRelationSets<S: Field> {
    pub s1: RelationFamily<S>,
    pub s2: RelationFamily<S>,
    pub s3: RelationFamily<S>,
}

impl<S: Field> GrDualRelationSets<S> {
    pub fn sizes(&self) -> [usize; 3] {
        [self.s1.len(), self.s2.len(), self.s3.len()]
    }

    pub fn all(&self) -> Vec<FreeElement<S>> {
        [&self.s1, &self.s2, &self.s3]
            .iter()
            .flat_map(|f| f.elements.iter().cloned())
            .collect()
    }
}

pub fn gr_dual_relation_sets<S: Field>(n: usize) -> Result<GrDualRelationSets<S>> {
    check_n(n)?;
    let squares = SubsetMask::all_nonempty(n)
        .map(|c| dual_word(&[c, c]))
        .collect();
    Ok(GrDualRelationSets {
        s1: s1_family(n, RelationKind::S1Bar),
        s2: s2_family(n, false, RelationKind::S2Bar),
        s3: RelationFamily {
            kind: RelationKind::S3Bar,
            n,
            elements: squares,
        },
    })
}

/// `S(A:B) = s(A) s(A∖b_1) ... s(A∖b_1...∖b_k)` with `min A ∉ B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualBasisWord {
    pub a: SubsetMask,
    pub b: SubsetMask,
    pub word: Word,
}

impl DualBasisWord {
    pub fn new(a: SubsetMask, b: SubsetMask) -> Result<Self> {
        if a.is_empty() || !b.is_subset_of(a) || b.contains(a.min_element().unwrap_or(0)) {
            return Err(Error::InvalidArgument(format!(
                "S(A:B) needs B ⊆ A, min A ∉ B; got A = {a}, B = {b}"
            )));
        }
        let mut letters = vec![a];
        let mut cur = a;
        for x in descending(b) {
            cur = cur.without(x);
            letters.push(cur);
        }
        Ok(DualBasisWord {
            a,
            b,
            word: Word::new(letters),
        })
    }

    pub fn degree(&self) -> usize {
        self.word.degree()
    }

    pub fn element<S: Field>(&self) -> FreeElement<S> {
        FreeElement::monomial(Side::Dual, self.word.clone(), S::one())
    }
}

/// All `S(A:B)` (the empty word excluded), ordered by degree, then `A`, then `B`.
pub fn dual_basis_words(n: usize) -> Result<Vec<DualBasisWord>> {
    check_n(n)?;
    let mut out = Vec::new();
    for a in SubsetMask::all_nonempty(n) {
        let min = a.min_element().expect("nonempty");
        for b in a.without(min).subsets() {
            out.push(DualBasisWord::new(a, b)?);
        }
    }
    out.sort_by(|x, y| {
        x.degree()
            .cmp(&y.degree())
            .then(x.a.cmp(&y.a))
            .then(x.b.cmp(&y.b))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    type E = FreeElement<Q>;

    fn m(e: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(e.iter().copied())
    }

    fn w(terms: &[(i64, &[&[usize]])]) -> E {
        E::from_terms(
            Side::Primal,
            terms.iter().map(|(c, letters)| {
                (
                    Word::new(letters.iter().map(|l| m(l)).collect()),
                    Q::from_i64(*c),
                )
            }),
        )
    }

    #[test]
    fn v_of_two_element_set() {
        let v: E = make_v(2, m(&[1, 2]), m(&[1, 2])).unwrap();
        let expected = w(&[
            (1, &[&[1, 2], &[1]]),
            (-1, &[&[1, 2], &[2]]),
            (-1, &[&[1], &[1]]),
            (1, &[&[2], &[2]]),
        ]);
        assert_eq!(v, expected);
    }

    #[test]
    fn v_with_proper_pair() {
        let v: E = make_v(3, m(&[1, 2, 3]), m(&[2, 3])).unwrap();
        // b_1 = 3, b_2 = 2, so A∖b_1 = {1,2} carries the positive sign
        let expected = w(&[
            (1, &[&[1, 2, 3], &[1, 2]]),
            (-1, &[&[1, 2], &[1, 2]]),
            (1, &[&[1, 2], &[1]]),
            (-1, &[&[1, 2, 3], &[1, 3]]),
            (1, &[&[1, 3], &[1, 3]]),
            (-1, &[&[1, 3], &[1]]),
        ]);
        assert_eq!(v, expected);
    }

    #[test]
    fn v_is_antisymmetric_in_the_ordering() {
        let a = m(&[1, 2, 3]);
        let x: E = make_v_ordered(3, a, &[1, 3]).unwrap();
        let y: E = make_v_ordered(3, a, &[3, 1]).unwrap();
        assert!((&x + &y).is_zero());
    }

    #[test]
    fn v_is_homogeneous_of_degree_b() {
        for (a, b) in [
            (m(&[1, 2, 3]), m(&[1, 2, 3])),
            (m(&[1, 2, 3, 4]), m(&[2, 3, 4])),
        ] {
            let v: E = make_v(4, a, b).unwrap();
            assert_eq!(v.degree(), Some(b.len()));
        }
    }

    #[test]
    fn v_argument_errors() {
        assert!(make_v::<Q>(3, m(&[1, 2]), m(&[1])).is_err());
        assert!(make_v::<Q>(3, m(&[1, 2]), m(&[1, 3])).is_err());
        assert!(make_v::<Q>(2, m(&[1, 3]), m(&[1, 3])).is_err());
    }

    #[test]
    fn family_sizes() {
        assert!(relations_q::<Q>(1).unwrap().is_empty());
        assert_eq!(relations_q::<Q>(2).unwrap().len(), 1);
        assert_eq!(relations_q::<Q>(3).unwrap().len(), 6);
        assert!(relations_x::<Q>(1).unwrap().is_empty());
        assert_eq!(relations_x::<Q>(3).unwrap().len(), 6);
        let x2 = relations_x::<Q>(2).unwrap();
        assert_eq!(
            x2.elements[0],
            w(&[(1, &[&[1, 2], &[1]]), (-1, &[&[1, 2], &[2]])])
        );
        assert_eq!(dual_relation_sets::<Q>(2).unwrap().sizes(), [4, 1, 2, 1]);
        assert_eq!(dual_relation_sets::<Q>(1).unwrap().sizes(), [0, 0, 0, 1]);
        assert_eq!(gr_dual_relation_sets::<Q>(2).unwrap().sizes(), [4, 1, 3]);
        assert_eq!(gr_dual_relation_sets::<Q>(1).unwrap().sizes(), [0, 0, 1]);
    }

    #[test]
    fn s_sets_have_expected_shape() {
        let sets = dual_relation_sets::<Q>(3).unwrap();
        for e in sets.all() {
            assert_eq!(e.side(), Side::Dual);
            assert_eq!(e.degree(), Some(2));
        }
        assert_eq!(sets.s4.elements[0].to_string(), "v*(123)v*(123)");
    }

    #[test]
    fn dual_basis_words_examples() {
        let two = dual_basis_words(2).unwrap();
        let rendered: Vec<String> = two.iter().map(|d| format!("{:?}", d.word)).collect();
        assert_eq!(rendered, ["v(1)", "v(2)", "v(12)", "v(12)v(1)"]);
        let three = dual_basis_words(3).unwrap();
        assert_eq!(three.len(), 13);
        assert!(three
            .iter()
            .any(|d| d.word == Word::new(vec![m(&[1, 2, 3]), m(&[1, 2]), m(&[1])])));
        assert_eq!(three.iter().filter(|d| d.degree() == 2).count(), 5);
        assert!(DualBasisWord::new(m(&[1, 2]), m(&[1])).is_err());
    }

    #[test]
    fn alternating_tail_is_cyclic_sum_of_v() {
        let a = m(&[1, 2, 3]);
        let alt: E = alternating_tail(3, a, a).unwrap();
        let mut cyc = E::zero(Side::Primal);
        for (p, q) in [(3, 2), (2, 1), (1, 3)] {
            cyc = &cyc + &make_v_ordered(3, a, &[p, q]).unwrap();
        }
        assert_eq!(alt, cyc);
        assert_eq!(alt.degree(), Some(2));
    }
}
