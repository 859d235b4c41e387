//! Sparse row reduction over a [`Field`].
//!
//! Rows are kept in echelon form keyed by their leading (smallest) column, so
//! reducing a vector against the basis leaves a remainder supported only on
//! non-pivot columns. That remainder is the canonical representative of the
//! vector modulo the span.

use std::collections::{BTreeMap, HashMap};

use crate::scalar::Field;

/// Sparse vector as `(column, value)` pairs, sorted by column, no zeros.
pub type SparseVec<S> = Vec<(usize, S)>;

/// Collects `(column, value)` pairs into a [`SparseVec`], summing duplicates.
pub fn sparse_from_pairs<S: Field, I: IntoIterator<Item = (usize, S)>>(pairs: I) -> SparseVec<S> {
    let mut acc: BTreeMap<usize, S> = BTreeMap::new();
    for (c, v) in pairs {
        accumulate(&mut acc, c, v);
    }
    acc.into_iter().collect()
}

fn accumulate<S: Field>(acc: &mut BTreeMap<usize, S>, col: usize, v: S) {
    if v.is_zero() {
        return;
    }
    match acc.get_mut(&col) {
        Some(x) => {
            let s = x.clone() + v;
            if s.is_zero() {
                acc.remove(&col);
            } else {
                *x = s;
            }
        }
        None => {
            acc.insert(col, v);
        }
    }
}

/// Rows in echelon form; each row is normalised to a leading 1.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    rows: HashMap<usize, SparseVec<S>>,
}

impl<S: Field> Default for Echelon<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Field> Echelon<S> {
    pub fn new() -> Self {
        Echelon {
            rows: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.keys().copied().collect();
        p.sort_unstable();
        p
    }

    fn reduce_map(&self, v: &mut BTreeMap<usize, S>) {
        let mut cursor = 0usize;
        while let Some((&col, _)) = v.range(cursor..).next() {
            cursor = col + 1;
            if let Some(row) = self.rows.get(&col) {
                let factor = v.remove(&col).expect("entry present");
                for (c, x) in row.iter().skip(1) {
                    accumulate(v, *c, -(factor.clone() * x.clone()));
                }
            }
        }
    }

    /// Remainder of `v` modulo the span; supported on non-pivot columns only.
    pub fn reduce(&self, v: &[(usize, S)]) -> SparseVec<S> {
        let mut map: BTreeMap<usize, S> = BTreeMap::new();
        for (c, x) in v {
            accumulate(&mut map, *c, x.clone());
        }
        self.reduce_map(&mut map);
        map.into_iter().collect()
    }

    pub fn contains(&self, v: &[(usize, S)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns its new pivot column, or `None` if it was dependent.
    pub fn insert(&mut self, v: &[(usize, S)]) -> Option<usize> {
        let rem = self.reduce(v);
        let (pivot, lead) = rem.first().cloned()?;
        let inv = S::one() / lead;
        let row: SparseVec<S> = rem.into_iter().map(|(c, x)| (c, x * inv.clone())).collect();
        self.rows.insert(pivot, row);
        Some(pivot)
    }

    /// Rows in reduced echelon form (zero at every other pivot), by increasing pivot.
    pub fn reduced_rows(&self) -> Vec<SparseVec<S>> {
        self.pivots()
            .into_iter()
            .map(|p| {
                let row = &self.rows[&p];
                let mut tail = self.reduce(&row[1..]);
                tail.insert(0, (p, S::one()));
                tail
            })
            .collect()
    }

    /// Basis of the annihilator `{u ∈ F^ncols | Σ_c row[c] u[c] = 0 for every row}`,
    /// one vector per non-pivot column, in increasing column order.
    pub fn annihilator(&self, ncols: usize) -> Vec<SparseVec<S>> {
        let reduced = self.reduced_rows();
        let mut by_free: HashMap<usize, Vec<(usize, S)>> = HashMap::new();
        for row in &reduced {
            let pivot = row[0].0;
            for (c, x) in row.iter().skip(1) {
                by_free.entry(*c).or_default().push((pivot, -x.clone()));
            }
        }
        (0..ncols)
            .filter(|c| !self.is_pivot(*c))
            .map(|f| {
                let mut v = by_free.remove(&f).unwrap_or_default();
                v.push((f, S::one()));
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}

/// Rank of a list of sparse vectors.
pub fn rank_of<S: Field>(vectors: &[SparseVec<S>]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}
