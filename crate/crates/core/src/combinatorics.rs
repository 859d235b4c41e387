//! Subsets of `{1..n}`, strings of subsets, and the string families that
//! index monomial bases of `Q_n` and its subalgebras.
//!
//! A string `(B_1, ..., B_l)` splits into maximal descending runs (its
//! skeleton). The `∨` operation replaces every run by the canonical chain that
//! starts at the run's head and repeatedly drops the largest element; strings
//! fixed by `∨` form the family `Y`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of `{1, ..., 16}`; element `i` is bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(u16);

impl SubsetMask {
    /// Largest supported ambient size.
    pub const MAX_N: usize = 16;

    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u16) -> Self {
        SubsetMask(bits)
    }

    /// Builds a subset from its elements. Panics on an element outside `1..=16`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut bits = 0u16;
        for e in elements {
            assert!(
                (1..=Self::MAX_N).contains(&e),
                "subset element {e} outside 1..={}",
                Self::MAX_N
            );
            bits |= 1 << (e - 1);
        }
        SubsetMask(bits)
    }

    pub fn singleton(e: usize) -> Self {
        Self::from_elements([e])
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_N);
        if n == 16 {
            SubsetMask(u16::MAX)
        } else {
            SubsetMask((1u16 << n) - 1)
        }
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=Self::MAX_N).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    pub const fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 16 - self.0.leading_zeros() as usize)
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn without(self, e: usize) -> Self {
        if (1..=Self::MAX_N).contains(&e) {
            SubsetMask(self.0 & !(1 << (e - 1)))
        } else {
            self
        }
    }

    pub fn with(self, e: usize) -> Self {
        SubsetMask(self.0 | Self::singleton(e).0)
    }

    pub const fn union(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub const fn difference(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        (1..=Self::MAX_N).filter(move |&e| self.0 & (1 << (e - 1)) != 0)
    }

    /// True when no element exceeds `n`.
    pub fn fits(self, n: usize) -> bool {
        n >= Self::MAX_N || self.0 >> n == 0
    }

    /// `{a + 1 | a ∈ A}`; `None` if that would leave `{1..16}`.
    pub fn shifted_up(self) -> Option<Self> {
        (self.0 & 0x8000 == 0).then_some(SubsetMask(self.0 << 1))
    }

    /// All nonempty subsets of `{1..n}` in increasing mask order.
    pub fn all_nonempty(n: usize) -> impl Iterator<Item = SubsetMask> {
        assert!(n <= Self::MAX_N);
        let top = 1u32 << n;
        (1..top).map(|b| SubsetMask(b as u16))
    }

    /// Subsets of `self` (including `∅` and `self`) in increasing mask order.
    pub fn subsets(self) -> Vec<SubsetMask> {
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = 0u16;
        loop {
            out.push(SubsetMask(sub));
            if sub == self.0 {
                break;
            }
            sub = (sub.wrapping_sub(self.0)) & self.0;
        }
        out
    }

    /// Compact label: `12` for `{1,2}`, `1,10` once an element needs two digits.
    pub fn compact(self) -> String {
        let elems: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        if self.max_element().unwrap_or(0) >= 10 {
            elems.join(",")
        } else {
            elems.concat()
        }
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", elems.join(","))
    }
}

/// A finite sequence of nonempty subsets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BlockString {
    blocks: Vec<SubsetMask>,
}

impl BlockString {
    pub fn new(blocks: Vec<SubsetMask>) -> Self {
        BlockString { blocks }
    }

    pub fn empty() -> Self {
        BlockString { blocks: Vec::new() }
    }

    /// Convenience constructor from element lists, e.g. `&[&[1, 2], &[1]]`.
    pub fn from_sets(sets: &[&[usize]]) -> Self {
        BlockString::new(
            sets.iter()
                .map(|s| SubsetMask::from_elements(s.iter().copied()))
                .collect(),
        )
    }

    pub fn blocks(&self) -> &[SubsetMask] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<SubsetMask> {
        self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Sum of block cardinalities.
    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn concat(&self, other: &BlockString) -> BlockString {
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&other.blocks);
        BlockString { blocks }
    }

    pub fn substring(&self, start: usize, end: usize) -> BlockString {
        BlockString::new(self.blocks[start..end].to_vec())
    }

    /// Checks that every block is nonempty and, if `n` is given, lies in `{1..n}`.
    pub fn validate(&self, n: Option<usize>) -> Result<()> {
        for (i, b) in self.blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidString(format!(
                    "empty block at position {}",
                    i + 1
                )));
            }
            if let Some(n) = n {
                if !b.fits(n) {
                    return Err(Error::InvalidString(format!(
                        "block {b} at position {} is not a subset of {{1..{n}}}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BlockString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BlockString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Skeleton `1 = n_1 < n_2 < ... < n_t = l + 1` of a string (1-based, as usual).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Skeleton {
    indices: Vec<usize>,
}

impl Skeleton {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Maximal runs as `(start, length)` with 0-based `start`.
    pub fn segments(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.indices.windows(2).map(|w| (w[0] - 1, w[1] - w[0]))
    }
}

/// Does `next` continue the run headed by `head` that already has `run_len` blocks?
fn continues_run(head: SubsetMask, run_len: usize, next: SubsetMask) -> bool {
    next.is_subset_of(head) && next.len() + run_len == head.len()
}

/// Computes the skeleton by the run-breaking recursion.
pub fn skeleton(s: &BlockString) -> Result<Skeleton> {
    s.validate(None)?;
    let blocks = s.blocks();
    let l = blocks.len();
    let mut indices = vec![1];
    let mut start = 0usize;
    while start < l {
        let head = blocks[start];
        let mut j = start + 1;
        while j < l && continues_run(head, j - start, blocks[j]) {
            j += 1;
        }
        indices.push(j + 1);
        start = j;
    }
    Ok(Skeleton { indices })
}

/// `(A:j)`: `A`, then `j - 1` further blocks, each dropping the largest element of the previous one.
pub fn chain_expand(a: SubsetMask, j: usize) -> Result<BlockString> {
    if j == 0 || j > a.len() {
        return Err(Error::InvalidArgument(format!(
            "chain length {j} out of range 1..={} for {a}",
            a.len()
        )));
    }
    let mut blocks = Vec::with_capacity(j);
    let mut cur = a;
    blocks.push(cur);
    for _ in 1..j {
        cur = cur.without(cur.max_element().expect("chain stays nonempty"));
        blocks.push(cur);
    }
    Ok(BlockString::new(blocks))
}

/// Block that follows `run_len` canonical chain blocks headed by `head`, if any.
fn next_chain_block(head: SubsetMask, run_len: usize) -> Option<SubsetMask> {
    if run_len >= head.len() {
        return None;
    }
    let mut cur = head;
    for _ in 0..run_len {
        cur = cur.without(cur.max_element()?);
    }
    Some(cur)
}

/// The `∨` normal form: every maximal run replaced by its canonical chain.
pub fn vee(s: &BlockString) -> Result<BlockString> {
    let sk = skeleton(s)?;
    let mut blocks = Vec::with_capacity(s.len());
    for (start, len) in sk.segments() {
        blocks.extend(chain_expand(s.blocks()[start], len)?.into_blocks());
    }
    Ok(BlockString::new(blocks))
}

/// Heads and lengths of the maximal runs, i.e. the `(A_i : j_i)` factors of a `Y`-string.
pub fn chain_factors(s: &BlockString) -> Result<Vec<(SubsetMask, usize)>> {
    let sk = skeleton(s)?;
    Ok(sk
        .segments()
        .map(|(start, len)| (s.blocks()[start], len))
        .collect())
}

/// The string families used to index bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Fixed points of `∨`.
    Y,
    /// `Y` strings whose blocks all contain 1.
    Y1,
    /// `Y1` strings whose blocks all have at least two elements.
    Y1Dagger,
    /// `Y` strings whose blocks all avoid 1.
    YHat1,
    /// Nonempty `Y1` strings whose last chain factor is exactly `(head : len)`.
    U { head: SubsetMask, len: usize },
    /// Nonempty `Y1` strings whose last factor `(A:j)` has `tail ⊆ A` and `|A| - j = |tail|`.
    Z { tail: SubsetMask },
    /// `Y` strings made of a nonempty `Y1` prefix followed by a nonempty `YHat1` suffix.
    W,
}

impl Family {
    pub fn validate(&self, n: usize) -> Result<()> {
        if n > SubsetMask::MAX_N {
            return Err(Error::InvalidArgument(format!(
                "n = {n} exceeds the maximum {}",
                SubsetMask::MAX_N
            )));
        }
        match *self {
            Family::U { head, len } => {
                if !head.fits(n) || !head.contains(1) {
                    return Err(Error::InvalidArgument(format!(
                        "U(A:j) needs 1 ∈ A ⊆ {{1..{n}}}, got A = {head}"
                    )));
                }
                if len == 0 || len > head.len() {
                    return Err(Error::InvalidArgument(format!(
                        "U(A:j) needs 1 <= j <= |A|, got j = {len}"
                    )));
                }
            }
            Family::Z { tail } if !tail.fits(n) || tail.contains(1) => {
                return Err(Error::InvalidArgument(format!(
                    "Z(B) needs B ⊆ {{2..{n}}}, got B = {tail}"
                )));
            }
            _ => {}
        }
        Ok(())
    }

    /// Whether the empty string belongs to the family.
    pub fn contains_empty(&self) -> bool {
        matches!(
            self,
            Family::Y | Family::Y1 | Family::Y1Dagger | Family::YHat1
        )
    }

    fn block_allowed(&self, b: SubsetMask) -> bool {
        match self {
            Family::Y | Family::W => true,
            Family::Y1 | Family::U { .. } | Family::Z { .. } => b.contains(1),
            Family::Y1Dagger => b.contains(1) && b.len() > 1,
            Family::YHat1 => !b.contains(1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Y => write!(f, "Y"),
            Family::Y1 => write!(f, "Y(1)"),
            Family::Y1Dagger => write!(f, "Y(1)†"),
            Family::YHat1 => write!(f, "Y(1̂)"),
            Family::U { head, len } => write!(f, "U({head}:{len})"),
            Family::Z { tail } => write!(f, "Z({tail})"),
            Family::W => write!(f, "W"),
        }
    }
}

/// Membership test, computed from the definition via `∨`.
pub fn in_family(s: &BlockString, family: &Family, n: usize) -> Result<bool> {
    family.validate(n)?;
    s.validate(Some(n))?;
    if vee(s)? != *s {
        return Ok(false);
    }
    if !s.blocks().iter().all(|&b| match family {
        Family::W => true,
        f => f.block_allowed(b),
    }) {
        return Ok(false);
    }
    match *family {
        Family::Y | Family::Y1 | Family::Y1Dagger | Family::YHat1 => Ok(true),
        Family::U { head, len } => Ok(chain_factors(s)?.last() == Some(&(head, len))),
        Family::Z { tail } => Ok(match chain_factors(s)?.last() {
            Some(&(a, j)) => tail.is_subset_of(a) && a.len() - j == tail.len(),
            None => false,
        }),
        Family::W => {
            let split = s.blocks().iter().take_while(|b| b.contains(1)).count();
            Ok(split > 0 && split < s.len() && s.blocks()[split..].iter().all(|b| !b.contains(1)))
        }
    }
}

/// Limits that keep counting and enumeration from running away.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_n: usize,
    pub max_length: usize,
    /// Upper bound on `(2^n - 1)^length` for brute-force enumeration.
    pub max_enumeration: u128,
    /// Upper bound on `4^n * n * length` for the counting recursion.
    pub max_count_work: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_n: SubsetMask::MAX_N,
            max_length: 64,
            max_enumeration: 5_000_000,
            max_count_work: 4_000_000_000,
        }
    }
}

/// Counter state: which side of the `W` split we are on, and the current run.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct RunState {
    phase: u8,
    head: SubsetMask,
    run_len: usize,
}

impl Caps {
    fn check_common(&self, n: usize, length: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::ResourceCap(format!(
                "n = {n} exceeds cap {}",
                self.max_n
            )));
        }
        if length > self.max_length {
            return Err(Error::ResourceCap(format!(
                "length {length} exceeds cap {}",
                self.max_length
            )));
        }
        Ok(())
    }

    /// Number of strings of the given length in the family.
    ///
    /// Runs a forward recursion over (phase, run head, run length) states. Only
    /// the canonical chain block may continue a run; any block that would
    /// continue it non-canonically is excluded, every other block starts a new run.
    pub fn count_family(&self, n: usize, family: &Family, length: usize) -> Result<u128> {
        self.check_common(n, length)?;
        family.validate(n)?;
        let work = (1u128 << (2 * n)) * (n.max(1) as u128) * (length as u128);
        if work > self.max_count_work {
            return Err(Error::ResourceCap(format!(
                "counting work {work} for n = {n}, length = {length} exceeds cap {}",
                self.max_count_work
            )));
        }
        if length == 0 {
            return Ok(family.contains_empty() as u128);
        }

        let is_w = matches!(family, Family::W);
        // W: phase 0 blocks contain 1, phase 1 blocks do not.
        let phase_of = |b: SubsetMask| -> Option<u8> {
            if is_w {
                Some(if b.contains(1) { 0 } else { 1 })
            } else if family.block_allowed(b) {
                Some(0)
            } else {
                None
            }
        };
        let alphabet: Vec<(SubsetMask, u8)> = SubsetMask::all_nonempty(n)
            .filter_map(|b| phase_of(b).map(|p| (b, p)))
            .collect();

        let add = |map: &mut HashMap<RunState, u128>, key: RunState, v: u128| -> Result<()> {
            let slot = map.entry(key).or_insert(0);
            *slot = slot
                .checked_add(v)
                .ok_or_else(|| Error::Overflow(format!("count for {family} exceeds u128")))?;
            Ok(())
        };

        let mut layer: HashMap<RunState, u128> = HashMap::new();
        for &(b, p) in &alphabet {
            if is_w && p != 0 {
                continue;
            }
            add(
                &mut layer,
                RunState {
                    phase: p,
                    head: b,
                    run_len: 1,
                },
                1,
            )?;
        }
        for _ in 1..length {
            let mut next: HashMap<RunState, u128> = HashMap::new();
            for (&st, &count) in &layer {
                if let Some(c) = next_chain_block(st.head, st.run_len) {
                    if let Some(p) = phase_of(c) {
                        if p == st.phase {
                            add(
                                &mut next,
                                RunState {
                                    run_len: st.run_len + 1,
                                    ..st
                                },
                                count,
                            )?;
                        }
                    }
                }
                for &(b, p) in &alphabet {
                    if p < st.phase || continues_run(st.head, st.run_len, b) {
                        continue;
                    }
                    add(
                        &mut next,
                        RunState {
                            phase: p,
                            head: b,
                            run_len: 1,
                        },
                        count,
                    )?;
                }
            }
            layer = next;
        }

        let mut total = 0u128;
        for (st, count) in layer {
            let accept = match *family {
                Family::U { head, len } => st.head == head && st.run_len == len,
                Family::Z { tail } => {
                    tail.is_subset_of(st.head) && st.head.len() - st.run_len == tail.len()
                }
                Family::W => st.phase == 1,
                _ => true,
            };
            if accept {
                total = total
                    .checked_add(count)
                    .ok_or_else(|| Error::Overflow(format!("count for {family} exceeds u128")))?;
            }
        }
        Ok(total)
    }

    /// All strings of the given length in the family, in lexicographic order of
    /// mask values. Brute force over every string, filtered by [`in_family`].
    pub fn enumerate_family(
        &self,
        n: usize,
        family: &Family,
        length: usize,
    ) -> Result<Vec<BlockString>> {
        self.check_common(n, length)?;
        family.validate(n)?;
        let alpha = (1u128 << n) - 1;
        let total = alpha.checked_pow(length as u32).unwrap_or(u128::MAX);
        if total > self.max_enumeration {
            return Err(Error::ResourceCap(format!(
                "enumerating {total} strings (n = {n}, length = {length}) exceeds cap {}",
                self.max_enumeration
            )));
        }
        let mut out = Vec::new();
        if length == 0 {
            if family.contains_empty() {
                out.push(BlockString::empty());
            }
            return Ok(out);
        }
        if n == 0 {
            return Ok(out);
        }
        let top = (1u32 << n) - 1;
        let mut digits = vec![1u32; length];
        loop {
            let s = BlockString::new(digits.iter().map(|&d| SubsetMask(d as u16)).collect());
            if in_family(&s, family, n)? {
                out.push(s);
            }
            // odometer, last position fastest
            let mut pos = length;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if digits[pos] < top {
                    digits[pos] += 1;
                    break;
                }
                digits[pos] = 1;
            }
        }
    }
}

/// [`Caps::count_family`] with default caps.
pub fn count_family(n: usize, family: &Family, length: usize) -> Result<u128> {
    Caps::default().count_family(n, family, length)
}

/// [`Caps::enumerate_family`] with default caps.
pub fn enumerate_family(n: usize, family: &Family, length: usize) -> Result<Vec<BlockString>> {
    Caps::default().enumerate_family(n, family, length)
}

/// Counts for lengths `0..=max_length`.
pub fn family_counts(n: usize, family: &Family, max_length: usize) -> Result<Vec<u128>> {
    (0..=max_length)
        .map(|l| count_family(n, family, l))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(e.iter().copied())
    }

    #[test]
    fn mask_basics() {
        let a = m(&[1, 3]);
        assert_eq!(a.bits(), 0b101);
        assert_eq!(a.len(), 2);
        assert_eq!(a.max_element(), Some(3));
        assert_eq!(a.min_element(), Some(1));
        assert!(a.fits(3) && !a.fits(2));
        assert_eq!(a.to_string(), "{1,3}");
        assert_eq!(a.compact(), "13");
        assert_eq!(m(&[1, 10]).compact(), "1,10");
        assert_eq!(SubsetMask::full(3), m(&[1, 2, 3]));
        assert_eq!(SubsetMask::full(16).len(), 16);
        assert_eq!(m(&[1, 2]).subsets().len(), 4);
        assert_eq!(m(&[2, 3]).shifted_up(), Some(m(&[3, 4])));
        assert_eq!(SubsetMask::all_nonempty(3).count(), 7);
        assert_eq!(SubsetMask::all_nonempty(0).count(), 0);
    }

    #[test]
    fn skeleton_examples() {
        let s = BlockString::from_sets(&[&[1, 2], &[1]]);
        assert_eq!(skeleton(&s).unwrap().indices(), &[1, 3]);
        let s = BlockString::from_sets(&[&[1]]);
        assert_eq!(skeleton(&s).unwrap().indices(), &[1, 2]);
        let s = BlockString::from_sets(&[&[2], &[1, 2]]);
        assert_eq!(skeleton(&s).unwrap().indices(), &[1, 2, 3]);
        assert_eq!(skeleton(&BlockString::empty()).unwrap().indices(), &[1]);
    }

    #[test]
    fn skeleton_rejects_empty_block() {
        let s = BlockString::new(vec![m(&[1]), SubsetMask::EMPTY]);
        assert!(matches!(skeleton(&s), Err(Error::InvalidString(_))));
        assert!(vee(&s).is_err());
    }

    #[test]
    fn chain_expand_examples() {
        assert_eq!(
            chain_expand(m(&[1, 2, 3]), 2).unwrap(),
            BlockString::from_sets(&[&[1, 2, 3], &[1, 2]])
        );
        assert_eq!(
            chain_expand(m(&[1]), 1).unwrap(),
            BlockString::from_sets(&[&[1]])
        );
        assert_eq!(
            chain_expand(m(&[1, 2]), 2).unwrap(),
            BlockString::from_sets(&[&[1, 2], &[1]])
        );
        assert!(chain_expand(m(&[1, 2]), 3).is_err());
        assert!(chain_expand(m(&[1, 2]), 0).is_err());
    }

    #[test]
    fn vee_examples() {
        let s = BlockString::from_sets(&[&[1, 2], &[2]]);
        assert_eq!(vee(&s).unwrap(), BlockString::from_sets(&[&[1, 2], &[1]]));
        let s = BlockString::from_sets(&[&[1]]);
        assert_eq!(vee(&s).unwrap(), s);
        let s = BlockString::from_sets(&[&[2], &[1, 2]]);
        assert_eq!(vee(&s).unwrap(), s);
        // a run of three with a non-canonical middle
        let s = BlockString::from_sets(&[&[1, 2, 3], &[2, 3], &[3]]);
        assert_eq!(
            vee(&s).unwrap(),
            BlockString::from_sets(&[&[1, 2, 3], &[1, 2], &[1]])
        );
    }

    #[test]
    fn membership_examples() {
        let yes = BlockString::from_sets(&[&[1, 2], &[1]]);
        let no = BlockString::from_sets(&[&[1, 2], &[2]]);
        assert!(in_family(&yes, &Family::Y, 2).unwrap());
        assert!(!in_family(&no, &Family::Y, 2).unwrap());
        let w = BlockString::from_sets(&[&[1], &[2]]);
        assert!(in_family(&w, &Family::W, 2).unwrap());
        assert!(!in_family(&BlockString::from_sets(&[&[2], &[1]]), &Family::W, 2).unwrap());
        assert!(in_family(&BlockString::empty(), &Family::Y, 2).unwrap());
        assert!(!in_family(&BlockString::empty(), &Family::W, 2).unwrap());
        assert!(in_family(&BlockString::from_sets(&[&[3]]), &Family::Y, 2).is_err());
    }

    #[test]
    fn family_validation() {
        assert!(Family::U {
            head: m(&[2, 3]),
            len: 1
        }
        .validate(3)
        .is_err());
        assert!(Family::U {
            head: m(&[1, 3]),
            len: 3
        }
        .validate(3)
        .is_err());
        assert!(Family::U {
            head: m(&[1, 3]),
            len: 2
        }
        .validate(3)
        .is_ok());
        assert!(Family::Z { tail: m(&[1]) }.validate(3).is_err());
        assert!(Family::Z {
            tail: SubsetMask::EMPTY
        }
        .validate(3)
        .is_ok());
        assert!(Family::Y.validate(17).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_family(2, &Family::Y, 2).unwrap(), 8);
        assert_eq!(count_family(2, &Family::Y, 3).unwrap(), 21);
        assert_eq!(count_family(5, &Family::Y, 0).unwrap(), 1);
        assert_eq!(count_family(2, &Family::Y1, 2).unwrap(), 4);
        assert_eq!(
            count_family(
                2,
                &Family::U {
                    head: m(&[1, 2]),
                    len: 1
                },
                2
            )
            .unwrap(),
            2
        );
        assert_eq!(count_family(0, &Family::Y, 3).unwrap(), 0);
        assert_eq!(count_family(2, &Family::W, 0).unwrap(), 0);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_family(1, &Family::Y, 1).unwrap(),
            vec![BlockString::from_sets(&[&[1]])]
        );
        let y2 = enumerate_family(2, &Family::Y, 2).unwrap();
        assert_eq!(y2.len(), 8);
        assert!(y2.contains(&BlockString::from_sets(&[&[1, 2], &[1]])));
        assert!(!y2.contains(&BlockString::from_sets(&[&[1, 2], &[2]])));
        assert!(y2.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(
            enumerate_family(2, &Family::YHat1, 2).unwrap(),
            vec![BlockString::from_sets(&[&[2], &[2]])]
        );
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps {
            max_enumeration: 10,
            ..Caps::default()
        };
        assert!(matches!(
            caps.enumerate_family(2, &Family::Y, 3),
            Err(Error::ResourceCap(_))
        ));
        assert!(matches!(
            count_family(2, &Family::Y, 65),
            Err(Error::ResourceCap(_))
        ));
    }

    #[test]
    fn count_matches_enumeration_small() {
        let families = |n: usize| {
            let mut fs = vec![
                Family::Y,
                Family::Y1,
                Family::Y1Dagger,
                Family::YHat1,
                Family::W,
            ];
            for head in SubsetMask::all_nonempty(n).filter(|a| a.contains(1)) {
                for len in 1..=head.len() {
                    fs.push(Family::U { head, len });
                }
            }
            for tail in SubsetMask::full(n).without(1).subsets() {
                fs.push(Family::Z { tail });
            }
            fs
        };
        for n in 1..=3 {
            let max_len = if n == 3 { 4 } else { 5 };
            for f in families(n) {
                for len in 0..=max_len {
                    let brute = enumerate_family(n, &f, len).unwrap().len() as u128;
                    assert_eq!(
                        count_family(n, &f, len).unwrap(),
                        brute,
                        "n={n} {f} len={len}"
                    );
                }
            }
        }
    }
}
