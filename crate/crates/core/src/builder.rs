//! The canonical small superpermutation `M_n`.
//!
//! `M_1 = 1`. To get `M_{n+1}`, take the permutations `P_0, P_1, …` of `[n]`
//! in the order they first appear in `M_n`, expand each to
//! `Q_j = P_j (n+1) P_j`, and join the `Q_j` left to right with maximal
//! suffix/prefix overlap. `|M_n| = 1! + 2! + … + n!`.

use std::collections::HashSet;
use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::math::factorial;
use crate::perm::{lehmer_rank_of, CircShiftRep, Perm, PermRank, MAX_N};

/// Largest `n` that [`build_m`] accepts without an explicit override.
/// `M_12` is already about 523 million symbols.
pub const DEFAULT_BUILD_CAP: usize = 12;

/// Largest `n` for which permutation tables are indexed densely by
/// lexicographic rank. Above this a hash set of packed codes is used.
pub(crate) const DENSE_TABLE_CAP: usize = 12;

/// A string over `{1, …, n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymbolString {
    n: usize,
    chars: Vec<u8>,
}

impl SymbolString {
    pub fn new(n: usize, chars: Vec<u8>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::AlphabetSize { n, min: 1, max: MAX_N });
        }
        if let Some(offset) = chars.iter().position(|&c| c == 0 || c as usize > n) {
            return Err(Error::SymbolOutOfRange { offset, symbol: chars[offset] as usize, n });
        }
        Ok(SymbolString { n, chars })
    }

    pub(crate) fn from_parts_unchecked(n: usize, chars: Vec<u8>) -> Self {
        SymbolString { n, chars }
    }

    /// Parses the contiguous-digit or comma-separated text form.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        crate::text::TextEncoding::for_alphabet(n).decode(text)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chars(&self) -> &[u8] {
        &self.chars
    }

    pub(crate) fn chars_mut(&mut self) -> &mut [u8] {
        &mut self.chars
    }

    pub fn into_chars(self) -> Vec<u8> {
        self.chars
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// `true` if `chars[..n]` is `1 2 … n`.
    pub fn starts_with_identity(&self) -> bool {
        self.chars.len() >= self.n && self.chars[..self.n].iter().enumerate().all(|(i, &c)| c as usize == i + 1)
    }

    pub fn slice(&self, range: Range<usize>) -> Result<SymbolString> {
        if range.start > range.end || range.end > self.len() {
            return Err(Error::RangeOutOfBounds { start: range.start, end: range.end, len: self.len() });
        }
        Ok(SymbolString { n: self.n, chars: self.chars[range].to_vec() })
    }
}

impl fmt::Display for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_symbols(f, self.n, &self.chars)
    }
}

impl fmt::Debug for SymbolString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymbolString(n={}, \"{}\")", self.n, self)
    }
}

/// A permutation together with the offset of its window in some string.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PermOccurrence {
    pub perm: Perm,
    pub start: usize,
}

impl PermOccurrence {
    pub fn end(&self) -> usize {
        self.start + self.perm.n()
    }
}

/// Yields the start offset of every length-`n` window that is a permutation.
/// Keeps a running symbol histogram so each step is O(1).
pub(crate) struct PermWindows<'a> {
    chars: &'a [u8],
    n: usize,
    counts: [u32; MAX_N + 1],
    distinct: usize,
    next: usize,
}

impl<'a> PermWindows<'a> {
    pub(crate) fn new(chars: &'a [u8], n: usize) -> Self {
        let mut w = PermWindows { chars, n, counts: [0; MAX_N + 1], distinct: 0, next: 0 };
        for &c in chars.iter().take(n.saturating_sub(1)) {
            w.add(c);
        }
        w
    }

    fn add(&mut self, c: u8) {
        let slot = &mut self.counts[c as usize];
        if *slot == 0 {
            self.distinct += 1;
        }
        *slot += 1;
    }

    fn remove(&mut self, c: u8) {
        let slot = &mut self.counts[c as usize];
        *slot -= 1;
        if *slot == 0 {
            self.distinct -= 1;
        }
    }
}

impl Iterator for PermWindows<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let n = self.n;
        while self.next + n <= self.chars.len() {
            let start = self.next;
            self.add(self.chars[start + n - 1]);
            let valid = self.distinct == n;
            self.remove(self.chars[start]);
            self.next += 1;
            if valid {
                return Some(start);
            }
        }
        None
    }
}

/// Set of permutations of a fixed `n`, dense by lexicographic rank where affordable.
#[derive(PartialEq, Eq)]
pub(crate) enum PermSet {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl PermSet {
    pub(crate) fn new(n: usize) -> Self {
        if n <= DENSE_TABLE_CAP {
            PermSet::Dense(vec![0; (factorial(n) as usize).div_ceil(64)])
        } else {
            PermSet::Sparse(HashSet::new())
        }
    }

    /// Inserts the permutation spelled by `window`; returns `true` if it was new.
    pub(crate) fn insert(&mut self, window: &[u8]) -> bool {
        match self {
            PermSet::Dense(bits) => {
                let r = lehmer_rank_of(window) as usize;
                let (word, bit) = (r / 64, 1u64 << (r % 64));
                let fresh = bits[word] & bit == 0;
                bits[word] |= bit;
                fresh
            }
            PermSet::Sparse(set) => set.insert(Perm::from_slice_unchecked(window).packed()),
        }
    }
}

/// Every distinct permutation contained in `s`, in order of first occurrence.
pub fn perm_sequence(s: &SymbolString) -> Vec<PermOccurrence> {
    let n = s.n();
    let mut seen = PermSet::new(n);
    PermWindows::new(s.chars(), n)
        .filter_map(|start| {
            let w = &s.chars()[start..start + n];
            seen.insert(w).then(|| PermOccurrence { perm: Perm::from_slice_unchecked(w), start })
        })
        .collect()
}

/// `p (n+1) p` for a permutation `p` of `[n]`.
pub fn expand_q(p: &Perm, new_symbol: u8) -> Result<SymbolString> {
    let n = p.n();
    if new_symbol as usize != n + 1 || n + 1 > MAX_N {
        return Err(Error::invalid(format!(
            "expansion symbol must be {} for a permutation of size {n}, got {new_symbol}",
            n + 1
        )));
    }
    let mut chars = Vec::with_capacity(2 * n + 1);
    chars.extend_from_slice(p.symbols());
    chars.push(new_symbol);
    chars.extend_from_slice(p.symbols());
    Ok(SymbolString::from_parts_unchecked(n + 1, chars))
}

fn max_overlap(acc: &[u8], next: &[u8]) -> usize {
    (1..=acc.len().min(next.len()))
        .rev()
        .find(|&len| acc[acc.len() - len..] == next[..len])
        .unwrap_or(0)
}

fn append_overlapping(acc: &mut Vec<u8>, next: &[u8]) {
    let ov = max_overlap(acc, next);
    acc.extend_from_slice(&next[ov..]);
}

/// Left fold joining each part onto the accumulated string with the longest
/// suffix/prefix overlap.
pub fn overlap_concat(parts: &[SymbolString]) -> Result<SymbolString> {
    let first = parts.first().ok_or_else(|| Error::invalid("overlap_concat needs at least one part"))?;
    let n = first.n();
    if parts.iter().any(|p| p.n() != n) {
        return Err(Error::invalid("all parts must share the same alphabet"));
    }
    let mut acc = first.chars().to_vec();
    for part in &parts[1..] {
        append_overlapping(&mut acc, part.chars());
    }
    Ok(SymbolString::from_parts_unchecked(n, acc))
}

/// `M_n` for `1 ≤ n ≤ DEFAULT_BUILD_CAP`.
pub fn build_m(n: usize) -> Result<SymbolString> {
    build_m_with_cap(n, DEFAULT_BUILD_CAP)
}

/// `M_n` with a caller-chosen size cap (never above [`MAX_N`]).
pub fn build_m_with_cap(n: usize, cap: usize) -> Result<SymbolString> {
    let max = cap.min(MAX_N);
    if n == 0 || n > max {
        return Err(Error::AlphabetSize { n, min: 1, max });
    }
    let mut m = SymbolString::from_parts_unchecked(1, vec![1]);
    for size in 1..n {
        let next_symbol = size as u8 + 1;
        let mut acc: Vec<u8> = Vec::with_capacity(crate::math::factorial_sum(size + 1) as usize);
        let mut q = Vec::with_capacity(2 * size + 1);
        for occ in perm_sequence(&m) {
            q.clear();
            q.extend_from_slice(occ.perm.symbols());
            q.push(next_symbol);
            q.extend_from_slice(occ.perm.symbols());
            if acc.is_empty() {
                acc.extend_from_slice(&q);
            } else {
                append_overlapping(&mut acc, &q);
            }
        }
        m = SymbolString::from_parts_unchecked(size + 1, acc);
    }
    Ok(m)
}

/// Checks that the `(j+1)`-th permutation of `M_n` is the one whose circular
/// shift exponents are the mixed-radix digits of `j`, for every `j < n!`.
pub fn check_prop1(n: usize) -> Result<bool> {
    let m = build_m(n)?;
    let seq = perm_sequence(&m);
    if seq.len() as u64 != factorial(n) {
        return Ok(false);
    }
    Ok(seq.iter().enumerate().all(|(j, occ)| {
        let rank = PermRank::new(n, j as u64).expect("j < n!");
        CircShiftRep::from_rank(rank).to_oneline() == occ.perm
    }))
}
