//! Nested segments of `M_n` and symbol relabelings inside them.
//!
//! For `2 ≤ k < n` and `0 ≤ j < k!`, segment `T_{j,k}` is the shortest
//! substring of `M_n` containing permutations number `j·n!/k!` through
//! `(j+1)·n!/k! − 1` (0-based, in order of appearance). Each segment
//!
//! * overlaps its successor in `1 ≤ ℓ < k` characters,
//! * starts and ends with `k+1` characters forming `{1, …, k+1}`,
//! * contains a set of permutations that is unchanged by any relabeling of
//!   the symbols `k+2, …, n` inside it.
//!
//! Together these mean such a relabeling never disturbs a neighbouring
//! segment and never loses a permutation.

use std::ops::Range;

use crate::builder::{build_m, perm_sequence, PermOccurrence, PermSet, PermWindows, SymbolString};
use crate::error::{Error, Result};
use crate::math::factorial;
use crate::perm::Perm;

/// Character ranges of every `T_{j,k}` inside `M_n`, for `k` in `2..=max_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentTable {
    n: usize,
    levels: Vec<Vec<Range<usize>>>,
}

impl SegmentTable {
    /// Builds the table from `perm_sequence(M_n)`. `max_k` must be below `n`.
    pub fn from_occurrences(n: usize, occurrences: &[PermOccurrence], max_k: usize) -> Result<Self> {
        if occurrences.len() as u64 != factorial(n) {
            return Err(Error::invalid(format!(
                "expected {} permutation occurrences for n = {n}, got {}",
                factorial(n),
                occurrences.len()
            )));
        }
        if max_k >= n {
            return Err(Error::invalid(format!("segment level {max_k} must be below n = {n}")));
        }
        let total = factorial(n) as usize;
        let levels = (2..=max_k)
            .map(|k| {
                let size = total / factorial(k) as usize;
                (0..factorial(k) as usize)
                    .map(|j| occurrences[j * size].start..occurrences[(j + 1) * size - 1].end())
                    .collect()
            })
            .collect();
        Ok(SegmentTable { n, levels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest level present (0 if the table is empty).
    pub fn max_k(&self) -> usize {
        if self.levels.is_empty() {
            0
        } else {
            self.levels.len() + 1
        }
    }

    pub fn ranges(&self, k: usize) -> Option<&[Range<usize>]> {
        k.checked_sub(2).and_then(|i| self.levels.get(i)).map(Vec::as_slice)
    }

    pub fn range(&self, k: usize, j: usize) -> Option<Range<usize>> {
        self.ranges(k).and_then(|r| r.get(j)).cloned()
    }

    /// Character overlap between consecutive ranges at level `k`.
    pub fn junction_overlaps(&self, k: usize) -> Option<Vec<usize>> {
        let r = self.ranges(k)?;
        Some(r.windows(2).map(|w| w[0].end.saturating_sub(w[1].start)).collect())
    }

    fn level_or_err(&self, k: usize) -> Result<&[Range<usize>]> {
        self.ranges(k).ok_or_else(|| Error::invalid(format!("level k = {k} not present in the segment table")))
    }
}

/// Segment table for `M_n` covering every level `2 ≤ k < n`.
pub fn segment_table(n: usize) -> Result<SegmentTable> {
    if n < 3 {
        return Err(Error::AlphabetSize { n, min: 3, max: crate::builder::DEFAULT_BUILD_CAP });
    }
    let m = build_m(n)?;
    SegmentTable::from_occurrences(n, &perm_sequence(&m), n - 1)
}

/// A bijection on `{g, …, n}` extended by the identity below `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolRelabel {
    n: usize,
    group_floor: usize,
    // image of symbol s at index s; index 0 unused
    mapping: Vec<u8>,
}

impl SymbolRelabel {
    /// `images[i]` is the image of `g + i`. `g` may be `n + 1` (empty group).
    pub fn new(n: usize, group_floor: usize, images: &[u8]) -> Result<Self> {
        if group_floor == 0 || group_floor > n + 1 {
            return Err(Error::invalid(format!("group floor {group_floor} must be in 1..={}", n + 1)));
        }
        let width = n + 1 - group_floor;
        if images.len() != width {
            return Err(Error::invalid(format!("relabel needs {width} images, got {}", images.len())));
        }
        let mut hit = vec![false; n + 1];
        for &img in images {
            let i = img as usize;
            if i < group_floor || i > n || hit[i] {
                return Err(Error::invalid(format!(
                    "relabel images must be a bijection on {group_floor}..={n}"
                )));
            }
            hit[i] = true;
        }
        let mut mapping: Vec<u8> = (0..=n as u8).collect();
        mapping[group_floor..].copy_from_slice(images);
        Ok(SymbolRelabel { n, group_floor, mapping })
    }

    pub fn identity(n: usize, group_floor: usize) -> Result<Self> {
        let images: Vec<u8> = (group_floor.max(1)..=n).map(|s| s as u8).collect();
        Self::new(n, group_floor, &images)
    }

    /// Relabel `g + i ↦ g + group_perm(i+1) − 1`, where `group_perm` permutes
    /// `{1, …, n − g + 1}`.
    pub fn from_group_perm(n: usize, group_floor: usize, group_perm: &Perm) -> Result<Self> {
        let images: Vec<u8> =
            group_perm.symbols().iter().map(|&s| (group_floor - 1) as u8 + s).collect();
        Self::new(n, group_floor, &images)
    }

    /// Transposition of `a` and `b`, both at or above `group_floor`.
    pub fn swap(n: usize, group_floor: usize, a: u8, b: u8) -> Result<Self> {
        let mut images: Vec<u8> = (group_floor..=n).map(|s| s as u8).collect();
        let (ia, ib) = (a as usize, b as usize);
        if ia < group_floor || ib < group_floor || ia > n || ib > n {
            return Err(Error::invalid(format!("cannot swap {a} and {b} outside {group_floor}..={n}")));
        }
        images.swap(ia - group_floor, ib - group_floor);
        Self::new(n, group_floor, &images)
    }

    /// Every relabel of `{g, …, n}`, identity first, in lexicographic order of images.
    pub fn all(n: usize, group_floor: usize) -> Result<Vec<Self>> {
        let width = (n + 1).saturating_sub(group_floor);
        if width == 0 {
            return Ok(vec![Self::identity(n, group_floor)?]);
        }
        crate::perm::all_perms(width)?
            .iter()
            .map(|p| Self::from_group_perm(n, group_floor, p))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group_floor(&self) -> usize {
        self.group_floor
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &m)| i == m as usize)
    }

    #[inline]
    pub fn apply(&self, symbol: u8) -> u8 {
        self.mapping[symbol as usize]
    }

    pub(crate) fn apply_in_place(&self, chars: &mut [u8]) {
        for c in chars {
            *c = self.mapping[*c as usize];
        }
    }
}

/// Copy of `s` with the characters in `range` mapped through `relabel`.
pub fn apply_relabel(s: &SymbolString, range: Range<usize>, relabel: &SymbolRelabel) -> Result<SymbolString> {
    if range.start > range.end || range.end > s.len() {
        return Err(Error::RangeOutOfBounds { start: range.start, end: range.end, len: s.len() });
    }
    if relabel.n() != s.n() {
        return Err(Error::invalid("relabel alphabet differs from the string's"));
    }
    let mut out = s.clone();
    relabel.apply_in_place(&mut out.chars_mut()[range]);
    Ok(out)
}

fn segment<'a>(s: &'a SymbolString, r: &Range<usize>) -> &'a [u8] {
    &s.chars()[r.clone()]
}

/// Every junction at level `k` has a common suffix/prefix of length `1 ≤ ℓ < k`.
pub fn check_lemma_a(s: &SymbolString, t: &SegmentTable, k: usize) -> Result<bool> {
    let ranges = t.level_or_err(k)?;
    Ok(ranges.windows(2).all(|w| {
        let (left, right) = (segment(s, &w[0]), segment(s, &w[1]));
        (1..k).any(|l| l <= left.len() && l <= right.len() && left[left.len() - l..] == right[..l])
    }))
}

/// The first and the last `k+1` characters of every level-`k` segment are
/// each exactly `{1, …, k+1}`.
pub fn check_lemma_b(s: &SymbolString, t: &SegmentTable, k: usize) -> Result<bool> {
    let ranges = t.level_or_err(k)?;
    let is_prefix_alphabet = |chunk: &[u8]| {
        let mut seen = 0u32;
        for &c in chunk {
            if c as usize > k + 1 {
                return false;
            }
            seen |= 1 << c;
        }
        seen.count_ones() as usize == k + 1
    };
    Ok(ranges.iter().all(|r| {
        let seg = segment(s, r);
        seg.len() > k && is_prefix_alphabet(&seg[..k + 1]) && is_prefix_alphabet(&seg[seg.len() - k - 1..])
    }))
}

pub(crate) fn perm_set_of(n: usize, chars: &[u8]) -> PermSet {
    let mut set = PermSet::new(n);
    for start in PermWindows::new(chars, n) {
        set.insert(&chars[start..start + n]);
    }
    set
}

/// The permutations contained in `T_{j,k}` are the same before and after
/// `relabel` (which must act on `{k+2, …, n}`).
pub fn check_lemma_c(
    s: &SymbolString,
    t: &SegmentTable,
    k: usize,
    j: usize,
    relabel: &SymbolRelabel,
) -> Result<bool> {
    if relabel.group_floor() != k + 2 {
        return Err(Error::invalid(format!(
            "relabel group floor {} must be k + 2 = {}",
            relabel.group_floor(),
            k + 2
        )));
    }
    let r = t
        .range(k, j)
        .ok_or_else(|| Error::invalid(format!("no segment (k = {k}, j = {j})")))?;
    let before = segment(s, &r).to_vec();
    let mut after = before.clone();
    relabel.apply_in_place(&mut after);
    Ok(perm_set_of(s.n(), &before) == perm_set_of(s.n(), &after))
}
