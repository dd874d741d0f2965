//! The family of distinct superpermutations of length `1! + … + n!` obtained
//! by relabeling segments of `M_n`.
//!
//! Working from level `k = n − 3` down to `k = 2`, every segment `T_{j,k}`
//! with `j mod k ≠ 0` may have its symbols `k+2, …, n` permuted freely. Each
//! such `(k, j)` is an [`EligibleSlot`] with `(n−k−1)!` choices, and a
//! [`FamilyCoordinate`] fixes one choice per slot. Segments with
//! `j ≡ 0 (mod k)` are withheld: `j = 0` keeps the `1 2 … n` prefix, and the
//! other multiples are covered by the coarser level, since each level-`(k−1)`
//! segment is the union of `k` consecutive level-`k` segments.
//!
//! The family size is `∏_{k=1}^{n−4} (n−k−2)!^{k·k!}`.

use std::collections::HashSet;
use std::ops::Range;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::builder::{build_m, perm_sequence, SymbolString};
use crate::error::{Error, Result};
use crate::math::{factorial, factorial_big};
use crate::perm::Perm;
use crate::segments::{SegmentTable, SymbolRelabel};

/// Largest `n` for which [`count_family`] is evaluated; beyond this the
/// count alone needs hundreds of megabytes.
pub const COUNT_CAP: usize = 14;

/// One relabelable segment `T_{j,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EligibleSlot {
    pub k: usize,
    pub j: usize,
    /// `(n − k − 1)!`, the number of permutations of `{k+2, …, n}`.
    pub choices: u64,
}

/// Slots in application order: `k` descending, then `j` ascending.
pub fn eligible_slots(n: usize) -> Vec<EligibleSlot> {
    if n < 5 {
        return Vec::new();
    }
    (2..=n - 3)
        .rev()
        .flat_map(|k| {
            let choices = factorial(n - k - 1);
            (1..factorial(k) as usize).filter(move |j| j % k != 0).map(move |j| EligibleSlot { k, j, choices })
        })
        .collect()
}

/// Exact family size for `n ≤ COUNT_CAP`. `1` for `n ≤ 4`.
pub fn count_family(n: usize) -> Result<BigUint> {
    if n == 0 || n > COUNT_CAP {
        return Err(Error::AlphabetSize { n, min: 1, max: COUNT_CAP });
    }
    let mut total = BigUint::one();
    for k in 1..=n.saturating_sub(4) {
        let exponent = u32::try_from(k as u64 * factorial(k)).expect("exponent fits for n <= COUNT_CAP");
        total *= factorial_big(n - k - 2).pow(exponent);
    }
    Ok(total)
}

/// One relabeling choice per eligible slot, aligned with [`eligible_slots`].
/// Digit `d` at a slot selects the lexicographic rank-`d` permutation of
/// `{k+2, …, n}`; digit 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyCoordinate {
    pub n: usize,
    pub digits: Vec<u64>,
}

/// `M_n` with its segment table and slots, ready to materialize members.
#[derive(Clone, Debug)]
pub struct Family {
    n: usize,
    base: SymbolString,
    slots: Vec<EligibleSlot>,
    ranges: Vec<Range<usize>>,
    count: BigUint,
}

impl Family {
    pub fn new(n: usize) -> Result<Self> {
        let base = build_m(n)?;
        let slots = eligible_slots(n);
        let ranges = if slots.is_empty() {
            Vec::new()
        } else {
            let table = SegmentTable::from_occurrences(n, &perm_sequence(&base), n - 3)?;
            slots
                .iter()
                .map(|s| table.range(s.k, s.j).expect("slot lies inside the table"))
                .collect()
        };
        let count = slots.iter().fold(BigUint::one(), |acc, s| acc * s.choices);
        Ok(Family { n, base, slots, ranges, count })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `M_n`, the member at index 0.
    pub fn base(&self) -> &SymbolString {
        &self.base
    }

    pub fn slots(&self) -> &[EligibleSlot] {
        &self.slots
    }

    /// Character range in `M_n` relabeled by slot `i`.
    pub fn slot_range(&self, i: usize) -> Range<usize> {
        self.ranges[i].clone()
    }

    /// Product of slot choices.
    pub fn count(&self) -> &BigUint {
        &self.count
    }

    /// Mixed-radix decomposition; the first slot is the most significant digit.
    pub fn index_to_coordinate(&self, index: &BigUint) -> Result<FamilyCoordinate> {
        if index >= &self.count {
            return Err(Error::RankOutOfRange {
                n: self.n,
                rank: index.to_string(),
                limit: self.count.to_string(),
            });
        }
        let mut rest = index.clone();
        let mut digits = vec![0u64; self.slots.len()];
        for (d, slot) in digits.iter_mut().zip(&self.slots).rev() {
            let radix = BigUint::from(slot.choices);
            *d = (&rest % &radix).to_u64().expect("digit below radix");
            rest /= radix;
        }
        Ok(FamilyCoordinate { n: self.n, digits })
    }

    pub fn coordinate_to_index(&self, coord: &FamilyCoordinate) -> Result<BigUint> {
        self.check_coordinate(coord)?;
        Ok(coord
            .digits
            .iter()
            .zip(&self.slots)
            .fold(BigUint::zero(), |acc, (&d, s)| acc * s.choices + d))
    }

    fn check_coordinate(&self, coord: &FamilyCoordinate) -> Result<()> {
        if coord.n != self.n || coord.digits.len() != self.slots.len() {
            return Err(Error::invalid(format!(
                "coordinate must have {} digits for n = {}",
                self.slots.len(),
                self.n
            )));
        }
        for (i, (&d, s)) in coord.digits.iter().zip(&self.slots).enumerate() {
            if d >= s.choices {
                return Err(Error::invalid(format!(
                    "digit {d} at slot {i} (k = {}, j = {}) must be below {}",
                    s.k, s.j, s.choices
                )));
            }
        }
        Ok(())
    }

    /// Relabeling applied by `digit` at `slot`.
    pub fn slot_relabel(&self, slot: &EligibleSlot, digit: u64) -> Result<SymbolRelabel> {
        let group = Perm::lehmer_unrank(self.n - slot.k - 1, digit)?;
        SymbolRelabel::from_group_perm(self.n, slot.k + 2, &group)
    }

    /// Applies each slot's relabeling to `M_n` in slot order (coarse levels
    /// act on characters already rewritten by finer ones).
    pub fn materialize(&self, coord: &FamilyCoordinate) -> Result<SymbolString> {
        self.check_coordinate(coord)?;
        let mut out = self.base.clone();
        for ((slot, range), &digit) in self.slots.iter().zip(&self.ranges).zip(&coord.digits) {
            if digit == 0 {
                continue;
            }
            let relabel = self.slot_relabel(slot, digit)?;
            relabel.apply_in_place(&mut out.chars_mut()[range.clone()]);
        }
        Ok(out)
    }

    pub fn get(&self, index: &BigUint) -> Result<SymbolString> {
        self.materialize(&self.index_to_coordinate(index)?)
    }

    /// Members with indices in `range`, in index order, produced lazily.
    pub fn enumerate(&self, range: Range<BigUint>) -> Result<impl Iterator<Item = Result<SymbolString>> + '_> {
        if range.start > range.end || range.end > self.count {
            return Err(Error::invalid(format!(
                "index range {}..{} must lie within 0..{}",
                range.start, range.end, self.count
            )));
        }
        let Range { start, end } = range;
        let mut next = start;
        Ok(std::iter::from_fn(move || {
            if next >= end {
                return None;
            }
            let item = self.get(&next);
            next += 1u32;
            Some(item)
        }))
    }

    /// `count` distinct indices drawn uniformly from `0..self.count()` with a
    /// seeded ChaCha8 generator, paired with their members, in draw order.
    pub fn sample(&self, count: usize, seed: u64) -> Result<Vec<(BigUint, SymbolString)>> {
        if BigUint::from(count) > self.count {
            return Err(Error::invalid(format!(
                "cannot draw {count} distinct members from a family of {}",
                self.count
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut drawn = HashSet::with_capacity(count);
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let index = rng.gen_biguint_below(&self.count);
            if drawn.insert(index.clone()) {
                let member = self.get(&index)?;
                out.push((index, member));
            }
        }
        Ok(out)
    }
}

pub fn index_to_coordinate(n: usize, index: &BigUint) -> Result<FamilyCoordinate> {
    Family::new(n)?.index_to_coordinate(index)
}

pub fn materialize(coord: &FamilyCoordinate) -> Result<SymbolString> {
    Family::new(coord.n)?.materialize(coord)
}

pub fn sample_family(n: usize, count: usize, seed: u64) -> Result<Vec<(BigUint, SymbolString)>> {
    Family::new(n)?.sample(count, seed)
}
