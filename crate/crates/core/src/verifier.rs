//! Superpermutation check and string statistics.
//!
//! Verification is a single left-to-right pass: a sliding symbol histogram
//! flags windows that are permutations, and each such window is marked in a
//! table indexed by lexicographic rank.

use std::collections::{BTreeMap, HashMap};

use crate::builder::{PermWindows, SymbolString, DENSE_TABLE_CAP};
use crate::error::{Error, Result};
use crate::math::factorial;
use crate::perm::{lehmer_rank_of, Perm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub length: usize,
    pub is_superpermutation: bool,
    pub distinct_perms: u64,
    /// `n! − distinct_perms`.
    pub missing: u64,
    /// Number of windows that spell a permutation, repeats included.
    pub occurrence_total: u64,
    /// `per_symbol_counts[s − 1]` is the number of occurrences of `s`.
    pub per_symbol_counts: Vec<u64>,
    pub is_palindrome: bool,
    pub multiplicity_max: u64,
}

impl VerifyReport {
    /// Single-line `key=value` form.
    pub fn to_kv_line(&self) -> String {
        let counts: Vec<String> = self.per_symbol_counts.iter().map(u64::to_string).collect();
        format!(
            "n={} length={} superpermutation={} distinct={} missing={} occurrences={} \
             multiplicity_max={} palindrome={} symbol_counts={}",
            self.n,
            self.length,
            self.is_superpermutation,
            self.distinct_perms,
            self.missing,
            self.occurrence_total,
            self.multiplicity_max,
            self.is_palindrome,
            counts.join(",")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolStats {
    pub counts: Vec<u64>,
    pub is_palindrome: bool,
}

impl SymbolStats {
    pub fn count(&self, symbol: usize) -> u64 {
        self.counts[symbol - 1]
    }
}

pub fn symbol_stats(s: &SymbolString) -> SymbolStats {
    let mut counts = vec![0u64; s.n()];
    for &c in s.chars() {
        counts[c as usize - 1] += 1;
    }
    let chars = s.chars();
    let is_palindrome = chars.iter().eq(chars.iter().rev());
    SymbolStats { counts, is_palindrome }
}

struct Tally {
    distinct: u64,
    occurrences: u64,
    multiplicity_max: u64,
}

fn tally_dense(s: &SymbolString) -> Tally {
    let n = s.n();
    let chars = s.chars();
    let mut seen = vec![0u64; (factorial(n) as usize).div_ceil(64)];
    // Only repeated permutations get an entry; the count includes the first sighting.
    let mut repeats: HashMap<u64, u64> = HashMap::new();
    let mut t = Tally { distinct: 0, occurrences: 0, multiplicity_max: 0 };
    for start in PermWindows::new(chars, n) {
        t.occurrences += 1;
        let r = lehmer_rank_of(&chars[start..start + n]);
        let (word, bit) = ((r / 64) as usize, 1u64 << (r % 64));
        if seen[word] & bit == 0 {
            seen[word] |= bit;
            t.distinct += 1;
            t.multiplicity_max = t.multiplicity_max.max(1);
        } else {
            let c = repeats.entry(r).or_insert(1);
            *c += 1;
            t.multiplicity_max = t.multiplicity_max.max(*c);
        }
    }
    t
}

fn tally_streaming(s: &SymbolString) -> Tally {
    let n = s.n();
    let chars = s.chars();
    let mut counts: HashMap<u64, u64> = HashMap::new();
    let mut occurrences = 0;
    for start in PermWindows::new(chars, n) {
        occurrences += 1;
        *counts.entry(Perm::from_slice_unchecked(&chars[start..start + n]).packed()).or_insert(0) += 1;
    }
    Tally {
        distinct: counts.len() as u64,
        occurrences,
        multiplicity_max: counts.values().copied().max().unwrap_or(0),
    }
}

fn report(s: &SymbolString, t: Tally) -> VerifyReport {
    let total = factorial(s.n());
    let stats = symbol_stats(s);
    VerifyReport {
        n: s.n(),
        length: s.len(),
        is_superpermutation: t.distinct == total,
        distinct_perms: t.distinct,
        missing: total - t.distinct,
        occurrence_total: t.occurrences,
        per_symbol_counts: stats.counts,
        is_palindrome: stats.is_palindrome,
        multiplicity_max: t.multiplicity_max,
    }
}

/// Dense verification; refuses alphabets above 12 (see [`verify_streaming`]).
pub fn verify(s: &SymbolString) -> Result<VerifyReport> {
    if s.n() > DENSE_TABLE_CAP {
        return Err(Error::invalid(format!(
            "dense verification supports n <= {DENSE_TABLE_CAP}; use streaming verification for n = {}",
            s.n()
        )));
    }
    Ok(report(s, tally_dense(s)))
}

/// Hash-based verification for any supported alphabet.
pub fn verify_streaming(s: &SymbolString) -> VerifyReport {
    report(s, tally_streaming(s))
}

/// Validates raw symbols (errors name the offending offset) and verifies.
pub fn verify_symbols(n: usize, chars: &[u8]) -> Result<VerifyReport> {
    verify(&SymbolString::new(n, chars.to_vec())?)
}

/// Occurrence count of every permutation that appears in `s`.
pub fn multiplicity_profile(s: &SymbolString) -> BTreeMap<Perm, u64> {
    let n = s.n();
    let mut out = BTreeMap::new();
    for start in PermWindows::new(s.chars(), n) {
        *out.entry(Perm::from_slice_unchecked(&s.chars()[start..start + n])).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::build_m;

    fn ss(n: usize, s: &str) -> SymbolString {
        SymbolString::parse(n, s).unwrap()
    }

    #[test]
    fn m3_report() {
        let r = verify(&ss(3, "123121321")).unwrap();
        assert!(r.is_superpermutation);
        assert_eq!((r.distinct_perms, r.length, r.missing), (6, 9, 0));
        assert_eq!(r.per_symbol_counts, vec![4, 3, 2]);
        assert!(r.is_palindrome);
        assert_eq!(r.multiplicity_max, 1);
        assert_eq!(r, verify_streaming(&ss(3, "123121321")));
    }

    #[test]
    fn too_short() {
        let r = verify(&ss(2, "12")).unwrap();
        assert!(!r.is_superpermutation);
        assert_eq!((r.distinct_perms, r.missing), (1, 1));
        let empty = verify(&SymbolString::new(3, vec![]).unwrap()).unwrap();
        assert_eq!((empty.distinct_perms, empty.multiplicity_max), (0, 0));
    }

    #[test]
    fn bad_symbol_names_offset() {
        assert!(matches!(
            verify_symbols(3, &[1, 2, 3, 4]),
            Err(Error::SymbolOutOfRange { offset: 3, symbol: 4, n: 3 })
        ));
    }

    #[test]
    fn multiplicities() {
        let prof = multiplicity_profile(&ss(2, "1212"));
        assert_eq!(prof[&"12".parse().unwrap()], 2);
        assert_eq!(prof[&"21".parse().unwrap()], 1);
        let r = verify(&ss(2, "1212")).unwrap();
        assert_eq!((r.occurrence_total, r.multiplicity_max), (3, 2));

        let m4 = multiplicity_profile(&build_m(4).unwrap());
        assert_eq!(m4.len(), 24);
        assert!(m4.values().all(|&c| c == 1));
    }

    #[test]
    fn symbol_n_count_in_m5() {
        let st = symbol_stats(&build_m(5).unwrap());
        assert_eq!(st.count(5), 24);
        assert!(st.is_palindrome);
    }

    #[test]
    fn kv_line() {
        let line = verify(&ss(3, "123121321")).unwrap().to_kv_line();
        assert!(line.starts_with("n=3 length=9 superpermutation=true distinct=6 missing=0"));
        assert!(line.ends_with("symbol_counts=4,3,2"));
    }

    #[test]
    fn m_n_verifies_up_to_9() {
        for n in 1..=9 {
            let r = verify(&build_m(n).unwrap()).unwrap();
            assert!(r.is_superpermutation, "n = {n}");
            assert_eq!(r.multiplicity_max, 1);
            assert_eq!(r.per_symbol_counts.iter().sum::<u64>() as usize, r.length);
        }
    }
}
