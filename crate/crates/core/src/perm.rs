//! Permutations of `{1, …, n}` and their encodings.
//!
//! Three encodings are supported:
//!
//! * one-line form, the string `σ(1)σ(2)…σ(n)` ([`Perm`]);
//! * the circular-shift representation `[j_2 j_3 … j_n]`, where `σ` is
//!   `p_2^{j_2} ∘ p_3^{j_3} ∘ … ∘ p_n^{j_n}` and `p_k` rotates the first `k`
//!   symbols ([`CircShiftRep`]);
//! * integer indices. [`PermRank`] is the mixed-radix value of the circular
//!   shift exponents (weight `n!/i!` on `j_i`), which is the order in which
//!   permutations appear in `M_n`. The lexicographic (Lehmer) rank is a
//!   different indexing, exposed separately as [`Perm::lehmer_rank`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::math::factorial;

/// Largest supported alphabet. Permutations pack into a `u64` of nibbles.
pub const MAX_N: usize = 16;

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_N {
        return Err(Error::AlphabetSize { n, min, max: MAX_N });
    }
    Ok(())
}

/// A permutation of `{1, …, n}` in one-line form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    symbols: [u8; MAX_N],
}

impl Perm {
    /// Validates that `symbols` is a bijection on `1..=symbols.len()`.
    pub fn new(symbols: &[u8]) -> Result<Self> {
        let n = symbols.len();
        check_n(n, 1)?;
        let mut seen = 0u32;
        for (offset, &s) in symbols.iter().enumerate() {
            if s == 0 || s as usize > n {
                return Err(Error::SymbolOutOfRange { offset, symbol: s as usize, n });
            }
            if seen & (1 << s) != 0 {
                return Err(Error::NotAPermutation { n, offset, symbol: s as usize });
            }
            seen |= 1 << s;
        }
        Ok(Self::from_slice_unchecked(symbols))
    }

    pub(crate) fn from_slice_unchecked(symbols: &[u8]) -> Self {
        let mut buf = [0u8; MAX_N];
        buf[..symbols.len()].copy_from_slice(symbols);
        Perm { n: symbols.len() as u8, symbols: buf }
    }

    /// `1 2 … n`.
    pub fn identity(n: usize) -> Result<Self> {
        check_n(n, 1)?;
        let ident: Vec<u8> = (1..=n as u8).collect();
        Ok(Self::from_slice_unchecked(&ident))
    }

    /// `p_k` on `{1, …, n}`: sends `i ↦ i + 1` for `i < k`, `k ↦ 1`, and fixes
    /// everything above `k`.
    pub fn prefix_cycle(n: usize, k: usize) -> Result<Self> {
        check_n(n, 1)?;
        if k == 0 || k > n {
            return Err(Error::invalid(format!("prefix cycle length {k} must be in 1..={n}")));
        }
        let mut sym: Vec<u8> = (1..=n as u8).collect();
        sym[..k].rotate_left(1);
        Ok(Self::from_slice_unchecked(&sym))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols[..self.n as usize]
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.symbols[i - 1] as usize
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.n != other.n {
            return Err(Error::invalid("cannot compose permutations of different sizes"));
        }
        let sym: Vec<u8> = other.symbols().iter().map(|&o| self.symbols[o as usize - 1]).collect();
        Ok(Self::from_slice_unchecked(&sym))
    }

    /// Nibble-packed code, symbol `i` (0-based) at bits `4i..4i+4`.
    pub fn packed(&self) -> u64 {
        self.symbols()
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &s)| acc | (u64::from(s - 1) << (4 * i)))
    }

    /// Lexicographic rank in `0..n!`.
    pub fn lehmer_rank(&self) -> u64 {
        lehmer_rank_of(self.symbols())
    }

    /// Inverse of [`Perm::lehmer_rank`].
    pub fn lehmer_unrank(n: usize, rank: u64) -> Result<Perm> {
        check_n(n, 1)?;
        let limit = factorial(n);
        if rank >= limit {
            return Err(Error::RankOutOfRange { n, rank: rank.to_string(), limit: limit.to_string() });
        }
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        let mut out = Vec::with_capacity(n);
        let mut r = rank;
        for i in (0..n).rev() {
            let f = factorial(i);
            let idx = (r / f) as usize;
            r %= f;
            out.push(pool.remove(idx));
        }
        Ok(Self::from_slice_unchecked(&out))
    }
}

/// Lexicographic rank of a slice known to be a permutation of `1..=len`.
pub(crate) fn lehmer_rank_of(sym: &[u8]) -> u64 {
    let n = sym.len();
    let mut used = 0u32;
    let mut rank = 0u64;
    for (i, &s) in sym.iter().enumerate() {
        let smaller_unused = (s as u32 - 1) - (used & ((1u32 << s) - 1)).count_ones();
        rank = rank * (n - i) as u64 + u64::from(smaller_unused);
        used |= 1 << s;
    }
    rank
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_symbols(f, self.n(), self.symbols())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts contiguous digits (`42351`) or comma-separated tokens (`10,2,…`).
    fn from_str(s: &str) -> Result<Self> {
        let symbols = crate::text::parse_symbols_auto(s)?;
        Perm::new(&symbols)
    }
}

/// Circular-shift representation `[j_2 … j_n]` with `0 ≤ j_i < i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CircShiftRep {
    n: usize,
    exponents: Vec<u8>,
}

impl CircShiftRep {
    /// `exponents` holds `j_2, …, j_n` (so `n - 1` entries).
    pub fn new(n: usize, exponents: Vec<u8>) -> Result<Self> {
        check_n(n, 1)?;
        if exponents.len() != n - 1 {
            return Err(Error::ExponentCount { n, expected: n - 1, got: exponents.len() });
        }
        for (pos, &j) in exponents.iter().enumerate() {
            let index = pos + 2;
            if j as usize >= index {
                return Err(Error::ExponentOutOfRange { index, value: j as usize });
            }
        }
        Ok(CircShiftRep { n, exponents })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, vec![0; n.saturating_sub(1)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `j_2, …, j_n`.
    pub fn exponents(&self) -> &[u8] {
        &self.exponents
    }

    /// `j_i` for `2 ≤ i ≤ n`.
    pub fn exponent(&self, i: usize) -> usize {
        self.exponents[i - 2] as usize
    }

    /// Starting from `1 2 … n`, rotate the length-`i` prefix left `j_i` times
    /// for `i = 2, …, n` in turn.
    pub fn to_oneline(&self) -> Perm {
        let mut s: Vec<u8> = (1..=self.n as u8).collect();
        for (pos, &j) in self.exponents.iter().enumerate() {
            s[..pos + 2].rotate_left(j as usize);
        }
        Perm::from_slice_unchecked(&s)
    }

    /// Peels the rotations off in reverse: before step `i` the symbol `i`
    /// sits at offset `i - 1`, so its current offset reveals `j_i`.
    pub fn from_oneline(p: &Perm) -> CircShiftRep {
        let n = p.n();
        let mut s = p.symbols().to_vec();
        let mut exponents = vec![0u8; n.saturating_sub(1)];
        for i in (2..=n).rev() {
            let pos = s[..i].iter().position(|&x| x as usize == i).expect("valid permutation");
            let j = i - 1 - pos;
            s[..i].rotate_right(j);
            exponents[i - 2] = j as u8;
        }
        CircShiftRep { n, exponents }
    }

    /// Mixed-radix value `Σ j_i · n!/i!`.
    pub fn rank(&self) -> PermRank {
        let value = self
            .exponents
            .iter()
            .enumerate()
            .fold(0u64, |acc, (pos, &j)| acc * (pos as u64 + 2) + u64::from(j));
        PermRank { n: self.n, value }
    }

    pub fn from_rank(rank: PermRank) -> CircShiftRep {
        let n = rank.n;
        let mut exponents = vec![0u8; n.saturating_sub(1)];
        let mut r = rank.value;
        for i in (2..=n).rev() {
            exponents[i - 2] = (r % i as u64) as u8;
            r /= i as u64;
        }
        CircShiftRep { n, exponents }
    }
}

impl fmt::Display for CircShiftRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        let wide = self.n > 10;
        for (i, j) in self.exponents.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("]_c")
    }
}

/// Position of a permutation in circular-shift counting order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PermRank {
    n: usize,
    value: u64,
}

impl PermRank {
    pub fn new(n: usize, value: u64) -> Result<Self> {
        check_n(n, 1)?;
        let limit = factorial(n);
        if value >= limit {
            return Err(Error::RankOutOfRange { n, rank: value.to_string(), limit: limit.to_string() });
        }
        Ok(PermRank { n, value })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self) -> u64 {
        self.value
    }
}

pub fn circ_to_oneline(rep: &CircShiftRep) -> Perm {
    rep.to_oneline()
}

pub fn oneline_to_circ(p: &Perm) -> CircShiftRep {
    CircShiftRep::from_oneline(p)
}

pub fn rank_to_exponents(r: PermRank) -> CircShiftRep {
    CircShiftRep::from_rank(r)
}

pub fn exponents_to_rank(rep: &CircShiftRep) -> PermRank {
    rep.rank()
}

pub fn lehmer_rank(p: &Perm) -> u64 {
    p.lehmer_rank()
}

pub fn lehmer_unrank(n: usize, r: u64) -> Result<Perm> {
    Perm::lehmer_unrank(n, r)
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_perms(n: usize) -> Result<Vec<Perm>> {
    check_n(n, 1)?;
    (0..factorial(n)).map(|r| Perm::lehmer_unrank(n, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn rep(n: usize, e: &[u8]) -> CircShiftRep {
        CircShiftRep::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn circ_to_oneline_examples() {
        assert_eq!(rep(5, &[0, 1, 2, 1]).to_oneline(), p("42351"));
        assert_eq!(rep(3, &[0, 0]).to_oneline(), p("123"));
        assert_eq!(rep(3, &[1, 2]).to_oneline(), p("321"));
        assert_eq!(rep(4, &[0, 0, 0]).to_oneline(), p("1234"));
    }

    #[test]
    fn oneline_to_circ_examples() {
        assert_eq!(oneline_to_circ(&p("42351")).exponents(), &[0, 1, 2, 1]);
        assert_eq!(oneline_to_circ(&p("213")).exponents(), &[1, 0]);
        assert_eq!(oneline_to_circ(&p("1234567")).exponents(), &[0; 6]);
    }

    #[test]
    fn invalid_exponents_rejected() {
        assert!(matches!(
            CircShiftRep::new(3, vec![2, 0]),
            Err(Error::ExponentOutOfRange { index: 2, value: 2 })
        ));
        assert!(matches!(CircShiftRep::new(3, vec![0]), Err(Error::ExponentCount { .. })));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_to_exponents(PermRank::new(3, 3).unwrap()).exponents(), &[1, 0]);
        assert_eq!(rank_to_exponents(PermRank::new(3, 5).unwrap()).exponents(), &[1, 2]);
        assert_eq!(rank_to_exponents(PermRank::new(6, 0).unwrap()).exponents(), &[0; 5]);
        assert_eq!(exponents_to_rank(&rep(3, &[1, 0])).value(), 3);
        assert_eq!(exponents_to_rank(&rep(5, &[0; 4])).value(), 0);
        assert!(PermRank::new(3, 6).is_err());
    }

    #[test]
    fn max_exponents_rank_last() {
        // Σ (i-1)·n!/i! evaluated term by term.
        for n in 2..=8 {
            let e: Vec<u8> = (1..n as u8).collect();
            let direct: u64 =
                (2..=n).map(|i| (i as u64 - 1) * factorial(n) / factorial(i)).sum();
            assert_eq!(direct, factorial(n) - 1);
            assert_eq!(rep(n, &e).rank().value(), direct);
        }
    }

    #[test]
    fn lehmer_examples() {
        assert_eq!(p("12345").lehmer_rank(), 0);
        assert_eq!(p("321").lehmer_rank(), 5);
        assert_eq!(p("1234").lehmer_rank(), 0);
        assert_eq!(p("4321").lehmer_rank(), 23);
        assert_eq!(Perm::lehmer_unrank(3, 5).unwrap(), p("321"));
        assert!(Perm::lehmer_unrank(3, 6).is_err());
    }

    #[test]
    fn lehmer_matches_lexicographic_enumeration() {
        // Oracle: sort all permutations produced by brute-force filtering of n^n tuples.
        for n in 1..=5usize {
            let mut brute = Vec::new();
            let total = n.pow(n as u32);
            for mut code in 0..total {
                let mut v = Vec::with_capacity(n);
                for _ in 0..n {
                    v.push((code % n) as u8 + 1);
                    code /= n;
                }
                v.reverse();
                if let Ok(q) = Perm::new(&v) {
                    brute.push(q);
                }
            }
            brute.sort();
            for (r, q) in brute.iter().enumerate() {
                assert_eq!(q.lehmer_rank(), r as u64);
            }
        }
    }

    #[test]
    fn exhaustive_round_trips() {
        for n in 1..=7 {
            for r in 0..factorial(n) {
                let rank = PermRank::new(n, r).unwrap();
                let rep = CircShiftRep::from_rank(rank);
                assert_eq!(rep.rank(), rank);
                let q = rep.to_oneline();
                assert_eq!(CircShiftRep::from_oneline(&q), rep);
                assert_eq!(Perm::lehmer_unrank(n, r).unwrap().lehmer_rank(), r);
            }
        }
    }

    #[test]
    fn single_top_shift_is_left_rotation() {
        for n in 2..=8 {
            let mut e = vec![0u8; n - 1];
            e[n - 2] = 1;
            let q = rep(n, &e).to_oneline();
            assert_eq!(q, Perm::prefix_cycle(n, n).unwrap());
            let mut expect: Vec<u8> = (1..=n as u8).collect();
            expect.rotate_left(1);
            assert_eq!(q.symbols(), &expect[..]);
        }
    }

    #[test]
    fn rep_is_product_of_prefix_cycles() {
        for n in 1..=5 {
            for r in 0..factorial(n) {
                let rep = CircShiftRep::from_rank(PermRank::new(n, r).unwrap());
                let mut acc = Perm::identity(n).unwrap();
                for i in 2..=n {
                    let pk = Perm::prefix_cycle(n, i).unwrap();
                    for _ in 0..rep.exponent(i) {
                        acc = acc.compose(&pk).unwrap();
                    }
                }
                assert_eq!(acc, rep.to_oneline());
            }
        }
    }

    #[test]
    fn appending_a_shift_composes_with_top_cycle() {
        for n in 1..=5 {
            let m = n + 1;
            let pm = Perm::prefix_cycle(m, m).unwrap();
            for r in 0..factorial(n) {
                let base = CircShiftRep::from_rank(PermRank::new(n, r).unwrap());
                for shift in 0..m as u8 {
                    let mut e = base.exponents().to_vec();
                    e.push(shift);
                    let lhs = rep(m, &e).to_oneline().compose(&pm).unwrap();
                    e[m - 2] = (shift + 1) % m as u8;
                    assert_eq!(lhs, rep(m, &e).to_oneline());
                }
            }
        }
    }

    #[test]
    fn new_rejects_non_permutations() {
        assert!(matches!(Perm::new(&[1, 1, 2]), Err(Error::NotAPermutation { offset: 1, .. })));
        assert!(matches!(Perm::new(&[1, 4, 2]), Err(Error::SymbolOutOfRange { offset: 1, .. })));
        assert!(Perm::new(&[]).is_err());
    }

    #[test]
    fn packed_is_injective_on_small_n() {
        let perms = all_perms(5).unwrap();
        let mut codes: Vec<u64> = perms.iter().map(Perm::packed).collect();
        codes.sort_unstable();
        codes.dedup();
        assert_eq!(codes.len(), 120);
    }
}
