use proptest::prelude::*;
use superperm_core::perm::all_perms;
use superperm_core::verifier::verify_streaming;
use superperm_core::{multiplicity_profile, verify, SymbolString};

// Oracle: substring search for each of the n! permutations.
fn naive_is_superpermutation(n: usize, chars: &[u8]) -> bool {
    all_perms(n).unwrap().iter().all(|p| chars.windows(n).any(|w| w == p.symbols()))
}

fn naive_distinct(n: usize, chars: &[u8]) -> u64 {
    all_perms(n).unwrap().iter().filter(|p| chars.windows(n).any(|w| w == p.symbols())).count() as u64
}

proptest! {
    #[test]
    fn agrees_with_naive_oracle(n in 1usize..=4, raw in proptest::collection::vec(0u8..4, 0..40)) {
        let chars: Vec<u8> = raw.iter().map(|c| c % n as u8 + 1).collect();
        let s = SymbolString::new(n, chars.clone()).unwrap();
        let r = verify(&s).unwrap();
        prop_assert_eq!(r.is_superpermutation, naive_is_superpermutation(n, &chars));
        prop_assert_eq!(r.distinct_perms, naive_distinct(n, &chars));
        prop_assert_eq!(r.per_symbol_counts.iter().sum::<u64>() as usize, r.length);
        prop_assert_eq!(&r, &verify_streaming(&s));
        let prof = multiplicity_profile(&s);
        prop_assert_eq!(prof.len() as u64, r.distinct_perms);
        prop_assert_eq!(prof.values().sum::<u64>(), r.occurrence_total);
        prop_assert_eq!(prof.values().copied().max().unwrap_or(0), r.multiplicity_max);
    }
}

#[test]
fn wide_alphabet_needs_streaming() {
    let chars: Vec<u8> = (1..=13).collect();
    let s = SymbolString::new(13, chars).unwrap();
    assert!(verify(&s).is_err());
    let r = verify_streaming(&s);
    assert_eq!((r.distinct_perms, r.occurrence_total), (1, 1));
}
