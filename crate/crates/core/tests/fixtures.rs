use std::path::PathBuf;

use num_bigint::BigUint;
use superperm_core::{build_m, count_family, Family, TextEncoding};

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn m_n_matches_fixture_files() {
    for n in 1..=5 {
        let expect = fixture(&format!("m{n}.txt"));
        let got = TextEncoding::for_alphabet(n).encode(&build_m(n).unwrap()) + "\n";
        assert_eq!(got.as_bytes(), expect.as_bytes(), "n = {n}");
    }
}

#[test]
fn second_family_member_matches_fixture() {
    let f = Family::new(5).unwrap();
    let got = f.get(&BigUint::from(1u32)).unwrap().to_string() + "\n";
    assert_eq!(got, fixture("m5_prime.txt"));
}

#[test]
fn n8_count_matches_fixture() {
    let expect: BigUint = fixture("family8_count.txt").trim().parse().unwrap();
    assert_eq!(count_family(8).unwrap(), expect);
    assert_eq!(expect.to_string().len(), 51);
}

#[test]
fn fixtures_decode() {
    for name in ["m1.txt", "m2.txt", "m3.txt", "m4.txt", "m5.txt", "m5_prime.txt"] {
        let text = fixture(name);
        let n = text.trim().bytes().max().map(|b| (b - b'0') as usize).unwrap();
        let s = TextEncoding::for_alphabet(n).decode(&text).unwrap();
        assert!(superperm_core::verify(&s).unwrap().is_superpermutation, "{name}");
    }
}
