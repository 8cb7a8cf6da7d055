//! Cross-checks the Littlewood-Richardson tableau rule against an
//! independent character-product oracle: multiply the two Gelfand-Tsetlin
//! weight multisets as multisets in Z^n, then repeatedly peel off the
//! lexicographically greatest weight (necessarily dominant, since character
//! multisets are symmetric) together with its full irreducible multiset.
//! The oracle touches none of the tableau code.

use std::collections::BTreeMap;

use ostar::fusion::{tensor_un, Decomposition};
use ostar::weight_lattice::{weight_multiset_un, Weight};

fn char_product_oracle(lambda: &Weight, mu: &Weight) -> Decomposition<Weight> {
    let ma = weight_multiset_un(lambda).expect("dominant");
    let mb = weight_multiset_un(mu).expect("dominant");
    let mut prod: BTreeMap<Weight, i64> = BTreeMap::new();
    for (wa, ca) in &ma {
        for (wb, cb) in &mb {
            let sum: Vec<i64> = wa.0.iter().zip(&wb.0).map(|(a, b)| a + b).collect();
            *prod.entry(Weight(sum)).or_insert(0) += (ca * cb) as i64;
        }
    }

    let mut out: Decomposition<Weight> = Decomposition::new();
    while let Some((top, &mult)) = prod.iter().next_back() {
        let top = top.clone();
        assert!(top.is_dominant(), "lex-max weight {top} of a character must be dominant");
        assert!(mult > 0, "negative multiplicity at {top}");
        // the top weight occurs once in its own irreducible and in no other
        // remaining summand, so the full coefficient is its multiplicity
        let piece = weight_multiset_un(&top).expect("dominant");
        for (w, c) in piece {
            let entry = prod.entry(w.clone()).or_insert(0);
            *entry -= mult * c as i64;
            assert!(*entry >= 0, "oversubtraction at {w}");
            if *entry == 0 {
                prod.remove(&w);
            }
        }
        out.insert(top, mult as u64);
    }
    out
}

fn dominant_weights_in_box(n: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut current = vec![0i64; n];
    fn rec(current: &mut Vec<i64>, pos: usize, lo: i64, hi: i64, out: &mut Vec<Weight>) {
        if pos == current.len() {
            out.push(Weight(current.clone()));
            return;
        }
        let max = if pos == 0 { hi } else { current[pos - 1] };
        for v in (lo..=max).rev() {
            current[pos] = v;
            rec(current, pos + 1, lo, hi, out);
        }
    }
    rec(&mut current, 0, -bound, bound, &mut out);
    out
}

#[test]
fn tableau_rule_matches_character_oracle() {
    let weights = dominant_weights_in_box(3, 2);
    assert_eq!(weights.len(), 35);
    for a in &weights {
        for b in &weights {
            let lr = tensor_un(a, b).expect("dominant inputs");
            let oracle = char_product_oracle(a, b);
            assert_eq!(lr, oracle, "{a} ⊗ {b}");
        }
    }
}

#[test]
fn oracle_agrees_on_rank_two() {
    for a in dominant_weights_in_box(2, 2) {
        for b in dominant_weights_in_box(2, 2) {
            assert_eq!(tensor_un(&a, &b).unwrap(), char_product_oracle(&a, &b), "{a} ⊗ {b}");
        }
    }
}
