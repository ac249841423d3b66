//! Independent oracle for the two-card-total distribution: brute-force
//! enumeration of all 13×13 ordered card-value pairs, each weighted by `q'`,
//! must reproduce `q(i)` for every total `i`.

use game_rules::{card_value_pmf, mod10, two_card_total_pmf};
use numeric_kernel::ExactScalar;

#[test]
fn two_card_totals_derive_from_card_values() {
    // Cards are 0 (tens/faces, weight 4/13) and 1..=9 (weight 1/13 each);
    // enumerating values rather than the 13 ranks keeps the same weights.
    let mut derived = vec![ExactScalar::zero(); 10];
    for v1 in 0..10u32 {
        for v2 in 0..10u32 {
            let w = &card_value_pmf(v1).unwrap() * &card_value_pmf(v2).unwrap();
            let total = mod10(v1 + v2) as usize;
            derived[total] = &derived[total] + &w;
        }
    }
    for (i, got) in derived.iter().enumerate() {
        assert_eq!(
            got,
            &two_card_total_pmf(i as u32).unwrap(),
            "derived total pmf disagrees at i={i}"
        );
    }
}
