mod common;

use common::{ext_mismatches, stable_hom_mismatches};
use syzygy::linalg::Field;

#[test]
fn ext_agrees_with_cocycle_oracle() {
    let bad = ext_mismatches(Field::rationals());
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn ext_agrees_with_cocycle_oracle_mod_p() {
    let bad = ext_mismatches(Field::prime(3).unwrap());
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn stable_hom_agrees_with_homotopy_oracle() {
    let bad = stable_hom_mismatches(Field::rationals());
    assert!(bad.is_empty(), "{bad:#?}");
}
