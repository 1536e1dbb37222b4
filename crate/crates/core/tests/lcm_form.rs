mod common;

#[test]
fn checker_matches_tuple_search() {
    let (total, bad) = common::lcm_mismatches(200);
    eprintln!("checked {total}");
    for b in bad.iter().take(40) {
        eprintln!("{b}");
    }
    assert!(bad.is_empty(), "{} mismatches of {total}", bad.len());
}
