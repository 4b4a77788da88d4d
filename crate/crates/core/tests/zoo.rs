use stratalg::json::{algebra_to_string, order_json, parse_algebra, parse_order};
use stratalg::zoo::{zoo_get, zoo_list, zoo_report, zoo_verify};
use stratalg::Error;

#[test]
fn every_entry_verifies_and_is_deterministic() {
    for name in zoo_list() {
        let first = zoo_verify(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        let second = zoo_report(&zoo_get(name).unwrap()).unwrap();
        assert_eq!(first.to_string(), second.to_string(), "{name}");
    }
}

#[test]
fn pinned_facts() {
    let rev = zoo_verify("tri3-reversed").unwrap();
    assert_eq!(rev["doubleCentraliserWithQ"], false);
    let point = zoo_verify("point").unwrap();
    assert_eq!(point["quasiHereditary"], true);
    assert_eq!(point["serre"]["allEqual"], true);
    let hc = zoo_verify("hc-toy").unwrap();
    assert_eq!((hc["properlyStratified"].as_bool(), hc["quasiHereditary"].as_bool()), (Some(true), Some(false)));
}

#[test]
fn entries_round_trip_through_json() {
    for name in zoo_list() {
        let e = zoo_get(name).unwrap();
        let text = algebra_to_string(&e.algebra);
        let back = parse_algebra(&text).unwrap();
        assert_eq!(*back, *e.algebra, "{name}");
        let order = serde_json::to_string(&order_json(&e.order)).unwrap();
        assert_eq!(parse_order(&order, &back).unwrap(), e.order, "{name}");
    }
}

#[test]
fn unknown_entry() {
    assert!(matches!(zoo_verify("e8"), Err(Error::UnknownEntry(_))));
}
