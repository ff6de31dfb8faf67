use lccone_web::ops::{membership_map, polar_check, refute, IN_B, IN_VTILDE};
use serde_json::Value;

#[test]
fn map_marks_the_refutation_band() {
    // Index 2, u = 1, w = 1: cells with 1 < a - b <= 2 are in u~ but not B.
    let steps = 8;
    let cells = membership_map("1", "1", 2, "4", steps).unwrap();
    assert_eq!(cells.len(), 64);
    let at = |a: usize, b: usize| cells[(b - 1) * steps as usize + (a - 1)];
    // a, b run over k/2 for k = 1..=8.
    assert_eq!(at(1, 1), IN_VTILDE | IN_B);
    assert_eq!(at(5, 1), IN_VTILDE);
    assert_eq!(at(6, 1), 0);
    assert_eq!(at(3, 1), IN_VTILDE | IN_B);
    // B never escapes u~ on a single index when j*u >= w.
    assert!(cells.iter().all(|&c| c & IN_B == 0 || c & IN_VTILDE != 0));
}

#[test]
fn map_rejects_bad_input() {
    assert!(membership_map("0", "1", 1, "4", 8).is_err());
    assert!(membership_map("1", "1", 0, "4", 8).is_err());
    assert!(membership_map("1", "1", 1, "4", 0).is_err());
    assert!(membership_map("1", "x", 1, "4", 8).is_err());
}

#[test]
fn refute_reports_the_witness() {
    let r: Value = serde_json::from_str(&refute("1/3", "1").unwrap()).unwrap();
    assert_eq!(r["j"], 4);
    assert_eq!(r["a"], "13/6@4");
    assert_eq!(r["b"], "1@4");
    assert_eq!(
        (r["in_vtilde"].clone(), r["outside_b"].clone()),
        (Value::Bool(true), Value::Bool(true))
    );
}

#[test]
fn polar_check_reports_violations() {
    let r: Value = serde_json::from_str(&polar_check("lam:1/2@3", "1").unwrap()).unwrap();
    assert_eq!(r["in_polar"], false);
    assert_eq!(r["largest_radius"], "2/3");
    assert_eq!(r["violation"]["a"], "4@3");
    let r: Value = serde_json::from_str(&polar_check("infbar", "5").unwrap()).unwrap();
    assert_eq!(r["in_polar"], true);
    assert!(r["violation"].is_null() && r["largest_radius"].is_null());
    assert!(polar_check("lam:1@0", "1").is_err());
}
