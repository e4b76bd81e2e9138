//! The nine intersection configurations, each reached by a concrete form and
//! confirmed by an exact root count of the form itself.
//!
//!     cargo run --example nine_cases

use quartic_certify::classifier::{
    classify_case, cubic_root_profile, quartic_root_nature, table3_consistent,
};
use quartic_certify::corpus::nine_case_suite;
use quartic_certify::pencil::pencil_coeffs;

fn main() {
    for (expected, m) in nine_case_suite() {
        let case = classify_case(&m).expect("suite forms classify");
        let profile = cubic_root_profile(&pencil_coeffs(&m));
        let roots: Vec<String> = profile
            .roots
            .iter()
            .map(|r| format!("{:.4}^{}", r.approx(), r.multiplicity))
            .collect();
        let nature = quartic_root_nature(&m);
        println!(
            "case {} (expected {expected}): g roots [{}]{}; form roots {:?}; table facts hold: {}",
            case.id(),
            roots.join(", "),
            if profile.conjugate_pair {
                " + conjugate pair"
            } else {
                ""
            },
            nature,
            table3_consistent(&m, case),
        );
        println!("    {}", case.description());
    }
}
