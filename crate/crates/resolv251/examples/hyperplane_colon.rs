//! The three hyperplane-section forms arise by multiplying the δ-row into a
//! displayed 4×3 matrix, and their colon ideal against (δ₀,…,δ₃) is
//! generated by the three forms plus two mixed λ-α-β elements.  Membership
//! is certified in both directions, including products landing in the
//! intersection.

use resolv251::linkage::{hyperplane_colon_generators, hyperplane_forms, verify_hyperplane_colon};
use resolv251::resolutions::hyperplane_ring;

fn main() {
    let ring = hyperplane_ring();
    let forms = hyperplane_forms(&ring);
    println!("sequence from {}:", forms.provenance);
    for (i, n) in forms.entries.iter().enumerate() {
        println!("  n{} = {}", i + 1, n);
    }

    let gens = hyperplane_colon_generators(&ring);
    println!("\ncolon ideal generators (the three forms and two mixed ones):");
    for g in gens.iter().skip(3) {
        println!("  {g}");
    }

    let report = verify_hyperplane_colon();
    let passed = report.checks.iter().filter(|c| c.pass).count();
    println!("\n{}: {passed}/{} checks pass", report.name, report.checks.len());
    for check in report.checks.iter().take(6) {
        println!("  [{}] {}", if check.pass { "ok" } else { "FAIL" }, check.name);
    }
    println!("  ... and {} more", report.checks.len().saturating_sub(6));
    assert!(report.pass, "{:?}", report.first_failure);
}
