//! The substitution onto the eleven-variable family is an isomorphism over
//! the plain integers: the connecting ladder's determinants are ±1, no
//! denominators needed.

use resolv251::specializations::{exact_inverse, phi_certificate, verify_phi};

fn main() {
    let report = verify_phi();
    println!("map {} ({})", report.map_name, report.direction);
    for check in &report.checks {
        println!("  [{}] {}", if check.pass { "ok" } else { "FAIL" }, check.name);
    }
    assert!(report.pass, "{:?}", report.first_failure);

    let cert = phi_certificate();
    println!("\nladder determinants, bottom homological degree first:");
    for i in 0..=cert.ladder.source().top() {
        let m = cert.ladder.map(i);
        let (inverse, det) = exact_inverse(&m).expect("unimodular ladder matrix");
        println!(
            "  J{i}: {}x{} with det {det}; J{i}·J{i}⁻¹ = identity recomputed exactly",
            m.rows(),
            m.cols(),
        );
        let product = &m * &inverse;
        assert!(
            (0..m.rows()).all(|r| (0..m.cols()).all(|c| {
                let e = product.get(r, c);
                if r == c { e == &m.ring().one() } else { e.is_zero() }
            })),
        );
    }
    cert.verify().expect("isomorphism certificate");
    println!("\nevery square commutes and the ladder inverts over the integers");
}
