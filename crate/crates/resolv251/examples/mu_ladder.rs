//! The variable substitution carrying the generic resolution onto the
//! six-plus-six-variable family is an isomorphism once 2 is invertible: a
//! diagonal ladder of powers of 2 makes every square commute.

use resolv251::specializations::{mu_certificate, mu_preimages, verify_mu};

fn main() {
    let report = verify_mu();
    println!("map {} ({})", report.map_name, report.direction);
    for check in &report.checks {
        println!("  [{}] {}", if check.pass { "ok" } else { "FAIL" }, check.name);
    }
    assert!(report.pass, "{:?}", report.first_failure);

    let cert = mu_certificate();
    println!("\nladder matrices, bottom homological degree first:");
    for i in 0..=cert.ladder.source().top() {
        let m = cert.ladder.map(i);
        println!("sigma_{i} has det {}:\n{}", m.det(), m);
    }
    cert.verify().expect("isomorphism certificate");

    let (name, pre) = &mu_preimages()[12];
    println!("\nsample surjectivity witness: {} is the image of {}", name, pre);
}
