//! Exterior-algebra basics on a rank-four free module: wedge products
//! anticommute, contraction is a signed derivation against wedges, and the
//! top exterior power of a map multiplies by its determinant.

use resolv251::exterior::{apply_map_power, contract, pair, BasedFreeModule, ExtElement};
use resolv251::matrix::PolyMatrix;
use resolv251::ring::{rat, Bidegree, CoefficientDomain, PolyRing};

fn main() {
    let ring = PolyRing::new(
        &[
            ("a", Bidegree(1, 0)),
            ("b", Bidegree(1, 0)),
            ("c", Bidegree(1, 0)),
            ("d", Bidegree(1, 0)),
        ],
        CoefficientDomain::Integers,
    );
    let v = BasedFreeModule::new("V", &["e1", "e2", "e3", "e4"]);
    let dual = v.dual();

    let e = |i: usize| ExtElement::generator(&ring, &v, i);
    let f = |i: usize| ExtElement::generator(&ring, &dual, i);

    let x = &e(0).scale(&ring.var("a")) + &e(2).scale(&ring.var("b"));
    let y = &e(1) + &e(3).scale(&ring.var("c"));
    let anti = &x.wedge(&y) + &y.wedge(&x);
    assert!(anti.is_zero());
    println!("x∧y + y∧x = 0 for x = a·e1 + b·e3, y = e2 + c·e4");

    let w = e(0).wedge(&e(1)).wedge(&e(3));
    let contracted = contract(&f(1), &w);
    println!("contracting e2* into e1∧e2∧e4 gives {}", contracted.describe());
    let leibniz = &(&contract(&f(1), &x).wedge(&y) - &x.wedge(&contract(&f(1), &y)))
        - &contract(&f(1), &x.wedge(&y));
    assert!(leibniz.is_zero());
    println!("e2* acts as an antiderivation on x∧y");

    let paired = pair(&f(0).wedge(&f(2)), &e(0).wedge(&e(2)));
    assert_eq!(paired, -&ring.one());
    println!("the contraction pairing of e1*∧e3* with e1∧e3 is (−1)^(k(k−1)/2) = {paired}");

    let m = PolyMatrix::from_fn(&ring, 4, 4, |i, j| {
        ring.constant(rat(match (i, j) {
            (0, 0) | (1, 1) => 2,
            (2, 3) => 1,
            (3, 2) => -1,
            (0, 2) => 5,
            _ => 0,
        }))
    });
    let top = e(0).wedge(&e(1)).wedge(&e(2)).wedge(&e(3));
    let image = apply_map_power(&m, &v, 4, &top);
    assert_eq!(image.coefficient(&[0, 1, 2, 3]), m.det());
    println!("∧⁴ of a 4×4 matrix scales the top generator by det = {}", m.det());
}
