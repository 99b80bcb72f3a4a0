//! The generic and short resolutions are each built twice — once from their
//! printed matrices and once from coordinate-free multilinear-algebra
//! formulas — and the two routes must agree entry by entry.

use resolv251::complexes::FreeComplex;
use resolv251::resolutions::{
    build_b_coordinate_free, build_b_matrices, build_q_coordinate_free, build_q_matrices,
};

fn compare(from_matrices: &FreeComplex, from_formulas: &FreeComplex) {
    assert_eq!(from_matrices.ranks_desc(), from_formulas.ranks_desc());
    let mut entries = 0usize;
    for i in 1..=from_matrices.top() {
        let a = from_matrices.differential(i);
        let b = from_formulas.differential(i);
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                assert_eq!(
                    a.get(r, c),
                    b.get(r, c),
                    "{} d{} disagrees at ({r}, {c})",
                    from_matrices.name(),
                    i,
                );
                entries += 1;
            }
        }
    }
    println!(
        "{}: all {} entries of both constructions are identical canonical polynomials",
        from_matrices.name(),
        entries,
    );
}

fn main() {
    compare(&build_q_matrices(), &build_q_coordinate_free());
    compare(&build_b_matrices(), &build_b_coordinate_free());

    let q = build_q_matrices();
    let d2 = q.differential(2);
    println!("\nsample entry of {} at d2(0, 0):\n  {}", q.name(), d2.get(0, 0));
}
