//! The three ring maps carrying the generic resolutions onto their named
//! specializations, each certified by an explicit ladder of matrices that
//! makes every square commute as an exact polynomial identity.

use crate::certify::{graded_membership, GradedMembershipProblem};
use crate::complexes::{ChainMap, FreeComplex};
use crate::linkage::hyperplane_colon_generators;
use crate::matrix::PolyMatrix;
use crate::resolutions::{
    b_ring, build_b_matrices, build_m, build_q_matrices, m_ring, q_ring, GenericData,
};
use crate::ring::{rat, ratio, CoefficientDomain, PolyRing, Polynomial, RingMap};
use num::Signed;
use serde::{Deserialize, Serialize};

/// Which way the certifying ladder runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderDirection {
    /// From the specialized image of the generic complex to the named one.
    SpecializedToNamed,
    /// From the named complex to the specialized image of the generic one.
    NamedToSpecialized,
}

impl LadderDirection {
    pub fn label(&self) -> &'static str {
        match self {
            LadderDirection::SpecializedToNamed => "specialized-to-named",
            LadderDirection::NamedToSpecialized => "named-to-specialized",
        }
    }
}

/// A ring map together with the invertible ladder identifying the two
/// complexes it relates.
pub struct SpecializationCertificate {
    pub map: RingMap,
    pub ladder: ChainMap,
    pub direction: LadderDirection,
}

impl SpecializationCertificate {
    /// Every square commutes, ranks agree, and every ladder determinant is
    /// a unit in the coefficient domain.
    pub fn verify(&self) -> Result<(), String> {
        self.ladder.is_complex_isomorphism()
    }
}

/// One named verification step.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Pass/fail summary for one specialization map.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpecializationReport {
    pub map_name: String,
    pub direction: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
    pub first_failure: Option<String>,
}

impl SpecializationReport {
    fn new(map_name: &str, direction: LadderDirection) -> SpecializationReport {
        SpecializationReport {
            map_name: map_name.to_string(),
            direction: direction.label().to_string(),
            checks: Vec::new(),
            pass: true,
            first_failure: None,
        }
    }

    fn push(&mut self, name: &str, outcome: Result<(), String>) {
        let check = match outcome {
            Ok(()) => CheckResult {
                name: name.to_string(),
                pass: true,
                detail: String::new(),
            },
            Err(detail) => CheckResult {
                name: name.to_string(),
                pass: false,
                detail,
            },
        };
        self.absorb(check);
    }

    fn absorb(&mut self, check: CheckResult) {
        if !check.pass {
            self.pass = false;
            if self.first_failure.is_none() {
                self.first_failure = Some(format!("{}: {}", check.name, check.detail));
            }
        }
        self.checks.push(check);
    }
}

/// Rebuild a complex over another coefficient domain (same variables).
pub fn complex_over(c: &FreeComplex, domain: CoefficientDomain) -> FreeComplex {
    let source = c.ring().clone();
    let target = source.with_domain(domain);
    let images = (0..source.num_vars()).map(|i| target.var_by_index(i)).collect();
    c.apply_map(&RingMap::new(source, target, images), c.name())
}

fn first_difference(lhs: &PolyMatrix, rhs: &PolyMatrix) -> Result<(), String> {
    for r in 0..lhs.rows() {
        for c in 0..lhs.cols() {
            if lhs.get(r, c) != rhs.get(r, c) {
                return Err(format!(
                    "first offending entry at row {r}, column {c}: {} vs {}",
                    lhs.get(r, c),
                    rhs.get(r, c)
                ));
            }
        }
    }
    Ok(())
}

fn check_square(ladder: &ChainMap, i: usize) -> Result<(), String> {
    let lhs = &ladder.map(i - 1) * ladder.source().differential(i);
    let rhs = ladder.target().differential(i) * &ladder.map(i);
    first_difference(&lhs, &rhs)
}

/// The specialization of the seventeen-variable generic resolution onto the
/// second seventeen-variable family, defined over any domain where 2 is a
/// unit (several images carry a denominator of 2).
pub fn mu_map_over(domain: CoefficientDomain) -> Result<RingMap, String> {
    if !domain.is_unit(&rat(2)) {
        return Err(format!(
            "specialization images have denominator 2, which is not a unit over {}",
            domain.label()
        ));
    }
    let source = q_ring().with_domain(domain);
    let target = m_ring().with_domain(domain);
    let v = |s: &str| target.var(s);
    let half = ratio(1, 2);
    let z1_image = {
        let mut quad = -&v("t");
        quad = &quad + &(&v("x12") * &v("y34"));
        quad = &quad - &(&v("x13") * &v("y24"));
        quad = &quad + &(&v("x14") * &v("y23"));
        quad = &quad - &(&v("x34") * &v("y12"));
        quad = &quad + &(&v("x24") * &v("y13"));
        quad = &quad - &(&v("x23") * &v("y14"));
        quad.scale(&half)
    };
    Ok(RingMap::from_pairs(
        source,
        target.clone(),
        &[
            ("a11", -&v("x12")),
            ("a12", -&v("x13")),
            ("a13", v("x14")),
            ("a21", v("y12")),
            ("a22", v("y13")),
            ("a23", -&v("y14")),
            ("l11", -&v("x34")),
            ("l12", v("x24")),
            ("l13", v("x23")),
            ("l21", v("y34")),
            ("l22", -&v("y24")),
            ("l23", -&v("y23")),
            ("psi12", v("z123").scale(&half)),
            ("psi13", (-&v("z124")).scale(&half)),
            ("psi23", (-&v("z134")).scale(&half)),
            ("z1", z1_image),
            ("z2", v("z234").scale(&half)),
        ],
    ))
}

/// `mu_map_over` with 2 inverted, the smallest domain where it exists.
pub fn mu_map() -> RingMap {
    mu_map_over(CoefficientDomain::IntegersWithTwoInverted).expect("2 is invertible here")
}

fn diag(ring: &PolyRing, entries: &[i64]) -> PolyMatrix {
    PolyMatrix::from_fn(ring, entries.len(), entries.len(), |i, j| {
        if i == j {
            ring.constant(rat(entries[i]))
        } else {
            ring.zero()
        }
    })
}

fn int_matrix(ring: &PolyRing, rows: &[&[i64]]) -> PolyMatrix {
    PolyMatrix::from_fn(ring, rows.len(), rows[0].len(), |i, j| {
        ring.constant(rat(rows[i][j]))
    })
}

/// The four ladder matrices (σ₀, σ₁, σ₂, σ₃) intertwining the specialized
/// generic differentials with the named ones: scalars 16 and signed powers
/// of two on the diagonal, and a rotation in the top degree.
pub fn mu_sigma_ladder(ring: &PolyRing) -> Vec<PolyMatrix> {
    vec![
        int_matrix(ring, &[&[16]]),
        diag(ring, &[4, 4, -4, 4, -4]),
        diag(ring, &[2, 2, -2, 2, 2, 2]),
        int_matrix(ring, &[&[0, -1], &[1, 0]]),
    ]
}

/// The σ ladder packaged as a certified chain map from the specialized
/// complex to the named one, over the integers with 2 inverted.
pub fn mu_certificate() -> SpecializationCertificate {
    let mu = mu_map();
    let domain = CoefficientDomain::IntegersWithTwoInverted;
    let q = complex_over(&build_q_matrices(), domain);
    let specialized = q.apply_map(&mu, "mu(Q)");
    let named = complex_over(&build_m(), domain);
    let ladder = ChainMap::new(&specialized, &named, mu_sigma_ladder(mu.target()));
    SpecializationCertificate {
        map: mu,
        ladder,
        direction: LadderDirection::SpecializedToNamed,
    }
}

/// Explicit preimages exhibiting surjectivity: one source element per
/// target variable, valid over any domain with 2 inverted.
pub fn mu_preimages() -> Vec<(String, Polynomial)> {
    let source = q_ring().with_domain(CoefficientDomain::IntegersWithTwoInverted);
    let v = |s: &str| source.var(s);
    let t_pre = {
        let mut p = v("z1").mul_int(-2);
        p = &p - &(&v("a11") * &v("l21"));
        p = &p - &(&v("a12") * &v("l22"));
        p = &p - &(&v("a13") * &v("l23"));
        p = &p + &(&v("l11") * &v("a21"));
        p = &p + &(&v("l12") * &v("a22"));
        p = &p + &(&v("l13") * &v("a23"));
        p
    };
    let pairs: Vec<(&str, Polynomial)> = vec![
        ("x12", -&v("a11")),
        ("x13", -&v("a12")),
        ("x14", v("a13")),
        ("x23", v("l13")),
        ("x24", v("l12")),
        ("x34", -&v("l11")),
        ("y12", v("a21")),
        ("y13", v("a22")),
        ("y14", -&v("a23")),
        ("y23", -&v("l23")),
        ("y24", -&v("l22")),
        ("y34", v("l21")),
        ("z123", v("psi12").mul_int(2)),
        ("z124", (-&v("psi13")).mul_int(2)),
        ("z134", (-&v("psi23")).mul_int(2)),
        ("z234", v("z2").mul_int(2)),
        ("t", t_pre),
    ];
    pairs.into_iter().map(|(n, p)| (n.to_string(), p)).collect()
}

fn check_preimages(map: &RingMap, preimages: &[(String, Polynomial)]) -> Result<(), String> {
    let target = map.target();
    if preimages.len() != target.num_vars() {
        return Err(format!(
            "{} preimages for {} target variables",
            preimages.len(),
            target.num_vars()
        ));
    }
    for (name, p) in preimages {
        let image = map.apply(p);
        if image != target.var(name) {
            return Err(format!("claimed preimage of {name} maps to {image}"));
        }
    }
    Ok(())
}

/// Verify the σ ladder: bidegrees, all three squares, unit determinants,
/// the full isomorphism certificate, and the surjectivity preimages.
pub fn verify_mu() -> SpecializationReport {
    let cert = mu_certificate();
    let mut report = SpecializationReport::new("mu", cert.direction);
    report.push(
        "variable images preserve bidegrees",
        if cert.map.is_graded() {
            Ok(())
        } else {
            Err("some image is not bihomogeneous of the variable's bidegree".to_string())
        },
    );
    for i in 1..=3 {
        report.push(
            &format!("square at degree {i} commutes"),
            check_square(&cert.ladder, i),
        );
    }
    let dets: Vec<String> = (0..=3)
        .map(|i| cert.ladder.map(i).det().to_string())
        .collect();
    let all_units = (0..=3).all(|i| cert.ladder.map(i).det().is_unit_constant());
    report.push(
        "ladder determinants are units",
        if all_units {
            Ok(())
        } else {
            Err(format!("determinants {}", dets.join(", ")))
        },
    );
    report.push("ladder is an isomorphism of complexes", cert.verify());
    report.push(
        "every target variable has an explicit preimage",
        check_preimages(&cert.map, &mu_preimages()),
    );
    report
}

/// The specialization of the seventeen-variable generic resolution onto the
/// eleven-variable family, defined over the plain integers.  Five variables
/// die, one lands on the constant −1.
pub fn phi_map() -> RingMap {
    let source = q_ring();
    let target = b_ring();
    let v = |s: &str| target.var(s);
    RingMap::from_pairs(
        source,
        target.clone(),
        &[
            ("a11", -&v("z2")),
            ("a12", target.zero()),
            ("a13", target.zero()),
            ("a21", -&(&v("w1") + &v("pi1"))),
            ("a22", v("u12")),
            ("a23", v("u13")),
            ("l11", -&target.one()),
            ("l12", target.zero()),
            ("l13", target.zero()),
            ("l21", target.zero()),
            ("l22", v("u23")),
            ("l23", -&v("u22")),
            ("psi12", v("pi3")),
            ("psi13", -&v("pi2")),
            ("psi23", -&v("u11")),
            ("z1", v("w1")),
            ("z2", v("u21")),
        ],
    )
}

/// The printed ladder matrices (J₀, J₁, J₂, J₃).  The chain map uses the
/// exact inverse of J₂ rather than a transcribed hand inverse.
pub fn phi_j_matrices(ring: &PolyRing) -> (PolyMatrix, PolyMatrix, PolyMatrix, PolyMatrix) {
    let j0 = PolyMatrix::identity(ring, 1);
    let j1 = int_matrix(
        ring,
        &[
            &[0, 1, 0, 0, 0],
            &[1, 0, 0, 0, 0],
            &[0, 0, 0, -1, 0],
            &[0, 0, 0, 0, -1],
            &[0, 0, -1, 0, 0],
        ],
    );
    let mut j2 = int_matrix(
        ring,
        &[
            &[-1, 0, 0, 0, 0, 0],
            &[0, 0, 0, -1, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, -1, 0],
        ],
    );
    j2.set(2, 0, ring.var("u11"));
    j2.set(3, 0, ring.var("u21"));
    let j3 = int_matrix(ring, &[&[0, -1], &[-1, 0]]);
    (j0, j1, j2, j3)
}

/// Exact inverse of a square matrix whose determinant is a unit constant,
/// by adjugate over determinant.
pub fn exact_inverse(m: &PolyMatrix) -> Result<(PolyMatrix, Polynomial), String> {
    assert_eq!(m.rows(), m.cols(), "inverse of a non-square matrix");
    let det = m.det();
    if !det.is_unit_constant() {
        return Err(format!("determinant {det} is not a unit"));
    }
    let c = det.as_constant().unwrap();
    let n = m.rows();
    let ring = det.ring().clone();
    let inv = PolyMatrix::from_fn(&ring, n, n, |i, j| {
        let minor = m.drop_row(j).drop_col(i).det();
        let signed = if (i + j) % 2 == 0 { minor } else { -&minor };
        signed.scale(&c.recip())
    });
    assert_eq!(
        &(&inv * m),
        &PolyMatrix::identity(&ring, n),
        "adjugate inverse failed its re-check"
    );
    Ok((inv, det))
}

/// The J ladder packaged as a certified chain map from the named
/// eleven-variable complex to the specialized generic one.  The printed
/// matrices J₁, J₂, J₃ are the downward components as they stand; the
/// exactly computed inverses give the upward ladder.
pub fn phi_certificate() -> SpecializationCertificate {
    let phi = phi_map();
    let named = build_b_matrices();
    let specialized = build_q_matrices().apply_map(&phi, "phi(Q)");
    let (j0, j1, j2, j3) = phi_j_matrices(phi.target());
    let ladder = ChainMap::new(&named, &specialized, vec![j0, j1, j2, j3]);
    SpecializationCertificate {
        map: phi,
        ladder,
        direction: LadderDirection::NamedToSpecialized,
    }
}

/// Explicit preimages exhibiting surjectivity over the integers.
pub fn phi_preimages() -> Vec<(String, Polynomial)> {
    let source = q_ring();
    let v = |s: &str| source.var(s);
    let pairs: Vec<(&str, Polynomial)> = vec![
        ("u11", -&v("psi23")),
        ("u12", v("a22")),
        ("u13", v("a23")),
        ("u21", v("z2")),
        ("u22", -&v("l23")),
        ("u23", v("l22")),
        ("pi1", -&(&v("a21") + &v("z1"))),
        ("pi2", -&v("psi13")),
        ("pi3", v("psi12")),
        ("w1", v("z1")),
        ("z2", -&v("a11")),
    ];
    pairs.into_iter().map(|(n, p)| (n.to_string(), p)).collect()
}

fn phi_auxiliary_displays(phi: &RingMap) -> Result<(), String> {
    let gd = GenericData::for_q();
    let b = phi.target().clone();
    let v = |s: &str| b.var(s);
    let z = b.zero();

    let phi_a = gd.phi.apply_map(phi);
    let want_a = PolyMatrix::from_rows(
        &b,
        vec![
            vec![-&v("z2"), z.clone(), z.clone()],
            vec![-&(&v("w1") + &v("pi1")), v("u12"), v("u13")],
        ],
    );
    first_difference(&phi_a, &want_a).map_err(|e| format!("image of the 2×3 coefficient matrix: {e}"))?;

    let ell = gd.ell.as_ref().expect("seventeen-variable data has an ell block");
    let phi_l = ell.apply_map(phi);
    let want_l = PolyMatrix::from_rows(
        &b,
        vec![
            vec![-&b.one(), z.clone(), z.clone()],
            vec![z.clone(), v("u23"), -&v("u22")],
        ],
    );
    first_difference(&phi_l, &want_l).map_err(|e| format!("image of the 2×3 ell matrix: {e}"))?;

    let phi_p = gd.psi_vec.apply_map(phi);
    let want_p = PolyMatrix::from_rows(&b, vec![vec![-&v("u11")], vec![v("pi2")], vec![v("pi3")]]);
    first_difference(&phi_p, &want_p).map_err(|e| format!("image of the quadric column: {e}"))?;

    let alt = &gd.phi * &ell.transpose();
    let phi_alt = alt.apply_map(phi);
    let want_alt = PolyMatrix::from_rows(
        &b,
        vec![
            vec![v("z2"), z.clone()],
            vec![
                &v("w1") + &v("pi1"),
                &(&v("u12") * &v("u23")) - &(&v("u13") * &v("u22")),
            ],
        ],
    );
    first_difference(&phi_alt, &want_alt).map_err(|e| format!("image of A·ellᵀ: {e}"))?;

    let pt_at = &gd.psi_vec.transpose() * &gd.phi.transpose();
    let phi_pt = pt_at.apply_map(phi);
    let second = {
        let mut p = &v("u11") * &(&v("w1") + &v("pi1"));
        p = &p + &(&v("u12") * &v("pi2"));
        p = &p + &(&v("u13") * &v("pi3"));
        p
    };
    let want_pt = PolyMatrix::from_rows(&b, vec![vec![&v("u11") * &v("z2"), second]]);
    first_difference(&phi_pt, &want_pt).map_err(|e| format!("image of Pᵀ·Aᵀ: {e}"))?;

    let mut trace = phi.source().zero();
    for i in 0..3 {
        let d = &(gd.phi.get(0, i) * ell.get(1, i)) - &(ell.get(0, i) * gd.phi.get(1, i));
        trace = &trace + &d;
    }
    let want_trace = -&(&v("w1") + &v("pi1"));
    let got_trace = phi.apply(&trace);
    if got_trace != want_trace {
        return Err(format!("image of the mixed 2×2 trace is {got_trace}"));
    }
    Ok(())
}

/// Verify the J ladder: the five vanishing images, the auxiliary matrix
/// displays, unimodularity of every printed ladder matrix, all squares, the
/// isomorphism certificate, and the surjectivity preimages.
pub fn verify_phi() -> SpecializationReport {
    let cert = phi_certificate();
    let mut report = SpecializationReport::new("phi", cert.direction);
    let vanish = ["a12", "a13", "l13", "l12", "l21"];
    let dead: Vec<&str> = vanish
        .iter()
        .filter(|n| !cert.map.image(n).is_zero())
        .copied()
        .collect();
    report.push(
        "the five collapsed variables map to zero",
        if dead.is_empty() {
            Ok(())
        } else {
            Err(format!("nonzero image for {}", dead.join(", ")))
        },
    );
    report.push(
        "auxiliary matrix images match the displays",
        phi_auxiliary_displays(&cert.map),
    );
    let (j0, j1, j2, j3) = phi_j_matrices(cert.map.target());
    let bad: Vec<String> = [&j0, &j1, &j2, &j3]
        .iter()
        .enumerate()
        .filter(|(_, j)| {
            let d = j.det().as_constant();
            d != Some(rat(1)) && d != Some(rat(-1))
        })
        .map(|(i, j)| format!("J{i} has determinant {}", j.det()))
        .collect();
    report.push(
        "printed ladder matrices have determinant ±1",
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad.join("; "))
        },
    );
    for i in 1..=3 {
        report.push(
            &format!("square at degree {i} commutes"),
            check_square(&cert.ladder, i),
        );
    }
    report.push("ladder is an isomorphism of complexes", cert.verify());
    let reverse = {
        let (j0, j1, j2, j3) = phi_j_matrices(cert.map.target());
        match exact_inverse(&j2) {
            Err(e) => Err(e),
            Ok((j2_inv, _)) => ChainMap::new(
                cert.ladder.target(),
                cert.ladder.source(),
                vec![j0, j1.transpose(), j2_inv, j3],
            )
            .is_complex_isomorphism(),
        }
    };
    report.push("exactly inverted ladder commutes the other way", reverse);
    report.push(
        "every target variable has an explicit preimage",
        check_preimages(&cert.map, &phi_preimages()),
    );
    report
}

/// The bidegree-preserving isomorphism from the hyperplane-section ring
/// onto the eleven-variable ring: every variable goes to a signed variable.
pub fn psi_map() -> RingMap {
    let source = crate::resolutions::hyperplane_ring();
    let target = b_ring();
    let v = |s: &str| target.var(s);
    RingMap::from_pairs(
        source,
        target.clone(),
        &[
            ("lam11", v("u11")),
            ("lam12", v("u12")),
            ("lam21", v("u21")),
            ("lam22", v("u22")),
            ("lam31", v("pi2")),
            ("lam32", -&v("pi1")),
            ("delta0", -&v("pi3")),
            ("alpha1", v("u23")),
            ("alpha2", -&v("u13")),
            ("alpha3", v("w1")),
            ("beta", v("z2")),
        ],
    )
}

fn signed_variable_bijection(map: &RingMap) -> Result<(), String> {
    let source = map.source();
    let target = map.target();
    if source.num_vars() != target.num_vars() {
        return Err(format!(
            "{} source variables against {} target variables",
            source.num_vars(),
            target.num_vars()
        ));
    }
    let mut hit = vec![false; target.num_vars()];
    for name in source.var_names() {
        let image = map.image(name);
        let terms: Vec<_> = image.terms().collect();
        let [(mono, coeff)] = terms.as_slice() else {
            return Err(format!("image of {name} is not a single term"));
        };
        if coeff.abs() != rat(1) {
            return Err(format!("image of {name} has coefficient {coeff}"));
        }
        let support: Vec<usize> = mono
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect();
        let [j] = support.as_slice() else {
            return Err(format!("image of {name} is not a single variable"));
        };
        if mono.0[*j] != 1 {
            return Err(format!("image of {name} is a higher power"));
        }
        if hit[*j] {
            return Err(format!(
                "target variable {} hit twice",
                target.var_names()[*j]
            ));
        }
        hit[*j] = true;
    }
    Ok(())
}

/// The five entries generating the ideal resolved by the eleven-variable
/// complex.
pub fn b1_entries() -> Vec<Polynomial> {
    let b = build_b_matrices();
    let d1 = b.differential(1);
    (0..d1.cols()).map(|j| d1.get(0, j).clone()).collect()
}

/// Membership checks in both directions between the image of the colon
/// generators and the resolved ideal.
pub fn psi_colon_ideal_checks() -> Vec<CheckResult> {
    let psi = psi_map();
    let gens = hyperplane_colon_generators(psi.source());
    let images: Vec<Polynomial> = gens.iter().map(|g| psi.apply(g)).collect();
    let entries = b1_entries();
    let mut checks = Vec::new();
    for (k, image) in images.iter().enumerate() {
        let ok = graded_membership(&GradedMembershipProblem {
            target: image.clone(),
            generators: entries.clone(),
        })
        .is_some();
        checks.push(CheckResult {
            name: format!("image of colon generator {} lies in the resolved ideal", k + 1),
            pass: ok,
            detail: if ok { String::new() } else { format!("no witness for {image}") },
        });
    }
    for (k, entry) in entries.iter().enumerate() {
        let ok = graded_membership(&GradedMembershipProblem {
            target: entry.clone(),
            generators: images.clone(),
        })
        .is_some();
        checks.push(CheckResult {
            name: format!("resolved ideal generator {} lies in the image ideal", k + 1),
            pass: ok,
            detail: if ok { String::new() } else { format!("no witness for {entry}") },
        });
    }
    checks
}

/// Verify the hyperplane-section isomorphism: signed-variable bijection,
/// bidegree preservation, and two-sided ideal equality with the resolved
/// ideal.
pub fn verify_psi() -> SpecializationReport {
    let psi = psi_map();
    let mut report = SpecializationReport::new("psi", LadderDirection::SpecializedToNamed);
    report.push(
        "images are signed variables hitting each target variable once",
        signed_variable_bijection(&psi),
    );
    report.push(
        "variable images preserve bidegrees",
        if psi.is_graded() {
            Ok(())
        } else {
            Err("some image changes bidegree".to_string())
        },
    );
    for check in psi_colon_ideal_checks() {
        report.absorb(check);
    }
    report
}
