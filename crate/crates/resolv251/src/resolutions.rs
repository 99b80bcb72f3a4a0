//! The three length-three resolutions with Betti numbers (2, 6, 5, 1).
//!
//! Each resolution lives over its own bigraded polynomial ring:
//! * `Q` — seventeen variables (a 2×3 matrix `a`, a 2×3 matrix `l`, three
//!   coefficients of a 2-form `psi`, and scalars `z1`, `z2`);
//! * `M` — seventeen variables (`x_ij`, `y_ij`, `z_ijk`, `t`);
//! * `B` — eleven variables (a 2×3 matrix `u`, a vector `pi`, scalars
//!   `w1`, `z2`).
//!
//! `Q` and `B` are built twice: once by transcribing the explicit matrices
//! and once by evaluating the coordinate-free differentials through the
//! exterior engine.  The two constructions agreeing entrywise is the central
//! correctness test for the sign conventions fixed in [`crate::exterior`].
//!
//! The module also builds the hyperplane-section resolution `HB` (ranks
//! 2, 5, 4, 1) used as the starting point of the linkage pipeline, and the
//! 5×5 alternating matrix that packages the data of `B`.

use crate::complexes::{FreeComplex, ModuleData};
use crate::exterior::{apply_map_power, contract, BasedFreeModule, ExtElement};
use crate::linkage::koszul_complex;
use crate::matrix::PolyMatrix;
use crate::ring::{Bidegree, CoefficientDomain, PolyRing, Polynomial};

/// The ring ℤ[a_ij, l_ij, psi_ij, z1, z2] with a, l of internal bidegree
/// (1,0), psi and z2 of bidegree (0,1), and z1 of bidegree (2,0).
pub fn q_ring() -> PolyRing {
    PolyRing::new(
        &[
            ("a11", Bidegree(1, 0)),
            ("a12", Bidegree(1, 0)),
            ("a13", Bidegree(1, 0)),
            ("a21", Bidegree(1, 0)),
            ("a22", Bidegree(1, 0)),
            ("a23", Bidegree(1, 0)),
            ("l11", Bidegree(1, 0)),
            ("l12", Bidegree(1, 0)),
            ("l13", Bidegree(1, 0)),
            ("l21", Bidegree(1, 0)),
            ("l22", Bidegree(1, 0)),
            ("l23", Bidegree(1, 0)),
            ("psi12", Bidegree(0, 1)),
            ("psi13", Bidegree(0, 1)),
            ("psi23", Bidegree(0, 1)),
            ("z1", Bidegree(2, 0)),
            ("z2", Bidegree(0, 1)),
        ],
        CoefficientDomain::Integers,
    )
}

/// The ring ℤ[x_ij, y_ij, z_ijk, t] with x, y of bidegree (1,0), z_ijk of
/// bidegree (0,1), and t of bidegree (2,0).
pub fn m_ring() -> PolyRing {
    PolyRing::new(
        &[
            ("x12", Bidegree(1, 0)),
            ("x13", Bidegree(1, 0)),
            ("x14", Bidegree(1, 0)),
            ("x23", Bidegree(1, 0)),
            ("x24", Bidegree(1, 0)),
            ("x34", Bidegree(1, 0)),
            ("y12", Bidegree(1, 0)),
            ("y13", Bidegree(1, 0)),
            ("y14", Bidegree(1, 0)),
            ("y23", Bidegree(1, 0)),
            ("y24", Bidegree(1, 0)),
            ("y34", Bidegree(1, 0)),
            ("z123", Bidegree(0, 1)),
            ("z124", Bidegree(0, 1)),
            ("z134", Bidegree(0, 1)),
            ("z234", Bidegree(0, 1)),
            ("t", Bidegree(2, 0)),
        ],
        CoefficientDomain::Integers,
    )
}

/// The ring ℤ[u_ij, pi_i, w1, z2] with u of bidegree (1,0), pi and z2 of
/// bidegree (0,1), and w1 of bidegree (2,0).
pub fn b_ring() -> PolyRing {
    PolyRing::new(
        &[
            ("u11", Bidegree(1, 0)),
            ("u12", Bidegree(1, 0)),
            ("u13", Bidegree(1, 0)),
            ("u21", Bidegree(1, 0)),
            ("u22", Bidegree(1, 0)),
            ("u23", Bidegree(1, 0)),
            ("pi1", Bidegree(0, 1)),
            ("pi2", Bidegree(0, 1)),
            ("pi3", Bidegree(0, 1)),
            ("w1", Bidegree(2, 0)),
            ("z2", Bidegree(0, 1)),
        ],
        CoefficientDomain::Integers,
    )
}

/// The ring ℤ[lam_ij, delta0, alpha_i, beta] of the hyperplane-section
/// construction: lam11..lam22, alpha1, alpha2 of bidegree (1,0); alpha3 of
/// bidegree (2,0); lam31, lam32, delta0, beta of bidegree (0,1).
pub fn hyperplane_ring() -> PolyRing {
    PolyRing::new(
        &[
            ("lam11", Bidegree(1, 0)),
            ("lam12", Bidegree(1, 0)),
            ("lam21", Bidegree(1, 0)),
            ("lam22", Bidegree(1, 0)),
            ("lam31", Bidegree(0, 1)),
            ("lam32", Bidegree(0, 1)),
            ("delta0", Bidegree(0, 1)),
            ("alpha1", Bidegree(1, 0)),
            ("alpha2", Bidegree(1, 0)),
            ("alpha3", Bidegree(2, 0)),
            ("beta", Bidegree(0, 1)),
        ],
        CoefficientDomain::Integers,
    )
}

fn det2(a: &Polynomial, b: &Polynomial, c: &Polynomial, d: &Polynomial) -> Polynomial {
    &(a * d) - &(b * c)
}

/// The generic data behind `Q` or `B`: free modules F (rank 3) and G
/// (rank 2), the matrix of φ : F → G, optionally the matrix of ℓ : F* → G,
/// the 2-form ψ ∈ ∧²F* with its coefficient vector, ζ = s·(generator of
/// ∧²G), and the scalar z₂.
pub struct GenericData {
    pub ring: PolyRing,
    pub f: BasedFreeModule,
    pub g: BasedFreeModule,
    /// 2×3 matrix of φ : F → G.
    pub phi: PolyMatrix,
    /// 2×3 matrix of ℓ : F* → G (present for the seventeen-variable family).
    pub ell: Option<PolyMatrix>,
    pub psi: ExtElement,
    /// Column vector pairing ψ against the basis of F: ψ(Ω_F) = −(vec·e).
    pub psi_vec: PolyMatrix,
    pub zeta: ExtElement,
    pub zeta_scalar: Polynomial,
    pub z2: Polynomial,
}

impl GenericData {
    /// Data over [`q_ring`]: φ has matrix `a`, ℓ has matrix `l`,
    /// ψ = psi12·e1*∧e2* + psi13·e1*∧e3* + psi23·e2*∧e3*, ζ = z1·β1∧β2.
    pub fn for_q() -> GenericData {
        let ring = q_ring();
        let f = BasedFreeModule::new("F", &["e1", "e2", "e3"]);
        let g = BasedFreeModule::new("G", &["β1", "β2"]);
        let fs = f.dual();
        let v = |n: &str| ring.var(n);
        let phi = PolyMatrix::from_rows(
            &ring,
            vec![
                vec![v("a11"), v("a12"), v("a13")],
                vec![v("a21"), v("a22"), v("a23")],
            ],
        );
        let ell = PolyMatrix::from_rows(
            &ring,
            vec![
                vec![v("l11"), v("l12"), v("l13")],
                vec![v("l21"), v("l22"), v("l23")],
            ],
        );
        let psi = ExtElement::from_coords(
            &ring,
            &fs,
            2,
            vec![
                (vec![0, 1], v("psi12")),
                (vec![0, 2], v("psi13")),
                (vec![1, 2], v("psi23")),
            ],
        );
        let psi_vec = PolyMatrix::from_rows(
            &ring,
            vec![vec![v("psi23")], vec![-&v("psi13")], vec![v("psi12")]],
        );
        let zeta = ExtElement::basis(&ring, &g, &[0, 1]).scale(&v("z1"));
        GenericData {
            ring: ring.clone(),
            f,
            g,
            phi,
            ell: Some(ell),
            psi,
            psi_vec,
            zeta,
            zeta_scalar: v("z1"),
            z2: v("z2"),
        }
    }

    /// Data over [`b_ring`]: φ has matrix `u`,
    /// ψ = pi1·e2*∧e3* − pi2·e1*∧e3* + pi3·e1*∧e2*, ζ = w1·β1∧β2.
    pub fn for_b() -> GenericData {
        let ring = b_ring();
        let f = BasedFreeModule::new("F", &["e1", "e2", "e3"]);
        let g = BasedFreeModule::new("G", &["β1", "β2"]);
        let fs = f.dual();
        let v = |n: &str| ring.var(n);
        let phi = PolyMatrix::from_rows(
            &ring,
            vec![
                vec![v("u11"), v("u12"), v("u13")],
                vec![v("u21"), v("u22"), v("u23")],
            ],
        );
        let psi = ExtElement::from_coords(
            &ring,
            &fs,
            2,
            vec![
                (vec![1, 2], v("pi1")),
                (vec![0, 2], -&v("pi2")),
                (vec![0, 1], v("pi3")),
            ],
        );
        let psi_vec = PolyMatrix::from_rows(
            &ring,
            vec![vec![v("pi1")], vec![v("pi2")], vec![v("pi3")]],
        );
        let zeta = ExtElement::basis(&ring, &g, &[0, 1]).scale(&v("w1"));
        GenericData {
            ring: ring.clone(),
            f,
            g,
            phi,
            ell: None,
            psi,
            psi_vec,
            zeta,
            zeta_scalar: v("w1"),
            z2: v("z2"),
        }
    }

    /// The signed maximal 2×2 minors of φ with column i deleted, sign
    /// (−1)^{i+1}.
    pub fn signed_complementary_minors(&self) -> Vec<Polynomial> {
        (0..3)
            .map(|i| {
                let cols: Vec<usize> = (0..3).filter(|&c| c != i).collect();
                let minor = self.phi.submatrix(&[0, 1], &cols).det();
                if i % 2 == 0 {
                    minor
                } else {
                    -&minor
                }
            })
            .collect()
    }
}

fn q_modules() -> Vec<ModuleData> {
    vec![
        ModuleData::with_twists(&["ΩF"], &[(0, 0)]),
        ModuleData::with_twists(
            &["ΩG⊗ΩF*", "e2∧e3", "-e1∧e3", "e1∧e2", "ΩF*"],
            &[(2, 1), (2, 1), (2, 1), (2, 1), (4, 0)],
        ),
        ModuleData::with_twists(
            &["β1", "β2", "ΩF*", "e1*", "e2*", "e3*"],
            &[(3, 2), (3, 2), (4, 1), (4, 1), (4, 1), (4, 1)],
        ),
        ModuleData::with_twists(&["β1*", "β2*"], &[(5, 2), (5, 2)]),
    ]
}

/// The seventeen-variable resolution from its printed matrices: ranks
/// (2, 6, 5, 1), differentials ⟨q₁⟩, ⟨q₂⟩, ⟨q₃⟩.
pub fn build_q_matrices() -> FreeComplex {
    let data = GenericData::for_q();
    let ring = &data.ring;
    let v = |n: &str| ring.var(n);
    let ell = data.ell.as_ref().unwrap();
    let a = |i: usize, j: usize| data.phi.get(i - 1, j - 1).clone();
    let l = |i: usize, j: usize| ell.get(i - 1, j - 1).clone();
    let (z1, z2) = (v("z1"), v("z2"));

    // Sum of the three column determinants |a_1i l_1i; a_2i l_2i|.
    let mixed_trace: Polynomial = (1..=3)
        .map(|i| det2(&a(1, i), &l(1, i), &a(2, i), &l(2, i)))
        .fold(ring.zero(), |acc, d| &acc + &d);

    // P^T A^T as a 1×2 matrix.
    let pt_at = &data.psi_vec.transpose() * &data.phi.transpose();
    let pt_at_dot = |top: &Polynomial, bot: &Polynomial| {
        &(&pt_at.get(0, 0).clone() * top) + &(&pt_at.get(0, 1).clone() * bot)
    };

    let gen1 = {
        let det = PolyMatrix::from_rows(
            ring,
            vec![
                vec![v("psi23"), -&v("psi13"), v("psi12")],
                vec![l(1, 1), l(1, 2), l(1, 3)],
                vec![l(2, 1), l(2, 2), l(2, 3)],
            ],
        )
        .det();
        &(&(-&det) - &(&z2 * &mixed_trace)) - &(&z2 * &z1)
    };
    let gen2 = &(&pt_at_dot(&l(2, 1), &(-&l(1, 1)))
        - &(&z2 * &det2(&a(1, 2), &a(1, 3), &a(2, 2), &a(2, 3))))
        + &(&z1 * &v("psi23"));
    let gen3 = &(&pt_at_dot(&l(2, 2), &(-&l(1, 2)))
        + &(&z2 * &det2(&a(1, 1), &a(1, 3), &a(2, 1), &a(2, 3))))
        - &(&z1 * &v("psi13"));
    let gen4 = &(&pt_at_dot(&l(2, 3), &(-&l(1, 3)))
        - &(&z2 * &det2(&a(1, 1), &a(1, 2), &a(2, 1), &a(2, 2))))
        + &(&z1 * &v("psi12"));
    let gen5 = {
        let alt = (&data.phi * &ell.transpose()).det();
        &(&(-&alt) - &(&z1 * &mixed_trace)) - &(&z1 * &z1)
    };
    let d1 = PolyMatrix::from_rows(ring, vec![vec![gen1, gen2, gen3, gen4, gen5]]);

    let q2_rows = vec![
        vec![
            &(&(&v("psi12") * &a(2, 3)) - &(&v("psi13") * &a(2, 2))) + &(&v("psi23") * &a(2, 1)),
            &(&(-&(&v("psi12") * &a(1, 3))) + &(&v("psi13") * &a(1, 2)))
                - &(&v("psi23") * &a(1, 1)),
            z1.clone(),
            det2(&a(1, 2), &a(1, 3), &a(2, 2), &a(2, 3)),
            -&det2(&a(1, 1), &a(1, 3), &a(2, 1), &a(2, 3)),
            det2(&a(1, 1), &a(1, 2), &a(2, 1), &a(2, 2)),
        ],
        vec![
            &(&(-&(&l(2, 2) * &v("psi12"))) - &(&l(2, 3) * &v("psi13"))) + &(&z2 * &a(2, 1)),
            &(&(&v("psi12") * &l(1, 2)) + &(&v("psi13") * &l(1, 3))) - &(&z2 * &a(1, 1)),
            det2(&l(1, 2), &l(1, 3), &l(2, 2), &l(2, 3)),
            &(&(-&det2(&a(1, 2), &l(1, 2), &a(2, 2), &l(2, 2)))
                - &det2(&a(1, 3), &l(1, 3), &a(2, 3), &l(2, 3)))
                - &z1,
            det2(&a(1, 1), &l(1, 2), &a(2, 1), &l(2, 2)),
            det2(&a(1, 1), &l(1, 3), &a(2, 1), &l(2, 3)),
        ],
        vec![
            &(&(&l(2, 1) * &v("psi12")) - &(&l(2, 3) * &v("psi23"))) + &(&z2 * &a(2, 2)),
            &(&(-&(&v("psi12") * &l(1, 1))) + &(&v("psi23") * &l(1, 3))) - &(&z2 * &a(1, 2)),
            -&det2(&l(1, 1), &l(1, 3), &l(2, 1), &l(2, 3)),
            det2(&a(1, 2), &l(1, 1), &a(2, 2), &l(2, 1)),
            &(&(-&det2(&a(1, 1), &l(1, 1), &a(2, 1), &l(2, 1)))
                - &det2(&a(1, 3), &l(1, 3), &a(2, 3), &l(2, 3)))
                - &z1,
            det2(&a(1, 2), &l(1, 3), &a(2, 2), &l(2, 3)),
        ],
        vec![
            &(&(&l(2, 1) * &v("psi13")) + &(&l(2, 2) * &v("psi23"))) + &(&z2 * &a(2, 3)),
            &(&(-&(&v("psi13") * &l(1, 1))) - &(&v("psi23") * &l(1, 2))) - &(&z2 * &a(1, 3)),
            det2(&l(1, 1), &l(1, 2), &l(2, 1), &l(2, 2)),
            det2(&a(1, 3), &l(1, 1), &a(2, 3), &l(2, 1)),
            det2(&a(1, 3), &l(1, 2), &a(2, 3), &l(2, 2)),
            &(&(-&det2(&a(1, 1), &l(1, 1), &a(2, 1), &l(2, 1)))
                - &det2(&a(1, 2), &l(1, 2), &a(2, 2), &l(2, 2)))
                - &z1,
        ],
        vec![
            ring.zero(),
            ring.zero(),
            -&z2,
            -&v("psi23"),
            v("psi13"),
            -&v("psi12"),
        ],
    ];
    let d2 = PolyMatrix::from_rows(ring, q2_rows);

    let q3_rows = vec![
        vec![
            &(&(&a(1, 1) * &l(1, 1)) + &(&a(1, 2) * &l(1, 2))) + &(&a(1, 3) * &l(1, 3)),
            &(&(&(&a(1, 1) * &l(2, 1)) + &(&a(1, 2) * &l(2, 2))) + &(&a(1, 3) * &l(2, 3))) + &z1,
        ],
        vec![
            &(&(&(&a(2, 1) * &l(1, 1)) + &(&a(2, 2) * &l(1, 2))) + &(&a(2, 3) * &l(1, 3))) - &z1,
            &(&(&a(2, 1) * &l(2, 1)) + &(&a(2, 2) * &l(2, 2))) + &(&a(2, 3) * &l(2, 3)),
        ],
        vec![
            &(&(-&(&a(1, 1) * &v("psi23"))) + &(&a(1, 2) * &v("psi13"))) - &(&a(1, 3) * &v("psi12")),
            &(&(-&(&a(2, 1) * &v("psi23"))) + &(&a(2, 2) * &v("psi13"))) - &(&a(2, 3) * &v("psi12")),
        ],
        vec![
            &(&(-&(&l(1, 2) * &v("psi12"))) - &(&l(1, 3) * &v("psi13"))) + &(&z2 * &a(1, 1)),
            &(&(-&(&l(2, 2) * &v("psi12"))) - &(&l(2, 3) * &v("psi13"))) + &(&z2 * &a(2, 1)),
        ],
        vec![
            &(&(&l(1, 1) * &v("psi12")) - &(&l(1, 3) * &v("psi23"))) + &(&z2 * &a(1, 2)),
            &(&(&l(2, 1) * &v("psi12")) - &(&l(2, 3) * &v("psi23"))) + &(&z2 * &a(2, 2)),
        ],
        vec![
            &(&(&l(1, 1) * &v("psi13")) + &(&l(1, 2) * &v("psi23"))) + &(&z2 * &a(1, 3)),
            &(&(&l(2, 1) * &v("psi13")) + &(&l(2, 2) * &v("psi23"))) + &(&z2 * &a(2, 3)),
        ],
    ];
    let d3 = PolyMatrix::from_rows(ring, q3_rows);

    FreeComplex::new(ring, "Q", q_modules(), vec![d1, d2, d3])
}

/// Evaluation context for the coordinate-free differentials shared by the
/// two generic families.
pub(crate) struct Scene {
    pub(crate) ring: PolyRing,
    pub(crate) f: BasedFreeModule,
    pub(crate) fs: BasedFreeModule,
    pub(crate) g: BasedFreeModule,
    pub(crate) gs: BasedFreeModule,
    pub(crate) omega_f: ExtElement,
    pub(crate) omega_gs: ExtElement,
}

impl Scene {
    pub(crate) fn new(data: &GenericData) -> Scene {
        let f = data.f.clone();
        let g = data.g.clone();
        let fs = f.dual();
        let gs = g.dual();
        let omega_f = ExtElement::basis(&data.ring, &f, &[0, 1, 2]);
        // The chosen generator of ∧²G* pairs to +1 with β1∧β2.
        let omega_gs = ExtElement::basis(&data.ring, &gs, &[1, 0]);
        Scene { ring: data.ring.clone(), f, fs, g, gs, omega_f, omega_gs }
    }

    /// Coefficient on the generator β1∧β2 of ∧²G.
    pub(crate) fn on_omega_g(&self, x: &ExtElement) -> Polynomial {
        x.coefficient(&[0, 1])
    }

    /// Coefficient on the generator e1∧e2∧e3 of ∧³F.
    pub(crate) fn on_omega_f(&self, x: &ExtElement) -> Polynomial {
        x.coefficient(&[0, 1, 2])
    }

    /// Coefficient on the generator e3*∧e2*∧e1* = −e1*∧e2*∧e3* of ∧³F*.
    pub(crate) fn on_omega_fs(&self, x: &ExtElement) -> Polynomial {
        -&x.coefficient(&[0, 1, 2])
    }

    /// Coordinates of an element of ∧²F in the basis
    /// (e2∧e3, −e1∧e3, e1∧e2).
    pub(crate) fn wedge2_f_coords(&self, x: &ExtElement) -> Vec<Polynomial> {
        vec![
            x.coefficient(&[1, 2]),
            -&x.coefficient(&[0, 2]),
            x.coefficient(&[0, 1]),
        ]
    }

    pub(crate) fn fs_coords(&self, x: &ExtElement) -> Vec<Polynomial> {
        (0..3).map(|i| x.coefficient(&[i as u8])).collect()
    }

    pub(crate) fn f_coords(&self, x: &ExtElement) -> Vec<Polynomial> {
        (0..3).map(|i| x.coefficient(&[i as u8])).collect()
    }

    /// Coordinates of an element of G in the basis (β1, β2).
    pub(crate) fn g_coords(&self, x: &ExtElement) -> Vec<Polynomial> {
        vec![x.coefficient(&[0]), x.coefficient(&[1])]
    }

    /// Coordinates of an element of G in the signed basis (−β2, β1).
    pub(crate) fn g_signed_coords(&self, x: &ExtElement) -> Vec<Polynomial> {
        vec![-&x.coefficient(&[1]), x.coefficient(&[0])]
    }

    /// Coordinates of an element of G* in the signed basis (−β2*, β1*).
    pub(crate) fn gs_signed_coords(&self, x: &ExtElement) -> Vec<Polynomial> {
        vec![-&x.coefficient(&[1]), x.coefficient(&[0])]
    }
}

/// The seventeen-variable resolution built by evaluating the coordinate-free
/// differentials on basis elements through the exterior engine.  Agrees
/// entrywise with [`build_q_matrices`].
pub fn build_q_coordinate_free() -> FreeComplex {
    let data = GenericData::for_q();
    let sc = Scene::new(&data);
    let ring = &sc.ring;
    let ell = data.ell.as_ref().unwrap();
    let phi_t = data.phi.transpose();
    let ell_t = ell.transpose();
    let apply1 = |m: &PolyMatrix, target: &BasedFreeModule, x: &ExtElement| {
        apply_map_power(m, target, 1, x)
    };

    // ψ(Ω_F) ∈ F and the invariant scalars used throughout.
    let psi_omega = contract(&data.psi, &sc.omega_f);
    // Σ_i φ(e_i) ∧ ℓ(e_i*) ∈ ∧²G.
    let mixed_sum = (0..3)
        .map(|i| {
            let ei = ExtElement::generator(ring, &sc.f, i);
            let eis = ExtElement::generator(ring, &sc.fs, i);
            apply1(&data.phi, &sc.g, &ei).wedge(&apply1(ell, &sc.g, &eis))
        })
        .fold(ExtElement::zero(ring, &sc.g, 2), |acc, w| &acc + &w);
    let mixed_scalar = sc.on_omega_g(&mixed_sum);
    let zeta_scalar = sc.on_omega_g(&data.zeta);

    // d3 columns indexed by the basis (β1*, β2*) of G*.
    let mut d3_cols = Vec::new();
    for i in 0..2 {
        let gamma = ExtElement::generator(ring, &sc.gs, i);
        let phi_star_gamma = apply1(&phi_t, &sc.fs, &gamma);
        let ell_star_gamma = apply1(&ell_t, &sc.f, &gamma);
        // Component in ∧³F*: φ*(γ)∧ψ.
        let c_fs3 = sc.on_omega_fs(&phi_star_gamma.wedge(&data.psi));
        // Component in G: (φ∘ℓ*)(γ) − γ(ζ).
        let c_g = sc.g_coords(
            &(&apply1(&data.phi, &sc.g, &ell_star_gamma) - &contract(&gamma, &data.zeta)),
        );
        // Component in F*: [ℓ*(γ)](ψ) + z₂·φ*(γ).
        let c_fs = sc.fs_coords(
            &(&contract(&ell_star_gamma, &data.psi) + &phi_star_gamma.scale(&data.z2)),
        );
        d3_cols.push(vec![
            c_g[0].clone(),
            c_g[1].clone(),
            c_fs3,
            c_fs[0].clone(),
            c_fs[1].clone(),
            c_fs[2].clone(),
        ]);
    }
    let d3 = PolyMatrix::from_fn(ring, 6, 2, |r, c| d3_cols[c][r].clone());

    // d2 columns indexed by (β1, β2, ΩF*, e1*, e2*, e3*).
    let mut d2_cols: Vec<Vec<Polynomial>> = Vec::new();
    for i in 0..2 {
        // Input g₁ = β_i in the G summand.
        let g1 = ExtElement::generator(ring, &sc.g, i);
        let phi_psi_omega = apply1(&data.phi, &sc.g, &psi_omega);
        let row1 = -&sc.on_omega_g(&g1.wedge(&phi_psi_omega));
        let g1_gs = contract(&g1, &sc.omega_gs);
        let wedge_part = apply1(&ell_t, &sc.f, &g1_gs).wedge(&psi_omega);
        let contr_part = contract(&apply1(&phi_t, &sc.fs, &g1_gs), &sc.omega_f);
        let comp_f2 = &(-&wedge_part) - &contr_part.scale(&data.z2);
        let w = sc.wedge2_f_coords(&comp_f2);
        d2_cols.push(vec![
            row1,
            w[0].clone(),
            w[1].clone(),
            w[2].clone(),
            ring.zero(),
        ]);
    }
    {
        // Input 𝔣₃ = Ω_{F*} in the ∧³F* summand.
        let row1 = zeta_scalar.clone();
        let row5 = -&data.z2;
        let ext2_lstar = apply_map_power(&ell_t, &sc.f, 2, &sc.omega_gs);
        let w = sc.wedge2_f_coords(&(-&ext2_lstar));
        d2_cols.push(vec![row1, w[0].clone(), w[1].clone(), w[2].clone(), row5]);
    }
    for i in 0..3 {
        // Input 𝔣₁ = e_i* in the F* summand.
        let f1 = ExtElement::generator(ring, &sc.fs, i);
        let ext2_phistar = apply_map_power(&phi_t, &sc.fs, 2, &sc.omega_gs);
        let row1 = sc.on_omega_fs(&f1.wedge(&ext2_phistar));
        let row5 = sc.on_omega_fs(&f1.wedge(&data.psi));
        let f1_omega = contract(&f1, &sc.omega_f);
        let ell_f1 = apply1(ell, &sc.g, &f1);
        let middle = contract(&apply1(&phi_t, &sc.fs, &contract(&ell_f1, &sc.omega_gs)), &sc.omega_f);
        let comp_f2 = &(&middle - &f1_omega.scale(&mixed_scalar)) - &f1_omega.scale(&zeta_scalar);
        let w = sc.wedge2_f_coords(&comp_f2);
        d2_cols.push(vec![row1, w[0].clone(), w[1].clone(), w[2].clone(), row5]);
    }
    let d2 = PolyMatrix::from_fn(ring, 5, 6, |r, c| d2_cols[c][r].clone());

    // d1 columns indexed by (ΩG⊗ΩF*, e2∧e3, −e1∧e3, e1∧e2, ΩF*).
    let mut d1_entries = Vec::new();
    {
        let ext2_ell_psi = apply_map_power(ell, &sc.g, 2, &data.psi);
        let s = &(&(-&sc.on_omega_g(&ext2_ell_psi)) - &(&data.z2 * &mixed_scalar))
            - &(&data.z2 * &zeta_scalar);
        d1_entries.push(s);
    }
    {
        let phi_psi_omega = apply1(&data.phi, &sc.g, &psi_omega);
        let lstar_arg = apply1(&ell_t, &sc.f, &contract(&phi_psi_omega, &sc.omega_gs));
        let ext2_phistar = apply_map_power(&phi_t, &sc.fs, 2, &sc.omega_gs);
        let contr = contract(&ext2_phistar, &sc.omega_f);
        let zeta_gs = contract(&data.zeta, &sc.omega_gs).scalar_value();
        for f2 in [
            ExtElement::basis(ring, &sc.f, &[1, 2]),
            ExtElement::basis(ring, &sc.f, &[0, 2]).mul_int(-1),
            ExtElement::basis(ring, &sc.f, &[0, 1]),
        ] {
            let total = &(&f2.wedge(&lstar_arg) - &f2.wedge(&contr).scale(&data.z2))
                - &f2.wedge(&psi_omega).scale(&zeta_gs);
            d1_entries.push(sc.on_omega_f(&total));
        }
    }
    {
        let phi_lstar = &data.phi * &ell_t;
        let ext2 = apply_map_power(&phi_lstar, &sc.g, 2, &sc.omega_gs);
        let s = &(&sc.on_omega_g(&ext2) - &(&zeta_scalar * &mixed_scalar))
            - &(&zeta_scalar * &zeta_scalar);
        d1_entries.push(s);
    }
    let d1 = PolyMatrix::from_rows(ring, vec![d1_entries]);

    FreeComplex::new(ring, "Q", q_modules(), vec![d1, d2, d3])
}

/// The seventeen-variable Pfaffian-style resolution from its printed
/// matrices: ranks (2, 6, 5, 1) over [`m_ring`].
pub fn build_m() -> FreeComplex {
    let ring = m_ring();
    let x = |ij: &str| ring.var(&format!("x{ij}"));
    let y = |ij: &str| ring.var(&format!("y{ij}"));
    let z = |ijk: &str| ring.var(&format!("z{ijk}"));
    let t = ring.var("t");
    let dd = |ij: &str, kl: &str| &(&x(ij) * &y(kl)) - &(&x(kl) * &y(ij));

    let a_pf = &(&(&x("12") * &x("34")) - &(&x("13") * &x("24"))) + &(&x("14") * &x("23"));
    let c_pf = &(&(&y("12") * &y("34")) - &(&y("13") * &y("24"))) + &(&y("14") * &y("23"));
    let b_pf = {
        let first = &(&(&x("12") * &y("34")) - &(&x("13") * &y("24"))) + &(&x("14") * &y("23"));
        let second = &(&(&y("12") * &x("34")) - &(&y("13") * &x("24"))) + &(&y("14") * &x("23"));
        &first + &second
    };
    let u = &(&b_pf * &b_pf) - &(&ring.int(4) * &(&a_pf * &c_pf));

    let u123 = {
        let s = &(&(-&(&z("234") * &dd("12", "13")).mul_int(2))
            + &(&z("134") * &dd("12", "23")).mul_int(2))
            - &(&z("124") * &dd("13", "23")).mul_int(2);
        let tail = &(&dd("13", "24") - &dd("12", "34")) + &dd("14", "23");
        &s + &(&z("123") * &tail)
    };
    let u124 = {
        let s = &(&z("234") * &dd("12", "14")).mul_int(2) - &(&z("134") * &dd("12", "24")).mul_int(2);
        let mid = &(&dd("12", "34") + &dd("13", "24")) + &dd("14", "23");
        &(&s + &(&z("124") * &mid)) - &(&z("123") * &dd("14", "24")).mul_int(2)
    };
    let u134 = {
        let mid = &(&(-&dd("12", "34")) - &dd("13", "24")) + &dd("14", "23");
        let s = &(&z("234") * &dd("13", "14")).mul_int(2) + &(&z("134") * &mid);
        &(&s + &(&z("124") * &dd("13", "34")).mul_int(2)) - &(&z("123") * &dd("14", "34")).mul_int(2)
    };
    let u234 = {
        let mid = &(&(-&dd("12", "34")) + &dd("13", "24")) - &dd("14", "23");
        let s = &(&z("234") * &mid) - &(&z("134") * &dd("23", "24")).mul_int(2);
        &(&s + &(&z("124") * &dd("23", "34")).mul_int(2)) - &(&z("123") * &dd("24", "34")).mul_int(2)
    };

    let d1 = PolyMatrix::from_rows(
        &ring,
        vec![vec![
            &(-&u234) + &(&t * &z("234")),
            &(-&u134) + &(&t * &z("134")),
            &(-&u124) + &(&t * &z("124")),
            &(-&u123) - &(&t * &z("123")),
            &(-&u) + &(&t * &t),
        ]],
    );

    let m2_rows = vec![
        vec![
            &(&(-&(&y("12") * &z("134"))) + &(&y("13") * &z("124"))) - &(&y("14") * &z("123")),
            &(&(-&(&x("12") * &z("134"))) + &(&x("13") * &z("124"))) - &(&x("14") * &z("123")),
            {
                let s = &(&(-&dd("12", "34")) + &dd("13", "24")) - &dd("14", "23");
                &s + &t
            },
            (&(&x("13") * &y("14")) - &(&x("14") * &y("13"))).mul_int(2),
            (&(&x("12") * &y("14")) - &(&x("14") * &y("12"))).mul_int(-2),
            (&(&x("12") * &y("13")) - &(&x("13") * &y("12"))).mul_int(-2),
        ],
        vec![
            &(&(&y("12") * &z("234")) - &(&y("23") * &z("124"))) + &(&y("24") * &z("123")),
            &(&(&x("12") * &z("234")) - &(&x("23") * &z("124"))) + &(&x("24") * &z("123")),
            (&(&x("23") * &y("24")) - &(&x("24") * &y("23"))).mul_int(-2),
            {
                let s = &(&(-&dd("12", "34")) - &dd("13", "24")) + &dd("14", "23");
                &s + &t
            },
            (&(&x("12") * &y("24")) - &(&x("24") * &y("12"))).mul_int(2),
            (&(&x("12") * &y("23")) - &(&x("23") * &y("12"))).mul_int(2),
        ],
        vec![
            &(&(-&(&y("13") * &z("234"))) + &(&y("23") * &z("134"))) - &(&y("34") * &z("123")),
            &(&(-&(&x("13") * &z("234"))) + &(&x("23") * &z("134"))) - &(&x("34") * &z("123")),
            (&(&x("23") * &y("34")) - &(&x("34") * &y("23"))).mul_int(2),
            (&(&x("13") * &y("34")) - &(&x("34") * &y("13"))).mul_int(2),
            {
                let s = &(&(-&dd("12", "34")) - &dd("13", "24")) - &dd("14", "23");
                &s - &t
            },
            (&(&x("13") * &y("23")) - &(&x("23") * &y("13"))).mul_int(-2),
        ],
        vec![
            &(&(-&(&y("14") * &z("234"))) + &(&y("24") * &z("134"))) - &(&y("34") * &z("124")),
            &(&(-&(&x("14") * &z("234"))) + &(&x("24") * &z("134"))) - &(&x("34") * &z("124")),
            (&(&x("24") * &y("34")) - &(&x("34") * &y("24"))).mul_int(2),
            (&(&x("14") * &y("34")) - &(&x("34") * &y("14"))).mul_int(2),
            (&(&x("14") * &y("24")) - &(&x("24") * &y("14"))).mul_int(-2),
            {
                let s = &(&dd("12", "34") - &dd("13", "24")) - &dd("14", "23");
                &s + &t
            },
        ],
        vec![
            ring.zero(),
            ring.zero(),
            -&z("234"),
            -&z("134"),
            z("124"),
            z("123"),
        ],
    ];
    let d2 = PolyMatrix::from_rows(&ring, m2_rows);

    let pf_x2 = (&(&(&x("12") * &x("34")) - &(&x("13") * &x("24"))) + &(&x("14") * &x("23")))
        .mul_int(2);
    let pf_y2 = (&(&(&y("12") * &y("34")) - &(&y("13") * &y("24"))) + &(&y("14") * &y("23")))
        .mul_int(-2);
    let b_mixed = {
        let s = &(&(&x("12") * &y("34")) - &(&x("13") * &y("24"))) + &(&x("14") * &y("23"));
        let s2 = &(&(&x("34") * &y("12")) - &(&x("24") * &y("13"))) + &(&x("23") * &y("14"));
        &s + &s2
    };
    let m3_rows = vec![
        vec![&b_mixed + &t, pf_x2],
        vec![pf_y2, &(-&b_mixed) + &t],
        vec![
            -&(&(&(-&(&y("12") * &z("134"))) + &(&y("13") * &z("124"))) - &(&y("14") * &z("123"))),
            -&(&(&(-&(&x("12") * &z("134"))) + &(&x("13") * &z("124"))) - &(&x("14") * &z("123"))),
        ],
        vec![
            &(&(-&(&y("12") * &z("234"))) + &(&y("23") * &z("124"))) - &(&y("24") * &z("123")),
            &(&(-&(&x("12") * &z("234"))) + &(&x("23") * &z("124"))) - &(&x("24") * &z("123")),
        ],
        vec![
            &(&(-&(&y("13") * &z("234"))) + &(&y("23") * &z("134"))) - &(&y("34") * &z("123")),
            &(&(-&(&x("13") * &z("234"))) + &(&x("23") * &z("134"))) - &(&x("34") * &z("123")),
        ],
        vec![
            -&(&(&(-&(&y("14") * &z("234"))) + &(&y("24") * &z("134"))) - &(&y("34") * &z("124"))),
            -&(&(&(-&(&x("14") * &z("234"))) + &(&x("24") * &z("134"))) - &(&x("34") * &z("124"))),
        ],
    ];
    let d3 = PolyMatrix::from_rows(&ring, m3_rows);

    let modules = vec![
        ModuleData::with_twists(&["1"], &[(0, 0)]),
        ModuleData::with_twists(
            &["f1", "f2", "f3", "f4", "f5"],
            &[(2, 1), (2, 1), (2, 1), (2, 1), (4, 0)],
        ),
        ModuleData::with_twists(
            &["g1", "g2", "g3", "g4", "g5", "g6"],
            &[(3, 2), (3, 2), (4, 1), (4, 1), (4, 1), (4, 1)],
        ),
        ModuleData::with_twists(&["h1", "h2"], &[(5, 2), (5, 2)]),
    ];
    FreeComplex::new(&ring, "M", modules, vec![d1, d2, d3])
}

fn b_modules() -> Vec<ModuleData> {
    vec![
        ModuleData::with_twists(&["ΩG⊗ΩF*"], &[(0, 0)]),
        ModuleData::with_twists(
            &["-β2", "β1", "e1*", "e2*", "e3*"],
            &[(1, 1), (1, 1), (2, 1), (2, 1), (2, 1)],
        ),
        ModuleData::with_twists(
            &["ΩF", "-β2*", "β1*", "e1", "e2", "e3"],
            &[(2, 2), (3, 1), (3, 1), (2, 2), (2, 2), (2, 2)],
        ),
        ModuleData::with_twists(&["ΩG*⊗ΩF", "-ΩF"], &[(4, 2), (2, 3)]),
    ]
}

/// The eleven-variable resolution from its printed matrices: ranks
/// (2, 6, 5, 1) over [`b_ring`].
pub fn build_b_matrices() -> FreeComplex {
    let data = GenericData::for_b();
    let ring = &data.ring;
    let v = |n: &str| ring.var(n);
    let u = |i: usize, j: usize| data.phi.get(i - 1, j - 1).clone();
    let (w1, z2) = (v("w1"), v("z2"));
    let pi = |i: usize| data.psi_vec.get(i - 1, 0).clone();
    let delta = data.signed_complementary_minors();
    let upi = &data.phi * &data.psi_vec;
    let upi1 = upi.get(0, 0).clone();
    let upi2 = upi.get(1, 0).clone();

    let d1 = PolyMatrix::from_rows(
        ring,
        vec![vec![
            upi1.clone(),
            upi2.clone(),
            &(&z2 * &delta[0]) - &(&w1 * &pi(1)),
            &(&z2 * &delta[1]) - &(&w1 * &pi(2)),
            &(&z2 * &delta[2]) - &(&w1 * &pi(3)),
        ]],
    );

    let d2 = PolyMatrix::from_rows(
        ring,
        vec![
            vec![
                upi2.clone(),
                ring.zero(),
                -&w1,
                -&(&z2 * &u(2, 1)),
                -&(&z2 * &u(2, 2)),
                -&(&z2 * &u(2, 3)),
            ],
            vec![
                -&upi1,
                w1.clone(),
                ring.zero(),
                &z2 * &u(1, 1),
                &z2 * &u(1, 2),
                &z2 * &u(1, 3),
            ],
            vec![
                ring.zero(),
                u(2, 1),
                -&u(1, 1),
                ring.zero(),
                -&pi(3),
                pi(2),
            ],
            vec![ring.zero(), u(2, 2), -&u(1, 2), pi(3), ring.zero(), -&pi(1)],
            vec![ring.zero(), u(2, 3), -&u(1, 3), -&pi(2), pi(1), ring.zero()],
        ],
    );

    let d3 = PolyMatrix::from_rows(
        ring,
        vec![
            vec![w1.clone(), z2.clone()],
            vec![upi1.clone(), ring.zero()],
            vec![upi2.clone(), ring.zero()],
            vec![delta[0].clone(), pi(1)],
            vec![delta[1].clone(), pi(2)],
            vec![delta[2].clone(), pi(3)],
        ],
    );

    FreeComplex::new(ring, "B", b_modules(), vec![d1, d2, d3])
}

/// The eleven-variable resolution built by evaluating the coordinate-free
/// differentials through the exterior engine.  Agrees entrywise with
/// [`build_b_matrices`].
pub fn build_b_coordinate_free() -> FreeComplex {
    let data = GenericData::for_b();
    let sc = Scene::new(&data);
    let ring = &sc.ring;
    let phi_t = data.phi.transpose();
    let apply1 = |m: &PolyMatrix, target: &BasedFreeModule, x: &ExtElement| {
        apply_map_power(m, target, 1, x)
    };
    let psi_omega = contract(&data.psi, &sc.omega_f);
    let ext2_phistar = apply_map_power(&phi_t, &sc.fs, 2, &sc.omega_gs);

    // d3 columns indexed by (Ω_{G*}⊗Ω_F, −Ω_F).
    let mut d3_cols = Vec::new();
    {
        // γ₂⊗f₃ = Ω_{G*}⊗Ω_F, f₃′ = 0.
        let zeta_gs = contract(&data.zeta, &sc.omega_gs).scalar_value();
        let row_f3 = zeta_gs;
        let phi_psi = apply1(&data.phi, &sc.g, &psi_omega);
        let comp_gs = -&contract(&phi_psi, &sc.omega_gs);
        let gsc = sc.gs_signed_coords(&comp_gs);
        let comp_f = contract(&ext2_phistar, &sc.omega_f);
        let fc = sc.f_coords(&comp_f);
        d3_cols.push(vec![
            row_f3,
            gsc[0].clone(),
            gsc[1].clone(),
            fc[0].clone(),
            fc[1].clone(),
            fc[2].clone(),
        ]);
    }
    {
        // f₃′ = −Ω_F, γ₂⊗f₃ = 0.
        let f3p = sc.omega_f.mul_int(-1);
        let row_f3 = -&(&data.z2 * &sc.on_omega_f(&f3p));
        let comp_f = contract(&data.psi, &f3p);
        let fc = sc.f_coords(&comp_f);
        d3_cols.push(vec![
            row_f3,
            ring.zero(),
            ring.zero(),
            fc[0].clone(),
            fc[1].clone(),
            fc[2].clone(),
        ]);
    }
    let d3 = PolyMatrix::from_fn(ring, 6, 2, |r, c| d3_cols[c][r].clone());

    // d2 columns indexed by (Ω_F, −β2*, β1*, e1, e2, e3); the output has a
    // G component in the signed basis (−β2, β1) and an F* component.
    let mut d2_cols = Vec::new();
    {
        // f₃ = Ω_F.
        let comp_g = apply1(&data.phi, &sc.g, &psi_omega);
        let gc = sc.g_signed_coords(&comp_g);
        d2_cols.push(vec![
            gc[0].clone(),
            gc[1].clone(),
            ring.zero(),
            ring.zero(),
            ring.zero(),
        ]);
    }
    for gamma in [
        ExtElement::generator(ring, &sc.gs, 1).mul_int(-1),
        ExtElement::generator(ring, &sc.gs, 0),
    ] {
        // γ₁ ∈ {−β2*, β1*}.
        let comp_g = contract(&gamma, &data.zeta);
        let gc = sc.g_signed_coords(&comp_g);
        let comp_fs = -&apply1(&phi_t, &sc.fs, &gamma);
        let fsc = sc.fs_coords(&comp_fs);
        d2_cols.push(vec![
            gc[0].clone(),
            gc[1].clone(),
            fsc[0].clone(),
            fsc[1].clone(),
            fsc[2].clone(),
        ]);
    }
    for i in 0..3 {
        // f₁ = e_i.
        let f1 = ExtElement::generator(ring, &sc.f, i);
        let comp_g = apply1(&data.phi, &sc.g, &f1).scale(&data.z2);
        let gc = sc.g_signed_coords(&comp_g);
        let comp_fs = contract(&f1, &data.psi);
        let fsc = sc.fs_coords(&comp_fs);
        d2_cols.push(vec![
            gc[0].clone(),
            gc[1].clone(),
            fsc[0].clone(),
            fsc[1].clone(),
            fsc[2].clone(),
        ]);
    }
    let d2 = PolyMatrix::from_fn(ring, 5, 6, |r, c| d2_cols[c][r].clone());

    // d1 columns indexed by (−β2, β1, e1*, e2*, e3*); the value is the
    // coordinate on the generator Ω_G⊗Ω_{F*} of ∧²G⊗∧³F*.
    let phi_psi = apply1(&data.phi, &sc.g, &psi_omega);
    let mut d1_entries = Vec::new();
    for g1 in [
        ExtElement::generator(ring, &sc.g, 1).mul_int(-1),
        ExtElement::generator(ring, &sc.g, 0),
    ] {
        d1_entries.push(-&sc.on_omega_g(&g1.wedge(&phi_psi)));
    }
    for i in 0..3 {
        let f1 = ExtElement::generator(ring, &sc.fs, i);
        let first = &data.z2 * &sc.on_omega_fs(&f1.wedge(&ext2_phistar));
        let second = &data.zeta_scalar * &sc.on_omega_fs(&f1.wedge(&data.psi));
        d1_entries.push(&first + &second);
    }
    let d1 = PolyMatrix::from_rows(ring, vec![d1_entries]);

    FreeComplex::new(ring, "B", b_modules(), vec![d1, d2, d3])
}

/// Package the 2×3 matrix `u` and the 2-form coefficients `pi` as the 5×5
/// alternating matrix [[0, u], [−uᵀ, S]], where S is the alternating 3×3
/// matrix acting on basis vectors the way contraction against
/// pi1·e2*∧e3* − pi2·e1*∧e3* + pi3·e1*∧e2* does.
pub fn assemble_bordered_alternating(u: &PolyMatrix, pi: &PolyMatrix) -> PolyMatrix {
    assert_eq!((u.rows(), u.cols()), (2, 3), "u must be 2×3");
    assert_eq!((pi.rows(), pi.cols()), (3, 1), "pi must be a column of length 3");
    let ring = u.ring().clone();
    let p = |i: usize| pi.get(i - 1, 0).clone();
    let lower = PolyMatrix::from_rows(
        &ring,
        vec![
            vec![ring.zero(), -&p(3), p(2)],
            vec![p(3), ring.zero(), -&p(1)],
            vec![-&p(2), p(1), ring.zero()],
        ],
    );
    PolyMatrix::from_fn(&ring, 5, 5, |r, c| {
        if r < 2 && c < 2 {
            ring.zero()
        } else if r < 2 {
            u.get(r, c - 2).clone()
        } else if c < 2 {
            -u.get(c, r - 2)
        } else {
            lower.get(r - 2, c - 2).clone()
        }
    })
}

/// The 3×2 matrix Λ of the hyperplane-section construction.
pub fn hyperplane_lambda(ring: &PolyRing) -> PolyMatrix {
    PolyMatrix::from_rows(
        ring,
        vec![
            vec![ring.var("lam11"), ring.var("lam12")],
            vec![ring.var("lam21"), ring.var("lam22")],
            vec![ring.var("lam31"), ring.var("lam32")],
        ],
    )
}

/// Signed maximal minors of a 3×2 matrix: entry i is (−1)^{i+1} times the
/// determinant of the matrix with row i deleted, so that the row vector of
/// minors annihilates the matrix.
pub fn signed_maximal_minors(m: &PolyMatrix) -> Vec<Polynomial> {
    assert_eq!((m.rows(), m.cols()), (3, 2), "expected a 3×2 matrix");
    (0..3)
        .map(|i| {
            let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
            let minor = m.submatrix(&rows, &[0, 1]).det();
            if i % 2 == 0 {
                minor
            } else {
                -&minor
            }
        })
        .collect()
}

/// The resolution of the quotient by (delta0, delta1, delta2, delta3) over
/// [`hyperplane_ring`]: the length-two determinantal resolution of the minors of
/// Λ tensored with the length-one complex on delta0.  Ranks (2, 5, 4, 1).
pub fn build_hyperplane_aci_resolution() -> FreeComplex {
    let ring = hyperplane_ring();
    let lambda = hyperplane_lambda(&ring);
    let delta = signed_maximal_minors(&lambda);
    let hb = {
        let d1 = PolyMatrix::from_rows(&ring, vec![delta.clone()]);
        let modules = vec![
            ModuleData::with_twists(&["1"], &[(0, 0)]),
            ModuleData::with_twists(&["d1", "d2", "d3"], &[(1, 1), (1, 1), (2, 0)]),
            ModuleData::with_twists(&["s1", "s2"], &[(2, 1), (2, 1)]),
        ];
        FreeComplex::new(&ring, "HilbertBurch(Λ)", modules, vec![d1, lambda.clone()])
    };
    let k0 = koszul_complex(&[ring.var("delta0")], "K(delta0)");
    hb.tensor(&k0, "HB")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_matrices_form_a_bigraded_complex() {
        let q = build_q_matrices();
        assert_eq!(q.ranks(), vec![1, 5, 6, 2]);
        q.check_complex().unwrap();
        q.check_bigrading().unwrap();
    }

    #[test]
    fn q_matrix_entries_match_the_printed_tables() {
        let q = build_q_matrices();
        let ring = q.ring().clone();
        let v = |n: &str| ring.var(n);
        // Left block of d2, entry (row ΩG⊗ΩF*, col β1).
        let expect = &(&(&v("psi12") * &v("a23")) - &(&v("psi13") * &v("a22")))
            + &(&v("psi23") * &v("a21"));
        assert_eq!(q.differential(2).get(0, 0), &expect);
        // d3 entry (row ΩF*, col β1*).
        let expect = &(&(-&(&v("a11") * &v("psi23"))) + &(&v("a12") * &v("psi13")))
            - &(&v("a13") * &v("psi12"));
        assert_eq!(q.differential(3).get(2, 0), &expect);
        // Second generator of the image ideal, fully expanded.
        let p_t_a_t = |g: &str, h: &str| {
            let col1 = &(&(&v("psi23") * &v("a11")) - &(&v("psi13") * &v("a12")))
                + &(&v("psi12") * &v("a13"));
            let col2 = &(&(&v("psi23") * &v("a21")) - &(&v("psi13") * &v("a22")))
                + &(&v("psi12") * &v("a23"));
            &(&col1 * &v(g)) + &(&col2 * &(-&v(h)))
        };
        let det_a_23 = &(&v("a12") * &v("a23")) - &(&v("a13") * &v("a22"));
        let expect = &(&p_t_a_t("l21", "l11") - &(&v("z2") * &det_a_23)) + &(&v("z1") * &v("psi23"));
        assert_eq!(q.differential(1).get(0, 1), &expect);
        // Bottom row of the right block of d2.
        assert_eq!(q.differential(2).get(4, 3), &(-&v("psi23")));
        assert_eq!(q.differential(2).get(4, 4), &v("psi13"));
        assert_eq!(q.differential(2).get(4, 5), &(-&v("psi12")));
    }

    #[test]
    fn coordinate_free_q_equals_the_matrix_form_entrywise() {
        let qm = build_q_matrices();
        let qc = build_q_coordinate_free();
        for i in 1..=3 {
            assert_eq!(
                qc.differential(i),
                qm.differential(i),
                "differential {i} disagrees between the two constructions"
            );
        }
        qc.check_complex().unwrap();
        qc.check_bigrading().unwrap();
    }

    #[test]
    fn m_is_a_bigraded_complex_with_the_printed_entries() {
        let m = build_m();
        assert_eq!(m.ranks(), vec![1, 5, 6, 2]);
        m.check_complex().unwrap();
        m.check_bigrading().unwrap();
        let ring = m.ring().clone();
        let v = |n: &str| ring.var(n);
        // Last entry of d1 is t² minus the discriminant-style quartic.
        let a_pf = &(&(&v("x12") * &v("x34")) - &(&v("x13") * &v("x24"))) + &(&v("x14") * &v("x23"));
        let c_pf = &(&(&v("y12") * &v("y34")) - &(&v("y13") * &v("y24"))) + &(&v("y14") * &v("y23"));
        let b_pf = {
            let s = &(&(&v("x12") * &v("y34")) - &(&v("x13") * &v("y24"))) + &(&v("x14") * &v("y23"));
            let s2 = &(&(&v("y12") * &v("x34")) - &(&v("y13") * &v("x24"))) + &(&v("y14") * &v("x23"));
            &s + &s2
        };
        let u = &(&b_pf * &b_pf) - &(&ring.int(4) * &(&a_pf * &c_pf));
        let expect = &(-&u) + &(&v("t") * &v("t"));
        assert_eq!(m.differential(1).get(0, 4), &expect);
        // Bottom row of the left block of d2.
        assert!(m.differential(2).get(4, 0).is_zero());
        assert!(m.differential(2).get(4, 1).is_zero());
        assert_eq!(m.differential(2).get(4, 2), &(-&v("z234")));
        // d3 entry (row 2, col 1).
        let expect = (&(&(&v("y12") * &v("y34")) - &(&v("y13") * &v("y24")))
            + &(&v("y14") * &v("y23")))
            .mul_int(-2);
        assert_eq!(m.differential(3).get(1, 0), &expect);
    }

    #[test]
    fn b_matrices_form_a_bigraded_complex_with_the_printed_entries() {
        let b = build_b_matrices();
        assert_eq!(b.ranks(), vec![1, 5, 6, 2]);
        b.check_complex().unwrap();
        b.check_bigrading().unwrap();
        let ring = b.ring().clone();
        let v = |n: &str| ring.var(n);
        let upi1 = &(&(&v("u11") * &v("pi1")) + &(&v("u12") * &v("pi2"))) + &(&v("u13") * &v("pi3"));
        let upi2 = &(&(&v("u21") * &v("pi1")) + &(&v("u22") * &v("pi2"))) + &(&v("u23") * &v("pi3"));
        let delta1 = &(&v("u12") * &v("u23")) - &(&v("u13") * &v("u22"));
        assert_eq!(b.differential(1).get(0, 0), &upi1);
        assert_eq!(b.differential(1).get(0, 1), &upi2);
        let expect = &(&v("z2") * &delta1) - &(&v("w1") * &v("pi1"));
        assert_eq!(b.differential(1).get(0, 2), &expect);
        // d2 entry (row −β2, col e1).
        assert_eq!(b.differential(2).get(0, 3), &(-&(&v("z2") * &v("u21"))));
        // First column of d3.
        assert_eq!(b.differential(3).get(0, 0), &v("w1"));
        assert_eq!(b.differential(3).get(1, 0), &upi1);
        assert_eq!(b.differential(3).get(2, 0), &upi2);
        assert_eq!(b.differential(3).get(3, 0), &delta1);
        assert_eq!(b.differential(3).get(0, 1), &v("z2"));
        assert_eq!(b.differential(3).get(3, 1), &v("pi1"));
    }

    #[test]
    fn coordinate_free_b_equals_the_matrix_form_entrywise() {
        let bm = build_b_matrices();
        let bc = build_b_coordinate_free();
        for i in 1..=3 {
            assert_eq!(
                bc.differential(i),
                bm.differential(i),
                "differential {i} disagrees between the two constructions"
            );
        }
        bc.check_complex().unwrap();
        bc.check_bigrading().unwrap();
    }

    #[test]
    fn bordered_alternating_matrix_is_alternating_with_the_right_blocks() {
        let data = GenericData::for_b();
        let t = assemble_bordered_alternating(&data.phi, &data.psi_vec);
        let sum = &t + &t.transpose();
        assert!(sum.is_zero(), "T + Tᵀ must vanish");
        for i in 0..5 {
            assert!(t.get(i, i).is_zero(), "diagonal must vanish");
        }
        for r in 0..2 {
            for c in 0..2 {
                assert!(t.get(r, c).is_zero(), "top-left block must vanish");
            }
        }
        // The lower-right block columns are the contractions e_i(ψ).
        let ring = data.ring.clone();
        let sc = Scene::new(&data);
        for i in 0..3 {
            let ei = ExtElement::generator(&ring, &sc.f, i);
            let contracted = contract(&ei, &data.psi);
            for j in 0..3 {
                assert_eq!(
                    &contracted.coefficient(&[j as u8]),
                    t.get(2 + j, 2 + i),
                    "dictionary mismatch at column {i}, row {j}"
                );
            }
        }
    }

    #[test]
    fn hyperplane_resolution_has_the_stated_shape() {
        let hb = build_hyperplane_aci_resolution();
        assert_eq!(hb.ranks(), vec![1, 4, 5, 2]);
        hb.check_complex().unwrap();
        hb.check_bigrading().unwrap();
        let ring = hb.ring().clone();
        // H₀ is presented by (delta0, delta1, delta2, delta3).
        let lambda = hyperplane_lambda(&ring);
        let delta = signed_maximal_minors(&lambda);
        let d1 = hb.differential(1);
        assert_eq!(d1.get(0, 0), &ring.var("delta0"));
        for i in 0..3 {
            assert_eq!(d1.get(0, 1 + i), &delta[i]);
        }
        // The minor row annihilates Λ.
        let row = PolyMatrix::from_rows(&ring, vec![delta.clone()]);
        assert!((&row * &lambda).is_zero());
        // Twists of the top module.
        assert_eq!(
            hb.module(3).twists.as_ref().unwrap(),
            &vec![Bidegree(2, 2), Bidegree(2, 2)]
        );
    }
}
