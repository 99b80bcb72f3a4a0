//! Producing one length-three resolution from another through the dual of a
//! mapping cone, together with the regular-sequence scaffolding: Koszul
//! complexes, product-matrix sequences, the comparison map from the Koszul
//! complex into the eleven-variable resolution, and the colon-ideal data of
//! the hyperplane-section example.

use crate::certify::{graded_membership, GradedMembershipProblem};
use crate::complexes::{mapping_cone, remove_split_summand, ChainMap, FreeComplex, ModuleData};
use crate::exterior::{apply_map_power, contract, BasedFreeModule, ExtElement};
use crate::matrix::{solve_rational, PolyMatrix};
use crate::resolutions::{
    b_ring, build_b_matrices, build_q_matrices, hyperplane_lambda, hyperplane_ring, q_ring,
    signed_maximal_minors, GenericData, Scene,
};
use crate::ring::{
    Bidegree, BidegreeClass, CoefficientDomain, Monomial, PolyRing, Polynomial, RingMap,
};
use crate::specializations::{
    psi_colon_ideal_checks, CheckResult, LadderDirection, SpecializationCertificate,
};
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

/// Standard Koszul complex on a sequence of ring elements: degree k is the
/// k-th exterior power of a free module with one basis vector per element,
/// and the differential contracts against the sequence.
pub fn koszul_complex(seq: &[Polynomial], name: &str) -> FreeComplex {
    assert!(!seq.is_empty(), "Koszul complex needs at least one element");
    let ring = seq[0].ring().clone();
    for f in seq {
        assert!(ring.same_ring(f.ring()), "Koszul elements from different rings");
    }
    let n = seq.len();
    let degrees: Vec<Option<Bidegree>> = seq
        .iter()
        .map(|f| match f.bidegree_class() {
            BidegreeClass::Zero => Some(Bidegree(0, 0)),
            BidegreeClass::Pure(d) => Some(d),
            BidegreeClass::Mixed => None,
        })
        .collect();
    let graded = degrees.iter().all(|d| d.is_some());

    let mut modules = Vec::new();
    let mut bases: Vec<Vec<Vec<u8>>> = Vec::new();
    for k in 0..=n {
        let basis = crate::exterior::subsets(n, k);
        let labels: Vec<String> = basis
            .iter()
            .map(|s| {
                if s.is_empty() {
                    "1".to_string()
                } else {
                    s.iter()
                        .map(|i| format!("k{}", i + 1))
                        .collect::<Vec<_>>()
                        .join("∧")
                }
            })
            .collect();
        let twists = if graded {
            Some(
                basis
                    .iter()
                    .map(|s| {
                        s.iter()
                            .map(|&i| degrees[i as usize].unwrap())
                            .fold(Bidegree(0, 0), |a, b| a + b)
                    })
                    .collect(),
            )
        } else {
            None
        };
        modules.push(ModuleData {
            rank: basis.len(),
            labels,
            twists,
        });
        bases.push(basis);
    }

    let mut diffs = Vec::new();
    for k in 1..=n {
        let rows = bases[k - 1].len();
        let cols = bases[k].len();
        let mut d = PolyMatrix::zero(&ring, rows, cols);
        for (c, subset) in bases[k].iter().enumerate() {
            for (j, &s) in subset.iter().enumerate() {
                let mut rest = subset.clone();
                rest.remove(j);
                let r = bases[k - 1]
                    .iter()
                    .position(|b| b == &rest)
                    .expect("boundary subset present");
                let term = if j % 2 == 0 {
                    seq[s as usize].clone()
                } else {
                    -&seq[s as usize]
                };
                let updated = d.get(r, c) + &term;
                d.set(r, c, updated);
            }
        }
        diffs.push(d);
    }
    FreeComplex::new(&ring, name, modules, diffs)
}

/// A sequence of ring elements expected to be regular, tagged with the
/// construction that produced it.
#[derive(Clone, Debug)]
pub struct RegularSequenceCandidate {
    pub entries: Vec<Polynomial>,
    pub provenance: String,
}

/// Multiply a row of ring elements by the block matrix [[X|Y], [I, 0]]:
/// X has shape (n−c₁)×c₁ and Y has shape (n−c₁)×c₂, the identity block is
/// c₁×c₁, and the product has c₁+c₂ entries.  With c₁ = c₂ = 0 the block
/// matrix degenerates to the identity and the sequence comes back unchanged.
pub fn build_product_sequence(
    a: &[Polynomial],
    x: &PolyMatrix,
    y: &PolyMatrix,
    c1: usize,
    c2: usize,
) -> RegularSequenceCandidate {
    assert!(!a.is_empty(), "empty sequence");
    let ring = a[0].ring().clone();
    let n = a.len();
    if c1 == 0 && c2 == 0 {
        return RegularSequenceCandidate {
            entries: a.to_vec(),
            provenance: "identity product".to_string(),
        };
    }
    assert!(c1 <= n, "identity block larger than the sequence");
    let top = n - c1;
    assert_eq!(
        (x.rows(), x.cols()),
        (top, c1),
        "X block must be {}×{}",
        top,
        c1
    );
    assert_eq!(
        (y.rows(), y.cols()),
        (top, c2),
        "Y block must be {}×{}",
        top,
        c2
    );
    let mut entries = Vec::new();
    for j in 0..c1 {
        let mut e = a[top + j].clone();
        for i in 0..top {
            e = &e + &(&a[i] * x.get(i, j));
        }
        entries.push(e);
    }
    for j in 0..c2 {
        let mut e = ring.zero();
        for i in 0..top {
            e = &e + &(&a[i] * y.get(i, j));
        }
        entries.push(e);
    }
    RegularSequenceCandidate {
        entries,
        provenance: format!("product matrix with c1={c1}, c2={c2}"),
    }
}

/// The row (δ₀, δ₁, δ₂, δ₃) over the eleven-variable hyperplane-section
/// ring: the free variable δ₀ followed by the signed maximal minors of Λ.
pub fn hyperplane_delta_row(ring: &PolyRing) -> Vec<Polynomial> {
    let mut row = vec![ring.var("delta0")];
    row.extend(signed_maximal_minors(&hyperplane_lambda(ring)));
    row
}

/// The displayed 4×3 matrix multiplying the δ-row from the right: a row of
/// α variables over an identity block, with β scaling the last column.
pub fn hyperplane_x_matrix(ring: &PolyRing) -> PolyMatrix {
    let z = ring.zero();
    let one = ring.one();
    PolyMatrix::from_rows(
        ring,
        vec![
            vec![ring.var("alpha1"), ring.var("alpha2"), ring.var("alpha3")],
            vec![one.clone(), z.clone(), z.clone()],
            vec![z.clone(), one, z.clone()],
            vec![z.clone(), z, ring.var("beta")],
        ],
    )
}

/// The three hyperplane-section forms (n₁, n₂, n₃), produced by multiplying
/// the δ-row into the displayed 4×3 matrix.
pub fn hyperplane_forms(ring: &PolyRing) -> RegularSequenceCandidate {
    let delta = hyperplane_delta_row(ring);
    let x = hyperplane_x_matrix(ring);
    let mut entries = Vec::new();
    for j in 0..x.cols() {
        let mut e = ring.zero();
        for (i, d) in delta.iter().enumerate() {
            e = &e + &(d * x.get(i, j));
        }
        entries.push(e);
    }
    RegularSequenceCandidate {
        entries,
        provenance: "delta row times the displayed 4-by-3 matrix".to_string(),
    }
}

/// The five generators of the colon ideal (n₁, n₂, n₃) : (δ₀, δ₁, δ₂, δ₃):
/// the three nᵢ themselves and two mixed λ-α-β forms.
pub fn hyperplane_colon_generators(ring: &PolyRing) -> Vec<Polynomial> {
    let mut gens = hyperplane_forms(ring).entries;
    let b = ring.var("beta");
    let a = [ring.var("alpha1"), ring.var("alpha2"), ring.var("alpha3")];
    for j in 1..=2 {
        let mut g = ring.zero();
        for i in 1..=2 {
            g = &g + &(&(&ring.var(&format!("lam{i}{j}")) * &a[i - 1]) * &b);
        }
        g = &g + &(&ring.var(&format!("lam3{j}")) * &a[2]);
        gens.push(g);
    }
    gens
}

/// Solve for a chain map from `a` to `b` extending the degree-zero matrix
/// `f0`, using that entry (r, c) of the degree-i component must be
/// bihomogeneous of bidegree twist_a(i)[c] − twist_b(i)[r].  Each square is
/// solved exactly by linear algebra on monomial coefficients; returns None
/// when some square has no solution with coefficients admitted by the ring.
pub fn solve_graded_chain_map(
    a: &FreeComplex,
    b: &FreeComplex,
    f0: PolyMatrix,
) -> Option<ChainMap> {
    assert!(a.ring().same_ring(b.ring()), "complexes over different rings");
    assert_eq!(a.top(), b.top(), "complexes of different lengths");
    let ring = a.ring().clone();
    let top = a.top();
    let mut maps = vec![f0];
    for i in 1..=top {
        let twists_a = a
            .module(i)
            .twists
            .as_ref()
            .expect("source twists required")
            .clone();
        let twists_b = b
            .module(i)
            .twists
            .as_ref()
            .expect("target twists required")
            .clone();
        let lhs = &maps[i - 1] * a.differential(i);
        let db = b.differential(i);
        let mut fi = PolyMatrix::zero(&ring, b.rank(i), a.rank(i));
        for c in 0..a.rank(i) {
            // Unknowns for column c: one coefficient per admissible monomial
            // in each entry of the column.
            let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
            for (k, twist_b) in twists_b.iter().enumerate() {
                let delta = twists_a[c] - *twist_b;
                for m in ring.monomials_of_bidegree(delta) {
                    unknowns.push((k, m));
                }
            }
            // Expand Σ db[r][k]·x_{k,m}·m = lhs[r][c] into scalar equations
            // indexed by (row r, monomial).
            let mut products: Vec<Vec<Polynomial>> = Vec::new();
            for (k, m) in &unknowns {
                let mono = Polynomial::from_terms(
                    ring.clone(),
                    vec![(m.clone(), BigRational::one())],
                );
                let col: Vec<Polynomial> =
                    (0..db.rows()).map(|r| db.get(r, *k) * &mono).collect();
                products.push(col);
            }
            let mut monomials: Vec<Monomial> = Vec::new();
            let mut note = |p: &Polynomial| {
                for (m, _) in p.terms_desc() {
                    if !monomials.contains(m) {
                        monomials.push(m.clone());
                    }
                }
            };
            for col in &products {
                for p in col {
                    note(p);
                }
            }
            for r in 0..db.rows() {
                note(lhs.get(r, c));
            }
            let mut system: Vec<Vec<BigRational>> = Vec::new();
            let mut rhs: Vec<BigRational> = Vec::new();
            for r in 0..db.rows() {
                for m in &monomials {
                    system.push(products.iter().map(|col| col[r].coefficient(m)).collect());
                    rhs.push(lhs.get(r, c).coefficient(m));
                }
            }
            let solution = solve_rational(&system, &rhs)?;
            for ((k, m), value) in unknowns.iter().zip(solution) {
                if value.is_zero() {
                    continue;
                }
                if !ring.domain().admits(&value) {
                    return None;
                }
                let term = Polynomial::from_terms(ring.clone(), vec![(m.clone(), value)]);
                let updated = fi.get(*k, c) + &term;
                fi.set(*k, c, updated);
            }
        }
        // Confirm the square exactly; free variables were set to zero, which
        // can break a square that had a solution only on a different slice.
        if !(&(&maps[i - 1] * a.differential(i)) - &(db * &fi)).is_zero() {
            return None;
        }
        maps.push(fi);
    }
    Some(ChainMap::new(a, b, maps))
}

/// The seventeen-variable ring of the linkage construction: the eleven
/// variables of the smaller resolution followed by the six entries of a
/// fresh 2×3 matrix ℓ of linear forms.
pub fn link_ring() -> PolyRing {
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
            ("l11", Bidegree(1, 0)),
            ("l12", Bidegree(1, 0)),
            ("l13", Bidegree(1, 0)),
            ("l21", Bidegree(1, 0)),
            ("l22", Bidegree(1, 0)),
            ("l23", Bidegree(1, 0)),
        ],
        CoefficientDomain::Integers,
    )
}

/// Carry the eleven-variable ring into the linkage ring unchanged.
fn small_ring_inclusion(target: &PolyRing) -> RingMap {
    let source = b_ring();
    let names: Vec<String> = source.var_names().to_vec();
    let pairs: Vec<(&str, Polynomial)> = names
        .iter()
        .map(|n| (n.as_str(), target.var(n)))
        .collect();
    RingMap::from_pairs(source, target.clone(), &pairs)
}

/// The committed renaming of the seventeen generic variables into the
/// linkage ring: the generic matrix becomes `u`, ℓ keeps its entries, the
/// three 2-form coefficients become the signed `pi` variables, and the two
/// distinguished scalars become `w1` and `z2`.
pub fn link_dictionary() -> RingMap {
    let source = q_ring();
    let target = link_ring();
    let t = |n: &str| target.var(n);
    let pairs = vec![
        ("a11", t("u11")),
        ("a12", t("u12")),
        ("a13", t("u13")),
        ("a21", t("u21")),
        ("a22", t("u22")),
        ("a23", t("u23")),
        ("l11", t("l11")),
        ("l12", t("l12")),
        ("l13", t("l13")),
        ("l21", t("l21")),
        ("l22", t("l22")),
        ("l23", t("l23")),
        ("psi12", t("pi3")),
        ("psi13", -&t("pi2")),
        ("psi23", t("pi1")),
        ("z1", t("w1")),
        ("z2", t("z2")),
    ];
    RingMap::from_pairs(source, target, &pairs)
}

/// The generic data of the eleven-variable resolution transported into the
/// linkage ring, with the fresh ℓ installed.
pub fn link_data() -> GenericData {
    let ring = link_ring();
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
        ell: Some(ell),
        psi,
        psi_vec,
        zeta,
        zeta_scalar: v("w1"),
        z2: v("z2"),
    }
}

/// The comparison chain map from the Koszul complex on the composite row
/// ⟨b₁⟩·c₁ into the given resolution.  Degree one sends eⱼ* to
/// ℓ(eⱼ*) ⊕ eⱼ*; the two higher components pair ℓ, φ, ψ, and ζ against the
/// orientation generators, landing in ∧³F ⊕ G* ⊕ F and
/// (∧²G*⊗∧³F) ⊕ ∧³F respectively.
pub fn build_comparison_c(data: &GenericData, b: &FreeComplex) -> ChainMap {
    assert!(
        data.ring.same_ring(b.ring()),
        "generic data and resolution live over different rings"
    );
    let ell = data.ell.as_ref().expect("comparison map needs ℓ");
    let sc = Scene::new(data);
    let ring = &sc.ring;
    let ell_t = ell.transpose();
    let apply1 = |m: &PolyMatrix, target: &BasedFreeModule, x: &ExtElement| {
        apply_map_power(m, target, 1, x)
    };

    // Degree one: columns over (e1*, e2*, e3*), output in the basis
    // (−β2, β1, e1*, e2*, e3*).
    let mut c1 = PolyMatrix::zero(ring, 5, 3);
    for j in 0..3 {
        let lej = apply1(ell, &sc.g, &ExtElement::generator(ring, &sc.fs, j));
        let gc = sc.g_signed_coords(&lej);
        c1.set(0, j, gc[0].clone());
        c1.set(1, j, gc[1].clone());
        c1.set(2 + j, j, ring.one());
    }

    // The Koszul row is the composite of c₁ with the first differential,
    // read through the rank-one identification in degree zero.
    let vrow = b.differential(1) * &c1;
    let seq: Vec<Polynomial> = (0..3).map(|j| vrow.get(0, j).clone()).collect();
    let k = koszul_complex(&seq, "K");

    // Orientation bookkeeping: the pairing of ∧²G ⊗ ∧³F* against the
    // degree-zero generator, and the unit it assigns to the chosen
    // orientation classes.
    let chi_g = ExtElement::basis(ring, &sc.g, &[0, 1]);
    let chi_fs = ExtElement::basis(ring, &sc.fs, &[2, 1, 0]);
    let p_tensor =
        |x: &ExtElement, y: &ExtElement| -> Polynomial { &sc.on_omega_g(x) * &sc.on_omega_fs(y) };
    let p_orient = p_tensor(&chi_g, &chi_fs);
    let pair_g = |x: &ExtElement| -> Polynomial { contract(x, &sc.omega_gs).scalar_value() };

    let psi_omega = contract(&data.psi, &sc.omega_f);
    let mixed_sum = (0..3)
        .map(|i| {
            let ei = ExtElement::generator(ring, &sc.f, i);
            let eis = ExtElement::generator(ring, &sc.fs, i);
            apply1(&data.phi, &sc.g, &ei).wedge(&apply1(ell, &sc.g, &eis))
        })
        .fold(ExtElement::zero(ring, &sc.g, 2), |acc, w| &acc + &w);
    let mixed_gs = pair_g(&mixed_sum);
    let zeta_gs = pair_g(&data.zeta);

    // Degree two: columns over (e1*∧e2*, e1*∧e3*, e2*∧e3*), output in the
    // basis (ΩF, −β2*, β1*, e1, e2, e3).
    let mut c2 = PolyMatrix::zero(ring, 6, 3);
    for (col, idx) in [[0u8, 1], [0, 2], [1, 2]].iter().enumerate() {
        let f2 = ExtElement::basis(ring, &sc.fs, idx);
        let f2_omega = contract(&f2, &sc.omega_f);
        let top = -&pair_g(&apply_map_power(ell, &sc.g, 2, &f2));
        let t1 = contract(
            &apply1(ell, &sc.g, &contract(&psi_omega, &f2)),
            &sc.omega_gs,
        );
        let t2 = contract(&apply1(&data.phi, &sc.g, &f2_omega), &sc.omega_gs).scale(&data.z2);
        let gsc = sc.gs_signed_coords(&(&t1 + &t2));
        let ell_pull = apply1(
            &ell_t,
            &sc.f,
            &contract(&apply1(&data.phi, &sc.g, &f2_omega), &sc.omega_gs),
        );
        let comp_f =
            &(&(-&f2_omega.scale(&mixed_gs)) - &ell_pull) - &f2_omega.scale(&zeta_gs);
        let fc = sc.f_coords(&comp_f);
        let entries = [
            top,
            gsc[0].clone(),
            gsc[1].clone(),
            fc[0].clone(),
            fc[1].clone(),
            fc[2].clone(),
        ];
        for (r, e) in entries.iter().enumerate() {
            c2.set(r, col, e * &p_orient);
        }
    }

    // Degree three: one column over e1*∧e2*∧e3*, output in the basis
    // (ΩG*⊗ΩF, −ΩF).
    let f3 = ExtElement::basis(ring, &sc.fs, &[0, 1, 2]);
    let l2psi = apply_map_power(ell, &sc.g, 2, &data.psi);
    let row0 = &(&(-&p_tensor(&l2psi, &f3)) - &(&data.z2 * &p_tensor(&mixed_sum, &f3)))
        - &(&data.z2 * &p_tensor(&data.zeta, &f3));
    let row0 = &row0 * &p_orient;
    let phi_lstar = &data.phi * &ell_t;
    let ext2 = apply_map_power(&phi_lstar, &sc.g, 2, &sc.omega_gs);
    let on_chi_f = &(&(&p_orient * &p_tensor(&ext2, &f3))
        - &(&p_tensor(&data.zeta, &f3) * &p_tensor(&mixed_sum, &chi_fs)))
        - &(&p_tensor(&data.zeta, &f3) * &p_tensor(&data.zeta, &chi_fs));
    let c3 = PolyMatrix::from_fn(ring, 2, 1, |r, _| {
        if r == 0 {
            row0.clone()
        } else {
            -&on_chi_f
        }
    });

    let c0 = PolyMatrix::identity(ring, 1);
    ChainMap::new(&k, b, vec![c0, c1, c2, c3])
}

/// Every stage of the linkage pipeline, kept for reporting: the comparison
/// map, the mapping-cone ranks, the number of split-summand cancellations,
/// the reduced complex, and the certified identification with the renamed
/// seventeen-variable resolution.
pub struct LinkageRun {
    pub comparison: ChainMap,
    pub cone_ranks: Vec<usize>,
    pub cancellations: usize,
    pub linked: FreeComplex,
    pub certificate: SpecializationCertificate,
}

fn sorted_twists(c: &FreeComplex, i: usize) -> Result<Vec<Bidegree>, String> {
    let mut t = c
        .module(i)
        .twists
        .clone()
        .ok_or_else(|| format!("missing twists in degree {i}"))?;
    t.sort();
    Ok(t)
}

/// Run the linkage: cone over the comparison map, dualize, shift the twists
/// so the bottom generator sits in bidegree zero, cancel the split summand,
/// and certify a graded isomorphism with the seventeen-variable resolution
/// carried through [`link_dictionary`].
pub fn run_linkage() -> Result<LinkageRun, String> {
    let data = link_data();
    let inclusion = small_ring_inclusion(&data.ring);
    let b = build_b_matrices().apply_map(&inclusion, "B");
    let comparison = build_comparison_c(&data, &b);
    comparison.is_chain_map()?;

    let cone = mapping_cone(&comparison, "cone");
    cone.check_complex()?;
    cone.check_bigrading()?;
    let cone_ranks = cone.ranks();

    let shifted = cone.dual().shift_twists(Bidegree(6, 3));
    let reduction = remove_split_summand(&shifted);
    if reduction.cancellations != 4 {
        return Err(format!(
            "expected 4 split-summand cancellations, performed {}",
            reduction.cancellations
        ));
    }
    let linked = reduction.reduced.trim_top().renamed("linked");
    linked.check_complex()?;
    linked.check_bigrading()?;
    if linked.ranks() != vec![1, 5, 6, 2] {
        return Err(format!(
            "cancellation left ranks {:?} instead of [1, 5, 6, 2]",
            linked.ranks()
        ));
    }

    let dictionary = link_dictionary();
    let named = build_q_matrices().apply_map(&dictionary, "Q-renamed");
    for i in 0..=3 {
        let got = sorted_twists(&linked, i)?;
        let want = sorted_twists(&named, i)?;
        if got != want {
            return Err(format!(
                "degree-{i} twists {got:?} differ from the renamed resolution's {want:?}"
            ));
        }
    }

    let ring = data.ring.clone();
    let plus = PolyMatrix::identity(&ring, 1);
    let minus = plus.scale_int(-1);
    let attempts = [
        (plus.clone(), true),
        (minus.clone(), true),
        (plus, false),
        (minus, false),
    ];
    for (f0, from_named) in attempts {
        let found = if from_named {
            solve_graded_chain_map(&named, &linked, f0)
        } else {
            solve_graded_chain_map(&linked, &named, f0)
        };
        if let Some(ladder) = found {
            if ladder.is_complex_isomorphism().is_ok() {
                let direction = if from_named {
                    LadderDirection::SpecializedToNamed
                } else {
                    LadderDirection::NamedToSpecialized
                };
                return Ok(LinkageRun {
                    comparison,
                    cone_ranks,
                    cancellations: reduction.cancellations,
                    linked,
                    certificate: SpecializationCertificate {
                        map: dictionary,
                        ladder,
                        direction,
                    },
                });
            }
        }
    }
    Err("no graded isomorphism with the renamed seventeen-variable resolution".to_string())
}

/// The linked complex together with its certificate.
pub fn link_from_b() -> Result<(FreeComplex, SpecializationCertificate), String> {
    run_linkage().map(|run| (run.linked, run.certificate))
}

/// Pass/fail summary for one named verification suite.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
    pub first_failure: Option<String>,
}

impl VerificationReport {
    pub fn new(name: &str) -> VerificationReport {
        VerificationReport {
            name: name.to_string(),
            checks: Vec::new(),
            pass: true,
            first_failure: None,
        }
    }

    pub fn push(&mut self, name: &str, outcome: Result<(), String>) {
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

    pub fn absorb(&mut self, check: CheckResult) {
        if !check.pass {
            self.pass = false;
            if self.first_failure.is_none() {
                self.first_failure = Some(format!("{}: {}", check.name, check.detail));
            }
        }
        self.checks.push(check);
    }
}

/// Run the linkage pipeline and report each certified stage.
pub fn verify_linkage() -> VerificationReport {
    match run_linkage() {
        Ok(run) => linkage_run_report(&run),
        Err(detail) => {
            let mut report = VerificationReport::new("linkage");
            report.push("linkage pipeline", Err(detail));
            report
        }
    }
}

/// Per-stage checks of an already-completed linkage run.
pub fn linkage_run_report(run: &LinkageRun) -> VerificationReport {
    let mut report = VerificationReport::new("linkage");
    report.push("comparison map commutes", run.comparison.is_chain_map());
    report.push(
        "mapping cone has ranks (1, 6, 9, 5, 1)",
        if run.cone_ranks == vec![1, 6, 9, 5, 1] {
            Ok(())
        } else {
            Err(format!("found {:?}", run.cone_ranks))
        },
    );
    report.push(
        "split-summand removal cancels four pairs",
        if run.cancellations == 4 {
            Ok(())
        } else {
            Err(format!("performed {}", run.cancellations))
        },
    );
    report.push(
        "linked complex has ranks (1, 5, 6, 2)",
        if run.linked.ranks() == vec![1, 5, 6, 2] {
            Ok(())
        } else {
            Err(format!("found {:?}", run.linked.ranks()))
        },
    );
    report.push("linked complex is a complex", run.linked.check_complex());
    report.push("linked complex is bigraded", run.linked.check_bigrading());
    report.push(
        "ladder is an isomorphism of complexes",
        run.certificate.verify(),
    );
    report
}

/// Check the colon-ideal data of the hyperplane-section example: every
/// product of a colon generator with a δ entry lies in the form ideal, and
/// the signed-variable renaming carries the colon generators onto the ideal
/// the eleven-variable resolution resolves.
pub fn verify_hyperplane_colon() -> VerificationReport {
    let ring = hyperplane_ring();
    let forms = hyperplane_forms(&ring).entries;
    let gens = hyperplane_colon_generators(&ring);
    let delta = hyperplane_delta_row(&ring);
    let mut report = VerificationReport::new("hyperplane-colon");
    for (gi, g) in gens.iter().enumerate() {
        for (dj, d) in delta.iter().enumerate() {
            let problem = GradedMembershipProblem {
                target: g * d,
                generators: forms.clone(),
            };
            let outcome = if graded_membership(&problem).is_some() {
                Ok(())
            } else {
                Err("no graded witness".to_string())
            };
            report.push(
                &format!("generator {} times delta{dj} lies in the form ideal", gi + 1),
                outcome,
            );
        }
    }
    for check in psi_colon_ideal_checks() {
        report.absorb(check);
    }
    report
}

/// The thirteen-variable polynomial model for deforming the hyperplane
/// data: the eleven hyperplane variables plus two degree-neutral
/// deformation parameters.  The deformed data is checked by plain
/// polynomial identities, so the parameters carry no internal degree.
pub fn rigidity_ring() -> PolyRing {
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
            ("beta1", Bidegree(0, 0)),
            ("beta2", Bidegree(0, 0)),
        ],
        CoefficientDomain::Integers,
    )
}

/// Λ with its third row replaced by (λ₃ⱼ − β₁λ₁ⱼ − β₂λ₂ⱼ).
pub fn deformed_lambda(ring: &PolyRing) -> PolyMatrix {
    let lam = hyperplane_lambda(ring);
    let b1 = ring.var("beta1");
    let b2 = ring.var("beta2");
    PolyMatrix::from_fn(ring, 3, 2, |r, c| {
        if r < 2 {
            lam.get(r, c).clone()
        } else {
            &(lam.get(2, c) - &(&b1 * lam.get(0, c))) - &(&b2 * lam.get(1, c))
        }
    })
}

/// The displayed 4×3 matrix with its last row replaced by (β₁, β₂, β).
pub fn deformed_x_matrix(ring: &PolyRing) -> PolyMatrix {
    let x = hyperplane_x_matrix(ring);
    PolyMatrix::from_fn(ring, 4, 3, |r, c| {
        if r < 3 {
            x.get(r, c).clone()
        } else {
            match c {
                0 => ring.var("beta1"),
                1 => ring.var("beta2"),
                _ => ring.var("beta"),
            }
        }
    })
}

fn row_times(ring: &PolyRing, row: &[Polynomial], m: &PolyMatrix) -> Vec<Polynomial> {
    (0..m.cols())
        .map(|j| {
            let mut e = ring.zero();
            for (i, r) in row.iter().enumerate() {
                e = &e + &(r * m.get(i, j));
            }
            e
        })
        .collect()
}

/// The deformation identities: the deformed signed minors shift by the
/// parameter multiples of δ₃, both displayed row products agree, and the
/// variable substitution on the third λ row reproduces the deformed minors.
pub fn verify_rigidity_identities() -> VerificationReport {
    let ring = rigidity_ring();
    let delta = hyperplane_delta_row(&ring);
    let deformed = signed_maximal_minors(&deformed_lambda(&ring));
    let b1 = ring.var("beta1");
    let b2 = ring.var("beta2");
    let mut report = VerificationReport::new("rigidity-identities");

    let expect_zero = |p: Polynomial| -> Result<(), String> {
        if p.is_zero() {
            Ok(())
        } else {
            Err(format!("nonzero difference {p}"))
        }
    };
    report.push(
        "deformed delta1 equals delta1 + beta1·delta3",
        expect_zero(&(&deformed[0] - &delta[1]) - &(&b1 * &delta[3])),
    );
    report.push(
        "deformed delta2 equals delta2 + beta2·delta3",
        expect_zero(&(&deformed[1] - &delta[2]) - &(&b2 * &delta[3])),
    );
    report.push(
        "deformed delta3 equals delta3",
        expect_zero(&deformed[2] - &delta[3]),
    );

    let deformed_row = vec![
        delta[0].clone(),
        deformed[0].clone(),
        deformed[1].clone(),
        deformed[2].clone(),
    ];
    let lhs = row_times(&ring, &deformed_row, &hyperplane_x_matrix(&ring));
    let rhs = row_times(&ring, &delta, &deformed_x_matrix(&ring));
    for j in 0..3 {
        report.push(
            &format!("column {} of the two row products agrees", j + 1),
            expect_zero(&lhs[j] - &rhs[j]),
        );
    }

    let names: Vec<String> = ring.var_names().to_vec();
    let pairs: Vec<(&str, Polynomial)> = names
        .iter()
        .map(|n| {
            let image = match n.as_str() {
                "lam31" => {
                    &(&ring.var("lam31") - &(&b1 * &ring.var("lam11")))
                        - &(&b2 * &ring.var("lam21"))
                }
                "lam32" => {
                    &(&ring.var("lam32") - &(&b1 * &ring.var("lam12")))
                        - &(&b2 * &ring.var("lam22"))
                }
                _ => ring.var(n),
            };
            (n.as_str(), image)
        })
        .collect();
    let substitution = RingMap::from_pairs(ring.clone(), ring.clone(), &pairs);
    for (i, d) in deformed.iter().enumerate() {
        report.push(
            &format!("substitution reproduces deformed delta{}", i + 1),
            expect_zero(&substitution.apply(&delta[i + 1]) - d),
        );
    }
    report.push(
        "substitution fixes delta0",
        expect_zero(&substitution.apply(&delta[0]) - &delta[0]),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{CoefficientDomain, PolyRing};
    use crate::sampling::{random_polynomial, rng_from_seed, PolyProfile};

    fn xyz_ring() -> PolyRing {
        PolyRing::new(
            &[
                ("x", Bidegree(1, 0)),
                ("y", Bidegree(1, 0)),
                ("z", Bidegree(1, 0)),
            ],
            CoefficientDomain::Integers,
        )
    }

    #[test]
    fn koszul_on_one_element_is_multiplication() {
        let ring = xyz_ring();
        let k = koszul_complex(&[ring.var("x")], "K(x)");
        assert_eq!(k.ranks(), vec![1, 1]);
        assert_eq!(k.differential(1).get(0, 0), &ring.var("x"));
        k.check_complex().unwrap();
        k.check_bigrading().unwrap();
    }

    #[test]
    fn koszul_on_three_elements_has_binomial_ranks() {
        let ring = xyz_ring();
        let k = koszul_complex(&[ring.var("x"), ring.var("y"), ring.var("z")], "K(x,y,z)");
        assert_eq!(k.ranks(), vec![1, 3, 3, 1]);
        k.check_complex().unwrap();
        k.check_bigrading().unwrap();
        assert_eq!(k.module(1).labels, vec!["k1", "k2", "k3"]);
        assert_eq!(k.module(2).labels, vec!["k1∧k2", "k1∧k3", "k2∧k3"]);
        // d2 on k1∧k2 is x·k2 − y·k1.
        assert_eq!(k.differential(2).get(1, 0), &ring.var("x"));
        assert_eq!(k.differential(2).get(0, 0), &(-&ring.var("y")));
    }

    #[test]
    fn koszul_on_random_inhomogeneous_elements_is_a_complex() {
        let ring = xyz_ring();
        let mut rng = rng_from_seed(901);
        let profile = PolyProfile {
            max_terms: 4,
            max_exp: 3,
            coeff_bound: 9,
        };
        for _ in 0..25 {
            let seq: Vec<Polynomial> = (0..3)
                .map(|_| random_polynomial(&ring, &mut rng, &profile))
                .collect();
            let k = koszul_complex(&seq, "K");
            k.check_complex().unwrap();
        }
    }

    #[test]
    fn koszul_is_isomorphic_to_its_shifted_dual() {
        let ring = xyz_ring();
        let seq = [ring.var("x"), ring.var("y"), ring.var("z")];
        let k = koszul_complex(&seq, "K");
        let dual = k.dual().shift_twists(Bidegree(3, 0));
        let f = solve_graded_chain_map(&k, &dual, PolyMatrix::identity(&ring, 1))
            .expect("self-duality ladder");
        f.is_chain_map().unwrap();
        f.is_complex_isomorphism().unwrap();
    }

    #[test]
    fn product_sequence_reproduces_the_four_generator_example() {
        let ring = PolyRing::new(
            &[
                ("a1", Bidegree(1, 0)),
                ("a2", Bidegree(1, 0)),
                ("a3", Bidegree(1, 0)),
                ("a4", Bidegree(1, 0)),
                ("x1", Bidegree(0, 1)),
                ("x2", Bidegree(0, 1)),
                ("x3", Bidegree(0, 1)),
                ("x4", Bidegree(0, 1)),
            ],
            CoefficientDomain::Integers,
        );
        let v = |n: &str| ring.var(n);
        let a = [v("a1"), v("a2"), v("a3"), v("a4")];
        // Identity-block product with c1 = 3, c2 = 0.
        let x = PolyMatrix::from_rows(&ring, vec![vec![v("x1"), v("x2"), v("x3")]]);
        let y = PolyMatrix::zero(&ring, 1, 0);
        let b = build_product_sequence(&a, &x, &y, 3, 0);
        assert_eq!(b.entries.len(), 3);
        assert_eq!(b.entries[0], &(&v("a1") * &v("x1")) + &v("a2"));
        assert_eq!(b.entries[1], &(&v("a1") * &v("x2")) + &v("a3"));
        assert_eq!(b.entries[2], &(&v("a1") * &v("x3")) + &v("a4"));
        // The displayed product carries an extra unit-free multiplier on the
        // last entry; direct matrix multiplication is the oracle.
        let display = PolyMatrix::from_rows(
            &ring,
            vec![
                vec![v("x1"), v("x2"), v("x3")],
                vec![ring.one(), ring.zero(), ring.zero()],
                vec![ring.zero(), ring.one(), ring.zero()],
                vec![ring.zero(), ring.zero(), v("x4")],
            ],
        );
        let row = PolyMatrix::from_rows(&ring, vec![a.to_vec()]);
        let product = &row * &display;
        assert_eq!(product.get(0, 0), &(&(&v("a1") * &v("x1")) + &v("a2")));
        assert_eq!(product.get(0, 1), &(&(&v("a1") * &v("x2")) + &v("a3")));
        assert_eq!(
            product.get(0, 2),
            &(&(&v("a1") * &v("x3")) + &(&v("a4") * &v("x4")))
        );
    }

    #[test]
    fn degenerate_product_returns_the_sequence_unchanged() {
        let ring = xyz_ring();
        let a = [ring.var("x"), ring.var("y")];
        let x = PolyMatrix::zero(&ring, 2, 0);
        let y = PolyMatrix::zero(&ring, 2, 0);
        let b = build_product_sequence(&a, &x, &y, 0, 0);
        assert_eq!(b.entries, a.to_vec());
    }

    #[test]
    fn product_sequence_rejects_bad_shapes() {
        let ring = xyz_ring();
        let a = [ring.var("x"), ring.var("y"), ring.var("z")];
        let x = PolyMatrix::zero(&ring, 1, 1);
        let y = PolyMatrix::zero(&ring, 2, 1);
        let result = std::panic::catch_unwind(|| build_product_sequence(&a, &x, &y, 1, 1));
        assert!(result.is_err(), "Y with the wrong row count must be rejected");
    }

    #[test]
    fn graded_chain_map_solver_finds_the_multiplication_ladder() {
        // Multiplication by z is a chain map from K(x,y) shifted by (1,0)
        // to K(x,y): the solver must recover z times the identity.
        let ring = xyz_ring();
        let k = koszul_complex(&[ring.var("x"), ring.var("y")], "K");
        let shifted = k.shift_twists(Bidegree(1, 0));
        let f0 = PolyMatrix::from_rows(&ring, vec![vec![ring.var("z")]]);
        let f = solve_graded_chain_map(&shifted, &k, f0).expect("ladder");
        f.is_chain_map().unwrap();
        for i in 1..=2 {
            for d in 0..f.map(i).rows() {
                assert_eq!(f.map(i).get(d, d), &ring.var("z"));
            }
        }
    }

    #[test]
    fn graded_chain_map_solver_reports_unsolvable_squares() {
        // No chain map from K(x) to K(y) extends the identity in degree
        // zero: the square would need x ∈ (y).
        let ring = xyz_ring();
        let kx = koszul_complex(&[ring.var("x")], "K(x)");
        let ky = koszul_complex(&[ring.var("y")], "K(y)");
        assert!(solve_graded_chain_map(&kx, &ky, PolyMatrix::identity(&ring, 1)).is_none());
    }

    #[test]
    fn hyperplane_forms_expand_the_displayed_product() {
        let ring = crate::resolutions::hyperplane_ring();
        let n = hyperplane_forms(&ring);
        assert_eq!(n.entries.len(), 3);
        let delta = hyperplane_delta_row(&ring);
        let d0 = ring.var("delta0");
        assert_eq!(
            n.entries[0],
            &(&d0 * &ring.var("alpha1")) + &delta[1]
        );
        assert_eq!(
            n.entries[1],
            &(&d0 * &ring.var("alpha2")) + &delta[2]
        );
        assert_eq!(
            n.entries[2],
            &(&d0 * &ring.var("alpha3")) + &(&delta[3] * &ring.var("beta"))
        );
        assert!(n.entries[0].has_bidegree(Bidegree(1, 1)));
        assert!(n.entries[1].has_bidegree(Bidegree(1, 1)));
        assert!(n.entries[2].has_bidegree(Bidegree(2, 1)));
    }

    #[test]
    fn colon_generators_have_the_stated_shape() {
        let ring = crate::resolutions::hyperplane_ring();
        let gens = hyperplane_colon_generators(&ring);
        assert_eq!(gens.len(), 5);
        let v = |s: &str| ring.var(s);
        let expected4 = &(&(&v("lam11") * &v("alpha1")) * &v("beta"))
            + &(&(&(&v("lam21") * &v("alpha2")) * &v("beta"))
                + &(&v("lam31") * &v("alpha3")));
        let expected5 = &(&(&v("lam12") * &v("alpha1")) * &v("beta"))
            + &(&(&(&v("lam22") * &v("alpha2")) * &v("beta"))
                + &(&v("lam32") * &v("alpha3")));
        assert_eq!(gens[3], expected4);
        assert_eq!(gens[4], expected5);
        assert!(gens[3].has_bidegree(Bidegree(2, 1)));
        assert!(gens[4].has_bidegree(Bidegree(2, 1)));
    }

    #[test]
    fn colon_generators_multiply_back_into_the_hyperplane_ideal() {
        // The defining containment of the colon ideal: every product of a
        // colon generator with a δ entry lands in (n₁, n₂, n₃).
        let ring = crate::resolutions::hyperplane_ring();
        let n = hyperplane_forms(&ring).entries;
        let gens = hyperplane_colon_generators(&ring);
        let delta = hyperplane_delta_row(&ring);
        for g in &gens {
            for d in &delta {
                let prob = crate::certify::GradedMembershipProblem {
                    target: g * d,
                    generators: n.clone(),
                };
                assert!(
                    crate::certify::graded_membership(&prob).is_some(),
                    "product of {g} with {d} escaped the ideal"
                );
            }
        }
    }

    #[test]
    fn comparison_row_matches_the_composite_of_its_factors() {
        let data = link_data();
        let ring = &data.ring;
        let inclusion = small_ring_inclusion(ring);
        let b = build_b_matrices().apply_map(&inclusion, "B");
        let c = build_comparison_c(&data, &b);
        let upi = &data.phi * &data.psi_vec;
        let delta = data.signed_complementary_minors();
        let v = |n: &str| ring.var(n);
        for j in 0..3 {
            let expected = &(&(&(-&v(&format!("l2{}", j + 1))) * upi.get(0, 0))
                + &(&v(&format!("l1{}", j + 1)) * upi.get(1, 0)))
                + &(&(&v("z2") * &delta[j]) - &(&v("w1") * data.psi_vec.get(j, 0)));
            assert_eq!(c.source().differential(1).get(0, j), &expected);
        }
    }

    #[test]
    fn comparison_map_commutes_into_the_eleven_variable_resolution() {
        let data = link_data();
        let inclusion = small_ring_inclusion(&data.ring);
        let b = build_b_matrices().apply_map(&inclusion, "B");
        let c = build_comparison_c(&data, &b);
        c.is_chain_map().unwrap();
        assert_eq!(c.source().ranks(), vec![1, 3, 3, 1]);
        c.source().check_bigrading().unwrap();
    }

    #[test]
    fn linkage_recovers_the_seventeen_variable_resolution() {
        let run = run_linkage().unwrap();
        assert_eq!(run.cone_ranks, vec![1, 6, 9, 5, 1]);
        assert_eq!(run.cancellations, 4);
        assert_eq!(run.linked.ranks(), vec![1, 5, 6, 2]);
        run.certificate.verify().unwrap();
        let report = verify_linkage();
        assert!(report.pass, "{:?}", report.first_failure);
    }

    #[test]
    fn link_dictionary_is_graded_and_matches_the_frozen_images() {
        let map = link_dictionary();
        assert!(map.is_graded());
        let t = link_ring();
        assert_eq!(map.image("a11"), &t.var("u11"));
        assert_eq!(map.image("l21"), &t.var("l21"));
        assert_eq!(map.image("psi12"), &t.var("pi3"));
        assert_eq!(map.image("psi13"), &(-&t.var("pi2")));
        assert_eq!(map.image("psi23"), &t.var("pi1"));
        assert_eq!(map.image("z1"), &t.var("w1"));
        assert_eq!(map.image("z2"), &t.var("z2"));
    }

    #[test]
    fn deformed_minors_shift_by_the_deformation_parameters() {
        let ring = rigidity_ring();
        let delta = hyperplane_delta_row(&ring);
        let deformed = signed_maximal_minors(&deformed_lambda(&ring));
        assert_eq!(deformed[2], delta[3]);
        assert_eq!(
            deformed[0],
            &delta[1] + &(&ring.var("beta1") * &delta[3])
        );
        assert_eq!(
            deformed[1],
            &delta[2] + &(&ring.var("beta2") * &delta[3])
        );
    }

    #[test]
    fn rigidity_identity_report_passes() {
        let report = verify_rigidity_identities();
        assert!(report.pass, "{:?}", report.first_failure);
        assert_eq!(report.checks.len(), 10);
    }

    #[test]
    fn hyperplane_colon_report_passes() {
        let report = verify_hyperplane_colon();
        assert!(report.pass, "{:?}", report.first_failure);
        assert_eq!(report.checks.len(), 30);
    }
}
