//! Evidence-grade checks: graded ideal membership by exact linear algebra,
//! seeded random-point rank profiles, a small Buchberger engine, and
//! specialization of a complex into a few fresh variables with an exact
//! codimension certificate.
//!
//! The membership solver is definitive for bihomogeneous data: a solution is
//! re-checked by summation, and absence of a solution in the forced graded
//! piece rules out membership outright.  Rank profiles at random points are
//! necessary-condition evidence only and every report says so.

use crate::complexes::FreeComplex;
use crate::matrix::{rational_rank, solve_rational};
use crate::ring::{
    rat, BidegreeClass, CoefficientDomain, Monomial, PolyRing, Polynomial, RingMap,
};
use crate::sampling::{random_linear_forms, rng_from_seed, trial_rng};
use num::rational::BigRational;
use num::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Disclaimer attached to every random-point exactness report.
pub const EXACTNESS_EVIDENCE_LABEL: &str =
    "necessary-condition evidence, not a proof of acyclicity over the ring";

fn rationals_copy(ring: &PolyRing) -> (PolyRing, RingMap) {
    let carrier = ring.with_domain(CoefficientDomain::Rationals);
    let images = (0..ring.num_vars()).map(|i| carrier.var_by_index(i)).collect();
    let map = RingMap::new(ring.clone(), carrier.clone(), images);
    (carrier, map)
}

/// A bihomogeneous membership question: does `target` lie in the ideal
/// generated by `generators`?
pub struct GradedMembershipProblem {
    pub target: Polynomial,
    pub generators: Vec<Polynomial>,
}

/// Decide membership by solving Σ hᵢ·fᵢ = target for coefficients hᵢ in the
/// forced bidegree deg(target) − deg(fᵢ).  The witnesses live in a
/// rationals-coefficient copy of the ring and satisfy the identity exactly
/// (re-checked by summation before returning).  `None` is a definitive
/// negative for bihomogeneous data.
///
/// # Panics
/// Panics when the target or a generator is not bihomogeneous, or when the
/// generators live in a different ring than the target.
pub fn graded_membership(prob: &GradedMembershipProblem) -> Option<Vec<Polynomial>> {
    let ring = prob.target.ring().clone();
    for f in &prob.generators {
        assert!(
            ring.same_ring(f.ring()),
            "membership generators from a different ring"
        );
    }
    let (carrier, to_carrier) = rationals_copy(&ring);
    if prob.target.is_zero() {
        return Some(vec![carrier.zero(); prob.generators.len()]);
    }
    let target_degree = match prob.target.bidegree_class() {
        BidegreeClass::Pure(d) => d,
        _ => panic!("graded membership needs a bihomogeneous target"),
    };
    let target = to_carrier.apply(&prob.target);

    // Unknowns: one coefficient per admissible monomial of each multiplier.
    let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
    let mut gens = Vec::new();
    for (i, f) in prob.generators.iter().enumerate() {
        gens.push(to_carrier.apply(f));
        let fd = match f.bidegree_class() {
            BidegreeClass::Zero => continue,
            BidegreeClass::Pure(d) => d,
            BidegreeClass::Mixed => panic!("graded membership needs bihomogeneous generators"),
        };
        for m in carrier.monomials_of_bidegree(target_degree - fd) {
            unknowns.push((i, m));
        }
    }

    let rows_index = carrier.monomials_of_bidegree(target_degree);
    let mut system: Vec<Vec<BigRational>> = vec![Vec::with_capacity(unknowns.len()); rows_index.len()];
    for (i, m) in &unknowns {
        let mono = Polynomial::from_terms(carrier.clone(), vec![(m.clone(), BigRational::one())]);
        let product = &gens[*i] * &mono;
        for (r, mu) in rows_index.iter().enumerate() {
            system[r].push(product.coefficient(mu));
        }
    }
    let rhs: Vec<BigRational> = rows_index.iter().map(|mu| target.coefficient(mu)).collect();
    let solution = solve_rational(&system, &rhs)?;

    let mut witnesses = vec![carrier.zero(); prob.generators.len()];
    for ((i, m), value) in unknowns.into_iter().zip(solution) {
        if value.is_zero() {
            continue;
        }
        let term = Polynomial::from_terms(carrier.clone(), vec![(m, value)]);
        witnesses[i] = &witnesses[i] + &term;
    }
    let mut recheck = carrier.zero();
    for (h, f) in witnesses.iter().zip(&gens) {
        recheck = &recheck + &(h * f);
    }
    assert!(
        (&recheck - &target).is_zero(),
        "membership witness failed its independent re-check"
    );
    Some(witnesses)
}

/// Rank profile of a complex's differentials at seeded random points.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExactnessReport {
    pub complex: String,
    pub seed: u64,
    pub trials: usize,
    /// Ranks forced by exactness, listed for the top differential first.
    pub expected_ranks: Vec<i64>,
    /// Observed ranks per trial, same order.
    pub observed_ranks: Vec<Vec<i64>>,
    pub points: Vec<Vec<i64>>,
    pub pass: bool,
    pub label: String,
}

/// Substitute seeded random integers in [−10⁴, 10⁴] for all variables and
/// compute exact ranks of every differential over the rationals.  The
/// verdict is PASS when each trial attains the rank profile forced by
/// exactness of the specialized vector-space complex.
pub fn random_exactness_report(c: &FreeComplex, trials: usize, seed: u64) -> ExactnessReport {
    let top = c.top();
    let mut expected = Vec::new();
    let mut next: i64 = 0;
    for i in (1..=top).rev() {
        let r = c.rank(i) as i64 - next;
        expected.push(r);
        next = r;
    }
    let satisfiable = expected.iter().all(|&r| r >= 0);

    let ring = c.ring().clone();
    let mut observed = Vec::with_capacity(trials);
    let mut points = Vec::with_capacity(trials);
    let mut all_match = true;
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        let point: Vec<i64> =
            (0..ring.num_vars()).map(|_| rng.gen_range(-10_000..=10_000)).collect();
        let point_rat: Vec<BigRational> = point.iter().map(|&v| rat(v)).collect();
        let mut ranks = Vec::with_capacity(top);
        for i in (1..=top).rev() {
            ranks.push(rational_rank(c.differential(i).eval(&point_rat)) as i64);
        }
        if ranks != expected {
            all_match = false;
        }
        observed.push(ranks);
        points.push(point);
    }
    ExactnessReport {
        complex: c.name().to_string(),
        seed,
        trials,
        expected_ranks: expected,
        observed_ranks: observed,
        points,
        pass: satisfiable && all_match,
        label: EXACTNESS_EVIDENCE_LABEL.to_string(),
    }
}

const GB_VARIABLE_LIMIT: usize = 5;
const GB_DEGREE_CAP: u64 = 30;

fn monomial_divides(a: &Monomial, b: &Monomial) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| x <= y)
}

fn monomial_quotient(b: &Monomial, a: &Monomial) -> Monomial {
    Monomial(b.0.iter().zip(&a.0).map(|(x, y)| x - y).collect())
}

fn monomial_lcm(a: &Monomial, b: &Monomial) -> Monomial {
    Monomial(a.0.iter().zip(&b.0).map(|(x, y)| *x.max(y)).collect())
}

fn make_monic(p: &Polynomial) -> Polynomial {
    let lc = p.leading_coefficient().expect("monic of zero").clone();
    p.scale(&lc.recip())
}

/// Full normal form of `p` against `basis` under graded reverse
/// lexicographic order; errors out if an intermediate result climbs past the
/// degree cap.
fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial, String> {
    let ring = p.ring().clone();
    let mut remainder = ring.zero();
    let mut current = p.clone();
    'outer: while !current.is_zero() {
        if current.total_degree().unwrap_or(0) > GB_DEGREE_CAP {
            return Err(format!(
                "normal form exceeded the degree cap of {GB_DEGREE_CAP}"
            ));
        }
        let lm = current.leading_monomial().unwrap().clone();
        let lc = current.leading_coefficient().unwrap().clone();
        for g in basis {
            let glm = g.leading_monomial().unwrap();
            if monomial_divides(glm, &lm) {
                let factor = Polynomial::from_terms(
                    ring.clone(),
                    vec![(
                        monomial_quotient(&lm, glm),
                        &lc / g.leading_coefficient().unwrap(),
                    )],
                );
                current = &current - &(g * &factor);
                continue 'outer;
            }
        }
        let term = Polynomial::from_terms(ring.clone(), vec![(lm.clone(), lc)]);
        remainder = &remainder + &term;
        current = &current - &term;
    }
    Ok(remainder)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring().clone();
    let lmf = f.leading_monomial().unwrap();
    let lmg = g.leading_monomial().unwrap();
    let lcm = monomial_lcm(lmf, lmg);
    let tf = Polynomial::from_terms(
        ring.clone(),
        vec![(
            monomial_quotient(&lcm, lmf),
            f.leading_coefficient().unwrap().clone().recip(),
        )],
    );
    let tg = Polynomial::from_terms(
        ring.clone(),
        vec![(
            monomial_quotient(&lcm, lmg),
            g.leading_coefficient().unwrap().clone().recip(),
        )],
    );
    &(f * &tf) - &(g * &tg)
}

/// Reduced Gröbner basis under graded reverse lexicographic order, over a
/// rationals-coefficient copy of the generators' ring.  Guards: at most
/// five variables, and intermediate degrees capped.
pub fn buchberger_small(gens: &[Polynomial]) -> Result<Vec<Polynomial>, String> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    if ring.num_vars() > GB_VARIABLE_LIMIT {
        return Err(format!(
            "Gröbner guard: {} variables exceeds the limit of {GB_VARIABLE_LIMIT}",
            ring.num_vars()
        ));
    }
    let (_, to_carrier) = rationals_copy(&ring);
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .map(|g| to_carrier.apply(g))
        .filter(|g| !g.is_zero())
        .map(|g| make_monic(&g))
        .collect();
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    basis.sort_by(|a, b| {
        a.leading_monomial()
            .unwrap()
            .cmp(b.leading_monomial().unwrap())
    });

    // Pairs are processed smallest lcm degree first, which keeps
    // intermediate degrees from spiralling.
    let mut pairs: std::collections::BinaryHeap<std::cmp::Reverse<(u64, usize, usize)>> =
        std::collections::BinaryHeap::new();
    let keyed = |basis: &[Polynomial], i: usize, j: usize| {
        let lcm = monomial_lcm(
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        std::cmp::Reverse((lcm.total_degree(), i, j))
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push(keyed(&basis, i, j));
        }
    }
    while let Some(std::cmp::Reverse((_, i, j))) = pairs.pop() {
        let lmi = basis[i].leading_monomial().unwrap();
        let lmj = basis[j].leading_monomial().unwrap();
        // Coprime leading monomials always reduce to zero.
        if monomial_lcm(lmi, lmj).total_degree()
            == lmi.total_degree() + lmj.total_degree()
        {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = normal_form(&s, &basis)?;
        if !r.is_zero() {
            let r = make_monic(&r);
            basis.push(r);
            for k in 0..basis.len() - 1 {
                pairs.push(keyed(&basis, k, basis.len() - 1));
            }
        }
    }

    // Minimalize, then tail-reduce each element against the others.
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in &basis {
        let glm = g.leading_monomial().unwrap();
        if !basis.iter().any(|h| {
            let hlm = h.leading_monomial().unwrap();
            hlm != glm && monomial_divides(hlm, glm)
        }) && !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap() == glm)
        {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let r = normal_form(g, &others)?;
        if !r.is_zero() {
            reduced.push(make_monic(&r));
        }
    }
    reduced.sort_by(|a, b| {
        a.leading_monomial()
            .unwrap()
            .cmp(b.leading_monomial().unwrap())
    });
    Ok(reduced)
}

/// Check that every S-polynomial of the purported basis reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> Result<bool, String> {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j]);
            if !normal_form(&s, basis)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Codimension of the ideal generated by `gens`: number of variables minus
/// the largest set of variables containing no leading monomial of the
/// Gröbner basis.  The unit ideal gets codimension = number of variables.
pub fn codim_via_gb(gens: &[Polynomial]) -> Result<usize, String> {
    let Some(first) = gens.first() else {
        return Ok(0);
    };
    let n = first.ring().num_vars();
    let gb = buchberger_small(gens)?;
    if gb.iter().any(|g| g.leading_monomial().map(Monomial::is_one).unwrap_or(false)) {
        return Ok(n);
    }
    let supports: Vec<Vec<usize>> = gb
        .iter()
        .map(|g| {
            g.leading_monomial()
                .unwrap()
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut dimension = 0usize;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= dimension {
            continue;
        }
        let independent = supports
            .iter()
            .all(|s| !s.iter().all(|&v| mask & (1 << v) != 0));
        if independent {
            dimension = size;
        }
    }
    Ok(n - dimension)
}

/// Outcome of specializing a complex into a few fresh variables.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpecializationCheck {
    pub complex: String,
    pub seed: u64,
    pub target_vars: usize,
    pub complex_intact: bool,
    pub codim: usize,
    pub expected_codim: usize,
    pub pass: bool,
}

/// Map every variable of the complex's ring to a seeded random linear form
/// in `target_vars` fresh variables, re-check d∘d = 0 exactly, and certify
/// the codimension of the ideal of first-differential entries by Gröbner
/// basis.  PASS means the specialized ideal attains codimension three.
pub fn specialize_and_certify(c: &FreeComplex, target_vars: usize, seed: u64) -> SpecializationCheck {
    assert!(
        (1..=GB_VARIABLE_LIMIT).contains(&target_vars),
        "target variable count must be between 1 and {GB_VARIABLE_LIMIT}"
    );
    let ring = c.ring().clone();
    let fresh_vars: Vec<String> = (1..=target_vars).map(|i| format!("s{i}")).collect();
    let fresh = PolyRing::new(
        &fresh_vars
            .iter()
            .map(|n| (n.as_str(), crate::ring::Bidegree(1, 0)))
            .collect::<Vec<_>>(),
        ring.domain(),
    );
    let mut rng = rng_from_seed(seed);
    let forms = random_linear_forms(&ring, &fresh, &mut rng, 9);
    let map = RingMap::new(ring.clone(), fresh.clone(), forms);
    let specialized = c.apply_map(&map, &format!("{}@{}vars", c.name(), target_vars));

    let complex_intact = specialized.check_complex().is_ok();
    let d1 = specialized.differential(1);
    let mut entries = Vec::new();
    for r in 0..d1.rows() {
        for col in 0..d1.cols() {
            entries.push(d1.get(r, col).clone());
        }
    }
    let codim = codim_via_gb(&entries).unwrap_or(0);
    SpecializationCheck {
        complex: c.name().to_string(),
        seed,
        target_vars,
        complex_intact,
        codim,
        expected_codim: 3,
        pass: complex_intact && codim == 3,
    }
}
