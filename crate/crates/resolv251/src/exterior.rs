//! Exterior algebra of a based free module.
//!
//! Elements of ∧^k V are stored as coordinates on the standard basis of
//! strictly increasing wedge monomials in the chosen basis of V.  The
//! exterior algebras ∧V and ∧V* act on one another; both actions are the
//! same contraction rule with the roles of the bases swapped, normalized so
//! that for increasing index sets S ⊆ T
//!
//! ```text
//! e_S*(e_T) = (−1)^{q(q−1)/2} · ε · e_{T∖S},    q = |S|,
//! ```
//!
//! where ε is the sign with e_S ∧ e_{T∖S} = ε·e_T.  Equivalently, a wedge of
//! basis covectors acts by iterated front interior products:
//! (α ∧ β)(c) = α(β(c)).  With this normalization the pairing of equal
//! degrees is symmetric, a_k(α_k) = α_k(a_k), and the top wedge of a basis
//! taken in descending order is dual to the top wedge taken in ascending
//! order.

use crate::matrix::PolyMatrix;
use crate::ring::{PolyRing, Polynomial};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A free module with a fixed ordered basis and a flag telling whether it is
/// the dual of its base module.  Labels always name the base-module basis;
/// display adds a star on the dual side.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasedFreeModule {
    name: String,
    labels: Vec<String>,
    dual: bool,
}

impl BasedFreeModule {
    pub fn new(name: &str, labels: &[&str]) -> BasedFreeModule {
        assert!(!labels.is_empty(), "rank zero module");
        assert!(labels.len() <= u8::MAX as usize);
        BasedFreeModule {
            name: name.to_string(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            dual: false,
        }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn name(&self) -> String {
        if self.dual {
            format!("{}*", self.name)
        } else {
            self.name.clone()
        }
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// The dual module, with the dual basis in the same order.
    pub fn dual(&self) -> BasedFreeModule {
        BasedFreeModule {
            name: self.name.clone(),
            labels: self.labels.clone(),
            dual: !self.dual,
        }
    }

    /// Are `self` and `other` each other's duals?
    pub fn is_dual_of(&self, other: &BasedFreeModule) -> bool {
        self.name == other.name && self.labels == other.labels && self.dual != other.dual
    }

    /// Display label of basis vector `i` (starred on the dual side).
    pub fn label(&self, i: usize) -> String {
        if self.dual {
            format!("{}*", self.labels[i])
        } else {
            self.labels[i].clone()
        }
    }

    /// Display label of the wedge monomial with the given increasing indices.
    pub fn wedge_label(&self, subset: &[u8]) -> String {
        if subset.is_empty() {
            return "1".to_string();
        }
        subset
            .iter()
            .map(|&i| self.label(i as usize))
            .collect::<Vec<_>>()
            .join("^")
    }
}

/// All strictly increasing index vectors of length `k` drawn from `0..n`,
/// in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, k: usize, start: u8, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        let remaining = k - prefix.len();
        for i in start..=(n as u8).saturating_sub(remaining as u8) {
            prefix.push(i);
            rec(n, k, i + 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(n, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Number of pairs (x ∈ a, y ∈ b) with y < x; both slices strictly increasing.
fn inversions_between(a: &[u8], b: &[u8]) -> u32 {
    let mut count = 0u32;
    for &x in a {
        count += b.iter().take_while(|&&y| y < x).count() as u32;
    }
    count
}

fn sign_of_parity(parity: u32) -> i64 {
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sort index list, returning the permutation sign; `None` on a repeat.
fn sort_with_sign(mut v: Vec<u8>) -> Option<(Vec<u8>, i64)> {
    let mut swaps = 0u32;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign_of_parity(swaps)))
}

/// If `s ⊆ t`, the complement `t ∖ s`; both strictly increasing.
fn subset_complement(s: &[u8], t: &[u8]) -> Option<Vec<u8>> {
    let mut rest = Vec::with_capacity(t.len() - s.len());
    let mut si = 0usize;
    for &x in t {
        if si < s.len() && s[si] == x {
            si += 1;
        } else {
            rest.push(x);
        }
    }
    if si == s.len() {
        Some(rest)
    } else {
        None
    }
}

/// An element of ∧^k of a based free module, with polynomial coordinates on
/// the increasing wedge monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtElement {
    ring: PolyRing,
    module: BasedFreeModule,
    degree: usize,
    coords: BTreeMap<Vec<u8>, Polynomial>,
}

impl ExtElement {
    // Degrees above the rank are allowed: ∧^k V is then the zero module and
    // every element of it is the empty sum.
    pub fn zero(ring: &PolyRing, module: &BasedFreeModule, degree: usize) -> ExtElement {
        ExtElement {
            ring: ring.clone(),
            module: module.clone(),
            degree,
            coords: BTreeMap::new(),
        }
    }

    /// The wedge monomial with the given indices (any order, 0-based); a
    /// repeated index gives zero, a descending pair contributes a sign.
    pub fn basis(ring: &PolyRing, module: &BasedFreeModule, indices: &[u8]) -> ExtElement {
        for &i in indices {
            assert!((i as usize) < module.rank(), "basis index out of range");
        }
        let degree = indices.len();
        match sort_with_sign(indices.to_vec()) {
            None => ExtElement::zero(ring, module, degree),
            Some((sorted, sign)) => {
                let mut coords = BTreeMap::new();
                coords.insert(sorted, ring.int(sign));
                ExtElement { ring: ring.clone(), module: module.clone(), degree, coords }
            }
        }
    }

    /// Basis vector `i` of the module itself (degree 1).
    pub fn generator(ring: &PolyRing, module: &BasedFreeModule, i: usize) -> ExtElement {
        ExtElement::basis(ring, module, &[i as u8])
    }

    /// The empty wedge: the identity of ∧⁰ = R.
    pub fn one(ring: &PolyRing, module: &BasedFreeModule) -> ExtElement {
        ExtElement::basis(ring, module, &[])
    }

    pub fn from_coords(
        ring: &PolyRing,
        module: &BasedFreeModule,
        degree: usize,
        coords: Vec<(Vec<u8>, Polynomial)>,
    ) -> ExtElement {
        let mut acc = ExtElement::zero(ring, module, degree);
        for (idx, c) in coords {
            assert_eq!(idx.len(), degree, "coordinate of wrong degree");
            let term = ExtElement::basis(ring, module, &idx).scale(&c);
            acc = &acc + &term;
        }
        acc
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn module(&self) -> &BasedFreeModule {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Coordinate on the increasing wedge monomial with the given indices.
    pub fn coefficient(&self, indices: &[u8]) -> Polynomial {
        assert_eq!(indices.len(), self.degree);
        assert!(indices.windows(2).all(|w| w[0] < w[1]), "indices must increase");
        self.coords
            .get(indices)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    /// Coordinates in increasing-subset order.
    pub fn coords(&self) -> impl Iterator<Item = (&Vec<u8>, &Polynomial)> {
        self.coords.iter()
    }

    /// The value of a degree-0 element as a polynomial.
    pub fn scalar_value(&self) -> Polynomial {
        assert_eq!(self.degree, 0, "scalar_value on positive degree");
        self.coefficient(&[])
    }

    pub fn scale(&self, c: &Polynomial) -> ExtElement {
        assert!(c.ring().same_ring(&self.ring), "scalar from wrong ring");
        let mut coords = BTreeMap::new();
        for (idx, p) in &self.coords {
            let q = p * c;
            if !q.is_zero() {
                coords.insert(idx.clone(), q);
            }
        }
        ExtElement {
            ring: self.ring.clone(),
            module: self.module.clone(),
            degree: self.degree,
            coords,
        }
    }

    pub fn mul_int(&self, n: i64) -> ExtElement {
        self.scale(&self.ring.int(n))
    }

    /// Wedge product within one exterior algebra.
    ///
    /// # Panics
    /// Panics if the factors live in different modules (or one is primal and
    /// the other dual).
    pub fn wedge(&self, other: &ExtElement) -> ExtElement {
        assert!(self.ring.same_ring(&other.ring), "ring mismatch");
        assert_eq!(self.module, other.module, "wedge of different modules");
        let degree = self.degree + other.degree;
        let mut acc = ExtElement::zero(&self.ring, &self.module, degree);
        for (s, cs) in &self.coords {
            for (t, ct) in &other.coords {
                let Some(rest) = merge_disjoint(s, t) else {
                    continue;
                };
                let sign = sign_of_parity(inversions_between(s, t));
                let c = (cs * ct).mul_int(sign);
                let entry = acc
                    .coords
                    .entry(rest)
                    .or_insert_with(|| self.ring.zero());
                *entry = &*entry + &c;
            }
        }
        acc.coords.retain(|_, c| !c.is_zero());
        acc
    }

    /// Display with explicit coefficients.
    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coords
            .iter()
            .map(|(idx, c)| format!("({})·{}", c, self.module.wedge_label(idx)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Merge two disjoint increasing index lists; `None` if they intersect.
fn merge_disjoint(a: &[u8], b: &[u8]) -> Option<Vec<u8>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some(out)
}

impl Add for &ExtElement {
    type Output = ExtElement;
    fn add(self, other: &ExtElement) -> ExtElement {
        assert!(self.ring.same_ring(&other.ring), "ring mismatch");
        assert_eq!(self.module, other.module, "sum across modules");
        assert_eq!(self.degree, other.degree, "sum across degrees");
        let mut coords = self.coords.clone();
        for (idx, c) in &other.coords {
            let entry = coords.entry(idx.clone()).or_insert_with(|| self.ring.zero());
            *entry = &*entry + c;
        }
        coords.retain(|_, c| !c.is_zero());
        ExtElement {
            ring: self.ring.clone(),
            module: self.module.clone(),
            degree: self.degree,
            coords,
        }
    }
}

impl Sub for &ExtElement {
    type Output = ExtElement;
    fn sub(self, other: &ExtElement) -> ExtElement {
        self + &(-other)
    }
}

impl Neg for &ExtElement {
    type Output = ExtElement;
    fn neg(self) -> ExtElement {
        self.mul_int(-1)
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in ∧^{}({})", self.describe(), self.degree, self.module.name())
    }
}

/// Contraction: `actor` acts on `target`.  One of the two lives in ∧V*, the
/// other in ∧V — the same rule covers both module structures.  The result
/// lives in the target's algebra with degree `target.degree − actor.degree`;
/// when the actor's degree exceeds the target's, the result is the zero
/// scalar.
pub fn contract(actor: &ExtElement, target: &ExtElement) -> ExtElement {
    assert!(actor.ring.same_ring(&target.ring), "ring mismatch");
    assert!(
        actor.module.is_dual_of(&target.module),
        "contraction requires dual modules: {} on {}",
        actor.module.name(),
        target.module.name()
    );
    let q = actor.degree;
    if q > target.degree {
        return ExtElement::zero(&target.ring, &target.module, 0);
    }
    let degree = target.degree - q;
    let pre = sign_of_parity((q * q.saturating_sub(1) / 2) as u32);
    let mut acc = ExtElement::zero(&target.ring, &target.module, degree);
    for (s, ca) in &actor.coords {
        for (t, ct) in &target.coords {
            let Some(rest) = subset_complement(s, t) else {
                continue;
            };
            let eps = sign_of_parity(inversions_between(s, &rest));
            let c = (ca * ct).mul_int(pre * eps);
            let entry = acc.coords.entry(rest).or_insert_with(|| target.ring.zero());
            *entry = &*entry + &c;
        }
    }
    acc.coords.retain(|_, c| !c.is_zero());
    acc
}

/// The scalar pairing of equal exterior degrees: contract and read off the
/// degree-0 value.  Symmetric in its two arguments.
pub fn pair(a: &ExtElement, b: &ExtElement) -> Polynomial {
    assert_eq!(a.degree, b.degree, "pairing of unequal degrees");
    contract(a, b).scalar_value()
}

/// Apply ∧^k of the map with the given matrix to a degree-k element.
/// `matrix` columns are indexed by the basis of the element's module, rows by
/// the basis of `target`; the coordinate on a target subset U of the image of
/// a source subset S is the minor on rows U and columns S.
pub fn apply_map_power(
    matrix: &PolyMatrix,
    target: &BasedFreeModule,
    k: usize,
    element: &ExtElement,
) -> ExtElement {
    assert_eq!(element.degree, k, "element degree differs from k");
    assert_eq!(matrix.cols(), element.module.rank(), "matrix/source rank mismatch");
    assert_eq!(matrix.rows(), target.rank(), "matrix/target rank mismatch");
    assert!(element.ring.same_ring(matrix.ring()), "ring mismatch");
    let mut acc = ExtElement::zero(&element.ring, target, k);
    let targets = subsets(target.rank(), k);
    for (s, c) in &element.coords {
        let s_usize: Vec<usize> = s.iter().map(|&i| i as usize).collect();
        for u in &targets {
            let u_usize: Vec<usize> = u.iter().map(|&i| i as usize).collect();
            let minor = matrix.submatrix(&u_usize, &s_usize).det();
            if minor.is_zero() {
                continue;
            }
            let term = &minor * c;
            let entry = acc.coords.entry(u.clone()).or_insert_with(|| element.ring.zero());
            *entry = &*entry + &term;
        }
    }
    acc.coords.retain(|_, c| !c.is_zero());
    acc
}

/// A formal sum of pure tensors with a left factor and a right factor, each
/// an exterior-algebra element of fixed degree.
#[derive(Clone)]
pub struct TensorSum {
    pub pairs: Vec<(ExtElement, ExtElement)>,
}

impl TensorSum {
    pub fn new(pairs: Vec<(ExtElement, ExtElement)>) -> TensorSum {
        if let Some((l0, r0)) = pairs.first() {
            for (l, r) in &pairs {
                assert_eq!(l.module, l0.module, "mixed left modules");
                assert_eq!(r.module, r0.module, "mixed right modules");
                assert_eq!(l.degree, l0.degree, "mixed left degrees");
                assert_eq!(r.degree, r0.degree, "mixed right degrees");
            }
        }
        TensorSum { pairs }
    }

    /// Joint coordinates on pairs of increasing wedge monomials.
    pub fn normalized(&self) -> BTreeMap<(Vec<u8>, Vec<u8>), Polynomial> {
        let mut out: BTreeMap<(Vec<u8>, Vec<u8>), Polynomial> = BTreeMap::new();
        for (l, r) in &self.pairs {
            for (li, lc) in &l.coords {
                for (ri, rc) in &r.coords {
                    let key = (li.clone(), ri.clone());
                    let c = lc * rc;
                    match out.get_mut(&key) {
                        Some(e) => *e = &*e + &c,
                        None => {
                            out.insert(key, c);
                        }
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn scale(&self, c: &Polynomial) -> TensorSum {
        TensorSum {
            pairs: self.pairs.iter().map(|(l, r)| (l.scale(c), r.clone())).collect(),
        }
    }

    /// Transform each pure tensor; the images must again be uniform.
    pub fn map_sides<FL, FR>(&self, mut fl: FL, mut fr: FR) -> TensorSum
    where
        FL: FnMut(&ExtElement) -> ExtElement,
        FR: FnMut(&ExtElement) -> ExtElement,
    {
        TensorSum::new(self.pairs.iter().map(|(l, r)| (fl(l), fr(r))).collect())
    }
}

impl PartialEq for TensorSum {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl fmt::Debug for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalized();
        if n.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = n
            .iter()
            .map(|((l, r), c)| format!("({c})·[{l:?}⊗{r:?}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The canonical element of ∧^k V* ⊗ ∧^k V: the sum of (dual basis vector)
/// ⊗ (basis vector) over the increasing wedge monomial basis of ∧^k V.  The
/// dual basis is taken with respect to the contraction pairing, so each left
/// factor is (−1)^{k(k−1)/2}·e_S*.
pub fn canonical_element(ring: &PolyRing, module: &BasedFreeModule, k: usize) -> TensorSum {
    assert!(!module.is_dual(), "canonical element is taken over the primal module");
    let pre = sign_of_parity((k * k.saturating_sub(1) / 2) as u32);
    let dual = module.dual();
    let pairs = subsets(module.rank(), k)
        .into_iter()
        .map(|s| {
            (
                ExtElement::basis(ring, &dual, &s).mul_int(pre),
                ExtElement::basis(ring, module, &s),
            )
        })
        .collect();
    TensorSum::new(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Bidegree, CoefficientDomain};
    use crate::sampling::{random_polynomial, rng_from_seed, PolyProfile};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn scalar_ring() -> PolyRing {
        PolyRing::new(
            &[("s", Bidegree(1, 0)), ("t", Bidegree(0, 1))],
            CoefficientDomain::Rationals,
        )
    }

    fn rank3() -> BasedFreeModule {
        BasedFreeModule::new("F", &["e1", "e2", "e3"])
    }

    /// A random element of ∧^k of the module, sparse polynomial coordinates.
    fn random_element<R: Rng>(
        ring: &PolyRing,
        module: &BasedFreeModule,
        k: usize,
        rng: &mut R,
    ) -> ExtElement {
        let profile = PolyProfile { max_terms: 2, max_exp: 1, coeff_bound: 7 };
        let coords = subsets(module.rank(), k)
            .into_iter()
            .map(|s| (s, random_polynomial(ring, rng, &profile)))
            .collect();
        ExtElement::from_coords(ring, module, k, coords)
    }

    #[test]
    fn wedge_of_repeated_vector_vanishes() {
        let ring = scalar_ring();
        let f = rank3();
        let e1 = ExtElement::generator(&ring, &f, 0);
        assert!(e1.wedge(&e1).is_zero());
        let mut rng = rng_from_seed(2);
        for _ in 0..50 {
            let v = random_element(&ring, &f, 1, &mut rng);
            assert!(v.wedge(&v).is_zero());
        }
    }

    #[test]
    fn basis_constructor_sorts_with_sign() {
        let ring = scalar_ring();
        let f = rank3();
        let ordered = ExtElement::basis(&ring, &f, &[0, 1]);
        let swapped = ExtElement::basis(&ring, &f, &[1, 0]);
        assert_eq!(swapped, -&ordered);
        assert!(ExtElement::basis(&ring, &f, &[1, 1]).is_zero());
        // Descending top wedge of three indices: two inversions beyond one swap.
        let desc = ExtElement::basis(&ring, &f, &[2, 1, 0]);
        let asc = ExtElement::basis(&ring, &f, &[0, 1, 2]);
        assert_eq!(desc, -&asc);
    }

    #[test]
    fn wedge_is_graded_commutative_and_associative() {
        let ring = scalar_ring();
        let f = BasedFreeModule::new("V", &["v1", "v2", "v3", "v4"]);
        let mut rng = rng_from_seed(31);
        for _ in 0..200 {
            let p = rng.gen_range(0..=2usize);
            let q = rng.gen_range(0..=2usize);
            let r = rng.gen_range(0..=1usize);
            let a = random_element(&ring, &f, p, &mut rng);
            let b = random_element(&ring, &f, q, &mut rng);
            let c = random_element(&ring, &f, r, &mut rng);
            let ab = a.wedge(&b);
            let ba = b.wedge(&a);
            let sign = if (p * q) % 2 == 0 { 1 } else { -1 };
            assert_eq!(ab, ba.mul_int(sign));
            assert_eq!(ab.wedge(&c), a.wedge(&b.wedge(&c)));
        }
    }

    #[test]
    fn contraction_calibration_on_rank_three() {
        // These freeze the sign convention used everywhere in the crate.
        let ring = scalar_ring();
        let f = rank3();
        let fd = f.dual();
        let top = ExtElement::basis(&ring, &f, &[0, 1, 2]);
        let e = |i: u8| ExtElement::generator(&ring, &f, i as usize);
        let es = |i: u8| ExtElement::generator(&ring, &fd, i as usize);

        // Single covector: front interior product.
        assert_eq!(contract(&es(0), &top), ExtElement::basis(&ring, &f, &[1, 2]));
        assert_eq!(
            contract(&es(1), &top),
            ExtElement::basis(&ring, &f, &[0, 2]).mul_int(-1)
        );
        assert_eq!(contract(&es(2), &top), ExtElement::basis(&ring, &f, &[0, 1]));

        // Iterated rule (α∧β)(c) = α(β(c)) manifests as the q(q−1)/2 twist.
        let e12s = ExtElement::basis(&ring, &fd, &[0, 1]);
        let e12 = ExtElement::basis(&ring, &f, &[0, 1]);
        assert_eq!(pair(&e12s, &e12), ring.int(-1));
        let top_dual = ExtElement::basis(&ring, &fd, &[0, 1, 2]);
        assert_eq!(pair(&top_dual, &top), ring.int(-1));

        // Orientation classes: descending dual top wedge pairs to +1 with the
        // ascending primal top wedge.
        let omega_dual = ExtElement::basis(&ring, &fd, &[2, 1, 0]);
        assert_eq!(pair(&omega_dual, &top), ring.one());

        // Mirror action of ∧V on ∧V*.
        let e12s_plain = ExtElement::basis(&ring, &fd, &[0, 1]);
        assert_eq!(contract(&e(0), &e12s_plain), es(1));
        assert_eq!(contract(&e(1), &e12s_plain), -&es(0));
        assert_eq!(pair(&e12, &e12s_plain), ring.int(-1));

        // Degree underflow contracts to the zero scalar.
        assert!(contract(&e12s, &e(0)).is_zero());
    }

    #[test]
    fn equal_degree_pairing_is_symmetric() {
        // a_i(α_i) = α_i(a_i).
        let ring = scalar_ring();
        let f = BasedFreeModule::new("V", &["v1", "v2", "v3", "v4"]);
        let fd = f.dual();
        let mut rng = rng_from_seed(77);
        for _ in 0..200 {
            let k = rng.gen_range(0..=4usize);
            let a = random_element(&ring, &f, k, &mut rng);
            let alpha = random_element(&ring, &fd, k, &mut rng);
            assert_eq!(pair(&alpha, &a), pair(&a, &alpha));
        }
    }

    #[test]
    fn front_contraction_identity_for_single_vectors() {
        // (b₁(α_q))(c_p) = b₁ ∧ (α_q(c_p)) + (−1)^{1+q} α_q(b₁ ∧ c_p).
        let ring = scalar_ring();
        let mut rng = rng_from_seed(101);
        for case in 0..200 {
            let d = 2 + (case % 3) as usize;
            let labels: Vec<String> = (1..=d).map(|i| format!("v{i}")).collect();
            let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            let v = BasedFreeModule::new("V", &label_refs);
            let vd = v.dual();
            let q = rng.gen_range(1..=d);
            let p = rng.gen_range(q..=d);
            let b1 = random_element(&ring, &v, 1, &mut rng);
            let alpha = random_element(&ring, &vd, q, &mut rng);
            let c = random_element(&ring, &v, p, &mut rng);
            let lhs = contract(&contract(&b1, &alpha), &c);
            let first = b1.wedge(&contract(&alpha, &c));
            let second = contract(&alpha, &b1.wedge(&c)).mul_int(if q % 2 == 0 { -1 } else { 1 });
            assert_eq!(lhs, &first + &second, "case {case}: d={d} q={q} p={p}");
        }
    }

    #[test]
    fn top_form_exchange_identity() {
        // For α of top degree d: (b_r(α))(c_p) = (−1)^{(d−r)(d−p)} (c_p(α))(b_r).
        let ring = scalar_ring();
        let mut rng = rng_from_seed(103);
        for case in 0..200 {
            let d = 2 + (case % 3) as usize;
            let labels: Vec<String> = (1..=d).map(|i| format!("v{i}")).collect();
            let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            let v = BasedFreeModule::new("V", &label_refs);
            let vd = v.dual();
            let r = rng.gen_range(0..=d);
            let p = rng.gen_range(0..=d);
            let b = random_element(&ring, &v, r, &mut rng);
            let c = random_element(&ring, &v, p, &mut rng);
            let alpha = random_element(&ring, &vd, d, &mut rng);
            let lhs = contract(&contract(&b, &alpha), &c);
            let rhs = contract(&contract(&c, &alpha), &b);
            let sign = if ((d - r) * (d - p)) % 2 == 0 { 1 } else { -1 };
            assert_eq!(lhs, rhs.mul_int(sign), "case {case}: d={d} r={r} p={p}");
        }
    }

    #[test]
    fn top_argument_identity() {
        // For c of top degree d: [b_r(α_q)](c) = b_r ∧ α_q(c).
        let ring = scalar_ring();
        let mut rng = rng_from_seed(107);
        for case in 0..200 {
            let d = 2 + (case % 3) as usize;
            let labels: Vec<String> = (1..=d).map(|i| format!("v{i}")).collect();
            let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            let v = BasedFreeModule::new("V", &label_refs);
            let vd = v.dual();
            let q = rng.gen_range(0..=d);
            let r = rng.gen_range(0..=q);
            let b = random_element(&ring, &v, r, &mut rng);
            let alpha = random_element(&ring, &vd, q, &mut rng);
            let c = random_element(&ring, &v, d, &mut rng);
            let lhs = contract(&contract(&b, &alpha), &c);
            let rhs = b.wedge(&contract(&alpha, &c));
            assert_eq!(lhs, rhs, "case {case}: d={d} q={q} r={r}");
        }
    }

    #[test]
    fn exterior_powers_commute_with_contraction_along_a_map() {
        // (∧^s Ψ*)[(∧^r Ψ)(b_r)(δ_{s+r})] = b_r[(∧^{s+r} Ψ*)(δ_{s+r})].
        let ring = scalar_ring();
        let mut rng = StdRng::seed_from_u64(109);
        let profile = PolyProfile { max_terms: 2, max_exp: 1, coeff_bound: 5 };
        for case in 0..200 {
            let d = 2 + (case % 2) as usize; // rank of V
            let d2 = 2 + ((case / 2) % 2) as usize; // rank of V'
            let labels: Vec<String> = (1..=d).map(|i| format!("v{i}")).collect();
            let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            let v = BasedFreeModule::new("V", &label_refs);
            let labels2: Vec<String> = (1..=d2).map(|i| format!("w{i}")).collect();
            let label_refs2: Vec<&str> = labels2.iter().map(String::as_str).collect();
            let w = BasedFreeModule::new("W", &label_refs2);
            let (vd, wd) = (v.dual(), w.dual());
            let psi = PolyMatrix::from_fn(&ring, d2, d, |_, _| {
                random_polynomial(&ring, &mut rng, &profile)
            });
            let psi_star = psi.transpose();
            let r = rng.gen_range(0..=d.min(d2));
            let s = rng.gen_range(0..=(d2 - r).min(d));
            let b = random_element(&ring, &v, r, &mut rng);
            let delta = random_element(&ring, &wd, s + r, &mut rng);
            let lhs = apply_map_power(
                &psi_star,
                &vd,
                s,
                &contract(&apply_map_power(&psi, &w, r, &b), &delta),
            );
            let rhs = contract(&b, &apply_map_power(&psi_star, &vd, s + r, &delta));
            assert_eq!(lhs, rhs, "case {case}: d={d} d'={d2} r={r} s={s}");
        }
    }

    #[test]
    fn alternating_maps_are_exactly_contractions_against_two_forms() {
        let ring = scalar_ring();
        let mut rng = rng_from_seed(113);
        let profile = PolyProfile { max_terms: 2, max_exp: 1, coeff_bound: 7 };
        for case in 0..200 {
            let d = 2 + (case % 3) as usize;
            let labels: Vec<String> = (1..=d).map(|i| format!("v{i}")).collect();
            let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            let v = BasedFreeModule::new("V", &label_refs);
            let vd = v.dual();
            // A contraction against a 2-form lands (f(a))(a) = 0 ...
            let alpha2 = random_element(&ring, &vd, 2, &mut rng);
            let a = random_element(&ring, &v, 1, &mut rng);
            let fa = contract(&a, &alpha2);
            assert!(pair(&fa, &a).is_zero());
            // ... and conversely every skew matrix with zero diagonal is the
            // contraction against the matching 2-form: α₂ = Σ_{i<l} M_{li}·v_i*∧v_l*.
            let mut m = PolyMatrix::zero(&ring, d, d);
            for i in 0..d {
                for l in (i + 1)..d {
                    let p = random_polynomial(&ring, &mut rng, &profile);
                    m.set(l, i, p.clone());
                    m.set(i, l, -&p);
                }
            }
            let alpha2 = ExtElement::from_coords(
                &ring,
                &vd,
                2,
                (0..d)
                    .flat_map(|i| ((i + 1)..d).map(move |l| (vec![i as u8, l as u8], (i, l))))
                    .map(|(idx, (i, l))| (idx, m.get(l, i).clone()))
                    .collect(),
            );
            for i in 0..d {
                let ei = ExtElement::generator(&ring, &v, i);
                let via_contraction = contract(&ei, &alpha2);
                let via_matrix = ExtElement::from_coords(
                    &ring,
                    &vd,
                    1,
                    (0..d).map(|j| (vec![j as u8], m.get(j, i).clone())).collect(),
                );
                assert_eq!(via_contraction, via_matrix, "case {case} basis {i}");
            }
        }
    }

    #[test]
    fn canonical_element_reproduces_every_element() {
        let ring = scalar_ring();
        let mut rng = rng_from_seed(127);
        for d in 2..=4usize {
            let labels: Vec<String> = (1..=d).map(|i| format!("v{i}")).collect();
            let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            let v = BasedFreeModule::new("V", &label_refs);
            for k in 0..=d {
                let can = canonical_element(&ring, &v, k);
                for _ in 0..10 {
                    let w = random_element(&ring, &v, k, &mut rng);
                    let mut acc = ExtElement::zero(&ring, &v, k);
                    for (a, b) in &can.pairs {
                        acc = &acc + &b.scale(&pair(a, &w));
                    }
                    assert_eq!(acc, w, "d={d} k={k}");
                }
            }
        }
    }

    #[test]
    fn top_wedge_expansion_identity() {
        // (y₁∧…∧y_d)(Θ) · Σᵢ xᵢ*⊗xᵢ = Σᵢ (−1)^{i+1} (y₁∧…ŷᵢ…∧y_d)(Θ) ⊗ yᵢ.
        let ring = scalar_ring();
        let mut rng = rng_from_seed(131);
        for case in 0..200 {
            let d = 2 + (case % 3) as usize;
            let labels: Vec<String> = (1..=d).map(|i| format!("v{i}")).collect();
            let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
            let v = BasedFreeModule::new("V", &label_refs);
            let vd = v.dual();
            let ys: Vec<ExtElement> =
                (0..d).map(|_| random_element(&ring, &v, 1, &mut rng)).collect();
            let theta = random_element(&ring, &vd, d, &mut rng);
            let all = ys
                .iter()
                .fold(ExtElement::one(&ring, &v), |acc, y| acc.wedge(y));
            let lhs = canonical_element(&ring, &v, 1).scale(&pair(&all, &theta));
            let mut rhs_pairs = Vec::new();
            for i in 0..d {
                let omit: ExtElement = ys
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .fold(ExtElement::one(&ring, &v), |acc, (_, y)| acc.wedge(y));
                let sign = if i % 2 == 0 { 1 } else { -1 };
                rhs_pairs.push((contract(&omit, &theta).mul_int(sign), ys[i].clone()));
            }
            let rhs = TensorSum::new(rhs_pairs);
            assert_eq!(lhs, rhs, "case {case}: d={d}");
        }
    }

    #[test]
    fn exterior_power_of_a_map_is_multiplicative() {
        let ring = scalar_ring();
        let mut rng = StdRng::seed_from_u64(137);
        let profile = PolyProfile { max_terms: 1, max_exp: 1, coeff_bound: 4 };
        let v = rank3();
        for _ in 0..40 {
            let m = PolyMatrix::from_fn(&ring, 3, 3, |_, _| {
                random_polynomial(&ring, &mut rng, &profile)
            });
            let n = PolyMatrix::from_fn(&ring, 3, 3, |_, _| {
                random_polynomial(&ring, &mut rng, &profile)
            });
            let mn = &m * &n;
            for k in 0..=3usize {
                for s in subsets(3, k) {
                    let b = ExtElement::basis(&ring, &v, &s);
                    let via_product = apply_map_power(&mn, &v, k, &b);
                    let step = apply_map_power(&n, &v, k, &b);
                    let via_steps = apply_map_power(&m, &v, k, &step);
                    assert_eq!(via_product, via_steps);
                }
            }
            // Top power is multiplication by the determinant.
            let top = ExtElement::basis(&ring, &v, &[0, 1, 2]);
            assert_eq!(apply_map_power(&m, &v, 3, &top), top.scale(&m.det()));
        }
    }

    #[test]
    #[should_panic(expected = "contraction requires dual modules")]
    fn contraction_within_one_algebra_is_refused() {
        let ring = scalar_ring();
        let f = rank3();
        let a = ExtElement::generator(&ring, &f, 0);
        let b = ExtElement::basis(&ring, &f, &[0, 1]);
        let _ = contract(&a, &b);
    }
}
