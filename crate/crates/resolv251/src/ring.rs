//! Sparse multivariate polynomials with exact coefficients and bidegrees.
//!
//! A [`PolyRing`] fixes a variable list, a bidegree for each variable, and a
//! coefficient domain (ℤ, ℤ[1/2], or ℚ).  A [`Polynomial`] is a sparse sum of
//! terms ordered by graded reverse lexicographic order; the zero polynomial
//! has no terms and is considered compatible with every bidegree.  Coefficient
//! arithmetic is exact rational arithmetic throughout; the domain tag controls
//! which coefficients are admitted and which constants count as units.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

/// Convenience constructor for an exact integer as a rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor for the exact fraction `n/d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A pair of internal degrees.  Variable bidegrees are non-negative;
/// differences of twists may be negative, so both components are signed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Bidegree(pub i64, pub i64);

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree(0, 0);

    pub fn is_zero(&self) -> bool {
        self.0 == 0 && self.1 == 0
    }

    /// True when both components are ≥ 0.
    pub fn is_effective(&self) -> bool {
        self.0 >= 0 && self.1 >= 0
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, other: Bidegree) -> Bidegree {
        Bidegree(self.0 + other.0, self.1 + other.1)
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, other: Bidegree) -> Bidegree {
        Bidegree(self.0 - other.0, self.1 - other.1)
    }
}

impl Neg for Bidegree {
    type Output = Bidegree;
    fn neg(self) -> Bidegree {
        Bidegree(-self.0, -self.1)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// Which constants are legal coefficients and which are invertible.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoefficientDomain {
    /// Plain integers: units are ±1.
    Integers,
    /// Integers with 2 inverted: coefficients are integers divided by powers
    /// of two, units are ±2^k.
    IntegersWithTwoInverted,
    /// The full rationals: every nonzero constant is a unit.
    Rationals,
}

fn is_power_of_two(n: &BigInt) -> bool {
    // n is assumed positive.
    let bits = n.bits();
    bits >= 1 && n == &(BigInt::one() << (bits - 1))
}

impl CoefficientDomain {
    /// The short tag used on the command line and in reports.
    pub fn label(&self) -> &'static str {
        match self {
            CoefficientDomain::Integers => "zz",
            CoefficientDomain::IntegersWithTwoInverted => "zz2",
            CoefficientDomain::Rationals => "qq",
        }
    }

    /// Parse a command-line tag.
    pub fn from_label(s: &str) -> Option<CoefficientDomain> {
        match s {
            "zz" => Some(CoefficientDomain::Integers),
            "zz2" => Some(CoefficientDomain::IntegersWithTwoInverted),
            "qq" => Some(CoefficientDomain::Rationals),
            _ => None,
        }
    }

    /// Is `c` a legal coefficient in this domain?
    pub fn admits(&self, c: &BigRational) -> bool {
        match self {
            CoefficientDomain::Integers => c.denom().is_one(),
            CoefficientDomain::IntegersWithTwoInverted => is_power_of_two(c.denom()),
            CoefficientDomain::Rationals => true,
        }
    }

    /// Is the nonzero constant `c` invertible in this domain?
    pub fn is_unit(&self, c: &BigRational) -> bool {
        if c.is_zero() {
            return false;
        }
        match self {
            CoefficientDomain::Integers => c.numer().abs().is_one() && c.denom().is_one(),
            CoefficientDomain::IntegersWithTwoInverted => {
                is_power_of_two(&c.numer().abs()) && is_power_of_two(c.denom())
            }
            CoefficientDomain::Rationals => true,
        }
    }
}

struct RingData {
    vars: Vec<String>,
    degrees: Vec<Bidegree>,
    domain: CoefficientDomain,
}

/// A polynomial ring: named variables, a bidegree per variable, and a
/// coefficient domain.  Cloning is cheap (shared handle).
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.vars == other.0.vars
                && self.0.degrees == other.0.degrees
                && self.0.domain == other.0.domain)
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyRing[{}; {}]", self.0.domain.label(), self.0.vars.join(", "))
    }
}

impl PolyRing {
    /// Build a ring from `(name, bidegree)` pairs.
    ///
    /// # Panics
    /// Panics on duplicate or empty names, or on a negative bidegree entry.
    pub fn new(vars: &[(&str, Bidegree)], domain: CoefficientDomain) -> PolyRing {
        let mut names = Vec::with_capacity(vars.len());
        let mut degrees = Vec::with_capacity(vars.len());
        for (name, deg) in vars {
            assert!(!name.is_empty(), "empty variable name");
            assert!(
                !names.iter().any(|n: &String| n == name),
                "duplicate variable name {name}"
            );
            assert!(deg.is_effective(), "variable {name} has negative bidegree {deg}");
            names.push((*name).to_string());
            degrees.push(*deg);
        }
        PolyRing(Arc::new(RingData { vars: names, degrees, domain }))
    }

    /// Same ring with a different coefficient domain.
    pub fn with_domain(&self, domain: CoefficientDomain) -> PolyRing {
        let pairs: Vec<(&str, Bidegree)> = self
            .0
            .vars
            .iter()
            .map(|s| s.as_str())
            .zip(self.0.degrees.iter().copied())
            .collect();
        PolyRing::new(&pairs, domain)
    }

    pub fn num_vars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_degree(&self, i: usize) -> Bidegree {
        self.0.degrees[i]
    }

    pub fn var_degrees(&self) -> &[Bidegree] {
        &self.0.degrees
    }

    pub fn domain(&self) -> CoefficientDomain {
        self.0.domain
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// The variable with the given name, as a polynomial.
    ///
    /// # Panics
    /// Panics if the name is not a variable of this ring.
    pub fn var(&self, name: &str) -> Polynomial {
        let i = self
            .var_index(name)
            .unwrap_or_else(|| panic!("no variable {name} in {self:?}"));
        self.var_by_index(i)
    }

    pub fn var_by_index(&self, i: usize) -> Polynomial {
        assert!(i < self.num_vars());
        let mut exp = vec![0u32; self.num_vars()];
        exp[i] = 1;
        Polynomial::from_terms(self.clone(), vec![(Monomial(exp), BigRational::one())])
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Polynomial {
        self.constant(rat(n))
    }

    pub fn constant(&self, c: BigRational) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        let exp = Monomial(vec![0u32; self.num_vars()]);
        Polynomial::from_terms(self.clone(), vec![(exp, c)])
    }

    /// `true` when the two handles denote the same ring.
    pub fn same_ring(&self, other: &PolyRing) -> bool {
        self == other
    }

    /// The bidegree of a monomial in this ring.
    pub fn monomial_degree(&self, m: &Monomial) -> Bidegree {
        assert_eq!(m.0.len(), self.num_vars(), "monomial arity mismatch");
        let mut d = Bidegree::ZERO;
        for (e, vd) in m.0.iter().zip(self.0.degrees.iter()) {
            d = d + Bidegree(vd.0 * i64::from(*e), vd.1 * i64::from(*e));
        }
        d
    }

    /// All monomials of the given bidegree, in descending term order.
    ///
    /// Used by the graded membership solver to enumerate a bigraded piece of
    /// the ring.  Empty when the bidegree has a negative component.
    pub fn monomials_of_bidegree(&self, target: Bidegree) -> Vec<Monomial> {
        let mut out = Vec::new();
        if !target.is_effective() {
            return out;
        }
        let n = self.num_vars();
        let mut exp = vec![0u32; n];
        fn rec(
            ring: &PolyRing,
            i: usize,
            remaining: Bidegree,
            exp: &mut Vec<u32>,
            out: &mut Vec<Monomial>,
        ) {
            if remaining.is_zero() {
                let mut full = exp.clone();
                full.resize(ring.num_vars(), 0);
                out.push(Monomial(full));
                return;
            }
            if i == ring.num_vars() || !remaining.is_effective() {
                return;
            }
            let d = ring.var_degree(i);
            let max_e = if d.is_zero() {
                0
            } else {
                let mut m = u32::MAX;
                if d.0 > 0 {
                    m = m.min((remaining.0 / d.0) as u32);
                }
                if d.1 > 0 {
                    m = m.min((remaining.1 / d.1) as u32);
                }
                m
            };
            for e in 0..=max_e {
                exp[i] = e;
                let rest = remaining - Bidegree(d.0 * i64::from(e), d.1 * i64::from(e));
                rec(ring, i + 1, rest, exp, out);
            }
            exp[i] = 0;
        }
        rec(self, 0, target, &mut exp, &mut out);
        out.sort();
        out.reverse();
        out
    }
}

/// An exponent vector.  Ordered by graded reverse lexicographic order, so the
/// maximum of a set of monomials is the grevlex leading monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.0.len(), other.0.len());
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.checked_div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.0.len(), other.0.len(), "monomial arity mismatch");
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Reverse lexicographic tie-break: in the last position where the
        // exponents differ, the smaller exponent wins.
        for i in (0..self.0.len()).rev() {
            if self.0[i] != other.0[i] {
                return other.0[i].cmp(&self.0[i]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Result of asking a polynomial for its bidegree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BidegreeClass {
    /// The zero polynomial, compatible with every bidegree.
    Zero,
    /// Bihomogeneous of the given bidegree.
    Pure(Bidegree),
    /// Terms of more than one bidegree.
    Mixed,
}

/// A sparse polynomial: a map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    /// Normalizing constructor: drops zero coefficients, checks arities and
    /// that every coefficient is admitted by the ring's domain.
    ///
    /// # Panics
    /// Panics if a coefficient is not admitted by the coefficient domain.
    pub fn from_terms(ring: PolyRing, terms: Vec<(Monomial, BigRational)>) -> Polynomial {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), ring.num_vars(), "monomial arity mismatch");
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        for c in map.values() {
            assert!(
                ring.domain().admits(c),
                "coefficient {c} not admitted over {}",
                ring.domain().label()
            );
        }
        Polynomial { ring, terms: map }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in descending grevlex order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    /// The grevlex-largest monomial, if any.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The coefficient of the constant monomial.
    pub fn constant_coefficient(&self) -> BigRational {
        self.coefficient(&Monomial(vec![0; self.ring.num_vars()]))
    }

    /// Is this a constant (including zero)?
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Is this a unit constant of the coefficient domain?
    pub fn is_unit_constant(&self) -> bool {
        match self.as_constant() {
            Some(c) => self.ring.domain().is_unit(&c),
            None => false,
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Classify the bidegree of this polynomial.
    pub fn bidegree_class(&self) -> BidegreeClass {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return BidegreeClass::Zero,
            Some(m) => self.ring.monomial_degree(m),
        };
        for m in it {
            if self.ring.monomial_degree(m) != first {
                return BidegreeClass::Mixed;
            }
        }
        BidegreeClass::Pure(first)
    }

    /// Does every term have bidegree `d`?  The zero polynomial is compatible
    /// with every bidegree.
    pub fn has_bidegree(&self, d: Bidegree) -> bool {
        match self.bidegree_class() {
            BidegreeClass::Zero => true,
            BidegreeClass::Pure(actual) => actual == d,
            BidegreeClass::Mixed => false,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial::from_terms(self.ring.clone(), terms)
    }

    pub fn mul_int(&self, n: i64) -> Polynomial {
        self.scale(&rat(n))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a rational point (one value per variable).
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.ring.num_vars(), "point arity mismatch");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Divide by a unit constant of the coefficient domain.
    ///
    /// # Panics
    /// Panics if `u` is not a unit in the ring's domain.
    pub fn div_unit(&self, u: &BigRational) -> Polynomial {
        assert!(
            self.ring.domain().is_unit(u),
            "{u} is not a unit over {}",
            self.ring.domain().label()
        );
        self.scale(&(BigRational::one() / u))
    }
}

fn check_same_ring(a: &Polynomial, b: &Polynomial) {
    assert!(
        a.ring.same_ring(&b.ring),
        "ring mismatch: {:?} vs {:?}",
        a.ring,
        b.ring
    );
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, other: &Polynomial) -> Polynomial {
        check_same_ring(self, other);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, other: &Polynomial) -> Polynomial {
        self + &(-other)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, other: &Polynomial) -> Polynomial {
        check_same_ring(self, other);
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let entry = terms.entry(m).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, other: &Polynomial) {
        *self = &*self + other;
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_desc() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.var_names()[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var_names()[i], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A ring homomorphism determined by an image for each source variable.
///
/// Images need not be bihomogeneous: evaluation maps such as "set ℓ₁₁ = −1"
/// are legitimate ring maps even though they do not preserve the grading.
#[derive(Clone)]
pub struct RingMap {
    source: PolyRing,
    target: PolyRing,
    images: Vec<Polynomial>,
}

impl RingMap {
    /// # Panics
    /// Panics if the image count differs from the source variable count or an
    /// image lives in the wrong ring.
    pub fn new(source: PolyRing, target: PolyRing, images: Vec<Polynomial>) -> RingMap {
        assert_eq!(
            images.len(),
            source.num_vars(),
            "one image required per source variable"
        );
        for p in &images {
            assert!(p.ring().same_ring(&target), "image in wrong ring");
        }
        RingMap { source, target, images }
    }

    /// Build a map from `(source variable, image)` pairs, one per variable.
    pub fn from_pairs(
        source: PolyRing,
        target: PolyRing,
        pairs: &[(&str, Polynomial)],
    ) -> RingMap {
        let mut images: Vec<Option<Polynomial>> = vec![None; source.num_vars()];
        for (name, img) in pairs {
            let i = source
                .var_index(name)
                .unwrap_or_else(|| panic!("no variable {name} in source ring"));
            assert!(images[i].is_none(), "duplicate image for {name}");
            images[i] = Some(img.clone());
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.unwrap_or_else(|| panic!("no image for {}", source.var_names()[i])))
            .collect();
        RingMap::new(source, target, images)
    }

    pub fn identity(ring: &PolyRing) -> RingMap {
        let images = (0..ring.num_vars()).map(|i| ring.var_by_index(i)).collect();
        RingMap::new(ring.clone(), ring.clone(), images)
    }

    pub fn source(&self) -> &PolyRing {
        &self.source
    }

    pub fn target(&self) -> &PolyRing {
        &self.target
    }

    pub fn image(&self, name: &str) -> &Polynomial {
        let i = self
            .source
            .var_index(name)
            .unwrap_or_else(|| panic!("no variable {name} in source ring"));
        &self.images[i]
    }

    /// Apply the map to a polynomial of the source ring.
    ///
    /// # Panics
    /// Panics on ring mismatch.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert!(p.ring().same_ring(&self.source), "ring mismatch in map application");
        // Cache the powers of each image that this polynomial needs.
        let mut max_exp = vec![0u32; self.source.num_vars()];
        for (m, _) in p.terms() {
            for (i, &e) in m.0.iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(self.images.len());
        for (i, img) in self.images.iter().enumerate() {
            let mut tower = vec![self.target.one()];
            for e in 1..=max_exp[i] {
                let next = &tower[(e - 1) as usize] * img;
                tower.push(next);
            }
            powers.push(tower);
        }
        let mut acc = self.target.zero();
        for (m, c) in p.terms() {
            let mut term = self.target.constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            acc += &term;
        }
        acc
    }

    /// The composite `g ∘ self` (apply `self` first, then `g`).
    pub fn then(&self, g: &RingMap) -> RingMap {
        assert!(self.target.same_ring(&g.source), "composition ring mismatch");
        let images = self.images.iter().map(|p| g.apply(p)).collect();
        RingMap::new(self.source.clone(), g.target.clone(), images)
    }

    /// Does every variable image have the same bidegree as the variable?
    pub fn is_graded(&self) -> bool {
        (0..self.source.num_vars())
            .all(|i| self.images[i].has_bidegree(self.source.var_degree(i)))
    }
}

// ---------------------------------------------------------------------------
// JSON form
// ---------------------------------------------------------------------------

/// One term of a polynomial in the interchange form: exponent vector plus
/// exact numerator and denominator as decimal strings.
#[derive(serde::Serialize, serde::Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

/// A standalone polynomial in the interchange form: the variable list plus
/// the term list in descending term order.
#[derive(serde::Serialize, serde::Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct PolyJson {
    pub ring: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl Polynomial {
    /// Terms in descending order, coefficients as decimal strings.
    pub fn to_terms_json(&self) -> Vec<TermJson> {
        self.terms_desc()
            .map(|(m, c)| TermJson {
                exp: m.0.clone(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn to_poly_json(&self) -> PolyJson {
        PolyJson {
            ring: self.ring.var_names().to_vec(),
            terms: self.to_terms_json(),
        }
    }

    /// Rebuild a polynomial from term records.
    ///
    /// # Panics
    /// Panics on malformed integers or arity mismatch.
    pub fn from_terms_json(ring: &PolyRing, terms: &[TermJson]) -> Polynomial {
        let parsed = terms
            .iter()
            .map(|t| {
                let num: BigInt = t.num.parse().expect("bad numerator");
                let den: BigInt = t.den.parse().expect("bad denominator");
                (Monomial(t.exp.clone()), BigRational::new(num, den))
            })
            .collect();
        Polynomial::from_terms(ring.clone(), parsed)
    }

    pub fn from_poly_json(json: &PolyJson, domain: CoefficientDomain) -> Polynomial {
        let vars: Vec<(&str, Bidegree)> =
            json.ring.iter().map(|n| (n.as_str(), Bidegree::ZERO)).collect();
        let ring = PolyRing::new(&vars, domain);
        Polynomial::from_terms_json(&ring, &json.terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{random_polynomial, rng_from_seed, PolyProfile};
    use rand::Rng;

    fn test_ring() -> PolyRing {
        PolyRing::new(
            &[
                ("a", Bidegree(1, 0)),
                ("b", Bidegree(1, 0)),
                ("c", Bidegree(0, 1)),
                ("d", Bidegree(2, 1)),
            ],
            CoefficientDomain::Rationals,
        )
    }

    #[test]
    fn grevlex_order_on_small_examples() {
        // In grevlex with x > y > z: x² > xy > y² > xz > yz > z².
        let ring = PolyRing::new(
            &[("x", Bidegree(1, 0)), ("y", Bidegree(1, 0)), ("z", Bidegree(1, 0))],
            CoefficientDomain::Integers,
        );
        let m = |e: [u32; 3]| Monomial(e.to_vec());
        let expected = [
            m([2, 0, 0]),
            m([1, 1, 0]),
            m([0, 2, 0]),
            m([1, 0, 1]),
            m([0, 1, 1]),
            m([0, 0, 2]),
        ];
        for w in expected.windows(2) {
            assert!(w[0] > w[1], "{:?} should exceed {:?}", w[0], w[1]);
        }
        let x = ring.var("x");
        let y = ring.var("y");
        let p = &x.pow(2) + &(&x * &y);
        assert_eq!(p.leading_monomial().unwrap(), &m([2, 0, 0]));
    }

    #[test]
    fn quadratic_discriminant_expansion() {
        // Freeze (b² − 4ac)² expanded; oracle computed by hand:
        // b⁴ − 8ab²c + 16a²c².
        let ring = PolyRing::new(
            &[("a", Bidegree(1, 0)), ("b", Bidegree(1, 0)), ("c", Bidegree(1, 0))],
            CoefficientDomain::Integers,
        );
        let (a, b, c) = (ring.var("a"), ring.var("b"), ring.var("c"));
        let disc = &b.pow(2) - &(&a * &c).mul_int(4);
        let sq = disc.pow(2);
        assert_eq!(sq.num_terms(), 3);
        let coeff_of = |exp: [u32; 3]| sq.coefficient(&Monomial(exp.to_vec()));
        assert_eq!(coeff_of([0, 4, 0]), rat(1));
        assert_eq!(coeff_of([1, 2, 1]), rat(-8));
        assert_eq!(coeff_of([2, 0, 2]), rat(16));
    }

    #[test]
    fn ring_axioms_randomized() {
        let ring = test_ring();
        let mut rng = rng_from_seed(17);
        let profile = PolyProfile { max_terms: 5, max_exp: 3, coeff_bound: 20 };
        for _ in 0..500 {
            let p = random_polynomial(&ring, &mut rng, &profile);
            let q = random_polynomial(&ring, &mut rng, &profile);
            let r = random_polynomial(&ring, &mut rng, &profile);
            assert_eq!(&p + &q, &q + &p);
            assert_eq!(&p * &q, &q * &p);
            assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            assert_eq!(&p - &p, ring.zero());
            assert_eq!(&p * &ring.one(), p);
            assert_eq!(&p * &ring.zero(), ring.zero());
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism() {
        let ring = test_ring();
        let mut rng = rng_from_seed(99);
        let profile = PolyProfile { max_terms: 6, max_exp: 3, coeff_bound: 15 };
        for _ in 0..200 {
            let p = random_polynomial(&ring, &mut rng, &profile);
            let q = random_polynomial(&ring, &mut rng, &profile);
            let point: Vec<BigRational> =
                (0..ring.num_vars()).map(|_| rat(rng.gen_range(-50..=50))).collect();
            assert_eq!(
                (&p * &q).eval(&point),
                p.eval(&point) * q.eval(&point)
            );
            assert_eq!(
                (&p + &q).eval(&point),
                p.eval(&point) + q.eval(&point)
            );
        }
    }

    #[test]
    fn bidegrees_add_under_multiplication() {
        let ring = test_ring();
        let (a, c, d) = (ring.var("a"), ring.var("c"), ring.var("d"));
        let p = &a * &c; // (1,1)
        let q = &d * &d; // (4,2)
        assert!(p.has_bidegree(Bidegree(1, 1)));
        assert!(q.has_bidegree(Bidegree(4, 2)));
        assert!((&p * &q).has_bidegree(Bidegree(5, 3)));
        assert_eq!((&p + &q).bidegree_class(), BidegreeClass::Mixed);
        assert_eq!(ring.zero().bidegree_class(), BidegreeClass::Zero);
        assert!(ring.zero().has_bidegree(Bidegree(7, 3)));
    }

    #[test]
    fn monomials_of_bidegree_enumerates_a_graded_piece() {
        let ring = test_ring();
        // Bidegree (2,1): monomials in a,b (degree (1,0)), c ((0,1)), d ((2,1)).
        // Options: {a²c, abc, b²c, d}.
        let ms = ring.monomials_of_bidegree(Bidegree(2, 1));
        assert_eq!(ms.len(), 4);
        for m in &ms {
            assert_eq!(ring.monomial_degree(m), Bidegree(2, 1));
        }
        // Descending order, and empty on negative degrees.
        for w in ms.windows(2) {
            assert!(w[0] > w[1]);
        }
        assert!(ring.monomials_of_bidegree(Bidegree(-1, 0)).is_empty());
    }

    #[test]
    fn domain_validity_and_units() {
        let zz = CoefficientDomain::Integers;
        let zz2 = CoefficientDomain::IntegersWithTwoInverted;
        let qq = CoefficientDomain::Rationals;
        assert!(zz.admits(&rat(-7)) && !zz.admits(&ratio(1, 2)));
        assert!(zz2.admits(&ratio(3, 8)) && !zz2.admits(&ratio(1, 3)));
        assert!(qq.admits(&ratio(22, 7)));
        assert!(zz.is_unit(&rat(-1)) && !zz.is_unit(&rat(2)));
        assert!(zz2.is_unit(&ratio(-1, 4)) && zz2.is_unit(&rat(16)));
        assert!(!zz2.is_unit(&rat(3)) && !zz2.is_unit(&ratio(3, 2)));
        assert!(qq.is_unit(&ratio(22, 7)) && !qq.is_unit(&rat(0)));
    }

    #[test]
    #[should_panic(expected = "not admitted")]
    fn integer_ring_rejects_fractional_coefficients() {
        let ring = PolyRing::new(&[("x", Bidegree(1, 0))], CoefficientDomain::Integers);
        let _ = ring.constant(ratio(1, 2));
    }

    #[test]
    #[should_panic(expected = "ring mismatch")]
    fn cross_ring_arithmetic_is_refused() {
        let r1 = PolyRing::new(&[("x", Bidegree(1, 0))], CoefficientDomain::Integers);
        let r2 = PolyRing::new(&[("y", Bidegree(1, 0))], CoefficientDomain::Integers);
        let _ = &r1.var("x") + &r2.var("y");
    }

    #[test]
    fn ring_map_is_a_homomorphism() {
        let src = test_ring();
        let tgt = PolyRing::new(
            &[("u", Bidegree(1, 0)), ("v", Bidegree(0, 1))],
            CoefficientDomain::Rationals,
        );
        let (u, v) = (tgt.var("u"), tgt.var("v"));
        let map = RingMap::new(
            src.clone(),
            tgt.clone(),
            vec![&u + &v, u.pow(2), tgt.int(3), &(&u * &v) - &tgt.one()],
        );
        let mut rng = rng_from_seed(5);
        let profile = PolyProfile { max_terms: 5, max_exp: 2, coeff_bound: 10 };
        for _ in 0..200 {
            let p = random_polynomial(&src, &mut rng, &profile);
            let q = random_polynomial(&src, &mut rng, &profile);
            assert_eq!(map.apply(&(&p * &q)), &map.apply(&p) * &map.apply(&q));
            assert_eq!(map.apply(&(&p + &q)), &map.apply(&p) + &map.apply(&q));
        }
        assert_eq!(map.apply(&src.one()), tgt.one());
    }

    #[test]
    fn ring_map_composition_matches_sequential_application() {
        let src = test_ring();
        let mid = PolyRing::new(
            &[("u", Bidegree(1, 0)), ("v", Bidegree(0, 1))],
            CoefficientDomain::Rationals,
        );
        let end = PolyRing::new(&[("t", Bidegree(1, 1))], CoefficientDomain::Rationals);
        let f = RingMap::new(
            src.clone(),
            mid.clone(),
            vec![mid.var("u"), mid.var("v"), &mid.var("u") + &mid.var("v"), mid.int(2)],
        );
        let g = RingMap::new(mid, end.clone(), vec![end.var("t"), end.var("t").pow(2)]);
        let gf = f.then(&g);
        let mut rng = rng_from_seed(23);
        let profile = PolyProfile { max_terms: 4, max_exp: 2, coeff_bound: 9 };
        for _ in 0..100 {
            let p = random_polynomial(&src, &mut rng, &profile);
            assert_eq!(gf.apply(&p), g.apply(&f.apply(&p)));
        }
    }

    #[test]
    fn json_round_trip_preserves_polynomials() {
        let ring = test_ring();
        let mut rng = rng_from_seed(41);
        let profile = PolyProfile { max_terms: 8, max_exp: 4, coeff_bound: 1000 };
        for _ in 0..50 {
            let p = random_polynomial(&ring, &mut rng, &profile);
            let json = p.to_poly_json();
            let text = serde_json::to_string(&json).unwrap();
            let back: PolyJson = serde_json::from_str(&text).unwrap();
            let q = Polynomial::from_terms_json(&ring, &back.terms);
            assert_eq!(p, q);
            assert_eq!(back.ring, ring.var_names());
        }
        // Terms are serialized leading-first.
        let (a, b) = (ring.var("a"), ring.var("b"));
        let p = &(&a * &a) + &b;
        let json = p.to_poly_json();
        assert_eq!(json.terms[0].exp, vec![2, 0, 0, 0]);
        assert_eq!(json.terms[0].num, "1");
        assert_eq!(json.terms[0].den, "1");
    }

    #[test]
    fn display_is_readable() {
        let ring = test_ring();
        let (a, b, c) = (ring.var("a"), ring.var("b"), ring.var("c"));
        let p = &(&a.pow(2) - &(&b * &c).scale(&ratio(1, 2))) + &ring.int(3);
        assert_eq!(p.to_string(), "a^2 - 1/2*b*c + 3");
        assert_eq!(ring.zero().to_string(), "0");
        assert_eq!((-&ring.one()).to_string(), "-1");
    }
}
