//! Finite complexes of based free modules and chain maps between them.
//!
//! A [`FreeComplex`] stores the modules C_0 … C_top (rank, basis labels,
//! optional bidegree twists) together with the differentials d_i : C_i →
//! C_{i−1} as polynomial matrices.  All structural checks are exact: a
//! complex either satisfies d∘d = 0 entrywise or the offending entry is
//! reported.
//!
//! Conventions fixed here and relied on everywhere else:
//! * `dual` reverses indexing, transposes, and puts the sign (−1)^i on the
//!   degree-i differential of the result;
//! * `mapping_cone(f : K → B)` has Cone_i = B_i ⊕ K_{i−1} with differential
//!   [[d_B, f], [0, −d_K]];
//! * `tensor_complexes` orders each ⊕_{i+j=n} C_i ⊗ D_j block by ascending i
//!   and uses d(x⊗y) = dx⊗y + (−1)^i x⊗dy;
//! * `remove_split_summand` cancels unit entries, scanning row-major starting
//!   from the top differential, and certifies the reduction by an explicit
//!   projection/inclusion pair of chain maps with project ∘ include = id.

use crate::matrix::PolyMatrix;
use crate::ring::{Bidegree, PolyRing, Polynomial, RingMap};
use num::One;
use serde::{Deserialize, Serialize};

/// One free module in a complex: rank, display labels for the chosen basis,
/// and optionally the bidegree twist of each basis vector.  A twist records
/// the internal bidegree of the generator, so a summand written R(−a,−b) is
/// stored as the pair (a, b).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleData {
    pub rank: usize,
    pub labels: Vec<String>,
    pub twists: Option<Vec<Bidegree>>,
}

impl ModuleData {
    pub fn new(labels: &[&str]) -> ModuleData {
        ModuleData {
            rank: labels.len(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            twists: None,
        }
    }

    pub fn with_twists(labels: &[&str], twists: &[(i64, i64)]) -> ModuleData {
        assert_eq!(labels.len(), twists.len(), "one twist per basis vector");
        ModuleData {
            rank: labels.len(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            twists: Some(twists.iter().map(|&(a, b)| Bidegree(a, b)).collect()),
        }
    }

    pub fn zero() -> ModuleData {
        ModuleData { rank: 0, labels: Vec::new(), twists: Some(Vec::new()) }
    }

    fn drop_index(&self, i: usize) -> ModuleData {
        let mut labels = self.labels.clone();
        labels.remove(i);
        let twists = self.twists.clone().map(|mut t| {
            t.remove(i);
            t
        });
        ModuleData { rank: self.rank - 1, labels, twists }
    }

    fn dual(&self) -> ModuleData {
        ModuleData {
            rank: self.rank,
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
            twists: self.twists.clone().map(|t| t.into_iter().map(|d| -d).collect()),
        }
    }
}

/// A finite complex 0 → C_top → … → C_1 → C_0 of based free modules.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeComplex {
    ring: PolyRing,
    name: String,
    modules: Vec<ModuleData>,
    /// diffs[i] is d_{i+1} : C_{i+1} → C_i, shape rank(C_i) × rank(C_{i+1}).
    diffs: Vec<PolyMatrix>,
}

impl FreeComplex {
    /// # Panics
    /// Panics when a differential's shape does not match the adjacent ranks
    /// or lives over the wrong ring.
    pub fn new(
        ring: &PolyRing,
        name: &str,
        modules: Vec<ModuleData>,
        diffs: Vec<PolyMatrix>,
    ) -> FreeComplex {
        assert!(!modules.is_empty(), "a complex needs at least C_0");
        assert_eq!(diffs.len() + 1, modules.len(), "one differential per adjacent pair");
        for (i, d) in diffs.iter().enumerate() {
            assert!(d.ring().same_ring(ring), "differential over wrong ring");
            assert_eq!(d.rows(), modules[i].rank, "d_{} has wrong row count", i + 1);
            assert_eq!(d.cols(), modules[i + 1].rank, "d_{} has wrong column count", i + 1);
        }
        for m in &modules {
            assert_eq!(m.labels.len(), m.rank);
            if let Some(t) = &m.twists {
                assert_eq!(t.len(), m.rank);
            }
        }
        FreeComplex {
            ring: ring.clone(),
            name: name.to_string(),
            modules,
            diffs,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: &str) -> FreeComplex {
        let mut c = self.clone();
        c.name = name.to_string();
        c
    }

    /// Highest homological degree carried (the module there may be zero).
    pub fn top(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn module(&self, i: usize) -> &ModuleData {
        &self.modules[i]
    }

    /// Rank of C_i; zero outside the carried range.
    pub fn rank(&self, i: usize) -> usize {
        self.modules.get(i).map_or(0, |m| m.rank)
    }

    /// Ranks from degree 0 upward.
    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank).collect()
    }

    /// Ranks from the top degree down — the order resolutions are displayed.
    pub fn ranks_desc(&self) -> Vec<usize> {
        let mut r = self.ranks();
        r.reverse();
        r
    }

    /// The differential d_i : C_i → C_{i−1}, for 1 ≤ i ≤ top.
    pub fn differential(&self, i: usize) -> &PolyMatrix {
        assert!(i >= 1 && i <= self.top(), "no differential d_{i}");
        &self.diffs[i - 1]
    }

    /// Replace one differential (used by tests to probe the checkers).
    pub fn set_differential(&mut self, i: usize, d: PolyMatrix) {
        assert!(i >= 1 && i <= self.top());
        assert_eq!(d.rows(), self.modules[i - 1].rank);
        assert_eq!(d.cols(), self.modules[i].rank);
        self.diffs[i - 1] = d;
    }

    /// Verify d_i ∘ d_{i+1} = 0 for every i; on failure, name the first
    /// nonzero entry of the first nonzero composite.
    pub fn check_complex(&self) -> Result<(), String> {
        for i in 1..self.top() {
            let composite = self.differential(i) * self.differential(i + 1);
            for r in 0..composite.rows() {
                for c in 0..composite.cols() {
                    if !composite.get(r, c).is_zero() {
                        return Err(format!(
                            "{}: d_{i}∘d_{} has nonzero entry at ({r},{c}): {}",
                            self.name,
                            i + 1,
                            composite.get(r, c)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Verify that every entry of every differential is bihomogeneous of the
    /// bidegree forced by the twists of its row and column basis vectors.
    pub fn check_bigrading(&self) -> Result<(), String> {
        for i in 1..=self.top() {
            let src = self
                .modules[i]
                .twists
                .as_ref()
                .ok_or_else(|| format!("{}: C_{i} carries no twists", self.name))?;
            let tgt = self
                .modules[i - 1]
                .twists
                .as_ref()
                .ok_or_else(|| format!("{}: C_{} carries no twists", self.name, i - 1))?;
            let d = self.differential(i);
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    let need = src[c] - tgt[r];
                    if !d.get(r, c).has_bidegree(need) {
                        return Err(format!(
                            "{}: d_{i} entry ({r},{c}) = {} is not bihomogeneous of bidegree {need}",
                            self.name,
                            d.get(r, c)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The dual complex: degree i of the result is (C_{top−i})*, with
    /// differential (−1)^i · (d_{top−i+1})^T.
    pub fn dual(&self) -> FreeComplex {
        let top = self.top();
        let modules: Vec<ModuleData> =
            (0..=top).map(|i| self.modules[top - i].dual()).collect();
        let diffs: Vec<PolyMatrix> = (1..=top)
            .map(|i| {
                let t = self.differential(top - i + 1).transpose();
                if i % 2 == 0 {
                    t
                } else {
                    -&t
                }
            })
            .collect();
        FreeComplex::new(&self.ring, &format!("{}*", self.name), modules, diffs)
    }

    /// Shift k degrees upward: the result has C_{i+k} = old C_i and carries
    /// the sign (−1)^k on every differential.
    pub fn shift(&self, k: usize) -> FreeComplex {
        let mut modules = vec![ModuleData::zero(); k];
        modules.extend(self.modules.iter().cloned());
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let mut diffs = Vec::new();
        for i in 0..k {
            diffs.push(PolyMatrix::zero(&self.ring, modules[i].rank, modules[i + 1].rank));
        }
        diffs.extend(self.diffs.iter().map(|d| d.scale_int(sign)));
        FreeComplex::new(&self.ring, &format!("{}[{k}]", self.name), modules, diffs)
    }

    /// Add `delta` to every recorded twist.
    pub fn shift_twists(&self, delta: Bidegree) -> FreeComplex {
        let modules = self
            .modules
            .iter()
            .map(|m| ModuleData {
                rank: m.rank,
                labels: m.labels.clone(),
                twists: m.twists.clone().map(|t| t.into_iter().map(|d| d + delta).collect()),
            })
            .collect();
        FreeComplex::new(&self.ring, &self.name, modules, self.diffs.clone())
    }

    /// Drop zero modules from the top end.
    pub fn trim_top(&self) -> FreeComplex {
        let mut top = self.top();
        while top > 0 && self.modules[top].rank == 0 {
            top -= 1;
        }
        FreeComplex::new(
            &self.ring,
            &self.name,
            self.modules[..=top].to_vec(),
            self.diffs[..top].to_vec(),
        )
    }

    /// Apply a ring map to every differential, keeping labels and twists.
    pub fn apply_map(&self, map: &RingMap, name: &str) -> FreeComplex {
        FreeComplex::new(
            map.target(),
            name,
            self.modules.clone(),
            self.diffs.iter().map(|d| d.apply_map(map)).collect(),
        )
    }

    /// Total complex of the tensor product, with blocks ordered by ascending
    /// degree in `self`.
    pub fn tensor(&self, other: &FreeComplex, name: &str) -> FreeComplex {
        assert!(self.ring.same_ring(&other.ring), "tensor over different rings");
        let top = self.top() + other.top();
        // Index layout of degree n: blocks (i, n−i) for i ascending, each
        // block row-major in (self basis, other basis).
        let block_layout = |n: usize| -> Vec<(usize, usize)> {
            (0..=n)
                .filter(|&i| i <= self.top() && n - i <= other.top())
                .map(|i| (i, n - i))
                .collect()
        };
        let mut modules = Vec::new();
        for n in 0..=top {
            let mut labels: Vec<String> = Vec::new();
            let mut twists: Option<Vec<Bidegree>> = Some(Vec::new());
            let mut rank = 0usize;
            for (i, j) in block_layout(n) {
                let (a, b) = (&self.modules[i], &other.modules[j]);
                rank += a.rank * b.rank;
                for la in &a.labels {
                    for lb in &b.labels {
                        labels.push(format!("{la}⊗{lb}"));
                    }
                }
                match (&a.twists, &b.twists, &mut twists) {
                    (Some(ta), Some(tb), Some(acc)) => {
                        for da in ta {
                            for db in tb {
                                acc.push(*da + *db);
                            }
                        }
                    }
                    _ => twists = None,
                }
            }
            modules.push(ModuleData { rank, labels, twists });
        }
        let mut diffs = Vec::new();
        for n in 1..=top {
            let src_layout = block_layout(n);
            let tgt_layout = block_layout(n - 1);
            let rows: usize = tgt_layout
                .iter()
                .map(|&(i, j)| self.modules[i].rank * other.modules[j].rank)
                .sum();
            let cols: usize = src_layout
                .iter()
                .map(|&(i, j)| self.modules[i].rank * other.modules[j].rank)
                .sum();
            let mut d = PolyMatrix::zero(&self.ring, rows, cols);
            let mut col_base = 0usize;
            for &(i, j) in &src_layout {
                let (ra, rb) = (self.modules[i].rank, other.modules[j].rank);
                // Left differential: (i,j) → (i−1,j), no sign.
                if i >= 1 {
                    let da = self.differential(i);
                    let mut row_base = 0usize;
                    for &(ti, tj) in &tgt_layout {
                        if ti == i - 1 && tj == j {
                            for p in 0..self.modules[i - 1].rank {
                                for q in 0..rb {
                                    for s in 0..ra {
                                        let v = da.get(p, s);
                                        if !v.is_zero() {
                                            d.set(
                                                row_base + p * rb + q,
                                                col_base + s * rb + q,
                                                v.clone(),
                                            );
                                        }
                                    }
                                }
                            }
                        }
                        row_base += self.modules[ti].rank * other.modules[tj].rank;
                    }
                }
                // Right differential: (i,j) → (i,j−1), sign (−1)^i.
                if j >= 1 {
                    let db = other.differential(j);
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let mut row_base = 0usize;
                    for &(ti, tj) in &tgt_layout {
                        if ti == i && tj == j - 1 {
                            for p in 0..ra {
                                for q in 0..other.modules[j - 1].rank {
                                    for s in 0..rb {
                                        let v = db.get(q, s);
                                        if !v.is_zero() {
                                            d.set(
                                                row_base + p * other.modules[j - 1].rank + q,
                                                col_base + p * rb + s,
                                                v.mul_int(sign),
                                            );
                                        }
                                    }
                                }
                            }
                        }
                        row_base += self.modules[ti].rank * other.modules[tj].rank;
                    }
                }
                col_base += ra * rb;
            }
            diffs.push(d);
        }
        FreeComplex::new(&self.ring, name, modules, diffs)
    }
}

impl std::fmt::Debug for FreeComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: ranks {:?} over {:?}",
            self.name,
            self.ranks_desc(),
            self.ring
        )
    }
}

/// A degreewise map between two complexes over one ring.  `maps[i]` sends
/// C_i of the source into C_i of the target; degrees outside a complex's
/// range count as zero modules.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainMap {
    source: FreeComplex,
    target: FreeComplex,
    maps: Vec<PolyMatrix>,
}

impl ChainMap {
    pub fn new(source: &FreeComplex, target: &FreeComplex, maps: Vec<PolyMatrix>) -> ChainMap {
        assert!(source.ring.same_ring(&target.ring), "chain map across rings");
        let top = source.top().max(target.top());
        assert_eq!(maps.len(), top + 1, "one component per degree 0..=max top");
        for (i, m) in maps.iter().enumerate() {
            assert_eq!(m.rows(), target.rank(i), "component {i} has wrong row count");
            assert_eq!(m.cols(), source.rank(i), "component {i} has wrong column count");
        }
        ChainMap { source: source.clone(), target: target.clone(), maps }
    }

    pub fn identity(c: &FreeComplex) -> ChainMap {
        let maps = (0..=c.top())
            .map(|i| PolyMatrix::identity(&c.ring, c.rank(i)))
            .collect();
        ChainMap::new(c, c, maps)
    }

    pub fn source(&self) -> &FreeComplex {
        &self.source
    }

    pub fn target(&self) -> &FreeComplex {
        &self.target
    }

    /// The degree-i component (zero matrix outside the stored range).
    pub fn map(&self, i: usize) -> PolyMatrix {
        self.maps
            .get(i)
            .cloned()
            .unwrap_or_else(|| PolyMatrix::zero(&self.source.ring, self.target.rank(i), self.source.rank(i)))
    }

    /// `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &ChainMap) -> ChainMap {
        assert!(self.target == other.source, "composition target/source mismatch");
        let top = self.source.top().max(other.target.top());
        let maps = (0..=top).map(|i| &other.map(i) * &self.map(i)).collect();
        ChainMap::new(&self.source, &other.target, maps)
    }

    /// Does the map commute with the differentials?
    pub fn is_chain_map(&self) -> Result<(), String> {
        let top = self.source.top().max(self.target.top());
        for i in 1..=top {
            let left = if i <= self.source.top() {
                &self.map(i - 1) * self.source.differential(i)
            } else {
                PolyMatrix::zero(&self.source.ring, self.target.rank(i - 1), self.source.rank(i))
            };
            let right = if i <= self.target.top() {
                self.target.differential(i) * &self.map(i)
            } else {
                PolyMatrix::zero(&self.source.ring, self.target.rank(i - 1), self.source.rank(i))
            };
            if left != right {
                return Err(format!("square at degree {i} does not commute"));
            }
        }
        Ok(())
    }

    /// Is this an isomorphism of complexes: a chain map, square in every
    /// degree, with each determinant a unit of the coefficient domain?
    pub fn is_complex_isomorphism(&self) -> Result<(), String> {
        self.is_chain_map()?;
        let top = self.source.top().max(self.target.top());
        for i in 0..=top {
            if self.source.rank(i) != self.target.rank(i) {
                return Err(format!(
                    "rank mismatch in degree {i}: {} vs {}",
                    self.source.rank(i),
                    self.target.rank(i)
                ));
            }
            let det = self.map(i).det();
            if !det.is_unit_constant() {
                return Err(format!(
                    "determinant in degree {i} is {det}, not a unit over {}",
                    self.source.ring.domain().label()
                ));
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ChainMap {} → {}", self.source.name, self.target.name)
    }
}

/// The mapping cone of `f : K → B`: Cone_i = B_i ⊕ K_{i−1} with differential
/// [[d_B, f], [0, −d_K]].
pub fn mapping_cone(f: &ChainMap, name: &str) -> FreeComplex {
    let k = f.source();
    let b = f.target();
    let ring = b.ring.clone();
    let top = b.top().max(k.top() + 1);
    let mut modules = Vec::new();
    for i in 0..=top {
        let bm = if i <= b.top() { b.modules[i].clone() } else { ModuleData::zero() };
        let km = if i >= 1 && i - 1 <= k.top() {
            k.modules[i - 1].clone()
        } else {
            ModuleData::zero()
        };
        let mut labels = bm.labels.clone();
        labels.extend(km.labels.iter().map(|l| format!("s{l}")));
        let twists = match (&bm.twists, &km.twists) {
            (Some(tb), Some(tk)) => {
                let mut t = tb.clone();
                t.extend(tk.iter().copied());
                Some(t)
            }
            _ => None,
        };
        modules.push(ModuleData { rank: bm.rank + km.rank, labels, twists });
    }
    let mut diffs = Vec::new();
    for i in 1..=top {
        let rows = modules[i - 1].rank;
        let cols = modules[i].rank;
        let mut d = PolyMatrix::zero(&ring, rows, cols);
        let b_rows = if i - 1 <= b.top() { b.rank(i - 1) } else { 0 };
        let b_cols = if i <= b.top() { b.rank(i) } else { 0 };
        // Top-left block: d_B.
        if i <= b.top() {
            let db = b.differential(i);
            for r in 0..db.rows() {
                for c in 0..db.cols() {
                    d.set(r, c, db.get(r, c).clone());
                }
            }
        }
        // Top-right block: f in degree i−1.
        if i >= 1 && i - 1 <= k.top() {
            let fm = f.map(i - 1);
            for r in 0..fm.rows() {
                for c in 0..fm.cols() {
                    d.set(r, b_cols + c, fm.get(r, c).clone());
                }
            }
        }
        // Bottom-right block: −d_K in degree i−1.
        if i >= 2 && i - 1 <= k.top() {
            let dk = k.differential(i - 1);
            for r in 0..dk.rows() {
                for c in 0..dk.cols() {
                    d.set(b_rows + r, b_cols + c, -dk.get(r, c));
                }
            }
        }
        diffs.push(d);
    }
    FreeComplex::new(&ring, name, modules, diffs)
}

/// The reduction produced by [`remove_split_summand`]: the reduced complex
/// together with the chain maps certifying the homotopy equivalence.
/// `project ∘ include` is the identity of the reduced complex exactly.
pub struct ReductionCertificate {
    pub reduced: FreeComplex,
    pub project: ChainMap,
    pub include: ChainMap,
    pub cancellations: usize,
}

/// Repeatedly cancel unit entries of the differentials (Gaussian elimination
/// of split summands).  The scan is deterministic: differentials from the top
/// down, entries row-major, first unit wins, then rescan.
pub fn remove_split_summand(complex: &FreeComplex) -> ReductionCertificate {
    let ring = complex.ring.clone();
    let mut current = complex.clone();
    let mut project = ChainMap::identity(complex);
    let mut include = ChainMap::identity(complex);
    let mut cancellations = 0usize;
    'outer: loop {
        for di in (1..=current.top()).rev() {
            let d = current.differential(di).clone();
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    if d.get(r, c).is_unit_constant() {
                        let (next, step_p, step_i) = cancel_one(&current, di, r, c);
                        project = project.then(&step_p);
                        include = step_i.then(&include);
                        current = next;
                        cancellations += 1;
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    let _ = ring;
    ReductionCertificate { reduced: current, project, include, cancellations }
}

/// Cancel the unit at row `r`, column `c` of d_{di} : C_{di} → C_{di−1}.
/// Returns the reduced complex plus the one-step projection and inclusion.
fn cancel_one(
    complex: &FreeComplex,
    di: usize,
    r: usize,
    c: usize,
) -> (FreeComplex, ChainMap, ChainMap) {
    let ring = complex.ring.clone();
    let d = complex.differential(di);
    let u = d
        .get(r, c)
        .as_constant()
        .expect("cancellation pivot must be a constant");
    let u_inv = ring.constant(BigRationalExt::recip(&u));

    let mut modules = complex.modules.clone();
    modules[di] = modules[di].drop_index(c);
    modules[di - 1] = modules[di - 1].drop_index(r);

    let mut diffs: Vec<PolyMatrix> = (1..=complex.top())
        .map(|i| complex.differential(i).clone())
        .collect();
    // d_{di}: remove the pivot row and column, then subtract γ·u⁻¹·β.
    {
        let stripped = d.drop_row(r).drop_col(c);
        let gamma = PolyMatrix::from_fn(&ring, d.rows() - 1, 1, |i, _| {
            let src = if i < r { i } else { i + 1 };
            d.get(src, c).clone()
        });
        let beta = PolyMatrix::from_fn(&ring, 1, d.cols() - 1, |_, j| {
            let src = if j < c { j } else { j + 1 };
            d.get(r, src).clone()
        });
        let correction = (&gamma * &beta).map_entries(|p| p * &u_inv);
        diffs[di - 1] = &stripped - &correction;
    }
    // d_{di+1}: the cancelled source basis vector disappears as a target row.
    if di < complex.top() {
        diffs[di] = complex.differential(di + 1).drop_row(c);
    }
    // d_{di−1}: the cancelled target basis vector disappears as a source column.
    if di >= 2 {
        diffs[di - 2] = complex.differential(di - 1).drop_col(r);
    }
    let reduced = FreeComplex::new(&ring, &complex.name, modules, diffs);

    // Projection: drop coordinate c in degree di; in degree di−1 send the
    // cancelled basis vector to −u⁻¹·γ and keep the others.
    let mut p_maps = Vec::new();
    for i in 0..=complex.top() {
        let m = if i == di {
            PolyMatrix::from_fn(&ring, reduced.rank(i), complex.rank(i), |row, col| {
                let src = if row < c { row } else { row + 1 };
                if col == src {
                    ring.one()
                } else {
                    ring.zero()
                }
            })
        } else if i == di - 1 {
            PolyMatrix::from_fn(&ring, reduced.rank(i), complex.rank(i), |row, col| {
                let src = if row < r { row } else { row + 1 };
                if col == r {
                    -&(d.get(src, c) * &u_inv)
                } else if col == src {
                    ring.one()
                } else {
                    ring.zero()
                }
            })
        } else {
            PolyMatrix::identity(&ring, complex.rank(i))
        };
        p_maps.push(m);
    }
    let project = ChainMap::new(complex, &reduced, p_maps);

    // Inclusion: in degree di send the surviving basis vector t to
    // e_t − u⁻¹·β_t·e_c; in degree di−1 include away from the cancelled row.
    let mut i_maps = Vec::new();
    for i in 0..=complex.top() {
        let m = if i == di {
            PolyMatrix::from_fn(&ring, complex.rank(i), reduced.rank(i), |row, col| {
                let tgt = if col < c { col } else { col + 1 };
                if row == c {
                    -&(d.get(r, tgt) * &u_inv)
                } else if row == tgt {
                    ring.one()
                } else {
                    ring.zero()
                }
            })
        } else if i == di - 1 {
            PolyMatrix::from_fn(&ring, complex.rank(i), reduced.rank(i), |row, col| {
                let tgt = if col < r { col } else { col + 1 };
                if row == tgt {
                    ring.one()
                } else {
                    ring.zero()
                }
            })
        } else {
            PolyMatrix::identity(&ring, complex.rank(i))
        };
        i_maps.push(m);
    }
    let include = ChainMap::new(&reduced, complex, i_maps);

    (reduced, project, include)
}

/// Local helper: exact reciprocal of a rational.
struct BigRationalExt;

impl BigRationalExt {
    fn recip(c: &num::rational::BigRational) -> num::rational::BigRational {
        assert!(!num::Zero::is_zero(c), "reciprocal of zero");
        num::rational::BigRational::one() / c.clone()
    }
}

// ---------------------------------------------------------------------------
// JSON form
// ---------------------------------------------------------------------------

/// Ring metadata in the interchange form.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct RingJson {
    pub domain: String,
    pub vars: Vec<String>,
    pub degrees: Vec<[i64; 2]>,
}

/// A complex in the interchange form.  `ranks`, `labels`, `twists`, and
/// `diffs` are listed from the top homological degree down to degree 0, the
/// order in which resolutions are displayed; `diffs[0]` is the top
/// differential.  Each matrix entry is a list of terms, leading term first.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ComplexJson {
    pub schema: String,
    pub name: String,
    pub ring: RingJson,
    pub ranks: Vec<usize>,
    pub labels: Vec<Vec<String>>,
    pub twists: Vec<Vec<[i64; 2]>>,
    pub diffs: Vec<Vec<Vec<Vec<crate::ring::TermJson>>>>,
}

/// Identifier of the interchange schema emitted by this crate.
pub const SCHEMA: &str = "resolv-251/1";

impl FreeComplex {
    pub fn to_json(&self) -> ComplexJson {
        let top = self.top();
        let ring = RingJson {
            domain: self.ring.domain().label().to_string(),
            vars: self.ring.var_names().to_vec(),
            degrees: self.ring.var_degrees().iter().map(|d| [d.0, d.1]).collect(),
        };
        let ranks = self.ranks_desc();
        let labels = (0..=top).map(|i| self.modules[top - i].labels.clone()).collect();
        let twists = (0..=top)
            .map(|i| {
                self.modules[top - i]
                    .twists
                    .as_ref()
                    .map(|t| t.iter().map(|d| [d.0, d.1]).collect())
                    .unwrap_or_default()
            })
            .collect();
        let diffs = (1..=top)
            .rev()
            .map(|i| {
                let d = self.differential(i);
                (0..d.rows())
                    .map(|r| (0..d.cols()).map(|c| d.get(r, c).to_terms_json()).collect())
                    .collect()
            })
            .collect();
        ComplexJson {
            schema: SCHEMA.to_string(),
            name: self.name.clone(),
            ring,
            ranks,
            labels,
            twists,
            diffs,
        }
    }

    /// Rebuild from the interchange form.
    ///
    /// # Panics
    /// Panics on malformed data (unknown domain, ragged shapes).
    pub fn from_json(json: &ComplexJson) -> FreeComplex {
        assert_eq!(json.schema, SCHEMA, "unsupported schema {}", json.schema);
        let domain = crate::ring::CoefficientDomain::from_label(&json.ring.domain)
            .unwrap_or_else(|| panic!("unknown domain {}", json.ring.domain));
        let vars: Vec<(&str, Bidegree)> = json
            .ring
            .vars
            .iter()
            .zip(&json.ring.degrees)
            .map(|(n, d)| (n.as_str(), Bidegree(d[0], d[1])))
            .collect();
        let ring = PolyRing::new(&vars, domain);
        let top = json.ranks.len() - 1;
        let modules: Vec<ModuleData> = (0..=top)
            .map(|i| {
                let j = top - i;
                ModuleData {
                    rank: json.ranks[j],
                    labels: json.labels[j].clone(),
                    twists: Some(json.twists[j].iter().map(|d| Bidegree(d[0], d[1])).collect()),
                }
            })
            .collect();
        let diffs: Vec<PolyMatrix> = (1..=top)
            .map(|i| {
                let rows_json = &json.diffs[top - i];
                PolyMatrix::from_rows(
                    &ring,
                    rows_json
                        .iter()
                        .map(|row| {
                            row.iter()
                                .map(|terms| Polynomial::from_terms_json(&ring, terms))
                                .collect()
                        })
                        .collect(),
                )
            })
            .collect();
        FreeComplex::new(&ring, &json.name, modules, diffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::CoefficientDomain;

    fn ring2() -> PolyRing {
        PolyRing::new(
            &[("x", Bidegree(1, 0)), ("y", Bidegree(1, 0))],
            CoefficientDomain::Integers,
        )
    }

    /// The length-two complex R(−2) → R(−1)² → R resolving R/(x, y).
    fn koszul_xy(ring: &PolyRing) -> FreeComplex {
        let (x, y) = (ring.var("x"), ring.var("y"));
        let d1 = PolyMatrix::from_rows(ring, vec![vec![x.clone(), y.clone()]]);
        let d2 = PolyMatrix::from_rows(ring, vec![vec![-&y], vec![x.clone()]]);
        FreeComplex::new(
            ring,
            "K(x,y)",
            vec![
                ModuleData::with_twists(&["1"], &[(0, 0)]),
                ModuleData::with_twists(&["e1", "e2"], &[(1, 0), (1, 0)]),
                ModuleData::with_twists(&["e1^e2"], &[(2, 0)]),
            ],
            vec![d1, d2],
        )
    }

    #[test]
    fn check_complex_accepts_koszul_and_rejects_mutations() {
        let ring = ring2();
        let k = koszul_xy(&ring);
        assert!(k.check_complex().is_ok());
        assert!(k.check_bigrading().is_ok());
        let mut broken = k.clone();
        let bad = PolyMatrix::from_rows(&ring, vec![vec![ring.var("y")], vec![ring.var("x")]]);
        broken.set_differential(2, bad);
        let err = broken.check_complex().unwrap_err();
        assert!(err.contains("d_1∘d_2"), "unexpected message: {err}");
        // A bigrading violation is caught even when d² still vanishes.
        let mut mixed = k.clone();
        let d2 = PolyMatrix::from_rows(
            &ring,
            vec![vec![-&ring.var("y").pow(2)], vec![&ring.var("x") * &ring.var("y")]],
        );
        mixed.set_differential(2, d2);
        assert!(mixed.check_complex().is_ok());
        assert!(mixed.check_bigrading().is_err());
    }

    #[test]
    fn dual_of_dual_is_isomorphic_to_the_original() {
        let ring = ring2();
        let k = koszul_xy(&ring);
        let dd = k.dual().dual();
        assert!(k.dual().check_complex().is_ok());
        assert_eq!(dd.ranks(), k.ranks());
        // Double dual negates differentials when top+1 is even; the ladder
        // (−1)^i is an isomorphism either way.
        let maps = (0..=k.top())
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                PolyMatrix::identity(&ring, k.rank(i)).scale_int(sign)
            })
            .collect();
        let ladder = ChainMap::new(&k, &dd, maps);
        assert!(ladder.is_complex_isomorphism().is_ok());
        // Twists come back unchanged.
        assert_eq!(dd.module(2).twists, k.module(2).twists);
    }

    #[test]
    fn dual_reverses_twists_and_indexing() {
        let ring = ring2();
        let k = koszul_xy(&ring);
        let d = k.dual();
        assert_eq!(d.rank(0), 1);
        assert_eq!(d.module(0).twists.as_ref().unwrap()[0], Bidegree(-2, 0));
        assert_eq!(d.module(2).labels, vec!["1*"]);
    }

    #[test]
    fn shift_moves_degrees_and_flips_signs() {
        let ring = ring2();
        let k = koszul_xy(&ring);
        let s = k.shift(1);
        assert!(s.check_complex().is_ok());
        assert_eq!(s.ranks(), vec![0, 1, 2, 1]);
        assert_eq!(s.differential(2), &k.differential(1).scale_int(-1));
        let t = k.shift(2);
        assert_eq!(t.differential(3), k.differential(1));
    }

    #[test]
    fn tensor_of_koszul_factors_is_the_koszul_complex() {
        let ring = ring2();
        let (x, y) = (ring.var("x"), ring.var("y"));
        let kx = FreeComplex::new(
            &ring,
            "K(x)",
            vec![
                ModuleData::with_twists(&["1"], &[(0, 0)]),
                ModuleData::with_twists(&["e"], &[(1, 0)]),
            ],
            vec![PolyMatrix::from_rows(&ring, vec![vec![x.clone()]])],
        );
        let ky = FreeComplex::new(
            &ring,
            "K(y)",
            vec![
                ModuleData::with_twists(&["1"], &[(0, 0)]),
                ModuleData::with_twists(&["f"], &[(1, 0)]),
            ],
            vec![PolyMatrix::from_rows(&ring, vec![vec![y.clone()]])],
        );
        let t = kx.tensor(&ky, "K(x)⊗K(y)");
        assert!(t.check_complex().is_ok());
        assert!(t.check_bigrading().is_ok());
        assert_eq!(t.ranks(), vec![1, 2, 1]);
        assert_eq!(t.module(1).labels, vec!["1⊗f", "e⊗1"]);
        // Blocks are ordered by ascending degree in the left factor, so
        // d₁ = [y  x] on (1⊗f, e⊗1) and d(e⊗f) = x·(1⊗f) − y·(e⊗1).
        assert_eq!(t.differential(1), &PolyMatrix::from_rows(&ring, vec![vec![y.clone(), x.clone()]]));
        assert_eq!(
            t.differential(2),
            &PolyMatrix::from_rows(&ring, vec![vec![x.clone()], vec![-&y]])
        );
        // Isomorphic to the hand-built model via the basis swap in degree 1.
        let k = koszul_xy(&ring);
        assert_eq!(t.ranks(), k.ranks());
        assert_eq!(t.module(1).twists, k.module(1).twists);
        let swap = PolyMatrix::from_rows(
            &ring,
            vec![vec![ring.zero(), ring.one()], vec![ring.one(), ring.zero()]],
        );
        let ladder = ChainMap::new(
            &t,
            &k,
            vec![PolyMatrix::identity(&ring, 1), swap, PolyMatrix::identity(&ring, 1)],
        );
        assert!(ladder.is_complex_isomorphism().is_ok());
        // Tensoring with a single rank-one module in degree 0 changes nothing.
        let unit = FreeComplex::new(
            &ring,
            "R",
            vec![ModuleData::with_twists(&["1"], &[(0, 0)])],
            vec![],
        );
        let same = k.tensor(&unit, "K⊗R");
        assert_eq!(same.ranks(), k.ranks());
        for i in 1..=k.top() {
            assert_eq!(same.differential(i), k.differential(i));
        }
    }

    #[test]
    fn cone_of_identity_reduces_to_nothing() {
        let ring = ring2();
        let k = koszul_xy(&ring);
        let cone = mapping_cone(&ChainMap::identity(&k), "cone(id)");
        assert!(cone.check_complex().is_ok());
        assert_eq!(cone.ranks(), vec![1, 3, 3, 1]);
        let red = remove_split_summand(&cone);
        assert!(red.reduced.ranks().iter().all(|&r| r == 0));
        assert_eq!(red.cancellations, 4);
        assert!(red.project.is_chain_map().is_ok());
        assert!(red.include.is_chain_map().is_ok());
    }

    #[test]
    fn cone_commutes_differentials_with_the_map() {
        // Cone of multiplication by x on K(y): d² = 0 comes down to the
        // square commuting, so this exercises the sign convention.
        let ring = ring2();
        let (x, y) = (ring.var("x"), ring.var("y"));
        let ky = FreeComplex::new(
            &ring,
            "K(y)",
            vec![ModuleData::new(&["1"]), ModuleData::new(&["f"])],
            vec![PolyMatrix::from_rows(&ring, vec![vec![y.clone()]])],
        );
        let mul_x = ChainMap::new(
            &ky,
            &ky,
            vec![
                PolyMatrix::from_rows(&ring, vec![vec![x.clone()]]),
                PolyMatrix::from_rows(&ring, vec![vec![x.clone()]]),
            ],
        );
        assert!(mul_x.is_chain_map().is_ok());
        let cone = mapping_cone(&mul_x, "cone(x)");
        assert!(cone.check_complex().is_ok());
        assert_eq!(cone.ranks(), vec![1, 2, 1]);
        // This cone is the Koszul complex on (y, x).
        assert_eq!(
            cone.differential(1),
            &PolyMatrix::from_rows(&ring, vec![vec![y.clone(), x.clone()]])
        );
    }

    #[test]
    fn split_summand_removal_certifies_its_reduction() {
        let ring = ring2();
        let (x, y) = (ring.var("x"), ring.var("y"));
        // d₁ = diag(1, x) plus an off-diagonal tail to exercise corrections.
        let d1 = PolyMatrix::from_rows(
            &ring,
            vec![vec![ring.one(), y.clone()], vec![x.clone(), &x * &y]],
        );
        let c = FreeComplex::new(
            &ring,
            "C",
            vec![ModuleData::new(&["a", "b"]), ModuleData::new(&["u", "v"])],
            vec![d1],
        );
        let red = remove_split_summand(&c);
        assert_eq!(red.cancellations, 1);
        assert_eq!(red.reduced.ranks(), vec![1, 1]);
        // Reduced differential: xy − x·1⁻¹·y = 0.
        assert!(red.reduced.differential(1).get(0, 0).is_zero());
        assert!(red.project.is_chain_map().is_ok());
        assert!(red.include.is_chain_map().is_ok());
        let round = red.include.then(&red.project);
        assert_eq!(round, ChainMap::identity(&red.reduced));
    }

    #[test]
    fn reduction_scans_from_the_top_differential() {
        let ring = ring2();
        let x = ring.var("x");
        // Units in both d₂ and d₁; the d₂ unit must be consumed first.
        let d2 = PolyMatrix::from_rows(&ring, vec![vec![ring.one()], vec![x.clone()]]);
        let d1 = PolyMatrix::from_rows(&ring, vec![vec![x.clone(), -&ring.one()]]);
        let c = FreeComplex::new(
            &ring,
            "C",
            vec![
                ModuleData::new(&["p"]),
                ModuleData::new(&["q", "r"]),
                ModuleData::new(&["s"]),
            ],
            vec![d1, d2],
        );
        assert!(c.check_complex().is_ok());
        let red = remove_split_summand(&c);
        assert_eq!(red.cancellations, 2);
        assert!(red.reduced.ranks().iter().all(|&r| r == 0));
        assert!(red.project.is_chain_map().is_ok());
        assert!(red.include.is_chain_map().is_ok());
    }

    #[test]
    fn chain_map_checks_catch_non_commuting_squares() {
        let ring = ring2();
        let k = koszul_xy(&ring);
        let id = ChainMap::identity(&k);
        assert!(id.is_chain_map().is_ok());
        assert!(id.is_complex_isomorphism().is_ok());
        let mut maps: Vec<PolyMatrix> =
            (0..=k.top()).map(|i| PolyMatrix::identity(&ring, k.rank(i))).collect();
        maps[1] = PolyMatrix::from_rows(
            &ring,
            vec![
                vec![ring.one(), ring.var("x")],
                vec![ring.zero(), ring.one()],
            ],
        );
        let skew = ChainMap::new(&k, &k, maps);
        assert!(skew.is_chain_map().is_err());
        // Scaling one degree by a non-unit breaks the isomorphism check only.
        let mut maps: Vec<PolyMatrix> =
            (0..=k.top()).map(|i| PolyMatrix::identity(&ring, k.rank(i))).collect();
        maps[2] = maps[2].scale_int(2);
        let double_top = ChainMap::new(&k, &k, maps);
        assert!(double_top.is_chain_map().is_err());
        let all_doubled = ChainMap::new(
            &k,
            &k,
            (0..=k.top())
                .map(|i| PolyMatrix::identity(&ring, k.rank(i)).scale_int(2))
                .collect(),
        );
        assert!(all_doubled.is_chain_map().is_ok());
        assert!(all_doubled.is_complex_isomorphism().is_err());
    }

    #[test]
    fn json_round_trip_preserves_the_complex() {
        let ring = ring2();
        let k = koszul_xy(&ring);
        let json = k.to_json();
        assert_eq!(json.schema, SCHEMA);
        assert_eq!(json.ranks, vec![1, 2, 1]);
        assert_eq!(json.labels[0], vec!["e1^e2"]);
        let text = serde_json::to_string_pretty(&json).unwrap();
        let parsed: ComplexJson = serde_json::from_str(&text).unwrap();
        let back = FreeComplex::from_json(&parsed);
        assert_eq!(back, k);
        // Serialization is byte-stable.
        let text2 = serde_json::to_string_pretty(&back.to_json()).unwrap();
        assert_eq!(text, text2);
    }
}
