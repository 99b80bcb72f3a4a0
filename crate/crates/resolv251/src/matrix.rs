//! Matrices of polynomials, plus exact rational linear algebra.
//!
//! [`PolyMatrix`] is a dense row-major matrix over one [`PolyRing`]; it is the
//! workhorse behind differentials and chain maps.  The module also provides
//! exact rank and linear-system solving over ℚ for scalar matrices, used by
//! the exactness evidence and the graded membership solver.

use crate::ring::{PolyRing, Polynomial, RingMap};
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense matrix of polynomials over a fixed ring.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    /// The zero matrix of the given shape.
    pub fn zero(ring: &PolyRing, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    /// The identity matrix.
    pub fn identity(ring: &PolyRing, n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Build from a row-major closure.
    pub fn from_fn<F>(ring: &PolyRing, rows: usize, cols: usize, mut f: F) -> PolyMatrix
    where
        F: FnMut(usize, usize) -> Polynomial,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                assert!(p.ring().same_ring(ring), "entry in wrong ring");
                entries.push(p);
            }
        }
        PolyMatrix { ring: ring.clone(), rows, cols, entries }
    }

    /// Build from rows of polynomials.
    ///
    /// # Panics
    /// Panics on ragged rows or entries from another ring.
    pub fn from_rows(ring: &PolyRing, rows: Vec<Vec<Polynomial>>) -> PolyMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            for p in row {
                assert!(p.ring().same_ring(ring), "entry in wrong ring");
                entries.push(p);
            }
        }
        PolyMatrix { ring: ring.clone(), rows: nrows, cols: ncols, entries }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        assert!(p.ring().same_ring(&self.ring), "entry in wrong ring");
        self.entries[i * self.cols + j] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map_entries<F>(&self, mut f: F) -> PolyMatrix
    where
        F: FnMut(&Polynomial) -> Polynomial,
    {
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    /// Apply a ring map entrywise, producing a matrix over the map's target.
    pub fn apply_map(&self, map: &RingMap) -> PolyMatrix {
        assert!(self.ring.same_ring(map.source()), "matrix ring differs from map source");
        PolyMatrix::from_fn(map.target(), self.rows, self.cols, |i, j| map.apply(self.get(i, j)))
    }

    pub fn scale_int(&self, n: i64) -> PolyMatrix {
        self.map_entries(|p| p.mul_int(n))
    }

    /// Delete one row.
    pub fn drop_row(&self, r: usize) -> PolyMatrix {
        assert!(r < self.rows);
        PolyMatrix::from_fn(&self.ring, self.rows - 1, self.cols, |i, j| {
            let src = if i < r { i } else { i + 1 };
            self.get(src, j).clone()
        })
    }

    /// Delete one column.
    pub fn drop_col(&self, c: usize) -> PolyMatrix {
        assert!(c < self.cols);
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols - 1, |i, j| {
            let src = if j < c { j } else { j + 1 };
            self.get(i, src).clone()
        })
    }

    /// The submatrix with the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Exact determinant by cofactor expansion, expanding along the row or
    /// column with the most zero entries.  Intended for the small matrices
    /// that appear as comparison ladders and minors.
    pub fn det(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return self.ring.one();
        }
        if n == 1 {
            return self.get(0, 0).clone();
        }
        if n == 2 {
            return &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0));
        }
        // Pick the line with the most zeros.
        let mut best_row = 0usize;
        let mut best_row_zeros = 0usize;
        for i in 0..n {
            let z = (0..n).filter(|&j| self.get(i, j).is_zero()).count();
            if z >= best_row_zeros {
                best_row_zeros = z;
                best_row = i;
            }
        }
        let mut best_col = 0usize;
        let mut best_col_zeros = 0usize;
        for j in 0..n {
            let z = (0..n).filter(|&i| self.get(i, j).is_zero()).count();
            if z >= best_col_zeros {
                best_col_zeros = z;
                best_col = j;
            }
        }
        let mut acc = self.ring.zero();
        if best_row_zeros >= best_col_zeros {
            let i = best_row;
            for j in 0..n {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let minor = self.drop_row(i).drop_col(j).det();
                let signed = if (i + j) % 2 == 0 { minor } else { -&minor };
                acc = &acc + &(e * &signed);
            }
        } else {
            let j = best_col;
            for i in 0..n {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let minor = self.drop_row(i).drop_col(j).det();
                let signed = if (i + j) % 2 == 0 { minor } else { -&minor };
                acc = &acc + &(e * &signed);
            }
        }
        acc
    }

    /// Exact evaluation of every entry at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).eval(point)).collect())
            .collect()
    }
}

fn check_same_ring(a: &PolyMatrix, b: &PolyMatrix) {
    assert!(a.ring.same_ring(&b.ring), "matrix ring mismatch");
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, other: &PolyMatrix) -> PolyMatrix {
        check_same_ring(self, other);
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        PolyMatrix::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let mut acc = self.ring.zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(k, j);
                if b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            acc
        })
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, other: &PolyMatrix) -> PolyMatrix {
        check_same_ring(self, other);
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch");
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        })
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, other: &PolyMatrix) -> PolyMatrix {
        self + &(-other)
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        self.map_entries(|p| -p)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| strings.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        for row in &strings {
            write!(f, "[")?;
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{s:>width$}", width = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} matrix over {:?}:", self.rows, self.cols, self.ring)?;
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Exact linear algebra over the rationals
// ---------------------------------------------------------------------------

/// Exact row reduction; returns the rank.  The input is consumed row by row.
pub fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = BigRational::one() / m[pivot_row][col].clone();
        for r in (pivot_row + 1)..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * &inv;
            for c in col..cols {
                let delta = m[pivot_row][c].clone() * &factor;
                m[r][c] -= delta;
            }
        }
        pivot_row += 1;
        rank += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

/// Solve `A·x = b` exactly over ℚ.  Returns one particular solution (free
/// variables set to zero), or `None` when the system is inconsistent.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "row count mismatch");
    let cols = if rows == 0 { 0 } else { a[0].len() };
    // Augmented matrix.
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols, "ragged system");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = BigRational::one() / m[pivot_row][col].clone();
        for c in col..=cols {
            m[pivot_row][c] = m[pivot_row][c].clone() * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let delta = m[pivot_row][c].clone() * &factor;
                    m[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    // Inconsistent when a zero row has nonzero right-hand side.
    for r in pivot_row..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &col) in pivot_cols.iter().enumerate() {
        x[col] = m[i][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Bidegree, CoefficientDomain};
    use crate::sampling::{random_polynomial, rng_from_seed, PolyProfile};
    use rand::Rng;

    fn ring() -> PolyRing {
        PolyRing::new(
            &[("x", Bidegree(1, 0)), ("y", Bidegree(1, 0)), ("z", Bidegree(0, 1))],
            CoefficientDomain::Rationals,
        )
    }

    #[test]
    fn matrix_product_matches_hand_example() {
        let r = ring();
        let (x, y) = (r.var("x"), r.var("y"));
        let a = PolyMatrix::from_rows(&r, vec![vec![x.clone(), r.one()], vec![r.zero(), y.clone()]]);
        let b = PolyMatrix::from_rows(&r, vec![vec![y.clone(), r.zero()], vec![x.clone(), r.one()]]);
        let ab = &a * &b;
        assert_eq!(*ab.get(0, 0), &(&x * &y) + &x);
        assert_eq!(*ab.get(0, 1), r.one());
        assert_eq!(*ab.get(1, 0), &x * &y);
        assert_eq!(*ab.get(1, 1), y);
    }

    #[test]
    fn product_is_associative_randomized() {
        let r = ring();
        let mut rng = rng_from_seed(11);
        let profile = PolyProfile { max_terms: 3, max_exp: 2, coeff_bound: 9 };
        for _ in 0..30 {
            let a = PolyMatrix::from_fn(&r, 2, 3, |_, _| random_polynomial(&r, &mut rng, &profile));
            let b = PolyMatrix::from_fn(&r, 3, 2, |_, _| random_polynomial(&r, &mut rng, &profile));
            let c = PolyMatrix::from_fn(&r, 2, 2, |_, _| random_polynomial(&r, &mut rng, &profile));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
        }
    }

    #[test]
    fn determinant_on_known_matrices() {
        let r = ring();
        let (x, y, z) = (r.var("x"), r.var("y"), r.var("z"));
        assert_eq!(PolyMatrix::identity(&r, 4).det(), r.one());
        // Vandermonde-flavored 3x3 with polynomial entries.
        let m = PolyMatrix::from_rows(
            &r,
            vec![
                vec![r.one(), x.clone(), x.pow(2)],
                vec![r.one(), y.clone(), y.pow(2)],
                vec![r.one(), z.clone(), z.pow(2)],
            ],
        );
        let expect = &(&(&y - &x) * &(&z - &x)) * &(&z - &y);
        assert_eq!(m.det(), expect);
    }

    #[test]
    fn determinant_is_multiplicative_randomized() {
        let r = ring();
        let mut rng = rng_from_seed(29);
        let profile = PolyProfile { max_terms: 2, max_exp: 1, coeff_bound: 5 };
        for _ in 0..20 {
            let a = PolyMatrix::from_fn(&r, 3, 3, |_, _| random_polynomial(&r, &mut rng, &profile));
            let b = PolyMatrix::from_fn(&r, 3, 3, |_, _| random_polynomial(&r, &mut rng, &profile));
            assert_eq!((&a * &b).det(), &a.det() * &b.det());
        }
    }

    #[test]
    fn rank_of_known_systems() {
        let id: Vec<Vec<BigRational>> =
            (0..3).map(|i| (0..3).map(|j| rat(i64::from(i == j))).collect()).collect();
        assert_eq!(rational_rank(id), 3);
        let dependent = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ];
        assert_eq!(rational_rank(dependent), 2);
        assert_eq!(rational_rank(vec![vec![rat(0); 4]; 2]), 0);
    }

    #[test]
    fn rank_agrees_with_product_bound_randomized() {
        let mut rng = rng_from_seed(7);
        for _ in 0..50 {
            let a: Vec<Vec<BigRational>> = (0..4)
                .map(|_| (0..2).map(|_| rat(rng.gen_range(-9..=9))).collect())
                .collect();
            let b: Vec<Vec<BigRational>> = (0..2)
                .map(|_| (0..4).map(|_| rat(rng.gen_range(-9..=9))).collect())
                .collect();
            // (4x2)·(2x4) has rank at most 2.
            let prod: Vec<Vec<BigRational>> = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            (0..2).map(|k| a[i][k].clone() * &b[k][j]).sum::<BigRational>()
                        })
                        .collect()
                })
                .collect();
            assert!(rational_rank(prod) <= 2);
        }
    }

    #[test]
    fn solver_finds_solutions_and_detects_inconsistency() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1.
        let a = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        let b = vec![rat(3), rat(1)];
        assert_eq!(solve_rational(&a, &b), Some(vec![rat(2), rat(1)]));
        // Inconsistent.
        let a = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        let b = vec![rat(1), rat(3)];
        assert_eq!(solve_rational(&a, &b), None);
        // Underdetermined: returned solution must satisfy the system.
        let a = vec![vec![rat(1), rat(2), rat(-1)]];
        let b = vec![rat(5)];
        let x = solve_rational(&a, &b).unwrap();
        let lhs = a[0].iter().zip(&x).map(|(c, v)| c * v).sum::<BigRational>();
        assert_eq!(lhs, rat(5));
    }

    #[test]
    fn solver_validates_random_consistent_systems() {
        let mut rng = rng_from_seed(91);
        for _ in 0..50 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let a: Vec<Vec<BigRational>> = (0..rows)
                .map(|_| (0..cols).map(|_| rat(rng.gen_range(-9..=9))).collect())
                .collect();
            let x0: Vec<BigRational> =
                (0..cols).map(|_| rat(rng.gen_range(-9..=9))).collect();
            let b: Vec<BigRational> = a
                .iter()
                .map(|row| row.iter().zip(&x0).map(|(c, v)| c * v).sum())
                .collect();
            let x = solve_rational(&a, &b).expect("consistent by construction");
            for (row, rhs) in a.iter().zip(&b) {
                let lhs: BigRational = row.iter().zip(&x).map(|(c, v)| c * v).sum();
                assert_eq!(&lhs, rhs);
            }
        }
    }
}
