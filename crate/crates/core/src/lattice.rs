//! Exact lattice vectors and integer matrices.
//!
//! Everything is built on `num::BigInt` / `num::BigRational`; operations never
//! overflow and never round. Matrices are small (ambient dimension is 4 or
//! less in practice), so the algorithms favor clarity over asymptotics:
//! Hermite and Smith forms use classical gcd elimination, determinants use
//! cofactor expansion.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::{Error, Result};

/// Exact integer scalar used throughout the crate.
pub type Int = BigInt;
/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// A point of the ambient lattice `Z^n` (or a covector of the dual lattice;
/// the crate keeps track of which side a vector lives on by usage, not type).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    coords: Vec<Int>,
}

impl LatticeVector {
    pub fn new(coords: Vec<Int>) -> Self {
        assert!(!coords.is_empty(), "lattice vectors have dimension >= 1");
        Self { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![Int::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Int {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Self) -> Int {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dimensions");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Pairing against a rational covector.
    pub fn dot_rat(&self, covector: &[Rat]) -> Rat {
        assert_eq!(self.dim(), covector.len());
        self.coords
            .iter()
            .zip(covector)
            .map(|(a, b)| Rat::from_integer(a.clone()) * b)
            .sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &Int) -> Self {
        Self::new(self.coords.iter().map(|a| a * k).collect())
    }

    /// Greatest common divisor of the coordinates (non-negative; zero only
    /// for the zero vector).
    pub fn content(&self) -> Int {
        self.coords
            .iter()
            .fold(Int::zero(), |acc, c| acc.gcd(c))
    }

    /// The gcd of the coordinates is 1. The zero vector is never primitive.
    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divides out the coordinate gcd, keeping the direction.
    ///
    /// Errors on the zero vector, which has no direction to keep.
    pub fn primitive_part(&self) -> Result<Self> {
        let g = self.content();
        if g.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Self::new(self.coords.iter().map(|c| c / &g).collect()))
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticeMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl LatticeMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Int>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        Self::from_fn(r, c, |i, j| int(rows[i][j]))
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Int::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Int::one() } else { Int::zero() })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[LatticeVector]) -> Self {
        assert!(!columns.is_empty());
        let rows = columns[0].dim();
        Self::from_fn(rows, columns.len(), |i, j| columns[j].coord(i).clone())
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_rows_vec(rows: &[LatticeVector]) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].dim();
        Self::from_fn(rows.len(), cols, |i, j| rows[i].coord(j).clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Int {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Int) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> LatticeVector {
        LatticeVector::new((0..self.rows).map(|r| self.at(r, c).clone()).collect())
    }

    pub fn row(&self, r: usize) -> LatticeVector {
        LatticeVector::new((0..self.cols).map(|c| self.at(r, c).clone()).collect())
    }

    pub fn columns(&self) -> Vec<LatticeVector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.at(i, k) * other.at(k, j)).sum()
        })
    }

    pub fn mul_vector(&self, v: &LatticeVector) -> LatticeVector {
        assert_eq!(self.cols, v.dim());
        LatticeVector::new(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|k| self.at(i, k) * v.coord(k)).sum())
                .collect(),
        )
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.at(r, c).clone();
            self.set(r, c, v);
        }
    }

    /// col_j -= q * col_src
    fn submul_col(&mut self, j: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.at(r, j) - q * self.at(r, src);
            self.set(r, j, v);
        }
    }

    /// Determinant by cofactor expansion; matrices here are at most 5x5.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        match n {
            0 => Int::one(),
            1 => self.at(0, 0).clone(),
            2 => self.at(0, 0) * self.at(1, 1) - self.at(0, 1) * self.at(1, 0),
            _ => {
                let mut acc = Int::zero();
                for j in 0..n {
                    if self.at(0, j).is_zero() {
                        continue;
                    }
                    let minor = Self::from_fn(n - 1, n - 1, |r, c| {
                        self.at(r + 1, if c < j { c } else { c + 1 }).clone()
                    });
                    let term = self.at(0, j) * minor.det();
                    if j % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc
            }
        }
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut rank = 0;
        let mut col = 0;
        while rank < rows && col < cols {
            // find a pivot in this column at or below `rank`
            let pivot = (rank..rows).find(|&r| !m.at(r, col).is_zero());
            let Some(p) = pivot else {
                col += 1;
                continue;
            };
            for c in 0..cols {
                let tmp = m.at(rank, c).clone();
                m.set(rank, c, m.at(p, c).clone());
                m.set(p, c, tmp);
            }
            for r in rank + 1..rows {
                if m.at(r, col).is_zero() {
                    continue;
                }
                // row_r <- pivot * row_r - entry * row_rank (kills column `col`)
                let factor = m.at(r, col).clone();
                let pivot_val = m.at(rank, col).clone();
                for c in 0..cols {
                    let v = &pivot_val * m.at(r, c) - &factor * m.at(rank, c);
                    m.set(r, c, v);
                }
            }
            rank += 1;
            col += 1;
        }
        rank
    }

    /// Column-style Hermite normal form.
    ///
    /// Returns `(H, U)` with `U` unimodular and `H = self * U`. The convention:
    /// `H` is in column echelon form with pivots moving down and right, each
    /// pivot is positive, and in a pivot's row every entry to the left of the
    /// pivot lies in `[0, pivot)`. This fixes `H` uniquely.
    pub fn hermite_normal_form(&self) -> (Self, Self) {
        let mut h = self.clone();
        let mut u = Self::identity(self.cols);
        let mut pc = 0usize; // next pivot column
        for row in 0..self.rows {
            if pc == self.cols {
                break;
            }
            // gcd-eliminate entries of this row in columns >= pc
            loop {
                let mut best: Option<usize> = None;
                for j in pc..self.cols {
                    if h.at(row, j).is_zero() {
                        continue;
                    }
                    best = match best {
                        None => Some(j),
                        Some(b) if h.at(row, j).abs() < h.at(row, b).abs() => Some(j),
                        keep => keep,
                    };
                }
                let Some(b) = best else { break };
                h.swap_cols(pc, b);
                u.swap_cols(pc, b);
                let mut done = true;
                for j in pc + 1..self.cols {
                    if h.at(row, j).is_zero() {
                        continue;
                    }
                    let q = div_round(h.at(row, j), h.at(row, pc));
                    h.submul_col(j, pc, &q);
                    u.submul_col(j, pc, &q);
                    if !h.at(row, j).is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if h.at(row, pc).is_zero() {
                continue; // no pivot in this row
            }
            if h.at(row, pc).is_negative() {
                h.negate_col(pc);
                u.negate_col(pc);
            }
            // reduce entries left of the pivot into [0, pivot)
            let pivot = h.at(row, pc).clone();
            for j in 0..pc {
                let q = h.at(row, j).div_floor(&pivot);
                h.submul_col(j, pc, &q);
                u.submul_col(j, pc, &q);
            }
            pc += 1;
        }
        (h, u)
    }

    /// Row-style Hermite normal form: `(H, U)` with `H = U * self`, canonical
    /// under left multiplication by `GL(n, Z)`.
    pub fn row_hermite_normal_form(&self) -> (Self, Self) {
        let (h, u) = self.transpose().hermite_normal_form();
        (h.transpose(), u.transpose())
    }

    /// Diagonal of the Smith normal form: `d_1 | d_2 | ... | d_r`, all
    /// positive, where `r` is the rank.
    pub fn smith_diagonal(&self) -> Vec<Int> {
        let mut m = self.clone();
        let rows = m.rows;
        let cols = m.cols;
        let mut diag = Vec::new();
        let mut top = 0usize;
        'outer: while top < rows && top < cols {
            // find any nonzero entry in the submatrix at (top.., top..)
            let mut found = None;
            'scan: for r in top..rows {
                for c in top..cols {
                    if !m.at(r, c).is_zero() {
                        found = Some((r, c));
                        break 'scan;
                    }
                }
            }
            let Some((r0, c0)) = found else { break 'outer };
            // bring it to (top, top)
            for c in 0..cols {
                let tmp = m.at(top, c).clone();
                m.set(top, c, m.at(r0, c).clone());
                m.set(r0, c, tmp);
            }
            m.swap_cols(top, c0);
            // clear row and column by gcd steps until stable
            loop {
                let mut changed = false;
                for r in top + 1..rows {
                    if m.at(r, top).is_zero() {
                        continue;
                    }
                    if m.at(r, top).abs() < m.at(top, top).abs() {
                        for c in 0..cols {
                            let tmp = m.at(top, c).clone();
                            m.set(top, c, m.at(r, c).clone());
                            m.set(r, c, tmp);
                        }
                        changed = true;
                        continue;
                    }
                    let q = div_round(m.at(r, top), m.at(top, top));
                    for c in 0..cols {
                        let v = m.at(r, c) - &q * m.at(top, c);
                        m.set(r, c, v);
                    }
                    if !m.at(r, top).is_zero() {
                        changed = true;
                    }
                }
                for c in top + 1..cols {
                    if m.at(top, c).is_zero() {
                        continue;
                    }
                    if m.at(top, c).abs() < m.at(top, top).abs() {
                        m.swap_cols(top, c);
                        changed = true;
                        continue;
                    }
                    let q = div_round(m.at(top, c), m.at(top, top));
                    m.submul_col(c, top, &q);
                    if !m.at(top, c).is_zero() {
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
            // enforce divisibility: pivot must divide the rest of the block
            for r in top + 1..rows {
                for c in top + 1..cols {
                    if !(m.at(r, c) % m.at(top, top)).is_zero() {
                        // add row r to row top and restart the elimination
                        for cc in 0..cols {
                            let v = m.at(top, cc) + m.at(r, cc);
                            m.set(top, cc, v);
                        }
                        continue 'outer;
                    }
                }
            }
            diag.push(m.at(top, top).abs());
            top += 1;
        }
        diag
    }

    /// Inverse of a unimodular matrix (|det| = 1), via the adjugate.
    pub fn unimodular_inverse(&self) -> Result<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let d = self.det();
        if !d.abs().is_one() {
            return Err(Error::Internal(format!(
                "unimodular_inverse of matrix with det {d}"
            )));
        }
        let adj = Self::from_fn(n, n, |i, j| {
            // cofactor C_ji
            let minor = Self::from_fn(n - 1, n - 1, |r, c| {
                self.at(if r < j { r } else { r + 1 }, if c < i { c } else { c + 1 })
                    .clone()
            });
            let m = minor.det();
            if (i + j) % 2 == 0 {
                m
            } else {
                -m
            }
        });
        if d.is_one() {
            Ok(adj)
        } else {
            Ok(Self::from_fn(n, n, |i, j| -adj.at(i, j)))
        }
    }

    /// Basis of the integer kernel lattice `{x : self * x = 0}`, as columns.
    /// The basis is saturated: it generates the full kernel sublattice.
    pub fn kernel_basis(&self) -> Vec<LatticeVector> {
        let (h, u) = self.hermite_normal_form();
        let r = h.rank();
        (r..self.cols).map(|c| u.column(c)).collect()
    }

    /// Solves `self * x = rhs` over the rationals. Returns `None` when the
    /// system is inconsistent; otherwise one solution (the system need not be
    /// square; free variables are set to zero).
    pub fn solve_rational(&self, rhs: &[Int]) -> Option<Vec<Rat>> {
        assert_eq!(rhs.len(), self.rows);
        let rows = self.rows;
        let cols = self.cols;
        let mut a: Vec<Vec<Rat>> = (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| Rat::from_integer(self.at(r, c).clone()))
                    .collect()
            })
            .collect();
        let mut b: Vec<Rat> = rhs.iter().map(|v| Rat::from_integer(v.clone())).collect();
        let mut pivot_cols = Vec::new();
        let mut row = 0usize;
        for col in 0..cols {
            let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            b.swap(row, p);
            let inv = a[row][col].clone();
            for c in col..cols {
                a[row][c] = &a[row][c] / &inv;
            }
            b[row] = &b[row] / &inv;
            for r in 0..rows {
                if r != row && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..cols {
                        a[r][c] = &a[r][c] - &f * &a[row][c];
                    }
                    b[r] = &b[r] - &f * &b[row];
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == rows {
                break;
            }
        }
        // consistency: zero rows must have zero rhs
        for r in row..rows {
            if !b[r].is_zero() {
                return None;
            }
        }
        let mut x = vec![Rat::zero(); cols];
        for (i, &c) in pivot_cols.iter().enumerate() {
            x[c] = b[i].clone();
        }
        Some(x)
    }
}

impl fmt::Debug for LatticeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Quotient rounded toward the nearest integer; keeps gcd elimination steps
/// shrinking fast.
fn div_round(a: &Int, b: &Int) -> Int {
    let (q, r) = a.div_rem(b);
    // adjust: we want |a - q*b| <= |b|/2
    let twice = &r * 2;
    if twice.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn v(coords: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(coords)
    }

    /// Random unimodular matrix from products of elementary operations.
    fn random_unimodular(n: usize, rng: &mut impl Rng, steps: usize) -> LatticeMatrix {
        let mut m = LatticeMatrix::identity(n);
        for _ in 0..steps {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            while j == i {
                j = rng.gen_range(0..n);
            }
            let k = int(rng.gen_range(-3..=3i64));
            // row_i += k * row_j
            for c in 0..n {
                let val = m.at(i, c) + &k * m.at(j, c);
                m.set(i, c, val);
            }
        }
        m
    }

    #[test]
    fn primitive_part_divides_by_gcd() {
        assert_eq!(v(&[2, -4]).primitive_part().unwrap(), v(&[1, -2]));
        assert_eq!(v(&[1, 0, 0]).primitive_part().unwrap(), v(&[1, 0, 0]));
        assert_eq!(v(&[-6, 9, 15]).primitive_part().unwrap(), v(&[-2, 3, 5]));
    }

    #[test]
    fn primitive_part_of_zero_fails() {
        assert_eq!(v(&[0, 0]).primitive_part(), Err(Error::ZeroVector));
        assert!(!v(&[0, 0, 0]).is_primitive());
    }

    #[test]
    fn primitive_part_is_idempotent_and_scale_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let dim = rng.gen_range(1..=4);
            let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(-20..=20)).collect();
            let w = v(&coords);
            if w.is_zero() {
                continue;
            }
            let p = w.primitive_part().unwrap();
            assert!(p.is_primitive());
            assert_eq!(p.primitive_part().unwrap(), p);
            for k in 1..=4i64 {
                assert_eq!(w.scale(&int(k)).primitive_part().unwrap(), p);
            }
        }
    }

    #[test]
    fn hnf_of_identity_is_identity() {
        let id = LatticeMatrix::identity(2);
        let (h, u) = id.hermite_normal_form();
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_preserves_determinant_up_to_sign() {
        let m = LatticeMatrix::from_i64_rows(&[&[2, 1], &[0, 1]]);
        let (h, u) = m.hermite_normal_form();
        assert_eq!(h.det().abs(), int(2));
        assert_eq!(u.det().abs(), int(1));
        assert_eq!(m.mul(&u), h);
    }

    #[test]
    fn hnf_of_random_unimodular_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let u = random_unimodular(3, &mut rng, 12);
            assert!(u.det().abs().is_one());
            let (h, w) = u.hermite_normal_form();
            assert_eq!(h, LatticeMatrix::identity(3), "HNF of {u:?}");
            // brute-force check of the factorization
            assert_eq!(u.mul(&w), h);
        }
    }

    #[test]
    fn hnf_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=5);
            let m = LatticeMatrix::from_fn(rows, cols, |_, _| int(rng.gen_range(-9..=9)));
            let (h, u) = m.hermite_normal_form();
            assert_eq!(m.mul(&u), h);
            assert!(u.det().abs().is_one());
            let (h2, _) = h.hermite_normal_form();
            assert_eq!(h2, h, "HNF not idempotent on {m:?}");
        }
    }

    #[test]
    fn row_hnf_is_left_action_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let m = LatticeMatrix::from_fn(2, 4, |_, _| int(rng.gen_range(-9..=9)));
            let g = random_unimodular(2, &mut rng, 10);
            let (h1, _) = m.row_hermite_normal_form();
            let (h2, _) = g.mul(&m).row_hermite_normal_form();
            assert_eq!(h1, h2);
        }
    }

    #[test]
    fn smith_diagonal_divides_successively() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..100 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            let m = LatticeMatrix::from_fn(rows, cols, |_, _| int(rng.gen_range(-9..=9)));
            let d = m.smith_diagonal();
            assert_eq!(d.len(), m.rank());
            for w in d.windows(2) {
                assert!((&w[1] % &w[0]).is_zero(), "{:?} from {m:?}", d);
            }
            if rows == cols && d.len() == rows {
                let prod: Int = d.iter().product();
                assert_eq!(prod, m.det().abs());
            }
        }
    }

    #[test]
    fn kernel_basis_spans_kernel() {
        let m = LatticeMatrix::from_i64_rows(&[&[1, 2, 3]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(m.mul_vector(b).is_zero());
        }
    }

    #[test]
    fn solve_rational_finds_exact_solutions() {
        let m = LatticeMatrix::from_i64_rows(&[&[2, 0], &[0, 4]]);
        let x = m.solve_rational(&[int(1), int(1)]).unwrap();
        assert_eq!(x[0], Rat::new(int(1), int(2)));
        assert_eq!(x[1], Rat::new(int(1), int(4)));
        // inconsistent system
        let m = LatticeMatrix::from_i64_rows(&[&[1, 1], &[2, 2]]);
        assert!(m.solve_rational(&[int(1), int(3)]).is_none());
    }

    #[test]
    fn unimodular_inverse_roundtrips() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let n = rng.gen_range(1..=4);
            let u = random_unimodular(n, &mut rng, 10);
            let inv = u.unimodular_inverse().unwrap();
            assert_eq!(u.mul(&inv), LatticeMatrix::identity(n));
        }
    }
}
