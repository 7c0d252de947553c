use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense row-major matrix over `Z` with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from machine-integer rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Self { rows: r, cols: c, data }
    }

    /// Builds a `rows x cols` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Matrix product. Panics on a dimension mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += q * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j];
            if !s.is_zero() {
                let delta = s * q;
                self.data[target * self.cols + j] += delta;
            }
        }
    }

    /// col[target] += q * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + source];
            if !s.is_zero() {
                let delta = s * q;
                self.data[i * self.cols + target] += delta;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -core::mem::take(v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = &mut self.data[i * self.cols + j];
            *v = -core::mem::take(v);
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Result of [`smith_normal_form`]: `u * m * v == d`, with the inverses of
/// the unimodular factors kept alongside because kernel coordinates and
/// quotient representatives need them.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v_inv: IntegerMatrix,
}

impl SmithForm {
    /// Nonzero invariant factors `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form with transformation matrices.
///
/// Pivots on the nonzero entry of least absolute value in the trailing block,
/// ties broken by `(row, col)` order, so the factorization is reproducible.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (r, c) = (m.rows, m.cols);
    let mut sf = SmithForm {
        u: IntegerMatrix::identity(r),
        d: m.clone(),
        v: IntegerMatrix::identity(c),
        u_inv: IntegerMatrix::identity(r),
        v_inv: IntegerMatrix::identity(c),
    };
    reduce(&mut sf.d, &mut Some(Transforms {
        u: &mut sf.u,
        u_inv: &mut sf.u_inv,
        v: &mut sf.v,
        v_inv: &mut sf.v_inv,
    }));
    sf
}

/// Diagonal of the Smith form only (no transforms), in divisor-chain order,
/// including the zeros: `min(rows, cols)` entries.
pub fn smith_diagonal(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut d = m.clone();
    reduce(&mut d, &mut None);
    d.diagonal()
}

struct Transforms<'a> {
    u: &'a mut IntegerMatrix,
    u_inv: &'a mut IntegerMatrix,
    v: &'a mut IntegerMatrix,
    v_inv: &'a mut IntegerMatrix,
}

impl Transforms<'_> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// Records `row[target] += q * row[source]` applied to `d`.
    fn add_row(&mut self, target: usize, source: usize, q: &BigInt) {
        self.u.add_row_multiple(target, source, q);
        self.u_inv.add_col_multiple(source, target, &-q);
    }

    /// Records `col[target] += q * col[source]` applied to `d`.
    fn add_col(&mut self, target: usize, source: usize, q: &BigInt) {
        self.v.add_col_multiple(target, source, q);
        self.v_inv.add_row_multiple(source, target, &-q);
    }

    fn negate_row(&mut self, i: usize) {
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }
}

fn reduce(d: &mut IntegerMatrix, tr: &mut Option<Transforms<'_>>) {
    let (r, c) = (d.rows, d.cols);
    for t in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = min_pivot(d, t) else {
                return;
            };
            d.swap_rows(t, pi);
            d.swap_cols(t, pj);
            if let Some(tr) = tr.as_mut() {
                tr.swap_rows(t, pi);
                tr.swap_cols(t, pj);
            }
            let pivot = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..r {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                if let Some(tr) = tr.as_mut() {
                    tr.add_row(i, t, &q);
                }
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..c {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                if let Some(tr) = tr.as_mut() {
                    tr.add_col(j, t, &q);
                }
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let offending = (t + 1..r).find(|&i| {
                (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&pivot))
            });
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    if let Some(tr) = tr.as_mut() {
                        tr.add_row(t, i, &one);
                    }
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            if let Some(tr) = tr.as_mut() {
                tr.negate_row(t);
            }
        }
    }
}

fn min_pivot(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs = BigInt::zero();
    for i in t..d.rows {
        for j in t..d.cols {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.is_none() || a < best_abs {
                best_abs = a;
                best = Some((i, j));
                if best_abs.is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Row-style Hermite normal form of the lattice spanned by `generators`.
///
/// Rows are in echelon order with positive pivots; entries above a pivot lie
/// in `[0, pivot)`. Zero rows are dropped.
pub fn hermite_rows(generators: &[Vec<BigInt>], width: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = generators
        .iter()
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    for g in &rows {
        assert_eq!(g.len(), width, "generator width mismatch");
    }
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for col in 0..width {
        // gcd-combine every remaining row into one pivot row for this column
        let mut pivot: Option<Vec<BigInt>> = None;
        let mut rest = Vec::with_capacity(rows.len());
        for row in rows.drain(..) {
            if row[col].is_zero() {
                rest.push(row);
                continue;
            }
            match pivot.take() {
                None => pivot = Some(row),
                Some(p) => {
                    let (a, b) = (&p[col], &row[col]);
                    let e = a.extended_gcd(b);
                    let (ag, bg) = (a / &e.gcd, b / &e.gcd);
                    let new_p: Vec<BigInt> =
                        p.iter().zip(&row).map(|(x, y)| &e.x * x + &e.y * y).collect();
                    let other: Vec<BigInt> =
                        p.iter().zip(&row).map(|(x, y)| &ag * y - &bg * x).collect();
                    if other.iter().any(|x| !x.is_zero()) {
                        rest.push(other);
                    }
                    pivot = Some(new_p);
                }
            }
        }
        rows = rest;
        if let Some(mut p) = pivot {
            if p[col].is_negative() {
                p.iter_mut().for_each(|x| *x = -core::mem::take(x));
            }
            for prev in out.iter_mut() {
                let q = prev[col].div_floor(&p[col]);
                if !q.is_zero() {
                    prev.iter_mut().zip(&p).for_each(|(x, y)| *x -= &q * y);
                }
            }
            out.push(p);
        }
    }
    out
}

/// Canonical representative of `v` modulo the lattice whose Hermite rows are
/// given: each pivot coordinate is brought into `[0, pivot)`.
pub fn hermite_reduce(hermite: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    let mut v = v.to_vec();
    for row in hermite {
        let Some(col) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let q = v[col].div_floor(&row[col]);
        if !q.is_zero() {
            v.iter_mut().zip(row).for_each(|(x, y)| *x -= &q * y);
        }
    }
    v
}

/// Basis of the integer kernel `{x : m x = 0}` read off the Smith form:
/// columns of `v` past the rank.
pub fn integer_kernel(sf: &SmithForm) -> Vec<Vec<BigInt>> {
    let rank = sf.rank();
    (rank..sf.v.cols()).map(|j| sf.v.column(j)).collect()
}

pub(crate) fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("cochain value exceeds 64 bits")
}
