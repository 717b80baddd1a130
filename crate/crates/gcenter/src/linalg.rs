//! Exact linear algebra over a fixed cyclotomic field.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::scalars::{Cyclotomic, Rational};

/// Sparse rows of nonzero entries, sorted by column.
#[derive(Clone)]
pub struct Matrix {
    order: u32,
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Cyclotomic)>>,
    zero: Cyclotomic,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Matrix {}

impl std::hash::Hash for Matrix {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.rows.hash(h);
        self.cols.hash(h);
        self.data.hash(h);
    }
}

fn merge_rows(
    a: &[(usize, Cyclotomic)],
    b: &[(usize, Cyclotomic)],
    f: impl Fn(&Cyclotomic) -> Cyclotomic,
) -> Vec<(usize, Cyclotomic)> {
    // a + f(b)
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = f(&b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &f(&b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Matrix {
    pub fn zeros(order: u32, rows: usize, cols: usize) -> Self {
        Matrix { order, rows, cols, data: vec![Vec::new(); rows], zero: Cyclotomic::zero(order) }
    }

    pub fn identity(order: u32, n: usize) -> Self {
        Self::scalar(order, n, &Cyclotomic::one(order))
    }

    pub fn scalar(order: u32, n: usize, c: &Cyclotomic) -> Self {
        let mut m = Self::zeros(order, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(order: u32, rows: Vec<Vec<Cyclotomic>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(order, r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            m.data[i] = row.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        }
        m
    }

    pub fn from_ints(order: u32, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            order,
            rows.iter().map(|r| r.iter().map(|&v| Cyclotomic::from_int(order, v)).collect()).collect(),
        )
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        assert!(i < self.rows && j < self.cols, "index out of range");
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(p) => &self.data[i][p].1,
            Err(_) => &self.zero,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(p) => {
                if v.is_zero() {
                    row.remove(p);
                } else {
                    row[p].1 = v;
                }
            }
            Err(p) => {
                if !v.is_zero() {
                    row.insert(p, (j, v));
                }
            }
        }
    }

    /// Nonzero entries of row `i` as `(column, value)`.
    pub fn row_entries(&self, i: usize) -> &[(usize, Cyclotomic)] {
        &self.data[i]
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Cyclotomic> {
        let mut out = vec![self.zero.clone(); self.rows * self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out[i * self.cols + j] = v.clone();
            }
        }
        out
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.data.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.order, self.rows, rhs.cols);
        let mut acc: Vec<Option<Cyclotomic>> = vec![None; rhs.cols];
        let mut touched = Vec::new();
        for i in 0..self.rows {
            for (k, a) in &self.data[i] {
                for (j, b) in &rhs.data[*k] {
                    let p = a * b;
                    match &mut acc[*j] {
                        Some(x) => *x = &*x + &p,
                        slot => {
                            *slot = Some(p);
                            touched.push(*j);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut row = Vec::with_capacity(touched.len());
            for &j in &touched {
                let v = acc[j].take().expect("touched");
                if !v.is_zero() {
                    row.push((j, v));
                }
            }
            touched.clear();
            out.data[i] = row;
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_same(rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| merge_rows(a, b, |x| x.clone())).collect();
        Ok(Matrix { data, ..self.clone_shape() })
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_same(rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| merge_rows(a, b, |x| -x.clone())).collect();
        Ok(Matrix { data, ..self.clone_shape() })
    }

    fn clone_shape(&self) -> Matrix {
        Matrix::zeros(self.order, self.rows, self.cols)
    }

    fn check_same(&self, rhs: &Matrix) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn scale(&self, c: &Cyclotomic) -> Matrix {
        if c.is_zero() {
            return self.clone_shape();
        }
        let data = self.data.iter().map(|r| r.iter().map(|(j, a)| (*j, a * c)).collect()).collect();
        Matrix { data, ..self.clone_shape() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.order, self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out.data[*j].push((i, v.clone()));
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut t = Cyclotomic::zero(self.order);
        for i in 0..self.rows.min(self.cols) {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.order, rows.len(), cols.len());
        let mut pos: Vec<Vec<usize>> = vec![Vec::new(); self.cols];
        for (b, &j) in cols.iter().enumerate() {
            pos[j].push(b);
        }
        for (a, &i) in rows.iter().enumerate() {
            let mut row = Vec::new();
            for (j, v) in &self.data[i] {
                for &b in &pos[*j] {
                    row.push((b, v.clone()));
                }
            }
            row.sort_by_key(|e| e.0);
            out.data[a] = row;
        }
        out
    }

    /// Column vector from a slice.
    pub fn column(order: u32, v: &[Cyclotomic]) -> Matrix {
        Matrix::from_rows(order, v.iter().map(|x| vec![x.clone()]).collect())
    }

    pub fn col(&self, j: usize) -> Vec<Cyclotomic> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn hstack(order: u32, rows: usize, parts: &[Matrix]) -> Matrix {
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(order, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            for i in 0..rows {
                out.data[i].extend(m.data[i].iter().map(|(j, v)| (off + j, v.clone())));
            }
            off += m.cols;
        }
        out
    }

    /// `row_i -= f·row_r`
    fn row_sub(&mut self, i: usize, r: usize, f: &Cyclotomic) {
        let new = merge_rows(&self.data[i], &self.data[r], |x| -(f * x));
        self.data[i] = new;
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.data.swap(p, r);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for e in m.data[r].iter_mut() {
                e.1 = &e.1 * &inv;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if !f.is_zero() {
                    m.row_sub(i, r, &f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let aug = Matrix::hstack(self.order, n, &[self.clone(), Matrix::identity(self.order, n)]);
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] >= n {
            return Err(Error::Dimension("singular matrix".into()));
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(r.submatrix(&rows, &cols))
    }

    /// Determinant by Gaussian elimination.
    pub fn determinant(&self) -> Result<Cyclotomic> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Cyclotomic::one(self.order);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Cyclotomic::zero(self.order));
            };
            if p != c {
                m.data.swap(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv()?;
            for i in c + 1..n {
                let f = m.get(i, c) * &inv;
                if !f.is_zero() {
                    m.row_sub(i, c, &f);
                }
            }
        }
        Ok(det)
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self).map(|s| &s == self).unwrap_or(false)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.mul(b)
}

pub fn mat_add(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.add(b)
}

/// Basis of the null space, one column per basis vector.
pub fn mat_kernel(m: &Matrix) -> Matrix {
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Matrix::zeros(m.order, m.cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        out.set(f, k, Cyclotomic::one(m.order));
        for (row, &p) in pivots.iter().enumerate() {
            let v = r.get(row, f);
            if !v.is_zero() {
                out.set(p, k, -v);
            }
        }
    }
    out
}

/// Solve `a · x = b`; `None` when inconsistent. Returns one solution.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows != b.rows {
        return Err(Error::Dimension("solve: row mismatch".into()));
    }
    let aug = Matrix::hstack(a.order, a.rows, &[a.clone(), b.clone()]);
    let (r, pivots) = aug.rref();
    if pivots.iter().any(|&p| p >= a.cols) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(a.order, a.cols, b.cols);
    for (row, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x.set(p, j, r.get(row, a.cols + j).clone());
        }
    }
    Ok(Some(x))
}

#[derive(Clone, Debug)]
pub struct SplitResult {
    pub rank: usize,
    pub p: Matrix,
    pub q: Matrix,
}

/// Split an idempotent: `q·p = e` and `p·q = id`.
pub fn split_idempotent(e: &Matrix) -> Result<SplitResult> {
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let (r, pivots) = e.rref();
    let rank = pivots.len();
    let all_rows: Vec<usize> = (0..e.rows).collect();
    let q = e.submatrix(&all_rows, &pivots);
    let cols: Vec<usize> = (0..e.cols).collect();
    let p = r.submatrix(&(0..rank).collect::<Vec<_>>(), &cols);
    Ok(SplitResult { rank, p, q })
}

#[derive(Clone, Debug)]
pub struct AlgebraDecomposition {
    pub idempotents: Vec<Matrix>,
    pub block_dims: Vec<usize>,
    /// central idempotent index of each primitive idempotent
    pub block_of: Vec<usize>,
}

fn flatten(m: &Matrix) -> Vec<Cyclotomic> {
    m.to_dense()
}

/// Incrementally maintained echelon basis for span membership tests.
struct SpanBuilder {
    len: usize,
    rows: Vec<(usize, Vec<Cyclotomic>)>,
}

impl SpanBuilder {
    fn new(_order: u32, len: usize) -> Self {
        SpanBuilder { len, rows: Vec::new() }
    }

    fn reduce(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..self.len {
                if !row[j].is_zero() {
                    v[j] = &v[j] - &(&f * &row[j]);
                }
            }
        }
        v
    }

    /// Adds `v` if independent; returns whether it was added.
    fn insert(&mut self, v: &[Cyclotomic]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..self.len {
                if !v[j].is_zero() {
                    row[j] = &row[j] - &(&f * &v[j]);
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Basis of the unital algebra generated by `gens`.
pub fn algebra_span(order: u32, n: usize, gens: &[Matrix]) -> Vec<Matrix> {
    let mut sb = SpanBuilder::new(order, n * n);
    let mut basis = Vec::new();
    let id = Matrix::identity(order, n);
    if sb.insert(&flatten(&id)) {
        basis.push(id);
    }
    for g in gens {
        if sb.insert(&flatten(g)) {
            basis.push(g.clone());
        }
    }
    let mut i = 0;
    while i < basis.len() {
        let mut j = 0;
        while j <= i {
            for (a, b) in [(i, j), (j, i)] {
                let prod = basis[a].mul(&basis[b]).expect("square");
                if sb.insert(&flatten(&prod)) {
                    basis.push(prod);
                }
            }
            j += 1;
        }
        i += 1;
    }
    debug_assert_eq!(sb.dim(), basis.len());
    basis
}

/// Polynomials over the field, low degree first, monic where noted.
type KPoly = Vec<Cyclotomic>;

fn poly_eval(p: &KPoly, x: &Cyclotomic) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(x.order());
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn poly_deflate(p: &KPoly, root: &Cyclotomic) -> KPoly {
    // synthetic division by (t - root)
    let d = p.len() - 1;
    let mut q = vec![Cyclotomic::zero(root.order()); d];
    let mut carry = Cyclotomic::zero(root.order());
    for k in (0..d).rev() {
        carry = &(&carry * root) + &p[k + 1];
        q[k] = carry.clone();
    }
    q
}

/// Minimal polynomial (monic) of a square matrix.
pub fn minimal_polynomial(m: &Matrix) -> KPoly {
    let order = m.order;
    let n = m.rows;
    let mut powers = vec![Matrix::identity(order, n)];
    loop {
        let k = powers.len();
        let cols: Vec<Matrix> = powers.iter().map(|p| Matrix::column(order, &flatten(p))).collect();
        let a = Matrix::hstack(order, n * n, &cols);
        let ker = mat_kernel(&a);
        if ker.cols > 0 {
            let v = ker.col(0);
            let lead = v[k - 1].inv().expect("first dependency involves the top power");
            return v.iter().map(|c| c * &lead).collect();
        }
        let next = powers.last().unwrap().mul(m).expect("square");
        powers.push(next);
    }
}

fn rational_candidates() -> Vec<Rational> {
    let mut out = Vec::new();
    for b in [1i64, 2, 3, 4, 5, 6, 8, 9, 12, 16] {
        for a in 1i64..=48 {
            if num_integer::gcd(a, b) == 1 {
                out.push(BigRational::new(BigInt::from(a), BigInt::from(b)));
            }
        }
    }
    out.sort();
    out
}

fn complex_eval(p: &[(f64, f64)], x: (f64, f64)) -> (f64, f64) {
    let mut acc = (0.0, 0.0);
    for c in p.iter().rev() {
        acc = (acc.0 * x.0 - acc.1 * x.1 + c.0, acc.0 * x.1 + acc.1 * x.0 + c.1);
    }
    acc
}

/// All roots (with multiplicity) of a polynomial whose roots lie in the
/// candidate set {r·ζ_N^k}; `NonSplit` if some factor has no such root.
pub fn find_roots(p: &KPoly) -> Result<Vec<Cyclotomic>> {
    let order = p[0].order();
    let mut cur = p.clone();
    let mut roots = Vec::new();
    let cands = rational_candidates();
    while cur.len() > 1 {
        let d = cur.len() - 1;
        if d == 1 {
            let r = -(&(&cur[0] * &cur[1].inv()?));
            roots.push(r);
            break;
        }
        if cur[0].is_zero() {
            let z = Cyclotomic::zero(order);
            cur = poly_deflate(&cur, &z);
            roots.push(z);
            continue;
        }
        let lead = cur[d].inv()?;
        let monic: KPoly = cur.iter().map(|c| c * &lead).collect();
        let num: Vec<(f64, f64)> = monic.iter().map(|c| c.to_complex()).collect();
        let bound = 1.0 + num[..d].iter().map(|c| (c.0 * c.0 + c.1 * c.1).sqrt()).fold(0.0, f64::max);
        let scale: f64 = num[..d].iter().map(|c| (c.0 * c.0 + c.1 * c.1).sqrt()).fold(1.0, f64::max);
        let mut found = None;
        'search: for r in &cands {
            let rv = r.to_f64().unwrap_or(f64::INFINITY);
            if rv > bound + 1e-9 {
                break;
            }
            for k in 0..order as i64 {
                for sign in [1i64, -1] {
                    if sign < 0 && order % 2 == 0 {
                        continue;
                    }
                    let ang = 2.0 * std::f64::consts::PI * k as f64 / order as f64;
                    let x = (sign as f64 * rv * ang.cos(), sign as f64 * rv * ang.sin());
                    let v = complex_eval(&num, x);
                    if (v.0 * v.0 + v.1 * v.1).sqrt() > 1e-6 * scale * (1.0 + rv).powi(d as i32) {
                        continue;
                    }
                    let mut cand = Cyclotomic::root_of_unity(order, k).scale(r);
                    if sign < 0 {
                        cand = -cand;
                    }
                    if poly_eval(&monic, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                cur = poly_deflate(&monic, &r);
                roots.push(r);
            }
            None => {
                return Err(Error::NonSplit(format!(
                    "a factor of degree {d} has no root in Q(zeta_{order})"
                )))
            }
        }
    }
    Ok(roots)
}

fn distinct(roots: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let mut out: Vec<Cyclotomic> = Vec::new();
    for r in roots {
        if !out.contains(r) {
            out.push(r.clone());
        }
    }
    out
}

/// Projector onto the generalized eigenspace of `lambda` for `x` acting on
/// the image of the idempotent `f`, as an element of `f·A·f`.
fn eigen_projector(f: &Matrix, x: &Matrix, lambda: &Cyclotomic) -> Result<Matrix> {
    let order = f.order;
    let sp = split_idempotent(f)?;
    let t = sp.p.mul(x)?.mul(&sp.q)?;
    let r = sp.rank;
    let shifted = t.sub(&Matrix::scalar(order, r, lambda))?;
    let mut pw = Matrix::identity(order, r);
    for _ in 0..r {
        pw = pw.mul(&shifted)?;
    }
    let w = mat_kernel(&pw);
    let (_, piv) = pw.rref();
    let all: Vec<usize> = (0..r).collect();
    let u = pw.submatrix(&all, &piv);
    let basis = Matrix::hstack(order, r, &[w.clone(), u]);
    let binv = basis.inverse()?;
    let mut diag = Matrix::zeros(order, r, r);
    for i in 0..w.cols {
        diag.set(i, i, Cyclotomic::one(order));
    }
    let proj = basis.mul(&diag)?.mul(&binv)?;
    sp.q.mul(&proj)?.mul(&sp.p)
}

fn semisimple_check(basis: &[Matrix]) -> Result<()> {
    let n = basis.len();
    if n == 0 {
        return Ok(());
    }
    let order = basis[0].order;
    let mut gram = Matrix::zeros(order, n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, basis[i].mul(&basis[j])?.trace());
        }
    }
    if gram.rank() < n {
        return Err(Error::NonSemisimple(format!("trace form has rank {} < {}", gram.rank(), n)));
    }
    Ok(())
}

fn center_basis(basis: &[Matrix]) -> Result<Vec<Matrix>> {
    let order = basis[0].order;
    let n = basis[0].rows;
    let k = basis.len();
    // unknown x: Σ x_a b_a commutes with every b_c
    let mut eqs: Vec<Vec<Cyclotomic>> = Vec::new();
    let comms: Vec<Vec<Matrix>> = basis
        .iter()
        .map(|a| basis.iter().map(|c| a.mul(c).unwrap().sub(&c.mul(a).unwrap()).unwrap()).collect())
        .collect();
    for c in 0..k {
        for e in 0..n * n {
            let row: Vec<Cyclotomic> = (0..k).map(|a| comms[a][c].get(e / n, e % n).clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                eqs.push(row);
            }
        }
    }
    let sys = if eqs.is_empty() { Matrix::zeros(order, 0, k) } else { Matrix::from_rows(order, eqs) };
    let ker = mat_kernel(&sys);
    let mut out = Vec::new();
    for j in 0..ker.cols {
        let mut z = Matrix::zeros(order, n, n);
        for a in 0..k {
            let c = ker.get(a, j);
            if !c.is_zero() {
                z = z.add(&basis[a].scale(c))?;
            }
        }
        out.push(z);
    }
    Ok(out)
}

fn corner_dim(f: &Matrix, basis: &[Matrix]) -> Result<(usize, Vec<Matrix>)> {
    let order = f.order;
    let n = f.rows;
    let mut sb = SpanBuilder::new(order, n * n);
    let mut elems = Vec::new();
    for b in basis {
        let e = f.mul(b)?.mul(f)?;
        if sb.insert(&flatten(&e)) {
            elems.push(e);
        }
    }
    Ok((sb.dim(), elems))
}

fn split_central(
    z: &Matrix,
    e: &Matrix,
) -> Result<Vec<Matrix>> {
    let order = e.order;
    let sp = split_idempotent(e)?;
    let t = sp.p.mul(&e.mul(z)?)?.mul(&sp.q)?;
    let mp = minimal_polynomial(&t);
    let roots = distinct(&find_roots(&mp)?);
    if roots.len() != mp.len() - 1 {
        return Err(Error::NonSemisimple("central element is not diagonalizable".into()));
    }
    if roots.len() == 1 {
        return Ok(vec![e.clone()]);
    }
    let mut out = Vec::new();
    for (i, l) in roots.iter().enumerate() {
        let mut acc = e.clone();
        for (j, m) in roots.iter().enumerate() {
            if i == j {
                continue;
            }
            let factor = (l - m).inv()?;
            let shifted = z.sub(&Matrix::scalar(order, z.rows, m))?;
            acc = acc.mul(&shifted)?.scale(&factor);
        }
        out.push(acc);
    }
    Ok(out)
}

fn peel(f: &Matrix, basis: &[Matrix], out: &mut Vec<Matrix>) -> Result<()> {
    let (d, elems) = corner_dim(f, basis)?;
    if d <= 1 {
        out.push(f.clone());
        return Ok(());
    }
    // find an element of fAf with at least two eigenvalues on im f
    let mut trials: Vec<Matrix> = elems.clone();
    for a in &elems {
        for b in &elems {
            trials.push(a.mul(b)?);
        }
    }
    for (k, a) in elems.iter().enumerate() {
        let mut s = a.clone();
        for (j, b) in elems.iter().enumerate().skip(k + 1) {
            s = s.add(&b.scale(&Cyclotomic::from_int(f.order, (j + 1) as i64)))?;
        }
        trials.push(s);
    }
    let sp = split_idempotent(f)?;
    for x in trials {
        let t = sp.p.mul(&x)?.mul(&sp.q)?;
        let mp = minimal_polynomial(&t);
        if mp.len() <= 2 {
            continue;
        }
        let roots = match find_roots(&mp) {
            Ok(r) => distinct(&r),
            Err(_) => continue,
        };
        if roots.len() < 2 {
            continue;
        }
        let p1 = eigen_projector(f, &x, &roots[0])?;
        let p2 = f.sub(&p1)?;
        peel(&p1, basis, out)?;
        peel(&p2, basis, out)?;
        return Ok(());
    }
    Err(Error::NonSplit("could not split a simple block with the available eigenvalues".into()))
}

/// Primitive orthogonal idempotents of the unital algebra generated by
/// `generators`, grouped by simple block.
pub fn decompose_algebra(order: u32, n: usize, generators: &[Matrix]) -> Result<AlgebraDecomposition> {
    if n == 0 {
        return Ok(AlgebraDecomposition { idempotents: vec![], block_dims: vec![], block_of: vec![] });
    }
    let basis = algebra_span(order, n, generators);
    semisimple_check(&basis)?;
    let center = center_basis(&basis)?;
    let mut central = vec![Matrix::identity(order, n)];
    for z in &center {
        let mut next = Vec::new();
        for e in &central {
            next.extend(split_central(z, e)?);
        }
        central = next;
    }
    let mut idempotents = Vec::new();
    let mut block_of = Vec::new();
    for (b, e) in central.iter().enumerate() {
        let mut prims = Vec::new();
        peel(e, &basis, &mut prims)?;
        for p in prims {
            idempotents.push(p);
            block_of.push(b);
        }
    }
    let block_dims = idempotents.iter().map(|e| e.trace().as_rational().and_then(|r| r.to_integer().to_usize()).unwrap_or(0)).collect();
    Ok(AlgebraDecomposition { idempotents, block_dims, block_of })
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: u32 = 4;

    fn c(v: i64) -> Cyclotomic {
        Cyclotomic::from_int(N, v)
    }

    #[test]
    fn determinants() {
        let m = Matrix::from_ints(N, &[&[1, 1, 1, 1], &[1, 1, -1, -1], &[1, -1, 1, -1], &[1, -1, -1, 1]]);
        assert_eq!(m.determinant().unwrap(), c(-16));
        let m = Matrix::from_ints(N, &[&[0, 2], &[3, 5]]);
        assert_eq!(m.determinant().unwrap(), c(-6));
        assert!(Matrix::from_ints(N, &[&[1, 2], &[2, 4]]).determinant().unwrap().is_zero());
    }

    #[test]
    fn kernels() {
        assert_eq!(mat_kernel(&Matrix::identity(N, 2)).cols(), 0);
        let k = mat_kernel(&Matrix::from_ints(N, &[&[1, 1], &[1, 1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.col(0), vec![c(-1), c(1)]);
        assert_eq!(mat_kernel(&Matrix::zeros(N, 2, 2)).cols(), 2);
    }

    #[test]
    fn split_examples() {
        let e = Matrix::from_ints(N, &[&[1, 0], &[0, 0]]);
        let s = split_idempotent(&e).unwrap();
        assert_eq!(s.rank, 1);
        assert_eq!(s.p, Matrix::from_ints(N, &[&[1, 0]]));
        assert_eq!(s.q, Matrix::from_ints(N, &[&[1], &[0]]));
        let id = Matrix::identity(N, 3);
        let s = split_idempotent(&id).unwrap();
        assert_eq!((s.rank, s.p.clone(), s.q.clone()), (3, id.clone(), id));
        let half = Cyclotomic::from_frac(N, 1, 2);
        let e = Matrix::from_ints(N, &[&[1, 1], &[1, 1]]).scale(&half);
        let s = split_idempotent(&e).unwrap();
        assert_eq!(s.rank, 1);
        assert_eq!(s.q.mul(&s.p).unwrap(), e);
        assert!(s.p.mul(&s.q).unwrap().is_identity());
        assert!(matches!(split_idempotent(&Matrix::from_ints(N, &[&[2]])), Err(Error::NotIdempotent)));
    }

    #[test]
    fn inverse_and_solve() {
        let a = Matrix::from_ints(N, &[&[2, 1], &[1, 1]]);
        let ai = a.inverse().unwrap();
        assert!(a.mul(&ai).unwrap().is_identity());
        let b = Matrix::from_ints(N, &[&[3], &[2]]);
        assert_eq!(solve(&a, &b).unwrap().unwrap(), Matrix::from_ints(N, &[&[1], &[1]]));
        let s = Matrix::from_ints(N, &[&[1, 1], &[1, 1]]);
        assert!(solve(&s, &Matrix::from_ints(N, &[&[1], &[0]])).unwrap().is_none());
        assert!(s.inverse().is_err());
    }

    #[test]
    fn scalar_algebra() {
        let d = decompose_algebra(N, 1, &[]).unwrap();
        assert_eq!(d.idempotents, vec![Matrix::identity(N, 1)]);
    }

    #[test]
    fn swap_algebra_splits_in_two() {
        let swap = Matrix::from_ints(N, &[&[0, 1], &[1, 0]]);
        let d = decompose_algebra(N, 2, &[swap.clone()]).unwrap();
        assert_eq!(d.idempotents.len(), 2);
        let half = Cyclotomic::from_frac(N, 1, 2);
        let plus = Matrix::identity(N, 2).add(&swap).unwrap().scale(&half);
        let minus = Matrix::identity(N, 2).sub(&swap).unwrap().scale(&half);
        assert!(d.idempotents.contains(&plus));
        assert!(d.idempotents.contains(&minus));
    }

    #[test]
    fn cyclic_shift_needs_fourth_roots() {
        let shift = Matrix::from_ints(1, &[&[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        assert!(matches!(decompose_algebra(1, 4, &[shift]), Err(Error::NonSplit(_))));
        let shift = Matrix::from_ints(4, &[&[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        let d = decompose_algebra(4, 4, &[shift]).unwrap();
        assert_eq!(d.idempotents.len(), 4);
    }

    #[test]
    fn full_matrix_algebra_peels_rank_one() {
        let e12 = Matrix::from_ints(N, &[&[0, 1], &[0, 0]]);
        let e21 = Matrix::from_ints(N, &[&[0, 0], &[1, 0]]);
        let d = decompose_algebra(N, 2, &[e12, e21]).unwrap();
        assert_eq!(d.idempotents.len(), 2);
        assert_eq!(d.block_of, vec![0, 0]);
        check_decomposition(&d, 2);
    }

    #[test]
    fn radical_is_detected() {
        let nil = Matrix::from_ints(N, &[&[0, 1], &[0, 0]]);
        assert!(matches!(decompose_algebra(N, 2, &[nil]), Err(Error::NonSemisimple(_))));
    }

    fn check_decomposition(d: &AlgebraDecomposition, n: usize) {
        let mut sum = Matrix::zeros(N, n, n);
        for (i, e) in d.idempotents.iter().enumerate() {
            assert!(e.is_idempotent());
            for (j, f) in d.idempotents.iter().enumerate() {
                if i != j {
                    assert!(e.mul(f).unwrap().is_zero());
                }
            }
            sum = sum.add(e).unwrap();
        }
        assert!(sum.is_identity());
    }

    #[test]
    fn random_split_idempotents() {
        // q0·p0 with p0·q0 = id
        let q0 = Matrix::from_ints(N, &[&[1, 0], &[2, 1], &[0, 3]]);
        let left = Matrix::from_ints(N, &[&[1, 0, 0], &[-2, 1, 0]]);
        assert!(left.mul(&q0).unwrap().is_identity());
        let e = q0.mul(&left).unwrap();
        let s = split_idempotent(&e).unwrap();
        assert_eq!(s.q.mul(&s.p).unwrap(), e);
        assert!(s.p.mul(&s.q).unwrap().is_identity());
    }

    #[test]
    fn roots_of_unity_polys() {
        // t^2 + 1 over Q(i)
        let p = vec![c(1), c(0), c(1)];
        let r = find_roots(&p).unwrap();
        assert_eq!(r.len(), 2);
        for x in &r {
            assert!(poly_eval(&p, x).is_zero());
        }
        let p1 = vec![Cyclotomic::from_int(1, 1), Cyclotomic::from_int(1, 0), Cyclotomic::from_int(1, 1)];
        assert!(matches!(find_roots(&p1), Err(Error::NonSplit(_))));
    }
}
