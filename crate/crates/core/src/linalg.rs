//! Exact dense linear algebra over the rationals.
//!
//! Everything here is exact: matrices hold [`Rational`] entries and every
//! elimination is carried out without rounding. Subspaces are stored by a
//! reduced row-echelon basis, so two equal subspaces compare equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<Rational>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Integer convenience constructor, mostly for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| q(x))
            })
            .collect();
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn column(v: &[Rational]) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
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

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Matrix, s: &Rational) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b * s;
            }
        }
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows).is_zero()
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.set(r0 + r, c0 + c, b.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend(self.row(r).iter().cloned());
        }
        Matrix {
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let (r, piv) = rref(&aug);
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pv = m.get(c, c).clone();
            det *= &pv;
            for r in c + 1..n {
                let f = m.get(r, c) / &pv;
                if !f.is_zero() {
                    m.row_axpy(r, c, &-f);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// row[dst] += s * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, s: &Rational) {
        for c in 0..self.cols {
            let v = self.data[src * self.cols + c].clone();
            if !v.is_zero() {
                self.data[dst * self.cols + c] += v * s;
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: &Rational) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            if !self.data[idx].is_zero() {
                self.data[idx] *= s;
            }
        }
    }

    /// Characteristic polynomial `det(tI - M)`, coefficients from constant term up.
    pub fn charpoly(&self) -> Vec<Rational> {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        // reduce to upper Hessenberg form by similarity transforms
        for j in 0..n.saturating_sub(2) {
            let Some(p) = (j + 1..n).find(|&i| !h.get(i, j).is_zero()) else {
                continue;
            };
            if p != j + 1 {
                h.swap_rows(p, j + 1);
                for r in 0..n {
                    let a = h.get(r, p).clone();
                    let b = h.get(r, j + 1).clone();
                    h.set(r, p, b);
                    h.set(r, j + 1, a);
                }
            }
            let pv = h.get(j + 1, j).clone();
            for i in j + 2..n {
                let u = h.get(i, j) / &pv;
                if u.is_zero() {
                    continue;
                }
                h.row_axpy(i, j + 1, &-u.clone());
                for r in 0..n {
                    let v = h.get(r, i).clone();
                    if !v.is_zero() {
                        let cur = h.get(r, j + 1) + v * &u;
                        h.set(r, j + 1, cur);
                    }
                }
            }
        }
        // p_k(t) = (t - h_kk) p_{k-1} - sum_{i<k} h_{ik} (prod_{l=i+1}^{k} h_{l,l-1}) p_{i-1}
        let mut polys: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
        for k in 0..n {
            let prev = &polys[k];
            let mut next = vec![Rational::zero(); k + 2];
            for (d, c) in prev.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * h.get(k, k);
            }
            let mut prod = Rational::one();
            for i in (0..k).rev() {
                prod *= h.get(i + 1, i);
                if prod.is_zero() {
                    break;
                }
                let coef = h.get(i, k) * &prod;
                if coef.is_zero() {
                    continue;
                }
                for (d, c) in polys[i].iter().enumerate() {
                    next[d] -= c * &coef;
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

/// Reduced row-echelon form together with the (strictly increasing) pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, row);
        let inv = a.get(row, c).recip();
        a.scale_row(row, &inv);
        for r in 0..a.rows {
            if r != row {
                let f = a.get(r, c).clone();
                if !f.is_zero() {
                    a.row_axpy(r, row, &-f);
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    (a, pivots)
}

/// Null space of `m` as a canonical subspace of `Q^cols`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut vecs = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rational::zero(); n];
        v[f] = Rational::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, f).clone();
        }
        vecs.push(v);
    }
    Subspace::from_vectors(n, &vecs)
}

/// Some `x` with `m x = rhs`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, rhs: &Matrix) -> Result<Option<Matrix>> {
    if m.rows != rhs.rows {
        return Err(Error::DimensionMismatch(format!(
            "solve: {} rows against {} right-hand rows",
            m.rows, rhs.rows
        )));
    }
    let aug = m.hstack(rhs);
    let (r, pivots) = rref(&aug);
    if pivots.iter().any(|&p| p >= m.cols) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(m.cols, rhs.cols);
    for (i, &p) in pivots.iter().enumerate() {
        for j in 0..rhs.cols {
            x.set(p, j, r.get(i, m.cols + j).clone());
        }
    }
    Ok(Some(x))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors(ambient: usize, vecs: &[Vec<Rational>]) -> Self {
        let mut data = Vec::with_capacity(vecs.len() * ambient);
        for v in vecs {
            assert_eq!(v.len(), ambient);
            data.extend(v.iter().cloned());
        }
        Self::row_space(&Matrix {
            rows: vecs.len(),
            cols: ambient,
            data,
        })
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = rref(m);
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace {
            ambient: m.cols,
            basis,
            pivots,
        }
    }

    pub fn column_space(m: &Matrix) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Basis vectors as the rows of a matrix (reduced echelon form).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.dim())
            .map(|i| self.basis.row(i).to_vec())
            .collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that do not carry a pivot; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Coordinates of `v` in the echelon basis; only meaningful when `v` lies in the subspace.
    pub fn coords(&self, v: &[Rational]) -> Vec<Rational> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// `v` minus its component along the echelon basis, read off at the pivots.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let f = out[p].clone();
            if f.is_zero() {
                continue;
            }
            for (c, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[c] -= b * &f;
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other
            .basis_vectors()
            .iter()
            .all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // x = a^T S = b^T T  <=>  (a, b) in ker [S^T | -T^T]
        let st = self.basis.transpose();
        let tt = other.basis.transpose().scale(&q(-1));
        let k = kernel(&st.hstack(&tt));
        let d = self.dim();
        let vecs: Vec<Vec<Rational>> = k
            .basis_vectors()
            .iter()
            .map(|ab| st.mul_vec(&ab[..d]))
            .collect();
        Ok(Subspace::from_vectors(self.ambient, &vecs))
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn image(m: &Matrix, s: &Subspace) -> Result<Subspace> {
        if m.cols != s.ambient {
            return Err(Error::DimensionMismatch(format!(
                "image: {}x{} matrix on a subspace of Q^{}",
                m.rows, m.cols, s.ambient
            )));
        }
        let vecs: Vec<Vec<Rational>> = s.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Ok(Subspace::from_vectors(m.rows, &vecs))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

/// Rational roots of a polynomial given by coefficients from the constant term up.
///
/// Returns `None` when a coefficient is too large for divisor enumeration.
pub fn rational_roots(poly: &[Rational]) -> Option<Vec<Rational>> {
    let mut p: Vec<Rational> = poly.to_vec();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.len() <= 1 {
        return Some(vec![]);
    }
    let mut roots = Vec::new();
    let shift = p.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(Rational::zero());
        p.drain(..shift);
    }
    if p.len() <= 1 {
        return Some(roots);
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let a0 = ints[0].abs().to_u64()?;
    let an = ints.last().unwrap().abs().to_u64()?;
    let num_divs = divisors(a0)?;
    let den_divs = divisors(an)?;
    let eval = |x: &Rational| -> Rational {
        let mut acc = Rational::zero();
        for c in p.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let mut found: Vec<Rational> = Vec::new();
    for &n in &num_divs {
        for &d in &den_divs {
            for sign in [1i64, -1] {
                let cand = Rational::new(BigInt::from(n) * sign, BigInt::from(d));
                if !found.contains(&cand) && eval(&cand).is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    found.sort();
    roots.extend(found);
    Some(roots)
}

fn divisors(n: u64) -> Option<Vec<u64>> {
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    Some(out)
}

/// Multiplicity of `root` in `poly` (coefficients from the constant term up).
pub fn root_multiplicity(poly: &[Rational], root: &Rational) -> usize {
    let mut p: Vec<Rational> = poly.to_vec();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let mut mult = 0;
    while p.len() > 1 {
        // synthetic division by (t - root)
        let deg = p.len() - 1;
        let mut quot = vec![Rational::zero(); deg];
        let mut carry = Rational::zero();
        for i in (0..=deg).rev() {
            let v = &p[i] + &carry * root;
            if i == 0 {
                if !v.is_zero() {
                    return mult;
                }
            } else {
                quot[i - 1] = v.clone();
            }
            carry = v;
        }
        mult += 1;
        p = quot;
    }
    mult
}
