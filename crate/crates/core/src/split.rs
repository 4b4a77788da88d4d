//! Finite-dimensional algebras of matrices: radicals, primitive idempotents
//! and isomorphism search.
//!
//! An algebra here is a subalgebra `E ⊆ M_n(ℚ)` given by a basis of
//! matrices. Endomorphism rings of modules and spaces of natural
//! transformations are both handled this way.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{kernel, q, rational_roots, root_multiplicity, Matrix, Rational, Subspace};

fn flatten(ms: &[Matrix]) -> (usize, Vec<Vec<Rational>>) {
    let len = ms.first().map_or(0, |m| m.rows() * m.cols());
    (len, ms.iter().map(|m| m.entries().to_vec()).collect())
}

/// A basis (as matrices) of the span of `ms`.
pub fn span_basis(ms: &[Matrix]) -> Vec<Matrix> {
    let Some(first) = ms.first() else {
        return vec![];
    };
    let (r, c) = (first.rows(), first.cols());
    let (len, vecs) = flatten(ms);
    Subspace::from_vectors(len, &vecs)
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_vec(r, c, v).unwrap())
        .collect()
}

/// Radical of the algebra spanned by `basis` (closed under products),
/// computed as the kernel of the trace form. Valid in characteristic zero.
pub fn radical(basis: &[Matrix]) -> Vec<Matrix> {
    let k = basis.len();
    if k == 0 {
        return vec![];
    }
    let mut t = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let v = trace_of_product(&basis[i], &basis[j]);
            t.set(i, j, v.clone());
            t.set(j, i, v);
        }
    }
    let ker = kernel(&t);
    ker.basis_vectors()
        .iter()
        .map(|a| combine(basis, a))
        .collect()
}

pub fn trace_of_product(a: &Matrix, b: &Matrix) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if !x.is_zero() {
                let y = b.get(j, i);
                if !y.is_zero() {
                    acc += x * y;
                }
            }
        }
    }
    acc
}

pub fn combine(basis: &[Matrix], coeffs: &[Rational]) -> Matrix {
    let mut out = Matrix::zeros(basis[0].rows(), basis[0].cols());
    for (b, c) in basis.iter().zip(coeffs) {
        out.add_scaled(b, c);
    }
    out
}

/// A complete set of orthogonal primitive idempotents of the algebra spanned
/// by `basis`, summing to the identity of `M_n`. The identity must lie in
/// the algebra.
///
/// Fails with [`Error::NonSplit`] when some local corner does not split
/// over ℚ, or when no splitting element is found among the candidates tried.
pub fn primitive_idempotents(basis: &[Matrix], n: usize) -> Result<Vec<Matrix>> {
    if n == 0 {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut stack = vec![Matrix::identity(n)];
    while let Some(e) = stack.pop() {
        match split_idempotent(basis, &e)? {
            None => out.push(e),
            Some(f) => {
                let g = e.sub(&f);
                stack.push(g);
                stack.push(f);
            }
        }
    }
    // deterministic order: by first nonzero diagonal position
    out.sort_by_key(|e| (0..n).find(|&i| !e.get(i, i).is_zero()).unwrap_or(n));
    Ok(out)
}

/// Returns `None` when `e` is primitive, otherwise a proper idempotent `f`
/// with `f = efe`.
fn split_idempotent(basis: &[Matrix], e: &Matrix) -> Result<Option<Matrix>> {
    let corner: Vec<Matrix> = basis.iter().map(|b| e.mul(b).mul(e)).collect();
    let corner = span_basis(&corner);
    let rad = radical(&corner);
    let semisimple = corner.len() - rad.len();
    if semisimple <= 1 {
        return Ok(None);
    }
    let n = e.rows();
    let r = e.rank();

    let mut candidates: Vec<Matrix> = corner.clone();
    for i in 0..corner.len() {
        for j in i + 1..corner.len() {
            for c in [1, -1, 2, -2, 3] {
                candidates.push(corner[i].add(&corner[j].scale(&q(c))));
            }
        }
    }
    for i in 0..corner.len() {
        for j in 0..corner.len() {
            candidates.push(corner[i].mul(&corner[j]));
        }
    }
    for x in candidates {
        if let Some(f) = fitting_split(&x, e, n, r) {
            return Ok(Some(f));
        }
    }
    Err(Error::NonSplit)
}

/// For `x = exe`, looks for a rational eigenvalue `c` of `x` on `im e` such
/// that `x - c` is neither nilpotent nor invertible there, and returns the
/// Fitting projector onto the part where `x - c` is invertible.
fn fitting_split(x: &Matrix, e: &Matrix, n: usize, r: usize) -> Option<Matrix> {
    let cp = x.charpoly();
    let roots = rational_roots(&cp)?;
    for c in roots {
        let mut m = root_multiplicity(&cp, &c);
        if c.is_zero() {
            m -= n - r;
        }
        if m == 0 || m >= r {
            continue;
        }
        let psi = x.sub(&e.scale(&c));
        let mut pw = psi.clone();
        let mut k = 1;
        while k < n {
            pw = pw.mul(&pw);
            k *= 2;
        }
        let img = Subspace::column_space(&pw);
        let ker = kernel(&pw);
        let mut cols = img.basis().transpose();
        cols = cols.hstack(&ker.basis().transpose());
        let inv = cols.inverse()?;
        let mut d = Matrix::zeros(n, n);
        for i in 0..img.dim() {
            d.set(i, i, Rational::one());
        }
        return Some(cols.mul(&d).mul(&inv));
    }
    None
}

/// Finds an invertible element of `Hom(X, Y)` given bases of `Hom(X, Y)`,
/// `Hom(Y, X)`, `End(X)` and `End(Y)` as matrices (`dim Y × dim X` and so on).
pub fn find_iso(
    xy: &[Matrix],
    yx: &[Matrix],
    end_x: &[Matrix],
    end_y: &[Matrix],
    dim_x: usize,
    dim_y: usize,
) -> Result<Option<Matrix>> {
    if dim_x != dim_y {
        return Ok(None);
    }
    if dim_x == 0 {
        return Ok(Some(Matrix::zeros(0, 0)));
    }
    if xy.is_empty() || yx.is_empty() {
        return Ok(None);
    }
    // cheap deterministic samples first
    for h in xy {
        if h.is_invertible() {
            return Ok(Some(h.clone()));
        }
    }
    for s in 2..5i64 {
        let mut acc = Matrix::zeros(dim_y, dim_x);
        let mut w = q(1);
        for h in xy {
            acc.add_scaled(h, &w);
            w *= q(s);
        }
        if acc.is_invertible() {
            return Ok(Some(acc));
        }
    }

    let ex = primitive_idempotents(end_x, dim_x)?;
    let ey = primitive_idempotents(end_y, dim_y)?;
    if ex.len() != ey.len() {
        return Ok(None);
    }
    let mut used = vec![false; ey.len()];
    let mut phi = Matrix::zeros(dim_y, dim_x);
    for e in &ex {
        let mut found = None;
        'search: for (j, f) in ey.iter().enumerate() {
            if used[j] {
                continue;
            }
            for g in xy {
                let fge = f.mul(g).mul(e);
                if fge.is_zero() {
                    continue;
                }
                for h in yx {
                    // in a split local ring, non-nilpotent means nonzero trace
                    if !trace_of_product(h, &fge).is_zero() {
                        found = Some((j, fge.clone()));
                        break 'search;
                    }
                }
            }
        }
        let Some((j, fge)) = found else {
            return Ok(None);
        };
        used[j] = true;
        phi = phi.add(&fge);
    }
    if phi.is_invertible() {
        Ok(Some(phi))
    } else {
        Err(Error::NonSplit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix_units(n: usize) -> Vec<Matrix> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut m = Matrix::zeros(n, n);
                m.set(i, j, q(1));
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn radical_of_upper_triangular() {
        // upper triangular 2x2: radical is the strictly upper part
        let b = vec![
            Matrix::from_i64(&[&[1, 0], &[0, 0]]),
            Matrix::from_i64(&[&[0, 1], &[0, 0]]),
            Matrix::from_i64(&[&[0, 0], &[0, 1]]),
        ];
        let r = radical(&b);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0], Matrix::from_i64(&[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn idempotents_of_full_matrix_algebra() {
        let e = primitive_idempotents(&matrix_units(3), 3).unwrap();
        assert_eq!(e.len(), 3);
        let sum = e.iter().fold(Matrix::zeros(3, 3), |a, b| a.add(b));
        assert_eq!(sum, Matrix::identity(3));
        for (i, a) in e.iter().enumerate() {
            assert_eq!(a.mul(a), *a);
            for (j, b) in e.iter().enumerate() {
                if i != j {
                    assert!(a.mul(b).is_zero());
                }
            }
        }
    }

    #[test]
    fn non_split_detected() {
        // Q(i) inside M_2(Q)
        let b = vec![Matrix::identity(2), Matrix::from_i64(&[&[0, -1], &[1, 0]])];
        assert_eq!(primitive_idempotents(&b, 2), Err(Error::NonSplit));
    }

    #[test]
    fn local_algebra_is_primitive() {
        let b = vec![Matrix::identity(2), Matrix::from_i64(&[&[0, 1], &[0, 0]])];
        assert_eq!(primitive_idempotents(&b, 2).unwrap().len(), 1);
    }

    #[test]
    fn iso_search_between_permuted_sums() {
        // X = Q ⊕ Q^2 as modules over the diagonal algebra diag(a, b, b);
        // Y the same with the blocks swapped
        let d = |v: [i64; 3]| {
            let mut m = Matrix::zeros(3, 3);
            for (i, x) in v.iter().enumerate() {
                m.set(i, i, q(*x));
            }
            m
        };
        let ex = vec![d([1, 0, 0]), d([0, 1, 0]), d([0, 0, 1])];
        let p = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let xy = vec![p.clone()];
        let iso = find_iso(&xy, &xy, &ex, &ex, 3, 3).unwrap();
        assert!(iso.is_some());
        assert_eq!(find_iso(&[], &[], &ex, &ex, 3, 3).unwrap(), None);
    }
}
