//! Determinantal quantum symmetric functions: quantum complete functions,
//! quantum Schur and multi-Schur functions, quantum monomials and the
//! determinantal formulas for restricted vexillary and Grassmannian
//! permutations.

use std::sync::Arc;

use super::{q_double_schubert, q_elementary, in_rank};
use crate::classical::{complete, elementary, Memo};
use crate::error::{Error, Result};
use crate::perm::{Composition, Partition, PermClass, Permutation, SkewShape};
use crate::poly::{determinant, Family, Polynomial};

/// `det(entry(i, j))_{1 <= i, j <= m}`.
pub fn matrix_det<F>(m: usize, entry: F) -> Polynomial
where
    F: Fn(usize, usize) -> Polynomial,
{
    let matrix: Vec<Vec<Polynomial>> = (1..=m)
        .map(|i| (1..=m).map(|j| entry(i, j)).collect())
        .collect();
    determinant(&matrix).expect("square by construction")
}

fn signed(a: usize, b: usize, i: usize, j: usize) -> i64 {
    a as i64 - b as i64 - i as i64 + j as i64
}

static Q_COMPLETE: Memo<(i64, usize)> = Memo::new();

/// `h~_k(X_r) = det(e~_{1-i+j}(X_{r-1+j}))_{k x k}`.
pub fn q_complete(k: i64, r: usize) -> Arc<Polynomial> {
    if k < 0 {
        return Arc::new(Polynomial::zero());
    }
    if k == 0 {
        return Arc::new(Polynomial::one());
    }
    Q_COMPLETE.get_or_compute(&(k, r), || {
        matrix_det(k as usize, |i, j| {
            // X_{r-1+j} with r = 0 and j = 1 is the empty alphabet
            (*q_elementary(1 - i as i64 + j as i64, r + j - 1)).clone()
        })
    })
}

/// `e~_m(X_k - Y_l) = sum_j e~_{m-j}(X_k) h_j(Y_l)`.
pub fn q_xy_elementary(m: i64, k: usize, l: usize) -> Polynomial {
    if m < 0 {
        return Polynomial::zero();
    }
    (0..=m)
        .map(|j| &*q_elementary(m - j, k) * &complete(j, Family::Y, l))
        .sum()
}

/// `h~_m(X_k - Y_l) = sum_j h~_{m-j}(X_k) e_j(Y_l)`.
pub fn q_xy_complete(m: i64, k: usize, l: usize) -> Polynomial {
    if m < 0 {
        return Polynomial::zero();
    }
    (0..=m)
        .map(|j| &*q_complete(m - j, k) * &elementary(j, Family::Y, l))
        .sum()
}

/// The Grassmannian permutation of `S_n` with shape `lambda` and descent
/// `r`: its code is `(lambda_r, ..., lambda_1, 0, ...)`.
pub fn grassmannian_permutation(lambda: &Partition, r: usize, n: usize) -> Result<Permutation> {
    if r > n || !lambda.fits_box(r, n - r) {
        return Err(Error::ShapeOutOfBox {
            shape: lambda.to_string(),
            rows: r,
            cols: n.saturating_sub(r),
        });
    }
    let code = Composition::new((1..=r).map(|i| lambda.part(r + 1 - i)).collect());
    Permutation::from_code_rank(&code, n)
}

/// `s~_lambda(X_r) = det(e~_{lambda'_i - i + j}(X_{r-1+j}))_{(n-r) x (n-r)}`.
pub fn q_schur(lambda: &Partition, r: usize, n: usize) -> Result<Polynomial> {
    if r > n || !lambda.fits_box(r, n - r) {
        return Err(Error::ShapeOutOfBox {
            shape: lambda.to_string(),
            rows: r,
            cols: n.saturating_sub(r),
        });
    }
    let conj = lambda.conjugate();
    Ok(matrix_det(n - r, |i, j| {
        (*q_elementary(signed(conj.part(i), 0, i, j), r + j - 1)).clone()
    }))
}

static Q_MONOMIAL: Memo<Composition> = Memo::new();

/// `x~^alpha = det(h~_{alpha_i - i + j}(X_i))` for `alpha` inside the
/// staircase of rank `n`. Rows past the last nonzero part form a
/// unitriangular block, so only the leading block is expanded.
pub fn q_monomial(alpha: &Composition, n: usize) -> Result<Polynomial> {
    if !alpha.fits_staircase(n) {
        return Err(Error::CompositionOutOfBox(alpha.to_string(), n));
    }
    let alpha = alpha.trimmed();
    let value = Q_MONOMIAL.get_or_compute(&alpha, || {
        matrix_det(alpha.parts().len(), |i, j| {
            (*q_complete(signed(alpha.part(i), 0, i, j), i)).clone()
        })
    });
    Ok((*value).clone())
}

/// The quantum Billey-Jockusch-Stanley sum over reduced words `a` of `w`
/// and `a`-compatible sequences `b` of `x~^b`.
pub fn q_bjs(w: &Permutation, n: usize) -> Result<Polynomial> {
    let w = in_rank(w, n)?;
    let mut out = Polynomial::zero();
    for a in w.reduced_words() {
        for b in crate::perm::compatible_sequences(&a) {
            let mut alpha = vec![0; n];
            for &bi in &b {
                alpha[bi - 1] += 1;
            }
            out += q_monomial(&Composition::new(alpha), n)?;
        }
    }
    Ok(out)
}

/// `s~_lambda(X_r || y)`: the quantum double Schubert polynomial of the
/// Grassmannian permutation with shape `lambda` and descent `r`.
pub fn q_factorial_schur(lambda: &Partition, r: usize, n: usize) -> Result<Polynomial> {
    let w = grassmannian_permutation(lambda, r, n)?;
    Ok((*q_double_schubert(&w, n)?).clone())
}

fn flag_error(what: &str, flag: &[usize], need: usize) -> Error {
    Error::BadFlag(format!("{what} flag {flag:?} needs at least {need} entries"))
}

/// Quantum row-flagged Schur function
/// `det(h~_{lambda_i - mu_j - i + j}(X_{k_i}))`, of size `flag.len()`.
pub fn q_row_flagged(shape: &SkewShape, flag: &[usize]) -> Result<Polynomial> {
    let (lam, mu) = (shape.outer(), shape.inner());
    if flag.len() < lam.len() {
        return Err(flag_error("row", flag, lam.len()));
    }
    Ok(matrix_det(flag.len(), |i, j| {
        (*q_complete(signed(lam.part(i), mu.part(j), i, j), flag[i - 1])).clone()
    }))
}

/// Quantum column-flagged Schur function
/// `det(e~_{lambda'_i - mu'_j - i + j}(X_{l_j}))`, of size `flag.len()`.
pub fn q_column_flagged(shape: &SkewShape, flag: &[usize]) -> Result<Polynomial> {
    let (lam, mu) = (shape.outer().conjugate(), shape.inner().conjugate());
    if flag.len() < lam.len() {
        return Err(flag_error("column", flag, lam.len()));
    }
    Ok(matrix_det(flag.len(), |i, j| {
        (*q_elementary(signed(lam.part(i), mu.part(j), i, j), flag[j - 1])).clone()
    }))
}

/// Quantum multi-Schur function with row alphabets `X_{k_i}` and column
/// alphabets `Y_{l_j}`: `det(h~_{lambda_i - mu_j - i + j}(X_{k_i} - Y_{l_j}))`.
pub fn q_multi_schur(shape: &SkewShape, xflag: &[usize], yflag: &[usize]) -> Result<Polynomial> {
    let (lam, mu) = (shape.outer(), shape.inner());
    if xflag.len() < lam.len() {
        return Err(flag_error("x", xflag, lam.len()));
    }
    if yflag.len() != xflag.len() {
        return Err(flag_error("y", yflag, xflag.len()));
    }
    Ok(matrix_det(xflag.len(), |i, j| {
        q_xy_complete(signed(lam.part(i), mu.part(j), i, j), xflag[i - 1], yflag[j - 1])
    }))
}

/// `det(h~_{lambda_i - i + j}(X_{a_i} - Y_{b_i}))` where row `i` carries the
/// difference alphabet `rows[i] = (a_i, b_i)`.
pub fn q_row_difference_schur(lambda: &Partition, rows: &[(usize, usize)]) -> Result<Polynomial> {
    if rows.len() < lambda.len() {
        return Err(Error::BadFlag(format!(
            "{} row alphabets for the {} rows of {lambda}",
            rows.len(),
            lambda.len()
        )));
    }
    Ok(matrix_det(rows.len(), |i, j| {
        let (a, b) = rows[i - 1];
        q_xy_complete(signed(lambda.part(i), 0, i, j), a, b)
    }))
}

/// How row `i` of the restricted vexillary determinant picks its `y` flag
/// from `theta~ = theta(w^{-1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YFlagRule {
    /// `Y_{theta~_{lambda_i}}`.
    RowLength,
    /// `Y_{theta~_{min(lambda'_i, l(theta~))}}`.
    ClippedConjugate,
}

/// `S~_w(x, y)` for a restricted vexillary `w` as
/// `det(h~_{lambda_i - i + j}(X_{theta_i} - Y_{theta~_{lambda_i}}))`.
pub fn q_rv_double(w: &Permutation, n: usize) -> Result<Polynomial> {
    q_rv_double_with(w, n, YFlagRule::RowLength)
}

pub fn q_rv_double_with(w: &Permutation, n: usize, rule: YFlagRule) -> Result<Polynomial> {
    let w = in_rank(w, n)?;
    if !PermClass::Rv.contains(&w) {
        return Err(Error::NotRestrictedVexillary(w.to_string()));
    }
    let lambda = w.shape();
    let conj = lambda.conjugate();
    let theta = w.theta();
    let theta_inv = w.inverse().theta();
    let rows: Vec<(usize, usize)> = (1..=lambda.len())
        .map(|i| {
            let idx = match rule {
                YFlagRule::RowLength => lambda.part(i),
                YFlagRule::ClippedConjugate => conj.part(i).min(theta_inv.len()),
            };
            let y = if idx == 0 { 0 } else { theta_inv.get(idx) };
            (theta.get(i), y)
        })
        .collect();
    q_row_difference_schur(&lambda, &rows)
}

/// `S~_w(x, y)` for a Grassmannian `w` with descent `r` as
/// `det(e~_{lambda'_i - i + j}(X_{r-1+j} - Y_{theta~_i}))_{(n-r) x (n-r)}`.
/// Rows below `l(theta~)` only meet the unitriangular corner and use the
/// empty alphabet.
pub fn q_grassmannian_double(w: &Permutation, n: usize) -> Result<Polynomial> {
    let w = in_rank(w, n)?;
    let descents = w.descents();
    if descents.len() > 1 {
        return Err(Error::NotGrassmannian(w.to_string()));
    }
    let Some(&r) = descents.first() else {
        return Ok(Polynomial::one());
    };
    let conj = w.shape().conjugate();
    let theta_inv = w.inverse().theta();
    Ok(matrix_det(n - r, |i, j| {
        let y = if i <= theta_inv.len() { theta_inv.get(i) } else { 0 };
        q_xy_elementary(signed(conj.part(i), 0, i, j), r + j - 1, y)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn quantum_complete_examples() {
        assert_eq!(*q_complete(1, 3), p("x1 + x2 + x3"));
        assert_eq!(*q_complete(2, 2), p("x1^2 + x1*x2 + x2^2 - q1 - q2"));
        assert_eq!(*q_complete(3, 1), p("x1^3 - 2*q1*x1 - q1*x2"));
        assert!(q_complete(0, 0).is_one());
        assert!(q_complete(-1, 2).is_zero());
    }

    #[test]
    fn difference_alphabets() {
        assert_eq!(q_xy_elementary(1, 2, 1), p("x1 + x2 + y1"));
        assert_eq!(q_xy_complete(3, 2, 0), *q_complete(3, 2));
        assert!(q_xy_elementary(0, 3, 2).is_one());
        assert!(q_xy_complete(-2, 3, 2).is_zero());
    }

    #[test]
    fn quantum_schur_examples() {
        let s = q_schur(&part(&[2, 1]), 3, 5).unwrap();
        assert_eq!(
            s,
            p("x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2 + 2*x1*x2*x3 \
               + q1*(x1 + x2) + q2*(x2 + x3) - q3*(x1 + x2)")
        );
        assert_eq!(q_schur(&part(&[3]), 2, 5).unwrap(), *q_complete(3, 2));
        assert!(q_schur(&Partition::empty(), 2, 4).unwrap().is_one());
        assert!(matches!(
            q_schur(&part(&[3]), 2, 4),
            Err(Error::ShapeOutOfBox { .. })
        ));
    }

    #[test]
    fn grassmannian_permutations() {
        let w = grassmannian_permutation(&part(&[2, 1]), 3, 5).unwrap();
        assert_eq!(w.to_string(), "13524");
        let w = grassmannian_permutation(&part(&[2, 2]), 2, 4).unwrap();
        assert_eq!(w.to_string(), "3412");
    }

    #[test]
    fn quantum_monomials() {
        let c = |v: &[usize]| Composition::new(v.to_vec());
        assert_eq!(q_monomial(&c(&[1, 1]), 3).unwrap(), p("x1*x2 + q1"));
        assert_eq!(q_monomial(&c(&[2]), 3).unwrap(), p("x1^2 - q1"));
        assert_eq!(q_monomial(&c(&[1]), 2).unwrap(), p("x1"));
        assert!(matches!(
            q_monomial(&c(&[2]), 2),
            Err(Error::CompositionOutOfBox(..))
        ));
    }

    #[test]
    fn bjs_examples() {
        let w = |s: &str| s.parse::<Permutation>().unwrap();
        assert_eq!(q_bjs(&w("213"), 3).unwrap(), p("x1"));
        assert_eq!(q_bjs(&w("132"), 3).unwrap(), p("x1 + x2"));
        assert_eq!(q_bjs(&w("321"), 3).unwrap(), p("x1^2*x2 + q1*x1"));
    }

    #[test]
    fn flagged_examples() {
        let shape = SkewShape::straight(part(&[1, 1]));
        assert_eq!(
            q_row_flagged(&shape, &[2, 3]).unwrap(),
            p("x1*x2 + x1*x3 + x2*x3 + q1 + q2")
        );
        assert_eq!(
            q_row_flagged(&shape, &[3, 3]).unwrap(),
            p("x1*x2 + x1*x3 + x2*x3 + q1 + q2 + q3")
        );
        assert!(q_row_flagged(&SkewShape::straight(Partition::empty()), &[])
            .unwrap()
            .is_one());
        assert!(matches!(q_row_flagged(&shape, &[2]), Err(Error::BadFlag(_))));
    }

    #[test]
    fn column_flagged_matches_schur_for_growing_alphabets() {
        // column flags X_{r-1+j} give the quantum Schur determinant
        let lam = part(&[2, 1]);
        let shape = SkewShape::straight(lam.clone());
        assert_eq!(
            q_column_flagged(&shape, &[3, 4]).unwrap(),
            q_schur(&lam, 3, 5).unwrap()
        );
    }
}
