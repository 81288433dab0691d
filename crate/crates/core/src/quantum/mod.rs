//! Quantum elementary functions, quantum (double) Schubert polynomials and
//! the quantization map.
//!
//! The top class is `S~_{w0}(x, y) = prod_{i<n} Delta_i(y_{n-i} | X_i)` with
//! `Delta_k(t | X_k) = sum_j e~_j(X_k) t^{k-j}`. Expanding the product gives
//!
//! ```text
//! S~_{w0}(x, y) = sum_k  prod_i e~_{k_i}(X_i) * prod_i y_{n-i}^{i-k_i},   0 <= k_i <= i,
//! ```
//!
//! and since `d^{(y)}` is linear over `x` and `q`, `S~_w = d^{(y)}_{w w0} S~_{w0}`
//! only needs divided differences of the pure `y` monomials. For
//! `S~_w(x) = S~_w(x, 0)` only the tuples with `sum k_i = l(w)` survive.

mod schur;

use std::sync::Arc;

use crate::classical::{divided_diff_word, schubert_expand, Memo};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{determinant, Family, Monomial, Polynomial, Variable};

pub use schur::{
    grassmannian_permutation, matrix_det, q_bjs, q_column_flagged, q_complete,
    q_factorial_schur, q_grassmannian_double, q_monomial, q_multi_schur, q_row_difference_schur,
    q_row_flagged, q_rv_double, q_rv_double_with, q_schur, q_xy_complete, q_xy_elementary,
    YFlagRule,
};

/// Where quantum elementary polynomials come from. The standard source is
/// the Givental-Kim recurrence; other sources exist to check that the
/// identity suites notice a wrong input.
pub trait ElementarySource: Sync {
    /// `e~_k(X_r)`.
    fn e(&self, k: i64, r: usize) -> Polynomial;

    /// Whether results built from this source may share the global caches.
    fn is_standard(&self) -> bool {
        false
    }
}

/// `e~_k(X_r)` from the Givental-Kim recurrence.
#[derive(Clone, Copy, Debug, Default)]
pub struct Standard;

impl ElementarySource for Standard {
    fn e(&self, k: i64, r: usize) -> Polynomial {
        (*q_elementary(k, r)).clone()
    }

    fn is_standard(&self) -> bool {
        true
    }
}

/// The standard source with the sign of `q_1` flipped in `e~_2(X_2)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SignFlippedE2;

impl ElementarySource for SignFlippedE2 {
    fn e(&self, k: i64, r: usize) -> Polynomial {
        if (k, r) == (2, 2) {
            Polynomial::x(1) * Polynomial::x(2) - Polynomial::q(1)
        } else {
            Standard.e(k, r)
        }
    }
}

static Q_ELEMENTARY: Memo<(i64, usize)> = Memo::new();

/// `e~_k(X_r)`: zero for `k < 0` or `k > r`, one for `k = 0`, otherwise
/// `e~_k(X_{r-1}) + x_r e~_{k-1}(X_{r-1}) + q_{r-1} e~_{k-2}(X_{r-2})`.
pub fn q_elementary(k: i64, r: usize) -> Arc<Polynomial> {
    if k < 0 || k as usize > r {
        return Arc::new(Polynomial::zero());
    }
    if k == 0 {
        return Arc::new(Polynomial::one());
    }
    Q_ELEMENTARY.get_or_compute(&(k, r), || {
        let mut acc = &*q_elementary(k, r - 1) + &(Polynomial::x(r) * &*q_elementary(k - 1, r - 1));
        if r >= 2 {
            acc += Polynomial::q(r - 1) * &*q_elementary(k - 2, r - 2);
        }
        acc
    })
}

/// `Delta_k(t | X_k) = sum_i e~_i(X_k) t^{k-i}`.
pub fn delta(k: usize, t: &Polynomial) -> Polynomial {
    delta_with(&Standard, k, t)
}

pub fn delta_with(src: &dyn ElementarySource, k: usize, t: &Polynomial) -> Polynomial {
    (0..=k)
        .map(|i| src.e(i as i64, k) * t.pow((k - i) as u32))
        .sum()
}

/// The tridiagonal Givental-Kim matrix of size `k` with `t` on the diagonal.
pub fn givental_kim_matrix(k: usize, t: &Polynomial) -> Vec<Vec<Polynomial>> {
    (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| {
                    if j == i {
                        Polynomial::x(i) + t
                    } else if j == i + 1 {
                        Polynomial::q(i)
                    } else if i == j + 1 {
                        Polynomial::constant(-1)
                    } else {
                        Polynomial::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// `Delta_k(t | X_k)` as the determinant of the Givental-Kim matrix.
pub fn delta_det(k: usize, t: &Polynomial) -> Polynomial {
    determinant(&givental_kim_matrix(k, t)).expect("square by construction")
}

/// `S~_{w0}(x, y)` of `S_n`.
pub fn q_w0_double(n: usize) -> Polynomial {
    q_w0_double_with(&Standard, n)
}

pub fn q_w0_double_with(src: &dyn ElementarySource, n: usize) -> Polynomial {
    (1..n)
        .map(|i| delta_with(src, i, &Polynomial::y(n - i)))
        .product()
}

/// Checks `w` against the ambient rank and returns it as an element of `S_n`.
pub(crate) fn in_rank(w: &Permutation, n: usize) -> Result<Permutation> {
    if w.support_rank() > n {
        return Err(Error::RankMismatch {
            expected: n,
            found: w.rank(),
        });
    }
    Ok(w.trim().extend(n))
}

/// Sums `prod_i e~_{k_i}(X_i) * coeff(k)` over the tuples `0 <= k_i <= i`
/// (`i = 1..n-1`) with `sum k_i` in `total` (all tuples when `None`).
fn sum_over_tuples<F>(
    src: &dyn ElementarySource,
    n: usize,
    total: Option<usize>,
    coeff: F,
) -> Polynomial
where
    F: Fn(&[usize]) -> Polynomial,
{
    struct Walk<'a, F> {
        src: &'a dyn ElementarySource,
        n: usize,
        total: Option<usize>,
        coeff: F,
        out: Polynomial,
    }

    impl<F: Fn(&[usize]) -> Polynomial> Walk<'_, F> {
        fn go(&mut self, ks: &mut Vec<usize>, sum: usize, prefix: &Polynomial) {
            let i = ks.len() + 1;
            if i == self.n {
                if self.total.is_some_and(|t| t != sum) {
                    return;
                }
                let c = (self.coeff)(ks);
                if !c.is_zero() {
                    self.out += prefix * &c;
                }
                return;
            }
            // slots i..n-1 can still add at most sum_{j=i}^{n-1} j
            let room: usize = (i..self.n).sum();
            for k in 0..=i {
                if let Some(t) = self.total {
                    if sum + k > t || sum + k + room - i < t {
                        continue;
                    }
                }
                let e = self.src.e(k as i64, i);
                if e.is_zero() {
                    continue;
                }
                ks.push(k);
                let next = prefix * &e;
                self.go(ks, sum + k, &next);
                ks.pop();
            }
        }
    }

    let mut walk = Walk {
        src,
        n,
        total,
        coeff,
        out: Polynomial::zero(),
    };
    walk.go(&mut Vec::new(), 0, &Polynomial::one());
    walk.out
}

/// `prod_i y_{n-i}^{i-k_i}`.
fn y_part(n: usize, ks: &[usize]) -> Polynomial {
    let powers = ks
        .iter()
        .enumerate()
        .map(|(idx, &k)| (Variable::y(n - idx - 1), (idx + 1 - k) as u32));
    Polynomial::term(Monomial::from_powers(powers), 1)
}

fn q_double_uncached(src: &dyn ElementarySource, w: &Permutation, n: usize) -> Polynomial {
    let word = w.compose(&Permutation::longest(n)).unwrap().reduced_word();
    sum_over_tuples(src, n, None, |ks| {
        divided_diff_word(&y_part(n, ks), &word, Family::Y)
    })
}

fn q_single_uncached(src: &dyn ElementarySource, w: &Permutation, n: usize) -> Polynomial {
    let word = w.compose(&Permutation::longest(n)).unwrap().reduced_word();
    sum_over_tuples(src, n, Some(w.length()), |ks| {
        Polynomial::constant(divided_diff_word(&y_part(n, ks), &word, Family::Y).constant_term())
    })
}

static Q_DOUBLE: Memo<(Permutation, usize)> = Memo::new();
static Q_SINGLE: Memo<(Permutation, usize)> = Memo::new();

/// `S~_w(x, y) = d^{(y)}_{w w0} S~_{w0}(x, y)` at ambient rank `n`.
pub fn q_double_schubert(w: &Permutation, n: usize) -> Result<Arc<Polynomial>> {
    let w = in_rank(w, n)?;
    Ok(Q_DOUBLE.get_or_compute(&(w.clone(), n), || {
        q_double_uncached(&Standard, &w, n)
    }))
}

pub fn q_double_schubert_with(
    src: &dyn ElementarySource,
    w: &Permutation,
    n: usize,
) -> Result<Arc<Polynomial>> {
    if src.is_standard() {
        return q_double_schubert(w, n);
    }
    let w = in_rank(w, n)?;
    Ok(Arc::new(q_double_uncached(src, &w, n)))
}

/// `S~_w(x) = S~_w(x, 0)` at ambient rank `n`.
pub fn q_schubert(w: &Permutation, n: usize) -> Result<Arc<Polynomial>> {
    let w = in_rank(w, n)?;
    Ok(Q_SINGLE.get_or_compute(&(w.clone(), n), || {
        q_single_uncached(&Standard, &w, n)
    }))
}

pub fn q_schubert_with(
    src: &dyn ElementarySource,
    w: &Permutation,
    n: usize,
) -> Result<Arc<Polynomial>> {
    if src.is_standard() {
        return q_schubert(w, n);
    }
    let w = in_rank(w, n)?;
    Ok(Arc::new(q_single_uncached(src, &w, n)))
}

/// `S~_w(x)` at the smallest rank containing `w`.
pub fn q_schubert_min(w: &Permutation) -> Arc<Polynomial> {
    let w = w.trim();
    q_schubert(&w, w.rank()).expect("rank fits by construction")
}

/// Quantization: expand `f` in the Schubert basis, replace each `S_w` by
/// `S~_w`, and restrict to `x_1..x_n`, `q_1..q_{n-1}`.
pub fn quantize(f: &Polynomial, n: usize) -> Result<Polynomial> {
    let top = f.max_index(Family::X);
    if top > n {
        return Err(Error::ForeignVariables {
            var: Variable::x(top).to_string(),
            n,
        });
    }
    let expansion = schubert_expand(f)?;
    let mut out = Polynomial::zero();
    for (w, c) in expansion.iter() {
        out += q_schubert_min(w).scale(c);
    }
    Ok(out.restrict(n))
}

/// Quantization at the rank given by the largest `x` index of `f`.
pub fn quantize_auto(f: &Polynomial) -> Result<Polynomial> {
    quantize(f, f.max_index(Family::X).max(1))
}

/// `S~_{1^m x w}` at rank `m + |w|`.
pub fn stable_approx(w: &Permutation, m: usize) -> Polynomial {
    let padded = Permutation::pad(m, w);
    let n = padded.rank();
    (*q_schubert(&padded, n).expect("rank fits by construction")).clone()
}
