use std::sync::Arc;

use super::{run_cases, Case, Mode, Report};
use crate::classical::{
    divided_diff_word, double_schubert, flagged_schur, schubert, schur,
};
use crate::error::{Error, Result};
use crate::perm::{Composition, Partition, PermClass, Permutation, SkewShape};
use crate::poly::{Family, Monomial, Polynomial, Variable};
use crate::quantum::{
    delta_det, grassmannian_permutation, matrix_det, q_bjs, q_complete, q_double_schubert,
    q_double_schubert_with, q_elementary, q_factorial_schur, q_grassmannian_double, q_monomial,
    q_row_difference_schur, q_row_flagged, q_rv_double, q_rv_double_with, q_schubert,
    q_schubert_with, q_schur, q_xy_complete, q_xy_elementary, quantize, ElementarySource,
    Standard, YFlagRule,
};

fn own(p: Arc<Polynomial>) -> Polynomial {
    Arc::try_unwrap(p).unwrap_or_else(|a| (*a).clone())
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

fn class(m: usize, c: PermClass) -> Vec<Permutation> {
    Permutation::all(m).into_iter().filter(|w| c.contains(w)).collect()
}

/// `prod_{i<n} Delta_i(y_{n-i} | X_i)` from the explicit tridiagonal
/// determinants.
pub fn top_class_det(n: usize) -> Polynomial {
    (1..n).map(|i| delta_det(i, &Polynomial::y(n - i))).product()
}

/// `f(x, y) -> f(y, -z)`.
pub fn to_y_minus_z(f: &Polynomial) -> Polynomial {
    f.substitute_with(|v| match v.family() {
        Family::X => Some(Polynomial::y(v.index())),
        Family::Y => Some(-Polynomial::z(v.index())),
        _ => None,
    })
}

fn no_y_error(what: &str) -> Error {
    Error::BadFlag(format!("{what} is undefined"))
}

// ---------------------------------------------------------------- Cauchy

pub fn suite_cauchy(n: usize) -> Vec<Report> {
    suite_cauchy_with(n, &Standard)
}

/// The quantum Cauchy identities at rank `n`, with the quantum Schubert side
/// built from `src` and the right-hand sides from explicit determinants.
pub fn suite_cauchy_with(n: usize, src: &'static dyn ElementarySource) -> Vec<Report> {
    let mut cases = Vec::new();
    cases.push(Case::new(format!("cauchy-single n={n}"), move || {
        let w0 = Permutation::longest(n);
        let mut lhs = Polynomial::zero();
        for w in Permutation::all(n) {
            let dual = schubert(&w.compose(&w0)?).rename_family(Family::X, Family::Y);
            lhs += &*q_schubert_with(src, &w, n)? * &dual;
        }
        Ok((top_class_det(n), lhs))
    }));
    cases.push(Case::new(format!("cauchy-double n={n}"), move || {
        let w0 = Permutation::longest(n);
        let mut lhs = Polynomial::zero();
        for w in Permutation::all(n) {
            let left = q_double_schubert_with(src, &w, n)?.rename_family(Family::Y, Family::Z);
            let right = to_y_minus_z(&double_schubert(&w.compose(&w0)?));
            lhs += left * right;
        }
        Ok((top_class_det(n), lhs))
    }));
    for w in Permutation::all(n) {
        cases.push(Case::new(format!("cauchy-interval w={w} n={n}"), move || {
            let winv = w.inverse();
            let mut lhs = Polynomial::zero();
            for u in Permutation::all(n) {
                let v = u.compose(&winv)?;
                if u.length() + v.length() != w.length() {
                    continue;
                }
                let left = q_double_schubert_with(src, &u, n)?.rename_family(Family::Y, Family::Z);
                lhs += left * to_y_minus_z(&double_schubert(&v));
            }
            Ok((own(q_double_schubert(&w, n)?), lhs))
        }));
    }
    vec![run_cases("cauchy", Mode::Assert, cases)]
}

// ---------------------------------------------------------------- Schur

/// `det(h~_{lambda_i - i + j}(X_{k+1-j}))_{k x k}`.
pub fn jacobi_trudi(lambda: &Partition, k: usize) -> Polynomial {
    matrix_det(k, |i, j| {
        let d = lambda.part(i) as i64 - i as i64 + j as i64;
        own(q_complete(d, k + 1 - j))
    })
}

/// Which row `Y` alphabet the `h~` side of the duality uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaIndex {
    /// Row `i` uses `Y_{gamma(r - i + 1)}`.
    Reversed,
    /// Row `i` uses `Y_{gamma(i)}`.
    Row,
}

/// The two sides of the duality between the column determinant in `e~` and
/// the row determinant in `h~`, with `r = l(lambda)` and
/// `gamma(j) = r + lambda_j - lambda'_{lambda_j}`.
pub fn duality_sides(lambda: &Partition, index: GammaIndex) -> (Polynomial, Polynomial) {
    let r = lambda.len();
    let m = lambda.part(1);
    let conj = lambda.conjugate();
    let left = matrix_det(m, |i, j| {
        let d = conj.part(i) as i64 - i as i64 + j as i64;
        q_xy_elementary(d, r + j - 1, r + i - conj.part(i))
    });
    let gamma = |j: usize| r + lambda.part(j) - conj.part(lambda.part(j));
    let right = matrix_det(r, |i, j| {
        let d = lambda.part(i) as i64 - i as i64 + j as i64;
        let y = match index {
            GammaIndex::Reversed => gamma(r + 1 - i),
            GammaIndex::Row => gamma(i),
        };
        q_xy_complete(d, r + 1 - j, y)
    });
    (left, right)
}

pub fn suite_schur(n: usize) -> Vec<Report> {
    let mut cases = Vec::new();
    for m in 2..=n {
        for r in 1..m {
            for lambda in Partition::in_box(r, m - r) {
                let l = lambda.clone();
                cases.push(Case::new(
                    format!("quantized-schur lambda={lambda} r={r} n={m}"),
                    move || {
                        let f = schur(&l, r);
                        Ok((quantize(&f, m)?, q_schur(&l, r, m)?))
                    },
                ));
                cases.push(Case::new(
                    format!("grassmannian-schubert lambda={lambda} r={r} n={m}"),
                    move || {
                        let w = grassmannian_permutation(&lambda, r, m)?;
                        Ok((own(q_schubert(&w, m)?), q_schur(&lambda, r, m)?))
                    },
                ));
            }
            for k in 0..=m - r {
                cases.push(Case::new(format!("row-complete k={k} r={r} n={m}"), move || {
                    let row = if k == 0 { Partition::empty() } else { shape(&[k]) };
                    Ok((q_schur(&row, r, m)?, own(q_complete(k as i64, r))))
                }));
            }
        }
    }
    for m in 1..=n {
        for w in class(m, PermClass::Dominant) {
            cases.push(Case::new(format!("dominant-monomial w={w} n={m}"), move || {
                let alpha = w.code();
                let x_alpha = monomial_x(&alpha);
                let expected = own(q_schubert(&w, m)?);
                let via_monomial = q_monomial(&alpha, m)?;
                if quantize(&x_alpha, m)? != expected {
                    return Ok((expected, quantize(&x_alpha, m)?));
                }
                Ok((expected, via_monomial))
            }));
        }
        for alpha in staircase_compositions(m) {
            cases.push(Case::new(format!("staircase-monomial alpha={alpha} n={m}"), move || {
                Ok((quantize(&monomial_x(&alpha), m)?, q_monomial(&alpha, m)?))
            }));
        }
        for w in Permutation::all(m) {
            cases.push(Case::new(format!("bjs w={w} n={m}"), move || {
                Ok((own(q_schubert(&w, m)?), q_bjs(&w, m)?))
            }));
        }
    }
    for k in 1..=n {
        for m in 0..=5usize {
            cases.push(Case::new(format!("eh-orthogonality n={k} m={m}"), move || {
                let mut sum = Polynomial::zero();
                for j in 0..=m {
                    let term = &*q_elementary((m - j) as i64, k + m - 1) * &*q_complete(j as i64, k);
                    if j % 2 == 0 {
                        sum += term;
                    } else {
                        sum -= term;
                    }
                }
                let delta = if m == 0 { Polynomial::one() } else { Polynomial::zero() };
                Ok((delta, sum))
            }));
        }
    }
    for k in 1..=n.min(4) {
        for lambda in Partition::in_box(k, 3) {
            cases.push(Case::new(format!("jacobi-trudi lambda={lambda} n={k}"), move || {
                let m = k + lambda.part(1);
                Ok((q_schur(&lambda, k, m)?, jacobi_trudi(&lambda, k)))
            }));
        }
    }
    let mut duality = Vec::new();
    let mut duality_row = Vec::new();
    for lambda in Partition::in_box(3, 3).into_iter().filter(|l| !l.is_empty()) {
        let l = lambda.clone();
        duality.push(Case::new(format!("duality-reversed lambda={lambda}"), move || {
            Ok(duality_sides(&l, GammaIndex::Reversed))
        }));
        duality_row.push(Case::new(format!("duality-row lambda={lambda}"), move || {
            Ok(duality_sides(&lambda, GammaIndex::Row))
        }));
    }
    vec![
        run_cases("schur", Mode::Assert, cases),
        run_cases("schur-duality", Mode::Report, duality),
        run_cases("schur-duality-row", Mode::Report, duality_row),
    ]
}

fn monomial_x(alpha: &Composition) -> Polynomial {
    let powers = alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &a)| (Variable::x(i + 1), a as u32));
    Polynomial::term(Monomial::from_powers(powers), 1)
}

/// All `alpha` with `alpha_i <= n - i`.
fn staircase_compositions(n: usize) -> Vec<Composition> {
    let mut out = vec![Vec::new()];
    for i in 1..=n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..=n - i).map(move |a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Composition::new).collect()
}

// ---------------------------------------------------------------- vexillary

/// `q_j = 0` for every `j >= m`.
fn cut_q(f: &Polynomial, m: usize) -> Polynomial {
    f.zero_where(|v| v.family() == Family::Q && v.index() >= m)
}

fn rv_flagged(w: &Permutation) -> Result<Polynomial> {
    q_row_flagged(&SkewShape::straight(w.shape()), w.theta().entries())
}

/// `(c_1, ..., c_{n-1})`.
fn short_code(w: &Permutation) -> Composition {
    let c = w.code();
    Composition::new(c.parts()[..w.rank() - 1].to_vec())
}

pub fn suite_counterexamples() -> Vec<Report> {
    let p = |s: &str| -> Polynomial { s.parse().expect("literal polynomial") };
    let mut cases = vec![
        Case::equal_text(
            "data 2431",
            "(2,1,1) (2,2,3)".into(),
            format!("{} {}", perm("2431").shape(), perm("2431").theta()),
        ),
        Case::equal_text(
            "data 2413",
            "(2,1) (2,2)".into(),
            format!("{} {}", perm("2413").shape(), perm("2413").theta()),
        ),
        Case::equal_text(
            "data 42513",
            "(3,1,2,0) (3,2,1) (1,3,3)".into(),
            format!(
                "{} {} {}",
                short_code(&perm("42513")),
                perm("42513").shape(),
                perm("42513").theta()
            ),
        ),
    ];
    cases.push(Case::new("counterexample 2431", move || {
        let rhs = q_row_flagged(&SkewShape::straight(shape(&[2, 1, 1])), &[2, 2, 3])? - p("q2*q3");
        Ok((own(q_schubert(&perm("2431"), 4)?), rhs))
    }));
    // the stated sign of the q2 term is wrong; the stated form is reported
    // separately
    cases.push(Case::new("counterexample 2413", move || {
        let rhs = q_row_flagged(&SkewShape::straight(shape(&[2, 1])), &[2, 2])?
            - p("q2*x1 + q2*x2 + q2*x3");
        Ok((own(q_schubert(&perm("2413"), 4)?), rhs))
    }));
    cases.push(Case::new("counterexample 42513", move || {
        let s = |w: &str| q_schubert(&perm(w), 5);
        let q3 = Polynomial::q(3);
        let rhs = own(s("42513")?) + &q3 * &(&*s("41235")? * &*s("12354")?) - &q3 * &*s("51234")?;
        let lhs = q_row_flagged(&SkewShape::straight(shape(&[3, 2, 1])), &[1, 3, 3])?;
        Ok((lhs, rhs))
    }));
    cases.push(Case::new("q3-derivative 42513", move || {
        let d = q_schubert(&perm("42513"), 5)?.q_partial(3);
        Ok((-own(q_schubert(&perm("42135"), 5)?), d))
    }));
    let stated = vec![Case::new("counterexample 2413 with +q2", move || {
        let rhs = q_row_flagged(&SkewShape::straight(shape(&[2, 1])), &[2, 2])?
            + p("q2*x1 + q2*x2 + q2*x3");
        Ok((own(q_schubert(&perm("2413"), 4)?), rhs))
    })];
    vec![
        run_cases("counterexamples", Mode::Assert, cases),
        run_cases("counterexamples-stated", Mode::Report, stated),
    ]
}

pub fn suite_vexillary(n: usize) -> Vec<Report> {
    let mut cases = Vec::new();
    let mut truncated = Vec::new();
    let mut clipped = Vec::new();
    for m in 1..=n {
        for w in class(m, PermClass::Rv) {
            let v = w.clone();
            cases.push(Case::new(format!("rv-flagged w={w} n={m}"), move || {
                Ok((own(q_schubert(&v, m)?), rv_flagged(&v)?))
            }));
            let v = w.clone();
            cases.push(Case::new(format!("rv-double w={w} n={m}"), move || {
                Ok((own(q_double_schubert(&v, m)?), q_rv_double(&v, m)?))
            }));
            clipped.push(Case::new(format!("rv-double-clipped w={w} n={m}"), move || {
                Ok((
                    own(q_double_schubert(&w, m)?),
                    q_rv_double_with(&w, m, YFlagRule::ClippedConjugate)?,
                ))
            }));
        }
        for w in class(m, PermClass::Dominant) {
            cases.push(Case::new(format!("dominant-double w={w} n={m}"), move || {
                let lambda = w.shape();
                let rows: Vec<(usize, usize)> =
                    (1..=lambda.len()).map(|i| (i, lambda.part(i))).collect();
                Ok((
                    own(q_double_schubert(&w, m)?),
                    q_row_difference_schur(&lambda, &rows)?,
                ))
            }));
        }
        for w in class(m, PermClass::Vexillary) {
            let v = w.clone();
            cases.push(Case::new(format!("vexillary-classical w={w}"), move || {
                Ok((own(schubert(&v)), flagged_schur(&SkewShape::straight(v.shape()), &v.theta())?))
            }));
            let Some(cut) = w.code().parts().iter().rposition(|&c| c != 0) else {
                continue;
            };
            let cut = cut + 1;
            truncated.push(Case::new(format!("q-truncation w={w} n={m} m={cut}"), move || {
                Ok((cut_q(&*q_schubert(&w, m)?, cut), cut_q(&rv_flagged(&w)?, cut)))
            }));
        }
    }
    for k in 2..=n.min(4) {
        cases.push(Case::new(format!("staircase-top n={k}"), move || {
            let stair = shape(&(1..k).rev().collect::<Vec<_>>());
            let rows: Vec<(usize, usize)> = (1..k).map(|i| (i, k - i)).collect();
            Ok((top_class_det(k), q_row_difference_schur(&stair, &rows)?))
        }));
    }
    vec![
        run_cases("vexillary", Mode::Assert, cases),
        run_cases("vexillary-truncated", Mode::Report, truncated),
        run_cases("vexillary-clipped", Mode::Report, clipped),
    ]
}

// ---------------------------------------------------------------- Grassmannian

/// The quantum factorial Schur function `s~_{22}(X_2 || a)` as a reference value, with
/// `a` written in the `y` alphabet.
pub const S22_FACTORIAL: &str = "q1^2 + q1*q2 - q2*x1^2 + 2*q1*x1*x2 + x1^2*x2^2 + q1*x1*y1 \
    - q2*x1*y1 + q1*x2*y1 + x1^2*x2*y1 + x1*x2^2*y1 + q1*y1^2 + x1*x2*y1^2 + q1*x1*y2 \
    - q2*x1*y2 + q1*x2*y2 + x1^2*x2*y2 + x1*x2^2*y2 - q2*y1*y2 + x1^2*y1*y2 \
    + 2*x1*x2*y1*y2 + x2^2*y1*y2 + x1*y1^2*y2 + x2*y1^2*y2 + q1*y2^2 + x1*x2*y2^2 \
    + x1*y1*y2^2 + x2*y1*y2^2 + y1^2*y2^2";

/// `(s+1, ..., n, 1, ..., s)`.
pub fn block_swap(r: usize, n: usize) -> Permutation {
    let s = n - r;
    Permutation::new((s + 1..=n).chain(1..=s).collect()).expect("a permutation")
}

/// `d^{(y)}_{w0^{(s)}} prod_{k=1}^{s} Delta_{n-k}(y_k | X_{n-k})` with explicit
/// determinants.
pub fn block_top_det(r: usize, n: usize) -> Polynomial {
    let s = n - r;
    let prod: Polynomial = (1..=s).map(|k| delta_det(n - k, &Polynomial::y(k))).product();
    divided_diff_word(&prod, &Permutation::longest(s).reduced_word(), Family::Y)
}

/// The left side of the factorial Cauchy formula: the sum over `lambda` in
/// the `r x (n-r)` box of `s~_lambda(x || z) s_{lambda^'}(y || -z)`, where
/// `lambda^` is the complement of `lambda` in the box.
pub fn factorial_cauchy_sum(r: usize, n: usize) -> Result<Polynomial> {
    let s = n - r;
    let mut out = Polynomial::zero();
    for lambda in Partition::in_box(r, s) {
        let hat = lambda.complement(r, s)?.conjugate();
        let dual = grassmannian_permutation(&hat, s, n)?;
        let left = q_factorial_schur(&lambda, r, n)?.rename_family(Family::Y, Family::Z);
        out += left * to_y_minus_z(&double_schubert(&dual));
    }
    Ok(out)
}

pub fn suite_grassmannian(n: usize) -> Vec<Report> {
    let mut cases = Vec::new();
    for m in 1..=n {
        for w in class(m, PermClass::Grassmannian) {
            cases.push(Case::new(format!("grassmannian-double w={w} n={m}"), move || {
                Ok((own(q_double_schubert(&w, m)?), q_grassmannian_double(&w, m)?))
            }));
        }
        for r in 1..m {
            let s = m - r;
            let uw0 = block_swap(r, m);
            // in the length-additive sum for S~_{uw0}, the dual index of each
            // Grassmannian w is Grassmannian with shape lambda^'
            for lambda in Partition::in_box(r, s) {
                let hat = lambda.complement(r, s).expect("in the box").conjugate();
                let expected = grassmannian_permutation(&hat, s, m).expect("in the box");
                let w = grassmannian_permutation(&lambda, r, m).expect("in the box");
                let index = w.compose(&uw0.inverse()).expect("same rank");
                cases.push(Case::equal_text(
                    format!("dual-index lambda={lambda} r={r} n={m}"),
                    expected.to_string(),
                    index.to_string(),
                ));
            }
            cases.push(Case::new(format!("factorial-cauchy r={r} n={m}"), move || {
                Ok((block_top_det(r, m), factorial_cauchy_sum(r, m)?))
            }));
            cases.push(Case::new(format!("block-top r={r} n={m}"), move || {
                Ok((own(q_double_schubert(&block_swap(r, m), m)?), block_top_det(r, m)))
            }));
            cases.push(Case::new(format!("block-elementary r={r} n={m}"), move || {
                let det = matrix_det(s, |i, j| {
                    q_xy_elementary(r as i64 - i as i64 + j as i64, r + j - 1, i)
                });
                Ok((own(q_double_schubert(&block_swap(r, m), m)?), det))
            }));
        }
    }
    cases.extend(s22_cases());
    vec![run_cases("grassmannian", Mode::Assert, cases)]
}

fn s22_cases() -> Vec<Case> {
    let reference = || -> Polynomial { S22_FACTORIAL.parse().expect("literal polynomial") };
    vec![
        Case::new("s22 tableaux", move || {
            Ok((reference(), q_factorial_schur(&shape(&[2, 2]), 2, 4)?))
        }),
        Case::new("s22 h-determinant", move || {
            let det = matrix_det(2, |i, j| {
                let d = 2 - i as i64 + j as i64;
                q_xy_complete(d, i, 2)
            });
            Ok((reference(), det))
        }),
        Case::new("s22 rv-rule", move || {
            Ok((reference(), q_rv_double(&perm("3412"), 4)?))
        }),
        Case::new("s22 e-determinant", move || {
            let det = matrix_det(2, |i, j| q_xy_elementary(2 - i as i64 + j as i64, 1 + j, i));
            Ok((reference(), det))
        }),
        Case::new("s22 grassmannian-rule", move || {
            Ok((reference(), q_grassmannian_double(&perm("3412"), 4)?))
        }),
    ]
}

// ---------------------------------------------------------------- factorization

/// `u = (w_1 - 1, ..., w_{n-1} - 1, n)` for `w` with `w_n = 1`.
pub fn drop_last_one(w: &Permutation) -> Option<Permutation> {
    let n = w.rank();
    if w.get(n) != 1 {
        return None;
    }
    let images = (1..n).map(|i| w.get(i) - 1).chain([n]).collect();
    Permutation::new(images).ok()
}

pub fn suite_factorization(n: usize) -> Vec<Report> {
    let mut cases = Vec::new();
    let mut literal = Vec::new();
    for a in 1..n {
        for b in 1..=n - a {
            for u in Permutation::all(a) {
                for v in Permutation::all(b) {
                    let u = u.clone();
                    cases.push(Case::new(format!("cross-product u={u} v={v}"), move || {
                        let m = a + b;
                        let lhs = q_schubert(&Permutation::cross(&u, &v), m)?;
                        let rhs = &*q_schubert(&u, m)? * &*q_schubert(&Permutation::pad(a, &v), m)?;
                        Ok((own(lhs), rhs))
                    }));
                }
            }
        }
    }
    for m in 1..=n {
        for w in Permutation::all(m) {
            let Some(u) = drop_last_one(&w) else { continue };
            let (w2, u2) = (w.clone(), u.clone());
            cases.push(Case::new(format!("drop-one w={w}"), move || {
                let rhs = &*q_schubert(&u2, m)? * &*q_elementary(m as i64 - 1, m - 1);
                Ok((own(q_schubert(&w2, m)?), rhs))
            }));
            literal.push(Case::new(format!("drop-one-stated w={w}"), move || {
                let rhs = &*q_schubert(&u, m)? * &*q_elementary(m as i64, m);
                Ok((own(q_schubert(&w, m)?), rhs))
            }));
        }
    }
    vec![
        run_cases("factorization", Mode::Assert, cases),
        run_cases("factorization-stated", Mode::Report, literal),
    ]
}

// ---------------------------------------------------------------- conjectures

/// Which `y` flag the skew double determinant uses in column `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnFlag {
    /// `phi'_{sigma(w^{-1})_j}`, indexed by the row lengths of the inverse
    /// skew diagram.
    RowLength,
    /// `phi'_j`.
    Direct,
}

/// `det(h~_{lambda_i - mu_j - i + j}(X_{phi_i} - Y_{phi'(j)}))` for a
/// 321-avoiding `w`.
pub fn skew_double_det(w: &Permutation, rule: ColumnFlag) -> Result<Polynomial> {
    let (sigma, phi) = w.skew_data()?;
    let (sigma_inv, phi_inv) = w.inverse().skew_data()?;
    let lengths = sigma_inv.row_lengths();
    let (lam, mu) = (sigma.outer(), sigma.inner());
    let size = lam.len();
    let mut yflag = Vec::with_capacity(size);
    for j in 1..=size {
        let idx = match rule {
            ColumnFlag::RowLength => *lengths.get(j - 1).ok_or_else(|| no_y_error("row length"))?,
            ColumnFlag::Direct => j,
        };
        if idx == 0 || idx > phi_inv.len() {
            return Err(no_y_error(&format!("phi'_{idx} of {w}")));
        }
        yflag.push(phi_inv.get(idx));
    }
    Ok(matrix_det(size, |i, j| {
        let d = lam.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
        q_xy_complete(d, phi.get(i), yflag[j - 1])
    }))
}

pub fn suite_conjectures(n: usize) -> Vec<Report> {
    let w = perm("2413");
    let (sigma, phi) = w.skew_data().expect("321-avoiding");
    let (_, phi_inv) = w.inverse().skew_data().expect("321-avoiding");
    let exact = vec![
        Case::equal_text(
            "data 2413",
            "(2,2)/(1) (1,2) (1,3)".into(),
            format!("{sigma} {phi} {phi_inv}"),
        ),
        Case::new("example 2413 h-determinant", || {
            let det = Polynomial::one() * q_xy_complete(1, 1, 1) * q_xy_complete(2, 2, 3)
                - q_xy_complete(3, 1, 3);
            Ok((own(q_double_schubert(&perm("2413"), 4)?), det))
        }),
        Case::new("example 2413 e-determinant", || {
            let det = q_xy_elementary(2, 2, 1) * q_xy_elementary(1, 3, 3) - q_xy_elementary(3, 3, 1);
            Ok((own(q_double_schubert(&perm("2413"), 4)?), det))
        }),
    ];
    let mut conj1 = Vec::new();
    let mut conj2 = Vec::new();
    let mut conj2_direct = Vec::new();
    for m in 1..=n {
        for w in class(m, PermClass::Avoiding321) {
            let v = w.clone();
            conj1.push(Case::new(format!("row-flagged w={w} n={m}"), move || {
                let (sigma, phi) = v.skew_data()?;
                Ok((own(q_schubert(&v, m)?), q_row_flagged(&sigma, phi.entries())?))
            }));
            let v = w.clone();
            conj2.push(Case::new(format!("skew-double w={w} n={m}"), move || {
                Ok((own(q_double_schubert(&v, m)?), skew_double_det(&v, ColumnFlag::RowLength)?))
            }));
            conj2_direct.push(Case::new(format!("skew-double-direct w={w} n={m}"), move || {
                Ok((own(q_double_schubert(&w, m)?), skew_double_det(&w, ColumnFlag::Direct)?))
            }));
        }
    }
    vec![
        run_cases("conjectures-example", Mode::Assert, exact),
        run_cases("conjecture-row-flagged", Mode::Report, conj1),
        run_cases("conjecture-skew-double", Mode::Report, conj2),
        run_cases("conjecture-skew-double-direct", Mode::Report, conj2_direct),
    ]
}
