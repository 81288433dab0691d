use crate::error::{Error, Result};
use crate::perm::{Flag, Partition, SkewShape};
use crate::poly::{determinant, Family, Polynomial, Variable};

fn var(family: Family, i: usize) -> Polynomial {
    Polynomial::var(Variable::new(family, i as u32))
}

/// `e_k(v_1, ..., v_r)`; zero for `k < 0` or `k > r`.
pub fn elementary(k: i64, family: Family, r: usize) -> Polynomial {
    if k < 0 || k as usize > r {
        return Polynomial::zero();
    }
    let k = k as usize;
    // row[j] = e_j of the first i variables
    let mut row = vec![Polynomial::zero(); k + 1];
    row[0] = Polynomial::one();
    for i in 1..=r {
        let v = var(family, i);
        for j in (1..=k.min(i)).rev() {
            let add = &row[j - 1] * &v;
            row[j] += add;
        }
    }
    row.swap_remove(k)
}

/// `h_k(v_1, ..., v_r)`; zero for `k < 0`, and for `k > 0` when `r = 0`.
pub fn complete(k: i64, family: Family, r: usize) -> Polynomial {
    if k < 0 {
        return Polynomial::zero();
    }
    let k = k as usize;
    let mut row = vec![Polynomial::zero(); k + 1];
    row[0] = Polynomial::one();
    for i in 1..=r {
        let v = var(family, i);
        for j in 1..=k {
            let add = &row[j - 1] * &v;
            row[j] += add;
        }
    }
    row.swap_remove(k)
}

/// `s_lambda(x_1, ..., x_r)` as `det(h_{lambda_i - i + j}(X_r))`.
pub fn schur(lambda: &Partition, r: usize) -> Polynomial {
    let flag = vec![r; lambda.len()];
    row_flagged(&SkewShape::straight(lambda.clone()), &flag)
}

/// The row-flagged skew Schur function
/// `det(h_{lambda_i - mu_j - i + j}(X_{phi_i}))`.
pub fn flagged_schur(shape: &SkewShape, flag: &Flag) -> Result<Polynomial> {
    if flag.len() != shape.outer().len() {
        return Err(Error::BadFlag(format!(
            "flag {flag} has length {} but {shape} has {} rows",
            flag.len(),
            shape.outer().len()
        )));
    }
    Ok(row_flagged(shape, flag.entries()))
}

fn row_flagged(shape: &SkewShape, flag: &[usize]) -> Polynomial {
    let (lam, mu) = (shape.outer(), shape.inner());
    let m = lam.len();
    let matrix: Vec<Vec<Polynomial>> = (1..=m)
        .map(|i| {
            (1..=m)
                .map(|j| {
                    let k = lam.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                    complete(k, Family::X, flag[i - 1])
                })
                .collect()
        })
        .collect();
    determinant(&matrix).expect("square by construction")
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
    fn elementary_and_complete() {
        assert_eq!(elementary(2, Family::X, 2), p("x1*x2"));
        assert_eq!(elementary(2, Family::X, 3), p("x1*x2 + x1*x3 + x2*x3"));
        assert!(elementary(3, Family::X, 2).is_zero());
        assert!(elementary(-1, Family::X, 2).is_zero());
        assert!(elementary(0, Family::Y, 0).is_one());
        assert_eq!(complete(2, Family::Y, 2), p("y1^2 + y1*y2 + y2^2"));
        assert!(complete(1, Family::X, 0).is_zero());
        assert!(complete(0, Family::X, 0).is_one());
    }

    #[test]
    fn schur_of_hook() {
        assert_eq!(
            schur(&part(&[2, 1]), 3),
            p("x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2 + 2*x1*x2*x3")
        );
        assert!(schur(&Partition::empty(), 4).is_one());
        assert!(schur(&part(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn flagged_examples() {
        let shape = SkewShape::straight(part(&[1, 1]));
        let flag = Flag::new(vec![2, 3]).unwrap();
        assert_eq!(
            flagged_schur(&shape, &flag).unwrap(),
            p("x1*x2 + x1*x3 + x2*x3")
        );
        let short = Flag::new(vec![2]).unwrap();
        assert!(matches!(flagged_schur(&shape, &short), Err(Error::BadFlag(_))));
    }
}
