use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::schubert;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{Family, Polynomial};

/// Coefficients of a polynomial in the Schubert basis, keyed by trimmed
/// permutations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchubertExpansion {
    coefficients: BTreeMap<Permutation, BigInt>,
}

impl SchubertExpansion {
    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.coefficients.iter()
    }

    pub fn get(&self, w: &Permutation) -> BigInt {
        self.coefficients
            .get(&w.trim())
            .cloned()
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `sum_w c_w S_w`.
    pub fn reconstruct(&self) -> Polynomial {
        self.iter().map(|(w, c)| schubert(w).scale(c)).sum()
    }
}

/// Expands `f` in `Z[x_1, ..., x_n]` as `sum_w c_w S_w` with
/// `c_w = (d_w f)(0)`.
///
/// `d_w f` is built breadth-first over the left weak order,
/// `d_{s_i u} f = d_i (d_u f)`, and branches die as soon as the derivative
/// vanishes. Every permutation with a nonzero coefficient has its code
/// supported in the first `n` positions, so rank `n + deg f` is enough room.
pub fn schubert_expand(f: &Polynomial) -> Result<SchubertExpansion> {
    let n = f.max_index(Family::X).max(1);
    if let Some(v) = f.variables().into_iter().find(|v| v.family() != Family::X) {
        return Err(Error::ForeignVariables {
            var: v.to_string(),
            n,
        });
    }
    let mut out = SchubertExpansion::default();
    let Some(degree) = f.degree() else {
        return Ok(out);
    };
    let rank = n + degree as usize;
    let mut level: HashMap<Permutation, Polynomial> =
        HashMap::from([(Permutation::identity(rank), f.clone())]);
    while !level.is_empty() {
        let mut next: HashMap<Permutation, Polynomial> = HashMap::new();
        for (u, g) in &level {
            let c = g.constant_term();
            if !c.is_zero() {
                out.coefficients.insert(u.trim(), c);
            }
            for i in 1..rank {
                if u.has_left_descent(i) {
                    continue;
                }
                let child = u.swap_values(i);
                if next.contains_key(&child) {
                    continue;
                }
                let d = g.divided_difference(Family::X, i);
                if !d.is_zero() {
                    next.insert(child, d);
                }
            }
        }
        level = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn expands_monomials() {
        let e = schubert_expand(&p("x1^2")).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&w("312")), BigInt::from(1));
        let e = schubert_expand(&p("x1*x2")).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&w("231")), BigInt::from(1));
    }

    #[test]
    fn expands_schubert_to_itself() {
        for v in Permutation::all(4) {
            let e = schubert_expand(&schubert(&v)).unwrap();
            assert_eq!(e.len(), 1, "{v}");
            assert_eq!(e.get(&v), BigInt::from(1));
        }
    }

    #[test]
    fn reconstruction() {
        for s in ["x2^3", "x1*x3^2 - 4*x2 + 7", "x1^2*x2^2*x3", "0"] {
            let f = p(s);
            assert_eq!(schubert_expand(&f).unwrap().reconstruct(), f, "{s}");
        }
    }

    #[test]
    fn rejects_foreign_variables() {
        assert!(matches!(
            schubert_expand(&p("x1 + q1")),
            Err(Error::ForeignVariables { .. })
        ));
        assert!(schubert_expand(&p("y1")).is_err());
    }
}
