use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Family, Monomial, Polynomial, Variable};
use crate::error::{Error, Result};

impl Polynomial {
    /// Replaces every occurrence of `v` by `r`.
    pub fn substitute(&self, v: Variable, r: &Polynomial) -> Polynomial {
        let mut powers: Vec<Polynomial> = vec![Polynomial::one()];
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            let (rest, e) = m.split(v);
            if e == 0 {
                out.add_term(rest, c.clone());
                continue;
            }
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * r;
                powers.push(next);
            }
            out += powers[e as usize].mul_monomial(&rest).scale(c);
        }
        out
    }

    /// Ring homomorphism sending each variable `v` to `image(v)`, or leaving
    /// it alone when `image` returns `None`.
    pub fn substitute_with<F>(&self, image: F) -> Polynomial
    where
        F: Fn(Variable) -> Option<Polynomial>,
    {
        let mut cache: HashMap<(Variable, u32), Option<Polynomial>> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            let mut fixed = Vec::new();
            let mut acc = Polynomial::constant(c.clone());
            for &(v, e) in m.powers() {
                let img = cache
                    .entry((v, e))
                    .or_insert_with(|| image(v).map(|p| p.pow(e)));
                match img {
                    Some(p) => acc = &acc * &*p,
                    None => fixed.push((v, e)),
                }
                if acc.is_zero() {
                    break;
                }
            }
            if !acc.is_zero() {
                out += acc.mul_monomial(&Monomial::from_powers(fixed));
            }
        }
        out
    }

    /// Renames variables through a weight-preserving map.
    pub fn rename<F: Fn(Variable) -> Variable>(&self, f: F) -> Polynomial {
        Polynomial::from_terms(self.terms().map(|(m, c)| (m.rename(&f), c.clone())))
    }

    /// Moves every variable of family `from` to family `to`, keeping indices.
    pub fn rename_family(&self, from: Family, to: Family) -> Polynomial {
        self.rename(|v| {
            if v.family() == from {
                Variable::new(to, v.index() as u32)
            } else {
                v
            }
        })
    }

    /// Keeps only the terms for which `keep` holds.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets every variable of `family` to zero.
    pub fn zero_family(&self, family: Family) -> Polynomial {
        self.filter_terms(|m| m.variables().all(|v| v.family() != family))
    }

    /// Sets to zero every variable for which `kill` holds.
    pub fn zero_where<F: Fn(Variable) -> bool>(&self, kill: F) -> Polynomial {
        self.filter_terms(|m| !m.variables().any(&kill))
    }

    /// Applies the simple transposition swapping `v_i` and `v_{i+1}` of the
    /// given family.
    pub fn adjacent_transpose(&self, family: Family, i: usize) -> Polynomial {
        let (a, b) = pair(family, i);
        self.rename(|v| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        })
    }

    /// Exact division by `v_i - v_{i+1}`.
    ///
    /// Terms are grouped by their cofactor in the other variables and by the
    /// total degree `d` in the pair. Within a group, the quotient
    /// coefficients are negated prefix sums of the dividend coefficients
    /// ordered by the exponent of `v_i`; the group divides exactly iff its
    /// coefficients sum to zero.
    pub fn exact_linear_div(&self, family: Family, i: usize) -> Result<Polynomial> {
        let (a, b) = pair(family, i);
        let mut groups: BTreeMap<(Monomial, u32), BTreeMap<u32, BigInt>> = BTreeMap::new();
        for (m, c) in self.terms() {
            let (rest, ea) = m.split(a);
            let (rest, eb) = rest.split(b);
            groups
                .entry((rest, ea + eb))
                .or_default()
                .insert(ea, c.clone());
        }
        let mut out = Polynomial::zero();
        for ((rest, d), coeffs) in groups {
            let mut running = BigInt::zero();
            for ea in 0..=d {
                if let Some(c) = coeffs.get(&ea) {
                    running -= c;
                }
                if ea == d {
                    if !running.is_zero() {
                        return Err(Error::NotDivisible(format!("{a} - {b}")));
                    }
                } else if !running.is_zero() {
                    let m = rest.mul(&Monomial::from_powers([(a, ea), (b, d - 1 - ea)]));
                    out.add_term(m, running.clone());
                }
            }
        }
        Ok(out)
    }

    /// The divided difference `(f - s_i f) / (v_i - v_{i+1})`.
    ///
    /// Computed term by term from
    /// `d(u^p v^r) = sum_{k=0}^{p-r-1} u^{p-1-k} v^{r+k}` for `p > r`
    /// (antisymmetric in `p`, `r`).
    pub fn divided_difference(&self, family: Family, i: usize) -> Polynomial {
        let (a, b) = pair(family, i);
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            let (rest, p) = m.split(a);
            let (rest, r) = rest.split(b);
            if p == r {
                continue;
            }
            let (hi, lo, coeff) = if p > r {
                (p, r, c.clone())
            } else {
                (r, p, -c)
            };
            for k in 0..(hi - lo) {
                let mono = rest.mul(&Monomial::from_powers([(a, hi - 1 - k), (b, lo + k)]));
                out.add_term(mono, coeff.clone());
            }
        }
        out
    }

    /// Restriction to the ring with `x_1..x_m` and `q_1..q_{m-1}`:
    /// sets `x_j = 0` for `j > m` and `q_j = 0` for `j >= m`.
    pub fn restrict(&self, m: usize) -> Polynomial {
        self.zero_where(|v| match v.family() {
            Family::X => v.index() > m,
            Family::Q => v.index() >= m,
            _ => false,
        })
    }

    /// Formal partial derivative with respect to `q_i`.
    pub fn q_partial(&self, i: usize) -> Polynomial {
        let v = Variable::q(i);
        let mut out = Polynomial::zero();
        for (m, c) in self.terms() {
            let (rest, e) = m.split(v);
            if e > 0 {
                let mono = rest.mul(&Monomial::power(v, e - 1));
                out.add_term(mono, c * BigInt::from(e));
            }
        }
        out
    }
}

fn pair(family: Family, i: usize) -> (Variable, Variable) {
    assert!(i >= 1, "transposition index starts at 1");
    (
        Variable::new(family, i as u32),
        Variable::new(family, i as u32 + 1),
    )
}
