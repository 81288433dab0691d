//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Variables come in four indexed families. `x`, `y` and `q` carry the
//! geometric meaning (two alphabets and the deformation parameters); `z` is
//! an auxiliary third alphabet used where an identity needs one more set of
//! variables than `x` and `y`.
//!
//! Grading: `deg x_i = deg y_i = deg z_i = 1` and `deg q_i = 2`, so that
//! quantum Schubert polynomials are homogeneous of degree `l(w)`.
//!
//! Monomials are ordered graded-lexicographically, with `x < y < z < q` as
//! families and ascending index inside a family; the variable that comes
//! first in this list is the most significant one. Polynomials print their
//! terms from the largest monomial down, so output is byte-stable.

mod det;
mod ops;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub use det::determinant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    X,
    Y,
    Z,
    Q,
}

impl Family {
    pub fn weight(self) -> u32 {
        match self {
            Family::Q => 2,
            _ => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
            Family::Z => 'z',
            Family::Q => 'q',
        }
    }

    pub fn from_symbol(c: char) -> Option<Family> {
        match c {
            'x' => Some(Family::X),
            'y' => Some(Family::Y),
            'z' => Some(Family::Z),
            'q' => Some(Family::Q),
            _ => None,
        }
    }
}

/// An indexed variable such as `x3` or `q1`. Indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    family: Family,
    index: u32,
}

impl Variable {
    pub fn new(family: Family, index: u32) -> Variable {
        assert!(index >= 1, "variable indices start at 1");
        Variable { family, index }
    }

    pub fn x(i: usize) -> Variable {
        Variable::new(Family::X, i as u32)
    }

    pub fn y(i: usize) -> Variable {
        Variable::new(Family::Y, i as u32)
    }

    pub fn z(i: usize) -> Variable {
        Variable::new(Family::Z, i as u32)
    }

    pub fn q(i: usize) -> Variable {
        Variable::new(Family::Q, i as u32)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn weight(self) -> u32 {
        self.family.weight()
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.symbol(), self.index)
    }
}

/// A product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    powers: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Monomial {
        Monomial::power(v, 1)
    }

    pub fn power(v: Variable, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            degree: v.weight() * e,
            powers: vec![(v, e)],
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// merging repeats and dropping zero exponents.
    pub fn from_powers<I: IntoIterator<Item = (Variable, u32)>>(powers: I) -> Monomial {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_default() += e;
        }
        Monomial::from_sorted(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    fn from_sorted(powers: Vec<(Variable, u32)>) -> Monomial {
        let degree = powers.iter().map(|&(v, e)| v.weight() * e).sum();
        Monomial { degree, powers }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.powers
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        match self.powers.binary_search_by(|&(w, _)| w.cmp(&v)) {
            Ok(i) => self.powers[i].1,
            Err(_) => 0,
        }
    }

    /// Splits off the power of `v`: returns the rest and the exponent.
    pub fn split(&self, v: Variable) -> (Monomial, u32) {
        match self.powers.binary_search_by(|&(w, _)| w.cmp(&v)) {
            Ok(i) => {
                let mut powers = self.powers.clone();
                let (_, e) = powers.remove(i);
                (
                    Monomial {
                        degree: self.degree - v.weight() * e,
                        powers,
                    },
                    e,
                )
            }
            Err(_) => (self.clone(), 0),
        }
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.powers.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            degree: self.degree + other.degree,
            powers: out,
        }
    }

    /// Applies `f` to every variable; the image must preserve weights.
    pub fn rename<F: Fn(Variable) -> Variable>(&self, f: F) -> Monomial {
        Monomial::from_powers(self.powers.iter().map(|&(v, e)| (f(v), e)))
    }

    fn write_labeled(&self, f: &mut fmt::Formatter<'_>, labels: &Labels) -> fmt::Result {
        for (k, &(v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}{}", labels.symbol(v.family), v.index)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.powers.iter().zip(&other.powers) {
                if a.0 != b.0 {
                    // the monomial holding the earlier variable is larger
                    return b.0.cmp(&a.0);
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.powers.len().cmp(&other.powers.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        self.write_labeled(f, &Labels::default())
    }
}

/// Display names for the variable families.
#[derive(Clone, Copy, Debug)]
pub struct Labels {
    pub x: char,
    pub y: char,
    pub z: char,
    pub q: char,
}

impl Default for Labels {
    fn default() -> Self {
        Labels {
            x: 'x',
            y: 'y',
            z: 'z',
            q: 'q',
        }
    }
}

impl Labels {
    /// Renders the `y` family as `a`, the factorial-Schur convention.
    pub fn with_a_alphabet() -> Labels {
        Labels {
            y: 'a',
            ..Labels::default()
        }
    }

    fn symbol(&self, family: Family) -> char {
        match family {
            Family::X => self.x,
            Family::Y => self.y,
            Family::Z => self.z,
            Family::Q => self.q,
        }
    }
}

/// A polynomial in canonical form: no zero coefficients are stored, so two
/// polynomials are equal exactly when their term tables are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Polynomial {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn term<C: Into<BigInt>>(m: Monomial, c: C) -> Polynomial {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(v: Variable) -> Polynomial {
        Polynomial::term(Monomial::var(v), 1)
    }

    pub fn x(i: usize) -> Polynomial {
        Polynomial::var(Variable::x(i))
    }

    pub fn y(i: usize) -> Polynomial {
        Polynomial::var(Variable::y(i))
    }

    pub fn z(i: usize) -> Polynomial {
        Polynomial::var(Variable::z(i))
    }

    pub fn q(i: usize) -> Polynomial {
        Polynomial::var(Variable::q(i))
    }

    /// Sums the given terms, merging equal monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    /// Largest weighted degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// True for the zero polynomial and for polynomials whose terms all
    /// share one weighted degree.
    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(a), Some(b)) => a.degree() == b.degree(),
            _ => true,
        }
    }

    /// The weighted-degree-`d` component.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// All variables that occur, in ascending order.
    pub fn variables(&self) -> Vec<Variable> {
        let mut vs: Vec<Variable> = self.terms.keys().flat_map(|m| m.variables()).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Largest index of a variable of `family` that occurs (0 if none).
    pub fn max_index(&self, family: Family) -> usize {
        self.terms
            .keys()
            .flat_map(|m| m.variables())
            .filter(|v| v.family() == family)
            .map(Variable::index)
            .max()
            .unwrap_or(0)
    }

    pub fn involves_family(&self, family: Family) -> bool {
        self.terms
            .keys()
            .any(|m| m.variables().any(|v| v.family() == family))
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: std::collections::HashMap<Monomial, BigInt> =
            std::collections::HashMap::with_capacity(small.len() * large.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                let c = c1 * c2;
                *acc.entry(m1.mul(m2)).or_default() += c;
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Renders the polynomial with custom family names.
    pub fn display_with(&self, labels: Labels) -> impl fmt::Display + '_ {
        LabeledPolynomial { poly: self, labels }
    }
}

struct LabeledPolynomial<'a> {
    poly: &'a Polynomial,
    labels: Labels,
}

impl fmt::Display for LabeledPolynomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                m.write_labeled(f, &self.labels)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(Labels::default()).fmt(f)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign for Polynomial {
    fn sub_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                let f: fn(&Polynomial, &Polynomial) -> Polynomial = $body;
                f(self, rhs)
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| {
    let mut out = a.clone();
    out += b;
    out
});
forward_binop!(Sub, sub, |a, b| {
    let mut out = a.clone();
    out -= b;
    out
});
forward_binop!(Mul, mul, Polynomial::mul_impl);

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        let mut acc = Polynomial::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        let mut acc = Polynomial::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancels() {
        let a = Polynomial::x(1) + Polynomial::y(1);
        let b = Polynomial::x(1) - Polynomial::y(1);
        assert_eq!(a + b, p("2*x1"));
    }

    #[test]
    fn mul_expands() {
        let r = Polynomial::x(1) * p("x1*x2 + q1");
        assert_eq!(r, p("x1^2*x2 + x1*q1"));
        assert_eq!(r.to_string(), "x1^2*x2 + x1*q1");
    }

    #[test]
    fn zero_absorbs() {
        assert!((Polynomial::zero() * p("x1 + 3*q2")).is_zero());
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn graded_order_prints_largest_first() {
        assert_eq!(p("-q1 + x1^2").to_string(), "x1^2 - q1");
        assert_eq!(p("7 - q1*x1 + 3*x1^2*x2").to_string(), "3*x1^2*x2 - x1*q1 + 7");
        // x1*x3 > x2^2 in lex order with x1 most significant
        assert_eq!(p("x2^2 + x1*x3").to_string(), "x1*x3 + x2^2");
    }

    #[test]
    fn q_has_weight_two() {
        let e2 = p("x1*x2 + q1");
        assert!(e2.is_homogeneous());
        assert_eq!(e2.degree(), Some(2));
        assert!(!p("x1 + q1").is_homogeneous());
    }

    #[test]
    fn a_alphabet_relabels_y() {
        let s = p("x1*y2 - q1");
        assert_eq!(s.display_with(Labels::with_a_alphabet()).to_string(), "x1*a2 - q1");
    }
}
