//! Divided differences, Schubert and double Schubert polynomials, classical
//! symmetric functions and expansion in the Schubert basis.
//!
//! Double Schubert polynomials use the plus convention:
//! `S_{w0}(x, y) = prod_{i+j<=n} (x_i + y_j)`.

mod expand;
mod sym;

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use crate::perm::Permutation;
use crate::poly::{Family, Polynomial};

pub use expand::{schubert_expand, SchubertExpansion};
pub use sym::{complete, elementary, flagged_schur, schur};

/// Process-wide memo table. The lock is never held while a value is being
/// computed, so recursive lookups from several threads cannot deadlock; at
/// worst two threads compute the same entry.
pub(crate) struct Memo<K> {
    table: OnceLock<Mutex<HashMap<K, Arc<Polynomial>>>>,
}

impl<K: Eq + Hash + Clone> Memo<K> {
    pub(crate) const fn new() -> Memo<K> {
        Memo {
            table: OnceLock::new(),
        }
    }

    fn table(&self) -> &Mutex<HashMap<K, Arc<Polynomial>>> {
        self.table.get_or_init(Default::default)
    }

    pub(crate) fn get_or_compute<F>(&self, key: &K, compute: F) -> Arc<Polynomial>
    where
        F: FnOnce() -> Polynomial,
    {
        if let Some(hit) = self.table().lock().unwrap().get(key) {
            return Arc::clone(hit);
        }
        let value = Arc::new(compute());
        let mut table = self.table().lock().unwrap();
        Arc::clone(table.entry(key.clone()).or_insert(value))
    }
}

/// `d_i f` in the given family.
pub fn divided_diff(f: &Polynomial, i: usize, family: Family) -> Polynomial {
    f.divided_difference(family, i)
}

/// `d_{a_1} ... d_{a_p} f`, applying `d_{a_p}` first.
pub fn divided_diff_word(f: &Polynomial, word: &[usize], family: Family) -> Polynomial {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        if g.is_zero() {
            break;
        }
        g = g.divided_difference(family, i);
    }
    g
}

/// `d_w f` along a reduced word of `w`.
pub fn divided_diff_w(f: &Polynomial, w: &Permutation, family: Family) -> Polynomial {
    divided_diff_word(f, &w.reduced_word(), family)
}

/// `x^delta = x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
pub fn staircase_monomial(n: usize) -> Polynomial {
    (1..n).map(|i| Polynomial::x(i).pow((n - i) as u32)).product()
}

/// `prod_{i+j<=n} (x_i + y_j)`.
pub fn double_top(n: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for i in 1..n {
        for j in 1..=n - i {
            acc = &acc * &(Polynomial::x(i) + Polynomial::y(j));
        }
    }
    acc
}

static SCHUBERT: Memo<Permutation> = Memo::new();
static DOUBLE_SCHUBERT: Memo<Permutation> = Memo::new();

/// The Schubert polynomial `S_w(x)`. Stable under `w -> w x 1`.
pub fn schubert(w: &Permutation) -> Arc<Polynomial> {
    let w = w.trim();
    SCHUBERT.get_or_compute(&w, || {
        let n = w.rank();
        // S_w = d_i S_{w s_i} for any ascent i of w
        match (1..n).find(|&i| w.get(i) < w.get(i + 1)) {
            None => staircase_monomial(n),
            Some(i) => schubert(&w.swap_positions(i)).divided_difference(Family::X, i),
        }
    })
}

/// The double Schubert polynomial `S_w(x, y)` in the plus convention.
pub fn double_schubert(w: &Permutation) -> Arc<Polynomial> {
    let w = w.trim();
    DOUBLE_SCHUBERT.get_or_compute(&w, || {
        let n = w.rank();
        // d^{(y)}_i S_{w'} = S_{s_i w'} whenever s_i w' < w'
        match (1..n).find(|&i| !w.has_left_descent(i)) {
            None => double_top(n),
            Some(i) => double_schubert(&w.swap_values(i)).divided_difference(Family::Y, i),
        }
    })
}
