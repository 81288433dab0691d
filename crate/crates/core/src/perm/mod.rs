//! Permutations in one-line notation and their combinatorial statistics.
//!
//! Composition follows functions: `(u * v)(i) = u(v(i))`. With this
//! convention `w * s_i` swaps the entries in positions `i, i+1` and
//! `s_i * w` swaps the values `i, i+1`; a reduced word `(a_1, ..., a_p)`
//! of `w` means `w = s_{a_1} * ... * s_{a_p}`.

mod classes;
mod shapes;
mod words;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use classes::{enumerate_class, Classification, PermClass, DEFAULT_CLASS_CAP};
pub use shapes::{Composition, Flag, Partition, SkewShape};
pub use words::compatible_sequences;

/// A bijection of `{1, ..., n}` stored by its images. The rank `n` is part
/// of the value: `132` and `1324` are different permutations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("rank {n} is too large")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// The longest element `w_0 = n (n-1) ... 1` of `S_n`.
    pub fn longest(n: usize) -> Permutation {
        Permutation {
            images: (1..=n as u8).rev().collect(),
        }
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Permutation {
        assert!(i >= 1 && i < n, "s_{i} is not in S_{n}");
        Permutation::identity(n).swap_positions(i)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count())
            .sum()
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.images
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.rank()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images: inv }
    }

    /// `self * other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(Permutation {
            images: other
                .images
                .iter()
                .map(|&v| self.images[v as usize - 1])
                .collect(),
        })
    }

    /// `w * s_i`: swaps positions `i` and `i+1`.
    pub fn swap_positions(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// `s_i * w`: swaps the values `i` and `i+1`.
    pub fn swap_values(&self, i: usize) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&v| match v as usize {
                x if x == i => v + 1,
                x if x == i + 1 => v - 1,
                _ => v,
            })
            .collect();
        Permutation { images }
    }

    /// True when `l(s_i * w) < l(w)`, i.e. the value `i+1` comes before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.images.iter().position(|&x| x as usize == v).unwrap();
        pos(i + 1) < pos(i)
    }

    /// The same permutation viewed in `S_n`, `n >= rank`.
    pub fn extend(&self, n: usize) -> Permutation {
        assert!(n >= self.rank(), "cannot shrink a permutation by extension");
        let mut images = self.images.clone();
        images.extend(self.rank() as u8 + 1..=n as u8);
        Permutation { images }
    }

    /// Drops trailing fixed points, keeping rank at least 1.
    pub fn trim(&self) -> Permutation {
        let mut images = self.images.clone();
        while images.len() > 1 && *images.last().unwrap() as usize == images.len() {
            images.pop();
        }
        Permutation { images }
    }

    /// Smallest `m` such that this permutation lies in `S_m` (at least 1).
    pub fn support_rank(&self) -> usize {
        self.trim().rank()
    }

    /// `u x v = (u_1, ..., u_m, v_1 + m, ..., v_n + m)`.
    pub fn cross(u: &Permutation, v: &Permutation) -> Permutation {
        let m = u.rank() as u8;
        let mut images = u.images.clone();
        images.extend(v.images.iter().map(|&x| x + m));
        Permutation { images }
    }

    /// `1^m x v`.
    pub fn pad(m: usize, v: &Permutation) -> Permutation {
        Permutation::cross(&Permutation::identity(m), v)
    }

    /// Lehmer code: `c_i = #{j > i : w_j < w_i}`, of length `n`.
    pub fn code(&self) -> Composition {
        let w = &self.images;
        Composition::new(
            (0..w.len())
                .map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count())
                .collect(),
        )
    }

    /// The permutation of smallest rank whose code is `c` padded by zeros.
    pub fn from_code(c: &Composition) -> Permutation {
        let parts = c.parts();
        let rank = parts
            .iter()
            .enumerate()
            .map(|(i, &ci)| ci + i + 1)
            .chain([parts.len(), 1])
            .max()
            .unwrap();
        Permutation::from_code_rank(c, rank).expect("minimal rank always admits the code")
    }

    /// The permutation in `S_n` with code `c`.
    pub fn from_code_rank(c: &Composition, n: usize) -> Result<Permutation> {
        let parts = c.parts();
        let invalid = || Error::InvalidCode {
            code: c.to_string(),
            rank: n,
        };
        if parts.len() > n && parts[n..].iter().any(|&p| p != 0) {
            return Err(invalid());
        }
        let mut available: Vec<u8> = (1..=n as u8).collect();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let ci = parts.get(i).copied().unwrap_or(0);
            if ci >= available.len() {
                return Err(invalid());
            }
            images.push(available.remove(ci));
        }
        Ok(Permutation { images })
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next permutation in lexicographic order
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }

    /// A reduced word for this permutation, chosen greedily by taking the
    /// leftmost right descent last.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(&i) = w.descents().first() {
            word.push(i);
            w = w.swap_positions(i);
        }
        word.reverse();
        word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() <= 9 {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.images.iter().map(u8::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts contiguous digits (`"13524"`) or a comma-separated list
    /// (`"10,3,1,..."`).
    fn from_str(s: &str) -> Result<Permutation> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(s.to_string());
        let images: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        if images.is_empty() {
            return Err(bad());
        }
        Permutation::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn code_examples() {
        assert_eq!(w("13524").code().parts(), &[0, 1, 2, 0, 0]);
        assert_eq!(w("12345").code().parts(), &[0, 0, 0, 0, 0]);
        assert_eq!(w("4213").code().parts(), &[3, 1, 0, 0]);
    }

    #[test]
    fn from_code_examples() {
        assert_eq!(Permutation::from_code(&Composition::new(vec![0, 1, 2, 0])), w("13524"));
        assert!(Permutation::from_code(&Composition::new(vec![])).is_identity());
        assert_eq!(Permutation::from_code(&Composition::new(vec![3, 1, 0, 0])), w("4213"));
        assert!(matches!(
            Permutation::from_code_rank(&Composition::new(vec![3]), 3),
            Err(Error::InvalidCode { .. })
        ));
    }

    #[test]
    fn group_operations() {
        assert_eq!(w("3142").inverse(), w("2413"));
        let w0 = Permutation::longest(3);
        assert_eq!(w0, w("321"));
        assert_eq!(w0.length(), 3);
        assert_eq!(w("13524").descents(), vec![3]);
        assert!(matches!(
            w("12").compose(&w("123")),
            Err(Error::RankMismatch { .. })
        ));
        assert_eq!(w("231").compose(&w("312")).unwrap(), w("123"));
    }

    #[test]
    fn swaps_match_composition() {
        let p = w("2413");
        let s2 = Permutation::simple(2, 4);
        assert_eq!(p.swap_positions(2), p.compose(&s2).unwrap());
        assert_eq!(p.swap_values(2), s2.compose(&p).unwrap());
    }

    #[test]
    fn embeddings() {
        assert_eq!(Permutation::cross(&w("21"), &w("21")), w("2143"));
        assert_eq!(Permutation::pad(2, &w("21")), w("1243"));
        assert_eq!(Permutation::pad(1, &w("321")), w("1432"));
    }

    #[test]
    fn text_forms() {
        assert_eq!(w("13524").to_string(), "13524");
        let big = Permutation::new((1..=10).rev().collect()).unwrap();
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
        assert!("1224".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("1,3".parse::<Permutation>().is_err());
    }

    #[test]
    fn enumerates_lexicographically() {
        let s3: Vec<String> = Permutation::all(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(s3, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Permutation::all(5).len(), 120);
    }

    #[test]
    fn reduced_word_multiplies_back() {
        for p in Permutation::all(4) {
            let mut acc = Permutation::identity(4);
            for &i in &p.reduced_word() {
                acc = acc.swap_positions(i);
            }
            assert_eq!(acc, p);
            assert_eq!(p.reduced_word().len(), p.length());
        }
    }
}
