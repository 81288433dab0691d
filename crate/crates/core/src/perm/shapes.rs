use std::fmt;
use std::str::FromStr;

use super::Permutation;
use crate::error::{Error, Result};

fn join(parts: &[usize]) -> String {
    parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidShape(s.to_string()))
        })
        .collect()
}

/// A finite sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Composition {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `alpha_i`, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> Composition {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    /// Whether `alpha_i <= n - i` for all `i` (containment in the staircase).
    pub fn fits_staircase(&self, n: usize) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &a)| a == 0 || i + 1 + a <= n)
    }

    /// Parts sorted decreasingly with zeros removed.
    pub fn sorted(&self) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition> {
        parse_list(s).map(Composition::new)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidShape(join(&parts)));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `lambda_i`, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition {
            parts: (1..=first)
                .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
                .collect(),
        }
    }

    /// Componentwise `self >= other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Fits inside `r` rows of length `s`.
    pub fn fits_box(&self, r: usize, s: usize) -> bool {
        self.len() <= r && self.part(1) <= s
    }

    /// `hat(lambda)_i = s - lambda_{r+1-i}` inside the `r x s` box.
    pub fn complement(&self, r: usize, s: usize) -> Result<Partition> {
        if !self.fits_box(r, s) {
            return Err(Error::ShapeOutOfBox {
                shape: self.to_string(),
                rows: r,
                cols: s,
            });
        }
        Partition::new((1..=r).map(|i| s - self.part(r + 1 - i)).collect())
    }

    /// All partitions inside the `r x s` box, in reverse lexicographic order
    /// of parts, starting from the full box.
    pub fn in_box(r: usize, s: usize) -> Vec<Partition> {
        fn go(r: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if cur.len() == r {
                out.push(Partition::new(cur.clone()).unwrap());
                return;
            }
            for p in (0..=max).rev() {
                cur.push(p);
                go(r, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(r, s, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        Partition::new(parse_list(s)?)
    }
}

/// A skew diagram `outer / inner` with `inner` inside `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{outer}/{inner}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> SkewShape {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Row lengths `lambda_i - mu_i`.
    pub fn row_lengths(&self) -> Vec<usize> {
        (1..=self.outer.len())
            .map(|i| self.outer.part(i) - self.inner.part(i))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A weakly increasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Flag {
    entries: Vec<usize>,
}

impl Flag {
    pub fn new(entries: Vec<usize>) -> Result<Flag> {
        if entries.contains(&0) || entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BadFlag(join(&entries)));
        }
        Ok(Flag { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `phi_i`, 1-based.
    pub fn get(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.entries))
    }
}

impl FromStr for Flag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Flag> {
        Flag::new(parse_list(s)?)
    }
}

impl Permutation {
    /// The code sorted decreasingly.
    pub fn shape(&self) -> Partition {
        self.code().sorted()
    }

    /// The flag `theta(w)`: for each `i` with `c_i > 0`, `g_i = i` when no
    /// later code entry exceeds `c_i`, otherwise the last position `j > i`
    /// with `c_j > c_i`; sorted increasingly.
    pub fn theta(&self) -> Flag {
        let c = self.code();
        let c = c.parts();
        let mut g: Vec<usize> = (0..c.len())
            .filter(|&i| c[i] != 0)
            .map(|i| match (i + 1..c.len()).rev().find(|&j| c[j] > c[i]) {
                Some(j) => j + 1,
                None => i + 1,
            })
            .collect();
        g.sort_unstable();
        Flag { entries: g }
    }

    /// Positions of the nonzero code entries.
    pub fn phi_hat(&self) -> Flag {
        Flag {
            entries: self
                .code()
                .parts()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, _)| i + 1)
                .collect(),
        }
    }

    /// The skew shape `sigma(w)` and flag `phi_hat(w)` of a 321-avoiding
    /// permutation. Row `k` of the skew diagram occupies the columns
    /// `k - phi_k - c_{phi_k} + 1 ..= k - phi_k`; rows are shifted by a
    /// common amount so that the inner shape is nonnegative with a zero part.
    pub fn skew_data(&self) -> Result<(SkewShape, Flag)> {
        if !self.avoids(&Permutation::longest(3)) {
            return Err(Error::Not321Avoiding(self.to_string()));
        }
        let flag = self.phi_hat();
        let code = self.code();
        let rows: Vec<(i64, i64)> = flag
            .entries()
            .iter()
            .enumerate()
            .map(|(k, &p)| {
                let right = (k + 1) as i64 - p as i64;
                (right, right - code.part(p) as i64)
            })
            .collect();
        let shift = rows.iter().map(|&(_, left)| -left).max().unwrap_or(0);
        let outer = rows.iter().map(|&(r, _)| (r + shift) as usize).collect();
        let inner = rows.iter().map(|&(_, l)| (l + shift) as usize).collect();
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        Ok((shape, flag))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn shapes_of_permutations() {
        assert_eq!(w("13524").shape(), part(&[2, 1]));
        assert!(w("1234").shape().is_empty());
        assert_eq!(w("3241").shape(), part(&[2, 1, 1]));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(w("1342").theta().entries(), &[2, 3]);
        assert_eq!(w("321").theta().entries(), &[1, 2]);
        assert_eq!(w("2341").theta().entries(), &[1, 2, 3]);
        assert_eq!(w("2431").theta().entries(), &[2, 2, 3]);
        assert_eq!(w("2413").theta().entries(), &[2, 2]);
        assert_eq!(w("42513").theta().entries(), &[1, 3, 3]);
        assert_eq!(w("3142").theta().entries(), &[1, 3]);
        assert!(w("123").theta().is_empty());
    }

    #[test]
    fn theta_of_padded_longest() {
        for m in 0..4 {
            let p = Permutation::pad(m, &w("321"));
            assert_eq!(p.theta().entries(), &[m + 1, m + 2]);
        }
    }

    #[test]
    fn literal_theta_of_135624() {
        // the g_i rule gives 4, 3, 4 for the code (0,1,2,2)
        assert_eq!(w("135624").theta().entries(), &[3, 4, 4]);
    }

    #[test]
    fn skew_data_examples() {
        let (shape, flag) = w("2413").skew_data().unwrap();
        assert_eq!(shape.outer(), &part(&[2, 2]));
        assert_eq!(shape.inner(), &part(&[1]));
        assert_eq!(flag.entries(), &[1, 2]);
        assert_eq!(w("135624").skew_data().unwrap().1.entries(), &[2, 3, 4]);
        let (shape, flag) = w("1234").skew_data().unwrap();
        assert!(shape.outer().is_empty() && flag.is_empty());
        assert!(matches!(w("321").skew_data(), Err(Error::Not321Avoiding(_))));
    }

    #[test]
    fn partition_helpers() {
        assert_eq!(part(&[2, 1]).conjugate(), part(&[2, 1]));
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(part(&[2, 1]).complement(3, 2).unwrap(), part(&[2, 1]));
        assert!(matches!(
            part(&[3]).complement(2, 2),
            Err(Error::ShapeOutOfBox { .. })
        ));
        assert!(part(&[2, 2]).contains(&part(&[1])));
        assert!(!part(&[2]).contains(&part(&[1, 1])));
        assert_eq!(Partition::in_box(2, 2).len(), 6);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!("2,1,0".parse::<Partition>().unwrap(), part(&[2, 1]));
    }

    #[test]
    fn flags_must_increase() {
        assert!(Flag::new(vec![2, 1]).is_err());
        assert!(Flag::new(vec![0, 1]).is_err());
        assert_eq!(Flag::new(vec![2, 2, 3]).unwrap().len(), 3);
    }
}
