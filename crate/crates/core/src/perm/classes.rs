use std::fmt;
use std::str::FromStr;

use super::Permutation;
use crate::error::{Error, Result};

pub const DEFAULT_CLASS_CAP: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PermClass {
    Dominant,
    Grassmannian,
    Vexillary,
    Rv,
    Avoiding321,
    Smooth,
}

impl PermClass {
    pub const ALL: [PermClass; 6] = [
        PermClass::Dominant,
        PermClass::Grassmannian,
        PermClass::Vexillary,
        PermClass::Rv,
        PermClass::Avoiding321,
        PermClass::Smooth,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            PermClass::Dominant => "dominant",
            PermClass::Grassmannian => "grassmannian",
            PermClass::Vexillary => "vexillary",
            PermClass::Rv => "rv",
            PermClass::Avoiding321 => "avoiding321",
            PermClass::Smooth => "smooth",
        }
    }

    /// The patterns defining the class.
    pub fn patterns(self) -> &'static [&'static str] {
        match self {
            PermClass::Dominant => &["132"],
            PermClass::Grassmannian => &["321", "2143", "3142"],
            PermClass::Vexillary => &["2143"],
            PermClass::Rv => &["2143", "2413", "2431"],
            PermClass::Avoiding321 => &["321"],
            PermClass::Smooth => &["2143", "1324"],
        }
    }

    pub fn contains(self, w: &Permutation) -> bool {
        self.patterns()
            .iter()
            .all(|t| w.avoids(&t.parse().expect("static pattern")))
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for PermClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<PermClass> {
        PermClass::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// Class membership of one permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub tags: Vec<PermClass>,
    /// The descent of a Grassmannian permutation other than the identity.
    pub descent: Option<usize>,
}

impl Classification {
    pub fn has(&self, class: PermClass) -> bool {
        self.tags.contains(&class)
    }
}

impl Permutation {
    /// True when no subsequence of `self` is order-isomorphic to `pattern`.
    pub fn avoids(&self, pattern: &Permutation) -> bool {
        fn extend(w: &[u8], tau: &[u8], start: usize, chosen: &mut Vec<u8>) -> bool {
            let k = chosen.len();
            if k == tau.len() {
                return true;
            }
            let slots_left = tau.len() - k;
            for i in start..=w.len() - slots_left {
                let v = w[i];
                let consistent = chosen
                    .iter()
                    .zip(tau)
                    .all(|(&c, &t)| (c < v) == (t < tau[k]));
                if consistent {
                    chosen.push(v);
                    if extend(w, tau, i + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        if pattern.rank() > self.rank() {
            return true;
        }
        !extend(&self.images, &pattern.images, 0, &mut Vec::new())
    }

    pub fn classify(&self) -> Classification {
        let tags: Vec<PermClass> = PermClass::ALL
            .into_iter()
            .filter(|c| c.contains(self))
            .collect();
        let descent = if tags.contains(&PermClass::Grassmannian) {
            self.descents().first().copied()
        } else {
            None
        };
        Classification { tags, descent }
    }
}

/// All permutations of `S_n` in `class`, lexicographically.
pub fn enumerate_class(n: usize, class: PermClass, cap: usize) -> Result<Vec<Permutation>> {
    if n > cap {
        return Err(Error::RankTooLarge { n, cap });
    }
    Ok(Permutation::all(n)
        .into_iter()
        .filter(|w| class.contains(w))
        .collect())
}
