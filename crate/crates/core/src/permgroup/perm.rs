use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..d}`, stored 0-based.
///
/// Products act on the right: `a.compose(&b)` applies `a` first, then `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// From 1-based images; fails unless they form a permutation of `1..=d`.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        let mut out = Vec::with_capacity(d);
        for &i in images {
            if i == 0 || i as usize > d || seen[i as usize - 1] {
                return Err(Error::malformed(format!(
                    "images {:?} do not form a permutation of 1..{}",
                    images, d
                )));
            }
            seen[i as usize - 1] = true;
            out.push(i - 1);
        }
        Ok(Permutation { images: out })
    }

    /// From 1-based disjoint cycles, e.g. `&[&[1, 2, 3], &[4, 5]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (1..=degree as u32).collect();
        for cyc in cycles {
            for (k, &p) in cyc.iter().enumerate() {
                let q = cyc[(k + 1) % cyc.len()];
                if p == 0 || p as usize > degree || q as usize > degree {
                    return Err(Error::malformed(format!(
                        "cycle point out of range 1..{degree}"
                    )));
                }
                images[p as usize - 1] = q;
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<u32> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn compose(&self, then: &Self) -> Self {
        debug_assert_eq!(self.degree(), then.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| then.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![s];
            seen[s] = true;
            let mut p = self.apply(s);
            while p != s {
                seen[p] = true;
                cyc.push(p);
                p = self.apply(p);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num::integer::lcm(acc, c.len() as u64))
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}
