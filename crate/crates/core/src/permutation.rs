//! Permutations of the strand labels `1..=n`.

use std::fmt;

/// A bijection on `{1, ..., n}` stored as its image sequence.
///
/// Labels are 1-based: `images()[k - 1]` is the image of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Returns `None` unless `images` is a permutation of `1..=images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    /// Swaps the entries in slots `i` and `i + 1`.
    pub(crate) fn swap_slots(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// `self` followed by `other`, i.e. `k -> other(self(k))`. This matches
    /// concatenation of braid words.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&k| other.apply(k)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Cycle decomposition, each cycle starting at its smallest label.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(|c| c.len())
            .fold(1, num_integer::lcm)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let labels: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", labels.join(" "))?;
        }
        Ok(())
    }
}
