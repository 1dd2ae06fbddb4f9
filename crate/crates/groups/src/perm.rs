//! Permutations of a finite point set, stored as image vectors.

use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Build from an image vector; every point must appear exactly once.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` then `other`: (other * self)(i) = other(self(i)).
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn order(&self) -> u64 {
        let mut p = self.clone();
        let mut k = 1u64;
        while !p.is_identity() {
            p = p.then(self);
            k += 1;
        }
        k
    }
}

/// Brute-force group order by breadth-first closure under the generators.
/// Intended for cross-checking; caps at `limit` elements.
pub fn enumerate_order(generators: &[Perm], degree: usize, limit: usize) -> Option<u64> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue = vec![Perm::identity(degree)];
    seen.insert(Perm::identity(degree));
    while let Some(p) = queue.pop() {
        for g in generators {
            let next = p.then(g);
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push(next);
            }
        }
    }
    Some(seen.len() as u64)
}
