//! Permutation group order via a base and strong generating set
//! (Schreier–Sims), with orbit/transversal chains.
//!
//! The implementation keeps one global strong generating set; level k of
//! the stabilizer chain uses the strong generators fixing the first k base
//! points, and the chain is strengthened until every Schreier generator
//! sifts to the identity. Group sizes here are small, so transversals are
//! simply rebuilt after each insertion.

use crate::perm::Perm;

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    base: Vec<usize>,
    strong: Vec<Perm>,
    /// transversals[k][p] = Some(g) with g(base[k]) = p, g fixing the
    /// earlier base points
    transversals: Vec<Vec<Option<Perm>>>,
}

impl PermGroup {
    pub fn from_generators(degree: usize, generators: &[Perm]) -> Self {
        let mut group = PermGroup {
            degree,
            base: Vec::new(),
            strong: Vec::new(),
            transversals: Vec::new(),
        };
        for g in generators {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            group.extend(g.clone());
        }
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn order(&self) -> u128 {
        self.transversals
            .iter()
            .map(|t| t.iter().filter(|e| e.is_some()).count() as u128)
            .product()
    }

    /// Strong generators fixing the first k base points.
    fn gens_at(&self, k: usize) -> Vec<Perm> {
        self.strong
            .iter()
            .filter(|g| (0..k).all(|i| g.apply(self.base[i]) == self.base[i]))
            .cloned()
            .collect()
    }

    fn rebuild(&mut self) {
        self.transversals.clear();
        for k in 0..self.base.len() {
            let gens = self.gens_at(k);
            let mut tr = vec![None; self.degree];
            tr[self.base[k]] = Some(Perm::identity(self.degree));
            let mut queue = vec![self.base[k]];
            while let Some(p) = queue.pop() {
                let to_p = tr[p].clone().unwrap();
                for g in &gens {
                    let q = g.apply(p);
                    if tr[q].is_none() {
                        tr[q] = Some(to_p.then(g));
                        queue.push(q);
                    }
                }
            }
            self.transversals.push(tr);
        }
    }

    /// Sift through the chain: returns the residue and the first level whose
    /// transversal cannot absorb it (the chain length if it fixes all bases).
    fn sift(&self, g: &Perm) -> (Perm, usize) {
        let mut h = g.clone();
        for (k, tr) in self.transversals.iter().enumerate() {
            let image = h.apply(self.base[k]);
            match &tr[image] {
                Some(t) => h = h.then(&t.inverse()),
                None => return (h, k),
            }
        }
        (h, self.base.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.sift(g).0.is_identity()
    }

    /// Insert a sift residue: a new strong generator fixing the first
    /// `depth` base points, extending the base when it fixes all of them.
    fn add_residue(&mut self, residue: Perm, depth: usize) {
        debug_assert!(!residue.is_identity());
        if depth == self.base.len() {
            let b = (0..self.degree)
                .find(|&p| residue.apply(p) != p)
                .expect("non-identity permutation moves a point");
            self.base.push(b);
        }
        self.strong.push(residue);
        self.rebuild();
    }

    pub fn extend(&mut self, g: Perm) {
        if g.is_identity() {
            return;
        }
        let (residue, depth) = self.sift(&g);
        if residue.is_identity() {
            return;
        }
        self.add_residue(residue, depth);
        self.strengthen();
    }

    /// Fixpoint pass: every Schreier generator at every level must sift to
    /// the identity; each failure adds a strong generator and restarts.
    /// Terminates because each insertion strictly grows the orbit product,
    /// which is bounded by the symmetric group order.
    fn strengthen(&mut self) {
        'outer: loop {
            for k in 0..self.base.len() {
                let gens = self.gens_at(k);
                let orbit: Vec<usize> = (0..self.degree)
                    .filter(|&p| self.transversals[k][p].is_some())
                    .collect();
                for &p in &orbit {
                    let to_p = self.transversals[k][p].clone().unwrap();
                    for g in &gens {
                        let q = g.apply(p);
                        let to_q = self.transversals[k][q]
                            .clone()
                            .expect("orbit closed under level generators");
                        let schreier = to_p.then(g).then(&to_q.inverse());
                        let (residue, depth) = self.sift(&schreier);
                        if !residue.is_identity() {
                            self.add_residue(residue, depth);
                            continue 'outer;
                        }
                    }
                }
            }
            return;
        }
    }

    /// Orbits of the group on its point set.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(p) = queue.pop() {
                for g in &self.strong {
                    let q = g.apply(p);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                        queue.push(q);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_order;

    fn cycle(degree: usize, points: &[usize]) -> Perm {
        let mut images: Vec<usize> = (0..degree).collect();
        for w in points.windows(2) {
            images[w[0]] = w[1];
        }
        if let (Some(&first), Some(&last)) = (points.first(), points.last()) {
            images[last] = first;
        }
        Perm::from_images(images).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        for n in 2..=7usize {
            let gens = vec![cycle(n, &[0, 1]), cycle(n, &(0..n).collect::<Vec<_>>())];
            let group = PermGroup::from_generators(n, &gens);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(group.order(), fact, "S_{n}");
        }
    }

    #[test]
    fn chain_order_matches_enumeration() {
        // dihedral of order 12, alternating A4, and a product of cycles
        let cases: Vec<(usize, Vec<Perm>)> = vec![
            (6, vec![cycle(6, &[0, 1, 2, 3, 4, 5]), {
                let mut im: Vec<usize> = (0..6).collect();
                im.swap(1, 5);
                im.swap(2, 4);
                Perm::from_images(im).unwrap()
            }]),
            (4, vec![cycle(4, &[0, 1, 2]), cycle(4, &[1, 2, 3])]),
            (7, vec![cycle(7, &[0, 1, 2]), cycle(7, &[3, 4]), cycle(7, &[5, 6])]),
        ];
        for (degree, gens) in cases {
            let group = PermGroup::from_generators(degree, &gens);
            let brute = enumerate_order(&gens, degree, 100_000).unwrap();
            assert_eq!(group.order(), brute as u128);
        }
    }

    #[test]
    fn membership_test() {
        let gens = vec![cycle(5, &[0, 1, 2, 3, 4])];
        let group = PermGroup::from_generators(5, &gens);
        assert_eq!(group.order(), 5);
        assert!(group.contains(&cycle(5, &[0, 2, 4, 1, 3])));
        assert!(!group.contains(&cycle(5, &[0, 1])));
    }
}
