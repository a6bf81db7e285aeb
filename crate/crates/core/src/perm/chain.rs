//! Deterministic Schreier-Sims stabilizer chain.

use num_bigint::BigUint;

use super::Permutation;

struct Level {
    base: u32,
    gens: Vec<Permutation>,
    /// `transversal[b]` maps the base point to `b`, with its inverse.
    transversal: Vec<Option<(Permutation, Permutation)>>,
    orbit: Vec<u32>,
}

/// Base and strong generating set for a permutation group.
///
/// Levels are created on demand; the base point of a new level is the
/// smallest point moved by the element that forces its creation, so the base
/// is a subsequence of points stabilized in increasing order of need.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn from_generators<'a>(
        degree: usize,
        gens: impl IntoIterator<Item = &'a Permutation>,
    ) -> Self {
        let mut chain = StabChain::new(degree);
        for g in gens {
            chain.insert(0, g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Basic orbit lengths, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> impl Iterator<Item = &Permutation> {
        self.levels.iter().flat_map(|l| l.gens.iter())
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len())
    }

    /// Sifts `g` from level `from`; returns the residue and the level at
    /// which sifting stopped early (if it did).
    fn sift_from(&self, from: usize, mut g: Permutation) -> (Permutation, Option<usize>) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let c = g.apply(level.base);
            match &level.transversal[c as usize] {
                Some((_, inv)) => g = g.then(inv),
                None => return (g, Some(i)),
            }
        }
        (g, None)
    }

    /// Extends the group by `g`; returns whether the group grew.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        if self.contains(g) {
            return false;
        }
        self.insert(0, g.clone());
        true
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && {
            let (residue, stopped) = self.sift_from(0, g.clone());
            stopped.is_none() && residue.is_identity()
        }
    }

    /// Adds `g` (which fixes the base points of levels `< lvl`) to level `lvl`.
    fn insert(&mut self, lvl: usize, g: Permutation) {
        let (residue, stopped) = self.sift_from(lvl, g.clone());
        if stopped.is_none() && residue.is_identity() {
            return;
        }
        if lvl == self.levels.len() {
            let base = g
                .first_moved_point()
                .expect("non-identity element has a moved point");
            let mut transversal = vec![None; self.degree];
            let id = Permutation::identity(self.degree);
            transversal[base as usize] = Some((id.clone(), id));
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal,
                orbit: vec![base],
            });
        }
        self.levels[lvl].gens.push(g.clone());
        let reps: Vec<Permutation> = self.levels[lvl]
            .orbit
            .iter()
            .map(|&b| {
                let (t, _) = self.levels[lvl].transversal[b as usize]
                    .as_ref()
                    .expect("orbit point has a transversal");
                t.then(&g)
            })
            .collect();
        for h in reps {
            self.update(lvl, h);
        }
    }

    /// Processes the element `h` of level `lvl`'s group: extends the orbit or
    /// passes the Schreier generator down.
    fn update(&mut self, lvl: usize, h: Permutation) {
        let mut stack = vec![h];
        while let Some(h) = stack.pop() {
            let level = &self.levels[lvl];
            let c = h.apply(level.base) as usize;
            if let Some((_, inv)) = &level.transversal[c] {
                let schreier = h.then(inv);
                self.insert(lvl + 1, schreier);
            } else {
                let level = &mut self.levels[lvl];
                for g in &level.gens {
                    stack.push(h.then(g));
                }
                let inv = h.inverse();
                level.transversal[c] = Some((h, inv));
                level.orbit.push(c as u32);
            }
        }
    }
}
