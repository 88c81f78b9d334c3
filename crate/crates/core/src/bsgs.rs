//! Deterministic Schreier–Sims: base and strong generating set.

use crate::perm::Perm;

#[derive(Debug, Clone)]
struct Level {
    base_point: usize,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// `transversal[p]` maps the base point to `p`, for `p` in the orbit.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut level = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base_point] = Some(Perm::identity(degree));
        self.orbit = vec![self.base_point as u32];
        let mut k = 0;
        while k < self.orbit.len() {
            let p = self.orbit[k] as usize;
            for g in &self.gens {
                let q = g.apply(p);
                if self.transversal[q].is_none() {
                    let u = self.transversal[p].as_ref().unwrap().mul(g);
                    self.transversal[q] = Some(u);
                    self.orbit.push(q as u32);
                }
            }
            k += 1;
        }
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let gens: Vec<Perm> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut bsgs = Bsgs {
            degree,
            levels: Vec::new(),
        };
        if gens.is_empty() {
            return bsgs;
        }
        let mut base: Vec<usize> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                let moved = (0..degree).find(|&p| g.apply(p) != p).unwrap();
                base.push(moved);
            }
        }
        for (i, &b) in base.iter().enumerate() {
            let mut level = Level::new(b, degree);
            level.gens = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.apply(c) == c))
                .cloned()
                .collect();
            level.rebuild_orbit(degree);
            bsgs.levels.push(level);
        }
        bsgs.complete();
        bsgs
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            match self.find_missing_schreier_generator(iu) {
                Some((residue, drop)) => {
                    if drop == self.levels.len() {
                        let moved = (0..self.degree)
                            .find(|&p| residue.apply(p) != p)
                            .expect("non-identity residue");
                        self.levels.push(Level::new(moved, self.degree));
                    }
                    for l in iu + 1..=drop {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild_orbit(self.degree);
                    }
                    i = drop as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// Scans the Schreier generators of level `i`; returns the first one that
    /// does not sift through the levels below, with its residue and drop level.
    fn find_missing_schreier_generator(&self, i: usize) -> Option<(Perm, usize)> {
        let level = &self.levels[i];
        for &beta in &level.orbit {
            let u_beta = level.transversal[beta as usize].as_ref().unwrap();
            for s in &level.gens {
                let image = s.apply(beta as usize);
                let us = u_beta.mul(s);
                let u_image = level.transversal[image].as_ref().unwrap();
                if &us == u_image {
                    continue;
                }
                let h = us.mul(&u_image.inverse());
                let (residue, drop) = self.strip(h, i + 1);
                if drop < self.levels.len() || !residue.is_identity() {
                    return Some((residue, drop));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it went all the way).
    fn strip(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base_point);
            match &level.transversal[beta] {
                Some(u) => g = g.mul(&u.inverse()),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, drop) = self.strip(g.clone(), 0);
        drop == self.levels.len() && residue.is_identity()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Product of the fundamental orbit lengths, `None` on `u64` overflow.
    pub fn order(&self) -> Option<u64> {
        self.levels
            .iter()
            .try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64))
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }
}
