//! Todd–Coxeter coset enumeration.
//!
//! The table is a flat `u32` array with one column per generator and one per
//! inverse. Coincidences are processed immediately through a union-find over
//! coset indices (smaller index survives, with path compression). Dead rows
//! are compacted away once they make up more than a quarter of the table.

use super::presentation::Presentation;
use super::word::{inverse, Letter, Word};
use crate::error::{Error, Result};
use crate::limits::DEFAULT_COSET_BUDGET;
use crate::perm::Perm;

const UNDEF: u32 = u32::MAX;
const COMPACT_MIN_ROWS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Relator scanning coset by coset, filling rows as they are reached.
    #[default]
    Hlt,
    /// Define the first undefined entry, then process deductions.
    Felsch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Maximum number of live cosets.
    pub budget: usize,
    pub strategy: Strategy,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            budget: DEFAULT_COSET_BUDGET,
            strategy: Strategy::Hlt,
        }
    }
}

impl EnumerationOptions {
    pub fn with_budget(budget: usize) -> Self {
        EnumerationOptions {
            budget,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub cosets_final: usize,
    pub cosets_peak: usize,
    pub cosets_defined: usize,
    pub coincidences: usize,
    pub deductions: usize,
    pub compactions: usize,
}

impl EnumerationStats {
    /// `key=value` lines.
    pub fn report(&self) -> String {
        format!(
            "cosets_final={}\ncosets_peak={}\ncoincidences={}\n",
            self.cosets_final, self.cosets_peak, self.coincidences
        )
    }
}

/// A complete, closed coset table. Coset 0 is the coset of the subgroup.
#[derive(Debug, Clone)]
pub struct CosetTable {
    ncols: usize,
    num_cosets: usize,
    table: Vec<u32>,
    stats: EnumerationStats,
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.num_cosets
    }

    pub fn num_generators(&self) -> usize {
        self.ncols / 2
    }

    pub fn stats(&self) -> &EnumerationStats {
        &self.stats
    }

    pub fn image(&self, coset: usize, letter: Letter) -> usize {
        self.table[coset * self.ncols + letter.column()] as usize
    }

    pub fn trace(&self, coset: usize, w: &[Letter]) -> usize {
        w.iter().fold(coset, |c, &l| self.image(c, l))
    }

    /// Action of generator `g` on the cosets.
    pub fn generator_perm(&self, g: usize) -> Perm {
        let images = (0..self.num_cosets)
            .map(|c| self.table[c * self.ncols + 2 * g])
            .collect();
        Perm::from_images_unchecked(images)
    }

    /// Whether every relator fixes every coset.
    pub fn relators_hold(&self, p: &Presentation) -> bool {
        (0..self.num_cosets).all(|c| p.relators().iter().all(|r| self.trace(c, r) == c))
    }

    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.num_cosets];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for x in 0..self.ncols {
                let d = self.table[c * self.ncols + x] as usize;
                if !seen[d] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    budget: usize,
    relators: Vec<Vec<usize>>,
    /// Felsch only: relator rotations (of relators and inverses) by first letter.
    conjugates_by_letter: Vec<Vec<Vec<usize>>>,
    queue: Vec<u32>,
    deductions: Vec<(u32, u32)>,
    track_deductions: bool,
    compact_min_rows: usize,
    stats: EnumerationStats,
}

impl Enumerator {
    fn new(p: &Presentation, opts: &EnumerationOptions) -> Self {
        let ncols = 2 * p.num_generators();
        let relators: Vec<Vec<usize>> = p
            .relators()
            .iter()
            .map(|r| r.iter().map(|l| l.column()).collect())
            .collect();
        let felsch = opts.strategy == Strategy::Felsch;
        let mut conjugates_by_letter = vec![Vec::new(); ncols];
        if felsch {
            let mut seen = std::collections::HashSet::new();
            for r in p.relators() {
                for w in [r.clone(), inverse(r)] {
                    for k in 0..w.len() {
                        let rot: Vec<usize> =
                            w[k..].iter().chain(&w[..k]).map(|l| l.column()).collect();
                        if seen.insert(rot.clone()) {
                            conjugates_by_letter[rot[0]].push(rot);
                        }
                    }
                }
            }
        }
        Enumerator {
            ncols,
            table: vec![UNDEF; ncols],
            parent: vec![0],
            live: 1,
            budget: opts.budget,
            relators,
            conjugates_by_letter,
            queue: Vec::new(),
            deductions: Vec::new(),
            track_deductions: felsch,
            compact_min_rows: COMPACT_MIN_ROWS,
            stats: EnumerationStats {
                cosets_peak: 1,
                cosets_defined: 1,
                ..Default::default()
            },
        }
    }

    #[inline]
    fn rows(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> u32 {
        self.table[c * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, d: u32) {
        self.table[c * self.ncols + x] = d;
    }

    #[inline]
    fn is_live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn budget_error(&self) -> Error {
        let mut stats = self.stats.clone();
        stats.cosets_final = self.live;
        Error::BudgetExceeded {
            budget: self.budget,
            stats,
        }
    }

    fn deduce(&mut self, c: usize, x: usize, d: usize) {
        self.set(c, x, d as u32);
        self.set(d, x ^ 1, c as u32);
        self.stats.deductions += 1;
        if self.track_deductions {
            self.deductions.push((c as u32, x as u32));
        }
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize> {
        if self.live >= self.budget {
            return Err(self.budget_error());
        }
        let d = self.rows();
        self.parent.push(d as u32);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.live += 1;
        self.stats.cosets_defined += 1;
        self.stats.cosets_peak = self.stats.cosets_peak.max(self.live);
        self.set(c, x, d as u32);
        self.set(d, x ^ 1, c as u32);
        if self.track_deductions {
            self.deductions.push((c as u32, x as u32));
        }
        Ok(d)
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        let mut k = c;
        while self.parent[k] as usize != r {
            let next = self.parent[k] as usize;
            self.parent[k] = r as u32;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let ra = self.rep(a);
        let rb = self.rep(b);
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo as u32;
            self.queue.push(hi as u32);
            self.live -= 1;
            self.stats.coincidences += 1;
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        let mut qi = 0;
        while qi < self.queue.len() {
            let g = self.queue[qi] as usize;
            qi += 1;
            for x in 0..self.ncols {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                let d = d as usize;
                self.set(d, x ^ 1, UNDEF);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x as usize);
                } else {
                    let nu_xi = self.get(nu, x ^ 1);
                    if nu_xi != UNDEF {
                        self.merge(mu, nu_xi as usize);
                    } else {
                        self.deduce(mu, x, nu);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `w` from coset `c`, defining new cosets to close gaps when
    /// `fill` is set. Returns early (without filling) otherwise.
    fn scan(&mut self, c: usize, w: &[usize], fill: bool) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut i = 0usize;
        let mut b = c;
        let mut j = w.len() as isize - 1;
        loop {
            while (i as isize) <= j {
                let next = self.get(f, w[i]);
                if next == UNDEF {
                    break;
                }
                f = next as usize;
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                let next = self.get(b, w[j as usize] ^ 1);
                if next == UNDEF {
                    break;
                }
                b = next as usize;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if i as isize == j {
                self.deduce(f, w[i], b);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    /// Renumbers live cosets consecutively, preserving their order. Returns
    /// the new index of the first live coset at or after `cursor`.
    fn compact(&mut self, cursor: usize) -> usize {
        let mut new_index = vec![UNDEF; self.rows()];
        let mut n = 0u32;
        for c in 0..self.rows() {
            if self.is_live(c) {
                new_index[c] = n;
                n += 1;
            }
        }
        let mut table = Vec::with_capacity(n as usize * self.ncols);
        for c in 0..self.rows() {
            if !self.is_live(c) {
                continue;
            }
            for x in 0..self.ncols {
                let d = self.get(c, x);
                table.push(if d == UNDEF { UNDEF } else { new_index[d as usize] });
            }
        }
        let new_cursor = (cursor..self.rows())
            .find(|&c| self.is_live(c))
            .map_or(n as usize, |c| new_index[c] as usize);
        self.table = table;
        self.parent = (0..n).collect();
        self.deductions.clear();
        new_cursor
    }

    fn should_compact(&self) -> bool {
        let rows = self.rows();
        rows >= self.compact_min_rows && (rows - self.live) * 4 > rows
    }

    fn run_hlt(&mut self) -> Result<()> {
        let mut a = 0usize;
        while a < self.rows() {
            if self.is_live(a) {
                for k in 0..self.relators.len() {
                    let r = std::mem::take(&mut self.relators[k]);
                    let res = self.scan(a, &r, true);
                    self.relators[k] = r;
                    res?;
                    if !self.is_live(a) {
                        break;
                    }
                }
                if self.is_live(a) {
                    for x in 0..self.ncols {
                        if self.get(a, x) == UNDEF {
                            self.define(a, x)?;
                        }
                    }
                }
            }
            a += 1;
            if self.should_compact() {
                a = self.compact(a);
                self.stats.compactions += 1;
            }
        }
        Ok(())
    }

    fn process_deductions(&mut self) -> Result<()> {
        while let Some((c, x)) = self.deductions.pop() {
            let (c, x) = (c as usize, x as usize);
            if !self.is_live(c) {
                continue;
            }
            let starts = [(c, x), (self.get(c, x) as usize, x ^ 1)];
            for (start, letter) in starts {
                if start == UNDEF as usize || !self.is_live(start) {
                    continue;
                }
                let conjugates = std::mem::take(&mut self.conjugates_by_letter[letter]);
                let mut res = Ok(());
                for r in &conjugates {
                    if !self.is_live(start) {
                        break;
                    }
                    res = self.scan(start, r, false);
                    if res.is_err() {
                        break;
                    }
                }
                self.conjugates_by_letter[letter] = conjugates;
                res?;
            }
        }
        Ok(())
    }

    fn run_felsch(&mut self) -> Result<()> {
        self.process_deductions()?;
        let mut a = 0usize;
        while a < self.rows() {
            if self.is_live(a) {
                if let Some(x) = (0..self.ncols).find(|&x| self.get(a, x) == UNDEF) {
                    self.define(a, x)?;
                    self.process_deductions()?;
                    continue;
                }
            }
            a += 1;
            if self.should_compact() && self.deductions.is_empty() {
                a = self.compact(a);
                self.stats.compactions += 1;
            }
        }
        // Every relator must now close at every coset; scan once more so a
        // missed deduction cannot leave an inconsistent table.
        let mut c = 0;
        while c < self.rows() {
            if self.is_live(c) {
                for k in 0..self.relators.len() {
                    let r = std::mem::take(&mut self.relators[k]);
                    let res = self.scan(c, &r, true);
                    self.relators[k] = r;
                    res?;
                    if !self.is_live(c) {
                        break;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    fn finish(mut self) -> CosetTable {
        self.compact(0);
        let num_cosets = self.parent.len();
        self.stats.cosets_final = num_cosets;
        debug_assert!(self.table.iter().all(|&d| d != UNDEF));
        CosetTable {
            ncols: self.ncols,
            num_cosets,
            table: self.table,
            stats: self.stats,
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup_words` in
/// the group presented by `p`.
///
/// With no subgroup words the number of cosets is the order of the group.
/// Fails with [`Error::BudgetExceeded`] (carrying the statistics so far) if
/// more than `opts.budget` cosets are alive at once.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_words: &[Word],
    opts: &EnumerationOptions,
) -> Result<CosetTable> {
    run(p, subgroup_words, opts, COMPACT_MIN_ROWS)
}

fn run(
    p: &Presentation,
    subgroup_words: &[Word],
    opts: &EnumerationOptions,
    compact_min_rows: usize,
) -> Result<CosetTable> {
    if opts.budget == 0 {
        return Err(Error::Validation("coset budget must be at least 1".into()));
    }
    let mut e = Enumerator::new(p, opts);
    e.compact_min_rows = compact_min_rows;
    for w in subgroup_words {
        let cols: Vec<usize> = w.iter().map(|l| l.column()).collect();
        e.scan(0, &cols, true)?;
    }
    match opts.strategy {
        Strategy::Hlt => e.run_hlt()?,
        Strategy::Felsch => e.run_felsch()?,
    }
    Ok(e.finish())
}
