//! Group orders from a presentation by congruence closure on positive words,
//! independent of coset enumeration.
//!
//! Every generator must have a power relator `g^k`, so that `g'` can be
//! rewritten as `g^(k-1)`. Words up to length `L` are nodes of a complete
//! trie; relators are merged as `u r ~ u` and right multiplication is
//! propagated through union-find. Once every word of length `d + 1` is merged
//! with a shorter one, the classes of words of length `<= d` are exactly the
//! group elements.

#![allow(dead_code)]

use active_sum::fp::Presentation;

struct Closure {
    k: usize,
    parent: Vec<u32>,
    /// `wc[root * k + s]`: some `s`-child of a member of the class.
    wc: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl Closure {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            let (ra, rb) = (self.find(a), self.find(b));
            if ra == rb {
                continue;
            }
            let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[drop as usize] = keep;
            for s in 0..self.k {
                let ck = self.wc[keep as usize * self.k + s];
                let cd = self.wc[drop as usize * self.k + s];
                match (ck, cd) {
                    (NONE, NONE) => {}
                    (NONE, _) => self.wc[keep as usize * self.k + s] = cd,
                    (_, NONE) => {}
                    _ => queue.push((ck, cd)),
                }
            }
        }
    }
}

fn positive_relators(p: &Presentation) -> Vec<Vec<usize>> {
    let k = p.num_generators();
    let mut order = vec![None; k];
    for r in p.relators() {
        let g = r[0].generator();
        if r.iter().all(|l| l.generator() == g && !l.is_inverse()) {
            order[g] = Some(r.len());
        }
    }
    p.relators()
        .iter()
        .map(|r| {
            r.iter()
                .flat_map(|l| {
                    let g = l.generator();
                    let n = if l.is_inverse() {
                        order[g].expect("every generator needs a power relator") - 1
                    } else {
                        1
                    };
                    std::iter::repeat_n(g, n)
                })
                .collect()
        })
        .collect()
}

/// The order of the presented group, or `None` if the ball does not close
/// with words of length at most `max_len`.
pub fn oracle_order(p: &Presentation, max_len: usize) -> Option<u64> {
    let k = p.num_generators();
    if k == 0 {
        return Some(1);
    }
    let rels = positive_relators(p);
    let max_rel = rels.iter().map(Vec::len).max().unwrap_or(0);
    // level_start[l] = index of the first word of length l.
    let level_start = |l: usize| -> usize { (0..l).map(|i| k.pow(i as u32)).sum() };
    for d in 0.. {
        let len = d + 1 + max_rel;
        if len > max_len {
            return None;
        }
        let nodes = level_start(len + 1);
        let child = |x: usize, s: usize| x * k + s + 1;
        let mut c = Closure {
            k,
            parent: (0..nodes as u32).collect(),
            wc: (0..nodes * k)
                .map(|i| {
                    let ch = child(i / k, i % k);
                    if ch < nodes { ch as u32 } else { NONE }
                })
                .collect(),
        };
        for r in &rels {
            if r.len() > len {
                continue;
            }
            for u in 0..level_start(len - r.len() + 1) {
                let ur = r.iter().fold(u, |x, &s| child(x, s));
                c.union(u as u32, ur as u32);
            }
        }
        let short = level_start(d + 1);
        let mut roots: Vec<u32> = (0..short as u32).map(|x| c.find(x)).collect();
        roots.sort_unstable();
        roots.dedup();
        let closed = (short..level_start(d + 2)).all(|x| {
            let r = c.find(x as u32);
            roots.binary_search(&r).is_ok()
        });
        if closed {
            return Some(roots.len() as u64);
        }
    }
    unreachable!()
}
