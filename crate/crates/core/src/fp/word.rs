/// A generator or its formal inverse. Generator `g` is encoded as `2g`, its
/// inverse as `2g + 1`; the encoding doubles as the coset-table column.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter(u32);

impl Letter {
    pub fn gen(g: usize) -> Self {
        Letter(2 * g as u32)
    }

    pub fn inv(g: usize) -> Self {
        Letter(2 * g as u32 + 1)
    }

    pub fn generator(self) -> usize {
        (self.0 / 2) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    #[inline]
    pub fn column(self) -> usize {
        self.0 as usize
    }
}

pub type Word = Vec<Letter>;

/// `g^k` as a word; negative `k` uses the inverse letter.
pub fn power(g: usize, k: i64) -> Word {
    let letter = if k < 0 { Letter::inv(g) } else { Letter::gen(g) };
    vec![letter; k.unsigned_abs() as usize]
}

pub fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverse()).collect()
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancelling inverse pairs at the two ends.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == w[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

/// Lexicographically least rotation of `w` or of its inverse. Two cyclically
/// reduced relators with equal keys define the same normal closure.
pub fn cyclic_key(w: &[Letter]) -> Word {
    let inv = inverse(w);
    let mut best: Option<Word> = None;
    for cand in [w, inv.as_slice()] {
        for r in 0..cand.len().max(1) {
            let rot: Word = cand[r..].iter().chain(&cand[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// Exponent sum of every generator in `w`.
pub fn exponent_sums(w: &[Letter], num_generators: usize) -> Vec<i64> {
    let mut sums = vec![0i64; num_generators];
    for l in w {
        sums[l.generator()] += if l.is_inverse() { -1 } else { 1 };
    }
    sums
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Letter {
        Letter::gen(0)
    }
    fn ai() -> Letter {
        Letter::inv(0)
    }
    fn b() -> Letter {
        Letter::gen(1)
    }

    #[test]
    fn reductions() {
        assert_eq!(free_reduce(&[a(), ai(), b()]), vec![b()]);
        assert_eq!(free_reduce(&[ai(), a(), a(), ai()]), Vec::<Letter>::new());
        assert_eq!(cyclic_reduce(&[ai(), b(), a()]), vec![b()]);
        assert_eq!(cyclic_reduce(&[a(), b(), b(), ai()]), vec![b(), b()]);
    }

    #[test]
    fn keys_identify_rotations_and_inverses() {
        let w = vec![a(), b(), b()];
        let rot = vec![b(), a(), b()];
        let inv = inverse(&w);
        assert_eq!(cyclic_key(&w), cyclic_key(&rot));
        assert_eq!(cyclic_key(&w), cyclic_key(&inv));
        assert_ne!(cyclic_key(&w), cyclic_key(&[a(), a(), b()]));
    }

    #[test]
    fn powers_and_sums() {
        assert_eq!(power(1, -2), vec![Letter::inv(1), Letter::inv(1)]);
        assert_eq!(exponent_sums(&[a(), b(), ai(), ai()], 2), vec![-1, 1]);
    }
}
