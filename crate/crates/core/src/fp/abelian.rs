//! Abelianization through the Smith normal form of the relation matrix.

use super::presentation::Presentation;
use super::word::exponent_sums;
use crate::error::{Error, Result};

/// `Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `d_i | d_{i+1}` and `d_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abelianization {
    pub invariants: Vec<u64>,
    pub free_rank: usize,
}

impl Abelianization {
    /// Order of the abelianization, `None` when it is infinite.
    pub fn order(&self) -> Option<u64> {
        if self.free_rank > 0 {
            return None;
        }
        self.invariants
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    // Returns (g, s, t) with s*a + t*b = g >= 0.
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn combine(a: &[i128], ca: i128, b: &[i128], cb: i128) -> Result<Vec<i128>> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            x.checked_mul(ca)
                .and_then(|u| y.checked_mul(cb).and_then(|v| u.checked_add(v)))
                .ok_or(Error::Overflow("smith normal form"))
        })
        .collect()
}

/// Row lattice basis in echelon form, one row per pivot column.
struct EchelonBasis {
    cols: usize,
    rows: Vec<Option<Vec<i128>>>,
}

impl EchelonBasis {
    fn new(cols: usize) -> Self {
        EchelonBasis {
            cols,
            rows: vec![None; cols],
        }
    }

    fn insert(&mut self, mut v: Vec<i128>) -> Result<()> {
        for c in 0..self.cols {
            if v[c] == 0 {
                continue;
            }
            match self.rows[c].take() {
                None => {
                    if v[c] < 0 {
                        v.iter_mut().for_each(|x| *x = -*x);
                    }
                    self.rows[c] = Some(v);
                    return Ok(());
                }
                Some(pivot) => {
                    let (a, b) = (pivot[c], v[c]);
                    let (g, s, t) = ext_gcd(a, b);
                    let new_pivot = combine(&pivot, s, &v, t)?;
                    let rest = combine(&v, a / g, &pivot, -(b / g))?;
                    debug_assert_eq!(rest[c], 0);
                    self.rows[c] = Some(new_pivot);
                    v = rest;
                }
            }
        }
        Ok(())
    }

    fn into_matrix(self) -> Vec<Vec<i128>> {
        self.rows.into_iter().flatten().collect()
    }
}

/// Diagonal of the Smith normal form (non-zero entries, as absolute values,
/// each dividing the next).
pub fn smith_diagonal(rows: &[Vec<i64>], cols: usize) -> Result<Vec<u64>> {
    let mut basis = EchelonBasis::new(cols);
    for r in rows {
        basis.insert(r.iter().map(|&x| x as i128).collect())?;
    }
    let mut m = basis.into_matrix();
    let nrows = m.len();
    let mut diag = Vec::new();
    for t in 0..nrows.min(cols) {
        loop {
            // Smallest non-zero entry of the remaining block as pivot.
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in m.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Ok(diag);
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..nrows {
                let q = m[i][t].div_euclid(p);
                if q != 0 {
                    let pivot_row = m[t].clone();
                    m[i] = combine(&m[i], 1, &pivot_row, -q)?;
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = m[t][j].div_euclid(p);
                if q != 0 {
                    for row in m.iter_mut() {
                        row[j] = row[j]
                            .checked_sub(q.checked_mul(row[t]).ok_or(Error::Overflow("smith normal form"))?)
                            .ok_or(Error::Overflow("smith normal form"))?;
                    }
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any entry not divisible by p into row t.
            let bad = (t + 1..nrows).find(|&i| m[i][t + 1..].iter().any(|&x| x % p != 0));
            match bad {
                Some(i) => {
                    let other = m[i].clone();
                    m[t] = combine(&m[t], 1, &other, 1)?;
                }
                None => {
                    diag.push(p.unsigned_abs() as u64);
                    break;
                }
            }
        }
    }
    Ok(diag)
}

/// Abelian invariants of the presented group.
pub fn abelianization(p: &Presentation) -> Result<Abelianization> {
    let cols = p.num_generators();
    let rows: Vec<Vec<i64>> = p
        .relators()
        .iter()
        .map(|r| exponent_sums(r, cols))
        .collect();
    let diag = smith_diagonal(&rows, cols)?;
    Ok(Abelianization {
        invariants: diag.iter().copied().filter(|&d| d > 1).collect(),
        free_rank: cols - diag.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(text: &str) -> Abelianization {
        abelianization(&Presentation::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn small_presentations() {
        assert_eq!(
            ab("gens a\na^3"),
            Abelianization {
                invariants: vec![3],
                free_rank: 0
            }
        );
        assert_eq!(
            ab("gens x y\nx^2\ny^2\nx y x y x y"),
            Abelianization {
                invariants: vec![2],
                free_rank: 0
            }
        );
        assert_eq!(
            ab("gens a"),
            Abelianization {
                invariants: vec![],
                free_rank: 1
            }
        );
    }

    #[test]
    fn matrix_cases() {
        // [[2,0],[0,2],[3,3]] -> diag(1, 2)
        assert_eq!(
            smith_diagonal(&[vec![2, 0], vec![0, 2], vec![3, 3]], 2).unwrap(),
            vec![1, 2]
        );
        assert_eq!(smith_diagonal(&[vec![4, 0], vec![0, 6]], 2).unwrap(), vec![2, 12]);
        assert_eq!(smith_diagonal(&[vec![0, 0]], 2).unwrap(), Vec::<u64>::new());
        assert_eq!(
            smith_diagonal(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3).unwrap(),
            vec![2, 6, 12]
        );
    }

    #[test]
    fn z2_times_z4_and_free_part() {
        let a = ab("gens a b c\na^2\nb^4\na b a' b'");
        assert_eq!(a.invariants, vec![2, 4]);
        assert_eq!(a.free_rank, 1);
        assert_eq!(a.order(), None);
        assert_eq!(ab("gens a b\na^4\nb^6\na b a' b'").order(), Some(24));
    }
}
