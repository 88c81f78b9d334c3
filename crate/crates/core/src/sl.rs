//! `SL(n, q)` acting on the non-zero vectors of `GF(q)^n`.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// `GF(q)` for `q` a prime or `4`, `8`, by addition and multiplication tables.
#[derive(Debug, Clone)]
pub struct FiniteField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, modulus) = match q {
            2 | 3 | 5 | 7 => (q, 0),
            // x^2 + x + 1 and x^3 + x + 1 over GF(2).
            4 => (2, 0b111),
            8 => (2, 0b1011),
            _ => {
                return Err(Error::UnsupportedParameters(format!(
                    "field of order {q} (supported: 2, 3, 4, 5, 7, 8)"
                )))
            }
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let (s, m) = if modulus == 0 {
                    ((a + b) % p, (a * b) % p)
                } else {
                    (a ^ b, gf2_mul(a, b, modulus, q))
                };
                add[a * q + b] = s as u8;
                mul[a * q + b] = m as u8;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8)
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u8
                }
            })
            .collect();
        Ok(FiniteField {
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u8 {
        (1..self.q as u8)
            .find(|&a| {
                let mut x = a;
                let mut k = 1;
                while x != 1 {
                    x = self.mul(x, a);
                    k += 1;
                }
                k == self.q - 1
            })
            .unwrap()
    }
}

fn gf2_mul(a: usize, b: usize, modulus: usize, q: usize) -> usize {
    let mut r = 0;
    let mut a = a;
    let mut b = b;
    while b > 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & q != 0 {
            a ^= modulus;
        }
    }
    r
}

type Matrix = Vec<Vec<u8>>;

fn apply(field: &FiniteField, m: &Matrix, v: &[u8]) -> Vec<u8> {
    // Row vector times matrix: the action is on the right, matching the
    // left-to-right permutation product.
    let n = v.len();
    (0..n)
        .map(|j| {
            (0..n).fold(0u8, |acc, i| field.add(acc, field.mul(v[i], m[i][j])))
        })
        .collect()
}

fn determinant(field: &FiniteField, m: &Matrix) -> u8 {
    let n = m.len();
    let mut a = m.clone();
    let mut det = 1u8;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if p != c {
            a.swap(p, c);
            det = field.neg(det);
        }
        det = field.mul(det, a[c][c]);
        let inv = field.inv(a[c][c]);
        for r in c + 1..n {
            let f = field.mul(a[r][c], inv);
            for k in c..n {
                let t = field.mul(f, a[c][k]);
                a[r][k] = field.add(a[r][k], field.neg(t));
            }
        }
    }
    det
}

/// Index of a vector among the `q^n - 1` non-zero vectors (base-`q` digits minus one).
fn encode(v: &[u8], q: usize) -> u32 {
    (v.iter().fold(0usize, |acc, &x| acc * q + x as usize) - 1) as u32
}

fn decode(mut k: usize, q: usize, n: usize) -> Vec<u8> {
    k += 1;
    let mut v = vec![0u8; n];
    for i in (0..n).rev() {
        v[i] = (k % q) as u8;
        k /= q;
    }
    v
}

fn matrix_to_perm(field: &FiniteField, m: &Matrix) -> Perm {
    let n = m.len();
    let q = field.order();
    let count = q.pow(n as u32) - 1;
    let images = (0..count)
        .map(|k| encode(&apply(field, m, &decode(k, q, n)), q))
        .collect();
    Perm::from_images_unchecked(images)
}

fn order_formula(n: u32, q: u64) -> u64 {
    // |SL(n,q)| = q^{n(n-1)/2} ∏_{i=2}^{n} (q^i - 1)
    let mut order = q.pow(n * (n - 1) / 2);
    for i in 2..=n {
        order *= q.pow(i) - 1;
    }
    order
}

/// `SL(n, q)` as a permutation group on the `q^n - 1` non-zero vectors.
///
/// Generators: the transvection `I + E_{12}`, the signed cyclic permutation
/// matrix `e_i -> e_{i+1}`, `e_n -> ±e_1`, and for non-prime `q` also
/// `diag(ω, ω⁻¹, 1, …)` with `ω` primitive. The choice is recorded in the
/// group metadata.
pub fn sl_to_perm(n: usize, q: usize) -> Result<PermGroup> {
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedParameters(format!(
            "SL({n}, {q}): dimension must be 2, 3 or 4"
        )));
    }
    let field = FiniteField::new(q)?;
    if q.pow(n as u32) - 1 > 1000 {
        return Err(Error::UnsupportedParameters(format!(
            "SL({n}, {q}): {} points exceeds the limit of 1000",
            q.pow(n as u32) - 1
        )));
    }
    let omega = field.primitive_element();
    let mut transvection: Matrix = (0..n)
        .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
        .collect();
    transvection[0][1] = 1;
    let mut cycle: Matrix = vec![vec![0u8; n]; n];
    for i in 0..n - 1 {
        cycle[i][i + 1] = 1;
    }
    cycle[n - 1][0] = 1;
    if determinant(&field, &cycle) != 1 {
        cycle[n - 1][0] = field.neg(1);
    }
    debug_assert_eq!(determinant(&field, &cycle), 1);
    let mut gens = vec![
        matrix_to_perm(&field, &transvection),
        matrix_to_perm(&field, &cycle),
    ];
    let prime = matches!(q, 2 | 3 | 5 | 7);
    if !prime {
        let mut diag: Matrix = (0..n)
            .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
            .collect();
        diag[0][0] = omega;
        diag[1][1] = field.inv(omega);
        gens.push(matrix_to_perm(&field, &diag));
    }
    let description = if prime {
        "transvection I+E12; signed cyclic permutation matrix".to_string()
    } else {
        format!("transvection I+E12; signed cyclic permutation matrix; diag(w, w^-1) with w = {omega}")
    };
    let degree = q.pow(n as u32) - 1;
    let group = PermGroup::new(degree, gens)?
        .named(format!("sl{n}_{q}"))
        .with_metadata("generators", description)
        .with_metadata("expected_order", order_formula(n as u32, q as u64).to_string());
    let expected = order_formula(n as u32, q as u64);
    if group.order() != expected {
        return Err(Error::Validation(format!(
            "SL({n}, {q}) generators give order {}, expected {expected}",
            group.order()
        )));
    }
    Ok(group)
}
