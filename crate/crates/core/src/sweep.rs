//! Exhaustive check of the torsion-set divisor properties over every
//! homomorphism between catalog groups.
//!
//! For `f: X -> Y` and `n`, `f` is a `C_n`-equivalence iff it restricts to a
//! bijection `X_n -> Y_n`. The sweep checks, for every divisor `m | n`, that a
//! `C_n`-equivalence also restricts to a bijection `X_m -> Y_m`.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;

use crate::arith::divisors;
use crate::error::Result;
use crate::group::PermGroup;
use crate::hom::enumerate_hom_tables;
use crate::limits::Limits;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub groups: usize,
    pub pairs: usize,
    pub homomorphisms: u64,
    pub n_values: Vec<u64>,
    /// `(f, n)` pairs with `f` a `C_n`-equivalence.
    pub equivalences: u64,
    /// Divisor checks made on equivalences.
    pub lemma1a_checks: u64,
    /// `(f, n, m)` implications evaluated, vacuous ones included.
    pub lemma1b_checks: u64,
    /// Sorted descriptions of every failed check.
    pub violations: Vec<String>,
}

impl SweepReport {
    pub fn report(&self) -> String {
        let ns: Vec<String> = self.n_values.iter().map(u64::to_string).collect();
        let mut s = format!(
            "groups={}\npairs={}\nhomomorphisms={}\nn={}\nequivalences={}\nlemma1a_checks={}\nlemma1b_checks={}\nviolations={}\n",
            self.groups,
            self.pairs,
            self.homomorphisms,
            ns.join(","),
            self.equivalences,
            self.lemma1a_checks,
            self.lemma1b_checks,
            self.violations.len()
        );
        for v in &self.violations {
            s.push_str("violation=");
            s.push_str(v);
            s.push('\n');
        }
        s
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.homomorphisms += other.homomorphisms;
        self.equivalences += other.equivalences;
        self.lemma1a_checks += other.lemma1a_checks;
        self.lemma1b_checks += other.lemma1b_checks;
        self.violations.extend(other.violations);
        self
    }
}

/// Element orders of each group, aligned with its element table.
fn order_profile(g: &PermGroup, limits: &Limits) -> Result<Vec<u64>> {
    Ok(g.elements(limits)?.iter().map(|x| x.order()).collect())
}

/// Bijection test of `table` restricted to `X_m` onto `Y_m`.
fn bijective_on(table: &[u32], src_orders: &[u64], tgt_orders: &[u64], m: u64, stamp: &mut [u32], tag: u32) -> bool {
    let target_count = tgt_orders.iter().filter(|&&o| m.is_multiple_of(o)).count();
    let mut count = 0;
    for (i, &o) in src_orders.iter().enumerate() {
        if !m.is_multiple_of(o) {
            continue;
        }
        let y = table[i] as usize;
        if stamp[y] == tag {
            return false;
        }
        stamp[y] = tag;
        count += 1;
    }
    count == target_count
}

fn sweep_pair(
    (a, b): (usize, usize),
    groups: &[PermGroup],
    orders: &[Vec<u64>],
    ns: &[u64],
    limits: &Limits,
) -> Result<SweepReport> {
    let tables = enumerate_hom_tables(&groups[a], &groups[b], limits)?;
    let (so, to) = (&orders[a], &orders[b]);
    let mut out = SweepReport {
        homomorphisms: tables.len() as u64,
        ..SweepReport::default()
    };
    let mut stamp = vec![0u32; to.len()];
    let mut tag = 0u32;
    let name = |i: usize| groups[i].name().unwrap_or("?").to_string();
    for (h, table) in tables.iter().enumerate() {
        let mut equiv = |m: u64| {
            tag += 1;
            bijective_on(table, so, to, m, &mut stamp, tag)
        };
        for &n in ns {
            let premise = equiv(n);
            if premise {
                out.equivalences += 1;
            }
            for m in divisors(n) {
                let conclusion = equiv(m);
                out.lemma1b_checks += 1;
                if premise {
                    out.lemma1a_checks += 1;
                }
                if premise && !conclusion {
                    out.violations.push(format!(
                        "{}->{} hom#{h} n={n} m={m}",
                        name(a),
                        name(b)
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Runs the sweep over all ordered pairs of `groups`. `seed` shuffles the
/// processing order; the report does not depend on it.
pub fn property_sweep(
    groups: &[PermGroup],
    ns: &[u64],
    seed: Option<u64>,
    limits: &Limits,
) -> Result<SweepReport> {
    let orders = groups
        .iter()
        .map(|g| order_profile(g, limits))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs: Vec<(usize, usize)> = (0..groups.len())
        .flat_map(|a| (0..groups.len()).map(move |b| (a, b)))
        .collect();
    if let Some(s) = seed {
        pairs.shuffle(&mut StdRng::seed_from_u64(s));
    }
    let parts = pairs
        .par_iter()
        .map(|&p| sweep_pair(p, groups, &orders, ns, limits))
        .collect::<Result<Vec<_>>>()?;
    let mut total = parts.into_iter().fold(SweepReport::default(), SweepReport::merge);
    total.groups = groups.len();
    total.pairs = pairs.len();
    total.n_values = ns.to_vec();
    total.violations.sort();
    Ok(total)
}
