//! Coxeter matrices and their reflection families.

use crate::error::{Error, Result};
use crate::family::{conjugation_closure, SubgroupFamily};
use crate::fp::{todd_coxeter, EnumerationOptions, Letter, Presentation};
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::subgroup::Subgroup;

/// Symmetric matrix of Coxeter exponents; `None` stands for ∞.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    entries: Vec<Vec<Option<u32>>>,
}

impl CoxeterMatrix {
    /// From the strict upper triangle, row by row (`m_01, m_02, …, m_12, …`).
    pub fn from_upper(rank: usize, upper: &[Option<u32>]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Validation("Coxeter rank must be positive".into()));
        }
        if upper.len() != rank * (rank - 1) / 2 {
            return Err(Error::Validation(format!(
                "rank {rank} needs {} upper-triangle entries, got {}",
                rank * (rank - 1) / 2,
                upper.len()
            )));
        }
        let mut entries = vec![vec![Some(1); rank]; rank];
        let mut k = 0;
        for i in 0..rank {
            for j in i + 1..rank {
                let m = upper[k];
                if let Some(v) = m {
                    if v < 2 {
                        return Err(Error::Validation(format!(
                            "off-diagonal entry m_{i}{j} = {v} must be at least 2"
                        )));
                    }
                }
                entries[i][j] = m;
                entries[j][i] = m;
                k += 1;
            }
        }
        Ok(CoxeterMatrix { entries })
    }

    /// Text format: a rank line, then the upper-triangle integers with `0`
    /// denoting ∞.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap();
            for tok in line.split_whitespace() {
                let v: u32 = tok
                    .parse()
                    .map_err(|_| Error::parse(i + 1, format!("expected an integer, got {tok:?}")))?;
                tokens.push((i + 1, v));
            }
        }
        let (_, rank) = *tokens.first().ok_or_else(|| Error::parse(1, "missing rank"))?;
        let upper: Vec<Option<u32>> = tokens[1..]
            .iter()
            .map(|&(_, v)| if v == 0 { None } else { Some(v) })
            .collect();
        let line = tokens.last().map_or(1, |t| t.0);
        Self::from_upper(rank as usize, &upper).map_err(|e| Error::parse(line, e.to_string()))
    }

    /// `A_n`, `B_n`, `D_n`, `H3`, `H4`, `F4`, `E6`–`E8` and `I2(m)`.
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::UnsupportedParameters(format!("unknown Coxeter type {name:?}"));
        let name = name.trim();
        if let Some(m) = name.strip_prefix("I2(").and_then(|s| s.strip_suffix(')')) {
            let m: u32 = m.parse().map_err(|_| bad())?;
            return Self::from_upper(2, &[if m == 0 { None } else { Some(m) }]);
        }
        let (family, rank) = name.split_at(1);
        let rank: usize = rank.parse().map_err(|_| bad())?;
        if rank == 0 {
            return Err(bad());
        }
        // Linear diagrams with a list of (i, i+1) labels, plus branch points.
        let mut m = vec![vec![2u32; rank]; rank];
        for i in 0..rank {
            m[i][i] = 1;
            if i + 1 < rank {
                m[i][i + 1] = 3;
                m[i + 1][i] = 3;
            }
        }
        let set = |m: &mut Vec<Vec<u32>>, i: usize, j: usize, v: u32| {
            m[i][j] = v;
            m[j][i] = v;
        };
        match (family, rank) {
            ("A", _) => {}
            ("B", r) if r >= 2 => set(&mut m, r - 2, r - 1, 4),
            ("D", r) if r >= 4 => {
                set(&mut m, r - 2, r - 1, 2);
                set(&mut m, r - 3, r - 1, 3);
            }
            ("H", 3) | ("H", 4) => set(&mut m, 0, 1, 5),
            ("F", 4) => set(&mut m, 1, 2, 4),
            ("E", r) if (6..=8).contains(&r) => {
                // Chain 0-1-2-...-(r-2) with node r-1 attached to node 2.
                set(&mut m, r - 2, r - 1, 2);
                set(&mut m, 2, r - 1, 3);
            }
            _ => return Err(bad()),
        }
        let upper: Vec<Option<u32>> = (0..rank)
            .flat_map(|i| (i + 1..rank).map(move |j| (i, j)))
            .map(|(i, j)| Some(m[i][j]))
            .collect();
        Self::from_upper(rank, &upper)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[i][j]
    }

    /// `⟨x_1..x_r | x_i², (x_i x_j)^{m_ij}⟩`, omitting ∞ entries.
    pub fn presentation(&self) -> Presentation {
        let r = self.rank();
        let names = (1..=r).map(|i| format!("x{i}")).collect();
        let mut p = Presentation::new(names);
        for i in 0..r {
            p.add_relator(vec![Letter::gen(i); 2]).expect("declared generator");
        }
        for i in 0..r {
            for j in i + 1..r {
                if let Some(m) = self.entries[i][j] {
                    let w = [Letter::gen(i), Letter::gen(j)].repeat(m as usize);
                    p.add_relator(w).expect("declared generator");
                }
            }
        }
        p
    }

    /// The Coxeter group in its regular permutation representation.
    pub fn group(&self, opts: &EnumerationOptions) -> Result<PermGroup> {
        let p = self.presentation();
        let table = todd_coxeter(&p, &[], opts)?;
        let gens = (0..p.num_generators()).map(|g| table.generator_perm(g)).collect();
        let n = table.num_cosets();
        Ok(PermGroup::with_known_order(n, gens, n as u64))
    }
}

/// The Coxeter group of `m` with the conjugation closure of the subgroups
/// generated by the standard generators.
pub fn coxeter_reflection_family(
    m: &CoxeterMatrix,
    opts: &EnumerationOptions,
    limits: &Limits,
) -> Result<(PermGroup, SubgroupFamily)> {
    let w = m.group(opts)?;
    let seeds = w
        .generators()
        .iter()
        .map(|s| Subgroup::new(&w, vec![s.clone()], limits))
        .collect::<Result<Vec<_>>>()?;
    let fam = conjugation_closure(&w, seeds, limits)?;
    Ok((w, fam))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(name: &str) -> (PermGroup, SubgroupFamily) {
        let m = CoxeterMatrix::named(name).unwrap();
        coxeter_reflection_family(&m, &EnumerationOptions::default(), &Limits::default()).unwrap()
    }

    #[test]
    fn rank_two_examples() {
        let (w, fam) = family("A2");
        assert_eq!((w.order(), fam.len()), (6, 3));
        let (w, fam) = family("A1");
        assert_eq!((w.order(), fam.len()), (2, 1));
        let (w, fam) = family("B2");
        assert_eq!((w.order(), fam.len()), (8, 4));
    }

    #[test]
    fn group_orders() {
        let orders = [
            ("A3", 24),
            ("B3", 48),
            ("H3", 120),
            ("I2(5)", 10),
            ("I2(6)", 12),
            ("D4", 192),
            ("A4", 120),
        ];
        for (name, order) in orders {
            let m = CoxeterMatrix::named(name).unwrap();
            assert_eq!(m.group(&EnumerationOptions::default()).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn reflections_are_involutions() {
        let l = Limits::default();
        let (_, fam) = family("H3");
        assert_eq!(fam.len(), 15);
        assert!(fam.members().iter().all(|m| m.order() == 2));
        assert!(crate::family::exponent_divides(&fam, 2, &l).unwrap());
    }

    #[test]
    fn parse_text_format() {
        let m = CoxeterMatrix::parse("3\n3 2\n3\n").unwrap();
        assert_eq!(m, CoxeterMatrix::named("A3").unwrap());
        let inf = CoxeterMatrix::parse("2\n0").unwrap();
        assert_eq!(inf.entry(0, 1), None);
        assert!(CoxeterMatrix::parse("3\n3 2").is_err());
        assert!(CoxeterMatrix::parse("2\n1").is_err());
        assert!(matches!(CoxeterMatrix::parse("2\nx"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn infinite_groups_hit_the_budget() {
        let m = CoxeterMatrix::parse("2\n0").unwrap();
        assert!(matches!(
            m.group(&EnumerationOptions::with_budget(1000)),
            Err(Error::BudgetExceeded { .. })
        ));
        let affine = CoxeterMatrix::parse("3\n3 3\n3").unwrap();
        assert!(affine.group(&EnumerationOptions::with_budget(2000)).is_err());
    }
}
