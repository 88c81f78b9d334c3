//! Conjugation-closed families of distinct subgroups.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// An ordered list of subgroups of an ambient group.
///
/// Constructors in this module always produce pairwise distinct,
/// conjugation-closed families; [`SubgroupFamily::from_members`] accepts
/// arbitrary input and leaves checking to [`SubgroupFamily::distinctness_witness`]
/// and [`SubgroupFamily::closure_witness`].
#[derive(Clone, Debug)]
pub struct SubgroupFamily {
    ambient: PermGroup,
    members: Vec<Subgroup>,
    by_key: HashMap<Vec<Perm>, usize>,
}

impl SubgroupFamily {
    pub fn from_members(ambient: &PermGroup, members: Vec<Subgroup>) -> Self {
        let mut by_key = HashMap::new();
        for (i, m) in members.iter().enumerate() {
            if let Some(k) = m.key() {
                by_key.entry(k.to_vec()).or_insert(i);
            }
        }
        SubgroupFamily {
            ambient: ambient.clone(),
            members,
            by_key,
        }
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index of the member with the same elements as `h`.
    pub fn find(&self, h: &Subgroup) -> Option<usize> {
        match h.key() {
            Some(k) => self.by_key.get(k).copied(),
            None => self.members.iter().position(|m| m.same_elements(h)),
        }
    }

    /// A pair of equal members, if any.
    pub fn distinctness_witness(&self) -> Option<(usize, usize)> {
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                if self.members[i].same_elements(&self.members[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_distinct(&self) -> bool {
        self.distinctness_witness().is_none()
    }

    /// A member and an ambient generator whose conjugate is not a member.
    pub fn closure_witness(&self, limits: &Limits) -> Result<Option<(usize, Perm)>> {
        for (i, m) in self.members.iter().enumerate() {
            for g in self.ambient.generators() {
                if self.find(&m.conjugate(g, limits)?).is_none() {
                    return Ok(Some((i, g.clone())));
                }
            }
        }
        Ok(None)
    }

    pub fn is_conjugation_closed(&self, limits: &Limits) -> Result<bool> {
        Ok(self.closure_witness(limits)?.is_none())
    }

    /// The same members in the order `order[0], order[1], …`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.len()];
        if order.len() != self.len() || order.iter().any(|&i| i >= self.len() || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::Validation("not a permutation of the family".into()));
        }
        let members = order.iter().map(|&i| self.members[i].clone()).collect();
        Ok(Self::from_members(&self.ambient, members))
    }

    /// Whether every member is cyclic.
    pub fn all_cyclic(&self, limits: &Limits) -> Result<bool> {
        for m in &self.members {
            if m.cyclic_generator(limits)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Smallest conjugation-closed family of distinct subgroups containing the
/// seeds. Orbit algorithm over the ambient generators; members appear in
/// discovery order.
pub fn conjugation_closure(
    ambient: &PermGroup,
    seeds: Vec<Subgroup>,
    limits: &Limits,
) -> Result<SubgroupFamily> {
    let mut fam = SubgroupFamily::from_members(ambient, Vec::new());
    let push = |fam: &mut SubgroupFamily, h: Subgroup| -> Result<bool> {
        if fam.find(&h).is_some() {
            return Ok(false);
        }
        if fam.members.len() >= limits.family_cap {
            return Err(Error::FamilyTooLarge {
                cap: limits.family_cap,
            });
        }
        if let Some(k) = h.key() {
            fam.by_key.insert(k.to_vec(), fam.members.len());
        }
        fam.members.push(h);
        Ok(true)
    };
    for s in seeds {
        for g in s.generators() {
            ambient.check_member(g)?;
        }
        push(&mut fam, s)?;
    }
    let mut k = 0;
    while k < fam.members.len() {
        let current = fam.members[k].clone();
        for g in ambient.generators() {
            let c = current.conjugate(g, limits)?;
            push(&mut fam, c)?;
        }
        k += 1;
    }
    Ok(fam)
}

/// All cyclic subgroups of order exactly `m`, in order of first appearance
/// of a generator in the element enumeration.
pub fn cyclic_family(ambient: &PermGroup, m: u64, limits: &Limits) -> Result<SubgroupFamily> {
    let mut fam = SubgroupFamily::from_members(ambient, Vec::new());
    for x in ambient.elements(limits)? {
        if x.order() != m {
            continue;
        }
        let h = Subgroup::new(ambient, vec![x.clone()], limits)?;
        if fam.find(&h).is_none() {
            if fam.members.len() >= limits.family_cap {
                return Err(Error::FamilyTooLarge {
                    cap: limits.family_cap,
                });
            }
            if let Some(k) = h.key() {
                fam.by_key.insert(k.to_vec(), fam.members.len());
            }
            fam.members.push(h);
        }
    }
    Ok(fam)
}

/// Whether the members together generate the ambient group.
pub fn is_generating(fam: &SubgroupFamily) -> bool {
    generated_subgroup(fam).order() == fam.ambient().order()
}

/// `⟨∪F⟩` as a permutation group on the ambient points.
pub fn generated_subgroup(fam: &SubgroupFamily) -> PermGroup {
    let mut gens: Vec<Perm> = fam
        .members()
        .iter()
        .flat_map(|m| m.generators().iter().cloned())
        .collect();
    if gens.is_empty() {
        gens.push(fam.ambient().identity());
    }
    PermGroup::new(fam.ambient().degree(), gens).expect("members share the ambient degree")
}

/// Whether the exponent of every member divides `n`.
pub fn exponent_divides(fam: &SubgroupFamily, n: u64, limits: &Limits) -> Result<bool> {
    Ok(exponent_violation(fam, n, limits)?.is_none())
}

/// First member whose exponent does not divide `n`, with that exponent.
pub fn exponent_violation(
    fam: &SubgroupFamily,
    n: u64,
    limits: &Limits,
) -> Result<Option<(usize, u64)>> {
    for (i, m) in fam.members().iter().enumerate() {
        let e = m.exponent(limits)?;
        if !n.is_multiple_of(e) {
            return Ok(Some((i, e)));
        }
    }
    Ok(None)
}
