use std::sync::Arc;

use crate::error::Result;
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::perm::Perm;

/// A subgroup of an ambient permutation group.
///
/// Subgroups compare equal iff their element sets agree. Up to
/// `Limits::subgroup_key` elements the sorted element list is cached and used
/// as the comparison key; larger subgroups fall back to order plus mutual
/// membership of generators.
#[derive(Clone)]
pub struct Subgroup {
    ambient: PermGroup,
    group: PermGroup,
    key: Option<Arc<Vec<Perm>>>,
}

impl Subgroup {
    pub fn new(ambient: &PermGroup, generators: Vec<Perm>, limits: &Limits) -> Result<Self> {
        let group = ambient.subgroup_generated(generators)?;
        Ok(Self::from_group(ambient, group, limits))
    }

    fn from_group(ambient: &PermGroup, group: PermGroup, limits: &Limits) -> Self {
        let key = if group.order() <= limits.subgroup_key.min(limits.element_listing) {
            let mut elements = group
                .elements(limits)
                .expect("order checked against cutoff")
                .to_vec();
            elements.sort_unstable();
            Some(Arc::new(elements))
        } else {
            None
        };
        Subgroup {
            ambient: ambient.clone(),
            group,
            key,
        }
    }

    /// The whole ambient group as a subgroup of itself.
    pub fn whole(ambient: &PermGroup, limits: &Limits) -> Self {
        Self::from_group(ambient, ambient.clone(), limits)
    }

    pub fn trivial(ambient: &PermGroup, limits: &Limits) -> Self {
        let group = PermGroup::new(ambient.degree(), vec![ambient.identity()])
            .expect("identity has the ambient degree");
        Self::from_group(ambient, group, limits)
    }

    pub fn ambient(&self) -> &PermGroup {
        &self.ambient
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn generators(&self) -> &[Perm] {
        self.group.generators()
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// Sorted element list, when the subgroup is small enough to carry one.
    pub fn key(&self) -> Option<&[Perm]> {
        self.key.as_deref().map(Vec::as_slice)
    }

    pub fn contains(&self, x: &Perm) -> bool {
        match &self.key {
            Some(k) => k.binary_search(x).is_ok(),
            None => self.group.contains(x),
        }
    }

    pub fn same_elements(&self, other: &Subgroup) -> bool {
        if let (Some(a), Some(b)) = (&self.key, &other.key) {
            return a == b;
        }
        self.order() == other.order()
            && self.generators().iter().all(|g| other.contains(g))
            && other.generators().iter().all(|g| self.contains(g))
    }

    /// `F^g = g⁻¹ F g`, generated by the conjugated generators.
    pub fn conjugate(&self, g: &Perm, limits: &Limits) -> Result<Subgroup> {
        self.ambient.check_member(g)?;
        let gens = self.generators().iter().map(|x| x.conjugate_by(g)).collect();
        let group = PermGroup::new(self.ambient.degree(), gens)?;
        Ok(Self::from_group(&self.ambient, group, limits))
    }

    /// Whether the subgroup is normal in the ambient group.
    pub fn is_normal(&self) -> bool {
        self.ambient.generators().iter().all(|g| {
            self.generators()
                .iter()
                .all(|x| self.contains(&x.conjugate_by(g)))
        })
    }

    /// The smallest element (in permutation order) that generates the
    /// subgroup, or `None` if the subgroup is not cyclic.
    pub fn cyclic_generator(&self, limits: &Limits) -> Result<Option<Perm>> {
        let order = self.order();
        if order == 1 {
            return Ok(Some(self.ambient.identity()));
        }
        let mut candidates: Vec<&Perm> = match &self.key {
            Some(k) => k.iter().collect(),
            None => self.group.elements(limits)?.iter().collect(),
        };
        candidates.sort_unstable();
        Ok(candidates.into_iter().find(|x| x.order() == order).cloned())
    }

    pub fn exponent(&self, limits: &Limits) -> Result<u64> {
        self.group.exponent(limits)
    }

    pub fn elements(&self, limits: &Limits) -> Result<Vec<Perm>> {
        match &self.key {
            Some(k) => Ok(k.to_vec()),
            None => {
                let mut e = self.group.elements(limits)?.to_vec();
                e.sort_unstable();
                Ok(e)
            }
        }
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_elements(other)
    }
}

impl Eq for Subgroup {}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup<")?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "; order {}>", self.order())
    }
}

/// `F^g` for a subgroup `F` and an ambient element `g`.
pub fn conjugate_subgroup(f: &Subgroup, g: &Perm, limits: &Limits) -> Result<Subgroup> {
    f.conjugate(g, limits)
}
