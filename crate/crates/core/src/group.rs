//! Finite permutation groups.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use crate::arith::lcm;
use crate::bsgs::Bsgs;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::Perm;

/// A finite group given by permutation generators.
///
/// Cloning is cheap; the BSGS and the element table are built on first use
/// and shared between clones.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<GroupInner>,
}

#[derive(Clone)]
struct GroupInner {
    degree: usize,
    generators: Vec<Perm>,
    name: Option<String>,
    known_order: Option<u64>,
    metadata: Vec<(String, String)>,
    bsgs: OnceLock<Bsgs>,
    elements: OnceLock<ElementTable>,
}

/// All elements of a group, in breadth-first order from the identity over
/// the generators, with a spanning tree and the right-multiplication action
/// of each generator.
#[derive(Debug, Clone)]
pub struct ElementTable {
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    /// `(parent, generator)` with `elements[i] = elements[parent] * gens[generator]`.
    tree: Vec<Option<(u32, u32)>>,
    /// `succ[i * ngens + s]` is the index of `elements[i] * gens[s]`.
    succ: Vec<u32>,
    ngens: usize,
}

impl ElementTable {
    fn build(degree: usize, gens: &[Perm], limit: u64) -> Result<Self> {
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0u32);
        let mut tree = vec![None];
        let mut succ = Vec::new();
        let mut k = 0;
        while k < elements.len() {
            for (s, g) in gens.iter().enumerate() {
                let y = elements[k].mul(g);
                let j = match index.get(&y) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len() as u32;
                        if j as u64 >= limit {
                            return Err(Error::CutoffExceeded {
                                what: "group order",
                                size: j as u64 + 1,
                                cutoff: limit,
                            });
                        }
                        index.insert(y.clone(), j);
                        elements.push(y);
                        tree.push(Some((k as u32, s as u32)));
                        j
                    }
                };
                succ.push(j);
            }
            k += 1;
        }
        Ok(ElementTable {
            elements,
            index,
            tree,
            succ,
            ngens: gens.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &Perm) -> Option<usize> {
        self.index.get(x).map(|&i| i as usize)
    }

    pub fn tree_edge(&self, i: usize) -> Option<(usize, usize)> {
        self.tree[i].map(|(p, s)| (p as usize, s as usize))
    }

    pub fn succ(&self, i: usize, generator: usize) -> usize {
        self.succ[i * self.ngens + generator] as usize
    }

    pub fn num_generators(&self) -> usize {
        self.ngens
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        Ok(Self::from_parts(degree, generators, None, None, Vec::new()))
    }

    fn from_parts(
        degree: usize,
        generators: Vec<Perm>,
        name: Option<String>,
        known_order: Option<u64>,
        metadata: Vec<(String, String)>,
    ) -> Self {
        PermGroup {
            inner: Arc::new(GroupInner {
                degree,
                generators,
                name,
                known_order,
                metadata,
                bsgs: OnceLock::new(),
                elements: OnceLock::new(),
            }),
        }
    }

    /// A group whose order is known in advance (e.g. a regular action read
    /// off a completed coset table). The BSGS is then only built on demand.
    pub(crate) fn with_known_order(degree: usize, generators: Vec<Perm>, order: u64) -> Self {
        Self::from_parts(degree, generators, None, Some(order), Vec::new())
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        let inner = Arc::make_mut(&mut self.inner);
        inner.name = Some(name.into());
        self
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        let inner = Arc::make_mut(&mut self.inner);
        inner.metadata.push((key.into(), value.into()));
        self
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.generators
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    pub fn metadata(&self) -> &[(String, String)] {
        &self.inner.metadata
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree())
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.inner
            .bsgs
            .get_or_init(|| Bsgs::new(self.degree(), self.generators()))
    }

    /// `|G|`, from the BSGS (or the known order of a regular representation).
    pub fn order(&self) -> u64 {
        if let Some(n) = self.inner.known_order {
            return n;
        }
        self.bsgs().order().expect("group order overflows u64")
    }

    pub fn contains(&self, x: &Perm) -> bool {
        if x.degree() != self.degree() {
            return false;
        }
        if let Some(table) = self.inner.elements.get() {
            return table.index_of(x).is_some();
        }
        self.bsgs().contains(x)
    }

    pub fn check_member(&self, x: &Perm) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::Membership(x.to_string()))
        }
    }

    /// Elements in breadth-first order; errors above `limits.element_listing`.
    pub fn element_table(&self, limits: &Limits) -> Result<&ElementTable> {
        if let Some(t) = self.inner.elements.get() {
            return Ok(t);
        }
        let order = self.order();
        if order > limits.element_listing {
            return Err(Error::CutoffExceeded {
                what: "group order",
                size: order,
                cutoff: limits.element_listing,
            });
        }
        let table = ElementTable::build(self.degree(), self.generators(), u64::MAX)?;
        Ok(self.inner.elements.get_or_init(|| table))
    }

    pub fn elements(&self, limits: &Limits) -> Result<&[Perm]> {
        Ok(self.element_table(limits)?.elements())
    }

    /// Order by exhaustive closure under the generators, ignoring the BSGS.
    pub fn closure_order(&self, limit: u64) -> Result<u64> {
        ElementTable::build(self.degree(), self.generators(), limit).map(|t| t.len() as u64)
    }

    pub fn element_order(&self, x: &Perm) -> Result<u64> {
        self.check_member(x)?;
        Ok(x.order())
    }

    /// lcm of all element orders.
    pub fn exponent(&self, limits: &Limits) -> Result<u64> {
        Ok(self
            .elements(limits)?
            .iter()
            .fold(1, |acc, x| lcm(acc, x.order())))
    }

    /// `G_n = { x in G : x^n = 1 }`.
    pub fn torsion_set(&self, n: u64, limits: &Limits) -> Result<TorsionSet> {
        assert!(n >= 1, "n must be positive");
        let elements = self
            .elements(limits)?
            .iter()
            .filter(|x| n.is_multiple_of(x.order()))
            .cloned()
            .collect();
        Ok(TorsionSet { n, elements })
    }

    /// `|Hom(C_n, G)|`, which equals `|G_n|`.
    pub fn hom_set_size(&self, n: u64, limits: &Limits) -> Result<u64> {
        Ok(self.torsion_set(n, limits)?.len() as u64)
    }

    /// Subgroup generated by the given elements, on the same points.
    pub fn subgroup_generated(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        for g in &gens {
            self.check_member(g)?;
        }
        PermGroup::new(self.degree(), gens)
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter()
            .all(|a| g.iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Whether `h` is normalized by every generator (so `h` is normal when
    /// it is a subgroup of this group).
    pub fn normalizes(&self, h: &PermGroup) -> bool {
        self.generators().iter().all(|g| {
            h.generators()
                .iter()
                .all(|x| h.contains(&x.conjugate_by(g)))
        })
    }

    /// Sizes of the conjugacy classes, ascending.
    pub fn class_sizes(&self, limits: &Limits) -> Result<Vec<u64>> {
        let table = self.element_table(limits)?;
        let mut seen = vec![false; table.len()];
        let mut sizes = Vec::new();
        for start in 0..table.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut size = 0u64;
            while let Some(i) = queue.pop_front() {
                size += 1;
                for g in self.generators() {
                    let y = table.get(i).conjugate_by(g);
                    let j = table.index_of(&y).expect("closed under conjugation");
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        Ok(sizes)
    }

    /// Orbits of the point set under the generators.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for p in 0..self.degree() {
            if seen[p] {
                continue;
            }
            seen[p] = true;
            let mut orbit = vec![p];
            let mut k = 0;
            while k < orbit.len() {
                for g in self.generators() {
                    let q = g.apply(orbit[k]);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
                k += 1;
            }
            out.push(orbit);
        }
        out
    }

    // Named constructors.

    /// Symmetric group on `k` points.
    pub fn symmetric(k: usize) -> Result<Self> {
        check_named_degree("sym", k, 1)?;
        let mut gens = Vec::new();
        if k >= 2 {
            gens.push(Perm::from_cycles(k, &[vec![0, 1]])?);
        }
        if k >= 3 {
            gens.push(Perm::from_cycles(k, &[(0..k as u32).collect()])?);
        }
        if gens.is_empty() {
            gens.push(Perm::identity(k));
        }
        Ok(PermGroup::new(k, gens)?.named(format!("sym{k}")))
    }

    /// Alternating group on `k` points, generated by the 3-cycles `(0 1 i)`.
    pub fn alternating(k: usize) -> Result<Self> {
        check_named_degree("alt", k, 1)?;
        let mut gens: Vec<Perm> = (2..k as u32)
            .map(|i| Perm::from_cycles(k, &[vec![0, 1, i]]))
            .collect::<Result<_>>()?;
        if gens.is_empty() {
            gens.push(Perm::identity(k));
        }
        Ok(PermGroup::new(k, gens)?.named(format!("alt{k}")))
    }

    /// Cyclic group of order `k` acting regularly on `k` points.
    pub fn cyclic(k: usize) -> Result<Self> {
        check_named_degree("cyclic", k, 1)?;
        let g = Perm::from_cycles(k, &[(0..k as u32).collect()])?;
        Ok(PermGroup::new(k, vec![g])?.named(format!("cyclic{k}")))
    }

    /// Dihedral group of order `2k` acting on the vertices of a `k`-gon.
    pub fn dihedral(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::UnsupportedParameters(format!(
                "dihedral {k}: the polygon action needs k >= 3"
            )));
        }
        check_named_degree("dihedral", k, 3)?;
        let rotation = Perm::from_cycles(k, &[(0..k as u32).collect()])?;
        let reflection = Perm::from_images_unchecked(
            (0..k as u32).map(|i| (k as u32 - i) % k as u32).collect(),
        );
        Ok(PermGroup::new(k, vec![rotation, reflection])?.named(format!("dihedral{k}")))
    }

    /// Direct product acting on the disjoint union of the point sets.
    pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<Self> {
        let degree = a.degree() + b.degree();
        let mut gens: Vec<Perm> = a.generators().iter().map(|g| g.extend(degree)).collect();
        for g in b.generators() {
            let shift = a.degree() as u32;
            let mut images: Vec<u32> = (0..shift).collect();
            images.extend(g.images().iter().map(|&x| x + shift));
            gens.push(Perm::from_images(images)?);
        }
        PermGroup::new(degree, gens)
    }
}

fn check_named_degree(what: &str, k: usize, min: usize) -> Result<()> {
    if k < min || k > 20 {
        return Err(Error::UnsupportedParameters(format!(
            "{what} {k}: supported range is {min}..=20"
        )));
    }
    Ok(())
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut d = f.debug_struct("PermGroup");
        if let Some(name) = self.name() {
            d.field("name", &name);
        }
        d.field("degree", &self.degree())
            .field("generators", &self.generators())
            .finish()
    }
}

/// `G_n`: the elements whose `n`-th power is trivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionSet {
    pub n: u64,
    pub elements: Vec<Perm>,
}

impl TorsionSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &Perm) -> bool {
        self.elements.contains(x)
    }

    pub fn as_set(&self) -> HashSet<&Perm> {
        self.elements.iter().collect()
    }
}
