//! Homomorphisms between permutation groups, given by generator images.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fp::Presentation;
use crate::group::{ElementTable, PermGroup};
use crate::limits::Limits;
use crate::perm::Perm;

/// A verified homomorphism `source -> target`.
///
/// `images[i]` is the image of `source.generators()[i]`.
#[derive(Clone)]
pub struct Homomorphism {
    source: PermGroup,
    target: PermGroup,
    images: Vec<Perm>,
    /// Image of every source element, aligned with the source element table.
    table: OnceLock<Vec<Perm>>,
}

impl std::fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Homomorphism")
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .field("images", &self.images)
            .finish()
    }
}

/// Extends generator images along the spanning tree of `table` and checks
/// every Cayley-graph edge. Returns the image of each element, or `None` if
/// the assignment does not define a homomorphism.
fn extend_images(table: &ElementTable, images: &[Perm]) -> Option<Vec<Perm>> {
    let degree = images.first().map(Perm::degree)?;
    let mut out: Vec<Perm> = Vec::with_capacity(table.len());
    out.push(Perm::identity(degree));
    for i in 1..table.len() {
        let (parent, s) = table.tree_edge(i).expect("non-root has a parent");
        let img = out[parent].mul(&images[s]);
        out.push(img);
    }
    for i in 0..table.len() {
        for (s, img) in images.iter().enumerate() {
            if out[table.succ(i, s)] != out[i].mul(img) {
                return None;
            }
        }
    }
    Some(out)
}

impl Homomorphism {
    /// Builds and verifies a homomorphism by an exhaustive multiplication check
    /// over the source elements. The source order must not exceed
    /// `limits.cross_validation`; use [`Homomorphism::from_presentation`] for
    /// larger sources.
    pub fn new(
        source: &PermGroup,
        target: &PermGroup,
        images: Vec<Perm>,
        limits: &Limits,
    ) -> Result<Self> {
        check_shapes(source, target, &images)?;
        let order = source.order();
        if order > limits.cross_validation {
            return Err(Error::CutoffExceeded {
                what: "homomorphism source order",
                size: order,
                cutoff: limits.cross_validation,
            });
        }
        let hom = Homomorphism {
            source: source.clone(),
            target: target.clone(),
            images,
            table: OnceLock::new(),
        };
        if hom.source.generators().is_empty() {
            return Ok(hom);
        }
        let table = source.element_table(limits)?;
        let values = extend_images(table, &hom.images).ok_or_else(|| {
            Error::Validation("generator images do not respect the source relations".into())
        })?;
        let _ = hom.table.set(values);
        Ok(hom)
    }

    /// Builds a homomorphism whose well-definedness is certified by a
    /// presentation of the source on its generators: every relator must
    /// evaluate to the identity under the images.
    ///
    /// The caller guarantees that `presentation` presents `source` with
    /// generator `i` mapped to `source.generators()[i]`.
    pub fn from_presentation(
        source: &PermGroup,
        target: &PermGroup,
        images: Vec<Perm>,
        presentation: &Presentation,
    ) -> Result<Self> {
        check_shapes(source, target, &images)?;
        if presentation.num_generators() != source.generators().len() {
            return Err(Error::Validation(format!(
                "presentation has {} generators, source has {}",
                presentation.num_generators(),
                source.generators().len()
            )));
        }
        for (k, r) in presentation.relators().iter().enumerate() {
            let value = presentation.evaluate(r, &images, target.degree());
            if !value.is_identity() {
                return Err(Error::Validation(format!(
                    "relator {k} ({}) maps to {value}",
                    presentation.format_word(r)
                )));
            }
        }
        Ok(Homomorphism {
            source: source.clone(),
            target: target.clone(),
            images,
            table: OnceLock::new(),
        })
    }

    pub fn identity(group: &PermGroup) -> Self {
        Homomorphism {
            source: group.clone(),
            target: group.clone(),
            images: group.generators().to_vec(),
            table: OnceLock::new(),
        }
    }

    pub fn trivial(source: &PermGroup, target: &PermGroup) -> Self {
        Homomorphism {
            source: source.clone(),
            target: target.clone(),
            images: vec![target.identity(); source.generators().len()],
            table: OnceLock::new(),
        }
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    /// Image of every source element, aligned with `source.element_table`.
    pub fn image_table(&self, limits: &Limits) -> Result<&[Perm]> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let table = self.source.element_table(limits)?;
        let values = if self.images.is_empty() {
            vec![self.target.identity(); table.len()]
        } else {
            // Verified at construction, so the check cannot fail here.
            extend_images(table, &self.images)
                .ok_or_else(|| Error::Validation("inconsistent generator images".into()))?
        };
        Ok(self.table.get_or_init(|| values))
    }

    pub fn apply(&self, x: &Perm, limits: &Limits) -> Result<Perm> {
        let table = self.source.element_table(limits)?;
        let i = table
            .index_of(x)
            .ok_or_else(|| Error::Membership(x.to_string()))?;
        Ok(self.image_table(limits)?[i].clone())
    }

    /// The subgroup of the target generated by the generator images.
    pub fn image(&self) -> Result<PermGroup> {
        let gens = if self.images.is_empty() {
            vec![self.target.identity()]
        } else {
            self.images.clone()
        };
        PermGroup::new(self.target.degree(), gens)
    }

    pub fn image_order(&self) -> u64 {
        self.image().map(|g| g.order()).unwrap_or(1)
    }

    pub fn is_surjective(&self) -> bool {
        self.image_order() == self.target.order()
    }

    /// `|ker f| = |source| / |image f|`.
    pub fn kernel_order(&self) -> u64 {
        self.source.order() / self.image_order()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_order() == 1
    }
}

fn check_shapes(source: &PermGroup, target: &PermGroup, images: &[Perm]) -> Result<()> {
    if images.len() != source.generators().len() {
        return Err(Error::Validation(format!(
            "{} images for {} source generators",
            images.len(),
            source.generators().len()
        )));
    }
    for x in images {
        target.check_member(x)?;
    }
    Ok(())
}

fn check_hom_sizes(source: &PermGroup, target: &PermGroup, limits: &Limits) -> Result<()> {
    if source.order() > limits.hom_source {
        return Err(Error::CutoffExceeded {
            what: "homomorphism source order",
            size: source.order(),
            cutoff: limits.hom_source,
        });
    }
    if target.order() > limits.hom_target {
        return Err(Error::CutoffExceeded {
            what: "homomorphism target order",
            size: target.order(),
            cutoff: limits.hom_target,
        });
    }
    Ok(())
}

/// All homomorphisms `source -> target` as index tables: entry `i` of each
/// table is the target element-table index of the image of source element `i`.
///
/// Each source generator is assigned every target element whose order
/// divides the generator's order; each assignment is kept iff it respects the
/// multiplication table of the source.
pub fn enumerate_hom_tables(
    source: &PermGroup,
    target: &PermGroup,
    limits: &Limits,
) -> Result<Vec<Vec<u32>>> {
    check_hom_sizes(source, target, limits)?;
    let src = source.element_table(limits)?;
    let tgt = target.element_table(limits)?;
    let id = tgt.index_of(&target.identity()).expect("identity is listed") as u32;
    let gens = source.generators();
    if gens.is_empty() {
        return Ok(vec![vec![id; src.len()]]);
    }

    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| {
            let o = g.order();
            (0..tgt.len())
                .filter(|&t| o % tgt.get(t).order() == 0)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(out);
    }

    // Right multiplication by a target element, as an index map; built lazily.
    let mut rmul: Vec<Option<Vec<u32>>> = vec![None; tgt.len()];
    for cand in &candidates {
        for &t in cand {
            if rmul[t].is_none() {
                let x = tgt.get(t);
                rmul[t] = Some(
                    (0..tgt.len())
                        .map(|u| tgt.index_of(&tgt.get(u).mul(x)).unwrap() as u32)
                        .collect(),
                );
            }
        }
    }

    let mut choice = vec![0usize; gens.len()];
    let mut values = vec![0u32; src.len()];
    loop {
        let cols: Vec<&[u32]> = choice
            .iter()
            .zip(&candidates)
            .map(|(&c, cand)| rmul[cand[c]].as_deref().unwrap())
            .collect();
        values[0] = id;
        for i in 1..src.len() {
            let (parent, s) = src.tree_edge(i).unwrap();
            values[i] = cols[s][values[parent] as usize];
        }
        let ok = (0..src.len())
            .all(|i| (0..gens.len()).all(|s| values[src.succ(i, s)] == cols[s][values[i] as usize]));
        if ok {
            out.push(values.clone());
        }
        // Advance the mixed-radix counter.
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// All homomorphisms `source -> target`, in the order of
/// [`enumerate_hom_tables`].
pub fn enumerate_homs(
    source: &PermGroup,
    target: &PermGroup,
    limits: &Limits,
) -> Result<Vec<Homomorphism>> {
    let tables = enumerate_hom_tables(source, target, limits)?;
    let src = source.element_table(limits)?;
    let tgt = target.element_table(limits)?;
    let gen_index: Vec<usize> = source
        .generators()
        .iter()
        .map(|g| src.index_of(g).expect("generators are listed"))
        .collect();
    Ok(tables
        .into_iter()
        .map(|values| {
            let images = gen_index
                .iter()
                .map(|&i| tgt.get(values[i] as usize).clone())
                .collect();
            let table = values.iter().map(|&v| tgt.get(v as usize).clone()).collect();
            let hom = Homomorphism {
                source: source.clone(),
                target: target.clone(),
                images,
                table: OnceLock::new(),
            };
            let _ = hom.table.set(table);
            hom
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, s: &str) -> Perm {
        Perm::parse_cycles(d, s).unwrap()
    }

    #[test]
    fn homs_from_c2_into_s3() {
        let l = Limits::default();
        let c2 = PermGroup::cyclic(2).unwrap();
        let s3 = PermGroup::symmetric(3).unwrap();
        assert_eq!(enumerate_homs(&c2, &s3, &l).unwrap().len(), 4);
    }

    #[test]
    fn coprime_orders_give_only_the_trivial_hom() {
        let l = Limits::default();
        let c3 = PermGroup::cyclic(3).unwrap();
        let c2 = PermGroup::cyclic(2).unwrap();
        let homs = enumerate_homs(&c3, &c2, &l).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(homs[0].images()[0].is_identity());
    }

    #[test]
    fn homs_from_s3_to_c2() {
        let l = Limits::default();
        let s3 = PermGroup::symmetric(3).unwrap();
        let c2 = PermGroup::cyclic(2).unwrap();
        let homs = enumerate_homs(&s3, &c2, &l).unwrap();
        assert_eq!(homs.len(), 2);
        // The non-trivial one is the sign map.
        let sign = homs.iter().find(|h| !h.images()[0].is_identity()).unwrap();
        for x in s3.elements(&l).unwrap() {
            let expected = if x.sign() == 1 { c2.identity() } else { p(2, "(0 1)") };
            assert_eq!(sign.apply(x, &l).unwrap(), expected);
        }
    }

    #[test]
    fn construction_rejects_non_homomorphisms() {
        let l = Limits::default();
        let c3 = PermGroup::cyclic(3).unwrap();
        let s3 = PermGroup::symmetric(3).unwrap();
        assert!(Homomorphism::new(&c3, &s3, vec![p(3, "(0 1)")], &l).is_err());
        assert!(Homomorphism::new(&c3, &s3, vec![p(3, "(0 2 1)")], &l).is_ok());
        // Image outside the target.
        assert!(matches!(
            Homomorphism::new(&c3, &PermGroup::alternating(3).unwrap(), vec![p(3, "(0 1)")], &l),
            Err(Error::Membership(_))
        ));
    }

    #[test]
    fn kernel_and_image() {
        let l = Limits::default();
        let c6 = PermGroup::cyclic(6).unwrap();
        let c3 = PermGroup::cyclic(3).unwrap();
        let proj = Homomorphism::new(&c6, &c3, vec![p(3, "(0 1 2)")], &l).unwrap();
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel_order(), 2);
        assert!(!proj.is_injective());
        let g3 = c6.generators()[0].pow(3);
        assert!(proj.apply(&g3, &l).unwrap().is_identity());
    }
}
