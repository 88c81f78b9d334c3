//! The active sum of a conjugation-closed family: its presentation, its
//! realization by coset enumeration and the canonical map onto the ambient
//! group.
//!
//! The active sum `S` of a family `F` of subgroups of `G` is the free product
//! of the members modulo the relations `h⁻¹ g h = g^h` for `h ∈ F₁`, `g ∈ F₂`,
//! where the right-hand side is read as an element of the member `F₂^h`.
//! Sending each member into `G` by inclusion gives a homomorphism
//! `φ: S → G` whose image is `⟨∪F⟩`.

use std::collections::HashMap;

use super::coset::{todd_coxeter, EnumerationOptions, EnumerationStats};
use super::presentation::{GeneratorLabel, Presentation};
use super::word::{power, Letter, Word};
use crate::error::{Error, Result};
use crate::family::{generated_subgroup, SubgroupFamily};
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::limits::Limits;
use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Encoding {
    /// One generator per non-trivial element of each member.
    Regular,
    /// One generator per (cyclic) member.
    #[default]
    Cyclic,
}

impl std::str::FromStr for Encoding {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "regular" => Ok(Encoding::Regular),
            "cyclic" => Ok(Encoding::Cyclic),
            _ => Err(format!("unknown encoding {s:?} (expected regular or cyclic)")),
        }
    }
}

impl std::fmt::Display for Encoding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Encoding::Regular => "regular",
            Encoding::Cyclic => "cyclic",
        })
    }
}

/// Caches `F_i^h -> member index` lookups.
struct ConjugateIndex<'a> {
    fam: &'a SubgroupFamily,
    limits: &'a Limits,
    cache: HashMap<(usize, Perm), usize>,
}

impl<'a> ConjugateIndex<'a> {
    fn new(fam: &'a SubgroupFamily, limits: &'a Limits) -> Self {
        ConjugateIndex {
            fam,
            limits,
            cache: HashMap::new(),
        }
    }

    fn member_of_conjugate(&mut self, member: usize, h: &Perm) -> Result<usize> {
        if let Some(&i) = self.cache.get(&(member, h.clone())) {
            return Ok(i);
        }
        let conj = self.fam.members()[member].conjugate(h, self.limits)?;
        let i = self.fam.find(&conj).ok_or_else(|| {
            Error::Validation(format!(
                "family is not closed under conjugation: member {member} conjugated by {h} is missing"
            ))
        })?;
        self.cache.insert((member, h.clone()), i);
        Ok(i)
    }
}

fn check_member_sizes(fam: &SubgroupFamily, limits: &Limits) -> Result<()> {
    for m in fam.members() {
        if m.key().is_none() {
            return Err(Error::CutoffExceeded {
                what: "family member order",
                size: m.order(),
                cutoff: limits.subgroup_key,
            });
        }
    }
    Ok(())
}

/// Presentation of the active sum of `fam`.
///
/// Relators involving an identity element are trivially reducible and are
/// not emitted. In the cyclic encoding only generator-by-generator conjugation
/// relators are emitted: conjugation by `h^k` is the `k`-th iterate of
/// conjugation by `h`, and conjugates of powers are powers of conjugates, so
/// the remaining relators lie in the normal closure of the emitted ones.
pub fn active_sum_presentation(
    fam: &SubgroupFamily,
    encoding: Encoding,
    limits: &Limits,
) -> Result<Presentation> {
    check_member_sizes(fam, limits)?;
    match encoding {
        Encoding::Regular => regular_presentation(fam, limits),
        Encoding::Cyclic => cyclic_presentation(fam, limits),
    }
}

fn regular_presentation(fam: &SubgroupFamily, limits: &Limits) -> Result<Presentation> {
    // Generator numbering: members in order, non-trivial elements in sorted order.
    let mut names = Vec::new();
    let mut labels = Vec::new();
    let mut gen_of: Vec<HashMap<Perm, usize>> = Vec::new();
    for (i, m) in fam.members().iter().enumerate() {
        let mut map = HashMap::new();
        for (j, x) in m.key().unwrap().iter().filter(|x| !x.is_identity()).enumerate() {
            map.insert(x.clone(), names.len());
            names.push(format!("f{i}_{j}"));
            labels.push(GeneratorLabel {
                member: i,
                element: x.clone(),
            });
        }
        gen_of.push(map);
    }
    let mut p = Presentation::new(names);
    for (g, label) in labels.into_iter().enumerate() {
        p.set_label(g, label);
    }

    // Multiplication table of each member.
    for (i, m) in fam.members().iter().enumerate() {
        let elems: Vec<&Perm> = m.key().unwrap().iter().filter(|x| !x.is_identity()).collect();
        for x in &elems {
            for y in &elems {
                let z = x.mul(y);
                let mut w: Word = vec![Letter::gen(gen_of[i][*x]), Letter::gen(gen_of[i][*y])];
                if !z.is_identity() {
                    w.push(Letter::inv(gen_of[i][&z]));
                }
                p.add_relator(w)?;
            }
        }
    }

    // h⁻¹ g h (g^h)⁻¹ for every ordered pair of members.
    let mut conj = ConjugateIndex::new(fam, limits);
    for (i1, f1) in fam.members().iter().enumerate() {
        for h in f1.key().unwrap().iter().filter(|x| !x.is_identity()) {
            for (i2, f2) in fam.members().iter().enumerate() {
                let i3 = conj.member_of_conjugate(i2, h)?;
                for g in f2.key().unwrap().iter().filter(|x| !x.is_identity()) {
                    let gh = g.conjugate_by(h);
                    let target = *gen_of[i3].get(&gh).ok_or_else(|| {
                        Error::Validation(format!("{gh} is not in member {i3}"))
                    })?;
                    let hg = gen_of[i1][h];
                    p.add_relator(vec![
                        Letter::inv(hg),
                        Letter::gen(gen_of[i2][g]),
                        Letter::gen(hg),
                        Letter::inv(target),
                    ])?;
                }
            }
        }
    }
    Ok(p)
}

/// Exponent `k` in `(-m/2, m/2]` with `c^k = x`, if any.
fn discrete_log(c: &Perm, m: u64, x: &Perm) -> Option<i64> {
    let mut acc = Perm::identity(c.degree());
    for k in 0..m {
        if &acc == x {
            let k = k as i64;
            let m = m as i64;
            return Some(if 2 * k > m { k - m } else { k });
        }
        acc = acc.mul(c);
    }
    None
}

fn cyclic_presentation(fam: &SubgroupFamily, limits: &Limits) -> Result<Presentation> {
    // Trivial members contribute no generators.
    let mut gen_of: Vec<Option<(usize, Perm, u64)>> = Vec::new();
    let mut names = Vec::new();
    let mut labels = Vec::new();
    for (i, m) in fam.members().iter().enumerate() {
        let order = m.order();
        if order == 1 {
            gen_of.push(None);
            continue;
        }
        let c = m.cyclic_generator(limits)?.ok_or_else(|| {
            Error::Encoding(format!(
                "member {i} (order {order}) is not cyclic; use the regular encoding"
            ))
        })?;
        gen_of.push(Some((names.len(), c.clone(), order)));
        names.push(format!("c{i}"));
        labels.push(GeneratorLabel {
            member: i,
            element: c,
        });
    }
    let mut p = Presentation::new(names);
    for (g, label) in labels.into_iter().enumerate() {
        p.set_label(g, label);
    }
    for (g, _, order) in gen_of.iter().flatten() {
        p.add_relator(power(*g, *order as i64))?;
    }
    let mut conj = ConjugateIndex::new(fam, limits);
    for entry1 in gen_of.iter() {
        let Some((g1, c1, _)) = entry1 else { continue };
        for (i2, entry2) in gen_of.iter().enumerate() {
            let Some((g2, c2, _)) = entry2 else { continue };
            let i3 = conj.member_of_conjugate(i2, c1)?;
            let (g3, c3, m3) = gen_of[i3]
                .as_ref()
                .expect("conjugate of a non-trivial member is non-trivial");
            let x = c2.conjugate_by(c1);
            let k = discrete_log(c3, *m3, &x).ok_or_else(|| {
                Error::Validation(format!("{x} is not a power of the generator of member {i3}"))
            })?;
            let mut w = vec![Letter::inv(*g1), Letter::gen(*g2), Letter::gen(*g1)];
            w.extend(power(*g3, -k));
            p.add_relator(w)?;
        }
    }
    Ok(p)
}

/// The realized active sum `S` with its canonical map `φ: S → G`.
#[derive(Debug, Clone)]
pub struct ActiveSumResult {
    pub presentation: Presentation,
    pub encoding: Encoding,
    pub stats: EnumerationStats,
    /// `S` acting regularly on its own elements (the cosets of the trivial subgroup).
    pub group: PermGroup,
    pub order: u64,
    /// `φ: S → G`, generator `i` of `S` sent to its ambient label.
    pub phi: Homomorphism,
    /// Image of each presentation generator in `S`.
    pub tau_labels: Vec<Perm>,
    pub image_order: u64,
    pub kernel_order: u64,
    /// Whether the family generates `G`; `φ` maps onto `⟨∪F⟩` regardless.
    pub generating: bool,
    /// `φ` is an isomorphism onto `G`.
    pub iso: bool,
}

impl ActiveSumResult {
    pub fn report(&self) -> String {
        format!(
            "generators={}\nrelators={}\nencoding={}\norder_S={}\nimage_phi={}\nkernel_phi={}\ngenerating={}\niso={}\n{}",
            self.presentation.num_generators(),
            self.presentation.relators().len(),
            self.encoding,
            self.order,
            self.image_order,
            self.kernel_order,
            self.generating,
            self.iso,
            self.stats.report()
        )
    }
}

/// Builds the active-sum presentation, enumerates it over the trivial
/// subgroup and reads off `S`, `φ`, `|ker φ|` and the isomorphism flag.
pub fn realize_active_sum(
    ambient: &PermGroup,
    fam: &SubgroupFamily,
    encoding: Encoding,
    opts: &EnumerationOptions,
    limits: &Limits,
) -> Result<ActiveSumResult> {
    let presentation = active_sum_presentation(fam, encoding, limits)?;
    let table = todd_coxeter(&presentation, &[], opts)?;
    let n = table.num_cosets();
    let tau_labels: Vec<Perm> = (0..presentation.num_generators())
        .map(|g| table.generator_perm(g))
        .collect();
    let group = PermGroup::with_known_order(n, tau_labels.clone(), n as u64);
    let images: Vec<Perm> = presentation
        .labels()
        .iter()
        .map(|l| l.as_ref().expect("active-sum generators are labelled").element.clone())
        .collect();
    let phi = Homomorphism::from_presentation(&group, ambient, images, &presentation)?;
    let image_order = generated_subgroup(fam).order();
    debug_assert_eq!(image_order, phi.image_order());
    let generating = image_order == ambient.order();
    let order = n as u64;
    Ok(ActiveSumResult {
        stats: table.stats().clone(),
        presentation,
        encoding,
        group,
        order,
        phi,
        tau_labels,
        image_order,
        kernel_order: order / image_order,
        generating,
        iso: generating && order == ambient.order(),
    })
}
