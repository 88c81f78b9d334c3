//! Named groups: the small-group catalog and the fixture corpus.

use crate::coxeter::CoxeterMatrix;
use crate::error::{Error, Result};
use crate::fp::{todd_coxeter, EnumerationOptions, Presentation};
use crate::group::PermGroup;
use crate::sl::sl_to_perm;

/// Regular representation of a presented finite group.
pub fn presented_group(text: &str, name: &str) -> Result<PermGroup> {
    let p = Presentation::parse(text)?;
    let table = todd_coxeter(&p, &[], &EnumerationOptions::default())?;
    let gens = (0..p.num_generators()).map(|g| table.generator_perm(g)).collect();
    let n = table.num_cosets();
    Ok(PermGroup::with_known_order(n, gens, n as u64).named(name))
}

fn product(a: PermGroup, b: PermGroup, name: &str) -> Result<PermGroup> {
    Ok(PermGroup::direct_product(&a, &b)?.named(name))
}

fn cyclic(k: usize) -> Result<PermGroup> {
    Ok(PermGroup::cyclic(k)?.named(format!("C{k}")))
}

/// Presentations of the catalog groups that are not products of cyclic or
/// dihedral groups.
const PRESENTED: &[(&str, &str)] = &[
    ("Q8", "gens a b\na^4\na^2 b^-2\nb' a b a"),
    ("Dic3", "gens a b\na^6\na^3 b^-2\nb' a b a"),
    ("Q16", "gens a b\na^8\na^4 b^-2\nb' a b a"),
    ("SD16", "gens a b\na^8\nb^2\nb' a b a^-3"),
    ("M16", "gens a b\na^8\nb^2\nb' a b a^-5"),
    ("C4:C4", "gens a b\na^4\nb^4\nb' a b a"),
    ("C2^2:C4", "gens a b c\na^2\nb^2\nc^4\na b a' b'\nc' a c b'\nc' b c a'"),
    ("Pauli", "gens a b c\na^4\nb^2\nc^2\na b a' b'\na c a' c'\nb c b c a^2"),
];

/// Every group of order at most 16, up to isomorphism, once each.
pub const CATALOG_NAMES: &[&str] = &[
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2xC2xC2", "D4",
    "Q8", "C9", "C3xC3", "C10", "D5", "C11", "C12", "C6xC2", "A4", "D6", "Dic3", "C13", "C14",
    "D7", "C15", "C16", "C4xC4", "C2^4", "C4xC2xC2", "C8xC2", "D8", "Q16", "SD16", "M16",
    "C2xD4", "C2xQ8", "C4:C4", "C2^2:C4", "Pauli",
];

fn catalog_group(name: &str) -> Option<Result<PermGroup>> {
    if let Some((_, text)) = PRESENTED.iter().find(|(n, _)| *n == name) {
        return Some(presented_group(text, name));
    }
    let c = |k| cyclic(k);
    let g = match name {
        "C2xC2" => product(c(2).ok()?, c(2).ok()?, name),
        "C4xC2" => product(c(4).ok()?, c(2).ok()?, name),
        "C2xC2xC2" => product(catalog_group("C2xC2")?.ok()?, c(2).ok()?, name),
        "C3xC3" => product(c(3).ok()?, c(3).ok()?, name),
        "C6xC2" => product(c(6).ok()?, c(2).ok()?, name),
        "C4xC4" => product(c(4).ok()?, c(4).ok()?, name),
        "C2^4" => product(catalog_group("C2xC2")?.ok()?, catalog_group("C2xC2")?.ok()?, name),
        "C4xC2xC2" => product(c(4).ok()?, catalog_group("C2xC2")?.ok()?, name),
        "C8xC2" => product(c(8).ok()?, c(2).ok()?, name),
        "C2xD4" => product(c(2).ok()?, PermGroup::dihedral(4).ok()?, name),
        "C2xQ8" => product(c(2).ok()?, catalog_group("Q8")?.ok()?, name),
        "S3" => PermGroup::symmetric(3).map(|g| g.named(name)),
        "A4" => PermGroup::alternating(4).map(|g| g.named(name)),
        _ => {
            if let Some(k) = name.strip_prefix('C').and_then(|k| k.parse::<usize>().ok()) {
                return Some(cyclic(k));
            }
            let k = name.strip_prefix('D')?.parse::<usize>().ok()?;
            return Some(PermGroup::dihedral(k).map(|g| g.named(name)));
        }
    };
    Some(g)
}

/// The catalog groups of order at most `max_order`, in catalog order.
pub fn small_catalog(max_order: u64) -> Result<Vec<PermGroup>> {
    let mut out = Vec::new();
    for name in CATALOG_NAMES {
        let g = catalog_group(name).expect("catalog names resolve")?;
        if g.order() <= max_order {
            out.push(g);
        }
    }
    Ok(out)
}

/// Resolves a group name.
///
/// Accepted forms: catalog names (`C6`, `Q8`, `A4`, ...), `symK`, `altK`,
/// `cyclicK`, `dihedralK`, `klein4`, `quaternion8`, `slN_Q`, `coxX` for a
/// Coxeter type `X` (`coxA3`, `coxI2(5)`), and the colon forms `sym:K`,
/// `alt:K`, `cyclic:K`, `dihedral:K`, `sl:N:Q`, `coxeter:X`.
pub fn named_group(name: &str) -> Result<PermGroup> {
    let name = name.trim();
    let unknown = || Error::UnsupportedParameters(format!("unknown group {name:?}"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    if let Some((head, rest)) = name.split_once(':') {
        let canonical = match head {
            "sym" | "alt" | "cyclic" | "dihedral" => format!("{head}{}", num(rest)?),
            "sl" => {
                let (n, q) = rest.split_once(':').ok_or_else(unknown)?;
                format!("sl{}_{}", num(n)?, num(q)?)
            }
            "coxeter" => format!("cox{rest}"),
            _ => return catalog_group(name).ok_or_else(unknown)?,
        };
        return named_group(&canonical);
    }
    let with_name = |g: PermGroup| g.named(name);
    if let Some(k) = name.strip_prefix("sym") {
        return PermGroup::symmetric(num(k)?);
    }
    if let Some(k) = name.strip_prefix("alt") {
        return PermGroup::alternating(num(k)?);
    }
    if let Some(k) = name.strip_prefix("cyclic") {
        return PermGroup::cyclic(num(k)?);
    }
    if let Some(k) = name.strip_prefix("dihedral") {
        return PermGroup::dihedral(num(k)?);
    }
    if let Some(rest) = name.strip_prefix("sl") {
        let (n, q) = rest.split_once('_').ok_or_else(unknown)?;
        return sl_to_perm(num(n)?, num(q)?);
    }
    if let Some(t) = name.strip_prefix("cox") {
        let m = CoxeterMatrix::named(t)?;
        return Ok(with_name(m.group(&EnumerationOptions::default())?));
    }
    match name {
        "klein4" => return catalog_group("C2xC2").unwrap().map(with_name),
        "quaternion8" => return catalog_group("Q8").unwrap().map(with_name),
        _ => {}
    }
    catalog_group(name).ok_or_else(unknown)?
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let cat = small_catalog(16).unwrap();
        assert_eq!(cat.len(), 42);
        let mut counts = [0usize; 17];
        for g in &cat {
            counts[g.order() as usize] += 1;
        }
        // Number of isomorphism classes of each order 1..=16.
        assert_eq!(&counts[1..], &[1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14]);
        assert_eq!(small_catalog(8).unwrap().len(), 14);
    }

    #[test]
    fn catalog_groups_of_equal_order_are_distinguishable() {
        // exponent, abelian flag, class sizes and the element-order profile
        let l = crate::Limits::default();
        let cat = small_catalog(16).unwrap();
        let profile = |g: &PermGroup| {
            let mut orders: Vec<u64> = g.elements(&l).unwrap().iter().map(|x| x.order()).collect();
            orders.sort_unstable();
            let mut classes = g.class_sizes(&l).unwrap();
            classes.sort_unstable();
            let squares: std::collections::HashSet<_> =
                g.elements(&l).unwrap().iter().map(|x| x.mul(x)).collect();
            (g.order(), orders, classes, squares.len())
        };
        for (i, a) in cat.iter().enumerate() {
            for b in &cat[i + 1..] {
                assert_ne!(profile(a), profile(b), "{:?} vs {:?}", a.name(), b.name());
            }
        }
    }

    #[test]
    fn named_forms() {
        assert_eq!(named_group("sym3").unwrap().order(), 6);
        assert_eq!(named_group("sym:4").unwrap().order(), 24);
        assert_eq!(named_group("alt:5").unwrap().order(), 60);
        assert_eq!(named_group("sl:3:2").unwrap().order(), 168);
        assert_eq!(named_group("sl2_3").unwrap().order(), 24);
        assert_eq!(named_group("coxB3").unwrap().order(), 48);
        assert_eq!(named_group("coxeter:I2(5)").unwrap().order(), 10);
        assert_eq!(named_group("klein4").unwrap().order(), 4);
        assert_eq!(named_group("Dic3").unwrap().order(), 12);
        assert_eq!(named_group("dihedral:8").unwrap().order(), 16);
        assert!(named_group("nonsense").is_err());
        assert!(named_group("sym:x").is_err());
    }
}
