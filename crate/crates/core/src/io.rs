//! Text formats for groups and families.
//!
//! Group file:
//!
//! ```text
//! # comments start with '#'
//! degree 4
//! (0 1)
//! (0 1 2 3)
//! ```
//!
//! or a single line `named <group name>` (see [`named_group`]).
//!
//! Family file: one seed subgroup per line, its generators in cycle notation
//! separated by `;`. The family is the conjugation closure of the seeds. An
//! optional `order equality` line states the only supported member
//! comparison.

use std::path::Path;

use crate::catalog::named_group;
use crate::error::{Error, Result};
use crate::family::{conjugation_closure, cyclic_family, SubgroupFamily};
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::perm::Perm;
use crate::subgroup::Subgroup;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_group(text: &str) -> Result<PermGroup> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty group file"))?;
    if let Some(name) = header.strip_prefix("named ") {
        if let Some((extra, _)) = lines.next() {
            return Err(Error::parse(extra, "unexpected line after `named`"));
        }
        return named_group(name.trim()).map_err(|e| Error::parse(line, e.to_string()));
    }
    let degree: usize = header
        .strip_prefix("degree ")
        .and_then(|d| d.trim().parse().ok())
        .ok_or_else(|| Error::parse(line, "expected `degree <d>` or `named <group>`"))?;
    let mut gens = Vec::new();
    for (line, text) in lines {
        gens.push(Perm::parse_cycles(degree, text).map_err(|e| Error::parse(line, e.to_string()))?);
    }
    if gens.is_empty() {
        gens.push(Perm::identity(degree));
    }
    PermGroup::new(degree, gens)
}

/// A group given by file path or by name.
pub fn group_from_spec(spec: &str) -> Result<PermGroup> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("cannot read {spec}: {e}")))?;
        return parse_group(&text);
    }
    named_group(spec)
}

/// Seeds of a family file, as generator lists.
pub fn parse_family_seeds(text: &str, degree: usize) -> Result<Vec<Vec<Perm>>> {
    let mut seeds = Vec::new();
    for (line, content) in content_lines(text) {
        if content == "family" {
            continue;
        }
        if let Some(rest) = content.strip_prefix("order") {
            let rest = rest.trim();
            if rest != "equality" {
                return Err(Error::UnsupportedParameters(format!(
                    "line {line}: member comparison {rest:?} (only `order equality` is supported)"
                )));
            }
            continue;
        }
        let gens = content
            .split(';')
            .map(|g| Perm::parse_cycles(degree, g.trim()).map_err(|e| Error::parse(line, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        seeds.push(gens);
    }
    Ok(seeds)
}

/// The conjugation closure of seed subgroups given by generator lists.
pub fn family_from_seeds(
    ambient: &PermGroup,
    seeds: Vec<Vec<Perm>>,
    limits: &Limits,
) -> Result<SubgroupFamily> {
    let subgroups = seeds
        .into_iter()
        .map(|gens| Subgroup::new(ambient, gens, limits))
        .collect::<Result<Vec<_>>>()?;
    conjugation_closure(ambient, subgroups, limits)
}

/// A family given as `cyclic:m` (all cyclic subgroups of order `m`), `A<k>`
/// or `S<k>` (closure of the alternating or symmetric group on the first `k`
/// points), or a family file path.
pub fn family_from_spec(ambient: &PermGroup, spec: &str, limits: &Limits) -> Result<SubgroupFamily> {
    if let Some(m) = spec.strip_prefix("cyclic:") {
        let m: u64 = m
            .parse()
            .map_err(|_| Error::UnsupportedParameters(format!("bad family spec {spec:?}")))?;
        return cyclic_family(ambient, m, limits);
    }
    let named = |k: &str, sym: bool| -> Option<Result<SubgroupFamily>> {
        let k: usize = k.parse().ok()?;
        Some((|| {
            if k > ambient.degree() {
                return Err(Error::Validation(format!(
                    "{spec} needs {k} points, the ambient group has degree {}",
                    ambient.degree()
                )));
            }
            let g = if sym {
                PermGroup::symmetric(k)?
            } else {
                PermGroup::alternating(k)?
            };
            let gens = g.generators().iter().map(|x| x.extend(ambient.degree())).collect();
            family_from_seeds(ambient, vec![gens], limits)
        })())
    };
    if let Some(r) = spec.strip_prefix('A').and_then(|k| named(k, false)) {
        return r;
    }
    if let Some(r) = spec.strip_prefix('S').and_then(|k| named(k, true)) {
        return r;
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::UnsupportedParameters(format!("family {spec:?}: not a known form or readable file ({e})")))?;
    family_from_seeds(ambient, parse_family_seeds(&text, ambient.degree())?, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_files() {
        let g = parse_group("# S4\ndegree 4\n(0 1)\n(0 1 2 3)\n").unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(parse_group("named alt4").unwrap().order(), 12);
        assert!(matches!(parse_group("degree 3\n(0 5)"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_group("deg 3"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn family_specs() {
        let l = Limits::default();
        let s3 = PermGroup::symmetric(3).unwrap();
        assert_eq!(family_from_spec(&s3, "cyclic:2", &l).unwrap().len(), 3);
        let a3 = family_from_spec(&s3, "A3", &l).unwrap();
        assert_eq!((a3.len(), a3.members()[0].order()), (1, 3));
        let s4 = PermGroup::symmetric(4).unwrap();
        assert_eq!(family_from_spec(&s4, "S3", &l).unwrap().len(), 4);
        assert!(family_from_spec(&s3, "A5", &l).is_err());
        assert!(family_from_spec(&s3, "no/such/file", &l).is_err());
    }

    #[test]
    fn family_files() {
        let seeds = parse_family_seeds("family\norder equality\n(0 1)\n(0 1 2); (0 1)\n", 3).unwrap();
        assert_eq!(seeds.len(), 2);
        assert_eq!(seeds[1].len(), 2);
        assert!(matches!(
            parse_family_seeds("order index\n", 3),
            Err(Error::UnsupportedParameters(_))
        ));
        assert!(matches!(parse_family_seeds("(0 1)\n(0 9)", 3), Err(Error::Parse { line: 2, .. })));
    }
}
