use std::collections::HashSet;
use std::fmt::Write as _;

use super::word::{cyclic_key, cyclic_reduce, Letter, Word};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Where an active-sum generator comes from: the family member it belongs
/// to and the ambient element it names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorLabel {
    pub member: usize,
    pub element: Perm,
}

/// A finite presentation `<generators | relators>`.
///
/// Relators are stored freely and cyclically reduced, without empty words and
/// without duplicates up to rotation and inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
    seen: HashSet<Word>,
    labels: Vec<Option<GeneratorLabel>>,
}

impl Presentation {
    pub fn new(names: Vec<String>) -> Self {
        let labels = vec![None; names.len()];
        Presentation {
            names,
            relators: Vec::new(),
            seen: HashSet::new(),
            labels,
        }
    }

    pub fn with_relators(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut p = Presentation::new(names);
        for r in relators {
            p.add_relator(r)?;
        }
        Ok(p)
    }

    /// Adds a relator after reduction. Returns whether it was new.
    pub fn add_relator(&mut self, w: Word) -> Result<bool> {
        if let Some(l) = w.iter().find(|l| l.generator() >= self.names.len()) {
            return Err(Error::Validation(format!(
                "relator uses undeclared generator {}",
                l.generator()
            )));
        }
        let w = cyclic_reduce(&w);
        if w.is_empty() {
            return Ok(false);
        }
        if !self.seen.insert(cyclic_key(&w)) {
            return Ok(false);
        }
        self.relators.push(w);
        Ok(true)
    }

    pub fn set_label(&mut self, generator: usize, label: GeneratorLabel) {
        self.labels[generator] = Some(label);
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn labels(&self) -> &[Option<GeneratorLabel>] {
        &self.labels
    }

    pub fn total_relator_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    /// Value of `w` when generator `i` is sent to `images[i]`.
    pub fn evaluate(&self, w: &[Letter], images: &[Perm], degree: usize) -> Perm {
        let inverses: Vec<Perm> = images.iter().map(Perm::inverse).collect();
        let mut acc = Perm::identity(degree);
        for l in w {
            let g = l.generator();
            acc = acc.mul(if l.is_inverse() { &inverses[g] } else { &images[g] });
        }
        acc
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        let mut s = String::new();
        for (k, l) in w.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            s.push_str(&self.names[l.generator()]);
            if l.is_inverse() {
                s.push('\'');
            }
        }
        s
    }

    /// Parses a word in the text format: whitespace-separated symbols, each
    /// optionally followed by `'` (inverse) and `^k` (power).
    pub fn parse_word(&self, text: &str) -> std::result::Result<Word, String> {
        let mut w = Word::new();
        for tok in text.split_whitespace() {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<i64>()
                        .map_err(|_| format!("bad exponent in {tok:?}"))?,
                ),
                None => (tok, 1),
            };
            let (sym, inverted) = match base.strip_suffix('\'') {
                Some(s) => (s, true),
                None => (base, false),
            };
            let g = self
                .names
                .iter()
                .position(|n| n == sym)
                .ok_or_else(|| format!("undeclared generator {sym:?}"))?;
            let k = if inverted { -exp } else { exp };
            w.extend(super::word::power(g, k));
        }
        Ok(w)
    }

    /// Parses `gens a b c` followed by one relator per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty presentation"))?;
        let names: Vec<String> = match header.strip_prefix("gens") {
            Some(rest) if rest.is_empty() || rest.starts_with(char::is_whitespace) => {
                rest.split_whitespace().map(str::to_string).collect()
            }
            _ => return Err(Error::parse(line_no, "expected `gens <symbols>`")),
        };
        let mut unique = HashSet::new();
        for n in &names {
            if n.contains('\'') || n.contains('^') || !unique.insert(n) {
                return Err(Error::parse(line_no, format!("bad generator name {n:?}")));
            }
        }
        let mut p = Presentation::new(names);
        for (line_no, line) in lines {
            let w = p.parse_word(line).map_err(|m| Error::parse(line_no, m))?;
            p.add_relator(w)?;
        }
        Ok(p)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("gens");
        for n in &self.names {
            s.push(' ');
            s.push_str(n);
        }
        s.push('\n');
        for r in &self.relators {
            let _ = writeln!(s, "{}", self.format_word(r));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces_and_dedups() {
        let p = Presentation::parse("gens a\na^3\na' a a a'\n").unwrap();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].len(), 3);
        let q = Presentation::parse("gens x y\nx x\ny^2\nx y x y x y\ny x y x y x\n").unwrap();
        assert_eq!(q.relators().len(), 3);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Presentation::parse("gens a b\n\na c\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        assert!(matches!(
            Presentation::parse("generators a").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(Presentation::parse("gens a a").is_err());
    }

    #[test]
    fn text_round_trip() {
        let p = Presentation::parse("gens a b c\na' b a c'\na^2\n").unwrap();
        assert_eq!(p.to_text(), "gens a b c\na' b a c'\na a\n");
        assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn evaluation() {
        let p = Presentation::parse("gens x y\nx^2\ny^2\n(x y)^3").err();
        assert!(p.is_some(), "parentheses are not part of the format");
        let p = Presentation::parse("gens x y\nx^2\ny^2\nx y x y x y").unwrap();
        let x = Perm::parse_cycles(3, "(0 1)").unwrap();
        let y = Perm::parse_cycles(3, "(1 2)").unwrap();
        for r in p.relators() {
            assert!(p.evaluate(r, &[x.clone(), y.clone()], 3).is_identity());
        }
    }
}
