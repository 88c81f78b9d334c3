//! `C_n`-predicates on homomorphisms and groups, and certificates of
//! `C_n`-cellularity for active sums.
//!
//! Cellularity itself quantifies over all groups and is never decided here.
//! What is computed: the torsion-set predicates below, certificates built from
//! the two certificate rules and the active-sum theorem, and checks of
//! consequences a cellular group must satisfy.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::arith::{divisors, prime_divisors};
use crate::catalog::named_group;
use crate::error::{Error, Hypothesis, Result};
use crate::family::{exponent_violation, is_generating, SubgroupFamily};
use crate::fp::{realize_active_sum, ActiveSumResult, Encoding, EnumerationOptions};
use crate::group::PermGroup;
use crate::hom::Homomorphism;
use crate::limits::Limits;
use crate::perm::Perm;

/// Image of each element of `X_n` under `f`, with `X_n` listed in
/// source element-table order.
fn torsion_images(f: &Homomorphism, n: u64, limits: &Limits) -> Result<Vec<Perm>> {
    let table = f.source().element_table(limits)?;
    let images = f.image_table(limits)?;
    Ok(table
        .elements()
        .iter()
        .zip(images)
        .filter(|(x, _)| n.is_multiple_of(x.order()))
        .map(|(_, y)| y.clone())
        .collect())
}

fn is_injective_list(images: &[Perm]) -> bool {
    let mut seen = HashSet::with_capacity(images.len());
    images.iter().all(|y| seen.insert(y))
}

/// `f` restricted to `X_n` is a bijection onto `Y_n`; equivalently
/// `Hom(C_n, f)` is a bijection.
pub fn is_cn_equivalence(f: &Homomorphism, n: u64, limits: &Limits) -> Result<bool> {
    let images = torsion_images(f, n, limits)?;
    let target = f.target().torsion_set(n, limits)?;
    Ok(images.len() == target.len() && is_injective_list(&images))
}

/// `f` restricted to `X_n` is injective.
pub fn is_cn_injection(f: &Homomorphism, n: u64, limits: &Limits) -> Result<bool> {
    Ok(is_injective_list(&torsion_images(f, n, limits)?))
}

/// `f` sends every element of `X_n` to the identity.
pub fn is_cn_trivial(f: &Homomorphism, n: u64, limits: &Limits) -> Result<bool> {
    Ok(torsion_images(f, n, limits)?.iter().all(Perm::is_identity))
}

/// `⟨G_n⟩ = G`. Returns early when every generator already lies in `G_n`.
pub fn is_cn_generated(g: &PermGroup, n: u64, limits: &Limits) -> Result<bool> {
    if g.generators().iter().all(|x| n.is_multiple_of(x.order())) {
        return Ok(true);
    }
    Ok(torsion_generated_order(g, n, limits)? == g.order())
}

/// `|⟨G_n⟩|`, built from the full torsion set.
pub fn torsion_generated_order(g: &PermGroup, n: u64, limits: &Limits) -> Result<u64> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut current = PermGroup::new(g.degree(), vec![g.identity()])?;
    for x in g.torsion_set(n, limits)?.elements {
        if !current.contains(&x) {
            gens.push(x);
            current = PermGroup::new(g.degree(), gens.clone())?;
            if current.order() == g.order() {
                break;
            }
        }
    }
    Ok(current.order())
}

/// Outcome of checking that a `C_n`-equivalence is bijective on every `X_m`,
/// `m | n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lemma1aReport {
    /// `f` is not a `C_n`-equivalence.
    NotApplicable,
    /// `(m, bijective on X_m)` for each divisor, ascending.
    Checked(Vec<(u64, bool)>),
}

impl Lemma1aReport {
    pub fn all_pass(&self) -> bool {
        match self {
            Lemma1aReport::NotApplicable => true,
            Lemma1aReport::Checked(rows) => rows.iter().all(|&(_, ok)| ok),
        }
    }
}

impl std::fmt::Display for Lemma1aReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Lemma1aReport::NotApplicable => f.write_str("not applicable"),
            Lemma1aReport::Checked(rows) => {
                for (i, (m, ok)) in rows.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "m={m}:{}", if *ok { "pass" } else { "fail" })?;
                }
                Ok(())
            }
        }
    }
}

pub fn lemma1a_check(f: &Homomorphism, n: u64, limits: &Limits) -> Result<Lemma1aReport> {
    if !is_cn_equivalence(f, n, limits)? {
        return Ok(Lemma1aReport::NotApplicable);
    }
    let rows = divisors(n)
        .into_iter()
        .map(|m| Ok((m, is_cn_equivalence(f, m, limits)?)))
        .collect::<Result<_>>()?;
    Ok(Lemma1aReport::Checked(rows))
}

/// The implication "`C_n`-equivalence ⇒ `C_m`-equivalence" for one `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma1bReport {
    pub n: u64,
    pub m: u64,
    pub premise: bool,
    pub conclusion: bool,
}

impl Lemma1bReport {
    pub fn holds(&self) -> bool {
        !self.premise || self.conclusion
    }
}

pub fn lemma1b_check(f: &Homomorphism, n: u64, m: u64, limits: &Limits) -> Result<Lemma1bReport> {
    if m == 0 || !n.is_multiple_of(m) {
        return Err(Error::Divisibility { m, n });
    }
    Ok(Lemma1bReport {
        n,
        m,
        premise: is_cn_equivalence(f, n, limits)?,
        conclusion: is_cn_equivalence(f, m, limits)?,
    })
}

// Certificates.

fn hash_perms<'a>(hasher: &mut Sha256, perms: impl IntoIterator<Item = &'a Perm>) {
    for p in perms {
        hasher.update((p.degree() as u32).to_le_bytes());
        for &x in p.images() {
            hasher.update(x.to_le_bytes());
        }
    }
}

/// Order, degree and a SHA-256 of the generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: u64,
    pub degree: usize,
    pub generators: String,
}

impl Fingerprint {
    pub fn of(g: &PermGroup) -> Self {
        let mut h = Sha256::new();
        hash_perms(&mut h, g.generators());
        Fingerprint {
            order: g.order(),
            degree: g.degree(),
            generators: hex::encode(h.finalize()),
        }
    }
}

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "order={} degree={} generators={}",
            self.order,
            self.degree,
            &self.generators[..16]
        )
    }
}

/// Member count, member orders and a SHA-256 over the member generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFingerprint {
    pub member_orders: Vec<u64>,
    pub hash: String,
}

impl FamilyFingerprint {
    pub fn of(fam: &SubgroupFamily) -> Self {
        let mut h = Sha256::new();
        for m in fam.members() {
            h.update((m.generators().len() as u32).to_le_bytes());
            hash_perms(&mut h, m.generators());
        }
        FamilyFingerprint {
            member_orders: fam.members().iter().map(|m| m.order()).collect(),
            hash: hex::encode(h.finalize()),
        }
    }
}

/// The recorded outcome of realizing the active sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultFingerprint {
    pub encoding: Encoding,
    pub order: u64,
    pub image_order: u64,
    pub kernel_order: u64,
    pub generating: bool,
    pub iso: bool,
    pub presentation: String,
}

impl ResultFingerprint {
    pub fn of(r: &ActiveSumResult) -> Self {
        let mut h = Sha256::new();
        h.update(r.presentation.to_text().as_bytes());
        ResultFingerprint {
            encoding: r.encoding,
            order: r.order,
            image_order: r.image_order,
            kernel_order: r.kernel_order,
            generating: r.generating,
            iso: r.iso,
            presentation: hex::encode(h.finalize()),
        }
    }
}

/// Hypothesis results recorded in an active-sum node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypothesisRecord {
    pub distinct: bool,
    pub closed: bool,
    pub exponent_divides: bool,
}

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Justification {
    /// `C_m` is `C_m`-cellular. Taken as an axiom of the certificate system.
    SelfCellular { m: u64 },
    /// A `C_m`-cellular group is `C_n`-cellular when `m | n`; `inner`
    /// certifies the same subject at `m`.
    DivisorLift {
        m: u64,
        inner: Box<CellularityCertificate>,
    },
    /// The active sum of a conjugation-closed family of distinct
    /// `C_n`-cellular subgroups of exponent dividing `n` is `C_n`-cellular.
    ActiveSum {
        ambient: Fingerprint,
        family: FamilyFingerprint,
        hypotheses: HypothesisRecord,
        result: ResultFingerprint,
        members: Vec<CellularityCertificate>,
        /// Raw inputs, kept for re-verification.
        ambient_group: PermGroup,
        family_members: SubgroupFamily,
    },
}

/// A certificate that `subject` is `C_n`-cellular.
#[derive(Debug, Clone)]
pub struct CellularityCertificate {
    pub subject: Fingerprint,
    pub n: u64,
    pub justification: Justification,
    /// The certified group itself (for active-sum nodes, the realized `S`).
    pub subject_group: PermGroup,
}

impl CellularityCertificate {
    /// Leaf `SelfCellular(C_m)` for a cyclic group of order `m | n`, lifted to
    /// `n` when `m < n`.
    pub fn cyclic(group: &PermGroup, n: u64) -> Result<Self> {
        let m = group.order();
        if !n.is_multiple_of(m) {
            return Err(Error::Divisibility { m, n });
        }
        let subject = Fingerprint::of(group);
        let leaf = CellularityCertificate {
            subject: subject.clone(),
            n: m,
            justification: Justification::SelfCellular { m },
            subject_group: group.clone(),
        };
        if m == n {
            return Ok(leaf);
        }
        Ok(CellularityCertificate {
            subject,
            n,
            justification: Justification::DivisorLift {
                m,
                inner: Box::new(leaf),
            },
            subject_group: group.clone(),
        })
    }

    /// The active-sum result this certificate records, when it is an
    /// active-sum node.
    pub fn result(&self) -> Option<&ResultFingerprint> {
        match &self.justification {
            Justification::ActiveSum { result, .. } => Some(result),
            _ => None,
        }
    }

    /// The group whose active sum is certified, for an active-sum node.
    pub fn ambient(&self) -> Option<&PermGroup> {
        match &self.justification {
            Justification::ActiveSum { ambient_group, .. } => Some(ambient_group),
            _ => None,
        }
    }

    /// Deterministic indented text form.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        self.write_text(&mut s, 0);
        s
    }

    fn write_text(&self, s: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        let _ = writeln!(s, "{pad}certificate C_{}-cellular", self.n);
        let _ = writeln!(s, "{pad}  subject {}", self.subject);
        match &self.justification {
            Justification::SelfCellular { m } => {
                let _ = writeln!(s, "{pad}  rule self-cellular m={m}");
            }
            Justification::DivisorLift { m, inner } => {
                let _ = writeln!(s, "{pad}  rule divisor-lift m={m} n={}", self.n);
                inner.write_text(s, depth + 2);
            }
            Justification::ActiveSum {
                ambient,
                family,
                hypotheses,
                result,
                members,
                ..
            } => {
                let orders: Vec<String> = family.member_orders.iter().map(u64::to_string).collect();
                let _ = writeln!(s, "{pad}  rule active-sum");
                let _ = writeln!(s, "{pad}    ambient {ambient}");
                let _ = writeln!(
                    s,
                    "{pad}    family members={} orders={} hash={}",
                    orders.len(),
                    orders.join(","),
                    &family.hash[..16]
                );
                let _ = writeln!(s, "{pad}    hypothesis distinct={}", hypotheses.distinct);
                let _ = writeln!(s, "{pad}    hypothesis closed={}", hypotheses.closed);
                let _ = writeln!(
                    s,
                    "{pad}    hypothesis exponent-divides={}",
                    hypotheses.exponent_divides
                );
                let _ = writeln!(
                    s,
                    "{pad}    result encoding={} order_S={} image_phi={} kernel_phi={} generating={} iso={} presentation={}",
                    result.encoding,
                    result.order,
                    result.image_order,
                    result.kernel_order,
                    result.generating,
                    result.iso,
                    &result.presentation[..16]
                );
                for (i, c) in members.iter().enumerate() {
                    let _ = writeln!(s, "{pad}    member {i}");
                    c.write_text(s, depth + 3);
                }
            }
        }
    }
}

fn violation(which: Hypothesis, witness: String) -> Error {
    Error::HypothesisViolation { which, witness }
}

/// Checks the active-sum hypotheses for `fam` at `n`, realizes the active sum
/// and certifies it `C_n`-cellular.
///
/// Cyclic members get the leaf certificate. A non-cyclic member `F` needs a
/// certificate from `supplied(F)`: an active-sum certificate with ambient
/// `F` (same fingerprint), `φ` an isomorphism and `n'` dividing `n`.
pub fn certify_theorem2_with(
    ambient: &PermGroup,
    fam: &SubgroupFamily,
    n: u64,
    supplied: &dyn Fn(&PermGroup) -> Option<CellularityCertificate>,
    opts: &EnumerationOptions,
    limits: &Limits,
) -> Result<CellularityCertificate> {
    if n == 0 {
        return Err(Error::Validation("n must be positive".into()));
    }
    if let Some((i, j)) = fam.distinctness_witness() {
        return Err(violation(
            Hypothesis::DistinctMembers,
            format!("members {i} and {j} are equal"),
        ));
    }
    if let Some((i, g)) = fam.closure_witness(limits)? {
        return Err(violation(
            Hypothesis::ConjugationClosed,
            format!("member {i} conjugated by {g} is not in the family"),
        ));
    }
    if let Some((i, e)) = exponent_violation(fam, n, limits)? {
        return Err(violation(
            Hypothesis::ExponentDivides,
            format!("member {i} has exponent {e}, which does not divide {n}"),
        ));
    }
    let mut members = Vec::with_capacity(fam.len());
    for (i, m) in fam.members().iter().enumerate() {
        let cert = if m.cyclic_generator(limits)?.is_some() {
            CellularityCertificate::cyclic(m.group(), n)?
        } else {
            let c = supplied(m.group()).ok_or_else(|| {
                violation(
                    Hypothesis::MemberCertificate,
                    format!("member {i} (order {}) is not cyclic and no certificate was supplied", m.order()),
                )
            })?;
            lift_supplied(c, m.group(), n).map_err(|w| violation(Hypothesis::MemberCertificate, format!("member {i}: {w}")))?
        };
        members.push(cert);
    }
    let encoding = if fam.all_cyclic(limits)? {
        Encoding::Cyclic
    } else {
        Encoding::Regular
    };
    let r = realize_active_sum(ambient, fam, encoding, opts, limits)?;
    Ok(CellularityCertificate {
        subject: Fingerprint::of(&r.group),
        n,
        justification: Justification::ActiveSum {
            ambient: Fingerprint::of(ambient),
            family: FamilyFingerprint::of(fam),
            hypotheses: HypothesisRecord {
                distinct: true,
                closed: true,
                exponent_divides: true,
            },
            result: ResultFingerprint::of(&r),
            members,
            ambient_group: ambient.clone(),
            family_members: fam.clone(),
        },
        subject_group: r.group,
    })
}

/// A supplied certificate for a non-cyclic member, re-targeted at the member
/// and lifted to `n`.
fn lift_supplied(
    c: CellularityCertificate,
    member: &PermGroup,
    n: u64,
) -> std::result::Result<CellularityCertificate, String> {
    let ok_ambient = matches!(&c.justification, Justification::ActiveSum { ambient, result, .. }
        if *ambient == Fingerprint::of(member) && result.iso);
    if !ok_ambient {
        return Err("supplied certificate is not an isomorphic active sum over this member".into());
    }
    if !n.is_multiple_of(c.n) {
        return Err(format!("supplied certificate is for C_{}, which does not divide {n}", c.n));
    }
    if c.n == n {
        return Ok(c);
    }
    Ok(CellularityCertificate {
        subject: c.subject.clone(),
        n,
        subject_group: c.subject_group.clone(),
        justification: Justification::DivisorLift {
            m: c.n,
            inner: Box::new(c),
        },
    })
}

/// [`certify_theorem2_with`] without supplied member certificates.
pub fn certify_theorem2(
    ambient: &PermGroup,
    fam: &SubgroupFamily,
    n: u64,
    opts: &EnumerationOptions,
    limits: &Limits,
) -> Result<CellularityCertificate> {
    certify_theorem2_with(ambient, fam, n, &|_| None, opts, limits)
}

/// One named check performed by [`verify_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub path: String,
    pub what: &'static str,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn accepted(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// Re-checks every recorded fact of `cert` from its raw inputs: divisibility
/// of each lift, the leaf rule, the family hypotheses, a fresh realization of
/// each active sum and all fingerprints.
pub fn verify_certificate(
    cert: &CellularityCertificate,
    opts: &EnumerationOptions,
    limits: &Limits,
) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    verify_node(cert, "root", opts, limits, &mut checks)?;
    Ok(VerificationReport { checks })
}

fn verify_node(
    cert: &CellularityCertificate,
    path: &str,
    opts: &EnumerationOptions,
    limits: &Limits,
    checks: &mut Vec<Check>,
) -> Result<()> {
    macro_rules! check {
        ($what:expr, $ok:expr) => {{
            let ok = $ok;
            checks.push(Check {
                path: path.to_string(),
                what: $what,
                ok,
            })
        }};
    }
    check!("subject fingerprint", cert.subject == Fingerprint::of(&cert.subject_group));
    check!("n positive", cert.n > 0);
    match &cert.justification {
        Justification::SelfCellular { m } => {
            let g = &cert.subject_group;
            let cyclic = g.generators().iter().any(|x| x.order() == g.order())
                || g.elements(limits)?.iter().any(|x| x.order() == g.order());
            check!("leaf m = n", *m == cert.n);
            check!("leaf order", g.order() == *m);
            check!("leaf cyclic", cyclic);
        }
        Justification::DivisorLift { m, inner } => {
            check!("lift divides", *m > 0 && cert.n.is_multiple_of(*m));
            check!("lift inner n", inner.n == *m);
            check!("lift same subject", inner.subject == cert.subject);
            verify_node(inner, &format!("{path}/lift"), opts, limits, checks)?;
        }
        Justification::ActiveSum {
            ambient,
            family,
            hypotheses,
            result,
            members,
            ambient_group,
            family_members,
        } => {
            let n = cert.n;
            check!("ambient fingerprint", *ambient == Fingerprint::of(ambient_group));
            check!("family fingerprint", *family == FamilyFingerprint::of(family_members));
            let distinct = family_members.is_distinct();
            let closed = family_members.is_conjugation_closed(limits)?;
            let exp = exponent_violation(family_members, n, limits)?.is_none();
            check!("recorded distinct", hypotheses.distinct && distinct);
            check!("recorded closed", hypotheses.closed && closed);
            check!("recorded exponent", hypotheses.exponent_divides && exp);
            check!("member count", members.len() == family_members.len());
            for (i, (c, m)) in members.iter().zip(family_members.members()).enumerate() {
                let mut subject_ok = c.n == n;
                subject_ok &= match &c.justification {
                    Justification::SelfCellular { .. } => c.subject == Fingerprint::of(m.group()),
                    Justification::DivisorLift { inner, .. }
                        if matches!(inner.justification, Justification::SelfCellular { .. }) =>
                    {
                        c.subject == Fingerprint::of(m.group())
                    }
                    _ => {
                        let node = match &c.justification {
                            Justification::DivisorLift { inner, .. } => inner.as_ref(),
                            _ => c,
                        };
                        match &node.justification {
                            Justification::ActiveSum { ambient, result, .. } => {
                                *ambient == Fingerprint::of(m.group()) && result.iso
                            }
                            _ => false,
                        }
                    }
                };
                check!("member certificate matches member", subject_ok);
                verify_node(c, &format!("{path}/member{i}"), opts, limits, checks)?;
            }
            let fresh = realize_active_sum(ambient_group, family_members, result.encoding, opts, limits)?;
            check!("active sum recomputed", ResultFingerprint::of(&fresh) == *result);
            check!("subject is the active sum", Fingerprint::of(&fresh.group) == cert.subject);
        }
    }
    Ok(())
}

// Schur multiplier fixtures.

/// Invariant factors of `H_2(G)` for named groups, as supplied by a fixture.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchurData {
    entries: BTreeMap<String, Vec<u64>>,
}

type Signature = (u64, u64, Vec<u64>);

fn signature(g: &PermGroup, limits: &Limits) -> Result<Signature> {
    let mut classes = g.class_sizes(limits)?;
    classes.sort_unstable();
    Ok((g.order(), g.exponent(limits)?, classes))
}

impl SchurData {
    /// Lines `name: f1 f2 ...`; `#` starts a comment; an empty list means a
    /// trivial multiplier.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (name, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(i + 1, "expected `name: factors`"))?;
            let name = name.trim();
            if name.is_empty() {
                return Err(Error::parse(i + 1, "empty group name"));
            }
            let mut factors = Vec::new();
            for tok in rest.split_whitespace() {
                let f: u64 = tok
                    .parse()
                    .map_err(|_| Error::parse(i + 1, format!("bad invariant factor {tok:?}")))?;
                if f < 2 {
                    return Err(Error::parse(i + 1, format!("invariant factor {f} is below 2")));
                }
                factors.push(f);
            }
            if entries.insert(name.to_string(), factors).is_some() {
                return Err(Error::parse(i + 1, format!("duplicate entry {name:?}")));
            }
        }
        Ok(SchurData { entries })
    }

    pub fn insert(&mut self, name: impl Into<String>, factors: Vec<u64>) {
        self.entries.insert(name.into(), factors);
    }

    pub fn get(&self, name: &str) -> Option<&[u64]> {
        self.entries.get(name).map(Vec::as_slice)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// Factors for `g`, identified among the named entries by order, exponent
    /// and conjugacy-class sizes. No match, or matches that disagree, give
    /// `MissingSchurData`.
    pub fn identify(&self, g: &PermGroup, limits: &Limits) -> Result<(String, Vec<u64>)> {
        let sig = signature(g, limits)?;
        let mut matches: Vec<(&str, &Vec<u64>)> = Vec::new();
        for (name, factors) in &self.entries {
            let h = named_group(name)?;
            if h.order() != sig.0 {
                continue;
            }
            if signature(&h, limits)? == sig {
                matches.push((name, factors));
            }
        }
        let describe = || format!("group of order {} and exponent {}", sig.0, sig.1);
        match matches.first() {
            None => Err(Error::MissingSchurData(describe())),
            Some((name, factors)) => {
                if matches.iter().any(|(_, f)| f != factors) {
                    let names: Vec<&str> = matches.iter().map(|m| m.0).collect();
                    return Err(Error::MissingSchurData(format!(
                        "{}: ambiguous among {}",
                        describe(),
                        names.join(", ")
                    )));
                }
                Ok((name.to_string(), (*factors).clone()))
            }
        }
    }
}

fn primes_of_factors(factors: &[u64]) -> Vec<u64> {
    let mut ps: Vec<u64> = factors.iter().flat_map(|&f| prime_divisors(f)).collect();
    ps.sort_unstable();
    ps.dedup();
    ps
}

/// Whether the primes of the supplied `|H_2(S)|` all divide `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corollary1Report {
    pub identified_as: String,
    pub factors: Vec<u64>,
    pub primes: Vec<u64>,
    pub n: u64,
    pub pass: bool,
}

impl Corollary1Report {
    pub fn report(&self) -> String {
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        format!(
            "schur_group={}\nschur_factors={}\nschur_primes={}\nn_primes={}\nschur_primes_check={}\n",
            self.identified_as,
            list(&self.factors),
            list(&self.primes),
            list(&prime_divisors(self.n)),
            if self.pass { "pass" } else { "fail" }
        )
    }
}

pub fn corollary1_check(
    cert: &CellularityCertificate,
    schur: &SchurData,
    limits: &Limits,
) -> Result<Corollary1Report> {
    let (name, factors) = schur.identify(&cert.subject_group, limits)?;
    Ok(corollary1_from_factors(name, factors, cert.n))
}

pub(crate) fn corollary1_from_factors(identified_as: String, factors: Vec<u64>, n: u64) -> Corollary1Report {
    let primes = primes_of_factors(&factors);
    let pass = primes.iter().all(|p| n.is_multiple_of(*p));
    Corollary1Report {
        identified_as,
        factors,
        primes,
        n,
        pass,
    }
}

/// Both sides of "`C_n`-injection ⇒ isomorphism", computed independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corollary2Report {
    pub schur_group: String,
    pub schur_factors: Vec<u64>,
    /// `π(H_2(G)) ⊆ π(n)`.
    pub hypotheses_met: bool,
    pub injection: bool,
    pub iso: bool,
}

impl Corollary2Report {
    pub fn forward_holds(&self) -> bool {
        !self.hypotheses_met || !self.injection || self.iso
    }

    /// Isomorphisms are `C_n`-injections.
    pub fn reverse_holds(&self) -> bool {
        !self.iso || self.injection
    }

    pub fn passes(&self) -> bool {
        self.hypotheses_met && self.forward_holds() && self.reverse_holds()
    }

    pub fn report(&self) -> String {
        if !self.hypotheses_met {
            return format!(
                "schur_group={}\ninjection_iso_check=hypotheses not met\n",
                self.schur_group
            );
        }
        format!(
            "schur_group={}\ncn_injection={}\niso={}\nforward={}\nreverse={}\ninjection_iso_check={}\n",
            self.schur_group,
            self.injection,
            self.iso,
            self.forward_holds(),
            self.reverse_holds(),
            if self.passes() { "pass" } else { "fail" }
        )
    }
}

pub fn corollary2_check(
    ambient: &PermGroup,
    fam: &SubgroupFamily,
    n: u64,
    schur: &SchurData,
    opts: &EnumerationOptions,
    limits: &Limits,
) -> Result<Corollary2Report> {
    if !is_generating(fam) {
        return Err(violation(
            Hypothesis::Generating,
            format!("the family generates a subgroup of index {}", ambient.order() / crate::family::generated_subgroup(fam).order()),
        ));
    }
    let (name, factors) = schur.identify(ambient, limits)?;
    let primes = primes_of_factors(&factors);
    let hypotheses_met = primes.iter().all(|p| n.is_multiple_of(*p));
    let cert = certify_theorem2(ambient, fam, n, opts, limits)?;
    let iso = cert.result().expect("active-sum node").iso;
    let injection = if hypotheses_met {
        let encoding = cert.result().unwrap().encoding;
        let r = realize_active_sum(ambient, fam, encoding, opts, limits)?;
        is_cn_injection(&r.phi, n, limits)?
    } else {
        false
    };
    Ok(Corollary2Report {
        schur_group: name,
        schur_factors: factors,
        hypotheses_met,
        injection,
        iso,
    })
}
