//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use active_sum::cellularity::{
    corollary1_check, corollary2_check, torsion_generated_order, verify_certificate,
    CellularityCertificate,
};
use active_sum::fp::{abelianization, active_sum_presentation};
use active_sum::*;

const COXETER_LIMIT: Duration = Duration::from_secs(5);
const SWEEP_LIMIT: Duration = Duration::from_secs(60);
const SL32_LIMIT: Duration = Duration::from_secs(120);
const SWEEP_N: [u64; 6] = [2, 3, 4, 6, 8, 12];
const SL32_BUDGET: usize = 1_000_000;

fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(rel)
}

fn read(rel: &str) -> String {
    std::fs::read_to_string(fixture(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

fn schur() -> SchurData {
    SchurData::parse(&read("schur.txt")).unwrap()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

type Criterion = fn(&mut Vec<CellularityCertificate>) -> Result<Outcome>;

fn transposition_family(k: usize, l: &Limits) -> (PermGroup, SubgroupFamily) {
    let g = PermGroup::symmetric(k).unwrap();
    let t = Subgroup::new(&g, vec![Perm::parse_cycles(k, "(0 1)").unwrap()], l).unwrap();
    let fam = conjugation_closure(&g, vec![t], l).unwrap();
    (g, fam)
}

const COXETER: &[(&str, &str, u64)] = &[
    ("A1", "coxeter/a1.cox", 2),
    ("A2", "coxeter/a2.cox", 6),
    ("A3", "coxeter/a3.cox", 24),
    ("B2", "coxeter/b2.cox", 8),
    ("B3", "coxeter/b3.cox", 48),
    ("I2(4)", "coxeter/i2_4.cox", 8),
    ("I2(5)", "coxeter/i2_5.cox", 10),
    ("I2(6)", "coxeter/i2_6.cox", 12),
    ("H3", "coxeter/h3.cox", 120),
];

fn coxeter_reproduction(certs: &mut Vec<CellularityCertificate>) -> Result<Outcome> {
    let l = Limits::default();
    let opts = EnumerationOptions::default();
    let start = Instant::now();
    let mut failures = Vec::new();
    for &(name, path, expected) in COXETER {
        let m = CoxeterMatrix::parse(&read(path))?;
        let (w, fam) = coxeter_reflection_family(&m, &opts, &l)?;
        let cert = certify_theorem2(&w, &fam, 2, &opts, &l)?;
        let r = cert.result().unwrap().clone();
        let verified = verify_certificate(&cert, &opts, &l)?.accepted();
        if w.order() != expected || r.order != w.order() || !r.iso || !verified {
            failures.push(format!(
                "{name}: |W|={} order_S={} iso={} verified={verified}",
                w.order(),
                r.order,
                r.iso
            ));
        }
        certs.push(cert);
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < COXETER_LIMIT;
    Ok(outcome(
        pass,
        format!(
            "{} Coxeter groups, order_S = |W| and phi iso, certificates verified, {:.2?} (limit {:?}){}",
            COXETER.len(),
            elapsed,
            COXETER_LIMIT,
            if failures.is_empty() { String::new() } else { format!("; {}", failures.join("; ")) }
        ),
    ))
}

fn trivial_families(_: &mut Vec<CellularityCertificate>) -> Result<Outcome> {
    let l = Limits::default();
    let opts = EnumerationOptions::default();
    let mut failures = Vec::new();
    let (mut whole, mut normal) = (0, 0);
    for g in small_catalog(16)? {
        let fam = SubgroupFamily::from_members(&g, vec![Subgroup::whole(&g, &l)]);
        let r = realize_active_sum(&g, &fam, Encoding::Regular, &opts, &l)?;
        whole += 1;
        if r.order != g.order() || !r.iso {
            failures.push(format!("{{{}}}: order_S={}", g.name().unwrap(), r.order));
        }
        let mut seen: Vec<Subgroup> = Vec::new();
        for x in g.elements(&l)? {
            let c = Subgroup::new(&g, vec![x.clone()], &l)?;
            if !c.is_normal() || seen.contains(&c) {
                continue;
            }
            let fam = SubgroupFamily::from_members(&g, vec![c.clone()]);
            let r = realize_active_sum(&g, &fam, Encoding::Cyclic, &opts, &l)?;
            normal += 1;
            if r.order != c.order() || r.image_order != c.order() {
                failures.push(format!(
                    "{}: normal <{x}> order {} gives order_S={}",
                    g.name().unwrap(),
                    c.order(),
                    r.order
                ));
            }
            seen.push(c);
        }
    }
    Ok(outcome(
        failures.is_empty(),
        format!(
            "{whole} families {{G}} and {normal} families {{C}} with C normal cyclic{}",
            if failures.is_empty() { String::new() } else { format!("; {}", failures.join("; ")) }
        ),
    ))
}

fn divisor_sweep(_: &mut Vec<CellularityCertificate>) -> Result<Outcome> {
    let l = Limits::default();
    let start = Instant::now();
    let cat = small_catalog(16)?;
    let r = property_sweep(&cat, &SWEEP_N, None, &l)?;
    let elapsed = start.elapsed();
    Ok(outcome(
        r.violations.is_empty() && elapsed < SWEEP_LIMIT,
        format!(
            "{} groups, {} homomorphisms, {} equivalences, {} divisor checks, {} implications, violations={}, {:.2?} (limit {:?})",
            r.groups,
            r.homomorphisms,
            r.equivalences,
            r.lemma1a_checks,
            r.lemma1b_checks,
            r.violations.len(),
            elapsed,
            SWEEP_LIMIT
        ),
    ))
}

fn fixture_certificates(certs: &mut Vec<CellularityCertificate>) -> Result<()> {
    let l = Limits::default();
    let opts = EnumerationOptions::default();
    let names = [
        "sym2", "sym3", "sym4", "sym5", "alt3", "alt4", "alt5", "dihedral3", "dihedral4",
        "dihedral5", "dihedral6", "dihedral7", "dihedral8", "sl2_2", "sl2_3", "sl3_2",
    ];
    for name in names {
        let g = named_group(name)?;
        for m in [2u64, 3, 4, 5, 6] {
            let fam = cyclic_family(&g, m, &l)?;
            if fam.is_empty() {
                continue;
            }
            certs.push(certify_theorem2(&g, &fam, m, &opts, &l)?);
        }
    }
    for k in [3, 4] {
        let (g, fam) = transposition_family(k, &l);
        certs.push(certify_theorem2(&g, &fam, 2, &opts, &l)?);
    }
    Ok(())
}

fn necessary_condition(certs: &mut Vec<CellularityCertificate>) -> Result<Outcome> {
    let l = Limits::default();
    fixture_certificates(certs)?;
    let mut failures = Vec::new();
    for c in certs.iter() {
        let s = &c.subject_group;
        let fast = is_cn_generated(s, c.n, &l)?;
        let full = torsion_generated_order(s, c.n, &l)? == s.order();
        if !(fast && full) {
            failures.push(format!("subject of order {} at n={}", s.order(), c.n));
        }
    }
    Ok(outcome(
        failures.is_empty(),
        format!(
            "{} certificates, <S_n> = S for all{}",
            certs.len(),
            if failures.is_empty() { String::new() } else { format!("; violations: {}", failures.join("; ")) }
        ),
    ))
}

fn a4_negative(_: &mut Vec<CellularityCertificate>) -> Result<Outcome> {
    let l = Limits::default();
    let opts = EnumerationOptions::default();
    let a4 = PermGroup::alternating(4)?;
    let fam = cyclic_family(&a4, 3, &l)?;
    let cert = certify_theorem2(&a4, &fam, 3, &opts, &l)?;
    let r = cert.result().unwrap().clone();
    let p = active_sum_presentation(&fam, r.encoding, &l)?;
    let oracle = common::oracle_order(&p, 14);
    let schur = schur();
    let c1 = corollary1_check(&cert, &schur, &l)?;
    let a4_factors = schur.identify(&a4, &l)?.1;
    let a4_excluded = a4_factors.iter().any(|f| 3 % f != 0);
    let pass = r.order != 12
        && r.image_order == 12
        && oracle == Some(r.order)
        && c1.pass
        && a4_excluded
        && verify_certificate(&cert, &opts, &l)?.accepted();
    Ok(outcome(
        pass,
        format!(
            "order_S={} oracle={:?} image_phi={} kernel_phi={}; S identified as {} with H_2 factors {:?}; H_2(A4) factors {:?}",
            r.order, oracle, r.image_order, r.kernel_order, c1.identified_as, c1.factors, a4_factors
        ),
    ))
}

fn sl32_stress(_: &mut Vec<CellularityCertificate>) -> Result<Outcome> {
    let l = Limits::default();
    let opts = EnumerationOptions::with_budget(SL32_BUDGET);
    let start = Instant::now();
    let g = sl_to_perm(3, 2)?;
    let fam = cyclic_family(&g, 3, &l)?;
    let cert = certify_theorem2(&g, &fam, 3, &opts, &l)?;
    let r = cert.result().unwrap().clone();
    let elapsed = start.elapsed();
    Ok(outcome(
        fam.len() == 28 && r.order > 0 && r.order % 168 == 0 && elapsed < SL32_LIMIT,
        format!(
            "{} members, order_S={} (= {} x 168), kernel_phi={} (diagnostic), {:.2?} (limit {:?})",
            fam.len(),
            r.order,
            r.order / 168,
            r.kernel_order,
            elapsed,
            SL32_LIMIT
        ),
    ))
}

fn cross_checks(_: &mut Vec<CellularityCertificate>) -> Result<Outcome> {
    let l = Limits::default();
    let opts = EnumerationOptions::default();
    let mut cases: Vec<(String, PermGroup, SubgroupFamily)> = Vec::new();
    for &(name, path, _) in COXETER {
        let m = CoxeterMatrix::parse(&read(path))?;
        let (w, fam) = coxeter_reflection_family(&m, &opts, &l)?;
        cases.push((format!("cox {name}"), w, fam));
    }
    for g in small_catalog(16)? {
        for m in [2, 3, 4] {
            let fam = cyclic_family(&g, m, &l)?;
            if !fam.is_empty() {
                cases.push((format!("{} cyclic:{m}", g.name().unwrap()), g.clone(), fam));
            }
        }
    }
    for name in ["sym4", "alt4", "alt5", "sl3_2"] {
        let g = named_group(name)?;
        for m in [2, 3] {
            cases.push((format!("{name} cyclic:{m}"), g.clone(), cyclic_family(&g, m, &l)?));
        }
    }
    let mut failures = Vec::new();
    let (mut ab_checked, mut enc_checked, mut perm_checked) = (0, 0, 0);
    for (label, g, fam) in &cases {
        let cyc = realize_active_sum(g, fam, Encoding::Cyclic, &opts, &l)?;
        let reg = realize_active_sum(g, fam, Encoding::Regular, &opts, &l)?;
        enc_checked += 1;
        if cyc.order != reg.order {
            failures.push(format!("{label}: cyclic {} vs regular {}", cyc.order, reg.order));
        }
        for r in [&cyc, &reg] {
            if let Some(ab) = abelianization(&r.presentation)?.order() {
                ab_checked += 1;
                if r.order % ab != 0 {
                    failures.push(format!("{label}: |S^ab|={ab} does not divide {}", r.order));
                }
            }
        }
        let n = fam.len();
        let orders: [Vec<usize>; 2] = [(0..n).rev().collect(), (0..n).map(|i| (i + n / 2) % n).collect()];
        for order in orders {
            let p = realize_active_sum(g, &fam.permuted(&order)?, Encoding::Cyclic, &opts, &l)?;
            perm_checked += 1;
            if p.order != cyc.order {
                failures.push(format!("{label}: permuted order_S {} vs {}", p.order, cyc.order));
            }
        }
    }
    Ok(outcome(
        failures.is_empty(),
        format!(
            "{} families: {ab_checked} abelianization divisibility checks, {enc_checked} encoding comparisons, {perm_checked} permuted families{}",
            cases.len(),
            if failures.is_empty() { String::new() } else { format!("; {}", failures.join("; ")) }
        ),
    ))
}

fn injection_implies_iso(_: &mut Vec<CellularityCertificate>) -> Result<Outcome> {
    let l = Limits::default();
    let opts = EnumerationOptions::default();
    let schur = schur();
    let mut parts = Vec::new();
    let mut pass = true;
    for k in [3, 4] {
        let (g, fam) = transposition_family(k, &l);
        let r = corollary2_check(&g, &fam, 2, &schur, &opts, &l)?;
        pass &= r.hypotheses_met && r.injection && r.iso && r.passes();
        parts.push(format!(
            "S{k}: H_2 {:?}, cn_injection={} iso={} forward={} reverse={}",
            r.schur_factors,
            r.injection,
            r.iso,
            r.forward_holds(),
            r.reverse_holds()
        ));
    }
    Ok(outcome(pass, parts.join("; ")))
}

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("coxeter reproduction", coxeter_reproduction),
        ("trivial-family identities", trivial_families),
        ("divisor sweep over catalog homomorphisms", divisor_sweep),
        ("certified subjects are C_n-generated", necessary_condition),
        ("A4 order-3 family at n = 3", a4_negative),
        ("SL(3,2) order-3 family", sl32_stress),
        ("abelianization, encoding and ordering cross-checks", cross_checks),
        ("injection implies isomorphism for S3, S4", injection_implies_iso),
    ];
    let mut certs = Vec::new();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run(&mut certs).unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} [{name}] {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
