use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use active_sum::cellularity::{corollary1_check, corollary2_check, verify_certificate};
use active_sum::fp::{abelianization, Strategy};
use active_sum::io::{family_from_seeds, family_from_spec, group_from_spec};
use active_sum::{
    certify_theorem2, coxeter_reflection_family, realize_active_sum, small_catalog, todd_coxeter,
    CoxeterMatrix, Encoding, EnumerationOptions, Error, Limits, Perm, PermGroup, Presentation,
    Result, SchurData, SubgroupFamily,
};
use clap::{Args, ValueEnum};

use crate::RunOptions;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. }
        | Error::CutoffExceeded { .. }
        | Error::FamilyTooLarge { .. }
        | Error::Overflow(_) => 2,
        Error::Parse { .. } => 3,
        _ => 1,
    }
}

pub fn emit(out: &Output, run: &RunOptions) -> Result<u8> {
    match &run.output {
        Some(path) => std::fs::write(path, &out.text)
            .map_err(|e| Error::Validation(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{}", out.text),
    }
    Ok(out.code)
}

fn limits(run: &RunOptions) -> Limits {
    Limits {
        element_listing: run.element_cutoff,
        family_cap: run.family_cap,
        coset_budget: run.budget,
        ..Limits::default()
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum EncodingArg {
    /// Cyclic when every member is cyclic, regular otherwise.
    Auto,
    Cyclic,
    Regular,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StrategyArg {
    Hlt,
    Felsch,
}

fn options(run: &RunOptions, strategy: StrategyArg) -> EnumerationOptions {
    EnumerationOptions {
        budget: run.budget,
        strategy: match strategy {
            StrategyArg::Hlt => Strategy::Hlt,
            StrategyArg::Felsch => Strategy::Felsch,
        },
    }
}

#[derive(Args, Debug)]
pub struct FamilyInput {
    /// Ambient group: a name (sym3, alt4, cyclic:6, dihedral:5, sl:3:2, Q8, ...) or a group file.
    #[arg(long)]
    group: Option<String>,
    /// Family: cyclic:<m>, A<k>, S<k> or a family file; closed under conjugation.
    #[arg(long, conflicts_with = "seed")]
    family: Option<String>,
    /// Seed subgroup generators in cycle notation, `;`-separated; repeatable.
    #[arg(long)]
    seed: Vec<String>,
    /// Coxeter matrix file or type name (A3, B3, H3, I2(5), ...); the family is the reflections.
    #[arg(long, conflicts_with_all = ["group", "family", "seed"])]
    coxeter: Option<String>,
}

struct Input {
    label: String,
    group: PermGroup,
    family: SubgroupFamily,
}

fn load_input(f: &FamilyInput, opts: &EnumerationOptions, limits: &Limits) -> Result<Input> {
    if let Some(c) = &f.coxeter {
        let m = if Path::new(c).is_file() {
            let text = std::fs::read_to_string(c)
                .map_err(|e| Error::Validation(format!("cannot read {c}: {e}")))?;
            CoxeterMatrix::parse(&text)?
        } else {
            CoxeterMatrix::named(c)?
        };
        let (group, family) = coxeter_reflection_family(&m, opts, limits)?;
        return Ok(Input {
            label: format!("coxeter:{c}"),
            group,
            family,
        });
    }
    let spec = f
        .group
        .as_deref()
        .ok_or_else(|| Error::Validation("one of --group or --coxeter is required".into()))?;
    let group = group_from_spec(spec)?;
    let family = match (&f.family, f.seed.is_empty()) {
        (Some(spec), _) => family_from_spec(&group, spec, limits)?,
        (None, false) => {
            let seeds = f
                .seed
                .iter()
                .map(|s| {
                    s.split(';')
                        .map(|g| Perm::parse_cycles(group.degree(), g.trim()))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            family_from_seeds(&group, seeds, limits)?
        }
        (None, true) => return Err(Error::Validation("one of --family or --seed is required".into())),
    };
    Ok(Input {
        label: spec.to_string(),
        group,
        family,
    })
}

fn family_summary(s: &mut String, input: &Input) {
    let orders: Vec<String> = input.family.members().iter().map(|m| m.order().to_string()).collect();
    let _ = writeln!(s, "group={}", input.label);
    let _ = writeln!(s, "group_order={}", input.group.order());
    let _ = writeln!(s, "group_degree={}", input.group.degree());
    let _ = writeln!(s, "family_members={}", input.family.len());
    let _ = writeln!(s, "family_orders={}", orders.join(","));
}

fn choose_encoding(arg: EncodingArg, fam: &SubgroupFamily, limits: &Limits) -> Result<Encoding> {
    Ok(match arg {
        EncodingArg::Cyclic => Encoding::Cyclic,
        EncodingArg::Regular => Encoding::Regular,
        EncodingArg::Auto => {
            if fam.all_cyclic(limits)? {
                Encoding::Cyclic
            } else {
                Encoding::Regular
            }
        }
    })
}

#[derive(Args, Debug)]
pub struct ActiveSumArgs {
    #[command(flatten)]
    input: FamilyInput,
    /// Also report whether every member's exponent divides n.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,
    #[arg(long, value_enum, default_value_t = EncodingArg::Auto)]
    encoding: EncodingArg,
    #[arg(long, value_enum, default_value_t = StrategyArg::Hlt)]
    strategy: StrategyArg,
}

pub fn active_sum(a: &ActiveSumArgs, run: &RunOptions) -> Result<Output> {
    let limits = limits(run);
    let opts = options(run, a.strategy);
    let input = load_input(&a.input, &opts, &limits)?;
    let mut s = String::from("command=active-sum\n");
    family_summary(&mut s, &input);
    if let Some(n) = a.n {
        let ok = active_sum::family::exponent_divides(&input.family, n, &limits)?;
        let _ = writeln!(s, "n={n}\nexponent_divides={ok}");
    }
    let encoding = choose_encoding(a.encoding, &input.family, &limits)?;
    let r = realize_active_sum(&input.group, &input.family, encoding, &opts, &limits)?;
    s.push_str(&r.report());
    Ok(Output::ok(s))
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[command(flatten)]
    input: FamilyInput,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Schur multiplier fixture; enables the consequence checks.
    #[arg(long)]
    schur: Option<PathBuf>,
    /// Write the certificate here; otherwise it follows the report.
    #[arg(long)]
    certificate_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Hlt)]
    strategy: StrategyArg,
}

pub fn certify(a: &CertifyArgs, run: &RunOptions) -> Result<Output> {
    let limits = limits(run);
    let opts = options(run, a.strategy);
    let input = load_input(&a.input, &opts, &limits)?;
    let mut s = String::from("command=certify\n");
    family_summary(&mut s, &input);
    let cert = certify_theorem2(&input.group, &input.family, a.n, &opts, &limits)?;
    let r = cert.result().expect("active-sum certificate");
    let verified = verify_certificate(&cert, &opts, &limits)?.accepted();
    let _ = writeln!(s, "n={}", a.n);
    let _ = writeln!(s, "certificate=C_{}-cellular", a.n);
    let _ = writeln!(s, "subject=active sum S, order {}", r.order);
    let _ = writeln!(s, "order_S={}", r.order);
    let _ = writeln!(s, "image_phi={}", r.image_order);
    let _ = writeln!(s, "kernel_phi={}", r.kernel_order);
    let _ = writeln!(s, "generating={}", r.generating);
    let _ = writeln!(s, "iso={}", r.iso);
    if r.iso {
        let _ = writeln!(s, "subject_isomorphic_to={}", input.label);
    }
    let _ = writeln!(s, "verified={verified}");
    let mut code = if verified { 0 } else { 1 };
    if let Some(path) = &a.schur {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
        let schur = SchurData::parse(&text)?;
        match corollary1_check(&cert, &schur, &limits) {
            Ok(c1) => {
                s.push_str(&c1.report());
                if !c1.pass {
                    code = 1;
                }
            }
            Err(Error::MissingSchurData(m)) => {
                let _ = writeln!(s, "schur_primes_check=no data ({m})");
            }
            Err(e) => return Err(e),
        }
        if r.generating {
            match corollary2_check(&input.group, &input.family, a.n, &schur, &opts, &limits) {
                Ok(c2) => {
                    s.push_str(&c2.report());
                    if c2.hypotheses_met && !c2.passes() {
                        code = 1;
                    }
                }
                Err(Error::MissingSchurData(m)) => {
                    let _ = writeln!(s, "injection_iso_check=no data ({m})");
                }
                Err(e) => return Err(e),
            }
        } else {
            s.push_str("injection_iso_check=not applicable (family does not generate)\n");
        }
    }
    let text = cert.to_text();
    match &a.certificate_out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Error::Validation(format!("cannot write {}: {e}", path.display())))?;
            let _ = writeln!(s, "certificate_file={}", path.display());
        }
        None => {
            s.push('\n');
            s.push_str(&text);
        }
    }
    Ok(Output { text: s, code })
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Catalog group orders to include, as `a..b` (inclusive) or a single order.
    #[arg(long, default_value = "1..16")]
    orders: String,
    /// Comma-separated values of n.
    #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 4, 6, 8, 12],
          value_parser = clap::value_parser!(u64).range(1..))]
    n: Vec<u64>,
    /// Comma-separated catalog names; replaces the order filter.
    #[arg(long, value_delimiter = ',')]
    catalog: Vec<String>,
    /// Shuffles the processing order; the report does not depend on it.
    #[arg(long)]
    seed: Option<u64>,
}

fn parse_orders(text: &str) -> Result<(u64, u64)> {
    let bad = || Error::Validation(format!("bad order range {text:?}"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi || hi > 16 {
        return Err(Error::CutoffExceeded {
            what: "catalog order",
            size: hi,
            cutoff: 16,
        });
    }
    Ok((lo, hi))
}

pub fn property_sweep(a: &SweepArgs, run: &RunOptions) -> Result<Output> {
    let limits = limits(run);
    let groups = if a.catalog.is_empty() {
        let (lo, hi) = parse_orders(&a.orders)?;
        small_catalog(hi)?
            .into_iter()
            .filter(|g| g.order() >= lo)
            .collect()
    } else {
        let all = small_catalog(16)?;
        a.catalog
            .iter()
            .map(|name| {
                all.iter()
                    .find(|g| g.name() == Some(name.as_str()))
                    .cloned()
                    .ok_or_else(|| Error::UnsupportedParameters(format!("{name:?} is not in the catalog")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    let r = active_sum::property_sweep(&groups, &a.n, a.seed, &limits)?;
    let mut s = String::from("command=property-sweep\n");
    let names: Vec<&str> = groups.iter().map(|g| g.name().unwrap_or("?")).collect();
    let _ = writeln!(s, "catalog={}", names.join(","));
    s.push_str(&r.report());
    let code = if r.violations.is_empty() { 0 } else { 1 };
    Ok(Output { text: s, code })
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Presentation file: `gens a b ...` then one relator per line.
    #[arg(long)]
    presentation: PathBuf,
    /// Subgroup generator words; repeatable. Default: the trivial subgroup.
    #[arg(long)]
    subgroup: Vec<String>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Hlt)]
    strategy: StrategyArg,
}

pub fn enumerate(a: &EnumerateArgs, run: &RunOptions) -> Result<Output> {
    let text = std::fs::read_to_string(&a.presentation)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", a.presentation.display())))?;
    let p = Presentation::parse(&text)?;
    let words = a
        .subgroup
        .iter()
        .map(|w| p.parse_word(w).map_err(|m| Error::Validation(format!("subgroup word {w:?}: {m}"))))
        .collect::<Result<Vec<_>>>()?;
    let table = todd_coxeter(&p, &words, &options(run, a.strategy))?;
    let ab = abelianization(&p)?;
    let inv: Vec<String> = ab.invariants.iter().map(u64::to_string).collect();
    let mut s = String::from("command=enumerate\n");
    let _ = writeln!(s, "generators={}", p.num_generators());
    let _ = writeln!(s, "relators={}", p.relators().len());
    let _ = writeln!(s, "subgroup_generators={}", words.len());
    let _ = writeln!(s, "index={}", table.num_cosets());
    let _ = writeln!(s, "abelian_invariants={}", inv.join(","));
    let _ = writeln!(s, "abelian_free_rank={}", ab.free_rank);
    s.push_str(&table.stats().report());
    Ok(Output::ok(s))
}
