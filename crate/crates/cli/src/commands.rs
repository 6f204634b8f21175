use std::path::Path;

use anyhow::{bail, Result};
use biq_core::automorphisms::{biquandle_aut, quandle_aut};
use biq_core::biquandle::{check_biquandle_with, yang_baxter_map_of_tables, ybe_counterexample};
use biq_core::combinators::{
    holomorph_biquandle, product_biquandle, semidirect_biquandle, union_biquandle_constant, union_quandle, ProductCase,
};
use biq_core::constructions::*;
use biq_core::coverings::{
    image_quandle_SQ, is_quandle_covering, lift_structure_search, verify_covering_biquandle_hom, verify_lift_normalizer,
};
use biq_core::enumeration::{
    are_isomorphic, enumerate_quandles_capped, enumerate_trivial_structures_capped, relabeling_orbits,
};
use biq_core::links::{coloring_count_biquandle, coloring_count_quandle};
use biq_core::quandle::check_quandle_with;
use biq_core::structures::validate_structure_with;
use biq_core::verbal::{
    classify_verbal_biquandle, classify_verbal_quandle, enumerate_verbal_biracks, is_verbal_birack, verbal_biquandle,
    verbal_quandle,
};
use biq_core::{AxiomReport, FiniteQuandle, FreeWord, Permutation, PermutationGroup};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::*;
use crate::{Cli, ColorArgs, Command, Constant, CoverCmd, EnumerateCmd, Family, Format, VerbalCmd};

/// 2 for unreadable input, 1 for everything else.
pub fn exit_code(e: &anyhow::Error) -> i32 {
    let malformed = e.chain().any(|c| {
        c.is::<Malformed>()
            || c.is::<serde_json::Error>()
            || c.is::<std::io::Error>()
            || c.downcast_ref::<biq_core::Error>().is_some_and(biq_core::Error::is_malformed)
    });
    if malformed {
        2
    } else {
        1
    }
}

struct Out {
    format: Format,
}

impl Out {
    fn emit(&self, value: Value, text: impl FnOnce() -> String) {
        match self.format {
            Format::Json => println!("{value}"),
            Format::Text => println!("{}", text()),
        }
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

pub fn dispatch(cli: &Cli) -> Result<i32> {
    let out = Out { format: cli.format };
    match &cli.command {
        Command::Check { file, birack, verbose } => check(&out, file, *birack, *verbose),
        Command::Construct(family) => {
            println!("{}", construct(family, cli.cap_order)?);
            Ok(0)
        }
        Command::Aut { file, elements } => aut(&out, file, *elements),
        Command::Color(args) => color(&out, args, cli.cap_arcs),
        Command::Enumerate(cmd) => enumerate(cmd, cli.cap_enum),
        Command::Verbal(cmd) => verbal(&out, cmd, cli.cap_order),
        Command::Ybe { file } => ybe(&out, file),
        Command::Iso { a, b } => iso(&out, a, b),
        Command::Cover(cmd) => cover(&out, cmd),
    }
}

fn report_line(kind: &str, r: &AxiomReport) -> String {
    if r.passed {
        format!("{kind}: all axioms hold")
    } else {
        format!("{kind}: fails: {r}")
    }
}

fn check(out: &Out, file: &Path, birack: bool, verbose: bool) -> Result<i32> {
    let v = read_json(file)?;
    let (kind, report) = if v.get("betas").is_some() {
        let base: FiniteQuandle = serde_json::from_value(v["base"].clone())?;
        let betas: Vec<Permutation> = serde_json::from_value(v["betas"].clone())?;
        ("structure", validate_structure_with(&base, &betas, verbose)?)
    } else if v.get("under").is_some() {
        let (under, over) = (table_field(&v, "under")?, table_field(&v, "over")?);
        let kind = if birack { "birack" } else { "biquandle" };
        (kind, check_biquandle_with(&under, &over, verbose, !birack)?)
    } else {
        ("quandle", check_quandle_with(&table_field(&v, "table")?, verbose)?)
    };
    out.emit(json!({ "kind": kind, "report": report }), || report_line(kind, &report));
    Ok(if report.passed { 0 } else { 1 })
}

fn construct(family: &Family, cap: usize) -> Result<String> {
    let q = |x: FiniteQuandle| serde_json::to_string(&x);
    let b = |x: biq_core::FiniteBiquandle| serde_json::to_string(&x);
    let text = match family {
        Family::Conj { group, k } => q(conj_quandle(&parse_group(group, cap)?, *k)?),
        Family::Core { group } => q(core_quandle(&parse_group(group, cap)?)?),
        Family::Takasaki { group } => q(takasaki(&parse_group(group, cap)?)?),
        Family::Dihedral { n } => q(dihedral_quandle(*n)?),
        Family::Alex { group, aut } => {
            let g = parse_group(group, cap)?;
            q(alexander_quandle(&g, &parse_group_aut(&g, aut)?)?)
        }
        Family::Trivial { n } => q(trivial_quandle(*n)?),
        Family::Wada { group } => b(wada_biquandle(&parse_group(group, cap)?)?),
        Family::Gendihedral { group, aut } => {
            let g = parse_group(group, cap)?;
            b(gen_dihedral_biquandle(&g, &parse_group_aut(&g, aut)?)?)
        }
        Family::Genalex { group, phi, psi } => {
            let g = parse_group(group, cap)?;
            b(gen_alexander_biquandle(&g, &parse_group_aut(&g, phi)?, &parse_group_aut(&g, psi)?)?)
        }
        Family::Alexbq { n, s, t } => b(alexander_biquandle(*n, *s, *t)?),
        Family::Union { q1, q2, sigma, tau } => {
            let (q1, q2) = (load_quandle(q1)?, load_quandle(q2)?);
            let sigma = parse_perm_family(sigma.as_deref(), q1.n(), q2.n(), &auts(&q2))?;
            let tau = parse_perm_family(tau.as_deref(), q2.n(), q1.n(), &auts(&q1))?;
            q(union_quandle(&q1, &q2, &sigma, &tau)?)
        }
        Family::Unionbq { q1, q2, f, g } => {
            let (q1, q2) = (load_quandle(q1)?, load_quandle(q2)?);
            let f = parse_perm(f, q1.n(), &auts(&q1))?;
            let g = parse_perm(g, q2.n(), &auts(&q2))?;
            b(union_biquandle_constant(&q1, &q2, &f, &g)?)
        }
        Family::Product { q1, q2, phi, psi, constant } => {
            let (q1, q2) = (load_quandle(q1)?, load_quandle(q2)?);
            let phi = parse_perm_family(phi.as_deref(), q1.n(), q2.n(), &auts(&q2))?;
            let psi = parse_perm_family(psi.as_deref(), q2.n(), q1.n(), &auts(&q1))?;
            let case = match constant {
                Constant::Psi => ProductCase::PsiConstant,
                Constant::Phi => ProductCase::PhiConstant,
            };
            b(product_biquandle(&q1, &q2, &phi, &psi, case)?)
        }
        Family::Semidirect { q1, q2, psi } => {
            let (q1, q2) = (load_quandle(q1)?, load_quandle(q2)?);
            let psi = parse_perm_family(psi.as_deref(), q2.n(), q1.n(), &auts(&q1))?;
            b(semidirect_biquandle(&q1, &q2, &psi)?)
        }
        Family::Holomorph { q: path } => b(holomorph_biquandle(&load_quandle(path)?)),
    };
    Ok(text?)
}

/// Sorted automorphism list used to resolve `#i` arguments.
fn auts(q: &FiniteQuandle) -> Vec<Permutation> {
    let mut v = quandle_aut(q).elements().to_vec();
    v.sort();
    v
}

fn aut(out: &Out, file: &Path, elements: bool) -> Result<i32> {
    let group: PermutationGroup = match load_algebra(file)? {
        Algebra::Quandle(q) => quandle_aut(&q),
        other => biquandle_aut(&other.into_biquandle().expect("not a quandle")),
    };
    let mut els = group.elements().to_vec();
    els.sort();
    let gens: Vec<String> = group.generators().iter().map(ToString::to_string).collect();
    let value = if elements {
        json!({ "order": group.order(), "generators": gens, "elements": els })
    } else {
        json!({ "order": group.order(), "generators": gens })
    };
    out.emit(value, || {
        let mut s = format!(
            "order {}\ngenerators: {}",
            group.order(),
            if gens.is_empty() { "none".into() } else { gens.join(" ") }
        );
        if elements {
            for p in &els {
                s.push_str(&format!("\n{p}"));
            }
        }
        s
    });
    Ok(0)
}

fn color(out: &Out, args: &ColorArgs, cap_arcs: usize) -> Result<i32> {
    let d = load_diagram(&args.diagram)?;
    if d.arc_count() > cap_arcs {
        bail!("diagram has {} arcs, above the cap {cap_arcs}", d.arc_count());
    }
    let count = if let Some(p) = &args.quandle {
        coloring_count_quandle(&d, &load_quandle(p)?)
    } else if let Some(p) = &args.biquandle {
        match load_algebra(p)?.into_biquandle() {
            Some(b) => coloring_count_biquandle(&d, &b),
            None => bail!("{}: expected a biquandle or structure", p.display()),
        }
    } else {
        let p = args.structure.as_ref().expect("clap requires one algebra");
        match load_algebra(p)? {
            Algebra::Quandle(q) => coloring_count_quandle(&d, &q),
            other => coloring_count_biquandle(&d, &other.into_biquandle().expect("not a quandle")),
        }
    };
    out.emit(json!({ "colorings": count, "arcs": d.arc_count(), "components": d.components() }), || count.to_string());
    Ok(0)
}

fn enumerate(cmd: &EnumerateCmd, cap: usize) -> Result<i32> {
    match cmd {
        EnumerateCmd::TrivialStructures { n, orbits } => {
            let found = enumerate_trivial_structures_capped(*n, cap)?;
            for s in &found {
                println!("{}", serde_json::to_string(s)?);
            }
            if *orbits {
                let families: Vec<Vec<Permutation>> = found.iter().map(|s| s.betas().to_vec()).collect();
                for orbit in relabeling_orbits(&families) {
                    println!("{}", json!({ "orbit": orbit }));
                }
            }
        }
        EnumerateCmd::Quandles { n, classes } => {
            let mut found = enumerate_quandles_capped(*n, cap)?;
            if *classes {
                let mut reps: Vec<FiniteQuandle> = Vec::new();
                for q in found {
                    if !reps.iter().any(|r| are_isomorphic(r, &q).is_some()) {
                        reps.push(q);
                    }
                }
                found = reps;
            }
            for q in &found {
                println!("{}", serde_json::to_string(q)?);
            }
        }
    }
    Ok(0)
}

fn word(s: &str) -> Result<FreeWord> {
    Ok(FreeWord::parse(s)?)
}

fn verbal(out: &Out, cmd: &VerbalCmd, cap: usize) -> Result<i32> {
    match cmd {
        VerbalCmd::Classify { u, v } => {
            let (u, v) = (word(u)?, word(v)?);
            let family = classify_verbal_biquandle(&u, &v);
            let birack = is_verbal_birack(&u, &v);
            out.emit(json!({ "family": family.map(|f| f.id()), "parameters": family, "birack": birack }), || {
                match family {
                    Some(f) => format!("family {} {f:?}", f.id()),
                    None => format!(
                        "not in the listed families (birack identities {})",
                        if birack { "hold" } else { "fail" }
                    ),
                }
            });
        }
        VerbalCmd::Birack { u, v } => {
            let holds = is_verbal_birack(&word(u)?, &word(v)?);
            out.emit(json!({ "birack": holds }), || holds.to_string());
        }
        VerbalCmd::Quandle { w } => {
            let c = classify_verbal_quandle(&word(w)?);
            out.emit(json!({ "quandle": c.is_some(), "kind": c }), || match c {
                Some(k) => format!("verbal quandle {k:?}"),
                None => "not a verbal quandle".into(),
            });
        }
        VerbalCmd::Enumerate { bound } => {
            let pairs = enumerate_verbal_biracks(*bound);
            match out.format {
                Format::Json => {
                    let v: Vec<Value> = pairs
                        .iter()
                        .map(|(u, v)| {
                            json!({ "u": u.to_string(), "v": v.to_string(), "family": classify_verbal_biquandle(u, v).map(|f| f.id()) })
                        })
                        .collect();
                    println!("{}", Value::Array(v));
                }
                Format::Text => {
                    for (u, v) in &pairs {
                        let family = classify_verbal_biquandle(u, v).map_or("-".to_string(), |f| f.id().to_string());
                        println!("{family}\tu = {u}\tv = {v}");
                    }
                }
            }
        }
        VerbalCmd::Build { group, w, u, v } => {
            let g = parse_group(group, cap)?;
            let text = match (w, u, v) {
                (Some(w), None, None) => serde_json::to_string(&verbal_quandle(&g, &word(w)?)?)?,
                (None, Some(u), Some(v)) => serde_json::to_string(&verbal_biquandle(&g, &word(u)?, &word(v)?)?)?,
                _ => return Err(Malformed("give either --w or both --u and --v".into()).into()),
            };
            println!("{text}");
        }
    }
    Ok(0)
}

fn ybe(out: &Out, file: &Path) -> Result<i32> {
    let v = read_json(file)?;
    let (under, over) = (table_field(&v, "under")?, table_field(&v, "over")?);
    if under.len() != over.len() || under.iter().chain(&over).any(|r| r.len() != under.len()) {
        return Err(Malformed("tables must be square and of equal size".into()).into());
    }
    let Some(r) = yang_baxter_map_of_tables(&under, &over) else {
        bail!("over columns are not bijective, so the pair map is undefined");
    };
    let witness = ybe_counterexample(under.len(), &r);
    out.emit(json!({ "holds": witness.is_none(), "witness": witness }), || match witness {
        None => "Yang-Baxter equation holds".into(),
        Some(t) => format!("fails at {t:?}"),
    });
    Ok(if witness.is_none() { 0 } else { 1 })
}

fn iso(out: &Out, a: &Path, b: &Path) -> Result<i32> {
    let found = match (load_algebra(a)?, load_algebra(b)?) {
        (Algebra::Quandle(x), Algebra::Quandle(y)) => are_isomorphic(&x, &y),
        (Algebra::Quandle(_), _) | (_, Algebra::Quandle(_)) => bail!("cannot compare a quandle with a biquandle"),
        (x, y) => are_isomorphic(&x.into_biquandle().unwrap(), &y.into_biquandle().unwrap()),
    };
    out.emit(json!({ "isomorphic": found.is_some(), "map": found }), || match &found {
        Some(f) => format!("isomorphic via {f} (images {:?})", f.images()),
        None => "not isomorphic".into(),
    });
    Ok(0)
}

fn cover(out: &Out, cmd: &CoverCmd) -> Result<i32> {
    match cmd {
        CoverCmd::Check { qt, q, map } => {
            let (qt, q, p) = (load_quandle(qt)?, load_quandle(q)?, parse_map(map)?);
            let r = is_quandle_covering(&p, &qt, &q);
            out.emit(json!({ "covering": r.passed, "report": r }), || {
                if r.passed {
                    "covering".into()
                } else {
                    format!("not a covering: {r}")
                }
            });
            Ok(if r.passed { 0 } else { 1 })
        }
        CoverCmd::Lift { qt, q, map, structure, normalizer } => {
            let (qt, q, p) = (load_quandle(qt)?, load_quandle(q)?, parse_map(map)?);
            let a = match load_algebra(structure)? {
                Algebra::Structure(s) => s,
                _ => return Err(Malformed(format!("{}: expected a structure", structure.display())).into()),
            };
            let Some(lifted) = lift_structure_search(&p, &qt, &q, &a)? else {
                out.emit(json!({ "lift": null }), || "no lift found among fiber-constant families".into());
                return Ok(0);
            };
            let hom = verify_covering_biquandle_hom(&p, &lifted, &a);
            let norm = if *normalizer { Some(verify_lift_normalizer(&p, &qt, &lifted, &a)?) } else { None };
            out.emit(json!({ "lift": lifted, "homomorphism": hom, "normalizer": norm }), || {
                let mut s = serde_json::to_string(&lifted).expect("structures serialize");
                s.push_str(&format!("\nprojection is a biquandle homomorphism: {hom}"));
                if let Some(n) = norm {
                    s.push_str(&format!("\nnormalizer: {}", to_json(&n).as_str().unwrap_or("?")));
                }
                s
            });
            Ok(0)
        }
        CoverCmd::Image { q } => {
            let q = load_quandle(q)?;
            let (sq, p) = image_quandle_SQ(&q);
            out.emit(json!({ "quandle": sq, "map": p }), || {
                format!("{}\nmap {:?}", serde_json::to_string(&sq).expect("quandles serialize"), p)
            });
            Ok(0)
        }
    }
}
