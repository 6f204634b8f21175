//! Reading algebras from JSON files and parsing group, automorphism and
//! permutation arguments.

use std::fmt;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use biq_core::groups::{
    automorphism_group, cyclic_group_capped, direct_product_capped, power_map, symmetric_group_capped,
};
use biq_core::links::{builtin_diagram, parse_diagram};
use biq_core::{
    BiquandleStructure, FiniteBiquandle, FiniteGroup, FiniteQuandle, GroupAutomorphism, Permutation, VirtualLinkDiagram,
};
use serde_json::Value;

/// Input that is unreadable rather than mathematically rejected.
#[derive(Debug)]
pub struct Malformed(pub String);

impl fmt::Display for Malformed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Malformed {}

macro_rules! malformed {
    ($($t:tt)*) => { return Err(anyhow::Error::new(Malformed(format!($($t)*)))) };
}

pub enum Algebra {
    Quandle(FiniteQuandle),
    Biquandle(FiniteBiquandle),
    Structure(BiquandleStructure),
}

impl Algebra {
    pub fn into_biquandle(self) -> Option<FiniteBiquandle> {
        match self {
            Algebra::Quandle(_) => None,
            Algebra::Biquandle(b) => Some(b),
            Algebra::Structure(s) => Some(biq_core::structures::biquandle_from_structure(&s)),
        }
    }
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Tells quandle, biquandle and structure JSON apart by their keys.
pub fn load_algebra(path: &Path) -> Result<Algebra> {
    let v = read_json(path)?;
    let ctx = || format!("loading {}", path.display());
    if v.get("betas").is_some() {
        Ok(Algebra::Structure(serde_json::from_value(v).with_context(ctx)?))
    } else if v.get("under").is_some() {
        Ok(Algebra::Biquandle(serde_json::from_value(v).with_context(ctx)?))
    } else if v.get("table").is_some() {
        Ok(Algebra::Quandle(serde_json::from_value(v).with_context(ctx)?))
    } else {
        malformed!("{}: expected a quandle, biquandle or structure object", path.display())
    }
}

pub fn load_quandle(path: &Path) -> Result<FiniteQuandle> {
    match load_algebra(path)? {
        Algebra::Quandle(q) => Ok(q),
        _ => malformed!("{}: expected a quandle", path.display()),
    }
}

pub fn table_field(v: &Value, key: &str) -> Result<Vec<Vec<usize>>> {
    match v.get(key) {
        Some(t) => Ok(serde_json::from_value(t.clone()).with_context(|| format!("field {key}"))?),
        None => malformed!("missing field {key}"),
    }
}

/// A diagram file, or the name of a builtin diagram when no such file exists.
pub fn load_diagram(spec: &str) -> Result<VirtualLinkDiagram> {
    let path = Path::new(spec);
    if !path.exists() {
        if let Some(d) = builtin_diagram(spec) {
            return Ok(d);
        }
    }
    let text = fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
    parse_diagram(&text).with_context(|| format!("parsing {spec}"))
}

/// `Zn`, `Sk` or products of these joined by `x`, e.g. `Z2xS3`.
pub fn parse_group(spec: &str, cap: usize) -> Result<FiniteGroup> {
    let mut acc: Option<FiniteGroup> = None;
    for factor in spec.split('x') {
        let num = |s: &str| s.parse::<usize>().map_err(|_| Malformed(format!("bad group factor {factor:?}")));
        let g = if let Some(n) = factor.strip_prefix('Z') {
            cyclic_group_capped(num(n)?, cap)?
        } else if let Some(k) = factor.strip_prefix('S') {
            symmetric_group_capped(num(k)?, cap)?
        } else {
            malformed!("bad group factor {factor:?}: expected Zn or Sk")
        };
        acc = Some(match acc {
            None => g,
            Some(h) => direct_product_capped(&h, &g, cap)?,
        });
    }
    Ok(acc.expect("split yields at least one factor"))
}

/// `id`, an integer `k` for `x ↦ x^k`, or `#i` for the `i`-th automorphism
/// in the listing order of `automorphism_group`.
pub fn parse_group_aut(g: &FiniteGroup, spec: &str) -> Result<GroupAutomorphism> {
    if spec == "id" {
        return Ok(GroupAutomorphism::identity(g));
    }
    if let Some(i) = spec.strip_prefix('#') {
        let i: usize = i.parse().map_err(|_| Malformed(format!("bad automorphism index {spec:?}")))?;
        let auts = automorphism_group(g);
        return match auts.get(i) {
            Some(a) => Ok(a.clone()),
            None => bail!("automorphism index {i} out of range: the group has {} automorphisms", auts.len()),
        };
    }
    let k: i64 = spec.parse().map_err(|_| Malformed(format!("bad automorphism {spec:?}")))?;
    Ok(power_map(g, k)?)
}

/// `id`, comma-separated images such as `1,2,0`, or `#i` indexing the
/// sorted automorphism list `auts`.
pub fn parse_perm(spec: &str, degree: usize, auts: &[Permutation]) -> Result<Permutation> {
    let spec = spec.trim();
    if spec == "id" {
        return Ok(Permutation::identity(degree));
    }
    if let Some(i) = spec.strip_prefix('#') {
        let i: usize = i.parse().map_err(|_| Malformed(format!("bad automorphism index {spec:?}")))?;
        return match auts.get(i) {
            Some(p) => Ok(p.clone()),
            None => bail!("automorphism index {i} out of range: there are {} automorphisms", auts.len()),
        };
    }
    let images: Vec<usize> = spec
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Malformed(format!("bad permutation {spec:?}"))))
        .collect::<std::result::Result<_, _>>()?;
    if images.len() != degree {
        malformed!("permutation {spec:?} has degree {}, expected {degree}", images.len());
    }
    Ok(Permutation::new(images)?)
}

/// A family of `count` permutations separated by `;`, or a single one
/// repeated. `None` gives identities.
pub fn parse_perm_family(
    spec: Option<&str>,
    count: usize,
    degree: usize,
    auts: &[Permutation],
) -> Result<Vec<Permutation>> {
    let Some(spec) = spec else {
        return Ok(vec![Permutation::identity(degree); count]);
    };
    let parts: Vec<&str> = spec.split(';').collect();
    if parts.len() == 1 {
        return Ok(vec![parse_perm(parts[0], degree, auts)?; count]);
    }
    if parts.len() != count {
        malformed!("expected {count} permutations, got {}", parts.len());
    }
    parts.iter().map(|p| parse_perm(p, degree, auts)).collect()
}

pub fn parse_map(spec: &str) -> Result<Vec<usize>> {
    let spec = spec.trim().trim_start_matches('[').trim_end_matches(']');
    spec.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| anyhow::Error::new(Malformed(format!("bad map {spec:?}")))))
        .collect()
}
