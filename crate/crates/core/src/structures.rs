use serde::{Deserialize, Serialize};

use crate::biquandle::{associated_quandle, FiniteBiquandle};
use crate::error::{malformed, Error, Result};
use crate::perm::Permutation;
use crate::quandle::FiniteQuandle;
use crate::report::AxiomReport;

/// A quandle together with automorphisms `β_y` (one per element) satisfying
/// `β_{β_y(x*y)} β_y = β_{β_x(y)} β_x` and with `y ↦ β_y(y)` bijective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StructureJson", into = "StructureJson")]
pub struct BiquandleStructure {
    base: FiniteQuandle,
    betas: Vec<Permutation>,
}

#[derive(Serialize, Deserialize)]
struct StructureJson {
    base: FiniteQuandle,
    betas: Vec<Permutation>,
}

impl TryFrom<StructureJson> for BiquandleStructure {
    type Error = Error;
    fn try_from(j: StructureJson) -> Result<Self> {
        BiquandleStructure::new(j.base, j.betas)
    }
}

impl From<BiquandleStructure> for StructureJson {
    fn from(s: BiquandleStructure) -> Self {
        StructureJson { base: s.base, betas: s.betas }
    }
}

/// Checks that each `β_y` is an automorphism (`aut`), structure condition 1
/// (`sc1`, witness `(x, y, z)` with `z` a point where the two sides differ) and
/// bijectivity of `y ↦ β_y(y)` (`sc2`, witness: two elements with equal image).
pub fn validate_structure(q: &FiniteQuandle, betas: &[Permutation]) -> Result<AxiomReport> {
    validate_structure_with(q, betas, false)
}

pub fn validate_structure_with(q: &FiniteQuandle, betas: &[Permutation], verbose: bool) -> Result<AxiomReport> {
    let n = q.n();
    if betas.len() != n {
        return malformed(format!("expected {n} automorphisms, got {}", betas.len()));
    }
    if let Some(b) = betas.iter().find(|b| b.degree() != n) {
        return malformed(format!("permutation of degree {} on a quandle of order {n}", b.degree()));
    }
    let mut c = AxiomReport::collector(verbose);
    for (y, b) in betas.iter().enumerate() {
        'pairs: for u in 0..n {
            for v in 0..n {
                if b.apply(q.op(u, v)) != q.op(b.apply(u), b.apply(v)) {
                    c.record("aut", vec![y, u, v]);
                    break 'pairs;
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !c.wants("sc1") {
                break;
            }
            let l = &betas[betas[y].apply(q.op(x, y))];
            let r = &betas[betas[x].apply(y)];
            for z in 0..n {
                if l.apply(betas[y].apply(z)) != r.apply(betas[x].apply(z)) {
                    c.record("sc1", vec![x, y, z]);
                    break;
                }
            }
        }
    }
    let mut seen = vec![usize::MAX; n];
    for y in 0..n {
        let img = betas[y].apply(y);
        if seen[img] != usize::MAX {
            c.record("sc2", vec![seen[img], y]);
        } else {
            seen[img] = y;
        }
    }
    Ok(c.finish())
}

impl BiquandleStructure {
    pub fn new(base: FiniteQuandle, betas: Vec<Permutation>) -> Result<Self> {
        let report = validate_structure(&base, &betas)?;
        if !report.passed {
            return Err(Error::Axioms(report));
        }
        Ok(BiquandleStructure { base, betas })
    }

    pub fn base(&self) -> &FiniteQuandle {
        &self.base
    }

    pub fn betas(&self) -> &[Permutation] {
        &self.betas
    }

    pub fn beta(&self, y: usize) -> &Permutation {
        &self.betas[y]
    }
}

/// `x *̲ y = β_y(x * y)`, `x *̄ y = β_y(x)`.
pub fn biquandle_from_structure(s: &BiquandleStructure) -> FiniteBiquandle {
    let q = &s.base;
    FiniteBiquandle::from_fns(q.n(), |x, y| s.betas[y].apply(q.op(x, y)), |x, y| s.betas[y].apply(x))
        .expect("a valid structure yields a biquandle")
}

/// Base `𝒬(B)` and `β_y = (x ↦ x *̄ y)`.
pub fn structure_of_biquandle(b: &FiniteBiquandle) -> BiquandleStructure {
    BiquandleStructure { base: associated_quandle(b), betas: (0..b.n()).map(|y| b.beta(y)).collect() }
}

/// `β_y = f` for every `y`.
pub fn constant_structure(q: &FiniteQuandle, f: &Permutation) -> Result<BiquandleStructure> {
    if f.degree() != q.n() || !q.is_automorphism(f) {
        return Err(Error::Domain(format!("{f} is not an automorphism")));
    }
    BiquandleStructure::new(q.clone(), vec![f.clone(); q.n()])
}
