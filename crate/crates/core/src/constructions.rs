//! Quandles and biquandles built from groups. Elements keep the group's
//! element indices.

use crate::biquandle::FiniteBiquandle;
use crate::error::{domain, Result};
use crate::groups::{commute, cyclic_group_capped, is_central_automorphism, FiniteGroup, GroupAutomorphism};
use crate::perm::gcd;
use crate::quandle::FiniteQuandle;

fn check_aut(g: &FiniteGroup, phi: &GroupAutomorphism) -> Result<()> {
    GroupAutomorphism::new(g, phi.perm().images().to_vec()).map(|_| ())
}

/// `Conj_n(G)`: `x * y = y⁻ⁿ x yⁿ`.
pub fn conj_quandle(g: &FiniteGroup, n: i64) -> Result<FiniteQuandle> {
    FiniteQuandle::from_fn(g.order(), |x, y| g.mul(g.mul(g.pow(y, -n), x), g.pow(y, n)))
}

/// `Core(G)`: `x * y = y x⁻¹ y`.
pub fn core_quandle(g: &FiniteGroup) -> Result<FiniteQuandle> {
    FiniteQuandle::from_fn(g.order(), |x, y| g.mul(g.mul(y, g.inv(x)), y))
}

/// The core quandle of an abelian group.
pub fn takasaki(g: &FiniteGroup) -> Result<FiniteQuandle> {
    if !g.is_abelian() {
        return domain("Takasaki quandle needs an abelian group");
    }
    core_quandle(g)
}

/// `R_n`: `x * y = 2y − x mod n`.
pub fn dihedral_quandle(n: usize) -> Result<FiniteQuandle> {
    takasaki(&cyclic_group_capped(n, usize::MAX)?)
}

/// `Alex(G, φ)`: `x * y = φ(x y⁻¹) y`.
pub fn alexander_quandle(g: &FiniteGroup, phi: &GroupAutomorphism) -> Result<FiniteQuandle> {
    check_aut(g, phi)?;
    FiniteQuandle::from_fn(g.order(), |x, y| g.mul(phi.apply(g.mul(x, g.inv(y))), y))
}

/// `T_n`: `x * y = x`.
pub fn trivial_quandle(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return crate::error::malformed("quandle order must be at least 1");
    }
    FiniteQuandle::from_fn(n, |x, _| x)
}

/// `x *̲ y = y⁻¹ x⁻¹ y`, `x *̄ y = y⁻² x`.
pub fn wada_biquandle(g: &FiniteGroup) -> Result<FiniteBiquandle> {
    FiniteBiquandle::from_fns(g.order(), |x, y| g.mul(g.mul(g.inv(y), g.inv(x)), y), |x, y| g.mul(g.pow(y, -2), x))
}

/// `B(G, φ)` for a central automorphism: `x *̲ y = φ(y) x⁻¹ y`, `x *̄ y = φ(x)`.
pub fn gen_dihedral_biquandle(g: &FiniteGroup, phi: &GroupAutomorphism) -> Result<FiniteBiquandle> {
    check_aut(g, phi)?;
    if !is_central_automorphism(g, phi) {
        return domain("automorphism is not central");
    }
    FiniteBiquandle::from_fns(g.order(), |x, y| g.mul(g.mul(phi.apply(y), g.inv(x)), y), |x, _| phi.apply(x))
}

/// `A_{ψ,φ}(G)` for commuting automorphisms: `x *̲ y = φ(x y⁻¹) ψ(y)`,
/// `x *̄ y = ψ(x)`.
pub fn gen_alexander_biquandle(
    g: &FiniteGroup,
    phi: &GroupAutomorphism,
    psi: &GroupAutomorphism,
) -> Result<FiniteBiquandle> {
    check_aut(g, phi)?;
    check_aut(g, psi)?;
    if !commute(phi, psi) {
        return domain("φ and ψ do not commute");
    }
    FiniteBiquandle::from_fns(g.order(), |x, y| g.mul(phi.apply(g.mul(x, g.inv(y))), psi.apply(y)), |x, _| psi.apply(x))
}

/// On `ℤ_n`: `x *̲ y = t x + (s − t) y`, `x *̄ y = s x`.
pub fn alexander_biquandle(n: usize, s: usize, t: usize) -> Result<FiniteBiquandle> {
    if n == 0 {
        return crate::error::malformed("modulus must be at least 1");
    }
    if gcd(s % n, n) != 1 || gcd(t % n, n) != 1 {
        return domain(format!("s = {s} and t = {t} must be units mod {n}"));
    }
    let (s, t) = (s % n, t % n);
    FiniteBiquandle::from_fns(n, |x, y| (t * x + (s + n - t) * y) % n, |x, _| (s * x) % n)
}
