//! Unions and products of quandles carrying biquandle structures.
//!
//! A disjoint union keeps the indices of `Q1` and shifts those of `Q2` by
//! `|Q1|`. A product stores `(x, a)` at `x·|Q2| + a`.

use crate::automorphisms::quandle_aut;
use crate::biquandle::FiniteBiquandle;
use crate::error::{domain, malformed, Error, Result};
use crate::perm::Permutation;
use crate::quandle::FiniteQuandle;
use crate::structures::{biquandle_from_structure, BiquandleStructure};

/// Checks that `h : q → Aut(target)` is a homomorphism into `Conj_{-1}`,
/// i.e. `h(x*y) = h(y) h(x) h(y)⁻¹`.
pub fn check_conj_homomorphism(q: &FiniteQuandle, h: &[Permutation], target: &FiniteQuandle, name: &str) -> Result<()> {
    if h.len() != q.n() {
        return malformed(format!("{name}: expected {} maps, got {}", q.n(), h.len()));
    }
    for (x, p) in h.iter().enumerate() {
        if p.degree() != target.n() || !target.is_automorphism(p) {
            return domain(format!("{name}({x}) = {p} is not an automorphism"));
        }
    }
    for x in 0..q.n() {
        for y in 0..q.n() {
            if h[q.op(x, y)] != h[y].conjugate(&h[x]) {
                return domain(format!("{name} is not a homomorphism into Conj_-1(Aut): fails at ({x}, {y})"));
            }
        }
    }
    Ok(())
}

/// The union `Q1 ⊔ Q2` twisted by `σ : Q1 → Aut(Q2)` and `τ : Q2 → Aut(Q1)`:
/// `x * y = τ(y)(x)` for `x ∈ Q1, y ∈ Q2` and `x * y = σ(y)(x)` for
/// `x ∈ Q2, y ∈ Q1`.
pub fn union_quandle(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    sigma: &[Permutation],
    tau: &[Permutation],
) -> Result<FiniteQuandle> {
    check_conj_homomorphism(q1, sigma, q2, "σ")?;
    check_conj_homomorphism(q2, tau, q1, "τ")?;
    let (n1, n2) = (q1.n(), q2.n());
    for x in 0..n1 {
        for y in 0..n1 {
            for z in 0..n2 {
                if q1.op(tau[z].apply(x), y) != tau[sigma[y].apply(z)].apply(q1.op(x, y)) {
                    return domain(format!("union condition on Q1 fails at ({x}, {y}, {})", z + n1));
                }
            }
        }
    }
    for x in 0..n2 {
        for y in 0..n2 {
            for z in 0..n1 {
                if q2.op(sigma[z].apply(x), y) != sigma[tau[y].apply(z)].apply(q2.op(x, y)) {
                    return domain(format!("union condition on Q2 fails at ({}, {}, {z})", x + n1, y + n1));
                }
            }
        }
    }
    FiniteQuandle::from_fn(n1 + n2, |a, b| match (a < n1, b < n1) {
        (true, true) => q1.op(a, b),
        (false, false) => q2.op(a - n1, b - n1) + n1,
        (true, false) => tau[b - n1].apply(a),
        (false, true) => sigma[b].apply(a - n1) + n1,
    })
}

/// `Q1 ⊔ Q2` with no interaction between the parts.
pub fn disjoint_union(q1: &FiniteQuandle, q2: &FiniteQuandle) -> FiniteQuandle {
    union_quandle(q1, q2, &vec![Permutation::identity(q2.n()); q1.n()], &vec![Permutation::identity(q1.n()); q2.n()])
        .expect("trivial union is a quandle")
}

/// `f` on one part, identity on the other; `offset` is where `f`'s part starts.
fn extend(f: &Permutation, offset: usize, total: usize) -> Permutation {
    let mut img: Vec<usize> = (0..total).collect();
    for i in 0..f.degree() {
        img[offset + i] = offset + f.apply(i);
    }
    Permutation::from_vec_unchecked(img)
}

/// Structure on `Q1 ⊔ Q2` with `β_a = φ_a` (acting on `Q2`) for `a ∈ Q1` and
/// `β_a = ψ_a` (acting on `Q1`) for `a ∈ Q2`.
pub fn union_biquandle_general(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    phi: &[Permutation],
    psi: &[Permutation],
) -> Result<BiquandleStructure> {
    check_conj_homomorphism(q1, phi, q2, "φ")?;
    check_conj_homomorphism(q2, psi, q1, "ψ")?;
    let (n1, n2) = (q1.n(), q2.n());
    for x1 in 0..n1 {
        for x2 in 0..n2 {
            if phi[x1] != phi[psi[x2].apply(x1)] {
                return domain(format!("φ_x ≠ φ_ψ_y(x) at x = {x1}, y = {}", x2 + n1));
            }
            if psi[x2] != psi[phi[x1].apply(x2)] {
                return domain(format!("ψ_y ≠ ψ_φ_x(y) at x = {x1}, y = {}", x2 + n1));
            }
        }
    }
    let n = n1 + n2;
    let betas = (0..n).map(|a| if a < n1 { extend(&phi[a], n1, n) } else { extend(&psi[a - n1], 0, n) }).collect();
    BiquandleStructure::new(disjoint_union(q1, q2), betas)
}

/// The constant union biquandle: inside a part it is `ℬ(Q_i)`; across parts
/// `a *̄ b = a *̲ b = f(a)` for `a ∈ Q1, b ∈ Q2` and `g(a)` for `a ∈ Q2, b ∈ Q1`.
pub fn union_biquandle_constant(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    f: &Permutation,
    g: &Permutation,
) -> Result<FiniteBiquandle> {
    if f.degree() != q1.n() || !q1.is_automorphism(f) {
        return domain(format!("f = {f} is not an automorphism of Q1"));
    }
    if g.degree() != q2.n() || !q2.is_automorphism(g) {
        return domain(format!("g = {g} is not an automorphism of Q2"));
    }
    let s = union_biquandle_general(q1, q2, &vec![g.clone(); q1.n()], &vec![f.clone(); q2.n()])?;
    Ok(biquandle_from_structure(&s))
}

/// Whether both quandles are involutory and all `φ_x`, `ψ_y` square to the identity.
pub fn involutory_union_check(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    phi: &[Permutation],
    psi: &[Permutation],
) -> bool {
    use crate::quandle::is_involutory_quandle;
    is_involutory_quandle(q1) && is_involutory_quandle(q2) && phi.iter().chain(psi).all(|p| p.compose(p).is_identity())
}

/// Which family of maps is required to be constant in [`product_biquandle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductCase {
    /// `ψ ≡ f` and `φ_{f(x*y)} = φ_{f(y)} φ_x φ_y⁻¹`.
    PsiConstant,
    /// `φ ≡ g` and `ψ_{g(a*b)} = ψ_{g(b)} ψ_a ψ_b⁻¹`.
    PhiConstant,
}

/// Biquandle on `Q1 × Q2` with
/// `(x,a) *̲ (y,b) = (ψ_b(x *₁ y), φ_y(a))` and
/// `(x,a) *̄ (y,b) = (ψ_b(x), φ_y(a *₂ b))`.
pub fn product_biquandle(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    phi: &[Permutation],
    psi: &[Permutation],
    case: ProductCase,
) -> Result<FiniteBiquandle> {
    check_conj_homomorphism(q1, phi, q2, "φ")?;
    check_conj_homomorphism(q2, psi, q1, "ψ")?;
    let (n1, n2) = (q1.n(), q2.n());
    match case {
        ProductCase::PsiConstant => {
            let f = &psi[0];
            if psi.iter().any(|p| p != f) {
                return domain("ψ is not constant");
            }
            for x in 0..n1 {
                for y in 0..n1 {
                    let lhs = &phi[f.apply(q1.op(x, y))];
                    let rhs = phi[f.apply(y)].compose(&phi[x]).compose(&phi[y].inverse());
                    if *lhs != rhs {
                        return domain(format!("φ condition fails at ({x}, {y})"));
                    }
                }
            }
        }
        ProductCase::PhiConstant => {
            let g = &phi[0];
            if phi.iter().any(|p| p != g) {
                return domain("φ is not constant");
            }
            for a in 0..n2 {
                for b in 0..n2 {
                    let lhs = &psi[g.apply(q2.op(a, b))];
                    let rhs = psi[g.apply(b)].compose(&psi[a]).compose(&psi[b].inverse());
                    if *lhs != rhs {
                        return domain(format!("ψ condition fails at ({a}, {b})"));
                    }
                }
            }
        }
    }
    let split = |p: usize| (p / n2, p % n2);
    FiniteBiquandle::from_fns(
        n1 * n2,
        |p, r| {
            let ((x, a), (y, b)) = (split(p), split(r));
            psi[b].apply(q1.op(x, y)) * n2 + phi[y].apply(a)
        },
        |p, r| {
            let ((x, a), (y, b)) = (split(p), split(r));
            psi[b].apply(x) * n2 + phi[y].apply(q2.op(a, b))
        },
    )
}

/// `(x,a) *̲ (y,b) = (ψ_b(x *₁ y), a)`, `(x,a) *̄ (y,b) = (ψ_b(x), a *₂ b)`.
pub fn semidirect_biquandle(q1: &FiniteQuandle, q2: &FiniteQuandle, psi: &[Permutation]) -> Result<FiniteBiquandle> {
    let phi = vec![Permutation::identity(q2.n()); q1.n()];
    product_biquandle(q1, q2, &phi, psi, ProductCase::PhiConstant)
}

/// The direct product quandle `(x,a) * (y,b) = (x *₁ y, a *₂ b)`.
pub fn product_quandle(q1: &FiniteQuandle, q2: &FiniteQuandle) -> FiniteQuandle {
    let n2 = q2.n();
    FiniteQuandle::from_fn(q1.n() * n2, |p, r| q1.op(p / n2, r / n2) * n2 + q2.op(p % n2, r % n2))
        .expect("product of quandles is a quandle")
}

/// The quandle `Conj_{-1}(Aut(Q))` on the sorted automorphism list, with the
/// list itself.
pub fn aut_conjugation_quandle(q: &FiniteQuandle) -> (FiniteQuandle, Vec<Permutation>) {
    let auts = quandle_aut(q).elements().to_vec();
    let index = |p: &Permutation| auts.binary_search(p).expect("Aut(Q) is closed under conjugation");
    let table = auts.iter().map(|f| auts.iter().map(|g| index(&g.conjugate(f))).collect()).collect();
    (FiniteQuandle::new(table).expect("conjugation quandle"), auts)
}

/// `Hol(Q)` on `Q × Aut(Q)` (automorphisms in sorted order):
/// `(x,f) *̲ (y,g) = (g(x*y), f)`, `(x,f) *̄ (y,g) = (g(x), g f g⁻¹)`.
pub fn holomorph_biquandle(q: &FiniteQuandle) -> FiniteBiquandle {
    let (p, auts) = aut_conjugation_quandle(q);
    semidirect_biquandle(q, &p, &auts).expect("the identity map is a homomorphism into Conj_-1(Aut)")
}

/// `Err` unless `perm` is an automorphism of `q`.
pub fn require_automorphism(q: &FiniteQuandle, perm: &Permutation, name: &str) -> Result<()> {
    if perm.degree() != q.n() || !q.is_automorphism(perm) {
        return Err(Error::Domain(format!("{name} = {perm} is not an automorphism")));
    }
    Ok(())
}
