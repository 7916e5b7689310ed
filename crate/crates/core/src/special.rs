//! Named objects and closed-form identities: symmetrized quasi-polynomials,
//! Hecke matrix coefficients, Whittaker functions and their components,
//! the `GL_r` duality constants, and the ε-symmetric bijection.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::coeffring::{Alphabet, ParamPoly};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::qpoly::{gamma_decompose, QPoly};
use crate::reps::{DwOps, MetDwOps, Rep};
use crate::rootsys::{fmt_rat_vec, rat_vec, Lattice, Rat, RootSystem, WeylElement};

fn sign_of(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_sign(sign: i32) -> Result<()> {
    if sign == 1 || sign == -1 {
        Ok(())
    } else {
        Err(Error::Precondition("sign must be +1 or -1".into()))
    }
}

fn neg_vec(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

/// `ρ(1^±_J) f` for the representation `rep`.
pub fn apply_symmetrizer(rep: &Rep, j: &[usize], sign: i32, f: &QPoly) -> Result<QPoly> {
    check_sign(sign)?;
    let rs = rep.root_system();
    rs.check_subset(j)?;
    let mut out = QPoly::zero(f.alphabet(), f.dim());
    for u in rs.parabolic(j) {
        let tu = rep.t_of(u);
        let c = if sign == 1 {
            tu
        } else {
            tu.inverse()?.scale_int(sign_of(rs.length(u)))
        };
        out.add_assign_ref(&rep.apply_t(u, f)?.scale(&c));
    }
    Ok(out)
}

fn all_indices(rs: &RootSystem) -> Vec<usize> {
    (0..rs.rank()).collect()
}

/// Elements of `W` sorted by length (then index).
fn by_length(rs: &RootSystem) -> Vec<WeylElement> {
    let mut v: Vec<WeylElement> = rs.elements().collect();
    v.sort_by_key(|&w| (rs.length(w), w));
    v
}

/// `Σ_{w ∈ S} op_w f` where `op_w = op_{j_1}⋯op_{j_ℓ}` along the reduced
/// word, reusing the image of the suffix `s_{j_1} w`.
fn sum_over<F>(rs: &RootSystem, subset: &[WeylElement], f: &QPoly, gen: F) -> Result<QPoly>
where
    F: Fn(usize, &QPoly) -> Result<QPoly>,
{
    let mut images: BTreeMap<WeylElement, QPoly> = BTreeMap::new();
    images.insert(rs.identity(), f.clone());
    for w in by_length(rs) {
        if w == rs.identity() {
            continue;
        }
        let i = rs.word(w)[0];
        let prev = images[&rs.lmul_s(i, w)].clone();
        images.insert(w, gen(i, &prev)?);
    }
    let mut out = QPoly::zero(f.alphabet(), f.dim());
    for w in subset {
        out.add_assign_ref(&images[w]);
    }
    Ok(out)
}

// ----- symmetrized quasi-polynomials ----------------------------------

/// `p^±_y = π^{qp}(1^±) x^y` for `y ∈ Λ + Wc`, `c ∈ C⁰_Λ`.
pub fn p_pm(rep: &Rep, y: &[Rat], c: &[Rat], lattice: &Lattice, sign: i32) -> Result<QPoly> {
    let rs = rep.root_system();
    let one = ParamPoly::one(rep.params().alphabet());
    let x = QPoly::monomial(&one, y);
    gamma_decompose(&x, rs, c, lattice)?;
    apply_symmetrizer(rep, &all_indices(rs), sign, &x)
}

/// The unnormalized `q → ∞` limit `π^{qp}(T_{g_y}⁻¹) x^{y₋}` (no `d(y;t)`).
pub fn ebar_limit(rep: &Rep, y: &[Rat]) -> Result<QPoly> {
    let rs = rep.root_system();
    let y_minus = rs.antidominant_rep(y);
    let g_inv = rs
        .minimal_mover(&y_minus, y)
        .expect("antidominant representative lies in the orbit");
    let one = ParamPoly::one(rep.params().alphabet());
    rep.apply_t_inv(rs.inv(g_inv), &QPoly::monomial(&one, &y_minus))
}

/// `p^{J,+}_λ = π(1⁺_J T_{ŵ⁻¹}) x^μ` and `p^{J,−}_λ = π(1⁻_J T_ŵ⁻¹) ι x^μ`
/// for `λ = ŵ⁻¹μ` `J`-dominant.
pub fn p_j(rep: &Rep, lambda: &[i64], j: &[usize], sign: i32) -> Result<QPoly> {
    check_sign(sign)?;
    let rs = rep.root_system();
    let (mu, w_hat) = rs.j_dominant_decompose(lambda, j)?.ok_or_else(|| {
        Error::Precondition(format!("λ = {lambda:?} is not J-dominant for J = {j:?}"))
    })?;
    let x = QPoly::x(rep.params().alphabet(), &mu);
    let inner = if sign == 1 {
        rep.apply_t(rs.inv(w_hat), &x)?
    } else {
        rep.apply_t_inv(w_hat, &x.iota())?
    };
    apply_symmetrizer(rep, j, sign, &inner)
}

// ----- Hecke matrix coefficients ----------------------------------------

/// `1^± f T_ŵ` as a Hecke element (definition path).
pub fn sym_f_t(alg: &HeckeAlgebra, w_hat: WeylElement, f: &QPoly, sign: i32) -> Result<HeckeElement> {
    let s = alg.symmetrizer(sign)?;
    Ok(alg.product(&s, &HeckeElement::term(w_hat, f.clone())))
}

/// `A^±_{w,ŵ}(f) = γ_w(1^± f T_ŵ)` by the full product.
pub fn a_pm_definition(
    alg: &HeckeAlgebra,
    w: WeylElement,
    w_hat: WeylElement,
    f: &QPoly,
    sign: i32,
) -> Result<QPoly> {
    Ok(sym_f_t(alg, w_hat, f, sign)?.gamma(w))
}

/// Closed form `t(w₀) w₀ π(T⁻¹_{(w₀w)⁻¹} T_{ŵ⁻¹}) f` (sign `+`) or
/// `t(w₀)⁻¹ (−1)^{ℓ(w)+ℓ(ŵ)} ι w₀ π(T_{w₀w} T_ŵ⁻¹) ι f` (sign `−`).
pub fn a_pm_closed(
    rep: &Rep,
    w: WeylElement,
    w_hat: WeylElement,
    f: &QPoly,
    sign: i32,
) -> Result<QPoly> {
    closed_core(rep, &[], w, w_hat, f, sign)
}

/// `w₀ π(T⁻¹_{(w₀w)⁻¹} 1⁺_J T_{ŵ⁻¹}) f` or `ι w₀ π(T_{w₀w} 1⁻_J T_ŵ⁻¹) ι f`,
/// times `t(w₀)^{±1}` and the sign `(−1)^{ℓ(w)+ℓ(ŵ)}` in the `−` case.
fn closed_core(
    rep: &Rep,
    j: &[usize],
    w: WeylElement,
    w_hat: WeylElement,
    f: &QPoly,
    sign: i32,
) -> Result<QPoly> {
    let g = closed_operator(rep, j, w, w_hat, f, sign)?;
    let rs = rep.root_system();
    let tw0 = rep.t_of(rs.longest());
    Ok(if sign == 1 {
        g.scale(&tw0)
    } else {
        g.scale(&tw0.inverse()?)
            .scale_int(sign_of(rs.length(w) + rs.length(w_hat)))
    })
}

/// The operator part without scalars.
fn closed_operator(
    rep: &Rep,
    j: &[usize],
    w: WeylElement,
    w_hat: WeylElement,
    f: &QPoly,
    sign: i32,
) -> Result<QPoly> {
    check_sign(sign)?;
    let rs = rep.root_system();
    let w0 = rs.longest();
    let w0w = rs.mul(w0, w);
    if sign == 1 {
        let g = rep.apply_t(rs.inv(w_hat), f)?;
        let g = apply_symmetrizer(rep, j, 1, &g)?;
        let g = rep.apply_t_inv(rs.inv(w0w), &g)?;
        Ok(g.act_weyl(rs, w0))
    } else {
        let g = rep.apply_t_inv(w_hat, &f.iota())?;
        let g = apply_symmetrizer(rep, j, -1, &g)?;
        let g = rep.apply_t(w0w, &g)?;
        Ok(g.act_weyl(rs, w0).iota())
    }
}

fn require_min_rep(rs: &RootSystem, w: WeylElement, j: &[usize], what: &str) -> Result<()> {
    if rs.is_min_coset_rep(w, j) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} = {:?} is not a minimal coset representative for J = {j:?}",
            rs.word(w).iter().map(|i| i + 1).collect::<Vec<_>>()
        )))
    }
}

/// Closed form for `γ^{qp}_w(π^{qp}(1^± f T_ŵ) x^c)`, `w, ŵ ∈ W^c`.
pub fn gamma_closed_qp(
    rep: &Rep,
    c: &[Rat],
    w: WeylElement,
    w_hat: WeylElement,
    f: &QPoly,
    sign: i32,
) -> Result<QPoly> {
    let rs = rep.root_system();
    let jc = rs.fixing_indices(c);
    require_min_rep(rs, w, &jc, "w")?;
    require_min_rep(rs, w_hat, &jc, "ŵ")?;
    let base = closed_core(rep, &jc, w, w_hat, f, sign)?;
    if sign == 1 {
        Ok(base)
    } else {
        let t = rep.t_of(rs.longest_in(&jc));
        Ok(base.scale(&(&t * &t)))
    }
}

/// `F^c_{1^+}(w) = h^{m,c}(w) v^{ℓ(w₀)/2}`.
pub fn f_plus(mdw: &MetDwOps, c: &[i64], w: WeylElement) -> Result<ParamPoly> {
    let rep = mdw.rep();
    let rs = rep.root_system();
    let q = rep.params().q()?;
    Ok(&h_m(rep, c, w)? * &q.pow(rs.length(rs.longest()) as i32)?)
}

/// `F^c_{1^-}(w) = h^{m,c}(w) v^{−ℓ(w₀)/2 + ℓ(w₀(W_c))} (−1)^{ℓ(w)}`.
pub fn f_minus(mdw: &MetDwOps, c: &[i64], w: WeylElement) -> Result<ParamPoly> {
    let rep = mdw.rep();
    let rs = rep.root_system();
    let q = rep.params().q()?;
    let jc = rs.fixing_indices(&rat_vec(c));
    let e = -(rs.length(rs.longest()) as i32) + 2 * rs.length(rs.longest_in(&jc)) as i32;
    Ok((&h_m(rep, c, w)? * &q.pow(e)?).scale_int(sign_of(rs.length(w))))
}

fn met_datum(rep: &Rep) -> Result<crate::rootsys::MetaplecticDatum> {
    match rep.flavor() {
        crate::reps::Flavor::Met { datum, .. } => Ok(datum.clone()),
        _ => Err(Error::Precondition("a metaplectic representation is required".into())),
    }
}

fn h_m(rep: &Rep, c: &[i64], w: WeylElement) -> Result<ParamPoly> {
    Ok(rep.h_m_stat(c, w, &met_datum(rep)?))
}

/// Closed forms for `γ^m_w(π^m_v(1^± f T_ŵ) x^c)`, `w, ŵ ∈ W^c`,
/// `f ∈ F[Λ^m]`.
pub fn gamma_closed_met(
    mdw: &MetDwOps,
    c: &[i64],
    w: WeylElement,
    w_hat: WeylElement,
    f: &QPoly,
    sign: i32,
) -> Result<QPoly> {
    let rep = mdw.rep();
    let rs = rep.root_system();
    let jc = rs.fixing_indices(&rat_vec(c));
    require_min_rep(rs, w, &jc, "w")?;
    require_min_rep(rs, w_hat, &jc, "ŵ")?;
    let g = closed_operator(rep, &jc, w, w_hat, f, sign)?;
    if sign == 1 {
        Ok(g.scale(&f_plus(mdw, c, w)?))
    } else {
        Ok(g.scale(&f_minus(mdw, c, w)?)
            .scale_int(sign_of(rs.length(w_hat))))
    }
}

// ----- Whittaker functions ------------------------------------------------

fn require_dominant(rs: &RootSystem, lambda: &[i64]) -> Result<()> {
    if lambda.len() != rs.dim() {
        return Err(Error::Dimension {
            expected: rs.dim(),
            got: lambda.len(),
        });
    }
    if (0..rs.rank()).any(|i| RootSystem::pair_int(rs.simple_row(i), lambda) < 0) {
        return Err(Error::Precondition(format!("λ = {lambda:?} is not dominant")));
    }
    Ok(())
}

/// Iwahori–Whittaker `Ĩ^m_{w,λ} = 𝒯^m_w y^{w₀λ}`.
pub fn iwahori_whittaker(mdw: &MetDwOps, w: WeylElement, lambda: &[i64]) -> Result<QPoly> {
    let rs = mdw.rep().root_system();
    require_dominant(rs, lambda)?;
    let y = QPoly::x(mdw.rep().params().alphabet(), &rs.act_int(rs.longest(), lambda));
    mdw.apply_w(w, &y)
}

/// Spherical `W̃^m_λ = Σ_w 𝒯^m_w y^{w₀λ}`.
pub fn spherical_whittaker(mdw: &MetDwOps, lambda: &[i64]) -> Result<QPoly> {
    let rs = mdw.rep().root_system();
    require_dominant(rs, lambda)?;
    let y = QPoly::x(mdw.rep().params().alphabet(), &rs.act_int(rs.longest(), lambda));
    let all: Vec<WeylElement> = rs.elements().collect();
    sum_over(rs, &all, &y, |i, f| mdw.apply(i, f, false))
}

/// `v^{ℓ(w₀)} y^ρ π^m_v(1⁻) y^{−ρ+w₀λ}`.
pub fn spherical_whittaker_closed(mdw: &MetDwOps, lambda: &[i64]) -> Result<QPoly> {
    let rep = mdw.rep();
    let rs = rep.root_system();
    require_dominant(rs, lambda)?;
    let rho = mdw.rho();
    let e: Vec<i64> = rs
        .act_int(rs.longest(), lambda)
        .iter()
        .zip(rho)
        .map(|(a, r)| a - r)
        .collect();
    let g = apply_symmetrizer(rep, &all_indices(rs), -1, &QPoly::x(rep.params().alphabet(), &e))?;
    let q = rep.params().q()?;
    Ok(g.shift_int(rho).scale(&q.pow(2 * rs.length(rs.longest()) as i32)?))
}

/// `𝕎^m_λ = Σ_w ι𝒯^m_w ι y^λ` (any `λ ∈ Λ`).
pub fn bbw_sum(mdw: &MetDwOps, lambda: &[i64]) -> Result<QPoly> {
    let rs = mdw.rep().root_system();
    let y = QPoly::x(mdw.rep().params().alphabet(), lambda).iota();
    let all: Vec<WeylElement> = rs.elements().collect();
    Ok(sum_over(rs, &all, &y, |i, f| mdw.apply(i, f, false))?.iota())
}

/// Parahoric Whittaker function
/// `ψ^J_w(y; ϖ^{−λ}w′; v) = v^{ℓ(w′)} y^{−ρ} Σ_{u ∈ W_J} 𝒯_{wu,v^{−1/2}} 𝒯⁻¹_{w′,v^{−1/2}} y^{λ+ρ}`,
/// with `v^{1/2}` given by `vhalf` (pass `q⁻¹` for the `v ↦ v⁻¹` variant).
pub fn parahoric_whittaker(
    base: &Rep,
    vhalf: &ParamPoly,
    j: &[usize],
    w: WeylElement,
    lambda: &[i64],
    w_prime: WeylElement,
) -> Result<QPoly> {
    let rs = base.root_system();
    require_min_rep(rs, w, j, "w")?;
    let rho = rs.rho();
    let lr: Vec<i64> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
    require_dominant(rs, &lr)?;
    let dw = DwOps::new(base, &vhalf.inverse()?)?;
    let inner = dw.apply_w_inv(w_prime, &QPoly::x(base.params().alphabet(), &lr))?;
    let mut sum = QPoly::zero(inner.alphabet(), inner.dim());
    for u in rs.parabolic(j) {
        sum.add_assign_ref(&dw.apply_w(rs.mul(w, u), &inner)?);
    }
    Ok(sum
        .shift_int(&neg_vec(&rho))
        .scale(&vhalf.pow(2 * rs.length(w_prime) as i32)?))
}

/// Independent Casselman–Shalika evaluation
/// `∏_{α>0} (1 − v y^{α∨}) · χ_λ`, with `χ_λ` from the Weyl character
/// formula by exact division.  Uses only root data and polynomial
/// arithmetic.
pub fn casselman_shalika(
    rs: &RootSystem,
    alph: &std::sync::Arc<Alphabet>,
    v: &ParamPoly,
    lambda: &[i64],
) -> Result<QPoly> {
    require_dominant(rs, lambda)?;
    let rho = rs.rho();
    let lr: Vec<i64> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = QPoly::zero(alph, rs.dim());
    let mut den = QPoly::zero(alph, rs.dim());
    for w in rs.elements() {
        let s = ParamPoly::from_int(alph, sign_of(rs.length(w)));
        num.add_assign_ref(&QPoly::monomial_int(&s, &rs.act_int(w, &lr)));
        den.add_assign_ref(&QPoly::monomial_int(&s, &rs.act_int(w, &rho)));
    }
    let mut out = num.exact_divide(&den)?;
    for a in rs.positive_roots() {
        let factor = &QPoly::one(alph, rs.dim()) - &QPoly::monomial_int(v, &a.coroot);
        out = &out * &factor;
    }
    Ok(out)
}

// ----- metaplectic components -------------------------------------------

/// Representatives `C̃⁰_{Λ^m}` of `C⁰_{Λ^m}/Ω`: for `GL` the vectors
/// `m > c₁ ≥ … ≥ c_r ≥ 0`; otherwise the lattice points of the closed
/// scaled alcove lying in `C⁰_{Λ^m}`, one per `W̃_{Λ^m}`-orbit.
pub fn ctilde_reps(rs: &RootSystem, lattice_m: &Lattice) -> Result<Vec<Vec<i64>>> {
    lattice_m.validate(rs)?;
    let bound = lattice_m.alcove_bound(rs);
    let mut out: Vec<Vec<i64>> = Vec::new();
    if rs.is_gl() {
        let r = rs.dim();
        let mut cur = vec![0i64; r];
        fn rec(k: usize, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if k == cur.len() {
                out.push(cur.clone());
                return;
            }
            for x in 0..=hi {
                cur[k] = x;
                rec(k + 1, x, cur, out);
            }
        }
        rec(0, bound - 1, &mut cur, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out.reverse();
        return Ok(out);
    }
    // Fundamental-coweight coordinates: α_i(c) = c_i ≥ 0, so each c_i ≤ bound.
    let r = rs.dim();
    let mut cur = vec![0i64; r];
    let mut cands = Vec::new();
    fn rec2(k: usize, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..=hi {
            cur[k] = x;
            rec2(k + 1, hi, cur, out);
        }
    }
    rec2(0, bound, &mut cur, &mut cands);
    cands.sort();
    for c in cands {
        let cr = rat_vec(&c);
        if !rs.is_in_c0(&cr, lattice_m)? {
            continue;
        }
        let dup = out.iter().any(|d| {
            rs.elements().any(|w| {
                let wd = rs.act_int(w, d);
                let diff: Vec<i64> = c.iter().zip(&wd).map(|(a, b)| a - b).collect();
                lattice_m.contains_int(rs, &diff)
            })
        });
        if !dup {
            out.push(c);
        }
    }
    Ok(out)
}

/// Decomposition `ν = η + ŵ c` with `η ∈ Λ^m`, `c ∈ C̃⁰`, `ŵ ∈ W^c`.
pub fn orbit_decompose(
    rs: &RootSystem,
    lattice_m: &Lattice,
    reps: &[Vec<i64>],
    nu: &[i64],
) -> Option<(Vec<i64>, WeylElement, Vec<i64>)> {
    for c in reps {
        let jc = rs.fixing_indices(&rat_vec(c));
        for w in rs.min_coset_reps(&jc) {
            let wc = rs.act_int(w, c);
            let eta: Vec<i64> = nu.iter().zip(&wc).map(|(a, b)| a - b).collect();
            if lattice_m.contains_int(rs, &eta) {
                return Some((eta, w, c.clone()));
            }
        }
    }
    None
}

/// The component `y^{ρ′−θ} φ̃ᵒ_θ` read off from a full sum
/// `S = Σ_w ι𝒯^m_w ι y^{μ−ρ′}`: the terms with exponent in `θ − ρ′ + Λ^m`,
/// shifted by `ρ′ − θ`.
pub fn phi_component(
    rs: &RootSystem,
    lattice_m: &Lattice,
    sum: &QPoly,
    theta: &[i64],
    rho_p: &[i64],
) -> QPoly {
    let shift: Vec<i64> = rho_p.iter().zip(theta).map(|(a, b)| a - b).collect();
    sum.filter(|y| {
        let d: Vec<Rat> = y
            .iter()
            .zip(&shift)
            .map(|(a, s)| *a + Rat::from_integer(*s))
            .collect();
        lattice_m.contains(rs, &d)
    })
    .shift_int(&shift)
}

fn check_mu(rs: &RootSystem, mu: &[i64]) -> Result<()> {
    let rho = rs.rho();
    let d: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a - b).collect();
    require_dominant(rs, &d).map_err(|_| Error::Precondition(format!("μ − ρ is not dominant for μ = {mu:?}")))
}

/// `y^{ρ′−θ} φ̃ᵒ_θ` by direct extraction from `𝕎^m_{μ−ρ′}`.
pub fn phi_theta_direct(
    mdw: &MetDwOps,
    lattice_m: &Lattice,
    theta: &[i64],
    mu: &[i64],
    rho_p: &[i64],
) -> Result<QPoly> {
    let rs = mdw.rep().root_system();
    check_mu(rs, mu)?;
    let arg: Vec<i64> = mu.iter().zip(rho_p).map(|(a, b)| a - b).collect();
    let s = bbw_sum(mdw, &arg)?;
    Ok(phi_component(rs, lattice_m, &s, theta, rho_p))
}

/// Data attached to `(μ, θ)`: `w₀μ = η + ŵc` and `θ = (w₀w̃) c` with
/// `w₀w̃ ∈ W^c` (`None` for `w̃` when `θ ∉ W^c c`).
#[derive(Clone, Debug)]
pub struct ThetaData {
    pub c: Vec<i64>,
    pub eta: Vec<i64>,
    pub w_hat: WeylElement,
    pub w_tilde: Option<WeylElement>,
}

pub fn theta_data(
    rs: &RootSystem,
    lattice_m: &Lattice,
    reps: &[Vec<i64>],
    theta: &[i64],
    mu: &[i64],
) -> Result<ThetaData> {
    let w0 = rs.longest();
    let w0mu = rs.act_int(w0, mu);
    let (eta, w_hat, c) = orbit_decompose(rs, lattice_m, reps, &w0mu).ok_or_else(|| {
        Error::Precondition(format!(
            "w₀μ for μ = {mu:?} is outside the span of the chosen C̃⁰ representatives"
        ))
    })?;
    let jc = rs.fixing_indices(&rat_vec(&c));
    let w_tilde = rs
        .minimal_mover(&rat_vec(&c), &rat_vec(theta))
        .filter(|&x| rs.is_min_coset_rep(x, &jc))
        .map(|x| rs.mul(w0, x));
    Ok(ThetaData {
        c,
        eta,
        w_hat,
        w_tilde,
    })
}

/// `y^{ρ′−θ} φ̃ᵒ_θ = v^{ℓ(w₀)} ι γ^m_{w₀w̃^c w₀, −w₀c}(π^m_v(1⁻) y^{−μ})`, or
/// zero off the support.
pub fn phi_theta_gamma(
    mdw: &MetDwOps,
    lattice_m: &Lattice,
    reps: &[Vec<i64>],
    theta: &[i64],
    mu: &[i64],
) -> Result<QPoly> {
    let rep = mdw.rep();
    let rs = rep.root_system();
    check_mu(rs, mu)?;
    let alph = rep.params().alphabet();
    let data = theta_data(rs, lattice_m, reps, theta, mu)?;
    let w_tilde = match data.w_tilde {
        Some(w) => w,
        None => return Ok(QPoly::zero(alph, rs.dim())),
    };
    let w0 = rs.longest();
    let jc = rs.fixing_indices(&rat_vec(&data.c));
    let (wtc, _) = rs.coset_decompose(w_tilde, &jc);
    let target = rs.mul(rs.mul(w0, wtc), w0);
    let cneg = neg_vec(&rs.act_int(w0, &data.c));
    let p = apply_symmetrizer(rep, &all_indices(rs), -1, &QPoly::x(alph, &neg_vec(mu)))?;
    let parts = gamma_decompose(&p, rs, &rat_vec(&cneg), lattice_m)?;
    let g = parts
        .get(&target)
        .cloned()
        .unwrap_or_else(|| QPoly::zero(alph, rs.dim()));
    let q = rep.params().q()?;
    Ok(g.iota().scale(&q.pow(2 * rs.length(w0) as i32)?))
}

/// The closed right-hand side of the `w₀`-coefficient formula:
/// `(−1)^{ℓ(w₀ŵw₀)} F⁻^{−w₀c}(w₀w̃^c w₀) / h^{m,−w₀c}(w₀ŵw₀) ·
///  π^m_v(T_{w̃^c w₀} 1⁻_{W_{−w₀c}} T⁻¹_{w₀ŵw₀}) x^{w₀η}`.
pub fn coeffs_w0_closed(
    mdw: &MetDwOps,
    c: &[i64],
    eta: &[i64],
    w_hat: WeylElement,
    w_tilde: WeylElement,
) -> Result<QPoly> {
    let rep = mdw.rep();
    let rs = rep.root_system();
    let w0 = rs.longest();
    let jc = rs.fixing_indices(&rat_vec(c));
    let (wtc, _) = rs.coset_decompose(w_tilde, &jc);
    let cneg = neg_vec(&rs.act_int(w0, c));
    let jneg = rs.fixing_indices(&rat_vec(&cneg));
    let conj_hat = rs.mul(rs.mul(w0, w_hat), w0);
    let conj_tilde = rs.mul(rs.mul(w0, wtc), w0);
    let denom = h_m(rep, &cneg, conj_hat)?;
    let coeff = (&f_minus(mdw, &cneg, conj_tilde)? * &denom.inverse()?)
        .scale_int(sign_of(rs.length(conj_hat)));
    let alph = rep.params().alphabet();
    let g = rep.apply_t_inv(conj_hat, &QPoly::x(alph, &rs.act_int(w0, eta)))?;
    let g = apply_symmetrizer(rep, &jneg, -1, &g)?;
    let g = rep.apply_t(rs.mul(wtc, w0), &g)?;
    Ok(g.scale(&coeff))
}

/// The left side of the `w₀`-coefficient formula:
/// `w₀ ι γ^m_{w₀w̃^c w₀, −w₀c}(π^m_v(1⁻) x^{−μ})`.
pub fn coeffs_w0_direct(
    mdw: &MetDwOps,
    lattice_m: &Lattice,
    c: &[i64],
    mu: &[i64],
    w_tilde: WeylElement,
) -> Result<QPoly> {
    let rep = mdw.rep();
    let rs = rep.root_system();
    let w0 = rs.longest();
    let alph = rep.params().alphabet();
    let jc = rs.fixing_indices(&rat_vec(c));
    let (wtc, _) = rs.coset_decompose(w_tilde, &jc);
    let target = rs.mul(rs.mul(w0, wtc), w0);
    let cneg = neg_vec(&rs.act_int(w0, c));
    let p = apply_symmetrizer(rep, &all_indices(rs), -1, &QPoly::x(alph, &neg_vec(mu)))?;
    let parts = gamma_decompose(&p, rs, &rat_vec(&cneg), lattice_m)?;
    let g = parts
        .get(&target)
        .cloned()
        .unwrap_or_else(|| QPoly::zero(alph, rs.dim()));
    Ok(g.iota().act_weyl(rs, w0))
}

/// `w₀(y^{ρ′−θ} φ̃ᵒ_θ)` by the closed formula for arbitrary type (zero off
/// the support).
pub fn whitt_arb_closed(
    mdw: &MetDwOps,
    lattice_m: &Lattice,
    reps: &[Vec<i64>],
    theta: &[i64],
    mu: &[i64],
) -> Result<QPoly> {
    let rep = mdw.rep();
    let rs = rep.root_system();
    check_mu(rs, mu)?;
    let data = theta_data(rs, lattice_m, reps, theta, mu)?;
    let Some(w_tilde) = data.w_tilde else {
        return Ok(QPoly::zero(rep.params().alphabet(), rs.dim()));
    };
    let q = rep.params().q()?;
    let g = coeffs_w0_closed(mdw, &data.c, &data.eta, data.w_hat, w_tilde)?;
    Ok(g.scale(&q.pow(2 * rs.length(rs.longest()) as i32)?))
}

// ----- GL_r duality -----------------------------------------------------

/// Data `(𝐜, w, w′, λ)` of the `GL_r` duality for `(μ, θ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityData {
    pub c_bold: Vec<i64>,
    pub w: WeylElement,
    pub w_prime: WeylElement,
    pub lambda: Vec<i64>,
    pub j_c: Vec<usize>,
}

/// The constants `C` and `C′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityConstants {
    pub c: ParamPoly,
    pub c_prime: ParamPoly,
}

fn residue_1n(x: i64, n: i64) -> i64 {
    let r = x.rem_euclid(n);
    if r == 0 {
        n
    } else {
        r
    }
}

/// Solves `−μ ≡ w′𝐜`, `−w₀θ ≡ w𝐜 (mod n)` with `w′, w₀w ∈ W^𝐜`; `None`
/// when `μ mod n` is not a permutation of `θ`.
pub fn duality_data(rs: &RootSystem, n: i64, mu: &[i64], theta: &[i64]) -> Result<Option<DualityData>> {
    if !rs.is_gl() {
        return Err(Error::UnsupportedRootSystem(format!(
            "the duality constants are defined for GL only, got {}",
            rs.label()
        )));
    }
    if n < 1 || mu.len() != rs.dim() || theta.len() != rs.dim() {
        return Err(Error::Precondition("malformed (μ, θ, n)".into()));
    }
    let mut a: Vec<i64> = mu.iter().map(|&x| x.rem_euclid(n)).collect();
    let mut b: Vec<i64> = theta.iter().map(|&x| x.rem_euclid(n)).collect();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }
    let w0 = rs.longest();
    let neg_mu: Vec<i64> = mu.iter().map(|&x| residue_1n(-x, n)).collect();
    let neg_w0_theta: Vec<i64> = rs
        .act_int(w0, theta)
        .iter()
        .map(|&x| residue_1n(-x, n))
        .collect();
    let mut c_bold = neg_mu.clone();
    c_bold.sort_by(|x, y| y.cmp(x));
    let cr = rat_vec(&c_bold);
    let j_c = rs.fixing_indices(&cr);
    let w_prime = rs
        .minimal_mover(&cr, &rat_vec(&neg_mu))
        .expect("permutation of the sorted vector");
    let u0 = rs
        .minimal_mover(&cr, &rat_vec(&neg_w0_theta))
        .expect("θ is a permutation of μ mod n");
    let (x, _) = rs.coset_decompose(rs.mul(w0, u0), &j_c);
    let w = rs.mul(w0, x);
    let lambda: Vec<i64> = mu
        .iter()
        .zip(rs.rho())
        .map(|(&m, r)| m.div_euclid(n) - r)
        .collect();
    Ok(Some(DualityData {
        c_bold,
        w,
        w_prime,
        lambda,
        j_c,
    }))
}

/// `C = (−1)^{ℓ(w₀)} v^{ℓ(w)/2 − ℓ(w′)/2 + ℓ(w₀)/2 + ℓ(w₀(W_𝐜))} h^{m,𝐜}(w₀w)/h^{m,𝐜}(w′)`
/// and `C′ = v^{ℓ(w′) − ℓ(w_𝐜)} C`.
pub fn duality_constants(mdw: &MetDwOps, data: &DualityData) -> Result<DualityConstants> {
    let rep = mdw.rep();
    let rs = rep.root_system();
    let q = rep.params().q()?;
    let w0 = rs.longest();
    let l = |w| rs.length(w) as i32;
    let e = l(data.w) - l(data.w_prime) + l(w0) + 2 * l(rs.longest_in(&data.j_c));
    let num = h_m(rep, &data.c_bold, rs.mul(w0, data.w))?;
    let den = h_m(rep, &data.c_bold, data.w_prime)?;
    let den_inv = den
        .inverse()
        .map_err(|_| Error::NotUnit(format!("h^(m,c)(w') = {den}")))?;
    let c = (&(&num * &den_inv) * &q.pow(e)?).scale_int(sign_of(rs.length(w0)));
    let (_, w_c) = rs.coset_decompose(data.w, &data.j_c);
    let c_prime = &c * &q.pow(2 * (l(data.w_prime) - l(w_c)))?;
    Ok(DualityConstants { c, c_prime })
}

/// Left side `w₀(y^{(ρ_GL − θ)/n} φ̃ᵒ_θ(y^{1/n}))` from the precomputed sum
/// `𝕎^m_{μ−ρ_GL}`.
pub fn duality_lhs(rs: &RootSystem, n: i64, sum: &QPoly, theta: &[i64]) -> QPoly {
    let theta_r: Vec<i64> = theta.iter().map(|x| x.rem_euclid(n)).collect();
    let comp = phi_component(rs, &Lattice::GlScaled(n), sum, &theta_r, &rs.rho());
    comp.rescale(Rat::new(1, n)).act_weyl(rs, rs.longest())
}

/// `C · 𝒯_w Σ_{u ∈ W_𝐜} 𝒯_u 𝒯⁻¹_{w′} y^{λ+ρ_GL}` with `𝒯 = 𝒯_{·,v^{1/2}}`.
pub fn duality_rhs_operator(
    mdw: &MetDwOps,
    base: &Rep,
    data: &DualityData,
    consts: &DualityConstants,
) -> Result<QPoly> {
    let rs = base.root_system();
    let q = base.params().q()?;
    let dw = DwOps::new(base, &q)?;
    let lr: Vec<i64> = data.lambda.iter().zip(rs.rho()).map(|(a, b)| a + b).collect();
    let inner = dw.apply_w_inv(data.w_prime, &QPoly::x(base.params().alphabet(), &lr))?;
    let sub = rs.parabolic(&data.j_c);
    let s = sum_over(rs, &sub, &inner, |i, f| dw.apply(i, f, false))?;
    let _ = mdw;
    Ok(dw.apply_w(data.w, &s)?.scale(&consts.c))
}

/// `C′ · y^{ρ_GL} ψ^{J_𝐜}_{w^𝐜}(y; ϖ^{−λ}w′; v⁻¹)`.
pub fn duality_rhs_parahoric(
    base: &Rep,
    data: &DualityData,
    consts: &DualityConstants,
) -> Result<QPoly> {
    let rs = base.root_system();
    let q = base.params().q()?;
    let (wc, _) = rs.coset_decompose(data.w, &data.j_c);
    let psi = parahoric_whittaker(base, &q.inverse()?, &data.j_c, wc, &data.lambda, data.w_prime)?;
    Ok(psi.shift_int(&rs.rho()).scale(&consts.c_prime))
}

// ----- ε-symmetric quasi-polynomials ------------------------------------

/// Whether `π^{qp}(T_i) f = ε t_i^ε f` for every `i`.
pub fn eps_symmetric_test(rep: &Rep, f: &QPoly, eps: i32) -> Result<bool> {
    check_sign(eps)?;
    for i in 0..rep.root_system().rank() {
        let t = rep.t_simple(i);
        let ev = if eps == 1 { t.clone() } else { -t.inverse()? };
        if rep.apply_gen(i, f, false)? != f.scale(&ev) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `p` is `J`-partially ε-symmetric under `π`.
pub fn j_partially_symmetric(rep: &Rep, p: &QPoly, j: &[usize], eps: i32) -> Result<bool> {
    check_sign(eps)?;
    for &i in j {
        let t = rep.t_simple(i);
        let ev = if eps == 1 { t.clone() } else { -t.inverse()? };
        if rep.apply_gen(i, p, false)? != p.scale(&ev) {
            return Ok(false);
        }
    }
    Ok(true)
}

struct CosetData {
    jc: Vec<usize>,
    w0_c: WeylElement,
    w0_upper: WeylElement,
}

fn coset_data(rs: &RootSystem, c: &[Rat]) -> CosetData {
    let jc = rs.fixing_indices(c);
    let (w0_upper, w0_c) = rs.coset_decompose(rs.longest(), &jc);
    CosetData { jc, w0_c, w0_upper }
}

/// `φ_{c,ε}(f) = t(w₀_c)/t(w₀) · (w₀ | ιw₀) γ_{w₀^c}(f)`.
pub fn phi_bij(rep: &Rep, f: &QPoly, c: &[Rat], lattice: &Lattice, eps: i32) -> Result<QPoly> {
    if !eps_symmetric_test(rep, f, eps)? {
        return Err(Error::Precondition(format!("input is not {eps}-symmetric")));
    }
    let rs = rep.root_system();
    let cd = coset_data(rs, c);
    let parts = gamma_decompose(f, rs, c, lattice)?;
    let g = parts
        .get(&cd.w0_upper)
        .cloned()
        .unwrap_or_else(|| QPoly::zero(f.alphabet(), f.dim()));
    let scal = &rep.t_of(cd.w0_c) * &rep.t_of(rs.longest()).inverse()?;
    let g = g.act_weyl(rs, rs.longest());
    Ok(if eps == 1 { g } else { g.iota() }.scale(&scal))
}

/// The inverse of [`phi_bij`] on `J_c`-partially ε-symmetric polynomials.
pub fn phi_bij_inv(rep: &Rep, p: &QPoly, c: &[Rat], eps: i32) -> Result<QPoly> {
    let rs = rep.root_system();
    let cd = coset_data(rs, c);
    if !p.is_polynomial() || !j_partially_symmetric(rep, p, &cd.jc, eps)? {
        return Err(Error::Precondition(format!(
            "input is not J-partially {eps}-symmetric for J = {:?}",
            cd.jc
        )));
    }
    let w0 = rs.longest();
    let tw0 = rep.t_of(w0);
    let mut out = QPoly::zero(p.alphabet(), p.dim());
    for w in rs.min_coset_reps(&cd.jc) {
        let w0w = rs.mul(w0, w);
        let coeff = if eps == 1 {
            rep.apply_t_inv(rs.inv(w0w), p)?.act_weyl(rs, w0)
        } else {
            rep.apply_t(w0w, p)?
                .act_weyl(rs, w0)
                .iota()
                .scale_int(sign_of(rs.length(w0) + rs.length(w)))
        };
        out.add_assign_ref(&coeff.shift(&rs.act_rat(w, c)));
    }
    Ok(out.scale(&tw0))
}

/// Conditions (1) and (2) characterizing ε-symmetric quasi-polynomials by
/// their `γ`-coefficients.
pub fn qp_symm_conditions(
    rep: &Rep,
    f: &QPoly,
    c: &[Rat],
    lattice: &Lattice,
    eps: i32,
) -> Result<bool> {
    check_sign(eps)?;
    let rs = rep.root_system();
    let w0 = rs.longest();
    let cd = coset_data(rs, c);
    let parts = gamma_decompose(f, rs, c, lattice)?;
    let zero = QPoly::zero(f.alphabet(), f.dim());
    let get = |w: WeylElement| parts.get(&w).cloned().unwrap_or_else(|| zero.clone());
    let g0 = get(cd.w0_upper);
    let base = if eps == 1 {
        g0.act_weyl(rs, w0)
    } else {
        g0.act_weyl(rs, w0).iota()
    };
    if !j_partially_symmetric(rep, &base, &cd.jc, eps)? {
        return Ok(false);
    }
    let tc = rep.t_of(cd.w0_c);
    for w in rs.min_coset_reps(&cd.jc) {
        let w0w = rs.mul(w0, w);
        let expected = if eps == 1 {
            rep.apply_t_inv(rs.inv(w0w), &base)?.act_weyl(rs, w0).scale(&tc)
        } else {
            rep.apply_t(w0w, &base)?
                .act_weyl(rs, w0)
                .iota()
                .scale(&tc)
                .scale_int(sign_of(rs.length(w0) + rs.length(w)))
        };
        if get(w) != expected {
            return Ok(false);
        }
    }
    // Terms outside the orbit basis would have been rejected by the
    // decomposition; nothing further to check.
    Ok(true)
}

/// Points of `C⁰_Λ` whose coordinates have denominators dividing some
/// `d ≤ max_den` (`GL`: normalized by `c_r = 0`).
pub fn alcove_points(rs: &RootSystem, lattice: &Lattice, max_den: i64) -> Result<Vec<Vec<Rat>>> {
    let mut vals: Vec<Rat> = Vec::new();
    for d in 1..=max_den {
        for k in 0..=d {
            let r = Rat::new(k, d);
            if !vals.contains(&r) {
                vals.push(r);
            }
        }
    }
    vals.sort();
    let dim = rs.dim();
    let free = if rs.is_gl() { dim - 1 } else { dim };
    let mut out = Vec::new();
    let mut idx = vec![0usize; free];
    loop {
        let mut c: Vec<Rat> = idx.iter().map(|&k| vals[k]).collect();
        if rs.is_gl() {
            // c_i = sum of the remaining gaps; gaps are taken from `vals`.
            let mut v = vec![Rat::zero(); dim];
            for i in (0..free).rev() {
                v[i] = v[i + 1] + c[i];
            }
            c = v;
        }
        if rs.is_in_c0(&c, lattice)? && !out.contains(&c) {
            out.push(c);
        }
        let mut k = 0;
        loop {
            if k == free {
                out.sort();
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < vals.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Pretty label for a rational vector.
pub fn label(v: &[Rat]) -> String {
    fmt_rat_vec(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{ParamMode, ParamSet};
    use crate::rootsys::{CartanKind, MetaplecticDatum};
    use std::sync::Arc;

    fn r(a: i64, b: i64) -> Rat {
        Rat::new(a, b)
    }

    fn gl(rank: usize, mode: ParamMode, n: i64) -> (Arc<RootSystem>, Arc<ParamSet>) {
        let rs = Arc::new(RootSystem::new(CartanKind::GL, rank).unwrap());
        let ps = Arc::new(ParamSet::new(&rs, mode, n, false).unwrap());
        (rs, ps)
    }

    #[test]
    fn p_pm_and_ebar_examples() {
        let (rs, ps) = gl(2, ParamMode::Generic, 1);
        let a = ps.alphabet().clone();
        let t = ParamPoly::symbol(&a, "t").unwrap();
        let qp = Rep::qp(rs.clone(), ps.clone()).unwrap();
        let c = vec![r(1, 2), r(0, 1)];
        let one = ParamPoly::one(&a);
        let xc = QPoly::monomial(&one, &c);
        let xs = QPoly::monomial(&one, &[r(0, 1), r(1, 2)]);
        assert_eq!(p_pm(&qp, &c, &c, &Lattice::GlZ, 1).unwrap(), &xc + &xs.scale(&t));
        assert_eq!(
            p_pm(&qp, &c, &c, &Lattice::GlZ, -1).unwrap(),
            &xc - &xs.scale(&t.inverse().unwrap())
        );
        assert!(matches!(
            p_pm(&qp, &c, &rat_vec(&[1, 0]), &Lattice::GlZ, 1),
            Err(Error::Precondition(_))
        ));
        assert_eq!(ebar_limit(&qp, &c).unwrap(), xc);
        let anti = rat_vec(&[-1, 2]);
        assert_eq!(ebar_limit(&qp, &anti).unwrap(), QPoly::monomial(&one, &anti));
    }

    #[test]
    fn p_j_examples() {
        let (rs, ps) = gl(2, ParamMode::Generic, 1);
        let a = ps.alphabet().clone();
        let t = ParamPoly::symbol(&a, "t").unwrap();
        let pol = Rep::pol(rs.clone(), ps.clone()).unwrap();
        assert_eq!(p_j(&pol, &[2, 1], &[], 1).unwrap(), QPoly::x(&a, &[2, 1]));
        assert_eq!(
            p_j(&pol, &[1, 0], &[0], 1).unwrap(),
            &QPoly::x(&a, &[1, 0]) + &QPoly::x(&a, &[0, 1])
        );
        assert_eq!(
            p_j(&pol, &[1, 0], &[0], -1).unwrap(),
            &QPoly::monomial_int(&t.pow(-2).unwrap(), &[-1, 0]) - &QPoly::x(&a, &[0, -1])
        );
        assert!(p_j(&pol, &[0, 1], &[0], 1).is_err());
    }

    #[test]
    fn matrix_coefficient_examples() {
        let (rs, ps) = gl(2, ParamMode::Generic, 1);
        let a = ps.alphabet().clone();
        let t = ParamPoly::symbol(&a, "t").unwrap();
        let pol = Rep::pol(rs.clone(), ps.clone()).unwrap();
        let alg = HeckeAlgebra::from_params(rs.clone(), &ps).unwrap();
        let w0 = rs.longest();
        let e = rs.identity();
        let f = QPoly::x(&a, &[1, 0]);
        assert_eq!(
            a_pm_closed(&pol, w0, e, &f, -1).unwrap(),
            QPoly::monomial_int(&-t.inverse().unwrap(), &[0, 1])
        );
        let one = QPoly::one(&a, 2);
        assert_eq!(a_pm_closed(&pol, e, e, &one, 1).unwrap(), one);
        for sign in [1, -1] {
            for w in rs.elements() {
                for wh in rs.elements() {
                    for lam in [[1, 0], [0, 2], [-1, 1]] {
                        let f = QPoly::x(&a, &lam);
                        assert_eq!(
                            a_pm_definition(&alg, w, wh, &f, sign).unwrap(),
                            a_pm_closed(&pol, w, wh, &f, sign).unwrap()
                        );
                    }
                }
            }
        }
        let c = vec![r(1, 2), r(0, 1)];
        let s1 = rs.simple_reflection(0);
        assert!(gamma_closed_qp(&pol, &c, e, e, &one, 1).unwrap().as_constant().unwrap().is_one());
        assert_eq!(gamma_closed_qp(&pol, &c, s1, e, &one, 1).unwrap().as_constant().unwrap(), t);
        assert_eq!(
            gamma_closed_qp(&pol, &c, s1, e, &one, -1).unwrap().as_constant().unwrap(),
            -t.inverse().unwrap()
        );
    }

    #[test]
    fn whittaker_examples() {
        let (rs, ps) = gl(2, ParamMode::Equal, 1);
        let a = ps.alphabet().clone();
        let q = ps.q().unwrap();
        let v = q.pow(2).unwrap();
        let mdw = MetDwOps::new(rs.clone(), ps.clone(), MetaplecticDatum::standard(&rs, 1)).unwrap();
        let w = spherical_whittaker(&mdw, &[0, 0]).unwrap();
        let expected = &QPoly::one(&a, 2) - &QPoly::monomial_int(&v, &[1, -1]);
        assert_eq!(w, expected);
        let w10 = spherical_whittaker(&mdw, &[1, 0]).unwrap();
        let sym = &QPoly::x(&a, &[1, 0]) + &QPoly::x(&a, &[0, 1]);
        assert_eq!(w10, &expected * &sym);
        assert_eq!(casselman_shalika(&rs, &a, &v, &[1, 0]).unwrap(), w10);
        assert_eq!(spherical_whittaker_closed(&mdw, &[1, 0]).unwrap(), w10);
        assert_eq!(
            iwahori_whittaker(&mdw, rs.identity(), &[2, 1]).unwrap(),
            QPoly::x(&a, &[1, 2])
        );
        assert!(spherical_whittaker(&mdw, &[0, 1]).is_err());

        let base = Rep::pol(rs.clone(), ps.clone()).unwrap();
        let one = QPoly::one(&a, 2);
        assert_eq!(
            parahoric_whittaker(&base, &q, &[], rs.identity(), &[0, 0], rs.identity()).unwrap(),
            one
        );
        let got = parahoric_whittaker(&base, &q, &[0], rs.identity(), &[0, 0], rs.identity()).unwrap();
        let dw = DwOps::new(&base, &q.inverse().unwrap()).unwrap();
        let rho = QPoly::x(&a, &[1, 0]);
        let exp = (&rho + &dw.apply(0, &rho, false).unwrap()).shift_int(&[-1, 0]);
        assert_eq!(got, exp);
    }

    #[test]
    fn duality_constant_example() {
        let (rs, ps) = gl(2, ParamMode::Generic, 2);
        let _ = ps;
        let (rs2, ps2) = gl(2, ParamMode::Equal, 2);
        let mdw = MetDwOps::new(rs2.clone(), ps2.clone(), MetaplecticDatum::standard(&rs2, 2)).unwrap();
        let data = DualityData {
            c_bold: vec![2, 1],
            w: rs.identity(),
            w_prime: rs.identity(),
            lambda: vec![0, 0],
            j_c: vec![],
        };
        let k = duality_constants(&mdw, &data).unwrap();
        let v = ps2.v().unwrap();
        assert_eq!(k.c, &v * &ps2.g(1, 0));
        assert_eq!(k.c_prime, k.c);
        // support condition
        assert_eq!(duality_data(&rs2, 2, &[1, 0], &[1, 1]).unwrap(), None);
        assert!(duality_data(&rs2, 2, &[1, 0], &[0, 1]).unwrap().is_some());
    }

    #[test]
    fn eps_symmetric_examples() {
        let (rs, ps) = gl(2, ParamMode::Generic, 1);
        let qp = Rep::qp(rs.clone(), ps.clone()).unwrap();
        let c = vec![r(1, 2), r(0, 1)];
        let f = p_pm(&qp, &c, &c, &Lattice::GlZ, 1).unwrap();
        assert!(eps_symmetric_test(&qp, &f, 1).unwrap());
        assert!(!eps_symmetric_test(&qp, &f, -1).unwrap());
        let p = phi_bij(&qp, &f, &c, &Lattice::GlZ, 1).unwrap();
        assert_eq!(phi_bij_inv(&qp, &p, &c, 1).unwrap(), f);
        assert!(qp_symm_conditions(&qp, &f, &c, &Lattice::GlZ, 1).unwrap());
        let pj = p_j(&qp, &[0, 0], &[], 1).unwrap();
        assert_eq!(p, pj);
    }

    #[test]
    fn alcove_point_enumeration() {
        let gl2 = RootSystem::new(CartanKind::GL, 2).unwrap();
        let pts = alcove_points(&gl2, &Lattice::GlZ, 2).unwrap();
        assert_eq!(pts, vec![rat_vec(&[0, 0]), vec![r(1, 2), r(0, 1)]]);
        let reps = ctilde_reps(&gl2, &Lattice::GlScaled(2)).unwrap();
        assert_eq!(reps, vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
    }
}
