//! The affine Hecke algebra `H̃` in its `F[Λ]`-basis normal form
//! `h = Σ_w γ_w(h) T_w`, together with the divided-difference operators
//! `∇_i` shared by all polynomial-type representations.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::coeffring::{Alphabet, ParamPoly};
use crate::error::{Error, Result};
use crate::params::ParamSet;
use crate::qpoly::{floor_div, QPoly};
use crate::rootsys::{MetaplecticDatum, RootSystem, WeylElement};

static ORACLE_ENABLED: AtomicBool = AtomicBool::new(false);
static ORACLE_CHECKS: AtomicU64 = AtomicU64::new(0);
static ORACLE_FAILURES: AtomicU64 = AtomicU64::new(0);

/// Turns the independent re-verification of every `∇` output on or off.
pub fn set_nabla_oracle(on: bool) {
    ORACLE_ENABLED.store(on, Ordering::SeqCst);
}

pub fn nabla_oracle_enabled() -> bool {
    ORACLE_ENABLED.load(Ordering::SeqCst)
}

/// `(checks, failures)` recorded by the `∇` oracle so far.
pub fn nabla_oracle_counts() -> (u64, u64) {
    (
        ORACLE_CHECKS.load(Ordering::SeqCst),
        ORACLE_FAILURES.load(Ordering::SeqCst),
    )
}

/// The divided difference with step `m·α_i∨`:
/// `x^y ↦ x^y (X^{−k} − 1)/(X − 1)` where `X = x^{m α_i∨}` and
/// `k = ⌊α_i(y)/m⌋`, evaluated as a finite geometric sum.
///
/// For `m = 1` and integral `y` this is `(x^{s_i y} − x^y)/(x^{α_i∨} − 1)`;
/// for rational `y` it is the quasi-polynomial `∇^{qp}`, and for a
/// metaplectic scale it is `∇^m`.
pub fn nabla(rs: &RootSystem, i: usize, m: i64, f: &QPoly) -> QPoly {
    let row = rs.simple_row(i);
    let d = f.den();
    let step: Vec<i64> = rs.simple_coroot(i).iter().map(|c| c * m * d).collect();
    let mut out = QPoly::zero(f.alphabet(), f.dim());
    let mut acc: BTreeMap<Vec<i64>, ParamPoly> = BTreeMap::new();
    for (e, c) in f.iter() {
        let k = floor_div(RootSystem::pair_int(row, e), d * m);
        let mut push = |j: i64, neg: bool| {
            let ex: Vec<i64> = e.iter().zip(&step).map(|(a, s)| a + j * s).collect();
            let entry = acc
                .entry(ex)
                .or_insert_with(|| ParamPoly::zero(f.alphabet()));
            if neg {
                *entry = &*entry - c;
            } else {
                entry.add_assign_ref(c);
            }
        };
        if k > 0 {
            for j in 1..=k {
                push(-j, true);
            }
        } else {
            for j in 0..-k {
                push(j, false);
            }
        }
    }
    for (e, c) in acc {
        if !c.is_zero() {
            let y = f.exponent_of(&e);
            out.add_assign_ref(&QPoly::monomial(&c, &y));
        }
    }
    if nabla_oracle_enabled() {
        ORACLE_CHECKS.fetch_add(1, Ordering::SeqCst);
        if nabla_by_division(rs, i, m, f).as_ref() != Ok(&out) {
            ORACLE_FAILURES.fetch_add(1, Ordering::SeqCst);
        }
    }
    out
}

/// Independent evaluation of [`nabla`] by exact polynomial division of
/// `Σ c (x^{y − k m α∨} − x^y)` by `x^{m α∨} − 1`.
pub fn nabla_by_division(rs: &RootSystem, i: usize, m: i64, f: &QPoly) -> Result<QPoly> {
    let alph = f.alphabet();
    let row = rs.simple_row(i);
    let cor: Vec<i64> = rs.simple_coroot(i).iter().map(|c| c * m).collect();
    let mut num = QPoly::zero(alph, f.dim());
    for (y, c) in f.terms_rat() {
        let a = RootSystem::pair_rat(row, &y) / crate::rootsys::Rat::from_integer(m);
        let k = a.floor().to_integer();
        let reflected: Vec<_> = y
            .iter()
            .zip(&cor)
            .map(|(v, s)| *v - crate::rootsys::Rat::from_integer(k * s))
            .collect();
        num.add_assign_ref(&QPoly::monomial(&c, &reflected));
        num.add_assign_ref(&-QPoly::monomial(&c, &y));
    }
    let den = &QPoly::x(alph, &cor) - &QPoly::one(alph, f.dim());
    num.exact_divide(&den)
}

/// An element `Σ_w f_w T_w` of the affine Hecke algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    alph: Arc<Alphabet>,
    dim: usize,
    terms: BTreeMap<WeylElement, QPoly>,
}

impl HeckeElement {
    pub fn zero(alph: &Arc<Alphabet>, dim: usize) -> HeckeElement {
        HeckeElement {
            alph: alph.clone(),
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// `f · T_w`.
    pub fn term(w: WeylElement, f: QPoly) -> HeckeElement {
        let mut h = HeckeElement::zero(f.alphabet(), f.dim());
        h.add_term(w, &f);
        h
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alph
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &QPoly)> {
        self.terms.iter()
    }

    /// `γ_w(h)`.
    pub fn gamma(&self, w: WeylElement) -> QPoly {
        self.terms
            .get(&w)
            .cloned()
            .unwrap_or_else(|| QPoly::zero(&self.alph, self.dim))
    }

    pub fn add_term(&mut self, w: WeylElement, f: &QPoly) {
        if f.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(w)
            .or_insert_with(|| QPoly::zero(&self.alph, self.dim));
        e.add_assign_ref(f);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (&w, f) in &other.terms {
            out.add_term(w, f);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        self.add(&other.scale(&ParamPoly::from_int(&self.alph, -1)))
    }

    pub fn scale(&self, c: &ParamPoly) -> HeckeElement {
        let mut out = HeckeElement::zero(&self.alph, self.dim);
        for (&w, f) in &self.terms {
            out.add_term(w, &f.scale(c));
        }
        out
    }

    /// Left multiplication by `f ∈ F[E]`.
    pub fn lmul_poly(&self, f: &QPoly) -> HeckeElement {
        let mut out = HeckeElement::zero(&self.alph, self.dim);
        for (&w, g) in &self.terms {
            out.add_term(w, &(f * g));
        }
        out
    }

    /// `{terms: [{word: [1-based], coeff: …}]}`.
    pub fn to_json(&self, rs: &RootSystem) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(&w, f)| {
                let word: Vec<usize> = rs.word(w).iter().map(|i| i + 1).collect();
                json!({"word": word, "coeff": f.to_json()})
            })
            .collect();
        json!({ "terms": terms })
    }
}

/// The affine Hecke algebra of a root system with parameters `t_i` and a
/// coroot scale `m_i` per simple root (`m_i = 1` for `H̃`, `m_i = m(α_i)`
/// for the algebra of the metaplectic root system `Φ^m`).
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    rs: Arc<RootSystem>,
    alph: Arc<Alphabet>,
    t: Vec<ParamPoly>,
    tdiff: Vec<ParamPoly>,
    scale: Vec<i64>,
}

impl HeckeAlgebra {
    pub fn new(rs: Arc<RootSystem>, t: Vec<ParamPoly>, scale: Vec<i64>) -> Result<HeckeAlgebra> {
        if t.len() != rs.rank() || scale.len() != rs.rank() {
            return Err(Error::Dimension {
                expected: rs.rank(),
                got: t.len().min(scale.len()),
            });
        }
        let alph = t
            .first()
            .map(|x| x.alphabet().clone())
            .ok_or_else(|| Error::UnsupportedRootSystem("rank 0".into()))?;
        let tdiff = t
            .iter()
            .map(|x| Ok(x - &x.inverse()?))
            .collect::<Result<Vec<_>>>()?;
        Ok(HeckeAlgebra {
            rs,
            alph,
            t,
            tdiff,
            scale,
        })
    }

    /// `H̃` with the parameters of a parameter set.
    pub fn from_params(rs: Arc<RootSystem>, ps: &ParamSet) -> Result<HeckeAlgebra> {
        let t = ps.t_simples(&rs);
        let r = rs.rank();
        HeckeAlgebra::new(rs, t, vec![1; r])
    }

    /// The algebra `H̃_{Λ^m}` of `Φ^m`.
    pub fn metaplectic(
        rs: Arc<RootSystem>,
        ps: &ParamSet,
        datum: &MetaplecticDatum,
    ) -> Result<HeckeAlgebra> {
        datum.validate(&rs)?;
        let t = ps.t_simples(&rs);
        let scale = (0..rs.rank())
            .map(|i| datum.m_of_orbit(rs.orbit_of_simple(i)))
            .collect();
        HeckeAlgebra::new(rs, t, scale)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alph
    }

    pub fn t(&self, i: usize) -> &ParamPoly {
        &self.t[i]
    }

    /// `t_i − t_i⁻¹`.
    pub fn tdiff(&self, i: usize) -> &ParamPoly {
        &self.tdiff[i]
    }

    pub fn scale(&self, i: usize) -> i64 {
        self.scale[i]
    }

    /// `t(w)` as the product of `t_i` along a reduced word.
    pub fn t_of(&self, w: WeylElement) -> ParamPoly {
        let mut out = ParamPoly::one(&self.alph);
        for &i in self.rs.word(w) {
            out = &out * &self.t[i];
        }
        out
    }

    /// `∇_i` of this algebra (step `m_i α_i∨`).
    pub fn nabla(&self, i: usize, f: &QPoly) -> QPoly {
        nabla(&self.rs, i, self.scale[i], f)
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement::zero(&self.alph, self.rs.dim())
    }

    pub fn one(&self) -> HeckeElement {
        self.basis_t(self.rs.identity())
    }

    /// `T_w`.
    pub fn basis_t(&self, w: WeylElement) -> HeckeElement {
        HeckeElement::term(w, QPoly::one(&self.alph, self.rs.dim()))
    }

    /// `f` as an element of the algebra.
    pub fn poly(&self, f: &QPoly) -> HeckeElement {
        HeckeElement::term(self.rs.identity(), f.clone())
    }

    /// `T_i h` via
    /// `γ_w(T_i h) = (t−t⁻¹)∇_i γ_w(h) + s_i γ_{s_i w}(h)
    ///   + [ℓ(s_i w) < ℓ(w)] (t−t⁻¹) s_i γ_w(h)`.
    pub fn lmul_t(&self, i: usize, h: &HeckeElement) -> HeckeElement {
        let rs = &self.rs;
        let mut out = self.zero();
        for (&w, f) in h.terms() {
            let sf = f.reflect(rs, i);
            let sw = rs.lmul_s(i, w);
            out.add_term(w, &self.nabla(i, f).scale(&self.tdiff[i]));
            out.add_term(sw, &sf);
            if rs.length(sw) < rs.length(w) {
                out.add_term(w, &sf.scale(&self.tdiff[i]));
            }
        }
        out
    }

    /// `T_i⁻¹ h = T_i h − (t−t⁻¹) h`.
    pub fn lmul_t_inv(&self, i: usize, h: &HeckeElement) -> HeckeElement {
        self.lmul_t(i, h).sub(&h.scale(&self.tdiff[i]))
    }

    /// `T_w h` along the reduced word of `w`.
    pub fn lmul_tw(&self, w: WeylElement, h: &HeckeElement) -> HeckeElement {
        let mut out = h.clone();
        for &i in self.rs.word(w).iter().rev() {
            out = self.lmul_t(i, &out);
        }
        out
    }

    /// `T_w⁻¹ h`.
    pub fn lmul_tw_inv(&self, w: WeylElement, h: &HeckeElement) -> HeckeElement {
        let mut out = h.clone();
        for &i in self.rs.word(w) {
            out = self.lmul_t_inv(i, &out);
        }
        out
    }

    /// `T_w⁻¹`.
    pub fn basis_t_inv(&self, w: WeylElement) -> HeckeElement {
        self.lmul_tw_inv(w, &self.one())
    }

    /// The product `a · b`.
    pub fn product(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut memo: HashMap<WeylElement, HeckeElement> = HashMap::new();
        memo.insert(self.rs.identity(), b.clone());
        let mut out = self.zero();
        for (&w, f) in a.terms() {
            let tw = self.tw_times(w, &mut memo);
            out = out.add(&tw.lmul_poly(f));
        }
        out
    }

    fn tw_times(
        &self,
        w: WeylElement,
        memo: &mut HashMap<WeylElement, HeckeElement>,
    ) -> HeckeElement {
        if let Some(h) = memo.get(&w) {
            return h.clone();
        }
        // The lexicographically least reduced word of w begins with i and
        // continues with that of s_i w.
        let i = self.rs.word(w)[0];
        let rest = self.tw_times(self.rs.lmul_s(i, w), memo);
        let h = self.lmul_t(i, &rest);
        memo.insert(w, h.clone());
        h
    }

    /// `1^± = Σ_w (±1)^{ℓ(w)} t(w)^{±1} T_w`.
    pub fn symmetrizer(&self, sign: i32) -> Result<HeckeElement> {
        let all: Vec<usize> = (0..self.rs.rank()).collect();
        self.partial_symmetrizer(&all, sign)
    }

    /// `1^±_J`: the symmetrizer of the parabolic subgroup `W_J`.
    pub fn partial_symmetrizer(&self, j: &[usize], sign: i32) -> Result<HeckeElement> {
        self.rs.check_subset(j)?;
        let mut out = self.zero();
        for w in self.rs.parabolic(j) {
            let tw = self.t_of(w);
            let c = match sign {
                1 => tw,
                -1 => {
                    let inv = tw.inverse()?;
                    if self.rs.length(w) % 2 == 1 {
                        -inv
                    } else {
                        inv
                    }
                }
                _ => return Err(Error::Precondition("sign must be +1 or -1".into())),
            };
            out.add_term(w, &QPoly::constant(&c, self.rs.dim()));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamMode;
    use crate::rootsys::CartanKind;

    fn setup(kind: CartanKind, r: usize) -> (HeckeAlgebra, ParamSet) {
        let rs = Arc::new(RootSystem::new(kind, r).unwrap());
        let ps = ParamSet::new(&rs, ParamMode::Generic, 1, false).unwrap();
        (HeckeAlgebra::from_params(rs, &ps).unwrap(), ps)
    }

    #[test]
    fn nabla_matches_division() {
        let (alg, ps) = setup(CartanKind::GL, 3);
        let a = ps.alphabet();
        for lam in [[3, -1, 0], [0, 0, 0], [-2, 1, 4], [1, 2, 2]] {
            let f = QPoly::x(a, &lam);
            for i in 0..2 {
                assert_eq!(Ok(alg.nabla(i, &f)), nabla_by_division(alg.root_system(), i, 1, &f));
                assert_eq!(Ok(nabla(alg.root_system(), i, 3, &f)),
                    nabla_by_division(alg.root_system(), i, 3, &f));
            }
        }
        let rs = alg.root_system();
        let y = vec![crate::rootsys::Rat::new(5, 2), crate::rootsys::Rat::new(-1, 3), 0.into()];
        let f = QPoly::monomial(&ParamPoly::one(a), &y);
        assert_eq!(Ok(nabla(rs, 0, 1, &f)), nabla_by_division(rs, 0, 1, &f));
    }

    #[test]
    fn quadratic_and_braid() {
        let (alg, _) = setup(CartanKind::B, 2);
        let one = alg.one();
        let t0 = alg.basis_t(alg.root_system().simple_reflection(0));
        let sq = alg.product(&t0, &t0);
        let rhs = t0.scale(alg.tdiff(0)).add(&one);
        assert_eq!(sq, rhs);
        let t1 = alg.basis_t(alg.root_system().simple_reflection(1));
        let a = alg.product(&alg.product(&t0, &t1), &alg.product(&t0, &t1));
        let b = alg.product(&alg.product(&t1, &t0), &alg.product(&t1, &t0));
        assert_eq!(a, b);
        let w0 = alg.root_system().longest();
        assert_eq!(alg.product(&alg.basis_t(w0), &alg.basis_t_inv(w0)), one);
    }

    #[test]
    fn bernstein_relation() {
        let (alg, ps) = setup(CartanKind::GL, 2);
        let a = ps.alphabet();
        let rs = alg.root_system().clone();
        let x = QPoly::x(a, &[2, -1]);
        let t0 = alg.basis_t(rs.simple_reflection(0));
        let lhs = alg.product(&t0, &alg.poly(&x));
        let rhs = alg
            .product(&alg.poly(&x.reflect(&rs, 0)), &t0)
            .add(&alg.poly(&alg.nabla(0, &x).scale(alg.tdiff(0))));
        assert_eq!(lhs, rhs);
    }
}
