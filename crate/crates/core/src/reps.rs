//! The polynomial, quasi-polynomial and metaplectic representations of the
//! affine Hecke algebra, the Demazure–Whittaker operators and the
//! `h`-statistics.

use std::sync::Arc;

use crate::coeffring::ParamPoly;
use crate::error::{Error, Result};
use crate::hecke::{nabla, HeckeElement};
use crate::params::ParamSet;
use crate::qpoly::QPoly;
use crate::rootsys::{MetaplecticDatum, Rat, RootSystem, WeylElement};

/// Which representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// `π` on `F[Λ]`.
    Pol,
    /// `π^{qp}` on `F[E]`.
    Qp,
    /// `π^m` on `F[Λ]`.  `literal` evaluates the uncorrected displayed
    /// formula (constant first term, opposite sign on `∇^m`); it is kept
    /// only as a negative probe and does not define a representation.
    Met {
        datum: MetaplecticDatum,
        literal: bool,
    },
}

impl Flavor {
    pub fn name(&self) -> &'static str {
        match self {
            Flavor::Pol => "pol",
            Flavor::Qp => "qp",
            Flavor::Met { literal: false, .. } => "met",
            Flavor::Met { literal: true, .. } => "met-literal",
        }
    }
}

/// A representation of `H̃` with explicit parameters.
#[derive(Clone, Debug)]
pub struct Rep {
    rs: Arc<RootSystem>,
    ps: Arc<ParamSet>,
    t_orbit: Vec<ParamPoly>,
    tdiff_orbit: Vec<ParamPoly>,
    flavor: Flavor,
}

/// `χ_i(x)`: `t` when `x ∈ ℤ`, else `1`.
pub fn chi(t: &ParamPoly, x: Rat) -> ParamPoly {
    if x.is_integer() {
        t.clone()
    } else {
        ParamPoly::one(t.alphabet())
    }
}

impl Rep {
    /// A representation whose `t` values are those of the parameter set.
    pub fn new(rs: Arc<RootSystem>, ps: Arc<ParamSet>, flavor: Flavor) -> Result<Rep> {
        let t = (0..rs.num_orbits()).map(|o| ps.t_orbit(o).clone()).collect();
        Rep::with_t(rs, ps, flavor, t)
    }

    /// A representation with explicit `t` per root orbit.
    pub fn with_t(
        rs: Arc<RootSystem>,
        ps: Arc<ParamSet>,
        flavor: Flavor,
        t_orbit: Vec<ParamPoly>,
    ) -> Result<Rep> {
        if t_orbit.len() != rs.num_orbits() {
            return Err(Error::Dimension {
                expected: rs.num_orbits(),
                got: t_orbit.len(),
            });
        }
        if let Flavor::Met { datum, .. } = &flavor {
            datum.validate(&rs)?;
            if datum.n != ps.n() {
                return Err(Error::Precondition(format!(
                    "metaplectic degree {} differs from the parameter set's {}",
                    datum.n,
                    ps.n()
                )));
            }
        }
        let tdiff_orbit = t_orbit
            .iter()
            .map(|t| Ok(t - &t.inverse()?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Rep {
            rs,
            ps,
            t_orbit,
            tdiff_orbit,
            flavor,
        })
    }

    pub fn pol(rs: Arc<RootSystem>, ps: Arc<ParamSet>) -> Result<Rep> {
        Rep::new(rs, ps, Flavor::Pol)
    }

    pub fn qp(rs: Arc<RootSystem>, ps: Arc<ParamSet>) -> Result<Rep> {
        Rep::new(rs, ps, Flavor::Qp)
    }

    pub fn met(rs: Arc<RootSystem>, ps: Arc<ParamSet>, datum: MetaplecticDatum) -> Result<Rep> {
        Rep::new(rs, ps, Flavor::Met { datum, literal: false })
    }

    /// The same representation with every `t` replaced by `t⁻¹`.
    pub fn inverted(&self) -> Result<Rep> {
        let t = self
            .t_orbit
            .iter()
            .map(|t| t.inverse())
            .collect::<Result<Vec<_>>>()?;
        Rep::with_t(self.rs.clone(), self.ps.clone(), self.flavor.clone(), t)
    }

    /// The same flavor with all `t` equal to `t0`.
    pub fn uniform(&self, t0: &ParamPoly) -> Result<Rep> {
        let t = vec![t0.clone(); self.rs.num_orbits()];
        Rep::with_t(self.rs.clone(), self.ps.clone(), self.flavor.clone(), t)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn params(&self) -> &Arc<ParamSet> {
        &self.ps
    }

    pub fn flavor(&self) -> &Flavor {
        &self.flavor
    }

    pub fn t_simple(&self, i: usize) -> &ParamPoly {
        &self.t_orbit[self.rs.orbit_of_simple(i)]
    }

    pub fn tdiff_simple(&self, i: usize) -> &ParamPoly {
        &self.tdiff_orbit[self.rs.orbit_of_simple(i)]
    }

    /// `t(w)`.
    pub fn t_of(&self, w: WeylElement) -> ParamPoly {
        let mut out = ParamPoly::one(self.ps.alphabet());
        for &i in self.rs.word(w) {
            out = &out * self.t_simple(i);
        }
        out
    }

    /// The coroot scale of `∇_i` for this flavor.
    pub fn scale(&self, i: usize) -> i64 {
        match &self.flavor {
            Flavor::Met { datum, .. } => datum.m_of_orbit(self.rs.orbit_of_simple(i)),
            _ => 1,
        }
    }

    /// The flavor's divided difference `∇_i`.
    pub fn nabla(&self, i: usize, f: &QPoly) -> QPoly {
        nabla(&self.rs, i, self.scale(i), f)
    }

    fn check_space(&self, f: &QPoly) -> Result<()> {
        if f.dim() != self.rs.dim() {
            return Err(Error::Dimension {
                expected: self.rs.dim(),
                got: f.dim(),
            });
        }
        if !matches!(self.flavor, Flavor::Qp) && !f.is_polynomial() {
            return Err(Error::Precondition(format!(
                "the {} representation acts on integral exponents only",
                self.flavor.name()
            )));
        }
        Ok(())
    }

    /// `ρ(T_i)f`, or `ρ(T_i⁻¹)f` when `inverse`.
    pub fn apply_gen(&self, i: usize, f: &QPoly, inverse: bool) -> Result<QPoly> {
        self.check_space(f)?;
        let rs = &self.rs;
        let t = self.t_simple(i);
        let row = rs.simple_row(i);
        let orbit = rs.orbit_of_simple(i);
        let alph = f.alphabet();
        let mut first = QPoly::zero(alph, f.dim());
        let mut nab = self.nabla(i, f);
        match &self.flavor {
            Flavor::Pol | Flavor::Qp => {
                for (y, c) in f.terms_rat() {
                    let a = RootSystem::pair_rat(row, &y);
                    let coeff = &chi(t, a) * &c;
                    first.add_assign_ref(&QPoly::monomial(&coeff, &y).reflect(rs, i));
                }
            }
            Flavor::Met { datum, literal } => {
                for (y, c) in f.iter() {
                    let b = datum.q_vals[orbit] * RootSystem::pair_int(row, y);
                    let g = self.ps.g(-b, orbit);
                    let coeff = -(&(t * &g) * c);
                    let image = if *literal {
                        QPoly::constant(&coeff, f.dim())
                    } else {
                        QPoly::monomial_int(&coeff, y).reflect(rs, i)
                    };
                    first.add_assign_ref(&image);
                }
                if *literal {
                    nab = -nab;
                }
            }
        }
        let tdiff = self.tdiff_simple(i);
        let mut out = &first + &nab.scale(tdiff);
        if inverse {
            out = &out - &f.scale(tdiff);
        }
        Ok(out)
    }

    /// `ρ(T_w)f = ρ(T_{j_1})⋯ρ(T_{j_ℓ})f`.
    pub fn apply_t(&self, w: WeylElement, f: &QPoly) -> Result<QPoly> {
        let mut out = f.clone();
        for &i in self.rs.word(w).iter().rev() {
            out = self.apply_gen(i, &out, false)?;
        }
        Ok(out)
    }

    /// `ρ(T_w⁻¹)f = ρ(T_{j_ℓ}⁻¹)⋯ρ(T_{j_1}⁻¹)f`.
    pub fn apply_t_inv(&self, w: WeylElement, f: &QPoly) -> Result<QPoly> {
        let mut out = f.clone();
        for &i in self.rs.word(w) {
            out = self.apply_gen(i, &out, true)?;
        }
        Ok(out)
    }

    /// `ρ(h)f = Σ_w γ_w(h)·ρ(T_w)f`.
    pub fn apply_hecke(&self, h: &HeckeElement, f: &QPoly) -> Result<QPoly> {
        let mut out = QPoly::zero(f.alphabet(), f.dim());
        for (&w, g) in h.terms() {
            if !matches!(self.flavor, Flavor::Qp) && !g.is_polynomial() {
                return Err(Error::Precondition(
                    "Hecke coefficients must have integral exponents".into(),
                ));
            }
            out.add_assign_ref(&(g * &self.apply_t(w, f)?));
        }
        Ok(out)
    }

    /// `h^c(w) = ∏_{α ∈ Π(w), α(c) = 0} t_α`.
    pub fn h_stat(&self, c: &[Rat], w: WeylElement) -> ParamPoly {
        let mut out = ParamPoly::one(self.ps.alphabet());
        for &k in self.rs.inversion_set(w) {
            let root = &self.rs.positive_roots()[k];
            if RootSystem::pair_rat(&root.row, c) == Rat::from_integer(0) {
                out = &out * &self.t_orbit[root.orbit];
            }
        }
        out
    }

    /// `h^{m,c}(w) = (−1)^{ℓ(w)} t(w) ∏_{α ∈ Π(w)} g_{−B(c,α∨)}(α)`.
    pub fn h_m_stat(&self, c: &[i64], w: WeylElement, datum: &MetaplecticDatum) -> ParamPoly {
        let mut out = self.t_of(w);
        if self.rs.length(w) % 2 == 1 {
            out = -out;
        }
        for &k in self.rs.inversion_set(w) {
            let root = &self.rs.positive_roots()[k];
            let b = datum.b_pairing(root, c);
            out = &out * &self.ps.g(-b, root.orbit);
        }
        out
    }
}

/// Demazure–Whittaker operators `𝒯_{i,q} = −q⁻¹ π_{q²}(T_i)` for an
/// arbitrary unit `q`.
#[derive(Clone, Debug)]
pub struct DwOps {
    rep: Rep,
    q: ParamPoly,
    qinv: ParamPoly,
}

impl DwOps {
    /// `base` supplies the root system and alphabet; its `t` are replaced
    /// by `q`.
    pub fn new(base: &Rep, q: &ParamPoly) -> Result<DwOps> {
        let rep = Rep::with_t(
            base.rs.clone(),
            base.ps.clone(),
            Flavor::Pol,
            vec![q.clone(); base.rs.num_orbits()],
        )?;
        Ok(DwOps {
            rep,
            q: q.clone(),
            qinv: q.inverse()?,
        })
    }

    pub fn q(&self) -> &ParamPoly {
        &self.q
    }

    /// The underlying `π_{q²}`.
    pub fn rep(&self) -> &Rep {
        &self.rep
    }

    /// `𝒯_{i,q} f`, or `𝒯_{i,q}⁻¹ f = −q π(T_i⁻¹) f`.
    pub fn apply(&self, i: usize, f: &QPoly, inverse: bool) -> Result<QPoly> {
        let g = self.rep.apply_gen(i, f, inverse)?;
        Ok(if inverse {
            -g.scale(&self.q)
        } else {
            -g.scale(&self.qinv)
        })
    }

    /// `𝒯_{w,q} f`.
    pub fn apply_w(&self, w: WeylElement, f: &QPoly) -> Result<QPoly> {
        let mut out = f.clone();
        for &i in self.rep.rs.word(w).iter().rev() {
            out = self.apply(i, &out, false)?;
        }
        Ok(out)
    }

    /// `𝒯_{w,q}⁻¹ f`.
    pub fn apply_w_inv(&self, w: WeylElement, f: &QPoly) -> Result<QPoly> {
        let mut out = f.clone();
        for &i in self.rep.rs.word(w) {
            out = self.apply(i, &out, true)?;
        }
        Ok(out)
    }
}

/// Metaplectic Demazure–Whittaker operators
/// `𝒯^m_{i,v} = −v^{1/2} y^ρ π^m_v(T_i⁻¹) y^{−ρ}` (equal parameters).
#[derive(Clone, Debug)]
pub struct MetDwOps {
    rep: Rep,
    q: ParamPoly,
    rho: Vec<i64>,
    neg_rho: Vec<i64>,
}

impl MetDwOps {
    pub fn new(rs: Arc<RootSystem>, ps: Arc<ParamSet>, datum: MetaplecticDatum) -> Result<MetDwOps> {
        let q = ps.q()?;
        let rho = rs.rho();
        let neg_rho = rho.iter().map(|x| -x).collect();
        let rep = Rep::met(rs, ps, datum)?;
        Ok(MetDwOps {
            rep,
            q,
            rho,
            neg_rho,
        })
    }

    pub fn rep(&self) -> &Rep {
        &self.rep
    }

    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    /// `𝒯^m_{i,v} f`, or its inverse `−v^{−1/2} y^ρ π^m(T_i) y^{−ρ}`.
    pub fn apply(&self, i: usize, f: &QPoly, inverse: bool) -> Result<QPoly> {
        let g = self.rep.apply_gen(i, &f.shift_int(&self.neg_rho), !inverse)?;
        let s = if inverse { self.q.inverse()? } else { self.q.clone() };
        Ok(-g.shift_int(&self.rho).scale(&s))
    }

    /// `𝒯^m_w f`.
    pub fn apply_w(&self, w: WeylElement, f: &QPoly) -> Result<QPoly> {
        let mut out = f.clone();
        for &i in self.rep.rs.word(w).iter().rev() {
            out = self.apply(i, &out, false)?;
        }
        Ok(out)
    }

    /// `ι 𝒯^m_w ι f`.
    pub fn apply_w_iota(&self, w: WeylElement, f: &QPoly) -> Result<QPoly> {
        Ok(self.apply_w(w, &f.iota())?.iota())
    }
}

/// `d_m : x^λ ↦ x^{mλ}`.
pub fn d_m_map(f: &QPoly, m: i64) -> Result<QPoly> {
    if m < 1 {
        return Err(Error::Precondition("d_m needs m ≥ 1".into()));
    }
    Ok(f.rescale(Rat::from_integer(m)))
}

/// `d_m` for a datum; errors unless `m(α)` is constant.
pub fn d_m_for(rs: &RootSystem, datum: &MetaplecticDatum, f: &QPoly) -> Result<QPoly> {
    datum.validate(rs)?;
    let m = datum
        .constant_m()
        .ok_or_else(|| Error::Precondition("d_m needs constant m(α)".into()))?;
    d_m_map(f, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamMode;
    use crate::rootsys::CartanKind;

    fn gl2(mode: ParamMode, n: i64) -> (Arc<RootSystem>, Arc<ParamSet>) {
        let rs = Arc::new(RootSystem::new(CartanKind::GL, 2).unwrap());
        let ps = Arc::new(ParamSet::new(&rs, mode, n, false).unwrap());
        (rs, ps)
    }

    fn sym(ps: &ParamSet, s: &str) -> ParamPoly {
        ParamPoly::symbol(ps.alphabet(), s).unwrap()
    }

    #[test]
    fn generator_examples() {
        let (rs, ps) = gl2(ParamMode::Generic, 1);
        let a = ps.alphabet().clone();
        let t = sym(&ps, "t");
        let tinv = t.inverse().unwrap();
        let pol = Rep::pol(rs.clone(), ps.clone()).unwrap();
        let x10 = QPoly::x(&a, &[1, 0]);
        assert_eq!(pol.nabla(0, &x10), -QPoly::x(&a, &[0, 1]));
        assert_eq!(
            pol.apply_gen(0, &x10, false).unwrap(),
            QPoly::monomial_int(&tinv, &[0, 1])
        );
        let h = ParamPoly::from_int(&a, 1);
        assert_eq!(chi(&t, Rat::new(1, 2)), h);
        assert_eq!(chi(&t, Rat::from_integer(3)), t);

        let qp = Rep::qp(rs.clone(), ps.clone()).unwrap();
        let half = |v: [i64; 2]| QPoly::monomial(&h, &[Rat::new(v[0], 2), Rat::new(v[1], 2)]);
        assert!(qp.nabla(0, &half([1, 0])).is_zero());
        let got = qp.apply_gen(0, &half([0, 1]), false).unwrap();
        assert_eq!(got, &half([1, 0]) + &half([0, 1]).scale(&(&t - &tinv)));
        assert!(pol.apply_gen(0, &half([1, 0]), false).is_err());
    }

    #[test]
    fn metaplectic_examples() {
        let (rs, ps) = gl2(ParamMode::Generic, 2);
        let a = ps.alphabet().clone();
        let t = sym(&ps, "t");
        let met = Rep::met(rs.clone(), ps.clone(), MetaplecticDatum::standard(&rs, 2)).unwrap();
        assert_eq!(met.nabla(0, &QPoly::x(&a, &[2, 0])), -QPoly::x(&a, &[0, 2]));
        let g1 = ps.g(1, 0);
        assert_eq!(
            met.apply_gen(0, &QPoly::x(&a, &[1, 0]), false).unwrap(),
            QPoly::monomial_int(&-(&t * &g1), &[0, 1])
        );
        assert_eq!(
            met.h_m_stat(&[1, 0], rs.simple_reflection(0), &MetaplecticDatum::standard(&rs, 2)),
            -(&t * &g1)
        );
        // d_2 intertwines π and π^m.
        let pol = Rep::pol(rs.clone(), ps.clone()).unwrap();
        let x = QPoly::x(&a, &[1, 0]);
        let lhs = met.apply_gen(0, &d_m_map(&x, 2).unwrap(), false).unwrap();
        let rhs = d_m_map(&pol.apply_gen(0, &x, false).unwrap(), 2).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, QPoly::monomial_int(&t.inverse().unwrap(), &[0, 2]));
    }

    #[test]
    fn hecke_application_examples() {
        let (rs, ps) = gl2(ParamMode::Generic, 1);
        let a = ps.alphabet().clone();
        let t = sym(&ps, "t");
        let pol = Rep::pol(rs.clone(), ps.clone()).unwrap();
        let alg = crate::hecke::HeckeAlgebra::from_params(rs.clone(), &ps).unwrap();
        let x10 = QPoly::x(&a, &[1, 0]);
        let x01 = QPoly::x(&a, &[0, 1]);
        let plus = alg.symmetrizer(1).unwrap();
        assert_eq!(pol.apply_hecke(&plus, &x10).unwrap(), &x10 + &x01);
        let minus = alg.symmetrizer(-1).unwrap();
        assert_eq!(
            pol.apply_hecke(&minus, &x10).unwrap(),
            &x10 - &x01.scale(&t.pow(-2).unwrap())
        );
        let c = [Rat::new(1, 2), Rat::from_integer(0)];
        assert!(pol.h_stat(&c, rs.simple_reflection(0)).is_one());
    }

    #[test]
    fn demazure_whittaker_examples() {
        let (rs, ps) = gl2(ParamMode::Equal, 1);
        let a = ps.alphabet().clone();
        let q = ps.q().unwrap();
        let base = Rep::pol(rs.clone(), ps.clone()).unwrap();
        let dw = DwOps::new(&base, &q).unwrap();
        let x10 = QPoly::x(&a, &[1, 0]);
        assert_eq!(
            dw.apply(0, &x10, false).unwrap(),
            QPoly::monomial_int(&-q.pow(-2).unwrap(), &[0, 1])
        );
        let one = QPoly::one(&a, 2);
        assert_eq!(dw.apply(0, &one, false).unwrap(), -one.clone());
        let f = &x10 + &QPoly::x(&a, &[-2, 3]);
        let back = dw.apply(0, &dw.apply(0, &f, false).unwrap(), true).unwrap();
        assert_eq!(back, f);

        let (rs2, ps2) = gl2(ParamMode::Equal, 2);
        let mdw = MetDwOps::new(rs2.clone(), ps2.clone(), MetaplecticDatum::standard(&rs2, 2))
            .unwrap();
        let a2 = ps2.alphabet().clone();
        let f = QPoly::x(&a2, &[1, 1]);
        let inner = mdw
            .rep()
            .apply_gen(0, &QPoly::x(&a2, &[0, 1]), true)
            .unwrap();
        let q2 = ps2.q().unwrap();
        let expected = -inner.shift_int(&[1, 0]).scale(&q2);
        assert_eq!(mdw.apply(0, &f, false).unwrap(), expected);
    }
}
