//! Parameter sets: the Hecke parameters `t_α` (constant on root orbits)
//! and the metaplectic Gauss-sum parameters `g_j(α)`.
//!
//! The symbol `q` always stands for `v^{1/2}`, so `v = q²`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coeffring::{Alphabet, ParamPoly};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, WeylElement};

/// How the parameters are realised as symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamMode {
    /// One symbol `t` per root orbit and `g_j` per orbit.
    Generic,
    /// `t_α = q = v^{1/2}` for all roots, one shared family `g_j`.
    Equal,
    /// `t_α = q` and `g_j ↦ −q⁻¹` for `n ∤ j` (the non-metaplectic
    /// specialization).
    Specialized,
}

impl ParamMode {
    pub fn parse(s: &str) -> Result<ParamMode> {
        match s {
            "generic" => Ok(ParamMode::Generic),
            "equal" => Ok(ParamMode::Equal),
            "specialized" | "special" => Ok(ParamMode::Specialized),
            other => Err(Error::Parse(format!("unknown parameter mode `{other}`"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ParamMode::Generic => "generic",
            ParamMode::Equal => "equal",
            ParamMode::Specialized => "specialized",
        }
    }
}

/// Parameter symbols for a root system and a metaplectic degree `n`.
#[derive(Clone, Debug)]
pub struct ParamSet {
    alph: Arc<Alphabet>,
    mode: ParamMode,
    n: i64,
    flip: bool,
    t_orbit: Vec<ParamPoly>,
    g_free: BTreeMap<(i64, usize), ParamPoly>,
}

impl ParamSet {
    /// Builds the alphabet.  `n ≥ 1` is the metaplectic degree (`n = 1`
    /// for the non-metaplectic setting).  `flip` replaces the reduction
    /// rule `g_{n/2} = −t⁻¹` by `+t⁻¹` (a deliberately wrong rule used as a
    /// negative probe).  The specialized mode defines every `g_j` with
    /// `n ∤ j` directly as `−q⁻¹` and is therefore unaffected by `flip`.
    pub fn new(rs: &RootSystem, mode: ParamMode, n: i64, flip: bool) -> Result<ParamSet> {
        if n < 1 {
            return Err(Error::Precondition("metaplectic degree n must be ≥ 1".into()));
        }
        let orbits = rs.num_orbits();
        let labels: Vec<&str> = (0..orbits).map(|o| rs.orbit_label(o)).collect();
        let free_js: Vec<i64> = (1..n).filter(|j| 2 * j < n).collect();
        let mut names: Vec<String> = Vec::new();
        match mode {
            ParamMode::Generic => {
                for l in &labels {
                    names.push(format!("t{l}"));
                }
                for &j in &free_js {
                    for l in &labels {
                        names.push(format!("g{j}{l}"));
                    }
                }
            }
            ParamMode::Equal => {
                names.push("q".into());
                for &j in &free_js {
                    names.push(format!("g{j}"));
                }
            }
            ParamMode::Specialized => names.push("q".into()),
        }
        let alph = Alphabet::new(&names)?;
        let sym = |name: &str| ParamPoly::symbol(&alph, name);
        let t_orbit = match mode {
            ParamMode::Generic => labels
                .iter()
                .map(|l| sym(&format!("t{l}")))
                .collect::<Result<Vec<_>>>()?,
            _ => vec![sym("q")?; orbits],
        };
        let mut g_free = BTreeMap::new();
        for &j in &free_js {
            for (o, l) in labels.iter().enumerate() {
                let g = match mode {
                    ParamMode::Generic => sym(&format!("g{j}{l}"))?,
                    ParamMode::Equal => sym(&format!("g{j}"))?,
                    ParamMode::Specialized => -sym("q")?.inverse()?,
                };
                g_free.insert((j, o), g);
            }
        }
        Ok(ParamSet {
            alph,
            mode,
            n,
            flip,
            t_orbit,
            g_free,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alph
    }

    pub fn mode(&self) -> ParamMode {
        self.mode
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    /// `t` on a root orbit.
    pub fn t_orbit(&self, orbit: usize) -> &ParamPoly {
        &self.t_orbit[orbit]
    }

    /// `t_{α_i}` for a simple root.
    pub fn t_simple(&self, rs: &RootSystem, i: usize) -> ParamPoly {
        self.t_orbit[rs.orbit_of_simple(i)].clone()
    }

    /// The list `(t_{α_1}, …, t_{α_r})`.
    pub fn t_simples(&self, rs: &RootSystem) -> Vec<ParamPoly> {
        (0..rs.rank()).map(|i| self.t_simple(rs, i)).collect()
    }

    /// `t(w) = ∏_{α ∈ Π(w)} t_α`.
    pub fn t_of(&self, rs: &RootSystem, w: WeylElement) -> ParamPoly {
        let mut out = ParamPoly::one(&self.alph);
        for &i in rs.word(w) {
            out = &out * &self.t_orbit[rs.orbit_of_simple(i)];
        }
        out
    }

    /// `v^{1/2}`; only defined for equal parameters.
    pub fn q(&self) -> Result<ParamPoly> {
        match self.mode {
            ParamMode::Generic => Err(Error::Precondition(
                "v^(1/2) requires equal parameters (mode equal or specialized)".into(),
            )),
            _ => ParamPoly::symbol(&self.alph, "q"),
        }
    }

    /// `v = q²`.
    pub fn v(&self) -> Result<ParamPoly> {
        self.q()?.pow(2)
    }

    /// `g_j(α)` for a root in the given orbit, reduced by the rules
    /// `g_j = −1` for `n | j`, `g_{n/2} = −t⁻¹`, `g_j g_{n−j} = t⁻²`
    /// and `n`-periodicity.
    pub fn g(&self, j: i64, orbit: usize) -> ParamPoly {
        let n = self.n;
        let jr = j.rem_euclid(n);
        let t = &self.t_orbit[orbit];
        let tinv = t.inverse().expect("t is a unit");
        if jr == 0 {
            ParamPoly::from_int(&self.alph, -1)
        } else if 2 * jr < n {
            self.g_free[&(jr, orbit)].clone()
        } else if 2 * jr == n {
            if self.flip && self.mode != ParamMode::Specialized {
                tinv
            } else {
                -tinv
            }
        } else {
            let partner = self.g_free[&(n - jr, orbit)].inverse().expect("g is a unit");
            &(&tinv * &tinv) * &partner
        }
    }

    /// Substitution data sending the free `g_j` of an equal-parameter set to
    /// `−q⁻¹`, together with the target specialized set.
    pub fn specialization(
        &self,
        rs: &RootSystem,
    ) -> Result<(ParamSet, BTreeMap<String, ParamPoly>)> {
        if self.mode != ParamMode::Equal {
            return Err(Error::Precondition(
                "specialization starts from equal parameters".into(),
            ));
        }
        let target = ParamSet::new(rs, ParamMode::Specialized, self.n, self.flip)?;
        let mut map = BTreeMap::new();
        let q = target.q()?;
        map.insert("q".to_string(), q.clone());
        for name in self.alph.names() {
            if name.starts_with('g') {
                map.insert(name.clone(), -q.inverse()?);
            }
        }
        Ok((target, map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanKind;

    #[test]
    fn alphabets() {
        let b2 = RootSystem::new(CartanKind::B, 2).unwrap();
        let p = ParamSet::new(&b2, ParamMode::Generic, 5, false).unwrap();
        assert_eq!(
            p.alphabet().names(),
            &["tl", "ts", "g1l", "g1s", "g2l", "g2s"].map(String::from)
        );
        let gl = RootSystem::new(CartanKind::GL, 2).unwrap();
        let p = ParamSet::new(&gl, ParamMode::Equal, 3, false).unwrap();
        assert_eq!(p.alphabet().names(), &["q", "g1"].map(String::from));
        assert!(ParamSet::new(&gl, ParamMode::Generic, 1, false).unwrap().q().is_err());
    }

    #[test]
    fn g_reduction() {
        let gl = RootSystem::new(CartanKind::GL, 2).unwrap();
        let p = ParamSet::new(&gl, ParamMode::Generic, 4, false).unwrap();
        let a = p.alphabet().clone();
        let t = ParamPoly::symbol(&a, "t").unwrap();
        let g1 = ParamPoly::symbol(&a, "g1").unwrap();
        assert_eq!(p.g(0, 0), ParamPoly::from_int(&a, -1));
        assert_eq!(p.g(-8, 0), ParamPoly::from_int(&a, -1));
        assert_eq!(p.g(1, 0), g1);
        assert_eq!(p.g(5, 0), g1);
        assert_eq!(p.g(2, 0), -t.inverse().unwrap());
        assert_eq!(p.g(-1, 0), &t.pow(-2).unwrap() * &g1.inverse().unwrap());
        assert_eq!(&p.g(1, 0) * &p.g(3, 0), t.pow(-2).unwrap());
        let f = ParamSet::new(&gl, ParamMode::Generic, 4, true).unwrap();
        assert_eq!(f.g(2, 0), t.inverse().unwrap());
    }

    #[test]
    fn specialized_g_is_minus_q_inverse() {
        let gl = RootSystem::new(CartanKind::GL, 3).unwrap();
        let p = ParamSet::new(&gl, ParamMode::Specialized, 5, false).unwrap();
        let mq = -p.q().unwrap().inverse().unwrap();
        for j in 1..5 {
            assert_eq!(p.g(j, 0), mq);
        }
        let e = ParamSet::new(&gl, ParamMode::Equal, 5, false).unwrap();
        let (target, map) = e.specialization(&gl).unwrap();
        for j in 1..5 {
            let s = e.g(j, 0).specialize(target.alphabet(), &map).unwrap();
            assert_eq!(s, target.g(j, 0));
        }
    }

    #[test]
    fn t_of_words() {
        let b2 = RootSystem::new(CartanKind::B, 2).unwrap();
        let p = ParamSet::new(&b2, ParamMode::Generic, 1, false).unwrap();
        let a = p.alphabet().clone();
        let ts = ParamPoly::symbol(&a, "ts").unwrap();
        let tl = ParamPoly::symbol(&a, "tl").unwrap();
        let w0 = b2.longest();
        assert_eq!(p.t_of(&b2, w0), (&ts * &ts) * (&tl * &tl));
    }
}
