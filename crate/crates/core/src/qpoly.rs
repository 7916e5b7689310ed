//! Quasi-polynomials: finite sums `Σ c_y x^y` with rational exponent
//! vectors `y ∈ E` and [`ParamPoly`] coefficients.
//!
//! Exponents are stored as integer numerators over one common positive
//! denominator, kept reduced, so structural equality is mathematical
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::coeffring::{Alphabet, ParamPoly};
use crate::error::{Error, Result};
use crate::rootsys::{fmt_rat, fmt_rat_vec, parse_rat, Lattice, Rat, RootSystem, WeylElement};

#[derive(Clone)]
pub struct QPoly {
    alph: Arc<Alphabet>,
    dim: usize,
    den: i64,
    terms: BTreeMap<Vec<i64>, ParamPoly>,
}

impl PartialEq for QPoly {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.den == other.den
            && self.terms == other.terms
            && (Arc::ptr_eq(&self.alph, &other.alph) || self.alph == other.alph)
    }
}

impl Eq for QPoly {}

fn add_into(terms: &mut BTreeMap<Vec<i64>, ParamPoly>, e: Vec<i64>, c: &ParamPoly) {
    if c.is_zero() {
        return;
    }
    match terms.entry(e) {
        std::collections::btree_map::Entry::Occupied(mut o) => {
            o.get_mut().add_assign_ref(c);
            if o.get().is_zero() {
                o.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
    }
}

impl QPoly {
    pub fn zero(alph: &Arc<Alphabet>, dim: usize) -> QPoly {
        QPoly {
            alph: alph.clone(),
            dim,
            den: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alph: &Arc<Alphabet>, dim: usize) -> QPoly {
        Self::constant(&ParamPoly::one(alph), dim)
    }

    pub fn constant(c: &ParamPoly, dim: usize) -> QPoly {
        Self::monomial_int(c, &vec![0; dim])
    }

    /// `c · x^λ` for an integral exponent.
    pub fn monomial_int(c: &ParamPoly, lambda: &[i64]) -> QPoly {
        let mut q = Self::zero(c.alphabet(), lambda.len());
        add_into(&mut q.terms, lambda.to_vec(), c);
        q
    }

    /// `x^λ` for an integral exponent.
    pub fn x(alph: &Arc<Alphabet>, lambda: &[i64]) -> QPoly {
        Self::monomial_int(&ParamPoly::one(alph), lambda)
    }

    /// `c · x^y` for a rational exponent.
    pub fn monomial(c: &ParamPoly, y: &[Rat]) -> QPoly {
        let den = y.iter().fold(1i64, |acc, r| acc.lcm(r.denom()));
        let num: Vec<i64> = y.iter().map(|r| r.numer() * (den / r.denom())).collect();
        let mut q = Self::zero(c.alphabet(), y.len());
        q.den = den;
        add_into(&mut q.terms, num, c);
        q.normalize();
        q
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alph
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The common denominator of all exponents.
    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Whether every exponent is integral.
    pub fn is_polynomial(&self) -> bool {
        self.den == 1
    }

    /// Terms as (exponent numerators, coefficient); divide by [`Self::den`].
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn exponent_of(&self, num: &[i64]) -> Vec<Rat> {
        num.iter().map(|&a| Rat::new(a, self.den)).collect()
    }

    /// Terms with exact rational exponents.
    pub fn terms_rat(&self) -> Vec<(Vec<Rat>, ParamPoly)> {
        self.terms
            .iter()
            .map(|(e, c)| (self.exponent_of(e), c.clone()))
            .collect()
    }

    /// Coefficient of `x^y` (zero when absent).
    pub fn coeff(&self, y: &[Rat]) -> ParamPoly {
        let zero = ParamPoly::zero(&self.alph);
        let mut num = Vec::with_capacity(y.len());
        for r in y {
            let scaled = *r * Rat::from_integer(self.den);
            if !scaled.is_integer() {
                return zero;
            }
            num.push(scaled.to_integer());
        }
        self.terms.get(&num).cloned().unwrap_or(zero)
    }

    /// The constant coefficient if `self` has no non-constant term.
    pub fn as_constant(&self) -> Option<ParamPoly> {
        match self.terms.len() {
            0 => Some(ParamPoly::zero(&self.alph)),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|x| *x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn normalize(&mut self) {
        if self.den == 1 {
            return;
        }
        let mut g = self.den;
        for e in self.terms.keys() {
            for &a in e {
                g = g.gcd(&a);
                if g == 1 {
                    return;
                }
            }
        }
        if self.terms.is_empty() {
            self.den = 1;
            return;
        }
        if g > 1 {
            let terms = std::mem::take(&mut self.terms);
            self.terms = terms
                .into_iter()
                .map(|(e, c)| (e.into_iter().map(|a| a / g).collect(), c))
                .collect();
            self.den /= g;
        }
    }

    fn lifted(&self, den: i64) -> BTreeMap<Vec<i64>, ParamPoly> {
        let k = den / self.den;
        if k == 1 {
            return self.terms.clone();
        }
        self.terms
            .iter()
            .map(|(e, c)| (e.iter().map(|a| a * k).collect(), c.clone()))
            .collect()
    }

    fn check(&self, other: &QPoly) -> Result<()> {
        if !(Arc::ptr_eq(&self.alph, &other.alph) || self.alph == other.alph) {
            return Err(Error::AlphabetMismatch);
        }
        if self.dim != other.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &QPoly) -> Result<QPoly> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    /// In-place addition; panics on alphabet or dimension mismatch.
    pub fn add_assign_ref(&mut self, other: &QPoly) {
        self.check(other).expect("incompatible quasi-polynomials");
        if other.is_zero() {
            return;
        }
        let den = self.den.lcm(&other.den);
        if den != self.den {
            self.terms = self.lifted(den);
            self.den = den;
        }
        let k = den / other.den;
        for (e, c) in &other.terms {
            let e: Vec<i64> = if k == 1 {
                e.clone()
            } else {
                e.iter().map(|a| a * k).collect()
            };
            add_into(&mut self.terms, e, c);
        }
        self.normalize();
    }

    pub fn try_sub(&self, other: &QPoly) -> Result<QPoly> {
        self.try_add(&-other)
    }

    /// Multiplication by a scalar coefficient.
    pub fn scale(&self, c: &ParamPoly) -> QPoly {
        let mut out = Self::zero(&self.alph, self.dim);
        out.den = self.den;
        for (e, x) in &self.terms {
            add_into(&mut out.terms, e.clone(), &(x * c));
        }
        out.normalize();
        out
    }

    pub fn scale_int(&self, k: i64) -> QPoly {
        let mut out = Self::zero(&self.alph, self.dim);
        out.den = self.den;
        for (e, x) in &self.terms {
            add_into(&mut out.terms, e.clone(), &x.scale_int(k));
        }
        out.normalize();
        out
    }

    /// Product in the group algebra of `E`.
    pub fn try_mul(&self, other: &QPoly) -> Result<QPoly> {
        self.check(other)?;
        let den = self.den.lcm(&other.den);
        let a = self.lifted(den);
        let b = other.lifted(den);
        let mut out = Self::zero(&self.alph, self.dim);
        out.den = den;
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_into(&mut out.terms, e, &(ca * cb));
            }
        }
        out.normalize();
        Ok(out)
    }

    /// Multiplication by `x^λ`, `λ` integral.
    pub fn shift_int(&self, lambda: &[i64]) -> QPoly {
        assert_eq!(lambda.len(), self.dim, "dimension mismatch");
        self.map_num(|e| e.iter().zip(lambda).map(|(a, b)| a + b * self.den).collect())
    }

    /// Multiplication by `x^y`, `y` rational.
    pub fn shift(&self, y: &[Rat]) -> QPoly {
        &QPoly::monomial(&ParamPoly::one(&self.alph), y) * self
    }

    /// Applies an exponent map acting on numerators over the current
    /// denominator.  The map must be injective on the support.
    pub fn map_num<F: Fn(&[i64]) -> Vec<i64>>(&self, f: F) -> QPoly {
        let mut out = Self::zero(&self.alph, self.dim);
        out.den = self.den;
        for (e, c) in &self.terms {
            add_into(&mut out.terms, f(e), c);
        }
        out.normalize();
        out
    }

    /// The action of a Weyl group element on exponents.
    pub fn act_weyl(&self, rs: &RootSystem, w: WeylElement) -> QPoly {
        if w == rs.identity() {
            return self.clone();
        }
        self.map_num(|e| rs.act_int(w, e))
    }

    /// The simple reflection `s_i` acting on exponents.
    pub fn reflect(&self, rs: &RootSystem, i: usize) -> QPoly {
        let row = rs.simple_row(i);
        let cor = rs.simple_coroot(i);
        self.map_num(|e| {
            let p = RootSystem::pair_int(row, e);
            e.iter().zip(cor).map(|(a, b)| a - p * b).collect()
        })
    }

    /// `ι(x^y) = x^{−y}`.
    pub fn iota(&self) -> QPoly {
        self.map_num(|e| e.iter().map(|a| -a).collect())
    }

    /// Multiplies every exponent by the rational factor `r ≠ 0`.
    pub fn rescale(&self, r: Rat) -> QPoly {
        assert!(!r.is_zero(), "rescaling by zero");
        let (p, q) = (*r.numer(), *r.denom());
        let mut out = Self::zero(&self.alph, self.dim);
        out.den = self.den * q.abs();
        let sign = if q < 0 { -1 } else { 1 };
        for (e, c) in &self.terms {
            add_into(&mut out.terms, e.iter().map(|a| a * p * sign).collect(), c);
        }
        out.normalize();
        out
    }

    /// The terms whose exponent satisfies `keep`.
    pub fn filter<F: Fn(&[Rat]) -> bool>(&self, keep: F) -> QPoly {
        let mut out = Self::zero(&self.alph, self.dim);
        out.den = self.den;
        for (e, c) in &self.terms {
            if keep(&self.exponent_of(e)) {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out.normalize();
        out
    }

    /// Applies a coefficient map term-wise (e.g. a specialization).
    pub fn map_coeffs<F: Fn(&ParamPoly) -> Result<ParamPoly>>(
        &self,
        target: &Arc<Alphabet>,
        f: F,
    ) -> Result<QPoly> {
        let mut out = Self::zero(target, self.dim);
        out.den = self.den;
        for (e, c) in &self.terms {
            add_into(&mut out.terms, e.clone(), &f(c)?);
        }
        out.normalize();
        Ok(out)
    }

    /// Whether every exponent lies in the lattice.
    pub fn exponents_in(&self, rs: &RootSystem, lattice: &Lattice) -> bool {
        self.terms
            .keys()
            .all(|e| lattice.contains(rs, &self.exponent_of(e)))
    }

    /// Exact division by `den`, whose leading coefficient (in lexicographic
    /// exponent order) must be a signed monomial.  Errors with the residue
    /// when the division is not exact.
    pub fn exact_divide(&self, den: &QPoly) -> Result<QPoly> {
        self.check(den)?;
        let (dlead_e, dlead_c) = match den.terms.iter().next_back() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let dinv = dlead_c
            .inverse()
            .map_err(|_| Error::NotUnit(format!("leading coefficient {dlead_c}")))?;
        let common = self.den.lcm(&den.den);
        let dterms = den.lifted(common);
        let dlead_e: Vec<i64> = dlead_e.iter().map(|a| a * (common / den.den)).collect();
        let mut r = Self::zero(&self.alph, self.dim);
        r.den = common;
        r.terms = self.lifted(common);
        let bounds = |t: &BTreeMap<Vec<i64>, ParamPoly>| {
            let mut lo = vec![i64::MAX; self.dim];
            let mut hi = vec![i64::MIN; self.dim];
            for e in t.keys() {
                for k in 0..self.dim {
                    lo[k] = lo[k].min(e[k]);
                    hi[k] = hi[k].max(e[k]);
                }
            }
            (lo, hi)
        };
        let (nlo, nhi) = bounds(&r.terms);
        let (dlo, dhi) = bounds(&dterms);
        let mut q = Self::zero(&self.alph, self.dim);
        q.den = common;
        while let Some((re, rc)) = r.terms.iter().next_back() {
            let qe: Vec<i64> = re.iter().zip(&dlead_e).map(|(a, b)| a - b).collect();
            let in_box = (0..self.dim)
                .all(|k| nlo[k] - dlo[k] <= qe[k] && qe[k] <= nhi[k] - dhi[k]);
            if !in_box {
                r.normalize();
                return Err(Error::InexactDivision(r.to_string()));
            }
            let qc = rc * &dinv;
            for (de, dc) in &dterms {
                let e: Vec<i64> = qe.iter().zip(de).map(|(a, b)| a + b).collect();
                add_into(&mut r.terms, e, &-(&qc * dc));
            }
            add_into(&mut q.terms, qe, &qc);
        }
        q.normalize();
        Ok(q)
    }

    /// JSON form `{terms: [{exponent: ["p/q", …], coeff: …}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let exps: Vec<String> = self.exponent_of(e).iter().map(fmt_rat).collect();
                json!({"exponent": exps, "coeff": c.to_json()})
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(alph: &Arc<Alphabet>, dim: usize, v: &Value) -> Result<QPoly> {
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("expected {terms: [...]}".into()))?;
        let mut out = Self::zero(alph, dim);
        for t in terms {
            let exps = t
                .get("exponent")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Json("term without `exponent`".into()))?;
            let y: Vec<Rat> = exps
                .iter()
                .map(|x| match x {
                    Value::String(s) => parse_rat(s),
                    Value::Number(n) => n
                        .as_i64()
                        .map(Rat::from_integer)
                        .ok_or_else(|| Error::Json("bad exponent".into())),
                    _ => Err(Error::Json("bad exponent".into())),
                })
                .collect::<Result<_>>()?;
            if y.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: y.len(),
                });
            }
            let c = ParamPoly::from_json(alph, t.get("coeff").unwrap_or(&Value::Null))?;
            out.add_assign_ref(&QPoly::monomial(&c, &y));
        }
        Ok(out)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let is_const = e.iter().all(|a| *a == 0);
            let mono = format!("x^{}", fmt_rat_vec(&self.exponent_of(e)));
            let cs = c.to_string();
            let (neg, body) = if c.num_terms() == 1 && cs.starts_with('-') {
                (true, cs[1..].to_string())
            } else {
                (false, cs)
            };
            let coeff = if c.num_terms() > 1 {
                format!("({body})")
            } else {
                body
            };
            let term = if is_const {
                coeff
            } else if coeff == "1" {
                mono
            } else {
                format!("{coeff}*{mono}")
            };
            match (k, neg) {
                (0, false) => write!(f, "{term}")?,
                (0, true) => write!(f, "-{term}")?,
                (_, false) => write!(f, " + {term}")?,
                (_, true) => write!(f, " - {term}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $try:ident) => {
        impl<'a, 'b> std::ops::$imp<&'b QPoly> for &'a QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &'b QPoly) -> QPoly {
                self.$try(rhs).expect("incompatible quasi-polynomials")
            }
        }
        impl std::ops::$imp<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'b> std::ops::$imp<&'b QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &'b QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> std::ops::$imp<QPoly> for &'a QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            alph: self.alph.clone(),
            dim: self.dim,
            den: self.den,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

/// `W^c` for a point `c`: minimal coset representatives modulo its
/// stabilizer.
pub fn orbit_reps(rs: &RootSystem, c: &[Rat]) -> Vec<WeylElement> {
    rs.min_coset_reps(&rs.fixing_indices(c))
}

/// Decomposes `f = Σ_{w ∈ W^c} p_w x^{wc}` with `p_w ∈ F[Λ]`.
///
/// `lattice` is `Λ` (or a metaplectic lattice, whose alcove is scaled
/// accordingly); `c` must lie in the corresponding `C⁰`.
pub fn gamma_decompose(
    f: &QPoly,
    rs: &RootSystem,
    c: &[Rat],
    lattice: &Lattice,
) -> Result<BTreeMap<WeylElement, QPoly>> {
    if !rs.is_in_c0(c, lattice)? {
        return Err(Error::Precondition(format!(
            "c = {} is not in C0 for the lattice {}",
            fmt_rat_vec(c),
            lattice.tag()
        )));
    }
    gamma_decompose_unchecked(f, rs, c, lattice)
}

/// [`gamma_decompose`] without re-validating `c`.
pub fn gamma_decompose_unchecked(
    f: &QPoly,
    rs: &RootSystem,
    c: &[Rat],
    lattice: &Lattice,
) -> Result<BTreeMap<WeylElement, QPoly>> {
    let reps = orbit_reps(rs, c);
    let images: Vec<Vec<Rat>> = reps.iter().map(|&w| rs.act_rat(w, c)).collect();
    let mut out: BTreeMap<WeylElement, QPoly> = BTreeMap::new();
    for (y, coeff) in f.terms_rat() {
        let hit = images.iter().enumerate().find_map(|(k, wc)| {
            let d: Vec<Rat> = y.iter().zip(wc).map(|(a, b)| a - b).collect();
            lattice.contains(rs, &d).then_some((k, d))
        });
        let (k, d) = hit.ok_or_else(|| Error::OrbitMismatch(fmt_rat_vec(&y)))?;
        let d: Vec<i64> = d.iter().map(|x| x.to_integer()).collect();
        out.entry(reps[k])
            .or_insert_with(|| QPoly::zero(f.alphabet(), f.dim()))
            .add_assign_ref(&QPoly::monomial_int(&coeff, &d));
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

/// The coefficient `γ_w(f)` (zero when absent).
pub fn gamma_coeff(
    parts: &BTreeMap<WeylElement, QPoly>,
    w: WeylElement,
    alph: &Arc<Alphabet>,
    dim: usize,
) -> QPoly {
    parts
        .get(&w)
        .cloned()
        .unwrap_or_else(|| QPoly::zero(alph, dim))
}

/// Inverse of [`gamma_decompose`]: `Σ_w p_w x^{wc}`.
pub fn gamma_assemble(
    parts: &BTreeMap<WeylElement, QPoly>,
    rs: &RootSystem,
    c: &[Rat],
    alph: &Arc<Alphabet>,
) -> QPoly {
    let mut out = QPoly::zero(alph, rs.dim());
    for (&w, p) in parts {
        out.add_assign_ref(&p.shift(&rs.act_rat(w, c)));
    }
    out
}

/// Integer floor of `a / b` for `b > 0`.
pub fn floor_div(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

/// Whether a rational is an integer.
pub fn is_int(r: &Rat) -> bool {
    r.is_integer()
}

/// `⌊r⌋` for a rational.
pub fn floor_rat(r: &Rat) -> i64 {
    r.floor().to_integer()
}

/// Sign helper `(−1)^k`.
pub fn sign_pow(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{rat_vec, CartanKind};

    fn alph() -> Arc<Alphabet> {
        Alphabet::new(&["t"]).unwrap()
    }

    fn r(a: i64, b: i64) -> Rat {
        Rat::new(a, b)
    }

    fn t() -> ParamPoly {
        ParamPoly::symbol(&alph(), "t").unwrap()
    }

    fn one() -> ParamPoly {
        ParamPoly::one(&alph())
    }

    #[test]
    fn monomial_examples() {
        let a = QPoly::monomial(&one(), &[r(1, 2), r(0, 1)]);
        let b = QPoly::x(&alph(), &[1, 1]);
        assert_eq!(&a * &b, QPoly::monomial(&one(), &[r(3, 2), r(1, 1)]));
        let x = QPoly::x(&alph(), &[1, 0]);
        assert_eq!(&x + &x, QPoly::monomial_int(&one().scale_int(2), &[1, 0]));
        assert_eq!(a.shift_int(&[0, 0]), a);
        assert_eq!((&a - &a).den(), 1);
    }

    #[test]
    fn weyl_and_iota_examples() {
        let rs = RootSystem::new(CartanKind::GL, 2).unwrap();
        let s1 = rs.simple_reflection(0);
        let x10 = QPoly::x(&alph(), &[1, 0]);
        let x01 = QPoly::x(&alph(), &[0, 1]);
        assert_eq!(x10.act_weyl(&rs, s1), x01);
        let f = &x10 + &x01.scale(&t());
        let g = &x01 + &x10.scale(&t());
        assert_eq!(f.act_weyl(&rs, rs.longest()), g);
        assert_eq!(f.act_weyl(&rs, rs.identity()), f);
        assert_eq!(x10.reflect(&rs, 0), x01);

        assert_eq!(QPoly::x(&alph(), &[1, 2]).iota(), QPoly::x(&alph(), &[-1, -2]));
        assert_eq!(f.iota().iota(), f);
        let tm2 = t().pow(-2).unwrap();
        let h = &x10 - &x01.scale(&tm2);
        let hi = &QPoly::x(&alph(), &[-1, 0]) - &QPoly::x(&alph(), &[0, -1]).scale(&tm2);
        assert_eq!(h.iota(), hi);
    }

    #[test]
    fn gamma_examples() {
        let rs = RootSystem::new(CartanKind::GL, 2).unwrap();
        let c = vec![r(1, 2), r(0, 1)];
        let f = &QPoly::monomial(&one(), &c) + &QPoly::monomial(&t(), &[r(0, 1), r(1, 2)]);
        let parts = gamma_decompose(&f, &rs, &c, &Lattice::GlZ).unwrap();
        assert_eq!(parts[&rs.identity()], QPoly::one(&alph(), 2));
        assert_eq!(parts[&rs.simple_reflection(0)], QPoly::constant(&t(), 2));
        assert_eq!(gamma_assemble(&parts, &rs, &c, &alph()), f);

        let g = QPoly::x(&alph(), &[3, -1]);
        let parts = gamma_decompose(&g, &rs, &rat_vec(&[0, 0]), &Lattice::GlZ).unwrap();
        assert_eq!(parts[&rs.identity()], g);

        let bad = QPoly::monomial(&one(), &[r(1, 3), r(0, 1)]);
        assert!(matches!(
            gamma_decompose(&bad, &rs, &c, &Lattice::GlZ),
            Err(Error::OrbitMismatch(_))
        ));
        assert!(gamma_decompose(&g, &rs, &rat_vec(&[1, 0]), &Lattice::GlZ).is_err());
    }

    #[test]
    fn division() {
        // (x^{(2,-2)} − 1)/(x^{(1,-1)} − 1) = x^{(1,-1)} + 1
        let a = alph();
        let num = &QPoly::x(&a, &[2, -2]) - &QPoly::one(&a, 2);
        let den = &QPoly::x(&a, &[1, -1]) - &QPoly::one(&a, 2);
        let q = num.exact_divide(&den).unwrap();
        assert_eq!(q, &QPoly::x(&a, &[1, -1]) + &QPoly::one(&a, 2));
        let bad = &QPoly::x(&a, &[2, -2]) - &QPoly::x(&a, &[0, 1]);
        assert!(matches!(bad.exact_divide(&den), Err(Error::InexactDivision(_))));
        let half = QPoly::monomial(&t(), &[r(1, 2), r(0, 1)]);
        assert_eq!((&half * &den).exact_divide(&den).unwrap(), half);
    }

    #[test]
    fn text_and_json() {
        let c = vec![r(1, 2), r(0, 1)];
        let f = &QPoly::monomial(&one(), &c) + &QPoly::monomial(&t(), &[r(0, 1), r(1, 2)]);
        assert_eq!(f.to_string(), "t*x^(0,1/2) + x^(1/2,0)");
        let j = f.to_json();
        assert_eq!(j["terms"][0]["exponent"][1], "1/2");
        assert_eq!(QPoly::from_json(&alph(), 2, &j).unwrap(), f);
        assert_eq!(QPoly::zero(&alph(), 2).to_string(), "0");
    }

    #[test]
    fn rescale_and_filter() {
        let f = &QPoly::x(&alph(), &[2, 4]) + &QPoly::x(&alph(), &[1, 0]);
        let g = f.rescale(r(1, 2));
        assert_eq!(g, &QPoly::x(&alph(), &[1, 2]) + &QPoly::monomial(&one(), &[r(1, 2), r(0, 1)]));
        assert_eq!(f.filter(|y| y[1].is_zero()), QPoly::x(&alph(), &[1, 0]));
    }
}
