//! Sparse Laurent polynomials with big-integer coefficients over a fixed
//! alphabet of formal parameter symbols.
//!
//! Every scalar that appears in the Hecke-algebra formulas (`t_α`, `t(w)`,
//! `v^{1/2}`, the Gauss-sum parameters `g_j`) lives in this ring.  Division
//! is never needed by the formulas themselves; [`ParamPoly::exact_divide`]
//! exists as an independent cross-check.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector with one slot per symbol of the alphabet.
pub type Exps = SmallVec<[i32; 8]>;

/// An ordered set of symbol names, fixed for the lifetime of a session.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Alphabet>> {
        let mut seen = std::collections::BTreeSet::new();
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(Error::Parse(format!("invalid symbol name `{n}`")));
            }
            if !seen.insert(n.to_string()) {
                return Err(Error::DuplicateSymbol(n.to_string()));
            }
        }
        Ok(Arc::new(Alphabet {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A Laurent polynomial `Σ c_e · s^e` with nonzero integer coefficients.
#[derive(Clone)]
pub struct ParamPoly {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Exps, BigInt>,
}

impl ParamPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        ParamPoly {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::from_int(alphabet, 1)
    }

    pub fn from_int(alphabet: &Arc<Alphabet>, c: i64) -> Self {
        Self::monomial(alphabet, &vec![0; alphabet.len()], BigInt::from(c))
    }

    /// `coeff · Π s_k^{exps[k]}`.
    pub fn monomial(alphabet: &Arc<Alphabet>, exps: &[i32], coeff: BigInt) -> Self {
        assert_eq!(exps.len(), alphabet.len(), "exponent vector length");
        let mut p = Self::zero(alphabet);
        if !coeff.is_zero() {
            p.terms.insert(Exps::from_slice(exps), coeff);
        }
        p
    }

    /// The symbol `name` raised to the power `e`.
    pub fn symbol_pow(alphabet: &Arc<Alphabet>, name: &str, e: i32) -> Result<Self> {
        let idx = alphabet
            .index(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
        let mut exps = vec![0; alphabet.len()];
        exps[idx] = e;
        Ok(Self::monomial(alphabet, &exps, BigInt::one()))
    }

    pub fn symbol(alphabet: &Arc<Alphabet>, name: &str) -> Result<Self> {
        Self::symbol_pow(alphabet, name, 1)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    /// Returns the integer value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// If `self = ±s^e` returns `(e, ±1)`.
    pub fn as_unit(&self) -> Option<(Exps, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if c.is_one() {
            Some((e.clone(), 1))
        } else if (-c).is_one() {
            Some((e.clone(), -1))
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_unit().is_some()
    }

    /// Multiplicative inverse of a signed monomial.
    pub fn inverse(&self) -> Result<Self> {
        let (e, s) = self
            .as_unit()
            .ok_or_else(|| Error::NotUnit(self.to_string()))?;
        let neg: Vec<i32> = e.iter().map(|x| -x).collect();
        Ok(Self::monomial(&self.alphabet, &neg, BigInt::from(s)))
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, k: i32) -> Result<Self> {
        if k < 0 {
            return self.inverse()?.pow(-k);
        }
        if let Some((e, s)) = self.as_unit() {
            let exps: Vec<i32> = e.iter().map(|x| x * k).collect();
            let sign = if s < 0 && k % 2 != 0 { -1 } else { 1 };
            return Ok(Self::monomial(&self.alphabet, &exps, BigInt::from(sign)));
        }
        let mut acc = Self::one(&self.alphabet);
        for _ in 0..k {
            acc = &acc * self;
        }
        Ok(acc)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_alphabet(&self.alphabet, &other.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            add_term(&mut out.terms, e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exps = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                add_term(&mut terms, e, ca * cb);
            }
        }
        Ok(ParamPoly {
            alphabet: self.alphabet.clone(),
            terms,
        })
    }

    /// In-place addition; panics on alphabet mismatch.
    pub fn add_assign_ref(&mut self, other: &Self) {
        assert!(
            same_alphabet(&self.alphabet, &other.alphabet),
            "parameter alphabet mismatch"
        );
        for (e, c) in &other.terms {
            add_term(&mut self.terms, e.clone(), c.clone());
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(&self.alphabet);
        }
        let k = BigInt::from(k);
        ParamPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * &k)).collect(),
        }
    }

    /// Multiplication by the monomial `s^e`.
    pub fn shift(&self, e: &[i32]) -> Self {
        ParamPoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    fn leading(&self) -> Option<(&Exps, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn exponent_bounds(&self) -> (Vec<i32>, Vec<i32>) {
        let k = self.alphabet.len();
        let mut lo = vec![i32::MAX; k];
        let mut hi = vec![i32::MIN; k];
        for e in self.terms.keys() {
            for i in 0..k {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    /// Exact division: returns `q` with `q · den = self`, or an error
    /// carrying the residue when the division is not exact.
    ///
    /// Leading-term division in lexicographic order; candidate quotient
    /// exponents are confined to the box allowed by the Newton polytopes,
    /// which bounds the loop in the inexact case.
    pub fn exact_divide(&self, den: &Self) -> Result<Self> {
        self.check(den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut q = Self::zero(&self.alphabet);
        if self.is_zero() {
            return Ok(q);
        }
        let (nlo, nhi) = self.exponent_bounds();
        let (dlo, dhi) = den.exponent_bounds();
        let lo: Vec<i32> = nlo.iter().zip(&dlo).map(|(a, b)| a - b).collect();
        let hi: Vec<i32> = nhi.iter().zip(&dhi).map(|(a, b)| a - b).collect();
        let (de, dc) = {
            let (e, c) = den.leading().unwrap();
            (e.clone(), c.clone())
        };
        let mut r = self.clone();
        while let Some((re, rc)) = r.leading() {
            let qe: Vec<i32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let in_box = qe
                .iter()
                .enumerate()
                .all(|(i, &x)| lo[i] <= x && x <= hi[i]);
            let (qc, rem) = rc.div_rem(&dc);
            if !in_box || !rem.is_zero() {
                return Err(Error::InexactDivision(r.to_string()));
            }
            let m = Self::monomial(&self.alphabet, &qe, qc);
            r = r.try_sub(&m.try_mul(den)?)?;
            q.add_assign_ref(&m);
        }
        Ok(q)
    }

    /// Applies the ring homomorphism sending each symbol named in `map` to
    /// its image (in the `target` alphabet); unmapped symbols are renamed
    /// into `target` by name.
    pub fn specialize(
        &self,
        target: &Arc<Alphabet>,
        map: &BTreeMap<String, ParamPoly>,
    ) -> Result<Self> {
        for img in map.values() {
            if !same_alphabet(img.alphabet(), target) {
                return Err(Error::AlphabetMismatch);
            }
        }
        let k = self.alphabet.len();
        let mut used_neg = vec![false; k];
        let mut used = vec![false; k];
        for e in self.terms.keys() {
            for i in 0..k {
                used[i] |= e[i] != 0;
                used_neg[i] |= e[i] < 0;
            }
        }
        let mut images: Vec<Option<(ParamPoly, Option<ParamPoly>)>> = vec![None; k];
        for i in 0..k {
            if !used[i] {
                continue;
            }
            let name = &self.alphabet.names[i];
            let img = match map.get(name) {
                Some(p) => p.clone(),
                None => ParamPoly::symbol(target, name)?,
            };
            let inv = if used_neg[i] {
                Some(
                    img.inverse()
                        .map_err(|_| Error::NonUnitImage(name.clone()))?,
                )
            } else {
                None
            };
            images[i] = Some((img, inv));
        }
        let mut out = ParamPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = ParamPoly::monomial(target, &vec![0; target.len()], c.clone());
            for i in 0..k {
                if e[i] == 0 {
                    continue;
                }
                let (img, inv) = images[i].as_ref().unwrap();
                let factor = if e[i] > 0 {
                    img.pow(e[i])?
                } else {
                    inv.as_ref().unwrap().pow(-e[i])?
                };
                term = term.try_mul(&factor)?;
            }
            out.add_assign_ref(&term);
        }
        Ok(out)
    }

    /// JSON form: a list of `{exponents, coeff}` objects in canonical order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!({"exponents": e.to_vec(), "coeff": c.to_string()}))
                .collect(),
        )
    }

    pub fn from_json(alphabet: &Arc<Alphabet>, v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Json("expected an array of terms".into()))?;
        let mut p = ParamPoly::zero(alphabet);
        for t in arr {
            let exps = t
                .get("exponents")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Json("term without `exponents`".into()))?;
            let exps: Vec<i32> = exps
                .iter()
                .map(|x| {
                    x.as_i64()
                        .and_then(|x| i32::try_from(x).ok())
                        .ok_or_else(|| Error::Json("non-integer exponent".into()))
                })
                .collect::<Result<_>>()?;
            if exps.len() != alphabet.len() {
                return Err(Error::AlphabetMismatch);
            }
            let coeff: BigInt = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Json("term without `coeff`".into()))?
                .parse()
                .map_err(|_| Error::Json("coefficient is not a decimal integer".into()))?;
            p.add_assign_ref(&ParamPoly::monomial(alphabet, &exps, coeff));
        }
        Ok(p)
    }

    /// Parses the canonical text form, e.g. `-t^-1 + 2*q^2*g1`.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        Parser::new(alphabet, text).parse()
    }
}

fn add_term(terms: &mut BTreeMap<Exps, BigInt>, e: Exps, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(e) {
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

impl PartialEq for ParamPoly {
    fn eq(&self, other: &Self) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet) && self.terms == other.terms
    }
}

impl Eq for ParamPoly {}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| {
                    let name = &self.alphabet.names[i];
                    if x == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{x}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    alphabet: &'a Arc<Alphabet>,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(alphabet: &'a Arc<Alphabet>, text: &str) -> Self {
        Parser {
            alphabet,
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {}", self.pos))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().unwrap())
    }

    fn signed_small(&mut self) -> Result<i32> {
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let v = self.integer()?;
        let v: i32 = i32::try_from(&v).map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> Result<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected symbol"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn factor(&mut self, exps: &mut [i32]) -> Result<()> {
        let name = self.ident()?;
        let idx = self
            .alphabet
            .index(&name)
            .ok_or(Error::UnknownSymbol(name))?;
        let e = if self.peek() == Some('^') {
            self.pos += 1;
            self.signed_small()?
        } else {
            1
        };
        exps[idx] += e;
        Ok(())
    }

    fn term(&mut self) -> Result<ParamPoly> {
        let mut exps = vec![0; self.alphabet.len()];
        let mut coeff = BigInt::one();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.integer()?;
        } else {
            self.factor(&mut exps)?;
        }
        while self.peek() == Some('*') {
            self.pos += 1;
            if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                coeff *= self.integer()?;
            } else {
                self.factor(&mut exps)?;
            }
        }
        Ok(ParamPoly::monomial(self.alphabet, &exps, coeff))
    }

    fn parse(mut self) -> Result<ParamPoly> {
        let mut out = ParamPoly::zero(self.alphabet);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if !first => break,
                Some('+') if !first => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => return Err(self.err("expected `+` or `-`")),
            };
            first = false;
            let t = self.term()?;
            out.add_assign_ref(&t.scale_int(sign));
        }
        Ok(out)
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $try:ident) => {
        impl<'a, 'b> $imp<&'b ParamPoly> for &'a ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: &'b ParamPoly) -> ParamPoly {
                self.$try(rhs).expect("parameter alphabet mismatch")
            }
        }
        impl $imp<ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $imp<&'b ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: &'b ParamPoly) -> ParamPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $imp<ParamPoly> for &'a ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: ParamPoly) -> ParamPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alph() -> Arc<Alphabet> {
        Alphabet::new(&["t", "q", "g1"]).unwrap()
    }

    fn p(s: &str) -> ParamPoly {
        ParamPoly::parse(&alph(), s).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p("t + 1") + p("t - 1"), p("2*t"));
        assert_eq!(p("t") * p("t^-1"), p("1"));
        assert_eq!((p("t") - p("t^-1")) * p("t"), p("t^2 - 1"));
    }

    #[test]
    fn divide_examples() {
        assert_eq!(p("t^2 - 1").exact_divide(&p("t - 1")).unwrap(), p("t + 1"));
        assert!(matches!(
            p("t^2 - 1").exact_divide(&p("t + 2")),
            Err(Error::InexactDivision(_))
        ));
        assert_eq!(
            p("t^3 - t^-1").exact_divide(&p("t - t^-1")).unwrap(),
            p("t^2 + 1")
        );
        assert_eq!(p("1").exact_divide(&p("0")), Err(Error::DivisionByZero));
    }

    #[test]
    fn specialize_examples() {
        let a = Alphabet::new(&["tl", "ts", "q"]).unwrap();
        let target = Alphabet::new(&["q"]).unwrap();
        let mut map = BTreeMap::new();
        map.insert("tl".to_string(), ParamPoly::symbol(&target, "q").unwrap());
        let tl = ParamPoly::symbol(&a, "tl").unwrap();
        assert_eq!(
            tl.specialize(&target, &map).unwrap(),
            ParamPoly::symbol(&target, "q").unwrap()
        );

        let b = Alphabet::new(&["t", "g1"]).unwrap();
        let g = ParamPoly::symbol(&b, "g1").unwrap();
        let mut map = BTreeMap::new();
        map.insert("g1".to_string(), -ParamPoly::symbol_pow(&b, "t", -1).unwrap());
        assert_eq!(
            (&g * &g).specialize(&b, &map).unwrap(),
            ParamPoly::symbol_pow(&b, "t", -2).unwrap()
        );

        let t_inv = ParamPoly::symbol_pow(&b, "t", -1).unwrap();
        let mut map = BTreeMap::new();
        map.insert("t".to_string(), ParamPoly::parse(&b, "t + 1").unwrap());
        assert_eq!(
            t_inv.specialize(&b, &map),
            Err(Error::NonUnitImage("t".into()))
        );
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let a = Alphabet::new(&["t"]).unwrap();
        let b = Alphabet::new(&["q"]).unwrap();
        let x = ParamPoly::one(&a);
        let y = ParamPoly::one(&b);
        assert_eq!(x.try_add(&y), Err(Error::AlphabetMismatch));
        assert!(Alphabet::new(&["t", "t"]).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!(p("t - t^-1").to_string(), "-t^-1 + t");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-3*q^2*g1 + 4").to_string(), "4 - 3*q^2*g1");
        assert_eq!(p("2*t*t").to_string(), "2*t^2");
        assert!(ParamPoly::parse(&alph(), "t +").is_err());
        assert!(ParamPoly::parse(&alph(), "x").is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = p("-t^-1 + 5*q*g1^2");
        assert_eq!(ParamPoly::from_json(&alph(), &x.to_json()).unwrap(), x);
    }

    #[test]
    fn units_and_powers() {
        assert_eq!(p("-t^2").inverse().unwrap(), p("-t^-2"));
        assert!(p("t + 1").inverse().is_err());
        assert_eq!(p("-t").pow(3).unwrap(), p("-t^3"));
        assert_eq!(p("t + 1").pow(2).unwrap(), p("t^2 + 2*t + 1"));
        assert_eq!(p("-t").pow(-2).unwrap(), p("t^-2"));
    }
}
