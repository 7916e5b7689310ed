//! Reduced irreducible root systems (and `GL_r`), their Weyl groups,
//! lattices, alcove combinatorics and metaplectic root data.
//!
//! Non-`GL` types are realized in the basis of fundamental coweights, so a
//! simple root `α_i` is the `i`-th coordinate functional and `P∨ = ℤ^r`.
//! `GL_r` is realized on `ℝ^r` with `α_j(y) = y_j − y_{j+1}` and
//! `α_j∨ = e_j − e_{j+1}`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = Ratio<i64>;

/// Largest supported Weyl group order.
pub const MAX_WEYL_ORDER: usize = 1152;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanKind {
    GL,
    A,
    B,
    C,
    D,
    G2,
}

impl CartanKind {
    pub fn parse(s: &str) -> Result<CartanKind> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(CartanKind::GL),
            "A" => Ok(CartanKind::A),
            "B" => Ok(CartanKind::B),
            "C" => Ok(CartanKind::C),
            "D" => Ok(CartanKind::D),
            "G2" | "G" => Ok(CartanKind::G2),
            other => Err(Error::UnsupportedRootSystem(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CartanKind::GL => "GL",
            CartanKind::A => "A",
            CartanKind::B => "B",
            CartanKind::C => "C",
            CartanKind::D => "D",
            CartanKind::G2 => "G2",
        }
    }
}

/// A positive root together with its coroot.
#[derive(Clone, Debug)]
pub struct Root {
    /// Coefficients in the basis of simple roots.
    pub simple: Vec<i64>,
    /// The root as a functional on `E`.
    pub row: Vec<i64>,
    /// The coroot as a vector of `E`.
    pub coroot: Vec<i64>,
    /// Index of the W-orbit of the root.
    pub orbit: usize,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }
}

/// An element of the Weyl group, as an index into the enumeration held by
/// its [`RootSystem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(u32);

impl WeylElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

struct WeylData {
    mats: Vec<Vec<i64>>,
    words: Vec<Vec<usize>>,
    inversions: Vec<Vec<usize>>,
    lookup: HashMap<Vec<i64>, u32>,
    rmul: Vec<Vec<u32>>,
    lmul: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    longest: u32,
}

pub struct RootSystem {
    kind: CartanKind,
    rank: usize,
    dim: usize,
    rows: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rat>>,
    positive: Vec<Root>,
    coroot_index: HashMap<Vec<i64>, (usize, bool)>,
    highest: usize,
    orbit_of_simple: Vec<usize>,
    orbit_labels: Vec<&'static str>,
    weyl: WeylData,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.label())
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cartan_matrix(kind: CartanKind, rank: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |c: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto.saturating_sub(1) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    };
    match kind {
        CartanKind::GL | CartanKind::A => chain(&mut c, rank),
        CartanKind::B => {
            chain(&mut c, rank);
            c[rank - 2][rank - 1] = -2;
            c[rank - 1][rank - 2] = -1;
        }
        CartanKind::C => {
            chain(&mut c, rank);
            c[rank - 2][rank - 1] = -1;
            c[rank - 1][rank - 2] = -2;
        }
        CartanKind::D => {
            chain(&mut c, rank - 1);
            c[rank - 3][rank - 1] = -1;
            c[rank - 1][rank - 3] = -1;
        }
        CartanKind::G2 => {
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

fn invert_rational(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rat> = row.iter().map(|&x| Rat::from_integer(x)).collect();
            r.extend((0..n).map(|j| Rat::from_integer((i == j) as i64)));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl RootSystem {
    /// Builds the root system of the given kind.  For `GL` the `rank`
    /// argument is the size `r` of the matrices (so the semisimple rank is
    /// `r − 1`); for the other kinds it is the number of simple roots.
    pub fn new(kind: CartanKind, rank: usize) -> Result<RootSystem> {
        let unsupported = || Error::UnsupportedRootSystem(format!("{}{}", kind.name(), rank));
        let (simple_count, dim) = match kind {
            CartanKind::GL if (2..=6).contains(&rank) => (rank - 1, rank),
            CartanKind::A if (1..=4).contains(&rank) => (rank, rank),
            CartanKind::B | CartanKind::C if (2..=4).contains(&rank) => (rank, rank),
            CartanKind::D if (3..=4).contains(&rank) => (rank, rank),
            CartanKind::G2 if rank == 2 => (2, 2),
            _ => return Err(unsupported()),
        };
        let cartan = cartan_matrix(kind, simple_count);
        let (rows, coroots) = if kind == CartanKind::GL {
            let v = |j: usize| {
                let mut e = vec![0i64; dim];
                e[j] = 1;
                e[j + 1] = -1;
                e
            };
            let r: Vec<Vec<i64>> = (0..simple_count).map(v).collect();
            (r.clone(), r)
        } else {
            let rows = (0..dim)
                .map(|i| (0..dim).map(|j| (i == j) as i64).collect())
                .collect();
            let coroots = (0..dim)
                .map(|j| (0..dim).map(|i| cartan[i][j]).collect())
                .collect();
            (rows, coroots)
        };

        // Orbits of simple roots: connected through simply-laced edges.
        let mut orbit_of_simple: Vec<usize> = (0..simple_count).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..simple_count {
                for j in 0..simple_count {
                    if i != j && cartan[i][j] * cartan[j][i] == 1 {
                        let m = orbit_of_simple[i].min(orbit_of_simple[j]);
                        if orbit_of_simple[i] != m || orbit_of_simple[j] != m {
                            orbit_of_simple[i] = m;
                            orbit_of_simple[j] = m;
                            changed = true;
                        }
                    }
                }
            }
        }
        let distinct: BTreeSet<usize> = orbit_of_simple.iter().copied().collect();
        let relabel: HashMap<usize, usize> =
            distinct.iter().enumerate().map(|(k, &o)| (o, k)).collect();
        for o in orbit_of_simple.iter_mut() {
            *o = relabel[o];
        }
        let orbit_labels = if distinct.len() == 1 {
            vec![""]
        } else {
            // A simple root α_j is short iff some neighbour α_i has |α_i(α_j∨)| > 1.
            let mut short = vec![false; 2];
            for i in 0..simple_count {
                for j in 0..simple_count {
                    if i != j && cartan[i][j].abs() > 1 {
                        short[orbit_of_simple[j]] = true;
                    }
                }
            }
            short.iter().map(|&s| if s { "s" } else { "l" }).collect()
        };

        let mut rs = RootSystem {
            kind,
            rank: simple_count,
            dim,
            cartan_inv: invert_rational(&cartan),
            cartan,
            rows,
            coroots,
            positive: Vec::new(),
            coroot_index: HashMap::new(),
            highest: 0,
            orbit_of_simple,
            orbit_labels,
            weyl: WeylData {
                mats: Vec::new(),
                words: Vec::new(),
                inversions: Vec::new(),
                lookup: HashMap::new(),
                rmul: Vec::new(),
                lmul: Vec::new(),
                inverse: Vec::new(),
                longest: 0,
            },
        };
        rs.build_roots();
        rs.build_weyl()?;
        Ok(rs)
    }

    fn build_roots(&mut self) {
        let r = self.rank;
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..r {
            let mut simple = vec![0; r];
            simple[i] = 1;
            let root = Root {
                simple: simple.clone(),
                row: self.rows[i].clone(),
                coroot: self.coroots[i].clone(),
                orbit: self.orbit_of_simple[i],
            };
            seen.insert(simple, self.positive.len());
            self.positive.push(root);
            queue.push_back(self.positive.len() - 1);
        }
        while let Some(k) = queue.pop_front() {
            for j in 0..r {
                let b = self.positive[k].clone();
                let pair = dot(&b.row, &self.coroots[j]);
                if pair == 0 {
                    continue;
                }
                let mut simple = b.simple.clone();
                simple[j] -= pair;
                if simple.iter().any(|&x| x < 0) || seen.contains_key(&simple) {
                    continue;
                }
                let row: Vec<i64> = b
                    .row
                    .iter()
                    .zip(&self.rows[j])
                    .map(|(x, y)| x - pair * y)
                    .collect();
                let cpair = dot(&self.rows[j], &b.coroot);
                let coroot: Vec<i64> = b
                    .coroot
                    .iter()
                    .zip(&self.coroots[j])
                    .map(|(x, y)| x - cpair * y)
                    .collect();
                seen.insert(simple.clone(), self.positive.len());
                self.positive.push(Root {
                    simple,
                    row,
                    coroot,
                    orbit: b.orbit,
                });
                queue.push_back(self.positive.len() - 1);
            }
        }
        // Sort by height then simple coefficients for a canonical order.
        self.positive
            .sort_by(|a, b| (a.height(), &a.simple).cmp(&(b.height(), &b.simple)));
        for (k, root) in self.positive.iter().enumerate() {
            self.coroot_index.insert(root.coroot.clone(), (k, true));
            let neg: Vec<i64> = root.coroot.iter().map(|x| -x).collect();
            self.coroot_index.insert(neg, (k, false));
        }
        self.highest = self.positive.len() - 1;
    }

    fn reflection_matrix(&self, j: usize) -> Vec<i64> {
        let d = self.dim;
        let mut m = vec![0i64; d * d];
        for a in 0..d {
            for b in 0..d {
                m[a * d + b] = (a == b) as i64 - self.coroots[j][a] * self.rows[j][b];
            }
        }
        m
    }

    fn mat_mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let d = self.dim;
        let mut c = vec![0i64; d * d];
        for i in 0..d {
            for k in 0..d {
                let x = a[i * d + k];
                if x == 0 {
                    continue;
                }
                for j in 0..d {
                    c[i * d + j] += x * b[k * d + j];
                }
            }
        }
        c
    }

    fn build_weyl(&mut self) -> Result<()> {
        let d = self.dim;
        let r = self.rank;
        let gens: Vec<Vec<i64>> = (0..r).map(|j| self.reflection_matrix(j)).collect();
        let ident: Vec<i64> = (0..d * d).map(|k| (k / d == k % d) as i64).collect();
        let mut mats = vec![ident.clone()];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut lookup = HashMap::new();
        lookup.insert(ident, 0u32);
        let mut level = vec![0usize];
        while !level.is_empty() {
            let mut next = Vec::new();
            for &w in &level {
                for (i, g) in gens.iter().enumerate() {
                    let m = self.mat_mul(&mats[w], g);
                    if lookup.contains_key(&m) {
                        continue;
                    }
                    if mats.len() >= MAX_WEYL_ORDER {
                        return Err(Error::UnsupportedRootSystem(format!(
                            "Weyl group of {} exceeds {MAX_WEYL_ORDER} elements",
                            self.label()
                        )));
                    }
                    let mut word = words[w].clone();
                    word.push(i);
                    lookup.insert(m.clone(), mats.len() as u32);
                    mats.push(m);
                    words.push(word);
                    next.push(mats.len() - 1);
                }
            }
            level = next;
        }
        let n = mats.len();
        let mut rmul = vec![vec![0u32; n]; r];
        let mut lmul = vec![vec![0u32; n]; r];
        for i in 0..r {
            for w in 0..n {
                rmul[i][w] = lookup[&self.mat_mul(&mats[w], &gens[i])];
                lmul[i][w] = lookup[&self.mat_mul(&gens[i], &mats[w])];
            }
        }
        let mut inverse = vec![0u32; n];
        for w in 0..n {
            let mut x = 0u32;
            for &i in words[w].iter().rev() {
                x = rmul[i][x as usize];
            }
            inverse[w] = x;
        }
        let longest = (0..n).max_by_key(|&w| words[w].len()).unwrap() as u32;
        self.weyl = WeylData {
            mats,
            words,
            inversions: Vec::new(),
            lookup,
            rmul,
            lmul,
            inverse,
            longest,
        };
        let inversions = (0..n)
            .map(|w| {
                let m = &self.weyl.mats[w];
                (0..self.positive.len())
                    .filter(|&k| {
                        let img = self.mat_vec(m, &self.positive[k].coroot);
                        !self.coroot_index[&img].1
                    })
                    .collect()
            })
            .collect();
        self.weyl.inversions = inversions;
        Ok(())
    }

    fn mat_vec(&self, m: &[i64], v: &[i64]) -> Vec<i64> {
        let d = self.dim;
        (0..d).map(|i| dot(&m[i * d..(i + 1) * d], v)).collect()
    }

    // ----- basic data -------------------------------------------------

    pub fn kind(&self) -> CartanKind {
        self.kind
    }

    /// The rank parameter the system was built with (`r` for `GL_r`).
    pub fn rank_param(&self) -> usize {
        if self.kind == CartanKind::GL {
            self.dim
        } else {
            self.rank
        }
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_gl(&self) -> bool {
        self.kind == CartanKind::GL
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind.name(), self.rank_param())
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_row(&self, i: usize) -> &[i64] {
        &self.rows[i]
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive[self.highest]
    }

    pub fn num_orbits(&self) -> usize {
        self.orbit_labels.len()
    }

    /// Orbit suffixes: `""` for a single orbit, otherwise `"s"`/`"l"`.
    pub fn orbit_label(&self, orbit: usize) -> &'static str {
        self.orbit_labels[orbit]
    }

    pub fn orbit_of_simple(&self, i: usize) -> usize {
        self.orbit_of_simple[i]
    }

    /// Index of the positive root `±α` with coroot `±v`, and whether the
    /// given vector is the positive one.
    pub fn root_by_coroot(&self, v: &[i64]) -> Option<(usize, bool)> {
        self.coroot_index.get(v).copied()
    }

    /// The fundamental coweight `ϖ_i∨`.
    pub fn fundamental_coweight(&self, i: usize) -> Vec<i64> {
        if self.is_gl() {
            (0..self.dim).map(|k| (k <= i) as i64).collect()
        } else {
            (0..self.dim).map(|k| (k == i) as i64).collect()
        }
    }

    /// The integral Weyl vector used by the Whittaker operators: `Σϖ_i∨`
    /// for the non-`GL` types and `ρ_GL = (r−1, …, 0)` for `GL_r`.
    pub fn rho(&self) -> Vec<i64> {
        if self.is_gl() {
            (0..self.dim).rev().map(|k| k as i64).collect()
        } else {
            vec![1; self.dim]
        }
    }

    /// `α(y)` for a functional given as a row.
    pub fn pair_rat(row: &[i64], y: &[Rat]) -> Rat {
        row.iter()
            .zip(y)
            .fold(Rat::zero(), |acc, (a, b)| acc + *b * Rat::from_integer(*a))
    }

    pub fn pair_int(row: &[i64], y: &[i64]) -> i64 {
        dot(row, y)
    }

    // ----- Weyl group -------------------------------------------------

    pub fn weyl_order(&self) -> usize {
        self.weyl.mats.len()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement(0)
    }

    pub fn longest(&self) -> WeylElement {
        WeylElement(self.weyl.longest)
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        (0..self.weyl.mats.len() as u32).map(WeylElement)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        WeylElement(self.weyl.rmul[i][0])
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.weyl.words[w.index()].len()
    }

    /// The canonical (lexicographically least) reduced word, 0-based.
    pub fn word(&self, w: WeylElement) -> &[usize] {
        &self.weyl.words[w.index()]
    }

    pub fn matrix(&self, w: WeylElement) -> &[i64] {
        &self.weyl.mats[w.index()]
    }

    pub fn from_matrix(&self, m: &[i64]) -> Option<WeylElement> {
        self.weyl.lookup.get(m).map(|&k| WeylElement(k))
    }

    /// The element `s_{j_1} ⋯ s_{j_k}` for a 0-based word (not necessarily
    /// reduced).
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = 0u32;
        for &i in word {
            if i >= self.rank {
                return Err(Error::Precondition(format!(
                    "generator index {} out of range 1..={}",
                    i + 1,
                    self.rank
                )));
            }
            w = self.weyl.rmul[i][w as usize];
        }
        Ok(WeylElement(w))
    }

    pub fn mul(&self, a: WeylElement, b: WeylElement) -> WeylElement {
        let mut x = a.0;
        for &i in self.word(b) {
            x = self.weyl.rmul[i][x as usize];
        }
        WeylElement(x)
    }

    pub fn inv(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.weyl.inverse[w.index()])
    }

    /// `s_i · w`.
    pub fn lmul_s(&self, i: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.weyl.lmul[i][w.index()])
    }

    /// `w · s_i`.
    pub fn rmul_s(&self, w: WeylElement, i: usize) -> WeylElement {
        WeylElement(self.weyl.rmul[i][w.index()])
    }

    /// Indices (into [`Self::positive_roots`]) of `Π(w) = Φ⁺ ∩ w⁻¹Φ⁻`.
    pub fn inversion_set(&self, w: WeylElement) -> &[usize] {
        &self.weyl.inversions[w.index()]
    }

    pub fn act_int(&self, w: WeylElement, v: &[i64]) -> Vec<i64> {
        self.mat_vec(self.matrix(w), v)
    }

    pub fn act_rat(&self, w: WeylElement, v: &[Rat]) -> Vec<Rat> {
        let m = self.matrix(w);
        let d = self.dim;
        (0..d)
            .map(|i| {
                (0..d).fold(Rat::zero(), |acc, j| {
                    acc + v[j] * Rat::from_integer(m[i * d + j])
                })
            })
            .collect()
    }

    /// The root `wα` for a positive root index, as (index, is_positive).
    pub fn act_on_root(&self, w: WeylElement, k: usize) -> (usize, bool) {
        let img = self.act_int(w, &self.positive[k].coroot);
        self.coroot_index[&img]
    }

    /// `w₀(i)`: the index with `w₀α_i = −α_{w₀(i)}`.
    pub fn w0_index(&self, i: usize) -> usize {
        let (k, pos) = self.act_on_root(self.longest(), self.simple_root_index(i));
        debug_assert!(!pos);
        (0..self.rank)
            .find(|&j| self.simple_root_index(j) == k)
            .expect("w0 maps simple roots to negative simple roots")
    }

    /// Index of the simple root `α_i` in the positive-root list.
    pub fn simple_root_index(&self, i: usize) -> usize {
        self.coroot_index[&self.coroots[i]].0
    }

    /// Recomputes `Π(w)` from a reduced word via `b_m = s_{j_ℓ}⋯s_{j_{m+1}}(α_{j_m})`.
    pub fn inversion_set_from_word(&self, word: &[usize]) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for m in 0..word.len() {
            let mut coroot = self.coroots[word[m]].clone();
            for &j in word[m + 1..].iter() {
                let p = dot(&self.rows[j], &coroot);
                for (x, y) in coroot.iter_mut().zip(&self.coroots[j]) {
                    *x -= p * y;
                }
            }
            let (k, pos) = self.coroot_index[&coroot];
            assert!(pos, "non-reduced word");
            out.insert(k);
        }
        out
    }

    // ----- parabolic subgroups -----------------------------------------

    pub fn check_subset(&self, j: &[usize]) -> Result<()> {
        match j.iter().find(|&&i| i >= self.rank) {
            Some(i) => Err(Error::Precondition(format!(
                "index {} outside 1..={}",
                i + 1,
                self.rank
            ))),
            None => Ok(()),
        }
    }

    /// The parabolic subgroup `W_J`, ordered by length then index.
    pub fn parabolic(&self, j: &[usize]) -> Vec<WeylElement> {
        let mut seen = BTreeSet::new();
        seen.insert(0u32);
        let mut queue = VecDeque::from([0u32]);
        while let Some(w) = queue.pop_front() {
            for &i in j {
                let x = self.weyl.rmul[i][w as usize];
                if seen.insert(x) {
                    queue.push_back(x);
                }
            }
        }
        let mut out: Vec<WeylElement> = seen.into_iter().map(WeylElement).collect();
        out.sort_by_key(|&w| (self.length(w), w));
        out
    }

    /// Minimal-length coset representatives `W^J` of `W/W_J`.
    pub fn min_coset_reps(&self, j: &[usize]) -> Vec<WeylElement> {
        self.elements()
            .filter(|&w| self.is_min_coset_rep(w, j))
            .collect()
    }

    /// `w ∈ W^J`, i.e. `wα_j ∈ Φ⁺` for all `j ∈ J`.
    pub fn is_min_coset_rep(&self, w: WeylElement, j: &[usize]) -> bool {
        j.iter()
            .all(|&i| self.length(self.rmul_s(w, i)) > self.length(w))
    }

    /// `w = w^J · w_J` with `w^J ∈ W^J`, `w_J ∈ W_J`.
    pub fn coset_decompose(&self, w: WeylElement, j: &[usize]) -> (WeylElement, WeylElement) {
        let mut x = w;
        loop {
            match j
                .iter()
                .find(|&&i| self.length(self.rmul_s(x, i)) < self.length(x))
            {
                Some(&i) => x = self.rmul_s(x, i),
                None => break,
            }
        }
        (x, self.mul(self.inv(x), w))
    }

    /// Longest element of `W_J`.
    pub fn longest_in(&self, j: &[usize]) -> WeylElement {
        *self
            .parabolic(j)
            .iter()
            .max_by_key(|&&w| self.length(w))
            .unwrap()
    }

    // ----- alcoves ----------------------------------------------------

    fn check_dim<T>(&self, v: &[T]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.dim,
                got: v.len(),
            })
        }
    }

    /// Whether `c` lies in the closed (scaled) fundamental alcove
    /// `{α_i(c) ≥ 0, φ(c) ≤ bound}`.
    pub fn in_closed_alcove(&self, c: &[Rat], bound: i64) -> bool {
        (0..self.rank).all(|i| !Self::pair_rat(&self.rows[i], c).is_negative())
            && Self::pair_rat(&self.highest_root().row, c) <= Rat::from_integer(bound)
    }

    /// `J_c = {j : s_j c = c}` for `c` in the closed fundamental alcove.
    pub fn stabilizer_j(&self, c: &[Rat]) -> Result<Vec<usize>> {
        self.stabilizer_j_scaled(c, 1)
    }

    /// `J_c` for `c` in the closed alcove scaled by `bound` (the metaplectic
    /// alcove uses `bound = m(φ)`).
    pub fn stabilizer_j_scaled(&self, c: &[Rat], bound: i64) -> Result<Vec<usize>> {
        self.check_dim(c)?;
        if !self.in_closed_alcove(c, bound) {
            return Err(Error::Precondition(format!(
                "c = {} is outside the closed fundamental alcove",
                fmt_rat_vec(c)
            )));
        }
        Ok(self.fixing_indices(c))
    }

    /// Indices `j` with `α_j(y) = 0`.
    pub fn fixing_indices(&self, y: &[Rat]) -> Vec<usize> {
        (0..self.rank)
            .filter(|&i| Self::pair_rat(&self.rows[i], y).is_zero())
            .collect()
    }

    /// Whether `c ∈ C⁰_Λ` (or `C⁰_{Λ^m}` for a metaplectic lattice).
    ///
    /// Checks `c` in the closed (scaled) alcove, `c ∈` the ambient lattice
    /// for the metaplectic case, and the defining stabilizer condition
    /// `W̃_{Λ,c} = W_c` directly: no `w` with `wc ≠ c` has `c − wc ∈ Λ`.
    pub fn is_in_c0(&self, c: &[Rat], lattice: &Lattice) -> Result<bool> {
        self.check_dim(c)?;
        lattice.validate(self)?;
        let bound = lattice.alcove_bound(self);
        if !self.in_closed_alcove(c, bound) {
            return Ok(false);
        }
        if let Some(base) = lattice.ambient() {
            if !base.contains(self, c) {
                return Ok(false);
            }
        }
        for w in self.elements() {
            let wc = self.act_rat(w, c);
            if wc != c {
                let diff: Vec<Rat> = c.iter().zip(&wc).map(|(a, b)| a - b).collect();
                if lattice.contains(self, &diff) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The `W`-dominant element of the orbit of `y` (`α_i ≥ 0`).
    pub fn dominant_rep(&self, y: &[Rat]) -> (Vec<Rat>, WeylElement) {
        // Returns (μ, u) with u μ = y.
        let mut x = y.to_vec();
        let mut u = self.identity();
        while let Some(i) =
            (0..self.rank).find(|&i| Self::pair_rat(&self.rows[i], &x).is_negative())
        {
            x = self.act_rat(self.simple_reflection(i), &x);
            u = self.rmul_s(u, i);
        }
        (x, u)
    }

    /// The antidominant element of the orbit of `y` (`α_i ≤ 0`).
    pub fn antidominant_rep(&self, y: &[Rat]) -> Vec<Rat> {
        let mut x = y.to_vec();
        while let Some(i) =
            (0..self.rank).find(|&i| Self::pair_rat(&self.rows[i], &x).is_positive())
        {
            x = self.act_rat(self.simple_reflection(i), &x);
        }
        x
    }

    /// Minimal-length `w` with `w·from = to`, if any.
    pub fn minimal_mover(&self, from: &[Rat], to: &[Rat]) -> Option<WeylElement> {
        self.elements()
            .filter(|&w| self.act_rat(w, from) == to)
            .min_by_key(|&w| (self.length(w), w))
    }

    /// `J`-dominance: for `λ` with `α_j(λ) ≥ 0` for `j ∈ J`,
    /// returns `(μ, ŵ)` with `μ` dominant, `λ = ŵ⁻¹μ` and `ŵ⁻¹ ∈ W^{J_μ}`;
    /// `None` when `λ` is not `J`-dominant.
    pub fn j_dominant_decompose(
        &self,
        lambda: &[i64],
        j: &[usize],
    ) -> Result<Option<(Vec<i64>, WeylElement)>> {
        self.check_dim(lambda)?;
        self.check_subset(j)?;
        if j.iter().any(|&i| dot(&self.rows[i], lambda) < 0) {
            return Ok(None);
        }
        let lr: Vec<Rat> = lambda.iter().map(|&x| Rat::from_integer(x)).collect();
        let (mu, _) = self.dominant_rep(&lr);
        let u = self
            .minimal_mover(&mu, &lr)
            .expect("dominant representative lies in the orbit");
        let mu: Vec<i64> = mu.iter().map(|x| x.to_integer()).collect();
        Ok(Some((mu, self.inv(u))))
    }

    // ----- lattices -----------------------------------------------------

    /// Coordinates of `v` in the basis of simple coroots (non-`GL` types).
    fn coroot_coordinates(&self, v: &[Rat]) -> Vec<Rat> {
        self.cartan_inv
            .iter()
            .map(|row| row.iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }
}

/// A lattice `Λ ⊂ E` satisfying `Q∨ ⊆ Λ`, `α(Λ) ⊆ ℤ`, or a metaplectic
/// sublattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lattice {
    /// The coroot lattice `Q∨`.
    CorootQ,
    /// The coweight lattice `P∨` (non-`GL` types).
    CoweightP,
    /// `ℤ^r` for `GL_r`.
    GlZ,
    /// `Λ^m = {λ ∈ base : m(α) | α(λ)}`; `m` is indexed by root orbit.
    Metaplectic { base: Box<Lattice>, m: Vec<i64> },
    /// `mℤ^r` for `GL_r`: the metaplectic lattice used for `GL` (see
    /// [`metaplectic_lattice`]).
    GlScaled(i64),
}

impl Lattice {
    pub fn parse(s: &str) -> Result<Lattice> {
        match s {
            "Q" | "Qv" | "coroot" => Ok(Lattice::CorootQ),
            "P" | "Pv" | "coweight" => Ok(Lattice::CoweightP),
            "Z" | "ZGL" => Ok(Lattice::GlZ),
            other => Err(Error::UnsupportedLattice(other.to_string())),
        }
    }

    /// The default ambient lattice: `ℤ^r` for `GL`, `P∨` otherwise.
    pub fn default_for(rs: &RootSystem) -> Lattice {
        if rs.is_gl() {
            Lattice::GlZ
        } else {
            Lattice::CoweightP
        }
    }

    pub fn tag(&self) -> String {
        match self {
            Lattice::CorootQ => "Q".into(),
            Lattice::CoweightP => "P".into(),
            Lattice::GlZ => "ZGL".into(),
            Lattice::Metaplectic { base, m } => format!("{}^m{:?}", base.tag(), m),
            Lattice::GlScaled(m) => format!("{m}ZGL"),
        }
    }

    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        let ok = match self {
            Lattice::CorootQ => true,
            Lattice::CoweightP => !rs.is_gl(),
            Lattice::GlZ | Lattice::GlScaled(_) => rs.is_gl(),
            Lattice::Metaplectic { base, m } => {
                base.validate(rs)?;
                m.len() == rs.num_orbits() && m.iter().all(|&x| x > 0)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedLattice(format!(
                "{} for {}",
                self.tag(),
                rs.label()
            )))
        }
    }

    /// For a metaplectic lattice, the ambient lattice `Λ`.
    pub fn ambient(&self) -> Option<&Lattice> {
        match self {
            Lattice::Metaplectic { base, .. } => Some(base),
            Lattice::GlScaled(_) => Some(&Lattice::GlZ),
            _ => None,
        }
    }

    /// Scale of the fundamental alcove attached to this lattice: `1` for
    /// ordinary lattices, `m(φ)` for metaplectic ones.
    pub fn alcove_bound(&self, rs: &RootSystem) -> i64 {
        match self {
            Lattice::Metaplectic { m, .. } => m[rs.highest_root().orbit],
            Lattice::GlScaled(m) => *m,
            _ => 1,
        }
    }

    pub fn contains(&self, rs: &RootSystem, v: &[Rat]) -> bool {
        if v.len() != rs.dim() || v.iter().any(|x| !x.is_integer()) {
            return false;
        }
        let iv: Vec<i64> = v.iter().map(|x| x.to_integer()).collect();
        self.contains_int(rs, &iv)
    }

    pub fn contains_int(&self, rs: &RootSystem, v: &[i64]) -> bool {
        match self {
            Lattice::CoweightP => true,
            Lattice::GlZ => true,
            Lattice::CorootQ => {
                if rs.is_gl() {
                    v.iter().sum::<i64>() == 0
                } else {
                    let r: Vec<Rat> = v.iter().map(|&x| Rat::from_integer(x)).collect();
                    rs.coroot_coordinates(&r).iter().all(|x| x.is_integer())
                }
            }
            Lattice::Metaplectic { base, m } => {
                base.contains_int(rs, v)
                    && rs
                        .positive_roots()
                        .iter()
                        .all(|a| dot(&a.row, v).is_multiple_of(&m[a.orbit]))
            }
            Lattice::GlScaled(m) => v.iter().all(|x| x.is_multiple_of(m)),
        }
    }
}

/// Metaplectic datum `(n, Q)`: degree and the values `Q(α∨)` per orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetaplecticDatum {
    pub n: i64,
    pub q_vals: Vec<i64>,
}

impl MetaplecticDatum {
    /// The datum with `Q(α∨) = 1` on every orbit.
    pub fn standard(rs: &RootSystem, n: i64) -> MetaplecticDatum {
        MetaplecticDatum {
            n,
            q_vals: vec![1; rs.num_orbits()],
        }
    }

    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        if self.n < 1 {
            return Err(Error::Precondition("metaplectic degree n must be ≥ 1".into()));
        }
        if self.q_vals.len() != rs.num_orbits() {
            return Err(Error::Precondition(format!(
                "expected {} values of Q(α∨), got {}",
                rs.num_orbits(),
                self.q_vals.len()
            )));
        }
        Ok(())
    }

    /// `m(α) = n / gcd(n, Q(α∨))` for the given orbit.
    pub fn m_of_orbit(&self, orbit: usize) -> i64 {
        self.n / self.n.gcd(&self.q_vals[orbit])
    }

    pub fn m_values(&self) -> Vec<i64> {
        (0..self.q_vals.len()).map(|o| self.m_of_orbit(o)).collect()
    }

    /// `B(λ, α∨) = Q(α∨)·α(λ)` for a positive root.
    pub fn b_pairing(&self, root: &Root, lambda: &[i64]) -> i64 {
        self.q_vals[root.orbit] * dot(&root.row, lambda)
    }

    /// Constant value of `m` if all orbits agree.
    pub fn constant_m(&self) -> Option<i64> {
        let ms = self.m_values();
        ms.iter().all(|&m| m == ms[0]).then(|| ms[0])
    }
}

/// Root-theoretic membership `λ ∈ Λ^m`: `m(α) | α(λ)` for every root.
pub fn metaplectic_lattice_membership(
    rs: &RootSystem,
    datum: &MetaplecticDatum,
    lambda: &[i64],
) -> bool {
    rs.positive_roots()
        .iter()
        .all(|a| dot(&a.row, lambda).is_multiple_of(&datum.m_of_orbit(a.orbit)))
}

/// The metaplectic lattice used for decompositions over `Λ^m`.
///
/// For `GL_r` with `Λ = ℤ^r` the root condition alone also admits central
/// directions such as `(1,…,1)`, which would make the basis `x^{wc}` of the
/// orbit modules linearly dependent; the lattice used is therefore
/// `mℤ^r = {λ : B(λ, μ) ∈ nℤ ∀μ ∈ ℤ^r}` (for constant `m`).  For the other
/// types the root-defined `Λ^m` is used as is.
pub fn metaplectic_lattice(
    rs: &RootSystem,
    base: &Lattice,
    datum: &MetaplecticDatum,
) -> Result<Lattice> {
    datum.validate(rs)?;
    base.validate(rs)?;
    if rs.is_gl() {
        if *base != Lattice::GlZ {
            return Err(Error::UnsupportedLattice(format!(
                "metaplectic lattice over {} for GL",
                base.tag()
            )));
        }
        Ok(Lattice::GlScaled(datum.m_of_orbit(0)))
    } else {
        Ok(Lattice::Metaplectic {
            base: Box::new(base.clone()),
            m: datum.m_values(),
        })
    }
}

pub fn rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| Rat::from_integer(x)).collect()
}

pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_rat_vec(v: &[Rat]) -> String {
    format!(
        "({})",
        v.iter().map(fmt_rat).collect::<Vec<_>>().join(",")
    )
}

/// Parses `"1/2,0,-3"` into a rational vector.
pub fn parse_rat_vec(s: &str) -> Result<Vec<Rat>> {
    s.split(',')
        .map(|t| parse_rat(t.trim()))
        .collect()
}

pub fn parse_rat(t: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("`{t}` is not an exact rational"));
    match t.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            Ok(Rat::new(a, b))
        }
        None => Ok(Rat::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Parses a 1-based generator word `"1,2,1"` into a 0-based word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let k: usize = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("`{t}` is not a generator index")))?;
            if k == 0 {
                return Err(Error::Parse("generator indices are 1-based".into()));
            }
            Ok(k - 1)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rat {
        Rat::new(a, b)
    }

    fn gl(n: usize) -> RootSystem {
        RootSystem::new(CartanKind::GL, n).unwrap()
    }

    #[test]
    fn build_examples() {
        let g2 = gl(2);
        assert_eq!(g2.dim(), 2);
        assert_eq!(g2.positive_roots().len(), 1);
        assert_eq!(g2.simple_row(0), &[1, -1]);
        assert_eq!(g2.simple_coroot(0), &[1, -1]);

        let a2 = RootSystem::new(CartanKind::A, 2).unwrap();
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.length(a2.longest()), 3);

        let g = RootSystem::new(CartanKind::G2, 2).unwrap();
        assert_eq!(g.positive_roots().len(), 6);
        assert_eq!(g.num_orbits(), 2);
        assert_eq!(g.weyl_order(), 12);

        for (kind, rank, order) in [
            (CartanKind::B, 2, 8),
            (CartanKind::C, 3, 48),
            (CartanKind::D, 4, 192),
            (CartanKind::B, 4, 384),
            (CartanKind::A, 4, 120),
            (CartanKind::GL, 4, 24),
        ] {
            let rs = RootSystem::new(kind, rank).unwrap();
            assert_eq!(rs.weyl_order(), order, "{}", rs.label());
            assert_eq!(rs.length(rs.longest()), rs.positive_roots().len());
        }
        assert!(RootSystem::new(CartanKind::G2, 3).is_err());
        assert!(RootSystem::new(CartanKind::A, 5).is_err());
    }

    #[test]
    fn cartan_reproduced() {
        for (kind, rank) in [(CartanKind::B, 3), (CartanKind::C, 3), (CartanKind::G2, 2)] {
            let rs = RootSystem::new(kind, rank).unwrap();
            for i in 0..rs.rank() {
                for j in 0..rs.rank() {
                    assert_eq!(
                        dot(rs.simple_row(i), rs.simple_coroot(j)),
                        rs.cartan()[i][j]
                    );
                }
            }
        }
        let b2 = RootSystem::new(CartanKind::B, 2).unwrap();
        assert_eq!(b2.orbit_label(b2.orbit_of_simple(1)), "s");
        assert_eq!(b2.orbit_label(b2.orbit_of_simple(0)), "l");
        let c2 = RootSystem::new(CartanKind::C, 2).unwrap();
        assert_eq!(c2.orbit_label(c2.orbit_of_simple(1)), "l");
    }

    #[test]
    fn weyl_examples() {
        let g2 = gl(2);
        assert_eq!(g2.weyl_order(), 2);
        let g3 = gl(3);
        let reps: Vec<Vec<usize>> = g3
            .min_coset_reps(&[0])
            .iter()
            .map(|&w| g3.word(w).to_vec())
            .collect();
        assert_eq!(reps, vec![vec![], vec![1], vec![0, 1]]);
        assert_eq!(g3.min_coset_reps(&[0, 1]), vec![g3.identity()]);
    }

    #[test]
    fn inversion_examples() {
        let g3 = gl(3);
        let s1 = g3.simple_reflection(0);
        let a1 = g3.simple_root_index(0);
        assert_eq!(g3.inversion_set(s1), &[a1]);
        let w = g3.from_word(&[0, 1]).unwrap();
        let roots: Vec<Vec<i64>> = g3
            .inversion_set(w)
            .iter()
            .map(|&k| g3.positive_roots()[k].simple.clone())
            .collect();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(g3.inversion_set(g3.longest()).len(), 3);
    }

    #[test]
    fn coset_examples() {
        let g3 = gl(3);
        let (a, b) = g3.coset_decompose(g3.longest(), &[0]);
        assert_eq!(g3.word(a), &[0, 1]);
        assert_eq!(g3.word(b), &[0]);
        let w = g3.from_word(&[1]).unwrap();
        assert_eq!(g3.coset_decompose(w, &[0]), (w, g3.identity()));
        assert_eq!(g3.coset_decompose(g3.longest(), &[]), (g3.longest(), g3.identity()));
    }

    #[test]
    fn stabilizer_examples() {
        let g3 = gl(3);
        assert_eq!(g3.stabilizer_j(&[r(1, 2), r(0, 1), r(0, 1)]).unwrap(), vec![1]);
        assert_eq!(g3.stabilizer_j(&rat_vec(&[0, 0, 0])).unwrap(), vec![0, 1]);
        let g2 = gl(2);
        assert!(g2.stabilizer_j(&[r(1, 2), r(0, 1)]).unwrap().is_empty());
        assert!(g2.stabilizer_j(&rat_vec(&[0, 1])).is_err());
        assert!(g2.stabilizer_j(&rat_vec(&[2, 0])).is_err());
    }

    #[test]
    fn c0_examples() {
        let g2 = gl(2);
        assert!(g2.is_in_c0(&[r(1, 2), r(0, 1)], &Lattice::GlZ).unwrap());
        assert!(!g2.is_in_c0(&rat_vec(&[1, 0]), &Lattice::GlZ).unwrap());
        for kind in [CartanKind::A, CartanKind::B, CartanKind::G2] {
            let rs = RootSystem::new(kind, 2).unwrap();
            for lat in [Lattice::CorootQ, Lattice::CoweightP] {
                assert!(rs.is_in_c0(&rat_vec(&[0, 0]), &lat).unwrap());
            }
        }
        assert!(g2.is_in_c0(&rat_vec(&[0, 0]), &Lattice::CorootQ).unwrap());
        assert!(g2.is_in_c0(&rat_vec(&[0, 0]), &Lattice::CoweightP).is_err());
    }

    #[test]
    fn c0_matches_strict_alcove_for_coroot_lattice() {
        // For Λ = Q∨ the criterion reduces to φ(c) < 1 on the closed alcove.
        for kind in [CartanKind::A, CartanKind::B, CartanKind::C, CartanKind::G2] {
            let rs = RootSystem::new(kind, 2).unwrap();
            for a in 0..=12 {
                for b in 0..=12 {
                    let c = vec![r(a, 12), r(b, 12)];
                    if !rs.in_closed_alcove(&c, 1) {
                        continue;
                    }
                    let strict =
                        RootSystem::pair_rat(&rs.highest_root().row, &c) < Rat::from_integer(1);
                    assert_eq!(rs.is_in_c0(&c, &Lattice::CorootQ).unwrap(), strict);
                }
            }
        }
    }

    #[test]
    fn metaplectic_examples() {
        let g2 = gl(2);
        let d = MetaplecticDatum::standard(&g2, 2);
        assert!(metaplectic_lattice_membership(&g2, &d, &[1, 1]));
        assert!(!metaplectic_lattice_membership(&g2, &d, &[1, 0]));
        let d1 = MetaplecticDatum::standard(&g2, 1);
        assert!(metaplectic_lattice_membership(&g2, &d1, &[3, -7]));
        let d6 = MetaplecticDatum { n: 6, q_vals: vec![4] };
        assert_eq!(d6.m_of_orbit(0), 3);
    }

    #[test]
    fn j_dominance_examples() {
        let g2 = gl(2);
        assert_eq!(
            g2.j_dominant_decompose(&[2, 1], &[0]).unwrap(),
            Some((vec![2, 1], g2.identity()))
        );
        assert_eq!(
            g2.j_dominant_decompose(&[1, 2], &[]).unwrap(),
            Some((vec![2, 1], g2.simple_reflection(0)))
        );
        assert_eq!(g2.j_dominant_decompose(&[1, 2], &[0]).unwrap(), None);
    }

    #[test]
    fn canonical_words_are_lex_least() {
        let rs = RootSystem::new(CartanKind::B, 3).unwrap();
        // Brute force: every reduced word of w of length l(w), minimum lex.
        for w in rs.elements() {
            let l = rs.length(w);
            let mut best: Option<Vec<usize>> = None;
            let mut stack = vec![(Vec::new(), rs.identity())];
            while let Some((word, x)) = stack.pop() {
                if word.len() == l {
                    if x == w && best.as_ref().map_or(true, |b| word < *b) {
                        best = Some(word);
                    }
                    continue;
                }
                for i in 0..rs.rank() {
                    let y = rs.rmul_s(x, i);
                    if rs.length(y) == word.len() + 1 {
                        let mut nw = word.clone();
                        nw.push(i);
                        stack.push((nw, y));
                    }
                }
            }
            assert_eq!(best.unwrap(), rs.word(w));
        }
    }

    #[test]
    fn parse_helpers() {
        assert_eq!(parse_rat_vec("1/2, 0,-3").unwrap(), vec![r(1, 2), r(0, 1), r(-3, 1)]);
        assert!(parse_rat_vec("1/0").is_err());
        assert_eq!(parse_word("1,2,1").unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("").unwrap(), Vec::<usize>::new());
        assert!(parse_word("0").is_err());
    }
}
