//! Root systems of simple Lie algebras in their standard Euclidean
//! realizations, with simple roots, positive roots, fundamental weights,
//! Weyl reflections, orbits and the dominance order.
//!
//! Conventions follow Bourbaki's numbering. Type `A_n` lives in `Q^{n+1}`
//! with weights kept in sum-zero form; `E6` and `E7` live in `Q^8` inside
//! the span of their roots; `G2` lives in the plane `x₁+x₂+x₃ = 0`.

use crate::error::{invalid, Error, Result};
use crate::linalg::{dot, is_zero_vec, scale, sub, zero_vec, RatMat, RatVec};
use crate::rat::Rat;
use serde::{Deserialize, Serialize};
use std::collections::{HashSet, VecDeque};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            other => return invalid(format!("unknown Lie family {other:?}")),
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple Lie type `X_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<LieType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return invalid(format!(
                "{}{rank} is not a valid simple type",
                family.letter()
            ));
        }
        Ok(LieType { family, rank })
    }

    pub fn a(n: usize) -> LieType {
        LieType::new(Family::A, n).expect("valid A_n")
    }

    /// Parses names such as `A3`, `e6`, `D5`.
    pub fn parse(s: &str) -> Result<LieType> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = chars
            .next()
            .ok_or_else(|| Error::InvalidInput("empty Lie type".into()))?;
        let family = Family::parse(&fam.to_string())?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad Lie type {s:?}")))?;
        LieType::new(family, rank)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::C | Family::D => self.rank,
            Family::E => 8,
            Family::F => 4,
            Family::G => 3,
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B, _) | (Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, 8) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
            _ => unreachable!("validated type"),
        }
    }

    /// Dimension of the simple group: rank plus twice the positive roots.
    pub fn group_dim(&self) -> usize {
        self.rank + 2 * self.num_positive_roots()
    }

    /// Indices (1-based) of the minuscule fundamental weights.
    pub fn minuscule_indices(&self) -> Vec<usize> {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => (1..=n).collect(),
            (Family::B, _) => vec![n],
            (Family::C, _) => vec![1],
            (Family::D, _) => vec![1, n - 1, n],
            (Family::E, 6) => vec![1, 6],
            (Family::E, 7) => vec![7],
            _ => vec![],
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A root system in a fixed realization.
#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub ambient_dim: usize,
    pub simple_roots: Vec<RatVec>,
    pub positive_roots: Vec<RatVec>,
    pub fundamental_weights: Vec<RatVec>,
    /// Cartan matrix `C_ij = ⟨α_i, α_j^∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    #[serde(skip)]
    cartan_inv: Vec<RatVec>,
    #[serde(skip)]
    simple_sq: Vec<Rat>,
}

fn e(n: usize, i: usize) -> RatVec {
    let mut v = zero_vec(n);
    v[i] = Rat::one();
    v
}

fn lin(n: usize, terms: &[(i64, usize)]) -> RatVec {
    let mut v = zero_vec(n);
    for &(c, i) in terms {
        v[i] += Rat::int(c);
    }
    v
}

fn e8_simple_roots() -> Vec<RatVec> {
    let h = Rat::new(1, 2);
    let mut a1 = vec![-&h; 8];
    a1[0] = h.clone();
    a1[7] = h;
    let mut out = vec![a1, lin(8, &[(1, 0), (1, 1)])];
    for i in 0..6 {
        out.push(lin(8, &[(1, i + 1), (-1, i)]));
    }
    out
}

fn simple_roots_of(t: LieType) -> Vec<RatVec> {
    let n = t.rank;
    let d = t.ambient_dim();
    let chain =
        |k: usize| -> Vec<RatVec> { (0..k).map(|i| lin(d, &[(1, i), (-1, i + 1)])).collect() };
    match t.family {
        Family::A => chain(n),
        Family::B => {
            let mut r = chain(n - 1);
            r.push(e(d, n - 1));
            r
        }
        Family::C => {
            let mut r = chain(n - 1);
            r.push(lin(d, &[(2, n - 1)]));
            r
        }
        Family::D => {
            let mut r = chain(n - 1);
            r.push(lin(d, &[(1, n - 2), (1, n - 1)]));
            r
        }
        Family::E => e8_simple_roots().into_iter().take(n).collect(),
        Family::F => {
            let h = Rat::new(1, 2);
            vec![
                lin(4, &[(1, 1), (-1, 2)]),
                lin(4, &[(1, 2), (-1, 3)]),
                e(4, 3),
                vec![h.clone(), -&h, -&h, -&h],
            ]
        }
        Family::G => vec![
            lin(3, &[(1, 0), (-1, 1)]),
            lin(3, &[(-2, 0), (1, 1), (1, 2)]),
        ],
    }
}

fn invert(m: &[Vec<i64>]) -> Vec<RatVec> {
    let n = m.len();
    let mut a: Vec<RatVec> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: RatVec = r.iter().map(|&x| Rat::int(x)).collect();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !a[i][c].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(c, p);
        let inv = a[c][c].recip();
        a[c] = a[c].iter().map(|x| x * &inv).collect();
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pr = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl RootSystem {
    pub fn new(t: LieType) -> RootSystem {
        let simple = simple_roots_of(t);
        let n = t.rank;
        let simple_sq: Vec<Rat> = simple.iter().map(|a| dot(a, a)).collect();
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let c = Rat::int(2) * dot(&simple[i], &simple[j]) / &simple_sq[j];
                cartan[i][j] = c.to_i64().expect("integral Cartan entry");
            }
        }
        let cartan_inv = invert(&cartan);
        let d = t.ambient_dim();
        let fundamental_weights: Vec<RatVec> = (0..n)
            .map(|i| {
                let mut w = zero_vec(d);
                for k in 0..n {
                    crate::linalg::axpy(&mut w, &cartan_inv[i][k], &simple[k]);
                }
                w
            })
            .collect();
        let mut rs = RootSystem {
            lie_type: t,
            ambient_dim: d,
            simple_roots: simple,
            positive_roots: Vec::new(),
            fundamental_weights,
            cartan,
            cartan_inv,
            simple_sq,
        };
        let mut roots: HashSet<RatVec> = HashSet::new();
        for a in rs.simple_roots.clone() {
            roots.extend(rs.orbit_unchecked(&a));
        }
        let mut pos: Vec<RatVec> = roots
            .into_iter()
            .filter(|r| {
                rs.simple_root_coords_unchecked(r)
                    .iter()
                    .all(|c| !c.is_negative())
            })
            .collect();
        pos.sort_by(|a, b| {
            let ha: Rat = rs.simple_root_coords_unchecked(a).iter().sum();
            let hb: Rat = rs.simple_root_coords_unchecked(b).iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        rs.positive_roots = pos;
        rs
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// `⟨x, α_i^∨⟩ = 2(x, α_i)/(α_i, α_i)`.
    pub fn coroot_pairing(&self, x: &[Rat], i: usize) -> Rat {
        Rat::int(2) * dot(x, &self.simple_roots[i]) / &self.simple_sq[i]
    }

    /// Coordinates in the fundamental-weight basis: `(⟨x, α_i^∨⟩)_i`.
    pub fn fundamental_coords(&self, x: &[Rat]) -> RatVec {
        (0..self.rank())
            .map(|i| self.coroot_pairing(x, i))
            .collect()
    }

    /// `Σ cᵢ ωᵢ`.
    pub fn from_fundamental_coords(&self, c: &[Rat]) -> Result<RatVec> {
        if c.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{} expects {} fundamental-weight coordinates, got {}",
                self.lie_type,
                self.rank(),
                c.len()
            )));
        }
        let mut w = zero_vec(self.ambient_dim);
        for (ci, wi) in c.iter().zip(&self.fundamental_weights) {
            crate::linalg::axpy(&mut w, ci, wi);
        }
        Ok(w)
    }

    fn simple_root_coords_unchecked(&self, x: &[Rat]) -> RatVec {
        let p = self.fundamental_coords(x);
        (0..self.rank())
            .map(|k| {
                (0..self.rank())
                    .map(|j| &p[j] * &self.cartan_inv[j][k])
                    .sum()
            })
            .collect()
    }

    /// Coordinates of `x` in the simple-root basis. `x` must lie in the
    /// span of the roots.
    pub fn simple_root_coords(&self, x: &[Rat]) -> Result<RatVec> {
        self.check_dim(x)?;
        let c = self.simple_root_coords_unchecked(x);
        let mut back = zero_vec(self.ambient_dim);
        for (ck, ak) in c.iter().zip(&self.simple_roots) {
            crate::linalg::axpy(&mut back, ck, ak);
        }
        if back != x {
            return invalid(format!(
                "{x:?} is not in the span of the roots of {}",
                self.lie_type
            ));
        }
        Ok(c)
    }

    fn check_dim(&self, x: &[Rat]) -> Result<()> {
        if x.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "{} weights have {} coordinates, got {}",
                self.lie_type,
                self.ambient_dim,
                x.len()
            )));
        }
        Ok(())
    }

    /// Canonical representative of an ambient vector as a weight: for type
    /// `A` the sum-zero projection, otherwise the vector itself.
    pub fn normalize(&self, x: &[Rat]) -> Result<RatVec> {
        self.check_dim(x)?;
        if self.lie_type.family == Family::A {
            let mean: Rat = x.iter().sum::<Rat>() / Rat::int(x.len() as i64);
            Ok(x.iter().map(|v| v - &mean).collect())
        } else {
            Ok(x.to_vec())
        }
    }

    /// `s_i(x) = x − ⟨x, α_i^∨⟩ α_i`.
    pub fn simple_reflect(&self, x: &[Rat], i: usize) -> RatVec {
        let c = self.coroot_pairing(x, i);
        if c.is_zero() {
            return x.to_vec();
        }
        sub(x, &scale(&c, &self.simple_roots[i]))
    }

    pub fn is_dominant(&self, x: &[Rat]) -> bool {
        (0..self.rank()).all(|i| !self.coroot_pairing(x, i).is_negative())
    }

    /// The dominant element of the orbit of `x` together with a word
    /// `[i₁, …, i_k]` such that `s_{i_k} ⋯ s_{i₁} x` is dominant.
    pub fn dominant_representative(&self, x: &[Rat]) -> Result<(RatVec, Vec<usize>)> {
        let mut v = self.normalize(x)?;
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| self.coroot_pairing(&v, i).is_negative()) {
            v = self.simple_reflect(&v, i);
            word.push(i);
        }
        Ok((v, word))
    }

    fn orbit_unchecked(&self, x: &[Rat]) -> Vec<RatVec> {
        let mut seen: HashSet<RatVec> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(x.to_vec());
        queue.push_back(x.to_vec());
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                let w = self.simple_reflect(&v, i);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
            out.push(v);
        }
        out
    }

    /// The Weyl orbit of `x`, sorted lexicographically.
    pub fn weyl_orbit(&self, x: &[Rat]) -> Result<Vec<RatVec>> {
        let v = self.normalize(x)?;
        let mut o = self.orbit_unchecked(&v);
        o.sort();
        Ok(o)
    }

    /// Whether `μ ≤ λ` in the dominance order: `λ − μ` is a nonnegative
    /// integer combination of simple roots. Both must be dominant.
    pub fn dominance_leq(&self, mu: &[Rat], lambda: &[Rat]) -> Result<bool> {
        let mu = self.normalize(mu)?;
        let lambda = self.normalize(lambda)?;
        for (name, w) in [("mu", &mu), ("lambda", &lambda)] {
            if !self.is_dominant(w) {
                return Err(Error::NotDominant(format!(
                    "{name} = {w:?} for {}",
                    self.lie_type
                )));
            }
        }
        let diff = sub(&lambda, &mu);
        let Ok(c) = self.simple_root_coords(&diff) else {
            return Ok(false);
        };
        Ok(c.iter().all(|x| x.is_integer() && !x.is_negative()))
    }

    /// `−w₀λ`, the highest weight of the dual representation.
    pub fn dual_highest_weight(&self, lambda: &[Rat]) -> Result<RatVec> {
        let neg: RatVec = self.normalize(lambda)?.iter().map(|x| -x).collect();
        Ok(self.dominant_representative(&neg)?.0)
    }

    pub fn minuscule_weights(&self) -> Vec<RatVec> {
        self.lie_type
            .minuscule_indices()
            .into_iter()
            .map(|i| self.fundamental_weights[i - 1].clone())
            .collect()
    }

    /// Matrix whose rows are the simple roots.
    pub fn simple_root_matrix(&self) -> RatMat {
        RatMat::from_rows(&self.simple_roots, self.ambient_dim).expect("simple roots")
    }

    pub fn is_zero_weight(&self, x: &[Rat]) -> bool {
        is_zero_vec(x)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable root data")
    }
}
