//! Degeneracy of representations of semisimple groups and the
//! classification of nondegenerate representations of products of `SL(n)`.
//!
//! `degen(V)` is the least `n` such that some `n + 1` weights admit a
//! positive convex combination equal to zero. Minimal positive relations are
//! positive circuits, whose support spans a flat of rank `n`, so the value is
//! the least rank of a weight-spanned flat whose weights are not contained in
//! an open half-space. The search walks such flats level by level.

use crate::cone::zero_convex_reduce;
use crate::error::{invalid, Error, Result};
use crate::git::is_weyl_generic;
use crate::linalg::{
    independent_subset, is_zero_vec, kernel_basis, lin_comb, neg, primitive, rank_of, RatMat,
    RatVec,
};
use crate::lp::{lp_feasible, solve_inequalities};
use crate::rat::Rat;
use crate::rep::{rep_weight_set, GroupSpec, IrredSummand, Representation, WeightSet};
use crate::roots::{Family, LieType};
use itertools::Itertools;
use num::Integer;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};

/// Default cap on the number of flats (or subsets) examined by a search.
pub const DEFAULT_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationTerm {
    pub coeff: Rat,
    pub weight: RatVec,
}

/// Summary of how a degeneracy value was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchTranscript {
    /// `"zero weight"`, `"antipodal pair"`, `"flat search"` or `"subset search"`.
    pub method: String,
    /// Every candidate of rank (flat search) or size minus one (subset
    /// search) below this value was checked and carries no positive relation.
    pub levels_exhausted: usize,
    pub examined: usize,
    pub budget: usize,
    pub budget_exceeded: bool,
    /// Whether candidates were restricted to one Weyl chamber.
    pub weyl_reduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyResult {
    pub value: usize,
    /// False when the budget ran out; `value` is then only an upper bound.
    pub exact: bool,
    pub realization: Vec<RealizationTerm>,
    pub transcript: SearchTranscript,
}

impl DegeneracyResult {
    /// Checks `Σ aᵢ ξᵢ = 0`, `Σ aᵢ = 1`, `aᵢ > 0` and the length `value + 1`.
    pub fn verify(&self) -> bool {
        verify_realization(&self.realization) && self.realization.len() == self.value + 1
    }
}

/// Checks that a realization is a positive convex combination equal to zero.
pub fn verify_realization(terms: &[RealizationTerm]) -> bool {
    let Some(first) = terms.first() else {
        return false;
    };
    let dim = first.weight.len();
    let coeffs: RatVec = terms.iter().map(|t| t.coeff.clone()).collect();
    let ws: Vec<RatVec> = terms.iter().map(|t| t.weight.clone()).collect();
    terms
        .iter()
        .all(|t| t.coeff.is_positive() && t.weight.len() == dim)
        && coeffs.iter().sum::<Rat>() == Rat::one()
        && is_zero_vec(&lin_comb(&coeffs, &ws, dim))
}

/// Search options.
#[derive(Clone, Debug)]
pub struct DegenOptions {
    pub budget: usize,
}

impl Default for DegenOptions {
    fn default() -> Self {
        DegenOptions {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Finds a positive convex combination of `ws` equal to zero and reduces its
/// support; `None` when the weights lie in an open half-space.
fn zero_combination(ws: &[RatVec]) -> Result<Option<Vec<RealizationTerm>>> {
    if ws.is_empty() {
        return Ok(None);
    }
    let dim = ws[0].len();
    let mut cols = Vec::with_capacity(ws.len());
    for w in ws {
        let mut c = w.clone();
        c.push(Rat::one());
        cols.push(c);
    }
    let m = RatMat::from_cols(&cols, dim + 1)?;
    let mut b = vec![Rat::zero(); dim];
    b.push(Rat::one());
    let Some(a) = lp_feasible(&m, &b, &[])?.into_point() else {
        return Ok(None);
    };
    let a = zero_convex_reduce(ws, &a)?;
    Ok(Some(
        ws.iter()
            .zip(a)
            .filter(|(_, c)| c.is_positive())
            .map(|(w, c)| RealizationTerm {
                coeff: c,
                weight: w.clone(),
            })
            .collect(),
    ))
}

fn zero_realization(dim: usize) -> Vec<RealizationTerm> {
    vec![RealizationTerm {
        coeff: Rat::one(),
        weight: vec![Rat::zero(); dim],
    }]
}

fn antipodal_pair(ws: &WeightSet) -> Option<Vec<RealizationTerm>> {
    let lines: BTreeMap<RatVec, Vec<usize>> = ws
        .weights
        .iter()
        .enumerate()
        .filter(|(_, w)| !is_zero_vec(w))
        .fold(BTreeMap::new(), |mut m, (i, w)| {
            m.entry(crate::linalg::primitive_line(w))
                .or_insert_with(Vec::new)
                .push(i);
            m
        });
    for idx in lines.values() {
        for (&i, &j) in idx.iter().tuple_combinations() {
            let (u, v) = (&ws.weights[i], &ws.weights[j]);
            let p = crate::linalg::primitive_line(u);
            // u = s·p and v = t·p with s, t of opposite signs.
            let s = u
                .iter()
                .zip(&p)
                .find(|(_, q)| !q.is_zero())
                .map(|(x, q)| x / q)
                .unwrap();
            let t = v
                .iter()
                .zip(&p)
                .find(|(_, q)| !q.is_zero())
                .map(|(x, q)| x / q)
                .unwrap();
            if s.signum() != t.signum() {
                let (sa, ta) = (s.abs(), t.abs());
                let tot = &sa + &ta;
                return Some(vec![
                    RealizationTerm {
                        coeff: &ta / &tot,
                        weight: u.clone(),
                    },
                    RealizationTerm {
                        coeff: &sa / &tot,
                        weight: v.clone(),
                    },
                ]);
            }
        }
    }
    None
}

/// Integer coordinates for the nonzero weights, with an optional chamber
/// given by the nonnegative orthant of those coordinates.
struct FlatSearch<'a> {
    weights: Vec<&'a RatVec>,
    pts: Vec<Vec<i64>>,
    n: usize,
    chamber: bool,
    words: usize,
    /// Byte lookup tables of a permutation group acting on at most 64
    /// points; flats are then deduplicated up to the group.
    orbit_tables: Option<Vec<[[u64; 256]; 8]>>,
}

struct Flat {
    members: Vec<u64>,
    basis: Vec<usize>,
    ann: Vec<Vec<i64>>,
}

enum Found {
    At {
        level: usize,
        members: Vec<usize>,
        examined: usize,
    },
    None {
        levels_exhausted: usize,
        examined: usize,
        budget_exceeded: bool,
    },
}

fn to_i64_vec(v: &[Rat]) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| {
            x.to_i64()
                .ok_or_else(|| Error::Unsupported("coordinate does not fit in 64 bits".into()))
        })
        .collect()
}

fn gcd_normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |acc, &x| acc.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
    if let Some(&f) = v.iter().find(|&&x| x != 0) {
        if f < 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

impl<'a> FlatSearch<'a> {
    /// `coords[i]` are integral coordinates of the nonzero weight `weights[i]`
    /// in an injective linear image of their span.
    fn new(weights: Vec<&'a RatVec>, coords: Vec<RatVec>, chamber: bool) -> Result<FlatSearch<'a>> {
        let n = coords.first().map_or(0, |c| c.len());
        let pts = coords
            .iter()
            .map(|c| to_i64_vec(c))
            .collect::<Result<Vec<_>>>()?;
        let words = weights.len().div_ceil(64);
        Ok(FlatSearch {
            weights,
            pts,
            n,
            chamber,
            words,
            orbit_tables: None,
        })
    }

    fn with_orbits(mut self, perms: &[Vec<u16>]) -> FlatSearch<'a> {
        let tables = perms
            .iter()
            .map(|p| {
                let mut t = [[0u64; 256]; 8];
                for (byte, table) in t.iter_mut().enumerate() {
                    for (v, slot) in table.iter_mut().enumerate() {
                        *slot = (0..8)
                            .filter(|b| v >> b & 1 == 1 && byte * 8 + b < p.len())
                            .fold(0u64, |acc, b| acc | 1 << p[byte * 8 + b]);
                    }
                }
                t
            })
            .collect();
        self.orbit_tables = Some(tables);
        self
    }

    /// Least image of a member set under the orbit group, or the set itself.
    fn canonical(&self, members: &[u64]) -> Vec<u64> {
        let Some(tables) = &self.orbit_tables else {
            return members.to_vec();
        };
        let m = members[0];
        let bytes = m.to_le_bytes();
        let best = tables
            .iter()
            .map(|t| {
                bytes
                    .iter()
                    .zip(t)
                    .fold(0u64, |acc, (&b, tb)| acc | tb[b as usize])
            })
            .min()
            .unwrap_or(m);
        vec![best]
    }

    fn contains(&self, bits: &[u64], i: usize) -> bool {
        bits[i / 64] >> (i % 64) & 1 == 1
    }

    fn annihilator(&self, basis: &[usize]) -> Result<Vec<Vec<i64>>> {
        let rows: Vec<RatVec> = basis
            .iter()
            .map(|&i| self.pts[i].iter().map(|&x| Rat::int(x)).collect())
            .collect();
        let m = RatMat::from_rows(&rows, self.n)?;
        kernel_basis(&m)
            .iter()
            .map(|k| to_i64_vec(&primitive(k)))
            .collect()
    }

    /// Some point of the span of `basis` lies strictly inside the orthant on
    /// every coordinate that does not vanish identically on the span.
    fn meets_chamber(&self, basis: &[usize]) -> Result<bool> {
        let mut rows = Vec::new();
        for i in 0..self.n {
            let row: Vec<i64> = basis.iter().map(|&b| self.pts[b][i]).collect();
            if row.iter().any(|&x| x != 0) {
                rows.push(row);
            }
        }
        // Quick accept: a single spanning point already works.
        for &b in basis {
            for s in [1i64, -1] {
                if (0..self.n).all(|i| {
                    let col_nonzero = basis.iter().any(|&c| self.pts[c][i] != 0);
                    !col_nonzero || s * self.pts[b][i] > 0
                }) {
                    return Ok(true);
                }
            }
        }
        let g: Vec<RatVec> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rat::int(x)).collect())
            .collect();
        let h = vec![Rat::one(); g.len()];
        Ok(solve_inequalities(&g, &h, basis.len())?.is_some())
    }

    fn has_relation(&self, members: &[usize]) -> Result<bool> {
        for i in 0..self.n {
            let pos = members.iter().any(|&m| self.pts[m][i] > 0);
            let negv = members.iter().any(|&m| self.pts[m][i] < 0);
            if pos != negv {
                return Ok(false);
            }
        }
        let ws: Vec<RatVec> = members
            .iter()
            .map(|&m| self.pts[m].iter().map(|&x| Rat::int(x)).collect())
            .collect();
        let mut cols = ws;
        cols.iter_mut().for_each(|c| c.push(Rat::one()));
        let m = RatMat::from_cols(&cols, self.n + 1)?;
        let mut b = vec![Rat::zero(); self.n];
        b.push(Rat::one());
        Ok(lp_feasible(&m, &b, &[])?.is_feasible())
    }

    fn member_list(&self, bits: &[u64]) -> Vec<usize> {
        (0..self.pts.len())
            .filter(|&i| self.contains(bits, i))
            .collect()
    }

    /// Searches flats of rank `1..=max_level` for a positive relation.
    fn run(&self, max_level: usize, budget: usize) -> Result<Found> {
        let identity: Vec<Vec<i64>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut level = vec![Flat {
            members: vec![0; self.words],
            basis: vec![],
            ann: identity,
        }];
        let mut examined = 0usize;
        for r in 1..=max_level {
            let mut seen: HashSet<Vec<u64>> = HashSet::new();
            let mut next = Vec::new();
            for f in &level {
                let mut groups: BTreeMap<Vec<i128>, Vec<usize>> = BTreeMap::new();
                for (i, p) in self.pts.iter().enumerate() {
                    if self.contains(&f.members, i) {
                        continue;
                    }
                    let mut key: Vec<i128> = f
                        .ann
                        .iter()
                        .map(|a| {
                            a.iter()
                                .zip(p)
                                .map(|(&x, &y)| i128::from(x) * i128::from(y))
                                .sum()
                        })
                        .collect();
                    gcd_normalize(&mut key);
                    groups.entry(key).or_default().push(i);
                }
                for g in groups.into_values() {
                    let mut members = f.members.clone();
                    for &i in &g {
                        members[i / 64] |= 1 << (i % 64);
                    }
                    if !seen.insert(self.canonical(&members)) {
                        continue;
                    }
                    examined += 1;
                    if examined > budget {
                        return Ok(Found::None {
                            levels_exhausted: r,
                            examined,
                            budget_exceeded: true,
                        });
                    }
                    let mut basis = f.basis.clone();
                    basis.push(g[0]);
                    if self.chamber && !self.meets_chamber(&basis)? {
                        continue;
                    }
                    let list = self.member_list(&members);
                    if list.len() > r && self.has_relation(&list)? {
                        return Ok(Found::At {
                            level: r,
                            members: list,
                            examined,
                        });
                    }
                    if r < max_level {
                        let ann = self.annihilator(&basis)?;
                        next.push(Flat {
                            members,
                            basis,
                            ann,
                        });
                    }
                }
            }
            level = next;
        }
        Ok(Found::None {
            levels_exhausted: max_level + 1,
            examined,
            budget_exceeded: false,
        })
    }
}

/// Integer coordinates of weights on an injective projection of their span.
fn span_coordinates(ws: &[RatVec], dim: usize) -> Vec<RatVec> {
    // Pivot columns of the weight matrix give coordinates injective on the span.
    let (_, cols) =
        crate::linalg::rref(&RatMat::from_rows(ws, dim).expect("weights share a dimension"));
    let mut coords: Vec<RatVec> = ws
        .iter()
        .map(|w| cols.iter().map(|&j| w[j].clone()).collect())
        .collect();
    for j in 0..cols.len() {
        let d = coords
            .iter()
            .fold(num::BigInt::from(1), |acc, c| acc.lcm(&c[j].denom()));
        let d = Rat::from_bigint(d);
        coords.iter_mut().for_each(|c| c[j] = &c[j] * &d);
    }
    coords
}

struct Prepared<'a> {
    nonzero: Vec<&'a RatVec>,
    coords: Vec<RatVec>,
    span: usize,
}

fn prepare<'a>(ws: &'a WeightSet, coords_of: &dyn Fn(&RatVec) -> RatVec) -> Prepared<'a> {
    let nonzero: Vec<&RatVec> = ws.weights.iter().filter(|w| !is_zero_vec(w)).collect();
    let coords: Vec<RatVec> = nonzero.iter().map(|w| coords_of(w)).collect();
    let span = rank_of(
        &nonzero.iter().map(|w| (*w).clone()).collect::<Vec<_>>(),
        ws.dim,
    );
    Prepared {
        nonzero,
        coords,
        span,
    }
}

fn search_degeneracy(
    ws: &WeightSet,
    h_rank: usize,
    max_level: Option<usize>,
    chamber_coords: Option<&dyn Fn(&RatVec) -> RatVec>,
    orbit_perms: Option<&[Vec<u16>]>,
    opts: &DegenOptions,
) -> Result<DegeneracyResult> {
    if ws.is_empty() {
        return Err(Error::EmptyRepresentation);
    }
    // Orbit deduplication needs the group to act on the flat-search points,
    // which are all weights once the zero weight is excluded.
    let orbit_perms = orbit_perms.filter(|_| ws.len() <= 64 && !ws.has_zero());
    let chamber_coords = chamber_coords.filter(|_| orbit_perms.is_none());
    let weyl_reduced = chamber_coords.is_some() || orbit_perms.is_some();
    let transcript =
        |method: &str, levels: usize, examined: usize, exceeded: bool| SearchTranscript {
            method: method.into(),
            levels_exhausted: levels,
            examined,
            budget: opts.budget,
            budget_exceeded: exceeded,
            weyl_reduced,
        };
    if ws.has_zero() {
        return Ok(DegeneracyResult {
            value: 0,
            exact: true,
            realization: zero_realization(ws.dim),
            transcript: transcript("zero weight", 0, 0, false),
        });
    }
    if let Some(r) = antipodal_pair(ws) {
        return Ok(DegeneracyResult {
            value: 1,
            exact: true,
            realization: r,
            transcript: transcript("antipodal pair", 1, 0, false),
        });
    }
    let all: Vec<RatVec> = ws.weights.clone();
    let span_only = |w: &RatVec| w.clone();
    let prepared = match chamber_coords {
        Some(f) => prepare(ws, f),
        None => {
            let mut p = prepare(ws, &span_only);
            p.coords = span_coordinates(&all, ws.dim);
            p
        }
    };
    if prepared.span > h_rank {
        return invalid(format!(
            "weights span dimension {} exceeds the rank {h_rank}",
            prepared.span
        ));
    }
    let top = prepared.span.saturating_sub(1);
    let limit = max_level.map_or(top, |m| m.min(top));
    let mut engine = FlatSearch::new(
        prepared.nonzero.clone(),
        prepared.coords,
        chamber_coords.is_some(),
    )?;
    if let Some(perms) = orbit_perms {
        engine = engine.with_orbits(perms);
    }
    match engine.run(limit, opts.budget)? {
        Found::At {
            level,
            members,
            examined,
        } => {
            let pts: Vec<RatVec> = members.iter().map(|&i| engine.weights[i].clone()).collect();
            let realization = zero_combination(&pts)?.expect("flat carries a positive relation");
            Ok(DegeneracyResult {
                value: level,
                exact: true,
                realization,
                transcript: transcript("flat search", level, examined, false),
            })
        }
        Found::None {
            levels_exhausted,
            examined,
            budget_exceeded,
        } => {
            let realization = zero_combination(&all)?.ok_or_else(|| {
                Error::Unsupported("weights lie in an open half-space; no degeneracy exists".into())
            })?;
            let reached_top = !budget_exceeded && limit == top;
            let value = realization.len() - 1;
            Ok(DegeneracyResult {
                value,
                exact: reached_top,
                realization,
                transcript: transcript("flat search", levels_exhausted, examined, budget_exceeded),
            })
        }
    }
}

/// Degeneracy of a weight set of a semisimple-group representation of rank
/// `h_rank`, without symmetry reduction.
pub fn degeneracy(ws: &WeightSet, h_rank: usize) -> Result<DegeneracyResult> {
    degeneracy_with(ws, h_rank, &DegenOptions::default())
}

pub fn degeneracy_with(
    ws: &WeightSet,
    h_rank: usize,
    opts: &DegenOptions,
) -> Result<DegeneracyResult> {
    search_degeneracy(ws, h_rank, None, None, None, opts)
}

/// Concatenated fundamental-weight coordinates of a semisimple weight.
pub fn fundamental_coordinates(group: &GroupSpec, w: &[Rat]) -> RatVec {
    let offsets = group.block_offsets();
    group
        .root_systems()
        .iter()
        .zip(offsets.iter().zip(group.block_dims()))
        .flat_map(|(rs, (&o, d))| rs.fundamental_coords(&w[o..o + d]))
        .collect()
}

/// Degeneracy of the restriction of `V` to its semisimple part, searching
/// only flats that meet the dominant chamber. The weight set is Weyl
/// invariant, so every orbit of flats keeps a representative.
pub fn degeneracy_of_rep(v: &Representation, opts: &DegenOptions) -> Result<DegeneracyResult> {
    let h = v.semisimple_part();
    if h.group.factors.is_empty() {
        return Err(Error::InvalidInput(
            "degeneracy needs at least one simple factor".into(),
        ));
    }
    let ws = rep_weight_set(&h)?;
    let g = h.group.clone();
    let coords = move |w: &RatVec| fundamental_coordinates(&g, w);
    let (perms, complete) = weyl_permutations(&h.group, &ws, SYMMETRY_CAP)?;
    let orbits = complete.then_some(perms.as_slice());
    search_degeneracy(
        &ws,
        h.group.semisimple_rank(),
        None,
        Some(&coords),
        orbits,
        opts,
    )
}

/// A realization with at most `m + 1` weights, if one exists.
pub fn degeneracy_leq(ws: &WeightSet, m: usize) -> Result<Option<Vec<RealizationTerm>>> {
    degeneracy_leq_with(ws, m, &DegenOptions::default())
}

pub fn degeneracy_leq_with(
    ws: &WeightSet,
    m: usize,
    opts: &DegenOptions,
) -> Result<Option<Vec<RealizationTerm>>> {
    if ws.is_empty() {
        return Ok(None);
    }
    let r = search_degeneracy(ws, ws.dim, Some(m), None, None, opts)?;
    if r.value <= m {
        return Ok(Some(r.realization));
    }
    if r.transcript.budget_exceeded {
        return Err(Error::Unsupported(format!(
            "search budget of {} exceeded",
            opts.budget
        )));
    }
    Ok(None)
}

/// The defining search over weight subsets of increasing size, testing each
/// subset for a strictly positive zero combination. Exponential; intended
/// for small weight sets and as an independent check of the flat search.
pub fn degeneracy_by_subsets(ws: &WeightSet, budget: usize) -> Result<DegeneracyResult> {
    if ws.is_empty() {
        return Err(Error::EmptyRepresentation);
    }
    let dim = ws.dim;
    let mut examined = 0usize;
    for s in 1..=ws.len() {
        for subset in (0..ws.len()).combinations(s) {
            examined += 1;
            if examined > budget {
                return Err(Error::Unsupported(format!(
                    "subset budget of {budget} exceeded"
                )));
            }
            let mut cols: Vec<RatVec> = subset.iter().map(|&i| ws.weights[i].clone()).collect();
            cols.iter_mut().for_each(|c| c.push(Rat::one()));
            let m = RatMat::from_cols(&cols, dim + 1)?;
            let mut b = vec![Rat::zero(); dim];
            b.push(Rat::one());
            let strict: Vec<usize> = (0..s).collect();
            if let Some(a) = lp_feasible(&m, &b, &strict)?.into_point() {
                let realization = subset
                    .iter()
                    .zip(a)
                    .map(|(&i, c)| RealizationTerm {
                        coeff: c,
                        weight: ws.weights[i].clone(),
                    })
                    .collect();
                return Ok(DegeneracyResult {
                    value: s - 1,
                    exact: true,
                    realization,
                    transcript: SearchTranscript {
                        method: "subset search".into(),
                        levels_exhausted: s - 1,
                        examined,
                        budget,
                        budget_exceeded: false,
                        weyl_reduced: false,
                    },
                });
            }
        }
    }
    Err(Error::Unsupported(
        "weights lie in an open half-space; no degeneracy exists".into(),
    ))
}

/// Simple-root coordinates of a semisimple weight, concatenated over the
/// simple factors.
pub fn simple_root_coordinates(group: &GroupSpec, w: &[Rat]) -> Result<RatVec> {
    let offsets = group.block_offsets();
    let mut out = Vec::new();
    for (rs, (&o, d)) in group
        .root_systems()
        .iter()
        .zip(offsets.iter().zip(group.block_dims()))
    {
        out.extend(rs.simple_root_coords(&w[o..o + d])?);
    }
    Ok(out)
}

/// Looks for a realization inside a hyperplane `u⊥` where `u` is a strictly
/// positive combination of at most `max_support` fundamental coweights.
///
/// The weights in `u⊥` are stable under the parabolic Weyl subgroup fixing
/// `u`, so averaging over the fibres of the projection onto the
/// simple-root coordinates in the support of `u` turns a zero combination of
/// projected points into a zero combination of weights. A hit proves
/// `degen(V|_H) < rank(H)`; a miss proves nothing.
pub fn parabolic_certificate(
    v: &Representation,
    max_support: usize,
) -> Result<Option<Vec<RealizationTerm>>> {
    let h = v.semisimple_part();
    let ws = rep_weight_set(&h)?;
    if ws.has_zero() {
        return Ok(Some(zero_realization(ws.dim)));
    }
    let q: Vec<RatVec> = ws
        .weights
        .iter()
        .map(|w| simple_root_coordinates(&h.group, w))
        .collect::<Result<_>>()?;
    let r = h.group.semisimple_rank();
    for s in 1..=max_support.min(r) {
        for support in (0..r).combinations(s) {
            let mut fibres: BTreeMap<RatVec, Vec<usize>> = BTreeMap::new();
            for (i, qi) in q.iter().enumerate() {
                fibres
                    .entry(support.iter().map(|&k| qi[k].clone()).collect())
                    .or_default()
                    .push(i);
            }
            let pts: Vec<&RatVec> = fibres.keys().collect();
            let mut normals: HashSet<RatVec> = HashSet::new();
            if s == 1 {
                normals.insert(vec![Rat::one()]);
            } else {
                for basis in pts.iter().filter(|p| !is_zero_vec(p)).combinations(s - 1) {
                    let rows: Vec<RatVec> = basis.iter().map(|p| (**p).clone()).collect();
                    let ker = kernel_basis(&RatMat::from_rows(&rows, s)?);
                    if ker.len() != 1 {
                        continue;
                    }
                    let mut u = primitive(&ker[0]);
                    if u[0].is_negative() {
                        u = neg(&u);
                    }
                    if u.iter().all(|x| x.is_positive()) {
                        normals.insert(u);
                    }
                }
            }
            for u in normals.iter().sorted() {
                let on: Vec<&RatVec> = pts
                    .iter()
                    .copied()
                    .filter(|p| crate::linalg::dot(p, u).is_zero())
                    .collect();
                let on_vecs: Vec<RatVec> = on.iter().map(|p| (*p).clone()).collect();
                let Some(lambda) = zero_combination(&on_vecs)? else {
                    continue;
                };
                let mut members = Vec::new();
                let mut coeffs = Vec::new();
                for term in &lambda {
                    let fibre = &fibres[&term.weight];
                    let c = &term.coeff / &Rat::int(fibre.len() as i64);
                    for &i in fibre {
                        members.push(ws.weights[i].clone());
                        coeffs.push(c.clone());
                    }
                }
                let reduced = zero_convex_reduce(&members, &coeffs)?;
                let realization: Vec<RealizationTerm> = members
                    .into_iter()
                    .zip(reduced)
                    .filter(|(_, c)| c.is_positive())
                    .map(|(weight, coeff)| RealizationTerm { coeff, weight })
                    .collect();
                return Ok(Some(realization));
            }
        }
    }
    Ok(None)
}

/// Result of [`vertex_search`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexOutcome {
    /// A vertex of the zero-sum polytope with at most `span` weights.
    Degenerate(Vec<RealizationTerm>),
    /// Every vertex uses `span + 1` weights. `orbits` vertex orbits were
    /// expanded, `vertices` vertices were visited in total.
    Nondegenerate {
        span: usize,
        orbits: usize,
        vertices: usize,
        symmetry_order: usize,
    },
}

/// Vertex budget of the vertex walk inside [`is_nondegenerate_with`] before
/// it falls back to the flat search.
pub const VERTEX_PASS_BUDGET: usize = 200_000;

/// Largest group of weight permutations generated for [`vertex_search`].
pub const SYMMETRY_CAP: usize = 50_000;

fn compose(a: &[u16], b: &[u16]) -> Vec<u16> {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn closure(n: usize, gens: &[Vec<u16>]) -> Vec<Vec<u16>> {
    let id: Vec<u16> = (0..n as u16).collect();
    let mut seen: HashSet<Vec<u16>> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        for g in gens {
            let h = compose(g, &out[k]);
            if seen.insert(h.clone()) {
                out.push(h);
            }
        }
        k += 1;
    }
    out
}

/// Permutations of `ws` induced by the Weyl group, or by the product of the
/// Weyl groups of a prefix of the factors when the full group exceeds `cap`
/// elements. The flag reports whether the whole group was generated.
pub fn weyl_permutations(
    group: &GroupSpec,
    ws: &WeightSet,
    cap: usize,
) -> Result<(Vec<Vec<u16>>, bool)> {
    let n = ws.len();
    if n > usize::from(u16::MAX) {
        return Err(Error::Unsupported(
            "too many weights for a permutation representation".into(),
        ));
    }
    let offsets = group.block_offsets();
    let mut total: Vec<Vec<u16>> = vec![(0..n as u16).collect()];
    for (rs, (&o, d)) in group
        .root_systems()
        .iter()
        .zip(offsets.iter().zip(group.block_dims()))
    {
        let mut gens = Vec::new();
        for i in 0..rs.rank() {
            let mut perm = Vec::with_capacity(n);
            for w in &ws.weights {
                let mut x = w.clone();
                let r = rs.simple_reflect(&w[o..o + d], i);
                x.splice(o..o + d, r);
                let j = ws.index_of(&x).ok_or_else(|| {
                    Error::InvalidInput("weight set is not Weyl invariant".into())
                })?;
                perm.push(j as u16);
            }
            gens.push(perm);
        }
        let factor = closure(n, &gens);
        if total.len() * factor.len() > cap {
            return Ok((total, false));
        }
        total = total
            .iter()
            .flat_map(|a| factor.iter().map(move |b| compose(a, b)))
            .collect();
    }
    Ok((total, true))
}

fn invert(m: &RatMat) -> RatMat {
    let n = m.rows();
    let mut aug = RatMat::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n + i)] = Rat::one();
    }
    let (r, _) = crate::linalg::rref(&aug);
    let mut inv = RatMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = r[(i, n + j)].clone();
        }
    }
    inv
}

/// Decides whether `degen(V|_H)` equals the span dimension of the weights by
/// walking the vertex graph of `{λ ≥ 0 : Σ λ_ξ = 1, Σ λ_ξ ξ = 0}` up to the
/// Weyl group. Vertices are positive circuits; the representation is
/// nondegenerate exactly when every vertex has full support `span + 1`.
/// Starting from one vertex, each simplex pivot out of a vertex of full
/// support either reaches a neighbour or, on a tie in the ratio test, a
/// smaller vertex. The graph is connected, so exhausting the reachable
/// orbits without a tie proves nondegeneracy. `budget` caps the number of
/// visited vertices.
pub fn vertex_search(v: &Representation, budget: usize) -> Result<VertexOutcome> {
    let h = v.semisimple_part();
    let ws = rep_weight_set(&h)?;
    if ws.has_zero() {
        return Ok(VertexOutcome::Degenerate(zero_realization(ws.dim)));
    }
    if ws.len() > 128 {
        return Err(Error::Unsupported(
            "vertex search handles at most 128 weights".into(),
        ));
    }
    let coords = span_coordinates(&ws.weights, ws.dim);
    let span = coords.first().map_or(0, |c| c.len());
    let m = span + 1;
    let lifted: Vec<RatVec> = coords
        .iter()
        .map(|c| {
            let mut x = c.clone();
            x.push(Rat::one());
            x
        })
        .collect();
    let (perms, _) = weyl_permutations(&h.group, &ws, SYMMETRY_CAP)?;
    let mask = |b: &[usize]| b.iter().fold(0u128, |acc, &i| acc | 1 << i);
    let realization = |support: &[usize], coeffs: &[Rat]| -> Vec<RealizationTerm> {
        support
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| c.is_positive())
            .map(|(&i, c)| RealizationTerm {
                coeff: c.clone(),
                weight: ws.weights[i].clone(),
            })
            .collect()
    };

    let start = zero_combination(&ws.weights)?.ok_or_else(|| {
        Error::Unsupported("weights lie in an open half-space; no degeneracy exists".into())
    })?;
    if start.len() < m {
        return Ok(VertexOutcome::Degenerate(start));
    }
    let start: Vec<usize> = start
        .iter()
        .map(|t| ws.index_of(&t.weight).expect("weight from the set"))
        .collect();

    let mut seen: HashSet<u128> = HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    let expand = |b: &[usize], seen: &mut HashSet<u128>| -> bool {
        if seen.contains(&mask(b)) {
            return false;
        }
        for g in &perms {
            seen.insert(b.iter().fold(0u128, |acc, &i| acc | 1 << g[i]));
        }
        true
    };
    expand(&start, &mut seen);
    queue.push_back(start);
    let mut orbits = 0usize;
    while let Some(basis) = queue.pop_front() {
        orbits += 1;
        if seen.len() > budget {
            return Err(Error::Unsupported(format!(
                "vertex budget of {budget} exceeded"
            )));
        }
        let cols: Vec<RatVec> = basis.iter().map(|&i| lifted[i].clone()).collect();
        let inv = invert(&RatMat::from_cols(&cols, m)?);
        let lambda: RatVec = (0..m).map(|i| inv[(i, m - 1)].clone()).collect();
        for j in 0..lifted.len() {
            if basis.contains(&j) {
                continue;
            }
            let d = inv.mul_vec(&lifted[j])?;
            let mut best: Option<Rat> = None;
            let mut hits: Vec<usize> = Vec::new();
            for k in 0..m {
                if d[k].is_positive() {
                    let r = &lambda[k] / &d[k];
                    match best.as_ref().map(|b| r.cmp(b)) {
                        Some(std::cmp::Ordering::Greater) => {}
                        Some(std::cmp::Ordering::Equal) => hits.push(k),
                        _ => {
                            best = Some(r);
                            hits = vec![k];
                        }
                    }
                }
            }
            let t = best.expect("the polytope is bounded");
            if hits.len() > 1 {
                let mut support = basis.clone();
                support.push(j);
                let mut coeffs: RatVec = (0..m).map(|k| &lambda[k] - &(&t * &d[k])).collect();
                coeffs.push(t);
                return Ok(VertexOutcome::Degenerate(realization(&support, &coeffs)));
            }
            let mut next = basis.clone();
            next[hits[0]] = j;
            if expand(&next, &mut seen) {
                queue.push_back(next);
            }
        }
    }
    Ok(VertexOutcome::Nondegenerate {
        span,
        orbits,
        vertices: seen.len(),
        symmetry_order: perms.len(),
    })
}

/// `degen(V|_H) = rank(H)`.
pub fn is_nondegenerate(v: &Representation) -> Result<bool> {
    is_nondegenerate_with(v, &DegenOptions::default())
}

pub fn is_nondegenerate_with(v: &Representation, opts: &DegenOptions) -> Result<bool> {
    if v.group.factors.is_empty() {
        return Err(Error::InvalidInput("no simple factors".into()));
    }
    let rank = v.group.semisimple_rank();
    if parabolic_certificate(v, 2)?.is_some_and(|c| c.len() <= rank) {
        return Ok(false);
    }
    match vertex_search(v, opts.budget.min(VERTEX_PASS_BUDGET)) {
        Ok(VertexOutcome::Degenerate(_)) => return Ok(false),
        Ok(VertexOutcome::Nondegenerate { span, .. }) => return Ok(span == rank),
        Err(Error::Unsupported(_)) => {}
        Err(e) => return Err(e),
    }
    let r = degeneracy_of_rep(v, opts)?;
    if !r.exact && r.value < v.group.semisimple_rank() {
        return Ok(false);
    }
    if !r.exact {
        return Err(Error::Unsupported(format!(
            "search budget of {} exceeded",
            opts.budget
        )));
    }
    Ok(r.value == v.group.semisimple_rank())
}

/// Per-condition breakdown of the nondegeneracy classification for
/// representations of products of `SL(nᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// (i) the `nᵢ` are pairwise coprime.
    pub pairwise_coprime: bool,
    /// (ii) all summands agree on every factor with `nᵢ ≠ 2`.
    pub equal_mod_sl2: bool,
    /// (iii) every factor of every summand is standard, dual standard, or an
    /// odd symmetric power when `nᵢ = 2`.
    pub factors_nondegenerate: bool,
    pub nondegenerate: bool,
    pub notes: Vec<String>,
}

/// Whether the fundamental coordinates `c` of an `SL(n)` highest weight give
/// one of the nondegenerate irreducibles.
fn nondegenerate_sl_piece(n: usize, c: &[Rat]) -> bool {
    let nonzero: Vec<usize> = (0..c.len()).filter(|&i| !c[i].is_zero()).collect();
    if n == 2 {
        return c[0].to_i64().is_some_and(|m| m % 2 == 1);
    }
    nonzero.len() == 1 && c[nonzero[0]].is_one() && (nonzero[0] == 0 || nonzero[0] == n - 2)
}

pub fn classify_nondegenerate(v: &Representation) -> Result<Classification> {
    let g = &v.group;
    if let Some(t) = g.factors.iter().find(|t| t.family != Family::A) {
        return Err(Error::InvalidInput(format!("non-type-A factor {t}")));
    }
    if g.factors.is_empty() {
        return Err(Error::InvalidInput("no simple factors".into()));
    }
    let ns: Vec<usize> = g.factors.iter().map(|t| t.rank + 1).collect();
    let mut notes = Vec::new();
    let mut coprime = true;
    for (i, j) in (0..ns.len()).tuple_combinations() {
        if ns[i].gcd(&ns[j]) != 1 {
            coprime = false;
            notes.push(format!(
                "gcd(n{}, n{}) = gcd({}, {}) > 1",
                i + 1,
                j + 1,
                ns[i],
                ns[j]
            ));
        }
    }
    let h = v.semisimple_part();
    let mut equal = true;
    for (j, &n) in ns.iter().enumerate().filter(|(_, &n)| n != 2) {
        if h.summands
            .iter()
            .map(|s| &s.highest_weights[j])
            .dedup()
            .count()
            > 1
        {
            equal = false;
            notes.push(format!("summands differ on factor {} (SL({n}))", j + 1));
        }
    }
    let mut pieces = true;
    for (k, c) in h.fundamental_coords().iter().enumerate() {
        for (j, &n) in ns.iter().enumerate() {
            if !nondegenerate_sl_piece(n, &c[j]) {
                pieces = false;
                let coords = c[j].iter().map(|x| x.to_string()).join(",");
                notes.push(format!(
                    "summand {} has a degenerate piece [{coords}] on factor {} (SL({n}))",
                    k + 1,
                    j + 1
                ));
            }
        }
    }
    Ok(Classification {
        pairwise_coprime: coprime,
        equal_mod_sl2: equal,
        factors_nondegenerate: pieces,
        nondegenerate: coprime && equal && pieces,
        notes,
    })
}

/// `V_H ⊗ (⊕ C_a)`: every summand of `V_H` paired with every torus character.
pub fn tensor_representation(
    vh: &Representation,
    d_weights: &[RatVec],
    torus_rank: usize,
) -> Result<Representation> {
    let group = GroupSpec::new(vh.group.factors.clone(), torus_rank);
    let mut summands = Vec::new();
    for s in &vh.semisimple_part().summands {
        for a in d_weights {
            if a.len() != torus_rank {
                return crate::error::dim_err(format!(
                    "torus weight of length {} for rank {torus_rank}",
                    a.len()
                ));
            }
            summands.push(IrredSummand {
                highest_weights: s.highest_weights.clone(),
                torus_weight: a.clone(),
            });
        }
    }
    Representation::new(group, summands)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorGenericity {
    pub nondegenerate: bool,
    pub span_full: bool,
    pub generic: bool,
}

/// Genericity of `V_H ⊗ V_D` from nondegeneracy of `V_H` and the span of
/// the characters of `V_D`.
pub fn tensor_genericity(
    vh: &Representation,
    d_weights: &[RatVec],
    torus_rank: usize,
) -> Result<TensorGenericity> {
    let nondegenerate = is_nondegenerate(vh)?;
    let span_full = rank_of(d_weights, torus_rank) == torus_rank;
    Ok(TensorGenericity {
        nondegenerate,
        span_full,
        generic: nondegenerate && span_full,
    })
}

/// Cross-check of [`tensor_genericity`] against the direct decision.
pub fn tensor_genericity_direct(
    vh: &Representation,
    d_weights: &[RatVec],
    torus_rank: usize,
) -> Result<bool> {
    Ok(is_weyl_generic(&tensor_representation(vh, d_weights, torus_rank)?)?.generic)
}

/// One row of the minuscule degeneracy table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub group: String,
    /// 1-based index of the fundamental weight.
    pub weight: usize,
    pub num_weights: usize,
    pub bound: usize,
    pub bound_verified: bool,
    pub bound_realization: Vec<RealizationTerm>,
    /// Exact value asserted for the row, if any.
    pub stated_exact: Option<usize>,
    pub computed_exact: Option<usize>,
    pub pass: bool,
}

/// Realizations for odd `D_n` checked against the span of `v₁, …, v₄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DOddSpanCheck {
    pub n: usize,
    pub span_dim: usize,
    pub v: Vec<RatVec>,
    pub realizations_inside: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
    pub d_odd: Vec<DOddSpanCheck>,
    pub all_pass: bool,
}

fn minuscule_weight_set(t: LieType, i: usize) -> Result<WeightSet> {
    let rs = crate::rep::root_system(t);
    let mut c = vec![Rat::zero(); t.rank];
    c[i - 1] = Rat::one();
    let lambda = rs.from_fundamental_coords(&c)?;
    Ok(WeightSet::new(
        t.ambient_dim(),
        crate::rep::irrep_weight_set(t, &lambda)?,
    ))
}

fn minuscule_rep(t: LieType, i: usize) -> Result<Representation> {
    let g = GroupSpec::new(vec![t], 0);
    let mut c = vec![0i64; t.rank];
    c[i - 1] = 1;
    Representation::new(
        g.clone(),
        vec![IrredSummand::from_fundamental(&g, &[c], &[])?],
    )
}

/// The rows `(type, weight index, bound, stated exact value)`.
pub fn table1_rows() -> Vec<(LieType, usize, usize, Option<usize>)> {
    let t = |s: &str| LieType::parse(s).expect("valid type");
    let mut rows = Vec::new();
    for n in 2..=4 {
        rows.push((t(&format!("B{n}")), n, 1, Some(1)));
    }
    for n in 3..=4 {
        rows.push((t(&format!("C{n}")), 1, 1, Some(1)));
    }
    for n in 4..=7 {
        let odd = n % 2 == 1;
        rows.push((t(&format!("D{n}")), 1, 1, Some(1)));
        let spin = if odd { 3 } else { 1 };
        rows.push((t(&format!("D{n}")), n - 1, spin, None));
        rows.push((t(&format!("D{n}")), n, spin, None));
    }
    rows.push((t("E6"), 1, 2, Some(2)));
    rows.push((t("E6"), 6, 2, Some(2)));
    rows.push((t("E7"), 7, 1, Some(1)));
    rows
}

/// The vectors `v₁, …, v₄` in the orbit of `ω_{n−1}` for odd `D_n`.
pub fn d_odd_vectors(n: usize) -> Vec<RatVec> {
    let half = Rat::new(1, 2);
    let make = |a: i64, b: i64, c: i64| -> RatVec {
        let mut v: RatVec = (0..n - 2).map(|_| &half * Rat::int(a)).collect();
        v.push(&half * Rat::int(b));
        v.push(&half * Rat::int(c));
        v
    };
    vec![
        make(1, 1, -1),
        make(1, -1, 1),
        make(-1, 1, 1),
        make(-1, -1, -1),
    ]
}

pub fn table1_verify() -> Result<Table1Report> {
    let mut rows = Vec::new();
    for (t, i, bound, stated) in table1_rows() {
        let ws = minuscule_weight_set(t, i)?;
        let leq = degeneracy_leq(&ws, bound)?;
        let bound_verified = leq
            .as_ref()
            .is_some_and(|r| verify_realization(r) && r.len() <= bound + 1);
        let exact = degeneracy_of_rep(&minuscule_rep(t, i)?, &DegenOptions::default())?;
        let computed_exact = exact.exact.then_some(exact.value);
        let pass = bound_verified && stated.is_none_or(|s| computed_exact == Some(s));
        rows.push(Table1Row {
            group: t.name(),
            weight: i,
            num_weights: ws.len(),
            bound,
            bound_verified,
            bound_realization: leq.unwrap_or_default(),
            stated_exact: stated,
            computed_exact,
            pass,
        });
    }
    let mut d_odd = Vec::new();
    for n in [5usize, 7] {
        let v = d_odd_vectors(n);
        let span_dim = rank_of(&v, n);
        let name = format!("D{n}");
        let mut inside = true;
        let mut span = crate::linalg::EchelonBasis::new(n);
        for x in &v {
            span.insert(x);
        }
        // Minimal realizations inside span(v₁..v₄): ±e_{n−1} for ω₁, the v's
        // for ω_{n−1}, their negatives for ω_n.
        let e = {
            let mut x = vec![Rat::zero(); n];
            x[n - 2] = Rat::one();
            x
        };
        let quarter = Rat::new(1, 4);
        let candidates: Vec<(usize, Vec<RealizationTerm>)> = vec![
            (
                1,
                vec![
                    RealizationTerm {
                        coeff: Rat::new(1, 2),
                        weight: e.clone(),
                    },
                    RealizationTerm {
                        coeff: Rat::new(1, 2),
                        weight: neg(&e),
                    },
                ],
            ),
            (
                n - 1,
                v.iter()
                    .map(|x| RealizationTerm {
                        coeff: quarter.clone(),
                        weight: x.clone(),
                    })
                    .collect(),
            ),
            (
                n,
                v.iter()
                    .map(|x| RealizationTerm {
                        coeff: quarter.clone(),
                        weight: neg(x),
                    })
                    .collect(),
            ),
        ];
        for (i, real) in candidates {
            let ws = minuscule_weight_set(LieType::parse(&name)?, i)?;
            let row = rows.iter().find(|r| r.group == name && r.weight == i);
            let value = row.and_then(|r| r.computed_exact);
            let ok = verify_realization(&real)
                && real
                    .iter()
                    .all(|t| ws.contains(&t.weight) && span.contains(&t.weight))
                && value == Some(real.len() - 1);
            inside &= ok;
        }
        d_odd.push(DOddSpanCheck {
            n,
            span_dim,
            v,
            realizations_inside: inside,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass) && d_odd.iter().all(|d| d.realizations_inside);
    Ok(Table1Report {
        rows,
        d_odd,
        all_pass,
    })
}

/// Independent subset of weights used when reporting spans.
pub fn spanning_weights(ws: &WeightSet) -> Vec<usize> {
    independent_subset(&ws.weights, ws.dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(ns: &[usize], pieces: &[Vec<Vec<i64>>]) -> Representation {
        let g = GroupSpec::sl(ns, 0);
        let summands = pieces
            .iter()
            .map(|p| IrredSummand::from_fundamental(&g, p, &[]).unwrap())
            .collect();
        Representation::new(g, summands).unwrap()
    }

    fn std_sl(n: usize) -> Vec<i64> {
        let mut c = vec![0; n - 1];
        c[0] = 1;
        c
    }

    fn dual_sl(n: usize) -> Vec<i64> {
        let mut c = vec![0; n - 1];
        c[n - 2] = 1;
        c
    }

    fn both(v: &Representation) -> (DegeneracyResult, DegeneracyResult) {
        let ws = rep_weight_set(v).unwrap();
        let a = degeneracy(&ws, v.group.semisimple_rank()).unwrap();
        let b = degeneracy_of_rep(v, &DegenOptions::default()).unwrap();
        assert!(a.verify() && b.verify());
        assert_eq!(a.value, b.value);
        (a, b)
    }

    #[test]
    fn standard_representations() {
        for n in 2..=5 {
            let v = rep(&[n], &[vec![std_sl(n)]]);
            let (a, _) = both(&v);
            assert_eq!(a.value, n - 1);
            assert!(a
                .realization
                .iter()
                .all(|t| t.coeff == Rat::new(1, n as i64)));
            assert!(is_nondegenerate(&v).unwrap());
        }
    }

    #[test]
    fn sl2_symmetric_powers() {
        assert_eq!(both(&rep(&[2], &[vec![vec![3]]])).0.value, 1);
        assert_eq!(both(&rep(&[2], &[vec![vec![2]]])).0.value, 0);
    }

    #[test]
    fn degenerate_examples() {
        let v = rep(&[4], &[vec![vec![0, 1, 0]]]);
        assert!(both(&v).0.value <= 2);
        assert!(!is_nondegenerate(&v).unwrap());
        let v = rep(&[4], &[vec![std_sl(4)], vec![dual_sl(4)]]);
        assert_eq!(both(&v).0.value, 1);
        assert!(!is_nondegenerate(&v).unwrap());
        let ws = rep_weight_set(&rep(&[3], &[vec![std_sl(3)]])).unwrap();
        assert!(degeneracy_leq(&ws, 1).unwrap().is_none());
        assert!(degeneracy_leq(&ws, 2).unwrap().is_some());
    }

    #[test]
    fn agrees_with_subset_search() {
        for v in [
            rep(&[2, 3], &[vec![vec![1], std_sl(3)]]),
            rep(&[3], &[vec![vec![2, 0]]]),
            rep(&[4], &[vec![vec![0, 1, 0]]]),
            rep(&[2, 2], &[vec![vec![1], vec![1]]]),
            rep(&[3], &[vec![vec![1, 0]], vec![vec![0, 2]]]),
        ] {
            let ws = rep_weight_set(&v).unwrap();
            let oracle = degeneracy_by_subsets(&ws, 1_000_000).unwrap();
            assert!(verify_realization(&oracle.realization));
            assert_eq!(both(&v).0.value, oracle.value, "{v:?}");
        }
    }

    #[test]
    fn classification_examples() {
        let c = classify_nondegenerate(&rep(&[2, 3], &[vec![vec![1], std_sl(3)]])).unwrap();
        assert!(c.nondegenerate);
        let c = classify_nondegenerate(&rep(&[2, 2], &[vec![vec![1], vec![1]]])).unwrap();
        assert!(!c.pairwise_coprime && !c.nondegenerate);
        let c = classify_nondegenerate(&rep(&[4], &[vec![std_sl(4)], vec![dual_sl(4)]])).unwrap();
        assert!(!c.equal_mod_sl2 && !c.nondegenerate);
        let c = classify_nondegenerate(&rep(&[2], &[vec![vec![1]], vec![vec![3]]])).unwrap();
        assert!(c.nondegenerate);
        assert_eq!(
            degeneracy_of_rep(
                &rep(&[2], &[vec![vec![1]], vec![vec![3]]]),
                &DegenOptions::default()
            )
            .unwrap()
            .value,
            1
        );
        let g = GroupSpec::new(vec![LieType::parse("B2").unwrap()], 0);
        let v = Representation::new(
            g.clone(),
            vec![IrredSummand::from_fundamental(&g, &[vec![0, 1]], &[]).unwrap()],
        )
        .unwrap();
        assert!(classify_nondegenerate(&v).is_err());
    }

    #[test]
    fn tensor_examples() {
        let vh = rep(&[3], &[vec![std_sl(3)]]);
        let t = tensor_genericity(
            &vh,
            &[crate::linalg::int_vec(&[1]), crate::linalg::int_vec(&[-2])],
            1,
        )
        .unwrap();
        assert!(t.generic);
        assert!(tensor_genericity_direct(
            &vh,
            &[crate::linalg::int_vec(&[1]), crate::linalg::int_vec(&[-2])],
            1
        )
        .unwrap());
        let t = tensor_genericity(&vh, &[crate::linalg::int_vec(&[1, 0])], 2).unwrap();
        assert!(!t.generic);
        assert!(!tensor_genericity_direct(&vh, &[crate::linalg::int_vec(&[1, 0])], 2).unwrap());
        let w2 = rep(&[4], &[vec![vec![0, 1, 0]]]);
        assert!(
            !tensor_genericity(&w2, &[crate::linalg::int_vec(&[1])], 1)
                .unwrap()
                .generic
        );
        assert!(!tensor_genericity_direct(&w2, &[crate::linalg::int_vec(&[1])], 1).unwrap());
    }
}
