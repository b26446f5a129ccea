//! Representations of `H × D` (semisimple times torus) and their weight sets.
//!
//! A weight is stored as one concatenated ambient vector: the blocks of the
//! simple factors in order, followed by the `k` torus coordinates.

use crate::error::{dim_err, invalid, Error, Result};
use crate::linalg::{is_zero_vec, neg, zero_vec, RatVec};
use crate::rat::Rat;
use crate::roots::{Family, LieType, RootSystem};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

/// Shared, lazily built root systems.
pub fn root_system(t: LieType) -> Arc<RootSystem> {
    static CACHE: OnceLock<Mutex<HashMap<LieType, Arc<RootSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rs) = cache.lock().expect("root system cache").get(&t) {
        return rs.clone();
    }
    let rs = Arc::new(RootSystem::new(t));
    cache
        .lock()
        .expect("root system cache")
        .entry(t)
        .or_insert(rs)
        .clone()
}

/// The group `H × D`: simple factors of `H` and the rank of the torus `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub factors: Vec<LieType>,
    pub torus_rank: usize,
}

impl GroupSpec {
    pub fn new(factors: Vec<LieType>, torus_rank: usize) -> GroupSpec {
        GroupSpec {
            factors,
            torus_rank,
        }
    }

    /// `SL(n₁) × ⋯ × SL(n_m) × (G_m)^k`.
    pub fn sl(ns: &[usize], torus_rank: usize) -> GroupSpec {
        GroupSpec::new(ns.iter().map(|&n| LieType::a(n - 1)).collect(), torus_rank)
    }

    pub fn root_systems(&self) -> Vec<Arc<RootSystem>> {
        self.factors.iter().map(|&t| root_system(t)).collect()
    }

    /// Ambient dimensions of the blocks, torus last.
    pub fn block_dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.factors.iter().map(|t| t.ambient_dim()).collect();
        d.push(self.torus_rank);
        d
    }

    /// Offsets of each block in the concatenated ambient vector.
    pub fn block_offsets(&self) -> Vec<usize> {
        let mut off = Vec::new();
        let mut acc = 0;
        for d in self.block_dims() {
            off.push(acc);
            acc += d;
        }
        off
    }

    pub fn semisimple_ambient_dim(&self) -> usize {
        self.factors.iter().map(|t| t.ambient_dim()).sum()
    }

    pub fn ambient_dim(&self) -> usize {
        self.semisimple_ambient_dim() + self.torus_rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank).sum()
    }

    /// Rank of the maximal torus of `H × D`.
    pub fn rank(&self) -> usize {
        self.semisimple_rank() + self.torus_rank
    }

    /// Dimension of `H × D`.
    pub fn dim(&self) -> usize {
        self.factors.iter().map(|t| t.group_dim()).sum::<usize>() + self.torus_rank
    }

    pub fn is_type_a(&self) -> bool {
        self.factors.iter().all(|t| t.family == Family::A)
    }

    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|t| t.name()).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        if parts.is_empty() {
            "trivial".into()
        } else {
            parts.join(" x ")
        }
    }

    /// Splits a concatenated vector into its semisimple part and torus part.
    pub fn split<'a>(&self, v: &'a [Rat]) -> (&'a [Rat], &'a [Rat]) {
        v.split_at(self.semisimple_ambient_dim())
    }
}

/// An irreducible summand: one dominant highest weight per simple factor
/// (ambient coordinates) and a torus character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrredSummand {
    pub highest_weights: Vec<RatVec>,
    pub torus_weight: RatVec,
}

impl IrredSummand {
    /// Builds a summand from fundamental-weight coordinates.
    pub fn from_fundamental(
        group: &GroupSpec,
        coords: &[Vec<i64>],
        torus_weight: &[i64],
    ) -> Result<IrredSummand> {
        if coords.len() != group.factors.len() {
            return dim_err(format!(
                "{} factors but {} highest weights",
                group.factors.len(),
                coords.len()
            ));
        }
        let highest_weights = group
            .root_systems()
            .iter()
            .zip(coords)
            .map(|(rs, c)| rs.from_fundamental_coords(&crate::linalg::int_vec(c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(IrredSummand {
            highest_weights,
            torus_weight: crate::linalg::int_vec(torus_weight),
        })
    }
}

/// A finite-dimensional representation, given as a direct sum of irreducibles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Representation {
    pub group: GroupSpec,
    pub summands: Vec<IrredSummand>,
}

impl Representation {
    /// Validates and normalizes: type-`A` weights are put in sum-zero form,
    /// highest weights must be dominant and integral, torus weights integral.
    pub fn new(group: GroupSpec, summands: Vec<IrredSummand>) -> Result<Representation> {
        if summands.is_empty() {
            return Err(Error::EmptyRepresentation);
        }
        let systems = group.root_systems();
        let mut out = Vec::with_capacity(summands.len());
        for (si, s) in summands.into_iter().enumerate() {
            if s.highest_weights.len() != group.factors.len() {
                return dim_err(format!(
                    "summand {si}: {} highest weights for {} factors",
                    s.highest_weights.len(),
                    group.factors.len()
                ));
            }
            if s.torus_weight.len() != group.torus_rank {
                return dim_err(format!(
                    "summand {si}: torus weight has {} entries, torus rank is {}",
                    s.torus_weight.len(),
                    group.torus_rank
                ));
            }
            if s.torus_weight.iter().any(|x| !x.is_integer()) {
                return invalid(format!("summand {si}: torus weight must be integral"));
            }
            let mut hws = Vec::with_capacity(systems.len());
            for (rs, hw) in systems.iter().zip(&s.highest_weights) {
                let hw = rs.normalize(hw)?;
                let fc = rs.fundamental_coords(&hw);
                if fc.iter().any(|c| c.is_negative()) {
                    return Err(Error::NotDominant(format!(
                        "summand {si}: {hw:?} for {}",
                        rs.lie_type
                    )));
                }
                if fc.iter().any(|c| !c.is_integer()) {
                    return invalid(format!(
                        "summand {si}: {hw:?} is not an integral weight of {}",
                        rs.lie_type
                    ));
                }
                if rs.from_fundamental_coords(&fc)? != hw {
                    return invalid(format!(
                        "summand {si}: {hw:?} is not in the weight space of {}",
                        rs.lie_type
                    ));
                }
                hws.push(hw);
            }
            out.push(IrredSummand {
                highest_weights: hws,
                torus_weight: s.torus_weight,
            });
        }
        Ok(Representation {
            group,
            summands: out,
        })
    }

    /// Distinct summands in sorted order (multiplicities do not affect weight sets).
    pub fn distinct_summands(&self) -> Vec<IrredSummand> {
        let set: BTreeSet<IrredSummand> = self.summands.iter().cloned().collect();
        set.into_iter().collect()
    }

    /// Fundamental-weight coordinates of each summand's highest weights.
    pub fn fundamental_coords(&self) -> Vec<Vec<RatVec>> {
        let systems = self.group.root_systems();
        self.summands
            .iter()
            .map(|s| {
                systems
                    .iter()
                    .zip(&s.highest_weights)
                    .map(|(rs, hw)| rs.fundamental_coords(hw))
                    .collect()
            })
            .collect()
    }

    /// Distinct torus characters of the summands.
    pub fn torus_weights(&self) -> Vec<RatVec> {
        let set: BTreeSet<RatVec> = self
            .summands
            .iter()
            .map(|s| s.torus_weight.clone())
            .collect();
        set.into_iter().collect()
    }

    /// The restriction to `H` (torus characters dropped).
    pub fn semisimple_part(&self) -> Representation {
        let group = GroupSpec::new(self.group.factors.clone(), 0);
        let mut summands: Vec<IrredSummand> = self
            .summands
            .iter()
            .map(|s| IrredSummand {
                highest_weights: s.highest_weights.clone(),
                torus_weight: vec![],
            })
            .collect();
        summands.sort();
        summands.dedup();
        Representation { group, summands }
    }
}

/// A deduplicated, lexicographically sorted set of weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSet {
    pub dim: usize,
    pub weights: Vec<RatVec>,
}

impl WeightSet {
    pub fn new(dim: usize, weights: impl IntoIterator<Item = RatVec>) -> WeightSet {
        let set: BTreeSet<RatVec> = weights.into_iter().collect();
        WeightSet {
            dim,
            weights: set.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, w: &[Rat]) -> bool {
        self.weights
            .binary_search_by(|x| x.as_slice().cmp(w))
            .is_ok()
    }

    pub fn index_of(&self, w: &[Rat]) -> Option<usize> {
        self.weights.binary_search_by(|x| x.as_slice().cmp(w)).ok()
    }

    pub fn has_zero(&self) -> bool {
        self.weights.iter().any(|w| is_zero_vec(w))
    }
}

/// Weights of the irreducible representation of highest weight `λ`
/// (ambient coordinates), sorted.
pub fn irrep_weight_set(t: LieType, lambda: &[Rat]) -> Result<Vec<RatVec>> {
    let rs = root_system(t);
    let lambda = rs.normalize(lambda)?;
    if !rs.is_dominant(&lambda) {
        return Err(Error::NotDominant(format!("{lambda:?} for {t}")));
    }
    let mut dominant_ok: HashMap<RatVec, bool> = HashMap::new();
    let mut seen: HashSet<RatVec> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(mu) = queue.pop_front() {
        for alpha in &rs.simple_roots {
            let nu = crate::linalg::sub(&mu, alpha);
            if seen.contains(&nu) {
                continue;
            }
            let dom = rs.dominant_representative(&nu)?.0;
            let ok = match dominant_ok.get(&dom) {
                Some(&b) => b,
                None => {
                    let b = rs.dominance_leq(&dom, &lambda)?;
                    dominant_ok.insert(dom, b);
                    b
                }
            };
            if ok {
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<RatVec> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Weights of a single summand, as concatenated ambient vectors.
pub fn summand_weights(group: &GroupSpec, s: &IrredSummand) -> Result<Vec<RatVec>> {
    let mut acc: Vec<RatVec> = vec![vec![]];
    for (t, hw) in group.factors.iter().zip(&s.highest_weights) {
        let ws = irrep_weight_set(*t, hw)?;
        let mut next = Vec::with_capacity(acc.len() * ws.len());
        for a in &acc {
            for w in &ws {
                let mut v = a.clone();
                v.extend(w.iter().cloned());
                next.push(v);
            }
        }
        acc = next;
    }
    for v in acc.iter_mut() {
        v.extend(s.torus_weight.iter().cloned());
    }
    Ok(acc)
}

/// The weight set of a representation: union over summands of blockwise products.
pub fn rep_weight_set(v: &Representation) -> Result<WeightSet> {
    let mut all = Vec::new();
    for s in v.distinct_summands() {
        all.extend(summand_weights(&v.group, &s)?);
    }
    Ok(WeightSet::new(v.group.ambient_dim(), all))
}

/// The dual representation: `−w₀λ` on each factor, negated torus weight.
pub fn dual_rep(v: &Representation) -> Result<Representation> {
    let systems = v.group.root_systems();
    let summands = v
        .summands
        .iter()
        .map(|s| {
            let hws = systems
                .iter()
                .zip(&s.highest_weights)
                .map(|(rs, hw)| rs.dual_highest_weight(hw))
                .collect::<Result<Vec<_>>>()?;
            Ok(IrredSummand {
                highest_weights: hws,
                torus_weight: neg(&s.torus_weight),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(v.group.clone(), summands)
}

/// Multiplies every torus character by `t ≥ 1`.
pub fn scale_torus_weights(v: &Representation, t: i64) -> Result<Representation> {
    if t <= 0 {
        return invalid(format!("scaling factor must be positive, got {t}"));
    }
    let tr = Rat::int(t);
    let summands = v
        .summands
        .iter()
        .map(|s| IrredSummand {
            highest_weights: s.highest_weights.clone(),
            torus_weight: s.torus_weight.iter().map(|x| x * &tr).collect(),
        })
        .collect();
    Representation::new(v.group.clone(), summands)
}

/// Direct sum of two representations of the same group.
pub fn direct_sum(a: &Representation, b: &Representation) -> Result<Representation> {
    if a.group != b.group {
        return invalid("direct sum of representations of different groups");
    }
    let mut s = a.summands.clone();
    s.extend(b.summands.iter().cloned());
    Representation::new(a.group.clone(), s)
}

/// The trivial highest weight tuple for a group.
pub fn trivial_highest_weights(group: &GroupSpec) -> Vec<RatVec> {
    group
        .factors
        .iter()
        .map(|t| zero_vec(t.ambient_dim()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_vec;

    fn a(n: usize) -> LieType {
        LieType::a(n)
    }

    #[test]
    fn irrep_sizes() {
        let a3 = root_system(a(3));
        assert_eq!(
            irrep_weight_set(a(3), &zero_vec(4)).unwrap(),
            vec![zero_vec(4)]
        );
        assert_eq!(
            irrep_weight_set(a(3), &a3.fundamental_weights[0])
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            irrep_weight_set(a(3), &a3.fundamental_weights[1])
                .unwrap()
                .len(),
            6
        );
        let a1 = root_system(a(1));
        let sym3: RatVec = a1.fundamental_weights[0]
            .iter()
            .map(|x| x * Rat::int(3))
            .collect();
        assert_eq!(irrep_weight_set(a(1), &sym3).unwrap().len(), 4);
        let e6t = LieType::parse("E6").unwrap();
        let e6 = root_system(e6t);
        let ws = irrep_weight_set(e6t, &e6.fundamental_weights[0]).unwrap();
        assert_eq!(ws.len(), 27);
        // The three weights used in the E6 degeneracy bound.
        let third = Rat::new(1, 3);
        let mut u = zero_vec(8);
        u[5] = third.clone();
        u[6] = third.clone();
        u[7] = -&third;
        let v1: RatVec = u.iter().map(|x| x * Rat::int(-2)).collect();
        let mut v2 = u.clone();
        v2[4] += Rat::one();
        let mut v3 = u.clone();
        v3[4] -= Rat::one();
        for v in [&v1, &v2, &v3] {
            assert!(ws.contains(v), "{v:?}");
        }
        let e7t = LieType::parse("E7").unwrap();
        let e7 = root_system(e7t);
        assert_eq!(
            irrep_weight_set(e7t, &e7.fundamental_weights[6])
                .unwrap()
                .len(),
            56
        );
    }

    #[test]
    fn rep_weight_sets() {
        let g = GroupSpec::sl(&[4], 1);
        let v = Representation::new(
            g.clone(),
            vec![
                IrredSummand::from_fundamental(&g, &[vec![1, 0, 0]], &[1]).unwrap(),
                IrredSummand::from_fundamental(&g, &[vec![0, 1, 0]], &[-1]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(rep_weight_set(&v).unwrap().len(), 10);
        assert!(Representation::new(g, vec![]).is_err());
    }

    #[test]
    fn duals_and_scaling() {
        let g = GroupSpec::sl(&[4], 1);
        let v = Representation::new(
            g.clone(),
            vec![IrredSummand::from_fundamental(&g, &[vec![1, 0, 0]], &[2]).unwrap()],
        )
        .unwrap();
        let d = dual_rep(&v).unwrap();
        let rs = root_system(a(3));
        assert_eq!(d.summands[0].highest_weights[0], rs.fundamental_weights[2]);
        assert_eq!(d.summands[0].torus_weight, int_vec(&[-2]));
        assert_eq!(dual_rep(&d).unwrap(), v);
        let s = scale_torus_weights(&v, 3).unwrap();
        assert_eq!(s.summands[0].torus_weight, int_vec(&[6]));
        assert!(scale_torus_weights(&v, 0).is_err());
    }

    #[test]
    fn rejects_bad_highest_weights() {
        let g = GroupSpec::sl(&[2], 0);
        let bad = IrredSummand {
            highest_weights: vec![int_vec(&[0, 1])],
            torus_weight: vec![],
        };
        assert!(matches!(
            Representation::new(g.clone(), vec![bad]),
            Err(Error::NotDominant(_))
        ));
        let half = IrredSummand {
            highest_weights: vec![vec![Rat::new(1, 4), Rat::new(-1, 4)]],
            torus_weight: vec![],
        };
        assert!(Representation::new(g, vec![half]).is_err());
    }
}
