//! Property tests: random instances checked against independent oracles,
//! and enumerated small dominant weights checked for monotonicity.

mod common;

use proptest::prelude::*;
use std::collections::BTreeSet;
use weylgen::cone::{box_merge, caratheodory_reduce, Cone};
use weylgen::degen::{degeneracy, degeneracy_of_rep, verify_realization, DegenOptions};
use weylgen::git::{
    is_weyl_generic, unstable_components, verify_wall_certificate, wall_membership, WallCertificate,
};
use weylgen::linalg::{int_vec, kernel_basis, lin_comb, matrix_rank, rank_of, RatMat, RatVec};
use weylgen::lp::{lp_feasible, LpOutcome};
use weylgen::rat::Rat;
use weylgen::rep::{
    dual_rep, irrep_weight_set, rep_weight_set, root_system, GroupSpec, IrredSummand,
    Representation, WeightSet,
};
use weylgen::roots::LieType;

fn rats(xs: &[i64]) -> RatVec {
    int_vec(xs)
}

/// Solves a square system by Gauss–Jordan elimination; `None` when singular.
fn solve_square(mut m: Vec<RatVec>, mut b: RatVec) -> Option<RatVec> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        b.swap(col, p);
        let inv = m[col][col].recip();
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                for c in col..n {
                    let d = &f * &m[col][c];
                    m[r][c] -= d;
                }
                let d = &f * &b[col];
                b[r] -= d;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &m[i][i]).collect())
}

/// Brute-force degeneracy: the least `|T| − 1` over affinely independent
/// subsets `T` with zero in the relative interior of their convex hull.
fn brute_degeneracy(ws: &[RatVec], dim: usize) -> Option<usize> {
    use itertools::Itertools;
    for size in 1..=(dim + 1).min(ws.len()) {
        for t in (0..ws.len()).combinations(size) {
            // Rows: `dim` coordinate equations plus Σλ = 1, restricted to a
            // maximal independent set of equations.
            let mut rows: Vec<RatVec> = (0..dim)
                .map(|c| t.iter().map(|&i| ws[i][c].clone()).collect())
                .collect();
            rows.push(vec![Rat::one(); size]);
            let mut rhs = vec![Rat::zero(); dim];
            rhs.push(Rat::one());
            let pivots = independent_rows(&rows);
            if pivots.len() != size {
                continue;
            }
            let m: Vec<RatVec> = pivots.iter().map(|&r| rows[r].clone()).collect();
            let b: RatVec = pivots.iter().map(|&r| rhs[r].clone()).collect();
            let Some(lambda) = solve_square(m, b) else {
                continue;
            };
            let consistent = (0..=dim)
                .all(|r| rows[r].iter().zip(&lambda).map(|(a, l)| a * l).sum::<Rat>() == rhs[r]);
            if consistent && lambda.iter().all(|l| l.is_positive()) {
                return Some(size - 1);
            }
        }
    }
    None
}

fn independent_rows(rows: &[RatVec]) -> Vec<usize> {
    let mut chosen: Vec<RatVec> = Vec::new();
    let mut idx = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut trial = chosen.clone();
        trial.push(r.clone());
        if rank_of(&trial, r.len()) == trial.len() {
            chosen = trial;
            idx.push(i);
        }
    }
    idx
}

fn weight_sets(max_dim: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<RatVec>)> {
    (1..=max_dim).prop_flat_map(move |d| {
        prop::collection::btree_set(prop::collection::vec(-2i64..=2, d), 1..=max_len)
            .prop_map(move |s| (d, s.into_iter().map(|v| rats(&v)).collect()))
    })
}

fn positive_rats(len: usize) -> impl Strategy<Value = RatVec> {
    prop::collection::vec((1i64..=12, 1i64..=6), len)
        .prop_map(|v| v.into_iter().map(|(n, d)| Rat::new(n, d)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn box_merge_conditions(
        (n, m, dv, dw) in (1usize..=6, 1usize..=6, 1usize..=3, 1usize..=3),
        seed in prop::collection::vec(-3i64..=3, 36),
        a in positive_rats(6),
        raw in positive_rats(6),
    ) {
        let vs: Vec<RatVec> = (0..n).map(|i| rats(&seed[3 * i..3 * i + dv])).collect();
        let ws: Vec<RatVec> = (0..m).map(|j| rats(&seed[18 + 3 * j..18 + 3 * j + dw])).collect();
        let a = a[..n].to_vec();
        let (sa, sr): (Rat, Rat) = (a.iter().sum(), raw[..m].iter().sum());
        let b: RatVec = raw[..m].iter().map(|x| x * &sa / &sr).collect();
        let out = box_merge(&vs, &a, &ws, &b).unwrap();
        let mut rows = vec![Rat::zero(); n];
        let mut cols = vec![Rat::zero(); m];
        for ((i, j), c) in &out {
            prop_assert!(c.is_positive());
            rows[*i] += c;
            cols[*j] += c;
        }
        prop_assert_eq!(&rows, &a);
        prop_assert_eq!(&cols, &b);
        prop_assert!(out.len() <= n + m - 1);
        prop_assert!(out.iter().any(|((i, j), _)| *i == n - 1 && *j == m - 1));
        // Distinct partial sums force exactly n + m − 1 entries.
        let partial = |xs: &[Rat]| -> BTreeSet<Rat> {
            xs.iter().scan(Rat::zero(), |s, x| { *s += x; Some(s.clone()) }).collect()
        };
        let (pa, pb) = (partial(&a), partial(&b));
        if pa.intersection(&pb).count() == 1 {
            prop_assert_eq!(out.len(), n + m - 1);
        }
    }

    #[test]
    fn caratheodory_support_and_sum(
        (dim, gens) in weight_sets(4, 9),
        coeffs in positive_rats(9),
    ) {
        let c = &coeffs[..gens.len()];
        let theta = lin_comb(c, &gens, dim);
        let r = caratheodory_reduce(&gens, &theta, c).unwrap();
        prop_assert!(r.iter().all(|x| !x.is_negative()));
        let support: Vec<RatVec> =
            gens.iter().zip(&r).filter(|(_, x)| x.is_positive()).map(|(g, _)| g.clone()).collect();
        prop_assert!(support.len() <= rank_of(&gens, dim));
        prop_assert_eq!(rank_of(&support, dim), support.len());
        prop_assert_eq!(lin_comb(&r, &gens, dim), theta);
    }

    #[test]
    fn degeneracy_matches_brute_force((dim, ws) in weight_sets(3, 12)) {
        let set = WeightSet::new(dim, ws.clone());
        match (brute_degeneracy(&set.weights, dim), degeneracy(&set, dim)) {
            (Some(d), Ok(r)) => {
                prop_assert!(r.exact && r.verify());
                prop_assert_eq!(r.value, d);
            }
            (None, Err(_)) => {}
            (expected, got) => prop_assert!(false, "oracle {:?}, library {:?}", expected, got.map(|r| r.value)),
        }
    }

    #[test]
    fn wall_certificates_verify(
        (dim, ws) in weight_sets(3, 8),
        rank in 1usize..=4,
        theta in prop::collection::vec(-3i64..=3, 3),
    ) {
        let set = WeightSet::new(dim, ws);
        let theta = rats(&theta[..dim]);
        let cert = wall_membership(&set, rank, &theta).unwrap();
        prop_assert!(verify_wall_certificate(&set, &theta, &cert));
        if let WallCertificate::OnWall { subset, coeffs } = &cert {
            let gens: Vec<RatVec> = subset.iter().map(|&i| set.weights[i].clone()).collect();
            prop_assert!(subset.len() < rank);
            prop_assert!(coeffs.iter().all(|c| c.is_positive()));
            prop_assert_eq!(lin_comb(coeffs, &gens, dim), theta);
        }
    }

    #[test]
    fn unstable_components_are_maximal(
        (dim, ws) in weight_sets(3, 7),
        theta in prop::collection::vec(-3i64..=3, 3),
    ) {
        let set = WeightSet::new(dim, ws);
        let theta = rats(&theta[..dim]);
        let comps = unstable_components(&set, &theta).unwrap();
        let inside = |s: &[usize]| {
            Cone::new(dim, s.iter().map(|&i| set.weights[i].clone())).unwrap()
                .contains(&theta).unwrap().is_inside()
        };
        for (x, s) in comps.iter().enumerate() {
            prop_assert!(!inside(s));
            for i in (0..set.len()).filter(|i| !s.contains(i)) {
                let mut bigger = s.clone();
                bigger.push(i);
                prop_assert!(inside(&bigger));
            }
            for t in &comps[x + 1..] {
                prop_assert!(!s.iter().all(|i| t.contains(i)) && !t.iter().all(|i| s.contains(i)));
            }
        }
        prop_assert_eq!(comps.is_empty(), theta.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn lp_point_or_certificate(
        rows in 1usize..=3,
        cols in 1usize..=4,
        entries in prop::collection::vec(-3i64..=3, 12),
        b in prop::collection::vec(-3i64..=3, 3),
    ) {
        let m = RatMat::from_rows(
            &(0..rows).map(|r| rats(&entries[r * cols..(r + 1) * cols])).collect::<Vec<_>>(),
            cols,
        ).unwrap();
        let b = rats(&b[..rows]);
        match lp_feasible(&m, &b, &[]).unwrap() {
            LpOutcome::Feasible(x) => {
                prop_assert!(x.iter().all(|v| !v.is_negative()));
                prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
            }
            LpOutcome::Infeasible(cert) => prop_assert!(cert.verify(&m, &b)),
        }
        prop_assert_eq!(matrix_rank(&m) + kernel_basis(&m).len(), cols);
    }
}

fn small_dominant(t: LieType) -> Vec<Vec<i64>> {
    use itertools::Itertools;
    (0..t.rank)
        .map(|_| 0..=2i64)
        .multi_cartesian_product()
        .filter(|c| c.iter().sum::<i64>() <= 2)
        .collect()
}

fn irrep(t: LieType, c: &[i64]) -> Representation {
    let g = GroupSpec::new(vec![t], 0);
    Representation::new(
        g.clone(),
        vec![IrredSummand::from_fundamental(&g, &[c.to_vec()], &[]).unwrap()],
    )
    .unwrap()
}

fn exact(ws: &WeightSet, rank: usize) -> usize {
    let r = degeneracy(ws, rank).unwrap();
    assert!(r.exact && r.verify());
    r.value
}

fn minkowski(a: &WeightSet, b: &WeightSet) -> WeightSet {
    let sums = a.weights.iter().flat_map(|x| {
        b.weights
            .iter()
            .map(move |y| lin_comb(&[Rat::one(), Rat::one()], &[x.clone(), y.clone()], a.dim))
    });
    WeightSet::new(a.dim, sums)
}

fn grid_types() -> Vec<LieType> {
    ["A2", "A3", "B2"]
        .iter()
        .map(|s| LieType::parse(s).unwrap())
        .collect()
}

#[test]
fn degeneracy_monotonicity() {
    for t in grid_types() {
        let coords: Vec<Vec<i64>> = small_dominant(t)
            .into_iter()
            .filter(|c| c.iter().any(|&x| x != 0))
            .collect();
        let sets: Vec<WeightSet> = coords
            .iter()
            .map(|c| rep_weight_set(&irrep(t, c)).unwrap())
            .collect();
        let degens: Vec<usize> = sets.iter().map(|s| exact(s, t.rank)).collect();
        let rs = root_system(t);
        for i in 0..coords.len() {
            // V ⊗ V is at most as degenerate as V.
            assert!(
                exact(&minkowski(&sets[i], &sets[i]), t.rank) <= degens[i],
                "{t:?} {:?} ⊗ itself",
                coords[i]
            );
            for j in 0..coords.len() {
                // (i) direct sums.
                let union = WeightSet::new(
                    sets[i].dim,
                    sets[i].weights.iter().chain(&sets[j].weights).cloned(),
                );
                assert!(exact(&union, t.rank) <= degens[i].min(degens[j]));
                // (iv) tensor products of one group.
                assert!(exact(&minkowski(&sets[i], &sets[j]), t.rank) <= degens[i] + degens[j]);
                // (iii) dominance order.
                let (li, lj) = (&sets[i].weights, &sets[j].weights);
                let hi = rs.from_fundamental_coords(&int_vec(&coords[i])).unwrap();
                let hj = rs.from_fundamental_coords(&int_vec(&coords[j])).unwrap();
                if rs.dominance_leq(&hi, &hj).unwrap() {
                    assert!(
                        degens[j] <= degens[i],
                        "{t:?}: {:?} ≤ {:?}",
                        coords[i],
                        coords[j]
                    );
                    assert!(li.iter().all(|w| lj.contains(w)));
                }
            }
        }
    }
}

#[test]
fn external_tensor_degeneracy_is_subadditive() {
    let a2 = LieType::parse("A2").unwrap();
    let b2 = LieType::parse("B2").unwrap();
    let g = GroupSpec::new(vec![a2, b2], 0);
    for x in small_dominant(a2)
        .into_iter()
        .filter(|c| c.iter().any(|&v| v != 0))
    {
        for y in small_dominant(b2)
            .into_iter()
            .filter(|c| c.iter().any(|&v| v != 0))
        {
            let v = Representation::new(
                g.clone(),
                vec![IrredSummand::from_fundamental(&g, &[x.clone(), y.clone()], &[]).unwrap()],
            )
            .unwrap();
            let d = degeneracy_of_rep(&v, &DegenOptions::default()).unwrap();
            assert!(d.exact && d.verify() && verify_realization(&d.realization));
            let dx = exact(&rep_weight_set(&irrep(a2, &x)).unwrap(), 2);
            let dy = exact(&rep_weight_set(&irrep(b2, &y)).unwrap(), 2);
            assert!(
                d.value <= dx + dy,
                "{x:?} ⊠ {y:?}: {} > {dx} + {dy}",
                d.value
            );
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for t in grid_types() {
        let rs = root_system(t);
        let ws: Vec<RatVec> = small_dominant(t)
            .iter()
            .map(|c| rs.from_fundamental_coords(&int_vec(c)).unwrap())
            .collect();
        let leq = |a: &RatVec, b: &RatVec| rs.dominance_leq(a, b).unwrap();
        for a in &ws {
            assert!(leq(a, a));
            for b in &ws {
                if a != b {
                    assert!(!(leq(a, b) && leq(b, a)));
                }
                for c in &ws {
                    if leq(a, b) && leq(b, c) {
                        assert!(leq(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn weight_sets_are_weyl_stable_and_nested() {
    for t in grid_types() {
        let rs = root_system(t);
        for c in small_dominant(t) {
            let lambda = rs.from_fundamental_coords(&int_vec(&c)).unwrap();
            let ws: BTreeSet<RatVec> = irrep_weight_set(t, &lambda).unwrap().into_iter().collect();
            for w in &ws {
                for i in 0..t.rank {
                    assert!(ws.contains(&rs.simple_reflect(w, i)));
                }
                let (dom, _) = rs.dominant_representative(w).unwrap();
                assert_eq!(rs.dominant_representative(&dom).unwrap().0, dom);
                let orbit: BTreeSet<RatVec> = rs.weyl_orbit(w).unwrap().into_iter().collect();
                assert_eq!(orbit, rs.weyl_orbit(&dom).unwrap().into_iter().collect());
            }
            assert!(rs
                .weyl_orbit(&lambda)
                .unwrap()
                .iter()
                .all(|w| ws.contains(w)));
            let v = irrep(t, &c);
            let dual: BTreeSet<RatVec> = rep_weight_set(&dual_rep(&v).unwrap())
                .unwrap()
                .weights
                .into_iter()
                .collect();
            let neg: BTreeSet<RatVec> = ws.iter().map(|w| w.iter().map(|x| -x).collect()).collect();
            assert_eq!(dual, neg);
        }
    }
}

#[test]
fn genericity_witnesses_verify_and_dual_agrees() {
    let grid = common::sl2_torus_grid();
    for v in grid.iter().step_by(97) {
        let r = is_weyl_generic(v).unwrap();
        assert!(r.verify(), "{:?}", v.summands);
        if let Some(w) = &r.witness {
            assert!(r.invariant_cone.contains(&w.theta).unwrap().is_inside());
            let ws = rep_weight_set(v).unwrap();
            let cert = wall_membership(&ws, v.group.rank(), &w.theta).unwrap();
            assert!(!cert.on_wall() && verify_wall_certificate(&ws, &w.theta, &cert));
        }
        let d = is_weyl_generic(&dual_rep(v).unwrap()).unwrap();
        assert_eq!(d.generic, r.generic, "{:?}", v.summands);
    }
}
