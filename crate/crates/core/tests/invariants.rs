//! Structural invariants of root systems, weight sets and constructors.

use std::collections::BTreeSet;
use weylgen::construct::{build_sufficient, gr_flop, validate_sufficient, SufficientSpec};
use weylgen::degen::{
    classify_nondegenerate, is_nondegenerate, verify_realization, RealizationTerm,
};
use weylgen::linalg::{int_vec, RatVec};
use weylgen::rat::Rat;
use weylgen::rep::{
    irrep_weight_set, rep_weight_set, root_system, GroupSpec, IrredSummand, Representation,
};
use weylgen::roots::LieType;

fn types_up_to(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for (f, min) in [("A", 1), ("B", 2), ("C", 3), ("D", 4)] {
        for n in min..=max_rank {
            out.push(LieType::parse(&format!("{f}{n}")).unwrap());
        }
    }
    for s in ["E6", "E7", "F4", "G2"] {
        let t = LieType::parse(s).unwrap();
        if t.rank <= max_rank {
            out.push(t);
        }
    }
    out
}

#[test]
fn orbit_sizes_divide_the_weyl_group_order() {
    for t in types_up_to(4) {
        let rs = root_system(t);
        let rho = rs
            .from_fundamental_coords(&vec![Rat::one(); t.rank])
            .unwrap();
        let order = rs.weyl_orbit(&rho).unwrap().len();
        for i in 0..t.rank {
            let mut c = vec![Rat::zero(); t.rank];
            c[i] = Rat::one();
            let w = rs.from_fundamental_coords(&c).unwrap();
            let size = rs.weyl_orbit(&w).unwrap().len();
            assert_eq!(
                order % size,
                0,
                "{t}: orbit of ω{} has {size} points, |W| = {order}",
                i + 1
            );
        }
    }
}

#[test]
fn minuscule_weight_sets_are_single_orbits() {
    for t in types_up_to(7) {
        let rs = root_system(t);
        for lambda in rs.minuscule_weights() {
            let ws: BTreeSet<RatVec> = irrep_weight_set(t, &lambda).unwrap().into_iter().collect();
            let orbit: BTreeSet<RatVec> = rs.weyl_orbit(&lambda).unwrap().into_iter().collect();
            assert_eq!(ws, orbit, "{t} {lambda:?}");
        }
    }
}

#[test]
fn flop_weight_sets_are_symmetric() {
    let cases = [
        (vec![1usize], vec![vec![1i64]]),
        (vec![2], vec![vec![1, 0]]),
        (vec![1, 2], vec![vec![1], vec![0, 1]]),
    ];
    for (ranks, hw) in cases {
        let g = GroupSpec::new(ranks.iter().map(|&n| LieType::a(n)).collect(), 0);
        let x = Representation::new(
            g.clone(),
            vec![IrredSummand::from_fundamental(&g, &hw, &[]).unwrap()],
        )
        .unwrap();
        for a in [1, 2] {
            let ws = rep_weight_set(&gr_flop(&x, a).unwrap()).unwrap();
            assert!(ws
                .weights
                .iter()
                .all(|w| ws.contains(&w.iter().map(|c| -c).collect::<Vec<_>>())));
        }
    }
}

#[test]
fn sufficient_spec_rejects_violated_hypotheses() {
    let h = GroupSpec::sl(&[4], 0);
    let g = GroupSpec::sl(&[4], 2);
    let x_plus = Representation::new(
        h.clone(),
        vec![IrredSummand::from_fundamental(&h, &[vec![1, 0, 0]], &[]).unwrap()],
    )
    .unwrap();
    // Y-weights that do not span the character space of D.
    let spec = SufficientSpec {
        x_plus: x_plus.clone(),
        torus_rank: 2,
        y: vec![int_vec(&[1, 0])],
        z: vec![IrredSummand::from_fundamental(&g, &[vec![0, 1, 0]], &[-1, 0]).unwrap()],
        nu: None,
    };
    assert!(validate_sufficient(&spec).is_err());
    assert!(build_sufficient(&spec, 1).is_err());
    // A degenerate X₊.
    let deg = Representation::new(
        h.clone(),
        vec![IrredSummand::from_fundamental(&h, &[vec![1, 0, 1]], &[]).unwrap()],
    )
    .unwrap();
    let spec = SufficientSpec {
        x_plus: deg,
        torus_rank: 1,
        y: vec![int_vec(&[1])],
        z: vec![],
        nu: None,
    };
    assert!(validate_sufficient(&spec).is_err());
}

/// std ⊗ std ⊗ std of SL(3) × SL(4) × SL(5) has a positive zero combination
/// of 9 weights in rank 9, although the three sizes are pairwise coprime.
#[test]
fn triple_standard_tensor_is_degenerate() {
    let g = GroupSpec::sl(&[3, 4, 5], 0);
    let v = Representation::new(
        g.clone(),
        vec![IrredSummand::from_fundamental(
            &g,
            &[vec![1, 0], vec![1, 0, 0], vec![1, 0, 0, 0]],
            &[],
        )
        .unwrap()],
    )
    .unwrap();
    let e = |n: usize, i: usize| -> RatVec {
        (0..n)
            .map(|c| Rat::int(if c + 1 == i { 1 } else { 0 }) - Rat::new(1, n as i64))
            .collect()
    };
    let masses = [
        ((3, 3, 1), 4),
        ((3, 1, 2), 7),
        ((3, 1, 1), 8),
        ((2, 4, 2), 5),
        ((2, 2, 4), 3),
        ((2, 2, 3), 12),
        ((1, 4, 4), 9),
        ((1, 3, 5), 11),
        ((3, 4, 5), 1),
    ];
    let ws = rep_weight_set(&v).unwrap();
    let terms: Vec<RealizationTerm> = masses
        .iter()
        .map(|&((i, j, k), m)| {
            let weight: RatVec = [e(3, i), e(4, j), e(5, k)].concat();
            assert!(ws.contains(&weight));
            RealizationTerm {
                coeff: Rat::new(m, 60),
                weight,
            }
        })
        .collect();
    assert!(verify_realization(&terms));
    assert!(terms.len() <= g.semisimple_rank());
    assert!(!is_nondegenerate(&v).unwrap());
    assert!(classify_nondegenerate(&v).unwrap().nondegenerate);
}
