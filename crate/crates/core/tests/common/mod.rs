//! Shared input grids for integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use weylgen::rep::{GroupSpec, IrredSummand, Representation};

/// Fundamental coordinates of the factor menu for `SL(n)`: standard, dual
/// standard, `Λ²` for `n ≥ 4`, and `Sym²`, `Sym³` for `n = 2`. Isomorphic
/// entries are listed once.
pub fn sl_menu(n: usize) -> Vec<Vec<i64>> {
    let unit = |i: usize| {
        let mut c = vec![0; n - 1];
        c[i] = 1;
        c
    };
    match n {
        2 => vec![vec![1], vec![2], vec![3]],
        3 => vec![unit(0), unit(1)],
        _ => vec![unit(0), unit(n - 2), unit(1)],
    }
}

/// Products of at most three factors from `SL(2..=5)` (as multisets), with
/// one summand or two distinct summands, each summand a tensor product of
/// menu entries.
pub fn classification_grid() -> Vec<Representation> {
    let mut out = Vec::new();
    for k in 1..=3 {
        for ns in [2usize, 3, 4, 5]
            .into_iter()
            .combinations_with_replacement(k)
        {
            let g = GroupSpec::sl(&ns, 0);
            let singles: Vec<Vec<Vec<i64>>> = ns
                .iter()
                .map(|&n| sl_menu(n))
                .multi_cartesian_product()
                .collect();
            let summand = |p: &Vec<Vec<i64>>| IrredSummand::from_fundamental(&g, p, &[]).unwrap();
            for p in &singles {
                out.push(Representation::new(g.clone(), vec![summand(p)]).unwrap());
            }
            for (p, q) in singles.iter().tuple_combinations() {
                out.push(Representation::new(g.clone(), vec![summand(p), summand(q)]).unwrap());
            }
        }
    }
    out
}

/// A key identifying the weight set of `V|_H` up to negating the weights of
/// any subset of the simple factors. Such sign changes are linear
/// automorphisms, so every degeneracy invariant is constant on a key.
pub fn weight_set_key(v: &Representation) -> Vec<Vec<weylgen::rat::Rat>> {
    let h = v.semisimple_part();
    let ws = weylgen::rep::rep_weight_set(&h).unwrap();
    let offsets = h.group.block_offsets();
    let dims = h.group.block_dims();
    let k = dims.len();
    (0..1u32 << k)
        .map(|flips| {
            let mut w: Vec<Vec<weylgen::rat::Rat>> = ws
                .weights
                .iter()
                .map(|x| {
                    let mut y = x.clone();
                    for b in 0..k {
                        if flips >> b & 1 == 1 {
                            for c in &mut y[offsets[b]..offsets[b] + dims[b]] {
                                *c = -c.clone();
                            }
                        }
                    }
                    y
                })
                .collect();
            w.sort();
            w.insert(
                0,
                h.group
                    .block_dims()
                    .iter()
                    .map(|&d| weylgen::rat::Rat::int(d as i64))
                    .collect(),
            );
            w
        })
        .min()
        .unwrap()
}

/// `SL(2) × (C*)^k` representations with `k ∈ {1, 2}`: one to three
/// distinct summands `Sym^n ⊗ C_d`, `n ≤ 4`, `d ∈ {−2, …, 2}^k`, listed once
/// per orbit of the signed permutations of the torus coordinates.
pub fn sl2_torus_grid() -> Vec<Representation> {
    let mut out = Vec::new();
    for k in 1..=2usize {
        let g = GroupSpec::sl(&[2], k);
        let pieces: Vec<(i64, Vec<i64>)> = (0..=4)
            .flat_map(|n| {
                (0..k)
                    .map(|_| -2..=2i64)
                    .multi_cartesian_product()
                    .map(move |d| (n, d))
            })
            .collect();
        let symmetries: Vec<(Vec<usize>, Vec<i64>)> = (0..k)
            .permutations(k)
            .flat_map(|p| {
                (0..k)
                    .map(|_| [1i64, -1])
                    .multi_cartesian_product()
                    .map(move |s| (p.clone(), s))
            })
            .collect();
        let canonical = |set: &[&(i64, Vec<i64>)]| -> Vec<(i64, Vec<i64>)> {
            symmetries
                .iter()
                .map(|(p, s)| {
                    let mut v: Vec<(i64, Vec<i64>)> = set
                        .iter()
                        .map(|(n, d)| (*n, (0..k).map(|i| s[i] * d[p[i]]).collect()))
                        .collect();
                    v.sort();
                    v
                })
                .min()
                .unwrap()
        };
        let mut seen = std::collections::HashSet::new();
        for size in 1..=3 {
            for set in pieces.iter().combinations(size) {
                let key = canonical(&set);
                if !seen.insert(key) {
                    continue;
                }
                let summands = set
                    .iter()
                    .map(|(n, d)| IrredSummand::from_fundamental(&g, &[vec![*n]], d).unwrap())
                    .collect();
                out.push(Representation::new(g.clone(), summands).unwrap());
            }
        }
    }
    out
}

/// Simple tensors `V_H ⊗ V_D`: `V_H` is `Sym^n` (`n ≤ 4`) of `SL(2)` or the
/// standard representation of `SL(3)` or its dual; `V_D` has one to three
/// distinct characters in `{−2, …, 2}^k`, `k ∈ {1, 2}`, listed once per orbit
/// of the signed permutations of the torus coordinates.
pub fn tensor_grid() -> Vec<(Representation, Vec<Vec<weylgen::rat::Rat>>, usize)> {
    let mut hs: Vec<Representation> = Vec::new();
    let sl2 = GroupSpec::sl(&[2], 0);
    for n in 0..=4 {
        hs.push(
            Representation::new(
                sl2.clone(),
                vec![IrredSummand::from_fundamental(&sl2, &[vec![n]], &[]).unwrap()],
            )
            .unwrap(),
        );
    }
    let sl3 = GroupSpec::sl(&[3], 0);
    for c in sl_menu(3) {
        hs.push(
            Representation::new(
                sl3.clone(),
                vec![IrredSummand::from_fundamental(&sl3, &[c], &[]).unwrap()],
            )
            .unwrap(),
        );
    }
    let mut out = Vec::new();
    for k in 1..=2usize {
        let chars: Vec<Vec<i64>> = (0..k)
            .map(|_| -2..=2i64)
            .multi_cartesian_product()
            .collect();
        let symmetries: Vec<(Vec<usize>, Vec<i64>)> = (0..k)
            .permutations(k)
            .flat_map(|p| {
                (0..k)
                    .map(|_| [1i64, -1])
                    .multi_cartesian_product()
                    .map(move |s| (p.clone(), s))
            })
            .collect();
        let mut seen = std::collections::HashSet::new();
        for size in 1..=3 {
            for set in chars.iter().combinations(size) {
                let key = symmetries
                    .iter()
                    .map(|(p, s)| {
                        let mut v: Vec<Vec<i64>> = set
                            .iter()
                            .map(|d| (0..k).map(|i| s[i] * d[p[i]]).collect())
                            .collect();
                        v.sort();
                        v
                    })
                    .min()
                    .unwrap();
                if !seen.insert(key) {
                    continue;
                }
                let ds: Vec<Vec<weylgen::rat::Rat>> =
                    set.iter().map(|d| weylgen::linalg::int_vec(d)).collect();
                for h in &hs {
                    out.push((h.clone(), ds.clone(), k));
                }
            }
        }
    }
    out
}
