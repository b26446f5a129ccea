//! Deciding whether a cone `A` is covered by a finite union of cones.
//!
//! Everything is moved into coordinates on the span of `A`. Walls are cut
//! down to that span; pieces of lower dimension cannot cover an open subset
//! and are recorded as discarded, though a hyperplane containing each one
//! still joins the arrangement so sample points avoid them. The interior of
//! `A` is split into the open cells of the arrangement formed by the facet
//! hyperplanes of `A` and of every full-dimensional piece. Membership in
//! each piece is constant on a cell, so one exact sample per cell decides
//! the question.

use crate::cone::{cone_contains, cone_intersect_subspace, facet_normals, Cone, Membership};
use crate::error::{dim_err, Result};
use crate::linalg::{
    clear_denominators, dot, independent_subset, kernel_basis, lin_comb, primitive, primitive_line,
    solve, unit_vec, EchelonBasis, RatMat, RatVec,
};
use crate::lp::solve_inequalities;
use crate::rat::Rat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A wall piece discarded because its intersection with the span of `A`
/// has dimension below `dim A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscardedWall {
    pub wall: usize,
    pub dim: usize,
}

/// One open cell of the arrangement inside `A`, with the wall covering it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveredCell {
    /// Sample point in ambient coordinates (primitive integer).
    pub sample: RatVec,
    pub wall: usize,
    /// Coefficients of `sample` on the wall's generators.
    pub coeffs: RatVec,
}

/// A point of `A` outside every wall, with certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UncoveredWitness {
    /// The point, primitive integer, in ambient coordinates.
    pub theta: RatVec,
    /// Coefficients of `theta` on the generators of `A`.
    pub in_cone: RatVec,
    /// For each wall, a functional nonnegative on the wall and negative at `theta`.
    pub separators: Vec<RatVec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverOutcome {
    Covered { cells: Vec<CoveredCell> },
    Uncovered(UncoveredWitness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub outcome: CoverOutcome,
    pub discarded: Vec<DiscardedWall>,
    /// Dimension of `A`.
    pub dim: usize,
    pub hyperplanes: usize,
    pub cells: usize,
}

impl CoverReport {
    pub fn is_covered(&self) -> bool {
        matches!(self.outcome, CoverOutcome::Covered { .. })
    }

    pub fn witness(&self) -> Option<&UncoveredWitness> {
        match &self.outcome {
            CoverOutcome::Uncovered(w) => Some(w),
            CoverOutcome::Covered { .. } => None,
        }
    }
}

struct Cell {
    constraints: Vec<RatVec>,
    sample: RatVec,
}

fn interior_point(constraints: &[RatVec], d: usize) -> Result<Option<RatVec>> {
    let ones = vec![Rat::one(); constraints.len()];
    solve_inequalities(constraints, &ones, d)
}

fn lex_key(v: &[Rat]) -> Vec<num::BigInt> {
    clear_denominators(v).1
}

/// Decides whether `A ⊆ ⋃ walls`. Covering is decided exactly; a returned
/// witness carries a membership certificate for `A` and a separating
/// functional for every wall.
pub fn cone_covered_by_union(a: &Cone, walls: &[Cone]) -> Result<CoverReport> {
    let n = a.dim;
    if let Some(w) = walls.iter().find(|w| w.dim != n) {
        return dim_err(format!(
            "wall of dimension {} against a cone of dimension {n}",
            w.dim
        ));
    }
    if a.is_zero() {
        return Ok(CoverReport {
            outcome: CoverOutcome::Covered { cells: vec![] },
            discarded: vec![],
            dim: 0,
            hyperplanes: 0,
            cells: 0,
        });
    }
    // Coordinates on span(A): x = B y.
    let basis_idx = independent_subset(&a.generators, n);
    let basis: Vec<RatVec> = basis_idx.iter().map(|&i| a.generators[i].clone()).collect();
    let d = basis.len();
    let bmat = RatMat::from_cols(&basis, n)?;
    let to_y =
        |x: &[Rat]| -> Result<RatVec> { Ok(solve(&bmat, x)?.expect("point lies in span(A)")) };
    let to_x = |y: &[Rat]| -> RatVec { lin_comb(y, &basis, n) };
    let mut span = EchelonBasis::new(n);
    for b in &basis {
        span.insert(b);
    }
    let perp = span.complement();
    let p = RatMat::from_rows(&perp, n)?;

    let a_y = Cone::new(
        d,
        a.generators
            .iter()
            .map(|g| to_y(g))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let a_facets = if d == 0 { vec![] } else { facet_normals(&a_y)? };

    let mut pieces: Vec<(usize, Cone, Vec<RatVec>)> = Vec::new();
    let mut discarded = Vec::new();
    let mut hyper: BTreeSet<RatVec> = BTreeSet::new();
    for (wi, w) in walls.iter().enumerate() {
        let piece = if perp.is_empty() {
            w.clone()
        } else {
            cone_intersect_subspace(w, &p)?
        };
        let piece_y = Cone::new(
            d,
            piece
                .generators
                .iter()
                .map(|g| to_y(g))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let pd = piece_y.span_dim();
        if pd < d {
            discarded.push(DiscardedWall { wall: wi, dim: pd });
            let normal = if piece_y.is_zero() {
                unit_vec(d, 0)
            } else {
                kernel_basis(&RatMat::from_rows(&piece_y.generators, d)?)
                    .into_iter()
                    .next()
                    .expect("deficient rank")
            };
            hyper.insert(primitive_line(&normal));
        } else {
            let f = facet_normals(&piece_y)?;
            for h in &f {
                hyper.insert(primitive_line(h));
            }
            pieces.push((wi, piece_y, f));
        }
    }
    let a_lines: BTreeSet<RatVec> = a_facets.iter().map(|f| primitive_line(f)).collect();
    let split_planes: Vec<RatVec> = hyper.into_iter().filter(|h| !a_lines.contains(h)).collect();

    let start = interior_point(&a_facets, d)?.expect("a full-dimensional cone has interior points");
    let mut cells = vec![Cell {
        constraints: a_facets.clone(),
        sample: start,
    }];
    for h in &split_planes {
        let mut next = Vec::with_capacity(cells.len() * 2);
        for cell in cells {
            let s = dot(h, &cell.sample);
            let other: RatVec = if s.is_positive() {
                h.iter().map(|x| -x).collect()
            } else {
                h.clone()
            };
            let mut cons = cell.constraints.clone();
            cons.push(other.clone());
            if let Some(pt) = interior_point(&cons, d)? {
                if s.is_zero() {
                    // The sample sits on h: both sides must be re-sampled.
                    let mut neg_cons = cell.constraints.clone();
                    let flipped: RatVec = h.iter().map(|x| -x).collect();
                    neg_cons.push(flipped);
                    let q = interior_point(&neg_cons, d)?.expect("cell is split by h");
                    next.push(Cell {
                        constraints: cons,
                        sample: pt,
                    });
                    next.push(Cell {
                        constraints: neg_cons,
                        sample: q,
                    });
                } else {
                    let mut same = cell.constraints;
                    same.push(if s.is_positive() {
                        h.clone()
                    } else {
                        h.iter().map(|x| -x).collect()
                    });
                    next.push(Cell {
                        constraints: same,
                        sample: cell.sample,
                    });
                    next.push(Cell {
                        constraints: cons,
                        sample: pt,
                    });
                }
            } else {
                next.push(cell);
            }
        }
        cells = next;
    }

    let ncells = cells.len();
    let mut covered = Vec::with_capacity(ncells);
    let mut uncovered: Vec<RatVec> = Vec::new();
    for cell in &cells {
        let mut hit = None;
        for (wi, piece, facets) in &pieces {
            if facets.iter().all(|f| dot(f, &cell.sample).is_positive()) {
                hit = Some((*wi, piece));
                break;
            }
        }
        let x = primitive(&to_x(&cell.sample));
        match hit {
            Some((wi, _)) => {
                let wall = &walls[wi];
                match cone_contains(wall, &x)? {
                    Membership::Inside { coeffs } => covered.push(CoveredCell {
                        sample: x,
                        wall: wi,
                        coeffs,
                    }),
                    Membership::Outside { .. } => {
                        unreachable!("cell sample inside a full-dimensional piece")
                    }
                }
            }
            None => uncovered.push(x),
        }
    }
    let outcome = if uncovered.is_empty() {
        CoverOutcome::Covered { cells: covered }
    } else {
        uncovered.sort_by_key(|x| lex_key(x));
        let theta = uncovered.swap_remove(0);
        let in_cone = match cone_contains(a, &theta)? {
            Membership::Inside { coeffs } => coeffs,
            Membership::Outside { .. } => unreachable!("cell samples lie in A"),
        };
        let mut separators = Vec::with_capacity(walls.len());
        for w in walls {
            match cone_contains(w, &theta)? {
                Membership::Outside { functional } => separators.push(functional),
                Membership::Inside { .. } => unreachable!("uncovered sample lies in a wall"),
            }
        }
        CoverOutcome::Uncovered(UncoveredWitness {
            theta,
            in_cone,
            separators,
        })
    };
    Ok(CoverReport {
        outcome,
        discarded,
        dim: d,
        hyperplanes: split_planes.len() + a_lines.len(),
        cells: ncells,
    })
}

/// Checks an uncovered witness against `A` and the walls.
pub fn verify_witness(a: &Cone, walls: &[Cone], w: &UncoveredWitness) -> bool {
    let inside = Membership::Inside {
        coeffs: w.in_cone.clone(),
    };
    if !inside.verify(a, &w.theta) || crate::linalg::is_zero_vec(&w.theta) {
        return false;
    }
    w.separators.len() == walls.len()
        && walls.iter().zip(&w.separators).all(|(c, f)| {
            Membership::Outside {
                functional: f.clone(),
            }
            .verify(c, &w.theta)
        })
}

/// Checks every covered cell's membership coefficients.
pub fn verify_cells(walls: &[Cone], cells: &[CoveredCell]) -> bool {
    cells.iter().all(|c| {
        c.wall < walls.len()
            && Membership::Inside {
                coeffs: c.coeffs.clone(),
            }
            .verify(&walls[c.wall], &c.sample)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_vec;

    fn cone(dim: usize, gens: &[&[i64]]) -> Cone {
        Cone::new(dim, gens.iter().map(|g| int_vec(g))).unwrap()
    }

    #[test]
    fn zero_cone_is_covered() {
        let r = cone_covered_by_union(&Cone::zero(3), &[]).unwrap();
        assert!(r.is_covered());
    }

    #[test]
    fn quadrant_covered_by_two_halves() {
        let a = cone(2, &[&[1, 0], &[0, 1]]);
        let w1 = cone(2, &[&[1, 0], &[1, 1]]);
        let w2 = cone(2, &[&[0, 1], &[1, 1]]);
        let r = cone_covered_by_union(&a, &[w1.clone(), w2.clone()]).unwrap();
        assert!(r.is_covered());
        if let CoverOutcome::Covered { cells } = &r.outcome {
            assert!(verify_cells(&[w1.clone(), w2.clone()], cells));
        }
        let r = cone_covered_by_union(&a, &[w1.clone()]).unwrap();
        let w = r.witness().expect("uncovered");
        assert!(verify_witness(&a, &[w1], w));
    }

    #[test]
    fn rays_do_not_cover_a_plane_region() {
        let a = cone(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let walls = vec![cone(3, &[&[1, 1, 0]]), cone(3, &[&[1, 0, 5]])];
        let r = cone_covered_by_union(&a, &walls).unwrap();
        assert_eq!(r.dim, 2);
        assert_eq!(r.discarded.len(), 2);
        let w = r.witness().unwrap();
        assert!(verify_witness(&a, &walls, w));
    }

    #[test]
    fn full_space_covered_by_half_planes() {
        let a = cone(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let up = cone(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        let down = cone(2, &[&[1, 0], &[-1, 0], &[0, -1]]);
        assert!(cone_covered_by_union(&a, &[up.clone(), down])
            .unwrap()
            .is_covered());
        assert!(!cone_covered_by_union(&a, &[up]).unwrap().is_covered());
    }
}
