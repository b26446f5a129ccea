//! Exact linear feasibility with Farkas certificates.
//!
//! Phase-one simplex on a dense rational tableau with Bland's rule, so it
//! always terminates. Strict positivity on a subset of coordinates is
//! handled by homogenizing: `x = y / τ` with `y_S ≥ 1`, `τ ≥ 1`.

use crate::error::{dim_err, Result};
use crate::linalg::{dot, RatMat, RatVec};
use crate::rat::Rat;
use serde::{Deserialize, Serialize};

/// Infeasibility certificate for `{x ≥ 0, Ax = b, x_S > 0}`.
///
/// It certifies infeasibility when `yᵀA ≤ 0` entrywise, `yᵀb ≥ 0`, and
/// `yᵀb − Σ_{j∈S} yᵀA_j > 0`. For an empty `S` this is the classical
/// Farkas alternative `yᵀA ≤ 0 < yᵀb`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarkasCertificate {
    pub y: RatVec,
    pub strict: Vec<usize>,
}

impl FarkasCertificate {
    pub fn verify(&self, a: &RatMat, b: &[Rat]) -> bool {
        if self.y.len() != a.rows() || b.len() != a.rows() {
            return false;
        }
        let Ok(ya) = a.left_mul_vec(&self.y) else {
            return false;
        };
        if ya.iter().any(|v| v.is_positive()) {
            return false;
        }
        let yb = dot(&self.y, b);
        if yb.is_negative() {
            return false;
        }
        let mut slack = yb;
        for &j in &self.strict {
            if j >= a.cols() {
                return false;
            }
            slack -= &ya[j];
        }
        slack.is_positive()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(RatVec),
    Infeasible(FarkasCertificate),
}

impl LpOutcome {
    pub fn point(&self) -> Option<&RatVec> {
        match self {
            LpOutcome::Feasible(x) => Some(x),
            LpOutcome::Infeasible(_) => None,
        }
    }

    pub fn into_point(self) -> Option<RatVec> {
        match self {
            LpOutcome::Feasible(x) => Some(x),
            LpOutcome::Infeasible(_) => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible(_))
    }
}

/// Result of phase one: either a basic feasible point or dual multipliers.
enum Phase1 {
    Point(RatVec),
    Dual(RatVec),
}

fn phase1(a: &RatMat, b: &[Rat]) -> Phase1 {
    let (m, n) = (a.rows(), a.cols());
    if m == 0 {
        return Phase1::Point(vec![Rat::zero(); n]);
    }
    let width = n + m + 1;
    let rhs = n + m;
    let mut sign = vec![false; m];
    let mut t: Vec<RatVec> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        sign[i] = flip;
        let mut row = vec![Rat::zero(); width];
        for j in 0..n {
            row[j] = if flip { -&a[(i, j)] } else { a[(i, j)].clone() };
        }
        row[n + i] = Rat::one();
        row[rhs] = b[i].abs();
        t.push(row);
    }
    let mut cost = vec![Rat::zero(); width];
    for j in 0..n {
        cost[j] = -t.iter().map(|r| &r[j]).sum::<Rat>();
    }
    for j in n..n + m {
        cost[j] = Rat::zero();
    }
    cost[rhs] = -t.iter().map(|r| &r[rhs]).sum::<Rat>();
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        let Some(e) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if !t[i][e].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][e];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (r, _) = leave.expect("phase one is bounded below");
        pivot(&mut t, &mut cost, r, e);
        basis[r] = e;
    }

    let objective = -&cost[rhs];
    if objective.is_positive() {
        let y = (0..m)
            .map(|i| {
                let yi = Rat::one() - &cost[n + i];
                if sign[i] {
                    -yi
                } else {
                    yi
                }
            })
            .collect();
        Phase1::Dual(y)
    } else {
        let mut x = vec![Rat::zero(); n];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < n {
                x[bv] = t[i][rhs].clone();
            }
        }
        Phase1::Point(x)
    }
}

fn pivot(t: &mut [RatVec], cost: &mut RatVec, r: usize, e: usize) {
    let inv = t[r][e].recip();
    if !inv.is_one() {
        for x in t[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
    }
    let prow = t[r].clone();
    let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[e].is_zero() {
            continue;
        }
        let f = row[e].clone();
        for &j in &nz {
            row[j] = &row[j] - &(&f * &prow[j]);
        }
    }
    if !cost[e].is_zero() {
        let f = cost[e].clone();
        for &j in &nz {
            cost[j] = &cost[j] - &(&f * &prow[j]);
        }
    }
}

/// Decides `{x ≥ 0 : Ax = b, x_j > 0 for j ∈ strict}`.
///
/// Returns a feasible point or a certificate that verifies against `(A, b)`.
pub fn lp_feasible(a: &RatMat, b: &[Rat], strict: &[usize]) -> Result<LpOutcome> {
    if b.len() != a.rows() {
        return dim_err(format!(
            "A has {} rows but b has {} entries",
            a.rows(),
            b.len()
        ));
    }
    if let Some(&j) = strict.iter().find(|&&j| j >= a.cols()) {
        return dim_err(format!(
            "strict index {j} out of range for {} columns",
            a.cols()
        ));
    }
    let mut strict: Vec<usize> = strict.to_vec();
    strict.sort_unstable();
    strict.dedup();
    if strict.is_empty() {
        return Ok(match phase1(a, b) {
            Phase1::Point(x) => LpOutcome::Feasible(x),
            Phase1::Dual(y) => LpOutcome::Infeasible(FarkasCertificate { y, strict }),
        });
    }
    // Homogenized system in (y, σ): A y − b σ = b − Σ_{j∈S} A_j, with y_S shifted by one.
    let (m, n) = (a.rows(), a.cols());
    let mut h = RatMat::zeros(m, n + 1);
    let mut rhs = b.to_vec();
    for i in 0..m {
        for j in 0..n {
            h[(i, j)] = a[(i, j)].clone();
        }
        h[(i, n)] = -&b[i];
        for &j in &strict {
            rhs[i] -= &a[(i, j)];
        }
    }
    Ok(match phase1(&h, &rhs) {
        Phase1::Point(z) => {
            let tau = Rat::one() + &z[n];
            let mut x: RatVec = z[..n].to_vec();
            for &j in &strict {
                x[j] += Rat::one();
            }
            let inv = tau.recip();
            LpOutcome::Feasible(x.iter().map(|v| v * &inv).collect())
        }
        Phase1::Dual(y) => LpOutcome::Infeasible(FarkasCertificate { y, strict }),
    })
}

/// Finds `x` (free) with `G x ≥ h` entrywise, or `None` if there is none.
pub fn solve_inequalities(g: &[RatVec], h: &[Rat], dim: usize) -> Result<Option<RatVec>> {
    if g.len() != h.len() {
        return dim_err("inequality rows and right-hand sides differ in length");
    }
    let m = g.len();
    // Variables: x⁺ (dim), x⁻ (dim), surplus (m).
    let mut a = RatMat::zeros(m, 2 * dim + m);
    for (i, row) in g.iter().enumerate() {
        if row.len() != dim {
            return dim_err(format!(
                "inequality row {i} has length {}, expected {dim}",
                row.len()
            ));
        }
        for j in 0..dim {
            a[(i, j)] = row[j].clone();
            a[(i, dim + j)] = -&row[j];
        }
        a[(i, 2 * dim + i)] = -Rat::one();
    }
    Ok(lp_feasible(&a, h, &[])?
        .into_point()
        .map(|z| (0..dim).map(|j| &z[j] - &z[dim + j]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_vec;

    fn check_point(a: &RatMat, b: &[Rat], strict: &[usize], x: &[Rat]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        assert_eq!(a.mul_vec(x).unwrap(), b.to_vec());
        for &j in strict {
            assert!(x[j].is_positive());
        }
    }

    #[test]
    fn feasible_examples() {
        let a = RatMat::from_i64(&[&[1, 1]]);
        let b = int_vec(&[2]);
        let x = lp_feasible(&a, &b, &[]).unwrap().into_point().unwrap();
        check_point(&a, &b, &[], &x);

        let a = RatMat::from_i64(&[&[1, -1]]);
        let b = int_vec(&[0]);
        let x = lp_feasible(&a, &b, &[0, 1]).unwrap().into_point().unwrap();
        check_point(&a, &b, &[0, 1], &x);
        assert_eq!(x[0], x[1]);
    }

    #[test]
    fn infeasible_example() {
        let a = RatMat::from_i64(&[&[1, 0], &[0, 1], &[0, 0]]);
        let b = int_vec(&[1, 1, 1]);
        match lp_feasible(&a, &b, &[]).unwrap() {
            LpOutcome::Infeasible(c) => {
                assert!(c.verify(&a, &b));
                assert!(c.y[2].is_positive());
            }
            LpOutcome::Feasible(_) => panic!("expected infeasible"),
        }
    }

    #[test]
    fn strict_infeasible() {
        // x0 − x1 = 0 and x1 = 0 force x0 = 0.
        let a = RatMat::from_i64(&[&[1, -1], &[0, 1]]);
        let b = int_vec(&[0, 0]);
        assert!(lp_feasible(&a, &b, &[]).unwrap().is_feasible());
        match lp_feasible(&a, &b, &[0]).unwrap() {
            LpOutcome::Infeasible(c) => assert!(c.verify(&a, &b)),
            LpOutcome::Feasible(x) => panic!("unexpected point {x:?}"),
        }
    }

    #[test]
    fn dimension_mismatch() {
        let a = RatMat::from_i64(&[&[1, 1]]);
        assert!(lp_feasible(&a, &int_vec(&[1, 2]), &[]).is_err());
        assert!(lp_feasible(&a, &int_vec(&[1]), &[5]).is_err());
    }

    #[test]
    fn inequalities() {
        let g = vec![int_vec(&[1, 0]), int_vec(&[0, -1])];
        let x = solve_inequalities(&g, &int_vec(&[0, 1]), 2)
            .unwrap()
            .unwrap();
        assert!(!x[0].is_negative());
        assert!(x[1] <= Rat::int(-1));
        let g = vec![int_vec(&[1]), int_vec(&[-1])];
        assert!(solve_inequalities(&g, &int_vec(&[1, 0]), 1)
            .unwrap()
            .is_none());
    }
}
