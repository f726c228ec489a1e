use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::modular::solve_mod;
use super::snf::{smith_diagonal, smith_with_rhs};
use super::IntMatrix;
use crate::error::{Error, Result};

/// `M x = b` where equation `i` holds modulo `row_moduli[i]` (0 means over
/// `Z`) and unknown `j` ranges over `Z/col_moduli[j]`.
///
/// An assignment `x` is a solution when some integer lift of it satisfies the
/// equations; the system is internally augmented with the columns
/// `col_moduli[j] * M e_j` so the solution set does not depend on the lift.
#[derive(Clone, Debug)]
pub struct CongruenceSystem {
    matrix: IntMatrix,
    rhs: Vec<BigInt>,
    row_moduli: Vec<u64>,
    col_moduli: Vec<u64>,
}

/// A particular solution (each coordinate reduced mod its column modulus)
/// and generators of the solution set of the homogeneous system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceSolution {
    pub particular: Vec<u64>,
    pub kernel: Vec<Vec<u64>>,
}

impl CongruenceSystem {
    pub fn new(
        matrix: IntMatrix,
        rhs: Vec<BigInt>,
        row_moduli: Vec<u64>,
        col_moduli: Vec<u64>,
    ) -> Result<Self> {
        if rhs.len() != matrix.rows() || row_moduli.len() != matrix.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{} equations but {} right-hand sides and {} row moduli",
                matrix.rows(),
                rhs.len(),
                row_moduli.len()
            )));
        }
        if col_moduli.len() != matrix.cols() {
            return Err(Error::DimensionMismatch(format!(
                "{} unknowns but {} column moduli",
                matrix.cols(),
                col_moduli.len()
            )));
        }
        if col_moduli.contains(&0) {
            return Err(Error::DimensionMismatch("column moduli must be at least 1".into()));
        }
        Ok(CongruenceSystem { matrix, rhs, row_moduli, col_moduli })
    }

    /// Every row and column shares the modulus `m`.
    pub fn uniform(matrix: IntMatrix, rhs: Vec<BigInt>, m: u64) -> Result<Self> {
        let (r, c) = (matrix.rows(), matrix.cols());
        Self::new(matrix, rhs, vec![m; r], vec![m; c])
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &[BigInt] {
        &self.rhs
    }

    pub fn row_moduli(&self) -> &[u64] {
        &self.row_moduli
    }

    pub fn col_moduli(&self) -> &[u64] {
        &self.col_moduli
    }

    fn uniform_modulus(&self) -> Option<u64> {
        let m = *self.col_moduli.first().or(self.row_moduli.first())?;
        (m > 0
            && self.row_moduli.iter().all(|&r| r == m)
            && self.col_moduli.iter().all(|&c| c == m))
        .then_some(m)
    }

    /// Whether every integer lift of an assignment gives the same residues.
    pub fn is_well_defined(&self) -> bool {
        (0..self.matrix.rows()).all(|i| {
            let rm = BigInt::from(self.row_moduli[i]);
            (0..self.matrix.cols()).all(|j| {
                let v = self.matrix.get(i, j) * BigInt::from(self.col_moduli[j]);
                if rm.is_zero() {
                    v.is_zero()
                } else {
                    v.is_multiple_of(&rm)
                }
            })
        })
    }

    /// Residues of `M x - b` for a given assignment.
    pub fn residual(&self, x: &[u64]) -> Vec<BigInt> {
        (0..self.matrix.rows())
            .map(|i| {
                let mut s = -self.rhs[i].clone();
                for (j, &xj) in x.iter().enumerate() {
                    s += self.matrix.get(i, j) * BigInt::from(xj);
                }
                let rm = self.row_moduli[i];
                if rm == 0 {
                    s
                } else {
                    s.mod_floor(&BigInt::from(rm))
                }
            })
            .collect()
    }

    /// Solve, using the single-modulus engine when applicable.
    pub fn solve(&self) -> Option<CongruenceSolution> {
        match self.uniform_modulus() {
            Some(m) => self.solve_uniform(m),
            None => self.solve_integer(),
        }
    }

    fn solve_uniform(&self, m: u64) -> Option<CongruenceSolution> {
        let bm = BigInt::from(m);
        let reduce = |x: &BigInt| x.mod_floor(&bm).to_u64().expect("reduced below modulus");
        let (r, c) = (self.matrix.rows(), self.matrix.cols());
        let mut data = Vec::with_capacity(r * c);
        for i in 0..r {
            for j in 0..c {
                data.push(reduce(self.matrix.get(i, j)));
            }
        }
        let rhs = self.rhs.iter().map(reduce).collect();
        let (particular, kernel) = solve_mod(m, data, r, c, rhs)?;
        Some(CongruenceSolution { particular, kernel })
    }

    /// Solve through the Smith normal form over `Z`, whatever the moduli.
    pub fn solve_integer(&self) -> Option<CongruenceSolution> {
        let (r, c) = (self.matrix.rows(), self.matrix.cols());
        let slack: Vec<usize> = (0..r).filter(|&i| self.row_moduli[i] != 0).collect();
        // [ M | M*diag(col_moduli) | diag(row_moduli) ]
        let width = 2 * c + slack.len();
        let mut aug = IntMatrix::zeros(r, width);
        for i in 0..r {
            for j in 0..c {
                let v = self.matrix.get(i, j);
                if v.is_zero() {
                    continue;
                }
                aug.set(i, j, v.clone());
                aug.set(i, c + j, v * BigInt::from(self.col_moduli[j]));
            }
        }
        for (k, &i) in slack.iter().enumerate() {
            aug.set(i, 2 * c + k, BigInt::from(self.row_moduli[i]));
        }

        let (d, v, ub) = smith_with_rhs(aug, self.rhs.clone());
        let diag = d.diagonal();
        let rank = diag.iter().take_while(|x| !x.is_zero()).count();
        let mut w = vec![BigInt::zero(); width];
        for t in 0..rank {
            let (q, rem) = ub[t].div_rem(&diag[t]);
            if !rem.is_zero() {
                return None;
            }
            w[t] = q;
        }
        if ub[rank..].iter().any(|x| !x.is_zero()) {
            return None;
        }

        let project = |z: &dyn Fn(usize) -> BigInt| -> Vec<u64> {
            (0..c)
                .map(|j| {
                    z(j).mod_floor(&BigInt::from(self.col_moduli[j]))
                        .to_u64()
                        .expect("reduced below modulus")
                })
                .collect()
        };
        let particular = project(&|j| {
            (0..width).fold(BigInt::zero(), |acc, k| acc + v.get(j, k) * &w[k])
        });
        let mut kernel: Vec<Vec<u64>> = Vec::new();
        for k in rank..width {
            let g = project(&|j| v.get(j, k).clone());
            if g.iter().any(|&x| x != 0) && !kernel.contains(&g) {
                kernel.push(g);
            }
        }
        Some(CongruenceSolution { particular, kernel })
    }
}

/// Invariant factors of `(Z/a_1 x ... x Z/a_k) / <columns of relations>`.
///
/// The result is in divisibility order `d_1 | d_2 | ...`, every entry > 1;
/// the trivial quotient yields an empty list. An ambient modulus of 0 stands
/// for a free factor `Z`, which shows up as trailing zeros.
pub fn quotient_invariants(relations: &IntMatrix, ambient_moduli: &[u64]) -> Vec<u64> {
    let a = ambient_moduli.len();
    assert_eq!(relations.rows(), a, "relations must live in the ambient group");
    let s = relations.cols();
    let mut pres = IntMatrix::zeros(a, s + a);
    for (i, &mi) in ambient_moduli.iter().enumerate() {
        for j in 0..s {
            let v = relations.get(i, j);
            if mi == 0 {
                pres.set(i, j, v.clone());
            } else {
                pres.set(i, j, v.mod_floor(&BigInt::from(mi)));
            }
        }
        pres.set(i, s + i, BigInt::from(mi));
    }
    let diag = smith_diagonal(pres);
    let mut out: Vec<u64> = diag
        .iter()
        .map(|d| d.to_u64().expect("invariant factor fits in u64"))
        .filter(|&d| d != 1)
        .collect();
    // SNF diagonal has min(rows, cols) = a entries; zero entries (free parts)
    // already sit at the end.
    out.truncate(a);
    out
}
