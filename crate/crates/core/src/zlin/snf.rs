use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal,
/// `d[0] | d[1] | ...`, all diagonal entries non-negative (zeros last).
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

/// Smith normal form with deterministic pivoting: the pivot is the entry of
/// smallest nonzero absolute value, ties broken by lowest row-major index.
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let mut e = Eliminator::new(m.clone(), true, true, None);
    e.run();
    Smith {
        u: e.u.expect("tracked"),
        d: e.a,
        v: e.v.expect("tracked"),
    }
}

/// Diagonal of the Smith form only; skips the transform bookkeeping.
pub(crate) fn smith_diagonal(m: IntMatrix) -> Vec<BigInt> {
    let mut e = Eliminator::new(m, false, false, None);
    e.run();
    e.a.diagonal()
}

/// Smith form that applies the row transform to a right-hand side instead of
/// materializing `u`. Returns `(d, v, u * rhs)`.
pub(crate) fn smith_with_rhs(m: IntMatrix, rhs: Vec<BigInt>) -> (IntMatrix, IntMatrix, Vec<BigInt>) {
    let mut e = Eliminator::new(m, false, true, Some(rhs));
    e.run();
    (e.a, e.v.expect("tracked"), e.rhs.expect("tracked"))
}

struct Eliminator {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
    rhs: Option<Vec<BigInt>>,
}

impl Eliminator {
    fn new(a: IntMatrix, track_u: bool, track_v: bool, rhs: Option<Vec<BigInt>>) -> Self {
        let u = track_u.then(|| IntMatrix::identity(a.rows()));
        let v = track_v.then(|| IntMatrix::identity(a.cols()));
        Eliminator { a, u, v, rhs }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
        if let Some(b) = &mut self.rhs {
            b.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.sub_row_multiple(dst, src, q);
        if let Some(u) = &mut self.u {
            u.sub_row_multiple(dst, src, q);
        }
        if let Some(b) = &mut self.rhs {
            let delta = q * &b[src];
            b[dst] -= delta;
        }
    }

    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.sub_col_multiple(dst, src, q);
        if let Some(v) = &mut self.v {
            v.sub_col_multiple(dst, src, q);
        }
    }

    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        if let Some(u) = &mut self.u {
            u.negate_row(r);
        }
        if let Some(b) = &mut self.rhs {
            b[r] = -std::mem::take(&mut b[r]);
        }
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                    let unit = ax == BigInt::from(1);
                    best = Some(((i, j), ax));
                    if unit {
                        return best.map(|(p, _)| p);
                    }
                }
            }
        }
        best.map(|(p, _)| p)
    }

    fn run(&mut self) {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        for t in 0..rows.min(cols) {
            let Some((pi, pj)) = self.find_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..rows {
                    if self.a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = self.a.get(i, t).div_floor(self.a.get(t, t));
                    self.sub_row(i, t, &q);
                    if !self.a.get(i, t).is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..cols {
                    if self.a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = self.a.get(t, j).div_floor(self.a.get(t, t));
                    self.sub_col(j, t, &q);
                    if !self.a.get(t, j).is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    // Remainders are smaller than the pivot; move the smallest in.
                    let mut best = (t, t, self.a.get(t, t).abs());
                    for i in t + 1..rows {
                        let x = self.a.get(i, t);
                        if !x.is_zero() && x.abs() < best.2 {
                            best = (i, t, x.abs());
                        }
                    }
                    for j in t + 1..cols {
                        let x = self.a.get(t, j);
                        if !x.is_zero() && x.abs() < best.2 {
                            best = (t, j, x.abs());
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                // Divisibility: fold an offending row into the pivot row.
                let p = self.a.get(t, t).clone();
                let offender = (t + 1..rows).find(|&i| {
                    (t + 1..cols).any(|j| !self.a.get(i, j).is_multiple_of(&p))
                });
                match offender {
                    Some(i) => {
                        let minus_one = BigInt::from(-1);
                        self.sub_row(t, i, &minus_one);
                    }
                    None => break,
                }
            }
            if self.a.get(t, t).is_negative() {
                self.negate_row(t);
            }
        }
    }
}
