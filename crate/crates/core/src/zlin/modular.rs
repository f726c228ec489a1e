//! Diagonalization over `Z/m` for systems with a single modulus.
//!
//! `Z/m` is a principal ideal ring, so every matrix over it can be brought to
//! diagonal form by invertible row and column operations. Pivots are chosen
//! with the smallest `gcd(entry, m)`, ties broken by lowest row-major index.
//! When an entry below (or right of) the pivot is not a multiple of the pivot
//! ideal, a 2x2 Bezout transform with determinant 1 replaces the pivot by the
//! integer gcd; `gcd(pivot, m)` then strictly decreases, which bounds the
//! number of sweeps.

use super::ext_gcd;

/// `M x = b (mod m)` with `x` in `(Z/m)^cols`.
///
/// `matrix` is row-major with `rows * cols` entries already reduced mod `m`.
/// Returns a particular solution and generators of the solution module of the
/// homogeneous system, or `None` when the system is inconsistent.
pub fn solve_mod(
    m: u64,
    matrix: Vec<u64>,
    rows: usize,
    cols: usize,
    rhs: Vec<u64>,
) -> Option<(Vec<u64>, Vec<Vec<u64>>)> {
    assert!(m > 0, "modulus must be positive");
    assert_eq!(matrix.len(), rows * cols);
    assert_eq!(rhs.len(), rows);
    if m == 1 {
        return Some((vec![0; cols], Vec::new()));
    }
    let mut e = ModEliminator { m, a: matrix, rows, cols, b: rhs, v: identity(cols) };
    let rank = e.diagonalize();

    let mut y = vec![0u64; cols];
    let mut gens_y: Vec<Vec<u64>> = Vec::new();
    for t in 0..rank {
        let d = e.a[t * cols + t];
        let g = gcd(d, m);
        let bt = e.b[t];
        if !bt.is_multiple_of(g) {
            return None;
        }
        let mg = m / g;
        y[t] = mul_mod(bt / g, inv_mod(d / g % mg, mg), mg);
        if g > 1 {
            let mut gen = vec![0u64; cols];
            gen[t] = mg;
            gens_y.push(gen);
        }
    }
    if e.b[rank..].iter().any(|&x| x != 0) {
        return None;
    }
    for t in rank..cols {
        let mut gen = vec![0u64; cols];
        gen[t] = 1;
        gens_y.push(gen);
    }

    let x = e.apply_v(&y);
    let kernel = gens_y
        .iter()
        .map(|g| e.apply_v(g))
        .filter(|g| g.iter().any(|&c| c != 0))
        .collect();
    Some((x, kernel))
}

/// Diagonal entries (nonzero ones, in pivot order) of a diagonal form of the
/// matrix over `Z/m`. The image of the matrix has order
/// `prod m / gcd(d, m)` over the returned entries.
pub(crate) fn diagonal_mod(m: u64, matrix: Vec<u64>, rows: usize, cols: usize) -> Vec<u64> {
    if m == 1 {
        return Vec::new();
    }
    let mut e = ModEliminator { m, a: matrix, rows, cols, b: vec![0; rows], v: Vec::new() };
    let rank = e.diagonalize();
    (0..rank).map(|t| e.a[t * cols + t]).collect()
}

fn identity(n: usize) -> Vec<u64> {
    let mut v = vec![0u64; n * n];
    for i in 0..n {
        v[i * n + i] = 1;
    }
    v
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of `a` modulo `m`; `a` must be a unit.
pub(crate) fn inv_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (g, s, _) = ext_gcd(a as i128, m as i128);
    debug_assert_eq!(g, 1, "{a} is not a unit mod {m}");
    s.rem_euclid(m as i128) as u64
}

struct ModEliminator {
    m: u64,
    a: Vec<u64>,
    rows: usize,
    cols: usize,
    b: Vec<u64>,
    v: Vec<u64>,
}

impl ModEliminator {
    fn at(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.cols + j]
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), u64)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = self.at(i, j);
                if x == 0 {
                    continue;
                }
                let g = gcd(x, self.m);
                if best.is_none_or(|(_, bg)| g < bg) {
                    best = Some(((i, j), g));
                    if g == 1 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(p, _)| p)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
        self.b.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.a.swap(r * self.cols + i, r * self.cols + j);
        }
        let n = self.cols;
        if !self.v.is_empty() {
            for r in 0..n {
                self.v.swap(r * n + i, r * n + j);
            }
        }
    }

    /// `(row_p, row_q) <- (s*row_p + t*row_q, u*row_p + w*row_q)`
    fn mix_rows(&mut self, p: usize, q: usize, s: u64, t: u64, u: u64, w: u64) {
        let m = self.m as u128;
        let c = self.cols;
        for k in 0..c {
            let x = self.a[p * c + k] as u128;
            let y = self.a[q * c + k] as u128;
            if x == 0 && y == 0 {
                continue;
            }
            self.a[p * c + k] = ((s as u128 * x + t as u128 * y) % m) as u64;
            self.a[q * c + k] = ((u as u128 * x + w as u128 * y) % m) as u64;
        }
        let x = self.b[p] as u128;
        let y = self.b[q] as u128;
        self.b[p] = ((s as u128 * x + t as u128 * y) % m) as u64;
        self.b[q] = ((u as u128 * x + w as u128 * y) % m) as u64;
    }

    /// `(col_p, col_q) <- (s*col_p + t*col_q, u*col_p + w*col_q)`, also on V.
    fn mix_cols(&mut self, p: usize, q: usize, s: u64, t: u64, u: u64, w: u64) {
        let m = self.m as u128;
        let c = self.cols;
        let mix = |data: &mut [u64], rows: usize, stride: usize| {
            for r in 0..rows {
                let x = data[r * stride + p] as u128;
                let y = data[r * stride + q] as u128;
                if x == 0 && y == 0 {
                    continue;
                }
                data[r * stride + p] = ((s as u128 * x + t as u128 * y) % m) as u64;
                data[r * stride + q] = ((u as u128 * x + w as u128 * y) % m) as u64;
            }
        };
        mix(&mut self.a, self.rows, c);
        if !self.v.is_empty() {
            mix(&mut self.v, c, c);
        }
    }

    /// Coefficients of a determinant-1 transform sending `(p, x)` to `(gcd, 0)`.
    fn bezout(&self, p: u64, x: u64) -> (u64, u64, u64, u64) {
        let m = self.m as i128;
        let (d, s, t) = ext_gcd(p as i128, x as i128);
        let red = |z: i128| z.rem_euclid(m) as u64;
        (red(s), red(t), red(-(x as i128 / d)), red(p as i128 / d))
    }

    fn eliminate_below(&mut self, t: usize) -> bool {
        let m = self.m;
        let mut pivot_changed = false;
        for i in t + 1..self.rows {
            let x = self.at(i, t);
            if x == 0 {
                continue;
            }
            let p = self.at(t, t);
            let g = gcd(p, m);
            if x.is_multiple_of(g) {
                let mg = m / g;
                let q = mul_mod(x / g, inv_mod(p / g % mg, mg), mg);
                // row_i -= q * row_t
                self.mix_rows(t, i, 1, 0, (m - q) % m, 1);
            } else {
                let (s, tt, u, w) = self.bezout(p, x);
                self.mix_rows(t, i, s, tt, u, w);
                pivot_changed = true;
            }
            debug_assert_eq!(self.at(i, t), 0);
        }
        pivot_changed
    }

    fn eliminate_right(&mut self, t: usize) -> bool {
        let m = self.m;
        let mut polluted = false;
        for j in t + 1..self.cols {
            let x = self.at(t, j);
            if x == 0 {
                continue;
            }
            let p = self.at(t, t);
            let g = gcd(p, m);
            if x.is_multiple_of(g) {
                let mg = m / g;
                let q = mul_mod(x / g, inv_mod(p / g % mg, mg), mg);
                self.mix_cols(t, j, 1, 0, (m - q) % m, 1);
            } else {
                let (s, tt, u, w) = self.bezout(p, x);
                self.mix_cols(t, j, s, tt, u, w);
                polluted = true;
            }
            debug_assert_eq!(self.at(t, j), 0);
        }
        polluted
    }

    /// Returns the rank; afterwards `a` is diagonal in its leading block.
    fn diagonalize(&mut self) -> usize {
        let n = self.rows.min(self.cols);
        for t in 0..n {
            let Some((pi, pj)) = self.find_pivot(t) else {
                return t;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                self.eliminate_below(t);
                if !self.eliminate_right(t) {
                    break;
                }
            }
        }
        n
    }

    fn apply_v(&self, y: &[u64]) -> Vec<u64> {
        let n = self.cols;
        let m = self.m as u128;
        (0..n)
            .map(|r| {
                let mut acc: u128 = 0;
                for (k, &yk) in y.iter().enumerate() {
                    let vk = self.v[r * n + k];
                    if vk != 0 && yk != 0 {
                        acc = (acc + vk as u128 * yk as u128) % m;
                    }
                }
                acc as u64
            })
            .collect()
    }
}
