//! `H^n(B, A)` with trivial coefficients, from normalized cochains.
//!
//! Two independent routes: linear algebra over each cyclic factor of `A`
//! ([`CohomologyMethod::Snf`]), and brute-force enumeration of every
//! normalized cochain ([`CohomologyMethod::Enumerate`]), which serves as the
//! oracle for the first on small instances.

use std::collections::HashSet;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::abelian::{factorize, invariant_factors, FinAbGroup};
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::linsys::{for_each_nondegenerate, CochainSystem, Limits, SolveOutcome};
use crate::zlin::modular::solve_mod;
use crate::zlin::{quotient_invariants, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CohomologyMethod {
    Snf,
    Enumerate,
}

impl std::str::FromStr for CohomologyMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "snf" => Ok(CohomologyMethod::Snf),
            "enumerate" => Ok(CohomologyMethod::Enumerate),
            _ => Err(Error::DimensionMismatch(format!("unknown method `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleClass {
    /// Uniform over all normalized cocycles.
    Any,
    /// The coboundary of a uniformly random normalized cochain.
    Coboundary,
}

/// Invariant factors of `H^n(B, A)` in divisibility order; empty when the
/// group is trivial.
pub fn cohomology(
    b: &FinAbGroup,
    a: &FinAbGroup,
    n: usize,
    method: CohomologyMethod,
    limits: &Limits,
) -> Result<Vec<u64>> {
    if n > limits.max_degree {
        return Err(Error::SizeLimit {
            what: "cohomological degree".into(),
            size: n as u128,
            limit: limits.max_degree as u128,
        });
    }
    if n == 0 {
        return Ok(invariant_factors(a.orders()));
    }
    match method {
        CohomologyMethod::Snf => cohomology_snf(b, a, n, limits),
        CohomologyMethod::Enumerate => cohomology_enumerate(b, a, n, limits),
    }
}

fn nondeg_count(b: &FinAbGroup, k: usize) -> usize {
    (b.order() - 1).pow(k as u32)
}

/// The system `dc = 0` for an unknown normalized `n`-cochain.
fn cocycle_system(b: &FinAbGroup, a: &FinAbGroup, n: usize) -> CochainSystem {
    let add = crate::cochain::AddTable::new(b);
    let mut sys = CochainSystem::new(b, a, n);
    let mut tmp = vec![0usize; n];
    for_each_nondegenerate(b.order(), n + 1, |x| {
        let mut eq = sys.equation("cocycle", x).term(&x[1..], 1);
        for i in 1..=n {
            tmp[..i - 1].copy_from_slice(&x[..i - 1]);
            tmp[i - 1] = add.add(x[i - 1], x[i]);
            tmp[i..].copy_from_slice(&x[i + 1..]);
            eq = eq.term(&tmp, if i % 2 == 0 { 1 } else { -1 });
        }
        eq.term(&x[..n], if (n + 1).is_multiple_of(2) { 1 } else { -1 }).push();
    });
    sys
}

/// All normalized `n`-cocycles as a solution set of `dc = 0`.
pub fn cocycle_space(
    b: &FinAbGroup,
    a: &FinAbGroup,
    n: usize,
    limits: &Limits,
) -> Result<crate::linsys::SolutionSet> {
    match cocycle_system(b, a, n).solve(limits)? {
        SolveOutcome::Solved(s) => Ok(s),
        SolveOutcome::Unsolvable { .. } => unreachable!("homogeneous systems are solvable"),
    }
}

fn cohomology_snf(b: &FinAbGroup, a: &FinAbGroup, n: usize, limits: &Limits) -> Result<Vec<u64>> {
    let cells = (nondeg_count(b, n + 1) as u128) * (nondeg_count(b, n) as u128);
    if cells > limits.max_cells {
        return Err(Error::SizeLimit { what: "coboundary matrix".into(), size: cells, limit: limits.max_cells });
    }
    let z = cocycle_space(b, a, n, limits)?;
    let w = a.num_factors();
    let nn = nondeg_count(b, n);
    let nprev = if n >= 2 { nondeg_count(b, n - 1) } else { 0 };

    // Columns of the coboundary map on (n-1)-cochains, restricted to the
    // nondegenerate n-tuples. For n = 1 the source is the constants, whose
    // coboundary vanishes.
    let mut dprev: Vec<Vec<i64>> = vec![vec![0; nprev]; nn];
    if n >= 2 {
        let add = crate::cochain::AddTable::new(b);
        let base = b.order() - 1;
        let var = |t: &[usize]| -> Option<usize> {
            t.iter().try_fold(0usize, |acc, &x| (x != 0).then(|| acc * base + (x - 1)))
        };
        let mut row = 0usize;
        let mut tmp = vec![0usize; n - 1];
        for_each_nondegenerate(b.order(), n, |x| {
            let k = n - 1;
            let mut put = |t: &[usize], c: i64| {
                if let Some(v) = var(t) {
                    dprev[row][v] += c;
                }
            };
            put(&x[1..], 1);
            for i in 1..=k {
                tmp[..i - 1].copy_from_slice(&x[..i - 1]);
                tmp[i - 1] = add.add(x[i - 1], x[i]);
                tmp[i..].copy_from_slice(&x[i + 1..]);
                put(&tmp, if i % 2 == 0 { 1 } else { -1 });
            }
            put(&x[..k], if (k + 1).is_multiple_of(2) { 1 } else { -1 });
            row += 1;
        });
    }

    let mut cyclic: Vec<u64> = Vec::new();
    for (f, &m) in a.orders().iter().enumerate() {
        // cocycle generators for this factor, as vectors over nondegenerate tuples
        let gens: Vec<Vec<u64>> = z
            .generators
            .iter()
            .map(|g| nondeg_values(g, f, w))
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect();
        let k = gens.len();
        if k == 0 {
            continue;
        }
        // sum_i c_i z_i - d(y) = 0, unknowns (c, y)
        let cols = k + nprev;
        let mut mat = vec![0u64; nn * cols];
        let mi = m as i64;
        for r in 0..nn {
            for (i, g) in gens.iter().enumerate() {
                mat[r * cols + i] = g[r];
            }
            for j in 0..nprev {
                mat[r * cols + k + j] = (-dprev[r][j]).rem_euclid(mi) as u64;
            }
        }
        let (_, ker) = solve_mod(m, mat, nn, cols, vec![0; nn]).expect("homogeneous");
        let mut rel = IntMatrix::zeros(k, ker.len());
        for (j, v) in ker.iter().enumerate() {
            for (i, &x) in v.iter().take(k).enumerate() {
                rel.set(i, j, BigInt::from(x));
            }
        }
        cyclic.extend(quotient_invariants(&rel, &vec![m; k]));
    }
    Ok(invariant_factors(&cyclic))
}

fn nondeg_values(c: &Cochain, factor: usize, w: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_nondegenerate(c.domain().order(), c.arity(), |t| out.push(c.at(t)[factor]));
    debug_assert!(factor < w);
    out
}

/// Every normalized `k`-cochain, as dense tables, through `visit`.
fn for_each_cochain(
    b: &FinAbGroup,
    a: &FinAbGroup,
    k: usize,
    mut visit: impl FnMut(&Cochain),
) {
    let slots = nondeg_count(b, k);
    let na = a.order();
    let mut digits = vec![0usize; slots];
    let mut tuples: Vec<Vec<usize>> = Vec::with_capacity(slots);
    for_each_nondegenerate(b.order(), k, |t| tuples.push(t.to_vec()));
    let elems = a.enumerate();
    loop {
        let mut c = Cochain::zero(b, a, k);
        for (t, &d) in tuples.iter().zip(&digits) {
            if d != 0 {
                c.set_idx(t, elems[d].coords()).expect("nondegenerate");
            }
        }
        visit(&c);
        let mut i = 0;
        loop {
            if i == slots {
                return;
            }
            digits[i] += 1;
            if digits[i] < na {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn cochain_count(b: &FinAbGroup, a: &FinAbGroup, k: usize) -> Option<u128> {
    (a.order() as u128).checked_pow(u32::try_from(nondeg_count(b, k)).ok()?)
}

fn cohomology_enumerate(
    b: &FinAbGroup,
    a: &FinAbGroup,
    n: usize,
    limits: &Limits,
) -> Result<Vec<u64>> {
    let total = cochain_count(b, a, n).unwrap_or(u128::MAX);
    if total > limits.enumerate_bound {
        return Err(Error::SizeLimit {
            what: format!("enumeration of {n}-cochains"),
            size: total,
            limit: limits.enumerate_bound,
        });
    }
    let mut cocycles: Vec<Cochain> = Vec::new();
    for_each_cochain(b, a, n, |c| {
        if c.coboundary().is_zero() {
            cocycles.push(c.clone());
        }
    });
    let mut boundaries: HashSet<Cochain> = HashSet::new();
    if n >= 2 {
        for_each_cochain(b, a, n - 1, |y| {
            boundaries.insert(y.coboundary());
        });
    } else {
        boundaries.insert(Cochain::zero(b, a, n));
    }
    let nb = boundaries.len() as u64;
    let order = cocycles.len() as u64 / nb;

    // |G[p^j]| for the quotient G = Z/B determines its p-primary part.
    let mut cyclic = Vec::new();
    for (p, e) in factorize(order) {
        let mut ranks: Vec<u32> = Vec::new();
        let mut prev: u64 = 1;
        let mut pj: i64 = 1;
        while prev < p.pow(e) {
            pj *= p as i64;
            let killed = cocycles
                .iter()
                .filter(|z| boundaries.contains(&z.scale(pj)))
                .count() as u64
                / nb;
            let ratio = killed / prev;
            ranks.push(ratio.ilog(p));
            prev = killed;
        }
        // ranks[j-1] = number of p-factors of order >= p^j
        for (idx, &r) in ranks.iter().enumerate() {
            let next = ranks.get(idx + 1).copied().unwrap_or(0);
            for _ in 0..r - next {
                cyclic.push(p.pow(idx as u32 + 1));
            }
        }
    }
    Ok(invariant_factors(&cyclic))
}

/// Every normalized `n`-cocycle, listed by brute force. Fails when there are
/// more than `limits.enumerate_bound` cochains to inspect.
pub fn enumerate_cocycles(
    b: &FinAbGroup,
    a: &FinAbGroup,
    n: usize,
    limits: &Limits,
) -> Result<Vec<Cochain>> {
    let total = cochain_count(b, a, n).unwrap_or(u128::MAX);
    if total > limits.enumerate_bound {
        return Err(Error::SizeLimit {
            what: format!("enumeration of {n}-cochains"),
            size: total,
            limit: limits.enumerate_bound,
        });
    }
    let mut out = Vec::new();
    for_each_cochain(b, a, n, |c| {
        if c.coboundary().is_zero() {
            out.push(c.clone());
        }
    });
    Ok(out)
}

/// A seeded random normalized `n`-cocycle of the given class.
pub fn random_cochain(
    b: &FinAbGroup,
    a: &FinAbGroup,
    n: usize,
    seed: u64,
    class: CocycleClass,
    limits: &Limits,
) -> Result<Cochain> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match class {
        CocycleClass::Coboundary if n <= 1 => Ok(Cochain::zero(b, a, n.max(1))),
        CocycleClass::Coboundary => Ok(Cochain::random(b, a, n - 1, &mut rng).coboundary()),
        CocycleClass::Any => Ok(cocycle_space(b, a, n, limits)?.sample(&mut rng)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(b: &FinAbGroup, a: &FinAbGroup, n: usize) -> Vec<u64> {
        let l = Limits::default();
        let s = cohomology(b, a, n, CohomologyMethod::Snf, &l).unwrap();
        let e = cohomology(b, a, n, CohomologyMethod::Enumerate, &l).unwrap();
        assert_eq!(s, e, "methods disagree for H^{n}({b:?}, {a:?})");
        s
    }

    #[test]
    fn small_examples() {
        let z2 = FinAbGroup::cyclic(2);
        let z3 = FinAbGroup::cyclic(3);
        assert_eq!(both(&z2, &z2, 1), vec![2]);
        assert_eq!(both(&z2, &z2, 3), vec![2]);
        assert_eq!(both(&z3, &z2, 2), Vec::<u64>::new());
    }

    #[test]
    fn cyclic_groups_follow_the_gcd_pattern() {
        // H^n(Z/m, Z/k) = Z/gcd(m,k) for every n >= 1
        for (m, k, top) in [(2u64, 4u64, 3), (4, 2, 2), (4, 4, 2), (3, 3, 3), (6, 2, 1)] {
            let (b, a) = (FinAbGroup::cyclic(m), FinAbGroup::cyclic(k));
            for n in 1..=top {
                let g = num_integer::gcd(m, k);
                let expect = if g == 1 { vec![] } else { vec![g] };
                assert_eq!(both(&b, &a, n), expect, "H^{n}(Z/{m}, Z/{k})");
            }
        }
    }

    #[test]
    fn klein_four_degree_two() {
        // H^2((Z/2)^2, Z/2) = (Z/2)^3
        let b = FinAbGroup::elementary(2, 2);
        let a = FinAbGroup::cyclic(2);
        assert_eq!(both(&b, &a, 2), vec![2, 2, 2]);
    }

    #[test]
    fn degree_zero_and_cap() {
        let z2 = FinAbGroup::cyclic(2);
        let l = Limits::default();
        assert_eq!(cohomology(&z2, &z2, 0, CohomologyMethod::Snf, &l).unwrap(), vec![2]);
        assert!(matches!(
            cohomology(&z2, &z2, 5, CohomologyMethod::Snf, &l),
            Err(Error::SizeLimit { .. })
        ));
        let tight = Limits { enumerate_bound: 4, ..Limits::default() };
        assert!(cohomology(&FinAbGroup::cyclic(3), &z2, 3, CohomologyMethod::Enumerate, &tight).is_err());
    }

    #[test]
    fn random_cochains() {
        let z2 = FinAbGroup::cyclic(2);
        let l = Limits::default();
        let c1 = random_cochain(&z2, &z2, 3, 9, CocycleClass::Any, &l).unwrap();
        let c2 = random_cochain(&z2, &z2, 3, 9, CocycleClass::Any, &l).unwrap();
        assert_eq!(c1, c2);
        assert!(c1.is_cocycle().passed());
        let all = enumerate_cocycles(&z2, &z2, 3, &l).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.contains(&c1));
        let b = FinAbGroup::cyclic(4);
        let d = random_cochain(&b, &z2, 3, 1, CocycleClass::Coboundary, &l).unwrap();
        assert!(d.is_cocycle().passed());
    }
}
