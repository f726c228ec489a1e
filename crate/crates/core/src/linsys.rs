//! Linear systems whose unknown is a normalized cochain.
//!
//! Every existence question ("is there a map k with ...") is phrased as a
//! list of labelled equations, each a signed sum of unknown values equal to a
//! known `A`-value. Unknowns are the values on tuples with no zero argument.
//! Since `A` is a product of cyclic factors and the coefficients are
//! integers, the system splits into one congruence system per factor of `A`,
//! each over a single modulus.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use rand::Rng;

use crate::abelian::{FinAbGroup, GroupElem};
use crate::cochain::{for_each_tuple, Cochain};
use crate::error::{Error, Result};
use crate::zlin::modular::{diagonal_mod, gcd, solve_mod};

/// Size caps for solvers and enumerations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest dense matrix (rows x cols) a solver may build.
    pub max_cells: u128,
    /// Largest number of cochains the enumeration oracle may visit.
    pub enumerate_bound: u128,
    /// Solution sets up to this size are listed in full.
    pub list_bound: usize,
    /// Highest cohomological degree accepted.
    pub max_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cells: 50_000_000,
            enumerate_bound: 1 << 22,
            list_bound: 4096,
            max_degree: 4,
        }
    }
}

impl Limits {
    /// Defaults overridden by `COCYCLE_MAX_CELLS`, `COCYCLE_ENUM_BOUND`,
    /// `COCYCLE_LIST_BOUND` and `COCYCLE_MAX_DEGREE` when set.
    pub fn from_env() -> Self {
        fn read<T: std::str::FromStr>(key: &str) -> Option<T> {
            std::env::var(key).ok()?.trim().parse().ok()
        }
        let d = Limits::default();
        Limits {
            max_cells: read("COCYCLE_MAX_CELLS").unwrap_or(d.max_cells),
            enumerate_bound: read("COCYCLE_ENUM_BOUND").unwrap_or(d.enumerate_bound),
            list_bound: read("COCYCLE_LIST_BOUND").unwrap_or(d.list_bound),
            max_degree: read("COCYCLE_MAX_DEGREE").unwrap_or(d.max_degree),
        }
    }
}

/// An equation whose unknown side vanished identically, leaving `value = 0`
/// with `value` nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedEquation {
    pub family: String,
    pub args: Vec<GroupElem>,
    pub value: GroupElem,
}

impl fmt::Display for ForcedEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(compact).collect();
        write!(
            f,
            "forced {} = 0 at ({}) [{}]",
            compact(&self.value),
            args.join(","),
            self.family
        )
    }
}

/// Elements of single-factor groups print as a bare residue.
pub(crate) fn compact(x: &GroupElem) -> String {
    match x.coords() {
        [c] => c.to_string(),
        _ => x.to_string(),
    }
}

/// All solutions: `particular + span(generators)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub particular: Cochain,
    pub generators: Vec<Cochain>,
}

/// Result of an existence solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(SolutionSet),
    /// No solution. `forced` names a single equation that is already
    /// contradictory on its own, when there is one.
    Unsolvable { forced: Option<ForcedEquation> },
}

impl SolveOutcome {
    pub fn is_solved(&self) -> bool {
        matches!(self, SolveOutcome::Solved(_))
    }

    pub fn witness(&self) -> Option<&Cochain> {
        match self {
            SolveOutcome::Solved(s) => Some(&s.particular),
            SolveOutcome::Unsolvable { .. } => None,
        }
    }

    pub fn into_witness(self) -> Option<Cochain> {
        match self {
            SolveOutcome::Solved(s) => Some(s.particular),
            SolveOutcome::Unsolvable { .. } => None,
        }
    }

    pub fn solutions(&self) -> Option<&SolutionSet> {
        match self {
            SolveOutcome::Solved(s) => Some(s),
            SolveOutcome::Unsolvable { .. } => None,
        }
    }
}

impl fmt::Display for SolveOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveOutcome::Solved(s) => write!(f, "solvable ({} solutions)", s.count()),
            SolveOutcome::Unsolvable { forced: Some(e) } => write!(f, "unsolvable: {e}"),
            SolveOutcome::Unsolvable { forced: None } => write!(f, "unsolvable: inconsistent system"),
        }
    }
}

impl SolutionSet {
    fn factor_vectors(&self, factor: usize) -> (u64, Vec<Vec<u64>>) {
        let a = self.particular.codomain();
        let w = a.num_factors();
        let m = a.orders()[factor];
        let vecs = self
            .generators
            .iter()
            .map(|g| g.values().iter().skip(factor).step_by(w).copied().collect::<Vec<u64>>())
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect();
        (m, vecs)
    }

    /// Number of solutions.
    pub fn count(&self) -> BigUint {
        let a = self.particular.codomain();
        let mut total = BigUint::from(1u32);
        for f in 0..a.num_factors() {
            let (m, vecs) = self.factor_vectors(f);
            if vecs.is_empty() {
                continue;
            }
            let cols = vecs[0].len();
            let rows = vecs.len();
            let data: Vec<u64> = vecs.into_iter().flatten().collect();
            for d in diagonal_mod(m, data, rows, cols) {
                total *= m / gcd(d, m);
            }
        }
        total
    }

    fn additive_order(c: &Cochain) -> u64 {
        let a = c.codomain();
        let w = a.num_factors();
        let mut ord = 1u64;
        for (i, &v) in c.values().iter().enumerate() {
            if v != 0 {
                let m = a.orders()[i % w];
                ord = num_integer::lcm(ord, m / gcd(v, m));
            }
        }
        ord
    }

    /// Every solution, in lexicographic order of their tables, or `None`
    /// when there are more than `bound`.
    pub fn enumerate(&self, bound: usize) -> Option<Vec<Cochain>> {
        let mut seen: HashSet<Cochain> = HashSet::new();
        let zero = Cochain::zero(
            self.particular.domain(),
            self.particular.codomain(),
            self.particular.arity(),
        );
        let mut span = vec![zero.clone()];
        seen.insert(zero);
        for g in &self.generators {
            let ord = Self::additive_order(g);
            let mut next = Vec::new();
            for s in &span {
                let mut cur = s.clone();
                for _ in 1..ord {
                    cur = &cur + g;
                    if seen.insert(cur.clone()) {
                        next.push(cur.clone());
                        if seen.len() > bound {
                            return None;
                        }
                    }
                }
            }
            span.extend(next);
        }
        let mut out: Vec<Cochain> = span.iter().map(|s| s + &self.particular).collect();
        out.sort_by(|x, y| x.values().cmp(y.values()));
        Some(out)
    }

    /// A uniformly distributed solution.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Cochain {
        let mut out = self.particular.clone();
        for g in &self.generators {
            let c = rng.gen_range(0..Self::additive_order(g));
            out = &out + &g.scale(c as i64);
        }
        out
    }
}

struct Equation {
    family: &'static str,
    args: Vec<usize>,
    terms: Vec<(usize, i64)>,
    rhs: Vec<u64>,
}

/// Equations in the values of one unknown cochain.
pub(crate) struct CochainSystem {
    domain: FinAbGroup,
    codomain: FinAbGroup,
    arity: usize,
    nvars: usize,
    equations: Vec<Equation>,
}

pub(crate) struct EqBuilder<'a> {
    sys: &'a mut CochainSystem,
    eq: Equation,
}

impl EqBuilder<'_> {
    /// Adds `coef * k(args)`; ignored on degenerate tuples (normalization).
    pub(crate) fn term(mut self, args: &[usize], coef: i64) -> Self {
        if let Some(v) = self.sys.var(args) {
            match self.eq.terms.iter_mut().find(|(x, _)| *x == v) {
                Some((_, c)) => *c += coef,
                None => self.eq.terms.push((v, coef)),
            }
        }
        self
    }

    /// Adds `coef * value` to the right-hand side.
    pub(crate) fn rhs(mut self, value: &[u64], coef: i64) -> Self {
        self.sys.codomain.add_scaled_into(&mut self.eq.rhs, value, coef);
        self
    }

    pub(crate) fn push(self) {
        let EqBuilder { sys, mut eq } = self;
        eq.terms.retain(|&(_, c)| c != 0);
        if eq.terms.is_empty() && eq.rhs.iter().all(|&x| x == 0) {
            return;
        }
        sys.equations.push(eq);
    }
}

impl CochainSystem {
    pub(crate) fn new(domain: &FinAbGroup, codomain: &FinAbGroup, arity: usize) -> Self {
        let nvars = (domain.order() - 1).pow(arity as u32);
        CochainSystem {
            domain: domain.clone(),
            codomain: codomain.clone(),
            arity,
            nvars,
            equations: Vec::new(),
        }
    }

    fn var(&self, args: &[usize]) -> Option<usize> {
        debug_assert_eq!(args.len(), self.arity);
        let base = self.domain.order() - 1;
        let mut v = 0;
        for &a in args {
            if a == 0 {
                return None;
            }
            v = v * base + (a - 1);
        }
        Some(v)
    }

    /// Starts an equation labelled by `family` at the tuple `args`.
    pub(crate) fn equation(&mut self, family: &'static str, args: &[usize]) -> EqBuilder<'_> {
        let w = self.codomain.num_factors();
        EqBuilder {
            eq: Equation { family, args: args.to_vec(), terms: Vec::new(), rhs: vec![0; w] },
            sys: self,
        }
    }

    fn forced(&self, eq: &Equation, factor: usize) -> ForcedEquation {
        let mut value = vec![0; self.codomain.num_factors()];
        value[factor] = eq.rhs[factor];
        ForcedEquation {
            family: eq.family.to_string(),
            args: eq.args.iter().map(|&i| self.domain.element_at(i)).collect(),
            value: self.codomain.element(value).expect("reduced"),
        }
    }

    pub(crate) fn solve(&self, limits: &Limits) -> Result<SolveOutcome> {
        let a = &self.codomain;
        let w = a.num_factors();
        let orders = a.orders();

        // A row that vanishes modulo its factor with nonzero rhs is reported
        // before any elimination, so the witness is the first such equation.
        for eq in &self.equations {
            for (f, &m) in orders.iter().enumerate() {
                let m_i = m as i64;
                if eq.rhs[f] != 0 && eq.terms.iter().all(|&(_, c)| c.rem_euclid(m_i) == 0) {
                    return Ok(SolveOutcome::Unsolvable { forced: Some(self.forced(eq, f)) });
                }
            }
        }

        let mut particular = vec![vec![0u64; self.nvars]; w];
        let mut kernels: Vec<(usize, Vec<u64>)> = Vec::new();
        for (f, &m) in orders.iter().enumerate() {
            let m_i = m as i64;
            let mut seen: HashSet<(Vec<(usize, u64)>, u64)> = HashSet::new();
            let mut rows: Vec<(Vec<(usize, u64)>, u64)> = Vec::new();
            for eq in &self.equations {
                let mut row: Vec<(usize, u64)> = eq
                    .terms
                    .iter()
                    .map(|&(v, c)| (v, c.rem_euclid(m_i) as u64))
                    .filter(|&(_, c)| c != 0)
                    .collect();
                if row.is_empty() {
                    continue;
                }
                row.sort_unstable();
                let key = (row, eq.rhs[f]);
                if seen.insert(key.clone()) {
                    rows.push(key);
                }
            }
            let cells = rows.len() as u128 * self.nvars as u128;
            if cells > limits.max_cells {
                return Err(Error::SizeLimit {
                    what: "linear system".into(),
                    size: cells,
                    limit: limits.max_cells,
                });
            }
            let mut dense = vec![0u64; rows.len() * self.nvars];
            let mut rhs = Vec::with_capacity(rows.len());
            for (r, (row, b)) in rows.iter().enumerate() {
                for &(v, c) in row {
                    dense[r * self.nvars + v] = c;
                }
                rhs.push(*b);
            }
            match solve_mod(m, dense, rows.len(), self.nvars, rhs) {
                None => return Ok(SolveOutcome::Unsolvable { forced: None }),
                Some((x, ker)) => {
                    particular[f] = x;
                    kernels.extend(ker.into_iter().map(|k| (f, k)));
                }
            }
        }

        let particular = self.assemble(|f, v| particular[f][v]);
        let generators = kernels
            .iter()
            .map(|(f, k)| self.assemble(|g, v| if g == *f { k[v] } else { 0 }))
            .collect();
        Ok(SolveOutcome::Solved(SolutionSet { particular, generators }))
    }

    fn assemble(&self, value: impl Fn(usize, usize) -> u64) -> Cochain {
        Cochain::from_fn(&self.domain, &self.codomain, self.arity, |t, out| {
            let v = self.var(t).expect("nondegenerate");
            for (f, o) in out.iter_mut().enumerate() {
                *o = value(f, v);
            }
        })
    }
}

/// Visits every tuple in `B^k` with no zero entry.
pub(crate) fn for_each_nondegenerate(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if n <= 1 {
        return;
    }
    let mut shifted = vec![0usize; k];
    for_each_tuple(n - 1, k, |t| {
        for (s, &x) in shifted.iter_mut().zip(t) {
            *s = x + 1;
        }
        f(&shifted);
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forced_equation_is_reported() {
        let b = FinAbGroup::cyclic(2);
        let a = FinAbGroup::cyclic(2);
        let mut sys = CochainSystem::new(&b, &a, 2);
        // 1 = k(0,1) - 2 k(1,1): vanishes mod 2
        sys.equation("demo", &[1, 1, 1]).term(&[0, 1], 1).term(&[1, 1], -2).rhs(&[1], 1).push();
        match sys.solve(&Limits::default()).unwrap() {
            SolveOutcome::Unsolvable { forced: Some(e) } => {
                assert_eq!(e.to_string(), "forced 1 = 0 at (1,1,1) [demo]");
            }
            other => panic!("expected forced contradiction, got {other:?}"),
        }
    }

    #[test]
    fn counts_and_enumeration() {
        let b = FinAbGroup::cyclic(3);
        let a = FinAbGroup::cyclic(4);
        let mut sys = CochainSystem::new(&b, &a, 1);
        // 2 u(1) = 2, u(2) free
        sys.equation("e", &[1]).term(&[1], 2).rhs(&[2], 1).push();
        let SolveOutcome::Solved(s) = sys.solve(&Limits::default()).unwrap() else {
            panic!("solvable")
        };
        assert_eq!(s.count(), BigUint::from(8u32));
        let all = s.enumerate(100).unwrap();
        assert_eq!(all.len(), 8);
        for c in &all {
            assert_eq!((2 * c.at(&[1])[0]) % 4, 2);
        }
        assert!(s.enumerate(3).is_none());
    }

    #[test]
    fn inconsistent_combination() {
        let b = FinAbGroup::cyclic(2);
        let a = FinAbGroup::cyclic(2);
        let mut sys = CochainSystem::new(&b, &a, 1);
        sys.equation("e", &[1]).term(&[1], 1).rhs(&[1], 1).push();
        sys.equation("f", &[1]).term(&[1], 1).push();
        assert_eq!(
            sys.solve(&Limits::default()).unwrap(),
            SolveOutcome::Unsolvable { forced: None }
        );
    }

    #[test]
    fn size_limit() {
        let b = FinAbGroup::cyclic(3);
        let a = FinAbGroup::cyclic(2);
        let mut sys = CochainSystem::new(&b, &a, 2);
        sys.equation("e", &[1, 1]).term(&[1, 1], 1).push();
        let tight = Limits { max_cells: 1, ..Limits::default() };
        assert!(matches!(sys.solve(&tight), Err(Error::SizeLimit { .. })));
    }
}
