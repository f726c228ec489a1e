//! Finite abelian groups presented as products of cyclic factors.
//!
//! Elements are addressed in two interchangeable ways: as a [`GroupElem`]
//! (a vector of residues, one per factor) or as an index into the
//! lexicographic mixed-radix enumeration of the group. Cochain tables are
//! keyed by the index form, so the presentation given by the user is kept
//! verbatim (no reduction to invariant factors).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite abelian group `Z/n1 x ... x Z/nk`.
///
/// Factors of order 1 are dropped on construction; the trivial group has no
/// factors at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    orders: Vec<u64>,
    size: usize,
}

/// An element of a [`FinAbGroup`], stored as residues `coords[i] < orders[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    coords: Vec<u64>,
}

impl FinAbGroup {
    pub fn new(orders: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut kept = Vec::new();
        let mut size: usize = 1;
        for n in orders {
            if n == 0 {
                return Err(Error::InvalidGroup("cyclic factor of order 0".into()));
            }
            if n == 1 {
                continue;
            }
            size = usize::try_from(n)
                .ok()
                .and_then(|n| size.checked_mul(n))
                .ok_or_else(|| Error::InvalidGroup("group order overflows usize".into()))?;
            kept.push(n);
        }
        Ok(FinAbGroup { orders: kept, size })
    }

    pub fn trivial() -> Self {
        FinAbGroup { orders: Vec::new(), size: 1 }
    }

    /// `Z/n`.
    pub fn cyclic(n: u64) -> Self {
        Self::new([n]).expect("cyclic order must be positive")
    }

    /// `(Z/n)^k`.
    pub fn elementary(n: u64, k: usize) -> Self {
        Self::new(std::iter::repeat_n(n, k)).expect("cyclic order must be positive")
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn num_factors(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> usize {
        self.size
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    /// Exponent (lcm of the factor orders).
    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1, |acc, &n| num_integer::lcm(acc, n))
    }

    pub fn zero(&self) -> GroupElem {
        GroupElem { coords: vec![0; self.orders.len()] }
    }

    /// All elements in lexicographic mixed-radix order, starting with zero.
    pub fn enumerate(&self) -> Vec<GroupElem> {
        (0..self.size).map(|i| self.element_at(i)).collect()
    }

    pub fn element(&self, coords: impl Into<Vec<u64>>) -> Result<GroupElem> {
        let elem = GroupElem { coords: coords.into() };
        self.validate(&elem)?;
        Ok(elem)
    }

    fn validate(&self, x: &GroupElem) -> Result<()> {
        if x.coords.len() != self.orders.len() {
            return Err(Error::MalformedElement(format!(
                "{} coordinates for a group with {} factors",
                x.coords.len(),
                self.orders.len()
            )));
        }
        for (c, n) in x.coords.iter().zip(&self.orders) {
            if c >= n {
                return Err(Error::MalformedElement(format!(
                    "residue {c} out of range for Z/{n}"
                )));
            }
        }
        Ok(())
    }

    pub fn index_of(&self, x: &GroupElem) -> Result<usize> {
        self.validate(x)?;
        Ok(self.index_of_coords(&x.coords))
    }

    pub(crate) fn index_of_coords(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&c, &n)| acc * n as usize + c as usize)
    }

    pub fn element_at(&self, index: usize) -> GroupElem {
        assert!(index < self.size, "index {index} out of range for group of order {}", self.size);
        let mut coords = vec![0; self.orders.len()];
        let mut rest = index;
        for (slot, &n) in coords.iter_mut().zip(&self.orders).rev() {
            *slot = (rest % n as usize) as u64;
            rest /= n as usize;
        }
        GroupElem { coords }
    }

    pub fn add(&self, x: &GroupElem, y: &GroupElem) -> Result<GroupElem> {
        self.validate(x)?;
        self.validate(y)?;
        let coords = x
            .coords
            .iter()
            .zip(&y.coords)
            .zip(&self.orders)
            .map(|((a, b), n)| (a + b) % n)
            .collect();
        Ok(GroupElem { coords })
    }

    pub fn neg(&self, x: &GroupElem) -> Result<GroupElem> {
        self.validate(x)?;
        let coords = x
            .coords
            .iter()
            .zip(&self.orders)
            .map(|(a, n)| (n - a) % n)
            .collect();
        Ok(GroupElem { coords })
    }

    /// Sum of two elements given by index.
    pub fn add_idx(&self, x: usize, y: usize) -> usize {
        let mut acc = 0usize;
        let mut stride = 1usize;
        let (mut x, mut y) = (x, y);
        for &n in self.orders.iter().rev() {
            let n = n as usize;
            let s = (x % n + y % n) % n;
            acc += s * stride;
            stride *= n;
            x /= n;
            y /= n;
        }
        acc
    }

    /// Negation of an element given by index.
    pub fn neg_idx(&self, x: usize) -> usize {
        let mut acc = 0usize;
        let mut stride = 1usize;
        let mut x = x;
        for &n in self.orders.iter().rev() {
            let n = n as usize;
            let d = x % n;
            acc += ((n - d) % n) * stride;
            stride *= n;
            x /= n;
        }
        acc
    }

    // Residue-vector arithmetic used for cochain values.

    pub(crate) fn add_into(&self, acc: &mut [u64], v: &[u64]) {
        for ((a, b), n) in acc.iter_mut().zip(v).zip(&self.orders) {
            *a = (*a + b) % n;
        }
    }

    pub(crate) fn sub_into(&self, acc: &mut [u64], v: &[u64]) {
        for ((a, b), n) in acc.iter_mut().zip(v).zip(&self.orders) {
            *a = (*a + n - b) % n;
        }
    }

    /// `acc += coef * v` for an arbitrary integer coefficient.
    pub(crate) fn add_scaled_into(&self, acc: &mut [u64], v: &[u64], coef: i64) {
        for ((a, b), n) in acc.iter_mut().zip(v).zip(&self.orders) {
            let c = coef.rem_euclid(*n as i64) as u64;
            *a = ((*a as u128 + c as u128 * *b as u128) % *n as u128) as u64;
        }
    }

    /// Parse the literal `"n1,n2,...,nk"`; the trivial group is spelled `"1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidGroup("empty group literal".into()));
        }
        let mut orders = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let n: u64 = part
                .parse()
                .map_err(|_| Error::InvalidGroup(format!("bad factor order `{part}`")))?;
            orders.push(n);
        }
        Self::new(orders)
    }
}

impl FromStr for FinAbGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for FinAbGroup {
    /// Writes the group literal, `1` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.orders.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "Z/1");
        }
        let parts: Vec<String> = self.orders.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl GroupElem {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Invariant factors `d1 | d2 | ... | dr` (each > 1, ascending) of the direct
/// sum of the given cyclic groups. Factors equal to 1 are ignored, so the
/// trivial group yields an empty list.
pub fn invariant_factors(cyclic_orders: &[u64]) -> Vec<u64> {
    use std::collections::BTreeMap;
    // prime -> multiset of exponents
    let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &n in cyclic_orders {
        for (p, e) in factorize(n) {
            primary.entry(p).or_default().push(e);
        }
    }
    let width = primary.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; width];
    for (p, mut exps) in primary {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        // Largest powers go to the last invariant factor.
        for (k, e) in exps.into_iter().enumerate() {
            out[width - 1 - k] *= p.pow(e);
        }
    }
    out
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
