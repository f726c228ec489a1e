//! Normalized `A`-valued cochains on `B^n`.
//!
//! A cochain is stored as a dense table indexed by the mixed-radix index of
//! the argument tuple (first argument most significant), each entry a residue
//! vector of `A`. Only normalized cochains are representable: constructors
//! force the value 0 on every tuple with a zero argument.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use rand::Rng;

use crate::abelian::{FinAbGroup, GroupElem};
use crate::error::{Error, Result};
use crate::report::{scan, Report, Violation};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    domain: FinAbGroup,
    codomain: FinAbGroup,
    arity: usize,
    values: Vec<u64>,
}

/// Precomputed addition on element indices of a group.
#[derive(Clone, Debug)]
pub(crate) struct AddTable {
    n: usize,
    sum: Vec<usize>,
    neg: Vec<usize>,
}

impl AddTable {
    pub(crate) fn new(g: &FinAbGroup) -> Self {
        let n = g.order();
        let mut sum = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                sum[a * n + b] = g.add_idx(a, b);
            }
        }
        let neg = (0..n).map(|a| g.neg_idx(a)).collect();
        AddTable { n, sum, neg }
    }

    #[inline]
    pub(crate) fn add(&self, a: usize, b: usize) -> usize {
        self.sum[a * self.n + b]
    }

    #[inline]
    pub(crate) fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }
}

/// Calls `f` on every tuple of `{0..n}^k` in lexicographic order.
pub(crate) fn for_each_tuple(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut t = vec![0usize; k];
    if n == 0 {
        return;
    }
    loop {
        f(&t);
        let mut slot = k;
        loop {
            if slot == 0 {
                return;
            }
            slot -= 1;
            t[slot] += 1;
            if t[slot] < n {
                break;
            }
            t[slot] = 0;
        }
    }
}

/// Sign of the permutation `perm` of `0..perm.len()`.
pub(crate) fn perm_sign(perm: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The `(p, n-p)`-shuffles as slot assignments: `perm[j]` is the original
/// argument placed in slot `j`. Ordered by the lexicographic order of the
/// slot set occupied by the first block.
pub(crate) fn shuffles(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    fn rec(n: usize, p: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == p {
            let mut perm = vec![0; n];
            let (mut a, mut b) = (0, p);
            for (slot, v) in perm.iter_mut().enumerate() {
                if chosen.contains(&slot) {
                    *v = a;
                    a += 1;
                } else {
                    *v = b;
                    b += 1;
                }
            }
            out.push(perm);
            return;
        }
        for s in start..n {
            chosen.push(s);
            rec(n, p, s + 1, chosen, out);
            chosen.pop();
        }
    }
    rec(n, p, 0, &mut chosen, &mut out);
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k.is_multiple_of(2) {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out.sort();
    out
}

impl Cochain {
    /// The zero cochain. Panics if `arity == 0`.
    pub fn zero(domain: &FinAbGroup, codomain: &FinAbGroup, arity: usize) -> Self {
        assert!(arity >= 1, "cochains have arity at least 1");
        let len = domain
            .order()
            .checked_pow(arity as u32)
            .and_then(|l| l.checked_mul(codomain.num_factors()))
            .expect("cochain table too large");
        Cochain {
            domain: domain.clone(),
            codomain: codomain.clone(),
            arity,
            values: vec![0; len],
        }
    }

    /// Tabulates `f` on every tuple of element indices with no zero argument;
    /// `f` writes the value (any integers, reduced afterwards) into the buffer.
    pub fn from_fn(
        domain: &FinAbGroup,
        codomain: &FinAbGroup,
        arity: usize,
        mut f: impl FnMut(&[usize], &mut [u64]),
    ) -> Self {
        let mut c = Self::zero(domain, codomain, arity);
        let w = codomain.num_factors();
        if w == 0 {
            return c;
        }
        let orders = codomain.orders().to_vec();
        let mut flat = 0usize;
        for_each_tuple(domain.order(), arity, |t| {
            if t.iter().all(|&x| x != 0) {
                let slot = &mut c.values[flat * w..(flat + 1) * w];
                f(t, slot);
                for (v, n) in slot.iter_mut().zip(&orders) {
                    *v %= n;
                }
            }
            flat += 1;
        });
        c
    }

    /// Builds a cochain from a flat table of `|B|^arity * num_factors(A)`
    /// residues, validating range and normalization.
    pub fn from_values(
        domain: &FinAbGroup,
        codomain: &FinAbGroup,
        arity: usize,
        values: Vec<u64>,
    ) -> Result<Self> {
        let mut c = Self::zero(domain, codomain, arity);
        if values.len() != c.values.len() {
            return Err(Error::DimensionMismatch(format!(
                "table has {} residues, expected {}",
                values.len(),
                c.values.len()
            )));
        }
        let w = codomain.num_factors();
        for (i, chunk) in values.chunks(w.max(1)).enumerate().take(c.table_len()) {
            if w == 0 {
                break;
            }
            let elem = codomain.element(chunk.to_vec())?;
            if !elem.is_zero() {
                let args = c.args_of(i);
                if args.contains(&0) {
                    return Err(Error::NotNormalized(c.format_args(&args)));
                }
            }
        }
        c.values = values;
        Ok(c)
    }

    /// The cochain with value `value` at `args` and 0 elsewhere.
    pub fn indicator(
        domain: &FinAbGroup,
        codomain: &FinAbGroup,
        args: &[GroupElem],
        value: &GroupElem,
    ) -> Result<Self> {
        let mut c = Self::zero(domain, codomain, args.len());
        c.set(args, value)?;
        Ok(c)
    }

    /// A uniformly random normalized cochain.
    pub fn random<R: Rng + ?Sized>(
        domain: &FinAbGroup,
        codomain: &FinAbGroup,
        arity: usize,
        rng: &mut R,
    ) -> Self {
        let orders = codomain.orders().to_vec();
        Self::from_fn(domain, codomain, arity, |_, out| {
            for (v, &n) in out.iter_mut().zip(&orders) {
                *v = rng.gen_range(0..n);
            }
        })
    }

    pub fn domain(&self) -> &FinAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FinAbGroup {
        &self.codomain
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// The flat residue table.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Number of argument tuples, `|B|^arity`.
    pub fn table_len(&self) -> usize {
        self.domain.order().pow(self.arity as u32)
    }

    pub fn flat_index(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        let n = self.domain.order();
        args.iter().fold(0, |acc, &a| acc * n + a)
    }

    pub fn args_of(&self, mut flat: usize) -> Vec<usize> {
        let n = self.domain.order();
        let mut args = vec![0; self.arity];
        for a in args.iter_mut().rev() {
            *a = flat % n;
            flat /= n;
        }
        args
    }

    /// Value at a tuple of element indices.
    #[inline]
    pub fn at(&self, args: &[usize]) -> &[u64] {
        let w = self.codomain.num_factors();
        let i = self.flat_index(args);
        &self.values[i * w..(i + 1) * w]
    }

    /// `out += coef * self(args)`.
    #[inline]
    pub(crate) fn acc(&self, out: &mut [u64], args: &[usize], coef: i64) {
        match coef {
            1 => self.codomain.add_into(out, self.at(args)),
            -1 => self.codomain.sub_into(out, self.at(args)),
            _ => self.codomain.add_scaled_into(out, self.at(args), coef),
        }
    }

    /// Value at a tuple of group elements.
    pub fn eval(&self, args: &[GroupElem]) -> Result<GroupElem> {
        let idx = self.indices_of(args)?;
        Ok(self.value_elem(&idx))
    }

    pub(crate) fn value_elem(&self, args: &[usize]) -> GroupElem {
        self.codomain.element(self.at(args).to_vec()).expect("table entries are reduced")
    }

    fn indices_of(&self, args: &[GroupElem]) -> Result<Vec<usize>> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: args.len() });
        }
        args.iter().map(|x| self.domain.index_of(x)).collect()
    }

    /// Sets the value at `args`; rejects nonzero values on degenerate tuples.
    pub fn set(&mut self, args: &[GroupElem], value: &GroupElem) -> Result<()> {
        let idx = self.indices_of(args)?;
        let value = self.codomain.element(value.coords().to_vec())?;
        self.set_idx(&idx, value.coords())
    }

    pub(crate) fn set_idx(&mut self, args: &[usize], value: &[u64]) -> Result<()> {
        if args.contains(&0) && value.iter().any(|&v| v != 0) {
            return Err(Error::NotNormalized(self.format_args(args)));
        }
        let w = self.codomain.num_factors();
        let i = self.flat_index(args);
        self.values[i * w..(i + 1) * w].copy_from_slice(value);
        Ok(())
    }

    pub(crate) fn format_args(&self, args: &[usize]) -> String {
        let parts: Vec<String> =
            args.iter().map(|&a| self.domain.element_at(a).to_string()).collect();
        format!("({})", parts.join(","))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Nonzero entries as `(argument indices, value)` in lexicographic order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (Vec<usize>, &[u64])> + '_ {
        let w = self.codomain.num_factors().max(1);
        let has_factors = self.codomain.num_factors() > 0;
        self.values
            .chunks(w)
            .enumerate()
            .filter(move |(_, v)| has_factors && v.iter().any(|&x| x != 0))
            .map(move |(i, v)| (self.args_of(i), v))
    }

    fn same_shape(&self, other: &Cochain) -> Result<()> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::mismatch(format!(
                "cochains on {:?} -> {:?} and {:?} -> {:?}",
                self.domain, self.codomain, other.domain, other.codomain
            )));
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    fn combine(&self, other: &Cochain, coef: i64) -> Cochain {
        let mut out = self.clone();
        let w = self.codomain.num_factors();
        if w == 0 {
            return out;
        }
        for (acc, v) in out.values.chunks_mut(w).zip(other.values.chunks(w)) {
            self.codomain.add_scaled_into(acc, v, coef);
        }
        out
    }

    pub fn checked_add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        Ok(self.combine(other, 1))
    }

    pub fn checked_sub(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        Ok(self.combine(other, -1))
    }

    /// `k * self`.
    pub fn scale(&self, k: i64) -> Cochain {
        let zero = Cochain::zero(&self.domain, &self.codomain, self.arity);
        zero.combine(self, k)
    }

    /// Fixes argument `slot` (0-based) to the element with index `value`.
    /// Panics if the cochain has arity 1.
    pub fn restrict(&self, slot: usize, value: usize) -> Cochain {
        assert!(self.arity >= 2 && slot < self.arity, "cannot restrict slot {slot}");
        let mut full = vec![0; self.arity];
        Cochain::from_fn(&self.domain, &self.codomain, self.arity - 1, |t, out| {
            full[..slot].copy_from_slice(&t[..slot]);
            full[slot] = value;
            full[slot + 1..].copy_from_slice(&t[slot..]);
            out.copy_from_slice(self.at(&full));
        })
    }

    /// The bar differential with trivial coefficients:
    /// `(dc)(x0..xn) = c(x1..xn) + sum_{i=1}^{n} (-1)^i c(.., x_{i-1}+x_i, ..)
    ///  + (-1)^{n+1} c(x0..x_{n-1})`.
    pub fn coboundary(&self) -> Cochain {
        let n = self.arity;
        let add = AddTable::new(&self.domain);
        let a = &self.codomain;
        let mut tmp = vec![0usize; n];
        Cochain::from_fn(&self.domain, a, n + 1, |x, out| {
            a.add_into(out, self.at(&x[1..]));
            for i in 1..=n {
                tmp[..i - 1].copy_from_slice(&x[..i - 1]);
                tmp[i - 1] = add.add(x[i - 1], x[i]);
                tmp[i..].copy_from_slice(&x[i + 1..]);
                a.add_scaled_into(out, self.at(&tmp), if i % 2 == 0 { 1 } else { -1 });
            }
            a.add_scaled_into(out, self.at(&x[..n]), if (n + 1).is_multiple_of(2) { 1 } else { -1 });
        })
    }

    /// Checks `dc = 0`, reporting the first tuple where it fails.
    pub fn is_cocycle(&self) -> Report {
        let d = self.coboundary();
        let mut r = Report::new();
        let violation = d.nonzero_entries().next().map(|(args, v)| Violation {
            args: args.iter().map(|&i| self.domain.element_at(i)).collect(),
            residual: self.codomain.element(v.to_vec()).expect("reduced"),
        });
        r.push("cocycle", violation);
        r
    }

    /// `sum_k coef_k * f(x_{perm_k[0]}, ..., x_{perm_k[n-1]})`.
    pub(crate) fn permutation_sum(&self, terms: &[(Vec<usize>, i64)]) -> Cochain {
        let a = &self.codomain;
        let mut y = vec![0usize; self.arity];
        Cochain::from_fn(&self.domain, a, self.arity, |x, out| {
            for (perm, coef) in terms {
                for (slot, &src) in perm.iter().enumerate() {
                    y[slot] = x[src];
                }
                a.add_scaled_into(out, self.at(&y), *coef);
            }
        })
    }

    /// Signed shuffle symmetrization: the last `n - p` arguments are shuffled
    /// through the first `p`, each shuffle weighted by its sign, the total
    /// multiplied by `sign`.
    pub fn shuffle_sym(&self, p: usize, sign: i64) -> Result<Cochain> {
        self.shuffle_sym_window(0, self.arity, p, sign)
    }

    /// [`shuffle_sym`](Self::shuffle_sym) acting on the `len` consecutive slots
    /// starting at `start`; the other slots are passed through.
    pub fn shuffle_sym_window(&self, start: usize, len: usize, p: usize, sign: i64) -> Result<Cochain> {
        if p == 0 || p >= len || start + len > self.arity {
            return Err(Error::InvalidBlock { p, arity: len });
        }
        let terms: Vec<(Vec<usize>, i64)> = shuffles(len, p)
            .into_iter()
            .map(|s| {
                let eps = perm_sign(&s);
                let mut perm: Vec<usize> = (0..self.arity).collect();
                for (j, &src) in s.iter().enumerate() {
                    perm[start + j] = start + src;
                }
                (perm, eps * sign)
            })
            .collect();
        Ok(self.permutation_sum(&terms))
    }

    /// `sum_{sigma in S_n} sign(sigma) f(x_{sigma(1)}, ..., x_{sigma(n)})`.
    pub fn alternating_sum(&self) -> Cochain {
        let terms: Vec<(Vec<usize>, i64)> = all_permutations(self.arity)
            .into_iter()
            .map(|p| {
                let s = perm_sign(&p);
                (p, s)
            })
            .collect();
        self.permutation_sum(&terms)
    }

    /// One check per slot: additivity in that argument with the others fixed.
    pub fn multilinearity(&self) -> Report {
        let add = AddTable::new(&self.domain);
        let a = &self.codomain;
        let k = self.arity;
        let mut r = Report::new();
        let mut t = vec![0usize; k];
        for slot in 0..k {
            // scanned tuple: the k arguments with slot value x, then x'
            let v = scan(&self.domain, a, k + 1, |args, out| {
                t.copy_from_slice(&args[..k]);
                let (x, x2) = (args[slot], args[k]);
                t[slot] = add.add(x, x2);
                a.add_into(out, self.at(&t));
                t[slot] = x;
                a.sub_into(out, self.at(&t));
                t[slot] = x2;
                a.sub_into(out, self.at(&t));
            });
            r.push(format!("linear in slot {}", slot + 1), v);
        }
        r
    }

    /// Vanishing whenever two arguments coincide.
    pub fn alternation(&self) -> Report {
        let a = &self.codomain;
        let mut r = Report::new();
        let v = scan(&self.domain, a, self.arity, |args, out| {
            let repeated = (0..args.len()).any(|i| (i + 1..args.len()).any(|j| args[i] == args[j]));
            if repeated {
                out.copy_from_slice(self.at(args));
            }
        });
        r.push("alternating", v);
        r
    }
}

fn expect_same(a: &Cochain, b: &Cochain) {
    if let Err(e) = a.same_shape(b) {
        panic!("cochain arithmetic on incompatible operands: {e}");
    }
}

impl Add for &Cochain {
    type Output = Cochain;

    /// Panics on shape mismatch; see [`Cochain::checked_add`].
    fn add(self, rhs: &Cochain) -> Cochain {
        expect_same(self, rhs);
        self.combine(rhs, 1)
    }
}

impl Sub for &Cochain {
    type Output = Cochain;

    fn sub(self, rhs: &Cochain) -> Cochain {
        expect_same(self, rhs);
        self.combine(rhs, -1)
    }
}

impl Neg for &Cochain {
    type Output = Cochain;

    fn neg(self) -> Cochain {
        self.scale(-1)
    }
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain({:?} -> {:?}, arity {}) {{", self.domain, self.codomain, self.arity)?;
        let mut first = true;
        for (args, v) in self.nonzero_entries() {
            let val = self.codomain.element(v.to_vec()).expect("reduced");
            write!(f, "{}{} : {}", if first { " " } else { ", " }, self.format_args(&args), val)?;
            first = false;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn z(n: u64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    fn ind(b: &FinAbGroup, a: &FinAbGroup, args: &[u64], v: u64) -> Cochain {
        let args: Vec<GroupElem> = args.iter().map(|&x| b.element(vec![x]).unwrap()).collect();
        Cochain::indicator(b, a, &args, &a.element(vec![v]).unwrap()).unwrap()
    }

    #[test]
    fn zero_maps_to_zero() {
        let c = Cochain::zero(&z(3), &z(2), 2);
        assert!(c.coboundary().is_zero());
        assert!(c.shuffle_sym(1, 1).unwrap().is_zero());
    }

    #[test]
    fn character_is_a_cocycle() {
        let (b, a) = (z(2), z(2));
        let u = ind(&b, &a, &[1], 1);
        assert!(u.coboundary().is_zero());
    }

    #[test]
    fn indicator_11_is_a_cocycle() {
        let (b, a) = (z(2), z(2));
        let h = ind(&b, &a, &[1, 1], 1);
        assert!(h.coboundary().is_zero());
        assert!(h.is_cocycle().passed());
        let f = ind(&b, &a, &[1, 1, 1], 1);
        assert!(f.is_cocycle().passed());
    }

    #[test]
    fn two_dimensional_coboundary_formula() {
        let (b, a) = (z(4), z(4));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let h = Cochain::random(&b, &a, 2, &mut rng);
        let d = h.coboundary();
        for x in 1..4usize {
            for y in 1..4usize {
                for w in 1..4usize {
                    let expect = (h.at(&[y, w])[0] + 4 - h.at(&[(x + y) % 4, w])[0]
                        + h.at(&[x, (y + w) % 4])[0]
                        + 4
                        - h.at(&[x, y])[0])
                        % 4;
                    assert_eq!(d.at(&[x, y, w])[0], expect);
                }
            }
        }
    }

    #[test]
    fn non_cocycle_reports_tuple() {
        let (b, a) = (z(3), z(3));
        let c = ind(&b, &a, &[1, 1], 1);
        let r = c.is_cocycle();
        let v = r.first_failure().unwrap().violation.as_ref().unwrap();
        assert_eq!(v.args.len(), 3);
        assert!(!v.residual.is_zero());
    }

    #[test]
    fn shuffle_examples() {
        let (b, a) = (z(2), z(2));
        let f = ind(&b, &a, &[1, 1, 1], 1);
        assert_eq!(f.shuffle_sym(2, 1).unwrap().at(&[1, 1, 1]), &[1]);
        assert_eq!(f.shuffle_sym(1, -1).unwrap().at(&[1, 1, 1]), &[1]);
        assert!(matches!(f.shuffle_sym(3, 1), Err(Error::InvalidBlock { .. })));
        assert!(matches!(f.shuffle_sym(0, 1), Err(Error::InvalidBlock { .. })));
    }

    #[test]
    fn shuffle_terms_match_hand_expansion() {
        let (b, a) = (z(5), z(5));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = Cochain::random(&b, &a, 3, &mut rng);
        let g = f.shuffle_sym(2, 1).unwrap();
        let h = f.shuffle_sym(1, -1).unwrap();
        for_each_tuple(5, 3, |t| {
            let (x, x2, y) = (t[0], t[1], t[2]);
            let v = |p: [usize; 3]| f.at(&p)[0] as i64;
            let eg = (v([x, x2, y]) - v([x, y, x2]) + v([y, x, x2])).rem_euclid(5) as u64;
            assert_eq!(g.at(t)[0], eg);
            let (x, y, y2) = (t[0], t[1], t[2]);
            let eh = (-v([x, y, y2]) + v([y, x, y2]) - v([y, y2, x])).rem_euclid(5) as u64;
            assert_eq!(h.at(t)[0], eh);
        });
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(4, 2).len(), 6);
        assert_eq!(shuffles(4, 1).len(), 4);
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(shuffles(3, 2), vec![vec![0, 1, 2], vec![0, 2, 1], vec![2, 0, 1]]);
    }

    #[test]
    fn from_values_rejects_bad_tables() {
        let (b, a) = (z(2), z(3));
        assert!(matches!(
            Cochain::from_values(&b, &a, 1, vec![1, 0]),
            Err(Error::NotNormalized(_))
        ));
        assert!(Cochain::from_values(&b, &a, 1, vec![0, 3]).is_err());
        assert!(Cochain::from_values(&b, &a, 1, vec![0]).is_err());
        assert!(Cochain::from_values(&b, &a, 1, vec![0, 2]).is_ok());
    }

    #[test]
    fn restrict_fixes_a_slot() {
        let (b, a) = (z(3), z(3));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = Cochain::random(&b, &a, 3, &mut rng);
        let r = f.restrict(1, 2);
        for_each_tuple(3, 2, |t| assert_eq!(r.at(t), f.at(&[t[0], 2, t[1]])));
    }

    #[test]
    fn trivial_codomain() {
        let c = Cochain::zero(&z(3), &FinAbGroup::trivial(), 2);
        assert!(c.is_zero());
        assert!(c.is_cocycle().passed());
        assert_eq!(c.nonzero_entries().count(), 0);
    }

    #[test]
    fn multilinear_and_alternating_reports() {
        let b = FinAbGroup::elementary(2, 2);
        let a = z(2);
        // x1*y2 - x2*y1: the determinant form on (Z/2)^2
        let det = Cochain::from_fn(&b, &a, 2, |t, out| {
            let (x, y) = (b.element_at(t[0]), b.element_at(t[1]));
            out[0] = x.coords()[0] * y.coords()[1] + x.coords()[1] * y.coords()[0];
        });
        assert!(det.multilinearity().passed());
        // over Z/2, det(x,x) = 2 x1 x2 = 0
        assert!(det.alternation().passed());
        let bad = ind(&z(3), &z(3), &[1, 1], 1);
        assert!(!bad.multilinearity().passed());
        assert!(!bad.alternation().passed());
    }
}
