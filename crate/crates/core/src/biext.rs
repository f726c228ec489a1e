//! Biextensions of `B x B` by `A` with trivial underlying torsor.
//!
//! Such a biextension is a pair of 3-cochains: `g(b1,b2;b')` describes the
//! first partial law (adding in the first variable, `b'` fixed) and
//! `h(b;b1',b2')` the second. Alternating structure adds a diagonal section
//! `u` and, in the quadruple form, the anti-symmetry map `phi`.

use crate::abelian::FinAbGroup;
use crate::cochain::{AddTable, Cochain};
use crate::error::{Error, Result};
use crate::linsys::{for_each_nondegenerate, CochainSystem, Limits, SolveOutcome};
use crate::report::{scan, Report};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiextPair {
    pub g: Cochain,
    pub h: Cochain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltQuadruple {
    pub pair: BiextPair,
    pub phi: Cochain,
    pub u: Cochain,
}

pub(crate) fn same_groups(cs: &[&Cochain], arities: &[usize]) -> Result<()> {
    let first = cs[0];
    for (c, &n) in cs.iter().zip(arities) {
        if c.domain() != first.domain() || c.codomain() != first.codomain() {
            return Err(Error::mismatch(format!(
                "expected cochains on {:?} -> {:?}, found {:?} -> {:?}",
                first.domain(),
                first.codomain(),
                c.domain(),
                c.codomain()
            )));
        }
        if c.arity() != n {
            return Err(Error::ArityMismatch { expected: n, found: c.arity() });
        }
    }
    Ok(())
}

impl BiextPair {
    pub fn new(g: Cochain, h: Cochain) -> Result<Self> {
        same_groups(&[&g, &h], &[3, 3])?;
        Ok(BiextPair { g, h })
    }

    pub fn zero(b: &FinAbGroup, a: &FinAbGroup) -> Self {
        BiextPair { g: Cochain::zero(b, a, 3), h: Cochain::zero(b, a, 3) }
    }

    /// The split pair of a 2-cochain `k`: `g = d_1 k`, `h = d_2 k`.
    pub fn split(k: &Cochain) -> Self {
        assert_eq!(k.arity(), 2, "split pairs come from 2-cochains");
        let (b, a) = (k.domain(), k.codomain());
        let add = AddTable::new(b);
        let g = Cochain::from_fn(b, a, 3, |t, out| {
            k.acc(out, &[add.add(t[0], t[1]), t[2]], 1);
            k.acc(out, &[t[0], t[2]], -1);
            k.acc(out, &[t[1], t[2]], -1);
        });
        let h = Cochain::from_fn(b, a, 3, |t, out| {
            k.acc(out, &[t[0], add.add(t[1], t[2])], 1);
            k.acc(out, &[t[0], t[1]], -1);
            k.acc(out, &[t[0], t[2]], -1);
        });
        BiextPair { g, h }
    }

    pub fn domain(&self) -> &FinAbGroup {
        self.g.domain()
    }

    pub fn codomain(&self) -> &FinAbGroup {
        self.g.codomain()
    }
}

impl AltQuadruple {
    pub fn new(pair: BiextPair, phi: Cochain, u: Cochain) -> Result<Self> {
        same_groups(&[&pair.g, &phi, &u], &[3, 2, 1])?;
        Ok(AltQuadruple { pair, phi, u })
    }

    pub fn zero(b: &FinAbGroup, a: &FinAbGroup) -> Self {
        AltQuadruple {
            pair: BiextPair::zero(b, a),
            phi: Cochain::zero(b, a, 2),
            u: Cochain::zero(b, a, 1),
        }
    }

    /// The quadruple carried by the split pair of `k`, with
    /// `phi(x,y) = k(x,y) + k(y,x)` and `u(x) = k(x,x)`.
    pub fn split(k: &Cochain) -> Self {
        let (b, a) = (k.domain(), k.codomain());
        let phi = Cochain::from_fn(b, a, 2, |t, out| {
            k.acc(out, t, 1);
            k.acc(out, &[t[1], t[0]], 1);
        });
        let u = Cochain::from_fn(b, a, 1, |t, out| k.acc(out, &[t[0], t[0]], 1));
        AltQuadruple { pair: BiextPair::split(k), phi, u }
    }
}

/// The 2-cocycle, commutativity and compatibility conditions on `(g, h)`.
///
/// Violating tuples are reported as `(x1,x2,x3,b')` for the `g` cocycle
/// condition, `(b,y1,y2,y3)` for `h`, `(b1,b2,b1',b2')` for compatibility and
/// the natural argument order for commutativity.
pub fn check_biext_pair(p: &BiextPair, require_commutative: bool) -> Report {
    let (b, a) = (p.domain(), p.codomain());
    let add = AddTable::new(b);
    let (g, h) = (&p.g, &p.h);
    let mut r = Report::new();
    r.push(
        "bicocyc g",
        scan(b, a, 4, |t, out| {
            let (x1, x2, x3, y) = (t[0], t[1], t[2], t[3]);
            g.acc(out, &[x2, x3, y], 1);
            g.acc(out, &[add.add(x1, x2), x3, y], -1);
            g.acc(out, &[x1, add.add(x2, x3), y], 1);
            g.acc(out, &[x1, x2, y], -1);
        }),
    );
    r.push(
        "bicocyc h",
        scan(b, a, 4, |t, out| {
            let (x, y1, y2, y3) = (t[0], t[1], t[2], t[3]);
            h.acc(out, &[x, y2, y3], 1);
            h.acc(out, &[x, add.add(y1, y2), y3], -1);
            h.acc(out, &[x, y1, add.add(y2, y3)], 1);
            h.acc(out, &[x, y1, y2], -1);
        }),
    );
    if require_commutative {
        r.push(
            "bicom g",
            scan(b, a, 3, |t, out| {
                g.acc(out, t, 1);
                g.acc(out, &[t[1], t[0], t[2]], -1);
            }),
        );
        r.push(
            "bicom h",
            scan(b, a, 3, |t, out| {
                h.acc(out, t, 1);
                h.acc(out, &[t[0], t[2], t[1]], -1);
            }),
        );
    }
    r.push(
        "bicompat",
        scan(b, a, 4, |t, out| {
            let (b1, b2, c1, c2) = (t[0], t[1], t[2], t[3]);
            h.acc(out, &[add.add(b1, b2), c1, c2], 1);
            h.acc(out, &[b1, c1, c2], -1);
            h.acc(out, &[b2, c1, c2], -1);
            g.acc(out, &[b1, b2, add.add(c1, c2)], -1);
            g.acc(out, &[b1, b2, c1], 1);
            g.acc(out, &[b1, b2, c2], 1);
        }),
    );
    r
}

fn lambda_first(p: &BiextPair, add: &AddTable) -> Cochain {
    let (g, h) = (&p.g, &p.h);
    Cochain::from_fn(p.domain(), p.codomain(), 2, |t, out| {
        let (b1, b2) = (t[0], t[1]);
        g.acc(out, &[b1, b2, add.add(b1, b2)], 1);
        h.acc(out, &[b1, b1, b2], 1);
        h.acc(out, &[b2, b1, b2], 1);
    })
}

fn lambda_second(p: &BiextPair, add: &AddTable) -> Cochain {
    let (g, h) = (&p.g, &p.h);
    Cochain::from_fn(p.domain(), p.codomain(), 2, |t, out| {
        let (b1, b2) = (t[0], t[1]);
        h.acc(out, &[add.add(b1, b2), b1, b2], 1);
        g.acc(out, &[b1, b2, b1], 1);
        g.acc(out, &[b1, b2, b2], 1);
    })
}

/// `lambda(b1,b2) = g(b1,b2;b1+b2) + h(b1;b1,b2) + h(b2;b1,b2)`, checked
/// against `h(b1+b2;b1,b2) + g(b1,b2;b1) + g(b1,b2;b2)`.
pub fn lambda_of(p: &BiextPair) -> Result<Cochain> {
    let add = AddTable::new(p.domain());
    let first = lambda_first(p, &add);
    let second = lambda_second(p, &add);
    if first != second {
        let mut r = Report::new();
        r.push(
            "lambda formulas agree",
            scan(p.domain(), p.codomain(), 2, |t, out| {
                first.acc(out, t, 1);
                second.acc(out, t, -1);
            }),
        );
        return Err(Error::Precondition(Box::new(r)));
    }
    Ok(first)
}

/// `Theta u(b1,b2,b3) = u(b1+b2+b3) + u(b1) + u(b2) + u(b3)
///  - u(b1+b2) - u(b1+b3) - u(b2+b3)`.
pub fn second_difference(u: &Cochain) -> Cochain {
    assert_eq!(u.arity(), 1, "second difference of a 1-cochain");
    let add = AddTable::new(u.domain());
    Cochain::from_fn(u.domain(), u.codomain(), 3, |t, out| {
        let (x, y, z) = (t[0], t[1], t[2]);
        u.acc(out, &[add.add(add.add(x, y), z)], 1);
        u.acc(out, &[x], 1);
        u.acc(out, &[y], 1);
        u.acc(out, &[z], 1);
        u.acc(out, &[add.add(x, y)], -1);
        u.acc(out, &[add.add(x, z)], -1);
        u.acc(out, &[add.add(y, z)], -1);
    })
}

fn require(report: Report) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Precondition(Box::new(report)))
    }
}

/// The two conditions making `u` a symmetric trivialization of the diagonal.
pub(crate) fn alt_triple_report(p: &BiextPair, lambda: &Cochain, u: &Cochain) -> Report {
    let (b, a) = (p.domain(), p.codomain());
    let add = AddTable::new(b);
    let (g, h) = (&p.g, &p.h);
    let theta = second_difference(u);
    let mut r = Report::new();
    r.push(
        "symcoc1",
        scan(b, a, 1, |t, out| {
            let x = t[0];
            let nx = add.neg(x);
            u.acc(out, &[nx], 1);
            u.acc(out, &[x], -1);
            g.acc(out, &[x, nx, x], -1);
            h.acc(out, &[nx, x, nx], 1);
        }),
    );
    r.push(
        "symcoc2",
        scan(b, a, 3, |t, out| {
            let (b1, b2, b3) = (t[0], t[1], t[2]);
            theta.acc(out, t, 1);
            lambda.acc(out, &[add.add(b1, b2), b3], -1);
            lambda.acc(out, &[b1, b3], 1);
            lambda.acc(out, &[b2, b3], 1);
            g.acc(out, &[b1, b2, b3], -1);
            h.acc(out, &[b3, b1, b2], -1);
        }),
    );
    r
}

/// Checks `(p, u)` as an alternating triple. The pair itself must be a
/// (commutative) biextension.
pub fn check_alt_triple(p: &BiextPair, u: &Cochain) -> Result<Report> {
    same_groups(&[&p.g, &p.h, u], &[3, 3, 1])?;
    require(check_biext_pair(p, true))?;
    let lambda = lambda_of(p)?;
    Ok(alt_triple_report(p, &lambda, u))
}

/// `phi(b,b') = u(b+b') - u(b) - u(b') - lambda(b,b')`.
pub fn triple_to_quadruple(p: &BiextPair, u: &Cochain) -> Result<AltQuadruple> {
    require(check_alt_triple(p, u)?)?;
    let lambda = lambda_of(p)?;
    let add = AddTable::new(p.domain());
    let phi = Cochain::from_fn(p.domain(), p.codomain(), 2, |t, out| {
        u.acc(out, &[add.add(t[0], t[1])], 1);
        u.acc(out, &[t[0]], -1);
        u.acc(out, &[t[1]], -1);
        lambda.acc(out, t, -1);
    });
    Ok(AltQuadruple { pair: p.clone(), phi, u: u.clone() })
}

/// Every condition on a quadruple `(g, h, phi, u)`, each reported separately.
pub fn check_alt_quadruple(q: &AltQuadruple) -> Report {
    let p = &q.pair;
    let (b, a) = (p.domain(), p.codomain());
    let add = AddTable::new(b);
    let (g, h, phi, u) = (&p.g, &p.h, &q.phi, &q.u);
    let mut r = Report::new();
    r.absorb("pair ", check_biext_pair(p, true));

    r.push(
        "phitriv 1",
        scan(b, a, 3, |t, out| {
            let (b1, b2, c) = (t[0], t[1], t[2]);
            phi.acc(out, &[add.add(b1, b2), c], 1);
            phi.acc(out, &[b1, c], -1);
            phi.acc(out, &[b2, c], -1);
            g.acc(out, &[b1, b2, c], -1);
            h.acc(out, &[c, b1, b2], -1);
        }),
    );
    r.push(
        "phitriv 2",
        scan(b, a, 3, |t, out| {
            let (x, c1, c2) = (t[0], t[1], t[2]);
            phi.acc(out, &[x, add.add(c1, c2)], 1);
            phi.acc(out, &[x, c1], -1);
            phi.acc(out, &[x, c2], -1);
            h.acc(out, &[x, c1, c2], -1);
            g.acc(out, &[c1, c2, x], -1);
        }),
    );
    r.push(
        "phisym",
        scan(b, a, 2, |t, out| {
            phi.acc(out, t, 1);
            phi.acc(out, &[t[1], t[0]], -1);
        }),
    );

    let lambda = lambda_first(p, &add);
    let c = &lambda + phi;
    r.push("c cocycle", c.is_cocycle().first_failure().and_then(|x| x.violation.clone()));
    r.push(
        "c symmetric",
        scan(b, a, 2, |t, out| {
            c.acc(out, t, 1);
            c.acc(out, &[t[1], t[0]], -1);
        }),
    );
    r.push(
        "ctriv",
        scan(b, a, 2, |t, out| {
            c.acc(out, t, 1);
            u.acc(out, &[add.add(t[0], t[1])], -1);
            u.acc(out, &[t[0]], 1);
            u.acc(out, &[t[1]], 1);
        }),
    );
    r.push(
        "u2",
        scan(b, a, 1, |t, out| {
            u.acc(out, t, 2);
            phi.acc(out, &[t[0], t[0]], -1);
        }),
    );
    r
}

/// Equations `g = d_1 k` and `h = d_2 k` for an unknown 2-cochain `k`.
fn bitriv_system(p: &BiextPair) -> CochainSystem {
    let (b, a) = (p.domain(), p.codomain());
    let add = AddTable::new(b);
    let mut sys = CochainSystem::new(b, a, 2);
    for_each_nondegenerate(b.order(), 3, |t| {
        let (x1, x2, y) = (t[0], t[1], t[2]);
        sys.equation("bitriv g", t)
            .term(&[add.add(x1, x2), y], 1)
            .term(&[x1, y], -1)
            .term(&[x2, y], -1)
            .rhs(p.g.at(t), 1)
            .push();
    });
    for_each_nondegenerate(b.order(), 3, |t| {
        let (x, y1, y2) = (t[0], t[1], t[2]);
        sys.equation("bitriv h", t)
            .term(&[x, add.add(y1, y2)], 1)
            .term(&[x, y1], -1)
            .term(&[x, y2], -1)
            .rhs(p.h.at(t), 1)
            .push();
    });
    sys
}

/// A 2-cochain `k` with `g = d_1 k` and `h = d_2 k`, if any.
pub fn trivialize_biext(p: &BiextPair, limits: &Limits) -> Result<SolveOutcome> {
    require(check_biext_pair(p, false))?;
    bitriv_system(p).solve(limits)
}

/// As [`trivialize_biext`], additionally with `k(x,x) = u(x)` and
/// `k(x,y) + k(y,x) = phi(x,y)`.
pub fn trivialize_alternating(q: &AltQuadruple, limits: &Limits) -> Result<SolveOutcome> {
    require(check_alt_quadruple(q))?;
    let b = q.pair.domain();
    let mut sys = bitriv_system(&q.pair);
    for x in 1..b.order() {
        sys.equation("ktriv", &[x]).term(&[x, x], 1).rhs(q.u.at(&[x]), 1).push();
    }
    for_each_nondegenerate(b.order(), 2, |t| {
        sys.equation("ktriv2", t)
            .term(t, 1)
            .term(&[t[1], t[0]], 1)
            .rhs(q.phi.at(t), 1)
            .push();
    });
    sys.solve(limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn z(n: u64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    #[test]
    fn zero_data_passes_everything() {
        let (b, a) = (z(3), z(3));
        let p = BiextPair::zero(&b, &a);
        assert!(check_biext_pair(&p, true).passed());
        assert!(lambda_of(&p).unwrap().is_zero());
        let u = Cochain::zero(&b, &a, 1);
        assert!(check_alt_triple(&p, &u).unwrap().passed());
        let q = triple_to_quadruple(&p, &u).unwrap();
        assert_eq!(q, AltQuadruple::zero(&b, &a));
        assert!(check_alt_quadruple(&q).passed());
        let k = trivialize_biext(&p, &Limits::default()).unwrap();
        assert!(k.is_solved());
    }

    #[test]
    fn split_data_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (bn, an) in [(2u64, 2u64), (3, 3), (4, 2), (4, 4)] {
            let (b, a) = (z(bn), z(an));
            let k = Cochain::random(&b, &a, 2, &mut rng);
            let q = AltQuadruple::split(&k);
            let report = check_alt_quadruple(&q);
            assert!(report.passed(), "{report}");
            assert!(check_alt_triple(&q.pair, &q.u).unwrap().passed());
            let q2 = triple_to_quadruple(&q.pair, &q.u).unwrap();
            assert_eq!(q2.phi, q.phi);
            let sol = trivialize_alternating(&q, &Limits::default()).unwrap();
            let kk = sol.witness().expect("split data is trivializable");
            assert_eq!(AltQuadruple::split(kk), q);
        }
    }

    #[test]
    fn second_difference_examples() {
        let b = z(4);
        let u = Cochain::from_fn(&b, &b, 1, |t, out| out[0] = (t[0] * t[0]) as u64);
        let th = second_difference(&u);
        assert_eq!(th.at(&[1, 1, 1]), &[0]);
        // a character has vanishing second difference
        let chi = Cochain::from_fn(&b, &b, 1, |t, out| out[0] = t[0] as u64);
        assert!(second_difference(&chi).is_zero());
    }

    #[test]
    fn u2_failure_is_reported() {
        let (b, a) = (z(2), z(2));
        let mut q = AltQuadruple::zero(&b, &a);
        q.phi = Cochain::from_fn(&b, &a, 2, |_, out| out[0] = 1);
        let r = check_alt_quadruple(&q);
        assert!(!r.holds("u2"));
    }

    #[test]
    fn indicator_u_over_zero_pair() {
        let (b, a) = (z(2), z(2));
        let p = BiextPair::zero(&b, &a);
        let u = Cochain::from_fn(&b, &a, 1, |_, out| out[0] = 1);
        assert!(check_alt_triple(&p, &u).unwrap().passed());
    }

    #[test]
    fn lambda_disagreement_is_an_error() {
        let (b, a) = (z(3), z(3));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = BiextPair { g: Cochain::random(&b, &a, 3, &mut rng), h: Cochain::zero(&b, &a, 3) };
        assert!(matches!(lambda_of(&p), Err(Error::Precondition(_))));
    }
}
