//! Four-cocycles, their 3|1, 1|3 and 2|2 shuffle families, the induced
//! triextension, its alternating refinement and the trivializing 3-cochain.
//!
//! Triextension cochains are stored as arity-4 tables with the slot order
//! of their names: `G1(x1,x2;y|z)`, `G2(x;y1,y2|z)`, `G3(x|y;z1,z2)`.

use crate::abelian::FinAbGroup;
use crate::biext::{alt_triple_report, lambda_of, same_groups, BiextPair};
use crate::cochain::{AddTable, Cochain};
use crate::commutator::{braid_report, symmetry_report};
use crate::error::{Error, Result};
use crate::linsys::{for_each_nondegenerate, CochainSystem, Limits, SolveOutcome};
use crate::report::{scan, Report, Violation};

/// A normalized 4-cocycle `f: B^4 -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourCocycleData {
    f: Cochain,
}

impl FourCocycleData {
    pub fn new(f: Cochain) -> Result<Self> {
        if f.arity() != 4 {
            return Err(Error::ArityMismatch { expected: 4, found: f.arity() });
        }
        let r = f.is_cocycle();
        if !r.passed() {
            return Err(Error::Precondition(Box::new(r)));
        }
        Ok(FourCocycleData { f })
    }

    pub fn f(&self) -> &Cochain {
        &self.f
    }

    pub fn domain(&self) -> &FinAbGroup {
        self.f.domain()
    }

    pub fn codomain(&self) -> &FinAbGroup {
        self.f.codomain()
    }
}

/// The three shuffle families of a 4-cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Families {
    /// `psi(x1,x2,x3|w)`: `w` shuffled through the first three arguments.
    pub psi: Cochain,
    /// `phi(x1|x2,x3,x4)`: `x1` shuffled through the last three.
    pub phi: Cochain,
    /// `chi(x1,x2|x3,x4)`.
    pub chi: Cochain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriextData {
    pub g1: Cochain,
    pub g2: Cochain,
    pub g3: Cochain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltTriextData {
    pub base: TriextData,
    /// `u1(x,z)`: trivializes the diagonal in the first two slots.
    pub u1: Cochain,
    /// `u2(x,y)`: trivializes the diagonal in the last two slots.
    pub u2: Cochain,
}

impl TriextData {
    pub fn new(g1: Cochain, g2: Cochain, g3: Cochain) -> Result<Self> {
        same_groups(&[&g1, &g2, &g3], &[4, 4, 4])?;
        Ok(TriextData { g1, g2, g3 })
    }

    /// The triextension of partial differences of a 3-cochain `theta`.
    pub fn split(theta: &Cochain) -> Self {
        assert_eq!(theta.arity(), 3, "split triextensions come from 3-cochains");
        let (b, a) = (theta.domain(), theta.codomain());
        let add = AddTable::new(b);
        let diff = |slot: usize| {
            Cochain::from_fn(b, a, 4, |t, out| {
                // t = (p, q) in `slot`, the other two arguments around them
                let mut args = [0usize; 3];
                let mut rest = t.iter().enumerate().filter(|&(i, _)| i != slot && i != slot + 1);
                for (s, v) in args.iter_mut().enumerate() {
                    if s != slot {
                        *v = *rest.next().expect("two fixed arguments").1;
                    }
                }
                let (p, q) = (t[slot], t[slot + 1]);
                for (val, coef) in [(add.add(p, q), 1), (p, -1), (q, -1)] {
                    args[slot] = val;
                    theta.acc(out, &args, coef);
                }
            })
        };
        TriextData { g1: diff(0), g2: diff(1), g3: diff(2) }
    }

    pub fn domain(&self) -> &FinAbGroup {
        self.g1.domain()
    }

    pub fn codomain(&self) -> &FinAbGroup {
        self.g1.codomain()
    }

    /// `(G1(.,.;.|z), G2(.;.,.|z))`.
    pub fn pair_at_z(&self, z: usize) -> BiextPair {
        BiextPair { g: self.g1.restrict(3, z), h: self.g2.restrict(3, z) }
    }

    /// `(G2(x;.,.|.), G3(x|.;.,.))`.
    pub fn pair_at_x(&self, x: usize) -> BiextPair {
        BiextPair { g: self.g2.restrict(0, x), h: self.g3.restrict(0, x) }
    }

    /// `(G1(.,.;y|.), G3(.|y;.,.))`.
    pub fn pair_at_y(&self, y: usize) -> BiextPair {
        BiextPair { g: self.g1.restrict(2, y), h: self.g3.restrict(1, y) }
    }
}

impl AltTriextData {
    pub fn new(base: TriextData, u1: Cochain, u2: Cochain) -> Result<Self> {
        same_groups(&[&base.g1, &u1, &u2], &[4, 2, 2])?;
        Ok(AltTriextData { base, u1, u2 })
    }

    /// Split data of `theta`, with `u1(x,z) = theta(x,x,z)` and
    /// `u2(x,z) = theta(x,z,z)`.
    pub fn split(theta: &Cochain) -> Self {
        let (b, a) = (theta.domain(), theta.codomain());
        let u1 = Cochain::from_fn(b, a, 2, |t, out| theta.acc(out, &[t[0], t[0], t[1]], 1));
        let u2 = Cochain::from_fn(b, a, 2, |t, out| theta.acc(out, &[t[0], t[1], t[1]], 1));
        AltTriextData { base: TriextData::split(theta), u1, u2 }
    }
}

/// The alternating sum of `f` over `S_4`.
pub fn quadralinear_map(c: &FourCocycleData) -> Cochain {
    c.f.alternating_sum()
}

pub fn derive_families(c: &FourCocycleData) -> Families {
    let f = &c.f;
    Families {
        psi: f.shuffle_sym(3, -1).expect("valid block"),
        phi: f.shuffle_sym(1, 1).expect("valid block"),
        chi: f.shuffle_sym(2, -1).expect("valid block"),
    }
}

/// The 2|1 symmetrization of the `phi` family on its last three slots. It
/// agrees with `G2` whenever the quadralinear map vanishes.
pub fn phi_gamma(fam: &Families) -> Cochain {
    fam.phi.shuffle_sym_window(1, 3, 2, 1).expect("valid block")
}

/// `G1`, `G2` from the commutator pairs of `psi(.,.,.|w)` and `G3` from
/// those of `phi(x|.,.,.)`. Requires the quadralinear map to vanish.
pub fn derive_triext(c: &FourCocycleData) -> Result<TriextData> {
    let ell = quadralinear_map(c);
    if !ell.is_zero() {
        return Err(Error::Obstruction { kind: "quadralinear map", witness: Box::new(ell) });
    }
    Ok(triext_of_families(&derive_families(c)))
}

pub(crate) fn triext_of_families(fam: &Families) -> TriextData {
    TriextData {
        g1: fam.psi.shuffle_sym_window(0, 3, 2, 1).expect("valid block"),
        g2: fam.psi.shuffle_sym_window(0, 3, 1, -1).expect("valid block"),
        g3: fam.phi.shuffle_sym_window(1, 3, 1, -1).expect("valid block"),
    }
}

fn require(report: Report) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Precondition(Box::new(report)))
    }
}

/// Cocycle, symmetry and pairwise compatibility conditions of a
/// triextension. Violations are reported in the full argument order, e.g.
/// `(x1,x2,x3,y,z)` for the `G1` cocycle condition.
pub fn check_triext(t: &TriextData) -> Report {
    let (b, a) = (t.domain(), t.codomain());
    let add = AddTable::new(b);
    let (g1, g2, g3) = (&t.g1, &t.g2, &t.g3);
    let mut r = Report::new();
    // a 2-cocycle condition in the pair of slots (s, s+1) of a 4-table
    let cocycle = |g: &Cochain, s: usize| {
        scan(b, a, 5, |v, out| {
            let (p, q, w) = (v[s], v[s + 1], v[s + 2]);
            let at = |x: usize, y: usize| {
                let mut args = [0usize; 4];
                let mut k = 0;
                for (i, slot) in args.iter_mut().enumerate() {
                    *slot = if i == s {
                        x
                    } else if i == s + 1 {
                        y
                    } else {
                        let j = if k < s { k } else { k + 3 };
                        k += 1;
                        v[j]
                    };
                }
                args
            };
            g.acc(out, &at(q, w), 1);
            g.acc(out, &at(add.add(p, q), w), -1);
            g.acc(out, &at(p, add.add(q, w)), 1);
            g.acc(out, &at(p, q), -1);
        })
    };
    let symmetric = |g: &Cochain, s: usize| {
        scan(b, a, 4, |v, out| {
            let mut w = [v[0], v[1], v[2], v[3]];
            g.acc(out, &w, 1);
            w.swap(s, s + 1);
            g.acc(out, &w, -1);
        })
    };
    r.push("G1 cocycle", cocycle(g1, 0));
    r.push("G1 symmetric", symmetric(g1, 0));
    r.push("G2 cocycle", cocycle(g2, 1));
    r.push("G2 symmetric", symmetric(g2, 1));
    r.push("G3 cocycle", cocycle(g3, 2));
    r.push("G3 symmetric", symmetric(g3, 2));
    r.push(
        "compat12",
        scan(b, a, 5, |v, out| {
            let (x1, x2, y1, y2, z) = (v[0], v[1], v[2], v[3], v[4]);
            g2.acc(out, &[add.add(x1, x2), y1, y2, z], 1);
            g2.acc(out, &[x1, y1, y2, z], -1);
            g2.acc(out, &[x2, y1, y2, z], -1);
            g1.acc(out, &[x1, x2, add.add(y1, y2), z], -1);
            g1.acc(out, &[x1, x2, y1, z], 1);
            g1.acc(out, &[x1, x2, y2, z], 1);
        }),
    );
    r.push(
        "compat23",
        scan(b, a, 5, |v, out| {
            let (x, y1, y2, z1, z2) = (v[0], v[1], v[2], v[3], v[4]);
            g3.acc(out, &[x, add.add(y1, y2), z1, z2], 1);
            g3.acc(out, &[x, y1, z1, z2], -1);
            g3.acc(out, &[x, y2, z1, z2], -1);
            g2.acc(out, &[x, y1, y2, add.add(z1, z2)], -1);
            g2.acc(out, &[x, y1, y2, z1], 1);
            g2.acc(out, &[x, y1, y2, z2], 1);
        }),
    );
    r.push(
        "compat13",
        scan(b, a, 5, |v, out| {
            let (x1, x2, y, z1, z2) = (v[0], v[1], v[2], v[3], v[4]);
            g3.acc(out, &[add.add(x1, x2), y, z1, z2], 1);
            g3.acc(out, &[x1, y, z1, z2], -1);
            g3.acc(out, &[x2, y, z1, z2], -1);
            g1.acc(out, &[x1, x2, y, add.add(z1, z2)], -1);
            g1.acc(out, &[x1, x2, y, z1], 1);
            g1.acc(out, &[x1, x2, y, z2], 1);
        }),
    );
    r
}

/// Runs `inner` on every fiber `v` of `B` and keeps, per check, the first
/// failure, with the fiber element inserted at `slot` of the arguments.
fn fiberwise(b: &FinAbGroup, slot: usize, mut inner: impl FnMut(usize) -> Result<Report>) -> Result<Report> {
    let mut acc: Vec<(String, Option<Violation>)> = Vec::new();
    for v in 0..b.order() {
        let r = inner(v)?;
        if acc.is_empty() {
            acc = r.checks().iter().map(|c| (c.name.clone(), None)).collect();
        }
        for (entry, c) in acc.iter_mut().zip(r.checks()) {
            if entry.1.is_none() {
                if let Some(viol) = &c.violation {
                    let mut viol = viol.clone();
                    let at = slot.min(viol.args.len());
                    viol.args.insert(at, b.element_at(v));
                    entry.1 = Some(viol);
                }
            }
        }
    }
    let mut out = Report::new();
    for (name, viol) in acc {
        out.push(name, viol);
    }
    Ok(out)
}

/// `lambda12(x,y|z)`, the lambda of the pair at `z`.
fn lambda12(t: &TriextData, add: &AddTable) -> Cochain {
    Cochain::from_fn(t.domain(), t.codomain(), 3, |v, out| {
        let (b1, b2, z) = (v[0], v[1], v[2]);
        t.g1.acc(out, &[b1, b2, add.add(b1, b2), z], 1);
        t.g2.acc(out, &[b1, b1, b2, z], 1);
        t.g2.acc(out, &[b2, b1, b2, z], 1);
    })
}

/// `lambda23(x|y,z)`, the lambda of the pair at `x`.
fn lambda23(t: &TriextData, add: &AddTable) -> Cochain {
    Cochain::from_fn(t.domain(), t.codomain(), 3, |v, out| {
        let (x, b1, b2) = (v[0], v[1], v[2]);
        t.g2.acc(out, &[x, b1, b2, add.add(b1, b2)], 1);
        t.g3.acc(out, &[x, b1, b1, b2], 1);
        t.g3.acc(out, &[x, b2, b1, b2], 1);
    })
}

/// `lambda13(x,z|y)`, the lambda of the pair at `y`.
fn lambda13(t: &TriextData, add: &AddTable) -> Cochain {
    Cochain::from_fn(t.domain(), t.codomain(), 3, |v, out| {
        let (b1, b2, y) = (v[0], v[1], v[2]);
        t.g1.acc(out, &[b1, b2, y, add.add(b1, b2)], 1);
        t.g3.acc(out, &[b1, y, b1, b2], 1);
        t.g3.acc(out, &[b2, y, b1, b2], 1);
    })
}

/// `s1(x,y,z) = u1(x+y,z) - u1(x,z) - u1(y,z) - lambda12(x,y|z)` and
/// `s2(x,y,z) = u2(x,y+z) - u2(x,y) - u2(x,z) - lambda23(x|y,z)`.
fn s_maps(d: &AltTriextData, add: &AddTable) -> (Cochain, Cochain) {
    let t = &d.base;
    let (b, a) = (t.domain(), t.codomain());
    let (l12, l23) = (lambda12(t, add), lambda23(t, add));
    let s1 = Cochain::from_fn(b, a, 3, |v, out| {
        let (x, y, z) = (v[0], v[1], v[2]);
        d.u1.acc(out, &[add.add(x, y), z], 1);
        d.u1.acc(out, &[x, z], -1);
        d.u1.acc(out, &[y, z], -1);
        l12.acc(out, v, -1);
    });
    let s2 = Cochain::from_fn(b, a, 3, |v, out| {
        let (x, y, z) = (v[0], v[1], v[2]);
        d.u2.acc(out, &[x, add.add(y, z)], 1);
        d.u2.acc(out, &[x, y], -1);
        d.u2.acc(out, &[x, z], -1);
        l23.acc(out, v, -1);
    });
    (s1, s2)
}

/// Checks an alternating triextension. The underlying triextension must
/// pass [`check_triext`].
pub fn check_alt_triext(d: &AltTriextData) -> Result<Report> {
    let t = &d.base;
    same_groups(&[&t.g1, &t.g2, &t.g3, &d.u1, &d.u2], &[4, 4, 4, 2, 2])?;
    require(check_triext(t))?;
    let (b, a) = (t.domain(), t.codomain());
    let add = AddTable::new(b);
    let (g1, g3, u1, u2) = (&t.g1, &t.g3, &d.u1, &d.u2);
    let mut r = Report::new();

    let alt12 = fiberwise(b, usize::MAX, |z| {
        let p = t.pair_at_z(z);
        let lam = lambda_of(&p)?;
        Ok(alt_triple_report(&p, &lam, &u1.restrict(1, z)))
    })?;
    r.absorb("alt12 ", alt12);
    let alt23 = fiberwise(b, 0, |x| {
        let p = t.pair_at_x(x);
        let lam = lambda_of(&p)?;
        Ok(alt_triple_report(&p, &lam, &u2.restrict(0, x)))
    })?;
    r.absorb("alt23 ", alt23);

    r.push(
        "lin u2",
        scan(b, a, 3, |v, out| {
            let (x, x2, z) = (v[0], v[1], v[2]);
            u2.acc(out, &[add.add(x, x2), z], 1);
            u2.acc(out, &[x, z], -1);
            u2.acc(out, &[x2, z], -1);
            g1.acc(out, &[x, x2, z, z], -1);
        }),
    );
    r.push(
        "lin u1",
        scan(b, a, 3, |v, out| {
            let (x, z, z2) = (v[0], v[1], v[2]);
            u1.acc(out, &[x, add.add(z, z2)], 1);
            u1.acc(out, &[x, z], -1);
            u1.acc(out, &[x, z2], -1);
            g3.acc(out, &[x, x, z, z2], -1);
        }),
    );
    r.push(
        "tri1",
        scan(b, a, 1, |v, out| {
            u1.acc(out, &[v[0], v[0]], 1);
            u2.acc(out, &[v[0], v[0]], -1);
        }),
    );
    let (s1, s2) = s_maps(d, &add);
    r.push(
        "t4",
        scan(b, a, 2, |v, out| {
            let (x, y) = (v[0], v[1]);
            u1.acc(out, &[y, x], 1);
            u2.acc(out, &[x, y], -1);
            s2.acc(out, &[y, x, y], -1);
            s1.acc(out, &[y, x, y], 1);
        }),
    );
    r.push(
        "s1t1",
        scan(b, a, 2, |v, out| {
            s1.acc(out, &[v[0], v[0], v[1]], 1);
            u1.acc(out, v, -2);
        }),
    );
    r.push(
        "s2t2",
        scan(b, a, 2, |v, out| {
            s2.acc(out, &[v[0], v[1], v[1]], 1);
            u2.acc(out, v, -2);
        }),
    );
    Ok(r)
}

/// The derived diagonal `t3(x,y) = s1(x,y,x) - u2(y,x)` with a report of
/// its consistency conditions: agreement with `s2(x,y,x) - u1(x,y)`,
/// linearity in `y`, the decomposition of
/// `s3(x,y,z) = t3(x+z,y) - t3(x,y) - t3(z,y) - lambda13(x,z|y)` and the
/// recovery of `u1`, `u2` from `s3`.
pub fn derive_t3(d: &AltTriextData) -> Result<(Cochain, Report)> {
    require(check_alt_triext(d)?)?;
    let t = &d.base;
    let (b, a) = (t.domain(), t.codomain());
    let add = AddTable::new(b);
    let (s1, s2) = s_maps(d, &add);
    let (u1, u2) = (&d.u1, &d.u2);
    let t3 = Cochain::from_fn(b, a, 2, |v, out| {
        s1.acc(out, &[v[0], v[1], v[0]], 1);
        u2.acc(out, &[v[1], v[0]], -1);
    });
    let l13 = lambda13(t, &add);
    let s3 = Cochain::from_fn(b, a, 3, |v, out| {
        let (x, y, z) = (v[0], v[1], v[2]);
        t3.acc(out, &[add.add(x, z), y], 1);
        t3.acc(out, &[x, y], -1);
        t3.acc(out, &[z, y], -1);
        l13.acc(out, &[x, z, y], -1);
    });
    let mut r = Report::new();
    r.push(
        "t33",
        scan(b, a, 2, |v, out| {
            t3.acc(out, v, 1);
            s2.acc(out, &[v[0], v[1], v[0]], -1);
            u1.acc(out, v, 1);
        }),
    );
    r.push(
        "t3 linear",
        scan(b, a, 3, |v, out| {
            let (x, y, y2) = (v[0], v[1], v[2]);
            t3.acc(out, &[x, add.add(y, y2)], 1);
            t3.acc(out, &[x, y], -1);
            t3.acc(out, &[x, y2], -1);
            t.g2.acc(out, &[x, y, y2, x], -1);
        }),
    );
    r.push(
        "s123",
        scan(b, a, 3, |v, out| {
            let (x, y, z) = (v[0], v[1], v[2]);
            s3.acc(out, v, 1);
            s1.acc(out, &[x, y, z], -1);
            s1.acc(out, &[z, y, x], -1);
            s2.acc(out, &[y, x, z], 1);
        }),
    );
    r.push(
        "t123 u1",
        scan(b, a, 2, |v, out| {
            let (x, z) = (v[0], v[1]);
            u1.acc(out, v, 1);
            s3.acc(out, &[x, x, z], -1);
            u2.acc(out, &[z, x], 1);
        }),
    );
    r.push(
        "t123 u2",
        scan(b, a, 2, |v, out| {
            let (x, z) = (v[0], v[1]);
            u2.acc(out, v, 1);
            s3.acc(out, &[x, z, z], -1);
            u1.acc(out, &[z, x], 1);
        }),
    );
    Ok((t3, r))
}

/// Solves for `theta: B^3 -> A` whose partial differences are `G1, G2, G3`
/// and which vanishes on `(x,x,z)` and `(x,z,z)`.
pub fn solve_theta(t: &TriextData, limits: &Limits) -> Result<SolveOutcome> {
    same_groups(&[&t.g1, &t.g2, &t.g3], &[4, 4, 4])?;
    require(check_triext(t))?;
    let (b, a) = (t.domain(), t.codomain());
    let add = AddTable::new(b);
    let n = b.order();
    let mut sys = CochainSystem::new(b, a, 3);
    let families: [(&'static str, &Cochain); 3] = [("theta G1", &t.g1), ("theta G2", &t.g2), ("theta G3", &t.g3)];
    for (slot, (family, g)) in families.into_iter().enumerate() {
        for_each_nondegenerate(n, 4, |v| {
            let (p, q) = (v[slot], v[slot + 1]);
            let mut base = [0usize; 3];
            let mut k = 0;
            for (i, x) in v.iter().enumerate() {
                if i != slot && i != slot + 1 {
                    if k == slot {
                        k += 1;
                    }
                    base[k] = *x;
                    k += 1;
                }
            }
            let with = |val: usize| {
                let mut args = base;
                args[slot] = val;
                args
            };
            sys.equation(family, v)
                .term(&with(add.add(p, q)), 1)
                .term(&with(p), -1)
                .term(&with(q), -1)
                .rhs(g.at(v), 1)
                .push();
        });
    }
    for_each_nondegenerate(n, 2, |v| {
        sys.equation("theta diag1", v).term(&[v[0], v[0], v[1]], 1).push();
    });
    for_each_nondegenerate(n, 2, |v| {
        sys.equation("theta diag2", v).term(&[v[0], v[1], v[1]], 1).push();
    });
    sys.solve(limits)
}

/// For every `w`, `(psi(.,.,.|w), theta(.,.,w))` must be a strict Picard
/// braiding; for every `x1`, so must `(phi(x1|.,.,.), theta(x1,.,.))`.
pub fn check_picard_family(c: &FourCocycleData, theta: &Cochain) -> Result<Report> {
    same_groups(&[&c.f, theta], &[4, 3])?;
    let b = c.domain();
    let fam = derive_families(c);
    let per = |f: Cochain, g: Cochain| {
        let mut r = braid_report(&f, &g);
        r.absorb("", symmetry_report(&g));
        Ok(r)
    };
    let mut r = Report::new();
    r.absorb("psi ", fiberwise(b, usize::MAX, |w| per(fam.psi.restrict(3, w), theta.restrict(2, w)))?);
    r.absorb("phi ", fiberwise(b, 0, |x| per(fam.phi.restrict(0, x), theta.restrict(0, x)))?);
    Ok(r)
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
    fn split_data_passes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (b, a) in [(z(2), z(2)), (z(3), z(3)), (z(4), z(2)), (FinAbGroup::elementary(2, 2), z(2))] {
            for _ in 0..3 {
                let theta = Cochain::random(&b, &a, 3, &mut rng);
                let d = AltTriextData::split(&theta);
                let tr = check_triext(&d.base);
                assert!(tr.passed(), "{tr}");
                let ar = check_alt_triext(&d).unwrap();
                assert!(ar.passed(), "{ar}");
                let (t3, r) = derive_t3(&d).unwrap();
                assert!(r.passed(), "{r}");
                let expect = Cochain::from_fn(&b, &a, 2, |v, out| theta.acc(out, &[v[0], v[1], v[0]], 1));
                assert_eq!(t3, expect);
            }
        }
    }

    #[test]
    fn coboundary_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let l = Limits::default();
        for (b, a) in [(z(2), z(2)), (z(3), z(3)), (z(4), z(4)), (FinAbGroup::elementary(2, 2), z(2))] {
            for _ in 0..3 {
                let m = Cochain::random(&b, &a, 3, &mut rng);
                let c = FourCocycleData::new(m.coboundary()).unwrap();
                let fam = derive_families(&c);
                let t = derive_triext(&c).unwrap();
                assert_eq!(phi_gamma(&fam), t.g2);
                let r = check_triext(&t);
                assert!(r.passed(), "{r}");
                let d = AltTriextData { base: t.clone(), u1: Cochain::zero(&b, &a, 2), u2: Cochain::zero(&b, &a, 2) };
                assert!(check_alt_triext(&d).unwrap().passed());
                assert!(derive_t3(&d).unwrap().1.passed());
                let theta = solve_theta(&t, &l).unwrap().into_witness().expect("theta exists");
                let pr = check_picard_family(&c, &theta).unwrap();
                assert!(pr.passed(), "{pr}");
            }
        }
    }

    #[test]
    fn witness_quadralinear_map() {
        let b = FinAbGroup::elementary(2, 4);
        let a = z(2);
        let f = Cochain::from_fn(&b, &a, 4, |v, out| {
            out[0] = (0..4).map(|i| b.element_at(v[i]).coords()[i]).product();
        });
        let c = FourCocycleData::new(f).unwrap();
        match derive_triext(&c) {
            Err(Error::Obstruction { kind, witness }) => {
                assert_eq!(kind, "quadralinear map");
                let arg: Vec<_> = (0..4).map(|i| {
                    let mut e = vec![0; 4];
                    e[i] = 1;
                    b.element(e).unwrap()
                }).collect();
                assert_eq!(witness.eval(&arg).unwrap().coords(), &[1]);
            }
            other => panic!("expected obstruction, got {other:?}"),
        }
    }

    #[test]
    fn perturbed_theta_is_located() {
        let (b, a) = (z(3), z(3));
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let m = Cochain::random(&b, &a, 3, &mut rng);
        let c = FourCocycleData::new(m.coboundary()).unwrap();
        let t = derive_triext(&c).unwrap();
        let mut theta = solve_theta(&t, &Limits::default()).unwrap().into_witness().unwrap();
        let at = [b.element_at(1), b.element_at(2), b.element_at(1)];
        let old = theta.eval(&at).unwrap();
        theta.set(&at, &a.add(&old, &a.element_at(1)).unwrap()).unwrap();
        let r = check_picard_family(&c, &theta).unwrap();
        assert!(!r.passed());
    }
}
