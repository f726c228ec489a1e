//! From an associator 3-cocycle to its commutator biextension, braidings,
//! symmetry and strict Picard structures.

use std::fmt;

use crate::abelian::FinAbGroup;
use crate::biext::{same_groups, AltQuadruple, BiextPair};
use crate::cochain::{AddTable, Cochain};
use crate::error::{Error, Result};
use crate::linsys::{for_each_nondegenerate, CochainSystem, ForcedEquation, Limits, SolutionSet, SolveOutcome};
use crate::report::{scan, Report};

/// A monoidal groupoid with objects `B`, automorphisms `A` and associator
/// class represented by the normalized 3-cocycle `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrCategoryData {
    f: Cochain,
}

impl GrCategoryData {
    pub fn new(f: Cochain) -> Result<Self> {
        if f.arity() != 3 {
            return Err(Error::ArityMismatch { expected: 3, found: f.arity() });
        }
        let r = f.is_cocycle();
        if !r.passed() {
            return Err(Error::Precondition(Box::new(r)));
        }
        Ok(GrCategoryData { f })
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

/// An associator together with a candidate braiding `g2(x,y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidingData {
    pub base: GrCategoryData,
    pub g2: Cochain,
}

impl BraidingData {
    pub fn new(base: GrCategoryData, g2: Cochain) -> Result<Self> {
        same_groups(&[&base.f, &g2], &[3, 2])?;
        Ok(BraidingData { base, g2 })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BraidingClass {
    Braided,
    Symmetric,
    StrictPicard,
}

impl fmt::Display for BraidingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BraidingClass::Braided => "braided",
            BraidingClass::Symmetric => "symmetric",
            BraidingClass::StrictPicard => "strict_picard",
        })
    }
}

/// `g(x,x';y) = f(x,x',y) - f(x,y,x') + f(y,x,x')` and
/// `h(x;y,y') = f(y,x,y') - f(x,y,y') - f(y,y',x)`.
pub fn derive_commutator_pair(c: &GrCategoryData) -> BiextPair {
    let g = c.f.shuffle_sym(2, 1).expect("valid block");
    let h = c.f.shuffle_sym(1, -1).expect("valid block");
    BiextPair { g, h }
}

/// The alternating sum of `f` over `S_3`.
pub fn trilinear_map(c: &GrCategoryData) -> Cochain {
    c.f.alternating_sum()
}

/// The quadruple `(g, h, 0, 0)`, available once the trilinear map vanishes.
pub fn alt_quadruple_of(c: &GrCategoryData) -> Result<AltQuadruple> {
    let phi = trilinear_map(c);
    if !phi.is_zero() {
        return Err(Error::Obstruction { kind: "trilinear map", witness: Box::new(phi) });
    }
    let (b, a) = (c.domain(), c.codomain());
    Ok(AltQuadruple {
        pair: derive_commutator_pair(c),
        phi: Cochain::zero(b, a, 2),
        u: Cochain::zero(b, a, 1),
    })
}

/// The two hexagon equations
/// `f(x,y,z) - f(x,z,y) + f(z,x,y) = g(x+y,z) - g(x,z) - g(y,z)` and
/// `-f(x,y,z) + f(y,x,z) - f(y,z,x) = g(x,y+z) - g(x,y) - g(x,z)`.
pub fn braid_report(f: &Cochain, g: &Cochain) -> Report {
    let (b, a) = (f.domain(), f.codomain());
    let add = AddTable::new(b);
    let mut r = Report::new();
    r.push(
        "braid 1",
        scan(b, a, 3, |t, out| {
            let (x, y, z) = (t[0], t[1], t[2]);
            f.acc(out, &[x, y, z], 1);
            f.acc(out, &[x, z, y], -1);
            f.acc(out, &[z, x, y], 1);
            g.acc(out, &[add.add(x, y), z], -1);
            g.acc(out, &[x, z], 1);
            g.acc(out, &[y, z], 1);
        }),
    );
    r.push(
        "braid 2",
        scan(b, a, 3, |t, out| {
            let (x, y, z) = (t[0], t[1], t[2]);
            f.acc(out, &[x, y, z], -1);
            f.acc(out, &[y, x, z], 1);
            f.acc(out, &[y, z, x], -1);
            g.acc(out, &[x, add.add(y, z)], -1);
            g.acc(out, &[x, y], 1);
            g.acc(out, &[x, z], 1);
        }),
    );
    r
}

/// Symmetry `g(x,y) + g(y,x) = 0` and the strict condition `g(x,x) = 0`.
pub fn symmetry_report(g: &Cochain) -> Report {
    let (b, a) = (g.domain(), g.codomain());
    let mut r = Report::new();
    r.push(
        "symmetric",
        scan(b, a, 2, |t, out| {
            g.acc(out, t, 1);
            g.acc(out, &[t[1], t[0]], 1);
        }),
    );
    r.push("strict", scan(b, a, 1, |t, out| g.acc(out, &[t[0], t[0]], 1)));
    r
}

/// Hexagons, symmetry and strictness of a braiding, all reported.
pub fn check_braiding(b: &BraidingData) -> Report {
    let mut r = braid_report(&b.base.f, &b.g2);
    r.absorb("", symmetry_report(&b.g2));
    r
}

/// The strongest of braided / symmetric / strict Picard that applies.
pub fn classify_braiding(b: &BraidingData) -> Result<BraidingClass> {
    let hex = braid_report(&b.base.f, &b.g2);
    if !hex.passed() {
        return Err(Error::Precondition(Box::new(hex)));
    }
    let sym = symmetry_report(&b.g2);
    Ok(match (sym.holds("symmetric"), sym.holds("strict")) {
        (true, true) => BraidingClass::StrictPicard,
        (true, false) => BraidingClass::Symmetric,
        _ => BraidingClass::Braided,
    })
}

/// Braidings on a fixed associator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Braidings {
    None { forced: Option<ForcedEquation> },
    /// The complete list, in lexicographic order of the tables.
    Listed(Vec<Cochain>),
    /// Too many to list: a particular braiding plus generators of the
    /// differences.
    Generated(SolutionSet),
}

impl Braidings {
    pub fn is_empty(&self) -> bool {
        matches!(self, Braidings::None { .. })
    }
}

fn braid_system(f: &Cochain) -> CochainSystem {
    let (b, a) = (f.domain(), f.codomain());
    let add = AddTable::new(b);
    let mut sys = CochainSystem::new(b, a, 2);
    for_each_nondegenerate(b.order(), 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        sys.equation("braid 1", t)
            .term(&[add.add(x, y), z], 1)
            .term(&[x, z], -1)
            .term(&[y, z], -1)
            .rhs(f.at(&[x, y, z]), 1)
            .rhs(f.at(&[x, z, y]), -1)
            .rhs(f.at(&[z, x, y]), 1)
            .push();
    });
    for_each_nondegenerate(b.order(), 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        sys.equation("braid 2", t)
            .term(&[x, add.add(y, z)], 1)
            .term(&[x, y], -1)
            .term(&[x, z], -1)
            .rhs(f.at(&[x, y, z]), -1)
            .rhs(f.at(&[y, x, z]), 1)
            .rhs(f.at(&[y, z, x]), -1)
            .push();
    });
    sys
}

/// All braidings `g2` solving the hexagon equations for `f`.
pub fn solve_braiding(c: &GrCategoryData, limits: &Limits) -> Result<Braidings> {
    Ok(match braid_system(&c.f).solve(limits)? {
        SolveOutcome::Unsolvable { forced } => Braidings::None { forced },
        SolveOutcome::Solved(set) => match set.enumerate(limits.list_bound) {
            Some(all) => Braidings::Listed(all),
            None => Braidings::Generated(set),
        },
    })
}

/// Outcome of the strict Picard splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PicardOutcome {
    /// `h` with `f = dh` and `g(x,y) = h(x,y) - h(y,x)`.
    Split(Cochain),
    /// No such `h`. Not expected for abelian groups; surfaced, not hidden.
    Anomaly { forced: Option<ForcedEquation> },
}

/// Solves `f = dh`, `g2(x,y) = h(x,y) - h(y,x)` for a strict Picard braiding.
pub fn solve_picard_trivialization(b: &BraidingData, limits: &Limits) -> Result<PicardOutcome> {
    let class = classify_braiding(b)?;
    if class != BraidingClass::StrictPicard {
        let mut r = symmetry_report(&b.g2);
        if r.passed() {
            r.push("strict", None);
        }
        return Err(Error::Precondition(Box::new(r)));
    }
    let f = &b.base.f;
    let (bg, a) = (f.domain(), f.codomain());
    let mut sys = CochainSystem::new(bg, a, 2);
    add_coboundary_equations(&mut sys, f, "pstriv cocycle");
    for_each_nondegenerate(bg.order(), 2, |t| {
        sys.equation("pstriv braid", t)
            .term(t, 1)
            .term(&[t[1], t[0]], -1)
            .rhs(b.g2.at(t), 1)
            .push();
    });
    Ok(match sys.solve(limits)? {
        SolveOutcome::Solved(s) => PicardOutcome::Split(s.particular),
        SolveOutcome::Unsolvable { forced } => PicardOutcome::Anomaly { forced },
    })
}

/// `(dl)(x,y,z) = f(x,y,z)` over all nondegenerate triples.
fn add_coboundary_equations(sys: &mut CochainSystem, f: &Cochain, family: &'static str) {
    let add = AddTable::new(f.domain());
    for_each_nondegenerate(f.domain().order(), 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        sys.equation(family, t)
            .term(&[y, z], 1)
            .term(&[add.add(x, y), z], -1)
            .term(&[x, add.add(y, z)], 1)
            .term(&[x, y], -1)
            .rhs(f.at(t), 1)
            .push();
    });
}

/// Given a trivialization `k` of the alternating quadruple of `f`, solves
/// `f = dl` together with `k(x,y) = l(y,x) - l(x,y)`.
///
/// With `f = dl` the commutator pair is split by `k(x,y) = l(y,x) - l(x,y)`
/// (expand the three shuffle terms); the opposite sign is not solvable in
/// general, e.g. on `Z/3`.
pub fn solve_monoidal_lift(c: &GrCategoryData, k: &Cochain, limits: &Limits) -> Result<SolveOutcome> {
    same_groups(&[&c.f, k], &[3, 2])?;
    let (b, a) = (c.domain(), c.codomain());
    let mut sys = CochainSystem::new(b, a, 2);
    add_coboundary_equations(&mut sys, &c.f, "lift cocycle");
    for_each_nondegenerate(b.order(), 2, |t| {
        sys.equation("lift commutator", t)
            .term(&[t[1], t[0]], 1)
            .term(t, -1)
            .rhs(k.at(t), 1)
            .push();
    });
    sys.solve(limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biext::{check_alt_quadruple, check_biext_pair, trivialize_alternating, trivialize_biext};
    use crate::GroupElem;

    fn z(n: u64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    fn f111() -> GrCategoryData {
        let (b, a) = (z(2), z(2));
        let one = b.element(vec![1]).unwrap();
        let f = Cochain::indicator(&b, &a, &[one.clone(), one.clone(), one.clone()], &one).unwrap();
        GrCategoryData::new(f).unwrap()
    }

    #[test]
    fn indicator_commutator_pair() {
        let c = f111();
        let p = derive_commutator_pair(&c);
        assert_eq!(p.g.nonzero_entries().map(|(t, _)| t).collect::<Vec<_>>(), vec![vec![1, 1, 1]]);
        assert_eq!(p.h.nonzero_entries().map(|(t, _)| t).collect::<Vec<_>>(), vec![vec![1, 1, 1]]);
        assert!(check_biext_pair(&p, true).passed());
        assert!(trilinear_map(&c).is_zero());
        let q = alt_quadruple_of(&c).unwrap();
        assert!(check_alt_quadruple(&q).passed());
    }

    #[test]
    fn indicator_has_no_trivialization() {
        let c = f111();
        let l = Limits::default();
        let p = derive_commutator_pair(&c);
        match trivialize_biext(&p, &l).unwrap() {
            SolveOutcome::Unsolvable { forced: Some(e) } => {
                assert!(e.to_string().starts_with("forced 1 = 0 at (1,1,1)"), "{e}")
            }
            other => panic!("{other:?}"),
        }
        let q = alt_quadruple_of(&c).unwrap();
        assert!(!trivialize_alternating(&q, &l).unwrap().is_solved());
        match solve_braiding(&c, &l).unwrap() {
            Braidings::None { forced: Some(e) } => {
                assert!(e.to_string().starts_with("forced 1 = 0 at (1,1,1)"), "{e}")
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trivial_associator_braidings() {
        let (b, a) = (z(2), z(2));
        let c = GrCategoryData::new(Cochain::zero(&b, &a, 3)).unwrap();
        let Braidings::Listed(all) = solve_braiding(&c, &Limits::default()).unwrap() else {
            panic!("expected a list")
        };
        assert_eq!(all.len(), 2);
        let classes: Vec<BraidingClass> = all
            .iter()
            .map(|g| classify_braiding(&BraidingData::new(c.clone(), g.clone()).unwrap()).unwrap())
            .collect();
        assert_eq!(classes, vec![BraidingClass::StrictPicard, BraidingClass::Symmetric]);
        let zero = BraidingData::new(c.clone(), all[0].clone()).unwrap();
        let PicardOutcome::Split(h) = solve_picard_trivialization(&zero, &Limits::default()).unwrap() else {
            panic!("split expected")
        };
        assert!(h.coboundary().is_zero());
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(h.at(&[x, y]), h.at(&[y, x]));
            }
        }
    }

    #[test]
    fn lift_sign_convention() {
        use rand::SeedableRng;
        let l = Limits::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let mut opposite_failed = 0;
        for n in [3u64, 4, 5] {
            let (b, a) = (z(n), z(n));
            for _ in 0..5 {
                let m = Cochain::random(&b, &a, 2, &mut rng);
                let c = GrCategoryData::new(m.coboundary()).unwrap();
                let q = alt_quadruple_of(&c).unwrap();
                let k = trivialize_alternating(&q, &l).unwrap().into_witness().unwrap();
                let lift = solve_monoidal_lift(&c, &k, &l).unwrap();
                let lw = lift.witness().expect("lift exists for coboundaries");
                assert_eq!(&lw.coboundary(), c.f());
                if !solve_monoidal_lift(&c, &k.scale(-1), &l).unwrap().is_solved() {
                    opposite_failed += 1;
                }
            }
        }
        assert!(opposite_failed > 0);
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let (b, a) = (z(3), z(3));
        let one = b.element(vec![1]).unwrap();
        let f = Cochain::indicator(&b, &a, &[one.clone(), one.clone(), one.clone()], &one).unwrap();
        assert!(matches!(GrCategoryData::new(f), Err(Error::Precondition(_))));
    }

    #[test]
    fn witness_trilinear_map() {
        let b = FinAbGroup::elementary(2, 3);
        let a = z(2);
        let f = Cochain::from_fn(&b, &a, 3, |t, out| {
            let (x, y, w) = (b.element_at(t[0]), b.element_at(t[1]), b.element_at(t[2]));
            out[0] = x.coords()[0] * y.coords()[1] * w.coords()[2];
        });
        let c = GrCategoryData::new(f).unwrap();
        let phi = trilinear_map(&c);
        let e = |i: usize| -> GroupElem {
            let mut v = vec![0; 3];
            v[i] = 1;
            b.element(v).unwrap()
        };
        assert_eq!(phi.eval(&[e(0), e(1), e(2)]).unwrap().coords(), &[1]);
        assert!(phi.multilinearity().passed());
        assert!(phi.alternation().passed());
        assert!(matches!(alt_quadruple_of(&c), Err(Error::Obstruction { .. })));
        assert!(!check_biext_pair(&derive_commutator_pair(&c), true).passed());
    }
}
