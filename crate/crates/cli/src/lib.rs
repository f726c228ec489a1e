//! The `cocycle` command line.
//!
//! Exit codes: 0 when a check passes or a system is solved, 1 when a check
//! fails, a system is unsolvable or an obstruction is met (the obstruction is
//! printed), 2 on usage or input errors.

pub mod format;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use cocycle_core::biext::{
    check_alt_quadruple, check_alt_triple, check_biext_pair, trivialize_alternating, trivialize_biext,
};
use cocycle_core::commutator::{
    alt_quadruple_of, check_braiding, classify_braiding, derive_commutator_pair, solve_braiding,
    solve_monoidal_lift, solve_picard_trivialization, trilinear_map,
};
use cocycle_core::multiext::{
    check_alt_triext, check_picard_family, check_triext, derive_families, derive_t3, derive_triext, solve_theta,
};
use cocycle_core::{
    cohomology, random_cochain, AltQuadruple, AltTriextData, BiextPair, BraidingData, Braidings, Cochain,
    CocycleClass, CohomologyMethod, FinAbGroup, FourCocycleData, GrCategoryData, Limits, PicardOutcome, Report,
    SolveOutcome, TriextData,
};

pub use format::{parse_cochain, serialize_cochain, ParseError};

#[derive(Parser, Debug)]
#[command(name = "cocycle", version, about = "Cochains, biextensions and trivializations over finite abelian groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check that a cochain file is a cocycle.
    Validate { file: PathBuf },
    /// Derive data from a cocycle.
    Derive {
        #[arg(value_enum)]
        what: DeriveKind,
        file: PathBuf,
        /// Write each derived cochain to DIR/<name>.coc instead of stdout.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Solve a trivialization problem.
    ///
    /// biext-triv: G H, or a 3-cocycle. alt-triv: G H PHI U, or a 3-cocycle.
    /// braiding: F. picard-split: F G2. theta: G1 G2 G3, or a 4-cocycle.
    /// lift: F K.
    Solve {
        #[arg(value_enum)]
        what: SolveKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Check structured data.
    ///
    /// biext: G H. alt-triple: G H U. alt-quadruple: G H PHI U.
    /// braiding: F G2. triext: G1 G2 G3. alt-triext: G1 G2 G3 U1 U2.
    /// picard-family: F THETA.
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// For biext: skip the commutativity conditions.
        #[arg(long)]
        weak: bool,
    },
    /// Invariant factors of H^n(B, A).
    Cohomology {
        #[arg(long = "B")]
        b: String,
        #[arg(long = "A")]
        a: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "snf")]
        method: Method,
    },
    /// A seeded random normalized cocycle.
    Random {
        #[arg(long)]
        degree: usize,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "A")]
        a: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "any")]
        class: Class,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DeriveKind {
    Commutator,
    Trilinear,
    Triext,
    Families,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SolveKind {
    BiextTriv,
    AltTriv,
    Braiding,
    PicardSplit,
    Theta,
    Lift,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckKind {
    Biext,
    AltTriple,
    AltQuadruple,
    Braiding,
    Triext,
    AltTriext,
    PicardFamily,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Method {
    Snf,
    Enumerate,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Class {
    Any,
    Coboundary,
}

/// Pass or fail, once the command got to a verdict.
type Verdict = anyhow::Result<bool>;

struct Ctx<'a> {
    out: &'a mut dyn Write,
    out_dir: Option<PathBuf>,
    limits: Limits,
}

impl Ctx<'_> {
    fn say(&mut self, text: impl AsRef<str>) -> anyhow::Result<()> {
        let text = text.as_ref();
        self.out.write_all(text.as_bytes())?;
        if !text.ends_with('\n') {
            self.out.write_all(b"\n")?;
        }
        Ok(())
    }

    fn emit(&mut self, name: &str, c: &Cochain) -> anyhow::Result<()> {
        match &self.out_dir {
            Some(dir) => {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                let path = dir.join(format!("{name}.coc"));
                fs::write(&path, serialize_cochain(c)).with_context(|| format!("writing {}", path.display()))?;
                self.say(format!("wrote {}", path.display()))
            }
            None => self.say(format!("# {name}\n{}", serialize_cochain(c))),
        }
    }

    fn report(&mut self, r: &Report) -> Verdict {
        self.say(r.to_string())?;
        Ok(r.passed())
    }

    /// Routes precondition failures and obstructions to a failing verdict;
    /// other core errors are input errors.
    fn core<T>(&mut self, r: cocycle_core::Result<T>) -> anyhow::Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(cocycle_core::Error::Precondition(rep)) => {
                self.say(format!("precondition failed:\n{rep}"))?;
                Ok(None)
            }
            Err(cocycle_core::Error::Obstruction { kind, witness }) => {
                self.say(format!("obstruction: {kind} is nonzero"))?;
                self.emit("obstruction", &witness)?;
                Ok(None)
            }
            Err(e) => Err(e.into()),
        }
    }

    fn outcome(&mut self, what: &str, name: &str, o: SolveOutcome) -> Verdict {
        match o {
            SolveOutcome::Solved(s) => {
                self.say(format!("{what}: solvable, {} solutions", s.count()))?;
                self.emit(name, &s.particular)?;
                Ok(true)
            }
            SolveOutcome::Unsolvable { forced } => {
                match forced {
                    Some(e) => self.say(format!("no {what}: {e}"))?,
                    None => self.say(format!("no {what}: inconsistent system"))?,
                }
                Ok(false)
            }
        }
    }
}

fn load(path: &Path) -> anyhow::Result<Cochain> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_cochain(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_all(files: &[PathBuf], expected: &[usize], usage: &str) -> anyhow::Result<Vec<Cochain>> {
    if !expected.contains(&files.len()) {
        bail!("expected {usage}");
    }
    files.iter().map(|p| load(p)).collect()
}

macro_rules! tri {
    ($ctx:expr, $e:expr) => {
        match $ctx.core($e)? {
            Some(v) => v,
            None => return Ok(false),
        }
    };
}

fn associator(ctx: &mut Ctx, f: Cochain) -> anyhow::Result<Option<GrCategoryData>> {
    ctx.core(GrCategoryData::new(f))
}

fn validate(ctx: &mut Ctx, file: &Path) -> Verdict {
    let c = load(file)?;
    ctx.report(&c.is_cocycle())
}

fn derive(ctx: &mut Ctx, what: DeriveKind, file: &Path) -> Verdict {
    let f = load(file)?;
    match what {
        DeriveKind::Commutator | DeriveKind::Trilinear => {
            let Some(c) = associator(ctx, f)? else { return Ok(false) };
            if let DeriveKind::Commutator = what {
                let p = derive_commutator_pair(&c);
                ctx.emit("g", &p.g)?;
                ctx.emit("h", &p.h)?;
            } else {
                ctx.emit("trilinear", &trilinear_map(&c))?;
            }
        }
        DeriveKind::Triext | DeriveKind::Families => {
            let c = tri!(ctx, FourCocycleData::new(f));
            if let DeriveKind::Triext = what {
                let t = tri!(ctx, derive_triext(&c));
                ctx.emit("G1", &t.g1)?;
                ctx.emit("G2", &t.g2)?;
                ctx.emit("G3", &t.g3)?;
            } else {
                let fam = derive_families(&c);
                ctx.emit("psi", &fam.psi)?;
                ctx.emit("phi", &fam.phi)?;
                ctx.emit("chi", &fam.chi)?;
            }
        }
    }
    Ok(true)
}

fn solve(ctx: &mut Ctx, what: SolveKind, files: &[PathBuf]) -> Verdict {
    let limits = ctx.limits.clone();
    match what {
        SolveKind::BiextTriv => {
            let cs = load_all(files, &[1, 2], "G H, or a 3-cocycle")?;
            let pair = match <[Cochain; 2]>::try_from(cs) {
                Ok([g, h]) => BiextPair::new(g, h)?,
                Err(mut cs) => {
                    let Some(c) = associator(ctx, cs.remove(0))? else { return Ok(false) };
                    derive_commutator_pair(&c)
                }
            };
            let o = tri!(ctx, trivialize_biext(&pair, &limits));
            ctx.outcome("biextension trivialization", "k", o)
        }
        SolveKind::AltTriv => {
            let cs = load_all(files, &[1, 4], "G H PHI U, or a 3-cocycle")?;
            let q = match <[Cochain; 4]>::try_from(cs) {
                Ok([g, h, phi, u]) => AltQuadruple::new(BiextPair::new(g, h)?, phi, u)?,
                Err(mut cs) => {
                    let Some(c) = associator(ctx, cs.remove(0))? else { return Ok(false) };
                    tri!(ctx, alt_quadruple_of(&c))
                }
            };
            let o = tri!(ctx, trivialize_alternating(&q, &limits));
            ctx.outcome("alternating trivialization", "k", o)
        }
        SolveKind::Braiding => {
            let mut cs = load_all(files, &[1], "F")?;
            let Some(c) = associator(ctx, cs.remove(0))? else { return Ok(false) };
            match tri!(ctx, solve_braiding(&c, &limits)) {
                Braidings::None { forced } => {
                    match forced {
                        Some(e) => ctx.say(format!("no braiding: {e}"))?,
                        None => ctx.say("no braiding: inconsistent system")?,
                    }
                    Ok(false)
                }
                Braidings::Listed(all) => {
                    ctx.say(format!("{} braidings", all.len()))?;
                    for (i, g) in all.iter().enumerate() {
                        let class = classify_braiding(&BraidingData::new(c.clone(), g.clone())?)?;
                        ctx.say(format!("# braiding {} is {class}", i + 1))?;
                        ctx.emit(&format!("braiding{}", i + 1), g)?;
                    }
                    Ok(true)
                }
                Braidings::Generated(set) => {
                    ctx.say(format!("{} braidings; particular solution and generators follow", set.count()))?;
                    ctx.emit("braiding", &set.particular)?;
                    for (i, g) in set.generators.iter().enumerate() {
                        ctx.emit(&format!("generator{}", i + 1), g)?;
                    }
                    Ok(true)
                }
            }
        }
        SolveKind::PicardSplit => {
            let mut cs = load_all(files, &[2], "F G2")?;
            let g2 = cs.pop().expect("two files");
            let Some(c) = associator(ctx, cs.pop().expect("two files"))? else { return Ok(false) };
            match tri!(ctx, solve_picard_trivialization(&BraidingData::new(c, g2)?, &limits)) {
                PicardOutcome::Split(h) => {
                    ctx.say("strict Picard splitting found")?;
                    ctx.emit("h", &h)?;
                    Ok(true)
                }
                PicardOutcome::Anomaly { forced } => {
                    let why = forced.map_or("inconsistent system".to_string(), |e| e.to_string());
                    ctx.say(format!("anomaly: no strict Picard splitting: {why}"))?;
                    Ok(false)
                }
            }
        }
        SolveKind::Theta => {
            let cs = load_all(files, &[1, 3], "G1 G2 G3, or a 4-cocycle")?;
            let t = match <[Cochain; 3]>::try_from(cs) {
                Ok([g1, g2, g3]) => TriextData::new(g1, g2, g3)?,
                Err(mut cs) => {
                    let c = tri!(ctx, FourCocycleData::new(cs.remove(0)));
                    tri!(ctx, derive_triext(&c))
                }
            };
            let o = tri!(ctx, solve_theta(&t, &limits));
            ctx.outcome("theta", "theta", o)
        }
        SolveKind::Lift => {
            let mut cs = load_all(files, &[2], "F K")?;
            let k = cs.pop().expect("two files");
            let Some(c) = associator(ctx, cs.pop().expect("two files"))? else { return Ok(false) };
            let o = tri!(ctx, solve_monoidal_lift(&c, &k, &limits));
            ctx.outcome("monoidal lift", "l", o)
        }
    }
}

fn check(ctx: &mut Ctx, what: CheckKind, files: &[PathBuf], weak: bool) -> Verdict {
    match what {
        CheckKind::Biext => {
            let [g, h] = arr(load_all(files, &[2], "G H")?);
            ctx.report(&check_biext_pair(&BiextPair::new(g, h)?, !weak))
        }
        CheckKind::AltTriple => {
            let [g, h, u] = arr(load_all(files, &[3], "G H U")?);
            let r = tri!(ctx, check_alt_triple(&BiextPair::new(g, h)?, &u));
            ctx.report(&r)
        }
        CheckKind::AltQuadruple => {
            let [g, h, phi, u] = arr(load_all(files, &[4], "G H PHI U")?);
            ctx.report(&check_alt_quadruple(&AltQuadruple::new(BiextPair::new(g, h)?, phi, u)?))
        }
        CheckKind::Braiding => {
            let [f, g2] = arr(load_all(files, &[2], "F G2")?);
            let Some(c) = associator(ctx, f)? else { return Ok(false) };
            let b = BraidingData::new(c, g2)?;
            let r = check_braiding(&b);
            let ok = ctx.report(&r)?;
            if ok {
                ctx.say(format!("class: {}", classify_braiding(&b)?))?;
            }
            Ok(ok)
        }
        CheckKind::Triext => {
            let [g1, g2, g3] = arr(load_all(files, &[3], "G1 G2 G3")?);
            ctx.report(&check_triext(&TriextData::new(g1, g2, g3)?))
        }
        CheckKind::AltTriext => {
            let [g1, g2, g3, u1, u2] = arr(load_all(files, &[5], "G1 G2 G3 U1 U2")?);
            let d = AltTriextData::new(TriextData::new(g1, g2, g3)?, u1, u2)?;
            let r = tri!(ctx, check_alt_triext(&d));
            if !ctx.report(&r)? {
                return Ok(false);
            }
            let (t3, r3) = tri!(ctx, derive_t3(&d));
            let ok = ctx.report(&r3)?;
            ctx.emit("t3", &t3)?;
            Ok(ok)
        }
        CheckKind::PicardFamily => {
            let [f, theta] = arr(load_all(files, &[2], "F THETA")?);
            let c = tri!(ctx, FourCocycleData::new(f));
            let r = tri!(ctx, check_picard_family(&c, &theta));
            ctx.report(&r)
        }
    }
}

fn arr<const N: usize>(v: Vec<Cochain>) -> [Cochain; N] {
    v.try_into().unwrap_or_else(|_| unreachable!("length checked by load_all"))
}

fn groups(b: &str, a: &str) -> anyhow::Result<(FinAbGroup, FinAbGroup)> {
    let b = FinAbGroup::parse(b).context("--B")?;
    let a = FinAbGroup::parse(a).context("--A")?;
    Ok((b, a))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Verdict {
    let out_dir = match &cli.cmd {
        Cmd::Derive { out_dir, .. } | Cmd::Solve { out_dir, .. } => out_dir.clone(),
        _ => None,
    };
    let mut ctx = Ctx { out, out_dir, limits: Limits::from_env() };
    match cli.cmd {
        Cmd::Validate { file } => validate(&mut ctx, &file),
        Cmd::Derive { what, file, .. } => derive(&mut ctx, what, &file),
        Cmd::Solve { what, files, .. } => solve(&mut ctx, what, &files),
        Cmd::Check { what, files, weak } => check(&mut ctx, what, &files, weak),
        Cmd::Cohomology { b, a, degree, method } => {
            let (b, a) = groups(&b, &a)?;
            let method = match method {
                Method::Snf => CohomologyMethod::Snf,
                Method::Enumerate => CohomologyMethod::Enumerate,
            };
            let inv = cohomology(&b, &a, degree, method, &ctx.limits)?;
            let shown: Vec<String> = inv.iter().map(u64::to_string).collect();
            ctx.say(if shown.is_empty() { "1".to_string() } else { shown.join(",") })?;
            Ok(true)
        }
        Cmd::Random { degree, b, a, seed, class } => {
            let (b, a) = groups(&b, &a)?;
            if degree == 0 {
                bail!("degree must be at least 1");
            }
            let class = match class {
                Class::Any => CocycleClass::Any,
                Class::Coboundary => CocycleClass::Coboundary,
            };
            let c = random_cochain(&b, &a, degree, seed, class, &ctx.limits)?;
            ctx.say(serialize_cochain(&c))?;
            Ok(true)
        }
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}
