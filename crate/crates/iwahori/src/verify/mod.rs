//! Randomized consistency checks with reproducible reports.
//!
//! Every trial draws from its own generator, seeded from the master seed,
//! the check's stream name and the trial index, so single trials can be
//! replayed and the order of execution does not matter.

pub mod oracle;

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use iwahori_core::loopgroup::random_nonzero;
use iwahori_core::{
    act, base_cell, classify, classify_fine_i4, enumerate_labels, involution_label, normal_form,
    reduce_to_base, sample_point_with, Coeff, EntryShape, Error, Family, FlagPoint, GroupElement,
    LaurentPoly, Level, OrbitLabel, SubgroupId, Tag,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

const WINDOW: RangeInclusive<i64> = -3..=3;
/// Starting precision for sampled subgroup elements; doubled on demand.
const SAMPLE_PREC: i64 = 12;
const MAX_PREC: i64 = 1024;
const ELEMENTS_PER_POINT: usize = 20;
const ROTATIONS_PER_POINT: usize = 5;
const STABILIZER_ELEMENTS: u64 = 50;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: Vec<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub trials: u64,
    pub failures: Vec<Failure>,
    pub master_seed: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("number of trials must be at least 1")]
    ZeroTrials,
    #[error("empty index range")]
    EmptyRange,
    #[error(transparent)]
    Core(#[from] Error),
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `index` in `stream`.
pub fn trial_seed(master: u64, stream: &str, index: u64) -> u64 {
    let mut h = splitmix64(master);
    for b in stream.bytes() {
        h = splitmix64(h ^ u64::from(b));
    }
    splitmix64(h ^ splitmix64(index))
}

fn trial_rng(master: u64, stream: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(master, stream, index))
}

struct Recorder {
    name: String,
    seed: u64,
    trials: u64,
    failures: Vec<Failure>,
    start: Instant,
}

impl Recorder {
    fn new(name: impl Into<String>, seed: u64) -> Self {
        Recorder {
            name: name.into(),
            seed,
            trials: 0,
            failures: Vec::new(),
            start: Instant::now(),
        }
    }

    fn fail(&mut self, inputs: Vec<String>, expected: impl Into<String>, actual: impl Into<String>) {
        self.failures.push(Failure {
            inputs,
            expected: expected.into(),
            actual: actual.into(),
        });
    }

    fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        inputs: impl FnOnce() -> Vec<String>,
        expected: &Result<T, Error>,
        actual: &Result<T, Error>,
    ) {
        if expected != actual {
            self.fail(inputs(), render(expected), render(actual));
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            check_name: self.name,
            trials: self.trials,
            failures: self.failures,
            master_seed: self.seed,
            elapsed: self.start.elapsed(),
        }
    }
}

fn render<T: fmt::Display>(r: &Result<T, Error>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn nonzero_trials(trials: u64) -> Result<(), VerifyError> {
    if trials == 0 {
        Err(VerifyError::ZeroTrials)
    } else {
        Ok(())
    }
}

fn check_range(r: &RangeInclusive<i64>) -> Result<(), VerifyError> {
    if r.is_empty() {
        Err(VerifyError::EmptyRange)
    } else {
        Ok(())
    }
}

fn random_rational<R: Rng>(rng: &mut R) -> Coeff {
    Coeff::ratio(rng.random_range(WINDOW), rng.random_range(1..=3))
}

fn random_nonzero_rational<R: Rng>(rng: &mut R) -> Coeff {
    &random_nonzero(WINDOW, rng) / &Coeff::integer(rng.random_range(1..=3))
}

fn random_poly<R: Rng>(exponents: RangeInclusive<i64>, rng: &mut R) -> LaurentPoly {
    LaurentPoly::from_terms(exponents.map(|k| (k, random_rational(rng))).collect::<Vec<_>>())
}

/// `act(g, x)` for `g` sampled from `s` by `seed`, raising the sample's
/// precision until the result is determined.
fn act_sampled(s: EntryShape, seed: u64, x: &FlagPoint) -> (GroupElement, Result<FlagPoint, Error>) {
    let mut prec = SAMPLE_PREC;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = GroupElement::sample_shaped(s, WINDOW, prec, &mut rng);
        match act(&g, x) {
            Err(Error::InsufficientPrecision { .. }) if prec < MAX_PREC => prec *= 2,
            r => return (g, r),
        }
    }
}

/// Letters of the generator words used to build test matrices.
#[derive(Clone, Debug)]
enum Letter {
    DotS1,
    DiagT(i64),
    Upper(LaurentPoly),
    Lower(LaurentPoly),
    Torus(Coeff),
    /// Element of `I` drawn from this seed.
    Iwahori(u64),
}

impl Letter {
    fn random<R: Rng>(rng: &mut R) -> Letter {
        match rng.random_range(0..6) {
            0 => Letter::DotS1,
            1 => Letter::DiagT(rng.random_range(-2..=2)),
            2 => Letter::Upper(random_poly(-3..=3, rng)),
            3 => Letter::Lower(random_poly(-3..=3, rng)),
            4 => Letter::Torus(random_nonzero_rational(rng)),
            _ => Letter::Iwahori(rng.random()),
        }
    }

    fn element(&self, prec: i64) -> GroupElement {
        match self {
            Letter::DotS1 => GroupElement::dot_s1(),
            Letter::DiagT(k) => GroupElement::diag_t(*k),
            Letter::Upper(p) => GroupElement::upper(p.clone()),
            Letter::Lower(p) => GroupElement::lower(p.clone()),
            Letter::Torus(a) => GroupElement::torus(a).expect("nonzero"),
            Letter::Iwahori(seed) => GroupElement::sample(SubgroupId::I, WINDOW, prec, *seed),
        }
    }
}

fn word_product(word: &[Letter], prec: i64) -> GroupElement {
    word.iter()
        .fold(GroupElement::identity(), |acc, l| acc.multiply(&l.element(prec)))
}

fn is_insufficient<T>(r: &Result<T, Error>) -> bool {
    matches!(r, Err(Error::InsufficientPrecision { .. }))
}

/// Random normal form with `|n| ≤ max_n` and `p` anywhere in its window.
fn random_point<R: Rng>(max_n: i64, rng: &mut R) -> FlagPoint {
    let n = rng.random_range(-max_n..=max_n);
    if rng.random() {
        FlagPoint::straight(n, random_poly(-max_n..=n - 1, rng))
    } else {
        FlagPoint::primed(n, random_poly(-max_n..=n, rng))
    }
}

/// Coset oracle soundness, right-`I` invariance and idempotence of normal forms.
///
/// Each trial multiplies a word of up to 6 generators (including sampled
/// elements of `I` at precision 32, raised when a result is undetermined).
pub fn check_normal_form(trials: u64, seed: u64) -> Result<CheckReport, VerifyError> {
    nonzero_trials(trials)?;
    let mut rec = Recorder::new("normal_form", seed);
    for t in 0..trials {
        rec.trials += 1;
        let mut rng = trial_rng(seed, "normal_form", t);
        let len = rng.random_range(1..=6);
        let word: Vec<Letter> = (0..len).map(|_| Letter::random(&mut rng)).collect();
        let right_seed: u64 = rng.random();
        let mut prec = 32;
        loop {
            let g = word_product(&word, prec);
            let h = GroupElement::sample(SubgroupId::I, WINDOW, prec, right_seed);
            let x = normal_form(&g);
            let quotient = x.clone().map(|x| x.representative().inverse().multiply(&g));
            let member = quotient.and_then(|q| q.membership(SubgroupId::I));
            let shifted = normal_form(&g.multiply(&h));
            if (is_insufficient(&x) || is_insufficient(&member) || is_insufficient(&shifted))
                && prec < MAX_PREC
            {
                prec *= 2;
                continue;
            }
            let inputs = || vec![format!("g = {g}")];
            match (&x, &member) {
                (Ok(_), Ok(true)) => {}
                (_, other) => rec.fail(
                    inputs(),
                    "g = rep(normal_form(g)) * (element of I)",
                    format!("normal form {}, membership {other:?}", render(&x)),
                ),
            }
            rec.expect_eq(|| vec![format!("g = {g}"), format!("h = {h}")], &x, &shifted);
            if let Ok(x) = &x {
                rec.expect_eq(
                    || vec![format!("x = {x}")],
                    &Ok(x.clone()),
                    &normal_form(&x.representative()),
                );
            }
            break;
        }
        let y = random_point(6, &mut rng);
        rec.expect_eq(|| vec![format!("x = {y}")], &Ok(y.clone()), &normal_form(&y.representative()));
    }
    Ok(rec.finish())
}

/// Orbit labels at `level` are constant under sampled subgroup elements
/// (and loop rotation at `I4Rot`). `trials` points per label, each moved by
/// 20 elements.
pub fn check_orbit_invariance(
    level: Level,
    n_range: RangeInclusive<i64>,
    trials: u64,
    seed: u64,
) -> Result<CheckReport, VerifyError> {
    nonzero_trials(trials)?;
    check_range(&n_range)?;
    let name = format!("orbit_invariance[{level}]");
    let mut rec = Recorder::new(name.clone(), seed);
    let shape = level.subgroup().shape();
    for (label, _) in enumerate_labels(level, *n_range.start(), *n_range.end()) {
        let stream = format!("{name}/{label}");
        for t in 0..trials {
            rec.trials += 1;
            let mut rng = trial_rng(seed, &stream, t);
            let x = sample_point_with(&label, level, &mut rng)?;
            let expected = Ok(label);
            rec.expect_eq(|| vec![format!("x = {x}")], &expected, &Ok(classify(&x, level)));
            for _ in 0..ELEMENTS_PER_POINT {
                let (g, y) = act_sampled(shape, rng.random(), &x);
                let actual = y.map(|y| classify(&y, level));
                rec.expect_eq(|| vec![format!("g = {g}"), format!("x = {x}")], &expected, &actual);
            }
            if level == Level::I4Rot {
                for _ in 0..ROTATIONS_PER_POINT {
                    let gamma = random_nonzero_rational(&mut rng);
                    let actual = x.rotate(&gamma).map(|y| classify(&y, level));
                    rec.expect_eq(
                        || vec![format!("gamma = {gamma}"), format!("x = {x}")],
                        &expected,
                        &actual,
                    );
                }
            }
        }
    }
    Ok(rec.finish())
}

/// Every sampled point of each cell lies in exactly one orbit per level
/// (judged by the coordinate oracle), and finer labels restrict to coarser ones.
pub fn check_partition_and_refinement(
    n_range: RangeInclusive<i64>,
    trials: u64,
    seed: u64,
) -> Result<CheckReport, VerifyError> {
    nonzero_trials(trials)?;
    check_range(&n_range)?;
    let mut rec = Recorder::new("partition_refinement", seed);
    let (lo, hi) = (*n_range.start(), *n_range.end());
    let spread = lo.abs().max(hi.abs()) + 2;
    let candidates: Vec<Vec<OrbitLabel>> = Level::ALL
        .iter()
        .map(|&l| enumerate_labels(l, -spread, spread).into_iter().map(|(x, _)| x).collect())
        .collect();
    for n in n_range {
        for family in [Family::E, Family::O] {
            let cell = OrbitLabel::cell(family, n);
            let stream = format!("partition/{cell}");
            for t in 0..trials {
                rec.trials += 1;
                let mut rng = trial_rng(seed, &stream, t);
                let x = sample_point_with(&cell, Level::I, &mut rng)?;
                let inputs = || vec![format!("x = {x}")];
                let labels: Vec<OrbitLabel> = Level::ALL.iter().map(|&l| classify(&x, l)).collect();
                if labels[0] != cell {
                    rec.fail(inputs(), cell.to_string(), labels[0].to_string());
                }
                for (i, level) in Level::ALL.iter().enumerate() {
                    let hits: Vec<String> = candidates[i]
                        .iter()
                        .filter(|l| oracle::in_orbit(&x, l))
                        .map(ToString::to_string)
                        .collect();
                    if hits != [labels[i].to_string()] {
                        rec.fail(
                            vec![format!("x = {x}"), format!("level = {level}")],
                            labels[i].to_string(),
                            format!("oracle orbits {hits:?}"),
                        );
                    }
                    for j in i + 1..labels.len() {
                        let (coarse, fine) = (labels[i], labels[j]);
                        let k = coarse.tags().len();
                        if fine.tags().len() < k || fine.coarsen(k) != coarse {
                            rec.fail(
                                vec![format!("x = {x}"), format!("levels = {level} < {}", Level::ALL[j])],
                                format!("refinement of {coarse}"),
                                fine.to_string(),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(rec.finish())
}

/// The closed-form `ṡ₁` translation agrees with matrix action, permutes
/// labels by the level's table, and squares to the identity.
pub fn check_involution(level: Level, trials: u64, seed: u64) -> Result<CheckReport, VerifyError> {
    if !level.has_involution() {
        return Err(Error::InvolutionUndefinedAtLevel.into());
    }
    nonzero_trials(trials)?;
    let name = format!("involution[{level}]");
    let mut rec = Recorder::new(name.clone(), seed);
    for (label, _) in enumerate_labels(level, -4, 4) {
        let twice = involution_label(&label, level).and_then(|l| involution_label(&l, level));
        rec.expect_eq(|| vec![format!("label = {label}")], &Ok(label), &twice);
    }
    let labels = enumerate_labels(level, -3, 3);
    let s1 = GroupElement::dot_s1();
    for t in 0..trials {
        rec.trials += 1;
        let mut rng = trial_rng(seed, &name, t);
        let (label, _) = labels[rng.random_range(0..labels.len())];
        let x = sample_point_with(&label, level, &mut rng)?;
        let y = x.involute();
        let inputs = || vec![format!("x = {x}")];
        rec.expect_eq(inputs, &act(&s1, &x), &Ok(y.clone()));
        rec.expect_eq(inputs, &involution_label(&label, level), &Ok(classify(&y, level)));
        rec.expect_eq(inputs, &Ok(x.clone()), &Ok(y.involute()));
    }
    Ok(rec.finish())
}

/// Cell structure: the unipotent parametrizations are bijective and their
/// coordinates recoverable, base-point stabilizers are as predicted, strata
/// line up with the parameter's valuation, and `reduce_to_base` is sound.
pub fn check_structure(n_range: RangeInclusive<i64>, trials: u64, seed: u64) -> Result<CheckReport, VerifyError> {
    nonzero_trials(trials)?;
    check_range(&n_range)?;
    let mut rec = Recorder::new("structure", seed);
    for n in n_range.clone() {
        for family in [Family::E, Family::O] {
            freeness(&mut rec, family, n, trials, seed);
            stabilizer(&mut rec, family, n, seed);
        }
    }
    let cells: Vec<OrbitLabel> = n_range
        .flat_map(|n| [OrbitLabel::cell(Family::E, n), OrbitLabel::cell(Family::O, n)])
        .collect();
    for t in 0..trials {
        rec.trials += 1;
        let mut rng = trial_rng(seed, "structure/reduce", t);
        let cell = cells[rng.random_range(0..cells.len())];
        let x = sample_point_with(&cell, Level::I, &mut rng)?;
        let inputs = || vec![format!("x = {x}")];
        match reduce_to_base(&x) {
            Err(e) => rec.fail(inputs(), "reduction", format!("error: {e}")),
            Ok((h, base)) => {
                rec.expect_eq(inputs, &Ok(true), &h.membership(SubgroupId::I));
                rec.expect_eq(|| vec![format!("h = {h}"), format!("x = {x}")], &Ok(base.clone()), &act(&h, &x));
                let (family, m) = base_cell(&x);
                let expected = match family {
                    Family::E => FlagPoint::straight(m, LaurentPoly::zero()),
                    Family::O => FlagPoint::primed(m, LaurentPoly::zero()),
                };
                rec.expect_eq(inputs, &Ok(expected), &Ok(base));
            }
        }
    }
    Ok(rec.finish())
}

fn base_point(family: Family, n: i64) -> FlagPoint {
    match family {
        Family::E => FlagPoint::straight(n, LaurentPoly::zero()),
        Family::O => FlagPoint::primed(n, LaurentPoly::zero()),
    }
}

/// Cells with `n ≥ 0` are the orbits of `[n, 0]` under `[[1, p], [0, 1]]`,
/// the others orbits under `[[1, 0], [tq, 1]]`. Checks the image against
/// its closed form, recovers the parameter from it, and checks injectivity.
fn freeness(rec: &mut Recorder, family: Family, n: i64, trials: u64, seed: u64) {
    let x0 = base_point(family, n);
    let dim = match family {
        Family::E => 2 * n.abs(),
        Family::O if n >= 0 => 2 * n + 1,
        Family::O => -2 * n - 1,
    };
    let cell = OrbitLabel::cell(family, n);
    let stream = format!("structure/freeness/{cell}");
    let mut seen: HashMap<FlagPoint, LaurentPoly> = HashMap::new();
    for t in 0..trials {
        rec.trials += 1;
        let mut rng = trial_rng(seed, &stream, t);
        let param = random_poly(0..=dim - 1, &mut rng);
        let inputs = || vec![format!("cell = {cell}"), format!("parameter = {param}")];
        let upper_type = n >= 0;
        if n == 0 && family == Family::E {
            // E_0 is a point; it is fixed by all of I.
            let g = GroupElement::upper(random_poly(0..=3, &mut rng));
            rec.expect_eq(|| vec![format!("g = {g}")], &Ok(x0.clone()), &act(&g, &x0));
            continue;
        }
        let (g, expected) = if upper_type {
            let shifted = param.shift(-n);
            let expected = match family {
                Family::E => FlagPoint::straight(n, shifted),
                Family::O => FlagPoint::primed(n, -shifted),
            };
            (GroupElement::upper(param.clone()), expected)
        } else {
            // Stratum k = ν(q): [-n-1-k, ∓t^n / q₀] of the opposite kind.
            let expected = match param.unit_decompose() {
                Err(_) => x0.clone(),
                Ok((k, q0)) => {
                    let order = (-2 * n - k + 1) as usize;
                    let inv = q0.invert_unit(order).expect("unit").shift(n);
                    match family {
                        Family::E => FlagPoint::primed(-n - 1 - k, -inv),
                        Family::O => FlagPoint::straight(-n - 1 - k, inv),
                    }
                }
            };
            (GroupElement::lower(param.shift(1)), expected)
        };
        let image = act(&g, &x0);
        rec.expect_eq(inputs, &Ok(expected), &image);
        let Ok(image) = image else { continue };
        rec.expect_eq(inputs, &Ok(cell), &Ok(classify(&image, Level::I)));
        let recovered = if upper_type {
            let p = image.p().shift(n);
            Ok(if family == Family::E { p } else { -p })
        } else if image == x0 {
            Ok(LaurentPoly::zero())
        } else {
            let k = -n - 1 - image.n();
            let terms = match family {
                Family::E => -2 * n - k,
                Family::O => -2 * n - 1 - k,
            };
            let sign = if family == Family::E { -1 } else { 1 };
            image
                .p()
                .shift(-n)
                .scale(&Coeff::integer(sign))
                .invert_unit(terms as usize)
                .map(|q0| q0.shift(k))
        };
        rec.expect_eq(inputs, &Ok(param.clone()), &recovered);
        if let Some(previous) = seen.insert(image.clone(), param.clone()) {
            if previous != param {
                rec.fail(inputs(), format!("image distinct from that of {previous}"), image.to_string());
            }
        }
    }
}

/// Elements of `I` with the stated extra vanishing fix the base point of
/// the cell; a boundary element just outside moves it.
fn stabilizer(rec: &mut Recorder, family: Family, n: i64, seed: u64) {
    let x0 = base_point(family, n);
    let (b_min, c_min) = match family {
        Family::E if n >= 0 => (2 * n, 1),
        Family::E => (0, 1 - 2 * n),
        Family::O if n >= 0 => (2 * n + 1, 1),
        Family::O => (0, -2 * n),
    };
    let shape = EntryShape {
        b_min,
        c_min,
        flat_diagonal: false,
    };
    let stream = format!("structure/stabilizer/{}", OrbitLabel::cell(family, n));
    let mut rng = trial_rng(seed, &stream, 0);
    for _ in 0..STABILIZER_ELEMENTS {
        rec.trials += 1;
        let (g, y) = act_sampled(shape, rng.random(), &x0);
        rec.expect_eq(|| vec![format!("g = {g}"), format!("x = {x0}")], &Ok(x0.clone()), &y);
    }
    let boundary = if b_min > 0 {
        Some(GroupElement::upper(LaurentPoly::t_pow(b_min - 1)))
    } else if c_min > 1 {
        Some(GroupElement::lower(LaurentPoly::t_pow(c_min - 1)))
    } else {
        None
    };
    if let Some(g) = boundary {
        rec.trials += 1;
        match act(&g, &x0) {
            Ok(y) if y != x0 => {}
            other => rec.fail(
                vec![format!("g = {g}"), format!("x = {x0}")],
                format!("a point other than {x0}"),
                render(&other),
            ),
        }
    }
}

/// `β` is constant along `I4`-words starting at `[n, t^-n + t^(-n+1)]`, and
/// loop rotation by `γ` divides it by `γ`.
pub fn check_beta(trials: u64, seed: u64) -> Result<CheckReport, VerifyError> {
    nonzero_trials(trials)?;
    let mut rec = Recorder::new("beta", seed);
    let shape = SubgroupId::I4.shape();
    for n in 1..=3 {
        for family in [Family::E, Family::O] {
            let label = OrbitLabel::new(family, n, &[Tag::Open, Tag::Open]);
            let p = &LaurentPoly::t_pow(-n) + &LaurentPoly::t_pow(-n + 1);
            let x0 = match family {
                Family::E => FlagPoint::straight(n, p),
                Family::O => FlagPoint::primed(n, p),
            };
            let stream = format!("beta/{label}");
            for t in 0..trials {
                rec.trials += 1;
                let mut rng = trial_rng(seed, &stream, t);
                let len = rng.random_range(1..=5);
                let mut x = Ok(x0.clone());
                let mut word = Vec::new();
                for _ in 0..len {
                    let Ok(current) = &x else { break };
                    let (g, y) = act_sampled(shape, rng.random(), current);
                    word.push(format!("g{} = {g}", word.len() + 1));
                    x = y;
                }
                let inputs = || [vec![format!("x = {x0}")], word.clone()].concat();
                let fine = x.map(|y| classify_fine_i4(&y));
                match &fine {
                    Ok(f) if f.base == label && f.beta == Some(Coeff::ONE) => {}
                    other => rec.fail(inputs(), format!("{label}@beta=1"), render(other)),
                }

                let y = sample_point_with(&label, Level::I4Rot, &mut rng)?;
                let gamma = random_nonzero_rational(&mut rng);
                let inputs = || vec![format!("x = {y}"), format!("gamma = {gamma}")];
                let rotated = y.rotate(&gamma);
                let via_matrix = y.representative().rotate(&gamma).and_then(|g| normal_form(&g));
                rec.expect_eq(inputs, &via_matrix, &rotated);
                let beta = classify_fine_i4(&y).beta.expect("open,open point");
                let expected = Ok(I4FineDisplay(Some(&beta / &gamma)));
                let actual = rotated.map(|r| I4FineDisplay(classify_fine_i4(&r).beta));
                rec.expect_eq(inputs, &expected, &actual);
            }
        }
    }
    Ok(rec.finish())
}

#[derive(PartialEq)]
struct I4FineDisplay(Option<Coeff>);

impl fmt::Display for I4FineDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Some(b) => write!(f, "beta = {b}"),
            None => f.write_str("no beta"),
        }
    }
}

/// Names accepted by [`run_check`].
pub const CHECK_NAMES: [&str; 6] = ["normal-form", "invariance", "partition", "involution", "structure", "beta"];

/// Runs one named group of checks with default parameters.
pub fn run_check(name: &str, seed: u64) -> Option<Vec<CheckReport>> {
    let reports = match name {
        "normal-form" => vec![check_normal_form(1000, seed)],
        "invariance" => Level::ALL
            .iter()
            .map(|&l| check_orbit_invariance(l, -3..=3, 100, seed))
            .collect(),
        "partition" => vec![check_partition_and_refinement(-3..=3, 200, seed)],
        "involution" => [Level::I1, Level::I3, Level::I4Rot]
            .iter()
            .map(|&l| check_involution(l, 1000, seed))
            .collect(),
        "structure" => vec![check_structure(-3..=3, 200, seed)],
        "beta" => vec![check_beta(100, seed)],
        _ => return None,
    };
    Some(
        reports
            .into_iter()
            .map(|r| r.expect("default parameters are valid"))
            .collect(),
    )
}

/// Every check with its default parameters.
pub fn run_all(seed: u64) -> Vec<CheckReport> {
    CHECK_NAMES
        .iter()
        .flat_map(|name| run_check(name, seed).expect("known check"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_stable_and_spread() {
        assert_eq!(trial_seed(1, "a", 0), trial_seed(1, "a", 0));
        assert_ne!(trial_seed(1, "a", 0), trial_seed(1, "a", 1));
        assert_ne!(trial_seed(1, "a", 0), trial_seed(1, "b", 0));
        assert_ne!(trial_seed(1, "a", 0), trial_seed(2, "a", 0));
    }

    #[test]
    fn preconditions() {
        assert_eq!(check_normal_form(0, 1).unwrap_err(), VerifyError::ZeroTrials);
        assert_eq!(
            check_involution(Level::I2, 10, 1).unwrap_err(),
            VerifyError::Core(Error::InvolutionUndefinedAtLevel)
        );
        assert_eq!(check_involution(Level::I, 10, 1).unwrap_err(), VerifyError::Core(Error::InvolutionUndefinedAtLevel));
        assert_eq!(check_structure(RangeInclusive::new(1, 0), 10, 1).unwrap_err(), VerifyError::EmptyRange);
    }

    #[test]
    fn small_runs_pass() {
        assert!(check_normal_form(1, 5).unwrap().passed());
        assert!(check_orbit_invariance(Level::I, 0..=0, 5, 1).unwrap().passed());
        assert!(check_orbit_invariance(Level::I4Rot, 1..=1, 5, 2).unwrap().passed());
        assert!(check_partition_and_refinement(0..=0, 10, 3).unwrap().passed());
        assert!(check_structure(0..=0, 5, 4).unwrap().passed());
        let report = check_structure(1..=1, 20, 11).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = serde_json::to_string(&check_beta(3, 9).unwrap()).unwrap();
        let b = serde_json::to_string(&check_beta(3, 9).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("{\"check_name\":\"beta\",\"trials\":18,\"failures\":[],\"master_seed\":9}"));
    }
}
