//! Orbit decompositions of `SL₂((t))/I` along the chain `I ⊃ I1 ⊃ I2 ⊃ I3 ⊃ I4^rot`.
//!
//! The `I`-orbits are the Schubert cells `E_n = I·[n, 0]` and
//! `O_n = I·[n, 0]'`. Each step down the chain either keeps an orbit or
//! splits it into an `open` part and a `hyp` part (a coordinate hyperplane
//! and its complement). A label records the cell and the sequence of splits,
//! e.g. `E_2:open,hyp`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::Coeff;
use crate::error::Error;
use crate::flagpoint::{FlagPoint, PointKind};
use crate::laurent::LaurentPoly;
use crate::loopgroup::{GroupElement, Precision, SubgroupId};

/// Position in the chain; later levels are smaller groups and finer partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    I,
    I1,
    I2,
    I3,
    /// `I4 ⋊ G_m^rot`, the fourth subgroup extended by loop rotation.
    I4Rot,
}

impl Level {
    pub const ALL: [Level; 5] = [Level::I, Level::I1, Level::I2, Level::I3, Level::I4Rot];

    /// The subgroup of loop group elements acting at this level.
    pub fn subgroup(self) -> SubgroupId {
        match self {
            Level::I => SubgroupId::I,
            Level::I1 => SubgroupId::I1,
            Level::I2 => SubgroupId::I2,
            Level::I3 => SubgroupId::I3,
            Level::I4Rot => SubgroupId::I4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Level::I => "I",
            Level::I1 => "I1",
            Level::I2 => "I2",
            Level::I3 => "I3",
            Level::I4Rot => "I4Rot",
        }
    }

    /// Whether `ṡ₁` normalizes the subgroup, so that it permutes orbits.
    pub fn has_involution(self) -> bool {
        matches!(self, Level::I1 | Level::I3 | Level::I4Rot)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseLevelError;

impl fmt::Display for ParseLevelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of I, I1, I2, I3, I4Rot")
    }
}

impl core::error::Error for ParseLevelError {}

impl FromStr for Level {
    type Err = ParseLevelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Level::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or(ParseLevelError)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Even-dimensional cells `E_n = I·[n, 0]`.
    E,
    /// Odd-dimensional cells `O_n = I·[n, 0]'`.
    O,
}

impl Family {
    fn opposite(self) -> Family {
        match self {
            Family::E => Family::O,
            Family::O => Family::E,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    /// Complement of the splitting hyperplane.
    Open,
    /// The splitting hyperplane.
    Hyp,
}

impl Tag {
    fn nonzero(flag: bool) -> Tag {
        if flag {
            Tag::Open
        } else {
            Tag::Hyp
        }
    }
}

use Tag::{Hyp, Open};

const NO_TAGS: &[Tag] = &[];
const SEQUENCES: [&[Tag]; 7] = [
    NO_TAGS,
    &[Open],
    &[Hyp],
    &[Open, Open],
    &[Open, Hyp],
    &[Hyp, Open],
    &[Hyp, Hyp],
];

fn intern(tags: &[Tag]) -> Option<&'static [Tag]> {
    SEQUENCES.into_iter().find(|s| *s == tags)
}

/// Which tag sequences name orbits at `level` inside the cell `family_n`.
fn tag_sequences(level: Level, family: Family, n: i64) -> &'static [&'static [Tag]] {
    const UNSPLIT: &[&[Tag]] = &[NO_TAGS];
    const ONE: &[&[Tag]] = &[&[Open], &[Hyp]];
    const HYP_SPLIT: &[&[Tag]] = &[&[Open], &[Hyp, Open], &[Hyp, Hyp]];
    const BOTH_SPLIT: &[&[Tag]] = &[&[Open, Open], &[Open, Hyp], &[Hyp, Open], &[Hyp, Hyp]];
    match (level, family, n.signum()) {
        (_, Family::E, 0) | (Level::I, _, _) => UNSPLIT,
        (Level::I1 | Level::I2, _, 1) => ONE,
        (Level::I3, _, 1) => HYP_SPLIT,
        (Level::I4Rot, _, 1) => BOTH_SPLIT,
        (_, Family::O, 0) => ONE,
        (Level::I1, _, _) => UNSPLIT,
        (_, _, _) => ONE,
    }
}

/// Name of an orbit: a Schubert cell `E_n`/`O_n` plus up to two split tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitLabel {
    family: Family,
    n: i64,
    tags: &'static [Tag],
}

impl OrbitLabel {
    /// Panics on more than two tags.
    pub fn new(family: Family, n: i64, tags: &[Tag]) -> Self {
        OrbitLabel {
            family,
            n,
            tags: intern(tags).expect("at most two tags"),
        }
    }

    pub fn cell(family: Family, n: i64) -> Self {
        Self::new(family, n, NO_TAGS)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn tags(&self) -> &'static [Tag] {
        self.tags
    }

    /// The same label with only the first `k` tags.
    pub fn coarsen(&self, k: usize) -> OrbitLabel {
        OrbitLabel {
            tags: intern(&self.tags[..k.min(self.tags.len())]).expect("prefix"),
            ..*self
        }
    }

    pub fn is_valid_at(&self, level: Level) -> bool {
        tag_sequences(level, self.family, self.n).contains(&self.tags)
    }

    fn require_valid(&self, level: Level) -> Result<(), Error> {
        if self.is_valid_at(level) {
            Ok(())
        } else {
            Err(Error::InvalidLabelForLevel)
        }
    }
}

/// `E_2:open,open`, `O_-1:hyp`, `E_0`.
impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::E => "E",
            Family::O => "O",
        };
        write!(f, "{fam}_{}", self.n)?;
        for (i, tag) in self.tags.iter().enumerate() {
            f.write_str(if i == 0 { ":" } else { "," })?;
            f.write_str(match tag {
                Open => "open",
                Hyp => "hyp",
            })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseLabelError;

impl fmt::Display for ParseLabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected a label such as E_2:open,hyp or O_-1")
    }
}

impl core::error::Error for ParseLabelError {}

impl FromStr for OrbitLabel {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (head, tail) = match s.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (s, None),
        };
        let (fam, index) = head.split_once('_').ok_or(ParseLabelError)?;
        let family = match fam {
            "E" => Family::E,
            "O" => Family::O,
            _ => return Err(ParseLabelError),
        };
        let n: i64 = index.parse().map_err(|_| ParseLabelError)?;
        let mut tags = Vec::new();
        if let Some(tail) = tail {
            for word in tail.split(',') {
                tags.push(match word.trim() {
                    "open" => Open,
                    "hyp" => Hyp,
                    _ => return Err(ParseLabelError),
                });
            }
        }
        let tags = intern(&tags).ok_or(ParseLabelError)?;
        Ok(OrbitLabel { family, n, tags })
    }
}

/// An `I4^rot`-orbit label together with the `I4`-orbit invariant
/// `β = p_{-n} / p_{-n+1}` on the `open,open` cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct I4FineLabel {
    pub base: OrbitLabel,
    pub beta: Option<Coeff>,
}

impl fmt::Display for I4FineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if let Some(beta) = &self.beta {
            write!(f, "@beta={beta}")?;
        }
        Ok(())
    }
}

/// The Schubert cell containing `x`.
///
/// With `m = ν(p)`: `[n, p]` lies in `E_n` if `m + n ≥ 0` and in `O_m`
/// otherwise; `[n, p]'` lies in `O_n` if `m + n ≥ 0` and in `E_m` otherwise.
pub fn base_cell(x: &FlagPoint) -> (Family, i64) {
    let (own, other) = match x.kind() {
        PointKind::Straight => (Family::E, Family::O),
        PointKind::Primed => (Family::O, Family::E),
    };
    match x.p().valuation() {
        Err(_) => (own, x.n()),
        Ok(m) if m + x.n() >= 0 => (own, x.n()),
        Ok(m) => (other, m),
    }
}

/// The orbit of `x` at `level`.
pub fn classify(x: &FlagPoint, level: Level) -> OrbitLabel {
    let (family, n) = base_cell(x);
    let seqs = tag_sequences(level, family, n);
    let tags = if seqs.len() == 1 {
        seqs[0]
    } else if n >= 0 {
        // x = [n, p] (window -n..n-1) or [n, p]' (window -n..n)
        let first = Tag::nonzero(!x.p().coefficient(-n).is_zero());
        let second = Tag::nonzero(!x.p().coefficient(-n + 1).is_zero());
        let tags: &[Tag] = match level {
            Level::I3 if first == Hyp && n > 0 => &[Hyp, second],
            Level::I4Rot if n > 0 => &[first, second],
            _ => &[first],
        };
        intern(tags).expect("two tags")
    } else {
        // Top stratum [-n-1, C^× t^n + ...] of opposite kind.
        let opposite_kind = match family {
            Family::E => PointKind::Primed,
            Family::O => PointKind::Straight,
        };
        let top = x.kind() == opposite_kind
            && x.p().valuation().is_ok_and(|m| m + x.n() == -1);
        intern(&[Tag::nonzero(top)]).expect("one tag")
    };
    debug_assert!(seqs.contains(&tags));
    OrbitLabel { family, n, tags }
}

/// `I4`-orbit of `x`: the `I4^rot` label plus `β` on `open,open` cells.
pub fn classify_fine_i4(x: &FlagPoint) -> I4FineLabel {
    let base = classify(x, Level::I4Rot);
    let beta = (base.tags == [Open, Open]).then(|| {
        let n = base.n;
        &x.p().coefficient(-n) / &x.p().coefficient(-n + 1)
    });
    I4FineLabel { base, beta }
}

/// The representative point listed for each orbit.
///
/// Only depends on the label: a cell with tags reads its coordinates off the
/// tags, an untagged or `hyp` label with `n < 0` uses the cell's base point.
pub fn distinguished_point(label: &OrbitLabel, level: Level) -> Result<FlagPoint, Error> {
    label.require_valid(level)?;
    let n = label.n;
    let kind = match label.family {
        Family::E => PointKind::Straight,
        Family::O => PointKind::Primed,
    };
    if n < 0 {
        return Ok(match label.tags {
            [Open] => {
                let opposite = match kind {
                    PointKind::Straight => PointKind::Primed,
                    PointKind::Primed => PointKind::Straight,
                };
                FlagPoint::new(opposite, -n - 1, LaurentPoly::t_pow(n))
            }
            _ => FlagPoint::new(kind, n, LaurentPoly::zero()),
        });
    }
    let mut p = LaurentPoly::zero();
    if label.tags.first() == Some(&Open) {
        p = &p + &LaurentPoly::t_pow(-n);
    }
    if label.tags.get(1) == Some(&Open) {
        p = &p + &LaurentPoly::t_pow(-n + 1);
    }
    Ok(FlagPoint::new(kind, n, p))
}

/// Affine dimension of the Schubert cell.
fn cell_dimension(family: Family, n: i64) -> u32 {
    let d = match family {
        Family::E => 2 * n.abs(),
        Family::O if n >= 0 => 2 * n + 1,
        Family::O => -2 * n - 1,
    };
    d as u32
}

/// `(r, d)` such that the orbit is isomorphic to `G_m^r × A^d`.
///
/// Each split removes one affine coordinate; the `open` part turns it into
/// a `G_m` factor.
pub fn dimension(label: &OrbitLabel, level: Level) -> Result<(u32, u32), Error> {
    label.require_valid(level)?;
    let opens = label.tags.iter().filter(|t| **t == Open).count() as u32;
    let affine = cell_dimension(label.family, label.n) - label.tags.len() as u32;
    Ok((opens, affine))
}

/// The orbit `ṡ₁·O` for `O` the orbit named by `label`.
pub fn involution_label(label: &OrbitLabel, level: Level) -> Result<OrbitLabel, Error> {
    if !level.has_involution() {
        return Err(Error::InvolutionUndefinedAtLevel);
    }
    label.require_valid(level)?;
    let OrbitLabel { family, n, tags } = *label;
    let swap = |tags: &[Tag]| OrbitLabel::new(family.opposite(), -n, tags);
    let image = if level == Level::I1 {
        match tags {
            [Open] => *label,
            [] if family == Family::E || n < 0 => swap(&[Hyp]),
            _ => swap(NO_TAGS),
        }
    } else {
        match tags {
            [] => swap(&[Hyp]),
            [Hyp] if n == 0 => swap(NO_TAGS),
            [Open] | [Open, _] if n >= 0 => *label,
            [Open] => swap(&[Hyp, Open]),
            [Hyp] => swap(&[Hyp, Hyp]),
            [Hyp, Open] => swap(&[Open]),
            [Hyp, Hyp] => swap(&[Hyp]),
            _ => unreachable!("validated label"),
        }
    };
    debug_assert!(image.is_valid_at(level));
    Ok(image)
}

/// All orbits at `level` with cell index in `n_min..=n_max`, each flagged
/// when it is a single point.
pub fn enumerate_labels(level: Level, n_min: i64, n_max: i64) -> Vec<(OrbitLabel, bool)> {
    let mut out = Vec::new();
    for n in n_min..=n_max {
        for family in [Family::E, Family::O] {
            for tags in tag_sequences(level, family, n) {
                let label = OrbitLabel { family, n, tags };
                let point = dimension(&label, level) == Ok((0, 0));
                out.push((label, point));
            }
        }
    }
    out
}

/// Nonzero values used for `C^×` coordinates.
const NONZERO: [(i64, i64); 10] = [
    (1, 1),
    (-1, 1),
    (2, 1),
    (-2, 1),
    (3, 1),
    (-3, 1),
    (1, 2),
    (-1, 2),
    (1, 3),
    (-2, 3),
];

fn draw_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Coeff {
    let (a, b) = NONZERO[rng.random_range(0..NONZERO.len())];
    Coeff::ratio(a, b)
}

fn draw_free<R: Rng + ?Sized>(rng: &mut R) -> Coeff {
    if rng.random_range(0..4) == 0 {
        Coeff::ZERO
    } else {
        draw_nonzero(rng)
    }
}

/// Random point of the orbit `label` at `level`.
pub fn sample_point(label: &OrbitLabel, level: Level, seed: u64) -> Result<FlagPoint, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_point_with(label, level, &mut rng)
}

/// Draws coordinates in the orbit's coordinate window: `C^×` slots from a
/// fixed set of nonzero rationals, `C` slots from the same set or zero. For
/// `n < 0` cells the stratum is drawn uniformly among those in the orbit,
/// counting the base point as a stratum.
pub fn sample_point_with<R: Rng + ?Sized>(
    label: &OrbitLabel,
    level: Level,
    rng: &mut R,
) -> Result<FlagPoint, Error> {
    label.require_valid(level)?;
    let n = label.n;
    let point = if n >= 0 {
        let (kind, top) = match label.family {
            Family::E => (PointKind::Straight, n - 1),
            Family::O => (PointKind::Primed, n),
        };
        let mut terms = Vec::new();
        for k in -n..=top {
            let constraint = match k - (-n) {
                0 => label.tags.first(),
                1 => label.tags.get(1),
                _ => None,
            };
            let c = match constraint {
                Some(Open) => draw_nonzero(rng),
                Some(Hyp) => Coeff::ZERO,
                None => draw_free(rng),
            };
            terms.push((k, c));
        }
        FlagPoint::new(kind, n, LaurentPoly::from_terms(terms))
    } else {
        // Strata k = 0..=last of the opposite kind, then the base point.
        let (base_kind, stratum_kind, last, top_offset) = match label.family {
            Family::E => (PointKind::Straight, PointKind::Primed, -2 * n - 1, 0),
            Family::O => (PointKind::Primed, PointKind::Straight, -2 * n - 2, 1),
        };
        let k = match label.tags {
            [Open] => 0,
            [Hyp] => rng.random_range(1..=last + 1),
            _ => rng.random_range(0..=last + 1),
        };
        if k == last + 1 {
            FlagPoint::new(base_kind, n, LaurentPoly::zero())
        } else {
            let index = -n - 1 - k;
            let mut terms = alloc::vec![(n, draw_nonzero(rng))];
            for e in n + 1..=index - top_offset {
                terms.push((e, draw_free(rng)));
            }
            FlagPoint::new(stratum_kind, index, LaurentPoly::from_terms(terms))
        }
    };
    debug_assert_eq!(classify(&point, level), *label);
    Ok(point)
}

/// An element `h ∈ I` with `h·x` equal to the base point `[n', 0]` or
/// `[n', 0]'` of the Schubert cell of `x`.
pub fn reduce_to_base(x: &FlagPoint) -> Result<(GroupElement, FlagPoint), Error> {
    let Ok((m, unit)) = x.p().unit_decompose() else {
        return Ok((GroupElement::identity(), x.clone()));
    };
    let n = x.n();
    let straight = x.is_straight();
    if m + n >= 0 {
        // [[1, ∓t^n p], [0, 1]] clears p outright.
        let shift = x.p().shift(n);
        let h = GroupElement::upper(if straight { -shift } else { shift });
        let base = FlagPoint::new(x.kind(), n, LaurentPoly::zero());
        return Ok((h, base));
    }
    // [[p₍₀₎⁻¹, 0], [∓t^(-m-n), p₍₀₎]] moves x to the opposite cell's base point.
    let prec = 2 * (n.abs() + m.abs()) + 4;
    let inv = unit.invert_unit(prec as usize)?;
    let corner = LaurentPoly::t_pow(-m - n);
    let (corner, base) = if straight {
        (-corner, FlagPoint::primed(m, LaurentPoly::zero()))
    } else {
        (corner, FlagPoint::straight(m, LaurentPoly::zero()))
    };
    let h = GroupElement::new(inv, LaurentPoly::zero(), corner, unit, Precision::Finite(prec))?;
    Ok((h, base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagpoint::act;
    use alloc::string::ToString;

    fn label(s: &str) -> OrbitLabel {
        s.parse().unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(k, c)| (k, Coeff::integer(c))))
    }

    #[test]
    fn label_text() {
        for s in ["E_2:open,open", "O_-1:hyp", "E_0", "O_3:hyp,open"] {
            assert_eq!(label(s).to_string(), s);
        }
        for bad in ["E2", "X_1", "E_1:closed", "E_1:open,open,open", "E_a"] {
            assert!(bad.parse::<OrbitLabel>().is_err(), "{bad}");
        }
        let fine = I4FineLabel { base: label("E_1:open,open"), beta: Some(Coeff::ratio(2, 3)) };
        assert_eq!(fine.to_string(), "E_1:open,open@beta=2/3");
        assert_eq!("i4rot".parse::<Level>(), Ok(Level::I4Rot));
    }

    #[test]
    fn classify_examples() {
        let zero = FlagPoint::straight(0, LaurentPoly::zero());
        for level in Level::ALL {
            assert_eq!(classify(&zero, level), label("E_0"));
        }
        let x = FlagPoint::straight(0, LaurentPoly::t_pow(-1));
        assert_eq!(classify(&x, Level::I), label("O_-1"));
        let x = FlagPoint::straight(2, poly(&[(-2, 1), (-1, 1)]));
        assert_eq!(classify(&x, Level::I4Rot), label("E_2:open,open"));
        let x = FlagPoint::straight(2, LaurentPoly::t_pow(-1));
        assert_eq!(classify(&x, Level::I3), label("E_2:hyp,open"));
        let x = FlagPoint::primed(3, poly(&[(-3, 1), (-2, 5)]));
        assert_eq!(classify(&x, Level::I4Rot), label("O_3:open,open"));
        let x = FlagPoint::primed(0, LaurentPoly::one());
        assert_eq!(classify(&x, Level::I4Rot), label("O_0:open"));
    }

    #[test]
    fn fine_labels() {
        let x = FlagPoint::straight(1, poly(&[(-1, 2), (0, 1)]));
        let fine = classify_fine_i4(&x);
        assert_eq!((fine.base, fine.beta), (label("E_1:open,open"), Some(Coeff::integer(2))));
        let x = FlagPoint::primed(1, poly(&[(-1, 1), (0, 1)]));
        let fine = classify_fine_i4(&x);
        assert_eq!((fine.base, fine.beta), (label("O_1:open,open"), Some(Coeff::ONE)));
        let x = FlagPoint::straight(2, LaurentPoly::t_pow(-2));
        let fine = classify_fine_i4(&x);
        assert_eq!((fine.base, fine.beta), (label("E_2:open,hyp"), None));
    }

    #[test]
    fn distinguished_point_examples() {
        assert_eq!(
            distinguished_point(&label("E_2:open,open"), Level::I4Rot),
            Ok(FlagPoint::straight(2, poly(&[(-2, 1), (-1, 1)])))
        );
        assert_eq!(
            distinguished_point(&label("O_-2:open"), Level::I2),
            Ok(FlagPoint::straight(1, LaurentPoly::t_pow(-2)))
        );
        assert_eq!(distinguished_point(&label("E_0"), Level::I), Ok(FlagPoint::straight(0, LaurentPoly::zero())));
        assert_eq!(distinguished_point(&label("O_0:open"), Level::I4Rot), Ok(FlagPoint::primed(0, LaurentPoly::one())));
        assert_eq!(distinguished_point(&label("E_2:open"), Level::I4Rot), Err(Error::InvalidLabelForLevel));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&label("E_2"), Level::I), Ok((0, 4)));
        assert_eq!(dimension(&label("E_2:open,open"), Level::I4Rot), Ok((2, 2)));
        assert_eq!(dimension(&label("O_-2:hyp"), Level::I2), Ok((0, 2)));
        assert_eq!(dimension(&label("O_-2:hyp"), Level::I1), Err(Error::InvalidLabelForLevel));
    }

    #[test]
    fn involution_examples() {
        assert_eq!(involution_label(&label("E_-2"), Level::I1), Ok(label("O_2:hyp")));
        assert_eq!(involution_label(&label("E_2:open"), Level::I1), Ok(label("E_2:open")));
        assert_eq!(involution_label(&label("O_-1:hyp"), Level::I3), Ok(label("E_1:hyp,hyp")));
        assert_eq!(involution_label(&label("O_3:open,open"), Level::I4Rot), Ok(label("O_3:open,open")));
        assert_eq!(involution_label(&label("E_0"), Level::I2), Err(Error::InvolutionUndefinedAtLevel));
        assert_eq!(involution_label(&label("E_0"), Level::I), Err(Error::InvolutionUndefinedAtLevel));
        assert_eq!(involution_label(&label("E_1"), Level::I3), Err(Error::InvalidLabelForLevel));
    }

    #[test]
    fn enumeration_examples() {
        let i1: Vec<_> = enumerate_labels(Level::I1, 0, 1)
            .into_iter()
            .map(|(l, p)| (l.to_string(), p))
            .collect();
        let want = [
            ("E_0", true),
            ("O_0:open", false),
            ("O_0:hyp", true),
            ("E_1:open", false),
            ("E_1:hyp", false),
            ("O_1:open", false),
            ("O_1:hyp", false),
        ];
        assert_eq!(i1.len(), want.len());
        for (l, p) in want {
            assert!(i1.contains(&(l.to_string(), p)), "{l}");
        }
        let points: Vec<_> = enumerate_labels(Level::I4Rot, -1, 1)
            .into_iter()
            .filter(|(_, p)| *p)
            .map(|(l, _)| l.to_string())
            .collect();
        assert_eq!(points.len(), 4);
        for l in ["E_0", "O_0:hyp", "O_-1:hyp", "E_1:hyp,hyp"] {
            assert!(points.contains(&l.to_string()));
        }
        let i: Vec<_> = enumerate_labels(Level::I, 0, 0).into_iter().map(|(l, p)| (l.to_string(), p)).collect();
        assert_eq!(i, [("E_0".to_string(), true), ("O_0".to_string(), false)]);
    }

    #[test]
    fn point_orbit_samples() {
        for seed in 0..5 {
            assert_eq!(sample_point(&label("E_0"), Level::I, seed), Ok(FlagPoint::straight(0, LaurentPoly::zero())));
            assert_eq!(sample_point(&label("E_1:hyp,hyp"), Level::I3, seed), Ok(FlagPoint::straight(1, LaurentPoly::zero())));
            assert_eq!(sample_point(&label("O_0:hyp"), Level::I1, seed), Ok(FlagPoint::primed(0, LaurentPoly::zero())));
        }
        assert_eq!(sample_point(&label("E_1:hyp,hyp"), Level::I1, 0), Err(Error::InvalidLabelForLevel));
    }

    #[test]
    fn samples_classify_to_their_label() {
        for level in Level::ALL {
            for (l, _) in enumerate_labels(level, -4, 4) {
                for seed in 0..20 {
                    let x = sample_point(&l, level, seed).unwrap();
                    assert_eq!(classify(&x, level), l, "{x} at {level}");
                }
            }
        }
    }

    #[test]
    fn reduce_to_base_examples() {
        let x = FlagPoint::straight(3, poly(&[(-2, 1)]));
        assert_eq!(reduce_to_base(&x).unwrap().1, FlagPoint::straight(3, LaurentPoly::zero()));
        let x = FlagPoint::straight(1, LaurentPoly::t_pow(-1));
        let (h, base) = reduce_to_base(&x).unwrap();
        assert_eq!(base, FlagPoint::straight(1, LaurentPoly::zero()));
        assert_eq!(h.membership(SubgroupId::I), Ok(true));
        assert_eq!(act(&h, &x), Ok(base));
        let x = FlagPoint::straight(0, LaurentPoly::t_pow(-1));
        let (h, base) = reduce_to_base(&x).unwrap();
        assert_eq!(base, FlagPoint::primed(-1, LaurentPoly::zero()));
        assert_eq!(h.membership(SubgroupId::I), Ok(true));
        assert_eq!(act(&h, &x), Ok(base));
        let x = FlagPoint::straight(-2, LaurentPoly::zero());
        assert_eq!(reduce_to_base(&x), Ok((GroupElement::identity(), x)));
    }
}
