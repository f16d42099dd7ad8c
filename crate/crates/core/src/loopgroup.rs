//! Truncated elements of `SL₂((t))` and the Iwahori chain `I ⊃ I1 ⊃ I2 ⊃ I3 ⊃ I4`.

use core::fmt;
use core::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::Coeff;
use crate::error::Error;
use crate::laurent::LaurentPoly;

/// Absolute `t`-adic precision of a matrix: entries are known modulo `t^P`.
///
/// `Finite(p) < Exact` for every `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Precision {
    Finite(i64),
    Exact,
}

impl Precision {
    /// Exclusive exponent bound for stored entries, `None` when exact.
    pub fn bound(self) -> Option<i64> {
        match self {
            Precision::Finite(p) => Some(p),
            Precision::Exact => None,
        }
    }

    /// Whether every coefficient of exponent `< n` is determined.
    pub fn covers(self, n: i64) -> bool {
        match self {
            Precision::Finite(p) => n <= p,
            Precision::Exact => true,
        }
    }

    fn offset(self, k: i64) -> Precision {
        match self {
            Precision::Finite(p) => Precision::Finite(p + k),
            Precision::Exact => Precision::Exact,
        }
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precision::Finite(p) => write!(f, "t^{p}"),
            Precision::Exact => f.write_str("exact"),
        }
    }
}

/// A member of the chain of subgroups of the Iwahori group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubgroupId {
    I,
    I1,
    I2,
    I3,
    I4,
}

impl SubgroupId {
    pub const ALL: [SubgroupId; 5] = [
        SubgroupId::I,
        SubgroupId::I1,
        SubgroupId::I2,
        SubgroupId::I3,
        SubgroupId::I4,
    ];

    /// Entry conditions on literal matrix entries `[[a, b], [c, d]]`.
    pub fn shape(self) -> EntryShape {
        let (b_min, c_min, flat_diagonal) = match self {
            SubgroupId::I => (0, 1, false),
            SubgroupId::I1 => (1, 1, false),
            SubgroupId::I2 => (1, 2, false),
            SubgroupId::I3 => (2, 2, false),
            SubgroupId::I4 => (2, 2, true),
        };
        EntryShape {
            b_min,
            c_min,
            flat_diagonal,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SubgroupId::I => "I",
            SubgroupId::I1 => "I1",
            SubgroupId::I2 => "I2",
            SubgroupId::I3 => "I3",
            SubgroupId::I4 => "I4",
        }
    }
}

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Valuation thresholds describing a subgroup of `I` by entry shape.
///
/// Diagonal entries are always units. `flat_diagonal` additionally kills the
/// `t¹` coefficient of both diagonal entries, i.e. `a ∈ α(1 + t²Q[[t]])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EntryShape {
    pub b_min: i64,
    pub c_min: i64,
    pub flat_diagonal: bool,
}

impl EntryShape {
    fn admits(&self, g: &GroupElement) -> bool {
        let at_least = |p: &LaurentPoly, k: i64| p.valuation().map_or(true, |v| v >= k);
        at_least(&g.a, 0)
            && at_least(&g.d, 0)
            && at_least(&g.b, self.b_min)
            && at_least(&g.c, self.c_min)
            && (!self.flat_diagonal
                || (g.a.coefficient(1).is_zero() && g.d.coefficient(1).is_zero()))
    }
}

/// Named elements used throughout the orbit computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Special {
    Identity,
    /// `[[0, -1], [1, 0]]`
    DotS1,
    /// `[[t^n, 0], [0, t^-n]]`
    DiagT(i64),
    /// `[[1, p], [0, 1]]`
    Upper(LaurentPoly),
    /// `[[1, 0], [p, 1]]`
    Lower(LaurentPoly),
    /// `[[α, 0], [0, 1/α]]`
    Torus(Coeff),
}

/// A 2×2 matrix `[[a, b], [c, d]]` over `Q[t, t⁻¹]` standing for an element
/// of `SL₂((t))` known modulo `t^prec`.
///
/// Entries never carry terms at or above `prec`, and `ad - bc ≡ 1` holds to
/// every order the stored entries determine (exactly when `prec` is exact).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    a: LaurentPoly,
    b: LaurentPoly,
    c: LaurentPoly,
    d: LaurentPoly,
    prec: Precision,
}

impl GroupElement {
    /// Validates the determinant contract after truncating entries below `prec`.
    ///
    /// With finite precision `P` the entries determine `ad - bc` modulo
    /// `t^(P + v)`, where `v ≤ 0` is the least valuation among the entries;
    /// the determinant must equal 1 to that order.
    pub fn new(
        a: LaurentPoly,
        b: LaurentPoly,
        c: LaurentPoly,
        d: LaurentPoly,
        prec: Precision,
    ) -> Result<Self, Error> {
        let g = Self::from_parts(a, b, c, d, prec);
        let det = g.det();
        let ok = match prec {
            Precision::Exact => det == LaurentPoly::one(),
            Precision::Finite(p) => {
                let order = p + g.min_valuation();
                (&det - &LaurentPoly::one()).truncate_below(order).is_zero()
            }
        };
        if ok {
            Ok(g)
        } else {
            Err(Error::NotUnimodular)
        }
    }

    /// Exact element; the determinant must be exactly 1.
    pub fn exact(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> Result<Self, Error> {
        Self::new(a, b, c, d, Precision::Exact)
    }

    pub(crate) fn from_parts(
        a: LaurentPoly,
        b: LaurentPoly,
        c: LaurentPoly,
        d: LaurentPoly,
        prec: Precision,
    ) -> Self {
        match prec.bound() {
            Some(p) => GroupElement {
                a: a.truncate_below(p),
                b: b.truncate_below(p),
                c: c.truncate_below(p),
                d: d.truncate_below(p),
                prec,
            },
            None => GroupElement { a, b, c, d, prec },
        }
    }

    pub fn identity() -> Self {
        Self::diagonal(LaurentPoly::one(), LaurentPoly::one())
    }

    pub fn dot_s1() -> Self {
        GroupElement {
            a: LaurentPoly::zero(),
            b: -LaurentPoly::one(),
            c: LaurentPoly::one(),
            d: LaurentPoly::zero(),
            prec: Precision::Exact,
        }
    }

    pub fn diag_t(n: i64) -> Self {
        Self::diagonal(LaurentPoly::t_pow(n), LaurentPoly::t_pow(-n))
    }

    pub fn upper(p: LaurentPoly) -> Self {
        GroupElement {
            a: LaurentPoly::one(),
            b: p,
            c: LaurentPoly::zero(),
            d: LaurentPoly::one(),
            prec: Precision::Exact,
        }
    }

    pub fn lower(p: LaurentPoly) -> Self {
        GroupElement {
            a: LaurentPoly::one(),
            b: LaurentPoly::zero(),
            c: p,
            d: LaurentPoly::one(),
            prec: Precision::Exact,
        }
    }

    pub fn torus(alpha: &Coeff) -> Result<Self, Error> {
        let inv = alpha.recip().ok_or(Error::ZeroTorusParameter)?;
        Ok(Self::diagonal(
            LaurentPoly::constant(alpha.clone()),
            LaurentPoly::constant(inv),
        ))
    }

    pub fn special(which: Special) -> Result<Self, Error> {
        Ok(match which {
            Special::Identity => Self::identity(),
            Special::DotS1 => Self::dot_s1(),
            Special::DiagT(n) => Self::diag_t(n),
            Special::Upper(p) => Self::upper(p),
            Special::Lower(p) => Self::lower(p),
            Special::Torus(alpha) => Self::torus(&alpha)?,
        })
    }

    fn diagonal(a: LaurentPoly, d: LaurentPoly) -> Self {
        GroupElement {
            a,
            b: LaurentPoly::zero(),
            c: LaurentPoly::zero(),
            d,
            prec: Precision::Exact,
        }
    }

    pub fn a(&self) -> &LaurentPoly {
        &self.a
    }

    pub fn b(&self) -> &LaurentPoly {
        &self.b
    }

    pub fn c(&self) -> &LaurentPoly {
        &self.c
    }

    pub fn d(&self) -> &LaurentPoly {
        &self.d
    }

    pub fn prec(&self) -> Precision {
        self.prec
    }

    pub fn entries(&self) -> [&LaurentPoly; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> LaurentPoly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// Least valuation among nonzero entries, clamped to at most 0.
    pub(crate) fn min_valuation(&self) -> i64 {
        self.entries()
            .iter()
            .filter_map(|p| p.valuation().ok())
            .min()
            .map_or(0, |v| v.min(0))
    }

    /// Matrix product. Precision drops by the most negative entry valuation of
    /// the other factor, since a truncation error `O(t^P)` gets multiplied by it.
    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        let prec = self
            .prec
            .offset(other.min_valuation())
            .min(other.prec.offset(self.min_valuation()));
        let bound = prec.bound();
        let dot = |x: &LaurentPoly, y: &LaurentPoly, z: &LaurentPoly, w: &LaurentPoly| {
            &x.mul_below(y, bound) + &z.mul_below(w, bound)
        };
        GroupElement::from_parts(
            dot(&self.a, &other.a, &self.b, &other.c),
            dot(&self.a, &other.b, &self.b, &other.d),
            dot(&self.c, &other.a, &self.d, &other.c),
            dot(&self.c, &other.b, &self.d, &other.d),
            prec,
        )
    }

    /// Adjugate `[[d, -b], [-c, a]]`, the inverse of a determinant-one matrix.
    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
            prec: self.prec,
        }
    }

    /// Forgets all coefficients at exponent `>= p`.
    pub fn truncated(&self, p: i64) -> GroupElement {
        if self.prec.covers(p) && self.prec != Precision::Finite(p) {
            GroupElement::from_parts(
                self.a.clone(),
                self.b.clone(),
                self.c.clone(),
                self.d.clone(),
                Precision::Finite(p),
            )
        } else {
            self.clone()
        }
    }

    /// Whether the entries have the valuation shape of subgroup `s`.
    ///
    /// Decided by the coefficients of `t⁰` and `t¹`, hence needs precision 2.
    pub fn membership(&self, s: SubgroupId) -> Result<bool, Error> {
        if !self.prec.covers(2) {
            return Err(Error::InsufficientPrecision {
                needed: 2,
                available: self.prec,
            });
        }
        Ok(s.shape().admits(self))
    }

    /// Entrywise loop rotation `t ↦ γt`.
    pub fn rotate(&self, gamma: &Coeff) -> Result<GroupElement, Error> {
        Ok(GroupElement {
            a: self.a.rotate(gamma)?,
            b: self.b.rotate(gamma)?,
            c: self.c.rotate(gamma)?,
            d: self.d.rotate(gamma)?,
            prec: self.prec,
        })
    }

    /// Deterministic pseudo-random element of subgroup `s` modulo `t^prec`.
    pub fn sample(s: SubgroupId, window: RangeInclusive<i64>, prec: i64, seed: u64) -> GroupElement {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::sample_shaped(s.shape(), window, prec, &mut rng)
    }

    /// Random element with the given entry shape, known modulo `t^prec`.
    ///
    /// `a` is a random unit of the shape and `b`, `c` random series with the
    /// required valuations; `d = (1 + bc)/a` closes the determinant. Integer
    /// coefficients come from `window`, the constant term of `a` avoids 0.
    /// Panics if `prec < 4` or `window` has no nonzero value.
    pub fn sample_shaped<R: Rng + ?Sized>(
        shape: EntryShape,
        window: RangeInclusive<i64>,
        prec: i64,
        rng: &mut R,
    ) -> GroupElement {
        assert!(prec >= 4, "sampled elements need precision at least 4");
        let alpha = random_nonzero(window.clone(), rng);
        let mut draw = |from: i64| {
            LaurentPoly::from_terms(
                (from.max(0)..prec).map(|k| (k, Coeff::integer(rng.random_range(window.clone())))),
            )
        };
        let tail_start = if shape.flat_diagonal { 2 } else { 1 };
        let a = (&LaurentPoly::one() + &draw(tail_start)).scale(&alpha);
        let b = draw(shape.b_min);
        let c = draw(shape.c_min);
        let a_inv = a.invert_unit(prec as usize).expect("constant term is nonzero");
        let one_plus_bc = &LaurentPoly::one() + &b.mul_below(&c, Some(prec));
        let d = one_plus_bc.mul_below(&a_inv, Some(prec));
        let g = GroupElement::from_parts(a, b, c, d, Precision::Finite(prec));
        debug_assert!(shape.admits(&g));
        g
    }
}

/// Uniform nonzero integer from `window` as an exact coefficient.
pub fn random_nonzero<R: Rng + ?Sized>(window: RangeInclusive<i64>, rng: &mut R) -> Coeff {
    assert!(
        window.clone().any(|k| k != 0),
        "window must contain a nonzero value"
    );
    loop {
        let k = rng.random_range(window.clone());
        if k != 0 {
            return Coeff::integer(k);
        }
    }
}

/// `[[a, b], [c, d]]`, followed by `@P` when the precision is finite.
impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)?;
        if let Precision::Finite(p) = self.prec {
            write!(f, "@{p}")?;
        }
        Ok(())
    }
}
