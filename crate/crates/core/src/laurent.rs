//! Laurent polynomials over `Q`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::coeff::Coeff;
use crate::error::Error;

/// A finitely supported Laurent polynomial `Σ p_k t^k` with rational coefficients.
///
/// Terms are kept sorted by exponent and no stored coefficient is zero, so the
/// zero polynomial has no terms and structural equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i64, Coeff)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::ONE)
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(0, c)
    }

    /// `c·t^k`.
    pub fn monomial(k: i64, c: Coeff) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(k, c)],
            }
        }
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(k, Coeff::ONE)
    }

    /// Collects `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, Coeff)>>(terms: I) -> Self {
        let mut map: BTreeMap<i64, Coeff> = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_default() += &c;
        }
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Caller guarantees sorted, distinct exponents; zero coefficients are dropped.
    fn from_sorted(terms: Vec<(i64, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        let mut terms = terms;
        terms.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Coeff)> + ExactSizeIterator {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// The coefficient `p_n` of `t^n`.
    pub fn coefficient(&self, n: i64) -> Coeff {
        match self.terms.binary_search_by_key(&n, |(k, _)| *k) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coeff::ZERO,
        }
    }

    /// Lowest exponent `ν(p)`.
    pub fn valuation(&self) -> Result<i64, Error> {
        self.terms.first().map(|(k, _)| *k).ok_or(Error::ZeroPolynomial)
    }

    /// Highest exponent `ν_∞(p)`.
    pub fn degree_inf(&self) -> Result<i64, Error> {
        self.terms.last().map(|(k, _)| *k).ok_or(Error::ZeroPolynomial)
    }

    /// Splits `p = t^n·u` with `n = ν(p)` and `u` a unit of `Q[[t]]`.
    pub fn unit_decompose(&self) -> Result<(i64, LaurentPoly), Error> {
        let n = self.valuation()?;
        Ok((n, self.shift(-n)))
    }

    /// The unique `v` supported on `0..order` with `u·v ≡ 1 mod t^order`.
    pub fn invert_unit(&self, order: usize) -> Result<LaurentPoly, Error> {
        match self.terms.first() {
            Some((0, _)) => {}
            _ => return Err(Error::NotAUnit),
        }
        let u0_inv = self.terms[0].1.recip().ok_or(Error::NotAUnit)?;
        let mut v: Vec<Coeff> = Vec::with_capacity(order);
        for k in 0..order {
            if k == 0 {
                v.push(u0_inv.clone());
                continue;
            }
            let mut acc = Coeff::ZERO;
            for (j, uj) in self.terms.iter().skip(1) {
                let j = *j as usize;
                if j > k {
                    break;
                }
                let vk = &v[k - j];
                if !vk.is_zero() {
                    acc += &(uj * vk);
                }
            }
            v.push(if acc.is_zero() { acc } else { -(&acc * &u0_inv) });
        }
        Ok(Self::from_sorted(
            v.into_iter()
                .enumerate()
                .map(|(k, c)| (k as i64, c))
                .collect(),
        ))
    }

    /// Keeps the terms with exponent strictly below `n`.
    pub fn truncate_below(&self, n: i64) -> LaurentPoly {
        let cut = self.terms.partition_point(|(k, _)| *k < n);
        LaurentPoly {
            terms: self.terms[..cut].to_vec(),
        }
    }

    /// Keeps the terms with exponent at least `n`.
    pub fn truncate_from(&self, n: i64) -> LaurentPoly {
        let cut = self.terms.partition_point(|(k, _)| *k < n);
        LaurentPoly {
            terms: self.terms[cut..].to_vec(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// The substitution `t ↦ γt`: `p_k ↦ γ^k p_k`.
    pub fn rotate(&self, gamma: &Coeff) -> Result<LaurentPoly, Error> {
        if gamma.is_zero() {
            return Err(Error::ZeroRotation);
        }
        Ok(LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, c * &gamma.pow(*k).expect("nonzero base")))
                .collect(),
        })
    }

    /// `self · other` with every exponent `>= bound` discarded.
    pub fn mul_below(&self, other: &LaurentPoly, bound: Option<i64>) -> LaurentPoly {
        let (Some(&(lo1, _)), Some(&(lo2, _))) = (self.terms.first(), other.terms.first()) else {
            return Self::zero();
        };
        let hi1 = self.terms.last().unwrap().0;
        let hi2 = other.terms.last().unwrap().0;
        let lo = lo1 + lo2;
        let mut hi = hi1 + hi2;
        if let Some(b) = bound {
            hi = hi.min(b - 1);
        }
        if hi < lo {
            return Self::zero();
        }
        let span = (hi - lo + 1) as usize;
        let work = self.terms.len() * other.terms.len();
        if span <= 4 * work + 64 {
            let mut acc = vec![Coeff::ZERO; span];
            for (e1, c1) in &self.terms {
                for (e2, c2) in &other.terms {
                    let e = e1 + e2;
                    if e > hi {
                        break;
                    }
                    acc[(e - lo) as usize] += &(c1 * c2);
                }
            }
            Self::from_sorted(
                acc.into_iter()
                    .enumerate()
                    .map(|(i, c)| (lo + i as i64, c))
                    .collect(),
            )
        } else {
            let mut acc: BTreeMap<i64, Coeff> = BTreeMap::new();
            for (e1, c1) in &self.terms {
                for (e2, c2) in &other.terms {
                    let e = e1 + e2;
                    if e > hi {
                        break;
                    }
                    *acc.entry(e).or_default() += &(c1 * c2);
                }
            }
            Self::from_sorted(acc.into_iter().collect())
        }
    }

    fn merge(&self, other: &LaurentPoly, negate_other: bool) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let pick = |c: &Coeff| if negate_other { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            if ea < eb {
                out.push((*ea, ca.clone()));
                i += 1;
            } else if eb < ea {
                out.push((*eb, pick(cb)));
                j += 1;
            } else {
                let s = if negate_other { ca - cb } else { ca + cb };
                out.push((*ea, s));
                i += 1;
                j += 1;
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(e, c)| (*e, pick(c))));
        Self::from_sorted(out)
    }
}

impl From<Coeff> for LaurentPoly {
    fn from(c: Coeff) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'b> Add<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl<'b> Sub<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl<'b> Mul<&'b LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'b LaurentPoly) -> LaurentPoly {
        self.mul_below(rhs, None)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Canonical text form, e.g. `-1/2*t^-2 + 3 + t`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *k == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            if *k == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{k}")?;
            }
        }
        Ok(())
    }
}
