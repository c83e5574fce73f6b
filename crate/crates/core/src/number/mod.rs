//! Grossnumbers: finite sums of terms `c·①^p` kept in positional form.
//!
//! A [`GrossNumber`] stores its terms sorted by strictly decreasing
//! grosspower, with every grossdigit finite and nonzero. An optional
//! truncation floor discards every term whose power falls below it; the
//! floor travels with the value and the result of a binary operation uses
//! the larger (less permissive) floor of its operands. This makes a whole
//! computation keep the same window of powers without any bookkeeping by
//! the caller.
//!
//! ```
//! use grossone::{GrossNumber, GrossPower};
//!
//! let x = GrossNumber::from_finite(5.0).unwrap()
//!     .add(&GrossNumber::grossone_power(GrossPower::integer(-1)))
//!     .unwrap();
//! let cube = x.mul(&x).unwrap().mul(&x).unwrap();
//! assert_eq!(cube.to_string(), "125@0 75@-1 15@-2 1@-3");
//! ```

mod power;
mod text;

use std::cmp::Ordering;

pub use power::GrossPower;
pub use text::DigitStyle;

use crate::error::GrossError;

/// A finite grossdigit. Normalized numbers never store a zero digit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrossDigit(f64);

impl GrossDigit {
    pub fn new(v: f64) -> Result<Self, GrossError> {
        if v.is_finite() {
            Ok(GrossDigit(v))
        } else {
            Err(GrossError::InvalidDigit(v))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// One `digit·①^power` term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub power: GrossPower,
    pub digit: GrossDigit,
}

impl Term {
    pub fn new(power: impl Into<GrossPower>, digit: f64) -> Result<Self, GrossError> {
        Ok(Term {
            power: power.into(),
            digit: GrossDigit::new(digit)?,
        })
    }
}

/// Truncation settings for an evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Truncation order `k`; the default floor is `①^-k`.
    pub order: u32,
    /// Tolerance for [`GrossNumber::approx_eq`]. Never used by normalization.
    pub digit_tol: f64,
}

impl EvalConfig {
    pub fn new(order: u32) -> Self {
        EvalConfig {
            order,
            digit_tol: 1e-12,
        }
    }

    pub fn with_digit_tol(mut self, tol: f64) -> Self {
        assert!(tol >= 0.0, "digit tolerance must be nonnegative");
        self.digit_tol = tol;
        self
    }

    pub fn floor(&self) -> GrossPower {
        GrossPower::integer(-(self.order as i64))
    }
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig::new(3)
    }
}

/// The less permissive of two optional floors.
pub fn combine_floors(a: Option<GrossPower>, b: Option<GrossPower>) -> Option<GrossPower> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.max(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

/// A number in the positional system with radix ①.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GrossNumber {
    terms: Vec<Term>,
    floor: Option<GrossPower>,
}

impl GrossNumber {
    /// Builds a normalized grossnumber from arbitrary raw terms.
    ///
    /// Digits at equal powers are summed, exact zeros removed, terms sorted
    /// by decreasing power and everything below `floor` dropped. Digits that
    /// share a power are summed in ascending order of value, so the result
    /// does not depend on the order of `raw`.
    pub fn normalize<I>(raw: I, floor: Option<GrossPower>) -> Result<Self, GrossError>
    where
        I: IntoIterator<Item = (GrossPower, f64)>,
    {
        let mut raw: Vec<(GrossPower, f64)> = raw
            .into_iter()
            .map(|(p, d)| {
                if d.is_finite() {
                    Ok((p, d))
                } else {
                    Err(GrossError::InvalidDigit(d))
                }
            })
            .filter(|t| match (t, floor) {
                (Ok((p, _)), Some(f)) => *p >= f,
                _ => true,
            })
            .collect::<Result<_, _>>()?;
        raw.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.total_cmp(&b.1)));

        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        let mut iter = raw.into_iter().peekable();
        while let Some((power, mut sum)) = iter.next() {
            while let Some((_, d)) = iter.next_if(|(p, _)| *p == power) {
                sum += d;
            }
            let digit = GrossDigit::new(sum)?;
            if sum != 0.0 {
                terms.push(Term { power, digit });
            }
        }
        Ok(GrossNumber { terms, floor })
    }

    pub fn zero() -> Self {
        GrossNumber::default()
    }

    pub fn one() -> Self {
        GrossNumber::grossone_power(GrossPower::ZERO)
    }

    /// The finite number `v`, i.e. `v·①^0`.
    pub fn from_finite(v: f64) -> Result<Self, GrossError> {
        let digit = GrossDigit::new(v)?;
        let terms = if v == 0.0 {
            Vec::new()
        } else {
            vec![Term {
                power: GrossPower::ZERO,
                digit,
            }]
        };
        Ok(GrossNumber { terms, floor: None })
    }

    /// `①^p`. With `p = -1` this is the infinitesimal unit.
    pub fn grossone_power(p: GrossPower) -> Self {
        GrossNumber {
            terms: vec![Term {
                power: p,
                digit: GrossDigit(1.0),
            }],
            floor: None,
        }
    }

    /// `y·①^0 + 1·①^-1` with floor `-order`: the seed whose evaluation
    /// yields the Taylor coefficients of a program at `y`.
    pub fn seed(y: f64, order: u32) -> Result<Self, GrossError> {
        let floor = GrossPower::integer(-(order as i64));
        GrossNumber::normalize(
            [(GrossPower::ZERO, y), (GrossPower::integer(-1), 1.0)],
            Some(floor),
        )
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn floor(&self) -> Option<GrossPower> {
        self.floor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The highest-power term.
    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// True when the number is a plain finite value (at most a power-0 term).
    pub fn is_finite_number(&self) -> bool {
        self.terms.iter().all(|t| t.power.is_zero())
    }

    pub fn has_infinite_part(&self) -> bool {
        self.terms.iter().any(|t| t.power.is_positive())
    }

    /// The digit at power `p`, or 0 if absent.
    pub fn coefficient(&self, p: impl Into<GrossPower>) -> f64 {
        let p = p.into();
        self.terms
            .binary_search_by(|t| p.cmp(&t.power))
            .map(|i| self.terms[i].digit.0)
            .unwrap_or(0.0)
    }

    /// The power-0 digit.
    pub fn finite_part(&self) -> f64 {
        self.coefficient(GrossPower::ZERO)
    }

    /// The terms with negative powers, keeping this number's floor.
    pub fn infinitesimal_part(&self) -> GrossNumber {
        GrossNumber {
            terms: self
                .terms
                .iter()
                .filter(|t| t.power.is_negative())
                .copied()
                .collect(),
            floor: self.floor,
        }
    }

    /// Largest digit magnitude, 0 for zero.
    pub fn max_abs_digit(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.digit.0.abs())
            .fold(0.0, f64::max)
    }

    /// Drops everything below `floor` and records it as the truncation
    /// floor (combined with any floor already present).
    pub fn truncate(&self, floor: GrossPower) -> GrossNumber {
        let floor = combine_floors(self.floor, Some(floor)).unwrap();
        GrossNumber {
            terms: self
                .terms
                .iter()
                .filter(|t| t.power >= floor)
                .copied()
                .collect(),
            floor: Some(floor),
        }
    }

    /// Same terms with the floor removed.
    pub fn without_floor(&self) -> GrossNumber {
        GrossNumber {
            terms: self.terms.clone(),
            floor: None,
        }
    }

    fn pairs(&self) -> impl Iterator<Item = (GrossPower, f64)> + '_ {
        self.terms.iter().map(|t| (t.power, t.digit.0))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &GrossNumber) -> Result<GrossNumber, GrossError> {
        GrossNumber::normalize(
            self.pairs().chain(other.pairs()),
            combine_floors(self.floor, other.floor),
        )
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &GrossNumber) -> Result<GrossNumber, GrossError> {
        GrossNumber::normalize(
            self.pairs().chain(other.pairs().map(|(p, d)| (p, -d))),
            combine_floors(self.floor, other.floor),
        )
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> GrossNumber {
        GrossNumber {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    power: t.power,
                    digit: GrossDigit(-t.digit.0),
                })
                .collect(),
            floor: self.floor,
        }
    }

    /// Distributive product: powers add, digits multiply.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &GrossNumber) -> Result<GrossNumber, GrossError> {
        let floor = combine_floors(self.floor, other.floor);
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let p = a.power + b.power;
                if floor.is_none_or(|f| p >= f) {
                    raw.push((p, a.digit.0 * b.digit.0));
                }
            }
        }
        GrossNumber::normalize(raw, floor)
    }

    /// Scales every digit by the finite value `s`.
    pub fn scale(&self, s: f64) -> Result<GrossNumber, GrossError> {
        GrossNumber::normalize(self.pairs().map(|(p, d)| (p, d * s)), self.floor)
    }

    /// Long division by the leading term of `divisor`.
    ///
    /// Quotient terms are produced from the highest power down and the
    /// process stops once the remainder vanishes or the next quotient power
    /// would fall below the effective floor (the larger of `floor` and the
    /// operands' floors). Division generally produces an infinite expansion,
    /// so a floor is mandatory.
    #[allow(clippy::should_implement_trait)]
    pub fn div(
        &self,
        divisor: &GrossNumber,
        floor: Option<GrossPower>,
    ) -> Result<GrossNumber, GrossError> {
        let lead = *divisor.leading().ok_or(GrossError::DivisionByZero)?;
        let floor = combine_floors(combine_floors(self.floor, divisor.floor), floor)
            .ok_or(GrossError::MissingTruncationFloor)?;
        // Remainder terms below this power cannot reach the quotient window.
        let rem_floor = floor + lead.power;
        let tail = &divisor.terms[1..];

        let mut rem = GrossNumber::normalize(self.pairs(), Some(rem_floor))?;
        let mut quotient: Vec<Term> = Vec::new();
        while let Some(top) = rem.terms.first().copied() {
            let power = top.power - lead.power;
            if power < floor {
                break;
            }
            let q = top.digit.0 / lead.digit.0;
            let digit = GrossDigit::new(q)?;
            quotient.push(Term { power, digit });
            // The leading term cancels by construction; subtract q·tail only.
            rem = GrossNumber::normalize(
                rem.terms[1..]
                    .iter()
                    .map(|t| (t.power, t.digit.0))
                    .chain(tail.iter().map(|t| (t.power + power, -q * t.digit.0))),
                Some(rem_floor),
            )?;
        }
        GrossNumber::normalize(
            quotient.into_iter().map(|t| (t.power, t.digit.0)),
            Some(floor),
        )
    }

    /// `self^n` by binary exponentiation, truncating after every product.
    /// Negative exponents divide into one using `floor`.
    pub fn powi(&self, n: i64, floor: Option<GrossPower>) -> Result<GrossNumber, GrossError> {
        if n < 0 {
            if self.is_zero() {
                return Err(GrossError::DivisionByZero);
            }
            let positive = self.powi(n.unsigned_abs() as i64, None)?;
            return GrossNumber::one().div(&positive, combine_floors(self.floor, floor));
        }
        let mut result = GrossNumber {
            terms: GrossNumber::one().terms,
            floor: self.floor,
        };
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Order by value: the sign of `self - other` is the sign of the
    /// leading digit of the difference. Floors are ignored.
    pub fn compare(&self, other: &GrossNumber) -> Ordering {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) => return x.digit.0.total_cmp(&0.0),
                (None, Some(y)) => return 0.0f64.total_cmp(&y.digit.0),
                (Some(x), Some(y)) => match x.power.cmp(&y.power) {
                    Ordering::Greater => return x.digit.0.total_cmp(&0.0),
                    Ordering::Less => return 0.0f64.total_cmp(&y.digit.0),
                    Ordering::Equal => {
                        match x.digit.0.partial_cmp(&y.digit.0).expect("finite digits") {
                            Ordering::Equal => {
                                i += 1;
                                j += 1;
                            }
                            ord => return ord,
                        }
                    }
                },
            }
        }
    }

    /// Sign of the number: the sign of its leading digit.
    pub fn signum(&self) -> Ordering {
        self.compare(&GrossNumber::zero())
    }

    /// Per-coefficient agreement within `tol` relative to the largest digit
    /// of either number (and at least 1). Intended for tests.
    pub fn approx_eq(&self, other: &GrossNumber, tol: f64) -> bool {
        let scale = self.max_abs_digit().max(other.max_abs_digit()).max(1.0);
        let diff = match self.without_floor().sub(&other.without_floor()) {
            Ok(d) => d,
            Err(_) => return false,
        };
        diff.max_abs_digit() <= tol * scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: i64) -> GrossPower {
        GrossPower::integer(v)
    }

    fn num(terms: &[(i64, f64)]) -> GrossNumber {
        GrossNumber::normalize(terms.iter().map(|&(q, d)| (p(q), d)), None).unwrap()
    }

    fn floored(terms: &[(i64, f64)], f: i64) -> GrossNumber {
        GrossNumber::normalize(terms.iter().map(|&(q, d)| (p(q), d)), Some(p(f))).unwrap()
    }

    fn digits(x: &GrossNumber) -> Vec<(i64, f64)> {
        x.terms()
            .iter()
            .map(|t| (t.power.as_integer().unwrap(), t.digit.value()))
            .collect()
    }

    #[test]
    fn normalize_merges_and_drops_zeros() {
        let x = num(&[(0, 5.0), (0, 20.0), (-1, 10.0), (-2, 0.0)]);
        assert_eq!(digits(&x), vec![(0, 25.0), (-1, 10.0)]);
        assert!(num(&[]).is_zero());
        let x = floored(&[(-3, 1.0), (0, 125.0), (-1, 75.0), (-2, 15.0)], -2);
        assert_eq!(digits(&x), vec![(0, 125.0), (-1, 75.0), (-2, 15.0)]);
        assert_eq!(x.floor(), Some(p(-2)));
    }

    #[test]
    fn normalize_rejects_non_finite() {
        let err = GrossNumber::normalize([(p(0), f64::NAN)], None).unwrap_err();
        assert!(matches!(err, GrossError::InvalidDigit(_)));
        let err = GrossNumber::normalize([(p(0), f64::INFINITY)], None).unwrap_err();
        assert!(matches!(err, GrossError::InvalidDigit(_)));
        // overflow while summing
        let err = GrossNumber::normalize([(p(0), f64::MAX), (p(0), f64::MAX)], None).unwrap_err();
        assert!(matches!(err, GrossError::InvalidDigit(_)));
    }

    #[test]
    fn finite_construction() {
        assert_eq!(
            digits(&GrossNumber::from_finite(5.0).unwrap()),
            vec![(0, 5.0)]
        );
        assert!(GrossNumber::from_finite(0.0).unwrap().is_zero());
        assert_eq!(
            digits(&GrossNumber::from_finite(-10.645).unwrap()),
            vec![(0, -10.645)]
        );
        assert!(GrossNumber::from_finite(f64::NAN).is_err());
    }

    #[test]
    fn grossone_powers() {
        assert_eq!(GrossNumber::grossone_power(p(0)), GrossNumber::one());
        let eps = GrossNumber::grossone_power(p(-1));
        assert_eq!(digits(&eps.mul(&eps).unwrap()), vec![(-2, 1.0)]);
        let unit = GrossNumber::grossone_power(p(1));
        assert_eq!(eps.mul(&unit).unwrap(), GrossNumber::one());
    }

    #[test]
    fn addition_and_subtraction() {
        let x = num(&[(0, 5.0), (-1, 1.0)]);
        assert_eq!(digits(&x.add(&x).unwrap()), vec![(0, 10.0), (-1, 2.0)]);
        let g = GrossNumber::grossone_power(p(1));
        assert!(g.sub(&g).unwrap().is_zero());
        let a = num(&[(0, 10.0), (-1, 6.0), (-2, 1.0)]);
        let b = num(&[(0, 10.0), (-1, 6.0)]);
        assert_eq!(digits(&a.sub(&b).unwrap()), vec![(-2, 1.0)]);
        assert_eq!(digits(&x.neg()), vec![(0, -5.0), (-1, -1.0)]);
    }

    #[test]
    fn floors_combine_to_the_larger() {
        let a = floored(&[(0, 1.0)], -3);
        let b = floored(&[(0, 1.0)], -2);
        assert_eq!(a.add(&b).unwrap().floor(), Some(p(-2)));
        assert_eq!(a.mul(&num(&[(0, 2.0)])).unwrap().floor(), Some(p(-3)));
        assert_eq!(num(&[(0, 1.0)]).add(&num(&[])).unwrap().floor(), None);
    }

    #[test]
    fn cube_expansion() {
        let x = num(&[(0, 5.0), (-1, 1.0)]);
        let sq = x.mul(&x).unwrap();
        assert_eq!(digits(&sq), vec![(0, 25.0), (-1, 10.0), (-2, 1.0)]);
        let cube = sq.mul(&x).unwrap();
        assert_eq!(
            digits(&cube),
            vec![(0, 125.0), (-1, 75.0), (-2, 15.0), (-3, 1.0)]
        );
        assert_eq!(cube.coefficient(-2), 15.0);
        assert_eq!(cube.coefficient(-7), 0.0);
        assert_eq!(cube.coefficient(GrossPower::new(1, 2).unwrap()), 0.0);
    }

    #[test]
    fn truncated_multiplication_stops_at_floor() {
        let x = floored(&[(0, 5.0), (-1, 1.0)], -2);
        let cube = x.mul(&x).unwrap().mul(&x).unwrap();
        assert_eq!(digits(&cube), vec![(0, 125.0), (-1, 75.0), (-2, 15.0)]);
    }

    #[test]
    fn division_matches_hand_long_division() {
        let a = num(&[(0, 10.0), (-1, 6.0), (-2, 1.0)]);
        let b = num(&[(0, 3.0), (-1, 1.0)]);
        let q = a.div(&b, Some(p(-3))).unwrap();
        let expect = [10.0 / 3.0, 8.0 / 9.0, 1.0 / 27.0, -1.0 / 81.0];
        for (j, e) in expect.iter().enumerate() {
            assert!((q.coefficient(-(j as i64)) - e).abs() < 1e-15);
        }
        assert!((q.coefficient(-3) + 0.0123457).abs() < 1e-6);
        assert_eq!(q.terms().len(), 4);
    }

    #[test]
    fn division_identities() {
        let a = num(&[(2, 1.5), (0, -3.0), (-2, 7.0)]);
        assert_eq!(
            a.div(&a, Some(p(-4))).unwrap().without_floor(),
            GrossNumber::one()
        );
        let g = GrossNumber::grossone_power(p(1));
        assert_eq!(
            g.div(&g, Some(p(-1))).unwrap().without_floor(),
            GrossNumber::one()
        );
        let eps = GrossNumber::grossone_power(p(-1));
        let inv = GrossNumber::one().div(&eps, Some(p(-3))).unwrap();
        assert_eq!(digits(&inv), vec![(1, 1.0)]);
    }

    #[test]
    fn division_errors() {
        let a = num(&[(0, 1.0)]);
        assert_eq!(
            a.div(&GrossNumber::zero(), Some(p(-3))).unwrap_err(),
            GrossError::DivisionByZero
        );
        assert_eq!(
            a.div(&num(&[(0, 3.0), (-1, 1.0)]), None).unwrap_err(),
            GrossError::MissingTruncationFloor
        );
        // an operand floor is enough
        assert!(a.div(&floored(&[(0, 3.0), (-1, 1.0)], -2), None).is_ok());
    }

    #[test]
    fn integer_powers() {
        let x = num(&[(0, 5.0), (-1, 1.0)]);
        let cube = x.powi(3, None).unwrap();
        assert_eq!(
            digits(&cube),
            vec![(0, 125.0), (-1, 75.0), (-2, 15.0), (-3, 1.0)]
        );
        assert_eq!(x.powi(0, None).unwrap(), GrossNumber::one());
        let two = num(&[(0, 2.0)]);
        assert_eq!(digits(&two.powi(-2, Some(p(-3))).unwrap()), vec![(0, 0.25)]);
        assert_eq!(
            GrossNumber::zero().powi(-1, Some(p(-3))).unwrap_err(),
            GrossError::DivisionByZero
        );
        assert_eq!(
            x.powi(-1, None).unwrap_err(),
            GrossError::MissingTruncationFloor
        );
    }

    #[test]
    fn comparison() {
        let eps = GrossNumber::grossone_power(p(-1));
        let zero = GrossNumber::zero();
        assert_eq!(eps.compare(&zero), Ordering::Greater);
        assert_eq!(eps.mul(&eps).unwrap().compare(&zero), Ordering::Greater);
        assert_eq!(eps.neg().compare(&zero), Ordering::Less);
        let a = num(&[(0, 3.0)]);
        let b = num(&[(0, 3.0), (-5, 1.0)]);
        assert_eq!(a.compare(&b), Ordering::Less);
        assert_eq!(b.compare(&a), Ordering::Greater);
        assert_eq!(a.compare(&a), Ordering::Equal);
        // any infinite number beats any finite one
        let big = num(&[(1, 1e-300)]);
        assert_eq!(big.compare(&num(&[(0, 1e300)])), Ordering::Greater);
    }

    #[test]
    fn seed_has_floor_at_minus_order() {
        let s = GrossNumber::seed(3.0, 4).unwrap();
        assert_eq!(digits(&s), vec![(0, 3.0), (-1, 1.0)]);
        assert_eq!(s.floor(), Some(p(-4)));
        // order 0 keeps only the finite part
        assert_eq!(digits(&GrossNumber::seed(3.0, 0).unwrap()), vec![(0, 3.0)]);
    }

    #[test]
    fn rational_powers_align_exactly() {
        let a = GrossNumber::normalize(
            [
                (GrossPower::new(-47, 10).unwrap(), 2.0),
                (GrossPower::new(71, 5).unwrap(), 1.0),
            ],
            None,
        )
        .unwrap();
        let b = GrossNumber::normalize([(GrossPower::new(-94, 20).unwrap(), 3.0)], None).unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!(s.terms().len(), 2);
        assert_eq!(s.coefficient(GrossPower::new(-47, 10).unwrap()), 5.0);
    }

    #[test]
    fn values_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<GrossNumber>();
        check::<GrossPower>();
        check::<EvalConfig>();
    }
}
