//! Exact integer Laurent polynomials in two variables.
//!
//! A term `c * s^j * t^i` is stored under the key `(i, j)`: `t` carries the
//! Alexander grading `i` and `s` the Maslov grading `j`. Knot Floer
//! polynomials, their canonical forms and all factorization intermediates
//! live here.
//!
//! The symmetry involution is `s -> s, t -> s^-2 t^-1`, which on keys is
//! `(i, j) -> (-i, j - 2i)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent key `(i, j)` of the monomial `s^j t^i`.
pub type Exponent = (i64, i64);

/// An integer-coefficient Laurent polynomial in `s` and `t`.
///
/// No stored coefficient is ever zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariateLaurent {
    terms: BTreeMap<Exponent, BigInt>,
}

impl BivariateLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * s^j * t^i`.
    pub fn monomial(c: impl Into<BigInt>, i: i64, j: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `((i, j), c)` pairs; repeated keys are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (key, c) in terms {
            out.add_term(key, c.into());
        }
        out
    }

    fn add_term(&mut self, key: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in increasing `(i, j)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponent, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// Returns the unit this polynomial equals, if it is `± s^a t^b`.
    pub fn as_unit(&self) -> Option<MonomialUnit> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(i, j), c) = self.terms.iter().next()?;
        if c.is_one() {
            Some(MonomialUnit::new(1, i, j))
        } else if (-c).is_one() {
            Some(MonomialUnit::new(-1, i, j))
        } else {
            None
        }
    }

    /// Greatest term in `(i, j)` lexicographic order.
    pub fn leading_term(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    /// `(min i, max i)` over the support.
    pub fn i_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?.0;
        let hi = self.terms.keys().next_back()?.0;
        Some((lo, hi))
    }

    /// `(min j, max j)` over the support.
    pub fn j_range(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|k| k.1);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), j| (lo.min(j), hi.max(j))))
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Multiplies by `s^dj t^di`.
    pub fn shift(&self, di: i64, dj: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The involution `t -> s^-2 t^-1`, applied as the index map
    /// `(i, j) -> (-i, j - 2i)`.
    pub fn sigma(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((-i, j - 2 * i), c.clone()))
                .collect(),
        }
    }

    /// True iff `c(i, j) = c(-i, j - 2i)` for every term.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(i, j), c)| self.terms.get(&(-i, j - 2 * i)) == Some(c))
    }

    /// Splits `self = unit * canonical`.
    pub fn canonicalize(&self) -> Result<(CanonicalForm, MonomialUnit)> {
        let (i_min, _) = self.i_range().ok_or(Error::ZeroPolynomial)?;
        let (j_min, _) = self.j_range().ok_or(Error::ZeroPolynomial)?;
        let mut poly = self.shift(-i_min, -j_min);
        let sign = if poly.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            poly = -poly;
            -1
        } else {
            1
        };
        Ok((CanonicalForm(poly), MonomialUnit::new(sign, i_min, j_min)))
    }

    /// Substitutes `s = -1`.
    pub fn specialize_alexander(&self) -> UnivariateLaurent {
        UnivariateLaurent::from_terms(self.terms.iter().map(|(&(i, j), c)| {
            let c = if j.rem_euclid(2) == 1 { -c } else { c.clone() };
            (i, c)
        }))
    }

    /// Value at `s = t = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient `self / divisor` in the Laurent ring, if it exists.
    ///
    /// The quotient support is confined to the box spanned by the differences
    /// of the exponent ranges, which bounds the search.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (ai, bi) = (self.i_range()?, divisor.i_range()?);
        let (aj, bj) = (self.j_range()?, divisor.j_range()?);
        let i_box = (ai.0 - bi.0, ai.1 - bi.1);
        let j_box = (aj.0 - bj.0, aj.1 - bj.1);
        if i_box.0 > i_box.1 || j_box.0 > j_box.1 {
            return None;
        }
        let ((di, dj), dc) = divisor.leading_term()?;
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(((ri, rj), rc)) = rem.leading_term() {
            let (qi, qj) = (ri - di, rj - dj);
            if qi < i_box.0 || qi > i_box.1 || qj < j_box.0 || qj > j_box.1 {
                return None;
            }
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            for (&(i, j), c) in &divisor.terms {
                rem.add_term((i + qi, j + qj), -(c * &qc));
            }
            quotient.add_term((qi, qj), qc);
        }
        Some(quotient)
    }
}

impl Add for &BivariateLaurent {
    type Output = BivariateLaurent;

    fn add(self, rhs: &BivariateLaurent) -> BivariateLaurent {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &BivariateLaurent {
    type Output = BivariateLaurent;

    fn sub(self, rhs: &BivariateLaurent) -> BivariateLaurent {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &BivariateLaurent {
    type Output = BivariateLaurent;

    /// Convolution `d(m, n) = sum over x+y=m, z+w=n of c1(x, z) c2(y, w)`.
    fn mul(self, rhs: &BivariateLaurent) -> BivariateLaurent {
        let mut out = BivariateLaurent::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariateLaurent {
    type Output = BivariateLaurent;

    fn neg(self) -> BivariateLaurent {
        BivariateLaurent {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BivariateLaurent {
            type Output = BivariateLaurent;
            fn $m(self, rhs: BivariateLaurent) -> BivariateLaurent {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BivariateLaurent {
    type Output = BivariateLaurent;
    fn neg(self) -> BivariateLaurent {
        -&self
    }
}

/// The Laurent-ring unit `sign * s^j_shift * t^i_shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialUnit {
    pub sign: i8,
    pub i_shift: i64,
    pub j_shift: i64,
}

impl MonomialUnit {
    pub fn new(sign: i8, i_shift: i64, j_shift: i64) -> Self {
        assert!(sign == 1 || sign == -1, "unit sign must be +1 or -1");
        Self {
            sign,
            i_shift,
            j_shift,
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0)
    }

    pub fn to_polynomial(&self) -> BivariateLaurent {
        BivariateLaurent::monomial(self.sign, self.i_shift, self.j_shift)
    }

    pub fn apply(&self, p: &BivariateLaurent) -> BivariateLaurent {
        let shifted = p.shift(self.i_shift, self.j_shift);
        if self.sign < 0 {
            -shifted
        } else {
            shifted
        }
    }

    pub fn compose(&self, other: &MonomialUnit) -> MonomialUnit {
        MonomialUnit::new(
            self.sign * other.sign,
            self.i_shift + other.i_shift,
            self.j_shift + other.j_shift,
        )
    }
}

impl fmt::Display for MonomialUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// A polynomial normalized modulo units: minimum `i` and `j` exponents are
/// zero and the `(i, j)`-greatest coefficient is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm(BivariateLaurent);

impl CanonicalForm {
    /// Wraps `p` if it is already canonical.
    pub fn from_canonical(p: BivariateLaurent) -> Result<Self> {
        let (c, unit) = p.canonicalize()?;
        if unit != MonomialUnit::identity() {
            return Err(Error::InvalidInput(format!(
                "`{p}` is not in canonical form"
            )));
        }
        Ok(c)
    }

    pub fn poly(&self) -> &BivariateLaurent {
        &self.0
    }

    pub fn into_poly(self) -> BivariateLaurent {
        self.0
    }

    /// `(max i, max j)`; both minima are zero.
    pub fn bidegree(&self) -> (i64, i64) {
        let i = self.0.i_range().map_or(0, |r| r.1);
        let j = self.0.j_range().map_or(0, |r| r.1);
        (i, j)
    }

    /// The unique `beta` with `t^beta * self` symmetric, if any.
    ///
    /// Symmetry is unaffected by powers of `s`, so no `s`-shift is involved.
    pub fn symmetric_placement(&self) -> Option<i64> {
        let (i_min, i_max) = self.0.i_range()?;
        let span = i_min + i_max;
        if span % 2 != 0 {
            return None;
        }
        let beta = -span / 2;
        self.0.shift(beta, 0).is_symmetric().then_some(beta)
    }

    /// Deterministic ordering key: bidegree, then coefficients.
    pub(crate) fn sort_key(&self) -> (i64, i64, Vec<(Exponent, BigInt)>) {
        let (i, j) = self.bidegree();
        (
            i + j,
            i,
            self.0.terms().map(|(k, c)| (k, c.clone())).collect(),
        )
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn render_power(var: char, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

impl fmt::Display for BivariateLaurent {
    /// Terms by `(i desc, j desc)` as `c*s^j*t^i`, e.g. `t + s^-1 + s^-2*t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (n, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let vars: Vec<String> = [render_power('s', j), render_power('t', i)]
                .into_iter()
                .flatten()
                .collect();
            let abs = c.abs();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for BivariateLaurent {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        Parser::new(input).parse()
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            input,
            chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn error(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: reason.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse(mut self) -> Result<BivariateLaurent> {
        if self.chars.is_empty() {
            return Err(self.error("empty input"));
        }
        let mut out = BivariateLaurent::zero();
        let mut first = true;
        while self.pos < self.chars.len() {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                return Err(self.error(format!("expected `+` or `-` at offset {}", self.pos)));
            };
            first = false;
            let (key, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(key, c);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Exponent, BigInt)> {
        let mut coeff = BigInt::one();
        let (mut i, mut j) = (0i64, 0i64);
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.unsigned()?,
                Some('s') => {
                    self.pos += 1;
                    j += self.exponent()?;
                }
                Some('t') => {
                    self.pos += 1;
                    i += self.exponent()?;
                }
                Some(other) => return Err(self.error(format!("unexpected `{other}`"))),
                None => return Err(self.error("dangling sign")),
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok(((i, j), coeff))
    }

    fn unsigned(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| self.error(format!("bad integer `{digits}`")))
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.eat('^') {
            return Ok(1);
        }
        let paren = self.eat('(');
        let negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        let magnitude = self.unsigned()?;
        if paren && !self.eat(')') {
            return Err(self.error("unclosed `(` in exponent"));
        }
        let e: i64 = i64::try_from(&magnitude).map_err(|_| self.error("exponent out of range"))?;
        Ok(if negative { -e } else { e })
    }
}

/// Integer Laurent polynomial in `t` alone, e.g. an Alexander polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnivariateLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl UnivariateLaurent {
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }
}

impl fmt::Display for UnivariateLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let as_bivariate =
            BivariateLaurent::from_terms(self.terms.iter().map(|(&e, c)| ((e, 0), c.clone())));
        as_bivariate.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BivariateLaurent {
        s.parse().unwrap()
    }

    const T23: &str = "t + s^-1 + s^-2*t^-1";
    const MT23: &str = "s^2*t + s + t^-1";
    const FIG8: &str = "s*t + 3 + s^-1*t^-1";

    #[test]
    fn add_examples() {
        assert!((&p("s*t") + &p("-s*t")).is_zero());
        assert_eq!(&p("1") + &p("1"), p("2"));
        assert_eq!(&p("t + s^-1") + &p("s^-2*t^-1"), p(T23));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(T23) * &BivariateLaurent::one(), p(T23));
        assert_eq!(
            &p(FIG8) * &p(FIG8),
            p("s^2*t^2 + 6*s*t + 11 + 6*s^-1*t^-1 + s^-2*t^-2")
        );
        assert_eq!(
            &p(T23) * &p(MT23),
            p("s^2*t^2 + 2*s*t + 3 + 2*s^-1*t^-1 + s^-2*t^-2")
        );
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(p("s*t").sigma(), p("s^-1*t^-1"));
        assert_eq!(p(T23).sigma(), p(T23));
        let q = p("s^3*t^2 + 5");
        assert_eq!(q.sigma().sigma(), q);
    }

    #[test]
    fn symmetry_examples() {
        assert!(p(FIG8).is_symmetric());
        assert!(!p("s*t").is_symmetric());
        assert!(p("s^5").is_symmetric());
        assert!(p(MT23).is_symmetric());
    }

    #[test]
    fn canonicalize_examples() {
        let (c, u) = p(T23).canonicalize().unwrap();
        assert_eq!(c.poly(), &p("s^2*t^2 + s*t + 1"));
        assert_eq!(u, MonomialUnit::new(1, -1, -2));

        let (c, u) = p(MT23).canonicalize().unwrap();
        assert_eq!(c.poly(), &p("s^2*t^2 + s*t + 1"));
        assert_eq!(u, MonomialUnit::new(1, -1, 0));

        let (c, u) = p("-3").canonicalize().unwrap();
        assert_eq!(c.poly(), &p("3"));
        assert_eq!(u, MonomialUnit::new(-1, 0, 0));

        assert!(matches!(
            BivariateLaurent::zero().canonicalize(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let (c, _) = p("-2*s^3*t^-1 + s*t^4 - 7").canonicalize().unwrap();
        let (again, unit) = c.poly().canonicalize().unwrap();
        assert_eq!(again, c);
        assert_eq!(unit, MonomialUnit::identity());
    }

    #[test]
    fn placement_examples() {
        let c = |s: &str| CanonicalForm::from_canonical(p(s)).unwrap();
        assert_eq!(c("s^2*t^2 + s*t + 1").symmetric_placement(), Some(-1));
        assert_eq!(c("s*t + 1").symmetric_placement(), None);
        assert_eq!(c("s^2*t^2 + 3*s*t + 1").symmetric_placement(), Some(-1));
        assert_eq!(
            p("s^2*t^2 + s*t + 1").shift(-1, 0),
            p(MT23),
            "t^-1 placement is the -T(2,3) entry"
        );
    }

    #[test]
    fn specialize_examples() {
        let alex = p(T23).specialize_alexander();
        assert_eq!(
            alex,
            UnivariateLaurent::from_terms([(1, 1), (0, -1), (-1, 1)])
        );
        let alex = p(FIG8).specialize_alexander();
        assert_eq!(
            alex,
            UnivariateLaurent::from_terms([(1, -1), (0, 3), (-1, -1)])
        );
        assert_eq!(alex.to_string(), "-t + 3 - t^-1");
        assert_eq!(
            BivariateLaurent::one()
                .specialize_alexander()
                .value_at_one(),
            BigInt::one()
        );
    }

    #[test]
    fn render_format() {
        assert_eq!(p(T23).to_string(), T23);
        assert_eq!(p(FIG8).to_string(), "s*t + 3 + s^-1*t^-1");
        assert_eq!(p("-6*s*t^2 - 1").to_string(), "-6*s*t^2 - 1");
        assert_eq!(BivariateLaurent::zero().to_string(), "0");
        assert_eq!(p("t^(-2) * s^+3").to_string(), "s^3*t^-2");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<BivariateLaurent>().is_err());
        assert!("s + ".parse::<BivariateLaurent>().is_err());
        assert!("x^2".parse::<BivariateLaurent>().is_err());
        assert!("s t".parse::<BivariateLaurent>().is_err());
    }

    #[test]
    fn exact_division() {
        let a = p(T23);
        let b = p(FIG8);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(p("s*t + 2").div_exact(&p("s*t + 1")), None);
        assert_eq!(p("2*s + 2").div_exact(&p("2")), Some(p("s + 1")));
        assert_eq!(p("s + 1").div_exact(&p("2")), None);
    }

    #[test]
    fn units() {
        assert_eq!(p("-s^2*t^-1").as_unit(), Some(MonomialUnit::new(-1, -1, 2)));
        assert_eq!(p("2*s").as_unit(), None);
        let u = MonomialUnit::new(-1, 2, -3);
        assert_eq!(u.apply(&p(T23)), &u.to_polynomial() * &p(T23));
    }
}
