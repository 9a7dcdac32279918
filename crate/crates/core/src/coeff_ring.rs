//! Laurent polynomials in `q` (or `q1`, `q2`) with a sign variable `pi`, `pi^2 = 1`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Build a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Build the rational `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"a"` or `"a/b"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, CoeffError> {
    let s = s.trim();
    let bad = || CoeffError::Parse(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(CoeffError::ZeroDenominator);
    }
    Ok(Rational::new(n, d))
}

/// Render a rational as `a` or `a/b`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("cannot mix one-variable and two-variable coefficients")]
    ModeMismatch,
    #[error("Laurent exponent overflow")]
    ExponentOverflow,
    #[error("theta_n requires n >= 1")]
    ThetaZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse coefficient: {0}")]
    Parse(String),
}

/// Variable set of a [`Coeff`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// Single grading variable `q`.
    One,
    /// Two grading variables `q1`, `q2`.
    Two,
}

/// Monomial key: exponents of `(q, 0)` or `(q1, q2)` and the `pi` exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub exp: [i32; 2],
    pub pi: bool,
}

impl Mono {
    pub const UNIT: Mono = Mono { exp: [0, 0], pi: false };

    fn is_constant(&self) -> bool {
        self.exp == [0, 0]
    }

    fn mul(self, other: Mono) -> Result<Mono, CoeffError> {
        let a = self.exp[0].checked_add(other.exp[0]).ok_or(CoeffError::ExponentOverflow)?;
        let b = self.exp[1].checked_add(other.exp[1]).ok_or(CoeffError::ExponentOverflow)?;
        Ok(Mono { exp: [a, b], pi: self.pi ^ other.pi })
    }
}

/// Element of `Q[q^{±1}, pi]/(pi^2 - 1)` or its two-variable analogue.
#[derive(Clone)]
pub struct Coeff {
    mode: Mode,
    terms: BTreeMap<Mono, Rational>,
}

impl PartialEq for Coeff {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.mode == other.mode || self.mode_free())
    }
}
impl Eq for Coeff {}

impl core::hash::Hash for Coeff {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coeff({})", self)
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::zero()
    }
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff { mode: Mode::One, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Coeff::scalar(rat(1))
    }

    pub fn scalar(r: Rational) -> Self {
        Coeff::monomial(Mode::One, Mono::UNIT, r)
    }

    pub fn int(n: i64) -> Self {
        Coeff::scalar(rat(n))
    }

    pub fn monomial(mode: Mode, m: Mono, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            let m = if mode == Mode::One { Mono { exp: [m.exp[0], 0], pi: m.pi } } else { m };
            terms.insert(m, c);
        }
        Coeff { mode, terms }
    }

    /// `q^e` in one-variable mode.
    pub fn q_pow(e: i32) -> Self {
        Coeff::monomial(Mode::One, Mono { exp: [e, 0], pi: false }, rat(1))
    }

    /// `q1^a q2^b` in two-variable mode.
    pub fn q12_pow(a: i32, b: i32) -> Self {
        Coeff::monomial(Mode::Two, Mono { exp: [a, b], pi: false }, rat(1))
    }

    /// The sign variable `pi` (one-variable mode).
    pub fn pi() -> Self {
        Coeff::monomial(Mode::One, Mono { exp: [0, 0], pi: true }, rat(1))
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Reinterpret in two-variable mode, `q` becoming `q1`.
    pub fn into_two(mut self) -> Self {
        self.mode = Mode::Two;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Mono) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_constant() && !m.pi)
    }

    /// The constant term if this is a pure rational.
    pub fn as_scalar(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.coefficient(&Mono::UNIT))
        } else {
            None
        }
    }

    /// No grading variable occurs, so the value is valid in either mode.
    fn mode_free(&self) -> bool {
        self.terms.keys().all(|m| m.is_constant())
    }

    fn join_mode(&self, other: &Coeff) -> Result<Mode, CoeffError> {
        if self.mode == other.mode {
            Ok(self.mode)
        } else if self.mode_free() {
            Ok(other.mode)
        } else if other.mode_free() {
            Ok(self.mode)
        } else {
            Err(CoeffError::ModeMismatch)
        }
    }

    fn insert(&mut self, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn try_add(&self, other: &Coeff) -> Result<Coeff, CoeffError> {
        let mode = self.join_mode(other)?;
        let mut out = Coeff { mode, terms: self.terms.clone() };
        for (m, c) in &other.terms {
            out.insert(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Coeff) -> Result<Coeff, CoeffError> {
        let mode = self.join_mode(other)?;
        let mut out = Coeff { mode, terms: BTreeMap::new() };
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert(m1.mul(*m2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, r: &Rational) -> Coeff {
        let mut out = Coeff { mode: self.mode, terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.insert(*m, c * r);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Result<Coeff, CoeffError> {
        let mut acc = Coeff::one();
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Apply `f` to every monomial, accumulating `coefficient * f(m)`.
    pub fn map_monomials<F>(&self, mode: Mode, mut f: F) -> Result<Coeff, CoeffError>
    where
        F: FnMut(Mono) -> Result<Coeff, CoeffError>,
    {
        let mut out = Coeff { mode, terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let img = f(*m)?;
            for (m2, c2) in &img.terms {
                out.insert(*m2, c * c2);
            }
        }
        Ok(out)
    }

    /// Substitute `q1 -> q`, `q2 -> q^k` and `pi -> pi_to` (one of `pi`, `1`, `-1`).
    pub fn specialize_two(&self, k: i32, pi_to: PiValue) -> Result<Coeff, CoeffError> {
        self.map_monomials(Mode::One, |m| {
            let e = m.exp[1]
                .checked_mul(k)
                .and_then(|e| e.checked_add(m.exp[0]))
                .ok_or(CoeffError::ExponentOverflow)?;
            let base = Coeff::q_pow(e);
            Ok(if m.pi { base.try_mul(&pi_to.coeff())? } else { base })
        })
    }

    /// Exact quotient in one-variable mode, if `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Coeff) -> Result<Option<Coeff>, CoeffError> {
        if divisor.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        if self.mode == Mode::Two && !self.mode_free() || divisor.mode == Mode::Two && !divisor.mode_free() {
            return Err(CoeffError::ModeMismatch);
        }
        // Work over Q[pi]/(pi^2-1) = Q x Q by splitting into the pi = 1 and pi = -1 components.
        let mut quotient = Coeff::zero();
        for sign in [1i64, -1] {
            let a = self.pi_component(sign);
            let b = divisor.pi_component(sign);
            let q = match (a.is_empty(), b.is_empty()) {
                (true, _) => BTreeMap::new(),
                (false, true) => return Ok(None),
                (false, false) => match laurent_div(&a, &b) {
                    Some(q) => q,
                    None => return Ok(None),
                },
            };
            // idempotent (1 + sign*pi)/2
            let half = ratio(1, 2);
            let idem = Coeff::scalar(half.clone()).try_add(&Coeff::pi().scale(&(half * rat(sign))))?;
            let mut part = Coeff::zero();
            for (e, c) in q {
                part.insert(Mono { exp: [e, 0], pi: false }, c);
            }
            quotient = quotient.try_add(&part.try_mul(&idem)?)?;
        }
        Ok(Some(quotient))
    }

    fn pi_component(&self, sign: i64) -> BTreeMap<i32, Rational> {
        let mut out: BTreeMap<i32, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let c = if m.pi { c * rat(sign) } else { c.clone() };
            *out.entry(m.exp[0]).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// Target of the `pi` substitution in [`Coeff::specialize_two`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiValue {
    Keep,
    Plus,
    Minus,
}

impl PiValue {
    fn coeff(self) -> Coeff {
        match self {
            PiValue::Keep => Coeff::pi(),
            PiValue::Plus => Coeff::one(),
            PiValue::Minus => Coeff::int(-1),
        }
    }
}

fn laurent_div(a: &BTreeMap<i32, Rational>, b: &BTreeMap<i32, Rational>) -> Option<BTreeMap<i32, Rational>> {
    let (&b_hi, b_lead) = b.iter().next_back()?;
    let (&b_lo, _) = b.iter().next()?;
    let mut rem = a.clone();
    let mut q = BTreeMap::new();
    while let Some((&r_hi, r_lead)) = rem.iter().next_back() {
        let (&r_lo, _) = rem.iter().next().unwrap();
        if r_hi - r_lo < b_hi - b_lo {
            return None;
        }
        let e = r_hi - b_hi;
        let c = r_lead / b_lead;
        for (be, bc) in b {
            let slot = rem.entry(be + e).or_insert_with(Rational::zero);
            *slot -= &c * bc;
            if slot.is_zero() {
                rem.remove(&(be + e));
            }
        }
        q.insert(e, c);
    }
    Some(q)
}

impl Add for Coeff {
    type Output = Coeff;
    /// Panics on mode mismatch; use [`Coeff::try_add`] to handle it.
    fn add(self, rhs: Coeff) -> Coeff {
        self.try_add(&rhs).expect("coefficient mode mismatch")
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        self.try_add(rhs).expect("coefficient mode mismatch")
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        *self = self.try_add(rhs).expect("coefficient mode mismatch");
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.scale(&rat(-1))
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, rhs: Coeff) -> Coeff {
        self + (-rhs)
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        self.try_add(&rhs.scale(&rat(-1))).expect("coefficient mode mismatch")
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    /// Panics on mode mismatch or exponent overflow; use [`Coeff::try_mul`] to handle them.
    fn mul(self, rhs: Coeff) -> Coeff {
        self.try_mul(&rhs).expect("coefficient multiplication failed")
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        self.try_mul(rhs).expect("coefficient multiplication failed")
    }
}

impl From<Rational> for Coeff {
    fn from(r: Rational) -> Self {
        Coeff::scalar(r)
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::int(n)
    }
}

/// `theta_n`: `q -> q^n`, `pi -> -(-pi)^n`.
pub fn theta(n: u32, f: &Coeff) -> Result<Coeff, CoeffError> {
    if n == 0 {
        return Err(CoeffError::ThetaZero);
    }
    let n_i = i32::try_from(n).map_err(|_| CoeffError::ExponentOverflow)?;
    f.map_monomials(f.mode(), |m| {
        let e0 = m.exp[0].checked_mul(n_i).ok_or(CoeffError::ExponentOverflow)?;
        let e1 = m.exp[1].checked_mul(n_i).ok_or(CoeffError::ExponentOverflow)?;
        let base = Coeff::monomial(f.mode(), Mono { exp: [e0, e1], pi: false }, rat(1));
        if !m.pi {
            Ok(base)
        } else if n % 2 == 1 {
            Ok(Coeff::monomial(f.mode(), Mono { exp: [e0, e1], pi: true }, rat(1)))
        } else {
            Ok(-base)
        }
    })
}

/// Evaluate at `q = q1 = q2 = 1`, `pi = -1`.
pub fn eval_1_neg1(f: &Coeff) -> Rational {
    f.terms().fold(Rational::zero(), |acc, (m, c)| if m.pi { acc - c } else { acc + c })
}

/// Quotient of two coefficients, compared by cross-multiplication.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    numerator: Coeff,
    denominator: Coeff,
}

impl RationalFunction {
    pub fn new(numerator: Coeff, denominator: Coeff) -> Result<Self, CoeffError> {
        if denominator.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        numerator.join_mode(&denominator)?;
        Ok(RationalFunction { numerator, denominator })
    }

    pub fn from_coeff(c: Coeff) -> Self {
        RationalFunction { numerator: c, denominator: Coeff::one() }
    }

    pub fn numerator(&self) -> &Coeff {
        &self.numerator
    }

    pub fn denominator(&self) -> &Coeff {
        &self.denominator
    }

    pub fn mul(&self, other: &RationalFunction) -> Result<RationalFunction, CoeffError> {
        RationalFunction::new(
            self.numerator.try_mul(&other.numerator)?,
            self.denominator.try_mul(&other.denominator)?,
        )
    }

    pub fn add(&self, other: &RationalFunction) -> Result<RationalFunction, CoeffError> {
        let n = self
            .numerator
            .try_mul(&other.denominator)?
            .try_add(&other.numerator.try_mul(&self.denominator)?)?;
        RationalFunction::new(n, self.denominator.try_mul(&other.denominator)?)
    }

    pub fn scale(&self, r: &Rational) -> RationalFunction {
        RationalFunction { numerator: self.numerator.scale(r), denominator: self.denominator.clone() }
    }

    /// Apply a ring map to numerator and denominator.
    pub fn map<F>(&self, mut f: F) -> Result<RationalFunction, CoeffError>
    where
        F: FnMut(&Coeff) -> Result<Coeff, CoeffError>,
    {
        RationalFunction::new(f(&self.numerator)?, f(&self.denominator)?)
    }

    /// The polynomial value, if the denominator divides the numerator.
    pub fn as_polynomial(&self) -> Result<Option<Coeff>, CoeffError> {
        self.numerator.div_exact(&self.denominator)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// `a == b` as rational functions.
pub fn rf_equal(a: &RationalFunction, b: &RationalFunction) -> Result<bool, CoeffError> {
    if a.denominator.is_zero() || b.denominator.is_zero() {
        return Err(CoeffError::ZeroDenominator);
    }
    let lhs = a.numerator.try_mul(&b.denominator)?;
    let rhs = b.numerator.try_mul(&a.denominator)?;
    Ok(lhs.try_add(&rhs.scale(&rat(-1)))?.is_zero())
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if m.pi {
                factors.push("pi".into());
            }
            let names: &[&str] = match self.mode {
                Mode::One => &["q"],
                Mode::Two => &["q1", "q2"],
            };
            for (i, name) in names.iter().enumerate() {
                match m.exp[i] {
                    0 => {}
                    1 => factors.push((*name).into()),
                    e => {
                        let mut s = String::from(*name);
                        s.push('^');
                        s.push_str(&e.to_string());
                        factors.push(s);
                    }
                }
            }
            let one = abs.is_one();
            if factors.is_empty() {
                f.write_str(&fmt_rational(&abs))?;
            } else {
                if !one {
                    f.write_str(&fmt_rational(&abs))?;
                    f.write_str("*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl core::str::FromStr for Coeff {
    type Err = CoeffError;

    /// Parse the rendering produced by `Display`, e.g. `"1 - 2*pi*q + q^2"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoeffError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // split into signed terms
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            let is_sign = (ch == '+' || ch == '-') && !matches!(prev, Some('^') | Some('/'));
            if is_sign {
                if !cur.is_empty() {
                    pieces.push((neg, core::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(bad());
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad());
        }
        pieces.push((neg, cur));

        let mut mode = Mode::One;
        let mut parsed: Vec<(Mono, Rational)> = Vec::new();
        for (neg, piece) in pieces {
            let mut mono = Mono::UNIT;
            let mut c = rat(1);
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(bad());
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<i32>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                match base {
                    "pi" => {
                        if exp.rem_euclid(2) == 1 {
                            mono.pi ^= true;
                        }
                    }
                    "q" => mono.exp[0] = mono.exp[0].checked_add(exp).ok_or(CoeffError::ExponentOverflow)?,
                    "q1" => {
                        mode = Mode::Two;
                        mono.exp[0] = mono.exp[0].checked_add(exp).ok_or(CoeffError::ExponentOverflow)?;
                    }
                    "q2" => {
                        mode = Mode::Two;
                        mono.exp[1] = mono.exp[1].checked_add(exp).ok_or(CoeffError::ExponentOverflow)?;
                    }
                    num => {
                        if factor.contains('^') {
                            return Err(bad());
                        }
                        c *= parse_rational(num)?;
                    }
                }
            }
            if neg {
                c = -c;
            }
            parsed.push((mono, c));
        }
        if mode == Mode::One && s.contains('q') && parsed.iter().any(|(m, _)| m.exp[1] != 0) {
            return Err(bad());
        }
        let mut out = Coeff { mode, terms: BTreeMap::new() };
        for (m, c) in parsed {
            out.insert(m, c);
        }
        Ok(out)
    }
}
