//! Exact-arithmetic semirings and the l-monoid operations used by the
//! rewriting procedures.
//!
//! Five instances are provided:
//!
//! | type            | carrier              | `+`   | `·`   | order `⊑` |
//! |-----------------|----------------------|-------|-------|-----------|
//! | [`Boolean`]     | {0, 1}               | or    | and   | ≤         |
//! | [`TropicalNat`] | ℕ₀ ∪ {∞}             | min   | +     | ≥         |
//! | [`TropicalReal`]| ℚ≥0 ∪ {∞}            | min   | +     | ≥         |
//! | [`MaxTimes`]    | ℚ ∩ [0, 1]           | max   | ·     | ≤         |
//! | [`Rational`]    | ℚ                    | +     | ·     | none      |
//!
//! The first four are integral l-monoids (`⊤ = 1`) and implement
//! [`LMonoid`]; the rational field does not carry a lattice order and only
//! implements [`Semiring`]. Operand mixing is ruled out by the type system.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Runtime tag of a semiring, used by file formats and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemiringId {
    Boolean,
    TropicalNat,
    TropicalReal,
    MaxTimes,
    RationalField,
}

impl SemiringId {
    pub const ALL: [SemiringId; 5] = [
        SemiringId::Boolean,
        SemiringId::TropicalNat,
        SemiringId::TropicalReal,
        SemiringId::MaxTimes,
        SemiringId::RationalField,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemiringId::Boolean => "boolean",
            SemiringId::TropicalNat => "tropical-nat",
            SemiringId::TropicalReal => "tropical-real",
            SemiringId::MaxTimes => "maxtimes",
            SemiringId::RationalField => "rational-field",
        }
    }

    pub fn is_lmonoid(self) -> bool {
        !self.is_ring()
    }

    pub fn is_ring(self) -> bool {
        self == SemiringId::RationalField
    }
}

impl fmt::Display for SemiringId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemiringId {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        SemiringId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or(())
    }
}

/// A commutative semiring with exact, structurally comparable values.
pub trait Semiring: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const ID: SemiringId;

    fn zero() -> Self;
    fn one() -> Self;
    /// The semiring addition. For l-monoids this is the lattice join.
    fn combine(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    /// Parses the textual scalar syntax shared by all file formats.
    fn parse_scalar(token: &str) -> Result<Self>;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

/// An integral l-monoid: a semiring whose addition is the join of a
/// lattice order, with residuation as right adjoint of multiplication.
pub trait LMonoid: Semiring {
    /// The lattice order `⊑`.
    fn leq(&self, other: &Self) -> bool;
    fn meet(&self, other: &Self) -> Self;
    /// `self → other`, the greatest `ℓ` with `self · ℓ ⊑ other`.
    fn residuum(&self, other: &Self) -> Self;

    /// The top element; equal to `one()` for integral l-monoids.
    fn top() -> Self {
        Self::one()
    }
}

fn malformed<S: Semiring>(token: &str) -> Error {
    Error::MalformedScalar {
        token: token.to_string(),
        semiring: S::ID,
    }
}

/// Parses `p`, `-p`, `p/q` or a decimal with at most six fractional digits.
pub(crate) fn parse_rational(token: &str) -> Option<BigRational> {
    let (neg, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token.strip_prefix('+').unwrap_or(token)),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let value = if let Some((p, q)) = body.split_once('/') {
        if !digits(p) || !digits(q) {
            return None;
        }
        let q: BigInt = q.parse().ok()?;
        if q.is_zero() {
            return None;
        }
        BigRational::new(p.parse().ok()?, q)
    } else if let Some((int, frac)) = body.split_once('.') {
        if !digits(int) || !digits(frac) || frac.len() > 6 {
            return None;
        }
        let num: BigInt = format!("{int}{frac}").parse().ok()?;
        BigRational::new(num, BigInt::from(10u32).pow(frac.len() as u32))
    } else {
        if !digits(body) {
            return None;
        }
        BigRational::from_integer(body.parse().ok()?)
    };
    Some(if neg { -value } else { value })
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

// ---------------------------------------------------------------------------
// Boolean

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Boolean(pub bool);

impl fmt::Display for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Semiring for Boolean {
    const ID: SemiringId = SemiringId::Boolean;

    fn zero() -> Self {
        Boolean(false)
    }
    fn one() -> Self {
        Boolean(true)
    }
    fn combine(&self, other: &Self) -> Self {
        Boolean(self.0 | other.0)
    }
    fn times(&self, other: &Self) -> Self {
        Boolean(self.0 & other.0)
    }
    fn parse_scalar(token: &str) -> Result<Self> {
        match token {
            "0" => Ok(Boolean(false)),
            "1" => Ok(Boolean(true)),
            _ => Err(malformed::<Self>(token)),
        }
    }
}

impl LMonoid for Boolean {
    fn leq(&self, other: &Self) -> bool {
        self.0 <= other.0
    }
    fn meet(&self, other: &Self) -> Self {
        Boolean(self.0 & other.0)
    }
    fn residuum(&self, other: &Self) -> Self {
        Boolean(!self.0 | other.0)
    }
}

// ---------------------------------------------------------------------------
// Tropical semiring over the naturals

/// `(ℕ₀ ∪ {∞}, min, +, ∞, 0)`. The derived `Ord` is the numeric order
/// (finite values below `Infinity`); the lattice order is its reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TropicalNat {
    Finite(u64),
    Infinity,
}

impl TropicalNat {
    pub const INF: TropicalNat = TropicalNat::Infinity;

    pub fn fin(value: u64) -> Self {
        TropicalNat::Finite(value)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            TropicalNat::Finite(v) => Some(v),
            TropicalNat::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == TropicalNat::Infinity
    }
}

impl fmt::Display for TropicalNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalNat::Finite(v) => write!(f, "{v}"),
            TropicalNat::Infinity => f.write_str("inf"),
        }
    }
}

impl Semiring for TropicalNat {
    const ID: SemiringId = SemiringId::TropicalNat;

    fn zero() -> Self {
        TropicalNat::Infinity
    }
    fn one() -> Self {
        TropicalNat::Finite(0)
    }
    fn combine(&self, other: &Self) -> Self {
        *self.min(other)
    }
    fn times(&self, other: &Self) -> Self {
        match (self, other) {
            (TropicalNat::Finite(a), TropicalNat::Finite(b)) => {
                TropicalNat::Finite(a.checked_add(*b).expect("tropical weight overflow"))
            }
            _ => TropicalNat::Infinity,
        }
    }
    fn parse_scalar(token: &str) -> Result<Self> {
        if token == "inf" {
            return Ok(TropicalNat::Infinity);
        }
        if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed::<Self>(token));
        }
        token
            .parse()
            .map(TropicalNat::Finite)
            .map_err(|_| malformed::<Self>(token))
    }
}

impl LMonoid for TropicalNat {
    fn leq(&self, other: &Self) -> bool {
        self >= other
    }
    fn meet(&self, other: &Self) -> Self {
        *self.max(other)
    }
    fn residuum(&self, other: &Self) -> Self {
        match (self, other) {
            // every ℓ satisfies ∞ + ℓ ⊑ b, so the supremum is ⊤ = 0
            (TropicalNat::Infinity, _) => TropicalNat::Finite(0),
            (TropicalNat::Finite(_), TropicalNat::Infinity) => TropicalNat::Infinity,
            (TropicalNat::Finite(a), TropicalNat::Finite(b)) => {
                TropicalNat::Finite(b.saturating_sub(*a))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Tropical semiring over the nonnegative rationals

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TropicalReal {
    Finite(BigRational),
    Infinity,
}

impl TropicalReal {
    /// Returns `None` for negative values.
    pub fn new(value: BigRational) -> Option<Self> {
        (!value.is_negative()).then_some(TropicalReal::Finite(value))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::new(BigRational::new(numer.into(), denom.into())).expect("negative tropical weight")
    }
}

impl fmt::Display for TropicalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalReal::Finite(v) => fmt_rational(v, f),
            TropicalReal::Infinity => f.write_str("inf"),
        }
    }
}

impl Semiring for TropicalReal {
    const ID: SemiringId = SemiringId::TropicalReal;

    fn zero() -> Self {
        TropicalReal::Infinity
    }
    fn one() -> Self {
        TropicalReal::Finite(BigRational::zero())
    }
    fn combine(&self, other: &Self) -> Self {
        self.min(other).clone()
    }
    fn times(&self, other: &Self) -> Self {
        match (self, other) {
            (TropicalReal::Finite(a), TropicalReal::Finite(b)) => TropicalReal::Finite(a + b),
            _ => TropicalReal::Infinity,
        }
    }
    fn parse_scalar(token: &str) -> Result<Self> {
        if token == "inf" {
            return Ok(TropicalReal::Infinity);
        }
        parse_rational(token)
            .and_then(TropicalReal::new)
            .ok_or_else(|| malformed::<Self>(token))
    }
}

impl LMonoid for TropicalReal {
    fn leq(&self, other: &Self) -> bool {
        self >= other
    }
    fn meet(&self, other: &Self) -> Self {
        self.max(other).clone()
    }
    fn residuum(&self, other: &Self) -> Self {
        match (self, other) {
            (TropicalReal::Infinity, _) => Self::one(),
            (TropicalReal::Finite(_), TropicalReal::Infinity) => TropicalReal::Infinity,
            (TropicalReal::Finite(a), TropicalReal::Finite(b)) => {
                if b <= a {
                    Self::one()
                } else {
                    TropicalReal::Finite(b - a)
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Max-times (Viterbi) semiring on [0, 1]

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaxTimes(BigRational);

impl MaxTimes {
    /// Returns `None` outside `[0, 1]`.
    pub fn new(value: BigRational) -> Option<Self> {
        (!value.is_negative() && value <= BigRational::one()).then_some(MaxTimes(value))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::new(BigRational::new(numer.into(), denom.into())).expect("value outside [0, 1]")
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for MaxTimes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.0, f)
    }
}

impl Semiring for MaxTimes {
    const ID: SemiringId = SemiringId::MaxTimes;

    fn zero() -> Self {
        MaxTimes(BigRational::zero())
    }
    fn one() -> Self {
        MaxTimes(BigRational::one())
    }
    fn combine(&self, other: &Self) -> Self {
        self.max(other).clone()
    }
    fn times(&self, other: &Self) -> Self {
        MaxTimes(&self.0 * &other.0)
    }
    fn parse_scalar(token: &str) -> Result<Self> {
        parse_rational(token)
            .and_then(MaxTimes::new)
            .ok_or_else(|| malformed::<Self>(token))
    }
}

impl LMonoid for MaxTimes {
    fn leq(&self, other: &Self) -> bool {
        self <= other
    }
    fn meet(&self, other: &Self) -> Self {
        self.min(other).clone()
    }
    fn residuum(&self, other: &Self) -> Self {
        if self.0.is_zero() || other.0 >= self.0 {
            return Self::one();
        }
        MaxTimes(&other.0 / &self.0)
    }
}

// ---------------------------------------------------------------------------
// The rational field

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn int(value: i64) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.0, f)
    }
}

impl Semiring for Rational {
    const ID: SemiringId = SemiringId::RationalField;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn combine(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }
    fn times(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }
    fn parse_scalar(token: &str) -> Result<Self> {
        parse_rational(token)
            .map(Rational)
            .ok_or_else(|| malformed::<Self>(token))
    }
}
