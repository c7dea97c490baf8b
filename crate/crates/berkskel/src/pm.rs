//! Piecewise-monomial functions of radii, in logarithmic coordinates.
//!
//! A pm function of radii `r ∈ (0, 1]` becomes, after `ℓ = -log r`, a
//! continuous piecewise-affine function on `[0, ∞)` with rational slopes and
//! finitely many breakpoints. [`PMFunction`] stores exactly that: an initial
//! value at `ℓ = 0`, a strictly increasing list of finite breakpoints, and
//! one slope per piece, the last piece extending to infinity. Constructors
//! canonicalize eagerly (adjacent pieces with equal slopes are merged), so
//! two values are equal as functions if and only if they are structurally
//! equal.
//!
//! [`ProfileFunction`] is the subgroup of interest: strictly increasing pm
//! bijections of `[0, ∞]` fixing `0`. Profiles of finite morphisms along
//! generic intervals additionally have non-increasing power-of-`p` slopes
//! with terminal slope 1; that grade is checked by
//! [`ProfileFunction::check_morphism_grade`] rather than baked into the type,
//! because the group inverse of a profile has reciprocal slopes.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::logval::{format_rational, LogValue, Rational};

/// Which one-sided germ of a function to inspect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PmError {
    #[error("expected one slope per piece: {breaks} breakpoints need {} slopes, got {slopes}", breaks + 1)]
    SlopeCountMismatch { breaks: usize, slopes: usize },
    #[error("breakpoints must be strictly increasing and positive")]
    BreaksNotIncreasing,
    #[error("initial value must be nonnegative, got {0}")]
    NegativeInitial(String),
    #[error("function takes the negative value {value} at {at}")]
    NegativeValue { at: String, value: String },
    #[error("operation requires a strictly increasing function")]
    NotMonotone,
    #[error("one-sided slope undefined: {0}")]
    UndefinedSlope(&'static str),
    #[error("argument {0} is outside the domain [0, inf]")]
    OutOfDomain(String),
    #[error("character requires terminal slope 1, got {0}")]
    TerminalSlopeNotOne(String),
    #[error("not a profile function: {0}")]
    NotAProfile(String),
    #[error("slope {slope} is not a power of {p}")]
    SlopeNotPPower { slope: String, p: u64 },
    #[error("profile slopes must be non-increasing outward (piece {at})")]
    SlopesIncrease { at: usize },
}

/// Continuous piecewise-affine function on `[0, ∞)` with exact rational
/// slopes, in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PMFunction {
    initial: Rational,
    breaks: Vec<Rational>,
    slopes: Vec<Rational>,
}

impl PMFunction {
    /// Builds and canonicalizes. `slopes[i]` applies on the piece starting at
    /// `breaks[i-1]` (the first piece starts at 0, the last extends to
    /// infinity). Slopes of any sign are accepted; operations that need
    /// monotonicity check it themselves.
    pub fn new(
        initial: Rational,
        breaks: Vec<Rational>,
        slopes: Vec<Rational>,
    ) -> Result<Self, PmError> {
        if slopes.len() != breaks.len() + 1 {
            return Err(PmError::SlopeCountMismatch {
                breaks: breaks.len(),
                slopes: slopes.len(),
            });
        }
        if initial.is_negative() {
            return Err(PmError::NegativeInitial(format_rational(&initial)));
        }
        let increasing = breaks.windows(2).all(|w| w[0] < w[1]);
        if !increasing || breaks.first().is_some_and(|b| !b.is_positive()) {
            return Err(PmError::BreaksNotIncreasing);
        }
        let mut out = PMFunction {
            initial,
            breaks,
            slopes,
        };
        out.merge_collinear();
        Ok(out)
    }

    /// The identity `ℓ ↦ ℓ`.
    pub fn identity() -> Self {
        PMFunction {
            initial: Rational::zero(),
            breaks: Vec::new(),
            slopes: vec![Rational::one()],
        }
    }

    /// The constant function `ℓ ↦ value` (slope 0 everywhere).
    pub fn constant(value: Rational) -> Result<Self, PmError> {
        PMFunction::new(value, Vec::new(), vec![Rational::zero()])
    }

    fn merge_collinear(&mut self) {
        let mut breaks = Vec::with_capacity(self.breaks.len());
        let mut slopes = vec![self.slopes[0].clone()];
        for (b, s) in self.breaks.iter().zip(self.slopes.iter().skip(1)) {
            if s == slopes.last().unwrap() {
                continue;
            }
            breaks.push(b.clone());
            slopes.push(s.clone());
        }
        self.breaks = breaks;
        self.slopes = slopes;
    }

    pub fn initial(&self) -> &Rational {
        &self.initial
    }

    pub fn breaks(&self) -> &[Rational] {
        &self.breaks
    }

    pub fn slopes(&self) -> &[Rational] {
        &self.slopes
    }

    pub fn terminal_slope(&self) -> &Rational {
        self.slopes.last().expect("at least one piece")
    }

    pub fn first_slope(&self) -> &Rational {
        &self.slopes[0]
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.slopes.iter().all(|s| s.is_positive())
    }

    /// Index of the piece whose half-open interval `[start, next)` contains `x`.
    fn piece_right_of(&self, x: &Rational) -> usize {
        self.breaks.partition_point(|b| b <= x)
    }

    /// Raw affine value, defined for any `x ≥ 0`; may be negative.
    fn value_at(&self, x: &Rational) -> Rational {
        let mut value = self.initial.clone();
        let mut start = Rational::zero();
        for (b, s) in self.breaks.iter().zip(self.slopes.iter()) {
            if b > x {
                break;
            }
            value += s * (b - &start);
            start = b.clone();
        }
        let last = self.piece_right_of(x);
        value + &self.slopes[last] * (x - &start)
    }

    /// Value at the start of the terminal piece.
    fn terminal_base(&self) -> (Rational, Rational) {
        match self.breaks.last() {
            Some(b) => (b.clone(), self.value_at(b)),
            None => (Rational::zero(), self.initial.clone()),
        }
    }

    /// Exact evaluation. `evaluate(inf)` is `inf` when the terminal slope is
    /// positive and the limit value when it is zero; a negative value
    /// anywhere is an error, since log values are nonnegative.
    pub fn evaluate(&self, x: &LogValue) -> Result<LogValue, PmError> {
        match x {
            LogValue::Infinite => {
                let t = self.terminal_slope();
                if t.is_positive() {
                    Ok(LogValue::Infinite)
                } else if t.is_zero() {
                    let (_, value) = self.terminal_base();
                    self.require_nonnegative(value, "inf")
                } else {
                    Err(PmError::NegativeValue {
                        at: "inf".to_string(),
                        value: "-inf".to_string(),
                    })
                }
            }
            LogValue::Finite(x) => {
                if x.is_negative() {
                    return Err(PmError::OutOfDomain(format_rational(x)));
                }
                let value = self.value_at(x);
                self.require_nonnegative(value, &format_rational(x))
            }
        }
    }

    fn require_nonnegative(&self, value: Rational, at: &str) -> Result<LogValue, PmError> {
        if value.is_negative() {
            Err(PmError::NegativeValue {
                at: at.to_string(),
                value: format_rational(&value),
            })
        } else {
            Ok(LogValue::Finite(value))
        }
    }

    /// One-sided slope. Undefined on the left of 0 and on the right of `inf`;
    /// the left slope at `inf` is the terminal slope.
    pub fn slope_at(&self, x: &LogValue, side: Side) -> Result<Rational, PmError> {
        match (x, side) {
            (LogValue::Infinite, Side::Right) => {
                Err(PmError::UndefinedSlope("right of inf"))
            }
            (LogValue::Infinite, Side::Left) => Ok(self.terminal_slope().clone()),
            (LogValue::Finite(x), side) => {
                if x.is_negative() {
                    return Err(PmError::OutOfDomain(format_rational(x)));
                }
                match side {
                    Side::Right => Ok(self.slopes[self.piece_right_of(x)].clone()),
                    Side::Left => {
                        if x.is_zero() {
                            return Err(PmError::UndefinedSlope("left of 0"));
                        }
                        let piece = self.breaks.partition_point(|b| b < x);
                        Ok(self.slopes[piece].clone())
                    }
                }
            }
        }
    }

    /// Unique preimage of `y` under a strictly increasing function, when it
    /// exists (`y ≥ f(0)`).
    fn preimage(&self, y: &Rational) -> Option<Rational> {
        debug_assert!(self.is_strictly_increasing());
        if y < &self.initial {
            return None;
        }
        let mut start = Rational::zero();
        let mut value = self.initial.clone();
        for (b, s) in self.breaks.iter().zip(self.slopes.iter()) {
            let next = &value + s * (b - &start);
            if &next >= y {
                return Some(&start + (y - &value) / s);
            }
            start = b.clone();
            value = next;
        }
        let s = self.terminal_slope();
        Some(&start + (y - &value) / s)
    }
}

/// Canonical form of `outer ∘ inner`. `inner` must be strictly increasing so
/// that the pullback of `outer`'s breakpoints is well defined; `outer` may
/// have slopes of any sign.
pub fn compose(outer: &PMFunction, inner: &PMFunction) -> Result<PMFunction, PmError> {
    if !inner.is_strictly_increasing() {
        return Err(PmError::NotMonotone);
    }
    let initial = match outer.evaluate(&LogValue::Finite(inner.initial.clone()))? {
        LogValue::Finite(v) => v,
        LogValue::Infinite => unreachable!("finite argument"),
    };
    let mut cuts = inner.breaks.clone();
    for gb in &outer.breaks {
        if gb > &inner.initial {
            if let Some(x) = inner.preimage(gb) {
                cuts.push(x);
            }
        }
    }
    cuts.sort();
    cuts.dedup();
    let mut slopes = Vec::with_capacity(cuts.len() + 1);
    let mut push_slope = |x: &Rational| {
        let s_inner = &inner.slopes[inner.piece_right_of(x)];
        let y = inner.value_at(x);
        let s_outer = &outer.slopes[outer.piece_right_of(&y)];
        slopes.push(s_inner * s_outer);
    };
    push_slope(&Rational::zero());
    for c in &cuts {
        push_slope(c);
    }
    PMFunction::new(initial, cuts, slopes)
}

impl fmt::Debug for PMFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pm {}", format_rational(&self.initial))?;
        for (i, s) in self.slopes.iter().enumerate() {
            write!(f, " slope {}", format_rational(s))?;
            if let Some(b) = self.breaks.get(i) {
                write!(f, " to {}", format_rational(b))?;
            }
        }
        Ok(())
    }
}

/// A pm bijection of `[0, ∞]` fixing 0: strictly increasing with positive
/// slopes and `f(0) = 0`. Element of the composition group of pm bijections.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProfileFunction(PMFunction);

impl ProfileFunction {
    pub fn new(pm: PMFunction) -> Result<Self, PmError> {
        if !pm.initial.is_zero() {
            return Err(PmError::NotAProfile(format!(
                "must fix 0, has initial value {}",
                format_rational(&pm.initial)
            )));
        }
        if !pm.is_strictly_increasing() {
            return Err(PmError::NotAProfile(
                "must be strictly increasing (all slopes positive)".to_string(),
            ));
        }
        Ok(ProfileFunction(pm))
    }

    pub fn identity() -> Self {
        ProfileFunction(PMFunction::identity())
    }

    pub fn as_pm(&self) -> &PMFunction {
        &self.0
    }

    pub fn into_pm(self) -> PMFunction {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0 == PMFunction::identity()
    }

    pub fn evaluate(&self, x: &LogValue) -> LogValue {
        self.0.evaluate(x).expect("profiles are nonnegative and unbounded")
    }

    /// `outer ∘ inner`; the group operation, total on profiles.
    pub fn compose(outer: &ProfileFunction, inner: &ProfileFunction) -> ProfileFunction {
        let pm = compose(&outer.0, &inner.0).expect("profiles are strictly increasing");
        ProfileFunction(pm)
    }

    /// Group inverse: reflects the graph across the diagonal. The inverse of
    /// a morphism profile has reciprocal (no longer integral) slopes, so the
    /// result carries only the bijection invariants.
    pub fn inverse(&self) -> ProfileFunction {
        let breaks: Vec<Rational> = self.0.breaks.iter().map(|b| self.0.value_at(b)).collect();
        let slopes: Vec<Rational> = self.0.slopes.iter().map(|s| s.recip()).collect();
        let pm = PMFunction::new(Rational::zero(), breaks, slopes)
            .expect("reflected breakpoints stay increasing");
        ProfileFunction(pm)
    }

    /// The terminal intercept `c` with `f(ℓ) = ℓ + c` for large `ℓ`: the
    /// log-different recovered from the profile. Defined exactly on the
    /// terminal-slope-1 subgroup; equals the total slope excess
    /// `∫ (f' - 1) dℓ`.
    pub fn character(&self) -> Result<Rational, PmError> {
        if !self.0.terminal_slope().is_one() {
            return Err(PmError::TerminalSlopeNotOne(format_rational(
                self.0.terminal_slope(),
            )));
        }
        let (base, value) = self.0.terminal_base();
        Ok(value - base)
    }

    pub fn terminal_slope_one(&self) -> bool {
        self.0.terminal_slope().is_one()
    }

    /// Checks the extra invariants of profiles of generically étale
    /// morphisms along generic intervals: slopes are powers of `p`,
    /// non-increasing outward, with terminal slope 1. With `p = 0`
    /// (everything tame) only the identity passes.
    pub fn check_morphism_grade(&self, p: u64) -> Result<(), PmError> {
        for (i, w) in self.0.slopes.windows(2).enumerate() {
            if w[1] > w[0] {
                return Err(PmError::SlopesIncrease { at: i + 1 });
            }
        }
        for s in &self.0.slopes {
            if !is_p_power(s, p) {
                return Err(PmError::SlopeNotPPower {
                    slope: format_rational(s),
                    p,
                });
            }
        }
        if !self.0.terminal_slope().is_one() {
            return Err(PmError::TerminalSlopeNotOne(format_rational(
                self.0.terminal_slope(),
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for ProfileFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `true` iff `value` is `p^k` for some integer `k ≥ 0` (and `value == 1`
/// when `p == 0`, the tame configuration).
pub fn is_p_power(value: &Rational, p: u64) -> bool {
    if !value.denom().is_one() || !value.numer().is_positive() {
        return false;
    }
    let mut n = value.numer().clone();
    if n.is_one() {
        return true;
    }
    if p < 2 {
        return false;
    }
    let p = num_bigint::BigInt::from(p);
    while (&n % &p).is_zero() {
        n /= &p;
        if n.is_one() {
            return true;
        }
    }
    false
}
