//! Exact integer and residue-run arithmetic.
//!
//! Everything above this layer works on residues modulo `n`. Quantities that
//! grow like `d^k` live in [`WideInt`], a checked 128-bit integer, so an
//! instance that would overflow is rejected instead of silently wrapping.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Non-negative 128-bit integer whose arithmetic is overflow-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct WideInt(u128);

impl WideInt {
    pub const ZERO: WideInt = WideInt(0);
    pub const ONE: WideInt = WideInt(1);

    pub const fn new(v: u128) -> Self {
        WideInt(v)
    }

    pub const fn get(self) -> u128 {
        self.0
    }

    pub fn checked_add(self, rhs: WideInt) -> Result<WideInt> {
        self.0
            .checked_add(rhs.0)
            .map(WideInt)
            .ok_or_else(|| overflow(format!("{} + {}", self.0, rhs.0)))
    }

    pub fn checked_sub(self, rhs: WideInt) -> Result<WideInt> {
        self.0
            .checked_sub(rhs.0)
            .map(WideInt)
            .ok_or_else(|| overflow(format!("{} - {}", self.0, rhs.0)))
    }

    pub fn checked_mul(self, rhs: WideInt) -> Result<WideInt> {
        self.0
            .checked_mul(rhs.0)
            .map(WideInt)
            .ok_or_else(|| overflow(format!("{} * {}", self.0, rhs.0)))
    }

    pub fn checked_pow(self, exp: u32) -> Result<WideInt> {
        self.0
            .checked_pow(exp)
            .map(WideInt)
            .ok_or_else(|| overflow(format!("{}^{}", self.0, exp)))
    }

    /// `⌈self / rhs⌉`; `rhs` must be positive.
    pub fn div_ceil(self, rhs: WideInt) -> Result<WideInt> {
        if rhs.0 == 0 {
            return Err(Error::invalid("division by zero"));
        }
        Ok(WideInt(self.0.div_ceil(rhs.0)))
    }

    pub fn div_floor(self, rhs: WideInt) -> Result<WideInt> {
        if rhs.0 == 0 {
            return Err(Error::invalid("division by zero"));
        }
        Ok(WideInt(self.0 / rhs.0))
    }

    pub fn checked_rem(self, rhs: WideInt) -> Result<WideInt> {
        if rhs.0 == 0 {
            return Err(Error::invalid("division by zero"));
        }
        Ok(WideInt(self.0 % rhs.0))
    }

    /// Narrow to `u64`, failing if the value does not fit.
    pub fn to_u64(self) -> Result<u64> {
        u64::try_from(self.0).map_err(|_| overflow(format!("{} exceeds 64 bits", self.0)))
    }
}

impl From<u64> for WideInt {
    fn from(v: u64) -> Self {
        WideInt(v as u128)
    }
}

impl fmt::Display for WideInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn overflow(what: String) -> Error {
    Error::RangeExceeded(format!("128-bit overflow computing {what}"))
}

/// `d^k` as a [`WideInt`].
pub fn power(d: u64, k: u32) -> Result<WideInt> {
    WideInt::from(d).checked_pow(k)
}

/// `Σ_{j=0}^{k} d^j`, i.e. `(d^{k+1} - 1) / (d - 1)`.
pub fn geometric_sum(d: u64, k: u32) -> Result<WideInt> {
    if d < 2 {
        return Err(Error::invalid(format!("geometric sum needs d >= 2, got {d}")));
    }
    let mut acc = WideInt::ONE;
    let mut term = WideInt::ONE;
    let base = WideInt::from(d);
    for _ in 0..k {
        term = term.checked_mul(base)?;
        acc = acc.checked_add(term)?;
    }
    Ok(acc)
}

/// Reduce any integer to its residue in `[0, n)`.
pub fn residue(v: i128, n: u64) -> u64 {
    debug_assert!(n > 0);
    v.rem_euclid(n as i128) as u64
}

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid: returns `(g, s, t)` with `a·s + b·t = g = gcd(a, b)`.
fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

/// All `x ∈ [0, n)` with `a·x ≡ b (mod n)`, ascending.
///
/// Solvable iff `g = gcd(a mod n, n)` divides `b`; then there are exactly `g`
/// solutions, spaced `n / g` apart. An empty vector means "no solution".
pub fn solve_linear_congruence(a: i128, b: i128, n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::invalid("congruence modulus must be positive"));
    }
    let a = residue(a, n) as i128;
    let b = residue(b, n) as i128;
    let m = n as i128;
    let (g, s, _) = extended_gcd(a, m);
    if b % g != 0 {
        return Ok(Vec::new());
    }
    let step = m / g;
    // a/g · s ≡ 1 (mod n/g)
    let base = ((s.rem_euclid(step)) * ((b / g).rem_euclid(step))).rem_euclid(step);
    Ok((0..g).map(|t| (base + t * step) as u64).collect())
}

/// A run of consecutive residues modulo `n`, stored as `(start, length)`.
///
/// The length disambiguates the full set (`length == n`) from a singleton,
/// which the `[i, j]` endpoint notation cannot. Full and empty runs are kept
/// in a canonical form with `start == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModInterval {
    start: u64,
    len: u64,
    modulus: u64,
}

impl ModInterval {
    pub fn new(start: u64, len: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::invalid("interval modulus must be positive"));
        }
        if start >= modulus {
            return Err(Error::invalid(format!("start {start} not a residue mod {modulus}")));
        }
        if len > modulus {
            return Err(Error::invalid(format!("length {len} exceeds modulus {modulus}")));
        }
        Ok(Self::canonical(start, len, modulus))
    }

    fn canonical(start: u64, len: u64, modulus: u64) -> Self {
        let start = if len == 0 || len == modulus { 0 } else { start };
        ModInterval { start, len, modulus }
    }

    /// Run starting at `start` (any integer) of `len` residues, saturating at `modulus`.
    pub(crate) fn saturating(start: i128, len: u128, modulus: u64) -> Self {
        let len = len.min(modulus as u128) as u64;
        Self::canonical(residue(start, modulus), len, modulus)
    }

    pub fn full(modulus: u64) -> Self {
        Self::canonical(0, modulus, modulus)
    }

    pub fn empty(modulus: u64) -> Self {
        Self::canonical(0, 0, modulus)
    }

    pub fn singleton(v: u64, modulus: u64) -> Result<Self> {
        Self::new(v, 1, modulus)
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len == self.modulus
    }

    /// Last residue of the run, if any.
    pub fn last(&self) -> Option<u64> {
        if self.len == 0 {
            None
        } else {
            Some((self.start + self.len - 1) % self.modulus)
        }
    }

    /// `v ∈ run ⇔ (v − start) mod n < length`.
    pub fn contains(&self, v: u64) -> bool {
        v < self.modulus && (v + self.modulus - self.start) % self.modulus < self.len
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len).map(move |o| (self.start + o) % self.modulus)
    }

    /// The union as a single run, or `None` when the union has a gap.
    pub fn union(&self, other: &ModInterval) -> Result<Option<ModInterval>> {
        if self.modulus != other.modulus {
            return Err(Error::invalid(format!(
                "modulus mismatch: {} vs {}",
                self.modulus, other.modulus
            )));
        }
        let n = self.modulus;
        if self.is_empty() || other.is_full() {
            return Ok(Some(*other));
        }
        if other.is_empty() || self.is_full() {
            return Ok(Some(*self));
        }
        // One run must start inside the other or right after its end.
        let extend = |a: &ModInterval, b: &ModInterval| {
            let offset = (b.start + n - a.start) % n;
            (offset <= a.len).then(|| {
                let len = a.len.max(offset + b.len).min(n);
                ModInterval::canonical(a.start, len, n)
            })
        };
        Ok(extend(self, other).or_else(|| extend(other, self)))
    }
}

impl fmt::Display for ModInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.last() {
            None => write!(f, "[] (mod {})", self.modulus),
            Some(last) => write!(f, "[{}, {}] (mod {})", self.start, last, self.modulus),
        }
    }
}

/// The run `i, i+1, …, j` modulo `n`, wrapping past `n − 1` when `i mod n > j mod n`.
///
/// Length is `((j − i) mod n) + 1`, so `i ≡ j` yields a singleton.
pub fn mod_interval(i: i128, j: i128, n: u64) -> Result<ModInterval> {
    if n == 0 {
        return Err(Error::invalid("interval modulus must be positive"));
    }
    let start = residue(i, n);
    let len = residue(j - i, n) + 1;
    ModInterval::new(start, len, n)
}

/// True iff `a ∪ b` is itself a single run.
pub fn interval_union_is_consecutive(a: &ModInterval, b: &ModInterval) -> Result<bool> {
    Ok(a.union(b)?.is_some())
}
