//! Normal forms `(p, q)` of 2-bridge knots.
//!
//! A form is a pair of coprime odd integers `0 < q < p`. The exponent
//! sequence `ε_j = (-1)^floor(j q / p)` for `1 <= j < p` drives the word of
//! the knot group presentation.

use std::fmt;

use num_integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NormalFormError {
    #[error("p = {p} and q = {q} are not coprime")]
    NonCoprime { p: i64, q: i64 },
    #[error("p = {0} is even; (p, q) with p even describes a 2-bridge link, not a knot")]
    EvenP(i64),
    #[error("(p, q) = ({p}, {q}) out of range: need p >= 3 and 0 < q < p")]
    OutOfRange { p: i64, q: i64 },
}

/// A validated normal form with odd `p` and odd `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeForm {
    p: u32,
    q: u32,
    mirror_flag: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnotClass {
    /// The torus knot `T(2, p)`.
    Torus {
        r: u32,
        s: u32,
    },
    Hyperbolic,
}

impl KnotClass {
    pub fn is_torus(&self) -> bool {
        matches!(self, KnotClass::Torus { .. })
    }

    pub fn torus_params(&self) -> Option<(u32, u32)> {
        match *self {
            KnotClass::Torus { r, s } => Some((r, s)),
            KnotClass::Hyperbolic => None,
        }
    }
}

impl fmt::Display for KnotClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotClass::Torus { r, s } => write!(f, "torus T({r},{s})"),
            KnotClass::Hyperbolic => write!(f, "hyperbolic"),
        }
    }
}

/// Largest `p` accepted; keeps `j * q` and the modular inverses inside `i64`.
pub const MAX_P: i64 = 1 << 30;

impl TwoBridgeForm {
    /// Checks a pair `(p, q)`. An even `q` is replaced by `p - q`, which
    /// describes the mirror image, and the replacement is recorded.
    pub fn new(p: i64, q: i64) -> Result<Self, NormalFormError> {
        if !(3..=MAX_P).contains(&p) || q <= 0 || q >= p {
            return Err(NormalFormError::OutOfRange { p, q });
        }
        if p % 2 == 0 {
            return Err(NormalFormError::EvenP(p));
        }
        if p.gcd(&q) != 1 {
            return Err(NormalFormError::NonCoprime { p, q });
        }
        let (q, mirror_flag) = if q % 2 == 0 { (p - q, true) } else { (q, false) };
        Ok(TwoBridgeForm { p: p as u32, q: q as u32, mirror_flag })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// True when the input `q` was even and got replaced by `p - q`.
    pub fn mirror_flag(&self) -> bool {
        self.mirror_flag
    }

    /// `(p - 1) / 2`, the degree of the Riley polynomial.
    pub fn half_length(&self) -> usize {
        (self.p as usize - 1) / 2
    }

    /// `ε_1, ..., ε_{p-1}`, each `+1` or `-1`.
    pub fn epsilon_sequence(&self) -> Vec<i8> {
        let (p, q) = (u64::from(self.p), u64::from(self.q));
        (1..p).map(|j| if (j * q / p) % 2 == 0 { 1 } else { -1 }).collect()
    }

    /// `σ = Σ ε_j`; always even.
    pub fn sigma(&self) -> i64 {
        self.epsilon_sequence().iter().map(|&e| i64::from(e)).sum()
    }

    /// `q^{-1} mod p`.
    pub fn q_inverse(&self) -> u32 {
        let (p, q) = (i64::from(self.p), i64::from(self.q));
        let ext = q.extended_gcd(&p);
        ext.x.rem_euclid(p) as u32
    }

    /// Sorted distinct members of `{q, q⁻¹, p - q, p - q⁻¹}` mod `p`.
    ///
    /// Forms with the same `p` and key describe the same knot up to mirror
    /// image. Used to deduplicate scans, not as a classification.
    pub fn canonical_key(&self) -> Vec<u32> {
        let inv = self.q_inverse();
        let mut key = vec![self.q, inv, self.p - self.q, self.p - inv];
        key.sort_unstable();
        key.dedup();
        key
    }

    pub fn classify(&self) -> KnotClass {
        if self.canonical_key().contains(&1) {
            KnotClass::Torus { r: 2, s: self.p }
        } else {
            KnotClass::Hyperbolic
        }
    }

    /// Same knot up to mirror image, judged by `p` and the canonical key.
    pub fn same_class(&self, other: &Self) -> bool {
        self.p == other.p && self.canonical_key() == other.canonical_key()
    }
}

impl fmt::Display for TwoBridgeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Validates `(p, q)`; alias for [`TwoBridgeForm::new`].
pub fn validate(p: i64, q: i64) -> Result<TwoBridgeForm, NormalFormError> {
    TwoBridgeForm::new(p, q)
}

/// One representative per `(p, canonical key)` for every odd `p <= p_max`,
/// taking the smallest odd `q` of each class, in ascending `(p, q)` order.
pub fn enumerate_forms(p_max: u32) -> Vec<TwoBridgeForm> {
    let mut forms = Vec::new();
    for p in (3..=p_max).step_by(2) {
        let mut seen: Vec<Vec<u32>> = Vec::new();
        for q in (1..p).step_by(2) {
            let Ok(form) = TwoBridgeForm::new(i64::from(p), i64::from(q)) else {
                continue;
            };
            let key = form.canonical_key();
            if !seen.contains(&key) {
                seen.push(key);
                forms.push(form);
            }
        }
    }
    forms
}
