//! Ring specifications and ideal arithmetic for finite products of chain rings.
//!
//! A factor is a chain ring described by the nilpotency index `t` of its
//! maximal ideal: the ideal lattice of the factor is the chain
//! `R ⊃ M ⊃ M^2 ⊃ ... ⊃ M^t = 0`, so `t = 1` is a field and `t = 2` a local
//! ring with a unique non-trivial ideal. An ideal of the product is one
//! exponent per factor.

use std::fmt;
use thiserror::Error;

/// A finite product of chain rings, given by per-factor nilpotency indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    factors: Vec<u32>,
    names: Vec<String>,
}

/// One ideal of a product ring: component `i` is `M_i^(e_i)`.
///
/// Exponent 0 is the full factor and exponent `t_i` its zero ideal. The
/// derived `Ord` is lexicographic on exponents, which is the canonical
/// vertex order used everywhere downstream.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdealVector {
    exponents: Vec<u32>,
}

/// Which of the closed-form theorem hypotheses a spec satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingClass {
    /// Product of exactly two fields; the only disconnected case.
    TwoFields,
    /// Product of `n >= 3` fields.
    ReducedFields { n: usize },
    /// Product of `n >= 2` local rings each with a unique non-trivial ideal.
    UniqueNontrivialIdeals { n: usize },
    /// `n >= 1` unique-nontrivial-ideal factors together with `m >= 1` fields.
    MixedUniqueAndFields { n: usize, m: usize },
    /// Product of `n >= 2` chain rings with at least two non-trivial ideals each.
    ChainPir { n: usize },
    /// A single local factor.
    LocalRing { nilpotency: u32 },
    /// No closed-form theorem covers the factor pattern.
    Unclassified,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty ring spec")]
    Empty,
    #[error("malformed factor token `{0}`")]
    MalformedToken(String),
    #[error("Z({0}) is not a local ring: {0} is not a prime power")]
    NotLocal(u64),
    #[error("F({0}) is not a field: {0} is not a prime power")]
    InvalidFieldOrder(u64),
    #[error("nilpotency index must be at least 1, got {0}")]
    InvalidNilpotency(u64),
}

impl RingSpec {
    /// Build a spec directly from nilpotency indices, with default names.
    ///
    /// Panics if `factors` is empty or contains a zero.
    pub fn from_nilpotencies(factors: &[u32]) -> Self {
        assert!(!factors.is_empty(), "a ring spec needs at least one factor");
        assert!(factors.iter().all(|&t| t >= 1), "nilpotency indices start at 1");
        let names = factors
            .iter()
            .enumerate()
            .map(|(i, &t)| if t == 1 { format!("F_{}", i + 1) } else { format!("C({t})") })
            .collect();
        RingSpec {
            factors: factors.to_vec(),
            names,
        }
    }

    /// Parse the textual grammar: factors joined by `x` (or `×`), each one of
    /// `F`, `F(q)`, `C(t)`, `Z(p^k)`, or `Zn` for a prime power `n = p^k`.
    /// Whitespace is ignored. Field order `q` and characteristic `p` are
    /// validated and then discarded: the graph depends only on the ideal chains.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut factors = Vec::new();
        let mut names = Vec::new();
        for token in compact.split(['x', '×']) {
            if token.is_empty() {
                return Err(ParseError::MalformedToken(String::new()));
            }
            let t = parse_factor(token)?;
            factors.push(t);
            if token == "F" {
                names.push(format!("F_{}", factors.len()));
            } else {
                names.push(token.to_string());
            }
        }
        Ok(RingSpec { factors, names })
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn nilpotencies(&self) -> &[u32] {
        &self.factors
    }

    pub fn factor_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// The spec rendered back as a parseable string.
    pub fn display_text(&self) -> String {
        self.names.join(" x ")
    }

    /// Total number of ideals of the product, `prod(t_i + 1)`, saturating
    /// so oversized specs still trip size guards.
    pub fn ideal_count(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &t| acc.saturating_mul(t as u64 + 1))
    }

    /// Nonzero proper ideals in lexicographic exponent order.
    ///
    /// Exactly the exponent vectors other than all-zero (the ring) and
    /// all-`t_i` (the zero ideal); the count is `prod(t_i + 1) - 2`.
    pub fn vertices(&self) -> Vec<IdealVector> {
        let n = self.factors.len();
        let mut out = Vec::new();
        let mut current = vec![0u32; n];
        loop {
            let all_zero = current.iter().all(|&e| e == 0);
            let is_zero_ideal = current
                .iter()
                .zip(&self.factors)
                .all(|(&e, &t)| e == t);
            if !all_zero && !is_zero_ideal {
                out.push(IdealVector {
                    exponents: current.clone(),
                });
            }
            // odometer increment, most significant coordinate first
            let mut pos = n;
            while pos > 0 {
                pos -= 1;
                if current[pos] < self.factors[pos] {
                    current[pos] += 1;
                    for e in &mut current[pos + 1..] {
                        *e = 0;
                    }
                    break;
                }
                if pos == 0 {
                    return out;
                }
            }
        }
    }

    /// Componentwise sum of ideals: `M^a + M^b = M^min(a,b)` in a chain ring.
    ///
    /// Panics when the vectors do not belong to this spec.
    pub fn ideal_sum(&self, a: &IdealVector, b: &IdealVector) -> IdealVector {
        assert_eq!(
            a.exponents.len(),
            self.factors.len(),
            "ideal does not match spec"
        );
        assert_eq!(
            a.exponents.len(),
            b.exponents.len(),
            "ideal length mismatch"
        );
        IdealVector {
            exponents: a
                .exponents
                .iter()
                .zip(&b.exponents)
                .map(|(&x, &y)| x.min(y))
                .collect(),
        }
    }

    /// Prime ideals of the product are the maximal ones: exactly one
    /// coordinate is the maximal ideal of its factor, all others full.
    pub fn is_prime_ideal(&self, v: &IdealVector) -> bool {
        let mut maximal_coords = 0;
        for &e in &v.exponents {
            match e {
                0 => {}
                1 => maximal_coords += 1,
                _ => return false,
            }
        }
        maximal_coords == 1
    }

    /// Human-readable ideal label, e.g. `M_1 x Z(9)` or `M_1^2 x 0`.
    pub fn label(&self, v: &IdealVector) -> String {
        v.exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                if e == 0 {
                    self.names[i].clone()
                } else if e == self.factors[i] {
                    "0".to_string()
                } else if e == 1 {
                    format!("M_{}", i + 1)
                } else {
                    format!("M_{}^{}", i + 1, e)
                }
            })
            .collect::<Vec<_>>()
            .join(" x ")
    }

    /// Classify the factor multiset against the theorem hypotheses.
    pub fn classify(&self) -> RingClass {
        let n_total = self.factors.len();
        if n_total == 1 {
            return RingClass::LocalRing {
                nilpotency: self.factors[0],
            };
        }
        let fields = self.factors.iter().filter(|&&t| t == 1).count();
        let unique = self.factors.iter().filter(|&&t| t == 2).count();
        let longer = self.factors.iter().filter(|&&t| t >= 3).count();
        if fields == n_total {
            if n_total == 2 {
                RingClass::TwoFields
            } else {
                RingClass::ReducedFields { n: n_total }
            }
        } else if unique == n_total {
            RingClass::UniqueNontrivialIdeals { n: n_total }
        } else if longer == n_total {
            RingClass::ChainPir { n: n_total }
        } else if longer == 0 {
            // only fields and unique-ideal factors, at least one of each
            RingClass::MixedUniqueAndFields {
                n: unique,
                m: fields,
            }
        } else {
            RingClass::Unclassified
        }
    }
}

impl IdealVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        IdealVector { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }
}

impl fmt::Display for RingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingClass::TwoFields => write!(f, "TwoFields"),
            RingClass::ReducedFields { n } => write!(f, "ReducedFields(n={n})"),
            RingClass::UniqueNontrivialIdeals { n } => {
                write!(f, "UniqueNontrivialIdeals(n={n})")
            }
            RingClass::MixedUniqueAndFields { n, m } => {
                write!(f, "MixedUniqueAndFields(n={n}, m={m})")
            }
            RingClass::ChainPir { n } => write!(f, "ChainPIR(n={n})"),
            RingClass::LocalRing { nilpotency } => write!(f, "LocalRing(t={nilpotency})"),
            RingClass::Unclassified => write!(f, "Unclassified"),
        }
    }
}

fn parse_factor(token: &str) -> Result<u32, ParseError> {
    if token == "F" {
        return Ok(1);
    }
    if let Some(arg) = strip_call(token, 'F') {
        let q = parse_number(arg, token)?;
        return match prime_power_exponent(q) {
            Some(_) => Ok(1),
            None => Err(ParseError::InvalidFieldOrder(q)),
        };
    }
    if let Some(arg) = strip_call(token, 'C') {
        let t = parse_number(arg, token)?;
        if t < 1 {
            return Err(ParseError::InvalidNilpotency(t));
        }
        if t > 60 {
            return Err(ParseError::MalformedToken(token.to_string()));
        }
        return Ok(t as u32);
    }
    if let Some(rest) = token.strip_prefix('Z') {
        let arg = strip_call(token, 'Z').unwrap_or(rest);
        // `Z(p^k)` spells the prime power out; `Z(n)`/`Zn` give it evaluated.
        let n = if let Some((base, exp)) = arg.split_once('^') {
            let p = parse_number(base, token)?;
            let k = parse_number(exp, token)?;
            if !(1..=60).contains(&k) {
                return Err(ParseError::InvalidNilpotency(k));
            }
            p.checked_pow(k as u32)
                .ok_or_else(|| ParseError::MalformedToken(token.to_string()))?
        } else {
            parse_number(arg, token)?
        };
        return match prime_power_exponent(n) {
            Some(k) => Ok(k),
            None => Err(ParseError::NotLocal(n)),
        };
    }
    Err(ParseError::MalformedToken(token.to_string()))
}

fn strip_call(token: &str, head: char) -> Option<&str> {
    token
        .strip_prefix(head)?
        .strip_prefix('(')?
        .strip_suffix(')')
}

fn parse_number(s: &str, token: &str) -> Result<u64, ParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::MalformedToken(token.to_string()));
    }
    s.parse()
        .map_err(|_| ParseError::MalformedToken(token.to_string()))
}

/// `Some(k)` when `n = p^k` for a prime `p` and `k >= 1`.
fn prime_power_exponent(n: u64) -> Option<u32> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut m = n;
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some(k) } else { None };
        }
        p += 1;
    }
    Some(1) // n itself is prime
}
