//! O-sequence machinery: d-binomial expansions, Macaulay and Kruskal–Katona
//! growth bounds, differentiability, SI-sequences, and shape analysis.
//!
//! Everything here is exact: growth bounds are arbitrary-precision, so there
//! is no overflow ceiling on the sequences that can be checked.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::binom::binomial;
use crate::error::{Error, Result};

/// A finite sequence of nonnegative integers (h_0, ..., h_e).
///
/// Trailing zeros are trimmed at construction so the socle degree `e` (index
/// of the last entry) is canonical. Use [`IntSeq::candidate`] when the
/// sequence is claimed as an O-sequence candidate: that constructor enforces
/// h_0 = 1. Raw sequences (such as first differences, which may be negative)
/// are handled as plain slices/`Vec<i64>` instead.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct IntSeq(Vec<u64>);

impl IntSeq {
    /// Builds a sequence, trimming trailing zeros. An all-zero input becomes
    /// the empty sequence.
    pub fn new(mut entries: Vec<u64>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        IntSeq(entries)
    }

    /// Builds an O-sequence candidate: nonempty after trimming and h_0 = 1.
    pub fn candidate(entries: Vec<u64>) -> Result<Self> {
        let seq = Self::new(entries);
        match seq.0.first() {
            None => Err(Error::EmptySequence),
            Some(&1) => Ok(seq),
            Some(&other) => Err(Error::FirstEntryNotOne(other)),
        }
    }

    /// Index of the last entry. The empty sequence reports 0.
    pub fn socle_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    /// Codimension r = h_1 (0 for sequences of length < 2).
    pub fn codimension(&self) -> u64 {
        self.0.get(1).copied().unwrap_or(0)
    }

    /// Type t = h_e (the last entry; 0 for the empty sequence).
    pub fn socle_type(&self) -> u64 {
        self.0.last().copied().unwrap_or(0)
    }
}

impl std::ops::Deref for IntSeq {
    type Target = [u64];
    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for IntSeq {
    type Err = Error;

    /// Parses comma-separated decimal lists like `1,3,6,8,8,10`; surrounding
    /// parentheses and whitespace are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Err(Error::SequenceParse {
                input: s.to_string(),
                reason: "empty input".to_string(),
            });
        }
        let mut entries = Vec::new();
        for part in trimmed.split(',') {
            let part = part.trim();
            let value = part.parse::<u64>().map_err(|e| Error::SequenceParse {
                input: s.to_string(),
                reason: format!("bad entry {part:?}: {e}"),
            })?;
            entries.push(value);
        }
        Ok(IntSeq::new(entries))
    }
}

/// One term C(top, lower) of a d-binomial expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinTerm {
    pub top: u64,
    pub lower: u32,
}

/// The unique greedy d-binomial expansion of a nonnegative integer:
/// n = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_delta, delta) with
/// k_d > k_{d-1} > ... > k_delta >= delta >= 1. Empty exactly when n = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DBinomialExpansion {
    n: u64,
    d: u32,
    terms: Vec<BinTerm>,
}

impl DBinomialExpansion {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &[BinTerm] {
        &self.terms
    }

    /// Re-sums the terms (equals `n` by construction; used as a self-check).
    pub fn value(&self) -> BigUint {
        self.terms.iter().fold(BigUint::zero(), |acc, t| {
            acc + binomial(t.top, u64::from(t.lower))
        })
    }

    /// The Macaulay growth bound: each C(k, j) maps to C(k+1, j+1).
    pub fn macaulay_bound(&self) -> BigUint {
        self.terms.iter().fold(BigUint::zero(), |acc, t| {
            acc + binomial(t.top + 1, u64::from(t.lower) + 1)
        })
    }

    /// The Kruskal–Katona growth bound: each C(k, j) maps to C(k, j+1).
    pub fn kk_bound(&self) -> BigUint {
        self.terms.iter().fold(BigUint::zero(), |acc, t| {
            acc + binomial(t.top, u64::from(t.lower) + 1)
        })
    }
}

impl fmt::Display for DBinomialExpansion {
    /// Renders as `C(4,3)+C(3,2)+C(1,1)`; the empty expansion renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for t in &self.terms {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "C({},{})", t.top, t.lower)?;
            first = false;
        }
        Ok(())
    }
}

/// Computes the unique greedy d-binomial expansion of `n`.
///
/// # Panics
/// Panics if `d == 0` (the expansion is defined for positive d only).
pub fn d_expansion(n: u64, d: u32) -> DBinomialExpansion {
    assert!(d >= 1, "d-binomial expansion needs d >= 1");
    let mut terms = Vec::new();
    let mut rem = n;
    let mut j = d;
    while rem > 0 {
        debug_assert!(j >= 1, "greedy expansion must terminate by j = 1");
        // Largest k >= j with C(k, j) <= rem, found by the exact recurrence
        // C(k+1, j) = C(k, j) * (k+1) / (k+1-j).
        let jj = u64::from(j);
        let mut k = jj;
        let mut c: u64 = 1;
        loop {
            let next = (c as u128) * ((k + 1) as u128) / ((k + 1 - jj) as u128);
            if next <= rem as u128 {
                k += 1;
                c = next as u64;
            } else {
                break;
            }
        }
        if let Some(prev) = terms.last() {
            let prev: &BinTerm = prev;
            debug_assert!(prev.top > k, "tops must strictly decrease");
        }
        terms.push(BinTerm { top: k, lower: j });
        rem -= c;
        j -= 1;
    }
    DBinomialExpansion { n, d, terms }
}

/// Macaulay's maximal growth bound ((n_(d))^{+1}_{+1}): the largest value an
/// O-sequence may take in degree d+1 given value n in degree d. Zero maps to
/// zero.
pub fn macaulay_growth(n: u64, d: u32) -> BigUint {
    d_expansion(n, d).macaulay_bound()
}

/// Kruskal–Katona growth bound for f-vectors: the largest number of
/// (d+1)-element faces a complex with n d-element faces can have.
pub fn kk_growth(n: u64, d: u32) -> BigUint {
    d_expansion(n, d).kk_bound()
}

/// A witness that a sequence violates Macaulay growth: entry `value` at index
/// `degree` exceeds the bound computed from the previous entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OViolation {
    pub degree: usize,
    pub value: u64,
    pub bound: BigUint,
}

/// Checks Macaulay growth at every step.
///
/// Returns `Ok(None)` if `h` is an O-sequence, `Ok(Some(violation))` with the
/// first failing degree otherwise. Rejects inputs that are not candidates
/// (empty, or h_0 != 1) with an error.
pub fn o_sequence_check(h: &[u64]) -> Result<Option<OViolation>> {
    match h.first() {
        None => return Err(Error::EmptySequence),
        Some(&1) => {}
        Some(&other) => return Err(Error::FirstEntryNotOne(other)),
    }
    // No constraint from degree 0 to 1 (h_1 is the number of variables).
    for t in 1..h.len().saturating_sub(1) {
        let bound = macaulay_growth(h[t], t as u32);
        if BigUint::from(h[t + 1]) > bound {
            return Ok(Some(OViolation {
                degree: t + 1,
                value: h[t + 1],
                bound,
            }));
        }
    }
    Ok(None)
}

/// True iff `h` is an O-sequence (h_0 = 1 and Macaulay growth holds).
pub fn is_o_sequence(h: &[u64]) -> bool {
    matches!(o_sequence_check(h), Ok(None))
}

/// First difference Δh with Δh_0 = h_0 and Δh_i = h_i − h_{i−1}.
/// The result is raw and may contain negative entries; downstream predicates
/// decide what to make of them.
pub fn first_difference(h: &[u64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(h.len());
    let mut prev: i64 = 0;
    for &v in h {
        let v = v as i64;
        out.push(v - prev);
        prev = v;
    }
    out
}

/// True iff the first difference of `h`, restricted to degrees
/// 0..=through_degree, is an O-sequence (in particular nonnegative there).
pub fn is_differentiable(h: &[u64], through_degree: usize) -> Result<bool> {
    if h.is_empty() {
        return Err(Error::EmptySequence);
    }
    let e = h.len() - 1;
    if through_degree > e {
        return Err(Error::DegreeOutOfRange {
            degree: through_degree,
            socle_degree: e,
        });
    }
    let diff = first_difference(h);
    let mut prefix = Vec::with_capacity(through_degree + 1);
    for &d in &diff[..=through_degree] {
        if d < 0 {
            return Ok(false);
        }
        prefix.push(d as u64);
    }
    Ok(o_sequence_check(&prefix)?.is_none())
}

/// True iff `f` obeys Kruskal–Katona at every step: f_{i+1} <= kk_growth(f_i, i)
/// for all i >= 1. Here f_0 = 1 counts the empty face and f_i counts faces of
/// cardinality i ((i−1)-dimensional faces). Sequences not starting with 1 are
/// not f-vectors.
pub fn is_f_vector(f: &[u64]) -> bool {
    if f.first() != Some(&1) {
        return false;
    }
    for i in 1..f.len().saturating_sub(1) {
        if BigUint::from(f[i + 1]) > kk_growth(f[i], i as u32) {
            return false;
        }
    }
    true
}

/// First violation of Hibi's inequalities h_i <= h_j for 0 <= i <= j <= e−i,
/// if any. These hold for every pure O-sequence, so a violation is a cheap
/// non-purity certificate.
pub fn hibi_violation(h: &[u64]) -> Option<(usize, usize)> {
    if h.is_empty() {
        return None;
    }
    let e = h.len() - 1;
    for i in 0..=e {
        for j in i..=e.saturating_sub(i) {
            if j >= i && h[i] > h[j] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Shape analysis of a sequence: unimodality flags, the number of local
/// maxima, flawlessness, and first-half monotonicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnimodalityReport {
    /// Nondecreasing up to some degree, then nonincreasing.
    pub is_unimodal: bool,
    /// Strictly increasing, then possibly one constant run, then strictly
    /// decreasing until zero (and zero afterwards).
    pub is_strictly_unimodal: bool,
    /// Number of maximal constant runs of positive value that strictly
    /// dominate both neighbors (sequence boundaries count as dominated).
    pub num_local_maxima: usize,
    /// h_i <= h_{e−i} for 0 <= i <= floor(e/2).
    pub is_flawless: bool,
    /// 1 = h_0 <= h_1 <= ... <= h_{floor(e/2)}.
    pub first_half_nondecreasing: bool,
}

/// Computes the [`UnimodalityReport`] of a sequence. Intended for trimmed
/// sequences; trailing zeros would make flawlessness vacuously fail.
pub fn analyze_shape(h: &[u64]) -> UnimodalityReport {
    let n = h.len();
    if n == 0 {
        return UnimodalityReport {
            is_unimodal: true,
            is_strictly_unimodal: true,
            num_local_maxima: 0,
            is_flawless: true,
            first_half_nondecreasing: true,
        };
    }
    let e = n - 1;

    // Unimodal: a single switch from nondecreasing to nonincreasing.
    let mut is_unimodal = true;
    {
        let mut i = 0;
        while i + 1 < n && h[i + 1] >= h[i] {
            i += 1;
        }
        while i + 1 < n {
            if h[i + 1] > h[i] {
                is_unimodal = false;
                break;
            }
            i += 1;
        }
    }

    // Strictly unimodal: strict rise, one plateau, strict fall to zero, zeros.
    let mut is_strictly_unimodal = true;
    {
        let mut i = 0;
        while i + 1 < n && h[i + 1] > h[i] {
            i += 1;
        }
        while i + 1 < n && h[i + 1] == h[i] {
            i += 1;
        }
        while i + 1 < n {
            let ok = if h[i] == 0 {
                h[i + 1] == 0
            } else {
                h[i + 1] < h[i]
            };
            if !ok {
                is_strictly_unimodal = false;
                break;
            }
            i += 1;
        }
    }

    // Local maxima: positive plateaus strictly above both neighbors.
    let mut num_local_maxima = 0;
    {
        let mut i = 0;
        while i < n {
            let mut j = i;
            while j + 1 < n && h[j + 1] == h[i] {
                j += 1;
            }
            let left_ok = i == 0 || h[i - 1] < h[i];
            let right_ok = j == n - 1 || h[j + 1] < h[i];
            if h[i] > 0 && left_ok && right_ok {
                num_local_maxima += 1;
            }
            i = j + 1;
        }
    }

    let is_flawless = (0..=e / 2).all(|i| h[i] <= h[e - i]);
    let first_half_nondecreasing = (0..e / 2).all(|i| h[i] <= h[i + 1]);

    UnimodalityReport {
        is_unimodal,
        is_strictly_unimodal,
        num_local_maxima,
        is_flawless,
        first_half_nondecreasing,
    }
}

/// True iff `h` is an SI-sequence: symmetric about e/2 and differentiable
/// through degree floor(e/2).
pub fn is_si_sequence(h: &[u64]) -> bool {
    if h.is_empty() {
        return false;
    }
    let e = h.len() - 1;
    let symmetric = (0..=e).all(|i| h[i] == h[e - i]);
    symmetric && is_differentiable(h, e / 2).unwrap_or(false)
}
