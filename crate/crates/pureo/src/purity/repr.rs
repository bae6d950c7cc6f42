//! Monomial key representations for the search engine.
//!
//! The engine stores divisor closures as hash sets of compact keys. For
//! ambients of at most 12 variables and degrees up to 31 a packed `u64`
//! (5 bits per exponent, first variable in the high bits so that integer
//! order equals exponent-vector order) keeps the hot path allocation-free;
//! anything larger falls back to plain exponent vectors.

use std::hash::Hash;

/// Per-variable field width in the packed representation.
const FIELD_BITS: u32 = 5;
/// Packed keys hold at most this many variables.
pub(crate) const PACKED_MAX_VARS: usize = 12;
/// Packed keys hold exponents (hence degrees) up to this value.
pub(crate) const PACKED_MAX_DEGREE: u32 = (1 << FIELD_BITS) - 1;

pub(crate) trait MonoKey: Clone + Eq + Hash + Send + Sync {
    fn from_exps(exps: &[u16]) -> Self;
    /// The key with exponent of `var` lowered by one, or `None` when that
    /// exponent is zero.
    fn try_decrement(&self, var: usize) -> Option<Self>;
}

/// Packed exponent vector: variable `i` occupies bits `5*(11-i)..5*(12-i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct PackedMono(u64);

impl PackedMono {
    #[inline]
    fn shift(var: usize) -> u32 {
        FIELD_BITS * (PACKED_MAX_VARS - 1 - var) as u32
    }
}

impl MonoKey for PackedMono {
    fn from_exps(exps: &[u16]) -> Self {
        debug_assert!(exps.len() <= PACKED_MAX_VARS);
        let mut v = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            debug_assert!(u32::from(e) <= PACKED_MAX_DEGREE);
            v |= u64::from(e) << Self::shift(i);
        }
        PackedMono(v)
    }

    #[inline]
    fn try_decrement(&self, var: usize) -> Option<Self> {
        let shift = Self::shift(var);
        if (self.0 >> shift) & u64::from(PACKED_MAX_DEGREE) == 0 {
            None
        } else {
            Some(PackedMono(self.0 - (1u64 << shift)))
        }
    }
}

impl MonoKey for Vec<u16> {
    fn from_exps(exps: &[u16]) -> Self {
        exps.to_vec()
    }

    #[inline]
    fn try_decrement(&self, var: usize) -> Option<Self> {
        if self[var] == 0 {
            None
        } else {
            let mut out = self.clone();
            out[var] -= 1;
            Some(out)
        }
    }
}

/// All degree-`e` exponent vectors over `r` variables, ascending in
/// exponent-vector (lexicographic) order. This ordering is load-bearing: the
/// engine's canonical representatives are minima in exactly this order.
pub(crate) fn degree_stratum(r: usize, e: u32) -> Vec<Vec<u16>> {
    fn rec(r: usize, e: u32, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if r == 1 {
            let mut v = prefix.clone();
            v.push(e as u16);
            out.push(v);
            return;
        }
        for a in 0..=e {
            prefix.push(a as u16);
            rec(r - 1, e - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if e == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(r, e, &mut Vec::new(), &mut out);
    out
}

/// Bitmask of variables with positive exponent.
pub(crate) fn support_mask(exps: &[u16]) -> u128 {
    let mut m = 0u128;
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            m |= 1u128 << i;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_round_trip_and_order() {
        let a = PackedMono::from_exps(&[0, 0, 1]);
        let b = PackedMono::from_exps(&[0, 1, 0]);
        let c = PackedMono::from_exps(&[1, 0, 0]);
        assert!(a < b && b < c);
        assert_eq!(a.try_decrement(2), Some(PackedMono::from_exps(&[0, 0, 0])));
        assert_eq!(a.try_decrement(0), None);
    }

    #[test]
    fn packed_matches_vec_semantics() {
        let exps = [3u16, 0, 2, 7];
        let p = PackedMono::from_exps(&exps);
        let v = <Vec<u16> as MonoKey>::from_exps(&exps);
        for var in 0..4 {
            let pd = p.try_decrement(var);
            let vd = v.try_decrement(var);
            assert_eq!(pd.is_some(), vd.is_some(), "var {var}");
            if let (Some(pd), Some(vd)) = (pd, vd) {
                assert_eq!(pd, PackedMono::from_exps(&vd));
            }
        }
    }

    #[test]
    fn stratum_counts_and_order() {
        // C(r+e-1, e) vectors, ascending.
        let s = degree_stratum(3, 4);
        assert_eq!(s.len(), 15);
        assert_eq!(s.first().unwrap(), &vec![0, 0, 4]);
        assert_eq!(s.last().unwrap(), &vec![4, 0, 0]);
        let mut sorted = s.clone();
        sorted.sort();
        assert_eq!(s, sorted);

        assert_eq!(degree_stratum(1, 6), vec![vec![6]]);
        assert_eq!(degree_stratum(4, 1).len(), 4);
        assert_eq!(degree_stratum(2, 0), vec![vec![0, 0]]);
    }

    #[test]
    fn support_masks() {
        assert_eq!(support_mask(&[0, 3, 0, 1]), 0b1010);
        assert_eq!(support_mask(&[0, 0]), 0);
    }
}
