//! Closed-form builders and counters for h-vectors with known witnesses:
//! complete-intersection (type-1) sequences from partitions, truncation
//! sequences, disjoint-variable sums, partition counts `p_r(e)`, the exact
//! asymptotic constant `c_e`, and a factory for pure sequences with a
//! prescribed number of local maxima.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::binom::{binomial, binomial_u64};
use crate::error::{Error, Result};
use crate::monomials::Monomial;
use crate::purity::repr::degree_stratum;
use crate::sequences::{analyze_shape, IntSeq};

/// A partition of a positive integer into weakly decreasing positive parts.
///
/// The sum of the parts is the socle degree `e` of the associated
/// complete-intersection sequence; the number of parts is its codimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from positive parts, sorting them into weakly
    /// decreasing order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::PartitionParse {
                input: String::new(),
                reason: "a partition needs at least one part".into(),
            });
        }
        if parts.contains(&0) {
            return Err(Error::PartitionParse {
                input: format!("{parts:?}"),
                reason: "parts must be positive".into(),
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// The parts, weakly decreasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts (the socle degree of the CI sequence).
    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts (the codimension of the CI sequence).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false: partitions have at least one part.
    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts parts separated by `+`, `,`, or whitespace: `"4+1+1"`,
    /// `"4,1,1"`, `"4 1 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s
            .split(|c: char| c == '+' || c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return Err(Error::PartitionParse {
                input: s.to_string(),
                reason: "no parts found".into(),
            });
        }
        let mut parts = Vec::with_capacity(tokens.len());
        for t in tokens {
            let p: u32 = t.parse().map_err(|_| Error::PartitionParse {
                input: s.to_string(),
                reason: format!("invalid part {t:?}"),
            })?;
            parts.push(p);
        }
        Partition::new(parts).map_err(|_| Error::PartitionParse {
            input: s.to_string(),
            reason: "parts must be positive".into(),
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Convolutes two coefficient sequences exactly, erroring on u64 overflow.
fn convolve(a: &[u64], b: &[u64]) -> Result<Vec<u64>> {
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x as u128 * y as u128;
        }
    }
    out.into_iter()
        .map(|v| u64::try_from(v).map_err(|_| Error::EntryOverflow))
        .collect()
}

/// The h-vector of the monomial complete intersection cut out by pure powers
/// with exponents `a_i + 1`: the coefficient sequence of
/// `prod_i (1 + z + ... + z^{a_i})`.
///
/// Equals the closure h-vector of the single generator `x1^{a_1}...xr^{a_r}`.
pub fn ci_h_vector(p: &Partition) -> Result<IntSeq> {
    let mut h = vec![1u64];
    for &a in p.parts() {
        h = convolve(&h, &vec![1u64; a as usize + 1])?;
    }
    Ok(IntSeq::new(h))
}

/// The single order-ideal generator realizing [`ci_h_vector`]:
/// `x1^{a_1} * x2^{a_2} * ... * xr^{a_r}`.
pub fn ci_generator(p: &Partition) -> Result<Monomial> {
    let exps: Vec<u16> = p
        .parts()
        .iter()
        .map(|&a| u16::try_from(a).map_err(|_| Error::EntryOverflow))
        .collect::<Result<_>>()?;
    Ok(Monomial::new(exps))
}

/// The h-vector of the degree-`e` truncation of a polynomial ring in `r`
/// variables: entry `i` is `C(r+i-1, i)`.
pub fn truncation_h(r: u64, e: u32) -> Result<IntSeq> {
    if r == 0 {
        return Err(Error::Invalid(
            "truncation needs at least one variable".into(),
        ));
    }
    let mut h = Vec::with_capacity(e as usize + 1);
    for i in 0..=e as u64 {
        let v = binomial_u64(r + i - 1, i).ok_or(Error::EntryOverflow)?;
        h.push(v);
    }
    Ok(IntSeq::new(h))
}

/// The order-ideal generators realizing [`truncation_h`]: every degree-`e`
/// monomial in `r` variables.
pub fn truncation_generators(r: usize, e: u32) -> Vec<Monomial> {
    degree_stratum(r, e)
        .into_iter()
        .map(Monomial::new)
        .collect()
}

/// Entry-wise sum of h-vectors sharing one degree-0 monomial: entry 0 stays
/// 1, every other entry is the sum over summands.
///
/// All summands must start with 1 and have equal socle degree; the witness
/// realization tensors the summands' generators into pairwise-disjoint
/// variable blocks (see [`disjoint_sum_generators`]), so the sum of pure
/// sequences is again pure.
pub fn disjoint_sum(summands: &[IntSeq]) -> Result<IntSeq> {
    if summands.is_empty() {
        return Err(Error::EmptySequence);
    }
    let first = summands[0].socle_degree();
    for (index, s) in summands.iter().enumerate() {
        if s.is_empty() || s.as_slice()[0] != 1 {
            return Err(Error::FirstEntryNotOne(
                s.as_slice().first().copied().unwrap_or(0),
            ));
        }
        if s.socle_degree() != first {
            return Err(Error::SocleMismatch {
                first,
                index,
                got: s.socle_degree(),
            });
        }
    }
    let mut out = vec![0u64; first + 1];
    out[0] = 1;
    for s in summands {
        for (i, &v) in s.as_slice().iter().enumerate().skip(1) {
            out[i] = out[i].checked_add(v).ok_or(Error::EntryOverflow)?;
        }
    }
    Ok(IntSeq::new(out))
}

/// Relabels each block of generators into its own fresh variable window and
/// concatenates them, realizing the disjoint-variable sum of the blocks'
/// order ideals.
pub fn disjoint_sum_generators(blocks: &[Vec<Monomial>]) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut offset = 0usize;
    for block in blocks {
        let width = block.iter().map(Monomial::num_vars).max().unwrap_or(0);
        for m in block {
            let mut exps = vec![0u16; offset];
            exps.extend_from_slice(m.padded(width).exponents());
            out.push(Monomial::new(exps));
        }
        offset += width;
    }
    out
}

/// Number of partitions of `e` with exactly `r` parts.
pub fn partition_count(e: u32, r: u32) -> u64 {
    if r == 0 {
        return u64::from(e == 0);
    }
    if r > e {
        return 0;
    }
    // p(n, k) = p(n-1, k-1) + p(n-k, k)
    let (e, r) = (e as usize, r as usize);
    let mut table = vec![vec![0u64; r + 1]; e + 1];
    table[0][0] = 1;
    for n in 1..=e {
        for k in 1..=r.min(n) {
            let mut v = table[n - 1][k - 1];
            if n >= k {
                v += table[n - k][k];
            }
            table[n][k] = v;
        }
    }
    table[e][r]
}

/// All partitions of `e` with exactly `r` parts, in descending lexicographic
/// order of their part lists.
pub fn partitions_with_parts(e: u32, r: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if r == 0 || r > e {
        return out;
    }
    let mut parts = Vec::with_capacity(r as usize);
    descend(e, r, e, &mut parts, &mut out);
    out
}

fn descend(remaining: u32, slots: u32, cap: u32, parts: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition {
                parts: parts.clone(),
            });
        }
        return;
    }
    // Each of the `slots` parts is at least 1 and at most `cap`.
    let hi = cap.min(remaining.saturating_sub(slots - 1));
    let lo = remaining.div_ceil(slots);
    let mut p = hi;
    while p >= lo {
        parts.push(p);
        descend(remaining - p, slots - 1, p, parts, out);
        parts.pop();
        if p == 1 {
            break;
        }
        p -= 1;
    }
}

/// All partitions of `e`, grouped by increasing number of parts.
pub fn partitions_of(e: u32) -> Vec<Partition> {
    (1..=e).flat_map(|r| partitions_with_parts(e, r)).collect()
}

/// The exact leading constant `c_e` in the asymptotic count of pure
/// sequences with socle degree `e` and large codimension:
///
/// `c_e = prod_{i=0}^{e-2} C(N - C(i+1,2) - 1, i) / (N - 1)!` with
/// `N = C(e+1,2)`.
pub fn compute_c_e(e: u32) -> Result<BigRational> {
    if e == 0 {
        return Err(Error::Invalid(
            "c_e is defined for socle degree >= 1".into(),
        ));
    }
    let e = e as u64;
    let n = e * (e + 1) / 2; // C(e+1, 2)
    let mut numer = BigUint::one();
    for i in 0..e.saturating_sub(1) {
        let drop = i * (i + 1) / 2; // C(i+1, 2)
        numer *= binomial(n - drop - 1, i);
    }
    let mut denom = BigUint::one();
    for k in 2..n {
        denom *= BigUint::from(k);
    }
    Ok(BigRational::new(numer.into(), denom.into()))
}

/// One building block of a [`NonunimodalRecipe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecipeBlock {
    /// Degree-`socle_degree` truncation of a ring in `num_vars` variables.
    Truncation { num_vars: u64, socle_degree: u32 },
    /// Complete intersection from a partition.
    CompleteIntersection(Partition),
    /// Truncation of a ring in `num_vars` variables at degree
    /// `truncation_degree`, tensored with a single-variable chain of degree
    /// `chain_degree`; socle degree is the sum of the two degrees.
    TruncationTensorChain {
        num_vars: u64,
        truncation_degree: u32,
        chain_degree: u32,
    },
}

impl RecipeBlock {
    /// The block's h-vector.
    pub fn h_vector(&self) -> Result<IntSeq> {
        match self {
            RecipeBlock::Truncation {
                num_vars,
                socle_degree,
            } => truncation_h(*num_vars, *socle_degree),
            RecipeBlock::CompleteIntersection(p) => ci_h_vector(p),
            RecipeBlock::TruncationTensorChain {
                num_vars,
                truncation_degree,
                chain_degree,
            } => {
                let t = truncation_h(*num_vars, *truncation_degree)?;
                let conv = convolve(t.as_slice(), &vec![1u64; *chain_degree as usize + 1])?;
                Ok(IntSeq::new(conv))
            }
        }
    }

    /// Number of variables the block's witness uses.
    pub fn codimension(&self) -> u64 {
        match self {
            RecipeBlock::Truncation { num_vars, .. } => *num_vars,
            RecipeBlock::CompleteIntersection(p) => p.len() as u64,
            RecipeBlock::TruncationTensorChain { num_vars, .. } => *num_vars + 1,
        }
    }

    /// Order-ideal generators realizing the block's h-vector.
    pub fn generators(&self) -> Result<Vec<Monomial>> {
        match self {
            RecipeBlock::Truncation {
                num_vars,
                socle_degree,
            } => Ok(truncation_generators(*num_vars as usize, *socle_degree)),
            RecipeBlock::CompleteIntersection(p) => Ok(vec![ci_generator(p)?]),
            RecipeBlock::TruncationTensorChain {
                num_vars,
                truncation_degree,
                chain_degree,
            } => {
                let chain = u16::try_from(*chain_degree).map_err(|_| Error::EntryOverflow)?;
                Ok(degree_stratum(*num_vars as usize, *truncation_degree)
                    .into_iter()
                    .map(|mut exps| {
                        exps.push(chain);
                        Monomial::new(exps)
                    })
                    .collect())
            }
        }
    }
}

/// A pure sequence with a prescribed number of local maxima, together with
/// the disjoint-sum recipe that realizes it.
#[derive(Debug, Clone)]
pub struct NonunimodalRecipe {
    /// The resulting h-vector.
    pub h: IntSeq,
    /// Local maxima reported by [`analyze_shape`] on `h`.
    pub num_local_maxima: usize,
    /// Codimension of `h` (= total variables across all blocks).
    pub codimension: u64,
    /// Socle degree shared by every block.
    pub socle_degree: u32,
    /// Multiplicity-tagged building blocks.
    pub blocks: Vec<(u64, RecipeBlock)>,
}

impl NonunimodalRecipe {
    /// Expands the recipe into explicit order-ideal generators over disjoint
    /// variable blocks. The divisor closure of the result has h-vector `h`.
    pub fn witness_generators(&self) -> Result<Vec<Monomial>> {
        let mut expanded = Vec::new();
        for (mult, block) in &self.blocks {
            let gens = block.generators()?;
            for _ in 0..*mult {
                expanded.push(gens.clone());
            }
        }
        Ok(disjoint_sum_generators(&expanded))
    }
}

/// Builds a pure sequence with exactly `peaks` local maxima (supported for
/// `2 <= peaks <= 4`) as a disjoint sum of truncation-based blocks and
/// repeated complete-intersection blocks.
///
/// Recipes, all revalidated by [`analyze_shape`] before returning:
///
/// * `peaks = 2`: one truncation of 5 variables at degree 4 plus 11 copies
///   of the squarefree CI on 4 variables — h = (1,49,81,79,81).
/// * `peaks = 3`: 340 copies of CI(6,6) plus truncation-tensor-chain bumps
///   at degrees 8 and 10 over socle degree 12.
/// * `peaks = 4`: 535 copies of CI(8,8) plus bumps at degrees 10, 12, 14
///   over socle degree 16.
///
/// `socle_budget`, when given, rejects recipes whose socle degree exceeds it.
pub fn nonunimodal_factory(peaks: u32, socle_budget: Option<u32>) -> Result<NonunimodalRecipe> {
    let blocks: Vec<(u64, RecipeBlock)> = match peaks {
        2 => vec![
            (
                1,
                RecipeBlock::Truncation {
                    num_vars: 5,
                    socle_degree: 4,
                },
            ),
            (
                11,
                RecipeBlock::CompleteIntersection(Partition::new(vec![1, 1, 1, 1])?),
            ),
        ],
        3 => vec![
            (
                340,
                RecipeBlock::CompleteIntersection(Partition::new(vec![6, 6])?),
            ),
            (
                2,
                RecipeBlock::TruncationTensorChain {
                    num_vars: 3,
                    truncation_degree: 8,
                    chain_degree: 4,
                },
            ),
            (
                13,
                RecipeBlock::TruncationTensorChain {
                    num_vars: 3,
                    truncation_degree: 10,
                    chain_degree: 2,
                },
            ),
        ],
        4 => vec![
            (
                535,
                RecipeBlock::CompleteIntersection(Partition::new(vec![8, 8])?),
            ),
            (
                1,
                RecipeBlock::TruncationTensorChain {
                    num_vars: 3,
                    truncation_degree: 10,
                    chain_degree: 6,
                },
            ),
            (
                1,
                RecipeBlock::TruncationTensorChain {
                    num_vars: 3,
                    truncation_degree: 12,
                    chain_degree: 4,
                },
            ),
            (
                15,
                RecipeBlock::TruncationTensorChain {
                    num_vars: 3,
                    truncation_degree: 14,
                    chain_degree: 2,
                },
            ),
        ],
        other => return Err(Error::FactoryRange(other)),
    };

    let mut summands = Vec::new();
    for (mult, block) in &blocks {
        let h = block.h_vector()?;
        for _ in 0..*mult {
            summands.push(h.clone());
        }
    }
    let h = disjoint_sum(&summands)?;
    let socle_degree = h.socle_degree() as u32;
    if let Some(budget) = socle_budget {
        if socle_degree > budget {
            return Err(Error::Invalid(format!(
                "recipe for {peaks} maxima needs socle degree {socle_degree}, over budget {budget}"
            )));
        }
    }
    let report = analyze_shape(h.as_slice());
    if report.num_local_maxima != peaks as usize {
        return Err(Error::Invalid(format!(
            "recipe revalidation found {} maxima instead of {peaks}",
            report.num_local_maxima
        )));
    }
    let codimension = blocks.iter().map(|(m, b)| m * b.codimension()).sum();
    Ok(NonunimodalRecipe {
        h,
        num_local_maxima: peaks as usize,
        codimension,
        socle_degree,
        blocks,
    })
}
