//! Block designs as pure f-vectors: Steiner-system verification and
//! construction, translation between designs and squarefree monomial
//! generators, projective-plane candidate sequences, and counting screens.

use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::monomials::Monomial;
use crate::sequences::IntSeq;

/// A collection of `m`-element blocks over the vertex set `{1, ..., r}`,
/// tagged with the subset size `l` it is meant to cover exactly once.
///
/// Invariants enforced at construction: every block has exactly `m` distinct
/// vertices drawn from `1..=r`. Whether the blocks actually form a Steiner
/// system is checked separately by [`verify_steiner`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDesign {
    l: usize,
    m: usize,
    r: usize,
    blocks: Vec<Vec<usize>>,
}

impl BlockDesign {
    /// Validates and normalizes blocks: vertices sorted within each block,
    /// blocks sorted lexicographically (duplicates kept — the verifier will
    /// report them as double covers).
    pub fn new(l: usize, m: usize, r: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(blocks.len());
        for (index, mut block) in blocks.into_iter().enumerate() {
            if block.len() != m {
                return Err(Error::BlockSize {
                    m,
                    r,
                    index,
                    got: block.len(),
                });
            }
            for &vertex in &block {
                if vertex == 0 || vertex > r {
                    return Err(Error::BlockVertex { index, vertex, r });
                }
            }
            block.sort_unstable();
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BlockSize {
                    m,
                    r,
                    index,
                    got: m - 1,
                });
            }
            normalized.push(block);
        }
        normalized.sort();
        Ok(Self {
            l,
            m,
            r,
            blocks: normalized,
        })
    }

    /// Subset size covered exactly once in a valid system.
    pub fn l(&self) -> usize {
        self.l
    }

    /// Block size.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of vertices.
    pub fn r(&self) -> usize {
        self.r
    }

    /// The blocks, each sorted, in lexicographic order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

/// The first `l`-subset (in lexicographic order) covered by a number of
/// blocks different from one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerViolation {
    /// The offending subset, sorted.
    pub subset: Vec<usize>,
    /// How many blocks contain it (0 = uncovered, >= 2 = double cover).
    pub cover_count: usize,
}

fn contains_sorted(block: &[usize], subset: &[usize]) -> bool {
    let mut it = block.iter();
    subset.iter().all(|v| it.any(|b| b == v))
}

fn for_each_subset<F: FnMut(&[usize]) -> bool>(r: usize, l: usize, f: &mut F) -> bool {
    fn rec<F: FnMut(&[usize]) -> bool>(
        next: usize,
        r: usize,
        left: usize,
        scratch: &mut Vec<usize>,
        f: &mut F,
    ) -> bool {
        if left == 0 {
            return f(scratch);
        }
        for v in next..=r.saturating_sub(left - 1) {
            scratch.push(v);
            if !rec(v + 1, r, left - 1, scratch, f) {
                scratch.pop();
                return false;
            }
            scratch.pop();
        }
        true
    }
    rec(1, r, l, &mut Vec::with_capacity(l), f)
}

/// Checks the defining property of a Steiner system S(l, m, r): every
/// `l`-subset of the vertex set lies in exactly one block. Returns `None`
/// when the property holds, otherwise the first violating subset in
/// lexicographic order together with its cover count.
pub fn verify_steiner(design: &BlockDesign) -> Option<SteinerViolation> {
    let mut violation = None;
    for_each_subset(design.r, design.l, &mut |subset| {
        let count = design
            .blocks
            .iter()
            .filter(|b| contains_sorted(b, subset))
            .count();
        if count != 1 {
            violation = Some(SteinerViolation {
                subset: subset.to_vec(),
                cover_count: count,
            });
            false
        } else {
            true
        }
    });
    violation
}

/// The unique candidate pure f-vector of a Steiner system S(l, m, r):
/// `f_i = C(r, i)` for `i <= l` and `f_i = b * C(m, i)` for `l < i <= m`,
/// where `b = C(r, l) / C(m, l)` is the block count.
///
/// Errors with the failing level when the standard divisibility conditions
/// `C(m-j, l-j) | C(r-j, l-j)` (j = 0..l-1) rule the design out by counting.
pub fn steiner_f_vector(l: usize, m: usize, r: usize) -> Result<IntSeq> {
    if l == 0 || l > m || m > r {
        return Err(Error::Invalid(format!(
            "steiner parameters need 1 <= l <= m <= r, got ({l},{m},{r})"
        )));
    }
    for j in 0..l {
        let num = binomial((r - j) as u64, (l - j) as u64);
        let den = binomial((m - j) as u64, (l - j) as u64);
        if !(&num % &den).is_zero() {
            let g = num.gcd(&den);
            return Err(Error::DesignCounting {
                l,
                m,
                r,
                level: j,
                num: (&num / &g).to_u64().unwrap_or(u64::MAX),
                den: (&den / &g).to_u64().unwrap_or(u64::MAX),
            });
        }
    }
    let b = binomial(r as u64, l as u64) / binomial(m as u64, l as u64);
    let mut f = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let v = if i <= l {
            binomial(r as u64, i as u64)
        } else {
            &b * binomial(m as u64, i as u64)
        };
        f.push(v.to_u64().ok_or(Error::EntryOverflow)?);
    }
    Ok(IntSeq::new(f))
}

/// Builds a Steiner triple system S(2, 3, r) for every admissible order
/// `r = 1 or 3 (mod 6)`.
///
/// Orders `r = 6n+3` use the Bose construction over `Z_{2n+1} x {0,1,2}`;
/// orders `r = 6n+1` use the Skolem construction over
/// `{inf} u Z_{2n} x {0,1,2}` with the half-idempotent symmetrization
/// `sigma(2k) = k`, `sigma(2k+1) = n+k` of addition on `Z_{2n}`.
pub fn construct_sts(r: usize) -> Result<BlockDesign> {
    match r % 6 {
        3 => {
            let n = (r - 3) / 6;
            let q = 2 * n + 1;
            let label = |i: usize, j: usize| 1 + (i % q) + j * q;
            let mut blocks = Vec::with_capacity(q * (3 * n + 1));
            for i in 0..q {
                blocks.push(vec![label(i, 0), label(i, 1), label(i, 2)]);
            }
            for i in 0..q {
                for k in (i + 1)..q {
                    // (n+1) halves i+k in Z_{2n+1} since 2(n+1) = 1 (mod q).
                    let mid = ((i + k) * (n + 1)) % q;
                    for j in 0..3 {
                        blocks.push(vec![label(i, j), label(k, j), label(mid, (j + 1) % 3)]);
                    }
                }
            }
            BlockDesign::new(2, 3, r, blocks)
        }
        1 => {
            let n = (r - 1) / 6;
            if n == 0 {
                return BlockDesign::new(2, 3, r, Vec::new());
            }
            let q = 2 * n;
            let infinity = r;
            let label = |i: usize, j: usize| 1 + (i % q) + j * q;
            let sigma = |x: usize| if x % 2 == 0 { x / 2 } else { n + (x - 1) / 2 };
            let mut blocks = Vec::with_capacity(n * (6 * n + 1));
            for k in 0..n {
                blocks.push(vec![label(k, 0), label(k, 1), label(k, 2)]);
            }
            for k in 0..n {
                for j in 0..3 {
                    blocks.push(vec![infinity, label(n + k, j), label(k, (j + 1) % 3)]);
                }
            }
            for x in 0..q {
                for y in (x + 1)..q {
                    let s = sigma((x + y) % q);
                    for j in 0..3 {
                        blocks.push(vec![label(x, j), label(y, j), label(s, (j + 1) % 3)]);
                    }
                }
            }
            BlockDesign::new(2, 3, r, blocks)
        }
        _ => Err(Error::StsCongruence(r)),
    }
}

/// Translates each block into a squarefree monomial on `r` variables
/// (vertex `v` becomes variable `x_v` with exponent 1).
pub fn design_to_monomials(design: &BlockDesign) -> Vec<Monomial> {
    design
        .blocks
        .iter()
        .map(|block| {
            let mut exps = vec![0u16; design.r];
            for &v in block {
                exps[v - 1] = 1;
            }
            Monomial::new(exps)
        })
        .collect()
}

/// Reads a block design back from squarefree generators of one common
/// degree m (the block size); `l` tags the subset size the design is meant
/// to cover. The vertex count is the widest ambient among the generators.
pub fn design_from_monomials(gens: &[Monomial], l: usize) -> Result<BlockDesign> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let r = gens.iter().map(Monomial::num_vars).max().unwrap_or(0);
    let m = gens[0].degree() as usize;
    let mut blocks = Vec::with_capacity(gens.len());
    for (index, g) in gens.iter().enumerate() {
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree(g.to_string()));
        }
        if g.degree() as usize != m {
            return Err(Error::BlockSize {
                m,
                r,
                index,
                got: g.degree() as usize,
            });
        }
        blocks.push(g.support_vars().into_iter().map(|v| v + 1).collect());
    }
    BlockDesign::new(l, m, r, blocks)
}

/// The candidate pure f-vector of the point-line incidence system of a
/// projective plane of order `q`: the Steiner system S(2, q+1, q^2+q+1).
pub fn projective_plane_sequence(q: u64) -> Result<IntSeq> {
    if q < 2 {
        return Err(Error::PlaneOrder(q));
    }
    let r = q * q + q + 1;
    let (m, r) = (
        usize::try_from(q + 1).map_err(|_| Error::EntryOverflow)?,
        usize::try_from(r).map_err(|_| Error::EntryOverflow)?,
    );
    steiner_f_vector(2, m, r)
}

/// Outcome of the quadratic-residue screen for projective-plane orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrcScreen {
    /// `q = 1 or 2 (mod 4)` and `q` is not a sum of two squares: no plane
    /// of order `q` exists.
    Fails,
    /// `q = 1 or 2 (mod 4)` and `q` is a sum of two squares: the screen is
    /// silent (a plane may or may not exist).
    Passes,
    /// `q = 0 or 3 (mod 4)`: the screen does not apply.
    NotApplicable,
}

/// True iff `n` is a sum of two integer squares: every prime `p = 3 (mod 4)`
/// divides `n` to an even power (exact trial-division factorization).
fn is_sum_of_two_squares(mut n: u64) -> bool {
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut exp = 0u32;
            while n % p == 0 {
                n /= p;
                exp += 1;
            }
            if p % 4 == 3 && exp % 2 == 1 {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // Remaining n is 1 or a prime appearing to the first power.
    !(n > 1 && n % 4 == 3)
}

/// Screens a candidate plane order `q >= 2` by the classical necessary
/// condition: when `q = 1 or 2 (mod 4)`, a plane of order `q` forces `q` to
/// be a sum of two integer squares.
pub fn brc_screen(q: u64) -> Result<BrcScreen> {
    if q < 2 {
        return Err(Error::PlaneOrder(q));
    }
    match q % 4 {
        1 | 2 => {
            if is_sum_of_two_squares(q) {
                Ok(BrcScreen::Passes)
            } else {
                Ok(BrcScreen::Fails)
            }
        }
        _ => Ok(BrcScreen::NotApplicable),
    }
}

/// Counts labeled Steiner triple systems on `r` points by exhaustive
/// backtracking over the lexicographically smallest uncovered pair.
/// Supported for `r in {3, 7, 9}` where the search is instantaneous.
pub fn count_labeled_sts(r: usize) -> Result<u64> {
    if !matches!(r, 3 | 7 | 9) {
        return Err(Error::StsCountRange(r));
    }
    let pair = |a: usize, b: usize| {
        // 0-based index of the pair {a, b}, 1 <= a < b <= r.
        (a - 1) * r - (a - 1) * a / 2 + (b - a - 1)
    };
    fn rec(r: usize, covered: &mut [bool], pair: &dyn Fn(usize, usize) -> usize) -> u64 {
        let mut first = None;
        'outer: for a in 1..=r {
            for b in (a + 1)..=r {
                if !covered[pair(a, b)] {
                    first = Some((a, b));
                    break 'outer;
                }
            }
        }
        let Some((a, b)) = first else {
            return 1;
        };
        let mut total = 0;
        // The third vertex must exceed b: any c < b would leave a pair
        // lexicographically before (a, b) uncovered, contradicting choice.
        for c in (b + 1)..=r {
            let (pac, pbc) = (pair(a, c), pair(b, c));
            if covered[pac] || covered[pbc] {
                continue;
            }
            let pab = pair(a, b);
            covered[pab] = true;
            covered[pac] = true;
            covered[pbc] = true;
            total += rec(r, covered, pair);
            covered[pab] = false;
            covered[pac] = false;
            covered[pbc] = false;
        }
        total
    }
    let mut covered = vec![false; r * (r - 1) / 2];
    Ok(rec(r, &mut covered, &pair))
}

/// Parses the design file format: a header line `l m r`, then one block per
/// line as whitespace-separated 1-based vertex indices. Blank lines and
/// `#`-comments are skipped.
pub fn parse_design(text: &str) -> Result<BlockDesign> {
    let mut lines = text
        .lines()
        .map(|line| line.split('#').next().unwrap_or("").trim())
        .filter(|line| !line.is_empty());
    let header = lines.next().ok_or(Error::EmptySequence)?;
    let fields: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Invalid(format!("bad design header {header:?}")))
        })
        .collect::<Result<_>>()?;
    let [l, m, r] = fields.as_slice() else {
        return Err(Error::Invalid(format!(
            "design header must be `l m r`, got {header:?}"
        )));
    };
    let mut blocks = Vec::new();
    for line in lines {
        let block: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Invalid(format!("bad block line {line:?}")))
            })
            .collect::<Result<_>>()?;
        blocks.push(block);
    }
    BlockDesign::new(*l, *m, *r, blocks)
}

/// Renders a design in the file format read by [`parse_design`].
pub fn format_design(design: &BlockDesign) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", design.l, design.m, design.r);
    for block in &design.blocks {
        let line: Vec<String> = block.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}
