//! Monomials and order ideals: divisor closure, degree-stratified h-vectors,
//! purity, support, and canonical forms under variable permutation.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sequences::IntSeq;

/// A monomial as an exponent vector over a fixed ambient variable set.
///
/// The ambient size is the length of the exponent vector; padding zeros are
/// allowed and significant for variable indexing, but not for equality of the
/// underlying monomial in a common ambient (callers pad to a shared width via
/// [`divisor_closure`] and friends).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    /// The monomial 1 in an ambient with `num_vars` variables.
    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// True iff `self` divides `other` (componentwise <=, padding with zeros).
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.exps.len() > other.exps.len()
            && self.exps[other.exps.len()..].iter().any(|&e| e > 0)
        {
            return false;
        }
        self.exps
            .iter()
            .zip(other.exps.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a <= b)
    }

    /// Same monomial re-embedded in a wider ambient.
    pub fn padded(&self, num_vars: usize) -> Self {
        let mut exps = self.exps.clone();
        exps.resize(exps.len().max(num_vars), 0);
        Monomial { exps }
    }

    /// Indices (0-based) of variables with positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for Monomial {
    /// Renders as `x1^3*x2^2*x3` (caret omitted for exponent 1); the degree-0
    /// monomial renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses `x1^3*x2^2*x3` (and the y-variable spelling `y1^2*y2^2`).
    /// The literal `1` is the degree-0 monomial. Ambient size is the largest
    /// variable index mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::MonomialParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.trim();
        if body.is_empty() {
            return Err(bad("empty input"));
        }
        if body == "1" {
            return Ok(Monomial::one(0));
        }
        let mut pairs: Vec<(usize, u16)> = Vec::new();
        for factor in body.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .or_else(|| factor.strip_prefix('y'))
                .ok_or_else(|| bad("factor must start with x or y"))?;
            let (idx_str, exp_str) = match rest.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (rest, None),
            };
            let idx: usize = idx_str
                .trim()
                .parse()
                .map_err(|_| bad("bad variable index"))?;
            if idx == 0 {
                return Err(bad("variable indices are 1-based"));
            }
            let exp: u16 = match exp_str {
                Some(e) => e.trim().parse().map_err(|_| bad("bad exponent"))?,
                None => 1,
            };
            pairs.push((idx, exp));
        }
        let width = pairs.iter().map(|&(i, _)| i).max().unwrap_or(0);
        let mut exps = vec![0u16; width];
        for (idx, exp) in pairs {
            exps[idx - 1] = exps[idx - 1]
                .checked_add(exp)
                .ok_or_else(|| bad("exponent overflow"))?;
        }
        Ok(Monomial { exps })
    }
}

/// Parses a generator list: comma- or semicolon-separated monomials, or one
/// monomial per line with `#` comments.
pub fn parse_generators(text: &str) -> Result<Vec<Monomial>> {
    let mut gens = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for item in line.split([',', ';']) {
            let item = item.trim();
            if !item.is_empty() {
                gens.push(item.parse()?);
            }
        }
    }
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(gens)
}

/// A degree-stratified, downward-closed set of monomials.
///
/// Stratum `d` holds the degree-`d` members, sorted; stratum 0 is `{1}`.
/// The generators are the maximal members under divisibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderIdeal {
    num_vars: usize,
    strata: Vec<Vec<Monomial>>,
    generators: Vec<Monomial>,
}

impl OrderIdeal {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Strata by degree; index d lists the degree-d members in ascending
    /// exponent-vector order.
    pub fn strata(&self) -> &[Vec<Monomial>] {
        &self.strata
    }

    /// The maximal members under divisibility, in ascending order.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn socle_degree(&self) -> usize {
        self.strata.len() - 1
    }

    /// Entry i counts the monomials of degree i.
    pub fn h_vector(&self) -> IntSeq {
        IntSeq::new(self.strata.iter().map(|s| s.len() as u64).collect())
    }

    /// True iff all maximal members share one degree.
    pub fn is_pure(&self) -> bool {
        let mut degs = self.generators.iter().map(|g| g.degree());
        match degs.next() {
            None => true,
            Some(first) => degs.all(|d| d == first),
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let d = m.degree() as usize;
        let padded = m.padded(self.num_vars);
        if padded.num_vars() != self.num_vars {
            return false;
        }
        self.strata
            .get(d)
            .is_some_and(|s| s.binary_search(&padded).is_ok())
    }

    pub fn total_monomials(&self) -> usize {
        self.strata.iter().map(|s| s.len()).sum()
    }
}

/// The smallest order ideal containing `gens` (their divisor closure).
///
/// Generators may have ragged ambient widths; they are padded to the widest.
/// Errors on an empty generator set.
pub fn divisor_closure(gens: &[Monomial]) -> Result<OrderIdeal> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let num_vars = gens.iter().map(|g| g.num_vars()).max().unwrap_or(0);
    let top = gens.iter().map(|g| g.degree()).max().unwrap_or(0) as usize;

    let mut strata_sets: Vec<HashSet<Vec<u16>>> = vec![HashSet::new(); top + 1];
    for g in gens {
        let padded = g.padded(num_vars);
        strata_sets[padded.degree() as usize].insert(padded.exps);
    }
    // Degree-by-degree downward: each stratum is generated by single-variable
    // decrements of the stratum above.
    for d in (1..=top).rev() {
        let (lower, upper) = {
            let (a, b) = strata_sets.split_at_mut(d);
            (&mut a[d - 1], &b[0])
        };
        for exps in upper {
            for v in 0..num_vars {
                if exps[v] > 0 {
                    let mut down = exps.clone();
                    down[v] -= 1;
                    if !lower.contains(&down) {
                        lower.insert(down);
                    }
                }
            }
        }
    }

    let strata: Vec<Vec<Monomial>> = strata_sets
        .into_iter()
        .map(|set| {
            let mut v: Vec<Monomial> = set.into_iter().map(Monomial::new).collect();
            v.sort();
            v
        })
        .collect();

    // Maximal members are the generators that divide no other generator.
    let mut uniq: Vec<Monomial> = gens.iter().map(|g| g.padded(num_vars)).collect();
    uniq.sort();
    uniq.dedup();
    let mut maximal: Vec<Monomial> = uniq
        .iter()
        .filter(|g| !uniq.iter().any(|other| *g != other && g.divides(other)))
        .cloned()
        .collect();
    maximal.sort();

    Ok(OrderIdeal {
        num_vars,
        strata,
        generators: maximal,
    })
}

/// Number of variables appearing with positive exponent in the union of
/// supports.
pub fn support(gens: &[Monomial]) -> usize {
    let width = gens.iter().map(|g| g.num_vars()).max().unwrap_or(0);
    let mut used = vec![false; width];
    for g in gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                used[i] = true;
            }
        }
    }
    used.iter().filter(|&&u| u).count()
}

/// Exact canonicalization is feasible up to this support (full enumeration of
/// column arrangements with identical-column collapsing); beyond it,
/// [`canonical_form`] falls back to a deterministic column-signature heuristic
/// that is sound for "equal forms => isomorphic sets" but may distinguish
/// isomorphic sets.
pub const CANONICAL_EXACT_SUPPORT: usize = 8;

/// Canonical representative of a generator set's orbit under variable
/// permutation: the lexicographically least sorted exponent matrix (rows =
/// generators sorted ascending, compared row-major), over all column
/// permutations. Unused variables sort to the front as all-zero columns.
///
/// Exact for supports up to [`CANONICAL_EXACT_SUPPORT`]; see there for the
/// fallback regime. Two generator sets related by a variable permutation have
/// equal canonical forms (exact regime), and equal canonical forms are always
/// related by a variable permutation (both regimes).
pub fn canonical_form(gens: &[Monomial]) -> Vec<Monomial> {
    let width = gens.iter().map(|g| g.num_vars()).max().unwrap_or(0);
    let mut rows: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            e.resize(width, 0);
            e
        })
        .collect();
    rows.sort();
    rows.dedup();
    let refs: Vec<&[u16]> = rows.iter().map(|r| r.as_slice()).collect();
    let out = canonical_matrix(&refs, width);
    out.into_iter().map(Monomial::new).collect()
}

/// Canonicalizes an exponent matrix (rows deduplicated and sorted ascending).
pub(crate) fn canonical_matrix(rows: &[&[u16]], width: usize) -> Vec<Vec<u16>> {
    let used: Vec<usize> = (0..width)
        .filter(|&c| rows.iter().any(|r| r[c] > 0))
        .collect();
    if used.len() <= CANONICAL_EXACT_SUPPORT {
        let mut best: Option<Vec<Vec<u16>>> = None;
        for_each_column_arrangement(rows, width, &used, &mut |candidate| {
            if best.as_ref().map_or(true, |b| candidate < b.as_slice()) {
                best = Some(candidate.to_vec());
            }
            true
        });
        best.unwrap_or_else(|| rows.iter().map(|r| r.to_vec()).collect())
    } else {
        // Heuristic: order used columns by descending sorted-content
        // signature (deterministic; ties broken by original index).
        let mut keyed: Vec<(Vec<u16>, usize)> = used
            .iter()
            .map(|&c| {
                let mut col: Vec<u16> = rows.iter().map(|r| r[c]).collect();
                col.sort_unstable_by(|a, b| b.cmp(a));
                (col, c)
            })
            .collect();
        keyed.sort();
        let order: Vec<usize> = keyed.into_iter().map(|(_, c)| c).collect();
        let z = width - order.len();
        let mut out: Vec<Vec<u16>> = rows
            .iter()
            .map(|r| {
                let mut row = vec![0u16; width];
                for (pos, &src) in order.iter().enumerate() {
                    row[z + pos] = r[src];
                }
                row
            })
            .collect();
        out.sort();
        out
    }
}

/// True iff `rows` (sorted ascending, shared ambient `width`) is the canonical
/// representative of its orbit, provided its support does not exceed
/// `exact_cap`; larger supports are accepted unconditionally (the search
/// engine's documented weak regime: completeness is preserved, only duplicate
/// orbits get through).
pub(crate) fn is_canonical_set(rows: &[&[u16]], width: usize, exact_cap: usize) -> bool {
    let used: Vec<usize> = (0..width)
        .filter(|&c| rows.iter().any(|r| r[c] > 0))
        .collect();
    if used.len() > exact_cap {
        return true;
    }
    let mut canonical = true;
    for_each_column_arrangement(rows, width, &used, &mut |candidate| {
        let beats = candidate
            .iter()
            .map(|row| row.as_slice())
            .lt(rows.iter().copied());
        if beats {
            canonical = false;
            return false; // stop: some arrangement beats the current one
        }
        true
    });
    canonical
}

/// Enumerates, for every arrangement of the used columns (identical columns
/// collapsed, since permuting equal columns cannot change the matrix), the
/// resulting row-sorted matrix with all-zero columns leading. The visitor
/// returns `false` to stop early.
fn for_each_column_arrangement(
    rows: &[&[u16]],
    width: usize,
    used: &[usize],
    visit: &mut dyn FnMut(&[Vec<u16>]) -> bool,
) {
    let k = rows.len();
    let s = used.len();
    let z = width - s;

    // Collapse identical used columns into classes: permuting equal columns
    // cannot change the matrix, so one representative per class suffices.
    let mut classes: Vec<(Vec<u16>, usize)> = Vec::new(); // (content, multiplicity)
    for &c in used {
        let content: Vec<u16> = rows.iter().map(|r| r[c]).collect();
        match classes.iter_mut().find(|(cc, _)| *cc == content) {
            Some((_, mult)) => *mult += 1,
            None => classes.push((content, 1)),
        }
    }

    struct Arranger<'a> {
        classes: &'a [(Vec<u16>, usize)],
        s: usize,
        z: usize,
        scratch: Vec<Vec<u16>>,
        stop: bool,
    }

    impl Arranger<'_> {
        fn rec(
            &mut self,
            remaining: &mut [usize],
            chosen: &mut Vec<usize>,
            visit: &mut dyn FnMut(&[Vec<u16>]) -> bool,
        ) {
            if self.stop {
                return;
            }
            if chosen.len() == self.s {
                for (row_i, row) in self.scratch.iter_mut().enumerate() {
                    for x in row.iter_mut() {
                        *x = 0;
                    }
                    for (pos, &class) in chosen.iter().enumerate() {
                        row[self.z + pos] = self.classes[class].0[row_i];
                    }
                }
                self.scratch.sort();
                if !visit(&self.scratch) {
                    self.stop = true;
                }
                return;
            }
            for class in 0..self.classes.len() {
                if remaining[class] == 0 {
                    continue;
                }
                remaining[class] -= 1;
                chosen.push(class);
                self.rec(remaining, chosen, visit);
                chosen.pop();
                remaining[class] += 1;
            }
        }
    }

    let mut chosen: Vec<usize> = Vec::with_capacity(s); // class index per position
    let mut remaining: Vec<usize> = classes.iter().map(|&(_, m)| m).collect();
    let mut arranger = Arranger {
        classes: &classes,
        s,
        z,
        scratch: vec![vec![0u16; width]; k],
        stop: false,
    };
    arranger.rec(&mut remaining, &mut chosen, visit);
}
