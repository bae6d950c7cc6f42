//! Simplicial complexes and matroids: face counts, purity, matroid
//! recognition by restriction purity (with a basis-exchange fast path),
//! the f-to-h transform, and a purity harness for matroid h-vectors.

use std::collections::HashSet;
use std::fmt::Write as _;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::binom::binomial_u64;
use crate::error::{Error, Result};
use crate::monomials::Monomial;
use crate::purity::{decide_pure, PurityVerdict, SearchBudget};
use crate::sequences::IntSeq;

/// Largest vertex count accepted at construction (facets are u32 masks).
pub const MAX_VERTICES: usize = 32;

/// Largest vertex count for which matroid recognition (a scan over all
/// 2^r restrictions) is allowed.
pub const MATROID_VERTEX_CAP: usize = 24;

/// A simplicial complex given by its facets over vertices `1..=r`.
///
/// Facets are stored as bit masks (vertex `v` = bit `v-1`), sorted
/// ascending, normalized to an antichain: a supplied face contained in
/// another is dropped, so the stored facets are exactly the maximal faces
/// of the generated complex. Every vertex must appear in some facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    /// Builds a complex from 1-based vertex lists.
    pub fn new(num_vertices: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if num_vertices > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: num_vertices,
                cap: MAX_VERTICES,
            });
        }
        let mut masks = Vec::with_capacity(facets.len());
        for (index, facet) in facets.iter().enumerate() {
            let mut mask = 0u32;
            for &vertex in facet {
                if vertex == 0 || vertex > num_vertices {
                    return Err(Error::BlockVertex {
                        index,
                        vertex,
                        r: num_vertices,
                    });
                }
                mask |= 1 << (vertex - 1);
            }
            masks.push(mask);
        }
        Self::from_facet_masks(num_vertices, masks)
    }

    /// Builds a complex directly from facet bit masks (vertex `v` = bit
    /// `v-1`).
    pub fn from_facet_masks(num_vertices: usize, masks: Vec<u32>) -> Result<Self> {
        if num_vertices > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: num_vertices,
                cap: MAX_VERTICES,
            });
        }
        let full: u32 = if num_vertices == 32 {
            u32::MAX
        } else {
            (1u32 << num_vertices) - 1
        };
        let mut covered = 0u32;
        for (index, &mask) in masks.iter().enumerate() {
            if mask & !full != 0 {
                let vertex = 32 - (mask & !full).leading_zeros() as usize;
                return Err(Error::BlockVertex {
                    index,
                    vertex,
                    r: num_vertices,
                });
            }
            covered |= mask;
        }
        if covered != full {
            let missing = (!covered & full).trailing_zeros() as usize + 1;
            return Err(Error::UnusedVertex(missing));
        }
        // Normalize to the antichain of maximal faces.
        let mut maximal: Vec<u32> = Vec::with_capacity(masks.len());
        for &m in &masks {
            if masks.iter().any(|&o| o != m && m & o == m && o & m != o) {
                continue; // strictly contained in another supplied face
            }
            if !maximal.contains(&m) {
                maximal.push(m);
            }
        }
        maximal.sort_unstable();
        Ok(Self {
            num_vertices,
            facets: maximal,
        })
    }

    /// Number of vertices `r`.
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Facets as sorted bit masks.
    pub fn facet_masks(&self) -> &[u32] {
        &self.facets
    }

    /// Facets as sorted 1-based vertex lists.
    pub fn facet_sets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| mask_vertices(m)).collect()
    }

    /// Dimension of the complex: largest facet cardinality minus one
    /// (`-1` for the complex `{ {} }`).
    pub fn dimension(&self) -> i64 {
        self.facets
            .iter()
            .map(|m| m.count_ones() as i64)
            .max()
            .unwrap_or(0)
            - 1
    }
}

fn mask_vertices(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// All faces of the complex, as masks (always contains the empty face).
fn face_set(complex: &SimplicialComplex) -> HashSet<u32> {
    let mut faces = HashSet::new();
    faces.insert(0u32);
    let mut stack: Vec<u32> = complex.facets.clone();
    for &f in &stack {
        faces.insert(f);
    }
    while let Some(face) = stack.pop() {
        let mut rest = face;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let sub = face ^ bit;
            if faces.insert(sub) {
                stack.push(sub);
            }
        }
    }
    faces
}

/// The face-count vector: entry `i` counts faces of cardinality `i`
/// (so entry 0 counts the empty face and is always 1).
pub fn f_vector(complex: &SimplicialComplex) -> IntSeq {
    let dim = complex
        .facets
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let mut f = vec![0u64; dim + 1];
    for face in face_set(complex) {
        f[face.count_ones() as usize] += 1;
    }
    IntSeq::new(f)
}

/// True iff all facets have the same cardinality.
pub fn is_pure_complex(complex: &SimplicialComplex) -> bool {
    let mut sizes = complex.facets.iter().map(|m| m.count_ones());
    match sizes.next() {
        None => true,
        Some(first) => sizes.all(|s| s == first),
    }
}

/// Purity of the restriction of `facets` to the vertex subset `w`:
/// the maximal masks among `{F & w}` must share one popcount.
fn restriction_is_pure(facets: &[u32], w: u32) -> bool {
    let mut cut: Vec<u32> = facets.iter().map(|&f| f & w).collect();
    cut.sort_unstable();
    cut.dedup();
    let max_size = cut.iter().map(|m| m.count_ones()).max().unwrap_or(0);
    for (i, &x) in cut.iter().enumerate() {
        if x.count_ones() == max_size {
            continue;
        }
        let dominated = cut.iter().enumerate().any(|(j, &y)| i != j && x & y == x);
        if !dominated {
            return false; // x is a maximal face of the restriction, but small
        }
    }
    true
}

/// Scans vertex subsets `W` in ascending mask order for one whose
/// restriction is impure. `None` means every restriction is pure, i.e. the
/// complex is the independence complex of a matroid.
pub fn matroid_violation(complex: &SimplicialComplex) -> Result<Option<Vec<usize>>> {
    let r = complex.num_vertices;
    if r > MATROID_VERTEX_CAP {
        return Err(Error::TooManyVertices {
            got: r,
            cap: MATROID_VERTEX_CAP,
        });
    }
    let total: u64 = 1u64 << r;
    let facets = &complex.facets;

    #[cfg(feature = "parallel")]
    if r >= 16 {
        let hit = (0..total)
            .into_par_iter()
            .find_first(|&w| !restriction_is_pure(facets, w as u32));
        return Ok(hit.map(|w| mask_vertices(w as u32)));
    }

    for w in 0..total {
        if !restriction_is_pure(facets, w as u32) {
            return Ok(Some(mask_vertices(w as u32)));
        }
    }
    Ok(None)
}

/// True iff every restriction of the complex is pure.
pub fn is_matroid(complex: &SimplicialComplex) -> Result<bool> {
    Ok(matroid_violation(complex)?.is_none())
}

/// Matroid recognition by the basis-exchange axiom: the complex must be
/// pure, and for all facets `A`, `B` and every `x in A \ B` there must be a
/// `y in B \ A` with `A - x + y` again a facet. Agrees with
/// [`matroid_violation`] on every complex; used as a fast cross-check.
pub fn matroid_by_exchange(complex: &SimplicialComplex) -> bool {
    if !is_pure_complex(complex) {
        return false;
    }
    let facets: HashSet<u32> = complex.facets.iter().copied().collect();
    for &a in &complex.facets {
        for &b in &complex.facets {
            if a == b {
                continue;
            }
            let mut only_a = a & !b;
            while only_a != 0 {
                let x = only_a & only_a.wrapping_neg();
                only_a ^= x;
                let mut only_b = b & !a;
                let mut found = false;
                while only_b != 0 {
                    let y = only_b & only_b.wrapping_neg();
                    only_b ^= y;
                    if facets.contains(&((a ^ x) | y)) {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

/// Converts face counts to the h-vector of the associated graded quotient:
/// `h_k = sum_{i=0..k} (-1)^{k-i} C(d-i, k-i) f_i`, where `d` is the
/// dimension plus one and `f` must have exactly `d+1` entries (entry 0
/// counts the empty face). Trailing zeros are trimmed.
pub fn f_to_h(f: &IntSeq, d: usize) -> Result<IntSeq> {
    let want = d + 1;
    if f.len() != want {
        return Err(Error::FVectorLength {
            got: f.len(),
            d,
            want,
        });
    }
    let fs = f.as_slice();
    let mut h = Vec::with_capacity(want);
    for k in 0..=d {
        let mut acc: i128 = 0;
        for (i, &fi) in fs.iter().enumerate().take(k + 1) {
            let c = binomial_u64((d - i) as u64, (k - i) as u64).ok_or(Error::EntryOverflow)?;
            let term = c as i128 * fi as i128;
            if (k - i) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if acc < 0 {
            return Err(Error::NegativeHEntry {
                index: k,
                value: i64::try_from(acc).unwrap_or(i64::MIN),
            });
        }
        h.push(u64::try_from(acc).map_err(|_| Error::EntryOverflow)?);
    }
    Ok(IntSeq::new(h))
}

/// Inverse of [`f_to_h`]: `f_i = sum_{k=0..i} C(d-k, i-k) h_k`. The
/// h-vector may be shorter than `d+1` (missing entries are zero).
pub fn h_to_f(h: &IntSeq, d: usize) -> Result<IntSeq> {
    if h.len() > d + 1 {
        return Err(Error::FVectorLength {
            got: h.len(),
            d,
            want: d + 1,
        });
    }
    let hs = h.as_slice();
    let mut f = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut acc: u128 = 0;
        for (k, &hk) in hs.iter().enumerate().take(i + 1) {
            let c = binomial_u64((d - k) as u64, (i - k) as u64).ok_or(Error::EntryOverflow)?;
            acc += c as u128 * hk as u128;
        }
        f.push(u64::try_from(acc).map_err(|_| Error::EntryOverflow)?);
    }
    Ok(IntSeq::new(f))
}

/// Decides purity of a matroid's h-vector: errors with the violating
/// restriction if the complex is not a matroid, otherwise runs the purity
/// search on `f_to_h(f_vector, dimension+1)`.
pub fn stanley_check(complex: &SimplicialComplex, budget: &SearchBudget) -> Result<PurityVerdict> {
    if let Some(witness) = matroid_violation(complex)? {
        return Err(Error::NotMatroid { witness });
    }
    let f = f_vector(complex);
    let d = f.len().saturating_sub(1);
    let h = f_to_h(&f, d)?;
    decide_pure(&h, budget)
}

/// Inclusion-minimal vertex subsets that are *not* faces (the exponent sets
/// of the squarefree monomial generators of the face ring's defining
/// ideal). Sorted by cardinality, then lexicographically.
pub fn stanley_reisner_nonfaces(complex: &SimplicialComplex) -> Vec<Vec<usize>> {
    let faces = face_set(complex);
    let r = complex.num_vertices;
    let full: u64 = 1u64 << r;
    let mut out: Vec<u32> = Vec::new();
    for mask in 1..full {
        let mask = mask as u32;
        if faces.contains(&mask) {
            continue;
        }
        let mut rest = mask;
        let mut minimal = true;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            if !faces.contains(&(mask ^ bit)) {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(mask);
        }
    }
    out.sort_by_key(|m| (m.count_ones(), *m));
    out.into_iter().map(mask_vertices).collect()
}

/// The squarefree monomial attached to each facet (vertex `v` becomes
/// variable `x_v`), in the complex's full ambient width.
pub fn facet_monomials(complex: &SimplicialComplex) -> Vec<Monomial> {
    complex
        .facets
        .iter()
        .map(|&mask| {
            let mut exps = vec![0u16; complex.num_vertices];
            for v in mask_vertices(mask) {
                exps[v - 1] = 1;
            }
            Monomial::new(exps)
        })
        .collect()
}

/// The shifted sum `h''_0 = 1`, `h''_i = h_i + h'_{i-1}` of two sequences —
/// an empirical probe with no purity claim attached.
pub fn shifted_sum(h: &IntSeq, hp: &IntSeq) -> IntSeq {
    let len = h.len().max(hp.len() + 1).max(1);
    let mut out = Vec::with_capacity(len);
    out.push(1u64);
    for i in 1..len {
        let a = h.as_slice().get(i).copied().unwrap_or(0);
        let b = hp.as_slice().get(i - 1).copied().unwrap_or(0);
        out.push(a + b);
    }
    IntSeq::new(out)
}

/// Visits every complex with `num_facets >= 1` facets of equal cardinality
/// `facet_size` covering all of `1..=num_vertices` (i.e. every pure complex
/// of that uniform facet size), as a slice of facet masks in ascending
/// order. Equal-size distinct masks always form an antichain, so each visit
/// is a valid facet list.
pub fn for_each_uniform_complex<F: FnMut(&[u32])>(
    num_vertices: usize,
    facet_size: usize,
    visit: &mut F,
) {
    if facet_size == 0 || facet_size > num_vertices {
        return;
    }
    let mut pool = Vec::new();
    collect_k_masks(num_vertices, facet_size, 0, 0, &mut pool);
    let full: u32 = if num_vertices == 32 {
        u32::MAX
    } else {
        (1u32 << num_vertices) - 1
    };
    let mut chosen = Vec::new();
    subset_rec(&pool, 0, 0, full, &mut chosen, visit);
}

fn collect_k_masks(n: usize, k: usize, start: usize, acc: u32, out: &mut Vec<u32>) {
    if k == 0 {
        out.push(acc);
        return;
    }
    for v in start..=n - k {
        collect_k_masks(n, k - 1, v + 1, acc | 1 << v, out);
    }
}

fn subset_rec<F: FnMut(&[u32])>(
    pool: &[u32],
    next: usize,
    union: u32,
    full: u32,
    chosen: &mut Vec<u32>,
    visit: &mut F,
) {
    if !chosen.is_empty() && union == full {
        visit(chosen);
    }
    for i in next..pool.len() {
        chosen.push(pool[i]);
        subset_rec(pool, i + 1, union | pool[i], full, chosen, visit);
        chosen.pop();
    }
}

/// Parses the complex file format: first line the vertex count `r`, then
/// one facet per line as whitespace-separated 1-based vertex indices.
/// Blank lines and `#`-comments are skipped.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = text
        .lines()
        .map(|line| line.split('#').next().unwrap_or("").trim())
        .filter(|line| !line.is_empty());
    let header = lines.next().ok_or(Error::EmptySequence)?;
    let r: usize = header.trim().parse().map_err(|_| {
        Error::Invalid(format!(
            "complex header must be the vertex count, got {header:?}"
        ))
    })?;
    let mut facets = Vec::new();
    for line in lines {
        let facet: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Invalid(format!("bad facet line {line:?}")))
            })
            .collect::<Result<_>>()?;
        facets.push(facet);
    }
    SimplicialComplex::new(r, facets)
}

/// Renders a complex in the file format read by [`parse_complex`].
pub fn format_complex(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", complex.num_vertices);
    for facet in complex.facet_sets() {
        let line: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomials::divisor_closure;
    use crate::purity::PurityStatus;
    use crate::sequences::is_f_vector;

    fn cx(r: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(r, facets.iter().map(|f| f.to_vec()).collect()).unwrap()
    }

    #[test]
    fn construction_normalizes_and_validates() {
        let c = cx(4, &[&[1, 2, 3], &[2, 3, 4], &[2, 3]]);
        assert_eq!(c.facet_sets(), vec![vec![1, 2, 3], vec![2, 3, 4]]);
        assert_eq!(c.dimension(), 2);

        assert!(matches!(
            SimplicialComplex::new(4, vec![vec![1, 2, 3]]),
            Err(Error::UnusedVertex(4))
        ));
        assert!(matches!(
            SimplicialComplex::new(2, vec![vec![1, 2, 3]]),
            Err(Error::BlockVertex { vertex: 3, .. })
        ));
        assert!(matches!(
            SimplicialComplex::new(33, vec![vec![1]]),
            Err(Error::TooManyVertices { got: 33, cap: 32 })
        ));
    }

    #[test]
    fn face_counts_match_hand_enumeration() {
        assert_eq!(
            f_vector(&cx(4, &[&[1, 2, 3], &[2, 3, 4]])),
            IntSeq::new(vec![1, 4, 5, 2])
        );
        assert_eq!(
            f_vector(&cx(3, &[&[1, 2, 3]])),
            IntSeq::new(vec![1, 3, 3, 1])
        );
        assert_eq!(
            f_vector(&cx(4, &[&[1, 2], &[3, 4]])),
            IntSeq::new(vec![1, 4, 2])
        );
        for c in [
            cx(4, &[&[1, 2, 3], &[2, 3, 4]]),
            cx(3, &[&[1, 2, 3]]),
            cx(4, &[&[1, 2], &[3, 4]]),
            cx(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 1]]),
        ] {
            assert!(is_f_vector(f_vector(&c).as_slice()));
        }
    }

    #[test]
    fn purity_of_complexes() {
        assert!(is_pure_complex(&cx(4, &[&[1, 2, 3], &[2, 3, 4]])));
        assert!(!is_pure_complex(&cx(3, &[&[1, 2], &[3]])));
        assert!(is_pure_complex(&cx(5, &[&[1, 2, 3, 4, 5]])));
    }

    #[test]
    fn matroid_recognition_with_witnesses() {
        let u23 = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(matroid_violation(&u23).unwrap(), None);
        assert!(matroid_by_exchange(&u23));

        let split = cx(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(matroid_violation(&split).unwrap(), Some(vec![1, 2, 3]));
        assert!(!matroid_by_exchange(&split));

        let simplex = cx(5, &[&[1, 2, 3, 4, 5]]);
        assert_eq!(matroid_violation(&simplex).unwrap(), None);
        assert!(matroid_by_exchange(&simplex));

        let impure = cx(3, &[&[1, 2], &[3]]);
        assert!(matroid_violation(&impure).unwrap().is_some());
        assert!(!matroid_by_exchange(&impure));

        let wide = cx(25, &[&(1..=25).collect::<Vec<_>>()[..]]);
        assert!(matches!(
            matroid_violation(&wide),
            Err(Error::TooManyVertices { got: 25, cap: 24 })
        ));
    }

    #[test]
    fn both_recognizers_agree_on_all_small_two_uniform_complexes() {
        for n in 2..=5usize {
            let mut count = 0u64;
            for_each_uniform_complex(n, 2, &mut |masks| {
                count += 1;
                let c = SimplicialComplex::from_facet_masks(n, masks.to_vec()).unwrap();
                let by_restriction = matroid_violation(&c).unwrap().is_none();
                let by_exchange = matroid_by_exchange(&c);
                assert_eq!(by_restriction, by_exchange, "n={n} masks={masks:?}");
            });
            assert!(count > 0);
        }
    }

    #[test]
    fn uniform_enumeration_counts_covering_complexes() {
        let mut seen = Vec::new();
        for_each_uniform_complex(3, 2, &mut |masks| seen.push(masks.to_vec()));
        assert_eq!(seen.len(), 4); // three pairs + the full triangle

        let mut matroids = 0;
        for k in 1..=3usize {
            for_each_uniform_complex(3, k, &mut |masks| {
                let c = SimplicialComplex::from_facet_masks(3, masks.to_vec()).unwrap();
                if matroid_violation(&c).unwrap().is_none() {
                    matroids += 1;
                }
            });
        }
        assert_eq!(matroids, 6); // 4 two-uniform + vertex set + full simplex
    }

    #[test]
    fn f_h_transforms_match_polynomial_identities() {
        assert_eq!(
            f_to_h(&IntSeq::new(vec![1, 3, 3]), 2).unwrap(),
            IntSeq::new(vec![1, 1, 1])
        );
        assert_eq!(
            f_to_h(&IntSeq::new(vec![1, 4]), 1).unwrap(),
            IntSeq::new(vec![1, 3])
        );
        assert_eq!(
            f_to_h(&IntSeq::new(vec![1, 4, 5, 2]), 3).unwrap(),
            IntSeq::new(vec![1, 1])
        );

        assert!(matches!(
            f_to_h(&IntSeq::new(vec![1, 4, 5, 2]), 2),
            Err(Error::FVectorLength {
                got: 4,
                d: 2,
                want: 3
            })
        ));
        assert!(matches!(
            f_to_h(&IntSeq::new(vec![1, 1, 1]), 2),
            Err(Error::NegativeHEntry {
                index: 1,
                value: -1
            })
        ));

        // Round-trip through the inverse transform (examples with
        // nonnegative h; e.g. the full simplex has h = (1)).
        for (f, d) in [
            (IntSeq::new(vec![1, 3, 3]), 2usize),
            (IntSeq::new(vec![1, 4, 5, 2]), 3),
            (IntSeq::new(vec![1, 4, 6]), 2),
            (IntSeq::new(vec![1, 3, 3, 1]), 3),
        ] {
            let h = f_to_h(&f, d).unwrap();
            assert_eq!(h_to_f(&h, d).unwrap(), f, "f={f} d={d}");
        }
    }

    #[test]
    fn stanley_harness_runs_on_small_matroids() {
        let u23 = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let verdict = stanley_check(&u23, &SearchBudget::default()).unwrap();
        assert_eq!(verdict.status, PurityStatus::Pure);

        let split = cx(4, &[&[1, 2], &[3, 4]]);
        assert!(matches!(
            stanley_check(&split, &SearchBudget::default()),
            Err(Error::NotMatroid { witness }) if witness == vec![1, 2, 3]
        ));
    }

    #[test]
    fn minimal_nonfaces_match_hand_computation() {
        let c = cx(4, &[&[1, 2, 3], &[2, 3, 4]]);
        assert_eq!(stanley_reisner_nonfaces(&c), vec![vec![1, 4]]);

        let simplex = cx(3, &[&[1, 2, 3]]);
        assert!(stanley_reisner_nonfaces(&simplex).is_empty());

        let points = cx(2, &[&[1], &[2]]);
        assert_eq!(stanley_reisner_nonfaces(&points), vec![vec![1, 2]]);
    }

    #[test]
    fn facet_monomials_reproduce_f_vector_via_closure() {
        let c = cx(4, &[&[1, 2, 3], &[2, 3, 4]]);
        let closure = divisor_closure(&facet_monomials(&c)).unwrap();
        assert_eq!(closure.h_vector(), f_vector(&c));
    }

    #[test]
    fn shifted_sum_matches_displayed_form() {
        let h = IntSeq::new(vec![1, 3, 3, 1]);
        let hp = IntSeq::new(vec![1, 2, 1]);
        assert_eq!(shifted_sum(&h, &hp), IntSeq::new(vec![1, 4, 5, 2]));
        assert_eq!(
            shifted_sum(&IntSeq::new(vec![1]), &IntSeq::new(vec![1])),
            IntSeq::new(vec![1, 1])
        );
    }

    #[test]
    fn complex_files_round_trip() {
        let text = "# two triangles\n4\n1 2 3\n2 3 4\n";
        let parsed = parse_complex(text).unwrap();
        assert_eq!(parsed, cx(4, &[&[1, 2, 3], &[2, 3, 4]]));
        let reparsed = parse_complex(&format_complex(&parsed)).unwrap();
        assert_eq!(reparsed, parsed);
        assert!(parse_complex("").is_err());
        assert!(parse_complex("x\n1 2\n").is_err());
    }
}
