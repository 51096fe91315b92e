//! Socle-space enumeration and targeted realization searches.
//!
//! A candidate is always a "socle": a set of t distinct monomials of one
//! degree. The ideal it generates is expanded degree by degree, and a search
//! either collects the resulting face-count vectors (enumeration) or compares
//! them against a target with early pruning (realization checks).

use std::collections::BTreeSet;
use std::ops::Range;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::combin::{binomial, binomial_big, binomial_over_big, next_colex0, unrank_colex0};
use crate::complex::HVector;
use crate::constructions::{interval_partitions, PartitionMonomial, WeightVector};
use crate::ideal::{FVector, OrderIdeal, PruneOutcome};
use crate::matroid::{filter_checks, Matroid};
use crate::monomial::Monomial;
use crate::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;
#[cfg(feature = "parallel")]
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

/// Keeps candidate monomial pools from exhausting memory.
const MAX_POOL: usize = 1 << 22;

/// How candidate ranks are traversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IterationOrder {
    /// Ascending rank order; the default, and fully deterministic.
    Lexicographic,
    /// A full-cycle affine walk over the rank space, seeded explicitly.
    /// Deterministic for a fixed seed; supports spaces below 2⁶⁴ candidates.
    Seeded(u64),
}

/// Shared knobs for the searches in this module.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Upper bound on candidates visited before a search reports
    /// `LimitReached` (or refuses to start, for plain enumeration).
    pub max_candidates: u64,
    /// Restrict to a half-open interval of candidate ranks.
    pub range: Option<Range<u128>>,
    pub order: IterationOrder,
    /// 1-based block position where the guided lift inserts its tail block;
    /// `None` appends it after the existing blocks.
    pub insertion_position: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_candidates: u64::MAX,
            range: None,
            order: IterationOrder::Lexicographic,
            insertion_position: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    /// A generating set whose ideal has exactly the target face counts.
    Realized(OrderIdeal),
    /// The whole (restricted) candidate space was tried without a match.
    Exhausted,
    /// The candidate budget ran out first; not a proof of anything.
    LimitReached,
}

/// Work counters. `examined` counts candidates visited in iteration order;
/// the histogram buckets pruned expansions by the degree of the first
/// mismatch. When a parallel search ends in `Realized`, `examined` is the
/// deterministic position of the match, while the histogram reflects the
/// work actually performed across workers and may include candidates past
/// the match.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub examined: u64,
    pub prune_histogram: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub stats: SearchStats,
}

/// Distinct face-count vectors found by enumeration, plus work counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub f_vectors: BTreeSet<FVector>,
    /// Socles whose ideals were actually expanded.
    pub expanded: u64,
    /// Socle ranks visited, including representative-filter skips.
    pub visited: u64,
}

/// Size of the degree-s monomial pool in d variables, and the number of
/// t-element socles drawn from it.
pub fn count_socle_space(d: usize, s: usize, t: usize) -> Result<(BigUint, BigUint)> {
    if d == 0 || s == 0 || t == 0 {
        return Err(Error::ParameterRange(format!(
            "socle space needs d, s, t >= 1, got ({d},{s},{t})"
        )));
    }
    let monomials = binomial_big(s + d - 1, d - 1);
    let socles = binomial_over_big(&monomials, t);
    Ok((monomials, socles))
}

/// Every exponent vector of total degree `degree` in `num_vars` variables,
/// ascending lexicographically.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Result<Vec<Monomial>> {
    if degree > Monomial::MAX_DEGREE {
        return Err(Error::DegreeOverflow);
    }
    if num_vars == 0 {
        return Ok(if degree == 0 { vec![Monomial::one(0)] } else { Vec::new() });
    }
    let expected = binomial(degree as usize + num_vars - 1, num_vars - 1)
        .filter(|&c| c <= MAX_POOL as u128)
        .ok_or_else(|| {
            Error::ParameterRange(format!(
                "monomial pool for degree {degree} in {num_vars} variables is too large"
            ))
        })?;
    let mut out = Vec::with_capacity(expected as usize);
    let mut exps = vec![0u32; num_vars];
    fill_monomials(&mut exps, 0, degree, &mut out);
    debug_assert_eq!(out.len() as u128, expected);
    Ok(out)
}

fn fill_monomials(exps: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::new(exps.clone()).expect("degree bounded"));
        exps[pos] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[pos] = e;
        fill_monomials(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

fn resolve_range(requested: &Option<Range<u128>>, total: u128) -> Result<Range<u128>> {
    match requested {
        None => Ok(0..total),
        Some(r) => {
            if r.start > r.end || r.end > total {
                return Err(Error::ParameterRange(format!(
                    "rank range {}..{} invalid for a space of {total} candidates",
                    r.start, r.end
                )));
            }
            Ok(r.clone())
        }
    }
}

#[cfg_attr(not(feature = "parallel"), allow(dead_code))]
fn split_range(range: Range<u128>, parts: usize) -> Vec<Range<u128>> {
    let len = range.end - range.start;
    if len == 0 {
        return Vec::new();
    }
    let parts = (parts.max(1) as u128).min(len);
    let chunk = len / parts;
    let rem = len % parts;
    let mut out = Vec::with_capacity(parts as usize);
    let mut start = range.start;
    for i in 0..parts {
        let size = chunk + u128::from(i < rem);
        out.push(start..start + size);
        start += size;
    }
    out
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A deterministic traversal of positions 0..len, either in order or as a
/// seeded full-cycle affine permutation pos ↦ (a·pos + b) mod len.
struct RankWalk {
    len: u128,
    affine: Option<(u128, u128)>,
}

impl RankWalk {
    fn new(order: IterationOrder, len: u128) -> Result<RankWalk> {
        match order {
            IterationOrder::Lexicographic => Ok(RankWalk { len, affine: None }),
            IterationOrder::Seeded(seed) => {
                if len >= 1u128 << 64 {
                    return Err(Error::ParameterRange(
                        "seeded traversal supports spaces below 2^64 candidates".into(),
                    ));
                }
                if len <= 1 {
                    return Ok(RankWalk { len, affine: None });
                }
                let mut rng = ChaCha20Rng::seed_from_u64(seed);
                let a = loop {
                    let cand = rng.gen_range(1..len);
                    if gcd(cand, len) == 1 {
                        break cand;
                    }
                };
                let b = rng.gen_range(0..len);
                Ok(RankWalk { len, affine: Some((a, b)) })
            }
        }
    }

    fn offset(&self, pos: u128) -> u128 {
        match self.affine {
            None => pos,
            // Both factors are below 2^64, so the product fits in u128.
            Some((a, b)) => (a * pos + b) % self.len,
        }
    }

    fn is_identity(&self) -> bool {
        self.affine.is_none()
    }
}

fn prepare_socles(
    d: usize,
    s: u32,
    t: usize,
    cfg: &SearchConfig,
) -> Result<(Vec<Monomial>, Range<u128>)> {
    if d == 0 || s == 0 || t == 0 {
        return Err(Error::ParameterRange(format!(
            "enumeration needs d, s, t >= 1, got ({d},{s},{t})"
        )));
    }
    let monos = monomials_of_degree(d, s)?;
    let n = monos.len();
    let total = binomial(n, t).ok_or(Error::SpaceTooLarge { n, t })?;
    let range = resolve_range(&cfg.range, total)?;
    Ok((monos, range))
}

fn weakly_increasing(m: &Monomial) -> bool {
    m.exponents().windows(2).all(|w| w[0] <= w[1])
}

/// Expands every socle in the rank range whose lexicographically smallest
/// member has weakly increasing exponents. Any socle maps to such a
/// representative by permuting variables, which leaves face counts
/// unchanged, so the collected set is the same as for the full space.
fn enumerate_chunk(
    monos: &[Monomial],
    d: usize,
    t: usize,
    range: Range<u128>,
) -> (BTreeSet<FVector>, u64) {
    let mut found = BTreeSet::new();
    let mut expanded = 0u64;
    if range.start == range.end {
        return (found, expanded);
    }
    let mut combo = unrank_colex0(range.start, monos.len(), t);
    let mut rank = range.start;
    loop {
        if weakly_increasing(&monos[combo[0]]) {
            let gens: Vec<Monomial> = combo.iter().map(|&i| monos[i].clone()).collect();
            let ideal = OrderIdeal::new(d, gens).expect("pool shares the variable count");
            found.insert(ideal.f_vector());
            expanded += 1;
        }
        rank += 1;
        if rank == range.end || !next_colex0(&mut combo, monos.len()) {
            break;
        }
    }
    (found, expanded)
}

/// All face-count vectors of pure order ideals in `d` variables whose
/// generators are `t` distinct monomials of degree `s`. Output is a sorted
/// set and does not depend on traversal order or worker count, so
/// `cfg.order` is ignored here. Errors with `CandidateLimit` if the
/// requested range exceeds `cfg.max_candidates`.
pub fn enumerate_pure_o_sequences(
    d: usize,
    s: u32,
    t: usize,
    cfg: &SearchConfig,
) -> Result<EnumerationResult> {
    let (monos, range) = prepare_socles(d, s, t, cfg)?;
    let len = range.end - range.start;
    if len > u128::from(cfg.max_candidates) {
        return Err(Error::CandidateLimit(cfg.max_candidates));
    }
    #[cfg(feature = "parallel")]
    {
        let parts = split_range(range.clone(), rayon::current_num_threads().max(1) * 8);
        if parts.len() > 1 {
            let results: Vec<(BTreeSet<FVector>, u64)> = parts
                .into_par_iter()
                .map(|r| enumerate_chunk(&monos, d, t, r))
                .collect();
            let mut f_vectors = BTreeSet::new();
            let mut expanded = 0u64;
            for (set, count) in results {
                f_vectors.extend(set);
                expanded += count;
            }
            return Ok(EnumerationResult { f_vectors, expanded, visited: len as u64 });
        }
    }
    let (f_vectors, expanded) = enumerate_chunk(&monos, d, t, range);
    Ok(EnumerationResult { f_vectors, expanded, visited: len as u64 })
}

/// Single-threaded enumeration engine with identical output; the fallback
/// when the `parallel` feature is off, kept public for benchmarking and
/// throughput measurements.
pub fn enumerate_pure_o_sequences_sequential(
    d: usize,
    s: u32,
    t: usize,
    cfg: &SearchConfig,
) -> Result<EnumerationResult> {
    let (monos, range) = prepare_socles(d, s, t, cfg)?;
    let len = range.end - range.start;
    if len > u128::from(cfg.max_candidates) {
        return Err(Error::CandidateLimit(cfg.max_candidates));
    }
    let (f_vectors, expanded) = enumerate_chunk(&monos, d, t, range);
    Ok(EnumerationResult { f_vectors, expanded, visited: len as u64 })
}

/// Decides whether `h` is the face-count vector of some pure order ideal.
///
/// The variable count is forced to h₁ (an ideal containing exactly h₁
/// degree-one monomials uses exactly that many variables), so socles that
/// skip a variable are skipped. Targets failing the half-symmetry filter are
/// rejected without search. `Exhausted` after a full traversal is a proof
/// that no such ideal exists; `LimitReached` proves nothing.
pub fn is_pure_o_sequence(h: &FVector, cfg: &SearchConfig) -> Result<SearchOutcome> {
    if h.get(0) != 1 {
        return Err(Error::BadTarget(format!("count at degree 0 must be 1, got {}", h.get(0))));
    }
    let s = h.top_degree();
    if s == 0 {
        let ideal = OrderIdeal::new(0, vec![Monomial::one(0)])?;
        return Ok(SearchOutcome {
            status: SearchStatus::Realized(ideal),
            stats: SearchStats { examined: 1, prune_histogram: vec![0] },
        });
    }
    let mut stats = SearchStats { examined: 0, prune_histogram: vec![0; s + 1] };
    let exhausted = |stats: SearchStats| {
        Ok(SearchOutcome { status: SearchStatus::Exhausted, stats })
    };
    if (0..=s).any(|k| h.get(k) == 0) {
        return exhausted(stats);
    }
    let entries: Vec<i64> = (0..=s).map(|k| h.get(k) as i64).collect();
    if !filter_checks(&HVector::new(entries), 0, None).half_symmetry {
        return exhausted(stats);
    }
    let d = usize::try_from(h.get(1)).expect("counts fit usize");
    let t_count = h.get(s);
    let degree = u32::try_from(s).map_err(|_| Error::DegreeOverflow)?;
    let monos = monomials_of_degree(d, degree)?;
    if t_count > monos.len() as u64 {
        return exhausted(stats);
    }
    let t = t_count as usize;
    let n = monos.len();
    let total = binomial(n, t).ok_or(Error::SpaceTooLarge { n, t })?;
    let range = resolve_range(&cfg.range, total)?;
    let len = range.end - range.start;
    let walk = RankWalk::new(cfg.order, len)?;

    let evaluate = |combo: &[usize], stats: &mut SearchStats| -> Option<OrderIdeal> {
        let mut used = vec![false; d];
        for &i in combo {
            for (v, &e) in monos[i].exponents().iter().enumerate() {
                if e > 0 {
                    used[v] = true;
                }
            }
        }
        if used.iter().any(|&u| !u) {
            return None;
        }
        let gens: Vec<Monomial> = combo.iter().map(|&i| monos[i].clone()).collect();
        let ideal = OrderIdeal::new(d, gens).expect("pool shares the variable count");
        match ideal.f_vector_pruned(h) {
            PruneOutcome::Match => {
                // Independent full recomputation; a disagreement would mean
                // the pruned descent is broken.
                assert_eq!(&ideal.f_vector(), h, "pruned descent disagrees with full expansion");
                Some(ideal)
            }
            PruneOutcome::MismatchAtDegree(k) => {
                stats.prune_histogram[(k as usize).min(s)] += 1;
                None
            }
        }
    };

    if walk.is_identity() {
        // Fast path: advance the combination incrementally.
        if len == 0 {
            return exhausted(stats);
        }
        let mut combo = unrank_colex0(range.start, n, t);
        let mut rank = range.start;
        loop {
            if stats.examined >= cfg.max_candidates {
                return Ok(SearchOutcome { status: SearchStatus::LimitReached, stats });
            }
            stats.examined += 1;
            if let Some(ideal) = evaluate(&combo, &mut stats) {
                return Ok(SearchOutcome { status: SearchStatus::Realized(ideal), stats });
            }
            rank += 1;
            if rank == range.end || !next_colex0(&mut combo, n) {
                break;
            }
        }
    } else {
        for pos in 0..len {
            if stats.examined >= cfg.max_candidates {
                return Ok(SearchOutcome { status: SearchStatus::LimitReached, stats });
            }
            stats.examined += 1;
            let combo = unrank_colex0(range.start + walk.offset(pos), n, t);
            if let Some(ideal) = evaluate(&combo, &mut stats) {
                return Ok(SearchOutcome { status: SearchStatus::Realized(ideal), stats });
            }
        }
    }
    exhausted(stats)
}

/// One lifting step of the guided search: the choices available at class i,
/// already realized as monomials.
struct GuidedStep {
    options: Vec<Monomial>,
    pick: usize,
    radix: u128,
}

/// Builds candidate generating sets for the cover counts of `m` by walking
/// its parallel classes in the given order: at each class i from rank d up
/// to p, pick c_i of the interval-partition generators for the first i−1
/// classes (c_i read off the link of class i), lift each by a tail block
/// {i..p}, and realize. Returns the first candidate whose ideal matches the
/// cover counts exactly.
pub fn guided_search(m: &Matroid, class_order: &[usize], cfg: &SearchConfig) -> Result<SearchOutcome> {
    let partition = m.parallel_classes()?;
    let p = partition.len();
    let d = m.rank();
    if d < 2 {
        return Err(Error::ParameterRange(format!(
            "guided search needs rank at least 2, got {d}"
        )));
    }
    let mut sorted = class_order.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=p).collect::<Vec<_>>() {
        return Err(Error::NotAPermutation(format!("{class_order:?}")));
    }
    let insert_at = cfg.insertion_position.unwrap_or(d);
    if insert_at == 0 || insert_at > d {
        return Err(Error::ParameterRange(format!(
            "insertion position {insert_at} out of range 1..={d}"
        )));
    }
    let masks: Vec<u64> = class_order.iter().map(|&i| partition.class_masks()[i - 1]).collect();
    let weights = WeightVector::new(masks.iter().map(|mask| mask.count_ones()).collect())
        .expect("classes are non-empty");
    if !transversals_all_facets(m.complex().facet_masks(), &masks[..d]) {
        return Err(Error::OrderingInfeasible(class_order.to_vec()));
    }
    let target: FVector = m
        .cover_h_vector()
        .to_fvector()
        .expect("cover counts of a matroid are non-negative");

    let mut steps = Vec::with_capacity(p - d + 1);
    let mut total: u128 = 1;
    let mut union: u64 = masks[..d - 1].iter().fold(0, |u, &mask| u | mask);
    for i in d..=p {
        union |= masks[i - 1];
        let linked = m.restrict_mask(union).link_class_mask(masks[i - 1])?;
        let needed = linked.cover_h_vector().last();
        debug_assert!(needed >= 1);
        let needed = needed as usize;
        let parts = interval_partitions(d - 1, i - 1);
        if needed > parts.len() {
            return Err(Error::ChoiceInfeasible {
                step: i,
                needed,
                available: parts.len(),
            });
        }
        let mut options = Vec::with_capacity(parts.len());
        for part in parts {
            let mut blocks = part;
            blocks.insert(insert_at - 1, (i..=p).collect());
            options.push(PartitionMonomial::new(blocks, weights.clone())?.realize());
        }
        let radix = binomial(options.len(), needed).ok_or(Error::SpaceTooLarge {
            n: options.len(),
            t: needed,
        })?;
        total = total.checked_mul(radix).ok_or_else(|| {
            Error::ParameterRange("guided choice space overflows u128".into())
        })?;
        steps.push(GuidedStep { options, pick: needed, radix });
    }
    // Most-significant digit first: ascending rank is lexicographic over the
    // per-step combination ranks.
    let mut suffix = vec![1u128; steps.len()];
    for i in (0..steps.len().saturating_sub(1)).rev() {
        suffix[i] = suffix[i + 1] * steps[i + 1].radix;
    }

    let range = resolve_range(&cfg.range, total)?;
    let len = range.end - range.start;
    let walk = RankWalk::new(cfg.order, len)?;
    let effective = len.min(u128::from(cfg.max_candidates));
    let top = target.top_degree();

    let evaluate = |pos: u128| -> std::result::Result<OrderIdeal, u32> {
        let rank = range.start + walk.offset(pos);
        let mut gens = Vec::new();
        for (step, &div) in steps.iter().zip(&suffix) {
            let digit = (rank / div) % step.radix;
            for sel in unrank_colex0(digit, step.options.len(), step.pick) {
                gens.push(step.options[sel].clone());
            }
        }
        let ideal = OrderIdeal::new(d, gens).expect("realized monomials share d variables");
        match ideal.f_vector_pruned(&target) {
            PruneOutcome::Match => {
                assert_eq!(ideal.f_vector(), target, "pruned descent disagrees with full expansion");
                Ok(ideal)
            }
            PruneOutcome::MismatchAtDegree(k) => Err(k),
        }
    };

    #[cfg(feature = "parallel")]
    let (hit, histogram) = {
        let buckets: Vec<AtomicU64> = (0..=top).map(|_| AtomicU64::new(0)).collect();
        let chunks = split_range(0..effective, rayon::current_num_threads().max(1) * 16);
        let hit = chunks.into_par_iter().find_map_first(|chunk| {
            for pos in range_iter(chunk) {
                match evaluate(pos) {
                    Ok(ideal) => return Some((pos, ideal)),
                    Err(k) => {
                        buckets[(k as usize).min(top)].fetch_add(1, AtomicOrdering::Relaxed);
                    }
                }
            }
            None
        });
        let histogram: Vec<u64> =
            buckets.iter().map(|b| b.load(AtomicOrdering::Relaxed)).collect();
        (hit, histogram)
    };
    #[cfg(not(feature = "parallel"))]
    let (hit, histogram) = {
        let mut histogram = vec![0u64; top + 1];
        let mut hit = None;
        for pos in range_iter(0..effective) {
            match evaluate(pos) {
                Ok(ideal) => {
                    hit = Some((pos, ideal));
                    break;
                }
                Err(k) => histogram[(k as usize).min(top)] += 1,
            }
        }
        (hit, histogram)
    };

    let outcome = match hit {
        Some((pos, ideal)) => SearchOutcome {
            status: SearchStatus::Realized(ideal),
            stats: SearchStats { examined: (pos + 1) as u64, prune_histogram: histogram },
        },
        None => SearchOutcome {
            status: if effective < len {
                SearchStatus::LimitReached
            } else {
                SearchStatus::Exhausted
            },
            stats: SearchStats { examined: effective as u64, prune_histogram: histogram },
        },
    };
    Ok(outcome)
}

/// u128 ranges are not iterators; walk one manually.
fn range_iter(range: Range<u128>) -> impl Iterator<Item = u128> {
    let mut next = range.start;
    std::iter::from_fn(move || {
        if next < range.end {
            let v = next;
            next += 1;
            Some(v)
        } else {
            None
        }
    })
}

fn transversals_all_facets(facets_sorted: &[u64], classes: &[u64]) -> bool {
    fn rec(facets: &[u64], classes: &[u64], i: usize, acc: u64) -> bool {
        if i == classes.len() {
            return facets.binary_search(&acc).is_ok();
        }
        let mut bits = classes[i];
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            if !rec(facets, classes, i + 1, acc | b) {
                return false;
            }
            bits ^= b;
        }
        true
    }
    rec(facets_sorted, classes, 0, 0)
}

/// Every ordering of the parallel classes whose first `rank` classes span
/// only facets (the guided search precondition), in lexicographic order.
pub fn feasible_orderings(m: &Matroid) -> Result<Vec<Vec<usize>>> {
    let partition = m.parallel_classes()?;
    let p = partition.len();
    let d = m.rank();
    if d < 2 {
        return Err(Error::ParameterRange(format!(
            "guided search needs rank at least 2, got {d}"
        )));
    }
    let mut permutations: u128 = 1;
    for i in 1..=p {
        permutations = permutations.saturating_mul(i as u128);
    }
    if permutations > 1u128 << 20 {
        return Err(Error::ParameterRange(format!(
            "listing orderings of {p} classes is not tractable"
        )));
    }
    let masks = partition.class_masks();
    let facets = m.complex().facet_masks();
    let mut head_ok: std::collections::HashMap<u64, bool> = std::collections::HashMap::new();
    let mut order: Vec<usize> = (1..=p).collect();
    let mut out = Vec::new();
    loop {
        let head_key: u64 = order[..d].iter().fold(0, |k, &i| k | 1 << (i - 1));
        let ok = *head_ok.entry(head_key).or_insert_with(|| {
            let head: Vec<u64> = order[..d].iter().map(|&i| masks[i - 1]).collect();
            transversals_all_facets(facets, &head)
        });
        if ok {
            out.push(order.clone());
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    Ok(out)
}

/// Advances to the lexicographic successor; false at the last permutation.
fn next_permutation(items: &mut [usize]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}
