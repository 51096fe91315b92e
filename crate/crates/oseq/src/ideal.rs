//! Pure order ideals (multicomplexes) and their face numbers.
//!
//! The f-vector of an order ideal counts, per degree, the distinct monomials
//! dividing some generator. It is computed by degree descent: the degree-k
//! layer is obtained from the degree-(k+1) layer by decrementing one positive
//! exponent at a time, deduplicating, and merging in any generators of degree
//! k. Descent runs top-down so that a candidate vector can be rejected at the
//! first disagreeing layer without expanding anything below it.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::monomial::Monomial;
use crate::{Error, Result};

/// Face numbers indexed from degree 0. Trailing zeros are trimmed at
/// construction; `counts[0] = 1` for anything nonempty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn new(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        FVector { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// The count at degree `k`, zero beyond the stored range.
    pub fn get(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    /// Index of the last (nonzero) entry; 0 for the empty vector.
    pub fn top_degree(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Degreewise convolution: the f-vector of a join of ideals.
    pub fn convolve(&self, other: &FVector) -> FVector {
        if self.counts.is_empty() || other.counts.is_empty() {
            return FVector::new(Vec::new());
        }
        let mut counts = vec![0u64; self.counts.len() + other.counts.len() - 1];
        for (i, &a) in self.counts.iter().enumerate() {
            for (j, &b) in other.counts.iter().enumerate() {
                counts[i + j] += a * b;
            }
        }
        FVector::new(counts)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", strs.join(" "))
    }
}

/// Result of a pruned f-vector comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PruneOutcome {
    Match,
    /// The highest degree at which the layer count disagrees with the
    /// candidate; no layer below it was expanded.
    MismatchAtDegree(u32),
}

/// A finitely generated order ideal: all monomials dividing one of the
/// generators. Generators are normalized to an antichain under divisibility
/// and kept sorted, so equality is structural.
///
/// An ideal with no generators has f-vector (1) — it stands for the ideal
/// containing only the monomial 1, keeping join and gluing laws total.
/// Callers meaning "no ideal at all" should use an `Option`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OrderIdeal {
    num_vars: usize,
    generators: Vec<Monomial>,
}

impl OrderIdeal {
    pub fn new(num_vars: usize, generators: Vec<Monomial>) -> Result<Self> {
        for g in &generators {
            if g.num_vars() != num_vars {
                return Err(Error::VarCountMismatch(g.num_vars(), num_vars));
            }
        }
        Ok(OrderIdeal { num_vars, generators: normalize(generators) })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Pure ⇔ all generators share one degree (vacuously true when empty).
    pub fn is_pure(&self) -> bool {
        match self.generators.split_first() {
            None => true,
            Some((first, rest)) => {
                let d = first.degree();
                rest.iter().all(|g| g.degree() == d)
            }
        }
    }

    /// The common generator degree of a pure ideal (0 when empty); `None`
    /// for impure ideals.
    pub fn socle_degree(&self) -> Option<u32> {
        if !self.is_pure() {
            return None;
        }
        Some(self.generators.first().map_or(0, Monomial::degree))
    }

    pub fn f_vector(&self) -> FVector {
        FVector::new(match PackedGens::try_from_gens(&self.generators) {
            Some(packed) => packed.descend(None).counts,
            None => descend_generic(&self.generators, None).counts,
        })
    }

    /// Compares the f-vector against `candidate`, stopping the descent at the
    /// first disagreeing degree (counted from the top).
    pub fn f_vector_pruned(&self, candidate: &FVector) -> PruneOutcome {
        let outcome = match PackedGens::try_from_gens(&self.generators) {
            Some(packed) => packed.descend(Some(candidate)),
            None => descend_generic(&self.generators, Some(candidate)),
        };
        match outcome.mismatch {
            Some(k) => PruneOutcome::MismatchAtDegree(k),
            None => PruneOutcome::Match,
        }
    }

    /// The join: generators are all concatenations, on the disjoint union of
    /// the variable sets. f-vectors convolve.
    pub fn join(&self, other: &OrderIdeal) -> OrderIdeal {
        let num_vars = self.num_vars + other.num_vars;
        // Treat a generator-free ideal as ⟨1⟩ so the identity law holds.
        let ones;
        let (left, right): (&[Monomial], &[Monomial]) = match (
            self.generators.is_empty(),
            other.generators.is_empty(),
        ) {
            (false, false) => (&self.generators, &other.generators),
            (true, false) => {
                ones = [Monomial::one(self.num_vars)];
                (&ones, &other.generators)
            }
            (false, true) => {
                ones = [Monomial::one(other.num_vars)];
                (&self.generators, &ones)
            }
            (true, true) => {
                return OrderIdeal { num_vars, generators: Vec::new() };
            }
        };
        let mut gens = Vec::with_capacity(left.len() * right.len());
        for a in left {
            for b in right {
                // A degree-cap overflow here is possible but only for inputs
                // already near the cap; surface it as a panic with context.
                gens.push(a.concat(b).expect("joined degree within cap"));
            }
        }
        OrderIdeal { num_vars, generators: normalize(gens) }
    }
}

impl fmt::Display for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", strs.join(", "))
    }
}

/// Keeps only the maximal generators under divisibility, sorted and deduped.
fn normalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    // Distinct monomials of equal degree never divide one another, so a
    // single-degree list (the common case in searches) is already maximal.
    if gens.windows(2).all(|w| w[0].degree() == w[1].degree()) {
        return gens;
    }
    let keep: Vec<bool> = gens
        .iter()
        .map(|g| {
            !gens
                .iter()
                .any(|h| h != g && g.divides(h).expect("equal variable counts"))
        })
        .collect();
    let mut it = keep.iter();
    gens.retain(|_| *it.next().unwrap());
    gens
}

struct DescentOutcome {
    counts: Vec<u64>,
    mismatch: Option<u32>,
}

/// Generators packed 16 bits per exponent into a `u128`; usable whenever
/// there are at most 8 variables and every exponent fits. Searches live here:
/// layer expansion touches one machine word per monomial.
struct PackedGens {
    num_vars: usize,
    by_degree: Vec<(u32, Vec<u128>)>,
}

impl PackedGens {
    fn try_from_gens(gens: &[Monomial]) -> Option<PackedGens> {
        let num_vars = gens.first().map_or(0, Monomial::num_vars);
        if num_vars > 8 {
            return None;
        }
        let mut by_degree: Vec<(u32, Vec<u128>)> = Vec::new();
        for g in gens {
            let packed = pack(g.exponents())?;
            let d = g.degree();
            match by_degree.iter_mut().find(|(deg, _)| *deg == d) {
                Some((_, v)) => v.push(packed),
                None => by_degree.push((d, vec![packed])),
            }
        }
        by_degree.sort_unstable_by_key(|(d, _)| std::cmp::Reverse(*d));
        Some(PackedGens { num_vars, by_degree })
    }

    fn descend(&self, candidate: Option<&FVector>) -> DescentOutcome {
        let top = self.by_degree.first().map_or(0, |(d, _)| *d) as usize;
        let mut counts = vec![0u64; top + 1];
        let check = |k: usize, have: u64| -> bool {
            candidate.is_some_and(|c| c.get(k) != have)
        };
        if let Some(c) = candidate {
            // Degrees above the ideal's top have count 0; disagree there
            // before expanding anything.
            for k in (top + 1..c.len()).rev() {
                if c.get(k) != 0 {
                    return DescentOutcome { counts, mismatch: Some(k as u32) };
                }
            }
        }
        if self.by_degree.is_empty() {
            counts[0] = 1; // the generator-free ideal still contains 1
            let mismatch = check(0, 1).then_some(0);
            return DescentOutcome { counts, mismatch };
        }
        let mut layer: HashSet<u128> = HashSet::new();
        let mut next_gen = 0;
        for k in (0..=top).rev() {
            if next_gen < self.by_degree.len() && self.by_degree[next_gen].0 as usize == k {
                layer.extend(self.by_degree[next_gen].1.iter().copied());
                next_gen += 1;
            }
            counts[k] = layer.len() as u64;
            if check(k, counts[k]) {
                return DescentOutcome { counts, mismatch: Some(k as u32) };
            }
            if k == 0 {
                break;
            }
            let mut below = HashSet::with_capacity(layer.len() * self.num_vars);
            for &m in &layer {
                for i in 0..self.num_vars {
                    let unit = 1u128 << (16 * i);
                    if (m >> (16 * i)) & 0xffff != 0 {
                        below.insert(m - unit);
                    }
                }
            }
            layer = below;
        }
        DescentOutcome { counts, mismatch: None }
    }
}

fn pack(exps: &[u32]) -> Option<u128> {
    let mut packed = 0u128;
    for (i, &e) in exps.iter().enumerate() {
        if e > 0xffff {
            return None;
        }
        packed |= (e as u128) << (16 * i);
    }
    Some(packed)
}

/// Fallback descent for ideals with more than 8 variables (or oversized
/// exponents): same algorithm over exponent vectors.
fn descend_generic(gens: &[Monomial], candidate: Option<&FVector>) -> DescentOutcome {
    let top = gens.iter().map(|g| g.degree()).max().unwrap_or(0) as usize;
    let mut counts = vec![0u64; top + 1];
    let check = |k: usize, have: u64| -> bool {
        candidate.is_some_and(|c| c.get(k) != have)
    };
    if let Some(c) = candidate {
        for k in (top + 1..c.len()).rev() {
            if c.get(k) != 0 {
                return DescentOutcome { counts, mismatch: Some(k as u32) };
            }
        }
    }
    if gens.is_empty() {
        counts[0] = 1;
        let mismatch = check(0, 1).then_some(0);
        return DescentOutcome { counts, mismatch };
    }
    let mut layer: HashSet<Vec<u32>> = HashSet::new();
    for k in (0..=top).rev() {
        for g in gens {
            if g.degree() as usize == k {
                layer.insert(g.exponents().to_vec());
            }
        }
        counts[k] = layer.len() as u64;
        if check(k, counts[k]) {
            return DescentOutcome { counts, mismatch: Some(k as u32) };
        }
        if k == 0 {
            break;
        }
        let mut below = HashSet::with_capacity(layer.len());
        for m in &layer {
            for i in 0..m.len() {
                if m[i] > 0 {
                    let mut child = m.clone();
                    child[i] -= 1;
                    below.insert(child);
                }
            }
        }
        layer = below;
    }
    DescentOutcome { counts, mismatch: None }
}
