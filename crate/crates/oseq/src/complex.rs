//! Simplicial complexes on at most 64 labeled vertices.
//!
//! A complex is stored as its facet antichain, each facet a bitmask over
//! vertex labels. The ground set is tracked explicitly so that deletions and
//! links can drop vertices without relabeling the survivors: labels are
//! stable across the matroid operations built on top of this module.

use std::fmt;

use serde::Serialize;

use crate::combin::binomial;
use crate::ideal::FVector;
use crate::{Error, Result};

/// Bitmask for a vertex label (1-based).
pub(crate) fn vbit(label: usize) -> u64 {
    1u64 << (label - 1)
}

/// Collects the 1-based labels set in a mask, ascending.
pub(crate) fn labels(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut bits = mask;
    while bits != 0 {
        out.push(bits.trailing_zeros() as usize + 1);
        bits &= bits - 1;
    }
    out
}

pub(crate) fn mask_from_labels(vs: &[usize], ground: u64) -> Result<u64> {
    let mut mask = 0u64;
    for &v in vs {
        if v == 0 || v > 64 {
            return Err(Error::VertexOutOfRange { label: v, max: 64 });
        }
        if ground & vbit(v) == 0 {
            return Err(Error::VertexNotPresent(v));
        }
        mask |= vbit(v);
    }
    Ok(mask)
}

/// A simplicial complex: ground-set mask plus facet antichain.
///
/// Vertices outside every facet are loops; they stay part of the ground set
/// and are tracked rather than dropped. The empty complex {∅} is represented
/// by the single empty facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: u64,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds a complex on vertices 1..=n from facet label lists. Non-maximal
    /// and duplicate facets are dropped; an empty list means the complex {∅}.
    pub fn new(n: usize, facets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooManyVertices(n));
        }
        let ground = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut masks = Vec::new();
        for facet in facets {
            for &v in &facet {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { label: v, max: n });
                }
            }
            masks.push(facet.iter().fold(0u64, |m, &v| m | vbit(v)));
        }
        Ok(Self::from_masks(ground, masks))
    }

    /// Internal constructor from masks; normalizes to a facet antichain.
    pub(crate) fn from_masks(ground: u64, mut facets: Vec<u64>) -> Self {
        debug_assert!(facets.iter().all(|f| f & !ground == 0));
        if facets.is_empty() {
            facets.push(0);
        }
        facets.sort_unstable_by_key(|f| std::cmp::Reverse(f.count_ones()));
        let mut kept: Vec<u64> = Vec::with_capacity(facets.len());
        for f in facets {
            if !kept.iter().any(|&k| f & !k == 0) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        SimplicialComplex { ground, facets: kept }
    }

    pub(crate) fn ground(&self) -> u64 {
        self.ground
    }

    pub fn num_vertices(&self) -> usize {
        self.ground.count_ones() as usize
    }

    /// Ascending vertex labels of the ground set.
    pub fn vertices(&self) -> Vec<usize> {
        labels(self.ground)
    }

    pub(crate) fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    /// Facets as ascending label lists, in a deterministic order.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.facets.iter().map(|&f| labels(f)).collect();
        out.sort_unstable();
        out
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Maximum facet cardinality.
    pub fn rank(&self) -> usize {
        self.facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.rank();
        self.facets.iter().all(|f| f.count_ones() as usize == d)
    }

    /// Vertices contained in no facet.
    pub fn loops(&self) -> Vec<usize> {
        labels(self.loop_mask())
    }

    pub(crate) fn loop_mask(&self) -> u64 {
        let covered = self.facets.iter().fold(0u64, |m, &f| m | f);
        self.ground & !covered
    }

    /// Vertices contained in every facet.
    pub(crate) fn cone_mask(&self) -> u64 {
        self.facets.iter().fold(self.ground, |m, &f| m & f)
    }

    /// True iff `face` is contained in some facet.
    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Counts faces by cardinality. Faces are enumerated once each by
    /// ascending labels; a branch covered by a single facet is completed by
    /// binomial counting instead of expansion.
    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.rank() + 1];
        counts[0] = 1;
        let idx: Vec<usize> = (0..self.facets.len()).collect();
        self.count_faces(&idx, u64::MAX, 0, &mut counts);
        FVector::new(counts)
    }

    fn count_faces(&self, active: &[usize], above: u64, size: usize, counts: &mut [u64]) {
        if let [only] = active {
            // All remaining faces are subsets of one facet: count directly.
            let free = (self.facets[*only] & above).count_ones() as usize;
            for j in 1..=free {
                counts[size + j] += binomial(free, j).expect("fits: free <= 64") as u64;
            }
            return;
        }
        let mut cand = 0u64;
        for &i in active {
            cand |= self.facets[i];
        }
        cand &= above;
        let mut bits = cand;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            let vb = 1u64 << v;
            let filtered: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&i| self.facets[i] & vb != 0)
                .collect();
            counts[size + 1] += 1;
            let strictly_above = !(vb | (vb - 1));
            self.count_faces(&filtered, above & strictly_above, size + 1, counts);
        }
    }

    /// All faces of cardinality `k`, as masks.
    pub(crate) fn faces_of_size(&self, k: usize) -> Vec<u64> {
        let mut out = Vec::new();
        if k == 0 {
            out.push(0);
            return out;
        }
        let idx: Vec<usize> = (0..self.facets.len()).collect();
        self.collect_faces(&idx, u64::MAX, 0, k, &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_faces(&self, active: &[usize], above: u64, face: u64, k: usize, out: &mut Vec<u64>) {
        if face.count_ones() as usize == k {
            out.push(face);
            return;
        }
        let mut cand = 0u64;
        for &i in active {
            cand |= self.facets[i];
        }
        cand &= above;
        let mut bits = cand;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            let vb = 1u64 << v;
            let filtered: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&i| self.facets[i] & vb != 0)
                .collect();
            let strictly_above = !(vb | (vb - 1));
            self.collect_faces(&filtered, above & strictly_above, face | vb, k, out);
        }
    }

    /// The k-skeleton: all faces of cardinality k+1 as facets (dimension k,
    /// rank k+1).
    pub fn skeleton(&self, k: usize) -> Result<SimplicialComplex> {
        let rank = self.rank();
        if rank == 0 || k + 1 > rank {
            return Err(Error::SkeletonOutOfRange { k, max: rank.saturating_sub(1) });
        }
        let facets = self.faces_of_size(k + 1);
        Ok(SimplicialComplex::from_masks(self.ground, facets))
    }

    /// Link of vertex `v`: faces F with v ∉ F and F ∪ {v} a face, on the
    /// ground set minus v. Linking at a loop would be the void complex and is
    /// rejected distinctly.
    pub fn link_vertex(&self, v: usize) -> Result<SimplicialComplex> {
        let vb = mask_from_labels(&[v], self.ground)?;
        if self.loop_mask() & vb != 0 {
            return Err(Error::LinkAtLoop(v));
        }
        let facets: Vec<u64> =
            self.facets.iter().filter(|&&f| f & vb != 0).map(|&f| f & !vb).collect();
        Ok(SimplicialComplex::from_masks(self.ground & !vb, facets))
    }

    /// Deletion: faces avoiding `vs`, on the ground set minus `vs`.
    pub fn delete_vertices(&self, vs: &[usize]) -> Result<SimplicialComplex> {
        let mask = mask_from_labels(vs, self.ground)?;
        let facets: Vec<u64> = self.facets.iter().map(|&f| f & !mask).collect();
        Ok(SimplicialComplex::from_masks(self.ground & !mask, facets))
    }

    /// Restriction: faces inside `vs`, on ground set `vs`.
    pub fn restrict(&self, vs: &[usize]) -> Result<SimplicialComplex> {
        let mask = mask_from_labels(vs, self.ground)?;
        let facets: Vec<u64> = self.facets.iter().map(|&f| f & mask).collect();
        Ok(SimplicialComplex::from_masks(self.ground & mask, facets))
    }

    pub(crate) fn restrict_mask(&self, mask: u64) -> SimplicialComplex {
        let facets: Vec<u64> = self.facets.iter().map(|&f| f & mask).collect();
        SimplicialComplex::from_masks(self.ground & mask, facets)
    }

    /// Join: faces are unions of a face of `self` and a face of `other`;
    /// `other`'s vertices are relabeled to follow `self`'s.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let shift = 64 - self.ground.leading_zeros() as usize;
        let other_top = 64 - other.ground.leading_zeros() as usize;
        if shift + other_top > 64 {
            return Err(Error::TooManyVertices(shift + other_top));
        }
        let ground = self.ground | (other.ground << shift);
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(a | (b << shift));
            }
        }
        Ok(SimplicialComplex::from_masks(ground, facets))
    }

    /// Basis exchange over all facet pairs (plus purity).
    pub fn is_matroid(&self) -> bool {
        if !self.is_pure() {
            return false;
        }
        let has = |m: u64| self.facets.binary_search(&m).is_ok();
        for (i, &b1) in self.facets.iter().enumerate() {
            for &b2 in &self.facets[i + 1..] {
                if !exchange_ok(&has, b1, b2) || !exchange_ok(&has, b2, b1) {
                    return false;
                }
            }
        }
        true
    }
}

fn exchange_ok(has: &dyn Fn(u64) -> bool, b1: u64, b2: u64) -> bool {
    let mut xs = b1 & !b2;
    while xs != 0 {
        let xb = xs & xs.wrapping_neg();
        xs &= xs - 1;
        let base = b1 & !xb;
        let mut ys = b2 & !b1;
        let mut repaired = false;
        while ys != 0 {
            let yb = ys & ys.wrapping_neg();
            ys &= ys - 1;
            if has(base | yb) {
                repaired = true;
                break;
            }
        }
        if !repaired {
            return false;
        }
    }
    true
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex(n={}, facets={})", self.num_vertices(), self.num_facets())
    }
}

/// An h-vector: the coefficient repackaging of an f-vector. Entries may be
/// negative for general complexes; trailing zeros are trimmed, but entries
/// beyond the stored range read as zero so degree-indexed identities can be
/// checked without re-padding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HVector {
    entries: Vec<i64>,
}

impl HVector {
    pub fn new(mut entries: Vec<i64>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        HVector { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, k: usize) -> i64 {
        self.entries.get(k).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The last entry (the type, for a level algebra); 0 when empty.
    pub fn last(&self) -> i64 {
        self.entries.last().copied().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Reinterprets as face counts; `None` if any entry is negative.
    pub fn to_fvector(&self) -> Option<FVector> {
        let counts: Option<Vec<u64>> =
            self.entries.iter().map(|&e| u64::try_from(e).ok()).collect();
        Some(FVector::new(counts?))
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", strs.join(" "))
    }
}

/// h_k = Σ_{i≤k} (−1)^{k−i} C(d−i, k−i) f_i, with d the top index of `f`.
pub fn h_vector(f: &FVector) -> HVector {
    let d = f.top_degree();
    let mut entries = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut v: i128 = 0;
        for i in 0..=k {
            let b = binomial(d - i, k - i).expect("d <= 64") as i128;
            let term = b * f.get(i) as i128;
            if (k - i) % 2 == 0 {
                v += term;
            } else {
                v -= term;
            }
        }
        entries.push(i64::try_from(v).expect("h-vector entry fits i64"));
    }
    HVector::new(entries)
}
