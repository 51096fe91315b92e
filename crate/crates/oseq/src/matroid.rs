//! Matroids as validated pure complexes with basis exchange.
//!
//! The wrapper type guards the exchange invariant at construction; operations
//! that are closed over matroids (dual, truncation, link, deletion,
//! restriction) skip revalidation. Parallel classes, simplification, and the
//! rank-two dual graph live here, as do the necessary-condition filters for
//! candidate h-vectors.

use std::collections::HashSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::complex::{h_vector, labels, mask_from_labels, HVector, SimplicialComplex};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    complex: SimplicialComplex,
}

impl Matroid {
    /// Validates purity and basis exchange.
    pub fn new(complex: SimplicialComplex) -> Result<Matroid> {
        if !complex.is_pure() {
            return Err(Error::NotPure);
        }
        if !complex.is_matroid() {
            return Err(Error::NotAMatroid);
        }
        Ok(Matroid { complex })
    }

    /// For constructions that are matroids by theorem (duals, truncations,
    /// links, deletions, transversal families). Callers are responsible for
    /// the exchange property.
    pub(crate) fn from_valid(complex: SimplicialComplex) -> Matroid {
        Matroid { complex }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn rank(&self) -> usize {
        self.complex.rank()
    }

    pub fn num_vertices(&self) -> usize {
        self.complex.num_vertices()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.complex.vertices()
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.complex.facets()
    }

    pub fn num_facets(&self) -> usize {
        self.complex.num_facets()
    }

    pub fn loops(&self) -> Vec<usize> {
        self.complex.loops()
    }

    /// Vertices contained in every facet.
    pub fn cone_points(&self) -> Vec<usize> {
        labels(self.complex.cone_mask())
    }

    /// h-vector of the matroid complex itself.
    pub fn h_vector(&self) -> HVector {
        h_vector(&self.complex.f_vector())
    }

    /// Facet complementation; an involution.
    pub fn dual(&self) -> Matroid {
        let g = self.complex.ground();
        let facets: Vec<u64> = self.complex.facet_masks().iter().map(|&b| g & !b).collect();
        Matroid::from_valid(SimplicialComplex::from_masks(g, facets))
    }

    /// h-vector of the dual complex: the Hilbert series data of the cover
    /// side of the matroid.
    pub fn cover_h_vector(&self) -> HVector {
        h_vector(&self.dual().complex.f_vector())
    }

    /// Truncation to rank k+1.
    pub fn skeleton(&self, k: usize) -> Result<Matroid> {
        Ok(Matroid::from_valid(self.complex.skeleton(k)?))
    }

    pub fn link_vertex(&self, v: usize) -> Result<Matroid> {
        Ok(Matroid::from_valid(self.complex.link_vertex(v)?))
    }

    pub fn delete_vertices(&self, vs: &[usize]) -> Result<Matroid> {
        Ok(Matroid::from_valid(self.complex.delete_vertices(vs)?))
    }

    pub fn restrict(&self, vs: &[usize]) -> Result<Matroid> {
        Ok(Matroid::from_valid(self.complex.restrict(vs)?))
    }

    pub(crate) fn restrict_mask(&self, mask: u64) -> Matroid {
        Matroid::from_valid(self.complex.restrict_mask(mask))
    }

    /// Link at a parallel class: link at one member, then delete the rest
    /// (which the link turns into loops).
    pub fn link_class(&self, class: &[usize]) -> Result<Matroid> {
        let mask = mask_from_labels(class, self.complex.ground())?;
        self.link_class_mask(mask)
    }

    pub(crate) fn link_class_mask(&self, mask: u64) -> Result<Matroid> {
        if mask == 0 {
            return Err(Error::ParameterRange("link_class needs a nonempty class".into()));
        }
        let v = mask.trailing_zeros() as usize + 1;
        let linked = self.link_vertex(v)?;
        let rest = labels(mask & !(mask & mask.wrapping_neg()));
        if rest.is_empty() {
            Ok(linked)
        } else {
            linked.delete_vertices(&rest)
        }
    }

    /// Groups non-loop vertices into parallel classes (u ~ v iff {u,v} is a
    /// non-face), verifying that parallelism is transitive.
    pub fn parallel_classes(&self) -> Result<ParallelPartition> {
        let loop_mask = self.complex.loop_mask();
        if loop_mask != 0 {
            return Err(Error::LoopsPresent(labels(loop_mask)));
        }
        let verts = self.vertices();
        let k = verts.len();
        let parallel = |u: usize, w: usize| {
            !self.complex.contains_face((1u64 << (u - 1)) | (1u64 << (w - 1)))
        };
        let mut root: Vec<usize> = (0..k).collect();
        fn find(root: &mut Vec<usize>, mut i: usize) -> usize {
            while root[i] != i {
                root[i] = root[root[i]];
                i = root[i];
            }
            i
        }
        for i in 0..k {
            for j in i + 1..k {
                if parallel(verts[i], verts[j]) {
                    let (a, b) = (find(&mut root, i), find(&mut root, j));
                    root[a] = b;
                }
            }
        }
        // Components must be parallel cliques, else the input violated the
        // exchange property somewhere upstream.
        for i in 0..k {
            for j in i + 1..k {
                if find(&mut root, i) == find(&mut root, j) && !parallel(verts[i], verts[j]) {
                    return Err(Error::ParallelNotTransitive);
                }
            }
        }
        let mut class_of_root: Vec<(usize, u64)> = Vec::new();
        for i in 0..k {
            let r = find(&mut root, i);
            let bit = 1u64 << (verts[i] - 1);
            match class_of_root.iter_mut().find(|(rr, _)| *rr == r) {
                Some((_, mask)) => *mask |= bit,
                None => class_of_root.push((r, bit)),
            }
        }
        let mut classes: Vec<u64> = class_of_root.into_iter().map(|(_, m)| m).collect();
        classes.sort_unstable_by_key(|m| m.trailing_zeros());
        Ok(ParallelPartition { classes })
    }

    /// Collapses each parallel class to a single vertex; the result is a
    /// simple matroid on classes 1..p.
    pub fn simplify(&self) -> Result<Matroid> {
        let part = self.parallel_classes()?;
        let p = part.len();
        let ground = if p == 64 { u64::MAX } else { (1u64 << p) - 1 };
        let facets: Vec<u64> = self
            .complex
            .facet_masks()
            .iter()
            .map(|&b| {
                let mut m = 0u64;
                for (i, &class) in part.class_masks().iter().enumerate() {
                    if b & class != 0 {
                        m |= 1u64 << i;
                    }
                }
                m
            })
            .collect();
        Matroid::new(SimplicialComplex::from_masks(ground, facets))
    }

    /// True iff some (d+1)-set is a minimal non-face (all its d-subsets are
    /// facets).
    pub fn has_spanning_circuit(&self) -> bool {
        let ground = self.complex.ground();
        let facets = self.complex.facet_masks();
        let mut seen = HashSet::new();
        for &b in facets {
            let mut outside = ground & !b;
            while outside != 0 {
                let vb = outside & outside.wrapping_neg();
                outside &= outside - 1;
                let s = b | vb;
                if !seen.insert(s) {
                    continue;
                }
                let mut xs = s;
                let mut minimal = true;
                while xs != 0 {
                    let xb = xs & xs.wrapping_neg();
                    xs &= xs - 1;
                    if facets.binary_search(&(s & !xb)).is_err() {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    return true;
                }
            }
        }
        false
    }

    /// For a rank-d matroid with exactly d+2 parallel classes: the rank-two
    /// matroid dual(simplify(m)).
    pub fn dual_graph(&self) -> Result<Matroid> {
        let part = self.parallel_classes()?;
        let d = self.rank();
        if part.len() != d + 2 {
            return Err(Error::ClassCountMismatch { expected: d + 2, found: part.len() });
        }
        Ok(self.simplify()?.dual())
    }
}

/// Ordered parallel classes of a loopless matroid; class i is the set of
/// vertices parallel to its smallest member, classes ordered by smallest
/// member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelPartition {
    classes: Vec<u64>,
}

impl ParallelPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub(crate) fn class_masks(&self) -> &[u64] {
        &self.classes
    }

    pub fn class_labels(&self, i: usize) -> Vec<usize> {
        labels(self.classes[i])
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|&m| labels(m)).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|m| m.count_ones() as usize).collect()
    }
}

/// Relabeling search for complex isomorphism, pruned by facet-degree
/// signatures. Intended for small vertex counts.
pub fn complexes_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    let va = a.vertices();
    let vb = b.vertices();
    if va.len() != vb.len() || a.num_facets() != b.num_facets() || a.rank() != b.rank() {
        return false;
    }
    let deg = |c: &SimplicialComplex, v: usize| {
        let bit = 1u64 << (v - 1);
        c.facet_masks().iter().filter(|&&f| f & bit != 0).count()
    };
    let da: Vec<usize> = va.iter().map(|&v| deg(a, v)).collect();
    let db: Vec<usize> = vb.iter().map(|&v| deg(b, v)).collect();
    {
        let mut sa = da.clone();
        let mut sb = db.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    fn assign(
        pos: usize,
        used: &mut Vec<bool>,
        map: &mut Vec<usize>,
        da: &[usize],
        db: &[usize],
        va: &[usize],
        vb: &[usize],
        a: &SimplicialComplex,
        b: &SimplicialComplex,
    ) -> bool {
        if pos == va.len() {
            let mut to_b = [0usize; 65];
            for (i, &target) in map.iter().enumerate() {
                to_b[va[i]] = vb[target];
            }
            let mut mapped: Vec<u64> = a
                .facet_masks()
                .iter()
                .map(|&f| labels(f).iter().fold(0u64, |m, &v| m | 1u64 << (to_b[v] - 1)))
                .collect();
            mapped.sort_unstable();
            return mapped == b.facet_masks();
        }
        for j in 0..vb.len() {
            if !used[j] && da[pos] == db[j] {
                used[j] = true;
                map.push(j);
                if assign(pos + 1, used, map, da, db, va, vb, a, b) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    let mut used = vec![false; vb.len()];
    let mut map = Vec::with_capacity(va.len());
    assign(0, &mut used, &mut map, &da, &db, &va, &vb, a, b)
}

/// Outcome of the necessary-condition screens for a candidate h-vector.
#[derive(Debug, Clone, Serialize)]
pub struct FilterReport {
    /// h_i ≤ h_{s−i} for i ≤ s/2, and h nondecreasing up to the middle.
    pub half_symmetry: bool,
    /// Per b in 1..=b_max: alternating partial sums stay sign-correct.
    pub brown_colbourn: Vec<(u32, bool)>,
    /// When class/rank data is supplied: last entry ≥ p − d + 1.
    pub type_bound: Option<TypeBoundCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeBoundCheck {
    pub classes: usize,
    pub rank: usize,
    pub passed: bool,
}

impl FilterReport {
    pub fn all_pass(&self) -> bool {
        self.half_symmetry
            && self.brown_colbourn.iter().all(|&(_, ok)| ok)
            && self.type_bound.as_ref().map_or(true, |t| t.passed)
    }
}

/// (−1)^j Σ_{i≤j} (−b)^i h_i ≥ 0 for every j, in exact arithmetic.
pub fn brown_colbourn_holds(h: &HVector, b: u32) -> bool {
    let neg_b = BigInt::from(-i64::from(b));
    let zero = BigInt::from(0);
    let mut partial = zero.clone();
    let mut power = BigInt::from(1);
    for j in 0..h.len() {
        partial += &power * h.get(j);
        let signed = if j % 2 == 0 { partial.clone() } else { -partial.clone() };
        if signed < zero {
            return false;
        }
        power *= &neg_b;
    }
    true
}

/// Runs the cheap screens a matroid h-vector must survive. `class_rank` is
/// (number of parallel classes, rank) when known.
pub fn filter_checks(h: &HVector, b_max: u32, class_rank: Option<(usize, usize)>) -> FilterReport {
    let s = h.len().saturating_sub(1);
    let mut half_symmetry = true;
    for i in 0..=s / 2 {
        if h.get(i) > h.get(s - i) {
            half_symmetry = false;
        }
        if i > 0 && h.get(i - 1) > h.get(i) {
            half_symmetry = false;
        }
    }
    let brown_colbourn = (1..=b_max).map(|b| (b, brown_colbourn_holds(h, b))).collect();
    let type_bound = class_rank.map(|(p, d)| TypeBoundCheck {
        classes: p,
        rank: d,
        passed: i128::from(h.last()) >= p as i128 - d as i128 + 1,
    });
    FilterReport { half_symmetry, brown_colbourn, type_bound }
}
