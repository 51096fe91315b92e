//! Builders for the named families: uniform and Schubert matroids, weighted
//! complete/truncated-transversal matroids over parallel classes, the Fano
//! matroid and its series extension, and the interval-partition order ideals
//! that realize the weighted families' cover h-vectors.

use std::fmt;

use crate::combin::{binomial, next_colex0};
use crate::complex::SimplicialComplex;
use crate::ideal::OrderIdeal;
use crate::matroid::Matroid;
use crate::monomial::Monomial;
use crate::{Error, Result};

/// Hard cap on materialized facet lists; keeps pathological parameters from
/// exhausting memory before validation can reject them.
const MAX_FACETS: u128 = 1 << 22;

/// Positive class sizes a₁..a_p. Class i occupies the consecutive vertex
/// labels (Σ_{j<i} a_j)+1 ..= Σ_{j≤i} a_j in every weighted construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    a: Vec<u32>,
}

impl WeightVector {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        if a.iter().any(|&w| w == 0) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(WeightVector { a })
    }

    /// The all-ones vector (every class a single vertex).
    pub fn ones(p: usize) -> Self {
        WeightVector { a: vec![1; p] }
    }

    pub fn weights(&self) -> &[u32] {
        &self.a
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.a.iter().map(|&w| u64::from(w)).sum()
    }

    /// The first `k` entries.
    pub fn prefix(&self, k: usize) -> WeightVector {
        WeightVector { a: self.a[..k].to_vec() }
    }

    /// Vertex labels of class `i` (1-based).
    pub fn class_labels(&self, i: usize) -> Vec<usize> {
        let start: u64 = self.a[..i - 1].iter().map(|&w| u64::from(w)).sum();
        let end = start + u64::from(self.a[i - 1]);
        (start as usize + 1..=end as usize).collect()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.a.iter().map(|w| w.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// An ordered list of disjoint blocks P₁..P_d over class labels, together
/// with the class weights; realizes to the d-variable monomial with
/// exponent (Σ_{j∈P_i} a_j) − 1 at position i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionMonomial {
    blocks: Vec<Vec<usize>>,
    weights: WeightVector,
}

impl PartitionMonomial {
    pub fn new(blocks: Vec<Vec<usize>>, weights: WeightVector) -> Result<Self> {
        let p = weights.len();
        let mut seen = vec![false; p + 1];
        let mut blocks_sorted = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(Error::MalformedPartition);
            }
            let mut b = block;
            b.sort_unstable();
            for &j in &b {
                if j == 0 || j > p || seen[j] {
                    return Err(Error::MalformedPartition);
                }
                seen[j] = true;
            }
            blocks_sorted.push(b);
        }
        if weights.total() >= u64::from(Monomial::MAX_DEGREE) {
            return Err(Error::DegreeOverflow);
        }
        Ok(PartitionMonomial { blocks: blocks_sorted, weights })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// Weight sum of block `i` (0-based).
    pub(crate) fn block_weight(&self, i: usize) -> u64 {
        self.blocks[i].iter().map(|&j| u64::from(self.weights.weights()[j - 1])).sum()
    }

    /// The monomial y₁^{w(P₁)−1} ⋯ y_d^{w(P_d)−1}.
    pub fn realize(&self) -> Monomial {
        let exps: Vec<u32> =
            (0..self.blocks.len()).map(|i| (self.block_weight(i) - 1) as u32).collect();
        Monomial::new(exps).expect("degree bound checked at construction")
    }
}

impl fmt::Display for PartitionMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", blocks.join("|"))
    }
}

/// All d-subsets of [n] as facets.
pub fn uniform(d: usize, n: usize) -> Result<Matroid> {
    if d > n {
        return Err(Error::ParameterRange(format!("uniform rank {d} exceeds vertex count {n}")));
    }
    if n > 64 {
        return Err(Error::TooManyVertices(n));
    }
    let count = binomial(n, d).expect("n <= 64");
    if count > MAX_FACETS {
        return Err(Error::ParameterRange(format!("uniform({d},{n}) would have {count} facets")));
    }
    let mut facets = Vec::with_capacity(count as usize);
    if d == 0 {
        facets.push(Vec::new());
    } else {
        let mut combo: Vec<usize> = (0..d).collect();
        loop {
            facets.push(combo.iter().map(|&c| c + 1).collect());
            if !next_colex0(&mut combo, n) {
                break;
            }
        }
    }
    Ok(Matroid::from_valid(SimplicialComplex::new(n, facets)?))
}

/// The rank-d matroid on [n] with facets {i₁<…<i_d : i_j ≤ s_j}, for a
/// strictly ascending bound sequence s.
pub fn schubert(n: usize, s: &[usize]) -> Result<Matroid> {
    if s.is_empty() {
        return Err(Error::ParameterRange("schubert needs at least one bound".into()));
    }
    for (j, &sj) in s.iter().enumerate() {
        let prev = if j == 0 { 0 } else { s[j - 1] };
        if sj <= prev || sj > n {
            return Err(Error::ParameterRange(format!(
                "schubert bounds must be strictly ascending within 1..={n}, got {s:?}"
            )));
        }
    }
    if n > 64 {
        return Err(Error::TooManyVertices(n));
    }
    let mut facets = Vec::new();
    let mut current = Vec::with_capacity(s.len());
    collect_schubert(&mut current, 0, s, &mut facets)?;
    Ok(Matroid::from_valid(SimplicialComplex::new(n, facets)?))
}

fn collect_schubert(
    current: &mut Vec<usize>,
    j: usize,
    s: &[usize],
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if j == s.len() {
        if out.len() as u128 >= MAX_FACETS {
            return Err(Error::ParameterRange("schubert facet list too large".into()));
        }
        out.push(current.clone());
        return Ok(());
    }
    let lo = current.last().map_or(1, |&v| v + 1);
    for i in lo..=s[j] {
        current.push(i);
        collect_schubert(current, j + 1, s, out)?;
        current.pop();
    }
    Ok(())
}

/// Expands facets given over class labels 1..p into vertex facets by taking
/// every transversal (one vertex per chosen class).
pub fn expand_classes_complex(
    class_facets: &[Vec<usize>],
    a: &WeightVector,
) -> Result<SimplicialComplex> {
    let p = a.len();
    if p == 0 {
        return Err(Error::ParameterRange("weight vector is empty".into()));
    }
    let n = a.total();
    if n > 64 {
        return Err(Error::TooManyVertices(n as usize));
    }
    let mut total: u128 = 0;
    for facet in class_facets {
        let mut seen = vec![false; p + 1];
        let mut product: u128 = 1;
        for &c in facet {
            if c == 0 || c > p {
                return Err(Error::VertexOutOfRange { label: c, max: p });
            }
            if seen[c] {
                return Err(Error::ParameterRange(format!("facet repeats class {c}")));
            }
            seen[c] = true;
            product *= u128::from(a.weights()[c - 1]);
        }
        total += product;
        if total > MAX_FACETS {
            return Err(Error::ParameterRange("expanded facet list too large".into()));
        }
    }
    let offsets: Vec<u64> = {
        let mut acc = 0u64;
        let mut out = Vec::with_capacity(p + 1);
        out.push(0);
        for &w in a.weights() {
            acc += u64::from(w);
            out.push(acc);
        }
        out
    };
    let mut facets = Vec::with_capacity(total as usize);
    for facet in class_facets {
        let mut classes: Vec<usize> = facet.clone();
        classes.sort_unstable();
        let mut choice = vec![0u32; classes.len()];
        loop {
            facets.push(
                classes
                    .iter()
                    .zip(&choice)
                    .map(|(&c, &k)| offsets[c - 1] as usize + k as usize + 1)
                    .collect::<Vec<usize>>(),
            );
            // Odometer over per-class picks.
            let mut pos = classes.len();
            let mut rolled_over = true;
            while pos > 0 {
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < a.weights()[classes[pos] - 1] {
                    rolled_over = false;
                    break;
                }
                choice[pos] = 0;
            }
            if rolled_over {
                break;
            }
        }
    }
    SimplicialComplex::new(n as usize, facets)
}

/// Class-level facets of the weighted family: every (d−t)-subset of the
/// first p−t classes extended by the t trailing classes.
pub fn delta_t_class_facets(d: usize, p: usize, t: usize) -> Result<Vec<Vec<usize>>> {
    validate_family_shape(d, p, t)?;
    let free = d - t;
    let mut class_facets = Vec::new();
    let tail: Vec<usize> = (p - t + 1..=p).collect();
    let mut combo: Vec<usize> = (0..free).collect();
    loop {
        let mut facet: Vec<usize> = combo.iter().map(|&c| c + 1).collect();
        facet.extend_from_slice(&tail);
        class_facets.push(facet);
        if !next_colex0(&mut combo, p - t) {
            break;
        }
    }
    Ok(class_facets)
}

/// Weighted family over p classes: facets are transversals of
/// {i₁<…<i_{d−t}} ∪ {p−t+1,…,p} for all (d−t)-subsets of [p−t]. t = 0 gives
/// the complete matroid with the given class sizes.
pub fn delta_t(d: usize, p: usize, a: &WeightVector, t: usize) -> Result<Matroid> {
    validate_family_params(d, p, a, t)?;
    let class_facets = delta_t_class_facets(d, p, t)?;
    Matroid::new(expand_classes_complex(&class_facets, a)?)
}

fn validate_family_shape(d: usize, p: usize, t: usize) -> Result<()> {
    if d == 0 || d > p {
        return Err(Error::ParameterRange(format!("need 1 <= d <= p, got d={d}, p={p}")));
    }
    // t counts simplex-joined trailing classes; beyond d−2 the family
    // definition no longer applies (t = 0 is meaningful for every rank).
    if t != 0 && t + 2 > d {
        return Err(Error::ParameterRange(format!("need t = 0 or t <= d-2, got t={t}, d={d}")));
    }
    Ok(())
}

fn validate_family_params(d: usize, p: usize, a: &WeightVector, t: usize) -> Result<()> {
    if a.len() != p {
        return Err(Error::ClassCountMismatch { expected: p, found: a.len() });
    }
    validate_family_shape(d, p, t)
}

const FANO_FACETS: [[usize; 3]; 28] = [
    [1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 7], [1, 3, 5], [1, 3, 6], [1, 3, 7],
    [1, 4, 5], [1, 4, 6], [1, 4, 7], [1, 5, 6], [1, 6, 7], [2, 3, 4], [2, 3, 5],
    [2, 3, 6], [2, 4, 6], [2, 4, 7], [2, 5, 6], [2, 5, 7], [2, 6, 7], [3, 4, 5],
    [3, 4, 6], [3, 4, 7], [3, 5, 7], [3, 6, 7], [4, 5, 6], [4, 5, 7], [5, 6, 7],
];

/// The rank-three simple matroid on 7 vertices whose 28 bases are every
/// triple not lying on one of the seven lines.
pub fn fano() -> Matroid {
    let facets = FANO_FACETS.iter().map(|f| f.to_vec());
    Matroid::from_valid(SimplicialComplex::new(7, facets).expect("fixed list"))
}

const FANO_SERIES_FACETS: [[usize; 4]; 44] = [
    [1, 2, 3, 5], [1, 2, 3, 6], [1, 2, 3, 7], [1, 2, 3, 8], [1, 2, 4, 5], [1, 2, 4, 6],
    [1, 2, 4, 7], [1, 2, 4, 8], [1, 2, 5, 6], [1, 2, 5, 7], [1, 2, 6, 8], [1, 2, 7, 8],
    [1, 3, 4, 5], [1, 3, 4, 6], [1, 3, 4, 7], [1, 3, 4, 8], [1, 3, 5, 7], [1, 3, 5, 8],
    [1, 3, 6, 7], [1, 3, 6, 8], [1, 4, 5, 6], [1, 4, 5, 8], [1, 4, 6, 7], [1, 4, 7, 8],
    [1, 5, 6, 7], [1, 5, 6, 8], [1, 5, 7, 8], [1, 6, 7, 8], [2, 3, 5, 6], [2, 3, 5, 7],
    [2, 3, 5, 8], [2, 4, 5, 6], [2, 4, 5, 7], [2, 4, 5, 8], [2, 5, 6, 8], [2, 5, 7, 8],
    [3, 4, 5, 6], [3, 4, 5, 7], [3, 4, 5, 8], [3, 5, 6, 7], [3, 5, 6, 8], [4, 5, 6, 7],
    [4, 5, 7, 8], [5, 6, 7, 8],
];

/// The rank-four simple matroid on 8 vertices obtained from the Fano matroid
/// by a series extension; its 44 bases are hard-coded.
pub fn fano_series_extension() -> Matroid {
    let facets = FANO_SERIES_FACETS.iter().map(|f| f.to_vec());
    Matroid::from_valid(SimplicialComplex::new(8, facets).expect("fixed list"))
}

/// All partitions of [p] into `k` nonempty consecutive intervals, ordered
/// lexicographically by their cut positions.
pub(crate) fn interval_partitions(k: usize, p: usize) -> Vec<Vec<Vec<usize>>> {
    if k == 0 {
        return if p == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if p < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::with_capacity(k);
    fn rec(start: usize, left: usize, p: usize, current: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if left == 1 {
            current.push((start..=p).collect());
            out.push(current.clone());
            current.pop();
            return;
        }
        for end in start..=p - (left - 1) {
            current.push((start..=end).collect());
            rec(end + 1, left - 1, p, current, out);
            current.pop();
        }
    }
    rec(1, k, p, &mut current, &mut out);
    out
}

/// The pure order ideal in d variables generated by the realized interval
/// partitions [𝒫(l₀,…,l_{d−t}) | p−t+1 | … | p] over all ascending cut
/// sequences 1 = l₀ < l₁ < … < l_{d−t} = p−t+1.
pub fn gamma_t(d: usize, p: usize, a: &WeightVector, t: usize) -> Result<OrderIdeal> {
    validate_family_params(d, p, a, t)?;
    let parts = interval_partitions(d - t, p - t);
    debug_assert_eq!(
        parts.len() as u128,
        binomial(p - t - 1, d - t - 1).expect("small"),
        "interval partition count"
    );
    let mut gens = Vec::with_capacity(parts.len());
    for part in parts {
        let mut blocks = part;
        for j in p - t + 1..=p {
            blocks.push(vec![j]);
        }
        gens.push(PartitionMonomial::new(blocks, a.clone())?.realize());
    }
    OrderIdeal::new(d, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::h_vector;
    use crate::ideal::FVector;

    fn wv(a: &[u32]) -> WeightVector {
        WeightVector::new(a.to_vec()).unwrap()
    }

    #[test]
    fn uniform_family() {
        assert_eq!(uniform(1, 2).unwrap().facets(), vec![vec![1], vec![2]]);
        assert_eq!(uniform(2, 4).unwrap().num_facets(), 6);
        let simplex = uniform(5, 5).unwrap();
        assert_eq!(h_vector(&simplex.complex().f_vector()).entries(), &[1]);
        assert_eq!(uniform(0, 3).unwrap().complex().f_vector().counts(), &[1]);
        assert!(uniform(4, 3).is_err());
    }

    #[test]
    fn schubert_family() {
        assert_eq!(schubert(2, &[2]).unwrap(), uniform(1, 2).unwrap());
        let sm = schubert(4, &[2, 4]).unwrap();
        assert_eq!(
            sm.facets(),
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
        assert!(sm.complex().is_matroid());
        let forced = schubert(5, &[1, 2, 3]).unwrap();
        assert_eq!(forced.facets(), vec![vec![1, 2, 3]]);
        assert_eq!(forced.loops(), vec![4, 5]);
        assert!(schubert(4, &[2, 2]).is_err());
        assert!(schubert(4, &[3, 2]).is_err());
        assert!(schubert(4, &[2, 5]).is_err());
    }

    #[test]
    fn schubert_exchange_holds_broadly() {
        for n in 1..=6 {
            for s1 in 1..=n {
                for s2 in s1 + 1..=n {
                    assert!(schubert(n, &[s1, s2]).unwrap().complex().is_matroid());
                }
            }
        }
    }

    #[test]
    fn complete_matroid_is_multipartite() {
        let k23 = delta_t(2, 2, &wv(&[2, 3]), 0).unwrap();
        assert_eq!(
            k23.facets(),
            vec![vec![1, 3], vec![1, 4], vec![1, 5], vec![2, 3], vec![2, 4], vec![2, 5]]
        );
        let part = k23.parallel_classes().unwrap();
        assert_eq!(part.sizes(), vec![2, 3]);
    }

    #[test]
    fn truncated_family_facets() {
        let m = delta_t(3, 4, &WeightVector::ones(4), 1).unwrap();
        assert_eq!(m.facets(), vec![vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]);
        assert!(delta_t(3, 4, &WeightVector::ones(4), 2).is_err());
        assert!(delta_t(2, 4, &WeightVector::ones(3), 0).is_err());
    }

    #[test]
    fn family_is_join_of_complete_pieces() {
        let a = wv(&[2, 1, 3, 2]);
        let joined = delta_t(2, 3, &wv(&[2, 1, 3]), 0)
            .unwrap()
            .complex()
            .join(delta_t(1, 1, &wv(&[2]), 0).unwrap().complex())
            .unwrap();
        let direct = delta_t(3, 4, &a, 1).unwrap();
        assert_eq!(direct.complex(), &joined);
    }

    #[test]
    fn class_sizes_recovered() {
        for (d, p, a) in [(2, 3, wv(&[2, 2, 1])), (3, 5, wv(&[1, 3, 2, 1, 2])), (2, 4, wv(&[3, 1, 2, 2]))] {
            let m = delta_t(d, p, &a, 0).unwrap();
            assert_eq!(m.parallel_classes().unwrap().sizes(), a.weights().iter().map(|&w| w as usize).collect::<Vec<_>>());
        }
    }

    #[test]
    fn fano_matroids() {
        let f = fano();
        assert_eq!(f.num_facets(), 28);
        assert!(f.complex().is_matroid());
        assert_eq!(f.parallel_classes().unwrap().sizes(), vec![1; 7]);
        assert_eq!(f.complex().f_vector().counts(), &[1, 7, 21, 28]);
        assert_eq!(h_vector(&f.complex().f_vector()).entries(), &[1, 4, 10, 13]);

        let ext = fano_series_extension();
        assert_eq!(ext.num_facets(), 44);
        assert!(ext.complex().is_matroid());
        assert_eq!(ext.parallel_classes().unwrap().sizes(), vec![1; 8]);
    }

    #[test]
    fn partition_realization() {
        let pm = PartitionMonomial::new(
            vec![vec![1], vec![2, 3], vec![4]],
            WeightVector::ones(4),
        )
        .unwrap();
        assert_eq!(pm.realize().exponents(), &[0, 1, 0]);
        assert_eq!(pm.to_string(), "[1|2,3|4]");

        let generic = PartitionMonomial::new(
            vec![vec![1], vec![2, 3], vec![4]],
            wv(&[2, 3, 4, 5]),
        )
        .unwrap();
        assert_eq!(generic.realize().exponents(), &[1, 6, 4]);

        let trivial = PartitionMonomial::new(
            vec![vec![1], vec![2], vec![3]],
            WeightVector::ones(3),
        )
        .unwrap();
        assert_eq!(trivial.realize().degree(), 0);

        assert!(PartitionMonomial::new(vec![vec![1], vec![1, 2]], WeightVector::ones(2)).is_err());
        assert!(PartitionMonomial::new(vec![vec![]], WeightVector::ones(2)).is_err());
        assert!(PartitionMonomial::new(vec![vec![3]], WeightVector::ones(2)).is_err());
    }

    #[test]
    fn order_ideal_family() {
        let g = gamma_t(3, 4, &WeightVector::ones(4), 1).unwrap();
        let mut gens = g.generators().to_vec();
        gens.sort();
        assert_eq!(gens[0].exponents(), &[0, 1, 0]);
        assert_eq!(gens[1].exponents(), &[1, 0, 0]);
        assert_eq!(g.f_vector().counts(), &[1, 2]);

        let a = wv(&[2, 1, 3, 2]);
        let gg = gamma_t(3, 4, &a, 1).unwrap();
        let expected: Vec<Monomial> = [
            PartitionMonomial::new(vec![vec![1], vec![2, 3], vec![4]], a.clone()).unwrap(),
            PartitionMonomial::new(vec![vec![1, 2], vec![3], vec![4]], a.clone()).unwrap(),
        ]
        .iter()
        .map(|p| p.realize())
        .collect();
        let mut got = gg.generators().to_vec();
        got.sort();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn generator_counts() {
        for (d, p, t) in [(3, 6, 0), (4, 6, 1), (2, 5, 0), (4, 7, 2)] {
            let a: Vec<u32> = (0..p).map(|i| 1 + (i as u32 % 3) * 7).collect();
            let g = gamma_t(d, p, &wv(&a), t).unwrap();
            assert_eq!(
                g.generators().len() as u128,
                binomial(p - t - 1, d - t - 1).unwrap(),
                "({d},{p},{t})"
            );
            assert!(g.is_pure());
        }
    }

    #[test]
    fn cover_side_agreement_spot_checks() {
        for (d, p, t, a) in [
            (2, 3, 0, wv(&[1, 2, 2])),
            (3, 4, 1, wv(&[1, 1, 1, 1])),
            (3, 4, 1, wv(&[2, 1, 3, 2])),
            (3, 5, 0, wv(&[1, 2, 1, 1, 2])),
            (4, 4, 2, wv(&[2, 2, 1, 3])),
        ] {
            let m = delta_t(d, p, &a, t).unwrap();
            let g = gamma_t(d, p, &a, t).unwrap();
            let target: FVector = m.cover_h_vector().to_fvector().unwrap();
            assert_eq!(g.f_vector(), target, "({d},{p},{t},{a})");
        }
    }

    #[test]
    fn weighted_expansion_validation() {
        let a = wv(&[2, 2]);
        assert!(expand_classes_complex(&[vec![1, 1]], &a).is_err());
        assert!(expand_classes_complex(&[vec![3]], &a).is_err());
        assert!(WeightVector::new(vec![1, 0]).is_err());
        assert!(expand_classes_complex(&[vec![1]], &wv(&[40, 30])).is_err());
    }
}
