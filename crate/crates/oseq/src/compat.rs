//! Blockwise dominance between partition monomials, the matching divisibility
//! test on realized monomials, and the gluing operation that splices two pure
//! order ideals along a distinguished variable.

use crate::constructions::PartitionMonomial;
use crate::ideal::OrderIdeal;
use crate::monomial::Monomial;
use crate::{Error, Result};

/// Blockwise weight dominance: every block of `p` weighs at most the
/// corresponding block of `q`. Both partitions must have the same block
/// count and identical weight vectors.
pub fn leq_a(p: &PartitionMonomial, q: &PartitionMonomial) -> Result<bool> {
    if p.weights() != q.weights() {
        return Err(Error::ParameterRange("partitions carry different weight vectors".into()));
    }
    if p.blocks().len() != q.blocks().len() {
        return Err(Error::BlockCountMismatch(p.blocks().len(), q.blocks().len()));
    }
    Ok((0..p.blocks().len()).all(|i| p.block_weight(i) <= q.block_weight(i)))
}

/// Dominance after deleting block `r` (1-based) of `p`: `q` must have one
/// block fewer than `p`.
pub fn leq_a_r(p: &PartitionMonomial, q: &PartitionMonomial, r: usize) -> Result<bool> {
    let d = p.blocks().len();
    if r == 0 || r > d {
        return Err(Error::VarIndexOutOfRange { index: r, num_vars: d });
    }
    if p.weights() != q.weights() {
        return Err(Error::ParameterRange("partitions carry different weight vectors".into()));
    }
    if q.blocks().len() + 1 != d {
        return Err(Error::BlockCountMismatch(d, q.blocks().len()));
    }
    Ok((0..d)
        .filter(|&i| i != r - 1)
        .zip(0..d - 1)
        .all(|(i, j)| p.block_weight(i) <= q.block_weight(j)))
}

/// True iff every member of `ps` sits below some member of `qs` in the
/// deleted-block-`r` dominance order.
pub fn r_compatible_partitions(
    ps: &[PartitionMonomial],
    qs: &[PartitionMonomial],
    r: usize,
) -> Result<bool> {
    for p in ps {
        let mut found = false;
        for q in qs {
            if leq_a_r(p, q, r)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monomial form of the same test: every `n`, after clearing variable `r`,
/// must divide some `m`. The `ms` must not use variable `r`.
pub fn r_compatible_monomials(ns: &[Monomial], ms: &[Monomial], r: usize) -> Result<bool> {
    let d = match ns.first().or_else(|| ms.first()) {
        Some(first) => first.num_vars(),
        None => return Ok(true),
    };
    for x in ns.iter().chain(ms) {
        if x.num_vars() != d {
            return Err(Error::VarCountMismatch(x.num_vars(), d));
        }
    }
    if r == 0 || r > d {
        return Err(Error::VarIndexOutOfRange { index: r, num_vars: d });
    }
    for m in ms {
        if m.max_power(r)? > 0 {
            return Err(Error::GlueVariableUsed(r));
        }
    }
    for n in ns {
        let stripped = clear_var(n, r);
        let mut found = false;
        for m in ms {
            if stripped.divides(m)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reindexes a (d−1)-variable monomial into d variables by inserting
/// exponent zero at position `r` (1-based).
pub fn embed_monomial(m: &Monomial, r: usize) -> Result<Monomial> {
    let d = m.num_vars() + 1;
    if r == 0 || r > d {
        return Err(Error::VarIndexOutOfRange { index: r, num_vars: d });
    }
    let mut exps = Vec::with_capacity(d);
    exps.extend_from_slice(&m.exponents()[..r - 1]);
    exps.push(0);
    exps.extend_from_slice(&m.exponents()[r - 1..]);
    Monomial::new(exps)
}

/// Splices two pure order ideals along variable `r` with step weight `w`:
/// the result is generated by y_r^w · N over the generators N of `gamma1`
/// together with y_r^{w−1} · M over the generators M of `gamma2`. Requires
/// `gamma2` to avoid y_r and the pair to be r-compatible; fails with
/// `GlueResultNotPure` when the spliced ideal has mixed socle degrees.
pub fn glue(gamma1: &OrderIdeal, gamma2: &OrderIdeal, r: usize, w: u32) -> Result<OrderIdeal> {
    let d = gamma1.num_vars();
    if gamma2.num_vars() != d {
        return Err(Error::VarCountMismatch(gamma2.num_vars(), d));
    }
    if r == 0 || r > d {
        return Err(Error::VarIndexOutOfRange { index: r, num_vars: d });
    }
    if w == 0 {
        return Err(Error::ParameterRange("glue step weight must be at least 1".into()));
    }
    for m in gamma2.generators() {
        if m.max_power(r)? > 0 {
            return Err(Error::GlueVariableUsed(r));
        }
    }
    for n in gamma1.generators() {
        let stripped = clear_var(n, r);
        let mut found = false;
        for m in gamma2.generators() {
            if stripped.divides(m)? {
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::Incompatible { witness: n.clone() });
        }
    }
    if gamma1.generators().is_empty() && gamma2.generators().is_empty() {
        return OrderIdeal::new(d, Vec::new());
    }
    let mut gens = Vec::with_capacity(gamma1.generators().len() + gamma2.generators().len());
    for n in gamma1.generators() {
        gens.push(n.times_var_power(r, w)?);
    }
    for m in gamma2.generators() {
        gens.push(m.times_var_power(r, w - 1)?);
    }
    let result = OrderIdeal::new(d, gens)?;
    assert_face_count_identity(&result, gamma1, gamma2, w);
    if !result.is_pure() {
        return Err(Error::GlueResultNotPure);
    }
    Ok(result)
}

fn clear_var(m: &Monomial, r: usize) -> Monomial {
    let mut exps = m.exponents().to_vec();
    exps[r - 1] = 0;
    Monomial::new(exps).expect("no larger than the source monomial")
}

/// Face counts of the spliced ideal decompose exactly into a shifted copy of
/// `gamma1` plus `w` staggered copies of `gamma2`; generator-free parts
/// contribute nothing. This holds for every compatible input, so a violation
/// is an internal bug worth a hard stop.
fn assert_face_count_identity(
    result: &OrderIdeal,
    gamma1: &OrderIdeal,
    gamma2: &OrderIdeal,
    w: u32,
) {
    let f = result.f_vector();
    let f1 = (!gamma1.generators().is_empty()).then(|| gamma1.f_vector());
    let f2 = (!gamma2.generators().is_empty()).then(|| gamma2.f_vector());
    let w = w as usize;
    let mut top = f.top_degree();
    if let Some(f1) = &f1 {
        top = top.max(f1.top_degree() + w);
    }
    if let Some(f2) = &f2 {
        top = top.max(f2.top_degree() + w - 1);
    }
    for i in 0..=top {
        let mut expect = 0u64;
        if let (Some(f1), true) = (&f1, i >= w) {
            expect += f1.get(i - w);
        }
        if let Some(f2) = &f2 {
            for j in 0..w.min(i + 1) {
                expect += f2.get(i - j);
            }
        }
        assert_eq!(
            f.get(i),
            expect,
            "face-count identity violated at degree {i} (weight {w})"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::h_vector;
    use crate::constructions::{expand_classes_complex, WeightVector};
    use crate::matroid::Matroid;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec()).unwrap()
    }

    fn pm(blocks: &[&[usize]], a: &WeightVector) -> PartitionMonomial {
        PartitionMonomial::new(blocks.iter().map(|b| b.to_vec()).collect(), a.clone()).unwrap()
    }

    fn ideal(num_vars: usize, gens: &[&[u32]]) -> OrderIdeal {
        OrderIdeal::new(num_vars, gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    #[test]
    fn dominance_orders() {
        let a = WeightVector::new(vec![1, 2, 3, 4]).unwrap();
        let p = pm(&[&[1], &[2], &[3, 4]], &a);
        let q = pm(&[&[1, 2], &[3], &[4]], &a);
        assert!(leq_a(&p, &p).unwrap());
        assert!(!leq_a(&q, &p).unwrap());
        // (1,2,7) vs (3,3,4) blockwise.
        assert!(!leq_a(&p, &q).unwrap());

        let q2 = pm(&[&[1, 2], &[3, 4]], &a);
        assert!(leq_a(&p, &q2).is_err());
        assert!(leq_a_r(&p, &q2, 3).unwrap());
        assert!(leq_a_r(&p, &q2, 0).is_err());
        assert!(leq_a_r(&p, &q2, 4).is_err());

        let other = WeightVector::ones(4);
        let q3 = pm(&[&[1, 2], &[3, 4]], &other);
        assert!(leq_a_r(&p, &q3, 3).is_err());
    }

    // Three 3-block partitions of {1..4} against the single coarsening
    // [1,2|3,4]: deleting block 3 is dominated exactly when a2 <= a4.
    #[test]
    fn compatibility_tracks_weight_inequality() {
        for bits in 0..32u32 {
            let a: Vec<u32> = (0..5).map(|i| 1 + ((bits >> i) & 1)).collect();
            let expected = a[1] <= a[3];
            let wv = WeightVector::new(a).unwrap();
            let ps = vec![
                pm(&[&[1], &[2], &[3, 4]], &wv),
                pm(&[&[1], &[2, 3], &[4]], &wv),
                pm(&[&[1, 2], &[3], &[4]], &wv),
            ];
            let qs = vec![pm(&[&[1, 2], &[3, 4]], &wv)];
            assert_eq!(r_compatible_partitions(&ps, &qs, 3).unwrap(), expected);

            let ns: Vec<Monomial> = ps.iter().map(|p| p.realize()).collect();
            let ms: Vec<Monomial> =
                qs.iter().map(|q| embed_monomial(&q.realize(), 3).unwrap()).collect();
            assert_eq!(r_compatible_monomials(&ns, &ms, 3).unwrap(), expected);
        }
    }

    #[test]
    fn wider_family_is_always_compatible() {
        for bits in 0..32u32 {
            let a: Vec<u32> = (0..5).map(|i| 1 + ((bits >> i) & 1) + (bits >> 4 & 1)).collect();
            let wv = WeightVector::new(a).unwrap();
            let ps = vec![
                pm(&[&[1], &[2, 3], &[4, 5]], &wv),
                pm(&[&[1, 2], &[3], &[4, 5]], &wv),
            ];
            let qs = vec![
                pm(&[&[1], &[2, 3, 4, 5]], &wv),
                pm(&[&[1, 2], &[3, 4, 5]], &wv),
                pm(&[&[1, 2, 3], &[4, 5]], &wv),
                pm(&[&[1, 2, 3, 4], &[5]], &wv),
            ];
            for r in 1..=3 {
                assert!(r_compatible_partitions(&ps, &qs, r).unwrap(), "r={r} a={wv}");
                let ns: Vec<Monomial> = ps.iter().map(|p| p.realize()).collect();
                let ms: Vec<Monomial> =
                    qs.iter().map(|q| embed_monomial(&q.realize(), r).unwrap()).collect();
                assert!(r_compatible_monomials(&ns, &ms, r).unwrap());
            }
        }
    }

    #[test]
    fn splice_produces_the_expected_generators() {
        let g1 = ideal(3, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let g2 = ideal(3, &[&[1, 1, 0]]);
        let spliced = glue(&g1, &g2, 3, 2).unwrap();
        let mut gens = spliced.generators().to_vec();
        gens.sort();
        assert_eq!(
            gens,
            vec![m(&[0, 0, 3]), m(&[0, 1, 2]), m(&[1, 0, 2]), m(&[1, 1, 1])]
        );
        assert_eq!(spliced.f_vector().counts(), &[1, 3, 4, 4]);
    }

    #[test]
    fn splice_validation_order() {
        let g1 = ideal(3, &[&[0, 0, 1]]);
        let g2 = ideal(2, &[&[1, 0]]);
        assert!(matches!(glue(&g1, &g2, 3, 1), Err(Error::VarCountMismatch(2, 3))));

        let g2 = ideal(3, &[&[1, 0, 0]]);
        assert!(matches!(glue(&g1, &g2, 4, 1), Err(Error::VarIndexOutOfRange { .. })));
        assert!(matches!(glue(&g1, &g2, 3, 0), Err(Error::ParameterRange(_))));

        let uses_r = ideal(3, &[&[0, 0, 2]]);
        assert!(matches!(glue(&g1, &uses_r, 3, 1), Err(Error::GlueVariableUsed(3))));

        let g1 = ideal(2, &[&[1, 1]]);
        let g2 = ideal(2, &[&[0, 0]]);
        match glue(&g1, &g2, 1, 2) {
            Err(Error::Incompatible { witness }) => assert_eq!(witness, m(&[1, 1])),
            other => panic!("expected incompatibility, got {other:?}"),
        }
    }

    #[test]
    fn splice_rejects_mixed_socle_degrees() {
        let g1 = ideal(2, &[&[1, 0]]);
        let g2 = ideal(2, &[&[3, 0]]);
        assert!(matches!(glue(&g1, &g2, 2, 1), Err(Error::GlueResultNotPure)));
    }

    #[test]
    fn splice_handles_missing_parts() {
        let empty = OrderIdeal::new(3, Vec::new()).unwrap();
        let both = glue(&empty, &empty, 1, 3).unwrap();
        assert!(both.generators().is_empty());

        let g2 = ideal(3, &[&[1, 1, 0]]);
        let only_second = glue(&empty, &g2, 3, 2).unwrap();
        let mut gens = only_second.generators().to_vec();
        gens.sort();
        assert_eq!(gens, vec![m(&[1, 1, 1])]);
        assert_eq!(only_second.f_vector().counts(), &[1, 3, 3, 1]);

        let g1 = ideal(3, &[&[1, 0, 0]]);
        assert!(matches!(glue(&g1, &empty, 3, 1), Err(Error::Incompatible { .. })));
    }

    // End-to-end: splice the order ideals of a 4-class complete matroid and
    // a 2-class coarsening, and compare against the cover h-vector of the
    // 5-class rank-3 matroid the construction models.
    #[test]
    fn spliced_ideal_matches_cover_counts() {
        let a = WeightVector::new(vec![2, 1, 3, 2, 2]).unwrap();
        let ps = [
            pm(&[&[1], &[2], &[3, 4]], &a),
            pm(&[&[1], &[2, 3], &[4]], &a),
            pm(&[&[1, 2], &[3], &[4]], &a),
        ];
        let qs = [pm(&[&[1, 2], &[3, 4]], &a)];
        let g1 = OrderIdeal::new(3, ps.iter().map(|p| p.realize()).collect()).unwrap();
        let g2 = OrderIdeal::new(
            3,
            qs.iter().map(|q| embed_monomial(&q.realize(), 3).unwrap()).collect(),
        )
        .unwrap();
        let spliced = glue(&g1, &g2, 3, a.weights()[4]).unwrap();

        let expected: Vec<Monomial> = [
            pm(&[&[1], &[2], &[3, 4, 5]], &a),
            pm(&[&[1], &[2, 3], &[4, 5]], &a),
            pm(&[&[1, 2], &[3], &[4, 5]], &a),
            pm(&[&[1, 2], &[3, 4], &[5]], &a),
        ]
        .iter()
        .map(|p| p.realize())
        .collect();
        let mut want = expected;
        want.sort();
        let mut got = spliced.generators().to_vec();
        got.sort();
        assert_eq!(got, want);

        let class_facets: Vec<Vec<usize>> = [
            [1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4],
            [1, 3, 5], [1, 4, 5], [2, 3, 5], [2, 4, 5],
        ]
        .iter()
        .map(|f| f.to_vec())
        .collect();
        let m = Matroid::new(expand_classes_complex(&class_facets, &a).unwrap()).unwrap();
        let target = h_vector(&m.dual().complex().f_vector());
        assert_eq!(spliced.f_vector(), target.to_fvector().unwrap());
    }

    #[test]
    fn splice_rejects_when_weights_flip() {
        let a = WeightVector::new(vec![1, 3, 1, 2, 1]).unwrap();
        let ps = [
            pm(&[&[1], &[2], &[3, 4]], &a),
            pm(&[&[1], &[2, 3], &[4]], &a),
            pm(&[&[1, 2], &[3], &[4]], &a),
        ];
        let qs = [pm(&[&[1, 2], &[3, 4]], &a)];
        let g1 = OrderIdeal::new(3, ps.iter().map(|p| p.realize()).collect()).unwrap();
        let g2 = OrderIdeal::new(
            3,
            qs.iter().map(|q| embed_monomial(&q.realize(), 3).unwrap()).collect(),
        )
        .unwrap();
        match glue(&g1, &g2, 3, 1) {
            Err(Error::Incompatible { witness }) => assert_eq!(witness.exponents(), &[0, 3, 1]),
            other => panic!("expected incompatibility, got {other:?}"),
        }
    }

    #[test]
    fn monomial_embedding() {
        assert_eq!(embed_monomial(&m(&[2, 5]), 2).unwrap(), m(&[2, 0, 5]));
        assert_eq!(embed_monomial(&m(&[2, 5]), 1).unwrap(), m(&[0, 2, 5]));
        assert_eq!(embed_monomial(&m(&[2, 5]), 3).unwrap(), m(&[2, 5, 0]));
        assert!(embed_monomial(&m(&[2, 5]), 4).is_err());
    }
}
