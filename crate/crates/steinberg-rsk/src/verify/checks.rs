//! The individual verification checks. Each returns a one-line summary on
//! success and the first failure as an error.

use rand::Rng;

use super::VerifyConfig;
use crate::correspondence::{
    bordered_matrix, census, dual, enumerate_pp, forward, inverse, random_pp,
    CorrespondenceTriple, PartialPermutation,
};
use crate::error::{Error, Result};
use crate::oracle::{
    bordered_source_flag, bordered_target_flag, diagram_of_summands, direct_sum, dual_orbit_check,
    generic_conormal_sample, indecomposable, quotient_chain, schubert_position, tab_chain, Flag,
};
use crate::partition::{Composition, Partition};
use crate::signed::{enumerate_asyd, enumerate_syd, Sign, Signature, SignedYoungDiagram};
use crate::tableau::{enumerate_syt, enumerate_with_content, RowStandardTableau};

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut out: u64 = 1;
    for i in 0..k {
        out = out * (n - i) as u64 / (i + 1) as u64;
    }
    out
}

/// Closed form for the number of partial permutations of size p x q.
pub fn pp_count_closed_form(p: usize, q: usize) -> u64 {
    (0..=p.min(q))
        .map(|k| {
            let fact: u64 = (1..=k as u64).product();
            binomial(p, k) * binomial(q, k) * fact
        })
        .sum()
}

fn fail(msg: String) -> Error {
    Error::Inconsistent(msg)
}

/// Census identity: the forward map is a bijection onto the disjoint union
/// of tableau pairs over admissible diagrams, and the total count matches
/// the closed form.
pub fn census_identity(cfg: &VerifyConfig) -> Result<String> {
    let mut rsk = cfg.rsk()?;
    let mut rng = cfg.rng(1);
    let (pmax, qmax) = (cfg.pmax.min(4), cfg.qmax.min(4));
    let mut cases = 0u64;
    for p in 1..=pmax {
        for q in 1..=qmax {
            let report = census(p, q, &mut rsk, &mut rng)?;
            if !report.identity_holds {
                return Err(fail(format!(
                    "census({p},{q}) failed: {}",
                    report.failures.first().cloned().unwrap_or_default()
                )));
            }
            if report.pp_count != pp_count_closed_form(p, q) {
                return Err(fail(format!(
                    "census({p},{q}) count {} differs from the closed form {}",
                    report.pp_count,
                    pp_count_closed_form(p, q)
                )));
            }
            cases += report.pp_count;
        }
    }
    for (p, q, expect) in [(1, 1, 2), (2, 2, 7), (2, 3, 13), (3, 3, 34)] {
        if p <= pmax && q <= qmax && pp_count_closed_form(p, q) != expect {
            return Err(fail(format!("spot value ({p},{q}) != {expect}")));
        }
    }
    Ok(format!(
        "identity holds for p<={pmax}, q<={qmax} ({cases} permutations)"
    ))
}

/// Round trips in both directions: inverse(forward) on every partial
/// permutation, forward(inverse) on every triple, exhaustively at small
/// size, and seeded random sampling at p = q = 4.
pub fn round_trip(cfg: &VerifyConfig) -> Result<String> {
    let mut rsk = cfg.rsk()?;
    let mut rng = cfg.rng(2);
    let (pmax, qmax) = (cfg.pmax.min(3), cfg.qmax.min(3));
    // run with whatever fast path calibration certifies (it also pre-warms
    // the memo over exactly the bordered matrices used below)
    let calibration = rsk.calibrate(pmax.min(qmax), &mut rng)?;
    let mut cases = 0usize;
    for p in 1..=pmax {
        for q in 1..=qmax {
            for t in enumerate_pp(p, q) {
                let tr = forward(&t, &mut rsk, &mut rng)?;
                let back = inverse(&tr, &mut rsk, &mut rng)?;
                if back != t {
                    return Err(fail(format!("inverse(forward({t})) = {back}")));
                }
                cases += 1;
            }
            for diagram in enumerate_asyd(Signature { q, p }) {
                for q_tab in enumerate_syt(&diagram.plus_shape()) {
                    for p_tab in enumerate_syt(&diagram.minus_shape()) {
                        let tr = CorrespondenceTriple::new(
                            diagram.clone(),
                            q_tab.clone(),
                            p_tab.clone(),
                        )?;
                        let t = inverse(&tr, &mut rsk, &mut rng)?;
                        let again = forward(&t, &mut rsk, &mut rng)?;
                        if again != tr {
                            return Err(fail(format!(
                                "forward(inverse(({}, {}, {}))) drifted",
                                diagram, q_tab, p_tab
                            )));
                        }
                        cases += 1;
                    }
                }
            }
        }
    }
    let mut random_cases = 0usize;
    if cfg.pmax >= 4 && cfg.qmax >= 4 {
        for _ in 0..200 {
            let t = random_pp(4, 4, &mut rng);
            let tr = forward(&t, &mut rsk, &mut rng)?;
            let back = inverse(&tr, &mut rsk, &mut rng)?;
            if back != t {
                return Err(fail(format!("random round trip failed on {t}")));
            }
            random_cases += 1;
        }
    }
    Ok(format!(
        "{cases} exhaustive cases (both directions, p<={pmax}, q<={qmax}), {random_cases} random at 4x4, fast path {:?}",
        calibration.fast_path
    ))
}

/// The combinatorial forward triple equals the geometric triple computed
/// from a generic conormal sample, and the bordered chains of the margin
/// construction match the chains of the embedded sample (two computation
/// routes through the geometry).
pub fn oracle_agreement(cfg: &VerifyConfig) -> Result<String> {
    let mut rsk = cfg.rsk()?;
    let mut rng = cfg.rng(3);
    let (pmax, qmax) = (cfg.pmax.min(3), cfg.qmax.min(3));
    let mut cases = 0usize;
    for p in 1..=pmax {
        for q in 1..=qmax {
            for t in enumerate_pp(p, q) {
                let tr = forward(&t, &mut rsk, &mut rng)?;
                let sample = generic_conormal_sample(&t, rsk.prime(), cfg.trials, &mut rng)?;
                if tr.diagram != sample.diagram {
                    return Err(fail(format!(
                        "{t}: diagram {} vs oracle {}",
                        tr.diagram, sample.diagram
                    )));
                }
                if tr.q_tab != sample.q_tab || tr.p_tab != sample.p_tab {
                    return Err(fail(format!(
                        "{t}: tableaux ({}, {}) vs oracle ({}, {})",
                        tr.q_tab, tr.p_tab, sample.q_tab, sample.p_tab
                    )));
                }
                // second route: bordered chains at the embedded point
                let z = sample.point.induced_nilpotent();
                let embedded = (
                    tab_chain(&z, &bordered_source_flag(sample.point.x())?)?,
                    tab_chain(&z, &bordered_target_flag(p, q)?)?,
                );
                let direct = rsk.variant_rsk(&bordered_matrix(&t), &mut rng)?;
                if direct != embedded {
                    return Err(fail(format!(
                        "{t}: bordered chains differ between routes: ({}, {}) vs ({}, {})",
                        direct.0, direct.1, embedded.0, embedded.1
                    )));
                }
                cases += 1;
            }
        }
    }
    Ok(format!(
        "{cases} permutations agree with the oracle on both routes"
    ))
}

/// The four characterizations of admissibility agree on every signed
/// diagram: shape identity, odd-row uniformity, the dimension identity, and
/// closure-maximality among diagrams with the same plus and minus shapes;
/// at small size also membership in the forward image.
pub fn admissibility_equivalences(cfg: &VerifyConfig) -> Result<String> {
    let mut rsk = cfg.rsk()?;
    let mut rng = cfg.rng(4);
    let (pmax, qmax) = (cfg.pmax.min(4), cfg.qmax.min(4));
    let mut cases = 0usize;
    for p in 1..=pmax {
        for q in 1..=qmax {
            let all = enumerate_syd(Signature { q, p });
            let image: Option<Vec<SignedYoungDiagram>> = if p <= 3 && q <= 3 {
                let mut img = Vec::new();
                for t in enumerate_pp(p, q) {
                    img.push(forward(&t, &mut rsk, &mut rng)?.diagram);
                }
                Some(img)
            } else {
                None
            };
            for d in &all {
                let by_shape = d.is_admissible();
                let by_odd_rows = d.odd_rows_uniform();
                let by_dimension = {
                    let plus = d.plus_shape();
                    let minus = d.minus_shape();
                    2 * d.orbit_dim()
                        == 2 * (plus.size() as u64) * (minus.size() as u64)
                            + plus.nilpotent_orbit_dim()
                            + minus.nilpotent_orbit_dim()
                };
                let by_maximality = all
                    .iter()
                    .filter(|e| {
                        *e != d
                            && e.plus_shape() == d.plus_shape()
                            && e.minus_shape() == d.minus_shape()
                    })
                    .all(|e| !d.closure_leq(e).unwrap_or(true));
                let by_image = image.as_ref().map(|img| img.contains(d));
                if by_shape != by_odd_rows
                    || by_shape != by_dimension
                    || by_shape != by_maximality
                    || by_image.is_some_and(|b| b != by_shape)
                {
                    return Err(fail(format!(
                        "{d}: shape {by_shape}, odd-rows {by_odd_rows}, dimension {by_dimension}, maximality {by_maximality}, image {by_image:?}"
                    )));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} diagrams, all four criteria agree"))
}

/// The explicit quiver modules have the stated Jordan types up to dimension
/// nine, and on random direct sums the matrix Jordan type of the induced
/// nilpotent matches the diagram-level shift shape.
pub fn module_lemmas(cfg: &VerifyConfig) -> Result<String> {
    let mut rng = cfg.rng(5);
    let prime = crate::oracle::resolve_prime(None)?;
    for k in 1..=9usize {
        for last in [Sign::Plus, Sign::Minus] {
            let m = indecomposable(last, k, prime)?;
            let jt = m.induced_nilpotent().jordan_type()?;
            let head = match (k % 2, last) {
                (0, Sign::Plus) => k / 2,
                _ => k / 2 + 1,
            };
            let mut expect = vec![head];
            expect.extend(std::iter::repeat_n(1, k - head));
            if jt != Partition::new(expect.clone())? {
                return Err(fail(format!(
                    "module ({last:?}, {k}) has Jordan type {jt}, expected {expect:?}"
                )));
            }
            if jt != diagram_of_summands(&[(last, k)])?.jordan_shape() {
                return Err(fail(format!(
                    "module ({last:?}, {k}) disagrees with the diagram shift shape"
                )));
            }
        }
    }
    let mut sums = 0usize;
    while sums < 500 {
        let mut summands = Vec::new();
        let mut dim = 0usize;
        while dim < 10 {
            let len = rng.random_range(1..=(10 - dim));
            let last = if rng.random_range(0..2) == 0 {
                Sign::Plus
            } else {
                Sign::Minus
            };
            summands.push((last, len));
            dim += len;
            if rng.random_range(0..3) == 0 {
                break;
            }
        }
        let parts = summands
            .iter()
            .map(|&(s, k)| indecomposable(s, k, prime))
            .collect::<Result<Vec<_>>>()?;
        let sum = direct_sum(&parts, prime);
        let diagram = diagram_of_summands(&summands)?;
        let jt = sum.induced_nilpotent().jordan_type()?;
        if jt != diagram.jordan_shape() {
            return Err(fail(format!(
                "direct sum {summands:?}: Jordan type {jt} vs shift shape {}",
                diagram.jordan_shape()
            )));
        }
        let sig = diagram.signature();
        if jt.size() != sig.q + sig.p {
            return Err(fail(format!("direct sum {summands:?}: size mismatch")));
        }
        sums += 1;
    }
    Ok(format!(
        "18 indecomposables match the stated types; {sums} random direct sums agree"
    ))
}

/// Duality is an involution matching the orbit-level dual, and the dual
/// triple is the flipped diagram with the two tableaux exchanged.
pub fn duality(cfg: &VerifyConfig) -> Result<String> {
    let mut rsk = cfg.rsk()?;
    let mut rng = cfg.rng(6);
    let (pmax, qmax) = (cfg.pmax.min(3), cfg.qmax.min(3));
    let mut cases = 0usize;
    for p in 1..=pmax {
        for q in 1..=qmax {
            for t in enumerate_pp(p, q) {
                let td = dual(&t, &mut rsk, &mut rng)?;
                let back = dual(&td, &mut rsk, &mut rng)?;
                if back != t {
                    return Err(fail(format!("dual(dual({t})) = {back}")));
                }
                let orbit_dual = dual_orbit_check(&t, rsk.prime(), cfg.trials, &mut rng)?;
                if orbit_dual != td {
                    return Err(fail(format!(
                        "{t}: orbit dual {orbit_dual} vs combinatorial dual {td}"
                    )));
                }
                let tr = forward(&t, &mut rsk, &mut rng)?;
                let trd = forward(&td, &mut rsk, &mut rng)?;
                if trd.diagram != tr.diagram.dual()
                    || trd.q_tab != tr.p_tab
                    || trd.p_tab != tr.q_tab
                {
                    return Err(fail(format!("{t}: dual triple is not (flip, P, Q)")));
                }
                cases += 1;
            }
        }
    }
    // pinned fixtures at p = q = 2
    if pmax >= 2 && qmax >= 2 {
        let mk = |ones: &[(usize, usize)]| PartialPermutation::new(2, 2, ones.to_vec());
        let pairs = [
            (mk(&[])?, mk(&[(1, 2), (2, 1)])?),
            (mk(&[(1, 1), (2, 2)])?, mk(&[(1, 2)])?),
            (mk(&[(2, 1)])?, mk(&[(2, 1)])?),
        ];
        for (a, b) in pairs {
            if dual(&a, &mut rsk, &mut rng)? != b {
                return Err(fail(format!("fixture dual({a}) != {b}")));
            }
        }
    }
    Ok(format!("{cases} permutations: involution and orbit dual agree"))
}

/// The relative position of the bordered flags at a sampled orbit point is
/// exactly the bordered matrix of the orbit.
pub fn bordered_schubert_consistency(cfg: &VerifyConfig) -> Result<String> {
    let mut rng = cfg.rng(7);
    let prime = crate::oracle::resolve_prime(None)?;
    let (pmax, qmax) = (cfg.pmax.min(3), cfg.qmax.min(3));
    let mut cases = 0usize;
    for p in 1..=pmax {
        for q in 1..=qmax {
            for t in enumerate_pp(p, q) {
                let x = crate::oracle::sample_orbit_point(&t, prime, &mut rng)?;
                let pos = schubert_position(
                    &bordered_source_flag(&x)?,
                    &bordered_target_flag(p, q)?,
                    prime,
                )?;
                if pos != bordered_matrix(&t) {
                    return Err(fail(format!(
                        "{t}: relative position {pos:?} vs bordered {:?}",
                        bordered_matrix(&t)
                    )));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} sampled configurations match the border"))
}

/// Evacuation is an involution on the stated tableau families, rectification
/// has the right contents and sizes, and the jeu-de-taquin slide rule is
/// certified against the quotient-flag oracle on every small instance.
pub fn tableau_engine(cfg: &VerifyConfig) -> Result<String> {
    // involutivity on all standard tableaux with up to 6 boxes
    let mut involution_cases = 0usize;
    for n in 1..=6usize {
        for shape in Partition::all_of(n) {
            for t in enumerate_syt(&shape) {
                let e = t.evacuate()?;
                if e.shape() != t.shape() || e.evacuate()? != t {
                    return Err(fail(format!("evacuation not involutive on {t}")));
                }
                involution_cases += 1;
            }
        }
    }
    // contents (1, ..., 1, m) and (m, 1, ..., 1) with at most 6 boxes
    for total in 1..=6usize {
        for m in 1..=total {
            let k = total - m;
            let mut head = vec![1usize; k];
            head.push(m);
            let mut tail = vec![m];
            tail.extend(vec![1usize; k]);
            for content in [head, tail] {
                let comp = Composition::new(content)?;
                for t in enumerate_with_content(&comp) {
                    let e = t.evacuate()?;
                    if e.content() != comp.reversed() {
                        return Err(fail(format!("evacuation content drift on {t}")));
                    }
                    if e.evacuate()? != t {
                        return Err(fail(format!("evacuation not involutive on {t}")));
                    }
                    for i in 0..=t.steps() {
                        let r = t.rectify(i)?;
                        if r.content().parts() != &comp.parts()[i..] {
                            return Err(fail(format!("rectify({t}, {i}) content drift")));
                        }
                    }
                    involution_cases += 1;
                }
            }
        }
    }
    // jeu-de-taquin certification against the quotient-flag oracle
    let mut rng = cfg.rng(8);
    let prime = crate::oracle::resolve_prime(None)?;
    let (pmax, qmax) = (cfg.pmax.min(3), cfg.qmax.min(3));
    let mut oracle_cases = 0usize;
    for p in 1..=pmax {
        for q in 1..=qmax {
            for t in enumerate_pp(p, q) {
                let sample = generic_conormal_sample(&t, prime, cfg.trials, &mut rng)?;
                let z = sample.point.induced_nilpotent();
                let src = bordered_source_flag(sample.point.x())?;
                let tgt = bordered_target_flag(p, q)?;
                for (flag, name) in [(&src, "source"), (&tgt, "target")] {
                    let chain = tab_chain(&z, flag)?;
                    // rectification at every index against the quotient flags
                    let adapted = flag.adapt(&z)?;
                    let comp = flag.composition();
                    for i in 0..=chain.steps() {
                        let cut = if i == 0 { 0 } else { flag.cuts()[i - 1] };
                        let expected = if i == chain.steps() {
                            RowStandardTableau::empty()
                        } else {
                            tab_chain(
                                &adapted.trailing(cut),
                                &Flag::coordinate(&Composition::new(
                                    comp.parts()[i..].to_vec(),
                                )?),
                            )?
                        };
                        if chain.rectify(i)? != expected {
                            return Err(fail(format!(
                                "{t}: rectify({name} chain, {i}) disagrees with the quotient oracle"
                            )));
                        }
                    }
                    // evacuation against the reversed quotient chain
                    let ev = chain.evacuate()?;
                    if ev.chain() != quotient_chain(&z, flag)? {
                        return Err(fail(format!(
                            "{t}: evacuation of the {name} chain disagrees with the quotient oracle"
                        )));
                    }
                    oracle_cases += 1;
                }
                // the rectified target chain is the plain minus-side chain
                let ph = tab_chain(&z, &tgt)?;
                if ph.rectify(1)? != sample.p_tab {
                    return Err(fail(format!(
                        "{t}: rectify(target chain, 1) is not the minus-side chain"
                    )));
                }
            }
        }
    }
    Ok(format!(
        "{involution_cases} involution cases, {oracle_cases} oracle-certified chains"
    ))
}

/// Poset lemmas: the closure order implies dominance of shapes and of the
/// plus/minus pair, the shape is always dominated by the sum of the plus
/// and minus shapes, and the closure relation is a partial order.
pub fn poset_lemmas(cfg: &VerifyConfig) -> Result<String> {
    let (pmax, qmax) = (cfg.pmax.min(4), cfg.qmax.min(4));
    let mut pairs = 0usize;
    for p in 1..=pmax {
        for q in 1..=qmax {
            let all = enumerate_syd(Signature { q, p });
            for d in &all {
                let sum = d.plus_shape().add(&d.minus_shape());
                if !d.shape().dominance_leq(&sum)? {
                    return Err(fail(format!("{d}: shape not below plus+minus")));
                }
            }
            let n = all.len();
            let mut leq = vec![vec![false; n]; n];
            for (i, a) in all.iter().enumerate() {
                for (j, b) in all.iter().enumerate() {
                    leq[i][j] = a.closure_leq(b)?;
                    if leq[i][j] {
                        if !a.shape().dominance_leq(&b.shape())? {
                            return Err(fail(format!("{a} <= {b} but shapes not dominated")));
                        }
                        if !a.plus_shape().dominance_leq(&b.plus_shape())?
                            || !a.minus_shape().dominance_leq(&b.minus_shape())?
                        {
                            return Err(fail(format!(
                                "{a} <= {b} but plus/minus shapes not dominated"
                            )));
                        }
                    }
                    pairs += 1;
                }
            }
            for i in 0..n {
                if !leq[i][i] {
                    return Err(fail(format!("{}: closure not reflexive", all[i])));
                }
                for j in 0..n {
                    if i != j && leq[i][j] && leq[j][i] {
                        return Err(fail(format!(
                            "{} and {} violate antisymmetry",
                            all[i], all[j]
                        )));
                    }
                    if leq[i][j] {
                        for k in 0..n {
                            if leq[j][k] && !leq[i][k] {
                                return Err(fail(format!(
                                    "{} <= {} <= {} violates transitivity",
                                    all[i], all[j], all[k]
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} diagram pairs checked"))
}
