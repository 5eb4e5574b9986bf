//! Orbits of matrices under pairs of Borel groups, conormal spaces, and
//! generic sampling with agreement certificates.

use rand::Rng;

use crate::correspondence::PartialPermutation;
use crate::error::{Error, Result};
use crate::oracle::flags::Flag;
use crate::oracle::matrix::FieldMatrix;
use crate::oracle::modules::ModulePoint;
use crate::partition::Composition;
use crate::signed::{enumerate_syd, Sign, Signature, SignedYoungDiagram};
use crate::tableau::RowStandardTableau;

/// Retry rounds for the genericity protocol.
pub const RETRY_ROUNDS: usize = 3;
/// Default number of independent trials per certificate.
pub const DEFAULT_TRIALS: usize = 5;

/// The unique signed diagram whose rank invariants match the pair: plus and
/// minus Jordan types, and the kernel filtration of x(yx)^i and y(xy)^i.
pub fn diagram_of_pair(pt: &ModulePoint) -> Result<SignedYoungDiagram> {
    let q = pt.q();
    let p = pt.p();
    let plus = pt.yx().jordan_type()?;
    let minus = pt.xy().jordan_type()?;
    let max_i = (q + p) / 2 + 1;
    let mut plus_kernels = Vec::new();
    let mut minus_kernels = Vec::new();
    let mut xp = pt.x().clone(); // x (yx)^i
    let mut yp = pt.y().clone(); // y (xy)^i
    for _ in 0..=max_i {
        plus_kernels.push(xp.kernel_dim());
        minus_kernels.push(yp.kernel_dim());
        xp = xp.mul(&pt.yx());
        yp = yp.mul(&pt.xy());
    }
    let mut matches = enumerate_syd(Signature { q, p }).into_iter().filter(|d| {
        d.plus_shape() == plus
            && d.minus_shape() == minus
            && (0..=max_i).all(|i| {
                d.boxes_in_first_columns(Sign::Plus, 2 * i + 1).unwrap() == plus_kernels[i]
                    && d.boxes_in_first_columns(Sign::Minus, 2 * i + 1).unwrap()
                        == minus_kernels[i]
            })
    });
    let found = matches
        .next()
        .ok_or_else(|| Error::Inconsistent("no signed diagram matches the pair".into()))?;
    if matches.next().is_some() {
        return Err(Error::Inconsistent(
            "signed diagram of a pair is not unique".into(),
        ));
    }
    Ok(found)
}

/// The orbit of `x` under the upper-triangular groups acting on both sides,
/// as a partial permutation, read off the rank table dim(x E_i + F_j) by
/// finite differencing.
#[allow(clippy::needless_range_loop)] // 2-d rank tables read naturally with indices
pub fn orbit_of_matrix(x: &FieldMatrix) -> Result<PartialPermutation> {
    let p = x.rows();
    let q = x.cols();
    let modulus = x.modulus();
    // table[i][j] = dim(x E_i + F_j), coordinate flags on both sides
    let mut excess = vec![vec![0usize; p + 1]; q + 1];
    for i in 0..=q {
        for j in 0..=p {
            let xe = x.submatrix(0..p, 0..i);
            let mut fj = FieldMatrix::zero(p, j, modulus);
            for r in 0..j {
                fj.set(r, r, 1);
            }
            excess[i][j] = FieldMatrix::hstack(&[&xe, &fj]).rank() - j;
        }
    }
    let mut ones = Vec::new();
    for l in 1..=q {
        for k in 1..=p {
            let count = excess[l][k - 1] + excess[l - 1][k]
                - excess[l - 1][k - 1]
                - excess[l][k];
            match count {
                0 => {}
                1 => ones.push((k, l)),
                _ => {
                    return Err(Error::Inconsistent(
                        "rank table is not a partial permutation".into(),
                    ))
                }
            }
        }
    }
    PartialPermutation::new(p, q, ones)
}

/// A random point of the orbit of `t` with respect to the coordinate flags:
/// the 0/1 matrix of `t` multiplied by random invertible upper-triangular
/// matrices on both sides.
pub fn sample_orbit_point<R: Rng + ?Sized>(
    t: &PartialPermutation,
    modulus: u64,
    rng: &mut R,
) -> Result<FieldMatrix> {
    let g = FieldMatrix::random_invertible_upper(t.q(), modulus, rng);
    let h = FieldMatrix::random_invertible_upper(t.p(), modulus, rng);
    let x = h.mul(&t.as_field_matrix(modulus)).mul(&g.inverse()?);
    if orbit_of_matrix(&x)? != *t {
        return Err(Error::Inconsistent("orbit sample left its orbit".into()));
    }
    Ok(x)
}

/// Basis of the conormal space at `x`: all y with both yx and xy strictly
/// upper-triangular in the coordinate orders.
pub fn conormal_basis(x: &FieldMatrix) -> Vec<FieldMatrix> {
    let p = x.rows();
    let q = x.cols();
    let modulus = x.modulus();
    // unknowns: y[u][v] for u < q, v < p, flattened as u * p + v
    let mut constraints = Vec::new();
    // (y x)[r][c] = sum_w y[r][w] x[w][c] must vanish for r >= c
    for r in 0..q {
        for c in 0..=r.min(q - 1) {
            let mut row = vec![0u64; q * p];
            for w in 0..p {
                row[r * p + w] = x.get(w, c);
            }
            constraints.push(row);
        }
    }
    // (x y)[r][c] = sum_w x[r][w] y[w][c] must vanish for r >= c
    for r in 0..p {
        for c in 0..=r.min(p - 1) {
            let mut row = vec![0u64; q * p];
            for w in 0..q {
                row[w * p + c] = x.get(r, w);
            }
            constraints.push(row);
        }
    }
    let system = FieldMatrix::from_rows(constraints, modulus).expect("rectangular");
    system
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mut y = FieldMatrix::zero(q, p, modulus);
            for u in 0..q {
                for w in 0..p {
                    y.set(u, w, v[u * p + w]);
                }
            }
            y
        })
        .collect()
}

/// A generic conormal sample over the orbit of `t`, with its certificate:
/// the signed diagram of the pair and the two flag-restricted chains. All
/// trials must agree; disagreement triggers fresh sampling, and persistent
/// instability is an error rather than an unverified answer.
#[derive(Clone, Debug)]
pub struct OrbitSample {
    pub point: ModulePoint,
    pub diagram: SignedYoungDiagram,
    pub q_tab: RowStandardTableau,
    pub p_tab: RowStandardTableau,
}

pub fn generic_conormal_sample<R: Rng + ?Sized>(
    t: &PartialPermutation,
    modulus: u64,
    trials: usize,
    rng: &mut R,
) -> Result<OrbitSample> {
    let trials = trials.max(2);
    for _ in 0..RETRY_ROUNDS {
        let mut agreed: Option<OrbitSample> = None;
        let mut stable = true;
        for _ in 0..trials {
            let x = sample_orbit_point(t, modulus, rng)?;
            let basis = conormal_basis(&x);
            let mut y = FieldMatrix::zero(t.q(), t.p(), modulus);
            for b in &basis {
                let mut scaled = b.clone();
                let coeff = rng.random_range(0..modulus);
                for r in 0..scaled.rows() {
                    for c in 0..scaled.cols() {
                        scaled.set(r, c, scaled.get(r, c) * coeff % modulus);
                    }
                }
                y = y.add(&scaled);
            }
            let point = ModulePoint::new(x, y)?;
            let sample = OrbitSample {
                diagram: diagram_of_pair(&point)?,
                q_tab: crate::oracle::flags::tab_chain(&point.yx(), &Flag::full(t.q()))?,
                p_tab: crate::oracle::flags::tab_chain(&point.xy(), &Flag::full(t.p()))?,
                point,
            };
            match &agreed {
                None => agreed = Some(sample),
                Some(prev) => {
                    if prev.diagram != sample.diagram
                        || prev.q_tab != sample.q_tab
                        || prev.p_tab != sample.p_tab
                    {
                        stable = false;
                        break;
                    }
                }
            }
        }
        if stable {
            return Ok(agreed.expect("at least two trials"));
        }
    }
    Err(Error::Genericity(format!(
        "conormal sample over {t} did not stabilize"
    )))
}

/// Samples a generic conormal pair over `t` and returns the orbit of the
/// covector side, computed with the roles of the two spaces swapped.
pub fn dual_orbit_check<R: Rng + ?Sized>(
    t: &PartialPermutation,
    modulus: u64,
    trials: usize,
    rng: &mut R,
) -> Result<PartialPermutation> {
    let trials = trials.max(2);
    for _ in 0..RETRY_ROUNDS {
        let mut agreed: Option<PartialPermutation> = None;
        let mut stable = true;
        for _ in 0..trials {
            let sample = generic_conormal_sample(t, modulus, trials, rng)?;
            let dual = orbit_of_matrix(sample.point.y())?;
            match &agreed {
                None => agreed = Some(dual),
                Some(prev) => {
                    if *prev != dual {
                        stable = false;
                        break;
                    }
                }
            }
        }
        if stable {
            return Ok(agreed.expect("at least two trials"));
        }
    }
    Err(Error::Genericity(format!(
        "dual orbit over {t} did not stabilize"
    )))
}

/// The unipotent embedding [[I, 0], [x, I]] of V_q (+) V_p attached to
/// x: V_q -> V_p.
pub fn embedding_matrix(x: &FieldMatrix) -> FieldMatrix {
    let p = x.rows();
    let q = x.cols();
    let m = x.modulus();
    FieldMatrix::from_blocks(
        &FieldMatrix::identity(q, m),
        &FieldMatrix::zero(q, p, m),
        x,
        &FieldMatrix::identity(p, m),
    )
}

/// The bordered flag through the source side: pieces are the images of the
/// leading coordinate subspaces of V_q under the unipotent embedding, then
/// the whole space; composition (1, ..., 1, p).
pub fn bordered_source_flag(x: &FieldMatrix) -> Result<Flag> {
    let p = x.rows();
    let q = x.cols();
    let mut parts = vec![1; q];
    parts.push(p);
    Flag::with_basis(&Composition::new(parts)?, embedding_matrix(x))
}

/// The bordered flag through the target side: V_q, then V_q plus each
/// leading coordinate subspace of V_p; composition (q, 1, ..., 1).
pub fn bordered_target_flag(p: usize, q: usize) -> Result<Flag> {
    let mut parts = vec![q];
    parts.extend(std::iter::repeat_n(1, p));
    Ok(Flag::coordinate(&Composition::new(parts)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::matrix::DEFAULT_PRIME;
    use crate::oracle::modules::indecomposable;
    use crate::partition::Partition;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const P: u64 = DEFAULT_PRIME;

    fn pp(p: usize, q: usize, ones: &[(usize, usize)]) -> PartialPermutation {
        PartialPermutation::new(p, q, ones.to_vec()).unwrap()
    }

    #[test]
    fn orbit_of_representatives() {
        assert_eq!(
            orbit_of_matrix(&FieldMatrix::zero(2, 2, P)).unwrap(),
            pp(2, 2, &[])
        );
        for t in [
            pp(2, 2, &[(1, 1), (2, 2)]),
            pp(2, 2, &[(1, 2)]),
            pp(2, 2, &[(2, 1)]),
            pp(3, 2, &[(2, 1), (1, 2)]),
        ] {
            assert_eq!(orbit_of_matrix(&t.as_field_matrix(P)).unwrap(), t);
        }
    }

    #[test]
    fn orbit_is_invariant_under_sampling() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for t in crate::correspondence::enumerate_pp(3, 2) {
            for _ in 0..3 {
                let x = sample_orbit_point(&t, P, &mut rng).unwrap();
                assert_eq!(orbit_of_matrix(&x).unwrap(), t);
            }
        }
    }

    #[test]
    fn conormal_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        // no constraints for the zero map
        assert_eq!(conormal_basis(&FieldMatrix::zero(2, 2, P)).len(), 4);
        // dense orbit has zero-dimensional conormal
        let dense = pp(2, 2, &[(1, 2), (2, 1)]);
        let x = sample_orbit_point(&dense, P, &mut rng).unwrap();
        assert_eq!(conormal_basis(&x).len(), 0);
        // single one in the corner: three parameters
        let mid = pp(2, 2, &[(1, 2)]);
        let x = sample_orbit_point(&mid, P, &mut rng).unwrap();
        assert_eq!(conormal_basis(&x).len(), 3);
    }

    #[test]
    fn generic_samples_match_fixtures() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let s = generic_conormal_sample(&pp(1, 1, &[]), P, 5, &mut rng).unwrap();
        assert_eq!(s.diagram, SignedYoungDiagram::from_strings(&["+-"]).unwrap());
        let s = generic_conormal_sample(&pp(1, 1, &[(1, 1)]), P, 5, &mut rng).unwrap();
        assert!(s.point.y().is_zero());
        assert_eq!(s.diagram, SignedYoungDiagram::from_strings(&["-+"]).unwrap());
        let s =
            generic_conormal_sample(&pp(2, 2, &[(1, 1), (2, 2)]), P, 5, &mut rng).unwrap();
        assert_eq!(
            s.diagram,
            SignedYoungDiagram::from_strings(&["-+-+"]).unwrap()
        );
        assert_eq!(s.point.xy().rank(), 1);
    }

    #[test]
    fn diagram_of_pair_fixtures() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        // x = 0, y invertible: two minus-ended rows of length 2
        let y = FieldMatrix::random_invertible_upper(2, P, &mut rng);
        let pt = ModulePoint::new(FieldMatrix::zero(2, 2, P), y).unwrap();
        assert_eq!(
            diagram_of_pair(&pt).unwrap(),
            SignedYoungDiagram::from_strings(&["+-", "+-"]).unwrap()
        );
        // x invertible, y = 0: two plus-ended rows
        let x = FieldMatrix::random_invertible_upper(2, P, &mut rng);
        let pt = ModulePoint::new(x, FieldMatrix::zero(2, 2, P)).unwrap();
        assert_eq!(
            diagram_of_pair(&pt).unwrap(),
            SignedYoungDiagram::from_strings(&["-+", "-+"]).unwrap()
        );
        // a single module point maps to its own diagram
        let m = indecomposable(Sign::Plus, 4, P).unwrap();
        assert_eq!(
            diagram_of_pair(&m).unwrap(),
            SignedYoungDiagram::from_strings(&["-+-+"]).unwrap()
        );
    }

    #[test]
    fn dual_orbit_fixtures() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        assert_eq!(
            dual_orbit_check(&pp(2, 2, &[]), P, 5, &mut rng).unwrap(),
            pp(2, 2, &[(1, 2), (2, 1)])
        );
        assert_eq!(
            dual_orbit_check(&pp(2, 2, &[(1, 2), (2, 1)]), P, 5, &mut rng).unwrap(),
            pp(2, 2, &[])
        );
        assert_eq!(
            dual_orbit_check(&pp(2, 2, &[(1, 1), (2, 2)]), P, 5, &mut rng).unwrap(),
            pp(2, 2, &[(1, 2)])
        );
    }

    #[test]
    fn embedding_block_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for t in crate::correspondence::enumerate_pp(2, 2) {
            let s = generic_conormal_sample(&t, P, 3, &mut rng).unwrap();
            let z = s.point.induced_nilpotent();
            let e = embedding_matrix(s.point.x());
            let conj = z.conjugate_by(&e).unwrap();
            // [[yx, y], [0, 0]]
            let expect = FieldMatrix::from_blocks(
                &s.point.yx(),
                s.point.y(),
                &FieldMatrix::zero(t.p(), t.q(), P),
                &FieldMatrix::zero(t.p(), t.p(), P),
            );
            assert_eq!(conj, expect);
        }
    }

    #[test]
    fn bordered_chains_share_shape_and_contents() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for t in crate::correspondence::enumerate_pp(2, 2) {
            let s = generic_conormal_sample(&t, P, 3, &mut rng).unwrap();
            let z = s.point.induced_nilpotent();
            let src = bordered_source_flag(s.point.x()).unwrap();
            let tgt = bordered_target_flag(t.p(), t.q()).unwrap();
            let qh = crate::oracle::flags::tab_chain(&z, &src).unwrap();
            let ph = crate::oracle::flags::tab_chain(&z, &tgt).unwrap();
            assert_eq!(qh.shape(), ph.shape());
            // restricting along the embedded flag equals restricting the
            // conjugated matrix along the coordinate flag
            let w = z.conjugate_by(&embedding_matrix(s.point.x())).unwrap();
            let coords = crate::oracle::flags::Flag::coordinate(&src.composition());
            assert_eq!(crate::oracle::flags::tab_chain(&w, &coords).unwrap(), qh);
            assert_eq!(qh.content().parts(), {
                let mut v = vec![1; t.q()];
                v.push(t.p());
                v
            });
            assert_eq!(ph.content().parts(), {
                let mut v = vec![t.q()];
                v.extend(vec![1; t.p()]);
                v
            });
            // the z Jordan type matches the diagram-level shift shape
            assert_eq!(z.jordan_type().unwrap(), s.diagram.jordan_shape());
        }
    }

    #[test]
    fn worked_bordered_fixture() {
        // tau = 0 at p = q = 2, x = 0: the source embedding is the identity
        let y = FieldMatrix::from_rows(vec![vec![2, 3], vec![0, 5]], P).unwrap();
        let pt = ModulePoint::new(FieldMatrix::zero(2, 2, P), y).unwrap();
        let z = pt.induced_nilpotent();
        let qh =
            crate::oracle::flags::tab_chain(&z, &bordered_source_flag(pt.x()).unwrap()).unwrap();
        let ph =
            crate::oracle::flags::tab_chain(&z, &bordered_target_flag(2, 2).unwrap()).unwrap();
        assert_eq!(
            qh,
            RowStandardTableau::from_parts(&[&[1], &[1, 1], &[2, 2]]).unwrap()
        );
        assert_eq!(
            ph,
            RowStandardTableau::from_parts(&[&[1, 1], &[2, 1], &[2, 2]]).unwrap()
        );
        assert_eq!(z.jordan_type().unwrap(), Partition::new(vec![2, 2]).unwrap());
        // the relative position of the bordered flags is the bordered matrix
        let pos = crate::oracle::flags::schubert_position(
            &bordered_source_flag(pt.x()).unwrap(),
            &bordered_target_flag(2, 2).unwrap(),
            P,
        )
        .unwrap();
        assert_eq!(
            pos.entries(),
            &[vec![1, 1, 0], vec![0, 0, 1], vec![0, 0, 1]]
        );
    }
}
