use super::embed::*;
use super::*;
use crate::catalog;
use crate::deformation::{AltMap, DeformationComplex};
use crate::graded::{from_lie, from_lie_rep, GradedRepresentation, GradedVectorSpace, Sgla};
use crate::lie::{adjoint, is_o_operator, search_oop, LieAlgebra, LinearOperator, Representation};
use crate::linalg::Matrix;
use crate::perm::parity_sign;
use crate::prelie::{check_prelie, induce_prelie};
use crate::random::{self, ChaCha8Rng};
use crate::scalar::Rational;
use rand::Rng;

fn r(n: i64) -> Rational {
    Rational::from_int(n)
}

fn grid() -> Vec<Rational> {
    vec![r(-1), r(0), r(1)]
}

/// Every O-operator with entries in `{-1, 0, 1}` on the small ungraded pairs.
fn catalog_operators() -> Vec<(LieAlgebra, Representation, LinearOperator)> {
    let mut out = Vec::new();
    for (_, l, rep) in catalog::small_pairs() {
        if l.dim() * rep.space_dim() > 6 {
            continue;
        }
        for op in search_oop(&l, &rep, &grid(), 1 << 20, false).unwrap() {
            out.push((l.clone(), rep.clone(), op));
        }
    }
    out
}

fn signed(c: &GradedCochain, s: i32) -> GradedCochain {
    c.scaled(&r(s.into()))
}

fn same(a: &GradedCochain, b: &GradedCochain, p: usize) -> bool {
    a.truncated(p) == b.truncated(p)
}

fn pick_pair(rng: &mut ChaCha8Rng) -> (Sgla, GradedRepresentation) {
    let pairs = catalog::graded_pairs();
    let (_, g, rep) = pairs[rng.random_range(0..pairs.len())].clone();
    (g, rep)
}

#[test]
fn zero_operator_is_homotopy_o_operator() {
    let (g, rep) = catalog::gl11();
    let t = HomotopyOperator::zero(2, rep.space(), g.space());
    assert!(is_homotopy_oop(&t, &g, &rep, 4).unwrap());
    assert!(mc_check_homotopy(&t, &g, &rep, 4).unwrap());
    assert!(is_homotopy_rbo(&HomotopyOperator::zero(2, g.space(), g.space()), &g, 4).unwrap());
}

#[test]
fn bracket_with_zero_vanishes() {
    let mut rng = random::rng(3);
    let (g, rep) = catalog::gl11();
    let f = random::cochain(&mut rng, 0, 2, rep.space(), g.space());
    let z = GradedCochain::zero(1, 2, rep.space(), g.space());
    assert!(graded_bracket(&f, &z, &g, &rep, 4).unwrap().is_zero());
}

#[test]
fn half_square_equals_direct_residual() {
    let mut rng = random::rng(11);
    for _ in 0..30 {
        let (g, rep) = pick_pair(&mut rng);
        let t = random::homotopy_operator(&mut rng, 2, rep.space(), g.space());
        let mc = mc_residual_homotopy(&t, &g, &rep, 4).unwrap();
        let direct = homotopy_oop_residual(&t, &g, &rep, 4).unwrap();
        for (p, d) in direct.iter().enumerate() {
            assert_eq!(mc.component(p).unwrap(), d, "weight {p}");
        }
    }
}

#[test]
fn low_identities_match_general_formula() {
    let mut rng = random::rng(12);
    for _ in 0..40 {
        let (g, rep) = pick_pair(&mut rng);
        let t = random::homotopy_operator(&mut rng, 2, rep.space(), g.space());
        let low = expand_low_identities(&t, &g, &rep).unwrap();
        let general = homotopy_oop_residual(&t, &g, &rep, 2).unwrap();
        for p in 0..3 {
            assert_eq!(low[p], general[p], "weight {p}");
        }
    }
}

#[test]
fn low_identities_need_two_components() {
    let (g, rep) = catalog::borel_pair();
    let t = HomotopyOperator::zero(1, rep.space(), g.space());
    assert!(matches!(
        expand_low_identities(&t, &g, &rep),
        Err(crate::Error::Truncation { .. })
    ));
}

#[test]
fn omega_only_reduces_to_its_square() {
    // Ω = E_{v1v0} of degree 0; T_1 = T_2 = 0
    let (g, rep) = catalog::gl11();
    let mut c = GradedCochain::zero(0, 2, rep.space(), g.space());
    let mut omega = GradedSymMap::zero(0, 0, rep.space(), g.space());
    omega.set(vec![], vec![r(0), r(0), r(1), r(0)]).unwrap();
    c.set_component(omega).unwrap();
    let t = HomotopyOperator::new(c).unwrap();
    let low = expand_low_identities(&t, &g, &rep).unwrap();
    let half = Rational::half();
    let sq = g.bracket(&t.omega(), &t.omega());
    let expected: Vec<Rational> = sq.iter().map(|x| x.clone() * half.clone()).collect();
    assert_eq!(low[0].eval(&[]).unwrap(), expected);
}

/// In degree -1 the graded bracket of embedded maps is the ungraded
/// bracket, embedded.
#[test]
fn reduces_to_the_ungraded_bracket() {
    let mut rng = random::rng(13);
    for (_, l, rep) in catalog::small_pairs() {
        let cx = DeformationComplex::new(&l, &rep).unwrap();
        let (g, grep) = (from_lie(&l), from_lie_rep(&rep));
        for _ in 0..4 {
            for (n, m) in [(0, 1), (1, 1), (1, 2), (2, 1), (0, 2), (2, 2)] {
                let f = random::alt_map(&mut rng, n, rep.space_dim(), l.dim());
                let h = random::alt_map(&mut rng, m, rep.space_dim(), l.dim());
                let graded = graded_bracket(
                    &embed_alt_cochain(&f, &l, &rep).unwrap(),
                    &embed_alt_cochain(&h, &l, &rep).unwrap(),
                    &g,
                    &grep,
                    n + m,
                )
                .unwrap();
                let expected = embed_alt(&cx.bracket(&f, &h).unwrap(), &l, &rep).unwrap();
                assert_eq!(graded.component(n + m).unwrap(), &expected, "arities {n},{m}");
                for p in 0..n + m {
                    assert!(graded.component(p).unwrap().is_zero());
                }
            }
        }
    }
}

/// Graded skew-symmetry and Jacobi for the bracket with suspended degrees
/// `m + 1`, and the sgLa axioms for the décalage `{f,g} = (-1)^{m+1}⟦f,g⟧`
/// in the unshifted degree `m`.
#[test]
fn graded_lie_axioms_on_random_triples() {
    let mut rng = random::rng(14);
    let p = 4;
    for _ in 0..12 {
        let (g, rep) = pick_pair(&mut rng);
        let degs: Vec<i32> = (0..3).map(|_| rng.random_range(-1..=1)).collect();
        let [f, h, k] = [0, 1, 2].map(|i| random::cochain(&mut rng, degs[i], 2, rep.space(), g.space()));
        let [m, n, q] = [degs[0], degs[1], degs[2]].map(i64::from);
        let br = |a: &GradedCochain, b: &GradedCochain| graded_bracket(a, b, &g, &rep, p).unwrap();
        let (sm, sn) = (m + 1, n + 1);

        let skew = signed(&br(&h, &f), -parity_sign(sm * sn));
        assert!(same(&br(&f, &h), &skew, p));

        let lhs = br(&f, &br(&h, &k));
        let rhs = br(&br(&f, &h), &k).add(&signed(&br(&h, &br(&f, &k)), parity_sign(sm * sn))).unwrap();
        assert!(same(&lhs, &rhs, p));

        let dec = |a: &GradedCochain, b: &GradedCochain| signed(&br(a, b), parity_sign(i64::from(a.degree()) + 1));
        assert!(same(&dec(&f, &h), &signed(&dec(&h, &f), parity_sign(m * n)), p));
        let lhs = dec(&f, &dec(&h, &k));
        let rhs = signed(&dec(&dec(&f, &h), &k), parity_sign(m + 1))
            .add(&signed(&dec(&h, &dec(&f, &k)), parity_sign((m + 1) * (n + 1))))
            .unwrap();
        assert!(same(&lhs, &rhs, p), "degrees {m} {n} {q}");
    }
}

#[test]
fn maurer_cartan_matches_residual_on_random_failures() {
    let mut rng = random::rng(15);
    let mut failures = 0;
    for _ in 0..20 {
        let (g, rep) = pick_pair(&mut rng);
        let t = random::homotopy_operator(&mut rng, 2, rep.space(), g.space());
        let direct = is_homotopy_oop(&t, &g, &rep, 4).unwrap();
        assert_eq!(mc_check_homotopy(&t, &g, &rep, 4).unwrap(), direct);
        failures += usize::from(!direct);
    }
    assert!(failures > 10);
}

#[test]
fn embedded_o_operators_agree() {
    let mut rng = random::rng(16);
    for (l, rep, op) in catalog_operators() {
        let (g, grep) = (from_lie(&l), from_lie_rep(&rep));
        let t = embed_operator(&op, &l, &rep).unwrap();
        assert!(is_homotopy_oop(&t, &g, &grep, 3).unwrap());
        assert!(mc_check_homotopy(&t, &g, &grep, 3).unwrap());
        let bad = random::operator(&mut rng, rep.space_dim(), l.dim());
        let tb = embed_operator(&bad, &l, &rep).unwrap();
        assert_eq!(
            is_homotopy_oop(&tb, &g, &grep, 2).unwrap(),
            is_o_operator(&l, &rep, &bad).unwrap()
        );
    }
}

#[test]
fn embedded_rota_baxter_and_perturbation() {
    let l = catalog::aff2();
    let p = LinearOperator::endomorphism(Matrix::from_int_rows(&[&[0, 1], &[0, 0]]));
    let g = from_lie(&l);
    let ad = adjoint(&l);
    let t = embed_operator(&p, &l, &ad).unwrap();
    assert!(is_homotopy_rbo(&t, &g, 4).unwrap());
    let q = LinearOperator::endomorphism(Matrix::from_int_rows(&[&[1, 1], &[0, 0]]));
    let tq = embed_operator(&q, &l, &ad).unwrap();
    let rep = check_homotopy_rbo(&tq, &g, 4).unwrap();
    assert!(!rep.pass);
    assert_eq!(rep.order, Some(4));
    assert_eq!(rep.witness.unwrap().args.len(), 2);
}

#[test]
fn psi_is_a_homomorphism_on_random_data() {
    let mut rng = random::rng(17);
    for _ in 0..25 {
        let (g, rep) = pick_pair(&mut rng);
        let (m, n) = (rng.random_range(-1..=1), rng.random_range(-1..=1));
        let f = random::cochain(&mut rng, m, 2, rep.space(), g.space());
        let h = random::cochain(&mut rng, n, 2, rep.space(), g.space());
        assert!(check_psi_homomorphism(&f, &h, &g, &rep, 4).unwrap(), "degrees {m} {n}");
    }
}

#[test]
fn psi_of_zero_and_degree() {
    let (g, rep) = catalog::gl11();
    let z = GradedCochain::zero(0, 2, rep.space(), g.space());
    let pz = psi(&z, &g, &rep).unwrap();
    assert!(pz.is_zero());
    assert_eq!(pz.degree(), 1);
}

/// `[L,L]^c` is `-2` times the coherence residual, so squaring to zero and
/// clause (ii) coincide.
#[test]
fn square_of_operations_is_the_coherence_residual() {
    let mut rng = random::rng(18);
    for _ in 0..20 {
        let dim = rng.random_range(1..=2);
        let space = random::graded_space(&mut rng, dim, "v");
        let l = random::prelie_infinity(&mut rng, 3, &space);
        let sq = gm_bracket(l.ops(), l.ops(), 4).unwrap();
        for p in 0..=4 {
            for word in canonical_words(space.degrees(), p) {
                for last in 0..space.dim() {
                    let res = prelie_infinity_residual(&l, &word, last);
                    let got = sq.component(p).map(|c| c.eval(&word, last).unwrap());
                    let expected: Vec<Rational> = res.iter().map(|x| x.clone() * r(-2)).collect();
                    assert_eq!(got.unwrap_or_else(|| vec![r(0); space.dim()]), expected);
                }
            }
        }
    }
}

#[test]
fn embedded_prelie_checks_agree() {
    let mut rng = random::rng(19);
    let names = |n: usize| (1..=n).map(|i| format!("e{i}")).collect::<Vec<_>>();
    let mut passes = 0;
    for i in 0..40 {
        let prod = if i % 4 == 0 {
            let (l, rep, op) = {
                let ops = catalog_operators();
                ops[rng.random_range(0..ops.len())].clone()
            };
            induce_prelie(&l, &rep, &op).unwrap()
        } else {
            let n = rng.random_range(1..=2);
            random::prelie_product(&mut rng, names(n))
        };
        let emb = embed_prelie(&prod).unwrap();
        let ok = is_prelie_infinity(&emb, 4).unwrap();
        assert_eq!(ok, check_prelie(&prod).pass);
        passes += usize::from(ok);
    }
    assert!(passes >= 10);
}

#[test]
fn induced_operations_from_embedded_operators() {
    for (l, rep, op) in catalog_operators() {
        let (g, grep) = (from_lie(&l), from_lie_rep(&rep));
        let t = embed_operator(&op, &l, &rep).unwrap();
        let lp = induce_prelie_infinity(&t, &g, &grep, complete_order(&t)).unwrap();
        assert!(is_prelie_infinity(&lp, 4).unwrap());
        let expected = embed_prelie(&induce_prelie(&l, &rep, &op).unwrap()).unwrap();
        assert_eq!(lp.ops().component(1), expected.ops().component(1));
        assert!(lp.ops().component(0).is_none());
    }
}

#[test]
fn unverified_operator_is_rejected() {
    let l = catalog::aff2();
    let q = LinearOperator::endomorphism(Matrix::identity(2));
    let ad = adjoint(&l);
    let t = embed_operator(&q, &l, &ad).unwrap();
    assert!(matches!(
        induce_prelie_infinity(&t, &from_lie(&l), &from_lie_rep(&ad), 2),
        Err(crate::Error::NotHomotopyOOperator { order: 2 })
    ));
}

/// Grid search on genuinely graded instances, including operators with a
/// nonzero `Ω` whose induced `m_1` is nonzero.
#[test]
fn graded_search_instances() {
    let mut with_omega = 0;
    for (g, rep) in [catalog::borel_pair(), {
        let (g, _) = catalog::borel_pair();
        let ad = crate::graded::graded_adjoint(&g);
        (g, ad)
    }] {
        let found = search_homotopy_oop(&g, &rep, 2, &grid(), 1 << 16, 4, false).unwrap();
        assert!(found.len() > 1);
        for t in &found {
            assert!(mc_check_homotopy(t, &g, &rep, 4).unwrap());
            let lp = induce_prelie_infinity(t, &g, &rep, 4).unwrap();
            assert!(is_prelie_infinity(&lp, 4).unwrap());
            if !crate::linalg::is_zero_vec(&t.omega()) && lp.ops().component(0).is_some() {
                with_omega += 1;
            }
        }
    }
    assert!(with_omega > 0);
}

#[test]
fn truncation_bound() {
    let (g, rep) = catalog::borel_pair();
    let t = HomotopyOperator::zero(1, rep.space(), g.space());
    assert!(matches!(
        homotopy_oop_residual(&t, &g, &rep, MAX_WEIGHT + 1),
        Err(crate::Error::Truncation { .. })
    ));
}

#[test]
fn degree_minus_one_embedding_shapes() {
    let l = catalog::aff2();
    let rep = adjoint(&l);
    let f = AltMap::from_fn(2, 2, 2, |_| vec![r(1), r(0)]).unwrap();
    let e = embed_alt(&f, &l, &rep).unwrap();
    assert_eq!((e.weight(), e.degree()), (2, 1));
    let v: &GradedVectorSpace = e.domain();
    assert_eq!(v.degrees(), &[-1, -1]);
}
