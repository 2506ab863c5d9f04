//! Small Lie algebras and representations used by tests, benches and the CLI.

use crate::graded::{from_lie, from_lie_rep, graded_adjoint, matrix_unit_sgla, GradedRepresentation, GradedVectorSpace, Sgla};
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::Matrix;

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

/// `[e1,e2] = e2`.
pub fn aff2() -> LieAlgebra {
    LieAlgebra::abelian(names(&["e1", "e2"])).with_bracket(0, 1, &[0, 1])
}

/// `[e1,e2] = e3`.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::abelian(names(&["e1", "e2", "e3"])).with_bracket(0, 1, &[0, 0, 1])
}

/// Basis `h, e, f` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::abelian(names(&["h", "e", "f"]))
        .with_bracket(0, 1, &[0, 2, 0])
        .with_bracket(0, 2, &[0, 0, -2])
        .with_bracket(1, 2, &[1, 0, 0])
}

/// `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`.
pub fn so3() -> LieAlgebra {
    LieAlgebra::abelian(names(&["e1", "e2", "e3"]))
        .with_bracket(0, 1, &[0, 0, 1])
        .with_bracket(1, 2, &[1, 0, 0])
        .with_bracket(2, 0, &[0, 1, 0])
}

/// `[e1,e2] = e2`, `[e1,e3] = e3`.
pub fn r3() -> LieAlgebra {
    LieAlgebra::abelian(names(&["e1", "e2", "e3"]))
        .with_bracket(0, 1, &[0, 1, 0])
        .with_bracket(0, 2, &[0, 0, 1])
}

/// Matrix units `E11, E12, E21, E22`.
pub fn gl2() -> LieAlgebra {
    let units = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let mut l = LieAlgebra::abelian(names(&["E11", "E12", "E21", "E22"]));
    for (i, &(a, b)) in units.iter().enumerate() {
        for (j, &(c, d)) in units.iter().enumerate() {
            // [E_ab, E_cd] = δ_bc E_ad - δ_da E_cb
            let mut v = [0i64; 4];
            if b == c {
                v[units.iter().position(|&u| u == (a, d)).unwrap()] += 1;
            }
            if d == a {
                v[units.iter().position(|&u| u == (c, b)).unwrap()] -= 1;
            }
            for (k, &x) in v.iter().enumerate() {
                l.set_constant(i, j, k, crate::scalar::Rational::from_int(x));
            }
        }
    }
    l
}

pub fn abelian(dim: usize) -> LieAlgebra {
    LieAlgebra::abelian((1..=dim).map(|i| format!("e{i}")).collect())
}

/// `aff2` acting on the plane: `e1 ↦ E11`, `e2 ↦ E12`.
pub fn aff2_standard() -> Representation {
    Representation::new(
        names(&["v1", "v2"]),
        vec![
            Matrix::from_int_rows(&[&[1, 0], &[0, 0]]),
            Matrix::from_int_rows(&[&[0, 1], &[0, 0]]),
        ],
    )
    .expect("square")
}

/// Defining representation of `sl2` on the plane.
pub fn sl2_standard() -> Representation {
    Representation::new(
        names(&["v1", "v2"]),
        vec![
            Matrix::from_int_rows(&[&[1, 0], &[0, -1]]),
            Matrix::from_int_rows(&[&[0, 1], &[0, 0]]),
            Matrix::from_int_rows(&[&[0, 0], &[1, 0]]),
        ],
    )
    .expect("square")
}

/// Every bundled Lie algebra with its name.
pub fn lie_algebras() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("abelian1", abelian(1)),
        ("abelian2", abelian(2)),
        ("aff2", aff2()),
        ("heisenberg", heisenberg()),
        ("sl2", sl2()),
        ("so3", so3()),
        ("r3", r3()),
        ("gl2", gl2()),
    ]
}

/// Lie algebra / representation pairs of dimension at most 3 on both sides.
pub fn small_pairs() -> Vec<(&'static str, LieAlgebra, Representation)> {
    let ad = |l: LieAlgebra| {
        let r = crate::lie::adjoint(&l);
        (l, r)
    };
    let (a, ara) = ad(aff2());
    let (h, hra) = ad(heisenberg());
    let (s, sra) = ad(sl2());
    vec![
        ("aff2/adjoint", a, ara),
        ("aff2/standard", aff2(), aff2_standard()),
        ("heisenberg/adjoint", h, hra),
        ("sl2/adjoint", s, sra),
        ("sl2/standard", sl2(), sl2_standard()),
    ]
}

/// `V = ⟨v0, v1⟩` with `v0` even and `v1` odd.
pub fn super_plane() -> GradedVectorSpace {
    GradedVectorSpace::new(names(&["v0", "v1"]), vec![0, 1]).expect("lengths agree")
}

/// `E_{v0v0}` (degree -1) and `E_{v1v0}` (degree 0) inside `s^{-1}gl(V)`
/// for the super plane, with the defining action on `V`.
pub fn borel_pair() -> (Sgla, GradedRepresentation) {
    matrix_unit_sgla(&super_plane(), &[(0, 0), (1, 0)]).expect("units close")
}

/// All four matrix units of `s^{-1}gl(1|1)` with the defining action.
pub fn gl11() -> (Sgla, GradedRepresentation) {
    matrix_unit_sgla(&super_plane(), &[(0, 0), (0, 1), (1, 0), (1, 1)]).expect("units close")
}

/// Graded algebra / representation pairs: every small ungraded pair placed
/// in degree -1, then the genuinely graded matrix-unit examples with their
/// defining and adjoint actions.
pub fn graded_pairs() -> Vec<(String, Sgla, GradedRepresentation)> {
    let mut out: Vec<(String, Sgla, GradedRepresentation)> = small_pairs()
        .into_iter()
        .map(|(n, l, r)| (format!("{n}/deg-1"), from_lie(&l), from_lie_rep(&r)))
        .collect();
    for (n, (g, r)) in [("borel", borel_pair()), ("gl11", gl11())] {
        let ad = graded_adjoint(&g);
        out.push((format!("{n}/defining"), g.clone(), r));
        out.push((format!("{n}/adjoint"), g, ad));
    }
    out
}
