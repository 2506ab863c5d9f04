//! ℤ-graded spaces, symmetric graded Lie algebras (degree-1 graded-symmetric
//! brackets) and their representations.
//!
//! Exponents written with an element name mean its degree. `gl(V)` is graded
//! by `deg(target) - deg(source)`; its desuspension `s^{-1}gl(V)` carries
//! `[A,B] = (-1)^a (AB - (-1)^{ab} BA)` with `a, b` the `gl(V)` degrees.

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::{add_signed, axpy, is_zero_vec, unit_vec, zero_vec, Matrix, Vector};
use crate::perm::parity_sign;
use crate::report::{Report, Witness};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedVectorSpace {
    names: Vec<String>,
    degrees: Vec<i32>,
}

impl GradedVectorSpace {
    pub fn new(names: Vec<String>, degrees: Vec<i32>) -> Result<Self> {
        if names.len() != degrees.len() {
            return Err(Error::Dimension("one degree per basis element required".into()));
        }
        Ok(GradedVectorSpace { names, degrees })
    }

    /// Every basis element in the same degree.
    pub fn concentrated(names: Vec<String>, degree: i32) -> Self {
        let degrees = vec![degree; names.len()];
        GradedVectorSpace { names, degrees }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    /// Degree of a homogeneous vector; `None` for zero, an error when mixed.
    pub fn vector_degree(&self, v: &[Rational]) -> Result<Option<i32>> {
        let mut deg = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(self.degrees[i]),
                Some(d) if d != self.degrees[i] => {
                    return Err(Error::Degree(format!(
                        "vector mixes degrees {d} and {}",
                        self.degrees[i]
                    )))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Degree of a matrix on this space as an element of `gl(V)`.
    pub fn matrix_degree(&self, m: &Matrix) -> Result<Option<i32>> {
        let mut deg = None;
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if m.get(r, c).is_zero() {
                    continue;
                }
                let d = self.degrees[r] - self.degrees[c];
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => {
                        return Err(Error::Degree(format!("matrix mixes degrees {e} and {d}")))
                    }
                    _ => {}
                }
            }
        }
        Ok(deg)
    }
}

/// `sV` for `shift = 1`, `s^{-1}V` for `shift = -1`: `(sV)^i = V^{i-1}`.
pub fn suspend(v: &GradedVectorSpace, shift: i32) -> GradedVectorSpace {
    GradedVectorSpace {
        names: v.names.clone(),
        degrees: v.degrees.iter().map(|d| d + shift).collect(),
    }
}

/// `[e_i,e_j] = Σ_k b[i][j][k] e_k`, bracket of degree 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sgla {
    space: GradedVectorSpace,
    constants: Vec<Rational>,
}

impl Sgla {
    pub fn new(space: GradedVectorSpace, constants: Vec<Rational>) -> Result<Self> {
        let d = space.dim();
        if constants.len() != d * d * d {
            return Err(Error::Dimension(format!(
                "bracket constants have {} entries, expected {}",
                constants.len(),
                d * d * d
            )));
        }
        Ok(Sgla { space, constants })
    }

    pub fn zero(space: GradedVectorSpace) -> Self {
        let d = space.dim();
        Sgla {
            space,
            constants: zero_vec(d * d * d),
        }
    }

    /// Sets `[e_i,e_j]` and the graded-symmetric `[e_j,e_i]`.
    pub fn with_bracket(mut self, i: usize, j: usize, value: &[i64]) -> Self {
        let d = self.dim();
        let s = parity_sign(i64::from(self.space.degree(i)) * i64::from(self.space.degree(j)));
        for (k, &x) in value.iter().enumerate() {
            self.constants[(i * d + j) * d + k] = Rational::from_int(x);
            self.constants[(j * d + i) * d + k] = Rational::from_int(x * i64::from(s));
        }
        self
    }

    pub fn space(&self) -> &GradedVectorSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let d = self.dim();
        &self.constants[(i * d + j) * d + k]
    }

    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let d = self.dim();
        self.constants[(i * d + j) * d + k] = v;
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let d = self.dim();
        self.constants[(i * d + j) * d..(i * d + j + 1) * d].to_vec()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim();
        let mut out = zero_vec(d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut out, &(xi * yj), &self.constants[(i * d + j) * d..(i * d + j + 1) * d]);
                }
            }
        }
        out
    }

    /// `[x,[y,z]] - (-1)^{x+1}[[x,y],z] - (-1)^{(x+1)(y+1)}[y,[x,z]]` on basis elements.
    pub fn leibniz_residual(&self, i: usize, j: usize, k: usize) -> Vector {
        let d = self.dim();
        let e = |a| unit_vec(d, a);
        let (x, y) = (i64::from(self.space.degree(i)), i64::from(self.space.degree(j)));
        let mut r = self.bracket(&e(i), &self.bracket_basis(j, k));
        add_signed(&mut r, -parity_sign(x + 1), &self.bracket(&self.bracket_basis(i, j), &e(k)));
        add_signed(&mut r, -parity_sign((x + 1) * (y + 1)), &self.bracket(&e(j), &self.bracket_basis(i, k)));
        r
    }
}

fn names3(s: &GradedVectorSpace, i: usize, j: usize, k: usize) -> Vec<String> {
    vec![s.names[i].clone(), s.names[j].clone(), s.names[k].clone()]
}

/// Degree homogeneity, graded symmetry and the graded Leibniz rule. A
/// homogeneity failure is reported alone: the identities presuppose it.
pub fn check_sgla(g: &Sgla) -> Vec<Report> {
    let d = g.dim();
    let s = &g.space;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if !g.constant(i, j, k).is_zero() && s.degree(k) != s.degree(i) + s.degree(j) + 1 {
                    let mut r = zero_vec(d);
                    r[k] = g.constant(i, j, k).clone();
                    return vec![Report::fail("homogeneity", Witness::new(names3(s, i, j, k), &s.names, &r))];
                }
            }
        }
    }
    let mut sym = None;
    'sym: for i in 0..d {
        for j in i..d {
            let sign = parity_sign(i64::from(s.degree(i)) * i64::from(s.degree(j)));
            let mut r = g.bracket_basis(i, j);
            add_signed(&mut r, -sign, &g.bracket_basis(j, i));
            if !is_zero_vec(&r) {
                sym = Some(Witness::new(vec![s.names[i].clone(), s.names[j].clone()], &s.names, &r));
                break 'sym;
            }
        }
    }
    let mut leib = None;
    'leib: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let r = g.leibniz_residual(i, j, k);
                if !is_zero_vec(&r) {
                    leib = Some(Witness::new(names3(s, i, j, k), &s.names, &r));
                    break 'leib;
                }
            }
        }
    }
    vec![
        Report::pass("homogeneity"),
        Report::from_witness("graded-symmetry", sym),
        Report::from_witness("leibniz", leib),
    ]
}

pub fn is_sgla(g: &Sgla) -> bool {
    check_sgla(g).iter().all(|r| r.pass)
}

/// A Lie algebra placed in degree -1: `(-1)^{(-1)(-1)} = -1` turns graded
/// symmetry into antisymmetry and the degree-1 bracket lands back in degree -1.
pub fn from_lie(lie: &LieAlgebra) -> Sgla {
    Sgla {
        space: GradedVectorSpace::concentrated(lie.names().to_vec(), -1),
        constants: lie.constants().to_vec(),
    }
}

/// `d² = 0` and `d[x,y] = -[dx,y] - (-1)^x [x,dy]` on basis pairs.
pub fn check_sdgla(g: &Sgla, d: &Matrix) -> Result<Vec<Report>> {
    let n = g.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::Dimension("differential has the wrong shape".into()));
    }
    if let Some(deg) = g.space.matrix_degree(d)? {
        if deg != 1 {
            return Err(Error::Degree(format!("differential has degree {deg}, expected 1")));
        }
    }
    let names = &g.space.names;
    let d2 = d.mul(d);
    let square = if d2.is_zero() {
        None
    } else {
        let c = (0..n).find(|&c| !is_zero_vec(&d2.column(c))).expect("nonzero column");
        Some(Witness::new(vec![names[c].clone()], names, &d2.column(c)))
    };
    let mut compat = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let x = i64::from(g.space.degree(i));
            let mut r = d.mul_vec(&g.bracket_basis(i, j));
            add_signed(&mut r, 1, &g.bracket(&d.column(i), &unit_vec(n, j)));
            add_signed(&mut r, parity_sign(x), &g.bracket(&unit_vec(n, i), &d.column(j)));
            if !is_zero_vec(&r) {
                compat = Some(Witness::new(vec![names[i].clone(), names[j].clone()], names, &r));
                break 'outer;
            }
        }
    }
    Ok(vec![
        Report::from_witness("d-squared", square),
        Report::from_witness("d-compatibility", compat),
    ])
}

/// `[A,B] = (-1)^a (AB - (-1)^{ab} BA)` on `s^{-1}gl(V)`, `a, b` the `gl(V)` degrees.
pub fn desuspended_gl_bracket(a: &Matrix, deg_a: i32, b: &Matrix, deg_b: i32) -> Matrix {
    let inner = a.mul(b).sub(&b.mul(a).scaled(&Rational::from_int(
        parity_sign(i64::from(deg_a) * i64::from(deg_b)).into(),
    )));
    inner.scaled(&Rational::from_int(parity_sign(deg_a.into()).into()))
}

/// Degree-1 map `ρ: g → gl(V)`, one matrix per basis element of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRepresentation {
    space: GradedVectorSpace,
    action: Vec<Matrix>,
}

impl GradedRepresentation {
    pub fn new(space: GradedVectorSpace, action: Vec<Matrix>) -> Result<Self> {
        let n = space.dim();
        if action.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Dimension(format!("representation matrices must be {n}x{n}")));
        }
        Ok(GradedRepresentation { space, action })
    }

    pub fn zero(g: &Sgla, space: GradedVectorSpace) -> Self {
        let n = space.dim();
        GradedRepresentation {
            space,
            action: vec![Matrix::zeros(n, n); g.dim()],
        }
    }

    pub fn space(&self) -> &GradedVectorSpace {
        &self.space
    }

    pub fn space_dim(&self) -> usize {
        self.space.dim()
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn matrix_of(&self, x: &[Rational]) -> Matrix {
        let n = self.space_dim();
        let mut m = Matrix::zeros(n, n);
        for (xi, a) in x.iter().zip(&self.action) {
            if !xi.is_zero() {
                m = m.add(&a.scaled(xi));
            }
        }
        m
    }

    pub fn act_on_basis(&self, x: &[Rational], v: usize) -> Vector {
        let mut out = zero_vec(self.space_dim());
        for (xi, a) in x.iter().zip(&self.action) {
            if !xi.is_zero() {
                axpy(&mut out, xi, &a.column(v));
            }
        }
        out
    }

    pub fn act(&self, x: &[Rational], w: &[Rational]) -> Vector {
        let mut out = zero_vec(self.space_dim());
        for (v, c) in w.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.act_on_basis(x, v));
            }
        }
        out
    }

    pub(crate) fn check_against(&self, g: &Sgla) -> Result<()> {
        if self.action.len() != g.dim() {
            return Err(Error::Dimension(format!(
                "representation has {} matrices, algebra has dimension {}",
                self.action.len(),
                g.dim()
            )));
        }
        Ok(())
    }

    /// `ρ(e_i)` must have `gl(V)` degree `deg e_i + 1`.
    pub fn check_degrees(&self, g: &Sgla) -> Result<()> {
        self.check_against(g)?;
        for (i, m) in self.action.iter().enumerate() {
            if let Some(deg) = self.space.matrix_degree(m)? {
                let want = g.space.degree(i) + 1;
                if deg != want {
                    return Err(Error::Degree(format!(
                        "ρ({}) has degree {deg}, expected {want}",
                        g.space.names[i]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `ρ([e_i,e_j]) - [s^{-1}ρ(e_i), s^{-1}ρ(e_j)]`, i.e.
/// `ρ([x,y]) - (-1)^{x+1}(ρxρy - (-1)^{(x+1)(y+1)} ρyρx)`.
pub fn graded_rep_residual(g: &Sgla, rep: &GradedRepresentation, i: usize, j: usize) -> Matrix {
    let (x, y) = (g.space.degree(i), g.space.degree(j));
    let rhs = desuspended_gl_bracket(&rep.action[i], x + 1, &rep.action[j], y + 1);
    rep.matrix_of(&g.bracket_basis(i, j)).sub(&rhs)
}

pub fn check_graded_rep(g: &Sgla, rep: &GradedRepresentation) -> Result<Report> {
    rep.check_degrees(g)?;
    let d = g.dim();
    for i in 0..d {
        for j in i..d {
            let res = graded_rep_residual(g, rep, i, j);
            if !res.is_zero() {
                let names = crate::lie::matrix_entry_names(rep.space.names());
                return Ok(Report::fail(
                    "graded-representation",
                    Witness::new(
                        vec![g.space.names[i].clone(), g.space.names[j].clone()],
                        &names,
                        res.entries(),
                    ),
                ));
            }
        }
    }
    Ok(Report::pass("graded-representation"))
}

/// `ad(e_i) e_j = [e_i, e_j]`, of degree `deg e_i + 1`.
pub fn graded_adjoint(g: &Sgla) -> GradedRepresentation {
    let d = g.dim();
    let action = (0..d)
        .map(|i| {
            let mut m = Matrix::zeros(d, d);
            for j in 0..d {
                for k in 0..d {
                    m.set(k, j, g.constant(i, j, k).clone());
                }
            }
            m
        })
        .collect();
    GradedRepresentation {
        space: g.space.clone(),
        action,
    }
}

/// An ordinary representation with the module placed in degree -1.
pub fn from_lie_rep(rep: &Representation) -> GradedRepresentation {
    GradedRepresentation {
        space: GradedVectorSpace::concentrated(rep.space_names().to_vec(), -1),
        action: rep.action().to_vec(),
    }
}

/// The sub-algebra of `s^{-1}gl(V)` spanned by the given matrix units
/// `E_{rc}` (mapping basis vector `c` to `r`), with its defining
/// representation on `V`. Fails unless the units close under the bracket.
pub fn matrix_unit_sgla(v: &GradedVectorSpace, units: &[(usize, usize)]) -> Result<(Sgla, GradedRepresentation)> {
    let n = v.dim();
    let unit = |&(r, c): &(usize, usize)| {
        let mut m = Matrix::zeros(n, n);
        m.set(r, c, Rational::one());
        m
    };
    let mats: Vec<Matrix> = units.iter().map(unit).collect();
    let gl_deg: Vec<i32> = units.iter().map(|&(r, c)| v.degree(r) - v.degree(c)).collect();
    let names: Vec<String> = units
        .iter()
        .map(|&(r, c)| format!("E{}{}", v.names()[r], v.names()[c]))
        .collect();
    let space = GradedVectorSpace::new(names, gl_deg.iter().map(|d| d - 1).collect())?;
    let d = units.len();
    let mut g = Sgla::zero(space);
    for i in 0..d {
        for j in 0..d {
            let b = desuspended_gl_bracket(&mats[i], gl_deg[i], &mats[j], gl_deg[j]);
            for r in 0..n {
                for c in 0..n {
                    let x = b.get(r, c);
                    if x.is_zero() {
                        continue;
                    }
                    let k = units
                        .iter()
                        .position(|&u| u == (r, c))
                        .ok_or_else(|| Error::Dimension(format!("units do not close: E[{r},{c}] appears")))?;
                    g.set_constant(i, j, k, x.clone());
                }
            }
        }
    }
    let rep = GradedRepresentation::new(v.clone(), mats)?;
    Ok((g, rep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lie::{adjoint, check_representation, is_lie};

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn sp(degs: &[i32]) -> GradedVectorSpace {
        GradedVectorSpace::new((0..degs.len()).map(|i| format!("x{i}")).collect(), degs.to_vec()).unwrap()
    }

    #[test]
    fn suspension_examples() {
        let v = sp(&[0, 0]);
        assert_eq!(suspend(&v, 1).degrees(), &[1, 1]);
        assert_eq!(suspend(&suspend(&v, 1), -1), v);
        let empty = sp(&[]);
        assert_eq!(suspend(&empty, 1), empty);
    }

    #[test]
    fn from_lie_examples() {
        let z = from_lie(&catalog::abelian(2));
        assert!(is_sgla(&z));
        assert!(z.constants().iter().all(Rational::is_zero));
        let a = from_lie(&catalog::aff2());
        assert_eq!(a.constants(), catalog::aff2().constants());
        assert!(a.space().degrees().iter().all(|&d| d == -1));
        assert!(is_sgla(&a));
        assert!(is_sgla(&from_lie(&catalog::heisenberg())));
    }

    #[test]
    fn leibniz_residual_is_minus_jacobi_for_embedded_algebras() {
        // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] fails here
        let l = crate::lie::LieAlgebra::abelian(vec!["a".into(), "b".into(), "c".into()])
            .with_bracket(0, 1, &[0, 0, 1])
            .with_bracket(1, 2, &[1, 0, 0])
            .with_bracket(2, 0, &[0, 0, 1]);
        assert!(!is_lie(&l));
        let g = from_lie(&l);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let neg: Vector = l.jacobi_residual(i, j, k).iter().map(|x| -x).collect();
                    assert_eq!(g.leibniz_residual(i, j, k), neg);
                }
            }
        }
        assert!(!is_sgla(&g));
    }

    #[test]
    fn homogeneity_is_checked_first() {
        // [x,x] = x with x in degree 0 would need the output in degree 1
        let mut g = Sgla::zero(sp(&[0]));
        g.set_constant(0, 0, 0, r(1));
        let reps = check_sgla(&g);
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].check, "homogeneity");
        assert!(!reps[0].pass);
    }

    #[test]
    fn sdgla_examples() {
        let g = Sgla::zero(sp(&[-1, 0]));
        assert!(check_sdgla(&g, &Matrix::zeros(2, 2)).unwrap().iter().all(|r| r.pass));
        // d: x0 ↦ x1, d² = 0 since nothing sits in degree 1
        let d = Matrix::from_int_rows(&[&[0, 0], &[1, 0]]);
        assert!(check_sdgla(&g, &d).unwrap().iter().all(|r| r.pass));
        let wrong = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert!(matches!(check_sdgla(&g, &wrong), Err(Error::Degree(_))));

        // a chain x0 → x1 → x2 with d² ≠ 0
        let g3 = Sgla::zero(sp(&[0, 1, 2]));
        let d3 = Matrix::from_int_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let reps = check_sdgla(&g3, &d3).unwrap();
        assert!(!reps[0].pass);
        assert_eq!(reps[0].witness.as_ref().unwrap().args, vec!["x0"]);
    }

    #[test]
    fn graded_adjoint_and_reductions() {
        for (name, l) in catalog::lie_algebras() {
            let g = from_lie(&l);
            assert!(check_graded_rep(&g, &graded_adjoint(&g)).unwrap().pass, "{name}");
            assert_eq!(graded_adjoint(&g).action(), adjoint(&l).action());
        }
        for (name, l, rep) in catalog::small_pairs() {
            let g = from_lie(&l);
            let gr = from_lie_rep(&rep);
            assert_eq!(
                check_graded_rep(&g, &gr).unwrap().pass,
                check_representation(&l, &rep).unwrap().pass,
                "{name}"
            );
        }
        let g = from_lie(&catalog::aff2());
        let z = GradedRepresentation::zero(&g, sp(&[0, 1]));
        assert!(check_graded_rep(&g, &z).unwrap().pass);
        // a broken ungraded representation is broken after embedding too
        let bad = Representation::new(
            vec!["v1".into(), "v2".into()],
            vec![Matrix::identity(2), Matrix::from_int_rows(&[&[0, 1], &[0, 0]])],
        )
        .unwrap();
        assert!(!check_graded_rep(&g, &from_lie_rep(&bad)).unwrap().pass);
    }

    #[test]
    fn degree_violations_are_errors() {
        let g = from_lie(&catalog::aff2());
        let rep = GradedRepresentation::new(sp(&[0, 1]), vec![Matrix::identity(2), Matrix::zeros(2, 2)]).unwrap();
        // identity has degree 0, fine for degree -1 elements; a degree-1 block is not
        assert!(check_graded_rep(&g, &rep).is_ok());
        let rep = GradedRepresentation::new(
            sp(&[0, 1]),
            vec![Matrix::from_int_rows(&[&[0, 0], &[1, 0]]), Matrix::zeros(2, 2)],
        )
        .unwrap();
        assert!(matches!(check_graded_rep(&g, &rep), Err(Error::Degree(_))));
    }

    #[test]
    fn matrix_unit_algebras_are_sglas() {
        let v = sp(&[0, 1]);
        for units in [vec![(0, 0), (1, 0)], vec![(0, 0), (1, 1), (1, 0)], vec![(0, 0), (0, 1), (1, 0), (1, 1)]] {
            let (g, rep) = matrix_unit_sgla(&v, &units).unwrap();
            assert!(is_sgla(&g), "{units:?}");
            assert!(check_graded_rep(&g, &rep).unwrap().pass, "{units:?}");
            assert!(check_graded_rep(&g, &graded_adjoint(&g)).unwrap().pass, "{units:?}");
        }
        assert!(matrix_unit_sgla(&v, &[(0, 1), (1, 0)]).is_err());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::lie::is_lie;
    use crate::{catalog, random};
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn from_lie_is_faithful(seed in any::<u64>(), which in 0usize..8, perturb: bool) {
            let (_, mut l) = catalog::lie_algebras().swap_remove(which);
            if perturb && l.dim() > 1 {
                l = random::perturb_lie(&mut random::rng(seed), &l);
            }
            prop_assert_eq!(is_sgla(&from_lie(&l)), is_lie(&l));
        }

        #[test]
        fn suspension_round_trips(seed in any::<u64>(), dim in 0usize..5) {
            let v = random::graded_space(&mut random::rng(seed), dim, "x");
            let s = suspend(&v, 1);
            prop_assert!(s.degrees().iter().zip(v.degrees()).all(|(a, b)| a - b == 1));
            prop_assert_eq!(suspend(&s, -1), v);
        }
    }
}
