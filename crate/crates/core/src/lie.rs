//! Lie algebras by structure constants, matrix representations, and the
//! Rota-Baxter / O-operator identities.

use rayon::prelude::*;

use crate::deformation::AltMap;
use crate::error::{Error, Result};
use crate::linalg::{add_signed, axpy, is_zero_vec, sub_vec, unit_vec, zero_vec, Matrix, Vector};
use crate::report::{Report, Witness};
use crate::scalar::Rational;

/// Finite-dimensional Lie algebra, `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
///
/// Constructors do not validate; call [`check_lie`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    constants: Vec<Rational>,
}

impl LieAlgebra {
    /// Dense constants, `constants[(i * dim + j) * dim + k] = c[i][j][k]`.
    pub fn new(names: Vec<String>, constants: Vec<Rational>) -> Result<Self> {
        let d = names.len();
        if constants.len() != d * d * d {
            return Err(Error::Dimension(format!(
                "structure constants have {} entries, expected {}",
                constants.len(),
                d * d * d
            )));
        }
        Ok(LieAlgebra { names, constants })
    }

    pub fn abelian(names: Vec<String>) -> Self {
        let d = names.len();
        LieAlgebra {
            names,
            constants: zero_vec(d * d * d),
        }
    }

    /// Sets `[e_i, e_j] = value` and `[e_j, e_i] = -value`.
    pub fn with_bracket(mut self, i: usize, j: usize, value: &[i64]) -> Self {
        let d = self.dim();
        for (k, &x) in value.iter().enumerate() {
            self.constants[(i * d + j) * d + k] = Rational::from_int(x);
            self.constants[(j * d + i) * d + k] = Rational::from_int(-x);
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
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
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                axpy(&mut out, &c, &self.constants[(i * d + j) * d..(i * d + j + 1) * d]);
            }
        }
        out
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vector {
        let d = self.dim();
        let e = |a| unit_vec(d, a);
        let mut r = self.bracket(&self.bracket_basis(i, j), &e(k));
        add_signed(&mut r, 1, &self.bracket(&self.bracket_basis(j, k), &e(i)));
        add_signed(&mut r, 1, &self.bracket(&self.bracket_basis(k, i), &e(j)));
        r
    }
}

/// Representation by matrices `ρ(e_i)` acting on a space with its own basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    space_names: Vec<String>,
    action: Vec<Matrix>,
}

impl Representation {
    pub fn new(space_names: Vec<String>, action: Vec<Matrix>) -> Result<Self> {
        let n = space_names.len();
        for m in &action {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Dimension(format!(
                    "representation matrix is {}x{}, space has dimension {n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation {
            space_names,
            action,
        })
    }

    pub fn zero(lie: &LieAlgebra, space_names: Vec<String>) -> Self {
        let n = space_names.len();
        Representation {
            space_names,
            action: vec![Matrix::zeros(n, n); lie.dim()],
        }
    }

    pub fn space_dim(&self) -> usize {
        self.space_names.len()
    }

    pub fn space_names(&self) -> &[String] {
        &self.space_names
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(x)` for a Lie algebra vector `x`.
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

    /// `ρ(x)(v)` for a basis vector `v`.
    pub fn act_on_basis(&self, x: &[Rational], v: usize) -> Vector {
        let mut out = zero_vec(self.space_dim());
        for (xi, a) in x.iter().zip(&self.action) {
            if !xi.is_zero() {
                axpy(&mut out, xi, &a.column(v));
            }
        }
        out
    }

    /// `ρ(x)(w)` for an arbitrary vector `w`.
    pub fn act(&self, x: &[Rational], w: &[Rational]) -> Vector {
        let mut out = zero_vec(self.space_dim());
        for (v, wv) in w.iter().enumerate() {
            if !wv.is_zero() {
                axpy(&mut out, wv, &self.act_on_basis(x, v));
            }
        }
        out
    }

    fn check_against(&self, lie: &LieAlgebra) -> Result<()> {
        if self.action.len() != lie.dim() {
            return Err(Error::Dimension(format!(
                "representation has {} matrices, Lie algebra has dimension {}",
                self.action.len(),
                lie.dim()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    /// The representation space `V`.
    Module,
    /// The Lie algebra `g`.
    Algebra,
}

/// A linear map between `V` and `g`, stored as a `codomain × domain` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    pub matrix: Matrix,
    pub domain: Space,
    pub codomain: Space,
}

impl LinearOperator {
    /// `T: V → g`.
    pub fn module_to_algebra(matrix: Matrix) -> Self {
        LinearOperator {
            matrix,
            domain: Space::Module,
            codomain: Space::Algebra,
        }
    }

    /// `P: g → g`.
    pub fn endomorphism(matrix: Matrix) -> Self {
        LinearOperator {
            matrix,
            domain: Space::Algebra,
            codomain: Space::Algebra,
        }
    }

    pub fn apply_basis(&self, v: usize) -> Vector {
        self.matrix.column(v)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        LinearOperator {
            matrix: self.matrix.scaled(c),
            ..*self
        }
    }

    pub fn plus(&self, other: &LinearOperator) -> Self {
        LinearOperator {
            matrix: self.matrix.add(&other.matrix),
            ..*self
        }
    }

    fn check_shape(&self, lie: &LieAlgebra, rep: &Representation) -> Result<()> {
        if self.codomain != Space::Algebra {
            return Err(Error::Dimension("operator must land in the Lie algebra".into()));
        }
        if self.matrix.rows() != lie.dim() || self.matrix.cols() != rep.space_dim() {
            return Err(Error::Dimension(format!(
                "operator is {}x{}, expected {}x{}",
                self.matrix.rows(),
                self.matrix.cols(),
                lie.dim(),
                rep.space_dim()
            )));
        }
        Ok(())
    }
}

/// Antisymmetry and Jacobi identity on all basis pairs/triples.
pub fn check_lie(lie: &LieAlgebra) -> Vec<Report> {
    let d = lie.dim();
    let names = lie.names();
    let mut anti = None;
    'outer: for i in 0..d {
        for j in i..d {
            let r: Vector = lie
                .bracket_basis(i, j)
                .iter()
                .zip(lie.bracket_basis(j, i))
                .map(|(a, b)| a + &b)
                .collect();
            if !is_zero_vec(&r) {
                anti = Some(Witness::new(vec![names[i].clone(), names[j].clone()], names, &r));
                break 'outer;
            }
        }
    }
    let mut jacobi = None;
    'outer2: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let r = lie.jacobi_residual(i, j, k);
                if !is_zero_vec(&r) {
                    jacobi = Some(Witness::new(
                        vec![names[i].clone(), names[j].clone(), names[k].clone()],
                        names,
                        &r,
                    ));
                    break 'outer2;
                }
            }
        }
    }
    vec![
        Report::from_witness("antisymmetry", anti),
        Report::from_witness("jacobi", jacobi),
    ]
}

pub fn is_lie(lie: &LieAlgebra) -> bool {
    check_lie(lie).iter().all(|r| r.pass)
}

/// `ρ([e_i,e_j]) - [ρ(e_i), ρ(e_j)]`.
pub fn representation_residual(lie: &LieAlgebra, rep: &Representation, i: usize, j: usize) -> Matrix {
    let a = &rep.action()[i];
    let b = &rep.action()[j];
    rep.matrix_of(&lie.bracket_basis(i, j))
        .sub(&a.mul(b).sub(&b.mul(a)))
}

pub fn check_representation(lie: &LieAlgebra, rep: &Representation) -> Result<Report> {
    rep.check_against(lie)?;
    let d = lie.dim();
    for i in 0..d {
        for j in i + 1..d {
            let res = representation_residual(lie, rep, i, j);
            if !res.is_zero() {
                let names = matrix_entry_names(rep.space_names());
                return Ok(Report::fail(
                    "representation",
                    Witness::new(
                        vec![lie.names()[i].clone(), lie.names()[j].clone()],
                        &names,
                        res.entries(),
                    ),
                ));
            }
        }
    }
    Ok(Report::pass("representation"))
}

/// Names for matrix entries, row-major: `E[row,col]`.
pub fn matrix_entry_names(basis: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(basis.len() * basis.len());
    for r in basis {
        for c in basis {
            out.push(format!("E[{r},{c}]"));
        }
    }
    out
}

/// `ρ(e_i)_{kj} = c[i][j][k]`.
pub fn adjoint(lie: &LieAlgebra) -> Representation {
    let d = lie.dim();
    let action = (0..d)
        .map(|i| {
            let mut m = Matrix::zeros(d, d);
            for j in 0..d {
                for k in 0..d {
                    m.set(k, j, lie.constant(i, j, k).clone());
                }
            }
            m
        })
        .collect();
    Representation {
        space_names: lie.names().to_vec(),
        action,
    }
}

/// `D(u,v) = [Tu,Tv] - T(ρ(Tu)v - ρ(Tv)u)` on all basis pairs.
pub fn oop_defect(lie: &LieAlgebra, rep: &Representation, op: &LinearOperator) -> Result<AltMap> {
    rep.check_against(lie)?;
    op.check_shape(lie, rep)?;
    let n = rep.space_dim();
    AltMap::from_fn(2, n, lie.dim(), |t| oop_defect_at(lie, rep, op, t[0], t[1]))
}

pub(crate) fn oop_defect_at(
    lie: &LieAlgebra,
    rep: &Representation,
    op: &LinearOperator,
    u: usize,
    v: usize,
) -> Vector {
    let tu = op.apply_basis(u);
    let tv = op.apply_basis(v);
    let inner = sub_vec(&rep.act_on_basis(&tu, v), &rep.act_on_basis(&tv, u));
    sub_vec(&lie.bracket(&tu, &tv), &op.matrix.mul_vec(&inner))
}

fn oop_defect_vanishes(lie: &LieAlgebra, rep: &Representation, op: &LinearOperator) -> bool {
    let n = rep.space_dim();
    (0..n).all(|u| (u + 1..n).all(|v| is_zero_vec(&oop_defect_at(lie, rep, op, u, v))))
}

pub fn is_o_operator(lie: &LieAlgebra, rep: &Representation, op: &LinearOperator) -> Result<bool> {
    rep.check_against(lie)?;
    op.check_shape(lie, rep)?;
    Ok(oop_defect_vanishes(lie, rep, op))
}

/// Weight-zero Rota-Baxter identity, i.e. O-operator for the adjoint action.
pub fn is_rota_baxter(lie: &LieAlgebra, op: &LinearOperator) -> Result<bool> {
    if op.domain != Space::Algebra {
        return Err(Error::Dimension("Rota-Baxter operator must be an endomorphism of g".into()));
    }
    is_o_operator(lie, &adjoint(lie), op)
}

pub const DEFAULT_SEARCH_CAP: u128 = 2_000_000;

/// Every O-operator whose matrix entries are drawn from `grid`, in
/// lexicographic order of the row-major entry sequence.
pub fn search_oop(
    lie: &LieAlgebra,
    rep: &Representation,
    grid: &[Rational],
    cap: u128,
    parallel: bool,
) -> Result<Vec<LinearOperator>> {
    rep.check_against(lie)?;
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let (rows, cols) = (lie.dim(), rep.space_dim());
    let cells = (rows * cols) as u32;
    let size = (grid.len() as u128)
        .checked_pow(cells)
        .ok_or(Error::SearchTooLarge { size: u128::MAX, cap })?;
    if size > cap {
        return Err(Error::SearchTooLarge { size, cap });
    }
    let candidate = |mut idx: u128| {
        let mut entries = vec![Rational::zero(); rows * cols];
        for slot in entries.iter_mut().rev() {
            *slot = grid[(idx % grid.len() as u128) as usize].clone();
            idx /= grid.len() as u128;
        }
        let m = Matrix::from_rows(entries.chunks(cols).map(<[Rational]>::to_vec).collect())
            .expect("rectangular");
        let op = LinearOperator::module_to_algebra(m);
        oop_defect_vanishes(lie, rep, &op).then_some(op)
    };
    let found: Vec<LinearOperator> = if parallel {
        (0..size as u64).into_par_iter().filter_map(|i| candidate(i as u128)).collect()
    } else {
        (0..size).filter_map(candidate).collect()
    };
    Ok(found)
}

pub fn search_rbo(lie: &LieAlgebra, grid: &[Rational], cap: u128, parallel: bool) -> Result<Vec<LinearOperator>> {
    let ops = search_oop(lie, &adjoint(lie), grid, cap, parallel)?;
    Ok(ops
        .into_iter()
        .map(|o| LinearOperator::endomorphism(o.matrix))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn check_lie_examples() {
        assert!(is_lie(&LieAlgebra::abelian(vec!["a".into(), "b".into()])));
        assert!(is_lie(&catalog::aff2()));

        // symmetric instead of antisymmetric
        let mut bad = LieAlgebra::abelian(vec!["e1".into(), "e2".into()]);
        bad.set_constant(0, 1, 0, r(1));
        bad.set_constant(1, 0, 0, r(1));
        let reps = check_lie(&bad);
        assert!(!reps[0].pass);
        let w = reps[0].witness.as_ref().unwrap();
        assert_eq!(w.args, vec!["e1", "e2"]);
        assert_eq!(w.residual, vec![("e1".to_string(), r(2))]);
    }

    #[test]
    fn wrong_constant_count_is_an_error() {
        assert!(LieAlgebra::new(vec!["a".into()], vec![]).is_err());
    }

    #[test]
    fn jacobi_witness_reproduces_residual() {
        // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e3 breaks Jacobi
        let l = LieAlgebra::abelian(vec!["e1".into(), "e2".into(), "e3".into()])
            .with_bracket(0, 1, &[0, 0, 1])
            .with_bracket(1, 2, &[1, 0, 0])
            .with_bracket(2, 0, &[0, 0, 1]);
        let rep = check_lie(&l);
        assert!(rep[0].pass);
        let w = rep[1].witness.clone().expect("jacobi fails");
        let idx: Vec<usize> = w.args.iter().map(|a| l.names().iter().position(|n| n == a).unwrap()).collect();
        let again = Witness::new(w.args.clone(), l.names(), &l.jacobi_residual(idx[0], idx[1], idx[2]));
        assert_eq!(again, w);
        assert!(!w.residual.is_empty());
    }

    #[test]
    fn adjoint_matrices() {
        let l = catalog::aff2();
        let ad = adjoint(&l);
        assert_eq!(ad.action()[0], Matrix::from_int_rows(&[&[0, 0], &[0, 1]]));
        assert_eq!(ad.action()[1], Matrix::from_int_rows(&[&[0, 0], &[-1, 0]]));
        assert!(check_representation(&l, &ad).unwrap().pass);

        let h = catalog::heisenberg();
        let adh = adjoint(&h);
        let mut want = Matrix::zeros(3, 3);
        want.set(2, 1, r(1));
        assert_eq!(adh.action()[0], want);

        let ab = LieAlgebra::abelian(vec!["x".into(), "y".into()]);
        assert!(adjoint(&ab).action().iter().all(Matrix::is_zero));
    }

    #[test]
    fn zero_representation_is_a_representation() {
        let l = catalog::sl2();
        let z = Representation::zero(&l, vec!["v".into(), "w".into()]);
        assert!(check_representation(&l, &z).unwrap().pass);
    }

    #[test]
    fn broken_representation_has_witness() {
        let l = catalog::aff2();
        let bad = Representation::new(
            vec!["v1".into(), "v2".into()],
            vec![Matrix::identity(2), Matrix::from_int_rows(&[&[0, 1], &[0, 0]])],
        )
        .unwrap();
        let rep = check_representation(&l, &bad).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.witness.unwrap().args, vec!["e1", "e2"]);
        let short = Representation::new(vec!["v".into()], vec![Matrix::zeros(1, 1)]).unwrap();
        assert!(check_representation(&l, &short).is_err());
    }

    #[test]
    fn defect_examples() {
        let l = catalog::aff2();
        let ad = adjoint(&l);
        let zero = LinearOperator::module_to_algebra(Matrix::zeros(2, 2));
        assert!(oop_defect(&l, &ad, &zero).unwrap().is_zero());

        // P(e1)=0, P(e2)=e1
        let p = LinearOperator::endomorphism(Matrix::from_int_rows(&[&[0, 1], &[0, 0]]));
        assert!(oop_defect(&l, &ad, &p).unwrap().is_zero());
        assert!(is_rota_baxter(&l, &p).unwrap());

        // identity: D(e1,e2) = [e1,e2] - 2[e1,e2] = -e2
        let id = LinearOperator::endomorphism(Matrix::identity(2));
        let d = oop_defect(&l, &ad, &id).unwrap();
        assert_eq!(d.eval(&[0, 1]).unwrap(), vec![r(0), r(-1)]);
        assert!(!is_rota_baxter(&l, &id).unwrap());

        // P(e1)=e2, P(e2)=0
        let q = LinearOperator::endomorphism(Matrix::from_int_rows(&[&[0, 0], &[1, 0]]));
        assert!(is_rota_baxter(&l, &q).unwrap());

        let wrong = LinearOperator::endomorphism(Matrix::zeros(3, 2));
        assert!(oop_defect(&l, &ad, &wrong).is_err());
    }

    #[test]
    fn abelian_algebras_accept_everything() {
        let l = LieAlgebra::abelian(vec!["a".into(), "b".into()]);
        let p = LinearOperator::endomorphism(Matrix::from_int_rows(&[&[3, -1], &[2, 7]]));
        assert!(is_rota_baxter(&l, &p).unwrap());
    }

    #[test]
    fn search_examples() {
        let grid01 = [r(0), r(1)];
        let one = LieAlgebra::abelian(vec!["a".into()]);
        assert_eq!(search_rbo(&one, &grid01, DEFAULT_SEARCH_CAP, false).unwrap().len(), 2);

        let l = catalog::aff2();
        let found = search_rbo(&l, &grid01, DEFAULT_SEARCH_CAP, false).unwrap();
        let p = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert!(found.iter().any(|o| o.matrix == p));
        assert!(found.iter().any(|o| o.matrix.is_zero()));
        assert_eq!(found, search_rbo(&l, &grid01, DEFAULT_SEARCH_CAP, true).unwrap());

        assert_eq!(search_rbo(&l, &[], DEFAULT_SEARCH_CAP, false), Err(Error::EmptyGrid));
        assert!(matches!(
            search_rbo(&catalog::sl2(), &[r(0), r(1), r(2)], 100, false),
            Err(Error::SearchTooLarge { .. })
        ));
    }

    #[test]
    fn defect_is_antisymmetric() {
        let l = catalog::sl2();
        let rep = catalog::sl2_standard();
        let t = LinearOperator::module_to_algebra(Matrix::from_int_rows(&[&[1, 2], &[0, -1], &[3, 1]]));
        let d = oop_defect(&l, &rep, &t).unwrap();
        for u in 0..2 {
            for v in 0..2 {
                let a = d.eval(&[u, v]).unwrap();
                let b = d.eval(&[v, u]).unwrap();
                assert!(a.iter().zip(&b).all(|(x, y)| (x + y).is_zero()));
                assert_eq!(a, oop_defect_at(&l, &rep, &t, u, v));
            }
        }
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::{catalog, random};
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        /// Both sides of the O-operator identity are quadratic in `T`.
        #[test]
        fn scaling_preserves_the_verdict(seed in any::<u64>(), pair in 0usize..5, c in prop::sample::select(vec![(-1i64, 1i64), (2, 1), (1, 3)])) {
            let (_, l, rep) = catalog::small_pairs().swap_remove(pair);
            let mut rng = random::rng(seed);
            let t = random::operator(&mut rng, rep.space_dim(), l.dim());
            let lam = Rational::new(c.0, c.1);
            prop_assert_eq!(
                is_o_operator(&l, &rep, &t).unwrap(),
                is_o_operator(&l, &rep, &t.scaled(&lam)).unwrap()
            );
            let d = oop_defect(&l, &rep, &t).unwrap();
            let ds = oop_defect(&l, &rep, &t.scaled(&lam)).unwrap();
            prop_assert_eq!(ds, d.scaled(&(lam.clone() * lam)));
        }
    }
}
