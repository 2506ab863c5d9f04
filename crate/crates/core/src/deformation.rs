//! The graded Lie algebra `C*(V,g) = ⊕_k Hom(∧^k V, g)` whose Maurer-Cartan
//! elements are the O-operators, together with the twisted differential
//! `d_T = ⟦T, ·⟧` controlling their deformations.
//!
//! Grading: a map of arity `k` has degree `k` once suspended (degree `k - 1`
//! before). Only the suspended degree enters signs, and it is always computed
//! from the arity, never stored.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, LinearOperator, Representation};
use crate::linalg::{add_signed, axpy, is_zero_vec, scale, zero_vec, Vector};
use crate::perm::{parity_sign, unshuffles_signed};
use crate::scalar::Rational;

/// Element of `Hom(∧^k V, g)`, stored on strictly increasing index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltMap {
    arity: usize,
    dim_domain: usize,
    dim_codomain: usize,
    values: BTreeMap<Vec<usize>, Vector>,
}

/// Strictly increasing `k`-tuples from `0..n`, lexicographic.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Sorts `args` in place and returns the sign of the sorting permutation,
/// or `None` when an index repeats.
pub(crate) fn sort_antisymmetric(args: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..args.len() {
        let mut j = i;
        while j > 0 && args[j - 1] > args[j] {
            args.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if args.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl AltMap {
    pub fn zero(arity: usize, dim_domain: usize, dim_codomain: usize) -> Self {
        AltMap {
            arity,
            dim_domain,
            dim_codomain,
            values: BTreeMap::new(),
        }
    }

    /// Builds the map from its values on every increasing tuple.
    pub fn from_fn<F>(arity: usize, dim_domain: usize, dim_codomain: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> Vector,
    {
        let mut m = AltMap::zero(arity, dim_domain, dim_codomain);
        for t in increasing_tuples(dim_domain, arity) {
            let v = f(&t);
            m.set(t, v)?;
        }
        Ok(m)
    }

    /// Arity-0 map: a single element of `g`.
    pub fn element(x: Vector, dim_domain: usize) -> Self {
        let mut m = AltMap::zero(0, dim_domain, x.len());
        if !is_zero_vec(&x) {
            m.values.insert(Vec::new(), x);
        }
        m
    }

    pub fn from_operator(op: &LinearOperator) -> Self {
        let (rows, cols) = (op.matrix.rows(), op.matrix.cols());
        AltMap::from_fn(1, cols, rows, |t| op.apply_basis(t[0])).expect("shape is consistent")
    }

    /// Reads a 1-ary map back as a `codomain × domain` matrix operator.
    pub fn to_operator(&self) -> Result<LinearOperator> {
        if self.arity != 1 {
            return Err(Error::Arity {
                expected: 1,
                got: self.arity,
            });
        }
        let rows = (0..self.dim_codomain)
            .map(|r| (0..self.dim_domain).map(|c| self.stored(&[c])[r].clone()).collect())
            .collect();
        Ok(LinearOperator::module_to_algebra(crate::linalg::Matrix::from_rows(rows)?))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Degree in the suspended complex, where the bracket has degree 0.
    pub fn degree(&self) -> i64 {
        self.arity as i64
    }

    pub fn dim_domain(&self) -> usize {
        self.dim_domain
    }

    pub fn dim_codomain(&self) -> usize {
        self.dim_codomain
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Nonzero stored values, keyed by increasing tuples.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vector)> {
        self.values.iter()
    }

    /// Stores the value on an increasing tuple (zero values are dropped).
    pub fn set(&mut self, tuple: Vec<usize>, value: Vector) -> Result<()> {
        if tuple.len() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                got: tuple.len(),
            });
        }
        if tuple.windows(2).any(|w| w[0] >= w[1]) || tuple.iter().any(|&i| i >= self.dim_domain) {
            return Err(Error::Dimension(format!("{tuple:?} is not an increasing tuple of basis indices")));
        }
        if value.len() != self.dim_codomain {
            return Err(Error::Dimension("value has the wrong length".into()));
        }
        if is_zero_vec(&value) {
            self.values.remove(&tuple);
        } else {
            self.values.insert(tuple, value);
        }
        Ok(())
    }

    fn stored(&self, sorted: &[usize]) -> Vector {
        self.values
            .get(sorted)
            .cloned()
            .unwrap_or_else(|| zero_vec(self.dim_codomain))
    }

    /// Antisymmetric extension of the stored values.
    pub fn eval(&self, args: &[usize]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                got: args.len(),
            });
        }
        Ok(self.eval_basis(args))
    }

    pub(crate) fn eval_basis(&self, args: &[usize]) -> Vector {
        let mut sorted = args.to_vec();
        match sort_antisymmetric(&mut sorted) {
            None => zero_vec(self.dim_codomain),
            Some(s) => {
                let v = self.stored(&sorted);
                if s < 0 {
                    scale(&v, &Rational::from_int(-1))
                } else {
                    v
                }
            }
        }
    }

    /// `f(w, rest..)` with an arbitrary vector `w` in the first slot.
    pub(crate) fn eval_vector_first(&self, w: &[Rational], rest: &[usize]) -> Vector {
        let mut out = zero_vec(self.dim_codomain);
        let mut args = Vec::with_capacity(rest.len() + 1);
        for (i, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            args.clear();
            args.push(i);
            args.extend_from_slice(rest);
            axpy(&mut out, c, &self.eval_basis(&args));
        }
        out
    }

    fn same_shape(&self, other: &AltMap) -> Result<()> {
        if (self.arity, self.dim_domain, self.dim_codomain) != (other.arity, other.dim_domain, other.dim_codomain) {
            return Err(Error::Dimension("maps of different shapes".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &AltMap) -> Result<AltMap> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &AltMap) -> Result<AltMap> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &AltMap, sign: i32) -> Result<AltMap> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (t, v) in &other.values {
            let mut cur = out.stored(t);
            add_signed(&mut cur, sign, v);
            out.set(t.clone(), cur)?;
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &Rational) -> AltMap {
        let mut out = AltMap::zero(self.arity, self.dim_domain, self.dim_codomain);
        if c.is_zero() {
            return out;
        }
        for (t, v) in &self.values {
            out.values.insert(t.clone(), scale(v, c));
        }
        out
    }
}

/// Sign relating the MC square to the operator identity:
/// `½⟦T,T⟧ = MC_SIGN · ([Tu,Tv] - T(ρ(Tu)v - ρ(Tv)u))`.
pub const MC_SIGN: i32 = 1;

pub const DEFAULT_MAX_ARITY: usize = 6;

/// `C*(V,g)` for a fixed Lie algebra and representation.
#[derive(Clone, Copy, Debug)]
pub struct DeformationComplex<'a> {
    pub lie: &'a LieAlgebra,
    pub rep: &'a Representation,
    pub max_arity: usize,
}

impl<'a> DeformationComplex<'a> {
    pub fn new(lie: &'a LieAlgebra, rep: &'a Representation) -> Result<Self> {
        if rep.action().len() != lie.dim() {
            return Err(Error::Dimension("representation does not match the Lie algebra".into()));
        }
        Ok(DeformationComplex {
            lie,
            rep,
            max_arity: DEFAULT_MAX_ARITY,
        })
    }

    pub fn with_max_arity(mut self, max_arity: usize) -> Self {
        self.max_arity = max_arity;
        self
    }

    fn check(&self, f: &AltMap) -> Result<()> {
        if f.dim_domain != self.rep.space_dim() || f.dim_codomain != self.lie.dim() {
            return Err(Error::Dimension(format!(
                "map V^{} -> g^{} does not live on V^{} -> g^{}",
                f.dim_domain,
                f.dim_codomain,
                self.rep.space_dim(),
                self.lie.dim()
            )));
        }
        Ok(())
    }

    /// The bracket `⟦f,g⟧` of an `n`-ary `f` and `m`-ary `g`:
    ///
    /// ```text
    /// ⟦f,g⟧(u_1..u_{n+m}) =
    ///    - Σ_{σ ∈ S(m,1,n-1)} (-1)^σ f(ρ(g(u_σ1..u_σm)) u_σ(m+1), u_σ(m+2), .., u_σ(m+n))
    ///    + (-1)^{mn} Σ_{σ ∈ S(n,1,m-1)} (-1)^σ g(ρ(f(u_σ1..u_σn)) u_σ(n+1), .., u_σ(m+n))
    ///    - (-1)^{mn} Σ_{σ ∈ S(n,m)} (-1)^σ [f(u_σ1..u_σn), g(u_σ(n+1)..u_σ(m+n))]
    /// ```
    ///
    /// Shapes with a negative part contribute nothing.
    pub fn bracket(&self, f: &AltMap, g: &AltMap) -> Result<AltMap> {
        self.check(f)?;
        self.check(g)?;
        let (n, m) = (f.arity, g.arity);
        let total = n + m;
        if total > self.max_arity {
            return Err(Error::Truncation {
                requested: total,
                bound: self.max_arity,
            });
        }
        let dv = self.rep.space_dim();
        let dg = self.lie.dim();
        let s_mn = parity_sign((m * n) as i64);
        let (n_i, m_i) = (n as isize, m as isize);
        let first = unshuffles_signed(&[m_i, 1, n_i - 1]);
        let second = unshuffles_signed(&[n_i, 1, m_i - 1]);
        let third = unshuffles_signed(&[n_i, m_i]);

        AltMap::from_fn(total, dv, dg, |u| {
            let mut acc = zero_vec(dg);
            let pick = |sigma: &crate::perm::Permutation, range: std::ops::Range<usize>| -> Vec<usize> {
                range.map(|i| u[sigma.apply(i)]).collect()
            };
            for sigma in &first {
                let gv = g.eval_basis(&pick(sigma, 0..m));
                if is_zero_vec(&gv) {
                    continue;
                }
                let w = self.rep.act_on_basis(&gv, u[sigma.apply(m)]);
                let val = f.eval_vector_first(&w, &pick(sigma, m + 1..total));
                add_signed(&mut acc, -sigma.sign(), &val);
            }
            for sigma in &second {
                let fv = f.eval_basis(&pick(sigma, 0..n));
                if is_zero_vec(&fv) {
                    continue;
                }
                let w = self.rep.act_on_basis(&fv, u[sigma.apply(n)]);
                let val = g.eval_vector_first(&w, &pick(sigma, n + 1..total));
                add_signed(&mut acc, s_mn * sigma.sign(), &val);
            }
            for sigma in &third {
                let fv = f.eval_basis(&pick(sigma, 0..n));
                if is_zero_vec(&fv) {
                    continue;
                }
                let gv = g.eval_basis(&pick(sigma, n..total));
                add_signed(&mut acc, -s_mn * sigma.sign(), &self.lie.bracket(&fv, &gv));
            }
            acc
        })
    }

    /// `½⟦T,T⟧`; vanishes exactly when `T` is an O-operator.
    pub fn mc_residual(&self, t: &AltMap) -> Result<AltMap> {
        if t.arity != 1 {
            return Err(Error::Arity {
                expected: 1,
                got: t.arity,
            });
        }
        Ok(self.bracket(t, t)?.scaled(&Rational::half()))
    }

    pub fn is_maurer_cartan(&self, t: &AltMap) -> Result<bool> {
        Ok(self.mc_residual(t)?.is_zero())
    }

    /// `d_T f = ⟦T, f⟧`. Requires `T` to be an O-operator unless `force` is set.
    pub fn d_t(&self, t: &AltMap, f: &AltMap, force: bool) -> Result<AltMap> {
        if !force && !self.is_maurer_cartan(t)? {
            return Err(Error::NotOOperator);
        }
        if t.arity != 1 {
            return Err(Error::Arity {
                expected: 1,
                got: t.arity,
            });
        }
        self.bracket(t, f)
    }

    /// Whether `T'` solves `d_T T' + ½⟦T',T'⟧ = 0`, i.e. whether `T + T'`
    /// is again an O-operator.
    pub fn deformation_check(&self, t: &AltMap, delta: &AltMap) -> Result<bool> {
        if delta.arity != 1 {
            return Err(Error::Arity {
                expected: 1,
                got: delta.arity,
            });
        }
        let dt = self.d_t(t, delta, false)?;
        let sq = self.bracket(delta, delta)?.scaled(&Rational::half());
        Ok(dt.add(&sq)?.is_zero())
    }
}

/// Graded skew-symmetry defect `⟦f,g⟧ + (-1)^{|f||g|}⟦g,f⟧`.
pub fn skew_defect(cx: &DeformationComplex, f: &AltMap, g: &AltMap) -> Result<AltMap> {
    let s = parity_sign(f.degree() * g.degree());
    cx.bracket(f, g)?.add(&cx.bracket(g, f)?.scaled(&Rational::from_int(s as i64)))
}

/// Graded Jacobi defect
/// `⟦f,⟦g,h⟧⟧ - ⟦⟦f,g⟧,h⟧ - (-1)^{|f||g|}⟦g,⟦f,h⟧⟧`.
pub fn jacobi_defect(cx: &DeformationComplex, f: &AltMap, g: &AltMap, h: &AltMap) -> Result<AltMap> {
    let s = parity_sign(f.degree() * g.degree());
    let a = cx.bracket(f, &cx.bracket(g, h)?)?;
    let b = cx.bracket(&cx.bracket(f, g)?, h)?;
    let c = cx.bracket(g, &cx.bracket(f, h)?)?;
    a.sub(&b)?.sub(&c.scaled(&Rational::from_int(s as i64)))
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::{catalog, random};
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn bracket_is_a_graded_lie_bracket(seed in any::<u64>(), pair in 0usize..5, ar in (0usize..=2, 0usize..=2, 0usize..=2)) {
            let (_, l, rep) = catalog::small_pairs().swap_remove(pair);
            let cx = DeformationComplex::new(&l, &rep).unwrap();
            let mut rng = random::rng(seed);
            let (dv, dg) = (rep.space_dim(), l.dim());
            let f = random::alt_map(&mut rng, ar.0, dv, dg);
            let g = random::alt_map(&mut rng, ar.1, dv, dg);
            let h = random::alt_map(&mut rng, ar.2, dv, dg);
            prop_assert!(skew_defect(&cx, &f, &g).unwrap().is_zero());
            prop_assert!(jacobi_defect(&cx, &f, &g, &h).unwrap().is_zero());
        }

        /// `d_T⟦f,g⟧ = ⟦d_T f, g⟧ + (-1)^{|f|}⟦f, d_T g⟧` with `|f|` the arity.
        #[test]
        fn d_t_is_a_derivation(seed in any::<u64>(), ar in (0usize..=2, 0usize..=2)) {
            let l = catalog::aff2();
            let rep = catalog::aff2_standard();
            let cx = DeformationComplex::new(&l, &rep).unwrap();
            let grid: Vec<Rational> = (-1..=1).map(Rational::from_int).collect();
            let ops = crate::lie::search_oop(&l, &rep, &grid, 1 << 20, false).unwrap();
            let mut rng = random::rng(seed);
            let t = AltMap::from_operator(&ops[(seed % ops.len() as u64) as usize]);
            let f = random::alt_map(&mut rng, ar.0, 2, 2);
            let g = random::alt_map(&mut rng, ar.1, 2, 2);
            let d = |x: &AltMap| cx.d_t(&t, x, false).unwrap();
            let lhs = d(&cx.bracket(&f, &g).unwrap());
            let sign = Rational::from_int(parity_sign(f.degree()) as i64);
            let rhs = cx
                .bracket(&d(&f), &g)
                .unwrap()
                .add(&cx.bracket(&f, &d(&g)).unwrap().scaled(&sign))
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
