//! Pre-Lie algebras, the Matsushima-Nijenhuis bracket on
//! `⊕_k Hom(∧^k V ⊗ V, V)`, the map `Φ` out of the deformation complex, and
//! the pre-Lie algebra induced by an O-operator.

use std::collections::BTreeMap;

use crate::deformation::{increasing_tuples, sort_antisymmetric, AltMap, DeformationComplex};
use crate::error::{Error, Result};
use crate::lie::{is_o_operator, LieAlgebra, LinearOperator, Representation};
use crate::linalg::{add_signed, axpy, is_zero_vec, scale, unit_vec, zero_vec, Vector};
use crate::perm::{parity_sign, unshuffles_signed};
use crate::report::{Report, Witness};
use crate::scalar::Rational;

/// Sign placed in front of the literal composition formula.
///
/// Taken literally, `Φ` turns `⟦f,g⟧` into `-[Φf,Φg]^C`. Negating `∘` (an
/// isomorphic choice of bracket) makes `Φ` an honest homomorphism and leaves
/// `[α,α]^C = 0 ⇔ α is pre-Lie` untouched.
pub const CIRC_SIGN: i32 = -1;

/// `e_i · e_j = Σ_k mu[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieProduct {
    names: Vec<String>,
    mu: Vec<Rational>,
}

impl PreLieProduct {
    pub fn new(names: Vec<String>, mu: Vec<Rational>) -> Result<Self> {
        let d = names.len();
        if mu.len() != d * d * d {
            return Err(Error::Dimension(format!(
                "product constants have {} entries, expected {}",
                mu.len(),
                d * d * d
            )));
        }
        Ok(PreLieProduct { names, mu })
    }

    pub fn zero(names: Vec<String>) -> Self {
        let d = names.len();
        PreLieProduct {
            names,
            mu: zero_vec(d * d * d),
        }
    }

    pub fn with_product(mut self, i: usize, j: usize, value: &[i64]) -> Self {
        let d = self.dim();
        for (k, &x) in value.iter().enumerate() {
            self.mu[(i * d + j) * d + k] = Rational::from_int(x);
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
        &self.mu
    }

    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let d = self.dim();
        self.mu[(i * d + j) * d + k] = v;
    }

    pub fn product_basis(&self, i: usize, j: usize) -> Vector {
        let d = self.dim();
        self.mu[(i * d + j) * d..(i * d + j + 1) * d].to_vec()
    }

    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim();
        let mut out = zero_vec(d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut out, &(xi * yj), &self.mu[(i * d + j) * d..(i * d + j + 1) * d]);
                }
            }
        }
        out
    }

    /// `(x·y)·z - x·(y·z) - (y·x)·z + y·(x·z)` on basis elements.
    pub fn left_symmetry_residual(&self, i: usize, j: usize, k: usize) -> Vector {
        let d = self.dim();
        let z = unit_vec(d, k);
        let mut r = self.product(&self.product_basis(i, j), &z);
        add_signed(&mut r, -1, &self.product(&unit_vec(d, i), &self.product_basis(j, k)));
        add_signed(&mut r, -1, &self.product(&self.product_basis(j, i), &z));
        add_signed(&mut r, 1, &self.product(&unit_vec(d, j), &self.product_basis(i, k)));
        r
    }

    /// The product as a 1-ary element of `Hom(V ⊗ V, V)`.
    pub fn to_hooked(&self) -> HookedMap {
        let d = self.dim();
        let mut h = HookedMap::zero(1, d);
        for i in 0..d {
            for j in 0..d {
                h.set(vec![i], j, self.product_basis(i, j)).expect("shape");
            }
        }
        h
    }

    pub fn from_hooked(names: Vec<String>, h: &HookedMap) -> Result<Self> {
        if h.arity() != 1 {
            return Err(Error::Arity {
                expected: 1,
                got: h.arity(),
            });
        }
        let d = names.len();
        if h.dim() != d {
            return Err(Error::Dimension("basis does not match the map".into()));
        }
        let mut mu = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                mu.extend(h.eval_basis(&[i], j));
            }
        }
        PreLieProduct::new(names, mu)
    }

    /// Commutator `[x,y] = x·y - y·x`.
    pub fn sub_adjacent(&self) -> LieAlgebra {
        let d = self.dim();
        let mut c = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                c.extend(
                    self.product_basis(i, j)
                        .iter()
                        .zip(self.product_basis(j, i))
                        .map(|(a, b)| a - &b),
                );
            }
        }
        LieAlgebra::new(self.names.clone(), c).expect("shape")
    }
}

pub fn check_prelie(p: &PreLieProduct) -> Report {
    let d = p.dim();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let r = p.left_symmetry_residual(i, j, k);
                if !is_zero_vec(&r) {
                    let n = p.names();
                    return Report::fail(
                        "left-symmetry",
                        Witness::new(vec![n[i].clone(), n[j].clone(), n[k].clone()], n, &r),
                    );
                }
            }
        }
    }
    Report::pass("left-symmetry")
}

/// Element of `Hom(∧^k V ⊗ V, V)`: antisymmetric in the first `k` slots,
/// free in the last. Stored on (increasing tuple, last index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookedMap {
    arity: usize,
    dim: usize,
    values: BTreeMap<(Vec<usize>, usize), Vector>,
}

impl HookedMap {
    pub fn zero(arity: usize, dim: usize) -> Self {
        HookedMap {
            arity,
            dim,
            values: BTreeMap::new(),
        }
    }

    pub fn from_fn<F>(arity: usize, dim: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize], usize) -> Vector,
    {
        let mut h = HookedMap::zero(arity, dim);
        for t in increasing_tuples(dim, arity) {
            for last in 0..dim {
                let v = f(&t, last);
                h.set(t.clone(), last, v)?;
            }
        }
        Ok(h)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Vec<usize>, usize), &Vector)> {
        self.values.iter()
    }

    pub fn set(&mut self, tuple: Vec<usize>, last: usize, value: Vector) -> Result<()> {
        if tuple.len() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                got: tuple.len(),
            });
        }
        if tuple.windows(2).any(|w| w[0] >= w[1]) || tuple.iter().chain([&last]).any(|&i| i >= self.dim) {
            return Err(Error::Dimension(format!("({tuple:?}; {last}) is not a stored key")));
        }
        if value.len() != self.dim {
            return Err(Error::Dimension("value has the wrong length".into()));
        }
        if is_zero_vec(&value) {
            self.values.remove(&(tuple, last));
        } else {
            self.values.insert((tuple, last), value);
        }
        Ok(())
    }

    /// `α(args.., last)`.
    pub fn eval(&self, args: &[usize], last: usize) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                got: args.len(),
            });
        }
        Ok(self.eval_basis(args, last))
    }

    pub(crate) fn eval_basis(&self, args: &[usize], last: usize) -> Vector {
        let mut sorted = args.to_vec();
        match sort_antisymmetric(&mut sorted) {
            None => zero_vec(self.dim),
            Some(s) => match self.values.get(&(sorted, last)) {
                None => zero_vec(self.dim),
                Some(v) if s < 0 => scale(v, &Rational::from_int(-1)),
                Some(v) => v.clone(),
            },
        }
    }

    /// Multilinear evaluation with arbitrary vectors in every slot.
    fn eval_vectors(&self, slots: &[Vector]) -> Vector {
        let mut out = zero_vec(self.dim);
        let mut idx = Vec::with_capacity(slots.len());
        self.expand(slots, &mut idx, Rational::one(), &mut out);
        out
    }

    fn expand(&self, slots: &[Vector], idx: &mut Vec<usize>, coeff: Rational, out: &mut Vector) {
        let pos = idx.len();
        if pos == slots.len() {
            let (last, args) = idx.split_last().expect("at least one slot");
            axpy(out, &coeff, &self.eval_basis(args, *last));
            return;
        }
        for (i, c) in slots[pos].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            idx.push(i);
            self.expand(slots, idx, &coeff * c, out);
            idx.pop();
        }
    }

    fn same_shape(&self, other: &HookedMap) -> Result<()> {
        if (self.arity, self.dim) != (other.arity, other.dim) {
            return Err(Error::Dimension("maps of different shapes".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &HookedMap) -> Result<HookedMap> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &HookedMap) -> Result<HookedMap> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &HookedMap, sign: i32) -> Result<HookedMap> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for ((t, l), v) in &other.values {
            let mut cur = out.eval_basis(t, *l);
            add_signed(&mut cur, sign, v);
            out.set(t.clone(), *l, cur)?;
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &Rational) -> HookedMap {
        let mut out = HookedMap::zero(self.arity, self.dim);
        if !c.is_zero() {
            for (k, v) in &self.values {
                out.values.insert(k.clone(), scale(v, c));
            }
        }
        out
    }
}

/// The composition formula exactly as displayed, for `α` of arity `n` and
/// `β` of arity `m`:
///
/// ```text
/// (α∘β)(u_1..u_{m+n+1}) =
///      Σ_{σ ∈ S(m,1,n-1)} (-1)^σ α(β(u_σ1..u_σ(m+1)), u_σ(m+2)..u_σ(m+n), u_{m+n+1})
///    + (-1)^{mn} Σ_{σ ∈ S(n,m)} (-1)^σ α(u_σ1..u_σn, β(u_σ(n+1)..u_σ(n+m), u_{m+n+1}))
/// ```
pub fn circ_literal(alpha: &HookedMap, beta: &HookedMap) -> Result<HookedMap> {
    if alpha.dim != beta.dim {
        return Err(Error::Dimension("maps on different spaces".into()));
    }
    let (n, m) = (alpha.arity, beta.arity);
    let d = alpha.dim;
    let total = n + m;
    let first = unshuffles_signed(&[m as isize, 1, n as isize - 1]);
    let second = unshuffles_signed(&[n as isize, m as isize]);
    let s_mn = parity_sign((m * n) as i64);
    HookedMap::from_fn(total, d, |u, last| {
        let mut acc = zero_vec(d);
        for sigma in &first {
            let b = beta.eval_basis(&(0..m).map(|i| u[sigma.apply(i)]).collect::<Vec<_>>(), u[sigma.apply(m)]);
            if is_zero_vec(&b) {
                continue;
            }
            let mut slots = vec![b];
            slots.extend((m + 1..total).map(|i| unit_vec(d, u[sigma.apply(i)])));
            slots.push(unit_vec(d, last));
            add_signed(&mut acc, sigma.sign(), &alpha.eval_vectors(&slots));
        }
        for sigma in &second {
            let b = beta.eval_basis(&(n..total).map(|i| u[sigma.apply(i)]).collect::<Vec<_>>(), last);
            if is_zero_vec(&b) {
                continue;
            }
            let mut slots: Vec<Vector> = (0..n).map(|i| unit_vec(d, u[sigma.apply(i)])).collect();
            slots.push(b);
            add_signed(&mut acc, s_mn * sigma.sign(), &alpha.eval_vectors(&slots));
        }
        acc
    })
}

/// `α∘β` with the normalizing [`CIRC_SIGN`].
pub fn circ(alpha: &HookedMap, beta: &HookedMap) -> Result<HookedMap> {
    Ok(circ_literal(alpha, beta)?.scaled(&Rational::from_int(CIRC_SIGN as i64)))
}

/// `[α,β]^C = α∘β - (-1)^{mn} β∘α`.
pub fn mn_bracket(alpha: &HookedMap, beta: &HookedMap) -> Result<HookedMap> {
    let s = parity_sign((alpha.arity * beta.arity) as i64);
    circ(alpha, beta)?.sub(&circ(beta, alpha)?.scaled(&Rational::from_int(s as i64)))
}

/// `Φ(f)(u_1..u_k, u_{k+1}) = ρ(f(u_1..u_k)) u_{k+1}`.
pub fn phi(f: &AltMap, rep: &Representation) -> Result<HookedMap> {
    if f.dim_domain() != rep.space_dim() || f.dim_codomain() != rep.action().len() {
        return Err(Error::Dimension("map does not match the representation".into()));
    }
    let d = rep.space_dim();
    HookedMap::from_fn(f.arity(), d, |u, last| rep.act_on_basis(&f.eval_basis(u), last))
}

/// `Φ(⟦f,g⟧) == [Φf, Φg]^C`.
pub fn check_phi_homomorphism(cx: &DeformationComplex, f: &AltMap, g: &AltMap) -> Result<bool> {
    let lhs = phi(&cx.bracket(f, g)?, cx.rep)?;
    let rhs = mn_bracket(&phi(f, cx.rep)?, &phi(g, cx.rep)?)?;
    Ok(lhs == rhs)
}

/// `u ·_T v = ρ(Tu) v`; `T` must be an O-operator.
pub fn induce_prelie(lie: &LieAlgebra, rep: &Representation, op: &LinearOperator) -> Result<PreLieProduct> {
    if !is_o_operator(lie, rep, op)? {
        return Err(Error::NotOOperator);
    }
    Ok(induced_product(rep, op))
}

fn induced_product(rep: &Representation, op: &LinearOperator) -> PreLieProduct {
    let d = rep.space_dim();
    let mut mu = Vec::with_capacity(d * d * d);
    for i in 0..d {
        let ti = op.apply_basis(i);
        for j in 0..d {
            mu.extend(rep.act_on_basis(&ti, j));
        }
    }
    PreLieProduct::new(rep.space_names().to_vec(), mu).expect("shape")
}

/// Groups O-operators by their induced pre-Lie product (exact equality of
/// structure constants in the fixed basis). Returns index classes in order of
/// first appearance.
pub fn fiber_classes(lie: &LieAlgebra, rep: &Representation, ops: &[LinearOperator]) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<(PreLieProduct, Vec<usize>)> = Vec::new();
    for (i, op) in ops.iter().enumerate() {
        let p = induce_prelie(lie, rep, op)?;
        match classes.iter_mut().find(|(q, _)| *q == p) {
            Some((_, members)) => members.push(i),
            None => classes.push((p, vec![i])),
        }
    }
    Ok(classes.into_iter().map(|(_, m)| m).collect())
}
