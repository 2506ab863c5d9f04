//! Pre-Lie∞ algebras, the graded Matsushima-Nijenhuis bracket on
//! `Hom(S(V), gl(V))`, the map `Ψ`, and the pre-Lie∞ algebra induced by a
//! homotopy O-operator.
//!
//! An element `F` of degree `b` has components `F_a(v_1..v_a; w)`, graded
//! symmetric in the `v`'s and linear in `w`, with values of degree
//! `v_1 + .. + v_a + w + b`. A pre-Lie∞ structure is such an `L` of degree 1,
//! read as `m_k(v_1..v_k) = L_{k-1}(v_1..v_{k-1}; v_k)`.
//!
//! The bracket is `[F,G]^c = CIRC_SIGN · (F⋄G - (-1)^{|F||G|} G⋄F)` where, at
//! weight `p`,
//!
//! ```text
//! (F⋄G)_p(v_1..v_p; w) =
//!     Σ_{a+b=p, b≥1} Σ_{σ∈S(a,1,b-1)} ε(σ) F_b(G_a(v_σ1..v_σa; v_σ(a+1)), v_σ(a+2)..v_σp; w)
//!   + Σ_{a+b=p} Σ_{σ∈S(b,a)} (-1)^{|G|(v_σ1+..+v_σb)} ε(σ) F_b(v_σ1..v_σb; G_a(v_σ(b+1)..v_σp; w))
//! ```
//!
//! For `F = G = L` the two sums are exactly the two sums of the pre-Lie∞
//! coherence identity, and on ungraded data `⋄` is the ungraded `∘`.

use std::collections::BTreeMap;

use super::bracket::{homotopy_oop_residual, graded_bracket, MAX_WEIGHT};
use super::sym::{canonical_words, sort_graded, word_degree, GradedCochain, HomotopyOperator};
use crate::error::{Error, Result};
use crate::graded::{GradedRepresentation, GradedVectorSpace, Sgla};
use crate::linalg::{add_signed, axpy, is_zero_vec, scale, zero_vec, Vector};
use crate::perm::{koszul_sign_of_arrangement, parity_sign, unshuffles, Permutation};
use crate::prelie::CIRC_SIGN;
use crate::report::{Report, Witness};
use crate::scalar::Rational;

/// Component `F_a: S^a(V) ⊗ V → V` of degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHookedMap {
    weight: usize,
    degree: i32,
    space: GradedVectorSpace,
    values: BTreeMap<(Vec<usize>, usize), Vector>,
}

impl GradedHookedMap {
    pub fn zero(weight: usize, degree: i32, space: &GradedVectorSpace) -> Self {
        GradedHookedMap {
            weight,
            degree,
            space: space.clone(),
            values: BTreeMap::new(),
        }
    }

    pub fn from_fn<F>(weight: usize, degree: i32, space: &GradedVectorSpace, mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize], usize) -> Vector,
    {
        let mut m = GradedHookedMap::zero(weight, degree, space);
        for word in canonical_words(space.degrees(), weight) {
            for last in 0..space.dim() {
                let v = f(&word, last);
                m.set(word.clone(), last, v)?;
            }
        }
        Ok(m)
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn space(&self) -> &GradedVectorSpace {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Vec<usize>, usize), &Vector)> {
        self.values.iter()
    }

    pub fn set(&mut self, word: Vec<usize>, last: usize, value: Vector) -> Result<()> {
        if word.len() != self.weight {
            return Err(Error::Arity {
                expected: self.weight,
                got: word.len(),
            });
        }
        let degs = self.space.degrees();
        if word.iter().chain([&last]).any(|&i| i >= degs.len())
            || word.windows(2).any(|w| w[0] > w[1] || (w[0] == w[1] && degs[w[0]] & 1 != 0))
        {
            return Err(Error::Dimension(format!("({word:?}; {last}) is not a canonical key")));
        }
        if value.len() != self.space.dim() {
            return Err(Error::Dimension("value has the wrong length".into()));
        }
        if is_zero_vec(&value) {
            self.values.remove(&(word, last));
            return Ok(());
        }
        let want = word_degree(&word, degs) + degs[last] + self.degree;
        match self.space.vector_degree(&value)? {
            Some(d) if d != want => {
                return Err(Error::Degree(format!(
                    "value on ({word:?}; {last}) has degree {d}, expected {want}"
                )))
            }
            _ => {}
        }
        self.values.insert((word, last), value);
        Ok(())
    }

    pub fn eval(&self, args: &[usize], last: usize) -> Result<Vector> {
        if args.len() != self.weight {
            return Err(Error::Arity {
                expected: self.weight,
                got: args.len(),
            });
        }
        Ok(self.eval_basis(args, last))
    }

    pub(crate) fn eval_basis(&self, args: &[usize], last: usize) -> Vector {
        let mut sorted = args.to_vec();
        match sort_graded(&mut sorted, self.space.degrees()) {
            None => zero_vec(self.space.dim()),
            Some(s) => match self.values.get(&(sorted, last)) {
                None => zero_vec(self.space.dim()),
                Some(v) if s < 0 => scale(v, &Rational::from_int(-1)),
                Some(v) => v.clone(),
            },
        }
    }

    /// `F(x, rest..; last)` with a vector `x` in the first symmetric slot.
    fn eval_vector_first(&self, x: &[Rational], rest: &[usize], last: usize) -> Vector {
        let mut out = zero_vec(self.space.dim());
        let mut args = Vec::with_capacity(rest.len() + 1);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            args.clear();
            args.push(i);
            args.extend_from_slice(rest);
            axpy(&mut out, c, &self.eval_basis(&args, last));
        }
        out
    }

    /// `F(args..; x)` with a vector `x` in the last slot.
    fn eval_vector_last(&self, args: &[usize], x: &[Rational]) -> Vector {
        let mut out = zero_vec(self.space.dim());
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.eval_basis(args, i));
            }
        }
        out
    }

    fn scaled(&self, c: &Rational) -> GradedHookedMap {
        let mut out = GradedHookedMap::zero(self.weight, self.degree, &self.space);
        if !c.is_zero() {
            for (k, v) in &self.values {
                out.values.insert(k.clone(), scale(v, c));
            }
        }
        out
    }

    fn add(&self, other: &GradedHookedMap) -> Result<GradedHookedMap> {
        if (self.weight, self.degree) != (other.weight, other.degree) || self.space != other.space {
            return Err(Error::Dimension("maps of different shapes".into()));
        }
        let mut out = self.clone();
        for ((w, l), v) in &other.values {
            let mut cur = out.eval_basis(w, *l);
            add_signed(&mut cur, 1, v);
            out.set(w.clone(), *l, cur)?;
        }
        Ok(out)
    }
}

/// Homogeneous element of `Hom(S(V), gl(V))`, truncated after the last component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHookedCochain {
    degree: i32,
    space: GradedVectorSpace,
    components: Vec<GradedHookedMap>,
}

impl GradedHookedCochain {
    pub fn zero(degree: i32, truncation: usize, space: &GradedVectorSpace) -> Self {
        GradedHookedCochain {
            degree,
            space: space.clone(),
            components: (0..=truncation).map(|w| GradedHookedMap::zero(w, degree, space)).collect(),
        }
    }

    pub fn new(components: Vec<GradedHookedMap>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::Dimension("a cochain needs at least its weight-0 component".into()))?;
        let (degree, space) = (first.degree, first.space.clone());
        for (w, c) in components.iter().enumerate() {
            if c.weight != w || c.degree != degree || c.space != space {
                return Err(Error::Degree(format!("component {w} does not match the cochain")));
            }
        }
        Ok(GradedHookedCochain {
            degree,
            space,
            components,
        })
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn space(&self) -> &GradedVectorSpace {
        &self.space
    }

    pub fn truncation(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[GradedHookedMap] {
        &self.components
    }

    pub fn component(&self, w: usize) -> Option<&GradedHookedMap> {
        self.components.get(w).filter(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(GradedHookedMap::is_zero)
    }

    pub fn truncated(&self, p: usize) -> GradedHookedCochain {
        GradedHookedCochain {
            degree: self.degree,
            space: self.space.clone(),
            components: (0..=p)
                .map(|w| {
                    self.components
                        .get(w)
                        .cloned()
                        .unwrap_or_else(|| GradedHookedMap::zero(w, self.degree, &self.space))
                })
                .collect(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> GradedHookedCochain {
        GradedHookedCochain {
            degree: self.degree,
            space: self.space.clone(),
            components: self.components.iter().map(|f| f.scaled(c)).collect(),
        }
    }

    pub fn sub(&self, other: &GradedHookedCochain) -> Result<GradedHookedCochain> {
        let p = self.truncation().max(other.truncation());
        let (a, b) = (self.truncated(p), other.truncated(p));
        let comps = a
            .components
            .iter()
            .zip(&b.components)
            .map(|(x, y)| x.add(&y.scaled(&Rational::from_int(-1))))
            .collect::<Result<Vec<_>>>()?;
        GradedHookedCochain::new(comps)
    }
}

fn pick(word: &[usize], sigma: &Permutation, range: std::ops::Range<usize>) -> Vec<usize> {
    range.map(|i| word[sigma.apply(i)]).collect()
}

/// `F⋄G` through weight `p_max`; degree `|F| + |G|`.
pub fn diamond(f: &GradedHookedCochain, h: &GradedHookedCochain, p_max: usize) -> Result<GradedHookedCochain> {
    if f.space != h.space {
        return Err(Error::Dimension("cochains on different spaces".into()));
    }
    let space = &f.space;
    let degs = space.degrees();
    let gdeg_h = i64::from(h.degree);
    let comps = (0..=p_max)
        .map(|p| {
            let firsts: Vec<Vec<Permutation>> = (0..p).map(|a| unshuffles(&[a, 1, p - a - 1])).collect();
            let seconds: Vec<Vec<Permutation>> = (0..=p).map(|b| unshuffles(&[b, p - b])).collect();
            GradedHookedMap::from_fn(p, f.degree + h.degree, space, |word, last| {
                let wdeg: Vec<i32> = word.iter().map(|&i| degs[i]).collect();
                let mut acc = zero_vec(space.dim());
                for a in 0..p {
                    let (Some(fb), Some(ga)) = (f.component(p - a), h.component(a)) else {
                        continue;
                    };
                    for sigma in &firsts[a] {
                        let x = ga.eval_basis(&pick(word, sigma, 0..a), word[sigma.apply(a)]);
                        if is_zero_vec(&x) {
                            continue;
                        }
                        let val = fb.eval_vector_first(&x, &pick(word, sigma, a + 1..p), last);
                        add_signed(&mut acc, koszul_sign_of_arrangement(sigma.images(), &wdeg), &val);
                    }
                }
                for b in 0..=p {
                    let (Some(fb), Some(ga)) = (f.component(b), h.component(p - b)) else {
                        continue;
                    };
                    for sigma in &seconds[b] {
                        let outer = pick(word, sigma, 0..b);
                        let x = ga.eval_basis(&pick(word, sigma, b..p), last);
                        if is_zero_vec(&x) {
                            continue;
                        }
                        let val = fb.eval_vector_last(&outer, &x);
                        let big_b = i64::from(word_degree(&outer, degs));
                        let sign = parity_sign(gdeg_h * big_b) * koszul_sign_of_arrangement(sigma.images(), &wdeg);
                        add_signed(&mut acc, sign, &val);
                    }
                }
                acc
            })
        })
        .collect::<Result<Vec<_>>>()?;
    GradedHookedCochain::new(comps)
}

/// `[F,G]^c = CIRC_SIGN · (F⋄G - (-1)^{|F||G|} G⋄F)`.
pub fn gm_bracket(f: &GradedHookedCochain, h: &GradedHookedCochain, p_max: usize) -> Result<GradedHookedCochain> {
    if p_max > MAX_WEIGHT {
        return Err(Error::Truncation {
            requested: p_max,
            bound: MAX_WEIGHT,
        });
    }
    let s = parity_sign(i64::from(f.degree) * i64::from(h.degree));
    let fg = diamond(f, h, p_max)?;
    let gf = diamond(h, f, p_max)?.scaled(&Rational::from_int(s.into()));
    Ok(fg.sub(&gf)?.scaled(&Rational::from_int(CIRC_SIGN.into())))
}

/// `Ψ(f)_k(v_1..v_k; w) = ρ(f_k(v_1..v_k)) w`, of degree `deg f + 1`.
pub fn psi(f: &GradedCochain, g: &Sgla, rep: &GradedRepresentation) -> Result<GradedHookedCochain> {
    rep.check_against(g)?;
    if f.domain() != rep.space() || f.codomain() != g.space() {
        return Err(Error::Dimension("cochain does not live on Hom(S(V), g)".into()));
    }
    let comps = f
        .components()
        .iter()
        .map(|fk| {
            GradedHookedMap::from_fn(fk.weight(), f.degree() + 1, rep.space(), |word, last| {
                rep.act_on_basis(&fk.eval_basis(word), last)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    GradedHookedCochain::new(comps)
}

/// `Ψ(⟦f,g⟧) == [Ψf, Ψg]^c` through weight `p_max`.
pub fn check_psi_homomorphism(
    f: &GradedCochain,
    h: &GradedCochain,
    g: &Sgla,
    rep: &GradedRepresentation,
    p_max: usize,
) -> Result<bool> {
    let lhs = psi(&graded_bracket(f, h, g, rep, p_max)?, g, rep)?;
    let rhs = gm_bracket(&psi(f, g, rep)?, &psi(h, g, rep)?, p_max)?;
    Ok(lhs.truncated(p_max) == rhs.truncated(p_max))
}

/// Operations `m_1, .., m_K` of degree 1; `m_k` is component `k - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieInfinity(GradedHookedCochain);

impl PreLieInfinity {
    pub fn new(ops: GradedHookedCochain) -> Result<Self> {
        if ops.degree != 1 {
            return Err(Error::Degree(format!("operations have degree {}, expected 1", ops.degree)));
        }
        Ok(PreLieInfinity(ops))
    }

    pub fn zero(k: usize, space: &GradedVectorSpace) -> Self {
        PreLieInfinity(GradedHookedCochain::zero(1, k.saturating_sub(1), space))
    }

    pub fn ops(&self) -> &GradedHookedCochain {
        &self.0
    }

    /// Highest operation index `K`.
    pub fn truncation(&self) -> usize {
        self.0.truncation() + 1
    }

    pub fn space(&self) -> &GradedVectorSpace {
        &self.0.space
    }

    /// `m_k(args)` with `args.len() == k`.
    pub fn m(&self, args: &[usize]) -> Result<Vector> {
        let (last, rest) = args
            .split_last()
            .ok_or(Error::Arity { expected: 1, got: 0 })?;
        match self.0.components.get(rest.len()) {
            Some(c) => c.eval(rest, *last),
            None => Ok(zero_vec(self.space().dim())),
        }
    }

    fn op(&self, k: usize) -> Option<&GradedHookedMap> {
        self.0.component(k - 1)
    }
}

/// Left-hand side of coherence identity (ii) for `n` arguments:
///
/// ```text
///   Σ_{i+j=n+1, i≥1, j≥2} Σ_{σ∈S(i-1,1,j-2)} ε(σ) m_j(m_i(v_σ1..v_σi), v_σ(i+1)..v_σ(n-1), v_n)
/// + Σ_{i+j=n+1, i≥1, j≥1} Σ_{σ∈S(j-1,i-1)} (-1)^{v_σ1+..+v_σ(j-1)} ε(σ) m_j(v_σ1..v_σ(j-1), m_i(v_σj..v_σ(n-1), v_n))
/// ```
pub fn prelie_infinity_residual(l: &PreLieInfinity, word: &[usize], last: usize) -> Vector {
    let space = l.space();
    let degs = space.degrees();
    let d = space.dim();
    let n = word.len() + 1;
    let wdeg: Vec<i32> = word.iter().map(|&i| degs[i]).collect();
    let mut acc = zero_vec(d);
    for i in 1..n {
        let j = n + 1 - i;
        let (Some(mj), Some(mi)) = (l.op(j), l.op(i)) else {
            continue;
        };
        for sigma in unshuffles(&[i - 1, 1, j - 2]) {
            let inner = mi.eval_basis(&pick(word, &sigma, 0..i - 1), word[sigma.apply(i - 1)]);
            if is_zero_vec(&inner) {
                continue;
            }
            let mut val = zero_vec(d);
            let rest = pick(word, &sigma, i..n - 1);
            let mut args = Vec::with_capacity(j - 1);
            for (x, c) in inner.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                args.clear();
                args.push(x);
                args.extend_from_slice(&rest);
                axpy(&mut val, c, &mj.eval_basis(&args, last));
            }
            add_signed(&mut acc, koszul_sign_of_arrangement(sigma.images(), &wdeg), &val);
        }
    }
    for i in 1..=n {
        let j = n + 1 - i;
        let (Some(mj), Some(mi)) = (l.op(j), l.op(i)) else {
            continue;
        };
        for sigma in unshuffles(&[j - 1, i - 1]) {
            let outer = pick(word, &sigma, 0..j - 1);
            let inner = mi.eval_basis(&pick(word, &sigma, j - 1..n - 1), last);
            if is_zero_vec(&inner) {
                continue;
            }
            let mut val = zero_vec(d);
            for (x, c) in inner.iter().enumerate() {
                if !c.is_zero() {
                    axpy(&mut val, c, &mj.eval_basis(&outer, x));
                }
            }
            let alpha = i64::from(word_degree(&outer, degs));
            let sign = parity_sign(alpha) * koszul_sign_of_arrangement(sigma.images(), &wdeg);
            add_signed(&mut acc, sign, &val);
        }
    }
    acc
}

/// Graded symmetry (i), exhaustively over permutations of every canonical
/// word, and coherence (ii) for `1 ≤ n ≤ n_max`.
pub fn check_prelie_infinity(l: &PreLieInfinity, n_max: usize) -> Result<Vec<Report>> {
    if n_max > MAX_WEIGHT + 1 {
        return Err(Error::Truncation {
            requested: n_max,
            bound: MAX_WEIGHT + 1,
        });
    }
    let space = l.space();
    let degs = space.degrees();
    let names = space.names();
    let arg_names = |word: &[usize], last: usize| -> Vec<String> {
        word.iter().chain([&last]).map(|&i| names[i].clone()).collect()
    };

    let mut sym = None;
    'sym: for c in l.ops().components() {
        let k = c.weight();
        let perms = unshuffles(&vec![1; k]);
        for word in canonical_words(degs, k) {
            let wdeg: Vec<i32> = word.iter().map(|&i| degs[i]).collect();
            for last in 0..space.dim() {
                let base = c.eval_basis(&word, last);
                for sigma in &perms {
                    let permuted = pick(&word, sigma, 0..k);
                    let eps = koszul_sign_of_arrangement(sigma.images(), &wdeg);
                    let mut r = c.eval_basis(&permuted, last);
                    add_signed(&mut r, -eps, &base);
                    if !is_zero_vec(&r) {
                        sym = Some(Witness::new(arg_names(&permuted, last), names, &r));
                        break 'sym;
                    }
                }
            }
        }
    }

    let mut coh = None;
    'coh: for n in 1..=n_max {
        for word in canonical_words(degs, n - 1) {
            for last in 0..space.dim() {
                let r = prelie_infinity_residual(l, &word, last);
                if !is_zero_vec(&r) {
                    coh = Some(Witness::new(arg_names(&word, last), names, &r));
                    break 'coh;
                }
            }
        }
    }
    Ok(vec![
        Report::from_witness("graded-symmetry", sym),
        Report::from_witness("pre-lie-infinity", coh).with_order(n_max),
    ])
}

pub fn is_prelie_infinity(l: &PreLieInfinity, n_max: usize) -> Result<bool> {
    Ok(check_prelie_infinity(l, n_max)?.iter().all(|r| r.pass))
}

/// Default verification order for an operator truncated at `N`: `⟦T,T⟧`
/// vanishes identically above weight `2N`.
pub fn complete_order(t: &HomotopyOperator) -> usize {
    (2 * t.truncation()).min(MAX_WEIGHT)
}

/// `m_k(v_1..v_k) = ρ(T_{k-1}(v_1..v_{k-1})) v_k` for `k ≤ N + 1`, after
/// verifying `T` through weight `order`.
pub fn induce_prelie_infinity(
    t: &HomotopyOperator,
    g: &Sgla,
    rep: &GradedRepresentation,
    order: usize,
) -> Result<PreLieInfinity> {
    let res = homotopy_oop_residual(t, g, rep, order)?;
    if !res.iter().all(|m| m.is_zero()) {
        return Err(Error::NotHomotopyOOperator { order });
    }
    PreLieInfinity::new(psi(t.cochain(), g, rep)?)
}
