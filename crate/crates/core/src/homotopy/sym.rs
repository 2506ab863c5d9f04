//! Graded symmetric multilinear maps `S^i(V) → W` stored on canonical words.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded::GradedVectorSpace;
use crate::linalg::{axpy, is_zero_vec, scale, zero_vec, Vector};
use crate::scalar::Rational;

/// Weakly increasing index sequences of length `weight` in which no
/// odd-degree index repeats (`v ⊙ v = 0` for odd `v`).
pub fn canonical_words(degrees: &[i32], weight: usize) -> Vec<Vec<usize>> {
    fn go(degs: &[i32], weight: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == weight {
            out.push(cur.clone());
            return;
        }
        for i in start..degs.len() {
            cur.push(i);
            let next = if degs[i] & 1 != 0 { i + 1 } else { i };
            go(degs, weight, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(degrees, weight, 0, &mut Vec::with_capacity(weight), &mut out);
    out
}

/// Sorts `args` into canonical order, returning the Koszul sign of the
/// rearrangement, or `None` when an odd-degree index repeats.
pub(crate) fn sort_graded(args: &mut [usize], degrees: &[i32]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..args.len() {
        let mut j = i;
        while j > 0 && args[j - 1] > args[j] {
            if degrees[args[j - 1]] & 1 != 0 && degrees[args[j]] & 1 != 0 {
                sign = -sign;
            }
            args.swap(j - 1, j);
            j -= 1;
        }
    }
    let odd_repeat = args.windows(2).any(|w| w[0] == w[1] && degrees[w[0]] & 1 != 0);
    if odd_repeat {
        None
    } else {
        Some(sign)
    }
}

pub(crate) fn word_degree(word: &[usize], degrees: &[i32]) -> i32 {
    word.iter().map(|&i| degrees[i]).sum()
}

/// Degree-`degree` map `S^weight(V) → W`; every stored value is homogeneous
/// of degree `deg(word) + degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSymMap {
    weight: usize,
    degree: i32,
    domain: GradedVectorSpace,
    codomain: GradedVectorSpace,
    values: BTreeMap<Vec<usize>, Vector>,
}

impl GradedSymMap {
    pub fn zero(weight: usize, degree: i32, domain: &GradedVectorSpace, codomain: &GradedVectorSpace) -> Self {
        GradedSymMap {
            weight,
            degree,
            domain: domain.clone(),
            codomain: codomain.clone(),
            values: BTreeMap::new(),
        }
    }

    pub fn from_fn<F>(
        weight: usize,
        degree: i32,
        domain: &GradedVectorSpace,
        codomain: &GradedVectorSpace,
        mut f: F,
    ) -> Result<Self>
    where
        F: FnMut(&[usize]) -> Vector,
    {
        let mut m = GradedSymMap::zero(weight, degree, domain, codomain);
        for w in canonical_words(domain.degrees(), weight) {
            let v = f(&w);
            m.set(w, v)?;
        }
        Ok(m)
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn domain(&self) -> &GradedVectorSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &GradedVectorSpace {
        &self.codomain
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vector)> {
        self.values.iter()
    }

    /// Stores the value on a canonical word, checking its degree.
    pub fn set(&mut self, word: Vec<usize>, value: Vector) -> Result<()> {
        if word.len() != self.weight {
            return Err(Error::Arity {
                expected: self.weight,
                got: word.len(),
            });
        }
        let degs = self.domain.degrees();
        if word.iter().any(|&i| i >= degs.len())
            || word.windows(2).any(|w| w[0] > w[1] || (w[0] == w[1] && degs[w[0]] & 1 != 0))
        {
            return Err(Error::Dimension(format!("{word:?} is not a canonical word")));
        }
        if value.len() != self.codomain.dim() {
            return Err(Error::Dimension("value has the wrong length".into()));
        }
        if is_zero_vec(&value) {
            self.values.remove(&word);
            return Ok(());
        }
        let want = word_degree(&word, degs) + self.degree;
        match self.codomain.vector_degree(&value)? {
            Some(d) if d != want => {
                return Err(Error::Degree(format!(
                    "value on {word:?} has degree {d}, expected {want}"
                )))
            }
            _ => {}
        }
        self.values.insert(word, value);
        Ok(())
    }

    /// Koszul-signed symmetric extension of the stored values.
    pub fn eval(&self, args: &[usize]) -> Result<Vector> {
        if args.len() != self.weight {
            return Err(Error::Arity {
                expected: self.weight,
                got: args.len(),
            });
        }
        Ok(self.eval_basis(args))
    }

    pub(crate) fn eval_basis(&self, args: &[usize]) -> Vector {
        let mut sorted = args.to_vec();
        match sort_graded(&mut sorted, self.domain.degrees()) {
            None => zero_vec(self.codomain.dim()),
            Some(s) => match self.values.get(&sorted) {
                None => zero_vec(self.codomain.dim()),
                Some(v) if s < 0 => scale(v, &Rational::from_int(-1)),
                Some(v) => v.clone(),
            },
        }
    }

    /// `f(w, rest..)` with a vector `w` in the first slot.
    pub(crate) fn eval_vector_first(&self, w: &[Rational], rest: &[usize]) -> Vector {
        let mut out = zero_vec(self.codomain.dim());
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

    fn same_shape(&self, other: &GradedSymMap) -> Result<()> {
        if self.weight != other.weight
            || self.degree != other.degree
            || self.domain != other.domain
            || self.codomain != other.codomain
        {
            return Err(Error::Dimension("maps of different shapes".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedSymMap) -> Result<GradedSymMap> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (w, v) in &other.values {
            let mut cur = out.values.get(w).cloned().unwrap_or_else(|| zero_vec(v.len()));
            crate::linalg::add_signed(&mut cur, 1, v);
            out.set(w.clone(), cur)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GradedSymMap) -> Result<GradedSymMap> {
        self.add(&other.scaled(&Rational::from_int(-1)))
    }

    pub fn scaled(&self, c: &Rational) -> GradedSymMap {
        let mut out = GradedSymMap::zero(self.weight, self.degree, &self.domain, &self.codomain);
        if !c.is_zero() {
            for (w, v) in &self.values {
                out.values.insert(w.clone(), scale(v, c));
            }
        }
        out
    }
}

/// Homogeneous element `f = Σ_i f_i` of `Hom^degree(S(V), W)`, truncated
/// after `components.len() - 1`; higher components are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCochain {
    degree: i32,
    domain: GradedVectorSpace,
    codomain: GradedVectorSpace,
    components: Vec<GradedSymMap>,
}

impl GradedCochain {
    pub fn zero(degree: i32, truncation: usize, domain: &GradedVectorSpace, codomain: &GradedVectorSpace) -> Self {
        GradedCochain {
            degree,
            domain: domain.clone(),
            codomain: codomain.clone(),
            components: (0..=truncation)
                .map(|w| GradedSymMap::zero(w, degree, domain, codomain))
                .collect(),
        }
    }

    /// Components must be listed by weight `0, 1, ..` and share one degree.
    pub fn new(components: Vec<GradedSymMap>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::Dimension("a cochain needs at least its weight-0 component".into()))?;
        let (degree, domain, codomain) = (first.degree, first.domain.clone(), first.codomain.clone());
        for (w, c) in components.iter().enumerate() {
            if c.weight != w {
                return Err(Error::Dimension(format!("component {w} has weight {}", c.weight)));
            }
            if c.degree != degree {
                return Err(Error::Degree(format!(
                    "component {w} has degree {}, cochain has degree {degree}",
                    c.degree
                )));
            }
            if c.domain != domain || c.codomain != codomain {
                return Err(Error::Dimension("components live on different spaces".into()));
            }
        }
        Ok(GradedCochain {
            degree,
            domain,
            codomain,
            components,
        })
    }

    /// A single nonzero component, padded with zeros below it.
    pub fn single(f: GradedSymMap) -> Self {
        let mut c = GradedCochain::zero(f.degree, f.weight, &f.domain, &f.codomain);
        let w = f.weight;
        c.components[w] = f;
        c
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn truncation(&self) -> usize {
        self.components.len() - 1
    }

    pub fn domain(&self) -> &GradedVectorSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &GradedVectorSpace {
        &self.codomain
    }

    pub fn components(&self) -> &[GradedSymMap] {
        &self.components
    }

    /// Component of weight `w`; `None` beyond the truncation (meaning zero).
    pub fn component(&self, w: usize) -> Option<&GradedSymMap> {
        self.components.get(w)
    }

    pub fn set_component(&mut self, f: GradedSymMap) -> Result<()> {
        if f.degree != self.degree || f.domain != self.domain || f.codomain != self.codomain {
            return Err(Error::Degree("component does not match the cochain".into()));
        }
        while self.components.len() <= f.weight {
            let w = self.components.len();
            self.components.push(GradedSymMap::zero(w, self.degree, &self.domain, &self.codomain));
        }
        let w = f.weight;
        self.components[w] = f;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(GradedSymMap::is_zero)
    }

    /// Same cochain with components exactly `0..=p` (cut or zero-padded).
    pub fn truncated(&self, p: usize) -> GradedCochain {
        GradedCochain {
            degree: self.degree,
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            components: (0..=p)
                .map(|w| {
                    self.components
                        .get(w)
                        .cloned()
                        .unwrap_or_else(|| GradedSymMap::zero(w, self.degree, &self.domain, &self.codomain))
                })
                .collect(),
        }
    }

    pub fn add(&self, other: &GradedCochain) -> Result<GradedCochain> {
        let p = self.truncation().max(other.truncation());
        let (a, b) = (self.truncated(p), other.truncated(p));
        let comps = a
            .components
            .iter()
            .zip(&b.components)
            .map(|(x, y)| x.add(y))
            .collect::<Result<Vec<_>>>()?;
        GradedCochain::new(comps)
    }

    pub fn scaled(&self, c: &Rational) -> GradedCochain {
        GradedCochain {
            degree: self.degree,
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            components: self.components.iter().map(|f| f.scaled(c)).collect(),
        }
    }
}

/// Degree-0 element `T = Σ T_i` of `Hom(S(V), g)`; `T_0` is an element `Ω ∈ g^0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyOperator(GradedCochain);

impl HomotopyOperator {
    pub fn new(cochain: GradedCochain) -> Result<Self> {
        if cochain.degree != 0 {
            return Err(Error::Degree(format!("operator has degree {}, expected 0", cochain.degree)));
        }
        Ok(HomotopyOperator(cochain))
    }

    pub fn zero(truncation: usize, domain: &GradedVectorSpace, codomain: &GradedVectorSpace) -> Self {
        HomotopyOperator(GradedCochain::zero(0, truncation, domain, codomain))
    }

    pub fn cochain(&self) -> &GradedCochain {
        &self.0
    }

    pub fn into_cochain(self) -> GradedCochain {
        self.0
    }

    pub fn truncation(&self) -> usize {
        self.0.truncation()
    }

    pub fn component(&self, w: usize) -> Option<&GradedSymMap> {
        self.0.component(w)
    }

    /// `Ω = T_0()`.
    pub fn omega(&self) -> Vector {
        self.0.components[0].eval_basis(&[])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn sp(degs: &[i32]) -> GradedVectorSpace {
        GradedVectorSpace::new((0..degs.len()).map(|i| format!("v{i}")).collect(), degs.to_vec()).unwrap()
    }

    #[test]
    fn canonical_word_counts() {
        // two even generators: monomials of degree 2 in two variables
        assert_eq!(canonical_words(&[0, 0], 2).len(), 3);
        // two odd generators: exterior square
        assert_eq!(canonical_words(&[1, 1], 2), vec![vec![0, 1]]);
        assert_eq!(canonical_words(&[1, 0], 3), vec![vec![0, 1, 1], vec![1, 1, 1]]);
        assert_eq!(canonical_words(&[1], 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn eval_examples() {
        let v = sp(&[1, 1, 0]);
        let w = sp(&[2, 1]);
        let mut f = GradedSymMap::zero(2, 0, &v, &w);
        f.set(vec![0, 1], vec![r(3), r(0)]).unwrap();
        f.set(vec![0, 2], vec![r(0), r(5)]).unwrap();
        assert_eq!(f.eval(&[1, 0]).unwrap(), vec![r(-3), r(0)]);
        assert_eq!(f.eval(&[0, 0]).unwrap(), vec![r(0), r(0)]);
        assert_eq!(f.eval(&[2, 0]).unwrap(), vec![r(0), r(5)]);
        assert!(f.eval(&[0]).is_err());
        // degree check: word (v0,v1) has degree 2, value must sit in degree 2
        assert!(matches!(f.set(vec![0, 1], vec![r(0), r(1)]), Err(Error::Degree(_))));
        assert!(f.set(vec![0, 0], vec![r(1), r(0)]).is_err());
    }

    #[test]
    fn cochain_shapes() {
        let v = sp(&[0]);
        let c = GradedCochain::zero(1, 2, &v, &v);
        assert_eq!(c.truncation(), 2);
        assert_eq!(c.truncated(4).components().len(), 5);
        assert!(HomotopyOperator::new(c).is_err());
        let wrong = vec![GradedSymMap::zero(1, 0, &v, &v)];
        assert!(GradedCochain::new(wrong).is_err());
    }
}
