//! JSON schemas for every entity, and conversions to and from the domain
//! types. Basis elements are always referred to by name; coefficients are
//! rational strings such as `"1"` or `"-3/2"`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::deformation::{sort_antisymmetric, AltMap};
use crate::error::{Error, Result};
use crate::graded::{GradedRepresentation, GradedVectorSpace, Sgla};
use crate::homotopy::sym::sort_graded;
use crate::homotopy::{GradedCochain, GradedHookedCochain, GradedHookedMap, GradedSymMap, PreLieInfinity};
use crate::lie::{LieAlgebra, LinearOperator, Representation};
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::perm::parity_sign;
use crate::prelie::{HookedMap, PreLieProduct};
use crate::scalar::Rational;

/// Sparse vector: basis name to coefficient. Missing names are zero.
pub type Coeffs = BTreeMap<String, Rational>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    #[serde(default)]
    pub value: Coeffs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieSchema {
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

/// Either the keyword `"adjoint"` or explicit matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepSchema {
    Keyword(String),
    Explicit(ExplicitRep),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitRep {
    pub basis: Vec<String>,
    /// Algebra basis name to a row-major matrix on the module.
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Vec<Rational>>>,
}

/// Row-major matrix, rows indexed by the codomain basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSchema {
    pub rows: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedBasisEntry {
    pub name: String,
    pub degree: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedSpaceSchema {
    pub basis: Vec<GradedBasisEntry>,
}

/// A graded space given inline or by the key of a `graded_space` entity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Named(String),
    Inline(GradedSpaceSchema),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SglaSchema {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceRef>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GradedRepSchema {
    Keyword(String),
    Explicit(ExplicitGradedRep),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitGradedRep {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceRef>,
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Vec<Rational>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductSchema {
    pub basis: Vec<String>,
    #[serde(default)]
    pub products: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArgEntry {
    pub args: Vec<String>,
    #[serde(default)]
    pub value: Coeffs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AltMapSchema {
    pub arity: usize,
    #[serde(default)]
    pub entries: Vec<ArgEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HookedEntry {
    pub args: Vec<String>,
    pub last: String,
    #[serde(default)]
    pub value: Coeffs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HookedSchema {
    pub basis: Vec<String>,
    pub arity: usize,
    #[serde(default)]
    pub entries: Vec<HookedEntry>,
}

/// One weight of a cochain: `value` for weight 0, `entries` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSchema {
    pub weight: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Coeffs>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub entries: Vec<ArgEntry>,
}

/// Components of `Hom(S(V), g)`; a homotopy operator is the degree-0 case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainSchema {
    #[serde(default, skip_serializing_if = "is_zero_i32")]
    pub degree: i32,
    pub truncation: usize,
    #[serde(default)]
    pub components: Vec<ComponentSchema>,
}

fn is_zero_i32(d: &i32) -> bool {
    *d == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperationSchema {
    pub k: usize,
    #[serde(default)]
    pub entries: Vec<HookedEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreLieInfSchema {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceRef>,
    pub truncation: usize,
    #[serde(default)]
    pub operations: Vec<OperationSchema>,
}

fn index(names: &[String], name: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::UnknownBasis(name.to_string()))
}

fn indices(names: &[String], args: &[String]) -> Result<Vec<usize>> {
    args.iter().map(|a| index(names, a)).collect()
}

fn unique_names(names: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(Error::Parse(format!("basis name {n:?} appears twice")));
        }
    }
    Ok(())
}

pub fn coeffs_to_vector(names: &[String], c: &Coeffs) -> Result<Vector> {
    let mut v = zero_vec(names.len());
    for (n, x) in c {
        v[index(names, n)?] = x.clone();
    }
    Ok(v)
}

pub fn vector_to_coeffs(names: &[String], v: &[Rational]) -> Coeffs {
    names
        .iter()
        .zip(v)
        .filter(|(_, x)| !x.is_zero())
        .map(|(n, x)| (n.clone(), x.clone()))
        .collect()
}

fn matrix(rows: &[Vec<Rational>], nrows: usize, ncols: usize, what: &str) -> Result<Matrix> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Dimension(format!("{what} must be {nrows}x{ncols}")));
    }
    Matrix::from_rows(rows.to_vec())
}

/// Fills a dense cube from bracket entries. An entry also fixes its mirror
/// `[right, left]` with the factor `mirror(i, j)` unless the mirror is listed.
fn fill_brackets(
    names: &[String],
    entries: &[BracketEntry],
    mirror: Option<&dyn Fn(usize, usize) -> i32>,
) -> Result<Vec<Rational>> {
    let d = names.len();
    let mut cube = zero_vec(d * d * d);
    let mut explicit = BTreeSet::new();
    let mut parsed = Vec::new();
    for e in entries {
        let (i, j) = (index(names, &e.left)?, index(names, &e.right)?);
        if !explicit.insert((i, j)) {
            return Err(Error::Parse(format!("[{}, {}] listed twice", e.left, e.right)));
        }
        parsed.push((i, j, coeffs_to_vector(names, &e.value)?));
    }
    for (i, j, v) in &parsed {
        for (k, x) in v.iter().enumerate() {
            cube[(i * d + j) * d + k] = x.clone();
        }
        if let Some(m) = mirror {
            if i != j && !explicit.contains(&(*j, *i)) {
                for (k, x) in v.iter().enumerate() {
                    cube[(j * d + i) * d + k] = x.clone().signed(m(*i, *j));
                }
            }
        }
    }
    Ok(cube)
}

/// Inverse of [`fill_brackets`]: a pair is written once when its mirror
/// follows from the rule, and both ways otherwise.
fn emit_brackets(names: &[String], cube: &[Rational], mirror: Option<&dyn Fn(usize, usize) -> i32>) -> Vec<BracketEntry> {
    let d = names.len();
    let at = |i: usize, j: usize| -> Vector { cube[(i * d + j) * d..(i * d + j + 1) * d].to_vec() };
    let entry = |i: usize, j: usize| BracketEntry {
        left: names[i].clone(),
        right: names[j].clone(),
        value: vector_to_coeffs(names, &at(i, j)),
    };
    let mut out = Vec::new();
    for i in 0..d {
        for j in i..d {
            let (a, b) = (at(i, j), at(j, i));
            let nonzero = |v: &Vector| v.iter().any(|x| !x.is_zero());
            match mirror {
                Some(m) if i != j => {
                    let follows = a.iter().zip(&b).all(|(x, y)| x.clone().signed(m(i, j)) == *y);
                    if follows {
                        if nonzero(&a) {
                            out.push(entry(i, j));
                        }
                    } else {
                        out.push(entry(i, j));
                        out.push(entry(j, i));
                    }
                }
                _ => {
                    if nonzero(&a) {
                        out.push(entry(i, j));
                    }
                    if i != j && nonzero(&b) {
                        out.push(entry(j, i));
                    }
                }
            }
        }
    }
    out
}

impl LieSchema {
    pub fn to_lie(&self) -> Result<LieAlgebra> {
        unique_names(&self.basis)?;
        let cube = fill_brackets(&self.basis, &self.brackets, Some(&|_, _| -1))?;
        LieAlgebra::new(self.basis.clone(), cube)
    }

    pub fn from_lie(l: &LieAlgebra) -> Self {
        LieSchema {
            basis: l.names().to_vec(),
            brackets: emit_brackets(l.names(), l.constants(), Some(&|_, _| -1)),
        }
    }
}

fn action_matrices(
    algebra: &[String],
    dim: usize,
    action: &BTreeMap<String, Vec<Vec<Rational>>>,
) -> Result<Vec<Matrix>> {
    let mut mats = vec![Matrix::zeros(dim, dim); algebra.len()];
    for (name, rows) in action {
        mats[index(algebra, name)?] = matrix(rows, dim, dim, &format!("action of {name}"))?;
    }
    Ok(mats)
}

fn action_map(algebra: &[String], mats: &[Matrix]) -> BTreeMap<String, Vec<Vec<Rational>>> {
    algebra
        .iter()
        .zip(mats)
        .filter(|(_, m)| !m.is_zero())
        .map(|(n, m)| (n.clone(), m.to_rows()))
        .collect()
}

impl RepSchema {
    pub fn to_rep(&self, lie: &LieAlgebra) -> Result<Representation> {
        match self {
            RepSchema::Keyword(k) if k == "adjoint" => Ok(crate::lie::adjoint(lie)),
            RepSchema::Keyword(k) => Err(Error::Parse(format!("unknown representation keyword {k:?}"))),
            RepSchema::Explicit(e) => {
                unique_names(&e.basis)?;
                let mats = action_matrices(lie.names(), e.basis.len(), &e.action)?;
                Representation::new(e.basis.clone(), mats)
            }
        }
    }

    pub fn from_rep(lie: &LieAlgebra, rep: &Representation) -> Self {
        RepSchema::Explicit(ExplicitRep {
            basis: rep.space_names().to_vec(),
            action: action_map(lie.names(), rep.action()),
        })
    }
}

impl OperatorSchema {
    /// `T: V → g`, a `dim g × dim V` matrix.
    pub fn to_operator(&self, dim_v: usize, dim_g: usize) -> Result<LinearOperator> {
        Ok(LinearOperator::module_to_algebra(matrix(&self.rows, dim_g, dim_v, "operator")?))
    }

    /// `P: g → g`.
    pub fn to_endomorphism(&self, dim: usize) -> Result<LinearOperator> {
        Ok(LinearOperator::endomorphism(matrix(&self.rows, dim, dim, "operator")?))
    }

    pub fn from_operator(op: &LinearOperator) -> Self {
        OperatorSchema {
            rows: op.matrix.to_rows(),
        }
    }
}

impl GradedSpaceSchema {
    pub fn to_space(&self) -> Result<GradedVectorSpace> {
        let names: Vec<String> = self.basis.iter().map(|b| b.name.clone()).collect();
        unique_names(&names)?;
        GradedVectorSpace::new(names, self.basis.iter().map(|b| b.degree).collect())
    }

    pub fn from_space(v: &GradedVectorSpace) -> Self {
        GradedSpaceSchema {
            basis: v
                .names()
                .iter()
                .zip(v.degrees())
                .map(|(n, &d)| GradedBasisEntry {
                    name: n.clone(),
                    degree: d,
                })
                .collect(),
        }
    }
}

fn graded_mirror(space: &GradedVectorSpace) -> impl Fn(usize, usize) -> i32 + '_ {
    move |i, j| parity_sign(i64::from(space.degree(i)) * i64::from(space.degree(j)))
}

impl SglaSchema {
    pub fn to_sgla(&self, space: GradedVectorSpace) -> Result<Sgla> {
        let m = graded_mirror(&space);
        let cube = fill_brackets(space.names(), &self.brackets, Some(&m))?;
        Sgla::new(space.clone(), cube)
    }

    pub fn from_sgla(g: &Sgla) -> Self {
        let m = graded_mirror(g.space());
        SglaSchema {
            space: Some(SpaceRef::Inline(GradedSpaceSchema::from_space(g.space()))),
            brackets: emit_brackets(g.space().names(), g.constants(), Some(&m)),
        }
    }
}

impl GradedRepSchema {
    pub fn to_graded_rep(&self, g: &Sgla, space: Option<GradedVectorSpace>) -> Result<GradedRepresentation> {
        match self {
            GradedRepSchema::Keyword(k) if k == "adjoint" => Ok(crate::graded::graded_adjoint(g)),
            GradedRepSchema::Keyword(k) => Err(Error::Parse(format!("unknown representation keyword {k:?}"))),
            GradedRepSchema::Explicit(e) => {
                let space = space.ok_or_else(|| Error::Unresolved("graded representation space".into()))?;
                let mats = action_matrices(g.space().names(), space.dim(), &e.action)?;
                GradedRepresentation::new(space, mats)
            }
        }
    }

    pub fn from_graded_rep(g: &Sgla, rep: &GradedRepresentation) -> Self {
        GradedRepSchema::Explicit(ExplicitGradedRep {
            space: Some(SpaceRef::Inline(GradedSpaceSchema::from_space(rep.space()))),
            action: action_map(g.space().names(), rep.action()),
        })
    }
}

impl ProductSchema {
    pub fn to_product(&self) -> Result<PreLieProduct> {
        unique_names(&self.basis)?;
        let cube = fill_brackets(&self.basis, &self.products, None)?;
        PreLieProduct::new(self.basis.clone(), cube)
    }

    pub fn from_product(p: &PreLieProduct) -> Self {
        ProductSchema {
            basis: p.names().to_vec(),
            products: emit_brackets(p.names(), p.constants(), None),
        }
    }
}

fn duplicate<T: std::fmt::Debug>(key: &T) -> Error {
    Error::Parse(format!("entry {key:?} listed twice"))
}

impl AltMapSchema {
    /// `Hom(∧^k V, g)`; arguments may come in any order.
    pub fn to_alt(&self, v_names: &[String], g_names: &[String]) -> Result<AltMap> {
        let mut f = AltMap::zero(self.arity, v_names.len(), g_names.len());
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            let mut t = indices(v_names, &e.args)?;
            if t.len() != self.arity {
                return Err(Error::Arity {
                    expected: self.arity,
                    got: t.len(),
                });
            }
            let value = coeffs_to_vector(g_names, &e.value)?;
            let Some(sign) = sort_antisymmetric(&mut t) else {
                if value.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Parse(format!("nonzero value on repeated arguments {:?}", e.args)));
                }
                continue;
            };
            if !seen.insert(t.clone()) {
                return Err(duplicate(&e.args));
            }
            f.set(t, value.into_iter().map(|x| x.signed(sign)).collect())?;
        }
        Ok(f)
    }

    pub fn from_alt(f: &AltMap, v_names: &[String], g_names: &[String]) -> Self {
        AltMapSchema {
            arity: f.arity(),
            entries: f
                .entries()
                .map(|(t, v)| ArgEntry {
                    args: t.iter().map(|&i| v_names[i].clone()).collect(),
                    value: vector_to_coeffs(g_names, v),
                })
                .collect(),
        }
    }
}

impl HookedSchema {
    /// `Hom(∧^n V ⊗ V, V)`; the first `n` arguments may come in any order.
    pub fn to_hooked(&self) -> Result<HookedMap> {
        let names = &self.basis;
        unique_names(names)?;
        let mut h = HookedMap::zero(self.arity, names.len());
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            let mut t = indices(names, &e.args)?;
            if t.len() != self.arity {
                return Err(Error::Arity {
                    expected: self.arity,
                    got: t.len(),
                });
            }
            let last = index(names, &e.last)?;
            let value = coeffs_to_vector(names, &e.value)?;
            let Some(sign) = sort_antisymmetric(&mut t) else {
                if value.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Parse(format!("nonzero value on repeated arguments {:?}", e.args)));
                }
                continue;
            };
            if !seen.insert((t.clone(), last)) {
                return Err(duplicate(&(&e.args, &e.last)));
            }
            h.set(t, last, value.into_iter().map(|x| x.signed(sign)).collect())?;
        }
        Ok(h)
    }

    pub fn from_hooked(h: &HookedMap, names: &[String]) -> Self {
        HookedSchema {
            basis: names.to_vec(),
            arity: h.arity(),
            entries: h
                .entries()
                .map(|((t, last), v)| HookedEntry {
                    args: t.iter().map(|&i| names[i].clone()).collect(),
                    last: names[*last].clone(),
                    value: vector_to_coeffs(names, v),
                })
                .collect(),
        }
    }
}

/// Canonical word and Koszul sign for arguments in any order, `None` when
/// an odd generator repeats.
fn canonical(space: &GradedVectorSpace, args: &[String]) -> Result<Option<(Vec<usize>, i32)>> {
    let mut w = indices(space.names(), args)?;
    Ok(sort_graded(&mut w, space.degrees()).map(|s| (w, s)))
}

impl CochainSchema {
    pub fn to_cochain(&self, domain: &GradedVectorSpace, codomain: &GradedVectorSpace) -> Result<GradedCochain> {
        let mut comps: Vec<GradedSymMap> = (0..=self.truncation)
            .map(|w| GradedSymMap::zero(w, self.degree, domain, codomain))
            .collect();
        let mut seen_weights = BTreeSet::new();
        for c in &self.components {
            if c.weight > self.truncation {
                return Err(Error::Truncation {
                    requested: c.weight,
                    bound: self.truncation,
                });
            }
            if !seen_weights.insert(c.weight) {
                return Err(duplicate(&c.weight));
            }
            let target = &mut comps[c.weight];
            if let Some(v) = &c.value {
                if c.weight != 0 {
                    return Err(Error::Parse(format!("weight {} component needs entries, not a value", c.weight)));
                }
                target.set(vec![], coeffs_to_vector(codomain.names(), v)?)?;
            }
            let mut seen = BTreeSet::new();
            for e in &c.entries {
                if e.args.len() != c.weight {
                    return Err(Error::Arity {
                        expected: c.weight,
                        got: e.args.len(),
                    });
                }
                let value = coeffs_to_vector(codomain.names(), &e.value)?;
                let Some((w, sign)) = canonical(domain, &e.args)? else {
                    if value.iter().any(|x| !x.is_zero()) {
                        return Err(Error::Parse(format!("nonzero value on repeated odd argument {:?}", e.args)));
                    }
                    continue;
                };
                if !seen.insert(w.clone()) {
                    return Err(duplicate(&e.args));
                }
                target.set(w, value.into_iter().map(|x| x.signed(sign)).collect())?;
            }
        }
        GradedCochain::new(comps)
    }

    pub fn from_cochain(f: &GradedCochain) -> Self {
        let (v, g) = (f.domain(), f.codomain());
        let components = f
            .components()
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| {
                if c.weight() == 0 {
                    ComponentSchema {
                        weight: 0,
                        value: Some(vector_to_coeffs(g.names(), &c.eval(&[]).expect("weight 0"))),
                        entries: Vec::new(),
                    }
                } else {
                    ComponentSchema {
                        weight: c.weight(),
                        value: None,
                        entries: c
                            .entries()
                            .map(|(w, x)| ArgEntry {
                                args: w.iter().map(|&i| v.names()[i].clone()).collect(),
                                value: vector_to_coeffs(g.names(), x),
                            })
                            .collect(),
                    }
                }
            })
            .collect();
        CochainSchema {
            degree: f.degree(),
            truncation: f.truncation(),
            components,
        }
    }
}

impl PreLieInfSchema {
    pub fn to_prelie_inf(&self, space: &GradedVectorSpace) -> Result<PreLieInfinity> {
        if self.truncation == 0 {
            return Err(Error::Parse("pre-Lie∞ truncation must be at least 1".into()));
        }
        let mut comps: Vec<GradedHookedMap> = (0..self.truncation)
            .map(|w| GradedHookedMap::zero(w, 1, space))
            .collect();
        let mut seen_k = BTreeSet::new();
        for op in &self.operations {
            if op.k == 0 || op.k > self.truncation {
                return Err(Error::Truncation {
                    requested: op.k,
                    bound: self.truncation,
                });
            }
            if !seen_k.insert(op.k) {
                return Err(duplicate(&op.k));
            }
            let mut seen = BTreeSet::new();
            for e in &op.entries {
                if e.args.len() + 1 != op.k {
                    return Err(Error::Arity {
                        expected: op.k,
                        got: e.args.len() + 1,
                    });
                }
                let last = index(space.names(), &e.last)?;
                let value = coeffs_to_vector(space.names(), &e.value)?;
                let Some((w, sign)) = canonical(space, &e.args)? else {
                    if value.iter().any(|x| !x.is_zero()) {
                        return Err(Error::Parse(format!("nonzero value on repeated odd argument {:?}", e.args)));
                    }
                    continue;
                };
                if !seen.insert((w.clone(), last)) {
                    return Err(duplicate(&(&e.args, &e.last)));
                }
                comps[op.k - 1].set(w, last, value.into_iter().map(|x| x.signed(sign)).collect())?;
            }
        }
        PreLieInfinity::new(GradedHookedCochain::new(comps)?)
    }

    pub fn from_prelie_inf(l: &PreLieInfinity) -> Self {
        let names = l.space().names();
        PreLieInfSchema {
            space: Some(SpaceRef::Inline(GradedSpaceSchema::from_space(l.space()))),
            truncation: l.truncation(),
            operations: l
                .ops()
                .components()
                .iter()
                .filter(|c| !c.is_zero())
                .map(|c| OperationSchema {
                    k: c.weight() + 1,
                    entries: c
                        .entries()
                        .map(|((w, last), x)| HookedEntry {
                            args: w.iter().map(|&i| names[i].clone()).collect(),
                            last: names[*last].clone(),
                            value: vector_to_coeffs(names, x),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}
