//! Ungraded data placed in degree -1, where the graded constructions
//! reduce to the ungraded ones.

use super::prelie_inf::{GradedHookedCochain, GradedHookedMap, PreLieInfinity};
use super::sym::{GradedCochain, GradedSymMap, HomotopyOperator};
use crate::deformation::AltMap;
use crate::error::Result;
use crate::graded::GradedVectorSpace;
use crate::lie::{LieAlgebra, LinearOperator, Representation};
use crate::prelie::{HookedMap, PreLieProduct};

pub fn module_space(rep: &Representation) -> GradedVectorSpace {
    GradedVectorSpace::concentrated(rep.space_names().to_vec(), -1)
}

pub fn algebra_space(lie: &LieAlgebra) -> GradedVectorSpace {
    GradedVectorSpace::concentrated(lie.names().to_vec(), -1)
}

/// A `k`-ary alternating map becomes a weight-`k` symmetric map of degree
/// `k - 1` on odd generators.
pub fn embed_alt(f: &AltMap, lie: &LieAlgebra, rep: &Representation) -> Result<GradedSymMap> {
    let (v, g) = (module_space(rep), algebra_space(lie));
    let mut m = GradedSymMap::zero(f.arity(), f.arity() as i32 - 1, &v, &g);
    for (t, val) in f.entries() {
        m.set(t.clone(), val.clone())?;
    }
    Ok(m)
}

pub fn embed_alt_cochain(f: &AltMap, lie: &LieAlgebra, rep: &Representation) -> Result<GradedCochain> {
    Ok(GradedCochain::single(embed_alt(f, lie, rep)?))
}

/// `T: V → g` as the operator with `T_1 = T` and every other component zero.
pub fn embed_operator(op: &LinearOperator, lie: &LieAlgebra, rep: &Representation) -> Result<HomotopyOperator> {
    HomotopyOperator::new(embed_alt_cochain(&AltMap::from_operator(op), lie, rep)?)
}

/// `Hom(∧^n V ⊗ V, V)` lands in degree `n`.
pub fn embed_hooked(h: &HookedMap, names: &[String]) -> Result<GradedHookedMap> {
    let space = GradedVectorSpace::concentrated(names.to_vec(), -1);
    let mut m = GradedHookedMap::zero(h.arity(), h.arity() as i32, &space);
    for ((t, last), val) in h.entries() {
        m.set(t.clone(), *last, val.clone())?;
    }
    Ok(m)
}

pub fn embed_hooked_cochain(h: &HookedMap, names: &[String]) -> Result<GradedHookedCochain> {
    let m = embed_hooked(h, names)?;
    let space = m.space().clone();
    let mut comps: Vec<GradedHookedMap> = (0..m.weight())
        .map(|w| GradedHookedMap::zero(w, m.degree(), &space))
        .collect();
    comps.push(m);
    GradedHookedCochain::new(comps)
}

/// A pre-Lie product as the single operation `m_2`.
pub fn embed_prelie(p: &PreLieProduct) -> Result<PreLieInfinity> {
    PreLieInfinity::new(embed_hooked_cochain(&p.to_hooked(), p.names())?)
}
