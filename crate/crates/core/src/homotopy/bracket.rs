//! The graded bracket on `Hom(S(V), g)`, homotopy O-operator identities and
//! their Maurer-Cartan characterization.

use rayon::prelude::*;

use super::sym::{canonical_words, word_degree, GradedCochain, GradedSymMap, HomotopyOperator};
use crate::error::{Error, Result};
use crate::graded::{graded_adjoint, GradedRepresentation, Sgla};
use crate::linalg::{add_signed, is_zero_vec, scale, zero_vec, Vector};
use crate::perm::{koszul_sign_of_arrangement, parity_sign, unshuffles, Permutation};
use crate::report::{Report, Witness};
use crate::scalar::Rational;

pub const DEFAULT_P_MAX: usize = 4;

/// Largest weight any truncated computation will run to.
pub const MAX_WEIGHT: usize = 8;

fn check_order(p_max: usize) -> Result<()> {
    if p_max > MAX_WEIGHT {
        return Err(Error::Truncation {
            requested: p_max,
            bound: MAX_WEIGHT,
        });
    }
    Ok(())
}

fn check_spaces(f: &GradedCochain, g: &Sgla, rep: &GradedRepresentation) -> Result<()> {
    rep.check_against(g)?;
    if f.domain() != rep.space() || f.codomain() != g.space() {
        return Err(Error::Dimension("cochain does not live on Hom(S(V), g)".into()));
    }
    Ok(())
}

fn pick(word: &[usize], sigma: &Permutation, range: std::ops::Range<usize>) -> Vec<usize> {
    range.map(|i| word[sigma.apply(i)]).collect()
}

fn component<'a>(f: &'a GradedCochain, w: usize) -> Option<&'a GradedSymMap> {
    f.component(w).filter(|c| !c.is_zero())
}

/// `ρ(x)v` with `x ∈ g`, `v` a basis vector of `V`.
fn act(rep: &GradedRepresentation, x: &[Rational], v: usize) -> Vector {
    rep.act_on_basis(x, v)
}

/// Weight-`p` component of `⟦f,g⟧` for `f` of degree `m`, `g` of degree `n`:
///
/// ```text
/// ⟦f,g⟧_p(v_1..v_p) =
///   - Σ_{k+l=p+1} Σ_{σ∈S(l,1,p-l-1)} ε(σ) f_{k-1}(ρ(g_l(v_σ1..v_σl)) v_σ(l+1), v_σ(l+2)..v_σp)
///   + (-1)^{(m+1)(n+1)} Σ_{k+l=p+1} Σ_{σ∈S(k-1,1,p-k)} ε(σ) g_l(ρ(f_{k-1}(v_σ1..v_σ(k-1))) v_σk, v_σ(k+1)..v_σp)
///   - Σ_{k+l=p+1} Σ_{σ∈S(k-1,l)} (-1)^{n(v_σ1+..+v_σ(k-1))+m+1} ε(σ) [f_{k-1}(v_σ1..v_σ(k-1)), g_l(v_σk..v_σp)]
/// ```
///
/// The middle sum is indexed by `k+l = p+1` like the other two.
fn bracket_at(
    f: &GradedCochain,
    h: &GradedCochain,
    g: &Sgla,
    rep: &GradedRepresentation,
    word: &[usize],
    perms: &[(Vec<Permutation>, Vec<Permutation>)],
) -> Vector {
    let p = word.len();
    let (m, n) = (i64::from(f.degree()), i64::from(h.degree()));
    let vdeg = rep.space().degrees();
    let gdeg: Vec<i32> = word.iter().map(|&i| vdeg[i]).collect();
    let mut acc = zero_vec(g.dim());
    let s2 = parity_sign((m + 1) * (n + 1));
    for l in 0..p {
        // first sum: inner h_l, outer f_{p-l}; second sum: inner f_l, outer h_{p-l}
        let (ins, _) = &perms[l];
        for (inner, outer, sign) in [(h, f, -1), (f, h, s2)] {
            let (Some(gi), Some(go)) = (component(inner, l), component(outer, p - l)) else {
                continue;
            };
            for sigma in ins {
                let x = gi.eval_basis(&pick(word, sigma, 0..l));
                if is_zero_vec(&x) {
                    continue;
                }
                let w = act(rep, &x, word[sigma.apply(l)]);
                let val = go.eval_vector_first(&w, &pick(word, sigma, l + 1..p));
                let eps = koszul_sign_of_arrangement(sigma.images(), &gdeg);
                add_signed(&mut acc, sign * eps, &val);
            }
        }
    }
    for a in 0..=p {
        let (Some(fa), Some(hb)) = (component(f, a), component(h, p - a)) else {
            continue;
        };
        let (_, shuffles) = &perms[a];
        for sigma in shuffles {
            let first = pick(word, sigma, 0..a);
            let x = fa.eval_basis(&first);
            if is_zero_vec(&x) {
                continue;
            }
            let y = hb.eval_basis(&pick(word, sigma, a..p));
            if is_zero_vec(&y) {
                continue;
            }
            let big_a = i64::from(word_degree(&first, vdeg));
            let eps = koszul_sign_of_arrangement(sigma.images(), &gdeg);
            let sign = -parity_sign(n * big_a + m + 1) * eps;
            add_signed(&mut acc, sign, &g.bracket(&x, &y));
        }
    }
    acc
}

/// Unshuffle sets for one output weight, indexed by the split point.
fn bracket_perms(p: usize) -> Vec<(Vec<Permutation>, Vec<Permutation>)> {
    (0..=p)
        .map(|a| {
            let three = if a < p { unshuffles(&[a, 1, p - a - 1]) } else { Vec::new() };
            (three, unshuffles(&[a, p - a]))
        })
        .collect()
}

/// `⟦f,g⟧` through weight `p_max`, a cochain of degree `m + n + 1`.
pub fn graded_bracket(
    f: &GradedCochain,
    h: &GradedCochain,
    g: &Sgla,
    rep: &GradedRepresentation,
    p_max: usize,
) -> Result<GradedCochain> {
    check_order(p_max)?;
    check_spaces(f, g, rep)?;
    check_spaces(h, g, rep)?;
    let degree = f.degree() + h.degree() + 1;
    let comps = (0..=p_max)
        .map(|p| {
            let perms = bracket_perms(p);
            GradedSymMap::from_fn(p, degree, rep.space(), g.space(), |word| bracket_at(f, h, g, rep, word, &perms))
        })
        .collect::<Result<Vec<_>>>()?;
    GradedCochain::new(comps)
}

/// Left-hand side of the generalized identity at weight `p`:
/// `Σ_{k+l=p+1} Σ_{σ∈S(l,1,p-l-1)} ε(σ) T_{k-1}(ρ(T_l(v_σ1..v_σl)) v_σ(l+1), v_σ(l+2)..v_σp)`.
fn rb_lhs(t: &HomotopyOperator, rep: &GradedRepresentation, dim_g: usize, word: &[usize]) -> Vector {
    let p = word.len();
    let vdeg = rep.space().degrees();
    let gdeg: Vec<i32> = word.iter().map(|&i| vdeg[i]).collect();
    let mut acc = zero_vec(dim_g);
    for l in 0..p {
        let (Some(tl), Some(tk)) = (component(t.cochain(), l), component(t.cochain(), p - l)) else {
            continue;
        };
        for sigma in unshuffles(&[l, 1, p - l - 1]) {
            let x = tl.eval_basis(&pick(word, &sigma, 0..l));
            if is_zero_vec(&x) {
                continue;
            }
            let w = act(rep, &x, word[sigma.apply(l)]);
            let val = tk.eval_vector_first(&w, &pick(word, &sigma, l + 1..p));
            add_signed(&mut acc, koszul_sign_of_arrangement(sigma.images(), &gdeg), &val);
        }
    }
    acc
}

/// Right-hand side at weight `p`:
/// `½ Σ_{k+l=p+1} Σ_{σ∈S(k-1,l)} ε(σ) [T_{k-1}(v_σ1..v_σ(k-1)), T_l(v_σk..v_σp)]`.
fn rb_rhs(t: &HomotopyOperator, g: &Sgla, rep: &GradedRepresentation, word: &[usize]) -> Vector {
    let p = word.len();
    let vdeg = rep.space().degrees();
    let gdeg: Vec<i32> = word.iter().map(|&i| vdeg[i]).collect();
    let mut acc = zero_vec(g.dim());
    for a in 0..=p {
        let (Some(ta), Some(tb)) = (component(t.cochain(), a), component(t.cochain(), p - a)) else {
            continue;
        };
        for sigma in unshuffles(&[a, p - a]) {
            let x = ta.eval_basis(&pick(word, &sigma, 0..a));
            let y = tb.eval_basis(&pick(word, &sigma, a..p));
            add_signed(&mut acc, koszul_sign_of_arrangement(sigma.images(), &gdeg), &g.bracket(&x, &y));
        }
    }
    scale(&acc, &Rational::half())
}

fn check_operator(t: &HomotopyOperator, g: &Sgla, rep: &GradedRepresentation) -> Result<()> {
    check_spaces(t.cochain(), g, rep)
}

/// Residual `RHS - LHS` of the generalized Rota-Baxter identity for every
/// weight `0..=p_max`, evaluated directly from the identity.
pub fn homotopy_oop_residual(
    t: &HomotopyOperator,
    g: &Sgla,
    rep: &GradedRepresentation,
    p_max: usize,
) -> Result<Vec<GradedSymMap>> {
    check_order(p_max)?;
    check_operator(t, g, rep)?;
    (0..=p_max)
        .map(|p| {
            GradedSymMap::from_fn(p, 1, rep.space(), g.space(), |word| {
                let mut r = rb_rhs(t, g, rep, word);
                add_signed(&mut r, -1, &rb_lhs(t, rep, g.dim(), word));
                r
            })
        })
        .collect()
}

fn word_names(rep: &GradedRepresentation, word: &[usize]) -> Vec<String> {
    word.iter().map(|&i| rep.space().names()[i].clone()).collect()
}

/// First nonzero residual entry, if any.
fn first_failure(maps: &[GradedSymMap], rep: &GradedRepresentation, g: &Sgla) -> Option<(usize, Witness)> {
    maps.iter().find_map(|m| {
        m.entries().next().map(|(w, v)| {
            (m.weight(), Witness::new(word_names(rep, w), g.space().names(), v))
        })
    })
}

pub fn check_homotopy_oop(
    t: &HomotopyOperator,
    g: &Sgla,
    rep: &GradedRepresentation,
    p_max: usize,
) -> Result<Report> {
    let res = homotopy_oop_residual(t, g, rep, p_max)?;
    let w = first_failure(&res, rep, g).map(|(_, w)| w);
    Ok(Report::from_witness("homotopy-o-operator", w).with_order(p_max))
}

pub fn is_homotopy_oop(t: &HomotopyOperator, g: &Sgla, rep: &GradedRepresentation, p_max: usize) -> Result<bool> {
    Ok(homotopy_oop_residual(t, g, rep, p_max)?.iter().all(GradedSymMap::is_zero))
}

/// Homotopy O-operator for the graded adjoint representation.
pub fn is_homotopy_rbo(t: &HomotopyOperator, g: &Sgla, p_max: usize) -> Result<bool> {
    is_homotopy_oop(t, g, &graded_adjoint(g), p_max)
}

pub fn check_homotopy_rbo(t: &HomotopyOperator, g: &Sgla, p_max: usize) -> Result<Report> {
    let mut r = check_homotopy_oop(t, g, &graded_adjoint(g), p_max)?;
    r.check = "homotopy-rota-baxter".into();
    Ok(r)
}

/// `½⟦T,T⟧` through weight `p_max`.
pub fn mc_residual_homotopy(
    t: &HomotopyOperator,
    g: &Sgla,
    rep: &GradedRepresentation,
    p_max: usize,
) -> Result<GradedCochain> {
    Ok(graded_bracket(t.cochain(), t.cochain(), g, rep, p_max)?.scaled(&Rational::half()))
}

/// Whether `T` is Maurer-Cartan through weight `p_max`.
pub fn mc_check_homotopy(t: &HomotopyOperator, g: &Sgla, rep: &GradedRepresentation, p_max: usize) -> Result<bool> {
    Ok(mc_residual_homotopy(t, g, rep, p_max)?.is_zero())
}

/// The identities for `p = 0, 1, 2`, written out by hand and returned as
/// residuals in the same `RHS - LHS` normalization:
///
/// ```text
/// p=0: ½[Ω,Ω]
/// p=1: [Ω,T_1 v] - T_1(ρ(Ω)v)
/// p=2: [T_1 v1,T_1 v2] - T_1(ρ(T_1 v1)v2 + (-1)^{v1 v2} ρ(T_1 v2)v1)
///      - T_2(ρ(Ω)v1, v2) - (-1)^{v1 v2} T_2(ρ(Ω)v2, v1) + [Ω, T_2(v1,v2)]
/// ```
pub fn expand_low_identities(
    t: &HomotopyOperator,
    g: &Sgla,
    rep: &GradedRepresentation,
) -> Result<[GradedSymMap; 3]> {
    if t.truncation() < 2 {
        return Err(Error::Truncation {
            requested: 2,
            bound: t.truncation(),
        });
    }
    check_operator(t, g, rep)?;
    let (t1, t2) = (t.component(1).expect("N ≥ 2"), t.component(2).expect("N ≥ 2"));
    let omega = t.omega();
    let vdeg = rep.space().degrees();
    let (v, gs) = (rep.space(), g.space());

    let p0 = GradedSymMap::from_fn(0, 1, v, gs, |_| scale(&g.bracket(&omega, &omega), &Rational::half()))?;
    let p1 = GradedSymMap::from_fn(1, 1, v, gs, |w| {
        let mut r = g.bracket(&omega, &t1.eval_basis(w));
        add_signed(&mut r, -1, &t1.eval_vector_first(&act(rep, &omega, w[0]), &[]));
        r
    })?;
    let p2 = GradedSymMap::from_fn(2, 1, v, gs, |w| {
        let (v1, v2) = (w[0], w[1]);
        let s = parity_sign(i64::from(vdeg[v1]) * i64::from(vdeg[v2]));
        let (a, b) = (t1.eval_basis(&[v1]), t1.eval_basis(&[v2]));
        let mut r = g.bracket(&a, &b);
        add_signed(&mut r, -1, &t1.eval_vector_first(&act(rep, &a, v2), &[]));
        add_signed(&mut r, -s, &t1.eval_vector_first(&act(rep, &b, v1), &[]));
        add_signed(&mut r, -1, &t2.eval_vector_first(&act(rep, &omega, v1), &[v2]));
        add_signed(&mut r, -s, &t2.eval_vector_first(&act(rep, &omega, v2), &[v1]));
        add_signed(&mut r, 1, &g.bracket(&omega, &t2.eval_basis(w)));
        r
    })?;
    Ok([p0, p1, p2])
}

/// All homotopy O-operators with components up to weight `truncation`
/// whose free coefficients are drawn from `grid`, verified through `p_max`.
///
/// Free coefficients are the `(canonical word, g-basis element)` pairs of
/// matching degree, enumerated by weight, then word, then basis index.
#[allow(clippy::too_many_arguments)]
pub fn search_homotopy_oop(
    g: &Sgla,
    rep: &GradedRepresentation,
    truncation: usize,
    grid: &[Rational],
    cap: u128,
    p_max: usize,
    parallel: bool,
) -> Result<Vec<HomotopyOperator>> {
    check_order(p_max)?;
    rep.check_against(g)?;
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let vdeg = rep.space().degrees();
    let mut slots: Vec<(usize, Vec<usize>, usize)> = Vec::new();
    for w in 0..=truncation {
        for word in canonical_words(vdeg, w) {
            let d = word_degree(&word, vdeg);
            for k in 0..g.dim() {
                if g.space().degree(k) == d {
                    slots.push((w, word.clone(), k));
                }
            }
        }
    }
    let size = (grid.len() as u128)
        .checked_pow(slots.len() as u32)
        .ok_or(Error::SearchTooLarge { size: u128::MAX, cap })?;
    if size > cap {
        return Err(Error::SearchTooLarge { size, cap });
    }
    let build = |mut idx: u128| -> Result<HomotopyOperator> {
        let mut c = GradedCochain::zero(0, truncation, rep.space(), g.space());
        let mut comps: Vec<GradedSymMap> = c.components().to_vec();
        for (w, word, k) in slots.iter().rev() {
            let x = &grid[(idx % grid.len() as u128) as usize];
            idx /= grid.len() as u128;
            if x.is_zero() {
                continue;
            }
            let mut cur = comps[*w].eval_basis(word);
            cur[*k] = x.clone();
            comps[*w].set(word.clone(), cur)?;
        }
        c = GradedCochain::new(comps)?;
        HomotopyOperator::new(c)
    };
    let test = |i: u128| -> Result<Option<HomotopyOperator>> {
        let t = build(i)?;
        Ok(is_homotopy_oop(&t, g, rep, p_max)?.then_some(t))
    };
    let found: Vec<Option<HomotopyOperator>> = if parallel {
        (0..size as u64).into_par_iter().map(|i| test(i as u128)).collect::<Result<_>>()?
    } else {
        (0..size).map(test).collect::<Result<_>>()?
    };
    Ok(found.into_iter().flatten().collect())
}
