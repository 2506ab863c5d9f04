//! Randomized property checks over the bundled catalog.

use rota_core::catalog;
use rota_core::graded::{from_lie, from_lie_rep};
use rota_core::homotopy::embed::embed_operator;
use rota_core::homotopy::{check_psi_homomorphism, is_homotopy_oop};
use rota_core::lie::{is_o_operator, search_oop};
use rota_core::prelie::{check_phi_homomorphism, check_prelie, induce_prelie};
use rota_core::{random, DeformationComplex, Rational, Report, Result, Witness};

use crate::Global;

fn outcome(check: &str, failure: Option<String>, order: usize) -> Report {
    let w = failure.map(|at| Witness {
        args: vec![at],
        residual: Vec::new(),
    });
    Report::from_witness(check, w).with_order(order)
}

pub fn run(g: &Global, samples: usize) -> Result<Vec<Report>> {
    let mut rng = random::rng(g.seed);
    let pairs = catalog::small_pairs();
    let grid: Vec<Rational> = (-1..=1).map(Rational::from_int).collect();
    let mut reports = Vec::new();

    let mut mc = None;
    let mut phi_hom = None;
    let mut embedded = None;
    for i in 0..samples {
        let (name, lie, rep) = &pairs[i % pairs.len()];
        let cx = DeformationComplex::new(lie, rep)?.with_max_arity(g.arity_max);
        let op = random::operator(&mut rng, rep.space_dim(), lie.dim());
        let t = rota_core::AltMap::from_operator(&op);
        let is_oop = is_o_operator(lie, rep, &op)?;
        if mc.is_none() && cx.is_maurer_cartan(&t)? != is_oop {
            mc = Some(format!("{name} sample {i}"));
        }
        let (dv, dg) = (rep.space_dim(), lie.dim());
        let f = random::alt_map(&mut rng, 1 + i % 2, dv, dg);
        let h = random::alt_map(&mut rng, 1, dv, dg);
        if phi_hom.is_none() && !check_phi_homomorphism(&cx, &f, &h)? {
            phi_hom = Some(format!("{name} sample {i}"));
        }
        let th = embed_operator(&op, lie, rep)?;
        let p = g.p_max.min(2);
        if embedded.is_none() && is_homotopy_oop(&th, &from_lie(lie), &from_lie_rep(rep), p)? != is_oop {
            embedded = Some(format!("{name} sample {i}"));
        }
    }
    reports.push(outcome("maurer-cartan-iff-o-operator", mc, 2));
    reports.push(outcome("phi-homomorphism", phi_hom, 4));
    reports.push(outcome("embedded-homotopy-o-operator", embedded, g.p_max.min(2)));

    let mut prelie = None;
    for (name, lie, rep) in pairs.iter().filter(|(_, l, r)| l.dim() * r.space_dim() <= 6) {
        for (k, op) in search_oop(lie, rep, &grid, rota_core::lie::DEFAULT_SEARCH_CAP, g.parallel)?
            .iter()
            .enumerate()
        {
            if prelie.is_none() && !check_prelie(&induce_prelie(lie, rep, op)?).pass {
                prelie = Some(format!("{name} operator {k}"));
            }
        }
    }
    reports.push(outcome("induced-pre-lie", prelie, 3));

    let mut psi_hom = None;
    let graded = catalog::graded_pairs();
    let p = g.p_max.min(3);
    for i in 0..samples {
        let (name, sg, rep) = &graded[i % graded.len()];
        let f = random::cochain(&mut rng, (i % 2) as i32, 1, rep.space(), sg.space());
        let h = random::cochain(&mut rng, 0, 1, rep.space(), sg.space());
        if !check_psi_homomorphism(&f, &h, sg, rep, p)? {
            psi_hom = Some(format!("{name} sample {i}"));
            break;
        }
    }
    reports.push(outcome("psi-homomorphism", psi_hom, p));
    Ok(reports)
}
