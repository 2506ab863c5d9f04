use std::fs;
use std::io::Write;

use rota_core::deformation::AltMap;
use rota_core::graded::{check_graded_rep, check_sdgla, check_sgla, from_lie, from_lie_rep, graded_adjoint};
use rota_core::homotopy::{
    check_homotopy_oop, check_homotopy_rbo, check_prelie_infinity, complete_order, gm_bracket, graded_bracket,
    induce_prelie_infinity, mc_residual_homotopy, psi, GradedCochain, GradedHookedCochain, HomotopyOperator,
};
use rota_core::io::*;
use rota_core::lie::{adjoint, check_lie, check_representation, oop_defect, search_rbo};
use rota_core::prelie::{check_prelie, induce_prelie, mn_bracket, phi, HookedMap};
use rota_core::{
    DeformationComplex, Error, GradedRepresentation, LieAlgebra, LinearOperator, Rational, Report, Representation,
    Result, Sgla, Witness,
};

use crate::inputs::Inputs;
use crate::{suite, Cli, Command, Global, Refs};

/// Reports plus an optional produced document.
pub struct Outcome {
    pub reports: Vec<Report>,
    pub doc: Option<Workspace>,
}

impl Outcome {
    fn reports(reports: Vec<Report>) -> Self {
        Outcome { reports, doc: None }
    }

    fn doc(reports: Vec<Report>, doc: Workspace) -> Self {
        Outcome { reports, doc: Some(doc) }
    }
}

pub fn run(cli: &Cli) -> Result<bool> {
    let out = match &cli.command {
        Command::Suite { samples } => Outcome::reports(suite::run(&cli.global, *samples)?),
        cmd => {
            let inputs = Inputs::load(&cli.global.inputs, references(cmd))?;
            dispatch(cmd, &cli.global, &inputs)?
        }
    };
    emit(&cli.global, &out)?;
    Ok(out.reports.iter().all(|r| r.pass))
}

fn emit(g: &Global, out: &Outcome) -> Result<()> {
    let io_err = |e: std::io::Error| Error::Parse(format!("writing output: {e}"));
    let report_text = if g.json_report {
        serde_json::to_string_pretty(&out.reports).expect("reports serialize") + "\n"
    } else {
        out.reports.iter().map(|r| format!("{r}\n")).collect()
    };
    match (&out.doc, &g.out) {
        (Some(doc), Some(path)) => {
            fs::write(path, doc.to_json() + "\n").map_err(io_err)?;
            print!("{report_text}");
        }
        (Some(doc), None) => {
            eprint!("{report_text}");
            println!("{}", doc.to_json());
        }
        (None, _) => print!("{report_text}"),
    }
    std::io::stdout().flush().map_err(io_err)
}

fn references(cmd: &Command) -> Vec<&str> {
    let mut out: Vec<&Option<String>> = Vec::new();
    match cmd {
        Command::CheckLie(r)
        | Command::CheckRep(r)
        | Command::CheckRbo(r)
        | Command::CheckOop(r)
        | Command::McCheck(r)
        | Command::InducePrelie(r)
        | Command::CheckSgla(r)
        | Command::CheckGradedRep(r)
        | Command::FromLie(r)
        | Command::CheckHoop(r)
        | Command::CheckHrbo(r)
        | Command::McCheckHomotopy(r)
        | Command::InducePrelieInf { refs: r, .. }
        | Command::SearchRbo { refs: r, .. } => out.extend([&r.algebra, &r.rep, &r.op, &r.sgla]),
        Command::Bracket(p) | Command::CheckPhiHom(p) | Command::GradedBracket(p) | Command::CheckPsiHom(p) => {
            out.extend([&p.refs.algebra, &p.refs.rep, &p.refs.op, &p.refs.sgla, &p.left, &p.right])
        }
        Command::Deform { refs, base, delta } => {
            out.extend([&refs.algebra, &refs.rep, &refs.op, &refs.sgla, base, delta])
        }
        Command::CheckPrelie { product } => out.push(product),
        Command::MnBracket { left, right } => out.extend([left, right]),
        Command::Phi { refs, map } => out.extend([&refs.algebra, &refs.rep, &refs.op, &refs.sgla, map]),
        Command::CheckSdgla { refs, differential } => {
            out.extend([&refs.algebra, &refs.rep, &refs.op, &refs.sgla, differential])
        }
        Command::CheckPrelieInf { prelie_inf } => out.push(prelie_inf),
        Command::Suite { .. } => {}
    }
    out.into_iter()
        .filter_map(|r| r.as_deref())
        .filter(|r| *r != "adjoint")
        .collect()
}

/// Typed lookups over the loaded inputs.
struct Resolver<'a> {
    inputs: &'a Inputs,
}

impl Resolver<'_> {
    fn locate(&self, kind: Kind, r: Option<&String>) -> Result<(&Workspace, String)> {
        self.inputs.locate(kind, r.map(String::as_str))
    }

    fn lie(&self, r: &Refs) -> Result<LieAlgebra> {
        let (ws, n) = self.locate(Kind::LieAlgebra, r.algebra.as_ref())?;
        ws.lie(Some(&n))
    }

    /// `adjoint`, or the adjoint action when no representation is loaded.
    fn rep(&self, r: &Refs, lie: &LieAlgebra) -> Result<Representation> {
        let adjoint_requested = match r.rep.as_deref() {
            Some("adjoint") => self.locate(Kind::Representation, r.rep.as_ref()).is_err(),
            Some(_) => false,
            None => !self.inputs.has(Kind::Representation),
        };
        if adjoint_requested {
            return Ok(adjoint(lie));
        }
        let (ws, n) = self.locate(Kind::Representation, r.rep.as_ref())?;
        ws.representation(Some(&n), lie)
    }

    fn operator(&self, r: Option<&String>, dim_v: usize, dim_g: usize) -> Result<LinearOperator> {
        let (ws, n) = self.locate(Kind::Operator, r)?;
        ws.operator(Some(&n), dim_v, dim_g)
    }

    fn endomorphism(&self, r: Option<&String>, dim: usize) -> Result<LinearOperator> {
        let (ws, n) = self.locate(Kind::Operator, r)?;
        ws.endomorphism(Some(&n), dim)
    }

    fn alt_map(&self, r: Option<&String>, lie: &LieAlgebra, rep: &Representation) -> Result<AltMap> {
        let (ws, n) = self.locate(Kind::AltMap, r)?;
        ws.alt_map(Some(&n), rep.space_names(), lie.names())
    }

    fn hooked_map(&self, r: Option<&String>) -> Result<(HookedMap, Vec<String>)> {
        let (ws, n) = self.locate(Kind::HookedMap, r)?;
        ws.hooked_map(Some(&n))
    }

    fn sgla(&self, r: &Refs) -> Result<Sgla> {
        let (ws, n) = self.locate(Kind::Sgla, r.sgla.as_ref())?;
        ws.sgla(Some(&n))
    }

    /// `adjoint`, or the graded adjoint when no graded representation is loaded.
    fn graded_rep(&self, r: &Refs, g: &Sgla) -> Result<GradedRepresentation> {
        let adjoint_requested = match r.rep.as_deref() {
            Some("adjoint") => self.locate(Kind::GradedRep, r.rep.as_ref()).is_err(),
            Some(_) => false,
            None => !self.inputs.has(Kind::GradedRep),
        };
        if adjoint_requested {
            return Ok(graded_adjoint(g));
        }
        let (ws, n) = self.locate(Kind::GradedRep, r.rep.as_ref())?;
        ws.graded_rep(Some(&n), g)
    }

    fn homotopy_operator(&self, r: &Refs, g: &Sgla, rep: &GradedRepresentation) -> Result<HomotopyOperator> {
        let (ws, n) = self.locate(Kind::HomotopyOperator, r.op.as_ref())?;
        ws.homotopy_operator(Some(&n), rep.space(), g.space())
    }

    fn cochain(&self, r: Option<&String>, g: &Sgla, rep: &GradedRepresentation) -> Result<GradedCochain> {
        let (ws, n) = self.locate(Kind::Cochain, r)?;
        ws.cochain(Some(&n), rep.space(), g.space())
    }
}

fn names(ix: &[usize], basis: &[String]) -> Vec<String> {
    ix.iter().map(|&i| basis[i].clone()).collect()
}

fn alt_witness(f: &AltMap, v: &[String], g: &[String]) -> Option<Witness> {
    f.entries().next().map(|(t, x)| Witness::new(names(t, v), g, x))
}

fn hooked_witness(h: &HookedMap, basis: &[String]) -> Option<Witness> {
    h.entries().next().map(|((t, last), x)| {
        let mut args = names(t, basis);
        args.push(basis[*last].clone());
        Witness::new(args, basis, x)
    })
}

fn cochain_witness(f: &GradedCochain) -> Option<Witness> {
    let (v, g) = (f.domain().names(), f.codomain().names());
    f.components()
        .iter()
        .find_map(|c| c.entries().next().map(|(w, x)| Witness::new(names(w, v), g, x)))
}

fn hooked_cochain_witness(f: &GradedHookedCochain) -> Option<Witness> {
    let basis = f.space().names();
    f.components().iter().find_map(|c| {
        c.entries().next().map(|((w, last), x)| {
            let mut args = names(w, basis);
            args.push(basis[*last].clone());
            Witness::new(args, basis, x)
        })
    })
}

fn single(kind_entity: Entity) -> Result<Workspace> {
    let mut ws = Workspace::new();
    let name = kind_entity.kind().key();
    ws.insert(name, kind_entity)?;
    Ok(ws)
}

fn parse_grid(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<Rational>()
                .map_err(|_| Error::Parse(format!("grid value {x:?} is not a rational")))
        })
        .collect()
}

fn dispatch(cmd: &Command, g: &Global, inputs: &Inputs) -> Result<Outcome> {
    let r = Resolver { inputs };
    let p_max = g.p_max;
    Ok(match cmd {
        Command::CheckLie(refs) => {
            let lie = r.lie(refs)?;
            Outcome::reports(check_lie(&lie).into_iter().map(|x| x.with_order(3)).collect())
        }
        Command::CheckRep(refs) => {
            let lie = r.lie(refs)?;
            let rep = r.rep(refs, &lie)?;
            Outcome::reports(vec![check_representation(&lie, &rep)?.with_order(2)])
        }
        Command::CheckRbo(refs) => {
            let lie = r.lie(refs)?;
            let op = r.endomorphism(refs.op.as_ref(), lie.dim())?;
            let d = oop_defect(&lie, &adjoint(&lie), &op)?;
            let w = alt_witness(&d, lie.names(), lie.names());
            Outcome::reports(vec![Report::from_witness("rota-baxter", w).with_order(2)])
        }
        Command::CheckOop(refs) => {
            let lie = r.lie(refs)?;
            let rep = r.rep(refs, &lie)?;
            let op = r.operator(refs.op.as_ref(), rep.space_dim(), lie.dim())?;
            let d = oop_defect(&lie, &rep, &op)?;
            let w = alt_witness(&d, rep.space_names(), lie.names());
            Outcome::reports(vec![Report::from_witness("o-operator", w).with_order(2)])
        }
        Command::Bracket(p) => {
            let lie = r.lie(&p.refs)?;
            let rep = r.rep(&p.refs, &lie)?;
            let cx = DeformationComplex::new(&lie, &rep)?.with_max_arity(g.arity_max);
            let f = r.alt_map(p.left.as_ref(), &lie, &rep)?;
            let h = r.alt_map(p.right.as_ref(), &lie, &rep)?;
            let b = cx.bracket(&f, &h)?;
            let doc = single(Entity::AltMap(AltMapSchema::from_alt(&b, rep.space_names(), lie.names())))?;
            Outcome::doc(Vec::new(), doc)
        }
        Command::McCheck(refs) => {
            let lie = r.lie(refs)?;
            let rep = r.rep(refs, &lie)?;
            let op = r.operator(refs.op.as_ref(), rep.space_dim(), lie.dim())?;
            let cx = DeformationComplex::new(&lie, &rep)?.with_max_arity(g.arity_max);
            let res = cx.mc_residual(&AltMap::from_operator(&op))?;
            let w = alt_witness(&res, rep.space_names(), lie.names());
            Outcome::reports(vec![Report::from_witness("maurer-cartan", w).with_order(2)])
        }
        Command::Deform { refs, base, delta } => {
            let lie = r.lie(refs)?;
            let rep = r.rep(refs, &lie)?;
            let (dv, dg) = (rep.space_dim(), lie.dim());
            let t = r.operator(base.as_ref().or(refs.op.as_ref()), dv, dg)?;
            let tp = r.operator(delta.as_ref(), dv, dg)?;
            let cx = DeformationComplex::new(&lie, &rep)?.with_max_arity(g.arity_max);
            let (t, tp) = (AltMap::from_operator(&t), AltMap::from_operator(&tp));
            let res = cx
                .d_t(&t, &tp, false)?
                .add(&cx.bracket(&tp, &tp)?.scaled(&Rational::half()))?;
            let w = alt_witness(&res, rep.space_names(), lie.names());
            Outcome::reports(vec![Report::from_witness("deformation", w).with_order(2)])
        }
        Command::InducePrelie(refs) => {
            let lie = r.lie(refs)?;
            let rep = r.rep(refs, &lie)?;
            let op = r.operator(refs.op.as_ref(), rep.space_dim(), lie.dim())?;
            let prod = induce_prelie(&lie, &rep, &op)?;
            let doc = single(Entity::Product(ProductSchema::from_product(&prod)))?;
            Outcome::doc(vec![Report::pass("o-operator").with_order(2)], doc)
        }
        Command::CheckPrelie { product } => {
            let (ws, n) = r.locate(Kind::Product, product.as_ref())?;
            let prod = ws.product(Some(&n))?;
            Outcome::reports(vec![check_prelie(&prod).with_order(3)])
        }
        Command::MnBracket { left, right } => {
            let (a, na) = r.hooked_map(left.as_ref())?;
            let (b, nb) = r.hooked_map(right.as_ref())?;
            if na != nb {
                return Err(Error::Dimension("hooked maps live on different bases".into()));
            }
            let c = mn_bracket(&a, &b)?;
            Outcome::doc(Vec::new(), single(Entity::HookedMap(HookedSchema::from_hooked(&c, &na)))?)
        }
        Command::Phi { refs, map } => {
            let lie = r.lie(refs)?;
            let rep = r.rep(refs, &lie)?;
            let f = r.alt_map(map.as_ref(), &lie, &rep)?;
            let h = phi(&f, &rep)?;
            let doc = single(Entity::HookedMap(HookedSchema::from_hooked(&h, rep.space_names())))?;
            Outcome::doc(Vec::new(), doc)
        }
        Command::CheckPhiHom(p) => {
            let lie = r.lie(&p.refs)?;
            let rep = r.rep(&p.refs, &lie)?;
            let cx = DeformationComplex::new(&lie, &rep)?.with_max_arity(g.arity_max);
            let f = r.alt_map(p.left.as_ref(), &lie, &rep)?;
            let h = r.alt_map(p.right.as_ref(), &lie, &rep)?;
            let lhs = phi(&cx.bracket(&f, &h)?, &rep)?;
            let rhs = mn_bracket(&phi(&f, &rep)?, &phi(&h, &rep)?)?;
            let w = hooked_witness(&lhs.sub(&rhs)?, rep.space_names());
            let order = f.arity() + h.arity() + 1;
            Outcome::reports(vec![Report::from_witness("phi-homomorphism", w).with_order(order)])
        }
        Command::SearchRbo { refs, grid, cap } => {
            let lie = r.lie(refs)?;
            let found = search_rbo(&lie, &parse_grid(grid)?, *cap, g.parallel)?;
            let mut doc = Workspace::new();
            for (i, op) in found.iter().enumerate() {
                doc.insert(&format!("P{}", i + 1), Entity::Operator(OperatorSchema::from_operator(op)))?;
            }
            doc.insert("lie_algebra", Entity::LieAlgebra(LieSchema::from_lie(&lie)))?;
            eprintln!("found {} Rota-Baxter operators", found.len());
            Outcome::doc(Vec::new(), doc)
        }
        Command::CheckSgla(refs) => {
            let sg = r.sgla(refs)?;
            Outcome::reports(check_sgla(&sg).into_iter().map(|x| x.with_order(3)).collect())
        }
        Command::CheckSdgla { refs, differential } => {
            let sg = r.sgla(refs)?;
            let d = r.endomorphism(differential.as_ref(), sg.dim())?;
            Outcome::reports(check_sdgla(&sg, &d.matrix)?.into_iter().map(|x| x.with_order(3)).collect())
        }
        Command::CheckGradedRep(refs) => {
            let sg = r.sgla(refs)?;
            let rep = r.graded_rep(refs, &sg)?;
            Outcome::reports(vec![check_graded_rep(&sg, &rep)?.with_order(2)])
        }
        Command::FromLie(refs) => {
            let lie = r.lie(refs)?;
            let sg = from_lie(&lie);
            let mut doc = Workspace::new();
            doc.insert("sgla", Entity::Sgla(SglaSchema::from_sgla(&sg)))?;
            if refs.rep.is_some() || inputs.has(Kind::Representation) {
                let rep = r.rep(refs, &lie)?;
                let gr = from_lie_rep(&rep);
                doc.insert("graded_rep", Entity::GradedRep(GradedRepSchema::from_graded_rep(&sg, &gr)))?;
            }
            Outcome::doc(Vec::new(), doc)
        }
        Command::CheckHoop(refs) => {
            let sg = r.sgla(refs)?;
            let rep = r.graded_rep(refs, &sg)?;
            let t = r.homotopy_operator(refs, &sg, &rep)?;
            Outcome::reports(vec![check_homotopy_oop(&t, &sg, &rep, p_max)?])
        }
        Command::CheckHrbo(refs) => {
            let sg = r.sgla(refs)?;
            let t = r.homotopy_operator(refs, &sg, &graded_adjoint(&sg))?;
            Outcome::reports(vec![check_homotopy_rbo(&t, &sg, p_max)?])
        }
        Command::GradedBracket(p) => {
            let sg = r.sgla(&p.refs)?;
            let rep = r.graded_rep(&p.refs, &sg)?;
            let f = r.cochain(p.left.as_ref(), &sg, &rep)?;
            let h = r.cochain(p.right.as_ref(), &sg, &rep)?;
            let b = graded_bracket(&f, &h, &sg, &rep, p_max)?;
            Outcome::doc(Vec::new(), single(Entity::Cochain(CochainSchema::from_cochain(&b)))?)
        }
        Command::McCheckHomotopy(refs) => {
            let sg = r.sgla(refs)?;
            let rep = r.graded_rep(refs, &sg)?;
            let t = r.homotopy_operator(refs, &sg, &rep)?;
            let res = mc_residual_homotopy(&t, &sg, &rep, p_max)?;
            Outcome::reports(vec![Report::from_witness("maurer-cartan", cochain_witness(&res)).with_order(p_max)])
        }
        Command::InducePrelieInf { refs, order } => {
            let sg = r.sgla(refs)?;
            let rep = r.graded_rep(refs, &sg)?;
            let t = r.homotopy_operator(refs, &sg, &rep)?;
            let order = order.unwrap_or_else(|| complete_order(&t));
            let l = induce_prelie_infinity(&t, &sg, &rep, order)?;
            let doc = single(Entity::PreLieInfinity(PreLieInfSchema::from_prelie_inf(&l)))?;
            Outcome::doc(vec![Report::pass("homotopy-o-operator").with_order(order)], doc)
        }
        Command::CheckPrelieInf { prelie_inf } => {
            let (ws, n) = r.locate(Kind::PreLieInfinity, prelie_inf.as_ref())?;
            let l = ws.prelie_infinity(Some(&n))?;
            Outcome::reports(
                check_prelie_infinity(&l, p_max)?
                    .into_iter()
                    .map(|x| {
                        let o = x.order.unwrap_or(l.truncation());
                        x.with_order(o)
                    })
                    .collect(),
            )
        }
        Command::CheckPsiHom(p) => {
            let sg = r.sgla(&p.refs)?;
            let rep = r.graded_rep(&p.refs, &sg)?;
            let f = r.cochain(p.left.as_ref(), &sg, &rep)?;
            let h = r.cochain(p.right.as_ref(), &sg, &rep)?;
            let lhs = psi(&graded_bracket(&f, &h, &sg, &rep, p_max)?, &sg, &rep)?;
            let rhs = gm_bracket(&psi(&f, &sg, &rep)?, &psi(&h, &sg, &rep)?, p_max)?;
            let diff = lhs.truncated(p_max).sub(&rhs.truncated(p_max))?;
            Outcome::reports(vec![
                Report::from_witness("psi-homomorphism", hooked_cochain_witness(&diff)).with_order(p_max)
            ])
        }
        Command::Suite { .. } => unreachable!("handled before loading inputs"),
    })
}
