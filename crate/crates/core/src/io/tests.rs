use super::*;
use crate::catalog;
use crate::lie::{is_rota_baxter, search_rbo};
use crate::random;
use crate::scalar::Rational;
use proptest::prelude::*;

const LIE_DOC: &str = r#"{
  "lie_algebra": {"basis": ["e1","e2"], "brackets": [{"left":"e1","right":"e2","value":{"e2":"1"}}]},
  "representation": "adjoint",
  "operator": {"rows": [["0","0"],["1","0"]]}
}"#;

#[test]
fn lie_document() {
    let ws = Workspace::parse(LIE_DOC).unwrap();
    let l = ws.lie(None).unwrap();
    assert_eq!(l, catalog::aff2());
    assert_eq!(ws.representation(None, &l).unwrap(), adjoint(&l));
    let p = ws.endomorphism(None, 2).unwrap();
    assert!(is_rota_baxter(&l, &p).unwrap());
    assert!(ws.is_valid(Kind::LieAlgebra, None).unwrap());
}

#[test]
fn homotopy_operator_document() {
    let doc = r#"{
      "graded_space:V": {"basis": [{"name":"v1","degree":0}]},
      "graded_space:g": {"basis": [{"name":"x","degree":0}]},
      "homotopy_operator": {"truncation": 2, "components": [
        {"weight":0,"value":{"x":"1"}},
        {"weight":1,"entries":[{"args":["v1"],"value":{"x":"1"}}]}
      ]}
    }"#;
    let ws = Workspace::parse(doc).unwrap();
    let (v, g) = (ws.graded_space(Some("V")).unwrap(), ws.graded_space(Some("g")).unwrap());
    let t = ws.homotopy_operator(None, &v, &g).unwrap();
    assert_eq!(t.truncation(), 2);
    assert_eq!(t.omega(), vec![Rational::one()]);
    assert_eq!(t.component(1).unwrap().eval(&[0]).unwrap(), vec![Rational::one()]);
}

#[test]
fn syntax_errors_have_positions() {
    let err = Workspace::parse("{\n  \"lie_algebra\": {\"basis\": [\"e1\",]}\n}").unwrap_err();
    let Error::Parse(msg) = err else { panic!() };
    assert!(msg.contains("line 2"), "{msg}");
}

#[test]
fn reference_errors() {
    let doc = r#"{"lie_algebra": {"basis": ["e1"], "brackets": [{"left":"e1","right":"e9"}]}}"#;
    assert_eq!(
        Workspace::parse(doc).unwrap().lie(None),
        Err(Error::UnknownBasis("e9".into()))
    );
    let ws = Workspace::parse(r#"{"operator:A": {"rows": []}, "operator:B": {"rows": []}}"#).unwrap();
    assert!(matches!(ws.endomorphism(None, 0), Err(Error::Unresolved(_))));
    assert!(ws.endomorphism(Some("B"), 0).is_ok());
    assert!(matches!(ws.lie(None), Err(Error::Unresolved(_))));
    assert!(matches!(Workspace::parse(r#"{"widget": {}}"#), Err(Error::Parse(_))));
    assert!(matches!(
        Workspace::parse(r#"{"lie_algebra": {"basis": [], "extra": 1}}"#),
        Err(Error::Parse(_))
    ));
}

#[test]
fn inhomogeneous_values_are_rejected() {
    let doc = r#"{
      "graded_space:V": {"basis": [{"name":"v","degree":0}]},
      "graded_space:g": {"basis": [{"name":"x","degree":1}]},
      "homotopy_operator": {"truncation": 1, "components": [{"weight":1,"entries":[{"args":["v"],"value":{"x":"1"}}]}]}
    }"#;
    let ws = Workspace::parse(doc).unwrap();
    let (v, g) = (ws.graded_space(Some("V")).unwrap(), ws.graded_space(Some("g")).unwrap());
    assert!(matches!(ws.homotopy_operator(None, &v, &g), Err(Error::Degree(_))));
}

#[test]
fn arguments_in_any_order() {
    let doc = r#"{"alt_map": {"arity": 2, "entries": [{"args":["v2","v1"],"value":{"e1":"1"}}]}}"#;
    let ws = Workspace::parse(doc).unwrap();
    let names = |p: &str| vec![format!("{p}1"), format!("{p}2")];
    let f = ws.alt_map(None, &names("v"), &names("e")).unwrap();
    assert_eq!(f.eval(&[0, 1]).unwrap(), vec![Rational::from_int(-1), Rational::zero()]);
}

#[test]
fn validation_is_cached() {
    let ws = Workspace::parse(r#"{"lie_algebra": {"basis": ["a","b","c"], "brackets": [
        {"left":"a","right":"b","value":{"a":"1"}}, {"left":"b","right":"c","value":{"a":"1"}}]}}"#)
    .unwrap();
    assert!(ws.valid.borrow().is_empty());
    assert!(ws.is_valid(Kind::LieAlgebra, None).unwrap());
    assert_eq!(ws.valid.borrow().get(&(Kind::LieAlgebra, "lie_algebra".to_string())), Some(&true));
}

#[test]
fn workspace_round_trip() {
    let mut ws = Workspace::parse(LIE_DOC).unwrap();
    let (g, rep) = catalog::gl11();
    ws.insert("gl11", Entity::Sgla(SglaSchema::from_sgla(&g))).unwrap();
    ws.insert("gl11", Entity::GradedRep(GradedRepSchema::from_graded_rep(&g, &rep)))
        .unwrap();
    let text = ws.to_json();
    let again = Workspace::parse(&text).unwrap();
    assert_eq!(again, ws);
    assert_eq!(again.to_json(), text);
    let g2 = again.sgla(Some("gl11")).unwrap();
    assert_eq!(g2, g);
    assert_eq!(again.graded_rep(Some("gl11"), &g2).unwrap(), rep);
}

#[test]
fn operators_found_by_search_round_trip() {
    let l = catalog::aff2();
    let grid: Vec<Rational> = (-1..=1).map(Rational::from_int).collect();
    for p in search_rbo(&l, &grid, 1 << 20, false).unwrap() {
        let s = OperatorSchema::from_operator(&p);
        let back: OperatorSchema = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back.to_endomorphism(2).unwrap(), p);
    }
}

fn json_round<T: Serialize + DeserializeOwned>(x: &T) -> T {
    serde_json::from_str(&serde_json::to_string(x).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Domain value → schema → JSON → schema → domain value is the identity,
    /// including for inputs that break the axioms.
    #[test]
    fn schemas_round_trip(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let names = |n: usize, p: &str| (1..=n).map(|i| format!("{p}{i}")).collect::<Vec<_>>();

        let mut l = catalog::sl2();
        if seed % 2 == 0 {
            l = random::perturb_lie(&mut rng, &l);
        }
        prop_assert_eq!(json_round(&LieSchema::from_lie(&l)).to_lie().unwrap(), l.clone());

        let rep = catalog::sl2_standard();
        prop_assert_eq!(json_round(&RepSchema::from_rep(&l, &rep)).to_rep(&l).unwrap(), rep);

        let p = random::prelie_product(&mut rng, names(2, "e"));
        prop_assert_eq!(json_round(&ProductSchema::from_product(&p)).to_product().unwrap(), p.clone());

        let f = random::alt_map(&mut rng, 2, 3, 2);
        let (vn, gn) = (names(3, "v"), names(2, "e"));
        prop_assert_eq!(json_round(&AltMapSchema::from_alt(&f, &vn, &gn)).to_alt(&vn, &gn).unwrap(), f);

        let h = p.to_hooked();
        prop_assert_eq!(json_round(&HookedSchema::from_hooked(&h, p.names())).to_hooked().unwrap(), h);

        let v = random::graded_space(&mut rng, 2, "v");
        let (g, _) = catalog::gl11();
        let c = random::cochain(&mut rng, 1, 2, &v, g.space());
        prop_assert_eq!(json_round(&CochainSchema::from_cochain(&c)).to_cochain(&v, g.space()).unwrap(), c);

        let m = random::prelie_infinity(&mut rng, 3, &v);
        prop_assert_eq!(json_round(&PreLieInfSchema::from_prelie_inf(&m)).to_prelie_inf(&v).unwrap(), m);

        if let Some(bad) = random::perturb_sgla(&mut rng, &g) {
            prop_assert_eq!(json_round(&SglaSchema::from_sgla(&bad)).to_sgla(g.space().clone()).unwrap(), bad);
        }
    }
}
