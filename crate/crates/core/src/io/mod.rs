//! Text input format and the entity workspace.
//!
//! A file is one JSON object. Each top-level key is either a kind
//! (`"lie_algebra"`) or a kind and a name (`"operator:P"`); a bare kind is
//! named after the kind itself. Several files can be merged into one
//! workspace. Commands look entities up by name, or take the unique entity
//! of the required kind when no name is given.

pub mod schema;

use std::cell::RefCell;
use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::graded::{check_sgla, GradedRepresentation, GradedVectorSpace, Sgla};
use crate::homotopy::{GradedCochain, HomotopyOperator, PreLieInfinity};
use crate::lie::{adjoint, check_lie, LieAlgebra, LinearOperator, Representation};
use crate::prelie::{check_prelie, HookedMap, PreLieProduct};
use crate::deformation::AltMap;
pub use schema::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    LieAlgebra,
    Representation,
    Operator,
    GradedSpace,
    Sgla,
    GradedRep,
    Product,
    AltMap,
    HookedMap,
    Cochain,
    HomotopyOperator,
    PreLieInfinity,
}

impl Kind {
    pub const ALL: [Kind; 12] = [
        Kind::LieAlgebra,
        Kind::Representation,
        Kind::Operator,
        Kind::GradedSpace,
        Kind::Sgla,
        Kind::GradedRep,
        Kind::Product,
        Kind::AltMap,
        Kind::HookedMap,
        Kind::Cochain,
        Kind::HomotopyOperator,
        Kind::PreLieInfinity,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Kind::LieAlgebra => "lie_algebra",
            Kind::Representation => "representation",
            Kind::Operator => "operator",
            Kind::GradedSpace => "graded_space",
            Kind::Sgla => "sgla",
            Kind::GradedRep => "graded_rep",
            Kind::Product => "prelie",
            Kind::AltMap => "alt_map",
            Kind::HookedMap => "hooked_map",
            Kind::Cochain => "cochain",
            Kind::HomotopyOperator => "homotopy_operator",
            Kind::PreLieInfinity => "prelie_infinity",
        }
    }

    pub fn from_key(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.key() == s)
    }
}

/// A parsed entity in its schema form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entity {
    LieAlgebra(LieSchema),
    Representation(RepSchema),
    Operator(OperatorSchema),
    GradedSpace(GradedSpaceSchema),
    Sgla(SglaSchema),
    GradedRep(GradedRepSchema),
    Product(ProductSchema),
    AltMap(AltMapSchema),
    HookedMap(HookedSchema),
    Cochain(CochainSchema),
    HomotopyOperator(CochainSchema),
    PreLieInfinity(PreLieInfSchema),
}

fn from_value<T: DeserializeOwned>(key: &str, v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{key}: {e}")))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("schemas serialize")
}

impl Entity {
    pub fn kind(&self) -> Kind {
        match self {
            Entity::LieAlgebra(_) => Kind::LieAlgebra,
            Entity::Representation(_) => Kind::Representation,
            Entity::Operator(_) => Kind::Operator,
            Entity::GradedSpace(_) => Kind::GradedSpace,
            Entity::Sgla(_) => Kind::Sgla,
            Entity::GradedRep(_) => Kind::GradedRep,
            Entity::Product(_) => Kind::Product,
            Entity::AltMap(_) => Kind::AltMap,
            Entity::HookedMap(_) => Kind::HookedMap,
            Entity::Cochain(_) => Kind::Cochain,
            Entity::HomotopyOperator(_) => Kind::HomotopyOperator,
            Entity::PreLieInfinity(_) => Kind::PreLieInfinity,
        }
    }

    fn parse(kind: Kind, key: &str, v: Value) -> Result<Entity> {
        Ok(match kind {
            Kind::LieAlgebra => Entity::LieAlgebra(from_value(key, v)?),
            Kind::Representation => Entity::Representation(from_value(key, v)?),
            Kind::Operator => Entity::Operator(from_value(key, v)?),
            Kind::GradedSpace => Entity::GradedSpace(from_value(key, v)?),
            Kind::Sgla => Entity::Sgla(from_value(key, v)?),
            Kind::GradedRep => Entity::GradedRep(from_value(key, v)?),
            Kind::Product => Entity::Product(from_value(key, v)?),
            Kind::AltMap => Entity::AltMap(from_value(key, v)?),
            Kind::HookedMap => Entity::HookedMap(from_value(key, v)?),
            Kind::Cochain => Entity::Cochain(from_value(key, v)?),
            Kind::HomotopyOperator => {
                let c: CochainSchema = from_value(key, v)?;
                if c.degree != 0 {
                    return Err(Error::Degree(format!("{key}: a homotopy operator has degree 0")));
                }
                Entity::HomotopyOperator(c)
            }
            Kind::PreLieInfinity => Entity::PreLieInfinity(from_value(key, v)?),
        })
    }

    fn to_value(&self) -> Value {
        match self {
            Entity::LieAlgebra(x) => to_value(x),
            Entity::Representation(x) => to_value(x),
            Entity::Operator(x) => to_value(x),
            Entity::GradedSpace(x) => to_value(x),
            Entity::Sgla(x) => to_value(x),
            Entity::GradedRep(x) => to_value(x),
            Entity::Product(x) => to_value(x),
            Entity::AltMap(x) => to_value(x),
            Entity::HookedMap(x) => to_value(x),
            Entity::Cochain(x) | Entity::HomotopyOperator(x) => to_value(x),
            Entity::PreLieInfinity(x) => to_value(x),
        }
    }
}

/// Named entities from one or more files, resolved and validated lazily.
#[derive(Debug, Default)]
pub struct Workspace {
    entities: BTreeMap<(Kind, String), Entity>,
    valid: RefCell<BTreeMap<(Kind, String), bool>>,
}

impl Clone for Workspace {
    fn clone(&self) -> Self {
        Workspace {
            entities: self.entities.clone(),
            valid: RefCell::new(self.valid.borrow().clone()),
        }
    }
}

impl PartialEq for Workspace {
    fn eq(&self, other: &Self) -> bool {
        self.entities == other.entities
    }
}

fn split_key(key: &str) -> Result<(Kind, String)> {
    let (kind, name) = match key.split_once(':') {
        Some((k, n)) => (k, n),
        None => (key, key),
    };
    let kind = Kind::from_key(kind).ok_or_else(|| Error::Parse(format!("unknown entity kind in key {key:?}")))?;
    Ok((kind, name.to_string()))
}

impl Workspace {
    pub fn new() -> Self {
        Workspace::default()
    }

    /// Parses one document. Syntax errors carry line and column.
    pub fn parse(text: &str) -> Result<Workspace> {
        let mut ws = Workspace::new();
        ws.merge_str(text)?;
        Ok(ws)
    }

    pub fn merge_str(&mut self, text: &str) -> Result<()> {
        let doc: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let Value::Object(map) = doc else {
            return Err(Error::Parse("top level must be a JSON object".into()));
        };
        for (key, v) in map {
            let (kind, name) = split_key(&key)?;
            let e = Entity::parse(kind, &key, v)?;
            self.insert(&name, e)?;
        }
        Ok(())
    }

    /// Adds an entity; names must be unique within a kind.
    pub fn insert(&mut self, name: &str, e: Entity) -> Result<()> {
        let key = (e.kind(), name.to_string());
        if self.entities.contains_key(&key) {
            return Err(Error::Parse(format!("duplicate {} entity {name:?}", e.kind().key())));
        }
        self.entities.insert(key, e);
        Ok(())
    }

    pub fn entities(&self) -> impl Iterator<Item = (&(Kind, String), &Entity)> {
        self.entities.iter()
    }

    pub fn to_value(&self) -> Value {
        let mut map = Map::new();
        for ((kind, name), e) in &self.entities {
            let key = if name == kind.key() {
                name.clone()
            } else {
                format!("{}:{name}", kind.key())
            };
            map.insert(key, e.to_value());
        }
        Value::Object(map)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("values serialize")
    }

    /// The entity of `kind` called `name`, or the only one when `name` is
    /// `None`.
    pub fn get(&self, kind: Kind, name: Option<&str>) -> Result<(&str, &Entity)> {
        match name {
            Some(n) => self
                .entities
                .get_key_value(&(kind, n.to_string()))
                .map(|((_, n), e)| (n.as_str(), e))
                .ok_or_else(|| Error::Unresolved(format!("no {} named {n:?}", kind.key()))),
            None => {
                let mut it = self.entities.iter().filter(|((k, _), _)| *k == kind);
                match (it.next(), it.next()) {
                    (Some(((_, n), e)), None) => Ok((n.as_str(), e)),
                    (None, _) => Err(Error::Unresolved(format!("no {} entity", kind.key()))),
                    _ => Err(Error::Unresolved(format!(
                        "several {} entities; pick one by name",
                        kind.key()
                    ))),
                }
            }
        }
    }

    pub fn has(&self, kind: Kind) -> bool {
        self.entities.keys().any(|(k, _)| *k == kind)
    }

    pub fn lie(&self, name: Option<&str>) -> Result<LieAlgebra> {
        match self.get(Kind::LieAlgebra, name)? {
            (_, Entity::LieAlgebra(s)) => s.to_lie(),
            _ => unreachable!(),
        }
    }

    /// `"adjoint"` resolves to the adjoint representation unless an entity
    /// of that name exists.
    pub fn representation(&self, name: Option<&str>, lie: &LieAlgebra) -> Result<Representation> {
        if name == Some("adjoint") && self.get(Kind::Representation, name).is_err() {
            return Ok(adjoint(lie));
        }
        match self.get(Kind::Representation, name)? {
            (_, Entity::Representation(s)) => s.to_rep(lie),
            _ => unreachable!(),
        }
    }

    /// Operator `V → g`.
    pub fn operator(&self, name: Option<&str>, dim_v: usize, dim_g: usize) -> Result<LinearOperator> {
        match self.get(Kind::Operator, name)? {
            (_, Entity::Operator(s)) => s.to_operator(dim_v, dim_g),
            _ => unreachable!(),
        }
    }

    /// Operator `g → g`.
    pub fn endomorphism(&self, name: Option<&str>, dim: usize) -> Result<LinearOperator> {
        match self.get(Kind::Operator, name)? {
            (_, Entity::Operator(s)) => s.to_endomorphism(dim),
            _ => unreachable!(),
        }
    }

    pub fn graded_space(&self, name: Option<&str>) -> Result<GradedVectorSpace> {
        match self.get(Kind::GradedSpace, name)? {
            (_, Entity::GradedSpace(s)) => s.to_space(),
            _ => unreachable!(),
        }
    }

    fn space_ref(&self, r: &Option<SpaceRef>) -> Result<GradedVectorSpace> {
        match r {
            Some(SpaceRef::Inline(s)) => s.to_space(),
            Some(SpaceRef::Named(n)) => self.graded_space(Some(n)),
            None => self.graded_space(None),
        }
    }

    pub fn sgla(&self, name: Option<&str>) -> Result<Sgla> {
        match self.get(Kind::Sgla, name)? {
            (_, Entity::Sgla(s)) => s.to_sgla(self.space_ref(&s.space)?),
            _ => unreachable!(),
        }
    }

    /// `"adjoint"` resolves to the graded adjoint unless an entity of that
    /// name exists.
    pub fn graded_rep(&self, name: Option<&str>, g: &Sgla) -> Result<GradedRepresentation> {
        if name == Some("adjoint") && self.get(Kind::GradedRep, name).is_err() {
            return Ok(crate::graded::graded_adjoint(g));
        }
        match self.get(Kind::GradedRep, name)? {
            (_, Entity::GradedRep(s)) => {
                let space = match s {
                    GradedRepSchema::Explicit(e) => Some(self.space_ref(&e.space)?),
                    GradedRepSchema::Keyword(_) => None,
                };
                s.to_graded_rep(g, space)
            }
            _ => unreachable!(),
        }
    }

    pub fn product(&self, name: Option<&str>) -> Result<PreLieProduct> {
        match self.get(Kind::Product, name)? {
            (_, Entity::Product(s)) => s.to_product(),
            _ => unreachable!(),
        }
    }

    pub fn alt_map(&self, name: Option<&str>, v_names: &[String], g_names: &[String]) -> Result<AltMap> {
        match self.get(Kind::AltMap, name)? {
            (_, Entity::AltMap(s)) => s.to_alt(v_names, g_names),
            _ => unreachable!(),
        }
    }

    /// The map and the basis names of its space.
    pub fn hooked_map(&self, name: Option<&str>) -> Result<(HookedMap, Vec<String>)> {
        match self.get(Kind::HookedMap, name)? {
            (_, Entity::HookedMap(s)) => Ok((s.to_hooked()?, s.basis.clone())),
            _ => unreachable!(),
        }
    }

    pub fn cochain(&self, name: Option<&str>, v: &GradedVectorSpace, g: &GradedVectorSpace) -> Result<GradedCochain> {
        match self.get(Kind::Cochain, name)? {
            (_, Entity::Cochain(s)) => s.to_cochain(v, g),
            _ => unreachable!(),
        }
    }

    pub fn homotopy_operator(
        &self,
        name: Option<&str>,
        v: &GradedVectorSpace,
        g: &GradedVectorSpace,
    ) -> Result<HomotopyOperator> {
        match self.get(Kind::HomotopyOperator, name)? {
            (_, Entity::HomotopyOperator(s)) => HomotopyOperator::new(s.to_cochain(v, g)?),
            _ => unreachable!(),
        }
    }

    pub fn prelie_infinity(&self, name: Option<&str>) -> Result<PreLieInfinity> {
        match self.get(Kind::PreLieInfinity, name)? {
            (_, Entity::PreLieInfinity(s)) => s.to_prelie_inf(&self.space_ref(&s.space)?),
            _ => unreachable!(),
        }
    }

    /// Whether a Lie algebra, sgLa or pre-Lie product satisfies its axioms;
    /// the verdict is cached per entity.
    pub fn is_valid(&self, kind: Kind, name: Option<&str>) -> Result<bool> {
        let (n, _) = self.get(kind, name)?;
        let key = (kind, n.to_string());
        if let Some(&v) = self.valid.borrow().get(&key) {
            return Ok(v);
        }
        let v = match kind {
            Kind::LieAlgebra => check_lie(&self.lie(Some(n))?).iter().all(|r| r.pass),
            Kind::Sgla => check_sgla(&self.sgla(Some(n))?).iter().all(|r| r.pass),
            Kind::Product => check_prelie(&self.product(Some(n))?).pass,
            _ => return Err(Error::Parse(format!("no validation defined for {}", kind.key()))),
        };
        self.valid.borrow_mut().insert(key, v);
        Ok(v)
    }
}

#[cfg(test)]
mod tests;
