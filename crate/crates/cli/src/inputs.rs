//! Resolving entity references given on the command line.
//!
//! A reference is `FILE`, `FILE#NAME`, or a bare `NAME` looked up across
//! every loaded file. An omitted reference picks the unique entity of the
//! required kind across all loaded files.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use rota_core::io::{Kind, Workspace};
use rota_core::{Error, Result};

pub struct Inputs {
    files: Vec<(String, Workspace)>,
}

fn file_part(reference: &str) -> (&str, Option<&str>) {
    match reference.split_once('#') {
        Some((f, n)) => (f, Some(n)),
        None => (reference, None),
    }
}

fn load(path: &str) -> Result<Workspace> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    Workspace::parse(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{path}: {m}")),
        other => other,
    })
}

impl Inputs {
    /// Loads every `-i` file and every reference that names an existing file.
    pub fn load<'a>(inputs: &[String], references: impl IntoIterator<Item = &'a str>) -> Result<Inputs> {
        let mut paths: Vec<String> = Vec::new();
        let mut seen = BTreeSet::new();
        let mut add = |p: &str, must_exist: bool| -> Result<()> {
            if Path::new(p).is_file() {
                if seen.insert(p.to_string()) {
                    paths.push(p.to_string());
                }
            } else if must_exist {
                return Err(Error::Parse(format!("{p}: no such file")));
            }
            Ok(())
        };
        for p in inputs {
            add(p, true)?;
        }
        for r in references {
            let (f, name) = file_part(r);
            add(f, name.is_some())?;
        }
        let files = paths
            .into_iter()
            .map(|p| load(&p).map(|ws| (p, ws)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Inputs { files })
    }

    /// The workspace holding the referenced entity and the entity's name.
    pub fn locate(&self, kind: Kind, reference: Option<&str>) -> Result<(&Workspace, String)> {
        if let Some(r) = reference {
            let (f, name) = file_part(r);
            if let Some((_, ws)) = self.files.iter().find(|(p, _)| p == f) {
                let (n, _) = ws.get(kind, name)?;
                return Ok((ws, n.to_string()));
            }
            let hits: Vec<&Workspace> = self
                .files
                .iter()
                .map(|(_, ws)| ws)
                .filter(|ws| ws.get(kind, Some(r)).is_ok())
                .collect();
            return match hits.as_slice() {
                [ws] => Ok((ws, r.to_string())),
                [] => Err(Error::Unresolved(format!("no {} named {r:?}", kind.key()))),
                _ => Err(Error::Unresolved(format!("{} {r:?} is defined in several files", kind.key()))),
            };
        }
        let hits: Vec<(&Workspace, String)> = self
            .files
            .iter()
            .flat_map(|(_, ws)| {
                ws.entities()
                    .filter(|((k, _), _)| *k == kind)
                    .map(move |((_, n), _)| (ws, n.clone()))
            })
            .collect();
        // The same entity bundled into several files counts once.
        let same = hits.windows(2).all(|w| {
            let a = w[0].0.get(kind, Some(&w[0].1)).map(|(_, e)| e);
            let b = w[1].0.get(kind, Some(&w[1].1)).map(|(_, e)| e);
            a.is_ok() && a == b
        });
        match hits.len() {
            n if n >= 1 && (n == 1 || same) => Ok(hits.into_iter().next().expect("one hit")),
            0 => Err(Error::Unresolved(format!("no {} entity in the inputs", kind.key()))),
            _ => Err(Error::Unresolved(format!(
                "several {} entities in the inputs; pick one by name",
                kind.key()
            ))),
        }
    }

    /// Whether any loaded file has an entity of `kind`.
    pub fn has(&self, kind: Kind) -> bool {
        self.files.iter().any(|(_, ws)| ws.has(kind))
    }
}
