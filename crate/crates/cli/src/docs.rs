//! JSON input documents.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Deserialize;
use sikorski_core::{
    build_lattice, DistributiveLattice, EntailmentContext, Error as CoreError, Flavor, LatticeHom,
    Sequent, StatementSet,
};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    #[serde(default)]
    pub name: String,
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<(String, String)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub map: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequentDoc {
    #[serde(default)]
    pub antecedent: Vec<(String, String)>,
    #[serde(default)]
    pub succedent: Vec<(String, String)>,
}

#[derive(Debug)]
pub enum LoadError {
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, serde_json::Error),
    Invalid(PathBuf, CoreError),
}

impl LoadError {
    pub fn is_internal(&self) -> bool {
        matches!(self, LoadError::Invalid(_, e) if e.is_internal())
    }
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            LoadError::Parse(p, e) => write!(f, "{}: parse error: {e}", p.display()),
            LoadError::Invalid(p, e) => write!(f, "{}: {e}", p.display()),
        }
    }
}

fn read<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(path.to_owned(), e))?;
    serde_json::from_str(&text).map_err(|e| LoadError::Parse(path.to_owned(), e))
}

pub fn load_lattice(path: &Path) -> Result<Arc<DistributiveLattice>, LoadError> {
    let doc: LatticeDoc = read(path)?;
    let lattice = build_lattice(&doc.elements, &doc.leq)
        .map_err(|e| LoadError::Invalid(path.to_owned(), e))?;
    Ok(Arc::new(lattice.with_name(doc.name)))
}

pub fn load_hom(
    path: &Path,
    domain: &Arc<DistributiveLattice>,
    codomain: &Arc<DistributiveLattice>,
) -> Result<LatticeHom, LoadError> {
    let doc: MapDoc = read(path)?;
    let pairs: Vec<(&str, &str)> = doc
        .map
        .iter()
        .map(|(k, v)| (k.as_str(), v.as_str()))
        .collect();
    LatticeHom::from_names(&pairs, domain, codomain, Flavor::Lattice)
        .map_err(|e| LoadError::Invalid(path.to_owned(), e))
}

pub fn load_sequent(path: &Path, ctx: &EntailmentContext) -> Result<Sequent, LoadError> {
    let doc: SequentDoc = read(path)?;
    let side = |pairs: &[(String, String)]| -> Result<StatementSet, LoadError> {
        pairs
            .iter()
            .map(|(x, a)| ctx.statement(x, a))
            .collect::<Result<StatementSet, _>>()
            .map_err(|e| LoadError::Invalid(path.to_owned(), e))
    };
    Ok(Sequent::new(side(&doc.antecedent)?, side(&doc.succedent)?))
}
