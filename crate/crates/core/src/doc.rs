//! The JSON interchange format for orbit complexes.
//!
//! A document lists permutation groups by id, cells referencing a group, and
//! incidence records whose `map` field gives one codomain permutation per
//! generator of the cell's group. Integers only; no floats anywhere in the
//! format. Export sorts everything by id so output is stable across runs.
//!
//! ```
//! use orbk_core::{builders, doc, group::DEFAULT_ORDER_CAP};
//!
//! let complex = builders::lambda_n(5)?;
//! let text = doc::export("lambda_5", &complex);
//! let back = doc::parse_str(&text, DEFAULT_ORDER_CAP).unwrap();
//! assert_eq!(doc::export("lambda_5", &back), text);
//! # Ok::<(), orbk_core::ComplexError>(())
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Incidence, OrbitCell, OrbitComplex};
use crate::error::{ComplexError, GroupError};
use crate::group::{FiniteGroup, GroupHom};
use crate::perm::Permutation;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupDocument {
    pub id: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CellDocument {
    pub id: String,
    pub dim: u8,
    pub group: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IncidenceDocument {
    pub cell: String,
    pub face: String,
    pub degree: i64,
    /// Images of the cell-group generators in the face group, one
    /// permutation image-array per generator.
    pub map: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub name: String,
    pub groups: Vec<GroupDocument>,
    pub cells: Vec<CellDocument>,
    pub incidences: Vec<IncidenceDocument>,
}

#[derive(Debug, Error)]
pub enum DocError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("group `{id}`: {source}")]
    Group { id: String, source: GroupError },
    #[error("duplicate group id `{0}`")]
    DuplicateGroup(String),
    #[error("cell `{cell}` references undeclared group `{group}`")]
    UnresolvedGroup { cell: String, group: String },
    #[error("incidence `{cell}` -> `{face}`: {source}")]
    BadHom {
        cell: String,
        face: String,
        source: GroupError,
    },
    #[error("incidence references unknown cell `{0}`")]
    UnknownCell(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Builds the in-memory complex, constructing and checking every group and
/// homomorphism. The order cap guards against runaway generator sets.
pub fn from_document(doc: &ComplexDocument, order_cap: usize) -> Result<OrbitComplex, DocError> {
    let mut groups: BTreeMap<String, Arc<FiniteGroup>> = BTreeMap::new();
    for g in &doc.groups {
        let generators = g
            .generators
            .iter()
            .map(|imgs| {
                let p = Permutation::from_images(imgs.clone())?;
                if p.degree() != g.degree {
                    return Err(GroupError::DegreeMismatch {
                        expected: g.degree,
                        got: p.degree(),
                    });
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|source| DocError::Group {
                id: g.id.clone(),
                source,
            })?;
        let group =
            FiniteGroup::generate_with_cap(g.degree, generators, order_cap).map_err(|source| {
                DocError::Group {
                    id: g.id.clone(),
                    source,
                }
            })?;
        if groups.insert(g.id.clone(), group).is_some() {
            return Err(DocError::DuplicateGroup(g.id.clone()));
        }
    }

    let mut cells = Vec::new();
    let mut cell_group: BTreeMap<String, String> = BTreeMap::new();
    for c in &doc.cells {
        let group = groups
            .get(&c.group)
            .ok_or_else(|| DocError::UnresolvedGroup {
                cell: c.id.clone(),
                group: c.group.clone(),
            })?;
        cell_group.insert(c.id.clone(), c.group.clone());
        cells.push(OrbitCell {
            id: c.id.clone(),
            dim: c.dim,
            stabilizer: group.clone(),
        });
    }

    let mut incidences = Vec::new();
    for inc in &doc.incidences {
        let domain_gid = cell_group
            .get(&inc.cell)
            .ok_or_else(|| DocError::UnknownCell(inc.cell.clone()))?;
        let codomain_gid = cell_group
            .get(&inc.face)
            .ok_or_else(|| DocError::UnknownCell(inc.face.clone()))?;
        let domain = groups[domain_gid].clone();
        let codomain = groups[codomain_gid].clone();
        let images = inc
            .map
            .iter()
            .map(|imgs| Permutation::from_images(imgs.clone()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|source| DocError::BadHom {
                cell: inc.cell.clone(),
                face: inc.face.clone(),
                source,
            })?;
        let hom =
            GroupHom::from_perms(domain, codomain, &images).map_err(|source| DocError::BadHom {
                cell: inc.cell.clone(),
                face: inc.face.clone(),
                source,
            })?;
        incidences.push(Incidence {
            cell: inc.cell.clone(),
            face: inc.face.clone(),
            degree: inc.degree,
            inclusion: hom,
        });
    }

    Ok(OrbitComplex::new(cells, incidences)?)
}

/// Serializes a complex. Groups are deduplicated by their structure (degree
/// plus generator list) and numbered in order of first use over the cells
/// sorted by dimension and id, so the output does not depend on the
/// in-memory construction order.
pub fn to_document(name: &str, complex: &OrbitComplex) -> ComplexDocument {
    let mut group_ids: BTreeMap<(usize, Vec<Vec<usize>>), String> = BTreeMap::new();
    let mut groups = Vec::new();
    let mut cells = Vec::new();
    let mut sorted_cells: Vec<_> = complex.cells().to_vec();
    sorted_cells.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
    for cell in &sorted_cells {
        let key = (
            cell.stabilizer.degree(),
            cell.stabilizer
                .generators()
                .iter()
                .map(|p| p.images().to_vec())
                .collect::<Vec<_>>(),
        );
        let gid = match group_ids.get(&key) {
            Some(gid) => gid.clone(),
            None => {
                let gid = format!("g{}", group_ids.len());
                groups.push(GroupDocument {
                    id: gid.clone(),
                    degree: key.0,
                    generators: key.1.clone(),
                });
                group_ids.insert(key, gid.clone());
                gid
            }
        };
        cells.push(CellDocument {
            id: cell.id.clone(),
            dim: cell.dim,
            group: gid,
        });
    }
    let mut incidences: Vec<IncidenceDocument> = complex
        .incidences()
        .iter()
        .map(|inc| IncidenceDocument {
            cell: inc.cell.clone(),
            face: inc.face.clone(),
            degree: inc.degree,
            map: inc
                .inclusion
                .gen_images()
                .iter()
                .map(|&e| inc.inclusion.codomain().element(e).images().to_vec())
                .collect(),
        })
        .collect();
    incidences.sort_by(|a, b| {
        (&a.cell, &a.face, a.degree, &a.map).cmp(&(&b.cell, &b.face, b.degree, &b.map))
    });
    ComplexDocument {
        name: name.to_string(),
        groups,
        cells,
        incidences,
    }
}

pub fn parse_str(text: &str, order_cap: usize) -> Result<OrbitComplex, DocError> {
    let doc: ComplexDocument = serde_json::from_str(text)?;
    from_document(&doc, order_cap)
}

/// Reads and fully validates (structurally) a complex from a JSON file.
pub fn parse(path: &std::path::Path, order_cap: usize) -> Result<OrbitComplex, DocError> {
    let text = std::fs::read_to_string(path).map_err(|source| DocError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_str(&text, order_cap)
}

pub fn export(name: &str, complex: &OrbitComplex) -> String {
    serde_json::to_string_pretty(&to_document(name, complex)).expect("document serializes")
}
