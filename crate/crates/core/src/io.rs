//! JSON file formats for lattices and arrangements.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arrangement::{IntersectionLattice, QSubspace, QSubspaceArrangement};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Q};
use crate::poset::{build_semilattice_from_labels, MeetSemilattice};

/// `{"elements": [...], "covers": [[lower, upper], ...], "codim": {...},
/// "building": [...]}`. Elements keep their order; covers are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codim: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub building: Option<Vec<String>>,
}

impl LatticeFile {
    pub fn from_lattice(l: &MeetSemilattice) -> Self {
        let mut covers: Vec<[String; 2]> = l
            .covers()
            .iter()
            .map(|&(a, b)| [l.label(a).to_string(), l.label(b).to_string()])
            .collect();
        covers.sort();
        Self {
            elements: l.labels().to_vec(),
            covers,
            codim: None,
            building: None,
        }
    }

    pub fn from_intersection_lattice(il: &IntersectionLattice) -> Self {
        let mut f = Self::from_lattice(il.lattice());
        f.codim = Some(
            (0..il.len())
                .map(|x| (il.label(x).to_string(), il.codim(x)))
                .collect(),
        );
        f
    }

    pub fn with_building(mut self, l: &MeetSemilattice, g: &[usize]) -> Self {
        self.building = Some(g.iter().map(|&x| l.label(x).to_string()).collect());
        self
    }

    pub fn lattice(&self) -> Result<MeetSemilattice> {
        let labels: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        let covers: Vec<(&str, &str)> = self.covers.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        build_semilattice_from_labels(&labels, &covers)
    }

    /// Codimensions indexed like `l`; every element must be present.
    pub fn codims(&self, l: &MeetSemilattice) -> Result<Option<Vec<usize>>> {
        let Some(map) = &self.codim else {
            return Ok(None);
        };
        if let Some(k) = map.keys().find(|k| l.index_of(k).is_none()) {
            return Err(Error::UnknownLabel(k.clone()));
        }
        l.labels()
            .iter()
            .map(|s| {
                map.get(s)
                    .copied()
                    .ok_or_else(|| Error::Parse(format!("codim missing for {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    pub fn building_indices(&self, l: &MeetSemilattice) -> Result<Option<Vec<usize>>> {
        self.building
            .as_ref()
            .map(|b| b.iter().map(|s| l.require(s)).collect())
            .transpose()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceEntry {
    pub equations: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// `{"dim": n, "subspaces": [{"equations": [["1", "-1/2", ...], ...],
/// "label": ...}], "ambient": [[...]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub dim: usize,
    pub subspaces: Vec<SubspaceEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<Vec<Vec<String>>>,
}

fn parse_rows(rows: &[Vec<String>], dim: usize) -> Result<QSubspace> {
    let parsed: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}"))))
                .collect()
        })
        .collect::<Result<_>>()?;
    QSubspace::new(dim, parsed)
}

fn format_rows(s: &QSubspace) -> Vec<Vec<String>> {
    s.equations()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

impl ArrangementFile {
    pub fn arrangement(&self) -> Result<QSubspaceArrangement> {
        let subs = self
            .subspaces
            .iter()
            .map(|e| parse_rows(&e.equations, self.dim))
            .collect::<Result<Vec<_>>>()?;
        let names = self
            .subspaces
            .iter()
            .enumerate()
            .map(|(i, e)| e.label.clone().unwrap_or_else(|| format!("A{}", i + 1)))
            .collect();
        let ambient = match &self.ambient {
            Some(rows) => parse_rows(rows, self.dim)?,
            None => QSubspace::whole(self.dim),
        };
        QSubspaceArrangement::with_ambient(ambient, subs, Some(names))
    }

    /// Canonical form: reduced equations, labels always written.
    pub fn from_arrangement(a: &QSubspaceArrangement) -> Self {
        let subspaces = a
            .subspaces()
            .iter()
            .zip(a.names())
            .map(|(s, name)| SubspaceEntry {
                equations: format_rows(s),
                label: Some(name.clone()),
            })
            .collect();
        let ambient = (a.ambient().codim() > 0).then(|| format_rows(a.ambient()));
        Self {
            dim: a.dim(),
            subspaces,
            ambient,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
