//! Abstract simplicial complexes.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::poset::{MeetSemilattice, Poset};

/// A face is a strictly increasing list of vertex indices.
pub type Face = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    faces: BTreeSet<Face>,
}

fn is_subface(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.any(|w| w == v))
}

impl SimplicialComplex {
    /// Validates that `faces` is downward closed. The empty face is added
    /// if missing.
    pub fn from_faces(vertices: Vec<String>, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let mut set = BTreeSet::new();
        set.insert(Vec::new());
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::ElementOutOfRange(v.to_string()));
            }
            set.insert(f);
        }
        for f in &set {
            for skip in 0..f.len() {
                let mut g = f.clone();
                g.remove(skip);
                if !set.contains(&g) {
                    return Err(Error::NotAFace(format!("{g:?} (boundary of {f:?})")));
                }
            }
        }
        Ok(Self { vertices, faces: set })
    }

    pub(crate) fn from_faces_unchecked(vertices: Vec<String>, faces: impl IntoIterator<Item = Face>) -> Self {
        let mut set: BTreeSet<Face> = faces.into_iter().collect();
        set.insert(Vec::new());
        Self { vertices, faces: set }
    }

    /// Downward closure of the given facets.
    pub fn from_facets(vertices: Vec<String>, facets: &[Face]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::ElementOutOfRange(v.to_string()));
            }
            for mask in 0u64..(1 << f.len()) {
                set.insert(
                    f.iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &v)| v)
                        .collect::<Face>(),
                );
            }
        }
        set.insert(Vec::new());
        Ok(Self { vertices, faces: set })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.faces.contains(&f)
    }

    /// `(f_0, f_1, ...)`: number of faces with 1, 2, ... vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for face in &self.faces {
            if face.is_empty() {
                continue;
            }
            if f.len() < face.len() {
                f.resize(face.len(), 0);
            }
            f[face.len() - 1] += 1;
        }
        f
    }

    pub fn dimension(&self) -> isize {
        self.faces.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// Reduced Euler characteristic, counting the empty face in dimension -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    pub fn facets(&self) -> Vec<Face> {
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .faces
                    .iter()
                    .any(|g| g.len() > f.len() && is_subface(f, g))
            })
            .cloned()
            .collect()
    }

    pub fn face_labels(&self, face: &[usize]) -> Vec<&str> {
        face.iter().map(|&v| self.vertices[v].as_str()).collect()
    }

    /// Faces as sets of vertex labels; equal iff the complexes agree up to
    /// the label-preserving vertex bijection.
    pub fn labelled_faces(&self) -> BTreeSet<BTreeSet<String>> {
        self.faces
            .iter()
            .map(|f| f.iter().map(|&v| self.vertices[v].clone()).collect())
            .collect()
    }

    /// Stellar subdivision at `face` with a new apex vertex.
    ///
    /// Faces containing `face` are removed and replaced by
    /// `{apex} + tau + rho` where `tau` is a proper subset of `face` and
    /// `rho` ranges over the link of `face`.
    pub fn stellar_subdivision(&self, face: &[usize], apex: &str) -> Result<SimplicialComplex> {
        let mut f = face.to_vec();
        f.sort_unstable();
        if f.is_empty() || !self.faces.contains(&f) {
            return Err(Error::NotAFace(format!("{:?}", self.face_labels(&f))));
        }
        if self.vertices.iter().any(|v| v == apex) {
            return Err(Error::VertexClash(apex.to_string()));
        }
        let new_v = self.vertices.len();
        let mut vertices = self.vertices.clone();
        vertices.push(apex.to_string());

        let mut faces: BTreeSet<Face> = self
            .faces
            .iter()
            .filter(|g| !is_subface(&f, g))
            .cloned()
            .collect();
        let link: Vec<Face> = self
            .faces
            .iter()
            .filter(|g| is_subface(&f, g))
            .map(|g| g.iter().copied().filter(|v| !f.contains(v)).collect())
            .collect();
        for mask in 0u64..(1 << f.len()) - 1 {
            let tau = f
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v);
            let tau: Face = tau.collect();
            for rho in &link {
                let mut g: Face = tau.iter().chain(rho).copied().collect();
                g.push(new_v);
                g.sort_unstable();
                faces.insert(g);
            }
        }
        Ok(SimplicialComplex { vertices, faces })
    }

    /// Faces ordered by inclusion; the empty face is the bottom and meets
    /// are intersections.
    pub fn face_poset(&self) -> MeetSemilattice {
        let mut faces: Vec<&Face> = self.faces.iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let labels = faces
            .iter()
            .map(|f| format!("{{{}}}", self.face_labels(f).join(",")))
            .collect();
        let poset = Poset::from_relation_unchecked(labels, |a, b| is_subface(faces[a], faces[b]));
        MeetSemilattice::from_poset(poset).expect("face poset of a simplicial complex is a meet-semilattice")
    }

    /// Renames vertices; `map` sends old labels to new ones.
    pub fn relabel(&self, map: &HashMap<String, String>) -> SimplicialComplex {
        let vertices = self
            .vertices
            .iter()
            .map(|v| map.get(v).cloned().unwrap_or_else(|| v.clone()))
            .collect();
        SimplicialComplex {
            vertices,
            faces: self.faces.clone(),
        }
    }
}

/// Free function form of [`SimplicialComplex::face_poset`].
pub fn face_poset(k: &SimplicialComplex) -> MeetSemilattice {
    k.face_poset()
}

/// Free function form of [`SimplicialComplex::stellar_subdivision`].
pub fn stellar_subdivision(k: &SimplicialComplex, face: &[usize], apex: &str) -> Result<SimplicialComplex> {
    k.stellar_subdivision(face, apex)
}
