//! Abstract simplicial complexes on vertex set `{1, ..., m}`:
//! constructors, full subcomplexes, automorphism groups, barycentric
//! subdivision, boundary matrices and homology-sphere checks.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlinalg::{complex_homology, FGAbelianGroup, IntMatrix};

/// Default cap on the vertex count for exhaustive automorphism search.
pub const AUTOMORPHISM_VERTEX_CAP: usize = 10;

/// An abstract simplicial complex, stored by its maximal faces.
///
/// Vertices are `1..=m`; every face is a sorted list of vertices. The face
/// set (all subsets of maximal faces) is generated on demand rather than
/// stored. Every vertex must appear in some maximal face, so isolated
/// vertices are declared as singleton maximal faces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    maximal_faces: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds a complex from its maximal faces. Faces are sorted and
    /// deduplicated; faces contained in other faces are rejected.
    pub fn new(vertex_count: usize, faces: Vec<Vec<usize>>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidInput("vertex count must be positive".into()));
        }
        let mut maximal: Vec<Vec<usize>> = Vec::with_capacity(faces.len());
        for face in faces {
            if face.is_empty() {
                return Err(Error::InvalidInput("maximal faces must be non-empty".into()));
            }
            let set: BTreeSet<usize> = face.iter().copied().collect();
            if set.len() != face.len() {
                return Err(Error::InvalidInput(format!(
                    "face {face:?} has repeated vertices"
                )));
            }
            if *set.iter().next_back().expect("nonempty") > vertex_count
                || *set.iter().next().expect("nonempty") < 1
            {
                return Err(Error::InvalidInput(format!(
                    "face {face:?} has vertices outside 1..={vertex_count}"
                )));
            }
            maximal.push(set.into_iter().collect());
        }
        maximal.sort();
        maximal.dedup();
        for (a, b) in maximal.iter().tuple_combinations() {
            if is_subset(a, b) || is_subset(b, a) {
                return Err(Error::InvalidInput(format!(
                    "faces {a:?} and {b:?} are nested; only maximal faces may be listed"
                )));
            }
        }
        let mut covered = vec![false; vertex_count];
        for face in &maximal {
            for &v in face {
                covered[v - 1] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(Error::InvalidInput(format!(
                "vertex {} lies in no maximal face; declare it as a singleton",
                v + 1
            )));
        }
        Ok(SimplicialComplex {
            vertex_count,
            maximal_faces: maximal,
        })
    }

    /// Number of vertices `m`.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// The maximal faces, sorted lexicographically.
    pub fn maximal_faces(&self) -> &[Vec<usize>] {
        &self.maximal_faces
    }

    /// Dimension: largest face size minus one.
    pub fn dim(&self) -> usize {
        self.maximal_faces.iter().map(|f| f.len()).max().expect("nonempty") - 1
    }

    /// `true` when the sorted vertex list is a face (a subset of some
    /// maximal face). The empty list is always a face.
    pub fn contains_face(&self, face: &[usize]) -> bool {
        debug_assert!(face.windows(2).all(|w| w[0] < w[1]));
        self.maximal_faces.iter().any(|max| is_subset(face, max))
    }

    /// All non-empty faces grouped by dimension: entry `k` lists the
    /// `k`-faces sorted lexicographically.
    pub fn faces_by_dim(&self) -> Vec<Vec<Vec<usize>>> {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); self.dim() + 1];
        for max in &self.maximal_faces {
            for k in 1..=max.len() {
                for sub in max.iter().copied().combinations(k) {
                    by_dim[k - 1].insert(sub);
                }
            }
        }
        by_dim.into_iter().map(|set| set.into_iter().collect()).collect()
    }

    /// Number of non-empty faces.
    pub fn face_count(&self) -> usize {
        self.faces_by_dim().iter().map(Vec::len).sum()
    }

    /// Boundary matrices `[d_1, ..., d_top]` of the simplicial chain
    /// complex, with `d_k: C_k -> C_(k-1)`. Basis: `k`-faces in
    /// lexicographic order; the face omitting the `i`-th vertex (0-based)
    /// of a simplex appears with sign `(-1)^i`.
    pub fn boundary_matrices(&self) -> Vec<IntMatrix> {
        let faces = self.faces_by_dim();
        (1..faces.len())
            .map(|k| {
                let rows = &faces[k - 1];
                let cols = &faces[k];
                let mut d = IntMatrix::zeros(rows.len(), cols.len());
                for (j, simplex) in cols.iter().enumerate() {
                    let mut sign = 1i64;
                    for omit in 0..simplex.len() {
                        let mut sub = simplex.clone();
                        sub.remove(omit);
                        let i = rows.binary_search(&sub).expect("boundary face present");
                        d[(i, j)] = sign.into();
                        sign = -sign;
                    }
                }
                d
            })
            .collect()
    }

    /// Simplicial homology `[H_0, ..., H_top]` with integer coefficients
    /// (non-reduced).
    pub fn homology(&self) -> Result<Vec<FGAbelianGroup>> {
        let n0 = self.faces_by_dim()[0].len();
        complex_homology(n0, &self.boundary_matrices())
    }

    /// Parses the JSON form `{"vertices": m, "maximal_faces": [[1,2],...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ComplexJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("malformed complex JSON: {e}")))?;
        SimplicialComplex::new(raw.vertices, raw.maximal_faces)
    }

    /// Serializes to the JSON form accepted by [`Self::from_json`].
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ComplexJson {
            vertices: self.vertex_count,
            maximal_faces: self.maximal_faces.clone(),
        })
        .expect("complex serializes")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimplicialComplex(m = {}, maximal = {:?})",
            self.vertex_count, self.maximal_faces
        )
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    vertices: usize,
    maximal_faces: Vec<Vec<usize>>,
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // Both sorted; merge scan.
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// A permutation of the vertex set `{1, ..., m}`, stored as the image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPermutation {
    image: Vec<usize>,
}

impl VertexPermutation {
    /// Wraps an image list after checking bijectivity.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let m = image.len();
        let mut seen = vec![false; m];
        for &v in &image {
            if v < 1 || v > m || seen[v - 1] {
                return Err(Error::InvalidInput(format!(
                    "{image:?} is not a permutation of 1..={m}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(VertexPermutation { image })
    }

    pub fn identity(m: usize) -> Self {
        VertexPermutation {
            image: (1..=m).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Image of a single vertex.
    pub fn apply(&self, v: usize) -> usize {
        self.image[v - 1]
    }

    /// Image of a sorted vertex list, re-sorted.
    pub fn apply_face(&self, face: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = face.iter().map(|&v| self.apply(v)).collect();
        out.sort_unstable();
        out
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &VertexPermutation) -> VertexPermutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        VertexPermutation {
            image: other.image.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> VertexPermutation {
        let mut image = vec![0; self.degree()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v - 1] = i + 1;
        }
        VertexPermutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

/// Boundary of the `n`-gon: `n` vertices, edges `{i, i+1}` and `{1, n}`.
pub fn polygon_boundary(n: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "polygon boundary requires n >= 3, got {n}"
        )));
    }
    let mut edges: Vec<Vec<usize>> = (1..n).map(|i| vec![i, i + 1]).collect();
    edges.push(vec![1, n]);
    SimplicialComplex::new(n, edges)
}

/// `n` isolated points.
pub fn discrete_complex(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::InvalidInput(format!(
            "discrete complex requires n >= 1, got {n}"
        )));
    }
    SimplicialComplex::new(n, (1..=n).map(|i| vec![i]).collect())
}

/// A full subcomplex `K_I` together with the vertex re-indexing.
#[derive(Clone, Debug)]
pub struct FullSubcomplex {
    /// The subcomplex on vertices `1..=|I|`.
    pub complex: SimplicialComplex,
    /// `vertices[new - 1]` is the original vertex carried to `new`.
    pub vertices: Vec<usize>,
}

impl FullSubcomplex {
    /// Original vertex behind a re-indexed one.
    pub fn old_vertex(&self, new: usize) -> usize {
        self.vertices[new - 1]
    }

    /// Re-indexed vertex of an original one, if it lies in `I`.
    pub fn new_vertex(&self, old: usize) -> Option<usize> {
        self.vertices.binary_search(&old).ok().map(|i| i + 1)
    }
}

/// The full subcomplex on vertex subset `I`: faces are `{t ∩ I : t ∈ K}`
/// minus the empty set, with vertices re-indexed to `1..=|I|`.
pub fn full_subcomplex(k: &SimplicialComplex, i_set: &[usize]) -> Result<FullSubcomplex> {
    let vertices: Vec<usize> = {
        let set: BTreeSet<usize> = i_set.iter().copied().collect();
        if set.len() != i_set.len() {
            return Err(Error::InvalidInput(format!(
                "vertex subset {i_set:?} has duplicates"
            )));
        }
        set.into_iter().collect()
    };
    if vertices.is_empty() {
        return Err(Error::InvalidInput("vertex subset must be non-empty".into()));
    }
    if vertices[vertices.len() - 1] > k.vertex_count() || vertices[0] < 1 {
        return Err(Error::InvalidInput(format!(
            "vertex subset {i_set:?} is not contained in 1..={}",
            k.vertex_count()
        )));
    }
    // Intersections of maximal faces with I; keep the maximal ones.
    let mut intersections: Vec<Vec<usize>> = k
        .maximal_faces()
        .iter()
        .map(|f| f.iter().copied().filter(|v| vertices.contains(v)).collect())
        .filter(|f: &Vec<usize>| !f.is_empty())
        .collect();
    intersections.sort();
    intersections.dedup();
    let maximal: Vec<Vec<usize>> = intersections
        .iter()
        .filter(|f| {
            !intersections
                .iter()
                .any(|g| g.len() > f.len() && is_subset(f, g))
        })
        .cloned()
        .collect();
    let renumber = |f: &Vec<usize>| -> Vec<usize> {
        f.iter()
            .map(|v| vertices.binary_search(v).expect("vertex in I") + 1)
            .collect()
    };
    // Every vertex of I lies in some maximal face of K, hence in some
    // intersection, so the coverage invariant holds automatically.
    let complex = SimplicialComplex::new(vertices.len(), maximal.iter().map(renumber).collect())?;
    Ok(FullSubcomplex { complex, vertices })
}

/// All vertex permutations preserving the maximal-face set, by exhaustive
/// search in lexicographic order of the image lists.
///
/// The result is re-checked to contain the identity and be closed under
/// composition and inverses.
pub fn automorphism_group(k: &SimplicialComplex) -> Result<Vec<VertexPermutation>> {
    automorphism_group_capped(k, AUTOMORPHISM_VERTEX_CAP)
}

/// [`automorphism_group`] with an explicit vertex cap.
pub fn automorphism_group_capped(
    k: &SimplicialComplex,
    cap: usize,
) -> Result<Vec<VertexPermutation>> {
    let m = k.vertex_count();
    if m > cap {
        return Err(Error::ResourceLimit(format!(
            "automorphism search is exhaustive and capped at {cap} vertices; the complex has {m}"
        )));
    }
    let max_set: BTreeSet<&Vec<usize>> = k.maximal_faces().iter().collect();
    let group: Vec<VertexPermutation> = (1..=m)
        .permutations(m)
        .map(|image| VertexPermutation { image })
        .filter(|p| {
            k.maximal_faces()
                .iter()
                .all(|f| max_set.contains(&p.apply_face(f)))
        })
        .collect();
    // Sanity: a permutation group computed correctly contains the identity
    // and is closed under composition and inverses.
    let members: BTreeSet<Vec<usize>> = group.iter().map(|p| p.image.clone()).collect();
    if !members.contains(&VertexPermutation::identity(m).image) {
        return Err(Error::Verification(
            "automorphism set is missing the identity".into(),
        ));
    }
    for p in &group {
        if !members.contains(&p.inverse().image) {
            return Err(Error::Verification(format!(
                "automorphism set is not closed under inverse of {:?}",
                p.image
            )));
        }
        for q in &group {
            if !members.contains(&p.compose(q).image) {
                return Err(Error::Verification(format!(
                    "automorphism set is not closed under {:?} ∘ {:?}",
                    p.image, q.image
                )));
            }
        }
    }
    Ok(group)
}

/// Barycentric subdivision: one vertex per non-empty face of `K`, one face
/// per chain of strict inclusions. Vertices are numbered by listing the
/// faces of `K` in (dimension, lexicographic) order.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    let faces: Vec<Vec<usize>> = k.faces_by_dim().into_iter().flatten().collect();
    let index_of = |f: &[usize]| -> usize {
        faces
            .iter()
            .position(|g| g.as_slice() == f)
            .expect("face indexed")
            + 1
    };
    // Maximal chains add one vertex at a time and end at a maximal face,
    // so they correspond to orderings of each maximal face.
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for max in k.maximal_faces() {
        for order in max.iter().copied().permutations(max.len()) {
            let chain: Vec<usize> = (1..=order.len())
                .map(|r| {
                    let mut prefix = order[..r].to_vec();
                    prefix.sort_unstable();
                    index_of(&prefix)
                })
                .collect();
            chains.push(chain);
        }
    }
    SimplicialComplex::new(faces.len(), chains)
}

/// Outcome of [`homology_sphere_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereReport {
    /// Whether `|K|` is connected (rank of `H_0` equals 1).
    pub is_connected: bool,
    /// Non-reduced integer homology `[H_0, ..., H_top]`.
    pub homology: Vec<FGAbelianGroup>,
    /// For `n = 2` only: whether `K` is a connected graph with every
    /// vertex of degree 2, i.e. a polygon boundary.
    pub polygon_criterion: Option<bool>,
    /// Whether the homology matches the `(n-1)`-sphere; for `n = 2` the
    /// polygon criterion must hold as well.
    pub matches_sphere: bool,
}

/// Checks whether `K` has the homology of `S^(n-1)`, the necessary
/// condition for the associated cubical complex to be a closed
/// `n`-manifold. Uses non-reduced groups: `S^0` has `H_0 = Z^2`; for
/// `n >= 2` the sphere has `H_0 = H_(n-1) = Z` and nothing else.
pub fn homology_sphere_report(k: &SimplicialComplex, n: usize) -> Result<SphereReport> {
    if n < 1 {
        return Err(Error::InvalidInput("sphere dimension requires n >= 1".into()));
    }
    let homology = k.homology()?;
    let is_connected = homology[0] == FGAbelianGroup::free(1);
    let expected = |deg: usize| -> FGAbelianGroup {
        if n == 1 && deg == 0 {
            FGAbelianGroup::free(2)
        } else if deg == 0 || deg + 1 == n {
            FGAbelianGroup::free(1)
        } else {
            FGAbelianGroup::trivial()
        }
    };
    let mut matches = (0..homology.len().max(n)).all(|deg| {
        let actual = homology.get(deg).cloned().unwrap_or_else(FGAbelianGroup::trivial);
        actual == expected(deg)
    });
    let polygon_criterion = (n == 2).then(|| {
        let all_edges = k.maximal_faces().iter().all(|f| f.len() == 2);
        let mut degree = vec![0usize; k.vertex_count()];
        for f in k.maximal_faces() {
            if f.len() == 2 {
                degree[f[0] - 1] += 1;
                degree[f[1] - 1] += 1;
            }
        }
        all_edges && is_connected && degree.iter().all(|&d| d == 2)
    });
    if let Some(ok) = polygon_criterion {
        matches = matches && ok;
    }
    Ok(SphereReport {
        is_connected,
        homology,
        polygon_criterion,
        matches_sphere: matches,
    })
}
