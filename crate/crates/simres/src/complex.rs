//! Simplicial complexes in facet representation, labeled complexes, and the
//! Stanley-Reisner translation.
//!
//! Faces are bitmasks over a vertex universe of at most 64 names, which keeps
//! subcomplex extraction, links and skeletons cheap at the scales the rest of
//! the crate works at.
//!
//! The void complex (no faces at all) and the irrelevant complex (only the
//! face `{}`) are distinct values: the irrelevant complex has reduced homology
//! in degree -1, the void complex has none anywhere.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, VarContext};

/// Hard limit imposed by the bitmask face representation.
pub const MAX_VERTICES: usize = 64;

/// A face: bit `i` set means vertex `i` is in the face.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Face(pub u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_vertices(vs: impl IntoIterator<Item = usize>) -> Face {
        let mut bits = 0u64;
        for v in vs {
            assert!(v < MAX_VERTICES, "vertex index {v} out of range");
            bits |= 1 << v;
        }
        Face(bits)
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        (0..MAX_VERTICES).filter(move |v| self.0 >> v & 1 == 1)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> i64 {
        self.len() as i64 - 1
    }

    pub fn contains_vertex(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with_vertex(self, v: usize) -> Face {
        Face(self.0 | 1 << v)
    }

    pub fn without_vertex(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

/// A simplicial complex over a named vertex universe, stored by its facets
/// (the inclusion-maximal faces).
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_names: Arc<Vec<String>>,
    /// Pairwise incomparable. Empty list = the void complex; the single
    /// facet `{}` = the irrelevant complex.
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds a complex from candidate facets; faces dominated by another
    /// are silently absorbed. An empty candidate list yields the void
    /// complex.
    pub fn from_facets<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        facets: impl IntoIterator<Item = Face>,
    ) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VERTICES {
            return Err(Error::ResourceCap(format!(
                "{} vertices exceed the {MAX_VERTICES}-vertex limit",
                names.len()
            )));
        }
        {
            let mut seen = HashSet::new();
            for n in &names {
                if !seen.insert(n) {
                    return Err(Error::InvalidInput(format!("duplicate vertex name {n:?}")));
                }
            }
        }
        let universe = Face::from_vertices(0..names.len());
        let mut cands: Vec<Face> = facets.into_iter().collect();
        for f in &cands {
            if !f.is_subset_of(universe) {
                return Err(Error::InvalidInput(format!(
                    "face {f:?} uses vertices outside the {}-vertex universe",
                    names.len()
                )));
            }
        }
        cands.sort();
        cands.dedup();
        let maximal: Vec<Face> = cands
            .iter()
            .filter(|f| !cands.iter().any(|g| g != *f && f.is_subset_of(*g)))
            .copied()
            .collect();
        Ok(SimplicialComplex {
            vertex_names: Arc::new(names),
            facets: maximal,
        })
    }

    /// Convenience constructor taking facets as vertex-name lists.
    pub fn from_named_facets(
        names: &[&str],
        facets: &[&[&str]],
    ) -> Result<Self> {
        let index = |n: &str| -> Result<usize> {
            names
                .iter()
                .position(|x| *x == n)
                .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {n:?}")))
        };
        let mut masks = Vec::new();
        for f in facets {
            let vs: Result<Vec<usize>> = f.iter().map(|n| index(n)).collect();
            masks.push(Face::from_vertices(vs?));
        }
        Self::from_facets(names.iter().map(|s| s.to_string()), masks)
    }

    /// The void complex: no faces at all.
    pub fn void<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        SimplicialComplex {
            vertex_names: Arc::new(names.into_iter().map(Into::into).collect()),
            facets: Vec::new(),
        }
    }

    /// The irrelevant complex: the single face `{}`.
    pub fn irrelevant<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        SimplicialComplex {
            vertex_names: Arc::new(names.into_iter().map(Into::into).collect()),
            facets: vec![Face::EMPTY],
        }
    }

    /// The full simplex on the whole universe.
    pub fn simplex<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        Self::from_facets(names, [Face::from_vertices(0..n)])
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn universe_len(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [Face::EMPTY]
    }

    /// Dimension of the largest face; `None` for the void complex, `Some(-1)`
    /// for the irrelevant complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset_of(*g))
    }

    /// The vertices actually present as 0-faces (a subset of the universe).
    pub fn vertices(&self) -> Vec<usize> {
        let mut bits = 0u64;
        for f in &self.facets {
            bits |= f.0;
        }
        Face(bits).vertices().collect()
    }

    /// Every face, including `{}` for nonvoid complexes, sorted by
    /// (dimension, vertex list).
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        let mut stack: Vec<Face> = self.facets.clone();
        while let Some(f) = stack.pop() {
            if !seen.insert(f) {
                continue;
            }
            for v in f.vertices() {
                stack.push(f.without_vertex(v));
            }
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        out.sort_by_key(|f| (f.len(), sorted_key(*f)));
        out
    }

    /// All faces with exactly `d + 1` vertices; empty when there are none.
    pub fn faces_of_dim(&self, d: i64) -> Vec<Face> {
        if d < -1 {
            return Vec::new();
        }
        self.faces()
            .into_iter()
            .filter(|f| f.dim() == d)
            .collect()
    }

    /// True iff exactly one facet contains `sigma` and `sigma` is not that
    /// facet itself. The empty face is never free: removing everything above
    /// it would empty the complex, which is not a homotopy equivalence.
    pub fn is_free_face(&self, sigma: Face) -> Result<bool> {
        if !self.contains_face(sigma) {
            return Err(Error::InvalidInput(format!("{sigma:?} is not a face")));
        }
        if sigma.is_empty() {
            return Ok(false);
        }
        let mut containing = self.facets.iter().filter(|f| sigma.is_subset_of(**f));
        match (containing.next(), containing.next()) {
            (Some(tau), None) => Ok(*tau != sigma),
            _ => Ok(false),
        }
    }

    /// Removes `sigma` and every face containing it. Errors unless `sigma`
    /// is a free face. Also reports whether the collapse was elementary
    /// (`dim tau = dim sigma + 1` for the unique containing facet `tau`).
    pub fn collapse(&self, sigma: Face) -> Result<(SimplicialComplex, bool)> {
        if !self.is_free_face(sigma)? {
            return Err(Error::Precondition(format!("{sigma:?} is not a free face")));
        }
        let tau = *self
            .facets
            .iter()
            .find(|f| sigma.is_subset_of(**f))
            .expect("free face has a containing facet");
        let elementary = tau.dim() == sigma.dim() + 1;
        let remaining: Vec<Face> = self
            .faces()
            .into_iter()
            .filter(|f| !sigma.is_subset_of(*f))
            .collect();
        let complex = SimplicialComplex::from_facets(
            self.vertex_names.iter().cloned(),
            remaining,
        )?;
        Ok((complex, elementary))
    }

    /// The subcomplex generated by all `i`-dimensional faces.
    pub fn pure_skeleton(&self, i: i64) -> Result<SimplicialComplex> {
        let dim = self.dim().unwrap_or(-1);
        if i < 0 || i > dim {
            return Err(Error::InvalidInput(format!(
                "skeleton index {i} out of range 0..={dim}"
            )));
        }
        SimplicialComplex::from_facets(self.vertex_names.iter().cloned(), self.faces_of_dim(i))
    }

    /// `lk(sigma) = { gamma : gamma ∩ sigma = {}, gamma ∪ sigma ∈ Δ }`.
    pub fn link(&self, sigma: Face) -> Result<SimplicialComplex> {
        if !self.contains_face(sigma) {
            return Err(Error::InvalidInput(format!("{sigma:?} is not a face")));
        }
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(**f))
            .map(|f| f.minus(sigma))
            .collect();
        SimplicialComplex::from_facets(self.vertex_names.iter().cloned(), facets)
    }

    /// The cone over the complex with a fresh apex vertex. The cone over the
    /// void complex is void; over the irrelevant complex it is the apex
    /// point.
    pub fn cone(&self, apex_name: &str) -> Result<SimplicialComplex> {
        let mut names: Vec<String> = self.vertex_names.iter().cloned().collect();
        names.push(apex_name.to_string());
        let apex = names.len() - 1;
        let facets: Vec<Face> = self.facets.iter().map(|f| f.with_vertex(apex)).collect();
        SimplicialComplex::from_facets(names, facets)
    }

    /// Number of faces (including `{}` when present).
    pub fn face_count(&self) -> usize {
        self.faces().len()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "<void>");
        }
        let mut list = f.debug_list();
        for facet in &self.facets {
            let names: Vec<&str> = facet
                .vertices()
                .map(|v| self.vertex_names[v].as_str())
                .collect();
            list.entry(&names);
        }
        list.finish()
    }
}

fn sorted_key(f: Face) -> Vec<usize> {
    f.vertices().collect()
}

/// A simplicial complex whose vertices carry monomial labels. The label of a
/// face is the lcm of its vertex labels; the empty face is labeled 1.
#[derive(Clone, Debug)]
pub struct LabeledComplex {
    complex: SimplicialComplex,
    labels: Vec<Monomial>,
}

impl LabeledComplex {
    pub fn new(complex: SimplicialComplex, labels: Vec<Monomial>) -> Result<Self> {
        if labels.len() != complex.universe_len() {
            return Err(Error::InvalidInput(format!(
                "{} labels for a universe of {} vertices",
                labels.len(),
                complex.universe_len()
            )));
        }
        if let Some(first) = labels.first() {
            for l in &labels[1..] {
                if first.context() != l.context() {
                    return Err(Error::ContextMismatch(
                        "vertex labels live in different contexts".into(),
                    ));
                }
            }
        }
        Ok(LabeledComplex { complex, labels })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn labels(&self) -> &[Monomial] {
        &self.labels
    }

    pub fn label(&self, vertex: usize) -> &Monomial {
        &self.labels[vertex]
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.labels[0].context()
    }

    pub fn vertex_with_label(&self, m: &Monomial) -> Option<usize> {
        self.labels.iter().position(|l| l == m)
    }

    /// lcm of the vertex labels of `f`; 1 for the empty face.
    pub fn face_label(&self, f: Face) -> Monomial {
        let mut acc = self.context().unit();
        for v in f.vertices() {
            acc = acc.lcm(&self.labels[v]).expect("labels share a context");
        }
        acc
    }

    /// The labels of the vertices actually present in the complex.
    pub fn present_labels(&self) -> Vec<Monomial> {
        self.complex.vertices().iter().map(|&v| self.labels[v].clone()).collect()
    }

    /// `Δ_{≤u}`: the faces whose label divides `u`. Since a face label
    /// divides `u` exactly when every vertex label does, this is the induced
    /// subcomplex on the qualifying vertices. When no vertex qualifies the
    /// result is the void complex.
    pub fn sub_leq(&self, u: &Monomial) -> SimplicialComplex {
        let keep: Vec<usize> = self
            .complex
            .vertices()
            .into_iter()
            .filter(|&v| self.labels[v].divides(u))
            .collect();
        if keep.is_empty() {
            return SimplicialComplex::void(self.complex.vertex_names().iter().cloned());
        }
        let mask = Face::from_vertices(keep);
        let facets: Vec<Face> = self
            .complex
            .facets()
            .iter()
            .map(|f| f.intersection(mask))
            .collect();
        SimplicialComplex::from_facets(self.complex.vertex_names().iter().cloned(), facets)
            .expect("restriction of a valid complex")
    }

    /// `Δ_{<u}`: the faces of `Δ_{≤u}` whose label differs from `u`. The
    /// faces labeled exactly `u` are upward closed inside `Δ_{≤u}`, so the
    /// result is again a complex. It keeps the empty face whenever `Δ_{≤u}`
    /// is nonvoid, so e.g. at a minimal generator it is the irrelevant
    /// complex, whose degree -1 homology feeds the first betti numbers.
    pub fn sub_lt(&self, u: &Monomial) -> SimplicialComplex {
        let leq = self.sub_leq(u);
        if leq.is_void() {
            return leq;
        }
        let faces: Vec<Face> = leq
            .faces()
            .into_iter()
            .filter(|f| self.face_label(*f) != *u)
            .collect();
        if faces.is_empty() {
            // Only reachable when every kept face, even {}, is labeled u,
            // i.e. u = 1; then Δ_{<1} has nothing left.
            return SimplicialComplex::void(self.complex.vertex_names().iter().cloned());
        }
        SimplicialComplex::from_facets(self.complex.vertex_names().iter().cloned(), faces)
            .expect("filtered faces of a valid complex")
    }
}

/// The Stanley-Reisner complex of a square-free monomial ideal: vertices are
/// the variables, faces are the subsets `A` with `∏_{i∈A} x_i ∉ I`.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_square_free() {
        return Err(Error::InvalidInput(format!(
            "Stanley-Reisner translation needs a square-free ideal, got {ideal}"
        )));
    }
    let ctx = ideal.context();
    let n = ctx.num_vars();
    if n > 25 {
        return Err(Error::ResourceCap(format!(
            "Stanley-Reisner enumeration over {n} variables exceeds the 25-variable cap"
        )));
    }
    let gens: Vec<Face> = ideal
        .mingens()
        .iter()
        .map(|g| Face::from_vertices(g.support()))
        .collect();
    let mut faces: Vec<Face> = Vec::new();
    for bits in 0..(1u64 << n) {
        let f = Face(bits);
        if !gens.iter().any(|g| g.is_subset_of(f)) {
            faces.push(f);
        }
    }
    SimplicialComplex::from_facets(ctx.names().iter().cloned(), faces)
}

/// The inverse translation: the ideal generated by the minimal non-faces of
/// the complex, over a context named after its vertices. Errors for
/// complexes that are the full simplex (zero ideal) or void.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let n = complex.universe_len();
    if n > 25 {
        return Err(Error::ResourceCap(format!(
            "Stanley-Reisner enumeration over {n} vertices exceeds the 25-vertex cap"
        )));
    }
    let ctx = VarContext::new(complex.vertex_names().iter().cloned())?;
    let mut nonfaces: Vec<Face> = (0..(1u64 << n))
        .map(Face)
        .filter(|f| !complex.contains_face(*f))
        .collect();
    nonfaces.sort_by_key(|f| f.len());
    let mut minimal: Vec<Face> = Vec::new();
    for f in nonfaces {
        if !minimal.iter().any(|g| g.is_subset_of(f)) {
            minimal.push(f);
        }
    }
    if minimal.is_empty() {
        return Err(Error::InvalidInput(
            "the full simplex has no non-faces; its Stanley-Reisner ideal is zero".into(),
        ));
    }
    let gens: Vec<Monomial> = minimal
        .iter()
        .map(|f| {
            let pairs: Vec<(usize, u64)> = f.vertices().map(|v| (v, 1)).collect();
            ctx.monomial(&pairs)
        })
        .collect();
    MonomialIdeal::new(gens)
}

/// Sorted vertex-name rendering of a face, for reports.
pub fn face_names(complex: &SimplicialComplex, f: Face) -> Vec<String> {
    let set: BTreeSet<usize> = f.vertices().collect();
    set.into_iter()
        .map(|v| complex.vertex_names()[v].clone())
        .collect()
}
