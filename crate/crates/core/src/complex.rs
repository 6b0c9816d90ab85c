//! Simplicial complexes on `[n] = {1, ..., n}` represented by their facets.
//!
//! Faces are sorted vertex lists. When `n <= 64` the face enumerations behind
//! f-vectors and ridge tallies run over `u64` vertex masks; larger vertex sets
//! use the sorted-list representation directly.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology;
use crate::rational::Rational;

pub type Face = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("vertex {vertex} outside [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("a complex needs at least one face (use the empty face for the complex {{∅}})")]
    NoFaces,
    #[error("complex is not pure")]
    NotPure,
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Face),
    #[error("complex of dimension {0} has no ridges to average over")]
    NoRidges(isize),
    #[error("vertex-decomposability search exceeded its budget of {0} nodes")]
    BudgetExceeded(usize),
}

/// A finite simplicial complex stored by facets, sorted within and across faces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Canonical facet form of the complex generated by `faces`.
    pub fn new<I, F>(n: usize, faces: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let mut all: Vec<Face> = Vec::new();
        for face in faces {
            let mut f: Face = face.into_iter().collect();
            if let Some(&vertex) = f.iter().find(|&&v| v == 0 || v > n) {
                return Err(ComplexError::VertexOutOfRange { vertex, n });
            }
            f.sort_unstable();
            f.dedup();
            all.push(f);
        }
        if all.is_empty() {
            return Err(ComplexError::NoFaces);
        }
        Ok(Self::from_faces_unchecked(n, all))
    }

    /// Faces are assumed sorted and within `[n]`.
    pub(crate) fn from_faces_unchecked(n: usize, mut faces: Vec<Face>) -> Self {
        // longest first, so a face can only be dominated by something already kept
        faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !facets.iter().any(|g| g.len() > f.len() && is_subset(&f, g)) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { n, facets }
    }

    /// The full simplex on `vertices`, inside `[n]`.
    pub fn simplex(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self, ComplexError> {
        Self::new(n, [vertices.into_iter().collect::<Vec<_>>()])
    }

    /// The boundary of the simplex on `[k]`.
    pub fn simplex_boundary(k: usize) -> Self {
        let facets = (1..=k).map(|skip| (1..=k).filter(|&v| v != skip).collect()).collect();
        Self::from_faces_unchecked(k, facets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// `-1` for the complex `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let k = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == k)
    }

    fn require_pure(&self) -> Result<(), ComplexError> {
        if self.is_pure() {
            Ok(())
        } else {
            Err(ComplexError::NotPure)
        }
    }

    /// Vertices lying in some face, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.facets.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|g| is_subset(face, g))
    }

    fn masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| self.facets.iter().map(|f| face_to_mask(f)).collect())
    }

    /// `(f_{-1}, f_0, ..., f_{dim})`.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.masks() {
            Some(masks) => face_counts(&masks, self.dim()),
            None => face_counts(&self.facets, self.dim()),
        }
    }

    /// All faces of dimension `k`, sorted.
    pub fn faces_of_dim(&self, k: isize) -> Vec<Face> {
        if k < -1 {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let set: BTreeSet<Face> = match self.masks() {
            Some(masks) => masks
                .iter()
                .flat_map(|m| subsets_of_size(*m, size))
                .map(mask_to_face)
                .collect(),
            None => self
                .facets
                .iter()
                .flat_map(|f| VertexSet::subsets(f).into_iter().filter(|s| s.len() == size))
                .collect(),
        };
        set.into_iter().collect()
    }

    /// `(h_0, ..., h_d)` for a pure `(d-1)`-dimensional complex.
    pub fn h_vector(&self) -> Result<Vec<i64>, ComplexError> {
        self.require_pure()?;
        let f: Vec<i64> = self.f_vector().into_iter().map(|x| x as i64).collect();
        Ok(h_from_f(&f))
    }

    /// `lk(F) = { G : G ∩ F = ∅, G ∪ F ∈ Δ }`, on the same vertex set.
    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex, ComplexError> {
        let mut face = face.to_vec();
        face.sort_unstable();
        let faces: Vec<Face> = self
            .facets
            .iter()
            .filter(|g| is_subset(&face, g))
            .map(|g| g.iter().copied().filter(|v| face.binary_search(v).is_err()).collect())
            .collect();
        if faces.is_empty() {
            return Err(ComplexError::NotAFace(face));
        }
        Ok(Self::from_faces_unchecked(self.n, faces))
    }

    /// `Δ \ v = { G ∈ Δ : v ∉ G }`.
    pub fn delete_vertex(&self, v: usize) -> SimplicialComplex {
        let faces = self
            .facets
            .iter()
            .map(|g| g.iter().copied().filter(|&w| w != v).collect())
            .collect();
        Self::from_faces_unchecked(self.n, faces)
    }

    /// Induced subcomplex on `vertices` (sorted), keeping the ambient `[n]`.
    pub fn induced(&self, vertices: &[usize]) -> SimplicialComplex {
        let faces = self
            .facets
            .iter()
            .map(|g| g.iter().copied().filter(|v| vertices.binary_search(v).is_ok()).collect())
            .collect();
        Self::from_faces_unchecked(self.n, faces)
    }

    /// Join with the simplex on the new vertices `n+1, ..., n+k`.
    pub fn join_simplex(&self, k: usize) -> SimplicialComplex {
        let extra: Vec<usize> = (self.n + 1..=self.n + k).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().chain(extra.iter()).copied().collect())
            .collect();
        Self::from_faces_unchecked(self.n + k, facets)
    }

    /// Relabel vertices through `map` into `[new_n]`.
    pub fn relabel(&self, new_n: usize, map: impl Fn(usize) -> usize) -> Result<Self, ComplexError> {
        Self::new(new_n, self.facets.iter().map(|f| f.iter().map(|&v| map(v)).collect::<Vec<_>>()))
    }

    /// Closed under `F ↦ F \ {i} ∪ {j}` for `i ∈ F`, `i < j ≤ n`, `j ∉ F`.
    pub fn is_shifted(&self) -> bool {
        // checking facets suffices: a shift of a subface is a subface of a shift or of the facet itself
        self.facets.iter().all(|f| {
            f.iter().all(|&i| {
                (i + 1..=self.n).filter(|j| f.binary_search(j).is_err()).all(|j| {
                    let mut g: Face = f.iter().copied().filter(|&v| v != i).collect();
                    g.push(j);
                    g.sort_unstable();
                    self.contains_face(&g)
                })
            })
        })
    }

    /// Ridge degrees of a pure complex of dimension at least 0.
    pub fn ridge_degree_map(&self) -> Result<RidgeReport, ComplexError> {
        self.require_pure()?;
        if self.dim() < 0 {
            return Err(ComplexError::NoRidges(self.dim()));
        }
        let ridges: BTreeMap<Face, usize> = match self.masks() {
            Some(masks) => ridge_incidence(&masks)
                .into_iter()
                .map(|(k, v)| (mask_to_face(k), v.len()))
                .collect(),
            None => ridge_incidence(&self.facets).into_iter().map(|(k, v)| (k, v.len())).collect(),
        };
        let total_excess = ridges.values().map(|&d| d.saturating_sub(2)).sum();
        let ridge_count = ridges.len();
        Ok(RidgeReport { ridges, total_excess, ridge_count })
    }

    /// `D(Δ)`: total ridge excess over the number of ridges, for pure complexes of dimension ≥ 1.
    pub fn singularity_index(&self) -> Result<Rational, ComplexError> {
        self.require_pure()?;
        if self.dim() < 1 {
            return Err(ComplexError::NoRidges(self.dim()));
        }
        let report = self.ridge_degree_map()?;
        Ok(Rational::new(report.total_excess as u64, report.ridge_count as u64))
    }

    /// Facets connected through shared ridges.
    pub fn is_strongly_connected(&self) -> Result<bool, ComplexError> {
        self.require_pure()?;
        if self.facets.len() == 1 {
            return Ok(true);
        }
        let groups: Vec<Vec<usize>> = match self.masks() {
            Some(masks) => ridge_incidence(&masks).into_values().collect(),
            None => ridge_incidence(&self.facets).into_values().collect(),
        };
        let mut uf = UnionFind::new(self.facets.len());
        for g in groups {
            for w in g.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let root = uf.find(0);
        Ok((1..self.facets.len()).all(|i| uf.find(i) == root))
    }

    /// Strongly connected with every ridge in at most two facets.
    pub fn is_pseudomanifold(&self) -> Result<bool, ComplexError> {
        if !self.is_strongly_connected()? {
            return Ok(false);
        }
        let report = self.ridge_degree_map()?;
        Ok(report.max_degree() <= 2)
    }

    pub fn vertex_decomposable(&self, options: &VdOptions) -> Result<VdOutcome, ComplexError> {
        self.require_pure()?;
        let mut search = VdSearch { options, memo: HashMap::new(), nodes: 0, h_recursion_ok: true };
        let found = search.run(self, options.hint)?;
        Ok(VdOutcome {
            decomposable: found.is_some(),
            shedding: found.unwrap_or_default(),
            h_recursion_ok: search.h_recursion_ok,
            nodes: search.nodes,
        })
    }

    /// Ball/sphere verdict through shellability (strict vertex decomposability) and ridge degrees.
    pub fn classify_ball_sphere(&self, budget: usize) -> Result<Classification, ComplexError> {
        self.require_pure()?;
        if !self.is_pseudomanifold()? {
            return Ok(Classification { verdict: BallSphere::Neither, homology_agrees: None });
        }
        let options = VdOptions { mode: VdMode::Strict, hint: None, budget };
        let decomposable = match self.vertex_decomposable(&options) {
            Ok(outcome) => outcome.decomposable,
            Err(ComplexError::BudgetExceeded(_)) => false,
            Err(e) => return Err(e),
        };
        if !decomposable {
            return Ok(Classification { verdict: BallSphere::Unknown, homology_agrees: None });
        }
        let report = self.ridge_degree_map()?;
        let boundary = report.ridges.values().any(|&d| d == 1);
        let verdict = if boundary { BallSphere::Ball } else { BallSphere::Sphere };
        let betti = homology::reduced_betti(self);
        let top = betti.len() - 1;
        let agrees = match verdict {
            BallSphere::Sphere => betti[top] == 1 && betti[..top].iter().all(|&b| b == 0),
            _ => betti.iter().all(|&b| b == 0),
        };
        Ok(Classification { verdict, homology_agrees: Some(agrees) })
    }
}

/// Ridge degrees of a pure complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RidgeReport {
    pub ridges: BTreeMap<Face, usize>,
    /// `Σ max{0, deg - 2}` over ridges.
    pub total_excess: usize,
    pub ridge_count: usize,
}

impl RidgeReport {
    pub fn max_degree(&self) -> usize {
        self.ridges.values().copied().max().unwrap_or(0)
    }

    pub fn degree(&self, ridge: &[usize]) -> Option<usize> {
        self.ridges.get(ridge).copied()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BallSphere {
    Sphere,
    Ball,
    Neither,
    Unknown,
}

impl std::fmt::Display for BallSphere {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BallSphere::Sphere => "sphere",
            BallSphere::Ball => "ball",
            BallSphere::Neither => "neither",
            BallSphere::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: BallSphere,
    /// Reduced rational homology check: `None` when no ball/sphere verdict was reached.
    pub homology_agrees: Option<bool>,
}

/// How the shedding recursion treats the deletion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum VdMode {
    /// Link and deletion vertex-decomposable, base case `{∅}`.
    #[default]
    Literal,
    /// Additionally the deletion must be pure of the same dimension.
    Strict,
}

#[derive(Clone, Debug)]
pub struct VdOptions {
    pub mode: VdMode,
    /// Vertex tried first at the top level.
    pub hint: Option<usize>,
    /// Maximum number of expanded search nodes.
    pub budget: usize,
}

impl Default for VdOptions {
    fn default() -> Self {
        VdOptions { mode: VdMode::Literal, hint: None, budget: 200_000 }
    }
}

impl VdOptions {
    pub fn strict() -> Self {
        VdOptions { mode: VdMode::Strict, ..Default::default() }
    }

    pub fn with_hint(mut self, v: usize) -> Self {
        self.hint = Some(v);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VdOutcome {
    pub decomposable: bool,
    /// Shedding vertices along the deletion chain `Δ, Δ\v_1, (Δ\v_1)\v_2, ...`.
    pub shedding: Vec<usize>,
    /// `h_i(Δ) = h_i(Δ\v) + h_{i-1}(lk v)` held on every certified shedding step with pure pieces.
    pub h_recursion_ok: bool,
    pub nodes: usize,
}

struct VdSearch<'a> {
    options: &'a VdOptions,
    memo: HashMap<Vec<Face>, Option<Vec<usize>>>,
    nodes: usize,
    h_recursion_ok: bool,
}

impl VdSearch<'_> {
    fn run(&mut self, c: &SimplicialComplex, hint: Option<usize>) -> Result<Option<Vec<usize>>, ComplexError> {
        if c.facets.len() == 1 {
            // a simplex (including {∅}) sheds its vertices in any order
            return Ok(Some(c.facets[0].clone()));
        }
        if let Some(hit) = self.memo.get(&c.facets) {
            return Ok(hit.clone());
        }
        self.nodes += 1;
        if self.nodes > self.options.budget {
            return Err(ComplexError::BudgetExceeded(self.options.budget));
        }
        let mut order = c.vertices();
        if let Some(h) = hint {
            if let Some(pos) = order.iter().position(|&v| v == h) {
                order.remove(pos);
                order.insert(0, h);
            }
        }
        let mut found = None;
        for v in order {
            let deletion = c.delete_vertex(v);
            if self.options.mode == VdMode::Strict && !(deletion.is_pure() && deletion.dim() == c.dim()) {
                continue;
            }
            let link = c.link(&[v]).expect("vertex of the complex");
            if self.run(&link, None)?.is_none() {
                continue;
            }
            if let Some(rest) = self.run(&deletion, None)? {
                self.check_h_recursion(c, &deletion, &link);
                let mut seq = vec![v];
                seq.extend(rest);
                found = Some(seq);
                break;
            }
        }
        self.memo.insert(c.facets.clone(), found.clone());
        Ok(found)
    }

    fn check_h_recursion(&mut self, c: &SimplicialComplex, deletion: &SimplicialComplex, link: &SimplicialComplex) {
        let comparable = c.is_pure()
            && deletion.is_pure()
            && link.is_pure()
            && deletion.dim() == c.dim()
            && link.dim() == c.dim() - 1;
        if !comparable {
            return;
        }
        let h = c.h_vector().unwrap();
        let hd = deletion.h_vector().unwrap();
        let hl = link.h_vector().unwrap();
        let ok = (0..h.len()).all(|i| {
            let from_link = if i == 0 { 0 } else { hl.get(i - 1).copied().unwrap_or(0) };
            h[i] == hd[i] + from_link
        });
        self.h_recursion_ok &= ok;
    }
}

/// `h` from `f = (f_{-1}, ..., f_{d-1})` via `Σ f_{i-1}(t-1)^{d-i} = Σ h_i t^{d-i}`.
pub fn h_from_f(f: &[i64]) -> Vec<i64> {
    let d = f.len() - 1;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) as i64 * f[i]
                })
                .sum()
        })
        .collect()
}

/// Inverse of [`h_from_f`]: `f_{j-1} = Σ_{i ≤ j} C(d-i, j-i) h_i`.
pub fn f_from_h(h: &[i64]) -> Vec<i64> {
    let d = h.len() - 1;
    (0..=d)
        .map(|j| (0..=j).map(|i| binomial(d - i, j - i) as i64 * h[i]).sum())
        .collect()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

pub(crate) fn face_to_mask(face: &[usize]) -> u64 {
    face.iter().fold(0u64, |acc, &v| acc | (1u64 << (v - 1)))
}

pub(crate) fn mask_to_face(mut mask: u64) -> Face {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let bit = mask.trailing_zeros() as usize;
        out.push(bit + 1);
        mask &= mask - 1;
    }
    out
}

fn subsets_of_size(mask: u64, size: usize) -> Vec<u64> {
    VertexSet::subsets(&mask)
        .into_iter()
        .filter(|s| s.count_ones() as usize == size)
        .collect()
}

/// A vertex set in either representation.
trait VertexSet: Clone + Eq + Hash {
    fn size(&self) -> usize;
    fn codim_one(&self) -> Vec<Self>;
    fn subsets(&self) -> Vec<Self>;
}

impl VertexSet for u64 {
    fn size(&self) -> usize {
        self.count_ones() as usize
    }

    fn codim_one(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.size());
        let mut rest = *self;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            out.push(self ^ bit);
        }
        out
    }

    fn subsets(&self) -> Vec<u64> {
        // standard submask walk
        let mut out = Vec::with_capacity(1 << self.size());
        let mut sub = *self;
        loop {
            out.push(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & self;
        }
        out
    }
}

impl VertexSet for Face {
    fn size(&self) -> usize {
        self.len()
    }

    fn codim_one(&self) -> Vec<Face> {
        (0..self.len())
            .map(|skip| {
                self.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect()
    }

    fn subsets(&self) -> Vec<Face> {
        let k = self.len();
        (0u64..(1u64 << k))
            .map(|bits| (0..k).filter(|b| bits >> b & 1 == 1).map(|b| self[b]).collect())
            .collect()
    }
}

fn face_counts<S: VertexSet>(facets: &[S], dim: isize) -> Vec<usize> {
    let all: std::collections::HashSet<S> = facets.iter().flat_map(VertexSet::subsets).collect();
    let mut f = vec![0usize; (dim + 2) as usize];
    for s in &all {
        f[s.size()] += 1;
    }
    f
}

/// Map from ridge to the indices of the facets containing it.
fn ridge_incidence<S: VertexSet>(facets: &[S]) -> HashMap<S, Vec<usize>> {
    let mut map: HashMap<S, Vec<usize>> = HashMap::new();
    for (idx, f) in facets.iter().enumerate() {
        for r in f.codim_one() {
            map.entry(r).or_default().push(idx);
        }
    }
    map
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
