//! Graph-theoretic simplicity criteria for Leavitt path algebras, and the
//! concrete boundary-path realization for finite acyclic graphs.
//!
//! For a finite graph E the Leavitt path algebra is simple iff E satisfies
//! condition (L), meaning every closed path has an exit, and the only hereditary
//! and saturated vertex sets are ∅ and E⁰. Both criteria are decided here
//! combinatorially for any finite graph.
//!
//! For acyclic graphs the algebra is realized concretely: the free group
//! on the edges acts partially on the boundary-path space X (finite paths
//! ending in sinks, plus lone sink vertices), the carrier is finite, and
//! the resulting partial skew group ring is handed to [`crate::ring`] for
//! simplicity analysis with exact ground truth.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::group::{FreeWord, Group, GroupElem};
use crate::linalg::{PrimeField, Subspace, Vector};
use crate::paction::{pointwise_mul, AlgebraPartialAction, SetPartialAction};
use crate::ring::{OracleOutcome, RingError, SkewRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    DuplicateVertex(String),
    DuplicateEdge(String),
    UnknownVertex(String),
    Parse { line: usize, text: String },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::DuplicateVertex(v) => write!(f, "vertex {v} declared twice"),
            GraphError::DuplicateEdge(e) => write!(f, "edge {e} declared twice"),
            GraphError::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            GraphError::Parse { line, text } => write!(f, "cannot parse line {line}: {text:?}"),
        }
    }
}

impl std::error::Error for GraphError {}

/// A directed edge; `src` and `rng` index into the vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub src: usize,
    pub rng: usize,
}

/// A finite directed graph (E⁰, E¹, s, r). Parallel edges and isolated
/// vertices are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut edge_names = BTreeSet::new();
        for e in &edges {
            if !edge_names.insert(e.name.clone()) {
                return Err(GraphError::DuplicateEdge(e.name.clone()));
            }
            if e.src >= vertices.len() || e.rng >= vertices.len() {
                return Err(GraphError::UnknownVertex(format!("#{}", e.src.max(e.rng))));
            }
        }
        Ok(Graph { vertices, edges })
    }

    /// Builds a graph from named edges, declaring vertices on first use.
    pub fn from_named_edges(
        declared_vertices: &[&str],
        edges: &[(&str, &str, &str)],
    ) -> Result<Self, GraphError> {
        let mut vertices: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let add = |name: &str, vertices: &mut Vec<String>, index: &mut BTreeMap<String, usize>| {
            if !index.contains_key(name) {
                index.insert(name.to_string(), vertices.len());
                vertices.push(name.to_string());
            }
            index[name]
        };
        for v in declared_vertices {
            add(v, &mut vertices, &mut index);
        }
        let mut built = Vec::new();
        for (name, src, rng) in edges {
            let s = add(src, &mut vertices, &mut index);
            let r = add(rng, &mut vertices, &mut index);
            built.push(Edge { name: name.to_string(), src: s, rng: r });
        }
        Graph::new(vertices, built)
    }

    /// Parses the compact text form: one edge per line `e: v1 -> v2`, and
    /// lone-vertex lines `v;`. Blank lines and `#` comments are skipped.
    pub fn parse_text(input: &str) -> Result<Self, GraphError> {
        let mut vertices: Vec<&str> = Vec::new();
        let mut edges: Vec<(String, String, String)> = Vec::new();
        for (lineno, raw) in input.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(v) = line.strip_suffix(';') {
                let v = v.trim();
                if v.is_empty() || v.contains(|c: char| c.is_whitespace()) {
                    return Err(GraphError::Parse { line: lineno + 1, text: raw.to_string() });
                }
                vertices.push(v);
                continue;
            }
            let parse = || -> Option<(String, String, String)> {
                let (name, rest) = line.split_once(':')?;
                let (src, rng) = rest.split_once("->")?;
                let (name, src, rng) = (name.trim(), src.trim(), rng.trim());
                if name.is_empty() || src.is_empty() || rng.is_empty() {
                    return None;
                }
                Some((name.to_string(), src.to_string(), rng.to_string()))
            };
            match parse() {
                Some(e) => edges.push(e),
                None => return Err(GraphError::Parse { line: lineno + 1, text: raw.to_string() }),
            }
        }
        let edge_refs: Vec<(&str, &str, &str)> =
            edges.iter().map(|(n, s, r)| (n.as_str(), s.as_str(), r.as_str())).collect();
        Graph::from_named_edges(&vertices, &edge_refs)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_names(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.name.clone()).collect()
    }

    pub fn out_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].src == v).collect()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.src == v).count()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_degree(v) == 0
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.is_sink(v)).collect()
    }

    /// Whether the graph has no directed cycle (parallel edges are
    /// harmless; self-loops are cycles).
    pub fn is_acyclic(&self) -> bool {
        // colors: 0 unvisited, 1 on stack, 2 done
        let n = self.vertices.len();
        let mut color = vec![0u8; n];
        fn dfs(g: &Graph, v: usize, color: &mut [u8]) -> bool {
            color[v] = 1;
            for e in &g.edges {
                if e.src != v {
                    continue;
                }
                if color[e.rng] == 1 {
                    return false;
                }
                if color[e.rng] == 0 && !dfs(g, e.rng, color) {
                    return false;
                }
            }
            color[v] = 2;
            true
        }
        (0..n).all(|v| color[v] != 0 || dfs(self, v, &mut color))
    }

    /// All finite paths, as edge-index sequences. Only acyclic graphs have
    /// finitely many.
    pub fn all_paths(&self) -> Vec<Vec<usize>> {
        assert!(self.is_acyclic(), "path enumeration needs an acyclic graph");
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..self.edges.len()).map(|e| vec![e]).collect();
        while let Some(path) = stack.pop() {
            let end = self.edges[*path.last().unwrap()].rng;
            for e in self.out_edges(end) {
                let mut longer = path.clone();
                longer.push(e);
                stack.push(longer);
            }
            out.push(path);
        }
        out.sort();
        out
    }
}

/// An exitless closed path, if one exists, as the list of its edges. A
/// closed path with no exit can only pass through vertices of out-degree
/// exactly one, so it lives in the functional subgraph of unique
/// successors.
pub fn find_exitless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let next: Vec<Option<usize>> = (0..n)
        .map(|v| {
            let out = g.out_edges(v);
            if out.len() == 1 { Some(out[0]) } else { None }
        })
        .collect();
    let mut state = vec![0u8; n]; // 0 unvisited, 1 in current walk, 2 finished
    for start in 0..n {
        if state[start] != 0 || next[start].is_none() {
            continue;
        }
        let mut walk = Vec::new();
        let mut v = start;
        loop {
            match next[v] {
                None => break,
                Some(e) => {
                    if state[v] == 1 {
                        // v repeats inside the current walk: cut the cycle out.
                        let pos = walk.iter().position(|&(w, _)| w == v).unwrap();
                        return Some(walk[pos..].iter().map(|&(_, e)| e).collect());
                    }
                    if state[v] == 2 {
                        break;
                    }
                    state[v] = 1;
                    walk.push((v, e));
                    v = g.edges[e].rng;
                }
            }
        }
        for (w, _) in &walk {
            state[*w] = 2;
        }
    }
    None
}

/// Condition (L): every closed path has an exit.
pub fn satisfies_condition_l(g: &Graph) -> bool {
    find_exitless_cycle(g).is_none()
}

/// Direct predicate: H is hereditary when every edge leaving H lands in H.
pub fn is_hereditary(g: &Graph, set: &BTreeSet<usize>) -> bool {
    g.edges.iter().all(|e| !set.contains(&e.src) || set.contains(&e.rng))
}

/// Direct predicate: H is saturated when every non-sink vertex all of
/// whose successors lie in H lies in H itself. Finite graphs have no
/// infinite emitters, so the regularity guard reduces to "not a sink".
pub fn is_saturated(g: &Graph, set: &BTreeSet<usize>) -> bool {
    (0..g.vertex_count()).all(|v| {
        let out = g.out_edges(v);
        out.is_empty() || !out.iter().all(|&e| set.contains(&g.edges[e].rng)) || set.contains(&v)
    })
}

/// The least hereditary and saturated superset, by alternating both
/// closure rules to a fixpoint.
pub fn hereditary_saturated_closure(g: &Graph, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut h = seed.clone();
    loop {
        let mut grew = false;
        for e in &g.edges {
            if h.contains(&e.src) && h.insert(e.rng) {
                grew = true;
            }
        }
        for v in 0..g.vertex_count() {
            if h.contains(&v) {
                continue;
            }
            let out = g.out_edges(v);
            if !out.is_empty() && out.iter().all(|&e| h.contains(&g.edges[e].rng)) {
                h.insert(v);
                grew = true;
            }
        }
        if !grew {
            return h;
        }
    }
}

/// A proper nonempty hereditary and saturated vertex set, if one exists.
/// Singleton closures suffice: any proper H&S set H contains some v, and
/// then closure({v}) ⊆ H is itself proper.
pub fn proper_hereditary_saturated_witness(g: &Graph) -> Option<BTreeSet<usize>> {
    (0..g.vertex_count()).find_map(|v| {
        let closure = hereditary_saturated_closure(g, &BTreeSet::from([v]));
        (closure.len() < g.vertex_count()).then_some(closure)
    })
}

pub fn only_trivial_hereditary_saturated(g: &Graph) -> bool {
    proper_hereditary_saturated_witness(g).is_none()
}

/// Independent ground-truth route: every hereditary and saturated subset,
/// by exhausting all 2^|E⁰| candidates.
pub fn hereditary_saturated_subsets_exhaustive(g: &Graph) -> Vec<BTreeSet<usize>> {
    let n = g.vertex_count();
    assert!(n <= 20, "exhaustive subset enumeration is limited to |E⁰| ≤ 20");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let set: BTreeSet<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_hereditary(g, &set) && is_saturated(g, &set) {
            out.push(set);
        }
    }
    out
}

/// The simplicity criterion: condition (L) together with triviality of the
/// hereditary-and-saturated lattice.
pub fn leavitt_is_simple(g: &Graph) -> bool {
    satisfies_condition_l(g) && only_trivial_hereditary_saturated(g)
}

/// A point of the boundary-path space: a finite path ending at a sink, or
/// a lone sink vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundaryPath {
    Path(Vec<usize>),
    Vertex(usize),
}

impl BoundaryPath {
    pub fn source(&self, g: &Graph) -> usize {
        match self {
            BoundaryPath::Path(edges) => g.edges[edges[0]].src,
            BoundaryPath::Vertex(v) => *v,
        }
    }

    pub fn label(&self, g: &Graph) -> String {
        match self {
            BoundaryPath::Path(edges) => edges
                .iter()
                .map(|&e| g.edges[e].name.clone())
                .collect::<Vec<_>>()
                .join("·"),
            BoundaryPath::Vertex(v) => g.vertex_names()[*v].clone(),
        }
    }

    fn starts_with(&self, prefix: &[usize]) -> bool {
        match self {
            BoundaryPath::Path(edges) => edges.len() >= prefix.len() && edges[..prefix.len()] == *prefix,
            BoundaryPath::Vertex(_) => prefix.is_empty(),
        }
    }

    /// The boundary point a·ξ for a composable prefix path a.
    fn prepend(&self, prefix: &[usize]) -> BoundaryPath {
        match self {
            BoundaryPath::Vertex(_) => BoundaryPath::Path(prefix.to_vec()),
            BoundaryPath::Path(edges) => {
                let mut all = prefix.to_vec();
                all.extend_from_slice(edges);
                BoundaryPath::Path(all)
            }
        }
    }

    /// The boundary point left after removing a prefix of `len` edges;
    /// `end` is the range vertex at the cut, used when nothing remains.
    fn strip(&self, len: usize, end: usize) -> BoundaryPath {
        match self {
            BoundaryPath::Vertex(_) => unreachable!("vertices have no edges to strip"),
            BoundaryPath::Path(edges) => {
                if edges.len() == len {
                    BoundaryPath::Vertex(end)
                } else {
                    BoundaryPath::Path(edges[len..].to_vec())
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LeavittError {
    CyclicGraph,
    ZeroElement,
    /// The span of {1_p} ∪ {1_v} fell short of K^X.
    SpanDeficient { rank: usize, expected: usize },
    /// α_p(1_{p⁻¹}1_q) ≠ 1_p 1_{pq} for some stored pair.
    AlphaIdentityFailure { p: String, q: String },
    /// The constructive conjugation did not reproduce 1_{r(c)}δ₀.
    CertificateMismatch,
    Ring(RingError),
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for LeavittError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeavittError::CyclicGraph => {
                write!(f, "the boundary-path construction requires an acyclic graph")
            }
            LeavittError::ZeroElement => write!(f, "the element must be nonzero"),
            LeavittError::SpanDeficient { rank, expected } => {
                write!(f, "span of path and vertex indicators has rank {rank}, expected {expected}")
            }
            LeavittError::AlphaIdentityFailure { p, q } => {
                write!(f, "α_{p}(1_{{{p}⁻¹}}·1_{{{q}}}) ≠ 1_{{{p}}}·1_{{{p}{q}}}")
            }
            LeavittError::CertificateMismatch => {
                write!(f, "conjugation certificate did not reproduce the vertex unit")
            }
            LeavittError::Ring(e) => write!(f, "{e}"),
            LeavittError::DimensionMismatch { expected, got } => {
                write!(f, "element has {got} coordinates, the boundary space has {expected}")
            }
        }
    }
}

impl std::error::Error for LeavittError {}

impl From<RingError> for LeavittError {
    fn from(e: RingError) -> Self {
        LeavittError::Ring(e)
    }
}

/// All boundary paths of an acyclic graph, in a deterministic order.
pub fn boundary_paths(g: &Graph) -> Vec<BoundaryPath> {
    let mut points: Vec<BoundaryPath> = g
        .all_paths()
        .into_iter()
        .filter(|p| g.is_sink(g.edges[*p.last().unwrap()].rng))
        .map(BoundaryPath::Path)
        .collect();
    points.extend(g.sinks().into_iter().map(BoundaryPath::Vertex));
    points.sort();
    points
}

fn path_word(path: &[usize]) -> FreeWord {
    FreeWord::from_symbols(path.iter().map(|&e| e as u32))
}

/// The boundary-path partial action of the free group on the edges. The
/// support is the identity together with every path a, every inverse b⁻¹,
/// and every reduced mixed word ab⁻¹ with r(a) = r(b); all other group
/// elements act on the empty set.
pub fn build_boundary_action(g: &Graph) -> Result<(SetPartialAction, Vec<BoundaryPath>), LeavittError> {
    if !g.is_acyclic() {
        return Err(LeavittError::CyclicGraph);
    }
    let points = boundary_paths(g);
    let idx: BTreeMap<&BoundaryPath, usize> =
        points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let labels: Vec<String> = points.iter().map(|p| p.label(g)).collect();
    let paths = g.all_paths();
    let group = Group::Free { rank: g.edges().len() };

    let mut maps: Vec<(GroupElem, Vec<(usize, usize)>)> = Vec::new();

    for a in &paths {
        let range = g.edges[*a.last().unwrap()].rng;
        // θ_a : X_{a⁻¹} → X_a, ξ ↦ aξ, where X_{a⁻¹} = {ξ : s(ξ) = r(a)}.
        let mut forward = Vec::new();
        for (i, xi) in points.iter().enumerate() {
            if xi.source(g) == range {
                let image = xi.prepend(a);
                forward.push((i, idx[&image]));
            }
        }
        // θ_{a⁻¹} strips the prefix a; θ_{a⁻¹}(a) = r(a) when r(a) is a sink.
        let backward: Vec<(usize, usize)> = forward.iter().map(|&(x, y)| (y, x)).collect();
        maps.push((GroupElem::Word(path_word(a)), forward));
        maps.push((GroupElem::Word(path_word(a).inverse()), backward));
    }

    // θ_{ab⁻¹} : X_b → X_a replaces the prefix b by a; only reduced words
    // qualify, so the pairs must end in different edges.
    for a in &paths {
        for b in &paths {
            if a == b
                || g.edges[*a.last().unwrap()].rng != g.edges[*b.last().unwrap()].rng
                || a.last() == b.last()
            {
                continue;
            }
            let word = path_word(a).concat(&path_word(b).inverse());
            let end = g.edges[*b.last().unwrap()].rng;
            let mut pairs = Vec::new();
            for (i, xi) in points.iter().enumerate() {
                if xi.starts_with(b) {
                    let image = xi.strip(b.len(), end).prepend(a);
                    pairs.push((i, idx[&image]));
                }
            }
            maps.push((GroupElem::Word(word), pairs));
        }
    }

    let action = SetPartialAction::new(group, labels, maps)
        .expect("boundary data is structurally well-formed");
    Ok((action, points))
}

/// The concrete Leavitt ring of a finite acyclic graph: the skew ring of
/// the boundary-path action, together with the span data that certifies
/// D₀ = K^X and the α-compatibility of the stored components.
#[derive(Clone, Debug)]
pub struct LeavittRing {
    graph: Graph,
    points: Vec<BoundaryPath>,
    ring: SkewRing,
    d0_span: Subspace,
    component_spans: Vec<(GroupElem, Subspace)>,
}

impl LeavittRing {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn points(&self) -> &[BoundaryPath] {
        &self.points
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn d0_span(&self) -> &Subspace {
        &self.d0_span
    }

    pub fn component_spans(&self) -> &[(GroupElem, Subspace)] {
        &self.component_spans
    }

    /// 1_v as a function on X: the indicator of {ξ : s(ξ) = v}.
    pub fn vertex_indicator(&self, v: usize) -> Vector {
        let g = &self.graph;
        let field = self.ring.action().field();
        let mut out = Vector::zero(field, self.points.len());
        for (i, p) in self.points.iter().enumerate() {
            if p.source(g) == v {
                out.set(i, 1);
            }
        }
        out
    }

    /// The ring element 1_v δ₀.
    pub fn vertex_unit(&self, v: usize) -> Vector {
        let id = self.ring.action().base().group().identity();
        self.ring
            .monomial(&id, &self.vertex_indicator(v))
            .expect("vertex indicators live in D₀")
    }

    /// The constructive vertex witness: given a nonzero x₀ ∈ D₀, a vertex
    /// v with 1_v δ₀ in the ideal generated by x₀δ₀. A point ξ with
    /// x₀(ξ) ≠ 0 either is a lone sink, where rescaling 1_ξ x₀ gives 1_v δ₀
    /// directly, or is a full path c to a sink, and then
    /// 1_{r(c)}δ₀ = 1_{c⁻¹}δ_{c⁻¹} · (λ⁻¹ 1_c x₀)δ₀ · 1_c δ_c.
    /// The conjugation is carried out in the ring and checked.
    pub fn vertex_witness(&self, x0: &Vector) -> Result<usize, LeavittError> {
        if x0.dim() != self.points.len() {
            return Err(LeavittError::DimensionMismatch {
                expected: self.points.len(),
                got: x0.dim(),
            });
        }
        if x0.is_zero() {
            return Err(LeavittError::ZeroElement);
        }
        let field = self.ring.action().field();
        let xi_index = (0..x0.dim()).find(|&i| x0.get(i) != 0).unwrap();
        let lambda_inv = field.inv(x0.get(xi_index));
        match &self.points[xi_index].clone() {
            BoundaryPath::Vertex(v) => {
                // 1_v x₀ = x₀(v)·1_v since X_v = {v} for a sink.
                Ok(*v)
            }
            BoundaryPath::Path(c) => {
                let witness = self.graph.edges[*c.last().unwrap()].rng;
                // 1_c x₀ = λ·1_c because c is a full path to a sink, so
                // X_c = {c}.
                let alg = self.ring.action();
                let id = alg.base().group().identity();
                let word_c = GroupElem::Word(path_word(c));
                let word_c_inv = GroupElem::Word(path_word(c).inverse());
                let one_c = alg.indicator([xi_index]);
                let scaled = pointwise_mul(&one_c, x0).scale(lambda_inv);
                let left = self.ring.monomial(&word_c_inv, &alg.unit_of(&word_c_inv))?;
                let middle = self.ring.monomial(&id, &scaled)?;
                let right = self.ring.monomial(&word_c, &alg.unit_of(&word_c))?;
                let product = self
                    .ring
                    .multiply(&self.ring.multiply(&left, &middle), &right);
                if product != self.vertex_unit(witness) {
                    return Err(LeavittError::CertificateMismatch);
                }
                Ok(witness)
            }
        }
    }

    /// The uniqueness property behind kernel arguments: every nonzero
    /// element generates an ideal containing some vertex unit 1_v δ₀.
    pub fn uniqueness_check(&self, budget_log2: u32) -> OracleOutcome {
        if let Err((required, budget)) = self.ring.enumeration_feasible(budget_log2) {
            return OracleOutcome::Infeasible { log2_required: required, log2_budget: budget };
        }
        let units: Vec<Vector> =
            (0..self.graph.vertex_count()).map(|v| self.vertex_unit(v)).collect();
        let witness = self.ring.for_each_normalized(|ring, a| {
            let ideal = ring.ideal_generated(a).expect("element of the ring");
            units.iter().any(|u| ideal.contains(u).expect("same space"))
        });
        match witness {
            None => OracleOutcome::Holds,
            Some(a) => OracleOutcome::Fails { witness: a },
        }
    }
}

/// Builds the Leavitt ring of a finite acyclic graph over F_p, verifying
/// on the way that span{1_p, 1_v} = K^X and that α_p(1_{p⁻¹}1_q) = 1_p1_{pq}
/// for all stored components. Failures of either check would mean the
/// construction itself is wrong, so they are reported as errors rather
/// than verdicts.
///
/// ```
/// use skewring::leavitt::{build_leavitt_ring, Graph};
/// use skewring::linalg::PrimeField;
///
/// let graph = Graph::parse_text("e: v1 -> v2\n").unwrap();
/// let ring = build_leavitt_ring(&graph, PrimeField::new(2).unwrap()).unwrap();
/// assert_eq!(ring.ring().dim(), 4); // M₂(F₂)
/// ```
pub fn build_leavitt_ring(g: &Graph, field: PrimeField) -> Result<LeavittRing, LeavittError> {
    let (action, points) = build_boundary_action(g)?;
    let alg = AlgebraPartialAction::new(action, field);
    let base = alg.base().clone();
    let n = points.len();
    let id = base.group().identity();

    // D₀ generators: 1_p for every nonidentity component and 1_v for every
    // vertex.
    let mut gens: Vec<Vector> = Vec::new();
    for t in base.support() {
        if *t != id {
            gens.push(alg.unit_of(t));
        }
    }
    for v in 0..g.vertex_count() {
        let mut vec = Vector::zero(field, n);
        for (i, p) in points.iter().enumerate() {
            if p.source(g) == v {
                vec.set(i, 1);
            }
        }
        gens.push(vec);
    }
    let d0_span = Subspace::span(field, n, &gens).expect("same space");
    if !d0_span.is_full() {
        return Err(LeavittError::SpanDeficient { rank: d0_span.rank(), expected: n });
    }

    // α_p(1_{p⁻¹}·1_q) = 1_p·1_{pq} on all stored pairs.
    let support: Vec<GroupElem> = base.support().cloned().collect();
    for p in &support {
        let p_inv = base.group().invert(p);
        for q in &support {
            let pq = base.group().multiply(p, q);
            let lhs = alg.apply(p, &pointwise_mul(&alg.unit_of(&p_inv), &alg.unit_of(q)));
            let rhs = pointwise_mul(&alg.unit_of(p), &alg.indicator(base.carrier_subset(&pq)));
            if lhs != rhs {
                return Err(LeavittError::AlphaIdentityFailure {
                    p: crate::group::elem_label(p, None),
                    q: crate::group::elem_label(q, None),
                });
            }
        }
    }

    // Span data for each component: D_p = 1_p·D₀ covers K^{X_p}.
    let mut component_spans = Vec::new();
    for p in &support {
        let unit_p = alg.unit_of(p);
        let vectors: Vec<Vector> = support.iter().map(|q| pointwise_mul(&unit_p, &alg.unit_of(q))).collect();
        let mut span = Subspace::span(field, n, &vectors).expect("same space");
        for v in 0..g.vertex_count() {
            let mut vec = Vector::zero(field, n);
            for (i, pt) in points.iter().enumerate() {
                if pt.source(g) == v {
                    vec.set(i, 1);
                }
            }
            span.insert_in_place(&pointwise_mul(&unit_p, &vec));
        }
        component_spans.push((p.clone(), span));
    }

    let ring = SkewRing::new(alg)?;
    Ok(LeavittRing { graph: g.clone(), points, ring, d0_span, component_spans })
}
