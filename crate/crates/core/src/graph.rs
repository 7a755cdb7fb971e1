//! Graphs, coloured graphs and partitioned graphs, together with the
//! constructions built on them: disjoint union, glueing along a colour,
//! edge replacement by the size-4 caterpillar and the leafy stars.
//!
//! Vertex and colour identifiers are opaque strings. Vertex order is
//! insertion order and every constructor below adds vertices in a fixed
//! order, so serialized output is reproducible byte for byte.

use std::collections::{BTreeSet, HashMap, HashSet};

use indexmap::{IndexMap, IndexSet};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite simple undirected graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    vertices: IndexSet<String>,
    // (i, j) with i < j, indices into `vertices`
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex names and edges given by name.
    pub fn from_parts<V, E, S, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        for (a, b) in edges {
            g.add_edge(a.as_ref(), b.as_ref())?;
        }
        Ok(g)
    }

    /// Graph on vertices `0..n` (named by their decimal index) with the given edges.
    pub fn from_indices(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new();
        for i in 0..n {
            g.add_vertex(i.to_string())?;
        }
        for &(a, b) in edges {
            g.add_edge_idx(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        let (idx, fresh) = self.vertices.insert_full(name.clone());
        if !fresh {
            return Err(Error::DuplicateVertex(name));
        }
        Ok(idx)
    }

    /// Adds `{a, b}`; returns `false` when the edge was already present.
    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<bool> {
        let i = self.require(a)?;
        let j = self.require(b)?;
        self.add_edge_idx(i, j)
    }

    pub fn add_edge_idx(&mut self, i: usize, j: usize) -> Result<bool> {
        let n = self.vertices.len();
        if i >= n || j >= n {
            return Err(Error::UnknownVertex(i.max(j).to_string()));
        }
        if i == j {
            return Err(Error::SelfLoop(self.vertices[i].clone()));
        }
        Ok(self.edges.insert((i.min(j), i.max(j))))
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.vertices
            .get_index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.get_index_of(name)
    }

    pub fn contains_vertex(&self, name: &str) -> bool {
        self.vertices.contains(name)
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices()];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Adds a vertex named `base`, or `base#1`, `base#2`, ... if taken.
    fn add_fresh_vertex(&mut self, base: String) -> usize {
        if !self.vertices.contains(&base) {
            return self.vertices.insert_full(base).0;
        }
        let mut k = 1;
        loop {
            let cand = format!("{base}#{k}");
            if !self.vertices.contains(&cand) {
                return self.vertices.insert_full(cand).0;
            }
            k += 1;
        }
    }
}

/// A graph with a total (not necessarily proper) vertex colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredGraph {
    graph: Graph,
    // colour of vertex i
    colours: Vec<String>,
}

impl ColouredGraph {
    pub fn new(graph: Graph, colours: Vec<String>) -> Result<Self> {
        if colours.len() != graph.num_vertices() {
            if colours.len() < graph.num_vertices() {
                return Err(Error::MissingColour(graph.vertex(colours.len()).to_string()));
            }
            return Err(Error::InvalidArgument(format!(
                "{} colours for {} vertices",
                colours.len(),
                graph.num_vertices()
            )));
        }
        Ok(ColouredGraph { graph, colours })
    }

    /// Colours given by a vertex → colour map that must cover every vertex.
    pub fn from_map(graph: Graph, map: &IndexMap<String, String>) -> Result<Self> {
        for v in map.keys() {
            if !graph.contains_vertex(v) {
                return Err(Error::UnknownVertex(v.clone()));
            }
        }
        let colours = graph
            .vertices()
            .map(|v| {
                map.get(v)
                    .cloned()
                    .ok_or_else(|| Error::MissingColour(v.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ColouredGraph { graph, colours })
    }

    /// Every vertex gets its own colour, named after the vertex.
    pub fn all_free(graph: Graph) -> Self {
        let colours = graph.vertices().map(str::to_string).collect();
        ColouredGraph { graph, colours }
    }

    /// Every vertex gets the colour `colour`.
    pub fn monochrome(graph: Graph, colour: &str) -> Self {
        let colours = vec![colour.to_string(); graph.num_vertices()];
        ColouredGraph { graph, colours }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colour_of(&self, v: usize) -> &str {
        &self.colours[v]
    }

    pub fn colours(&self) -> &[String] {
        &self.colours
    }

    /// Colour set in order of first appearance along the vertex order.
    pub fn colour_set(&self) -> IndexSet<String> {
        self.colours.iter().cloned().collect()
    }

    pub fn class(&self, colour: &str) -> Vec<usize> {
        (0..self.colours.len())
            .filter(|&v| self.colours[v] == colour)
            .collect()
    }

    pub fn has_colour(&self, colour: &str) -> bool {
        self.colours.iter().any(|c| c == colour)
    }

    /// A colour is free when exactly one vertex carries it.
    pub fn is_free(&self, colour: &str) -> bool {
        self.colours.iter().filter(|c| *c == colour).count() == 1
    }

    fn recolour(&mut self, from: &str, to: &str) {
        for c in self.colours.iter_mut() {
            if c == from {
                *c = to.to_string();
            }
        }
    }

    /// Adds the missing edges inside the class of `colour`; returns how many.
    fn complete_class(&mut self, colour: &str) -> usize {
        let class = self.class(colour);
        let mut added = 0;
        for (k, &i) in class.iter().enumerate() {
            for &j in &class[k + 1..] {
                if self.graph.add_edge_idx(i, j).expect("class vertices exist") {
                    added += 1;
                }
            }
        }
        added
    }

    pub fn to_doc(&self, bound_colour: Option<&str>) -> GraphDoc {
        let mut doc = GraphDoc::from_graph(&self.graph);
        doc.colours = Some(
            self.graph
                .vertices()
                .zip(&self.colours)
                .map(|(v, c)| (v.to_string(), c.clone()))
                .collect(),
        );
        doc.bound_colour = bound_colour.map(str::to_string);
        doc
    }
}

/// Coloured graph with one distinguished bound colour; every other colour is free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedGraph {
    coloured: ColouredGraph,
    bound: String,
}

impl PartitionedGraph {
    pub fn new(coloured: ColouredGraph, bound_colour: impl Into<String>) -> Result<Self> {
        let bound = bound_colour.into();
        if !coloured.graph.is_empty() && !coloured.has_colour(&bound) {
            return Err(Error::UnknownColour(bound));
        }
        let mut counts: HashMap<&str, usize> = HashMap::new();
        for c in &coloured.colours {
            *counts.entry(c.as_str()).or_default() += 1;
        }
        for c in coloured.colour_set() {
            if c != bound && counts[c.as_str()] > 1 {
                return Err(Error::NotPartitioned(c));
            }
        }
        Ok(PartitionedGraph { coloured, bound })
    }

    pub fn coloured(&self) -> &ColouredGraph {
        &self.coloured
    }

    pub fn graph(&self) -> &Graph {
        &self.coloured.graph
    }

    pub fn bound_colour(&self) -> &str {
        &self.bound
    }

    /// Free colours in vertex order.
    pub fn free_colours(&self) -> Vec<String> {
        self.coloured
            .colour_set()
            .into_iter()
            .filter(|c| *c != self.bound)
            .collect()
    }

    /// Glues two free colours of the same partitioned graph: joins their two
    /// vertices by an edge and moves both into the bound colour.
    pub fn glue_free_within(&self, c1: &str, c2: &str) -> Result<PartitionedGraph> {
        for c in [c1, c2] {
            if !self.coloured.has_colour(c) {
                return Err(Error::UnknownColour(c.to_string()));
            }
            if c == self.bound || !self.coloured.is_free(c) {
                return Err(Error::NotFree(c.to_string()));
            }
        }
        if c1 == c2 {
            return Err(Error::InvalidArgument(format!(
                "cannot glue colour `{c1}` to itself"
            )));
        }
        let mut out = self.coloured.clone();
        out.recolour(c2, c1);
        out.complete_class(c1);
        out.recolour(c1, &self.bound);
        PartitionedGraph::new(out, self.bound.clone())
    }

    pub fn to_doc(&self) -> GraphDoc {
        self.coloured.to_doc(Some(&self.bound))
    }
}

/// The pair of colours along which two coloured graphs are glued.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueSpec {
    pub colour_a: String,
    pub colour_b: String,
}

impl GlueSpec {
    pub fn new(colour_a: impl Into<String>, colour_b: impl Into<String>) -> Self {
        GlueSpec {
            colour_a: colour_a.into(),
            colour_b: colour_b.into(),
        }
    }
}

/// First of `base`, `base#2`, `base#2#2`, ... not in `taken`.
fn suffix_rename(base: &str, taken: &HashSet<String>) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push_str("#2");
    }
    name
}

/// Disjoint union plus the renaming applied to `g2`'s colours.
fn union_with_renaming(
    g1: &ColouredGraph,
    g2: &ColouredGraph,
) -> (ColouredGraph, HashMap<String, String>) {
    let mut taken_v: HashSet<String> = g1.graph.vertices().map(str::to_string).collect();
    taken_v.extend(g2.graph.vertices().map(str::to_string));
    let mut taken_c: HashSet<String> = g1.colour_set().into_iter().collect();
    taken_c.extend(g2.colour_set());

    let mut vertex_names = Vec::with_capacity(g2.graph.num_vertices());
    for v in g2.graph.vertices() {
        let name = if g1.graph.contains_vertex(v) {
            let n = suffix_rename(v, &taken_v);
            taken_v.insert(n.clone());
            n
        } else {
            v.to_string()
        };
        vertex_names.push(name);
    }
    let g1_colours: HashSet<String> = g1.colour_set().into_iter().collect();
    let mut colour_map = HashMap::new();
    for c in g2.colour_set() {
        let name = if g1_colours.contains(&c) {
            let n = suffix_rename(&c, &taken_c);
            taken_c.insert(n.clone());
            n
        } else {
            c.clone()
        };
        colour_map.insert(c, name);
    }

    let mut graph = g1.graph.clone();
    let offset = graph.num_vertices();
    for name in vertex_names {
        graph.add_vertex(name).expect("renamed vertices are fresh");
    }
    for (i, j) in g2.graph.edges() {
        graph.add_edge_idx(i + offset, j + offset).expect("valid edge");
    }
    let mut colours = g1.colours.clone();
    colours.extend(g2.colours.iter().map(|c| colour_map[c].clone()));
    (ColouredGraph { graph, colours }, colour_map)
}

/// Disjoint union; clashing vertex names and colours of `g2` get a `#2` suffix.
pub fn disjoint_union(g1: &ColouredGraph, g2: &ColouredGraph) -> ColouredGraph {
    union_with_renaming(g1, g2).0
}

/// `gl(g1, g2; c1, c2)`: disjoint union, merge `c2` into `c1`, then complete
/// the merged colour class to a clique.
pub fn glue(g1: &ColouredGraph, g2: &ColouredGraph, spec: &GlueSpec) -> Result<ColouredGraph> {
    if !g1.has_colour(&spec.colour_a) {
        return Err(Error::UnknownColour(spec.colour_a.clone()));
    }
    if !g2.has_colour(&spec.colour_b) {
        return Err(Error::UnknownColour(spec.colour_b.clone()));
    }
    let (mut out, renamed) = union_with_renaming(g1, g2);
    out.recolour(&renamed[&spec.colour_b], &spec.colour_a);
    out.complete_class(&spec.colour_a);
    Ok(out)
}

/// Glues two partitioned graphs across free vertices. The glued pair and the
/// two bound colours all end up in `g1`'s bound colour.
pub fn glue_partitioned(
    g1: &PartitionedGraph,
    g2: &PartitionedGraph,
    spec: &GlueSpec,
) -> Result<PartitionedGraph> {
    for (g, c) in [(g1, &spec.colour_a), (g2, &spec.colour_b)] {
        if !g.coloured.has_colour(c) {
            return Err(Error::UnknownColour(c.clone()));
        }
        if *c == g.bound || !g.coloured.is_free(c) {
            return Err(Error::NotFree(c.clone()));
        }
    }
    let (mut out, renamed) = union_with_renaming(&g1.coloured, &g2.coloured);
    out.recolour(&renamed[&g2.bound], &g1.bound);
    let joined = PartitionedGraph {
        coloured: out,
        bound: g1.bound.clone(),
    };
    joined.glue_free_within(&spec.colour_a, &renamed[&spec.colour_b])
}

/// Disjoint union of partitioned graphs, merging the two bound colours.
pub fn union_partitioned(g1: &PartitionedGraph, g2: &PartitionedGraph) -> PartitionedGraph {
    let (mut out, renamed) = union_with_renaming(&g1.coloured, &g2.coloured);
    out.recolour(&renamed[&g2.bound], &g1.bound);
    PartitionedGraph {
        coloured: out,
        bound: g1.bound.clone(),
    }
}

/// Replaces every edge `{u, v}` by the caterpillar `u - m1 - m2 - v` with a
/// pendant leaf on each of its four path vertices. An original vertex of
/// degree `d` ends up with `d` pendant leaves.
pub fn replace_w4(g: &Graph) -> Graph {
    let mut out = Graph::new();
    for v in g.vertices() {
        out.add_vertex(v).expect("distinct");
    }
    let mut leaf_count = vec![0usize; g.num_vertices()];
    for (i, j) in g.edges() {
        let (u, v) = (g.vertex(i), g.vertex(j));
        let m1 = out.add_fresh_vertex(format!("{u}~{v}~m1"));
        let m2 = out.add_fresh_vertex(format!("{u}~{v}~m2"));
        leaf_count[i] += 1;
        let lu = out.add_fresh_vertex(format!("{u}~leaf~{}", leaf_count[i]));
        let l1 = out.add_fresh_vertex(format!("{u}~{v}~m1~leaf~1"));
        let l2 = out.add_fresh_vertex(format!("{u}~{v}~m2~leaf~1"));
        leaf_count[j] += 1;
        let lv = out.add_fresh_vertex(format!("{v}~leaf~{}", leaf_count[j]));
        for (a, b) in [(i, m1), (m1, m2), (m2, j), (i, lu), (m1, l1), (m2, l2), (j, lv)] {
            out.add_edge_idx(a, b).expect("fresh edge");
        }
    }
    out
}

/// Bound colour used by [`leafy_star`].
pub const LEAFY_BOUND: &str = "x";

/// The leafy star `L_n`: a centre `c` with `n` bound leaves and `n` free
/// neighbours `f1..fn`, each carrying its own colour `x1..xn` and one bound
/// pendant leaf. Bound colour is `x`.
pub fn leafy_star(n: usize) -> Result<PartitionedGraph> {
    leafy_star_named(n, "", LEAFY_BOUND)
}

fn leafy_star_named(n: usize, prefix: &str, bound: &str) -> Result<PartitionedGraph> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "leafy star needs at least one arm".into(),
        ));
    }
    let mut g = Graph::new();
    let mut colours = Vec::new();
    let c = g.add_vertex(format!("{prefix}c"))?;
    colours.push(bound.to_string());
    for k in 1..=n {
        let l = g.add_vertex(format!("{prefix}c~leaf~{k}"))?;
        colours.push(bound.to_string());
        g.add_edge_idx(c, l)?;
    }
    for k in 1..=n {
        let f = g.add_vertex(format!("{prefix}f{k}"))?;
        colours.push(format!("{prefix}x{k}"));
        let l = g.add_vertex(format!("{prefix}f{k}~leaf~1"))?;
        colours.push(bound.to_string());
        g.add_edge_idx(c, f)?;
        g.add_edge_idx(f, l)?;
    }
    PartitionedGraph::new(ColouredGraph::new(g, colours)?, bound)
}

/// Rebuilds `replace_w4(g)` by glueing leafy stars: one `L_deg(v)` per
/// vertex, glued across one fresh free vertex per edge of `g`. Isolated
/// vertices become single bound vertices.
pub fn w4_by_glueing(g: &Graph) -> Result<PartitionedGraph> {
    let deg = g.degrees();
    let mut acc: Option<PartitionedGraph> = None;
    for (i, v) in g.vertices().enumerate() {
        let piece = if deg[i] == 0 {
            let mut single = Graph::new();
            single.add_vertex(v)?;
            PartitionedGraph::new(
                ColouredGraph::monochrome(single, LEAFY_BOUND),
                LEAFY_BOUND,
            )?
        } else {
            leafy_star_named(deg[i], &format!("{v}/"), LEAFY_BOUND)?
        };
        acc = Some(match acc {
            None => piece,
            Some(a) => union_partitioned(&a, &piece),
        });
    }
    let mut acc = match acc {
        Some(a) => a,
        None => PartitionedGraph::new(ColouredGraph::all_free(Graph::new()), LEAFY_BOUND)?,
    };
    let mut next_arm = vec![0usize; g.num_vertices()];
    for (i, j) in g.edges() {
        next_arm[i] += 1;
        next_arm[j] += 1;
        let ci = format!("{}/x{}", g.vertex(i), next_arm[i]);
        let cj = format!("{}/x{}", g.vertex(j), next_arm[j]);
        acc = acc.glue_free_within(&ci, &cj)?;
    }
    Ok(acc)
}

/// JSON form shared by graphs, coloured graphs and partitioned graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colours: Option<IndexMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_colour: Option<String>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc {
            vertices: g.vertices().map(str::to_string).collect(),
            edges: g
                .edges()
                .map(|(i, j)| [g.vertex(i).to_string(), g.vertex(j).to_string()])
                .collect(),
            colours: None,
            bound_colour: None,
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let mut g = Graph::new();
        for v in &self.vertices {
            g.add_vertex(v.clone())?;
        }
        for [a, b] in &self.edges {
            if !g.add_edge(a, b)? {
                return Err(Error::Parse(format!("duplicate edge {{{a}, {b}}}")));
            }
        }
        Ok(g)
    }

    /// Missing `colours` means every vertex gets its own free colour.
    pub fn to_coloured(&self) -> Result<ColouredGraph> {
        let g = self.to_graph()?;
        match &self.colours {
            Some(map) => ColouredGraph::from_map(g, map),
            None => Ok(ColouredGraph::all_free(g)),
        }
    }

    pub fn to_partitioned(&self) -> Result<PartitionedGraph> {
        let bound = self.bound_colour.clone().ok_or(Error::MissingBoundColour)?;
        PartitionedGraph::new(self.to_coloured()?, bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2(a: &str, b: &str) -> Graph {
        Graph::from_parts([a, b], [(a, b)]).unwrap()
    }

    #[test]
    fn graph_rejects_bad_input() {
        let mut g = Graph::from_parts(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(matches!(g.add_vertex("a"), Err(Error::DuplicateVertex(_))));
        assert!(matches!(g.add_edge("a", "a"), Err(Error::SelfLoop(_))));
        assert!(matches!(g.add_edge("a", "z"), Err(Error::UnknownVertex(_))));
        assert!(g.add_edge("a", "b").unwrap());
        assert!(!g.add_edge("b", "a").unwrap());
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn union_of_two_edges() {
        let g = ColouredGraph::all_free(k2("a", "b"));
        let u = disjoint_union(&g, &g);
        assert_eq!(u.graph().num_vertices(), 4);
        assert_eq!(u.graph().num_edges(), 2);
        assert_eq!(u.colour_set().len(), 4);
        let names: Vec<_> = u.graph().vertices().collect();
        assert_eq!(names, ["a", "b", "a#2", "b#2"]);
    }

    #[test]
    fn union_with_empty_is_identity() {
        let g = ColouredGraph::all_free(k2("a", "b"));
        let e = ColouredGraph::all_free(Graph::new());
        assert_eq!(disjoint_union(&e, &g), g);
        assert_eq!(disjoint_union(&g, &e), g);
    }

    #[test]
    fn glue_free_edges_gives_p4() {
        let g1 = ColouredGraph::all_free(k2("a", "b"));
        let g2 = ColouredGraph::all_free(k2("a2", "b2"));
        let glued = glue(&g1, &g2, &GlueSpec::new("b", "b2")).unwrap();
        let g = glued.graph();
        assert_eq!(g.num_edges(), 3);
        let idx = |n: &str| g.index_of(n).unwrap();
        assert!(g.has_edge(idx("a"), idx("b")));
        assert!(g.has_edge(idx("b"), idx("b2")));
        assert!(g.has_edge(idx("b2"), idx("a2")));
        assert_eq!(glued.colour_of(idx("b2")), "b");
    }

    #[test]
    fn glue_rejects_unknown_colour() {
        let g1 = ColouredGraph::all_free(k2("a", "b"));
        assert!(matches!(
            glue(&g1, &g1, &GlueSpec::new("q", "a")),
            Err(Error::UnknownColour(_))
        ));
        assert!(matches!(
            glue(&g1, &g1, &GlueSpec::new("a", "q")),
            Err(Error::UnknownColour(_))
        ));
    }

    /// The worked glueing example: a 5-vertex graph with two red vertices and
    /// a 6-vertex graph with three blue vertices; glueing red/blue adds the
    /// 2*3 cross edges plus the two missing blue-blue edges.
    #[test]
    fn worked_glue_example_adds_eight_edges() {
        // vertex numbering follows the figure: 1..5 in G1, 6..11 in G2
        let g1 = Graph::from_parts(
            ["1", "2", "3", "4", "5"],
            [("1", "2"), ("2", "3"), ("1", "3"), ("3", "5"), ("4", "1"), ("4", "2")],
        )
        .unwrap();
        let c1: IndexMap<String, String> = [
            ("1", "green"),
            ("2", "red"),
            ("3", "red"),
            ("4", "green"),
            ("5", "green"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        let g2 = Graph::from_parts(
            ["6", "7", "8", "9", "10", "11"],
            [("6", "9"), ("6", "8"), ("11", "10"), ("7", "8"), ("6", "11")],
        )
        .unwrap();
        let c2: IndexMap<String, String> = [
            ("6", "yellow"),
            ("7", "blue"),
            ("8", "blue"),
            ("9", "blue"),
            ("10", "yellow"),
            ("11", "black"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        let cg1 = ColouredGraph::from_map(g1, &c1).unwrap();
        let cg2 = ColouredGraph::from_map(g2, &c2).unwrap();
        let before = cg1.graph().num_edges() + cg2.graph().num_edges();
        let glued = glue(&cg1, &cg2, &GlueSpec::new("red", "blue")).unwrap();
        assert_eq!(glued.graph().num_edges() - before, 8);
        assert_eq!(glued.class("red").len(), 5);
        assert!(!glued.has_colour("blue"));
    }

    #[test]
    fn replace_w4_counts() {
        let w4 = replace_w4(&k2("u", "v"));
        assert_eq!((w4.num_vertices(), w4.num_edges()), (8, 7));
        let k3 = Graph::from_indices(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = replace_w4(&k3);
        assert_eq!((r.num_vertices(), r.num_edges()), (21, 21));
        let empty = Graph::from_indices(4, &[]).unwrap();
        assert_eq!(replace_w4(&empty), empty);
    }

    #[test]
    fn replace_w4_naming_scheme() {
        let w4 = replace_w4(&k2("u", "v"));
        let names: Vec<_> = w4.vertices().collect();
        assert_eq!(
            names,
            ["u", "v", "u~v~m1", "u~v~m2", "u~leaf~1", "u~v~m1~leaf~1", "u~v~m2~leaf~1", "v~leaf~1"]
        );
    }

    #[test]
    fn leafy_star_shapes() {
        let l1 = leafy_star(1).unwrap();
        let g = l1.graph();
        assert_eq!((g.num_vertices(), g.num_edges()), (4, 3));
        // b - c - f - b
        let idx = |n: &str| g.index_of(n).unwrap();
        assert!(g.has_edge(idx("c~leaf~1"), idx("c")));
        assert!(g.has_edge(idx("c"), idx("f1")));
        assert!(g.has_edge(idx("f1"), idx("f1~leaf~1")));
        assert_eq!(l1.free_colours(), ["x1"]);

        let l3 = leafy_star(3).unwrap();
        assert_eq!(l3.graph().num_vertices(), 10);
        assert_eq!(l3.graph().num_edges(), 9);
        assert_eq!(l3.free_colours().len(), 3);
        assert!(matches!(leafy_star(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn glue_two_l1_is_w4() {
        let l1 = leafy_star(1).unwrap();
        let glued = glue_partitioned(&l1, &l1, &GlueSpec::new("x1", "x1")).unwrap();
        let g = glued.graph();
        assert_eq!((g.num_vertices(), g.num_edges()), (8, 7));
        assert!(glued.free_colours().is_empty());
        let mut deg = g.degrees();
        deg.sort_unstable();
        assert_eq!(deg, [1, 1, 1, 1, 2, 2, 3, 3]);
        assert_eq!(deg, {
            let mut d = replace_w4(&k2("u", "v")).degrees();
            d.sort_unstable();
            d
        });
    }

    #[test]
    fn glue_partitioned_rejects_bound_colour() {
        let l2 = leafy_star(2).unwrap();
        let err = glue_partitioned(&l2, &l2, &GlueSpec::new("x", "x1")).unwrap_err();
        assert!(matches!(err, Error::NotFree(_)));
    }

    #[test]
    fn glue_partitioned_keeps_one_bound_colour() {
        let l2 = leafy_star(2).unwrap();
        let l1 = leafy_star(1).unwrap();
        let g = glue_partitioned(&l2, &l1, &GlueSpec::new("x2", "x1")).unwrap();
        assert_eq!(g.free_colours(), ["x1"]);
        assert_eq!(g.graph().num_vertices(), 11);
        assert_eq!(g.graph().num_edges(), 10);
        // round trip through the partitioned constructor re-validates
        PartitionedGraph::new(g.coloured().clone(), g.bound_colour()).unwrap();
    }

    #[test]
    fn reconstruction_counts_on_p3() {
        let p3 = Graph::from_indices(3, &[(0, 1), (1, 2)]).unwrap();
        let glued = w4_by_glueing(&p3).unwrap();
        assert_eq!(glued.graph().num_vertices(), 15);
        assert_eq!(glued.graph().num_edges(), 14);
        let r = replace_w4(&p3);
        assert_eq!(r.num_vertices(), 15);
        assert_eq!(r.num_edges(), 14);
    }

    #[test]
    fn partitioned_invariant_enforced() {
        let g = Graph::from_indices(3, &[]).unwrap();
        let cg = ColouredGraph::new(g, vec!["a".into(), "b".into(), "b".into()]).unwrap();
        assert!(matches!(
            PartitionedGraph::new(cg.clone(), "a"),
            Err(Error::NotPartitioned(_))
        ));
        assert!(PartitionedGraph::new(cg.clone(), "b").is_ok());
        assert!(matches!(
            PartitionedGraph::new(cg, "z"),
            Err(Error::UnknownColour(_))
        ));
    }

    #[test]
    fn doc_defaults() {
        let doc: GraphDoc =
            serde_json::from_str(r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#).unwrap();
        let cg = doc.to_coloured().unwrap();
        assert!(cg.is_free("a") && cg.is_free("b"));
        assert!(matches!(doc.to_partitioned(), Err(Error::MissingBoundColour)));
        let bad: GraphDoc = serde_json::from_str(
            r#"{"vertices":["a","b"],"edges":[["a","b"]],"colours":{"a":"r"}}"#,
        )
        .unwrap();
        assert!(matches!(bad.to_coloured(), Err(Error::MissingColour(_))));
        let dup: GraphDoc = serde_json::from_str(
            r#"{"vertices":["a","b"],"edges":[["a","b"],["b","a"]]}"#,
        )
        .unwrap();
        assert!(dup.to_graph().is_err());
    }

    #[test]
    fn doc_is_stable() {
        let l1 = leafy_star(1).unwrap();
        let text = serde_json::to_string(&l1.to_doc()).unwrap();
        assert_eq!(
            text,
            r#"{"vertices":["c","c~leaf~1","f1","f1~leaf~1"],"edges":[["c","c~leaf~1"],["c","f1"],["f1","f1~leaf~1"]],"colours":{"c":"x","c~leaf~1":"x","f1":"x1","f1~leaf~1":"x"},"bound_colour":"x"}"#
        );
        let back: GraphDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_partitioned().unwrap(), l1);
    }
}
