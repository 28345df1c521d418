//! Graph substrate: multigraphs with provenance labels and the simple
//! labeled graphs obtained from them, plus the set predicates and
//! connectivity checks everything else is built on.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Vertex index into a graph's label table.
pub type Vertex = u32;

/// Sorted, duplicate-free set of vertex ids of a host graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_iter<I: IntoIterator<Item = Vertex>>(it: I) -> Self {
        let set: BTreeSet<Vertex> = it.into_iter().collect();
        VertexSet(set.into_iter().collect())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: Vertex) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(it: I) -> Self {
        VertexSet::from_iter(it)
    }
}

/// Errors from graph operations on explicit vertices or edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    UnknownVertex(Vertex),
    UnknownEdge(Vertex, Vertex),
    SizeLimit { size: usize, limit: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            GraphError::UnknownEdge(u, v) => write!(f, "unknown edge {u}-{v}"),
            GraphError::SizeLimit { size, limit } => {
                write!(f, "graph has {size} vertices, limit is {limit}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

fn norm(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Undirected multigraph over label strings. Vertices are identified by
/// their labels; parallel edges are stored as multiplicities. Self-loops
/// are not representable (identification drops them).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multigraph {
    labels: Vec<String>,
    index: BTreeMap<String, Vertex>,
    edges: BTreeMap<(Vertex, Vertex), u32>,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, label: &str) -> Vertex {
        if let Some(&v) = self.index.get(label) {
            return v;
        }
        let v = self.labels.len() as Vertex;
        self.labels.push(String::from(label));
        self.index.insert(String::from(label), v);
        v
    }

    pub fn lookup(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v, "self-loops are dropped at identification time");
        *self.edges.entry(norm(u, v)).or_insert(0) += 1;
    }

    pub fn add_edge_labeled(&mut self, a: &str, b: &str) {
        let u = self.vertex(a);
        let v = self.vertex(b);
        self.add_edge(u, v);
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of edge classes (parallel edges counted once).
    pub fn edge_class_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> u32 {
        self.edges.get(&norm(u, v)).copied().unwrap_or(0)
    }

    pub fn edge_classes(&self) -> impl Iterator<Item = ((Vertex, Vertex), u32)> + '_ {
        self.edges.iter().map(|(&e, &m)| (e, m))
    }

    /// Multigraph degree (edge endpoints counted with multiplicity).
    pub fn degree(&self, v: Vertex) -> u32 {
        self.edges
            .iter()
            .map(|(&(a, b), &m)| if a == v || b == v { m } else { 0 })
            .sum()
    }

    /// Quotient by an assignment of vertices to classes. Class representatives
    /// keep the lexicographically least label of their members; self-loops are
    /// dropped, parallel multiplicities accumulate. `class_of` maps old vertex
    /// to a class key.
    pub fn quotient(&self, class_of: &dyn Fn(Vertex) -> Vertex) -> (Multigraph, Vec<Vertex>) {
        // choose least label per class
        let mut best: BTreeMap<Vertex, &str> = BTreeMap::new();
        for v in 0..self.labels.len() as Vertex {
            let c = class_of(v);
            let l = self.label(v);
            match best.get(&c) {
                Some(cur) if *cur <= l => {}
                _ => {
                    best.insert(c, l);
                }
            }
        }
        let mut out = Multigraph::new();
        let mut map = vec![0; self.labels.len()];
        let mut class_vertex: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        for v in 0..self.labels.len() as Vertex {
            let c = class_of(v);
            let nv = *class_vertex
                .entry(c)
                .or_insert_with(|| out.vertex(best[&c]));
            map[v as usize] = nv;
        }
        for (&(u, v), &m) in &self.edges {
            let (nu, nv) = (map[u as usize], map[v as usize]);
            if nu != nv {
                *out.edges.entry(norm(nu, nv)).or_insert(0) += m;
            }
        }
        (out, map)
    }

    /// Repeatedly removes multigraph-degree-2 vertices, replacing each one's
    /// two incident edge endpoints by a direct edge. A vertex whose two edge
    /// endpoints reach the same neighbor (a doubled edge) is removed together
    /// with the resulting loop. Labels of suppressed vertices disappear.
    pub fn suppress_degree2(&self) -> Multigraph {
        let mut edges = self.edges.clone();
        loop {
            let mut deg: BTreeMap<Vertex, u32> = BTreeMap::new();
            for (&(u, v), &m) in &edges {
                *deg.entry(u).or_insert(0) += m;
                *deg.entry(v).or_insert(0) += m;
            }
            let target = (0..self.labels.len() as Vertex)
                .find(|v| deg.get(v).copied().unwrap_or(0) == 2 && deg.contains_key(v));
            let Some(t) = target else { break };
            let incident: Vec<(Vertex, Vertex)> = edges
                .keys()
                .copied()
                .filter(|&(u, v)| u == t || v == t)
                .collect();
            if incident.len() == 1 {
                // doubled edge to one neighbor: vertex and loop vanish
                edges.remove(&incident[0]);
                continue;
            }
            let other = |e: (Vertex, Vertex)| if e.0 == t { e.1 } else { e.0 };
            let (n1, n2) = (other(incident[0]), other(incident[1]));
            for e in &incident {
                let m = edges.get_mut(e).unwrap();
                *m -= 1;
                if *m == 0 {
                    edges.remove(e);
                }
            }
            if n1 != n2 {
                *edges.entry(norm(n1, n2)).or_insert(0) += 1;
            }
        }
        // rebuild with only surviving vertices
        let mut out = Multigraph::new();
        let mut live: BTreeSet<Vertex> = BTreeSet::new();
        for &(u, v) in edges.keys() {
            live.insert(u);
            live.insert(v);
        }
        let mut map = BTreeMap::new();
        for &v in &live {
            map.insert(v, out.vertex(self.label(v)));
        }
        for (&(u, v), &m) in &edges {
            out.edges.insert(norm(map[&u], map[&v]), m);
        }
        out
    }

    /// Collapses parallel edges to multiplicity 1. Vertex set unchanged.
    pub fn simplify_parallel(&self) -> Multigraph {
        let mut out = self.clone();
        for m in out.edges.values_mut() {
            *m = 1;
        }
        out
    }
}

/// Simple undirected graph whose vertices carry provenance labels surviving
/// identification and suppression. Vertices are ordered by label, so equal
/// constructions produce identical graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    labels: Vec<String>,
    adj: Vec<Vec<Vertex>>,
}

impl LabeledGraph {
    /// Builds from explicit labels and edges; sorts vertices by label.
    pub fn from_edges<'a, I>(labels: I, edges: &[(&'a str, &'a str)]) -> Self
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut g = Multigraph::new();
        for l in labels {
            g.vertex(l);
        }
        for (a, b) in edges {
            g.add_edge_labeled(a, b);
        }
        LabeledGraph::from_multigraph(&g)
    }

    /// Simple view of a multigraph: multiplicities collapse to single edges.
    pub fn from_multigraph(g: &Multigraph) -> Self {
        let mut order: Vec<Vertex> = (0..g.vertex_count() as Vertex).collect();
        order.sort_by(|&a, &b| g.label(a).cmp(g.label(b)));
        let mut pos = vec![0 as Vertex; g.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i as Vertex;
        }
        let labels = order.iter().map(|&v| String::from(g.label(v))).collect();
        let mut adj: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); g.vertex_count()];
        for ((u, v), _m) in g.edge_classes() {
            let (pu, pv) = (pos[u as usize], pos[v as usize]);
            adj[pu as usize].insert(pv);
            adj[pv as usize].insert(pu);
        }
        LabeledGraph {
            labels,
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }

    pub fn lookup(&self, label: &str) -> Option<Vertex> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .ok()
            .map(|i| i as Vertex)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.labels.len() as Vertex
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Sorted edge list (u < v).
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in self.vertices() {
            for &w in self.neighbors(v) {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if (v as usize) < self.labels.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Union of closed neighborhoods of `set`.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> Result<VertexSet, GraphError> {
        let mut out = BTreeSet::new();
        for v in set.iter() {
            self.check_vertex(v)?;
            out.insert(v);
            out.extend(self.neighbors(v).iter().copied());
        }
        Ok(out.into_iter().collect())
    }

    /// True iff the closed neighborhood of `set` covers every vertex.
    pub fn is_dominating(&self, set: &VertexSet) -> Result<bool, GraphError> {
        Ok(self.closed_neighborhood(set)?.len() == self.vertex_count())
    }

    /// True iff no edge joins two members of `set`.
    pub fn is_independent(&self, set: &VertexSet) -> Result<bool, GraphError> {
        for v in set.iter() {
            self.check_vertex(v)?;
        }
        for v in set.iter() {
            for &w in self.neighbors(v) {
                if w > v && set.contains(w) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0 as Vertex];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    fn connected_without(&self, removed: &[Vertex]) -> bool {
        let n = self.vertex_count();
        let mut blocked = vec![false; n];
        for &v in removed {
            blocked[v as usize] = true;
        }
        let start = match (0..n as Vertex).find(|v| !blocked[*v as usize]) {
            Some(s) => s,
            None => return true,
        };
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start as usize] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] && !blocked[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n - removed.len()
    }

    /// 3-connectivity by exhaustive 2-cut enumeration: |V| >= 4, connected,
    /// and no one- or two-vertex removal disconnects the rest.
    pub fn is_3_connected(&self) -> bool {
        let n = self.vertex_count();
        if n < 4 || !self.is_connected() {
            return false;
        }
        for u in 0..n as Vertex {
            if !self.connected_without(&[u]) {
                return false;
            }
        }
        for u in 0..n as Vertex {
            for v in (u + 1)..n as Vertex {
                if !self.connected_without(&[u, v]) {
                    return false;
                }
            }
        }
        true
    }

    /// Copy with one edge removed.
    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Result<LabeledGraph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::UnknownEdge(u, v));
        }
        let mut out = self.clone();
        out.adj[u as usize].retain(|&w| w != v);
        out.adj[v as usize].retain(|&w| w != u);
        Ok(out)
    }

    /// Copy with one vertex (and its edges) removed; labels keep the survivors.
    pub fn delete_vertex(&self, v: Vertex) -> Result<LabeledGraph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<Vertex> = self.vertices().filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    /// Induced subgraph on the given (sorted or unsorted) vertices.
    pub fn induced(&self, verts: &[Vertex]) -> LabeledGraph {
        let set: BTreeSet<Vertex> = verts.iter().copied().collect();
        let mut g = Multigraph::new();
        for &v in &set {
            g.vertex(self.label(v));
        }
        for &v in &set {
            for &w in self.neighbors(v) {
                if w > v && set.contains(&w) {
                    g.add_edge_labeled(self.label(v), self.label(w));
                }
            }
        }
        // isolated vertices survive via explicit vertex insertion
        LabeledGraph::from_multigraph(&g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> LabeledGraph {
        let labels: Vec<String> = (0..n).map(|i| alloc::format!("v{i}")).collect();
        let mut g = Multigraph::new();
        for l in &labels {
            g.vertex(l);
        }
        for w in labels.windows(2) {
            g.add_edge_labeled(&w[0], &w[1]);
        }
        LabeledGraph::from_multigraph(&g)
    }

    fn complete(n: usize) -> LabeledGraph {
        let mut g = Multigraph::new();
        let vs: Vec<Vertex> = (0..n)
            .map(|i| g.vertex(&alloc::format!("v{i}")))
            .collect();
        for i in 0..n {
            for j in (i + 1)..n {
                g.add_edge(vs[i], vs[j]);
            }
        }
        LabeledGraph::from_multigraph(&g)
    }

    #[test]
    fn closed_neighborhood_star() {
        // star K_{1,3}: center dominates everything
        let g = LabeledGraph::from_edges(
            ["c", "x", "y", "z"],
            &[("c", "x"), ("c", "y"), ("c", "z")],
        );
        let c = g.lookup("c").unwrap();
        let nb = g
            .closed_neighborhood(&VertexSet::from_iter([c]))
            .unwrap();
        assert_eq!(nb.len(), 4);
        let empty = g.closed_neighborhood(&VertexSet::new()).unwrap();
        assert!(empty.is_empty());
        let all = VertexSet::from_iter(g.vertices());
        assert_eq!(g.closed_neighborhood(&all).unwrap(), all);
    }

    #[test]
    fn dominating_and_independent() {
        let p4 = path(4);
        let leaf = VertexSet::from_iter([p4.lookup("v0").unwrap()]);
        assert!(!p4.is_dominating(&leaf).unwrap());
        let all = VertexSet::from_iter(p4.vertices());
        assert!(p4.is_dominating(&all).unwrap());
        assert!(p4.is_independent(&VertexSet::new()).unwrap());
        let uv = VertexSet::from_iter([p4.lookup("v0").unwrap(), p4.lookup("v1").unwrap()]);
        assert!(!p4.is_independent(&uv).unwrap());
        let alt = VertexSet::from_iter([p4.lookup("v0").unwrap(), p4.lookup("v2").unwrap()]);
        assert!(p4.is_independent(&alt).unwrap());
    }

    #[test]
    fn three_connectivity() {
        assert!(complete(4).is_3_connected());
        assert!(!path(3).is_3_connected());
        assert!(!complete(3).is_3_connected());
        // K4 minus an edge is only 2-connected
        let k4 = complete(4);
        let e = k4.edges()[0];
        assert!(!k4.delete_edge(e.0, e.1).unwrap().is_3_connected());
    }

    #[test]
    fn deletion() {
        let k3 = complete(3);
        let e = k3.edges()[0];
        let p = k3.delete_edge(e.0, e.1).unwrap();
        assert_eq!(p.edge_count(), 2);
        assert!(p.is_connected());
        let k4 = complete(4);
        let q = k4.delete_vertex(0).unwrap();
        assert_eq!(q.vertex_count(), 3);
        assert_eq!(q.edge_count(), 3);
        assert_eq!(
            k3.delete_edge(97, 98),
            Err(GraphError::UnknownVertex(97))
        );
        let far = k3.delete_edge(0, 0);
        assert!(far.is_err());
    }

    #[test]
    fn suppression_basics() {
        // path a-x-b with deg(x)=2 becomes edge ab
        let mut g = Multigraph::new();
        let a = g.vertex("a");
        let x = g.vertex("x");
        let b = g.vertex("b");
        g.add_edge(a, x);
        g.add_edge(x, b);
        // anchor a and b so they do not cascade away
        let c = g.vertex("c");
        g.add_edge(a, c);
        g.add_edge(b, c);
        g.add_edge(a, b);
        let s = g.suppress_degree2();
        assert_eq!(s.lookup("x"), None);
        let (na, nb) = (s.lookup("a").unwrap(), s.lookup("b").unwrap());
        // a-x-b collapsed onto the existing ab edge: multiplicity 2
        assert_eq!(s.multiplicity(na, nb), 2);
        // simplify collapses the pair
        let simple = s.simplify_parallel();
        assert_eq!(simple.multiplicity(na, nb), 1);
    }

    #[test]
    fn suppression_fixpoint_on_min_degree_3() {
        let k4 = {
            let mut g = Multigraph::new();
            let vs: Vec<Vertex> = ["a", "b", "c", "d"].iter().map(|l| g.vertex(l)).collect();
            for i in 0..4 {
                for j in (i + 1)..4 {
                    g.add_edge(vs[i], vs[j]);
                }
            }
            g
        };
        assert_eq!(k4.suppress_degree2(), k4);
    }

    #[test]
    fn doubled_edge_to_single_neighbor_vanishes() {
        let mut g = Multigraph::new();
        let a = g.vertex("a");
        let x = g.vertex("x");
        let b = g.vertex("b");
        let c = g.vertex("c");
        g.add_edge(a, x);
        g.add_edge(a, x);
        g.add_edge(a, b);
        g.add_edge(a, c);
        g.add_edge(b, c);
        let s = g.suppress_degree2();
        assert_eq!(s.lookup("x"), None);
        assert!(s.lookup("a").is_some());
    }
}
