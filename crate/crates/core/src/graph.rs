//! Graph representation, BFS distances, and cartesian products.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A finite simple undirected graph with dense 0-based vertex indices.
///
/// Adjacency lists are sorted strictly ascending; symmetry and the absence of
/// loops and multi-edges are enforced at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    name: Option<String>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation but duplicates, loops, and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph must have at least one vertex".into(),
            ));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter("duplicate edge".into()));
            }
        }
        Ok(Graph {
            n,
            adj,
            name: None,
            labels: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of vertex `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        self.distance_matrix_with(&Limits::default())
    }

    pub fn distance_matrix_with(&self, limits: &Limits) -> Result<DistanceMatrix> {
        DistanceMatrix::build(self, limits)
    }

    pub fn from_json_str(text: &str) -> Result<Graph> {
        let parsed: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidGraphJson(e.to_string()))?;
        parsed.into_graph()
    }

    pub fn to_json_string(&self) -> String {
        let json = GraphJson {
            name: self.name.clone(),
            n: self.n,
            edges: self.edges(),
            labels: self.labels.clone(),
        };
        serde_json::to_string(&json).expect("graph serialization cannot fail")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph({}, n={}, m={})",
            self.name.as_deref().unwrap_or("?"),
            self.n,
            self.edge_count()
        )
    }
}

/// Interchange format: `{"name": ..?, "n": .., "edges": [[u,v],..], "labels": ..?}`
/// with each edge listed once as `u < v`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl GraphJson {
    fn into_graph(self) -> Result<Graph> {
        for &(u, v) in &self.edges {
            if u >= v {
                return Err(Error::InvalidGraphJson(format!(
                    "edge [{u},{v}] must satisfy u < v"
                )));
            }
            if v >= self.n {
                return Err(Error::InvalidGraphJson(format!(
                    "edge [{u},{v}] out of range for n={}",
                    self.n
                )));
            }
        }
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraphJson("duplicate edge".into()));
        }
        let mut g = Graph::new(self.n, &self.edges)
            .map_err(|e| Error::InvalidGraphJson(e.to_string()))?;
        if let Some(name) = self.name {
            g = g.with_name(name);
        }
        if let Some(labels) = self.labels {
            g = g
                .with_labels(labels)
                .map_err(|e| Error::InvalidGraphJson(e.to_string()))?;
        }
        Ok(g)
    }
}

/// All-pairs shortest-path table of a connected graph, hop counts.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    fn build(g: &Graph, limits: &Limits) -> Result<DistanceMatrix> {
        if g.n() > limits.max_graph_n {
            return Err(Error::SizeLimit(format!(
                "n={} exceeds distance matrix cap {}",
                g.n(),
                limits.max_graph_n
            )));
        }
        let n = g.n();
        let mut d = vec![u32::MAX; n * n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            let row = &mut d[src * n..(src + 1) * n];
            row[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in g.neighbors(u) {
                    if row[v] == u32::MAX {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
            if row.contains(&u32::MAX) {
                return Err(Error::DisconnectedGraph);
            }
        }
        let diameter = d.iter().copied().max().unwrap_or(0);
        Ok(DistanceMatrix { n, d, diameter })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }
}

/// Cartesian product with vertex `(u, v)` at index `u * |V(H)| + v`.
///
/// `(u1,v1) ~ (u2,v2)` iff the vertices agree in one coordinate and are
/// adjacent in the other. Labels are composed as `"u|v"`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let n = g.n() * nh;
    let mut edges = Vec::with_capacity(g.edge_count() * nh + h.edge_count() * g.n());
    for u in 0..g.n() {
        for (v1, v2) in h.edges() {
            edges.push((u * nh + v1, u * nh + v2));
        }
    }
    for (u1, u2) in g.edges() {
        for v in 0..nh {
            edges.push((u1 * nh + v, u2 * nh + v));
        }
    }
    let mut labels = Vec::with_capacity(n);
    for u in 0..g.n() {
        for v in 0..nh {
            labels.push(format!("{}|{}", g.label(u), h.label(v)));
        }
    }
    let mut product = Graph::new(n, &edges)
        .expect("product of valid graphs is valid")
        .with_labels(labels)
        .expect("label count matches by construction");
    if let (Some(a), Some(b)) = (g.name(), h.name()) {
        product = product.with_name(format!("{a}□{b}"));
    }
    product
}

/// Self-test of the product constructor: BFS distance in `g □ h` must equal
/// the sum of the factor distances for every vertex pair.
pub fn product_distance_identity_check(g: &Graph, h: &Graph) -> Result<bool> {
    let dg = g.distance_matrix()?;
    let dh = h.distance_matrix()?;
    let p = cartesian_product(g, h);
    let dp = p.distance_matrix()?;
    let nh = h.n();
    for u1 in 0..g.n() {
        for v1 in 0..nh {
            for u2 in 0..g.n() {
                for v2 in 0..nh {
                    let expected = dg.get(u1, u2) + dh.get(v1, v2);
                    if dp.get(u1 * nh + v1, u2 * nh + v2) != expected {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, hypercube, path};

    #[test]
    fn connectivity() {
        assert!(path(4).unwrap().is_connected());
        assert!(complete(5).unwrap().is_connected());
        let isolated = Graph::new(2, &[]).unwrap();
        assert!(!isolated.is_connected());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(0, 0)]),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn distances_on_small_graphs() {
        let c5 = cycle(5).unwrap();
        let dm = c5.distance_matrix().unwrap();
        assert_eq!(dm.get(0, 2), 2);
        assert_eq!(dm.diameter(), 2);

        let k4 = complete(4).unwrap();
        let dm = k4.distance_matrix().unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(dm.get(u, v), u32::from(u != v));
            }
        }

        let q3 = hypercube(3).unwrap();
        let dm = q3.distance_matrix().unwrap();
        assert_eq!(dm.get(0, 7), 3);
        assert_eq!(dm.diameter(), 3);
    }

    #[test]
    fn disconnected_distance_matrix_is_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.distance_matrix().unwrap_err(), Error::DisconnectedGraph);
    }

    #[test]
    fn distance_one_exactly_on_edges() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let dm = g.distance_matrix().unwrap();
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(dm.get(u, v) == 0, u == v);
                assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                assert_eq!(dm.get(u, v), dm.get(v, u));
            }
        }
    }

    #[test]
    fn product_small_cases() {
        let k2 = complete(2).unwrap();
        let square = cartesian_product(&k2, &k2);
        assert_eq!(square.n(), 4);
        assert_eq!(square.edge_count(), 4);
        assert!((0..4).all(|v| square.degree(v) == 2));

        let prism = cartesian_product(&k2, &cycle(3).unwrap());
        assert_eq!(prism.n(), 6);
        assert_eq!(prism.edge_count(), 9);

        let grid = cartesian_product(&path(2).unwrap(), &path(3).unwrap());
        assert_eq!(grid.n(), 6);
        assert_eq!(grid.edge_count(), 7);
    }

    #[test]
    fn product_order_and_size_formula() {
        let factors = [
            path(3).unwrap(),
            cycle(4).unwrap(),
            complete(4).unwrap(),
            path(5).unwrap(),
        ];
        for g in &factors {
            for h in &factors {
                let p = cartesian_product(g, h);
                assert_eq!(p.n(), g.n() * h.n());
                assert_eq!(
                    p.edge_count(),
                    g.edge_count() * h.n() + h.edge_count() * g.n()
                );
            }
        }
    }

    #[test]
    fn product_distance_identity_on_corpus() {
        let factors = [
            complete(2).unwrap(),
            complete(3).unwrap(),
            path(3).unwrap(),
            path(4).unwrap(),
            cycle(4).unwrap(),
            cycle(5).unwrap(),
        ];
        for g in &factors {
            for h in &factors {
                assert!(product_distance_identity_check(g, h).unwrap());
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = cycle(5)
            .unwrap()
            .with_labels((0..5).map(|i| format!("v{i}")).collect())
            .unwrap();
        let text = g.to_json_string();
        let back = Graph::from_json_str(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json_string(), text);
    }

    #[test]
    fn json_rejects_malformed_input() {
        for bad in [
            r#"{"n": 3, "edges": [[1,0]]}"#,
            r#"{"n": 3, "edges": [[0,1],[0,1]]}"#,
            r#"{"n": 3, "edges": [[0,3]]}"#,
            r#"{"n": 3, "edges": [[1,1]]}"#,
            r#"{"n": 2, "edges": [], "labels": ["a"]}"#,
            r#"not json"#,
        ] {
            assert!(matches!(
                Graph::from_json_str(bad),
                Err(Error::InvalidGraphJson(_))
            ));
        }
    }
}
