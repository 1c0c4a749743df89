//! Euler characteristics of ordered two-point configuration spaces of graphs.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::algebra::ExactInt;
use crate::error::{Error, Result};

/// A finite simple graph with labelled vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl Graph {
    /// Builds a graph from vertex indices, rejecting loops and repeated edges.
    pub fn new(vertices: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut stored = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(Error::invalid(format!(
                    "edge ({a}, {b}) has an unknown endpoint"
                )));
            }
            if a == b {
                return Err(Error::invalid(format!("loop at vertex `{}`", vertices[a])));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(Error::invalid(format!(
                    "repeated edge `{}`-`{}`",
                    vertices[key.0], vertices[key.1]
                )));
            }
            stored.push(key);
        }
        let unique: BTreeSet<&String> = vertices.iter().collect();
        if unique.len() != vertices.len() {
            return Err(Error::invalid("vertex labels must be distinct"));
        }
        Ok(Self {
            vertices,
            edges: stored,
        })
    }

    /// Graph on vertices `0..n` labelled by their index.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect(), edges)
    }

    /// Reads `{"vertices":["a","b",...], "edges":[["a","b"],...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
        let index: HashMap<&str, usize> = raw
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut edges = Vec::with_capacity(raw.edges.len());
        for (a, b) in &raw.edges {
            let ia = *index
                .get(a.as_str())
                .ok_or_else(|| Error::invalid(format!("edge endpoint `{a}` is not a vertex")))?;
            let ib = *index
                .get(b.as_str())
                .ok_or_else(|| Error::invalid(format!("edge endpoint `{b}` is not a vertex")))?;
            edges.push((ia, ib));
        }
        Self::new(raw.vertices, &edges)
    }

    /// Built-in graphs: `gamma1` (two squares sharing an edge), `gamma2`
    /// (two triangles sharing a vertex), `path:k`, `cycle:k`, `star:k`.
    pub fn fixture(name: &str) -> Result<Self> {
        let sized = |prefix: &str| -> Option<usize> {
            name.strip_prefix(prefix)
                .and_then(|s| s.strip_prefix(':'))
                .and_then(|s| s.parse().ok())
        };
        match name {
            "gamma1" => {
                Self::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)])
            }
            "gamma2" => Self::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]),
            _ => {
                if let Some(k) = sized("path") {
                    Self::from_edges(k + 1, &(0..k).map(|i| (i, i + 1)).collect::<Vec<_>>())
                } else if let Some(k) = sized("cycle") {
                    if k < 3 {
                        return Err(Error::invalid("a simple cycle needs at least 3 edges"));
                    }
                    Self::from_edges(k, &(0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>())
                } else if let Some(k) = sized("star") {
                    Self::from_edges(k + 1, &(1..=k).map(|i| (0, i)).collect::<Vec<_>>())
                } else {
                    Err(Error::invalid(format!("unknown graph fixture `{name}`")))
                }
            }
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Replaces every edge by a path of `k` edges.
    pub fn subdivide(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("subdivision factor must be at least 1"));
        }
        let mut vertices = self.vertices.clone();
        let mut edges = Vec::with_capacity(self.edges.len() * k);
        for &(a, b) in &self.edges {
            let mut prev = a;
            for step in 1..k {
                vertices.push(format!("{}~{}#{step}", self.vertices[a], self.vertices[b]));
                let v = vertices.len() - 1;
                edges.push((prev, v));
                prev = v;
            }
            edges.push((prev, b));
        }
        Self::new(vertices, &edges)
    }

    /// Length of the shortest cycle, if any.
    fn girth(&self) -> Option<usize> {
        let adj = self.adjacency();
        let n = self.vertices.len();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Shortest edge path between two distinct vertices of degree other than 2,
    /// walking only through degree-2 vertices.
    fn shortest_essential_path(&self) -> Option<usize> {
        let deg = self.degrees();
        let adj = self.adjacency();
        let mut best: Option<usize> = None;
        for (s, &ds) in deg.iter().enumerate() {
            if ds == 2 {
                continue;
            }
            for &first in &adj[s] {
                let (mut prev, mut cur, mut len) = (s, first, 1);
                while deg[cur] == 2 {
                    let next = if adj[cur][0] == prev {
                        adj[cur][1]
                    } else {
                        adj[cur][0]
                    };
                    prev = cur;
                    cur = next;
                    len += 1;
                    if cur == s {
                        break;
                    }
                }
                if cur != s {
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        best
    }

    /// Every cycle has at least 5 edges and every path between vertices of
    /// degree other than 2 has at least 3 edges.
    pub fn is_sufficiently_subdivided(&self) -> bool {
        self.girth().is_none_or(|g| g >= 5) && self.shortest_essential_path().is_none_or(|p| p >= 3)
    }
}

/// `|V| - |E|`.
pub fn chi_graph(graph: &Graph) -> ExactInt {
    ExactInt::from(graph.num_vertices()) - ExactInt::from(graph.num_edges())
}

/// Farber's closed formula for a connected graph:
/// `chi(F(G,2)) = chi^2 + chi - sum_v (deg v - 1)(deg v - 2)`.
pub fn farber_chi_f2(graph: &Graph) -> Result<ExactInt> {
    if !graph.is_connected() {
        return Err(Error::invalid("Farber's formula needs a connected graph"));
    }
    let chi = chi_graph(graph);
    let local: i64 = graph
        .degrees()
        .into_iter()
        .map(|m| (m as i64 - 1) * (m as i64 - 2))
        .sum();
    Ok(&chi * &chi + &chi - local)
}

/// `chi(F(G,2))` from the discretized configuration space: the alternating
/// count of ordered pairs of closed cells with disjoint closures, taken on a
/// subdivision fine enough for the cell model to be homotopy equivalent.
pub fn discretized_chi_f2(graph: &Graph) -> Result<ExactInt> {
    let fine;
    let g = if graph.is_sufficiently_subdivided() {
        graph
    } else {
        fine = graph.subdivide(3)?;
        debug_assert!(fine.is_sufficiently_subdivided());
        &fine
    };
    // closed cells: vertices (dim 0) and edges (dim 1), with their vertex closures
    let cells: Vec<(usize, Vec<usize>)> = (0..g.num_vertices())
        .map(|v| (0, vec![v]))
        .chain(g.edges().iter().map(|&(a, b)| (1, vec![a, b])))
        .collect();
    let mut total: i64 = 0;
    for (dim_a, closure_a) in &cells {
        for (dim_b, closure_b) in &cells {
            if closure_a.iter().all(|x| !closure_b.contains(x)) {
                total += if (dim_a + dim_b) % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    Ok(ExactInt::from(total))
}
