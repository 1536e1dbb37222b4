//! Small dense undirected graphs.

use std::fmt::{self, Display, Write as _};

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        g
    }

    /// Self-loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a][b] = true;
            self.adj[b][a] = true;
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&x| x).count()
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().enumerate().filter(|(_, &x)| x).map(|(i, _)| i)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.adj[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.adj[a][b]))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| !self.adj[a][b]))
    }
}

/// A graph whose vertices carry labels, kept in ascending label order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph<T> {
    pub labels: Vec<T>,
    pub graph: Graph,
}

impl<T: Ord + Clone> LabeledGraph<T> {
    pub fn index_of(&self, label: &T) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn adjacent_labels(&self, a: &T, b: &T) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.graph.adjacent(i, j),
            _ => false,
        }
    }

    pub fn edge_labels(&self) -> Vec<(T, T)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect()
    }
}

impl<T: Display> LabeledGraph<T> {
    /// DOT text: one node per label in stored order, then edges in
    /// lexicographic index order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {name} {{");
        for l in &self.labels {
            let _ = writeln!(s, "  \"{l}\";");
        }
        for (a, b) in self.graph.edges() {
            let _ = writeln!(s, "  \"{}\" -- \"{}\";", self.labels[a], self.labels[b]);
        }
        s.push_str("}\n");
        s
    }
}

impl<T: Display> Display for LabeledGraph<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dot("G"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 1)]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(1), 2);
        assert!(g.is_independent(&[0, 3]));
        assert!(g.is_clique(&[1, 2]));
        assert!(!g.is_clique(&[0, 2]));
        assert_eq!(Graph::complete(4).edge_count(), 6);
    }

    #[test]
    fn dot_is_stable() {
        let lg = LabeledGraph {
            labels: vec![2u32, 3, 5],
            graph: Graph::from_edges(3, &[(2, 0)]),
        };
        assert_eq!(
            lg.to_dot("AD"),
            "graph AD {\n  \"2\";\n  \"3\";\n  \"5\";\n  \"2\" -- \"5\";\n}\n"
        );
        assert!(lg.adjacent_labels(&5, &2));
        assert!(!lg.adjacent_labels(&3, &2));
    }
}
