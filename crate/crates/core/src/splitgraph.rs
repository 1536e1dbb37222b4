//! Split graphs: recognition by degree sequence, maximum cocliques, and
//! the rank candidates that a coclique size allows.

use crate::atomic::AdGraph;
use crate::graph::Graph;
use crate::spectra::{omega_contains, Family, MinSpec};

/// A partition of the vertices into a clique and an independent set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.order()];
        for &v in self.clique.iter().chain(&self.independent) {
            if v >= seen.len() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        seen.iter().all(|&s| s) && g.is_clique(&self.clique) && g.is_independent(&self.independent)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("graph is not split")]
pub struct NotSplit;

/// Degree-sequence test: with `d_1 ≥ … ≥ d_n` and `h = max{i : d_i ≥ i-1}`,
/// the graph is split iff `Σ_{i≤h} d_i = h(h-1) + Σ_{i>h} d_i`. The top `h`
/// vertices then form the clique.
pub fn split_partition(g: &Graph) -> Result<SplitPartition, NotSplit> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let h = (1..=n).filter(|&i| deg[i - 1] + 1 >= i).max().unwrap_or(0);
    let top: usize = deg[..h].iter().sum();
    let bottom: usize = deg[h..].iter().sum();
    if top != h * h.saturating_sub(1) + bottom {
        return Err(NotSplit);
    }
    let mut p = SplitPartition {
        clique: order[..h].to_vec(),
        independent: order[h..].to_vec(),
    };
    if !p.is_valid_for(g) {
        p = repair(g, p).ok_or(NotSplit)?;
    }
    // a lone isolated clique vertex belongs to the independent side
    if p.clique.len() == 1 && g.degree(p.clique[0]) == 0 {
        let v = p.clique.pop().unwrap();
        p.independent.push(v);
    }
    p.clique.sort_unstable();
    p.independent.sort_unstable();
    Ok(p)
}

/// Moves one boundary vertex across when the degree order put it on the
/// wrong side.
fn repair(g: &Graph, p: SplitPartition) -> Option<SplitPartition> {
    let mut tries = Vec::new();
    if let Some((&last, rest)) = p.clique.split_last() {
        let mut ind = p.independent.clone();
        ind.push(last);
        tries.push(SplitPartition {
            clique: rest.to_vec(),
            independent: ind,
        });
    }
    for (i, &v) in p.independent.iter().enumerate() {
        let mut cl = p.clique.clone();
        cl.push(v);
        let mut ind = p.independent.clone();
        ind.remove(i);
        tries.push(SplitPartition {
            clique: cl,
            independent: ind,
        });
    }
    tries.into_iter().find(|t| t.is_valid_for(g))
}

/// Maximum independent set of a split graph: an independent set meets the
/// clique in at most one vertex, so the best is `I` or `{v} ∪ (I ∖ N(v))`.
pub fn max_coclique_split(g: &Graph, p: &SplitPartition) -> Vec<usize> {
    let mut best = p.independent.clone();
    for &v in &p.clique {
        let mut cand: Vec<usize> = p
            .independent
            .iter()
            .copied()
            .filter(|&u| !g.adjacent(u, v))
            .collect();
        cand.push(v);
        if cand.len() > best.len() {
            best = cand;
        }
    }
    best.sort_unstable();
    best
}

/// Maximum coclique size of a classical group with rank parameter `n`
/// (dimension for `L`, `U`; Lie rank otherwise).
pub fn coclique_size(family: Family, n: u32) -> u32 {
    match family {
        Family::L | Family::U => n.div_ceil(2),
        Family::S | Family::OOdd => (3 * n + 5) / 4,
        Family::OPlus if n % 4 == 3 => (3 * n).div_ceil(4),
        Family::OPlus => (3 * n + 1) / 4,
        Family::OMinus => (3 * n + 4) / 4,
    }
}

/// All rank parameters `n` with `coclique_size(family, n) = t`, ascending.
pub fn ranks_from_coclique(t: u32, family: Family) -> Vec<u32> {
    // every formula is at least (n + 1) / 2 - 1, so n ≤ 2t + 2 covers all
    (1..=2 * t + 2)
        .filter(|&n| coclique_size(family, n) == t)
        .collect()
}

/// Vertices `v` of the AD-graph with `4v ∉ ω(M)`.
pub fn theta_star_4(mu: &MinSpec, adg: &AdGraph) -> (usize, Vec<usize>) {
    let witness: Vec<usize> = adg
        .graph
        .labels
        .iter()
        .enumerate()
        .filter(|(_, v)| !omega_contains(mu, &(*v * 4u32)))
        .map(|(i, _)| i)
        .collect();
    (witness.len(), witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atomic::build_ad_graph;
    use crate::spectra::mu_of;

    #[test]
    fn path_and_cycle() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let p = split_partition(&p4).unwrap();
        assert_eq!(p.clique, vec![1, 2]);
        assert_eq!(p.independent, vec![0, 3]);
        assert_eq!(max_coclique_split(&p4, &p).len(), 2);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(split_partition(&c5), Err(NotSplit));
        let one = split_partition(&Graph::new(1)).unwrap();
        assert!(one.clique.is_empty());
        assert_eq!(one.independent, vec![0]);
    }

    #[test]
    fn extreme_cocliques() {
        let k5 = Graph::complete(5);
        let p = split_partition(&k5).unwrap();
        assert_eq!(max_coclique_split(&k5, &p).len(), 1);
        let e5 = Graph::new(5);
        let p = split_partition(&e5).unwrap();
        assert_eq!(max_coclique_split(&e5, &p).len(), 5);
    }

    #[test]
    fn rank_candidates() {
        assert_eq!(ranks_from_coclique(7, Family::L), vec![13, 14]);
        assert_eq!(ranks_from_coclique(10, Family::S), vec![12]);
        assert_eq!(coclique_size(Family::OPlus, 15), 12);
        for f in Family::ALL {
            for n in 12..=200 {
                assert!(ranks_from_coclique(coclique_size(f, n), f).contains(&n));
                assert!(ranks_from_coclique(coclique_size(f, n), f).len() <= 2);
            }
        }
    }

    #[test]
    fn theta_examples() {
        let mu = mu_of(&[2, 3, 5]);
        let adg = build_ad_graph(&mu, 10).unwrap();
        assert_eq!(theta_star_4(&mu, &adg).0, 3);
        let mu = mu_of(&[60]);
        let adg = build_ad_graph(&mu, 10).unwrap();
        assert_eq!(theta_star_4(&mu, &adg).0, 1);
    }
}
