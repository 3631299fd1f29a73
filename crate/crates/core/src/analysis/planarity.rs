//! Lattice planarity via Platt's reduction: a finite lattice is planar
//! exactly when its undirected Hasse diagram together with an extra
//! bottom–top edge is a planar graph.

use crate::lattice::{Element, FiniteLattice};

/// The undirected edges of the Hasse diagram plus the bottom–top edge,
/// deduplicated.
pub fn hasse_with_bounds_edges(l: &FiniteLattice) -> Vec<(Element, Element)> {
    let mut edges: Vec<(Element, Element)> = l.covers().to_vec();
    let extra = (l.bottom(), l.top());
    if !edges.contains(&extra) && l.size() > 1 {
        edges.push(extra);
    }
    edges
}

/// Decides lattice planarity. The graph-level test is the left-right
/// planarity algorithm.
pub fn is_planar(l: &FiniteLattice) -> bool {
    if l.size() <= 2 {
        return true;
    }
    use rustworkx_core::petgraph::graph::UnGraph;
    let edges: Vec<(u32, u32)> = hasse_with_bounds_edges(l)
        .into_iter()
        .map(|(a, b)| (a as u32, b as u32))
        .collect();
    let graph = UnGraph::<(), ()>::from_edges(edges);
    rustworkx_core::planar::is_planar(&graph)
}

/// Planarity by exhaustive search for a K5 or K3,3 subdivision. A slow
/// independent oracle for [`is_planar`], intended for graphs of at most
/// about 16 vertices.
pub fn planar_by_kuratowski(n: usize, edges: &[(usize, usize)]) -> bool {
    assert!(n <= 24, "Kuratowski search is a desk-scale oracle");
    let mut adj = vec![0u32; n];
    for &(a, b) in edges {
        if a != b {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    !(has_subdivision_k5(n, &adj) || has_subdivision_k33(n, &adj))
}

fn has_subdivision_k5(n: usize, adj: &[u32]) -> bool {
    if n < 5 {
        return false;
    }
    let mut branch = [0usize; 5];
    choose(n, 5, 0, 0, &mut branch, &mut |b| {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
            .map(|(i, j)| (b[i], b[j]))
            .collect();
        let branch_mask = b.iter().fold(0u32, |m, &v| m | 1 << v);
        connect_disjoint(adj, &pairs, 0, branch_mask, 0)
    })
}

fn has_subdivision_k33(n: usize, adj: &[u32]) -> bool {
    if n < 6 {
        return false;
    }
    let mut branch = [0usize; 6];
    choose(n, 6, 0, 0, &mut branch, &mut |b| {
        // All ways to split the six chosen vertices 3/3, fixing b[0] on
        // the left side to kill the side swap symmetry.
        for c1 in 1..6 {
            for c2 in (c1 + 1)..6 {
                let left = [b[0], b[c1], b[c2]];
                let right: Vec<usize> = (1..6).filter(|&k| k != c1 && k != c2).map(|k| b[k]).collect();
                let pairs: Vec<(usize, usize)> = left
                    .iter()
                    .flat_map(|&u| right.iter().map(move |&v| (u, v)))
                    .collect();
                let branch_mask = b.iter().fold(0u32, |m, &v| m | 1 << v);
                if connect_disjoint(adj, &pairs, 0, branch_mask, 0) {
                    return true;
                }
            }
        }
        false
    })
}

fn choose(
    n: usize,
    k: usize,
    from: usize,
    depth: usize,
    buf: &mut [usize],
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if depth == k {
        return f(buf);
    }
    for v in from..n {
        buf[depth] = v;
        if choose(n, k, v + 1, depth + 1, buf, f) {
            return true;
        }
    }
    false
}

/// Tries to realize all `pairs` as paths that are internally disjoint
/// from each other and from every branch vertex.
fn connect_disjoint(
    adj: &[u32],
    pairs: &[(usize, usize)],
    idx: usize,
    branch_mask: u32,
    used: u32,
) -> bool {
    if idx == pairs.len() {
        return true;
    }
    let (s, t) = pairs[idx];
    path_then_rest(adj, pairs, idx, branch_mask, used, s, t, s, 0)
}

#[allow(clippy::too_many_arguments)]
fn path_then_rest(
    adj: &[u32],
    pairs: &[(usize, usize)],
    idx: usize,
    branch_mask: u32,
    used: u32,
    s: usize,
    t: usize,
    at: usize,
    interior: u32,
) -> bool {
    if adj[at] & (1 << t) != 0 && connect_disjoint(adj, pairs, idx + 1, branch_mask, used | interior)
    {
        return true;
    }
    let mut options = adj[at] & !branch_mask & !used & !interior;
    while options != 0 {
        let v = options.trailing_zeros() as usize;
        options &= options - 1;
        if v == s {
            continue;
        }
        if path_then_rest(adj, pairs, idx, branch_mask, used, s, t, v, interior | 1 << v) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean, chain, pentagon, snake};

    fn complete(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect()
    }

    #[test]
    fn kuratowski_oracle_on_known_graphs() {
        assert!(!planar_by_kuratowski(5, &complete(5)));
        assert!(planar_by_kuratowski(4, &complete(4)));
        let k33: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        assert!(!planar_by_kuratowski(6, &k33));
        // K3,3 minus one edge is planar.
        assert!(planar_by_kuratowski(6, &k33[1..]));
        // A subdivision of K5 stays non-planar: split each edge of K5.
        let mut edges = Vec::new();
        let mut next = 5;
        for (a, b) in complete(5) {
            edges.push((a, next));
            edges.push((next, b));
            next += 1;
        }
        assert!(!planar_by_kuratowski(next, &edges));
    }

    #[test]
    fn lattice_planarity_small_cases() {
        assert!(is_planar(&pentagon()));
        assert!(is_planar(&chain(7)));
        assert!(!is_planar(&boolean(3)));
        assert!(is_planar(&boolean(2)));
        assert!(!is_planar(&snake(0)));
    }

    #[test]
    fn oracle_agrees_with_lr_on_lattice_graphs() {
        for l in [pentagon(), boolean(2), boolean(3), chain(4), snake(0)] {
            let edges = hasse_with_bounds_edges(&l);
            assert_eq!(
                is_planar(&l),
                planar_by_kuratowski(l.size(), &edges),
                "planarity mismatch on {l:?}"
            );
        }
    }
}
