//! Cycles of the C relation on join irreducibles.

use super::{is_sd, relation_a, relation_b};
use crate::error::LatticeError;
use crate::lattice::{Element, FiniteLattice};

/// Which parts of the C relation a cycle step satisfies. A step may be
/// both an A step and a B step; both flags are kept.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct StepLabel {
    pub a: bool,
    pub b: bool,
}

/// An elementary cycle `p_0 C p_1 C … C p_{n-1} C p_0` of join
/// irreducibles; `labels[k]` describes the step from `nodes[k]` to
/// `nodes[(k+1) % n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CCycle {
    pub nodes: Vec<Element>,
    pub labels: Vec<StepLabel>,
}

/// All elementary C-cycles, each rotated to start at its smallest node
/// and the list sorted by length then node sequence.
pub fn find_c_cycles(l: &FiniteLattice) -> Result<Vec<CCycle>, LatticeError> {
    if !is_sd(l) {
        return Err(LatticeError::NotSemidistributive);
    }
    let irr: Vec<Element> = l.join_irreducibles().into_iter().collect();
    let m = irr.len();
    let mut label = vec![StepLabel { a: false, b: false }; m * m];
    for (i, &p) in irr.iter().enumerate() {
        for (j, &q) in irr.iter().enumerate() {
            label[i * m + j] = StepLabel {
                a: relation_a(l, p, q)?,
                b: relation_b(l, p, q)?,
            };
        }
    }
    let edge = |i: usize, j: usize| label[i * m + j].a || label[i * m + j].b;

    let mut cycles = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; m];
    for start in 0..m {
        path.push(start);
        on_path[start] = true;
        extend_cycles(start, start, &edge, m, &mut path, &mut on_path, &mut |idx_path| {
            let nodes: Vec<Element> = idx_path.iter().map(|&i| irr[i]).collect();
            let labels: Vec<StepLabel> = (0..idx_path.len())
                .map(|k| label[idx_path[k] * m + idx_path[(k + 1) % idx_path.len()]])
                .collect();
            cycles.push(CCycle { nodes, labels });
        });
        on_path[start] = false;
        path.pop();
    }
    cycles.sort_by(|x, y| (x.nodes.len(), &x.nodes).cmp(&(y.nodes.len(), &y.nodes)));
    Ok(cycles)
}

/// DFS for elementary cycles whose minimal index is `start`: only indices
/// greater than `start` may appear later on the path.
fn extend_cycles(
    start: usize,
    current: usize,
    edge: &impl Fn(usize, usize) -> bool,
    m: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    emit: &mut impl FnMut(&[usize]),
) {
    for next in 0..m {
        if next == start && path.len() >= 2 && edge(current, next) {
            emit(path);
        }
        if next > start && !on_path[next] && edge(current, next) {
            path.push(next);
            on_path[next] = true;
            extend_cycles(start, next, edge, m, path, on_path, emit);
            on_path[next] = false;
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{chain, diamond_m3, pentagon, snake};

    #[test]
    fn s_lattices_have_no_cycles() {
        assert!(find_c_cycles(&pentagon()).unwrap().is_empty());
        assert!(find_c_cycles(&chain(4)).unwrap().is_empty());
        assert!(find_c_cycles(&snake(0)).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_sd_input() {
        assert_eq!(
            find_c_cycles(&diamond_m3()),
            Err(LatticeError::NotSemidistributive)
        );
    }

    #[test]
    fn sd_cycles_up_to_seven_elements() {
        // No semidistributive lattice this small carries a C-cycle at
        // all, (W) or not; any cycle that did appear would have to be
        // fully labeled and of length at least three.
        use crate::analysis::is_sd;
        use crate::lattice::enumerate_lattices;
        for n in 2..=7 {
            for l in enumerate_lattices(n).unwrap() {
                if !is_sd(&l) {
                    continue;
                }
                for cycle in find_c_cycles(&l).unwrap() {
                    assert!(cycle.nodes.len() >= 3, "short cycle in {l:?}");
                    assert!(cycle.labels.iter().all(|s| s.a || s.b));
                }
            }
        }
    }
}
