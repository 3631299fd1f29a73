//! Exhaustive enumeration of finite lattices up to isomorphism.
//!
//! Elements are added one at a time in linear-extension order, each new
//! element choosing its down-set among the existing ones. Prefixes of a
//! linear extension of a lattice are order ideals, so every prefix is
//! meet-closed; a branch dies as soon as some pair acquires two minimal
//! common upper bounds, because no later element can repair that.

use super::{is_isomorphic, Element, FiniteLattice};
use crate::error::LatticeError;

pub const MAX_ENUMERATION_SIZE: usize = 8;

/// All lattices with `n` elements up to isomorphism, built bottom-up.
///
/// Output order is deterministic: representatives sorted by cover list.
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteLattice>, LatticeError> {
    if n == 0 || n > MAX_ENUMERATION_SIZE {
        return Err(LatticeError::SizeTooLarge(n, MAX_ENUMERATION_SIZE));
    }
    let mut found: Vec<FiniteLattice> = Vec::new();
    let mut down: Vec<u16> = vec![1; 1];
    search(n, &mut down, false, &mut |covers| {
        record(n, covers, &mut found);
    });
    found.sort_by(|a, b| a.covers().cmp(b.covers()));
    Ok(found)
}

/// Same incremental scheme run top-down: element 0 is the top, each new
/// element chooses its up-set, and candidate sets are visited in reverse.
/// Used as an independent cross-check on `enumerate_lattices`; results
/// are again deduplicated and returned in canonical order.
pub fn enumerate_lattices_topdown(n: usize) -> Result<Vec<FiniteLattice>, LatticeError> {
    if n == 0 || n > MAX_ENUMERATION_SIZE {
        return Err(LatticeError::SizeTooLarge(n, MAX_ENUMERATION_SIZE));
    }
    let mut found: Vec<FiniteLattice> = Vec::new();
    let mut up: Vec<u16> = vec![1; 1];
    search(n, &mut up, true, &mut |covers| {
        // `covers` relate upper to lower here; flip to get the lattice.
        let flipped: Vec<(Element, Element)> = covers
            .iter()
            .map(|&(a, b)| (n - 1 - b, n - 1 - a))
            .collect();
        record(n, &flipped, &mut found);
    });
    found.sort_by(|a, b| a.covers().cmp(b.covers()));
    Ok(found)
}

fn record(n: usize, covers: &[(Element, Element)], found: &mut Vec<FiniteLattice>) {
    let mut covers = covers.to_vec();
    covers.sort_unstable();
    let cand = FiniteLattice::from_covers(n, &covers, None)
        .expect("search only yields valid lattices");
    if found.iter().all(|l| is_isomorphic(l, &cand).is_none()) {
        found.push(cand);
    }
}

/// Core incremental search over down-set masks (bit `j` of `down[i]`
/// means `j ≤ i`). Emits the cover list of every complete lattice.
fn search(
    n: usize,
    down: &mut Vec<u16>,
    rev: bool,
    emit: &mut impl FnMut(&[(Element, Element)]),
) {
    let k = down.len();
    if k == n {
        // Bounded: a unique maximal element must exist.
        let mut maximal = Vec::new();
        for i in 0..n {
            if (0..n).all(|j| i == j || down[j] & (1 << i) == 0) {
                maximal.push(i);
            }
        }
        if maximal.len() == 1 {
            emit(&cover_pairs(down));
        }
        return;
    }
    // Candidate strict down-sets for the new element: down-closed masks
    // over existing elements that contain the bottom.
    let mut mask_candidates: Vec<u16> = Vec::new();
    collect_ideals(down, k, 1, 0, &mut mask_candidates);
    if rev {
        mask_candidates.reverse();
    }
    'outer: for &d in &mask_candidates {
        // Meets with the new element must exist: for every existing x,
        // the common lower bounds d ∩ down[x] need a unique maximum.
        for x in 0..k {
            let clb = d & down[x];
            if !has_unique_max(down, clb) {
                continue 'outer;
            }
        }
        // Join consistency: a pair inside d whose current unique minimal
        // upper bound lies outside d would end up with two minimal upper
        // bounds forever.
        for x in 0..k {
            if d & (1 << x) == 0 {
                continue;
            }
            for y in (x + 1)..k {
                if d & (1 << y) == 0 {
                    continue;
                }
                let ubs: Vec<usize> = (0..k)
                    .filter(|&z| down[z] & (1 << x) != 0 && down[z] & (1 << y) != 0)
                    .collect();
                let minimal_outside = ubs.iter().any(|&m| {
                    d & (1 << m) == 0
                        && ubs
                            .iter()
                            .all(|&z| z == m || down[m] & (1 << z) == 0)
                });
                if minimal_outside {
                    continue 'outer;
                }
            }
        }
        down.push(d | (1 << k));
        search(n, down, rev, emit);
        down.pop();
    }
}

/// All down-closed masks over elements `0..k` that contain element 0.
fn collect_ideals(down: &[u16], k: usize, acc: u16, from: usize, out: &mut Vec<u16>) {
    out.push(acc);
    for x in from..k {
        if acc & (1 << x) == 0 && down[x] & !acc & !(1 << x) == 0 {
            collect_ideals(down, k, acc | (1 << x), x + 1, out);
        }
    }
}

fn has_unique_max(down: &[u16], clb: u16) -> bool {
    if clb == 0 {
        return false;
    }
    (0..down.len()).any(|m| clb & (1 << m) != 0 && clb & !down[m] == 0)
}

fn cover_pairs(down: &[u16]) -> Vec<(Element, Element)> {
    let k = down.len();
    let lt = |x: usize, y: usize| x != y && down[y] & (1 << x) != 0;
    let mut covers = Vec::new();
    for x in 0..k {
        for y in 0..k {
            if lt(x, y) && !(0..k).any(|z| lt(x, z) && lt(z, y)) {
                covers.push((x, y));
            }
        }
    }
    covers
}
