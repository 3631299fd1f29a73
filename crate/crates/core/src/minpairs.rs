//! Minimal pairs, special covers built from kappa, cycles of minimal
//! pairs with their refinement counts, and crowned cycles.

use serde::{Deserialize, Serialize};

use crate::analysis::{breadth, is_sd, kappa, relation_a, relation_b};
use crate::error::LatticeError;
use crate::lattice::{Element, ElementSet, FiniteLattice};

/// Outcome of a minimality check. When the pair is not minimal and is at
/// least a join cover, `witness` holds a refining join cover that fails
/// to contain the original one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPairCheck {
    pub minimal: bool,
    pub witness: Option<ElementSet>,
}

/// Checks whether `⟨a; B⟩` is a (join) minimal pair: `a ≤ ⋁B`, and every
/// join cover of `a` refining into `B` contains `B`.
///
/// The search runs over irredundant antichain covers drawn from
/// `⋃_{y∈B} ↓y`, with sizes capped by `max(|B|, breadth)`; replacing a
/// refining cover by its maximal elements and dropping redundant members
/// preserves both the cover property and the refinement, so the
/// restriction loses no witnesses.
pub fn is_minimal_pair(
    l: &FiniteLattice,
    a: Element,
    b: &ElementSet,
) -> Result<MinimalPairCheck, LatticeError> {
    let bound = b.len().max(breadth(l).unwrap_or(1));
    minimal_pair_check(l, a, b, bound)
}

fn minimal_pair_check(
    l: &FiniteLattice,
    a: Element,
    b: &ElementSet,
    size_bound: usize,
) -> Result<MinimalPairCheck, LatticeError> {
    if b.is_empty() {
        return Err(LatticeError::EmptyCover);
    }
    if a >= l.size() {
        return Err(LatticeError::ElementOutOfRange(a, l.size()));
    }
    if !l.leq(a, l.join_set(b)?) {
        return Ok(MinimalPairCheck {
            minimal: false,
            witness: None,
        });
    }
    let candidates: Vec<Element> = (0..l.size())
        .filter(|&x| b.iter().any(|&y| l.leq(x, y)))
        .collect();
    let mut stack = Vec::new();
    let witness = refining_cover_search(l, a, b, &candidates, 0, l.bottom(), size_bound, &mut stack);
    Ok(MinimalPairCheck {
        minimal: witness.is_none(),
        witness,
    })
}

/// DFS over antichains of `candidates` looking for a join cover of `a`
/// that does not contain all of `b`. Branches stop as soon as the join
/// covers `a`, so only irredundant covers are inspected.
#[allow(clippy::too_many_arguments)]
fn refining_cover_search(
    l: &FiniteLattice,
    a: Element,
    b: &ElementSet,
    candidates: &[Element],
    from: usize,
    joined: Element,
    size_left: usize,
    stack: &mut Vec<Element>,
) -> Option<ElementSet> {
    if l.leq(a, joined) {
        let found: ElementSet = stack.iter().copied().collect();
        if !b.iter().all(|y| found.contains(y)) {
            return Some(found);
        }
        return None;
    }
    if size_left == 0 {
        return None;
    }
    for (k, &c) in candidates.iter().enumerate().skip(from) {
        if stack.iter().any(|&p| l.leq(p, c) || l.leq(c, p)) {
            continue;
        }
        stack.push(c);
        let hit = refining_cover_search(
            l,
            a,
            b,
            candidates,
            k + 1,
            l.join(joined, c),
            size_left - 1,
            stack,
        );
        stack.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Unrestricted verifier: scans every subset of `⋃_{y∈B} ↓y`. Exponential;
/// an oracle for [`is_minimal_pair`] on desk-scale lattices.
pub fn is_minimal_pair_exhaustive(
    l: &FiniteLattice,
    a: Element,
    b: &ElementSet,
) -> Result<MinimalPairCheck, LatticeError> {
    if b.is_empty() {
        return Err(LatticeError::EmptyCover);
    }
    if a >= l.size() {
        return Err(LatticeError::ElementOutOfRange(a, l.size()));
    }
    assert!(l.size() <= 16, "exhaustive minimal-pair check is desk-scale");
    if !l.leq(a, l.join_set(b)?) {
        return Ok(MinimalPairCheck {
            minimal: false,
            witness: None,
        });
    }
    let candidates: Vec<Element> = (0..l.size())
        .filter(|&x| b.iter().any(|&y| l.leq(x, y)))
        .collect();
    for mask in 1u32..(1 << candidates.len()) {
        let cover: ElementSet = candidates
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &x)| x)
            .collect();
        if l.leq(a, l.join_set(&cover)?) && !b.iter().all(|y| cover.contains(y)) {
            return Ok(MinimalPairCheck {
                minimal: false,
                witness: Some(cover),
            });
        }
    }
    Ok(MinimalPairCheck {
        minimal: true,
        witness: None,
    })
}

/// Which half of the C relation a special cover represents.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairForm {
    A,
    B,
}

/// The special join cover of `p` through `q`: `{q}` together with the
/// canonical join representation of `κ(q)` (form A, requires `p A q`) or
/// of `p_*` (form B, requires `p B q`).
///
/// Form A covers `p` because `p A q` puts `p` below
/// `κ(q)^* = q + κ(q)`; form B because `p ≤ p_* + q` is one half of the
/// join characterization of `B`.
pub fn special_join_cover(
    l: &FiniteLattice,
    p: Element,
    q: Element,
    form: PairForm,
) -> Result<ElementSet, LatticeError> {
    let holds = match form {
        PairForm::A => relation_a(l, p, q)?,
        PairForm::B => relation_b(l, p, q)?,
    };
    if !holds {
        let name = match form {
            PairForm::A => "A",
            PairForm::B => "B",
        };
        return Err(LatticeError::RelationDoesNotHold(name, p, q));
    }
    let base = match form {
        PairForm::A => kappa(l, q)?.expect("kappa total on semidistributive lattices"),
        PairForm::B => l.lower_star(p)?,
    };
    let mut cover = l.canonical_join_rep(base)?;
    cover.insert(q);
    Ok(cover)
}

/// One minimal pair `⟨point; cover⟩`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinimalPair {
    pub point: Element,
    pub cover: ElementSet,
}

/// A cycle of minimal pairs `⟨p_k; J_k⟩` with `p_{k+1} ∈ J_k` (indices
/// mod n). `forms[k]` records the special form that produced `J_k`, when
/// any. `fruitful_count` is `|{k : {p_k} ≪ J_{k+1}}|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MpCycle {
    pub pairs: Vec<MinimalPair>,
    pub forms: Vec<Option<PairForm>>,
    pub fruitful_count: usize,
    pub crowned: bool,
}

impl MpCycle {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn points(&self) -> Vec<Element> {
        self.pairs.iter().map(|p| p.point).collect()
    }
}

/// The fruitfulness bound: true iff `fruitful_count ≤ n/2` as rationals.
/// Cycles shorter than 3 pairs are rejected.
pub fn check_fruitful_condition(cycle: &MpCycle) -> Result<bool, LatticeError> {
    let n = cycle.len();
    if n < 3 {
        return Err(LatticeError::CycleTooShort(n, 3));
    }
    Ok(2 * cycle.fruitful_count <= n)
}

fn fruitful_count(l: &FiniteLattice, pairs: &[MinimalPair]) -> usize {
    let n = pairs.len();
    (0..n)
        .filter(|&k| {
            let single: ElementSet = [pairs[k].point].into_iter().collect();
            l.refines(&single, &pairs[(k + 1) % n].cover)
        })
        .count()
}

/// The candidate pool for cycle searches: every special cover (on
/// semidistributive lattices) and every minimal pair whose cover is an
/// antichain of size 2..=breadth. Entries are unique by (point, cover);
/// special entries keep the form that produced them.
fn minimal_pair_pool(l: &FiniteLattice) -> Vec<(MinimalPair, Option<PairForm>)> {
    let mut pool: Vec<(MinimalPair, Option<PairForm>)> = special_pairs(l)
        .into_iter()
        .map(|(p, f)| (p, Some(f)))
        .collect();
    let bound = breadth(l).unwrap_or(1);
    for point in 0..l.size() {
        let mut stack = Vec::new();
        antichain_pairs(l, point, 0, &mut stack, bound, &mut |cover| {
            let pair = MinimalPair {
                point,
                cover: cover.clone(),
            };
            if !pool.iter().any(|(p, _)| *p == pair) {
                pool.push((pair, None));
            }
        });
    }
    pool.sort_by(|(p, f), (q, g)| (&p.point, &p.cover, f).cmp(&(&q.point, &q.cover, g)));
    pool
}

/// Special covers for all related pairs of join irreducibles, in both
/// forms where both relations hold. Only minimal ones are kept.
fn special_pairs(l: &FiniteLattice) -> Vec<(MinimalPair, PairForm)> {
    if !is_sd(l) {
        return Vec::new();
    }
    let irr: Vec<Element> = l.join_irreducibles().into_iter().collect();
    let mut out = Vec::new();
    for &p in &irr {
        for &q in &irr {
            if p == q {
                continue;
            }
            for form in [PairForm::A, PairForm::B] {
                if let Ok(cover) = special_join_cover(l, p, q, form) {
                    if cover.is_empty() {
                        continue;
                    }
                    let check = is_minimal_pair(l, p, &cover).unwrap();
                    if check.minimal {
                        let pair = MinimalPair { point: p, cover };
                        if !out.iter().any(|(x, _)| *x == pair) {
                            out.push((pair, form));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Enumerates antichain covers of `point` with 2..=bound elements and
/// reports the minimal ones.
fn antichain_pairs(
    l: &FiniteLattice,
    point: Element,
    from: Element,
    stack: &mut Vec<Element>,
    bound: usize,
    emit: &mut impl FnMut(&ElementSet),
) {
    if stack.len() >= 2 {
        let cover: ElementSet = stack.iter().copied().collect();
        let join = l.join_set(&cover).unwrap();
        if l.leq(point, join)
            && !cover.contains(&point)
            && cover.iter().all(|&y| !l.leq(point, y))
            && minimal_pair_check(l, point, &cover, bound).unwrap().minimal
        {
            emit(&cover);
        }
    }
    if stack.len() == bound {
        return;
    }
    for c in from..l.size() {
        if stack.iter().any(|&p| l.leq(p, c) || l.leq(c, p)) {
            continue;
        }
        stack.push(c);
        antichain_pairs(l, point, c + 1, stack, bound, emit);
        stack.pop();
    }
}

/// Enumerates cycles of minimal pairs with distinct points, up to
/// `max_n` pairs per cycle, rotated to start at their least pair.
pub fn find_mp_cycles(l: &FiniteLattice, max_n: usize) -> Vec<MpCycle> {
    let pool = minimal_pair_pool(l);
    cycles_from_pool(l, &pool, max_n)
}

/// Cycle search restricted to special covers only.
pub fn find_special_mp_cycles(l: &FiniteLattice, max_n: usize) -> Vec<MpCycle> {
    let pool: Vec<(MinimalPair, Option<PairForm>)> = special_pairs(l)
        .into_iter()
        .map(|(p, f)| (p, Some(f)))
        .collect();
    cycles_from_pool(l, &pool, max_n)
}

fn cycles_from_pool(
    l: &FiniteLattice,
    pool: &[(MinimalPair, Option<PairForm>)],
    max_n: usize,
) -> Vec<MpCycle> {
    let mut cycles = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for start in 0..pool.len() {
        path.push(start);
        cycle_dfs(l, pool, max_n, start, &mut path, &mut cycles);
        path.pop();
    }
    cycles
}

fn cycle_dfs(
    l: &FiniteLattice,
    pool: &[(MinimalPair, Option<PairForm>)],
    max_n: usize,
    start: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<MpCycle>,
) {
    let last = &pool[*path.last().unwrap()].0;
    if path.len() >= 2 && last.cover.contains(&pool[start].0.point) {
        let pairs: Vec<MinimalPair> = path.iter().map(|&i| pool[i].0.clone()).collect();
        let forms: Vec<Option<PairForm>> = path.iter().map(|&i| pool[i].1).collect();
        let fruitful = fruitful_count(l, &pairs);
        let mut cycle = MpCycle {
            pairs,
            forms,
            fruitful_count: fruitful,
            crowned: false,
        };
        cycle.crowned = cycle.len() >= 3 && is_crowned_cycle(l, &cycle).unwrap();
        out.push(cycle);
    }
    if path.len() == max_n {
        return;
    }
    for next in (start + 1)..pool.len() {
        if path.contains(&next) {
            continue;
        }
        let point = pool[next].0.point;
        if !last.cover.contains(&point) {
            continue;
        }
        if path.iter().any(|&i| pool[i].0.point == point) {
            continue;
        }
        path.push(next);
        cycle_dfs(l, pool, max_n, start, path, out);
        path.pop();
    }
}

/// Whether a cycle of minimal pairs is crowned: the cover joins form an
/// antichain, no point refines into another pair's cover it does not
/// belong to, and the points together with the cover joins induce a
/// crown of order `2n`.
pub fn is_crowned_cycle(l: &FiniteLattice, cycle: &MpCycle) -> Result<bool, LatticeError> {
    let n = cycle.len();
    if n < 3 {
        return Err(LatticeError::CycleTooShort(n, 3));
    }
    let points = cycle.points();
    let joins: Vec<Element> = cycle
        .pairs
        .iter()
        .map(|p| l.join_set(&p.cover).unwrap())
        .collect();

    // (1) the joins form an antichain of n distinct elements.
    for i in 0..n {
        for j in (i + 1)..n {
            if l.leq(joins[i], joins[j]) || l.leq(joins[j], joins[i]) {
                return Ok(false);
            }
        }
    }
    // (2) cross refinements all fail.
    for i in 0..n {
        for j in 0..n {
            if i == j || cycle.pairs[j].cover.contains(&points[i]) {
                continue;
            }
            let single: ElementSet = [points[i]].into_iter().collect();
            if l.refines(&single, &cycle.pairs[j].cover) {
                return Ok(false);
            }
        }
    }
    // The 2n elements x_1, ⋁A_1, x_2, ⋁A_2, … must induce a crown.
    let mut ring: Vec<Element> = Vec::with_capacity(2 * n);
    for i in 0..n {
        ring.push(points[i]);
        ring.push(joins[i]);
    }
    {
        let mut distinct = ring.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != 2 * n {
            return Ok(false);
        }
    }
    // Walking the ring alternates point, join, point, join, …; the only
    // comparabilities of a crown are between cyclically adjacent entries.
    for i in 0..2 * n {
        for j in (i + 1)..2 * n {
            let comparable = l.leq(ring[i], ring[j]) || l.leq(ring[j], ring[i]);
            let expected = j == i + 1 || (i == 0 && j == 2 * n - 1);
            if comparable != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All crowned cycles of the lattice.
pub fn find_crowned_cycles(l: &FiniteLattice) -> Vec<MpCycle> {
    find_mp_cycles(l, l.size())
        .into_iter()
        .filter(|c| c.crowned)
        .collect()
}
