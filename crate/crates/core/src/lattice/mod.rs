//! Finite bounded lattices presented by their cover (Hasse) relation.
//!
//! Elements are dense ids `0..size`. All derived structure — the order
//! table, join/meet tables, bounds — is computed eagerly at construction,
//! so a validated [`FiniteLattice`] is immutable and cheap to query.

mod enumerate;
mod iso;

pub use enumerate::{enumerate_lattices, enumerate_lattices_topdown, MAX_ENUMERATION_SIZE};
pub use iso::is_isomorphic;

use std::collections::BTreeSet;

use crate::error::LatticeError;

/// Dense element id within one lattice.
pub type Element = usize;

/// A subset of element ids of one ambient lattice.
pub type ElementSet = BTreeSet<Element>;

/// Convenience constructor for [`ElementSet`] literals.
pub fn set<const N: usize>(elems: [Element; N]) -> ElementSet {
    elems.into_iter().collect()
}

/// A finite bounded lattice with elements `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    n: usize,
    covers: Vec<(Element, Element)>,
    leq: Vec<bool>,
    join_tab: Vec<u32>,
    meet_tab: Vec<u32>,
    bottom: Element,
    top: Element,
    names: Option<Vec<String>>,
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteLattice(n={}, covers={:?})", self.n, self.covers)
    }
}

impl FiniteLattice {
    /// Builds and validates a lattice from its Hasse diagram.
    ///
    /// The pairs must be exactly the cover relation: redundant (transitively
    /// implied) pairs are rejected, as are cyclic inputs, posets without a
    /// unique bottom and top, and posets where some pair of elements lacks
    /// a unique join or meet.
    pub fn from_covers(
        n: usize,
        covers: &[(Element, Element)],
        names: Option<Vec<String>>,
    ) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::NotBounded);
        }
        if let Some(ns) = &names {
            if ns.len() != n {
                return Err(LatticeError::ElementOutOfRange(ns.len(), n));
            }
        }
        let mut pairs: Vec<(Element, Element)> = Vec::with_capacity(covers.len());
        for &(lo, hi) in covers {
            if lo >= n {
                return Err(LatticeError::ElementOutOfRange(lo, n));
            }
            if hi >= n {
                return Err(LatticeError::ElementOutOfRange(hi, n));
            }
            if lo == hi {
                return Err(LatticeError::CycleInCovers);
            }
            pairs.push((lo, hi));
        }
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                return Err(LatticeError::RedundantCover(w[0].0, w[0].1));
            }
        }

        // Reflexive-transitive closure of the cover digraph.
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(lo, hi) in &pairs {
            leq[lo * n + hi] = true;
        }
        for k in 0..n {
            for x in 0..n {
                if leq[x * n + k] {
                    for y in 0..n {
                        if leq[k * n + y] {
                            leq[x * n + y] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && leq[x * n + y] && leq[y * n + x] {
                    return Err(LatticeError::CycleInCovers);
                }
            }
        }

        // Each input pair must be a genuine cover.
        for &(lo, hi) in &pairs {
            for z in 0..n {
                if z != lo && z != hi && leq[lo * n + z] && leq[z * n + hi] {
                    return Err(LatticeError::RedundantCover(lo, hi));
                }
            }
        }

        let minimal: Vec<Element> = (0..n)
            .filter(|&x| (0..n).all(|y| y == x || !leq[y * n + x]))
            .collect();
        let maximal: Vec<Element> = (0..n)
            .filter(|&x| (0..n).all(|y| y == x || !leq[x * n + y]))
            .collect();
        if minimal.len() != 1 || maximal.len() != 1 {
            return Err(LatticeError::NotBounded);
        }
        let (bottom, top) = (minimal[0], maximal[0]);

        let mut join_tab = vec![0u32; n * n];
        let mut meet_tab = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let ubs: Vec<Element> = (0..n)
                    .filter(|&z| leq[x * n + z] && leq[y * n + z])
                    .collect();
                let j = ubs
                    .iter()
                    .copied()
                    .find(|&m| ubs.iter().all(|&z| leq[m * n + z]))
                    .ok_or(LatticeError::NotALattice(x, y))?;
                let lbs: Vec<Element> = (0..n)
                    .filter(|&z| leq[z * n + x] && leq[z * n + y])
                    .collect();
                let m = lbs
                    .iter()
                    .copied()
                    .find(|&m| lbs.iter().all(|&z| leq[z * n + m]))
                    .ok_or(LatticeError::NotALattice(x, y))?;
                join_tab[x * n + y] = j as u32;
                join_tab[y * n + x] = j as u32;
                meet_tab[x * n + y] = m as u32;
                meet_tab[y * n + x] = m as u32;
            }
        }

        Ok(FiniteLattice {
            n,
            covers: pairs,
            leq,
            join_tab,
            meet_tab,
            bottom,
            top,
            names,
        })
    }

    /// Builds a lattice from a full order relation given as a predicate.
    ///
    /// The cover pairs are recovered as the transitive reduction.
    pub fn from_order(
        n: usize,
        leq: impl Fn(Element, Element) -> bool,
        names: Option<Vec<String>>,
    ) -> Result<Self, LatticeError> {
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && leq(x, y) {
                    let is_cover =
                        (0..n).all(|z| z == x || z == y || !(leq(x, z) && leq(z, y)));
                    if is_cover {
                        covers.push((x, y));
                    }
                }
            }
        }
        Self::from_covers(n, &covers, names)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// The cover pairs `(lower, upper)`, sorted lexicographically.
    pub fn covers(&self) -> &[(Element, Element)] {
        &self.covers
    }

    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display string for an element: its name when present, else its id.
    pub fn label(&self, x: Element) -> String {
        match &self.names {
            Some(ns) => ns[x].clone(),
            None => x.to_string(),
        }
    }

    /// Looks up an element by name.
    pub fn element_by_name(&self, name: &str) -> Option<Element> {
        self.names
            .as_ref()
            .and_then(|ns| ns.iter().position(|s| s == name))
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n);
        self.names = Some(names);
        self
    }

    pub fn leq(&self, x: Element, y: Element) -> bool {
        assert!(x < self.n && y < self.n, "element out of range");
        self.leq[x * self.n + y]
    }

    pub fn lt(&self, x: Element, y: Element) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn join(&self, x: Element, y: Element) -> Element {
        assert!(x < self.n && y < self.n, "element out of range");
        self.join_tab[x * self.n + y] as Element
    }

    pub fn meet(&self, x: Element, y: Element) -> Element {
        assert!(x < self.n && y < self.n, "element out of range");
        self.meet_tab[x * self.n + y] as Element
    }

    /// Join of a set; the empty join is the bottom element.
    pub fn join_set(&self, s: &ElementSet) -> Result<Element, LatticeError> {
        let mut acc = self.bottom;
        for &x in s {
            if x >= self.n {
                return Err(LatticeError::ElementOutOfRange(x, self.n));
            }
            acc = self.join(acc, x);
        }
        Ok(acc)
    }

    /// Meet of a set; the empty meet is the top element.
    pub fn meet_set(&self, s: &ElementSet) -> Result<Element, LatticeError> {
        let mut acc = self.top;
        for &x in s {
            if x >= self.n {
                return Err(LatticeError::ElementOutOfRange(x, self.n));
            }
            acc = self.meet(acc, x);
        }
        Ok(acc)
    }

    pub fn upper_covers(&self, x: Element) -> Vec<Element> {
        self.covers
            .iter()
            .filter(|&&(lo, _)| lo == x)
            .map(|&(_, hi)| hi)
            .collect()
    }

    pub fn lower_covers(&self, x: Element) -> Vec<Element> {
        self.covers
            .iter()
            .filter(|&&(_, hi)| hi == x)
            .map(|&(lo, _)| lo)
            .collect()
    }

    pub fn is_join_irreducible(&self, x: Element) -> bool {
        self.lower_covers(x).len() == 1
    }

    pub fn is_meet_irreducible(&self, x: Element) -> bool {
        self.upper_covers(x).len() == 1
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> ElementSet {
        (0..self.n).filter(|&x| self.is_join_irreducible(x)).collect()
    }

    /// Elements with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> ElementSet {
        (0..self.n).filter(|&x| self.is_meet_irreducible(x)).collect()
    }

    /// The unique lower cover `j_*` of a join irreducible.
    pub fn lower_star(&self, j: Element) -> Result<Element, LatticeError> {
        let lc = self.lower_covers(j);
        match lc.as_slice() {
            [x] => Ok(*x),
            _ => Err(LatticeError::NotIrreducible(j)),
        }
    }

    /// The unique upper cover `m^*` of a meet irreducible.
    pub fn upper_star(&self, m: Element) -> Result<Element, LatticeError> {
        let uc = self.upper_covers(m);
        match uc.as_slice() {
            [x] => Ok(*x),
            _ => Err(LatticeError::NotIrreducible(m)),
        }
    }

    /// Refinement `A ≪ B`: every element of `A` lies below some element of `B`.
    pub fn refines(&self, a: &ElementSet, b: &ElementSet) -> bool {
        a.iter().all(|&x| b.iter().any(|&y| self.leq(x, y)))
    }

    pub fn down_set(&self, x: Element) -> ElementSet {
        (0..self.n).filter(|&y| self.leq(y, x)).collect()
    }

    pub fn up_set(&self, x: Element) -> ElementSet {
        (0..self.n).filter(|&y| self.leq(x, y)).collect()
    }

    /// The interval `[u, v]`, or an error when `u ≰ v`.
    pub fn interval(&self, u: Element, v: Element) -> Result<Vec<Element>, LatticeError> {
        if u >= self.n {
            return Err(LatticeError::ElementOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(LatticeError::ElementOutOfRange(v, self.n));
        }
        if !self.leq(u, v) {
            return Err(LatticeError::NotAnInterval(u, v));
        }
        Ok((0..self.n).filter(|&z| self.leq(u, z) && self.leq(z, v)).collect())
    }

    /// Length of a longest chain from the bottom up to `x`.
    pub fn height(&self, x: Element) -> usize {
        let mut h = vec![0usize; self.n];
        let order = self.topo_order();
        for &v in &order {
            for &u in &self.lower_covers(v) {
                h[v] = h[v].max(h[u] + 1);
            }
        }
        h[x]
    }

    /// Elements in a linear extension (every element after its lower covers).
    pub fn topo_order(&self) -> Vec<Element> {
        let mut order: Vec<Element> = (0..self.n).collect();
        order.sort_by_key(|&x| (self.down_set(x).len(), x));
        order
    }

    /// The order dual: same ids, all covers flipped.
    pub fn dual(&self) -> FiniteLattice {
        let flipped: Vec<(Element, Element)> =
            self.covers.iter().map(|&(lo, hi)| (hi, lo)).collect();
        FiniteLattice::from_covers(self.n, &flipped, self.names.clone())
            .expect("dual of a lattice is a lattice")
    }

    /// Least subset containing `s` and closed under binary join and meet.
    pub fn sublattice_closure(&self, s: &ElementSet) -> ElementSet {
        let mut closed: ElementSet = s.clone();
        loop {
            let mut fresh = Vec::new();
            for &x in &closed {
                for &y in &closed {
                    let j = self.join(x, y);
                    if !closed.contains(&j) {
                        fresh.push(j);
                    }
                    let m = self.meet(x, y);
                    if !closed.contains(&m) {
                        fresh.push(m);
                    }
                }
            }
            if fresh.is_empty() {
                return closed;
            }
            closed.extend(fresh);
        }
    }

    /// The canonical join representation of `x`: the unique irredundant
    /// antichain representation that refines every other representation.
    ///
    /// Exists for every element exactly when the lattice is join
    /// semidistributive; otherwise `NoCanonicalRep` is returned for the
    /// offending element.
    pub fn canonical_join_rep(&self, x: Element) -> Result<ElementSet, LatticeError> {
        if x >= self.n {
            return Err(LatticeError::ElementOutOfRange(x, self.n));
        }
        if x == self.bottom {
            return Ok(ElementSet::new());
        }
        let reps = self.irredundant_join_reps(x);
        let best = reps
            .iter()
            .find(|cand| reps.iter().all(|other| self.refines(cand, other)));
        match best {
            Some(rep) => Ok(rep.clone()),
            None => Err(LatticeError::NoCanonicalRep(x)),
        }
    }

    /// All irredundant antichain sets `S` with `⋁S = x`.
    ///
    /// Joinands of an irredundant representation are necessarily join
    /// irreducible, so the search runs over antichains of `J(L) ∩ ↓x`.
    pub(crate) fn irredundant_join_reps(&self, x: Element) -> Vec<ElementSet> {
        let candidates: Vec<Element> = (0..self.n)
            .filter(|&j| self.is_join_irreducible(j) && self.leq(j, x))
            .collect();
        let mut reps = Vec::new();
        let mut stack: Vec<Element> = Vec::new();
        self.rep_search(x, &candidates, 0, self.bottom, &mut stack, &mut reps);
        reps
    }

    fn rep_search(
        &self,
        x: Element,
        candidates: &[Element],
        from: usize,
        joined: Element,
        stack: &mut Vec<Element>,
        out: &mut Vec<ElementSet>,
    ) {
        if joined == x {
            let s: ElementSet = stack.iter().copied().collect();
            let irredundant = stack.iter().all(|&drop| {
                let rest: ElementSet = s.iter().copied().filter(|&e| e != drop).collect();
                self.join_set(&rest).unwrap() != x
            });
            if irredundant {
                out.push(s);
            }
            return;
        }
        for (k, &c) in candidates.iter().enumerate().skip(from) {
            if stack.iter().any(|&p| self.leq(p, c) || self.leq(c, p)) {
                continue;
            }
            stack.push(c);
            self.rep_search(x, candidates, k + 1, self.join(joined, c), stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean, chain, diamond_m3, pentagon};

    #[test]
    fn pentagon_builds_and_orders() {
        let l = pentagon();
        assert_eq!(l.size(), 5);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 4);
        assert!(l.leq(1, 2));
        assert!(!l.leq(1, 3));
        assert_eq!(l.join_set(&set([1, 3])).unwrap(), 4);
        assert_eq!(l.join_set(&set([2])).unwrap(), 2);
        assert_eq!(l.meet_set(&ElementSet::new()).unwrap(), 4);
        assert_eq!(l.join_set(&ElementSet::new()).unwrap(), 0);
    }

    #[test]
    fn singleton_lattice() {
        let l = FiniteLattice::from_covers(1, &[], None).unwrap();
        assert_eq!(l.bottom(), l.top());
        assert_eq!(l.size(), 1);
    }

    #[test]
    fn six_crown_is_not_a_lattice() {
        // 3 minimal, 3 maximal, comparabilities alternating.
        let covers = [(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)];
        match FiniteLattice::from_covers(6, &covers, None) {
            Err(LatticeError::NotBounded) | Err(LatticeError::NotALattice(_, _)) => {}
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn rejects_cycles_and_redundant_pairs() {
        assert_eq!(
            FiniteLattice::from_covers(2, &[(0, 1), (1, 0)], None),
            Err(LatticeError::CycleInCovers)
        );
        assert_eq!(
            FiniteLattice::from_covers(3, &[(0, 1), (1, 2), (0, 2)], None),
            Err(LatticeError::RedundantCover(0, 2))
        );
        assert_eq!(
            FiniteLattice::from_covers(3, &[(0, 1), (0, 5)], None),
            Err(LatticeError::ElementOutOfRange(5, 3))
        );
    }

    #[test]
    fn irreducibles_in_small_lattices() {
        let n5 = pentagon();
        assert_eq!(n5.join_irreducibles(), set([1, 2, 3]));
        assert_eq!(n5.meet_irreducibles(), set([1, 2, 3]));

        let c3 = chain(3);
        assert_eq!(c3.join_irreducibles(), set([1, 2]));
        assert_eq!(c3.meet_irreducibles(), set([0, 1]));

        let b3 = boolean(3);
        let atoms: ElementSet = b3.upper_covers(b3.bottom()).into_iter().collect();
        assert_eq!(b3.join_irreducibles(), atoms);
        assert_eq!(atoms.len(), 3);
    }

    #[test]
    fn stars() {
        let n5 = pentagon();
        assert_eq!(n5.lower_star(2).unwrap(), 1);
        assert_eq!(n5.lower_star(3).unwrap(), 0);
        assert_eq!(n5.lower_star(4), Err(LatticeError::NotIrreducible(4)));
        let c3 = chain(3);
        assert_eq!(c3.upper_star(0).unwrap(), 1);
    }

    #[test]
    fn refinement_basics() {
        let l = boolean(2);
        assert!(l.refines(&set([1]), &set([1, 2])));
        assert!(l.refines(&set([0]), &set([2])));
        assert!(!l.refines(&set([3]), &set([1, 2])));
        assert!(l.refines(&ElementSet::new(), &ElementSet::new()));
    }

    #[test]
    fn canonical_join_reps() {
        let n5 = pentagon();
        for j in [1, 2, 3] {
            assert_eq!(n5.canonical_join_rep(j).unwrap(), set([j]));
        }
        let b2 = boolean(2);
        assert_eq!(b2.canonical_join_rep(b2.top()).unwrap(), set([1, 2]));
        let m3 = diamond_m3();
        assert_eq!(
            m3.canonical_join_rep(m3.top()),
            Err(LatticeError::NoCanonicalRep(m3.top()))
        );
        let any = FiniteLattice::from_covers(1, &[], None).unwrap();
        assert_eq!(any.canonical_join_rep(0).unwrap(), ElementSet::new());
    }

    #[test]
    fn dual_involution_and_self_duality() {
        let n5 = pentagon();
        let d = n5.dual();
        assert_eq!(d.dual(), n5);
        assert!(is_isomorphic(&n5, &d).is_some());
        let b3 = boolean(3);
        assert!(is_isomorphic(&b3, &b3.dual()).is_some());
        let c4 = chain(4);
        assert!(is_isomorphic(&c4, &c4.dual()).is_some());
        assert_eq!(n5.dual().join_irreducibles(), n5.meet_irreducibles());
    }

    #[test]
    fn closure_examples() {
        let n5 = pentagon();
        assert_eq!(n5.sublattice_closure(&set([1, 3])), set([0, 1, 3, 4]));
        assert_eq!(n5.sublattice_closure(&set([0, 2])), set([0, 2]));
        let b3 = boolean(3);
        let atoms: ElementSet = b3.upper_covers(b3.bottom()).into_iter().collect();
        assert_eq!(b3.sublattice_closure(&atoms).len(), 8);
    }

    #[test]
    fn lattices_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<FiniteLattice>();
    }

    #[test]
    fn absorption_holds_tablewise() {
        for l in [pentagon(), boolean(3), diamond_m3(), chain(5)] {
            for x in 0..l.size() {
                for y in 0..l.size() {
                    assert_eq!(l.join(x, l.meet(x, y)), x);
                    assert_eq!(l.meet(x, l.join(x, y)), x);
                    let same = l.leq(x, y);
                    assert_eq!(l.join(x, y) == y, same);
                    assert_eq!(l.meet(x, y) == x, same);
                }
            }
        }
    }
}
