//! Generators for the lattice families used throughout: standard small
//! lattices, crown posets, Day interval doubling, the snakes `S_n`, and a
//! named catalog of hand-encoded example lattices.

use crate::error::LatticeError;
use crate::lattice::{Element, FiniteLattice};

/// The chain with `n` elements, `0 < 1 < … < n-1`.
pub fn chain(n: usize) -> FiniteLattice {
    assert!(n >= 1);
    let covers: Vec<(Element, Element)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    FiniteLattice::from_covers(n, &covers, None).unwrap()
}

/// The boolean lattice `2^k`, elements ordered by bitmask inclusion.
pub fn boolean(k: usize) -> FiniteLattice {
    assert!(k <= 6, "boolean lattice with 2^{k} elements is out of scope");
    let n = 1usize << k;
    FiniteLattice::from_order(n, |x, y| x & y == x, None).unwrap()
}

/// Direct product, ordered componentwise. Element `(x, y)` gets id
/// `x * |b| + y`.
pub fn product(a: &FiniteLattice, b: &FiniteLattice) -> FiniteLattice {
    let (na, nb) = (a.size(), b.size());
    FiniteLattice::from_order(
        na * nb,
        |p, q| a.leq(p / nb, q / nb) && b.leq(p % nb, q % nb),
        None,
    )
    .unwrap()
}

/// The pentagon `N_5` with ids `0 < 1 < 2 < 4` and `0 < 3 < 4`.
pub fn pentagon() -> FiniteLattice {
    let covers = [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)];
    let names = ["0", "1", "2", "3", "4"].map(String::from).to_vec();
    FiniteLattice::from_covers(5, &covers, Some(names)).unwrap()
}

/// The diamond `M_3`: three atoms below a common top.
pub fn diamond_m3() -> FiniteLattice {
    let covers = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)];
    FiniteLattice::from_covers(5, &covers, None).unwrap()
}

/// The crown of order `2n` as raw poset data `(element count, covers)`.
///
/// Crowns are never lattices, so no `FiniteLattice` is produced. Lower
/// elements get even ids, upper elements odd ids; the comparabilities are
/// `2j < 2j+1` and `2j+2 (mod 2n) < 2j+1`.
pub fn crown_poset(n: usize) -> Result<(usize, Vec<(Element, Element)>), LatticeError> {
    if n < 3 {
        return Err(LatticeError::OrderTooSmall(n));
    }
    let mut covers = Vec::with_capacity(2 * n);
    for j in 0..n {
        covers.push((2 * j, 2 * j + 1));
        covers.push(((2 * j + 2) % (2 * n), 2 * j + 1));
    }
    Ok((2 * n, covers))
}

/// Day doubling of the interval `[u, v]`: the interval is replaced by
/// `[u, v] × 2`, everything else keeps its order. Doubled elements carry
/// their old name with a trailing `'` on the upper copy.
pub fn day_double(
    l: &FiniteLattice,
    u: Element,
    v: Element,
) -> Result<FiniteLattice, LatticeError> {
    let interval = l.interval(u, v)?;
    let inside = |x: Element| interval.binary_search(&x).is_ok();

    // Slot (original element, copy index); copy is always 0 outside.
    let mut slots: Vec<(Element, u8)> = Vec::with_capacity(l.size() + interval.len());
    for x in 0..l.size() {
        slots.push((x, 0));
        if inside(x) {
            slots.push((x, 1));
        }
    }
    let leq = |p: usize, q: usize| {
        let (x, i) = slots[p];
        let (y, j) = slots[q];
        if inside(x) && inside(y) {
            l.leq(x, y) && i <= j
        } else {
            l.leq(x, y)
        }
    };
    let names = l.names().map(|ns| {
        slots
            .iter()
            .map(|&(x, i)| {
                if i == 1 {
                    format!("{}'", ns[x])
                } else {
                    ns[x].clone()
                }
            })
            .collect()
    });
    FiniteLattice::from_order(slots.len(), leq, names)
}

/// The snake `S_n`: a spine of `2n + 3` squares linked top-to-bottom,
/// one side element per flank of each "S" pattern, and the extra element
/// `c` between the tail `a_1` and the head `b_{n+3}`.
pub fn snake(n: usize) -> FiniteLattice {
    let squares = 2 * n + 3;
    let mut names: Vec<String> = Vec::new();
    let fresh = |s: String, names: &mut Vec<String>| -> Element {
        names.push(s);
        names.len() - 1
    };

    // Square i has bottom, left, right, top ids.
    let mut bot = vec![0; squares];
    let mut left = vec![0; squares];
    let mut right = vec![0; squares];
    let mut top = vec![0; squares];
    for i in 0..squares {
        bot[i] = fresh(
            if i == 0 { "0".into() } else { format!("u{i}") },
            &mut names,
        );
        left[i] = fresh(
            if i == 0 {
                "a1".into()
            } else if i == squares - 1 {
                format!("a{}", n + 3)
            } else {
                format!("l{i}")
            },
            &mut names,
        );
        right[i] = fresh(
            if i == 0 {
                "b1".into()
            } else if i == squares - 1 {
                format!("b{}", n + 3)
            } else {
                format!("r{i}")
            },
            &mut names,
        );
        top[i] = fresh(
            if i == squares - 1 {
                "1".into()
            } else {
                format!("v{i}")
            },
            &mut names,
        );
    }

    let mut covers: Vec<(Element, Element)> = Vec::new();
    for i in 0..squares {
        covers.push((bot[i], left[i]));
        covers.push((bot[i], right[i]));
        covers.push((left[i], top[i]));
        covers.push((right[i], top[i]));
        if i + 1 < squares {
            covers.push((top[i], bot[i + 1]));
        }
    }
    // S-pattern k spans squares 2k-2, 2k-1, 2k; its right side element
    // bridges the lower pair of squares, its left side the upper pair.
    for k in 1..=(n + 1) {
        let r = fresh(format!("b{}", k + 1), &mut names);
        covers.push((right[2 * k - 2], r));
        covers.push((r, right[2 * k - 1]));
        let l = fresh(format!("a{}", k + 1), &mut names);
        covers.push((left[2 * k - 1], l));
        covers.push((l, left[2 * k]));
    }
    let c = fresh("c".into(), &mut names);
    covers.push((left[0], c));
    covers.push((c, right[squares - 1]));

    FiniteLattice::from_covers(names.len(), &covers, Some(names)).unwrap()
}

/// A named example lattice with a short note on where it comes from.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub lattice: FiniteLattice,
    pub provenance: &'static str,
}

pub const CATALOG_NAMES: [&str; 6] = ["stage1", "stage2", "stage3", "crowned-w", "s0", "s1"];

pub fn catalog_list() -> Vec<&'static str> {
    CATALOG_NAMES.to_vec()
}

/// Hand-encoded cover lists for the catalog lattices. Names follow the
/// node labels of the source diagrams.
pub fn catalog(name: &str) -> Result<CatalogEntry, LatticeError> {
    let (names, covers, provenance): (&[&str], &[(&str, &str)], &str) = match name {
        "stage1" => (
            &[
                "0", "x", "a", "b", "c", "center", "tpr2", "y", "z", "tpr1", "tpr", "1",
            ],
            &[
                ("0", "x"),
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "center"),
                ("b", "center"),
                ("a", "y"),
                ("a", "tpr2"),
                ("c", "tpr2"),
                ("b", "z"),
                ("center", "tpr1"),
                ("tpr2", "tpr1"),
                ("tpr1", "tpr"),
                ("z", "tpr"),
                ("y", "1"),
                ("x", "1"),
                ("tpr", "1"),
            ],
            "three-lattice doubling sequence, first stage",
        ),
        "stage2" => (
            &[
                "0", "x", "a", "b", "c", "a'", "center", "tpr2", "y", "z", "center'", "tpr1",
                "tpr1'", "tpr", "1",
            ],
            &[
                ("0", "x"),
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "a'"),
                ("a", "center"),
                ("a", "tpr2"),
                ("b", "center"),
                ("b", "z"),
                ("c", "tpr2"),
                ("a'", "y"),
                ("a'", "center'"),
                ("center", "center'"),
                ("center", "tpr1"),
                ("tpr2", "tpr1"),
                ("center'", "tpr1'"),
                ("tpr1", "tpr1'"),
                ("tpr1'", "tpr"),
                ("z", "tpr"),
                ("y", "1"),
                ("x", "1"),
                ("tpr", "1"),
            ],
            "three-lattice doubling sequence, second stage",
        ),
        "stage3" => (
            &[
                "0", "x", "a", "b", "c", "a'", "center", "tpr2", "y", "z", "center''",
                "center'", "tpr1", "tpr1'", "tpr", "1",
            ],
            &[
                ("0", "x"),
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "a'"),
                ("a", "center"),
                ("a", "tpr2"),
                ("b", "center"),
                ("b", "z"),
                ("c", "tpr2"),
                ("a'", "y"),
                ("a'", "center'"),
                ("center", "center''"),
                ("center''", "center'"),
                ("center''", "tpr1"),
                ("tpr2", "tpr1"),
                ("center'", "tpr1'"),
                ("tpr1", "tpr1'"),
                ("tpr1'", "tpr"),
                ("z", "tpr"),
                ("y", "1"),
                ("x", "1"),
                ("tpr", "1"),
            ],
            "three-lattice doubling sequence, third stage",
        ),
        "crowned-w" => (
            &[
                "0", "aa'", "bb'", "cc'", "a", "a'", "b", "b'", "c", "c'", "a+a'", "b+b'",
                "c+c'", "1",
            ],
            &[
                ("0", "aa'"),
                ("0", "bb'"),
                ("0", "cc'"),
                ("aa'", "a"),
                ("aa'", "a'"),
                ("bb'", "b"),
                ("bb'", "b'"),
                ("cc'", "c"),
                ("cc'", "c'"),
                ("a", "a+a'"),
                ("a'", "a+a'"),
                ("c", "a+a'"),
                ("a", "b+b'"),
                ("b", "b+b'"),
                ("b'", "b+b'"),
                ("b", "c+c'"),
                ("c", "c+c'"),
                ("c'", "c+c'"),
                ("a+a'", "1"),
                ("b+b'", "1"),
                ("c+c'", "1"),
            ],
            "14-element lattice with a crowned 3-cycle, satisfying (W)",
        ),
        "s0" => (
            &[
                "0", "a1", "b1", "F", "c", "b2", "E", "C", "D", "B", "a2", "A", "a3", "b3",
                "1",
            ],
            &[
                ("0", "a1"),
                ("0", "b1"),
                ("a1", "F"),
                ("a1", "c"),
                ("b1", "F"),
                ("b1", "b2"),
                ("F", "E"),
                ("E", "C"),
                ("E", "D"),
                ("C", "B"),
                ("C", "a2"),
                ("b2", "D"),
                ("D", "B"),
                ("B", "A"),
                ("a2", "a3"),
                ("A", "a3"),
                ("A", "b3"),
                ("c", "b3"),
                ("a3", "1"),
                ("b3", "1"),
            ],
            "snake S0: one S-pattern body, head and tail linked by c",
        ),
        "s1" => (
            &[
                "0", "a1", "b1", "N", "c", "b2", "M", "K", "L", "J", "I", "G", "H", "a2",
                "F", "E", "C", "D", "b3", "B", "A", "a3", "a4", "b4", "1",
            ],
            &[
                ("0", "a1"),
                ("0", "b1"),
                ("a1", "N"),
                ("a1", "c"),
                ("b1", "N"),
                ("b1", "b2"),
                ("N", "M"),
                ("M", "K"),
                ("M", "L"),
                ("K", "J"),
                ("K", "a2"),
                ("b2", "L"),
                ("L", "J"),
                ("J", "I"),
                ("I", "G"),
                ("I", "H"),
                ("G", "F"),
                ("a2", "G"),
                ("H", "F"),
                ("H", "b3"),
                ("F", "E"),
                ("E", "C"),
                ("E", "D"),
                ("C", "B"),
                ("C", "a3"),
                ("b3", "D"),
                ("D", "B"),
                ("B", "A"),
                ("a3", "a4"),
                ("A", "a4"),
                ("A", "b4"),
                ("c", "b4"),
                ("a4", "1"),
                ("b4", "1"),
            ],
            "snake S1: two S-pattern body, head and tail linked by c",
        ),
        other => return Err(LatticeError::UnknownName(other.to_string())),
    };
    Ok(CatalogEntry {
        name: CATALOG_NAMES.iter().find(|&&n| n == name).unwrap(),
        lattice: named_lattice(names, covers),
        provenance,
    })
}

/// Builds a lattice from element names and covers given by name pairs.
pub fn named_lattice(names: &[&str], covers: &[(&str, &str)]) -> FiniteLattice {
    let id = |s: &str| -> Element {
        names
            .iter()
            .position(|&n| n == s)
            .unwrap_or_else(|| panic!("unknown element name {s:?}"))
    };
    let pairs: Vec<(Element, Element)> = covers.iter().map(|&(lo, hi)| (id(lo), id(hi))).collect();
    FiniteLattice::from_covers(
        names.len(),
        &pairs,
        Some(names.iter().map(|s| s.to_string()).collect()),
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::is_isomorphic;

    #[test]
    fn boolean_is_iterated_product_of_chains() {
        let via_product = product(&product(&chain(2), &chain(2)), &chain(2));
        assert!(is_isomorphic(&boolean(3), &via_product).is_some());
        assert_eq!(boolean(0).size(), 1);
    }

    #[test]
    fn crown_poset_shape() {
        let (n, covers) = crown_poset(3).unwrap();
        assert_eq!(n, 6);
        assert_eq!(covers.len(), 6);
        assert!(crown_poset(2).is_err());
        assert!(FiniteLattice::from_covers(n, &covers, None).is_err());
    }

    #[test]
    fn doubling_a_chain_point_extends_the_chain() {
        let doubled = day_double(&chain(3), 1, 1).unwrap();
        assert!(is_isomorphic(&doubled, &chain(4)).is_some());
    }

    #[test]
    fn doubling_the_whole_lattice_is_product_with_two() {
        let n5 = pentagon();
        let doubled = day_double(&n5, n5.bottom(), n5.top()).unwrap();
        assert_eq!(doubled.size(), n5.size() * 2);
        assert!(is_isomorphic(&doubled, &product(&n5, &chain(2))).is_some());
    }

    #[test]
    fn doubling_rejects_non_intervals() {
        let n5 = pentagon();
        assert_eq!(day_double(&n5, 2, 1), Err(LatticeError::NotAnInterval(2, 1)));
        assert_eq!(day_double(&n5, 1, 3), Err(LatticeError::NotAnInterval(1, 3)));
    }

    #[test]
    fn doubling_keeps_the_untouched_part_embedded() {
        let l = catalog("stage1").unwrap().lattice;
        let d = day_double(&l, 2, 5).unwrap();
        assert_eq!(d.size(), l.size() + l.interval(2, 5).unwrap().len());
    }

    #[test]
    fn snakes_match_their_hand_encodings() {
        let s0 = snake(0);
        assert_eq!(s0.size(), 15);
        assert!(is_isomorphic(&s0, &catalog("s0").unwrap().lattice).is_some());

        let s1 = snake(1);
        assert!(is_isomorphic(&s1, &catalog("s1").unwrap().lattice).is_some());
    }

    #[test]
    fn snake_sizes_grow_linearly() {
        let sizes: Vec<usize> = (0..=4).map(|n| snake(n).size()).collect();
        let diffs: Vec<usize> = sizes.windows(2).map(|w| w[1] - w[0]).collect();
        assert!(diffs.iter().all(|&d| d == diffs[0]));
        assert_eq!(sizes[0], 15);
    }

    #[test]
    fn catalog_entries_validate() {
        for name in catalog_list() {
            let entry = catalog(name).unwrap();
            assert_eq!(entry.name, name);
            assert!(entry.lattice.size() >= 12);
        }
        assert!(matches!(
            catalog("nope"),
            Err(LatticeError::UnknownName(_))
        ));
        assert_eq!(catalog("crowned-w").unwrap().lattice.size(), 14);
    }

    #[test]
    fn crown_poset_embeds_in_boolean_three() {
        // Atoms and coatoms of 2^3 induce a crown of order six.
        let b3 = boolean(3);
        let atoms = [1usize, 2, 4];
        let coatoms = [3usize, 5, 6];
        for (i, &a) in atoms.iter().enumerate() {
            let above: Vec<usize> = coatoms
                .iter()
                .copied()
                .filter(|&c| b3.leq(a, c))
                .collect();
            assert_eq!(above.len(), 2, "atom {i} should sit under two coatoms");
        }
    }
}
