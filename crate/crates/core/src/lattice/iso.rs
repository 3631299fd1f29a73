//! Order isomorphism testing via invariant refinement plus backtracking.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::{Element, FiniteLattice};

/// Searches for an order isomorphism and returns the element map
/// (`map[x]` is the image of `x`) when one exists.
///
/// Elements are first partitioned by iterated degree/height signatures;
/// backtracking then only matches elements within equal classes. Matching
/// covers in both directions over a bijection is equivalent to matching
/// the full order.
pub fn is_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<Element>> {
    if a.size() != b.size() || a.covers().len() != b.covers().len() {
        return None;
    }
    let n = a.size();
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }

    // Map the rarest classes first.
    let mut order: Vec<Element> = (0..n).collect();
    let class_size =
        |x: Element| sig_a.iter().filter(|&&s| s == sig_a[x]).count();
    order.sort_by_key(|&x| (class_size(x), x));

    let mut map: Vec<Option<Element>> = vec![None; n];
    let mut used = vec![false; n];
    if assign(a, b, &sig_a, &sig_b, &order, 0, &mut map, &mut used) {
        Some(map.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

fn assign(
    a: &FiniteLattice,
    b: &FiniteLattice,
    sig_a: &[u64],
    sig_b: &[u64],
    order: &[Element],
    k: usize,
    map: &mut Vec<Option<Element>>,
    used: &mut Vec<bool>,
) -> bool {
    if k == order.len() {
        return true;
    }
    let x = order[k];
    for y in 0..b.size() {
        if used[y] || sig_b[y] != sig_a[x] {
            continue;
        }
        let consistent = order[..k].iter().all(|&x2| {
            let y2 = map[x2].unwrap();
            a.leq(x, x2) == b.leq(y, y2) && a.leq(x2, x) == b.leq(y2, y)
        });
        if !consistent {
            continue;
        }
        map[x] = Some(y);
        used[y] = true;
        if assign(a, b, sig_a, sig_b, order, k + 1, map, used) {
            return true;
        }
        map[x] = None;
        used[y] = false;
    }
    false
}

/// Iterated neighbourhood signature, stable under isomorphism.
fn signatures(l: &FiniteLattice) -> Vec<u64> {
    let n = l.size();
    let up: Vec<Vec<Element>> = (0..n).map(|x| l.upper_covers(x)).collect();
    let down: Vec<Vec<Element>> = (0..n).map(|x| l.lower_covers(x)).collect();
    let mut sig: Vec<u64> = (0..n)
        .map(|x| {
            hash_key(&[
                up[x].len() as u64,
                down[x].len() as u64,
                l.height(x) as u64,
                l.up_set(x).len() as u64,
                l.down_set(x).len() as u64,
            ])
        })
        .collect();
    for _ in 0..n {
        let next: Vec<u64> = (0..n)
            .map(|x| {
                let mut ups: Vec<u64> = up[x].iter().map(|&y| sig[y]).collect();
                let mut downs: Vec<u64> = down[x].iter().map(|&y| sig[y]).collect();
                ups.sort_unstable();
                downs.sort_unstable();
                let mut parts = vec![sig[x], u64::MAX];
                parts.extend(ups);
                parts.push(u64::MAX - 1);
                parts.extend(downs);
                hash_key(&parts)
            })
            .collect();
        if next == sig {
            break;
        }
        sig = next;
    }
    sig
}

fn hash_key(parts: &[u64]) -> u64 {
    let mut h = DefaultHasher::new();
    parts.hash(&mut h);
    h.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean, chain, pentagon, product};

    #[test]
    fn identity_and_negative_cases() {
        let n5 = pentagon();
        let id = is_isomorphic(&n5, &n5).unwrap();
        assert_eq!(id, vec![0, 1, 2, 3, 4]);

        let c4 = chain(4);
        let b2 = boolean(2);
        assert!(is_isomorphic(&c4, &b2).is_none());
    }

    #[test]
    fn product_commutes_up_to_iso() {
        let a = product(&chain(2), &chain(3));
        let b = product(&chain(3), &chain(2));
        assert!(is_isomorphic(&a, &b).is_some());
        assert!(is_isomorphic(&a, &chain(6)).is_none());
    }

    #[test]
    fn map_preserves_order() {
        let n5 = pentagon();
        let d = n5.dual();
        let map = is_isomorphic(&n5, &d).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(n5.leq(x, y), d.leq(map[x], map[y]));
            }
        }
    }
}
