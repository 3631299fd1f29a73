//! The sparse forbidden-sublattice pattern: a pinched configuration
//! between the covers of the top and the covers of the bottom.

use crate::lattice::{Element, FiniteLattice};

/// Elements witnessing the pattern: `a, b` covered by the top, `c, d`
/// covering the bottom with `c + d < a·b`, and side elements
/// `a', b', c', d'` as in conditions (1) and (2).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SparseWitness {
    pub a: Element,
    pub b: Element,
    pub c: Element,
    pub d: Element,
    pub a_prime: Element,
    pub b_prime: Element,
    pub c_prime: Element,
    pub d_prime: Element,
}

impl SparseWitness {
    pub fn as_array(&self) -> [Element; 8] {
        [
            self.a,
            self.b,
            self.c,
            self.d,
            self.a_prime,
            self.b_prime,
            self.c_prime,
            self.d_prime,
        ]
    }
}

/// Searches for the sparse pattern and returns the first witness in id
/// order, or `None`.
///
/// Condition (1): `a' ≠ ab` is covered by `a`, `b' ≠ ab` is covered by
/// `b`, `c' ≠ c+d` covers `c`, `d' ≠ c+d` covers `d`. Condition (2):
/// all four side elements distinct, or exactly three distinct with
/// `a' ≠ b'` and `c' ≠ d'`.
pub fn check_sparse_pattern(l: &FiniteLattice) -> Option<SparseWitness> {
    let top_covers = l.lower_covers(l.top());
    let bottom_covers = l.upper_covers(l.bottom());
    for &a in &top_covers {
        for &b in &top_covers {
            if a >= b {
                continue;
            }
            let ab = l.meet(a, b);
            for &c in &bottom_covers {
                for &d in &bottom_covers {
                    if c >= d {
                        continue;
                    }
                    let cd = l.join(c, d);
                    if !l.lt(cd, ab) {
                        continue;
                    }
                    if let Some(w) = side_elements(l, a, b, c, d, ab, cd) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

fn side_elements(
    l: &FiniteLattice,
    a: Element,
    b: Element,
    c: Element,
    d: Element,
    ab: Element,
    cd: Element,
) -> Option<SparseWitness> {
    for ap in l.lower_covers(a) {
        if ap == ab {
            continue;
        }
        for bp in l.lower_covers(b) {
            if bp == ab {
                continue;
            }
            for cp in l.upper_covers(c) {
                if cp == cd {
                    continue;
                }
                for dp in l.upper_covers(d) {
                    if dp == cd {
                        continue;
                    }
                    let mut distinct = vec![ap, bp, cp, dp];
                    distinct.sort_unstable();
                    distinct.dedup();
                    let ok = match distinct.len() {
                        4 => true,
                        3 => ap != bp && cp != dp,
                        _ => false,
                    };
                    if ok {
                        return Some(SparseWitness {
                            a,
                            b,
                            c,
                            d,
                            a_prime: ap,
                            b_prime: bp,
                            c_prime: cp,
                            d_prime: dp,
                        });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean, catalog, pentagon, snake};

    #[test]
    fn witness_on_the_first_snake() {
        let s0 = catalog("s0").unwrap().lattice;
        let w = check_sparse_pattern(&s0).expect("snake S0 carries the pattern");
        let name = |x| s0.label(x);
        assert_eq!(name(w.a), "a3");
        assert_eq!(name(w.b), "b3");
        assert_eq!(name(w.c), "a1");
        assert_eq!(name(w.d), "b1");
        assert_eq!(name(l_meet(&s0, w.a, w.b)), "A");
        assert_eq!(name(l_join(&s0, w.c, w.d)), "F");
        assert_eq!(name(w.a_prime), "a2");
        assert_eq!(name(w.b_prime), "c");
        assert_eq!(name(w.c_prime), "c");
        assert_eq!(name(w.d_prime), "b2");
    }

    fn l_meet(l: &FiniteLattice, x: usize, y: usize) -> usize {
        l.meet(x, y)
    }
    fn l_join(l: &FiniteLattice, x: usize, y: usize) -> usize {
        l.join(x, y)
    }

    #[test]
    fn absent_on_small_standard_lattices() {
        assert_eq!(check_sparse_pattern(&boolean(3)), None);
        assert_eq!(check_sparse_pattern(&boolean(2)), None);
        assert_eq!(check_sparse_pattern(&pentagon()), None);
    }

    #[test]
    fn present_on_generated_snakes() {
        assert!(check_sparse_pattern(&snake(0)).is_some());
        assert!(check_sparse_pattern(&snake(1)).is_some());
    }
}
