//! Explicit sublattices of the free lattice and mechanical verification
//! that a labeled term table realizes a given finite lattice.

use super::{Term, TermStore};
use crate::lattice::FiniteLattice;

/// Labeled terms, in display order.
#[derive(Clone, Debug)]
pub struct TermTable {
    pub entries: Vec<(String, Term)>,
}

impl TermTable {
    pub fn get(&self, label: &str) -> Option<Term> {
        self.entries
            .iter()
            .find(|(l, _)| l == label)
            .map(|&(_, t)| t)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.entries.iter().map(|(l, _)| l.as_str()).collect()
    }
}

/// The fifteen terms over the generators `a, b, c, x, y` realizing the
/// snake `S_0` inside the free lattice, labeled like the `S_0` diagram.
pub fn s0_terms(store: &mut TermStore) -> TermTable {
    let entries = [
        ("1", "a + (a(b+c) + bc + x)(b + c)"),
        ("b3", "a + bc"),
        ("a3", "(a(b+c) + bc + x)(b + c) + (a + bc)(b + c)y"),
        ("a2", "(a(b+c) + bc + x)(b + c)"),
        ("A", "(a + bc)((a(b+c) + bc + x)(b+c) + (a+bc)(b+c)y)"),
        ("B", "(a(b+c) + bc + x)(a + bc)(b + c) + (a + bc)(b + c)y"),
        ("C", "(a(b+c) + bc + x)(a + bc)(b + c)"),
        ("D", "(a + bc)(b+c)y + a(b + c) + bc"),
        ("E", "((a + bc)(b+c)y + a(b+c) + bc)(a(b+c) + bc + x)"),
        ("F", "a(b+c) + ((a + bc)(b+c)y + bc)(a(b+c) + bc + x)"),
        ("b2", "(a+bc)(b+c)y + bc"),
        ("b1", "((a + bc)(b + c)y + bc)(a(b+c) + bc + x)"),
        ("a1", "a(b + c)"),
        ("0", "a((a + bc)(b + c)y + bc)"),
        ("c", "a"),
    ];
    TermTable {
        entries: entries
            .iter()
            .map(|&(label, txt)| (label.to_string(), store.parse(txt).unwrap()))
            .collect(),
    }
}

/// The five terms forming a pentagon, labeled to match
/// [`crate::construct::pentagon`]: the chain `0 < 1 < 2 < 4` carries
/// `a(b+c) < a(b+c)+bc < (a+bc)(b+c) < a+bc` and `3` is the side
/// element `a`.
pub fn pentagon_terms(store: &mut TermStore) -> TermTable {
    let entries = [
        ("0", "a(b + c)"),
        ("1", "a(b + c) + bc"),
        ("2", "(a + bc)(b + c)"),
        ("3", "a"),
        ("4", "a + bc"),
    ];
    TermTable {
        entries: entries
            .iter()
            .map(|&(label, txt)| (label.to_string(), store.parse(txt).unwrap()))
            .collect(),
    }
}

/// Outcome of [`verify_embedding`], with diagnostics instead of errors.
#[derive(Clone, Debug, Default)]
pub struct EmbeddingVerdict {
    /// Pairs of labels whose join or meet is not equal to any table
    /// entry; the third component names the operation.
    pub closure_failures: Vec<(String, String, &'static str)>,
    /// Label pairs where the term order disagrees with the target order.
    pub order_mismatches: Vec<(String, String)>,
    /// Labels missing from the target lattice, or a size mismatch.
    pub label_errors: Vec<String>,
}

impl EmbeddingVerdict {
    pub fn closed(&self) -> bool {
        self.closure_failures.is_empty()
    }

    pub fn order_isomorphic(&self) -> bool {
        self.order_mismatches.is_empty() && self.label_errors.is_empty()
    }

    pub fn success(&self) -> bool {
        self.closed() && self.order_isomorphic()
    }
}

/// Checks that the table's terms form a sublattice of the free lattice
/// (every pairwise join and meet is equal to a table entry) and that the
/// label map onto `target` is an order isomorphism.
pub fn verify_embedding(
    store: &mut TermStore,
    table: &TermTable,
    target: &FiniteLattice,
) -> EmbeddingVerdict {
    let mut verdict = EmbeddingVerdict::default();
    let n = table.entries.len();
    if target.size() != n {
        verdict
            .label_errors
            .push(format!("table has {n} labels, lattice has {}", target.size()));
    }

    for i in 0..n {
        for j in (i + 1)..n {
            let (ref li, ti) = table.entries[i];
            let (ref lj, tj) = table.entries[j];
            for (opname, combined) in [
                ("join", store.join([ti, tj])),
                ("meet", store.meet([ti, tj])),
            ] {
                let canon = store.canonical(combined);
                let hit = table
                    .entries
                    .iter()
                    .any(|&(_, entry)| store.term_eq(canon, entry));
                if !hit {
                    verdict
                        .closure_failures
                        .push((li.clone(), lj.clone(), opname));
                }
            }
        }
    }

    let ids: Vec<Option<usize>> = table
        .entries
        .iter()
        .map(|(label, _)| {
            let found = target.element_by_name(label);
            if found.is_none() {
                verdict.label_errors.push(format!("no element named {label:?}"));
            }
            found
        })
        .collect();
    if verdict.label_errors.is_empty() {
        for i in 0..n {
            for j in 0..n {
                let (ref li, ti) = table.entries[i];
                let (ref lj, tj) = table.entries[j];
                let term_leq = store.leq(ti, tj);
                let target_leq = target.leq(ids[i].unwrap(), ids[j].unwrap());
                if term_leq != target_leq {
                    verdict.order_mismatches.push((li.clone(), lj.clone()));
                }
            }
        }
    }
    verdict
}
