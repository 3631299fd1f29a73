//! Free-lattice terms and Whitman's decision procedure for the order.
//!
//! Terms live in an interning store; equal subtrees share one id, and the
//! order relation is memoized on id pairs, which the Whitman recursion
//! hits heavily. Stores are independent: concurrent use means one store
//! per thread, with identical results everywhere.

mod embed;
mod parse;

pub use embed::{pentagon_terms, s0_terms, verify_embedding, EmbeddingVerdict, TermTable};
pub use parse::parse_into;

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at byte {0}")]
    Syntax(usize),
    #[error("generator name {0:?} must be a lower-case letter followed by digits")]
    BadGeneratorName(String),
    #[error("the interval bounds are not ordered")]
    NotAnInterval,
    #[error("generator {0:?} already occurs in the interval bounds")]
    GeneratorCollision(String),
}

/// Handle to an interned term.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Term(u32);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Node {
    Gen(String),
    Join(Vec<Term>),
    Meet(Vec<Term>),
}

/// Which side [`TermStore::insert_generator`] builds.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum InsertSide {
    /// `α + w·β`
    Join,
    /// `(α + w)·β`
    Meet,
}

/// Interning store for free-lattice terms.
#[derive(Default)]
pub struct TermStore {
    nodes: Vec<Node>,
    intern: HashMap<Node, Term>,
    leq_memo: HashMap<(Term, Term), bool>,
    canon_memo: HashMap<Term, Term>,
}

impl TermStore {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern(&mut self, node: Node) -> Term {
        if let Some(&t) = self.intern.get(&node) {
            return t;
        }
        let t = Term(self.nodes.len() as u32);
        self.nodes.push(node.clone());
        self.intern.insert(node, t);
        t
    }

    fn node(&self, t: Term) -> &Node {
        &self.nodes[t.0 as usize]
    }

    /// A generator. Names are one lower-case letter followed by digits,
    /// so that juxtaposed meets like `bc` or `a1b` re-parse unambiguously.
    pub fn gen(&mut self, name: &str) -> Result<Term, TermError> {
        let mut chars = name.chars();
        let head_ok = matches!(chars.next(), Some(c) if c.is_ascii_lowercase());
        if !head_ok || !chars.all(|c| c.is_ascii_digit()) {
            return Err(TermError::BadGeneratorName(name.to_string()));
        }
        Ok(self.intern(Node::Gen(name.to_string())))
    }

    /// Join of the arguments; nested joins are flattened and duplicate
    /// ids dropped. A single argument is returned as-is.
    pub fn join(&mut self, args: impl IntoIterator<Item = Term>) -> Term {
        let flat = self.flatten(args, true);
        match flat.len() {
            0 => panic!("join of no terms"),
            1 => flat[0],
            _ => self.intern(Node::Join(flat)),
        }
    }

    /// Meet of the arguments, dual to [`TermStore::join`].
    pub fn meet(&mut self, args: impl IntoIterator<Item = Term>) -> Term {
        let flat = self.flatten(args, false);
        match flat.len() {
            0 => panic!("meet of no terms"),
            1 => flat[0],
            _ => self.intern(Node::Meet(flat)),
        }
    }

    fn flatten(&self, args: impl IntoIterator<Item = Term>, join: bool) -> Vec<Term> {
        let mut out = Vec::new();
        for t in args {
            let nested: Option<&[Term]> = match (self.node(t), join) {
                (Node::Join(xs), true) => Some(xs),
                (Node::Meet(xs), false) => Some(xs),
                _ => None,
            };
            match nested {
                Some(xs) => out.extend(xs.iter().copied()),
                None => out.push(t),
            }
            // Nested arguments were flattened at their own construction.
        }
        let mut seen = Vec::new();
        out.retain(|t| {
            if seen.contains(t) {
                false
            } else {
                seen.push(*t);
                true
            }
        });
        out
    }

    pub fn parse(&mut self, input: &str) -> Result<Term, TermError> {
        parse_into(self, input)
    }

    /// Whitman's decision procedure for `s ≤ t` in the free lattice.
    pub fn leq(&mut self, s: Term, t: Term) -> bool {
        if s == t {
            return true;
        }
        if let Some(&r) = self.leq_memo.get(&(s, t)) {
            return r;
        }
        let sn = self.node(s).clone();
        let tn = self.node(t).clone();
        let r = match (&sn, &tn) {
            (Node::Join(ss), _) => ss.iter().all(|&si| self.leq(si, t)),
            (_, Node::Meet(tt)) => tt.iter().all(|&tj| self.leq(s, tj)),
            (Node::Gen(g), Node::Gen(h)) => g == h,
            (Node::Gen(_), Node::Join(tt)) => tt.iter().any(|&tj| self.leq(s, tj)),
            (Node::Meet(ss), Node::Gen(_)) => ss.iter().any(|&si| self.leq(si, t)),
            (Node::Meet(ss), Node::Join(tt)) => {
                // The (W) branch.
                ss.iter().any(|&si| self.leq(si, t)) || tt.iter().any(|&tj| self.leq(s, tj))
            }
        };
        self.leq_memo.insert((s, t), r);
        r
    }

    /// Equality in the free lattice: both inequalities.
    pub fn term_eq(&mut self, s: Term, t: Term) -> bool {
        self.leq(s, t) && self.leq(t, s)
    }

    /// Canonical-ish form: arguments canonized recursively, same-operation
    /// nesting flattened, redundant arguments deleted (a joinand below the
    /// join of the others, dually for meets), arguments sorted by a fixed
    /// structural order. Preserves equality and is idempotent.
    pub fn canonical(&mut self, t: Term) -> Term {
        if let Some(&c) = self.canon_memo.get(&t) {
            return c;
        }
        let result = match self.node(t).clone() {
            Node::Gen(_) => t,
            Node::Join(args) => {
                let canon: Vec<Term> = args.iter().map(|&a| self.canonical(a)).collect();
                let reduced = self.reduce_args(canon, true);
                self.sorted_op(reduced, true)
            }
            Node::Meet(args) => {
                let canon: Vec<Term> = args.iter().map(|&a| self.canonical(a)).collect();
                let reduced = self.reduce_args(canon, false);
                self.sorted_op(reduced, false)
            }
        };
        self.canon_memo.insert(t, result);
        result
    }

    /// Drops arguments absorbed by the rest, scanning deterministically
    /// until a fixed point.
    fn reduce_args(&mut self, args: Vec<Term>, join: bool) -> Vec<Term> {
        let mut kept = self.flatten(args, join);
        'scan: loop {
            for i in 0..kept.len() {
                if kept.len() == 1 {
                    break 'scan;
                }
                let rest: Vec<Term> = kept
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &x)| x)
                    .collect();
                let combined = if join {
                    self.join(rest)
                } else {
                    self.meet(rest)
                };
                let redundant = if join {
                    self.leq(kept[i], combined)
                } else {
                    self.leq(combined, kept[i])
                };
                if redundant {
                    kept.remove(i);
                    continue 'scan;
                }
            }
            break;
        }
        kept
    }

    fn sorted_op(&mut self, mut args: Vec<Term>, join: bool) -> Term {
        args.sort_by(|&a, &b| self.structural_cmp(a, b));
        if join {
            self.join(args)
        } else {
            self.meet(args)
        }
    }

    /// A fixed total order on terms: generators before meets before
    /// joins, then recursively by arguments.
    pub fn structural_cmp(&self, a: Term, b: Term) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        if a == b {
            return Ordering::Equal;
        }
        let rank = |n: &Node| match n {
            Node::Gen(_) => 0u8,
            Node::Meet(_) => 1,
            Node::Join(_) => 2,
        };
        let (na, nb) = (self.node(a), self.node(b));
        rank(na).cmp(&rank(nb)).then_with(|| match (na, nb) {
            (Node::Gen(x), Node::Gen(y)) => x.cmp(y),
            (Node::Meet(xs), Node::Meet(ys)) | (Node::Join(xs), Node::Join(ys)) => {
                for (&x, &y) in xs.iter().zip(ys.iter()) {
                    let c = self.structural_cmp(x, y);
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                xs.len().cmp(&ys.len())
            }
            _ => unreachable!("ranks differ"),
        })
    }

    /// Inserts a fresh generator `w` into the interval `[alpha, beta]`.
    pub fn insert_generator(
        &mut self,
        alpha: Term,
        beta: Term,
        w: &str,
        side: InsertSide,
    ) -> Result<Term, TermError> {
        if !self.leq(alpha, beta) {
            return Err(TermError::NotAnInterval);
        }
        let occurs = |s: &TermStore, t: Term| s.generators(t).contains(&w.to_string());
        if occurs(self, alpha) || occurs(self, beta) {
            return Err(TermError::GeneratorCollision(w.to_string()));
        }
        let wg = self.gen(w)?;
        Ok(match side {
            InsertSide::Join => {
                let wb = self.meet([wg, beta]);
                self.join([alpha, wb])
            }
            InsertSide::Meet => {
                let aw = self.join([alpha, wg]);
                self.meet([aw, beta])
            }
        })
    }

    /// The set of generator names occurring in a term.
    pub fn generators(&self, t: Term) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_gens(t, &mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_gens(&self, t: Term, out: &mut Vec<String>) {
        match self.node(t) {
            Node::Gen(g) => out.push(g.clone()),
            Node::Join(args) | Node::Meet(args) => {
                for &a in args {
                    self.collect_gens(a, out);
                }
            }
        }
    }

    /// Renders a term in the input syntax: joins with `+`, meets by
    /// juxtaposition, parentheses around join arguments of meets.
    pub fn render(&self, t: Term) -> String {
        match self.node(t) {
            Node::Gen(g) => g.clone(),
            Node::Join(args) => args
                .iter()
                .map(|&a| self.render(a))
                .collect::<Vec<_>>()
                .join(" + "),
            Node::Meet(args) => args
                .iter()
                .map(|&a| match self.node(a) {
                    Node::Join(_) => format!("({})", self.render(a)),
                    _ => self.render(a),
                })
                .collect::<Vec<_>>()
                .concat(),
        }
    }
}
