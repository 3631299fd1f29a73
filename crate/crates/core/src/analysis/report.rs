//! One-shot analysis of a lattice with a serializable report.

use serde::{Deserialize, Serialize};

use super::{
    breadth, check_sparse_pattern, dismantle, find_c_cycles, find_crown, is_planar, is_sd,
    kappa_map, max_cover_degree, sd_join_violation, sd_meet_violation, whitman_violation,
    CrownOrder,
};
use crate::lattice::FiniteLattice;

/// A property together with its first counterexample when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl CheckReport {
    fn from_violation<const N: usize>(v: Option<[usize; N]>) -> Self {
        CheckReport {
            holds: v.is_none(),
            witness: v.map(|w| w.to_vec()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CCycleRepr {
    pub nodes: Vec<usize>,
    pub labels: Vec<String>,
}

/// Every computed predicate and witness for one lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub sd_join: CheckReport,
    pub sd_meet: CheckReport,
    pub whitman: CheckReport,
    pub kappa: Vec<(usize, Option<usize>)>,
    pub breadth: Option<usize>,
    pub max_cover_degree: usize,
    pub crown: Option<Vec<usize>>,
    pub dismantlable: bool,
    pub planar: bool,
    pub c_cycles: Option<Vec<CCycleRepr>>,
    pub sparse_witness: Option<[usize; 8]>,
}

pub fn analyze(l: &FiniteLattice) -> AnalysisReport {
    let c_cycles = if is_sd(l) {
        Some(
            find_c_cycles(l)
                .unwrap()
                .into_iter()
                .map(|c| CCycleRepr {
                    nodes: c.nodes,
                    labels: c
                        .labels
                        .iter()
                        .map(|s| match (s.a, s.b) {
                            (true, true) => "AB".to_string(),
                            (true, false) => "A".to_string(),
                            (false, true) => "B".to_string(),
                            (false, false) => unreachable!("cycle step without a label"),
                        })
                        .collect(),
                })
                .collect(),
        )
    } else {
        None
    };
    AnalysisReport {
        sd_join: CheckReport::from_violation(sd_join_violation(l)),
        sd_meet: CheckReport::from_violation(sd_meet_violation(l)),
        whitman: CheckReport::from_violation(whitman_violation(l)),
        kappa: kappa_map(l).pairs,
        breadth: breadth(l).ok(),
        max_cover_degree: max_cover_degree(l),
        crown: find_crown(l, CrownOrder::Any),
        dismantlable: dismantle(l).0,
        planar: is_planar(l),
        c_cycles,
        sparse_witness: check_sparse_pattern(l).map(|w| w.as_array()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{diamond_m3, snake};

    #[test]
    fn snake_report_matches_the_claim_set() {
        let r = analyze(&snake(0));
        assert!(r.sd_join.holds && r.sd_meet.holds && r.whitman.holds);
        assert!(r.dismantlable);
        assert!(!r.planar);
        assert_eq!(r.breadth, Some(2));
        assert_eq!(r.crown, None);
        assert_eq!(r.c_cycles.as_deref(), Some(&[][..]));
        assert!(r.sparse_witness.is_some());
    }

    #[test]
    fn report_round_trips_through_json() {
        let r = analyze(&diamond_m3());
        assert!(r.c_cycles.is_none());
        assert_eq!(r.sd_join.witness, Some(vec![1, 2, 3]));
        let s = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        for key in [
            "sd_join",
            "sd_meet",
            "whitman",
            "kappa",
            "breadth",
            "max_cover_degree",
            "crown",
            "dismantlable",
            "planar",
            "c_cycles",
            "sparse_witness",
        ] {
            assert!(s.contains(&format!("\"{key}\"")), "missing key {key}");
        }
    }
}
