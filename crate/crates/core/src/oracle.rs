//! Cross-checks: every quantity that can be computed two independent ways
//! is computed both ways and compared.

use crate::bset::BSet;
use crate::hm::{self, DirectedFamilies, LITERAL_COMPACT_BOUND};
use crate::order::BOrder;
use crate::separation::{
    check, classical_axiom, classical_r0_literal, classical_r1_by_equivalence, classical_r1_by_product,
    pairwise_hausdorff_by_diagonal, r0_by_open_sets, r1_by_symmetric_part, t0_reflection, Axiom, Classical,
};
use crate::sobriety::{
    self, b_points, b_points_brute_force_within, irreducible_closed_literal, irreducible_closed_pairs, BRUTE_FORCE_BOUND,
};
use crate::space::BSpace;
use crate::topology::FinTopology;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Agree,
    Disagree(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default)]
pub struct OracleReport {
    pub checks: Vec<Check>,
}

impl OracleReport {
    fn push(&mut self, name: &'static str, outcome: Outcome) {
        self.checks.push(Check { name, outcome });
    }

    fn compare<T: PartialEq + std::fmt::Debug>(&mut self, name: &'static str, left: T, right: T) {
        let outcome = if left == right {
            Outcome::Agree
        } else {
            Outcome::Disagree(format!("{left:?} vs {right:?}"))
        };
        self.push(name, outcome);
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Disagree(_)))
    }

    pub fn all_agree(&self) -> bool {
        self.disagreements().next().is_none()
    }
}

fn both(s: &BSpace, f: impl Fn(&FinTopology) -> bool) -> bool {
    f(&s.tt) && f(&s.ff)
}

/// The specialization B-order, the axiom characterizations, the two
/// irreducible-closed enumerations and the two B-point enumerations.
pub fn dual_paths(s: &BSpace) -> OracleReport {
    dual_paths_within(s, BRUTE_FORCE_BOUND)
}

/// [`dual_paths`], running the brute-force B-point search only when the
/// B-topology has at most `bound` members.
pub fn dual_paths_within(s: &BSpace, bound: usize) -> OracleReport {
    let mut r = OracleReport::default();
    r.compare(
        "omega: closures vs basis",
        BOrder::specialization(s),
        BOrder::specialization_by_subbasis(s),
    );
    let join = s.tt.join(&s.ff);
    let cw = |c: Classical| both(s, |t| classical_axiom(t, c));
    r.compare("T0 vs join T0", check(s, Axiom::T0), classical_axiom(&join, Classical::T0));
    r.compare("R0 vs componentwise R0", check(s, Axiom::R0), cw(Classical::R0));
    r.compare("R0 vs open sets contain point closures", check(s, Axiom::R0), r0_by_open_sets(s));
    r.compare("R1 vs componentwise R1", check(s, Axiom::R1), cw(Classical::R1));
    r.compare("R1 vs closed symmetric part", check(s, Axiom::R1), r1_by_symmetric_part(s));
    r.compare("regular vs componentwise regular", check(s, Axiom::Regular), cw(Classical::Regular));
    r.compare("normal vs componentwise normal", check(s, Axiom::Normal), cw(Classical::Normal));
    let (q, _) = t0_reflection(s);
    r.compare("R0 vs T1 of the T0-reflection", check(s, Axiom::R0), check(&q, Axiom::T1));
    r.compare("R1 vs Hausdorff of the T0-reflection", check(s, Axiom::R1), check(&q, Axiom::Hausdorff));
    r.compare(
        "pairwise Hausdorff vs closed diagonal",
        check(s, Axiom::PairwiseHausdorff),
        pairwise_hausdorff_by_diagonal(s),
    );
    r.compare(
        "classical R0: symmetric vs literal",
        both(s, |t| classical_axiom(t, Classical::R0)),
        both(s, classical_r0_literal),
    );
    r.compare(
        "classical R1: definition vs closed specialization",
        both(s, |t| classical_axiom(t, Classical::R1)),
        both(s, classical_r1_by_product),
    );
    r.compare(
        "classical R1: definition vs closed equivalence",
        both(s, |t| classical_axiom(t, Classical::R1)),
        both(s, classical_r1_by_equivalence),
    );
    r.compare(
        "irreducible closed B-sets: definition vs pairs",
        irreducible_closed_literal(s),
        irreducible_closed_pairs(s),
    );
    if s.btopology_size() <= bound {
        let opens = s.bopens();
        let mut constructive: Vec<Vec<_>> = b_points(s).iter().map(|p| p.values(&opens)).collect();
        constructive.sort();
        match b_points_brute_force_within(s, bound) {
            Ok(brute) => r.compare("B-points: filter pairs vs brute force", constructive, brute),
            Err(e) => r.push("B-points: filter pairs vs brute force", Outcome::Skipped(e.to_string())),
        }
    } else {
        r.push(
            "B-points: filter pairs vs brute force",
            Outcome::Skipped(format!(
                "{} open B-sets exceeds {bound}",
                s.btopology_size()
            )),
        );
    }
    r.compare(
        "B-sober: points vs irreducible pairs",
        sobriety::is_b_sober(s),
        sobriety::b_sober_witness(s).is_none(),
    );
    r.compare(
        "d-sober: d-points vs pair conditions",
        sobriety::is_d_sober(s),
        sobriety::d_sober_witness(s).is_none(),
    );
    r
}

/// [`dual_paths`] plus compactness and saturation checks over every B-set.
pub fn run(s: &BSpace) -> OracleReport {
    run_within(s, BRUTE_FORCE_BOUND)
}

pub fn run_within(s: &BSpace, bound: usize) -> OracleReport {
    let mut r = dual_paths_within(s, bound);
    let sets: Vec<BSet> = if s.len() <= 6 { BSet::all(s.len()).collect() } else { Vec::new() };
    if sets.is_empty() {
        r.push("saturation: opens above vs open hulls of cuts", Outcome::Skipped("carrier too large".into()));
    } else {
        let bad = sets
            .iter()
            .find(|t| hm::saturate(s, t) != hm::saturate_by_cuts(s, t));
        r.push(
            "saturation: opens above vs open hulls of cuts",
            match bad {
                None => Outcome::Agree,
                Some(t) => Outcome::Disagree(s.carrier.render_bset(t)),
            },
        );
    }
    match DirectedFamilies::new(s) {
        Ok(fams) if !sets.is_empty() => {
            let bad = sets.iter().find(|t| fams.is_compact(t) != hm::is_compact(s, t));
            r.push(
                "compactness: directed families vs cuts",
                match bad {
                    None => Outcome::Agree,
                    Some(t) => Outcome::Disagree(s.carrier.render_bset(t)),
                },
            );
        }
        Ok(_) => r.push("compactness: directed families vs cuts", Outcome::Skipped("carrier too large".into())),
        Err(_) => r.push(
            "compactness: directed families vs cuts",
            Outcome::Skipped(format!(
                "{} open B-sets exceeds {LITERAL_COMPACT_BOUND}",
                s.btopology_size()
            )),
        ),
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn catalog_agrees() {
        for s in catalog::spaces() {
            let r = run(&s);
            assert!(r.all_agree(), "{}: {:?}", s.name, r.disagreements().collect::<Vec<_>>());
        }
    }

    #[test]
    fn t4x3_runs_every_check() {
        let r = run(&catalog::t4x3());
        assert!(r.checks.iter().all(|c| c.outcome == Outcome::Agree), "{:?}", r.checks);
    }
}
