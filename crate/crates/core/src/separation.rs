//! Separation axioms: B-valued, join, componentwise, pairwise and classical.

use std::fmt;
use std::str::FromStr;

use crate::bset::BSet;
use crate::bval::BVal;
use crate::error::{Error, Result};
use crate::hm;
use crate::order::BOrder;
use crate::pointset::PointSet;
use crate::space::BSpace;
use crate::topology::{partition_by_key, FinTopology};

/// Axioms decided for a single topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classical {
    T0,
    T1,
    R0,
    R1,
    Regular,
    Normal,
    Sober,
    Compact,
}

pub fn classical_axiom(t: &FinTopology, axiom: Classical) -> bool {
    let n = t.len();
    let sp = t.specialization();
    match axiom {
        Classical::T0 => sp.is_antisymmetric(),
        Classical::T1 => (0..n).all(|x| t.nbhd(x) == PointSet::singleton(x)),
        Classical::R0 => sp.is_symmetric(),
        Classical::R1 => (0..n).all(|x| {
            (0..n).all(|y| {
                let cx = t.closure(PointSet::singleton(x));
                let cy = t.closure(PointSet::singleton(y));
                cx == cy || !t.nbhd(x).meets(t.nbhd(y))
            })
        }),
        Classical::Regular => t.closed_sets().iter().all(|&f| {
            let hull = t.open_hull(f);
            (0..n).filter(|&x| !f.contains(x)).all(|x| !t.nbhd(x).meets(hull))
        }),
        Classical::Normal => {
            let closed = t.closed_sets();
            closed.iter().all(|&f| {
                closed
                    .iter()
                    .filter(|&&g| !f.meets(g))
                    .all(|&g| !t.open_hull(f).meets(t.open_hull(g)))
            })
        }
        Classical::Sober => {
            let irr = t.irreducible_closed_sets();
            irr.iter().all(|&k| {
                (0..n)
                    .filter(|&x| t.closure(PointSet::singleton(x)) == k)
                    .count()
                    == 1
            })
        }
        Classical::Compact => true,
    }
}

/// `R0` read literally: every open set containing `x` contains `cl{x}`.
pub fn classical_r0_literal(t: &FinTopology) -> bool {
    t.opens().iter().all(|&u| {
        u.iter()
            .all(|x| t.closure(PointSet::singleton(x)).is_subset(u))
    })
}

/// `R1` as "the specialization preorder is closed in `X × X`".
pub fn classical_r1_by_product(t: &FinTopology) -> bool {
    let sq = t.product(t).expect("square fits");
    sq.is_closed(t.specialization().as_pair_set())
}

/// `R1` as "`≤ ∩ ≥` is closed in `X × X`".
pub fn classical_r1_by_equivalence(t: &FinTopology) -> bool {
    let n = t.len();
    let sq = t.product(t).expect("square fits");
    let sp = t.specialization();
    let eq: PointSet = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| sp.leq(x, y) && sp.leq(y, x))
        .map(|(x, y)| x * n + y)
        .collect();
    sq.is_closed(eq)
}

/// Every axiom reported for a space, in rendering order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    T0,
    R0,
    T1,
    R1,
    Hausdorff,
    Regular,
    T3,
    Normal,
    T4,
    JoinT0,
    JoinT1,
    CwT0,
    CwT1,
    CwR0,
    CwR1,
    CwRegular,
    CwNormal,
    PairwiseHausdorff,
    PairwiseHausdorffWeak,
    OrderSeparated,
    PairwiseRegular,
    PairwiseNormal,
    Compact,
}

impl Axiom {
    pub const ALL: [Axiom; 23] = [
        Axiom::T0,
        Axiom::R0,
        Axiom::T1,
        Axiom::R1,
        Axiom::Hausdorff,
        Axiom::Regular,
        Axiom::T3,
        Axiom::Normal,
        Axiom::T4,
        Axiom::JoinT0,
        Axiom::JoinT1,
        Axiom::CwT0,
        Axiom::CwT1,
        Axiom::CwR0,
        Axiom::CwR1,
        Axiom::CwRegular,
        Axiom::CwNormal,
        Axiom::PairwiseHausdorff,
        Axiom::PairwiseHausdorffWeak,
        Axiom::OrderSeparated,
        Axiom::PairwiseRegular,
        Axiom::PairwiseNormal,
        Axiom::Compact,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Axiom::T0 => "T0",
            Axiom::R0 => "R0",
            Axiom::T1 => "T1",
            Axiom::R1 => "R1",
            Axiom::Hausdorff => "Hausdorff",
            Axiom::Regular => "regular",
            Axiom::T3 => "T3",
            Axiom::Normal => "normal",
            Axiom::T4 => "T4",
            Axiom::JoinT0 => "joinT0",
            Axiom::JoinT1 => "joinT1",
            Axiom::CwT0 => "cwT0",
            Axiom::CwT1 => "cwT1",
            Axiom::CwR0 => "cwR0",
            Axiom::CwR1 => "cwR1",
            Axiom::CwRegular => "cwRegular",
            Axiom::CwNormal => "cwNormal",
            Axiom::PairwiseHausdorff => "pairwiseHausdorff",
            Axiom::PairwiseHausdorffWeak => "pairwiseHausdorffWeak",
            Axiom::OrderSeparated => "orderSeparated",
            Axiom::PairwiseRegular => "pairwiseRegular",
            Axiom::PairwiseNormal => "pairwiseNormal",
            Axiom::Compact => "compact",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Axiom> {
        Axiom::ALL
            .iter()
            .copied()
            .find(|a| a.key() == s)
            .ok_or_else(|| Error::UnknownAxiom(s.to_string()))
    }
}

/// Decides one axiom from its defining condition.
pub fn check(space: &BSpace, axiom: Axiom) -> bool {
    Decider::new(space).decide(axiom)
}

/// Caches the specialization B-order across axioms of one space.
struct Decider<'a> {
    space: &'a BSpace,
    omega: BOrder,
}

impl<'a> Decider<'a> {
    fn new(space: &'a BSpace) -> Self {
        Decider {
            space,
            omega: BOrder::specialization(space),
        }
    }

    fn decide(&self, axiom: Axiom) -> bool {
        let s = self.space;
        let both = |c: Classical| classical_axiom(&s.tt, c) && classical_axiom(&s.ff, c);
        match axiom {
            Axiom::T0 => self.omega.is_separated(),
            Axiom::R0 => self.omega.is_symmetric(),
            Axiom::T1 => self.decide(Axiom::T0) && self.decide(Axiom::R0),
            Axiom::R1 => r1_by_product(s, &self.omega),
            Axiom::Hausdorff => self.decide(Axiom::T0) && self.decide(Axiom::R1),
            Axiom::Regular => regular_literal(s),
            Axiom::T3 => self.decide(Axiom::T0) && self.decide(Axiom::Regular),
            Axiom::Normal => normal_literal(s),
            Axiom::T4 => self.decide(Axiom::T1) && self.decide(Axiom::Normal),
            Axiom::JoinT0 => classical_axiom(&s.tt.join(&s.ff), Classical::T0),
            Axiom::JoinT1 => classical_axiom(&s.tt.join(&s.ff), Classical::T1),
            Axiom::CwT0 => both(Classical::T0),
            Axiom::CwT1 => both(Classical::T1),
            Axiom::CwR0 => both(Classical::R0),
            Axiom::CwR1 => both(Classical::R1),
            Axiom::CwRegular => both(Classical::Regular),
            Axiom::CwNormal => both(Classical::Normal),
            Axiom::PairwiseHausdorff => pairwise_hausdorff(s),
            Axiom::PairwiseHausdorffWeak => pairwise_hausdorff_weak(s),
            Axiom::OrderSeparated => order_separated(s),
            Axiom::PairwiseRegular => pairwise_regular(s),
            Axiom::PairwiseNormal => pairwise_normal(s),
            Axiom::Compact => hm::is_compact(s, &BSet::constant(s.len(), BVal::Top)),
        }
    }
}

/// `Ω(τ)` is a closed B-set of `S × S`.
fn r1_by_product(s: &BSpace, omega: &BOrder) -> bool {
    match s.product(s) {
        Ok(sq) => sq.is_closed_raw(&omega.as_bset()),
        Err(_) => cw_r1(s),
    }
}

fn cw_r1(s: &BSpace) -> bool {
    classical_axiom(&s.tt, Classical::R1) && classical_axiom(&s.ff, Classical::R1)
}

/// `Ω ∧ Ω^op` is a closed B-set of `S × S`.
pub fn r1_by_symmetric_part(s: &BSpace) -> bool {
    let omega = BOrder::specialization(s);
    let sym = omega.meet(&omega.opposite()).expect("same carrier");
    match s.product(s) {
        Ok(sq) => sq.is_closed_raw(&sym.as_bset()),
        Err(_) => cw_r1(s),
    }
}

/// Every open `λ` is the join of the opens whose closure lies below `λ`.
fn regular_literal(s: &BSpace) -> bool {
    let opens = s.bopens();
    let bottom = BSet::constant(s.len(), BVal::Bot);
    opens.iter().all(|l| {
        let inner = opens
            .iter()
            .filter(|m| s.closure_raw(m).leq(l))
            .fold(bottom, |acc, m| acc | *m);
        inner == *l
    })
}

/// For open `λ` and closed `μ ≤ λ` there is an open `ν` with
/// `μ ≤ ν ≤ cl ν ≤ λ`.
fn normal_literal(s: &BSpace) -> bool {
    let opens = s.bopens();
    let closed = s.bclosed();
    let closures: Vec<BSet> = opens.iter().map(|v| s.closure_raw(v)).collect();
    opens.iter().all(|l| {
        closed.iter().filter(|m| m.leq(l)).all(|m| {
            opens
                .iter()
                .zip(&closures)
                .any(|(v, cv)| m.leq(v) && cv.leq(l))
        })
    })
}

/// `λ(x) ≤ sub(cl 1_x, λ)` for every open `λ` and point `x`.
pub fn r0_by_open_sets(s: &BSpace) -> bool {
    let closures: Vec<BSet> = (0..s.len()).map(|x| s.point_closure(x)).collect();
    s.bopens().iter().all(|l| {
        (0..s.len()).all(|x| l.value(x).leq(closures[x].sub_degree(l)))
    })
}

/// For every ordered pair of distinct points `(x, y)`, some tt-open around
/// `x` misses some ff-open around `y`.
fn pairwise_hausdorff(s: &BSpace) -> bool {
    let n = s.len();
    (0..n).all(|x| (0..n).all(|y| x == y || !s.tt.nbhd(x).meets(s.ff.nbhd(y))))
}

/// For every unordered pair, one of the two orders separates.
fn pairwise_hausdorff_weak(s: &BSpace) -> bool {
    let n = s.len();
    (0..n).all(|x| {
        (0..x).all(|y| {
            !s.tt.nbhd(x).meets(s.ff.nbhd(y)) || !s.tt.nbhd(y).meets(s.ff.nbhd(x))
        })
    })
}

/// The diagonal is closed in `(X, τ[tt]) × (X, τ[ff])`.
pub fn pairwise_hausdorff_by_diagonal(s: &BSpace) -> bool {
    let n = s.len();
    match s.tt.product(&s.ff) {
        Ok(p) => p.is_closed((0..n).map(|x| x * n + x).collect()),
        Err(_) => pairwise_hausdorff(s),
    }
}

fn order_separated(s: &BSpace) -> bool {
    let n = s.len();
    let (tt, ff) = (s.tt.specialization(), s.ff.specialization());
    let le = |x: usize, y: usize| tt.leq(x, y) && ff.leq(y, x);
    let antisymmetric = (0..n).all(|x| (0..x).all(|y| !(le(x, y) && le(y, x))));
    antisymmetric
        && (0..n).all(|x| {
            (0..n).all(|y| le(x, y) || !s.tt.nbhd(x).meets(s.ff.nbhd(y)))
        })
}

/// `a` is regular with respect to `b`.
fn regular_wrt(a: &FinTopology, b: &FinTopology) -> bool {
    a.closed_sets().iter().all(|&f| {
        let hull = b.open_hull(f);
        (0..a.len())
            .filter(|&x| !f.contains(x))
            .all(|x| !a.nbhd(x).meets(hull))
    })
}

fn pairwise_regular(s: &BSpace) -> bool {
    regular_wrt(&s.tt, &s.ff) && regular_wrt(&s.ff, &s.tt)
}

fn pairwise_normal(s: &BSpace) -> bool {
    let ct = s.tt.closed_sets();
    let cf = s.ff.closed_sets();
    ct.iter().all(|&f| {
        cf.iter()
            .filter(|&&g| !f.meets(g))
            .all(|&g| !s.tt.open_hull(g).meets(s.ff.open_hull(f)))
    })
}

/// Truth values of every [`Axiom`] for one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub name: String,
    values: [bool; 23],
}

impl AxiomReport {
    pub fn of(space: &BSpace) -> AxiomReport {
        let d = Decider::new(space);
        let mut values = [false; 23];
        for a in Axiom::ALL {
            values[a.index()] = d.decide(a);
        }
        AxiomReport {
            name: space.name.clone(),
            values,
        }
    }

    pub fn from_values(name: impl Into<String>, values: [bool; 23]) -> AxiomReport {
        AxiomReport {
            name: name.into(),
            values,
        }
    }

    pub fn get(&self, axiom: Axiom) -> bool {
        self.values[axiom.index()]
    }

    pub fn set(&mut self, axiom: Axiom, value: bool) {
        self.values[axiom.index()] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Axiom, bool)> + '_ {
        Axiom::ALL.iter().map(|&a| (a, self.get(a)))
    }
}

/// `x ~ y` iff every open B-set takes the same value at `x` and `y`.
/// Returns the quotient and the class of each point.
pub fn t0_reflection(space: &BSpace) -> (BSpace, Vec<usize>) {
    let (class_of, k) = partition_by_key(space.len(), |x| (space.tt.nbhd(x), space.ff.nbhd(x)));
    let q = space
        .quotient(&class_of, k)
        .expect("partition built from the space");
    (q, class_of)
}

/// An implication or equivalence from the diagram that failed on a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub space: String,
    pub rule: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.space, self.rule)
    }
}

pub const IMPLICATIONS: [(Axiom, Axiom); 11] = [
    (Axiom::T4, Axiom::T3),
    (Axiom::T3, Axiom::Hausdorff),
    (Axiom::Hausdorff, Axiom::T1),
    (Axiom::T1, Axiom::T0),
    (Axiom::T4, Axiom::Normal),
    (Axiom::T3, Axiom::Regular),
    (Axiom::Hausdorff, Axiom::R1),
    (Axiom::T1, Axiom::R0),
    (Axiom::Regular, Axiom::R1),
    (Axiom::R1, Axiom::R0),
    (Axiom::T1, Axiom::JoinT1),
];

pub const EQUIVALENCES: [(Axiom, Axiom); 5] = [
    (Axiom::T0, Axiom::JoinT0),
    (Axiom::R0, Axiom::CwR0),
    (Axiom::R1, Axiom::CwR1),
    (Axiom::Regular, Axiom::CwRegular),
    (Axiom::Normal, Axiom::CwNormal),
];

pub fn audit_report(report: &AxiomReport) -> Vec<Violation> {
    let mut out = Vec::new();
    for (a, b) in IMPLICATIONS {
        if report.get(a) && !report.get(b) {
            out.push(Violation {
                space: report.name.clone(),
                rule: format!("{a} => {b}"),
            });
        }
    }
    for (a, b) in EQUIVALENCES {
        if report.get(a) != report.get(b) {
            out.push(Violation {
                space: report.name.clone(),
                rule: format!("{a} <=> {b}"),
            });
        }
    }
    out
}

pub fn audit_implications<'a, I: IntoIterator<Item = &'a AxiomReport>>(reports: I) -> Vec<Violation> {
    reports.into_iter().flat_map(audit_report).collect()
}
