//! Irreducible closed B-sets, B-points, d-points, sobriety and sobrification.

use crate::bset::{BSet, Carrier};
use crate::bval::BVal;
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::separation::{classical_axiom, Classical};
use crate::space::{find_homeomorphism, BSpace};
use crate::topology::FinTopology;

/// Largest B-topology the brute-force B-point search will accept.
pub const BRUTE_FORCE_BOUND: usize = 64;

/// Closed `γ` with `sub(γ, b_X) = b` for every `b` and
/// `sub(γ, μ1 ∨ μ2) = sub(γ, μ1) ∨ sub(γ, μ2)` for closed `μ1, μ2`,
/// found by testing every closed B-set.
pub fn irreducible_closed_literal(space: &BSpace) -> Vec<BSet> {
    let n = space.len();
    let closed = space.bclosed();
    let mut out: Vec<BSet> = closed
        .iter()
        .copied()
        .filter(|g| {
            BVal::ALL
                .iter()
                .all(|&b| g.sub_degree(&BSet::constant(n, b)) == b)
                && closed.iter().all(|m1| {
                    closed.iter().all(|m2| {
                        g.sub_degree(&(*m1 | *m2)) == g.sub_degree(m1).join(g.sub_degree(m2))
                    })
                })
        })
        .collect();
    out.sort();
    out
}

/// `tt_K ∨ ff_K'` over pairs of classical irreducible closed sets.
pub fn irreducible_closed_pairs(space: &BSpace) -> Vec<BSet> {
    let n = space.len();
    let mut out: Vec<BSet> = space
        .tt
        .irreducible_closed_sets()
        .iter()
        .flat_map(|&k| {
            space
                .ff
                .irreducible_closed_sets()
                .into_iter()
                .map(move |k2| BSet::tt_ff(n, k, k2))
        })
        .collect();
    out.sort();
    out
}

/// The irreducible closed B-sets, sorted by cuts.
pub fn irreducible_closed_bsets(space: &BSpace) -> Vec<BSet> {
    irreducible_closed_pairs(space)
}

/// Nonempty opens `a` with `a ⊆ b ∪ c ⇒ a ⊆ b or a ⊆ c`; each is the least
/// member of a completely prime filter.
pub fn join_prime_opens(t: &FinTopology) -> Vec<PointSet> {
    let opens = t.opens();
    opens
        .iter()
        .copied()
        .filter(|&a| {
            !a.is_empty()
                && opens.iter().all(|&b| {
                    opens
                        .iter()
                        .all(|&c| !a.is_subset(b | c) || a.is_subset(b) || a.is_subset(c))
                })
        })
        .collect()
}

/// A frame hom from the open B-sets to `B` fixing the constants, stored as
/// the least members of its two completely prime filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BPoint {
    pub least_tt: PointSet,
    pub least_ff: PointSet,
}

impl BPoint {
    /// `p(λ) = (tt if a_tt ⊆ λ[tt]) ∨ (ff if a_ff ⊆ λ[ff])`.
    pub fn eval(&self, l: &BSet) -> BVal {
        BVal::from_cuts(self.least_tt.is_subset(l.tcut()), self.least_ff.is_subset(l.fcut()))
    }

    /// The irreducible closed B-set of the point: each cut is the
    /// complement of the union of the opens sent below that side.
    pub fn closed_set(&self, space: &BSpace) -> BSet {
        let n = space.len();
        let miss = |t: &FinTopology, least: PointSet| {
            t.opens()
                .iter()
                .filter(|&&u| !least.is_subset(u))
                .fold(PointSet::EMPTY, |acc, &u| acc | u)
                .complement(n)
        };
        BSet::tt_ff(n, miss(&space.tt, self.least_tt), miss(&space.ff, self.least_ff))
    }

    /// Inverse of [`BPoint::closed_set`]: the filters of opens meeting the cuts.
    pub fn from_closed_set(space: &BSpace, gamma: &BSet) -> BPoint {
        let least = |t: &FinTopology, k: PointSet| {
            t.opens()
                .iter()
                .filter(|&&u| u.meets(k))
                .fold(t.full(), |acc, &u| acc & u)
        };
        BPoint {
            least_tt: least(&space.tt, gamma.tcut()),
            least_ff: least(&space.ff, gamma.fcut()),
        }
    }

    pub fn values(&self, opens: &[BSet]) -> Vec<BVal> {
        opens.iter().map(|l| self.eval(l)).collect()
    }
}

/// Every B-point, from pairs of completely prime filters.
pub fn b_points(space: &BSpace) -> Vec<BPoint> {
    let mut out: Vec<BPoint> = join_prime_opens(&space.tt)
        .iter()
        .flat_map(|&a| {
            join_prime_opens(&space.ff)
                .into_iter()
                .map(move |b| BPoint { least_tt: a, least_ff: b })
        })
        .collect();
    out.sort();
    out
}

/// `[x]`: evaluation at `x`.
pub fn point_embedding(space: &BSpace, x: usize) -> BPoint {
    BPoint {
        least_tt: space.tt.nbhd(x),
        least_ff: space.ff.nbhd(x),
    }
}

/// Every frame hom from the open B-sets to `B` with `p(tt_X) = tt` and
/// `p(ff_X) = ff`, found by backtracking over value tables. Results are
/// value vectors indexed like `space.bopens()`, sorted.
pub fn b_points_brute_force(space: &BSpace) -> Result<Vec<Vec<BVal>>> {
    b_points_brute_force_within(space, BRUTE_FORCE_BOUND)
}

/// [`b_points_brute_force`] with a caller-chosen bound on the number of
/// open B-sets.
pub fn b_points_brute_force_within(space: &BSpace, bound: usize) -> Result<Vec<Vec<BVal>>> {
    let size = space.btopology_size();
    if size > bound {
        return Err(Error::BoundExceeded {
            what: "open B-sets for brute-force point search",
            size,
            bound,
        });
    }
    let n = space.len();
    let opens = space.bopens();
    let k = opens.len();
    let index = |l: &BSet| opens.iter().position(|m| m == l).expect("closed under ∧, ∨");
    let meet: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| index(&(opens[i] & opens[j]))).collect())
        .collect();
    let join: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| index(&(opens[i] | opens[j]))).collect())
        .collect();
    let mut fixed: Vec<Option<BVal>> = vec![None; k];
    for b in BVal::ALL {
        fixed[index(&BSet::constant(n, b))] = Some(b);
    }
    let mut assign: Vec<Option<BVal>> = vec![None; k];
    let mut out = Vec::new();
    search_homs(0, &fixed, &meet, &join, &mut assign, &mut out);
    out.sort();
    Ok(out)
}

fn search_homs(
    pos: usize,
    fixed: &[Option<BVal>],
    meet: &[Vec<usize>],
    join: &[Vec<usize>],
    assign: &mut Vec<Option<BVal>>,
    out: &mut Vec<Vec<BVal>>,
) {
    let k = assign.len();
    if pos == k {
        out.push(assign.iter().map(|v| v.unwrap()).collect());
        return;
    }
    let choices: Vec<BVal> = match fixed[pos] {
        Some(b) => vec![b],
        None => BVal::ALL.to_vec(),
    };
    for v in choices {
        assign[pos] = Some(v);
        if consistent(pos, meet, join, assign) {
            search_homs(pos + 1, fixed, meet, join, assign, out);
        }
    }
    assign[pos] = None;
}

/// Checks every meet/join equation whose three terms are assigned and
/// which involves position `pos`.
fn consistent(pos: usize, meet: &[Vec<usize>], join: &[Vec<usize>], assign: &[Option<BVal>]) -> bool {
    for i in 0..=pos {
        for j in 0..=pos {
            if i != pos && j != pos && meet[i][j] != pos && join[i][j] != pos {
                continue;
            }
            let (Some(a), Some(b)) = (assign[i], assign[j]) else { continue };
            if let Some(m) = assign[meet[i][j]] {
                if m != a.meet(b) {
                    return false;
                }
            }
            if let Some(m) = assign[join[i][j]] {
                if m != a.join(b) {
                    return false;
                }
            }
        }
    }
    true
}

fn representatives(space: &BSpace, least_tt: PointSet, least_ff: PointSet) -> Vec<usize> {
    (0..space.len())
        .filter(|&x| space.tt.nbhd(x) == least_tt && space.ff.nbhd(x) == least_ff)
        .collect()
}

/// A pair of irreducible closed sets not represented by exactly one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub k_tt: PointSet,
    pub k_ff: PointSet,
    pub representatives: Vec<usize>,
}

impl Witness {
    pub fn render(&self, carrier: &Carrier) -> String {
        format!("({}, {})", carrier.render_set(self.k_tt), carrier.render_set(self.k_ff))
    }
}

/// Every B-point is `[x]` for exactly one `x`.
pub fn is_b_sober(space: &BSpace) -> bool {
    b_points(space)
        .iter()
        .all(|p| representatives(space, p.least_tt, p.least_ff).len() == 1)
}

/// Every pair of component irreducible closed sets equals
/// `(cl_tt{x}, cl_ff{x})` for exactly one `x`; returns the first pair that
/// does not.
pub fn b_sober_witness(space: &BSpace) -> Option<Witness> {
    let single = |t: &FinTopology, x: usize| t.closure(PointSet::singleton(x));
    for k in space.tt.irreducible_closed_sets() {
        for k2 in space.ff.irreducible_closed_sets() {
            let reps: Vec<usize> = (0..space.len())
                .filter(|&x| single(&space.tt, x) == k && single(&space.ff, x) == k2)
                .collect();
            if reps.len() != 1 {
                return Some(Witness {
                    k_tt: k,
                    k_ff: k2,
                    representatives: reps,
                });
            }
        }
    }
    None
}

/// `p` respects consistency and totality of the opens:
/// disjoint `(U, V)` never has both sides sent up, covering `(U, V)` always
/// has one side sent up.
pub fn is_d_point(space: &BSpace, p: &BPoint) -> bool {
    let full = space.tt.full();
    space.tt.opens().iter().all(|&u| {
        space.ff.opens().iter().all(|&v| {
            let (up_tt, up_ff) = (p.least_tt.is_subset(u), p.least_ff.is_subset(v));
            (u.meets(v) || !(up_tt && up_ff)) && ((u | v) != full || up_tt || up_ff)
        })
    })
}

pub fn d_points(space: &BSpace) -> Vec<BPoint> {
    b_points(space).into_iter().filter(|p| is_d_point(space, p)).collect()
}

pub fn is_d_sober(space: &BSpace) -> bool {
    d_points(space)
        .iter()
        .all(|p| representatives(space, p.least_tt, p.least_ff).len() == 1)
}

/// Conditions (a) and (b) on a pair of irreducible closed sets:
/// (a) disjoint `U, V` ⇒ `K_tt ∩ U = ∅` or `K_ff ∩ V = ∅`;
/// (b) covering `U, V` ⇒ `K_tt ∩ U ≠ ∅` or `K_ff ∩ V ≠ ∅`.
pub fn pair_passes_d_conditions(space: &BSpace, k_tt: PointSet, k_ff: PointSet) -> bool {
    let full = space.tt.full();
    space.tt.opens().iter().all(|&u| {
        space.ff.opens().iter().all(|&v| {
            let a = u.meets(v) || !k_tt.meets(u) || !k_ff.meets(v);
            let b = (u | v) != full || k_tt.meets(u) || k_ff.meets(v);
            a && b
        })
    })
}

/// d-sobriety through the pair conditions.
pub fn d_sober_witness(space: &BSpace) -> Option<Witness> {
    let single = |t: &FinTopology, x: usize| t.closure(PointSet::singleton(x));
    for k in space.tt.irreducible_closed_sets() {
        for k2 in space.ff.irreducible_closed_sets() {
            if !pair_passes_d_conditions(space, k, k2) {
                continue;
            }
            let reps: Vec<usize> = (0..space.len())
                .filter(|&x| single(&space.tt, x) == k && single(&space.ff, x) == k2)
                .collect();
            if reps.len() != 1 {
                return Some(Witness {
                    k_tt: k,
                    k_ff: k2,
                    representatives: reps,
                });
            }
        }
    }
    None
}

/// Classical sobriety of the join topology.
pub fn is_join_sober(space: &BSpace) -> bool {
    classical_axiom(&space.tt.join(&space.ff), Classical::Sober)
}

/// Join `T0` and both component `T0`-reflections sober.
pub fn component_criterion(space: &BSpace) -> bool {
    let reflection_sober = |t: &FinTopology| {
        let (classes, k) = t.kolmogorov_classes();
        let q = t.quotient(&classes, k).expect("Kolmogorov partition");
        classical_axiom(&q, Classical::Sober)
    };
    classical_axiom(&space.tt.join(&space.ff), Classical::T0)
        && reflection_sober(&space.tt)
        && reflection_sober(&space.ff)
}

/// The two sides of the comparison between the component criterion and
/// B-sobriety decided from its definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub criterion: bool,
    pub b_sober: bool,
    pub witness: Option<Witness>,
}

impl Discrepancy {
    pub fn disagrees(&self) -> bool {
        self.criterion != self.b_sober
    }
}

pub fn discrepancy(space: &BSpace) -> Discrepancy {
    Discrepancy {
        criterion: component_criterion(space),
        b_sober: is_b_sober(space),
        witness: b_sober_witness(space),
    }
}

/// The B-sobrification together with the unit map.
#[derive(Clone, Debug)]
pub struct Sobrification {
    pub space: BSpace,
    /// Irreducible closed B-set of each new point.
    pub points: Vec<BSet>,
    /// `x ↦ cl(1_x)`, as an index into `points`.
    pub unit: Vec<usize>,
}

/// Points are the irreducible closed B-sets in cut order, named `g0, g1, ...`;
/// the opens are `λ̂(γ) = ¬sub(γ, ¬λ)` for open `λ`.
pub fn sobrify(space: &BSpace) -> Sobrification {
    let points = irreducible_closed_bsets(space);
    let m = points.len();
    let hats: Vec<BSet> = space
        .bopens()
        .iter()
        .map(|l| {
            let vals: Vec<BVal> = points.iter().map(|g| g.sub_degree(&l.neg()).neg()).collect();
            BSet::from_values(&vals)
        })
        .collect();
    let mut ot: Vec<PointSet> = hats.iter().map(|h| h.tcut()).collect();
    let mut of: Vec<PointSet> = hats.iter().map(|h| h.fcut()).collect();
    ot.sort();
    ot.dedup();
    of.sort();
    of.dedup();
    let tt = FinTopology::from_opens(m, &ot).expect("cuts of the hatted opens form a topology");
    let ff = FinTopology::from_opens(m, &of).expect("cuts of the hatted opens form a topology");
    let unit = (0..space.len())
        .map(|x| {
            let c = space.point_closure(x);
            points.iter().position(|g| *g == c).expect("point closures are irreducible")
        })
        .collect();
    let out = BSpace::new(format!("{}^", space.name), Carrier::numbered("g", m), tt, ff)
        .expect("same size");
    Sobrification {
        space: out,
        points,
        unit,
    }
}

/// Conditions (a) and (b) on an irreducible closed B-set `γ`:
/// (a) closed `μ` nowhere `0` ⇒ `tt ∧ γ ≤ μ` or `ff ∧ γ ≤ μ`;
/// (b) closed `μ` nowhere `1` ⇒ `γ ≰ μ`.
pub fn passes_d_conditions(space: &BSpace, gamma: &BSet) -> bool {
    let n = space.len();
    space.bclosed().iter().all(|mu| {
        let nowhere_bot = (0..n).all(|z| mu.value(z) != BVal::Bot);
        let nowhere_top = (0..n).all(|z| mu.value(z) != BVal::Top);
        let a = !nowhere_bot || gamma.scalar_meet(BVal::Tt).leq(mu) || gamma.scalar_meet(BVal::Ff).leq(mu);
        let b = !nowhere_top || !gamma.leq(mu);
        a && b
    })
}

/// The subspace of the B-sobrification on the points passing
/// [`passes_d_conditions`], with the unit restricted to it.
pub fn d_sobrify(space: &BSpace) -> Sobrification {
    let full = sobrify(space);
    let keep: Vec<usize> = (0..full.points.len())
        .filter(|&i| passes_d_conditions(space, &full.points[i]))
        .collect();
    let sub = full
        .space
        .subspace(keep.iter().copied().collect())
        .expect("subset of the carrier");
    let m = keep.len();
    let sub = sub
        .with_carrier(Carrier::numbered("g", m))
        .expect("same size")
        .with_name(format!("{}^d", space.name));
    let unit = full
        .unit
        .iter()
        .map(|&g| keep.iter().position(|&k| k == g).expect("point closures pass (a) and (b)"))
        .collect();
    Sobrification {
        space: sub,
        points: keep.iter().map(|&i| full.points[i]).collect(),
        unit,
    }
}

impl Sobrification {
    pub fn unit_is_bijective(&self) -> bool {
        let mut seen = vec![false; self.points.len()];
        for &g in &self.unit {
            if seen[g] {
                return false;
            }
            seen[g] = true;
        }
        seen.iter().all(|&s| s)
    }

    /// The unit is a bijection and opens correspond in both directions.
    pub fn unit_is_homeomorphism(&self, source: &BSpace) -> bool {
        self.unit_is_bijective()
            && crate::space::ContinuousMap::new(source, &self.space, self.unit.clone())
                .map(|f| f.is_homeomorphism())
                .unwrap_or(false)
    }
}

/// `sobrify(sobrify(S))` is homeomorphic to `sobrify(S)`.
pub fn sobrify_is_idempotent(space: &BSpace) -> Result<bool> {
    let once = sobrify(space).space;
    let twice = sobrify(&once).space;
    Ok(find_homeomorphism(&once, &twice, 8)?.is_some())
}
