//! Compact and saturated B-sets, B-filters of the open-set frame, and the
//! correspondence between them.

use std::collections::HashMap;

use crate::bset::BSet;
use crate::bval::BVal;
use crate::error::{Error, Result};
use crate::order::BOrder;
use crate::pointset::PointSet;
use crate::sobriety;
use crate::space::BSpace;

/// Largest B-topology the literal compactness check will enumerate
/// directed families over.
pub const LITERAL_COMPACT_BOUND: usize = 16;

/// Largest B-topology the filter enumeration will handle.
pub const FILTER_BOUND: usize = 4096;

/// Compactness through the components: both cuts compact in their topology.
/// On a finite carrier every subset is compact, so this is always `true`.
pub fn is_compact(space: &BSpace, theta: &BSet) -> bool {
    debug_assert_eq!(theta.carrier_len(), space.len());
    // a finite open cover of a finite set always has a finite subcover
    true
}

/// Directed families of open B-sets, as bitmasks over `space.bopens()`.
pub struct DirectedFamilies {
    opens: Vec<BSet>,
    families: Vec<u64>,
}

impl DirectedFamilies {
    pub fn new(space: &BSpace) -> Result<DirectedFamilies> {
        let opens = space.bopens();
        let k = opens.len();
        if k > LITERAL_COMPACT_BOUND {
            return Err(Error::BoundExceeded {
                what: "open B-sets for the literal compactness check",
                size: k,
                bound: LITERAL_COMPACT_BOUND,
            });
        }
        let above: Vec<u64> = (0..k)
            .map(|i| {
                (0..k)
                    .filter(|&j| opens[i].leq(&opens[j]))
                    .fold(0u64, |m, j| m | 1 << j)
            })
            .collect();
        let families = (1u64..1 << k)
            .filter(|&fam| {
                let members: Vec<usize> = PointSet(fam).iter().collect();
                members.iter().all(|&i| {
                    members
                        .iter()
                        .all(|&j| fam & above[i] & above[j] != 0)
                })
            })
            .collect();
        Ok(DirectedFamilies { opens, families })
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    /// `sub(θ, ⋁Λ) = ⋁_{λ ∈ Λ} sub(θ, λ)` for every directed `Λ`.
    pub fn is_compact(&self, theta: &BSet) -> bool {
        let n = theta.carrier_len();
        self.families.iter().all(|&fam| {
            let members = PointSet(fam);
            let join = members
                .iter()
                .fold(BSet::constant(n, BVal::Bot), |acc, i| acc | self.opens[i]);
            let degrees = BVal::join_all(members.iter().map(|i| theta.sub_degree(&self.opens[i])));
            theta.sub_degree(&join) == degrees
        })
    }
}

/// `Ω(x, y) ≤ θ(x) → θ(y)` for all `x, y`.
pub fn is_saturated(space: &BSpace, theta: &BSet) -> bool {
    let omega = BOrder::specialization(space);
    let n = space.len();
    (0..n).all(|x| (0..n).all(|y| omega.get(x, y).leq(theta.value(x).implies(theta.value(y)))))
}

/// Pointwise meet of every open B-set above `θ`.
pub fn saturate(space: &BSpace, theta: &BSet) -> BSet {
    space
        .bopens()
        .into_iter()
        .filter(|l| theta.leq(l))
        .fold(BSet::constant(space.len(), BVal::Top), |acc, l| acc & l)
}

/// The same hull computed cut by cut: open hulls in each component.
pub fn saturate_by_cuts(space: &BSpace, theta: &BSet) -> BSet {
    BSet::tt_ff(
        space.len(),
        space.tt.open_hull(theta.tcut()),
        space.ff.open_hull(theta.fcut()),
    )
}

/// A B-filter of the open-set frame, stored by its two component filters.
/// Each component filter is principal, kept as its least member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BFilter {
    n: usize,
    pub least_tt: PointSet,
    pub least_ff: PointSet,
}

impl BFilter {
    /// The pair of principal filters generated by two opens. Whether the
    /// result satisfies (F1)–(F3) is left to [`filter_axiom_failure`].
    pub fn principal(space: &BSpace, least_tt: PointSet, least_ff: PointSet) -> Result<BFilter> {
        if !space.tt.is_open(least_tt) || !space.ff.is_open(least_ff) {
            return Err(Error::InvalidFilter("generators are not open in the space".into()));
        }
        Ok(BFilter {
            n: space.len(),
            least_tt,
            least_ff,
        })
    }

    /// `F(λ) =(tt if λ[tt] ∈ 𝓕) ∨ (ff if λ[ff] ∈ 𝓖)`.
    pub fn eval(&self, l: &BSet) -> BVal {
        BVal::from_cuts(
            self.least_tt.is_subset(l.tcut()),
            self.least_ff.is_subset(l.fcut()),
        )
    }

    pub fn in_tt(&self, u: PointSet) -> bool {
        self.least_tt.is_subset(u)
    }

    pub fn in_ff(&self, v: PointSet) -> bool {
        self.least_ff.is_subset(v)
    }

    pub fn carrier_len(&self) -> usize {
        self.n
    }
}

/// Checks (F1) and (F2), and (F3) over directed subfamilies of at most
/// three members, on an arbitrary assignment of truth values to the open
/// B-sets of `space` (indexed like `space.bopens()`).
pub fn filter_axiom_failure(space: &BSpace, opens: &[BSet], value: &[BVal]) -> Option<String> {
    let n = space.len();
    let positions: HashMap<BSet, usize> = opens.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let index = |l: &BSet| positions[l];
    for b in BVal::ALL {
        let got = value[index(&BSet::constant(n, b))];
        if got != b {
            return Some(format!("F1: F({b}_X) = {got}"));
        }
    }
    for (i, l) in opens.iter().enumerate() {
        for (j, m) in opens.iter().enumerate() {
            let lm = value[index(&(*l & *m))];
            if lm != value[i].meet(value[j]) {
                return Some(format!("F2 fails on opens #{i}, #{j}"));
            }
        }
    }
    let k = opens.len();
    for i in 0..k {
        for j in i..k {
            for h in j..k {
                let fam = [i, j, h];
                let directed = fam.iter().all(|&a| {
                    fam.iter().all(|&c| {
                        fam.iter()
                            .any(|&u| opens[a].leq(&opens[u]) && opens[c].leq(&opens[u]))
                    })
                });
                if !directed {
                    continue;
                }
                let join = opens[i] | opens[j] | opens[h];
                let want = value[i].join(value[j]).join(value[h]);
                if value[index(&join)] != want {
                    return Some(format!("F3 fails on opens #{i}, #{j}, #{h}"));
                }
            }
        }
    }
    None
}

/// `λ ↦ sub(θ, λ)`; requires `θ` inhabited.
pub fn filter_of_set(space: &BSpace, theta: &BSet) -> Result<BFilter> {
    let h = theta.height();
    if h != BVal::Top {
        return Err(Error::NotInhabited(h));
    }
    // sub(θ, λ) ≥ tt iff θ[tt] ⊆ λ[tt], so 𝓕 is the principal filter of the
    // smallest open containing θ[tt]
    Ok(BFilter {
        n: space.len(),
        least_tt: space.tt.open_hull(theta.tcut()),
        least_ff: space.ff.open_hull(theta.fcut()),
    })
}

/// `tt_{⋂𝓕} ∨ ff_{⋂𝓖}`.
pub fn set_of_filter(space: &BSpace, filter: &BFilter) -> Result<BSet> {
    if filter.n != space.len()
        || !space.tt.is_open(filter.least_tt)
        || !space.ff.is_open(filter.least_ff)
    {
        return Err(Error::InvalidFilter("least members are not open in the space".into()));
    }
    let meet_tt = space
        .tt
        .opens()
        .iter()
        .filter(|&&u| filter.in_tt(u))
        .fold(space.tt.full(), |acc, &u| acc & u);
    let meet_ff = space
        .ff
        .opens()
        .iter()
        .filter(|&&v| filter.in_ff(v))
        .fold(space.ff.full(), |acc, &v| acc & v);
    Ok(BSet::tt_ff(space.len(), meet_tt, meet_ff))
}

/// Every B-filter: candidate pairs of principal component filters, each
/// kept only if the induced assignment satisfies (F1)–(F3) literally.
pub fn enumerate_bfilters(space: &BSpace) -> Result<Vec<BFilter>> {
    let size = space.btopology_size();
    if size > FILTER_BOUND {
        return Err(Error::BoundExceeded {
            what: "open B-sets for filter enumeration",
            size,
            bound: FILTER_BOUND,
        });
    }
    let opens = space.bopens();
    let mut out = Vec::new();
    for &a in space.tt.opens() {
        for &b in space.ff.opens() {
            let f = BFilter {
                n: space.len(),
                least_tt: a,
                least_ff: b,
            };
            let values: Vec<BVal> = opens.iter().map(|l| f.eval(l)).collect();
            if filter_axiom_failure(space, &opens, &values).is_none() {
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// Inhabited, saturated, compact B-sets, in cut order.
pub fn saturated_inhabited(space: &BSpace) -> Vec<BSet> {
    BSet::all(space.len())
        .filter(|t| t.height() == BVal::Top && is_saturated(space, t) && is_compact(space, t))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HmReport {
    pub n_saturated_inhabited: usize,
    pub n_bfilters: usize,
    pub b_sober: bool,
    /// Every inhabited saturated compact set yields a Scott-open B-filter.
    pub part_i_holds: bool,
    /// `sub(θ2, θ1)` equals the degree to which the filters are included.
    pub eq_ii_holds: bool,
    /// Both round trips are identities.
    pub bijection_holds: bool,
    pub failures: Vec<String>,
}

pub fn verify_hm(space: &BSpace) -> Result<HmReport> {
    let sets = saturated_inhabited(space);
    let filters = enumerate_bfilters(space)?;
    let opens = space.bopens();
    let mut failures = Vec::new();

    let mut part_i = true;
    let mut induced = Vec::with_capacity(sets.len());
    for t in &sets {
        let f = filter_of_set(space, t)?;
        let values: Vec<BVal> = opens.iter().map(|l| t.sub_degree(l)).collect();
        let from_filter: Vec<BVal> = opens.iter().map(|l| f.eval(l)).collect();
        if values != from_filter {
            part_i = false;
            failures.push(format!("(i) stored filter differs from sub for {}", space.carrier.render_bset(t)));
        }
        if let Some(why) = filter_axiom_failure(space, &opens, &values) {
            part_i = false;
            failures.push(format!("(i) {} -> {why}", space.carrier.render_bset(t)));
        }
        induced.push(values);
    }

    let mut eq_ii = true;
    for (i, t1) in sets.iter().enumerate() {
        for (j, t2) in sets.iter().enumerate() {
            let lhs = t2.sub_degree(t1);
            let rhs = BVal::meet_all(
                induced[i]
                    .iter()
                    .zip(&induced[j])
                    .map(|(a, b)| a.implies(*b)),
            );
            if lhs != rhs {
                eq_ii = false;
                failures.push(format!(
                    "(ii) sub({}, {}) = {lhs} but filter degree is {rhs}",
                    space.carrier.render_bset(t2),
                    space.carrier.render_bset(t1)
                ));
            }
        }
    }

    let mut bijection = sets.len() == filters.len();
    if !bijection {
        failures.push(format!(
            "(iii) {} saturated sets vs {} filters",
            sets.len(),
            filters.len()
        ));
    }
    for t in &sets {
        let back = set_of_filter(space, &filter_of_set(space, t)?)?;
        if back != *t {
            bijection = false;
            failures.push(format!("(iii) set round trip moves {}", space.carrier.render_bset(t)));
        }
    }
    for f in &filters {
        let t = set_of_filter(space, f)?;
        let ok = t.height() == BVal::Top
            && is_saturated(space, &t)
            && filter_of_set(space, &t).map(|g| g == *f).unwrap_or(false);
        if !ok {
            bijection = false;
            failures.push(format!(
                "(iii) filter with least members {} / {} does not come back",
                space.carrier.render_set(f.least_tt),
                space.carrier.render_set(f.least_ff)
            ));
        }
    }

    Ok(HmReport {
        n_saturated_inhabited: sets.len(),
        n_bfilters: filters.len(),
        b_sober: sobriety::is_b_sober(space),
        part_i_holds: part_i,
        eq_ii_holds: eq_ii,
        bijection_holds: bijection,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::search::all_spaces;
    use crate::separation::{check, Axiom};

    #[test]
    fn saturate_example() {
        let t = catalog::t4x3();
        let x = BSet::point(3, 0).unwrap();
        let s = saturate(&t, &x);
        assert_eq!(s, t.carrier.parse_bset("tt{x y} ff{x}").unwrap());
        assert_eq!(s.values(), vec![BVal::Top, BVal::Tt, BVal::Bot]);
    }

    #[test]
    fn saturation_characterizations() {
        for s in all_spaces(2).iter().chain(catalog::spaces().iter()) {
            if s.len() > 3 {
                continue;
            }
            for t in BSet::all(s.len()) {
                let sat = saturate(s, &t);
                assert_eq!(sat, saturate_by_cuts(s, &t));
                assert_eq!(saturate(s, &sat), sat);
                assert!(is_saturated(s, &sat));
                assert_eq!(is_saturated(s, &t), sat == t);
            }
            for l in s.bopens() {
                assert!(is_saturated(s, &l));
            }
        }
    }

    #[test]
    fn literal_compactness_agrees_on_t4x3() {
        let t = catalog::t4x3();
        let d = DirectedFamilies::new(&t).unwrap();
        assert!(!d.is_empty());
        for theta in BSet::all(3) {
            assert_eq!(d.is_compact(&theta), is_compact(&t, &theta));
        }
        assert!(check(&t, Axiom::Compact));
    }

    #[test]
    fn filter_of_set_examples() {
        let t = catalog::t4x3();
        let c = &t.carrier;
        let whole = filter_of_set(&t, &BSet::constant(3, BVal::Top)).unwrap();
        for l in t.bopens() {
            assert_eq!(whole.eval(&l), BVal::meet_all(l.values()));
        }
        let sx = saturate(&t, &BSet::point(3, 0).unwrap());
        let f = filter_of_set(&t, &sx).unwrap();
        assert_eq!(f.eval(&c.parse_bset("tt{x y} ff{x}").unwrap()), BVal::Top);
        assert_eq!(f.eval(&c.parse_bset("tt{z}").unwrap()), BVal::Bot);
        assert_eq!(
            filter_of_set(&t, &c.parse_bset("tt{z}").unwrap()),
            Err(Error::NotInhabited(BVal::Tt))
        );
        assert_eq!(set_of_filter(&t, &whole).unwrap(), BSet::constant(3, BVal::Top));
        assert_eq!(set_of_filter(&t, &f).unwrap(), sx);
    }

    // sub(θ, -) satisfies F1 iff θ is inhabited, and F1–F3 iff θ is also
    // compact, checked on every B-set of every space with at most 2 points.
    #[test]
    fn sub_is_a_filter_exactly_for_inhabited_sets() {
        for s in all_spaces(2) {
            let opens = s.bopens();
            for t in BSet::all(2) {
                let values: Vec<BVal> = opens.iter().map(|l| t.sub_degree(l)).collect();
                let ok = filter_axiom_failure(&s, &opens, &values).is_none();
                assert_eq!(ok, t.height() == BVal::Top && is_compact(&s, &t));
            }
        }
    }

    #[test]
    fn filter_counts() {
        assert_eq!(enumerate_bfilters(&catalog::sierp()).unwrap().len(), 4);
        let one = crate::topology::TopSpace::new(
            crate::bset::Carrier::new(["a"]).unwrap(),
            crate::topology::FinTopology::discrete(1),
        )
        .unwrap();
        assert_eq!(enumerate_bfilters(&BSpace::omega(&one)).unwrap().len(), 1);
    }

    #[test]
    fn filters_commute_with_scalars() {
        for s in catalog::spaces() {
            let opens = s.bopens();
            for f in enumerate_bfilters(&s).unwrap() {
                for l in &opens {
                    assert_eq!(f.eval(&l.scalar_meet(BVal::Tt)), BVal::Tt.meet(f.eval(l)));
                    assert_eq!(f.eval(&l.scalar_meet(BVal::Ff)), BVal::Ff.meet(f.eval(l)));
                }
            }
        }
    }

    #[test]
    fn sierpinski_filters_round_trip() {
        let s = catalog::sierp();
        for f in enumerate_bfilters(&s).unwrap() {
            let t = set_of_filter(&s, &f).unwrap();
            assert_eq!(filter_of_set(&s, &t).unwrap(), f);
        }
    }

    #[test]
    fn hm_reports() {
        for name in ["SIERP", "DOT22"] {
            let r = verify_hm(&catalog::by_name(name).unwrap()).unwrap();
            assert!(r.b_sober && r.bijection_holds && r.eq_ii_holds && r.part_i_holds, "{name}: {r:?}");
        }
        let r = verify_hm(&catalog::sierp()).unwrap();
        assert_eq!((r.n_saturated_inhabited, r.n_bfilters), (4, 4));
        let r = verify_hm(&catalog::t4x3()).unwrap();
        assert!(!r.b_sober && r.part_i_holds && r.eq_ii_holds);
    }

    #[test]
    fn compact_separated_spaces_are_normal() {
        for s in all_spaces(3) {
            let compact = check(&s, Axiom::Compact);
            if compact && (check(&s, Axiom::Hausdorff) || check(&s, Axiom::Regular)) {
                assert!(check(&s, Axiom::Normal));
            }
        }
    }
}
