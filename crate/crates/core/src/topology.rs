//! Finite topologies.
//!
//! A topology on a finite carrier is determined by the minimal open
//! neighbourhood `N(x)` of every point, i.e. by its specialization preorder
//! (`x ≤ y` iff `x ∈ cl{y}` iff `y ∈ N(x)`); the opens are exactly the
//! up-sets of that preorder. [`FinTopology`] stores the neighbourhoods and
//! materializes the open family lazily.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::bset::Carrier;
use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// A reflexive, transitive relation stored as principal up-sets:
/// `up[x] = { y : x ≤ y }`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Preorder {
    up: Vec<PointSet>,
}

impl Preorder {
    pub fn from_up_sets(up: Vec<PointSet>) -> Result<Preorder> {
        let n = up.len();
        for (x, &u) in up.iter().enumerate() {
            if !u.contains(x) {
                return Err(Error::InvalidTopology(format!("relation not reflexive at {x}")));
            }
            if !u.is_subset(PointSet::full(n)) {
                return Err(Error::StrayPoints(format!("{u:?}")));
            }
            for y in u.iter() {
                if !up[y].is_subset(u) {
                    return Err(Error::InvalidTopology(format!(
                        "relation not transitive at {x} ≤ {y}"
                    )));
                }
            }
        }
        Ok(Preorder { up })
    }

    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Preorder> {
        let up = (0..n)
            .map(|x| (0..n).filter(|&y| leq(x, y)).collect())
            .collect();
        Preorder::from_up_sets(up)
    }

    pub fn identity(n: usize) -> Preorder {
        Preorder {
            up: (0..n).map(PointSet::singleton).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn up(&self, x: usize) -> PointSet {
        self.up[x]
    }

    pub fn down(&self, y: usize) -> PointSet {
        (0..self.len()).filter(|&x| self.leq(x, y)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|x| self.up[x].iter().all(|y| self.leq(y, x)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.len()).all(|x| self.up[x].iter().all(|y| y == x || !self.leq(y, x)))
    }

    /// Relation as a set of pairs `(x, y)` encoded `x * n + y`.
    pub fn as_pair_set(&self) -> PointSet {
        let n = self.len();
        let mut out = PointSet::EMPTY;
        for x in 0..n {
            for y in self.up[x].iter() {
                out = out.with(x * n + y);
            }
        }
        out
    }

    /// Every preorder on `n` points, in a fixed order.
    pub fn enumerate(n: usize) -> Vec<Preorder> {
        assert!(n <= 5, "preorder enumeration limited to 5 points");
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << pairs.len() {
            let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
            for (i, &(x, y)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    up[x] = up[x].with(y);
                }
            }
            let transitive = (0..n).all(|x| up[x].iter().all(|y| up[y].is_subset(up[x])));
            if transitive {
                out.push(Preorder { up });
            }
        }
        out
    }
}

/// A topology on `{0, .., n-1}`.
pub struct FinTopology {
    n: usize,
    nbhd: Vec<PointSet>,
    opens: OnceLock<Vec<PointSet>>,
}

impl Clone for FinTopology {
    fn clone(&self) -> Self {
        FinTopology {
            n: self.n,
            nbhd: self.nbhd.clone(),
            opens: self.opens.clone(),
        }
    }
}

impl PartialEq for FinTopology {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.nbhd == other.nbhd
    }
}

impl Eq for FinTopology {}

impl Hash for FinTopology {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.nbhd.hash(state);
    }
}

impl fmt::Debug for FinTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinTopology")
            .field("n", &self.n)
            .field("opens", &self.opens())
            .finish()
    }
}

impl FinTopology {
    fn from_nbhds(n: usize, nbhd: Vec<PointSet>) -> FinTopology {
        debug_assert_eq!(nbhd.len(), n);
        FinTopology {
            n,
            nbhd,
            opens: OnceLock::new(),
        }
    }

    /// Checks a family against the topology axioms, returning the first
    /// offending witness.
    pub fn validate(n: usize, opens: &[PointSet]) -> Result<()> {
        if n > MAX_POINTS {
            return Err(Error::CarrierTooLarge(n));
        }
        let full = PointSet::full(n);
        let set: HashSet<PointSet> = opens.iter().copied().collect();
        if let Some(bad) = opens.iter().find(|u| !u.is_subset(full)) {
            return Err(Error::StrayPoints(format!("{bad:?}")));
        }
        if !set.contains(&PointSet::EMPTY) {
            return Err(Error::InvalidTopology("missing the empty set".into()));
        }
        if !set.contains(&full) {
            return Err(Error::InvalidTopology("missing the whole carrier".into()));
        }
        for &u in &set {
            for &v in &set {
                if !set.contains(&(u | v)) {
                    return Err(Error::InvalidTopology(format!(
                        "not closed under union: {u:?} ∪ {v:?} = {:?} is missing",
                        u | v
                    )));
                }
                if !set.contains(&(u & v)) {
                    return Err(Error::InvalidTopology(format!(
                        "not closed under intersection: {u:?} ∩ {v:?} = {:?} is missing",
                        u & v
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_topology(n: usize, opens: &[PointSet]) -> bool {
        FinTopology::validate(n, opens).is_ok()
    }

    /// Builds a topology from an explicit open family, validating it.
    pub fn from_opens(n: usize, opens: &[PointSet]) -> Result<FinTopology> {
        FinTopology::validate(n, opens)?;
        let full = PointSet::full(n);
        let nbhd = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(full, |acc, &u| acc & u)
            })
            .collect();
        let mut sorted = opens.to_vec();
        sorted.sort();
        sorted.dedup();
        let t = FinTopology::from_nbhds(n, nbhd);
        let _ = t.opens.set(sorted);
        Ok(t)
    }

    /// The smallest topology containing `subbasis`: finite intersections
    /// (the empty one being the carrier), then all unions.
    pub fn generate(n: usize, subbasis: &[PointSet]) -> Result<FinTopology> {
        if n > MAX_POINTS {
            return Err(Error::CarrierTooLarge(n));
        }
        let full = PointSet::full(n);
        if let Some(bad) = subbasis.iter().find(|u| !u.is_subset(full)) {
            return Err(Error::StrayPoints(format!("{bad:?}")));
        }
        let nbhd = (0..n)
            .map(|x| {
                subbasis
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(full, |acc, &u| acc & u)
            })
            .collect();
        Ok(FinTopology::from_nbhds(n, nbhd))
    }

    pub fn from_preorder(order: &Preorder) -> FinTopology {
        FinTopology::from_nbhds(order.len(), order.up.clone())
    }

    pub fn discrete(n: usize) -> FinTopology {
        FinTopology::from_preorder(&Preorder::identity(n))
    }

    pub fn indiscrete(n: usize) -> FinTopology {
        FinTopology::from_nbhds(n, vec![PointSet::full(n); n])
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.n)
    }

    /// Minimal open neighbourhood of `x`.
    pub fn nbhd(&self, x: usize) -> PointSet {
        self.nbhd[x]
    }

    pub fn nbhds(&self) -> &[PointSet] {
        &self.nbhd
    }

    /// All opens, sorted by bitmask.
    pub fn opens(&self) -> &[PointSet] {
        self.opens.get_or_init(|| {
            let mut seen: HashSet<PointSet> = HashSet::new();
            let mut stack = vec![PointSet::EMPTY];
            seen.insert(PointSet::EMPTY);
            while let Some(u) = stack.pop() {
                for &nb in &self.nbhd {
                    let w = u | nb;
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen.insert(self.full());
            let mut v: Vec<PointSet> = seen.into_iter().collect();
            v.sort();
            v
        })
    }

    /// Closed sets (complements of opens), sorted by bitmask.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut v: Vec<PointSet> = self
            .opens()
            .iter()
            .map(|u| u.complement(self.n))
            .collect();
        v.sort();
        v
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        set.iter().all(|x| self.nbhd[x].is_subset(set))
    }

    pub fn is_closed(&self, set: PointSet) -> bool {
        self.is_open(set.complement(self.n))
    }

    pub fn interior(&self, set: PointSet) -> PointSet {
        (0..self.n).filter(|&x| self.nbhd[x].is_subset(set)).collect()
    }

    pub fn closure(&self, set: PointSet) -> PointSet {
        (0..self.n).filter(|&x| self.nbhd[x].meets(set)).collect()
    }

    /// Smallest open containing `set` (its saturation).
    pub fn open_hull(&self, set: PointSet) -> PointSet {
        set.iter().fold(PointSet::EMPTY, |acc, x| acc | self.nbhd[x])
    }

    pub fn specialization(&self) -> Preorder {
        Preorder {
            up: self.nbhd.clone(),
        }
    }

    /// The topology generated by the union of both families.
    pub fn join(&self, other: &FinTopology) -> FinTopology {
        assert_eq!(self.n, other.n, "carrier mismatch");
        let nbhd = self
            .nbhd
            .iter()
            .zip(&other.nbhd)
            .map(|(&a, &b)| a & b)
            .collect();
        FinTopology::from_nbhds(self.n, nbhd)
    }

    /// Every open of `self` is open in `other`.
    pub fn is_coarser_than(&self, other: &FinTopology) -> bool {
        self.n == other.n && (0..self.n).all(|x| other.nbhd[x].is_subset(self.nbhd[x]))
    }

    /// Classical product; the pair `(i, j)` becomes point `i * m + j`.
    pub fn product(&self, other: &FinTopology) -> Result<FinTopology> {
        let (n, m) = (self.n, other.n);
        if n * m > MAX_POINTS {
            return Err(Error::CarrierTooLarge(n * m));
        }
        let mut nbhd = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                let mut s = PointSet::EMPTY;
                for a in self.nbhd[i].iter() {
                    for b in other.nbhd[j].iter() {
                        s = s.with(a * m + b);
                    }
                }
                nbhd.push(s);
            }
        }
        Ok(FinTopology::from_nbhds(n * m, nbhd))
    }

    /// Subspace on the points of `keep`, re-indexed in ascending order.
    pub fn subspace(&self, keep: PointSet) -> Result<FinTopology> {
        if !keep.is_subset(self.full()) {
            return Err(Error::StrayPoints(format!("{keep:?}")));
        }
        let points: Vec<usize> = keep.iter().collect();
        let reindex = |s: PointSet| -> PointSet {
            points
                .iter()
                .enumerate()
                .filter(|(_, &p)| s.contains(p))
                .map(|(i, _)| i)
                .collect()
        };
        let nbhd = points.iter().map(|&p| reindex(self.nbhd[p] & keep)).collect();
        Ok(FinTopology::from_nbhds(points.len(), nbhd))
    }

    /// Quotient by the partition `class_of` (values in `0..classes`).
    pub fn quotient(&self, class_of: &[usize], classes: usize) -> Result<FinTopology> {
        check_partition(self.n, class_of, classes)?;
        let members: Vec<PointSet> = (0..classes)
            .map(|c| (0..self.n).filter(|&x| class_of[x] == c).collect())
            .collect();
        let saturated = |u: PointSet| members.iter().all(|m| !m.meets(u) || m.is_subset(u));
        let opens: Vec<PointSet> = self
            .opens()
            .iter()
            .filter(|&&u| saturated(u))
            .map(|&u| (0..classes).filter(|&c| members[c].meets(u)).collect())
            .collect();
        FinTopology::from_opens(classes, &opens)
    }

    /// Nonempty closed sets that are not the union of two closed proper
    /// subsets, found by exhaustive search over closed sets.
    pub fn irreducible_closed_sets(&self) -> Vec<PointSet> {
        let closed = self.closed_sets();
        closed
            .iter()
            .copied()
            .filter(|&k| {
                !k.is_empty()
                    && closed.iter().all(|&a| {
                        closed.iter().all(|&b| {
                            !k.is_subset(a | b) || k.is_subset(a) || k.is_subset(b)
                        })
                    })
            })
            .collect()
    }

    /// Kolmogorov classes: points with equal point closures share a class,
    /// numbered by first appearance.
    pub fn kolmogorov_classes(&self) -> (Vec<usize>, usize) {
        partition_by_key(self.n, |x| self.nbhd[x])
    }
}

pub(crate) fn check_partition(n: usize, class_of: &[usize], classes: usize) -> Result<()> {
    if class_of.len() != n {
        return Err(Error::InvalidPartition(format!(
            "{} labels for {n} points",
            class_of.len()
        )));
    }
    for c in 0..classes {
        if !class_of.contains(&c) {
            return Err(Error::InvalidPartition(format!("class {c} is empty")));
        }
    }
    if let Some(&bad) = class_of.iter().find(|&&c| c >= classes) {
        return Err(Error::InvalidPartition(format!("label {bad} ≥ {classes}")));
    }
    Ok(())
}

pub(crate) fn partition_by_key<K: PartialEq>(n: usize, key: impl Fn(usize) -> K) -> (Vec<usize>, usize) {
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(n);
    for x in 0..n {
        let kx = key(x);
        match reps.iter().position(|&r| key(r) == kx) {
            Some(c) => class_of.push(c),
            None => {
                class_of.push(reps.len());
                reps.push(x);
            }
        }
    }
    let k = reps.len();
    (class_of, k)
}

/// A named finite topological space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopSpace {
    pub carrier: Carrier,
    pub topology: FinTopology,
}

impl TopSpace {
    pub fn new(carrier: Carrier, topology: FinTopology) -> Result<TopSpace> {
        if carrier.len() != topology.len() {
            return Err(Error::CarrierMismatch {
                left: carrier.len(),
                right: topology.len(),
            });
        }
        Ok(TopSpace { carrier, topology })
    }

    /// Points are the irreducible closed sets (named `k0, k1, ...` in
    /// bitmask order); `U` becomes `{K : K ∩ U ≠ ∅}`.
    pub fn sobrification(&self) -> TopSpace {
        let points = self.topology.irreducible_closed_sets();
        let opens: Vec<PointSet> = self
            .topology
            .opens()
            .iter()
            .map(|&u| (0..points.len()).filter(|&i| points[i].meets(u)).collect())
            .collect();
        let topology = FinTopology::from_opens(points.len(), &opens)
            .expect("the sobrification of a finite space is a topology");
        TopSpace {
            carrier: Carrier::numbered("k", points.len()),
            topology,
        }
    }
}
