//! Finite bitopological spaces, viewed as B-valued topological spaces.
//!
//! The B-topology of a space is never materialized: a B-set is open iff its
//! tt-cut is open in `τ[tt]` and its ff-cut is open in `τ[ff]`, and closure
//! and interior act cut by cut.

use crate::bset::{BSet, Carrier};
use crate::bval::BVal;
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::topology::{check_partition, FinTopology, TopSpace};

/// Selects one of the two component topologies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Tt,
    Ff,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Tt, Side::Ff];

    pub fn value(self) -> BVal {
        match self {
            Side::Tt => BVal::Tt,
            Side::Ff => BVal::Ff,
        }
    }

    pub fn cut(self, set: &BSet) -> PointSet {
        match self {
            Side::Tt => set.tcut(),
            Side::Ff => set.fcut(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSpace {
    pub name: String,
    pub carrier: Carrier,
    pub tt: FinTopology,
    pub ff: FinTopology,
}

impl BSpace {
    pub fn new(
        name: impl Into<String>,
        carrier: Carrier,
        tt: FinTopology,
        ff: FinTopology,
    ) -> Result<BSpace> {
        for t in [&tt, &ff] {
            if t.len() != carrier.len() {
                return Err(Error::CarrierMismatch {
                    left: carrier.len(),
                    right: t.len(),
                });
            }
        }
        Ok(BSpace {
            name: name.into(),
            carrier,
            tt,
            ff,
        })
    }

    /// Convenience constructor from explicit open families given by name.
    pub fn from_named_opens(
        name: &str,
        points: &[&str],
        tt_opens: &[&[&str]],
        ff_opens: &[&[&str]],
    ) -> Result<BSpace> {
        let carrier = Carrier::new(points.iter().copied())?;
        let fam = |opens: &[&[&str]]| -> Result<Vec<PointSet>> {
            opens
                .iter()
                .map(|o| carrier.set_of(o.iter().copied()))
                .collect()
        };
        let tt = FinTopology::from_opens(carrier.len(), &fam(tt_opens)?)?;
        let ff = FinTopology::from_opens(carrier.len(), &fam(ff_opens)?)?;
        BSpace::new(name, carrier, tt, ff)
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn component(&self, side: Side) -> &FinTopology {
        match side {
            Side::Tt => &self.tt,
            Side::Ff => &self.ff,
        }
    }

    fn check(&self, set: &BSet) -> Result<()> {
        if set.carrier_len() == self.len() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                left: self.len(),
                right: set.carrier_len(),
            })
        }
    }

    pub fn is_bopen(&self, set: &BSet) -> Result<bool> {
        self.check(set)?;
        Ok(self.is_open_raw(set))
    }

    pub(crate) fn is_open_raw(&self, set: &BSet) -> bool {
        self.tt.is_open(set.tcut()) && self.ff.is_open(set.fcut())
    }

    pub fn is_bclosed(&self, set: &BSet) -> Result<bool> {
        self.check(set)?;
        Ok(self.is_closed_raw(set))
    }

    pub(crate) fn is_closed_raw(&self, set: &BSet) -> bool {
        self.is_open_raw(&set.neg())
    }

    pub fn closure(&self, set: &BSet) -> Result<BSet> {
        self.check(set)?;
        Ok(self.closure_raw(set))
    }

    pub(crate) fn closure_raw(&self, set: &BSet) -> BSet {
        BSet::tt_ff(
            self.len(),
            self.tt.closure(set.tcut()),
            self.ff.closure(set.fcut()),
        )
    }

    pub fn interior(&self, set: &BSet) -> Result<BSet> {
        self.check(set)?;
        Ok(BSet::tt_ff(
            self.len(),
            self.tt.interior(set.tcut()),
            self.ff.interior(set.fcut()),
        ))
    }

    /// `cl(1_x)`, whose cuts are the two point closures.
    pub fn point_closure(&self, x: usize) -> BSet {
        let s = PointSet::singleton(x);
        BSet::tt_ff(self.len(), self.tt.closure(s), self.ff.closure(s))
    }

    /// Every open B-set `tt_U ∨ ff_V`, ordered by `(U, V)`.
    pub fn bopens(&self) -> Vec<BSet> {
        let n = self.len();
        let mut out = Vec::with_capacity(self.tt.opens().len() * self.ff.opens().len());
        for &u in self.tt.opens() {
            for &v in self.ff.opens() {
                out.push(BSet::tt_ff(n, u, v));
            }
        }
        out
    }

    /// Every closed B-set, ordered by cuts.
    pub fn bclosed(&self) -> Vec<BSet> {
        let n = self.len();
        let ct = self.tt.closed_sets();
        let cf = self.ff.closed_sets();
        let mut out = Vec::with_capacity(ct.len() * cf.len());
        for &u in &ct {
            for &v in &cf {
                out.push(BSet::tt_ff(n, u, v));
            }
        }
        out
    }

    /// `|τ[tt]| · |τ[ff]|`, the size of the B-topology.
    pub fn btopology_size(&self) -> usize {
        self.tt.opens().len() * self.ff.opens().len()
    }

    /// The Sierpiński-like space on `{0, ff, tt, 1}` whose B-topology has the
    /// identity map as a subbasis.
    pub fn sierpinski() -> BSpace {
        let carrier = Carrier::new(BVal::ALL.iter().map(|b| b.token())).unwrap();
        let ident = BSet::from_values(&BVal::ALL);
        let tt = FinTopology::generate(4, &[ident.tcut()]).unwrap();
        let ff = FinTopology::generate(4, &[ident.fcut()]).unwrap();
        BSpace::new("SIERP", carrier, tt, ff).unwrap()
    }

    /// `X.Y`: carrier `X × Y`, `τ[tt] = {U × Y}`, `τ[ff] = {X × V}`.
    /// The point `(x, y)` is named `x.y` and has index `i * |Y| + j`.
    pub fn dot_product(x: &TopSpace, y: &TopSpace) -> Result<BSpace> {
        let carrier = pair_carrier(&x.carrier, &y.carrier)?;
        let tt = x.topology.product(&FinTopology::indiscrete(y.carrier.len()))?;
        let ff = FinTopology::indiscrete(x.carrier.len()).product(&y.topology)?;
        BSpace::new("dot", carrier, tt, ff)
    }

    /// `ω(T) = (X, T, T)`.
    pub fn omega(space: &TopSpace) -> BSpace {
        BSpace::new(
            "omega",
            space.carrier.clone(),
            space.topology.clone(),
            space.topology.clone(),
        )
        .expect("same carrier")
    }

    /// The join topology `τ[tt] ∨ τ[ff]`.
    pub fn iota(&self) -> TopSpace {
        TopSpace {
            carrier: self.carrier.clone(),
            topology: self.tt.join(&self.ff),
        }
    }

    pub fn iota_tt(&self) -> TopSpace {
        TopSpace {
            carrier: self.carrier.clone(),
            topology: self.tt.clone(),
        }
    }

    pub fn iota_ff(&self) -> TopSpace {
        TopSpace {
            carrier: self.carrier.clone(),
            topology: self.ff.clone(),
        }
    }

    /// Componentwise product; `(x, y)` is named `x.y`, index `i * |S2| + j`.
    pub fn product(&self, other: &BSpace) -> Result<BSpace> {
        let carrier = pair_carrier(&self.carrier, &other.carrier)?;
        BSpace::new(
            format!("{}x{}", self.name, other.name),
            carrier,
            self.tt.product(&other.tt)?,
            self.ff.product(&other.ff)?,
        )
    }

    pub fn subspace(&self, keep: PointSet) -> Result<BSpace> {
        let tt = self.tt.subspace(keep)?;
        let ff = self.ff.subspace(keep)?;
        let names = keep.iter().map(|x| self.carrier.name(x).to_string());
        BSpace::new(format!("{}|sub", self.name), Carrier::new(names)?, tt, ff)
    }

    /// Componentwise quotient; a class is named by its members joined with `~`.
    pub fn quotient(&self, class_of: &[usize], classes: usize) -> Result<BSpace> {
        check_partition(self.len(), class_of, classes)?;
        let names = (0..classes).map(|c| {
            (0..self.len())
                .filter(|&x| class_of[x] == c)
                .map(|x| self.carrier.name(x))
                .collect::<Vec<_>>()
                .join("~")
        });
        BSpace::new(
            format!("{}/~", self.name),
            Carrier::new(names)?,
            self.tt.quotient(class_of, classes)?,
            self.ff.quotient(class_of, classes)?,
        )
    }

    pub fn with_name(mut self, name: impl Into<String>) -> BSpace {
        self.name = name.into();
        self
    }

    pub fn with_carrier(mut self, carrier: Carrier) -> Result<BSpace> {
        if carrier.len() != self.len() {
            return Err(Error::CarrierMismatch {
                left: self.len(),
                right: carrier.len(),
            });
        }
        self.carrier = carrier;
        Ok(self)
    }
}

fn pair_carrier(a: &Carrier, b: &Carrier) -> Result<Carrier> {
    Carrier::new(
        a.names()
            .iter()
            .flat_map(|x| b.names().iter().map(move |y| format!("{x}.{y}"))),
    )
}

/// A function between carriers, given as a table of target indices.
#[derive(Clone, Debug)]
pub struct ContinuousMap<'a> {
    pub source: &'a BSpace,
    pub target: &'a BSpace,
    pub mapping: Vec<usize>,
}

impl<'a> ContinuousMap<'a> {
    pub fn new(source: &'a BSpace, target: &'a BSpace, mapping: Vec<usize>) -> Result<Self> {
        if mapping.len() != source.len() {
            return Err(Error::NonTotalMap(format!(
                "{} images for {} points",
                mapping.len(),
                source.len()
            )));
        }
        if let Some(&bad) = mapping.iter().find(|&&y| y >= target.len()) {
            return Err(Error::NonTotalMap(format!("image #{bad} outside the target")));
        }
        Ok(ContinuousMap {
            source,
            target,
            mapping,
        })
    }

    pub fn preimage(&self, set: PointSet) -> PointSet {
        (0..self.mapping.len())
            .filter(|&x| set.contains(self.mapping[x]))
            .collect()
    }

    /// `λ ∘ f`.
    pub fn pull_back(&self, set: &BSet) -> BSet {
        BSet::tt_ff(
            self.source.len(),
            self.preimage(set.tcut()),
            self.preimage(set.fcut()),
        )
    }

    /// Preimages of component opens are open, for both components.
    pub fn is_continuous(&self) -> bool {
        Side::BOTH.iter().all(|&side| {
            let src = self.source.component(side);
            self.target
                .component(side)
                .opens()
                .iter()
                .all(|&u| src.is_open(self.preimage(u)))
        })
    }

    /// `λ ∘ f` is open for every open `λ` of the target.
    pub fn pulls_back_bopens(&self) -> bool {
        self.target
            .bopens()
            .iter()
            .all(|l| self.source.is_open_raw(&self.pull_back(l)))
    }

    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len() && {
            let mut seen = PointSet::EMPTY;
            self.mapping.iter().all(|&y| {
                let fresh = !seen.contains(y);
                seen = seen.with(y);
                fresh
            })
        }
    }

    /// A continuous bijection whose inverse is continuous.
    pub fn is_homeomorphism(&self) -> bool {
        if !self.is_bijective() || !self.is_continuous() {
            return false;
        }
        let mut inverse = vec![0; self.mapping.len()];
        for (x, &y) in self.mapping.iter().enumerate() {
            inverse[y] = x;
        }
        ContinuousMap::new(self.target, self.source, inverse)
            .map(|m| m.is_continuous())
            .unwrap_or(false)
    }
}

/// Searches for a homeomorphism by trying every carrier bijection.
pub fn find_homeomorphism(a: &BSpace, b: &BSpace, max_points: usize) -> Result<Option<Vec<usize>>> {
    if a.len() != b.len() {
        return Ok(None);
    }
    if a.len() > max_points {
        return Err(Error::BoundExceeded {
            what: "carrier size for homeomorphism search",
            size: a.len(),
            bound: max_points,
        });
    }
    if a.tt.opens().len() != b.tt.opens().len() || a.ff.opens().len() != b.ff.opens().len() {
        return Ok(None);
    }
    let n = a.len();
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    Ok(search_bijection(a, b, &mut perm, &mut used))
}

fn search_bijection(a: &BSpace, b: &BSpace, perm: &mut Vec<usize>, used: &mut [bool]) -> Option<Vec<usize>> {
    let n = a.len();
    if perm.len() == n {
        let m = ContinuousMap::new(a, b, perm.clone()).ok()?;
        return m.is_homeomorphism().then(|| perm.clone());
    }
    let x = perm.len();
    for y in 0..n {
        // minimal neighbourhoods must have matching sizes
        if used[y]
            || a.tt.nbhd(x).len() != b.tt.nbhd(y).len()
            || a.ff.nbhd(x).len() != b.ff.nbhd(y).len()
        {
            continue;
        }
        used[y] = true;
        perm.push(y);
        if let Some(found) = search_bijection(a, b, perm, used) {
            return Some(found);
        }
        perm.pop();
        used[y] = false;
    }
    None
}
