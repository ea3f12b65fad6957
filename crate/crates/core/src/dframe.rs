//! Finite frames, d-frames, and their homomorphisms.
//!
//! Elements of a frame are indices `0..len`. A frame together with a
//! complemented pair `tt`, `ff` is a [`SliceObject`]; adding the
//! consistency and totality sets gives a [`DFrame`].

use std::fmt;

use crate::bval::BVal;
use crate::error::{Error, Result};
use crate::space::BSpace;

/// Default cap on the number of candidate maps a hom enumeration may try.
pub const DEFAULT_HOM_BOUND: usize = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinFrame {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl FinFrame {
    /// Builds a frame from a partial order, checking that it is a
    /// distributive lattice (for finite lattices, the frame law).
    pub fn from_order(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<FinFrame> {
        let m = labels.len();
        if m == 0 {
            return Err(Error::InvalidFrame("no elements".into()));
        }
        if leq.len() != m || leq.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidFrame("order table has the wrong shape".into()));
        }
        for a in 0..m {
            if !leq[a][a] {
                return Err(Error::InvalidFrame(format!("not reflexive at {}", labels[a])));
            }
            for b in 0..m {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::InvalidFrame(format!(
                        "{} and {} are distinct but equivalent",
                        labels[a], labels[b]
                    )));
                }
                for c in 0..m {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::InvalidFrame("order is not transitive".into()));
                    }
                }
            }
        }
        let bound = |a: usize, b: usize, lower: bool| -> Option<usize> {
            let is_bound = |c: usize| if lower { leq[c][a] && leq[c][b] } else { leq[a][c] && leq[b][c] };
            let cands: Vec<usize> = (0..m).filter(|&c| is_bound(c)).collect();
            cands.iter().copied().find(|&c| {
                cands
                    .iter()
                    .all(|&d| if lower { leq[d][c] } else { leq[c][d] })
            })
        };
        let mut meet = vec![vec![0; m]; m];
        let mut join = vec![vec![0; m]; m];
        for a in 0..m {
            for b in 0..m {
                meet[a][b] = bound(a, b, true).ok_or_else(|| {
                    Error::InvalidFrame(format!("{} and {} have no meet", labels[a], labels[b]))
                })?;
                join[a][b] = bound(a, b, false).ok_or_else(|| {
                    Error::InvalidFrame(format!("{} and {} have no join", labels[a], labels[b]))
                })?;
            }
        }
        let bottom = (0..m).find(|&a| (0..m).all(|b| leq[a][b])).expect("finite lattice");
        let top = (0..m).find(|&a| (0..m).all(|b| leq[b][a])).expect("finite lattice");
        let frame = FinFrame {
            labels,
            leq,
            meet,
            join,
            bottom,
            top,
        };
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if frame.meet(a, frame.join(b, c)) != frame.join(frame.meet(a, b), frame.meet(a, c)) {
                        return Err(Error::InvalidFrame(format!(
                            "not distributive at ({}, {}, {})",
                            frame.labels[a], frame.labels[b], frame.labels[c]
                        )));
                    }
                }
            }
        }
        Ok(frame)
    }

    /// The four truth values, element `i` being `BVal::ALL[i]`.
    pub fn boolean() -> FinFrame {
        let labels = BVal::ALL.iter().map(|b| b.token().to_string()).collect();
        let leq = BVal::ALL
            .iter()
            .map(|a| BVal::ALL.iter().map(|b| a.leq(*b)).collect())
            .collect();
        FinFrame::from_order(labels, leq).expect("B is a frame")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.bottom, |acc, a| self.join(acc, a))
    }

    /// `↓a`.
    pub fn down(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.leq(b, a)).collect()
    }

    /// Preserves top, bottom, binary meets and binary joins; in a finite
    /// lattice that is all finite meets and arbitrary joins.
    pub fn is_hom(&self, h: &[usize], tgt: &FinFrame) -> bool {
        let m = self.len();
        if h.len() != m || h.iter().any(|&x| x >= tgt.len()) {
            return false;
        }
        if h[self.top] != tgt.top || h[self.bottom] != tgt.bottom {
            return false;
        }
        (0..m).all(|a| {
            (0..m).all(|b| {
                h[self.meet(a, b)] == tgt.meet(h[a], h[b]) && h[self.join(a, b)] == tgt.join(h[a], h[b])
            })
        })
    }

    /// Spot check that joins of every subset of size at most three are
    /// preserved.
    pub fn preserves_small_joins(&self, h: &[usize], tgt: &FinFrame) -> bool {
        let m = self.len();
        (0..m).all(|a| {
            (a..m).all(|b| {
                (b..m).all(|c| {
                    h[self.join_all([a, b, c])] == tgt.join_all([h[a], h[b], h[c]])
                })
            })
        })
    }
}

/// A frame with a complemented pair of designated elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceObject {
    pub frame: FinFrame,
    pub tt: usize,
    pub ff: usize,
}

impl SliceObject {
    pub fn new(frame: FinFrame, tt: usize, ff: usize) -> Result<SliceObject> {
        if tt >= frame.len() || ff >= frame.len() {
            return Err(Error::InvalidFrame("tt or ff is not an element".into()));
        }
        if frame.meet(tt, ff) != frame.bottom() || frame.join(tt, ff) != frame.top() {
            return Err(Error::InvalidFrame("tt and ff are not complements".into()));
        }
        Ok(SliceObject { frame, tt, ff })
    }

    /// `B` itself, with `tt`, `ff` the middle elements.
    pub fn boolean() -> SliceObject {
        SliceObject::new(FinFrame::boolean(), BVal::Tt.index(), BVal::Ff.index()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.frame.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frame.is_empty()
    }

    /// `x ⊓ y = (x ∧ ff) ∨ (y ∧ ff) ∨ (x ∧ y)`.
    pub fn logic_meet(&self, x: usize, y: usize) -> usize {
        let f = &self.frame;
        f.join(f.join(f.meet(x, self.ff), f.meet(y, self.ff)), f.meet(x, y))
    }

    /// `x ⊔ y = (x ∧ tt) ∨ (y ∧ tt) ∨ (x ∧ y)`.
    pub fn logic_join(&self, x: usize, y: usize) -> usize {
        let f = &self.frame;
        f.join(f.join(f.meet(x, self.tt), f.meet(y, self.tt)), f.meet(x, y))
    }

    /// `x ⊑ y` iff `x ⊓ y = x`.
    pub fn logic_leq(&self, x: usize, y: usize) -> bool {
        self.logic_meet(x, y) == x
    }

    /// `α ↦ (α ∧ tt, α ∧ ff)`.
    pub fn split(&self, a: usize) -> (usize, usize) {
        (self.frame.meet(a, self.tt), self.frame.meet(a, self.ff))
    }

    /// A frame hom that sends `tt` to `tt` and `ff` to `ff`.
    pub fn is_hom(&self, h: &[usize], tgt: &SliceObject) -> bool {
        self.frame.is_hom(h, &tgt.frame) && h[self.tt] == tgt.tt && h[self.ff] == tgt.ff
    }
}

/// The conditions a d-frame must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DAxiom {
    ConDown,
    ConDirectedJoin,
    TotUp,
    ConLogic,
    TotLogic,
    ConTtFf,
    TotTtFf,
    ConTot,
}

impl DAxiom {
    pub const ALL: [DAxiom; 8] = [
        DAxiom::ConDown,
        DAxiom::ConDirectedJoin,
        DAxiom::TotUp,
        DAxiom::ConLogic,
        DAxiom::TotLogic,
        DAxiom::ConTtFf,
        DAxiom::TotTtFf,
        DAxiom::ConTot,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            DAxiom::ConDown => "con-↓",
            DAxiom::ConDirectedJoin => "con-⋁↑",
            DAxiom::TotUp => "tot-↑",
            DAxiom::ConLogic => "con-⊓⊔",
            DAxiom::TotLogic => "tot-⊓⊔",
            DAxiom::ConTtFf => "con-ttff",
            DAxiom::TotTtFf => "tot-ttff",
            DAxiom::ConTot => "con-tot",
        }
    }
}

impl fmt::Display for DAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DFrame {
    pub slice: SliceObject,
    pub con: Vec<bool>,
    pub tot: Vec<bool>,
}

impl DFrame {
    pub fn new(slice: SliceObject, con: Vec<bool>, tot: Vec<bool>) -> Result<DFrame> {
        if con.len() != slice.len() || tot.len() != slice.len() {
            return Err(Error::InvalidDFrame("con/tot tables have the wrong length".into()));
        }
        Ok(DFrame { slice, con, tot })
    }

    pub fn frame(&self) -> &FinFrame {
        &self.slice.frame
    }

    pub fn len(&self) -> usize {
        self.slice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slice.is_empty()
    }

    pub fn con_size(&self) -> usize {
        self.con.iter().filter(|&&c| c).count()
    }

    pub fn tot_size(&self) -> usize {
        self.tot.iter().filter(|&&c| c).count()
    }

    /// Every violated condition, in [`DAxiom::ALL`] order.
    pub fn validate(&self) -> Vec<DAxiom> {
        DAxiom::ALL.iter().copied().filter(|&a| !self.holds(a)).collect()
    }

    pub fn holds(&self, axiom: DAxiom) -> bool {
        let s = &self.slice;
        let f = &s.frame;
        let m = f.len();
        let (con, tot) = (&self.con, &self.tot);
        let pairs = || (0..m).flat_map(move |a| (0..m).map(move |b| (a, b)));
        match axiom {
            DAxiom::ConDown => pairs().all(|(a, b)| !(f.leq(a, b) && con[b]) || con[a]),
            DAxiom::ConDirectedJoin => {
                // finite directed sets have a largest member, so this
                // follows from con-↓; the literal check runs on small subsets
                let members: Vec<usize> = (0..m).filter(|&a| con[a]).collect();
                let k = members.len();
                (0..k).all(|i| {
                    (i..k).all(|j| {
                        (j..k).all(|h| {
                            let fam = [members[i], members[j], members[h]];
                            let directed = fam.iter().all(|&a| {
                                fam.iter().all(|&b| {
                                    fam.iter().any(|&c| f.leq(a, c) && f.leq(b, c))
                                })
                            });
                            !directed || con[f.join_all(fam)]
                        })
                    })
                })
            }
            DAxiom::TotUp => pairs().all(|(a, b)| !(f.leq(a, b) && tot[a]) || tot[b]),
            DAxiom::ConLogic => pairs().all(|(a, b)| {
                !(con[a] && con[b]) || (con[s.logic_meet(a, b)] && con[s.logic_join(a, b)])
            }),
            DAxiom::TotLogic => pairs().all(|(a, b)| {
                !(tot[a] && tot[b]) || (tot[s.logic_meet(a, b)] && tot[s.logic_join(a, b)])
            }),
            DAxiom::ConTtFf => con[s.tt] && con[s.ff],
            DAxiom::TotTtFf => tot[s.tt] && tot[s.ff],
            DAxiom::ConTot => pairs().all(|(a, b)| {
                let agree = f.meet(a, s.tt) == f.meet(b, s.tt) || f.meet(a, s.ff) == f.meet(b, s.ff);
                !(con[a] && tot[b] && agree) || f.leq(a, b)
            }),
        }
    }

    /// A frame hom preserving `tt`, `ff`, `con` and `tot`.
    pub fn is_hom(&self, h: &[usize], tgt: &DFrame) -> bool {
        self.slice.is_hom(h, &tgt.slice)
            && (0..self.len()).all(|a| (!self.con[a] || tgt.con[h[a]]) && (!self.tot[a] || tgt.tot[h[a]]))
    }
}

/// `F`: `con = ↓tt ∪ ↓ff`, `tot = ↑tt ∪ ↑ff`.
pub fn f_functor(slice: &SliceObject) -> DFrame {
    let f = &slice.frame;
    let m = f.len();
    let con = (0..m).map(|a| f.leq(a, slice.tt) || f.leq(a, slice.ff)).collect();
    let tot = (0..m).map(|a| f.leq(slice.tt, a) || f.leq(slice.ff, a)).collect();
    DFrame {
        slice: slice.clone(),
        con,
        tot,
    }
}

/// `G`: forgets `con` and `tot`.
pub fn g_functor(d: &DFrame) -> SliceObject {
    d.slice.clone()
}

/// `B` as a d-frame: `con = {0, tt, ff}`, `tot = {tt, ff, 1}`.
pub fn boolean_dframe() -> DFrame {
    f_functor(&SliceObject::boolean())
}

/// Every `(con, tot)` pair on `slice` passing all eight axioms, by
/// exhaustive search over pairs of subsets.
pub fn all_valid_dframes(slice: &SliceObject) -> Result<Vec<DFrame>> {
    let m = slice.len();
    if m > 8 {
        return Err(Error::BoundExceeded {
            what: "frame size for exhaustive d-frame search",
            size: m,
            bound: 8,
        });
    }
    let subset = |mask: u32| (0..m).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>();
    let mut out = Vec::new();
    for cm in 0..1u32 << m {
        for tm in 0..1u32 << m {
            let d = DFrame::new(slice.clone(), subset(cm), subset(tm))?;
            if d.validate().is_empty() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// The d-frame of opens: pairs `(U, V)` ordered componentwise, element
/// index `i * |τ[ff]| + j` for the `i`-th tt-open and `j`-th ff-open.
pub fn d_o(space: &BSpace) -> DFrame {
    let (ot, of) = (space.tt.opens(), space.ff.opens());
    let k = of.len();
    let pairs: Vec<_> = ot
        .iter()
        .flat_map(|&u| of.iter().map(move |&v| (u, v)))
        .collect();
    let labels = pairs
        .iter()
        .map(|&(u, v)| format!("({},{})", space.carrier.render_set(u), space.carrier.render_set(v)))
        .collect();
    let leq = pairs
        .iter()
        .map(|&(u, v)| {
            pairs
                .iter()
                .map(|&(u2, v2)| u.is_subset(u2) && v.is_subset(v2))
                .collect()
        })
        .collect();
    let frame = FinFrame::from_order(labels, leq).expect("product of topologies is a frame");
    let full = space.tt.full();
    let pos_tt = ot.iter().position(|&u| u == full).unwrap();
    let pos_ff = of.iter().position(|&v| v == full).unwrap();
    let tt = pos_tt * k;
    let ff = pos_ff;
    let slice = SliceObject::new(frame, tt, ff).expect("(X, ∅) and (∅, X) are complements");
    let con = pairs.iter().map(|&(u, v)| !u.meets(v)).collect();
    let tot = pairs.iter().map(|&(u, v)| (u | v) == full).collect();
    DFrame { slice, con, tot }
}

/// Enumerates maps `src → tgt` through the decomposition
/// `L ≅ [0, tt] × [0, ff]`: a candidate is a pair of maps
/// `[0, tt_src] → [0, tt_tgt]` and `[0, ff_src] → [0, ff_tgt]`, extended by
/// `h(α) = h(α ∧ tt) ∨ h(α ∧ ff)`. Candidates that pass `keep` are returned.
fn enumerate_by_decomposition(
    src: &SliceObject,
    tgt: &SliceObject,
    bound: usize,
    keep: impl Fn(&[usize]) -> bool,
) -> Result<Vec<Vec<usize>>> {
    let (fs, ft) = (&src.frame, &tgt.frame);
    let dom_tt = fs.down(src.tt);
    let dom_ff = fs.down(src.ff);
    let cod_tt = ft.down(tgt.tt);
    let cod_ff = ft.down(tgt.ff);
    let count = (cod_tt.len() as f64).powi(dom_tt.len() as i32) * (cod_ff.len() as f64).powi(dom_ff.len() as i32);
    if count > bound as f64 {
        return Err(Error::BoundExceeded {
            what: "candidate homomorphisms",
            size: count.min(usize::MAX as f64) as usize,
            bound,
        });
    }
    let count = count as usize;
    let mut out = Vec::new();
    let mut h = vec![0usize; fs.len()];
    let mut part_tt = vec![0usize; fs.len()];
    let mut part_ff = vec![0usize; fs.len()];
    for code in 0..count {
        let mut c = code;
        for &a in &dom_tt {
            part_tt[a] = cod_tt[c % cod_tt.len()];
            c /= cod_tt.len();
        }
        for &a in &dom_ff {
            part_ff[a] = cod_ff[c % cod_ff.len()];
            c /= cod_ff.len();
        }
        for (a, slot) in h.iter_mut().enumerate() {
            let (x, y) = src.split(a);
            *slot = ft.join(part_tt[x], part_ff[y]);
        }
        if keep(&h) {
            out.push(h.clone());
        }
    }
    Ok(out)
}

/// Every d-frame homomorphism `src → tgt`.
pub fn enumerate_homs(src: &DFrame, tgt: &DFrame, bound: usize) -> Result<Vec<Vec<usize>>> {
    enumerate_by_decomposition(&src.slice, &tgt.slice, bound, |h| src.is_hom(h, tgt))
}

/// Every slice homomorphism `src → tgt`.
pub fn enumerate_slice_homs(src: &SliceObject, tgt: &SliceObject, bound: usize) -> Result<Vec<Vec<usize>>> {
    enumerate_by_decomposition(src, tgt, bound, |h| src.is_hom(h, tgt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn b(v: BVal) -> usize {
        v.index()
    }

    #[test]
    fn logic_operations() {
        let s = SliceObject::boolean();
        assert_eq!(s.logic_meet(s.tt, s.ff), s.ff);
        assert_eq!(s.logic_join(s.tt, s.ff), s.tt);
        for x in 0..4 {
            assert_eq!(s.logic_meet(x, s.tt), x);
            assert_eq!(s.logic_join(x, s.ff), x);
        }
        assert_eq!(s.logic_meet(b(BVal::Top), b(BVal::Bot)), s.ff);
    }

    #[test]
    fn boolean_dframe_is_unique() {
        let d = boolean_dframe();
        assert!(d.validate().is_empty());
        let want_con: Vec<bool> = BVal::ALL.iter().map(|&v| v != BVal::Top).collect();
        let want_tot: Vec<bool> = BVal::ALL.iter().map(|&v| v != BVal::Bot).collect();
        assert_eq!(d.con, want_con);
        assert_eq!(d.tot, want_tot);
        let mut valid = 0;
        for cm in 0..16u32 {
            for tm in 0..16u32 {
                let con = (0..4).map(|i| cm >> i & 1 == 1).collect();
                let tot = (0..4).map(|i| tm >> i & 1 == 1).collect();
                let cand = DFrame::new(SliceObject::boolean(), con, tot).unwrap();
                if cand.validate().is_empty() {
                    valid += 1;
                    assert_eq!(cand, d);
                }
            }
        }
        assert_eq!(valid, 1);
    }

    #[test]
    fn full_con_breaks_con_tot() {
        let d = DFrame::new(SliceObject::boolean(), vec![true; 4], boolean_dframe().tot).unwrap();
        assert!(d.validate().contains(&DAxiom::ConTot));
    }

    #[test]
    fn d_o_examples() {
        let s = d_o(&catalog::sierp());
        assert_eq!(s.len(), 9);
        assert!(s.validate().is_empty());
        let t = catalog::t4x3();
        let d = d_o(&t);
        let c = &t.carrier;
        let find = |u: &str, v: &str| {
            let (u, v) = (c.parse_set(u).unwrap(), c.parse_set(v).unwrap());
            let i = t.tt.opens().iter().position(|&o| o == u).unwrap();
            let j = t.ff.opens().iter().position(|&o| o == v).unwrap();
            i * t.ff.opens().len() + j
        };
        assert!(d.con[find("{z}", "{x}")]);
        assert!(d.tot[find("{x y}", "{y z}")]);
        assert!(d.con[find("{}", "{}")]);
    }

    #[test]
    fn catalog_dframes_are_valid() {
        for s in catalog::spaces() {
            let d = d_o(&s);
            assert!(d.validate().is_empty(), "{}", s.name);
            let fd = f_functor(&g_functor(&d));
            assert!(fd.validate().is_empty());
            assert_eq!(g_functor(&fd), d.slice);
            for a in 0..d.len() {
                assert!(!fd.con[a] || d.con[a]);
            }
        }
    }

    #[test]
    fn product_decomposition_and_logic_lattice() {
        for s in catalog::spaces() {
            let d = d_o(&s);
            let sl = &d.slice;
            let f = &sl.frame;
            let m = d.len();
            for a in 0..m {
                for c in 0..m {
                    let (a1, a2) = sl.split(a);
                    let (c1, c2) = sl.split(c);
                    assert_eq!(f.leq(a, c), f.leq(a1, c1) && f.leq(a2, c2));
                    if a != c {
                        assert_ne!((a1, a2), (c1, c2));
                    }
                }
                assert!(sl.logic_leq(a, sl.tt));
                assert!(sl.logic_leq(sl.ff, a));
            }
            if m <= 16 {
                for x in 0..m {
                    for y in 0..m {
                        for z in 0..m {
                            assert_eq!(
                                sl.logic_meet(x, sl.logic_join(y, z)),
                                sl.logic_join(sl.logic_meet(x, y), sl.logic_meet(x, z))
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn homs() {
        let d = d_o(&catalog::sierp());
        let id: Vec<usize> = (0..d.len()).collect();
        assert!(d.is_hom(&id, &d));
        assert!(d.frame().preserves_small_joins(&id, d.frame()));
        let fb = boolean_dframe();
        let homs = enumerate_homs(&fb, &fb, DEFAULT_HOM_BOUND).unwrap();
        assert_eq!(homs, vec![vec![0, 1, 2, 3]]);
        assert!(enumerate_homs(&d, &d, 3).is_err());
    }

    #[test]
    fn free_forgetful_hom_counts_agree() {
        let spaces: Vec<_> = catalog::spaces().into_iter().filter(|s| s.btopology_size() <= 16).collect();
        for a in &spaces {
            let s = g_functor(&d_o(a));
            for b in &spaces {
                let d = d_o(b);
                let left = enumerate_homs(&f_functor(&s), &d, DEFAULT_HOM_BOUND).unwrap();
                let right = enumerate_slice_homs(&s, &g_functor(&d), DEFAULT_HOM_BOUND).unwrap();
                assert_eq!(left.len(), right.len(), "{} -> {}", a.name, b.name);
                for h in &left {
                    assert!(s.frame.preserves_small_joins(h, d.frame()));
                }
            }
        }
    }

    #[test]
    fn non_lattices_are_rejected() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let antichain = vec![vec![true, false], vec![false, true]];
        assert!(FinFrame::from_order(labels, antichain).is_err());
        // the pentagon is a lattice but not distributive
        let names: Vec<String> = ["0", "a", "b", "c", "1"].iter().map(|s| s.to_string()).collect();
        let rel = |x: usize, y: usize| x == y || x == 0 || y == 4 || (x == 1 && y == 2);
        let leq = (0..5).map(|x| (0..5).map(|y| rel(x, y)).collect()).collect();
        assert!(FinFrame::from_order(names, leq).is_err());
    }
}
