//! B-valued orders and the specialization B-order of a space.

use std::fmt::Write as _;

use crate::bset::{BSet, Carrier};
use crate::bval::BVal;
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::{BSpace, Side};
use crate::topology::Preorder;

/// An `n × n` matrix of truth values, row = first argument.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BOrder {
    n: usize,
    matrix: Vec<BVal>,
}

impl BOrder {
    /// Validates reflexivity and transitivity.
    pub fn from_matrix(n: usize, matrix: Vec<BVal>) -> Result<BOrder> {
        if matrix.len() != n * n {
            return Err(Error::InvalidOrder(format!(
                "{} entries for a {n}-point carrier",
                matrix.len()
            )));
        }
        let r = BOrder { n, matrix };
        if let Some(x) = (0..n).find(|&x| r.get(x, x) != BVal::Top) {
            return Err(Error::InvalidOrder(format!("not reflexive at #{x}")));
        }
        if let Some((x, y, z)) = r.transitivity_failure() {
            return Err(Error::InvalidOrder(format!(
                "not transitive at (#{x}, #{y}, #{z})"
            )));
        }
        Ok(r)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> BVal) -> Result<BOrder> {
        let matrix = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| f(x, y)).collect();
        BOrder::from_matrix(n, matrix)
    }

    /// `1` on the diagonal, `0` elsewhere.
    pub fn identity(n: usize) -> BOrder {
        BOrder::from_fn(n, |x, y| if x == y { BVal::Top } else { BVal::Bot }).unwrap()
    }

    /// Constant `1`.
    pub fn total(n: usize) -> BOrder {
        BOrder {
            n,
            matrix: vec![BVal::Top; n * n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, x: usize, y: usize) -> BVal {
        self.matrix[x * self.n + y]
    }

    fn transitivity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !self.get(y, z).meet(self.get(x, y)).leq(self.get(x, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_order(&self) -> bool {
        (0..self.n).all(|x| self.get(x, x) == BVal::Top) && self.transitivity_failure().is_none()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|x| (0..x).all(|y| self.get(x, y) == self.get(y, x)))
    }

    pub fn is_separated(&self) -> bool {
        (0..self.n).all(|x| {
            (0..x).all(|y| !(self.get(x, y) == BVal::Top && self.get(y, x) == BVal::Top))
        })
    }

    /// `r^op(x, y) = r(y, x)`.
    pub fn opposite(&self) -> BOrder {
        BOrder::from_fn(self.n, |x, y| self.get(y, x)).expect("opposite of an order")
    }

    pub fn meet(&self, other: &BOrder) -> Result<BOrder> {
        if self.n != other.n {
            return Err(Error::CarrierMismatch {
                left: self.n,
                right: other.n,
            });
        }
        BOrder::from_fn(self.n, |x, y| self.get(x, y).meet(other.get(x, y)))
    }

    /// The classical preorder `x ≤ y ⟺ r(x, y) ≥ tt` (resp. `ff`).
    pub fn component_order(&self, side: Side) -> Preorder {
        let b = side.value();
        Preorder::from_fn(self.n, |x, y| b.leq(self.get(x, y))).expect("cut of a B-order")
    }

    /// The matrix as a B-set over the square of the carrier, with the pair
    /// `(x, y)` at index `x * n + y`.
    pub fn as_bset(&self) -> BSet {
        BSet::from_values(&self.matrix)
    }

    /// `Ω(Λ)(x, y) = ⋀_{λ ∈ Λ} (λ(x) → λ(y))`.
    pub fn omega_of_family(n: usize, family: &[BSet]) -> Result<BOrder> {
        if let Some(bad) = family.iter().find(|l| l.carrier_len() != n) {
            return Err(Error::CarrierMismatch {
                left: n,
                right: bad.carrier_len(),
            });
        }
        let mut matrix = vec![BVal::Top; n * n];
        for l in family {
            let vals = l.values();
            for x in 0..n {
                for y in 0..n {
                    let e = &mut matrix[x * n + y];
                    *e = e.meet(vals[x].implies(vals[y]));
                }
            }
        }
        Ok(BOrder { n, matrix })
    }

    /// `Ω(τ)(x, y) = cl(1_y)(x)`.
    pub fn specialization(space: &BSpace) -> BOrder {
        let n = space.len();
        let closures: Vec<BSet> = (0..n).map(|y| space.point_closure(y)).collect();
        BOrder::from_fn(n, |x, y| closures[y].value(x)).expect("specialization is an order")
    }

    /// `Ω` generated by the basis `{tt_N : N a minimal tt-nbhd} ∪ {ff_N : ...}`.
    pub fn specialization_by_subbasis(space: &BSpace) -> BOrder {
        BOrder::omega_of_family(space.len(), &basis_family(space)).expect("same carrier")
    }

    /// Checks `r_src(x1, x2) ≤ r_tgt(f x1, f x2)` for all pairs.
    pub fn preserved_by(map: &[usize], src: &BOrder, tgt: &BOrder) -> Result<bool> {
        if map.len() != src.n {
            return Err(Error::NonTotalMap(format!(
                "{} images for {} points",
                map.len(),
                src.n
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= tgt.n) {
            return Err(Error::NonTotalMap(format!("image #{bad} outside the target")));
        }
        Ok((0..src.n).all(|a| (0..src.n).all(|b| src.get(a, b).leq(tgt.get(map[a], map[b])))))
    }

    /// Labeled table, rows are first arguments.
    pub fn render_table(&self, carrier: &Carrier) -> String {
        let w = carrier
            .names()
            .iter()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1)
            .max(2);
        let mut out = String::new();
        let _ = write!(out, "{:w$}", "");
        for name in carrier.names() {
            let _ = write!(out, " {name:>w$}");
        }
        out.push('\n');
        for x in 0..self.n {
            let _ = write!(out, "{:w$}", carrier.name(x));
            for y in 0..self.n {
                let _ = write!(out, " {:>w$}", self.get(x, y));
            }
            out.push('\n');
        }
        out
    }

    /// One `omega(x,y) = v` line per entry, row-major.
    pub fn render_kv(&self, carrier: &Carrier) -> String {
        let mut out = String::new();
        for x in 0..self.n {
            for y in 0..self.n {
                let _ = writeln!(
                    out,
                    "omega({},{}) = {}",
                    carrier.name(x),
                    carrier.name(y),
                    self.get(x, y)
                );
            }
        }
        out
    }
}

/// `tt_U` for each minimal tt-neighbourhood `U`, `ff_V` for each minimal
/// ff-neighbourhood `V`, duplicates removed.
pub fn basis_family(space: &BSpace) -> Vec<BSet> {
    let n = space.len();
    let mut out: Vec<BSet> = Vec::new();
    for x in 0..n {
        out.push(BSet::tt_ff(n, space.tt.nbhd(x), PointSet::EMPTY));
        out.push(BSet::tt_ff(n, PointSet::EMPTY, space.ff.nbhd(x)));
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::search::all_spaces;
    use crate::space::ContinuousMap;
    use BVal::*;

    #[test]
    fn t4x3_table() {
        let s = catalog::t4x3();
        let r = BOrder::specialization(&s);
        let want = [Top, Tt, Bot, Tt, Top, Ff, Bot, Ff, Top];
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(r.get(x, y), want[x * 3 + y]);
            }
        }
        assert!(r.is_symmetric());
        assert!(r.is_separated());
    }

    #[test]
    fn sierpinski_order_is_implication() {
        let s = BSpace::sierpinski();
        let r = BOrder::specialization(&s);
        let ident = BOrder::omega_of_family(4, &[BSet::from_values(&BVal::ALL)]).unwrap();
        for (i, a) in BVal::ALL.iter().enumerate() {
            for (j, b) in BVal::ALL.iter().enumerate() {
                assert_eq!(r.get(i, j), a.implies(*b));
                assert_eq!(ident.get(i, j), a.implies(*b));
            }
        }
    }

    #[test]
    fn empty_family_and_identity() {
        let r = BOrder::omega_of_family(2, &[]).unwrap();
        assert_eq!(r, BOrder::total(2));
        let id = BOrder::identity(3);
        assert!(id.is_symmetric() && id.is_separated());
        assert!(BOrder::omega_of_family(2, &[BSet::constant(3, Top)]).is_err());
    }

    // On a one-point carrier, B^X is B itself; evaluation at the point is
    // the identity family, and Ω over it must reproduce sub on B^X.
    #[test]
    fn evaluations_reproduce_sub_on_one_point() {
        let sets: Vec<BSet> = BSet::all(1).collect();
        let evals = vec![BSet::from_values(&sets.iter().map(|l| l.value(0)).collect::<Vec<_>>())];
        let r = BOrder::omega_of_family(sets.len(), &evals).unwrap();
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                assert_eq!(r.get(i, j), a.sub(b).unwrap());
            }
        }
    }

    #[test]
    fn chain2_is_not_symmetric() {
        let r = BOrder::specialization(&catalog::chain2());
        assert_eq!(r.get(0, 1), Ff);
        assert_eq!(r.get(1, 0), Tt);
        assert!(!r.is_symmetric());
    }

    #[test]
    fn bad_matrices_are_rejected() {
        assert!(BOrder::from_matrix(2, vec![Top, Bot, Bot, Tt]).is_err());
        assert!(BOrder::from_matrix(3, vec![Top, Top, Bot, Bot, Top, Top, Bot, Bot, Top]).is_err());
        assert!(BOrder::from_matrix(2, vec![Top]).is_err());
    }

    #[test]
    fn classical_spaces_have_crisp_orders() {
        for s in all_spaces(3) {
            let w = BSpace::omega(&s.iota_tt());
            let r = BOrder::specialization(&w);
            for x in 0..3 {
                for y in 0..3 {
                    let v = r.get(x, y);
                    assert!(v == Top || v == Bot);
                    assert_eq!(v == Top, w.tt.closure(PointSet::singleton(y)).contains(x));
                }
            }
        }
    }

    #[test]
    fn closure_and_basis_paths_agree() {
        for s in all_spaces(3) {
            let r = BOrder::specialization(&s);
            assert!(r.is_order());
            assert_eq!(r, BOrder::specialization_by_subbasis(&s));
            assert_eq!(r, BOrder::omega_of_family(3, &s.bopens()).unwrap());
            assert_eq!(r.component_order(Side::Tt), s.tt.specialization());
            assert_eq!(r.component_order(Side::Ff), s.ff.specialization());
        }
    }

    #[test]
    fn continuous_maps_preserve_specialization() {
        let spaces = all_spaces(2);
        for a in &spaces {
            let ra = BOrder::specialization(a);
            for b in &spaces {
                let rb = BOrder::specialization(b);
                for m in 0..4usize {
                    let map = vec![m & 1, m >> 1];
                    let f = ContinuousMap::new(a, b, map.clone()).unwrap();
                    if f.is_continuous() {
                        assert!(BOrder::preserved_by(&map, &ra, &rb).unwrap());
                    }
                }
                assert!(BOrder::preserved_by(&[0, 1], &ra, &BOrder::total(2)).unwrap());
            }
            assert!(BOrder::preserved_by(&[0, 1], &ra, &ra).unwrap());
        }
        assert!(BOrder::preserved_by(&[0], &BOrder::total(2), &BOrder::total(2)).is_err());
    }

    #[test]
    fn dot_product_order_is_the_product_of_component_orders() {
        use crate::topology::{FinTopology, TopSpace};
        let tops: Vec<TopSpace> = Preorder::enumerate(2)
            .iter()
            .map(|p| TopSpace::new(Carrier::numbered("p", 2), FinTopology::from_preorder(p)).unwrap())
            .collect();
        for x in &tops {
            for y in &tops {
                let d = BSpace::dot_product(x, y).unwrap();
                let r = BOrder::specialization(&d);
                let (ox, oy) = (x.topology.specialization(), y.topology.specialization());
                for i in 0..4 {
                    for j in 0..4 {
                        let want = BVal::from_cuts(ox.leq(i / 2, j / 2), oy.leq(i % 2, j % 2));
                        assert_eq!(r.get(i, j), want);
                    }
                }
            }
        }
    }

    #[test]
    fn render_table_layout() {
        let s = catalog::t4x3();
        let text = BOrder::specialization(&s).render_table(&s.carrier);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), ["x", "y", "z"]);
        assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["x", "1", "tt", "0"]);
        assert_eq!(lines[3].split_whitespace().collect::<Vec<_>>(), ["z", "0", "ff", "1"]);
    }
}
