//! B-valued subsets of a finite carrier.
//!
//! A B-valued subset `λ: X -> B` is stored as its two cuts `λ[tt]` and
//! `λ[ff]`; the value at `x` is `tt` if `x ∈ λ[tt]` joined with `ff` if
//! `x ∈ λ[ff]`. Pointwise meets and joins are intersections and unions of
//! cuts, negation complements both cuts.

use std::fmt::Write as _;
use std::ops::{BitAnd, BitOr, Not};

use crate::bval::BVal;
use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// Ordered, duplicate-free list of point names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Carrier {
    names: Vec<String>,
}

impl Carrier {
    pub fn new<I, S>(names: I) -> Result<Carrier>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_POINTS {
            return Err(Error::CarrierTooLarge(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty()
                || name
                    .chars()
                    .any(|c| c.is_whitespace() || matches!(c, '{' | '}' | '#'))
            {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("invalid point name `{name}`"),
                });
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicatePoint(name.clone()));
            }
        }
        Ok(Carrier { names })
    }

    /// Points named `p0, p1, ...`.
    pub fn numbered(prefix: &str, n: usize) -> Carrier {
        Carrier::new((0..n).map(|i| format!("{prefix}{i}"))).expect("generated names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::PointNotInCarrier(name.to_string()))
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn set_of<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Result<PointSet> {
        names
            .into_iter()
            .map(|n| self.index(n))
            .collect::<Result<PointSet>>()
    }

    /// `{a b}` rendering; `{}` for the empty set.
    pub fn render_set(&self, set: PointSet) -> String {
        let mut out = String::from("{");
        for (i, x) in set.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&self.names[x]);
        }
        out.push('}');
        out
    }

    pub fn render_bset(&self, set: &BSet) -> String {
        format!(
            "tt{} ff{}",
            self.render_set(set.tcut()),
            self.render_set(set.fcut())
        )
    }

    /// Parses a brace-delimited point list such as `{a b}`.
    pub fn parse_set(&self, text: &str) -> Result<PointSet> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("expected `{{...}}`, found `{text}`"),
            })?;
        self.set_of(inner.split_whitespace())
    }

    /// Parses the literal syntax `tt{a b} ff{b c}`. Either part may be
    /// omitted, in which case that cut is empty.
    pub fn parse_bset(&self, text: &str) -> Result<BSet> {
        let mut tcut = None;
        let mut fcut = None;
        let mut rest = text.trim();
        while !rest.is_empty() {
            let (slot, after) = if let Some(r) = rest.strip_prefix("tt") {
                (&mut tcut, r)
            } else if let Some(r) = rest.strip_prefix("ff") {
                (&mut fcut, r)
            } else {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("expected `tt{{..}}` or `ff{{..}}` at `{rest}`"),
                });
            };
            let close = after.find('}').ok_or_else(|| Error::Parse {
                line: 0,
                message: "unterminated `{`".to_string(),
            })?;
            if slot.is_some() {
                return Err(Error::Parse {
                    line: 0,
                    message: "cut given twice".to_string(),
                });
            }
            *slot = Some(self.parse_set(&after[..=close])?);
            rest = after[close + 1..].trim_start();
        }
        Ok(BSet::from_cuts_unchecked(
            self.len(),
            tcut.unwrap_or_default(),
            fcut.unwrap_or_default(),
        ))
    }

    pub fn render_values(&self, set: &BSet) -> String {
        let mut out = String::new();
        for x in 0..self.len() {
            if x > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}↦{}", self.names[x], set.value(x));
        }
        out
    }
}

/// A B-valued subset of an `n`-point carrier, stored by cuts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BSet {
    n: usize,
    tt: PointSet,
    ff: PointSet,
}

impl BSet {
    pub fn from_cuts(n: usize, tcut: PointSet, fcut: PointSet) -> Result<BSet> {
        let full = PointSet::full(n);
        for cut in [tcut, fcut] {
            if !cut.is_subset(full) {
                return Err(Error::StrayPoints(format!("{cut:?}")));
            }
        }
        Ok(BSet::from_cuts_unchecked(n, tcut, fcut))
    }

    pub(crate) fn from_cuts_unchecked(n: usize, tcut: PointSet, fcut: PointSet) -> BSet {
        debug_assert!(n <= MAX_POINTS);
        debug_assert!(tcut.is_subset(PointSet::full(n)) && fcut.is_subset(PointSet::full(n)));
        BSet { n, tt: tcut, ff: fcut }
    }

    pub fn from_values(values: &[BVal]) -> BSet {
        let tt = values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.has_tt())
            .map(|(x, _)| x)
            .collect();
        let ff = values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.has_ff())
            .map(|(x, _)| x)
            .collect();
        BSet::from_cuts_unchecked(values.len(), tt, ff)
    }

    /// The constant function with value `b`.
    pub fn constant(n: usize, b: BVal) -> BSet {
        let full = PointSet::full(n);
        BSet::from_cuts_unchecked(
            n,
            if b.has_tt() { full } else { PointSet::EMPTY },
            if b.has_ff() { full } else { PointSet::EMPTY },
        )
    }

    /// `b_A`: value `b` on `A`, `0` elsewhere.
    pub fn scaled(n: usize, b: BVal, set: PointSet) -> Result<BSet> {
        if !set.is_subset(PointSet::full(n)) {
            return Err(Error::StrayPoints(format!("{set:?}")));
        }
        Ok(BSet::from_cuts_unchecked(
            n,
            if b.has_tt() { set } else { PointSet::EMPTY },
            if b.has_ff() { set } else { PointSet::EMPTY },
        ))
    }

    /// `1_x`.
    pub fn point(n: usize, x: usize) -> Result<BSet> {
        if x >= n {
            return Err(Error::PointNotInCarrier(format!("#{x}")));
        }
        let s = PointSet::singleton(x);
        Ok(BSet::from_cuts_unchecked(n, s, s))
    }

    /// `tt_U ∨ ff_V`.
    pub fn tt_ff(n: usize, u: PointSet, v: PointSet) -> BSet {
        BSet::from_cuts_unchecked(n, u, v)
    }

    pub fn carrier_len(&self) -> usize {
        self.n
    }

    pub fn tcut(&self) -> PointSet {
        self.tt
    }

    pub fn fcut(&self) -> PointSet {
        self.ff
    }

    /// Value at a point index; panics when out of range.
    pub fn value(&self, x: usize) -> BVal {
        assert!(x < self.n, "point {x} outside a {}-point carrier", self.n);
        BVal::from_cuts(self.tt.contains(x), self.ff.contains(x))
    }

    pub fn value_at(&self, x: usize) -> Result<BVal> {
        if x >= self.n {
            return Err(Error::PointNotInCarrier(format!("#{x}")));
        }
        Ok(self.value(x))
    }

    pub fn values(&self) -> Vec<BVal> {
        (0..self.n).map(|x| self.value(x)).collect()
    }

    fn same_carrier(&self, other: &BSet) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    pub fn meet(&self, other: &BSet) -> Result<BSet> {
        self.same_carrier(other)?;
        Ok(*self & *other)
    }

    pub fn join(&self, other: &BSet) -> Result<BSet> {
        self.same_carrier(other)?;
        Ok(*self | *other)
    }

    pub fn neg(&self) -> BSet {
        !*self
    }

    /// `(b ∧ λ)(x) = b ∧ λ(x)`.
    pub fn scalar_meet(&self, b: BVal) -> BSet {
        *self & BSet::constant(self.n, b)
    }

    /// `(b → λ)(x) = b → λ(x)`.
    pub fn scalar_implies(&self, b: BVal) -> BSet {
        BSet::constant(self.n, b.neg()) | *self
    }

    /// Pointwise order.
    pub fn leq(&self, other: &BSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.tt.is_subset(other.tt) && self.ff.is_subset(other.ff)
    }

    /// Join of all values; `1` means the set is inhabited.
    pub fn height(&self) -> BVal {
        BVal::from_cuts(!self.tt.is_empty(), !self.ff.is_empty())
    }

    /// The inclusion degree `sub_X(self, other) = ⋀_x (self(x) → other(x))`.
    ///
    /// Computed through the cut criterion: the result is `>= tt` exactly when
    /// the tt-cuts are nested, and `>= ff` exactly when the ff-cuts are.
    pub fn sub(&self, other: &BSet) -> Result<BVal> {
        self.same_carrier(other)?;
        Ok(self.sub_degree(other))
    }

    pub(crate) fn sub_degree(&self, other: &BSet) -> BVal {
        BVal::from_cuts(self.tt.is_subset(other.tt), self.ff.is_subset(other.ff))
    }

    /// Every B-valued subset of an `n`-point carrier (`4^n` of them).
    pub fn all(n: usize) -> impl Iterator<Item = BSet> {
        assert!(n <= 16, "refusing to enumerate 4^{n} B-sets");
        let count = 1u64 << n;
        (0..count).flat_map(move |t| {
            (0..count).map(move |f| BSet::from_cuts_unchecked(n, PointSet(t), PointSet(f)))
        })
    }
}

impl BitAnd for BSet {
    type Output = BSet;
    fn bitand(self, rhs: BSet) -> BSet {
        assert_eq!(self.n, rhs.n, "carrier mismatch");
        BSet::from_cuts_unchecked(self.n, self.tt & rhs.tt, self.ff & rhs.ff)
    }
}

impl BitOr for BSet {
    type Output = BSet;
    fn bitor(self, rhs: BSet) -> BSet {
        assert_eq!(self.n, rhs.n, "carrier mismatch");
        BSet::from_cuts_unchecked(self.n, self.tt | rhs.tt, self.ff | rhs.ff)
    }
}

impl Not for BSet {
    type Output = BSet;
    fn not(self) -> BSet {
        BSet::from_cuts_unchecked(self.n, self.tt.complement(self.n), self.ff.complement(self.n))
    }
}
