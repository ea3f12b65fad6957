//! Named example spaces with their expected classifications.

use crate::separation::Axiom;
use crate::space::BSpace;
use crate::topology::{FinTopology, TopSpace};
use crate::bset::Carrier;

/// The Sierpiński-like space on `{0, ff, tt, 1}`.
pub fn sierp() -> BSpace {
    BSpace::sierpinski()
}

/// Three points, `T4` yet neither pairwise regular nor pairwise normal.
pub fn t4x3() -> BSpace {
    BSpace::from_named_opens(
        "T4X3",
        &["x", "y", "z"],
        &[&[], &["x", "y"], &["z"], &["x", "y", "z"]],
        &[&[], &["x"], &["y", "z"], &["x", "y", "z"]],
    )
    .unwrap()
}

/// Three points, pairwise normal but not normal.
pub fn pnorm3() -> BSpace {
    BSpace::from_named_opens(
        "PNORM3",
        &["x", "y", "z"],
        &[&[], &["x"], &["x", "y", "z"]],
        &[&[], &["x"], &["x", "y"], &["x", "z"], &["x", "y", "z"]],
    )
    .unwrap()
}

/// `X.Y` for two 2-point discrete spaces `{a, b}`.
pub fn dot22() -> BSpace {
    let two = TopSpace::new(Carrier::new(["a", "b"]).unwrap(), FinTopology::discrete(2)).unwrap();
    let d = BSpace::dot_product(&two, &two).unwrap();
    d.with_carrier(Carrier::new(["aa", "ab", "ba", "bb"]).unwrap())
        .unwrap()
        .with_name("DOT22")
}

/// Two points carrying the left and right topologies of a 2-chain.
pub fn chain2() -> BSpace {
    BSpace::from_named_opens(
        "CHAIN2",
        &["0", "1"],
        &[&[], &["0"], &["0", "1"]],
        &[&[], &["1"], &["0", "1"]],
    )
    .unwrap()
}

pub const NAMES: [&str; 5] = ["SIERP", "T4X3", "PNORM3", "DOT22", "CHAIN2"];

pub fn by_name(name: &str) -> Option<BSpace> {
    match name.to_ascii_uppercase().as_str() {
        "SIERP" => Some(sierp()),
        "T4X3" => Some(t4x3()),
        "PNORM3" => Some(pnorm3()),
        "DOT22" => Some(dot22()),
        "CHAIN2" => Some(chain2()),
        _ => None,
    }
}

pub fn spaces() -> Vec<BSpace> {
    NAMES.iter().map(|n| by_name(n).unwrap()).collect()
}

/// Facts beyond the axiom table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fact {
    BSober,
    DSober,
}

impl Fact {
    pub fn key(self) -> &'static str {
        match self {
            Fact::BSober => "b_sober",
            Fact::DSober => "d_sober",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub space: BSpace,
    pub axioms: Vec<(Axiom, bool)>,
    pub facts: Vec<(Fact, bool)>,
}

pub fn entries() -> Vec<CatalogEntry> {
    use Axiom::*;
    vec![
        CatalogEntry {
            name: "SIERP",
            description: "the four truth values with the identity as a subbasis",
            space: sierp(),
            axioms: vec![(T0, true)],
            facts: vec![(Fact::BSober, true), (Fact::DSober, true)],
        },
        CatalogEntry {
            name: "T4X3",
            description: "three points, T4 but not pairwise regular or normal",
            space: t4x3(),
            axioms: vec![
                (T1, true),
                (T4, true),
                (T3, true),
                (Hausdorff, true),
                (PairwiseRegular, false),
                (PairwiseNormal, false),
                (PairwiseHausdorff, false),
            ],
            facts: vec![(Fact::BSober, false), (Fact::DSober, true)],
        },
        CatalogEntry {
            name: "PNORM3",
            description: "three points, pairwise normal but not normal",
            space: pnorm3(),
            axioms: vec![(PairwiseNormal, true), (Normal, false)],
            facts: vec![],
        },
        CatalogEntry {
            name: "DOT22",
            description: "product of two 2-point discrete spaces, one per component",
            space: dot22(),
            axioms: vec![(T1, true), (Hausdorff, true), (CwT0, false)],
            facts: vec![(Fact::BSober, true)],
        },
        CatalogEntry {
            name: "CHAIN2",
            description: "left and right topologies of a 2-chain",
            space: chain2(),
            axioms: vec![(JoinT1, true), (R0, false), (T1, false)],
            facts: vec![],
        },
    ]
}
