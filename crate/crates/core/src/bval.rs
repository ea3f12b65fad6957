//! The four-element Boolean algebra `{0, ff, tt, 1}`.
//!
//! `0` is the bottom, `1` the top, and `tt`/`ff` are an incomparable
//! complemented pair. Every operation is a lookup into a 4x4 (or 4-entry)
//! table indexed by [`BVal::index`].

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BVal {
    Bot,
    Ff,
    Tt,
    Top,
}

use BVal::{Bot, Ff, Top, Tt};

const MEET: [[BVal; 4]; 4] = [
    [Bot, Bot, Bot, Bot],
    [Bot, Ff, Bot, Ff],
    [Bot, Bot, Tt, Tt],
    [Bot, Ff, Tt, Top],
];

const JOIN: [[BVal; 4]; 4] = [
    [Bot, Ff, Tt, Top],
    [Ff, Ff, Top, Top],
    [Tt, Top, Tt, Top],
    [Top, Top, Top, Top],
];

const NEG: [BVal; 4] = [Top, Tt, Ff, Bot];

const LEQ: [[bool; 4]; 4] = [
    [true, true, true, true],
    [false, true, false, true],
    [false, false, true, true],
    [false, false, false, true],
];

impl BVal {
    /// All four values, bottom first.
    pub const ALL: [BVal; 4] = [Bot, Ff, Tt, Top];

    pub const fn index(self) -> usize {
        match self {
            Bot => 0,
            Ff => 1,
            Tt => 2,
            Top => 3,
        }
    }

    pub fn meet(self, other: BVal) -> BVal {
        MEET[self.index()][other.index()]
    }

    pub fn join(self, other: BVal) -> BVal {
        JOIN[self.index()][other.index()]
    }

    pub fn neg(self) -> BVal {
        NEG[self.index()]
    }

    /// `a -> b = !a | b`.
    pub fn implies(self, other: BVal) -> BVal {
        self.neg().join(other)
    }

    /// The diamond order.
    pub fn leq(self, other: BVal) -> bool {
        LEQ[self.index()][other.index()]
    }

    /// Builds a value from its two cut memberships: `tt` present, `ff` present.
    pub fn from_cuts(has_tt: bool, has_ff: bool) -> BVal {
        match (has_tt, has_ff) {
            (false, false) => Bot,
            (false, true) => Ff,
            (true, false) => Tt,
            (true, true) => Top,
        }
    }

    /// `self >= tt`.
    pub fn has_tt(self) -> bool {
        matches!(self, Tt | Top)
    }

    /// `self >= ff`.
    pub fn has_ff(self) -> bool {
        matches!(self, Ff | Top)
    }

    pub fn meet_all<I: IntoIterator<Item = BVal>>(iter: I) -> BVal {
        iter.into_iter().fold(Top, BVal::meet)
    }

    pub fn join_all<I: IntoIterator<Item = BVal>>(iter: I) -> BVal {
        iter.into_iter().fold(Bot, BVal::join)
    }

    pub fn token(self) -> &'static str {
        match self {
            Bot => "0",
            Ff => "ff",
            Tt => "tt",
            Top => "1",
        }
    }
}

impl fmt::Display for BVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.token())
    }
}

impl FromStr for BVal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "0" => Ok(Bot),
            "ff" => Ok(Ff),
            "tt" => Ok(Tt),
            "1" => Ok(Top),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown truth value `{other}`"),
            }),
        }
    }
}
