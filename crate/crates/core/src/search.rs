//! Exhaustive search over all bitopological spaces on a few points.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::bset::Carrier;
use crate::error::{Error, Result};
use crate::separation::{audit_report, check, Axiom, AxiomReport, Violation};
use crate::sobriety::{component_criterion, is_b_sober, is_d_sober, is_join_sober};
use crate::space::BSpace;
use crate::topology::{FinTopology, Preorder};

pub const MAX_SEARCH_POINTS: usize = 4;

fn check_points(n: usize) -> Result<()> {
    if n > MAX_SEARCH_POINTS {
        return Err(Error::BoundExceeded {
            what: "search carrier",
            size: n,
            bound: MAX_SEARCH_POINTS,
        });
    }
    Ok(())
}

fn topologies(n: usize) -> Vec<FinTopology> {
    Preorder::enumerate(n).iter().map(FinTopology::from_preorder).collect()
}

fn build(n: usize, i: usize, j: usize, tops: &[FinTopology]) -> BSpace {
    BSpace::new(
        format!("S{n}-{i}-{j}"),
        Carrier::numbered("p", n),
        tops[i].clone(),
        tops[j].clone(),
    )
    .expect("same carrier")
}

/// Every bitopological space on `n` points, one per pair of preorders,
/// named `S<n>-<i>-<j>` and ordered by `(i, j)`.
pub fn all_spaces(n: usize) -> Vec<BSpace> {
    let tops = topologies(n);
    let k = tops.len();
    (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .map(|(i, j)| build(n, i, j, &tops))
        .collect()
}

/// Applies `f` to every space on `n` points, partitioned by the first
/// preorder and run in parallel; results come back in `(i, j)` order.
pub fn map_spaces<T: Send>(n: usize, f: impl Fn(&BSpace) -> T + Sync) -> Result<Vec<T>> {
    check_points(n)?;
    let tops = topologies(n);
    let k = tops.len();
    let parts: Vec<Vec<T>> = (0..k)
        .into_par_iter()
        .map(|i| (0..k).map(|j| f(&build(n, i, j, &tops))).collect())
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

pub fn classify_all(n: usize) -> Result<Vec<AxiomReport>> {
    map_spaces(n, AxiomReport::of)
}

#[derive(Clone, Debug)]
pub struct ImplicationAudit {
    pub points: usize,
    pub spaces: usize,
    pub violations: Vec<Violation>,
}

pub fn check_implications(n: usize) -> Result<ImplicationAudit> {
    let per_space = map_spaces(n, |s| audit_report(&AxiomReport::of(s)))?;
    let spaces = per_space.len();
    Ok(ImplicationAudit {
        points: n,
        spaces,
        violations: per_space.into_iter().flatten().collect(),
    })
}

/// Facts usable in a `--find` expression besides the axiom keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Axiom(Axiom),
    BSober,
    DSober,
    JoinSober,
    /// The component criterion for B-sobriety disagrees with the direct check.
    BSoberDiscrepancy,
}

impl Atom {
    pub fn parse(word: &str) -> Result<Atom> {
        Ok(match word {
            "b_sober" => Atom::BSober,
            "d_sober" => Atom::DSober,
            "join_sober" => Atom::JoinSober,
            "b_sober-discrepancy" => Atom::BSoberDiscrepancy,
            _ => Atom::Axiom(word.parse()?),
        })
    }

    pub fn eval(self, space: &BSpace) -> bool {
        match self {
            Atom::Axiom(a) => check(space, a),
            Atom::BSober => is_b_sober(space),
            Atom::DSober => is_d_sober(space),
            Atom::JoinSober => is_join_sober(space),
            Atom::BSoberDiscrepancy => component_criterion(space) != is_b_sober(space),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Axiom(a) => write!(f, "{}", a.key()),
            Atom::BSober => f.write_str("b_sober"),
            Atom::DSober => f.write_str("d_sober"),
            Atom::JoinSober => f.write_str("join_sober"),
            Atom::BSoberDiscrepancy => f.write_str("b_sober-discrepancy"),
        }
    }
}

/// Boolean combination of atoms: `&`, `|`, `!` and parentheses, with `!`
/// binding tightest and `&` tighter than `|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom(Atom),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Word(String),
    And,
    Or,
    Not,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let err = |m: String| Error::Parse { line: 1, message: m };
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '&' | '|' | '!' | '(' | ')' => {
                chars.next();
                out.push(match c {
                    '&' => Token::And,
                    '|' => Token::Or,
                    '!' => Token::Not,
                    '(' => Token::Open,
                    _ => Token::Close,
                });
            }
            c if c.is_alphanumeric() || c == '_' || c == '-' => {
                let mut w = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '-' {
                        w.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Word(w));
            }
            c => return Err(err(format!("unexpected character `{c}` in expression"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn err(&self, m: &str) -> Error {
        Error::Parse {
            line: 1,
            message: format!("{m} at token {}", self.pos + 1),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn or(&mut self) -> Result<Expr> {
        let mut left = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            left = Expr::Or(Box::new(left), Box::new(self.and()?));
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            left = Expr::And(Box::new(left), Box::new(self.unary()?));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Token::Not) => {
                self.pos += 1;
                Ok(Expr::Not(Box::new(self.unary()?)))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let e = self.or()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Token::Word(w)) => {
                self.pos += 1;
                Ok(Expr::Atom(Atom::parse(&w)?))
            }
            _ => Err(self.err("expected an axiom name, `!` or `(`")),
        }
    }
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let mut p = Parser {
            tokens: tokenize(text)?,
            pos: 0,
        };
        let e = p.or()?;
        if p.pos != p.tokens.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }

    fn eval_with(&self, space: &BSpace, memo: &mut HashMap<Atom, bool>) -> bool {
        match self {
            Expr::Atom(a) => *memo.entry(*a).or_insert_with(|| a.eval(space)),
            Expr::Not(e) => !e.eval_with(space, memo),
            Expr::And(a, b) => a.eval_with(space, memo) && b.eval_with(space, memo),
            Expr::Or(a, b) => a.eval_with(space, memo) || b.eval_with(space, memo),
        }
    }

    pub fn eval(&self, space: &BSpace) -> bool {
        self.eval_with(space, &mut HashMap::new())
    }
}

fn total_opens(s: &BSpace) -> usize {
    s.tt.opens().len() + s.ff.opens().len()
}

#[derive(Clone, Debug)]
pub struct FindResult {
    pub spaces: usize,
    pub matches: usize,
    /// Matching spaces with the fewest opens first, at most `limit` of them.
    pub witnesses: Vec<BSpace>,
}

pub fn find(n: usize, expr: &Expr, limit: usize) -> Result<FindResult> {
    let hits = map_spaces(n, |s| expr.eval(s).then(|| s.clone()))?;
    let spaces = hits.len();
    let mut found: Vec<BSpace> = hits.into_iter().flatten().collect();
    let matches = found.len();
    found.sort_by_key(total_opens);
    found.truncate(limit);
    Ok(FindResult {
        spaces,
        matches,
        witnesses: found,
    })
}

/// A space whose topologies are both finer than those of a Hausdorff space
/// yet which is not Hausdorff; the pair with fewest opens overall.
pub fn hausdorff_non_monotonicity(n: usize) -> Result<Option<(BSpace, BSpace)>> {
    let flags = map_spaces(n, |s| check(s, Axiom::Hausdorff))?;
    let spaces = all_spaces(n);
    let finer = |a: &BSpace, b: &BSpace| a.tt.is_coarser_than(&b.tt) && a.ff.is_coarser_than(&b.ff);
    let mut best: Option<(usize, usize, usize)> = None;
    for (c, coarse) in spaces.iter().enumerate() {
        if !flags[c] {
            continue;
        }
        for (f, fine) in spaces.iter().enumerate() {
            if !flags[f] && finer(coarse, fine) {
                let cost = total_opens(coarse) + total_opens(fine);
                if best.is_none_or(|(b, _, _)| cost < b) {
                    best = Some((cost, c, f));
                }
            }
        }
    }
    Ok(best.map(|(_, c, f)| (spaces[c].clone(), spaces[f].clone())))
}
