//! The line-oriented space file format.
//!
//! ```text
//! # comment
//! space T4X3
//! points: x y z
//! tt-opens: {} {x y} {z} {x y z}
//! ff-subbasis: {x} {y z}
//! ```
//!
//! Each component is given either by its full open family or by a subbasis.

use crate::bset::Carrier;
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::{BSpace, Side};
use crate::topology::FinTopology;

enum Family {
    Opens(Vec<PointSet>),
    Subbasis(Vec<PointSet>),
}

fn parse_sets(carrier: &Carrier, text: &str, line: usize) -> Result<Vec<PointSet>> {
    let err = |message: String| Error::Parse { line, message };
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('{') {
            return Err(err(format!("expected `{{`, found `{rest}`")));
        }
        let end = rest.find('}').ok_or_else(|| err("unclosed `{`".into()))?;
        let set = carrier.parse_set(&rest[..=end]).map_err(|e| match e {
            Error::Parse { message, .. } => err(message),
            other => err(other.to_string()),
        })?;
        out.push(set);
        rest = rest[end + 1..].trim_start();
    }
    Ok(out)
}

/// Names the first way `opens` fails to be a topology.
fn topology_failure(carrier: &Carrier, opens: &[PointSet]) -> Option<String> {
    let n = carrier.len();
    let has = |u: PointSet| opens.contains(&u);
    if !has(PointSet::EMPTY) {
        return Some("missing the empty set {}".into());
    }
    if !has(PointSet::full(n)) {
        return Some(format!("missing the whole carrier {}", carrier.render_set(PointSet::full(n))));
    }
    for &u in opens {
        for &v in opens {
            let show = |s| carrier.render_set(s);
            if !has(u | v) {
                return Some(format!("union of {} and {} is missing", show(u), show(v)));
            }
            if !has(u & v) {
                return Some(format!("intersection of {} and {} is missing", show(u), show(v)));
            }
        }
    }
    None
}

/// Parses a space file. Errors carry 1-based line numbers.
pub fn parse_space(text: &str) -> Result<BSpace> {
    let mut name: Option<String> = None;
    let mut carrier: Option<Carrier> = None;
    let mut families: [Option<(Family, usize)>; 2] = [None, None];
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let err = |message: String| Error::Parse { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("space") {
            if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
                return Err(err(format!("unknown directive `{content}`")));
            }
            let rest = rest.trim();
            if rest.is_empty() || rest.contains(char::is_whitespace) {
                return Err(err("expected `space NAME`".into()));
            }
            if name.is_some() {
                return Err(err("duplicate `space` line".into()));
            }
            name = Some(rest.to_string());
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| err(format!("expected `key: value`, found `{content}`")))?;
        let key = key.trim();
        match key {
            "points" => {
                if carrier.is_some() {
                    return Err(err("duplicate `points` line".into()));
                }
                let c = Carrier::new(value.split_whitespace()).map_err(|e| err(e.to_string()))?;
                if c.is_empty() {
                    return Err(err("no points given".into()));
                }
                carrier = Some(c);
            }
            "tt-opens" | "ff-opens" | "tt-subbasis" | "ff-subbasis" => {
                let c = carrier
                    .as_ref()
                    .ok_or_else(|| err("`points` must come before any open family".into()))?;
                let sets = parse_sets(c, value, line)?;
                let slot = if key.starts_with("tt") { 0 } else { 1 };
                if families[slot].is_some() {
                    return Err(err(format!("second family for the {} component", &key[..2])));
                }
                let fam = if key.ends_with("opens") {
                    Family::Opens(sets)
                } else {
                    Family::Subbasis(sets)
                };
                families[slot] = Some((fam, line));
            }
            _ => return Err(err(format!("unknown key `{key}`"))),
        }
    }
    let end = |message: &str| Error::Parse {
        line: last_line.max(1),
        message: message.into(),
    };
    let carrier = carrier.ok_or_else(|| end("missing `points` line"))?;
    let n = carrier.len();
    let mut tops = Vec::with_capacity(2);
    for (slot, side) in families.into_iter().zip(["tt", "ff"]) {
        let (fam, line) = slot.ok_or_else(|| end(&format!("missing `{side}-opens` or `{side}-subbasis`")))?;
        let t = match fam {
            Family::Opens(mut sets) => {
                sets.sort();
                sets.dedup();
                if let Some(why) = topology_failure(&carrier, &sets) {
                    return Err(Error::Parse {
                        line,
                        message: format!("{side}-opens is not a topology: {why}"),
                    });
                }
                FinTopology::from_opens(n, &sets)?
            }
            Family::Subbasis(sets) => FinTopology::generate(n, &sets)?,
        };
        tops.push(t);
    }
    let ff = tops.pop().expect("two components");
    let tt = tops.pop().expect("two components");
    BSpace::new(name.unwrap_or_else(|| "unnamed".into()), carrier, tt, ff)
}

/// Renders a space with explicit open families; `parse_space` inverts it.
pub fn render_space(space: &BSpace) -> String {
    let mut out = format!("space {}\npoints: {}\n", space.name, space.carrier.names().join(" "));
    for side in Side::BOTH {
        let key = match side {
            Side::Tt => "tt",
            Side::Ff => "ff",
        };
        let sets: Vec<String> = space
            .component(side)
            .opens()
            .iter()
            .map(|&u| space.carrier.render_set(u))
            .collect();
        out.push_str(&format!("{key}-opens: {}\n", sets.join(" ")));
    }
    out
}
