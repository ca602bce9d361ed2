//! Oriented link diagrams in planar-diagram (PD) notation.
//!
//! A crossing `X i j k l` lists the four arcs counterclockwise, starting from
//! the incoming under-arc, so the under strand runs `i -> k`. The over
//! strand runs `l -> j` at a positive crossing and `j -> l` at a negative one.
//!
//! Text format, one item per line (`#` starts a comment):
//!
//! ```text
//! X 1 4 2 5 +        crossing; the sign is optional and inferred if omitted
//! X 5 2 6 3 - id=7   explicit crossing id (default: ordinal of the crossing)
//! O 9                a crossingless unknotted component on arc 9
//! S E e1 : 1 2 3     names the Seifert circle through arcs 1 2 3
//! ```
//!
//! KnotTheory-style input such as `PD[X[1,4,2,5], X[3,6,4,1], ...]` is also
//! accepted; brackets and commas act as whitespace.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, ParseError, Result};
use crate::graph::{Color, Sign};

pub type Arc = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Crossing {
    pub id: u32,
    pub slots: [Arc; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn new(id: u32, slots: [Arc; 4], sign: Sign) -> Self {
        Self { id, slots, sign }
    }

    /// Slot indices `(in, out)` of the over strand.
    fn over_slots(&self) -> (usize, usize) {
        match self.sign {
            Sign::Positive => (3, 1),
            Sign::Negative => (1, 3),
        }
    }

    /// Whether slot `k` is where a strand enters the crossing.
    pub fn is_incoming(&self, k: usize) -> bool {
        k == 0 || k == self.over_slots().0
    }

    /// `(in, out)` arcs of the under strand.
    pub fn under(&self) -> (Arc, Arc) {
        (self.slots[0], self.slots[2])
    }

    /// `(in, out)` arcs of the over strand.
    pub fn over(&self) -> (Arc, Arc) {
        let (i, o) = self.over_slots();
        (self.slots[i], self.slots[o])
    }

    /// The same crossing with the other strand on top.
    pub fn switched(&self) -> Crossing {
        let [i, j, k, l] = self.slots;
        match self.sign {
            Sign::Positive => Crossing::new(self.id, [l, i, j, k], Sign::Negative),
            Sign::Negative => Crossing::new(self.id, [j, k, l, i], Sign::Positive),
        }
    }

    /// The `(in, out)` pairs joined by the orientation-preserving smoothing.
    pub fn smoothing(&self) -> [(Arc, Arc); 2] {
        let [i, j, k, l] = self.slots;
        match self.sign {
            Sign::Positive => [(i, j), (l, k)],
            Sign::Negative => [(i, l), (j, k)],
        }
    }
}

/// A name and color class for the Seifert circle through `arcs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircleLabel {
    pub color: Color,
    pub label: String,
    pub arcs: Vec<Arc>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: Vec<Arc>,
    circle_labels: Vec<CircleLabel>,
}

impl LinkDiagram {
    /// Validates that every arc has one incoming and one outgoing end.
    pub fn new(crossings: Vec<Crossing>, free_loops: Vec<Arc>) -> Result<Self> {
        let bad = |m: String| Error::InvalidDiagram(m);
        if crossings.is_empty() && free_loops.is_empty() {
            return Err(bad("empty diagram".into()));
        }
        let mut ids = BTreeSet::new();
        for c in &crossings {
            if !ids.insert(c.id) {
                return Err(bad(format!("duplicate crossing id {}", c.id)));
            }
        }
        let mut ends: BTreeMap<Arc, (usize, usize)> = BTreeMap::new();
        for c in &crossings {
            for k in 0..4 {
                let e = ends.entry(c.slots[k]).or_default();
                if c.is_incoming(k) {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
        for (arc, (i, o)) in &ends {
            if (*i, *o) != (1, 1) {
                return Err(bad(format!(
                    "arc {arc} enters {i} and leaves {o} crossings; crossing signs or slot order are inconsistent"
                )));
            }
        }
        let mut seen = BTreeSet::new();
        for a in &free_loops {
            if ends.contains_key(a) || !seen.insert(*a) {
                return Err(bad(format!("free loop arc {a} is used elsewhere")));
            }
        }
        Ok(Self { crossings, free_loops, circle_labels: Vec::new() })
    }

    pub fn with_circle_labels(mut self, labels: Vec<CircleLabel>) -> Self {
        self.circle_labels = labels;
        self
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> &[Arc] {
        &self.free_loops
    }

    pub fn circle_labels(&self) -> &[CircleLabel] {
        &self.circle_labels
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossing_index(&self, id: u32) -> Option<usize> {
        self.crossings.iter().position(|c| c.id == id)
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.as_i8() as i64).sum()
    }

    /// All arcs, sorted.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut out: Vec<Arc> = self.crossings.iter().flat_map(|c| c.slots).chain(self.free_loops.iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// For each arc, the arc that follows it along its strand.
    pub fn successors(&self) -> HashMap<Arc, Arc> {
        let mut next = HashMap::new();
        for c in &self.crossings {
            let (ui, uo) = c.under();
            let (oi, oo) = c.over();
            next.insert(ui, uo);
            next.insert(oi, oo);
        }
        for a in &self.free_loops {
            next.insert(*a, *a);
        }
        next
    }

    /// Link components as arc sequences, each starting at its smallest arc,
    /// ordered by that arc.
    pub fn components(&self) -> Vec<Vec<Arc>> {
        let next = self.successors();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for a in self.arcs() {
            if seen.contains(&a) {
                continue;
            }
            let mut comp = vec![a];
            seen.insert(a);
            let mut b = next[&a];
            while b != a {
                seen.insert(b);
                comp.push(b);
                b = next[&b];
            }
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// The diagram with crossing `idx` switched.
    pub fn switched(&self, idx: usize) -> LinkDiagram {
        let mut d = self.clone();
        d.crossings[idx] = d.crossings[idx].switched();
        d
    }

    /// The diagram with crossing `idx` forced to `sign`.
    pub fn with_crossing_sign(&self, idx: usize, sign: Sign) -> LinkDiagram {
        if self.crossings[idx].sign == sign {
            self.clone()
        } else {
            self.switched(idx)
        }
    }

    /// The diagram with crossing `idx` smoothed respecting orientation. Arcs
    /// joined by the smoothing take the smaller label; a strand that closes
    /// up without crossings becomes a free loop. Circle labels are dropped.
    pub fn smoothed(&self, idx: usize) -> LinkDiagram {
        let c = self.crossings[idx];
        let mut rep: HashMap<Arc, Arc> = HashMap::new();
        let find = |rep: &HashMap<Arc, Arc>, mut a: Arc| {
            while let Some(&b) = rep.get(&a) {
                a = b;
            }
            a
        };
        let mut free_loops = self.free_loops.clone();
        for (a, b) in c.smoothing() {
            let (ra, rb) = (find(&rep, a), find(&rep, b));
            if ra == rb {
                free_loops.push(ra);
            } else {
                rep.insert(ra.max(rb), ra.min(rb));
            }
        }
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, x)| Crossing { slots: x.slots.map(|a| find(&rep, a)), ..*x })
            .collect();
        free_loops.sort_unstable();
        LinkDiagram { crossings, free_loops, circle_labels: Vec::new() }
    }

    /// The same link with every crossing switched.
    pub fn mirror(&self) -> LinkDiagram {
        LinkDiagram {
            crossings: self.crossings.iter().map(Crossing::switched).collect(),
            ..self.clone()
        }
    }

    /// Groups of crossing indices connected through arcs, plus one empty
    /// group per free loop; the diagram is split along these.
    pub fn pieces(&self) -> Vec<LinkDiagram> {
        let n = self.crossings.len();
        let mut uf = crate::graph::UnionFind::new(n);
        let mut first: HashMap<Arc, usize> = HashMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            for a in c.slots {
                if let Some(&j) = first.get(&a) {
                    uf.union(j, k);
                } else {
                    first.insert(a, k);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<Crossing>> = BTreeMap::new();
        for k in 0..n {
            groups.entry(uf.find(k)).or_default().push(self.crossings[k]);
        }
        let mut out: Vec<LinkDiagram> = groups
            .into_values()
            .map(|crossings| LinkDiagram { crossings, free_loops: Vec::new(), circle_labels: Vec::new() })
            .collect();
        for a in &self.free_loops {
            out.push(LinkDiagram { crossings: Vec::new(), free_loops: vec![*a], circle_labels: Vec::new() });
        }
        out
    }

    /// Checks that the 4-valent graph of each connected piece is drawn in
    /// the sphere: tracing faces must give `F = c + 2`.
    pub fn check_planar(&self) -> Result<()> {
        let mut other: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        let mut first: HashMap<Arc, (usize, usize)> = HashMap::new();
        for (x, c) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                if let Some(d) = first.remove(&c.slots[s]) {
                    other.insert(d, (x, s));
                    other.insert((x, s), d);
                } else {
                    first.insert(c.slots[s], (x, s));
                }
            }
        }
        let mut seen = BTreeSet::new();
        let mut faces = 0usize;
        for x in 0..self.crossings.len() {
            for s in 0..4 {
                if seen.contains(&(x, s)) {
                    continue;
                }
                faces += 1;
                let mut d = (x, s);
                while seen.insert(d) {
                    let (y, t) = other[&d];
                    d = (y, (t + 1) % 4);
                }
            }
        }
        let pieces = self.pieces().iter().filter(|p| !p.crossings.is_empty()).count();
        let expected = self.crossings.len() + 2 * pieces;
        if faces == expected {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(format!("not planar: {faces} faces, expected {expected}")))
        }
    }

    pub fn to_pd_text(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.crossings.iter().enumerate() {
            let [i, j, kk, l] = c.slots;
            write!(out, "X {i} {j} {kk} {l} {}", c.sign.symbol()).unwrap();
            if c.id as usize != k + 1 {
                write!(out, " id={}", c.id).unwrap();
            }
            out.push('\n');
        }
        for a in &self.free_loops {
            writeln!(out, "O {a}").unwrap();
        }
        for s in &self.circle_labels {
            let arcs: Vec<String> = s.arcs.iter().map(|a| a.to_string()).collect();
            writeln!(out, "S {:?} {} : {}", s.color, s.label, arcs.join(" ")).unwrap();
        }
        out
    }
}

#[derive(Debug)]
struct RawCrossing {
    id: u32,
    slots: [Arc; 4],
    sign: Option<Sign>,
    line: usize,
    column: usize,
}

fn tokens(line: &str) -> Vec<(usize, &str)> {
    let line = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        let sep = ch.is_whitespace() || matches!(ch, ',' | '[' | ']' | '(' | ')' | ':');
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

/// Parses PD text. Missing signs are inferred from the arc orientations.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let mut raw: Vec<RawCrossing> = Vec::new();
    let mut free_loops = Vec::new();
    let mut labels = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let ln = ln + 1;
        let toks = tokens(line);
        let err = |k: usize, m: String| -> Error {
            let col = toks.get(k).map_or(line.chars().count() + 1, |t| line[..t.0].chars().count() + 1);
            ParseError::new(ln, col, m).into()
        };
        let arc = |k: usize| -> Result<Arc> {
            let (_, t) = toks.get(k).ok_or_else(|| err(k, "expected an arc label".into()))?;
            t.parse().map_err(|_| err(k, format!("expected an arc label, found `{t}`")))
        };
        let mut k = 0;
        while k < toks.len() {
            match toks[k].1 {
                "PD" => k += 1,
                "X" => {
                    let slots = [arc(k + 1)?, arc(k + 2)?, arc(k + 3)?, arc(k + 4)?];
                    let column = line[..toks[k].0].chars().count() + 1;
                    let mut c = RawCrossing { id: raw.len() as u32 + 1, slots, sign: None, line: ln, column };
                    k += 5;
                    if let Some(&(_, t)) = toks.get(k) {
                        match t {
                            "+" => (c.sign, k) = (Some(Sign::Positive), k + 1),
                            "-" => (c.sign, k) = (Some(Sign::Negative), k + 1),
                            _ => {}
                        }
                    }
                    if let Some(id) = toks.get(k).and_then(|t| t.1.strip_prefix("id=")) {
                        c.id = id.parse().map_err(|_| err(k, format!("bad crossing id `{id}`")))?;
                        k += 1;
                    }
                    raw.push(c);
                }
                "O" => {
                    k += 1;
                    let start = k;
                    while let Some(a) = toks.get(k).and_then(|t| t.1.parse::<Arc>().ok()) {
                        free_loops.push(a);
                        k += 1;
                    }
                    if k == start {
                        return Err(err(k, "expected an arc label after `O`".into()));
                    }
                }
                "S" => {
                    let color = match toks.get(k + 1).map(|t| t.1) {
                        Some("E") => Color::E,
                        Some("V") => Color::V,
                        _ => return Err(err(k + 1, "expected `E` or `V`".into())),
                    };
                    let label = toks.get(k + 2).ok_or_else(|| err(k + 2, "expected a circle label".into()))?.1;
                    let mut arcs = Vec::new();
                    for j in k + 3..toks.len() {
                        arcs.push(arc(j)?);
                    }
                    labels.push(CircleLabel { color, label: label.to_string(), arcs });
                    k = toks.len();
                }
                t => return Err(err(k, format!("unexpected `{t}`"))),
            }
        }
    }
    let crossings = infer_signs(raw)?;
    Ok(LinkDiagram::new(crossings, free_loops)?.with_circle_labels(labels))
}

/// Fills in missing signs so that every arc has one incoming and one
/// outgoing end. Under strands are fixed by the slot order; each over strand
/// is propagated from the other end of its arcs. Where nothing forces a
/// direction (a component that is never under), the PD numbering
/// convention decides: the over strand runs towards the successor label.
fn infer_signs(raw: Vec<RawCrossing>) -> Result<Vec<Crossing>> {
    let mut signs: Vec<Option<Sign>> = raw.iter().map(|c| c.sign).collect();
    // role[arc] = (incoming count, outgoing count) from decided slots.
    loop {
        let mut roles: HashMap<Arc, (u8, u8)> = HashMap::new();
        for (c, s) in raw.iter().zip(&signs) {
            roles.entry(c.slots[0]).or_default().0 += 1;
            roles.entry(c.slots[2]).or_default().1 += 1;
            if let Some(s) = s {
                let x = Crossing::new(c.id, c.slots, *s);
                let (i, o) = x.over();
                roles.entry(i).or_default().0 += 1;
                roles.entry(o).or_default().1 += 1;
            }
        }
        let mut changed = false;
        for (c, s) in raw.iter().zip(signs.iter_mut()) {
            if s.is_some() {
                continue;
            }
            let [_, j, _, l] = c.slots;
            let (ji, jo) = roles.get(&j).copied().unwrap_or_default();
            let (li, lo) = roles.get(&l).copied().unwrap_or_default();
            // Positive: l enters, j leaves.
            if ji > 0 || lo > 0 {
                *s = Some(Sign::Positive);
            } else if jo > 0 || li > 0 {
                *s = Some(Sign::Negative);
            } else {
                continue;
            }
            changed = true;
            break;
        }
        if changed {
            continue;
        }
        let Some(k) = signs.iter().position(Option::is_none) else { break };
        let [_, j, _, l] = raw[k].slots;
        let positive = j == l + 1 || (l > j + 1);
        signs[k] = Some(if positive { Sign::Positive } else { Sign::Negative });
    }
    raw.iter()
        .zip(signs)
        .map(|(c, s)| {
            let s = s.expect("all signs decided");
            if c.slots.iter().filter(|a| c.slots.iter().filter(|b| a == b).count() > 2).count() > 0 {
                return Err(ParseError::new(c.line, c.column, "an arc appears more than twice").into());
            }
            Ok(Crossing::new(c.id, c.slots, s))
        })
        .collect()
}
