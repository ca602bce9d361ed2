//! Closed braid diagrams.

use super::diagram::{Arc, Crossing, LinkDiagram};
use crate::error::{Error, Result};
use crate::graph::Sign;

/// The closure of the braid word on `strands` strands. Letter `i` is the
/// generator `σ_i` (strand `i` crosses over strand `i + 1` going up) and
/// `-i` its inverse; strands are numbered from 1.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<LinkDiagram> {
    if strands == 0 {
        return Err(Error::InvalidDiagram("a braid needs at least one strand".into()));
    }
    let mut cur: Vec<Arc> = (1..=strands as Arc).collect();
    let mut next = strands as Arc + 1;
    let mut crossings = Vec::with_capacity(word.len());
    for (n, &g) in word.iter().enumerate() {
        let i = g.unsigned_abs() as usize;
        if i == 0 || i >= strands {
            return Err(Error::InvalidDiagram(format!("generator {g} needs more than {strands} strands")));
        }
        let (left, right) = (cur[i - 1], cur[i]);
        let (a, b) = (next, next + 1);
        next += 2;
        // Slots counterclockwise from the incoming under-arc; a and b are the
        // new arcs leaving at top-left and top-right.
        let (slots, sign) = if g > 0 {
            ([right, b, a, left], Sign::Positive)
        } else {
            ([left, right, b, a], Sign::Negative)
        };
        crossings.push(Crossing::new(n as u32 + 1, slots, sign));
        cur[i - 1] = a;
        cur[i] = b;
    }
    // Close up: the top arc at each position continues as the bottom one.
    let rename = |x: Arc| cur.iter().position(|&c| c == x).map_or(x, |p| p as Arc + 1);
    let crossings = crossings.into_iter().map(|c| Crossing { slots: c.slots.map(rename), ..c }).collect();
    let free_loops = (0..strands).filter(|&p| cur[p] == p as Arc + 1).map(|p| p as Arc + 1).collect();
    LinkDiagram::new(crossings, free_loops)
}
