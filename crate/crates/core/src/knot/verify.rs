//! Both sides of the formula for the top of the HOMFLY polynomial.

use serde::Serialize;

use super::diagram::LinkDiagram;
use super::homfly::{homfly_top_of, homfly_with_budget, morton_bound, DEFAULT_CROSSING_BUDGET};
use super::seifert::seifert_decompose;
use crate::error::Result;
use crate::graph::GraphJson;
use crate::poly::{IntPolynomial, LaurentPoly2};
use crate::signed::signed_interior;

/// The coefficient of `z^(c - s + 1)` in `P_D`, next to
/// `v^(|E₊| - |E₋| - (|E| + |V|) + 1) · I⁺_G(v²)` for the Seifert graph `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainTheoremReport {
    pub format: u32,
    pub crossings: usize,
    pub seifert_circles: usize,
    pub components: usize,
    pub morton_bound: i64,
    pub homfly: LaurentPoly2,
    pub max_z_degree: Option<i64>,
    pub top: LaurentPoly2,
    pub seifert_graph: GraphJson,
    pub positive_edges: usize,
    pub negative_edges: usize,
    pub exponent: i64,
    pub signed_interior: IntPolynomial,
    pub predicted_top: LaurentPoly2,
    pub equal: bool,
    /// Whether the `z`-degree reaches Morton's bound.
    pub sharp: bool,
}

pub fn verify_main_theorem(d: &LinkDiagram) -> Result<MainTheoremReport> {
    verify_main_theorem_with_budget(d, DEFAULT_CROSSING_BUDGET)
}

pub fn verify_main_theorem_with_budget(d: &LinkDiagram, max_crossings: usize) -> Result<MainTheoremReport> {
    let p = homfly_with_budget(d, max_crossings)?;
    let bound = morton_bound(d);
    let top = homfly_top_of(d, &p)?;

    let s = seifert_decompose(d)?;
    let g = &s.graph;
    let pos = g.positive_edges().len();
    let neg = g.negative_edges().len();
    let exponent = pos as i64 - neg as i64 - g.vertex_count() as i64 + 1;
    let i_plus = signed_interior(g)?;
    let predicted_top = LaurentPoly2::from_poly_in_v_squared(&i_plus, exponent);

    Ok(MainTheoremReport {
        format: 1,
        crossings: d.crossing_count(),
        seifert_circles: s.circle_count(),
        components: d.component_count(),
        morton_bound: bound,
        max_z_degree: p.max_z_degree(),
        sharp: p.max_z_degree() == Some(bound),
        homfly: p,
        equal: top == predicted_top,
        top,
        seifert_graph: GraphJson::from_graph(g, None),
        positive_edges: pos,
        negative_edges: neg,
        exponent,
        signed_interior: i_plus,
        predicted_top,
    })
}
