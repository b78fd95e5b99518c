//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes plain strings and returns a JSON string, or an error
//! message that becomes a JS exception. The same functions run natively, so
//! they are tested without a browser.

use std::f64::consts::PI;
use std::fmt::Write;

use parity_complex::axioms::check_all;
use parity_complex::cells::{atomic_element, enumerate_cells, Cell, RankMode};
use parity_complex::excision::{decompose, evaluate, ExcisionOptions};
use parity_complex::generators::{Caps, Family, GeneratorSpec};
use parity_complex::io::CellDocument;
use parity_complex::{Complex, Sign};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Smaller than the library caps so that drawings stay legible.
const DEMO_CAPS: Caps = Caps {
    simplex: 4,
    cube: 3,
    glob: 6,
};

const ENUMERATION_LIMIT: usize = 16;

fn build(family: &str, n: usize) -> Result<Complex, String> {
    let family: Family = family.parse().map_err(|e| format!("{e}"))?;
    GeneratorSpec { family, n }
        .build(&DEMO_CAPS)
        .map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("demo payloads serialize")
}

#[derive(Serialize)]
struct AxiomLine {
    axiom: String,
    passed: bool,
    witnesses: usize,
}

#[derive(Serialize)]
struct Description {
    elements: usize,
    per_dimension: Vec<usize>,
    axioms: Vec<AxiomLine>,
    svg: String,
}

/// Element counts, axiom verdicts and an SVG drawing of the 1-skeleton.
#[wasm_bindgen]
pub fn describe(family: &str, n: usize) -> Result<String, String> {
    let c = build(family, n)?;
    let top = c.max_dim().unwrap_or(0);
    let per_dimension = (0..=top)
        .map(|k| c.ids().filter(|&x| c.dim(x) == k).count())
        .collect();
    let axioms = check_all(&c)
        .iter()
        .map(|r| AxiomLine {
            axiom: r.axiom().to_string(),
            passed: r.passed(),
            witnesses: r.witnesses().len(),
        })
        .collect();
    Ok(to_json(&Description {
        elements: c.len(),
        per_dimension,
        axioms,
        svg: skeleton_svg(&c),
    }))
}

#[derive(Serialize)]
struct CellLine {
    m: Vec<String>,
    p: Vec<String>,
    dim: usize,
    rank: usize,
    atom: Option<String>,
}

/// Every cell of the complex, by brute force.
#[wasm_bindgen]
pub fn list_cells(family: &str, n: usize) -> Result<String, String> {
    let c = build(family, n)?;
    let cells = enumerate_cells(&c, ENUMERATION_LIMIT).map_err(|e| e.to_string())?;
    let lines: Vec<CellLine> = cells
        .iter()
        .map(|cell| {
            let doc = CellDocument::from_cell(&c, cell);
            CellLine {
                m: doc.m,
                p: doc.p,
                dim: cell.dim(&c),
                rank: cell.rank(RankMode::Intersection),
                atom: atomic_element(&c, cell).map(|x| c.name(x).to_string()),
            }
        })
        .collect();
    Ok(to_json(&lines))
}

#[derive(Serialize)]
struct Decomposition {
    tree: String,
    leaves: Vec<String>,
    depth: usize,
    verified: bool,
}

/// Factors the cell given by two comma-separated id lists into atoms.
#[wasm_bindgen]
pub fn decompose_cell(family: &str, n: usize, m: &str, p: &str) -> Result<String, String> {
    let c = build(family, n)?;
    let ids = |s: &str| -> Vec<String> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(String::from)
            .collect()
    };
    let cell = Cell::from_names(&c, &ids(m), &ids(p)).map_err(|e| e.to_string())?;
    let tree = decompose(&c, &cell, &ExcisionOptions::default()).map_err(|e| e.to_string())?;
    let result = Decomposition {
        tree: tree.display(&c).to_string(),
        leaves: tree
            .leaves()
            .iter()
            .map(|&x| c.name(x).to_string())
            .collect(),
        depth: tree.depth(),
        verified: evaluate(&c, &tree).is_ok_and(|back| back == cell),
    };
    Ok(to_json(&result))
}

const SIZE: f64 = 320.0;
const RADIUS: f64 = 120.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Vertices on a circle, edges as arrows; parallel edges bend apart.
fn skeleton_svg(c: &Complex) -> String {
    let vertices: Vec<_> = c.ids().filter(|&x| c.dim(x) == 0).collect();
    let centre = SIZE / 2.0;
    let at = |i: usize| {
        let angle = 2.0 * PI * i as f64 / vertices.len().max(1) as f64 - PI / 2.0;
        (centre + RADIUS * angle.cos(), centre + RADIUS * angle.sin())
    };
    let index = |v| vertices.iter().position(|&w| w == v);
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE} {SIZE}\">\
         <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"18\" refY=\"5\" \
         markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">\
         <path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>"
    );
    let mut seen: Vec<(usize, usize)> = Vec::new();
    for e in c.ids().filter(|&x| c.dim(x) == 1) {
        let end = |sign| c.face_set(e, sign).first().and_then(index);
        let (Some(a), Some(b)) = (end(Sign::Minus), end(Sign::Plus)) else {
            continue;
        };
        let key = (a.min(b), a.max(b));
        let k = seen.iter().filter(|&&s| s == key).count();
        seen.push(key);
        let ((x1, y1), (x2, y2)) = (at(a), at(b));
        let bend = if k == 0 {
            0.0
        } else {
            40.0 * k.div_ceil(2) as f64 * if k % 2 == 1 { 1.0 } else { -1.0 }
        };
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        let len = ((x2 - x1).powi(2) + (y2 - y1).powi(2)).sqrt().max(1.0);
        let (cx, cy) = (mx - bend * (y2 - y1) / len, my + bend * (x2 - x1) / len);
        let _ = write!(
            out,
            "<path d=\"M{x1:.1},{y1:.1} Q{cx:.1},{cy:.1} {x2:.1},{y2:.1}\" fill=\"none\" \
             stroke=\"#345\" marker-end=\"url(#arrow)\"/>\
             <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" fill=\"#a33\">{}</text>",
            (mx + cx) / 2.0,
            (my + cy) / 2.0,
            escape(c.name(e))
        );
    }
    for (i, &v) in vertices.iter().enumerate() {
        let (x, y) = at(i);
        let _ = write!(
            out,
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"11\" fill=\"#fff\" stroke=\"#345\"/>\
             <text x=\"{x:.1}\" y=\"{:.1}\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
            y + 4.0,
            escape(c.name(v))
        );
    }
    out.push_str("</svg>");
    out
}
