//! DOT rendering of the 1-skeleton.
//!
//! Vertices become nodes and 1-elements become arrows from their negative
//! vertex to their positive vertex. Each 2-element becomes a dashed cluster
//! labelled with its source and target edge lists. Members of a highlighted
//! cell are drawn bold.

use std::fmt::Write;

use parity_complex::cells::Cell;
use parity_complex::{Complex, Sign};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn dot(c: &Complex, highlight: Option<&Cell>) -> String {
    let members = highlight.map(Cell::union);
    let bold = |x| {
        if members.as_ref().is_some_and(|m| m.contains(x)) {
            ", style=bold, color=blue"
        } else {
            ""
        }
    };
    let mut out = String::from("digraph complex {\n  rankdir=LR;\n");
    for x in c.ids().filter(|&x| c.dim(x) == 0) {
        let _ = writeln!(out, "  {} [shape=circle{}];", quote(c.name(x)), bold(x));
    }
    for x in c.ids().filter(|&x| c.dim(x) == 1) {
        let ends = |sign| c.face_set(x, sign).first().map(|v| c.name(v).to_string());
        if let (Some(from), Some(to)) = (ends(Sign::Minus), ends(Sign::Plus)) {
            let _ = writeln!(
                out,
                "  {} -> {} [label={}{}];",
                quote(&from),
                quote(&to),
                quote(c.name(x)),
                bold(x)
            );
        }
    }
    for x in c.ids().filter(|&x| c.dim(x) == 2) {
        let label = format!(
            "{}: {} => {}",
            c.name(x),
            c.names(c.minus(x)).join(" "),
            c.names(c.plus(x)).join(" ")
        );
        let _ = writeln!(
            out,
            "  subgraph {} {{\n    label={};\n    style=dashed;\n    {} [shape=point{}];\n  }}",
            quote(&format!("cluster_{}", c.name(x))),
            quote(&label),
            quote(&format!("2:{}", c.name(x))),
            bold(x)
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use parity_complex::generators::simplex;

    #[test]
    fn triangle() {
        let c = simplex(2).unwrap();
        let text = dot(&c, None);
        assert!(text.contains("\"0\" -> \"1\" [label=\"01\"];"));
        assert!(text.contains("label=\"012: 02 => 01 12\";"));
        assert_eq!(text.matches("->").count(), 3);
    }

    #[test]
    fn highlight_marks_members() {
        let c = simplex(2).unwrap();
        let cell = Cell::from_names(&c, &["0", "01"], &["1", "01"]).unwrap();
        let text = dot(&c, Some(&cell));
        assert!(text.contains("\"0\" [shape=circle, style=bold, color=blue];"));
        assert!(text.contains("\"2\" [shape=circle];"));
    }
}
