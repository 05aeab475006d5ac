//! The worked examples as embedded fixtures, each rendered as plain text.

use std::fmt::Write;

use crate::correspondences::{
    matching_to_oscillating, pair_to_vacillating, setpartition_to_hesitating, setpartition_to_vacillating, Matching,
    SetPartition,
};
use crate::error::{Error, Result};
use crate::fillings::Filling;
use crate::growth::{blow_up, label_diagram, Boundary, GrowthDiagram, OscillatingTableau};
use crate::insertion::{border_pair, insert_filling, Tableau};
use crate::local_rules::Variant;
use crate::shapes::FerrersShape;

pub const FIGURES: [&str; 10] = ["0", "2", "3", "4", "5", "6", "6a", "7", "8", "9"];

/// The 0-1 filling of the 16-cell shape used for the standard rules.
pub fn standard_example() -> Filling {
    Filling::from_ones(
        FerrersShape::from_word("RDRDDRDDRRD").unwrap(),
        &[(2, 2), (1, 4), (5, 1)],
    )
    .unwrap()
}

/// The 2 x 4 filling with entries 1, 0, 1, 1 (left column, bottom up) and
/// 1, 1, 0, 0 (right column).
pub fn running_example() -> Filling {
    Filling::from_ones(FerrersShape::rectangle(2, 4), &[(1, 1), (1, 3), (1, 4), (2, 1), (2, 2)]).unwrap()
}

/// The 2 x 2 filling with entries 1 and 2 in the left column and 2 at the
/// bottom right.
pub fn blow_up_example() -> Filling {
    Filling::new(FerrersShape::rectangle(2, 2), [(1, 1, 1), (1, 2, 2), (2, 1, 2)]).unwrap()
}

pub fn set_partition_example() -> SetPartition {
    "1 4 5 7 | 2 6 | 3".parse().unwrap()
}

pub fn pair_example() -> (SetPartition, Tableau) {
    (
        "1 | 2 6 | 3 | 4 7 | 5".parse().unwrap(),
        Tableau::new(vec![vec![1, 7], vec![5]]).unwrap(),
    )
}

pub fn matching_example() -> Matching {
    "1-4 2-6 3-5".parse().unwrap()
}

/// The corner labels, top row first.
pub fn render_labels(d: &GrowthDiagram) -> String {
    let shape = d.shape();
    let mut rows = Vec::new();
    for y in (0..=shape.rows()).rev() {
        let labels: Vec<String> = (0..=shape.cols())
            .filter(|&x| shape.has_corner(x, y))
            .map(|x| d.label(x, y).to_string())
            .collect();
        rows.push(labels);
    }
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    rows.iter()
        .map(|r| r.iter().map(|l| format!("{l:>width$}")).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn tableau_line(name: &str, t: &Tableau) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    format!("{name}: {}", rows.join(" / "))
}

fn diagram_text(title: &str, f: &Filling, variant: Variant, out: &mut String) -> Result<GrowthDiagram> {
    let d = label_diagram(f, variant, &Boundary::empty(f.shape()))?;
    writeln!(out, "{title}").unwrap();
    writeln!(out, "variant: {}", variant.name()).unwrap();
    writeln!(out, "shape: {}", f.shape().word_string()).unwrap();
    writeln!(out, "filling:\n{f}").unwrap();
    writeln!(out, "labels:\n{}", render_labels(&d)).unwrap();
    writeln!(out, "border: {}", d.border_tableau().compact()).unwrap();
    Ok(d)
}

fn insertion_text(d: &GrowthDiagram, out: &mut String) -> Result<()> {
    let (p, q) = border_pair(d)?;
    let (ip, iq) = insert_filling(d.filling(), d.variant())?;
    writeln!(out, "{}", tableau_line("P", &p)).unwrap();
    writeln!(out, "{}", tableau_line("Q", &q)).unwrap();
    writeln!(out, "insertion agrees: {}", (p, q) == (ip, iq)).unwrap();
    Ok(())
}

fn sequence_text(title: &str, input: &str, t: &OscillatingTableau, out: &mut String) {
    writeln!(out, "{title}").unwrap();
    writeln!(out, "input: {input}").unwrap();
    writeln!(out, "sequence: {}", t.compact()).unwrap();
}

/// Text output for one figure id.
pub fn render(id: &str) -> Result<String> {
    let mut out = String::new();
    match id {
        "0" => {
            diagram_text(
                "standard growth diagram",
                &standard_example(),
                Variant::Standard,
                &mut out,
            )?;
        }
        "2" => {
            let (p, t) = pair_example();
            let v = pair_to_vacillating(&p, &t)?;
            sequence_text(
                "set partition with tableau",
                &format!("{p} ; {}", tableau_line("T", &t)),
                &v,
                &mut out,
            );
        }
        "3" => {
            let p = set_partition_example();
            sequence_text(
                "vacillating tableau",
                &p.to_string(),
                &setpartition_to_vacillating(&p),
                &mut out,
            );
        }
        "4" => {
            let p = set_partition_example();
            sequence_text(
                "hesitating tableau",
                &p.to_string(),
                &setpartition_to_hesitating(&p),
                &mut out,
            );
        }
        "5" => {
            let m = matching_example();
            sequence_text(
                "oscillating tableau",
                &m.to_string(),
                &matching_to_oscillating(&m),
                &mut out,
            );
        }
        "6" | "7" | "8" | "9" => {
            let variant = match id {
                "6" => Variant::Rsk,
                "7" => Variant::RskPrime,
                "8" => Variant::DualRsk,
                _ => Variant::DualRskPrime,
            };
            let d = diagram_text(
                "growth diagram of the running example",
                &running_example(),
                variant,
                &mut out,
            )?;
            insertion_text(&d, &mut out)?;
        }
        "6a" => {
            let f = blow_up_example();
            let d = diagram_text("blow-up of an arbitrary filling", &f, Variant::Rsk, &mut out)?;
            let (refined, _) = blow_up(&f, Variant::Rsk)?;
            let big = label_diagram(&refined, Variant::Standard, &Boundary::empty(refined.shape()))?;
            writeln!(out, "blown-up filling:\n{refined}").unwrap();
            writeln!(out, "blown-up labels:\n{}", render_labels(&big)).unwrap();
            let corner = d.label(d.shape().cols(), d.shape().rows());
            writeln!(out, "top-right corner: {corner}").unwrap();
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown figure {other:?}; known: {}",
                FIGURES.join(", ")
            )))
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_figure_renders() {
        for id in FIGURES {
            let text = render(id).unwrap();
            assert!(!text.contains("insertion agrees: false"), "{id}\n{text}");
        }
        assert!(render("11").is_err());
    }

    #[test]
    fn rendered_corners() {
        assert!(render("9").unwrap().contains("2111"));
        assert!(render("6a").unwrap().contains("top-right corner: 32"));
    }
}
