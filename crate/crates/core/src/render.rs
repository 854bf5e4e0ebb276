//! Text Young diagrams for traces: one line per part, `■` per cell.

use crate::andrews12::Triple;
use crate::macmahon::MacPair;
use crate::partitions::Partition;
use crate::telescope::MarkedObject;

pub trait Diagram {
    /// Rendered lines; empty when there is nothing to draw.
    fn diagram_lines(&self) -> Vec<String>;

    fn diagram(&self) -> String {
        let lines = self.diagram_lines();
        if lines.is_empty() {
            "(empty)".to_string()
        } else {
            lines.join("\n")
        }
    }
}

fn row(len: u32) -> String {
    if len == 0 {
        "(0-row)".to_string()
    } else {
        "■".repeat(len as usize)
    }
}

fn labelled(label: &str, rows: impl IntoIterator<Item = String>) -> Vec<String> {
    let pad = " ".repeat(label.chars().count() + 2);
    rows.into_iter()
        .enumerate()
        .map(|(i, r)| if i == 0 { format!("{label}: {r}") } else { format!("{pad}{r}") })
        .collect()
}

fn partition_rows(p: &Partition) -> Vec<String> {
    p.parts().iter().map(|&x| row(x)).collect()
}

impl Diagram for Triple {
    fn diagram_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (label, part) in [("τ", &self.tau), ("λ", &self.lambda), ("μ", &self.mu)] {
            out.extend(labelled(label, partition_rows(part)));
        }
        out
    }
}

impl Diagram for MacPair {
    fn diagram_lines(&self) -> Vec<String> {
        let k = self.side.k();
        let mut square: Vec<String> = (0..self.side.rows()).map(|_| row(self.side.rows())).collect();
        if k < 0 {
            if let Some(first) = square.first_mut() {
                first.push_str(" (negative)");
            }
        }
        let mut out = labelled(&format!("λ=S_{k}"), square);
        out.extend(labelled("μ", partition_rows(&self.mu)));
        out
    }
}

impl<T: Diagram> Diagram for MarkedObject<T> {
    fn diagram_lines(&self) -> Vec<String> {
        self.payload.diagram_lines()
    }

    fn diagram(&self) -> String {
        let body = self.payload.diagram();
        if !self.is_marked() {
            return body;
        }
        let tag = if self.z_shift == 0 {
            format!("[marker {}]", self.marker)
        } else {
            format!("[marker {} z^{}]", self.marker, self.z_shift)
        };
        format!("{tag} {body}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn staircase_with_zero_row() {
        let t = Triple::new(p(&[1, 0]), p(&[]), p(&[]));
        assert_eq!(t.diagram(), "τ: ■\n   (0-row)");
    }

    #[test]
    fn lambda_rows() {
        let t = Triple::new(p(&[]), p(&[2, 1]), p(&[]));
        assert_eq!(t.diagram(), "λ: ■■\n   ■");
    }

    #[test]
    fn marked_empty() {
        let m = MarkedObject::marked(3, Triple::default());
        assert_eq!(m.diagram(), "[marker 3] (empty)");
        assert_eq!(MarkedObject::plain(Triple::default()).diagram(), "(empty)");
    }

    #[test]
    fn mac_pair() {
        let x = MacPair::new(-2, p(&[2]));
        assert_eq!(x.diagram(), "λ=S_-2: ■■ (negative)\n        ■■\nμ: ■■");
        let m = MarkedObject::marked_z(1, -1, MacPair::new(0, p(&[])));
        assert_eq!(m.diagram(), "[marker 1 z^-1] (empty)");
    }
}
