//! The successor quiver of the special configuration and its path counts.
//!
//! The successor calculus on the union of the three special lines is
//! *finite*: the only factors that can occur in an admissible tuple are the
//! three full lines ℙ¹_A, ℙ¹_B, ℙ¹_C and the three special points p_a, p_b,
//! p_c.  Encoding "G can follow F" as an edge F → G yields a 6-vertex quiver
//! Q with 12 edges:
//!
//! * ℙ¹_X → p_x — the generic point of ℙ¹_X has the single successor p_x;
//! * p_x → ℙ¹_X — the successor locus of p_x is the whole line ℙ¹_X;
//! * p_x → p_y (x ≠ y) — the marked points of ℙ¹_X are the two other special
//!   points, where the successor locus jumps from a point to a line.
//!
//! The subquiver Q′ ⊂ Q keeps only the six line↔point edges (three 2-cycles);
//! its paths describe the components that survive in the limiting scheme.
//! Paths are measured by their number of *vertices* d (so a path with d
//! vertices has d − 1 edges and describes a product of d factors).

use std::collections::BTreeSet;
use std::fmt;

use crate::geometry::{line_a, line_b, line_c, pa, pb, pc, Factor};
use crate::{Error, Result};

/// A vertex of the successor quiver: one of the three special lines or one of
/// the three special points.
///
/// The declaration order fixes the deterministic sort order used everywhere
/// (path enumeration, component listings): ℙ¹_A < p_a < p_b < p_c < ℙ¹_B < ℙ¹_C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuiverVertex {
    LineA,
    PtA,
    PtB,
    PtC,
    LineB,
    LineC,
}

impl QuiverVertex {
    /// All vertices in sort order.
    pub const ALL: [QuiverVertex; 6] = [
        QuiverVertex::LineA,
        QuiverVertex::PtA,
        QuiverVertex::PtB,
        QuiverVertex::PtC,
        QuiverVertex::LineB,
        QuiverVertex::LineC,
    ];

    /// Short display name, matching the factor notation (`PA1` for the
    /// projective line ℙ¹_A, `pa` for the point p_a, …).
    pub fn name(self) -> &'static str {
        match self {
            QuiverVertex::LineA => "PA1",
            QuiverVertex::PtA => "pa",
            QuiverVertex::PtB => "pb",
            QuiverVertex::PtC => "pc",
            QuiverVertex::LineB => "PB1",
            QuiverVertex::LineC => "PC1",
        }
    }

    /// The geometric factor the vertex stands for.
    pub fn to_factor(self) -> Factor {
        match self {
            QuiverVertex::LineA => Factor::Line(line_a()),
            QuiverVertex::PtA => Factor::Point(pa()),
            QuiverVertex::PtB => Factor::Point(pb()),
            QuiverVertex::PtC => Factor::Point(pc()),
            QuiverVertex::LineB => Factor::Line(line_b()),
            QuiverVertex::LineC => Factor::Line(line_c()),
        }
    }
}

impl fmt::Display for QuiverVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite quiver on [`QuiverVertex`], stored as a sorted edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    edges: BTreeSet<(QuiverVertex, QuiverVertex)>,
}

impl Quiver {
    /// Builds a quiver from an explicit edge list.
    pub fn from_edges(edges: impl IntoIterator<Item = (QuiverVertex, QuiverVertex)>) -> Self {
        Quiver {
            edges: edges.into_iter().collect(),
        }
    }

    /// The full successor quiver Q (12 edges).
    pub fn q() -> Self {
        use QuiverVertex::*;
        Quiver::from_edges([
            (LineA, PtA),
            (LineB, PtB),
            (LineC, PtC),
            (PtA, LineA),
            (PtB, LineB),
            (PtC, LineC),
            (PtA, PtB),
            (PtA, PtC),
            (PtB, PtA),
            (PtB, PtC),
            (PtC, PtA),
            (PtC, PtB),
        ])
    }

    /// The limiting subquiver Q′ (6 edges, three line↔point 2-cycles).
    pub fn q_prime() -> Self {
        use QuiverVertex::*;
        Quiver::from_edges([
            (LineA, PtA),
            (LineB, PtB),
            (LineC, PtC),
            (PtA, LineA),
            (PtB, LineB),
            (PtC, LineC),
        ])
    }

    /// The sorted edge set.
    pub fn edges(&self) -> &BTreeSet<(QuiverVertex, QuiverVertex)> {
        &self.edges
    }

    /// Whether `from → to` is an edge.
    pub fn has_edge(&self, from: QuiverVertex, to: QuiverVertex) -> bool {
        self.edges.contains(&(from, to))
    }

    /// Out-neighbors of a vertex, in sort order.
    pub fn out_neighbors(&self, v: QuiverVertex) -> Vec<QuiverVertex> {
        self.edges
            .iter()
            .filter(|(from, _)| *from == v)
            .map(|(_, to)| *to)
            .collect()
    }

    /// Number of paths with exactly `d` vertices (d − 1 edges), by dynamic
    /// programming over path endpoints.  Errors when `d` is zero.
    pub fn count_paths(&self, d: usize) -> Result<u64> {
        if d == 0 {
            return Err(Error::DegreeTooSmall { got: 0, min: 1 });
        }
        // counts[v] = number of admissible paths with the current number of
        // vertices ending at v.
        let mut counts = [1u64; 6];
        for _ in 1..d {
            let mut next = [0u64; 6];
            for (from, to) in &self.edges {
                next[*to as usize] += counts[*from as usize];
            }
            counts = next;
        }
        Ok(counts.iter().sum())
    }

    /// All paths with exactly `d` vertices, in lexicographic order on vertex
    /// sequences.  Errors when `d` is zero.
    pub fn enumerate_paths(&self, d: usize) -> Result<Vec<QuiverPath>> {
        if d == 0 {
            return Err(Error::DegreeTooSmall { got: 0, min: 1 });
        }
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(d);
        for start in QuiverVertex::ALL {
            stack.push(start);
            self.extend_paths(&mut stack, d, &mut out);
            stack.pop();
        }
        Ok(out)
    }

    fn extend_paths(
        &self,
        stack: &mut Vec<QuiverVertex>,
        d: usize,
        out: &mut Vec<QuiverPath>,
    ) {
        if stack.len() == d {
            out.push(QuiverPath {
                vertices: stack.clone(),
            });
            return;
        }
        let last = *stack.last().expect("stack is nonempty");
        for next in self.out_neighbors(last) {
            stack.push(next);
            self.extend_paths(stack, d, out);
            stack.pop();
        }
    }
}

/// A directed path in a quiver, recorded by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuiverPath {
    vertices: Vec<QuiverVertex>,
}

impl QuiverPath {
    /// The vertex sequence (length = number of vertices).
    pub fn vertices(&self) -> &[QuiverVertex] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl fmt::Display for QuiverPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.vertices {
            if !first {
                write!(f, " -> ")?;
            }
            first = false;
            f.write_str(v.name())?;
        }
        Ok(())
    }
}
