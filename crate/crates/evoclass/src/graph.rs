//! Two-vertex colored digraphs attached to quasiperfect algebras.
//!
//! Vertex i carries an edge to vertex j exactly when entry (i, j) of the
//! structure matrix is nonzero: black for a unit, blue for a nonzero
//! nonunit. Quasiperfection makes the graph basis independent up to
//! relabeling the two vertices.

use crate::evalg::{AlgebraError, EvolutionAlgebra};
use std::collections::BTreeMap;

/// Edge color: black marks a unit weight, blue a nonzero nonunit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeColor {
    Black,
    Blue,
}

impl EdgeColor {
    pub fn name(self) -> &'static str {
        match self {
            EdgeColor::Black => "black",
            EdgeColor::Blue => "blue",
        }
    }
}

/// Digraph on vertices 1 and 2 with at most one colored edge per ordered
/// pair.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ColoredDigraph {
    edges: BTreeMap<(u8, u8), EdgeColor>,
}

/// Reads the graph off the structure matrix; refused for algebras that
/// are not quasiperfect, where the graph would depend on the basis.
pub fn graph_of(a: &EvolutionAlgebra) -> Result<ColoredDigraph, AlgebraError> {
    if !a.is_quasiperfect() {
        return Err(AlgebraError::NotQuasiperfect);
    }
    let mut edges = BTreeMap::new();
    for i in 0..2usize {
        for j in 0..2usize {
            let entry = a.entry(i, j);
            if entry.is_zero() {
                continue;
            }
            let color = if entry.is_unit() { EdgeColor::Black } else { EdgeColor::Blue };
            edges.insert((i as u8 + 1, j as u8 + 1), color);
        }
    }
    Ok(ColoredDigraph { edges })
}

/// Color-preserving digraph isomorphism; the only candidate relabelings
/// are the identity and the vertex swap.
pub fn digraph_isomorphic(g: &ColoredDigraph, h: &ColoredDigraph) -> bool {
    g == h || g.relabeled() == *h
}

impl ColoredDigraph {
    /// Edges as (from, to, color) triples sorted by (from, to).
    pub fn edges(&self) -> Vec<(u8, u8, EdgeColor)> {
        self.edges.iter().map(|(&(f, t), &c)| (f, t, c)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The same graph with vertices 1 and 2 exchanged.
    pub fn relabeled(&self) -> ColoredDigraph {
        let swap = |v: u8| 3 - v;
        ColoredDigraph {
            edges: self.edges.iter().map(|(&(f, t), &c)| ((swap(f), swap(t)), c)).collect(),
        }
    }

    /// Canonical DOT text: fixed header, vertex lines, then edges sorted
    /// by (from, to). Byte stable across runs.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph evo {\n  1;\n  2;\n");
        for (&(from, to), &color) in &self.edges {
            out.push_str(&format!("  {from} -> {to} [color={}];\n", color.name()));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::DomainHandle;

    fn z() -> DomainHandle {
        DomainHandle::integers()
    }

    fn alg(m: [[i64; 2]; 2]) -> EvolutionAlgebra {
        EvolutionAlgebra::from_int_matrix(&z(), m)
    }

    #[test]
    fn edges_follow_entries() {
        let g = graph_of(&alg([[1, 0], [2, 1]])).unwrap();
        assert_eq!(
            g.edges(),
            vec![
                (1, 1, EdgeColor::Black),
                (2, 1, EdgeColor::Blue),
                (2, 2, EdgeColor::Black),
            ]
        );
    }

    #[test]
    fn degenerate_matrix_rejected() {
        assert!(matches!(
            graph_of(&alg([[1, 2], [2, 4]])),
            Err(AlgebraError::NotQuasiperfect)
        ));
    }

    #[test]
    fn dot_text_is_exact() {
        let g = graph_of(&alg([[1, 0], [2, 1]])).unwrap();
        assert_eq!(
            g.to_dot(),
            "digraph evo {\n  1;\n  2;\n  1 -> 1 [color=black];\n  2 -> 1 [color=blue];\n  2 -> 2 [color=black];\n}\n"
        );
        let empty_free = graph_of(&alg([[0, 1], [1, 0]])).unwrap();
        assert_eq!(
            empty_free.to_dot(),
            "digraph evo {\n  1;\n  2;\n  1 -> 2 [color=black];\n  2 -> 1 [color=black];\n}\n"
        );
    }

    #[test]
    fn relabeling_detected() {
        let g = graph_of(&alg([[1, 0], [2, 1]])).unwrap();
        let h = graph_of(&alg([[1, 2], [0, 1]])).unwrap();
        assert!(digraph_isomorphic(&g, &h));
        assert!(digraph_isomorphic(&g, &g));
        let k = graph_of(&alg([[1, 0], [3, 1]])).unwrap();
        assert!(digraph_isomorphic(&g, &k));
        let different = graph_of(&alg([[1, 1], [2, 1]])).unwrap();
        assert!(!digraph_isomorphic(&g, &different));
        // Same shape but a color differs.
        let colored = graph_of(&alg([[1, 0], [1, 1]])).unwrap();
        assert!(!digraph_isomorphic(&g, &colored));
    }

    #[test]
    fn counts_match_invariants() {
        for m in [
            [[1, 0], [2, 1]],
            [[0, 1], [1, 0]],
            [[2, 3], [3, 5]],
            [[0, 1], [1, 2]],
            [[3, 1], [1, 1]],
            [[-1, 2], [0, 3]],
        ] {
            let a = alg(m);
            let counts = a.invariant_counts().unwrap();
            let g = graph_of(&a).unwrap();
            let edges = g.edges();
            assert_eq!(edges.len() as u8, counts.nonzero_total);
            let black = edges.iter().filter(|(_, _, c)| *c == EdgeColor::Black).count() as u8;
            assert_eq!(black, counts.unit_total);
            let loops = edges.iter().filter(|(f, t, _)| f == t).count() as u8;
            assert_eq!(loops, counts.nonzero_diag);
            let black_loops =
                edges.iter().filter(|(f, t, c)| f == t && *c == EdgeColor::Black).count() as u8;
            assert_eq!(black_loops, counts.unit_diag);
        }
    }

    #[test]
    fn graph_stable_under_basis_changes() {
        use crate::evalg::{BasisChange, Perm};
        let pool = [[[1, 0], [2, 1]], [[0, 1], [1, 2]], [[2, 3], [3, 5]]];
        for m in pool {
            let a = alg(m);
            let g = graph_of(&a).unwrap();
            for perm in [Perm::Id, Perm::Swap] {
                for (k1, k2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let c = BasisChange {
                        perm,
                        units: [z().from_i64(k1), z().from_i64(k2)],
                    };
                    let h = graph_of(&a.apply_basis_change(&c).unwrap()).unwrap();
                    assert!(digraph_isomorphic(&g, &h));
                }
            }
        }
    }
}
