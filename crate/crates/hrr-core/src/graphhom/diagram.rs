//! Flag-level representation of Jacobi diagrams.
//!
//! A diagram is a set of flags (half-edges), a partition of the flags
//! into univalent and trivalent vertices, and a perfect matching of
//! the flags into edges. The orientation is the cyclic order of the
//! three flags at each trivalent vertex, stored as an ordered triple
//! read modulo rotation.

use super::GraphError;

/// A vertex of a Jacobi diagram: one flag, or an oriented triple of
/// flags whose order encodes the cyclic orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Vertex {
    Univalent(usize),
    Trivalent([usize; 3]),
}

/// A concrete labeled Jacobi diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiDiagram {
    vertices: Vec<Vertex>,
    /// flag -> vertex index
    flag_vertex: Vec<usize>,
    /// flag -> matched flag (fixed-point-free involution)
    partner: Vec<usize>,
}

impl JacobiDiagram {
    /// Builds a diagram from vertex blocks and an edge list of flag
    /// pairs; validates the structure.
    pub fn new(vertices: Vec<Vertex>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let flag_count: usize = vertices
            .iter()
            .map(|v| match v {
                Vertex::Univalent(_) => 1,
                Vertex::Trivalent(_) => 3,
            })
            .sum();
        let mut flag_vertex = vec![usize::MAX; flag_count];
        for (idx, vertex) in vertices.iter().enumerate() {
            let flags: &[usize] = match vertex {
                Vertex::Univalent(f) => std::slice::from_ref(f),
                Vertex::Trivalent(fs) => fs,
            };
            for &f in flags {
                if f >= flag_count {
                    return Err(GraphError::Malformed(format!("flag {f} out of range")));
                }
                if flag_vertex[f] != usize::MAX {
                    return Err(GraphError::Malformed(format!("flag {f} in two vertices")));
                }
                flag_vertex[f] = idx;
            }
        }
        if flag_vertex.contains(&usize::MAX) {
            return Err(GraphError::Malformed("a flag belongs to no vertex".into()));
        }
        let mut partner = vec![usize::MAX; flag_count];
        for &(a, b) in edges {
            if a >= flag_count || b >= flag_count || a == b {
                return Err(GraphError::Malformed(format!("bad edge ({a}, {b})")));
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(GraphError::Malformed(format!(
                    "flag reused in edge ({a}, {b})"
                )));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(GraphError::Malformed("edges do not cover all flags".into()));
        }
        Ok(JacobiDiagram {
            vertices,
            flag_vertex,
            partner,
        })
    }

    /// The empty diagram, the unit of disjoint union.
    pub fn empty() -> Self {
        JacobiDiagram {
            vertices: Vec::new(),
            flag_vertex: Vec::new(),
            partner: Vec::new(),
        }
    }

    /// The strut: two univalent vertices joined by an edge.
    pub fn strut() -> Self {
        JacobiDiagram::new(vec![Vertex::Univalent(0), Vertex::Univalent(1)], &[(0, 1)]).unwrap()
    }

    /// The wheel with `m` spokes: a rim cycle of `m` trivalent
    /// vertices, each carrying one leg. Every rim vertex uses the same
    /// cyclic pattern (previous rim edge, next rim edge, leg), so for
    /// even `m` the class does not depend on that uniform choice. `m`
    /// must be at least one; the zero-spoke wheel is the empty diagram
    /// by convention.
    pub fn wheel(m: usize) -> Self {
        if m == 0 {
            return Self::empty();
        }
        // flags per rim vertex i: 4i = to previous, 4i+1 = to next,
        // 4i+2 = leg stub; univalent vertex i has flag 4i+3.
        let mut vertices = Vec::with_capacity(2 * m);
        let mut edges = Vec::with_capacity(2 * m);
        for i in 0..m {
            vertices.push(Vertex::Trivalent([4 * i, 4 * i + 1, 4 * i + 2]));
        }
        for i in 0..m {
            vertices.push(Vertex::Univalent(4 * i + 3));
        }
        for i in 0..m {
            let next = (i + 1) % m;
            edges.push((4 * i + 1, 4 * next));
            edges.push((4 * i + 2, 4 * i + 3));
        }
        JacobiDiagram::new(vertices, &edges).unwrap()
    }

    /// The double wheel with `i` legs on one arc and `j` on the other:
    /// the result of glueing two legs of the `(i + j + 2)`-wheel whose
    /// rim distance leaves `i` and `j` legged vertices on the two arcs.
    pub fn double_wheel(i: usize, j: usize) -> Self {
        let m = i + j + 2;
        let wheel = Self::wheel(m);
        let legs = wheel.univalent_vertices();
        // legs[k] is the leg of rim vertex k; glueing legs 0 and i+1
        // leaves arcs with i and j legged vertices.
        wheel.glue(legs[0], legs[i + 1]).unwrap()
    }

    /// The trivalent theta diagram: two vertices joined by three edges.
    pub fn theta() -> Self {
        Self::double_wheel(0, 0)
    }

    /// A single trivalent vertex with three legs.
    pub fn tripod() -> Self {
        JacobiDiagram::new(
            vec![
                Vertex::Trivalent([0, 1, 2]),
                Vertex::Univalent(3),
                Vertex::Univalent(4),
                Vertex::Univalent(5),
            ],
            &[(0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    pub fn flag_count(&self) -> usize {
        self.flag_vertex.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn partner(&self, flag: usize) -> usize {
        self.partner[flag]
    }

    pub fn vertex_of(&self, flag: usize) -> usize {
        self.flag_vertex[flag]
    }

    /// Indices of the univalent vertices, ascending.
    pub fn univalent_vertices(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .enumerate()
            .filter_map(|(i, v)| matches!(v, Vertex::Univalent(_)).then_some(i))
            .collect()
    }

    pub fn univalent_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| matches!(v, Vertex::Univalent(_)))
            .count()
    }

    pub fn trivalent_count(&self) -> usize {
        self.vertices.len() - self.univalent_count()
    }

    /// The degree: the total number of vertices.
    pub fn degree(&self) -> usize {
        self.vertices.len()
    }

    /// Bidegree (univalent count, trivalent count).
    pub fn bidegree(&self) -> (usize, usize) {
        (self.univalent_count(), self.trivalent_count())
    }

    /// Whether some component is a strut (an edge joining two
    /// univalent vertices).
    pub fn has_strut(&self) -> bool {
        self.vertices.iter().enumerate().any(|(i, v)| {
            if let Vertex::Univalent(f) = v {
                let other = self.flag_vertex[self.partner[*f]];
                matches!(self.vertices[other], Vertex::Univalent(_)) && other != i
            } else {
                false
            }
        })
    }

    /// Disjoint union with flag and vertex indices of `other` shifted
    /// up.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let offset = self.flag_count();
        let mut vertices = self.vertices.clone();
        for v in &other.vertices {
            vertices.push(match v {
                Vertex::Univalent(f) => Vertex::Univalent(f + offset),
                Vertex::Trivalent([a, b, c]) => {
                    Vertex::Trivalent([a + offset, b + offset, c + offset])
                }
            });
        }
        let mut flag_vertex = self.flag_vertex.clone();
        let vertex_offset = self.vertices.len();
        flag_vertex.extend(other.flag_vertex.iter().map(|v| v + vertex_offset));
        let mut partner = self.partner.clone();
        partner.extend(other.partner.iter().map(|p| p + offset));
        JacobiDiagram {
            vertices,
            flag_vertex,
            partner,
        }
    }

    /// Glues the univalent vertices `u` and `u2`: removes both legs
    /// and joins their attachment vertices by a new edge, keeping each
    /// attachment vertex's cyclic order with the old flag slot reused
    /// by the new edge. Returns the new diagram and the vertex
    /// renumbering (old index -> new index, `None` for the removed
    /// legs).
    pub fn glue(&self, u: usize, u2: usize) -> Result<Self, GraphError> {
        self.glue_with_map(u, u2).map(|(d, _)| d)
    }

    pub fn glue_with_map(
        &self,
        u: usize,
        u2: usize,
    ) -> Result<(Self, Vec<Option<usize>>), GraphError> {
        if u == u2 {
            return Err(GraphError::GlueNeedsDistinctLegs(u, u2));
        }
        let (Some(Vertex::Univalent(g)), Some(Vertex::Univalent(g2))) =
            (self.vertices.get(u), self.vertices.get(u2))
        else {
            return Err(GraphError::GlueNeedsDistinctLegs(u, u2));
        };
        let (g, g2) = (*g, *g2);
        if self.partner[g] == g2 {
            return Err(GraphError::GlueWithinStrut);
        }
        let f = self.partner[g];
        let f2 = self.partner[g2];

        // Renumber flags, skipping the two removed leg flags.
        let mut flag_map = vec![usize::MAX; self.flag_count()];
        let mut next = 0;
        for flag in 0..self.flag_count() {
            if flag != g && flag != g2 {
                flag_map[flag] = next;
                next += 1;
            }
        }
        let mut vertex_map = vec![None; self.vertices.len()];
        let mut vertices = Vec::with_capacity(self.vertices.len() - 2);
        for (idx, vertex) in self.vertices.iter().enumerate() {
            if idx == u || idx == u2 {
                continue;
            }
            vertex_map[idx] = Some(vertices.len());
            vertices.push(match vertex {
                Vertex::Univalent(flag) => Vertex::Univalent(flag_map[*flag]),
                Vertex::Trivalent([a, b, c]) => {
                    Vertex::Trivalent([flag_map[*a], flag_map[*b], flag_map[*c]])
                }
            });
        }
        let mut edges = Vec::with_capacity(next / 2);
        for flag in 0..self.flag_count() {
            if flag == g || flag == g2 {
                continue;
            }
            let p = self.partner[flag];
            if p == g || p == g2 {
                continue; // re-wired below
            }
            if flag < p {
                edges.push((flag_map[flag], flag_map[p]));
            }
        }
        edges.push((flag_map[f], flag_map[f2]));
        let glued = JacobiDiagram::new(vertices, &edges)?;
        Ok((glued, vertex_map))
    }

    /// Reverses the cyclic order at one trivalent vertex (an
    /// antisymmetry move; negates the class).
    pub fn flip_orientation(&self, vertex: usize) -> Self {
        let mut out = self.clone();
        if let Vertex::Trivalent(triple) = &mut out.vertices[vertex] {
            triple.swap(1, 2);
        } else {
            panic!("flip_orientation needs a trivalent vertex");
        }
        out
    }

    /// Applies a flag relabeling (used by tests to check that canonical
    /// forms are relabeling-invariant). `map` must be a bijection on
    /// flag indices.
    pub fn relabel_flags(&self, map: &[usize]) -> Self {
        let n = self.flag_count();
        assert_eq!(map.len(), n);
        let mut vertices = self.vertices.clone();
        for v in &mut vertices {
            match v {
                Vertex::Univalent(f) => *f = map[*f],
                Vertex::Trivalent(fs) => {
                    for f in fs.iter_mut() {
                        *f = map[*f];
                    }
                }
            }
        }
        let mut flag_vertex = vec![usize::MAX; n];
        let mut partner = vec![usize::MAX; n];
        for f in 0..n {
            flag_vertex[map[f]] = self.flag_vertex[f];
            partner[map[f]] = map[self.partner[f]];
        }
        JacobiDiagram {
            vertices,
            flag_vertex,
            partner,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_counts() {
        let w4 = JacobiDiagram::wheel(4);
        assert_eq!(w4.bidegree(), (4, 4));
        assert_eq!(w4.degree(), 8);
        assert!(!w4.has_strut());
        assert!(JacobiDiagram::strut().has_strut());
        assert_eq!(JacobiDiagram::wheel(0).degree(), 0);
    }

    #[test]
    fn theta_is_two_vertices_three_edges() {
        let theta = JacobiDiagram::theta();
        assert_eq!(theta.bidegree(), (0, 2));
        assert_eq!(theta.flag_count(), 6);
    }

    #[test]
    fn double_wheel_counts() {
        let w12 = JacobiDiagram::double_wheel(1, 2);
        assert_eq!(w12.bidegree(), (3, 5));
        assert_eq!(w12.degree(), 8);
    }

    #[test]
    fn glue_within_strut_is_rejected() {
        let ell = JacobiDiagram::strut();
        assert_eq!(ell.glue(0, 1), Err(GraphError::GlueWithinStrut));
    }

    #[test]
    fn union_is_unital() {
        let w2 = JacobiDiagram::wheel(2);
        let u = JacobiDiagram::empty().disjoint_union(&w2);
        assert_eq!(u.bidegree(), w2.bidegree());
        let both = w2.disjoint_union(&JacobiDiagram::theta());
        assert_eq!(both.bidegree(), (2, 4));
    }

    #[test]
    fn glueing_adjacent_legs_of_the_four_wheel() {
        // two rim-adjacent legs glue into the double wheel with arc
        // sizes 0 and 2
        let w4 = JacobiDiagram::wheel(4);
        let legs = w4.univalent_vertices();
        let glued = w4.glue(legs[0], legs[1]).unwrap();
        let expected = JacobiDiagram::double_wheel(0, 2);
        assert_eq!(
            super::super::canonicalize(&glued),
            super::super::canonicalize(&expected)
        );
    }

    #[test]
    fn malformed_structures_are_rejected() {
        // flag used by two vertices
        assert!(matches!(
            JacobiDiagram::new(vec![Vertex::Univalent(0), Vertex::Univalent(0)], &[(0, 0)]),
            Err(GraphError::Malformed(_))
        ));
        // edge reusing a flag
        assert!(matches!(
            JacobiDiagram::new(
                vec![Vertex::Trivalent([0, 1, 2]), Vertex::Univalent(3)],
                &[(0, 1), (1, 2), (2, 3)]
            ),
            Err(GraphError::Malformed(_))
        ));
        // flags not covered by edges
        assert!(matches!(
            JacobiDiagram::new(vec![Vertex::Univalent(0), Vertex::Univalent(1)], &[]),
            Err(GraphError::Malformed(_))
        ));
    }
}
