//! Triangular mesh `T_m` and tripy `TP_L` in their native coordinates, and
//! their maps into integer simplices.
//!
//! `sigma1((x, y)) = (m - (x + y), x, y)` sends `T_m` onto `T_m^2`.
//! `sigma2((k, (x, y))) = (L - k, k - (x + y), x, y)` sends `TP_L` onto `T_L^3`.
//! The tempting form `(L - (k + x + y), k, x, y)` is kept as [`sigma2_literal`]:
//! it leaves the simplex (e.g. `(2, (1, 0))` with `L = 2` gives `-1,2,1,0`).

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::simplex::{self, GraphParams, Vertex, VertexError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MeshVertex {
    pub x: u32,
    pub y: u32,
}

impl MeshVertex {
    pub fn new(x: u32, y: u32) -> Self {
        MeshVertex { x, y }
    }

    pub fn is_valid(&self, side: u32) -> bool {
        self.x + self.y <= side
    }
}

impl fmt::Display for MeshVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl FromStr for MeshVertex {
    type Err = VertexError;

    /// `"x,y"`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || VertexError::Malformed(s.to_string());
        let (x, y) = s.split_once(',').ok_or_else(malformed)?;
        Ok(MeshVertex {
            x: x.trim().parse().map_err(|_| malformed())?,
            y: y.trim().parse().map_err(|_| malformed())?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripyVertex {
    pub level: u32,
    pub x: u32,
    pub y: u32,
}

impl TripyVertex {
    pub fn new(level: u32, x: u32, y: u32) -> Self {
        TripyVertex { level, x, y }
    }

    pub fn is_valid(&self, levels: u32) -> bool {
        self.level <= levels && self.x + self.y <= self.level
    }

    fn planar(&self) -> MeshVertex {
        MeshVertex::new(self.x, self.y)
    }
}

impl fmt::Display for TripyVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{},{}", self.level, self.x, self.y)
    }
}

impl FromStr for TripyVertex {
    type Err = VertexError;

    /// `"k:x,y"`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || VertexError::Malformed(s.to_string());
        let (level, rest) = s.split_once(':').ok_or_else(malformed)?;
        let planar: MeshVertex = rest.parse().map_err(|_| malformed())?;
        Ok(TripyVertex {
            level: level.trim().parse().map_err(|_| malformed())?,
            x: planar.x,
            y: planar.y,
        })
    }
}

/// Unit step along an axis, or the anti-diagonal step `(x+1, y-1)` / `(x-1, y+1)`.
pub fn mesh_adjacent(a: MeshVertex, b: MeshVertex) -> bool {
    let dx = i64::from(b.x) - i64::from(a.x);
    let dy = i64::from(b.y) - i64::from(a.y);
    dx.abs() + dy.abs() == 1 || (dx == 1 && dy == -1) || (dx == -1 && dy == 1)
}

/// Same-level mesh adjacency, or the parent/child relation between levels `k`
/// and `k + 1` (children of `(x, y)` are `(x, y)`, `(x+1, y)` and `(x, y+1)`).
pub fn tripy_adjacent(a: TripyVertex, b: TripyVertex) -> bool {
    if a.level == b.level {
        return mesh_adjacent(a.planar(), b.planar());
    }
    let (parent, child) = if a.level < b.level { (a, b) } else { (b, a) };
    if child.level != parent.level + 1 {
        return false;
    }
    [(0, 0), (1, 0), (0, 1)]
        .iter()
        .any(|&(dx, dy)| child.x == parent.x + dx && child.y == parent.y + dy)
}

pub fn mesh_vertices(side: u32) -> Vec<MeshVertex> {
    (0..=side)
        .flat_map(|x| (0..=side - x).map(move |y| MeshVertex::new(x, y)))
        .collect()
}

pub fn tripy_vertices(levels: u32) -> Vec<TripyVertex> {
    (0..=levels)
        .flat_map(|k| mesh_vertices(k).into_iter().map(move |p| TripyVertex::new(k, p.x, p.y)))
        .collect()
}

pub fn sigma1(a: MeshVertex, side: u32) -> Result<Vertex, VertexError> {
    let params = GraphParams::new(2, side)?;
    let (x, y) = (i64::from(a.x), i64::from(a.y));
    Vertex::new(&[i64::from(side) - (x + y), x, y], params)
}

pub fn sigma2(a: TripyVertex, levels: u32) -> Result<Vertex, VertexError> {
    let params = GraphParams::new(3, levels)?;
    let (k, x, y) = (i64::from(a.level), i64::from(a.x), i64::from(a.y));
    Vertex::new(&[i64::from(levels) - k, k - (x + y), x, y], params)
}

/// Raw coordinates of `(L - (k + x + y), k, x, y)`. Not a valid simplex vertex
/// in general; see the module docs.
pub fn sigma2_literal(a: TripyVertex, levels: u32) -> [i64; 4] {
    let (k, x, y) = (i64::from(a.level), i64::from(a.x), i64::from(a.y));
    [i64::from(levels) - (k + x + y), k, x, y]
}

/// A finite graph given by its vertex list and an adjacency predicate.
pub trait AdjacencyView {
    type Node: Clone + Eq + Hash;

    fn nodes(&self) -> Vec<Self::Node>;

    fn adjacent(&self, a: &Self::Node, b: &Self::Node) -> bool;
}

pub struct MeshGraph {
    pub side: u32,
}

impl AdjacencyView for MeshGraph {
    type Node = MeshVertex;

    fn nodes(&self) -> Vec<MeshVertex> {
        mesh_vertices(self.side)
    }

    fn adjacent(&self, a: &MeshVertex, b: &MeshVertex) -> bool {
        mesh_adjacent(*a, *b)
    }
}

pub struct TripyGraph {
    pub levels: u32,
}

impl AdjacencyView for TripyGraph {
    type Node = TripyVertex;

    fn nodes(&self) -> Vec<TripyVertex> {
        tripy_vertices(self.levels)
    }

    fn adjacent(&self, a: &TripyVertex, b: &TripyVertex) -> bool {
        tripy_adjacent(*a, *b)
    }
}

pub struct SimplexGraph {
    pub params: GraphParams,
}

impl AdjacencyView for SimplexGraph {
    type Node = Vertex;

    fn nodes(&self) -> Vec<Vertex> {
        simplex::enumerate_vertices(self.params)
    }

    fn adjacent(&self, a: &Vertex, b: &Vertex) -> bool {
        simplex::is_adjacent(a, b).unwrap_or(false)
    }
}

/// Whether `map` is a bijection from `from` onto `to` that preserves both
/// adjacency and non-adjacency. A map that fails on some node is not one.
pub fn verify_isomorphism<A, B, F, E>(map: F, from: &A, to: &B) -> bool
where
    A: AdjacencyView,
    B: AdjacencyView,
    F: Fn(&A::Node) -> Result<B::Node, E>,
{
    let sources = from.nodes();
    let targets: HashSet<B::Node> = to.nodes().into_iter().collect();
    if sources.len() != targets.len() {
        return false;
    }
    let Ok(images) = sources.iter().map(&map).collect::<Result<Vec<_>, _>>() else {
        return false;
    };
    let distinct: HashSet<&B::Node> = images.iter().collect();
    if distinct.len() != images.len() || !images.iter().all(|img| targets.contains(img)) {
        return false;
    }
    for i in 0..sources.len() {
        for j in i + 1..sources.len() {
            if from.adjacent(&sources[i], &sources[j]) != to.adjacent(&images[i], &images[j]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(k: u32, x: u32, y: u32) -> TripyVertex {
        TripyVertex::new(k, x, y)
    }

    #[test]
    fn mesh_adjacency() {
        let m = MeshVertex::new;
        assert!(mesh_adjacent(m(0, 0), m(1, 0)));
        assert!(mesh_adjacent(m(1, 0), m(0, 1)));
        assert!(!mesh_adjacent(m(0, 0), m(1, 1)));
        assert!(!mesh_adjacent(m(0, 0), m(0, 0)));
    }

    #[test]
    fn tripy_adjacency() {
        assert!(tripy_adjacent(tp(0, 0, 0), tp(1, 1, 0)));
        assert!(tripy_adjacent(tp(1, 0, 0), tp(1, 1, 0)));
        assert!(!tripy_adjacent(tp(0, 0, 0), tp(2, 0, 0)));
        assert!(tripy_adjacent(tp(2, 1, 1), tp(1, 0, 1)));
        assert!(!tripy_adjacent(tp(2, 0, 0), tp(1, 1, 0)));
    }

    #[test]
    fn tripy_parents_match_children() {
        // parents of (k,(x,y)): (x-1,y) if x>0, (x,y-1) if y>0, (x,y) if x+y<k
        let levels = 4;
        for c in tripy_vertices(levels).into_iter().filter(|c| c.level > 0) {
            let mut expected = Vec::new();
            if c.x > 0 {
                expected.push(tp(c.level - 1, c.x - 1, c.y));
            }
            if c.y > 0 {
                expected.push(tp(c.level - 1, c.x, c.y - 1));
            }
            if c.x + c.y < c.level {
                expected.push(tp(c.level - 1, c.x, c.y));
            }
            let mut found: Vec<TripyVertex> = tripy_vertices(levels)
                .into_iter()
                .filter(|p| p.level + 1 == c.level && tripy_adjacent(*p, c))
                .collect();
            found.sort();
            expected.sort();
            assert_eq!(found, expected, "{c}");
        }
    }

    #[test]
    fn sigma1_examples() {
        assert_eq!(sigma1(MeshVertex::new(1, 0), 3).unwrap().to_string(), "2,1,0");
        assert_eq!(sigma1(MeshVertex::new(0, 0), 3).unwrap().to_string(), "3,0,0");
        assert_eq!(sigma1(MeshVertex::new(0, 3), 3).unwrap().to_string(), "0,0,3");
        assert!(sigma1(MeshVertex::new(2, 2), 3).is_err());
    }

    #[test]
    fn sigma2_examples() {
        assert_eq!(sigma2(tp(1, 0, 0), 2).unwrap().to_string(), "1,1,0,0");
        assert_eq!(sigma2(tp(2, 1, 0), 2).unwrap().to_string(), "0,1,1,0");
        assert_eq!(sigma2(tp(0, 0, 0), 2).unwrap().to_string(), "2,0,0,0");
    }

    #[test]
    fn literal_sigma2_leaves_the_simplex() {
        let raw = sigma2_literal(tp(2, 1, 0), 2);
        assert_eq!(raw, [-1, 2, 1, 0]);
        let params = GraphParams::new(3, 2).unwrap();
        assert!(matches!(Vertex::new(&raw, params), Err(VertexError::NegativeCoordinate { index: 3, value: -1 })));
        let as_map = |a: &TripyVertex| Vertex::new(&sigma2_literal(*a, 2), params);
        assert!(!verify_isomorphism(as_map, &TripyGraph { levels: 2 }, &SimplexGraph { params }));
    }

    #[test]
    fn isomorphism_examples() {
        let t3 = GraphParams::new(2, 3).unwrap();
        assert!(verify_isomorphism(|a| sigma1(*a, 3), &MeshGraph { side: 3 }, &SimplexGraph { params: t3 }));
        let s3 = GraphParams::new(3, 3).unwrap();
        assert!(verify_isomorphism(|a| sigma2(*a, 3), &TripyGraph { levels: 3 }, &SimplexGraph { params: s3 }));

        let t22 = SimplexGraph { params: GraphParams::new(2, 2).unwrap() };
        let identity = |v: &Vertex| Ok::<_, VertexError>(v.clone());
        assert!(!verify_isomorphism(identity, &t22, &SimplexGraph { params: t3 }));
        assert!(verify_isomorphism(identity, &t22, &t22));
    }

    #[test]
    fn swapping_coordinates_breaks_adjacency_somewhere() {
        // a bijection that is not an isomorphism: swap only the two far corners
        let params = GraphParams::new(2, 2).unwrap();
        let g = SimplexGraph { params };
        let swap = |v: &Vertex| {
            let s = v.to_string();
            let out = match s.as_str() {
                "2,0,0" => "1,1,0",
                "1,1,0" => "2,0,0",
                other => other,
            };
            Vertex::parse(out, params)
        };
        assert!(!verify_isomorphism(swap, &g, &g));
    }

    #[test]
    fn text_formats() {
        assert_eq!("1,2".parse::<MeshVertex>().unwrap(), MeshVertex::new(1, 2));
        assert_eq!("2:1,0".parse::<TripyVertex>().unwrap(), tp(2, 1, 0));
        assert_eq!(tp(2, 1, 0).to_string(), "2:1,0");
        assert!("2,1,0".parse::<TripyVertex>().is_err());
        assert!("1".parse::<MeshVertex>().is_err());
    }

    #[test]
    fn vertex_counts() {
        for side in 0..=6 {
            assert_eq!(mesh_vertices(side).len() as u32, (side + 2) * (side + 1) / 2);
        }
        for levels in 0..=4 {
            assert_eq!(tripy_vertices(levels).len() as u32, (levels + 3) * (levels + 2) * (levels + 1) / 6);
        }
    }
}
