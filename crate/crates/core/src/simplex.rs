//! Vertices and implicit adjacency of the integer simplex `T_m^n`.
//!
//! A vertex is a nonnegative integer `(n+1)`-tuple summing to `m`. Two vertices
//! are adjacent when one unit moves between exactly two coordinates. Nothing in
//! this module materializes the edge set.
//!
//! Coordinates are indexed the way they are printed: the leftmost coordinate
//! has index `n` and the rightmost has index `0`, so `"3,1,0,0"` has
//! `coord(3) == 3` and `coord(0) == 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VertexError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("wrong length: expected {expected} coordinates, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("negative coordinate {value} at index {index}")]
    NegativeCoordinate { index: usize, value: i64 },
    #[error("coordinate sum {got} != {expected}")]
    WrongSum { expected: u64, got: i64 },
    #[error("malformed vertex string {0:?}")]
    Malformed(String),
    #[error("vertices belong to different instances: {left} vs {right}")]
    ParamsMismatch { left: GraphParams, right: GraphParams },
}

/// The instance `T_m^n`: `n + 1` coordinates summing to `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphParams {
    pub n: usize,
    pub m: u32,
}

impl GraphParams {
    pub fn new(n: usize, m: u32) -> Result<Self, VertexError> {
        if n < 1 {
            return Err(VertexError::InvalidParams(format!("dimension n must be >= 1, got {n}")));
        }
        if m < 1 {
            return Err(VertexError::InvalidParams(format!("side-length m must be >= 1, got {m}")));
        }
        Ok(GraphParams { n, m })
    }

    /// Number of coordinates of every vertex.
    pub fn width(&self) -> usize {
        self.n + 1
    }

    /// `binomial(n + m, m)`, computed without going through floating point.
    pub fn vertex_count(&self) -> u64 {
        let k = u64::from(self.m).min(self.n as u64);
        let top = self.n as u64 + u64::from(self.m);
        (0..k).fold(1u64, |acc, i| acc * (top - i) / (i + 1))
    }

    /// The corner `m 0^n`.
    pub fn top_corner(&self) -> Vertex {
        let mut coords = vec![0; self.width()];
        coords[0] = self.m;
        Vertex { coords }
    }

    /// The corner `0^n m`.
    pub fn bottom_corner(&self) -> Vertex {
        let mut coords = vec![0; self.width()];
        coords[self.n] = self.m;
        Vertex { coords }
    }

    pub fn vertices(&self) -> VertexIter {
        VertexIter::new(*self)
    }
}

impl fmt::Display for GraphParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}^{}", self.m, self.n)
    }
}

/// A vertex of `T_m^n`. Ordering is lexicographic on `(v_n, ..., v_0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    // printed order: coords[0] is index n
    coords: Vec<u32>,
}

impl Vertex {
    /// Validates `coords` (printed order, leftmost = index `n`) against `params`.
    pub fn new(coords: &[i64], params: GraphParams) -> Result<Self, VertexError> {
        if coords.len() != params.width() {
            return Err(VertexError::WrongLength { expected: params.width(), got: coords.len() });
        }
        let n = params.n;
        if let Some((pos, &value)) = coords.iter().enumerate().find(|(_, &c)| c < 0) {
            return Err(VertexError::NegativeCoordinate { index: n - pos, value });
        }
        let sum: i64 = coords.iter().sum();
        if sum != i64::from(params.m) {
            return Err(VertexError::WrongSum { expected: u64::from(params.m), got: sum });
        }
        let coords = coords
            .iter()
            .map(|&c| u32::try_from(c).expect("bounded by m"))
            .collect();
        Ok(Vertex { coords })
    }

    /// Parses the textual form `"2,0,0"` and validates it against `params`.
    pub fn parse(text: &str, params: GraphParams) -> Result<Self, VertexError> {
        let coords = text
            .split(',')
            .map(|part| part.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| VertexError::Malformed(text.to_string()))?;
        Vertex::new(&coords, params)
    }

    pub fn params(&self) -> GraphParams {
        GraphParams { n: self.coords.len() - 1, m: self.coords.iter().sum() }
    }

    pub fn n(&self) -> usize {
        self.coords.len() - 1
    }

    /// Coordinate `v_i`, with `i` counted from the right.
    pub fn coord(&self, i: usize) -> u32 {
        self.coords[self.n() - i]
    }

    /// Coordinates in printed order (leftmost is index `n`).
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Moves one unit from coordinate `from` to coordinate `to`. Returns `None`
    /// when `coord(from)` is zero or `from == to`.
    pub fn transfer(&self, from: usize, to: usize) -> Option<Vertex> {
        if from == to || self.coord(from) == 0 {
            return None;
        }
        let n = self.n();
        let mut coords = self.coords.clone();
        coords[n - from] -= 1;
        coords[n - to] += 1;
        Some(Vertex { coords })
    }

    /// Indices `i` with `v_i > 0`.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.n()).filter(move |&i| self.coord(i) > 0)
    }

    pub fn degree(&self) -> usize {
        self.n() * self.support().count()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, c) in self.coords.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses a vertex without an instance; length and sum define the instance.
impl FromStr for Vertex {
    type Err = VertexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coords = s
            .split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| VertexError::Malformed(s.to_string()))?;
        if coords.len() < 2 || coords.iter().all(|&c| c == 0) {
            return Err(VertexError::Malformed(s.to_string()));
        }
        Ok(Vertex { coords })
    }
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub fn make_vertex(coords: &[i64], params: GraphParams) -> Result<Vertex, VertexError> {
    Vertex::new(coords, params)
}

pub(crate) fn check_same(u: &Vertex, v: &Vertex) -> Result<(), VertexError> {
    let (left, right) = (u.params(), v.params());
    if left != right {
        return Err(VertexError::ParamsMismatch { left, right });
    }
    Ok(())
}

/// `h(u, v) = (1/2) * sum |u_i - v_i|`.
pub fn h_distance(u: &Vertex, v: &Vertex) -> Result<u32, VertexError> {
    check_same(u, v)?;
    Ok(h_unchecked(u, v))
}

pub(crate) fn h_unchecked(u: &Vertex, v: &Vertex) -> u32 {
    let total: u32 = u.coords.iter().zip(&v.coords).map(|(a, b)| a.abs_diff(*b)).sum();
    total / 2
}

/// All vertices one transfer away from `v`, in ascending order.
///
/// There are `n` of them for every positive coordinate.
pub fn neighbors(v: &Vertex) -> Vec<Vertex> {
    let n = v.n();
    let mut out = Vec::with_capacity(v.degree());
    for from in v.support() {
        for to in (0..=n).filter(|&to| to != from) {
            out.extend(v.transfer(from, to));
        }
    }
    out.sort();
    out
}

pub fn is_adjacent(u: &Vertex, v: &Vertex) -> Result<bool, VertexError> {
    Ok(h_distance(u, v)? == 1)
}

/// Every vertex of the instance, once, in ascending lexicographic order.
pub fn enumerate_vertices(params: GraphParams) -> Vec<Vertex> {
    params.vertices().collect()
}

/// Lexicographic successor iterator over weak compositions of `m` into `n+1` parts.
#[derive(Debug, Clone)]
pub struct VertexIter {
    next: Option<Vec<u32>>,
}

impl VertexIter {
    fn new(params: GraphParams) -> Self {
        let mut first = vec![0; params.width()];
        first[params.n] = params.m;
        VertexIter { next: Some(first) }
    }
}

impl Iterator for VertexIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        let current = self.next.take()?;
        let last = current.len() - 1;
        let mut succ = current.clone();
        // rightmost non-final position whose suffix still holds mass
        let mut suffix = succ[last];
        for pos in (0..last).rev() {
            if suffix > 0 {
                succ[pos] += 1;
                succ[pos + 1..].iter_mut().for_each(|c| *c = 0);
                succ[last] = suffix - 1;
                self.next = Some(succ);
                break;
            }
            suffix += succ[pos];
        }
        Some(Vertex { coords: current })
    }
}

/// Coordinate comparison of a pair of vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositionClassification {
    /// Indices with `u_i > v_i`, descending.
    pub down: Vec<usize>,
    /// Indices with `u_i < v_i`, descending.
    pub up: Vec<usize>,
    /// Indices with `u_i == v_i`, descending.
    pub equal: Vec<usize>,
}

impl PositionClassification {
    pub fn p(&self) -> usize {
        self.down.len()
    }

    pub fn q(&self) -> usize {
        self.up.len()
    }
}

pub fn classify_positions(u: &Vertex, v: &Vertex) -> Result<PositionClassification, VertexError> {
    check_same(u, v)?;
    let mut class = PositionClassification { down: vec![], up: vec![], equal: vec![] };
    for i in (0..=u.n()).rev() {
        match u.coord(i).cmp(&v.coord(i)) {
            std::cmp::Ordering::Greater => class.down.push(i),
            std::cmp::Ordering::Less => class.up.push(i),
            std::cmp::Ordering::Equal => class.equal.push(i),
        }
    }
    Ok(class)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, m: u32) -> GraphParams {
        GraphParams::new(n, m).unwrap()
    }

    fn v(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    #[test]
    fn make_vertex_validates() {
        assert!(make_vertex(&[2, 0, 0], p(2, 2)).is_ok());
        assert!(make_vertex(&[3, 0, 0, 0], p(3, 3)).is_ok());
        assert_eq!(
            make_vertex(&[1, 1, 1], p(2, 2)),
            Err(VertexError::WrongSum { expected: 2, got: 3 })
        );
        assert_eq!(
            make_vertex(&[1, 1], p(2, 2)),
            Err(VertexError::WrongLength { expected: 3, got: 2 })
        );
        assert_eq!(
            make_vertex(&[3, -1, 0], p(2, 2)),
            Err(VertexError::NegativeCoordinate { index: 1, value: -1 })
        );
    }

    #[test]
    fn params_reject_degenerate() {
        assert!(GraphParams::new(0, 2).is_err());
        assert!(GraphParams::new(2, 0).is_err());
    }

    #[test]
    fn coordinate_indexing_is_right_to_left() {
        let x = v("3,1,0,0");
        assert_eq!(x.coord(3), 3);
        assert_eq!(x.coord(2), 1);
        assert_eq!(x.coord(0), 0);
        assert_eq!(x.to_string(), "3,1,0,0");
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_distance(&v("2,0,0"), &v("0,0,2")).unwrap(), 2);
        assert_eq!(h_distance(&v("1,1,0"), &v("1,1,0")).unwrap(), 0);
        let q = p(4, 5);
        assert_eq!(h_distance(&q.top_corner(), &q.bottom_corner()).unwrap(), 5);
        assert!(matches!(
            h_distance(&v("2,0,0"), &v("2,0,0,0")),
            Err(VertexError::ParamsMismatch { .. })
        ));
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(neighbors(&v("2,0,0")), vec![v("1,0,1"), v("1,1,0")]);
        let mut expected = vec![v("0,2,0"), v("0,1,1"), v("2,0,0"), v("1,0,1")];
        expected.sort();
        assert_eq!(neighbors(&v("1,1,0")), expected);
        for n in 1..6 {
            assert_eq!(neighbors(&p(n, 3).top_corner()).len(), n);
        }
    }

    #[test]
    fn adjacency_examples() {
        assert!(is_adjacent(&v("2,0,0"), &v("1,1,0")).unwrap());
        assert!(!is_adjacent(&v("2,0,0"), &v("0,2,0")).unwrap());
        assert!(!is_adjacent(&v("2,0,0"), &v("2,0,0")).unwrap());
    }

    #[test]
    fn enumeration_small_cases() {
        let t22 = enumerate_vertices(p(2, 2));
        let text: Vec<String> = t22.iter().map(|x| x.to_string()).collect();
        assert_eq!(text, ["0,0,2", "0,1,1", "0,2,0", "1,0,1", "1,1,0", "2,0,0"]);

        // T_1^3 is K_4
        let k4 = enumerate_vertices(p(3, 1));
        assert_eq!(k4.len(), 4);
        for a in &k4 {
            for b in &k4 {
                assert_eq!(is_adjacent(a, b).unwrap(), a != b);
            }
        }

        // T_3^1 is a path on 4 vertices
        let path = enumerate_vertices(p(1, 3));
        assert_eq!(path.len(), 4);
        let edges = path
            .iter()
            .enumerate()
            .flat_map(|(i, a)| path[i + 1..].iter().map(move |b| (a, b)))
            .filter(|(a, b)| is_adjacent(a, b).unwrap())
            .count();
        assert_eq!(edges, 3);
        assert!(path.iter().all(|x| x.degree() <= 2));
    }

    #[test]
    fn vertex_count_matches_enumeration() {
        for n in 1..=6 {
            for m in 1..=6 {
                let q = p(n, m);
                assert_eq!(q.vertices().count() as u64, q.vertex_count(), "{q}");
            }
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify_positions(&v("3,1,0,0"), &v("0,1,1,2")).unwrap();
        assert_eq!((c.down.clone(), c.up.clone(), c.equal.clone()), (vec![3], vec![1, 0], vec![2]));
        assert_eq!((c.p(), c.q()), (1, 2));

        let same = classify_positions(&v("1,1,0"), &v("1,1,0")).unwrap();
        assert!(same.down.is_empty() && same.up.is_empty());
        assert_eq!(same.equal, vec![2, 1, 0]);

        let c = classify_positions(&v("2,0,0"), &v("0,0,2")).unwrap();
        assert_eq!((c.down, c.up, c.equal), (vec![2], vec![0], vec![1]));
    }

    #[test]
    fn parse_errors() {
        assert!(Vertex::parse("2,x,0", p(2, 2)).is_err());
        assert!(Vertex::parse("", p(2, 2)).is_err());
        assert!("0,0".parse::<Vertex>().is_err());
        assert_eq!(Vertex::parse(" 2, 0,0", p(2, 2)).unwrap(), v("2,0,0"));
    }
}
