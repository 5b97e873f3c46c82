//! Constructive disjoint-path containers between two vertices of `T_m^n`.
//!
//! For `u != v` with `p` positions where `u_i > v_i` and `q` positions where
//! `u_i < v_i`, the container holds `p*q` shortest paths plus one path of length
//! `h(u,v) + 1` per position where `u_i == v_i`. Shortest paths come from
//! pairing a rotation of the descending "down" positions with a rotation of the
//! descending "up" positions: each edge drains one unit from the current down
//! coordinate into the current up coordinate, moving to the next coordinate of
//! a schedule once its surplus (or deficit) is exhausted.
//!
//! A detour through equal position `k` first moves a unit from the highest down
//! coordinate into `k`, follows the shortest route with `k` held at `v_k + 1`,
//! and finally drains `k` into the lowest up coordinate.

use serde::Serialize;
use thiserror::Error;

use crate::simplex::{self, classify_positions, h_unchecked, GraphParams, Vertex, VertexError};
use crate::FaultSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RoutingError {
    #[error(transparent)]
    Vertex(#[from] VertexError),
    #[error("source and target coincide ({0})")]
    SameEndpoints(Vertex),
    #[error("rotation {rotation} out of range 1..={len}")]
    RotationOutOfRange { rotation: usize, len: usize },
    #[error("index {0} is not an equal position of the pair")]
    NotEqualPosition(usize),
    #[error("endpoint {0} is faulty")]
    FaultyEndpoint(Vertex),
    #[error("{faults} faults exceed the guaranteed tolerance of {tolerance}")]
    TooManyFaults { faults: usize, tolerance: usize },
    #[error("width {width} out of range 1..={size}")]
    WidthOutOfRange { width: usize, size: usize },
    #[error("no container path avoids the faults")]
    NoFaultFreePath,
}

/// A sequence of vertices, consecutive ones adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        assert!(!vertices.is_empty(), "a path has at least one vertex");
        Path { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn source(&self) -> &Vertex {
        &self.vertices[0]
    }

    pub fn target(&self) -> &Vertex {
        self.vertices.last().expect("nonempty")
    }

    /// Vertices strictly between the endpoints.
    pub fn internal(&self) -> &[Vertex] {
        match self.vertices.len() {
            0..=2 => &[],
            k => &self.vertices[1..k - 1],
        }
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.vertices.contains(v)
    }
}

/// Order in which the coordinates of a position set are visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSchedule {
    pub order: Vec<usize>,
}

/// The descending order of `positions` rotated left by `r - 1`.
pub fn rotation(positions: &[usize], r: usize) -> Result<RotationSchedule, RoutingError> {
    if r < 1 || r > positions.len() {
        return Err(RoutingError::RotationOutOfRange { rotation: r, len: positions.len() });
    }
    let mut order = positions.to_vec();
    order.sort_unstable_by(|a, b| b.cmp(a));
    order.dedup();
    order.rotate_left(r - 1);
    Ok(RotationSchedule { order })
}

/// Shortest `uv`-path driven by the `up_rot`-th up schedule and the
/// `down_rot`-th down schedule. Its length is exactly `h(u, v)`.
pub fn construct_short_path(
    u: &Vertex,
    v: &Vertex,
    up_rot: usize,
    down_rot: usize,
) -> Result<Path, RoutingError> {
    let class = classify_positions(u, v)?;
    if u == v {
        return Err(RoutingError::SameEndpoints(u.clone()));
    }
    let up = rotation(&class.up, up_rot)?;
    let down = rotation(&class.down, down_rot)?;
    Ok(walk_schedules(u, v, &up.order, &down.order))
}

fn walk_schedules(u: &Vertex, v: &Vertex, up: &[usize], down: &[usize]) -> Path {
    let steps = h_unchecked(u, v) as usize;
    let mut vertices = Vec::with_capacity(steps + 1);
    vertices.push(u.clone());
    let mut current = u.clone();
    let (mut ui, mut di) = (0, 0);
    for _ in 0..steps {
        while current.coord(down[di]) == v.coord(down[di]) {
            di += 1;
        }
        while current.coord(up[ui]) == v.coord(up[ui]) {
            ui += 1;
        }
        current = current.transfer(down[di], up[ui]).expect("down coordinate has surplus");
        vertices.push(current.clone());
    }
    debug_assert_eq!(&current, v);
    Path::new(vertices)
}

/// The `h(u,v) + 1` detour whose internal vertices all carry `v_k + 1` at `k`.
pub fn construct_detour_path(u: &Vertex, v: &Vertex, k: usize) -> Result<Path, RoutingError> {
    let class = classify_positions(u, v)?;
    if u == v {
        return Err(RoutingError::SameEndpoints(u.clone()));
    }
    if !class.equal.contains(&k) {
        return Err(RoutingError::NotEqualPosition(k));
    }
    let highest_down = class.down[0];
    let lowest_up = *class.up.last().expect("u != v has an up position");
    let u_prime = u.transfer(highest_down, k).expect("down coordinate is positive");
    let v_prime = v.transfer(lowest_up, k).expect("up coordinate of v is positive");

    let mut vertices = vec![u.clone()];
    if u_prime == v_prime {
        vertices.push(u_prime);
    } else {
        let inner = construct_short_path(&u_prime, &v_prime, 1, 1)?;
        vertices.extend(inner.vertices);
    }
    vertices.push(v.clone());
    Ok(Path::new(vertices))
}

/// Internally disjoint `uv`-paths: all short paths in `(up_rot, down_rot)`
/// order, then one detour per equal position in ascending index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Container {
    pub source: Vertex,
    pub target: Vertex,
    pub short_paths: Vec<Path>,
    pub detour_paths: Vec<Path>,
}

impl Container {
    pub fn params(&self) -> GraphParams {
        self.source.params()
    }

    pub fn len(&self) -> usize {
        self.short_paths.len() + self.detour_paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.short_paths.iter().chain(&self.detour_paths)
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.paths().map(Path::len).collect()
    }

    pub fn to_json(&self) -> ContainerJson {
        let params = self.params();
        ContainerJson {
            params: ParamsJson { n: params.n, m: params.m },
            u: self.source.clone(),
            v: self.target.clone(),
            paths: self.paths().cloned().collect(),
            lengths: self.lengths(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamsJson {
    pub n: usize,
    pub m: u32,
}

/// Wire form of a container.
#[derive(Debug, Clone, Serialize)]
pub struct ContainerJson {
    pub params: ParamsJson,
    pub u: Vertex,
    pub v: Vertex,
    pub paths: Vec<Path>,
    pub lengths: Vec<usize>,
}

/// Expected width `n + 1 - (p + q) + p*q`.
pub fn container_width(n: usize, p: usize, q: usize) -> usize {
    n + 1 - (p + q) + p * q
}

pub fn build_container(u: &Vertex, v: &Vertex) -> Result<Container, RoutingError> {
    let class = classify_positions(u, v)?;
    if u == v {
        return Err(RoutingError::SameEndpoints(u.clone()));
    }
    let mut short_paths = Vec::with_capacity(class.p() * class.q());
    for up_rot in 1..=class.q() {
        for down_rot in 1..=class.p() {
            short_paths.push(construct_short_path(u, v, up_rot, down_rot)?);
        }
    }
    let mut detour_paths = Vec::with_capacity(class.equal.len());
    for &k in class.equal.iter().rev() {
        detour_paths.push(construct_detour_path(u, v, k)?);
    }
    Ok(Container { source: u.clone(), target: v.clone(), short_paths, detour_paths })
}

/// First container path (in container order) with no internal vertex faulty.
///
/// With at most `n - 1` faults some path always survives, because the
/// container has at least `n` internally disjoint paths.
pub fn route_avoiding(u: &Vertex, v: &Vertex, faults: &FaultSet) -> Result<Path, RoutingError> {
    simplex::check_same(u, v)?;
    for x in faults.iter() {
        simplex::check_same(u, x)?;
    }
    for end in [u, v] {
        if faults.contains(end) {
            return Err(RoutingError::FaultyEndpoint(end.clone()));
        }
    }
    let tolerance = u.n() - 1;
    if faults.len() > tolerance {
        return Err(RoutingError::TooManyFaults { faults: faults.len(), tolerance });
    }
    if u == v {
        return Ok(Path::new(vec![u.clone()]));
    }
    let container = build_container(u, v)?;
    let found = container
        .paths()
        .find(|path| path.internal().iter().all(|x| !faults.contains(x)))
        .cloned();
    found.ok_or(RoutingError::NoFaultFreePath)
}

/// The `width` container paths with the smallest maximum length.
pub fn select_width(container: &Container, width: usize) -> Result<Vec<Path>, RoutingError> {
    let size = container.len();
    if width < 1 || width > size {
        return Err(RoutingError::WidthOutOfRange { width, size });
    }
    // container order is already nondecreasing in length
    Ok(container.paths().take(width).cloned().collect())
}
