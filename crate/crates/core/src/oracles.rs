//! Brute-force ground truth for `T_m^n` at desk scale.
//!
//! Nothing here uses the container construction or the h-metric. Adjacency is
//! recomputed from the definition by a pairwise coordinate scan, distances come
//! from BFS, local connectivity from unit-capacity flow on the vertex-split
//! graph, and wide diameters from exhaustive bounded path packing.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::simplex::{self, GraphParams, Vertex, VertexError};

/// Node-expansion cap used by bounded disjoint-path searches unless overridden.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Vertex(#[from] VertexError),
    #[error("vertex {0} belongs to a different instance")]
    ForeignVertex(Vertex),
    #[error("endpoint {0} is faulty")]
    FaultyEndpoint(Vertex),
    #[error("fewer than two vertices survive the faults")]
    TooFewSurvivors,
    #[error("endpoints coincide ({0})")]
    SameEndpoints(Vertex),
    #[error("width must be at least 1")]
    ZeroWidth,
    #[error("search budget of {limit} expansions exceeded")]
    BudgetExceeded { limit: u64 },
}

/// Vertices removed from the graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FaultSet(BTreeSet<Vertex>);

impl FaultSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.0.contains(v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vertex> {
        self.0.iter()
    }
}

impl FromIterator<Vertex> for FaultSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        FaultSet(iter.into_iter().collect())
    }
}

/// A distance or diameter that may be infinite (disconnected graph).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extent {
    Finite(u32),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<u32> {
        match self {
            Extent::Finite(d) => Some(d),
            Extent::Infinite => None,
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(d) => write!(f, "{d}"),
            Extent::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Extent::Finite(d) => serializer.serialize_u32(*d),
            Extent::Infinite => serializer.serialize_str("infinity"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Diameter,
    FaultDiameter,
    WideDiameter,
}

/// An extremal value together with the pair (and faults) realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterReport {
    pub quantity: Quantity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    pub value: Extent,
    pub witness_pair: (Vertex, Vertex),
    pub witness_faults: FaultSet,
}

/// How fault sets are enumerated for the fault diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FaultEnumeration {
    /// Only sets of size `omega - 1`; deleting more vertices never shortens a distance.
    #[default]
    MaximalOnly,
    /// Every size `0..omega`, for auditing the shortcut above.
    AllSizes,
}

/// `T_m^n` materialized with index-based adjacency lists.
#[derive(Debug, Clone)]
pub struct OracleGraph {
    params: GraphParams,
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    adj: Vec<Vec<usize>>,
}

/// Adjacency straight from the definition: two coordinates differ by one, the
/// rest agree.
fn differ_by_one_transfer(a: &Vertex, b: &Vertex) -> bool {
    let mut plus = 0;
    let mut minus = 0;
    for (&x, &y) in a.coords().iter().zip(b.coords()) {
        match i64::from(x) - i64::from(y) {
            0 => {}
            1 => plus += 1,
            -1 => minus += 1,
            _ => return false,
        }
    }
    plus == 1 && minus == 1
}

impl OracleGraph {
    pub fn new(params: GraphParams) -> Self {
        let vertices = simplex::enumerate_vertices(params);
        let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let count = vertices.len();
        let mut adj = vec![Vec::new(); count];
        for a in 0..count {
            for b in a + 1..count {
                if differ_by_one_transfer(&vertices[a], &vertices[b]) {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        OracleGraph { params, vertices, index, adj }
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn index_of(&self, v: &Vertex) -> Result<usize, OracleError> {
        self.index.get(v).copied().ok_or_else(|| OracleError::ForeignVertex(v.clone()))
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    fn fault_mask(&self, faults: &FaultSet) -> Result<Vec<bool>, OracleError> {
        let mut mask = vec![false; self.vertex_count()];
        for f in faults.iter() {
            mask[self.index_of(f)?] = true;
        }
        Ok(mask)
    }

    /// BFS distances from `src`, skipping `blocked` vertices. `u32::MAX` marks unreachable.
    pub fn bfs_from(&self, src: usize, blocked: &[bool]) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !blocked[y] && dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Diameter of the graph minus `blocked`, with the first pair (in index
    /// order) realizing it.
    fn diameter_masked(&self, blocked: &[bool]) -> Option<(Extent, usize, usize)> {
        let alive: Vec<usize> = (0..self.vertex_count()).filter(|&i| !blocked[i]).collect();
        if alive.len() < 2 {
            return None;
        }
        let mut best = (Extent::Finite(0), alive[0], alive[1]);
        for (pos, &a) in alive.iter().enumerate() {
            let dist = self.bfs_from(a, blocked);
            for &b in &alive[pos + 1..] {
                let d = match dist[b] {
                    u32::MAX => Extent::Infinite,
                    d => Extent::Finite(d),
                };
                if d > best.0 {
                    best = (d, a, b);
                    if d == Extent::Infinite {
                        return Some(best);
                    }
                }
            }
        }
        Some(best)
    }

    pub fn diameter(&self, faults: &FaultSet) -> Result<DiameterReport, OracleError> {
        let mask = self.fault_mask(faults)?;
        let (value, a, b) = self.diameter_masked(&mask).ok_or(OracleError::TooFewSurvivors)?;
        Ok(DiameterReport {
            quantity: Quantity::Diameter,
            omega: None,
            value,
            witness_pair: (self.vertex(a).clone(), self.vertex(b).clone()),
            witness_faults: faults.clone(),
        })
    }

    /// Maximum number of internally vertex-disjoint `ab`-paths.
    pub fn local_connectivity(&self, a: usize, b: usize) -> usize {
        let mut net = SplitNetwork::new(self, a, b);
        net.max_flow()
    }

    pub fn connectivity(&self) -> Result<usize, OracleError> {
        let count = self.vertex_count();
        if count < 2 {
            return Err(OracleError::TooFewSurvivors);
        }
        let pairs: Vec<(usize, usize)> = (0..count).tuple_combinations().collect();
        let nonadjacent: Vec<(usize, usize)> =
            pairs.iter().copied().filter(|&(a, b)| !self.are_adjacent(a, b)).collect();
        let candidates = if nonadjacent.is_empty() { pairs } else { nonadjacent };
        Ok(candidates
            .par_iter()
            .map(|&(a, b)| self.local_connectivity(a, b))
            .min()
            .expect("at least one pair"))
    }

    pub fn fault_diameter(
        &self,
        omega: usize,
        mode: FaultEnumeration,
    ) -> Result<DiameterReport, OracleError> {
        if omega == 0 {
            return Err(OracleError::ZeroWidth);
        }
        let count = self.vertex_count();
        let sizes: Vec<usize> = match mode {
            FaultEnumeration::MaximalOnly => vec![omega - 1],
            FaultEnumeration::AllSizes => (0..omega).collect(),
        };
        let fault_sets: Vec<Vec<usize>> = sizes
            .into_iter()
            .filter(|&size| count >= size + 2)
            .flat_map(|size| (0..count).combinations(size))
            .collect();
        let best = fault_sets
            .par_iter()
            .enumerate()
            .filter_map(|(order, set)| {
                let mut mask = vec![false; count];
                set.iter().for_each(|&i| mask[i] = true);
                self.diameter_masked(&mask).map(|(d, a, b)| (d, order, a, b))
            })
            .reduce_with(|x, y| if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x })
            .ok_or(OracleError::TooFewSurvivors)?;
        let (value, order, a, b) = best;
        Ok(DiameterReport {
            quantity: Quantity::FaultDiameter,
            omega: Some(omega),
            value,
            witness_pair: (self.vertex(a).clone(), self.vertex(b).clone()),
            witness_faults: fault_sets[order].iter().map(|&i| self.vertex(i).clone()).collect(),
        })
    }

    /// Whether `width` internally disjoint `ab`-paths of length at most
    /// `max_len` exist. Every path extension and packing step costs one unit
    /// of `budget`.
    pub fn disjoint_paths_within(
        &self,
        a: usize,
        b: usize,
        width: usize,
        max_len: u32,
        budget: u64,
    ) -> Result<bool, OracleError> {
        if a == b {
            return Err(OracleError::SameEndpoints(self.vertex(a).clone()));
        }
        if width == 0 {
            return Ok(true);
        }
        let mut search = PackingSearch::new(self, a, b, max_len, budget);
        search.collect_paths()?;
        search.pack(width)
    }

    /// Smallest length bound admitting `width` disjoint `ab`-paths, searched
    /// upward from the BFS distance.
    pub fn min_wide_length(
        &self,
        a: usize,
        b: usize,
        width: usize,
        budget: u64,
    ) -> Result<Extent, OracleError> {
        let unblocked = vec![false; self.vertex_count()];
        let start = self.bfs_from(a, &unblocked)[b];
        if start == u32::MAX {
            return Ok(Extent::Infinite);
        }
        let longest = (self.vertex_count() - 1) as u32;
        for len in start..=longest {
            if self.disjoint_paths_within(a, b, width, len, budget)? {
                return Ok(Extent::Finite(len));
            }
        }
        Ok(Extent::Infinite)
    }

    pub fn wide_diameter(&self, width: usize, budget: u64) -> Result<DiameterReport, OracleError> {
        if width == 0 {
            return Err(OracleError::ZeroWidth);
        }
        let pairs: Vec<(usize, usize)> = (0..self.vertex_count()).tuple_combinations().collect();
        if pairs.is_empty() {
            return Err(OracleError::TooFewSurvivors);
        }
        let results: Vec<Result<Extent, OracleError>> = pairs
            .par_iter()
            .map(|&(a, b)| self.min_wide_length(a, b, width, budget))
            .collect();
        let mut best: Option<(Extent, usize)> = None;
        for (order, result) in results.into_iter().enumerate() {
            let value = result?;
            if best.is_none_or(|(d, _)| value > d) {
                best = Some((value, order));
            }
        }
        let (value, order) = best.expect("nonempty");
        let (a, b) = pairs[order];
        Ok(DiameterReport {
            quantity: Quantity::WideDiameter,
            omega: Some(width),
            value,
            witness_pair: (self.vertex(a).clone(), self.vertex(b).clone()),
            witness_faults: FaultSet::new(),
        })
    }

    /// Whether every shortest `ab`-path passes through `w`, by walking the
    /// shortest-path DAG looking for a route that avoids `w`.
    pub fn all_shortest_paths_through(&self, a: usize, b: usize, w: usize) -> bool {
        if w == a || w == b {
            return true;
        }
        let unblocked = vec![false; self.vertex_count()];
        let from_a = self.bfs_from(a, &unblocked);
        let from_b = self.bfs_from(b, &unblocked);
        let total = from_a[b];
        if total == u32::MAX {
            return true;
        }
        // dead[x]: no w-avoiding DAG route from x to b
        let mut dead = vec![false; self.vertex_count()];
        let mut stack = vec![(a, 0usize)];
        while let Some(&mut (x, ref mut next)) = stack.last_mut() {
            if x == b {
                return false;
            }
            let succ = self.adj[x].get(*next).copied();
            *next += 1;
            match succ {
                Some(y)
                    if y != w
                        && !dead[y]
                        && from_a[y] == from_a[x] + 1
                        && from_a[y] + from_b[y] == total =>
                {
                    stack.push((y, 0));
                }
                Some(_) => {}
                None => {
                    dead[x] = true;
                    stack.pop();
                }
            }
        }
        true
    }
}

/// Unit-capacity residual network on the vertex-split graph: each vertex
/// other than the terminals becomes `in -> out` with capacity one.
struct SplitNetwork {
    // edge list: (to, residual capacity); edge e and e ^ 1 are a pair
    edges: Vec<(usize, u32)>,
    out: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

impl SplitNetwork {
    fn new(graph: &OracleGraph, a: usize, b: usize) -> Self {
        let count = graph.vertex_count();
        let mut net = SplitNetwork {
            edges: Vec::new(),
            out: vec![Vec::new(); 2 * count],
            source: 2 * a + 1,
            sink: 2 * b,
        };
        let terminal_cap = count as u32;
        for x in 0..count {
            let cap = if x == a || x == b { terminal_cap } else { 1 };
            net.add_edge(2 * x, 2 * x + 1, cap);
            for &y in graph.neighbors(x) {
                net.add_edge(2 * x + 1, 2 * y, 1);
            }
        }
        net
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.edges.len());
        self.edges.push((to, cap));
        self.out[to].push(self.edges.len());
        self.edges.push((from, 0));
    }

    fn max_flow(&mut self) -> usize {
        let mut flow = 0;
        while let Some(path) = self.augmenting_path() {
            for e in path {
                self.edges[e].1 -= 1;
                self.edges[e ^ 1].1 += 1;
            }
            flow += 1;
        }
        flow
    }

    fn augmenting_path(&self) -> Option<Vec<usize>> {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        let mut queue = VecDeque::from([self.source]);
        seen[self.source] = true;
        while let Some(x) = queue.pop_front() {
            if x == self.sink {
                break;
            }
            for &e in &self.out[x] {
                let (y, cap) = self.edges[e];
                if cap > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = e;
                    queue.push_back(y);
                }
            }
        }
        if !seen[self.sink] {
            return None;
        }
        let mut path = Vec::new();
        let mut x = self.sink;
        while x != self.source {
            let e = via[x];
            path.push(e);
            x = self.edges[e ^ 1].0;
        }
        Some(path)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn with_capacity(bits: usize) -> Self {
        BitSet(vec![0; bits.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn is_disjoint(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(x, y)| x & y == 0)
    }

    fn union_with(&mut self, other: &BitSet) {
        self.0.iter_mut().zip(&other.0).for_each(|(x, y)| *x |= y);
    }

    fn difference_with(&mut self, other: &BitSet) {
        self.0.iter_mut().zip(&other.0).for_each(|(x, y)| *x &= !y);
    }
}

/// Exhaustive search for disjoint length-bounded paths: enumerate every simple
/// path within the bound, keep one per internal vertex set, then pack
/// shortest-first.
struct PackingSearch<'g> {
    graph: &'g OracleGraph,
    source: usize,
    target: usize,
    max_len: u32,
    to_target: Vec<u32>,
    budget: u64,
    spent: u64,
    candidates: Vec<(u32, BitSet)>,
}

impl<'g> PackingSearch<'g> {
    fn new(graph: &'g OracleGraph, source: usize, target: usize, max_len: u32, budget: u64) -> Self {
        let unblocked = vec![false; graph.vertex_count()];
        PackingSearch {
            graph,
            source,
            target,
            max_len,
            to_target: graph.bfs_from(target, &unblocked),
            budget,
            spent: 0,
            candidates: Vec::new(),
        }
    }

    fn charge(&mut self) -> Result<(), OracleError> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(OracleError::BudgetExceeded { limit: self.budget });
        }
        Ok(())
    }

    fn collect_paths(&mut self) -> Result<(), OracleError> {
        let count = self.graph.vertex_count();
        let mut on_path = vec![false; count];
        on_path[self.source] = true;
        let mut internal = Vec::new();
        let mut found: HashMap<BitSet, u32> = HashMap::new();
        self.extend(self.source, &mut on_path, &mut internal, &mut found)?;
        let mut candidates: Vec<(u32, BitSet)> = found.into_iter().map(|(set, len)| (len, set)).collect();
        candidates.sort();
        self.candidates = candidates;
        Ok(())
    }

    fn extend(
        &mut self,
        x: usize,
        on_path: &mut [bool],
        internal: &mut Vec<usize>,
        found: &mut HashMap<BitSet, u32>,
    ) -> Result<(), OracleError> {
        let len = internal.len() as u32 + 1;
        for &y in self.graph.neighbors(x) {
            if y == self.target {
                self.charge()?;
                let mut set = BitSet::with_capacity(self.graph.vertex_count());
                internal.iter().for_each(|&i| set.insert(i));
                let entry = found.entry(set).or_insert(len);
                *entry = (*entry).min(len);
                continue;
            }
            let remaining = self.to_target[y];
            if on_path[y] || remaining == u32::MAX || len + remaining > self.max_len {
                continue;
            }
            self.charge()?;
            on_path[y] = true;
            internal.push(y);
            self.extend(y, on_path, internal, found)?;
            internal.pop();
            on_path[y] = false;
        }
        Ok(())
    }

    fn pack(&mut self, width: usize) -> Result<bool, OracleError> {
        if self.candidates.len() < width {
            return Ok(false);
        }
        let mut used = BitSet::with_capacity(self.graph.vertex_count());
        self.pack_from(0, width, &mut used)
    }

    fn pack_from(&mut self, start: usize, need: usize, used: &mut BitSet) -> Result<bool, OracleError> {
        if need == 0 {
            return Ok(true);
        }
        for i in start..self.candidates.len() {
            if self.candidates.len() - i < need {
                break;
            }
            self.charge()?;
            if !self.candidates[i].1.is_disjoint(used) {
                continue;
            }
            let set = self.candidates[i].1.clone();
            used.union_with(&set);
            let done = self.pack_from(i + 1, need - 1, used)?;
            used.difference_with(&set);
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// What is wrong with a claimed family of disjoint paths.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathDefect {
    #[error("path {path} has the wrong endpoints")]
    Endpoints { path: usize },
    #[error("path {path}: step {step} is not an edge")]
    NotAnEdge { path: usize, step: usize },
    #[error("path {path} revisits vertex {vertex}")]
    Repeats { path: usize, vertex: Vertex },
    #[error("paths {first} and {second} share internal vertex {vertex}")]
    Shared { first: usize, second: usize, vertex: Vertex },
}

/// Checks that every path joins `u` to `v` along genuine edges without
/// repeating a vertex, and that no internal vertex is shared between paths.
pub fn audit_disjoint_paths<'a, I>(u: &Vertex, v: &Vertex, paths: I) -> Result<(), PathDefect>
where
    I: IntoIterator<Item = &'a [Vertex]>,
{
    let mut owner: HashMap<&Vertex, usize> = HashMap::new();
    for (idx, path) in paths.into_iter().enumerate() {
        if path.first() != Some(u) || path.last() != Some(v) {
            return Err(PathDefect::Endpoints { path: idx });
        }
        if let Some(step) = path.windows(2).position(|w| !differ_by_one_transfer(&w[0], &w[1])) {
            return Err(PathDefect::NotAnEdge { path: idx, step });
        }
        let mut seen = HashSet::new();
        if let Some(dup) = path.iter().find(|x| !seen.insert(*x)) {
            return Err(PathDefect::Repeats { path: idx, vertex: dup.clone() });
        }
        for x in &path[1..path.len() - 1] {
            if let Some(&first) = owner.get(x) {
                return Err(PathDefect::Shared { first, second: idx, vertex: x.clone() });
            }
            owner.insert(x, idx);
        }
    }
    Ok(())
}

fn check_instance(params: GraphParams, v: &Vertex) -> Result<(), OracleError> {
    if v.params() != params {
        return Err(OracleError::ForeignVertex(v.clone()));
    }
    Ok(())
}

/// Shortest `uv` distance in `T_m^n - faults`, walking implicit adjacency.
pub fn bfs_distance(
    params: GraphParams,
    u: &Vertex,
    v: &Vertex,
    faults: &FaultSet,
) -> Result<Extent, OracleError> {
    check_instance(params, u)?;
    check_instance(params, v)?;
    for end in [u, v] {
        if faults.contains(end) {
            return Err(OracleError::FaultyEndpoint(end.clone()));
        }
    }
    let mut dist: HashMap<Vertex, u32> = HashMap::from([(u.clone(), 0)]);
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if &x == v {
            return Ok(Extent::Finite(d));
        }
        for y in simplex::neighbors(&x) {
            if !faults.contains(&y) && !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    Ok(Extent::Infinite)
}

pub fn exact_diameter(params: GraphParams, faults: &FaultSet) -> Result<DiameterReport, OracleError> {
    OracleGraph::new(params).diameter(faults)
}

pub fn max_disjoint_paths(params: GraphParams, u: &Vertex, v: &Vertex) -> Result<usize, OracleError> {
    let graph = OracleGraph::new(params);
    let (a, b) = (graph.index_of(u)?, graph.index_of(v)?);
    if a == b {
        return Err(OracleError::SameEndpoints(u.clone()));
    }
    Ok(graph.local_connectivity(a, b))
}

pub fn vertex_connectivity(params: GraphParams) -> Result<usize, OracleError> {
    OracleGraph::new(params).connectivity()
}

pub fn exact_fault_diameter(
    params: GraphParams,
    omega: usize,
    mode: FaultEnumeration,
) -> Result<DiameterReport, OracleError> {
    OracleGraph::new(params).fault_diameter(omega, mode)
}

pub fn disjoint_paths_within(
    params: GraphParams,
    u: &Vertex,
    v: &Vertex,
    width: usize,
    max_len: u32,
    budget: u64,
) -> Result<bool, OracleError> {
    let graph = OracleGraph::new(params);
    let (a, b) = (graph.index_of(u)?, graph.index_of(v)?);
    graph.disjoint_paths_within(a, b, width, max_len, budget)
}

pub fn exact_wide_diameter(
    params: GraphParams,
    width: usize,
    budget: u64,
) -> Result<DiameterReport, OracleError> {
    OracleGraph::new(params).wide_diameter(width, budget)
}

pub fn all_shortest_paths_through(
    params: GraphParams,
    u: &Vertex,
    v: &Vertex,
    w: &Vertex,
) -> Result<bool, OracleError> {
    let graph = OracleGraph::new(params);
    let (a, b, c) = (graph.index_of(u)?, graph.index_of(v)?, graph.index_of(w)?);
    if a == b {
        return Err(OracleError::SameEndpoints(u.clone()));
    }
    Ok(graph.all_shortest_paths_through(a, b, c))
}
