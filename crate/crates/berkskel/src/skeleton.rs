//! Metric genus graphs: the combinatorial shadow of a skeleton of a nice
//! curve.
//!
//! Vertices are points of type 1 or 2 with a genus, edges carry exact
//! log-lengths, with `inf` exactly on edges running into a type-1 point.
//! Loops and parallel edges are allowed. Type-1 vertices have degree exactly
//! one: they model the closed endpoints of punched discs attached to the
//! graph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::logval::LogValue;
use crate::report::{Check, Finding, Report, ValidationReport};

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(String);

        impl $name {
            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl<T: Into<String>> From<T> for $name {
            fn from(value: T) -> Self {
                $name(value.into())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

id_type!(
    /// Name of a vertex within one graph.
    VertexId
);
id_type!(
    /// Name of an edge within one graph.
    EdgeId
);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointType {
    One,
    Two,
}

impl PointType {
    pub fn as_number(self) -> u8 {
        match self {
            PointType::One => 1,
            PointType::Two => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub point_type: PointType,
    pub genus: u64,
}

/// Which of the two ordered endpoint slots of an edge; slots, not vertices,
/// distinguish the two germs of a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EndpointSlot {
    First,
    Second,
}

impl EndpointSlot {
    pub fn other(self) -> Self {
        match self {
            EndpointSlot::First => EndpointSlot::Second,
            EndpointSlot::Second => EndpointSlot::First,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            EndpointSlot::First => 0,
            EndpointSlot::Second => 1,
        }
    }

    pub fn from_index(index: u8) -> Option<Self> {
        match index {
            0 => Some(EndpointSlot::First),
            1 => Some(EndpointSlot::Second),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub endpoints: (VertexId, VertexId),
    pub log_length: LogValue,
}

impl Edge {
    pub fn endpoint(&self, slot: EndpointSlot) -> &VertexId {
        match slot {
            EndpointSlot::First => &self.endpoints.0,
            EndpointSlot::Second => &self.endpoints.1,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.endpoints.0 == self.endpoints.1
    }

    /// The slot at which `v` sits, preferring the first for loops.
    pub fn slot_of(&self, v: &VertexId) -> Option<EndpointSlot> {
        if &self.endpoints.0 == v {
            Some(EndpointSlot::First)
        } else if &self.endpoints.1 == v {
            Some(EndpointSlot::Second)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeletonError {
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("point address out of range: {0}")]
    OutOfRange(String),
    #[error("graph fails validation; run validate() for the report")]
    InvalidGraph,
}

/// A point of the skeleton: a vertex, or an interior point of an edge
/// addressed by its depth from a named endpoint.
///
/// `(e, a, d)` and `(e, b, L - d)` address the same point when `a` and `b`
/// are the two distinct endpoints. On a loop the named endpoint cannot
/// distinguish the two germs, so depths on loops are always measured from
/// the edge's first endpoint slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkeletonPoint {
    Vertex(VertexId),
    Interior {
        edge: EdgeId,
        from: VertexId,
        depth: LogValue,
    },
}

/// A metric genus graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SkeletonGraph {
    vertices: BTreeMap<VertexId, Vertex>,
    edges: BTreeMap<EdgeId, Edge>,
}

impl SkeletonGraph {
    pub fn new() -> Self {
        SkeletonGraph::default()
    }

    pub fn add_vertex(
        &mut self,
        id: impl Into<VertexId>,
        point_type: PointType,
        genus: u64,
    ) -> Result<(), SkeletonError> {
        let id = id.into();
        if self.vertices.contains_key(&id) {
            return Err(SkeletonError::DuplicateId(id.to_string()));
        }
        self.vertices.insert(
            id.clone(),
            Vertex {
                id,
                point_type,
                genus,
            },
        );
        Ok(())
    }

    pub fn add_edge(
        &mut self,
        id: impl Into<EdgeId>,
        a: impl Into<VertexId>,
        b: impl Into<VertexId>,
        log_length: LogValue,
    ) -> Result<(), SkeletonError> {
        let (id, a, b) = (id.into(), a.into(), b.into());
        if self.edges.contains_key(&id) {
            return Err(SkeletonError::DuplicateId(id.to_string()));
        }
        for v in [&a, &b] {
            if !self.vertices.contains_key(v) {
                return Err(SkeletonError::UnknownVertex(v.clone()));
            }
        }
        self.edges.insert(
            id.clone(),
            Edge {
                id,
                endpoints: (a, b),
                log_length,
            },
        );
        Ok(())
    }

    pub fn vertex(&self, id: &VertexId) -> Result<&Vertex, SkeletonError> {
        self.vertices
            .get(id)
            .ok_or_else(|| SkeletonError::UnknownVertex(id.clone()))
    }

    pub fn edge(&self, id: &EdgeId) -> Result<&Edge, SkeletonError> {
        self.edges
            .get(id)
            .ok_or_else(|| SkeletonError::UnknownEdge(id.clone()))
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.values()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.values()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, id: &VertexId) -> bool {
        self.vertices.contains_key(id)
    }

    /// Edge germs at `v` as (edge, slot) pairs; a loop contributes both slots.
    pub fn germs_at<'a>(&'a self, v: &'a VertexId) -> impl Iterator<Item = (&'a Edge, EndpointSlot)> {
        self.edges.values().flat_map(move |e| {
            let mut out = Vec::new();
            if &e.endpoints.0 == v {
                out.push((e, EndpointSlot::First));
            }
            if &e.endpoints.1 == v {
                out.push((e, EndpointSlot::Second));
            }
            out
        })
    }

    /// Vertex degree, counting loops twice.
    pub fn degree(&self, v: &VertexId) -> usize {
        self.germs_at(v).count()
    }

    /// Checks every structural invariant, reporting each violation.
    pub fn validate(&self) -> ValidationReport {
        let mut report = Report::new();
        if !self.vertices.values().any(|v| v.point_type == PointType::Two) {
            report.push(Finding::error(
                Check::NeedsType2Vertex,
                ["graph"],
                "a skeleton contains at least one type-2 point",
            ));
        }
        for v in self.vertices.values() {
            if v.point_type == PointType::One {
                if v.genus != 0 {
                    report.push(Finding::error(
                        Check::Type1Genus,
                        [v.id.as_str()],
                        format!("type-1 vertex has genus {}", v.genus),
                    ));
                }
                let degree = self.degree(&v.id);
                if degree != 1 {
                    report.push(
                        Finding::error(
                            Check::Type1Degree,
                            [v.id.as_str()],
                            "type-1 vertices have degree exactly 1",
                        )
                        .with_sides(degree, 1),
                    );
                }
            }
        }
        for e in self.edges.values() {
            let touches_type1 = [&e.endpoints.0, &e.endpoints.1].iter().any(|v| {
                self.vertices
                    .get(v)
                    .is_some_and(|v| v.point_type == PointType::One)
            });
            match (&e.log_length, touches_type1) {
                (LogValue::Infinite, false) => {
                    report.push(Finding::error(
                        Check::EdgeLengthType,
                        [e.id.as_str()],
                        "infinite length requires a type-1 endpoint",
                    ));
                }
                (LogValue::Finite(_), true) => {
                    report.push(Finding::error(
                        Check::EdgeLengthType,
                        [e.id.as_str()],
                        "an edge at a type-1 endpoint has infinite length",
                    ));
                }
                (LogValue::Finite(len), false) if !len.is_positive() => {
                    report.push(Finding::error(
                        Check::EdgeLengthType,
                        [e.id.as_str()],
                        "finite edge length must be positive",
                    ));
                }
                _ => {}
            }
        }
        if let Some(missing) = self.disconnected_vertex() {
            report.push(Finding::error(
                Check::Connectivity,
                [missing.as_str()],
                "graph is not connected",
            ));
        }
        report.sorted()
    }

    fn disconnected_vertex(&self) -> Option<&VertexId> {
        let start = self.vertices.keys().next()?;
        let mut seen: BTreeSet<&VertexId> = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(v) = queue.pop_front() {
            for (e, slot) in self.germs_at(v) {
                let other = e.endpoint(slot.other());
                if seen.insert(other) {
                    queue.push_back(other);
                }
            }
        }
        self.vertices.keys().find(|v| !seen.contains(v))
    }

    /// First Betti number `#E - #V + 1` of a valid (connected) graph.
    pub fn first_betti(&self) -> Result<u64, SkeletonError> {
        if !self.validate().passed() {
            return Err(SkeletonError::InvalidGraph);
        }
        Ok((self.edges.len() + 1 - self.vertices.len()) as u64)
    }

    /// Total genus: `h¹(Γ) + Σ g(v)`.
    pub fn total_genus(&self) -> Result<u64, SkeletonError> {
        let betti = self.first_betti()?;
        Ok(betti + self.vertices.values().map(|v| v.genus).sum::<u64>())
    }

    /// Normalizes a point address: boundary depths collapse to vertices and
    /// interior points are re-addressed from the canonical endpoint (smaller
    /// id; for infinite edges the finite, type-2 end). Idempotent.
    pub fn locate(&self, point: &SkeletonPoint) -> Result<SkeletonPoint, SkeletonError> {
        match point {
            SkeletonPoint::Vertex(v) => {
                self.vertex(v)?;
                Ok(point.clone())
            }
            SkeletonPoint::Interior { edge, from, depth } => {
                let e = self.edge(edge)?;
                let slot = e
                    .slot_of(from)
                    .ok_or_else(|| SkeletonError::UnknownVertex(from.clone()))?;
                let far = e.endpoint(slot.other());
                if depth.is_zero() {
                    return Ok(SkeletonPoint::Vertex(from.clone()));
                }
                if depth == &e.log_length {
                    return Ok(SkeletonPoint::Vertex(far.clone()));
                }
                if depth > &e.log_length {
                    return Err(SkeletonError::OutOfRange(format!(
                        "depth {depth} exceeds length {} of edge {edge}",
                        e.log_length
                    )));
                }
                // 0 < depth < length from here on.
                if e.is_loop() {
                    return Ok(point.clone());
                }
                if !e.log_length.is_finite() {
                    // Interior points of an infinite edge sit at infinite
                    // distance from the type-1 end; only the finite-end
                    // parametrization addresses them.
                    let from_type1 = self.vertex(from)?.point_type == PointType::One;
                    if from_type1 || !depth.is_finite() {
                        return Err(SkeletonError::OutOfRange(format!(
                            "edge {edge} is only parametrized from its type-2 end"
                        )));
                    }
                    return Ok(point.clone());
                }
                let canonical = if e.endpoints.0 <= e.endpoints.1 {
                    e.endpoints.0.clone()
                } else {
                    e.endpoints.1.clone()
                };
                if from == &canonical {
                    Ok(point.clone())
                } else {
                    let flipped = e
                        .log_length
                        .checked_sub(depth)
                        .map_err(|e| SkeletonError::OutOfRange(e.to_string()))?;
                    Ok(SkeletonPoint::Interior {
                        edge: edge.clone(),
                        from: canonical,
                        depth: flipped,
                    })
                }
            }
        }
    }

    /// Splits an edge at `depth` from `from` with a fresh genus-0 type-2
    /// vertex. Refinement never changes the genus. The first new edge runs
    /// `from -> mid`, the second `mid -> far`.
    pub fn subdivide(
        &mut self,
        edge: &EdgeId,
        from: &VertexId,
        depth: LogValue,
        mid: impl Into<VertexId>,
        first: impl Into<EdgeId>,
        second: impl Into<EdgeId>,
    ) -> Result<(), SkeletonError> {
        let e = self.edge(edge)?.clone();
        let slot = e
            .slot_of(from)
            .ok_or_else(|| SkeletonError::UnknownVertex(from.clone()))?;
        if self.vertex(from)?.point_type != PointType::Two {
            return Err(SkeletonError::OutOfRange(
                "subdivision is measured from a type-2 endpoint".to_string(),
            ));
        }
        if !depth.is_finite() || depth.is_zero() || depth >= e.log_length {
            return Err(SkeletonError::OutOfRange(format!(
                "subdivision depth {depth} must satisfy 0 < depth < {}",
                e.log_length
            )));
        }
        let rest = e
            .log_length
            .checked_sub(&depth)
            .map_err(|err| SkeletonError::OutOfRange(err.to_string()))?;
        let far = e.endpoint(slot.other()).clone();
        let mid = mid.into();
        self.add_vertex(mid.clone(), PointType::Two, 0)?;
        self.edges.remove(edge);
        self.add_edge(first, from.clone(), mid.clone(), depth)?;
        self.add_edge(second, mid, far, rest)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logval::rat;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn gauss_point() -> SkeletonGraph {
        let mut g = SkeletonGraph::new();
        g.add_vertex("gauss", PointType::Two, 0).unwrap();
        g
    }

    fn projective_line() -> SkeletonGraph {
        // Skeleton [0, inf] through the Gauss point.
        let mut g = gauss_point();
        g.add_vertex("zero", PointType::One, 0).unwrap();
        g.add_vertex("infty", PointType::One, 0).unwrap();
        g.add_edge("e0", "zero", "gauss", LogValue::Infinite).unwrap();
        g.add_edge("e1", "gauss", "infty", LogValue::Infinite).unwrap();
        g
    }

    fn two_cycle() -> SkeletonGraph {
        let mut g = SkeletonGraph::new();
        g.add_vertex("a", PointType::Two, 0).unwrap();
        g.add_vertex("b", PointType::Two, 0).unwrap();
        g.add_edge("e0", "a", "b", LogValue::of(1, 1)).unwrap();
        g.add_edge("e1", "a", "b", LogValue::of(2, 1)).unwrap();
        g
    }

    #[test]
    fn gauss_point_alone_is_valid() {
        assert!(gauss_point().validate().is_empty());
    }

    #[test]
    fn finite_edge_between_type1_points_is_invalid() {
        let mut g = SkeletonGraph::new();
        g.add_vertex("a", PointType::One, 0).unwrap();
        g.add_vertex("b", PointType::One, 0).unwrap();
        g.add_edge("e", "a", "b", LogValue::of(1, 1)).unwrap();
        let report = g.validate();
        assert!(!report.passed());
        assert!(report
            .findings()
            .iter()
            .any(|f| f.check == Check::EdgeLengthType));
    }

    #[test]
    fn cycle_of_type2_vertices_is_valid() {
        assert!(two_cycle().validate().is_empty());
    }

    #[test]
    fn disconnected_graph_is_reported() {
        let mut g = gauss_point();
        g.add_vertex("island", PointType::Two, 1).unwrap();
        let report = g.validate();
        assert!(report
            .findings()
            .iter()
            .any(|f| f.check == Check::Connectivity));
    }

    #[test]
    fn type1_degree_must_be_one() {
        let mut g = projective_line();
        g.add_vertex("gauss2", PointType::Two, 0).unwrap();
        g.add_edge("extra", "zero", "gauss2", LogValue::Infinite).unwrap();
        assert!(g
            .validate()
            .findings()
            .iter()
            .any(|f| f.check == Check::Type1Degree));
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(projective_line().first_betti().unwrap(), 0);
        assert_eq!(two_cycle().first_betti().unwrap(), 1);

        let mut loop_graph = gauss_point();
        loop_graph
            .add_edge("l", "gauss", "gauss", LogValue::of(1, 1))
            .unwrap();
        assert_eq!(loop_graph.first_betti().unwrap(), 1);

        let mut theta = two_cycle();
        theta.add_edge("e2", "a", "b", LogValue::of(3, 1)).unwrap();
        assert_eq!(theta.first_betti().unwrap(), 2);
    }

    #[test]
    fn total_genus_examples() {
        assert_eq!(gauss_point().total_genus().unwrap(), 0);

        let mut elliptic = SkeletonGraph::new();
        elliptic.add_vertex("good", PointType::Two, 1).unwrap();
        assert_eq!(elliptic.total_genus().unwrap(), 1);

        // Tate curve: a cycle of genus-0 vertices.
        assert_eq!(two_cycle().total_genus().unwrap(), 1);

        let mut theta = two_cycle();
        theta.add_edge("e2", "a", "b", LogValue::of(3, 1)).unwrap();
        assert_eq!(theta.total_genus().unwrap(), 2);
    }

    #[test]
    fn invalid_graph_has_no_genus() {
        let mut g = gauss_point();
        g.add_vertex("island", PointType::Two, 0).unwrap();
        assert_eq!(g.total_genus(), Err(SkeletonError::InvalidGraph));
    }

    #[test]
    fn locate_normalizes_addresses() {
        let g = two_cycle();
        let v = SkeletonPoint::Vertex("a".into());
        assert_eq!(g.locate(&v).unwrap(), v);

        // (e, b, L - d) -> (e, a, d) since a < b in id order.
        let from_b = SkeletonPoint::Interior {
            edge: "e1".into(),
            from: "b".into(),
            depth: LogValue::of(3, 2),
        };
        assert_eq!(
            g.locate(&from_b).unwrap(),
            SkeletonPoint::Interior {
                edge: "e1".into(),
                from: "a".into(),
                depth: LogValue::of(1, 2),
            }
        );

        // Boundary depths collapse to vertex addresses.
        let boundary = SkeletonPoint::Interior {
            edge: "e0".into(),
            from: "a".into(),
            depth: LogValue::of(1, 1),
        };
        assert_eq!(g.locate(&boundary).unwrap(), SkeletonPoint::Vertex("b".into()));

        let too_deep = SkeletonPoint::Interior {
            edge: "e0".into(),
            from: "a".into(),
            depth: LogValue::of(3, 1),
        };
        assert!(matches!(g.locate(&too_deep), Err(SkeletonError::OutOfRange(_))));

        let unknown = SkeletonPoint::Vertex("nope".into());
        assert!(matches!(g.locate(&unknown), Err(SkeletonError::UnknownVertex(_))));
    }

    #[test]
    fn locate_is_idempotent() {
        let g = two_cycle();
        let p = SkeletonPoint::Interior {
            edge: "e1".into(),
            from: "b".into(),
            depth: LogValue::of(1, 3),
        };
        let once = g.locate(&p).unwrap();
        assert_eq!(g.locate(&once).unwrap(), once);
    }

    #[test]
    fn infinite_edges_are_parametrized_from_the_finite_end() {
        let g = projective_line();
        let from_gauss = SkeletonPoint::Interior {
            edge: "e0".into(),
            from: "gauss".into(),
            depth: LogValue::of(4, 1),
        };
        assert_eq!(g.locate(&from_gauss).unwrap(), from_gauss);

        let at_infinite_depth = SkeletonPoint::Interior {
            edge: "e0".into(),
            from: "gauss".into(),
            depth: LogValue::Infinite,
        };
        assert_eq!(
            g.locate(&at_infinite_depth).unwrap(),
            SkeletonPoint::Vertex("zero".into())
        );

        let from_type1 = SkeletonPoint::Interior {
            edge: "e0".into(),
            from: "zero".into(),
            depth: LogValue::of(1, 1),
        };
        assert!(g.locate(&from_type1).is_err());
    }

    fn random_graph(rng: &mut StdRng) -> SkeletonGraph {
        let mut g = SkeletonGraph::new();
        let n = rng.gen_range(1..7usize);
        for i in 0..n {
            g.add_vertex(format!("v{i}"), PointType::Two, rng.gen_range(0..3))
                .unwrap();
        }
        // Spanning tree first to keep it connected, then extra edges.
        let mut next_edge = 0usize;
        for i in 1..n {
            let parent = rng.gen_range(0..i);
            g.add_edge(
                format!("e{next_edge}"),
                format!("v{i}"),
                format!("v{parent}"),
                LogValue::of(rng.gen_range(1..9), rng.gen_range(1..4)),
            )
            .unwrap();
            next_edge += 1;
        }
        for _ in 0..rng.gen_range(0..4usize) {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            g.add_edge(
                format!("e{next_edge}"),
                format!("v{a}"),
                format!("v{b}"),
                LogValue::of(rng.gen_range(1..9), rng.gen_range(1..4)),
            )
            .unwrap();
            next_edge += 1;
        }
        for _ in 0..rng.gen_range(0..3usize) {
            let a = rng.gen_range(0..n);
            g.add_vertex(format!("t{next_edge}"), PointType::One, 0).unwrap();
            g.add_edge(
                format!("e{next_edge}"),
                format!("t{next_edge}"),
                format!("v{a}"),
                LogValue::Infinite,
            )
            .unwrap();
            next_edge += 1;
        }
        g
    }

    #[test]
    fn genus_is_invariant_under_subdivision() {
        let mut rng = StdRng::seed_from_u64(5);
        for round in 0..100 {
            let mut g = random_graph(&mut rng);
            assert!(g.validate().is_empty(), "round {round}");
            let genus = g.total_genus().unwrap();
            let finite_edges: Vec<EdgeId> = g
                .edges()
                .filter(|e| e.log_length.is_finite())
                .map(|e| e.id.clone())
                .collect();
            if finite_edges.is_empty() {
                continue;
            }
            let pick = finite_edges[rng.gen_range(0..finite_edges.len())].clone();
            let e = g.edge(&pick).unwrap().clone();
            let len = e.log_length.as_rational().unwrap().clone();
            let depth = LogValue::Finite(len / rat(2, 1));
            let from = e.endpoints.0.clone();
            g.subdivide(&pick, &from, depth, format!("m{round}"), format!("s{round}a"), format!("s{round}b"))
                .unwrap();
            assert!(g.validate().is_empty());
            assert_eq!(g.total_genus().unwrap(), genus);
        }
    }

    #[test]
    fn betti_matches_cotree_edge_count() {
        // Independent oracle: grow a spanning tree, count co-tree edges.
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..100 {
            let g = random_graph(&mut rng);
            let mut seen = BTreeSet::new();
            let mut tree_edges = 0usize;
            let start = g.vertices().next().unwrap().id.clone();
            let mut queue = VecDeque::from([start.clone()]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                for (e, slot) in g.germs_at(&v) {
                    let other = e.endpoint(slot.other()).clone();
                    if seen.insert(other.clone()) {
                        tree_edges += 1;
                        queue.push_back(other);
                    }
                }
            }
            let cotree = g.edge_count() - tree_edges;
            assert_eq!(g.first_betti().unwrap(), cotree as u64);
        }
    }

    #[test]
    fn subdividing_an_infinite_edge_keeps_the_type1_rule() {
        let mut g = projective_line();
        g.subdivide(
            &"e0".into(),
            &"gauss".into(),
            LogValue::of(1, 1),
            "m",
            "e0a",
            "e0b",
        )
        .unwrap();
        assert!(g.validate().is_empty());
        assert_eq!(g.edge(&"e0a".into()).unwrap().log_length, LogValue::of(1, 1));
        assert_eq!(g.edge(&"e0b".into()).unwrap().log_length, LogValue::Infinite);
        assert_eq!(g.total_genus().unwrap(), 0);
    }
}
