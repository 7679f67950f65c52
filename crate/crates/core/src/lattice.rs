//! Integer-coordinate model of the square lattice and its dual.
//!
//! Vertices are integer points. An edge is stored by its lower/left endpoint
//! and an orientation, so every unoriented edge has exactly one
//! representation. Faces are named by their lower-left corner; a face is also
//! a vertex of the dual lattice, and a dual edge is identified with the
//! direct edge it crosses.
//!
//! Nothing here is bounded: patches and rectangles carry their own extent.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Vertex {
    pub x: i64,
    pub y: i64,
}

impl Vertex {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub const fn offset(self, dx: i64, dy: i64) -> Self {
        Self::new(self.x + dx, self.y + dy)
    }
}

impl From<[i64; 2]> for Vertex {
    fn from([x, y]: [i64; 2]) -> Self {
        Self::new(x, y)
    }
}

impl From<Vertex> for [i64; 2] {
    fn from(v: Vertex) -> Self {
        [v.x, v.y]
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "H")]
    Horizontal,
    #[serde(rename = "V")]
    Vertical,
}

/// An unoriented edge. `Horizontal` joins `base` to `base + (1,0)`,
/// `Vertical` joins `base` to `base + (0,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub base: Vertex,
    pub orientation: Orientation,
}

impl Edge {
    pub const fn horizontal(x: i64, y: i64) -> Self {
        Self { base: Vertex::new(x, y), orientation: Orientation::Horizontal }
    }

    pub const fn vertical(x: i64, y: i64) -> Self {
        Self { base: Vertex::new(x, y), orientation: Orientation::Vertical }
    }

    /// The edge joining two lattice-adjacent vertices.
    pub fn between(a: Vertex, b: Vertex) -> Option<Self> {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        match (hi.x - lo.x, hi.y - lo.y) {
            (1, 0) => Some(Self::horizontal(lo.x, lo.y)),
            (0, 1) => Some(Self::vertical(lo.x, lo.y)),
            _ => None,
        }
    }

    /// The edge crossed by the dual edge joining two adjacent faces.
    pub fn crossed_between(a: Face, b: Face) -> Option<Self> {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        match (hi.corner.x - lo.corner.x, hi.corner.y - lo.corner.y) {
            (1, 0) => Some(Self::vertical(hi.corner.x, hi.corner.y)),
            (0, 1) => Some(Self::horizontal(hi.corner.x, hi.corner.y)),
            _ => None,
        }
    }

    pub fn endpoints(&self) -> [Vertex; 2] {
        match self.orientation {
            Orientation::Horizontal => [self.base, self.base.offset(1, 0)],
            Orientation::Vertical => [self.base, self.base.offset(0, 1)],
        }
    }

    /// The two faces whose boundary contains this edge.
    pub fn faces(&self) -> [Face; 2] {
        let Vertex { x, y } = self.base;
        match self.orientation {
            Orientation::Horizontal => [Face::new(x, y - 1), Face::new(x, y)],
            Orientation::Vertical => [Face::new(x - 1, y), Face::new(x, y)],
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orientation {
            Orientation::Horizontal => 'H',
            Orientation::Vertical => 'V',
        };
        write!(f, "{o}@{}", self.base)
    }
}

/// A unit square of the lattice, i.e. a vertex of the dual lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Face {
    pub corner: Vertex,
}

impl Face {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { corner: Vertex::new(x, y) }
    }

    pub const fn offset(self, dx: i64, dy: i64) -> Self {
        Self { corner: self.corner.offset(dx, dy) }
    }
}

impl From<[i64; 2]> for Face {
    fn from(c: [i64; 2]) -> Self {
        Self { corner: c.into() }
    }
}

impl From<Face> for [i64; 2] {
    fn from(f: Face) -> Self {
        f.corner.into()
    }
}

/// A vertex of either the direct or the dual lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Site {
    Vertex(Vertex),
    Face(Face),
}

impl Site {
    pub fn is_vertex(&self) -> bool {
        matches!(self, Site::Vertex(_))
    }

    /// The four edges carrying the star or face operator of this site.
    pub fn edges(&self) -> [Edge; 4] {
        match self {
            Site::Vertex(v) => star_edges(*v),
            Site::Face(f) => face_edges(*f),
        }
    }

    /// Lower-left reference point, used for geometry (bounding boxes, routing).
    pub fn anchor(&self) -> Vertex {
        match self {
            Site::Vertex(v) => *v,
            Site::Face(f) => f.corner,
        }
    }
}

impl From<Vertex> for Site {
    fn from(v: Vertex) -> Self {
        Site::Vertex(v)
    }
}

impl From<Face> for Site {
    fn from(f: Face) -> Self {
        Site::Face(f)
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Vertex(v) => write!(f, "v{v}"),
            Site::Face(face) => write!(f, "f{}", face.corner),
        }
    }
}

/// The four edges incident to `v`.
pub fn star_edges(v: Vertex) -> [Edge; 4] {
    [
        Edge::horizontal(v.x - 1, v.y),
        Edge::horizontal(v.x, v.y),
        Edge::vertical(v.x, v.y - 1),
        Edge::vertical(v.x, v.y),
    ]
}

/// The four boundary edges of the unit square `f`.
pub fn face_edges(f: Face) -> [Edge; 4] {
    let Vertex { x, y } = f.corner;
    [Edge::horizontal(x, y), Edge::horizontal(x, y + 1), Edge::vertical(x, y), Edge::vertical(x + 1, y)]
}

/// Closed vertex rectangle `[x0, x1] × [y0, y1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub x0: i64,
    pub y0: i64,
    pub x1: i64,
    pub y1: i64,
}

impl Rect {
    pub fn new(x0: i64, y0: i64, x1: i64, y1: i64) -> Self {
        debug_assert!(x0 <= x1 && y0 <= y1);
        Self { x0, y0, x1, y1 }
    }

    pub fn point(v: Vertex) -> Self {
        Self::new(v.x, v.y, v.x, v.y)
    }

    pub fn square(center: Vertex, n: i64) -> Self {
        Self::new(center.x - n, center.y - n, center.x + n, center.y + n)
    }

    /// Smallest rectangle containing every given vertex.
    pub fn bounding<I: IntoIterator<Item = Vertex>>(vertices: I) -> Option<Self> {
        vertices.into_iter().fold(None, |acc, v| {
            Some(match acc {
                None => Rect::point(v),
                Some(r) => r.including(v),
            })
        })
    }

    /// Smallest rectangle containing every endpoint of the given edges.
    pub fn bounding_edges<'a, I: IntoIterator<Item = &'a Edge>>(edges: I) -> Option<Self> {
        Self::bounding(edges.into_iter().flat_map(|e| e.endpoints()))
    }

    pub fn including(self, v: Vertex) -> Self {
        Self::new(self.x0.min(v.x), self.y0.min(v.y), self.x1.max(v.x), self.y1.max(v.y))
    }

    pub fn union(self, other: Rect) -> Self {
        Self::new(self.x0.min(other.x0), self.y0.min(other.y0), self.x1.max(other.x1), self.y1.max(other.y1))
    }

    pub fn inflate(self, k: i64) -> Self {
        Self::new(self.x0 - k, self.y0 - k, self.x1 + k, self.y1 + k)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (self.x0..=self.x1).contains(&v.x) && (self.y0..=self.y1).contains(&v.y)
    }

    pub fn width(&self) -> i64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> i64 {
        self.y1 - self.y0
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (self.y0..=self.y1).flat_map(move |y| (self.x0..=self.x1).map(move |x| Vertex::new(x, y)))
    }

    /// Faces whose four corners lie in the rectangle.
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        (self.y0..self.y1).flat_map(move |y| (self.x0..self.x1).map(move |x| Face::new(x, y)))
    }

    /// Every edge with both endpoints in the rectangle.
    pub fn edges(&self) -> BTreeSet<Edge> {
        let mut out = BTreeSet::new();
        for v in self.vertices() {
            if v.x < self.x1 {
                out.insert(Edge::horizontal(v.x, v.y));
            }
            if v.y < self.y1 {
                out.insert(Edge::vertical(v.x, v.y));
            }
        }
        out
    }
}

/// A finite set of edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Patch {
    pub edges: BTreeSet<Edge>,
}

impl Patch {
    pub fn new<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        Self { edges: edges.into_iter().collect() }
    }

    pub fn from_rect(rect: Rect) -> Self {
        Self { edges: rect.edges() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn is_subset(&self, other: &Patch) -> bool {
        self.edges.is_subset(&other.edges)
    }

    pub fn bounding_rect(&self) -> Option<Rect> {
        Rect::bounding_edges(&self.edges)
    }

    /// Whether every edge of the site's operator lies in the patch.
    pub fn is_interior(&self, w: &Site) -> bool {
        w.edges().iter().all(|e| self.edges.contains(e))
    }

    pub fn interior_vertices(&self) -> Vec<Vertex> {
        let candidates: BTreeSet<Vertex> = self.edges.iter().flat_map(|e| e.endpoints()).collect();
        candidates.into_iter().filter(|v| self.is_interior(&Site::Vertex(*v))).collect()
    }

    pub fn interior_faces(&self) -> Vec<Face> {
        let candidates: BTreeSet<Face> = self.edges.iter().flat_map(|e| e.faces()).collect();
        candidates.into_iter().filter(|f| self.is_interior(&Site::Face(*f))).collect()
    }

    /// Interior sites, vertices first, each group in coordinate order.
    pub fn interior_sites(&self) -> Vec<Site> {
        self.interior_vertices()
            .into_iter()
            .map(Site::Vertex)
            .chain(self.interior_faces().into_iter().map(Site::Face))
            .collect()
    }

    /// Sites whose operator touches at least one edge of the patch.
    pub fn touching_sites(&self) -> Vec<Site> {
        let mut out: BTreeSet<Site> = BTreeSet::new();
        for e in &self.edges {
            out.extend(e.endpoints().map(Site::Vertex));
            out.extend(e.faces().map(Site::Face));
        }
        out.into_iter().collect()
    }

    /// If this patch is a box `{-n..n}² + center`, returns `(center, n)`.
    pub fn as_box(&self) -> Option<(Vertex, i64)> {
        let rect = self.bounding_rect()?;
        if rect.width() != rect.height() || rect.width() < 2 || rect.width() % 2 != 0 {
            return None;
        }
        if self.edges != rect.edges() {
            return None;
        }
        let n = rect.width() / 2;
        Some((Vertex::new(rect.x0 + n, rect.y0 + n), n))
    }
}

/// All edges with both endpoints in `{-n..n}² + center`.
pub fn box_patch(center: Vertex, n: i64) -> Result<Patch> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("box size must be positive, got {n}")));
    }
    Ok(Patch::from_rect(Rect::square(center, n)))
}

/// The box together with every edge leaving it, i.e. the edges crossed by
/// the dual path surrounding the box.
pub fn closure_patch(p: &Patch) -> Result<Patch> {
    let (center, n) = p.as_box().ok_or(Error::NotABox)?;
    let rect = Rect::square(center, n);
    let mut edges = p.edges.clone();
    edges.extend(rect.inflate(1).edges().into_iter().filter(|e| {
        let [a, b] = e.endpoints();
        rect.contains(a) != rect.contains(b)
    }));
    Ok(Patch { edges })
}

/// The closed dual path through the ring of faces around a box,
/// counterclockwise from the lower-left face.
pub fn boundary_dual_path(p: &Patch) -> Result<LatticePath> {
    let (center, n) = p.as_box().ok_or(Error::NotABox)?;
    let r = Rect::square(center, n);
    let (lo_x, lo_y, hi_x, hi_y) = (r.x0 - 1, r.y0 - 1, r.x1, r.y1);
    let mut faces = Vec::new();
    for x in lo_x..=hi_x {
        faces.push(Face::new(x, lo_y));
    }
    for y in lo_y + 1..=hi_y {
        faces.push(Face::new(hi_x, y));
    }
    for x in (lo_x..hi_x).rev() {
        faces.push(Face::new(x, hi_y));
    }
    for y in (lo_y..hi_y).rev() {
        faces.push(Face::new(lo_x, y));
    }
    LatticePath::dual(faces)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    Direct,
    Dual,
}

/// A non self-intersecting path on the direct lattice (through vertices) or
/// on the dual lattice (through faces).
///
/// Nodes are stored as lattice points; for a dual path each node is a face
/// corner. A path is closed when its first and last nodes coincide; no other
/// node repeats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PathRepr", into = "PathRepr")]
pub struct LatticePath {
    kind: PathKind,
    nodes: Vec<Vertex>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct PathRepr {
    kind: PathKind,
    edges: Vec<Edge>,
}

impl TryFrom<PathRepr> for LatticePath {
    type Error = Error;

    fn try_from(r: PathRepr) -> Result<Self> {
        LatticePath::from_edges(r.kind, &r.edges)
    }
}

impl From<LatticePath> for PathRepr {
    fn from(p: LatticePath) -> Self {
        PathRepr { kind: p.kind, edges: p.edges }
    }
}

impl LatticePath {
    pub fn direct(vertices: Vec<Vertex>) -> Result<Self> {
        Self::from_nodes(PathKind::Direct, vertices)
    }

    pub fn dual(faces: Vec<Face>) -> Result<Self> {
        Self::from_nodes(PathKind::Dual, faces.into_iter().map(|f| f.corner).collect())
    }

    fn from_nodes(kind: PathKind, nodes: Vec<Vertex>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::InvalidPath("a path needs at least one edge".into()));
        }
        let closed = nodes.first() == nodes.last();
        let distinct = if closed { &nodes[..nodes.len() - 1] } else { &nodes[..] };
        let unique: BTreeSet<&Vertex> = distinct.iter().collect();
        if unique.len() != distinct.len() {
            return Err(Error::InvalidPath("path revisits a node".into()));
        }
        if closed && nodes.len() < 5 {
            return Err(Error::InvalidPath("closed path shorter than a plaquette".into()));
        }
        let edges = nodes
            .windows(2)
            .map(|w| {
                let step = match kind {
                    PathKind::Direct => Edge::between(w[0], w[1]),
                    PathKind::Dual => Edge::crossed_between(Face { corner: w[0] }, Face { corner: w[1] }),
                };
                step.ok_or_else(|| Error::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { kind, nodes, edges })
    }

    /// Rebuilds a path from its ordered edge list (edges crossed, for a dual path).
    pub fn from_edges(kind: PathKind, edges: &[Edge]) -> Result<Self> {
        let ends = |e: &Edge| -> [Vertex; 2] {
            match kind {
                PathKind::Direct => e.endpoints(),
                PathKind::Dual => e.faces().map(|f| f.corner),
            }
        };
        let first = edges.first().ok_or_else(|| Error::InvalidPath("empty edge list".into()))?;
        let [a, b] = ends(first);
        let start = match edges.get(1) {
            None => a,
            Some(next) => {
                let nb = ends(next);
                match (nb.contains(&a), nb.contains(&b)) {
                    (false, true) => a,
                    (true, false) => b,
                    _ => return Err(Error::InvalidPath("first two edges do not share exactly one node".into())),
                }
            }
        };
        let mut nodes = vec![start];
        for e in edges {
            let cur = *nodes.last().unwrap();
            let [p, q] = ends(e);
            let next = if p == cur {
                q
            } else if q == cur {
                p
            } else {
                return Err(Error::InvalidPath(format!("edge {e} does not continue the path")));
            };
            nodes.push(next);
        }
        Self::from_nodes(kind, nodes)
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    /// Edges traversed (direct) or crossed (dual), in path order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn nodes(&self) -> Vec<Site> {
        self.nodes.iter().map(|&v| self.site_at(v)).collect()
    }

    fn site_at(&self, v: Vertex) -> Site {
        match self.kind {
            PathKind::Direct => Site::Vertex(v),
            PathKind::Dual => Site::Face(Face { corner: v }),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.nodes.first() == self.nodes.last()
    }

    /// End sites of the path; empty when closed.
    pub fn endpoints(&self) -> Vec<Site> {
        if self.is_closed() {
            Vec::new()
        } else {
            vec![self.site_at(self.nodes[0]), self.site_at(*self.nodes.last().unwrap())]
        }
    }
}

/// The first `n` steps of the horizontal path starting at `w` and moving right.
/// Direct for a vertex, dual for a face.
pub fn straight_path(w: Site, n: usize) -> Result<LatticePath> {
    if n == 0 {
        return Err(Error::InvalidArgument("straight path length must be positive".into()));
    }
    let start = w.anchor();
    let nodes: Vec<Vertex> = (0..=n as i64).map(|i| start.offset(i, 0)).collect();
    match w {
        Site::Vertex(_) => LatticePath::direct(nodes),
        Site::Face(_) => LatticePath::dual(nodes.into_iter().map(|corner| Face { corner }).collect()),
    }
}

/// Order of the two legs of an L-shaped route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Routing {
    #[default]
    HorizontalFirst,
    VerticalFirst,
}

fn l_nodes(a: Vertex, b: Vertex, routing: Routing) -> Vec<Vertex> {
    let mut nodes = vec![a];
    let mut cur = a;
    let step_x = |cur: &mut Vertex, nodes: &mut Vec<Vertex>| {
        while cur.x != b.x {
            cur.x += (b.x - cur.x).signum();
            nodes.push(*cur);
        }
    };
    let step_y = |cur: &mut Vertex, nodes: &mut Vec<Vertex>| {
        while cur.y != b.y {
            cur.y += (b.y - cur.y).signum();
            nodes.push(*cur);
        }
    };
    match routing {
        Routing::HorizontalFirst => {
            step_x(&mut cur, &mut nodes);
            step_y(&mut cur, &mut nodes);
        }
        Routing::VerticalFirst => {
            step_y(&mut cur, &mut nodes);
            step_x(&mut cur, &mut nodes);
        }
    }
    nodes
}

/// L-shaped direct path between two distinct vertices, routed from the
/// lexicographically smaller endpoint.
pub fn l_path(a: Vertex, b: Vertex, routing: Routing) -> Result<LatticePath> {
    let (from, to) = if a <= b { (a, b) } else { (b, a) };
    LatticePath::direct(l_nodes(from, to, routing))
}

/// L-shaped dual path between two distinct faces.
pub fn l_dual_path(a: Face, b: Face, routing: Routing) -> Result<LatticePath> {
    let (from, to) = if a <= b { (a, b) } else { (b, a) };
    LatticePath::dual(l_nodes(from.corner, to.corner, routing).into_iter().map(|corner| Face { corner }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(edges: [Edge; 4]) -> BTreeSet<Edge> {
        edges.into_iter().collect()
    }

    #[test]
    fn star_of_origin() {
        let expected: BTreeSet<Edge> = [
            Edge::horizontal(-1, 0),
            Edge::horizontal(0, 0),
            Edge::vertical(0, -1),
            Edge::vertical(0, 0),
        ]
        .into_iter()
        .collect();
        assert_eq!(set(star_edges(Vertex::new(0, 0))), expected);
    }

    #[test]
    fn face_of_origin() {
        let expected: BTreeSet<Edge> =
            [Edge::horizontal(0, 0), Edge::horizontal(0, 1), Edge::vertical(0, 0), Edge::vertical(1, 0)]
                .into_iter()
                .collect();
        assert_eq!(set(face_edges(Face::new(0, 0))), expected);
    }

    #[test]
    fn adjacent_stars_share_one_edge() {
        let v = Vertex::new(3, -2);
        for w in [v.offset(1, 0), v.offset(-1, 0), v.offset(0, 1), v.offset(0, -1)] {
            assert_eq!(set(star_edges(v)).intersection(&set(star_edges(w))).count(), 1);
        }
    }

    #[test]
    fn faces_sharing_an_edge_meet_once() {
        let f = Face::new(0, 0);
        for g in [f.offset(1, 0), f.offset(0, 1)] {
            assert_eq!(set(face_edges(f)).intersection(&set(face_edges(g))).count(), 1);
        }
    }

    #[test]
    fn star_face_overlap_is_zero_or_two() {
        for fx in -3..3 {
            for fy in -3..3 {
                let f = Face::new(fx, fy);
                let overlap = set(star_edges(Vertex::new(0, 0))).intersection(&set(face_edges(f))).count();
                let is_corner = (fx == 0 || fx == -1) && (fy == 0 || fy == -1);
                assert_eq!(overlap, if is_corner { 2 } else { 0 }, "face {f:?}");
            }
        }
    }

    #[test]
    fn box_sizes() {
        assert_eq!(box_patch(Vertex::new(0, 0), 1).unwrap().len(), 12);
        assert_eq!(box_patch(Vertex::new(5, 5), 2).unwrap().len(), 40);
        assert!(box_patch(Vertex::new(0, 0), 0).is_err());
    }

    #[test]
    fn box_interior() {
        let c = Vertex::new(2, -1);
        let p = box_patch(c, 1).unwrap();
        assert_eq!(p.interior_vertices(), vec![c]);
        assert_eq!(p.interior_faces().len(), 4);
        assert_eq!(p.as_box(), Some((c, 1)));
    }

    #[test]
    fn boundary_path_of_unit_box() {
        let p = box_patch(Vertex::new(0, 0), 1).unwrap();
        let ring = boundary_dual_path(&p).unwrap();
        assert!(ring.is_closed());
        assert!(ring.endpoints().is_empty());
        assert_eq!(ring.len(), 12);
        let closure = closure_patch(&p).unwrap();
        let crossed: BTreeSet<Edge> = ring.edges().iter().copied().collect();
        assert_eq!(crossed.len(), ring.len());
        assert!(crossed.is_disjoint(&p.edges));
        let added: BTreeSet<Edge> = closure.edges.difference(&p.edges).copied().collect();
        assert_eq!(crossed, added);
    }

    #[test]
    fn closure_rejects_non_box() {
        let p = Patch::new([Edge::horizontal(0, 0)]);
        assert!(matches!(closure_patch(&p), Err(Error::NotABox)));
        let rect = Patch::from_rect(Rect::new(0, 0, 3, 2));
        assert!(boundary_dual_path(&rect).is_err());
    }

    #[test]
    fn path_validation() {
        let v = Vertex::new;
        assert!(LatticePath::direct(vec![v(0, 0), v(1, 0), v(1, 1)]).is_ok());
        assert!(LatticePath::direct(vec![v(0, 0), v(2, 0)]).is_err());
        assert!(LatticePath::direct(vec![v(0, 0), v(1, 0), v(0, 0)]).is_err());
        assert!(LatticePath::direct(vec![v(0, 0), v(1, 0), v(1, 1), v(0, 1), v(1, 1)]).is_err());
        let square = LatticePath::direct(vec![v(0, 0), v(1, 0), v(1, 1), v(0, 1), v(0, 0)]).unwrap();
        assert!(square.is_closed());
        assert!(square.endpoints().is_empty());
    }

    #[test]
    fn path_from_edges_round_trip() {
        let p = l_path(Vertex::new(0, 0), Vertex::new(3, -2), Routing::HorizontalFirst).unwrap();
        let q = LatticePath::from_edges(PathKind::Direct, p.edges()).unwrap();
        assert_eq!(p, q);
        let d = l_dual_path(Face::new(-1, 2), Face::new(2, 0), Routing::VerticalFirst).unwrap();
        assert_eq!(LatticePath::from_edges(PathKind::Dual, d.edges()).unwrap(), d);
        let json = serde_json::to_string(&d).unwrap();
        let back: LatticePath = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn straight_paths() {
        let p = straight_path(Site::Vertex(Vertex::new(1, 1)), 3).unwrap();
        assert_eq!(p.edges(), &[Edge::horizontal(1, 1), Edge::horizontal(2, 1), Edge::horizontal(3, 1)]);
        let d = straight_path(Site::Face(Face::new(0, 0)), 2).unwrap();
        assert_eq!(d.edges(), &[Edge::vertical(1, 0), Edge::vertical(2, 0)]);
        assert_eq!(d.endpoints(), vec![Site::Face(Face::new(0, 0)), Site::Face(Face::new(2, 0))]);
    }

    #[test]
    fn serde_shapes() {
        let e = Edge::vertical(2, -3);
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"base":[2,-3],"orientation":"V"}"#);
        let s = Site::Face(Face::new(1, 4));
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"face":[1,4]}"#);
    }
}
