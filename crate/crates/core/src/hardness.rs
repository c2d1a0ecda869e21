//! Hardness instance generators: filled-triangle gadgets realizing
//! co-2-subdivisions.
//!
//! Layout: vertex `i` of the source graph becomes the triangle on the
//! vertical segment between `(i, a i^2)` and its mirror `(i, -a i^2)`,
//! apexed at `(n+1, 0)` — all of them share the apex, so vertex triangles
//! pairwise intersect. Edge `k = uv` becomes two long slivers: one rides the
//! chord line through the parabola points flanking `u` (shifted down a
//! touch, so it clears `u`'s triangle entirely yet pierces every other
//! vertex triangle), the other mirrors it below for `v`. Their second sides
//! are near-horizontal at per-edge slopes; the two sides of one edge are
//! parallel with a gap (keeping its pair disjoint) while sides of different
//! edges cross each other near the origin (keeping everything else
//! intersecting). The whole construction is exact rational and the
//! intersection graph is verified against the co-2-subdivision before the
//! gadget is returned.

use crate::geom::{orient, Orientation, Point};
use crate::graph::{co_two_subdivision, Graph};
use crate::rat::Rational;
use num_traits::Zero;
use thiserror::Error;

/// A non-degenerate filled triangle, stored counterclockwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triangle {
    points: [Point; 3],
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("degenerate triangle: {0}, {1}, {2} are collinear")]
pub struct DegenerateTriangle(pub Point, pub Point, pub Point);

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Triangle, DegenerateTriangle> {
        match orient(&a, &b, &c) {
            Orientation::Counterclockwise => Ok(Triangle { points: [a, b, c] }),
            Orientation::Clockwise => Ok(Triangle { points: [a, c, b] }),
            Orientation::Collinear => Err(DegenerateTriangle(a, b, c)),
        }
    }

    pub fn points(&self) -> &[Point; 3] {
        &self.points
    }
}

/// Closed filled triangles share a point iff no edge of either separates
/// them: an exact separating-axis test over the six edges.
pub fn triangles_intersect(s: &Triangle, t: &Triangle) -> bool {
    !has_separating_edge(s, t) && !has_separating_edge(t, s)
}

fn has_separating_edge(own: &Triangle, other: &Triangle) -> bool {
    let p = &own.points;
    (0..3).any(|i| {
        let a = &p[i];
        let b = &p[(i + 1) % 3];
        // own is counterclockwise: its interior lies left of (a, b); the
        // other triangle is separated iff entirely strictly right.
        other
            .points
            .iter()
            .all(|q| orient(a, b, q) == Orientation::Clockwise)
    })
}

/// A verified filled-triangle realization of a co-2-subdivision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangleGadget {
    vertex_triangles: Vec<Triangle>,
    edge_triangles: Vec<(Triangle, Triangle)>,
    target: Graph,
    pub parabola_coefficient: Rational,
    pub epsilon_angle: Rational,
}

impl TriangleGadget {
    pub fn vertex_triangles(&self) -> &[Triangle] {
        &self.vertex_triangles
    }

    pub fn edge_triangles(&self) -> &[(Triangle, Triangle)] {
        &self.edge_triangles
    }

    /// The co-2-subdivision this gadget realizes.
    pub fn target(&self) -> &Graph {
        &self.target
    }

    /// All triangles in the target graph's vertex order: the `n` vertex
    /// triangles, then plus/minus pairs per edge.
    pub fn all_triangles(&self) -> Vec<&Triangle> {
        let mut out: Vec<&Triangle> = self.vertex_triangles.iter().collect();
        for (p, m) in &self.edge_triangles {
            out.push(p);
            out.push(m);
        }
        out
    }

    pub fn intersection_graph(&self) -> Graph {
        let tris = self.all_triangles();
        let mut g = Graph::new(tris.len());
        for u in 0..tris.len() {
            for v in u + 1..tris.len() {
                if triangles_intersect(tris[u], tris[v]) {
                    g.add_edge(u as u32, v as u32);
                }
            }
        }
        g
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("gadget construction needs at least one edge")]
    NoEdges,
    #[error(
        "gadget verification failed after {attempts} attempts; \
         first wrong pair ({}, {})", pair.0, pair.1
    )]
    Unrealized { attempts: usize, pair: (u32, u32) },
}

/// Builds the filled-triangle gadget for `g`'s co-2-subdivision and verifies
/// the intersection graph exactly, retrying with a steeper parabola and
/// flatter edge slopes if needed.
pub fn build_triangle_gadget(g: &Graph) -> Result<TriangleGadget, GadgetError> {
    let m = g.edge_count();
    if m == 0 {
        return Err(GadgetError::NoEdges);
    }
    let mut first_bad: Option<(u32, u32)> = None;
    let mut attempts = 0;
    for attempt in 0..6 {
        attempts += 1;
        let coeff = Rational::from_integer((1i64 << attempt).into());
        let scale = Rational::from_integer((1i64 << (2 * attempt)).into());
        let gadget = construct(g, coeff, &scale);
        match first_wrong_pair(&gadget) {
            None => return Ok(gadget),
            Some(pair) => {
                if first_bad.is_none() {
                    first_bad = Some(pair);
                }
            }
        }
    }
    Err(GadgetError::Unrealized {
        attempts,
        pair: first_bad.unwrap(),
    })
}

fn first_wrong_pair(gadget: &TriangleGadget) -> Option<(u32, u32)> {
    let tris = gadget.all_triangles();
    let n = tris.len();
    for u in 0..n {
        for v in u + 1..n {
            let has = triangles_intersect(tris[u], tris[v]);
            if has != gadget.target.has_edge(u as u32, v as u32) {
                return Some((u as u32, v as u32));
            }
        }
    }
    None
}

fn construct(g: &Graph, coeff: Rational, tighten: &Rational) -> TriangleGadget {
    let n = g.vertex_count() as i64;
    let edges: Vec<(u32, u32)> = g.edges().collect();
    let m = edges.len() as i64;
    let a = &coeff;

    // Chain points on the parabola and their mirrors.
    let p = |i: i64| -> Point {
        Point::new(
            Rational::from_integer(i.into()),
            a * Rational::from_integer((i * i).into()),
        )
    };
    let q = |i: i64| -> Point {
        Point::new(
            Rational::from_integer(i.into()),
            -(a * Rational::from_integer((i * i).into())),
        )
    };
    let apex = Point::new(Rational::from_integer((n + 1).into()), Rational::zero());

    let vertex_triangles: Vec<Triangle> = (1..=n)
        .map(|i| Triangle::new(p(i), q(i), apex.clone()).expect("parabola points are not collinear"))
        .collect();

    // Per-edge slopes and strip gap; slopes stay below the first chord's
    // slope and the gap keeps all near-horizontal crossings left of every
    // support corner.
    let slope_unit = a / (Rational::from_integer((2 * (m + 1)).into()) * tighten);
    let gap = a / (Rational::from_integer((32 * (m + 1) * (m + 1)).into()) * tighten);

    let far_left = Rational::from_integer((-2).into());
    let far_right = Rational::from_integer((n + 2).into());

    let mut edge_triangles = Vec::with_capacity(edges.len());
    for (k_idx, &(u, v)) in edges.iter().enumerate() {
        let kk = k_idx as i64 + 1;
        let i = u as i64 + 1;
        let j = v as i64 + 1;
        let eta = a * Rational::from_integer(kk.into())
            / (Rational::from_integer((2 * (m + 1)).into()) * tighten);
        let slope_k = &slope_unit * Rational::from_integer(kk.into());

        // Upper sliver: support line through the chord flanking i, shifted
        // down by eta; near-horizontal line at slope k, shifted up by gap.
        let sup_slope = Rational::from_integer((2 * i).into()) * a;
        let sup_icept = a * Rational::from_integer((1 - i * i).into()) - &eta;
        let near_icept = gap.clone();
        let plus = sliver(&sup_slope, &sup_icept, &slope_k, &near_icept, &far_left, &far_right);

        // Lower sliver: mirror image for j.
        let sup_slope_m = -(Rational::from_integer((2 * j).into()) * a);
        let sup_icept_m = -(a * Rational::from_integer((1 - j * j).into())) + &eta;
        let near_icept_m = -gap.clone();
        let minus = sliver(
            &sup_slope_m,
            &sup_icept_m,
            &slope_k,
            &near_icept_m,
            &far_left,
            &far_right,
        );
        edge_triangles.push((plus, minus));
    }

    TriangleGadget {
        vertex_triangles,
        edge_triangles,
        target: co_two_subdivision(g),
        parabola_coefficient: coeff.clone(),
        epsilon_angle: slope_unit,
    }
}

/// Triangle spanned by the support line `y = s x + c` (from its crossing
/// with the near-horizontal line `y = t x + d` out to `x = right`) and the
/// near-horizontal line (back to `x = left`).
fn sliver(
    sup_slope: &Rational,
    sup_icept: &Rational,
    near_slope: &Rational,
    near_icept: &Rational,
    left: &Rational,
    right: &Rational,
) -> Triangle {
    let vx = (near_icept - sup_icept) / (sup_slope - near_slope);
    let vy = near_slope * &vx + near_icept;
    let corner = Point::new(vx, vy);
    let far_support = Point::new(right.clone(), sup_slope * right + sup_icept);
    let far_near = Point::new(left.clone(), near_slope * left + near_icept);
    Triangle::new(corner, far_support, far_near).expect("sliver corners are never collinear")
}
