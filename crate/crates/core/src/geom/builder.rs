//! Verified construction of disk representations for complements of
//! disjoint cycle unions (any number of even cycles, at most one odd).
//!
//! The layout per cycle: two anchor disks sit almost on top of each other
//! with a center gap of a thousandth of their radius, a third anchor hovers
//! just above them, and the remaining even-indexed disks hang from a shallow
//! convex chain of points squeezed into the contact window; odd-indexed
//! disks ride above co-tangents of consecutive even disks, with radii grown
//! by doubling until every required overlap holds. Stacked cycles are copies
//! rotated about the shared contact window; a single odd cycle, scaled down
//! and rotated by 60 degrees, can join the stack, and a second odd cycle is
//! rejected outright since two disjoint odd cycles are never co-disk.
//!
//! Candidate coordinates are searched in floating point, frozen into exact
//! rationals, and the intersection graph is then re-verified exactly against
//! the requested complement; failed attempts retry with shrunken gap, dip,
//! and rotation parameters. Nothing is trusted that is not re-checked.

use super::{verify_representation, Disk, Mismatch, Point, Representation};
use crate::graph::Graph;
use crate::rat::{rational_from_f64, rational_to_f64, Rational};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("even cycle length {0} must be an even number, at least 4")]
    BadEvenLength(usize),
    #[error("odd cycle length {0} must be an odd number, at least 3")]
    BadOddLength(usize),
    #[error(
        "requested odd cycle lengths {0:?}: a disjoint union with two odd cycles \
         is never the complement of a disk graph"
    )]
    TwoOddCycles(Vec<usize>),
    #[error("a build plan needs at least one cycle")]
    EmptyPlan,
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("construction produced a non-finite coordinate")]
    NonFinite,
    #[error("verification failed after {attempts} attempts; first wrong adjacency: {mismatch}")]
    Unrealized { attempts: usize, mismatch: Mismatch },
}

/// What to build and with which knobs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BuildPlan {
    even_lengths: Vec<usize>,
    odd_length: Option<usize>,
    epsilon_ratio: Rational,
    rotation_step: Rational,
    retry_budget: usize,
}

impl BuildPlan {
    /// Validates lengths and rejects more than one odd cycle.
    pub fn new(even_lengths: Vec<usize>, odd_lengths: Vec<usize>) -> Result<Self, BuildError> {
        for &l in &even_lengths {
            if l < 4 || l % 2 != 0 {
                return Err(BuildError::BadEvenLength(l));
            }
        }
        for &l in &odd_lengths {
            if l < 3 || l % 2 != 1 {
                return Err(BuildError::BadOddLength(l));
            }
        }
        if odd_lengths.len() > 1 {
            return Err(BuildError::TwoOddCycles(odd_lengths));
        }
        if even_lengths.is_empty() && odd_lengths.is_empty() {
            return Err(BuildError::EmptyPlan);
        }
        let stacked = even_lengths.len().max(1);
        let default_step = std::f64::consts::FRAC_PI_6 / stacked as f64;
        Ok(BuildPlan {
            even_lengths,
            odd_length: odd_lengths.first().copied(),
            epsilon_ratio: Rational::new(1.into(), 1000.into()),
            rotation_step: rational_from_f64(default_step).unwrap(),
            retry_budget: 8,
        })
    }

    pub fn with_epsilon_ratio(mut self, ratio: Rational) -> Result<Self, BuildError> {
        if ratio <= Rational::zero() || ratio >= Rational::new(1.into(), 10.into()) {
            return Err(BuildError::BadParameter(
                "epsilon ratio must lie in (0, 1/10)".into(),
            ));
        }
        self.epsilon_ratio = ratio;
        Ok(self)
    }

    pub fn with_rotation_step(mut self, step: Rational) -> Result<Self, BuildError> {
        if step <= Rational::zero() || step >= Rational::new(1.into(), 1.into()) {
            return Err(BuildError::BadParameter(
                "rotation step must lie in (0, 1) radians".into(),
            ));
        }
        self.rotation_step = step;
        Ok(self)
    }

    pub fn with_retry_budget(mut self, budget: usize) -> Self {
        self.retry_budget = budget;
        self
    }

    pub fn even_lengths(&self) -> &[usize] {
        &self.even_lengths
    }

    pub fn odd_length(&self) -> Option<usize> {
        self.odd_length
    }

    pub fn total_vertices(&self) -> usize {
        self.even_lengths.iter().sum::<usize>() + self.odd_length.unwrap_or(0)
    }
}

/// The graph the builder promises: complement of the disjoint cycle union,
/// blocks laid out in plan order (even cycles first, then the odd one).
pub fn plan_target_graph(plan: &BuildPlan) -> Graph {
    let mut parts: Vec<Graph> = plan
        .even_lengths
        .iter()
        .map(|&l| Graph::cycle(l))
        .collect();
    if let Some(l) = plan.odd_length {
        parts.push(Graph::cycle(l));
    }
    Graph::disjoint_union(&parts).complement()
}

/// Builds and exactly verifies a representation of the plan's target graph.
pub fn build_co_cycles_representation(plan: &BuildPlan) -> Result<Representation, BuildError> {
    let target = plan_target_graph(plan);
    let mut first_failure: Option<Mismatch> = None;
    for attempt in 0..=plan.retry_budget {
        let disks = construct(plan, attempt);
        let rep = freeze(&disks)?;
        match verify_representation(&rep, &target).expect("builder emits one disk per vertex") {
            Ok(()) => return Ok(rep),
            Err(m) => {
                if first_failure.is_none() {
                    first_failure = Some(m);
                }
            }
        }
    }
    Err(BuildError::Unrealized {
        attempts: plan.retry_budget + 1,
        mismatch: first_failure.expect("at least one attempt ran"),
    })
}

// ---------------------------------------------------------------------------
// floating-point candidate search
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
struct V {
    x: f64,
    y: f64,
}

impl V {
    fn add(self, o: V) -> V {
        V {
            x: self.x + o.x,
            y: self.y + o.y,
        }
    }
    fn sub(self, o: V) -> V {
        V {
            x: self.x - o.x,
            y: self.y - o.y,
        }
    }
    fn scale(self, s: f64) -> V {
        V {
            x: self.x * s,
            y: self.y * s,
        }
    }
    fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }
    fn unit(self) -> V {
        self.scale(1.0 / self.norm())
    }
    /// Counterclockwise perpendicular.
    fn perp(self) -> V {
        V {
            x: -self.y,
            y: self.x,
        }
    }
    fn dist(self, o: V) -> f64 {
        self.sub(o).norm()
    }
    fn rotate_about(self, w: V, angle: f64) -> V {
        let (s, c) = angle.sin_cos();
        let d = self.sub(w);
        V {
            x: w.x + c * d.x - s * d.y,
            y: w.y + s * d.x + c * d.y,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct DiskF {
    c: V,
    r: f64,
}

struct Params {
    eps: f64,
    /// Separation shift for the hovering anchor disk.
    delta: f64,
    /// Maximum sag of the convex chain below its chord.
    dip: f64,
    rot_step: f64,
    odd_scale: f64,
    odd_angle: f64,
    /// Radius of the odd cycle's closing disk. Large on purpose: after the
    /// odd representation is scaled down onto the stack, this disk has to
    /// act like a half-plane and still cut every disk of every even cycle.
    rho_left: f64,
}

impl Params {
    fn for_attempt(plan: &BuildPlan, attempt: usize) -> Params {
        let shrink = 0.25f64.powi(attempt as i32);
        let eps = rational_to_f64(&plan.epsilon_ratio);
        let odd_scale = 0.01;
        Params {
            eps,
            delta: eps * eps / 1024.0 * shrink,
            dip: eps * eps / 512.0 * shrink,
            rot_step: rational_to_f64(&plan.rotation_step) * 0.5f64.powi(attempt as i32),
            odd_scale,
            odd_angle: std::f64::consts::FRAC_PI_3, // 60 degrees
            rho_left: 4.0 / odd_scale * 2f64.powi(attempt as i32),
        }
    }

    fn chord_height(&self) -> f64 {
        (4.0 - self.eps * self.eps / 4.0).sqrt()
    }

    /// The contact window every stacked cycle shares.
    fn window(&self) -> V {
        V {
            x: self.eps / 2.0,
            y: self.chord_height() / 2.0,
        }
    }
}

fn construct(plan: &BuildPlan, attempt: usize) -> Vec<DiskF> {
    let par = Params::for_attempt(plan, attempt);
    let w = par.window();
    let k = plan.even_lengths.len();
    let mut disks = Vec::with_capacity(plan.total_vertices());
    for (idx, &len) in plan.even_lengths.iter().enumerate() {
        let angle = par.rot_step * (idx as f64 - (k as f64 - 1.0) / 2.0);
        for d in build_cycle_local(len, false, &par) {
            disks.push(DiskF {
                c: d.c.rotate_about(w, angle),
                r: d.r,
            });
        }
    }
    if let Some(len) = plan.odd_length {
        let local = build_cycle_local(len, true, &par);
        let w_odd = if len == 3 {
            V { x: 0.0, y: 1.0 }
        } else {
            par.window()
        };
        for d in local {
            // Scale about the odd cycle's own window, then plant it on the
            // shared window at a sizable angle.
            let scaled = V {
                x: w.x + par.odd_scale * (d.c.x - w_odd.x),
                y: w.y + par.odd_scale * (d.c.y - w_odd.y),
            };
            disks.push(DiskF {
                c: scaled.rotate_about(w, par.odd_angle),
                r: d.r * par.odd_scale,
            });
        }
    }
    disks
}

/// One cycle's representation in local coordinates, disk `i` (0-based)
/// encoding cycle vertex `i + 1` in the construction's 1-based numbering.
fn build_cycle_local(len: usize, odd: bool, par: &Params) -> Vec<DiskF> {
    if odd && len == 3 {
        return build_triangle_complement(par);
    }
    let s = len / 2; // for odd lengths this is (len - 1) / 2, at least 2
    let h = par.chord_height();
    let c2 = V { x: 0.0, y: 0.0 };
    let c2s = V { x: par.eps, y: 0.0 };

    // The hovering anchor: lifted clear of both base disks for an even
    // cycle; for an odd cycle, swung away from the first base disk only,
    // staying properly inside the second.
    let c1 = if odd {
        let unit = V {
            x: -par.eps / 4.0,
            y: h / 2.0,
        };
        let theta = 4.0 * par.delta / par.eps;
        let (sn, cs) = theta.sin_cos();
        let swung = V {
            x: unit.x * cs + unit.y * sn,
            y: -unit.x * sn + unit.y * cs,
        };
        c2s.add(swung.scale(2.0 - par.delta))
    } else {
        V {
            x: par.eps / 2.0,
            y: h + par.delta,
        }
    };

    let chain = chain_points(s, par, h);
    let count = if odd { 2 * s + 1 } else { 2 * s };
    let mut disks = vec![DiskF { c: c2, r: 1.0 }; count];
    disks[0] = DiskF { c: c1, r: 1.0 };
    disks[1] = DiskF { c: c2, r: 1.0 };
    disks[2 * s - 1] = DiskF { c: c2s, r: 1.0 };

    // Even-indexed disks hang from their chain points, below the tangent
    // directed along the neighboring chain chord.
    let even_center = |i: usize| -> V {
        // chain index i in 1..=s
        if i == 1 {
            c2
        } else if i == s {
            c2s
        } else {
            let t = chain[i].sub(chain[i - 2]).unit();
            let mut nrm = t.perp();
            if nrm.y < 0.0 {
                nrm = nrm.scale(-1.0);
            }
            chain[i - 1].sub(nrm)
        }
    };
    for i in 2..s {
        disks[2 * i - 1] = DiskF {
            c: even_center(i),
            r: 1.0,
        };
    }

    // Odd-indexed disks sit above co-tangents of consecutive even disks,
    // radii doubled until they overlap the hovering anchor and every even
    // disk other than their two cycle neighbors; in the odd variant they
    // also stretch far enough left to meet the closing disk near its upper
    // tangency.
    let probes: Vec<V> = if odd {
        vec![V { x: -1.05, y: 2.0 }]
    } else {
        Vec::new()
    };
    for o in (3..=2 * s - 1).step_by(2) {
        let j = (o - 1) / 2; // between chain points j and j+1
        let a = even_center(j);
        let b = even_center(j + 1);
        let mut u = b.sub(a).unit();
        if u.x < 0.0 {
            u = u.scale(-1.0);
        }
        let mut m = u.perp();
        if m.y < 0.0 {
            m = m.scale(-1.0);
        }
        let base = a.add(m); // on the upper co-tangent (equal radii 1)
        let xt = (chain[j - 1].x + chain[j].x) / 2.0;
        let q = base.add(u.scale((xt - base.x) / u.x));
        let disk_targets: Vec<DiskF> = std::iter::once(disks[0])
            .chain(
                (1..=s)
                    .filter(|&kk| kk != j && kk != j + 1)
                    .map(|kk| DiskF {
                        c: even_center(kk),
                        r: 1.0,
                    }),
            )
            .collect();
        let rho = grow_radius(q, m, &disk_targets, &probes);
        disks[o - 1] = DiskF {
            c: q.add(m.scale(rho)),
            r: rho,
        };
    }

    if odd {
        // Closing disk: cotangent to the hovering anchor and the rightmost
        // base disk, parked on their left, then nudged further left so both
        // tangencies open into gaps.
        disks[2 * s] = closing_disk(c1, c2s, par);
    }
    disks
}

fn grow_radius(q: V, m: V, disk_targets: &[DiskF], probes: &[V]) -> f64 {
    let mut rho = 1.0f64;
    for _ in 0..40 {
        let center = q.add(m.scale(rho));
        let ok = disk_targets.iter().all(|d| center.dist(d.c) <= rho + d.r)
            && probes.iter().all(|&p| center.dist(p) <= rho);
        if ok {
            return rho;
        }
        rho *= 2.0;
    }
    rho
}

fn closing_disk(near: V, far: V, par: &Params) -> DiskF {
    let center = cotangent_left(near, far, 1.0 + par.rho_left);
    DiskF {
        c: V {
            x: center.x - par.delta,
            y: center.y,
        },
        r: par.rho_left,
    }
}

/// Complement of a triangle: three pairwise disjoint disks crowding one
/// point, so each still cuts every disk of the stacked even cycles.
fn build_triangle_complement(par: &Params) -> Vec<DiskF> {
    let d2 = DiskF {
        c: V { x: 0.0, y: 0.0 },
        r: 1.0,
    };
    let d1 = DiskF {
        c: V {
            x: 0.0,
            y: 2.0 + par.delta,
        },
        r: 1.0,
    };
    let d3 = closing_disk(d1.c, d2.c, par);
    vec![d1, d2, d3]
}

/// The point at distance `rr` from both `a` and `b`, on their left.
fn cotangent_left(a: V, b: V, rr: f64) -> V {
    let d = b.sub(a).norm();
    let l = d / 2.0; // equal distances
    let h = (rr * rr - l * l).max(0.0).sqrt();
    let mid = a.add(b.sub(a).scale(0.5));
    let n = b.sub(a).unit().perp();
    let p1 = mid.add(n.scale(h));
    let p2 = mid.sub(n.scale(h));
    if p1.x < p2.x {
        p1
    } else {
        p2
    }
}

/// Chain anchors: endpoints on the chord between the two tangency points,
/// interior points sagging below it on a strictly convex parabola, squeezed
/// well inside the hovering disk.
fn chain_points(s: usize, par: &Params, h: f64) -> Vec<V> {
    let p1 = V {
        x: par.eps / 4.0,
        y: h / 2.0,
    };
    let ps = V {
        x: 3.0 * par.eps / 4.0,
        y: h / 2.0,
    };
    let mut pts = Vec::with_capacity(s);
    pts.push(p1);
    if s >= 3 {
        let gamma = par.dip / (par.eps * par.eps / 16.0);
        let inner = s - 2;
        for t in 1..=inner {
            let x = par.eps / 2.0 + 0.3 * par.eps * (t as f64 / (inner as f64 + 1.0) - 0.5);
            let y = h / 2.0 - gamma * (x - p1.x) * (ps.x - x);
            pts.push(V { x, y });
        }
    }
    pts.push(ps);
    pts
}

fn freeze(disks: &[DiskF]) -> Result<Representation, BuildError> {
    let mut exact = Vec::with_capacity(disks.len());
    for d in disks {
        if !d.c.x.is_finite() || !d.c.y.is_finite() || !d.r.is_finite() || d.r <= 0.0 {
            return Err(BuildError::NonFinite);
        }
        let disk = Disk::new(
            Point::new(
                rational_from_f64(d.c.x).ok_or(BuildError::NonFinite)?,
                rational_from_f64(d.c.y).ok_or(BuildError::NonFinite)?,
            ),
            rational_from_f64(d.r).ok_or(BuildError::NonFinite)?,
        )
        .map_err(|_| BuildError::NonFinite)?;
        exact.push(disk);
    }
    Representation::new(exact).map_err(|_| BuildError::EmptyPlan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::intersection_graph;
    use crate::graph::{brute_force_max_clique, DEFAULT_ORACLE_LIMIT};
    use crate::rat::rat;

    fn built(evens: Vec<usize>, odds: Vec<usize>) -> Representation {
        let plan = BuildPlan::new(evens, odds).unwrap();
        build_co_cycles_representation(&plan).unwrap()
    }

    #[test]
    fn complement_of_c4_is_two_crossing_pairs() {
        let rep = built(vec![4], vec![]);
        let g = intersection_graph(&rep);
        let mut want = Graph::new(4);
        want.add_edge(0, 2);
        want.add_edge(1, 3);
        assert_eq!(g, want);
    }

    #[test]
    fn complement_of_c5_alone() {
        let rep = built(vec![], vec![5]);
        assert_eq!(intersection_graph(&rep), Graph::cycle(5).complement());
    }

    #[test]
    fn complement_of_c3_alone_is_edgeless() {
        let rep = built(vec![], vec![3]);
        assert_eq!(intersection_graph(&rep), Graph::new(3));
    }

    #[test]
    fn mixed_stack_matches_target_and_oracle() {
        let plan = BuildPlan::new(vec![4, 6], vec![5]).unwrap();
        let rep = build_co_cycles_representation(&plan).unwrap();
        assert_eq!(rep.len(), 15);
        let g = intersection_graph(&rep);
        assert_eq!(g, plan_target_graph(&plan));
        let best = brute_force_max_clique(&g, DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(best.weight, rat(7));
    }

    #[test]
    fn rejects_two_odd_cycles() {
        assert_eq!(
            BuildPlan::new(vec![4], vec![3, 5]).unwrap_err(),
            BuildError::TwoOddCycles(vec![3, 5])
        );
    }

    #[test]
    fn rejects_bad_lengths_and_empty_plans() {
        assert_eq!(
            BuildPlan::new(vec![5], vec![]).unwrap_err(),
            BuildError::BadEvenLength(5)
        );
        assert_eq!(
            BuildPlan::new(vec![2], vec![]).unwrap_err(),
            BuildError::BadEvenLength(2)
        );
        assert_eq!(
            BuildPlan::new(vec![], vec![4]).unwrap_err(),
            BuildError::BadOddLength(4)
        );
        assert_eq!(
            BuildPlan::new(vec![], vec![1]).unwrap_err(),
            BuildError::BadOddLength(1)
        );
        assert_eq!(
            BuildPlan::new(vec![], vec![]).unwrap_err(),
            BuildError::EmptyPlan
        );
    }

    #[test]
    fn small_sweep_verifies() {
        let cases: Vec<(Vec<usize>, Vec<usize>)> = vec![
            (vec![4], vec![]),
            (vec![6], vec![]),
            (vec![8], vec![]),
            (vec![4, 4], vec![]),
            (vec![4, 6], vec![]),
            (vec![], vec![3]),
            (vec![], vec![5]),
            (vec![], vec![7]),
            (vec![], vec![9]),
            (vec![4], vec![3]),
            (vec![4], vec![5]),
            (vec![6], vec![7]),
            (vec![4, 4], vec![3]),
            (vec![4, 4, 4], vec![5]),
        ];
        for (evens, odds) in cases {
            let plan = BuildPlan::new(evens.clone(), odds.clone()).unwrap();
            let rep = build_co_cycles_representation(&plan)
                .unwrap_or_else(|e| panic!("build failed for {evens:?} + {odds:?}: {e}"));
            assert_eq!(intersection_graph(&rep), plan_target_graph(&plan));
        }
    }
}
