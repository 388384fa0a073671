//! Seeded generators for the two shortest-path benchmark families.
//!
//! Both draw per-arc values in a fixed, documented order so instances are
//! bit-reproducible from the seed. Interval endpoints follow the benchmark
//! recipe: a base cost `phi` uniform in `[1, phi_max]`, a lower bound
//! uniform in `[ceil((1-delta)*phi), floor((1+delta)*phi)]`, an upper bound
//! uniform in `[lower, floor((1+delta)*phi)]`, and a resource uniform in
//! `[1, 10]`. The resource budget is set 10% above the minimum possible
//! consumption.

use crate::rng::Rng;
use crate::rrsp::classical::min_resource_raw;
use crate::rrsp::{Arc, IntervalDigraph, RrspError};

/// Layered-digraph family parameters: `vertices` internal vertices arranged
/// in layers of `width`, complete bipartite arcs between adjacent layers.
#[derive(Debug, Clone)]
pub struct KarasanParams {
    pub vertices: usize,
    pub phi_max: i64,
    pub delta: f64,
    pub width: usize,
}

/// Grid-digraph family parameters: `rows x cols` cells, two opposite arcs
/// per adjacent cell pair, origin at the upper-left, target at the
/// lower-right. Opposite arcs share their resource value.
#[derive(Debug, Clone)]
pub struct GridParams {
    pub rows: usize,
    pub cols: usize,
    pub phi_max: i64,
    pub delta: f64,
}

/// Ceiling that forgives float dust just above an exact integer. The
/// products `(1 +- delta) * phi` have granularity far above 1e-9 for any
/// reasonable delta, so the nudge can never cross a genuine boundary.
fn ceil_eps(x: f64) -> i64 {
    (x - 1e-9).ceil() as i64
}

fn floor_eps(x: f64) -> i64 {
    (x + 1e-9).floor() as i64
}

fn validate_cost_params(phi_max: i64, delta: f64) -> Result<(), RrspError> {
    if phi_max < 1 {
        return Err(RrspError::BadShape(format!("phi_max {phi_max} < 1")));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(RrspError::BadShape(format!(
            "delta {delta} outside (0, 1)"
        )));
    }
    Ok(())
}

/// Draw `(lower, upper)` for one arc with base cost `phi`. Two RNG draws,
/// always in this order.
fn draw_interval(rng: &mut Rng, phi: i64, delta: f64) -> (i64, i64) {
    let lo_min = ceil_eps((1.0 - delta) * phi as f64).max(0);
    let hi_max = floor_eps((1.0 + delta) * phi as f64);
    let lower = rng.range_i64(lo_min, hi_max);
    let upper = rng.range_i64(lower, hi_max);
    (lower, upper)
}

/// Layered instance. Per arc, in arc order, the draws are: phi, lower,
/// upper, resource.
pub fn generate_karasan(params: &KarasanParams, seed: u64) -> Result<IntervalDigraph, RrspError> {
    let KarasanParams {
        vertices,
        phi_max,
        delta,
        width,
    } = *params;
    validate_cost_params(phi_max, delta)?;
    if width == 0 || vertices == 0 || vertices % width != 0 {
        return Err(RrspError::BadShape(format!(
            "{vertices} vertices do not split into layers of width {width}"
        )));
    }
    let layers = vertices / width;
    let origin = 0usize;
    let target = vertices + 1;
    // Vertex id of slot `w` in layer `b` (1-based layer).
    let vertex = |b: usize, w: usize| 1 + (b - 1) * width + w;

    let mut rng = Rng::new(seed);
    let mut arcs = Vec::new();
    let push = |rng: &mut Rng, tail: usize, head: usize, arcs: &mut Vec<Arc>| {
        let phi = rng.range_i64(1, phi_max);
        let (lower, upper) = draw_interval(rng, phi, delta);
        let resource = rng.range_i64(1, 10);
        arcs.push(Arc {
            tail,
            head,
            lower,
            upper,
            resource,
        });
    };
    for w in 0..width {
        push(&mut rng, origin, vertex(1, w), &mut arcs);
    }
    for b in 1..layers {
        for wa in 0..width {
            for wb in 0..width {
                push(&mut rng, vertex(b, wa), vertex(b + 1, wb), &mut arcs);
            }
        }
    }
    for w in 0..width {
        push(&mut rng, vertex(layers, w), target, &mut arcs);
    }

    let beta = beta_for(vertices + 2, &arcs, origin, target)?;
    IntervalDigraph::new(vertices + 2, arcs, origin, target, beta)
}

/// Grid instance. Adjacent cell pairs are visited in row-major order,
/// right neighbor before down neighbor; per pair the draws are: phi,
/// lower, upper for the forward arc, then phi, lower, upper for the
/// reverse arc, then one shared resource.
pub fn generate_coco(params: &GridParams, seed: u64) -> Result<IntervalDigraph, RrspError> {
    let GridParams {
        rows,
        cols,
        phi_max,
        delta,
    } = *params;
    validate_cost_params(phi_max, delta)?;
    if rows * cols < 2 {
        return Err(RrspError::BadShape(format!(
            "grid {rows}x{cols} has fewer than 2 cells"
        )));
    }
    let vertices = rows * cols;
    let cell = |r: usize, c: usize| r * cols + c;
    let origin = cell(0, 0);
    let target = cell(rows - 1, cols - 1);

    let mut rng = Rng::new(seed);
    let mut arcs = Vec::new();
    let push_pair = |rng: &mut Rng, a: usize, b: usize, arcs: &mut Vec<Arc>| {
        let phi_fwd = rng.range_i64(1, phi_max);
        let (l_fwd, u_fwd) = draw_interval(rng, phi_fwd, delta);
        let phi_rev = rng.range_i64(1, phi_max);
        let (l_rev, u_rev) = draw_interval(rng, phi_rev, delta);
        let resource = rng.range_i64(1, 10);
        arcs.push(Arc {
            tail: a,
            head: b,
            lower: l_fwd,
            upper: u_fwd,
            resource,
        });
        arcs.push(Arc {
            tail: b,
            head: a,
            lower: l_rev,
            upper: u_rev,
            resource,
        });
    };
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                push_pair(&mut rng, cell(r, c), cell(r, c + 1), &mut arcs);
            }
            if r + 1 < rows {
                push_pair(&mut rng, cell(r, c), cell(r + 1, c), &mut arcs);
            }
        }
    }

    let beta = beta_for(vertices, &arcs, origin, target)?;
    IntervalDigraph::new(vertices, arcs, origin, target, beta)
}

fn beta_for(
    vertices: usize,
    arcs: &[Arc],
    origin: usize,
    target: usize,
) -> Result<i64, RrspError> {
    let d = min_resource_raw(vertices, arcs, origin, target).ok_or(RrspError::Disconnected)?;
    Ok(11 * d / 10)
}
