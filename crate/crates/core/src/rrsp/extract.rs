//! Elementary path extraction from flow-shaped selections.
//!
//! MILP incumbents on flow rows are unit origin-to-target flows, which may
//! carry cycles: zero-cost cycles disjoint from the path, or detours
//! through already-visited vertices. Any elementary path using only the
//! selected arcs has regret no larger than the input's, so extraction is a
//! safe post-processing step.

use std::collections::VecDeque;

use crate::rrsp::{IntervalDigraph, Path, RrspError};

/// Shortest-hop elementary origin-to-target path over the selected arcs
/// (breadth-first, out-arcs in ascending index order, so deterministic).
///
/// The input must be a unit flow: in-degree minus out-degree of -1 at the
/// origin, +1 at the target, 0 elsewhere, over arcs with `selection = 1`.
/// The output uses a subset of the input arcs, so its resource use never
/// exceeds the input's.
pub fn extract_elementary(g: &IntervalDigraph, selection: &[u8]) -> Result<Path, RrspError> {
    if selection.len() != g.arc_count() {
        return Err(RrspError::BadInstance(format!(
            "selection has {} entries for {} arcs",
            selection.len(),
            g.arc_count()
        )));
    }
    let mut balance = vec![0i64; g.vertex_count()];
    for (idx, arc) in g.arcs().iter().enumerate() {
        if selection[idx] != 0 {
            balance[arc.head] += 1;
            balance[arc.tail] -= 1;
        }
    }
    for v in 0..g.vertex_count() {
        let want = if v == g.origin() {
            -1
        } else if v == g.target() {
            1
        } else {
            0
        };
        if balance[v] != want {
            return Err(RrspError::NotAFlow(format!(
                "vertex {v} has flow balance {} (expected {want})",
                balance[v]
            )));
        }
    }

    let mut parent_arc: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[g.origin()] = true;
    let mut queue = VecDeque::new();
    queue.push_back(g.origin());
    while let Some(v) = queue.pop_front() {
        if v == g.target() {
            break;
        }
        for &idx in g.out_arcs(v) {
            if selection[idx] == 0 {
                continue;
            }
            let head = g.arcs()[idx].head;
            if !seen[head] {
                seen[head] = true;
                parent_arc[head] = Some(idx);
                queue.push_back(head);
            }
        }
    }
    if !seen[g.target()] {
        return Err(RrspError::NotAFlow(
            "target unreachable through the selected arcs".into(),
        ));
    }
    let mut arcs = Vec::new();
    let mut at = g.target();
    while at != g.origin() {
        let idx = parent_arc[at].expect("every reached vertex has a parent");
        arcs.push(idx);
        at = g.arcs()[idx].tail;
    }
    arcs.reverse();
    Ok(Path { arcs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rrsp::Arc;

    fn arc(tail: usize, head: usize, l: i64, u: i64, d: i64) -> Arc {
        Arc {
            tail,
            head,
            lower: l,
            upper: u,
            resource: d,
        }
    }

    #[test]
    fn elementary_input_is_unchanged() {
        let g = IntervalDigraph::new(
            3,
            vec![arc(0, 1, 1, 2, 1), arc(1, 2, 1, 2, 1)],
            0,
            2,
            5,
        )
        .unwrap();
        let p = extract_elementary(&g, &[1, 1]).unwrap();
        assert_eq!(p.arcs, vec![0, 1]);
    }

    #[test]
    fn disjoint_zero_cost_cycle_is_dropped() {
        // Path 0->3 plus a 2-cycle between vertices 1 and 2.
        let g = IntervalDigraph::new(
            4,
            vec![
                arc(0, 3, 2, 4, 1),
                arc(1, 2, 0, 0, 0),
                arc(2, 1, 0, 0, 0),
            ],
            0,
            3,
            5,
        )
        .unwrap();
        let p = extract_elementary(&g, &[1, 1, 1]).unwrap();
        assert_eq!(p.arcs, vec![0]);
    }

    #[test]
    fn on_path_cycle_is_shortcut() {
        // 0 -> 1 -> 2 -> 1 is not representable with binary arcs, so use a
        // figure-eight: flow 0->1, 1->2, 2->3 plus cycle 1->4, 4->1.
        let g = IntervalDigraph::new(
            5,
            vec![
                arc(0, 1, 1, 1, 1),
                arc(1, 2, 1, 1, 1),
                arc(2, 3, 1, 1, 1),
                arc(1, 4, 1, 1, 1),
                arc(4, 1, 1, 1, 1),
            ],
            0,
            3,
            10,
        )
        .unwrap();
        let p = extract_elementary(&g, &[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(p.arcs, vec![0, 1, 2]);
        assert!(p.is_elementary(&g));
    }

    #[test]
    fn broken_conservation_is_rejected() {
        let g = IntervalDigraph::new(
            3,
            vec![arc(0, 1, 1, 2, 1), arc(1, 2, 1, 2, 1)],
            0,
            2,
            5,
        )
        .unwrap();
        assert!(matches!(
            extract_elementary(&g, &[1, 0]),
            Err(RrspError::NotAFlow(_))
        ));
    }
}
