//! Property tests: writing an instance and parsing the text back recovers
//! every field, across the generators' whole parameter and seed space, and
//! the parsers shrug off comments and blank lines.

use proptest::prelude::*;

use regret_core::rng::Rng;
use regret_core::rrsp::{
    generate_coco, generate_karasan, parse_rrsp, write_rrsp, GridParams, IntervalDigraph,
    KarasanParams,
};
use regret_core::rsc::{generate_synthetic_scp, parse_rsc, write_rsc, IntervalCoverProblem};

fn assert_same_digraph(a: &IntervalDigraph, b: &IntervalDigraph) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.vertex_count(), b.vertex_count());
    prop_assert_eq!(a.origin(), b.origin());
    prop_assert_eq!(a.target(), b.target());
    prop_assert_eq!(a.beta(), b.beta());
    prop_assert_eq!(a.arcs(), b.arcs());
    Ok(())
}

/// Decorate a canonical text form with the noise the parsers must skip.
fn with_noise(text: &str) -> String {
    let mut noisy = String::from("# leading comment\n\n");
    for line in text.lines() {
        noisy.push_str(line);
        noisy.push_str("  # trailing note\n\n");
    }
    noisy
}

proptest! {
    #[test]
    fn layered_path_instances_roundtrip(
        width in 1usize..=3,
        layers in 1usize..=4,
        phi_max in 1i64..=30,
        delta in 0.05f64..=0.95,
        seed in any::<u64>(),
    ) {
        let params = KarasanParams { vertices: width * layers, phi_max, delta, width };
        let g = generate_karasan(&params, seed).expect("parameters are in range");
        let text = write_rrsp(&g);
        assert_same_digraph(&g, &parse_rrsp(&text).expect("own output parses"))?;
        assert_same_digraph(&g, &parse_rrsp(&with_noise(&text)).expect("noise is skipped"))?;
    }

    #[test]
    fn grid_path_instances_roundtrip(
        rows in 1usize..=4,
        cols in 2usize..=5,
        phi_max in 1i64..=30,
        delta in 0.05f64..=0.95,
        seed in any::<u64>(),
    ) {
        let g = generate_coco(&GridParams { rows, cols, phi_max, delta }, seed)
            .expect("parameters are in range");
        let text = write_rrsp(&g);
        assert_same_digraph(&g, &parse_rrsp(&text).expect("own output parses"))?;
        assert_same_digraph(&g, &parse_rrsp(&with_noise(&text)).expect("noise is skipped"))?;
    }

    #[test]
    fn covering_instances_roundtrip(
        rows in 1usize..=6,
        cols in 2usize..=10,
        density in 0.2f64..=1.0,
        seed in any::<u64>(),
    ) {
        let base = generate_synthetic_scp(rows, cols, density, 10, seed)
            .expect("parameters are in range");
        let mut rng = Rng::new(seed ^ 0x1d);
        let (lower, upper): (Vec<i64>, Vec<i64>) = (0..cols)
            .map(|_| {
                let l = rng.range_i64(0, 40);
                (l, rng.range_i64(l, 60))
            })
            .unzip();
        let p = IntervalCoverProblem::new(base.matrix().clone(), lower, upper)
            .expect("intervals are well formed");
        let text = write_rsc(&p);
        let back = parse_rsc(&text).expect("own output parses");
        prop_assert_eq!(p.matrix(), back.matrix());
        prop_assert_eq!(p.intervals(), back.intervals());
        let noisy = parse_rsc(&with_noise(&text)).expect("noise is skipped");
        prop_assert_eq!(p.matrix(), noisy.matrix());
        prop_assert_eq!(p.intervals(), noisy.intervals());
    }
}
