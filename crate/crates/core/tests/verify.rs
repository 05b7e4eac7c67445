use groupoid_jordan::analysis::AbelianInvariants;
use groupoid_jordan::complex::{
    arc_order, build_space, random_arc, random_simple_cycle, subcomplex_from_path, Cell, CellComplex, LengthBounds,
    ModelName, ModelSpec,
};
use groupoid_jordan::verify::{
    arc_complement_connected, arc_halves, bisection_separating_subarc, cycle_witness, jordan_curve_check, pbp_check,
    sample_pbp_instances, separates, vankampen_jordan_pipeline, PbpVerdict,
};
use groupoid_jordan::Error;
use proptest::prelude::*;

fn sphere(n: usize) -> CellComplex {
    build_space(&ModelSpec::new(ModelName::GridSphere, n)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn curves_on_spheres_separate(n in 2usize..10, seed in any::<u64>()) {
        let x = sphere(n);
        let c = random_simple_cycle(&x, seed, LengthBounds::new(4, 4 * n), 1000).unwrap();
        let r = jordan_curve_check(&x, &c).unwrap();
        prop_assert_eq!(r.component_count, 2);
        prop_assert!(r.separates_as_expected());
    }

    #[test]
    fn pipeline_cross_check(n in 3usize..7, seed in any::<u64>()) {
        let x = sphere(n);
        let c = random_simple_cycle(&x, seed, LengthBounds::new(4, 3 * n), 1000).unwrap();
        let p = vankampen_jordan_pipeline(&x, &c).unwrap().pipeline.unwrap();
        prop_assert_eq!(&p.pushout, &p.direct);
        prop_assert_eq!(p.pushout, AbelianInvariants::free(1));
        prop_assert_eq!(p.f_generators, p.base_points.len() - 1);
    }

    #[test]
    fn arcs_on_spheres_do_not_separate(n in 1usize..10, seed in any::<u64>()) {
        let x = sphere(n);
        let arc = random_arc(&x, seed, LengthBounds::new(0, 3 * n), 1000).unwrap();
        prop_assert!(arc_complement_connected(&x, &arc).unwrap());
    }

    #[test]
    fn bisection_output_is_minimal(n in 2usize..16, lo in 0usize..16, len in 0usize..16) {
        let x = build_space(&ModelSpec::new(ModelName::Interval, n)).unwrap();
        let lo = lo % n;
        let hi = (lo + len).min(n);
        let vs: Vec<usize> = (lo..=hi).collect();
        let es: Vec<usize> = (lo..hi).collect();
        let arc = subcomplex_from_path(&vs, &es);
        for (a, b) in [(0, n), (0, lo), (hi, n)] {
            if arc.contains(Cell::Vertex(a)) || arc.contains(Cell::Vertex(b)) {
                continue;
            }
            match bisection_separating_subarc(&x, &arc, a, b).unwrap() {
                None => prop_assert!(!separates(&x, &arc, a, b).unwrap()),
                Some(found) => {
                    prop_assert!(separates(&x, &found.subarc, a, b).unwrap());
                    let (v, e) = arc_order(&x, &found.subarc).unwrap();
                    if let Some(halves) = arc_halves(&v, &e) {
                        for (hv, he) in halves {
                            prop_assert!(!separates(&x, &subcomplex_from_path(&hv, &he), a, b).unwrap());
                        }
                    }
                    prop_assert_eq!(found.vertices.len(), 1);
                }
            }
        }
    }

    #[test]
    fn sampled_sphere_instances_hold(n in 3usize..9, seed in any::<u64>()) {
        let x = sphere(n);
        for inst in sample_pbp_instances(&x, seed, 10, 1000).unwrap() {
            prop_assert_eq!(pbp_check(&x, &inst).unwrap().verdict, PbpVerdict::Holds);
        }
    }
}

#[test]
fn cycle_witnesses_fail_the_property() {
    for n in 4..=24 {
        let (x, inst) = cycle_witness(n).unwrap();
        let out = pbp_check(&x, &inst).unwrap();
        assert_eq!(out.verdict, PbpVerdict::Violated, "n = {n}");
        assert!(!out.d_separates && !out.e_separates && out.union_separates);
    }
    assert!(matches!(cycle_witness(3), Err(Error::Parameter(_))));
}

#[test]
fn jordan_on_disks_and_annuli() {
    // The closed disk: the inside is always a component, the outside may
    // break up where the curve runs along the rim.
    let x = build_space(&ModelSpec::new(ModelName::Disk, 6)).unwrap();
    let mut counts = Vec::new();
    for seed in 0..20 {
        let c = random_simple_cycle(&x, seed, LengthBounds::new(4, 20), 1000).unwrap();
        counts.push(jordan_curve_check(&x, &c).unwrap().component_count);
    }
    assert!(counts.iter().all(|&k| k >= 2));
    assert!(counts.iter().any(|&k| k > 2));
    // The hole usually keeps U or V from being simply connected; arcs that
    // reach from the inner rim to the outer one cut it open.
    let y = build_space(&ModelSpec::new(ModelName::Annulus, 5)).unwrap();
    let mut stage_failures = 0;
    for seed in 0..20 {
        let c = random_simple_cycle(&y, seed, LengthBounds::new(4, 20), 1000).unwrap();
        if let Err(Error::PipelineStage {
            stage: "simply_connected",
            ..
        }) = vankampen_jordan_pipeline(&y, &c)
        {
            stage_failures += 1;
        }
    }
    assert!(stage_failures > 0);
}
