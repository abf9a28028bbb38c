mod common;

use common::{random_binary, rng};
use efx_orient::model::*;
use efx_orient::preprocess::*;
use efx_orient::rooting::{enumerate_states, rooting_feasible, rooting_to_orientation, Rooting};
use efx_orient::solvers::*;
use efx_orient::{Instance, Orientation, Value};
use proptest::prelude::*;
use rand::Rng;

/// Random instance whose values mix 0, 1 and small fractions.
fn random_weighted(seed: u64, max_n: usize, max_m: usize) -> Instance {
    let mut r = rng(seed);
    let base = random_binary(&mut r, max_n, max_m);
    let edges: Vec<_> = base
        .edges()
        .iter()
        .map(|e| {
            let v = match r.gen_range(0..4) {
                0 => Value::zero(),
                1 => Value::one(),
                2 => Value::integer(r.gen_range(2..4)),
                _ => Value::ratio(r.gen_range(1..5), r.gen_range(1..5)).unwrap(),
            };
            (e.u, e.v, v)
        })
        .collect();
    Instance::new(base.n(), edges).unwrap()
}

fn random_orientation(inst: &Instance, mask: u64) -> Orientation {
    let r = (0..inst.m()).map(|e| if mask >> (e % 64) & 1 == 0 { inst.edge(e).u } else { inst.edge(e).v }).collect();
    Orientation::from_receivers(inst, r).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fast_verifier_agrees_with_definition(seed in any::<u64>(), mask in any::<u64>()) {
        let inst = random_binary(&mut rng(seed), 7, 14);
        let o = random_orientation(&inst, mask);
        prop_assert_eq!(verify_efx(&inst, &o).unwrap(), verify_efx_definitional(&inst, &o).unwrap());
        let w = random_weighted(seed, 6, 10);
        let o = random_orientation(&w, mask);
        prop_assert_eq!(verify_efx(&w, &o).unwrap(), verify_efx_definitional(&w, &o).unwrap());
    }

    #[test]
    fn text_formats_round_trip(seed in any::<u64>(), mask in any::<u64>()) {
        let inst = random_weighted(seed, 8, 14);
        let text = serialize_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(serialize_instance(&back), text);
        let o = random_orientation(&inst, mask);
        prop_assert_eq!(parse_orientation(&inst, &serialize_orientation(&inst, &o)).unwrap(), o);
    }

    #[test]
    fn traces_replay_and_lift(seed in any::<u64>()) {
        let inst = random_binary(&mut rng(seed), 8, 14);
        for reduce in [preprocess_basic, reduce_zero_degrees, preprocess_full] {
            let (reduced, trace) = reduce(&inst).unwrap();
            let trace = ReductionTrace::from_text(&trace.to_text()).unwrap();
            prop_assert_eq!(&trace.replay(&inst).unwrap(), &reduced);
            if reduced.m() > 20 {
                continue;
            }
            if let Some(o) = solve_bruteforce_orientations(&reduced, 20).unwrap() {
                let lifted = lift_orientation(&trace, &reduced, &o).unwrap();
                prop_assert!(verify_efx(&inst, &lifted).unwrap().ok);
            }
        }
    }

    #[test]
    fn basic_steps_never_grow(seed in any::<u64>()) {
        let inst = random_binary(&mut rng(seed), 8, 14);
        let (reduced, _) = preprocess_basic(&inst).unwrap();
        prop_assert!(reduced.n() + reduced.m() <= inst.n() + inst.m());
        let (cores, _) = make_cores(&reduced).unwrap();
        prop_assert!(cores.n() + cores.m() <= reduced.n() + reduced.m());
        prop_assert!(cores_hold(&cores));
    }

    #[test]
    fn feasible_rootings_give_efx(seed in any::<u64>()) {
        let (inst, _) = preprocess_basic(&random_binary(&mut rng(seed), 8, 14)).unwrap();
        let table = enumerate_states(&inst).unwrap();
        let mut r = rng(seed ^ 1);
        for _ in 0..8 {
            let roots: Vec<usize> = table.trees.iter().map(|t| t.vertices[r.gen_range(0..t.vertices.len())]).collect();
            let rooting = Rooting { roots };
            if rooting_feasible(&inst, &rooting).unwrap().is_feasible() {
                let o = rooting_to_orientation(&inst, &rooting).unwrap();
                prop_assert!(verify_efx(&inst, &o).unwrap().ok);
            }
        }
    }

    #[test]
    fn yes_answers_carry_verified_orientations(seed in any::<u64>()) {
        let inst = random_binary(&mut rng(seed), 10, 18);
        let sol = solve(&inst).unwrap();
        prop_assert_ne!(sol.decision, Decision::Indeterminate);
        prop_assert_eq!(sol.orientation.is_some(), sol.decision == Decision::Yes);
        if let Some(o) = &sol.orientation {
            prop_assert!(verify_efx(&inst, o).unwrap().ok);
        }
        if !matches!(detect_min_uncut_le1(&inst), UncutClassification::MoreThanOne) {
            prop_assert_eq!(sol.decision, Decision::Yes);
        }
    }

    #[test]
    fn twosat_matches_truth_table(seed in any::<u64>()) {
        let mut r = rng(seed);
        let vars = r.gen_range(1..=10);
        let mut f = TwoSatFormula::new(vars);
        for _ in 0..r.gen_range(0..=3 * vars) {
            let a = Lit { var: r.gen_range(0..vars), positive: r.gen_bool(0.5) };
            let b = Lit { var: r.gen_range(0..vars), positive: r.gen_bool(0.5) };
            f.add_clause(a, b);
        }
        let truth = (0u32..1 << vars).any(|m| f.satisfied_by(&(0..vars).map(|i| m >> i & 1 == 1).collect::<Vec<_>>()));
        match twosat_solve(&f) {
            Some(a) => prop_assert!(truth && f.satisfied_by(&a)),
            None => prop_assert!(!truth),
        }
    }

    #[test]
    fn parameterized_is_order_stable(seed in any::<u64>()) {
        // Budget and tau only change speed, never the first answer found.
        let (inst, _) = preprocess_full(&random_binary(&mut rng(seed), 9, 16)).unwrap();
        let a = solve_parameterized(&inst, 3, 1 << 20).unwrap().0;
        let b = solve_parameterized(&inst, 30, 1 << 20).unwrap().0;
        prop_assert_eq!(a.is_some(), b.is_some());
    }
}
