mod common;

use common::{cnf_satisfiable, figure_formula, random_cnf, rng};
use efx_orient::model::one_forest;
use efx_orient::reductions::*;
use efx_orient::rooting::rooting_feasible;
use efx_orient::solvers::{solve, Decision, Lit};
use proptest::prelude::*;

fn census(inst: &efx_orient::Instance) -> Vec<usize> {
    let f = one_forest(inst);
    let mut sizes: Vec<usize> = f.components.iter().map(|c| c.vertices.len()).collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes
}

fn is_path_component(inst: &efx_orient::Instance, vs: &[usize]) -> bool {
    vs.iter().all(|&v| inst.one_degree(v) <= 2) && vs.iter().filter(|&&v| inst.one_degree(v) == 1).count() == 2
}

#[test]
fn figure_formula_counts_and_answer() {
    let f = figure_formula();
    let (inst, map) = from_monotone_3sat(&f).unwrap();
    assert_eq!((inst.n(), inst.ones(), inst.zeros()), (23, 16, 15));
    assert_eq!(census(&inst), vec![2, 5]);
    let sol = solve(&inst).unwrap();
    assert_eq!(sol.decision, Decision::Yes);
    let a = assignment_from_orientation(&inst, &map, sol.orientation.as_ref().unwrap()).unwrap();
    assert!(f.satisfied_by(&a));
    let sat = cnf_satisfiable(&f).unwrap();
    let r = rooting_from_assignment(&map, &sat).unwrap();
    assert!(rooting_feasible(&inst, &r).unwrap().is_feasible());
    assert_eq!(assignment_from_rooting(&inst, &map, &r).unwrap(), sat);
}

#[test]
fn small_formulas() {
    let one = MonotoneCnf::new(3, vec![vec![Lit::pos(0), Lit::pos(1), Lit::pos(2)]]).unwrap();
    let (inst, map) = from_monotone_3sat(&one).unwrap();
    assert_eq!(solve(&inst).unwrap().decision, Decision::Yes);
    for q in 0..3 {
        let c = &map.clauses[0];
        let root = c.literal_position(q);
        let mut roots: Vec<usize> = map.vars.iter().map(|v| v[usize::from(q != 0)]).collect();
        roots[q] = map.vars[q][0];
        roots.push(root);
        let r = efx_orient::rooting::Rooting { roots };
        if rooting_feasible(&inst, &r).unwrap().is_feasible() {
            let a = assignment_from_rooting(&inst, &map, &r).unwrap();
            assert!(c.literals[q].holds(&a));
        }
    }
    let contra = MonotoneCnf::new(1, vec![vec![Lit::pos(0)], vec![Lit::neg(0)]]).unwrap();
    let (inst, _) = from_monotone_3sat(&contra).unwrap();
    assert_eq!(solve(&inst).unwrap().decision, Decision::No);
}

#[test]
fn random_formulas_match_truth_table() {
    let mut r = rng(7);
    for _ in 0..200 {
        let f = random_cnf(&mut r, 6, 6);
        let (inst, map) = from_monotone_3sat(&f).unwrap();
        let sol = solve(&inst).unwrap();
        let expected = cnf_satisfiable(&f).is_some();
        assert_eq!(sol.decision == Decision::Yes, expected, "{}", f.to_dimacs());
        if let Some(o) = &sol.orientation {
            let a = assignment_from_orientation(&inst, &map, o).unwrap();
            assert!(f.satisfied_by(&a));
        }
        assert!(census(&inst).iter().all(|&s| s == 2 || s == 5));
    }
}

#[test]
fn low_degree_variant() {
    let mut r = rng(11);
    let mut formulas: Vec<MonotoneCnf> = (0..100).map(|_| random_cnf(&mut r, 5, 5)).collect();
    formulas.push(figure_formula());
    for f in formulas {
        let (low, _, _) = reduce_3sat_low_degree(&f).unwrap();
        assert!((0..low.n()).all(|v| low.zero_degree(v) <= 1));
        let forest = one_forest(&low);
        for c in &forest.components {
            assert!(matches!(c.vertices.len(), 2 | 3 | 5) && is_path_component(&low, &c.vertices));
        }
        let (inst, _) = from_monotone_3sat(&f).unwrap();
        assert_eq!(solve(&low).unwrap().decision, solve(&inst).unwrap().decision);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn assignment_rooting_round_trip(seed in 0u64..1_000_000) {
        let f = random_cnf(&mut rng(seed), 6, 6);
        let (inst, map) = from_monotone_3sat(&f).unwrap();
        if let Some(a) = cnf_satisfiable(&f) {
            let r = rooting_from_assignment(&map, &a).unwrap();
            prop_assert!(rooting_feasible(&inst, &r).unwrap().is_feasible());
            prop_assert_eq!(assignment_from_rooting(&inst, &map, &r).unwrap(), a);
        }
    }

    #[test]
    fn mapping_text_round_trips(seed in 0u64..1_000_000) {
        let f = random_cnf(&mut rng(seed), 4, 4);
        let (_, map) = from_monotone_3sat(&f).unwrap();
        let m = Mapping::Sat(map);
        prop_assert_eq!(Mapping::from_text(&m.to_text()).unwrap(), m);
    }
}
