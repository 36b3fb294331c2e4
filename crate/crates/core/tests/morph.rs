mod common;

use common::*;
use rt_morph::morph::{decide, full_morph, same_wood_morph, MorphPlan};
use rt_morph::rt::{extract_wood_set, ratio, validate_rt};
use rt_morph::schnyder::Scope;

fn assert_plan_valid(plan: &MorphPlan) {
    let d = plan.check().unwrap();
    assert!(d.is_empty(), "{d:?}");
    for k in &plan.keyframes {
        let v = validate_rt(k);
        assert!(v.is_empty(), "{v:?}");
    }
    for w in plan.keyframes.windows(2) {
        for t in [ratio(1, 4), ratio(1, 2), ratio(3, 4)] {
            let mid = w[0].interpolate(&w[1], &t);
            let v = validate_rt(&mid);
            assert!(v.is_empty(), "{v:?}");
        }
    }
}

#[test]
fn random_same_wood_plans_are_valid() {
    let mut rng = rng(7);
    for round in 0..60 {
        let n = 4 + round % 13;
        let g = random_graph(n, &mut rng);
        let t = random_wood(&g, 4 * n, Scope::FacesOnly, &mut rng);
        let opts = RepOptions { degenerate_moves: round % 4, disturb: round % 2 == 1 };
        let a = random_rep(&t, &opts, &mut rng);
        let b = random_rep(&t, &opts, &mut rng);
        assert!(validate_rt(&a).is_empty(), "{:?}", validate_rt(&a));
        let ta = extract_wood_set(&a).unwrap();
        assert!(ta.contains(&t));
        let plan = same_wood_morph(&a, &b, &t).unwrap();
        assert!(plan.steps() <= 2 * n, "{} steps for n = {n}", plan.steps());
        assert_eq!(plan.first(), &a);
        assert_eq!(plan.last(), &b);
        assert_plan_valid(&plan);
    }
}

#[test]
fn random_cross_wood_plans_are_valid() {
    let mut rng = rng(11);
    for round in 0..40 {
        let n = 4 + round % 13;
        let g = random_graph(n, &mut rng);
        let ta = random_wood(&g, 4 * n, Scope::FacesOnly, &mut rng);
        let tb = random_wood(&g, 4 * n, Scope::FacesOnly, &mut rng);
        let opts = RepOptions { degenerate_moves: round % 3, disturb: round % 2 == 0 };
        let a = random_rep(&ta, &opts, &mut rng);
        let b = random_rep(&tb, &opts, &mut rng);
        let d = decide(&a, &b).unwrap();
        if !d.possible {
            continue;
        }
        let plan = full_morph(&a, &b).unwrap();
        let l = d.flip_count.unwrap();
        assert!(plan.steps() <= 2 * n + 2 * l + 6, "{} steps, n = {n}, l = {l}", plan.steps());
        assert_eq!(plan.first(), &a);
        assert_eq!(plan.last(), &b);
        assert_plan_valid(&plan);
    }
}
