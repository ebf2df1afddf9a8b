use graphprod::fixtures;
use graphprod::invariants::{
    adim_bound, alpha_eq_bounds, compression_guarantee, has_free_subgroup, GrowthFunction, Guarantee,
};
use graphprod::numeric::Exponent;
use graphprod::{ProductConfig, SimplicialGraph};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: u32) -> SimplicialGraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits & (1 << k) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    SimplicialGraph::from_indices(n, &edges).unwrap()
}

#[test]
fn free_subgroup_exists_except_for_dihedral() {
    for n in 2..=5usize {
        let pairs = n * (n - 1) / 2;
        for bits in 0..(1u32 << pairs) {
            let g = graph_from_bits(n, bits);
            if g.is_reducible(g.vertex_set()) {
                assert!(has_free_subgroup(&g, &vec![None; n]).is_err());
                continue;
            }
            for orders in [vec![None; n], vec![Some(2); n], vec![Some(3); n]] {
                let w = has_free_subgroup(&g, &orders).unwrap();
                let dihedral = n == 2 && orders == vec![Some(2); 2];
                assert_eq!(w.is_none(), dihedral, "n={n} bits={bits:b} {orders:?}");
            }
        }
    }
}

#[test]
fn adim_on_complete_and_edgeless_graphs() {
    let adims = [0u64, 1, 3, 2];
    let complete = graph_from_bits(4, 0b111111);
    assert_eq!(adim_bound(&complete, &adims).unwrap(), 1 + 1 + 3 + 2);
    let edgeless = graph_from_bits(4, 0);
    assert_eq!(adim_bound(&edgeless, &adims).unwrap(), 3);
}

#[test]
fn adim_fixture_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/adim.json");
    let model = ProductConfig::load(path).unwrap().build().unwrap();
    assert_eq!(adim_bound(model.product().graph(), &model.adims).unwrap(), 3);
}

#[test]
fn fixture_files_load_and_round_trip() {
    for name in ["free", "prod", "dinf", "p3", "adim"] {
        let path = format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let cfg = ProductConfig::load(&path).unwrap();
        assert_eq!(ProductConfig::from_json(&cfg.to_json()).unwrap(), cfg, "{name}");
    }
}

#[test]
fn guarantee_never_fails_after_its_hypotheses() {
    let rhos: Vec<GrowthFunction> = vec![
        GrowthFunction::from_fn(5, |n| (n as f64).sqrt()).unwrap(),
        GrowthFunction::from_fn(5, |n| (n as f64).powf(1.0 / 3.0)).unwrap(),
        GrowthFunction::from_fn(5, |n| n as f64).unwrap(),
        GrowthFunction::from_fn(5, |n| (n as f64).min(2.0)).unwrap(),
        GrowthFunction::from_fn(5, |n| 0.5 * (n as f64).sqrt()).unwrap(),
    ];
    let mut actions = fixtures::all();
    actions.extend(fixtures::all().iter().map(|a| a.pad_for_properness()));
    for action in actions {
        for p in [1, 2, 3] {
            let a = action.with_exponent(Exponent::integer(p));
            for rho in &rhos {
                let g = compression_guarantee(&a, rho, 5).unwrap();
                assert!(!matches!(g, Guarantee::ConclusionFails(_)), "{g:?}");
            }
        }
    }
}

proptest! {
    #[test]
    fn alpha_bounds_are_monotone(bits in 0u32..64, alphas in prop::collection::vec(0.0f64..=1.0, 4), bump in 0usize..4, delta in 0.0f64..0.5, p in 1.0f64..6.0, finite in prop::collection::vec(any::<bool>(), 4)) {
        let g = graph_from_bits(4, bits);
        let orders: Vec<Option<u64>> = finite.iter().map(|&f| if f { Some(2) } else { None }).collect();
        let p = Exponent::new(p).unwrap();
        let base = alpha_eq_bounds(&g, &alphas, &orders, p).unwrap();
        prop_assert!(0.0 <= base.lower && base.lower <= base.upper && base.upper <= 1.0);
        let mut raised = alphas.clone();
        raised[bump] = (raised[bump] + delta).min(1.0);
        let up = alpha_eq_bounds(&g, &raised, &orders, p).unwrap();
        prop_assert!(up.lower >= base.lower && up.upper >= base.upper);
    }

    #[test]
    fn small_p_collapses_the_interval(alpha in 0.0f64..=1.0, p in 1.0f64..=2.0) {
        let g = graph_from_bits(3, 0b001);
        let i = alpha_eq_bounds(&g, &[1.0, alpha, 1.0], &[None; 3], Exponent::new(p).unwrap()).unwrap();
        prop_assert!(i.exact());
        prop_assert_eq!(i.lower, (1.0 / p).min(alpha));
    }
}
