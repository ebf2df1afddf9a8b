mod common;

use std::collections::HashMap;

use graphprod::fixtures;
use graphprod::invariants::GrowthFunction;
use graphprod::numeric::Exponent;
use graphprod::{GraphProduct, KernelTable, NormalForm, VertexId};
use proptest::prelude::*;

fn products() -> Vec<GraphProduct> {
    let mut out: Vec<GraphProduct> = fixtures::all().iter().map(|a| a.product().clone()).collect();
    out.push(fixtures::dihedral_join(1, 1).product().clone());
    out
}

#[test]
fn decomposition_invariants_on_balls() {
    for product in products() {
        for z in product.enumerate_ball(5).unwrap().iter() {
            for v in product.graph().vertices() {
                let d = product.decompose(z, v).unwrap();
                assert_eq!(product.reassemble(&d), *z);
                let a_v = product.graph().vertex_set().without(v);
                assert_eq!(d.quotient, product.retract(z, a_v).unwrap());
                assert!(d.consecutive_tags_distinct());
                let link = product.graph().link(v).unwrap();
                for f in &d.factors {
                    assert!(product.is_member(&f.tag, a_v));
                    assert_eq!(product.coset_rep(&f.tag, link).unwrap(), f.tag);
                    assert!(!product.group(v).is_identity(f.element));
                }
                // The kernel part retracts to the identity.
                assert!(product.retract(&product.kernel_element(&d), a_v).unwrap().is_identity());
            }
            assert!(product.length_additivity(z).holds());
        }
    }
}

#[test]
fn semidirect_law() {
    for product in products() {
        let ball: Vec<NormalForm> = product.enumerate_ball(3).unwrap().iter().cloned().collect();
        for v in product.graph().vertices() {
            let a_v = product.graph().vertex_set().without(v);
            let qs: Vec<&NormalForm> = ball.iter().filter(|q| product.is_member(q, a_v)).collect();
            for z in &ball {
                let dz = product.decompose(z, v).unwrap();
                for q in &qs {
                    let dzq = product.decompose(&product.multiply(z, q), v).unwrap();
                    assert_eq!(dzq.quotient, product.multiply(&dz.quotient, q));
                    assert_eq!(product.kernel_element(&dzq), product.kernel_element(&dz));
                }
            }
        }
    }
}

/// Distance-profile embedding of a finite kernel sample:
/// `φ'(a) = |K|^{-1/p} (d_W(a, s))_{s∈K}`, 1-Lipschitz by the triangle
/// inequality. Returns the table and its measured linear compression.
fn profile_table(product: &GraphProduct, v: VertexId, kernel: &[NormalForm], p: Exponent) -> (KernelTable, f64) {
    let scale = (kernel.len() as f64).powf(-1.0 / p.value());
    let mut images = HashMap::new();
    for a in kernel {
        let image = kernel
            .iter()
            .map(|s| scale * product.kernel_distance(v, a, s).unwrap() as f64)
            .collect::<Vec<f64>>();
        images.insert(a.clone(), image);
    }
    let mut c = f64::INFINITY;
    for a in kernel {
        for b in kernel {
            let d = product.kernel_distance(v, a, b).unwrap();
            if d > 0 {
                let diff: f64 = images[a]
                    .iter()
                    .zip(&images[b])
                    .map(|(x, y)| (x - y).abs().powf(p.value()))
                    .sum::<f64>()
                    .powf(1.0 / p.value());
                assert!(diff <= d as f64 + 1e-9, "profile map is 1-Lipschitz");
                c = c.min(diff / d as f64);
            }
        }
    }
    (KernelTable { lipschitz: 1.0, images }, c)
}

#[test]
fn assembled_embedding_satisfies_both_bounds() {
    let p = Exponent::integer(2);
    for action in [fixtures::free_zz(), fixtures::path3()] {
        let product = action.product();
        let sample: Vec<NormalForm> = product.enumerate_ball(4).unwrap().iter().cloned().collect();
        let mut tables = Vec::new();
        let mut c = f64::INFINITY;
        for v in product.graph().vertices() {
            let mut kernel: Vec<NormalForm> = sample
                .iter()
                .map(|g| product.kernel_element(&product.decompose(g, v).unwrap()))
                .collect();
            kernel.sort();
            kernel.dedup();
            let (t, cv) = profile_table(product, v, &kernel, p);
            tables.push(t);
            c = c.min(cv);
        }
        let rho = GrowthFunction::from_fn(8, |n| c * n as f64).unwrap();
        let report = product.assemble_embedding(&tables, &rho, &sample, p).unwrap();
        assert!(report.holds(), "{report:?}");
        assert!(report.empirical_lipschitz <= report.lipschitz_bound + 1e-9);
        assert!(report.pairs > 0);
    }
}

#[test]
fn identical_tables_respect_the_lipschitz_bound() {
    let product = fixtures::free_zz().product().clone();
    let sample: Vec<NormalForm> = product.enumerate_ball(3).unwrap().iter().cloned().collect();
    // Every kernel element maps to its own length l_W, which is 1-Lipschitz for d_W.
    let mut images = HashMap::new();
    for g in &sample {
        for v in product.graph().vertices() {
            let w = product.kernel_element(&product.decompose(g, v).unwrap());
            let lw = product.kernel_length(&product.decompose(&w, v).unwrap()) as f64;
            images.insert(w, vec![lw]);
        }
    }
    let table = KernelTable { lipschitz: 1.0, images };
    let rho = GrowthFunction::from_fn(6, |_| 0.0).unwrap();
    let report = product
        .assemble_embedding(&[table.clone(), table], &rho, &sample, Exponent::integer(1))
        .unwrap();
    assert!(report.empirical_lipschitz <= 2.0 + 1e-9);
    assert!(report.holds());
}

proptest! {
    #[test]
    fn additivity_on_random_elements(which in 0usize..5, raw in prop::collection::vec((0usize..4, -4i64..=4), 0..12)) {
        let product = &products()[which];
        let n = product.graph().len();
        let w: Vec<_> = raw.iter().map(|&(v, k)| {
            let v = VertexId(v % n);
            graphprod::Syllable::new(v, product.group(v).normalize(k))
        }).collect();
        let z = product.reduce(&w).unwrap();
        let add = product.length_additivity(&z);
        prop_assert_eq!(add.total(), add.word_length);
    }
}
