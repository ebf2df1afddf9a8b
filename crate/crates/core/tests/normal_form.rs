mod common;

use graphprod::fixtures;
use graphprod::{GraphProduct, NormalForm, Syllable, VertexId};
use proptest::prelude::*;

fn products() -> Vec<GraphProduct> {
    let mut out: Vec<GraphProduct> = fixtures::all().iter().map(|a| a.product().clone()).collect();
    out.push(fixtures::dihedral_join(1, 1).product().clone());
    out
}

fn word_strategy(n_vertices: usize, max_len: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..n_vertices, -3i64..=3), 0..=max_len)
}

fn to_word(product: &GraphProduct, raw: &[(usize, i64)]) -> Vec<Syllable> {
    raw.iter()
        .map(|&(v, k)| Syllable::new(VertexId(v), product.group(VertexId(v)).normalize(k)))
        .collect()
}

#[test]
fn canonical_form_matches_rewriting_oracle() {
    for product in [fixtures::path3(), fixtures::free_zz()].map(|a| a.product().clone()) {
        let letters = common::letters(&product, &[1, -1, 2, -2]);
        for w in common::words(&letters, 4) {
            let reduced = product.reduce(&w).unwrap();
            assert_eq!(
                reduced.syllables(),
                common::oracle_canonical(&product, &w).as_slice(),
                "word {}",
                product.format_syllables(&w)
            );
        }
    }
}

#[test]
fn word_problem_agrees_with_oracle() {
    for product in [fixtures::path3(), fixtures::free_zz()].map(|a| a.product().clone()) {
        let letters = common::letters(&product, &[1, -1, 2, -2]);
        let short = common::words(&letters, 2);
        for x in &short {
            for y in &short {
                let mut w = x.clone();
                w.extend(common::inverse_word(&product, y));
                let oracle_equal = common::oracle_canonical(&product, &w).is_empty();
                let equal = product.equals(&product.reduce(x).unwrap(), &product.reduce(y).unwrap());
                assert_eq!(equal, oracle_equal);
            }
        }
    }
}

#[test]
fn ball_sizes() {
    // |B(R)| of the free group on two generators is 2·3^R − 1.
    let free = fixtures::free_zz().product().clone();
    for r in 0..=5u32 {
        assert_eq!(free.enumerate_ball(r as u64).unwrap().len(), 2 * 3usize.pow(r) - 1);
    }
    // Z²: 2R² + 2R + 1 lattice points.
    let prod = fixtures::prod_zz().product().clone();
    for r in 0..=6usize {
        assert_eq!(prod.enumerate_ball(r as u64).unwrap().len(), 2 * r * r + 2 * r + 1);
    }
    // D∞: 2R + 1.
    let d = fixtures::dihedral().product().clone();
    assert_eq!(d.enumerate_ball(7).unwrap().len(), 15);
}

#[test]
fn ball_spheres_have_their_length() {
    for product in products() {
        let ball = product.enumerate_ball(4).unwrap();
        for (n, sphere) in ball.spheres.iter().enumerate() {
            for g in sphere {
                assert_eq!(product.word_length(g), n as u64);
                assert!(product.is_reduced(g.syllables()));
            }
        }
    }
}

#[test]
fn ball_resource_guard() {
    let free = fixtures::free_zz().product().clone();
    assert!(matches!(
        free.enumerate_ball_limited(10, 100),
        Err(graphprod::Error::ResourceLimit { limit: 100 })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_laws(which in 0usize..5, a in word_strategy(4, 6), b in word_strategy(4, 6), c in word_strategy(4, 6)) {
        let product = &products()[which];
        let n = product.graph().len();
        let fix = |raw: Vec<(usize, i64)>| -> Vec<(usize, i64)> { raw.into_iter().map(|(v, k)| (v % n, k)).collect() };
        let (x, y, z) = (
            product.reduce(&to_word(product, &fix(a))).unwrap(),
            product.reduce(&to_word(product, &fix(b))).unwrap(),
            product.reduce(&to_word(product, &fix(c))).unwrap(),
        );
        let e = NormalForm::identity();
        prop_assert_eq!(product.multiply(&product.multiply(&x, &y), &z), product.multiply(&x, &product.multiply(&y, &z)));
        prop_assert_eq!(product.multiply(&x, &e), x.clone());
        prop_assert_eq!(product.multiply(&e, &x), x.clone());
        prop_assert!(product.multiply(&x, &product.invert(&x)).is_identity());
        prop_assert_eq!(product.invert(&product.invert(&x)), x.clone());
        prop_assert_eq!(product.invert(&product.multiply(&x, &y)), product.multiply(&product.invert(&y), &product.invert(&x)));
    }

    #[test]
    fn normal_forms_are_canonical(which in 0usize..5, a in word_strategy(4, 8)) {
        let product = &products()[which];
        let n = product.graph().len();
        let raw: Vec<(usize, i64)> = a.into_iter().map(|(v, k)| (v % n, k)).collect();
        let w = to_word(product, &raw);
        let x = product.reduce(&w).unwrap();
        prop_assert!(product.is_reduced(x.syllables()));
        prop_assert_eq!(product.reduce(x.syllables()).unwrap(), x.clone());
        // Syllable-by-syllable multiplication agrees with reducing the word.
        let stepwise = w.iter().fold(NormalForm::identity(), |acc, &s| product.multiply_syllable(&acc, s));
        prop_assert_eq!(stepwise, x.clone());
        // Lengths: l_X is a sum over syllables and never exceeds the word's.
        let lx: u64 = x.syllables().iter().map(|&s| product.vertex_word_length(s)).sum();
        prop_assert_eq!(product.word_length(&x), lx);
        let lw: u64 = w.iter().map(|&s| product.vertex_word_length(s)).sum();
        prop_assert!(product.word_length(&x) <= lw);
        prop_assert!(x.syllable_length() <= w.len());
        prop_assert_eq!(product.word_length(&product.invert(&x)), product.word_length(&x));
    }

    #[test]
    fn commuting_letters_commute(k in 1i64..5, l in 1i64..5) {
        let product = fixtures::prod_zz().product().clone();
        let a = Syllable::new(VertexId(0), k);
        let b = Syllable::new(VertexId(1), l);
        prop_assert_eq!(product.reduce(&[a, b]).unwrap(), product.reduce(&[b, a]).unwrap());
        let free = fixtures::free_zz().product().clone();
        prop_assert_ne!(free.reduce(&[a, b]).unwrap(), free.reduce(&[b, a]).unwrap());
    }
}
