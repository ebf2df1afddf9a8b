//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use graphprod::{
    AffineAction, CosetId, GraphProduct, LpVector, NormalForm, ProductAction, Syllable, VertexId,
};

/// One rewriting step: delete an identity syllable, merge two adjacent
/// syllables at the same vertex, or swap two adjacent syllables at adjacent
/// vertices.
fn neighbours(product: &GraphProduct, word: &[Syllable]) -> Vec<Vec<Syllable>> {
    let mut out = Vec::new();
    for i in 0..word.len() {
        if product.group(word[i].vertex).is_identity(word[i].value) {
            let mut w = word.to_vec();
            w.remove(i);
            out.push(w);
        }
    }
    for i in 0..word.len().saturating_sub(1) {
        let (x, y) = (word[i], word[i + 1]);
        if x.vertex == y.vertex {
            let mut w = word.to_vec();
            w[i] = Syllable::new(x.vertex, product.group(x.vertex).multiply(x.value, y.value));
            w.remove(i + 1);
            out.push(w);
        } else if product.graph().adjacent(x.vertex, y.vertex) {
            let mut w = word.to_vec();
            w.swap(i, i + 1);
            out.push(w);
        }
    }
    out
}

/// Every word reachable from `word` in the rewriting graph.
pub fn rewriting_closure(product: &GraphProduct, word: &[Syllable]) -> HashSet<Vec<Syllable>> {
    let mut seen = HashSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for n in neighbours(product, &w) {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    seen
}

/// The shortest reachable words. They are the reduced words of the element.
pub fn terminal_words(product: &GraphProduct, word: &[Syllable]) -> BTreeSet<Vec<Syllable>> {
    let all = rewriting_closure(product, word);
    let min = all.iter().map(Vec::len).min().unwrap_or(0);
    all.into_iter().filter(|w| w.len() == min).collect()
}

/// Lexicographically least reduced word, by `(vertex, value)`.
pub fn oracle_canonical(product: &GraphProduct, word: &[Syllable]) -> Vec<Syllable> {
    terminal_words(product, word).into_iter().next().unwrap_or_default()
}

/// All words with at most `max_len` syllables over the given letters.
pub fn words(letters: &[Syllable], max_len: usize) -> Vec<Vec<Syllable>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in letters {
                let mut x: Vec<Syllable> = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `v:k` for every vertex and every `k` in `values` that names an element.
pub fn letters(product: &GraphProduct, values: &[i64]) -> Vec<Syllable> {
    product
        .graph()
        .vertices()
        .flat_map(|v| {
            values
                .iter()
                .filter(move |&&k| product.group(v).contains(k))
                .map(move |&k| Syllable::new(v, k))
        })
        .collect()
}

pub fn inverse_word(product: &GraphProduct, word: &[Syllable]) -> Vec<Syllable> {
    word.iter()
        .rev()
        .map(|s| Syllable::new(s.vertex, product.group(s.vertex).inverse(s.value)))
        .collect()
}

/// `β` of an arbitrary word by the cocycle relation
/// `β(s w) = β(s) + τ(s) β(w)`, with `β(s) = b_v(s) χ_{G_{st(v)}}`.
pub fn recursive_beta(action: &ProductAction, word: &[Syllable]) -> LpVector {
    let product = action.product();
    let mut out = LpVector::zero(action.exponent());
    for s in word.iter().rev() {
        let g = product.reduce(&[*s]).unwrap();
        let mut head = LpVector::zero(action.exponent());
        head.add_block(
            &CosetId {
                vertex: s.vertex,
                rep: NormalForm::identity(),
            },
            s.vertex,
            &action.cocycle(s.vertex).translation(s.value),
        );
        out = head.add(&action.apply_tau(&g, &out));
    }
    out
}

/// Whether `g^{-1} h ∈ G_{st(v)}`, by membership of the normal form.
pub fn same_star_coset(product: &GraphProduct, g: &NormalForm, h: &NormalForm, v: VertexId) -> bool {
    let star = product.graph().star(v).unwrap();
    product.is_member(&product.multiply(&product.invert(g), h), star)
}
