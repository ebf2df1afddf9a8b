//! Small reference products used by tests, examples and the CLI.
//!
//! All actions use `p = 2`; switch with [`ProductAction::with_exponent`].

use crate::action::ProductAction;
use crate::cocycle::{regular_cocycle, translation_cocycle, VertexCocycle};
use crate::graph::SimplicialGraph;
use crate::group::VertexGroup;
use crate::numeric::{int, Exponent};
use crate::product::GraphProduct;

fn build(names: &[&str], edges: &[(&str, &str)], groups: Vec<VertexGroup>) -> ProductAction {
    let graph = SimplicialGraph::new(names, edges).expect("fixture graph");
    let cocycles: Vec<VertexCocycle> = groups
        .iter()
        .map(|g| {
            if g.is_finite() {
                regular_cocycle(g, int(1))
            } else {
                translation_cocycle(g)
            }
        })
        .collect::<Result<_, _>>()
        .expect("fixture cocycles");
    let product = GraphProduct::new(graph, groups).expect("fixture product");
    ProductAction::new(product, Exponent::integer(2), cocycles).expect("fixture action")
}

/// `Z * Z` on vertices `a`, `b`, translation cocycles.
pub fn free_zz() -> ProductAction {
    build(
        &["a", "b"],
        &[],
        vec![VertexGroup::integers("a"), VertexGroup::integers("b")],
    )
}

/// `Z × Z` on the edge `a–b`, translation cocycles.
pub fn prod_zz() -> ProductAction {
    build(
        &["a", "b"],
        &[("a", "b")],
        vec![VertexGroup::integers("a"), VertexGroup::integers("b")],
    )
}

/// `D∞ = Z/2 * Z/2`, regular cocycles with `C = 1`.
pub fn dihedral() -> ProductAction {
    build(
        &["a", "b"],
        &[],
        vec![
            VertexGroup::cyclic("a", 2).expect("order 2"),
            VertexGroup::cyclic("b", 2).expect("order 2"),
        ],
    )
}

/// The path `u–v–w` with `Z` at every vertex, translation cocycles.
pub fn path3() -> ProductAction {
    build(
        &["u", "v", "w"],
        &[("u", "v"), ("v", "w")],
        ["u", "v", "w"].map(VertexGroup::integers).to_vec(),
    )
}

/// A single `Z` vertex with the translation cocycle.
pub fn single_z() -> ProductAction {
    build(&["z"], &[], vec![VertexGroup::integers("z")])
}

/// The join of `n` dihedral pairs and `m` copies of `Z`, i.e.
/// `D∞^n × Z^m` as a graph product. Pair `i` has vertices `d{i}a`, `d{i}b`;
/// the `Z` vertices are `z{j}`.
pub fn dihedral_join(n: usize, m: usize) -> ProductAction {
    let mut names = Vec::new();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut groups = Vec::new();
    for i in 1..=n {
        let pair = vec![names.len(), names.len() + 1];
        for side in ["a", "b"] {
            let name = format!("d{i}{side}");
            groups.push(VertexGroup::cyclic(name.clone(), 2).expect("order 2"));
            names.push(name);
        }
        parts.push(pair);
    }
    for j in 1..=m {
        let name = format!("z{j}");
        groups.push(VertexGroup::integers(name.clone()));
        parts.push(vec![names.len()]);
        names.push(name);
    }
    let mut edges = Vec::new();
    for (i, pi) in parts.iter().enumerate() {
        for pj in &parts[i + 1..] {
            for &x in pi {
                for &y in pj {
                    edges.push((names[x].as_str(), names[y].as_str()));
                }
            }
        }
    }
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    build(&names, &edges, groups)
}

/// The four acceptance fixtures: free, product, dihedral and path.
pub fn all() -> Vec<ProductAction> {
    vec![free_zz(), prod_zz(), dihedral(), path3()]
}

pub fn named() -> Vec<(&'static str, ProductAction)> {
    vec![
        ("FIX-FREE", free_zz()),
        ("FIX-PROD", prod_zz()),
        ("FIX-Dinf", dihedral()),
        ("FIX-P3", path3()),
    ]
}
