//! Graph products of groups: reduced normal forms, special subgroups and
//! their cosets, and explicit affine isometric actions on ℓp spaces built
//! from vertex cocycles.

pub mod action;
pub mod cocycle;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod group;
pub mod invariants;
pub mod normal_form;
pub mod numeric;
pub mod product;
pub mod special;
pub mod splitting;

pub use action::{IndexKey, LpVector, NormIdentity, ProductAction, ProfileRow};
pub use cocycle::{
    check_vertex_cocycle, pad_cocycle, regular_cocycle, translation_cocycle, AffineAction, BasisIndex, BlockVector,
    CocycleCheck, CocycleKind, VertexCocycle,
};
pub use config::{Model, ProductConfig};
pub use error::{Error, Result};
pub use graph::{SimplicialGraph, VertexId, VertexSet};
pub use group::{Elem, GroupKind, TableGroup, VertexGroup};
pub use normal_form::Ball;
pub use numeric::{Exponent, NormPow, Rational};
pub use product::{GraphProduct, NormalForm, Syllable, VertexElement};
pub use special::CosetId;
pub use splitting::{KernelDecomposition, KernelFactor, KernelTable};
