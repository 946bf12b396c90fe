//! Combinatorics of wonderful models: meet-semilattices, building sets,
//! nested set complexes, combinatorial blowups, the algebra `D(L, G)`,
//! nested fans, rational subspace arrangements and permutation actions.

pub mod algebra;
pub mod arrangement;
pub mod blowup;
pub mod building;
pub mod complex;
pub mod error;
pub mod fans;
pub mod group;
pub mod io;
pub mod linalg;
pub mod poset;

pub use algebra::{
    algebra_presentation, buchberger_check, groebner_basis, hilbert_series, join_distance, monomial_basis,
    normal_form, AlgebraPresentation, GroebnerBasis, MonomialBasis, Polynomial,
};
pub use arrangement::{
    braid_arrangement, classify_stratum, encode_model_point, intersection_lattice, is_geometric_building_set,
    truncate, IntersectionLattice, ModelPoint, QSubspace, QSubspaceArrangement,
};
pub use blowup::{combinatorial_blowup, resolve, BlowupOrder, BlowupResult};
pub use building::{
    enumerate_building_sets, factors, is_building_set, is_nested, maximal_building_set, minimal_building_set,
    nested_set_complex, BuildingCheck, BuildingSet,
};
pub use complex::{face_poset, stellar_subdivision, SimplicialComplex};
pub use error::{Error, Result};
pub use fans::{nested_fan, verify_fan, NestedFan};
pub use group::{
    abelianization_audit, action_arrangement, invariant_line_span, is_elementary_abelian_2, perm_group, stabilizer,
    subgroups, PermGroup, Permutation,
};
pub use poset::{
    build_semilattice, direct_product, order_complex, poset_isomorphic, standard_lattice, LatticeKind,
    MeetSemilattice, Poset,
};
