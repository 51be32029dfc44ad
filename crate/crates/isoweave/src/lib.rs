//! Isonemal weaving toolkit: doubly-periodic two-strand-direction weave
//! designs, their symmetry groups and species, perfect multi-colour
//! stripings with satin and twillin redundancy, torus census arithmetic,
//! and SVG rendering.

pub mod design;
pub mod geom;
pub mod species;
pub mod synthesis;
pub mod symmetry;

pub use design::{enumerate_one_per_order, twillin, Design, DesignError, Strand};
pub use geom::{Isometry, Lattice2, Point2H, D4};
pub use species::{
    classify_species, lattice_unit_of, AxisFeatures, LatticeUnit, MarkerKind, QuarterSpecies,
    SpeciesReport,
};
pub use symmetry::{
    enumerate_symmetries, is_isonemal, is_subgroup_of, is_symmetry, GroupDescription, RawOp,
    SymmetryError, SymmetryOp,
};
