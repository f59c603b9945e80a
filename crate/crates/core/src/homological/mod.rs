//! Resolutions, Ext, homological dimensions and Gorenstein projectives.

mod dimension;
mod gorenstein;
mod nakayama;
mod resolution;

pub use dimension::{
    dimension_of, global_dimension, injective_dimension_regular, is_selfinjective, iwanaga_gorenstein,
    projective_dimension, verify_periodicity, GDimReport, InjectiveDimensions, PeriodicityWitness,
};
pub use gorenstein::{
    check_g_n, complete_resolution, gorenstein_dimension_category, gp_census, gp_dimension, is_gorenstein_projective,
    singularity_trivial, CompleteResolution, GpMethod, GpReport, Singularity, SingularityWitness,
};
pub use nakayama::{is_nakayama, nakayama_indecomposables, radical_filtration};
pub use resolution::{
    ext_dim, ext_dim_from, hom_from_projective_dim, min_resolution, precomposition, resolve, Periodicity, Resolution,
};
