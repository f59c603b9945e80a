//! From a hypersurface or a presented algebra to a checked homological report.

mod catalog;
mod io;
mod iso;
mod report;
mod stable;

pub use catalog::{
    builtin_names, dual_numbers_quiver, load_instance, reference_algebra, verify_paper_claims, CatalogEntry,
    Construction, ExpectedClaim, Verified,
};
pub use io::{
    module_from_spec, read_algebra_file, read_module_file, AlgebraFile, AlgebraRef, AlgebraSource, ModuleFile,
};
pub use iso::{algebra_isomorphic_small, find_isomorphism};
pub use report::{analyze, gdim_json, gdim_value, AnalysisReport, ClaimResult};
pub use stable::{build_stable_category, BaseRing, StableCatPresentation};
