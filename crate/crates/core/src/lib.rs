//! Closed paths in the pants graph of the `n`-punctured sphere, the braid
//! complements obtained by drilling them out of the mapping torus, octahedral
//! ideal triangulations of those complements, and the surfaces carried by
//! their pants cells.

pub mod carried;
pub mod drilling;
pub mod error;
pub mod fan;
pub mod io;
pub mod pants_graph;
pub mod pipeline;
pub mod surface;
pub mod triangulation;

pub use carried::{canonical_torus, enumerate_carried, normal_form, CarriedSurface, Carrier};
pub use drilling::{build_drilled_complex, DrilledComplex};
pub use error::{Error, Result};
pub use fan::{build_fan_path, fan_path, FanPathSpec};
pub use pants_graph::{validate_path, PantsPath};
pub use pipeline::{run_pipeline, PipelineConfig, PipelineReport};
pub use surface::{Chord, PantsDecomposition};
pub use triangulation::{triangulate, volume_bound, IdealTriangulation, VolumeBound};

pub type VolumeBoundF64 = VolumeBound<f64>;
pub type VolumeBoundF32 = VolumeBound<f32>;
