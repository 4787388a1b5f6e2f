//! Octahedral decomposition of the drilled manifold and its export as an
//! ideal triangulation.

mod assemble;
mod format;
mod octahedra;
mod tets;
mod volume;

pub use assemble::{assemble, assemble_with_twists};
pub use format::{parse_tri_text, to_tri_text};
pub use octahedra::{
    a_region_octahedra, face_color, s_region_octahedron, FaceColor, FacePairing, FaceRef, OctCopy, OctahedralComplex,
    Octahedron, SRegionLabels, Slot, DARK_FACES, FACES, LOWER_FACES, UPPER_FACES, WHITE_FACES,
};
pub use tets::{subdivide, IdealTriangulation, Perm4, Tetrahedron, TriangulationReport, SUBDIVISION};
pub use volume::{v_oct, volume_bound, volume_bound_as, VolumeBound, V_OCT};

use crate::drilling::DrilledComplex;
use crate::error::Result;

/// Assemble, subdivide and validate in one step.
pub fn triangulate(complex: &DrilledComplex) -> Result<(IdealTriangulation, TriangulationReport)> {
    let tri = subdivide(&assemble(complex)?)?;
    let report = tri.validate()?;
    Ok((tri, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drilling::build_drilled_complex;
    use crate::fan::{build_fan_path, fan_path, FanPathSpec};

    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn fan_triangulations_validate() {
        for n in 5..=7u32 {
            let dc = build_drilled_complex(&fan_path(n).unwrap()).unwrap();
            let (tri, rep) = triangulate(&dc).unwrap();
            let m = (n * (n - 3)) as usize;
            assert_eq!(tri.len(), 8 * m);
            assert_eq!(rep.cusps, n as usize + m, "n = {n}");
            assert!(rep.all_links_tori());
        }
    }

    #[test]
    fn rotated_monodromy_cusps() {
        for n in 5..=7u32 {
            for rounds in 1..n {
                let path = build_fan_path(FanPathSpec::new(n, rounds).unwrap()).unwrap();
                let dc = build_drilled_complex(&path).unwrap();
                let (_, rep) = triangulate(&dc).unwrap();
                assert_eq!(rep.cusps, gcd(rounds, n) as usize + path.len(), "n={n} rounds={rounds}");
            }
        }
    }
}
