//! Checkerboard ideal octahedra and the pieces they build.

use serde::{Deserialize, Serialize};

use crate::drilling::{ARegion, Cusp, RegionId};
use crate::error::{Error, Result};

pub type Slot = usize;

pub const N: Slot = 0;
pub const S: Slot = 1;
pub const W: Slot = 2;
pub const X: Slot = 3;
pub const Y: Slot = 4;
pub const Z: Slot = 5;

/// Faces as slot triples. Faces 0..4 contain the north pole, 4..8 the south.
pub const FACES: [[Slot; 3]; 8] = [
    [N, W, X],
    [N, X, Y],
    [N, Y, Z],
    [N, Z, W],
    [S, W, X],
    [S, X, Y],
    [S, Y, Z],
    [S, Z, W],
];

pub const DARK_FACES: [usize; 4] = [0, 2, 5, 7];
pub const WHITE_FACES: [usize; 4] = [1, 3, 4, 6];

/// White faces carrying the upper pants `(N,x,y)`, `(N,z,w)`.
pub const UPPER_FACES: [usize; 2] = [1, 3];
/// White faces carrying the lower pants `(S,w,x)`, `(S,y,z)`.
pub const LOWER_FACES: [usize; 2] = [4, 6];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceColor {
    Dark,
    White,
}

pub fn face_color(face: usize) -> FaceColor {
    if DARK_FACES.contains(&face) {
        FaceColor::Dark
    } else {
        FaceColor::White
    }
}

/// Sign of the slot triple as seen from outside the standard octahedron
/// `N = +e3, S = -e3, w = +e1, x = +e2, y = -e1, z = -e2`.
pub(crate) fn outward_sign(a: Slot, b: Slot, c: Slot) -> i32 {
    const POS: [[i32; 3]; 6] = [[0, 0, 1], [0, 0, -1], [1, 0, 0], [0, 1, 0], [-1, 0, 0], [0, -1, 0]];
    let (p, q, r) = (POS[a], POS[b], POS[c]);
    let det =
        p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) + p[2] * (q[0] * r[1] - q[1] * r[0]);
    det.signum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OctCopy {
    Plus,
    Minus,
    Single,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Octahedron {
    pub id: usize,
    pub region: Option<RegionId>,
    pub copy: OctCopy,
    /// Cusp at each slot `N, S, w, x, y, z`.
    pub labels: [Cusp; 6],
}

impl Octahedron {
    pub fn north(&self) -> Cusp {
        self.labels[N]
    }

    pub fn south(&self) -> Cusp {
        self.labels[S]
    }

    pub fn equator(&self) -> [Cusp; 4] {
        [self.labels[W], self.labels[X], self.labels[Y], self.labels[Z]]
    }

    pub fn face_labels(&self, face: usize) -> [Cusp; 3] {
        FACES[face].map(|s| self.labels[s])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FaceRef {
    pub octahedron: usize,
    pub face: usize,
}

/// Identifies `first` with `second`; the i-th slot of `first`'s face goes to
/// slot `map[i]` of the second octahedron.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacePairing {
    pub first: FaceRef,
    pub second: FaceRef,
    pub map: [Slot; 3],
}

impl FacePairing {
    /// Pairing that sends each slot of `first.face` to a slot of
    /// `second.face` according to `f`.
    pub(crate) fn by_slots(first: FaceRef, second: FaceRef, f: impl Fn(Slot) -> Slot) -> Self {
        FacePairing {
            first,
            second,
            map: FACES[first.face].map(f),
        }
    }

    pub fn is_self_gluing(&self) -> bool {
        self.first == self.second
    }
}

/// Two copies of the region's octahedron doubled along the dark faces.
pub fn a_region_octahedra(region: &ARegion, first_id: usize) -> ([Octahedron; 2], Vec<FacePairing>) {
    let labels = [
        Cusp::Loop(region.north),
        Cusp::Loop(region.south),
        region.equator[0],
        region.equator[1],
        region.equator[2],
        region.equator[3],
    ];
    let plus = Octahedron {
        id: first_id,
        region: Some(region.id),
        copy: OctCopy::Plus,
        labels,
    };
    let minus = Octahedron {
        id: first_id + 1,
        copy: OctCopy::Minus,
        ..plus.clone()
    };
    let pairings = DARK_FACES
        .iter()
        .map(|&f| {
            FacePairing::by_slots(
                FaceRef {
                    octahedron: first_id,
                    face: f,
                },
                FaceRef {
                    octahedron: first_id + 1,
                    face: f,
                },
                |s| s,
            )
        })
        .collect();
    ([plus, minus], pairings)
}

/// Labels of an S-region octahedron: the two poles and the equator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SRegionLabels {
    pub north: Cusp,
    pub south: Cusp,
    pub equator: [Cusp; 4],
}

/// One octahedron with `(N,w,x)` folded onto `(N,y,z)` and `(S,x,y)` onto
/// `(S,z,w)`. Returns the octahedron, the two folds and the two boundary
/// pants as pairs of white faces.
pub fn s_region_octahedron(labels: SRegionLabels, id: usize) -> (Octahedron, Vec<FacePairing>, [[usize; 2]; 2]) {
    let e = labels.equator;
    let oct = Octahedron {
        id,
        region: None,
        copy: OctCopy::Single,
        labels: [labels.north, labels.south, e[0], e[1], e[2], e[3]],
    };
    let face = |f| FaceRef {
        octahedron: id,
        face: f,
    };
    let half_turn = |s: Slot| match s {
        W => Y,
        X => Z,
        Y => W,
        Z => X,
        pole => pole,
    };
    let folds = vec![
        FacePairing::by_slots(face(0), face(2), half_turn),
        FacePairing::by_slots(face(5), face(7), half_turn),
    ];
    (oct, folds, [UPPER_FACES, LOWER_FACES])
}

/// Octahedra with face pairings between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OctahedralComplex {
    pub octahedra: Vec<Octahedron>,
    pub pairings: Vec<FacePairing>,
}

impl OctahedralComplex {
    /// Every face of every octahedron appears in exactly one pairing, no face
    /// is glued to itself, and each vertex map is a bijection onto the
    /// target face.
    pub fn check_complete(&self) -> Result<()> {
        let mut seen = vec![[false; 8]; self.octahedra.len()];
        for p in &self.pairings {
            if p.is_self_gluing() {
                return Err(Error::assembly(format!("face {:?} glued to itself", p.first)));
            }
            let mut target = p.map;
            target.sort_unstable();
            let mut want = FACES[p.second.face];
            want.sort_unstable();
            if target != want {
                return Err(Error::assembly(format!(
                    "pairing {:?} -> {:?} does not land on the target face",
                    p.first, p.second
                )));
            }
            for r in [p.first, p.second] {
                let slot = seen
                    .get_mut(r.octahedron)
                    .and_then(|o| o.get_mut(r.face))
                    .ok_or_else(|| Error::assembly(format!("pairing names unknown face {r:?}")))?;
                if *slot {
                    return Err(Error::assembly(format!("face {r:?} paired twice")));
                }
                *slot = true;
            }
        }
        for (o, faces) in seen.iter().enumerate() {
            if let Some(f) = faces.iter().position(|x| !x) {
                return Err(Error::assembly(format!("face {f} of octahedron {o} is unpaired")));
            }
        }
        Ok(())
    }
}
