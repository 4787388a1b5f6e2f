//! JSON forms of the toolkit's artifacts. Emitters pretty-print with a
//! trailing newline so that parsing and re-emitting reproduces the input
//! byte for byte; parsers re-check whatever can be checked from the file
//! alone.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::carried::{
    CarriedSurface, Carrier, CompressionWitness, NormalFormStatus, SurfaceClass, Tube, TubingSelection,
};
use crate::drilling::{CellId, DrilledComplex};
use crate::error::{Error, Result};
use crate::pants_graph::{MoveKind, PantsPath};
use crate::surface::{Chord, PantsDecomposition};
use crate::triangulation::IdealTriangulation;

/// Pretty JSON followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("artifact types serialize");
    s.push('\n');
    s
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct MoveEntry {
    kind: MoveKind,
    removed: Chord,
    inserted: Chord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct PathFile {
    n: u32,
    monodromy: u32,
    start: Vec<Chord>,
    moves: Vec<MoveEntry>,
}

pub fn path_to_json(path: &PantsPath) -> String {
    to_json(&PathFile {
        n: path.n,
        monodromy: path.monodromy,
        start: path.start.chords().to_vec(),
        moves: path
            .moves()
            .map(|(kind, removed, inserted)| MoveEntry {
                kind,
                removed,
                inserted,
            })
            .collect(),
    })
}

/// Reads a path; legality of its moves is left to
/// [`crate::pants_graph::validate_path`].
pub fn parse_path_json(text: &str) -> Result<PantsPath> {
    let file: PathFile = from_json(text)?;
    let start = PantsDecomposition::new(file.n, file.start)?;
    if !start.is_valid() {
        return Err(Error::input(format!("start {start} is not a pants decomposition")));
    }
    if file.monodromy >= file.n {
        return Err(Error::input(format!(
            "monodromy {} must be below n = {}",
            file.monodromy, file.n
        )));
    }
    for (i, mv) in file.moves.iter().enumerate() {
        for c in [mv.removed, mv.inserted] {
            c.check(file.n).map_err(|e| Error::input(format!("move {i}: {e}")))?;
        }
    }
    Ok(PantsPath::from_moves(
        start,
        file.moves.into_iter().map(|m| (m.kind, m.removed, m.inserted)),
        file.monodromy,
    ))
}

pub fn complex_to_json(complex: &DrilledComplex) -> String {
    to_json(complex)
}

pub fn parse_complex_json(text: &str) -> Result<DrilledComplex> {
    let complex: DrilledComplex = from_json(text)?;
    complex.validate()?;
    Ok(complex)
}

pub fn triangulation_to_json(t: &IdealTriangulation) -> String {
    to_json(t)
}

pub fn parse_triangulation_json(text: &str) -> Result<IdealTriangulation> {
    let t: IdealTriangulation = from_json(text)?;
    t.check_gluings()?;
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceRecord {
    pub id: usize,
    pub cells: Vec<CellId>,
    pub tubes: Vec<Tube>,
    pub euler: i64,
    pub orientable: bool,
    pub genus: u32,
    pub punctures: usize,
    pub orbit: usize,
    pub normal_form_status: NormalFormStatus,
    /// Id of the record holding this surface's normal form, when listed.
    pub normal_form: Option<usize>,
}

impl SurfaceRecord {
    pub fn selection(&self) -> TubingSelection {
        TubingSelection::new(self.cells.clone(), self.tubes.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfacesFile {
    pub n: u32,
    pub m: usize,
    pub annuli_only: bool,
    pub orbit_count: usize,
    pub surfaces: Vec<SurfaceRecord>,
    pub witness: Option<CompressionWitness>,
}

impl SurfacesFile {
    pub fn new(
        complex: &DrilledComplex,
        annuli_only: bool,
        surfaces: &[CarriedSurface],
        classes: &[SurfaceClass],
        witness: Option<CompressionWitness>,
    ) -> Self {
        let index: std::collections::HashMap<&TubingSelection, usize> =
            surfaces.iter().enumerate().map(|(i, s)| (&s.selection, i)).collect();
        let records = surfaces
            .iter()
            .zip(classes)
            .enumerate()
            .map(|(id, (s, c))| SurfaceRecord {
                id,
                cells: s.selection.cells.clone(),
                tubes: s.selection.tubes.clone(),
                euler: s.euler,
                orientable: s.orientable,
                genus: s.genus,
                punctures: s.punctures,
                orbit: c.orbit,
                normal_form_status: c.normal_form.status,
                normal_form: index.get(&c.normal_form.surface.selection).copied(),
            })
            .collect();
        SurfacesFile {
            n: complex.n,
            m: complex.m,
            annuli_only,
            orbit_count: classes.iter().map(|c| c.orbit + 1).max().unwrap_or(0),
            surfaces: records,
            witness,
        }
    }

    /// Re-evaluate every record against `complex` and compare invariants.
    pub fn check_against(&self, complex: &DrilledComplex) -> Result<()> {
        if (self.n, self.m) != (complex.n, complex.m) {
            return Err(Error::input(format!(
                "surfaces are for n = {}, m = {} but the complex has n = {}, m = {}",
                self.n, self.m, complex.n, complex.m
            )));
        }
        let carrier = Carrier::new(complex);
        for r in &self.surfaces {
            let s = carrier.evaluate(r.selection())?;
            if (s.euler, s.orientable, s.genus, s.punctures) != (r.euler, r.orientable, r.genus, r.punctures) {
                return Err(Error::input(format!("surface {} has stale invariants", r.id)));
            }
        }
        Ok(())
    }

    fn check_ids(&self) -> Result<()> {
        let k = self.surfaces.len();
        for (i, r) in self.surfaces.iter().enumerate() {
            if r.id != i {
                return Err(Error::input(format!("surface record {i} has id {}", r.id)));
            }
            if r.orbit >= self.orbit_count || r.normal_form.is_some_and(|x| x >= k) {
                return Err(Error::input(format!("surface {i} refers past the end of the list")));
            }
        }
        Ok(())
    }
}

pub fn surfaces_to_json(file: &SurfacesFile) -> String {
    to_json(file)
}

pub fn parse_surfaces_json(text: &str) -> Result<SurfacesFile> {
    let file: SurfacesFile = from_json(text)?;
    file.check_ids()?;
    Ok(file)
}
