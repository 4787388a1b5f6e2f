//! Path, drilling, triangulation and surfaces in one run, with every artifact
//! written to an output directory.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::carried::{
    canonical_torus, compression_witness, enumerate_carried_with, heegaard_lower_bound, Carrier, CompressionWitness,
    EnumerationConfig, NormalFormStatus, DEFAULT_ORBIT_CAP,
};
use crate::drilling::{build_drilled_complex_with_twist, CellId, Fraction, OrderedLabel};
use crate::error::{Error, Result};
use crate::fan::{build_fan_path, FanPathSpec};
use crate::io::{complex_to_json, path_to_json, surfaces_to_json, to_json, triangulation_to_json, SurfacesFile};
use crate::pants_graph::{validate_path, PathReport};
use crate::triangulation::{to_tri_text, triangulate, volume_bound, TriangulationReport, VolumeBound};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriFormat {
    Json,
    Tri,
}

impl TriFormat {
    pub fn extension(self) -> &'static str {
        match self {
            TriFormat::Json => "json",
            TriFormat::Tri => "tri",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineConfig {
    pub n: u32,
    pub rounds: u32,
    /// Largest carried surface, in cells, the enumeration may reach.
    pub cap: usize,
    pub out_dir: PathBuf,
    pub format: TriFormat,
    /// Filling slope `1/twist` recorded on every loop; `None` means `1/n`.
    pub twist: Option<u64>,
}

impl PipelineConfig {
    pub fn new(n: u32, out_dir: impl Into<PathBuf>) -> Self {
        PipelineConfig {
            n,
            rounds: n,
            cap: crate::carried::DEFAULT_SELECTION_CAP,
            out_dir: out_dir.into(),
            format: TriFormat::Tri,
            twist: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        FanPathSpec::new(self.n, self.rounds)?;
        if self.cap == 0 {
            return Err(Error::input("enumeration cap must be at least 1"));
        }
        if self.twist == Some(0) {
            return Err(Error::input("filling slope 1/0 is not a twist"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusCertificate {
    pub cells: Vec<CellId>,
    pub loops: Vec<OrderedLabel>,
    pub euler: i64,
    pub genus: u32,
    pub punctures: usize,
    /// Annuli-only enumeration found `T`.
    pub enumerated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSummary {
    pub annuli_only: usize,
    pub orbits: usize,
    pub undecided: usize,
    /// Every annuli-only surface has `T` as its normal form.
    pub unique_orbit: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub n: u32,
    pub rounds: u32,
    pub path: PathReport,
    /// Last stage reached: `path` unless the path closes with identity
    /// monodromy, `surfaces` otherwise.
    pub stage: String,
    pub filling: Fraction,
    pub m: usize,
    pub volume_bound: VolumeBound<f64>,
    pub heegaard_lower_bound: u32,
    pub triangulation: Option<TriangulationReport>,
    pub surfaces: Option<SurfaceSummary>,
    pub torus: Option<TorusCertificate>,
    pub witness: Option<CompressionWitness>,
    pub ok: bool,
}

fn write(dir: &Path, name: &str, text: &str) -> Result<()> {
    fs::write(dir.join(name), text).map_err(|e| Error::Io(format!("{}: {e}", dir.join(name).display())))
}

pub fn run_pipeline(config: &PipelineConfig) -> Result<PipelineReport> {
    config.validate()?;
    let n = config.n;
    let dir = config.out_dir.as_path();
    fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;

    let path = build_fan_path(FanPathSpec::new(n, config.rounds)?)?;
    write(dir, "path.json", &path_to_json(&path))?;
    let path_report = validate_path(&path);
    let twist = config.twist.unwrap_or(n as u64);
    let mut report = PipelineReport {
        n,
        rounds: config.rounds,
        path: path_report.clone(),
        stage: "path".into(),
        filling: Fraction::new(1, twist),
        m: path.len(),
        volume_bound: volume_bound(&path),
        heegaard_lower_bound: heegaard_lower_bound(n)?,
        triangulation: None,
        surfaces: None,
        torus: None,
        witness: None,
        ok: path_report.ok,
    };
    if !path_report.ok || !path_report.closes || path_report.monodromy != 0 {
        write(dir, "report.json", &to_json(&report))?;
        return Ok(report);
    }

    let complex = build_drilled_complex_with_twist(&path, twist)?;
    write(dir, "complex.json", &complex_to_json(&complex))?;

    let (tri, tri_report) = triangulate(&complex)?;
    let tri_text = match config.format {
        TriFormat::Json => triangulation_to_json(&tri),
        TriFormat::Tri => to_tri_text(&tri),
    };
    write(dir, &format!("triangulation.{}", config.format.extension()), &tri_text)?;

    let surfaces = enumerate_carried_with(
        &complex,
        EnumerationConfig {
            annuli_only: true,
            max_cells: config.cap,
        },
    )?;
    let classes = Carrier::new(&complex).classify(&surfaces, DEFAULT_ORBIT_CAP);
    let torus = canonical_torus(&complex)?;
    let witness = compression_witness(&complex)?;
    let file = SurfacesFile::new(&complex, true, &surfaces, &classes, Some(witness.clone()));
    write(dir, "surfaces.json", &surfaces_to_json(&file))?;

    let unique_orbit = classes
        .iter()
        .all(|c| c.normal_form.status == NormalFormStatus::Reduced && c.normal_form.surface == torus);
    report.stage = "surfaces".into();
    report.ok = tri_report.orientable && tri_report.all_links_tori() && witness.consecutive_in_torus;
    report.triangulation = Some(tri_report);
    report.surfaces = Some(SurfaceSummary {
        annuli_only: surfaces.len(),
        orbits: file.orbit_count,
        undecided: classes
            .iter()
            .filter(|c| c.normal_form.status == NormalFormStatus::Undecided)
            .count(),
        unique_orbit,
    });
    report.torus = Some(TorusCertificate {
        cells: torus.selection.cells.clone(),
        loops: torus
            .selection
            .threaded_loops()
            .iter()
            .map(|&l| complex.loops[l].label)
            .collect(),
        euler: torus.euler,
        genus: torus.genus,
        punctures: torus.punctures,
        enumerated: surfaces.contains(&torus),
    });
    report.witness = Some(witness);
    write(dir, "report.json", &to_json(&report))?;
    Ok(report)
}
