//! Drilling a closed pants path out of the mapping torus.
//!
//! Move `t` (for `t` in `0..m`) is the transition `P_t → P_{t+1}`, where
//! `P_m` means `ψ(P_0)`. The chord inserted by move `t` is drilled as the
//! loop `B_t` at level `t/m`. Between two
//! consecutive decompositions sits one A-region bounded by four pants cells:
//! the two destroyed by the move below and the two created above.
//!
//! When the monodromy is a nontrivial rotation the path is unrolled: time
//! `p` outside `0..m` carries the labels of `ψ^{⌊p/m⌋}(P_{p mod m})`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::check_no_universal_curve;
use crate::pants_graph::{validate_path, MoveKind, PantsPath};
use crate::surface::{
    classify_pants, wrap_gap, Chord, ChordSide, Edge, Gap, PantsDecomposition, PantsKind, Rotation, Triangle,
};

pub type LoopId = usize;
pub type CellId = usize;
pub type RegionId = usize;

/// A non-negative fraction kept unreduced, written `"num/den"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Self {
        Fraction { num, den }
    }

    pub fn to_ratio(&self) -> Ratio<u64> {
        Ratio::new(self.num, self.den)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl From<Fraction> for String {
    fn from(x: Fraction) -> String {
        x.to_string()
    }
}

impl TryFrom<String> for Fraction {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<Self, String> {
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| format!("expected num/den, got {s:?}"))?;
        let num = a.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: u64 = b.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if den == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Fraction { num, den })
    }
}

/// Created by move `start`, destroyed by move `start + len` (mod `m`);
/// present in the decompositions `P_{start+1}, ..., P_{start+len}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lifetime {
    pub start: usize,
    pub len: usize,
}

impl Lifetime {
    pub fn end(&self, m: usize) -> usize {
        (self.start + self.len) % m
    }

    /// Whether the object is present in `P_p` (indices mod `m`).
    pub fn alive_at(&self, p: usize, m: usize) -> bool {
        (p % m + 2 * m - self.start - 1) % m < self.len
    }

    /// Decomposition indices covered, in order, as unrolled times.
    pub fn times(&self) -> std::ops::RangeInclusive<usize> {
        self.start + 1..=self.start + self.len
    }

    /// How many times the interval passes the seam between `P_{m-1}` and `P_0`.
    pub fn seam_crossings(&self, m: usize) -> u32 {
        ((self.start + self.len) / m) as u32
    }
}

/// The `β_{center, far}` name of a drilled loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[Gap; 2]", from = "[Gap; 2]")]
pub struct OrderedLabel {
    pub center: Gap,
    pub far: Gap,
}

impl From<OrderedLabel> for [Gap; 2] {
    fn from(l: OrderedLabel) -> Self {
        [l.center, l.far]
    }
}

impl From<[Gap; 2]> for OrderedLabel {
    fn from(v: [Gap; 2]) -> Self {
        OrderedLabel {
            center: v[0],
            far: v[1],
        }
    }
}

impl OrderedLabel {
    /// `(center - far) mod n`.
    pub fn gap_difference(&self, n: u32) -> u32 {
        (self.center + n - self.far) % n
    }

    fn rotated(&self, rot: Rotation) -> Self {
        OrderedLabel {
            center: rot.gap(self.center),
            far: rot.gap(self.far),
        }
    }
}

impl fmt::Display for OrderedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{},{}", self.center, self.far)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrilledLoop {
    pub id: LoopId,
    /// Chord in the labels of `P_creation`.
    pub chord: Chord,
    pub creation: usize,
    pub level: Fraction,
    pub label: OrderedLabel,
    pub lifetime: Lifetime,
    /// Dehn filling slope attached as metadata; never applied.
    pub filling: Fraction,
}

/// Cusp of the drilled manifold: a strand (puncture × circle) or a drilled loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cusp {
    Strand(Gap),
    Loop(LoopId),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PantsCell {
    pub id: CellId,
    /// Triangle in the labels of `P_created`.
    pub triangle: Triangle,
    pub lifetime: Lifetime,
    pub kind: PantsKind,
    /// Per edge of `triangle.edges(n)`: the loop along that chord, if any.
    pub edge_loops: [Option<LoopId>; 3],
    /// Per edge: which side of the chord the triangle lies on.
    pub sides: [Option<ChordSide>; 3],
}

impl PantsCell {
    pub fn created(&self) -> RegionId {
        self.lifetime.start
    }

    pub fn destroyed(&self, m: usize) -> RegionId {
        self.lifetime.end(m)
    }

    /// Cusp at each edge, in `triangle.edges(n)` order and creation labels.
    pub fn edge_cusps(&self, n: u32) -> [Cusp; 3] {
        let edges = self.triangle.edges(n);
        std::array::from_fn(|i| match (edges[i], self.edge_loops[i]) {
            (_, Some(l)) => Cusp::Loop(l),
            (Edge::Side(k), None) => Cusp::Strand(k),
            (Edge::Chord(_), None) => unreachable!("chord edge without a loop"),
        })
    }

    pub fn loops(&self) -> impl Iterator<Item = LoopId> + '_ {
        self.edge_loops.iter().flatten().copied()
    }

    /// Index of the edge carried by loop `l`.
    pub fn edge_on_loop(&self, l: LoopId) -> Option<usize> {
        self.edge_loops.iter().position(|&x| x == Some(l))
    }

    pub fn punctures(&self) -> usize {
        self.kind.punctures()
    }
}

/// The piece of the drilled mapping torus between `P_t` and `P_{t+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ARegion {
    pub id: RegionId,
    /// `(w, x, y, z)`: `old_diagonal` separates `{w,x}` from `{y,z}`,
    /// `new_diagonal` separates `{x,y}` from `{z,w}`.
    pub quad: [Edge; 4],
    pub old_diagonal: Chord,
    pub new_diagonal: Chord,
    pub south: LoopId,
    pub north: LoopId,
    pub equator: [Cusp; 4],
    /// `(old, w, x)` and `(old, y, z)`.
    pub lower_cells: [CellId; 2],
    /// `(new, x, y)` and `(new, z, w)`.
    pub upper_cells: [CellId; 2],
}

impl ARegion {
    /// The four boundary cells in the order `[U1, U2, L1, L2]`.
    pub fn boundary_cells(&self) -> [CellId; 4] {
        [
            self.upper_cells[0],
            self.upper_cells[1],
            self.lower_cells[0],
            self.lower_cells[1],
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrilledComplex {
    pub n: u32,
    pub m: usize,
    pub monodromy: u32,
    pub loops: Vec<DrilledLoop>,
    pub cells: Vec<PantsCell>,
    pub regions: Vec<ARegion>,
}

struct Unrolled<'a> {
    m: usize,
    psi: Rotation,
    decomps: Vec<&'a PantsDecomposition>,
    chord_sets: Vec<HashSet<Chord>>,
    tri_sets: Vec<HashSet<Triangle>>,
}

impl<'a> Unrolled<'a> {
    fn new(path: &'a PantsPath) -> Self {
        let m = path.len();
        let decomps: Vec<_> = path.decompositions().into_iter().take(m).collect();
        let chord_sets = decomps.iter().map(|d| d.chords().iter().copied().collect()).collect();
        let tri_sets = decomps
            .iter()
            .map(|d| d.triangles_unchecked().into_iter().collect())
            .collect();
        Unrolled {
            m,
            psi: path.monodromy_rotation(),
            decomps,
            chord_sets,
            tri_sets,
        }
    }

    /// `(p mod m, ψ^{-⌊p/m⌋})`: canonical index and the relabelling into it.
    fn canon(&self, p: i64) -> (usize, Rotation) {
        let m = self.m as i64;
        (p.rem_euclid(m) as usize, self.psi.pow(-p.div_euclid(m)))
    }

    fn decomposition(&self, p: i64) -> PantsDecomposition {
        let (r, back) = self.canon(p);
        self.decomps[r].rotated(back.inverse())
    }

    fn has_chord(&self, p: i64, c: Chord) -> bool {
        let (r, back) = self.canon(p);
        self.chord_sets[r].contains(&c.rotated(back))
    }

    fn has_triangle(&self, p: i64, t: Triangle) -> bool {
        let (r, back) = self.canon(p);
        self.tri_sets[r].contains(&t.rotated(back))
    }
}

/// Drill every inserted chord of a closed path and record the pants cells
/// and A-regions between consecutive decompositions. Loops carry the
/// default filling slope `1/n`.
pub fn build_drilled_complex(path: &PantsPath) -> Result<DrilledComplex> {
    build_drilled_complex_with_twist(path, path.n as u64)
}

pub fn build_drilled_complex_with_twist(path: &PantsPath, twist: u64) -> Result<DrilledComplex> {
    if twist == 0 {
        return Err(Error::input("filling slope 1/0 is not a twist"));
    }
    let n = path.n;
    let m = path.len();
    if m == 0 {
        return Err(Error::construction("empty path has nothing to drill"));
    }
    let report = validate_path(path);
    if !report.closes {
        return Err(Error::construction("path is open: P_m differs from ψ(P_0)"));
    }
    if report.s_moves > 0 {
        return Err(Error::construction(
            "S-move annotation in a genus-0 path has no chordal realization",
        ));
    }
    if !report.ok {
        let first = &report.diagnostics[0];
        return Err(Error::construction(format!(
            "path does not validate at step {}: {}",
            first.step, first.message
        )));
    }
    if !check_no_universal_curve(path) {
        return Err(Error::construction(
            "some chord lies in every decomposition of the path",
        ));
    }
    if path.steps.iter().any(|s| s.record.kind == MoveKind::S) {
        return Err(Error::construction("S-move in a genus-0 path"));
    }

    let un = Unrolled::new(path);
    let mi = m as i64;

    // flip data per move, in the labels of P_t
    struct Flip {
        prev: PantsDecomposition,
        next: PantsDecomposition,
        old: Chord,
        new: Chord,
    }
    let flips: Vec<Flip> = (0..mi)
        .map(|t| {
            let prev = un.decomposition(t);
            let next = un.decomposition(t + 1);
            let old = prev.chords().iter().copied().find(|c| !next.contains(*c));
            let new = next.chords().iter().copied().find(|c| !prev.contains(*c));
            match (old, new) {
                (Some(old), Some(new)) => Ok(Flip { prev, next, old, new }),
                _ => Err(Error::construction(format!("move {t} changes no chord"))),
            }
        })
        .collect::<Result<_>>()?;

    // loops: one per move
    let mut loop_at: HashMap<(usize, Chord), LoopId> = HashMap::new();
    let mut loops = Vec::with_capacity(m);
    for (t, flip) in flips.iter().enumerate() {
        let c = flip.new;
        let ti = t as i64;
        let d = (ti + 2..=ti + mi + 1)
            .find(|&p| !un.has_chord(p, c))
            .ok_or_else(|| Error::construction(format!("loop drilled along {c} at move {t} is never removed")))?;
        let lifetime = Lifetime {
            start: t,
            len: (d - 1 - ti) as usize,
        };
        for p in ti + 1..d {
            let (r, back) = un.canon(p);
            if loop_at.insert((r, c.rotated(back)), t).is_some() {
                return Err(Error::construction(format!("chord {c} carries two loops at time {r}")));
            }
        }
        loops.push(DrilledLoop {
            id: t,
            chord: c,
            creation: t,
            level: Fraction::new(t as u64, m as u64),
            label: OrderedLabel {
                center: c.a(),
                far: c.b(),
            },
            lifetime,
            filling: Fraction::new(1, twist),
        });
    }
    for (r, d) in un.decomps.iter().enumerate() {
        for &c in d.chords() {
            if !loop_at.contains_key(&(r, c)) {
                return Err(Error::construction(format!("chord {c} of P_{r} has no loop")));
            }
        }
    }
    let loop_lookup = |p: i64, c: Chord| -> Result<LoopId> {
        let (r, back) = un.canon(p);
        loop_at
            .get(&(r, c.rotated(back)))
            .copied()
            .ok_or_else(|| Error::construction(format!("no loop along {c} at time {p}")))
    };

    // ordered labels: loops alive at P_0 are named (min, max); every other
    // name is the removed loop's name with both endpoints advanced to the
    // next quad vertex. A second sweep closes the cycle.
    for sweep in 0..2 {
        for (t, flip) in flips.iter().enumerate() {
            if sweep == 0 && loops[t].lifetime.alive_at(0, m) {
                continue;
            }
            let ti = t as i64;
            let south = loop_lookup(ti, flip.old)?;
            let sl = &loops[south];
            let crossings = sl.lifetime.seam_crossings(m) as i64;
            let old_label = sl.label.rotated(un.psi.pow(-crossings));
            let mut quad: Vec<Gap> = flip.old.endpoints().into_iter().chain(flip.new.endpoints()).collect();
            quad.sort_unstable();
            let succ = |g: Gap| -> Gap {
                let i = quad.iter().position(|&q| q == g).expect("label endpoint on quad");
                quad[(i + 1) % 4]
            };
            loops[t].label = OrderedLabel {
                center: succ(old_label.center),
                far: succ(old_label.far),
            };
        }
    }

    // cells: two per move
    let mut cell_at: HashMap<(usize, Triangle), CellId> = HashMap::new();
    let mut cells: Vec<PantsCell> = Vec::with_capacity(2 * m);
    let mut regions = Vec::with_capacity(m);
    for (t, flip) in flips.iter().enumerate() {
        let ti = t as i64;
        let (_, quad) = crate::pants_graph::apply_a_move(&flip.prev, flip.old)
            .map(|(_, rec)| ((), rec.quad.expect("A-move quad")))?;
        let [w, x, y, z] = quad;
        let on = |d: &PantsDecomposition, diag: Chord, e: Edge| -> Result<Triangle> {
            d.triangles_on(diag)
                .into_iter()
                .find(|tri| tri.has_edge(e, n))
                .ok_or_else(|| Error::construction(format!("no pants on {diag} and {e} at move {t}")))
        };
        let uppers = [on(&flip.next, flip.new, x)?, on(&flip.next, flip.new, z)?];
        let lowers = [on(&flip.prev, flip.old, w)?, on(&flip.prev, flip.old, y)?];
        debug_assert!(uppers[0].has_edge(y, n) && uppers[1].has_edge(w, n));
        debug_assert!(lowers[0].has_edge(x, n) && lowers[1].has_edge(z, n));

        let mut upper_ids = [0; 2];
        for (slot, tri) in uppers.into_iter().enumerate() {
            let id = cells.len();
            let d = (ti + 2..=ti + mi + 1)
                .find(|&p| !un.has_triangle(p, tri))
                .ok_or_else(|| Error::construction(format!("pants {tri} created at move {t} is never destroyed")))?;
            for p in ti + 1..d {
                let (r, back) = un.canon(p);
                if cell_at.insert((r, tri.rotated(back)), id).is_some() {
                    return Err(Error::construction(format!("pants {tri} doubly covered at time {r}")));
                }
            }
            let lifetime = Lifetime {
                start: t,
                len: (d - 1 - ti) as usize,
            };
            let edges = tri.edges(n);
            let mut edge_loops = [None; 3];
            let mut sides = [None; 3];
            for (i, e) in edges.iter().enumerate() {
                if let Edge::Chord(c) = e {
                    let l = loop_lookup(ti + 1, *c)?;
                    for p in lifetime.times() {
                        if loop_lookup(p as i64, *c)? != l {
                            return Err(Error::construction(format!("pants {tri} outlives the loop along {c}")));
                        }
                    }
                    edge_loops[i] = Some(l);
                    sides[i] = ChordSide::of(&tri, *c, n);
                }
            }
            cells.push(PantsCell {
                id,
                triangle: tri,
                lifetime,
                kind: classify_pants(&tri, n),
                edge_loops,
                sides,
            });
            upper_ids[slot] = id;
        }
        regions.push((t, quad, flip.old, flip.new, upper_ids, lowers));
    }
    for (r, tris) in un.tri_sets.iter().enumerate() {
        for tri in tris {
            if !cell_at.contains_key(&(r, *tri)) {
                return Err(Error::construction(format!("pants {tri} of P_{r} has no cell")));
            }
        }
    }

    let regions = regions
        .into_iter()
        .map(|(t, quad, old, new, upper_cells, lowers)| {
            let ti = t as i64;
            let lower = |tri: Triangle| -> Result<CellId> {
                let (r, back) = un.canon(ti);
                cell_at
                    .get(&(r, tri.rotated(back)))
                    .copied()
                    .ok_or_else(|| Error::construction(format!("no cell for {tri} below move {t}")))
            };
            let lower_cells = [lower(lowers[0])?, lower(lowers[1])?];
            for &c in &lower_cells {
                if cells[c].destroyed(m) != t {
                    return Err(Error::construction(format!(
                        "cell {c} is below move {t} but is destroyed at move {}",
                        cells[c].destroyed(m)
                    )));
                }
            }
            let equator = quad
                .iter()
                .map(|e| match e {
                    Edge::Side(k) => Ok(Cusp::Strand(*k)),
                    Edge::Chord(c) => loop_lookup(ti, *c).map(Cusp::Loop),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ARegion {
                id: t,
                quad,
                old_diagonal: old,
                new_diagonal: new,
                south: loop_lookup(ti, old)?,
                north: t,
                equator: equator.try_into().expect("four equator cusps"),
                lower_cells,
                upper_cells,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let complex = DrilledComplex {
        n,
        m,
        monodromy: path.monodromy,
        loops,
        cells,
        regions,
    };
    complex.validate()?;
    Ok(complex)
}

impl DrilledComplex {
    pub fn psi(&self) -> Rotation {
        Rotation::new(self.n, self.monodromy as i64)
    }

    /// Structural invariants; used after construction and after loading.
    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.n, self.m);
        let bad = |msg: String| Err(Error::construction(msg));
        if self.loops.len() != m || self.regions.len() != m || self.cells.len() != 2 * m {
            return bad(format!(
                "expected {m} loops, {m} regions and {} cells, found {}, {}, {}",
                2 * m,
                self.loops.len(),
                self.regions.len(),
                self.cells.len()
            ));
        }
        let mut levels = HashSet::new();
        for (i, l) in self.loops.iter().enumerate() {
            if l.id != i || l.creation != i || l.lifetime.start != i {
                return bad(format!("loop {i} is out of canonical order"));
            }
            if l.lifetime.len == 0 || l.lifetime.len > m {
                return bad(format!("loop {i} has lifetime length {}", l.lifetime.len));
            }
            if l.level.den != m as u64 || !levels.insert(l.level.to_ratio()) {
                return bad(format!("loop {i} has a repeated or malformed level {}", l.level));
            }
            l.chord.check(n)?;
        }
        let mut incidences = vec![0usize; self.cells.len()];
        for (t, r) in self.regions.iter().enumerate() {
            if r.id != t || r.north != t {
                return bad(format!("region {t} is out of canonical order"));
            }
            if r.new_diagonal != self.loops[t].chord {
                return bad(format!("region {t} north pole disagrees with loop {t}"));
            }
            for &c in &r.upper_cells {
                if self.cells.get(c).map(|x| x.created()) != Some(t) {
                    return bad(format!("upper cell {c} of region {t} is not created there"));
                }
                incidences[c] += 1;
            }
            for &c in &r.lower_cells {
                if self.cells.get(c).map(|x| x.destroyed(m)) != Some(t) {
                    return bad(format!("lower cell {c} of region {t} is not destroyed there"));
                }
                incidences[c] += 1;
            }
            if r.south >= m {
                return bad(format!("region {t} has unknown south loop {}", r.south));
            }
        }
        if let Some(c) = incidences.iter().position(|&k| k != 2) {
            return bad(format!("cell {c} bounds {} regions instead of 2", incidences[c]));
        }
        for (i, c) in self.cells.iter().enumerate() {
            if c.id != i || c.lifetime.len == 0 || c.lifetime.len > m {
                return bad(format!("cell {i} is malformed"));
            }
            if c.kind != classify_pants(&c.triangle, n) {
                return bad(format!("cell {i} has the wrong pants kind"));
            }
            for (e, l) in c.triangle.edges(n).iter().zip(c.edge_loops) {
                match (e, l) {
                    (Edge::Side(_), None) => {}
                    (Edge::Chord(_), Some(l)) if l < m => {
                        let lp = &self.loops[l].lifetime;
                        if !c.lifetime.times().all(|p| lp.alive_at(p, m)) {
                            return bad(format!("cell {i} outlives loop {l}"));
                        }
                    }
                    _ => return bad(format!("cell {i} has an inconsistent loop on edge {e}")),
                }
            }
        }
        Ok(())
    }

    pub fn loop_by_label(&self, center: Gap, far: Gap) -> Option<&DrilledLoop> {
        self.loops
            .iter()
            .find(|l| l.label.center == center && l.label.far == far)
    }

    /// Cells incident to loop `l`, split by side of the chord, each side in
    /// order of creation relative to the loop's creation.
    pub fn cells_on_loop(&self, l: LoopId) -> [Vec<CellId>; 2] {
        let lp = &self.loops[l];
        let m = self.m;
        let mut sides: [Vec<(usize, CellId)>; 2] = [Vec::new(), Vec::new()];
        for c in &self.cells {
            if let Some(i) = c.edge_on_loop(l) {
                let rel = (c.created() + m - lp.creation) % m;
                let s = match c.sides[i] {
                    Some(ChordSide::Inner) => 0,
                    _ => 1,
                };
                sides[s].push((rel, c.id));
            }
        }
        sides.map(|mut v| {
            v.sort_unstable();
            v.into_iter().map(|(_, id)| id).collect()
        })
    }

    /// Cyclic order of the cells around loop `l`: up one side, down the other.
    pub fn cusp_cycle(&self, l: LoopId) -> Vec<CellId> {
        let [inner, outer] = self.cells_on_loop(l);
        inner.into_iter().chain(outer.into_iter().rev()).collect()
    }
}

/// Loops drilled along `(a, b)`, ordered by level.
pub fn loops_by_chord(complex: &DrilledComplex, a: Gap, b: Gap) -> Result<Vec<&DrilledLoop>> {
    let c = Chord::new(a, b, complex.n)?;
    let mut out: Vec<&DrilledLoop> = complex.loops.iter().filter(|l| l.chord == c).collect();
    out.sort_by_key(|l| l.level.to_ratio());
    Ok(out)
}

/// Loops whose chord cuts off two punctures, `a - b ≡ ±2 (mod n)`.
pub fn twice_punctured_loops(complex: &DrilledComplex) -> Vec<&DrilledLoop> {
    complex
        .loops
        .iter()
        .filter(|l| l.chord.cyclic_span(complex.n) == 2)
        .collect()
}

/// The ordered label as gaps reduced into `1..=n`.
pub fn label_of(center: i64, far: i64, n: u32) -> OrderedLabel {
    OrderedLabel {
        center: wrap_gap(center, n),
        far: wrap_gap(far, n),
    }
}
