//! Closed surfaces assembled from pants cells by tubing along drilled loops.
//!
//! Around a loop the incident cells sit in a cyclic order (its cusp cycle).
//! A tube joins two selected cells that are neighbours in that order among
//! the selected ones, so the tubes at one loop never cross, and it never
//! joins two cells carrying the same pants. Orientation follows the sides:
//! a tube between opposite sides of the chord keeps the upward normal, a
//! tube between cells on the same side reverses it.
//!
//! An A-region is a product of a four-punctured sphere with an interval. A
//! surface passes through it in horizontal sheets, each bounded by two of the
//! region's four boundary pants, so a surface meets any region in at most two
//! of them.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::drilling::{CellId, Cusp, DrilledComplex, LoopId, OrderedLabel, RegionId};
use crate::error::{Error, Result};
use crate::surface::{ChordSide, PantsKind};

pub const DEFAULT_SELECTION_CAP: usize = 64;
pub const DEFAULT_ORBIT_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tube {
    #[serde(rename = "loop")]
    pub loop_id: LoopId,
    /// Sorted.
    pub cells: [CellId; 2],
}

impl Tube {
    pub fn new(loop_id: LoopId, a: CellId, b: CellId) -> Self {
        Tube {
            loop_id,
            cells: [a.min(b), a.max(b)],
        }
    }

    pub fn other(&self, c: CellId) -> Option<CellId> {
        match self.cells {
            [a, b] if a == c => Some(b),
            [a, b] if b == c => Some(a),
            _ => None,
        }
    }
}

/// Selected cells and the tubes joining their boundary circles. Both lists
/// are kept sorted so equal selections compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TubingSelection {
    pub cells: Vec<CellId>,
    pub tubes: Vec<Tube>,
}

impl TubingSelection {
    pub fn new(mut cells: Vec<CellId>, mut tubes: Vec<Tube>) -> Self {
        cells.sort_unstable();
        cells.dedup();
        tubes.sort_unstable();
        TubingSelection { cells, tubes }
    }

    pub fn threaded_loops(&self) -> BTreeSet<LoopId> {
        self.tubes.iter().map(|t| t.loop_id).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarriedSurface {
    pub selection: TubingSelection,
    pub euler: i64,
    pub orientable: bool,
    /// Genus when orientable, number of crosscaps otherwise.
    pub genus: u32,
    pub punctures: usize,
}

impl CarriedSurface {
    pub fn cells(&self) -> &[CellId] {
        &self.selection.cells
    }

    pub fn tubes(&self) -> &[Tube] {
        &self.selection.tubes
    }
}

/// Cyclic order of cells around each loop, and the regions each cell bounds.
struct Incidence {
    cycles: Vec<Vec<CellId>>,
    position: Vec<HashMap<CellId, usize>>,
    regions_of: Vec<[RegionId; 2]>,
    region_cells: Vec<[CellId; 4]>,
}

impl Incidence {
    fn new(complex: &DrilledComplex) -> Self {
        let cycles: Vec<Vec<CellId>> = (0..complex.m).map(|l| complex.cusp_cycle(l)).collect();
        let position = cycles
            .iter()
            .map(|c| c.iter().enumerate().map(|(i, &x)| (x, i)).collect())
            .collect();
        let m = complex.m;
        Incidence {
            cycles,
            position,
            regions_of: complex.cells.iter().map(|c| [c.created(), c.destroyed(m)]).collect(),
            region_cells: complex.regions.iter().map(|r| r.boundary_cells()).collect(),
        }
    }

    /// Some region bounded by `c` has more than two of its cells selected.
    fn overfills_region(&self, c: CellId, selected: impl Fn(CellId) -> bool) -> bool {
        self.regions_of[c]
            .iter()
            .any(|&r| self.region_cells[r].iter().filter(|&&x| selected(x)).count() > 2)
    }

    /// Some arc of the cycle between `a` and `b` holds no selected cell.
    fn tube_embeds(&self, l: LoopId, a: CellId, b: CellId, selected: impl Fn(CellId) -> bool) -> bool {
        let cyc = &self.cycles[l];
        let len = cyc.len();
        let (i, j) = (self.position[l][&a], self.position[l][&b]);
        let clear = |from: usize, to: usize| {
            let mut k = (from + 1) % len;
            while k != to {
                if selected(cyc[k]) {
                    return false;
                }
                k = (k + 1) % len;
            }
            true
        };
        clear(i, j) || clear(j, i)
    }
}

fn side_at(complex: &DrilledComplex, c: CellId, l: LoopId) -> Option<ChordSide> {
    let cell = &complex.cells[c];
    cell.edge_on_loop(l).and_then(|i| cell.sides[i])
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::input(msg)
}

/// Check a selection against the tubing rules and compute its invariants.
pub fn evaluate(complex: &DrilledComplex, selection: TubingSelection) -> Result<CarriedSurface> {
    let inc = Incidence::new(complex);
    evaluate_with(complex, &inc, selection)
}

fn evaluate_with(complex: &DrilledComplex, inc: &Incidence, selection: TubingSelection) -> Result<CarriedSurface> {
    if selection.cells.is_empty() {
        return Err(invalid("empty selection"));
    }
    let cells = &selection.cells;
    if let Some(&c) = cells.iter().find(|&&c| c >= complex.cells.len()) {
        return Err(invalid(format!("unknown cell {c}")));
    }
    let index = |c: CellId| cells.binary_search(&c).ok();
    let chosen = |c: CellId| index(c).is_some();
    let mut circles: Vec<(CellId, LoopId)> = cells
        .iter()
        .flat_map(|&c| complex.cells[c].loops().map(move |l| (c, l)))
        .collect();
    circles.sort_unstable();
    let mut used = vec![false; circles.len()];
    let mut adjacency: Vec<Vec<(usize, i32)>> = vec![Vec::new(); cells.len()];
    for t in &selection.tubes {
        let [a, b] = t.cells;
        if a == b {
            return Err(invalid(format!("tube at loop {} joins cell {a} to itself", t.loop_id)));
        }
        for c in [a, b] {
            if !chosen(c) {
                return Err(invalid(format!("tube at loop {} uses unselected cell {c}", t.loop_id)));
            }
            match circles.binary_search(&(c, t.loop_id)) {
                Ok(i) if !used[i] => used[i] = true,
                _ => return Err(invalid(format!("cell {c} has no free circle at loop {}", t.loop_id))),
            }
        }
        if complex.cells[a].triangle == complex.cells[b].triangle {
            return Err(invalid(format!("tube at loop {} joins parallel pants", t.loop_id)));
        }
        if !inc.tube_embeds(t.loop_id, a, b, chosen) {
            return Err(invalid(format!("tube at loop {} crosses another tube", t.loop_id)));
        }
        let flip = if side_at(complex, a, t.loop_id) == side_at(complex, b, t.loop_id) {
            -1
        } else {
            1
        };
        let (ia, ib) = (index(a).expect("selected"), index(b).expect("selected"));
        adjacency[ia].push((ib, flip));
        adjacency[ib].push((ia, flip));
    }
    if let Some(i) = used.iter().position(|&u| !u) {
        let (c, l) = circles[i];
        return Err(invalid(format!("circle of cell {c} at loop {l} is unmatched")));
    }
    if let Some(&c) = cells.iter().find(|&&c| inc.overfills_region(c, chosen)) {
        return Err(invalid(format!(
            "a region next to cell {c} meets the selection in more than two pants"
        )));
    }

    let mut sign = vec![0i32; cells.len()];
    sign[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    let mut orientable = true;
    let mut reached = 1;
    while let Some(i) = queue.pop_front() {
        for &(j, flip) in &adjacency[i] {
            match sign[j] {
                0 => {
                    sign[j] = sign[i] * flip;
                    reached += 1;
                    queue.push_back(j);
                }
                t if t != sign[i] * flip => orientable = false,
                _ => {}
            }
        }
    }
    if reached != cells.len() {
        return Err(invalid("selection is not connected"));
    }

    let euler = -(selection.cells.len() as i64);
    let punctures: usize = selection.cells.iter().map(|&c| complex.cells[c].punctures()).sum();
    let deficit = 2 - punctures as i64 - euler;
    let genus = if orientable {
        if deficit < 0 || deficit % 2 != 0 {
            return Err(invalid(format!(
                "inconsistent counts: euler {euler}, punctures {punctures}"
            )));
        }
        deficit / 2
    } else {
        deficit
    };
    Ok(CarriedSurface {
        selection,
        euler,
        orientable,
        genus: genus as u32,
        punctures,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationConfig {
    pub annuli_only: bool,
    /// Largest selection explored; reaching past it is an error.
    pub max_cells: usize,
}

impl EnumerationConfig {
    pub fn new(annuli_only: bool) -> Self {
        EnumerationConfig {
            annuli_only,
            max_cells: DEFAULT_SELECTION_CAP,
        }
    }
}

struct Search<'a> {
    complex: &'a DrilledComplex,
    inc: Incidence,
    allowed: Vec<bool>,
    cap: usize,
    seed: CellId,
    selected: Vec<bool>,
    count: usize,
    pending: BTreeSet<(CellId, LoopId)>,
    tubes: Vec<Tube>,
    out: Vec<CarriedSurface>,
}

impl Search<'_> {
    fn tubes_hold_at(&self, l: LoopId) -> bool {
        self.tubes
            .iter()
            .filter(|t| t.loop_id == l)
            .all(|t| self.inc.tube_embeds(l, t.cells[0], t.cells[1], |x| self.selected[x]))
    }

    fn add_cell(&mut self, c: CellId) -> Result<bool> {
        if self.count == self.cap {
            return Err(Error::CapExceeded {
                cap: self.cap,
                what: "carried-surface selection size".into(),
            });
        }
        self.selected[c] = true;
        self.count += 1;
        let loops: Vec<LoopId> = self.complex.cells[c].loops().collect();
        for &l in &loops {
            self.pending.insert((c, l));
        }
        Ok(!self.inc.overfills_region(c, |x| self.selected[x]) && loops.iter().all(|&l| self.tubes_hold_at(l)))
    }

    fn remove_cell(&mut self, c: CellId) {
        self.selected[c] = false;
        self.count -= 1;
        for l in self.complex.cells[c].loops() {
            self.pending.remove(&(c, l));
        }
    }

    fn run(&mut self) -> Result<()> {
        let Some(&(c, l)) = self.pending.iter().next() else {
            let cells = (0..self.selected.len()).filter(|&x| self.selected[x]).collect();
            let sel = TubingSelection::new(cells, self.tubes.clone());
            let surface = evaluate_with(self.complex, &self.inc, sel)?;
            self.out.push(surface);
            return Ok(());
        };
        let tri = self.complex.cells[c].triangle;
        let candidates: Vec<CellId> = self.inc.cycles[l]
            .iter()
            .copied()
            .filter(|&d| d != c && d >= self.seed && self.allowed[d])
            .filter(|&d| self.complex.cells[d].triangle != tri)
            .collect();
        self.pending.remove(&(c, l));
        for d in candidates {
            let fresh = !self.selected[d];
            if !fresh && !self.pending.contains(&(d, l)) {
                continue;
            }
            let mut ok = true;
            if fresh {
                ok = self.add_cell(d)?;
            }
            self.pending.remove(&(d, l));
            self.tubes.push(Tube::new(l, c, d));
            if ok && self.inc.tube_embeds(l, c, d, |x| self.selected[x]) {
                self.run()?;
            }
            self.tubes.pop();
            if fresh {
                self.remove_cell(d);
            } else {
                self.pending.insert((d, l));
            }
        }
        self.pending.insert((c, l));
        Ok(())
    }
}

/// Every connected surface with each cell used at most once, in order of
/// (smallest cell, selection).
pub fn enumerate_carried_with(complex: &DrilledComplex, config: EnumerationConfig) -> Result<Vec<CarriedSurface>> {
    let allowed: Vec<bool> = complex
        .cells
        .iter()
        .map(|c| !config.annuli_only || c.kind == PantsKind::OncePuncturedAnnulus)
        .collect();
    let mut search = Search {
        complex,
        inc: Incidence::new(complex),
        allowed: allowed.clone(),
        cap: config.max_cells.max(1),
        seed: 0,
        selected: vec![false; complex.cells.len()],
        count: 0,
        pending: BTreeSet::new(),
        tubes: Vec::new(),
        out: Vec::new(),
    };
    for seed in (0..complex.cells.len()).filter(|&c| allowed[c]) {
        search.seed = seed;
        search.add_cell(seed)?;
        search.run()?;
        search.remove_cell(seed);
    }
    let mut out = search.out;
    out.sort_by(|a, b| a.selection.cmp(&b.selection));
    out.dedup_by(|a, b| a.selection == b.selection);
    Ok(out)
}

pub fn enumerate_carried(complex: &DrilledComplex, annuli_only: bool) -> Result<Vec<CarriedSurface>> {
    enumerate_carried_with(complex, EnumerationConfig::new(annuli_only))
}

fn loop_by_label(complex: &DrilledComplex, center: i64, far: i64) -> Result<LoopId> {
    let l = crate::drilling::label_of(center, far, complex.n);
    complex
        .loop_by_label(l.center, l.far)
        .map(|x| x.id)
        .ok_or_else(|| invalid(format!("no loop labelled {l}; complex is not a two-fan path complex")))
}

/// The cell incident to both loops, unique by construction of `T`.
fn cell_between(complex: &DrilledComplex, a: LoopId, b: LoopId) -> Result<CellId> {
    let found: Vec<CellId> = complex
        .cells
        .iter()
        .filter(|c| c.edge_on_loop(a).is_some() && c.edge_on_loop(b).is_some())
        .map(|c| c.id)
        .collect();
    match found.as_slice() {
        [c] => Ok(*c),
        _ => Err(invalid(format!(
            "{} cells span loops {a} and {b}; expected exactly one",
            found.len()
        ))),
    }
}

/// The `2n` loops `B_{1,3}, B_{1,4}, B_{2,4}, B_{2,5}, ..., B_{n,3}` of `T`.
pub fn torus_loops(complex: &DrilledComplex) -> Result<Vec<LoopId>> {
    let n = complex.n as i64;
    let mut out = Vec::with_capacity(2 * n as usize);
    for i in 0..n {
        out.push(loop_by_label(complex, i + 1, i + 3)?);
        out.push(loop_by_label(complex, i + 1, i + 4)?);
    }
    Ok(out)
}

/// The punctured torus threading the annuli between consecutive loops of
/// the sequence `B_{1,3}, B_{1,4}, B_{2,4}, ..., B_{n,3}, B_{1,3}`.
pub fn canonical_torus(complex: &DrilledComplex) -> Result<CarriedSurface> {
    let loops = torus_loops(complex)?;
    let k = loops.len();
    let cells = (0..k)
        .map(|i| cell_between(complex, loops[i], loops[(i + 1) % k]))
        .collect::<Result<Vec<_>>>()?;
    let tubes = (0..k)
        .map(|i| Tube::new(loops[i], cells[(i + k - 1) % k], cells[i]))
        .collect();
    evaluate(complex, TubingSelection::new(cells, tubes))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SwapKind {
    /// `{U1, U2}` tubed at the north pole against `{L1, L2}` at the south.
    Pole,
    /// Upper and lower cell tubed at equator loop `from` against the pair at
    /// the opposite equator vertex `to` (quad positions `w, x, y, z = 0..4`).
    Equator { from: usize, to: usize },
}

/// Exchange of two tubed cell pairs bounding the same four-punctured sphere
/// on either side of an A-region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwapMove {
    pub region: RegionId,
    pub kind: SwapKind,
    pub before: [CellId; 2],
    pub before_loop: LoopId,
    pub after: [CellId; 2],
    pub after_loop: LoopId,
}

impl SwapMove {
    pub fn reversed(&self) -> Self {
        SwapMove {
            before: self.after,
            before_loop: self.after_loop,
            after: self.before,
            after_loop: self.before_loop,
            ..*self
        }
    }
}

/// Cells meeting equator vertex `i`: `(upper, lower)`.
fn equator_pair(region: &crate::drilling::ARegion, i: usize) -> [CellId; 2] {
    let [u1, u2] = region.upper_cells;
    let [l1, l2] = region.lower_cells;
    match i {
        0 => [u2, l1],
        1 => [u1, l1],
        2 => [u1, l2],
        _ => [u2, l2],
    }
}

/// All swaps of all regions whose four cells are punctured annuli, in both
/// directions.
pub fn swap_moves(complex: &DrilledComplex) -> Vec<SwapMove> {
    let mut out = Vec::new();
    for r in &complex.regions {
        let all_annuli = r
            .boundary_cells()
            .iter()
            .all(|&c| complex.cells[c].kind == PantsKind::OncePuncturedAnnulus);
        if !all_annuli {
            continue;
        }
        let pole = SwapMove {
            region: r.id,
            kind: SwapKind::Pole,
            before: r.upper_cells,
            before_loop: r.north,
            after: r.lower_cells,
            after_loop: r.south,
        };
        out.push(pole);
        out.push(pole.reversed());
        for from in 0..4 {
            let to = (from + 2) % 4;
            if let (Cusp::Loop(a), Cusp::Loop(b)) = (r.equator[from], r.equator[to]) {
                out.push(SwapMove {
                    region: r.id,
                    kind: SwapKind::Equator { from, to },
                    before: equator_pair(r, from),
                    before_loop: a,
                    after: equator_pair(r, to),
                    after_loop: b,
                });
            }
        }
    }
    out
}

/// Swaps that apply to `surface` in the direction they are stated.
pub fn applicable_swaps(complex: &DrilledComplex, surface: &CarriedSurface) -> Vec<SwapMove> {
    Carrier::new(complex).applicable_swaps(surface)
}

/// Replace whichever of the move's two tubed pairs the surface contains by
/// the other one, rerouting every other tube through the new cell that
/// meets the same loop.
pub fn apply_swap(complex: &DrilledComplex, surface: &CarriedSurface, mv: &SwapMove) -> Result<CarriedSurface> {
    Carrier::new(complex).apply_swap(surface, mv)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalFormStatus {
    /// Threads only loops with gap difference `n - 3` or `n - 2`.
    Reduced,
    /// No such representative in the orbit; least member returned.
    OrbitMinimum,
    /// Orbit search hit its cap.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalForm {
    pub status: NormalFormStatus,
    pub surface: CarriedSurface,
    pub orbit_size: usize,
}

fn is_reduced(complex: &DrilledComplex, s: &TubingSelection) -> bool {
    let n = complex.n;
    s.threaded_loops().iter().all(|&l| {
        let d = complex.loops[l].label.gap_difference(n);
        d == n - 2 || d == n - 3
    })
}

/// Orbit membership and normal form of one surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceClass {
    /// Orbits are numbered in order of their first member in the input.
    pub orbit: usize,
    pub normal_form: NormalForm,
}

/// A complex with its loop incidences and swap moves precomputed.
pub struct Carrier<'a> {
    complex: &'a DrilledComplex,
    inc: Incidence,
    moves: Vec<SwapMove>,
    /// Moves whose `before` or `after` pair is tubed as the key.
    by_tube: HashMap<Tube, Vec<usize>>,
}

impl<'a> Carrier<'a> {
    pub fn new(complex: &'a DrilledComplex) -> Self {
        let moves = swap_moves(complex);
        let mut by_tube: HashMap<Tube, Vec<usize>> = HashMap::new();
        for (i, mv) in moves.iter().enumerate() {
            by_tube
                .entry(Tube::new(mv.before_loop, mv.before[0], mv.before[1]))
                .or_default()
                .push(i);
            by_tube
                .entry(Tube::new(mv.after_loop, mv.after[0], mv.after[1]))
                .or_default()
                .push(i);
        }
        Carrier {
            complex,
            inc: Incidence::new(complex),
            moves,
            by_tube,
        }
    }

    /// Moves that could touch `surface`, each once, in move order.
    fn candidate_moves(&self, surface: &CarriedSurface) -> Vec<usize> {
        let mut out: Vec<usize> = surface
            .selection
            .tubes
            .iter()
            .filter_map(|t| self.by_tube.get(t))
            .flatten()
            .copied()
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn complex(&self) -> &'a DrilledComplex {
        self.complex
    }

    pub fn moves(&self) -> &[SwapMove] {
        &self.moves
    }

    pub fn evaluate(&self, selection: TubingSelection) -> Result<CarriedSurface> {
        evaluate_with(self.complex, &self.inc, selection)
    }

    pub fn applicable_swaps(&self, surface: &CarriedSurface) -> Vec<SwapMove> {
        let tubes = &surface.selection.tubes;
        self.candidate_moves(surface)
            .into_iter()
            .map(|i| self.moves[i])
            .filter(|mv| {
                tubes
                    .binary_search(&Tube::new(mv.before_loop, mv.before[0], mv.before[1]))
                    .is_ok()
            })
            .filter(|mv| self.apply_swap(surface, mv).is_ok())
            .collect()
    }

    pub fn apply_swap(&self, surface: &CarriedSurface, mv: &SwapMove) -> Result<CarriedSurface> {
        let complex = self.complex;
        let sel = &surface.selection;
        let has = |pair: [CellId; 2], l: LoopId| sel.tubes.binary_search(&Tube::new(l, pair[0], pair[1])).is_ok();
        let (from, from_loop, to, to_loop) = if has(mv.before, mv.before_loop) {
            (mv.before, mv.before_loop, mv.after, mv.after_loop)
        } else if has(mv.after, mv.after_loop) {
            (mv.after, mv.after_loop, mv.before, mv.before_loop)
        } else {
            return Err(Error::SwapInapplicable(format!(
                "surface has neither tubed pair of region {}",
                mv.region
            )));
        };
        let annulus = |c: CellId| complex.cells[c].kind == PantsKind::OncePuncturedAnnulus;
        if !from.iter().chain(&to).all(|&c| annulus(c)) {
            return Err(Error::SwapInapplicable("swap needs punctured annuli".into()));
        }
        if let Some(c) = to.iter().find(|c| sel.cells.contains(c)) {
            return Err(Error::SwapInapplicable(format!("cell {c} is already selected")));
        }
        let target_at = |l: LoopId| -> Result<CellId> {
            to.iter()
                .copied()
                .find(|&c| complex.cells[c].edge_on_loop(l).is_some())
                .ok_or_else(|| Error::SwapInapplicable(format!("no replacement circle at loop {l}")))
        };
        let removed = Tube::new(from_loop, from[0], from[1]);
        let mut tubes = Vec::with_capacity(sel.tubes.len());
        for t in sel.tubes.iter().filter(|&&t| t != removed) {
            let mut cells = t.cells;
            for x in &mut cells {
                if from.contains(x) {
                    *x = target_at(t.loop_id)?;
                }
            }
            tubes.push(Tube::new(t.loop_id, cells[0], cells[1]));
        }
        tubes.push(Tube::new(to_loop, to[0], to[1]));
        let cells = sel
            .cells
            .iter()
            .copied()
            .filter(|c| !from.contains(c))
            .chain(to)
            .collect();
        self.evaluate(TubingSelection::new(cells, tubes))
            .map_err(|e| Error::SwapInapplicable(e.to_string()))
    }

    /// The swap orbit of `surface`, sorted by selection, or `None` past `cap`
    /// members.
    pub fn orbit(&self, surface: &CarriedSurface, cap: usize) -> Option<Vec<CarriedSurface>> {
        let mut seen: HashSet<TubingSelection> = HashSet::from([surface.selection.clone()]);
        let mut orbit = vec![surface.clone()];
        let mut next = 0;
        while next < orbit.len() {
            let cur = orbit[next].clone();
            next += 1;
            for i in self.candidate_moves(&cur) {
                if let Ok(s) = self.apply_swap(&cur, &self.moves[i]) {
                    if seen.insert(s.selection.clone()) {
                        if orbit.len() == cap {
                            return None;
                        }
                        orbit.push(s);
                    }
                }
            }
        }
        orbit.sort_by(|a, b| a.selection.cmp(&b.selection));
        Some(orbit)
    }

    fn form_of_orbit(&self, orbit: &[CarriedSurface]) -> NormalForm {
        let orbit_size = orbit.len();
        match orbit.iter().find(|s| is_reduced(self.complex, &s.selection)) {
            Some(s) => NormalForm {
                status: NormalFormStatus::Reduced,
                surface: s.clone(),
                orbit_size,
            },
            None => NormalForm {
                status: NormalFormStatus::OrbitMinimum,
                surface: orbit[0].clone(),
                orbit_size,
            },
        }
    }

    fn undecided(surface: &CarriedSurface, cap: usize) -> NormalForm {
        NormalForm {
            status: NormalFormStatus::Undecided,
            surface: surface.clone(),
            orbit_size: cap,
        }
    }

    pub fn normal_form(&self, surface: &CarriedSurface, cap: usize) -> NormalForm {
        match self.orbit(surface, cap) {
            Some(orbit) => self.form_of_orbit(&orbit),
            None => Self::undecided(surface, cap),
        }
    }

    /// Orbit and normal form of every surface, searching each orbit once.
    pub fn classify(&self, surfaces: &[CarriedSurface], cap: usize) -> Vec<SurfaceClass> {
        let mut known: HashMap<TubingSelection, usize> = HashMap::new();
        let mut forms: Vec<NormalForm> = Vec::new();
        let mut out = Vec::with_capacity(surfaces.len());
        for s in surfaces {
            let orbit = match known.get(&s.selection) {
                Some(&o) => o,
                None => {
                    let id = forms.len();
                    match self.orbit(s, cap) {
                        Some(members) => {
                            forms.push(self.form_of_orbit(&members));
                            for m in members {
                                known.insert(m.selection, id);
                            }
                        }
                        None => {
                            forms.push(Self::undecided(s, cap));
                            known.insert(s.selection.clone(), id);
                        }
                    }
                    id
                }
            };
            out.push(SurfaceClass {
                orbit,
                normal_form: forms[orbit].clone(),
            });
        }
        out
    }
}

/// The swap orbit of `surface`, sorted by selection, or `None` past `cap`
/// members.
pub fn swap_orbit(complex: &DrilledComplex, surface: &CarriedSurface, cap: usize) -> Option<Vec<CarriedSurface>> {
    Carrier::new(complex).orbit(surface, cap)
}

pub fn normal_form(complex: &DrilledComplex, surface: &CarriedSurface) -> NormalForm {
    normal_form_capped(complex, surface, DEFAULT_ORBIT_CAP)
}

pub fn normal_form_capped(complex: &DrilledComplex, surface: &CarriedSurface, cap: usize) -> NormalForm {
    Carrier::new(complex).normal_form(surface, cap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessLoop {
    pub id: LoopId,
    pub label: OrderedLabel,
}

/// The twice-punctured annulus over `B_{1,3}, B_{1,4}, B_{2,4}` and the two
/// annuli of `T` it compresses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompressionWitness {
    pub loops: [WitnessLoop; 3],
    pub annuli: [CellId; 2],
    /// The annuli are joined in `T` by the tube at the middle loop.
    pub consecutive_in_torus: bool,
}

pub fn compression_witness(complex: &DrilledComplex) -> Result<CompressionWitness> {
    let ids = [
        loop_by_label(complex, 1, 3)?,
        loop_by_label(complex, 1, 4)?,
        loop_by_label(complex, 2, 4)?,
    ];
    let annuli = [
        cell_between(complex, ids[0], ids[1])?,
        cell_between(complex, ids[1], ids[2])?,
    ];
    let torus = canonical_torus(complex)?;
    let consecutive_in_torus = torus.tubes().contains(&Tube::new(ids[1], annuli[0], annuli[1]));
    Ok(CompressionWitness {
        loops: ids.map(|id| WitnessLoop {
            id,
            label: complex.loops[id].label,
        }),
        annuli,
        consecutive_in_torus,
    })
}

/// `⌈n/2⌉`.
pub fn heegaard_lower_bound(n: u32) -> Result<u32> {
    if n == 0 {
        return Err(Error::input("a link complement has at least one boundary component"));
    }
    Ok(n.div_ceil(2))
}
