//! The pants graph of the n-punctured sphere restricted to chordal
//! decompositions: vertices are polygon triangulations, edges are diagonal
//! flips (A-moves).

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::{Chord, Edge, Gap, PantsDecomposition, Rotation};

/// Default largest `n` for exhaustive enumeration (Catalan(10) = 16796 vertices).
pub const DEFAULT_ENUMERATION_BOUND: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    /// Associativity move: flip inside a four-holed sphere.
    A,
    /// Simple move inside a one-holed torus. Never realized by chords; kept as
    /// an annotation so move counts and the volume bound stay total.
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub removed: Chord,
    pub inserted: Chord,
    /// Boundary `(w, x, y, z)` of the four-holed sphere, cyclically ordered so
    /// that `removed` separates `{w, x}` from `{y, z}` and `inserted`
    /// separates `{x, y}` from `{z, w}`. `None` for S annotations and for
    /// records that are not legal flips.
    pub quad: Option<[Edge; 4]>,
}

/// Flip geometry of `removed` inside `p`: the opposite diagonal and the quad.
fn flip_quad(p: &PantsDecomposition, removed: Chord) -> Option<(Chord, [Edge; 4])> {
    if !p.contains(removed) {
        return None;
    }
    let n = p.n();
    let tris = p.triangles_on(removed);
    if tris.len() != 2 {
        return None;
    }
    let mut verts: Vec<Gap> = tris.iter().flat_map(|t| t.vertices()).collect();
    verts.sort_unstable();
    verts.dedup();
    let [p0, p1, p2, p3]: [Gap; 4] = verts.try_into().ok()?;
    let e = [
        Edge::between(p0, p1, n),
        Edge::between(p1, p2, n),
        Edge::between(p2, p3, n),
        Edge::between(p3, p0, n),
    ];
    let (a, b) = (removed.a(), removed.b());
    if (a, b) == (p0, p2) {
        Some((Chord::new(p1, p3, n).ok()?, [e[0], e[1], e[2], e[3]]))
    } else if (a, b) == (p1, p3) {
        Some((Chord::new(p0, p2, n).ok()?, [e[1], e[2], e[3], e[0]]))
    } else {
        None
    }
}

/// Replace `removed` by the opposite diagonal of the quadrilateral formed by
/// its two adjacent triangles.
pub fn apply_a_move(p: &PantsDecomposition, removed: Chord) -> Result<(PantsDecomposition, MoveRecord)> {
    if !p.is_valid() {
        return Err(Error::input(format!("{p} is not a pants decomposition")));
    }
    if !p.contains(removed) {
        return Err(Error::input(format!("chord {removed} is not in {p}")));
    }
    let (inserted, quad) = flip_quad(p, removed)
        .ok_or_else(|| Error::input(format!("chord {removed} does not bound two pants in {p}")))?;
    let next = p.replaced(removed, inserted);
    Ok((
        next,
        MoveRecord {
            kind: MoveKind::A,
            removed,
            inserted,
            quad: Some(quad),
        },
    ))
}

/// One flip per chord, in chord order.
pub fn neighbors(p: &PantsDecomposition) -> Result<Vec<(PantsDecomposition, MoveRecord)>> {
    p.chords().iter().map(|&c| apply_a_move(p, c)).collect()
}

fn triangulations_of(verts: &[Gap], n: u32, out: &mut Vec<Vec<Chord>>) {
    if verts.len() < 3 {
        out.push(Vec::new());
        return;
    }
    let first = verts[0];
    let last = *verts.last().unwrap();
    for k in 1..verts.len() - 1 {
        let apex = verts[k];
        let mut left = Vec::new();
        triangulations_of(&verts[..=k], n, &mut left);
        let mut right = Vec::new();
        triangulations_of(&verts[k..], n, &mut right);
        let mut own = Vec::new();
        for (p, q) in [(first, apex), (apex, last)] {
            if let Edge::Chord(c) = Edge::between(p, q, n) {
                own.push(c);
            }
        }
        for l in &left {
            for r in &right {
                let mut cs = own.clone();
                cs.extend_from_slice(l);
                cs.extend_from_slice(r);
                out.push(cs);
            }
        }
    }
}

/// Every chordal pants decomposition of the n-punctured sphere, sorted.
pub fn enumerate_decompositions(n: u32) -> Result<Vec<PantsDecomposition>> {
    enumerate_decompositions_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_decompositions_bounded(n: u32, max_n: u32) -> Result<Vec<PantsDecomposition>> {
    if n < 4 || n > max_n {
        return Err(Error::input(format!("n = {n} outside enumeration range 4..={max_n}")));
    }
    let verts: Vec<Gap> = (1..=n).collect();
    let mut raw = Vec::new();
    triangulations_of(&verts, n, &mut raw);
    let mut out: Vec<PantsDecomposition> = raw
        .into_iter()
        .map(|mut cs| {
            cs.sort_unstable();
            PantsDecomposition::from_sorted_unchecked(n, cs)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The flip graph on all decompositions of a fixed `n`.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    pub vertices: Vec<PantsDecomposition>,
    pub adjacency: Vec<Vec<usize>>,
    index: HashMap<PantsDecomposition, usize>,
}

impl FlipGraph {
    pub fn new(n: u32) -> Result<Self> {
        let vertices = enumerate_decompositions(n)?;
        let index: HashMap<_, _> = vertices.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut adjacency = Vec::with_capacity(vertices.len());
        for p in &vertices {
            let mut adj: Vec<usize> = neighbors(p)?.into_iter().map(|(q, _)| index[&q]).collect();
            adj.sort_unstable();
            adjacency.push(adj);
        }
        Ok(FlipGraph {
            vertices,
            adjacency,
            index,
        })
    }

    pub fn index_of(&self, p: &PantsDecomposition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertices.len()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> usize {
        (0..self.vertices.len())
            .map(|i| self.distances_from(i).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }
}

/// Shortest flip sequence from `p` to `q`. Neighbours are expanded in
/// lexicographic order so the reported path is deterministic.
pub fn shortest_flip_path(p: &PantsDecomposition, q: &PantsDecomposition) -> Result<Vec<PantsDecomposition>> {
    if p.n() != q.n() {
        return Err(Error::input(format!(
            "decompositions of n = {} and n = {}",
            p.n(),
            q.n()
        )));
    }
    for d in [p, q] {
        if !d.is_valid() {
            return Err(Error::input(format!("{d} is not a pants decomposition")));
        }
    }
    let mut parent: HashMap<PantsDecomposition, Option<PantsDecomposition>> = HashMap::new();
    parent.insert(p.clone(), None);
    let mut queue = VecDeque::from([p.clone()]);
    while let Some(u) = queue.pop_front() {
        if &u == q {
            let mut path = vec![u.clone()];
            let mut cur = u;
            while let Some(Some(prev)) = parent.get(&cur) {
                path.push(prev.clone());
                cur = prev.clone();
            }
            path.reverse();
            return Ok(path);
        }
        let mut next: Vec<PantsDecomposition> = neighbors(&u)?.into_iter().map(|(v, _)| v).collect();
        next.sort();
        for v in next {
            if !parent.contains_key(&v) {
                parent.insert(v.clone(), Some(u.clone()));
                queue.push_back(v);
            }
        }
    }
    // the flip graph of a polygon is connected
    unreachable!("no flip path between {p} and {q}")
}

pub fn pants_distance(p: &PantsDecomposition, q: &PantsDecomposition) -> Result<usize> {
    Ok(shortest_flip_path(p, q)?.len() - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStep {
    /// Decomposition after the move.
    pub decomposition: PantsDecomposition,
    pub record: MoveRecord,
}

/// A sequence of moves `P_0 - P_1 - ... - P_m` together with the claimed
/// monodromy `ψ` (a rotation of gap labels) such that `P_m = ψ(P_0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PantsPath {
    pub n: u32,
    pub start: PantsDecomposition,
    pub steps: Vec<PathStep>,
    /// `ψ: i ↦ i + monodromy (mod n)`.
    pub monodromy: u32,
}

impl PantsPath {
    /// Replays `(kind, removed, inserted)` triples from `start`. No legality
    /// checks happen here; see [`validate_path`].
    pub fn from_moves(
        start: PantsDecomposition,
        moves: impl IntoIterator<Item = (MoveKind, Chord, Chord)>,
        monodromy: u32,
    ) -> Self {
        let n = start.n();
        let mut cur = start.clone();
        let mut steps = Vec::new();
        for (kind, removed, inserted) in moves {
            let (next, quad) = match kind {
                MoveKind::A => {
                    let quad = flip_quad(&cur, removed)
                        .filter(|(opp, _)| *opp == inserted)
                        .map(|(_, q)| q);
                    (cur.replaced(removed, inserted), quad)
                }
                MoveKind::S => (cur.clone(), None),
            };
            steps.push(PathStep {
                decomposition: next.clone(),
                record: MoveRecord {
                    kind,
                    removed,
                    inserted,
                    quad,
                },
            });
            cur = next;
        }
        PantsPath {
            n,
            start,
            steps,
            monodromy: monodromy % n,
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn monodromy_rotation(&self) -> Rotation {
        Rotation::new(self.n, self.monodromy as i64)
    }

    /// `P_0, P_1, ..., P_m`.
    pub fn decompositions(&self) -> Vec<&PantsDecomposition> {
        std::iter::once(&self.start)
            .chain(self.steps.iter().map(|s| &s.decomposition))
            .collect()
    }

    pub fn last(&self) -> &PantsDecomposition {
        self.steps.last().map(|s| &s.decomposition).unwrap_or(&self.start)
    }

    pub fn moves(&self) -> impl Iterator<Item = (MoveKind, Chord, Chord)> + '_ {
        self.steps
            .iter()
            .map(|s| (s.record.kind, s.record.removed, s.record.inserted))
    }

    /// Relabel every decomposition and move by `rot`.
    pub fn rotated(&self, rot: Rotation) -> PantsPath {
        PantsPath::from_moves(
            self.start.rotated(rot),
            self.moves().map(|(k, r, i)| (k, r.rotated(rot), i.rotated(rot))),
            self.monodromy,
        )
    }

    /// Follow `self` by `other`; `other` must start where `self` ends. The
    /// monodromies compose because rotations commute.
    pub fn concat(&self, other: &PantsPath) -> Result<PantsPath> {
        if self.n != other.n {
            return Err(Error::input("cannot concatenate paths with different n"));
        }
        if self.last() != &other.start {
            return Err(Error::input(format!(
                "second path starts at {} but first ends at {}",
                other.start,
                self.last()
            )));
        }
        Ok(PantsPath::from_moves(
            self.start.clone(),
            self.moves().chain(other.moves()),
            (self.monodromy + other.monodromy) % self.n,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDiagnostic {
    /// Index of the offending step (its move produces `P_{step+1}`).
    pub step: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathReport {
    pub ok: bool,
    pub length: usize,
    pub a_moves: usize,
    pub s_moves: usize,
    pub monodromy: u32,
    pub closes: bool,
    pub diagnostics: Vec<StepDiagnostic>,
}

/// Check every step is a single legal move and that `P_m = ψ(P_0)`.
pub fn validate_path(path: &PantsPath) -> PathReport {
    let mut diagnostics = Vec::new();
    let mut diag = |step: usize, message: String| diagnostics.push(StepDiagnostic { step, message });
    let n = path.n;
    if path.start.n() != n || !path.start.is_valid() {
        diag(
            0,
            format!("start {} is not a pants decomposition of n = {n}", path.start),
        );
    }
    let (mut a_moves, mut s_moves) = (0, 0);
    let mut prev = &path.start;
    for (i, step) in path.steps.iter().enumerate() {
        let rec = &step.record;
        if step.decomposition.n() != n {
            diag(i, format!("decomposition has n = {}", step.decomposition.n()));
        }
        match rec.kind {
            MoveKind::A => {
                a_moves += 1;
                if step.decomposition == *prev {
                    diag(i, "decomposition repeats the previous one; not a move".into());
                } else if !prev.contains(rec.removed) {
                    diag(i, format!("removed chord {} is not in {prev}", rec.removed));
                } else if !prev.is_valid() {
                    diag(i, format!("cannot flip out of invalid {prev}"));
                } else {
                    let (expected, flip) = apply_a_move(prev, rec.removed).expect("valid flip");
                    if flip.inserted != rec.inserted {
                        diag(
                            i,
                            format!(
                                "removing {} forces {}, but {} was inserted",
                                rec.removed, flip.inserted, rec.inserted
                            ),
                        );
                    } else if expected != step.decomposition {
                        diag(
                            i,
                            format!("decomposition {} is not the flip result {expected}", step.decomposition),
                        );
                    }
                }
            }
            MoveKind::S => {
                s_moves += 1;
                if step.decomposition != *prev {
                    diag(i, "S annotation must leave the chord system unchanged".into());
                }
            }
        }
        prev = &step.decomposition;
    }
    let closes = path.last() == &path.start.rotated(path.monodromy_rotation());
    if !closes {
        diag(
            path.steps.len(),
            format!(
                "final decomposition {} differs from ψ(P_0) = {}",
                path.last(),
                path.start.rotated(path.monodromy_rotation())
            ),
        );
    }
    PathReport {
        ok: diagnostics.is_empty(),
        length: path.steps.len(),
        a_moves,
        s_moves,
        monodromy: path.monodromy,
        closes,
        diagnostics,
    }
}

/// Chords present in every decomposition of the path.
pub fn universal_chords(path: &PantsPath) -> Vec<Chord> {
    let mut common: HashSet<Chord> = path.start.chords().iter().copied().collect();
    for d in path.decompositions() {
        let here: HashSet<Chord> = d.chords().iter().copied().collect();
        common.retain(|c| here.contains(c));
    }
    let mut out: Vec<Chord> = common.into_iter().collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(n: u32, pairs: &[(Gap, Gap)]) -> PantsDecomposition {
        PantsDecomposition::from_pairs(n, pairs).unwrap()
    }

    fn ch(a: Gap, b: Gap, n: u32) -> Chord {
        Chord::new(a, b, n).unwrap()
    }

    #[test]
    fn flip_examples() {
        let p0 = dec(5, &[(1, 3), (1, 4)]);
        let (p1, rec) = apply_a_move(&p0, ch(1, 3, 5)).unwrap();
        assert_eq!(p1, dec(5, &[(2, 4), (1, 4)]));
        assert_eq!(rec.inserted, ch(2, 4, 5));
        assert_eq!(
            rec.quad,
            Some([Edge::Side(1), Edge::Side(2), Edge::Side(3), Edge::Chord(ch(1, 4, 5))])
        );
        let (back, _) = apply_a_move(&p1, ch(2, 4, 5)).unwrap();
        assert_eq!(back, p0);

        let hex = dec(6, &[(1, 3), (1, 4), (1, 5)]);
        let (q, _) = apply_a_move(&hex, ch(1, 4, 6)).unwrap();
        assert_eq!(q, dec(6, &[(1, 3), (3, 5), (1, 5)]));
    }

    #[test]
    fn flip_rejects_missing_chord() {
        let p0 = dec(5, &[(1, 3), (1, 4)]);
        assert!(matches!(apply_a_move(&p0, ch(2, 4, 5)), Err(Error::Input(_))));
    }

    #[test]
    fn neighbor_counts() {
        assert_eq!(neighbors(&dec(5, &[(1, 3), (1, 4)])).unwrap().len(), 2);
        assert_eq!(neighbors(&dec(4, &[(1, 3)])).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_decompositions(4).unwrap().len(), 2);
        assert_eq!(enumerate_decompositions(5).unwrap().len(), 5);
        assert_eq!(enumerate_decompositions(6).unwrap().len(), 14);
        assert!(enumerate_decompositions(3).is_err());
        assert!(enumerate_decompositions(13).is_err());
        assert_eq!(enumerate_decompositions_bounded(13, 13).unwrap().len(), 58786);
    }

    #[test]
    fn distances_on_pentagon() {
        let p0 = dec(5, &[(1, 3), (1, 4)]);
        assert_eq!(pants_distance(&p0, &p0).unwrap(), 0);
        assert_eq!(pants_distance(&p0, &dec(5, &[(2, 4), (2, 5)])).unwrap(), 2);
        assert_eq!(FlipGraph::new(5).unwrap().diameter(), 2);
        assert!(pants_distance(&p0, &dec(6, &[(1, 3), (1, 4), (1, 5)])).is_err());
    }

    #[test]
    fn shortest_path_is_deterministic() {
        let p = dec(6, &[(1, 3), (1, 4), (1, 5)]);
        let q = dec(6, &[(2, 4), (2, 5), (2, 6)]);
        let a = shortest_flip_path(&p, &q).unwrap();
        let b = shortest_flip_path(&p, &q).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.first(), Some(&p));
        assert_eq!(a.last(), Some(&q));
    }

    #[test]
    fn repeated_decomposition_is_not_a_move() {
        let p0 = dec(5, &[(1, 3), (1, 4)]);
        let path = PantsPath::from_moves(p0, [(MoveKind::A, ch(1, 3, 5), ch(1, 3, 5))], 0);
        let report = validate_path(&path);
        assert!(!report.ok);
        assert_eq!(report.diagnostics[0].step, 0);
    }

    #[test]
    fn wrong_inserted_chord_is_reported() {
        let p0 = dec(6, &[(1, 3), (1, 4), (1, 5)]);
        let path = PantsPath::from_moves(p0, [(MoveKind::A, ch(1, 4, 6), ch(2, 4, 6))], 0);
        let report = validate_path(&path);
        assert!(!report.ok);
        assert!(report.diagnostics.iter().any(|d| d.message.contains("forces")));
    }

    #[test]
    fn s_annotations_are_counted() {
        let p0 = dec(5, &[(1, 3), (1, 4)]);
        let path = PantsPath::from_moves(p0, [(MoveKind::S, ch(1, 3, 5), ch(2, 4, 5))], 0);
        let report = validate_path(&path);
        assert!(report.ok, "{report:?}");
        assert_eq!((report.a_moves, report.s_moves), (0, 1));
    }

    #[test]
    fn back_and_forth_closes() {
        let p0 = dec(5, &[(1, 3), (1, 4)]);
        let path = PantsPath::from_moves(
            p0.clone(),
            [
                (MoveKind::A, ch(1, 3, 5), ch(2, 4, 5)),
                (MoveKind::A, ch(2, 4, 5), ch(1, 3, 5)),
            ],
            0,
        );
        let report = validate_path(&path);
        assert!(report.ok && report.closes);
        assert_eq!(universal_chords(&path), vec![ch(1, 4, 5)]);
    }
}
