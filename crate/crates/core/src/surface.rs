//! The n-punctured sphere in its chordal model.
//!
//! Punctures sit on a great circle; the gaps between consecutive punctures are
//! labelled `1..=n` cyclically. A curve meeting the circle in two gaps is a
//! [`Chord`] of the n-gon whose vertices are the gaps, and polygon side `k`
//! stands for the puncture between gaps `k` and `k + 1`. Pants decompositions
//! by such curves are exactly triangulations of the n-gon.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A gap label in `1..=n`.
pub type Gap = u32;

/// Topological type `(g, n)` of a compact orientable surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceType {
    pub genus: u32,
    pub boundary_count: u32,
}

impl SurfaceType {
    pub fn new(genus: u32, boundary_count: u32) -> Result<Self> {
        let t = SurfaceType { genus, boundary_count };
        if t.curve_count() < 1 {
            return Err(Error::input(format!(
                "surface of type ({genus},{boundary_count}) has no pants decomposition curves"
            )));
        }
        Ok(t)
    }

    /// The n-punctured sphere, the only type the concrete constructions use.
    pub fn punctured_sphere(n: u32) -> Result<Self> {
        if n < 4 {
            return Err(Error::input(format!("need at least 4 punctures, got {n}")));
        }
        Self::new(0, n)
    }

    /// Number of curves in any pants decomposition, `3g - 3 + n`.
    pub fn curve_count(&self) -> i64 {
        3 * self.genus as i64 - 3 + self.boundary_count as i64
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }

    /// Number of pants, `-χ`.
    pub fn pants_count(&self) -> i64 {
        -self.euler_characteristic()
    }
}

/// Shift of all gap labels by a fixed amount, `i ↦ i + shift (mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rotation {
    pub n: u32,
    pub shift: u32,
}

impl Rotation {
    /// Accepts any signed shift and reduces it mod `n`.
    pub fn new(n: u32, shift: i64) -> Self {
        Rotation {
            n,
            shift: shift.rem_euclid(n as i64) as u32,
        }
    }

    pub fn identity(n: u32) -> Self {
        Rotation { n, shift: 0 }
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0
    }

    pub fn inverse(&self) -> Self {
        Rotation::new(self.n, -(self.shift as i64))
    }

    pub fn pow(&self, k: i64) -> Self {
        Rotation::new(self.n, self.shift as i64 * k)
    }

    pub fn gap(&self, g: Gap) -> Gap {
        (g - 1 + self.shift) % self.n + 1
    }
}

/// Reduce an arbitrary integer to a gap label in `1..=n`.
pub fn wrap_gap(i: i64, n: u32) -> Gap {
    ((i - 1).rem_euclid(n as i64) + 1) as Gap
}

/// The curve `β_{a,b}` meeting the great circle at gaps `a` and `b`,
/// stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[Gap; 2]", try_from = "[Gap; 2]")]
pub struct Chord {
    a: Gap,
    b: Gap,
}

impl From<Chord> for [Gap; 2] {
    fn from(c: Chord) -> Self {
        [c.a, c.b]
    }
}

impl TryFrom<[Gap; 2]> for Chord {
    type Error = String;

    fn try_from(v: [Gap; 2]) -> std::result::Result<Self, String> {
        if v[0] == 0 || v[1] == 0 || v[0] == v[1] {
            return Err(format!("malformed chord {v:?}"));
        }
        Ok(Chord {
            a: v[0].min(v[1]),
            b: v[0].max(v[1]),
        })
    }
}

impl Chord {
    /// Validated constructor: endpoints must be distinct, non-adjacent gaps of the n-gon.
    pub fn new(a: Gap, b: Gap, n: u32) -> Result<Self> {
        let c = Chord {
            a: a.min(b),
            b: a.max(b),
        };
        c.check(n)?;
        Ok(c)
    }

    /// Constructor taking unreduced labels, e.g. `j + 3` for `β_{j+1, j+3}`.
    pub fn wrapped(a: i64, b: i64, n: u32) -> Result<Self> {
        Self::new(wrap_gap(a, n), wrap_gap(b, n), n)
    }

    pub fn check(&self, n: u32) -> Result<()> {
        let (a, b) = (self.a, self.b);
        if a < 1 || b > n {
            return Err(Error::input(format!("chord {self} has a label outside 1..={n}")));
        }
        if a == b {
            return Err(Error::input(format!("chord {self} has equal endpoints")));
        }
        if b == a + 1 || (a == 1 && b == n) {
            return Err(Error::input(format!(
                "chord {self} joins adjacent gaps and bounds a once-punctured disk"
            )));
        }
        Ok(())
    }

    pub fn a(&self) -> Gap {
        self.a
    }

    pub fn b(&self) -> Gap {
        self.b
    }

    pub fn endpoints(&self) -> [Gap; 2] {
        [self.a, self.b]
    }

    pub fn has_endpoint(&self, g: Gap) -> bool {
        self.a == g || self.b == g
    }

    /// Cyclic gap distance between the endpoints, `min(b - a, n - (b - a))`.
    pub fn cyclic_span(&self, n: u32) -> u32 {
        let d = self.b - self.a;
        d.min(n - d)
    }

    /// `true` if `g` lies strictly inside the arc `a < g < b`.
    pub fn strictly_inside(&self, g: Gap) -> bool {
        self.a < g && g < self.b
    }

    pub fn rotated(&self, rot: Rotation) -> Chord {
        let (x, y) = (rot.gap(self.a), rot.gap(self.b));
        Chord {
            a: x.min(y),
            b: x.max(y),
        }
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Crossing test for two chords of the n-gon.
///
/// Two chords cross iff exactly one endpoint of `c2` lies strictly between the
/// endpoints of `c1`; chords sharing an endpoint never cross.
pub fn chords_cross(c1: Chord, c2: Chord, n: u32) -> Result<bool> {
    c1.check(n)?;
    c2.check(n)?;
    Ok(cross_unchecked(c1, c2))
}

pub(crate) fn cross_unchecked(c1: Chord, c2: Chord) -> bool {
    if c1.has_endpoint(c2.a) || c1.has_endpoint(c2.b) {
        return false;
    }
    c1.strictly_inside(c2.a) != c1.strictly_inside(c2.b)
}

/// An edge of the n-gon: a polygon side (a puncture) or a chord (a curve).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Edge {
    /// Side `k` joins gaps `k` and `k + 1` and stands for the puncture between them.
    Side(Gap),
    Chord(Chord),
}

impl Edge {
    /// The edge joining two distinct gaps.
    pub fn between(p: Gap, q: Gap, n: u32) -> Edge {
        let (lo, hi) = (p.min(q), p.max(q));
        if hi == lo + 1 {
            Edge::Side(lo)
        } else if lo == 1 && hi == n {
            Edge::Side(n)
        } else {
            Edge::Chord(Chord { a: lo, b: hi })
        }
    }

    pub fn is_side(&self) -> bool {
        matches!(self, Edge::Side(_))
    }

    pub fn chord(&self) -> Option<Chord> {
        match self {
            Edge::Chord(c) => Some(*c),
            Edge::Side(_) => None,
        }
    }

    pub fn endpoints(&self, n: u32) -> [Gap; 2] {
        match self {
            Edge::Side(k) => [*k, k % n + 1],
            Edge::Chord(c) => c.endpoints(),
        }
    }

    pub fn rotated(&self, rot: Rotation) -> Edge {
        match self {
            Edge::Side(k) => Edge::Side(rot.gap(*k)),
            Edge::Chord(c) => Edge::Chord(c.rotated(rot)),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edge::Side(k) => write!(f, "side{k}"),
            Edge::Chord(c) => write!(f, "chord{c}"),
        }
    }
}

/// A triangle of a polygon triangulation, i.e. one pair of pants, stored by
/// its three gap vertices in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[Gap; 3]", try_from = "[Gap; 3]")]
pub struct Triangle {
    v: [Gap; 3],
}

impl From<Triangle> for [Gap; 3] {
    fn from(t: Triangle) -> Self {
        t.v
    }
}

impl TryFrom<[Gap; 3]> for Triangle {
    type Error = String;

    fn try_from(mut v: [Gap; 3]) -> std::result::Result<Self, String> {
        v.sort_unstable();
        if v[0] == 0 || v[0] == v[1] || v[1] == v[2] {
            return Err(format!("malformed triangle {v:?}"));
        }
        Ok(Triangle { v })
    }
}

impl Triangle {
    pub fn new(p: Gap, q: Gap, r: Gap) -> Result<Self> {
        Triangle::try_from([p, q, r]).map_err(Error::Input)
    }

    pub fn vertices(&self) -> [Gap; 3] {
        self.v
    }

    /// Edges in the fixed order `(v0,v1), (v1,v2), (v0,v2)`.
    pub fn edges(&self, n: u32) -> [Edge; 3] {
        let [p, q, r] = self.v;
        [Edge::between(p, q, n), Edge::between(q, r, n), Edge::between(p, r, n)]
    }

    pub fn side_count(&self, n: u32) -> usize {
        self.edges(n).iter().filter(|e| e.is_side()).count()
    }

    pub fn has_edge(&self, e: Edge, n: u32) -> bool {
        self.edges(n).contains(&e)
    }

    /// The vertex not on `e`, if `e` is an edge of this triangle.
    pub fn apex(&self, e: Edge, n: u32) -> Option<Gap> {
        let [p, q] = e.endpoints(n);
        if !self.v.contains(&p) || !self.v.contains(&q) {
            return None;
        }
        self.v.iter().copied().find(|&g| g != p && g != q)
    }

    pub fn rotated(&self, rot: Rotation) -> Triangle {
        let mut v = self.v.map(|g| rot.gap(g));
        v.sort_unstable();
        Triangle { v }
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.v[0], self.v[1], self.v[2])
    }
}

/// Which side of a chord `(a,b)` a triangle lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChordSide {
    /// The side containing the gaps strictly between `a` and `b`.
    Inner,
    Outer,
}

impl ChordSide {
    pub fn of(triangle: &Triangle, chord: Chord, n: u32) -> Option<ChordSide> {
        let apex = triangle.apex(Edge::Chord(chord), n)?;
        Some(if chord.strictly_inside(apex) {
            ChordSide::Inner
        } else {
            ChordSide::Outer
        })
    }
}

/// Topological type of a pants, read off from how many of its edges are punctures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PantsKind {
    TwoPuncturedDisk,
    OncePuncturedAnnulus,
    PlainPants,
}

impl PantsKind {
    /// Number of punctures on a pants of this kind.
    pub fn punctures(&self) -> usize {
        match self {
            PantsKind::TwoPuncturedDisk => 2,
            PantsKind::OncePuncturedAnnulus => 1,
            PantsKind::PlainPants => 0,
        }
    }
}

pub fn classify_pants(t: &Triangle, n: u32) -> PantsKind {
    match t.side_count(n) {
        2 => PantsKind::TwoPuncturedDisk,
        1 => PantsKind::OncePuncturedAnnulus,
        0 => PantsKind::PlainPants,
        // only a triangle with n = 3 has three sides
        _ => unreachable!("triangle {t} of an n-gon with n > 3 has at most two sides"),
    }
}

/// A set of chords of the n-gon, stored sorted. Validity as a pants
/// decomposition is checked by [`PantsDecomposition::is_valid`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PantsDecomposition {
    n: u32,
    chords: Vec<Chord>,
}

impl PantsDecomposition {
    /// Builds a chord set; each chord must be well-formed for `n`, but the set
    /// need not be a decomposition.
    pub fn new(n: u32, chords: impl IntoIterator<Item = Chord>) -> Result<Self> {
        if n < 4 {
            return Err(Error::input(format!("need at least 4 punctures, got {n}")));
        }
        let mut chords: Vec<Chord> = chords.into_iter().collect();
        for c in &chords {
            c.check(n)?;
        }
        chords.sort_unstable();
        chords.dedup();
        Ok(PantsDecomposition { n, chords })
    }

    pub fn from_pairs(n: u32, pairs: &[(Gap, Gap)]) -> Result<Self> {
        let chords = pairs
            .iter()
            .map(|&(a, b)| Chord::new(a, b, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, chords)
    }

    /// A decomposition known to be valid, skipping checks. Internal use only.
    pub(crate) fn from_sorted_unchecked(n: u32, chords: Vec<Chord>) -> Self {
        debug_assert!(chords.windows(2).all(|w| w[0] < w[1]));
        PantsDecomposition { n, chords }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn contains(&self, c: Chord) -> bool {
        self.chords.binary_search(&c).is_ok()
    }

    pub fn is_valid(&self) -> bool {
        if self.chords.len() != self.n as usize - 3 {
            return false;
        }
        self.chords
            .iter()
            .enumerate()
            .all(|(i, &c)| self.chords[i + 1..].iter().all(|&d| !cross_unchecked(c, d)))
    }

    /// The `n - 2` pants of a valid decomposition, in lexicographic order.
    pub fn triangles(&self) -> Result<Vec<Triangle>> {
        if !self.is_valid() {
            return Err(Error::input(format!("{self} is not a pants decomposition")));
        }
        Ok(self.triangles_unchecked())
    }

    pub(crate) fn triangles_unchecked(&self) -> Vec<Triangle> {
        let n = self.n as usize;
        let mut adj = vec![vec![false; n + 1]; n + 1];
        for k in 1..=self.n {
            let next = k % self.n + 1;
            adj[k as usize][next as usize] = true;
            adj[next as usize][k as usize] = true;
        }
        for c in &self.chords {
            adj[c.a as usize][c.b as usize] = true;
            adj[c.b as usize][c.a as usize] = true;
        }
        // In a triangulated polygon every mutually adjacent triple bounds a face.
        let mut out = Vec::with_capacity(n - 2);
        for p in 1..=n {
            for q in p + 1..=n {
                if !adj[p][q] {
                    continue;
                }
                for r in q + 1..=n {
                    if adj[p][r] && adj[q][r] {
                        out.push(Triangle {
                            v: [p as Gap, q as Gap, r as Gap],
                        });
                    }
                }
            }
        }
        out
    }

    /// The two triangles of a valid decomposition that contain chord `c`.
    pub(crate) fn triangles_on(&self, c: Chord) -> Vec<Triangle> {
        self.triangles_unchecked()
            .into_iter()
            .filter(|t| t.has_edge(Edge::Chord(c), self.n))
            .collect()
    }

    pub fn rotated(&self, rot: Rotation) -> Self {
        let mut chords: Vec<Chord> = self.chords.iter().map(|c| c.rotated(rot)).collect();
        chords.sort_unstable();
        PantsDecomposition { n: self.n, chords }
    }

    /// Replace one chord by another without any validity check.
    pub(crate) fn replaced(&self, removed: Chord, inserted: Chord) -> Self {
        let mut chords: Vec<Chord> = self.chords.iter().copied().filter(|&c| c != removed).collect();
        chords.push(inserted);
        chords.sort_unstable();
        chords.dedup();
        PantsDecomposition { n: self.n, chords }
    }
}

impl fmt::Display for PantsDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (i, c) in self.chords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

pub fn is_valid_decomposition(p: &PantsDecomposition) -> bool {
    p.is_valid()
}

pub fn triangles_of(p: &PantsDecomposition) -> Result<Vec<Triangle>> {
    p.triangles()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(a: Gap, b: Gap, n: u32) -> Chord {
        Chord::new(a, b, n).unwrap()
    }

    #[test]
    fn crossing_examples() {
        assert!(chords_cross(ch(1, 3, 5), ch(2, 4, 5), 5).unwrap());
        assert!(!chords_cross(ch(1, 3, 5), ch(1, 4, 5), 5).unwrap());
        assert!(!chords_cross(ch(1, 3, 6), ch(3, 5, 6), 6).unwrap());
    }

    #[test]
    fn crossing_rejects_bad_labels() {
        let bad = Chord { a: 1, b: 9 };
        assert!(matches!(chords_cross(bad, ch(1, 3, 5), 5), Err(Error::Input(_))));
    }

    #[test]
    fn chord_validation() {
        assert!(Chord::new(1, 2, 5).is_err());
        assert!(Chord::new(1, 5, 5).is_err());
        assert!(Chord::new(3, 3, 5).is_err());
        assert!(Chord::new(0, 3, 5).is_err());
        assert_eq!(Chord::new(4, 1, 5).unwrap(), ch(1, 4, 5));
        assert_eq!(Chord::wrapped(7, 10, 7).unwrap(), ch(3, 7, 7));
    }

    #[test]
    fn validity_examples() {
        let p = PantsDecomposition::from_pairs(5, &[(1, 3), (1, 4)]).unwrap();
        assert!(is_valid_decomposition(&p));
        let p = PantsDecomposition::from_pairs(5, &[(1, 3)]).unwrap();
        assert!(!is_valid_decomposition(&p));
        let p = PantsDecomposition::from_pairs(6, &[(1, 3), (2, 4), (4, 6)]).unwrap();
        assert!(!is_valid_decomposition(&p));
    }

    #[test]
    fn pentagon_fan_triangles() {
        let p = PantsDecomposition::from_pairs(5, &[(1, 3), (1, 4)]).unwrap();
        let ts = triangles_of(&p).unwrap();
        assert_eq!(
            ts,
            vec![
                Triangle::new(1, 2, 3).unwrap(),
                Triangle::new(1, 3, 4).unwrap(),
                Triangle::new(1, 4, 5).unwrap()
            ]
        );
        let kinds: Vec<_> = ts.iter().map(|t| classify_pants(t, 5)).collect();
        assert_eq!(
            kinds,
            vec![
                PantsKind::TwoPuncturedDisk,
                PantsKind::OncePuncturedAnnulus,
                PantsKind::TwoPuncturedDisk
            ]
        );
    }

    #[test]
    fn square_splits_in_two() {
        let p = PantsDecomposition::from_pairs(4, &[(1, 3)]).unwrap();
        assert_eq!(triangles_of(&p).unwrap().len(), 2);
    }

    #[test]
    fn invalid_decomposition_has_no_triangles() {
        let p = PantsDecomposition::from_pairs(6, &[(1, 3), (2, 4), (4, 6)]).unwrap();
        assert!(matches!(triangles_of(&p), Err(Error::Input(_))));
    }

    #[test]
    fn plain_pants_in_hexagon() {
        let t = Triangle::new(1, 3, 5).unwrap();
        assert_eq!(classify_pants(&t, 6), PantsKind::PlainPants);
    }

    #[test]
    fn sides_wrap_around() {
        assert_eq!(Edge::between(1, 6, 6), Edge::Side(6));
        assert_eq!(Edge::between(3, 4, 6), Edge::Side(3));
        assert_eq!(Edge::Side(6).endpoints(6), [6, 1]);
    }

    #[test]
    fn chord_sides() {
        let c = ch(1, 4, 5);
        assert_eq!(
            ChordSide::of(&Triangle::new(1, 3, 4).unwrap(), c, 5),
            Some(ChordSide::Inner)
        );
        assert_eq!(
            ChordSide::of(&Triangle::new(1, 4, 5).unwrap(), c, 5),
            Some(ChordSide::Outer)
        );
        assert_eq!(ChordSide::of(&Triangle::new(1, 2, 3).unwrap(), c, 5), None);
    }

    #[test]
    fn surface_type_counts() {
        let s = SurfaceType::punctured_sphere(7).unwrap();
        assert_eq!(s.curve_count(), 4);
        assert_eq!(s.pants_count(), 5);
        assert!(SurfaceType::new(0, 3).is_err());
        assert_eq!(SurfaceType::new(1, 1).unwrap().curve_count(), 1);
        assert!(SurfaceType::punctured_sphere(3).is_err());
    }

    #[test]
    fn rotation_relabels() {
        let r = Rotation::new(5, 1);
        assert_eq!(r.gap(5), 1);
        assert_eq!(ch(1, 3, 5).rotated(r), ch(2, 4, 5));
        assert_eq!(ch(2, 4, 5).rotated(r.inverse()), ch(1, 3, 5));
        assert_eq!(Edge::Side(5).rotated(r), Edge::Side(1));
    }
}
