//! Ideal tetrahedra, the octahedron subdivision, and validation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::octahedra::{OctahedralComplex, Slot, FACES, N, S, W, X, Y, Z};

/// Vertex permutation of a face gluing, written as four digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Perm4(pub [u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    pub fn new(images: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || seen[i as usize] {
                return Err(Error::input(format!("{images:?} is not a permutation of 0..4")));
            }
            seen[i as usize] = true;
        }
        Ok(Perm4(images))
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn inverse(&self) -> Perm4 {
        let mut inv = [0u8; 4];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm4(inv)
    }

    pub fn sign(&self) -> i32 {
        let mut s = 1;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    s = -s;
                }
            }
        }
        s
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl From<Perm4> for String {
    fn from(p: Perm4) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Perm4 {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<Self, String> {
        let digits: Vec<u8> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| format!("bad permutation {s:?}"))?;
        let arr: [u8; 4] = digits.try_into().map_err(|_| format!("bad permutation {s:?}"))?;
        Perm4::new(arr).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tetrahedron {
    /// Neighbour across face `k`, the face opposite vertex `k`.
    pub neighbors: [usize; 4],
    pub perms: [Perm4; 4],
    pub cusps: [usize; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealTriangulation {
    pub tetrahedra: Vec<Tetrahedron>,
}

/// Summary of a successful validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationReport {
    pub tetrahedra: usize,
    pub edges: usize,
    pub cusps: usize,
    pub orientable: bool,
    /// Euler characteristic of each cusp's vertex link.
    pub link_euler: Vec<i64>,
}

impl TriangulationReport {
    pub fn all_links_tori(&self) -> bool {
        self.orientable && self.link_euler.iter().all(|&e| e == 0)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Class index per element, numbered by first appearance.
    fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.0.len();
        let mut label = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut count = 0;
        for i in 0..n {
            let r = self.find(i);
            if label[r] == usize::MAX {
                label[r] = count;
                count += 1;
            }
            out[i] = label[r];
        }
        (out, count)
    }
}

impl IdealTriangulation {
    pub fn len(&self) -> usize {
        self.tetrahedra.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tetrahedra.is_empty()
    }

    fn glued_faces(&self) -> impl Iterator<Item = (usize, usize, usize, Perm4)> + '_ {
        self.tetrahedra
            .iter()
            .enumerate()
            .flat_map(|(i, t)| (0..4).map(move |f| (i, f, t.neighbors[f], t.perms[f])))
    }

    /// Every face glued exactly once, gluings involutive and never a face to itself.
    pub fn check_gluings(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::assembly(msg));
        let len = self.len();
        for (i, f, j, p) in self.glued_faces() {
            if j >= len {
                return bad(format!("tet {i} face {f}: neighbour {j} out of range"));
            }
            let g = p.apply(f);
            if i == j && g == f {
                return bad(format!("tet {i} face {f} glued to itself"));
            }
            let back = &self.tetrahedra[j];
            if back.neighbors[g] != i || back.perms[g] != p.inverse() {
                return bad(format!("gluing of tet {i} face {f} is not involutive"));
            }
        }
        Ok(())
    }

    /// Vertex classes numbered by first appearance over `(tet, vertex)`.
    pub fn compute_cusps(&self) -> (Vec<[usize; 4]>, usize) {
        let mut uf = UnionFind::new(4 * self.len());
        for (i, f, j, p) in self.glued_faces() {
            for v in (0..4).filter(|&v| v != f) {
                uf.union(4 * i + v, 4 * j + p.apply(v));
            }
        }
        let (cls, count) = uf.classes();
        let per_tet = cls.chunks(4).map(|c| [c[0], c[1], c[2], c[3]]).collect();
        (per_tet, count)
    }

    pub fn edge_count(&self) -> usize {
        // edge {u, v} of tet i stored at 6 i + index
        const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let idx = |u: usize, v: usize| {
            let (a, b) = (u.min(v), u.max(v));
            EDGES.iter().position(|&e| e == (a, b)).expect("edge of a tetrahedron")
        };
        let mut uf = UnionFind::new(6 * self.len());
        for (i, f, j, p) in self.glued_faces() {
            for (u, v) in EDGES {
                if u != f && v != f {
                    uf.union(6 * i + idx(u, v), 6 * j + idx(p.apply(u), p.apply(v)));
                }
            }
        }
        uf.classes().1
    }

    /// Propagate `σ_j = −sign(p)·σ_i` over the gluings; `None` on a contradiction.
    pub fn orientation(&self) -> Option<Vec<i32>> {
        let mut sigma = vec![0i32; self.len()];
        for start in 0..self.len() {
            if sigma[start] != 0 {
                continue;
            }
            sigma[start] = 1;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let t = &self.tetrahedra[i];
                for f in 0..4 {
                    let j = t.neighbors[f];
                    let want = -t.perms[f].sign() * sigma[i];
                    if sigma[j] == 0 {
                        sigma[j] = want;
                        stack.push(j);
                    } else if sigma[j] != want {
                        return None;
                    }
                }
            }
        }
        Some(sigma)
    }

    /// `V − E + F` of the link of each vertex class.
    pub fn link_euler(&self) -> Vec<i64> {
        let (cusps, count) = self.compute_cusps();
        let len = self.len();
        // link corner (tet i, vertex v, towards u)
        let corner = |i: usize, v: usize, u: usize| 16 * i + 4 * v + u;
        let mut uf = UnionFind::new(16 * len);
        for (i, f, j, p) in self.glued_faces() {
            for v in (0..4).filter(|&v| v != f) {
                for u in (0..4).filter(|&u| u != f && u != v) {
                    uf.union(corner(i, v, u), corner(j, p.apply(v), p.apply(u)));
                }
            }
        }
        let mut faces = vec![0i64; count];
        let mut vertex_roots: Vec<Vec<usize>> = vec![Vec::new(); count];
        for i in 0..len {
            for v in 0..4 {
                let c = cusps[i][v];
                faces[c] += 1;
                for u in (0..4).filter(|&u| u != v) {
                    vertex_roots[c].push(uf.find(corner(i, v, u)));
                }
            }
        }
        (0..count)
            .map(|c| {
                let roots = &mut vertex_roots[c];
                roots.sort_unstable();
                roots.dedup();
                let (f, e, v) = (faces[c], 3 * faces[c] / 2, roots.len() as i64);
                v - e + f
            })
            .collect()
    }

    /// Full validation: gluings, stored cusp classes, orientability, links,
    /// and `#edges = #tets`.
    pub fn validate(&self) -> Result<TriangulationReport> {
        self.check_gluings()?;
        let (cusps, count) = self.compute_cusps();
        for (i, (t, c)) in self.tetrahedra.iter().zip(&cusps).enumerate() {
            if &t.cusps != c {
                return Err(Error::assembly(format!("tet {i} has stale cusp classes")));
            }
        }
        let orientable = self.orientation().is_some();
        if !orientable {
            return Err(Error::assembly("orientation propagation met a contradiction"));
        }
        let link_euler = self.link_euler();
        if let Some(c) = link_euler.iter().position(|&e| e != 0) {
            return Err(Error::assembly(format!(
                "link of cusp {c} has Euler characteristic {}",
                link_euler[c]
            )));
        }
        let edges = self.edge_count();
        if edges != self.len() {
            return Err(Error::assembly(format!(
                "{edges} edge classes for {} tetrahedra",
                self.len()
            )));
        }
        Ok(TriangulationReport {
            tetrahedra: self.len(),
            edges,
            cusps: count,
            orientable,
            link_euler,
        })
    }
}

/// Tetrahedra of one octahedron, fanned around the `w–y` diagonal.
pub const SUBDIVISION: [[Slot; 4]; 4] = [[W, Y, N, X], [W, Y, X, S], [W, Y, S, Z], [W, Y, Z, N]];

fn tet_of_face(face: usize) -> usize {
    match face {
        0 | 1 => 0,
        4 | 5 => 1,
        6 | 7 => 2,
        _ => 3,
    }
}

/// Glue face `fa` of tet `a` (slots `sa`) to face `fb` of tet `b`, sending
/// slot `s` of `a` to slot `f(s)` of `b` and opposite vertex to opposite.
fn slot_perm(sa: &[Slot; 4], fa: usize, sb: &[Slot; 4], fb: usize, f: impl Fn(Slot) -> Slot) -> Perm4 {
    let mut p = [0u8; 4];
    for v in 0..4 {
        p[v] = if v == fa {
            fb as u8
        } else {
            let target = f(sa[v]);
            sb.iter().position(|&s| s == target).expect("slot on target face") as u8
        };
    }
    Perm4(p)
}

/// Split every octahedron into four tetrahedra about `w–y` and carry the
/// face pairings down to tetrahedron faces.
pub fn subdivide(complex: &OctahedralComplex) -> Result<IdealTriangulation> {
    complex.check_complete()?;
    let len = 4 * complex.octahedra.len();
    let mut neighbors = vec![[usize::MAX; 4]; len];
    let mut perms = vec![[Perm4::IDENTITY; 4]; len];
    let mut glue = |i: usize, fi: usize, j: usize, p: Perm4| {
        let fj = p.apply(fi);
        neighbors[i][fi] = j;
        perms[i][fi] = p;
        neighbors[j][fj] = i;
        perms[j][fj] = p.inverse();
    };
    let opposite = |k: usize, face: &[Slot]| -> usize {
        (0..4)
            .find(|&v| !face.contains(&SUBDIVISION[k][v]))
            .expect("face of tet")
    };

    for o in 0..complex.octahedra.len() {
        for k in 0..4 {
            let next = (k + 1) % 4;
            let shared: Vec<Slot> = SUBDIVISION[k]
                .iter()
                .copied()
                .filter(|s| SUBDIVISION[next].contains(s))
                .collect();
            let (fa, fb) = (opposite(k, &shared), opposite(next, &shared));
            let p = slot_perm(&SUBDIVISION[k], fa, &SUBDIVISION[next], fb, |s| s);
            glue(4 * o + k, fa, 4 * o + next, p);
        }
    }
    for pairing in &complex.pairings {
        let (a, b) = (pairing.first, pairing.second);
        let (ka, kb) = (tet_of_face(a.face), tet_of_face(b.face));
        let (fa, fb) = (opposite(ka, &FACES[a.face]), opposite(kb, &FACES[b.face]));
        let src = FACES[a.face];
        let p = slot_perm(&SUBDIVISION[ka], fa, &SUBDIVISION[kb], fb, |s| {
            pairing.map[src.iter().position(|&x| x == s).expect("slot on face")]
        });
        glue(4 * a.octahedron + ka, fa, 4 * b.octahedron + kb, p);
    }
    if neighbors.iter().flatten().any(|&x| x == usize::MAX) {
        return Err(Error::assembly("subdivision left a face unglued"));
    }
    let mut tri = IdealTriangulation {
        tetrahedra: neighbors
            .into_iter()
            .zip(perms)
            .map(|(neighbors, perms)| Tetrahedron {
                neighbors,
                perms,
                cusps: [0; 4],
            })
            .collect(),
    };
    let (cusps, _) = tri.compute_cusps();
    for (t, c) in tri.tetrahedra.iter_mut().zip(cusps) {
        t.cusps = c;
    }
    Ok(tri)
}
