use std::collections::VecDeque;

use crate::drilling::{ARegion, CellId, Cusp, DrilledComplex};
use crate::error::{Error, Result};
use crate::surface::{Edge, Rotation};

use super::octahedra::{
    a_region_octahedra, outward_sign, FacePairing, FaceRef, OctahedralComplex, Slot, FACES, LOWER_FACES, N, S,
    UPPER_FACES,
};

fn slot_edge(r: &ARegion, s: Slot) -> Edge {
    match s {
        N => Edge::Chord(r.new_diagonal),
        S => Edge::Chord(r.old_diagonal),
        _ => r.quad[s - 2],
    }
}

fn relabel(c: Cusp, rot: Rotation) -> Cusp {
    match c {
        Cusp::Strand(g) => Cusp::Strand(rot.gap(g)),
        loop_cusp => loop_cusp,
    }
}

struct CellGluing {
    from: RegionFace,
    to: RegionFace,
    map: [Slot; 3],
    parity: i32,
}

#[derive(Clone, Copy)]
struct RegionFace {
    region: usize,
    face: usize,
}

fn cell_gluing(complex: &DrilledComplex, cell: CellId) -> Result<CellGluing> {
    let c = &complex.cells[cell];
    let m = complex.m;
    let (a, b) = (c.created(), c.destroyed(m));
    let (ra, rb) = (&complex.regions[a], &complex.regions[b]);
    let up = ra
        .upper_cells
        .iter()
        .position(|&x| x == cell)
        .ok_or_else(|| Error::assembly(format!("cell {cell} missing above region {a}")))?;
    let down = rb
        .lower_cells
        .iter()
        .position(|&x| x == cell)
        .ok_or_else(|| Error::assembly(format!("dangling pants: cell {cell} missing below region {b}")))?;
    let (fu, fl) = (UPPER_FACES[up], LOWER_FACES[down]);
    let back = complex.psi().pow(-(c.lifetime.seam_crossings(m) as i64));
    let labels = |r: &ARegion, s: Slot| match s {
        N => Cusp::Loop(r.north),
        S => Cusp::Loop(r.south),
        _ => r.equator[s - 2],
    };
    let mut map = [0; 3];
    for (i, &s) in FACES[fu].iter().enumerate() {
        let e = slot_edge(ra, s).rotated(back);
        let t = FACES[fl]
            .iter()
            .copied()
            .find(|&t| slot_edge(rb, t) == e)
            .ok_or_else(|| Error::assembly(format!("cell {cell}: edge {e} has no partner below region {b}")))?;
        if relabel(labels(ra, s), back) != labels(rb, t) {
            return Err(Error::assembly(format!(
                "cell {cell}: cusp label mismatch between regions {a} and {b}"
            )));
        }
        map[i] = t;
    }
    let [p, q, r] = FACES[fu];
    let parity = outward_sign(p, q, r) * outward_sign(map[0], map[1], map[2]);
    Ok(CellGluing {
        from: RegionFace { region: a, face: fu },
        to: RegionFace { region: b, face: fl },
        map,
        parity,
    })
}

/// Glue the doubled octahedra of every A-region along the pants cells.
///
/// Each cell joins the upper white faces of its creating region to the
/// lower white faces of its destroying region. Copies are crossed (`⁺` to
/// `⁻`) along a spanning tree of regions; on the remaining cells the copy
/// matching is whichever keeps the complex orientable. The returned flags
/// record, per cell, whether the copies were crossed.
pub fn assemble_with_twists(complex: &DrilledComplex) -> Result<(OctahedralComplex, Vec<bool>)> {
    complex
        .validate()
        .map_err(|e| Error::assembly(format!("complex is not closed: {e}")))?;
    let m = complex.m;
    let mut octahedra = Vec::with_capacity(2 * m);
    let mut pairings = Vec::with_capacity(4 * m + 2 * complex.cells.len());
    for r in &complex.regions {
        let (octs, dark) = a_region_octahedra(r, 2 * r.id);
        octahedra.extend(octs);
        pairings.extend(dark);
    }
    let gluings = (0..complex.cells.len())
        .map(|c| cell_gluing(complex, c))
        .collect::<Result<Vec<_>>>()?;

    // orientation sign of each region's plus copy; its minus copy is opposite
    let mut adjacency = vec![Vec::new(); m];
    for g in &gluings {
        adjacency[g.from.region].push((g.to.region, g.parity));
        adjacency[g.to.region].push((g.from.region, g.parity));
    }
    let mut eps = vec![0i32; m];
    eps[0] = 1;
    let mut queue = VecDeque::from([0]);
    while let Some(r) = queue.pop_front() {
        for &(s, parity) in &adjacency[r] {
            if eps[s] == 0 {
                eps[s] = parity * eps[r];
                queue.push_back(s);
            }
        }
    }
    if let Some(r) = eps.iter().position(|&e| e == 0) {
        return Err(Error::assembly(format!("region {r} is not connected to region 0")));
    }

    let mut crossed = Vec::with_capacity(gluings.len());
    for g in &gluings {
        let cross = eps[g.to.region] == g.parity * eps[g.from.region];
        let (a, b) = (2 * g.from.region, 2 * g.to.region);
        let targets = if cross { [b + 1, b] } else { [b, b + 1] };
        for (src, dst) in [a, a + 1].into_iter().zip(targets) {
            pairings.push(FacePairing {
                first: FaceRef {
                    octahedron: src,
                    face: g.from.face,
                },
                second: FaceRef {
                    octahedron: dst,
                    face: g.to.face,
                },
                map: g.map,
            });
        }
        crossed.push(cross);
    }
    let out = OctahedralComplex { octahedra, pairings };
    out.check_complete()?;
    Ok((out, crossed))
}

pub fn assemble(complex: &DrilledComplex) -> Result<OctahedralComplex> {
    assemble_with_twists(complex).map(|(c, _)| c)
}
