//! The explicit closed path through two-fan decompositions.
//!
//! Round `j` starts from the fan at gap `j + 1`,
//! `{β_{j+1,j+3}, ..., β_{j+1,j+n-1}}`, and after `k` flips holds
//! `{β_{j+2,j+4}, ..., β_{j+2,j+k+3}} ∪ {β_{j+1,j+k+3}, ..., β_{j+1,j+n-1}}`.
//! After `n - 3` flips the fan has moved to gap `j + 2`; `n` rounds return to
//! the starting fan.

use crate::error::{Error, Result};
use crate::pants_graph::{universal_chords, MoveKind, PantsPath};
use crate::surface::{classify_pants, Chord, PantsDecomposition, PantsKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FanPathSpec {
    pub n: u32,
    pub rounds: u32,
}

impl FanPathSpec {
    pub fn new(n: u32, rounds: u32) -> Result<Self> {
        if n < 5 {
            return Err(Error::input(format!("the two-fan path needs n >= 5, got {n}")));
        }
        if rounds == 0 || rounds > n {
            return Err(Error::input(format!("rounds must lie in 1..={n}, got {rounds}")));
        }
        Ok(FanPathSpec { n, rounds })
    }

    /// The full closed path with identity monodromy.
    pub fn closed(n: u32) -> Result<Self> {
        Self::new(n, n)
    }

    pub fn length(&self) -> usize {
        (self.rounds * (self.n - 3)) as usize
    }

    pub fn monodromy(&self) -> u32 {
        self.rounds % self.n
    }
}

fn chord(a: i64, b: i64, n: u32) -> Chord {
    Chord::wrapped(a, b, n).expect("two-fan chords join non-adjacent gaps")
}

/// Fan decomposition centred at gap `j + 1`.
pub fn round_decomposition(n: u32, j: u32) -> Result<PantsDecomposition> {
    if n < 5 {
        return Err(Error::input(format!("the two-fan path needs n >= 5, got {n}")));
    }
    let j = j as i64;
    PantsDecomposition::new(n, (3..n as i64).map(|i| chord(j + 1, j + i, n)))
}

/// Decomposition `P_idx` of the path, `idx = j (n - 3) + k`.
pub fn step_decomposition(n: u32, idx: usize) -> Result<PantsDecomposition> {
    if n < 5 {
        return Err(Error::input(format!("the two-fan path needs n >= 5, got {n}")));
    }
    let per_round = (n - 3) as usize;
    let (j, k) = ((idx / per_round) as i64, (idx % per_round) as i64);
    let moved = (4..=k + 3).map(|i| chord(j + 2, j + i, n));
    let kept = (k + 3..n as i64).map(|i| chord(j + 1, j + i, n));
    PantsDecomposition::new(n, moved.chain(kept))
}

/// The chord removed and the chord inserted going from `P_idx` to `P_{idx+1}`:
/// `β_{j+1,j+k+3}` is replaced by `β_{j+2,j+k+4}`.
pub fn step_flip(n: u32, idx: usize) -> (Chord, Chord) {
    let per_round = (n - 3) as usize;
    let (j, k) = ((idx / per_round) as i64, (idx % per_round) as i64);
    (chord(j + 1, j + k + 3, n), chord(j + 2, j + k + 4, n))
}

/// Ordered label `(center, far)` of the chord inserted by step `idx`, the
/// `β_{j+2, j+k+4}` of the construction.
pub fn step_inserted_label(n: u32, idx: usize) -> (u32, u32) {
    let per_round = (n - 3) as usize;
    let (j, k) = ((idx / per_round) as i64, (idx % per_round) as i64);
    (
        crate::surface::wrap_gap(j + 2, n),
        crate::surface::wrap_gap(j + k + 4, n),
    )
}

/// Generate the path from the closed-form decompositions. Move records are
/// the set differences of consecutive decompositions; legality is left to
/// [`crate::pants_graph::validate_path`].
pub fn build_fan_path(spec: FanPathSpec) -> Result<PantsPath> {
    let FanPathSpec { n, .. } = spec;
    let decomps = (0..=spec.length())
        .map(|idx| step_decomposition(n, idx))
        .collect::<Result<Vec<_>>>()?;
    let moves = decomps.windows(2).map(|w| {
        let removed = w[0].chords().iter().copied().find(|c| !w[1].contains(*c));
        let inserted = w[1].chords().iter().copied().find(|c| !w[0].contains(*c));
        match (removed, inserted) {
            (Some(r), Some(i)) => (MoveKind::A, r, i),
            _ => unreachable!("consecutive two-fan decompositions differ"),
        }
    });
    let moves: Vec<_> = moves.collect();
    Ok(PantsPath::from_moves(decomps[0].clone(), moves, spec.monodromy()))
}

/// Shorthand for the full closed path on `n` punctures.
pub fn fan_path(n: u32) -> Result<PantsPath> {
    build_fan_path(FanPathSpec::closed(n)?)
}

/// `true` iff no chord belongs to every decomposition along the path.
pub fn check_no_universal_curve(path: &PantsPath) -> bool {
    universal_chords(path).is_empty()
}

/// `true` iff every pants met along the path is a twice-punctured disk or a
/// once-punctured annulus.
pub fn check_pants_kinds(path: &PantsPath) -> bool {
    path.decompositions().into_iter().all(|d| match d.triangles() {
        Ok(ts) => ts.iter().all(|t| classify_pants(t, d.n()) != PantsKind::PlainPants),
        Err(_) => false,
    })
}
