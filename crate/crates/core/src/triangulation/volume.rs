use std::ops::Add;

use num_traits::Float;
use serde::{Deserialize, Serialize};

use crate::pants_graph::{validate_path, PantsPath};

/// Volume of the regular ideal octahedron, `8Λ(π/4)`.
pub const V_OCT: f64 = 3.663862376708876;

pub fn v_oct<T: Float>() -> T {
    T::from(V_OCT).expect("float type holds V_OCT")
}

/// `V_oct·(2A + S)`: each A-region is two octahedra, each S-region one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VolumeBound<T> {
    pub a_moves: usize,
    pub s_moves: usize,
    pub bound: T,
}

impl<T: Float> VolumeBound<T> {
    pub fn from_counts(a_moves: usize, s_moves: usize) -> Self {
        let octahedra = T::from(2 * a_moves + s_moves).expect("count fits the float type");
        VolumeBound {
            a_moves,
            s_moves,
            bound: v_oct::<T>() * octahedra,
        }
    }

    pub fn octahedra(&self) -> usize {
        2 * self.a_moves + self.s_moves
    }
}

impl<T: Float> Add for VolumeBound<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::from_counts(self.a_moves + rhs.a_moves, self.s_moves + rhs.s_moves)
    }
}

pub fn volume_bound_as<T: Float>(path: &PantsPath) -> VolumeBound<T> {
    let r = validate_path(path);
    VolumeBound::from_counts(r.a_moves, r.s_moves)
}

pub fn volume_bound(path: &PantsPath) -> VolumeBound<f64> {
    volume_bound_as(path)
}
