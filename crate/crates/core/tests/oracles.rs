//! Independent recomputations of quantities the library derives.

use pantsdrill::fan::{fan_path, step_decomposition, step_flip};
use pantsdrill::pants_graph::{apply_a_move, enumerate_decompositions};
use pantsdrill::surface::{Chord, PantsDecomposition, SurfaceType};
use pantsdrill::triangulation::V_OCT;

/// Diagonals `(a, b)` with `1 <= a < b <= n` and `b - a` in `2..=n-2`.
fn diagonals(n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 2..=n {
            if !(a == 1 && b == n) {
                out.push((a, b));
            }
        }
    }
    out
}

fn cross(x: (u32, u32), y: (u32, u32)) -> bool {
    let inside = |g: u32| x.0 < g && g < x.1;
    let shared = x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1;
    !shared && (inside(y.0) != inside(y.1))
}

/// Count (n-3)-subsets of pairwise non-crossing diagonals.
fn brute_force_triangulations(n: u32) -> usize {
    let d = diagonals(n);
    let k = n as usize - 3;
    let mut count = 0;
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((next, chosen)) = stack.pop() {
        if chosen.len() == k {
            count += 1;
            continue;
        }
        for i in next..d.len() {
            if chosen.iter().all(|&j| !cross(d[i], d[j])) {
                let mut c = chosen.clone();
                c.push(i);
                stack.push((i + 1, c));
            }
        }
    }
    count
}

#[test]
fn catalan_counts_by_brute_force() {
    for (n, expected) in [(5, 5), (6, 14), (7, 42), (8, 132)] {
        assert_eq!(brute_force_triangulations(n), expected, "brute force n = {n}");
        let listed = enumerate_decompositions(n).unwrap();
        assert_eq!(listed.len(), expected, "library n = {n}");
        for p in &listed {
            assert!(p.is_valid());
        }
    }
}

/// `Λ(θ) = θ (1 - ln 2θ + Σ_{k≥1} ζ(2k) / (k (2k+1)) (θ/π)^{2k})`.
fn lobachevsky(theta: f64) -> f64 {
    let zeta = |s: f64| {
        let j = 1000u32;
        let head: f64 = (1..=j).map(|i| (i as f64).powf(-s)).sum();
        let jf = j as f64;
        head + jf.powf(1.0 - s) / (s - 1.0) - jf.powf(-s) / 2.0 + s * jf.powf(-s - 1.0) / 12.0
    };
    let x = (theta / std::f64::consts::PI).powi(2);
    let mut sum = 0.0;
    let mut pow = 1.0;
    for k in 1..60 {
        pow *= x;
        let k = k as f64;
        sum += zeta(2.0 * k) / (k * (2.0 * k + 1.0)) * pow;
    }
    theta * (1.0 - (2.0 * theta).ln() + sum)
}

/// `½ Σ sin(2kθ)/k²`, averaging two consecutive partial sums.
fn lobachevsky_fourier(theta: f64, terms: usize) -> f64 {
    let mut s = 0.0;
    let mut prev = 0.0;
    for k in 1..=terms {
        prev = s;
        let k = k as f64;
        s += (2.0 * k * theta).sin() / (k * k);
    }
    0.25 * (s + prev)
}

#[test]
fn regular_octahedron_volume() {
    let quarter = std::f64::consts::FRAC_PI_4;
    let a = 8.0 * lobachevsky(quarter);
    assert!((a - V_OCT).abs() < 1e-10, "{a} vs {V_OCT}");
    let b = 8.0 * lobachevsky_fourier(quarter, 200_001);
    assert!((b - V_OCT).abs() < 1e-9, "{b} vs {V_OCT}");
    // 4 G with Catalan's constant
    assert!((V_OCT - 4.0 * 0.915_965_594_177_219).abs() < 1e-12);
}

#[test]
fn closed_form_matches_flip_replay() {
    let mut checks = 0;
    for n in 5..=10u32 {
        let m = (n * (n - 3)) as usize;
        let mut cur = step_decomposition(n, 0).unwrap();
        for idx in 0..m {
            assert_eq!(cur, step_decomposition(n, idx).unwrap(), "n = {n}, idx = {idx}");
            let (removed, inserted) = step_flip(n, idx);
            let (next, record) = apply_a_move(&cur, removed).unwrap();
            assert_eq!(record.inserted, inserted);
            cur = next;
            checks += 1;
        }
        assert_eq!(cur, step_decomposition(n, 0).unwrap());
    }
    assert_eq!(checks, 10 + 18 + 28 + 40 + 54 + 70);
}

#[test]
fn counting_laws_along_paths() {
    for n in 5..=12u32 {
        let st = SurfaceType::punctured_sphere(n).unwrap();
        let genus = 0i64;
        for p in fan_path(n).unwrap().decompositions() {
            assert_eq!(p.chords().len() as i64, 3 * genus - 3 + n as i64);
            assert_eq!(p.chords().len() as i64, st.curve_count());
            let pants = p.triangles().unwrap().len() as i64;
            assert_eq!(pants, n as i64 - 2);
            assert_eq!(pants, -st.euler_characteristic());
        }
    }
}

#[test]
fn fan_start_is_written_out() {
    for n in 5..=12u32 {
        let expected = PantsDecomposition::new(n, (3..n).map(|j| Chord::new(1, j, n).unwrap())).unwrap();
        assert_eq!(fan_path(n).unwrap().start, expected);
    }
}
