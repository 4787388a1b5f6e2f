//! One check per acceptance criterion, run by a plain `main` so every
//! `PASS` or `FAIL` line is printed. Exits non-zero if any check fails.

use std::collections::BTreeMap;
use std::fs;
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pantsdrill::carried::{
    canonical_torus, compression_witness, enumerate_carried, heegaard_lower_bound, Carrier, NormalFormStatus,
    DEFAULT_ORBIT_CAP,
};
use pantsdrill::drilling::loops_by_chord;
use pantsdrill::fan::{
    build_fan_path, check_no_universal_curve, check_pants_kinds, step_decomposition, step_flip, FanPathSpec,
};
use pantsdrill::io::{
    complex_to_json, from_json, parse_complex_json, parse_path_json, parse_surfaces_json, parse_triangulation_json,
    path_to_json, surfaces_to_json, to_json, triangulation_to_json,
};
use pantsdrill::pants_graph::{apply_a_move, enumerate_decompositions, validate_path, MoveKind};
use pantsdrill::pipeline::{run_pipeline, PipelineConfig, PipelineReport, TriFormat};
use pantsdrill::surface::{Chord, PantsDecomposition, Rotation, SurfaceType};
use pantsdrill::triangulation::{parse_tri_text, to_tri_text, triangulate, volume_bound, V_OCT};
use pantsdrill::{build_drilled_complex, fan_path};

fn verdict(id: u32, title: &str, ok: bool, detail: String) -> bool {
    println!(
        "criterion {id:>2} {}: {title} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn secs(d: Duration) -> String {
    format!("{:.3} s", d.as_secs_f64())
}

fn c01_fan_path() -> bool {
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in 5..=12u32 {
        let path = build_fan_path(FanPathSpec::new(n, n).unwrap()).unwrap();
        let r = validate_path(&path);
        let fan = PantsDecomposition::new(n, (3..n).map(|j| Chord::new(1, j, n).unwrap())).unwrap();
        let m = (n * (n - 3)) as usize;
        let all_a = path.moves().all(|(k, _, _)| k == MoveKind::A);
        if !(r.ok
            && r.closes
            && r.length == m
            && r.a_moves == m
            && r.s_moves == 0
            && r.monodromy == 0
            && all_a
            && path.start == fan)
        {
            bad.push(n);
        }
    }
    let el = t.elapsed();
    verdict(
        1,
        "two-fan path closes with n(n-3) A-moves from the fan at gap 1, n = 5..12",
        bad.is_empty() && el < Duration::from_secs(1),
        format!("failures {bad:?}, {}", secs(el)),
    )
}

fn c02_formula_vs_flip() -> bool {
    let mut checks = 0;
    let mut bad = 0;
    for n in 5..=10u32 {
        let m = (n * (n - 3)) as usize;
        let mut replay = step_decomposition(n, 0).unwrap();
        for idx in 0..=m {
            checks += 1;
            if replay != step_decomposition(n, idx).unwrap() {
                bad += 1;
            }
            if idx < m {
                let (removed, inserted) = step_flip(n, idx);
                let (next, rec) = apply_a_move(&replay, removed).unwrap();
                if rec.inserted != inserted {
                    bad += 1;
                }
                replay = next;
            }
        }
    }
    verdict(
        2,
        "closed-form decompositions equal flip replay for n <= 10",
        bad == 0,
        format!("{checks} decompositions compared, {bad} mismatches"),
    )
}

fn brute_force_catalan(n: u32) -> usize {
    let mut diagonals = Vec::new();
    for a in 1..=n {
        for b in a + 2..=n {
            if !(a == 1 && b == n) {
                diagonals.push((a, b));
            }
        }
    }
    let cross = |x: (u32, u32), y: (u32, u32)| {
        let inside = |g: u32| x.0 < g && g < x.1;
        let shared = x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1;
        !shared && inside(y.0) != inside(y.1)
    };
    let k = n as usize - 3;
    let mut count = 0;
    let mut stack = vec![(0usize, Vec::<usize>::new())];
    while let Some((next, chosen)) = stack.pop() {
        if chosen.len() == k {
            count += 1;
            continue;
        }
        for i in next..diagonals.len() {
            if chosen.iter().all(|&j| !cross(diagonals[i], diagonals[j])) {
                let mut c = chosen.clone();
                c.push(i);
                stack.push((i + 1, c));
            }
        }
    }
    count
}

fn c03_counting_laws() -> bool {
    let t = Instant::now();
    let mut seen = 0usize;
    let mut bad = 0usize;
    let mut check = |p: &PantsDecomposition| {
        let n = p.n();
        let st = SurfaceType::punctured_sphere(n).unwrap();
        let genus = 0i64;
        let curves = p.chords().len() as i64;
        let pants = p.triangles().map(|t| t.len() as i64).unwrap_or(-1);
        seen += 1;
        if curves != 3 * genus - 3 + n as i64
            || curves != st.curve_count()
            || pants != -st.euler_characteristic()
            || pants != n as i64 - 2
        {
            bad += 1;
        }
    };
    for n in 5..=12 {
        for p in fan_path(n).unwrap().decompositions() {
            check(p);
        }
    }
    let mut catalan = BTreeMap::new();
    for n in 5..=8 {
        let listed = enumerate_decompositions(n).unwrap();
        for p in &listed {
            check(p);
        }
        catalan.insert(n, (listed.len(), brute_force_catalan(n)));
    }
    let expected = BTreeMap::from([(5, (5, 5)), (6, (14, 14)), (7, (42, 42)), (8, (132, 132))]);
    let el = t.elapsed();
    verdict(
        3,
        "curve and pants counts on every decomposition, Catalan counts 5/14/42/132",
        bad == 0 && catalan == expected && el < Duration::from_secs(5),
        format!(
            "{seen} decompositions, {bad} violations, counts {catalan:?}, {}",
            secs(el)
        ),
    )
}

fn c04_pants_kinds() -> bool {
    let bad: Vec<u32> = (5..=12)
        .filter(|&n| !check_pants_kinds(&fan_path(n).unwrap()))
        .collect();
    verdict(
        4,
        "every pants on the two-fan paths n <= 12 is a twice-punctured disk or punctured annulus",
        bad.is_empty(),
        format!("failures {bad:?}"),
    )
}

fn c05_drilled_complex() -> bool {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in 5..=7u32 {
        let path = fan_path(n).unwrap();
        let c = build_drilled_complex(&path).unwrap();
        let m = (n * (n - 3)) as usize;
        let counts = (c.loops.len(), c.cells.len(), c.regions.len());
        let mut chords: Vec<Chord> = path.moves().map(|(_, _, ins)| ins).collect();
        chords.sort();
        chords.dedup();
        let twice = chords.iter().all(|ch| {
            loops_by_chord(&c, ch.a(), ch.b())
                .map(|l| l.len() == 2)
                .unwrap_or(false)
        });
        let good = counts == (m, 2 * m, m) && twice && check_no_universal_curve(&path) && c.validate().is_ok();
        ok &= good;
        notes.push(format!("n={n}: {counts:?} over {} chords", chords.len()));
    }
    verdict(
        5,
        "m loops, 2m cells, m A-regions, each chord drilled twice, no universal curve",
        ok,
        notes.join("; "),
    )
}

fn c06_triangulation() -> bool {
    let mut ok = true;
    let mut notes = Vec::new();
    let mut n7 = Duration::ZERO;
    for n in 5..=7u32 {
        let t = Instant::now();
        let c = build_drilled_complex(&fan_path(n).unwrap()).unwrap();
        let oct = pantsdrill::triangulation::assemble(&c).unwrap();
        let complete = oct.check_complete().is_ok();
        let (tri, r) = triangulate(&c).unwrap();
        let involutive = tri.check_gluings().is_ok();
        let el = t.elapsed();
        if n == 7 {
            n7 = el;
        }
        let m = (n * (n - 3)) as usize;
        let good = oct.octahedra.len() == 2 * m
            && r.tetrahedra == 8 * m
            && complete
            && involutive
            && r.orientable
            && r.all_links_tori()
            && r.cusps == n as usize + m;
        ok &= good;
        notes.push(format!(
            "n={n}: {} oct, {} tets, {} cusps",
            oct.octahedra.len(),
            r.tetrahedra,
            r.cusps
        ));
    }
    verdict(
        6,
        "2m octahedra, 8m tetrahedra, involutive gluings, orientable, torus cusps, n + m cusps",
        ok && n7 < Duration::from_secs(10),
        format!("{}; n=7 in {}", notes.join("; "), secs(n7)),
    )
}

/// `Λ(θ) = θ (1 - ln 2θ + Σ ζ(2k) / (k (2k+1)) (θ/π)^{2k})`.
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

fn c07_volume_bound() -> bool {
    let oracle = 8.0 * lobachevsky(std::f64::consts::FRAC_PI_4);
    let b = volume_bound(&fan_path(5).unwrap());
    let oct_ok = (oracle - V_OCT).abs() < 1e-10;
    let bound_ok =
        b.octahedra() == 20 && (b.bound - 20.0 * oracle).abs() < 1e-9 && (b.bound - 73.2772475342).abs() < 1e-9;
    let mut additive = true;
    for n in 5..=9u32 {
        for r1 in 1..n {
            let first = build_fan_path(FanPathSpec::new(n, r1).unwrap()).unwrap();
            let second = build_fan_path(FanPathSpec::new(n, n - r1).unwrap())
                .unwrap()
                .rotated(Rotation::new(n, r1 as i64));
            let whole = first.concat(&second).unwrap();
            let sum = volume_bound(&first) + volume_bound(&second);
            additive &= sum == volume_bound(&whole) && (sum.bound - volume_bound(&whole).bound).abs() < 1e-9;
        }
    }
    verdict(
        7,
        "volume bound of the pentagon path is 20 V_oct, additive under concatenation",
        oct_ok && bound_ok && additive,
        format!("V_oct oracle {oracle:.12}, bound {:.10}, additive {additive}", b.bound),
    )
}

fn c08_torus_uniqueness() -> bool {
    let t = Instant::now();
    let c = build_drilled_complex(&fan_path(5).unwrap()).unwrap();
    let all = enumerate_carried(&c, true).unwrap();
    let classes = Carrier::new(&c).classify(&all, DEFAULT_ORBIT_CAP);
    let torus = canonical_torus(&c).unwrap();
    let orbits: std::collections::BTreeSet<usize> = classes.iter().map(|k| k.orbit).collect();
    let rep_ok = classes.iter().all(|k| k.normal_form.surface == torus);
    let inv = (torus.euler, torus.genus, torus.punctures);
    let el = t.elapsed();
    verdict(
        8,
        "annuli-only enumeration at n = 5 gives one orbit, represented by T",
        orbits.len() == 1 && rep_ok && inv == (-10, 1, 10) && el < Duration::from_secs(30),
        format!(
            "{} surfaces, {} orbits, T invariants {inv:?}, {}",
            all.len(),
            orbits.len(),
            secs(el)
        ),
    )
}

fn c09_normal_form_collapse() -> bool {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in [6u32, 7] {
        let t = Instant::now();
        let c = build_drilled_complex(&fan_path(n).unwrap()).unwrap();
        let all = enumerate_carried(&c, true).unwrap();
        let torus = canonical_torus(&c).unwrap();
        let classes = Carrier::new(&c).classify(&all, DEFAULT_ORBIT_CAP);
        let undecided = classes
            .iter()
            .filter(|k| k.normal_form.status == NormalFormStatus::Undecided)
            .count();
        let to_torus = classes
            .iter()
            .filter(|k| k.normal_form.status == NormalFormStatus::Reduced && k.normal_form.surface == torus)
            .count();
        ok &= undecided == 0 && to_torus == all.len() && !all.is_empty();
        notes.push(format!(
            "n={n}: {}/{} reduce to T, {undecided} undecided, {}",
            to_torus,
            all.len(),
            secs(t.elapsed())
        ));
    }
    verdict(
        9,
        "every annuli-only surface at n = 6, 7 reduces to T",
        ok,
        notes.join("; "),
    )
}

fn c10_compression_witness() -> bool {
    let c = build_drilled_complex(&fan_path(5).unwrap()).unwrap();
    let w = compression_witness(&c).unwrap();
    let torus = canonical_torus(&c).unwrap();
    let labels: Vec<(u32, u32)> = w.loops.iter().map(|l| (l.label.center, l.label.far)).collect();
    let in_torus = w.annuli.iter().all(|a| torus.cells().contains(a));
    let touches = |cell: usize, l: usize| c.cells[cell].edge_on_loop(l).is_some();
    let adjacent = touches(w.annuli[0], w.loops[0].id)
        && touches(w.annuli[0], w.loops[1].id)
        && touches(w.annuli[1], w.loops[1].id)
        && touches(w.annuli[1], w.loops[2].id);
    let ok = labels == [(1, 3), (1, 4), (2, 4)] && in_torus && adjacent && w.consecutive_in_torus;
    verdict(
        10,
        "witness loops (1,3), (1,4), (2,4) bound two consecutive annuli of T",
        ok,
        format!("labels {labels:?}, annuli {:?}", w.annuli),
    )
}

fn c11_heegaard_bound() -> bool {
    let bad: Vec<u32> = (1..=100u32)
        .filter(|&n| heegaard_lower_bound(n).ok() != Some(n / 2 + n % 2))
        .collect();
    verdict(
        11,
        "Heegaard lower bound is ceil(n/2) for n = 1..100",
        bad.is_empty(),
        format!("failures {bad:?}"),
    )
}

fn c12_format_roundtrips() -> bool {
    let mut failures = Vec::new();
    let mut files = 0;
    for n in [5u32, 8] {
        for format in [TriFormat::Json, TriFormat::Tri] {
            let dir = tempfile::tempdir().unwrap();
            let mut cfg = PipelineConfig::new(n, dir.path());
            cfg.format = format;
            run_pipeline(&cfg).unwrap();
            let read = |name: &str| fs::read_to_string(dir.path().join(name)).unwrap();
            let mut same = |name: &str, re: String| {
                files += 1;
                if re != read(name) {
                    failures.push(format!("n={n} {name}"));
                }
            };
            same("path.json", path_to_json(&parse_path_json(&read("path.json")).unwrap()));
            same(
                "complex.json",
                complex_to_json(&parse_complex_json(&read("complex.json")).unwrap()),
            );
            same(
                "surfaces.json",
                surfaces_to_json(&parse_surfaces_json(&read("surfaces.json")).unwrap()),
            );
            let report: PipelineReport = from_json(&read("report.json")).unwrap();
            same("report.json", to_json(&report));
            match format {
                TriFormat::Json => same(
                    "triangulation.json",
                    triangulation_to_json(&parse_triangulation_json(&read("triangulation.json")).unwrap()),
                ),
                TriFormat::Tri => same(
                    "triangulation.tri",
                    to_tri_text(&parse_tri_text(&read("triangulation.tri")).unwrap()),
                ),
            }
        }
    }
    verdict(
        12,
        "byte-exact re-emission of every artifact at n = 5 and n = 8",
        failures.is_empty(),
        format!("{files} files re-emitted, mismatches {failures:?}"),
    )
}

fn main() -> ExitCode {
    let checks: [(u32, fn() -> bool); 12] = [
        (1, c01_fan_path),
        (2, c02_formula_vs_flip),
        (3, c03_counting_laws),
        (4, c04_pants_kinds),
        (5, c05_drilled_complex),
        (6, c06_triangulation),
        (7, c07_volume_bound),
        (8, c08_torus_uniqueness),
        (9, c09_normal_form_collapse),
        (10, c10_compression_witness),
        (11, c11_heegaard_bound),
        (12, c12_format_roundtrips),
    ];
    let mut failed = 0;
    for (id, check) in checks {
        let ok = panic::catch_unwind(check).unwrap_or_else(|_| {
            println!("criterion {id:>2} FAIL: panicked");
            false
        });
        if !ok {
            failed += 1;
        }
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
