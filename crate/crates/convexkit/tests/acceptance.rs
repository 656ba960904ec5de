//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Tolerances are the stated ones; randomness is seeded, so the suite
//! is deterministic.

use std::f64::consts::PI;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use convexkit::extremal::{
    pareto_perturbation_scan, pareto_vector_isoperimetric, solve_external_urysohn_triangle,
    stadium, urysohn_perturbation_scan, verify_external_optimality, verify_flattening_optimality,
    FlatteningCertificate,
};
use convexkit::geom::hausdorff_convex;
use convexkit::majorize::{
    affinely_majorizes, cfm_check, convex_gap, decomposition_complete, decomposition_hypothesis,
    linearly_majorizes, reshetnyak_gap, violating_convex_function, ConvexTestFunction,
    PointMeasure, SublinearFunction,
};
use convexkit::measure::{
    blaschke_sum, mixed_volume, surface_measure, volume,
};
use convexkit::rotation::{rotate_profile, rotation_pareto_scan, rotation_volume};
use convexkit::support::{
    contains_up_to_translation, integral_breadth, minkowski_sum, scale, ConvexFigure, Direction,
    DirectionGrid,
};
use convexkit::Vec2;

fn grid(n: usize) -> DirectionGrid {
    DirectionGrid::new(n).unwrap()
}

/// Random full-dimensional polygon with 3-12 hull vertices, roughly unit
/// scale, at a random offset.
fn random_polygon(rng: &mut ChaCha8Rng) -> ConvexFigure {
    loop {
        let k = rng.gen_range(3..=12);
        let cx = rng.gen_range(-0.3..0.3);
        let cy = rng.gen_range(-0.3..0.3);
        let pts: Vec<Vec2> = (0..k)
            .map(|_| {
                let a = rng.gen_range(0.0..2.0 * PI);
                let r = rng.gen_range(0.2..1.0);
                Vec2::new(cx + r * a.cos(), cy + r * a.sin())
            })
            .collect();
        if let Ok(fig) = ConvexFigure::from_points(&pts) {
            if !fig.is_degenerate() && fig.vertices().len() >= 3 {
                return fig;
            }
        }
    }
}

fn verdict(n: usize, what: &str, pass: bool) {
    println!("[{}] criterion {n}: {what}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {n} failed: {what}");
}

#[test]
fn criterion_01_mixed_area_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut ok = true;
    for _ in 0..200 {
        let x = random_polygon(&mut rng);
        let y = random_polygon(&mut rng);
        let a = mixed_volume(&x, &y).unwrap();
        let b = mixed_volume(&y, &x).unwrap();
        if (a - b).abs() > 1e-9 * a.abs().max(b.abs()) {
            ok = false;
        }
    }
    verdict(1, "mixed-area symmetry on 200 random polygon pairs", ok);
}

#[test]
fn criterion_02_minkowski_first_inequality() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut ok = true;
    for _ in 0..200 {
        let x = random_polygon(&mut rng);
        let y = random_polygon(&mut rng);
        let v1 = mixed_volume(&y, &x).unwrap();
        if v1 * v1 < volume(&x) * volume(&y) - 1e-9 {
            ok = false;
        }
        // Homothets: equality within 1e-6 relative.
        let lambda = rng.gen_range(0.3..2.5);
        let z = scale(&x, lambda).unwrap();
        let v1h = mixed_volume(&z, &x).unwrap();
        let prod = volume(&x) * volume(&z);
        if (v1h * v1h - prod).abs() > 1e-6 * prod {
            ok = false;
        }
    }
    verdict(2, "Minkowski's first inequality, equality for homothets", ok);
}

#[test]
fn criterion_03_blaschke_equals_minkowski() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut ok = true;
    for _ in 0..100 {
        let x = random_polygon(&mut rng);
        let y = random_polygon(&mut rng);
        let bs = blaschke_sum(&x, &y).unwrap();
        let ms = minkowski_sum(&x, &y);
        let ms = ms.translate(-ms.centroid());
        let d = hausdorff_convex(bs.vertices(), ms.vertices());
        if d > 1e-9 * ms.diameter() {
            ok = false;
        }
    }
    verdict(3, "Blaschke sum coincides with Minkowski sum up to translation (100 pairs)", ok);
}

#[test]
fn criterion_04_majorization_iff_containment() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut disagreements = 0;
    for i in 0..100 {
        let x = random_polygon(&mut rng);
        let y = if i % 2 == 0 {
            // Contained case: a shrunk copy, possibly of another shape
            // drawn inside after scaling.
            let lambda = rng.gen_range(0.2..0.8);
            scale(&x, lambda).unwrap()
        } else {
            random_polygon(&mut rng)
        };
        let mx = surface_measure(&x).unwrap();
        let my = surface_measure(&y).unwrap();
        let feasible = linearly_majorizes(mx.as_discrete(), my.as_discrete()).is_some();
        let contained = contains_up_to_translation(&x, &y).is_some();
        if feasible != contained {
            disagreements += 1;
        }
    }
    verdict(
        4,
        "linear majorization of surface measures iff containment up to translation (100 pairs)",
        disagreements == 0,
    );
}

#[test]
fn criterion_05_reshetnyak_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut ok = true;
    let mut feasible_count = 0;
    while feasible_count < 40 {
        let x = random_polygon(&mut rng);
        let lambda = rng.gen_range(0.2..0.8);
        let y = scale(&x, lambda).unwrap();
        let mx = surface_measure(&x).unwrap();
        let my = surface_measure(&y).unwrap();
        if linearly_majorizes(mx.as_discrete(), my.as_discrete()).is_none() {
            continue;
        }
        feasible_count += 1;
        for _ in 0..100 {
            let p = SublinearFunction::random(&mut rng, 5);
            if reshetnyak_gap(mx.as_discrete(), my.as_discrete(), &p) < -1e-9 {
                ok = false;
            }
        }
    }
    verdict(5, "Reshetnyak gap nonnegative for sublinear tests on feasible majorizations", ok);
}

/// Random point measure supported in a fixed triangle domain.
fn random_point_measure(rng: &mut ChaCha8Rng, k: usize) -> PointMeasure {
    let atoms = (0..k)
        .map(|_| {
            // Barycentric sample of the triangle (0,0), (2,0), (0.5, 1.5).
            let (mut u, mut v) = (rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
            if u + v > 1.0 {
                u = 1.0 - u;
                v = 1.0 - v;
            }
            let p = Vec2::new(2.0 * u + 0.5 * v, 1.5 * v);
            (p, rng.gen_range(0.2..1.0))
        })
        .collect();
    PointMeasure::new(atoms).unwrap()
}

#[test]
fn criterion_06_choquet_agrees_with_test_function_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut ok = true;
    for i in 0..50 {
        let k = rng.gen_range(3..=6);
        let mu = random_point_measure(&mut rng, k);
        let nu = if i % 2 == 0 {
            // Feasible by construction: group the mu atoms and replace each
            // group by its barycenter.
            let groups = rng.gen_range(1..=4usize);
            let mut parts: Vec<Vec<(Vec2, f64)>> = vec![Vec::new(); groups];
            for (j, &(p, w)) in mu.atoms().iter().enumerate() {
                parts[j % groups].push((p, w));
            }
            let atoms: Vec<(Vec2, f64)> = parts
                .into_iter()
                .filter(|g| !g.is_empty())
                .map(|g| {
                    let m: f64 = g.iter().map(|a| a.1).sum();
                    let b = g.iter().fold(Vec2::ZERO, |s, a| s + a.0 * a.1) / m;
                    (b, m)
                })
                .collect();
            PointMeasure::new(atoms).unwrap()
        } else {
            let k = rng.gen_range(2..=4);
            random_point_measure(&mut rng, k)
        };
        let feasible = affinely_majorizes(&mu, &nu).is_some();
        // Violation search: the LP dual witness plus a random family of
        // convex test functions.
        let witness = violating_convex_function(&mu, &nu);
        let family: Vec<ConvexTestFunction> =
            (0..100).map(|_| ConvexTestFunction::random(&mut rng, 4)).collect();
        let family_ok = cfm_check(&mu, &nu, &family);
        match (feasible, &witness) {
            (true, Some(_)) => ok = false,
            (true, None) => {
                if !family_ok {
                    ok = false;
                }
            }
            (false, Some(f)) => {
                if convex_gap(&mu, &nu, f) >= 0.0 {
                    ok = false;
                }
            }
            (false, None) => ok = false,
        }
    }
    verdict(6, "affine majorization agrees with convex-test-function violation search", ok);
}

#[test]
fn criterion_07_decomposition_theorem_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut ok = true;
    let mut checked = 0;
    let mut tried = 0;
    while checked < 50 && tried < 2000 {
        tried += 1;
        let f: Vec<f64> = (0..3).map(|_| rng.gen_range(0.0..1.0)).collect();
        let g: Vec<f64> = f
            .iter()
            .map(|&v| (v * rng.gen_range(0.5..1.1) + rng.gen_range(-0.1..0.1)).max(0.0))
            .collect();
        let cones: Vec<Vec<Vec<f64>>> = (0..2)
            .map(|_| {
                (0..rng.gen_range(1..=3))
                    .map(|_| (0..3).map(|_| rng.gen_range(0.0..1.0)).collect())
                    .collect()
            })
            .collect();
        if !decomposition_hypothesis(&f, &g, &cones).unwrap() {
            continue;
        }
        checked += 1;
        for _ in 0..20 {
            // Random decomposition of g into two nonnegative parts.
            let t: Vec<f64> = (0..3).map(|_| rng.gen_range(0.0..1.0)).collect();
            let g1: Vec<f64> = g.iter().zip(&t).map(|(&v, &s)| v * s).collect();
            let g2: Vec<f64> = g.iter().zip(&t).map(|(&v, &s)| v * (1.0 - s)).collect();
            if decomposition_complete(&f, &[g1, g2], &cones).unwrap().is_none() {
                ok = false;
            }
        }
    }
    verdict(
        7,
        "decomposition hypothesis implies a matching decomposition (50 instances x 20 splits)",
        ok && checked == 50,
    );
}

#[test]
fn criterion_08_classical_isoperimetric_recovery() {
    let g = grid(360);
    let disk = ConvexFigure::disk(Vec2::ZERO, 1.0, g.len()).unwrap();
    let (xbar, _) = pareto_vector_isoperimetric(&[disk.clone()], &[1.0], PI).unwrap();
    let area_ok = (volume(&xbar) - PI).abs() <= 1e-9 * PI;
    let breadth_ok = (integral_breadth(&xbar, g) - PI).abs() <= 0.002 * PI;
    let scan = pareto_perturbation_scan(&xbar, &[disk], PI, g, 1000, 0.02, 0).unwrap();
    let scan_ok = scan.feasible_samples > 500 && scan.best_improvement <= 1e-6;
    verdict(
        8,
        "isoperimetric recovery: disk of area pi, breadth within 0.2%, 1000-sample scan clean",
        area_ok && breadth_ok && scan_ok,
    );
}

#[test]
fn criterion_09_triangle_external_urysohn() {
    let g = grid(720);
    let tri = ConvexFigure::equilateral_triangle(1.0).unwrap();
    let ball = ConvexFigure::unit_ball(g);
    let r = 1.0 / 3f64.sqrt();
    let b_tri = integral_breadth(&tri, g);
    let b_disk = r * integral_breadth(&ball, g);
    let mut ok = true;
    for t in [0.25, 0.5, 0.75] {
        let target = b_tri + t * (b_disk - b_tri);
        let (body, cert) = solve_external_urysohn_triangle(1.0, target, g).unwrap();
        let report = verify_external_optimality(&body, &tri, &cert, 1e-5, g);
        if !report.pass() || report.conditions.iter().any(|c| c.residual > 1e-5) {
            eprintln!("target {target}: {:?}", report.conditions);
            ok = false;
        }
        let scan = urysohn_perturbation_scan(&body, &tri, target, g, 1000, 0.02, 0);
        if scan.feasible_samples < 500 || scan.best_improvement > 1e-6 {
            eprintln!(
                "target {target}: scan improvement {} over {} feasible",
                scan.best_improvement, scan.feasible_samples
            );
            ok = false;
        }
    }
    verdict(
        9,
        "triangle external Urysohn verified at grid 720 with clean 1000-sample scans",
        ok,
    );
}

#[test]
fn criterion_10_flattening_and_leidenfrost() {
    let g = grid(360);
    // Stadium in a large box: the decomposition holds exactly with no
    // residual atoms.
    let (r, l) = (1.0, 2.0);
    let st = stadium(r, l, g.len()).unwrap();
    let boxy = ConvexFigure::rect(Vec2::new(-50.0, -50.0), Vec2::new(50.0, 50.0)).unwrap();
    let cert = FlatteningCertificate {
        alpha: r,
        beta: l,
        residual: None,
        z_bar: Direction::new(PI / 2.0),
    };
    let report = verify_flattening_optimality(&st, &boxy, &cert, 1e-9, g);
    let exact = report
        .conditions
        .iter()
        .find(|c| c.name == "measure decomposition")
        .map(|c| c.residual < 1e-12)
        .unwrap_or(false);
    let flattening_ok = report.pass() && exact;

    // Rotating the circle profile gives the sphere volume.
    let disk = ConvexFigure::disk(Vec2::ZERO, 1.0, g.len()).unwrap();
    let sphere = rotate_profile(&disk, Direction::new(PI / 2.0), g).unwrap();
    let v = rotation_volume(&sphere);
    let sphere_ok = (v - 4.0 * PI / 3.0).abs() <= 0.005 * (4.0 * PI / 3.0);

    // No rotational perturbation dominates the rotated stadium.
    let spheroid = rotate_profile(&st, Direction::new(PI / 2.0), g).unwrap();
    let scan = rotation_pareto_scan(&spheroid, 500, 0.02, 0);
    let scan_ok = scan.feasible_samples > 250 && scan.best_improvement <= 1e-6;

    verdict(
        10,
        "flattening decomposition exact; sphere volume within 0.5%; rotational scan clean",
        flattening_ok && sphere_ok && scan_ok,
    );
}

#[test]
fn criterion_11_cli_determinism() {
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let fixtures = root.join("tests/fixtures");
    let golden = root.join("tests/golden");
    let cases: Vec<(&str, Vec<String>)> = vec![
        (
            "solve_stadium.json",
            vec![
                "solve".into(), "stadium".into(), "--r".into(), "1".into(),
                "--l".into(), "2".into(), "--grid".into(), "90".into(),
            ],
        ),
        (
            "render_square.svg",
            vec![
                "render".into(),
                fixtures.join("square.json").to_str().unwrap().into(),
                "--outline".into(),
                fixtures.join("triangle.json").to_str().unwrap().into(),
                "--atoms".into(),
                fixtures.join("measure_square.json").to_str().unwrap().into(),
            ],
        ),
    ];
    let mut ok = true;
    for (name, args) in &cases {
        let run = || {
            let out = std::process::Command::new(env!("CARGO_BIN_EXE_convexkit"))
                .args(args)
                .output()
                .expect("binary runs");
            assert!(out.status.success());
            String::from_utf8(out.stdout).unwrap()
        };
        let a = run();
        let b = run();
        let expected = std::fs::read_to_string(golden.join(name)).unwrap_or_default();
        if a != b || a != expected {
            ok = false;
        }
    }
    verdict(11, "CLI outputs byte-identical across runs and golden fixtures", ok);
}
