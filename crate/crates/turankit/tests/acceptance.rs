//! End-to-end acceptance suite: one numbered check per headline claim, each
//! printed as a PASS/FAIL line. The whole suite is a single test so that the
//! full scoreboard is always visible, even when one item regresses.

use turankit::bounds::{
    density_estimate, detect_nonmonotonicity, lb_infimum_scan, lemma26_margins,
    qtilde_quartic_coefficients, verify_prop29, verify_thm2_lower, verify_thm2a_upper,
    Verdict,
};
use turankit::grid::{interior_grid, unit_grid, Spacing};
use turankit::reference::f_endpoints;
use turankit::schemes::{OrthonormalScheme, RecurrenceScheme};
use turankit::turan::{
    check_fundamental, check_prop21, check_turanturan, normalized_turan, normalized_turan_row,
    script_d_n,
};

struct Scoreboard {
    rows: Vec<(usize, &'static str, bool, String)>,
}

impl Scoreboard {
    fn record(&mut self, id: usize, name: &'static str, pass: bool, detail: String) {
        println!(
            "acceptance {id:02} {name}: {} ({detail})",
            if pass { "PASS" } else { "FAIL" }
        );
        self.rows.push((id, name, pass, detail));
    }
}

const GRID_POINTS: usize = 201;

fn families_for_lower_bound() -> Vec<RecurrenceScheme> {
    vec![
        RecurrenceScheme::jacobi(0.0).unwrap(),
        RecurrenceScheme::jacobi(0.5).unwrap(),
        RecurrenceScheme::jacobi(2.0).unwrap(),
        RecurrenceScheme::q_ultra(0.25, 0.5).unwrap(),
    ]
}

fn chebyshev_first_kind_identity(b: &mut Scoreboard) {
    let s = RecurrenceScheme::jacobi(-0.5).unwrap();
    let grid = interior_grid(GRID_POINTS, Spacing::Uniform);
    let mut worst = 0.0_f64;
    for &x in &grid {
        let row = normalized_turan_row(&s, 100, x).unwrap();
        for v in &row[1..] {
            worst = worst.max((v - 1.0).abs());
        }
    }
    b.record(1, "chebyshev determinant is 1", worst < 1e-11, format!("max |f-1| = {worst:.3e}"));
}

fn legendre_endpoints(b: &mut Scoreboard) {
    let s = RecurrenceScheme::jacobi(0.0).unwrap();
    let mut worst0 = 0.0_f64;
    let mut worst1 = 0.0_f64;
    for n in 1..=100 {
        let (f0, f1) = f_endpoints(0.0, n).unwrap();
        let at0 = normalized_turan(&s, n, 0.0).unwrap();
        worst0 = worst0.max((at0 - f0).abs() / f0);
        let at1 = normalized_turan(&s, n, 1.0).unwrap();
        worst1 = worst1.max((at1 - f1).abs());
    }
    b.record(
        2,
        "legendre endpoint values",
        worst0 < 1e-12 && worst1 < 1e-8,
        format!("x=0 rel err {worst0:.3e}, x->1 err {worst1:.3e}"),
    );
}

fn identity_residuals(b: &mut Scoreboard) {
    let grid = interior_grid(GRID_POINTS, Spacing::Uniform);
    let schemes = vec![
        RecurrenceScheme::jacobi_with_max(-0.75, 220).unwrap(),
        RecurrenceScheme::jacobi_with_max(0.0, 220).unwrap(),
        RecurrenceScheme::jacobi_with_max(0.5, 220).unwrap(),
        RecurrenceScheme::jacobi_with_max(2.0, 220).unwrap(),
        RecurrenceScheme::q_ultra_with_max(0.5, 0.25, 220).unwrap(),
        RecurrenceScheme::q_ultra_with_max(0.25, 0.5, 220).unwrap(),
        RecurrenceScheme::remark28_with_max(0.05, 220).unwrap(),
    ];
    let mut worst = 0.0_f64;
    let mut worst_label = String::new();
    for s in &schemes {
        for (label, r) in [
            ("one-step", check_prop21(s, (2, 200), &grid, 1e-9).unwrap().max_residual),
            ("fundamental", check_fundamental(s, (1, 200), &grid, 1e-9).unwrap().max_residual),
            ("determinant-of-determinant", check_turanturan(s, (1, 200), &grid, 1e-9).unwrap().max_residual),
        ] {
            if r > worst {
                worst = r;
                worst_label = format!("{label} on {}", s.descriptor().label());
            }
        }
    }
    b.record(
        3,
        "identity residuals",
        worst < 1e-9,
        format!("max relative residual {worst:.3e} ({worst_label})"),
    );
}

fn lower_bound_theorem(b: &mut Scoreboard) {
    let grid = interior_grid(GRID_POINTS, Spacing::Uniform);
    let mut pass = true;
    let mut min_margin = f64::INFINITY;
    let mut legendre_c = f64::NAN;
    for s in families_for_lower_bound() {
        let cert = verify_thm2_lower(&s, 200, &grid, 1e-10).unwrap();
        pass &= cert.verdict == Verdict::Pass && cert.min_margin >= -1e-10;
        min_margin = min_margin.min(cert.min_margin);
        if s.descriptor().label() == "jacobi:0" {
            legendre_c = cert.constant.unwrap();
        }
    }
    pass &= (legendre_c - 0.6).abs() < 1e-15;
    b.record(
        4,
        "lower turan bound",
        pass,
        format!("min margin {min_margin:.3e}, legendre constant {legendre_c}"),
    );
}

fn upper_bound_theorem(b: &mut Scoreboard) {
    let grid = interior_grid(GRID_POINTS, Spacing::Uniform);
    let mut pass = true;
    let mut min_margin = f64::INFINITY;
    for a in [-0.6, -0.75] {
        let s = RecurrenceScheme::jacobi(a).unwrap();
        let cert = verify_thm2a_upper(&s, 200, &grid, 1e-10).unwrap();
        pass &= cert.verdict == Verdict::Pass && cert.min_margin >= -1e-10;
        min_margin = min_margin.min(cert.min_margin);
    }
    // boundary family: determinant, c*Delta(0) and C*Delta(0) all coincide
    let s = RecurrenceScheme::jacobi(-0.5).unwrap();
    let cert = verify_thm2a_upper(&s, 200, &grid, 1e-11).unwrap();
    let equal = cert.constant.unwrap() == 1.0 && cert.min_margin.abs() < 1e-11;
    pass &= cert.verdict == Verdict::Pass && equal;
    b.record(
        5,
        "upper turan bound",
        pass,
        format!("min margin {min_margin:.3e}, boundary margin {:.3e}", cert.min_margin),
    );
}

fn product_sandwich(b: &mut Scoreboard) {
    let mut pass = true;
    let mut worst = f64::INFINITY;
    for s in [
        RecurrenceScheme::jacobi(0.0).unwrap(),
        RecurrenceScheme::jacobi(0.5).unwrap(),
        RecurrenceScheme::jacobi(2.0).unwrap(),
        RecurrenceScheme::q_ultra(0.25, 0.5).unwrap(),
    ] {
        let (left, right) = lemma26_margins(&s, 500).unwrap();
        let m = left.min(right);
        worst = worst.min(m);
        // equality cases (n = 1) sit exactly on the boundary
        pass &= m >= -1e-13;
    }
    b.record(6, "product sandwich", pass, format!("min margin {worst:.3e}"));
}

fn orthonormal_infimum(b: &mut Scoreboard) {
    let mut pass = true;
    let mut detail = String::new();
    for a in [0.5, 1.0, 2.0, 5.0] {
        let l = RecurrenceScheme::jacobi_with_max(a, 440)
            .unwrap()
            .to_orthonormal()
            .unwrap();
        let scan = lb_infimum_scan(&l, 400, 400).unwrap();
        let target = 2.0 / (2.0 * a + 3.0);
        let ok = scan.verdict == Verdict::Pass && scan.infimum >= target - 1e-9;
        pass &= ok;
        detail.push_str(&format!("a={a}: inf {:.4} >= {:.4}; ", scan.infimum, target));
    }
    let l = OrthonormalScheme::q_ultra_with_max(0.5, 0.25, 440).unwrap();
    let scan = lb_infimum_scan(&l, 400, 400).unwrap();
    pass &= scan.verdict == Verdict::Pass;
    detail.push_str(&format!("qultra inf {:.4} >= {:.4}", scan.infimum, scan.bound));
    b.record(7, "orthonormal infimum bound", pass, detail);
}

fn infimum_decay(b: &mut Scoreboard) {
    let mut pass = true;
    let mut detail = String::new();
    for a in [0.0, 0.25] {
        let l = RecurrenceScheme::jacobi_with_max(a, 440)
            .unwrap()
            .to_orthonormal()
            .unwrap();
        let small = lb_infimum_scan(&l, 50, 400).unwrap().infimum;
        let large = lb_infimum_scan(&l, 400, 400).unwrap().infimum;
        pass &= large < 0.5 * small;
        detail.push_str(&format!("a={a}: inf(400)={large:.4e} vs inf(50)={small:.4e}; "));
    }
    b.record(8, "infimum decay below threshold", pass, detail.trim_end().to_string());
}

fn flat_tail_closed_form(b: &mut Scoreboard) {
    let grid = interior_grid(101, Spacing::Uniform);
    let mut pass = true;
    let mut worst = 0.0_f64;
    for l0 in [0.55, 0.65] {
        let l = OrthonormalScheme::remark36_with_max(l0, 60).unwrap();
        let closed = |x: f64| 2.0 / (l0 * l0) * (l0.powi(4) - (l0 * l0 - 0.25) * x * x);
        for &x in &grid {
            let reference = script_d_n(&l, 2, x).unwrap();
            for n in 2..=50 {
                let v = script_d_n(&l, n, x).unwrap();
                let err = (v - closed(x)).abs().max((v - reference).abs());
                worst = worst.max(err);
                pass &= err < 1e-12;
            }
        }
    }
    b.record(9, "flat-tail closed form", pass, format!("max deviation {worst:.3e}"));
}

fn counterexample_nonmonotone(b: &mut Scoreboard) {
    let eps = 0.05_f64;
    let s = RecurrenceScheme::remark28(eps).unwrap();
    let grid = unit_grid(400, Spacing::Uniform);
    let scan = detect_nonmonotonicity(&s, 3, &grid).unwrap();
    let expected_a = 4.0 * eps * eps + 3.0 * eps - 0.5;
    let target_x2 = -expected_a / 2.0;
    let min_ok = scan
        .witnesses
        .iter()
        .any(|&(x, _, is_min)| is_min && (x * x - target_x2).abs() <= 0.02);
    let (a_coeff, _b_coeff) = qtilde_quartic_coefficients(&s).unwrap();
    let coeff_ok = (a_coeff - expected_a).abs() < 1e-14;
    b.record(
        10,
        "non-monotone counterexample",
        !scan.is_monotone && min_ok && coeff_ok,
        format!(
            "monotone={}, quartic coefficient {a_coeff:.15} vs {expected_a:.15}",
            scan.is_monotone
        ),
    );
}

fn second_kind_turan(b: &mut Scoreboard) {
    let grid = interior_grid(GRID_POINTS, Spacing::Uniform);
    let mut pass = true;
    let mut worst = f64::INFINITY;
    for s in families_for_lower_bound() {
        let cert = verify_prop29(&s, 200, &grid, 1e-11).unwrap();
        pass &= cert.verdict == Verdict::Pass && cert.min_margin >= -1e-11;
        worst = worst.min(cert.min_margin);
    }
    b.record(11, "second-kind turan and ratio sequence", pass, format!("min margin {worst:.3e}"));
}

fn density_estimates(b: &mut Scoreboard) {
    let grid = interior_grid(GRID_POINTS, Spacing::Uniform);
    let mut pass = true;
    let mut notes = String::new();

    // constant lambda = 1/2: exact semicircle-type density (2/pi) sqrt(1-x^2)
    let flat = OrthonormalScheme::from_table(vec![0.5; 440], Some(0.5)).unwrap();
    let est = density_estimate(&flat, 400, &grid).unwrap();
    let mut worst = 0.0_f64;
    for (&x, &g) in grid.iter().zip(&est.g) {
        let exact = 2.0 / std::f64::consts::PI * (1.0 - x * x).sqrt();
        worst = worst.max((g - exact).abs());
    }
    pass &= worst < 1e-12;
    notes.push_str(&format!("flat-table err {worst:.3e}; "));

    // legendre: density 1/2 at the origin
    let leg = RecurrenceScheme::jacobi_with_max(0.0, 440)
        .unwrap()
        .to_orthonormal()
        .unwrap();
    let est = density_estimate(&leg, 400, &grid).unwrap();
    let mid = grid.iter().position(|&x| x.abs() < 1e-12).unwrap();
    let g0 = est.g[mid];
    pass &= (0.49..=0.51).contains(&g0);
    notes.push_str(&format!("legendre g(0) = {g0:.4}; "));

    // envelope bound for an increasing-lambda family, 1% convergence allowance
    let j1 = RecurrenceScheme::jacobi_with_max(1.0, 440)
        .unwrap()
        .to_orthonormal()
        .unwrap();
    let est = density_estimate(&j1, 400, &grid).unwrap();
    let envelope_ok = est
        .g
        .iter()
        .zip(&est.bound_upper)
        .all(|(&g, &bound)| !g.is_nan() && g <= bound * 1.01 + 1e-12);
    pass &= envelope_ok;
    notes.push_str(&format!("envelope respected: {envelope_ok}"));

    b.record(12, "density estimates", pass, notes);
}

#[test]
fn acceptance() {
    let mut b = Scoreboard { rows: vec![] };
    chebyshev_first_kind_identity(&mut b);
    legendre_endpoints(&mut b);
    identity_residuals(&mut b);
    lower_bound_theorem(&mut b);
    upper_bound_theorem(&mut b);
    product_sandwich(&mut b);
    orthonormal_infimum(&mut b);
    infimum_decay(&mut b);
    flat_tail_closed_form(&mut b);
    counterexample_nonmonotone(&mut b);
    second_kind_turan(&mut b);
    density_estimates(&mut b);
    let failed: Vec<_> = b.rows.iter().filter(|r| !r.2).collect();
    assert!(failed.is_empty(), "failing acceptance checks: {failed:?}");
}
