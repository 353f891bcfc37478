//! The exact identities at one degree, as a pass/fail table.

use fcc_trig::boundary::congruent_orbit_index;
use fcc_trig::index_sets::{
    generate_hn, generate_hn_circ, generate_hn_star, generate_lambda_n, stratum_of_index, weight_c, StratumLabel,
};
use fcc_trig::interpolation::{fundamental, fundamental_reference};
use fcc_trig::kernels::{
    dirichlet, dirichlet_product, dirichlet_reference, phi_n, phi_n_reference, phi_n_star, phi_n_star_reference,
};
use fcc_trig::lattice::phi;
use fcc_trig::transforms::{cubature_dodeca, cubature_tetra, inner_n, inner_n_star};
use fcc_trig::trig_basis::{tc, tc_reference, ts, ts_reference, TetraIndex};
use fcc_trig::{Complex64, HIndex, HomoPoint, InterpKind, Interpolant, Ratio};
use serde::Serialize;

use crate::args::VerifyArgs;
use crate::error::CliError;
use crate::output::emit;

const EXACT: f64 = 1e-10;
const CLOSED_FORM: f64 = 1e-9;

#[derive(Debug, Serialize)]
pub struct CheckRow {
    pub check: &'static str,
    pub status: &'static str,
    pub detail: String,
}

fn row(check: &'static str, pass: bool, detail: String) -> CheckRow {
    CheckRow { check, status: if pass { "PASS" } else { "FAIL" }, detail }
}

fn max_err(errors: impl IntoIterator<Item = f64>) -> f64 {
    errors.into_iter().fold(0.0, |m, e| if e.is_nan() { f64::INFINITY } else { m.max(e) })
}

fn tolerance_row(check: &'static str, err: f64, tol: f64, what: String) -> CheckRow {
    row(check, err < tol, format!("{what}; max abs err {err:.2e}"))
}

/// Deterministic points: an additive recurrence in lattice coordinates, plus
/// points within `1e-7` of integer coordinates.
fn probe_points(count: usize) -> Vec<HomoPoint> {
    let alpha = [2f64.sqrt(), 3f64.sqrt(), 5f64.sqrt()];
    let mut pts: Vec<HomoPoint> = (1..=count)
        .map(|i| {
            let u = alpha.map(|a| (i as f64 * a).fract() * 2.0 - 1.0);
            HomoPoint::new([u[0], u[1], u[2], -(u[0] + u[1] + u[2])])
        })
        .collect();
    let eps = 1e-7;
    pts.extend([
        HomoPoint::new([eps, -eps, 0.0, 0.0]),
        HomoPoint::new([1.0 + eps, -1.0, 0.3, -0.3 - eps]),
        HomoPoint::new([0.5, 0.5 - eps, -0.5, -0.5 + eps]),
        HomoPoint::new([0.75 + eps, -0.25, -0.25, -0.25 - eps]),
    ]);
    pts
}

fn cardinalities(n: u32) -> CheckRow {
    let m = u64::from(n);
    let star = generate_hn_star(n);
    let mut ok = generate_hn(n).len() as u64 == 4 * m.pow(3)
        && star.len() as u64 == (m + 1).pow(4) - m.pow(4)
        && generate_hn_circ(n).len() as u64 == m.pow(4) - (m - 1).pow(4);
    for label in StratumLabel::BOUNDARY {
        let got = star.iter().filter(|k| stratum_of_index(k, n).ok() == Some(label)).count() as u64;
        ok &= got == label.count(n);
    }
    row("cardinalities", ok, format!("|H_n|, |H_n*|, |H_n°| and six strata at n={n}"))
}

fn weights(n: u32) -> CheckRow {
    let target = 4 * i64::from(n).pow(3);
    let c = generate_hn_star(n)
        .iter()
        .map(|k| weight_c(k, n))
        .try_fold(Ratio::from_integer(0), |acc, w| w.map(|w| acc + w));
    let lambda: i64 = generate_lambda_n(n).iter().map(|(_, s)| i64::from(s.weight())).sum();
    let ok = c.as_ref().map(|c| c.is_integer() && c.to_integer() == target).unwrap_or(false) && lambda == target;
    let c_str = c.map(|c| c.to_string()).unwrap_or_else(|e| e.to_string());
    row("weight sums", ok, format!("Σc = {c_str}, Σλ = {lambda}, 4n³ = {target}"))
}

fn orthonormality(n: u32) -> CheckRow {
    let h = generate_hn(n);
    // All pairs when affordable, otherwise every k against an evenly spread subset.
    let stride = (h.len() / 64).max(1);
    let mut errs = Vec::new();
    for k in &h {
        for j in h.iter().step_by(stride).chain(std::iter::once(k)) {
            let want = if k == j { 1.0 } else { 0.0 };
            let f = |t: &HomoPoint| phi(k, t);
            let g = |t: &HomoPoint| phi(j, t);
            let a = inner_n(&f, &g, n).map(|v| (v - want).norm()).unwrap_or(f64::INFINITY);
            let b = inner_n_star(&f, &g, n).map(|v| (v - want).norm()).unwrap_or(f64::INFINITY);
            errs.push(a.max(b));
        }
    }
    tolerance_row("discrete orthonormality", max_err(errs.iter().copied()), EXACT, format!("{} pairs", errs.len()))
}

fn cubature(n: u32) -> CheckRow {
    let mut errs = Vec::new();
    for m in generate_hn_star(2 * n - 1) {
        let want = if m == HIndex::ZERO { 1.0 } else { 0.0 };
        let v = cubature_dodeca(&|t: &HomoPoint| phi(&m, t), n);
        errs.push(v.map(|v| (v - want).norm()).unwrap_or(f64::INFINITY));
    }
    for (m, _) in generate_lambda_n(2 * n - 1) {
        let want = if m == HIndex::ZERO { 1.0 } else { 0.0 };
        let k = TetraIndex::new(m).expect("Λ is ordered");
        let v = cubature_tetra(&|t: &HomoPoint| tc(&k, t), n);
        errs.push(v.map(|v| (v - want).norm()).unwrap_or(f64::INFINITY));
    }
    tolerance_row(
        "cubature exactness",
        max_err(errs.iter().copied()),
        EXACT,
        format!("φ_m over H*_{0} and TC_m over Λ_{0}", 2 * n - 1),
    )
}

fn compact_forms(n: u32) -> CheckRow {
    let points = probe_points(40);
    let mut errs = Vec::new();
    for t in &points {
        let d = dirichlet_reference(n, t);
        errs.push((dirichlet(n, t) - d).norm());
        errs.push((dirichlet_product(n, t) - d).norm());
        errs.push((phi_n_star(n, t) - phi_n_star_reference(n, t)).norm());
        errs.push((phi_n(n, t) - phi_n_reference(n, t)).norm());
    }
    let lambda: Vec<TetraIndex> =
        generate_lambda_n(n).into_iter().map(|(k, _)| TetraIndex::new(k).expect("Λ is ordered")).collect();
    for (i, t) in points.iter().enumerate() {
        let k = &lambda[i % lambda.len()];
        errs.push((tc(k, t) - tc_reference(k, t)).norm());
        if k.is_strict() {
            let e = match (ts(k, t), ts_reference(k, t)) {
                (Ok(a), Ok(b)) => (a - b).norm(),
                _ => f64::INFINITY,
            };
            errs.push(e);
        }
    }
    for kind in [InterpKind::Ln, InterpKind::LnStar] {
        if n < kind.min_degree() {
            continue;
        }
        let nodes = kind.nodes(n);
        for (i, t) in points.iter().enumerate() {
            let j = &nodes[i % nodes.len()];
            let e = match (fundamental(kind, n, j, t), fundamental_reference(kind, n, j, t)) {
                (Ok(a), Ok(b)) => (a - b).norm(),
                _ => f64::INFINITY,
            };
            errs.push(e);
        }
    }
    tolerance_row(
        "compact vs direct",
        max_err(errs.iter().copied()),
        CLOSED_FORM,
        format!("D_n, Φ_n*, Φ_n, TC, TS, fundamentals at {} points", points.len()),
    )
}

fn probe(t: &HomoPoint) -> Complex64 {
    let c = t.coords();
    Complex64::new((c[0] - 0.3 * c[1]).cos() + c[2] * c[3], (2.0 * c[0]).sin() * c[1])
}

fn interpolation(n: u32) -> CheckRow {
    let mut errs = Vec::new();
    let mut kinds = Vec::new();
    for kind in InterpKind::ALL {
        if n < kind.min_degree() {
            continue;
        }
        kinds.push(kind.name());
        let interp = match Interpolant::from_fn(kind, &probe, n) {
            Ok(i) => i,
            Err(_) => {
                errs.push(f64::INFINITY);
                continue;
            }
        };
        for j in kind.nodes(n) {
            let want: Complex64 = if kind == InterpKind::InStar {
                congruent_orbit_index(&j, n)
                    .map(|o| o.iter().map(|k| probe(&HomoPoint::from_index(k, n))).sum())
                    .unwrap_or(Complex64::new(f64::NAN, 0.0))
            } else {
                probe(&HomoPoint::from_index(&j, n))
            };
            errs.push((interp.eval(&HomoPoint::from_index(&j, n)) - want).norm());
        }
    }
    tolerance_row("interpolation conditions", max_err(errs.iter().copied()), CLOSED_FORM, kinds.join(" "))
}

pub fn checks(n: u32) -> Result<Vec<CheckRow>, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    Ok(vec![cardinalities(n), weights(n), orthonormality(n), cubature(n), compact_forms(n), interpolation(n)])
}

pub fn verify(args: &VerifyArgs) -> Result<(), CliError> {
    let rows = checks(args.n)?;
    emit(&rows, &args.output)?;
    let failed: Vec<&str> = rows.iter().filter(|r| r.status == "FAIL").map(|r| r.check).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failed.join(", ")))
    }
}
