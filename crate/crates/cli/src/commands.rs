use std::path::Path;

use fcc_trig::index_sets::{generate_lambda_n, stratum_of_index, weight_c, NodeSet};
use fcc_trig::interpolation::{fundamental, lebesgue_grid, lebesgue_interp};
use fcc_trig::kernels::{dirichlet, phi_n_star, PhiKernel};
use fcc_trig::lattice::from_homogeneous;
use fcc_trig::transforms::{cubature_dodeca, cubature_tetra, lebesgue_sn};
use fcc_trig::{Complex64, HIndex, HomoPoint, InterpKind, Interpolant};
use serde::{Deserialize, Serialize};

use crate::args::{
    CubatureArgs, InterpolateArgs, KernelArgs, KernelName, LebesgueArgs, LebesgueKind, NodesArgs, SetName,
};
use crate::builtins::resolve;
use crate::error::CliError;
use crate::output::emit;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeRow {
    pub j1: i64,
    pub j2: i64,
    pub j3: i64,
    pub j4: i64,
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
    pub t4: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub stratum: String,
    pub weight: String,
    pub weight_f64: f64,
}

impl NodeRow {
    fn new(k: &HIndex, n: u32, stratum: String, weight: (String, f64)) -> Self {
        let j = k.components();
        let t = HomoPoint::from_index(k, n).coords();
        let x = from_homogeneous(&HomoPoint::from_index(k, n));
        NodeRow {
            j1: j[0],
            j2: j[1],
            j3: j[2],
            j4: j[3],
            t1: t[0],
            t2: t[1],
            t3: t[2],
            t4: t[3],
            x1: x.x1,
            x2: x.x2,
            x3: x.x3,
            stratum,
            weight: weight.0,
            weight_f64: weight.1,
        }
    }
}

pub fn node_rows(set: SetName, n: u32) -> Result<Vec<NodeRow>, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if set == SetName::Lambda {
        return Ok(generate_lambda_n(n)
            .iter()
            .map(|(k, s)| NodeRow::new(k, n, s.name().to_string(), (s.weight().to_string(), f64::from(s.weight()))))
            .collect());
    }
    let nodes = match set {
        SetName::Hn => NodeSet::Hn,
        SetName::Hstar => NodeSet::HnStar,
        SetName::Hcirc => NodeSet::HnCirc,
        SetName::Lambda => unreachable!(),
    }
    .generate(n);
    nodes
        .iter()
        .map(|k| {
            let stratum = stratum_of_index(k, n)?.to_string();
            let weight = if set == SetName::Hn {
                ("1".to_string(), 1.0)
            } else {
                let c = weight_c(k, n)?;
                (c.to_string(), *c.numer() as f64 / *c.denom() as f64)
            };
            Ok(NodeRow::new(k, n, stratum, weight))
        })
        .collect()
}

pub fn nodes(args: &NodesArgs) -> Result<(), CliError> {
    emit(&node_rows(args.set, args.n)?, &args.output)
}

#[derive(Debug, Serialize, Deserialize)]
struct SampleRow {
    j1: i64,
    j2: i64,
    j3: i64,
    j4: i64,
    re: f64,
    im: f64,
}

fn read_samples(path: &Path) -> Result<Vec<(HIndex, Complex64)>, CliError> {
    let mut reader = csv::Reader::from_path(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    reader
        .deserialize::<SampleRow>()
        .map(|row| {
            let r = row?;
            Ok((HIndex::new([r.j1, r.j2, r.j3, r.j4])?, Complex64::new(r.re, r.im)))
        })
        .collect()
}

#[derive(Debug, Serialize)]
struct InterpRow {
    t1: f64,
    t2: f64,
    t3: f64,
    t4: f64,
    re: f64,
    im: f64,
    exact_re: Option<f64>,
    exact_im: Option<f64>,
    abs_err: Option<f64>,
}

pub fn interpolate(args: &InterpolateArgs) -> Result<(), CliError> {
    let kind = InterpKind::from(args.kind);
    let (interp, exact) = match (&args.samples, args.function) {
        (Some(path), _) => (Interpolant::from_values(kind, args.n, read_samples(path)?)?, None),
        (None, Some(b)) => {
            let f = resolve(b, args.k)?;
            (Interpolant::from_fn(kind, &f, args.n)?, Some(f))
        }
        (None, None) => return Err(CliError::Usage("need --f or --samples".into())),
    };
    let grid = lebesgue_grid(kind, args.grid);
    let values = interp.eval_many(&grid);
    let mut max_err: f64 = 0.0;
    let rows: Vec<InterpRow> = grid
        .iter()
        .zip(&values)
        .map(|(t, v)| {
            let c = t.coords();
            let e = exact.as_ref().map(|f| f(t));
            let err = e.map(|e| (e - v).norm());
            if let Some(err) = err {
                max_err = max_err.max(err);
            }
            InterpRow {
                t1: c[0],
                t2: c[1],
                t3: c[2],
                t4: c[3],
                re: v.re,
                im: v.im,
                exact_re: e.map(|e| e.re),
                exact_im: e.map(|e| e.im),
                abs_err: err,
            }
        })
        .collect();
    emit(&rows, &args.output)?;
    if exact.is_some() {
        eprintln!("{kind} n={} points={} max_abs_err={max_err:e}", args.n, rows.len());
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct CubatureRow {
    rule: &'static str,
    n: u32,
    re: f64,
    im: f64,
}

pub fn cubature(args: &CubatureArgs) -> Result<(), CliError> {
    let f = resolve(args.function, args.k)?;
    let (rule, v) = match args.set {
        SetName::Hstar => ("dodecahedron", cubature_dodeca(&f, args.n)?),
        SetName::Lambda => ("tetrahedron", cubature_tetra(&f, args.n)?),
        other => {
            return Err(CliError::Usage(format!(
                "cubature rules exist for --set hstar and --set lambda, not {other:?}"
            )))
        }
    };
    emit(&[CubatureRow { rule, n: args.n, re: v.re, im: v.im }], &args.output)
}

#[derive(Debug, Serialize)]
struct LebesgueRow {
    kind: &'static str,
    n: u32,
    grid: usize,
    estimate: f64,
    /// `estimate / (ln n)³`; empty at `n = 1`.
    ratio_log3: Option<f64>,
}

pub fn lebesgue(args: &LebesgueArgs) -> Result<(), CliError> {
    let (name, grid, estimate) = match args.kind {
        LebesgueKind::Sn => {
            let grid = args.grid.unwrap_or(17);
            ("sn", grid, lebesgue_sn(args.n, grid, args.quad)?)
        }
        k => {
            let kind = match k {
                LebesgueKind::In => InterpKind::In,
                LebesgueKind::Instar => InterpKind::InStar,
                LebesgueKind::Ln => InterpKind::Ln,
                _ => InterpKind::LnStar,
            };
            let grid = args.grid.unwrap_or(25);
            (kind.name(), grid, lebesgue_interp(args.n, kind, grid)?)
        }
    };
    let log3 = f64::from(args.n).ln().powi(3);
    let row = LebesgueRow { kind: name, n: args.n, grid, estimate, ratio_log3: (args.n > 1).then(|| estimate / log3) };
    emit(&[row], &args.output)
}

#[derive(Debug, Serialize)]
struct KernelRow {
    t1: f64,
    t2: f64,
    t3: f64,
    t4: f64,
    re: f64,
    im: f64,
}

pub fn kernel(args: &KernelArgs) -> Result<(), CliError> {
    let n = args.n;
    let kind = InterpKind::from(args.kind);
    let points = match args.t {
        Some(t) => vec![HomoPoint::new(t)],
        None if args.kernel == KernelName::Fundamental => lebesgue_grid(kind, args.grid),
        None => lebesgue_grid(InterpKind::In, args.grid),
    };
    let phi_kernel = (args.kernel == KernelName::Phi).then(|| PhiKernel::new(n));
    let node = match args.kernel {
        KernelName::Fundamental => {
            let k = args.k.ok_or_else(|| CliError::Usage("--f fundamental needs the node --k a,b,c,d".into()))?;
            Some(HIndex::new(k)?)
        }
        _ => None,
    };
    if matches!(args.kernel, KernelName::Phi | KernelName::Phistar) && n == 0 {
        return Err(CliError::Usage("--n must be at least 1 for this kernel".into()));
    }
    let rows = points
        .iter()
        .map(|t| {
            let v = match args.kernel {
                KernelName::Dirichlet => Complex64::new(dirichlet(n, t), 0.0),
                KernelName::Phistar => Complex64::new(phi_n_star(n, t), 0.0),
                KernelName::Phi => phi_kernel.as_ref().expect("built above").eval(t),
                KernelName::Fundamental => fundamental(kind, n, node.as_ref().expect("checked above"), t)?,
            };
            let c = t.coords();
            Ok(KernelRow { t1: c[0], t2: c[1], t3: c[2], t4: c[3], re: v.re, im: v.im })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    emit(&rows, &args.output)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::Format;
    use crate::output::render;

    #[test]
    fn node_json_round_trips_byte_for_byte() {
        for set in [SetName::Hn, SetName::Hstar, SetName::Hcirc, SetName::Lambda] {
            let rows = node_rows(set, 3).unwrap();
            let bytes = render(&rows, Format::Json).unwrap();
            let parsed: Vec<NodeRow> = serde_json::from_slice(&bytes).unwrap();
            assert_eq!(parsed, rows);
            assert_eq!(render(&parsed, Format::Json).unwrap(), bytes);
        }
    }

    #[test]
    fn node_csv_round_trips_byte_for_byte() {
        let rows = node_rows(SetName::Hstar, 2).unwrap();
        let bytes = render(&rows, Format::Csv).unwrap();
        let parsed: Vec<NodeRow> =
            csv::Reader::from_reader(bytes.as_slice()).deserialize().collect::<Result<_, _>>().unwrap();
        assert_eq!(render(&parsed, Format::Csv).unwrap(), bytes);
    }

    #[test]
    fn node_counts_and_weight_sums() {
        assert_eq!(node_rows(SetName::Lambda, 2).unwrap().len(), 10);
        assert_eq!(node_rows(SetName::Hstar, 1).unwrap().len(), 15);
        for n in 1..=4 {
            let target = 4.0 * f64::from(n).powi(3);
            for set in [SetName::Hn, SetName::Hstar, SetName::Lambda] {
                let sum: f64 = node_rows(set, n).unwrap().iter().map(|r| r.weight_f64).sum();
                assert!((sum - target).abs() < 1e-9, "{set:?} n={n}: {sum}");
            }
        }
    }
}
