use std::f64::consts::PI;

use fcc_trig::trig_basis::{tc, ts, TetraIndex};
use fcc_trig::{lattice::phi, Complex64, HIndex, HomoPoint};

use crate::args::Builtin;
use crate::error::CliError;

pub type SampleFn = Box<dyn Fn(&HomoPoint) -> Complex64 + Sync>;

fn required_index(name: &str, k: Option<[i64; 4]>) -> Result<HIndex, CliError> {
    let k = k.ok_or_else(|| CliError::Usage(format!("--f {name} needs --k a,b,c,d")))?;
    Ok(HIndex::new(k)?)
}

/// The sampling function behind `--f`.
pub fn resolve(builtin: Builtin, k: Option<[i64; 4]>) -> Result<SampleFn, CliError> {
    Ok(match builtin {
        Builtin::One => Box::new(|_: &HomoPoint| Complex64::new(1.0, 0.0)),
        Builtin::Phi => {
            let k = required_index("phi", k)?;
            Box::new(move |t: &HomoPoint| phi(&k, t))
        }
        Builtin::Tc => {
            let k = TetraIndex::new(required_index("tc", k)?)?;
            Box::new(move |t: &HomoPoint| tc(&k, t))
        }
        Builtin::Ts => {
            let k = TetraIndex::new(required_index("ts", k)?)?;
            ts(&k, &HomoPoint::ORIGIN)?;
            Box::new(move |t: &HomoPoint| ts(&k, t).expect("strict index checked above"))
        }
        Builtin::Expsin => Box::new(|t: &HomoPoint| {
            let s: f64 = t.coords().iter().map(|v| (2.0 * PI * v).sin().exp()).sum();
            Complex64::new(s / 4.0, 0.0)
        }),
        Builtin::Gauss => Box::new(|t: &HomoPoint| {
            let s: f64 = t.coords().iter().map(|v| (PI * v).sin().powi(2)).sum();
            Complex64::new((-s).exp(), 0.0)
        }),
    })
}
