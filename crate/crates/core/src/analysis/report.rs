use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::local::run_degree_threshold;
use crate::mds::{exact_mds_bruteforce, exact_mds_treewidth, Method, BRUTEFORCE_MAX_VERTICES};
use crate::outerplanar::is_outerplanar;

/// Selection size against the exact optimum for one graph.
///
/// `ratio` is exact and absent only for the empty graph. The factor-five
/// guarantee is asserted only for outerplanar inputs; other graphs are
/// still measured and carry a warning.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub n: usize,
    pub m: usize,
    pub outerplanar: bool,
    pub alg_size: usize,
    pub opt_size: usize,
    pub opt_method: Method,
    #[serde(serialize_with = "ratio_text")]
    pub ratio: Option<Ratio<usize>>,
    pub ratio_value: Option<f64>,
    pub within_five: bool,
    pub guarantee_ok: bool,
    pub warning: Option<String>,
}

fn ratio_text<S: Serializer>(r: &Option<Ratio<usize>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format!("{}/{}", r.numer(), r.denom())),
        None => s.serialize_none(),
    }
}

pub fn approximation_report(g: &Graph) -> Result<RunReport> {
    let witness = is_outerplanar(g);
    let opt = match &witness.embedding {
        Some(order) if witness.verdict => exact_mds_treewidth(g, Some(order))?,
        _ if g.n() <= BRUTEFORCE_MAX_VERTICES => exact_mds_bruteforce(g)?,
        _ => {
            return Err(Error::capability(format!(
                "no exact oracle for a non-outerplanar graph on {} vertices",
                g.n()
            )))
        }
    };
    let alg_size = run_degree_threshold(g).chosen.len();
    let ratio = (opt.size > 0).then(|| Ratio::new(alg_size, opt.size));
    let within_five = alg_size <= 5 * opt.size;
    Ok(RunReport {
        n: g.n(),
        m: g.m(),
        outerplanar: witness.verdict,
        alg_size,
        opt_size: opt.size,
        opt_method: opt.method,
        ratio,
        ratio_value: ratio.map(|r| *r.numer() as f64 / *r.denom() as f64),
        within_five,
        guarantee_ok: !witness.verdict || within_five,
        warning: (!witness.verdict)
            .then(|| "graph is not outerplanar; the factor-five guarantee does not apply".to_string()),
    })
}
