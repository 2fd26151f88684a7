//! Flexibility parameters and composite robustness indices.
//!
//! Everything here is computed at full double precision; rounding to
//! the three decimals used in table output happens at render time only.

use serde::Serialize;

use crate::bits::binomial;
use crate::domination::{load_profile, min_overlap, solve};
use crate::error::Result;
use crate::graph::Graph;
use crate::spectra::{algebraic_connectivity, vertex_connectivity};

/// Normalized flexibility: dominion growth per dominator on a log scale
/// (`eta`), its multiplicative analogue (`cal_e`) and dominion density
/// per vertex (`rho`).
pub fn flexibility(gamma: usize, zeta: u64, n_vertices: usize) -> (f64, f64, f64) {
    let eta = (zeta as f64).log2() / gamma as f64;
    let cal_e = (zeta as f64).powf(1.0 / gamma as f64);
    let rho = zeta as f64 / n_vertices as f64;
    (eta, cal_e, rho)
}

/// Fraction of all gamma-subsets that are minimum dominating sets.
pub fn p_gamma(zeta: u64, n_vertices: usize, gamma: usize) -> f64 {
    zeta as f64 / binomial(n_vertices, gamma) as f64
}

/// Full per-graph index report. Serializes to the documented JSON
/// schema (lower-snake field names).
#[derive(Debug, Clone, Serialize)]
pub struct RobustnessReport {
    pub family: String,
    pub n_vertices: usize,
    pub gamma: usize,
    pub zeta: u64,
    pub eta: f64,
    pub cal_e: f64,
    pub rho: f64,
    pub p_gamma: f64,
    pub kappa_v: usize,
    pub cri: f64,
    pub lambda2: f64,
    pub sfi: f64,
    pub omega: f64,
    pub rri: f64,
    pub tau: u64,
    pub ldi: f64,
}

impl RobustnessReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub const CSV_HEADER: &'static str =
        "graph,gamma,zeta,eta,cal_e,rho,lambda2,sfi,omega,rri,tau,ldi";

    /// CSV row in table column order, full precision.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.gamma,
            self.zeta,
            self.eta,
            self.cal_e,
            self.rho,
            self.lambda2,
            self.sfi,
            self.omega,
            self.rri,
            self.tau,
            self.ldi
        )
    }

    /// Row rendered like the summary tables: three decimals for reals.
    pub fn table_row(&self) -> String {
        format!(
            "{:<14} {:>2} {:>4} {:>6.3} {:>6.3} {:>6.3} {:>6.3} {:>6.3} {:>6.3} {:>6.3} {:>3} {:>6.3}",
            self.family,
            self.gamma,
            self.zeta,
            self.eta,
            self.cal_e,
            self.rho,
            self.lambda2,
            self.sfi,
            self.omega,
            self.rri,
            self.tau,
            self.ldi
        )
    }

    pub const TABLE_HEADER: &'static str = "graph          gamma zeta    eta  cal_e    rho lambda2   sfi  omega    rri tau    ldi";
}

/// Computes every index for one connected graph: exact domination data,
/// overlap and load statistics, connectivity and the spectral weight.
pub fn composite_report(g: &Graph, budget: u64) -> Result<RobustnessReport> {
    let dom = solve(g, budget)?;
    let load = load_profile(&dom, g.n_vertices());
    let omega = min_overlap(&dom);
    let lambda2 = algebraic_connectivity(g)?;
    let kappa_v = vertex_connectivity(g);
    let (eta, cal_e, rho) = flexibility(dom.gamma, dom.zeta, g.n_vertices());
    let p_gamma = p_gamma(dom.zeta, g.n_vertices(), dom.gamma);

    Ok(RobustnessReport {
        family: g.family().to_string(),
        n_vertices: g.n_vertices(),
        gamma: dom.gamma,
        zeta: dom.zeta,
        eta,
        cal_e,
        rho,
        p_gamma,
        kappa_v,
        cri: kappa_v as f64 * p_gamma,
        lambda2,
        sfi: lambda2 * eta,
        omega,
        rri: (1.0 - omega) * cal_e,
        tau: load.tau,
        ldi: dom.zeta as f64 / load.tau as f64,
    })
}
