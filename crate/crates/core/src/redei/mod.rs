//! The Rédei–Berge symmetric function `U_D`: every route to it, its
//! expansions, and Chow's two-alphabet path-cycle function.

mod chow;
mod routes;
mod schur;
mod special;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

pub use chow::{chow_xi, chow_xi_hat, chow_xi_mtilde, verify_chow_identities, ChowReport, ChowRoute};
pub use routes::{
    path_sequence_polynomial, u_via_fundamental, u_via_matrix_route, u_via_path_covers, u_via_powersum_gs,
    u_via_subset_formula,
};
pub use schur::{hook_coefficient, schur_coeff_jt, u_via_immanant_lr, u_via_schur_jt, HookCoefficient};
pub use special::{u_acyclic, u_tournament, AcyclicFlavor};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::symfun::{Basis, SymFun};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Route {
    #[serde(rename = "F-definition")]
    Fundamental,
    #[serde(rename = "path-cover")]
    PathCover,
    #[serde(rename = "powersum-GS")]
    PowersumGs,
    #[serde(rename = "subset-formula")]
    SubsetFormula,
    #[serde(rename = "matrix-det")]
    MatrixDet,
    #[serde(rename = "schur-JT")]
    SchurJt,
    #[serde(rename = "immanant-LR")]
    ImmanantLr,
    #[serde(rename = "acyclic-powersum")]
    AcyclicPowersum,
    #[serde(rename = "acyclic-schur")]
    AcyclicSchur,
    #[serde(rename = "acyclic-records")]
    AcyclicRecords,
    #[serde(rename = "tournament")]
    Tournament,
}

impl Route {
    pub const ALL: [Route; 11] = [
        Route::Fundamental,
        Route::PathCover,
        Route::PowersumGs,
        Route::SubsetFormula,
        Route::MatrixDet,
        Route::SchurJt,
        Route::ImmanantLr,
        Route::AcyclicPowersum,
        Route::AcyclicSchur,
        Route::AcyclicRecords,
        Route::Tournament,
    ];

    /// Routes that apply to every digraph.
    pub const GENERAL: [Route; 7] = [
        Route::Fundamental,
        Route::PathCover,
        Route::PowersumGs,
        Route::SubsetFormula,
        Route::MatrixDet,
        Route::SchurJt,
        Route::ImmanantLr,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Route::Fundamental => "F-definition",
            Route::PathCover => "path-cover",
            Route::PowersumGs => "powersum-GS",
            Route::SubsetFormula => "subset-formula",
            Route::MatrixDet => "matrix-det",
            Route::SchurJt => "schur-JT",
            Route::ImmanantLr => "immanant-LR",
            Route::AcyclicPowersum => "acyclic-powersum",
            Route::AcyclicSchur => "acyclic-schur",
            Route::AcyclicRecords => "acyclic-records",
            Route::Tournament => "tournament",
        }
    }

    /// Whether the route's preconditions hold for `d` (size guards aside).
    pub fn applies_to(self, d: &Digraph) -> bool {
        match self {
            Route::AcyclicPowersum | Route::AcyclicSchur => d.is_acyclic(),
            Route::AcyclicRecords => d.is_acyclic() && d.is_strictly_decreasing(),
            Route::Tournament => d.is_tournament(),
            _ => true,
        }
    }

    /// Default vertex ceiling for the route.
    pub fn guard(self) -> usize {
        use crate::guard;
        match self {
            Route::Fundamental => guard::FUNDAMENTAL_ROUTE,
            Route::SubsetFormula => guard::SUBSET_ROUTE,
            Route::MatrixDet => guard::MATRIX_ROUTE,
            Route::SchurJt => guard::SCHUR_JT,
            Route::ImmanantLr => guard::IMMANANT_ROUTE,
            _ => guard::ENUMERATION,
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Route::ALL
            .into_iter()
            .find(|r| r.tag().to_ascii_lowercase() == key)
            .or(match key.as_str() {
                "f" | "fundamental" => Some(Route::Fundamental),
                "paths" => Some(Route::PathCover),
                "powersum" | "gs" => Some(Route::PowersumGs),
                "subset" => Some(Route::SubsetFormula),
                "matrix" => Some(Route::MatrixDet),
                "schur" | "jt" => Some(Route::SchurJt),
                "immanant" | "lr" => Some(Route::ImmanantLr),
                _ => None,
            })
            .ok_or_else(|| Error::Parse(format!("unknown route `{s}`")))
    }
}

/// Applicable routes for `d` whose default guard admits it.
pub fn applicable_routes(d: &Digraph) -> Vec<Route> {
    Route::ALL
        .into_iter()
        .filter(|r| r.applies_to(d) && d.n() <= crate::guard::limit(r.guard()))
        .collect()
}

/// `U_D` computed along one route, with provenance.
#[derive(Debug, Clone)]
pub struct URouteResult {
    pub route: Route,
    pub value: SymFun,
    pub digraph: String,
    pub elapsed_ms: f64,
}

impl URouteResult {
    /// JSON report `{digraph, route, basis, terms, elapsed_ms}` with the
    /// value expressed in `basis`.
    pub fn report(&self, basis: Basis) -> Result<serde_json::Value> {
        let value = self.value.convert(basis)?;
        let terms: Vec<serde_json::Value> = value
            .terms()
            .map(|(l, c)| serde_json::json!({ "partition": l.parts(), "coeff": c.to_string() }))
            .collect();
        Ok(serde_json::json!({
            "digraph": self.digraph,
            "route": self.route.tag(),
            "basis": basis.name(),
            "terms": terms,
            "elapsed_ms": self.elapsed_ms,
        }))
    }
}

pub fn compute_u(d: &Digraph, route: Route) -> Result<URouteResult> {
    if !route.applies_to(d) {
        return Err(Error::Precondition(format!("route {route} does not apply to {d}")));
    }
    let start = Instant::now();
    let value = match route {
        Route::Fundamental => u_via_fundamental(d)?.1,
        Route::PathCover => u_via_path_covers(d)?,
        Route::PowersumGs => u_via_powersum_gs(d)?,
        Route::SubsetFormula => u_via_subset_formula(d)?,
        Route::MatrixDet => u_via_matrix_route(d)?,
        Route::SchurJt => u_via_schur_jt(d)?,
        Route::ImmanantLr => u_via_immanant_lr(d)?,
        Route::AcyclicPowersum => u_acyclic(d, AcyclicFlavor::Powersum)?,
        Route::AcyclicSchur => u_acyclic(d, AcyclicFlavor::Schur)?,
        Route::AcyclicRecords => u_acyclic(d, AcyclicFlavor::Records)?,
        Route::Tournament => u_tournament(d)?,
    };
    Ok(URouteResult {
        route,
        value,
        digraph: d.fingerprint(),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// `U_D` by the cheapest general route (power sums over cycle systems).
pub fn redei_berge(d: &Digraph) -> Result<SymFun> {
    u_via_powersum_gs(d)
}

/// Runs `routes` and checks that they agree in the `p` basis. Returns the
/// individual results; disagreement is a `Mismatch`.
pub fn compute_all(d: &Digraph, routes: &[Route]) -> Result<Vec<URouteResult>> {
    let mut results: Vec<URouteResult> = Vec::with_capacity(routes.len());
    let mut reference: Option<(Route, SymFun)> = None;
    for &route in routes {
        let r = compute_u(d, route)?;
        let p = r.value.convert(Basis::P)?;
        match &reference {
            None => reference = Some((route, p)),
            Some((first, want)) if *want != p => {
                return Err(Error::Mismatch(format!(
                    "{d}: route {route} gives {p} but {first} gives {want}"
                )))
            }
            Some(_) => {}
        }
        results.push(r);
    }
    Ok(results)
}
