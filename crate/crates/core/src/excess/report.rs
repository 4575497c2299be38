//! Per-(graph, k) evaluation of every proved bound and open conjecture.

use serde::{Deserialize, Serialize};

use super::{eps_token_k_family, teps_k_family};
use crate::compound::binomial;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::linalg::{Family, Spectrum};
use crate::Caps;

/// Which matrix families a report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum FamilySelection {
    #[default]
    Laplacian,
    Signless,
    Both,
}

impl FamilySelection {
    pub fn families(self) -> &'static [Family] {
        match self {
            FamilySelection::Laplacian => &[Family::Laplacian],
            FamilySelection::Signless => &[Family::Signless],
            FamilySelection::Both => &[Family::Laplacian, Family::Signless],
        }
    }

    pub fn includes(self, family: Family) -> bool {
        self.families().contains(&family)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportOptions {
    pub families: FamilySelection,
    pub caps: Caps,
    /// A record is satisfied iff `slack >= -violation_tol`.
    pub violation_tol: f64,
    /// Values of `r` for the `K_{r+1}`-free bounds; each must be `>= 2`.
    pub clique_orders: Vec<usize>,
}

impl ReportOptions {
    pub const DEFAULT_VIOLATION_TOL: f64 = 1e-6;
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            families: FamilySelection::Laplacian,
            caps: Caps::default(),
            violation_tol: Self::DEFAULT_VIOLATION_TOL,
            clique_orders: vec![2, 3],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Theorem,
    Conjecture,
}

/// One inequality `lhs <= bound_value`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub name: String,
    pub bound_value: f64,
    pub lhs: f64,
    pub satisfied: bool,
    pub slack: f64,
    /// `|slack| <= violation_tol`.
    pub tight: bool,
}

impl BoundRecord {
    fn new(name: String, lhs: f64, bound_value: f64, tol: f64) -> Self {
        let slack = bound_value - lhs;
        BoundRecord {
            name,
            bound_value,
            lhs,
            satisfied: slack >= -tol,
            slack,
            tight: slack.abs() <= tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub name: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignlessExcess {
    pub eps_k: f64,
    pub teps_k: Option<f64>,
    #[serde(rename = "epsT_k")]
    pub eps_t_k: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExcessReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub eps_k: f64,
    pub teps_k: Option<f64>,
    #[serde(rename = "epsT_k")]
    pub eps_t_k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub signless: Option<SignlessExcess>,
    pub max_induced_edges: Option<usize>,
    pub nu: usize,
    pub tau: usize,
    pub bipartite: bool,
    pub bounds: Vec<BoundRecord>,
    pub conjectures: Vec<BoundRecord>,
    pub skipped: Vec<Skipped>,
}

impl ExcessReport {
    pub fn theorem_violations(&self) -> impl Iterator<Item = &BoundRecord> {
        self.bounds.iter().filter(|b| !b.satisfied)
    }

    pub fn conjecture_violations(&self) -> impl Iterator<Item = &BoundRecord> {
        self.conjectures.iter().filter(|b| !b.satisfied)
    }

    pub fn record(&self, name: &str) -> Option<&BoundRecord> {
        self.bounds
            .iter()
            .chain(&self.conjectures)
            .find(|b| b.name == name)
    }

    pub fn records(&self) -> impl Iterator<Item = (BoundKind, &BoundRecord)> {
        self.bounds
            .iter()
            .map(|b| (BoundKind::Theorem, b))
            .chain(self.conjectures.iter().map(|b| (BoundKind::Conjecture, b)))
    }
}

fn prefix(family: Family) -> &'static str {
    match family {
        Family::Laplacian => "",
        Family::Signless => "signless_",
    }
}

/// Every record name a report with these options can contain, in the fixed
/// order used for tabular output.
pub fn bound_catalog(options: &ReportOptions) -> Vec<(String, BoundKind)> {
    let mut out = Vec::new();
    for &family in options.families.families() {
        let p = prefix(family);
        let mut theorem = |name: &str| out.push((format!("{p}{name}"), BoundKind::Theorem));
        theorem("density_bound");
        theorem("binomial_bound");
        for r in &options.clique_orders {
            theorem(&format!("clique_free_bound_r{r}"));
        }
        theorem("teps_bound");
        theorem("teps_bipartite_bound");
        theorem("token_radius_bound");
        theorem("token_radius_bipartite_bound");
        theorem("compound_perturbation");
        theorem("grone_merris");
        if family == Family::Laplacian {
            theorem("grone_merris_bai");
        }
    }
    for &family in options.families.families() {
        let p = prefix(family);
        let mut conjecture = |name: &str| out.push((format!("{p}{name}"), BoundKind::Conjecture));
        conjecture("brouwer");
        conjecture("token_radius");
        if family == Family::Laplacian {
            conjecture("token_matching");
            for r in &options.clique_orders {
                conjecture(&format!("clique_turan_r{r}"));
            }
        }
    }
    out
}

/// Graph-level data shared by the reports for every `k`.
pub struct GraphContext<'a> {
    graph: &'a Graph,
    graph_id: String,
    options: &'a ReportOptions,
    spectra: Vec<(Family, Spectrum)>,
    nu: usize,
    tau: usize,
    bipartite: bool,
    clique_free: Vec<(usize, bool)>,
}

impl<'a> GraphContext<'a> {
    pub fn new(graph: &'a Graph, options: &'a ReportOptions) -> Result<Self> {
        if let Some(&r) = options.clique_orders.iter().find(|&&r| r < 2) {
            return Err(Error::InvalidParameter(format!("clique order r = {r} must be >= 2")));
        }
        let mut spectra = vec![(Family::Laplacian, Family::Laplacian.matrix(graph).eigenvalues()?)];
        if options.families.includes(Family::Signless) {
            spectra.push((Family::Signless, Family::Signless.matrix(graph).eigenvalues()?));
        }
        let clique_free = options
            .clique_orders
            .iter()
            .map(|&r| Ok((r, graph::is_clique_free(graph, r + 1)?)))
            .collect::<Result<_>>()?;
        Ok(GraphContext {
            graph,
            graph_id: graph::encode_graph6(graph),
            options,
            spectra,
            nu: graph::matching_number(graph)?,
            tau: graph::covering_number(graph)?,
            bipartite: graph.is_bipartite(),
            clique_free,
        })
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.graph_id = id.into();
        self
    }

    fn spectrum(&self, family: Family) -> &Spectrum {
        &self.spectra.iter().find(|(f, _)| *f == family).expect("spectrum computed").1
    }

    /// Evaluates every applicable record at `k`, without judging them.
    pub fn report(&self, k: usize) -> Result<ExcessReport> {
        let g = self.graph;
        let (n, m) = (g.n(), g.edge_count());
        if k < 1 || k > n {
            return Err(Error::KOutOfRange { k, min: 1, max: n });
        }
        let opts = self.options;
        let tol = opts.violation_tol;
        let mf = m as f64;
        let kf = k as f64;
        let sqrt_k = kf.sqrt();
        let general = (4.0 * kf - 2.0) * sqrt_k;

        let mut bounds = Vec::new();
        let mut conjectures = Vec::new();
        let mut skipped = Vec::new();

        let max_induced = match graph::max_induced_edges(g, k, opts.caps.subsets) {
            Ok(v) => Some(v),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let top_degrees = graph::top_degree_sum(g, k)? as f64;

        let mut laplacian_values = None;
        let mut signless = None;
        for &family in opts.families.families() {
            let p = prefix(family);
            let top_sum = self.spectrum(family).top_k_sum(k)?;
            let eps = top_sum - mf;
            let teps = capped(teps_k_family(g, k, family, &opts.caps))?;
            let eps_t = capped(eps_token_k_family(g, k, family, &opts.caps))?;

            let mut theorem = |name: &str, lhs: Option<f64>, bound: Option<f64>| match (lhs, bound)
            {
                (Some(l), Some(b)) => bounds.push(BoundRecord::new(format!("{p}{name}"), l, b, tol)),
                _ => skipped.push(Skipped {
                    name: format!("{p}{name}"),
                    reason: "cap".into(),
                }),
            };
            let induced = max_induced.map(|x| x as f64);
            theorem("density_bound", Some(eps), induced.map(|x| x + general));
            theorem("binomial_bound", Some(eps), Some(binomial(k, 2) as f64 + general));
            for &(r, free) in &self.clique_free {
                if free {
                    let rf = r as f64;
                    let b = (1.0 - 1.0 / rf) * kf * kf / 2.0 + general;
                    theorem(&format!("clique_free_bound_r{r}"), Some(eps), Some(b));
                }
            }
            theorem("teps_bound", teps, Some(general));
            if self.bipartite {
                theorem("teps_bipartite_bound", teps, Some((2.0 * kf - 1.0) * sqrt_k));
            }
            let radius = eps_t.map(|e| e + mf);
            theorem("token_radius_bound", radius, Some(mf + 4.0 * kf - 2.0));
            if self.bipartite {
                theorem("token_radius_bipartite_bound", radius, Some(mf + 2.0 * kf - 1.0));
            }
            theorem(
                "compound_perturbation",
                Some(eps),
                teps.zip(induced).map(|(t, i)| t + i),
            );
            theorem("grone_merris", Some(top_degrees), Some(top_sum));
            if family == Family::Laplacian {
                let conj = graph::conjugate_degree_sum(g, k)? as f64;
                theorem("grone_merris_bai", Some(top_sum), Some(conj));
            }

            let mut conjecture = |name: &str, lhs: Option<f64>, bound: f64| match lhs {
                Some(l) => conjectures.push(BoundRecord::new(format!("{p}{name}"), l, bound, tol)),
                None => skipped.push(Skipped {
                    name: format!("{p}{name}"),
                    reason: "cap".into(),
                }),
            };
            conjecture("brouwer", Some(eps), binomial(k + 1, 2) as f64);
            if 2 * k <= n {
                conjecture("token_radius", radius, mf + kf);
            }
            if family == Family::Laplacian {
                conjecture("token_matching", eps_t, self.nu as f64);
                for &(r, free) in &self.clique_free {
                    if free {
                        let ex = graph::turan_number(k + 1, r)? as f64;
                        conjecture(&format!("clique_turan_r{r}"), Some(eps), ex);
                    }
                }
            }

            match family {
                Family::Laplacian => laplacian_values = Some((eps, teps, eps_t)),
                Family::Signless => {
                    signless = Some(SignlessExcess {
                        eps_k: eps,
                        teps_k: teps,
                        eps_t_k: eps_t,
                    })
                }
            }
        }

        let (eps_k, teps_k, eps_t_k) = match laplacian_values {
            Some(v) => v,
            None => (self.spectrum(Family::Laplacian).top_k_sum(k)? - mf, None, None),
        };
        Ok(ExcessReport {
            graph_id: self.graph_id.clone(),
            n,
            m,
            k,
            eps_k,
            teps_k,
            eps_t_k,
            signless,
            max_induced_edges: max_induced,
            nu: self.nu,
            tau: self.tau,
            bipartite: self.bipartite,
            bounds,
            conjectures,
            skipped,
        })
    }
}

fn capped(value: Result<f64>) -> Result<Option<f64>> {
    match value {
        Ok(v) => Ok(Some(v)),
        Err(Error::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Builds the report for `(g, k)` and fails if any proved bound is violated
/// beyond the tolerance; conjecture violations are only recorded.
pub fn evaluate_bounds(g: &Graph, k: usize, options: &ReportOptions) -> Result<ExcessReport> {
    let report = GraphContext::new(g, options)?.report(k)?;
    check_theorems(report)
}

pub(crate) fn check_theorems(report: ExcessReport) -> Result<ExcessReport> {
    if let Some(bad) = report.theorem_violations().next() {
        return Err(Error::TheoremViolation {
            name: bad.name.clone(),
            graph: report.graph_id.clone(),
            k: report.k,
            slack: bad.slack,
            report: Box::new(report.clone()),
        });
    }
    Ok(report)
}
