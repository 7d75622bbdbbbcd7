use super::hierarchy::find_twistless_hierarchy;
use super::structure::{cut_vertices, is_connected, separating_edges, type_class};
use super::{HierarchyTree, PresentationGraph};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    /// XXXL labels, connected, twistless, not an even edge.
    #[serde(rename = "XXXL-route")]
    Xxxl,
    /// Large type, connected, no valence-one vertex, twistless hierarchy of twistless stars.
    #[serde(rename = "hierarchy-route")]
    Hierarchy,
    /// The caller asserts that Out is generated by graph automorphisms and the inversion.
    #[serde(rename = "assumed")]
    Assumed,
    #[serde(rename = "ineligible")]
    Ineligible,
}

impl Route {
    pub fn is_eligible(self) -> bool {
        self != Route::Ineligible
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Xxxl => "XXXL-route",
            Route::Hierarchy => "hierarchy-route",
            Route::Assumed => "assumed",
            Route::Ineligible => "ineligible",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EligibilityReport {
    pub route: Route,
    pub checklist: Vec<Hypothesis>,
    pub hierarchy: Option<HierarchyTree>,
    /// Violated hypotheses, most structural first.
    pub failures: Vec<String>,
}

/// Decides which of the graph-level sufficient conditions for a finite Out
/// generated by graph automorphisms and the global inversion applies.
pub fn eligibility(g: &PresentationGraph, assume_out_generated: bool) -> EligibilityReport {
    let class = type_class(g);
    let connected = is_connected(g);
    let single = g.len() == 1;
    let cuts = if connected { cut_vertices(g).unwrap_or_default() } else { Vec::new() };
    let seps = if connected { separating_edges(g).unwrap_or_default() } else { Vec::new() };
    let twistless = connected && cuts.is_empty() && seps.is_empty();
    let leaves: Vec<usize> = (0..g.len()).filter(|&v| g.degree(v) == 1).collect();
    let (hierarchy, too_large) = if connected && !single {
        match find_twistless_hierarchy(g) {
            Ok(h) => (h, false),
            Err(_) => (None, true),
        }
    } else {
        (None, false)
    };

    let xxxl_ok = !single && class.xxxl && connected && twistless && !class.even_edge;
    let hierarchy_ok = !single && class.large && connected && leaves.is_empty() && hierarchy.is_some();

    let checklist = vec![
        Hypothesis { name: "more than one vertex".into(), holds: !single },
        Hypothesis { name: "connected".into(), holds: connected },
        Hypothesis { name: "large-type".into(), holds: class.large },
        Hypothesis { name: "XXXL".into(), holds: class.xxxl },
        Hypothesis { name: "twistless".into(), holds: twistless },
        Hypothesis { name: "not an even edge".into(), holds: !class.even_edge },
        Hypothesis { name: "no valence-1 vertex".into(), holds: leaves.is_empty() },
        Hypothesis { name: "twistless hierarchy of twistless stars".into(), holds: hierarchy.is_some() },
    ];

    let mut failures = Vec::new();
    if single {
        failures.push("single vertex".to_string());
    }
    if !connected {
        failures.push("disconnected".to_string());
    }
    if class.even_edge {
        failures.push("even edge".to_string());
    }
    failures.extend(cuts.iter().map(|&v| format!("cut vertex {}", g.name(v))));
    failures.extend(seps.iter().map(|&(a, b)| format!("separating edge {}-{}", g.name(a), g.name(b))));
    failures.extend(leaves.iter().map(|&v| format!("valence-1 vertex {}", g.name(v))));
    if !class.large {
        failures.push("not large-type".to_string());
    }
    if !class.xxxl {
        failures.push("labels below 6".to_string());
    }
    if too_large {
        failures.push("too many vertices for the hierarchy search".to_string());
    } else if hierarchy.is_none() {
        failures.push("no twistless hierarchy of twistless stars".to_string());
    }

    let route = if xxxl_ok {
        Route::Xxxl
    } else if hierarchy_ok {
        Route::Hierarchy
    } else if assume_out_generated {
        Route::Assumed
    } else {
        Route::Ineligible
    };
    if route == Route::Xxxl || route == Route::Hierarchy {
        failures.clear();
    }
    EligibilityReport { route, checklist, hierarchy, failures }
}
