//! Summary records for one group.

use serde::{Deserialize, Serialize};

use crate::analysis::GroupAnalysis;
use crate::ratio::ExactRatio;

/// Significant digits used for decimal approximations in reports.
pub const DECIMAL_DIGITS: usize = 12;

/// An exact degree with a rounded decimal for display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Degree {
    pub exact: ExactRatio,
    pub decimal: String,
}

impl From<&ExactRatio> for Degree {
    fn from(value: &ExactRatio) -> Self {
        Degree {
            exact: value.clone(),
            decimal: value.to_decimal(DECIMAL_DIGITS),
        }
    }
}

/// Wall-clock data, only attached on request so that reports stay
/// byte-identical between runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timing {
    pub milliseconds: u64,
    pub cache_hit: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeReport {
    pub spec: String,
    pub order: usize,
    pub lattice_size: usize,
    pub d: Degree,
    pub sd: Degree,
    pub pd: Degree,
    pub center_order: usize,
    pub norm_order: usize,
    pub quasicenter_order: usize,
    pub hyperquasicenter_order: usize,
    pub p_order: usize,
    pub is_p_group: bool,
    pub is_quasihamiltonian: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl DegreeReport {
    pub fn new(a: &GroupAnalysis) -> Self {
        let prof = &a.profile;
        DegreeReport {
            spec: a.spec.clone(),
            order: a.order(),
            lattice_size: a.lattice.len(),
            d: (&a.d).into(),
            sd: (&a.sd).into(),
            pd: a.pd().into(),
            center_order: prof.center.count(),
            norm_order: prof.norm.count(),
            quasicenter_order: prof.quasicenter.count(),
            hyperquasicenter_order: prof.hyperquasicenter.count(),
            p_order: prof.p_of_g.count(),
            is_p_group: prof.satisfies_permutizer_condition,
            is_quasihamiltonian: prof.is_quasihamiltonian,
            timing: None,
        }
    }

    /// Column names for [`DegreeReport::csv_row`].
    pub const CSV_HEADER: [&'static str; 16] = [
        "spec",
        "order",
        "lattice_size",
        "d",
        "d_decimal",
        "sd",
        "sd_decimal",
        "pd",
        "pd_decimal",
        "center_order",
        "norm_order",
        "quasicenter_order",
        "hyperquasicenter_order",
        "p_order",
        "is_p_group",
        "is_quasihamiltonian",
    ];

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.spec.clone(),
            self.order.to_string(),
            self.lattice_size.to_string(),
            self.d.exact.to_string(),
            self.d.decimal.clone(),
            self.sd.exact.to_string(),
            self.sd.decimal.clone(),
            self.pd.exact.to_string(),
            self.pd.decimal.clone(),
            self.center_order.to_string(),
            self.norm_order.to_string(),
            self.quasicenter_order.to_string(),
            self.hyperquasicenter_order.to_string(),
            self.p_order.to_string(),
            self.is_p_group.to_string(),
            self.is_quasihamiltonian.to_string(),
        ]
    }

    /// Multi-line human-readable form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<22}{v}\n"));
        line("group", self.spec.clone());
        line("order", self.order.to_string());
        line("subgroups", self.lattice_size.to_string());
        for (name, deg) in [("d", &self.d), ("sd", &self.sd), ("pd", &self.pd)] {
            line(name, format!("{} ~ {}", deg.exact, deg.decimal));
        }
        line("|Z(G)|", self.center_order.to_string());
        line("|N(G)|", self.norm_order.to_string());
        line("|Q(G)|", self.quasicenter_order.to_string());
        line("|Q_inf(G)|", self.hyperquasicenter_order.to_string());
        line("|P(G)|", self.p_order.to_string());
        line("P-group", self.is_p_group.to_string());
        line("quasihamiltonian", self.is_quasihamiltonian.to_string());
        if let Some(t) = &self.timing {
            line("time (ms)", t.milliseconds.to_string());
            line("cache hit", t.cache_hit.to_string());
        }
        out
    }
}
