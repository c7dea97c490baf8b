//! Structured validation reports.
//!
//! Every validator in the crate reports violations as [`Finding`]s instead of
//! failing fast: a report lists every broken invariant with the exact two
//! sides of each failed identity, and is empty exactly when all checks pass.
//! Ordering is stable (by location, then check id) so that rendered reports
//! are byte-identical across runs.

use std::fmt;

/// Stable identifier of a single check; rendered in kebab case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Connectivity,
    NeedsType2Vertex,
    Type1Degree,
    Type1Genus,
    EdgeEndpoints,
    EdgeLengthType,
    MapTotality,
    MapTargets,
    Incidence,
    TypePreserved,
    MetricCompat,
    FiberDegree,
    VertexEdgeBalance,
    TameLocalRh,
    WildBalancing,
    WildSideCondition,
    DeltaContinuity,
    GermSlope,
    GermMultiplicity,
    GermLocation,
    InsepDegree,
    Type1Slope,
    OnSkeletonRamification,
    Wildness,
    SkeletonCriterion,
    FieldContinuity,
    FieldRegions,
    FieldSlopes,
    MissingData,
    Config,
}

impl Check {
    pub fn id(self) -> &'static str {
        match self {
            Check::Connectivity => "connectivity",
            Check::NeedsType2Vertex => "needs-type2-vertex",
            Check::Type1Degree => "type1-degree",
            Check::Type1Genus => "type1-genus",
            Check::EdgeEndpoints => "edge-endpoints",
            Check::EdgeLengthType => "edge-length-type",
            Check::MapTotality => "map-totality",
            Check::MapTargets => "map-targets",
            Check::Incidence => "incidence",
            Check::TypePreserved => "type-preserved",
            Check::MetricCompat => "metric-compat",
            Check::FiberDegree => "fiber-degree",
            Check::VertexEdgeBalance => "vertex-edge-balance",
            Check::TameLocalRh => "tame-local-rh",
            Check::WildBalancing => "wild-balancing",
            Check::WildSideCondition => "wild-side-condition",
            Check::DeltaContinuity => "delta-continuity",
            Check::GermSlope => "germ-slope",
            Check::GermMultiplicity => "germ-multiplicity",
            Check::GermLocation => "germ-location",
            Check::InsepDegree => "insep-degree",
            Check::Type1Slope => "type1-slope",
            Check::OnSkeletonRamification => "on-skeleton-ramification",
            Check::Wildness => "wildness",
            Check::SkeletonCriterion => "skeleton-criterion",
            Check::FieldContinuity => "field-continuity",
            Check::FieldRegions => "field-regions",
            Check::FieldSlopes => "field-slopes",
            Check::MissingData => "missing-data",
            Check::Config => "config",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    /// Informational note; does not fail validation.
    Info,
    /// Violated invariant.
    Error,
}

impl Severity {
    fn label(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Error => "error",
        }
    }
}

/// One report entry: a check verdict at a location, with the exact two sides
/// when an identity failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub severity: Severity,
    pub check: Check,
    /// Location ids, outermost first (e.g. morphism, then vertex).
    pub location: Vec<String>,
    pub message: String,
    /// Exact left/right values of a failed identity, already formatted.
    pub sides: Option<(String, String)>,
}

impl Finding {
    pub fn error<L, M>(check: Check, location: L, message: M) -> Self
    where
        L: IntoIterator,
        L::Item: Into<String>,
        M: Into<String>,
    {
        Finding {
            severity: Severity::Error,
            check,
            location: location.into_iter().map(Into::into).collect(),
            message: message.into(),
            sides: None,
        }
    }

    pub fn info<L, M>(check: Check, location: L, message: M) -> Self
    where
        L: IntoIterator,
        L::Item: Into<String>,
        M: Into<String>,
    {
        Finding {
            severity: Severity::Info,
            ..Finding::error(check, location, message)
        }
    }

    pub fn with_sides(mut self, left: impl fmt::Display, right: impl fmt::Display) -> Self {
        self.sides = Some((left.to_string(), right.to_string()));
        self
    }

    fn render(&self, color: bool) -> String {
        let label = if color {
            match self.severity {
                Severity::Error => format!("\x1b[31m{}\x1b[0m", self.severity.label()),
                Severity::Info => format!("\x1b[36m{}\x1b[0m", self.severity.label()),
            }
        } else {
            self.severity.label().to_string()
        };
        let mut line = format!(
            "{} {} at {}: {}",
            label,
            self.check.id(),
            self.location.join("/"),
            self.message
        );
        if let Some((left, right)) = &self.sides {
            line.push_str(&format!(" (left = {left}, right = {right})"));
        }
        line
    }
}

/// A sorted list of findings; empty iff everything checked out.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    findings: Vec<Finding>,
}

/// Reports from graph and document validators.
pub type ValidationReport = Report;
/// Reports from morphism and different-function validators.
pub type BalanceReport = Report;

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, finding: Finding) {
        self.findings.push(finding);
    }

    pub fn merge(&mut self, other: Report) {
        self.findings.extend(other.findings);
    }

    /// True when no finding has `Error` severity.
    pub fn passed(&self) -> bool {
        self.findings.iter().all(|f| f.severity != Severity::Error)
    }

    pub fn is_empty(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn findings(&self) -> &[Finding] {
        &self.findings
    }

    pub fn errors(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.severity == Severity::Error)
    }

    /// Stable order: location ids, then check id, then message.
    pub fn sort(&mut self) {
        self.findings.sort_by(|a, b| {
            a.location
                .cmp(&b.location)
                .then_with(|| a.check.id().cmp(b.check.id()))
                .then_with(|| a.message.cmp(&b.message))
        });
    }

    pub fn sorted(mut self) -> Self {
        self.sort();
        self
    }

    /// Renders one line per finding plus a verdict line.
    pub fn render(&self, color: bool) -> String {
        let mut out = String::new();
        for finding in &self.findings {
            out.push_str(&finding.render(color));
            out.push('\n');
        }
        let errors = self.errors().count();
        if errors == 0 {
            out.push_str("ok\n");
        } else {
            out.push_str(&format!("failed: {errors} error(s)\n"));
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}
