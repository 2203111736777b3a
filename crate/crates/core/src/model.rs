//! Combinatorial input types: plain hypergraphs and CW-hypergraphs.
//!
//! Indices are 0-based throughout the Rust API. Files, the CLI and the
//! messages inside a [`ValidationReport`] use 1-based indices.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Relative orientation of a d-cell inside a (d+1)-cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A finite hypergraph with labelled, ordered edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
    edge_labels: Vec<String>,
}

fn default_edge_labels(m: usize) -> Vec<String> {
    (1..=m).map(|j| format!("e{j}")).collect()
}

impl Hypergraph {
    /// Builds a validated hypergraph. Edges are 0-based, strictly increasing
    /// vertex lists; labels default to `e1`, `e2`, ...
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let labels = default_edge_labels(edges.len());
        Self::with_labels(vertex_count, edges, labels)
    }

    pub fn with_labels(
        vertex_count: usize,
        edges: Vec<Vec<usize>>,
        edge_labels: Vec<String>,
    ) -> Result<Self> {
        let h = Self::from_raw(vertex_count, edges, edge_labels);
        h.ensure_valid()?;
        Ok(h)
    }

    /// Builds without checking invariants. Use [`Hypergraph::validate`] to
    /// inspect the result; every other operation re-checks validity.
    pub fn from_raw(vertex_count: usize, edges: Vec<Vec<usize>>, edge_labels: Vec<String>) -> Self {
        Hypergraph {
            vertex_count,
            edges,
            edge_labels,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> &[usize] {
        &self.edges[j]
    }

    pub fn edge_labels(&self) -> &[String] {
        &self.edge_labels
    }

    /// Edges containing vertex `v`, in ascending edge order.
    pub fn edges_containing(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.binary_search(&v).is_ok())
            .map(|(j, _)| j)
            .collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.vertex_count == 0 {
            report.error("vertices", "vertex count must be positive");
        }
        if self.edge_labels.len() != self.edges.len() {
            report.error(
                "labels",
                format!(
                    "{} edge labels for {} edges",
                    self.edge_labels.len(),
                    self.edges.len()
                ),
            );
        }
        let mut seen_labels = HashSet::new();
        for (j, label) in self.edge_labels.iter().enumerate() {
            if !seen_labels.insert(label.as_str()) {
                report.error(format!("edge {}", j + 1), format!("duplicate edge name `{label}`"));
            }
        }
        for (j, edge) in self.edges.iter().enumerate() {
            let loc = format!("edge {}", j + 1);
            if edge.is_empty() {
                report.error(&loc, "edge is empty");
            }
            for &v in edge {
                if v >= self.vertex_count {
                    report.error(
                        &loc,
                        format!(
                            "vertex index out of range: {} not in 1..={}",
                            v + 1,
                            self.vertex_count
                        ),
                    );
                }
            }
            if edge.windows(2).any(|w| w[0] >= w[1]) {
                report.error(&loc, "vertex indices are not strictly increasing");
            }
        }
        report.finish()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        self.validate().into_result()
    }
}

/// One entry of the signed incidence relation between d-cells and
/// (d+1)-cells: `lower` is a d-cell, `upper` a (d+1)-cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Incidence {
    pub lower: usize,
    pub upper: usize,
    pub sign: Sign,
}

impl Incidence {
    pub fn new(lower: usize, upper: usize, sign: Sign) -> Self {
        Incidence { lower, upper, sign }
    }
}

/// Hypergraph induced by a finite CW-complex: cell counts per dimension,
/// signed incidences between consecutive dimensions, and optional 0-skeletons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwHypergraph {
    counts: Vec<usize>,
    incidences: Vec<Vec<Incidence>>,
    skeletons: BTreeMap<(usize, usize), Vec<usize>>,
}

impl CwHypergraph {
    /// `incidences[d]` relates d-cells to (d+1)-cells; a missing trailing
    /// level is treated as empty.
    pub fn new(counts: Vec<usize>, incidences: Vec<Vec<Incidence>>) -> Result<Self> {
        Self::with_skeletons(counts, incidences, BTreeMap::new())
    }

    /// Skeleton keys are `(dimension, cell index)` with dimension ≥ 1.
    pub fn with_skeletons(
        counts: Vec<usize>,
        incidences: Vec<Vec<Incidence>>,
        skeletons: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<Self> {
        let cw = Self::from_raw(counts, incidences, skeletons);
        cw.ensure_valid()?;
        Ok(cw)
    }

    pub fn from_raw(
        counts: Vec<usize>,
        mut incidences: Vec<Vec<Incidence>>,
        skeletons: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Self {
        let levels = counts.len().saturating_sub(1);
        if incidences.len() < levels {
            incidences.resize(levels, Vec::new());
        }
        CwHypergraph {
            counts,
            incidences,
            skeletons,
        }
    }

    /// Top cell dimension D.
    pub fn dimension(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    /// Number of incidence levels, i.e. D. Valid levels are `0..levels()`.
    pub fn levels(&self) -> usize {
        self.dimension()
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, dim: usize) -> usize {
        self.counts.get(dim).copied().unwrap_or(0)
    }

    pub fn incidences(&self, level: usize) -> &[Incidence] {
        self.incidences.get(level).map_or(&[], Vec::as_slice)
    }

    pub fn skeletons(&self) -> &BTreeMap<(usize, usize), Vec<usize>> {
        &self.skeletons
    }

    pub fn has_skeletons(&self) -> bool {
        !self.skeletons.is_empty()
    }

    pub fn check_level(&self, level: usize) -> Result<()> {
        if level < self.levels() {
            Ok(())
        } else {
            Err(Error::LevelOutOfRange {
                level,
                levels: self.levels(),
            })
        }
    }

    /// Stored sign of d-cell `lower` inside (d+1)-cell `upper`, if incident.
    pub fn sign(&self, level: usize, lower: usize, upper: usize) -> Option<Sign> {
        self.incidences(level)
            .iter()
            .find(|inc| inc.lower == lower && inc.upper == upper)
            .map(|inc| inc.sign)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.counts.is_empty() {
            report.error("cells", "no cell dimensions given");
        } else if self.counts[0] == 0 {
            report.error("cells 0", "at least one 0-cell is required");
        }
        let levels = self.levels();
        let mut level_ok = vec![true; self.incidences.len()];
        for (d, incs) in self.incidences.iter().enumerate() {
            if d >= levels {
                if !incs.is_empty() {
                    report.error(
                        format!("level {d}"),
                        format!("incidences given for level {d} but top dimension is {}", self.dimension()),
                    );
                    level_ok[d] = false;
                }
                continue;
            }
            let (rows, cols) = (self.counts[d], self.counts[d + 1]);
            let mut pairs = HashSet::new();
            for inc in incs {
                let loc = format!("level {d} incidence ({}, {})", inc.lower + 1, inc.upper + 1);
                if inc.lower >= rows {
                    report.error(&loc, format!("{d}-cell index out of range 1..={rows}"));
                    level_ok[d] = false;
                }
                if inc.upper >= cols {
                    report.error(&loc, format!("{}-cell index out of range 1..={cols}", d + 1));
                    level_ok[d] = false;
                }
                if !pairs.insert((inc.lower, inc.upper)) {
                    report.error(&loc, "duplicate incidence pair");
                    level_ok[d] = false;
                }
            }
        }
        let vertices = self.counts.first().copied().unwrap_or(0);
        for (&(dim, j), skel) in &self.skeletons {
            let loc = format!("skeleton of {dim}-cell {}", j + 1);
            if dim == 0 || dim > self.dimension() {
                report.error(&loc, "skeletons are defined for dimensions 1..=D only");
                continue;
            }
            if j >= self.counts[dim] {
                report.error(&loc, format!("cell index out of range 1..={}", self.counts[dim]));
            }
            if skel.is_empty() {
                report.error(&loc, "skeleton is empty");
            }
            if skel.iter().any(|&v| v >= vertices) {
                report.error(&loc, format!("vertex index out of range 1..={vertices}"));
            }
            if skel.windows(2).any(|w| w[0] >= w[1]) {
                report.error(&loc, "vertex indices are not strictly increasing");
            }
        }
        for d in 1..levels {
            if level_ok[d - 1] && level_ok[d] {
                let zero = self.boundary_composition_is_zero(d);
                if !zero {
                    report.warning(
                        format!("levels {} and {d}", d - 1),
                        format!("I_{}·I_{d} is not zero", d - 1),
                    );
                }
                report.boundary_squared_zero.insert(d, zero);
            }
        }
        report.finish()
    }

    /// Whether I_{d-1}·I_d vanishes. Assumes both levels are in range.
    fn boundary_composition_is_zero(&self, d: usize) -> bool {
        let (rows, mid, cols) = (self.counts[d - 1], self.counts[d], self.counts[d + 1]);
        let mut lower = vec![0i64; rows * mid];
        for inc in &self.incidences[d - 1] {
            lower[inc.lower * mid + inc.upper] = inc.sign.value();
        }
        let mut product = vec![0i64; rows * cols];
        for inc in &self.incidences[d] {
            for r in 0..rows {
                product[r * cols + inc.upper] += lower[r * mid + inc.lower] * inc.sign.value();
            }
        }
        product.iter().all(|&x| x == 0)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        self.validate().into_result()
    }

    /// Underlying plain hypergraph: vertices are the 0-cells and edges are
    /// the 0-skeletons of all higher cells, ordered by dimension then index.
    pub fn project_hypergraph(&self) -> Result<Hypergraph> {
        self.ensure_valid()?;
        let mut edges = Vec::new();
        for dim in 1..=self.dimension() {
            for j in 0..self.counts[dim] {
                let skel = self
                    .skeletons
                    .get(&(dim, j))
                    .ok_or(Error::MissingSkeleton { dim, index: j + 1 })?;
                edges.push(skel.clone());
            }
        }
        Hypergraph::new(self.counts[0], edges)
    }
}

/// Either of the two input kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Hypergraph(Hypergraph),
    Cw(CwHypergraph),
}

impl Instance {
    pub fn validate(&self) -> ValidationReport {
        match self {
            Instance::Hypergraph(h) => h.validate(),
            Instance::Cw(x) => x.validate(),
        }
    }
}

impl From<Hypergraph> for Instance {
    fn from(h: Hypergraph) -> Self {
        Instance::Hypergraph(h)
    }
}

impl From<CwHypergraph> for Instance {
    fn from(x: CwHypergraph) -> Self {
        Instance::Cw(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Warning => "warning",
            Severity::Error => "error",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Issue {
    pub severity: Severity,
    pub location: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub issues: Vec<Issue>,
    /// Keyed by level d ≥ 1: whether I_{d-1}·I_d = 0.
    pub boundary_squared_zero: BTreeMap<usize, bool>,
}

impl ValidationReport {
    fn push(&mut self, severity: Severity, location: impl Into<String>, message: impl Into<String>) {
        self.issues.push(Issue {
            severity,
            location: location.into(),
            message: message.into(),
        });
    }

    fn error(&mut self, location: impl Into<String>, message: impl Into<String>) {
        self.push(Severity::Error, location, message);
    }

    fn warning(&mut self, location: impl Into<String>, message: impl Into<String>) {
        self.push(Severity::Warning, location, message);
    }

    fn finish(mut self) -> Self {
        self.ok = !self.issues.iter().any(|i| i.severity == Severity::Error);
        self
    }

    pub fn errors(&self) -> impl Iterator<Item = &Issue> {
        self.issues.iter().filter(|i| i.severity == Severity::Error)
    }

    pub fn into_result(self) -> Result<()> {
        match self.errors().next() {
            None => Ok(()),
            Some(first) => Err(Error::Invalid(format!("{}: {}", first.location, first.message))),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ok: {}", self.ok)?;
        for issue in &self.issues {
            writeln!(f, "{}: {}: {}", issue.severity, issue.location, issue.message)?;
        }
        for (d, zero) in &self.boundary_squared_zero {
            writeln!(f, "I_{}·I_{d} = 0: {zero}", d - 1)?;
        }
        Ok(())
    }
}
