//! Brute-force walk enumeration, used as the independent oracle for the
//! matrix-power counts in [`crate::walkcount`].
//!
//! Adjacency is read directly from the model data (edge memberships and
//! incidence triples), never from the Laplacian matrices. Enumeration is
//! exponential in the walk length and bounded by a walk budget.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::model::{CwHypergraph, Hypergraph, Instance, Sign};
use crate::walkcount::{power_table, signed_base, unsigned_base, WalkKind};

/// Default ceiling on walks generated by one enumeration run.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// An alternating sequence of cell indices (0-based).
///
/// Even positions hold the outer tier (vertices, edges, d-cells or
/// (d+1)-cells depending on `kind`); odd positions hold the other tier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    pub kind: WalkKind,
    pub level: usize,
    pub steps: Vec<usize>,
}

impl Walk {
    pub fn new(kind: WalkKind, level: usize, steps: Vec<usize>) -> Self {
        Walk { kind, level, steps }
    }

    /// Number of middle-tier elements.
    pub fn length(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn start(&self) -> usize {
        self.steps[0]
    }

    pub fn end(&self) -> usize {
        self.steps[self.steps.len() - 1]
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.level;
        for (pos, &idx) in self.steps.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            let outer = pos % 2 == 0;
            match (self.kind, outer) {
                (WalkKind::Vertex, true) | (WalkKind::Edge, false) => write!(f, "v{}", idx + 1)?,
                (WalkKind::Vertex, false) | (WalkKind::Edge, true) => write!(f, "e{}", idx + 1)?,
                (WalkKind::Lower, true) | (WalkKind::Upper, false) => write!(f, "e{}^{}", idx + 1, d)?,
                (WalkKind::Lower, false) | (WalkKind::Upper, true) => write!(f, "e{}^{}", idx + 1, d + 1)?,
            }
        }
        Ok(())
    }
}

/// Bipartite adjacency between the outer tier and the middle tier, with the
/// incidence sign on every link. Lists are sorted by index.
#[derive(Debug, Clone)]
struct Alternating {
    outer_to_mid: Vec<Vec<(usize, Sign)>>,
    mid_to_outer: Vec<Vec<(usize, Sign)>>,
}

impl Alternating {
    fn from_links(outer: usize, mid: usize, links: impl Iterator<Item = (usize, usize, Sign)>) -> Self {
        let mut outer_to_mid = vec![Vec::new(); outer];
        let mut mid_to_outer = vec![Vec::new(); mid];
        for (o, m, s) in links {
            outer_to_mid[o].push((m, s));
            mid_to_outer[m].push((o, s));
        }
        for list in outer_to_mid.iter_mut().chain(mid_to_outer.iter_mut()) {
            list.sort_unstable();
        }
        Alternating {
            outer_to_mid,
            mid_to_outer,
        }
    }

    fn for_hypergraph(h: &Hypergraph, kind: WalkKind) -> Result<Self> {
        h.ensure_valid()?;
        let memberships = h
            .edges()
            .iter()
            .enumerate()
            .flat_map(|(e, vs)| vs.iter().map(move |&v| (v, e)));
        match kind {
            WalkKind::Vertex => Ok(Self::from_links(
                h.vertex_count(),
                h.edge_count(),
                memberships.map(|(v, e)| (v, e, Sign::Plus)),
            )),
            WalkKind::Edge => Ok(Self::from_links(
                h.edge_count(),
                h.vertex_count(),
                memberships.map(|(v, e)| (e, v, Sign::Plus)),
            )),
            other => Err(Error::KindMismatch { kind: other.name() }),
        }
    }

    fn for_cw(x: &CwHypergraph, kind: WalkKind, level: usize) -> Result<Self> {
        x.check_level(level)?;
        x.ensure_valid()?;
        let (lo, hi) = (x.count(level), x.count(level + 1));
        let links = x.incidences(level).iter();
        match kind {
            WalkKind::Lower => Ok(Self::from_links(lo, hi, links.map(|i| (i.lower, i.upper, i.sign)))),
            WalkKind::Upper => Ok(Self::from_links(hi, lo, links.map(|i| (i.upper, i.lower, i.sign)))),
            other => Err(Error::KindMismatch { kind: other.name() }),
        }
    }

    fn outer_count(&self) -> usize {
        self.outer_to_mid.len()
    }

    /// Depth-first traversal of every walk from `start` of length
    /// `0..=max_len`, in lexicographic order of the step sequence. The
    /// callback receives the steps and the running sign product.
    fn traverse(
        &self,
        start: usize,
        max_len: usize,
        limit: u64,
        mut on_walk: impl FnMut(&[usize], Sign),
    ) -> Result<()> {
        let mut path = vec![start];
        let mut produced = 1u64;
        if produced > limit {
            return Err(Error::BudgetExceeded { limit });
        }
        on_walk(&path, Sign::Plus);
        // (path length to restore, middle element, next outer element, sign)
        let mut stack: Vec<(usize, usize, usize, Sign)> = Vec::new();
        let push_children = |stack: &mut Vec<_>, node: usize, len: usize, sign: Sign| {
            for &(m, s1) in self.outer_to_mid[node].iter().rev() {
                for &(next, s2) in self.mid_to_outer[m].iter().rev() {
                    stack.push((len, m, next, sign * s1 * s2));
                }
            }
        };
        if max_len > 0 {
            push_children(&mut stack, start, 1, Sign::Plus);
        }
        while let Some((len, m, next, sign)) = stack.pop() {
            path.truncate(len);
            path.push(m);
            path.push(next);
            produced += 1;
            if produced > limit {
                return Err(Error::BudgetExceeded { limit });
            }
            on_walk(&path, sign);
            if path.len() / 2 < max_len {
                push_children(&mut stack, next, path.len(), sign);
            }
        }
        Ok(())
    }

    fn collect(&self, kind: WalkKind, level: usize, from: usize, to: usize, k: usize, limit: u64) -> Result<Vec<Walk>> {
        let mut out = Vec::new();
        self.traverse(from, k, limit, |steps, _| {
            if steps.len() / 2 == k && steps[steps.len() - 1] == to {
                out.push(Walk::new(kind, level, steps.to_vec()));
            }
        })?;
        Ok(out)
    }

    /// `tally[k][end]`: signed number of walks from `start` of length k.
    fn tally(&self, start: usize, kmax: usize, limit: u64) -> Result<Vec<Vec<i64>>> {
        let mut tally = vec![vec![0i64; self.outer_count()]; kmax + 1];
        self.traverse(start, kmax, limit, |steps, sign| {
            tally[steps.len() / 2][steps[steps.len() - 1]] += sign.value();
        })?;
        Ok(tally)
    }
}

fn check_index(what: &'static str, index: usize, bound: usize) -> Result<()> {
    if index < bound {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            what,
            index: index + 1,
            bound,
        })
    }
}

/// All vertex or edge walks of length exactly `k` from `from` to `to`,
/// lexicographically ordered.
pub fn enum_walks(h: &Hypergraph, kind: WalkKind, from: usize, to: usize, k: usize, limit: u64) -> Result<Vec<Walk>> {
    let g = Alternating::for_hypergraph(h, kind)?;
    check_index(kind.name(), from, g.outer_count())?;
    check_index(kind.name(), to, g.outer_count())?;
    g.collect(kind, 0, from, to, k, limit)
}

/// All lower or upper walks of length exactly `k`, each with its sign.
pub fn enum_signed_walks(
    x: &CwHypergraph,
    level: usize,
    kind: WalkKind,
    from: usize,
    to: usize,
    k: usize,
    limit: u64,
) -> Result<Vec<(Walk, Sign)>> {
    let g = Alternating::for_cw(x, kind, level)?;
    let what = if kind == WalkKind::Lower { "lower-cell" } else { "upper-cell" };
    check_index(what, from, g.outer_count())?;
    check_index(what, to, g.outer_count())?;
    g.collect(kind, level, from, to, k, limit)?
        .into_iter()
        .map(|w| walk_sign(x, &w).map(|s| (w, s)))
        .collect()
}

/// Sign of a lower or upper walk: the product, over each middle-tier
/// element, of its stored incidence signs with its two neighbours.
pub fn walk_sign(x: &CwHypergraph, w: &Walk) -> Result<Sign> {
    if !w.kind.is_signed() {
        return Err(Error::KindMismatch { kind: w.kind.name() });
    }
    x.check_level(w.level)?;
    if w.steps.len().is_multiple_of(2) {
        return Err(Error::InvalidWalk("walk must have an odd number of steps".into()));
    }
    let lookup = |outer: usize, mid: usize| {
        let (lower, upper) = match w.kind {
            WalkKind::Lower => (outer, mid),
            _ => (mid, outer),
        };
        x.sign(w.level, lower, upper).ok_or_else(|| {
            let (dl, du) = (w.level, w.level + 1);
            Error::InvalidWalk(format!(
                "{dl}-cell {} is not incident to {du}-cell {}",
                lower + 1,
                upper + 1
            ))
        })
    };
    if w.steps.len() == 1 {
        let bound = match w.kind {
            WalkKind::Lower => x.count(w.level),
            _ => x.count(w.level + 1),
        };
        check_index("walk start", w.steps[0], bound)?;
    }
    let mut sign = Sign::Plus;
    for r in (1..w.steps.len()).step_by(2) {
        let mid = w.steps[r];
        sign = sign * lookup(w.steps[r - 1], mid)? * lookup(w.steps[r + 1], mid)?;
    }
    Ok(sign)
}

/// Checks the membership constraints of a vertex or edge walk.
pub fn check_walk(h: &Hypergraph, w: &Walk) -> Result<()> {
    let (outer_is_vertex, outer_bound, mid_bound) = match w.kind {
        WalkKind::Vertex => (true, h.vertex_count(), h.edge_count()),
        WalkKind::Edge => (false, h.edge_count(), h.vertex_count()),
        other => return Err(Error::KindMismatch { kind: other.name() }),
    };
    if w.steps.len().is_multiple_of(2) {
        return Err(Error::InvalidWalk("walk must have an odd number of steps".into()));
    }
    for (pos, &idx) in w.steps.iter().enumerate() {
        let bound = if pos % 2 == 0 { outer_bound } else { mid_bound };
        check_index("walk step", idx, bound)?;
    }
    for (pos, pair) in w.steps.windows(2).enumerate() {
        // pos even: (outer, mid); pos odd: (mid, outer)
        let (outer, mid) = if pos % 2 == 0 { (pair[0], pair[1]) } else { (pair[1], pair[0]) };
        let (v, e) = if outer_is_vertex { (outer, mid) } else { (mid, outer) };
        if h.edge(e).binary_search(&v).is_err() {
            return Err(Error::InvalidWalk(format!("vertex {} is not in edge {}", v + 1, e + 1)));
        }
    }
    Ok(())
}

/// One compared value of a cross check; indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub kind: WalkKind,
    pub level: usize,
    pub from: usize,
    pub to: usize,
    pub length: usize,
    pub matrix: BigInt,
    pub oracle: BigInt,
}

impl CheckEntry {
    pub fn agrees(&self) -> bool {
        self.matrix == self.oracle
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub description: String,
    pub entries: Vec<CheckEntry>,
    pub mismatches: Vec<CheckEntry>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn compare(
    g: &Alternating,
    base: &crate::laplacian::ExactMatrix,
    kind: WalkKind,
    level: usize,
    kmax: usize,
    limit: u64,
    entries: &mut Vec<CheckEntry>,
) -> Result<()> {
    let powers = power_table(base, kmax as u64);
    for from in 0..g.outer_count() {
        let tally = g.tally(from, kmax, limit)?;
        for (k, row) in tally.iter().enumerate() {
            for (to, &count) in row.iter().enumerate() {
                entries.push(CheckEntry {
                    kind,
                    level,
                    from,
                    to,
                    length: k,
                    matrix: powers[k].get(from, to).clone(),
                    oracle: BigInt::from(count),
                });
            }
        }
    }
    Ok(())
}

/// Lower and upper comparisons at a single level of a CW-hypergraph.
pub fn cross_check_level(x: &CwHypergraph, level: usize, kmax: usize, limit: u64) -> Result<CrossCheckReport> {
    let mut entries = Vec::new();
    for kind in [WalkKind::Lower, WalkKind::Upper] {
        let g = Alternating::for_cw(x, kind, level)?;
        compare(&g, &signed_base(x, kind, level)?, kind, level, kmax, limit, &mut entries)?;
    }
    let mismatches = entries.iter().filter(|e| !e.agrees()).cloned().collect();
    Ok(CrossCheckReport {
        description: format!(
            "level {level} with {} and {} cells, lengths 0..={kmax}",
            x.count(level),
            x.count(level + 1)
        ),
        entries,
        mismatches,
    })
}

/// Compares matrix-power values with brute-force walk tallies for every
/// applicable kind, level, index pair and length `0..=kmax`.
pub fn cross_check(object: &Instance, kmax: usize, limit: u64) -> Result<CrossCheckReport> {
    let mut entries = Vec::new();
    let description = match object {
        Instance::Hypergraph(h) => {
            for kind in [WalkKind::Vertex, WalkKind::Edge] {
                let g = Alternating::for_hypergraph(h, kind)?;
                compare(&g, &unsigned_base(h, kind)?, kind, 0, kmax, limit, &mut entries)?;
            }
            format!(
                "hypergraph with {} vertices and {} edges, lengths 0..={kmax}",
                h.vertex_count(),
                h.edge_count()
            )
        }
        Instance::Cw(x) => {
            x.ensure_valid()?;
            for level in 0..x.levels() {
                for kind in [WalkKind::Lower, WalkKind::Upper] {
                    let g = Alternating::for_cw(x, kind, level)?;
                    compare(&g, &signed_base(x, kind, level)?, kind, level, kmax, limit, &mut entries)?;
                }
            }
            let counts: Vec<String> = x.counts().iter().map(ToString::to_string).collect();
            format!(
                "CW-hypergraph with cell counts ({}), lengths 0..={kmax}",
                counts.join(", ")
            )
        }
    };
    let mismatches = entries.iter().filter(|e| !e.agrees()).cloned().collect();
    Ok(CrossCheckReport {
        description,
        entries,
        mismatches,
    })
}
