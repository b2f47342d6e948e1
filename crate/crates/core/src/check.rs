//! Named validator dispatch over catalog entries, shared by the CLI and the
//! C interface.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Signed;

use crate::catalog::{select, CatalogEntry};
use crate::error::{Error, Result};
use crate::theorems::{
    chi_halfspace_report, line_constraints_check, lattice_separation, syzygy_boundary_check,
    stream_divergence_monitor, symmetry_check, syzygy_entry_indices, chain_report, divisor_walk,
    walk_depth, TheoremReport, DEFAULT_BOUND, DEFAULT_HORIZON,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckId {
    T1,
    T3,
    T11,
    P16,
    P44,
    Sym,
    Line,
    Chi,
    Stream,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::T1,
        CheckId::T3,
        CheckId::T11,
        CheckId::P16,
        CheckId::P44,
        CheckId::Sym,
        CheckId::Line,
        CheckId::Chi,
        CheckId::Stream,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::T1 => "t1",
            CheckId::T3 => "t3",
            CheckId::T11 => "t11",
            CheckId::P16 => "p16",
            CheckId::P44 => "p44",
            CheckId::Sym => "sym",
            CheckId::Line => "line",
            CheckId::Chi => "chi",
            CheckId::Stream => "stream",
        }
    }

    fn uses_horizon(self) -> bool {
        matches!(self, CheckId::T11 | CheckId::P44 | CheckId::Stream)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = CheckId::ALL.iter().map(|c| c.name()).collect();
                Error::InvalidArgument(format!("unknown check `{s}`; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Slice rank for `t1` (default 1) and `stream` (default: the stream's).
    pub rank: Option<u64>,
    pub horizon: u64,
    /// Divergence radius for `stream`.
    pub bound: BigRational,
    /// Replaces the declared MCM indices of the selected line.
    pub declared_mcm: Option<Vec<i64>>,
    /// Name of the line, stream, scenario, Betti class or chi label.
    pub item: Option<String>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            rank: None,
            horizon: DEFAULT_HORIZON,
            bound: BigRational::from_integer(DEFAULT_BOUND.into()),
            declared_mcm: None,
            item: None,
        }
    }
}

/// Runs `id` on `entry`. The report's parameters record the entry and the
/// options that influenced it.
pub fn run_check(entry: &CatalogEntry, id: CheckId, opts: &CheckOptions) -> Result<TheoremReport> {
    let item = opts.item.as_deref();
    let horizon = usize::try_from(opts.horizon)
        .map_err(|_| Error::InvalidArgument(format!("horizon {} too large", opts.horizon)))?;
    let mut report = match id {
        CheckId::T1 => {
            let r = opts.rank.unwrap_or(1);
            chain_report(&entry.mcm_classes_of_rank(r), r, &entry.ring)?
        }
        CheckId::T3 | CheckId::Line => {
            let mut line = entry.line(item)?.clone();
            if let Some(d) = &opts.declared_mcm {
                line.declared_mcm = d.iter().copied().collect();
            }
            if id == CheckId::T3 {
                divisor_walk(&line, &entry.ring, walk_depth(&line))?
            } else {
                line_constraints_check(&line)
            }
        }
        CheckId::T11 => {
            let (m, betti, cone) = entry.syzygy_scenario(item)?;
            syzygy_entry_indices(&m, &betti, &cone, horizon)?
        }
        CheckId::P16 => lattice_separation(&entry.module_classes())?,
        CheckId::P44 => {
            let record = select(&entry.betti, item, |b| &b.class, "Betti record")?;
            let m = entry.class(&record.class)?;
            syzygy_boundary_check(m.rank, &record.sequence, horizon)?
        }
        CheckId::Sym => symmetry_check(&entry.mcm_classes(), &entry.ring)?,
        CheckId::Chi => {
            let chi = select(&entry.chi, item, |c| &c.label, "chi functional")?;
            chi_halfspace_report(&chi.functional, &entry.mcm_classes(), &chi.probe, &entry.ring)?
        }
        CheckId::Stream => {
            if opts.bound.is_negative() {
                return Err(Error::InvalidArgument(format!("bound must be nonnegative, got {}", opts.bound)));
            }
            let s = select(&entry.streams, item, |s| &s.name, "stream")?;
            let group = entry.kernel_group()?;
            let mut report =
                stream_divergence_monitor(s.build(&group).as_ref(), opts.rank.unwrap_or(s.rank), opts.horizon, &opts.bound)?;
            report.parameter("bound", crate::linalg::format_rational(&opts.bound));
            report
        }
    };
    report.parameter("entry", &entry.name);
    if id.uses_horizon() {
        report.parameter("horizon", opts.horizon);
    }
    Ok(report)
}
