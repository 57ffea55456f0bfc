//! Verification suites producing structured reports.

use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::report::Report;

pub mod covers;
pub mod golay;
pub mod lemmas;
pub mod properties;
pub mod rank4;
pub mod tables;

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Include long-running cases.
    pub deep: bool,
    /// Restrict the rank-4 suite to one row.
    pub row: Option<u32>,
    /// Parameter range for the symmetric-group rows.
    pub n_range: Option<RangeInclusive<u32>>,
    pub data_pack: Option<PathBuf>,
    pub seed: u64,
}

impl Options {
    /// Default options with the seed taken from `DTG_SEED`.
    pub fn from_env() -> Self {
        Options { seed: crate::group::seed_from_env(), ..Default::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Tables,
    Rank4,
    Lemmas,
    Golay,
    Covers,
    Properties,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [Suite::Tables, Suite::Rank4, Suite::Lemmas, Suite::Golay, Suite::Covers, Suite::Properties];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Rank4 => "rank4",
            Suite::Lemmas => "lemmas",
            Suite::Golay => "golay",
            Suite::Covers => "covers",
            Suite::Properties => "properties",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Unsupported(format!("unknown suite `{s}`")))
    }
}

fn run_one(suite: Suite, opts: &Options) -> Report {
    match suite {
        Suite::Tables => tables::run(opts),
        Suite::Rank4 => rank4::run(opts),
        Suite::Lemmas => lemmas::run(opts),
        Suite::Golay => golay::run(opts),
        Suite::Covers => covers::run(opts),
        Suite::Properties => properties::run(opts),
        Suite::All => unreachable!("expanded by run"),
    }
}

/// Runs one suite, or every suite in parallel with the reports concatenated
/// in a fixed order and case ids prefixed by the suite name.
pub fn run(suite: Suite, opts: &Options) -> Report {
    if suite != Suite::All {
        return run_one(suite, opts);
    }
    let reports: Vec<Report> = std::thread::scope(|s| {
        let handles: Vec<_> = Suite::EACH.iter().map(|&x| s.spawn(move || run_one(x, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut all = Report::new("all");
    for mut r in reports {
        for c in &mut r.cases {
            c.id = format!("{}:{}", r.suite, c.id);
        }
        all.extend(r);
    }
    all
}
