//! Worked examples with known 2-class group structure, used as regression data.

use serde::{Deserialize, Serialize};

use crate::basefield::make_basefield;
use crate::error::{Error, Result};
use crate::quarticfield::make_quarticfield;
use crate::rank::{rank_closed_form, rank_generic};

const CORPUS: &str = include_str!("../data/corpus.txt");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub n_factors: Vec<u64>,
    pub l: u64,
    pub expected_rank: u32,
    /// Group type such as `(2,4,4)`, or `h=<odd class number>` for rank 0.
    pub quoted_type: String,
    /// Descriptor id of the shape the example illustrates.
    pub source: String,
}

impl CorpusEntry {
    pub fn n(&self) -> u64 {
        self.n_factors.iter().product()
    }

    /// Rank implied by `quoted_type`: the number of cyclic components.
    pub fn type_rank(&self) -> u32 {
        if self.quoted_type.starts_with("h=") {
            0
        } else {
            self.quoted_type.split(',').count() as u32
        }
    }
}

fn parse_line(line_no: usize, line: &str) -> Result<CorpusEntry> {
    let err = |msg: &str| Error::CorpusParse {
        line: line_no,
        msg: msg.to_string(),
    };
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    let [factors, l, rank, quoted, source] = fields[..] else {
        return Err(err("expected 5 fields"));
    };
    let n_factors = factors
        .split('*')
        .map(|f| f.trim().parse::<u64>())
        .filter(|f| f != &Ok(1))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| err(&e.to_string()))?;
    Ok(CorpusEntry {
        n_factors,
        l: l.parse().map_err(|_| err("bad l"))?,
        expected_rank: rank.parse().map_err(|_| err("bad rank"))?,
        quoted_type: quoted.to_string(),
        source: source.to_string(),
    })
}

/// Parses corpus text: one `factors | l | rank | type | source` entry per
/// line, `#` comments.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty() && !line.trim_start().starts_with('#'))
        .map(|(i, line)| parse_line(i + 1, line))
        .collect()
}

pub fn load_corpus() -> Vec<CorpusEntry> {
    parse_corpus(CORPUS).expect("embedded corpus parses")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusFailure {
    pub entry: CorpusEntry,
    pub generic: Option<u32>,
    pub closed_form: Option<u32>,
    pub case_id: Option<String>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub checked: usize,
    pub failures: Vec<CorpusFailure>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check(entry: &CorpusEntry) -> Option<CorpusFailure> {
    let fail = |generic, closed_form, case_id, error| {
        Some(CorpusFailure {
            entry: entry.clone(),
            generic,
            closed_form,
            case_id,
            error,
        })
    };
    let outcome = make_basefield(entry.l)
        .and_then(|k| make_quarticfield(entry.n(), &k))
        .and_then(|field| Ok((rank_generic(&field)?, rank_closed_form(&field)?)));
    match outcome {
        Err(e) => fail(None, None, None, Some(e.to_string())),
        Ok((g, c)) if g.rank != entry.expected_rank || c.rank != entry.expected_rank => {
            fail(Some(g.rank), Some(c.rank), Some(c.case_id), None)
        }
        Ok(_) => None,
    }
}

/// Checks both rank paths against every entry, optionally restricted to one `l`.
pub fn verify_corpus(entries: &[CorpusEntry], only_l: Option<u64>) -> CorpusReport {
    let selected: Vec<_> = entries
        .iter()
        .filter(|e| only_l.is_none_or(|l| e.l == l))
        .collect();
    CorpusReport {
        checked: selected.len(),
        failures: selected.into_iter().filter_map(check).collect(),
    }
}
