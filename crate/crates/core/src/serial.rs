//! JSON interchange formats. Every emitted document is compact, has sorted
//! codewords, and re-parses to an equal value.

use serde::{Deserialize, Serialize};

use crate::codes::ModularCode;
use crate::constructions::product::PermutationPlan;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::metrics::Metric;
use crate::tilings::StripSequence;
use crate::word::{Space, Word};

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum Raw {
    Lattice {
        n: usize,
        rows: Vec<Vec<i64>>,
    },
    ModularCode {
        n: usize,
        m: u64,
        metric: Metric,
        codewords: Vec<Vec<i64>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Lattice(Lattice),
    Code(ModularCode),
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn lattice_to_json(lattice: &Lattice) -> String {
    let raw = Raw::Lattice {
        n: lattice.n(),
        rows: lattice.rows().to_vec(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

pub fn code_to_json(code: &ModularCode) -> String {
    let raw = Raw::ModularCode {
        n: code.n(),
        m: code.m(),
        metric: code.metric(),
        codewords: code.words().map(Word::into_coords).collect(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

pub fn document_to_json(doc: &Document) -> String {
    match doc {
        Document::Lattice(l) => lattice_to_json(l),
        Document::Code(c) => code_to_json(c),
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    match serde_json::from_str::<Raw>(text).map_err(parse_err)? {
        Raw::Lattice { n, rows } => {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::Parse(format!(
                    "lattice needs {n} rows of length {n}"
                )));
            }
            Ok(Document::Lattice(Lattice::new(rows)?))
        }
        Raw::ModularCode {
            n,
            m,
            metric,
            codewords,
        } => {
            if metric == Metric::Manhattan {
                return Err(Error::Parse(
                    "modular codes use the lee or hamming metric".into(),
                ));
            }
            let space = Space::new(n, m)?;
            let words = codewords
                .into_iter()
                .map(|c| {
                    if c.len() != n {
                        return Err(Error::Parse(format!(
                            "codeword of length {} in a length-{n} code",
                            c.len()
                        )));
                    }
                    Word::modular(c, m)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Document::Code(ModularCode::from_words(
                space, metric, &words,
            )?))
        }
    }
}

pub fn parse_code(text: &str) -> Result<ModularCode> {
    match parse_document(text)? {
        Document::Code(c) => Ok(c),
        Document::Lattice(_) => Err(Error::Parse("expected a modular_code document".into())),
    }
}

pub fn parse_lattice(text: &str) -> Result<Lattice> {
    match parse_document(text)? {
        Document::Lattice(l) => Ok(l),
        Document::Code(_) => Err(Error::Parse("expected a lattice document".into())),
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPermutation {
    size: usize,
    map: Vec<u64>,
}

/// `{"size":η,"map":[1,…]}`, 1-based.
pub fn permutation_to_json(plan: &PermutationPlan) -> String {
    let raw = RawPermutation {
        size: plan.size(),
        map: plan.to_one_based(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

pub fn parse_permutation(text: &str) -> Result<PermutationPlan> {
    let raw: RawPermutation = serde_json::from_str(text).map_err(parse_err)?;
    PermutationPlan::from_one_based(raw.size, &raw.map)
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawSequence {
    Indexed { start: i64, values: Vec<u64> },
    Bare(Vec<u64>),
}

/// `{"start":i0,"values":[…]}` or a bare array starting at index 0.
pub fn parse_sequence(text: &str, radius: u64) -> Result<StripSequence> {
    let (start, values) = match serde_json::from_str::<RawSequence>(text).map_err(parse_err)? {
        RawSequence::Indexed { start, values } => (start, values),
        RawSequence::Bare(values) => (0, values),
    };
    StripSequence::new(radius, start, values)
}

pub fn sequence_to_json(seq: &StripSequence) -> String {
    serde_json::json!({ "start": seq.start, "values": seq.values }).to_string()
}
