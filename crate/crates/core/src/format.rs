//! Line-oriented text formats for systems.
//!
//! A document holds any number of systems, each in one of three forms:
//!
//! ```text
//! # compact listing, one system per line
//! 2468bcfgjk578achijk867cbjkhi7ihfgkj8dekjihhijkgfjkhiegedgfkjgfedikkjih
//! # base blocks developed mod v
//! cyclic v=21 0,1,5;0,2,10;0,3,9;0,7,14
//! # explicit blocks after a v=N header
//! v=7
//! 0 1 3
//! 1 2 4
//! ...
//! ```
//!
//! Blank lines and `#` comments are ignored.

use crate::codec::{decode_compact, order_for_length};
use crate::error::{Result, StsError};
use crate::generate::CyclicSpec;
use crate::system::TripleSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Compact { line: usize, code: String },
    Cyclic { line: usize, spec: CyclicSpec },
    Triples { line: usize, v: usize, triples: Vec<[usize; 3]> },
}

impl Entry {
    /// 1-based line where the entry starts.
    pub fn line(&self) -> usize {
        match self {
            Entry::Compact { line, .. } | Entry::Cyclic { line, .. } | Entry::Triples { line, .. } => *line,
        }
    }

    /// Build the system. Compact codes take their order from `v`, else from
    /// their length, else 21.
    pub fn to_system(&self, v: Option<usize>) -> Result<TripleSystem> {
        match self {
            Entry::Compact { code, .. } => {
                let v = v.or_else(|| order_for_length(code.chars().count())).unwrap_or(21);
                decode_compact(code, v)
            }
            Entry::Cyclic { spec, .. } => spec.generate(),
            Entry::Triples { v, triples, .. } => TripleSystem::from_raw(*v, triples),
        }
    }
}

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_entries(text: &str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    let mut open: Option<Entry> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = strip(raw);
        if s.is_empty() {
            continue;
        }
        if let Some(n) = s.strip_prefix("v=") {
            let v = n.trim().parse().map_err(|_| StsError::Parse {
                line,
                reason: format!("bad order in header {s:?}"),
            })?;
            out.extend(open.replace(Entry::Triples { line, v, triples: Vec::new() }));
            continue;
        }
        if s.starts_with("cyclic") {
            let spec = s
                .parse::<CyclicSpec>()
                .map_err(|e| StsError::Parse { line, reason: e.to_string() })?;
            out.extend(open.take());
            out.push(Entry::Cyclic { line, spec });
            continue;
        }
        let words: Vec<&str> = s.split_whitespace().collect();
        if let Some(Entry::Triples { triples, .. }) = open.as_mut() {
            if words.len() == 3 {
                let mut t = [0; 3];
                for (slot, w) in t.iter_mut().zip(&words) {
                    *slot = w.parse().map_err(|_| StsError::Parse {
                        line,
                        reason: format!("bad point {w:?}"),
                    })?;
                }
                triples.push(t);
                continue;
            }
        }
        if words.len() != 1 {
            return Err(StsError::Parse {
                line,
                reason: format!("unrecognised line {s:?}"),
            });
        }
        out.extend(open.take());
        out.push(Entry::Compact { line, code: s.to_string() });
    }
    out.extend(open);
    Ok(out)
}

/// Parse a document and build every system in it.
pub fn read_systems(text: &str, v: Option<usize>) -> Result<Vec<TripleSystem>> {
    parse_entries(text)?
        .iter()
        .map(|e| {
            e.to_system(v).map_err(|err| match err {
                StsError::Parse { .. } => err,
                other => StsError::Parse {
                    line: e.line(),
                    reason: other.to_string(),
                },
            })
        })
        .collect()
}

/// The explicit block-list form: a `v=N` header and one block per line.
pub fn write_triples(sys: &TripleSystem) -> String {
    let mut out = format!("v={}\n", sys.order());
    for t in sys.blocks() {
        let [a, b, c] = t.points();
        out.push_str(&format!("{a} {b} {c}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::encode_compact;
    use crate::generate::fano;

    #[test]
    fn mixed_document() {
        let fano_code = encode_compact(&fano());
        let text = format!(
            "# header\n\n{fano_code}\ncyclic v=7 0,1,3  # comment\n{}\n",
            write_triples(&fano())
        );
        let entries = parse_entries(&text).unwrap();
        assert_eq!(entries.len(), 3);
        assert!(matches!(entries[0], Entry::Compact { line: 3, .. }));
        assert!(matches!(entries[1], Entry::Cyclic { line: 4, .. }));
        assert!(matches!(entries[2], Entry::Triples { line: 5, v: 7, .. }));
        for s in read_systems(&text, None).unwrap() {
            assert_eq!(s, fano());
        }
    }

    #[test]
    fn bad_lines_report_their_number() {
        assert!(matches!(
            parse_entries("\n0 1 2\n"),
            Err(StsError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_entries("v=x\n"),
            Err(StsError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            read_systems("v=7\n0 1 2\n", None),
            Err(StsError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn short_code_defaults_to_order_21() {
        let code = "2468bcfgjk578achijk867cbjkhi7ihfgkj8dekjihhijkgfjkhiegedgfkjgfedikkji";
        let e = &parse_entries(code).unwrap()[0];
        assert!(matches!(e.to_system(None), Err(StsError::IncompleteSystem { step: 70, .. })));
    }
}
