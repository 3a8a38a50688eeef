//! Corpus files: one link per line, `name: PD[...]` or `name: BR[...]`,
//! optionally followed by `; key = value` expected invariants. `#` starts a comment.

use std::collections::HashSet;

use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::linkdiag::{parse_link, DiagramError, LinkDiagram};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Diagram { line: usize, source: DiagramError },
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub source: String,
    pub diagram: LinkDiagram,
    /// Expected reduced HOMFLY-PT in (a, z).
    pub homfly: Option<LaurentPoly>,
    /// Expected Conway-normalized Alexander polynomial.
    pub alexander: Option<LaurentPoly>,
}

pub const BUNDLED: &str = include_str!("../data/corpus.txt");

pub fn bundled() -> Vec<CorpusEntry> {
    parse_corpus(BUNDLED).expect("bundled corpus parses")
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut out = Vec::new();
    let mut names = HashSet::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let err = |msg: String| CorpusError::Line { line, msg };
        let (name, rest) = body.split_once(':').ok_or_else(|| err("expected `name: diagram`".into()))?;
        let name = name.trim().to_string();
        if name.is_empty() {
            return Err(err("empty name".into()));
        }
        if !names.insert(name.clone()) {
            return Err(err(format!("duplicate name `{name}`")));
        }
        // braid words use `;` internally, so split after the last bracket
        let from = rest.rfind(']').unwrap_or(0);
        let (source, extras) = match rest[from..].find(';') {
            Some(i) => (&rest[..from + i], &rest[from + i + 1..]),
            None => (rest, ""),
        };
        let source = source.trim().to_string();
        let parts = extras.split(';').filter(|p| !p.trim().is_empty());
        let diagram = parse_link(&source)
            .map_err(|source| CorpusError::Diagram { line, source })?
            .with_name(&name);
        let mut entry = CorpusEntry { name, source, diagram, homfly: None, alexander: None };
        for kv in parts {
            let (key, val) = kv.split_once('=').ok_or_else(|| err(format!("expected `key = value`, got `{}`", kv.trim())))?;
            let poly = |vars: &[&str]| {
                LaurentPoly::parse_with_vars(val.trim(), vars).map_err(|e| err(format!("{}: {e}", key.trim())))
            };
            match key.trim() {
                "homfly" => entry.homfly = Some(poly(&["a", "z"])?),
                "alexander" => entry.alexander = Some(poly(&["t"])?),
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        out.push(entry);
    }
    Ok(out)
}

pub fn find<'a>(corpus: &'a [CorpusEntry], name: &str) -> Option<&'a CorpusEntry> {
    corpus.iter().find(|e| e.name == name)
}
