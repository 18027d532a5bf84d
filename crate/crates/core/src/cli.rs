//! Command dispatch behind the `szczarba` binary.
//!
//! [`run`] turns a validated [`RunConfig`] into a document; [`emit`] writes it.
//! Machine-readable documents carry a top-level `schema_version`.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::diagram::{category_dot, hom_dot, sz_figure_dot, sz_figure_tikz, Family};
use crate::error::{Error, Result};
use crate::hom::{
    enumerate_nerve, Chain, GHom, GHomElement, HomPoset, SequenceIndex, SubsetHom, SubsetMorphism,
};
use crate::sz::{
    hin_vertex, sz_elementwise, sz_operator_route, AlphaTable, ElementwiseSz, SzResult, VerifyReport,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable holding the default bound for `verify`.
pub const MAX_N_ENV: &str = "SZCZARBA_MAX_N";
pub const DEFAULT_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Dot,
    Tikz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum DiagramKind {
    /// Objects `0..=n` with arrows labelled by hom posets.
    Category,
    /// Two panels for one hom, with the image of the map highlighted.
    Sz,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Compute { n: usize, p: usize, q: usize, sequence: Vec<usize>, explain: bool },
    Hin { n: usize, subset: Vec<usize> },
    Hom { n: usize, p: usize, q: usize, family: Family, length: usize, nondegenerate: bool },
    Verify { max_n: usize },
    Diagram { n: usize, kind: DiagramKind, family: Family, p: usize, q: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub output: Option<PathBuf>,
}

/// Bound for `verify` when none is given: `$SZCZARBA_MAX_N`, else 6.
pub fn default_max_n() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let allowed: &[Format] = match &self.command {
            Command::Compute { .. } | Command::Hin { .. } | Command::Verify { .. } => {
                &[Format::Text, Format::Json]
            }
            Command::Hom { .. } => &[Format::Text, Format::Json, Format::Dot],
            Command::Diagram { kind: DiagramKind::Category, .. } => &[Format::Dot],
            Command::Diagram { kind: DiagramKind::Sz, .. } => &[Format::Dot, Format::Tikz],
        };
        if !allowed.contains(&self.format) {
            return Err(Error::InvalidParameter(format!(
                "format {:?} is not available for this command (allowed: {allowed:?})",
                self.format
            )));
        }
        let objects = |n: usize, p: usize, q: usize, strict: bool| {
            if q > n || p > q || (strict && p == q) {
                let rel = if strict { "<" } else { "<=" };
                Err(Error::InvalidParameter(format!(
                    "objects must satisfy 0 <= p {rel} q <= n, got p={p}, q={q}, n={n}"
                )))
            } else {
                Ok(())
            }
        };
        match &self.command {
            Command::Compute { n, p, q, sequence, .. } => {
                objects(*n, *p, *q, true)?;
                SequenceIndex::new(*p, *q, sequence.clone())?;
            }
            Command::Hin { n, subset } => {
                SubsetMorphism::from_members(*n, subset.clone())?;
            }
            Command::Hom { n, p, q, .. } => objects(*n, *p, *q, false)?,
            Command::Verify { .. } => {}
            Command::Diagram { n, kind: DiagramKind::Sz, p, q, .. } => objects(*n, *p, *q, true)?,
            Command::Diagram { .. } => {}
        }
        Ok(())
    }
}

/// Image under the map of one chain of a subset hom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainImage {
    pub chain: Chain<SubsetMorphism>,
    pub image: ElementwiseSz,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum HomListing {
    C {
        elements: Vec<SubsetMorphism>,
        chains: Vec<ChainImage>,
    },
    G {
        elements: Vec<GHomElement>,
        chains: Vec<Chain<GHomElement>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Document {
    Compute {
        result: SzResult,
        alpha: AlphaTable,
    },
    Hin {
        subset: SubsetMorphism,
        image: GHomElement,
        pretty: String,
    },
    Hom {
        n: usize,
        p: usize,
        q: usize,
        length: usize,
        nondegenerate: bool,
        listing: HomListing,
    },
    Verify {
        report: VerifyReport,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: u32,
    #[serde(flatten)]
    pub document: Document,
}

impl Envelope {
    pub fn new(document: Document) -> Self {
        Envelope { schema_version: SCHEMA_VERSION, document }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize") + "\n"
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let env: Envelope =
            serde_json::from_str(s).map_err(|e| Error::InvalidParameter(format!("bad document: {e}")))?;
        if env.schema_version != SCHEMA_VERSION {
            return Err(Error::InvalidParameter(format!(
                "unsupported schema_version {}",
                env.schema_version
            )));
        }
        Ok(env)
    }
}

/// What a command produced: the document and whether it counts as success.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub document: String,
    pub success: bool,
}

impl Outcome {
    fn ok(document: String) -> Self {
        Outcome { document, success: true }
    }

    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }
}

pub fn run(config: &RunConfig) -> Result<Outcome> {
    config.validate()?;
    let format = config.format;
    match &config.command {
        Command::Compute { n, p, q, sequence, explain } => {
            let seq = SequenceIndex::new(*p, *q, sequence.clone())?;
            let result = sz_operator_route(&seq, *n)?;
            let alpha = AlphaTable::new(*n, &seq)?;
            if format == Format::Json {
                return Ok(Outcome::ok(Envelope::new(Document::Compute { result, alpha }).to_json()));
            }
            let mut out = format!("{result}\n");
            if *explain {
                write_explanation(&mut out, &result, &alpha);
            }
            Ok(Outcome::ok(out))
        }
        Command::Hin { n, subset } => {
            let subset = SubsetMorphism::from_members(*n, subset.clone())?;
            let image = hin_vertex(&subset);
            let pretty = image.to_string();
            if format == Format::Json {
                let doc = Document::Hin { subset, image, pretty };
                return Ok(Outcome::ok(Envelope::new(doc).to_json()));
            }
            Ok(Outcome::ok(format!("{pretty}\n")))
        }
        Command::Hom { n, p, q, family, length, nondegenerate } => {
            run_hom(*n, *p, *q, *family, *length, *nondegenerate, format)
        }
        Command::Verify { max_n } => {
            let report = crate::sz::verify_range(*max_n);
            let success = report.is_success();
            let document = if format == Format::Json {
                Envelope::new(Document::Verify { report }).to_json()
            } else {
                format!("{report}\n")
            };
            Ok(Outcome { document, success })
        }
        Command::Diagram { n, kind, family, p, q } => {
            let doc = match (kind, format) {
                (DiagramKind::Category, _) => category_dot(*n, *family)?,
                (DiagramKind::Sz, Format::Tikz) => sz_figure_tikz(*n, *p, *q)?,
                (DiagramKind::Sz, _) => sz_figure_dot(*n, *p, *q)?,
            };
            Ok(Outcome::ok(doc))
        }
    }
}

fn write_explanation(out: &mut String, result: &SzResult, alpha: &AlphaTable) {
    let seq = &result.sequence;
    for len in 0..=seq.len() {
        let prefix = match len {
            0 => "∅".to_string(),
            _ => seq.entries()[..len].iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
        };
        if len > 0 {
            let w = alpha.omegas[len - 1];
            let _ = write!(out, "ω_{}({}) = {w}; ", seq.prefix(len - 1), seq.entries()[len - 1]);
        }
        let row: Vec<String> = alpha
            .rows
            .iter()
            .map(|r| format!("α_{}({prefix}) = {}", r.k, r.values[len]))
            .collect();
        let _ = writeln!(out, "{}", row.join(", "));
    }
    for c in &result.components {
        let _ = writeln!(
            out,
            "k={}: {} = {} on {} -> {}",
            c.k,
            c.word,
            c.operator,
            crate::ops::VertexList::generic(result.n - c.k),
            c.vertices
        );
    }
}

fn run_hom(
    n: usize,
    p: usize,
    q: usize,
    family: Family,
    length: usize,
    nondegenerate: bool,
    format: Format,
) -> Result<Outcome> {
    match family {
        Family::C => {
            let hom = SubsetHom::new(n, p, q)?;
            if format == Format::Dot {
                return Ok(Outcome::ok(hom_dot(&hom, &format!("P_c(Δ^{n})({p},{q})"))));
            }
            let elements = hom.elements();
            let chains: Vec<ChainImage> = enumerate_nerve(&hom, length, nondegenerate)
                .into_iter()
                .map(|chain| {
                    let image = sz_elementwise(&chain);
                    ChainImage { chain, image }
                })
                .collect();
            if format == Format::Json {
                let listing = HomListing::C { elements, chains };
                let doc = Document::Hom { n, p, q, length, nondegenerate, listing };
                return Ok(Outcome::ok(Envelope::new(doc).to_json()));
            }
            let mut out = hom_header(&hom, "P_c", elements.len());
            for e in &elements {
                let _ = writeln!(out, "  {e}");
            }
            let _ = writeln!(out, "{}{length}-chains: {}", kind_word(nondegenerate), chains.len());
            for ci in &chains {
                let _ = writeln!(out, "  {}  ↦  {}", ci.chain.ascending(), ci.image.as_chain().ascending());
            }
            Ok(Outcome::ok(out))
        }
        Family::G => {
            let hom = GHom::new(n, p, q)?;
            if format == Format::Dot {
                return Ok(Outcome::ok(hom_dot(&hom, &format!("P_G(Δ^{n})({p},{q})"))));
            }
            let elements = hom.elements();
            let chains = enumerate_nerve(&hom, length, nondegenerate);
            if format == Format::Json {
                let listing = HomListing::G { elements, chains };
                let doc = Document::Hom { n, p, q, length, nondegenerate, listing };
                return Ok(Outcome::ok(Envelope::new(doc).to_json()));
            }
            let mut out = hom_header(&hom, "P_G", elements.len());
            for e in &elements {
                let _ = writeln!(out, "  {e}");
            }
            let _ = writeln!(out, "{}{length}-chains: {}", kind_word(nondegenerate), chains.len());
            for c in &chains {
                let _ = writeln!(out, "  {}", c.ascending());
            }
            Ok(Outcome::ok(out))
        }
    }
}

fn kind_word(nondegenerate: bool) -> &'static str {
    if nondegenerate {
        "nondegenerate "
    } else {
        ""
    }
}

fn hom_header<H: HomPoset>(hom: &H, name: &str, count: usize) -> String {
    format!(
        "{name}(Δ^{})({},{}): {count} elements\n",
        hom.n(),
        hom.source(),
        hom.target()
    )
}

/// Writes the document to `path`, or to standard output.
pub fn emit(outcome: &Outcome, path: Option<&Path>) -> std::io::Result<()> {
    match path {
        Some(path) => std::fs::write(path, &outcome.document),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(outcome.document.as_bytes())?;
            stdout.flush()
        }
    }
}
