//! JSON document format for trisections, open books and fibrations.
//!
//! Parsing goes through two stages: text to a generic JSON value (syntax
//! errors carry line and column), then value to a typed document (schema
//! errors carry the path of the offending key). Invariants such as closed
//! pages or negative derived counts are not checked here; that is the job
//! of `validate`.

use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use tricalc_core::{
    ClosedTrisection, HomologyClass, LefschetzFibration, OpenBook, RelativeTrisection, Sign, Surface, TriMorphism,
    Trisection, TwistLetter, VanishingCycle,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocError {
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    Schema {
        key: String,
        message: String,
    },
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocError::Syntax { line, column, message } => {
                write!(f, "syntax error at line {line}, column {column}: {message}")
            }
            DocError::Schema { key, message } => write!(f, "schema error at `{key}`: {message}"),
        }
    }
}

impl std::error::Error for DocError {}

fn schema(key: impl Into<String>, message: impl Into<String>) -> DocError {
    DocError::Schema {
        key: key.into(),
        message: message.into(),
    }
}

/// A parsed document. Morphisms keep their parts unvalidated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Trisection(RelativeTrisection),
    Closed(ClosedTrisection),
    OpenBook(OpenBook),
    Lefschetz(LefschetzFibration),
    Morphism {
        trisection: RelativeTrisection,
        source: Vec<usize>,
    },
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Trisection(_) => "trisection",
            Document::Closed(_) => "closed",
            Document::OpenBook(_) => "openbook",
            Document::Lefschetz(_) => "lefschetz",
            Document::Morphism { .. } => "morphism",
        }
    }

    pub fn from_trisection(t: Trisection) -> Self {
        match t {
            Trisection::Relative(r) => Document::Trisection(r),
            Trisection::Closed(c) => Document::Closed(c),
        }
    }

    /// A closed underlying trisection has no boundary to carry, so it is
    /// written as a plain closed document.
    pub fn from_morphism(m: TriMorphism) -> Self {
        let source = m.source().to_vec();
        match m.into_trisection() {
            Trisection::Relative(trisection) => Document::Morphism { trisection, source },
            Trisection::Closed(c) => Document::Closed(c),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LetterDoc {
    curve: Vec<i64>,
    sign: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundaryDoc {
    page_genus: u32,
    page_boundary: u32,
    word: Vec<LetterDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TrisectionDoc {
    kind: String,
    surface_genus: u32,
    surface_boundary: u32,
    k: u32,
    boundary: Vec<BoundaryDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismDoc {
    kind: String,
    surface_genus: u32,
    surface_boundary: u32,
    k: u32,
    boundary: Vec<BoundaryDoc>,
    source: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClosedDoc {
    kind: String,
    g: u32,
    k: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LefschetzDoc {
    kind: String,
    fiber_genus: u32,
    fiber_boundary: u32,
    cycles: Vec<LetterDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PageDoc {
    page_genus: u32,
    page_boundary: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentLetterDoc {
    component: usize,
    curve: Vec<i64>,
    sign: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OpenBookDoc {
    kind: String,
    pages: Vec<PageDoc>,
    word: Vec<ComponentLetterDoc>,
}

fn typed<T: DeserializeOwned>(value: Value) -> Result<T, DocError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let key = e.path().to_string();
        schema(key, e.into_inner().to_string())
    })
}

fn sign_at(value: i64, key: &str) -> Result<Sign, DocError> {
    Sign::try_from(value).map_err(|_| schema(key, format!("sign must be 1 or -1, got {value}")))
}

fn curve_at(curve: Vec<i64>, page: Surface, key: &str) -> Result<HomologyClass, DocError> {
    if curve.len() != page.h1_rank() {
        return Err(schema(
            key,
            format!(
                "curve has {} coefficients but page {page} has rank {}",
                curve.len(),
                page.h1_rank()
            ),
        ));
    }
    Ok(HomologyClass(curve))
}

fn letters(letters: Vec<LetterDoc>, page: Surface, prefix: &str) -> Result<Vec<(HomologyClass, Sign)>, DocError> {
    letters
        .into_iter()
        .enumerate()
        .map(|(j, l)| {
            let curve = curve_at(l.curve, page, &format!("{prefix}[{j}].curve"))?;
            let sign = sign_at(l.sign, &format!("{prefix}[{j}].sign"))?;
            Ok((curve, sign))
        })
        .collect()
}

fn boundary_books(docs: Vec<BoundaryDoc>) -> Result<Vec<OpenBook>, DocError> {
    docs.into_iter()
        .enumerate()
        .map(|(i, b)| {
            let page = Surface::new(b.page_genus, b.page_boundary);
            let word = letters(b.word, page, &format!("boundary[{i}].word"))?
                .into_iter()
                .map(|(curve, sign)| TwistLetter::new(0, curve, sign))
                .collect();
            Ok(OpenBook {
                pages: vec![page],
                word,
            })
        })
        .collect()
}

pub fn parse(text: &str) -> Result<Document, DocError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let kind = match value.get("kind") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(schema("kind", "expected a string")),
        None if value.is_object() => return Err(schema("kind", "missing field `kind`")),
        None => return Err(schema(".", "expected a JSON object")),
    };
    match kind.as_str() {
        "trisection" => {
            let d: TrisectionDoc = typed(value)?;
            Ok(Document::Trisection(RelativeTrisection {
                surface_genus: d.surface_genus,
                surface_boundary: d.surface_boundary,
                k: d.k,
                boundary: boundary_books(d.boundary)?,
            }))
        }
        "morphism" => {
            let d: MorphismDoc = typed(value)?;
            let trisection = RelativeTrisection {
                surface_genus: d.surface_genus,
                surface_boundary: d.surface_boundary,
                k: d.k,
                boundary: boundary_books(d.boundary)?,
            };
            Ok(Document::Morphism {
                trisection,
                source: d.source,
            })
        }
        "closed" => {
            let d: ClosedDoc = typed(value)?;
            Ok(Document::Closed(ClosedTrisection { g: d.g, k: d.k }))
        }
        "lefschetz" => {
            let d: LefschetzDoc = typed(value)?;
            let fiber = Surface::new(d.fiber_genus, d.fiber_boundary);
            let cycles = letters(d.cycles, fiber, "cycles")?
                .into_iter()
                .map(|(c, s)| VanishingCycle::new(c, s))
                .collect();
            Ok(Document::Lefschetz(LefschetzFibration { fiber, cycles }))
        }
        "openbook" => {
            let d: OpenBookDoc = typed(value)?;
            let pages: Vec<Surface> = d
                .pages
                .iter()
                .map(|p| Surface::new(p.page_genus, p.page_boundary))
                .collect();
            let word = d
                .word
                .into_iter()
                .enumerate()
                .map(|(j, l)| {
                    let page = *pages.get(l.component).ok_or_else(|| {
                        schema(format!("word[{j}].component"), format!("no component {}", l.component))
                    })?;
                    let curve = curve_at(l.curve, page, &format!("word[{j}].curve"))?;
                    let sign = sign_at(l.sign, &format!("word[{j}].sign"))?;
                    Ok(TwistLetter::new(l.component, curve, sign))
                })
                .collect::<Result<_, DocError>>()?;
            Ok(Document::OpenBook(OpenBook { pages, word }))
        }
        other => Err(schema("kind", format!("unknown kind `{other}`"))),
    }
}

fn letter_doc(curve: &HomologyClass, sign: Sign) -> LetterDoc {
    LetterDoc {
        curve: curve.0.clone(),
        sign: sign.value(),
    }
}

/// Boundary books in a trisection document have a single page each; any
/// letters addressed to other components are dropped.
fn boundary_docs(books: &[OpenBook]) -> Vec<BoundaryDoc> {
    books
        .iter()
        .map(|ob| {
            let page = ob.pages.first().copied().unwrap_or(Surface::DISK);
            BoundaryDoc {
                page_genus: page.genus,
                page_boundary: page.boundary,
                word: ob.component_word(0).map(|l| letter_doc(&l.curve, l.sign)).collect(),
            }
        })
        .collect()
}

fn to_text<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("document types always serialize");
    text.push('\n');
    text
}

pub fn serialize(doc: &Document) -> String {
    match doc {
        Document::Trisection(t) => to_text(&TrisectionDoc {
            kind: "trisection".into(),
            surface_genus: t.surface_genus,
            surface_boundary: t.surface_boundary,
            k: t.k,
            boundary: boundary_docs(&t.boundary),
        }),
        Document::Morphism { trisection: t, source } => to_text(&MorphismDoc {
            kind: "morphism".into(),
            surface_genus: t.surface_genus,
            surface_boundary: t.surface_boundary,
            k: t.k,
            boundary: boundary_docs(&t.boundary),
            source: source.clone(),
        }),
        Document::Closed(c) => to_text(&ClosedDoc {
            kind: "closed".into(),
            g: c.g,
            k: c.k,
        }),
        Document::Lefschetz(lf) => to_text(&LefschetzDoc {
            kind: "lefschetz".into(),
            fiber_genus: lf.fiber.genus,
            fiber_boundary: lf.fiber.boundary,
            cycles: lf.cycles.iter().map(|c| letter_doc(&c.class, c.chirality)).collect(),
        }),
        Document::OpenBook(ob) => to_text(&OpenBookDoc {
            kind: "openbook".into(),
            pages: ob
                .pages
                .iter()
                .map(|p| PageDoc {
                    page_genus: p.genus,
                    page_boundary: p.boundary,
                })
                .collect(),
            word: ob
                .word
                .iter()
                .map(|l| ComponentLetterDoc {
                    component: l.component,
                    curve: l.curve.0.clone(),
                    sign: l.sign.value(),
                })
                .collect(),
        }),
    }
}
