use std::fmt;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use tricalc_core::{
    compose, connected_sum, fourmanifold_h1, glue, hopf_stabilize, identity_trisection, lf_to_trisection,
    lf_to_trisection_with_crossings, morphisms_stably_equivalent, stabilize_lefschetz, stably_equivalent, Error,
    GluePairing, OpenBook, RelativeTrisection, Sign, Surface, TriMorphism, Trisection, Variant,
};

use crate::format::{parse, serialize, DocError, Document};

#[derive(Debug, Parser)]
#[command(name = "tricalc", version, about = "Parameter calculus for trisected 4-manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check invariants and print derived parameters.
    Validate { file: PathBuf },
    /// Print the Euler characteristic.
    Euler { file: PathBuf },
    /// Stabilize once, in the interior or along one boundary component.
    Stabilize(StabilizeArgs),
    /// Boundary connected sum of two trisections.
    Sum { first: PathBuf, second: PathBuf },
    /// Glue two relative trisections along paired boundary components.
    Glue {
        first: PathBuf,
        second: PathBuf,
        /// Boundary pairing `i:j`, repeatable.
        #[arg(long = "pair", value_parser = parse_pair, required = true)]
        pairs: Vec<(usize, usize)>,
    },
    /// Relative trisection of the total space of a Lefschetz fibration.
    FromLefschetz {
        file: PathBuf,
        /// Crossing count of the vanishing-cycle diagram.
        #[arg(long)]
        crossings: Option<u64>,
    },
    /// Compose morphisms left to right.
    Compose {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
    },
    /// Identity morphism on the trivial open book with the given page.
    Identity {
        #[arg(long)]
        page_genus: u32,
        #[arg(long)]
        page_boundary: u32,
    },
    /// Exit 0 iff the two documents are stably equivalent.
    Equiv { first: PathBuf, second: PathBuf },
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("where").required(true).args(["interior", "relative"])))]
pub struct StabilizeArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub interior: bool,
    #[arg(long, value_name = "IDX", requires_all = ["variant", "sign"])]
    pub relative: Option<usize>,
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    #[arg(long, value_enum, allow_hyphen_values = true)]
    pub sign: Option<SignArg>,
}

/// `band` keeps the page genus and adds a binding circle; `handle` joins two
/// binding circles and raises the genus.
#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    Band,
    Handle,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Band => Variant::SameBinding,
            VariantArg::Handle => Variant::DifferentBindings,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SignArg {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Plus => Sign::Positive,
            SignArg::Minus => Sign::Negative,
        }
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (i, j) = s.split_once(':').ok_or_else(|| format!("expected i:j, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad index `{t}`: {e}"));
    Ok((parse(i)?, parse(j)?))
}

#[derive(Debug)]
pub enum Failure {
    Io { path: PathBuf, source: std::io::Error },
    Document { path: PathBuf, source: DocError },
    Unsupported(String),
    Invariant(Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Invariant(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io { path, source } => write!(f, "{}: {source}", path.display()),
            Failure::Document { path, source } => write!(f, "{}: {source}", path.display()),
            Failure::Unsupported(msg) => f.write_str(msg),
            Failure::Invariant(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for Failure {}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invariant(e)
    }
}

/// Standard output plus exit status of a completed command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }

    fn doc(doc: &Document) -> Self {
        Outcome::ok(serialize(doc))
    }
}

pub fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|source| Failure::Io {
        path: path.to_owned(),
        source,
    })?;
    parse(&text).map_err(|source| Failure::Document {
        path: path.to_owned(),
        source,
    })
}

fn unsupported(command: &str, doc: &Document) -> Failure {
    Failure::Unsupported(format!("`{command}` does not accept {} documents", doc.kind()))
}

fn morphism(trisection: &RelativeTrisection, source: &[usize]) -> Result<TriMorphism, Failure> {
    Ok(TriMorphism::new(valid(trisection)?.into(), source.to_vec())?)
}

fn valid(t: &RelativeTrisection) -> Result<RelativeTrisection, Failure> {
    t.validate()?;
    Ok(t.clone())
}

fn trisection(command: &str, doc: &Document) -> Result<Trisection, Failure> {
    match doc {
        Document::Trisection(t) => Ok(valid(t)?.into()),
        Document::Closed(c) => {
            c.validate()?;
            Ok((*c).into())
        }
        _ => Err(unsupported(command, doc)),
    }
}

fn relative(command: &str, doc: &Document) -> Result<RelativeTrisection, Failure> {
    match doc {
        Document::Trisection(t) => valid(t),
        Document::Morphism { trisection, .. } => valid(trisection),
        _ => Err(unsupported(command, doc)),
    }
}

fn lines<I, K, V>(pairs: I) -> String
where
    I: IntoIterator<Item = (K, V)>,
    K: fmt::Display,
    V: fmt::Display,
{
    pairs.into_iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    let inner: Vec<String> = items.iter().map(T::to_string).collect();
    format!("[{}]", inner.join(", "))
}

/// Violations go to standard output with status 1 so reports stay parseable.
fn report(result: Result<String, Error>) -> Result<Outcome, Failure> {
    match result {
        Ok(stdout) => Ok(Outcome::ok(stdout)),
        Err(Error::Invalid(violations)) => Ok(Outcome {
            stdout: violations.iter().map(|v| format!("violation = {v}\n")).collect(),
            code: 1,
        }),
        Err(e) => Err(e.into()),
    }
}

pub fn validate(doc: &Document) -> Result<Outcome, Failure> {
    report(match doc {
        Document::Trisection(t) => t.validate().map(|r| r.to_string()),
        Document::Morphism { trisection, source } => trisection.validate().and_then(|r| {
            TriMorphism::new(trisection.clone().into(), source.clone())?;
            Ok(format!("{r}source = {}\n", list(source)))
        }),
        Document::Closed(c) => c
            .validate()
            .map(|()| lines([("g", i64::from(c.g)), ("k", i64::from(c.k)), ("chi", c.euler())])),
        Document::OpenBook(ob) => ob.check().map(|()| {
            lines([
                ("components", ob.pages.len().to_string()),
                ("pages", list(&ob.pages)),
                ("word_length", ob.word.len().to_string()),
            ])
        }),
        Document::Lefschetz(lf) => lf.check().and_then(|()| {
            Ok(lines([
                ("fiber", lf.fiber.to_string()),
                ("cycles", lf.cycles.len().to_string()),
                ("chi", lf.euler().to_string()),
                ("h1", fourmanifold_h1(lf)?.to_string()),
            ]))
        }),
    })
}

pub fn euler(doc: &Document) -> Result<Outcome, Failure> {
    let chi = match doc {
        Document::Trisection(_) | Document::Closed(_) => trisection("euler", doc)?.euler()?,
        Document::Morphism { trisection, .. } => valid(trisection)?.euler()?,
        Document::Lefschetz(lf) => {
            lf.check()?;
            lf.euler()
        }
        Document::OpenBook(_) => return Err(unsupported("euler", doc)),
    };
    Ok(Outcome::ok(format!("chi = {chi}\n")))
}

pub fn stabilize(doc: &Document, args: &StabilizeArgs) -> Result<Outcome, Failure> {
    let relative = args.relative.map(|idx| {
        (
            idx,
            args.variant.expect("clap requires variant").into(),
            args.sign.expect("clap requires sign").into(),
        )
    });
    let out = match (doc, relative) {
        (Document::Trisection(t), None) => Document::Trisection(valid(t)?.interior_stabilize()?),
        (Document::Trisection(t), Some((idx, v, s))) => Document::Trisection(valid(t)?.relative_stabilize(idx, v, s)?),
        (Document::Closed(c), None) => {
            c.validate()?;
            Document::Closed(c.interior_stabilize()?)
        }
        (Document::Morphism { trisection, source }, rel) => {
            let t = valid(trisection)?;
            let t = match rel {
                None => t.interior_stabilize()?,
                Some((idx, v, s)) => t.relative_stabilize(idx, v, s)?,
            };
            morphism(&t, source)?;
            Document::Morphism {
                trisection: t,
                source: source.clone(),
            }
        }
        (Document::OpenBook(ob), Some((idx, v, s))) => {
            ob.check()?;
            Document::OpenBook(hopf_stabilize(ob, idx, v, s)?)
        }
        (Document::Lefschetz(lf), Some((0, v, s))) => Document::Lefschetz(stabilize_lefschetz(lf, v, s)?),
        (Document::Lefschetz(_), Some((idx, _, _))) => {
            return Err(Failure::Unsupported(format!(
                "a fibration has one boundary component, not {}",
                idx + 1
            )))
        }
        (Document::Closed(_), Some(_)) => {
            return Err(Failure::Unsupported("a closed trisection has no boundary".into()))
        }
        (Document::OpenBook(_) | Document::Lefschetz(_), None) => {
            return Err(Failure::Unsupported(format!(
                "{} documents only take --relative",
                doc.kind()
            )))
        }
    };
    Ok(Outcome::doc(&out))
}

pub fn sum(a: &Document, b: &Document) -> Result<Outcome, Failure> {
    let t = connected_sum(&trisection("sum", a)?, &trisection("sum", b)?)?;
    Ok(Outcome::doc(&Document::from_trisection(t)))
}

pub fn glue_docs(a: &Document, b: &Document, pairs: &[(usize, usize)]) -> Result<Outcome, Failure> {
    let pairing = GluePairing::new(pairs.to_vec())?;
    let t = glue(&relative("glue", a)?, &relative("glue", b)?, &pairing)?;
    Ok(Outcome::doc(&Document::from_trisection(t)))
}

pub fn from_lefschetz(doc: &Document, crossings: Option<u64>) -> Result<Outcome, Failure> {
    let Document::Lefschetz(lf) = doc else {
        return Err(unsupported("from-lefschetz", doc));
    };
    let t = match crossings {
        Some(c) => lf_to_trisection_with_crossings(lf, c)?,
        None => lf_to_trisection(lf)?,
    };
    Ok(Outcome::doc(&Document::Trisection(t)))
}

pub fn compose_docs(docs: &[Document]) -> Result<Outcome, Failure> {
    let mut morphisms = docs.iter().map(|d| match d {
        Document::Morphism { trisection, source } => morphism(trisection, source),
        _ => Err(unsupported("compose", d)),
    });
    let first = morphisms
        .next()
        .ok_or_else(|| Failure::Unsupported("nothing to compose".into()))??;
    let result = morphisms.try_fold(first, |acc, next| Ok::<_, Failure>(compose(&acc, &next?)?))?;
    Ok(Outcome::doc(&Document::from_morphism(result)))
}

pub fn identity(page_genus: u32, page_boundary: u32) -> Result<Outcome, Failure> {
    let ob = OpenBook::single(Surface::new(page_genus, page_boundary), vec![])?;
    Ok(Outcome::doc(&Document::from_morphism(identity_trisection(&ob)?)))
}

pub fn equiv(a: &Document, b: &Document) -> Result<Outcome, Failure> {
    let same = match (a, b) {
        (
            Document::Morphism {
                trisection: t1,
                source: s1,
            },
            Document::Morphism {
                trisection: t2,
                source: s2,
            },
        ) => morphisms_stably_equivalent(&morphism(t1, s1)?, &morphism(t2, s2)?)?,
        _ => stably_equivalent(&trisection("equiv", a)?, &trisection("equiv", b)?)?,
    };
    Ok(Outcome {
        stdout: format!("equivalent = {same}\n"),
        code: if same { 0 } else { 1 },
    })
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Validate { file } => validate(&load(file)?),
        Command::Euler { file } => euler(&load(file)?),
        Command::Stabilize(args) => stabilize(&load(&args.file)?, args),
        Command::Sum { first, second } => sum(&load(first)?, &load(second)?),
        Command::Glue { first, second, pairs } => glue_docs(&load(first)?, &load(second)?, pairs),
        Command::FromLefschetz { file, crossings } => from_lefschetz(&load(file)?, *crossings),
        Command::Compose { files } => {
            let docs = files.iter().map(|f| load(f)).collect::<Result<Vec<_>, _>>()?;
            compose_docs(&docs)
        }
        Command::Identity {
            page_genus,
            page_boundary,
        } => identity(*page_genus, *page_boundary),
        Command::Equiv { first, second } => equiv(&load(first)?, &load(second)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tricalc_core::ClosedTrisection;

    fn ball() -> Document {
        Document::Trisection(RelativeTrisection::ball())
    }

    #[test]
    fn command_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn pair_syntax() {
        assert_eq!(parse_pair("0:1"), Ok((0, 1)));
        assert!(parse_pair("0-1").is_err());
        assert!(parse_pair("a:1").is_err());
    }

    #[test]
    fn ball_glues_to_sphere() {
        let out = glue_docs(&ball(), &ball(), &[(0, 0)]).unwrap();
        assert_eq!(out.stdout, serialize(&Document::Closed(ClosedTrisection::sphere())));
    }

    #[test]
    fn ball_report() {
        let out = validate(&ball()).unwrap();
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("n = 0\n"));
        assert!(out.stdout.contains("chi = 1\n"));
    }

    #[test]
    fn invalid_tuple_reports_violations() {
        let bad = Document::Trisection(RelativeTrisection {
            surface_genus: 0,
            surface_boundary: 1,
            k: 3,
            boundary: vec![OpenBook::trivial()],
        });
        let out = validate(&bad).unwrap();
        assert_eq!(out.code, 1);
        assert!(out.stdout.starts_with("violation = "));
    }

    #[test]
    fn closed_equiv_uses_stabilization() {
        let c00 = Document::Closed(ClosedTrisection { g: 0, k: 0 });
        let c31 = Document::Closed(ClosedTrisection { g: 3, k: 1 });
        assert_eq!(equiv(&c00, &c31).unwrap().code, 0);
        let c10 = Document::Closed(ClosedTrisection { g: 1, k: 0 });
        assert_eq!(equiv(&c00, &c10).unwrap().code, 1);
    }

    #[test]
    fn openbook_cannot_have_euler() {
        let err = euler(&Document::OpenBook(OpenBook::trivial())).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn identity_composes_with_itself() {
        let id = match crate::format::parse(&identity(0, 1).unwrap().stdout).unwrap() {
            d @ Document::Morphism { .. } => d,
            other => panic!("{other:?}"),
        };
        let out = compose_docs(&[id.clone(), id]).unwrap();
        assert!(matches!(
            crate::format::parse(&out.stdout).unwrap(),
            Document::Morphism { .. }
        ));
    }
}
