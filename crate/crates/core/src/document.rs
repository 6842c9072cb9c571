//! JSON documents for functions, densities and sequences.
//!
//! Every rational is a string `"p"` or `"p/q"`, so values survive the trip
//! through JSON exactly.
//!
//! ```text
//! {"kind": "step", "domain": "unit" | "halfline", "pieces": [["a", "b", "v"], ...]}
//! {"kind": "decreasing_tail", "domain": "halfline", "pieces": [...],
//!  "tail": {"start": "s", "coeff": "c", "exponent": k} | null}
//! {"kind": "orlicz_density", "segments": [["start", "value", "slope"], ...], "limit": "L" | null}
//! {"kind": "sequence", "head": ["x1", ...],
//!  "tail": {"type": "zero"} | {"type": "geometric", "scale": "C", "ratio": "r"}}
//! ```
//!
//! Pieces are half-open `[a, b)`. Parsing canonicalizes, and serializing a
//! parsed document reproduces the canonical text byte for byte.

use std::fmt;

use serde_json::{json, Map, Value};

use crate::criteria::{SequenceTail, SummableSequence};
use crate::orlicz::{Density, DensitySegment};
use crate::piecewise::{DecreasingTailFunction, Domain, Piece, PowerTail, StepFunction};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Step(StepFunction),
    DecreasingTail(DecreasingTailFunction),
    Density(Density),
    Sequence(SummableSequence),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Step(_) => "step",
            Document::DecreasingTail(_) => "decreasing_tail",
            Document::Density(_) => "orlicz_density",
            Document::Sequence(_) => "sequence",
        }
    }
}

/// A malformed document, located by a JSON path such as `pieces[1][2]`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct DocumentError {
    pub path: String,
    pub message: String,
}

fn fail<T>(path: &str, message: impl Into<String>) -> Result<T, DocumentError> {
    Err(DocumentError {
        path: if path.is_empty() { "$".into() } else { path.into() },
        message: message.into(),
    })
}

pub fn parse_document(text: &str) -> Result<Document, DocumentError> {
    let value: Value = serde_json::from_str(text).or_else(|e| fail("", format!("not JSON: {e}")))?;
    let obj = value.as_object().map_or_else(|| fail("", "expected an object"), Ok)?;
    let kind = field(obj, "kind", "")?.as_str().map_or_else(|| fail("kind", "expected a string"), Ok)?;
    let invalid = |path: &str, e: crate::Error| DocumentError {
        path: path.into(),
        message: e.to_string(),
    };
    match kind {
        "step" => {
            let domain = parse_domain(obj)?;
            let pieces = parse_pieces(obj)?;
            StepFunction::new(domain, pieces)
                .map(Document::Step)
                .map_err(|e| invalid("pieces", e))
        }
        "decreasing_tail" => {
            if parse_domain(obj)? != Domain::HalfLine {
                return fail("domain", "decreasing_tail documents live on the half-line");
            }
            let head = StepFunction::new(Domain::HalfLine, parse_pieces(obj)?).map_err(|e| invalid("pieces", e))?;
            let tail = match obj.get("tail") {
                None | Some(Value::Null) => None,
                Some(Value::Object(t)) => {
                    let start = rational_field(t, "start", "tail")?;
                    let coeff = rational_field(t, "coeff", "tail")?;
                    let exponent = field(t, "exponent", "tail")?
                        .as_u64()
                        .and_then(|k| u32::try_from(k).ok())
                        .map_or_else(|| fail("tail.exponent", "expected a small nonnegative integer"), Ok)?;
                    Some(PowerTail::new(start, coeff, exponent).map_err(|e| invalid("tail", e))?)
                }
                Some(_) => return fail("tail", "expected an object or null"),
            };
            DecreasingTailFunction::new(head, tail)
                .map(Document::DecreasingTail)
                .map_err(|e| invalid("", e))
        }
        "orlicz_density" => {
            let segments = triples(obj, "segments")?
                .into_iter()
                .map(|[start, value, slope]| DensitySegment::new(start, value, slope))
                .collect();
            let limit = match obj.get("limit") {
                None | Some(Value::Null) => None,
                Some(v) => Some(rational_value(v, "limit")?),
            };
            Density::new(segments, limit)
                .map(Document::Density)
                .map_err(|e| invalid("segments", e))
        }
        "sequence" => {
            let head = field(obj, "head", "")?
                .as_array()
                .map_or_else(|| fail("head", "expected an array"), Ok)?
                .iter()
                .enumerate()
                .map(|(i, v)| rational_value(v, &format!("head[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let tail = field(obj, "tail", "")?
                .as_object()
                .map_or_else(|| fail("tail", "expected an object"), Ok)?;
            let tail = match field(tail, "type", "tail")?.as_str() {
                Some("zero") => SequenceTail::Zero,
                Some("geometric") => SequenceTail::Geometric {
                    scale: rational_field(tail, "scale", "tail")?,
                    ratio: rational_field(tail, "ratio", "tail")?,
                },
                _ => return fail("tail.type", "expected \"zero\" or \"geometric\""),
            };
            SummableSequence::new(head, tail)
                .map(Document::Sequence)
                .map_err(|e| invalid("tail", e))
        }
        other => fail("kind", format!("unknown kind {other:?}")),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str, parent: &str) -> Result<&'a Value, DocumentError> {
    let path = join(parent, name);
    obj.get(name).map_or_else(|| fail(&path, "missing field"), Ok)
}

fn join(parent: &str, name: &str) -> String {
    if parent.is_empty() {
        name.to_string()
    } else {
        format!("{parent}.{name}")
    }
}

fn rational_value(v: &Value, path: &str) -> Result<Rational, DocumentError> {
    let text = v.as_str().map_or_else(|| fail(path, "expected a rational string like \"3/4\""), Ok)?;
    parse_rational(text).or_else(|e| fail(path, format!("{} at byte {} of {text:?}", e.message, e.offset)))
}

fn rational_field(obj: &Map<String, Value>, name: &str, parent: &str) -> Result<Rational, DocumentError> {
    rational_value(field(obj, name, parent)?, &join(parent, name))
}

fn parse_domain(obj: &Map<String, Value>) -> Result<Domain, DocumentError> {
    match field(obj, "domain", "")?.as_str() {
        Some("unit") => Ok(Domain::UnitInterval),
        Some("halfline") => Ok(Domain::HalfLine),
        _ => fail("domain", "expected \"unit\" or \"halfline\""),
    }
}

fn triples(obj: &Map<String, Value>, name: &str) -> Result<Vec<[Rational; 3]>, DocumentError> {
    let items = field(obj, name, "")?
        .as_array()
        .map_or_else(|| fail(name, "expected an array"), Ok)?;
    items
        .iter()
        .enumerate()
        .map(|(i, item)| {
            let path = format!("{name}[{i}]");
            match item.as_array() {
                Some(parts) if parts.len() == 3 => Ok([
                    rational_value(&parts[0], &format!("{path}[0]"))?,
                    rational_value(&parts[1], &format!("{path}[1]"))?,
                    rational_value(&parts[2], &format!("{path}[2]"))?,
                ]),
                _ => fail(&path, "expected a triple"),
            }
        })
        .collect()
}

fn parse_pieces(obj: &Map<String, Value>) -> Result<Vec<Piece>, DocumentError> {
    Ok(triples(obj, "pieces")?
        .into_iter()
        .map(|[a, b, v]| Piece::new(a, b, v))
        .collect())
}

fn r(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

fn domain_name(domain: Domain) -> &'static str {
    match domain {
        Domain::UnitInterval => "unit",
        Domain::HalfLine => "halfline",
    }
}

fn pieces_value(f: &StepFunction) -> Value {
    Value::Array(
        f.pieces()
            .iter()
            .map(|p| json!([r(&p.start), r(&p.end), r(&p.value)]))
            .collect(),
    )
}

pub fn document_value(doc: &Document) -> Value {
    match doc {
        Document::Step(f) => json!({
            "kind": "step",
            "domain": domain_name(f.domain()),
            "pieces": pieces_value(f),
        }),
        Document::DecreasingTail(f) => json!({
            "kind": "decreasing_tail",
            "domain": "halfline",
            "pieces": pieces_value(f.head()),
            "tail": f.tail().map(|t| json!({
                "start": r(t.start()),
                "coeff": r(t.coeff()),
                "exponent": t.exponent(),
            })),
        }),
        Document::Density(d) => json!({
            "kind": "orlicz_density",
            "segments": d.segments().iter().map(|s| json!([r(&s.start), r(&s.value), r(&s.slope)])).collect::<Vec<_>>(),
            "limit": d.limit().map(r),
        }),
        Document::Sequence(x) => json!({
            "kind": "sequence",
            "head": x.head().iter().map(r).collect::<Vec<_>>(),
            "tail": match x.tail() {
                SequenceTail::Zero => json!({"type": "zero"}),
                SequenceTail::Geometric { scale, ratio } => json!({
                    "type": "geometric",
                    "scale": r(scale),
                    "ratio": r(ratio),
                }),
            },
        }),
    }
}

/// Pretty-printed canonical text with a trailing newline.
pub fn to_json(doc: &Document) -> String {
    let mut text = serde_json::to_string_pretty(&document_value(doc)).expect("documents serialize");
    text.push('\n');
    text
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_json(self))
    }
}

impl From<StepFunction> for Document {
    fn from(f: StepFunction) -> Self {
        Document::Step(f)
    }
}

impl From<DecreasingTailFunction> for Document {
    fn from(f: DecreasingTailFunction) -> Self {
        Document::DecreasingTail(f)
    }
}

impl From<Density> for Document {
    fn from(d: Density) -> Self {
        Document::Density(d)
    }
}

impl From<SummableSequence> for Document {
    fn from(x: SummableSequence) -> Self {
        Document::Sequence(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn round_trip(doc: Document) {
        let text = to_json(&doc);
        let back = parse_document(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn every_kind_round_trips() {
        round_trip(
            StepFunction::new(Domain::UnitInterval, vec![Piece::new(int(0), rat(1, 2), rat(-3, 7))])
                .unwrap()
                .into(),
        );
        round_trip(DecreasingTailFunction::plateau_with_tail(int(1), int(1), int(1), 2).unwrap().into());
        round_trip(
            Density::new(vec![DensitySegment::new(int(0), int(1), int(0))], Some(int(3)))
                .unwrap()
                .into(),
        );
        round_trip(SummableSequence::geometric(int(1), rat(1, 4)).unwrap().into());
        round_trip(SummableSequence::finite(vec![int(1), rat(2, 3)]).into());
    }

    #[test]
    fn canonicalizes_on_parse() {
        let doc = parse_document(
            r#"{"kind":"step","domain":"halfline","pieces":[["1","2","3"],["0","1","3"],["5","6","0"]]}"#,
        )
        .unwrap();
        let Document::Step(f) = doc else { panic!("step expected") };
        assert_eq!(f.pieces(), &[Piece::new(int(0), int(2), int(3))]);
    }

    #[test]
    fn errors_carry_paths() {
        let e = parse_document(r#"{"kind":"step","domain":"unit","pieces":[["0","1","1"],["1","1/2","x"]]}"#)
            .unwrap_err();
        assert_eq!(e.path, "pieces[1][2]");
        let e = parse_document(r#"{"kind":"step","domain":"unit","pieces":[["0","1.5","1"]]}"#).unwrap_err();
        assert_eq!(e.path, "pieces[0][1]");
        assert!(e.message.contains("byte 1"));
        assert_eq!(parse_document(r#"{"kind":"bag"}"#).unwrap_err().path, "kind");
        assert_eq!(parse_document("[").unwrap_err().path, "$");
        let e = parse_document(r#"{"kind":"step","domain":"unit","pieces":[["0","2","1"]]}"#).unwrap_err();
        assert_eq!(e.path, "pieces");
        let e = parse_document(r#"{"kind":"sequence","head":[],"tail":{"type":"geometric","scale":"1"}}"#)
            .unwrap_err();
        assert_eq!(e.path, "tail.ratio");
    }
}
