//! JSON input documents.

use std::fmt;
use std::fs;
use std::path::Path;

use facetor::vertex_set::MAX_VERTICES;
use facetor::{Complement, GradedDims, PairSpec, SimplicialComplex, VertexSet};
use serde::Deserialize;
use serde_json::Value;

/// A problem with an input file. Always reported with exit code 2.
#[derive(Debug)]
pub struct ParseError {
    pub path: String,
    pub field: Option<String>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.field {
            Some(field) => write!(f, "{}: field `{}`: {}", self.path, field, self.message),
            None => write!(f, "{}: {}", self.path, self.message),
        }
    }
}

struct Ctx<'a> {
    path: &'a str,
}

impl Ctx<'_> {
    fn err(&self, field: impl Into<String>, message: impl Into<String>) -> ParseError {
        ParseError {
            path: self.path.to_string(),
            field: Some(field.into()),
            message: message.into(),
        }
    }

    fn whole(&self, message: impl Into<String>) -> ParseError {
        ParseError { path: self.path.to_string(), field: None, message: message.into() }
    }
}

/// What an input file describes.
#[derive(Clone, Debug)]
pub enum Presentation {
    Complement(Complement),
    Facets(SimplicialComplex),
}

#[derive(Clone, Debug)]
pub struct InputDocument {
    pub m: usize,
    pub presentation: Presentation,
}

impl InputDocument {
    /// The complement, converting a facet list through its missing faces. The
    /// VOID complex is presented by `{φ}`.
    pub fn complement(&self) -> Complement {
        match &self.presentation {
            Presentation::Complement(p) => p.clone(),
            Presentation::Facets(k) => k.to_complement().unwrap_or_else(|_| {
                Complement::new(self.m, vec![VertexSet::EMPTY]).expect("m already validated")
            }),
        }
    }

    pub fn complex(&self) -> SimplicialComplex {
        match &self.presentation {
            Presentation::Complement(p) => SimplicialComplex::from_complement(p),
            Presentation::Facets(k) => k.clone(),
        }
    }
}

fn read_json(path: &Path) -> Result<(String, Value), ParseError> {
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| ParseError {
        path: name.clone(),
        field: None,
        message: format!("cannot read file: {e}"),
    })?;
    let value = serde_json::from_str(&text).map_err(|e| ParseError {
        path: name.clone(),
        field: None,
        message: format!("malformed JSON: {e}"),
    })?;
    Ok((name, value))
}

fn as_count(ctx: &Ctx, field: &str, v: &Value) -> Result<u64, ParseError> {
    v.as_u64()
        .ok_or_else(|| ctx.err(field, format!("expected a nonnegative integer, found {v}")))
}

fn vertex_lists(ctx: &Ctx, key: &str, v: &Value, m: usize) -> Result<Vec<VertexSet>, ParseError> {
    let lists = v
        .as_array()
        .ok_or_else(|| ctx.err(key, "expected a list of vertex lists"))?;
    let mut out = Vec::with_capacity(lists.len());
    for (i, list) in lists.iter().enumerate() {
        let field = format!("{key}[{i}]");
        let items = list
            .as_array()
            .ok_or_else(|| ctx.err(&field, format!("expected a list of vertices, found {list}")))?;
        let mut sigma = VertexSet::EMPTY;
        for (j, item) in items.iter().enumerate() {
            let vfield = format!("{field}[{j}]");
            let vertex = item
                .as_i64()
                .ok_or_else(|| ctx.err(&vfield, format!("expected an integer vertex, found {item}")))?;
            if vertex < 1 || vertex > m as i64 {
                return Err(ctx.err(&vfield, format!("vertex {vertex} is outside 1..={m}")));
            }
            sigma = sigma.insert(vertex as usize);
        }
        out.push(sigma);
    }
    Ok(out)
}

pub fn parse_input(path: &Path) -> Result<InputDocument, ParseError> {
    let (name, value) = read_json(path)?;
    let ctx = Ctx { path: &name };
    let obj = value
        .as_object()
        .ok_or_else(|| ctx.whole("expected a JSON object with `m` and `complement` or `facets`"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "m" | "complement" | "facets") {
            return Err(ctx.err(key, "unknown field"));
        }
    }
    let m = obj.get("m").ok_or_else(|| ctx.err("m", "missing"))?;
    let m = as_count(&ctx, "m", m)? as usize;
    if m > MAX_VERTICES {
        return Err(ctx.err("m", format!("{m} exceeds the maximum {MAX_VERTICES}")));
    }
    let presentation = match (obj.get("complement"), obj.get("facets")) {
        (Some(c), None) => {
            let members = vertex_lists(&ctx, "complement", c, m)?;
            Presentation::Complement(
                Complement::new(m, members).map_err(|e| ctx.err("complement", e.to_string()))?,
            )
        }
        (None, Some(f)) => {
            let facets = vertex_lists(&ctx, "facets", f, m)?;
            Presentation::Facets(
                SimplicialComplex::from_facets(m, facets)
                    .map_err(|e| ctx.err("facets", e.to_string()))?,
            )
        }
        (Some(_), Some(_)) => {
            return Err(ctx.whole("give exactly one of `complement` and `facets`, not both"))
        }
        (None, None) => return Err(ctx.whole("missing `complement` or `facets`")),
    };
    Ok(InputDocument { m, presentation })
}

#[derive(Deserialize)]
struct RawPair {
    #[serde(rename = "X")]
    x: Value,
    #[serde(rename = "A")]
    a: Value,
}

fn poly(ctx: &Ctx, field: &str, v: &Value) -> Result<GradedDims, ParseError> {
    let terms = v
        .as_array()
        .ok_or_else(|| ctx.err(field, "expected a list of [degree, rank] pairs"))?;
    let mut out = GradedDims::zero();
    for (i, term) in terms.iter().enumerate() {
        let tfield = format!("{field}[{i}]");
        let pair = term
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| ctx.err(&tfield, format!("expected [degree, rank], found {term}")))?;
        let degree = as_count(ctx, &format!("{tfield}[0]"), &pair[0])?;
        let rank = as_count(ctx, &format!("{tfield}[1]"), &pair[1])?;
        if degree < 1 {
            return Err(ctx.err(format!("{tfield}[0]"), "degrees of reduced classes start at 1"));
        }
        let degree = u32::try_from(degree)
            .map_err(|_| ctx.err(format!("{tfield}[0]"), "degree too large"))?;
        out.add_rank(degree, rank);
    }
    Ok(out)
}

/// A list of `m` entries `{"X": [[d, r], ...], "A": [[d, r], ...]}`.
pub fn parse_pairs(path: &Path, m: usize) -> Result<PairSpec, ParseError> {
    let (name, value) = read_json(path)?;
    let ctx = Ctx { path: &name };
    let entries = value
        .as_array()
        .ok_or_else(|| ctx.whole("expected a list with one {\"X\", \"A\"} entry per vertex"))?;
    if entries.len() != m {
        return Err(ctx.whole(format!("{} entries for m = {m} vertices", entries.len())));
    }
    let mut xs = Vec::with_capacity(m);
    let mut as_ = Vec::with_capacity(m);
    for (i, entry) in entries.iter().enumerate() {
        let raw: RawPair = serde_json::from_value(entry.clone())
            .map_err(|e| ctx.err(format!("[{i}]"), e.to_string()))?;
        xs.push(poly(&ctx, &format!("[{i}].X"), &raw.x)?);
        as_.push(poly(&ctx, &format!("[{i}].A"), &raw.a)?);
    }
    PairSpec::new(xs, as_).map_err(|e| ctx.whole(e.to_string()))
}

/// `1,3` or `{1,3}`; the empty string is `φ`.
pub fn parse_omega(text: &str, m: usize) -> Result<VertexSet, ParseError> {
    let ctx = Ctx { path: "--omega" };
    let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut omega = VertexSet::EMPTY;
    for part in trimmed.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: i64 = part
            .parse()
            .map_err(|_| ctx.whole(format!("`{part}` is not a vertex")))?;
        if v < 1 || v > m as i64 {
            return Err(ctx.whole(format!("vertex {v} is outside 1..={m}")));
        }
        omega = omega.insert(v as usize);
    }
    Ok(omega)
}
