//! File formats for complexes, matroids, and order ideals.
//!
//! The text form of a complex is line-based: `n=<count>` first, then an
//! optional `weights a1 a2 …` line, then one `facet v1 v2 …` line per facet.
//! Blank lines and `#` comments are ignored. When a weights line is present,
//! facet entries are 1-based parallel-class indices and the file describes
//! the expansion where class i occupies a run of `a_i` consecutive vertex
//! labels; `n` must then equal the weight sum. The JSON mirror is an object
//! `{"n": …, "weights": […]?, "facets": [[…], …]}`.
//!
//! Order ideals use `vars=<count>` followed by `gen e1 e2 …` lines, mirrored
//! as `{"vars": …, "generators": [[…], …]}`.
//!
//! Writers emit a canonical form that parses back to an equal object. Ground
//! sets are normalized to 1..=n on write, where n is the highest vertex
//! label; a complex whose ground set has gaps (only reachable through vertex
//! deletions) reparses with those gaps filled in as loops.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::constructions::{expand_classes_complex, WeightVector};
use crate::ideal::OrderIdeal;
use crate::matroid::Matroid;
use crate::monomial::Monomial;
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct ComplexDoc {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<u32>>,
    facets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct IdealDoc {
    vars: usize,
    generators: Vec<Vec<u32>>,
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn json_error(err: &serde_json::Error) -> Error {
    parse_error(err.line(), err.to_string())
}

fn parse_tokens<T: std::str::FromStr>(rest: &str, line: usize, what: &str) -> Result<Vec<T>> {
    rest.split_whitespace()
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| parse_error(line, format!("invalid {what} entry {tok:?}")))
        })
        .collect()
}

/// Accepts either directive (`prefix v1 v2 …`) or JSON input; returns the
/// argument portion when the line starts with the given directive.
fn directive<'a>(line: &'a str, name: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(name)?;
    if rest.is_empty() || rest.starts_with(char::is_whitespace) {
        Some(rest)
    } else {
        None
    }
}

/// Parses a complex from either format, expanding parallel-class weights
/// when present. No matroid validation is performed.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let doc = if is_json(text) {
        serde_json::from_str::<ComplexDoc>(text).map_err(|e| json_error(&e))?
    } else {
        parse_complex_text(text)?
    };
    build_complex(doc)
}

/// Parses and validates a matroid from either format.
pub fn parse_matroid(text: &str) -> Result<Matroid> {
    Matroid::new(parse_complex(text)?)
}

fn parse_complex_text(text: &str) -> Result<ComplexDoc> {
    let mut n: Option<usize> = None;
    let mut weights: Option<Vec<u32>> = None;
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if n.is_some() {
                return Err(parse_error(lineno, "duplicate n= declaration"));
            }
            if weights.is_some() || !facets.is_empty() {
                return Err(parse_error(lineno, "n= must come first"));
            }
            n = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_error(lineno, format!("invalid vertex count {rest:?}")))?,
            );
        } else if let Some(rest) = directive(line, "weights") {
            if n.is_none() {
                return Err(parse_error(lineno, "weights before n= declaration"));
            }
            if weights.is_some() {
                return Err(parse_error(lineno, "duplicate weights line"));
            }
            if !facets.is_empty() {
                return Err(parse_error(lineno, "weights must precede facet lines"));
            }
            weights = Some(parse_tokens(rest, lineno, "weight")?);
        } else if let Some(rest) = directive(line, "facet") {
            if n.is_none() {
                return Err(parse_error(lineno, "facet before n= declaration"));
            }
            facets.push(parse_tokens(rest, lineno, "vertex")?);
        } else {
            return Err(parse_error(lineno, format!("unrecognized line {line:?}")));
        }
    }
    let n = n.ok_or_else(|| parse_error(0, "missing n= declaration"))?;
    Ok(ComplexDoc { n, weights, facets })
}

fn build_complex(doc: ComplexDoc) -> Result<SimplicialComplex> {
    match doc.weights {
        None => SimplicialComplex::new(doc.n, doc.facets),
        Some(w) => {
            let a = WeightVector::new(w)?;
            if a.total() != doc.n as u64 {
                return Err(parse_error(
                    0,
                    format!("n={} does not match the weight sum {}", doc.n, a.total()),
                ));
            }
            expand_classes_complex(&doc.facets, &a)
        }
    }
}

/// Parses an order ideal from either format.
pub fn parse_order_ideal(text: &str) -> Result<OrderIdeal> {
    let doc = if is_json(text) {
        serde_json::from_str::<IdealDoc>(text).map_err(|e| json_error(&e))?
    } else {
        parse_ideal_text(text)?
    };
    let mut gens = Vec::with_capacity(doc.generators.len());
    for exps in doc.generators {
        if exps.len() != doc.vars {
            return Err(parse_error(
                0,
                format!("generator has {} exponents, expected {}", exps.len(), doc.vars),
            ));
        }
        gens.push(Monomial::new(exps)?);
    }
    OrderIdeal::new(doc.vars, gens)
}

fn parse_ideal_text(text: &str) -> Result<IdealDoc> {
    let mut vars: Option<usize> = None;
    let mut generators: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars=") {
            if vars.is_some() {
                return Err(parse_error(lineno, "duplicate vars= declaration"));
            }
            if !generators.is_empty() {
                return Err(parse_error(lineno, "vars= must come first"));
            }
            vars = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_error(lineno, format!("invalid variable count {rest:?}")))?,
            );
        } else if let Some(rest) = directive(line, "gen") {
            if vars.is_none() {
                return Err(parse_error(lineno, "gen before vars= declaration"));
            }
            let exps: Vec<u32> = parse_tokens(rest, lineno, "exponent")?;
            if exps.len() != vars.unwrap() {
                return Err(parse_error(
                    lineno,
                    format!("expected {} exponents, got {}", vars.unwrap(), exps.len()),
                ));
            }
            generators.push(exps);
        } else {
            return Err(parse_error(lineno, format!("unrecognized line {line:?}")));
        }
    }
    let vars = vars.ok_or_else(|| parse_error(0, "missing vars= declaration"))?;
    Ok(IdealDoc { vars, generators })
}

fn max_label(c: &SimplicialComplex) -> usize {
    (64 - c.ground().leading_zeros()) as usize
}

pub fn write_complex_text(c: &SimplicialComplex) -> String {
    let mut out = format!("n={}\n", max_label(c));
    for facet in c.facets() {
        out.push_str("facet");
        for v in facet {
            out.push(' ');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn write_matroid_text(m: &Matroid) -> String {
    write_complex_text(m.complex())
}

/// Weighted class form: facets stay as class indices, with a weights line.
pub fn write_class_matroid_text(class_facets: &[Vec<usize>], a: &WeightVector) -> String {
    let mut out = format!("n={}\n", a.total());
    out.push_str("weights");
    for w in a.weights() {
        out.push(' ');
        out.push_str(&w.to_string());
    }
    out.push('\n');
    for facet in class_facets {
        out.push_str("facet");
        for v in facet {
            out.push(' ');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn write_complex_json(c: &SimplicialComplex) -> String {
    let doc = ComplexDoc { n: max_label(c), weights: None, facets: c.facets() };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}

pub fn write_class_matroid_json(class_facets: &[Vec<usize>], a: &WeightVector) -> String {
    let doc = ComplexDoc {
        n: a.total() as usize,
        weights: Some(a.weights().to_vec()),
        facets: class_facets.to_vec(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}

pub fn write_order_ideal_text(g: &OrderIdeal) -> String {
    let mut out = format!("vars={}\n", g.num_vars());
    for gen in g.generators() {
        out.push_str("gen");
        for &e in gen.exponents() {
            out.push(' ');
            out.push_str(&e.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn write_order_ideal_json(g: &OrderIdeal) -> String {
    let doc = IdealDoc {
        vars: g.num_vars(),
        generators: g.generators().iter().map(|m| m.exponents().to_vec()).collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{delta_t, fano, uniform};

    #[test]
    fn complex_text_round_trip() {
        for m in [fano(), uniform(2, 4).unwrap(), uniform(0, 3).unwrap()] {
            let text = write_matroid_text(&m);
            let back = parse_matroid(&text).unwrap();
            assert_eq!(&back, &m);
            assert_eq!(write_matroid_text(&back), text);
        }
    }

    #[test]
    fn weighted_text_round_trip() {
        let a = WeightVector::new(vec![2, 1, 3]).unwrap();
        let class_facets = vec![vec![1, 2], vec![1, 3], vec![2, 3]];
        let text = write_class_matroid_text(&class_facets, &a);
        let parsed = parse_matroid(&text).unwrap();
        assert_eq!(parsed, delta_t(2, 3, &a, 0).unwrap());

        let json = write_class_matroid_json(&class_facets, &a);
        assert_eq!(parse_matroid(&json).unwrap(), parsed);
    }

    #[test]
    fn json_round_trip() {
        let m = fano();
        let json = write_complex_json(m.complex());
        assert_eq!(parse_matroid(&json).unwrap(), m);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# a matroid\n\nn=3\n# facets follow\nfacet 1 2\nfacet 1 3\n  facet 2 3\n";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m, uniform(2, 3).unwrap());
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(matches!(parse_complex("facet 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex(""), Err(Error::Parse { line: 0, .. })));
        assert!(matches!(parse_complex("n=2\nn=3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_complex("n=x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("n=2\nfacet 1 q\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_complex("n=2\nbogus 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            parse_complex("n=2\nfacet 1\nweights 1 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_complex("n=5\nweights 2 2\nfacet 1 2\n"),
            Err(Error::Parse { .. })
        ));
        assert!(parse_complex("n=4\nweights 2 0 2\nfacet 1 2\n").is_err());
        assert!(matches!(parse_complex("{ not json"), Err(Error::Parse { .. })));
        // Vertex labels outside 1..=n are semantic, not parse, errors.
        assert!(matches!(
            parse_complex("n=2\nfacet 1 3\n"),
            Err(Error::VertexOutOfRange { label: 3, max: 2 })
        ));
    }

    #[test]
    fn ideal_round_trip() {
        let ideal = OrderIdeal::new(
            3,
            vec![
                Monomial::new(vec![1, 0, 6]).unwrap(),
                Monomial::new(vec![1, 3, 3]).unwrap(),
            ],
        )
        .unwrap();
        let text = write_order_ideal_text(&ideal);
        assert_eq!(parse_order_ideal(&text).unwrap(), ideal);
        let json = write_order_ideal_json(&ideal);
        assert_eq!(parse_order_ideal(&json).unwrap(), ideal);

        let trivial = OrderIdeal::new(0, vec![Monomial::one(0)]).unwrap();
        let text = write_order_ideal_text(&trivial);
        assert_eq!(text, "vars=0\ngen\n");
        assert_eq!(parse_order_ideal(&text).unwrap(), trivial);

        let empty = OrderIdeal::new(2, Vec::new()).unwrap();
        assert_eq!(parse_order_ideal(&write_order_ideal_text(&empty)).unwrap(), empty);
    }

    #[test]
    fn ideal_parse_errors() {
        assert!(matches!(parse_order_ideal("gen 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_order_ideal("vars=2\ngen 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_order_ideal("vars=2\ngen 1 2 3\n"), Err(Error::Parse { .. })));
        assert!(parse_order_ideal("{\"vars\": 2, \"generators\": [[1]]}").is_err());
    }
}
