//! The two text formats the command line reads and writes.
//!
//! Ideal files: a `vars:` header naming the variables in order, then one
//! generator per nonblank line, `#` comments allowed. Monomials are factors
//! `name` or `name^k` separated by whitespace or `*`.
//!
//! ```text
//! # the running example
//! vars: x1 x2 x3 x4
//! x1^2 x2 x4
//! x1 x2^2 x3^2
//! x1 x2 x3^3
//! ```
//!
//! Complex files: a preamble of `label <vertex> <monomial>` bindings (in the
//! variables of an accompanying ideal file), then one facet per line as
//! whitespace-separated vertex names.

use std::sync::Arc;

use crate::complex::{Face, LabeledComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, VarContext};

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Shifts a monomial-parser error (always reported on line 1) to the actual
/// file position.
fn at_line(e: Error, line: usize, offset: usize) -> Error {
    match e {
        Error::Parse { column, message, .. } => Error::Parse {
            line,
            column: column + offset,
            message,
        },
        other => other,
    }
}

/// Parses an ideal file into its context and ideal.
pub fn parse_ideal_file(text: &str) -> Result<(Arc<VarContext>, MonomialIdeal)> {
    let mut ctx: Option<Arc<VarContext>> = None;
    let mut gens: Vec<Monomial> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim_end();
        if line.trim().is_empty() {
            continue;
        }
        if ctx.is_none() {
            let rest = line.trim_start();
            let col = line.len() - rest.len() + 1;
            let Some(vars) = rest.strip_prefix("vars:") else {
                return Err(Error::parse(
                    lineno,
                    col,
                    "expected a `vars: <name> <name> ...` header before any generator",
                ));
            };
            let names: Vec<&str> = vars.split_whitespace().collect();
            if names.is_empty() {
                return Err(Error::parse(lineno, col, "the vars header names no variables"));
            }
            ctx = Some(VarContext::new(names).map_err(|e| match e {
                Error::InvalidInput(msg) => Error::parse(lineno, col, msg),
                other => other,
            })?);
            continue;
        }
        let ctx = ctx.as_ref().expect("header parsed");
        let gen = ctx
            .parse_monomial(line)
            .map_err(|e| at_line(e, lineno, 0))?;
        if gen.is_unit() {
            return Err(Error::parse(lineno, 1, "the unit monomial cannot generate an ideal"));
        }
        gens.push(gen);
    }
    let ctx = ctx.ok_or_else(|| Error::parse(1, 1, "empty file: no vars header"))?;
    if gens.is_empty() {
        return Err(Error::parse(1, 1, "no generators after the vars header"));
    }
    let ideal = MonomialIdeal::new(gens)?;
    Ok((ctx, ideal))
}

/// Renders an ideal in the file format, one minimal generator per line.
pub fn render_ideal_file(ideal: &MonomialIdeal) -> String {
    let mut out = String::from("vars:");
    for name in ideal.context().names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for g in ideal.mingens() {
        out.push_str(&g.to_string().replace('*', " "));
        out.push('\n');
    }
    out
}

/// Parses a labeled-complex file against the variable context of an ideal
/// file. Label bindings must precede the facet lines; every vertex used in a
/// facet needs a label.
pub fn parse_complex_file(text: &str, ctx: &Arc<VarContext>) -> Result<LabeledComplex> {
    let mut names: Vec<String> = Vec::new();
    let mut labels: Vec<Monomial> = Vec::new();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    let mut in_preamble = true;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(binding) = line.strip_prefix("label ") {
            if !in_preamble {
                return Err(Error::parse(
                    lineno,
                    1,
                    "label bindings must precede the facet lines",
                ));
            }
            let binding = binding.trim_start();
            let Some((vertex, monomial_text)) = binding.split_once(char::is_whitespace) else {
                return Err(Error::parse(lineno, 7, "expected `label <vertex> <monomial>`"));
            };
            if names.iter().any(|n| n == vertex) {
                return Err(Error::parse(lineno, 7, format!("vertex {vertex:?} labeled twice")));
            }
            let label = ctx
                .parse_monomial(monomial_text)
                .map_err(|e| at_line(e, lineno, 7 + vertex.len()))?;
            names.push(vertex.to_string());
            labels.push(label);
            continue;
        }
        in_preamble = false;
        let mut facet = Vec::new();
        for vertex in line.split_whitespace() {
            let Some(i) = names.iter().position(|n| n == vertex) else {
                return Err(Error::parse(
                    lineno,
                    1,
                    format!("vertex {vertex:?} has no label binding"),
                ));
            };
            facet.push(i);
        }
        facets.push(facet);
    }
    if facets.is_empty() {
        return Err(Error::parse(1, 1, "no facet lines in the complex file"));
    }
    let complex = SimplicialComplex::from_facets(
        names,
        facets.into_iter().map(Face::from_vertices),
    )?;
    LabeledComplex::new(complex, labels)
}
