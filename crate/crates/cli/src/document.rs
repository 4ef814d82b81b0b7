//! The line-oriented space file format.
//!
//! ```text
//! space P3
//! dim 3
//! gen H 2
//! rel H^4
//! point H^3
//! ctx (1+H)^4
//! divisor twoplanes = H, H
//! strata nc = 2*H; H^2
//! center line_in_P3 {
//!   dim 1; gen h 2; rel h^2; point h
//!   rho H -> h
//!   pdY H^2
//!   cN 1 + 2*h
//!   lift 1 2*H
//! }
//! ```
//!
//! Top-level statements end at a newline; inside a center block `;` also ends
//! a statement. `#` starts a comment. Within a center block the ring
//! statements may be prefixed with `ring`. A generator without a `rho` line
//! restricts to zero, and a zero-dimensional center defaults to `point 1`.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use logchern_core::blowup::CenterSpec;
use logchern_core::catalog::CatalogEntry;
use logchern_core::divisor::{ScArrangement, StrataData};
use logchern_core::{build_ring, Cls, Generator, GradedRing, Poly, RingPresentation, Space, Q};

use crate::error::{CliError, Code, ParseError};
use crate::poly_expr::parse_poly;

const MAX_DIM: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenDecl {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CenterBlock {
    pub name: String,
    pub dim: u32,
    pub generators: Vec<GenDecl>,
    pub relations: Vec<Poly>,
    /// Over the center generators.
    pub point: Poly,
    /// Ambient generator name and its image, over the center generators.
    pub rho: Vec<(String, Poly)>,
    /// Over the ambient generators.
    pub pd_center: Poly,
    /// Over the center generators.
    pub normal: Poly,
    /// Over the ambient generators, ascending index.
    pub lifts: Vec<(u32, Poly)>,
}

/// Abstract content of a space file.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceFile {
    pub name: String,
    pub dim: u32,
    pub generators: Vec<GenDecl>,
    pub relations: Vec<Poly>,
    pub point: Poly,
    pub ctx: Poly,
    pub divisors: Vec<(String, Vec<Poly>)>,
    pub strata: Vec<(String, Vec<Poly>)>,
    pub centers: Vec<CenterBlock>,
}

#[derive(Clone, Debug)]
struct Stmt {
    line: usize,
    col: usize,
    text: String,
    block: Option<usize>,
}

#[derive(Clone, Debug)]
struct BlockHead {
    name: String,
    line: usize,
    col: usize,
}

fn split_statements(text: &str) -> Result<(Vec<Stmt>, Vec<BlockHead>), ParseError> {
    let mut stmts = Vec::new();
    let mut blocks: Vec<BlockHead> = Vec::new();
    let mut open: Option<usize> = None;
    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let mut buf = String::new();
        let mut start = 1;
        let flush = |buf: &mut String, start: usize, open: Option<usize>, stmts: &mut Vec<Stmt>| {
            let lead = buf.chars().take_while(|c| c.is_whitespace()).count();
            let trimmed = buf.trim();
            if !trimmed.is_empty() {
                stmts.push(Stmt { line, col: start + lead, text: trimmed.to_string(), block: open });
            }
            buf.clear();
        };
        for (ci, ch) in raw.chars().enumerate() {
            let col = ci + 1;
            if buf.is_empty() {
                start = col;
            }
            match ch {
                '#' => break,
                ';' if open.is_some() => {
                    flush(&mut buf, start, open, &mut stmts);
                }
                '{' => {
                    if open.is_some() {
                        return Err(ParseError::new(Code::Syntax, line, col, "nested `{`"));
                    }
                    let lead = buf.chars().take_while(|c| c.is_whitespace()).count();
                    let words: Vec<&str> = buf.split_whitespace().collect();
                    match words.as_slice() {
                        ["center", name] => {
                            check_ident(name, line, start + lead + 7)?;
                            blocks.push(BlockHead { name: name.to_string(), line, col: start + lead });
                            open = Some(blocks.len() - 1);
                            buf.clear();
                        }
                        _ => return Err(ParseError::new(Code::Syntax, line, col, "`{` must follow `center NAME`")),
                    }
                }
                '}' => {
                    if open.is_none() {
                        return Err(ParseError::new(Code::Syntax, line, col, "unmatched `}`"));
                    }
                    flush(&mut buf, start, open, &mut stmts);
                    open = None;
                }
                _ => {
                    if buf.is_empty() && ch.is_whitespace() {
                        continue;
                    }
                    buf.push(ch);
                }
            }
        }
        flush(&mut buf, start, open, &mut stmts);
    }
    if let Some(b) = open {
        let h = &blocks[b];
        return Err(ParseError::new(Code::Syntax, h.line, h.col, format!("center `{}` is missing `}}`", h.name)));
    }
    Ok((stmts, blocks))
}

fn check_ident(s: &str, line: usize, col: usize) -> Result<(), ParseError> {
    let mut chars = s.chars();
    let ok = chars.next().map_or(false, |c| c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(ParseError::new(Code::Syntax, line, col, format!("`{s}` is not a valid name")))
    }
}

/// Keyword and the remainder of a statement with the remainder's column.
fn keyword(st: &Stmt) -> (&str, &str, usize) {
    let text = st.text.as_str();
    match text.find(char::is_whitespace) {
        Some(i) => {
            let rest = &text[i..];
            let lead = rest.chars().take_while(|c| c.is_whitespace()).count();
            (&text[..i], rest.trim_start(), st.col + text[..i].chars().count() + lead)
        }
        None => (text, "", st.col + text.chars().count()),
    }
}

fn parse_u32(s: &str, line: usize, col: usize, what: &str) -> Result<u32, ParseError> {
    s.trim()
        .parse()
        .map_err(|_| ParseError::new(Code::Syntax, line, col, format!("expected a non-negative integer {what}, found `{s}`")))
}

fn half_weights(gens: &[GenDecl]) -> Vec<u32> {
    gens.iter().map(|g| g.degree / 2).collect()
}

fn names_of(gens: &[GenDecl]) -> Vec<String> {
    gens.iter().map(|g| g.name.clone()).collect()
}

/// Parses a polynomial and checks it is homogeneous, of `expected` real
/// degree when given.
fn poly_with_degree(
    text: &str,
    gens: &[GenDecl],
    line: usize,
    col: usize,
    expected: Option<u32>,
    what: &str,
) -> Result<Poly, ParseError> {
    let p = parse_poly(text, &names_of(gens), line, col)?;
    match p.homogeneous_degree(&half_weights(gens)) {
        Err((a, b)) => Err(ParseError::new(
            Code::DegreeMismatch,
            line,
            col,
            format!("{what} mixes degrees {} and {}", 2 * a, 2 * b),
        )),
        Ok(Some(d)) if expected.map_or(false, |e| 2 * d != e) => Err(ParseError::new(
            Code::DegreeMismatch,
            line,
            col,
            format!("{what} has degree {}, expected {}", 2 * d, expected.unwrap()),
        )),
        _ => Ok(p),
    }
}

fn parse_gen(rest: &str, line: usize, col: usize, gens: &mut Vec<GenDecl>) -> Result<(), ParseError> {
    let parts: Vec<&str> = rest.split_whitespace().collect();
    let [name, deg] = parts.as_slice() else {
        return Err(ParseError::new(Code::Syntax, line, col, "expected `gen NAME DEGREE`"));
    };
    check_ident(name, line, col)?;
    let degree = parse_u32(deg, line, col, "degree")?;
    if degree == 0 || degree % 2 == 1 {
        return Err(ParseError::new(Code::DegreeMismatch, line, col, format!("generator degree must be even and positive, found {degree}")));
    }
    if gens.iter().any(|g| g.name == *name) {
        return Err(ParseError::new(Code::Duplicate, line, col, format!("generator `{name}` declared twice")));
    }
    gens.push(GenDecl { name: name.to_string(), degree });
    Ok(())
}

fn parse_dim(rest: &str, line: usize, col: usize, slot: &mut Option<u32>) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(ParseError::new(Code::Duplicate, line, col, "`dim` given twice"));
    }
    let d = parse_u32(rest, line, col, "dimension")?;
    if d > MAX_DIM {
        return Err(ParseError::new(Code::InvalidValue, line, col, format!("dimension {d} exceeds {MAX_DIM}")));
    }
    *slot = Some(d);
    Ok(())
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: usize, col: usize, what: &str) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(ParseError::new(Code::Duplicate, line, col, format!("`{what}` given twice")));
    }
    *slot = Some(value);
    Ok(())
}

/// Splits `NAME = rest` and returns the name and the remainder's column.
fn named_list<'a>(rest: &'a str, line: usize, col: usize, kw: &str) -> Result<(&'a str, &'a str, usize), ParseError> {
    let Some(eq) = rest.find('=') else {
        return Err(ParseError::new(Code::Syntax, line, col, format!("expected `{kw} NAME = ...`")));
    };
    let name = rest[..eq].trim();
    check_ident(name, line, col)?;
    let after = &rest[eq + 1..];
    Ok((name, after, col + rest[..=eq].chars().count()))
}

/// Splits on `sep`, keeping each piece's column.
fn pieces(text: &str, col: usize, sep: char) -> Vec<(String, usize)> {
    if text.trim().is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(sep) {
        let lead = part.chars().take_while(|c| c.is_whitespace()).count();
        out.push((part.trim().to_string(), col + offset + lead));
        offset += part.chars().count() + 1;
    }
    out
}

pub fn parse_space(text: &str) -> Result<SpaceFile, ParseError> {
    let (stmts, heads) = split_statements(text)?;
    let top: Vec<&Stmt> = stmts.iter().filter(|s| s.block.is_none()).collect();

    // Declarations first, so statement order does not matter.
    let mut name = None;
    let mut dim = None;
    let mut generators = Vec::new();
    for st in &top {
        let (kw, rest, col) = keyword(st);
        match kw {
            "space" => {
                check_ident(rest, st.line, col)?;
                set_once(&mut name, rest.to_string(), st.line, st.col, "space")?;
            }
            "dim" => parse_dim(rest, st.line, col, &mut dim)?,
            "gen" => parse_gen(rest, st.line, col, &mut generators)?,
            "rel" | "point" | "ctx" | "divisor" | "strata" => {}
            other => {
                return Err(ParseError::new(Code::Syntax, st.line, st.col, format!("unknown statement `{other}`")));
            }
        }
    }
    let end_line = text.lines().count().max(1);
    let name = name.ok_or_else(|| ParseError::new(Code::MissingField, end_line, 1, "missing `space NAME`"))?;
    let dim = dim.ok_or_else(|| ParseError::new(Code::MissingField, end_line, 1, "missing `dim N`"))?;

    let mut relations = Vec::new();
    let mut point = None;
    let mut ctx = None;
    let mut divisors: Vec<(String, Vec<Poly>)> = Vec::new();
    let mut strata: Vec<(String, Vec<Poly>)> = Vec::new();
    let mut taken: HashSet<String> = HashSet::new();
    for st in &top {
        let (kw, rest, col) = keyword(st);
        match kw {
            "rel" => relations.push(poly_with_degree(rest, &generators, st.line, col, None, "relation")?),
            "point" => {
                let p = poly_with_degree(rest, &generators, st.line, col, Some(2 * dim), "point class")?;
                set_once(&mut point, p, st.line, st.col, "point")?;
            }
            "ctx" => {
                let p = parse_poly(rest, &names_of(&generators), st.line, col)?;
                set_once(&mut ctx, p, st.line, st.col, "ctx")?;
            }
            "divisor" | "strata" => {
                let (dname, list, lcol) = named_list(rest, st.line, col, kw)?;
                if !taken.insert(dname.to_string()) {
                    return Err(ParseError::new(Code::Duplicate, st.line, col, format!("divisor `{dname}` defined twice")));
                }
                let sep = if kw == "divisor" { ',' } else { ';' };
                let mut polys = Vec::new();
                for (k, (piece, pcol)) in pieces(list, lcol, sep).into_iter().enumerate() {
                    let expected = if kw == "divisor" { 2 } else { 2 * (k as u32 + 1) };
                    let what = if kw == "divisor" { "divisor component" } else { "stratum class" };
                    polys.push(poly_with_degree(&piece, &generators, st.line, pcol, Some(expected), what)?);
                }
                if kw == "divisor" {
                    divisors.push((dname.to_string(), polys));
                } else {
                    strata.push((dname.to_string(), polys));
                }
            }
            _ => {}
        }
    }
    let point = point.ok_or_else(|| ParseError::new(Code::MissingField, end_line, 1, "missing `point POLY`"))?;
    let ctx = ctx.ok_or_else(|| ParseError::new(Code::MissingField, end_line, 1, "missing `ctx POLY`"))?;

    let mut centers = Vec::new();
    let mut seen = HashSet::new();
    for (bi, head) in heads.iter().enumerate() {
        if !seen.insert(head.name.clone()) {
            return Err(ParseError::new(Code::Duplicate, head.line, head.col, format!("center `{}` defined twice", head.name)));
        }
        let body: Vec<&Stmt> = stmts.iter().filter(|s| s.block == Some(bi)).collect();
        centers.push(parse_center(head, &body, &generators)?);
    }
    Ok(SpaceFile { name, dim, generators, relations, point, ctx, divisors, strata, centers })
}

fn parse_center(head: &BlockHead, body: &[&Stmt], ambient: &[GenDecl]) -> Result<CenterBlock, ParseError> {
    let unwrap_ring = |st: &Stmt| -> Stmt {
        let (kw, rest, col) = keyword(st);
        if kw == "ring" && !rest.is_empty() {
            Stmt { line: st.line, col, text: rest.to_string(), block: st.block }
        } else {
            st.clone()
        }
    };
    let body: Vec<Stmt> = body.iter().map(|s| unwrap_ring(s)).collect();
    let mut dim = None;
    let mut generators = Vec::new();
    for st in &body {
        let (kw, rest, col) = keyword(st);
        match kw {
            "dim" => parse_dim(rest, st.line, col, &mut dim)?,
            "gen" => parse_gen(rest, st.line, col, &mut generators)?,
            "rel" | "point" | "rho" | "pdY" | "cN" | "lift" => {}
            other => {
                return Err(ParseError::new(Code::Syntax, st.line, st.col, format!("unknown center statement `{other}`")));
            }
        }
    }
    let missing = |what: &str| {
        ParseError::new(Code::MissingField, head.line, head.col, format!("center `{}` is missing `{what}`", head.name))
    };
    let dim = dim.ok_or_else(|| missing("dim"))?;
    let mut relations = Vec::new();
    let mut point = None;
    let mut rho: Vec<(String, Poly)> = Vec::new();
    let mut pd_center = None;
    let mut normal = None;
    let mut lifts: BTreeMap<u32, Poly> = BTreeMap::new();
    for st in &body {
        let (kw, rest, col) = keyword(st);
        match kw {
            "rel" => relations.push(poly_with_degree(rest, &generators, st.line, col, None, "relation")?),
            "point" => {
                let p = poly_with_degree(rest, &generators, st.line, col, Some(2 * dim), "point class")?;
                set_once(&mut point, p, st.line, st.col, "point")?;
            }
            "rho" => {
                let Some(arrow) = rest.find("->") else {
                    return Err(ParseError::new(Code::Syntax, st.line, col, "expected `rho GEN -> POLY`"));
                };
                let g = rest[..arrow].trim();
                let Some(decl) = ambient.iter().find(|d| d.name == g) else {
                    return Err(ParseError::new(Code::UnknownGenerator, st.line, col, format!("unknown ambient generator `{g}`")));
                };
                if rho.iter().any(|(n, _)| n == g) {
                    return Err(ParseError::new(Code::Duplicate, st.line, col, format!("`rho {g}` given twice")));
                }
                let pcol = col + rest[..arrow + 2].chars().count();
                let img = poly_with_degree(&rest[arrow + 2..], &generators, st.line, pcol, Some(decl.degree), "restriction")?;
                rho.push((g.to_string(), img));
            }
            "pdY" => {
                let p = poly_with_degree(rest, ambient, st.line, col, None, "PD[Y]")?;
                set_once(&mut pd_center, p, st.line, st.col, "pdY")?;
            }
            "cN" => {
                let p = parse_poly(rest, &names_of(&generators), st.line, col)?;
                set_once(&mut normal, p, st.line, st.col, "cN")?;
            }
            "lift" => {
                let (idx, poly) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let i = parse_u32(idx, st.line, col, "lift index")?;
                if i == 0 {
                    return Err(ParseError::new(Code::InvalidValue, st.line, col, "lift indices start at 1"));
                }
                let pcol = col + idx.chars().count() + (rest.len() - idx.len() - poly.trim_start().len());
                let p = poly_with_degree(poly.trim_start(), ambient, st.line, pcol, Some(2 * i), "lift")?;
                if lifts.insert(i, p).is_some() {
                    return Err(ParseError::new(Code::Duplicate, st.line, col, format!("lift {i} given twice")));
                }
            }
            _ => {}
        }
    }
    let point = match point {
        Some(p) => p,
        None if dim == 0 => Poly::one(generators.len()),
        None => return Err(missing("point")),
    };
    Ok(CenterBlock {
        name: head.name.clone(),
        dim,
        generators,
        relations,
        point,
        rho,
        pd_center: pd_center.ok_or_else(|| missing("pdY"))?,
        normal: normal.ok_or_else(|| missing("cN"))?,
        lifts: lifts.into_iter().collect(),
    })
}

fn render(p: &Poly, gens: &[GenDecl]) -> String {
    p.render(&names_of(gens), &half_weights(gens))
}

/// Canonical text of a document; `parse_space(&serialize(d)) == d`.
pub fn serialize(doc: &SpaceFile) -> String {
    let g = &doc.generators;
    let mut out = format!("space {}\ndim {}\n", doc.name, doc.dim);
    for d in g {
        out.push_str(&format!("gen {} {}\n", d.name, d.degree));
    }
    for r in &doc.relations {
        out.push_str(&format!("rel {}\n", r.render_relation(&names_of(g), &half_weights(g))));
    }
    out.push_str(&format!("point {}\nctx {}\n", render(&doc.point, g), render(&doc.ctx, g)));
    for (name, polys) in &doc.divisors {
        let list: Vec<String> = polys.iter().map(|p| render(p, g)).collect();
        out.push_str(format!("divisor {name} = {}", list.join(", ")).trim_end());
        out.push('\n');
    }
    for (name, polys) in &doc.strata {
        let list: Vec<String> = polys.iter().map(|p| render(p, g)).collect();
        out.push_str(format!("strata {name} = {}", list.join("; ")).trim_end());
        out.push('\n');
    }
    for c in &doc.centers {
        let cg = &c.generators;
        out.push_str(&format!("center {} {{\n  dim {}\n", c.name, c.dim));
        for d in cg {
            out.push_str(&format!("  gen {} {}\n", d.name, d.degree));
        }
        for r in &c.relations {
            out.push_str(&format!("  rel {}\n", r.render_relation(&names_of(cg), &half_weights(cg))));
        }
        out.push_str(&format!("  point {}\n", render(&c.point, cg)));
        for (name, img) in &c.rho {
            out.push_str(&format!("  rho {name} -> {}\n", render(img, cg)));
        }
        out.push_str(&format!("  pdY {}\n  cN {}\n", render(&c.pd_center, g), render(&c.normal, cg)));
        for (i, p) in &c.lifts {
            out.push_str(&format!("  lift {i} {}\n", render(p, g)));
        }
        out.push_str("}\n");
    }
    out
}

/// Evaluated content of a space file or catalog entry.
#[derive(Clone, Debug)]
pub struct Model {
    pub space: Arc<Space>,
    pub divisors: BTreeMap<String, ScArrangement>,
    pub strata: BTreeMap<String, StrataData>,
    pub centers: BTreeMap<String, CenterSpec>,
    /// Independently known Euler characteristic (catalog entries).
    pub euler: Option<Q>,
}

pub enum DivisorRef<'a> {
    Sc(&'a ScArrangement),
    Nc(&'a StrataData),
}

impl Model {
    pub fn from_entry(e: &CatalogEntry) -> Model {
        Model {
            space: e.space.clone(),
            divisors: e.arrangements.clone(),
            strata: BTreeMap::new(),
            centers: e.centers.clone(),
            euler: Some(e.euler.clone()),
        }
    }

    pub fn divisor(&self, name: &str) -> Result<DivisorRef<'_>, CliError> {
        if let Some(a) = self.divisors.get(name) {
            return Ok(DivisorRef::Sc(a));
        }
        if let Some(d) = self.strata.get(name) {
            return Ok(DivisorRef::Nc(d));
        }
        Err(CliError::input(
            Code::UnknownObject,
            format!("no divisor `{name}` in {}; known: {}", self.space.name(), known(self.divisors.keys().chain(self.strata.keys()))),
        ))
    }

    pub fn sc_divisor(&self, name: &str) -> Result<&ScArrangement, CliError> {
        match self.divisor(name)? {
            DivisorRef::Sc(a) => Ok(a),
            DivisorRef::Nc(_) => Err(CliError::input(
                Code::Unsupported,
                format!("`{name}` is given by strata only; this command needs a simple-crossings divisor"),
            )),
        }
    }

    pub fn center(&self, name: &str) -> Result<&CenterSpec, CliError> {
        self.centers.get(name).ok_or_else(|| {
            CliError::input(
                Code::UnknownObject,
                format!("no center `{name}` in {}; known: {}", self.space.name(), known(self.centers.keys())),
            )
        })
    }
}

fn known<'a>(names: impl Iterator<Item = &'a String>) -> String {
    let v: Vec<&str> = names.map(String::as_str).collect();
    if v.is_empty() {
        "none".into()
    } else {
        v.join(", ")
    }
}

fn ring_of(gens: &[GenDecl], relations: &[Poly], dim: u32, what: &str) -> Result<Arc<GradedRing>, CliError> {
    let generators = gens.iter().map(|g| Generator::new(g.name.clone(), g.degree)).collect();
    build_ring(RingPresentation::new(generators, relations.to_vec(), 2 * dim)).map_err(|e| CliError::core(what, e))
}

fn cls(ring: &Arc<GradedRing>, p: &Poly, what: &str) -> Result<Cls, CliError> {
    Cls::from_poly(ring, p).map_err(|e| CliError::core(what, e))
}

pub fn build_model(doc: &SpaceFile) -> Result<Model, CliError> {
    let ring = ring_of(&doc.generators, &doc.relations, doc.dim, &format!("space {}", doc.name))?;
    let space = Space::new(doc.name.clone(), cls(&ring, &doc.point, "point")?, cls(&ring, &doc.ctx, "ctx")?)
        .map_err(|e| CliError::core(format!("space {}", doc.name), e))?;
    let space = Arc::new(space);
    let mut divisors = BTreeMap::new();
    for (name, polys) in &doc.divisors {
        let what = format!("divisor {name}");
        let comps = polys
            .iter()
            .enumerate()
            .map(|(i, p)| Ok((format!("V{}", i + 1), cls(&ring, p, &what)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        divisors.insert(name.clone(), ScArrangement::new(&ring, comps).map_err(|e| CliError::core(&what, e))?);
    }
    let mut strata = BTreeMap::new();
    for (name, polys) in &doc.strata {
        let what = format!("strata {name}");
        let pd = polys.iter().map(|p| cls(&ring, p, &what)).collect::<Result<Vec<_>, _>>()?;
        strata.insert(name.clone(), StrataData::new(&ring, pd).map_err(|e| CliError::core(&what, e))?);
    }
    let mut centers = BTreeMap::new();
    for c in &doc.centers {
        let what = format!("center {}", c.name);
        let cring = ring_of(&c.generators, &c.relations, c.dim, &what)?;
        let images = doc
            .generators
            .iter()
            .map(|g| match c.rho.iter().find(|(n, _)| *n == g.name) {
                Some((_, p)) => cls(&cring, p, &what),
                None => Ok(Cls::zero(&cring)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let lifts = c
            .lifts
            .iter()
            .map(|(i, p)| Ok((*i, cls(&ring, p, &what)?)))
            .collect::<Result<BTreeMap<_, _>, CliError>>()?;
        let spec = CenterSpec::new(
            c.name.clone(),
            space.clone(),
            cls(&cring, &c.point, &what)?,
            images,
            cls(&ring, &c.pd_center, &what)?,
            cls(&cring, &c.normal, &what)?,
            lifts,
        )
        .map_err(|e| CliError::core(&what, e))?;
        centers.insert(c.name.clone(), spec);
    }
    Ok(Model { space, divisors, strata, centers, euler: None })
}

fn decls(ring: &GradedRing) -> Vec<GenDecl> {
    ring.generators().iter().map(|g| GenDecl { name: g.name.clone(), degree: g.degree }).collect()
}

/// The document describing a catalog entry. Divisor component labels are
/// not part of the format.
pub fn document_from_entry(e: &CatalogEntry) -> SpaceFile {
    let ring = e.space.ring();
    let centers = e
        .centers
        .values()
        .map(|c| {
            let cr = c.center_ring();
            CenterBlock {
                name: c.name().to_string(),
                dim: cr.half_top(),
                generators: decls(cr),
                relations: cr.presentation().relations.clone(),
                point: c.center_integration().point().to_poly(),
                rho: ring
                    .names()
                    .iter()
                    .zip(c.restriction().images())
                    .filter(|(_, img)| !img.is_zero())
                    .map(|(n, img)| (n.clone(), img.to_poly()))
                    .collect(),
                pd_center: c.pd_center().to_poly(),
                normal: c.normal().class().to_poly(),
                lifts: c.lifts().iter().filter(|(_, l)| !l.is_zero()).map(|(i, l)| (*i, l.to_poly())).collect(),
            }
        })
        .collect();
    SpaceFile {
        name: e.name.clone(),
        dim: ring.half_top(),
        generators: decls(ring),
        relations: ring.presentation().relations.clone(),
        point: e.space.point().to_poly(),
        ctx: e.space.tangent_chern().to_poly(),
        divisors: e.arrangements.iter().map(|(n, a)| (n.clone(), a.classes().iter().map(Cls::to_poly).collect())).collect(),
        strata: Vec::new(),
        centers,
    }
}
