//! Line-oriented sectioned text format for algebras, modules, complexes and
//! censuses.
//!
//! ```text
//! [algebra]
//! field 2
//! vertices 1 2 3
//! x1: 1 -> 2
//! x2: 2 -> 3
//! relation x1*x2
//!
//! [module]
//! dims 1 1 0
//! x1: 1
//! ```
//!
//! Matrix rows are separated by `;`. Complex differentials are matrices of
//! algebra elements such as `x1 + 2*y1`, entries separated by `,`.

use std::sync::Arc;

use crate::algebra::{build_algebra, Algebra, Arrow, Path, Quiver, Relation};
use crate::complex::ProjComplex;
use crate::error::{Error, ParseErrorKind, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::module::Module;
use crate::projective::PathMatrix;
use crate::universe::Census;

/// One `[name]` block with its content lines (1-based line numbers).
#[derive(Clone, Debug)]
pub struct Section {
    pub name: String,
    pub line: usize,
    pub lines: Vec<(usize, String)>,
}

fn err(line: usize, col: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { line, col, kind }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    err(line, col, ParseErrorKind::Syntax(msg.into()))
}

/// Splits text into sections. Blank lines and `#` comments are dropped.
pub fn sections(text: &str) -> Result<Vec<Section>> {
    let mut out: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim_end();
        if line.trim().is_empty() {
            continue;
        }
        let t = line.trim();
        if t.starts_with('[') {
            if !t.ends_with(']') {
                return Err(syntax(i + 1, 1, "unterminated section header"));
            }
            out.push(Section { name: t[1..t.len() - 1].trim().to_string(), line: i + 1, lines: Vec::new() });
        } else {
            match out.last_mut() {
                Some(s) => s.lines.push((i + 1, line.to_string())),
                None => return Err(syntax(i + 1, 1, "content before the first section header")),
            }
        }
    }
    Ok(out)
}

fn find_section<'a>(secs: &'a [Section], name: &str) -> Result<&'a Section> {
    secs.iter()
        .find(|s| s.name == name)
        .ok_or_else(|| syntax(1, 1, format!("missing [{name}] section")))
}

fn col_of(line: &str, tok: &str) -> usize {
    line.find(tok).map(|c| c + 1).unwrap_or(1)
}

/// `key rest` split on the first whitespace or colon.
fn key_value(line: &str) -> (&str, &str) {
    let t = line.trim();
    match t.find(|c: char| c.is_whitespace() || c == ':') {
        Some(p) => (&t[..p], t[p..].trim_start_matches(':').trim()),
        None => (t, ""),
    }
}

/// Field order declared in an `[algebra]` section, if any.
pub fn peek_field(text: &str) -> Result<Option<u64>> {
    for s in sections(text)? {
        if s.name != "algebra" {
            continue;
        }
        for (ln, l) in &s.lines {
            let (k, v) = key_value(l);
            if k == "field" {
                return v
                    .parse()
                    .map(Some)
                    .map_err(|_| syntax(*ln, col_of(l, v), format!("bad field order `{v}`")));
            }
        }
    }
    Ok(None)
}

fn parse_int(line: usize, full: &str, tok: &str) -> Result<i64> {
    tok.parse().map_err(|_| syntax(line, col_of(full, tok), format!("expected an integer, found `{tok}`")))
}

fn parse_path(q: &Quiver, line: usize, full: &str, word: &str) -> Result<Path> {
    let mut p: Option<Path> = None;
    for name in word.split('*') {
        let name = name.trim();
        let step = match q.arrow_index(name) {
            Some(a) => Path::arrow(q, a),
            None => match name.strip_prefix('e').and_then(|v| q.vertex_index(v)) {
                Some(v) => Path::trivial(v),
                None => return Err(err(line, col_of(full, name), ParseErrorKind::UnknownArrow(name.into()))),
            },
        };
        p = Some(match p {
            None => step,
            Some(prev) => {
                let col = col_of(full, name);
                prev.concat(&step)
                    .ok_or_else(|| syntax(line, col, format!("`{word}` is not a path")))?
            }
        });
    }
    p.ok_or_else(|| syntax(line, col_of(full, word), "empty path"))
}

/// Parses `c1*p1 + c2*p2 - ...` into signed terms.
fn parse_combination<F: Field>(q: &Quiver, line: usize, full: &str, expr: &str) -> Result<Vec<(F, Path)>> {
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut rest = expr.trim();
    if rest == "0" {
        return Ok(terms);
    }
    loop {
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let tok = rest[..end].trim();
        if tok.is_empty() {
            return Err(syntax(line, col_of(full, rest), "missing term"));
        }
        let (coef, word) = match tok.split_once('*') {
            Some((c, w)) if c.trim().parse::<i64>().is_ok() => (c.trim().parse::<i64>().unwrap(), w),
            _ => match tok.parse::<i64>() {
                Ok(_) => return Err(syntax(line, col_of(full, tok), "constant terms are not paths")),
                Err(_) => (1, tok),
            },
        };
        terms.push((F::from_i64(sign * coef), parse_path(q, line, full, word)?));
        rest = rest[end..].trim_start();
        if rest.is_empty() {
            break;
        }
        sign = 1;
    }
    Ok(terms)
}

fn check_field<F: Field>(line: usize, full: &str, v: &str) -> Result<()> {
    let p = parse_int(line, full, v)?;
    if p as u64 != F::order() {
        return Err(err(
            line,
            col_of(full, v),
            ParseErrorKind::Invalid(format!("file declares F_{p} but the session field is F_{}", F::order())),
        ));
    }
    Ok(())
}

pub fn parse_algebra<F: Field>(text: &str) -> Result<Arc<Algebra<F>>> {
    algebra_from_section(find_section(&sections(text)?, "algebra")?)
}

pub fn algebra_from_section<F: Field>(s: &Section) -> Result<Arc<Algebra<F>>> {
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<(usize, String, Arrow)> = Vec::new();
    let mut relations: Vec<(usize, String, String)> = Vec::new();
    for (ln, l) in &s.lines {
        let ln = *ln;
        if l.contains("->") {
            let body = l.trim().strip_prefix("arrow").map(str::trim).unwrap_or(l.trim());
            let (name, ends) = body
                .split_once(':')
                .ok_or_else(|| syntax(ln, 1, "expected `name: source -> target`"))?;
            let (src, tgt) = ends.split_once("->").unwrap();
            let vs = vertices
                .as_ref()
                .ok_or_else(|| syntax(ln, 1, "arrows must follow the vertices line"))?;
            let find = |v: &str| {
                let v = v.trim();
                vs.iter()
                    .position(|x| x == v)
                    .ok_or_else(|| err(ln, col_of(l, v), ParseErrorKind::UnknownVertex(v.into())))
            };
            let a = Arrow { name: name.trim().to_string(), source: find(src)?, target: find(tgt)? };
            arrows.push((ln, l.clone(), a));
            continue;
        }
        let (k, v) = key_value(l);
        match k {
            "field" => check_field::<F>(ln, l, v)?,
            "vertices" => {
                let vs: Vec<String> = v.split([' ', ',']).filter(|x| !x.is_empty()).map(String::from).collect();
                vertices = Some(vs);
            }
            "relation" => relations.push((ln, l.clone(), v.to_string())),
            _ => return Err(syntax(ln, col_of(l, k), format!("unknown key `{k}` in [algebra]"))),
        }
    }
    let vertices = vertices.ok_or_else(|| syntax(s.line, 1, "missing `vertices` line"))?;
    let q = Quiver::new(vertices, arrows.iter().map(|(_, _, a)| a.clone()).collect())
        .map_err(|e| err(s.line, 1, ParseErrorKind::Invalid(e.to_string())))?;
    let mut rels = Vec::new();
    for (ln, full, expr) in &relations {
        let terms = parse_combination::<F>(&q, *ln, full, expr)?;
        if terms.is_empty() {
            return Err(err(*ln, col_of(full, expr), ParseErrorKind::NotAdmissible("empty relation".into())));
        }
        if let Some((_, p)) = terms.iter().find(|(_, p)| p.len() < 2) {
            let shown = p.display(&q);
            return Err(err(
                *ln,
                col_of(full, &shown),
                ParseErrorKind::NotAdmissible(format!("`{shown}` has length {} < 2", p.len())),
            ));
        }
        let (s0, t0) = (terms[0].1.source, terms[0].1.target);
        if terms.iter().any(|(_, p)| p.source != s0 || p.target != t0) {
            return Err(err(*ln, col_of(full, expr), ParseErrorKind::NotAdmissible("paths are not parallel".into())));
        }
        rels.push(Relation::new(terms));
    }
    build_algebra(q, rels).map_err(|e| match e {
        Error::NotAdmissible(m) => err(s.line, 1, ParseErrorKind::NotAdmissible(m)),
        other => err(s.line, 1, ParseErrorKind::Invalid(other.to_string())),
    })
}

fn parse_matrix<F: Field>(ln: usize, full: &str, body: &str, rows: usize, cols: usize, what: &str) -> Result<Matrix<F>> {
    let body = body.trim();
    if body.is_empty() || body == "-" {
        if rows * cols == 0 {
            return Ok(Matrix::zeros(rows, cols));
        }
        return Err(err(ln, 1, ParseErrorKind::ShapeMismatch(format!("{what}: expected {rows}x{cols}, found empty"))));
    }
    let parsed: Vec<Vec<&str>> = body.split(';').map(|r| r.split_whitespace().collect()).collect();
    if parsed.len() != rows || parsed.iter().any(|r| r.len() != cols) {
        let found = format!("{}x{}", parsed.len(), parsed.first().map(|r| r.len()).unwrap_or(0));
        return Err(err(
            ln,
            col_of(full, body),
            ParseErrorKind::ShapeMismatch(format!("{what}: expected {rows}x{cols}, found {found}")),
        ));
    }
    let mut m = Matrix::zeros(rows, cols);
    for (i, r) in parsed.iter().enumerate() {
        for (j, tok) in r.iter().enumerate() {
            m[(i, j)] = F::from_i64(parse_int(ln, full, tok)?);
        }
    }
    Ok(m)
}

fn parse_usizes(ln: usize, full: &str, v: &str) -> Result<Vec<usize>> {
    v.split([' ', ','])
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<usize>()
                .map_err(|_| syntax(ln, col_of(full, x), format!("expected a non-negative integer, found `{x}`")))
        })
        .collect()
}

pub fn parse_module<F: Field>(text: &str, alg: &Arc<Algebra<F>>) -> Result<Module<F>> {
    module_from_section(find_section(&sections(text)?, "module")?, alg)
}

pub fn module_from_section<F: Field>(s: &Section, alg: &Arc<Algebra<F>>) -> Result<Module<F>> {
    let q = alg.quiver();
    let mut dims: Option<Vec<usize>> = None;
    let mut maps: Vec<Option<Matrix<F>>> = vec![None; q.num_arrows()];
    for (ln, l) in &s.lines {
        let ln = *ln;
        let (k, v) = key_value(l);
        if k == "dims" {
            let d = parse_usizes(ln, l, v)?;
            if d.len() != q.num_vertices() {
                return Err(err(
                    ln,
                    col_of(l, v),
                    ParseErrorKind::ShapeMismatch(format!("{} vertices, {} dimensions", q.num_vertices(), d.len())),
                ));
            }
            dims = Some(d);
            continue;
        }
        let a = q.arrow_index(k).ok_or_else(|| err(ln, col_of(l, k), ParseErrorKind::UnknownArrow(k.into())))?;
        let d = dims.as_ref().ok_or_else(|| syntax(ln, 1, "matrices must follow the dims line"))?;
        let arr = &q.arrows[a];
        maps[a] = Some(parse_matrix(ln, l, v, d[arr.target], d[arr.source], k)?);
    }
    let dims = dims.ok_or_else(|| syntax(s.line, 1, "missing `dims` line"))?;
    let maps = maps
        .into_iter()
        .zip(&q.arrows)
        .map(|(m, a)| m.unwrap_or_else(|| Matrix::zeros(dims[a.target], dims[a.source])))
        .collect();
    Module::new(alg.clone(), dims, maps).map_err(|e| err(s.line, 1, ParseErrorKind::Invalid(e.to_string())))
}

fn elem_from_terms<F: Field>(alg: &Algebra<F>, terms: &[(F, Path)]) -> Vec<F> {
    let mut x = alg.zero();
    for (c, p) in terms {
        for (xi, yi) in x.iter_mut().zip(alg.reduce_path(p)) {
            *xi += *c * yi;
        }
    }
    x
}

fn expand(mult: &[usize]) -> Vec<usize> {
    mult.iter().enumerate().flat_map(|(v, &k)| std::iter::repeat_n(v, k)).collect()
}

pub fn parse_complex<F: Field>(text: &str, alg: &Arc<Algebra<F>>) -> Result<ProjComplex<F>> {
    complex_from_section(find_section(&sections(text)?, "complex")?, alg)
}

pub fn complex_from_section<F: Field>(s: &Section, alg: &Arc<Algebra<F>>) -> Result<ProjComplex<F>> {
    let q = alg.quiver();
    let mut terms: Vec<(i64, Vec<usize>)> = Vec::new();
    let mut diffs: Vec<(usize, String, i64, String)> = Vec::new();
    for (ln, l) in &s.lines {
        let ln = *ln;
        let (k, rest) = key_value(l);
        let (deg, body) = rest
            .split_once(':')
            .ok_or_else(|| syntax(ln, col_of(l, rest), "expected `term <degree>: ...` or `diff <degree>: ...`"))?;
        let deg = parse_int(ln, l, deg.trim())?;
        match k {
            "term" => {
                let m = parse_usizes(ln, l, body)?;
                if m.len() != q.num_vertices() {
                    return Err(err(
                        ln,
                        col_of(l, body.trim()),
                        ParseErrorKind::ShapeMismatch(format!("{} vertices, {} multiplicities", q.num_vertices(), m.len())),
                    ));
                }
                terms.push((deg, expand(&m)));
            }
            "diff" => diffs.push((ln, l.clone(), deg, body.to_string())),
            _ => return Err(syntax(ln, col_of(l, k), format!("unknown key `{k}` in [complex]"))),
        }
    }
    terms.sort_by_key(|t| t.0);
    if terms.is_empty() {
        return Ok(ProjComplex::zero(alg));
    }
    let lo = terms[0].0;
    let hi = terms.last().unwrap().0;
    let mut full: Vec<Vec<usize>> = vec![Vec::new(); (hi - lo + 1) as usize];
    for (d, t) in terms {
        full[(d - lo) as usize] = t;
    }
    let mut mats: Vec<PathMatrix<F>> =
        (0..full.len() - 1).map(|j| PathMatrix::zero(alg, &full[j + 1], &full[j])).collect();
    for (ln, l, deg, body) in diffs {
        if deg < lo || deg >= hi {
            return Err(syntax(ln, 1, format!("differential at degree {deg} has no target term")));
        }
        let j = (deg - lo) as usize;
        let (rows, cols) = (full[j + 1].clone(), full[j].clone());
        let entries: Vec<Vec<&str>> = if body.trim().is_empty() || body.trim() == "-" {
            Vec::new()
        } else {
            body.split(';').map(|r| r.split(',').collect()).collect()
        };
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(err(
                ln,
                col_of(&l, body.trim()),
                ParseErrorKind::ShapeMismatch(format!("differential {deg}: expected {}x{}", rows.len(), cols.len())),
            ));
        }
        let m = &mut mats[j];
        for (r, row) in entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                let t = parse_combination::<F>(q, ln, &l, e)?;
                if t.iter().any(|(_, p)| p.source != rows[r] || p.target != cols[c]) {
                    return Err(err(
                        ln,
                        col_of(&l, e.trim()),
                        ParseErrorKind::Invalid(format!(
                            "entry `{}` must be paths from {} to {}",
                            e.trim(),
                            q.vertices[rows[r]],
                            q.vertices[cols[c]]
                        )),
                    ));
                }
                m.set(r, c, elem_from_terms(alg, &t));
            }
        }
    }
    let c = ProjComplex::new(alg, lo, full, mats).map_err(|e| err(s.line, 1, ParseErrorKind::Invalid(e.to_string())))?;
    Ok(c)
}

/// Census file: an `[algebra]`-compatible `[census]` header followed by one
/// `[module]` section per indecomposable.
pub fn parse_census<F: Field>(text: &str, alg: &Arc<Algebra<F>>) -> Result<Census<F>> {
    let secs = sections(text)?;
    let head = find_section(&secs, "census")?;
    let mut bound = None;
    let mut method = "imported".to_string();
    let mut seed = 0;
    for (ln, l) in &head.lines {
        let (k, v) = key_value(l);
        match k {
            "bound" => bound = Some(parse_usizes(*ln, l, v)?),
            "method" => method = v.to_string(),
            "seed" => seed = parse_int(*ln, l, v)? as u64,
            _ => return Err(syntax(*ln, col_of(l, k), format!("unknown key `{k}` in [census]"))),
        }
    }
    let bound = bound.ok_or_else(|| syntax(head.line, 1, "missing `bound` line"))?;
    let modules = secs
        .iter()
        .filter(|s| s.name == "module")
        .map(|s| module_from_section(s, alg))
        .collect::<Result<Vec<_>>>()?;
    let mut c = Census::from_modules(alg, bound, modules);
    c.method = method;
    c.seed = seed;
    Ok(c)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn print_algebra<F: Field>(alg: &Algebra<F>) -> String {
    let q = alg.quiver();
    let mut s = format!("[algebra]\nfield {}\nvertices {}\n", F::order(), q.vertices.join(" "));
    for a in &q.arrows {
        s += &format!("{}: {} -> {}\n", a.name, q.vertices[a.source], q.vertices[a.target]);
    }
    for r in alg.relations() {
        s += &format!("relation {}\n", r.display(q));
    }
    s
}

fn print_matrix<F: Field>(m: &Matrix<F>) -> String {
    (0..m.rows())
        .map(|i| join(&(0..m.cols()).map(|j| m[(i, j)].to_i64()).collect::<Vec<_>>()))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn print_module<F: Field>(m: &Module<F>) -> String {
    let q = m.algebra().quiver();
    let mut s = format!("[module]\ndims {}\n", join(m.dims()));
    for (a, arr) in q.arrows.iter().enumerate() {
        let mat = m.map(a);
        if mat.rows() * mat.cols() > 0 {
            s += &format!("{}: {}\n", arr.name, print_matrix(mat));
        }
    }
    s
}

/// Prints a complex with each term's summands sorted by vertex; the
/// differentials are permuted to match.
pub fn print_complex<F: Field>(c: &ProjComplex<F>) -> String {
    let alg = c.algebra();
    let nv = alg.num_vertices();
    let mut s = "[complex]\n".to_string();
    if c.is_zero() {
        return s;
    }
    let order = |t: &[usize]| {
        let mut idx: Vec<usize> = (0..t.len()).collect();
        idx.sort_by_key(|&i| (t[i], i));
        idx
    };
    for k in c.lo()..=c.hi() {
        let mut mult = vec![0; nv];
        for &v in c.term(k) {
            mult[v] += 1;
        }
        s += &format!("term {}: {}\n", k, join(&mult));
    }
    for k in c.lo()..c.hi() {
        let d = c.diff(k);
        let (ro, co) = (order(c.term(k + 1)), order(c.term(k)));
        let rows: Vec<String> = ro
            .iter()
            .map(|&r| co.iter().map(|&cc| alg.display_elem(d.get(r, cc))).collect::<Vec<_>>().join(", "))
            .collect();
        let body = if rows.is_empty() || co.is_empty() { "-".to_string() } else { rows.join("; ") };
        s += &format!("diff {}: {}\n", k, body);
    }
    s
}

/// The complex with summands of each term sorted by vertex, as printed.
pub fn sorted_complex<F: Field>(c: &ProjComplex<F>) -> ProjComplex<F> {
    if c.is_zero() {
        return c.clone();
    }
    let alg = c.algebra();
    let order = |t: &[usize]| {
        let mut idx: Vec<usize> = (0..t.len()).collect();
        idx.sort_by_key(|&i| (t[i], i));
        idx
    };
    let terms: Vec<Vec<usize>> = (c.lo()..=c.hi())
        .map(|k| order(c.term(k)).iter().map(|&i| c.term(k)[i]).collect())
        .collect();
    let diffs = (c.lo()..c.hi())
        .map(|k| c.diff(k).select(&order(c.term(k + 1)), &order(c.term(k))))
        .collect();
    ProjComplex::new_unchecked(alg, c.lo(), terms, diffs)
}

pub fn print_census<F: Field>(c: &Census<F>) -> String {
    let mut s = print_algebra(&c.algebra);
    s += &format!("\n[census]\nbound {}\nmethod {}\nseed {}\n", join(&c.bound), c.method, c.seed);
    for m in &c.modules {
        s += "\n";
        s += &print_module(m);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    const KRON: &str = "[algebra]\nfield 2\nvertices 1 2 3\nx1: 1 -> 2\ny1: 1 -> 2\nx2: 2 -> 3\ny2: 2 -> 3\nrelation x1*x2\nrelation y1*y2\n";

    #[test]
    fn kronecker_chain_dimension() {
        let a = parse_algebra::<F2>(KRON).unwrap();
        assert_eq!(a.dim(), 9);
        let b = parse_algebra::<F2>(&print_algebra(&a)).unwrap();
        assert_eq!(print_algebra(&a), print_algebra(&b));
    }

    #[test]
    fn short_relation_is_rejected() {
        let bad = KRON.replace("relation y1*y2", "relation x1");
        match parse_algebra::<F2>(&bad) {
            Err(Error::Parse { line: 9, kind: ParseErrorKind::NotAdmissible(_), .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn field_mismatch_and_unknown_names() {
        assert!(matches!(
            parse_algebra::<F3>(KRON),
            Err(Error::Parse { line: 2, kind: ParseErrorKind::Invalid(_), .. })
        ));
        let bad = KRON.replace("x2: 2 -> 3", "x2: 2 -> 4");
        assert!(matches!(
            parse_algebra::<F2>(&bad),
            Err(Error::Parse { line: 6, kind: ParseErrorKind::UnknownVertex(_), .. })
        ));
        let bad = KRON.replace("relation y1*y2", "relation y1*z2");
        assert!(matches!(
            parse_algebra::<F2>(&bad),
            Err(Error::Parse { line: 9, kind: ParseErrorKind::UnknownArrow(_), col: 13 })
        ));
    }

    #[test]
    fn module_round_trip_and_shape_error() {
        let a = parse_algebra::<F2>(KRON).unwrap();
        let text = "[module]\ndims 1 1 1\nx1: 1\ny2: 1\n";
        let m = parse_module(text, &a).unwrap();
        assert_eq!(m.dims(), &[1, 1, 1]);
        assert_eq!(parse_module(&print_module(&m), &a).unwrap(), m);
        let bad = "[module]\ndims 1 1 1\nx1: 1 0\n";
        assert!(matches!(
            parse_module(bad, &a),
            Err(Error::Parse { line: 3, kind: ParseErrorKind::ShapeMismatch(_), .. })
        ));
        let viol = "[module]\ndims 1 1 1\nx1: 1\nx2: 1\n";
        assert!(parse_module(viol, &a).is_err());
    }

    #[test]
    fn complex_round_trip() {
        let a = parse_algebra::<F2>(KRON).unwrap();
        let text = "[complex]\nterm -2: 0 0 1\nterm -1: 0 1 0\nterm 0: 1 0 0\ndiff -2: y2\ndiff -1: y1\n";
        let c = parse_complex(text, &a).unwrap();
        assert_eq!(c.lo(), -2);
        let printed = print_complex(&c);
        assert_eq!(printed, text);
        let bad = text.replace("diff -2: y2", "diff -2: x2");
        assert!(parse_complex(&bad, &a).is_err());
    }
}
