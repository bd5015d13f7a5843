//! Line-oriented text formats for instances and sequences.
//!
//! Interval instances:
//!
//! ```text
//! # comment
//! 4 2
//! A 0 2
//! B 1 3
//! C 4 6
//! D 5 7
//! I B C
//! J A D
//! ```
//!
//! The header holds `n k`, then `n` lines `id left right` with integer or
//! `p/q` coordinates, an `I` line with `k` ids and an optional `J` line.
//! Abstract instances (used for hardness reductions) start with
//! `graph n m k`, followed by `n` id lines, `m` lines `u v`, and the same
//! `I`/`J` lines. Everything after `#` on a line is ignored.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;
use tsr_core::oracle::{AbstractGraph, State};
use tsr_core::{Configuration, Coord, Interval, IntervalGraph, ReconfigSequence};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown id `{id}`")]
    UnknownId { line: usize, id: String },
    #[error("line {line}: duplicate id `{id}`")]
    DuplicateId { line: usize, id: String },
    #[error("line {line}: {which} is not independent: `{u}` and `{v}` are adjacent")]
    NotIndependent {
        line: usize,
        which: char,
        u: String,
        v: String,
    },
    #[error("line {line}: {which} lists {actual} ids, expected k = {expected}")]
    KMismatch {
        line: usize,
        which: char,
        expected: usize,
        actual: usize,
    },
    #[error("unexpected end of input: missing {0}")]
    MissingLine(&'static str),
}

/// A parsed interval instance.
#[derive(Clone, Debug)]
pub struct IntervalInstance {
    pub graph: IntervalGraph,
    pub k: usize,
    pub initial: Configuration,
    pub target: Option<Configuration>,
}

/// A parsed abstract-graph instance.
#[derive(Clone, Debug)]
pub struct AbstractInstance {
    pub graph: AbstractGraph,
    pub k: usize,
    pub initial: State,
    pub target: Option<State>,
}

#[derive(Clone, Debug)]
pub enum InstanceFile {
    Interval(IntervalInstance),
    Abstract(AbstractInstance),
}

/// Non-empty lines with comments stripped, tagged with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn number(line: usize, field: &str, what: &str) -> Result<usize, FormatError> {
    field.parse().map_err(|_| {
        syntax(
            line,
            format!("{what} must be a non-negative integer, got `{field}`"),
        )
    })
}

fn coordinate(line: usize, field: &str) -> Result<Coord, FormatError> {
    field
        .parse()
        .map_err(|_| syntax(line, format!("invalid coordinate `{field}`")))
}

/// Parses one `I`/`J` line, checking the tag and the count.
fn token_line<'a>(
    line: usize,
    fields: &[&'a str],
    which: char,
    k: usize,
) -> Result<Vec<&'a str>, FormatError> {
    if fields[0] != which.to_string() {
        return Err(syntax(
            line,
            format!("expected a `{which}` line, got `{}`", fields[0]),
        ));
    }
    let ids = fields[1..].to_vec();
    if ids.len() != k {
        return Err(FormatError::KMismatch {
            line,
            which,
            expected: k,
            actual: ids.len(),
        });
    }
    Ok(ids)
}

type Lines<'t> = std::iter::Peekable<Box<dyn Iterator<Item = (usize, Vec<&'t str>)> + 't>>;

/// `(line, tag, ids)` of each configuration line.
type ConfigLines<'t> = Vec<(usize, char, Vec<&'t str>)>;

/// Reads the `I` line and the optional `J` line, then requires end of input.
fn configuration_lines<'t>(lines: &mut Lines<'t>, k: usize) -> Result<ConfigLines<'t>, FormatError> {
    let (line, fields) = lines.next().ok_or(FormatError::MissingLine("the I line"))?;
    let mut out = vec![(line, 'I', token_line(line, &fields, 'I', k)?)];
    if let Some((line, fields)) = lines.next() {
        out.push((line, 'J', token_line(line, &fields, 'J', k)?));
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "unexpected content after the J line"));
    }
    Ok(out)
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, FormatError> {
    let mut lines: Lines<'_> = (Box::new(content_lines(text)) as Box<dyn Iterator<Item = _>>).peekable();
    let (line, header) = lines.next().ok_or(FormatError::MissingLine("the header"))?;
    if header[0] == "graph" {
        parse_abstract(line, &header, &mut lines).map(InstanceFile::Abstract)
    } else {
        parse_interval(line, &header, &mut lines).map(InstanceFile::Interval)
    }
}

fn check_k(line: usize, k: usize) -> Result<(), FormatError> {
    if k == 0 {
        return Err(syntax(line, "k must be at least 1"));
    }
    Ok(())
}

fn parse_interval(
    line: usize,
    header: &[&str],
    lines: &mut Lines<'_>,
) -> Result<IntervalInstance, FormatError> {
    let [n, k] = header else {
        return Err(syntax(line, "header must be `n k`"));
    };
    let n = number(line, n, "n")?;
    let k = number(line, k, "k")?;
    if n == 0 {
        return Err(syntax(line, "n must be at least 1"));
    }
    check_k(line, k)?;

    let mut seen = HashSet::new();
    let mut intervals = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, fields) = lines.next().ok_or(FormatError::MissingLine("interval lines"))?;
        let [id, left, right] = fields[..] else {
            return Err(syntax(line, "interval line must be `id left right`"));
        };
        if id == "I" || id == "J" {
            return Err(syntax(line, format!("expected {n} interval lines")));
        }
        if !seen.insert(id) {
            return Err(FormatError::DuplicateId {
                line,
                id: id.to_owned(),
            });
        }
        let (left, right) = (coordinate(line, left)?, coordinate(line, right)?);
        if left >= right {
            return Err(syntax(line, format!("interval `{id}` must have left < right")));
        }
        intervals.push(Interval::new(id, left, right));
    }
    let graph = IntervalGraph::new(intervals).map_err(|e| syntax(line, e.to_string()))?;

    let mut configs = Vec::new();
    for (line, which, ids) in configuration_lines(lines, k)? {
        let mut vs = Vec::with_capacity(k);
        for id in &ids {
            vs.push(graph.vertex(id).map_err(|_| FormatError::UnknownId {
                line,
                id: id.to_string(),
            })?);
        }
        for (a, &u) in vs.iter().enumerate() {
            if let Some(&v) = vs[a + 1..].iter().find(|&&v| v == u || graph.adjacent(u, v)) {
                if u == v {
                    return Err(FormatError::DuplicateId {
                        line,
                        id: graph.id(u).to_owned(),
                    });
                }
                return Err(FormatError::NotIndependent {
                    line,
                    which,
                    u: graph.id(u).to_owned(),
                    v: graph.id(v).to_owned(),
                });
            }
        }
        configs.push(Configuration::new(&graph, vs).expect("checked above"));
    }
    let mut configs = configs.into_iter();
    Ok(IntervalInstance {
        initial: configs.next().expect("I line present"),
        target: configs.next(),
        graph,
        k,
    })
}

fn parse_abstract(
    line: usize,
    header: &[&str],
    lines: &mut Lines<'_>,
) -> Result<AbstractInstance, FormatError> {
    let [_, n, m, k] = header else {
        return Err(syntax(line, "header must be `graph n m k`"));
    };
    let (n, m, k) = (
        number(line, n, "n")?,
        number(line, m, "m")?,
        number(line, k, "k")?,
    );
    check_k(line, k)?;

    let mut ids = Vec::with_capacity(n);
    let mut seen = HashSet::new();
    for _ in 0..n {
        let (line, fields) = lines.next().ok_or(FormatError::MissingLine("vertex lines"))?;
        let [id] = fields[..] else {
            return Err(syntax(line, "vertex line must hold a single id"));
        };
        if !seen.insert(id) {
            return Err(FormatError::DuplicateId {
                line,
                id: id.to_owned(),
            });
        }
        ids.push(id.to_owned());
    }
    let mut graph =
        AbstractGraph::new(ids, std::iter::empty::<(String, String)>()).expect("ids are distinct");
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, fields) = lines.next().ok_or(FormatError::MissingLine("edge lines"))?;
        let [u, v] = fields[..] else {
            return Err(syntax(line, "edge line must be `u v`"));
        };
        for id in [u, v] {
            if !seen.contains(id) {
                return Err(FormatError::UnknownId {
                    line,
                    id: id.to_owned(),
                });
            }
        }
        if u == v {
            return Err(syntax(line, format!("self-loop on `{u}`")));
        }
        edges.push((u.to_owned(), v.to_owned()));
    }
    graph = AbstractGraph::new(graph.ids().to_vec(), edges).expect("edges checked above");

    let mut states = Vec::new();
    for (line, which, ids) in configuration_lines(lines, k)? {
        let mut s = Vec::with_capacity(k);
        for id in &ids {
            s.push(graph.lookup(id).map_err(|_| FormatError::UnknownId {
                line,
                id: id.to_string(),
            })?);
        }
        for (a, &u) in s.iter().enumerate() {
            if let Some(&v) = s[a + 1..].iter().find(|&&v| v == u || graph.adjacent(u, v)) {
                if u == v {
                    return Err(FormatError::DuplicateId {
                        line,
                        id: graph.id(u).to_owned(),
                    });
                }
                return Err(FormatError::NotIndependent {
                    line,
                    which,
                    u: graph.id(u).to_owned(),
                    v: graph.id(v).to_owned(),
                });
            }
        }
        s.sort_unstable();
        states.push(s);
    }
    let mut states = states.into_iter();
    Ok(AbstractInstance {
        initial: states.next().expect("I line present"),
        target: states.next(),
        graph,
        k,
    })
}

fn push_config_line(out: &mut String, which: char, ids: &[&str]) {
    out.push(which);
    for id in ids {
        out.push(' ');
        out.push_str(id);
    }
    out.push('\n');
}

/// Serializes an interval instance; parsing the result gives back the same instance.
pub fn write_interval_instance(inst: &IntervalInstance) -> String {
    let g = &inst.graph;
    let mut out = format!("{} {}\n", g.len(), inst.k);
    for v in g.vertices() {
        let iv = g.interval(v);
        writeln!(out, "{} {} {}", iv.id, iv.left, iv.right).expect("writing to a string");
    }
    push_config_line(&mut out, 'I', &inst.initial.ids(g));
    if let Some(t) = &inst.target {
        push_config_line(&mut out, 'J', &t.ids(g));
    }
    out
}

pub fn write_abstract_instance(inst: &AbstractInstance) -> String {
    let g = &inst.graph;
    let mut out = format!("graph {} {} {}\n", g.len(), g.edge_count(), inst.k);
    for id in g.ids() {
        writeln!(out, "{id}").expect("writing to a string");
    }
    for u in 0..g.len() as u32 {
        for v in (u + 1)..g.len() as u32 {
            if g.adjacent(u, v) {
                writeln!(out, "{} {}", g.id(u), g.id(v)).expect("writing to a string");
            }
        }
    }
    let ids = |s: &State| g.state_ids(s);
    push_config_line(
        &mut out,
        'I',
        &ids(&inst.initial).iter().map(String::as_str).collect::<Vec<_>>(),
    );
    if let Some(t) = &inst.target {
        push_config_line(
            &mut out,
            'J',
            &ids(t).iter().map(String::as_str).collect::<Vec<_>>(),
        );
    }
    out
}

/// `m`, then one `from to` line per move.
pub fn format_sequence(g: &IntervalGraph, s: &ReconfigSequence) -> String {
    let mut out = format!("{}\n", s.len());
    for (from, to) in s.id_pairs(g) {
        writeln!(out, "{from} {to}").expect("writing to a string");
    }
    out
}

/// Inverse of [`format_sequence`], as raw id pairs.
pub fn parse_sequence(text: &str) -> Result<Vec<(String, String)>, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingLine("the move count"))?;
    let [m] = header[..] else {
        return Err(syntax(line, "first line must be the move count"));
    };
    let m = number(line, m, "move count")?;
    let mut moves = Vec::with_capacity(m);
    for (line, fields) in lines.by_ref().take(m) {
        let [from, to] = fields[..] else {
            return Err(syntax(line, "move line must be `from to`"));
        };
        moves.push((from.to_owned(), to.to_owned()));
    }
    if moves.len() < m {
        return Err(FormatError::MissingLine("move lines"));
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, format!("more than {m} moves")));
    }
    Ok(moves)
}

/// Resolves parsed id pairs against `g`; the error names the failing line.
pub fn resolve_sequence(
    g: &IntervalGraph,
    pairs: &[(String, String)],
) -> Result<ReconfigSequence, FormatError> {
    pairs
        .iter()
        .enumerate()
        .map(|(t, (from, to))| {
            let resolve = |id: &str| {
                g.vertex(id).map_err(|_| FormatError::UnknownId {
                    line: t + 2,
                    id: id.to_owned(),
                })
            };
            Ok(tsr_core::Move::new(resolve(from)?, resolve(to)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub const G3: &str = "# two overlapping pairs\n4 2\nA 0 2\nB 1 3\nC 4 6\nD 5 7\nI B C\nJ A D\n";

    fn interval(text: &str) -> IntervalInstance {
        match parse_instance(text).unwrap() {
            InstanceFile::Interval(i) => i,
            InstanceFile::Abstract(_) => panic!("expected an interval instance"),
        }
    }

    #[test]
    fn parses_the_sample() {
        let inst = interval(G3);
        assert_eq!(inst.graph.len(), 4);
        assert_eq!(inst.k, 2);
        assert_eq!(inst.initial.ids(&inst.graph), ["B", "C"]);
        assert_eq!(inst.target.as_ref().unwrap().ids(&inst.graph), ["A", "D"]);
        let again = interval(&write_interval_instance(&inst));
        assert_eq!(again.graph, inst.graph);
        assert_eq!(again.initial, inst.initial);
    }

    #[test]
    fn rational_coordinates() {
        let inst = interval("2 1\nx 1/2 3/2\ny 3/2 5\nI x\n");
        assert!(inst.graph.adjacent_ids("x", "y").unwrap());
        assert!(inst.target.is_none());
        assert!(write_interval_instance(&inst).contains("x 1/2 3/2"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_instance("4 2\nA 0 2\nB 1 3\nC 4 6\nD 5 7\nI A B\n").unwrap_err(),
            FormatError::NotIndependent {
                line: 6,
                which: 'I',
                u: "A".into(),
                v: "B".into()
            }
        );
        assert_eq!(
            parse_instance("4 3\nA 0 2\nB 1 3\nC 4 6\nD 5 7\nI A C\n").unwrap_err(),
            FormatError::KMismatch {
                line: 6,
                which: 'I',
                expected: 3,
                actual: 2
            }
        );
        assert!(matches!(
            parse_instance("2 1\nA 0 1\nA 2 3\nI A\n"),
            Err(FormatError::DuplicateId { line: 3, .. })
        ));
        assert!(matches!(
            parse_instance("2 1\nA 0 1\nB 2 3\nI Z\n"),
            Err(FormatError::UnknownId { line: 4, .. })
        ));
        assert!(matches!(
            parse_instance("2 1\nA 0 1\nB 2 x\nI A\n"),
            Err(FormatError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_instance("2 1\nA 0 1\nB 3 2\nI A\n"),
            Err(FormatError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_instance("2 1\nA 0 1\nB 2 3\nI A\nJ B\nJ A\n"),
            Err(FormatError::Syntax { line: 6, .. })
        ));
        assert!(matches!(
            parse_instance("2 1\nA 0 1\n"),
            Err(FormatError::MissingLine(_))
        ));
        assert!(matches!(
            parse_instance("# only\n"),
            Err(FormatError::MissingLine(_))
        ));
    }

    #[test]
    fn abstract_round_trip() {
        let text = "graph 3 1 2\nu\nv\nw\nu v\nI u w\nJ v w\n";
        let InstanceFile::Abstract(inst) = parse_instance(text).unwrap() else {
            panic!("expected an abstract instance")
        };
        assert_eq!(inst.graph.edge_count(), 1);
        assert_eq!(write_abstract_instance(&inst), text);
        assert!(matches!(
            parse_instance("graph 2 1 2\nu\nv\nu v\nI u v\n"),
            Err(FormatError::NotIndependent { line: 5, .. })
        ));
    }

    #[test]
    fn sequence_format() {
        let inst = interval(G3);
        let g = &inst.graph;
        let s = ReconfigSequence::from_ids(g, &[("B", "A"), ("C", "D")]).unwrap();
        assert_eq!(format_sequence(g, &s), "2\nB A\nC D\n");
        assert_eq!(format_sequence(g, &ReconfigSequence::new()), "0\n");
        let pairs = parse_sequence("2\nB A\nC D\n").unwrap();
        assert_eq!(resolve_sequence(g, &pairs).unwrap(), s);
        assert!(parse_sequence("3\nB A\n").is_err());
        assert!(parse_sequence("1\nB A\nC D\n").is_err());
        assert!(matches!(
            resolve_sequence(g, &[("B".into(), "Q".into())]),
            Err(FormatError::UnknownId { line: 2, .. })
        ));
    }
}
