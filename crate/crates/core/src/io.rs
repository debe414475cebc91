//! Graph file parsing and result serialization.
//!
//! Two input formats are understood: DIMACS clique files (`c` comments,
//! `p edge n m`, `e u v` with 1-based ids) and whitespace-separated edge
//! lists with `%`/`#` comments, which also covers the coordinate pattern
//! subset of Matrix Market.

use std::collections::HashMap;
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFileFormat {
    Dimacs,
    EdgeList,
}

impl GraphFileFormat {
    /// DIMACS when some line starts with `p ` or `e `, edge list otherwise.
    pub fn detect(text: &str) -> Self {
        let dimacs = text
            .lines()
            .any(|line| line.starts_with("p ") || line.starts_with("e "));
        if dimacs {
            GraphFileFormat::Dimacs
        } else {
            GraphFileFormat::EdgeList
        }
    }
}

/// A parsed graph with the label each vertex carries in the source file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

impl ParsedGraph {
    pub fn label(&self, v: Vertex) -> u64 {
        self.labels[v]
    }

    /// Maps source-file labels back to vertex ids; unknown labels are errors.
    pub fn vertices_for_labels(&self, labels: &[u64]) -> Result<Vec<Vertex>> {
        let index: HashMap<u64, Vertex> = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, &l)| (l, v))
            .collect();
        labels
            .iter()
            .map(|l| {
                index
                    .get(l)
                    .copied()
                    .ok_or_else(|| Error::invalid(format!("unknown vertex {l}")))
            })
            .collect()
    }
}

pub fn parse_graph(bytes: &[u8], hint: Option<GraphFileFormat>) -> Result<ParsedGraph> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::invalid(format!("input is not UTF-8: {e}")))?;
    match hint.unwrap_or_else(|| GraphFileFormat::detect(text)) {
        GraphFileFormat::Dimacs => parse_dimacs(text),
        GraphFileFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn read_graph_file(path: impl AsRef<std::path::Path>) -> Result<ParsedGraph> {
    parse_graph(&std::fs::read(path)?, None)
}

fn number<T: FromStr>(token: &str, line: usize) -> Result<T> {
    token.parse().map_err(|_| {
        Error::parse(
            line,
            format!("expected a non-negative integer, found {token:?}"),
        )
    })
}

fn parse_dimacs(text: &str) -> Result<ParsedGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(Error::parse(line, "duplicate problem line"));
                }
                let (Some(kind), Some(nv), Some(ne), None) =
                    (tokens.next(), tokens.next(), tokens.next(), tokens.next())
                else {
                    return Err(Error::parse(line, "expected `p edge <n> <m>`"));
                };
                if kind != "edge" && kind != "col" {
                    return Err(Error::parse(
                        line,
                        format!("unsupported problem type {kind:?}"),
                    ));
                }
                n = Some(number(nv, line)?);
                // the declared edge count is not trusted
                number::<usize>(ne, line)?;
            }
            Some("e") => {
                let Some(n) = n else {
                    return Err(Error::parse(line, "edge before the problem line"));
                };
                let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                    return Err(Error::parse(line, "expected `e <u> <v>`"));
                };
                let (u, v): (usize, usize) = (number(a, line)?, number(b, line)?);
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(Error::parse(line, format!("vertex {w} outside 1..={n}")));
                    }
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::parse(line, format!("unknown line type {other:?}")));
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    Ok(ParsedGraph {
        graph: Graph::from_edges(n, edges)?,
        labels: (1..=n as u64).collect(),
    })
}

fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut ids: HashMap<u64, Vertex> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut size_line_pending = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim_start();
        if trimmed.starts_with("%%MatrixMarket") {
            size_line_pending = true;
            continue;
        }
        if trimmed.is_empty() || trimmed.starts_with('%') || trimmed.starts_with('#') {
            continue;
        }
        if std::mem::take(&mut size_line_pending) {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            return Err(Error::parse(line, "expected `<u> <v>`"));
        };
        let mut id = |token: &str| -> Result<Vertex> {
            let label: u64 = number(token, line)?;
            Ok(*ids.entry(label).or_insert_with(|| {
                labels.push(label);
                labels.len() - 1
            }))
        };
        let u = id(a)?;
        let v = id(b)?;
        edges.push((u, v));
    }
    Ok(ParsedGraph {
        graph: Graph::from_edges(labels.len(), edges)?,
        labels,
    })
}

/// One solver run. `witness` holds source-file labels; when `timed_out` is
/// false `size` is the proven optimum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub instance: String,
    pub s: usize,
    pub size: usize,
    pub witness: Vec<u64>,
    pub reduced_v: usize,
    pub reduced_e: usize,
    pub tree_nodes: u64,
    pub time_s: f64,
    pub timed_out: bool,
    pub variant: String,
}

/// CSV has no sequences, so the witness travels as a space-joined string.
#[derive(Serialize, Deserialize)]
struct CsvRow {
    instance: String,
    s: usize,
    size: usize,
    witness: String,
    reduced_v: usize,
    reduced_e: usize,
    tree_nodes: u64,
    time_s: f64,
    timed_out: bool,
    variant: String,
}

const CSV_HEADER: [&str; 10] = [
    "instance",
    "s",
    "size",
    "witness",
    "reduced_v",
    "reduced_e",
    "tree_nodes",
    "time_s",
    "timed_out",
    "variant",
];

impl From<&ResultRecord> for CsvRow {
    fn from(r: &ResultRecord) -> Self {
        let witness = r
            .witness
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        CsvRow {
            instance: r.instance.clone(),
            s: r.s,
            size: r.size,
            witness,
            reduced_v: r.reduced_v,
            reduced_e: r.reduced_e,
            tree_nodes: r.tree_nodes,
            time_s: r.time_s,
            timed_out: r.timed_out,
            variant: r.variant.clone(),
        }
    }
}

impl TryFrom<CsvRow> for ResultRecord {
    type Error = Error;

    fn try_from(row: CsvRow) -> Result<Self> {
        let witness = row
            .witness
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::invalid(format!("bad witness id {t:?}")))
            })
            .collect::<Result<_>>()?;
        Ok(ResultRecord {
            instance: row.instance,
            s: row.s,
            size: row.size,
            witness,
            reduced_v: row.reduced_v,
            reduced_e: row.reduced_e,
            tree_nodes: row.tree_nodes,
            time_s: row.time_s,
            timed_out: row.timed_out,
            variant: row.variant,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResultFormat {
    Csv,
    Json,
}

impl ResultFormat {
    /// JSON for a `.json` extension, CSV otherwise.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => ResultFormat::Json,
            _ => ResultFormat::Csv,
        }
    }
}

impl fmt::Display for ResultFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResultFormat::Csv => "csv",
            ResultFormat::Json => "json",
        })
    }
}

pub fn write_results<W: Write>(
    records: &[ResultRecord],
    format: ResultFormat,
    sink: W,
) -> Result<()> {
    match format {
        ResultFormat::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(sink);
            writer.write_record(CSV_HEADER)?;
            for record in records {
                writer.serialize(CsvRow::from(record))?;
            }
            writer.flush()?;
        }
        ResultFormat::Json => {
            let mut sink = sink;
            serde_json::to_writer_pretty(&mut sink, records)?;
            sink.write_all(b"\n")?;
            sink.flush()?;
        }
    }
    Ok(())
}

pub fn read_results<R: Read>(format: ResultFormat, source: R) -> Result<Vec<ResultRecord>> {
    match format {
        ResultFormat::Csv => csv::Reader::from_reader(source)
            .deserialize::<CsvRow>()
            .map(|row| ResultRecord::try_from(row?))
            .collect(),
        ResultFormat::Json => Ok(serde_json::from_reader(source)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> ResultRecord {
        ResultRecord {
            instance: "c-fat200-1".into(),
            s: 2,
            size: 12,
            witness: vec![1, 5, 9],
            reduced_v: 90,
            reduced_e: 729,
            tree_nodes: 17,
            time_s: 0.1 + 0.2,
            timed_out: false,
            variant: "default".into(),
        }
    }

    #[test]
    fn dimacs_triangle() {
        let p = parse_graph(b"c tiny\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", None).unwrap();
        assert!(p.graph.is_complete());
        assert_eq!(p.graph.vertex_count(), 3);
        assert_eq!(p.labels, vec![1, 2, 3]);
    }

    #[test]
    fn dimacs_errors_carry_line_numbers() {
        let err = parse_graph(b"p edge 2 1\ne 1 5\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_graph(b"p edge x 1\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_graph(b"p edge 3\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_graph(b"p edge 3 1\ne 1 b\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_graph(b"e 1 2\n", None).is_err());
    }

    #[test]
    fn dimacs_header_count_is_advisory() {
        let p = parse_graph(b"p edge 4 99\ne 1 2\ne 2 1\ne 3 3\n", None).unwrap();
        assert_eq!(p.graph.edge_count(), 1);
        assert_eq!(p.graph.vertex_count(), 4);
    }

    #[test]
    fn edge_list_drops_loops_and_duplicates() {
        let p = parse_graph(b"0 1\n1 0\n1 1\n", None).unwrap();
        assert_eq!(p.graph.vertex_count(), 2);
        assert_eq!(p.graph.edge_count(), 1);
    }

    #[test]
    fn edge_list_compacts_in_first_seen_order() {
        let p = parse_graph(b"# c\n% c\n70 3\n\n3 12\n", None).unwrap();
        assert_eq!(p.labels, vec![70, 3, 12]);
        assert!(p.graph.has_edge(0, 1) && p.graph.has_edge(1, 2));
        assert_eq!(p.vertices_for_labels(&[12, 70]).unwrap(), vec![2, 0]);
        assert!(p.vertices_for_labels(&[4]).is_err());
        let err = parse_graph(b"1 2\n3 -4\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn matrix_market_pattern() {
        let text = b"%%MatrixMarket matrix coordinate pattern symmetric\n% x\n3 3 2\n2 1\n3 2\n";
        let p = parse_graph(text, None).unwrap();
        assert_eq!(p.labels, vec![2, 1, 3]);
        assert_eq!(p.graph.edge_count(), 2);
    }

    #[test]
    fn detection_is_line_based() {
        assert_eq!(
            GraphFileFormat::detect("c x\np edge 1 0\n"),
            GraphFileFormat::Dimacs
        );
        assert_eq!(GraphFileFormat::detect("1 2\n"), GraphFileFormat::EdgeList);
        assert_eq!(GraphFileFormat::detect(""), GraphFileFormat::EdgeList);
    }

    #[test]
    fn csv_layout() {
        let mut out = Vec::new();
        write_results(&[record()], ResultFormat::Csv, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert!(lines[1].starts_with("c-fat200-1,2,12,1 5 9,90,729,17,"));

        let mut out = Vec::new();
        write_results(&[], ResultFormat::Csv, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 1);
    }

    #[test]
    fn round_trips() {
        let mut timed_out = record();
        timed_out.timed_out = true;
        timed_out.witness.clear();
        timed_out.instance = "needs, \"quoting\"".into();
        let records = vec![record(), timed_out];
        for format in [ResultFormat::Csv, ResultFormat::Json] {
            let mut out = Vec::new();
            write_results(&records, format, &mut out).unwrap();
            assert_eq!(
                read_results(format, out.as_slice()).unwrap(),
                records,
                "{format}"
            );
        }
    }
}
