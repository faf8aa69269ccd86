//! graph6 codec: one graph per ASCII line, 6 upper-triangle bits per byte.
//!
//! The order is encoded as `n + 63` for `n <= 62`, or as `'~'` followed by
//! three bytes holding an 18-bit big-endian value for larger `n` (capped at
//! 512 here, matching [`crate::graph::MAX_ORDER`]). The body packs the upper
//! adjacency triangle in column-major pair order `(0,1), (0,2), (1,2),
//! (0,3), ...`, six bits per byte, most significant bit first, offset by 63,
//! zero-padded to a byte boundary.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use std::io::BufRead;
use std::path::Path;

/// Header prefix conventionally found on the first line of graph6 files.
pub const FILE_HEADER: &str = ">>graph6<<";

fn bad(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line into a [`Graph`].
///
/// Trailing newline characters are ignored. Errors name the byte offset of
/// the first offending byte.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(bad(0, "empty input"));
    }
    let sixbit = |offset: usize| -> Result<usize> {
        match bytes[offset] {
            b @ 63..=126 => Ok((b - 63) as usize),
            b => Err(bad(
                offset,
                format!("byte {b} outside the graph6 range [63, 126]"),
            )),
        }
    };
    let (n, header_len) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(bad(
                1,
                "8-byte order header implies an order beyond the supported cap of 512",
            ));
        }
        if bytes.len() < 4 {
            return Err(bad(bytes.len(), "truncated extended order header"));
        }
        let n = (sixbit(1)? << 12) | (sixbit(2)? << 6) | sixbit(3)?;
        (n, 4)
    } else {
        (sixbit(0)?, 1)
    };
    if n == 0 {
        return Err(bad(0, "graph order 0 is not supported"));
    }
    if n > MAX_ORDER {
        return Err(bad(
            0,
            format!("order {n} exceeds the supported cap of {MAX_ORDER}"),
        ));
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() != nbytes {
        return Err(bad(
            bytes.len().min(header_len + nbytes),
            format!(
                "expected {nbytes} data bytes for order {n}, found {}",
                data.len()
            ),
        ));
    }

    let mut g = Graph::new(n)?;
    // Current pair (u, v) with u < v, advancing in column-major order.
    let (mut u, mut v) = (0usize, 1usize);
    for i in 0..nbytes {
        let val = sixbit(header_len + i)?;
        for shift in (0..6).rev() {
            let bit = (val >> shift) & 1;
            if v < n {
                if bit == 1 {
                    g.add_edge(u, v);
                }
                u += 1;
                if u == v {
                    u = 0;
                    v += 1;
                }
            } else if bit != 0 {
                return Err(bad(header_len + i, "nonzero padding bits"));
            }
        }
    }
    Ok(g)
}

/// Encodes a [`Graph`] as a graph6 line (without a trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a stream of graph6 lines, skipping `>>graph6<<` header lines and
/// blank lines. Errors are tagged with their 1-based line number.
pub fn parse_graph6_lines(reader: impl BufRead) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with(FILE_HEADER) {
            continue;
        }
        let g = parse_graph6(trimmed).map_err(|e| Error::CorpusLine {
            line: idx + 1,
            source: Box::new(e),
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

/// Reads a graph6 file, one graph per line.
pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let file = std::fs::File::open(path)?;
    parse_graph6_lines(std::io::BufReader::new(file))
}
