//! graph6 encoding of simple graphs.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, `126` followed by three 6-bit
//! groups for `n <= 258047`, and `126 126` followed by six groups otherwise.
//! The upper triangle is then written column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), padded with zeros to a multiple of
//! six bits, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const SMALL_N: usize = 62;
const MEDIUM_N: usize = 258_047;
const LARGE_N: usize = 68_719_476_735;

fn push_groups(out: &mut Vec<u8>, value: usize, groups: usize) {
    for k in (0..groups).rev() {
        out.push(((value >> (6 * k)) & 0x3f) as u8 + 63);
    }
}

pub fn encode(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::domain("graph6 cannot represent parallel edges"));
    }
    let n = g.n();
    let mut out = Vec::new();
    if n <= SMALL_N {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_N {
        out.push(126);
        push_groups(&mut out, n, 3);
    } else if n <= LARGE_N {
        out.push(126);
        out.push(126);
        push_groups(&mut out, n, 6);
    } else {
        return Err(Error::Capacity {
            what: "graph6 vertex count",
            limit: LARGE_N,
            got: n,
        });
    }

    let mut group = 0u8;
    let mut filled = 0;
    for w in 1..n {
        for u in 0..w {
            group = (group << 1) | g.has_edge(u, w) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::parse(pos, "byte outside the graph6 range 63..=126"));
    }
    let read_groups = |start: usize, groups: usize| -> Result<usize> {
        if bytes.len() < start + groups {
            return Err(Error::parse(bytes.len(), "truncated vertex count"));
        }
        Ok(bytes[start..start + groups]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, mut pos) = match bytes {
        [] => return Err(Error::parse(0, "empty graph6 string")),
        [126, 126, ..] => (read_groups(2, 6)?, 8),
        [126, ..] => (read_groups(1, 3)?, 4),
        [b, ..] => ((b - 63) as usize, 1),
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(Error::parse(
            pos,
            format!(
                "expected {needed} adjacency bytes for {n} vertices, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for w in 1..n {
        for u in 0..w {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, w)?;
            }
            bit += 1;
        }
    }
    pos += needed;
    // padding bits must be zero
    if pairs % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(Error::parse(pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_codes() {
        assert_eq!(encode(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(encode(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(encode(&Graph::path(2)).unwrap(), "A_");
        assert_eq!(encode(&Graph::complete(4)).unwrap(), "C~");
        // the example in McKay's format description
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn medium_size_header() {
        let g = Graph::path(63);
        let code = encode(&g).unwrap();
        assert_eq!(&code.as_bytes()[..4], &[126, 63, 63 + 0, 63 + 63]);
        assert_eq!(decode(&code).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(decode("").is_err());
        assert!(decode("A").is_err());
        assert!(decode("A_?").is_err());
        assert!(decode("A`").is_err()); // padding bit set
        assert!(decode("A\u{7f}").is_err());
        assert!(encode(&Graph::cycle(2).unwrap()).is_err());
    }

    #[test]
    fn round_trip_all_five_vertex_masks() {
        for mask in 0..1u64 << 10 {
            let g = crate::enumerate::labeled_graph(5, mask);
            assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
        }
    }
}
