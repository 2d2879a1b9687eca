//! The graph6 encoding for simple graphs.

use super::Multigraph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes a simple graph.
pub fn encode(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple("graph6 encoding"));
    }
    let n = g.n();
    let mut adj = vec![false; n * n];
    for e in g.edges() {
        adj[e.a * n + e.b] = true;
    }
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut byte = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            byte = (byte << 1) | adj[i * n + j] as u8;
            bits += 1;
            if bits == 6 {
                out.push(byte + 63);
                byte = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((byte << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(Error::MalformedGraph6 {
            offset,
            reason: "unexpected end of input",
        }),
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(_) => Err(Error::MalformedGraph6 {
            offset,
            reason: "byte outside the printable range 63..=126",
        }),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and a
/// trailing newline are accepted.
pub fn decode(text: &str) -> Result<Multigraph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = text.strip_prefix(HEADER) {
        bytes = rest.as_bytes();
        base = HEADER.len();
    }
    while let [head @ .., b'\n' | b'\r'] = bytes {
        bytes = head;
    }
    let err = |offset: usize, reason| Error::MalformedGraph6 {
        offset: base + offset,
        reason,
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(err(0, "empty input")),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                let mut n = 0usize;
                for k in 2..8 {
                    n = (n << 6) | sextet(bytes, k).map_err(|_| err(k, "truncated size field"))? as usize;
                }
                (n, 8)
            } else {
                let mut n = 0usize;
                for k in 1..4 {
                    n = (n << 6) | sextet(bytes, k).map_err(|_| err(k, "truncated size field"))? as usize;
                }
                (n, 4)
            }
        }
        Some(_) => (sextet(bytes, 0).map_err(|_| err(0, "invalid size byte"))? as usize, 1),
    };
    let total = n * n.saturating_sub(1) / 2;
    let expected = pos + total.div_ceil(6);
    if bytes.len() < expected {
        return Err(err(bytes.len(), "truncated adjacency data"));
    }
    if bytes.len() > expected {
        return Err(err(expected, "trailing bytes after adjacency data"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                current = sextet(bytes, pos).map_err(|e| match e {
                    Error::MalformedGraph6 { offset, reason } => err(offset, reason),
                    other => other,
                })?;
                pos += 1;
            }
            if current & (32 >> (k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad = current & ((1u8 << (6 - k % 6)) - 1);
        if pad != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    Multigraph::new(n, edges)
}

/// Parses a graph6 file: one graph per line, blank lines ignored.
pub fn decode_lines(text: &str) -> Result<Vec<Multigraph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            decode(l.trim_end()).map_err(|e| Error::Parse {
                line: i + 1,
                reason: e.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn known_strings() {
        let k2 = family(FamilyKind::Complete, 2).unwrap();
        assert_eq!(encode(&k2).unwrap(), "A_");
        assert_eq!(decode("A_").unwrap(), k2);
        // values from the format description
        assert_eq!(encode(&family(FamilyKind::Complete, 4).unwrap()).unwrap(), "C~");
        assert_eq!(encode(&family(FamilyKind::Path, 5).unwrap()).unwrap(), "DhC");
        for (n, s) in [(0, "?"), (1, "@"), (2, "A?"), (3, "B?")] {
            assert_eq!(encode(&Multigraph::empty(n)).unwrap(), s);
            assert_eq!(decode(s).unwrap(), Multigraph::empty(n));
        }
        assert_eq!(decode(">>graph6<<A_\n").unwrap(), k2);
    }

    #[test]
    fn malformed() {
        assert!(matches!(decode("D"), Err(Error::MalformedGraph6 { offset: 1, .. })));
        assert!(matches!(decode(""), Err(Error::MalformedGraph6 { offset: 0, .. })));
        assert!(matches!(decode("A`"), Err(Error::MalformedGraph6 { offset: 1, .. })));
        assert!(matches!(decode("A_?"), Err(Error::MalformedGraph6 { offset: 2, .. })));
        assert!(matches!(decode("A "), Err(Error::MalformedGraph6 { offset: 1, .. })));
        let c2 = family(FamilyKind::Cycle, 2).unwrap();
        assert!(encode(&c2).is_err());
    }

    #[test]
    fn large_sizes() {
        for n in [62, 63, 100, 300] {
            let g = family(FamilyKind::Path, n).unwrap();
            assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
        }
    }

    #[test]
    fn random_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let n = rng.gen_range(0..20usize);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(0.4) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Multigraph::new(n, edges).unwrap();
            let s = encode(&g).unwrap();
            assert_eq!(decode(&s).unwrap(), g);
            assert_eq!(encode(&decode(&s).unwrap()).unwrap(), s);
        }
    }
}
