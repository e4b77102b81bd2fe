//! Built-in graph families and the seeded G(n, p) generator.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named graph family with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphFamily {
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    /// Star K_{1,m}: one hub joined to `leaves` leaves.
    Star { leaves: usize },
    Petersen,
    Empty { n: usize },
    Gnp { n: usize, p: f64, seed: u64 },
}

/// Build the requested family member.
pub fn generate(family: &GraphFamily) -> Result<Graph> {
    match *family {
        GraphFamily::Complete { n } => {
            require(n >= 1, "complete graph needs n >= 1")?;
            let mut g = Graph::empty(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        GraphFamily::Cycle { n } => {
            require(n >= 3, "cycle needs n >= 3")?;
            let mut g = Graph::empty(n)?;
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
            Ok(g)
        }
        GraphFamily::Path { n } => {
            require(n >= 1, "path needs n >= 1")?;
            let mut g = Graph::empty(n)?;
            for v in 1..n {
                g.add_edge(v - 1, v);
            }
            Ok(g)
        }
        GraphFamily::Star { leaves } => {
            let mut g = Graph::empty(leaves + 1)?;
            for v in 1..=leaves {
                g.add_edge(0, v);
            }
            Ok(g)
        }
        GraphFamily::Petersen => {
            // Outer cycle 0..4, inner pentagram 5..9, spokes i -> i+5.
            let mut g = Graph::empty(10)?;
            for i in 0..5 {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(5 + i, 5 + (i + 2) % 5);
                g.add_edge(i, i + 5);
            }
            Ok(g)
        }
        GraphFamily::Empty { n } => {
            require(n >= 1, "empty graph needs n >= 1")?;
            Graph::empty(n)
        }
        GraphFamily::Gnp { n, p, seed } => gnp(n, p, seed),
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Family(msg.into()))
    }
}

/// Erdos-Renyi G(n, p), deterministic for a given `(n, p, seed)`.
///
/// The sampler is pinned so corpora are reproducible anywhere: a ChaCha20
/// stream seeded with `seed`, one `u64` draw per vertex pair in
/// lexicographic order (0,1), (0,2), ..., (n-2,n-1); the edge is present
/// iff the draw is below `p * 2^64`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    require(n >= 1, "gnp needs n >= 1")?;
    require((0.0..=1.0).contains(&p), "gnp needs p in [0, 1]")?;
    let mut g = Graph::empty(n)?;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let threshold = (p * 18_446_744_073_709_551_616.0) as u128; // p * 2^64
    for u in 0..n {
        for v in u + 1..n {
            if (rng.next_u64() as u128) < threshold {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Resolve a built-in graph name: `K6`, `C5`, `P4`, `K1_4`, `petersen`,
/// `empty7`. Returns `None` if the name matches no family syntax.
pub fn named_graph(name: &str) -> Option<Result<Graph>> {
    let name = name.trim();
    if name.is_empty() || !name.is_ascii() {
        return None;
    }
    if name.eq_ignore_ascii_case("petersen") {
        return Some(generate(&GraphFamily::Petersen));
    }
    if let Some(rest) = name
        .strip_prefix("empty")
        .or_else(|| name.strip_prefix("Empty"))
    {
        let n: usize = rest.parse().ok()?;
        return Some(generate(&GraphFamily::Empty { n }));
    }
    if let Some(rest) = name.strip_prefix("K1_") {
        let m: usize = rest.parse().ok()?;
        return Some(generate(&GraphFamily::Star { leaves: m }));
    }
    let (head, rest) = name.split_at(1);
    let n: usize = rest.parse().ok()?;
    match head {
        "K" => Some(generate(&GraphFamily::Complete { n })),
        "C" => Some(generate(&GraphFamily::Cycle { n })),
        "P" => Some(generate(&GraphFamily::Path { n })),
        _ => None,
    }
}
