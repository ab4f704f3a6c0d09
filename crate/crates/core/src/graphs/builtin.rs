//! Small named graphs used as examples and fixtures.

use super::SimpleGraph;

fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("v{i}")
            }
        })
        .collect()
}

fn build(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::from_indices(letters(n), edges).expect("builtin graph is valid")
}

/// Path on `n ≥ 2` vertices `a - b - c - ...`.
pub fn path(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

/// Complete graph on `n ≥ 2` vertices.
pub fn complete(n: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    build(n, &edges)
}

/// Star with one centre `a` and `n - 1` leaves.
pub fn star(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    build(n, &edges)
}

/// A 6-vertex graph with trivial automorphism group (the minimum size for one).
pub fn asymmetric6() -> SimpleGraph {
    build(6, &[(0, 2), (1, 2), (1, 3), (1, 4), (2, 4), (3, 5)])
}

/// A 9-vertex graph whose automorphism group is cyclic of order 3.
pub fn z3_nine() -> SimpleGraph {
    build(
        9,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (0, 6),
            (1, 2), (1, 4), (1, 5), (1, 7),
            (2, 3), (2, 5), (2, 8),
            (3, 6), (4, 7), (5, 8),
        ],
    )
}

pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// Looks up `P3`, `K4`, `C5`, `star4`, `asym6`, `z3_nine`, `petersen`.
pub fn by_name(name: &str) -> Option<SimpleGraph> {
    let lower = name.trim().to_ascii_lowercase();
    match lower.as_str() {
        "asym6" | "asymmetric6" => return Some(asymmetric6()),
        "z3_nine" | "z3" => return Some(z3_nine()),
        "petersen" => return Some(petersen()),
        _ => {}
    }
    let split = lower.find(|c: char| c.is_ascii_digit())?;
    let (head, tail) = lower.split_at(split);
    let n: usize = tail.parse().ok()?;
    match head {
        "p" | "path" if n >= 2 => Some(path(n)),
        "c" | "cycle" if n >= 3 => Some(cycle(n)),
        "k" | "complete" if n >= 2 => Some(complete(n)),
        "star" if n >= 3 => Some(star(n)),
        _ => None,
    }
}
