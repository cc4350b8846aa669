//! Deterministic corpus of Eulerian digraphs: named small families, the
//! exhaustive labeled family at desk scale, and seeded random graphs built
//! by superposing directed cycles.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rootpoly::digraph::{two_vertex_bundle, Digraph};

/// Directed n-cycles for n = 2..=5 and the 2-vertex 2k-edge bundles for
/// k = 1..=3, with stable names.
pub fn named_family() -> Vec<(String, Digraph)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push((
            format!("cycle_{n}"),
            Digraph::directed_cycle(n).expect("cycle sizes are valid"),
        ));
    }
    for k in 1..=3 {
        out.push((
            format!("bundle_{k}"),
            two_vertex_bundle(k).expect("bundle sizes are valid"),
        ));
    }
    out
}

/// Every labeled connected Eulerian digraph with `2 <= n <= n_max` vertices
/// and `1 <= m <= m_max` edges (no self-loops; parallel edges allowed).
/// Edge order is lexicographic by `(tail, head)`. Raw labeled enumeration,
/// no isomorphism reduction.
pub fn exhaustive_eulerian(n_max: usize, m_max: usize) -> Vec<Digraph> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let mut pair_types: Vec<(usize, usize)> = Vec::new();
        for tail in 1..=n {
            for head in 1..=n {
                if tail != head {
                    pair_types.push((tail, head));
                }
            }
        }
        pair_types.sort();
        let mut multiplicities = vec![0usize; pair_types.len()];
        collect_balanced(n, m_max, &pair_types, &mut multiplicities, 0, 0, &mut out);
    }
    out
}

fn collect_balanced(
    n: usize,
    m_max: usize,
    pair_types: &[(usize, usize)],
    multiplicities: &mut Vec<usize>,
    index: usize,
    used: usize,
    out: &mut Vec<Digraph>,
) {
    if index == pair_types.len() {
        if used == 0 {
            return;
        }
        let mut edges = Vec::with_capacity(used);
        for (i, &(tail, head)) in pair_types.iter().enumerate() {
            for _ in 0..multiplicities[i] {
                edges.push((tail, head));
            }
        }
        let g = Digraph::new(n, edges).expect("pair types exclude self-loops");
        if g.is_eulerian() {
            out.push(g);
        }
        return;
    }
    for count in 0..=(m_max - used) {
        multiplicities[index] = count;
        collect_balanced(n, m_max, pair_types, multiplicities, index + 1, used + count, out);
    }
    multiplicities[index] = 0;
}

fn rand_below(rng: &mut ChaCha8Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// A seeded random Eulerian digraph: a Hamiltonian directed cycle through a
/// random vertex permutation, then further random directed cycles until the
/// edge budget is spent. The budget is trimmed to `n + 4` edges to keep the
/// dual root polytope at a dimension where exhaustive lattice scans stay
/// cheap.
pub fn random_eulerian(rng: &mut ChaCha8Rng, n_max: usize, m_max: usize) -> Digraph {
    assert!(n_max >= 2, "need at least two vertices");
    let n = 2 + rand_below(rng, n_max - 1);
    let cap = m_max.min(n + 4);
    // feasible edge totals: n alone or n plus sums of cycle lengths in
    // 2..=n (for n = 2 only even surpluses exist)
    let mut targets: Vec<usize> = vec![n];
    for m in n + 2..=cap {
        if n == 2 && (m - n) % 2 == 1 {
            continue;
        }
        targets.push(m);
    }
    let target = targets[rand_below(rng, targets.len())];

    let mut vertices: Vec<usize> = (1..=n).collect();
    // Fisher-Yates with the seeded stream
    for i in (1..n).rev() {
        let j = rand_below(rng, i + 1);
        vertices.swap(i, j);
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(target);
    for i in 0..n {
        edges.push((vertices[i], vertices[(i + 1) % n]));
    }
    let mut remaining = target - n;
    while remaining > 0 {
        let mut length = 2 + rand_below(rng, (remaining.min(n)) - 1);
        if remaining - length == 1 {
            // never leave a single spare edge: no 1-cycles exist
            if length < remaining.min(n) {
                length += 1;
            } else {
                debug_assert!(length >= 3, "odd surplus is excluded for n = 2");
                length -= 1;
            }
        }
        let mut pool: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = rand_below(rng, i + 1);
            pool.swap(i, j);
        }
        let cycle = &pool[..length];
        for i in 0..length {
            edges.push((cycle[i], cycle[(i + 1) % length]));
        }
        remaining -= length;
    }
    let g = Digraph::new(n, edges).expect("cycle edges are valid");
    debug_assert!(g.is_eulerian());
    g
}

/// `count` seeded random graphs; the stream depends only on the seed.
pub fn random_family(seed: u64, n_max: usize, m_max: usize, count: usize) -> Vec<Digraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_eulerian(&mut rng, n_max, m_max)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_family_is_eulerian() {
        for (name, g) in named_family() {
            assert!(g.is_eulerian(), "{name} must be Eulerian");
        }
    }

    #[test]
    fn exhaustive_counts_for_two_vertices() {
        // n = 2, m <= 6: the bundles with 1, 2, 3 opposite pairs
        let family = exhaustive_eulerian(2, 6);
        assert_eq!(family.len(), 3);
        for g in &family {
            assert!(g.is_eulerian());
        }
    }

    #[test]
    fn exhaustive_three_vertices() {
        // frozen from the enumeration itself; every member is checked
        // Eulerian and the count is stable
        let family = exhaustive_eulerian(3, 6);
        for g in &family {
            assert!(g.is_eulerian());
            assert!(g.vertex_count() <= 3);
            assert!(g.edge_count() <= 6);
        }
        let three_vertex = family.iter().filter(|g| g.vertex_count() == 3).count();
        assert_eq!(three_vertex, 20);
    }

    #[test]
    fn random_family_is_deterministic_and_eulerian() {
        let a = random_family(7, 5, 9, 20);
        let b = random_family(7, 5, 9, 20);
        assert_eq!(a.len(), 20);
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x, y);
        }
        for g in &a {
            assert!(g.is_eulerian());
            assert!(g.vertex_count() <= 5);
            assert!(g.edge_count() <= 9);
        }
        let c = random_family(8, 5, 9, 20);
        assert_ne!(a, c);
    }
}
