//! Constructors for the named graph families the theorem suite quantifies
//! over.
//!
//! Vertex orderings are part of the contract: paths and cycles are numbered
//! along the walk, Hamming vertices are the lexicographically ordered tuples
//! over `{1..k}`, and Johnson vertices are the lexicographically ordered
//! k-subsets of `{1..n}`. Tests address vertices by these indices.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path requires n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Ok(Graph::new(n, &edges)?.with_name(format!("P_{n}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle requires n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?.with_name(format!("C_{n}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete requires n >= 1".into()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::new(n, &edges)?.with_name(format!("K_{n}")))
}

/// Hamming graph: n-tuples over `{1..k}`, adjacent iff they differ in exactly
/// one coordinate. Order `k^n`, `k^(n-1) * n * (k-1) / 2` edges.
pub fn hamming(n: usize, k: usize) -> Result<Graph> {
    hamming_with(n, k, &Limits::default())
}

pub fn hamming_with(n: usize, k: usize, limits: &Limits) -> Result<Graph> {
    if n < 1 || k < 2 {
        return Err(Error::InvalidParameter(
            "hamming requires n >= 1 and k >= 2".into(),
        ));
    }
    let order = checked_pow(k, n, limits.max_graph_n).ok_or_else(|| {
        Error::SizeLimit(format!(
            "hamming({n},{k}) exceeds the {} vertex cap",
            limits.max_graph_n
        ))
    })?;

    // Tuple (x_1..x_n) with entries in 1..=k sits at index sum (x_i - 1) k^(n-i).
    let mut labels = Vec::with_capacity(order);
    let mut tuple = vec![1usize; n];
    for _ in 0..order {
        labels.push(format!("({})", tuple.iter().join(",")));
        for pos in (0..n).rev() {
            if tuple[pos] < k {
                tuple[pos] += 1;
                break;
            }
            tuple[pos] = 1;
        }
    }

    let mut edges = Vec::new();
    let mut stride = 1;
    for _pos in 0..n {
        // For the coordinate with this stride, connect all value pairs.
        for base in 0..order {
            let digit = base / stride % k;
            if digit == 0 {
                for a in 0..k {
                    for b in a + 1..k {
                        edges.push((base + a * stride, base + b * stride));
                    }
                }
            }
        }
        stride *= k;
    }
    Ok(Graph::new(order, &edges)?
        .with_labels(labels)?
        .with_name(format!("H({n},{k})")))
}

/// Johnson graph: k-subsets of `{1..n}`, adjacent iff the intersection has
/// size `k-1`. Order `C(n,k)`.
pub fn johnson(n: usize, k: usize) -> Result<Graph> {
    johnson_with(n, k, &Limits::default())
}

pub fn johnson_with(n: usize, k: usize, limits: &Limits) -> Result<Graph> {
    if k < 1 || k > n.saturating_sub(1) {
        return Err(Error::InvalidParameter(
            "johnson requires 1 <= k <= n-1".into(),
        ));
    }
    let order = checked_binomial(n, k, limits.max_graph_n).ok_or_else(|| {
        Error::SizeLimit(format!(
            "johnson({n},{k}) exceeds the {} vertex cap",
            limits.max_graph_n
        ))
    })?;

    let subsets: Vec<Vec<usize>> = (1..=n).combinations(k).collect();
    debug_assert_eq!(subsets.len(), order);
    let labels = subsets
        .iter()
        .map(|s| format!("{{{}}}", s.iter().join(",")))
        .collect();

    let mut edges = Vec::new();
    for i in 0..order {
        for j in i + 1..order {
            if intersection_size(&subsets[i], &subsets[j]) == k - 1 {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(order, &edges)?
        .with_labels(labels)?
        .with_name(format!("J({n},{k})")))
}

/// The hypercube `Q_n`, an alias of `hamming(n, 2)`.
pub fn hypercube(n: usize) -> Result<Graph> {
    hamming(n, 2)
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    // Both sorted ascending.
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

fn checked_pow(k: usize, n: usize, cap: usize) -> Option<usize> {
    let mut value = 1usize;
    for _ in 0..n {
        value = value.checked_mul(k)?;
        if value > cap {
            return None;
        }
    }
    Some(value)
}

fn checked_binomial(n: usize, k: usize, cap: usize) -> Option<usize> {
    let k = k.min(n - k);
    let mut value = 1usize;
    for i in 0..k {
        value = value.checked_mul(n - i)?;
        value /= i + 1;
        if value > cap {
            return None;
        }
    }
    Some(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cartesian_product;

    fn same_adjacency(a: &Graph, b: &Graph) -> bool {
        a.n() == b.n() && (0..a.n()).all(|v| a.neighbors(v) == b.neighbors(v))
    }

    #[test]
    fn basic_families() {
        assert!(same_adjacency(&cycle(3).unwrap(), &complete(3).unwrap()));
        assert!(same_adjacency(&path(2).unwrap(), &complete(2).unwrap()));
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.n(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
    }

    #[test]
    fn invalid_parameters() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(hamming(0, 2).is_err());
        assert!(hamming(2, 1).is_err());
        assert!(johnson(4, 0).is_err());
        assert!(johnson(4, 4).is_err());
    }

    #[test]
    fn size_limits() {
        assert!(matches!(hamming(13, 3), Err(Error::SizeLimit(_))));
        assert!(matches!(johnson(40, 20), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn hamming_small_cases() {
        assert!(same_adjacency(&hamming(1, 5).unwrap(), &complete(5).unwrap()));
        let rook = hamming(2, 3).unwrap();
        assert_eq!(rook.n(), 9);
        assert_eq!(rook.edge_count(), 18);
        assert!((0..9).all(|v| rook.degree(v) == 4));
        assert_eq!(rook.label(0), "(1,1)");
        assert_eq!(rook.label(8), "(3,3)");
    }

    #[test]
    fn hypercube_cases() {
        // Q_2 is a 4-cycle (up to relabeling).
        let q2 = hypercube(2).unwrap();
        assert_eq!((q2.n(), q2.edge_count()), (4, 4));
        assert!((0..4).all(|v| q2.degree(v) == 2));
        assert_eq!(q2.distance_matrix().unwrap().diameter(), 2);

        assert!(same_adjacency(&hypercube(1).unwrap(), &complete(2).unwrap()));
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.n(), 8);
        assert_eq!(q3.edge_count(), 12);
    }

    #[test]
    fn hamming_matches_iterated_clique_product() {
        // H(n,k) must equal the n-fold cartesian product of K_k exactly,
        // adjacency and indexing both.
        for (n, k) in [(2, 2), (3, 2), (2, 3), (3, 3), (2, 4)] {
            let h = hamming(n, k).unwrap();
            let kk = complete(k).unwrap();
            let mut product = kk.clone();
            for _ in 1..n {
                product = cartesian_product(&product, &kk);
            }
            assert!(same_adjacency(&h, &product), "H({n},{k})");
        }
    }

    #[test]
    fn hamming_distance_equals_differing_coordinates() {
        let g = hamming(3, 3).unwrap();
        let dm = g.distance_matrix().unwrap();
        let tuples: Vec<Vec<usize>> = (0..g.n())
            .map(|v| {
                let label = g.label(v);
                label[1..label.len() - 1]
                    .split(',')
                    .map(|t| t.parse().unwrap())
                    .collect()
            })
            .collect();
        for u in 0..g.n() {
            for v in 0..g.n() {
                let differing = tuples[u]
                    .iter()
                    .zip(&tuples[v])
                    .filter(|(a, b)| a != b)
                    .count();
                assert_eq!(dm.get(u, v) as usize, differing);
            }
        }
    }

    #[test]
    fn johnson_small_cases() {
        assert!(same_adjacency(&johnson(4, 1).unwrap(), &complete(4).unwrap()));
        let petersen = johnson(5, 2).unwrap();
        assert_eq!(petersen.n(), 10);
        assert_eq!(petersen.edge_count(), 30);
        assert!((0..10).all(|v| petersen.degree(v) == 6));
        let octahedron = johnson(4, 2).unwrap();
        assert_eq!(octahedron.n(), 6);
        assert_eq!(octahedron.edge_count(), 12);
        assert!((0..6).all(|v| octahedron.degree(v) == 4));
        assert_eq!(octahedron.label(0), "{1,2}");
    }

    #[test]
    fn johnson_distance_equals_k_minus_intersection() {
        for (n, k) in [(5, 2), (6, 3), (6, 2)] {
            let g = johnson(n, k).unwrap();
            let dm = g.distance_matrix().unwrap();
            let sets: Vec<Vec<usize>> = (1..=n).combinations(k).collect();
            for u in 0..g.n() {
                for v in 0..g.n() {
                    let expected = k - intersection_size(&sets[u], &sets[v]);
                    assert_eq!(dm.get(u, v) as usize, expected, "J({n},{k}) {u},{v}");
                }
            }
        }
    }
}
