//! R-sets, resolving sets, and exact metric dimension.
//!
//! For distinct vertices `x, y`, `R{x,y}` is the set of vertices `z` with
//! `d(x,z) != d(y,z)`. A resolving set is a vertex subset meeting every
//! `R{x,y}`; the metric dimension is the minimum size of one.

use std::collections::HashMap;

use itertools::Itertools;

use crate::bitset::{drop_strict_supersets, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::limits::Limits;

/// `R{x,y} = { z : d(x,z) != d(y,z) }`. Always contains `x` and `y`.
pub fn r_set(dm: &DistanceMatrix, x: usize, y: usize) -> Result<VertexSet> {
    if x == y {
        return Err(Error::EqualVertices);
    }
    let n = dm.n();
    let mut set = VertexSet::new(n);
    let (rx, ry) = (dm.row(x), dm.row(y));
    for z in 0..n {
        if rx[z] != ry[z] {
            set.insert(z);
        }
    }
    Ok(set)
}

/// All `R{x,y}` of a connected graph, with pairs in lexicographic order and a
/// deduplicated table of the distinct sets.
pub struct ResolutionSystem {
    n: usize,
    pairs: Vec<(usize, usize)>,
    rsets: Vec<VertexSet>,
    distinct: Vec<VertexSet>,
    multiplicity: Vec<usize>,
}

impl ResolutionSystem {
    pub fn build(g: &Graph) -> Result<ResolutionSystem> {
        let dm = g.distance_matrix()?;
        Ok(Self::from_distance_matrix(&dm))
    }

    pub fn from_distance_matrix(dm: &DistanceMatrix) -> ResolutionSystem {
        let n = dm.n();
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        let mut rsets = Vec::with_capacity(pairs.capacity());
        let mut distinct: Vec<VertexSet> = Vec::new();
        let mut multiplicity = Vec::new();
        let mut index: HashMap<VertexSet, usize> = HashMap::new();
        for x in 0..n {
            for y in x + 1..n {
                let set = r_set(dm, x, y).expect("x < y");
                match index.get(&set) {
                    Some(&i) => multiplicity[i] += 1,
                    None => {
                        index.insert(set.clone(), distinct.len());
                        distinct.push(set.clone());
                        multiplicity.push(1);
                    }
                }
                pairs.push((x, y));
                rsets.push(set);
            }
        }
        ResolutionSystem {
            n,
            pairs,
            rsets,
            distinct,
            multiplicity,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn rsets(&self) -> &[VertexSet] {
        &self.rsets
    }

    /// Distinct R-sets in first-occurrence order.
    pub fn distinct_rsets(&self) -> &[VertexSet] {
        &self.distinct
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicity
    }

    pub fn r_set_of(&self, x: usize, y: usize) -> Result<&VertexSet> {
        if x == y {
            return Err(Error::EqualVertices);
        }
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        // Pair (a, b) sits at a*(2n-a-1)/2 + (b-a-1) in lexicographic order.
        let idx = a * (2 * self.n - a - 1) / 2 + (b - a - 1);
        Ok(&self.rsets[idx])
    }

    /// Minimum `|R{x,y}|` with the lexicographically least witnessing pair.
    pub fn r_min(&self) -> (usize, (usize, usize)) {
        let mut best = usize::MAX;
        let mut witness = (0, 0);
        for (pair, set) in self.pairs.iter().zip(&self.rsets) {
            let size = set.len();
            if size < best {
                best = size;
                witness = *pair;
            }
        }
        (best, witness)
    }

    /// True iff `w` intersects every R-set.
    pub fn is_resolving_set(&self, w: &VertexSet) -> bool {
        self.distinct.iter().all(|set| set.intersects(w))
    }
}

/// Convenience form of [`ResolutionSystem::r_min`] for a graph.
pub fn r_min(g: &Graph) -> Result<(usize, (usize, usize))> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter("r_min requires n >= 2".into()));
    }
    Ok(ResolutionSystem::build(g)?.r_min())
}

/// Exact metric dimension with a minimum resolving set as witness.
///
/// The search is a branch and bound over the hitting-set instance whose
/// ground sets are the subset-minimal distinct R-sets. Candidate sets are
/// explored in lexicographic order with an iteratively deepened size budget,
/// so the witness is the lexicographically least among all minimum resolving
/// sets.
pub fn metric_dimension(g: &Graph) -> Result<(usize, Vec<usize>)> {
    metric_dimension_with(g, &Limits::default())
}

pub fn metric_dimension_with(g: &Graph, limits: &Limits) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "metric dimension requires n >= 2".into(),
        ));
    }
    if n > limits.max_dim_n {
        return Err(Error::SizeLimit(format!(
            "n={n} exceeds metric dimension cap {}",
            limits.max_dim_n
        )));
    }
    let sys = ResolutionSystem::build(g)?;
    let rows = drop_strict_supersets(&dedup_preserving_order(sys.distinct_rsets()));
    let num_rows = rows.len();

    // cover[v] = rows hit by vertex v, as a bitset over row indices.
    let cover: Vec<VertexSet> = (0..n)
        .map(|v| {
            VertexSet::from_indices(
                num_rows,
                rows.iter()
                    .enumerate()
                    .filter(|(_, row)| row.contains(v))
                    .map(|(j, _)| j),
            )
        })
        .collect();

    let upper = greedy_cover(&cover, num_rows);
    debug_assert!(!upper.is_empty() || num_rows == 0);

    let max_single = cover.iter().map(VertexSet::len).max().unwrap_or(0);
    let lower = if max_single == 0 {
        0
    } else {
        num_rows.div_ceil(max_single)
    };

    for budget in lower..=upper.len() {
        let mut chosen = Vec::with_capacity(budget);
        let uncovered = VertexSet::full(num_rows);
        if let Some(witness) = search(&cover, &uncovered, 0, budget, &mut chosen) {
            return Ok((witness.len(), witness));
        }
    }
    // The greedy witness guarantees the loop returns at its final iteration.
    unreachable!("budget reached the greedy upper bound without a cover");
}

fn dedup_preserving_order(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    for s in sets {
        if seen.insert(s.clone(), ()).is_none() {
            out.push(s.clone());
        }
    }
    out
}

fn greedy_cover(cover: &[VertexSet], num_rows: usize) -> Vec<usize> {
    let mut uncovered = VertexSet::full(num_rows);
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let mut best = 0;
        let mut best_gain = 0;
        for (v, c) in cover.iter().enumerate() {
            let mut gain_set = c.clone();
            gain_set.intersect_assign(&uncovered);
            let gain = gain_set.len();
            if gain > best_gain {
                best_gain = gain;
                best = v;
            }
        }
        debug_assert!(best_gain > 0, "some vertex must hit every nonempty row");
        chosen.push(best);
        uncovered.subtract_assign(&cover[best]);
    }
    chosen.sort_unstable();
    chosen
}

fn search(
    cover: &[VertexSet],
    uncovered: &VertexSet,
    start: usize,
    budget: usize,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if uncovered.is_empty() {
        return Some(chosen.clone());
    }
    if budget == 0 {
        return None;
    }
    let n = cover.len();
    // Bound: even taking the best remaining vertex `budget` times cannot
    // close the gap.
    let remaining = uncovered.len();
    let best_gain = (start..n)
        .map(|v| {
            let mut g = cover[v].clone();
            g.intersect_assign(uncovered);
            g.len()
        })
        .max()
        .unwrap_or(0);
    if budget * best_gain < remaining {
        return None;
    }
    for v in start..=(n - budget) {
        let mut next = uncovered.clone();
        next.subtract_assign(&cover[v]);
        if next.len() == remaining {
            // v makes no progress here; a minimum cover never needs it.
            continue;
        }
        chosen.push(v);
        if let Some(found) = search(cover, &next, v + 1, budget - 1, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Subset property behind the dimension/fraction inequality: every vertex
/// subset of size `n - dim(G) + 1` fully contains some `R{x,y}`.
///
/// The check is exhaustive over subsets, hence capped; beyond the cap it
/// errors rather than sampling because the claim is universally quantified.
pub fn check_lemma_3_1(g: &Graph) -> Result<bool> {
    check_lemma_3_1_with(g, &Limits::default())
}

pub fn check_lemma_3_1_with(g: &Graph, limits: &Limits) -> Result<bool> {
    let n = g.n();
    if n > limits.max_subset_check_n {
        return Err(Error::SizeLimit(format!(
            "n={n} exceeds exhaustive subset cap {}",
            limits.max_subset_check_n
        )));
    }
    let (dim, _) = metric_dimension_with(g, limits)?;
    let subset_size = n - dim + 1;
    let sys = ResolutionSystem::build(g)?;
    let minimal = drop_strict_supersets(&dedup_preserving_order(sys.distinct_rsets()));
    for subset in (0..n).combinations(subset_size) {
        let a = VertexSet::from_indices(n, subset);
        if !minimal.iter().any(|r| r.is_subset(&a)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the complement-bijection hypothesis: every `V \ R{u,v}` has size
/// exactly 2 and the map `{u,v} -> V \ R{u,v}` is a bijection on 2-subsets.
/// Returns `(hypothesis_holds, graph is K_4)`.
pub fn check_lemma_3_3(g: &Graph) -> Result<(bool, bool)> {
    let n = g.n();
    let is_k4 = n == 4 && g.edge_count() == 6;
    let sys = ResolutionSystem::build(g)?;
    let mut images = Vec::with_capacity(sys.pairs().len());
    for set in sys.rsets() {
        let complement = set.complement();
        if complement.len() != 2 {
            return Ok((false, is_k4));
        }
        images.push(complement.to_vec());
    }
    // Domain and codomain are both the 2-subsets of V, so injectivity is
    // bijectivity.
    images.sort_unstable();
    let distinct = images.windows(2).all(|w| w[0] != w[1]);
    Ok((distinct, is_k4))
}

/// All unordered pairs `(u, u')` with identical distances to every other
/// vertex.
pub fn find_twins(dm: &DistanceMatrix) -> Vec<(usize, usize)> {
    let n = dm.n();
    let mut twins = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let equal = (0..n)
                .filter(|&w| w != u && w != v)
                .all(|w| dm.get(u, w) == dm.get(v, w));
            if equal {
                twins.push((u, v));
            }
        }
    }
    twins
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, johnson, path};

    fn rset_sizes(g: &Graph) -> Vec<usize> {
        let sys = ResolutionSystem::build(g).unwrap();
        sys.rsets().iter().map(VertexSet::len).collect()
    }

    /// Exhaustive reference for the metric dimension: smallest subset (in
    /// (size, lexicographic) order) resolving all pairs.
    fn brute_force_dimension(g: &Graph) -> (usize, Vec<usize>) {
        let n = g.n();
        let sys = ResolutionSystem::build(g).unwrap();
        for size in 1..=n {
            for subset in (0..n).combinations(size) {
                let w = VertexSet::from_indices(n, subset.iter().copied());
                if sys.is_resolving_set(&w) {
                    return (size, subset);
                }
            }
        }
        unreachable!("V itself resolves");
    }

    #[test]
    fn r_set_small_cases() {
        let k5 = complete(5).unwrap();
        let dm = k5.distance_matrix().unwrap();
        for x in 0..5 {
            for y in x + 1..5 {
                assert_eq!(r_set(&dm, x, y).unwrap().to_vec(), vec![x, y]);
            }
        }

        let c4 = cycle(4).unwrap();
        let dm = c4.distance_matrix().unwrap();
        assert_eq!(r_set(&dm, 0, 2).unwrap().len(), 2);

        let c6 = cycle(6).unwrap();
        let dm = c6.distance_matrix().unwrap();
        assert_eq!(r_set(&dm, 0, 2).unwrap().len(), 4);

        assert_eq!(r_set(&dm, 3, 3).unwrap_err(), Error::EqualVertices);
    }

    #[test]
    fn r_set_contains_its_pair() {
        for g in [cycle(7).unwrap(), path(6).unwrap(), johnson(5, 2).unwrap()] {
            let sys = ResolutionSystem::build(&g).unwrap();
            for (&(x, y), set) in sys.pairs().iter().zip(sys.rsets()) {
                assert!(set.contains(x) && set.contains(y));
                assert!(set.len() >= 2);
            }
        }
    }

    #[test]
    fn resolution_system_shapes() {
        let k3 = complete(3).unwrap();
        let sys = ResolutionSystem::build(&k3).unwrap();
        assert_eq!(sys.pairs().len(), 3);
        assert_eq!(sys.distinct_rsets().len(), 3);
        assert!(sys.rsets().iter().all(|s| s.len() == 2));

        let p3 = path(3).unwrap();
        let sys = ResolutionSystem::build(&p3).unwrap();
        assert_eq!(sys.pairs().len(), 3);
        assert_eq!(sys.r_set_of(0, 2).unwrap().to_vec(), vec![0, 2]);

        let c5 = cycle(5).unwrap();
        assert!(rset_sizes(&c5).iter().all(|&s| s == 4));
        let sys = ResolutionSystem::build(&c5).unwrap();
        assert_eq!(sys.pairs().len(), 10);
        assert!(sys.distinct_rsets().len() < 10);
        assert_eq!(
            sys.multiplicities().iter().sum::<usize>(),
            sys.pairs().len()
        );
    }

    #[test]
    fn r_min_examples() {
        assert_eq!(r_min(&complete(6).unwrap()).unwrap(), (2, (0, 1)));
        assert_eq!(r_min(&cycle(7).unwrap()).unwrap().0, 6);
        let k2c5 = crate::graph::cartesian_product(
            &complete(2).unwrap(),
            &cycle(5).unwrap(),
        );
        assert_eq!(r_min(&k2c5).unwrap().0, 6);
    }

    #[test]
    fn resolving_set_checks() {
        let p5 = path(5).unwrap();
        let sys = ResolutionSystem::build(&p5).unwrap();
        assert!(sys.is_resolving_set(&VertexSet::from_indices(5, [0])));
        assert!(sys.is_resolving_set(&VertexSet::from_indices(5, [4])));

        let k4 = complete(4).unwrap();
        let sys = ResolutionSystem::build(&k4).unwrap();
        for subset in (0..4).combinations(2) {
            assert!(!sys.is_resolving_set(&VertexSet::from_indices(4, subset)));
        }
        assert!(sys.is_resolving_set(&VertexSet::full(4)));
    }

    #[test]
    fn dimension_examples() {
        for n in 2..=7 {
            assert_eq!(metric_dimension(&path(n).unwrap()).unwrap(), (1, vec![0]));
        }
        for n in 2..=7 {
            let (dim, witness) = metric_dimension(&complete(n).unwrap()).unwrap();
            assert_eq!(dim, n - 1);
            assert_eq!(witness, (0..n - 1).collect::<Vec<_>>());
        }
        let petersen = johnson(5, 2).unwrap();
        let (dim, witness) = metric_dimension(&petersen).unwrap();
        assert_eq!(dim, 3);
        let sys = ResolutionSystem::build(&petersen).unwrap();
        assert!(sys.is_resolving_set(&VertexSet::from_indices(10, witness.iter().copied())));
        // No 2-subset resolves the Petersen graph.
        for subset in (0..10).combinations(2) {
            assert!(!sys.is_resolving_set(&VertexSet::from_indices(10, subset)));
        }
    }

    #[test]
    fn dimension_matches_brute_force_small() {
        for g in [
            path(5).unwrap(),
            cycle(5).unwrap(),
            cycle(6).unwrap(),
            complete(5).unwrap(),
            johnson(4, 2).unwrap(),
            Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap(),
            Graph::new(5, &[(0, 2), (1, 2), (2, 3), (3, 4), (0, 1)]).unwrap(),
        ] {
            let expected = brute_force_dimension(&g);
            assert_eq!(metric_dimension(&g).unwrap(), expected, "{g:?}");
        }
    }

    #[test]
    fn dimension_respects_cap() {
        let g = cycle(70).unwrap();
        assert!(matches!(metric_dimension(&g), Err(Error::SizeLimit(_))));
        let mut limits = Limits::default();
        limits.max_dim_n = 70;
        assert_eq!(metric_dimension_with(&g, &limits).unwrap().0, 2);
    }

    #[test]
    fn lemma_3_1_holds_on_samples() {
        for g in [complete(4).unwrap(), cycle(5).unwrap(), path(5).unwrap()] {
            assert!(check_lemma_3_1(&g).unwrap());
        }
        assert!(matches!(
            check_lemma_3_1(&cycle(13).unwrap()),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn lemma_3_3_examples() {
        assert_eq!(check_lemma_3_3(&complete(4).unwrap()).unwrap(), (true, true));
        assert_eq!(check_lemma_3_3(&cycle(5).unwrap()).unwrap(), (false, false));
        assert_eq!(check_lemma_3_3(&cycle(6).unwrap()).unwrap(), (false, false));
    }

    #[test]
    fn twins_examples() {
        let k4 = complete(4).unwrap();
        assert_eq!(find_twins(&k4.distance_matrix().unwrap()).len(), 6);

        let p4 = path(4).unwrap();
        assert!(find_twins(&p4.distance_matrix().unwrap()).is_empty());

        // K_{2,3}: parts {0,1} and {2,3,4}.
        let k23 = Graph::new(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        let twins = find_twins(&k23.distance_matrix().unwrap());
        assert_eq!(twins, vec![(0, 1), (2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn twin_pairs_have_minimal_r_sets() {
        let k23 = Graph::new(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        let dm = k23.distance_matrix().unwrap();
        let sys = ResolutionSystem::from_distance_matrix(&dm);
        for (u, v) in find_twins(&dm) {
            assert_eq!(sys.r_set_of(u, v).unwrap().to_vec(), vec![u, v]);
        }
    }
}
