//! Vertex-transitivity detection through automorphism orbits.
//!
//! The orbit partition is computed exactly: for each pair of vertices not yet
//! known to share an orbit, a backtracking search either produces an
//! automorphism mapping one to the other or proves none exists. Pruning is by
//! distance profiles, which every automorphism preserves, so it never changes
//! the answer.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::limits::Limits;
use crate::ratlp::{rational_usize, Rational};
use crate::resolve::ResolutionSystem;

/// Orbit partition of the full automorphism group, with the generators the
/// search found along the way.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    n: usize,
    orbit_id: Vec<usize>,
    orbit_count: usize,
    generators: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Orbit index of `v`; orbits are numbered by first occurrence.
    pub fn orbit_of(&self, v: usize) -> usize {
        self.orbit_id[v]
    }

    pub fn orbit_ids(&self) -> &[usize] {
        &self.orbit_id
    }

    pub fn orbit_count(&self) -> usize {
        self.orbit_count
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_count == 1
    }
}

/// True iff `perm` is an adjacency-preserving bijection of the vertices.
pub fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    let n = g.n();
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in perm {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    // A bijection mapping edges onto edges maps non-edges onto non-edges.
    for u in 0..n {
        let mut image: Vec<usize> = g.neighbors(u).iter().map(|&v| perm[v]).collect();
        image.sort_unstable();
        if image != g.neighbors(perm[u]) {
            return false;
        }
    }
    true
}

pub fn automorphism_orbits(g: &Graph) -> Result<OrbitPartition> {
    automorphism_orbits_with(g, &Limits::default())
}

pub fn automorphism_orbits_with(g: &Graph, limits: &Limits) -> Result<OrbitPartition> {
    let n = g.n();
    if n > limits.max_orbit_n {
        return Err(Error::SizeLimit(format!(
            "n={n} exceeds automorphism search cap {}",
            limits.max_orbit_n
        )));
    }
    let dm = g.distance_matrix()?;

    // Sorted distance rows: a cheap invariant that any automorphism preserves,
    // used both to skip hopeless pairs and to prune the search.
    let profile: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let mut row = dm.row(v).to_vec();
            row.sort_unstable();
            row
        })
        .collect();

    let mut uf = UnionFind::new(n);
    let mut generators = Vec::new();
    'pairs: for u in 0..n {
        for w in u + 1..n {
            if uf.components() == 1 {
                // Already transitive; more generators cannot change orbits.
                break 'pairs;
            }
            if uf.find(u) == uf.find(w) || profile[u] != profile[w] {
                continue;
            }
            if let Some(sigma) = find_automorphism(g, &dm, &profile, u, w) {
                debug_assert!(is_automorphism(g, &sigma));
                for (v, &img) in sigma.iter().enumerate() {
                    uf.union(v, img);
                }
                generators.push(sigma);
            }
        }
    }

    // Number orbits by first occurrence.
    let mut orbit_id = vec![usize::MAX; n];
    let mut orbit_count = 0;
    for v in 0..n {
        let root = uf.find(v);
        if orbit_id[root] == usize::MAX {
            orbit_id[root] = orbit_count;
            orbit_count += 1;
        }
        orbit_id[v] = orbit_id[root];
    }
    Ok(OrbitPartition {
        n,
        orbit_id,
        orbit_count,
        generators,
    })
}

/// Exhaustive backtracking for an automorphism with `sigma(u) = w`.
///
/// Vertices are assigned in BFS order from `u`; a candidate image must match
/// the source's distances to every vertex assigned so far. The distance
/// constraint subsumes adjacency, so a complete assignment is an
/// automorphism.
fn find_automorphism(
    g: &Graph,
    dm: &DistanceMatrix,
    profile: &[Vec<u32>],
    u: usize,
    w: usize,
) -> Option<Vec<usize>> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    {
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([u]);
        seen[u] = true;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    debug_assert_eq!(order.len(), n);

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    mapping[u] = w;
    used[w] = true;
    if extend(g, dm, profile, &order, 1, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    dm: &DistanceMatrix,
    profile: &[Vec<u32>],
    order: &[usize],
    pos: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let n = g.n();
    if pos == n {
        return true;
    }
    let v = order[pos];
    'candidates: for x in 0..n {
        if used[x] || profile[x] != profile[v] {
            continue;
        }
        for &prev in &order[..pos] {
            if dm.get(v, prev) != dm.get(x, mapping[prev]) {
                continue 'candidates;
            }
        }
        mapping[v] = x;
        used[x] = true;
        if extend(g, dm, profile, order, pos + 1, mapping, used) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[x] = false;
    }
    false
}

pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    is_vertex_transitive_with(g, &Limits::default())
}

pub fn is_vertex_transitive_with(g: &Graph, limits: &Limits) -> Result<bool> {
    Ok(automorphism_orbits_with(g, limits)?.is_transitive())
}

/// `|V| / r(G)`, gated on a verified vertex-transitivity check.
pub fn vt_fracdim(g: &Graph) -> Result<Rational> {
    vt_fracdim_with(g, &Limits::default())
}

pub fn vt_fracdim_with(g: &Graph, limits: &Limits) -> Result<Rational> {
    if !is_vertex_transitive_with(g, limits)? {
        return Err(Error::NotVertexTransitive);
    }
    vt_fracdim_asserted(g)
}

/// `|V| / r(G)` with vertex-transitivity asserted by the caller, for
/// generated families (Hamming, Johnson, products of vertex-transitive
/// factors) above the orbit search cap.
pub fn vt_fracdim_asserted(g: &Graph) -> Result<Rational> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter("vt_fracdim requires n >= 2".into()));
    }
    let sys = ResolutionSystem::build(g)?;
    let (r, _) = sys.r_min();
    Ok(rational_usize(g.n(), r))
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }

    fn components(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, hamming, johnson, path};
    use crate::graph::cartesian_product;
    use crate::ratlp::{fracdim, rational};
    use itertools::Itertools;

    /// Brute-force orbit oracle over all n! permutations.
    fn brute_force_orbits(g: &Graph) -> Vec<usize> {
        let n = g.n();
        let mut uf = UnionFind::new(n);
        for perm in (0..n).permutations(n) {
            if is_automorphism(g, &perm) {
                for (v, &img) in perm.iter().enumerate() {
                    uf.union(v, img);
                }
            }
        }
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        for v in 0..n {
            let root = uf.find(v);
            if ids[root] == usize::MAX {
                ids[root] = next;
                next += 1;
            }
            ids[v] = ids[root];
        }
        ids
    }

    #[test]
    fn orbit_examples() {
        for n in 3..=9 {
            assert_eq!(automorphism_orbits(&cycle(n).unwrap()).unwrap().orbit_count(), 1);
        }
        let p4 = automorphism_orbits(&path(4).unwrap()).unwrap();
        assert_eq!(p4.orbit_count(), 2);
        assert_eq!(p4.orbit_ids(), &[0, 1, 1, 0]);

        let k2c5 = cartesian_product(&complete(2).unwrap(), &cycle(5).unwrap());
        assert!(automorphism_orbits(&k2c5).unwrap().is_transitive());
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_vertex_transitive(&hamming(2, 3).unwrap()).unwrap());
        assert!(is_vertex_transitive(&johnson(5, 2).unwrap()).unwrap());
        assert!(!is_vertex_transitive(&path(3).unwrap()).unwrap());
    }

    #[test]
    fn generators_are_genuine_automorphisms() {
        for g in [
            cycle(8).unwrap(),
            path(5).unwrap(),
            johnson(4, 2).unwrap(),
            hamming(2, 3).unwrap(),
        ] {
            let orbits = automorphism_orbits(&g).unwrap();
            for generator in orbits.generators() {
                assert!(is_automorphism(&g, generator));
            }
        }
    }

    #[test]
    fn orbits_match_brute_force_on_small_graphs() {
        let graphs = [
            path(5).unwrap(),
            cycle(6).unwrap(),
            complete(4).unwrap(),
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap(),
            Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap(),
            Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap(),
        ];
        for g in graphs {
            assert_eq!(
                automorphism_orbits(&g).unwrap().orbit_ids(),
                brute_force_orbits(&g).as_slice(),
                "{g:?}"
            );
        }
    }

    #[test]
    fn vt_fracdim_examples() {
        assert_eq!(vt_fracdim(&cycle(7).unwrap()).unwrap(), rational(7, 6));
        let k2c5 = cartesian_product(&complete(2).unwrap(), &cycle(5).unwrap());
        assert_eq!(vt_fracdim(&k2c5).unwrap(), rational(5, 3));
        assert_eq!(vt_fracdim(&complete(6).unwrap()).unwrap(), rational(3, 1));
    }

    #[test]
    fn vt_gate_rejects_non_transitive_graphs() {
        assert_eq!(
            vt_fracdim(&path(3).unwrap()).unwrap_err(),
            Error::NotVertexTransitive
        );
    }

    #[test]
    fn vt_formula_agrees_with_lp_oracle() {
        let k2c7 = cartesian_product(&complete(2).unwrap(), &cycle(7).unwrap());
        for g in [
            cycle(6).unwrap(),
            cycle(9).unwrap(),
            complete(5).unwrap(),
            johnson(5, 2).unwrap(),
            hamming(2, 3).unwrap(),
            hamming(3, 2).unwrap(),
            k2c7,
        ] {
            assert!(is_vertex_transitive(&g).unwrap(), "{g:?}");
            assert_eq!(vt_fracdim(&g).unwrap(), fracdim(&g).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn degree_regularity_holds_on_transitive_graphs() {
        for g in [cycle(10).unwrap(), hamming(2, 4).unwrap(), johnson(6, 2).unwrap()] {
            assert!(is_vertex_transitive(&g).unwrap());
            let d0 = g.degree(0);
            assert!((0..g.n()).all(|v| g.degree(v) == d0));
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        let mut limits = Limits::default();
        limits.max_orbit_n = 8;
        assert!(matches!(
            automorphism_orbits_with(&cycle(9).unwrap(), &limits),
            Err(Error::SizeLimit(_))
        ));
    }
}
