//! Distance-regularity detection and intersection-number closed forms.
//!
//! A graph of diameter `d` is distance-regular when, for all
//! `0 <= h,i,j <= d`, the number `p[h][i][j]` of vertices at distance `i`
//! from `x` and `j` from `y` is the same for every pair `x, y` at distance
//! `h`. For a vertex-transitive distance-regular graph the fractional metric
//! dimension is `|V| / (|V| - max_h sum_i p[h][i][i])`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ratlp::{rational_usize, Rational};

/// The full table `p[h][i][j]` of a distance-regular graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionNumbers {
    diameter: usize,
    p: Vec<Vec<Vec<usize>>>,
}

impl IntersectionNumbers {
    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn get(&self, h: usize, i: usize, j: usize) -> usize {
        self.p[h][i][j]
    }

    /// Sphere size `k_i = p[0][i][i]`.
    pub fn sphere_size(&self, i: usize) -> usize {
        self.p[0][i][i]
    }

    /// `sum_{i=1..d} p[h][i][i]`: the number of vertices equidistant from
    /// both ends of a distance-`h` pair.
    pub fn pii_sum(&self, h: usize) -> Result<usize> {
        if h < 1 || h > self.diameter {
            return Err(Error::IndexOutOfRange(format!(
                "h={h} not in 1..={}",
                self.diameter
            )));
        }
        Ok((1..=self.diameter).map(|i| self.p[h][i][i]).sum())
    }

    /// Maximum of [`pii_sum`](Self::pii_sum) over `h = 1..=d`.
    pub fn max_pii_sum(&self) -> usize {
        (1..=self.diameter)
            .map(|h| self.pii_sum(h).expect("h in range"))
            .max()
            .unwrap_or(0)
    }

    /// The intersection array `{b_0,..,b_{d-1}; c_1,..,c_d}`.
    pub fn intersection_array(&self) -> (Vec<usize>, Vec<usize>) {
        let b = (0..self.diameter).map(|i| self.p[i][1][i + 1]).collect();
        let c = (1..=self.diameter).map(|i| self.p[i][1][i - 1]).collect();
        (b, c)
    }
}

/// Returns the intersection numbers when the counts are constant over all
/// ordered pairs at each distance, `None` otherwise.
pub fn is_distance_regular(g: &Graph) -> Result<Option<IntersectionNumbers>> {
    let dm = g.distance_matrix()?;
    let n = g.n();
    let d = dm.diameter() as usize;
    let mut table: Vec<Option<Vec<Vec<usize>>>> = vec![None; d + 1];
    for x in 0..n {
        for y in 0..n {
            let h = dm.get(x, y) as usize;
            let mut counts = vec![vec![0usize; d + 1]; d + 1];
            let (rx, ry) = (dm.row(x), dm.row(y));
            for z in 0..n {
                counts[rx[z] as usize][ry[z] as usize] += 1;
            }
            match &table[h] {
                None => table[h] = Some(counts),
                Some(expected) => {
                    if *expected != counts {
                        return Ok(None);
                    }
                }
            }
        }
    }
    let p: Vec<Vec<Vec<usize>>> = table
        .into_iter()
        .map(|t| t.expect("every distance 0..=d occurs in a connected graph"))
        .collect();
    Ok(Some(IntersectionNumbers { diameter: d, p }))
}

/// `|V| / (|V| - max_h sum_i p[h][i][i])`; valid when the caller has
/// established vertex-transitivity.
pub fn drg_fracdim(numbers: &IntersectionNumbers, order: usize) -> Result<Rational> {
    let max = numbers.max_pii_sum();
    if max >= order {
        return Err(Error::DegenerateGraph(format!(
            "equidistant count {max} >= order {order}"
        )));
    }
    Ok(rational_usize(order, order - max))
}

/// Upper bound `dim(G) <= max_h sum_i p[h][i][i] + 1` for distance-regular
/// graphs; tight exactly for complete graphs and odd cycles.
pub fn drg_dim_bound(numbers: &IntersectionNumbers) -> usize {
    numbers.max_pii_sum() + 1
}

/// Binomial coefficient by the Pascal recurrence, exact and overflow-free.
/// Out-of-range `j` (negative or above `m`) yields zero.
pub fn binomial(m: usize, j: i64) -> BigUint {
    if j < 0 || j as usize > m {
        return BigUint::zero();
    }
    let j = j as usize;
    let mut row = vec![BigUint::zero(); m + 1];
    row[0] = BigUint::one();
    for i in 1..=m {
        for t in (1..=i.min(j)).rev() {
            let prev = row[t - 1].clone();
            row[t] += prev;
        }
    }
    row[j].clone()
}

/// Closed form for the equidistant count of a Hamming graph `H(n,k)` at
/// distance `h`:
/// `sum_s C(h,2s) C(2s,s) (k-2)^(h-2s) k^(n-h)`.
pub fn hamming_pii_sum(n: usize, k: usize, h: usize) -> Result<BigUint> {
    if n < 1 || k < 2 || h < 1 || h > n {
        return Err(Error::InvalidParameter(format!(
            "hamming_pii_sum requires 1 <= h <= n and k >= 2, got ({n},{k},{h})"
        )));
    }
    let k_minus_2 = BigUint::from(k - 2);
    let k_big = BigUint::from(k);
    let mut sum = BigUint::zero();
    for s in 0..=h / 2 {
        let term = binomial(h, 2 * s as i64)
            * binomial(2 * s, s as i64)
            * k_minus_2.pow((h - 2 * s) as u32)
            * k_big.pow((n - h) as u32);
        sum += term;
    }
    Ok(sum)
}

/// Closed form for the equidistant count of a Johnson graph `J(n,k)` at
/// distance `h`: `sum_s C(h,s)^2 C(n-2h, k-2s)`.
pub fn johnson_pii_sum(n: usize, k: usize, h: usize) -> Result<BigUint> {
    if k < 1 || k + 1 > n || h < 1 || h > k || 2 * h > n {
        return Err(Error::InvalidParameter(format!(
            "johnson_pii_sum requires 1 <= h <= k <= n-1 and 2h <= n, got ({n},{k},{h})"
        )));
    }
    let mut sum = BigUint::zero();
    for s in 0..=h {
        let c = binomial(h, s as i64);
        sum += &c * &c * binomial(n - 2 * h, k as i64 - 2 * s as i64);
    }
    Ok(sum)
}

/// `C(m,n+1) + C(m,n-1) >= C(m,n)`, a consequence of the unimodality of
/// binomial coefficients.
pub fn binomial_neighbor_bound_holds(m: usize, n: i64) -> bool {
    binomial(m, n + 1) + binomial(m, n - 1) >= binomial(m, n)
}
