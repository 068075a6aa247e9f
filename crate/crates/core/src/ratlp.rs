//! Exact rational arithmetic and the covering-LP oracle for the fractional
//! metric dimension.
//!
//! The fractional metric dimension is the optimum of
//! `min 1'f  s.t.  f(R{x,y}) >= 1 for all pairs,  f >= 0`,
//! a covering LP with a 0/1 constraint matrix. Everything here is exact
//! rational arithmetic; no floating point and no tolerances anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bitset::{drop_strict_supersets, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::resolve::ResolutionSystem;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rational_usize(numer: usize, denom: usize) -> Rational {
    assert!(denom != 0, "zero denominator");
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Serializes as `"p/q"` in lowest terms; integral values keep the
/// denominator (`"2/1"`) so downstream parsing has a single rule.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_from_str(text: &str) -> Result<Rational> {
    let (p, q) = text
        .split_once('/')
        .ok_or_else(|| Error::InvalidParameter(format!("expected p/q, got {text:?}")))?;
    let p: BigInt = p
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad numerator in {text:?}")))?;
    let q: BigInt = q
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad denominator in {text:?}")))?;
    if q.is_zero() {
        return Err(Error::InvalidParameter("zero denominator".into()));
    }
    Ok(BigRational::new(p, q))
}

/// The covering LP `min 1'f : sum of f over each row >= 1, f >= 0`.
///
/// Rows are deduplicated R-sets; rows that strictly contain another row are
/// dropped since their constraints are implied.
#[derive(Clone, Debug)]
pub struct CoveringLp {
    num_vars: usize,
    rows: Vec<VertexSet>,
}

impl CoveringLp {
    pub fn new(num_vars: usize, rows: Vec<VertexSet>) -> Result<CoveringLp> {
        if rows.is_empty() {
            return Err(Error::MalformedLp("no rows".into()));
        }
        for row in &rows {
            if row.nbits() != num_vars {
                return Err(Error::MalformedLp("row width mismatch".into()));
            }
            if row.is_empty() {
                return Err(Error::MalformedLp("empty row".into()));
            }
        }
        Ok(CoveringLp { num_vars, rows })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }
}

/// Certified optimum of a covering LP.
///
/// `primal` is a feasible resolving function with entries in `[0,1]`, `dual`
/// a feasible packing vector, and the two objective values agree exactly, so
/// the pair proves optimality with no trust in the solver.
#[derive(Clone, Debug)]
pub struct LpSolution {
    pub value: Rational,
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
}

/// One row per distinct R-set, with dominated (superset) rows dropped.
pub fn build_fracdim_lp(sys: &ResolutionSystem) -> CoveringLp {
    let rows = drop_strict_supersets(sys.distinct_rsets());
    CoveringLp {
        num_vars: sys.n(),
        rows,
    }
}

/// Exact primal simplex.
///
/// The covering LP is solved through its packing dual
/// `max 1'y : A'y <= 1, y >= 0`, whose all-slack basis is feasible, so no
/// phase-1 is needed. At optimality the dual's basic solution is the packing
/// certificate and the reduced costs of the slack columns are the covering
/// optimum.
///
/// Under exact arithmetic the only termination risk is cycling at the many
/// degenerate vertices a covering LP has. The leaving row is therefore chosen
/// by the lexicographic ratio test over the slack block (the rows of the
/// basis inverse, which are independent, so ties always break): no basis ever
/// repeats and the method is finite with any entering rule. Entering uses
/// Dantzig's most-negative-reduced-cost rule, which needs far fewer pivots
/// here than least-index selection.
pub fn simplex_solve(lp: &CoveringLp) -> Result<LpSolution> {
    simplex_solve_with(lp, &Limits::default())
}

pub fn simplex_solve_with(lp: &CoveringLp, limits: &Limits) -> Result<LpSolution> {
    let m = lp.rows.len();
    if m == 0 {
        return Err(Error::MalformedLp("no rows".into()));
    }
    if m > limits.max_lp_rows {
        return Err(Error::SizeLimit(format!(
            "{m} LP rows exceed cap {}",
            limits.max_lp_rows
        )));
    }
    for row in &lp.rows {
        if row.is_empty() {
            return Err(Error::MalformedLp("empty row".into()));
        }
    }
    let n = lp.num_vars;
    if m <= (2 * n).max(64) {
        return solve_full(lp);
    }

    // Row generation: solve over an active subset of rows and add violated
    // rows until the subproblem optimum is feasible for every row. The
    // subproblem is a relaxation, so a fully feasible subproblem optimum is
    // the optimum, and its dual extends by zeros to a dual certificate of the
    // full LP. Each round adds at least one row, so the loop is finite.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&j| (lp.rows[j].len(), j));
    let mut active: Vec<usize> = order[..2 * n].to_vec();
    active.sort_unstable();
    let mut in_active = vec![false; m];
    for &j in &active {
        in_active[j] = true;
    }
    loop {
        let sub = CoveringLp {
            num_vars: n,
            rows: active.iter().map(|&j| lp.rows[j].clone()).collect(),
        };
        let sub_solution = solve_full(&sub)?;
        // Most violated rows first, ties by index, at most n per round.
        let one = <Rational as One>::one();
        let mut violated: Vec<(Rational, usize)> = Vec::new();
        for (j, row) in lp.rows.iter().enumerate() {
            if in_active[j] {
                continue;
            }
            let mut sum = <Rational as Zero>::zero();
            for v in row.iter() {
                sum += &sub_solution.primal[v];
            }
            if sum < one {
                violated.push((sum, j));
            }
        }
        if violated.is_empty() {
            let mut dual = vec![<Rational as Zero>::zero(); m];
            for (y, &j) in sub_solution.dual.into_iter().zip(&active) {
                dual[j] = y;
            }
            return Ok(LpSolution {
                value: sub_solution.value,
                primal: sub_solution.primal,
                dual,
            });
        }
        violated.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        for (_, j) in violated.into_iter().take(n) {
            in_active[j] = true;
            active.push(j);
        }
        active.sort_unstable();
    }
}

/// Dense tableau solve of the whole LP, machine-word rationals first.
///
/// Any overflow of the checked fast path restarts the solve with
/// arbitrary-precision entries, so exactness never depends on it.
fn solve_full(lp: &CoveringLp) -> Result<LpSolution> {
    match solve_tableau::<Rat64>(lp)? {
        Some(solution) => Ok(solution),
        None => Ok(solve_tableau::<Rational>(lp)?
            .expect("arbitrary-precision tableau arithmetic cannot overflow")),
    }
}

/// Tableau entry arithmetic. Checked operations return `None` on overflow,
/// which aborts the fast path; comparisons must always be exact.
trait Scalar: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn minus_one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn checked_div(&self, other: &Self) -> Option<Self>;
    /// Exact total-order comparison; must not overflow.
    fn less(&self, other: &Self) -> bool;
    fn to_rational(&self) -> Rational;
}

/// Reduced fraction with word-sized components; all intermediates fit i128
/// because `|numer|` and `denom` stay below `2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Rat64 {
    numer: i64,
    denom: i64,
}

impl Rat64 {
    fn reduce(numer: i128, denom: i128) -> Option<Rat64> {
        debug_assert!(denom != 0);
        let (mut numer, mut denom) = if denom < 0 { (-numer, -denom) } else { (numer, denom) };
        let g = gcd_u128(numer.unsigned_abs(), denom as u128);
        if g > 1 {
            numer /= g as i128;
            denom /= g as i128;
        }
        if numer.unsigned_abs() > i64::MAX as u128 || denom > i64::MAX as i128 {
            return None;
        }
        Some(Rat64 {
            numer: numer as i64,
            denom: denom as i64,
        })
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Scalar for Rat64 {
    fn zero() -> Self {
        Rat64 { numer: 0, denom: 1 }
    }
    fn one() -> Self {
        Rat64 { numer: 1, denom: 1 }
    }
    fn minus_one() -> Self {
        Rat64 { numer: -1, denom: 1 }
    }
    fn is_zero(&self) -> bool {
        self.numer == 0
    }
    fn is_one(&self) -> bool {
        self.numer == 1 && self.denom == 1
    }
    fn is_negative(&self) -> bool {
        self.numer < 0
    }
    fn is_positive(&self) -> bool {
        self.numer > 0
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Rat64::reduce(
            self.numer as i128 * other.numer as i128,
            self.denom as i128 * other.denom as i128,
        )
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        let lhs = self.numer as i128 * other.denom as i128;
        let rhs = other.numer as i128 * self.denom as i128;
        Rat64::reduce(lhs.checked_sub(rhs)?, self.denom as i128 * other.denom as i128)
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        debug_assert!(other.numer != 0);
        Rat64::reduce(
            self.numer as i128 * other.denom as i128,
            self.denom as i128 * other.numer as i128,
        )
    }
    fn less(&self, other: &Self) -> bool {
        // Cross products stay below 2^126.
        (self.numer as i128) * (other.denom as i128)
            < (other.numer as i128) * (self.denom as i128)
    }
    fn to_rational(&self) -> Rational {
        BigRational::new(BigInt::from(self.numer), BigInt::from(self.denom))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn minus_one() -> Self {
        -<Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn checked_div(&self, other: &Self) -> Option<Self> {
        Some(self / other)
    }
    fn less(&self, other: &Self) -> bool {
        self < other
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
}

/// Runs the simplex over scalar type `S`. `Ok(None)` reports an arithmetic
/// overflow of the fast path.
fn solve_tableau<S: Scalar>(lp: &CoveringLp) -> Result<Option<LpSolution>> {
    let n = lp.num_vars; // packing constraints, one per vertex
    let m = lp.rows.len(); // packing variables, one per covering row
    let width = m + n + 1;
    let rhs = width - 1;

    // Rows 0..n are the packing constraints with slack identity; row n is the
    // reduced-cost row, initialized to -c.
    let mut t: Vec<Vec<S>> = vec![vec![S::zero(); width]; n + 1];
    for v in 0..n {
        for (j, row) in lp.rows.iter().enumerate() {
            if row.contains(v) {
                t[v][j] = S::one();
            }
        }
        t[v][m + v] = S::one();
        t[v][rhs] = S::one();
    }
    for j in 0..m {
        t[n][j] = S::minus_one();
    }
    let mut basis: Vec<usize> = (m..m + n).collect();

    loop {
        // Entering: most negative reduced cost, least index on ties.
        let mut entering: Option<usize> = None;
        for j in 0..m + n {
            if t[n][j].is_negative() && entering.map_or(true, |b| t[n][j].less(&t[n][b])) {
                entering = Some(j);
            }
        }
        let entering = match entering {
            Some(j) => j,
            None => break,
        };
        // Leaving: lexicographic minimum of (rhs, slack block) / pivot entry.
        let mut leaving: Option<usize> = None;
        for r in 0..n {
            if !t[r][entering].is_positive() {
                continue;
            }
            leaving = match leaving {
                None => Some(r),
                Some(cur) => match lex_ratio_less(&t, r, cur, entering, rhs, m, n) {
                    Some(true) => Some(r),
                    Some(false) => Some(cur),
                    None => return Ok(None),
                },
            };
        }
        let leaving = leaving.ok_or_else(|| {
            // Every packing variable is bounded by the constraints of the
            // vertices in its row, so this cannot happen for a valid LP.
            Error::MalformedLp("unbounded packing dual".into())
        })?;
        if pivot(&mut t, &mut basis, leaving, entering).is_none() {
            return Ok(None);
        }
    }

    let value = t[n][rhs].to_rational();
    let mut dual = vec![<Rational as Zero>::zero(); m];
    for (r, &b) in basis.iter().enumerate() {
        if b < m {
            dual[b] = t[r][rhs].to_rational();
        }
    }
    let primal: Vec<Rational> = (0..n).map(|v| t[n][m + v].to_rational()).collect();
    Ok(Some(LpSolution {
        value,
        primal,
        dual,
    }))
}

/// True iff row `a` beats row `b` in the lexicographic ratio test for
/// entering column `e`: compares `rhs/pivot` first, then the slack-block
/// ratios column by column. Both pivot entries are positive, so
/// cross-multiplication preserves the order. The slack block holds the rows
/// of the basis inverse, which are linearly independent, so two rows never
/// tie across the whole scan. `None` reports overflow.
fn lex_ratio_less<S: Scalar>(
    t: &[Vec<S>],
    a: usize,
    b: usize,
    e: usize,
    rhs: usize,
    m: usize,
    n: usize,
) -> Option<bool> {
    let (pa, pb) = (&t[a][e], &t[b][e]);
    let lhs = t[a][rhs].checked_mul(pb)?;
    let cmp = t[b][rhs].checked_mul(pa)?;
    if lhs != cmp {
        return Some(lhs.less(&cmp));
    }
    for j in m..m + n {
        let lhs = t[a][j].checked_mul(pb)?;
        let cmp = t[b][j].checked_mul(pa)?;
        if lhs != cmp {
            return Some(lhs.less(&cmp));
        }
    }
    unreachable!("lexicographic ratio tie across the whole slack block")
}

/// Gauss-Jordan pivot at `(r, e)`; `None` reports overflow.
fn pivot<S: Scalar>(t: &mut [Vec<S>], basis: &mut [usize], r: usize, e: usize) -> Option<()> {
    let p = t[r][e].clone();
    if !p.is_one() {
        for x in &mut t[r] {
            if !x.is_zero() {
                *x = x.checked_div(&p)?;
            }
        }
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r {
            continue;
        }
        let factor = row[e].clone();
        if factor.is_zero() {
            continue;
        }
        for (x, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *x = x.checked_sub(&factor.checked_mul(pv)?)?;
            }
        }
    }
    basis[r] = e;
    Some(())
}

/// Independent optimality check: primal feasibility with the `[0,1]` box,
/// dual feasibility, and exact objective equality.
pub fn verify_certificate(lp: &CoveringLp, sol: &LpSolution) -> bool {
    if sol.primal.len() != lp.num_vars || sol.dual.len() != lp.rows.len() {
        return false;
    }
    let zero = <Rational as Zero>::zero();
    let one = <Rational as One>::one();
    for x in &sol.primal {
        if x < &zero || x > &one {
            return false;
        }
    }
    for row in &lp.rows {
        let mut sum = zero.clone();
        for v in row.iter() {
            sum += &sol.primal[v];
        }
        if sum < one {
            return false;
        }
    }
    for y in &sol.dual {
        if y < &zero {
            return false;
        }
    }
    for v in 0..lp.num_vars {
        let mut load = zero.clone();
        for (row, y) in lp.rows.iter().zip(&sol.dual) {
            if row.contains(v) {
                load += y;
            }
        }
        if load > one {
            return false;
        }
    }
    let primal_sum: Rational = sol.primal.iter().cloned().sum();
    let dual_sum: Rational = sol.dual.iter().cloned().sum();
    primal_sum == dual_sum && primal_sum == sol.value
}

/// Certified fractional metric dimension: builds the LP, solves it, and
/// rejects the result unless the duality certificate checks out.
pub fn fracdim(g: &Graph) -> Result<Rational> {
    Ok(fracdim_certified(g)?.1.value)
}

/// As [`fracdim`], returning the LP and the full certificate.
pub fn fracdim_certified(g: &Graph) -> Result<(CoveringLp, LpSolution)> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter("fracdim requires n >= 2".into()));
    }
    let sys = ResolutionSystem::build(g)?;
    let lp = build_fracdim_lp(&sys);
    let sol = simplex_solve(&lp)?;
    if !verify_certificate(&lp, &sol) {
        return Err(Error::CertificateFailure(format!(
            "value {}",
            rational_to_string(&sol.value)
        )));
    }
    Ok((lp, sol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, hamming, hypercube, johnson, path};
    use proptest::prelude::*;

    #[test]
    fn rational_serialization() {
        assert_eq!(rational_to_string(&rational(5, 4)), "5/4");
        assert_eq!(rational_to_string(&rational(2, 1)), "2/1");
        assert_eq!(rational_to_string(&rational(4, 2)), "2/1");
        assert_eq!(rational_to_string(&rational(-3, 6)), "-1/2");
        assert_eq!(rational_to_string(&rational(3, -6)), "-1/2");
        assert_eq!(rational_from_str("35/17").unwrap(), rational(35, 17));
        assert!(rational_from_str("3").is_err());
        assert!(rational_from_str("3/0").is_err());
        assert!(rational_from_str("a/b").is_err());
    }

    #[test]
    fn single_row_lp() {
        let lp = CoveringLp::new(2, vec![VertexSet::from_indices(2, [0, 1])]).unwrap();
        let sol = simplex_solve(&lp).unwrap();
        assert_eq!(sol.value, rational(1, 1));
        assert!(verify_certificate(&lp, &sol));
    }

    #[test]
    fn rejects_malformed_lp() {
        assert!(matches!(
            CoveringLp::new(3, vec![]),
            Err(Error::MalformedLp(_))
        ));
        assert!(matches!(
            CoveringLp::new(3, vec![VertexSet::new(3)]),
            Err(Error::MalformedLp(_))
        ));
    }

    #[test]
    fn cycle5_lp_value() {
        assert_eq!(fracdim(&cycle(5).unwrap()).unwrap(), rational(5, 4));
    }

    #[test]
    fn octahedron_lp_value() {
        assert_eq!(fracdim(&johnson(4, 2).unwrap()).unwrap(), rational(3, 1));
    }

    #[test]
    fn complete_graphs_are_half_order() {
        for n in 2..=8 {
            assert_eq!(
                fracdim(&complete(n).unwrap()).unwrap(),
                rational_usize(n, 2),
                "K_{n}"
            );
        }
    }

    #[test]
    fn paths_are_one() {
        for n in 2..=8 {
            assert_eq!(fracdim(&path(n).unwrap()).unwrap(), rational(1, 1));
        }
    }

    #[test]
    fn hypercube3_is_two() {
        assert_eq!(fracdim(&hypercube(3).unwrap()).unwrap(), rational(2, 1));
    }

    #[test]
    fn dominance_elimination_preserves_optimum() {
        // Same instance built with and without the superset reduction.
        for g in [path(3).unwrap(), cycle(6).unwrap(), hamming(2, 3).unwrap()] {
            let sys = ResolutionSystem::build(&g).unwrap();
            let reduced = build_fracdim_lp(&sys);
            let raw = CoveringLp::new(sys.n(), sys.distinct_rsets().to_vec()).unwrap();
            let a = simplex_solve(&reduced).unwrap();
            let b = simplex_solve(&raw).unwrap();
            assert!(verify_certificate(&reduced, &a));
            assert!(verify_certificate(&raw, &b));
            assert_eq!(a.value, b.value, "{g:?}");
            assert!(reduced.rows().len() <= raw.rows().len());
        }
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let c5 = cycle(5).unwrap();
        let (lp, sol) = fracdim_certified(&c5).unwrap();
        assert!(verify_certificate(&lp, &sol));

        let mut perturbed = sol.clone();
        perturbed.primal[0] += rational(1, 100);
        assert!(!verify_certificate(&lp, &perturbed));

        let mut claimed = sol.clone();
        claimed.value = rational(6, 5);
        assert!(!verify_certificate(&lp, &claimed));

        let mut short = sol.clone();
        short.dual.pop();
        assert!(!verify_certificate(&lp, &short));
    }

    #[test]
    fn primal_stays_in_unit_box() {
        for g in [
            cycle(7).unwrap(),
            complete(6).unwrap(),
            johnson(5, 2).unwrap(),
            hamming(2, 4).unwrap(),
        ] {
            let (_, sol) = fracdim_certified(&g).unwrap();
            let one = Rational::one();
            let zero = Rational::zero();
            assert!(sol.primal.iter().all(|x| x >= &zero && x <= &one));
        }
    }

    proptest! {
        #[test]
        fn rational_round_trip(
            a in any::<i128>(),
            b in 1i128..,
            c in any::<i128>(),
            d in 1i128..,
        ) {
            let x = BigRational::new(BigInt::from(a), BigInt::from(b));
            let y = BigRational::new(BigInt::from(c), BigInt::from(d));
            prop_assert_eq!((&x + &y) - &y, x.clone());
            prop_assert_eq!(rational_from_str(&rational_to_string(&x)).unwrap(), x);
        }

        #[test]
        fn fracdim_envelope_on_random_graphs(seed in 0u64..200) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2usize..=8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            prop_assume!(g.is_connected());
            let value = fracdim(&g).unwrap();
            prop_assert!(value >= Rational::one());
            prop_assert!(value <= rational_usize(n, 2));
            let (r, _) = crate::resolve::r_min(&g).unwrap();
            prop_assert!(value <= rational_usize(n, r));
            let (dim, _) = crate::resolve::metric_dimension(&g).unwrap();
            prop_assert!(value >= rational_usize(n, n - dim + 1));
        }
    }
}
