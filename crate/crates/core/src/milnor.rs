//! Graded dimension theory of the algebra C[x]/(dW): plain and equivariant
//! Poincaré series, group-invariant multiplicities of twisted top relative
//! cohomology classes, and a brute-force linear-algebra oracle.
//!
//! Characters of a finite diagonal group with exponent `e` live in the ring
//! Z[x]/(x^e - 1); an element is a length-`e` integer vector whose entry `m`
//! is the multiplicity of the root `exp(2*pi*i*m/e)`. Rational integers are
//! recovered at the very end by reduction modulo the `e`-th cyclotomic
//! polynomial, and that reduction must come out constant.

use crate::error::{Error, Result};
use crate::poly::ExponentMatrix;
use crate::rat::{int, rat, Rat};
use crate::symmetry::{det_twist, SymmetryGroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Truncated polynomial in `t` whose coefficients are integer combinations of
/// `e`-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloPoly {
    root_order: usize,
    coeffs: Vec<Vec<i64>>,
}

impl CycloPoly {
    pub fn root_order(&self) -> usize {
        self.root_order
    }

    /// Number of stored `t`-coefficients (truncation bound plus one).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> &[i64] {
        &self.coeffs[k]
    }
}

/// Adds `v` multiplied by the root `exp(2*pi*i*a/e)`, i.e. cyclically
/// shifted by `a`.
fn add_rotated(acc: &mut [i64], v: &[i64], a: usize) {
    let e = acc.len();
    let a = a % e;
    let split = e - a;
    for (dst, src) in acc[a..].iter_mut().zip(&v[..split]) {
        *dst += src;
    }
    for (dst, src) in acc[..a].iter_mut().zip(&v[split..]) {
        *dst += src;
    }
}

fn sub_rotated(acc: &mut [i64], v: &[i64], a: usize) {
    let e = acc.len();
    let a = a % e;
    let split = e - a;
    for (dst, src) in acc[a..].iter_mut().zip(&v[..split]) {
        *dst -= src;
    }
    for (dst, src) in acc[..a].iter_mut().zip(&v[split..]) {
        *dst -= src;
    }
}

/// Graded trace of the diagonal element with the given phases acting on
/// C[x]/(dW) for a quasihomogeneous polynomial with the given weights and
/// degree: the series `prod_j (1 - r_j^-1 t^(d-w_j)) / (1 - r_j t^w_j)` with
/// `r_j = exp(2*pi*i*phases_j)`. The division must terminate; a remainder
/// signals a non-isolated singularity.
pub fn equivariant_trace_series(
    weights: &[u64],
    degree: u64,
    phases: &[Rat],
    root_order: u64,
) -> Result<CycloPoly> {
    assert_eq!(weights.len(), phases.len());
    let e = root_order as usize;
    let rots: Vec<usize> = phases
        .iter()
        .map(|p| {
            let scaled = p * int(root_order as i128);
            assert!(
                scaled.is_integer(),
                "phase {p} is not a multiple of 1/{root_order}"
            );
            scaled.to_integer().rem_euclid(root_order as i128) as usize
        })
        .collect();
    let deg_total: u64 = weights.iter().map(|&w| degree - w).sum();
    let socle: i64 = weights
        .iter()
        .map(|&w| degree as i64 - 2 * w as i64)
        .sum();
    let len = deg_total as usize + 1;

    // numerator: prod_j (1 - r_j^-1 t^(d - w_j))
    let mut num: Vec<Vec<i64>> = vec![vec![0; e]; len];
    num[0][0] = 1;
    for (j, &w) in weights.iter().enumerate() {
        let shift = (degree - w) as usize;
        let inv_rot = (e - rots[j] % e) % e;
        let mut next = num.clone();
        for k in 0..len {
            if k + shift < len && num[k].iter().any(|&c| c != 0) {
                sub_rotated(&mut next[k + shift], &num[k], inv_rot);
            }
        }
        num = next;
    }

    // divide by each (1 - r_j t^w_j) as a power series
    let mut q = num;
    for (j, &w) in weights.iter().enumerate() {
        let w = w as usize;
        for k in w..len {
            let (head, tail) = q.split_at_mut(k);
            add_rotated(&mut tail[0], &head[k - w], rots[j]);
        }
    }

    let keep = if socle < 0 { 0 } else { socle as usize + 1 };
    for (k, c) in q.iter().enumerate().skip(keep) {
        if c.iter().any(|&x| x != 0) {
            return Err(Error::NonPolynomialQuotient { degree: k });
        }
    }
    q.truncate(keep);
    Ok(CycloPoly {
        root_order: e,
        coeffs: q,
    })
}

/// Dimensions of the graded pieces of C[x]/(dW):
/// `prod_j (1 - t^(d-w_j)) / (1 - t^w_j)`.
pub fn poincare_series(weights: &[u64], degree: u64) -> Result<Vec<i64>> {
    let phases = vec![Rat::zero(); weights.len()];
    let series = equivariant_trace_series(weights, degree, &phases, 1)?;
    Ok(series.coeffs.iter().map(|c| c[0]).collect())
}

/// The `e`-th cyclotomic polynomial, ascending coefficients.
pub fn cyclotomic_polynomial(e: u64) -> Vec<i64> {
    // (x^e - 1) divided by the cyclotomic polynomials of the proper divisors
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    for d in 1..e {
        if e % d == 0 {
            let phi = cyclotomic_polynomial(d);
            num = divide_exact(&num, &phi);
        }
    }
    num
}

/// Exact division of integer polynomials with monic divisor.
fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1);
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; rem.len().saturating_sub(dd)];
    for k in (dd..rem.len()).rev() {
        let c = rem[k];
        if c == 0 {
            continue;
        }
        quo[k - dd] = c;
        for (i, &dc) in den.iter().enumerate() {
            rem[k - dd + i] -= c * dc;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division not exact");
    quo
}

/// Evaluates a Z[x]/(x^e - 1) element at a primitive `e`-th root of unity and
/// demands a rational integer: the residue modulo the cyclotomic polynomial
/// must be constant.
fn extract_integer(v: &[i64], phi: &[i64], degree_tag: usize) -> Result<i64> {
    let dd = phi.len() - 1;
    let mut rem = v.to_vec();
    for k in (dd..rem.len()).rev() {
        let c = rem[k];
        if c == 0 {
            continue;
        }
        rem[k] = 0;
        for (i, &pc) in phi.iter().enumerate().take(dd) {
            rem[k - dd + i] -= c * pc;
        }
    }
    if rem.iter().skip(1).any(|&c| c != 0) {
        return Err(Error::NonIntegerDimension { degree: degree_tag });
    }
    Ok(rem[0])
}

/// Group-invariant multiplicities, by weighted degree, of classes
/// `monomial * volume form` on a coordinate subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedInvariantDims {
    /// Nonzero multiplicities keyed by the weighted degree of the monomial.
    pub dims: BTreeMap<u64, u64>,
    /// Sum of the weights of the fixed coordinates.
    pub weight_sum: u64,
    pub degree: u64,
}

impl GradedInvariantDims {
    /// The same multiplicities keyed by the charge
    /// `c = (k + weight_sum) / d` of the class.
    pub fn charge_dims(&self) -> BTreeMap<Rat, u64> {
        self.dims
            .iter()
            .map(|(&k, &m)| (rat((k + self.weight_sum) as i128, self.degree as i128), m))
            .collect()
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }
}

/// Multiplicity of group-invariant classes per degree: the group average of
/// the graded traces, each twisted by the volume-form character of the fixed
/// subspace.
pub fn invariant_dims(
    weights: &[u64],
    degree: u64,
    group: &SymmetryGroup,
    fixed: &[usize],
) -> Result<GradedInvariantDims> {
    let e = group.exponent();
    let sub_weights: Vec<u64> = fixed.iter().map(|&j| weights[j]).collect();
    let socle: i64 = sub_weights
        .iter()
        .map(|&w| degree as i64 - 2 * w as i64)
        .sum();
    let len = if socle < 0 { 0 } else { socle as usize + 1 };
    let mut acc: Vec<Vec<i64>> = vec![vec![0; e as usize]; len];
    for h in group.elements() {
        let phases: Vec<Rat> = fixed.iter().map(|&j| h.phases()[j]).collect();
        let series = equivariant_trace_series(&sub_weights, degree, &phases, e)?;
        let twist = det_twist(h, fixed) * int(e as i128);
        debug_assert!(twist.is_integer());
        let twist = twist.to_integer() as usize;
        for (k, coeff) in series.coeffs.iter().enumerate() {
            add_rotated(&mut acc[k], coeff, twist);
        }
    }
    let phi = cyclotomic_polynomial(e);
    let order = group.order() as i64;
    let mut dims = BTreeMap::new();
    for (k, v) in acc.iter().enumerate() {
        let n = extract_integer(v, &phi, k)?;
        if n % order != 0 || n < 0 {
            return Err(Error::NonIntegerDimension { degree: k });
        }
        let dim = (n / order) as u64;
        if dim > 0 {
            dims.insert(k as u64, dim);
        }
    }
    Ok(GradedInvariantDims {
        dims,
        weight_sum: sub_weights.iter().sum(),
        degree,
    })
}

/// Relative Hodge bidegree of an invariant class of charge `c` on an
/// `n`-dimensional fixed subspace.
pub fn hodge_type(n_fixed: usize, c: i64) -> (i64, i64) {
    (n_fixed as i64 - c, c)
}

/// Independent check: per-degree dimensions of C[x]/(dW) by exact rank
/// computation on each graded slice of the Jacobian ideal.
pub fn milnor_oracle(
    matrix: &ExponentMatrix,
    weights: &[u64],
    degree: u64,
    max_slice: usize,
) -> Result<BTreeMap<u64, u64>> {
    let socle: i64 = weights
        .iter()
        .map(|&w| degree as i64 - 2 * w as i64)
        .sum();
    let mut dims = BTreeMap::new();
    if socle < 0 {
        return Ok(dims);
    }
    for k in 0..=socle as u64 {
        let dim = slice_dimension(matrix, weights, degree, k, max_slice)?;
        if dim > 0 {
            dims.insert(k, dim as u64);
        }
    }
    Ok(dims)
}

/// Dimension of the weighted-degree-`k` slice of C[x]/(dW) by exact rank.
pub fn slice_dimension(
    matrix: &ExponentMatrix,
    weights: &[u64],
    degree: u64,
    k: u64,
    max_slice: usize,
) -> Result<usize> {
    let n = matrix.n_vars();
    assert_eq!(weights.len(), n);
    let basis = monomials_of_weight(weights, k);
    if basis.len() > max_slice {
        return Err(Error::InstanceTooLarge(format!(
            "{} monomials of weighted degree {k} exceed the bound {max_slice}",
            basis.len()
        )));
    }
    if basis.is_empty() {
        return Ok(0);
    }
    let mut partials: Vec<Vec<(Vec<u64>, BigRational)>> = vec![Vec::new(); n];
    for (row, coeff) in matrix.rows().iter().zip(matrix.coefficients()) {
        for j in 0..n {
            if row[j] == 0 {
                continue;
            }
            let mut mono = row.clone();
            mono[j] -= 1;
            let c = BigRational::new(BigInt::from(*coeff.numer()), BigInt::from(*coeff.denom()))
                * BigRational::from_integer(BigInt::from(row[j]));
            partials[j].push((mono, c));
        }
    }
    let index: BTreeMap<&Vec<u64>, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (j, w) in weights.iter().enumerate() {
        let partial_weight = degree - w;
        if k < partial_weight {
            continue;
        }
        for factor in monomials_of_weight(weights, k - partial_weight) {
            let mut row = vec![BigRational::zero(); basis.len()];
            for (mono, c) in &partials[j] {
                let product: Vec<u64> = mono.iter().zip(&factor).map(|(a, b)| a + b).collect();
                row[index[&product]] += c;
            }
            rows.push(row);
        }
    }
    let rank = big_rank(&mut rows);
    Ok(basis.len() - rank)
}

/// How far the isolated-singularity check got.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsolationEvidence {
    /// The series terminates and, slice by slice, the oracle reproduces it
    /// up to the socle and vanishes for a full weight period beyond.
    SeriesAndOracle,
    /// The series terminates; the instance is too large for the oracle.
    SeriesOnly,
}

/// Nondegeneracy check used for polynomials without an invertible square
/// matrix: the quotient series must terminate, and where the oracle is
/// affordable its dimensions must agree at every degree up to the socle and
/// vanish beyond it.
pub fn check_isolated(
    matrix: &ExponentMatrix,
    weights: &[u64],
    degree: u64,
    max_slice: usize,
) -> Result<IsolationEvidence> {
    let series = poincare_series(weights, degree)?;
    let oracle = match milnor_oracle(matrix, weights, degree, max_slice) {
        Ok(dims) => dims,
        Err(Error::InstanceTooLarge(_)) => return Ok(IsolationEvidence::SeriesOnly),
        Err(e) => return Err(e),
    };
    for (k, &dim) in series.iter().enumerate() {
        if oracle.get(&(k as u64)).copied().unwrap_or(0) != dim as u64 {
            return Err(Error::NotNondegenerate(format!(
                "degree-{k} slice has dimension {} but the series predicts {dim}",
                oracle.get(&(k as u64)).copied().unwrap_or(0)
            )));
        }
    }
    // beyond the socle the quotient must vanish; max_w consecutive zero
    // slices propagate vanishing to all higher degrees
    let beyond = series.len() as u64;
    let max_w = weights.iter().copied().max().unwrap_or(1);
    for k in beyond..beyond + max_w {
        match slice_dimension(matrix, weights, degree, k, max_slice) {
            Ok(0) => {}
            Ok(dim) => {
                return Err(Error::NotNondegenerate(format!(
                    "degree-{k} slice beyond the socle has dimension {dim}"
                )))
            }
            Err(Error::InstanceTooLarge(_)) => return Ok(IsolationEvidence::SeriesOnly),
            Err(e) => return Err(e),
        }
    }
    Ok(IsolationEvidence::SeriesAndOracle)
}

fn monomials_of_weight(weights: &[u64], k: u64) -> Vec<Vec<u64>> {
    fn rec(weights: &[u64], k: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if weights.len() == 1 {
            if k % weights[0] == 0 {
                cur.push(k / weights[0]);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let w = weights[0];
        let mut used = 0u64;
        let mut e = 0u64;
        while used <= k {
            cur.push(e);
            rec(&weights[1..], k - used, cur, out);
            cur.pop();
            e += 1;
            used += w;
        }
    }
    if weights.is_empty() {
        return if k == 0 { vec![vec![]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(weights, k, &mut Vec::new(), &mut out);
    out
}

fn big_rank(rows: &mut [Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for i in rank + 1..rows.len() {
            if !rows[i][col].is_zero() {
                let factor = &rows[i][col] / &inv;
                for c in col..ncols {
                    let sub = &rows[rank][c] * &factor;
                    rows[i][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
