//! Quasihomogeneous polynomials represented by their exponent matrices:
//! charges, weights and degree, the Calabi-Yau test, restriction to a
//! coordinate subspace, and the decomposition of an invertible polynomial
//! into power/loop/chain summands.

use crate::error::{Error, Result};
use crate::linalg;
use crate::rat::{int, lcm_i128, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// A polynomial `sum_i l_i prod_j x_j^{m_ij}` stored as the integer matrix
/// `(m_ij)` plus the coefficient list. Rows are kept sorted lexicographically;
/// variables keep their input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    n_vars: usize,
    rows: Vec<Vec<u64>>,
    coefficients: Vec<Rat>,
}

impl ExponentMatrix {
    pub fn new(n_vars: usize, rows: Vec<Vec<u64>>, coefficients: Option<Vec<Rat>>) -> Result<Self> {
        let coefficients = coefficients.unwrap_or_else(|| vec![Rat::one(); rows.len()]);
        assert_eq!(rows.len(), coefficients.len());
        for row in &rows {
            assert_eq!(row.len(), n_vars);
        }
        for c in &coefficients {
            if c.is_zero() {
                return Err(Error::NotQuasihomogeneous("zero coefficient".into()));
            }
        }
        // canonical row order: descending lexicographic, so that chains read
        // head-first and transposition reproduces the conventional labels
        let mut paired: Vec<(Vec<u64>, Rat)> = rows.into_iter().zip(coefficients).collect();
        paired.sort_by(|a, b| b.0.cmp(&a.0));
        for pair in paired.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::DuplicateMonomial(format_monomial(&pair[0].0)));
            }
        }
        let (rows, coefficients) = paired.into_iter().unzip();
        Ok(ExponentMatrix {
            n_vars,
            rows,
            coefficients,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn n_monomials(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coefficients
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&e| int(e as i128)).collect())
            .collect();
        linalg::rank(&rows)
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.n_vars
    }

    /// Determinant of a square exponent matrix.
    pub fn det(&self) -> Result<i128> {
        if !self.is_square() {
            return Err(Error::NotInvertible(format!(
                "{} monomials in {} variables",
                self.rows.len(),
                self.n_vars
            )));
        }
        let m: Vec<Vec<i128>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&e| e as i128).collect())
            .collect();
        Ok(linalg::det(&m))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.det().map(|d| d != 0).unwrap_or(false)
    }

    fn require_invertible_with_unit_coefficients(&self) -> Result<()> {
        if !self.is_square() || self.det()? == 0 {
            return Err(Error::NotInvertible(
                "exponent matrix is not square and regular".into(),
            ));
        }
        if self.coefficients.iter().any(|c| *c != Rat::one()) {
            return Err(Error::NotInvertible(
                "coefficients must all be 1 on this path".into(),
            ));
        }
        Ok(())
    }

    /// Transposed polynomial: the same monomial count with `m_ij -> m_ji`.
    pub fn transpose(&self) -> Result<ExponentMatrix> {
        self.require_invertible_with_unit_coefficients()?;
        let n = self.n_vars;
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|j| (0..n).map(|i| self.rows[i][j]).collect())
            .collect();
        ExponentMatrix::new(n, rows, None)
    }

    /// Keeps exactly the monomials supported on `fixed` and projects them to
    /// those coordinates. The zero polynomial (no rows) is a legal result.
    pub fn restrict(&self, fixed: &[usize]) -> ExponentMatrix {
        let keep: BTreeSet<usize> = fixed.iter().copied().collect();
        let mut rows = Vec::new();
        let mut coefficients = Vec::new();
        for (row, c) in self.rows.iter().zip(&self.coefficients) {
            if row
                .iter()
                .enumerate()
                .all(|(j, &e)| e == 0 || keep.contains(&j))
            {
                rows.push(fixed.iter().map(|&j| row[j]).collect());
                coefficients.push(*c);
            }
        }
        ExponentMatrix::new(fixed.len(), rows, Some(coefficients))
            .expect("restriction preserves distinctness")
    }

    pub fn inverse_rational(&self) -> Result<Vec<Vec<Rat>>> {
        if !self.is_square() {
            return Err(Error::NotInvertible("matrix is not square".into()));
        }
        let m: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&e| int(e as i128)).collect())
            .collect();
        linalg::inverse(&m).ok_or_else(|| Error::NotInvertible("determinant is zero".into()))
    }
}

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .rows
            .iter()
            .zip(&self.coefficients)
            .map(|(row, c)| {
                let mono = format_monomial(row);
                if c.is_one() {
                    mono
                } else if c.is_integer() {
                    format!("{}*{}", c.numer(), mono)
                } else {
                    format!("{}/{}*{}", c.numer(), c.denom(), mono)
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn format_monomial(row: &[u64]) -> String {
    let factors: Vec<String> = row
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(j, &e)| {
            if e == 1 {
                format!("x{}", j + 1)
            } else {
                format!("x{}^{}", j + 1, e)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

/// Charges `q_j = w_j / d` with `gcd(w_1, ..., w_N, d) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeData {
    pub charges: Vec<Rat>,
    pub weights: Vec<u64>,
    pub degree: u64,
    pub calabi_yau: bool,
    /// Some charge exceeds 1/2; accepted, but flagged.
    pub large_charge: bool,
}

/// Unique positive solution of `M q = 1`, with the coprime integer form.
pub fn charges(m: &ExponentMatrix) -> Result<ChargeData> {
    let a: Vec<Vec<Rat>> = m
        .rows()
        .iter()
        .map(|r| r.iter().map(|&e| int(e as i128)).collect())
        .collect();
    let b = vec![Rat::one(); a.len()];
    let q = linalg::solve_unique(&a, &b).ok_or_else(|| {
        Error::NotQuasihomogeneous("the weight system M q = 1 has no unique solution".into())
    })?;
    for (index, qj) in q.iter().enumerate() {
        if !qj.is_positive() {
            return Err(Error::NonPositiveCharge {
                index: index + 1,
                value: format!("{qj}"),
            });
        }
    }
    let d = q.iter().fold(1i128, |acc, qj| lcm_i128(acc, *qj.denom()));
    let weights: Vec<u64> = q.iter().map(|qj| (qj * int(d)).to_integer() as u64).collect();
    let total: Rat = q.iter().sum();
    Ok(ChargeData {
        large_charge: q.iter().any(|qj| *qj > Rat::new(1, 2)),
        charges: q,
        weights,
        degree: d as u64,
        calabi_yau: total.is_one(),
    })
}

pub fn is_calabi_yau(c: &ChargeData) -> bool {
    c.calabi_yau
}

/// One indecomposable summand of an invertible polynomial. Variable indices
/// are 0-based positions in the ambient polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    /// `x^a`
    Fermat { var: usize, exponent: u64 },
    /// `x_1^{a_1} x_2 + ... + x_k^{a_k} x_1`
    Loop { vars: Vec<usize>, exponents: Vec<u64> },
    /// `x_1^{a_1} x_2 + ... + x_k^{a_k}`
    Chain { vars: Vec<usize>, exponents: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomicDecomposition {
    pub atoms: Vec<Atom>,
}

impl fmt::Display for AtomicDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .atoms
            .iter()
            .map(|a| match a {
                Atom::Fermat { var, exponent } => format!("Fermat(x{}: {})", var + 1, exponent),
                Atom::Loop { vars, exponents } => format!(
                    "Loop({})",
                    vars.iter()
                        .zip(exponents)
                        .map(|(v, e)| format!("x{}^{}", v + 1, e))
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
                Atom::Chain { vars, exponents } => format!(
                    "Chain({})",
                    vars.iter()
                        .zip(exponents)
                        .map(|(v, e)| format!("x{}^{}", v + 1, e))
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl AtomicDecomposition {
    /// Rebuilds the monomial rows; used to check that the decomposition
    /// reproduces the input exactly.
    pub fn reassemble(&self, n_vars: usize) -> Vec<Vec<u64>> {
        let mut rows = Vec::new();
        for atom in &self.atoms {
            match atom {
                Atom::Fermat { var, exponent } => {
                    let mut row = vec![0u64; n_vars];
                    row[*var] = *exponent;
                    rows.push(row);
                }
                Atom::Loop { vars, exponents } | Atom::Chain { vars, exponents } => {
                    let k = vars.len();
                    for i in 0..k {
                        let mut row = vec![0u64; n_vars];
                        row[vars[i]] = exponents[i];
                        let is_chain_end =
                            matches!(atom, Atom::Chain { .. }) && i == k - 1;
                        if !is_chain_end {
                            let next = vars[(i + 1) % k];
                            row[next] += 1;
                        }
                        rows.push(row);
                    }
                }
            }
        }
        rows.sort();
        rows
    }
}

/// Per monomial, the ways it can be read as `x_head^a * x_tail` or `x_head^a`.
fn head_candidates(row: &[u64]) -> Vec<(usize, Option<usize>, u64)> {
    let support: Vec<(usize, u64)> = row
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(j, &e)| (j, e))
        .collect();
    match support.as_slice() {
        [(j, e)] if *e >= 2 => vec![(*j, None, *e)],
        [(j1, e1), (j2, e2)] => {
            let mut out = Vec::new();
            if *e2 == 1 {
                out.push((*j1, Some(*j2), *e1));
            }
            if *e1 == 1 {
                out.push((*j2, Some(*j1), *e2));
            }
            out
        }
        _ => Vec::new(),
    }
}

/// Decomposes an invertible polynomial into its power/loop/chain summands.
/// Success certifies nondegeneracy on the invertible path.
pub fn atomic_decomposition(m: &ExponentMatrix) -> Result<AtomicDecomposition> {
    m.require_invertible_with_unit_coefficients()?;
    let n = m.n_vars();
    let candidates: Vec<Vec<(usize, Option<usize>, u64)>> =
        m.rows().iter().map(|r| head_candidates(r)).collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Err(Error::NotNondegenerate(
            "a monomial is neither x^a nor x^a*y".into(),
        ));
    }

    // assign to every monomial a head variable, each variable heading exactly
    // one monomial and no variable trailed twice
    fn search(
        row: usize,
        candidates: &[Vec<(usize, Option<usize>, u64)>],
        head_used: &mut Vec<bool>,
        tail_used: &mut Vec<bool>,
        assignment: &mut Vec<(usize, Option<usize>, u64)>,
    ) -> bool {
        if row == candidates.len() {
            return true;
        }
        for &(head, tail, exp) in &candidates[row] {
            if head_used[head] {
                continue;
            }
            if let Some(t) = tail {
                if tail_used[t] {
                    continue;
                }
            }
            head_used[head] = true;
            if let Some(t) = tail {
                tail_used[t] = true;
            }
            assignment.push((head, tail, exp));
            if search(row + 1, candidates, head_used, tail_used, assignment) {
                return true;
            }
            assignment.pop();
            head_used[head] = false;
            if let Some(t) = tail {
                tail_used[t] = false;
            }
        }
        false
    }

    let mut assignment = Vec::new();
    if !search(
        0,
        &candidates,
        &mut vec![false; n],
        &mut vec![false; n],
        &mut assignment,
    ) {
        return Err(Error::NotNondegenerate(
            "no consistent head assignment exists".into(),
        ));
    }

    // head -> (tail, exponent); walk the functional graph
    let mut step = vec![(None::<usize>, 0u64); n];
    for &(head, tail, exp) in &assignment {
        step[head] = (tail, exp);
    }
    let mut incoming = vec![0usize; n];
    for &(_, tail, _) in &assignment {
        if let Some(t) = tail {
            incoming[t] += 1;
        }
    }
    let mut seen = vec![false; n];
    let mut atoms = Vec::new();
    // chains start at variables nothing points to; what remains is loops
    for start in 0..n {
        if seen[start] || incoming[start] > 0 {
            continue;
        }
        let mut vars = Vec::new();
        let mut exponents = Vec::new();
        let mut cur = start;
        loop {
            seen[cur] = true;
            vars.push(cur);
            let (tail, exp) = step[cur];
            exponents.push(exp);
            match tail {
                Some(t) if !seen[t] => cur = t,
                Some(_) => {
                    return Err(Error::NotNondegenerate(
                        "a chain feeds back into itself".into(),
                    ))
                }
                None => break,
            }
        }
        let terminal = *exponents.last().unwrap();
        if terminal < 2 {
            return Err(Error::NotNondegenerate(
                "chain must end in a square or higher power".into(),
            ));
        }
        if vars.len() == 1 {
            atoms.push(Atom::Fermat {
                var: vars[0],
                exponent: exponents[0],
            });
        } else {
            atoms.push(Atom::Chain { vars, exponents });
        }
    }
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut vars = Vec::new();
        let mut exponents = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            vars.push(cur);
            let (tail, exp) = step[cur];
            exponents.push(exp);
            cur = tail.expect("loop nodes always have a tail");
        }
        if cur != start {
            return Err(Error::NotNondegenerate(
                "cycle does not close on its starting variable".into(),
            ));
        }
        atoms.push(Atom::Loop { vars, exponents });
    }
    atoms.sort_by_key(|a| match a {
        Atom::Fermat { var, .. } => *var,
        Atom::Loop { vars, .. } | Atom::Chain { vars, .. } => vars[0],
    });
    let decomposition = AtomicDecomposition { atoms };
    let mut expected = m.rows().to_vec();
    expected.sort();
    if decomposition.reassemble(n) != expected {
        return Err(Error::NotNondegenerate(
            "reassembled summands do not reproduce the polynomial".into(),
        ));
    }
    Ok(decomposition)
}

/// An exponent matrix bundled with its charge data; the unit every pipeline
/// consumes.
#[derive(Debug, Clone)]
pub struct PolyData {
    pub matrix: ExponentMatrix,
    pub charges: ChargeData,
}

impl PolyData {
    pub fn new(matrix: ExponentMatrix) -> Result<Self> {
        let charges = charges(&matrix)?;
        Ok(PolyData { matrix, charges })
    }

    pub fn n_vars(&self) -> usize {
        self.matrix.n_vars()
    }

    /// Weights of the fixed coordinates, in `fixed` order, sharing the
    /// ambient degree (deliberately not re-reduced).
    pub fn restricted_weights(&self, fixed: &[usize]) -> Vec<u64> {
        fixed.iter().map(|&j| self.charges.weights[j]).collect()
    }
}
