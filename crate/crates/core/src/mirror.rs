//! Transpose construction for invertible polynomials and the dual symmetry
//! group, with a verifier for the resulting Hodge-number rotation.

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{ExponentMatrix, PolyData};
use crate::rat::{int, lcm_i128, Rat};
use crate::state::{self, StateSpace};
use crate::symmetry::{
    group_from_generators, is_symmetry_of, j_element, PhaseVector, SymmetryGroup,
};

/// The transposed polynomial `m_ij -> m_ji`.
pub fn transpose(m: &ExponentMatrix) -> Result<ExponentMatrix> {
    m.transpose()
}

/// Basis of the lattice of exponent vectors `a` with `x^a` invariant under
/// the whole group: `sum_j a_j * phase_j(h)` integral for every `h`.
#[derive(Debug, Clone)]
pub struct InvariantLattice {
    pub basis: Vec<Vec<i128>>,
}

impl InvariantLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

pub fn invariant_lattice(group: &SymmetryGroup) -> InvariantLattice {
    let n = group.n_vars();
    let gens: Vec<&PhaseVector> = group.generators().iter().collect();
    if gens.is_empty() {
        let basis = (0..n)
            .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
            .collect();
        return InvariantLattice { basis };
    }
    // scale generator phases to a common denominator m; the condition
    // becomes T a = 0 mod m, i.e. (a, b) in ker [T | m I]
    let mut m = 1i128;
    for g in &gens {
        for t in g.phases() {
            m = lcm_i128(m, *t.denom());
        }
    }
    let k = gens.len();
    let mut system: Vec<Vec<i128>> = Vec::with_capacity(k);
    for g in &gens {
        let mut row: Vec<i128> = g
            .phases()
            .iter()
            .map(|t| (t * int(m)).to_integer())
            .collect();
        row.extend((0..k).map(|_| 0));
        system.push(row);
    }
    for (idx, row) in system.iter_mut().enumerate() {
        row[n + idx] = m;
    }
    let kernel = linalg::integer_kernel(&system);
    let basis: Vec<Vec<i128>> = kernel.into_iter().map(|v| v[..n].to_vec()).collect();
    debug_assert_eq!(basis.len(), n);
    // re-verify membership against every element, not just the generators
    for b in &basis {
        for h in group.elements() {
            let s: Rat = b
                .iter()
                .zip(h.phases())
                .map(|(&a, t)| int(a) * t)
                .sum();
            assert!(s.is_integer(), "lattice vector fails invariance");
        }
    }
    InvariantLattice { basis }
}

/// The dual group: the image of the invariant lattice under the inverse
/// transposed exponent matrix, inside the symmetries of the transpose.
pub fn dual_group(
    m: &ExponentMatrix,
    group: &SymmetryGroup,
    max_order: u64,
) -> Result<SymmetryGroup> {
    for g in group.generators() {
        if !is_symmetry_of(m, g) {
            return Err(Error::NotASymmetry(format!("{g}")));
        }
    }
    let mt = m.transpose()?;
    let mt_inv = mt.inverse_rational()?;
    let lattice = invariant_lattice(group);
    let n = m.n_vars();
    let mut gens: Vec<PhaseVector> = lattice
        .basis
        .iter()
        .map(|a| {
            PhaseVector::new(
                (0..n)
                    .map(|r| (0..n).map(|c| mt_inv[r][c] * int(a[c])).sum())
                    .collect(),
            )
        })
        .filter(|g| !g.is_zero())
        .collect();
    gens.dedup();
    let dual = group_from_generators(n, &gens, max_order)?;
    for g in dual.elements() {
        debug_assert!(is_symmetry_of(&mt, g));
    }
    Ok(dual)
}

/// The four tables of a mirror pair and the bidegree rotation check.
#[derive(Debug)]
pub struct MirrorReport {
    pub transpose: PolyData,
    pub dual: SymmetryGroup,
    pub cr: StateSpace,
    pub cr_transpose: StateSpace,
    pub fjrw: StateSpace,
    pub fjrw_transpose: StateSpace,
    pub diffs: Vec<String>,
    pub pass: bool,
}

impl MirrorReport {
    pub fn ensure(&self) -> Result<()> {
        if self.pass {
            Ok(())
        } else {
            Err(Error::MirrorMismatch(self.diffs.join("\n")))
        }
    }
}

fn rotation_diffs(label: &str, n: usize, a: &StateSpace, b: &StateSpace) -> Vec<String> {
    let shift = int(n as i128) - int(2);
    let mut diffs = Vec::new();
    for (p, q) in a.total.keys_with(&b.total) {
        let lhs = a.total.get(p, q);
        let rhs = b.total.get(shift - p, q);
        if lhs != rhs {
            diffs.push(format!(
                "{label}: h^({p},{q}) = {lhs} vs h^({},{q}) = {rhs}",
                shift - p
            ));
        }
    }
    diffs
}

/// Computes both state spaces for `(W, G)` and for the transposed pair and
/// checks `h^{p,q} = h^{N-2-p,q}` across the mirror on each side.
pub fn verify_mirror(
    poly: &PolyData,
    group: &SymmetryGroup,
    max_order: u64,
) -> Result<MirrorReport> {
    crate::poly::atomic_decomposition(&poly.matrix)?;
    if !poly.charges.calabi_yau {
        return Err(Error::NotCalabiYau);
    }
    let j = j_element(&poly.charges);
    if !group.contains(&j) {
        return Err(Error::JNotInGroup);
    }
    if group.elements().iter().any(|e| !e.age().is_integer()) {
        return Err(Error::GroupNotInSl);
    }
    let mt = poly.matrix.transpose()?;
    let dual = dual_group(&poly.matrix, group, max_order)?;
    let poly_t = PolyData::new(mt)?;
    let (cr, fjrw) = state::both_state_spaces(poly, group)?;
    let (cr_t, fjrw_t) = state::both_state_spaces(&poly_t, &dual)?;
    let n = poly.n_vars();
    let mut diffs = rotation_diffs("orbifold", n, &cr, &cr_t);
    diffs.extend(rotation_diffs("singularity", n, &fjrw, &fjrw_t));
    let pass = diffs.is_empty();
    Ok(MirrorReport {
        transpose: poly_t,
        dual,
        cr,
        cr_transpose: cr_t,
        fjrw,
        fjrw_transpose: fjrw_t,
        diffs,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::symmetry::{aut_group, sl_subgroup};

    fn poly(n: usize, rows: &[&[u64]]) -> PolyData {
        let m = ExponentMatrix::new(n, rows.iter().map(|r| r.to_vec()).collect(), None).unwrap();
        PolyData::new(m).unwrap()
    }

    fn j_group(p: &PolyData) -> SymmetryGroup {
        group_from_generators(p.n_vars(), &[j_element(&p.charges)], 10_000).unwrap()
    }

    fn chain_quintic() -> PolyData {
        poly(
            5,
            &[
                &[4, 1, 0, 0, 0],
                &[0, 4, 1, 0, 0],
                &[0, 0, 4, 1, 0],
                &[0, 0, 0, 4, 1],
                &[0, 0, 0, 0, 5],
            ],
        )
    }

    fn fermat_quintic() -> PolyData {
        poly(
            5,
            &[
                &[5, 0, 0, 0, 0],
                &[0, 5, 0, 0, 0],
                &[0, 0, 5, 0, 0],
                &[0, 0, 0, 5, 0],
                &[0, 0, 0, 0, 5],
            ],
        )
    }

    #[test]
    fn transpose_of_the_chain_quintic() {
        let t = transpose(&chain_quintic().matrix).unwrap();
        assert_eq!(
            t.to_string(),
            "x1^4 + x1*x2^4 + x2*x3^4 + x3*x4^4 + x4*x5^5"
        );
    }

    #[test]
    fn dual_of_j_on_the_chain_quintic_is_the_transpose_grading_group(
    ) {
        let p = chain_quintic();
        let g = j_group(&p);
        let dual = dual_group(&p.matrix, &g, 10_000).unwrap();
        let pt = PolyData::new(p.matrix.transpose().unwrap()).unwrap();
        let jt_group = j_group(&pt);
        assert_eq!(dual, jt_group);
        assert_eq!(dual.order(), 256);
    }

    #[test]
    fn dual_of_the_full_group_is_trivial() {
        for p in [chain_quintic(), fermat_quintic()] {
            let aut = aut_group(&p.matrix, 10_000).unwrap();
            let dual = dual_group(&p.matrix, &aut, 10_000).unwrap();
            assert_eq!(dual.order(), 1);
        }
    }

    #[test]
    fn duality_is_an_involution_on_the_fermat_quintic() {
        let p = fermat_quintic();
        let g = j_group(&p);
        let dual = dual_group(&p.matrix, &g, 10_000).unwrap();
        assert_eq!(dual.order(), 625);
        let mt = p.matrix.transpose().unwrap();
        let double = dual_group(&mt, &dual, 10_000).unwrap();
        assert_eq!(double, g);
    }

    #[test]
    fn dual_group_sandwich() {
        for (p, g) in [
            (chain_quintic(), j_group(&chain_quintic())),
            (fermat_quintic(), j_group(&fermat_quintic())),
            (
                fermat_quintic(),
                sl_subgroup(&aut_group(&fermat_quintic().matrix, 10_000).unwrap()),
            ),
        ] {
            let dual = dual_group(&p.matrix, &g, 10_000).unwrap();
            let pt = PolyData::new(p.matrix.transpose().unwrap()).unwrap();
            let jt = j_element(&pt.charges);
            assert!(dual.contains(&jt));
            assert!(dual.elements().iter().all(|e| e.age().is_integer()));
            assert_eq!(
                p.matrix.det().unwrap().abs(),
                pt.matrix.det().unwrap().abs()
            );
        }
    }

    #[test]
    fn mirror_of_the_fermat_cubic_curve() {
        let p = poly(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        let g = j_group(&p);
        let report = verify_mirror(&p, &g, 10_000).unwrap();
        assert!(report.pass, "{}", report.diffs.join("\n"));
        // genus one: h^(1,0) = h^(0,1) = 1 on both sides of the mirror
        assert_eq!(report.cr.total.hodge(1, 0), 1);
        assert_eq!(report.cr_transpose.total.hodge(0, 1), 1);
    }

    #[test]
    fn mirror_preconditions_are_enforced() {
        // group not inside the determinant-1 subgroup
        let elliptic = poly(3, &[&[2, 1, 0], &[0, 2, 1], &[0, 0, 3]]);
        let aut = aut_group(&elliptic.matrix, 1000).unwrap();
        assert!(matches!(
            verify_mirror(&elliptic, &aut, 1000),
            Err(Error::GroupNotInSl)
        ));
        // non-invertible polynomial
        let dwork = poly(
            3,
            &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[1, 1, 1]],
        );
        let g = j_group(&dwork);
        assert!(matches!(
            verify_mirror(&dwork, &g, 1000),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn lattice_of_the_trivial_group_is_everything() {
        let trivial = group_from_generators(3, &[PhaseVector::zero(3)], 10).unwrap();
        let lat = invariant_lattice(&trivial);
        assert_eq!(lat.rank(), 3);
    }

    #[test]
    fn lattice_membership_example() {
        // <J> on the elliptic cubic: a works iff sum of entries = 0 mod 3
        let p = poly(3, &[&[2, 1, 0], &[0, 2, 1], &[0, 0, 3]]);
        let g = j_group(&p);
        let lat = invariant_lattice(&g);
        for b in &lat.basis {
            let s: Rat = b.iter().map(|&a| rat(a, 3)).sum();
            assert!(s.is_integer());
        }
    }
}
