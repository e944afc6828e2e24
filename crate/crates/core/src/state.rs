//! Assembly of the two bigraded dimension tables: the Landau-Ginzburg state
//! space summed over the group elements, and the orbifold cohomology of the
//! hypersurface quotient summed over the finite sector set of each coset of
//! the grading subgroup, together with the isomorphism verifier.

use crate::error::{Error, Result};
use crate::milnor::{invariant_dims, GradedInvariantDims};
use crate::poly::PolyData;
use crate::rat::{frac, int, Rat};
use crate::symmetry::{cosets, j_element, lambda_bar, PhaseVector, SymmetryGroup};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Finitely supported map `(p, q) -> multiplicity` with exact rational keys.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigradedDims(BTreeMap<(Rat, Rat), u64>);

impl BigradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, p: Rat, q: Rat, mult: u64) {
        if mult > 0 {
            *self.0.entry((p, q)).or_insert(0) += mult;
        }
    }

    pub fn get(&self, p: Rat, q: Rat) -> u64 {
        self.0.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn hodge(&self, p: i64, q: i64) -> u64 {
        self.get(int(p as i128), int(q as i128))
    }

    pub fn merge(&mut self, other: &BigradedDims) {
        for (&(p, q), &m) in &other.0 {
            self.add(p, q, m);
        }
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Rat, Rat, u64)> + '_ {
        self.0.iter().map(|(&(p, q), &m)| (p, q, m))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicities summed by total degree `p + q`.
    pub fn degree_totals(&self) -> BTreeMap<Rat, u64> {
        let mut out = BTreeMap::new();
        for (&(p, q), &m) in &self.0 {
            *out.entry(p + q).or_insert(0) += m;
        }
        out
    }

    /// All bidegrees integral?
    pub fn is_integral(&self) -> bool {
        self.0.keys().all(|(p, q)| p.is_integer() && q.is_integer())
    }

    /// Support union, for side-by-side comparisons.
    pub fn keys_with(&self, other: &BigradedDims) -> BTreeSet<(Rat, Rat)> {
        self.0.keys().chain(other.0.keys()).copied().collect()
    }
}

impl fmt::Display for BigradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(&(p, q), &m)| format!("h^({p},{q})={m}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lg,
    Cy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectorKind {
    /// Landau-Ginzburg sector with no fixed coordinates: a single canonical
    /// generator.
    NeveuSchwarz,
    /// Landau-Ginzburg sector with fixed coordinates.
    Ramond,
    /// Scalar sector whose hypersurface slice is empty.
    Empty,
    /// Sector meeting the hypersurface transversally (element of the group).
    Transversal,
    /// Sector contained in the hypersurface (element outside the group).
    NonTransversal,
}

impl fmt::Display for SectorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SectorKind::NeveuSchwarz => "Neveu-Schwarz",
            SectorKind::Ramond => "Ramond",
            SectorKind::Empty => "Empty",
            SectorKind::Transversal => "Transversal",
            SectorKind::NonTransversal => "NonTransversal",
        };
        write!(f, "{s}")
    }
}

/// One summand of a state space.
#[derive(Debug, Clone)]
pub struct Sector {
    pub side: Side,
    /// The acting diagonal element.
    pub gamma: PhaseVector,
    /// Coset representative and scalar parameter (hypersurface side only):
    /// `gamma = rep + s * weights`.
    pub rep: Option<PhaseVector>,
    pub scalar: Option<Rat>,
    pub n_fixed: usize,
    /// Age entering the bidegree shift: ambient age on the LG side, the
    /// tangent-space age on the hypersurface side.
    pub age: Rat,
    pub kind: SectorKind,
    /// Full contribution of the sector.
    pub dims: BigradedDims,
    /// The part coming from invariant Milnor classes (empty for
    /// hyperplane-type classes and canonical generators).
    pub primitive: BigradedDims,
}

impl Sector {
    pub fn label(&self) -> String {
        match (&self.rep, &self.scalar) {
            (Some(rep), Some(s)) => format!("g={rep} s={s}"),
            _ => format!("{}", self.gamma),
        }
    }
}

#[derive(Debug, Clone)]
pub struct StateSpace {
    pub side: Side,
    pub sectors: Vec<Sector>,
    pub total: BigradedDims,
}

impl StateSpace {
    pub fn sector_by_gamma(&self, gamma: &PhaseVector) -> Option<&Sector> {
        self.sectors.iter().find(|s| &s.gamma == gamma)
    }

    pub fn sector_by_rep_scalar(&self, rep: &PhaseVector, s: Rat) -> Option<&Sector> {
        self.sectors
            .iter()
            .find(|sec| sec.rep.as_ref() == Some(rep) && sec.scalar == Some(s))
    }
}

fn require_admissible(poly: &PolyData, group: &SymmetryGroup) -> Result<PhaseVector> {
    if !poly.charges.calabi_yau {
        return Err(Error::NotCalabiYau);
    }
    let j = j_element(&poly.charges);
    if !group.contains(&j) {
        return Err(Error::JNotInGroup);
    }
    Ok(j)
}

/// Shared per-fixed-set cache of invariant multiplicities; both state spaces
/// draw the Milnor content of a sector from here.
struct SectorContent<'a> {
    poly: &'a PolyData,
    group: &'a SymmetryGroup,
    cache: BTreeMap<Vec<usize>, GradedInvariantDims>,
}

impl<'a> SectorContent<'a> {
    fn new(poly: &'a PolyData, group: &'a SymmetryGroup) -> Self {
        SectorContent {
            poly,
            group,
            cache: BTreeMap::new(),
        }
    }

    fn invariant(&mut self, fixed: &[usize]) -> Result<&GradedInvariantDims> {
        if !self.cache.contains_key(fixed) {
            let dims = invariant_dims(
                &self.poly.charges.weights,
                self.poly.charges.degree,
                self.group,
                fixed,
            )?;
            self.cache.insert(fixed.to_vec(), dims);
        }
        Ok(&self.cache[fixed])
    }

    /// Invariant classes of the restricted polynomial placed at bidegrees
    /// `(n_fixed - c - 1 + shift, c - 1 + shift)`.
    fn placed(&mut self, fixed: &[usize], shift: Rat) -> Result<BigradedDims> {
        let n = int(fixed.len() as i128);
        let mut out = BigradedDims::new();
        for (c, mult) in self.invariant(fixed)?.charge_dims() {
            out.add(n - c - Rat::one() + shift, c - Rat::one() + shift, mult);
        }
        Ok(out)
    }
}

/// The Landau-Ginzburg state space: one sector per group element.
pub fn fjrw(poly: &PolyData, group: &SymmetryGroup) -> Result<StateSpace> {
    let mut content = SectorContent::new(poly, group);
    fjrw_with(&mut content)
}

fn fjrw_with(content: &mut SectorContent) -> Result<StateSpace> {
    let (poly, group) = (content.poly, content.group);
    let j = require_admissible(poly, group)?;
    let mut sectors = Vec::new();
    let mut total = BigradedDims::new();
    for gamma in group.elements() {
        let (fixed, n_fixed) = gamma.fixed_data();
        let age = gamma.age();
        let dims = content.placed(&fixed, age)?;
        let kind = if n_fixed == 0 {
            SectorKind::NeveuSchwarz
        } else {
            SectorKind::Ramond
        };
        let primitive = if kind == SectorKind::Ramond {
            dims.clone()
        } else {
            BigradedDims::new()
        };
        total.merge(&dims);
        sectors.push(Sector {
            side: Side::Lg,
            gamma: gamma.clone(),
            rep: None,
            scalar: None,
            n_fixed,
            age,
            kind,
            dims,
            primitive,
        });
    }
    // the canonical generator sits at bidegree (0, 0)
    debug_assert_eq!(
        sectors
            .iter()
            .find(|s| s.gamma == j)
            .map(|s| s.dims.get(Rat::zero(), Rat::zero())),
        Some(1)
    );
    Ok(StateSpace {
        side: Side::Lg,
        sectors,
        total,
    })
}

/// Scalars `s` whose diagonal image composed with `rep` fixes at least one
/// coordinate: `s * w_j = -rep_j mod 1` for some `j`.
fn sector_scalars(rep: &PhaseVector, weights: &[u64]) -> BTreeSet<Rat> {
    let mut out = BTreeSet::new();
    for (j, &w) in weights.iter().enumerate() {
        let theta = rep.phases()[j];
        for m in 1..=w {
            out.insert(frac((int(m as i128) - theta) / int(w as i128)));
        }
    }
    out
}

/// The orbifold cohomology of the hypersurface quotient: sectors indexed by
/// (coset representative, scalar).
pub fn cr(poly: &PolyData, group: &SymmetryGroup) -> Result<StateSpace> {
    let mut content = SectorContent::new(poly, group);
    cr_with(&mut content)
}

fn cr_with(content: &mut SectorContent) -> Result<StateSpace> {
    let (poly, group) = (content.poly, content.group);
    let j = require_admissible(poly, group)?;
    let weights = &poly.charges.weights;
    let degree = poly.charges.degree;
    let coset_list = cosets(group, &j)?;
    let mut sectors = Vec::new();
    let mut total = BigradedDims::new();
    let mut transversal_count = 0u64;
    for rep in &coset_list.representatives {
        for s in sector_scalars(rep, weights) {
            let gamma = rep.add(&lambda_bar(s, weights));
            let (fixed, n_fixed) = gamma.fixed_data();
            debug_assert!(n_fixed >= 1);
            let age = gamma.age() - frac(s * int(degree as i128));
            let transversal = (s * int(degree as i128)).is_integer();
            debug_assert_eq!(transversal, group.contains(&gamma));
            let mut dims = BigradedDims::new();
            let mut primitive = BigradedDims::new();
            let kind;
            if transversal {
                transversal_count += 1;
                kind = if n_fixed == 1 {
                    SectorKind::Empty
                } else {
                    SectorKind::Transversal
                };
                for i in 0..n_fixed.saturating_sub(1) {
                    dims.add(int(i as i128) + age, int(i as i128) + age, 1);
                }
                primitive = content.placed(&fixed, age)?;
                dims.merge(&primitive);
            } else {
                kind = SectorKind::NonTransversal;
                for i in 0..n_fixed {
                    dims.add(int(i as i128) + age, int(i as i128) + age, 1);
                }
            }
            total.merge(&dims);
            sectors.push(Sector {
                side: Side::Cy,
                gamma,
                rep: Some(rep.clone()),
                scalar: Some(s),
                n_fixed,
                age,
                kind,
                dims,
                primitive,
            });
        }
    }
    // the scalar sectors carrying a group element are exactly the elements
    // with a fixed coordinate, each hit once
    let expected = group
        .elements()
        .iter()
        .filter(|e| e.fixed_data().1 >= 1)
        .count() as u64;
    assert_eq!(transversal_count, expected);
    Ok(StateSpace {
        side: Side::Cy,
        sectors,
        total,
    })
}

/// Per-bidegree comparison of the two tables.
#[derive(Debug, Clone)]
pub struct IsoReport {
    pub cr: StateSpace,
    pub fjrw: StateSpace,
    pub rows: Vec<(Rat, Rat, u64, u64)>,
    pub pass: bool,
}

impl IsoReport {
    pub fn diff_string(&self) -> String {
        self.rows
            .iter()
            .filter(|(_, _, a, b)| a != b)
            .map(|(p, q, a, b)| format!("({p},{q}): hypersurface {a} vs singularity {b}"))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn ensure(&self) -> Result<()> {
        if self.pass {
            Ok(())
        } else {
            Err(Error::Mismatch(self.diff_string()))
        }
    }
}

/// Both tables computed over one shared multiplicity cache.
pub fn both_state_spaces(
    poly: &PolyData,
    group: &SymmetryGroup,
) -> Result<(StateSpace, StateSpace)> {
    let mut content = SectorContent::new(poly, group);
    Ok((cr_with(&mut content)?, fjrw_with(&mut content)?))
}

pub fn verify_isomorphism(poly: &PolyData, group: &SymmetryGroup) -> Result<IsoReport> {
    let (cr_space, fjrw_space) = both_state_spaces(poly, group)?;
    let rows: Vec<(Rat, Rat, u64, u64)> = cr_space
        .total
        .keys_with(&fjrw_space.total)
        .into_iter()
        .map(|(p, q)| (p, q, cr_space.total.get(p, q), fjrw_space.total.get(p, q)))
        .collect();
    let pass = rows.iter().all(|(_, _, a, b)| a == b);
    Ok(IsoReport {
        cr: cr_space,
        fjrw: fjrw_space,
        rows,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ExponentMatrix;
    use crate::rat::rat;
    use crate::symmetry::{aut_group, group_from_generators};

    fn poly(n: usize, rows: &[&[u64]]) -> PolyData {
        let m = ExponentMatrix::new(n, rows.iter().map(|r| r.to_vec()).collect(), None).unwrap();
        PolyData::new(m).unwrap()
    }

    fn j_group(p: &PolyData) -> SymmetryGroup {
        let j = j_element(&p.charges);
        group_from_generators(p.n_vars(), &[j], 10_000).unwrap()
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

    fn weighted_k3() -> PolyData {
        poly(4, &[&[6, 0, 0, 0], &[0, 4, 0, 0], &[0, 0, 4, 0], &[0, 0, 0, 3]])
    }

    fn elliptic() -> PolyData {
        poly(3, &[&[2, 1, 0], &[0, 2, 1], &[0, 0, 3]])
    }

    fn quintic_diamond(dims: &BigradedDims) -> bool {
        dims.total() == 208
            && dims.hodge(3, 0) == 1
            && dims.hodge(0, 3) == 1
            && dims.hodge(2, 1) == 101
            && dims.hodge(1, 2) == 101
            && dims.hodge(0, 0) == 1
            && dims.hodge(1, 1) == 1
            && dims.hodge(2, 2) == 1
            && dims.hodge(3, 3) == 1
    }

    #[test]
    fn fjrw_of_the_fermat_quintic() {
        let p = fermat_quintic();
        let g = j_group(&p);
        let space = fjrw(&p, &g).unwrap();
        assert_eq!(space.sectors.len(), 5);
        // scalar sectors: bidegrees (0,0), (1,1), (2,2), (3,3)
        for k in 1..5i128 {
            let gamma = j_element(&p.charges).mul(k);
            let sec = space.sector_by_gamma(&gamma).unwrap();
            assert_eq!(sec.kind, SectorKind::NeveuSchwarz);
            let d = int(k - 1);
            assert_eq!(sec.dims.get(d, d), 1);
            assert_eq!(sec.dims.total(), 1);
        }
        assert!(quintic_diamond(&space.total));
    }

    #[test]
    fn cr_of_the_fermat_quintic() {
        let p = fermat_quintic();
        let g = j_group(&p);
        let space = cr(&p, &g).unwrap();
        assert_eq!(space.sectors.len(), 1);
        assert_eq!(space.sectors[0].kind, SectorKind::Transversal);
        assert!(quintic_diamond(&space.total));
    }

    #[test]
    fn fjrw_table_of_the_weighted_k3() {
        let p = weighted_k3();
        let g = j_group(&p);
        let space = fjrw(&p, &g).unwrap();
        let j = j_element(&p.charges);
        let expect: Vec<(i128, Vec<((i64, i64), u64)>)> = vec![
            (0, vec![((2, 0), 1), ((1, 1), 8), ((0, 2), 1)]),
            (1, vec![((0, 0), 1)]),
            (2, vec![((1, 1), 1)]),
            (3, vec![]),
            (4, vec![((1, 1), 3)]),
            (5, vec![((1, 1), 1)]),
            (6, vec![((1, 1), 2)]),
            (7, vec![((1, 1), 1)]),
            (8, vec![((1, 1), 3)]),
            (9, vec![]),
            (10, vec![((1, 1), 1)]),
            (11, vec![((2, 2), 1)]),
        ];
        for (k, rows) in expect {
            let sec = space.sector_by_gamma(&j.mul(k)).unwrap();
            assert_eq!(
                sec.dims.total(),
                rows.iter().map(|(_, m)| m).sum::<u64>(),
                "sector {k}"
            );
            for ((hp, hq), m) in rows {
                assert_eq!(sec.dims.hodge(hp, hq), m, "sector {k} at ({hp},{hq})");
            }
        }
        // K3 diamond
        assert_eq!(space.total.hodge(1, 1), 20);
        assert_eq!(space.total.hodge(2, 0), 1);
        assert_eq!(space.total.hodge(0, 2), 1);
        assert_eq!(space.total.total(), 24);
    }

    #[test]
    fn cr_of_the_weighted_k3() {
        let p = weighted_k3();
        let g = j_group(&p);
        let space = cr(&p, &g).unwrap();
        assert_eq!(space.total.hodge(1, 1), 20);
        assert_eq!(space.total.hodge(2, 0), 1);
        assert_eq!(space.total.hodge(0, 2), 1);
        assert_eq!(space.total.hodge(0, 0), 1);
        assert_eq!(space.total.hodge(2, 2), 1);
        assert_eq!(space.total.total(), 24);
    }

    #[test]
    fn elliptic_orbifold_has_fractional_degrees() {
        let p = elliptic();
        let g = aut_group(&p.matrix, 1000).unwrap();
        let space = cr(&p, &g).unwrap();
        let degrees = space.total.degree_totals();
        let expected: Vec<(Rat, u64)> = vec![
            (int(0), 1),
            (rat(1, 2), 2),
            (int(1), 3),
            (rat(3, 2), 2),
            (int(2), 1),
        ];
        assert_eq!(degrees.into_iter().collect::<Vec<_>>(), expected);
        assert_eq!(space.total.get(rat(1, 4), rat(1, 4)), 2);
        assert_eq!(space.total.get(rat(1, 2), rat(1, 2)), 3);
        assert_eq!(space.total.get(rat(3, 4), rat(3, 4)), 2);

        let lg = fjrw(&p, &g).unwrap();
        assert_eq!(lg.total, space.total);
        // rows gamma^0, gamma^3, gamma^9 are empty
        let gen = PhaseVector::new(vec![rat(1, 12), rat(10, 12), rat(4, 12)]);
        for k in [0i128, 3, 9] {
            let sec = lg.sector_by_gamma(&gen.mul(k)).unwrap();
            assert_eq!(sec.dims.total(), 0, "sector {k}");
        }
        for (k, deg, m) in [
            (1i128, rat(1, 2), 1u64),
            (2, int(1), 1),
            (4, int(0), 1),
            (5, rat(1, 2), 1),
            (6, int(1), 1),
            (7, rat(3, 2), 1),
            (8, int(2), 1),
            (10, int(1), 1),
            (11, rat(3, 2), 1),
        ] {
            let sec = lg.sector_by_gamma(&gen.mul(k)).unwrap();
            assert_eq!(sec.dims.total(), m);
            let (p_, q_, mult) = sec.dims.iter().next().unwrap();
            assert_eq!(p_ + q_, deg, "sector {k}");
            assert_eq!(p_, q_);
            assert_eq!(mult, m);
        }
    }

    #[test]
    fn isomorphism_on_three_instances() {
        for (p, g) in [
            (fermat_quintic(), j_group(&fermat_quintic())),
            (weighted_k3(), j_group(&weighted_k3())),
            (elliptic(), aut_group(&elliptic().matrix, 1000).unwrap()),
        ] {
            let report = verify_isomorphism(&p, &g).unwrap();
            assert!(report.pass, "{}", report.diff_string());
            assert_eq!(report.cr.total.total(), report.fjrw.total.total());
        }
    }

    #[test]
    fn degree_pairing_on_the_lg_side() {
        let p = weighted_k3();
        let g = j_group(&p);
        let space = fjrw(&p, &g).unwrap();
        let n = int(p.n_vars() as i128);
        for sec in &space.sectors {
            let opposite = space.sector_by_gamma(&sec.gamma.neg()).unwrap();
            for (pp, qq, m) in sec.dims.iter() {
                assert_eq!(
                    opposite.dims.get(n - int(2) - pp, n - int(2) - qq),
                    m,
                    "pairing fails for {} at ({pp},{qq})",
                    sec.gamma
                );
            }
        }
    }

    #[test]
    fn admissibility_is_enforced() {
        // non-CY: single cusp
        let p = poly(1, &[&[3]]);
        let g = group_from_generators(1, &[PhaseVector::new(vec![rat(1, 3)])], 10).unwrap();
        assert!(matches!(fjrw(&p, &g), Err(Error::NotCalabiYau)));
        // J missing: trivial group for the quintic
        let p = fermat_quintic();
        let g = group_from_generators(5, &[PhaseVector::zero(5)], 10).unwrap();
        assert!(matches!(cr(&p, &g), Err(Error::JNotInGroup)));
    }

    #[test]
    fn classical_diamonds_of_low_degree() {
        // cubic curve: genus one
        let p = poly(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        let g = j_group(&p);
        let curve = cr(&p, &g).unwrap();
        for (hp, hq, m) in [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)] {
            assert_eq!(curve.total.hodge(hp, hq), m);
        }
        assert_eq!(curve.total.total(), 4);
        // quartic surface: the K3 lattice
        let p = poly(4, &[&[4, 0, 0, 0], &[0, 4, 0, 0], &[0, 0, 4, 0], &[0, 0, 0, 4]]);
        let g = j_group(&p);
        let k3 = cr(&p, &g).unwrap();
        assert_eq!(k3.total.hodge(1, 1), 20);
        assert_eq!(k3.total.hodge(2, 0), 1);
        assert_eq!(k3.total.hodge(0, 2), 1);
        assert_eq!(k3.total.total(), 24);
    }

    #[test]
    fn contained_sectors_appear_exactly_off_the_gorenstein_case() {
        // every weight divides the degree: all scalar sectors are transversal
        let p = weighted_k3();
        let g = j_group(&p);
        let space = cr(&p, &g).unwrap();
        assert!(space
            .sectors
            .iter()
            .all(|s| s.kind != SectorKind::NonTransversal));
        // weights 5,7,6,9 with degree 27: contained sectors show up
        let p = poly(4, &[&[4, 1, 0, 0], &[0, 3, 1, 0], &[0, 0, 3, 1], &[0, 0, 0, 3]]);
        let g = j_group(&p);
        let space = cr(&p, &g).unwrap();
        assert!(space
            .sectors
            .iter()
            .any(|s| s.kind == SectorKind::NonTransversal));
    }

    #[test]
    fn untwisted_sector_carries_hyperplane_powers() {
        let p = fermat_quintic();
        let g = j_group(&p);
        let space = cr(&p, &g).unwrap();
        let untwisted = space
            .sector_by_rep_scalar(&PhaseVector::zero(5), int(0))
            .unwrap();
        for i in 0..4 {
            assert!(untwisted.dims.hodge(i, i) >= 1);
        }
    }
}
