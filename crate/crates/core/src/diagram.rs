//! Per-coset ray/dot model tying the two state spaces together.
//!
//! For a coset representative `g`, a ray is drawn at every angle that is
//! either a multiple of `1/d` or solves a coordinate equation
//! `w_j * angle = g_j mod 1`; each solution of the `j`-th equation marks a
//! dot of radius `j` on its ray, and solutions away from the `1/d` lattice
//! mark an extra dot of radius `N+1`. Rays and dots are totally ordered by
//! (angle, radius) with a ray counted as radius 1/2. The counters `D` (dots)
//! and `R` (rays) and their difference `F = D - R` read off the degrees of
//! the classes both sides attach to the diagram.

use crate::error::{Error, Result};
use crate::rat::{frac, int, Rat};
use crate::state::{SectorKind, StateSpace};
use crate::symmetry::{lambda_bar, PhaseVector};
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct Ray {
    /// Angle in `[0, 1)`, as a fraction of a full turn.
    pub angle: Rat,
    /// Angle is a multiple of `1/d`.
    pub on_lattice: bool,
    /// Indices into `dots`, sorted by radius.
    pub dot_indices: Vec<usize>,
    /// Position among the rays, counting anticlockwise from the real axis.
    pub count: i64,
    /// `D` carried over from the last preceding dot (`-1` before all dots).
    pub dot_extension: i64,
}

impl Ray {
    pub fn is_empty(&self) -> bool {
        self.dot_indices.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Dot {
    /// Radius: the 1-based coordinate index, or `N+1` for the extra dots.
    pub radius: usize,
    pub angle: Rat,
    /// Position among the dots in lexicographic order.
    pub count: i64,
    /// Index of the ray this dot lies on.
    pub ray: usize,
    /// Some dot on the same ray has a larger radius.
    pub internal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Element {
    Ray(usize),
    Dot(usize),
}

#[derive(Debug, Clone)]
pub struct Diagram {
    pub rep: PhaseVector,
    pub weights: Vec<u64>,
    pub degree: u64,
    /// Sorted by angle.
    pub rays: Vec<Ray>,
    /// Sorted by (angle, radius).
    pub dots: Vec<Dot>,
    /// Sum of the phases of the representative.
    pub phase_sum: Rat,
}

pub fn build_diagram(weights: &[u64], degree: u64, rep: &PhaseVector) -> Diagram {
    let n = weights.len();
    assert_eq!(rep.len(), n);
    // coordinate solutions: angle * w_j = rep_j mod 1
    let mut per_angle: BTreeMap<Rat, Vec<usize>> = BTreeMap::new();
    for (j, &w) in weights.iter().enumerate() {
        let theta = rep.phases()[j];
        for m in 0..w {
            let angle = frac((theta + int(m as i128)) / int(w as i128));
            per_angle.entry(angle).or_default().push(j + 1);
        }
    }
    let lattice = |angle: Rat| (angle * int(degree as i128)).is_integer();
    let mut angles: BTreeMap<Rat, Vec<usize>> = per_angle;
    for l in 0..degree {
        angles
            .entry(int(l as i128) / int(degree as i128))
            .or_default();
    }
    // dots per angle: coordinate radii plus N+1 off the lattice
    let mut dots = Vec::new();
    let mut rays = Vec::new();
    for (ray_index, (&angle, radii)) in angles.iter().enumerate() {
        let mut radii = radii.clone();
        if !radii.is_empty() && !lattice(angle) {
            radii.push(n + 1);
        }
        radii.sort_unstable();
        let mut dot_indices = Vec::new();
        for (pos, &radius) in radii.iter().enumerate() {
            dot_indices.push(dots.len());
            dots.push(Dot {
                radius,
                angle,
                count: 0,
                ray: ray_index,
                internal: pos + 1 < radii.len(),
            });
        }
        rays.push(Ray {
            angle,
            on_lattice: lattice(angle),
            dot_indices,
            count: ray_index as i64,
            dot_extension: -1,
        });
    }
    // dots are already in (angle, radius) order; number them and extend D to
    // the rays: the last dot strictly before the ray's angle
    for (i, dot) in dots.iter_mut().enumerate() {
        dot.count = i as i64;
    }
    for ray in rays.iter_mut() {
        ray.dot_extension = dots
            .iter()
            .take_while(|dot| dot.angle < ray.angle)
            .last()
            .map_or(-1, |dot| dot.count);
    }
    Diagram {
        rep: rep.clone(),
        weights: weights.to_vec(),
        degree,
        rays,
        dots,
        phase_sum: rep.age(),
    }
}

impl Diagram {
    /// `F = D - R` in the total order.
    pub fn f_value(&self, el: Element) -> i64 {
        match el {
            Element::Ray(i) => self.rays[i].dot_extension - self.rays[i].count,
            Element::Dot(i) => self.dots[i].count - self.rays[self.dots[i].ray].count,
        }
    }

    pub fn internal_dots(&self) -> Vec<usize> {
        (0..self.dots.len())
            .filter(|&i| self.dots[i].internal)
            .collect()
    }

    pub fn empty_rays(&self) -> Vec<usize> {
        (0..self.rays.len())
            .filter(|&i| self.rays[i].is_empty())
            .collect()
    }

    /// All elements in the total order: at each angle the ray first, then its
    /// dots by radius.
    pub fn walk(&self) -> Vec<Element> {
        let mut out = Vec::new();
        for (i, ray) in self.rays.iter().enumerate() {
            out.push(Element::Ray(i));
            for &d in &ray.dot_indices {
                out.push(Element::Dot(d));
            }
        }
        out
    }

    /// The scalar sector parameter attached to a ray: `s = -angle mod 1`.
    pub fn scalar_of_ray(&self, ray: usize) -> Rat {
        frac(-self.rays[ray].angle)
    }

    /// The group element whose sector a lattice ray represents.
    pub fn gamma_of_ray(&self, ray: usize) -> PhaseVector {
        self.rep
            .add(&lambda_bar(self.scalar_of_ray(ray), &self.weights))
    }
}

/// Degree of the class an internal dot (hypersurface side) or an empty ray
/// (singularity side) stands for: `2 * (phase sum + D - R)`.
pub fn element_degree(diagram: &Diagram, el: Element) -> Result<Rat> {
    match el {
        Element::Dot(i) if !diagram.dots[i].internal => Err(Error::NotApplicable(format!(
            "dot of radius {} at angle {} is extremal",
            diagram.dots[i].radius, diagram.dots[i].angle
        ))),
        Element::Ray(i) if !diagram.rays[i].is_empty() => Err(Error::NotApplicable(format!(
            "ray at angle {} carries dots",
            diagram.rays[i].angle
        ))),
        el => Ok((diagram.phase_sum + int(diagram.f_value(el) as i128)) * int(2)),
    }
}

/// The degree-preserving bijection between internal dots and empty rays:
/// per value of `F`, the two lists have equal length and are matched in
/// circular order.
pub fn match_internal_to_empty(diagram: &Diagram) -> Result<Vec<(usize, usize)>> {
    let mut dots_by_f: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for i in diagram.internal_dots() {
        dots_by_f
            .entry(diagram.f_value(Element::Dot(i)))
            .or_default()
            .push(i);
    }
    let mut rays_by_f: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for i in diagram.empty_rays() {
        rays_by_f
            .entry(diagram.f_value(Element::Ray(i)))
            .or_default()
            .push(i);
    }
    if dots_by_f.keys().collect::<Vec<_>>() != rays_by_f.keys().collect::<Vec<_>>() {
        return Err(Error::MatchingImpossible(format!(
            "F values differ: dots {:?} vs rays {:?}",
            dots_by_f.keys().collect::<Vec<_>>(),
            rays_by_f.keys().collect::<Vec<_>>()
        )));
    }
    let mut out = Vec::new();
    for (f, dot_list) in &dots_by_f {
        let ray_list = &rays_by_f[f];
        if dot_list.len() != ray_list.len() {
            return Err(Error::MatchingImpossible(format!(
                "{} internal dots but {} empty rays at F = {f}",
                dot_list.len(),
                ray_list.len()
            )));
        }
        out.extend(dot_list.iter().copied().zip(ray_list.iter().copied()));
    }
    Ok(out)
}

/// Consistency of the diagram against the two computed state spaces, for the
/// coset of this diagram's representative.
pub fn cross_check(diagram: &Diagram, cr: &StateSpace, fjrw: &StateSpace) -> Result<()> {
    let fail = |msg: String| Err(Error::CrossCheckFailure(msg));
    if diagram.rays.len() != diagram.dots.len() {
        return fail(format!(
            "{} rays but {} dots",
            diagram.rays.len(),
            diagram.dots.len()
        ));
    }
    // the walk closes: F returns to its starting level and moves by one
    let walk = diagram.walk();
    let mut prev = diagram.f_value(*walk.last().expect("diagram is nonempty"));
    if prev != 0 {
        return fail(format!("F ends at {prev}, not 0"));
    }
    for &el in &walk {
        let cur = diagram.f_value(el);
        let expected = match el {
            Element::Ray(_) => prev - 1,
            Element::Dot(_) => prev + 1,
        };
        if cur != expected {
            return fail(format!("F jumps from {prev} to {cur}"));
        }
        prev = cur;
    }
    for (ray_index, ray) in diagram.rays.iter().enumerate() {
        let s = diagram.scalar_of_ray(ray_index);
        let gamma = diagram.gamma_of_ray(ray_index);
        let lg_sector = fjrw.sector_by_gamma(&gamma);
        let cy_sector = cr.sector_by_rep_scalar(&diagram.rep, s);
        if ray.on_lattice {
            // lattice rays carry the singularity sectors of the coset
            let Some(lg) = lg_sector else {
                return fail(format!("no sector for lattice ray at {}", ray.angle));
            };
            if ray.is_empty() != (lg.kind == SectorKind::NeveuSchwarz) {
                return fail(format!(
                    "ray at {} is {}empty but sector {} has {} fixed coordinates",
                    ray.angle,
                    if ray.is_empty() { "" } else { "non" },
                    gamma,
                    lg.n_fixed
                ));
            }
            if ray.dot_indices.len() != lg.n_fixed {
                return fail(format!(
                    "ray at {} carries {} dots but the sector fixes {}",
                    ray.angle,
                    ray.dot_indices.len(),
                    lg.n_fixed
                ));
            }
            if ray.is_empty() {
                let deg = element_degree(diagram, Element::Ray(ray_index))?;
                let expected = (lg.age - int(1)) * int(2);
                if deg != expected {
                    return fail(format!(
                        "empty ray at {}: diagram degree {deg} vs sector degree {expected}",
                        ray.angle
                    ));
                }
            } else {
                // extremal dot <-> invariant Milnor classes, on both sides
                let Some(cy) = cy_sector else {
                    return fail(format!("no scalar sector for dotted ray at {}", ray.angle));
                };
                if cy.primitive != lg.primitive {
                    return fail(format!(
                        "extremal content differs at angle {}: {} vs {}",
                        ray.angle, cy.primitive, lg.primitive
                    ));
                }
            }
        } else {
            // off-lattice rays: contained sector, no singularity counterpart
            if lg_sector.is_some() {
                return fail(format!(
                    "off-lattice ray at {} has a singularity sector",
                    ray.angle
                ));
            }
            let Some(cy) = cy_sector else {
                return fail(format!("no scalar sector for ray at {}", ray.angle));
            };
            if cy.kind != SectorKind::NonTransversal || !cy.primitive.is_empty() {
                return fail(format!(
                    "off-lattice ray at {} should be a contained sector without primitive part",
                    ray.angle
                ));
            }
            if ray.dot_indices.len() != cy.n_fixed + 1 {
                return fail(format!(
                    "off-lattice ray at {} carries {} dots, expected {}",
                    ray.angle,
                    ray.dot_indices.len(),
                    cy.n_fixed + 1
                ));
            }
        }
        // internal dots are the hyperplane-type classes of the scalar sector
        let internal: Vec<usize> = ray
            .dot_indices
            .iter()
            .copied()
            .filter(|&d| diagram.dots[d].internal)
            .collect();
        if let Some(cy) = cy_sector {
            let hyperplane = cy.dims.total() - cy.primitive.total();
            if internal.len() as u64 != hyperplane {
                return fail(format!(
                    "ray at {}: {} internal dots vs {} hyperplane classes",
                    ray.angle,
                    internal.len(),
                    hyperplane
                ));
            }
            for (i, &d) in internal.iter().enumerate() {
                let deg = element_degree(diagram, Element::Dot(d))?;
                let expected = (int(i as i128) + cy.age) * int(2);
                if deg != expected {
                    return fail(format!(
                        "dot {} on ray at {}: degree {deg} vs {expected}",
                        diagram.dots[d].radius, ray.angle
                    ));
                }
            }
        } else if !internal.is_empty() {
            return fail(format!(
                "ray at {} has internal dots but no scalar sector",
                ray.angle
            ));
        }
    }
    Ok(())
}

/// Restricted counters: `DT` counts only dots of radius at most `N`, `RT`
/// only lattice rays (by `angle * d`), extended to the other kind as the
/// construction prescribes. On internal dots and empty rays their difference
/// agrees with `F`.
#[cfg(test)]
fn tilde_values(diagram: &Diagram, el: Element) -> (i64, i64) {
    let n = diagram.weights.len();
    let small_dots: Vec<usize> = (0..diagram.dots.len())
        .filter(|&i| diagram.dots[i].radius <= n)
        .collect();
    let dt_of_dot = |dot: usize| -> i64 {
        small_dots
            .iter()
            .position(|&i| i == dot)
            .map(|p| p as i64)
            .expect("dot has radius <= N")
    };
    let rt_of_lattice_ray = |ray: usize| -> i64 {
        let scaled = diagram.rays[ray].angle * int(diagram.degree as i128);
        scaled.to_integer() as i64
    };
    match el {
        Element::Ray(i) => {
            let rt = rt_of_lattice_ray(i);
            // last small dot strictly before this ray
            let dt = small_dots
                .iter()
                .copied()
                .take_while(|&d| diagram.dots[d].angle < diagram.rays[i].angle)
                .last()
                .map_or(-1, dt_of_dot);
            (dt, rt)
        }
        Element::Dot(i) => {
            let dot = &diagram.dots[i];
            let dt = dt_of_dot(i);
            let rt = if diagram.rays[dot.ray].on_lattice {
                rt_of_lattice_ray(dot.ray)
            } else {
                // next lattice ray, or d if there is none
                diagram
                    .rays
                    .iter()
                    .enumerate()
                    .find(|(_, r)| r.on_lattice && r.angle > dot.angle)
                    .map_or(diagram.degree as i64, |(ri, _)| rt_of_lattice_ray(ri))
            };
            (dt, rt)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ExponentMatrix, PolyData};
    use crate::rat::rat;
    use crate::state;
    use crate::symmetry::{aut_group, group_from_generators, j_element};
    use num_traits::Zero;

    fn poly(n: usize, rows: &[&[u64]]) -> PolyData {
        let m = ExponentMatrix::new(n, rows.iter().map(|r| r.to_vec()).collect(), None).unwrap();
        PolyData::new(m).unwrap()
    }

    fn elliptic() -> PolyData {
        poly(3, &[&[2, 1, 0], &[0, 2, 1], &[0, 0, 3]])
    }

    fn gamma_gen() -> PhaseVector {
        PhaseVector::new(vec![rat(1, 12), rat(10, 12), rat(4, 12)])
    }

    #[test]
    fn identity_coset_of_the_elliptic_cubic() {
        let d = build_diagram(&[1, 1, 1], 3, &PhaseVector::zero(3));
        assert_eq!(d.rays.len(), 3);
        assert_eq!(d.dots.len(), 3);
        // all dots on the real axis
        assert!(d.dots.iter().all(|dot| dot.angle.is_zero()));
        // internal dots have degrees 0 and 2, empty rays 2 and 0
        let degs: Vec<Rat> = d
            .internal_dots()
            .into_iter()
            .map(|i| element_degree(&d, Element::Dot(i)).unwrap())
            .collect();
        assert_eq!(degs, vec![int(0), int(2)]);
        let rdegs: Vec<Rat> = d
            .empty_rays()
            .into_iter()
            .map(|i| element_degree(&d, Element::Ray(i)).unwrap())
            .collect();
        assert_eq!(rdegs, vec![int(2), int(0)]);
    }

    #[test]
    fn gamma_coset_of_the_elliptic_cubic() {
        let d = build_diagram(&[1, 1, 1], 3, &gamma_gen());
        assert_eq!(d.rays.len(), 5);
        assert_eq!(d.dots.len(), 5);
        assert_eq!(d.dots.iter().filter(|dot| dot.radius == 4).count(), 2);
        // every internal dot and empty ray has degree 1/2
        for i in d.internal_dots() {
            assert_eq!(element_degree(&d, Element::Dot(i)).unwrap(), rat(1, 2));
        }
        for i in d.empty_rays() {
            assert_eq!(element_degree(&d, Element::Ray(i)).unwrap(), rat(1, 2));
        }
        // internal dots: radius 1 at angle 1/12 and radius 2 at angle 10/12;
        // empty rays at angles 0 and 2/3
        let internal: Vec<(usize, Rat)> = d
            .internal_dots()
            .into_iter()
            .map(|i| (d.dots[i].radius, d.dots[i].angle))
            .collect();
        assert_eq!(internal, vec![(1, rat(1, 12)), (2, rat(10, 12))]);
        let empty: Vec<Rat> = d.empty_rays().into_iter().map(|i| d.rays[i].angle).collect();
        assert_eq!(empty, vec![int(0), rat(2, 3)]);
        let matching = match_internal_to_empty(&d).unwrap();
        assert_eq!(matching.len(), 2);
    }

    #[test]
    fn later_cosets_of_the_elliptic_cubic() {
        let d2 = build_diagram(&[1, 1, 1], 3, &gamma_gen().mul(2));
        assert_eq!((d2.rays.len(), d2.dots.len()), (4, 4));
        for i in d2.internal_dots() {
            assert_eq!(element_degree(&d2, Element::Dot(i)).unwrap(), int(1));
        }
        let d3 = build_diagram(&[1, 1, 1], 3, &gamma_gen().mul(3));
        assert_eq!((d3.rays.len(), d3.dots.len()), (5, 5));
        for i in d3.internal_dots() {
            assert_eq!(element_degree(&d3, Element::Dot(i)).unwrap(), rat(3, 2));
        }
    }

    #[test]
    fn quintic_identity_coset_matching() {
        let d = build_diagram(&[1, 1, 1, 1, 1], 5, &PhaseVector::zero(5));
        assert_eq!((d.rays.len(), d.dots.len()), (5, 5));
        let matching = match_internal_to_empty(&d).unwrap();
        assert_eq!(matching.len(), 4);
        for (dot, ray) in matching {
            assert_eq!(d.f_value(Element::Dot(dot)), d.f_value(Element::Ray(ray)));
        }
    }

    #[test]
    fn nongorenstein_k3_identity_coset_counts() {
        let d = build_diagram(&[5, 7, 6, 9], 27, &PhaseVector::zero(4));
        assert_eq!(d.rays.len(), 40);
        assert_eq!(d.dots.len(), 40);
        assert_eq!(d.dots.iter().filter(|dot| dot.radius == 5).count(), 13);
        let off_lattice = d.rays.iter().filter(|r| !r.on_lattice).count();
        assert_eq!(off_lattice, 13);
        let lattice_without_dots = d
            .rays
            .iter()
            .filter(|r| r.on_lattice && r.is_empty())
            .count();
        assert_eq!(lattice_without_dots, 18);
    }

    #[test]
    fn extremal_elements_have_no_single_degree() {
        let d = build_diagram(&[1, 1, 1], 3, &PhaseVector::zero(3));
        let extremal = (0..d.dots.len()).find(|&i| !d.dots[i].internal).unwrap();
        assert!(matches!(
            element_degree(&d, Element::Dot(extremal)),
            Err(Error::NotApplicable(_))
        ));
        let dotted_ray = (0..d.rays.len()).find(|&i| !d.rays[i].is_empty()).unwrap();
        assert!(matches!(
            element_degree(&d, Element::Ray(dotted_ray)),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn restricted_counters_agree_on_internal_dots_and_empty_rays() {
        for rep in [
            PhaseVector::zero(3),
            gamma_gen(),
            gamma_gen().mul(2),
            gamma_gen().mul(3),
        ] {
            let d = build_diagram(&[1, 1, 1], 3, &rep);
            for i in d.internal_dots() {
                let (dt, rt) = tilde_values(&d, Element::Dot(i));
                assert_eq!(dt - rt, d.f_value(Element::Dot(i)), "dot {i} of {rep}");
            }
            for i in d.empty_rays() {
                let (dt, rt) = tilde_values(&d, Element::Ray(i));
                assert_eq!(dt - rt, d.f_value(Element::Ray(i)), "ray {i} of {rep}");
            }
        }
    }

    #[test]
    fn cross_check_on_elliptic_and_quintic_cosets() {
        // elliptic with the full symmetry group: four cosets
        let p = elliptic();
        let g = aut_group(&p.matrix, 1000).unwrap();
        let cr_space = state::cr(&p, &g).unwrap();
        let fjrw_space = state::fjrw(&p, &g).unwrap();
        for k in 0..4i128 {
            let d = build_diagram(&p.charges.weights, p.charges.degree, &gamma_gen().mul(k));
            cross_check(&d, &cr_space, &fjrw_space).unwrap();
        }
        // quintic identity coset: the real-axis ray carries N dots
        let q = poly(
            5,
            &[
                &[5, 0, 0, 0, 0],
                &[0, 5, 0, 0, 0],
                &[0, 0, 5, 0, 0],
                &[0, 0, 0, 5, 0],
                &[0, 0, 0, 0, 5],
            ],
        );
        let j = j_element(&q.charges);
        let jg = group_from_generators(5, &[j], 100).unwrap();
        let d = build_diagram(&q.charges.weights, q.charges.degree, &PhaseVector::zero(5));
        assert_eq!(d.rays[0].dot_indices.len(), 5);
        cross_check(&d, &state::cr(&q, &jg).unwrap(), &state::fjrw(&q, &jg).unwrap()).unwrap();
    }

    #[test]
    fn gorenstein_k3_identity_coset_dot_values() {
        // 12 rays, 12 dots; each dot carries the printed value of D - R
        let d = build_diagram(&[2, 3, 3, 4], 12, &PhaseVector::zero(4));
        assert_eq!((d.rays.len(), d.dots.len()), (12, 12));
        let expected: Vec<((usize, Rat), i64)> = vec![
            ((1, int(0)), 0),
            ((2, int(0)), 1),
            ((3, int(0)), 2),
            ((4, int(0)), 3),
            ((4, rat(1, 4)), 1),
            ((2, rat(1, 3)), 1),
            ((3, rat(1, 3)), 2),
            ((1, rat(1, 2)), 1),
            ((4, rat(1, 2)), 2),
            ((2, rat(2, 3)), 1),
            ((3, rat(2, 3)), 2),
            ((4, rat(3, 4)), 2),
        ];
        for ((radius, angle), f) in expected {
            let i = (0..d.dots.len())
                .find(|&i| d.dots[i].radius == radius && d.dots[i].angle == angle)
                .unwrap_or_else(|| panic!("no dot of radius {radius} at {angle}"));
            assert_eq!(d.f_value(Element::Dot(i)), f, "dot {radius} at {angle}");
        }
    }

    #[test]
    fn gorenstein_k3_identity_coset_sectors() {
        // six dotted rays; four carry at least two dots
        let p = poly(4, &[&[6, 0, 0, 0], &[0, 4, 0, 0], &[0, 0, 4, 0], &[0, 0, 0, 3]]);
        let d = build_diagram(&p.charges.weights, p.charges.degree, &PhaseVector::zero(4));
        let dotted: Vec<&Ray> = d.rays.iter().filter(|r| !r.is_empty()).collect();
        assert_eq!(dotted.len(), 6);
        let with_two: Vec<Rat> = dotted
            .iter()
            .filter(|r| r.dot_indices.len() >= 2)
            .map(|r| r.angle)
            .collect();
        // angles 0, 4/12, 6/12, 8/12: the sectors of J^0, J^-4, J^-6, J^-8
        assert_eq!(with_two, vec![int(0), rat(4, 12), rat(6, 12), rat(8, 12)]);
        let j = j_element(&p.charges);
        let jg = group_from_generators(4, &[j], 100).unwrap();
        cross_check(&d, &state::cr(&p, &jg).unwrap(), &state::fjrw(&p, &jg).unwrap()).unwrap();
    }
}
