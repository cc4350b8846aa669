//! Exact lattice-point counting in dilates of a root polytope and the
//! h*-polynomial by independent routes.
//!
//! The Ehrhart route interpolates exact counts at the first `d + 1` dilation
//! factors and changes to the binomial basis `C_k(t) = binom(t + d - k, d)`.
//! The triangulation route converts the h-polynomial of the simplicial
//! complex spanned by a dissecting set of bases; the semi-passivity route
//! histograms internally semi-passive element counts; the visibility route
//! histograms facets visible from the weighted reference point. All routes
//! must agree exactly on co-Eulerian representations.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{Int, IntMatrix, Rat};
use crate::greedoid::h_polynomial_of_faces;
use crate::matroid::ElemSet;
use crate::poly::Polynomial;
use crate::polytope::RootPolytope;
use crate::util::combinations;
use crate::{Error, Result};

/// Default cap on the number of lattice candidates visited per dilation.
pub const DEFAULT_MAX_BOX: u64 = 10_000_000;

/// Whether the integer point lies in `t * P`, by scanning bases for a
/// nonnegative barycentric solution with coordinate sum `t` (Carathéodory
/// over affinely independent column sets, valid for co-Eulerian
/// representations).
pub fn contains_in_dilate(p: &RootPolytope, point: &[Int], t: u64) -> Result<bool> {
    if !p.is_co_eulerian() {
        return Err(Error::Precondition("containment scan needs a co-Eulerian representation".into()));
    }
    if point.len() != p.ambient_dim() {
        return Err(Error::Dimension("point has wrong length".into()));
    }
    let t = Int::from(t);
    for bi in 0..p.bases().len() {
        if p.simplex_contains_int(bi, point, &t) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Integer equations `sum_j y_j x_j = t * c` cutting out the affine hull of
/// `t * P`, triangularized so each equation forces its largest-index
/// coordinate.
struct HullEquations {
    /// per equation: (coefficients, rhs factor, forced coordinate)
    rows: Vec<(Vec<i128>, i128, usize)>,
    forced: Vec<Option<usize>>,
}

fn hull_equations(p: &RootPolytope) -> Result<HullEquations> {
    let matrix = p.rep().matrix();
    let n = matrix.rows();
    let m = matrix.cols();
    // kernel of the m x (n+1) system (a_i^T, -1) z = 0 gives all (y, c)
    // with y . a_i = c for every column
    let system = IntMatrix::from_fn(m, n + 1, |i, j| {
        if j < n {
            matrix.entry(j, i).clone()
        } else {
            -Int::one()
        }
    })?;
    let kernel = system.kernel_basis();
    // triangularize by trailing coordinate over the rationals
    let mut work: Vec<Vec<Rat>> = kernel;
    let mut rows: Vec<(Vec<i128>, i128, usize)> = Vec::new();
    let mut forced: Vec<Option<usize>> = vec![None; n];
    for idx in 0..work.len() {
        let (next, pivot) = {
            let mut best: Option<(usize, usize)> = None;
            for (r, row) in work.iter().enumerate().skip(idx) {
                let last_nonzero = (0..n).rev().find(|&j| !row[j].is_zero());
                if let Some(j) = last_nonzero {
                    if best.is_none_or(|(_, bj)| j > bj) {
                        best = Some((r, j));
                    }
                }
            }
            match best {
                Some(b) => b,
                None => break,
            }
        };
        work.swap(idx, next);
        let inv = work[idx][pivot].clone();
        for j in 0..=n {
            work[idx][j] = &work[idx][j] / &inv;
        }
        for r in 0..work.len() {
            if r != idx && !work[r][pivot].is_zero() {
                let factor = work[r][pivot].clone();
                for j in 0..=n {
                    let sub = &factor * &work[idx][j];
                    work[r][j] = &work[r][j] - sub;
                }
            }
        }
        // scale the row to integers
        let mut denom_lcm = Int::one();
        for v in &work[idx] {
            denom_lcm = denom_lcm.lcm(v.denom());
        }
        let as_i128 = |v: &Rat| -> Result<i128> {
            (v * Rat::from_integer(denom_lcm.clone()))
                .to_integer()
                .to_i128()
                .ok_or_else(|| Error::SizeCap("hull equation coefficients exceed i128".into()))
        };
        let coeffs: Vec<i128> = work[idx][..n].iter().map(&as_i128).collect::<Result<_>>()?;
        let c = as_i128(&work[idx][n])?;
        forced[pivot] = Some(rows.len());
        rows.push((coeffs, c, pivot));
    }
    Ok(HullEquations { rows, forced })
}

/// Exact number of lattice points of `t * P`, by a bounding-box scan with
/// the affine-hull equations forcing one coordinate per equation. Refuses
/// scans whose free-coordinate candidate count exceeds `max_box`.
pub fn lattice_point_count(p: &RootPolytope, t: u64, max_box: u64) -> Result<Int> {
    if !p.is_co_eulerian() {
        return Err(Error::Precondition("lattice scan needs a co-Eulerian representation".into()));
    }
    let matrix = p.rep().matrix();
    let n = matrix.rows();
    let m = matrix.cols();
    let ti = t as i128;
    let mut lo = vec![i128::MAX; n];
    let mut hi = vec![i128::MIN; n];
    for j in 0..n {
        for i in 0..m {
            let v = matrix
                .entry(j, i)
                .to_i128()
                .ok_or_else(|| Error::SizeCap("matrix entry exceeds i128".into()))?;
            lo[j] = lo[j].min(v * ti);
            hi[j] = hi[j].max(v * ti);
        }
    }
    let equations = hull_equations(p)?;
    // candidate count over free coordinates only
    let mut candidates: u128 = 1;
    for j in 0..n {
        if equations.forced[j].is_none() {
            let width = (hi[j] - lo[j] + 1) as u128;
            candidates = candidates.saturating_mul(width);
            if candidates > max_box as u128 {
                return Err(Error::SizeCap(format!(
                    "lattice scan at t = {t} needs more than {max_box} candidates"
                )));
            }
        }
    }
    let t_int = Int::from(t);
    let mut assigned = vec![0i128; n];
    let mut count = Int::zero();
    scan(p, &equations, &lo, &hi, ti, &t_int, 0, &mut assigned, &mut count);
    Ok(count)
}

#[allow(clippy::too_many_arguments)]
fn scan(
    p: &RootPolytope,
    equations: &HullEquations,
    lo: &[i128],
    hi: &[i128],
    t: i128,
    t_int: &Int,
    depth: usize,
    assigned: &mut Vec<i128>,
    count: &mut Int,
) {
    let n = lo.len();
    if depth == n {
        let point: Vec<Int> = assigned.iter().map(|&v| Int::from(v)).collect();
        for bi in 0..p.bases().len() {
            if p.simplex_contains_int(bi, &point, t_int) {
                *count += Int::one();
                return;
            }
        }
        return;
    }
    if let Some(eq_index) = equations.forced[depth] {
        let (coeffs, c, pivot) = &equations.rows[eq_index];
        debug_assert_eq!(*pivot, depth);
        let mut partial: i128 = 0;
        for j in 0..depth {
            partial += coeffs[j] * assigned[j];
        }
        let numerator = t * c - partial;
        let denom = coeffs[depth];
        if numerator % denom != 0 {
            return;
        }
        let value = numerator / denom;
        if value < lo[depth] || value > hi[depth] {
            return;
        }
        assigned[depth] = value;
        scan(p, equations, lo, hi, t, t_int, depth + 1, assigned, count);
    } else {
        for value in lo[depth]..=hi[depth] {
            assigned[depth] = value;
            scan(p, equations, lo, hi, t, t_int, depth + 1, assigned, count);
        }
    }
}

/// The Ehrhart polynomial: exact interpolation of the counts at
/// `t = 0..=d`, self-checked against the counts at `d + 1` and `d + 2`.
pub fn ehrhart_polynomial(p: &RootPolytope, max_box: u64) -> Result<Polynomial> {
    let d = p.dimension();
    let mut points = Vec::with_capacity(d + 1);
    for t in 0..=d as u64 {
        let count = lattice_point_count(p, t, max_box)?;
        points.push((
            Rat::from_integer(Int::from(t)),
            Rat::from_integer(count),
        ));
    }
    let poly = Polynomial::interpolate(&points)?;
    for t in (d + 1) as u64..=(d + 2) as u64 {
        let count = lattice_point_count(p, t, max_box)?;
        if poly.eval_int(t as i64) != Rat::from_integer(count.clone()) {
            return Err(Error::Integrity(format!(
                "Ehrhart interpolation disagrees with the count at t = {t}"
            )));
        }
    }
    Ok(poly)
}

fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// h* from the Ehrhart route: coordinates of the Ehrhart polynomial in the
/// binomial basis `C_k(t) = binom(t + d - k, d)`. The change of basis is
/// triangular at the integer nodes `t = 0..=d`. Coefficients must come out
/// as nonnegative integers with constant term 1.
pub fn hstar_from_ehrhart(p: &RootPolytope, max_box: u64) -> Result<Polynomial> {
    let d = p.dimension() as u64;
    let ehrhart = ehrhart_polynomial(p, max_box)?;
    let mut coeffs: Vec<Rat> = Vec::with_capacity(d as usize + 1);
    for t in 0..=d {
        let mut value = ehrhart.eval_int(t as i64);
        for (k, a) in coeffs.iter().enumerate() {
            let basis_value = binomial(t + d - k as u64, d);
            value -= a * Rat::from_integer(basis_value);
        }
        // C_t(t) = binom(d, d) = 1
        coeffs.push(value);
    }
    let hstar = Polynomial::from_rat_coeffs(coeffs);
    finalize_hstar(hstar, "Ehrhart")
}

/// h* from a dissecting set of bases via the h-polynomial of the simplicial
/// complex it spans: `sum h*_i t^i = t^(d+1) h(1/t)`.
///
/// The dissection is validated combinatorially first (unimodular basis
/// simplices meeting pairwise in common faces); coverage is the caller's
/// contract and is certified separately by the volume check in
/// [`RootPolytope::verify_triangulation`].
pub fn hstar_from_triangulation(p: &RootPolytope, dissection: &[ElemSet]) -> Result<Polynomial> {
    if !p.is_co_eulerian() {
        return Err(Error::Precondition("h* routes need a co-Eulerian representation".into()));
    }
    if dissection.is_empty() {
        return Err(Error::Precondition("empty dissection".into()));
    }
    for basis in dissection {
        if !p.rep().is_basis(basis)? {
            return Err(Error::Precondition("dissection contains a non-basis".into()));
        }
        if !p.is_simplex_unimodular(basis)? {
            return Err(Error::Precondition("dissection contains a non-unimodular simplex".into()));
        }
    }
    for (i, b1) in dissection.iter().enumerate() {
        for b2 in dissection.iter().skip(i + 1) {
            if !p.meet_in_common_face(b1, b2)? {
                return Err(Error::Precondition(
                    "dissection simplices do not meet in common faces".into(),
                ));
            }
        }
    }
    let rank = p.rep().rank();
    let mut faces: BTreeSet<ElemSet> = BTreeSet::new();
    for basis in dissection {
        let elems: Vec<usize> = basis.iter().copied().collect();
        for k in 0..=elems.len() {
            for subset in combinations(&elems, k) {
                faces.insert(subset.into_iter().collect());
            }
        }
    }
    let h = h_polynomial_of_faces(&faces, rank)?;
    let hstar = h.mirror(p.dimension() + 1)?;
    finalize_hstar(hstar, "triangulation")
}

/// h* as the histogram of internally semi-passive element counts over a
/// dissecting set of bases, in the label order.
pub fn hstar_from_semipassivity(p: &RootPolytope, dissection: &[ElemSet]) -> Result<Polynomial> {
    hstar_from_semipassivity_under(p, dissection, p.rep().labels())
}

/// [`hstar_from_semipassivity`] under an explicit element order.
pub fn hstar_from_semipassivity_under(
    p: &RootPolytope,
    dissection: &[ElemSet],
    order: &[usize],
) -> Result<Polynomial> {
    if !p.is_co_eulerian() {
        return Err(Error::Precondition("h* routes need a co-Eulerian representation".into()));
    }
    let mut histogram = vec![Rat::zero(); p.dimension() + 1];
    for basis in dissection {
        let count = p.rep().internal_semipassivity_under(basis, order)?;
        if count >= histogram.len() {
            histogram.resize(count + 1, Rat::zero());
        }
        histogram[count] += Rat::one();
    }
    finalize_hstar(Polynomial::from_rat_coeffs(histogram), "semi-passivity")
}

/// h* as the histogram of facet counts visible from the reference point
/// with weights `2^i`.
pub fn hstar_from_visibility(p: &RootPolytope, dissection: &[ElemSet]) -> Result<Polynomial> {
    if !p.is_co_eulerian() {
        return Err(Error::Precondition("h* routes need a co-Eulerian representation".into()));
    }
    let q = p.visibility_point();
    let mut histogram = vec![Rat::zero(); p.dimension() + 1];
    for basis in dissection {
        let count = p.visible_facet_count(basis, &q)?;
        if count >= histogram.len() {
            histogram.resize(count + 1, Rat::zero());
        }
        histogram[count] += Rat::one();
    }
    finalize_hstar(Polynomial::from_rat_coeffs(histogram), "visibility")
}

fn finalize_hstar(hstar: Polynomial, route: &str) -> Result<Polynomial> {
    if !hstar.is_integer() || !hstar.has_nonnegative_coeffs() {
        return Err(Error::Integrity(format!(
            "h* from the {route} route must have nonnegative integer coefficients, got {hstar}"
        )));
    }
    if hstar.coeff(0) != Rat::one() {
        return Err(Error::Integrity(format!(
            "h* from the {route} route must have constant term 1, got {hstar}"
        )));
    }
    Ok(hstar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::digraph::{example_digraph, Digraph};
    use crate::matroid::MatroidRep;
    use crate::polytope::arborescence_bases;
    use alloc::vec;

    fn four_edge_two_vertex() -> Digraph {
        Digraph::new(2, vec![(1, 2), (2, 1), (1, 2), (2, 1)]).unwrap()
    }

    fn dual_polytope(g: &Digraph) -> RootPolytope {
        let rep = MatroidRep::graphic(g).unwrap().dual().unwrap();
        RootPolytope::new(rep).unwrap()
    }

    #[test]
    fn counts_for_point_polytope() {
        let p = dual_polytope(&Digraph::directed_cycle(4).unwrap());
        for t in 0..5 {
            assert_eq!(lattice_point_count(&p, t, DEFAULT_MAX_BOX).unwrap(), int(1));
        }
        let e = ehrhart_polynomial(&p, DEFAULT_MAX_BOX).unwrap();
        assert_eq!(e, Polynomial::from_int_coeffs(&[1]));
        let h = hstar_from_ehrhart(&p, DEFAULT_MAX_BOX).unwrap();
        assert_eq!(h, Polynomial::from_int_coeffs(&[1]));
    }

    #[test]
    fn counts_for_bundle_dual() {
        let p = dual_polytope(&four_edge_two_vertex());
        assert_eq!(lattice_point_count(&p, 0, DEFAULT_MAX_BOX).unwrap(), int(1));
        // frozen from the brute-force scan itself: the four distinct columns
        // are the only lattice points of the undilated polytope
        assert_eq!(lattice_point_count(&p, 1, DEFAULT_MAX_BOX).unwrap(), int(4));
        let h = hstar_from_ehrhart(&p, DEFAULT_MAX_BOX).unwrap();
        assert_eq!(h, Polynomial::from_int_coeffs(&[1, 1]));
    }

    #[test]
    fn contains_in_dilate_vertices_and_outside() {
        let p = dual_polytope(&four_edge_two_vertex());
        for t in 1..3u64 {
            for label in p.rep().labels().to_vec() {
                let col = p.rep().column_of(label).unwrap();
                let scaled: Vec<Int> = col.iter().map(|c| c * Int::from(t)).collect();
                assert!(contains_in_dilate(&p, &scaled, t).unwrap());
            }
        }
        let outside: Vec<Int> = (0..p.ambient_dim()).map(|_| int(9)).collect();
        assert!(!contains_in_dilate(&p, &outside, 1).unwrap());
    }

    #[test]
    fn membership_agrees_with_triangulation_oracle() {
        // independent oracle: a point is in t*P iff it lies in some
        // t-dilated arborescence-complement simplex of the verified
        // triangulation
        let g = example_digraph();
        let p = dual_polytope(&g);
        let tri = arborescence_bases(&g, 1).unwrap();
        let tri_indices: Vec<usize> = tri
            .iter()
            .map(|b| p.bases().iter().position(|x| x == b).unwrap())
            .collect();
        let t = Int::from(2u32);
        let n = p.ambient_dim();
        // probe a small grid slab around the polytope
        let mut probe = vec![0i64; n];
        let mut checked = 0;
        loop {
            let point: Vec<Int> = probe.iter().map(|&v| Int::from(v)).collect();
            let direct = contains_in_dilate(&p, &point, 2).unwrap();
            let via_triangulation = tri_indices
                .iter()
                .any(|&bi| p.simplex_contains_int(bi, &point, &t));
            assert_eq!(direct, via_triangulation);
            checked += 1;
            // advance the probe through {-1, 0, 1, 2}^n
            let mut i = 0;
            loop {
                if i == n {
                    assert!(checked > 0);
                    return;
                }
                probe[i] += 1;
                if probe[i] <= 2 {
                    break;
                }
                probe[i] = -1;
                i += 1;
            }
        }
    }

    #[test]
    fn ehrhart_leading_coefficient_is_normalized_volume() {
        let g = example_digraph();
        let p = dual_polytope(&g);
        let e = ehrhart_polynomial(&p, DEFAULT_MAX_BOX).unwrap();
        let d = p.dimension();
        // leading coefficient * d! = arborescence count
        let mut factorial = int(1);
        for k in 2..=d as i64 {
            factorial *= int(k);
        }
        let lead = e.coeff(d) * Rat::from_integer(factorial);
        assert_eq!(lead, Rat::from_integer(g.arborescence_count(1).unwrap()));
    }

    #[test]
    fn all_routes_agree_on_the_example() {
        let g = example_digraph();
        let p = dual_polytope(&g);
        let tri = arborescence_bases(&g, 1).unwrap();
        let from_ehrhart = hstar_from_ehrhart(&p, DEFAULT_MAX_BOX).unwrap();
        let from_tri = hstar_from_triangulation(&p, &tri).unwrap();
        let from_semi = hstar_from_semipassivity(&p, &tri).unwrap();
        let from_vis = hstar_from_visibility(&p, &tri).unwrap();
        assert_eq!(from_ehrhart, from_tri);
        assert_eq!(from_ehrhart, from_semi);
        assert_eq!(from_ehrhart, from_vis);
        // sum of h* coefficients is the arborescence count
        assert_eq!(
            from_ehrhart.eval_int(1),
            Rat::from_integer(g.arborescence_count(1).unwrap())
        );
    }

    #[test]
    fn triangulation_route_on_two_simplex_dissection() {
        let g = four_edge_two_vertex();
        let p = dual_polytope(&g);
        let tri = arborescence_bases(&g, 1).unwrap();
        assert_eq!(tri.len(), 2);
        let h = hstar_from_triangulation(&p, &tri).unwrap();
        assert_eq!(h, Polynomial::from_int_coeffs(&[1, 1]));
        // single-simplex dissection of the cycle dual
        let c = Digraph::directed_cycle(3).unwrap();
        let pc = dual_polytope(&c);
        let tric = arborescence_bases(&c, 1).unwrap();
        assert_eq!(hstar_from_triangulation(&pc, &tric).unwrap(), Polynomial::one());
    }

    #[test]
    fn semipassivity_route_is_order_invariant_on_example() {
        let g = four_edge_two_vertex();
        let p = dual_polytope(&g);
        let tri = arborescence_bases(&g, 1).unwrap();
        let reference = hstar_from_semipassivity(&p, &tri).unwrap();
        let orders: [&[usize]; 3] = [&[4, 3, 2, 1], &[2, 4, 1, 3], &[3, 1, 4, 2]];
        for order in orders {
            assert_eq!(
                hstar_from_semipassivity_under(&p, &tri, order).unwrap(),
                reference
            );
        }
    }

    #[test]
    fn scan_cap_is_enforced() {
        let g = example_digraph();
        let p = dual_polytope(&g);
        assert!(matches!(
            lattice_point_count(&p, 3, 1),
            Err(Error::SizeCap(_))
        ));
    }
}
