//! The root polytope of a totally unimodular representation: the convex hull
//! of the column vectors.
//!
//! For a co-Eulerian representation the polytope has dimension `rank - 1`,
//! affine independence of columns coincides with matroid independence, and
//! every basis spans a unimodular simplex of maximal dimension. Complements
//! of arborescences of an Eulerian digraph triangulate the root polytope of
//! the dual representation; the point-location walk below retraces the
//! constructive proof, descending strictly in the tree order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat_sum, Int, IntMatrix, Rat};
use crate::digraph::{Digraph, EdgeSet};
use crate::matroid::{ElemSet, MatroidRep};
use crate::util::combinations;
use crate::{Error, Result};

/// Membership solver for one basis simplex. TU basis minors are ±1, so the
/// square submatrix on a fixed row basis has an integer inverse; the general
/// fallback solves the affine system rationally each time and only arises
/// for non-TU columns fed in by construction.
#[derive(Debug, Clone)]
enum BasisSolver {
    Unimodular {
        inverse: IntMatrix,
        column_positions: Vec<usize>,
    },
    General {
        column_positions: Vec<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct RootPolytope {
    rep: MatroidRep,
    dimension: usize,
    co_eulerian: bool,
    bases: Vec<ElemSet>,
    circuits: Vec<crate::SignedSet>,
    row_basis: Vec<usize>,
    solvers: Vec<Option<BasisSolver>>,
}

/// One defect found while certifying a triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangulationFailure {
    NotABasis(ElemSet),
    NotUnimodular(ElemSet),
    NotCommonFace(ElemSet, ElemSet),
    VolumeMismatch { simplices: usize, volume: Int },
}

/// Certificate produced by [`RootPolytope::verify_triangulation`]: the listed
/// simplices are unimodular and full-dimensional, pairwise meet in common
/// faces, and their count equals the normalized volume from the Ehrhart
/// route — together this certifies a triangulation covering the polytope.
#[derive(Debug, Clone)]
pub struct TriangulationReport {
    pub simplex_count: usize,
    pub volume: Int,
    pub failures: Vec<TriangulationFailure>,
}

impl TriangulationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Result of the point-location walk: the containing arborescence-complement
/// basis and the trees visited on the way, strictly descending in the tree
/// order.
#[derive(Debug, Clone)]
pub struct LocateOutcome {
    pub basis: ElemSet,
    pub coefficients: BTreeMap<usize, Rat>,
    pub visited_trees: Vec<EdgeSet>,
}

impl RootPolytope {
    pub fn new(rep: MatroidRep) -> Result<Self> {
        let rank = rep.rank();
        if rank == 0 {
            return Err(Error::Precondition("root polytope needs positive rank".into()));
        }
        let circuits = rep.circuits()?;
        let co_eulerian = circuits.iter().all(|c| c.positive.len() == c.negative.len());
        let dimension = affine_dimension(rep.matrix())?;
        let expected = if co_eulerian { rank - 1 } else { rank };
        if dimension != expected {
            return Err(Error::Integrity(format!(
                "affine dimension {dimension} contradicts rank {rank} (co-Eulerian: {co_eulerian})"
            )));
        }
        let bases = rep.bases()?;
        let row_basis = rep.matrix().row_basis();
        let mut solvers = Vec::with_capacity(bases.len());
        for basis in &bases {
            solvers.push(if co_eulerian {
                Some(build_solver(&rep, &row_basis, basis)?)
            } else {
                None
            });
        }
        Ok(RootPolytope {
            rep,
            dimension,
            co_eulerian,
            bases,
            circuits,
            row_basis,
            solvers,
        })
    }

    pub fn rep(&self) -> &MatroidRep {
        &self.rep
    }

    /// Affine dimension of the vertex set: `rank - 1` for co-Eulerian
    /// representations and `rank` otherwise.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_co_eulerian(&self) -> bool {
        self.co_eulerian
    }

    pub fn ambient_dim(&self) -> usize {
        self.rep.matrix().rows()
    }

    pub fn bases(&self) -> &[ElemSet] {
        &self.bases
    }

    pub fn circuits(&self) -> &[crate::SignedSet] {
        &self.circuits
    }

    fn require_co_eulerian(&self) -> Result<()> {
        if !self.co_eulerian {
            return Err(Error::Precondition("representation is not co-Eulerian".into()));
        }
        Ok(())
    }

    /// Whether the basis columns generate every lattice point of their
    /// linear span (gcd of maximal minors is 1). Combined with the
    /// co-Eulerian precondition this is exactly unimodularity of the basis
    /// simplex, because linear dependences are then affine dependences.
    pub fn is_simplex_unimodular(&self, basis: &ElemSet) -> Result<bool> {
        self.require_co_eulerian()?;
        if !self.rep.is_basis(basis)? {
            return Err(Error::Precondition("not a basis".into()));
        }
        let positions: Vec<usize> = basis
            .iter()
            .map(|&l| self.rep.labels().iter().position(|&x| x == l).unwrap())
            .collect();
        let cols = self.rep.matrix().select_columns(&positions)?;
        let r = basis.len();
        let rows: Vec<usize> = (0..cols.rows()).collect();
        let mut gcd = Int::zero();
        for row_set in combinations(&rows, r) {
            let minor = cols.select_rows(&row_set)?.determinant()?;
            gcd = gcd.gcd(&minor);
            if gcd.is_one() {
                return Ok(true);
            }
        }
        Ok(gcd.is_one())
    }

    /// Purely combinatorial common-face criterion: the simplices of two
    /// bases meet in a common face iff no circuit has its positive part in
    /// one basis and its negative part in the other (both orientations of
    /// every circuit are tested).
    pub fn meet_in_common_face(&self, b1: &ElemSet, b2: &ElemSet) -> Result<bool> {
        self.require_co_eulerian()?;
        if !self.rep.is_basis(b1)? || !self.rep.is_basis(b2)? {
            return Err(Error::Precondition("not a basis".into()));
        }
        for circuit in &self.circuits {
            let forward = circuit.positive.is_subset(b1) && circuit.negative.is_subset(b2);
            let backward = circuit.negative.is_subset(b1) && circuit.positive.is_subset(b2);
            if forward || backward {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The reference point `q` with weights `2^i / sum 2^j` in label order.
    /// The dominant weight of the largest support element keeps `q` off
    /// every basis-facet hyperplane, so it is in general position for
    /// visibility counts.
    pub fn visibility_point(&self) -> Vec<Rat> {
        self.visibility_point_under(self.rep.labels())
    }

    /// [`Self::visibility_point`] with weights assigned along an explicit
    /// element order (a permutation of the labels).
    pub fn visibility_point_under(&self, order: &[usize]) -> Vec<Rat> {
        let m = self.rep.size();
        let mut total = Int::zero();
        let mut weight_of: BTreeMap<usize, Int> = BTreeMap::new();
        let mut w = Int::one();
        for &label in order {
            w = &w * Int::from(2);
            weight_of.insert(label, w.clone());
            total += &w;
        }
        debug_assert_eq!(weight_of.len(), m);
        let mut point = alloc::vec![Rat::zero(); self.ambient_dim()];
        for (pos, label) in self.rep.labels().iter().enumerate() {
            let col = self.rep.matrix().column(pos);
            let weight = Rat::new(weight_of[label].clone(), total.clone());
            for (j, c) in col.iter().enumerate() {
                point[j] += Rat::from_integer(c.clone()) * &weight;
            }
        }
        point
    }

    /// Number of facets of the basis simplex visible from `q`: facets
    /// `B - k` whose functional (normalized to +1 on the column of `k`) is
    /// strictly negative at `q`.
    pub fn visible_facet_count(&self, basis: &ElemSet, q: &[Rat]) -> Result<usize> {
        self.require_co_eulerian()?;
        if q.len() != self.ambient_dim() {
            return Err(Error::Dimension("reference point has wrong length".into()));
        }
        let mut visible = 0;
        for &k in basis {
            let functional = self.rep.cocircuit_functional(basis, k)?;
            let mut value = Rat::zero();
            for (y, x) in functional.iter().zip(q.iter()) {
                value += y * x;
            }
            if value.is_zero() {
                return Err(Error::DegeneratePosition);
            }
            if value.is_negative() {
                visible += 1;
            }
        }
        Ok(visible)
    }

    /// Whether the integer point lies in `t * simplex` of the given basis.
    /// Uses the integer-inverse fast path when available.
    pub(crate) fn simplex_contains_int(&self, basis_index: usize, point: &[Int], t: &Int) -> bool {
        match self.solvers[basis_index].as_ref() {
            Some(BasisSolver::Unimodular {
                inverse,
                column_positions,
            }) => {
                let sub: Vec<Int> = self.row_basis.iter().map(|&i| point[i].clone()).collect();
                // reject on the first negative coordinate
                let mut coords: Vec<Int> = Vec::with_capacity(inverse.rows());
                let mut total = Int::zero();
                for i in 0..inverse.rows() {
                    let mut acc = Int::zero();
                    for (j, x) in sub.iter().enumerate() {
                        acc += inverse.entry(i, j) * x;
                    }
                    if acc.is_negative() {
                        return false;
                    }
                    total += &acc;
                    coords.push(acc);
                }
                if &total != t {
                    return false;
                }
                // verify rows outside the row basis
                let matrix = self.rep.matrix();
                for i in 0..matrix.rows() {
                    if self.row_basis.contains(&i) {
                        continue;
                    }
                    let mut acc = Int::zero();
                    for (c, &pos) in coords.iter().zip(column_positions) {
                        acc += c * matrix.entry(i, pos);
                    }
                    if acc != point[i] {
                        return false;
                    }
                }
                true
            }
            Some(BasisSolver::General { .. }) => {
                let point_rat: Vec<Rat> =
                    point.iter().map(|v| Rat::from_integer(v.clone())).collect();
                self.coords_in_simplex_rat(basis_index, &point_rat, &Rat::from_integer(t.clone()))
                    .is_some()
            }
            None => false,
        }
    }

    /// Exact barycentric coordinates of a rational point in the simplex
    /// dilated to total mass `total` (1 for the undilated polytope), or
    /// `None` when the point is outside.
    pub(crate) fn coords_in_simplex_rat(
        &self,
        basis_index: usize,
        point: &[Rat],
        total: &Rat,
    ) -> Option<Vec<Rat>> {
        let solver = self.solvers[basis_index].as_ref()?;
        let coords = match solver {
            BasisSolver::Unimodular { inverse, .. } => {
                let sub: Vec<Rat> = self.row_basis.iter().map(|&i| point[i].clone()).collect();
                let mut coords = alloc::vec![Rat::zero(); inverse.cols()];
                for (i, coord) in coords.iter_mut().enumerate() {
                    let mut acc = Rat::zero();
                    for (j, x) in sub.iter().enumerate() {
                        acc += Rat::from_integer(inverse.entry(i, j).clone()) * x;
                    }
                    *coord = acc;
                }
                coords
            }
            BasisSolver::General { column_positions } => {
                // stacked affine system: columns plus the all-ones row
                let matrix = self.rep.matrix();
                let n = matrix.rows();
                let stacked = IntMatrix::from_fn(n + 1, column_positions.len(), |i, j| {
                    if i < n {
                        matrix.entry(i, column_positions[j]).clone()
                    } else {
                        Int::one()
                    }
                })
                .ok()?;
                let mut rhs: Vec<Rat> = point.to_vec();
                rhs.push(total.clone());
                stacked.solve(&rhs).ok()??
            }
        };
        if coords.iter().any(|c| c.is_negative()) {
            return None;
        }
        if &rat_sum(&coords) != total {
            return None;
        }
        let column_positions = match solver {
            BasisSolver::Unimodular {
                column_positions, ..
            }
            | BasisSolver::General { column_positions } => column_positions,
        };
        let matrix = self.rep.matrix();
        for i in 0..matrix.rows() {
            if matches!(solver, BasisSolver::Unimodular { .. }) && self.row_basis.contains(&i) {
                continue;
            }
            let mut acc = Rat::zero();
            for (c, &pos) in coords.iter().zip(column_positions) {
                acc += c * Rat::from_integer(matrix.entry(i, pos).clone());
            }
            if acc != point[i] {
                return None;
            }
        }
        Some(coords)
    }

    /// Certifies that the given bases triangulate the polytope:
    /// (a) every simplex is a unimodular basis simplex of maximal dimension,
    /// (b) every pair meets in a common face, and
    /// (c) the simplex count equals the normalized volume from the Ehrhart
    /// route. Any failed check identifies the offending basis or pair.
    pub fn verify_triangulation(
        &self,
        dissection: &[ElemSet],
        max_box: u64,
    ) -> Result<TriangulationReport> {
        self.require_co_eulerian()?;
        let mut failures = Vec::new();
        for basis in dissection {
            if !self.rep.is_basis(basis)? {
                failures.push(TriangulationFailure::NotABasis(basis.clone()));
                continue;
            }
            if !self.is_simplex_unimodular(basis)? {
                failures.push(TriangulationFailure::NotUnimodular(basis.clone()));
            }
        }
        for (i, b1) in dissection.iter().enumerate() {
            if !self.rep.is_basis(b1)? {
                continue;
            }
            for b2 in dissection.iter().skip(i + 1) {
                if !self.rep.is_basis(b2)? {
                    continue;
                }
                if !self.meet_in_common_face(b1, b2)? {
                    failures.push(TriangulationFailure::NotCommonFace(b1.clone(), b2.clone()));
                }
            }
        }
        let hstar = crate::ehrhart::hstar_from_ehrhart(self, max_box)?;
        let volume = hstar.eval_int(1).to_integer();
        if volume != Int::from(dissection.len()) {
            failures.push(TriangulationFailure::VolumeMismatch {
                simplices: dissection.len(),
                volume: volume.clone(),
            });
        }
        Ok(TriangulationReport {
            simplex_count: dissection.len(),
            volume,
            failures,
        })
    }

    /// Locates a point of the polytope in the arborescence triangulation:
    /// starts from any containing tree-complement simplex and repeatedly
    /// applies the fundamental-cut coefficient shift, descending strictly in
    /// the tree order until the tree is an arborescence.
    ///
    /// The polytope must be the dual representation of `g`'s graphic matroid
    /// with labels equal to edge ids.
    pub fn locate_point(&self, g: &Digraph, root: usize, point: &[Rat]) -> Result<LocateOutcome> {
        self.require_co_eulerian()?;
        if !g.is_eulerian() {
            return Err(Error::Precondition("graph must be Eulerian".into()));
        }
        if self.rep.size() != g.edge_count() {
            return Err(Error::Dimension("polytope does not match the graph".into()));
        }
        if point.len() != self.ambient_dim() {
            return Err(Error::Dimension("point has wrong length".into()));
        }
        let all_edges: EdgeSet = g.edge_ids().collect();
        let one = Rat::one();
        // initial containing simplex: lexicographic scan over bases
        let mut located: Option<(ElemSet, BTreeMap<usize, Rat>)> = None;
        for (bi, basis) in self.bases.iter().enumerate() {
            if let Some(coords) = self.coords_in_simplex_rat(bi, point, &one) {
                let mut map = BTreeMap::new();
                for (label, c) in basis.iter().zip(coords) {
                    map.insert(*label, c);
                }
                located = Some((basis.clone(), map));
                break;
            }
        }
        let Some((mut basis, mut coeffs)) = located else {
            return Err(Error::NotContained);
        };
        let mut visited = Vec::new();
        let tree_bound = self.bases.len();
        loop {
            let tree: EdgeSet = all_edges.difference(&basis).copied().collect();
            visited.push(tree.clone());
            if g.is_arborescence(&tree, root) {
                return Ok(LocateOutcome {
                    basis,
                    coefficients: coeffs,
                    visited_trees: visited,
                });
            }
            if visited.len() > tree_bound {
                return Err(Error::Integrity("walk exceeded the spanning-tree count".into()));
            }
            // first listed tree edge pointing toward the root
            let list = g.burning_edge_list(root, &tree)?;
            let e = list
                .iter()
                .find(|entry| entry.in_tree && entry.toward_root)
                .map(|entry| entry.edge)
                .ok_or_else(|| {
                    Error::Integrity("non-arborescence tree has no edge toward the root".into())
                })?;
            let cut = g.fundamental_cut(&tree, e)?;
            // smallest coefficient on the negative side goes to zero
            let mut step: Option<Rat> = None;
            let mut leaving: Option<usize> = None;
            for &f in &cut.negative {
                let value = coeffs.get(&f).cloned().unwrap_or_else(Rat::zero);
                if step.as_ref().is_none_or(|s| &value < s) {
                    step = Some(value);
                    leaving = Some(f);
                }
            }
            let (step, leaving) = match (step, leaving) {
                (Some(s), Some(f)) => (s, f),
                _ => return Err(Error::Integrity("fundamental cut has empty negative side".into())),
            };
            for &f in &cut.positive {
                let entry = coeffs.entry(f).or_insert_with(Rat::zero);
                *entry = &*entry + &step;
            }
            for &f in &cut.negative {
                let entry = coeffs.entry(f).or_insert_with(Rat::zero);
                *entry = &*entry - &step;
            }
            coeffs.retain(|_, v| !v.is_zero());
            let mut next_basis = basis.clone();
            next_basis.insert(e);
            next_basis.remove(&leaving);
            // the walk must strictly descend in the tree order
            let next_tree: EdgeSet = all_edges.difference(&next_basis).copied().collect();
            if g.compare_trees(root, &next_tree, &tree)? != core::cmp::Ordering::Less {
                return Err(Error::Integrity("walk failed to descend in the tree order".into()));
            }
            basis = next_basis;
        }
    }
}

/// Complements of the spanning arborescences rooted at `root`, as bases of
/// the dual of the graphic matroid.
pub fn arborescence_bases(g: &Digraph, root: usize) -> Result<Vec<ElemSet>> {
    if !g.is_eulerian() {
        return Err(Error::Precondition("graph must be Eulerian".into()));
    }
    let all: ElemSet = g.edge_ids().collect();
    Ok(g
        .arborescences(root)?
        .into_iter()
        .map(|arb| all.difference(&arb).copied().collect())
        .collect())
}

/// Affine dimension of the column vectors: rank of the matrix extended by an
/// all-ones row, minus one.
fn affine_dimension(matrix: &IntMatrix) -> Result<usize> {
    let mut stacked_entries = Vec::new();
    for i in 0..matrix.rows() {
        stacked_entries.extend(matrix.row(i).iter().cloned());
    }
    stacked_entries.extend((0..matrix.cols()).map(|_| Int::one()));
    let stacked = IntMatrix::new(matrix.rows() + 1, matrix.cols(), stacked_entries)?;
    Ok(stacked.rank() - 1)
}

fn build_solver(rep: &MatroidRep, row_basis: &[usize], basis: &ElemSet) -> Result<BasisSolver> {
    let column_positions: Vec<usize> = basis
        .iter()
        .map(|&l| {
            rep.labels()
                .iter()
                .position(|&x| x == l)
                .ok_or_else(|| Error::Precondition(format!("unknown element {l}")))
        })
        .collect::<Result<_>>()?;
    let square = rep
        .matrix()
        .select_rows(row_basis)?
        .select_columns(&column_positions)?;
    match square.unimodular_inverse() {
        Ok(inverse) => Ok(BasisSolver::Unimodular {
            inverse,
            column_positions,
        }),
        Err(Error::Precondition(_)) => Ok(BasisSolver::General { column_positions }),
        Err(other) => Err(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::digraph::{example_digraph, Digraph};
    use alloc::vec;

    fn four_edge_two_vertex() -> Digraph {
        Digraph::new(2, vec![(1, 2), (2, 1), (1, 2), (2, 1)]).unwrap()
    }

    fn dual_polytope(g: &Digraph) -> RootPolytope {
        let rep = MatroidRep::graphic(g).unwrap().dual().unwrap();
        RootPolytope::new(rep).unwrap()
    }

    #[test]
    fn dimension_formula_both_cases() {
        // co-Eulerian dual of the n-cycle: a single point
        let p = dual_polytope(&Digraph::directed_cycle(4).unwrap());
        assert!(p.is_co_eulerian());
        assert_eq!(p.dimension(), 0);

        // dual of the 6-vertex example: rank 4, dimension 3
        let p = dual_polytope(&example_digraph());
        assert!(p.is_co_eulerian());
        assert_eq!(p.dimension(), 3);

        // graphic matroid of the n-cycle is not co-Eulerian: dimension = rank
        let rep = MatroidRep::graphic(&Digraph::directed_cycle(4).unwrap()).unwrap();
        let p = RootPolytope::new(rep).unwrap();
        assert!(!p.is_co_eulerian());
        assert_eq!(p.dimension(), 3);
    }

    #[test]
    fn basis_simplices_are_unimodular() {
        for g in [
            Digraph::directed_cycle(3).unwrap(),
            four_edge_two_vertex(),
            example_digraph(),
        ] {
            let p = dual_polytope(&g);
            for basis in p.bases().to_vec() {
                assert!(p.is_simplex_unimodular(&basis).unwrap());
            }
        }
    }

    #[test]
    fn non_unimodular_counterexample() {
        // rank-1 representation by the single column (2): vacuously
        // co-Eulerian, but the column does not generate the lattice
        let rep = MatroidRep::from_construction(IntMatrix::from_i64(1, 1, &[2]).unwrap(), vec![1]);
        let p = RootPolytope::new(rep).unwrap();
        assert!(!p.is_simplex_unimodular(&[1].into()).unwrap());
    }

    #[test]
    fn common_face_examples() {
        let p = dual_polytope(&four_edge_two_vertex());
        // complements of the arborescences {e1} and {e3}
        let b1: ElemSet = [2, 3, 4].into();
        let b2: ElemSet = [1, 2, 4].into();
        assert!(p.meet_in_common_face(&b1, &b1).unwrap());
        assert!(p.meet_in_common_face(&b1, &b2).unwrap());

        // complements of the two trees of the 2-cycle share no common face:
        // the cut {e1+, e2-} fits between them
        let g2 = Digraph::new(2, vec![(1, 2), (2, 1)]).unwrap();
        let p2 = dual_polytope(&g2);
        let t1_complement: ElemSet = [2].into();
        let t2_complement: ElemSet = [1].into();
        assert!(!p2.meet_in_common_face(&t1_complement, &t2_complement).unwrap());
    }

    #[test]
    fn arborescence_bases_of_example() {
        let g = example_digraph();
        let bases = arborescence_bases(&g, 1).unwrap();
        let distinguished: ElemSet = [2, 4, 5, 9].into();
        assert!(bases.contains(&distinguished));
        let p = dual_polytope(&g);
        for b in &bases {
            assert!(p.rep().is_basis(b).unwrap());
        }
        // single basis for the directed cycle
        assert_eq!(
            arborescence_bases(&Digraph::directed_cycle(5).unwrap(), 2).unwrap().len(),
            1
        );
        // non-Eulerian input refused
        let path = Digraph::new(2, vec![(1, 2)]).unwrap();
        assert!(arborescence_bases(&path, 1).is_err());
    }

    #[test]
    fn visibility_point_lies_in_polytope() {
        let p = dual_polytope(&example_digraph());
        let q = p.visibility_point();
        let mut found = false;
        for bi in 0..p.bases().len() {
            if p.coords_in_simplex_rat(bi, &q, &rat(1)).is_some() {
                found = true;
                break;
            }
        }
        assert!(found, "visibility point must lie in some basis simplex");
    }

    #[test]
    fn visibility_point_in_general_position() {
        for g in [four_edge_two_vertex(), example_digraph()] {
            let p = dual_polytope(&g);
            let q = p.visibility_point();
            for basis in p.bases().to_vec() {
                // no facet functional vanishes at q
                assert!(p.visible_facet_count(&basis, &q).is_ok());
            }
        }
    }

    #[test]
    fn single_point_polytope_has_no_visible_facets() {
        let p = dual_polytope(&Digraph::directed_cycle(3).unwrap());
        let q = p.visibility_point();
        let basis = p.bases()[0].clone();
        assert_eq!(p.visible_facet_count(&basis, &q).unwrap(), 0);
    }

    #[test]
    fn locate_point_at_vertex_and_barycenter() {
        let g = four_edge_two_vertex();
        let p = dual_polytope(&g);
        // a vertex of the polytope: the column of edge 2
        let col = p.rep().column_of(2).unwrap();
        let point: Vec<Rat> = col.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let outcome = p.locate_point(&g, 1, &point).unwrap();
        assert!(outcome.basis.contains(&2));

        // barycenter of a non-arborescence tree complement
        let tree: EdgeSet = [2].into(); // e2 points toward root 1
        let all: ElemSet = g.edge_ids().collect();
        let complement: ElemSet = all.difference(&tree).copied().collect();
        let weights: Vec<Rat> = p
            .rep()
            .labels()
            .iter()
            .map(|l| {
                if complement.contains(l) {
                    Rat::new(int(1), int(3))
                } else {
                    rat(0)
                }
            })
            .collect();
        let point = p.rep().matrix().mul_rat_vec(&weights).unwrap();
        let outcome = p.locate_point(&g, 1, &point).unwrap();
        let final_tree: EdgeSet = all.difference(&outcome.basis).copied().collect();
        assert!(g.is_arborescence(&final_tree, 1));
        // the returned coefficients reproduce the point exactly
        let coeff_vec: Vec<Rat> = p
            .rep()
            .labels()
            .iter()
            .map(|l| outcome.coefficients.get(l).cloned().unwrap_or_else(Rat::zero))
            .collect();
        assert_eq!(p.rep().matrix().mul_rat_vec(&coeff_vec).unwrap(), point);
    }

    #[test]
    fn locate_point_rejects_outside_points() {
        let g = four_edge_two_vertex();
        let p = dual_polytope(&g);
        let outside: Vec<Rat> = (0..p.ambient_dim()).map(|_| rat(5)).collect();
        assert!(matches!(p.locate_point(&g, 1, &outside), Err(Error::NotContained)));
    }
}
