//! The branching greedoid of a rooted digraph and its greedoid polynomial.
//!
//! Accessible sets are the arborescences rooted at the fixed vertex; bases
//! are the spanning arborescences. The greedoid polynomial is computed by
//! six routes that must agree exactly for Eulerian digraphs: the activity
//! generating function (lexicographic definition), external semi-activity,
//! the h-polynomial of the dual complex, and three h*-routes through the
//! root polytope of the dual representation.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::Rat;
use crate::digraph::{Digraph, EdgeSet};
use crate::ehrhart;
use crate::matroid::{ElemSet, MatroidRep};
use crate::poly::Polynomial;
use crate::polytope::{arborescence_bases, RootPolytope};
use crate::util::combinations;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct BranchingGreedoid {
    graph: Digraph,
    root: usize,
}

/// The dual complex: all edge sets whose complement contains a basis.
/// Maximal faces are the basis complements, so the complex is pure.
#[derive(Debug, Clone)]
pub struct DualComplex {
    faces: BTreeSet<ElemSet>,
    max_face_size: usize,
}

impl DualComplex {
    pub fn faces(&self) -> &BTreeSet<ElemSet> {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Dimension of the complex; -1 for the complex containing only the
    /// empty face.
    pub fn dimension(&self) -> isize {
        self.max_face_size as isize - 1
    }
}

/// The six computation routes for the greedoid polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaMethod {
    Activity,
    Semiactivity,
    DualComplex,
    HstarEhrhart,
    HstarSemipassivity,
    HstarTriangulation,
}

impl LambdaMethod {
    pub const ALL: [LambdaMethod; 6] = [
        LambdaMethod::Activity,
        LambdaMethod::Semiactivity,
        LambdaMethod::DualComplex,
        LambdaMethod::HstarEhrhart,
        LambdaMethod::HstarSemipassivity,
        LambdaMethod::HstarTriangulation,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LambdaMethod::Activity => "activity",
            LambdaMethod::Semiactivity => "semiactivity",
            LambdaMethod::DualComplex => "dual_complex",
            LambdaMethod::HstarEhrhart => "hstar_ehrhart",
            LambdaMethod::HstarSemipassivity => "hstar_semipassivity",
            LambdaMethod::HstarTriangulation => "hstar_triangulation",
        }
    }

    pub fn parse(name: &str) -> Option<LambdaMethod> {
        Self::ALL.into_iter().find(|m| m.name() == name)
    }

    /// Routes through the root polytope require an Eulerian digraph.
    pub fn needs_eulerian(&self) -> bool {
        matches!(
            self,
            LambdaMethod::HstarEhrhart
                | LambdaMethod::HstarSemipassivity
                | LambdaMethod::HstarTriangulation
        )
    }
}

impl BranchingGreedoid {
    pub fn new(graph: Digraph, root: usize) -> Result<Self> {
        if root == 0 || root > graph.vertex_count() {
            return Err(Error::Graph(format!("root {root} out of range")));
        }
        if !graph.is_connected() {
            return Err(Error::Precondition("graph must be connected".into()));
        }
        Ok(BranchingGreedoid { graph, root })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Accessible sets are arborescences rooted at the root, the empty set
    /// included.
    pub fn is_feasible(&self, set: &EdgeSet) -> bool {
        self.graph.is_arborescence(set, self.root)
    }

    /// Bases: the spanning arborescences.
    pub fn bases(&self) -> Result<Vec<EdgeSet>> {
        self.graph.arborescences(self.root)
    }

    /// The lexicographically minimal feasible ordering of a basis: greedily
    /// append the smallest edge keeping the prefix feasible. Every prefix of
    /// the result is an arborescence.
    pub fn lex_min_feasible_ordering(&self, basis: &EdgeSet) -> Result<Vec<usize>> {
        if !self.graph.is_spanning_arborescence(basis, self.root) {
            return Err(Error::Precondition("not a spanning arborescence".into()));
        }
        let mut remaining = basis.clone();
        let mut prefix = EdgeSet::new();
        let mut ordering = Vec::with_capacity(basis.len());
        while !remaining.is_empty() {
            let next = remaining
                .iter()
                .copied()
                .find(|&e| {
                    let mut candidate = prefix.clone();
                    candidate.insert(e);
                    self.is_feasible(&candidate)
                })
                .ok_or_else(|| Error::Integrity("basis has no feasible extension".into()))?;
            prefix.insert(next);
            remaining.remove(&next);
            ordering.push(next);
        }
        Ok(ordering)
    }

    /// Greedoid external activity, by the lexicographic definition: `e` is
    /// active in `B` when for every `f` with `B - f + e` feasible, the
    /// lexicographically minimal feasible ordering of `B` is smaller than
    /// that of `B - f + e`. Vacuously active when no such `f` exists.
    pub fn is_externally_active(&self, basis: &EdgeSet, e: usize) -> Result<bool> {
        if basis.contains(&e) {
            return Err(Error::Precondition(format!("edge {e} lies in the basis")));
        }
        if e == 0 || e > self.graph.edge_count() {
            return Err(Error::Graph(format!("edge id {e} out of range")));
        }
        if !self.graph.is_spanning_arborescence(basis, self.root) {
            return Err(Error::Precondition("not a spanning arborescence".into()));
        }
        let own_ordering = self.lex_min_feasible_ordering(basis)?;
        for &f in basis {
            let mut swapped = basis.clone();
            swapped.remove(&f);
            swapped.insert(e);
            if !self.graph.is_spanning_arborescence(&swapped, self.root) {
                continue;
            }
            let other_ordering = self.lex_min_feasible_ordering(&swapped)?;
            if own_ordering >= other_ordering {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of externally active edges of a basis.
    pub fn external_activity(&self, basis: &EdgeSet) -> Result<usize> {
        let mut count = 0;
        for e in self.graph.edge_ids() {
            if !basis.contains(&e) && self.is_externally_active(basis, e)? {
                count += 1;
            }
        }
        Ok(count)
    }

    /// The dual complex: all subsets of all basis complements, deduplicated.
    pub fn dual_complex(&self) -> Result<DualComplex> {
        let bases = self.bases()?;
        if bases.is_empty() {
            return Err(Error::Precondition("greedoid has no basis".into()));
        }
        let m = self.graph.edge_count();
        let complement_size = m - bases[0].len();
        if complement_size > 16 {
            return Err(Error::SizeCap(format!(
                "dual complex needs 2^{complement_size} subsets per basis"
            )));
        }
        let all: ElemSet = self.graph.edge_ids().collect();
        let mut faces: BTreeSet<ElemSet> = BTreeSet::new();
        for basis in &bases {
            let complement: Vec<usize> = all.difference(basis).copied().collect();
            for k in 0..=complement.len() {
                for subset in combinations(&complement, k) {
                    faces.insert(subset.into_iter().collect());
                }
            }
        }
        Ok(DualComplex {
            faces,
            max_face_size: complement_size,
        })
    }

    /// The greedoid polynomial by the chosen route. `max_box` caps the
    /// lattice scan of the Ehrhart route; the other routes ignore it.
    pub fn lambda(&self, method: LambdaMethod, max_box: u64) -> Result<Polynomial> {
        // a single vertex carries the empty basis and no activities
        if self.graph.edge_count() == 0 {
            return Ok(Polynomial::one());
        }
        if method.needs_eulerian() && !self.graph.is_eulerian() {
            return Err(Error::Precondition(format!(
                "method {} needs an Eulerian digraph",
                method.name()
            )));
        }
        let lambda = match method {
            LambdaMethod::Activity => {
                let mut histogram: Vec<Rat> = Vec::new();
                for basis in self.bases()? {
                    let activity = self.external_activity(&basis)?;
                    if activity >= histogram.len() {
                        histogram.resize(activity + 1, Rat::zero());
                    }
                    histogram[activity] += Rat::one();
                }
                Polynomial::from_rat_coeffs(histogram)
            }
            LambdaMethod::Semiactivity => {
                let mut histogram: Vec<Rat> = Vec::new();
                for basis in self.bases()? {
                    let mut active = 0;
                    for e in self.graph.edge_ids().filter(|e| !basis.contains(e)) {
                        if self.graph.is_externally_semiactive(self.root, &basis, e)? {
                            active += 1;
                        }
                    }
                    if active >= histogram.len() {
                        histogram.resize(active + 1, Rat::zero());
                    }
                    histogram[active] += Rat::one();
                }
                Polynomial::from_rat_coeffs(histogram)
            }
            LambdaMethod::DualComplex => h_polynomial(&self.dual_complex()?),
            LambdaMethod::HstarEhrhart
            | LambdaMethod::HstarSemipassivity
            | LambdaMethod::HstarTriangulation => {
                let rep = MatroidRep::graphic(&self.graph)?.dual()?;
                let polytope = RootPolytope::new(rep)?;
                let hstar = match method {
                    LambdaMethod::HstarEhrhart => ehrhart::hstar_from_ehrhart(&polytope, max_box)?,
                    LambdaMethod::HstarSemipassivity => {
                        let dissection = arborescence_bases(&self.graph, self.root)?;
                        ehrhart::hstar_from_semipassivity(&polytope, &dissection)?
                    }
                    LambdaMethod::HstarTriangulation => {
                        let dissection = arborescence_bases(&self.graph, self.root)?;
                        ehrhart::hstar_from_triangulation(&polytope, &dissection)?
                    }
                    _ => unreachable!(),
                };
                // lambda(t) = t^(dim + 1) h*(1/t)
                hstar.mirror(polytope.dimension() + 1)?
            }
        };
        if !lambda.is_integer() || !lambda.has_nonnegative_coeffs() {
            return Err(Error::Integrity(format!(
                "greedoid polynomial must have nonnegative integer coefficients, got {lambda}"
            )));
        }
        Ok(lambda)
    }
}

/// The h-polynomial of the dual complex: `h(x) = f(x - 1)` where
/// `f(y) = sum over faces of y^(d - dim F)`.
pub fn h_polynomial(complex: &DualComplex) -> Polynomial {
    h_polynomial_of_faces(complex.faces(), complex.max_face_size)
        .expect("dual complex faces fit their declared dimension")
}

/// Shared f-to-h computation: `top` is `d + 1`, the maximal face size.
pub(crate) fn h_polynomial_of_faces(
    faces: &BTreeSet<ElemSet>,
    top: usize,
) -> Result<Polynomial> {
    let mut size_counts = vec![0u64; top + 1];
    for face in faces {
        if face.len() > top {
            return Err(Error::Dimension(format!(
                "face of size {} exceeds maximal size {top}",
                face.len()
            )));
        }
        size_counts[face.len()] += 1;
    }
    // h(x) = sum over sizes s of count_s * (x - 1)^(top - s)
    let x_minus_one = Polynomial::from_int_coeffs(&[-1, 1]);
    let mut powers = vec![Polynomial::one()];
    for _ in 0..top {
        let next = powers.last().unwrap().mul(&x_minus_one);
        powers.push(next);
    }
    let mut h = Polynomial::zero();
    for (size, &count) in size_counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let term = powers[top - size].scale(&Rat::from_integer(count.into()));
        h = h.add(&term);
    }
    Ok(h)
}
