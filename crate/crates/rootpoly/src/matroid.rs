//! Regular oriented matroids represented by totally unimodular matrices.
//!
//! Columns are indexed by element labels (for graphic matroids, the edge
//! ids). Signed circuits come from the ±1 linear dependencies among columns,
//! signed cocircuits from {-1,0,1}-valued functionals; duality goes through
//! the standard form `(I_r | X)` and its companion `(-X^T | I_{m-r})`.
//!
//! Enumerations are complete at desk scale: circuits and cocircuits are
//! collected as deduplicated fundamental ones over all bases.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{Int, IntMatrix, Rat};
use crate::digraph::Digraph;
use crate::signed::SignedSet;
use crate::util::combinations;
use crate::{Error, Result};

pub type ElemSet = BTreeSet<usize>;

/// How we know the representing matrix is totally unimodular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TuProvenance {
    /// Checked by exhaustive subdeterminant enumeration.
    Verified,
    /// Incidence matrices, pivoted forms and `(-X^T | I)` companions are
    /// totally unimodular by construction.
    ByConstruction,
}

#[derive(Debug, Clone)]
pub struct MatroidRep {
    matrix: IntMatrix,
    labels: Vec<usize>,
    rank: usize,
    provenance: TuProvenance,
}

impl MatroidRep {
    /// Wraps a matrix after exhaustively verifying total unimodularity.
    pub fn from_matrix(matrix: IntMatrix, size_cap: usize) -> Result<Self> {
        if !matrix.is_totally_unimodular(size_cap)? {
            return Err(Error::Precondition("matrix is not totally unimodular".into()));
        }
        let labels = (1..=matrix.cols()).collect();
        Ok(Self::trusted(matrix, labels, TuProvenance::Verified))
    }

    /// Wraps a matrix that is totally unimodular by construction.
    pub fn from_construction(matrix: IntMatrix, labels: Vec<usize>) -> Self {
        Self::trusted(matrix, labels, TuProvenance::ByConstruction)
    }

    fn trusted(matrix: IntMatrix, labels: Vec<usize>, provenance: TuProvenance) -> Self {
        assert_eq!(labels.len(), matrix.cols(), "one label per column");
        let rank = matrix.rank();
        MatroidRep { matrix, labels, rank, provenance }
    }

    /// The graphic matroid: columns are the incidence columns, labels the
    /// edge ids.
    pub fn graphic(g: &Digraph) -> Result<Self> {
        let matrix = g.incidence_matrix()?;
        Ok(Self::trusted(
            matrix,
            g.edge_ids().collect(),
            TuProvenance::ByConstruction,
        ))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn provenance(&self) -> TuProvenance {
        self.provenance
    }

    fn position(&self, label: usize) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or_else(|| Error::Precondition(format!("unknown element {label}")))
    }

    fn positions(&self, labels: &ElemSet) -> Result<Vec<usize>> {
        labels.iter().map(|&l| self.position(l)).collect()
    }

    pub fn column_of(&self, label: usize) -> Result<Vec<Int>> {
        Ok(self.matrix.column(self.position(label)?))
    }

    fn columns_of(&self, labels: &ElemSet) -> Result<IntMatrix> {
        self.matrix.select_columns(&self.positions(labels)?)
    }

    pub fn is_independent(&self, set: &ElemSet) -> Result<bool> {
        if set.is_empty() {
            return Ok(true);
        }
        let sub = self.columns_of(set)?;
        Ok(sub.rank() == set.len())
    }

    pub fn is_basis(&self, set: &ElemSet) -> Result<bool> {
        Ok(set.len() == self.rank && self.is_independent(set)?)
    }

    /// All bases, in lexicographic order of sorted label sequences.
    pub fn bases(&self) -> Result<Vec<ElemSet>> {
        if self.rank == 0 {
            return Err(Error::Precondition("matroid of rank zero has no basis structure".into()));
        }
        let mut out = Vec::new();
        for combo in combinations(&self.labels, self.rank) {
            let set: ElemSet = combo.into_iter().collect();
            if self.is_independent(&set)? {
                out.push(set);
            }
        }
        Ok(out)
    }

    /// The signed fundamental circuit of `e` with respect to basis `B`:
    /// the unique circuit inside `B + e`, oriented so that `e` is positive.
    /// The defining dependence has coefficients ±1 by total unimodularity.
    pub fn fundamental_circuit(&self, basis: &ElemSet, e: usize) -> Result<SignedSet> {
        if basis.contains(&e) {
            return Err(Error::Precondition(format!("element {e} lies in the basis")));
        }
        if !self.is_basis(basis)? {
            return Err(Error::Precondition("not a basis".into()));
        }
        let cols = self.columns_of(basis)?;
        let target = self.column_of(e)?;
        let coeffs = cols
            .solve_int(&target)?
            .ok_or_else(|| Error::Integrity("basis must span every column".into()))?;
        let mut positive = BTreeSet::new();
        let mut negative = BTreeSet::new();
        positive.insert(e);
        for (label, coeff) in basis.iter().zip(coeffs.iter()) {
            if coeff.is_zero() {
                continue;
            }
            if !coeff.is_integer() || coeff.to_integer().abs() != Int::one() {
                return Err(Error::Integrity(format!(
                    "fundamental circuit coefficient {coeff} is not ±1; representation is not TU"
                )));
            }
            // a_e = sum coeff_b a_b, rewritten as a_e - sum coeff_b a_b = 0
            if coeff.is_negative() {
                positive.insert(*label);
            } else {
                negative.insert(*label);
            }
        }
        Ok(SignedSet::new(positive, negative))
    }

    /// A linear functional (coefficients on ambient coordinates) vanishing on
    /// `B - k`, equal to +1 on the column of `k`, and {-1,0,1}-valued on
    /// every column.
    pub fn cocircuit_functional(&self, basis: &ElemSet, k: usize) -> Result<Vec<Rat>> {
        if !basis.contains(&k) {
            return Err(Error::Precondition(format!("element {k} is not in the basis")));
        }
        if !self.is_basis(basis)? {
            return Err(Error::Precondition("not a basis".into()));
        }
        let mut rest = basis.clone();
        rest.remove(&k);
        // rows: a_b^T for b in B-k, then a_k^T; rhs = (0,...,0,1)
        let mut rows: Vec<usize> = self.positions(&rest)?;
        rows.push(self.position(k)?);
        let system = self.matrix.select_columns(&rows)?.transpose();
        let mut rhs = alloc::vec![Rat::zero(); rest.len() + 1];
        *rhs.last_mut().unwrap() = Rat::one();
        let functional = system
            .solve(&rhs)?
            .ok_or_else(|| Error::Integrity("cocircuit functional must exist for a basis".into()))?;
        Ok(functional)
    }

    fn functional_values(&self, functional: &[Rat]) -> Result<Vec<(usize, Rat)>> {
        let mut out = Vec::with_capacity(self.size());
        for (pos, &label) in self.labels.iter().enumerate() {
            let col = self.matrix.column(pos);
            let mut acc = Rat::zero();
            for (c, y) in col.iter().zip(functional.iter()) {
                acc += Rat::from_integer(c.clone()) * y;
            }
            out.push((label, acc));
        }
        Ok(out)
    }

    /// The signed fundamental cocircuit of `k in B`: support meets `B` in
    /// exactly `k`, oriented so that `k` is positive.
    pub fn fundamental_cocircuit(&self, basis: &ElemSet, k: usize) -> Result<SignedSet> {
        let functional = self.cocircuit_functional(basis, k)?;
        let values = self.functional_values(&functional)?;
        let mut positive = BTreeSet::new();
        let mut negative = BTreeSet::new();
        let one = Rat::one();
        for (label, value) in values {
            if value.is_zero() {
                continue;
            }
            if value == one {
                positive.insert(label);
            } else if value == -&one {
                negative.insert(label);
            } else {
                return Err(Error::Integrity(format!(
                    "cocircuit functional takes value {value} outside {{-1,0,1}}"
                )));
            }
        }
        Ok(SignedSet::new(positive, negative))
    }

    /// All signed circuits up to global flip, canonicalized so the smallest
    /// support element is positive; deduplicated fundamental circuits over
    /// all bases, which is complete for matroids.
    pub fn circuits(&self) -> Result<Vec<SignedSet>> {
        if self.size() > 16 {
            return Err(Error::SizeCap(format!(
                "circuit enumeration is desk-scale only ({} elements)",
                self.size()
            )));
        }
        let mut seen = BTreeSet::new();
        for basis in self.bases()? {
            for &e in self.labels.iter().filter(|l| !basis.contains(l)) {
                let circuit = self.fundamental_circuit(&basis, e)?.canonical();
                seen.insert(circuit);
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// All signed cocircuits, canonicalized; deduplicated fundamental
    /// cocircuits over all bases.
    pub fn cocircuits(&self) -> Result<Vec<SignedSet>> {
        if self.size() > 16 {
            return Err(Error::SizeCap(format!(
                "cocircuit enumeration is desk-scale only ({} elements)",
                self.size()
            )));
        }
        let mut seen = BTreeSet::new();
        for basis in self.bases()? {
            for &k in basis.iter() {
                let cocircuit = self.fundamental_cocircuit(&basis, k)?.canonical();
                seen.insert(cocircuit);
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// The dual representation `(-X^T | I_{m-r})`, with the same labels.
    /// Pivots the (row-reduced) matrix to standard form, builds the
    /// companion on the permuted columns and un-permutes.
    pub fn dual(&self) -> Result<MatroidRep> {
        self.dual_with(&(0..self.size()).collect::<Vec<_>>())
    }

    /// [`Self::dual`] with an explicit pivot column preference, exposed so
    /// representation-invariance checks can vary the pivot sequence.
    pub fn dual_with(&self, col_pref: &[usize]) -> Result<MatroidRep> {
        dual_representation(
            &self.matrix.drop_dependent_rows(),
            self.labels.clone(),
            col_pref,
        )
    }

    /// Eulerian: every cocircuit has positive and negative parts of equal
    /// size.
    pub fn is_eulerian(&self) -> Result<bool> {
        Ok(self
            .cocircuits()?
            .iter()
            .all(|c| c.positive.len() == c.negative.len()))
    }

    /// Co-Eulerian: every circuit is balanced. Equivalent to the dual being
    /// Eulerian.
    pub fn is_co_eulerian(&self) -> Result<bool> {
        Ok(self
            .circuits()?
            .iter()
            .all(|c| c.positive.len() == c.negative.len()))
    }

    /// Expresses a kernel vector as a positive combination of signed
    /// circuits: `lam_i = sum_{j: i in C_j+} nu_j - sum_{j: i in C_j-} nu_j`
    /// with every `nu_j > 0`. The returned list has at most `|support|`
    /// entries and its last circuit is conformal to `lam`.
    pub fn decompose_kernel_vector(&self, lam: &[Rat]) -> Result<Vec<(SignedSet, Rat)>> {
        if lam.len() != self.size() {
            return Err(Error::Dimension(format!(
                "coefficient vector length {} does not match {} elements",
                lam.len(),
                self.size()
            )));
        }
        let image = self.matrix.mul_rat_vec(lam)?;
        if image.iter().any(|v| !v.is_zero()) {
            return Err(Error::Precondition("vector is not in the kernel".into()));
        }
        let mut current: Vec<Rat> = lam.to_vec();
        let mut out = Vec::new();
        loop {
            let support: ElemSet = self
                .labels
                .iter()
                .zip(current.iter())
                .filter(|(_, v)| !v.is_zero())
                .map(|(&l, _)| l)
                .collect();
            if support.is_empty() {
                return Ok(out);
            }
            if out.len() > lam.len() {
                return Err(Error::Integrity("circuit decomposition failed to terminate".into()));
            }
            let circuit = self.circuit_in_support(&support)?;
            // orient so some entry can be driven to zero with a positive step
            let fits = |c: &SignedSet| {
                c.positive.iter().any(|&i| current[self.position(i).unwrap()].is_positive())
                    || c.negative.iter().any(|&i| current[self.position(i).unwrap()].is_negative())
            };
            let circuit = if fits(&circuit) { circuit } else { circuit.flipped() };
            let mut step: Option<Rat> = None;
            for &i in &circuit.positive {
                let v = &current[self.position(i)?];
                if v.is_positive() && step.as_ref().is_none_or(|s| v < s) {
                    step = Some(v.clone());
                }
            }
            for &i in &circuit.negative {
                let v = -&current[self.position(i)?];
                if v.is_positive() && step.as_ref().is_none_or(|s| &v < s) {
                    step = Some(v);
                }
            }
            let step = step.ok_or_else(|| {
                Error::Integrity("no coefficient can be cleared by the chosen circuit".into())
            })?;
            for &i in &circuit.positive {
                let pos = self.position(i)?;
                current[pos] = &current[pos] - &step;
            }
            for &i in &circuit.negative {
                let pos = self.position(i)?;
                current[pos] = &current[pos] + &step;
            }
            out.push((circuit, step));
        }
    }

    /// A circuit inside a dependent support: the fundamental circuit of the
    /// smallest element skipped by a greedy independent scan of the support.
    fn circuit_in_support(&self, support: &ElemSet) -> Result<SignedSet> {
        let mut indep = ElemSet::new();
        for &s in support {
            let mut candidate = indep.clone();
            candidate.insert(s);
            if self.is_independent(&candidate)? {
                indep = candidate;
                continue;
            }
            // s depends on the greedy prefix; its circuit lives inside it
            let cols = self.columns_of(&indep)?;
            let target = self.column_of(s)?;
            let coeffs = cols
                .solve_int(&target)?
                .ok_or_else(|| Error::Integrity("dependent element must be spanned".into()))?;
            let mut positive = BTreeSet::new();
            let mut negative = BTreeSet::new();
            positive.insert(s);
            for (label, coeff) in indep.iter().zip(coeffs.iter()) {
                if coeff.is_zero() {
                    continue;
                }
                if coeff.is_negative() {
                    positive.insert(*label);
                } else {
                    negative.insert(*label);
                }
            }
            return Ok(SignedSet::new(positive, negative));
        }
        Err(Error::Precondition("support is independent; no circuit inside".into()))
    }

    /// The conformal circuit of a nonzero kernel vector: positive part inside
    /// `{lam > 0}`, negative part inside `{lam < 0}`.
    pub fn conformal_circuit(&self, lam: &[Rat]) -> Result<SignedSet> {
        if lam.iter().all(|v| v.is_zero()) {
            return Err(Error::Precondition("conformal circuit needs a nonzero vector".into()));
        }
        let parts = self.decompose_kernel_vector(lam)?;
        let (circuit, _) = parts.last().ok_or_else(|| {
            Error::Integrity("nonzero kernel vector decomposed into no circuits".into())
        })?;
        for &i in &circuit.positive {
            if !lam[self.position(i)?].is_positive() {
                return Err(Error::Integrity("final circuit is not conformal".into()));
            }
        }
        for &i in &circuit.negative {
            if !lam[self.position(i)?].is_negative() {
                return Err(Error::Integrity("final circuit is not conformal".into()));
            }
        }
        Ok(circuit.clone())
    }

    /// Internal semi-activity: the maximal element of the fundamental
    /// cocircuit stands parallel to `k`. Element order is the label order.
    pub fn is_internally_semiactive(&self, basis: &ElemSet, k: usize) -> Result<bool> {
        let cocircuit = self.fundamental_cocircuit(basis, k)?;
        Ok(cocircuit.parallel(cocircuit.max_element(), k))
    }

    /// [`Self::is_internally_semiactive`] under an explicit element order.
    pub fn is_internally_semiactive_under(
        &self,
        basis: &ElemSet,
        k: usize,
        order: &[usize],
    ) -> Result<bool> {
        let cocircuit = self.fundamental_cocircuit(basis, k)?;
        Ok(cocircuit.parallel(cocircuit.max_element_under(order), k))
    }

    /// External semi-activity: the maximal element of the fundamental
    /// circuit stands parallel to `e`.
    pub fn is_externally_semiactive(&self, basis: &ElemSet, e: usize) -> Result<bool> {
        let circuit = self.fundamental_circuit(basis, e)?;
        Ok(circuit.parallel(circuit.max_element(), e))
    }

    pub fn is_externally_semiactive_under(
        &self,
        basis: &ElemSet,
        e: usize,
        order: &[usize],
    ) -> Result<bool> {
        let circuit = self.fundamental_circuit(basis, e)?;
        Ok(circuit.parallel(circuit.max_element_under(order), e))
    }

    /// Number of internally semi-passive elements of a basis.
    pub fn internal_semipassivity(&self, basis: &ElemSet) -> Result<usize> {
        let mut count = 0;
        for &k in basis {
            if !self.is_internally_semiactive(basis, k)? {
                count += 1;
            }
        }
        Ok(count)
    }

    pub fn internal_semipassivity_under(&self, basis: &ElemSet, order: &[usize]) -> Result<usize> {
        let mut count = 0;
        for &k in basis {
            if !self.is_internally_semiactive_under(basis, k, order)? {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// The companion representation `(-X^T | I_{m-r})` of a full-row-rank
/// totally unimodular matrix, built along the given pivot column preference
/// and un-permuted back to the original label order. Distinct row subsets
/// and pivot sequences yield distinct matrices for the same oriented dual
/// matroid, which is what representation-invariance checks exercise.
pub fn dual_representation(
    reduced: &IntMatrix,
    labels: Vec<usize>,
    col_pref: &[usize],
) -> Result<MatroidRep> {
    let m = reduced.cols();
    let r = reduced.rows();
    if labels.len() != m {
        return Err(Error::Dimension("one label per column required".into()));
    }
    if r == 0 || r >= m {
        return Err(Error::Precondition(
            "dual representation needs 0 < rank < size".into(),
        ));
    }
    let sf = reduced.pivot_standard_form_with(col_pref)?;
    let x_cols: Vec<usize> = (r..m).collect();
    let x = sf.matrix.select_columns(&x_cols)?;
    let dual_permuted = x.transpose().negated().hstack(&IntMatrix::identity(m - r))?;
    // column j of dual_permuted corresponds to original column perm[j]
    let mut inverse_perm = alloc::vec![0usize; m];
    for (j, &orig) in sf.col_perm.iter().enumerate() {
        inverse_perm[orig] = j;
    }
    let dual_matrix = IntMatrix::from_fn(m - r, m, |i, j| {
        dual_permuted.entry(i, inverse_perm[j]).clone()
    })?;
    let rep = MatroidRep::trusted(dual_matrix, labels, TuProvenance::ByConstruction);
    if rep.rank != m - r {
        return Err(Error::Integrity("dual representation has wrong rank".into()));
    }
    Ok(rep)
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

    #[test]
    fn provenance_tracks_construction_path() {
        let graphic = MatroidRep::graphic(&four_edge_two_vertex()).unwrap();
        assert_eq!(graphic.provenance(), TuProvenance::ByConstruction);
        assert_eq!(graphic.dual().unwrap().provenance(), TuProvenance::ByConstruction);
        let verified =
            MatroidRep::from_matrix(IntMatrix::from_i64(1, 2, &[1, -1]).unwrap(), 8).unwrap();
        assert_eq!(verified.provenance(), TuProvenance::Verified);
        assert!(MatroidRep::from_matrix(IntMatrix::from_i64(1, 1, &[2]).unwrap(), 8).is_err());
    }

    #[test]
    fn independence_in_graphic_matroid() {
        let rep = MatroidRep::graphic(&four_edge_two_vertex()).unwrap();
        assert!(rep.is_independent(&ElemSet::new()).unwrap());
        assert!(rep.is_independent(&[1].into()).unwrap());
        // parallel columns e1, e3 are dependent
        assert!(!rep.is_independent(&[1, 3].into()).unwrap());
        assert!(rep.is_independent(&[99].into()).is_err());
    }

    #[test]
    fn bases_of_cycle_and_duality_of_bases() {
        let cycle = Digraph::directed_cycle(4).unwrap();
        let rep = MatroidRep::graphic(&cycle).unwrap();
        assert_eq!(rep.bases().unwrap().len(), 4);

        let dual = rep.dual().unwrap();
        let all: ElemSet = rep.labels().iter().copied().collect();
        let dual_bases: BTreeSet<ElemSet> = dual.bases().unwrap().into_iter().collect();
        let complements: BTreeSet<ElemSet> = rep
            .bases()
            .unwrap()
            .into_iter()
            .map(|b| all.difference(&b).copied().collect())
            .collect();
        assert_eq!(dual_bases, complements);
    }

    #[test]
    fn dual_of_figure_matroid_counts_spanning_trees() {
        let g = example_digraph();
        let rep = MatroidRep::graphic(&g).unwrap();
        let dual = rep.dual().unwrap();
        assert_eq!(dual.rank(), 4);
        let tree_count = g.spanning_tree_count().unwrap();
        assert_eq!(int(dual.bases().unwrap().len() as i64), tree_count);
    }

    #[test]
    fn fundamental_circuit_matches_digraph_cycle() {
        for g in [four_edge_two_vertex(), example_digraph()] {
            let rep = MatroidRep::graphic(&g).unwrap();
            for tree in g.spanning_trees().unwrap() {
                for e in g.edge_ids().filter(|e| !tree.contains(e)) {
                    let circuit = rep.fundamental_circuit(&tree, e).unwrap();
                    let cycle = g.fundamental_cycle(&tree, e).unwrap();
                    assert_eq!(circuit, cycle);
                }
            }
        }
    }

    #[test]
    fn fundamental_cocircuit_matches_digraph_cut() {
        for g in [four_edge_two_vertex(), example_digraph()] {
            let rep = MatroidRep::graphic(&g).unwrap();
            for tree in g.spanning_trees().unwrap() {
                for &k in &tree {
                    let cocircuit = rep.fundamental_cocircuit(&tree, k).unwrap();
                    let cut = g.fundamental_cut(&tree, k).unwrap();
                    assert_eq!(cocircuit, cut);
                    assert_eq!(
                        cocircuit.support().intersection(&tree).copied().collect::<Vec<_>>(),
                        vec![k]
                    );
                }
            }
        }
    }

    #[test]
    fn cocircuit_functional_two_cycle() {
        let g = Digraph::new(2, vec![(1, 2), (2, 1)]).unwrap();
        let rep = MatroidRep::graphic(&g).unwrap();
        let functional = rep.cocircuit_functional(&[1].into(), 1).unwrap();
        let values = rep.functional_values(&functional).unwrap();
        assert_eq!(values[0].1, rat(1));
        assert_eq!(values[1].1, rat(-1));
    }

    #[test]
    fn circuits_of_small_matroids() {
        let cycle = MatroidRep::graphic(&Digraph::directed_cycle(3).unwrap()).unwrap();
        let circuits = cycle.circuits().unwrap();
        assert_eq!(circuits.len(), 1);
        assert_eq!(circuits[0], SignedSet::from_slices(&[1, 2, 3], &[]));

        let rep = MatroidRep::graphic(&four_edge_two_vertex()).unwrap();
        let circuits = rep.circuits().unwrap();
        // all six edge pairs, signed by relative orientation
        assert_eq!(circuits.len(), 6);
        assert!(circuits.contains(&SignedSet::from_slices(&[1, 2], &[])));
        assert!(circuits.contains(&SignedSet::from_slices(&[1], &[3])));
        assert!(circuits.contains(&SignedSet::from_slices(&[2], &[4])));
    }

    /// Brute-force circuit oracle: minimal dependent subsets with the signs
    /// of the (unique up to scale) kernel vector of the subset columns.
    fn circuits_by_brute_force(rep: &MatroidRep) -> BTreeSet<SignedSet> {
        let labels: Vec<usize> = rep.labels().to_vec();
        let mut found: BTreeSet<SignedSet> = BTreeSet::new();
        for k in 1..=labels.len() {
            'subset: for combo in combinations(&labels, k) {
                let set: ElemSet = combo.iter().copied().collect();
                if rep.is_independent(&set).unwrap() {
                    continue;
                }
                // minimality: every proper subset independent
                for drop in &set {
                    let mut smaller = set.clone();
                    smaller.remove(drop);
                    if !rep.is_independent(&smaller).unwrap() {
                        continue 'subset;
                    }
                }
                // kernel vector on the subset columns
                let rest: Vec<usize> = combo[..combo.len() - 1].to_vec();
                let rest_set: ElemSet = rest.iter().copied().collect();
                let target = rep.column_of(*combo.last().unwrap()).unwrap();
                let coeffs = rep
                    .columns_of(&rest_set)
                    .unwrap()
                    .solve_int(&target)
                    .unwrap()
                    .unwrap();
                let mut positive = BTreeSet::new();
                let mut negative = BTreeSet::new();
                positive.insert(*combo.last().unwrap());
                for (label, coeff) in rest_set.iter().zip(coeffs.iter()) {
                    if coeff.is_positive() {
                        negative.insert(*label);
                    } else if coeff.is_negative() {
                        positive.insert(*label);
                    }
                }
                found.insert(SignedSet::new(positive, negative).canonical());
            }
        }
        found
    }

    #[test]
    fn circuit_enumeration_matches_brute_force() {
        for g in [
            Digraph::directed_cycle(3).unwrap(),
            four_edge_two_vertex(),
            example_digraph(),
        ] {
            let rep = MatroidRep::graphic(&g).unwrap();
            let listed: BTreeSet<SignedSet> = rep.circuits().unwrap().into_iter().collect();
            assert_eq!(listed, circuits_by_brute_force(&rep));
            let dual = rep.dual().unwrap();
            let listed: BTreeSet<SignedSet> = dual.circuits().unwrap().into_iter().collect();
            assert_eq!(listed, circuits_by_brute_force(&dual));
        }
    }

    #[test]
    fn duality_swaps_circuits_and_cocircuits() {
        for g in [four_edge_two_vertex(), example_digraph()] {
            let rep = MatroidRep::graphic(&g).unwrap();
            let dual = rep.dual().unwrap();
            let circuits: BTreeSet<SignedSet> = rep.circuits().unwrap().into_iter().collect();
            let cocircuits: BTreeSet<SignedSet> = rep.cocircuits().unwrap().into_iter().collect();
            let dual_circuits: BTreeSet<SignedSet> = dual.circuits().unwrap().into_iter().collect();
            let dual_cocircuits: BTreeSet<SignedSet> =
                dual.cocircuits().unwrap().into_iter().collect();
            assert_eq!(cocircuits, dual_circuits);
            assert_eq!(circuits, dual_cocircuits);
            // orthogonality of every circuit pair across duality
            for c in &circuits {
                for d in &dual_circuits {
                    assert!(c.orthogonal(d));
                }
            }
        }
    }

    #[test]
    fn double_dual_has_same_signed_circuits() {
        let rep = MatroidRep::graphic(&example_digraph()).unwrap();
        let double = rep.dual().unwrap().dual().unwrap();
        assert_eq!(
            rep.circuits().unwrap().into_iter().collect::<BTreeSet<_>>(),
            double.circuits().unwrap().into_iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn dual_of_cycle_is_rank_one_all_same_sign() {
        let rep = MatroidRep::graphic(&Digraph::directed_cycle(4).unwrap()).unwrap();
        let dual = rep.dual().unwrap();
        assert_eq!(dual.rank(), 1);
        // single circuit structure: each pair forms a balanced circuit
        for c in dual.circuits().unwrap() {
            assert_eq!(c.len(), 2);
            assert_eq!(c.positive.len(), 1);
            assert_eq!(c.negative.len(), 1);
        }
    }

    #[test]
    fn eulerian_and_co_eulerian_predicates() {
        let fig = MatroidRep::graphic(&example_digraph()).unwrap();
        assert!(fig.is_eulerian().unwrap());
        assert!(fig.dual().unwrap().is_co_eulerian().unwrap());
        let cycle = MatroidRep::graphic(&Digraph::directed_cycle(4).unwrap()).unwrap();
        assert!(!cycle.is_co_eulerian().unwrap());
    }

    #[test]
    fn kernel_decomposition_reconstructs_exactly() {
        let rep = MatroidRep::graphic(&four_edge_two_vertex()).unwrap();
        // lam = 0 -> empty decomposition
        assert!(rep.decompose_kernel_vector(&[rat(0), rat(0), rat(0), rat(0)]).unwrap().is_empty());
        // indicator of a single circuit
        let lam = vec![rat(1), rat(1), rat(0), rat(0)];
        let parts = rep.decompose_kernel_vector(&lam).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, rat(1));
        // a mixed kernel vector: check the reconstruction identity
        // columns (-1,1),(1,-1),(-1,1),(1,-1): -2 + 1 + 1 + 0 = 0
        let lam = vec![rat(2), rat(1), rat(-1), rat(0)];
        let parts = rep.decompose_kernel_vector(&lam).unwrap();
        for (pos, label) in rep.labels().iter().enumerate() {
            let mut acc = rat(0);
            for (circuit, step) in &parts {
                if circuit.positive.contains(label) {
                    acc += step;
                }
                if circuit.negative.contains(label) {
                    acc -= step;
                }
            }
            assert_eq!(acc, lam[pos]);
        }
        for (_, step) in &parts {
            assert!(step.is_positive());
        }
        // kernel check is enforced
        assert!(rep.decompose_kernel_vector(&[rat(1), rat(0), rat(0), rat(0)]).is_err());
    }

    #[test]
    fn conformal_circuit_of_kernel_vectors() {
        let rep = MatroidRep::graphic(&four_edge_two_vertex()).unwrap();
        let lam = vec![rat(1), rat(1), rat(0), rat(0)];
        let circuit = rep.conformal_circuit(&lam).unwrap();
        assert_eq!(circuit, SignedSet::from_slices(&[1, 2], &[]));
        assert!(rep.conformal_circuit(&[rat(0), rat(0), rat(0), rat(0)]).is_err());
    }

    #[test]
    fn semiactivity_matches_digraph_for_arborescences() {
        for g in [four_edge_two_vertex(), example_digraph()] {
            let rep = MatroidRep::graphic(&g).unwrap();
            for root in 1..=g.vertex_count() {
                for arb in g.arborescences(root).unwrap() {
                    for e in g.edge_ids().filter(|e| !arb.contains(e)) {
                        assert_eq!(
                            rep.is_externally_semiactive(&arb, e).unwrap(),
                            g.is_externally_semiactive(root, &arb, e).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn internal_external_semipassivity_duality() {
        // k is internally semi-passive in B iff k is externally
        // semi-passive in the complement basis of the dual; exhaustive
        // over all bases of both graphs
        for g in [four_edge_two_vertex(), example_digraph()] {
            let rep = MatroidRep::graphic(&g).unwrap();
            let dual = rep.dual().unwrap();
            let all: ElemSet = rep.labels().iter().copied().collect();
            for basis in rep.bases().unwrap() {
                let complement: ElemSet = all.difference(&basis).copied().collect();
                for &k in &basis {
                    let internal = rep.is_internally_semiactive(&basis, k).unwrap();
                    let external = dual.is_externally_semiactive(&complement, k).unwrap();
                    assert_eq!(internal, external);
                }
            }
        }
    }

    #[test]
    fn rank_one_all_ones_always_internally_semiactive() {
        let matrix = IntMatrix::from_i64(1, 3, &[1, 1, 1]).unwrap();
        let rep = MatroidRep::from_matrix(matrix, 8).unwrap();
        for basis in rep.bases().unwrap() {
            for &k in &basis {
                assert!(rep.is_internally_semiactive(&basis, k).unwrap());
            }
        }
    }

    #[test]
    fn dual_representation_is_tu() {
        for g in [four_edge_two_vertex(), example_digraph()] {
            let dual = MatroidRep::graphic(&g).unwrap().dual().unwrap();
            assert!(dual.matrix().is_totally_unimodular(8).unwrap());
        }
    }
}
