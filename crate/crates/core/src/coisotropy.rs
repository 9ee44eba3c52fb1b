//! Coisotropy of subspaces with respect to the Killing form, and the
//! exhaustive sweep checking "coisotropic iff parabolic" over root
//! subalgebras containing the Cartan subalgebra.

use serde::Serialize;

use crate::algebra::{AlgebraElement, LieAlgebra, RootDatum};
use crate::linalg::{Mat, Rat};
use crate::{Error, Result};

/// Default cap on the number of roots a sweep will enumerate subsets of.
pub const DEFAULT_SWEEP_CAP: usize = 12;

/// An exact-coordinate linear subspace of a Lie algebra, held in canonical
/// reduced-row-echelon basis form so equality of spans is equality of
/// representations.
#[derive(Debug, Clone)]
pub struct Subspace<'g> {
    owner: &'g LieAlgebra,
    basis: Mat,
}

impl<'g> Subspace<'g> {
    /// Span of the given generators.
    pub fn span(owner: &'g LieAlgebra, generators: &[AlgebraElement]) -> Subspace<'g> {
        let rows: Vec<Vec<Rat>> = generators.iter().map(|g| g.coords().to_vec()).collect();
        let stacked = if rows.is_empty() {
            Mat::zeros(0, owner.dim())
        } else {
            Mat::from_rows(rows)
        };
        Subspace {
            owner,
            basis: stacked.row_space_canonical(),
        }
    }

    /// Coordinate subspace spanned by the given basis indices.
    pub fn from_basis_indices(owner: &'g LieAlgebra, indices: &[usize]) -> Subspace<'g> {
        let generators: Vec<AlgebraElement> =
            indices.iter().map(|&i| owner.basis_element(i)).collect();
        Subspace::span(owner, &generators)
    }

    pub fn zero(owner: &'g LieAlgebra) -> Subspace<'g> {
        Subspace::span(owner, &[])
    }

    pub fn full(owner: &'g LieAlgebra) -> Subspace<'g> {
        let all: Vec<usize> = (0..owner.dim()).collect();
        Subspace::from_basis_indices(owner, &all)
    }

    pub fn owner(&self) -> &'g LieAlgebra {
        self.owner
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical basis matrix, one row per basis vector.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_elements(&self) -> Vec<AlgebraElement> {
        (0..self.dim())
            .map(|i| AlgebraElement::new(self.basis.row_vec(i)))
            .collect()
    }

    pub fn contains(&self, v: &AlgebraElement) -> bool {
        if v.is_zero() {
            return true;
        }
        let mut rows: Vec<Vec<Rat>> = (0..self.dim()).map(|i| self.basis.row_vec(i)).collect();
        rows.push(v.coords().to_vec());
        Mat::from_rows(rows).rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace<'_>) -> bool {
        self.basis_elements().iter().all(|v| other.contains(v))
    }

    pub fn equals(&self, other: &Subspace<'_>) -> bool {
        self.basis == other.basis
    }

    /// Orthogonal complement with respect to the Killing form: the exact
    /// null space of the pairing `B(basis, -)`.
    pub fn orth_complement(&self) -> Subspace<'g> {
        if self.dim() == 0 {
            return Subspace::full(self.owner);
        }
        let pairing = self.basis.mul(self.owner.killing_gram());
        let null = pairing.nullspace();
        let generators: Vec<AlgebraElement> =
            null.into_iter().map(AlgebraElement::new).collect();
        Subspace::span(self.owner, &generators)
    }

    /// True iff the bracket of every pair of basis vectors stays inside.
    pub fn is_subalgebra(&self) -> bool {
        let vectors = self.basis_elements();
        for u in &vectors {
            for v in &vectors {
                let b = self.owner.bracket(u, v).expect("subspace of its owner");
                if !self.contains(&b) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the orthogonal complement is contained in the subspace.
    pub fn is_coisotropic(&self) -> bool {
        self.orth_complement().is_subspace_of(self)
    }
}

/// Describes the subspace `Cartan + sum of g_eta over eta in root_subset`.
#[derive(Debug, Clone, Serialize)]
pub struct RootSubalgebraDescriptor {
    /// Indices into the owning [`RootDatum`]'s root list.
    pub root_subset: Vec<usize>,
    /// Always true for the family swept here.
    pub contains_cartan: bool,
    /// Whether the root subset is additively closed within the root system,
    /// which is equivalent to the subspace being a subalgebra.
    pub closed: bool,
}

/// Root-set additive closure: for eta, theta in the subset with eta+theta
/// a root, eta+theta stays in the subset.
pub fn is_closed_root_subset(roots: &RootDatum, subset: &[usize]) -> bool {
    let member = |r: usize| subset.contains(&r);
    for &r in subset {
        for &s in subset {
            let sum: Vec<i64> = roots.roots[r]
                .iter()
                .zip(&roots.roots[s])
                .map(|(a, b)| a + b)
                .collect();
            if let Some(t) = roots.index_of(&sum) {
                if !member(t) {
                    return false;
                }
            }
        }
    }
    true
}

/// For a closed, Cartan-containing root subalgebra, parabolicity reduces
/// to the root-set condition `R u -R = Delta` (the subspace then contains
/// a Borel subalgebra).
pub fn is_parabolic_root_subalgebra(
    roots: &RootDatum,
    d: &RootSubalgebraDescriptor,
) -> Result<bool> {
    if !d.closed {
        return Err(Error::NotASubalgebra);
    }
    let mut covered = vec![false; roots.len()];
    for &r in &d.root_subset {
        covered[r] = true;
        covered[roots.negation_of(r)] = true;
    }
    Ok(covered.into_iter().all(|c| c))
}

/// One case of the sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub descriptor: RootSubalgebraDescriptor,
    pub is_subalgebra: bool,
    /// Present exactly when the subset is closed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_coisotropic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_parabolic: Option<bool>,
}

/// Result of enumerating every root subset.
#[derive(Debug, Clone, Serialize)]
pub struct SweepOutcome {
    /// Roots of the algebra, as coefficient vectors over the simple roots,
    /// in the index order used by the rows.
    pub roots: Vec<Vec<i64>>,
    pub rows: Vec<SweepRow>,
    /// Row indices where coisotropy and parabolicity disagree. Always
    /// empty for semisimple algebras; reported rather than asserted.
    pub counterexamples: Vec<usize>,
    pub num_subsets: usize,
    pub num_closed: usize,
    pub num_coisotropic: usize,
    pub num_parabolic: usize,
}

/// Sweep with the default cap. See [`sweep_root_subalgebras_with_cap`].
pub fn sweep_root_subalgebras(a: &LieAlgebra) -> Result<SweepOutcome> {
    sweep_root_subalgebras_with_cap(a, DEFAULT_SWEEP_CAP)
}

/// Enumerate all `2^|Delta|` subsets of the root system. For each closed
/// subset (the subspace is then a Cartan-containing subalgebra) both
/// coisotropy and parabolicity are decided exactly; any disagreement is
/// recorded as a counterexample. Refuses algebras with more roots than
/// the cap.
pub fn sweep_root_subalgebras_with_cap(a: &LieAlgebra, cap: usize) -> Result<SweepOutcome> {
    let roots = a.root_decomposition();
    if roots.len() > cap {
        return Err(Error::SweepCapExceeded {
            roots: roots.len(),
            cap,
        });
    }
    let n = roots.len();
    let mut rows = Vec::with_capacity(1usize << n);
    let mut counterexamples = Vec::new();
    let (mut num_closed, mut num_coiso, mut num_para) = (0usize, 0usize, 0usize);

    for mask in 0u64..(1u64 << n) {
        let subset: Vec<usize> = (0..n).filter(|&r| mask & (1 << r) != 0).collect();
        let closed = is_closed_root_subset(&roots, &subset);
        let descriptor = RootSubalgebraDescriptor {
            root_subset: subset.clone(),
            contains_cartan: true,
            closed,
        };

        let mut indices: Vec<usize> = a.cartan_indices();
        for &r in &subset {
            indices.extend(roots.root_space_basis[r].iter().copied());
        }
        let subspace = Subspace::from_basis_indices(a, &indices);
        let is_subalgebra = subspace.is_subalgebra();
        debug_assert_eq!(is_subalgebra, closed, "closure criterion disagrees with the bracket");

        let (is_coisotropic, is_parabolic) = if closed {
            num_closed += 1;
            let coiso = subspace.is_coisotropic();
            let para = is_parabolic_root_subalgebra(&roots, &descriptor)?;
            if coiso {
                num_coiso += 1;
            }
            if para {
                num_para += 1;
            }
            if coiso != para {
                counterexamples.push(rows.len());
            }
            (Some(coiso), Some(para))
        } else {
            (None, None)
        };

        rows.push(SweepRow {
            descriptor,
            is_subalgebra,
            is_coisotropic,
            is_parabolic,
        });
    }

    Ok(SweepOutcome {
        roots: roots.roots.clone(),
        num_subsets: rows.len(),
        rows,
        counterexamples,
        num_closed,
        num_coisotropic: num_coiso,
        num_parabolic: num_para,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, Family};
    use crate::grading::{grade, nonempty_sigma_subsets};

    #[test]
    fn sl2_complements() {
        let a = build_algebra(Family::A, 1).unwrap();
        // basis order: h, e, f
        let borel = Subspace::from_basis_indices(&a, &[0, 1]);
        let comp = borel.orth_complement();
        assert_eq!(comp.dim(), 1);
        assert!(comp.contains(&a.basis_element(1)), "borel complement is span(e)");
        assert!(borel.is_coisotropic());

        let cartan = Subspace::from_basis_indices(&a, &[0]);
        let comp = cartan.orth_complement();
        assert_eq!(comp.dim(), 2);
        assert!(comp.contains(&a.basis_element(1)));
        assert!(comp.contains(&a.basis_element(2)));
        assert!(!cartan.is_coisotropic());

        assert_eq!(Subspace::full(&a).orth_complement().dim(), 0);
        assert!(Subspace::full(&a).is_coisotropic());
        assert_eq!(Subspace::zero(&a).orth_complement().dim(), 3);
    }

    #[test]
    fn complement_is_involutive_with_dimension_count() {
        let a = build_algebra(Family::B, 2).unwrap();
        for indices in [vec![0], vec![0, 1, 4], vec![2, 3, 5, 6], vec![]] {
            let s = Subspace::from_basis_indices(&a, &indices);
            let c = s.orth_complement();
            assert_eq!(s.dim() + c.dim(), a.dim());
            assert!(c.orth_complement().equals(&s));
        }
    }

    #[test]
    fn subalgebra_detection() {
        let a = build_algebra(Family::A, 1).unwrap();
        assert!(Subspace::from_basis_indices(&a, &[0]).is_subalgebra());
        // span(e, f) is not closed: [e, f] = h
        assert!(!Subspace::from_basis_indices(&a, &[1, 2]).is_subalgebra());
    }

    #[test]
    fn parabolic_from_grading_is_coisotropic_with_p_plus_complement() {
        for (family, rank) in [(Family::A, 2), (Family::A, 3), (Family::C, 2)] {
            let a = build_algebra(family, rank).unwrap();
            for sigma in nonempty_sigma_subsets(rank) {
                let gd = grade(&a, &sigma).unwrap();
                let p = Subspace::from_basis_indices(&a, &gd.parabolic_indices());
                assert!(p.is_subalgebra());
                assert!(p.is_coisotropic());
                let p_plus = Subspace::from_basis_indices(&a, &gd.p_plus_indices());
                assert!(p.orth_complement().equals(&p_plus));
            }
        }
    }

    #[test]
    fn a1_sweep_by_hand() {
        let a = build_algebra(Family::A, 1).unwrap();
        let outcome = sweep_root_subalgebras(&a).unwrap();
        assert_eq!(outcome.num_subsets, 4);
        assert_eq!(outcome.num_closed, 4);
        assert_eq!(outcome.num_coisotropic, 3);
        assert_eq!(outcome.num_parabolic, 3);
        assert!(outcome.counterexamples.is_empty());
        // the Cartan alone is the one closed non-coisotropic case
        let cartan_row = &outcome.rows[0];
        assert!(cartan_row.descriptor.root_subset.is_empty());
        assert_eq!(cartan_row.is_coisotropic, Some(false));
        assert_eq!(cartan_row.is_parabolic, Some(false));
    }

    #[test]
    fn a2_sweep_has_no_counterexamples() {
        let a = build_algebra(Family::A, 2).unwrap();
        let outcome = sweep_root_subalgebras(&a).unwrap();
        assert_eq!(outcome.num_subsets, 64);
        assert!(outcome.counterexamples.is_empty());
        // closed rows carry both predicates, open rows neither
        for row in &outcome.rows {
            assert_eq!(row.is_subalgebra, row.descriptor.closed);
            assert_eq!(row.is_coisotropic.is_some(), row.descriptor.closed);
            assert_eq!(row.is_parabolic.is_some(), row.descriptor.closed);
        }
    }

    #[test]
    fn cap_refusal() {
        let a = build_algebra(Family::D, 4).unwrap();
        match sweep_root_subalgebras(&a) {
            Err(Error::SweepCapExceeded { roots, cap }) => {
                assert_eq!(roots, 24);
                assert_eq!(cap, DEFAULT_SWEEP_CAP);
            }
            other => panic!("expected cap refusal, got {other:?}"),
        }
    }

    #[test]
    fn parabolicity_requires_a_subalgebra() {
        let a = build_algebra(Family::A, 2).unwrap();
        let roots = a.root_decomposition();
        // {alpha_1 + alpha_2} alone is closed; {alpha_1, alpha_2} is not
        let open_subset: Vec<usize> = vec![
            roots.index_of(&[1, 0]).unwrap(),
            roots.index_of(&[0, 1]).unwrap(),
        ];
        assert!(!is_closed_root_subset(&roots, &open_subset));
        let d = RootSubalgebraDescriptor {
            root_subset: open_subset,
            contains_cartan: true,
            closed: false,
        };
        assert!(matches!(
            is_parabolic_root_subalgebra(&roots, &d),
            Err(Error::NotASubalgebra)
        ));
        // positive roots form the standard Borel: parabolic
        let borel = RootSubalgebraDescriptor {
            root_subset: roots.positive_roots.clone(),
            contains_cartan: true,
            closed: true,
        };
        assert!(is_parabolic_root_subalgebra(&roots, &borel).unwrap());
        // and so does the opposite Borel
        let opposite: Vec<usize> = roots
            .positive_roots
            .iter()
            .map(|&r| roots.negation_of(r))
            .collect();
        let d = RootSubalgebraDescriptor {
            root_subset: opposite,
            contains_cartan: true,
            closed: true,
        };
        assert!(is_parabolic_root_subalgebra(&roots, &d).unwrap());
        // the Cartan alone is not
        let d = RootSubalgebraDescriptor {
            root_subset: vec![],
            contains_cartan: true,
            closed: true,
        };
        assert!(!is_parabolic_root_subalgebra(&roots, &d).unwrap());
    }
}
