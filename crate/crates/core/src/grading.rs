//! |k|-gradings induced by a subset of simple roots.
//!
//! A nonempty subset `sigma` of `{1..rank}` selects the root spaces whose
//! sigma-height (the sum of the root's coefficients over the selected
//! simple roots) determines their degree. Degree zero is the Cartan
//! subalgebra together with the height-zero root spaces; the nonnegative
//! part is the standard parabolic subalgebra attached to `sigma`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::algebra::{AlgebraElement, LieAlgebra};
use crate::linalg::{rat, rat_string, Mat, Rat};
use crate::report::{Check, Report};
use crate::{Error, Result};

/// Sum of the root's coefficients at the (1-based) indices in `sigma`.
pub fn sigma_height(root: &[i64], sigma: &BTreeSet<usize>) -> Result<i64> {
    let rank = root.len();
    let mut h = 0;
    for &i in sigma {
        if i == 0 || i > rank {
            return Err(Error::SigmaOutOfRange { index: i, rank });
        }
        h += root[i - 1];
    }
    Ok(h)
}

/// A grading `g = g_{-k} + ... + g_k` described by basis-index lists per
/// degree, together with the grading element and the induced filtration.
#[derive(Debug, Clone)]
pub struct GradedDecomposition {
    sigma: BTreeSet<usize>,
    k: i64,
    /// Degree -> sorted basis indices. Every degree in `-k..=k` is present.
    components: Vec<(i64, Vec<usize>)>,
    grading_element: AlgebraElement,
    /// Degree j -> basis indices of `g^j`, the sum of degrees >= j.
    filtration: Vec<(i64, Vec<usize>)>,
}

impl GradedDecomposition {
    pub fn sigma(&self) -> &BTreeSet<usize> {
        &self.sigma
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn component(&self, degree: i64) -> &[usize] {
        self.components
            .iter()
            .find(|(d, _)| *d == degree)
            .map(|(_, v)| v.as_slice())
            .unwrap_or(&[])
    }

    /// `(degree, basis indices)` pairs from `-k` to `k`.
    pub fn components(&self) -> &[(i64, Vec<usize>)] {
        &self.components
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|(_, v)| v.len()).collect()
    }

    pub fn grading_element(&self) -> &AlgebraElement {
        &self.grading_element
    }

    pub fn filtration(&self, degree: i64) -> &[usize] {
        self.filtration
            .iter()
            .find(|(d, _)| *d == degree)
            .map(|(_, v)| v.as_slice())
            .unwrap_or(&[])
    }

    /// Basis indices of the parabolic subalgebra `p = g^0`.
    pub fn parabolic_indices(&self) -> Vec<usize> {
        self.filtration(0).to_vec()
    }

    /// Basis indices of the nilradical `p_+ = g^1`.
    pub fn p_plus_indices(&self) -> Vec<usize> {
        self.filtration(1).to_vec()
    }

    /// Basis indices of `g_- = g_{-k} + ... + g_{-1}`.
    pub fn negative_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .components
            .iter()
            .filter(|(d, _)| *d < 0)
            .flat_map(|(_, v)| v.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Degree of a basis index, if it belongs to some component.
    pub fn degree_of(&self, basis_index: usize) -> Option<i64> {
        self.components
            .iter()
            .find(|(_, v)| v.contains(&basis_index))
            .map(|(d, _)| *d)
    }

    /// Assemble a decomposition from explicit parts, bypassing `grade`.
    /// Intended for fault injection against the verifiers.
    pub fn from_raw_parts(
        sigma: BTreeSet<usize>,
        k: i64,
        components: Vec<(i64, Vec<usize>)>,
        grading_element: AlgebraElement,
    ) -> Self {
        let filtration = build_filtration(&components, k);
        GradedDecomposition {
            sigma,
            k,
            components,
            grading_element,
            filtration,
        }
    }
}

fn build_filtration(components: &[(i64, Vec<usize>)], k: i64) -> Vec<(i64, Vec<usize>)> {
    (-k..=k)
        .map(|j| {
            let mut v: Vec<usize> = components
                .iter()
                .filter(|(d, _)| *d >= j)
                .flat_map(|(_, c)| c.iter().copied())
                .collect();
            v.sort_unstable();
            (j, v)
        })
        .collect()
}

/// Decompose `a` by sigma-height. Rejects an empty `sigma`: that would
/// give `p = g` and no grading with `k >= 1`.
pub fn grade(a: &LieAlgebra, sigma: &[usize]) -> Result<GradedDecomposition> {
    let sigma: BTreeSet<usize> = sigma.iter().copied().collect();
    if sigma.is_empty() {
        return Err(Error::EmptySigma { rank: a.rank() });
    }
    for &i in &sigma {
        if i == 0 || i > a.rank() {
            return Err(Error::SigmaOutOfRange {
                index: i,
                rank: a.rank(),
            });
        }
    }

    let roots = a.root_decomposition();
    let k = roots
        .roots
        .iter()
        .map(|r| sigma_height(r, &sigma).expect("sigma validated"))
        .max()
        .expect("semisimple algebras have roots");
    assert!(k >= 1, "nonempty sigma must produce k >= 1");

    let mut per_degree: Vec<Vec<usize>> = vec![Vec::new(); (2 * k + 1) as usize];
    let at = |d: i64| (d + k) as usize;
    for h in a.cartan_indices() {
        per_degree[at(0)].push(h);
    }
    for (r, root) in roots.roots.iter().enumerate() {
        let h = sigma_height(root, &sigma).expect("sigma validated");
        assert!(h.abs() <= k);
        per_degree[at(h)].extend(roots.root_space_basis[r].iter().copied());
    }
    let components: Vec<(i64, Vec<usize>)> = (-k..=k)
        .map(|d| {
            let mut v = std::mem::take(&mut per_degree[at(d)]);
            v.sort_unstable();
            (d, v)
        })
        .collect();

    let grading_element = solve_grading_element(a, &sigma);
    let filtration = build_filtration(&components, k);
    Ok(GradedDecomposition {
        sigma,
        k,
        components,
        grading_element,
        filtration,
    })
}

/// The unique Cartan element `K` with `alpha_i(K) = 1` for `i` in `sigma`
/// and `alpha_i(K) = 0` otherwise; it acts on `g_j` as multiplication by
/// `j`. Recomputed from `gd.sigma()`, independent of the stored copy.
pub fn grading_element(a: &LieAlgebra, gd: &GradedDecomposition) -> AlgebraElement {
    solve_grading_element(a, gd.sigma())
}

fn solve_grading_element(a: &LieAlgebra, sigma: &BTreeSet<usize>) -> AlgebraElement {
    // Row i of simple_root_values() holds alpha_i on the Cartan basis, so
    // the coefficient vector t of K solves simple_root_values * t = target.
    let target: Vec<Rat> = (1..=a.rank())
        .map(|i| if sigma.contains(&i) { rat(1) } else { rat(0) })
        .collect();
    let t = a
        .simple_root_values()
        .clone()
        .solve(&target)
        .expect("simple roots are linearly independent on the Cartan subalgebra");
    let mut coords = vec![Rat::zero(); a.dim()];
    coords[..a.rank()].clone_from_slice(&t);
    AlgebraElement::new(coords)
}

/// Check the grading axioms: the components partition the basis, brackets
/// respect degrees, the negative part is generated by degree -1, the
/// extreme components are nonzero, `[K, X] = jX` holds on every graded
/// basis vector, and the claimed `k` matches the highest sigma-height.
pub fn verify_grading(a: &LieAlgebra, gd: &GradedDecomposition) -> Report {
    let mut checks = Vec::new();

    // Partition of the basis.
    let mut seen = vec![0usize; a.dim()];
    for (_, comp) in gd.components() {
        for &b in comp {
            if b < a.dim() {
                seen[b] += 1;
            }
        }
    }
    let partition = if gd.components().iter().any(|(_, c)| c.iter().any(|&b| b >= a.dim())) {
        Some("component contains an out-of-range basis index".to_string())
    } else if let Some(b) = (0..a.dim()).find(|&b| seen[b] != 1) {
        Some(format!("basis index {b} appears {} times", seen[b]))
    } else {
        None
    };
    checks.push(Check::from_witness("components_partition_basis", partition));

    // Bracket compatibility [g_i, g_j] in g_{i+j}.
    let degree_of: Vec<Option<i64>> = (0..a.dim()).map(|b| gd.degree_of(b)).collect();
    let mut compat = None;
    'outer: for (di, ci) in gd.components() {
        for (dj, cj) in gd.components() {
            for &b1 in ci {
                for &b2 in cj {
                    for (k, c) in a.structure_row(b1, b2) {
                        if c.is_zero() {
                            continue;
                        }
                        if degree_of.get(*k).copied().flatten() != Some(di + dj) {
                            compat = Some(format!(
                                "[x_{b1} (deg {di}), x_{b2} (deg {dj})] meets x_{k} outside degree {}",
                                di + dj
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    checks.push(Check::from_witness("bracket_respects_degrees", compat));

    // g_- generated by g_{-1}: span [g_{-1}, g_{-j}] = g_{-j-1}.
    let mut generated = None;
    for j in 1..gd.k() {
        let lower = gd.component(-j);
        let minus_one = gd.component(-1);
        let target = gd.component(-j - 1);
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for &b1 in minus_one {
            for &b2 in lower {
                let mut row = vec![Rat::zero(); a.dim()];
                for (k, c) in a.structure_row(b1, b2) {
                    row[*k] = c.clone();
                }
                rows.push(row);
            }
        }
        let rank = if rows.is_empty() {
            0
        } else {
            Mat::from_rows(rows).rank()
        };
        if rank != target.len() {
            generated = Some(format!(
                "[g_-1, g_{}] spans rank {rank} < dim g_{} = {}",
                -j,
                -j - 1,
                target.len()
            ));
            break;
        }
    }
    checks.push(Check::from_witness("negative_part_generated_by_degree_minus_one", generated));

    // Extreme components nonzero with k >= 1.
    let extremes = if gd.k() < 1 {
        Some(format!("k = {} < 1", gd.k()))
    } else if gd.component(gd.k()).is_empty() || gd.component(-gd.k()).is_empty() {
        Some(format!("g_{} or g_{} is empty", gd.k(), -gd.k()))
    } else {
        None
    };
    checks.push(Check::from_witness("extreme_components_nonzero", extremes));

    // [K, X] = jX coordinatewise on every graded basis vector.
    let mut element_identity = None;
    'elem: for (d, comp) in gd.components() {
        for &b in comp {
            let x = a.basis_element(b);
            let lhs = match a.bracket(gd.grading_element(), &x) {
                Ok(v) => v,
                Err(e) => {
                    element_identity = Some(format!("bracket failed: {e}"));
                    break 'elem;
                }
            };
            let rhs = x.scale(&rat(*d));
            if lhs != rhs {
                element_identity = Some(format!(
                    "[K, x_{b}] != {d} * x_{b} (degree {d} component)"
                ));
                break 'elem;
            }
        }
    }
    checks.push(Check::from_witness("grading_element_identity", element_identity));

    // Independent recomputation of k from the root data.
    let roots = a.root_decomposition();
    let recomputed = roots
        .roots
        .iter()
        .filter_map(|r| sigma_height(r, gd.sigma()).ok())
        .max()
        .unwrap_or(0);
    let k_check = if recomputed == gd.k() {
        None
    } else {
        Some(format!(
            "claimed k = {} but highest sigma-height is {recomputed}",
            gd.k()
        ))
    };
    checks.push(Check::from_witness("k_matches_highest_sigma_height", k_check));

    Report::new(checks)
}

/// Check the Killing-form dualities of the grading: off-degree blocks
/// vanish, each `g_j x g_{-j}` pairing is nondegenerate, the pairing of
/// `g_-` against `p_+` is nondegenerate, and `p_+` is exactly the
/// orthogonal complement of `p`.
pub fn verify_duality(a: &LieAlgebra, gd: &GradedDecomposition) -> Report {
    let gram = a.killing_gram();
    let mut checks = Vec::new();

    let mut off_block = None;
    'off: for (di, ci) in gd.components() {
        for (dj, cj) in gd.components() {
            if di + dj == 0 {
                continue;
            }
            for &b1 in ci {
                for &b2 in cj {
                    if !gram.at(b1, b2).is_zero() {
                        off_block = Some(format!(
                            "B(x_{b1}, x_{b2}) = {} on degrees ({di},{dj})",
                            rat_string(gram.at(b1, b2))
                        ));
                        break 'off;
                    }
                }
            }
        }
    }
    checks.push(Check::from_witness("off_degree_blocks_vanish", off_block));

    let mut nondeg = None;
    for j in 0..=gd.k() {
        let rows_idx = gd.component(j);
        let cols_idx = gd.component(-j);
        let block = Mat::from_fn(rows_idx.len(), cols_idx.len(), |r, c| {
            gram.at(rows_idx[r], cols_idx[c]).clone()
        });
        if block.rank() != rows_idx.len() {
            nondeg = Some(format!(
                "pairing g_{j} x g_{} has rank {} < {}",
                -j,
                block.rank(),
                rows_idx.len()
            ));
            break;
        }
    }
    checks.push(Check::from_witness("graded_pairings_nondegenerate", nondeg));

    // g/p ~ p_+ duality: B restricted to g_- x p_+ is nondegenerate.
    let neg = gd.negative_indices();
    let p_plus = gd.p_plus_indices();
    let block = Mat::from_fn(neg.len(), p_plus.len(), |r, c| {
        gram.at(neg[r], p_plus[c]).clone()
    });
    let quotient = if neg.len() == p_plus.len() && block.rank() == neg.len() {
        None
    } else {
        Some(format!(
            "g_- x p_+ pairing: dims {} x {}, rank {}",
            neg.len(),
            p_plus.len(),
            block.rank()
        ))
    };
    checks.push(Check::from_witness("quotient_pairing_nondegenerate", quotient));

    // p_+ equals the B-orthogonal complement of p.
    let p = gd.parabolic_indices();
    let pairing_rows = Mat::from_fn(p.len(), a.dim(), |r, c| gram.at(p[r], c).clone());
    let complement = pairing_rows.nullspace();
    let complement_mat = if complement.is_empty() {
        Mat::zeros(0, a.dim())
    } else {
        Mat::from_rows(complement)
    };
    let p_plus_mat = Mat::from_fn(p_plus.len(), a.dim(), |r, c| {
        if p_plus[r] == c {
            rat(1)
        } else {
            rat(0)
        }
    });
    let orth = if complement_mat.row_space_canonical() == p_plus_mat.row_space_canonical() {
        None
    } else {
        Some("orthogonal complement of p differs from p_+".to_string())
    };
    checks.push(Check::from_witness("p_plus_is_orth_complement_of_p", orth));

    Report::new(checks)
}

/// All nonempty subsets of `{1..rank}`, smallest first, for sweep drivers.
pub fn nonempty_sigma_subsets(rank: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << rank) {
        let subset: Vec<usize> = (0..rank).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        out.push(subset);
    }
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, Family};
    use crate::linalg::ratio;

    fn sigma(ids: &[usize]) -> BTreeSet<usize> {
        ids.iter().copied().collect()
    }

    #[test]
    fn sigma_height_sums_selected_coefficients() {
        assert_eq!(sigma_height(&[1, 1], &sigma(&[1])).unwrap(), 1);
        assert_eq!(sigma_height(&[1, 1, 1], &sigma(&[1, 3])).unwrap(), 2);
        // full sigma collapses to the ordinary root height
        assert_eq!(sigma_height(&[1, 2, 1], &sigma(&[1, 2, 3])).unwrap(), 4);
        assert!(sigma_height(&[1, 1], &sigma(&[5])).is_err());
    }

    #[test]
    fn a1_grading_dims() {
        let a = build_algebra(Family::A, 1).unwrap();
        let gd = grade(&a, &[1]).unwrap();
        assert_eq!(gd.k(), 1);
        assert_eq!(gd.dims(), vec![1, 1, 1]);
        // K = h/2
        assert_eq!(gd.grading_element().coords()[0], ratio(1, 2));
    }

    #[test]
    fn a2_grading_dims_and_elements() {
        let a = build_algebra(Family::A, 2).unwrap();

        let gd = grade(&a, &[1]).unwrap();
        assert_eq!(gd.k(), 1);
        assert_eq!(gd.dims(), vec![2, 4, 2]);
        // K = diag(2/3, -1/3, -1/3)
        let k_mat = a.realize(gd.grading_element());
        assert_eq!(k_mat.at(0, 0), &ratio(2, 3));
        assert_eq!(k_mat.at(1, 1), &ratio(-1, 3));
        assert_eq!(k_mat.at(2, 2), &ratio(-1, 3));

        let gd = grade(&a, &[1, 2]).unwrap();
        assert_eq!(gd.k(), 2);
        assert_eq!(gd.dims(), vec![1, 2, 2, 2, 1]);
        // K = diag(1, 0, -1)
        let k_mat = a.realize(gd.grading_element());
        assert_eq!(k_mat.at(0, 0), &rat(1));
        assert!(k_mat.at(1, 1).is_zero());
        assert_eq!(k_mat.at(2, 2), &rat(-1));

        // recomputation through the public op agrees with the stored element
        assert_eq!(&grading_element(&a, &gd), gd.grading_element());
    }

    #[test]
    fn empty_and_invalid_sigma_rejected() {
        let a = build_algebra(Family::A, 2).unwrap();
        assert!(matches!(grade(&a, &[]), Err(Error::EmptySigma { .. })));
        assert!(matches!(
            grade(&a, &[3]),
            Err(Error::SigmaOutOfRange { index: 3, rank: 2 })
        ));
        assert!(grade(&a, &[0]).is_err());
    }

    #[test]
    fn sweep_small_algebras_verify_exactly() {
        for (family, rank) in [
            (Family::A, 1),
            (Family::A, 2),
            (Family::A, 3),
            (Family::B, 2),
            (Family::C, 2),
        ] {
            let a = build_algebra(family, rank).unwrap();
            for subset in nonempty_sigma_subsets(rank) {
                let gd = grade(&a, &subset).unwrap();
                let g = verify_grading(&a, &gd);
                assert!(g.passed(), "{family}{rank} sigma {subset:?}: {:?}",
                    g.failures().collect::<Vec<_>>());
                let d = verify_duality(&a, &gd);
                assert!(d.passed(), "{family}{rank} sigma {subset:?}: {:?}",
                    d.failures().collect::<Vec<_>>());
                // mirror-symmetric dimensions
                let dims = gd.dims();
                let mut rev = dims.clone();
                rev.reverse();
                assert_eq!(dims, rev);
            }
        }
    }

    #[test]
    fn filtration_is_bracket_compatible() {
        let a = build_algebra(Family::A, 3).unwrap();
        let gd = grade(&a, &[1, 3]).unwrap();
        let k = gd.k();
        for i in -k..=k {
            for j in -k..=k {
                let fi = gd.filtration(i);
                let fj = gd.filtration(j);
                let target = gd.filtration((i + j).clamp(-k, k));
                for &b1 in fi {
                    for &b2 in fj {
                        for (l, c) in a.structure_row(b1, b2) {
                            if c.is_zero() {
                                continue;
                            }
                            assert!(
                                i + j > k || target.contains(l),
                                "[g^{i}, g^{j}] escaped g^{}",
                                i + j
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tampered_decomposition_fails_bracket_compatibility() {
        let a = build_algebra(Family::A, 2).unwrap();
        let gd = grade(&a, &[1]).unwrap();
        // swap one basis vector between g_1 and g_0
        let mut components = gd.components().to_vec();
        let moved = components
            .iter_mut()
            .find(|(d, _)| *d == 1)
            .unwrap()
            .1
            .pop()
            .unwrap();
        let dropped = components
            .iter_mut()
            .find(|(d, _)| *d == 0)
            .unwrap()
            .1
            .pop()
            .unwrap();
        components.iter_mut().find(|(d, _)| *d == 0).unwrap().1.push(moved);
        components.iter_mut().find(|(d, _)| *d == 1).unwrap().1.push(dropped);
        let bad = GradedDecomposition::from_raw_parts(
            gd.sigma().clone(),
            gd.k(),
            components,
            gd.grading_element().clone(),
        );
        let report = verify_grading(&a, &bad);
        assert!(!report.passed());
        assert!(report.failures().any(|c| c.name == "bracket_respects_degrees"
            || c.name == "grading_element_identity"));
    }

    #[test]
    fn killing_degenerate_on_same_sign_blocks() {
        // B on g_1 x g_1 vanishes identically.
        let a = build_algebra(Family::A, 2).unwrap();
        let gd = grade(&a, &[1]).unwrap();
        let g1 = gd.component(1);
        for &i in g1 {
            for &j in g1 {
                assert!(a.killing_gram().at(i, j).is_zero());
            }
        }
    }
}
