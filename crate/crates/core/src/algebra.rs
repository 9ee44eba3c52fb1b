//! Split classical simple Lie algebras as explicit matrix algebras.
//!
//! Each family is realized so that the Cartan subalgebra is literally the
//! diagonal subspace: `A_n` is the traceless matrices, while `B_n`, `C_n`
//! and `D_n` preserve an anti-diagonal symmetric or symplectic form. With
//! these conventions every basis vector outside the Cartan subalgebra is a
//! simultaneous eigenvector of the adjoint action of the diagonal, all
//! structure constants are small integers, and the whole algebra — bracket
//! table, Killing form, root decomposition — is exact.
//!
//! Basis order: Cartan generators `h_1..h_rank` first, then one vector per
//! root in a fixed enumeration order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::{commutator, dot, rat, Mat, Rat};
use crate::report::{Check, Report};
use crate::{Error, Result};

/// The four classical families in their split real forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// `sl(rank+1)`
    A,
    /// `so(2*rank+1)`, anti-diagonal symmetric form
    B,
    /// `sp(2*rank)`, anti-diagonal symplectic form
    C,
    /// `so(2*rank)`, anti-diagonal symmetric form
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 4,
        }
    }

    pub fn matrix_size(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            Family::B => 2 * rank + 1,
            Family::C | Family::D => 2 * rank,
        }
    }

    /// Classical dimension formula.
    pub fn dimension(self, rank: usize) -> usize {
        match self {
            Family::A => (rank + 1) * (rank + 1) - 1,
            Family::B | Family::C => rank * (2 * rank + 1),
            Family::D => rank * (2 * rank - 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(format!("unknown family {other:?}, expected A, B, C or D")),
        }
    }
}

/// Element of a [`LieAlgebra`], stored as exact coordinates over its basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    coords: Vec<Rat>,
}

impl AlgebraElement {
    pub fn new(coords: Vec<Rat>) -> Self {
        AlgebraElement { coords }
    }

    pub fn zero(dim: usize) -> Self {
        AlgebraElement {
            coords: vec![Rat::zero(); dim],
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.len(), other.len());
        AlgebraElement::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.len(), other.len());
        AlgebraElement::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> AlgebraElement {
        AlgebraElement::new(self.coords.iter().map(|a| a * c).collect())
    }
}

/// Root data derived by simultaneously diagonalizing the adjoint action of
/// the Cartan subalgebra. Roots are integer coefficient vectors over the
/// simple-root basis (Bourbaki order).
#[derive(Debug, Clone)]
pub struct RootDatum {
    /// All roots, in basis-scan order.
    pub roots: Vec<Vec<i64>>,
    /// `root_space_basis[r]` lists the basis indices spanning the root
    /// space of `roots[r]` (one index each for the split realizations).
    pub root_space_basis: Vec<Vec<usize>>,
    /// Positions in `roots` of the simple roots, in Bourbaki order.
    pub simple_roots: Vec<usize>,
    /// Positions in `roots` of roots with all coefficients nonnegative.
    pub positive_roots: Vec<usize>,
    index: BTreeMap<Vec<i64>, usize>,
}

impl RootDatum {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn negation_of(&self, r: usize) -> usize {
        let neg: Vec<i64> = self.roots[r].iter().map(|c| -c).collect();
        self.index_of(&neg).expect("roots come in +- pairs")
    }

    pub fn is_positive(&self, r: usize) -> bool {
        self.roots[r].iter().all(|&c| c >= 0)
    }
}

/// A split classical semisimple Lie algebra with precomputed structure
/// constants and Killing Gram matrix.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    family: Family,
    rank: usize,
    dim: usize,
    msize: usize,
    basis: Vec<Mat>,
    /// Lead entry used to read off the coordinate of each non-Cartan basis
    /// vector; `None` for Cartan generators.
    leads: Vec<Option<(usize, usize)>>,
    /// Sparse bracket table: `structure[i][j]` lists `(k, c)` with
    /// `[x_i, x_j] = sum c * x_k`.
    structure: Vec<Vec<Vec<(usize, Rat)>>>,
    killing: Mat,
    /// `simple_root_values[i][j] = alpha_i(h_j)`.
    simple_root_values: Mat,
}

/// Construct the split realization of the given family and rank.
///
/// Supported ranks: `A` needs rank >= 1, `B` and `C` rank >= 2, `D` rank >= 4.
pub fn build_algebra(family: Family, rank: usize) -> Result<LieAlgebra> {
    if rank < family.min_rank() {
        return Err(Error::UnsupportedAlgebra {
            family,
            rank,
            min_rank: family.min_rank(),
        });
    }
    Ok(LieAlgebra::construct(family, rank))
}

impl LieAlgebra {
    fn construct(family: Family, rank: usize) -> LieAlgebra {
        let m = family.matrix_size(rank);
        let mut basis: Vec<Mat> = Vec::new();
        let mut leads: Vec<Option<(usize, usize)>> = Vec::new();

        // Cartan generators.
        for i in 0..rank {
            basis.push(cartan_generator(family, rank, i));
            leads.push(None);
        }
        // Root vectors.
        for (mat, lead) in root_vectors(family, rank) {
            basis.push(mat);
            leads.push(Some(lead));
        }

        let dim = basis.len();
        assert_eq!(
            dim,
            family.dimension(rank),
            "basis count disagrees with the dimension formula for {family}{rank}"
        );

        let mut algebra = LieAlgebra {
            family,
            rank,
            dim,
            msize: m,
            basis,
            leads,
            structure: Vec::new(),
            killing: Mat::zeros(dim, dim),
            simple_root_values: Mat::zeros(rank, rank),
        };

        // Bracket table from matrix commutators.
        let mut structure = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let c = commutator(&algebra.basis[i], &algebra.basis[j]);
                let coords = algebra
                    .coords_of_matrix(&c)
                    .expect("bracket of basis vectors must stay inside the algebra");
                structure[i][j] = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
        }
        algebra.structure = structure;

        // Killing Gram matrix B(x_i, x_j) = tr(ad x_i ad x_j).
        let ads: Vec<Mat> = (0..dim)
            .map(|i| algebra.ad_matrix_of_basis(i))
            .collect();
        let mut gram = Mat::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                let mut t = Rat::zero();
                for a in 0..dim {
                    for b in 0..dim {
                        let x = ads[i].at(a, b);
                        if x.is_zero() {
                            continue;
                        }
                        let y = ads[j].at(b, a);
                        if !y.is_zero() {
                            t += x * y;
                        }
                    }
                }
                *gram.at_mut(i, j) = t.clone();
                *gram.at_mut(j, i) = t;
            }
        }
        algebra.killing = gram;

        // Values of the Bourbaki simple roots on the Cartan generators.
        let combos = simple_root_eps_combos(family, rank);
        let mut srv = Mat::zeros(rank, rank);
        for (i, combo) in combos.iter().enumerate() {
            for j in 0..rank {
                let h = &algebra.basis[j];
                let mut v = Rat::zero();
                for &(pos, coeff) in combo {
                    v += h.at(pos, pos) * rat(coeff);
                }
                *srv.at_mut(i, j) = v;
            }
        }
        algebra.simple_root_values = srv;

        algebra
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Size of the defining matrix representation.
    pub fn matrix_size(&self) -> usize {
        self.msize
    }

    /// Basis indices spanning the Cartan subalgebra (always `0..rank`).
    pub fn cartan_indices(&self) -> Vec<usize> {
        (0..self.rank).collect()
    }

    pub fn basis_matrix(&self, i: usize) -> &Mat {
        &self.basis[i]
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut coords = vec![Rat::zero(); self.dim];
        coords[i] = rat(1);
        AlgebraElement::new(coords)
    }

    pub fn element(&self, coords: Vec<Rat>) -> Result<AlgebraElement> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "algebra element",
                expected: self.dim,
                found: coords.len(),
            });
        }
        Ok(AlgebraElement::new(coords))
    }

    pub fn killing_gram(&self) -> &Mat {
        &self.killing
    }

    /// `alpha_i(h_j)` for the Bourbaki simple roots, as a rank x rank matrix.
    pub fn simple_root_values(&self) -> &Mat {
        &self.simple_root_values
    }

    /// Sparse bracket row: `[x_i, x_j]` as `(k, c)` pairs.
    pub fn structure_row(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.structure[i][j]
    }

    /// Realize an element as an explicit matrix in the defining representation.
    pub fn realize(&self, x: &AlgebraElement) -> Mat {
        let mut out = Mat::zeros(self.msize, self.msize);
        for (i, c) in x.coords().iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.basis[i].scale(c));
            }
        }
        out
    }

    /// `[x, y]` through the structure-constant table.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = vec![Rat::zero(); self.dim];
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (k, c) in &self.structure[i][j] {
                    out[*k] += &f * c;
                }
            }
        }
        Ok(AlgebraElement::new(out))
    }

    /// Matrix of `ad(x)` acting on coordinates: column `j` holds
    /// `[x, x_j]`.
    pub fn ad_matrix(&self, x: &AlgebraElement) -> Result<Mat> {
        self.check_len(x)?;
        let mut out = Mat::zeros(self.dim, self.dim);
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in &self.structure[i][j] {
                    *out.at_mut(*k, j) += xi * c;
                }
            }
        }
        Ok(out)
    }

    fn ad_matrix_of_basis(&self, i: usize) -> Mat {
        let mut out = Mat::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in &self.structure[i][j] {
                *out.at_mut(*k, j) = c.clone();
            }
        }
        out
    }

    /// Killing form `B(x, y)` through the precomputed Gram matrix.
    pub fn killing_form(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<Rat> {
        self.check_len(x)?;
        self.check_len(y)?;
        let gy = self.killing.mul_vec(y.coords());
        Ok(dot(x.coords(), &gy))
    }

    /// Simultaneous diagonalization of the Cartan action on the basis.
    ///
    /// Panics if some basis vector fails to be a joint eigenvector or if a
    /// weight is not an integer combination of the simple roots: both would
    /// be construction bugs, not data-dependent conditions.
    pub fn root_decomposition(&self) -> RootDatum {
        let srv_t = self.simple_root_values.transpose();
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut spaces: Vec<Vec<usize>> = Vec::new();
        let mut index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();

        for b in self.rank..self.dim {
            // Eigenvalue of ad(h_i) on x_b; also asserts the eigenvector
            // property for the whole Cartan subalgebra.
            let mut values = Vec::with_capacity(self.rank);
            for h in 0..self.rank {
                let row = &self.structure[h][b];
                let lambda = match row.as_slice() {
                    [] => Rat::zero(),
                    [(k, c)] if *k == b => c.clone(),
                    _ => panic!("basis vector {b} is not an ad({h})-eigenvector"),
                };
                values.push(lambda);
            }
            let coeffs = srv_t
                .solve(&values)
                .expect("simple roots span the weight lattice rationally");
            let root: Vec<i64> = coeffs
                .iter()
                .map(|c| {
                    assert!(
                        c.is_integer(),
                        "weight of basis vector {b} has non-integer simple-root coordinates"
                    );
                    int_value(c)
                })
                .collect();
            assert!(
                root.iter().any(|&c| c != 0),
                "non-Cartan basis vector {b} has zero weight"
            );
            match index.get(&root) {
                Some(&r) => spaces[r].push(b),
                None => {
                    index.insert(root.clone(), roots.len());
                    roots.push(root);
                    spaces.push(vec![b]);
                }
            }
        }

        // Sanity: +- pairing and the dimension count.
        let total: usize = spaces.iter().map(Vec::len).sum();
        assert_eq!(self.rank + total, self.dim);
        for root in &roots {
            let neg: Vec<i64> = root.iter().map(|c| -c).collect();
            assert!(index.contains_key(&neg), "root without its negative");
        }

        let mut simple = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut unit = vec![0i64; self.rank];
            unit[i] = 1;
            simple.push(
                index
                    .get(&unit)
                    .copied()
                    .expect("every simple root occurs as a root"),
            );
        }
        let positive = (0..roots.len())
            .filter(|&r| roots[r].iter().all(|&c| c >= 0))
            .collect();

        RootDatum {
            roots,
            root_space_basis: spaces,
            simple_roots: simple,
            positive_roots: positive,
            index,
        }
    }

    /// Returns a copy with `c_{ijk}` shifted by `delta`. Fault-injection
    /// hook for exercising the failure paths of the verifiers.
    pub fn perturb_structure_constant(
        &self,
        i: usize,
        j: usize,
        k: usize,
        delta: Rat,
    ) -> LieAlgebra {
        let mut out = self.clone();
        let row = &mut out.structure[i][j];
        if let Some(entry) = row.iter_mut().find(|(idx, _)| *idx == k) {
            entry.1 += delta;
            row.retain(|(_, c)| !c.is_zero());
        } else {
            row.push((k, delta));
            row.sort_by_key(|(idx, _)| *idx);
        }
        out
    }

    fn check_len(&self, x: &AlgebraElement) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "algebra element",
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(())
    }

    fn coords_of_matrix(&self, x: &Mat) -> Option<Vec<Rat>> {
        let mut coords = vec![Rat::zero(); self.dim];
        // Cartan coordinates from the diagonal.
        match self.family {
            Family::A => {
                let mut partial = Rat::zero();
                for i in 0..self.rank {
                    partial += x.at(i, i);
                    coords[i] = partial.clone();
                }
            }
            _ => {
                for i in 0..self.rank {
                    coords[i] = x.at(i, i).clone();
                }
            }
        }
        // Root-vector coordinates from their lead entries.
        for (b, lead) in self.leads.iter().enumerate() {
            if let Some((i, j)) = lead {
                coords[b] = x.at(*i, *j).clone();
            }
        }
        // The extraction is only valid if it reproduces the input.
        let recon = self.realize(&AlgebraElement::new(coords.clone()));
        if &recon == x {
            Some(coords)
        } else {
            None
        }
    }
}

fn cartan_generator(family: Family, rank: usize, i: usize) -> Mat {
    let m = family.matrix_size(rank);
    let mut h = Mat::zeros(m, m);
    match family {
        Family::A => {
            *h.at_mut(i, i) = rat(1);
            *h.at_mut(i + 1, i + 1) = rat(-1);
        }
        _ => {
            *h.at_mut(i, i) = rat(1);
            *h.at_mut(m - 1 - i, m - 1 - i) = rat(-1);
        }
    }
    h
}

/// Root vectors with their lead entries, in a fixed enumeration order.
fn root_vectors(family: Family, rank: usize) -> Vec<(Mat, (usize, usize))> {
    let n = rank;
    let m = family.matrix_size(rank);
    let refl = |i: usize| m - 1 - i;
    let mut out = Vec::new();
    let mut unit = |entries: Vec<(usize, usize, i64)>, lead: (usize, usize)| {
        let mut mat = Mat::zeros(m, m);
        for (i, j, c) in entries {
            *mat.at_mut(i, j) += rat(c);
        }
        out.push((mat, lead));
    };

    match family {
        Family::A => {
            for i in 0..m {
                for j in 0..m {
                    if i != j {
                        unit(vec![(i, j, 1)], (i, j));
                    }
                }
            }
        }
        Family::B | Family::D => {
            // e_a - e_b
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        unit(vec![(a, b, 1), (refl(b), refl(a), -1)], (a, b));
                    }
                }
            }
            // e_a + e_b and -(e_a + e_b), a < b
            for a in 0..n {
                for b in a + 1..n {
                    unit(vec![(a, refl(b), 1), (b, refl(a), -1)], (a, refl(b)));
                    unit(vec![(refl(b), a, 1), (refl(a), b, -1)], (refl(b), a));
                }
            }
            // short roots +-e_a (family B only)
            if family == Family::B {
                let mid = n;
                for a in 0..n {
                    unit(vec![(a, mid, 1), (mid, refl(a), -1)], (a, mid));
                    unit(vec![(mid, a, 1), (refl(a), mid, -1)], (mid, a));
                }
            }
        }
        Family::C => {
            // e_a - e_b
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        unit(vec![(a, b, 1), (refl(b), refl(a), -1)], (a, b));
                    }
                }
            }
            // e_a + e_b and -(e_a + e_b), a < b
            for a in 0..n {
                for b in a + 1..n {
                    unit(vec![(a, refl(b), 1), (b, refl(a), 1)], (a, refl(b)));
                    unit(vec![(refl(b), a, 1), (refl(a), b, 1)], (refl(b), a));
                }
            }
            // long roots +-2e_a
            for a in 0..n {
                unit(vec![(a, refl(a), 1)], (a, refl(a)));
                unit(vec![(refl(a), a, 1)], (refl(a), a));
            }
        }
    }
    out
}

/// Bourbaki simple roots as integer combinations of diagonal-entry
/// functionals: pairs `(diagonal position, coefficient)`.
fn simple_root_eps_combos(family: Family, rank: usize) -> Vec<Vec<(usize, i64)>> {
    let mut combos = Vec::with_capacity(rank);
    for i in 0..rank.saturating_sub(1) {
        combos.push(vec![(i, 1), (i + 1, -1)]);
    }
    match family {
        Family::A => combos.push(vec![(rank - 1, 1), (rank, -1)]),
        Family::B => combos.push(vec![(rank - 1, 1)]),
        Family::C => combos.push(vec![(rank - 1, 2)]),
        Family::D => combos.push(vec![(rank - 2, 1), (rank - 1, 1)]),
    }
    combos
}

fn int_value(r: &Rat) -> i64 {
    use num_traits::ToPrimitive;
    r.to_integer().to_i64().expect("root coefficient fits i64")
}

/// Exhaustive verification of the algebra axioms over all basis triples:
/// bracket antisymmetry, the Jacobi identity, and symmetry, invariance and
/// nondegeneracy of the Killing form. Failures carry a witness triple.
pub fn verify_structure(a: &LieAlgebra) -> Report {
    assert!(a.dim() > 0, "vacuous algebra");
    let dim = a.dim();

    let mut antisym = None;
    'anti: for i in 0..dim {
        for j in 0..dim {
            let mut sum: BTreeMap<usize, Rat> = BTreeMap::new();
            for (k, c) in a.structure_row(i, j) {
                *sum.entry(*k).or_insert_with(Rat::zero) += c;
            }
            for (k, c) in a.structure_row(j, i) {
                *sum.entry(*k).or_insert_with(Rat::zero) += c;
            }
            if let Some((k, _)) = sum.iter().find(|(_, c)| !c.is_zero()) {
                antisym = Some(format!("c({i},{j},{k}) + c({j},{i},{k}) != 0"));
                break 'anti;
            }
        }
    }

    let mut jacobi = None;
    'jac: for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let mut defect: BTreeMap<usize, Rat> = BTreeMap::new();
                // [x_i, [x_j, x_k]]
                for (l, c) in a.structure_row(j, k) {
                    for (o, d) in a.structure_row(i, *l) {
                        *defect.entry(*o).or_insert_with(Rat::zero) += c * d;
                    }
                }
                // - [[x_i, x_j], x_k]
                for (l, c) in a.structure_row(i, j) {
                    for (o, d) in a.structure_row(*l, k) {
                        *defect.entry(*o).or_insert_with(Rat::zero) -= c * d;
                    }
                }
                // - [x_j, [x_i, x_k]]
                for (l, c) in a.structure_row(i, k) {
                    for (o, d) in a.structure_row(j, *l) {
                        *defect.entry(*o).or_insert_with(Rat::zero) -= c * d;
                    }
                }
                if defect.values().any(|c| !c.is_zero()) {
                    jacobi = Some(format!(
                        "Jacobi defect at basis triple ({i},{j},{k})"
                    ));
                    break 'jac;
                }
            }
        }
    }

    let killing_symmetric = if a.killing_gram().is_symmetric() {
        None
    } else {
        Some("Killing Gram matrix is not symmetric".to_string())
    };

    let mut invariant = None;
    let gram = a.killing_gram();
    'inv: for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                // B([x_i,x_j], x_k) + B(x_j, [x_i,x_k])
                let mut s = Rat::zero();
                for (l, c) in a.structure_row(i, j) {
                    s += c * gram.at(*l, k);
                }
                for (l, c) in a.structure_row(i, k) {
                    s += c * gram.at(j, *l);
                }
                if !s.is_zero() {
                    invariant = Some(format!(
                        "B([x_{i},x_{j}],x_{k}) + B(x_{j},[x_{i},x_{k}]) = {s} != 0"
                    ));
                    break 'inv;
                }
            }
        }
    }

    let nondegenerate = if a.killing_gram().rank() == dim {
        None
    } else {
        Some(format!(
            "Killing Gram matrix has rank {} < {dim}",
            a.killing_gram().rank()
        ))
    };

    Report::new(vec![
        Check::from_witness("bracket_antisymmetry", antisym),
        Check::from_witness("jacobi_identity", jacobi),
        Check::from_witness("killing_symmetric", killing_symmetric),
        Check::from_witness("killing_invariant", invariant),
        Check::from_witness("killing_nondegenerate", nondegenerate),
    ])
}
