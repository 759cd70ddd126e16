//! Block Schur reduction of an operator near a reference operator, with
//! exact witnesses, plus the closed-form codimension calculators for
//! kernel/cokernel strata.
//!
//! A reference operator `L` determines splittings of its domain and codomain
//! (complement of the kernel, image, and a lift of the cokernel). Any
//! operator `T` whose upper-left block in these splittings is invertible
//! reduces to the small matrix `S(T) = T22 - T21·T11⁻¹·T12`, with invertible
//! block-triangular witnesses `Φ, Ψ` such that `Φ·T·Ψ = diag(1, S(T))`. The
//! kernel and cokernel of `T` then match those of `S(T)` exactly.

use crate::matrix::Matrix;
use crate::scalar::ExactScalar;
use crate::{Error, Result};

/// A reference operator together with the splittings of its domain and
/// codomain: domain = coimage ⊕ kernel, codomain = image ⊕ cokernel lift.
#[derive(Clone, Debug)]
pub struct SplitOperator<K: ExactScalar> {
    pub base: Matrix<K>,
    pub kernel_basis: Vec<Vec<K>>,
    pub coimage_basis: Vec<Vec<K>>,
    pub image_basis: Vec<Vec<K>>,
    pub cokernel_lift_basis: Vec<Vec<K>>,
    /// Domain basis matrix `[coimage | kernel]`.
    domain_basis: Matrix<K>,
    /// Inverse of the codomain basis matrix `[image | cokernel lift]`.
    codomain_basis_inv: Matrix<K>,
}

impl<K: ExactScalar> SplitOperator<K> {
    /// Default splitting: kernel from the nullspace, coimage spanned by the
    /// pivot-column coordinate vectors, image as their images under `L`, and
    /// the cokernel lifted along the nullspace of the conjugate transpose.
    pub fn new(base: Matrix<K>) -> Result<Self> {
        let kernel_basis = base.nullspace_basis();
        let (_, pivots) = base.rref();
        let coimage_basis: Vec<Vec<K>> = pivots
            .iter()
            .map(|&c| {
                let mut v = vec![K::zero(); base.cols()];
                v[c] = K::one();
                v
            })
            .collect();
        let image_basis: Vec<Vec<K>> = pivots.iter().map(|&c| base.column(c)).collect();
        let cokernel_lift_basis = base.conj_transpose().nullspace_basis();
        Self::with_splittings(
            base,
            kernel_basis,
            coimage_basis,
            image_basis,
            cokernel_lift_basis,
        )
    }

    /// Build from explicit splittings, checking the invariants: the
    /// concatenated bases are invertible, `L` kills the kernel basis, and `L`
    /// maps the coimage isomorphically onto the image.
    pub fn with_splittings(
        base: Matrix<K>,
        kernel_basis: Vec<Vec<K>>,
        coimage_basis: Vec<Vec<K>>,
        image_basis: Vec<Vec<K>>,
        cokernel_lift_basis: Vec<Vec<K>>,
    ) -> Result<Self> {
        let mut domain_cols = coimage_basis.clone();
        domain_cols.extend(kernel_basis.iter().cloned());
        let domain_basis = Matrix::from_columns(&domain_cols);
        if domain_basis.rows() != base.cols() || !domain_basis.is_invertible() {
            return Err(Error::BadInput(
                "domain splitting is not a basis of the domain".into(),
            ));
        }
        let mut codomain_cols = image_basis.clone();
        codomain_cols.extend(cokernel_lift_basis.iter().cloned());
        let codomain_basis = Matrix::from_columns(&codomain_cols);
        if codomain_basis.rows() != base.rows() || !codomain_basis.is_invertible() {
            return Err(Error::BadInput(
                "codomain splitting is not a basis of the codomain".into(),
            ));
        }
        for v in &kernel_basis {
            if !base.mul_vec(v).iter().all(|e| e.is_zero()) {
                return Err(Error::BadInput("kernel basis vector not killed by L".into()));
            }
        }
        // L restricted to the coimage must hit a basis of the image.
        let mapped: Vec<Vec<K>> = coimage_basis.iter().map(|v| base.mul_vec(v)).collect();
        let rank_image = crate::matrix::span_rank(&image_basis);
        let mut joint = image_basis.clone();
        joint.extend(mapped);
        if crate::matrix::span_rank(&joint) != rank_image || rank_image != coimage_basis.len() {
            return Err(Error::BadInput(
                "L does not map the coimage isomorphically onto the image".into(),
            ));
        }
        let codomain_basis_inv = codomain_basis.inverse()?;
        Ok(SplitOperator {
            base,
            kernel_basis,
            coimage_basis,
            image_basis,
            cokernel_lift_basis,
            domain_basis,
            codomain_basis_inv,
        })
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel_basis.len()
    }

    pub fn cokernel_dim(&self) -> usize {
        self.cokernel_lift_basis.len()
    }

    /// Matrix of `t` in the splitting bases.
    pub fn in_splitting_bases(&self, t: &Matrix<K>) -> Result<Matrix<K>> {
        if t.rows() != self.base.rows() || t.cols() != self.base.cols() {
            return Err(Error::DimensionMismatch {
                context: "in_splitting_bases",
                left: t.rows() * t.cols(),
                right: self.base.rows() * self.base.cols(),
            });
        }
        Ok(self.codomain_basis_inv.mul(&t.mul(&self.domain_basis)))
    }

    /// Map a coordinate vector in the splitting domain basis back to an
    /// honest domain vector.
    pub fn domain_vector(&self, coords: &[K]) -> Vec<K> {
        self.domain_basis.mul_vec(coords)
    }
}

/// Result of reducing `T` against a reference splitting: the compressed
/// operator `S(T)` together with the block-triangular witnesses.
#[derive(Clone, Debug)]
pub struct SchurReduction<K: ExactScalar> {
    /// `dim coker L × dim ker L` matrix representing the reduced operator.
    pub s_matrix: Matrix<K>,
    /// Left witness; `phi · T · psi` is block diagonal.
    pub phi: Matrix<K>,
    /// Right witness.
    pub psi: Matrix<K>,
    /// `T` expressed in the splitting bases.
    pub t_in_bases: Matrix<K>,
}

impl<K: ExactScalar> SchurReduction<K> {
    /// The block-diagonal matrix `phi · t_in_bases · psi` must equal
    /// `diag(identity, s_matrix)` entrywise; returns whether it does.
    pub fn witness_identity_holds(&self) -> bool {
        let product = self.phi.mul(&self.t_in_bases).mul(&self.psi);
        let r = self.t_in_bases.rows() - self.s_matrix.rows();
        let expected = Matrix::from_fn(product.rows(), product.cols(), |i, j| {
            if i < r && j < r {
                if i == j {
                    K::one()
                } else {
                    K::zero()
                }
            } else if i >= r && j >= r {
                self.s_matrix.at(i - r, j - r).clone()
            } else {
                K::zero()
            }
        });
        product == expected
    }
}

/// Schur-reduce `t` against the splitting of `l`. Errors when the
/// upper-left block is singular, i.e. `t` is outside the reduction
/// neighborhood of the reference operator.
pub fn ls_reduce<K: ExactScalar>(
    l: &SplitOperator<K>,
    t: &Matrix<K>,
) -> Result<SchurReduction<K>> {
    let tb = l.in_splitting_bases(t)?;
    let r = l.coimage_basis.len();
    let d = l.kernel_dim();
    let e = l.cokernel_dim();
    let idx: Vec<usize> = (0..r).collect();
    let ker_idx: Vec<usize> = (r..r + d).collect();
    let cok_idx: Vec<usize> = (r..r + e).collect();
    let t11 = tb.submatrix(&idx, &idx);
    let t12 = tb.submatrix(&idx, &ker_idx);
    let t21 = tb.submatrix(&cok_idx, &idx);
    let t22 = tb.submatrix(&cok_idx, &ker_idx);
    let t11_inv = t11.inverse().map_err(|_| Error::OutsideReductionNeighborhood)?;
    let s_matrix = &t22 - &t21.mul(&t11_inv).mul(&t12);
    // Phi = [[T11^-1, 0], [-T21 T11^-1, 1]], Psi = [[1, -T11^-1 T12], [0, 1]].
    let phi = Matrix::from_fn(r + e, r + e, |i, j| {
        if i < r && j < r {
            t11_inv.at(i, j).clone()
        } else if i >= r && j < r {
            -(t21.mul(&t11_inv).at(i - r, j).clone())
        } else if i >= r && j >= r {
            if i == j {
                K::one()
            } else {
                K::zero()
            }
        } else {
            K::zero()
        }
    });
    let t11_inv_t12 = t11_inv.mul(&t12);
    let psi = Matrix::from_fn(r + d, r + d, |i, j| {
        if i < r && j >= r {
            -(t11_inv_t12.at(i, j - r).clone())
        } else if i == j {
            K::one()
        } else {
            K::zero()
        }
    });
    Ok(SchurReduction {
        s_matrix,
        phi,
        psi,
        t_in_bases: tb,
    })
}

/// Exact derivative of the reduction: the compression of `lhat` to a map
/// kernel → cokernel, i.e. the lower-right block of `lhat` in the splitting
/// bases. This equals the derivative at `t = 0` of
/// `t ↦ ls_reduce(l, l.base + t·lhat).s_matrix`, which is a rational function
/// of `t`.
pub fn ls_derivative<K: ExactScalar>(
    l: &SplitOperator<K>,
    lhat: &Matrix<K>,
) -> Result<Matrix<K>> {
    let lb = l.in_splitting_bases(lhat)?;
    let r = l.coimage_basis.len();
    let d = l.kernel_dim();
    let e = l.cokernel_dim();
    let ker_idx: Vec<usize> = (r..r + d).collect();
    let cok_idx: Vec<usize> = (r..r + e).collect();
    Ok(lb.submatrix(&cok_idx, &ker_idx))
}

/// Codimension of the stratum of rank-`r` operators inside the space of all
/// `dim_y × dim_x` operators: `(dim_x - r)(dim_y - r)`.
pub fn stratum_codim(dim_x: usize, dim_y: usize, r: usize) -> Result<usize> {
    if r > dim_x.min(dim_y) {
        return Err(Error::RankTooLarge { r, dim_x, dim_y });
    }
    Ok((dim_x - r) * (dim_y - r))
}

/// Codimension of the stratum with kernel dimension `d` and cokernel
/// dimension `e`: the product `d·e`.
pub fn fredholm_stratum_codim(d: usize, e: usize) -> usize {
    d * e
}

/// Equivariant codimension `Σ k_α·d_α·e_α` over commuting-algebra dimensions
/// `k_α ∈ {1,2,4}`.
pub fn equivariant_codim(k: &[usize], d: &[usize], e: &[usize]) -> Result<usize> {
    if k.len() != d.len() || k.len() != e.len() {
        return Err(Error::DimensionMismatch {
            context: "equivariant_codim",
            left: k.len(),
            right: d.len().max(e.len()),
        });
    }
    for &ka in k {
        if !matches!(ka, 1 | 2 | 4) {
            return Err(Error::BadDivisionDimension(ka));
        }
    }
    Ok(k.iter().zip(d).zip(e).map(|((&k, &d), &e)| k * d * e).sum())
}

/// Self-adjoint stratum codimension `Σ (d_α + k_α·C(d_α, 2))`; each summand
/// is the dimension of the self-adjoint maps on a `d`-dimensional module
/// over a commuting algebra of real dimension `k`.
pub fn selfadjoint_codim(k: &[usize], d: &[usize]) -> Result<usize> {
    if k.len() != d.len() {
        return Err(Error::DimensionMismatch {
            context: "selfadjoint_codim",
            left: k.len(),
            right: d.len(),
        });
    }
    for &ka in k {
        if !matches!(ka, 1 | 2 | 4) {
            return Err(Error::BadDivisionDimension(ka));
        }
    }
    Ok(k.iter()
        .zip(d)
        .map(|(&k, &d)| d + k * binomial(d, 2))
        .sum())
}

/// Rank lower bound `min{ρ, d, e}·max{d, e}` for the compression map when
/// the Petri condition holds up to rank `ρ`.
pub fn rank_lower_bound(rho: usize, d: usize, e: usize) -> usize {
    rho.min(d).min(e) * d.max(e)
}

/// Binomial coefficient.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int, Rational};

    #[test]
    fn invertible_base_gives_empty_reduction() {
        let l: Matrix<Rational> = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let split = SplitOperator::new(l.clone()).unwrap();
        assert_eq!(split.kernel_dim(), 0);
        assert_eq!(split.cokernel_dim(), 0);
        let red = ls_reduce(&split, &l).unwrap();
        assert_eq!((red.s_matrix.rows(), red.s_matrix.cols()), (0, 0));
        assert!(red.witness_identity_holds());
    }

    #[test]
    fn diag_one_zero_schur_formula() {
        // L = diag(1, 0); T = [[1, eps], [delta, gamma]] reduces to
        // [gamma - delta*eps].
        let l: Matrix<Rational> = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let split = SplitOperator::new(l).unwrap();
        let (eps, delta, gamma) = (rat(1, 3), rat(2, 5), rat(7, 2));
        let t = Matrix::from_rows(vec![
            vec![rat_int(1), eps.clone()],
            vec![delta.clone(), gamma.clone()],
        ]);
        let red = ls_reduce(&split, &t).unwrap();
        assert_eq!(red.s_matrix.rows(), 1);
        assert_eq!(*red.s_matrix.at(0, 0), gamma - delta * eps);
        assert!(red.witness_identity_holds());
    }

    #[test]
    fn full_rank_tall_matrix_has_cokernel_only() {
        let l: Matrix<Rational> = Matrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]);
        let split = SplitOperator::new(l.clone()).unwrap();
        assert_eq!(split.kernel_dim(), 0);
        assert_eq!(split.cokernel_dim(), 1);
        let t: Matrix<Rational> = Matrix::from_i64(&[&[1, 0], &[0, 1], &[1, 2]]);
        let red = ls_reduce(&split, &t).unwrap();
        assert_eq!((red.s_matrix.rows(), red.s_matrix.cols()), (1, 0));
        assert_eq!(red.s_matrix.rank(), 0);
    }

    #[test]
    fn derivative_is_compression() {
        let l: Matrix<Rational> = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let split = SplitOperator::new(l.clone()).unwrap();
        let lhat: Matrix<Rational> = Matrix::from_i64(&[&[0, 0], &[0, 1]]);
        let d = ls_derivative(&split, &lhat).unwrap();
        assert_eq!((d.rows(), d.cols()), (1, 1));
        assert_eq!(*d.at(0, 0), rat_int(1));
        // lhat = base: zero on the kernel.
        let d0 = ls_derivative(&split, &l).unwrap();
        assert!(d0.is_zero());
        // lhat with image inside im L: zero map.
        let lhat2: Matrix<Rational> = Matrix::from_i64(&[&[3, 5], &[0, 0]]);
        assert!(ls_derivative(&split, &lhat2).unwrap().is_zero());
    }

    #[test]
    fn outside_neighborhood_is_detected() {
        let l: Matrix<Rational> = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let split = SplitOperator::new(l).unwrap();
        // T11 block is 0 here.
        let t: Matrix<Rational> = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(matches!(
            ls_reduce(&split, &t),
            Err(Error::OutsideReductionNeighborhood)
        ));
    }

    #[test]
    fn codim_calculators_match_closed_forms() {
        assert_eq!(stratum_codim(4, 5, 2).unwrap(), 6);
        assert_eq!(stratum_codim(3, 3, 3).unwrap(), 0);
        assert!(stratum_codim(2, 2, 3).is_err());
        assert_eq!(fredholm_stratum_codim(2, 3), 6);
        assert_eq!(equivariant_codim(&[1, 2], &[1, 1], &[2, 1]).unwrap(), 4);
        assert_eq!(equivariant_codim(&[4], &[1], &[5]).unwrap(), 20);
        assert_eq!(equivariant_codim(&[1, 2], &[0, 0], &[2, 1]).unwrap(), 0);
        assert!(equivariant_codim(&[3], &[1], &[1]).is_err());
        assert_eq!(selfadjoint_codim(&[4], &[2]).unwrap(), 6);
        assert_eq!(selfadjoint_codim(&[1], &[3]).unwrap(), 6);
        assert_eq!(selfadjoint_codim(&[2], &[0]).unwrap(), 0);
        assert_eq!(rank_lower_bound(3, 2, 5), 10);
        assert_eq!(rank_lower_bound(7, 4, 0), 0);
        assert_eq!(rank_lower_bound(1, 4, 4), 4);
    }

    #[test]
    fn selfadjoint_summand_is_symmetric_matrix_dimension() {
        // dim Sym(R^3) = 6 = 3 + 1*C(3,2).
        let dim_sym_3 = 3 * (3 + 1) / 2;
        assert_eq!(selfadjoint_codim(&[1], &[3]).unwrap(), dim_sym_3);
    }

    #[test]
    fn symmetric_input_gives_symmetric_schur_complement() {
        // Symmetric T in the splitting bases of a symmetric L.
        let l: Matrix<Rational> = Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        let split = SplitOperator::new(l).unwrap();
        // Build T directly in the splitting bases (they are the standard
        // basis here), symmetric with invertible T11.
        let t: Matrix<Rational> =
            Matrix::from_i64(&[&[2, 1, 3], &[1, 5, 7], &[3, 7, 11]]);
        let red = ls_reduce(&split, &t).unwrap();
        assert_eq!(red.s_matrix, red.s_matrix.transpose());
        assert!(red.witness_identity_holds());
    }
}
