//! Real representation theory of finite groups over exact rationals:
//! intertwiner spaces, division-algebra types of irreducibles, isotypic
//! multiplicities, and coset permutation representations.
//!
//! Irreducible catalogs for the built-in groups ship as explicit rational
//! matrices. A rotation of order three is realized by an integral matrix of
//! order three rather than by cosines, since exact arithmetic rules out
//! transcendental entries; every statement used downstream is invariant
//! under conjugation, so orthogonality is never required, only
//! invertibility.

use crate::group::FiniteGroup;
use crate::matrix::Matrix;
use crate::scalar::{rat_int, ExactScalar, Rational};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::integer::Roots;
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Commuting algebra of an irreducible real representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisionType {
    R,
    C,
    H,
}

impl DivisionType {
    pub fn real_dim(self) -> usize {
        match self {
            DivisionType::R => 1,
            DivisionType::C => 2,
            DivisionType::H => 4,
        }
    }

    pub fn from_dim(k: usize) -> Result<Self> {
        match k {
            1 => Ok(DivisionType::R),
            2 => Ok(DivisionType::C),
            4 => Ok(DivisionType::H),
            _ => Err(Error::BadDivisionDimension(k)),
        }
    }
}

/// A finite group together with one invertible rational matrix per element.
#[derive(Clone, Debug)]
pub struct Representation {
    pub group: FiniteGroup,
    pub degree: usize,
    pub matrices: Vec<Matrix<Rational>>,
}

impl Representation {
    /// Validates multiplicativity on the full table and the identity matrix
    /// at the identity element.
    pub fn new(group: FiniteGroup, matrices: Vec<Matrix<Rational>>) -> Result<Self> {
        if matrices.len() != group.order() {
            return Err(Error::BadRepresentation(format!(
                "expected {} matrices, got {}",
                group.order(),
                matrices.len()
            )));
        }
        let degree = matrices[0].rows();
        for m in &matrices {
            if m.rows() != degree || m.cols() != degree {
                return Err(Error::BadRepresentation("non-square or ragged matrices".into()));
            }
        }
        if matrices[group.identity()] != Matrix::identity(degree) {
            return Err(Error::BadRepresentation("identity element must act as identity".into()));
        }
        for g in group.elements() {
            for h in group.elements() {
                if matrices[g].mul(&matrices[h]) != matrices[group.mul(g, h)] {
                    return Err(Error::BadRepresentation(format!(
                        "multiplicativity fails at ({g},{h})"
                    )));
                }
            }
        }
        Ok(Representation {
            group,
            degree,
            matrices,
        })
    }

    pub fn matrix(&self, g: usize) -> &Matrix<Rational> {
        &self.matrices[g]
    }

    /// The dual representation `g ↦ ρ(g⁻¹)ᵀ`.
    pub fn dual(&self) -> Representation {
        let matrices = self
            .group
            .elements()
            .map(|g| self.matrices[self.group.inv(g)].transpose())
            .collect();
        Representation::new(self.group.clone(), matrices).expect("dual of a rep is a rep")
    }

    /// Dimension of the subspace fixed by every listed element.
    pub fn fixed_subspace_dim(&self, elements: &[usize]) -> usize {
        if elements.is_empty() {
            return self.degree;
        }
        let id = Matrix::identity(self.degree);
        let mut stacked: Option<Matrix<Rational>> = None;
        for &c in elements {
            let block = &self.matrices[c] - &id;
            stacked = Some(match stacked {
                None => block,
                Some(s) => s.vstack(&block),
            });
        }
        stacked.unwrap().nullspace_basis().len()
    }
}

/// Basis of `{A : A·r1(g) = r2(g)·A for all g}`, returned as matrices of
/// shape `deg(r2) × deg(r1)`. Computed as the nullspace of the stacked
/// commutation system.
pub fn intertwiner_basis(r1: &Representation, r2: &Representation) -> Vec<Matrix<Rational>> {
    assert_eq!(
        r1.group.order(),
        r2.group.order(),
        "representations of different groups"
    );
    let (d1, d2) = (r1.degree, r2.degree);
    let unknowns = d2 * d1; // A[i][j], row-major
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(r1.group.order() * unknowns);
    for g in r1.group.elements() {
        let m1 = r1.matrix(g);
        let m2 = r2.matrix(g);
        for i in 0..d2 {
            for j in 0..d1 {
                // (A·m1 - m2·A)[i][j] = Σ_k A[i][k] m1[k][j] - Σ_k m2[i][k] A[k][j]
                let mut row = vec![rat_int(0); unknowns];
                for k in 0..d1 {
                    row[i * d1 + k] = &row[i * d1 + k] + m1.at(k, j);
                }
                for k in 0..d2 {
                    row[k * d1 + j] = &row[k * d1 + j] - m2.at(i, k);
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(rows);
    system
        .nullspace_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(d2, d1, |i, j| v[i * d1 + j].clone()))
        .collect()
}

fn is_perfect_square(q: &Rational) -> bool {
    if q.is_negative() {
        return false;
    }
    let sqrt_ok = |n: &BigInt| {
        let r = n.sqrt();
        &r * &r == *n
    };
    sqrt_ok(q.numer()) && sqrt_ok(q.denom())
}

/// Minimal polynomial of `a` on the cyclic subspace of `v` (monic,
/// ascending coefficients).
fn local_min_poly(a: &Matrix<Rational>, v: &[Rational]) -> Vec<Rational> {
    let mut krylov: Vec<Vec<Rational>> = vec![v.to_vec()];
    loop {
        let next = a.mul_vec(krylov.last().unwrap());
        let cols = Matrix::from_columns(&krylov);
        if let Ok(Some(coeffs)) = cols.solve(&next) {
            // a^m v = Σ coeffs_i a^i v, so min poly is x^m - Σ coeffs_i x^i.
            let mut p: Vec<Rational> = coeffs.into_iter().map(|c| -c).collect();
            p.push(rat_int(1));
            return p;
        }
        krylov.push(next);
    }
}

/// Certify irreducibility and return the division type of the commuting
/// algebra: `R`, `C`, or `H` according to its real dimension 1, 2, or 4.
///
/// The certificate combines: the commutant dimension lying in {1,2,4} and
/// dividing the degree compatibly; invertibility of every commutant basis
/// element and of seeded random combinations (a division algebra has no
/// nonzero singular elements); and an eigenvalue split probe on random
/// commutant elements (a rational eigenvalue with a proper eigenspace
/// exhibits an invariant subspace).
pub fn division_type(r: &Representation) -> Result<DivisionType> {
    let basis = intertwiner_basis(r, r);
    let k = basis.len();
    let ty = DivisionType::from_dim(k)
        .map_err(|_| Error::NotIrreducible(format!("commutant has dimension {k}")))?;
    if r.degree % k != 0 {
        return Err(Error::NotIrreducible(format!(
            "commutant dimension {k} does not divide the degree {}",
            r.degree
        )));
    }
    for b in &basis {
        if !b.is_invertible() {
            return Err(Error::NotIrreducible(
                "commutant basis element is singular".into(),
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e55);
    for _ in 0..20 {
        let combo = basis.iter().fold(Matrix::zero(r.degree, r.degree), |acc, b| {
            let c = rat_int(rng.gen_range(-5i64..=5));
            &acc + &b.scale(&c)
        });
        if combo.is_zero() {
            continue;
        }
        if !combo.is_invertible() {
            return Err(Error::NotIrreducible(
                "singular nonzero element in the commutant".into(),
            ));
        }
        // Probe for an invariant subspace via rational eigenvalues.
        let v: Vec<Rational> = (0..r.degree)
            .map(|_| rat_int(rng.gen_range(-3i64..=3)))
            .collect();
        if v.iter().all(|x| Zero::is_zero(x)) {
            continue;
        }
        let p = local_min_poly(&combo, &v);
        let rational_roots: Vec<Rational> = match p.len() {
            2 => vec![-p[0].clone()],
            3 => {
                // x^2 + bx + c with b = p[1], c = p[0]
                let disc = &p[1] * &p[1] - rat_int(4) * &p[0];
                if is_perfect_square(&disc) {
                    let s_num = BigInt::from(disc.numer().sqrt());
                    let s_den = BigInt::from(disc.denom().sqrt());
                    let s = Rational::new(s_num, s_den);
                    vec![
                        (&s - &p[1]) / rat_int(2),
                        (-(&s) - &p[1]) / rat_int(2),
                    ]
                } else {
                    vec![]
                }
            }
            _ => vec![],
        };
        for lambda in rational_roots {
            let shifted = &combo - &Matrix::identity(r.degree).scale(&lambda);
            let eig_dim = shifted.nullspace_basis().len();
            if eig_dim > 0 && eig_dim < r.degree {
                return Err(Error::NotIrreducible(
                    "commutant element splits off a proper invariant subspace".into(),
                ));
            }
        }
    }
    Ok(ty)
}

/// One irreducible with its certified division data.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub rep: Representation,
    pub division: DivisionType,
}

impl CatalogEntry {
    pub fn k(&self) -> usize {
        self.division.real_dim()
    }

    pub fn degree(&self) -> usize {
        self.rep.degree
    }
}

/// A complete list of pairwise non-isomorphic irreducibles of one group.
#[derive(Clone, Debug)]
pub struct IrreducibleCatalog {
    pub group: FiniteGroup,
    pub entries: Vec<CatalogEntry>,
}

impl IrreducibleCatalog {
    /// Certify each entry irreducible, entries pairwise non-isomorphic
    /// (zero intertwiner spaces), and the catalog complete: the sum of
    /// `deg²/k` must equal the group order.
    pub fn new(group: FiniteGroup, reps: Vec<Representation>) -> Result<Self> {
        let mut entries = Vec::with_capacity(reps.len());
        for rep in reps {
            let division = division_type(&rep)?;
            entries.push(CatalogEntry { rep, division });
        }
        for (i, a) in entries.iter().enumerate() {
            for b in entries.iter().skip(i + 1) {
                if !intertwiner_basis(&a.rep, &b.rep).is_empty() {
                    return Err(Error::BadRepresentation(
                        "catalog entries are isomorphic".into(),
                    ));
                }
            }
        }
        let catalog = IrreducibleCatalog { group, entries };
        catalog.check_complete()?;
        Ok(catalog)
    }

    pub fn check_complete(&self) -> Result<()> {
        // Σ deg²/k over the entries must equal |G| exactly.
        let mut acc = Rational::zero();
        for e in self.entries.iter() {
            acc = acc + Rational::new(BigInt::from((e.degree() * e.degree()) as i64), BigInt::from(e.k() as i64));
        }
        let want = rat_int(self.group.order() as i64);
        if acc != want {
            return Err(Error::IncompleteCatalog {
                got: acc.to_string(),
                want: self.group.order(),
            });
        }
        Ok(())
    }
}

fn pow_matrix(m: &Matrix<Rational>, e: usize) -> Matrix<Rational> {
    let mut acc = Matrix::identity(m.rows());
    for _ in 0..e {
        acc = acc.mul(m);
    }
    acc
}

fn one_dim_rep(group: &FiniteGroup, values: Vec<i64>) -> Representation {
    let matrices = values
        .into_iter()
        .map(|v| Matrix::from_i64(&[&[v]]))
        .collect();
    Representation::new(group.clone(), matrices).expect("one-dimensional rep")
}

/// Built-in groups with shipped catalogs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinGroup {
    Z2,
    Z3,
    Z4,
    S3,
    D4,
    Q8,
}

impl BuiltinGroup {
    pub const ALL: [BuiltinGroup; 6] = [
        BuiltinGroup::Z2,
        BuiltinGroup::Z3,
        BuiltinGroup::Z4,
        BuiltinGroup::S3,
        BuiltinGroup::D4,
        BuiltinGroup::Q8,
    ];

    pub fn from_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "z2" | "z/2" | "c2" => Some(BuiltinGroup::Z2),
            "z3" | "z/3" | "c3" => Some(BuiltinGroup::Z3),
            "z4" | "z/4" | "c4" => Some(BuiltinGroup::Z4),
            "s3" => Some(BuiltinGroup::S3),
            "d4" => Some(BuiltinGroup::D4),
            "q8" => Some(BuiltinGroup::Q8),
            _ => None,
        }
    }

    pub fn group(self) -> FiniteGroup {
        match self {
            BuiltinGroup::Z2 => FiniteGroup::cyclic(2),
            BuiltinGroup::Z3 => FiniteGroup::cyclic(3),
            BuiltinGroup::Z4 => FiniteGroup::cyclic(4),
            BuiltinGroup::S3 => FiniteGroup::symmetric_3(),
            BuiltinGroup::D4 => FiniteGroup::dihedral_4(),
            BuiltinGroup::Q8 => FiniteGroup::quaternion_8(),
        }
    }

    /// The certified catalog of irreducibles over the rationals.
    pub fn catalog(self) -> IrreducibleCatalog {
        let group = self.group();
        let reps: Vec<Representation> = match self {
            BuiltinGroup::Z2 => vec![
                one_dim_rep(&group, vec![1, 1]),
                one_dim_rep(&group, vec![1, -1]),
            ],
            BuiltinGroup::Z3 => {
                // Order-three integral rotation: companion matrix of x²+x+1.
                let r = Matrix::from_i64(&[&[0, -1], &[1, -1]]);
                let matrices = (0..3).map(|e| pow_matrix(&r, e)).collect();
                vec![
                    one_dim_rep(&group, vec![1, 1, 1]),
                    Representation::new(group.clone(), matrices).unwrap(),
                ]
            }
            BuiltinGroup::Z4 => {
                let r = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
                let matrices = (0..4).map(|e| pow_matrix(&r, e)).collect();
                vec![
                    one_dim_rep(&group, vec![1, 1, 1, 1]),
                    one_dim_rep(&group, vec![1, -1, 1, -1]),
                    Representation::new(group.clone(), matrices).unwrap(),
                ]
            }
            BuiltinGroup::S3 => {
                // Permutations in lexicographic one-line order; see
                // FiniteGroup::symmetric_3.
                let perms: Vec<[usize; 3]> = vec![
                    [0, 1, 2],
                    [0, 2, 1],
                    [1, 0, 2],
                    [1, 2, 0],
                    [2, 0, 1],
                    [2, 1, 0],
                ];
                let parity = |p: &[usize; 3]| -> i64 {
                    let mut inv = 0;
                    for i in 0..3 {
                        for j in i + 1..3 {
                            if p[i] > p[j] {
                                inv += 1;
                            }
                        }
                    }
                    if inv % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                };
                let sign_values = perms.iter().map(parity).collect();
                // Standard rep on {x ∈ ℝ³ : Σx = 0} with basis e0-e1, e1-e2.
                let f = [
                    vec![rat_int(1), rat_int(-1), rat_int(0)],
                    vec![rat_int(0), rat_int(1), rat_int(-1)],
                ];
                let basis = Matrix::from_columns(&f);
                let std_matrices: Vec<Matrix<Rational>> = perms
                    .iter()
                    .map(|p| {
                        let cols: Vec<Vec<Rational>> = (0..2)
                            .map(|j| {
                                let image: Vec<Rational> =
                                    (0..3).map(|i| {
                                        // P(p) e_i = e_{p(i)}; image of f_j.
                                        let mut acc = rat_int(0);
                                        for (src, val) in f[j].iter().enumerate() {
                                            if p[src] == i {
                                                acc = acc + val.clone();
                                            }
                                        }
                                        acc
                                    }).collect();
                                basis
                                    .solve(&image)
                                    .unwrap()
                                    .expect("image stays in the zero-sum plane")
                            })
                            .collect();
                        Matrix::from_columns(&cols)
                    })
                    .collect();
                vec![
                    one_dim_rep(&group, vec![1; 6]),
                    one_dim_rep(&group, sign_values),
                    Representation::new(group.clone(), std_matrices).unwrap(),
                ]
            }
            BuiltinGroup::D4 => {
                // Elements r^a s^b indexed a + 4b.
                let r = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
                let s = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
                let two_dim: Vec<Matrix<Rational>> = (0..8)
                    .map(|g| {
                        let (a, b) = (g % 4, g / 4);
                        let m = pow_matrix(&r, a);
                        if b == 1 {
                            m.mul(&s)
                        } else {
                            m
                        }
                    })
                    .collect();
                let chi = |rv: i64, sv: i64| -> Vec<i64> {
                    (0..8)
                        .map(|g: usize| {
                            let (a, b) = ((g % 4) as u32, (g / 4) as u32);
                            rv.pow(a) * sv.pow(b)
                        })
                        .collect()
                };
                vec![
                    one_dim_rep(&group, chi(1, 1)),
                    one_dim_rep(&group, chi(1, -1)),
                    one_dim_rep(&group, chi(-1, 1)),
                    one_dim_rep(&group, chi(-1, -1)),
                    Representation::new(group.clone(), two_dim).unwrap(),
                ]
            }
            BuiltinGroup::Q8 => {
                // Elements (sign, axis) indexed 2*axis + (sign < 0), axes 1,i,j,k.
                let li = Matrix::from_i64(&[
                    &[0, -1, 0, 0],
                    &[1, 0, 0, 0],
                    &[0, 0, 0, -1],
                    &[0, 0, 1, 0],
                ]);
                let lj = Matrix::from_i64(&[
                    &[0, 0, -1, 0],
                    &[0, 0, 0, 1],
                    &[1, 0, 0, 0],
                    &[0, -1, 0, 0],
                ]);
                let lk = li.mul(&lj);
                let four_dim: Vec<Matrix<Rational>> = (0..8)
                    .map(|g: usize| {
                        let axis = g / 2;
                        let base = match axis {
                            0 => Matrix::identity(4),
                            1 => li.clone(),
                            2 => lj.clone(),
                            _ => lk.clone(),
                        };
                        if g % 2 == 1 {
                            base.scale(&rat_int(-1))
                        } else {
                            base
                        }
                    })
                    .collect();
                let chi = |iv: i64, jv: i64| -> Vec<i64> {
                    // sign factors through the quotient by {±1}
                    let axis_val = [1, iv, jv, iv * jv];
                    (0..8).map(|g: usize| axis_val[g / 2]).collect()
                };
                vec![
                    one_dim_rep(&group, chi(1, 1)),
                    one_dim_rep(&group, chi(1, -1)),
                    one_dim_rep(&group, chi(-1, 1)),
                    one_dim_rep(&group, chi(-1, -1)),
                    Representation::new(group.clone(), four_dim).unwrap(),
                ]
            }
        };
        IrreducibleCatalog::new(group, reps).expect("built-in catalog certifies")
    }
}

/// Isotypic multiplicities `d_α` of `v` against a complete catalog:
/// the real dimension of the intertwiner space from each irreducible,
/// divided by its commuting-algebra dimension. Enforces the reconstruction
/// identity `Σ d_α·deg(V_α) = deg(v)`.
pub fn multiplicities(v: &Representation, catalog: &IrreducibleCatalog) -> Result<Vec<usize>> {
    catalog.check_complete()?;
    let mut out = Vec::with_capacity(catalog.entries.len());
    for entry in &catalog.entries {
        let hom_dim = intertwiner_basis(&entry.rep, v).len();
        if hom_dim % entry.k() != 0 {
            return Err(Error::BadRepresentation(format!(
                "intertwiner dimension {hom_dim} is not a multiple of k = {}",
                entry.k()
            )));
        }
        out.push(hom_dim / entry.k());
    }
    let total: usize = out
        .iter()
        .zip(&catalog.entries)
        .map(|(d, e)| d * e.degree())
        .sum();
    if total != v.degree {
        return Err(Error::IncompleteCatalog {
            got: total.to_string(),
            want: v.degree,
        });
    }
    Ok(out)
}

/// Permutation representation on functions on the left cosets `G/C` by left
/// translation; its degree is the index of `C`.
pub fn coset_permutation_rep(group: &FiniteGroup, subgroup: &[usize]) -> Result<Representation> {
    group.check_subgroup(subgroup)?;
    let cosets = group.left_cosets(subgroup);
    let m = cosets.len();
    let matrices = group
        .elements()
        .map(|g| {
            Matrix::from_fn(m, m, |i, j| {
                let target = group.coset_index(&cosets, group.mul(g, cosets[j][0]));
                if target == i {
                    rat_int(1)
                } else {
                    rat_int(0)
                }
            })
        })
        .collect();
    Representation::new(group.clone(), matrices)
}

/// The regular representation (left translation on functions on `G`).
pub fn regular_representation(group: &FiniteGroup) -> Representation {
    coset_permutation_rep(group, &[group.identity()]).expect("trivial subgroup is closed")
}

/// Seeded random invertible rational matrix with small entries.
pub fn random_invertible(n: usize, rng: &mut impl Rng) -> Matrix<Rational> {
    loop {
        let m: Matrix<Rational> =
            Matrix::from_fn(n, n, |_, _| rat_int(rng.gen_range(-3i64..=3)));
        if m.is_invertible() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalogs_certify() {
        for b in BuiltinGroup::ALL {
            let catalog = b.catalog();
            catalog.check_complete().unwrap();
        }
    }

    #[test]
    fn division_types_match() {
        let z3 = BuiltinGroup::Z3.catalog();
        assert_eq!(z3.entries[0].division, DivisionType::R);
        assert_eq!(z3.entries[1].division, DivisionType::C);
        let q8 = BuiltinGroup::Q8.catalog();
        assert_eq!(q8.entries[4].division, DivisionType::H);
        let s3 = BuiltinGroup::S3.catalog();
        assert_eq!(s3.entries[2].division, DivisionType::R);
    }

    #[test]
    fn schur_vanishing_between_distinct_irreducibles() {
        let z2 = BuiltinGroup::Z2.catalog();
        assert!(intertwiner_basis(&z2.entries[0].rep, &z2.entries[1].rep).is_empty());
        // Self-intertwiners of the trivial rep: dimension 1.
        assert_eq!(intertwiner_basis(&z2.entries[0].rep, &z2.entries[0].rep).len(), 1);
    }

    #[test]
    fn rotation_rep_commutant_has_dimension_two() {
        let z3 = BuiltinGroup::Z3.catalog();
        let rot = &z3.entries[1].rep;
        assert_eq!(intertwiner_basis(rot, rot).len(), 2);
    }

    #[test]
    fn reducible_rep_is_rejected() {
        // trivial ⊕ sign of Z/2: commutant is diagonal 2x2, dimension 2,
        // but contains singular nonzero elements.
        let z2 = FiniteGroup::cyclic(2);
        let rep = Representation::new(
            z2,
            vec![
                Matrix::from_i64(&[&[1, 0], &[0, 1]]),
                Matrix::from_i64(&[&[1, 0], &[0, -1]]),
            ],
        )
        .unwrap();
        assert!(division_type(&rep).is_err());
        // Doubled trivial rep: commutant is all of M2, dimension 4, degree 2.
        let z2 = FiniteGroup::cyclic(2);
        let doubled = Representation::new(
            z2,
            vec![Matrix::identity(2), Matrix::identity(2)],
        )
        .unwrap();
        assert!(division_type(&doubled).is_err());
    }

    #[test]
    fn regular_rep_multiplicities() {
        let s3 = BuiltinGroup::S3.catalog();
        let reg = regular_representation(&s3.group);
        assert_eq!(multiplicities(&reg, &s3).unwrap(), vec![1, 1, 2]);

        let z4 = BuiltinGroup::Z4.catalog();
        let reg4 = regular_representation(&z4.group);
        assert_eq!(multiplicities(&reg4, &z4).unwrap(), vec![1, 1, 1]);

        // d_α · k_α = deg(V_α) on the regular representation, all groups.
        for b in BuiltinGroup::ALL {
            let catalog = b.catalog();
            let reg = regular_representation(&catalog.group);
            let mult = multiplicities(&reg, &catalog).unwrap();
            for (d, e) in mult.iter().zip(&catalog.entries) {
                assert_eq!(d * e.k(), e.degree());
            }
        }
    }

    #[test]
    fn trivial_rep_multiplicity_vector() {
        let s3 = BuiltinGroup::S3.catalog();
        let trivial = one_dim_rep(&s3.group, vec![1; 6]);
        assert_eq!(multiplicities(&trivial, &s3).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn coset_rep_of_full_subgroup_is_trivial() {
        let s3 = FiniteGroup::symmetric_3();
        let all: Vec<usize> = s3.elements().collect();
        let rep = coset_permutation_rep(&s3, &all).unwrap();
        assert_eq!(rep.degree, 1);
        assert_eq!(rep.matrices[3], Matrix::identity(1));
    }

    #[test]
    fn z2_regular_rep_splits_into_trivial_and_sign() {
        let z2 = BuiltinGroup::Z2.catalog();
        let rep = coset_permutation_rep(&z2.group, &[0]).unwrap();
        assert_eq!(multiplicities(&rep, &z2).unwrap(), vec![1, 1]);
    }

    #[test]
    fn s3_coset_rep_multiplicities() {
        let s3cat = BuiltinGroup::S3.catalog();
        let sub = vec![0, 1]; // two-element subgroup generated by a transposition
        let rep = coset_permutation_rep(&s3cat.group, &sub).unwrap();
        assert_eq!(rep.degree, 3);
        assert_eq!(multiplicities(&rep, &s3cat).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn coset_rep_multiplicity_equals_fixed_vectors() {
        // Multiplicity of V_α in Map(G/C, ℝ) is dim (V_α*)^C / k_α.
        let s3cat = BuiltinGroup::S3.catalog();
        for sub in [vec![0usize], vec![0, 1], vec![0, 3, 4]] {
            let rep = coset_permutation_rep(&s3cat.group, &sub).unwrap();
            let mult = multiplicities(&rep, &s3cat).unwrap();
            for (m, e) in mult.iter().zip(&s3cat.entries) {
                let fixed = e.rep.dual().fixed_subspace_dim(&sub);
                assert_eq!(fixed % e.k(), 0);
                assert_eq!(*m, fixed / e.k());
            }
        }
    }

    #[test]
    fn intertwiner_dimension_is_conjugation_invariant() {
        let z3 = BuiltinGroup::Z3.catalog();
        let rot = &z3.entries[1].rep;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = random_invertible(2, &mut rng);
        let p_inv = p.inverse().unwrap();
        let conjugated = Representation::new(
            rot.group.clone(),
            rot.matrices.iter().map(|m| p.mul(m).mul(&p_inv)).collect(),
        )
        .unwrap();
        assert_eq!(
            intertwiner_basis(rot, rot).len(),
            intertwiner_basis(&conjugated, &conjugated).len()
        );
        assert_eq!(
            intertwiner_basis(rot, &conjugated).len(),
            intertwiner_basis(rot, rot).len()
        );
    }
}
