//! Finite groups as multiplication tables.
//!
//! All target groups are tiny, so the table form keeps closure and
//! associativity checks trivial and makes subgroup arithmetic (cosets,
//! conjugates, normal cores, quotients) a matter of index bookkeeping.

use crate::{Error, Result};

/// A finite group given by its full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// `table[g][h] = g·h`.
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    name: String,
}

impl FiniteGroup {
    /// Validate a multiplication table: entries in range, two-sided identity,
    /// inverses, and full associativity.
    pub fn from_table(table: Vec<Vec<usize>>, name: impl Into<String>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::BadGroupTable("empty table".into()));
        }
        for row in &table {
            if row.len() != order || row.iter().any(|&x| x >= order) {
                return Err(Error::BadGroupTable("ragged or out-of-range table".into()));
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::BadGroupTable("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; order];
        for g in 0..order {
            let inv = (0..order)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::BadGroupTable(format!("element {g} has no inverse")))?;
            inverse[g] = inv;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::BadGroupTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order,
            table,
            identity,
            inverse,
            name: name.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// Cyclic group of order `n` with elements `0..n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(table, format!("Z/{n}")).expect("cyclic table is a group")
    }

    /// Symmetric group on three letters; elements are the six permutations
    /// of `{0,1,2}` in lexicographic one-line order.
    pub fn symmetric_3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
            // (p∘q)(x) = p(q(x))
            [p[q[0]], p[q[1]], p[q[2]]]
        };
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let pq = compose(p, q);
                        perms.iter().position(|r| *r == pq).unwrap()
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table, "S3").expect("S3 table is a group")
    }

    /// Dihedral group of the square, order 8: elements `r^a s^b` with
    /// `a ∈ 0..4`, `b ∈ 0..2`, indexed as `a + 4b`, relations `s r s = r⁻¹`.
    pub fn dihedral_4() -> Self {
        let idx = |a: usize, b: usize| a % 4 + 4 * (b % 2);
        let mut table = vec![vec![0usize; 8]; 8];
        for a1 in 0..4 {
            for b1 in 0..2 {
                for a2 in 0..4 {
                    for b2 in 0..2 {
                        // (r^a1 s^b1)(r^a2 s^b2) = r^(a1 + a2·(-1)^b1) s^(b1+b2)
                        let a = if b1 == 0 { a1 + a2 } else { a1 + 4 - a2 % 4 + 4 };
                        table[idx(a1, b1)][idx(a2, b2)] = idx(a % 4, b1 + b2);
                    }
                }
            }
        }
        FiniteGroup::from_table(table, "D4").expect("D4 table is a group")
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`, indexed `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion_8() -> Self {
        // Represent each element as (sign, axis) with axis in {1, i, j, k}.
        // Multiplication follows the quaternion relations.
        let mul_axis = |a: usize, b: usize| -> (i32, usize) {
            // axes: 0 = 1, 1 = i, 2 = j, 3 = k
            match (a, b) {
                (0, x) => (1, x),
                (x, 0) => (1, x),
                (1, 1) | (2, 2) | (3, 3) => (-1, 0),
                (1, 2) => (1, 3),
                (2, 1) => (-1, 3),
                (2, 3) => (1, 1),
                (3, 2) => (-1, 1),
                (3, 1) => (1, 2),
                (1, 3) => (-1, 2),
                _ => unreachable!(),
            }
        };
        let idx = |sign: i32, axis: usize| -> usize { 2 * axis + if sign > 0 { 0 } else { 1 } };
        let parts = |g: usize| -> (i32, usize) { (if g % 2 == 0 { 1 } else { -1 }, g / 2) };
        let mut table = vec![vec![0usize; 8]; 8];
        for g in 0..8 {
            for h in 0..8 {
                let (sg, ag) = parts(g);
                let (sh, ah) = parts(h);
                let (s, a) = mul_axis(ag, ah);
                table[g][h] = idx(sg * sh * s, a);
            }
        }
        FiniteGroup::from_table(table, "Q8").expect("Q8 table is a group")
    }

    /// Whether the element list is closed under products and inverses and
    /// contains the identity.
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        if !elements.contains(&self.identity) {
            return false;
        }
        for &a in elements {
            if a >= self.order || !elements.contains(&self.inv(a)) {
                return false;
            }
            for &b in elements {
                if !elements.contains(&self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn check_subgroup(&self, elements: &[usize]) -> Result<()> {
        if self.is_subgroup(elements) {
            Ok(())
        } else {
            Err(Error::SubgroupNotClosed)
        }
    }

    pub fn is_normal(&self, subgroup: &[usize]) -> bool {
        self.elements().all(|g| {
            subgroup
                .iter()
                .all(|&c| subgroup.contains(&self.mul(self.mul(g, c), self.inv(g))))
        })
    }

    /// Left cosets of a subgroup, each sorted, ordered by smallest member;
    /// the subgroup itself comes first.
    pub fn left_cosets(&self, subgroup: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut cosets = Vec::new();
        for g in self.elements() {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = subgroup.iter().map(|&c| self.mul(g, c)).collect();
            coset.sort_unstable();
            coset.dedup();
            for &x in &coset {
                seen[x] = true;
            }
            cosets.push(coset);
        }
        cosets
    }

    /// Index of the coset containing `g` in the `left_cosets` ordering.
    pub fn coset_index(&self, cosets: &[Vec<usize>], g: usize) -> usize {
        cosets
            .iter()
            .position(|c| c.binary_search(&g).is_ok())
            .expect("element lies in some coset")
    }

    /// Largest normal subgroup contained in the given subgroup,
    /// `N = ∩_g gCg⁻¹`. The result is normal, contained in `C`, and its
    /// index is at most `(index of C)!`.
    pub fn normal_core(&self, subgroup: &[usize]) -> Result<Vec<usize>> {
        self.check_subgroup(subgroup)?;
        let core: Vec<usize> = subgroup
            .iter()
            .copied()
            .filter(|&n| {
                self.elements()
                    .all(|g| subgroup.contains(&self.mul(self.mul(self.inv(g), n), g)))
            })
            .collect();
        debug_assert!(self.is_subgroup(&core));
        debug_assert!(self.is_normal(&core));
        let index_c = self.order / subgroup.len();
        let index_n = self.order / core.len();
        let factorial = (1..=index_c).product::<usize>();
        assert!(index_n <= factorial, "core index beats the factorial bound");
        Ok(core)
    }

    /// Quotient by a normal subgroup; elements of the quotient are the coset
    /// indices from `left_cosets`. Also returns the projection map.
    pub fn quotient(&self, normal_subgroup: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        self.check_subgroup(normal_subgroup)?;
        if !self.is_normal(normal_subgroup) {
            return Err(Error::NonNormalSubgroup);
        }
        let cosets = self.left_cosets(normal_subgroup);
        let m = cosets.len();
        let proj: Vec<usize> = self
            .elements()
            .map(|g| self.coset_index(&cosets, g))
            .collect();
        let mut table = vec![vec![0usize; m]; m];
        for (i, ci) in cosets.iter().enumerate() {
            for (j, cj) in cosets.iter().enumerate() {
                table[i][j] = proj[self.mul(ci[0], cj[0])];
            }
        }
        let q = FiniteGroup::from_table(table, format!("{}/N", self.name))?;
        Ok((q, proj))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables_are_groups() {
        for g in [
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(4),
            FiniteGroup::symmetric_3(),
            FiniteGroup::dihedral_4(),
            FiniteGroup::quaternion_8(),
        ] {
            assert!(g.order() >= 2);
        }
    }

    #[test]
    fn s3_transposition_core_is_trivial() {
        let s3 = FiniteGroup::symmetric_3();
        // [0,2,1] swaps 1 and 2; it sits at index 1 in lexicographic order.
        let sub = vec![s3.identity(), 1];
        assert!(s3.is_subgroup(&sub));
        let core = s3.normal_core(&sub).unwrap();
        assert_eq!(core, vec![s3.identity()]);
    }

    #[test]
    fn normal_subgroup_is_its_own_core() {
        let z4 = FiniteGroup::cyclic(4);
        let sub = vec![0, 2];
        assert_eq!(z4.normal_core(&sub).unwrap(), sub);

        let s3 = FiniteGroup::symmetric_3();
        let a3: Vec<usize> = s3
            .elements()
            .filter(|&g| matches!(g, 0 | 3 | 4))
            .collect();
        assert!(s3.is_subgroup(&a3));
        assert!(s3.is_normal(&a3));
        assert_eq!(s3.normal_core(&a3).unwrap(), a3);
    }

    #[test]
    fn quotient_of_q8_by_center_is_klein() {
        let q8 = FiniteGroup::quaternion_8();
        let center = vec![0, 1]; // {1, -1}
        assert!(q8.is_normal(&center));
        let (quot, proj) = q8.quotient(&center).unwrap();
        assert_eq!(quot.order(), 4);
        // Klein four-group: every element squares to the identity.
        for g in quot.elements() {
            assert_eq!(quot.mul(g, g), quot.identity());
        }
        assert_eq!(proj.len(), 8);
    }

    #[test]
    fn q8_relations() {
        let q8 = FiniteGroup::quaternion_8();
        let (i, j, k) = (2, 4, 6);
        let minus_one = 1;
        assert_eq!(q8.mul(i, i), minus_one);
        assert_eq!(q8.mul(j, j), minus_one);
        assert_eq!(q8.mul(i, j), k);
        assert_eq!(q8.mul(j, i), q8.mul(minus_one, k));
    }
}
