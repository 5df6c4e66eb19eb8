//! Finite groups as Cayley tables.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffmat::is_prime;

/// Largest order for which table invariants are verified exhaustively.
pub const EXHAUSTIVE_CHECK_ORDER: usize = 64;

/// The families of groups the library can build.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic { n: usize },
    ElemAbelian { p: u32, n: u32 },
    DirectProduct { factors: Vec<GroupSpec> },
    /// `C_p ⋊ C_m`, the generator of `C_m` acting by `x ↦ x^d`.
    SemidirectCpCm { p: u32, m: u32, d: u32 },
    /// Dihedral group of the given order (`2n`).
    Dihedral { order: usize },
    Quaternion8,
    /// Heisenberg group of order `p^3` and exponent `p`, for odd `p`.
    ExtraspecialP3ExponentP { p: u32 },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic { n } => write!(f, "C{n}"),
            GroupSpec::ElemAbelian { p, n } => {
                if *n == 1 {
                    write!(f, "C{p}")
                } else {
                    write!(f, "C{p}^{n}")
                }
            }
            GroupSpec::DirectProduct { factors } => {
                let parts: Vec<String> = factors.iter().map(|g| g.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::SemidirectCpCm { p, m, d } => write!(f, "C{p}:C{m}(d={d})"),
            GroupSpec::Dihedral { order } => write!(f, "D{order}"),
            GroupSpec::Quaternion8 => write!(f, "Q8"),
            GroupSpec::ExtraspecialP3ExponentP { p } => write!(f, "{p}^(1+2)+"),
        }
    }
}

fn mult_order_mod(d: u64, p: u64) -> Option<u64> {
    if d % p == 0 {
        return None;
    }
    let mut x = d % p;
    let mut k = 1;
    while x != 1 {
        x = x * d % p;
        k += 1;
    }
    Some(k)
}

impl GroupSpec {
    /// The order the family predicts, after validating parameters.
    pub fn order(&self) -> Result<usize> {
        self.validate()?;
        Ok(match self {
            GroupSpec::Cyclic { n } => *n,
            GroupSpec::ElemAbelian { p, n } => (*p as usize).pow(*n),
            GroupSpec::DirectProduct { factors } => {
                let mut o = 1usize;
                for g in factors {
                    o = o.checked_mul(g.order()?).ok_or_else(|| Error::InvalidParameter("order overflow".into()))?;
                }
                o
            }
            GroupSpec::SemidirectCpCm { p, m, .. } => (*p * *m) as usize,
            GroupSpec::Dihedral { order } => *order,
            GroupSpec::Quaternion8 => 8,
            GroupSpec::ExtraspecialP3ExponentP { p } => (*p as usize).pow(3),
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: String| Err(Error::InvalidParameter(s));
        match self {
            GroupSpec::Cyclic { n } if *n == 0 => bad("cyclic group needs n >= 1".into()),
            GroupSpec::ElemAbelian { p, .. } if !is_prime(*p as u64) => {
                bad(format!("elementary abelian group needs a prime, got {p}"))
            }
            GroupSpec::DirectProduct { factors } => {
                if factors.is_empty() {
                    return bad("direct product needs at least one factor".into());
                }
                factors.iter().try_for_each(|g| g.validate())
            }
            GroupSpec::SemidirectCpCm { p, m, d } => {
                if !is_prime(*p as u64) {
                    return bad(format!("semidirect product needs a prime p, got {p}"));
                }
                if *m == 0 {
                    return bad("semidirect product needs m >= 1".into());
                }
                match mult_order_mod(*d as u64, *p as u64) {
                    Some(k) if k == *m as u64 => Ok(()),
                    _ => bad(format!("d = {d} must have multiplicative order {m} mod {p}")),
                }
            }
            GroupSpec::Dihedral { order } if *order < 2 || order % 2 != 0 => {
                bad(format!("dihedral order must be even and at least 2, got {order}"))
            }
            GroupSpec::ExtraspecialP3ExponentP { p } if *p == 2 || !is_prime(*p as u64) => {
                bad(format!("extraspecial group of exponent p needs an odd prime, got {p}"))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<GroupTable> {
        GroupTable::build(self)
    }
}

/// A finite group given by its multiplication table. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mult: Vec<usize>,
    labels: Vec<String>,
    spec: Option<GroupSpec>,
}

impl GroupTable {
    /// Builds a table from a multiplication function on `0..order`, with 0 the identity.
    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut mult = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                mult[a * order + b] = mul(a, b);
            }
        }
        let labels = (0..order).map(|i| format!("g{i}")).collect();
        let t = GroupTable { order, mult, labels, spec: None };
        t.check_invariants()?;
        Ok(t)
    }

    pub fn build(spec: &GroupSpec) -> Result<Self> {
        let order = spec.order()?;
        let mut t = match spec {
            GroupSpec::Cyclic { n } => Self::from_fn(*n, |a, b| (a + b) % n)?,
            GroupSpec::ElemAbelian { p, n } => {
                let p = *p as usize;
                let digits = *n as usize;
                Self::from_fn(order, |a, b| {
                    let (mut x, mut y, mut out, mut place) = (a, b, 0, 1);
                    for _ in 0..digits {
                        out += ((x % p + y % p) % p) * place;
                        x /= p;
                        y /= p;
                        place *= p;
                    }
                    out
                })?
            }
            GroupSpec::DirectProduct { factors } => {
                let mut acc = factors[0].build()?;
                for g in &factors[1..] {
                    acc = acc.direct_product(&g.build()?)?;
                }
                acc
            }
            GroupSpec::SemidirectCpCm { p, m, d } => {
                let (p, m, d) = (*p as usize, *m as usize, *d as usize);
                // powers of d mod p
                let mut dpow = vec![1usize; m];
                for k in 1..m {
                    dpow[k] = dpow[k - 1] * d % p;
                }
                // element (a, b) encoded as a + p*b
                Self::from_fn(p * m, |x, y| {
                    let (a, b) = (x % p, x / p);
                    let (a2, b2) = (y % p, y / p);
                    let na = (a + dpow[b] * a2) % p;
                    let nb = (b + b2) % m;
                    na + p * nb
                })?
            }
            GroupSpec::Dihedral { order } => {
                let n = order / 2;
                // r^a s^b encoded as a + n*b; s r = r^-1 s
                Self::from_fn(*order, |x, y| {
                    let (a, b) = (x % n, x / n);
                    let (a2, b2) = (y % n, y / n);
                    let na = if b == 0 { (a + a2) % n } else { (a + n - a2) % n };
                    na + n * ((b + b2) % 2)
                })?
            }
            GroupSpec::Quaternion8 => {
                // i^a j^b with j^2 = i^2, j i = i^-1 j; encoded a + 4*b
                Self::from_fn(8, |x, y| {
                    let (a, b) = (x % 4, x / 4);
                    let (a2, b2) = (y % 4, y / 4);
                    let a2t = if b == 1 { (4 - a2) % 4 } else { a2 };
                    let mut na = (a + a2t) % 4;
                    let nb = b + b2;
                    if nb == 2 {
                        na = (na + 2) % 4;
                    }
                    na + 4 * (nb % 2)
                })?
            }
            GroupSpec::ExtraspecialP3ExponentP { p } => {
                let p = *p as usize;
                // (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b')
                Self::from_fn(p * p * p, |x, y| {
                    let (a, b, c) = (x % p, (x / p) % p, x / (p * p));
                    let (a2, b2, c2) = (y % p, (y / p) % p, y / (p * p));
                    let na = (a + a2) % p;
                    let nb = (b + b2) % p;
                    let nc = (c + c2 + a * b2) % p;
                    na + p * nb + p * p * nc
                })?
            }
        };
        if t.order != order {
            return Err(Error::Internal(format!("{spec} built with order {} instead of {order}", t.order)));
        }
        t.spec = Some(spec.clone());
        Ok(t)
    }

    fn direct_product(&self, other: &GroupTable) -> Result<GroupTable> {
        let m = other.order;
        Self::from_fn(self.order * m, |x, y| {
            let (a, b) = (x / m, x % m);
            let (a2, b2) = (y / m, y % m);
            self.mul(a, a2) * m + other.mul(b, b2)
        })
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.order;
        if n == 0 {
            return Err(Error::InvalidParameter("empty group".into()));
        }
        let fail = |s: &str| Err(Error::Internal(format!("group table invariant violated: {s}")));
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return fail("identity law");
            }
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                let x = self.mul(a, b);
                let y = self.mul(b, a);
                if x >= n || y >= n || row[x] || col[y] {
                    return fail("Latin square");
                }
                row[x] = true;
                col[y] = true;
            }
        }
        if n <= EXHAUSTIVE_CHECK_ORDER && !self.is_associative() {
            return fail("associativity");
        }
        Ok(())
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }
    #[inline]
    pub fn identity(&self) -> usize {
        0
    }
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.mul(a, b) == 0).expect("every element has an inverse")
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The prime `p` if the order is a power of `p` (order > 1).
    pub fn p_group_prime(&self) -> Option<u32> {
        let mut n = self.order;
        if n < 2 {
            return None;
        }
        let p = (2..=n).find(|d| n % d == 0)?;
        while n % p == 0 {
            n /= p;
        }
        (n == 1).then_some(p as u32)
    }

    /// Subgroup generated by a set of elements, by breadth-first closure.
    pub fn subgroup_closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([0usize]);
        let mut queue: VecDeque<usize> = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Frattini subgroup of a p-group: generated by p-th powers and commutators.
    pub fn frattini(&self) -> Result<BTreeSet<usize>> {
        let p = match self.p_group_prime() {
            Some(p) => p as usize,
            None if self.order == 1 => return Ok(BTreeSet::from([0])),
            None => return Err(Error::NotPGroup(self.order)),
        };
        let mut gens: BTreeSet<usize> = (0..self.order).map(|x| self.pow(x, p)).collect();
        for a in 0..self.order {
            for b in 0..self.order {
                let c = self.mul(self.mul(self.inverse(a), self.inverse(b)), self.mul(a, b));
                gens.insert(c);
            }
        }
        gens.remove(&0);
        let gens: Vec<usize> = gens.into_iter().collect();
        Ok(self.subgroup_closure(&gens))
    }

    /// Abelian, and every non-identity element has the same prime order.
    pub fn is_elementary_abelian(&self) -> bool {
        if !self.is_abelian() {
            return false;
        }
        if self.order == 1 {
            return true;
        }
        let Some(p) = self.p_group_prime() else { return false };
        (1..self.order).all(|a| self.element_order(a) == p as usize)
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let inv: Vec<usize> = (0..n).map(|a| self.inverse(a)).collect();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let cls: BTreeSet<usize> = (0..n).map(|g| self.mul(self.mul(g, x), inv[g])).collect();
            for &y in &cls {
                assigned[y] = true;
            }
            classes.push(cls.into_iter().collect());
        }
        classes
    }

    /// Center of the group.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))).collect()
    }

    /// Generators of the direct factors for an elementary abelian group built
    /// by [`GroupSpec::ElemAbelian`]: the elements `p^i`.
    pub fn elem_abelian_generators(&self) -> Option<Vec<usize>> {
        match self.spec {
            Some(GroupSpec::ElemAbelian { p, n }) => Some((0..n).map(|i| (p as usize).pow(i)).collect()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_abelian_9() {
        let g = GroupSpec::ElemAbelian { p: 3, n: 2 }.build().unwrap();
        assert_eq!(g.order(), 9);
        assert!((1..9).all(|a| g.element_order(a) == 3));
        assert!(g.is_elementary_abelian());
        assert_eq!(g.frattini().unwrap().len(), 1);
    }

    #[test]
    fn s3_from_semidirect() {
        let g = GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }.build().unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn dihedral_and_quaternion() {
        let d8 = GroupSpec::Dihedral { order: 8 }.build().unwrap();
        assert_eq!(d8.center().len(), 2);
        assert_eq!(d8.conjugacy_classes().len(), 5);
        assert_eq!(d8.frattini().unwrap().len(), 2);
        let q8 = GroupSpec::Quaternion8.build().unwrap();
        assert_eq!(q8.center().len(), 2);
        assert_eq!(q8.conjugacy_classes().len(), 5);
        // six elements of order 4, one of order 2
        assert_eq!((1..8).filter(|&a| q8.element_order(a) == 4).count(), 6);
    }

    #[test]
    fn heisenberg_exponent_p() {
        let h = GroupSpec::ExtraspecialP3ExponentP { p: 3 }.build().unwrap();
        assert_eq!(h.order(), 27);
        assert!((1..27).all(|a| h.element_order(a) == 3));
        assert!(!h.is_abelian());
        assert_eq!(h.center().len(), 3);
        assert_eq!(h.conjugacy_classes().len(), 11);
    }

    #[test]
    fn frattini_of_cyclic() {
        let c4 = GroupSpec::Cyclic { n: 4 }.build().unwrap();
        assert_eq!(c4.frattini().unwrap(), BTreeSet::from([0, 2]));
        let c9 = GroupSpec::Cyclic { n: 9 }.build().unwrap();
        assert_eq!(c9.frattini().unwrap(), BTreeSet::from([0, 3, 6]));
        let c6 = GroupSpec::Cyclic { n: 6 }.build().unwrap();
        assert_eq!(c6.frattini(), Err(Error::NotPGroup(6)));
    }

    #[test]
    fn elementary_abelian_predicate() {
        assert!(GroupSpec::ElemAbelian { p: 2, n: 3 }.build().unwrap().is_elementary_abelian());
        assert!(!GroupSpec::Cyclic { n: 4 }.build().unwrap().is_elementary_abelian());
        assert!(GroupSpec::Cyclic { n: 1 }.build().unwrap().is_elementary_abelian());
        assert!(!GroupSpec::Cyclic { n: 6 }.build().unwrap().is_elementary_abelian());
    }

    #[test]
    fn invalid_parameters() {
        assert!(GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 1 }.build().is_err());
        assert!(GroupSpec::SemidirectCpCm { p: 5, m: 4, d: 4 }.build().is_err());
        assert!(GroupSpec::SemidirectCpCm { p: 5, m: 4, d: 2 }.build().is_ok());
        assert!(GroupSpec::Dihedral { order: 7 }.build().is_err());
        assert!(GroupSpec::ExtraspecialP3ExponentP { p: 2 }.build().is_err());
        assert!(GroupSpec::ElemAbelian { p: 4, n: 2 }.build().is_err());
    }

    #[test]
    fn products() {
        let g = GroupSpec::DirectProduct {
            factors: vec![GroupSpec::Cyclic { n: 2 }, GroupSpec::Cyclic { n: 4 }],
        }
        .build()
        .unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert!(!g.is_elementary_abelian());
        assert_eq!(g.frattini().unwrap().len(), 2);
    }
}
