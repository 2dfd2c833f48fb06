//! Symmetric polynomials in finitely many variables, stored in the monomial basis.
//!
//! A [`SymFunc`] in `n` variables is `sum_lambda c_lambda(q) * m_lambda(x_1..x_n)`.
//! Two symmetric functions of degree `d` agree as soon as they agree in `n >= d`
//! variables, so all identities in this crate are checked with `n` at least the
//! degree. Schur expansions are only produced when that holds.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::qpoly::Poly;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!(
                "{parts:?} is not a weakly decreasing sequence of positive integers"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts an exponent vector into a partition, dropping zeros.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut parts: Vec<usize> = exps.iter().copied().filter(|&e| e > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Number of distinct rearrangements of the exponent vector in `n` slots.
    pub fn orbit_size(&self, n: usize) -> u64 {
        if self.len() > n {
            return 0;
        }
        let mut mults: BTreeMap<usize, u64> = BTreeMap::new();
        for &p in &self.0 {
            *mults.entry(p).or_default() += 1;
        }
        mults.insert(0, (n - self.len()) as u64);
        let mut out: u64 = 1;
        let mut placed: u64 = 0;
        for (_, m) in mults {
            for k in 1..=m {
                placed += 1;
                out = out * placed / k;
            }
        }
        out
    }
}

/// Canonical output order: by size, then reverse lexicographic (`(3) < (2,1) < (1,1,1)`).
pub fn canonical_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.cmp(a))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of `d` with at most `max_parts` parts, in decreasing lexicographic order.
pub fn partitions_of(d: usize, max_parts: usize) -> Vec<Partition> {
    fn rec(rest: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, max_parts, &mut Vec::new(), &mut out);
    out
}

/// A symmetric polynomial in `num_vars` variables with coefficients in `C[q]`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc<C> {
    num_vars: usize,
    terms: BTreeMap<Partition, Poly<C>>,
}

impl<C: Coefficient> SymFunc<C> {
    pub fn zero(num_vars: usize) -> Self {
        SymFunc {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::monomial(Partition::empty(), Poly::one(), num_vars)
    }

    /// `coeff * m_lambda`; zero when `lambda` has more parts than variables.
    pub fn monomial(lambda: Partition, coeff: Poly<C>, num_vars: usize) -> Self {
        let mut out = Self::zero(num_vars);
        out.add_term(lambda, &coeff);
        out
    }

    pub fn from_terms<I>(num_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, Poly<C>)>,
    {
        let mut out = Self::zero(num_vars);
        for (lambda, c) in terms {
            out.add_term(lambda, &c);
        }
        out
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Poly<C>> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Poly<C> {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff * m_lambda` in place.
    pub fn add_term(&mut self, lambda: Partition, coeff: &Poly<C>) {
        if coeff.is_zero() || lambda.len() > self.num_vars {
            return;
        }
        match self.terms.get_mut(&lambda) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, coeff.clone());
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Product in the monomial basis.
    ///
    /// The coefficient of `m_nu` in a product of symmetric polynomials is the
    /// coefficient of the single monomial `x^nu`, which is a sum over the ways
    /// of splitting `nu` into two exponent vectors.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let n = self.num_vars;
        let mut out = Self::zero(n);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        let degrees = |s: &Self| {
            let mut ds: Vec<usize> = s.terms.keys().map(Partition::size).collect();
            ds.dedup();
            ds.sort_unstable();
            ds.dedup();
            ds
        };
        for da in degrees(self) {
            for db in degrees(other) {
                with_product_table(da, db, n, |table| {
                    for (nu, splits) in table {
                        let mut acc = Poly::<C>::zero();
                        for (lambda, mu, count) in splits {
                            let (Some(a), Some(b)) = (self.terms.get(lambda), other.terms.get(mu))
                            else {
                                continue;
                            };
                            let prod = a * b;
                            if *count == 1 {
                                acc += &prod;
                            } else {
                                acc += &prod.scale(&C::from_count(*count));
                            }
                        }
                        out.add_term(nu.clone(), &acc);
                    }
                });
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Poly<C>) -> Self {
        let mut out = Self::zero(self.num_vars);
        if c.is_zero() {
            return out;
        }
        for (lambda, a) in &self.terms {
            out.add_term(lambda.clone(), &(a * c));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly<C>) -> Poly<C>) -> Self {
        Self::from_terms(
            self.num_vars,
            self.terms.iter().map(|(l, c)| (l.clone(), f(c))),
        )
    }

    /// Applies `q -> q + 1` to every coefficient.
    pub fn shift_q(&self) -> Self {
        self.map_coeffs(Poly::shift_q)
    }

    /// Divides every coefficient by `(q - 1)^k`.
    pub fn exact_div_qminus1_pow(&self, k: usize) -> Result<Self> {
        let mut out = Self::zero(self.num_vars);
        for (lambda, c) in &self.terms {
            out.add_term(lambda.clone(), &c.exact_div_qminus1_pow(k)?);
        }
        Ok(out)
    }

    /// The common degree of all terms; `None` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let mut it = self.terms.keys().map(Partition::size);
        let Some(first) = it.next() else {
            return Ok(None);
        };
        for d in it {
            if d != first {
                return Err(Error::NotHomogeneous { first, second: d });
            }
        }
        Ok(Some(first))
    }

    /// Specialisation `x_1 = ... = x_n = 1`.
    pub fn eval_all_ones(&self) -> Poly<C> {
        self.terms
            .iter()
            .map(|(lambda, c)| c.scale(&C::from_count(lambda.orbit_size(self.num_vars))))
            .sum()
    }

    /// Expands in the Schur basis by peeling off leading terms in reverse
    /// lexicographic order, which refines dominance.
    pub fn to_schur_basis(&self) -> Result<BTreeMap<Partition, Poly<C>>> {
        let mut out = BTreeMap::new();
        let Some(d) = self.homogeneous_degree()? else {
            return Ok(out);
        };
        if d > self.num_vars {
            return Err(Error::DegreeExceedsVars {
                degree: d,
                num_vars: self.num_vars,
            });
        }
        let mut rest = self.clone();
        while let Some((lambda, c)) = rest.terms.iter().next_back() {
            let (lambda, c) = (lambda.clone(), c.clone());
            let s = schur_poly::<C>(&lambda, self.num_vars)?;
            rest = rest.try_sub(&s.scale(&c))?;
            out.insert(lambda, c);
        }
        Ok(out)
    }

    /// Inverse of [`SymFunc::to_schur_basis`].
    pub fn from_schur_basis(
        coeffs: &BTreeMap<Partition, Poly<C>>,
        num_vars: usize,
    ) -> Result<Self> {
        let mut out = Self::zero(num_vars);
        for (lambda, c) in coeffs {
            out = out.try_add(&schur_poly::<C>(lambda, num_vars)?.scale(c))?;
        }
        Ok(out)
    }

    /// Terms in canonical output order.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &Poly<C>)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| canonical_cmp(a.0, b.0));
        v
    }
}

impl<C: Coefficient> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*m{lambda}")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[n={}]({self})", self.num_vars)
    }
}

impl<C: Coefficient> Neg for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn neg(self) -> SymFunc<C> {
        self.map_coeffs(|c| -c)
    }
}

impl<C: Coefficient> Add for &SymFunc<C> {
    type Output = SymFunc<C>;
    /// Panics on a variable-count mismatch; use [`SymFunc::try_add`] to handle it.
    fn add(self, rhs: &SymFunc<C>) -> SymFunc<C> {
        self.try_add(rhs).expect("variable counts agree")
    }
}

impl<C: Coefficient> Sub for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn sub(self, rhs: &SymFunc<C>) -> SymFunc<C> {
        self.try_sub(rhs).expect("variable counts agree")
    }
}

impl<C: Coefficient> Mul for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn mul(self, rhs: &SymFunc<C>) -> SymFunc<C> {
        self.try_mul(rhs).expect("variable counts agree")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<usize>,
    q_coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    num_vars: usize,
    terms: Vec<TermJson>,
}

impl<C: Coefficient> Serialize for SymFunc<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            num_vars: self.num_vars,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(l, c)| TermJson {
                    exponents: l.parts().to_vec(),
                    q_coeffs: c.coeffs().iter().map(|x| x.to_string()).collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for SymFunc<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SymFuncJson::deserialize(d)?;
        let mut out = SymFunc::zero(raw.num_vars);
        for t in raw.terms {
            let lambda = Partition::new(t.exponents).map_err(D::Error::custom)?;
            if lambda.len() > raw.num_vars {
                return Err(D::Error::custom(format!(
                    "term {lambda} has more parts than {} variables",
                    raw.num_vars
                )));
            }
            let coeffs = t
                .q_coeffs
                .iter()
                .map(|s| C::from_str_radix(s, 10).map_err(|_| D::Error::custom(format!("bad coefficient {s:?}"))))
                .collect::<std::result::Result<Vec<C>, _>>()?;
            out.add_term(lambda, &Poly::from_coeffs(coeffs));
        }
        Ok(out)
    }
}

/// `(nu, [(lambda, mu, multiplicity)])`: the coefficient of `x^nu` in
/// `m_lambda * m_mu` summed over the splits of `nu`.
type ProductTable = Vec<(Partition, Vec<(Partition, Partition, u64)>)>;

thread_local! {
    static PRODUCT_TABLES: RefCell<HashMap<(usize, usize, usize), std::rc::Rc<ProductTable>>> =
        RefCell::new(HashMap::new());
}

fn with_product_table<R>(da: usize, db: usize, n: usize, f: impl FnOnce(&ProductTable) -> R) -> R {
    let table = PRODUCT_TABLES.with(|cell| {
        cell.borrow_mut()
            .entry((da, db, n))
            .or_insert_with(|| std::rc::Rc::new(build_product_table(da, db, n)))
            .clone()
    });
    f(&table)
}

fn build_product_table(da: usize, db: usize, n: usize) -> ProductTable {
    fn splits(
        nu: &[usize],
        i: usize,
        left: usize,
        alpha: &mut Vec<usize>,
        acc: &mut BTreeMap<(Partition, Partition), u64>,
    ) {
        if i == nu.len() {
            if left == 0 {
                let beta: Vec<usize> = nu.iter().zip(alpha.iter()).map(|(a, b)| a - b).collect();
                *acc.entry((Partition::from_exponents(alpha), Partition::from_exponents(&beta)))
                    .or_default() += 1;
            }
            return;
        }
        let cap: usize = nu[i..].iter().sum();
        if left > cap {
            return;
        }
        for a in 0..=nu[i].min(left) {
            alpha.push(a);
            splits(nu, i + 1, left - a, alpha, acc);
            alpha.pop();
        }
    }
    partitions_of(da + db, n)
        .into_iter()
        .map(|nu| {
            let mut acc = BTreeMap::new();
            splits(nu.parts(), 0, da, &mut Vec::new(), &mut acc);
            let list = acc.into_iter().map(|((l, m), c)| (l, m, c)).collect();
            (nu, list)
        })
        .collect()
}

/// Kostka number: semistandard tableaux of shape `lambda` and content `mu`,
/// counted by stripping off the horizontal strip of the largest letter.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> u64 {
    fn rec(shape: &[usize], content: &[usize], memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
        let total: usize = shape.iter().sum();
        let Some((&last, rest)) = content.split_last() else {
            return u64::from(total == 0);
        };
        if total != content.iter().sum::<usize>() {
            return 0;
        }
        // the largest letter can only sit in the top `content.len()` rows-from-bottom
        if shape.iter().filter(|&&r| r > 0).count() > content.len() {
            return 0;
        }
        let key = (shape.to_vec(), content.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut count = 0;
        let mut inner = vec![0usize; shape.len()];
        strips(shape, 0, last, &mut inner, &mut |rho| {
            count += rec(rho, rest, memo);
        });
        memo.insert(key, count);
        count
    }

    // Every rho with shape[i+1] <= rho[i] <= shape[i] and |shape| - |rho| = size.
    fn strips(shape: &[usize], i: usize, size: usize, rho: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == shape.len() {
            if size == 0 {
                let trimmed: Vec<usize> = rho.iter().copied().filter(|&r| r > 0).collect();
                f(&trimmed);
            }
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        for r in (lo..=shape[i]).rev() {
            let removed = shape[i] - r;
            if removed > size {
                break;
            }
            rho[i] = r;
            strips(shape, i + 1, size - removed, rho, f);
        }
    }

    let mu: Vec<usize> = mu.iter().copied().filter(|&m| m > 0).collect();
    rec(lambda.parts(), &mu, &mut HashMap::new())
}

/// The Schur polynomial `s_lambda(x_1..x_n)` in the monomial basis.
pub fn schur_poly<C: Coefficient>(lambda: &Partition, n: usize) -> Result<SymFunc<C>> {
    if lambda.len() > n {
        return Err(Error::TooManyRows {
            partition: lambda.to_string(),
            num_vars: n,
        });
    }
    let mut out = SymFunc::zero(n);
    for mu in partitions_of(lambda.size(), n) {
        if !lambda.dominates(&mu) {
            continue;
        }
        let k = kostka(lambda, mu.parts());
        if k > 0 {
            out.add_term(mu, &Poly::constant(C::from_count(k)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = SymFunc<BigInt>;
    type P = Poly<BigInt>;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn m(p: &[usize], c: &[i64], n: usize) -> S {
        S::monomial(part(p), P::from_i64s(c), n)
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap(), part(&[2, 1]));
        assert_eq!(part(&[3, 1, 1]).size(), 5);
        assert_eq!(part(&[2, 1]).orbit_size(3), 6);
        assert_eq!(part(&[1, 1]).orbit_size(3), 3);
        assert_eq!(part(&[1, 1, 1]).orbit_size(2), 0);
    }

    #[test]
    fn partitions_listing() {
        let ps: Vec<String> = partitions_of(4, 4).iter().map(|p| p.to_string()).collect();
        assert_eq!(ps, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(partitions_of(7, 7).len(), 15);
        assert_eq!(partitions_of(5, 2).len(), 3);
        assert_eq!(partitions_of(0, 3), vec![Partition::empty()]);
    }

    #[test]
    fn add_examples() {
        let a = &m(&[2], &[1], 2) + &m(&[1, 1], &[1], 2);
        assert_eq!(a.terms().len(), 2);
        assert_eq!(&a + &S::zero(2), a);
        let b = &m(&[1, 1], &[1, 1], 2) + &m(&[1, 1], &[-1], 2);
        assert_eq!(b, m(&[1, 1], &[0, 1], 2));
        assert!(matches!(
            m(&[1], &[1], 2).try_add(&m(&[1], &[1], 3)),
            Err(Error::VarMismatch { .. })
        ));
    }

    #[test]
    fn mul_examples() {
        let m1 = m(&[1], &[1], 2);
        assert_eq!(&m1 * &m1, &m(&[2], &[1], 2) + &m(&[1, 1], &[2], 2));
        let a = &m(&[2, 1], &[3, 1], 3) + &m(&[1], &[0, 2], 3);
        assert_eq!(&a * &S::one(3), a);
        let x = m(&[1], &[1], 1);
        assert_eq!(&x * &x, m(&[2], &[1], 1));
    }

    #[test]
    fn mul_against_explicit_expansion() {
        // m_21 * m_1 in 3 variables, expanded by hand:
        // m_31 + 2 m_22 + 2 m_211
        let prod = &m(&[2, 1], &[1], 3) * &m(&[1], &[1], 3);
        let expected = S::from_terms(
            3,
            [
                (part(&[3, 1]), P::from_i64s(&[1])),
                (part(&[2, 2]), P::from_i64s(&[2])),
                (part(&[2, 1, 1]), P::from_i64s(&[2])),
            ],
        );
        assert_eq!(prod, expected);
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_poly::<BigInt>(&part(&[1]), 2).unwrap(), m(&[1], &[1], 2));
        assert_eq!(schur_poly::<BigInt>(&part(&[1, 1]), 2).unwrap(), m(&[1, 1], &[1], 2));
        assert_eq!(
            schur_poly::<BigInt>(&part(&[2, 1]), 3).unwrap(),
            &m(&[2, 1], &[1], 3) + &m(&[1, 1, 1], &[2], 3)
        );
        assert!(matches!(
            schur_poly::<BigInt>(&part(&[1, 1, 1]), 2),
            Err(Error::TooManyRows { .. })
        ));
    }

    #[test]
    fn kostka_values() {
        assert_eq!(kostka(&part(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(kostka(&part(&[3, 2]), &[1, 1, 1, 1, 1]), 5);
        assert_eq!(kostka(&part(&[2, 2]), &[2, 1, 1]), 1);
        assert_eq!(kostka(&part(&[3, 1]), &[2, 2]), 1);
        assert_eq!(kostka(&part(&[2, 2]), &[3, 1]), 0);
    }

    #[test]
    fn schur_basis_examples() {
        let e2 = m(&[1, 1], &[1], 2);
        let sb = e2.to_schur_basis().unwrap();
        assert_eq!(sb.len(), 1);
        assert_eq!(sb[&part(&[1, 1])], P::one());

        let s2_plus_s11 =
            &schur_poly::<BigInt>(&part(&[2]), 2).unwrap() + &schur_poly(&part(&[1, 1]), 2).unwrap();
        let sb = s2_plus_s11.to_schur_basis().unwrap();
        assert_eq!(sb[&part(&[2])], P::one());
        assert_eq!(sb[&part(&[1, 1])], P::one());

        let a = &m(&[2], &[1], 2) + &m(&[1, 1], &[1, 1], 2);
        let sb = a.to_schur_basis().unwrap();
        assert_eq!(sb[&part(&[2])], P::one());
        assert_eq!(sb[&part(&[1, 1])], P::q());
    }

    #[test]
    fn schur_basis_errors() {
        let mixed = &m(&[2], &[1], 2) + &m(&[1], &[1], 2);
        assert!(matches!(mixed.to_schur_basis(), Err(Error::NotHomogeneous { .. })));
        let too_big = m(&[1, 1], &[1], 1);
        assert!(too_big.is_zero());
        let deg3 = m(&[2, 1], &[1], 2);
        assert!(matches!(deg3.to_schur_basis(), Err(Error::DegreeExceedsVars { .. })));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(m(&[1], &[-1, 1], 2).shift_q(), m(&[1], &[0, 1], 2));
        let c = m(&[2, 1], &[5], 3);
        assert_eq!(c.shift_q(), c);
    }

    #[test]
    fn json_is_canonical() {
        let a = &(&m(&[1, 1, 1], &[1], 3) + &m(&[3], &[2], 3)) + &(&m(&[2, 1], &[0, 1], 3) + &m(&[1], &[-4], 3));
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(
            s,
            concat!(
                r#"{"num_vars":3,"terms":["#,
                r#"{"exponents":[1],"q_coeffs":["-4"]},"#,
                r#"{"exponents":[3],"q_coeffs":["2"]},"#,
                r#"{"exponents":[2,1],"q_coeffs":["0","1"]},"#,
                r#"{"exponents":[1,1,1],"q_coeffs":["1"]}]}"#
            )
        );
        let back: S = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}
