//! Homogeneous symmetric functions with exact rational coefficients in the
//! monomial (`m`), elementary (`e`) and Schur (`s`) bases.
//!
//! The monomial basis is the pivot: every conversion routes through it, and
//! the elementary and Schur rows of the [`TransitionTable`] are themselves
//! computed with the monomial product rule.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::RatMatrix;
use crate::partition::{partitions_of, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    M,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "s")]
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::S => 's',
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = SymFuncError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "m" | "M" => Ok(Basis::M),
            "e" | "E" => Ok(Basis::E),
            "s" | "S" => Ok(Basis::S),
            other => Err(SymFuncError::UnknownBasis(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFuncError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(Basis, Basis),
    #[error("partition {partition} does not have weight {degree}")]
    WrongWeight { partition: Partition, degree: usize },
    #[error("unknown basis {0:?}")]
    UnknownBasis(String),
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
    #[error("transition table for degree {degree} is not unitriangular at {partition}")]
    SingularTable { degree: usize, partition: Partition },
}

/// A homogeneous symmetric function of fixed degree, stored sparsely.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        Self {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 1 (`e_0 = m_0 = s_0`) expressed in `basis`.
    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.weight();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, BigRational::one());
        Self {
            degree,
            basis,
            coeffs,
        }
    }

    /// `e_λ = e_{λ_1} e_{λ_2} ... e_{λ_ℓ}`.
    pub fn e_monomial(lambda: Partition) -> Self {
        Self::basis_element(Basis::E, lambda)
    }

    pub fn m_monomial(lambda: Partition) -> Self {
        Self::basis_element(Basis::M, lambda)
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::basis_element(Basis::S, lambda)
    }

    /// Builds a function from `(partition, coefficient)` pairs, summing
    /// repeated keys and dropping zeros.
    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self, SymFuncError>
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut f = Self::zero(degree, basis);
        for (lambda, c) in terms {
            if lambda.weight() != degree {
                return Err(SymFuncError::WrongWeight {
                    partition: lambda,
                    degree,
                });
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self, SymFuncError>
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        Self::from_terms(
            degree,
            basis,
            terms
                .into_iter()
                .map(|(p, c)| (p, BigRational::from_integer(c.into()))),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of the basis element indexed by `lambda` (zero if absent).
    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc, SymFuncError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.coeffs {
            out.add_term(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc, SymFuncError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return Self::zero(self.degree, self.basis);
        }
        SymFunc {
            degree: self.degree,
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> SymFunc {
        self.scale(&BigRational::from_integer(c.into()))
    }

    fn check_compatible(&self, other: &SymFunc) -> Result<(), SymFuncError> {
        if self.degree != other.degree {
            return Err(SymFuncError::DegreeMismatch(self.degree, other.degree));
        }
        if self.basis != other.basis {
            return Err(SymFuncError::BasisMismatch(self.basis, other.basis));
        }
        Ok(())
    }

    /// Ring product. Elementary inputs multiply by concatenating partitions,
    /// monomial inputs by the monomial product rule, Schur inputs through the
    /// elementary basis. Mixed-basis inputs are multiplied in the monomial
    /// basis.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        match (self.basis, other.basis) {
            (Basis::E, Basis::E) => multiply_e(self, other),
            (Basis::M, Basis::M) => multiply_m(self, other),
            (Basis::S, Basis::S) => {
                multiply_e(&self.convert(Basis::E), &other.convert(Basis::E)).convert(Basis::S)
            }
            _ => multiply_m(&self.convert(Basis::M), &other.convert(Basis::M)),
        }
    }

    /// Re-expresses the function exactly in `target`.
    pub fn convert(&self, target: Basis) -> SymFunc {
        self.try_convert(target)
            .unwrap_or_else(|e| panic!("internal failure in basis change: {e}"))
    }

    pub fn try_convert(&self, target: Basis) -> Result<SymFunc, SymFuncError> {
        if self.basis == target {
            return Ok(self.clone());
        }
        let table = TransitionTable::for_degree(self.degree)?;
        let in_m = match self.basis {
            Basis::M => self.clone(),
            Basis::E => table.apply(&table.e_to_m, self, Basis::M),
            Basis::S => table.apply(&table.s_to_m, self, Basis::M),
        };
        Ok(match target {
            Basis::M => in_m,
            Basis::E => table.apply(&table.m_to_e, &in_m, Basis::E),
            Basis::S => table.apply(&table.m_to_s, &in_m, Basis::S),
        })
    }

    pub fn is_e_positive(&self) -> bool {
        self.convert(Basis::E)
            .coeffs
            .values()
            .all(|c| !c.is_negative())
    }

    pub fn is_schur_positive(&self) -> bool {
        self.convert(Basis::S)
            .coeffs
            .values()
            .all(|c| !c.is_negative())
    }

    /// Evaluates at `x` variables equal to 1 and the rest 0, using
    /// `e_λ(1^x) = Π C(x, λ_i)`.
    pub fn specialize_ones(&self, x: u64) -> BigRational {
        let in_e = self.convert(Basis::E);
        let mut total = BigRational::zero();
        for (lambda, c) in &in_e.coeffs {
            let value: BigInt = lambda
                .parts()
                .iter()
                .map(|&k| binomial(x, k as u64))
                .product();
            total += c * BigRational::from_integer(value);
        }
        total
    }

    /// Human-readable form: one `<coeff>·b[parts]` term per line.
    pub fn to_pretty(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c}·{}{lambda}", self.basis.letter())?;
        }
        Ok(())
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn multiply_e(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(f.degree + g.degree, Basis::E);
    for (a, ca) in &f.coeffs {
        for (b, cb) in &g.coeffs {
            out.add_term(a.concat(b), ca * cb);
        }
    }
    out
}

fn multiply_m(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(f.degree + g.degree, Basis::M);
    for (a, ca) in &f.coeffs {
        for (b, cb) in &g.coeffs {
            let prod = ca * cb;
            for (nu, k) in m_product(a, b).iter() {
                out.add_term(
                    nu.clone(),
                    &prod * BigRational::from_integer(BigInt::from(*k)),
                );
            }
        }
    }
    out
}

type MProduct = Arc<Vec<(Partition, u64)>>;

fn m_product_cache() -> &'static Mutex<HashMap<(Partition, Partition), MProduct>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), MProduct>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Structure constants of the monomial basis: `m_λ m_μ = Σ_ν c_ν m_ν`.
///
/// `c_ν` counts the ways to write the exponent vector `ν` (one fixed
/// monomial) as `α + β` with `α` a rearrangement of `λ` and `β` a
/// rearrangement of `μ`, both padded with zeros to `ℓ(ν)`.
pub fn m_product(lambda: &Partition, mu: &Partition) -> MProduct {
    let key = if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    if let Some(hit) = m_product_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let n = lambda.weight() + mu.weight();
    let min_len = lambda.len().max(mu.len());
    let max_len = lambda.len() + mu.len();
    let mut out = Vec::new();
    for nu in partitions_of(n) {
        if nu.len() < min_len || nu.len() > max_len {
            continue;
        }
        let mut left = value_counts(lambda.parts(), nu.len());
        let mut right = value_counts(mu.parts(), nu.len());
        let count = count_splits(nu.parts(), &mut left, &mut right);
        if count > 0 {
            out.push((nu, count));
        }
    }
    let out = Arc::new(out);
    m_product_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// Multiset of values (including padding zeros) as a count vector.
fn value_counts(parts: &[usize], padded_len: usize) -> Vec<usize> {
    let top = parts.first().copied().unwrap_or(0);
    let mut counts = vec![0usize; top + 1];
    counts[0] = padded_len - parts.len();
    for &p in parts {
        counts[p] += 1;
    }
    counts
}

fn count_splits(target: &[usize], left: &mut [usize], right: &mut [usize]) -> u64 {
    let Some((&t, rest)) = target.split_first() else {
        return 1;
    };
    let mut total = 0;
    for a in 0..left.len().min(t + 1) {
        if left[a] == 0 {
            continue;
        }
        let b = t - a;
        if b >= right.len() || right[b] == 0 {
            continue;
        }
        left[a] -= 1;
        right[b] -= 1;
        total += count_splits(rest, left, right);
        left[a] += 1;
        right[b] += 1;
    }
    total
}

/// Jacobi-Trudi: `s_λ = det(e_{λ^t_i - i + j})` over `1 ≤ i, j ≤ λ_1`, with
/// `e_0 = 1` and `e_k = 0` for `k < 0`. Expanded over permutations, skipping
/// branches that hit a vanishing entry.
pub fn schur_in_e(lambda: &Partition) -> SymFunc {
    let size = lambda.first();
    let conj = lambda.transpose();
    let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
    let mut used = vec![false; size];
    let mut chosen = Vec::with_capacity(size);
    expand_jt(conj.parts(), 0, &mut used, &mut chosen, false, &mut acc);
    let mut out = SymFunc::zero(lambda.weight(), Basis::E);
    for (p, c) in acc {
        out.add_term(p, BigRational::from_integer(c));
    }
    out
}

fn expand_jt(
    conj: &[usize],
    row: usize,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    odd: bool,
    acc: &mut BTreeMap<Partition, BigInt>,
) {
    let size = used.len();
    if row == size {
        let key = Partition::from_parts_dropping_zeros(chosen.clone());
        let entry = acc.entry(key).or_insert_with(BigInt::zero);
        if odd {
            *entry -= 1;
        } else {
            *entry += 1;
        }
        return;
    }
    for col in 0..size {
        if used[col] {
            continue;
        }
        // 0-indexed form of λ^t_i - i + j
        let index = conj[row] as i64 - row as i64 + col as i64;
        if index < 0 {
            continue;
        }
        let inversions = used[col + 1..].iter().filter(|&&u| u).count();
        used[col] = true;
        chosen.push(index as usize);
        expand_jt(
            conj,
            row + 1,
            used,
            chosen,
            odd ^ (inversions % 2 == 1),
            acc,
        );
        chosen.pop();
        used[col] = false;
    }
}

/// Change-of-basis matrices at one degree. Rows and columns follow
/// [`partitions_of`]; row `λ` of `e_to_m` holds the monomial expansion of
/// `e_λ`, and likewise for `s_to_m`. The `m_to_*` matrices are their exact
/// inverses.
#[derive(Debug)]
pub struct TransitionTable {
    pub degree: usize,
    pub index: Vec<Partition>,
    pub e_to_m: RatMatrix,
    pub m_to_e: RatMatrix,
    pub s_to_m: RatMatrix,
    pub m_to_s: RatMatrix,
    position: HashMap<Partition, usize>,
}

fn table_cache() -> &'static RwLock<HashMap<usize, Arc<TransitionTable>>> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<TransitionTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

impl TransitionTable {
    /// Cached table for `degree`, built on first use. Two threads racing on
    /// the same degree may both build it; the first insert wins.
    pub fn for_degree(degree: usize) -> Result<Arc<TransitionTable>, SymFuncError> {
        if let Some(t) = table_cache().read().unwrap().get(&degree) {
            return Ok(t.clone());
        }
        let built = Arc::new(Self::build(degree)?);
        let mut w = table_cache().write().unwrap();
        Ok(w.entry(degree).or_insert(built).clone())
    }

    pub fn build(degree: usize) -> Result<TransitionTable, SymFuncError> {
        let index = partitions_of(degree);
        let position: HashMap<Partition, usize> = index
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let n = index.len();

        let mut e_to_m = RatMatrix::zeros(n, n);
        for (row, lambda) in index.iter().enumerate() {
            let mut f = SymFunc::one(Basis::M);
            for &k in lambda.parts() {
                f = multiply_m(&f, &SymFunc::m_monomial(Partition::ones(k)));
            }
            for (mu, c) in f.terms() {
                e_to_m[(row, position[mu])] = c.clone();
            }
        }

        let mut s_to_m = RatMatrix::zeros(n, n);
        for (row, lambda) in index.iter().enumerate() {
            let in_e = schur_in_e(lambda);
            for (nu, c) in in_e.terms() {
                let r = position[nu];
                for col in 0..n {
                    let v = &e_to_m[(r, col)];
                    if !v.is_zero() {
                        s_to_m[(row, col)] += c * v;
                    }
                }
            }
        }

        // e_λ leads with m_{λ^t}; s_λ leads with m_λ.
        let e_lead: Vec<usize> = index.iter().map(|mu| position[&mu.transpose()]).collect();
        let s_lead: Vec<usize> = (0..n).collect();
        check_unitriangular(degree, &index, &e_to_m, &e_lead)?;
        check_unitriangular(degree, &index, &s_to_m, &s_lead)?;
        let m_to_e = triangular_inverse(&e_to_m, &e_lead);
        let m_to_s = triangular_inverse(&s_to_m, &s_lead);

        Ok(TransitionTable {
            degree,
            index,
            e_to_m,
            m_to_e,
            s_to_m,
            m_to_s,
            position,
        })
    }

    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.position.get(lambda).copied()
    }

    fn apply(&self, matrix: &RatMatrix, f: &SymFunc, target: Basis) -> SymFunc {
        let n = self.index.len();
        let mut acc = vec![BigRational::zero(); n];
        for (lambda, c) in f.terms() {
            let row = self.position[lambda];
            for (col, slot) in acc.iter_mut().enumerate() {
                let v = &matrix[(row, col)];
                if !v.is_zero() {
                    *slot += c * v;
                }
            }
        }
        let mut out = SymFunc::zero(self.degree, target);
        for (col, c) in acc.into_iter().enumerate() {
            out.add_term(self.index[col].clone(), c);
        }
        out
    }
}

/// Row `lead_of[μ]` of `rows` must have a 1 in column `μ` and nothing in
/// earlier columns.
fn check_unitriangular(
    degree: usize,
    index: &[Partition],
    rows: &RatMatrix,
    lead_of: &[usize],
) -> Result<(), SymFuncError> {
    for (col, &row) in lead_of.iter().enumerate() {
        let ok = rows[(row, col)].is_one() && (0..col).all(|c| rows[(row, c)].is_zero());
        if !ok {
            return Err(SymFuncError::SingularTable {
                degree,
                partition: index[row].clone(),
            });
        }
    }
    Ok(())
}

/// Inverts a matrix whose rows are unitriangular after the column
/// permutation `lead_of`, by forward elimination on each unit vector.
/// Row `μ` of the result expresses `m_μ` in the target basis.
fn triangular_inverse(rows: &RatMatrix, lead_of: &[usize]) -> RatMatrix {
    let n = rows.rows();
    let mut inverse = RatMatrix::zeros(n, n);
    for start in 0..n {
        let mut residual = vec![BigRational::zero(); n];
        residual[start] = BigRational::one();
        for col in start..n {
            if residual[col].is_zero() {
                continue;
            }
            let c = residual[col].clone();
            let row = lead_of[col];
            inverse[(start, row)] += &c;
            for (j, slot) in residual.iter_mut().enumerate().skip(col) {
                let v = &rows[(row, j)];
                if !v.is_zero() {
                    *slot -= &c * v;
                }
            }
        }
    }
    inverse
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    degree: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SymFuncJson {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .coeffs
                .iter()
                .map(|(p, c)| TermJson {
                    partition: p.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SymFuncJson::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c = BigRational::from_str(&t.coeff)
                .map_err(|_| serde::de::Error::custom(SymFuncError::BadCoefficient(t.coeff)))?;
            terms.push((t.partition, c));
        }
        SymFunc::from_terms(raw.degree, raw.basis, terms).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn e(parts: &[usize]) -> SymFunc {
        SymFunc::e_monomial(p(parts))
    }

    fn int(terms: &[(&[usize], i64)], basis: Basis) -> SymFunc {
        let degree = terms.first().map_or(0, |(q, _)| q.iter().sum());
        SymFunc::from_int_terms(degree, basis, terms.iter().map(|(q, c)| (p(q), *c))).unwrap()
    }

    #[test]
    fn e_monomial_degrees() {
        assert_eq!(e(&[2]).degree(), 2);
        assert_eq!(e(&[]), SymFunc::one(Basis::E));
        assert_eq!(e(&[2, 1]).degree(), 3);
    }

    #[test]
    fn add_and_scale() {
        assert_eq!(e(&[2]).add(&e(&[2])).unwrap(), int(&[(&[2], 2)], Basis::E));
        assert!(e(&[2, 1]).scale_int(0).is_zero());
        let two = e(&[2, 1]).scale_int(2);
        let sum = two.add(&e(&[2, 1]).scale_int(-2)).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.len(), 0);
    }

    #[test]
    fn add_rejects_mismatch() {
        assert_eq!(
            e(&[2]).add(&e(&[3])),
            Err(SymFuncError::DegreeMismatch(2, 3))
        );
        assert_eq!(
            e(&[2]).add(&SymFunc::m_monomial(p(&[2]))),
            Err(SymFuncError::BasisMismatch(Basis::E, Basis::M))
        );
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(e(&[2]).multiply(&e(&[2, 1])), e(&[2, 2, 1]));
        let m1 = SymFunc::m_monomial(p(&[1]));
        assert_eq!(m1.multiply(&m1), int(&[(&[1, 1], 2), (&[2], 1)], Basis::M));
        let k2 = int(&[(&[2], 2)], Basis::E);
        assert_eq!(k2.multiply(&e(&[1])), int(&[(&[2, 1], 2)], Basis::E));
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(schur_in_e(&p(&[1, 1])), e(&[2]));
        assert_eq!(
            schur_in_e(&p(&[2])),
            int(&[(&[1, 1], 1), (&[2], -1)], Basis::E)
        );
        assert_eq!(
            schur_in_e(&p(&[2, 1])),
            int(&[(&[2, 1], 1), (&[3], -1)], Basis::E)
        );
        assert_eq!(schur_in_e(&Partition::empty()), SymFunc::one(Basis::E));
    }

    #[test]
    fn convert_examples() {
        assert_eq!(e(&[2]).convert(Basis::M), SymFunc::m_monomial(p(&[1, 1])));
        assert_eq!(SymFunc::m_monomial(p(&[1, 1])).convert(Basis::E), e(&[2]));
        assert_eq!(
            e(&[2, 1]).convert(Basis::S),
            int(&[(&[2, 1], 1), (&[1, 1, 1], 1)], Basis::S)
        );
    }

    #[test]
    fn positivity_predicates() {
        assert!(e(&[2]).is_schur_positive());
        assert!(e(&[2]).is_e_positive());
        // m_2 = e_1^2 - 2 e_2
        assert!(!SymFunc::m_monomial(p(&[2])).is_e_positive());
    }

    #[test]
    fn specialization() {
        assert_eq!(
            SymFunc::one(Basis::E).specialize_ones(5),
            BigRational::one()
        );
        let p4 = int(&[(&[2, 2], 2), (&[3, 1], 2), (&[4], 4)], Basis::E);
        assert_eq!(p4.specialize_ones(3), BigRational::from_integer(24.into()));
        for m in 0..=5u64 {
            let fact: i64 = (1..=m as i64).product();
            let km = SymFunc::e_monomial(Partition::single(m as usize)).scale_int(fact);
            for x in 0..=8u64 {
                let expected = BigInt::from(fact) * binomial(x, m);
                assert_eq!(km.specialize_ones(x), BigRational::from_integer(expected));
            }
        }
    }

    #[test]
    fn degree_zero_table() {
        let t = TransitionTable::for_degree(0).unwrap();
        assert_eq!(t.index, vec![Partition::empty()]);
        assert!(t.e_to_m.is_identity());
    }

    #[test]
    fn json_round_trip() {
        let f = SymFunc::from_terms(
            3,
            Basis::E,
            [
                (p(&[3]), BigRational::new(3.into(), 2.into())),
                (p(&[2, 1]), BigRational::from_integer((-4).into())),
            ],
        )
        .unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(
            text,
            r#"{"degree":3,"basis":"e","terms":[{"partition":[3],"coeff":"3/2"},{"partition":[2,1],"coeff":"-4"}]}"#
        );
        let back: SymFunc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        let bad = r#"{"degree":2,"basis":"e","terms":[{"partition":[3],"coeff":"1"}]}"#;
        assert!(serde_json::from_str::<SymFunc>(bad).is_err());
    }

    #[test]
    fn pretty_format() {
        let f = int(&[(&[3], 6)], Basis::E);
        assert_eq!(f.to_string(), "6·e[3]");
        assert_eq!(SymFunc::zero(2, Basis::E).to_string(), "0");
    }
}
