//! Closed forms for complete, path, lollipop and lariat chromatic symmetric
//! functions, all in the elementary basis and independent of the colouring
//! engine in [`crate::csf`].

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::csf::{chromatic_sym, DEFAULT_ORACLE_LIMIT};
use crate::graph::Graph;
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{what} must be at least {min}, got {got}")]
    OutOfRange {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("partition {partition} does not have weight {n}")]
    WeightMismatch { partition: Partition, n: usize },
    #[error(
        "closed form for L_{{{m},{n}}} disagrees with the colouring engine: residual {residual}"
    )]
    EngineDisagreement {
        m: usize,
        n: usize,
        residual: String,
    },
    #[error("lariat claim part {part} at n = {n} is outside its verified range (n >= {min_n})")]
    UnverifiedRegime { part: u8, n: usize, min_n: usize },
    #[error("lariat claims are parts 3, 4 and 5, got {0}")]
    UnknownPart(u8),
}

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

fn rational(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `X_{K_m} = m! e_m`, with `X_{K_0} = 1`.
pub fn complete_csf(m: usize) -> SymFunc {
    SymFunc::e_monomial(Partition::single(m)).scale(&rational(factorial(m)))
}

/// A path coefficient together with its index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WolfeCoefficient {
    pub partition: Partition,
    /// `a_j` for `j = 1..=n`.
    pub multiplicities: Vec<usize>,
    pub coefficient: BigInt,
}

/// Multinomial `(Σ a) ! / Π a_j!`; zero if any entry is negative.
fn multinomial(entries: &[i64]) -> BigInt {
    if entries.iter().any(|&a| a < 0) {
        return BigInt::zero();
    }
    let total: i64 = entries.iter().sum();
    let mut out = factorial(total as usize);
    for &a in entries {
        out /= factorial(a as usize);
    }
    out
}

/// `Π_{j ≠ skip} (j-1)^{a_j}` with `0^0 = 1`.
fn weight_product(a: &[i64], skip: Option<usize>) -> BigInt {
    let mut out = BigInt::one();
    for (idx, &aj) in a.iter().enumerate() {
        if Some(idx) == skip {
            continue;
        }
        // idx is j - 1
        out *= BigInt::from(idx).pow(aj as u32);
    }
    out
}

/// Coefficient of `e_1^{a_1} e_2^{a_2} ... e_n^{a_n}` in `X_{P_n}`:
///
/// ```text
/// C(A; a_1..a_n) Π_j (j-1)^{a_j}
///   + Σ_i C(A-1; a_1..a_i-1..a_n) Π_{j≠i} (j-1)^{a_j} (i-1)^{a_i-1}
/// ```
///
/// with `A = Σ a_j`, `0^0 = 1`, and multinomials with a negative entry equal
/// to zero.
pub fn path_e_coeff(lambda: &Partition, n: usize) -> Result<BigInt, FormulaError> {
    if n == 0 {
        return Err(FormulaError::OutOfRange {
            what: "path length",
            min: 1,
            got: 0,
        });
    }
    if lambda.weight() != n {
        return Err(FormulaError::WeightMismatch {
            partition: lambda.clone(),
            n,
        });
    }
    let a: Vec<i64> = (1..=n).map(|j| lambda.multiplicity(j) as i64).collect();
    let mut total = multinomial(&a) * weight_product(&a, None);
    for i in 0..n {
        if a[i] == 0 {
            continue;
        }
        let mut reduced = a.clone();
        reduced[i] -= 1;
        let tail = BigInt::from(i).pow((a[i] - 1) as u32);
        total += multinomial(&reduced) * weight_product(&a, Some(i)) * tail;
    }
    Ok(total)
}

pub fn wolfe_coefficients(n: usize) -> Result<Vec<WolfeCoefficient>, FormulaError> {
    partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let coefficient = path_e_coeff(&lambda, n)?;
            Ok(WolfeCoefficient {
                multiplicities: (1..=n).map(|j| lambda.multiplicity(j)).collect(),
                partition: lambda,
                coefficient,
            })
        })
        .collect()
}

fn path_cache() -> &'static RwLock<HashMap<usize, SymFunc>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, SymFunc>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `X_{P_n}` in the elementary basis, summing [`path_e_coeff`] over `λ ⊢ n`.
pub fn path_csf(n: usize) -> SymFunc {
    if n == 0 {
        return SymFunc::one(Basis::E);
    }
    if let Some(hit) = path_cache().read().unwrap().get(&n) {
        return hit.clone();
    }
    let f = SymFunc::from_terms(
        n,
        Basis::E,
        partitions_of(n).into_iter().map(|lambda| {
            let c = path_e_coeff(&lambda, n).expect("λ ⊢ n");
            (lambda, rational(c))
        }),
    )
    .expect("λ ⊢ n");
    path_cache().write().unwrap().entry(n).or_insert(f).clone()
}

fn require_m(m: usize) -> Result<(), FormulaError> {
    if m < 2 {
        return Err(FormulaError::OutOfRange {
            what: "clique size m",
            min: 2,
            got: m,
        });
    }
    Ok(())
}

fn lollipop_by_recurrence(m: usize, n: usize) -> SymFunc {
    if m == 2 {
        return path_csf(n + 2);
    }
    recurrence_step(m, n, lollipop_by_recurrence(m - 1, n + 1))
}

/// `(m-1) X_{L_{m-1,n+1}} - (m-2) X_{K_{m-1}} X_{P_{n+1}}`.
fn recurrence_step(m: usize, n: usize, smaller: SymFunc) -> SymFunc {
    let first = smaller.scale_int(m as i64 - 1);
    let second = complete_csf(m - 1)
        .multiply(&path_csf(n + 1))
        .scale_int(m as i64 - 2);
    first.sub(&second).expect("both terms have degree m + n")
}

/// Right-hand side of the lollipop recurrence, with `X_{L_{m-1,n+1}}`
/// itself expanded by the same recurrence down to `X_{L_{2,k}} = X_{P_{k+2}}`.
pub fn lollipop_recurrence_rhs(m: usize, n: usize) -> Result<SymFunc, FormulaError> {
    require_m(m)?;
    if m == 2 {
        // L_{1,n+1} = P_{n+2}, and the second term carries the factor m - 2 = 0
        return Ok(path_csf(n + 2));
    }
    Ok(recurrence_step(m, n, lollipop_by_recurrence(m - 1, n + 1)))
}

/// `(m-1)! ( X_{P_{n+m}} - Σ_{i=1}^{m-2} (m-i-1)/(m-i)! X_{K_{m-i}} X_{P_{n+i}} )`.
pub fn lollipop_via_paths(m: usize, n: usize) -> Result<SymFunc, FormulaError> {
    require_m(m)?;
    let mut inner = path_csf(n + m);
    for i in 1..=m - 2 {
        let c = BigRational::new(BigInt::from(m - i - 1), factorial(m - i));
        let term = complete_csf(m - i).multiply(&path_csf(n + i)).scale(&c);
        inner = inner.sub(&term).expect("degree m + n");
    }
    Ok(inner.scale(&rational(factorial(m - 1))))
}

/// `(m-1)!/(m+n-1)! X_{K_{m+n}} + Σ_{i=0}^{n-1} (m+i-1)/(m(m+1)...(m+i)) X_{K_{m+i}} X_{P_{n-i}}`.
///
/// Every summand is a nonnegative multiple of a product of e-positive
/// functions.
pub fn lollipop_via_completes(m: usize, n: usize) -> Result<SymFunc, FormulaError> {
    require_m(m)?;
    let lead = BigRational::new(factorial(m - 1), factorial(m + n - 1));
    let mut out = complete_csf(m + n).scale(&lead);
    let mut rising = BigInt::from(m);
    for i in 0..n {
        if i > 0 {
            rising *= BigInt::from(m + i);
        }
        let c = BigRational::new(BigInt::from(m + i - 1), rising.clone());
        let term = complete_csf(m + i).multiply(&path_csf(n - i)).scale(&c);
        out = out.add(&term).expect("degree m + n");
    }
    Ok(out)
}

/// `X_{L_{m,n}}` for any `m, n ≥ 0`. For `m ≥ 2` this is the e-positive
/// closed form, checked against the colouring engine when the graph is no
/// larger than the oracle limit; `L_{1,n} = P_{n+1}` and `L_{0,n} = P_n`.
pub fn lollipop_csf(m: usize, n: usize) -> Result<SymFunc, FormulaError> {
    if m < 2 {
        return Ok(path_csf(m + n));
    }
    let closed = lollipop_via_completes(m, n)?;
    if m + n <= DEFAULT_ORACLE_LIMIT {
        let engine = chromatic_sym(&Graph::lollipop(m, n)).convert(Basis::E);
        let residual = closed.sub(&engine).expect("same degree and basis");
        if !residual.is_zero() {
            return Err(FormulaError::EngineDisagreement {
                m,
                n,
                residual: residual.to_string(),
            });
        }
    }
    Ok(closed)
}

/// `χ_{L_{m,n}}(x) = x (x-1)^{n+1} Π_{j=2}^{m-1} (x-j)`.
pub fn lollipop_chrom_poly(m: usize, n: usize, x: u64) -> Result<BigInt, FormulaError> {
    require_m(m)?;
    let x = BigInt::from(x);
    let mut out = x.clone() * (&x - BigInt::one()).pow(n as u32 + 1);
    for j in 2..m {
        out *= &x - BigInt::from(j);
    }
    Ok(out)
}

/// The factored chromatic polynomial as text, e.g. `x(x-1)^3(x-2)`.
pub fn lollipop_chrom_poly_factored(m: usize, n: usize) -> Result<String, FormulaError> {
    require_m(m)?;
    let mut s = String::from("x(x-1)");
    if n + 1 > 1 {
        s.push_str(&format!("^{}", n + 1));
    }
    for j in 2..m {
        s.push_str(&format!("(x-{j})"));
    }
    Ok(s)
}

/// `X_{L_{n+3}} = 2 X_{P_{n+3}} - 2 e_2 X_{P_{n+1}}`.
pub fn lariat_csf(n: usize) -> SymFunc {
    let twice_path = path_csf(n + 3).scale_int(2);
    let correction = SymFunc::e_monomial(Partition::single(2))
        .scale_int(2)
        .multiply(&path_csf(n + 1));
    twice_path.sub(&correction).expect("degree n + 3")
}

/// A coefficient claim about `X_{L_{n+3}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LariatClaim {
    pub part: u8,
    pub n: usize,
    pub partition: Partition,
    pub claimed: BigInt,
}

/// The named parts and closed-form value of claim `part` at `n`, before any
/// range check. Parts may be zero or negative for small `n`.
pub fn lariat_claim_raw(part: u8, n: usize) -> Result<(Vec<i64>, i64), FormulaError> {
    let n = n as i64;
    match part {
        3 => Ok((vec![n + 1, 2], 4 * n)),
        4 => Ok((vec![n, 2, 1], 2 * (n - 1))),
        5 => Ok((vec![n - 1, 2, 2], 4 * (n - 2))),
        other => Err(FormulaError::UnknownPart(other)),
    }
}

/// Smallest `n` at which the named partition's leading part exceeds 2, so
/// that its multiplicities are the ones the claim names.
pub fn lariat_claim_min_n(part: u8) -> Result<usize, FormulaError> {
    match part {
        3 => Ok(2),
        4 => Ok(3),
        5 => Ok(4),
        other => Err(FormulaError::UnknownPart(other)),
    }
}

/// Claimed coefficients: `[e_{(n+1,2)}] = 4n`, `[e_{(n,2,1)}] = 2(n-1)`,
/// `[e_{(n-1,2,2)}] = 4(n-2)`. Below the collision-free range this returns
/// [`FormulaError::UnverifiedRegime`] instead of a value.
pub fn lariat_coefficient_claim(part: u8, n: usize) -> Result<LariatClaim, FormulaError> {
    let min_n = lariat_claim_min_n(part)?;
    if n < min_n {
        return Err(FormulaError::UnverifiedRegime { part, n, min_n });
    }
    let (parts, claimed) = lariat_claim_raw(part, n)?;
    Ok(LariatClaim {
        part,
        n,
        partition: Partition::new(parts.into_iter().map(|p| p as usize).collect())
            .expect("positive parts in the verified range"),
        claimed: BigInt::from(claimed),
    })
}
