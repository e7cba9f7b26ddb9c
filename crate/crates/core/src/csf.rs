//! Chromatic symmetric functions and chromatic polynomials.
//!
//! [`chromatic_sym`] enumerates stable (independent-set) partitions of the
//! vertex set. [`brute_force_csf`] enumerates proper colourings directly and
//! is kept as an oracle. [`chromatic_poly`] evaluates the chromatic
//! polynomial twice, once by specializing `X_G` and once by memoized
//! deletion-contraction, and refuses to answer if the two disagree.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

/// Largest graph the colouring oracle accepts unless told otherwise.
pub const DEFAULT_ORACLE_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CsfError {
    #[error("graph has {vertices} vertices, over the oracle limit of {limit}")]
    OracleLimit { vertices: usize, limit: usize },
    #[error("graph has {0} vertices; the stable-partition engine supports at most 64")]
    TooLarge(usize),
    #[error(
        "chromatic polynomial disagreement at x = {x}: specialization gives {specialized}, \
         deletion-contraction gives {deletion_contraction}"
    )]
    Disagreement {
        x: u64,
        specialized: String,
        deletion_contraction: String,
    },
}

/// `Π_i a_i!` where `a_i` is the multiplicity of `i` in `λ`.
///
/// A stable partition of type `λ` is an unordered set of blocks; a monomial
/// `x^α` of type `λ` is an assignment of *distinct* colours to those blocks
/// with block sizes matching exponents. Blocks of equal size can be permuted
/// among the colours with equal exponent, so each stable partition accounts
/// for exactly `Π a_i!` colourings with a given monomial. This is the only
/// place that correction is applied.
pub fn ordered_choice_factor(lambda: &Partition) -> BigInt {
    lambda
        .multiplicities()
        .values()
        .map(|&a| (1..=a as u64).map(BigInt::from).product::<BigInt>())
        .product()
}

/// Counts the stable partitions of `g` by block-size type.
pub fn stable_partition_counts(g: &Graph) -> Result<HashMap<Partition, u64>, CsfError> {
    let n = g.vertex_count();
    if n > 64 {
        return Err(CsfError::TooLarge(n));
    }
    let adj = g.adjacency_masks();
    let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut blocks: Vec<u64> = Vec::with_capacity(n);
    let mut sizes: Vec<usize> = Vec::with_capacity(n);
    assign(0, &adj, &mut blocks, &mut sizes, &mut counts);
    Ok(counts
        .into_iter()
        .map(|(parts, c)| (Partition::from_parts_dropping_zeros(parts), c))
        .collect())
}

fn assign(
    v: usize,
    adj: &[u64],
    blocks: &mut Vec<u64>,
    sizes: &mut Vec<usize>,
    counts: &mut HashMap<Vec<usize>, u64>,
) {
    if v == adj.len() {
        let mut key = sizes.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        *counts.entry(key).or_insert(0) += 1;
        return;
    }
    let bit = 1u64 << v;
    for b in 0..blocks.len() {
        if blocks[b] & adj[v] == 0 {
            blocks[b] |= bit;
            sizes[b] += 1;
            assign(v + 1, adj, blocks, sizes, counts);
            sizes[b] -= 1;
            blocks[b] &= !bit;
        }
    }
    blocks.push(bit);
    sizes.push(1);
    assign(v + 1, adj, blocks, sizes, counts);
    sizes.pop();
    blocks.pop();
}

/// `X_G` in the monomial basis: the coefficient of `m_λ` is the number of
/// stable partitions of type `λ` times [`ordered_choice_factor`]`(λ)`.
pub fn chromatic_sym(g: &Graph) -> SymFunc {
    let counts =
        stable_partition_counts(g).expect("graph too large for the stable-partition engine");
    SymFunc::from_terms(
        g.vertex_count(),
        Basis::M,
        counts.into_iter().map(|(lambda, c)| {
            let coeff = BigInt::from(c) * ordered_choice_factor(&lambda);
            (lambda, BigRational::from_integer(coeff))
        }),
    )
    .expect("stable partition types have weight |V|")
}

/// `X_G` by enumerating every proper colouring `V → {1..|V|}` with the
/// default oracle limit.
pub fn brute_force_csf(g: &Graph) -> Result<SymFunc, CsfError> {
    brute_force_csf_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

/// `|V|` colours suffice because `X_G` is homogeneous of degree `|V|`: every
/// monomial type `λ ⊢ |V|` has at most `|V|` nonzero exponents. The count of
/// colourings whose exponent multiset is `λ` is divided by the number of
/// distinct monomials of that type in `|V|` variables.
pub fn brute_force_csf_with_limit(g: &Graph, limit: usize) -> Result<SymFunc, CsfError> {
    let n = g.vertex_count();
    if n > limit {
        return Err(CsfError::OracleLimit { vertices: n, limit });
    }
    if n == 0 {
        return Ok(SymFunc::one(Basis::M));
    }
    let neighbours: Vec<Vec<usize>> = {
        let mut nb = vec![Vec::new(); n];
        for e in g.edges() {
            let (u, v) = e.endpoints();
            nb[u].push(v);
            nb[v].push(u);
        }
        nb
    };
    let mut colour = vec![usize::MAX; n];
    let mut used = vec![0usize; n];
    let mut by_pattern: HashMap<Vec<usize>, u64> = HashMap::new();
    colour_all(0, &neighbours, &mut colour, &mut used, &mut by_pattern);

    let n_fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    let mut terms = Vec::with_capacity(by_pattern.len());
    for (pattern, count) in by_pattern {
        // distinct rearrangements of the exponent vector padded to n entries
        let mut freq: HashMap<usize, u64> = HashMap::new();
        for &c in &pattern {
            *freq.entry(c).or_insert(0) += 1;
        }
        *freq.entry(0).or_insert(0) += (n - pattern.len()) as u64;
        let denom: BigInt = freq
            .values()
            .map(|&k| (1..=k).map(BigInt::from).product::<BigInt>())
            .product();
        let monomials = &n_fact / denom;
        let coeff = BigRational::new(BigInt::from(count), monomials);
        terms.push((Partition::from_parts_dropping_zeros(pattern), coeff));
    }
    Ok(SymFunc::from_terms(n, Basis::M, terms).expect("colouring patterns have weight |V|"))
}

fn colour_all(
    v: usize,
    neighbours: &[Vec<usize>],
    colour: &mut [usize],
    used: &mut [usize],
    by_pattern: &mut HashMap<Vec<usize>, u64>,
) {
    let n = colour.len();
    if v == n {
        let mut pattern: Vec<usize> = used.iter().copied().filter(|&c| c > 0).collect();
        pattern.sort_unstable_by(|a, b| b.cmp(a));
        *by_pattern.entry(pattern).or_insert(0) += 1;
        return;
    }
    'colours: for c in 0..n {
        for &w in &neighbours[v] {
            if colour[w] == c {
                continue 'colours;
            }
        }
        colour[v] = c;
        used[c] += 1;
        colour_all(v + 1, neighbours, colour, used, by_pattern);
        used[c] -= 1;
        colour[v] = usize::MAX;
    }
}

/// Chromatic polynomial coefficients (index = power of `x`) by memoized
/// deletion-contraction on labelled graphs.
pub fn chromatic_polynomial(g: &Graph) -> Vec<BigInt> {
    let mut edges: Vec<(usize, usize)> = g.edges().map(|e| e.endpoints()).collect();
    edges.sort_unstable();
    let mut memo = HashMap::new();
    deletion_contraction(g.vertex_count(), edges, &mut memo)
}

type DcKey = (usize, Vec<(usize, usize)>);

fn deletion_contraction(
    n: usize,
    edges: Vec<(usize, usize)>,
    memo: &mut HashMap<DcKey, Vec<BigInt>>,
) -> Vec<BigInt> {
    if edges.is_empty() {
        let mut p = vec![BigInt::zero(); n + 1];
        p[n] = BigInt::one();
        return p;
    }
    let key = (n, edges);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let (n, edges) = key;
    let (u, v) = *edges.last().unwrap();

    let deleted: Vec<(usize, usize)> = edges[..edges.len() - 1].to_vec();

    // identify v with u, then close the gap left by v
    let relabel = |w: usize| {
        let w = if w == v { u } else { w };
        if w > v {
            w - 1
        } else {
            w
        }
    };
    let mut contracted: Vec<(usize, usize)> = deleted
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (relabel(a), relabel(b));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    contracted.sort_unstable();
    contracted.dedup();

    let with_deleted = deletion_contraction(n, deleted.clone(), memo);
    let with_contracted = deletion_contraction(n - 1, contracted, memo);
    let mut out = with_deleted;
    for (i, c) in with_contracted.into_iter().enumerate() {
        out[i] -= c;
    }
    memo.insert((n, edges), out.clone());
    out
}

pub fn eval_polynomial(coeffs: &[BigInt], x: u64) -> BigInt {
    let x = BigInt::from(x);
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * &x + c)
}

/// `χ_G(x)`, computed as `X_G(1^x)` and by deletion-contraction; a mismatch
/// is reported as an error carrying both values.
pub fn chromatic_poly(g: &Graph, x: u64) -> Result<BigInt, CsfError> {
    let specialized = chromatic_sym(g).specialize_ones(x);
    let by_dc = eval_polynomial(&chromatic_polynomial(g), x);
    if specialized.is_integer() && *specialized.numer() == by_dc {
        Ok(by_dc)
    } else {
        Err(CsfError::Disagreement {
            x,
            specialized: specialized.to_string(),
            deletion_contraction: by_dc.to_string(),
        })
    }
}

/// Number of proper colourings with `x` colours recovered from the monomial
/// expansion: each `[m_λ] X_G` weighted by the number of distinct monomials
/// of type `λ` in `x` variables.
pub fn colouring_count_from_m(f: &SymFunc, x: u64) -> BigInt {
    let in_m = f.convert(Basis::M);
    let mut total = BigRational::zero();
    for (lambda, c) in in_m.terms() {
        let len = lambda.len() as u64;
        if len > x {
            continue;
        }
        // x! / ((x - ℓ)! Π a_i!)
        let falling: BigInt = (0..len).map(|i| BigInt::from(x - i)).product();
        let denom: BigInt = lambda
            .multiplicities()
            .values()
            .map(|&a| (1..=a as u64).map(BigInt::from).product::<BigInt>())
            .product();
        total += c * BigRational::new(falling, denom);
    }
    total.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn m_terms(terms: &[(&[usize], i64)]) -> SymFunc {
        let degree = terms[0].0.iter().sum();
        SymFunc::from_int_terms(degree, Basis::M, terms.iter().map(|(q, c)| (p(q), *c))).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(chromatic_sym(&Graph::edgeless(0)), SymFunc::one(Basis::M));
        assert_eq!(
            chromatic_sym(&Graph::complete(1)),
            SymFunc::m_monomial(p(&[1]))
        );
        let k2 = chromatic_sym(&Graph::complete(2));
        assert_eq!(k2, m_terms(&[(&[1, 1], 2)]));
        assert_eq!(
            k2.convert(Basis::E),
            SymFunc::from_int_terms(2, Basis::E, [(p(&[2]), 2)]).unwrap()
        );
        let p3 = chromatic_sym(&Graph::path(3));
        assert_eq!(p3, m_terms(&[(&[1, 1, 1], 6), (&[2, 1], 1)]));
        assert_eq!(
            p3.convert(Basis::E),
            SymFunc::from_int_terms(3, Basis::E, [(p(&[2, 1]), 1), (p(&[3]), 3)]).unwrap()
        );
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_csf(&Graph::complete(3)).unwrap(),
            m_terms(&[(&[1, 1, 1], 6)])
        );
        assert_eq!(
            brute_force_csf(&Graph::edgeless(2)).unwrap(),
            m_terms(&[(&[1, 1], 2), (&[2], 1)])
        );
        let p3 = Graph::path(3);
        assert_eq!(brute_force_csf(&p3).unwrap(), chromatic_sym(&p3));
        assert_eq!(
            brute_force_csf_with_limit(&Graph::path(4), 3),
            Err(CsfError::OracleLimit {
                vertices: 4,
                limit: 3
            })
        );
    }

    #[test]
    fn ordered_choice_factor_values() {
        assert_eq!(ordered_choice_factor(&p(&[2, 2, 1])), BigInt::from(2));
        assert_eq!(ordered_choice_factor(&p(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(ordered_choice_factor(&Partition::empty()), BigInt::from(1));
    }

    #[test]
    fn chromatic_poly_examples() {
        assert_eq!(
            chromatic_poly(&Graph::complete(3), 3).unwrap(),
            BigInt::from(6)
        );
        for g in [
            Graph::path(2),
            Graph::lollipop(3, 2),
            Graph::cycle(5).unwrap(),
        ] {
            assert_eq!(chromatic_poly(&g, 1).unwrap(), BigInt::zero());
        }
        let g = Graph::lollipop(3, 2);
        for x in 0..=8i64 {
            let expected = x * (x - 1).pow(3) * (x - 2);
            assert_eq!(
                chromatic_poly(&g, x as u64).unwrap(),
                BigInt::from(expected)
            );
        }
    }

    #[test]
    fn colouring_count_conservation() {
        let g = Graph::lollipop(3, 2);
        let x = chromatic_sym(&g);
        for colours in [5u64, 6, 7] {
            assert_eq!(
                colouring_count_from_m(&x, colours),
                chromatic_poly(&g, colours).unwrap()
            );
        }
    }
}
