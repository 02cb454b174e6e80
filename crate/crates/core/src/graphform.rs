//! Graph representation of half-rate additive codes.
//!
//! The graph code of a digraph Γ on n vertices is generated by the rows of
//! Γ + ωI: generator i has ω at coordinate i and 1 at each out-neighbor.
//! Every half-rate code whose binary expansion (A|B) admits a nonsingular
//! column transversal — choosing, per coordinate, either the a-column or the
//! b-column — is monomially equivalent to a graph code, and the reduction
//! records which coordinates were swapped and which were conjugated. Codes
//! with no nonsingular transversal are reported as exceptional.
//!
//! The generator rows of Γ + ωI have an expansion with B = I, so a sum of s
//! distinct rows has weight at least s. Distance computations exploit this:
//! enumerating sums of at most s rows by increasing s gives exact distances
//! long before the full codeword census would.

use crate::code::{AdditiveCode, SymbolOp, WeightDistribution};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::gf2;
use crate::gf4::{GF4Vector, GF4};

/// Generator matrix Γ + ωI as an additive code of length n.
pub fn graph_code(g: &Digraph) -> Result<AdditiveCode> {
    let n = g.n();
    let rows: Vec<GF4Vector> = g
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &out)| GF4Vector::from_planes(n, out, 1 << i))
        .collect::<Result<_>>()?;
    AdditiveCode::from_rows(&rows)
}

/// Result of reducing a code to graph form: the graph together with the
/// monomial operations (0-based coordinates) that carry the input code to
/// `graph_code(&graph)`. Swaps are applied first, then conjugations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphForm {
    pub graph: Digraph,
    pub swaps: Vec<usize>,
    pub conjugations: Vec<usize>,
}

impl GraphForm {
    /// The equivalent graph code.
    pub fn code(&self) -> AdditiveCode {
        graph_code(&self.graph).expect("graph orders stay in range")
    }

    /// Per-coordinate symbol operations realizing the reduction (identity
    /// coordinate permutation). A swap of the two binary planes is
    /// conjugation followed by scaling with ω; composing with the trailing
    /// conjugation where both apply leaves a plain scaling by ω².
    pub fn monomial_ops(&self, n: usize) -> Vec<SymbolOp> {
        let mut ops = vec![SymbolOp::IDENTITY; n];
        for &i in &self.swaps {
            ops[i] = SymbolOp {
                scale: GF4::Omega,
                conjugate: true,
            };
        }
        for &i in &self.conjugations {
            ops[i] = if self.swaps.contains(&i) {
                SymbolOp {
                    scale: GF4::OmegaSq,
                    conjugate: false,
                }
            } else {
                SymbolOp {
                    scale: GF4::One,
                    conjugate: true,
                }
            };
        }
        ops
    }
}

/// Reduces a half-rate code to graph form.
///
/// Writing the normalized basis as (A|B), a coordinate set S is a valid swap
/// set when exchanging the a- and b-columns at S makes B nonsingular. The
/// swap set is chosen as follows: the empty set if B is already nonsingular;
/// otherwise the set of all coordinates whose single swap alone repairs B,
/// when swapping that whole set works; otherwise the first set found by a
/// depth-first search that prefers unswapped columns left to right. If every
/// transversal is singular the code is exceptional (equivalently, it is a
/// direct sum with a trivial length-1 code and has minimum distance 1).
pub fn to_graph_form(code: &AdditiveCode) -> Result<GraphForm> {
    code.require_half_rate()?;
    let n = code.n();
    let planes: Vec<(u64, u64)> = code.generators().iter().map(|r| r.planes()).collect();
    let a_rows: Vec<u64> = planes.iter().map(|p| p.0).collect();
    let b_rows: Vec<u64> = planes.iter().map(|p| p.1).collect();

    let swap_mask = choose_swaps(&a_rows, &b_rows, n).ok_or_else(|| Error::Exceptional {
        witness: code.to_text(),
    })?;
    let swapped_a: Vec<u64> = (0..n)
        .map(|i| a_rows[i] & !swap_mask | b_rows[i] & swap_mask)
        .collect();
    let swapped_b: Vec<u64> = (0..n)
        .map(|i| b_rows[i] & !swap_mask | a_rows[i] & swap_mask)
        .collect();
    let b_inv = gf2::invert(&swapped_b, n).expect("swap set makes B nonsingular");
    let gamma = gf2::matmul(&b_inv, &swapped_a, n);

    // Conjugating a coordinate adds the b-plane into the a-plane there; with
    // B = I that clears exactly the diagonal of Γ.
    let mut conj_mask = 0u64;
    let rows: Vec<u64> = gamma
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            conj_mask |= row & 1 << i;
            row & !(1 << i)
        })
        .collect();
    Ok(GraphForm {
        graph: Digraph::from_rows(rows).expect("diagonal cleared"),
        swaps: mask_to_indices(swap_mask),
        conjugations: mask_to_indices(conj_mask),
    })
}

fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 != 0).collect()
}

/// Picks a swap mask making B nonsingular, or `None` if no transversal is.
fn choose_swaps(a_rows: &[u64], b_rows: &[u64], n: usize) -> Option<u64> {
    let invertible = |mask: u64| {
        let rows: Vec<u64> = (0..n)
            .map(|i| b_rows[i] & !mask | a_rows[i] & mask)
            .collect();
        gf2::invert(&rows, n).is_some()
    };
    if invertible(0) {
        return Some(0);
    }
    let mut repair = 0u64;
    for j in 0..n {
        if invertible(1 << j) {
            repair |= 1 << j;
        }
    }
    if repair != 0 && invertible(repair) {
        return Some(repair);
    }
    // Depth-first transversal search over the column choices, b-column
    // first; tracks independence with an incremental row-reduced basis.
    fn dfs(
        a_rows: &[u64],
        b_rows: &[u64],
        n: usize,
        j: usize,
        basis: &mut Vec<u64>,
        pivots: &mut Vec<u64>,
        mask: u64,
    ) -> Option<u64> {
        if j == n {
            return Some(mask);
        }
        for swap in [false, true] {
            let mut col = 0u64;
            for i in 0..n {
                let bit = if swap { a_rows[i] } else { b_rows[i] } >> j & 1;
                col |= bit << i;
            }
            for (b, p) in basis.iter().zip(pivots.iter()) {
                if col & p != 0 {
                    col ^= b;
                }
            }
            if col != 0 {
                let pivot = 1u64 << (63 - col.leading_zeros());
                basis.push(col);
                pivots.push(pivot);
                let next = mask | (swap as u64) << j;
                if let Some(m) = dfs(a_rows, b_rows, n, j + 1, basis, pivots, next) {
                    return Some(m);
                }
                basis.pop();
                pivots.pop();
            }
        }
        None
    }
    dfs(a_rows, b_rows, n, 0, &mut Vec::new(), &mut Vec::new(), 0)
}

/// Outcome of a row-sum distance scan capped at a given subset size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundedDistance {
    Exact(usize),
    /// All sums of at most the cap rows were heavier; the distance is at
    /// least this.
    AtLeast(usize),
}

impl BoundedDistance {
    pub fn exact(self) -> Option<usize> {
        match self {
            BoundedDistance::Exact(d) => Some(d),
            BoundedDistance::AtLeast(_) => None,
        }
    }
}

/// Minimum distance of `graph_code(g)` from sums of at most `cap` rows.
///
/// A sum of s distinct rows of Γ + ωI has weight at least s, so once the
/// best weight found is at most s + 1 after finishing level s it is the
/// exact distance. The Singleton bound d <= n/2 + 1 makes a cap of n/2
/// always sufficient for an exact answer.
pub fn bounded_min_distance(g: &Digraph, cap: usize) -> BoundedDistance {
    let n = g.n();
    let singleton = n / 2 + 1;
    let cap = cap.min(n);
    let rows: Vec<(u64, u64)> = g
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, 1u64 << i))
        .collect();
    let mut best = usize::MAX;
    for level in 1..=cap {
        let found = scan_level(&rows, level, &mut best);
        if found || best <= level + 1 {
            return BoundedDistance::Exact(best);
        }
        if level >= singleton.saturating_sub(1) {
            // Sums of more rows weigh at least level + 1 >= the Singleton
            // bound, which some codeword must meet.
            return BoundedDistance::Exact(best.min(singleton));
        }
    }
    if best <= cap + 1 {
        BoundedDistance::Exact(best)
    } else {
        BoundedDistance::AtLeast(cap + 1)
    }
}

/// Exact minimum distance of `graph_code(g)`.
pub fn graph_min_distance(g: &Digraph) -> usize {
    match bounded_min_distance(g, g.n()) {
        BoundedDistance::Exact(d) => d,
        BoundedDistance::AtLeast(_) => unreachable!("uncapped scan is exact"),
    }
}

/// Walks all row subsets of the given size, updating `best`; returns true
/// as soon as a sum of `level` rows with weight exactly `level` appears
/// (nothing at later levels can be lighter).
fn scan_level(rows: &[(u64, u64)], level: usize, best: &mut usize) -> bool {
    fn dfs(
        rows: &[(u64, u64)],
        start: usize,
        left: usize,
        acc: (u64, u64),
        level: usize,
        best: &mut usize,
    ) -> bool {
        if left == 0 {
            let w = (acc.0 | acc.1).count_ones() as usize;
            if w < *best {
                *best = w;
            }
            return w == level;
        }
        for i in start..=rows.len() - left {
            let next = (acc.0 ^ rows[i].0, acc.1 ^ rows[i].1);
            if dfs(rows, i + 1, left - 1, next, level, best) {
                return true;
            }
        }
        false
    }
    dfs(rows, 0, level, (0, 0), level, best)
}

/// True when `graph_code(g)` has minimum distance at least `t`, scanning
/// sums of fewer than `t` rows (lighter words cannot involve more). With
/// `fixed_row` set, only subsets containing that row are scanned — sound
/// when the graph has a vertex-transitive symmetry moving every row into
/// the fixed one, as circulants do.
pub fn min_distance_at_least(g: &Digraph, t: usize, fixed_row: Option<usize>) -> bool {
    let n = g.n();
    if t <= 1 {
        return true;
    }
    let rows: Vec<(u64, u64)> = g
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, 1u64 << i))
        .collect();
    fn dfs(rows: &[(u64, u64)], start: usize, left: usize, acc: (u64, u64), t: usize) -> bool {
        let w = (acc.0 | acc.1).count_ones() as usize;
        if acc.1 != 0 && w < t {
            return false;
        }
        if left == 0 {
            return true;
        }
        for i in start..=rows.len() - left {
            let next = (acc.0 ^ rows[i].0, acc.1 ^ rows[i].1);
            if !dfs(rows, i + 1, left - 1, next, t) {
                return false;
            }
        }
        true
    }
    let cap = (t - 1).min(n);
    match fixed_row {
        None => (1..=cap).all(|level| dfs(&rows, 0, level, (0, 0), t)),
        Some(f) => (1..=cap).all(|level| {
            let others: Vec<(u64, u64)> = rows
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != f)
                .map(|(_, &r)| r)
                .collect();
            dfs(&others, 0, level - 1, rows[f], t)
        }),
    }
}

/// Weight distribution of the 2^n subset sums of the rows of 2Γ + I over
/// Z4, walked in Gray-code order with bit-plane carry arithmetic. This
/// matches the weight distribution of `graph_code(g)`.
pub fn z4_twin_distribution(g: &Digraph) -> Result<WeightDistribution> {
    let n = g.n();
    if n >= 32 {
        return Err(Error::BudgetExceeded { k: n, budget: 31 });
    }
    // Row i of 2Γ + I: ones plane e_i, twos plane Γ_i.
    let rows: Vec<(u64, u64)> = g
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &r)| (1u64 << i, r))
        .collect();
    let mut counts = vec![0u64; n + 1];
    let (mut lo, mut hi) = (0u64, 0u64);
    counts[0] += 1;
    for m in 1u64..1 << n {
        let flip = m.trailing_zeros() as usize;
        let joined = m ^ (m >> 1);
        let (xlo, xhi) = if joined >> flip & 1 != 0 {
            rows[flip]
        } else {
            // Removing a row adds its Z4 negation -(lo, hi) = (lo, hi ^ lo).
            (rows[flip].0, rows[flip].1 ^ rows[flip].0)
        };
        let carry = lo & xlo;
        lo ^= xlo;
        hi ^= xhi ^ carry;
        counts[(lo | hi).count_ones() as usize] += 1;
    }
    Ok(WeightDistribution::from_counts(counts))
}
