//! Circulant, bordered-circulant, and quadratic-residue graph codes, and
//! the exhaustive seed searches over them.
//!
//! A circulant code of length n is the graph code of the circulant digraph
//! whose first row is (0, a_1, ..., a_{n-1}); its generator matrix has first
//! row (ω, a_1, ..., a_{n-1}) and every following row is the previous one
//! shifted one step to the right. A bordered circulant code of length n + 1
//! adds a corner ω with an all-ones first row and column around a length-n
//! circulant block. Both families are isodual: reversing the column order
//! of the generator matrix yields a generator matrix of the dual code.

use crate::canon::code_canonical_form;
use crate::code::AdditiveCode;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::exec::{map_collect, map_reduce_ranges, ExecMode};
use crate::graphform::{graph_code, min_distance_at_least};
use std::collections::BTreeMap;
use std::fmt;

/// First-row bits (a_1, ..., a_{n-1}) of a length-n circulant digraph;
/// bit i - 1 of `bits` holds a_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CirculantSeed {
    n: usize,
    bits: u64,
}

impl CirculantSeed {
    pub fn from_bits(n: usize, bits: u64) -> Result<CirculantSeed> {
        if !(2..=64).contains(&n) {
            return Err(Error::TooLong(n));
        }
        if n < 64 && bits >> (n - 1) != 0 {
            return Err(Error::InvalidInput(format!(
                "seed bits exceed the {} positions of a length-{n} circulant",
                n - 1
            )));
        }
        Ok(CirculantSeed { n, bits })
    }

    /// Parses "101001110000" as (a_1, ..., a_{n-1}) left to right.
    pub fn parse(text: &str) -> Result<CirculantSeed> {
        let text = text.trim();
        let mut bits = 0u64;
        for (i, ch) in text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "seed must be binary, found {ch:?}"
                    )))
                }
            }
        }
        CirculantSeed::from_bits(text.len() + 1, bits)
    }

    /// Code length n of the circulant this seed generates.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    fn entry(&self, i: usize) -> bool {
        debug_assert!((1..self.n).contains(&i));
        self.bits >> (i - 1) & 1 != 0
    }

    /// a_i = a_{n-i} for all i: exactly when the circulant is symmetric,
    /// i.e. the circulant code is self-dual.
    pub fn is_palindromic(&self) -> bool {
        (1..self.n).all(|i| self.entry(i) == self.entry(self.n - i))
    }
}

impl fmt::Display for CirculantSeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..self.n {
            write!(f, "{}", self.entry(i) as u8)?;
        }
        Ok(())
    }
}

/// The circulant digraph: arc i -> j exactly when a_{(j - i) mod n} = 1.
pub fn circulant_graph(seed: &CirculantSeed) -> Digraph {
    let n = seed.n();
    let rows: Vec<u64> = (0..n)
        .map(|i| {
            let mut row = 0u64;
            for k in 1..n {
                if seed.entry(k) {
                    row |= 1 << ((i + k) % n);
                }
            }
            row
        })
        .collect();
    Digraph::from_rows(rows).expect("zero diagonal by construction")
}

pub fn circulant_code(seed: &CirculantSeed) -> Result<AdditiveCode> {
    graph_code(&circulant_graph(seed))
}

/// Borders the circulant of `inner`: vertex 0 gets arcs to and from every
/// circulant vertex. The result has inner.n() + 1 vertices.
pub fn bordered_circulant_graph(inner: &CirculantSeed) -> Result<Digraph> {
    let m = inner.n();
    if m + 1 > 64 {
        return Err(Error::TooLong(m + 1));
    }
    let block = circulant_graph(inner);
    let mut rows = Vec::with_capacity(m + 1);
    rows.push(((1u64 << m) - 1) << 1);
    for &row in block.rows() {
        rows.push(row << 1 | 1);
    }
    Digraph::from_rows(rows)
}

pub fn bordered_circulant_code(inner: &CirculantSeed) -> Result<AdditiveCode> {
    graph_code(&bordered_circulant_graph(inner)?)
}

/// Quadratic-residue seed: a_i = 1 exactly when i is a nonzero square
/// modulo the odd prime p.
pub fn qr_seed(p: u64) -> Result<CirculantSeed> {
    if p < 3 || p % 2 == 0 || (3..p).take_while(|f| f * f <= p).any(|f| p % f == 0) {
        return Err(Error::NotOddPrime(p));
    }
    let mut bits = 0u64;
    for x in 1..p {
        let sq = (x * x % p) as usize;
        bits |= 1 << (sq - 1);
    }
    CirculantSeed::from_bits(p as usize, bits)
}

/// Circulant code of the quadratic-residue seed: the graph is the Paley
/// tournament (p ≡ 3 mod 4, isodual code) or Paley graph (p ≡ 1 mod 4,
/// self-dual code).
pub fn qr_code(p: u64) -> Result<AdditiveCode> {
    circulant_code(&qr_seed(p)?)
}

pub fn bordered_qr_code(p: u64) -> Result<AdditiveCode> {
    bordered_circulant_code(&qr_seed(p)?)
}

/// One equivalence class among the best codes a search found.
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub cert_hex: String,
    pub aut_order: u128,
    pub self_dual: bool,
    /// Bordered construction? The seed is the inner circulant's either way.
    pub bordered: bool,
    pub seed: CirculantSeed,
    pub code: AdditiveCode,
}

/// Outcome of an exhaustive circulant + bordered-circulant search.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub n: usize,
    pub options: SearchOptions,
    pub best_distance: usize,
    /// One entry per equivalence class at the best distance, certificate
    /// order.
    pub hits: Vec<SearchHit>,
    pub self_dual_count: u64,
    pub seeds_scanned: u64,
}

/// Which constructions a search covers and how deep the distance scan
/// escalates. With a row limit w, distances below w are exact and codes
/// meeting it are reported at w (meaning "distance at least w").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub circulants: bool,
    pub bordered: bool,
    pub max_row_limit: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions {
            circulants: true,
            bordered: true,
            max_row_limit: None,
        }
    }
}

/// Scans every length-n circulant seed (2^(n-1)) and, for n ≥ 3, every
/// bordering of a length-(n-1) circulant (2^(n-2)); keeps the codes of
/// maximum minimum-distance and groups them into equivalence classes.
pub fn search_best(n: usize) -> Result<SearchReport> {
    search_best_with(n, ExecMode::default())
}

pub fn search_best_with(n: usize, mode: ExecMode) -> Result<SearchReport> {
    search_best_opts(n, &SearchOptions::default(), mode)
}

pub fn search_best_opts(n: usize, opts: &SearchOptions, mode: ExecMode) -> Result<SearchReport> {
    let total = seed_space(n, opts)?;
    let (best_distance, seed_indexes) = scan_seed_block(n, opts, 0, total, 1, mode)?;
    finalize_report(n, opts, best_distance, &seed_indexes, total, mode)
}

/// Size of the seed index space a search at length n covers: circulant
/// seeds first (indices 0..2^(n-1)), then borderings of length-(n-1)
/// circulants.
pub fn seed_space(n: usize, opts: &SearchOptions) -> Result<u64> {
    if !(2..=32).contains(&n) {
        return Err(Error::TooLong(n));
    }
    if let Some(0) = opts.max_row_limit {
        return Err(Error::InvalidInput("max row limit must be positive".into()));
    }
    let total = circulant_count(n, opts) + bordered_count(n, opts);
    if total == 0 {
        return Err(Error::InvalidInput(
            "search covers no seeds: enable circulants or (for n >= 3) bordered".into(),
        ));
    }
    Ok(total)
}

fn circulant_count(n: usize, opts: &SearchOptions) -> u64 {
    if opts.circulants {
        1 << (n - 1)
    } else {
        0
    }
}

fn bordered_count(n: usize, opts: &SearchOptions) -> u64 {
    if opts.bordered && n >= 3 {
        1 << (n - 2)
    } else {
        0
    }
}

/// Scans seed indices [start, start+len), raising `bar` (the best distance
/// already known) as it goes; returns the best distance found and the
/// indices achieving it, or (bar, empty) when nothing reaches the bar.
/// Blocks merge associatively, so a search can be split, checkpointed, and
/// resumed without changing its outcome.
pub fn scan_seed_block(
    n: usize,
    opts: &SearchOptions,
    start: u64,
    len: u64,
    bar: usize,
    mode: ExecMode,
) -> Result<(usize, Vec<u64>)> {
    let total = seed_space(n, opts)?;
    if start.checked_add(len).map_or(true, |end| end > total) {
        return Err(Error::InvalidInput(format!(
            "seed block {start}+{len} exceeds the {total}-seed space"
        )));
    }
    if bar == 0 {
        return Err(Error::InvalidInput("distance bar must be positive".into()));
    }
    if len == 0 {
        return Ok((bar, Vec::new()));
    }
    let circulants = circulant_count(n, opts);
    let singleton = n / 2 + 1;
    let ceiling = opts.max_row_limit.map_or(singleton, |w| w.min(singleton));
    // Per range: track the best distance so far and the seeds achieving it.
    // Distances are exact (up to the ceiling), so merging is
    // order-independent. Seeds that are not minimal in their multiplier
    // orbit are skipped: they repeat codes equivalent to ones the minimal
    // seed contributes.
    let scan = |offset: u64, span: u64| -> (usize, Vec<u64>) {
        let mut best = bar;
        let mut seeds: Vec<u64> = Vec::new();
        for idx in start + offset..start + offset + span {
            let modulus = if idx < circulants { n } else { n - 1 };
            let bits = if idx < circulants {
                idx
            } else {
                idx - circulants
            };
            if !multiplier_minimal(modulus, bits) {
                continue;
            }
            let (graph, fixed) = graph_for_index(n, circulants, idx);
            if !min_distance_at_least(&graph, best, Some(fixed)) {
                continue;
            }
            let mut d = best;
            while d < ceiling && min_distance_at_least(&graph, d + 1, Some(fixed)) {
                d += 1;
            }
            if d > best {
                best = d;
                seeds.clear();
            }
            if d == best {
                seeds.push(idx);
            }
        }
        (best, seeds)
    };
    Ok(map_reduce_ranges(mode, len, 1 << 12, &scan, &|(
        bx,
        mut sx,
    ),
                                                      (
        by,
        mut sy,
    )| {
        use std::cmp::Ordering::*;
        match bx.cmp(&by) {
            Greater => (bx, sx),
            Less => (by, sy),
            Equal => {
                sx.append(&mut sy);
                (bx, sx)
            }
        }
    }))
}

/// Groups scan survivors into equivalence classes and assembles the report;
/// each class is represented by the seed whose normalized generator text is
/// least.
pub fn finalize_report(
    n: usize,
    opts: &SearchOptions,
    best_distance: usize,
    seed_indexes: &[u64],
    seeds_scanned: u64,
    mode: ExecMode,
) -> Result<SearchReport> {
    let circulants = circulant_count(n, opts);
    struct Class {
        aut_order: u128,
        idx: u64,
        text: String,
    }
    let canons: Vec<Result<(String, Class)>> = map_collect(mode, seed_indexes, &|&idx| {
        let (graph, _) = graph_for_index(n, circulants, idx);
        let code = graph_code(&graph)?;
        let canon = code_canonical_form(&code)?;
        Ok((
            canon.cert.to_hex(),
            Class {
                aut_order: canon.aut_order(),
                idx,
                text: code.to_text(),
            },
        ))
    });
    let mut classes: BTreeMap<String, Class> = BTreeMap::new();
    for item in canons {
        let (cert_hex, entry) = item?;
        match classes.entry(cert_hex) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(entry);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                if entry.text < o.get().text {
                    *o.get_mut() = entry;
                }
            }
        }
    }
    let mut hits = Vec::with_capacity(classes.len());
    let mut self_dual_count = 0;
    for (cert_hex, class) in classes {
        let (is_bordered, seed) = seed_for_index(n, circulants, class.idx)?;
        let (graph, _) = graph_for_index(n, circulants, class.idx);
        let code = graph_code(&graph)?;
        let self_dual = graph.is_symmetric();
        debug_assert_eq!(self_dual, code == code.dual());
        self_dual_count += self_dual as u64;
        hits.push(SearchHit {
            cert_hex,
            aut_order: class.aut_order,
            self_dual,
            bordered: is_bordered,
            seed,
            code,
        });
    }
    Ok(SearchReport {
        n,
        options: opts.clone(),
        best_distance,
        hits,
        self_dual_count,
        seeds_scanned,
    })
}

/// Decodes a search index into its graph and a row that meets every
/// codeword orbit: row 0 for circulants; for bordered graphs, inner row 1
/// (row 0, the border, is the one orbit singleton, and its single-row
/// codeword has weight n, which never falls below the Singleton bound).
fn graph_for_index(n: usize, circulants: u64, idx: u64) -> (Digraph, usize) {
    if idx < circulants {
        let seed = CirculantSeed::from_bits(n, idx).expect("index in range");
        (circulant_graph(&seed), 0)
    } else {
        let seed = CirculantSeed::from_bits(n - 1, idx - circulants).expect("index in range");
        (
            bordered_circulant_graph(&seed).expect("length n stays in range"),
            1,
        )
    }
}

/// True when `bits` is the least seed in its orbit under the multiplier
/// maps a_k -> a_{uk mod modulus} for units u. Each multiplier relabels the
/// circulant's vertices by i -> u * i (fixing the border vertex when there
/// is one), so orbit mates generate equivalent codes.
fn multiplier_minimal(modulus: usize, bits: u64) -> bool {
    for u in 2..modulus {
        if gcd(u, modulus) != 1 {
            continue;
        }
        let mut mapped = 0u64;
        for k in 1..modulus {
            if bits >> (u * k % modulus - 1) & 1 != 0 {
                mapped |= 1 << (k - 1);
            }
        }
        if mapped < bits {
            return false;
        }
    }
    true
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn seed_for_index(n: usize, circulants: u64, idx: u64) -> Result<(bool, CirculantSeed)> {
    if idx < circulants {
        Ok((false, CirculantSeed::from_bits(n, idx)?))
    } else {
        Ok((true, CirculantSeed::from_bits(n - 1, idx - circulants)?))
    }
}

/// Groups codes by weight distribution; the map holds the positions of the
/// input codes in each group.
pub fn enumerator_census(
    codes: &[AdditiveCode],
) -> Result<BTreeMap<crate::code::WeightDistribution, Vec<usize>>> {
    let mut groups: BTreeMap<crate::code::WeightDistribution, Vec<usize>> = BTreeMap::new();
    for (i, code) in codes.iter().enumerate() {
        groups
            .entry(code.weight_distribution()?)
            .or_default()
            .push(i);
    }
    Ok(groups)
}

/// The coordinate permutation witnessing isoduality: applying it to a
/// circulant generator matrix gives a generator matrix of the dual, row for
/// row up to row order. Circulants reverse all columns; bordered circulants
/// keep the border coordinate 0 fixed and reverse the rest.
pub fn isoduality_permutation(n: usize, bordered: bool) -> Vec<usize> {
    if bordered {
        (0..n).map(|i| if i == 0 { 0 } else { n - i }).collect()
    } else {
        (0..n).map(|i| n - 1 - i).collect()
    }
}
