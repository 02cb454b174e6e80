//! Additive codes over GF(4).
//!
//! An additive (n, 2^k) code is a GF(2)-linear subspace of GF(4)^n. A code
//! value is always held in a normal form: the reduced row echelon basis of
//! the k x 2n binary expansion (A|B) of its generators, with the A columns
//! first. Two codes are equal as sets exactly when their normal forms match,
//! so `PartialEq` is set equality.

use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::gf2;
use crate::gf4::GF4Vector;
use std::fmt;

/// Default cap on full codeword enumeration: 2^26 words.
pub const ENUM_BUDGET_LOG2: u32 = 26;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdditiveCode {
    n: usize,
    /// RREF basis rows of the (A|B) expansion, decoded back to vectors.
    rows: Vec<GF4Vector>,
}

impl AdditiveCode {
    /// Builds the code spanned (over GF(2)) by `rows`, normalizing to the
    /// reduced echelon basis. Rejects the zero code.
    pub fn from_rows(rows: &[GF4Vector]) -> Result<AdditiveCode> {
        let Some(first) = rows.first() else {
            return Err(Error::ZeroSpan);
        };
        let n = first.len();
        if n == 0 || n > GF4Vector::MAX_LEN {
            return Err(Error::TooLong(n));
        }
        let mut words = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch(n, row.len()));
            }
            words.push(Self::pack(row, n));
        }
        gf2::rref(&mut words, 2 * n);
        if words.is_empty() {
            return Err(Error::ZeroSpan);
        }
        let rows = words.iter().map(|&w| Self::unpack(w, n)).collect();
        Ok(AdditiveCode { n, rows })
    }

    fn pack(v: &GF4Vector, n: usize) -> u128 {
        let (a, b) = v.planes();
        a as u128 | (b as u128) << n
    }

    fn unpack(word: u128, n: usize) -> GF4Vector {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        GF4Vector::from_planes(n, word as u64 & mask, (word >> n) as u64 & mask)
            .expect("packed word is in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generators; the code has 2^k codewords.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn is_half_rate(&self) -> bool {
        self.k() == self.n
    }

    pub fn require_half_rate(&self) -> Result<()> {
        if self.is_half_rate() {
            Ok(())
        } else {
            Err(Error::NotHalfRate {
                k: self.k(),
                n: self.n,
            })
        }
    }

    /// The normalized basis rows.
    pub fn generators(&self) -> &[GF4Vector] {
        &self.rows
    }

    pub fn contains(&self, v: &GF4Vector) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut words: Vec<u128> = self.rows.iter().map(|r| Self::pack(r, self.n)).collect();
        words.push(Self::pack(v, self.n));
        gf2::rank(&words, 2 * self.n) == self.k()
    }

    /// Iterates all 2^k codewords in Gray-code order over generator subsets,
    /// so successive words differ by a single row addition. Starts at zero.
    pub fn codewords(&self) -> Result<CodewordIter<'_>> {
        self.codewords_with_budget(ENUM_BUDGET_LOG2)
    }

    pub fn codewords_with_budget(&self, budget_log2: u32) -> Result<CodewordIter<'_>> {
        let k = self.k();
        if k as u32 > budget_log2 || k >= 64 {
            return Err(Error::BudgetExceeded {
                k,
                budget: budget_log2.min(63),
            });
        }
        Ok(CodewordIter {
            rows: &self.rows,
            current: GF4Vector::zero(self.n).expect("n validated"),
            step: 0,
            total: 1u64 << k,
        })
    }

    /// Weight distribution (A_0, ..., A_n) by full enumeration.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.weight_distribution_with(ExecMode::default(), ENUM_BUDGET_LOG2)
    }

    pub fn weight_distribution_with(
        &self,
        mode: ExecMode,
        budget_log2: u32,
    ) -> Result<WeightDistribution> {
        let k = self.k();
        if k as u32 > budget_log2 || k >= 64 {
            return Err(Error::BudgetExceeded {
                k,
                budget: budget_log2.min(63),
            });
        }
        let planes: Vec<(u64, u64)> = self.rows.iter().map(|r| r.planes()).collect();
        let counts = distribution_of_span(&planes, self.n, k, mode);
        Ok(WeightDistribution { counts })
    }

    /// Minimum nonzero weight, by full enumeration.
    pub fn min_distance(&self) -> Result<usize> {
        let mut best = self.n + 1;
        for w in self.codewords()? {
            let wt = w.weight();
            if wt != 0 && wt < best {
                best = wt;
                if best == 1 {
                    break;
                }
            }
        }
        debug_assert!(best <= self.n);
        Ok(best)
    }

    /// The dual under the Hermitian trace inner product, via the GF(2)
    /// nullspace of the pairing system. Has 2^(2n - k) codewords.
    pub fn dual(&self) -> AdditiveCode {
        let n = self.n;
        // Pairing of (A_i, B_i) against x = (C|D) is B_i.C + A_i.D, so the
        // constraint row for generator i is (B_i | A_i).
        let constraints: Vec<u128> = self
            .rows
            .iter()
            .map(|r| {
                let (a, b) = r.planes();
                b as u128 | (a as u128) << n
            })
            .collect();
        let basis = gf2::nullspace(&constraints, 2 * n);
        debug_assert_eq!(basis.len(), 2 * n - self.k());
        let rows: Vec<GF4Vector> = basis.iter().map(|&w| Self::unpack(w, n)).collect();
        AdditiveCode::from_rows(&rows).expect("dual of a code with k < 2n is nonzero")
    }

    pub fn is_self_dual(&self) -> Result<bool> {
        self.require_half_rate()?;
        Ok(*self == self.dual())
    }

    pub fn is_formally_self_dual(&self) -> Result<bool> {
        self.require_half_rate()?;
        Ok(self.weight_distribution()? == self.dual().weight_distribution()?)
    }

    /// Direct sum: coordinates of `rhs` appended after those of `self`.
    pub fn direct_sum(&self, rhs: &AdditiveCode) -> Result<AdditiveCode> {
        let n = self.n + rhs.n;
        if n > GF4Vector::MAX_LEN {
            return Err(Error::TooLong(n));
        }
        let mut rows = Vec::with_capacity(self.k() + rhs.k());
        for r in &self.rows {
            let (a, b) = r.planes();
            rows.push(GF4Vector::from_planes(n, a, b)?);
        }
        for r in &rhs.rows {
            let (a, b) = r.planes();
            rows.push(GF4Vector::from_planes(n, a << self.n, b << self.n)?);
        }
        AdditiveCode::from_rows(&rows)
    }

    /// Where d sits against the half-rate Singleton bound d <= n/2 + 1.
    pub fn singleton_class(&self) -> Result<SingletonClass> {
        self.require_half_rate()?;
        let d = self.min_distance()?;
        let bound = self.n / 2 + 1;
        if d > bound {
            return Err(Error::SingletonViolation {
                d,
                bound,
                n: self.n,
            });
        }
        Ok(if d == bound {
            SingletonClass::Extremal
        } else if d + 1 == bound {
            SingletonClass::NearExtremal
        } else {
            SingletonClass::OptimalOrOther
        })
    }

    /// Binary image under 0 -> 000, 1 -> 011, w -> 101, W -> 110: one row of
    /// 3n bits (as 0/1 bytes) per generator. Cross-check path only.
    pub fn beta_map(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|row| {
                let mut bits = Vec::with_capacity(3 * self.n);
                for x in row.iter() {
                    let (a, b) = x.bits();
                    // First bit is the trace-like b, then b ^ a pattern to
                    // land on the pinned images; spelled per symbol for
                    // clarity.
                    let triple: [u8; 3] = match (a, b) {
                        (false, false) => [0, 0, 0],
                        (true, false) => [0, 1, 1],
                        (false, true) => [1, 0, 1],
                        (true, true) => [1, 1, 0],
                    };
                    bits.extend_from_slice(&triple);
                }
                bits
            })
            .collect()
    }

    /// Applies a monomial map: coordinate i of the result is op_i applied to
    /// coordinate perm[i] of the input. Each op is a scale by a nonzero
    /// scalar optionally composed with conjugation.
    pub fn apply_monomial(&self, perm: &[usize], ops: &[SymbolOp]) -> Result<AdditiveCode> {
        if perm.len() != self.n || ops.len() != self.n {
            return Err(Error::LengthMismatch(self.n, perm.len().min(ops.len())));
        }
        let rows: Vec<GF4Vector> = self
            .rows
            .iter()
            .map(|r| apply_monomial_vector(r, perm, ops))
            .collect::<Result<_>>()?;
        AdditiveCode::from_rows(&rows)
    }

    /// Renders the generator-matrix text format:
    /// a `n=<n> k=<k>` header, then one row of {0,1,w,W} per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={} k={}\n", self.n, self.k());
        for row in &self.rows {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the generator-matrix text format.
    pub fn from_text(text: &str) -> Result<AdditiveCode> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::GeneratorText("empty input".into()))?;
        let bad = |msg: &str| Error::GeneratorText(format!("{msg}: {header:?}"));
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|p| p.strip_prefix("n="))
            .ok_or_else(|| bad("expected `n=<int> k=<int>` header"))?
            .parse()
            .map_err(|_| bad("bad n"))?;
        let k: usize = parts
            .next()
            .and_then(|p| p.strip_prefix("k="))
            .ok_or_else(|| bad("expected `n=<int> k=<int>` header"))?
            .parse()
            .map_err(|_| bad("bad k"))?;
        if parts.next().is_some() {
            return Err(bad("trailing tokens in header"));
        }
        let mut rows = Vec::with_capacity(k);
        for line in lines {
            let row: GF4Vector = line.trim().parse()?;
            if row.len() != n {
                return Err(Error::GeneratorText(format!(
                    "row length {} does not match n={n}",
                    row.len()
                )));
            }
            rows.push(row);
        }
        if rows.len() != k {
            return Err(Error::GeneratorText(format!(
                "expected {k} rows, found {}",
                rows.len()
            )));
        }
        AdditiveCode::from_rows(&rows)
    }
}

impl fmt::Debug for AdditiveCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdditiveCode(n={}, k={})", self.n, self.k())
    }
}

/// Position of the minimum distance against the Singleton bound
/// d <= n/2 + 1 for half-rate codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingletonClass {
    /// d = n/2 + 1.
    Extremal,
    /// d = n/2.
    NearExtremal,
    /// d < n/2; may still be the best attainable distance at this length.
    OptimalOrOther,
}

/// One of the six symbol permutations of GF(4) fixing zero: multiply by a
/// nonzero scalar, optionally after conjugating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolOp {
    pub scale: crate::gf4::GF4,
    pub conjugate: bool,
}

impl SymbolOp {
    pub const IDENTITY: SymbolOp = SymbolOp {
        scale: crate::gf4::GF4::One,
        conjugate: false,
    };

    /// All six ops in a fixed order.
    pub fn all() -> [SymbolOp; 6] {
        use crate::gf4::GF4::{Omega, OmegaSq, One};
        [
            SymbolOp {
                scale: One,
                conjugate: false,
            },
            SymbolOp {
                scale: Omega,
                conjugate: false,
            },
            SymbolOp {
                scale: OmegaSq,
                conjugate: false,
            },
            SymbolOp {
                scale: One,
                conjugate: true,
            },
            SymbolOp {
                scale: Omega,
                conjugate: true,
            },
            SymbolOp {
                scale: OmegaSq,
                conjugate: true,
            },
        ]
    }

    pub fn apply(&self, x: crate::gf4::GF4) -> crate::gf4::GF4 {
        let y = if self.conjugate { x.conj() } else { x };
        self.scale * y
    }
}

pub fn apply_monomial_vector(v: &GF4Vector, perm: &[usize], ops: &[SymbolOp]) -> Result<GF4Vector> {
    let mut out = GF4Vector::zero(v.len())?;
    for (i, (&src, op)) in perm.iter().zip(ops.iter()).enumerate() {
        if src >= v.len() {
            return Err(Error::IndexOutOfRange {
                index: src,
                n: v.len(),
            });
        }
        out.set(i, op.apply(v.get(src)));
    }
    Ok(out)
}

pub struct CodewordIter<'a> {
    rows: &'a [GF4Vector],
    current: GF4Vector,
    step: u64,
    total: u64,
}

impl Iterator for CodewordIter<'_> {
    type Item = GF4Vector;

    fn next(&mut self) -> Option<GF4Vector> {
        if self.step == self.total {
            return None;
        }
        if self.step > 0 {
            let flip = self.step.trailing_zeros() as usize;
            self.current = self
                .current
                .add(&self.rows[flip])
                .expect("generator length matches");
        }
        self.step += 1;
        Some(self.current)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}

/// Weight distribution (A_0, ..., A_n); A_i counts codewords of weight i.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn from_counts(counts: Vec<u64>) -> WeightDistribution {
        WeightDistribution { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    /// Smallest nonzero weight with a codeword.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| self.counts[i] != 0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Distribution of a direct sum: the convolution of the two counts.
    pub fn convolve(&self, rhs: &WeightDistribution) -> WeightDistribution {
        let mut counts = vec![0u64; self.n() + rhs.n() + 1];
        for (i, &a) in self.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.counts.iter().enumerate() {
                counts[i + j] += a * b;
            }
        }
        WeightDistribution { counts }
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.counts)
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Gray-code weight census of the GF(2)-span of `rows` (given as bit-plane
/// pairs). The word at global index m is the XOR of rows selected by the
/// Gray code of m, so disjoint index blocks can be walked independently.
fn distribution_of_span(rows: &[(u64, u64)], n: usize, k: usize, mode: ExecMode) -> Vec<u64> {
    let word_at = |m: u64| -> (u64, u64) {
        let gray = m ^ (m >> 1);
        let mut acc = (0u64, 0u64);
        let mut bits = gray;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc.0 ^= rows[i].0;
            acc.1 ^= rows[i].1;
            bits &= bits - 1;
        }
        acc
    };
    let walk = |start: u64, len: u64| -> Vec<u64> {
        let mut counts = vec![0u64; n + 1];
        let (mut a, mut b) = word_at(start);
        counts[(a | b).count_ones() as usize] += 1;
        for m in start..start + len - 1 {
            let flip = (m + 1).trailing_zeros() as usize;
            a ^= rows[flip].0;
            b ^= rows[flip].1;
            counts[(a | b).count_ones() as usize] += 1;
        }
        counts
    };
    let total = 1u64 << k;
    crate::exec::map_reduce_ranges(
        mode,
        total,
        1 << 16,
        &|start, len| walk(start, len),
        &|mut x, y| {
            for (xi, yi) in x.iter_mut().zip(y.iter()) {
                *xi += yi;
            }
            x
        },
    )
}
