//! Simple directed graphs on up to 64 vertices, stored as one out-neighbor
//! bitmask per vertex. No loops. Includes the digraph6 text format and a
//! brute-force canonical form for small orders.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    /// rows[i] bit j set means an arc i -> j. Diagonal bits stay clear.
    rows: Vec<u64>,
}

/// Brute-force canonicalization enumerates vertex orders, so cap the order.
pub const CANON_MAX_N: usize = 8;

impl Digraph {
    pub fn empty(n: usize) -> Result<Digraph> {
        if n == 0 || n > 64 {
            return Err(Error::TooLong(n));
        }
        Ok(Digraph { rows: vec![0; n] })
    }

    /// Builds from out-neighbor bitmasks; rejects loops and stray bits.
    pub fn from_rows(rows: Vec<u64>) -> Result<Digraph> {
        let n = rows.len();
        if n == 0 || n > 64 {
            return Err(Error::TooLong(n));
        }
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidInput(format!(
                    "row {i} has neighbor bits beyond {n} vertices"
                )));
            }
            if row >> i & 1 != 0 {
                return Err(Error::NonzeroDiagonal(i));
            }
        }
        Ok(Digraph { rows })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Digraph> {
        let mut g = Digraph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.rows[u] >> v & 1 != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n {
            return Err(Error::IndexOutOfRange { index: u, n });
        }
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, n });
        }
        if u == v {
            return Err(Error::NonzeroDiagonal(u));
        }
        self.rows[u] |= 1 << v;
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> Digraph {
        let n = self.n();
        let mut rows = vec![0u64; n];
        for (i, &row) in self.rows.iter().enumerate() {
            let mut bits = row;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                rows[j] |= 1 << i;
                bits &= bits - 1;
            }
        }
        Digraph { rows }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_weakly_connected(&self) -> bool {
        let n = self.n();
        let undirected: Vec<u64> = {
            let t = self.transpose();
            self.rows
                .iter()
                .zip(t.rows.iter())
                .map(|(a, b)| a | b)
                .collect()
        };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                next |= undirected[v];
                bits &= bits - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == n
    }

    /// Relabels: vertex `order[p]` becomes vertex `p`.
    pub fn relabel(&self, order: &[usize]) -> Digraph {
        let n = self.n();
        debug_assert_eq!(order.len(), n);
        let mut pos = vec![0usize; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let mut rows = vec![0u64; n];
        for (p, &v) in order.iter().enumerate() {
            let mut bits = self.rows[v];
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                rows[p] |= 1 << pos[j];
                bits &= bits - 1;
            }
        }
        Digraph { rows }
    }

    /// Row-major adjacency bits packed MSB-first, so integer order equals
    /// lexicographic order on the bit matrix. Requires n <= 8.
    pub fn encode(&self) -> Result<u64> {
        let n = self.n();
        if n > CANON_MAX_N {
            return Err(Error::TooLong(n));
        }
        let mut enc = 0u64;
        for (i, &row) in self.rows.iter().enumerate() {
            for j in 0..n {
                if row >> j & 1 != 0 {
                    enc |= 1 << (n * n - 1 - (i * n + j));
                }
            }
        }
        Ok(enc)
    }

    /// Canonical form: the relabeling minimizing `encode()`, over vertex
    /// orders that sort a label-invariant vertex signature. Two digraphs are
    /// isomorphic exactly when their canonical forms are equal.
    pub fn canonical(&self) -> Result<Digraph> {
        let (g, _) = self.canonical_with_order()?;
        Ok(g)
    }

    /// Canonical form together with one order achieving it.
    pub fn canonical_with_order(&self) -> Result<(Digraph, Vec<usize>)> {
        let n = self.n();
        if n > CANON_MAX_N {
            return Err(Error::TooLong(n));
        }
        // Signature: (out-degree, in-degree) refined once by the sorted
        // multiset of neighbor signatures. Isomorphisms preserve it, so the
        // minimum over signature-sorted orders is still canonical.
        type Deg = (u32, u32);
        let t = self.transpose();
        let deg: Vec<Deg> = (0..n)
            .map(|v| (self.rows[v].count_ones(), t.rows[v].count_ones()))
            .collect();
        let sig: Vec<(Vec<Deg>, Vec<Deg>, Deg)> = (0..n)
            .map(|v| {
                let mut outs: Vec<Deg> = bit_indices(self.rows[v]).map(|j| deg[j]).collect();
                let mut ins: Vec<Deg> = bit_indices(t.rows[v]).map(|j| deg[j]).collect();
                outs.sort_unstable();
                ins.sort_unstable();
                (outs, ins, deg[v])
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&x, &y| sig[x].cmp(&sig[y]));
        // Class blocks of equal signature; candidate orders permute within
        // blocks only.
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=n {
            if i == n || sig[order[i]] != sig[order[start]] {
                blocks.push((start, i));
                start = i;
            }
        }
        let mut best: Option<(u64, Digraph, Vec<usize>)> = None;
        permute_blocks(&mut order, &blocks, 0, &mut |order| {
            let candidate = self.relabel(order);
            let enc = candidate.encode().expect("n checked");
            if best.as_ref().map_or(true, |(b, _, _)| enc < *b) {
                best = Some((enc, candidate, order.to_vec()));
            }
        });
        let (_, graph, order) = best.expect("at least the identity order");
        Ok((graph, order))
    }

    /// digraph6 text: '&', then the order as one printable byte (n <= 62),
    /// then the row-major adjacency bits in 6-bit groups, each offset by 63.
    pub fn to_digraph6(&self) -> Result<String> {
        let n = self.n();
        if n > 62 {
            return Err(Error::Digraph6(format!(
                "order {n} needs the long size form"
            )));
        }
        let mut out = String::from("&");
        out.push((n as u8 + 63) as char);
        let mut group = 0u8;
        let mut filled = 0;
        for i in 0..n {
            for j in 0..n {
                group = group << 1 | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push((group + 63) as char);
                    group = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(((group << (6 - filled)) + 63) as char);
        }
        Ok(out)
    }

    pub fn from_digraph6(text: &str) -> Result<Digraph> {
        let bytes = text.trim().as_bytes();
        let fail = |msg: &str| Error::Digraph6(format!("{msg}: {text:?}"));
        if bytes.first() != Some(&b'&') {
            return Err(fail("missing '&' prefix"));
        }
        let &size = bytes.get(1).ok_or_else(|| fail("missing order byte"))?;
        if !(63..=125).contains(&size) {
            return Err(fail("order byte out of range"));
        }
        let n = (size - 63) as usize;
        if n == 0 {
            return Err(fail("order zero"));
        }
        let body = &bytes[2..];
        let need_groups = (n * n).div_ceil(6);
        if body.len() != need_groups {
            return Err(fail("wrong body length"));
        }
        let mut bits = Vec::with_capacity(need_groups * 6);
        for &raw in body {
            if !(63..=126).contains(&raw) {
                return Err(fail("body byte out of range"));
            }
            let group = raw - 63;
            for shift in (0..6).rev() {
                bits.push(group >> shift & 1 != 0);
            }
        }
        if bits[n * n..].iter().any(|&b| b) {
            return Err(fail("nonzero padding"));
        }
        let mut rows = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if bits[i * n + j] {
                    if i == j {
                        return Err(fail("loop on the diagonal"));
                    }
                    rows[i] |= 1 << j;
                }
            }
        }
        Ok(Digraph { rows })
    }
}

impl fmt::Debug for Digraph {
    /// Prints the adjacency matrix as 0/1 rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        writeln!(f, "Digraph(n={n})")?;
        for i in 0..n {
            for j in 0..n {
                write!(f, "{}", self.has_edge(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn bit_indices(word: u64) -> impl Iterator<Item = usize> {
    std::iter::successors(if word == 0 { None } else { Some(word) }, |w| {
        let rest = w & (w - 1);
        (rest != 0).then_some(rest)
    })
    .map(|w| w.trailing_zeros() as usize)
}

/// Calls `visit` with every arrangement of `order` obtained by permuting
/// inside each block independently (Heap's algorithm per block).
fn permute_blocks(
    order: &mut Vec<usize>,
    blocks: &[(usize, usize)],
    depth: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    match blocks.get(depth) {
        None => visit(order),
        Some(&(lo, hi)) => {
            fn heap(
                order: &mut Vec<usize>,
                lo: usize,
                len: usize,
                blocks: &[(usize, usize)],
                depth: usize,
                visit: &mut impl FnMut(&[usize]),
            ) {
                if len <= 1 {
                    permute_blocks(order, blocks, depth + 1, visit);
                    return;
                }
                for i in 0..len {
                    heap(order, lo, len - 1, blocks, depth, visit);
                    if len % 2 == 0 {
                        order.swap(lo + i, lo + len - 1);
                    } else {
                        order.swap(lo, lo + len - 1);
                    }
                }
            }
            heap(order, lo, hi - lo, blocks, depth, visit);
        }
    }
}
