//! Canonical forms of vertex-colored graphs, and through them canonical
//! forms, equivalence tests, and automorphism group orders for additive
//! codes.
//!
//! Two codes are equivalent when a monomial map — a coordinate permutation
//! composed with a nonzero scaling and optional conjugation per coordinate —
//! carries one onto the other. The *code graph* turns this into graph
//! isomorphism: take every codeword of weight at most a cap (the smallest
//! cap at or above the minimum distance whose words span the code) as one
//! color class, and for each coordinate a triangle of three symbol vertices
//! standing for the values 1, ω, ω², as the other; join a word to the symbol
//! vertex of its value at every nonzero coordinate. Monomial maps act as
//! S3 on each triangle (ω-scaling rotates, conjugation swaps) and permute
//! triangles, so colored-graph isomorphisms of code graphs are exactly the
//! code equivalences, and the automorphism groups match.
//!
//! The canonical form itself comes from an individualization–refinement
//! search: refine to the coarsest equitable partition, branch on the
//! vertices of the first smallest non-singleton cell, keep the branches
//! minimizing a label-invariant node key, and read the certificate off the
//! first discrete partition. The automorphism group order falls out of the
//! same tree by orbit counting: branches reaching the minimal key form one
//! orbit of the stabilizer, so the order is the orbit size times the order
//! below one such branch.

use crate::code::AdditiveCode;
use crate::error::{Error, Result};
use crate::gf2;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Cap on code-graph size, counting word and symbol vertices.
pub const MAX_CODE_GRAPH_VERTICES: usize = 1 << 18;

/// An undirected loop-free graph with colored vertices.
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    colors: Vec<u32>,
    adj: Vec<Vec<u32>>,
    edges: usize,
}

impl ColoredGraph {
    pub fn new(colors: Vec<u32>) -> Result<ColoredGraph> {
        let n = colors.len();
        if n == 0 {
            return Err(Error::InvalidInput(
                "graph needs at least one vertex".into(),
            ));
        }
        Ok(ColoredGraph {
            colors,
            adj: vec![Vec::new(); n],
            edges: 0,
        })
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::IndexOutOfRange { index: u.max(v), n });
        }
        if u == v {
            return Err(Error::NonzeroDiagonal(u));
        }
        if self.adj[u].contains(&(v as u32)) {
            return Ok(());
        }
        self.adj[u].push(v as u32);
        self.adj[v].push(u as u32);
        self.edges += 1;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&(v as u32))
    }

    /// Canonical form and automorphism group order.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        let mut partition = Partition::from_colors(&self.colors);
        partition.refine(self);
        let inv = partition.invariant();
        let explored = self.explore(partition, inv)?;
        let classes = class_list(&self.colors);
        Ok(CanonicalForm {
            n: self.n(),
            color_classes: classes,
            triangle: explored.triangle,
            aut_order: explored.aut,
        })
    }

    /// Explores the branch below an already-refined partition.
    fn explore(&self, partition: Partition, inv: Vec<u32>) -> Result<Explored> {
        let Some(target) = partition.branch_cell() else {
            let triangle = self.relabeled_triangle(&partition);
            let mut key = inv;
            key.push(SEP);
            push_triangle(&mut key, &triangle);
            let labeling = partition.labeling();
            return Ok(Explored {
                key,
                triangle,
                aut: 1,
                labeling,
            });
        };
        // Shallow pass: refine each individualized child and group by the
        // label-invariant cell-size signature; only the minimal group can
        // hold the minimal key, and orbits never straddle groups.
        let children = self.shallow_children(&partition, target);
        let min_inv = children
            .iter()
            .map(|(_, _, i)| i.clone())
            .min()
            .expect("cell nonempty");
        // Deep pass with orbit pruning. Whenever two branches reach leaves
        // with equal keys, matching the leaf labelings position by position
        // exposes an automorphism, which fixes every vertex this partition
        // has singled out and carries one branch vertex to the other. The
        // union-find collects the orbits those automorphisms generate, so a
        // branch vertex already connected to a processed one is settled
        // without descent; other repeated branches are cut short after one
        // descent path, when the trace leaf proves them automorphic.
        let mut uf = UnionFind::new(self.n());
        let mut best: Option<Explored> = None;
        let mut best_gen = 0u32;
        enum Outcome {
            // Subtree key matched the best known at this generation.
            Equal(u32),
            Worse,
            // Same orbit as an earlier branch; inherits its outcome.
            Skipped(usize),
        }
        let mut outcomes: Vec<(u32, Outcome)> = Vec::new();
        for (v, child, child_inv) in children {
            if child_inv != min_inv {
                continue;
            }
            if let Some(rep) = outcomes
                .iter()
                .position(|&(u, ref o)| !matches!(o, Outcome::Skipped(_)) && uf.same(u, v))
            {
                outcomes.push((v, Outcome::Skipped(rep)));
                continue;
            }
            let Some(b) = &best else {
                let explored = self.explore(child, child_inv)?;
                best = Some(explored);
                outcomes.push((v, Outcome::Equal(best_gen)));
                continue;
            };
            let (trace_key, trace_labeling) = self.trace(child.clone(), child_inv.clone());
            if trace_key == b.key {
                for (x, y) in b.labeling.iter().zip(&trace_labeling) {
                    uf.union(*x, *y);
                }
                outcomes.push((v, Outcome::Equal(best_gen)));
                continue;
            }
            let explored = self.explore(child, child_inv)?;
            match explored.key.cmp(&b.key) {
                std::cmp::Ordering::Greater => outcomes.push((v, Outcome::Worse)),
                std::cmp::Ordering::Equal => {
                    for (x, y) in b.labeling.iter().zip(&explored.labeling) {
                        uf.union(*x, *y);
                    }
                    outcomes.push((v, Outcome::Equal(best_gen)));
                }
                std::cmp::Ordering::Less => {
                    best = Some(explored);
                    best_gen += 1;
                    outcomes.push((v, Outcome::Equal(best_gen)));
                }
            }
        }
        let best = best.expect("minimal group is nonempty");
        let mut orbit = 0u128;
        for (_, outcome) in &outcomes {
            let resolved = match outcome {
                Outcome::Skipped(rep) => &outcomes[*rep].1,
                other => other,
            };
            if matches!(resolved, Outcome::Equal(g) if *g == best_gen) {
                orbit += 1;
            }
        }
        let aut = orbit.checked_mul(best.aut).ok_or(Error::AutOverflow)?;
        let mut key = inv;
        key.push(SEP);
        key.extend_from_slice(&best.key);
        Ok(Explored {
            key,
            triangle: best.triangle,
            aut,
            labeling: best.labeling,
        })
    }

    /// Individualizes each vertex of the target cell and refines, returning
    /// (vertex, refined partition, invariant) in cell order.
    fn shallow_children(
        &self,
        partition: &Partition,
        target: usize,
    ) -> Vec<(u32, Partition, Vec<u32>)> {
        partition.cells[target]
            .iter()
            .map(|&v| {
                let mut child = partition.individualize(target, v);
                child.refine(self);
                let child_inv = child.invariant();
                (v, child, child_inv)
            })
            .collect()
    }

    /// Walks one branch to a leaf, always entering the first child of the
    /// minimal invariant group, and returns the leaf key and labeling. The
    /// key is built exactly as nested `explore` keys are, so equality with
    /// a subtree's best key proves the subtrees automorphic.
    fn trace(&self, mut partition: Partition, mut key: Vec<u32>) -> (Vec<u32>, Vec<u32>) {
        loop {
            let Some(target) = partition.branch_cell() else {
                let triangle = self.relabeled_triangle(&partition);
                key.push(SEP);
                push_triangle(&mut key, &triangle);
                return (key, partition.labeling());
            };
            let children = self.shallow_children(&partition, target);
            let (_, next, next_inv) = children
                .into_iter()
                .min_by(|(_, _, a), (_, _, b)| a.cmp(b))
                .expect("cell nonempty");
            key.push(SEP);
            key.extend_from_slice(&next_inv);
            partition = next;
        }
    }

    /// Upper-triangle adjacency bits after relabeling by a discrete
    /// partition (cell order gives the new labels).
    fn relabeled_triangle(&self, partition: &Partition) -> Vec<u64> {
        let n = self.n();
        let mut pos = vec![0u32; n];
        for (p, cell) in partition.cells.iter().enumerate() {
            debug_assert_eq!(cell.len(), 1);
            pos[cell[0] as usize] = p as u32;
        }
        let mut triangle = vec![0u64; (n * (n - 1) / 2).div_ceil(64)];
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                let (pu, pv) = (pos[u] as usize, pos[v as usize] as usize);
                if pu < pv {
                    let idx = triangle_index(pu, pv, n);
                    triangle[idx / 64] |= 1 << (idx % 64);
                }
            }
        }
        triangle
    }
}

/// Flattened index of (i, j), i < j, in the row-major upper triangle.
fn triangle_index(i: usize, j: usize, n: usize) -> usize {
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn class_list(colors: &[u32]) -> Vec<(u32, u32)> {
    let mut sizes: BTreeMap<u32, u32> = BTreeMap::new();
    for &c in colors {
        *sizes.entry(c).or_insert(0) += 1;
    }
    sizes.into_iter().collect()
}

const SEP: u32 = u32::MAX;

fn push_triangle(key: &mut Vec<u32>, triangle: &[u64]) {
    for &word in triangle {
        key.push((word >> 32) as u32);
        key.push(word as u32);
    }
}

struct Explored {
    key: Vec<u32>,
    triangle: Vec<u64>,
    aut: u128,
    /// Vertex at each position of the leaf the key came from.
    labeling: Vec<u32>,
}

/// Union-find with path halving, tracking automorphism orbits.
struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            self.parent[x as usize] = self.parent[self.parent[x as usize] as usize];
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra as usize] = rb;
        }
    }

    fn same(&mut self, a: u32, b: u32) -> bool {
        self.find(a) == self.find(b)
    }
}

/// A complete isomorphism invariant: two colored graphs have equal forms
/// exactly when some color-preserving bijection matches their edges. The
/// triangle bits decode back to the whole relabeled graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    color_classes: Vec<(u32, u32)>,
    triangle: Vec<u64>,
    aut_order: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn aut_order(&self) -> u128 {
        self.aut_order
    }

    /// Compact hex fingerprint: vertex count, color classes, then the
    /// upper-triangle bits of the canonical labeling.
    pub fn to_hex(&self) -> String {
        let mut out = String::new();
        write!(out, "{:04x}", self.n).expect("write to string");
        write!(out, "{:02x}", self.color_classes.len()).expect("write to string");
        for &(value, size) in &self.color_classes {
            write!(out, "{value:04x}{size:04x}").expect("write to string");
        }
        out.push('.');
        for &word in &self.triangle {
            write!(out, "{word:016x}").expect("write to string");
        }
        out
    }
}

/// Ordered partition of the vertices. Cells only ever split in place, so
/// the block of positions covering one initial color class never moves.
#[derive(Debug, Clone)]
struct Partition {
    cells: Vec<Vec<u32>>,
    cell_of: Vec<u32>,
}

impl Partition {
    fn from_colors(colors: &[u32]) -> Partition {
        let mut by_color: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            by_color.entry(c).or_default().push(v as u32);
        }
        let cells: Vec<Vec<u32>> = by_color.into_values().collect();
        let mut p = Partition {
            cells,
            cell_of: vec![0; colors.len()],
        };
        p.rebuild_cell_of();
        p
    }

    fn rebuild_cell_of(&mut self) {
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                self.cell_of[v as usize] = i as u32;
            }
        }
    }

    /// Cell-size sequence; label-invariant because splits keep positions.
    fn invariant(&self) -> Vec<u32> {
        self.cells.iter().map(|c| c.len() as u32).collect()
    }

    /// Vertex at each position; the partition must be discrete.
    fn labeling(&self) -> Vec<u32> {
        debug_assert!(self.cells.iter().all(|c| c.len() == 1));
        self.cells.iter().map(|c| c[0]).collect()
    }

    /// Position of the first smallest cell of size at least two.
    fn branch_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() >= 2)
            .min_by_key(|(_, c)| c.len())
            .map(|(i, _)| i)
    }

    fn individualize(&self, cell: usize, v: u32) -> Partition {
        let mut next = self.clone();
        let rest: Vec<u32> = next.cells[cell]
            .iter()
            .copied()
            .filter(|&u| u != v)
            .collect();
        next.cells[cell] = vec![v];
        next.cells.insert(cell + 1, rest);
        next.rebuild_cell_of();
        next
    }

    /// Coarsest equitable refinement: sweep the cells as splitters until a
    /// full pass makes no change. Fragments replace their parent in
    /// ascending neighbor-count order, so every step is label-invariant.
    fn refine(&mut self, g: &ColoredGraph) {
        let n = g.n();
        let mut counts = vec![0u32; n];
        loop {
            let mut changed = false;
            let mut s = 0;
            while s < self.cells.len() {
                let splitter = self.cells[s].clone();
                let mut touched: Vec<u32> = Vec::new();
                for &w in &splitter {
                    for &x in &g.adj[w as usize] {
                        if counts[x as usize] == 0 {
                            touched.push(x);
                        }
                        counts[x as usize] += 1;
                    }
                }
                let mut affected: Vec<usize> = touched
                    .iter()
                    .map(|&v| self.cell_of[v as usize] as usize)
                    .collect();
                affected.sort_unstable();
                affected.dedup();
                // Split from the back so pending positions stay valid; the
                // splits are independent (all counts are already fixed).
                for &x in affected.iter().rev() {
                    let mut groups: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
                    for &v in &self.cells[x] {
                        groups.entry(counts[v as usize]).or_default().push(v);
                    }
                    if groups.len() <= 1 {
                        continue;
                    }
                    let fragments: Vec<Vec<u32>> = groups.into_values().collect();
                    self.cells.splice(x..=x, fragments);
                    for pos in x..self.cells.len() {
                        for &v in &self.cells[pos] {
                            self.cell_of[v as usize] = pos as u32;
                        }
                    }
                    changed = true;
                }
                for &v in &touched {
                    counts[v as usize] = 0;
                }
                s += 1;
            }
            if !changed {
                return;
            }
        }
    }
}

/// Canonical data of an additive code: the form of its code graph and the
/// word-weight cap the graph was built with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeCanon {
    pub cert: CanonicalForm,
    pub weight_cap: usize,
}

impl CodeCanon {
    pub fn aut_order(&self) -> u128 {
        self.cert.aut_order()
    }
}

/// Builds the code graph: one vertex per codeword of weight at most the
/// returned cap (smallest cap, at least the minimum distance, whose words
/// span the code) plus a symbol triangle per coordinate.
pub fn build_code_graph(code: &AdditiveCode) -> Result<(ColoredGraph, usize)> {
    let n = code.n();
    let k = code.k();
    let dist = code.weight_distribution()?;
    let d = dist.min_distance().expect("codes are nonzero");
    let mut cap = d;
    let words = loop {
        let budget: u64 = dist.counts()[1..=cap].iter().sum();
        if budget as usize + 3 * n > MAX_CODE_GRAPH_VERTICES {
            return Err(Error::GraphTooLarge(
                budget as usize + 3 * n,
                MAX_CODE_GRAPH_VERTICES,
            ));
        }
        let mut words = Vec::with_capacity(budget as usize);
        let mut span: Vec<u128> = Vec::new();
        for word in code.codewords()? {
            let w = word.weight();
            if w != 0 && w <= cap {
                let (a, b) = word.planes();
                span.push(a as u128 | (b as u128) << n);
                words.push(word);
            }
        }
        if gf2::rank(&span, 2 * n) == k {
            break words;
        }
        cap += 1;
        debug_assert!(cap <= n, "all words of a rank-k code span it");
    };
    let m = words.len();
    let mut colors = vec![0u32; m];
    colors.extend(std::iter::repeat(1u32).take(3 * n));
    let mut g = ColoredGraph::new(colors)?;
    for i in 0..n {
        let base = m + 3 * i;
        g.add_edge(base, base + 1)?;
        g.add_edge(base + 1, base + 2)?;
        g.add_edge(base, base + 2)?;
    }
    for (idx, word) in words.iter().enumerate() {
        for (i, x) in word.iter().enumerate() {
            if x != crate::gf4::GF4::Zero {
                g.add_edge(idx, m + 3 * i + (x as usize - 1))?;
            }
        }
    }
    Ok((g, cap))
}

/// Canonical form of a code under monomial equivalence.
pub fn code_canonical_form(code: &AdditiveCode) -> Result<CodeCanon> {
    let (graph, weight_cap) = build_code_graph(code)?;
    Ok(CodeCanon {
        cert: graph.canonical_form()?,
        weight_cap,
    })
}

/// Order of the monomial automorphism group of the code.
pub fn code_automorphism_order(code: &AdditiveCode) -> Result<u128> {
    Ok(code_canonical_form(code)?.aut_order())
}

/// Monomial equivalence test.
pub fn equivalent(a: &AdditiveCode, b: &AdditiveCode) -> Result<bool> {
    if a.n() != b.n() || a.k() != b.k() {
        return Ok(false);
    }
    Ok(code_canonical_form(a)?.cert == code_canonical_form(b)?.cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::SymbolOp;
    use crate::digraph::Digraph;
    use crate::gf4::GF4;
    use crate::graphform::graph_code;

    fn path_colored(n: usize, colors: Vec<u32>) -> ColoredGraph {
        let mut g = ColoredGraph::new(colors).unwrap();
        for i in 0..n - 1 {
            g.add_edge(i, i + 1).unwrap();
        }
        g
    }

    #[test]
    fn canonical_form_separates_colorings() {
        // A path colored at one end vs the middle: not isomorphic.
        let end = path_colored(3, vec![1, 0, 0]);
        let middle = path_colored(3, vec![0, 1, 0]);
        let other_end = path_colored(3, vec![0, 0, 1]);
        assert_eq!(
            end.canonical_form().unwrap(),
            other_end.canonical_form().unwrap()
        );
        assert_ne!(
            end.canonical_form().unwrap(),
            middle.canonical_form().unwrap()
        );
    }

    #[test]
    fn aut_orders_of_known_graphs() {
        // Monochromatic triangle: S3.
        let mut tri = ColoredGraph::new(vec![0, 0, 0]).unwrap();
        tri.add_edge(0, 1).unwrap();
        tri.add_edge(1, 2).unwrap();
        tri.add_edge(0, 2).unwrap();
        assert_eq!(tri.canonical_form().unwrap().aut_order(), 6);
        // 4-cycle: dihedral of order 8.
        let mut c4 = ColoredGraph::new(vec![0; 4]).unwrap();
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            c4.add_edge(u, v).unwrap();
        }
        assert_eq!(c4.canonical_form().unwrap().aut_order(), 8);
        // Empty graph on 5 vertices: S5.
        let empty = ColoredGraph::new(vec![0; 5]).unwrap();
        assert_eq!(empty.canonical_form().unwrap().aut_order(), 120);
        // Petersen graph: order 120.
        let mut pet = ColoredGraph::new(vec![0; 10]).unwrap();
        for i in 0..5 {
            pet.add_edge(i, (i + 1) % 5).unwrap();
            pet.add_edge(i, i + 5).unwrap();
            pet.add_edge(i + 5, 5 + (i + 2) % 5).unwrap();
        }
        assert_eq!(pet.canonical_form().unwrap().aut_order(), 120);
    }

    #[test]
    fn brute_force_oracle_on_small_two_colored_graphs() {
        // Every 2-colored graph on 4 vertices: canonical forms must induce
        // exactly the brute-force isomorphism classes, with matching
        // automorphism orders.
        let n = 4;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let mut by_cert: BTreeMap<String, Vec<(u32, u32)>> = BTreeMap::new();
        for colors_bits in 0..1u32 << n {
            for edges_bits in 0..1u32 << pairs.len() {
                let colors: Vec<u32> = (0..n).map(|v| colors_bits >> v & 1).collect();
                let mut g = ColoredGraph::new(colors).unwrap();
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    if edges_bits >> b & 1 != 0 {
                        g.add_edge(i, j).unwrap();
                    }
                }
                let form = g.canonical_form().unwrap();
                assert_eq!(
                    form.aut_order(),
                    brute_aut(n, colors_bits, edges_bits, &pairs),
                    "colors {colors_bits:b} edges {edges_bits:b}"
                );
                by_cert
                    .entry(form.to_hex())
                    .or_default()
                    .push((colors_bits, edges_bits));
            }
        }
        for group in by_cert.values() {
            let (c0, e0) = group[0];
            for &(c1, e1) in &group[1..] {
                assert!(
                    brute_isomorphic(n, (c0, e0), (c1, e1), &pairs),
                    "certificate collision between non-isomorphic graphs"
                );
            }
        }
        // Across groups, spot-check that representatives are not
        // isomorphic (full pairwise would be slow).
        let reps: Vec<(u32, u32)> = by_cert.values().map(|g| g[0]).collect();
        for (i, &a) in reps.iter().enumerate() {
            for &b in reps.iter().skip(i + 1) {
                assert!(!brute_isomorphic(n, a, b, &pairs));
            }
        }
    }

    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![0]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for slot in 0..n {
                let mut q: Vec<usize> = p.iter().map(|&x| x + (x >= slot) as usize).collect();
                q.push(slot);
                out.push(q);
            }
        }
        out
    }

    fn edge_bit(pairs: &[(usize, usize)], i: usize, j: usize) -> usize {
        let (a, b) = (i.min(j), i.max(j));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    }

    fn brute_aut(n: usize, colors: u32, edges: u32, pairs: &[(usize, usize)]) -> u128 {
        perms(n)
            .iter()
            .filter(|p| maps_onto(n, (colors, edges), (colors, edges), p, pairs))
            .count() as u128
    }

    fn brute_isomorphic(n: usize, a: (u32, u32), b: (u32, u32), pairs: &[(usize, usize)]) -> bool {
        perms(n).iter().any(|p| maps_onto(n, a, b, p, pairs))
    }

    fn maps_onto(
        n: usize,
        a: (u32, u32),
        b: (u32, u32),
        p: &[usize],
        pairs: &[(usize, usize)],
    ) -> bool {
        for (v, &pv) in p.iter().enumerate().take(n) {
            if a.0 >> v & 1 != b.0 >> pv & 1 {
                return false;
            }
        }
        for &(i, j) in pairs {
            let ab = a.1 >> edge_bit(pairs, i, j) & 1;
            let bb = b.1 >> edge_bit(pairs, p[i], p[j]) & 1;
            if ab != bb {
                return false;
            }
        }
        true
    }

    #[test]
    fn code_graph_shape_for_a_single_generator() {
        // <w> at n = 1: one word of weight 1, one symbol triangle.
        let c = AdditiveCode::from_rows(&["w".parse().unwrap()]).unwrap();
        let (g, cap) = build_code_graph(&c).unwrap();
        assert_eq!(cap, 1);
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(code_automorphism_order(&c).unwrap(), 2);
    }

    #[test]
    fn equivalence_is_detected_and_refuted() {
        let g = Digraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let c = graph_code(&g).unwrap();
        let ops = [
            SymbolOp {
                scale: GF4::Omega,
                conjugate: true,
            },
            SymbolOp {
                scale: GF4::OmegaSq,
                conjugate: false,
            },
            SymbolOp {
                scale: GF4::One,
                conjugate: true,
            },
            SymbolOp::IDENTITY,
        ];
        let scrambled = c.apply_monomial(&[2, 3, 0, 1], &ops).unwrap();
        assert!(equivalent(&c, &scrambled).unwrap());
        let other =
            graph_code(&Digraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()).unwrap();
        assert!(!equivalent(&c, &other).unwrap());
    }

    #[test]
    fn aut_counts_all_monomial_stabilizers() {
        // The empty graph's code <w e_i> is preserved by any coordinate
        // permutation and by {1, conj-then-scale-w2} per coordinate: 2^n n!.
        let c = graph_code(&Digraph::empty(3).unwrap()).unwrap();
        assert_eq!(code_automorphism_order(&c).unwrap(), 8 * 6);
        // A directed 3-ring: rotations times a transpose-like flip and
        // scalings... pinned by brute force below.
        let ring = Digraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let rc = graph_code(&ring).unwrap();
        assert_eq!(code_automorphism_order(&rc).unwrap(), brute_code_aut(&rc));
    }

    /// Counts monomial maps preserving the code, by brute force. Codes are
    /// normalized, so preservation is plain equality.
    fn brute_code_aut(c: &AdditiveCode) -> u128 {
        let n = c.n();
        let mut count = 0u128;
        for perm in perms(n) {
            let mut op_choice = vec![0usize; n];
            loop {
                let ops: Vec<SymbolOp> = op_choice.iter().map(|&i| SymbolOp::all()[i]).collect();
                let mapped = c.apply_monomial(&perm, &ops).unwrap();
                if mapped == *c {
                    count += 1;
                }
                // Odometer over the 6^n symbol-op choices.
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    op_choice[pos] += 1;
                    if op_choice[pos] < 6 {
                        break;
                    }
                    op_choice[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
        }
        count
    }
}
