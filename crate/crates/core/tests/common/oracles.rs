//! Oracle checks shared by the property and acceptance test targets. Each
//! function cross-validates a fast path against an independent slow path:
//! brute monomial equivalence, nullspace duals, Z4 twin enumerations, full
//! codeword scans, and the Euler transform.

use dgcode::classify::{
    classify_graph_codes, enumerate_all_digraphs, enumerate_connected_digraphs,
};
use dgcode::constructions::{
    bordered_circulant_code, circulant_code, isoduality_permutation, CirculantSeed,
};
use dgcode::graphform::{bounded_min_distance, graph_code, z4_twin_distribution};
use dgcode::{
    code_canonical_form, equivalent, euler_transform, AdditiveCode, Digraph, GF4Vector, SymbolOp,
};
use std::collections::{BTreeMap, BTreeSet};

/// All distinct half-rate codes of length 3: every GF(2)-span of three
/// independent vectors in GF(4)^3, deduplicated by normalized basis. Their
/// count is the Gaussian binomial [6 choose 3]_2.
fn all_length_three_codes() -> Vec<AdditiveCode> {
    let mut seen = BTreeSet::new();
    let mut codes = Vec::new();
    for bits in 0..1u32 << 18 {
        let rows: Vec<GF4Vector> = (0..3)
            .map(|r| {
                let chunk = (bits >> (6 * r)) as u64;
                GF4Vector::from_planes(3, chunk & 7, chunk >> 3 & 7).unwrap()
            })
            .collect();
        let Ok(code) = AdditiveCode::from_rows(&rows) else {
            continue;
        };
        if code.k() == 3 && seen.insert(code.to_text()) {
            codes.push(code);
        }
    }
    codes
}

/// Least generator text over every monomial image: 6^n scale/conjugate
/// choices times n! coordinate permutations.
fn brute_class_representative(code: &AdditiveCode) -> String {
    let n = code.n();
    let ops_all = SymbolOp::all();
    let mut best: Option<String> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut op_idx = vec![0usize; n];
        loop {
            let ops: Vec<SymbolOp> = op_idx.iter().map(|&i| ops_all[i]).collect();
            let text = code.apply_monomial(&perm, &ops).unwrap().to_text();
            if best.as_ref().map_or(true, |b| text < *b) {
                best = Some(text);
            }
            let mut carry = 0;
            while carry < n {
                op_idx[carry] += 1;
                if op_idx[carry] < ops_all.len() {
                    break;
                }
                op_idx[carry] = 0;
                carry += 1;
            }
            if carry == n {
                break;
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

pub fn certificates_match_brute_equivalence() {
    let codes = all_length_three_codes();
    assert_eq!(codes.len(), 1395);
    let mut brute_to_certs: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    let mut cert_to_brutes: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for code in &codes {
        let brute = brute_class_representative(code);
        let cert = code_canonical_form(code).unwrap().cert.to_hex();
        brute_to_certs
            .entry(brute.clone())
            .or_default()
            .insert(cert.clone());
        cert_to_brutes.entry(cert).or_default().insert(brute);
    }
    // The two class systems coincide exactly when each map is one-to-one.
    assert!(brute_to_certs.values().all(|s| s.len() == 1));
    assert!(cert_to_brutes.values().all(|s| s.len() == 1));
    // And equivalent() answers with the same classes on sampled pairs.
    for i in (0..codes.len()).step_by(97) {
        let j = (i * 7 + 3) % codes.len();
        let same_brute =
            brute_class_representative(&codes[i]) == brute_class_representative(&codes[j]);
        assert_eq!(
            equivalent(&codes[i], &codes[j]).unwrap(),
            same_brute,
            "{i} vs {j}"
        );
    }
}

pub fn scrambles_stay_equivalent_and_refutations_hold() {
    // Deterministic pseudo-random length-4 codes via splitmix64.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let random_code = |bits: u64| {
        let rows: Vec<GF4Vector> = (0..4)
            .map(|r| {
                let chunk = bits >> (8 * r);
                GF4Vector::from_planes(4, chunk & 15, chunk >> 4 & 15).unwrap()
            })
            .collect();
        AdditiveCode::from_rows(&rows).ok().filter(|c| c.k() == 4)
    };
    let ops_all = SymbolOp::all();
    let mut scrambles = 0;
    let mut refutations = 0;
    while scrambles < 60 || refutations < 60 {
        let Some(code) = random_code(next()) else {
            continue;
        };
        if scrambles < 60 {
            // Random monomial image must be equivalent.
            let r = next();
            let mut perm: Vec<usize> = (0..4).collect();
            for i in (1..4).rev() {
                perm.swap(i, (r >> (8 * i)) as usize % (i + 1));
            }
            let ops: Vec<SymbolOp> = (0..4)
                .map(|i| ops_all[(r >> (4 * i)) as usize % 6])
                .collect();
            let image = code.apply_monomial(&perm, &ops).unwrap();
            assert!(equivalent(&code, &image).unwrap());
            scrambles += 1;
        }
        if refutations < 60 {
            let Some(other) = random_code(next()) else {
                continue;
            };
            if code.weight_distribution().unwrap() != other.weight_distribution().unwrap() {
                // Different enumerators are an equivalence invariant apart.
                assert!(!equivalent(&code, &other).unwrap());
                refutations += 1;
            }
        }
    }
}

pub fn dual_of_graph_code_is_transpose_graph_code() {
    for n in 1..=4 {
        for g in enumerate_connected_digraphs(n).unwrap() {
            let dual = graph_code(&g).unwrap().dual();
            assert_eq!(dual, graph_code(&g.transpose()).unwrap(), "{g:?}");
        }
    }
}

pub fn z4_twin_distribution_matches_direct_enumeration() {
    for n in 1..=4u32 {
        let off = n * (n - 1);
        for word in 0..1u64 << off {
            let g = digraph_from_word(n as usize, word);
            let twin = z4_twin_distribution(&g).unwrap();
            let direct = graph_code(&g).unwrap().weight_distribution().unwrap();
            assert_eq!(twin, direct, "{g:?}");
        }
    }
    // Larger spot checks from a fixed pseudo-random stream.
    let mut state = 7u64;
    for _ in 0..100 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let n = 5 + (state >> 59) as usize % 8;
        let mut g = Digraph::empty(n).unwrap();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    if state >> 63 != 0 {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
        }
        let twin = z4_twin_distribution(&g).unwrap();
        let direct = graph_code(&g).unwrap().weight_distribution().unwrap();
        assert_eq!(twin, direct);
    }
}

/// Packs an off-diagonal bit word into a digraph row-major.
fn digraph_from_word(n: usize, mut word: u64) -> Digraph {
    let mut g = Digraph::empty(n).unwrap();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                if word & 1 != 0 {
                    g.add_edge(i, j).unwrap();
                }
                word >>= 1;
            }
        }
    }
    g
}

pub fn circulant_families_are_isodual_with_shift_symmetry() {
    for n in 2..=10usize {
        for bits in 0..1u64 << (n - 1) {
            let seed = CirculantSeed::from_bits(n, bits).unwrap();
            let code = circulant_code(&seed).unwrap();
            let perm = isoduality_permutation(n, false);
            let ops = vec![SymbolOp::IDENTITY; n];
            assert_eq!(code.apply_monomial(&perm, &ops).unwrap(), code.dual());
            if n <= 7 {
                let aut = code_canonical_form(&code).unwrap().aut_order();
                assert_eq!(aut % n as u128, 0, "n={n} bits={bits:b} aut={aut}");
            }
        }
    }
    for m in 2..=9usize {
        for bits in 0..1u64 << (m - 1) {
            let seed = CirculantSeed::from_bits(m, bits).unwrap();
            let code = bordered_circulant_code(&seed).unwrap();
            let perm = isoduality_permutation(m + 1, true);
            let ops = vec![SymbolOp::IDENTITY; m + 1];
            assert_eq!(code.apply_monomial(&perm, &ops).unwrap(), code.dual());
            if m <= 6 {
                let aut = code_canonical_form(&code).unwrap().aut_order();
                assert_eq!(aut % m as u128, 0, "m={m} bits={bits:b} aut={aut}");
            }
        }
    }
}

pub fn bounded_distance_agrees_with_full_enumeration() {
    for n in 1..=5 {
        for g in enumerate_connected_digraphs(n).unwrap() {
            let code = graph_code(&g).unwrap();
            let full = code.min_distance().unwrap();
            let bounded = bounded_min_distance(&g, n);
            assert_eq!(bounded.exact(), Some(full), "{g:?}");
        }
    }
}

pub fn euler_transform_counts_all_codes_from_connected_ones() {
    // Indecomposable-class counts for lengths 1..=4 feed the transform; the
    // result must match a census over all digraphs, disconnected included.
    let connected_classes: Vec<u64> = (1..=4)
        .map(|n| {
            classify_graph_codes(&enumerate_connected_digraphs(n).unwrap())
                .unwrap()
                .len() as u64
        })
        .collect();
    assert_eq!(connected_classes, [1, 2, 7, 49]);
    let totals = euler_transform(&connected_classes).unwrap();
    assert_eq!(totals, [1, 3, 10, 62]);
    let all_graph_classes = classify_graph_codes(&enumerate_all_digraphs(4).unwrap())
        .unwrap()
        .len() as u64;
    assert_eq!(all_graph_classes, 62);
    // Known digraph counts transform the same way.
    assert_eq!(
        euler_transform(&[1, 2, 13, 199, 9364]).unwrap(),
        [1, 3, 16, 218, 9608]
    );
}
