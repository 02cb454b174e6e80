//! A short tour of the library surface: construct, measure, reduce,
//! classify, search. Run with `cargo run --example tour -p dgcode`.

use dgcode::{equivalent, to_graph_form};

fn main() -> dgcode::Result<()> {
    // Bordered quadratic-residue circulant at p = 13: a self-dual
    // (14, 2^14) code of distance 6.
    let qr = dgcode::bordered_qr_code(13)?;
    assert_eq!((qr.n(), qr.k()), (14, 14));
    assert_eq!(qr.min_distance()?, 6);
    assert!(qr.is_self_dual()?);
    println!("bordered QR(13): d = {}", qr.min_distance()?);

    // Every half-rate code reduces to a graph code (adjacency matrix plus
    // ωI) equivalent to it; the reduction records which coordinates had
    // their planes swapped or conjugated on the way.
    let form = to_graph_form(&qr)?;
    assert!(equivalent(&qr, &form.code())?);
    println!(
        "graph form: {} arcs, swaps at {:?}, conjugations at {:?}",
        form.graph.edge_count(),
        form.swaps,
        form.conjugations
    );

    // Census of all (4, 2^4) graph codes from connected graphs, up to
    // monomial equivalence: 49 classes.
    let records = dgcode::classify_codes(4)?;
    println!("length 4: {} classes", records.len());
    assert_eq!(records.len(), 49);

    // The Euler transform turns those indecomposable counts into totals
    // over all codes, decomposable ones included.
    let all = dgcode::euler_transform(&[1, 2, 7, 49])?;
    assert_eq!(all, [1, 3, 10, 62]);

    // Exhaustive circulant + bordered-circulant search at length 8: best
    // distance 4, realized by 11 inequivalent codes.
    let report = dgcode::search_best(8)?;
    println!(
        "length 8 search: d = {}, {} classes from {} seeds",
        report.best_distance,
        report.hits.len(),
        report.seeds_scanned
    );
    assert_eq!((report.best_distance, report.hits.len()), (4, 11));
    Ok(())
}
