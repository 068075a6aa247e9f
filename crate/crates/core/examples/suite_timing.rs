use std::time::Instant;
use fracdim::verify::*;

fn main() {
    let opts = SuiteOptions::default();

    let t = Instant::now();
    let report = exhaustive_small_graph_sweep(5, &opts).unwrap();
    println!("sweep n<=5: {:?}, pass={}", t.elapsed(), report.all_pass());

    let t = Instant::now();
    let report = thm_4_3_named_pairs().unwrap();
    println!("thm-4.3 pairs: {:?}, pass={}", t.elapsed(), report.all_pass());

    let t = Instant::now();
    let report = product_bounds_corpus(200, 48, &opts).unwrap();
    println!("products corpus: {:?}, pass={}, instances={}", t.elapsed(), report.all_pass(), report.instances.len());

    let t = Instant::now();
    let report = run_suite(Suite::Families, &opts).unwrap();
    println!("families suite: {:?}, pass={}", t.elapsed(), report.all_pass());
}
