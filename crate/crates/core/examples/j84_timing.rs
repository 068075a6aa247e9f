use std::time::Instant;
fn main() {
    let g = fracdim::generators::johnson(8, 4).unwrap();
    let t0 = Instant::now();
    let sys = fracdim::resolve::ResolutionSystem::build(&g).unwrap();
    println!("resolution system: {:?}, distinct rsets: {}", t0.elapsed(), sys.distinct_rsets().len());
    let t1 = Instant::now();
    let lp = fracdim::ratlp::build_fracdim_lp(&sys);
    println!("lp build: {:?}, rows after dominance: {}", t1.elapsed(), lp.rows().len());
    let t2 = Instant::now();
    let sol = fracdim::ratlp::simplex_solve(&lp).unwrap();
    println!("simplex: {:?}, value = {}", t2.elapsed(), fracdim::ratlp::rational_to_string(&sol.value));
    let t3 = Instant::now();
    assert!(fracdim::ratlp::verify_certificate(&lp, &sol));
    println!("certificate: {:?}", t3.elapsed());
    let t4 = Instant::now();
    let vt = fracdim::symmetry::is_vertex_transitive(&g).unwrap();
    println!("vt check: {:?} -> {vt}", t4.elapsed());
    let t5 = Instant::now();
    let numbers = fracdim::drg::is_distance_regular(&g).unwrap().unwrap();
    println!("drg detect: {:?}, max pii sum {}", t5.elapsed(), numbers.max_pii_sum());
}
