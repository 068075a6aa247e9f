use std::time::Instant;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use fracdim::graph::{cartesian_product, Graph};

fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1729);
    let mut produced = 0;
    let total = Instant::now();
    while produced < 40 {
        let a = rng.gen_range(2..=12);
        let b = rng.gen_range(2..=12);
        if a * b > 48 {
            continue;
        }
        let g = random_connected_graph(&mut rng, a, 0.5);
        let h = random_connected_graph(&mut rng, b, 0.5);
        let p = cartesian_product(&g, &h);
        let t = Instant::now();
        let sys = fracdim::resolve::ResolutionSystem::build(&p).unwrap();
        let lp = fracdim::ratlp::build_fracdim_lp(&sys);
        let sol = fracdim::ratlp::simplex_solve(&lp).unwrap();
        assert!(fracdim::ratlp::verify_certificate(&lp, &sol));
        let dt = t.elapsed();
        if dt.as_millis() > 200 {
            println!("pair {produced}: n={} ({}x{}) rows={} value={} took {:?}",
                p.n(), a, b, lp.rows().len(), fracdim::ratlp::rational_to_string(&sol.value), dt);
        }
        produced += 1;
    }
    println!("40 pairs total: {:?}", total.elapsed());
}
