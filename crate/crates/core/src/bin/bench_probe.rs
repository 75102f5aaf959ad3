use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use std::time::Instant;

fn main() {
    let n_paths = 200u64;
    let n_steps = 100_000usize;
    let dt = 1.0 / 14600.0;
    let sigma = 0.46f64;
    let r = 0.03746f64;
    let drift = (r - 0.5 * sigma * sigma) * dt;
    let vol = sigma * dt.sqrt();
    let start = Instant::now();
    let mut acc = 0.0f64;
    for i in 0..n_paths {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        rng.set_stream(i);
        let mut s = 100.0f64;
        for _ in 0..n_steps {
            let z: f64 = StandardNormal.sample(&mut rng);
            s *= (drift + vol * z).exp();
        }
        acc += s;
    }
    let dur = start.elapsed().as_secs_f64();
    let total = n_paths as f64 * n_steps as f64;
    println!("acc={acc:.3} steps={total} time={dur:.3}s rate={:.1}M steps/s", total / dur / 1e6);
}
