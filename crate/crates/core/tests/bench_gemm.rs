use dceac_core::tensor::Scalar;
use std::time::Instant;

#[test]
#[ignore]
fn gemm_throughput_probe() {
    // conv3-like GEMM: (128 x 576) * (576 x 1024)
    let (m, k, n) = (128usize, 576usize, 1024usize);
    let a = vec![1.0f32; m * k];
    let b = vec![0.5f32; k * n];
    let mut c = vec![0.0f32; m * n];
    let reps = 200;
    let t0 = Instant::now();
    for _ in 0..reps {
        f32::gemm(m, k, n, 1.0, &a, &b, &mut c);
    }
    let dt = t0.elapsed().as_secs_f64();
    let flops = 2.0 * (m * k * n * reps) as f64;
    eprintln!("single-thread sgemm: {:.1} GFLOP/s", flops / dt / 1e9);

    let t0 = Instant::now();
    let reps2 = 100;
    rayon::scope(|s| {
        for _ in 0..2 {
            let a = &a;
            let b = &b;
            s.spawn(move |_| {
                let mut c = vec![0.0f32; m * n];
                for _ in 0..reps2 {
                    f32::gemm(m, k, n, 1.0, a, b, &mut c);
                }
            });
        }
    });
    let dt = t0.elapsed().as_secs_f64();
    let flops = 2.0 * (m * k * n * reps2 * 2) as f64;
    eprintln!("two-thread sgemm:    {:.1} GFLOP/s", flops / dt / 1e9);
}
