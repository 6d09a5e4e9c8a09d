use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use singlet_core::kernel::{
    dirty_kernel_term_r, laplace_term, mc_diffusion_correlator, radial_fourier_term,
};
use singlet_core::{CleanParams, DirtyParams, KernelParams, McConfig, QuadratureConfig};

fn dirty() -> DirtyParams {
    DirtyParams {
        n0: 1.0,
        g_abs: 1.0,
        t_c: 1.0,
        j: 0.5,
        hbar: 1.0,
        d: 1.0,
    }
}

fn bench_kernels(c: &mut Criterion) {
    let quad = QuadratureConfig {
        abs_tol: 0.0,
        ..Default::default()
    };
    let dp = dirty();
    let dk = KernelParams::Dirty(dp);
    let ck = KernelParams::Clean(CleanParams {
        n0: 1.0,
        g_abs: 1.0,
        t_c: 1.0,
        v_f: 1.0,
        j: 0.5,
        hbar: 1.0,
    });

    c.bench_function("dirty_term_closed_form", |b| {
        b.iter(|| dirty_kernel_term_r(black_box(0.8), 1, &dp))
    });
    c.bench_function("dirty_laplace_quadrature", |b| {
        b.iter(|| laplace_term(&dk, black_box(0.8), 1, &quad))
    });
    c.bench_function("clean_fourier_quadrature", |b| {
        b.iter(|| radial_fourier_term(&ck, 1, black_box(3.0), &quad))
    });

    let mc = McConfig {
        n_paths: 10_000,
        n_steps: 4,
        seed: 1,
        bin_edges: McConfig::uniform_bins(0.0, 5.5, 22),
    };
    let mut group = c.benchmark_group("monte_carlo");
    group.sample_size(10);
    group.bench_function("diffusion_10k_paths", |b| {
        b.iter(|| mc_diffusion_correlator(1.0, &dp, &mc))
    });
    group.finish();
}

criterion_group!(benches, bench_kernels);
criterion_main!(benches);
