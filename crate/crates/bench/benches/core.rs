use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use asmdpp_core::{asm, dpp, matrices, rat, six_vertex, IkPoint};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for n in [4, 5, 6] {
        g.bench_with_input(BenchmarkId::new("asm", n), &n, |b, &n| b.iter(|| asm::enumerate_asms(n).unwrap().len()));
        g.bench_with_input(BenchmarkId::new("dpp", n), &n, |b, &n| b.iter(|| dpp::enumerate_dpps(n).unwrap().len()));
    }
    g.finish();
}

fn generating_functions(c: &mut Criterion) {
    let mut g = c.benchmark_group("genfunc");
    for n in [4, 6, 8] {
        g.bench_with_input(BenchmarkId::new("det", n), &n, |b, &n| b.iter(|| matrices::genfunc_det(n).unwrap()));
    }
    g.bench_function("brute-asm/6", |b| b.iter(|| asm::z_asm_brute(black_box(6)).unwrap()));
    g.bench_function("brute-dpp/6", |b| b.iter(|| dpp::z_dpp_brute(black_box(6)).unwrap()));
    g.finish();
}

fn izergin_korepin(c: &mut Criterion) {
    let p = IkPoint {
        q: rat(3, 2),
        s: vec![rat(1, 2), rat(2, 1), rat(-5, 3)],
        t: vec![rat(7, 4), rat(3, 5), rat(4, 1)],
    };
    c.bench_function("ik/determinant/3", |b| b.iter(|| six_vertex::ik_determinant_rat(black_box(&p)).unwrap()));
    c.bench_function("ik/explicit/3", |b| b.iter(|| six_vertex::partition_function_explicit(black_box(&p)).unwrap()));
}

criterion_group!(benches, enumeration, generating_functions, izergin_korepin);
criterion_main!(benches);
