use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use morava::{
    build_slice, cohomology, cohomology_scan, verify_lemma_zero, ExteriorComplex, Monomial,
    PrimeContext,
};

fn complex(p: u64, n: u32) -> ExteriorComplex {
    ExteriorComplex::new(PrimeContext::new(p, n).unwrap()).unwrap()
}

fn bench_basis_enumeration(c: &mut Criterion) {
    let cx = complex(7, 4);
    c.bench_function("basis C^{3,-12} at (7,4)", |b| {
        b.iter(|| black_box(cx.basis(3, -1).unwrap()))
    });
    c.bench_function("bucket all 2^16 masks at (7,4)", |b| {
        b.iter(|| black_box(cx.enumerate_all().unwrap()))
    });
}

fn bench_differential(c: &mut Criterion) {
    let cx = complex(7, 4);
    let top = cx.top_class().bits();
    let mut state = 0x12345678u64;
    let mut monomials = Vec::with_capacity(1024);
    for _ in 0..1024 {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        monomials.push(Monomial::from_bits(
            state.wrapping_mul(0x2545F4914F6CDD1D) & top,
        ));
    }
    c.bench_function("differential of 1024 monomials at (7,4)", |b| {
        b.iter(|| {
            for &m in &monomials {
                black_box(cx.differential_monomial(m));
            }
        })
    });
}

fn bench_slices(c: &mut Criterion) {
    let cx = complex(7, 4);
    c.bench_function("slice + cohomology H^{13,12} at (7,4)", |b| {
        b.iter(|| {
            let slice = build_slice(&cx, 13, 1).unwrap();
            black_box(cohomology(&cx, &slice).unwrap().dim)
        })
    });
    let cx53 = complex(5, 3);
    c.bench_function("full 10x31 chart at (5,3)", |b| {
        b.iter_batched(
            || cx53.enumerate_all().unwrap(),
            |buckets| black_box(cohomology_scan(&cx53, 0, 9, &buckets).unwrap()),
            BatchSize::SmallInput,
        )
    });
}

fn bench_lemma_zero(c: &mut Criterion) {
    let ctx = PrimeContext::new(7, 4).unwrap();
    c.bench_function("verify lemma-zero at (7,4)", |b| {
        b.iter(|| black_box(verify_lemma_zero(&ctx).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_basis_enumeration,
    bench_differential,
    bench_slices,
    bench_lemma_zero
);
criterion_main!(benches);
