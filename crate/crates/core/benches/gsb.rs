use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use conformal_gsb::gsb::{check_gsb, complete, CheckOptions, CompleteOptions, Limits, RelationSet};
use conformal_gsb::lie::{virasoro, IndexWindow};
use conformal_gsb::Signature;

fn modes() -> Vec<(&'static str, bool)> {
    let mut v = vec![("sequential", false)];
    if conformal_gsb::gsb::par::AVAILABLE {
        v.push(("parallel", true));
    }
    v
}

fn virasoro_check(c: &mut Criterion) {
    let ex = virasoro();
    let mut group = c.benchmark_group("virasoro_check_gsb");
    group.sample_size(10);
    for w in [2u64, 3] {
        let iw = IndexWindow { w, m: 3 };
        let set = ex.s1_set(iw).unwrap();
        let window = Some(iw.check_window(ex.max_params()));
        for (name, parallel) in modes() {
            let opts = CheckOptions { window, parallel, ..Default::default() };
            group.bench_with_input(BenchmarkId::new(name, w), &opts, |b, opts| {
                b.iter(|| black_box(check_gsb(&set, &ex.sig, opts)))
            });
        }
    }
    group.finish();
}

fn virasoro_completion(c: &mut Criterion) {
    let ex = virasoro();
    let iw = IndexWindow { w: 2, m: 3 };
    let s_minus = ex.s_minus(iw);
    let window = Some(iw.check_window(ex.max_params()));
    let limits = Limits { max_basis: 20_000, max_length: 4, max_iters: 6 };
    let mut group = c.benchmark_group("virasoro_complete");
    group.sample_size(10);
    for (name, parallel) in modes() {
        let opts = CompleteOptions { limits, window, parallel, ..Default::default() };
        group.bench_function(name, |b| b.iter(|| black_box(complete(&s_minus, &ex.sig, &opts))));
    }
    group.finish();
}

fn small_completion(c: &mut Criterion) {
    let sig = Signature::finite(3, &["a"]).unwrap();
    let input = RelationSet::monic(3, [sig.parse_poly("a (2) a - a (0) D a").unwrap()]);
    let mut group = c.benchmark_group("one_generator_complete");
    for (name, parallel) in modes() {
        let opts = CompleteOptions { parallel, ..Default::default() };
        group.bench_function(name, |b| b.iter(|| black_box(complete(&input, &sig, &opts))));
    }
    group.finish();
}

criterion_group!(benches, virasoro_check, virasoro_completion, small_completion);
criterion_main!(benches);
