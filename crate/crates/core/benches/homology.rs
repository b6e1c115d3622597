use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use osp_core::chains::ChainComplex;
use osp_core::exec::Exec;
use osp_core::homology::homology_of;
use osp_core::liealg::realize;
use osp_core::rootsys::Weight;
use osp_core::verma::simple_quotient;

fn bench_homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("homology");
    group.sample_size(10);
    for lam in ["1,0", "1,1"] {
        let lambda: Weight = lam.parse().unwrap();
        let g = Arc::new(realize(2).unwrap());
        let module = Arc::new(simple_quotient(g, &lambda).unwrap());
        for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
            group.bench_with_input(BenchmarkId::new(name, lam), &module, |b, m| {
                b.iter(|| {
                    let cc = ChainComplex::new(Arc::clone(m), 6, exec);
                    homology_of(&cc, 5, exec)
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_homology);
criterion_main!(benches);
