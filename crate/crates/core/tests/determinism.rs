use laguerre_ltp::numerics::{parse_decimal, PrecisionContext};
use laguerre_ltp::report::convergence_table_report;
use laguerre_ltp::sto::{convergence_table, IntegralSpec, Method, StoParams};

fn table_with_threads(threads: usize) -> String {
    let q = |s: &str| parse_decimal(s).unwrap();
    let spec = IntegralSpec::new(
        StoParams::new(q("2.3"), q("3.56")).unwrap(),
        StoParams::new(q("4.6"), q("4.65")).unwrap(),
        q("1.1"),
        q("5.1"),
    )
    .unwrap();
    let ctx = PrecisionContext::default();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
    let rows = pool
        .install(|| convergence_table(&spec, &Method::ALL, &[-2, -1, 0, 1, 2], 0, 25, &ctx))
        .unwrap();
    convergence_table_report(&rows, &ctx).to_csv()
}

#[test]
fn identical_across_thread_counts() {
    let single = table_with_threads(1);
    assert_eq!(single.lines().count(), 1 + 12 * 25);
    assert_eq!(single, table_with_threads(4));
    assert_eq!(single, table_with_threads(7));
}
