//! Every predicate or metric name a suite can report is listed in the
//! catalog, up to a `/qualifier` suffix.

use seqlab::descriptor::AlgebraDescriptor;
use seqlab::tolerance::Tolerances;
use seqlab::verify::{run_suite, SuiteCatalog};

#[test]
fn reported_predicates_are_catalogued() {
    let catalog = SuiteCatalog::standard();
    // A vanishing tolerance makes nearly every residual a violation, so
    // nearly every predicate name surfaces as a failure.
    let strict = Tolerances {
        eq_tol: 1e-300,
        ..Tolerances::default()
    };
    let mut unknown = Vec::new();
    let mut seen = 0;
    for d in ["complex:2+spin:3", "real:3", "complex:2"] {
        let d: AlgebraDescriptor = d.parse().unwrap();
        for suite in catalog.suites() {
            for t in [Tolerances::default(), strict] {
                let r = run_suite(suite.name, &d, 10, 3, &t).unwrap();
                let names = r.failures.iter().map(|f| f.predicate.as_str()).chain(r.metrics.keys().map(String::as_str));
                for name in names {
                    seen += 1;
                    if suite.predicate(name).is_none() && name != "evaluation-error" {
                        unknown.push(format!("{}: {name}", suite.name));
                    }
                }
            }
        }
    }
    unknown.sort();
    unknown.dedup();
    assert!(seen > 100);
    assert!(unknown.is_empty(), "uncatalogued: {unknown:?}");
}

