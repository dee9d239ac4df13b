use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::descriptor::SimpleFactor;
use crate::error::Result;
use crate::loctom::{
    explicit_tensor_checks, is_locally_tomographic_self_composite, simple_ejas_of_rank, square_composite_exists,
    EjaFamily, SimpleEjaRow, TENSOR_CAP,
};
use crate::verify::{Ctx, Probe};

/// Explicit composites of every pair of complex summands that fits under
/// the size cap; vacuous when there are none.
pub(super) fn tensor(ctx: &Ctx, rng: &mut ChaCha8Rng, samples: usize, pr: &mut Probe) -> Result<()> {
    let sizes: Vec<usize> = ctx
        .desc
        .factors()
        .iter()
        .filter_map(|f| match f {
            SimpleFactor::ComplexHerm(n) => Some(*n),
            _ => None,
        })
        .collect();
    for (i, &n) in sizes.iter().enumerate() {
        for &m in &sizes[i..] {
            if n * m > TENSOR_CAP {
                continue;
            }
            let r = explicit_tensor_checks(n, m, samples, rng.random(), &ctx.tol)?;
            let key = |name: &str| format!("{name}/{n}x{m}");
            pr.within(&key("tensor-product-law"), r.product_law_residual, r.eps, &[]);
            pr.within(&key("tensor-atom-sharp"), r.atom_product_residual, r.eps, &[]);
            pr.holds(&key("tensor-atom-atomic"), r.atom_products_atomic, &[]);
            pr.within(&key("tensor-classical"), r.classical_defect, r.eps, &[]);
            pr.holds(&key("tensor-rank"), r.identity_rank == n * m, &[]);
            pr.holds(&key("tensor-dimension"), r.dimension == (n * m) * (n * m), &[]);
            pr.holds(&key("spread-atom-overlap"), r.spread_atom_min_overlap > r.eps, &[]);
            pr.holds(&key("summand-overlap"), r.summand_violations == 0, &[]);
        }
    }
    Ok(())
}

/// Whether a factor is a complex matrix algebra up to isomorphism.
fn complex_up_to_iso(f: SimpleFactor) -> bool {
    matches!(
        f,
        SimpleFactor::ComplexHerm(_)
            | SimpleFactor::RealSym(1)
            | SimpleFactor::QuatHerm(1)
            | SimpleFactor::SpinFactor(1)
            | SimpleFactor::SpinFactor(3)
    )
}

pub(super) fn table(ctx: &Ctx, _rng: &mut ChaCha8Rng, _samples: usize, pr: &mut Probe) -> Result<()> {
    let consistent = (1..=9).all(|r| simple_ejas_of_rank(r, 1000).iter().all(SimpleEjaRow::is_consistent));
    pr.holds("table-consistent", consistent, &[]);
    let four: Vec<usize> = simple_ejas_of_rank(4, 30).iter().map(|x| x.dim).collect();
    pr.holds("rank-four-dims", four == [10, 16, 28], &[]);
    let nine = simple_ejas_of_rank(9, 1000).iter().map(|x| x.dim).max();
    pr.holds("rank-nine-max", nine == Some(153), &[]);
    let albert = SimpleEjaRow { family: EjaFamily::Albert, rank: 3, dim: 27 };
    pr.holds("albert-no-square", !square_composite_exists(&albert), &[]);

    let report = is_locally_tomographic_self_composite(&ctx.desc);
    for (f, s) in ctx.desc.factors().iter().zip(&report.summands) {
        pr.holds("verdict-matches-oracle", s.verdict == complex_up_to_iso(*f), &[]);
    }
    pr.metric("verdict-matches-oracle/algebra-verdict", if report.verdict { 1.0 } else { 0.0 });
    Ok(())
}
