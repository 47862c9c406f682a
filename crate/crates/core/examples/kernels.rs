//! Kernel certificates for the catalog morphisms. Each degree level compares the dimension of the
//! source slice with the ideal generated by the candidates plus the image.

use zhuind::catalog;
use zhuind::morphism::KernelStatus;

fn main() -> zhuind::Result<()> {
    let c = catalog::get();
    for id in catalog::FINITE_TARGET_MORPHISMS {
        let m = c.morphism(id)?;
        let ker = c.kernel(id)?;
        if m.source.is_finite() {
            println!("{id}: finite source, kernel dimension {}", m.kernel_basis_finite()?.len());
            continue;
        }
        let cert = m.certify_kernel(&ker, catalog::kernel_probe(id))?;
        let gens: Vec<_> = ker.iter().map(|k| m.source.render(k)).collect();
        println!("{id}: {:?} to degree {} with {} candidate(s)", cert.status, cert.probe_degree, gens.len());
        let last = cert.checks.last().expect("at least one level");
        println!("  top level: source {} = ideal {} + image {}", last.source_dim, last.ideal_dim, last.image_dim);
        assert_eq!(cert.status, KernelStatus::Exact);
    }

    // dropping a candidate leaves a gap
    let m = c.morphism("vir_to_va1")?;
    let cert = m.certify_kernel(&[], 6)?;
    let gap = cert.checks.iter().find(|d| !d.exact()).map(|d| d.degree);
    println!("vir_to_va1 with no candidates: {:?}, first gap at degree {gap:?}", cert.status);

    // a candidate that does not map to zero is reported
    let bogus = [m.source.parse("y y")?];
    println!("vir_to_va1 with y y: {:?}", m.certify_kernel(&bogus, 4)?.status);
    Ok(())
}
