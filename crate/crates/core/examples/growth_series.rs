//! Geodesic growth: rational series, enumeration and the acceptor.
use dihedral_artin::growth::{
    build_acceptor, closed_form_growth, count_geodesics_enumeration, count_via_acceptor, inclusion_exclusion,
};
use dihedral_artin::words::GroupParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in 3..=5 {
        let params = GroupParams::new(k)?;
        let series = closed_form_growth(params);
        println!("k={k}: {series}");
        println!("  matches inclusion-exclusion: {}", series.same_function(&inclusion_exclusion(params)));
        let acceptor = build_acceptor(params);
        println!("  acceptor states: {}", acceptor.num_states());
        let coeffs = series.expand(8)?;
        for (n, c) in coeffs.iter().enumerate().take(7) {
            println!(
                "  n={n}: series={c} enumeration={} acceptor={}",
                count_geodesics_enumeration(params, n),
                count_via_acceptor(&acceptor, n)
            );
        }
    }
    Ok(())
}
