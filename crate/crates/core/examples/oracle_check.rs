//! Checks the distance formulas against breadth-first search on a ball.
use dihedral_artin::oracle::{
    verify_distance_formula, verify_geodesic_criterion, verify_length_axioms, Artin, CayleyBall, Dual,
};
use dihedral_artin::words::GroupParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in 3..=5 {
        let params = GroupParams::new(k)?;
        let artin = CayleyBall::<Artin>::build(params, 6)?;
        let dual = CayleyBall::<Dual>::build(params, 4)?;
        println!("k={k} artin ball: {} elements, spheres {:?}", artin.len(), artin.sphere_sizes());
        println!("k={k} dual ball: {} elements, spheres {:?}", dual.len(), dual.sphere_sizes());
        for report in [
            verify_distance_formula(&artin),
            verify_geodesic_criterion(&artin),
            verify_length_axioms(&artin),
            verify_distance_formula(&dual),
            verify_geodesic_criterion(&dual),
        ] {
            println!("  {}", report.summary());
        }
    }
    Ok(())
}
