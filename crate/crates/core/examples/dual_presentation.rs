//! The dual presentation: normal forms, geodesics and horofunctions.
use dihedral_artin::dual::{dual_normal_form, dual_to_artin, is_geodesic_dual};
use dihedral_artin::dual_horo::{dual_detour, dual_psi, DualOmegaPoint, DualZWord};
use dihedral_artin::extended::parse_coordinates;
use dihedral_artin::words::{DualWord, GroupParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GroupParams::new(5)?;
    let w = DualWord::parse("s1 s3 S2 s5 s5", params)?;
    let nf = dual_normal_form(&w, params);
    println!("w = {w}");
    println!("normal form {} (distance {})", nf.to_word(), nf.distance());
    println!("geodesic: {}", is_geodesic_dual(&w, params));
    println!("as Artin word: {}", dual_to_artin(&w));

    let z = DualZWord::parse("s2 (s1 s3)", true, params)?;
    let point = DualOmegaPoint::new(parse_coordinates("-inf,3")?, z)?;
    println!("{point}: ψ(w) = {}", dual_psi(&point, &w)?);
    for n in [5, 10, 20] {
        println!("  detour at n={n}: {}", dual_detour(&point, n)?);
    }
    Ok(())
}
