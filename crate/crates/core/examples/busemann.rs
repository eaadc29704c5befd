//! Busemann points and the detour cost along approach sequences.
use dihedral_artin::extended::parse_coordinates;
use dihedral_artin::horo::{approach_element, detour_upper, is_busemann, OmegaPoint, ZWord};
use dihedral_artin::words::GroupParams;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GroupParams::new(3)?;
    let z = ZWord::parse("(abbaa)", true, params)?;
    for coords in ["-inf,0,inf", "-inf,-inf,inf", "-inf,inf,inf"] {
        let point = OmegaPoint::new(parse_coordinates(coords)?, z.clone())?;
        println!("p=({coords}) busemann={}", is_busemann(&point));
        for n in [2, 4, 8] {
            println!("  n={n} x_n={} detour={}", approach_element(&point, n)?, detour_upper(&point, n)?);
        }
    }
    Ok(())
}
