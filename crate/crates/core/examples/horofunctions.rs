//! Horofunctions at interior, boundary and pole points.
use dihedral_artin::extended::parse_coordinates;
use dihedral_artin::garside::normal_form;
use dihedral_artin::horo::{psi, OmegaPoint, ZWord};
use dihedral_artin::words::{ArtinWord, GroupParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GroupParams::new(3)?;
    let x = normal_form(&ArtinWord::parse("abbaB")?, params);
    let interior = OmegaPoint::from_element(&x);
    let z = ZWord::parse("(abbaa)", true, params)?;
    let boundary = OmegaPoint::new(parse_coordinates("-inf,0,inf")?, z)?;
    let points = [interior, boundary, OmegaPoint::plus(params), OmegaPoint::minus(params)];
    for text in ["", "a", "ab", "BA", "abab"] {
        let w = ArtinWord::parse(text)?;
        let values: Vec<String> = points.iter().map(|p| psi(p, &w).map(|v| v.to_string())).collect::<Result<_, _>>()?;
        let label = if text.is_empty() { "e" } else { text };
        println!("{label:>5}: {}", values.join("  "));
    }
    for p in &points {
        println!("{p}: {} / {}", p.membership(), p.class());
    }
    Ok(())
}
