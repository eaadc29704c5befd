//! Geodesic recognition and shortest representatives.
use dihedral_artin::garside::{is_geodesic_artin, negg, normal_form, poss};
use dihedral_artin::words::{ArtinWord, GroupParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GroupParams::new(3)?;
    for text in ["abab", "abAB", "aBa", "abaBAB", "aaaBBB"] {
        let w = ArtinWord::parse(text)?;
        let nf = normal_form(&w, params);
        println!(
            "{text:>7}: poss={} negg={} geodesic={} shortest={}",
            poss(&w, params),
            negg(&w, params),
            is_geodesic_artin(&w, params),
            nf.geodesic_representative()
        );
    }
    Ok(())
}
