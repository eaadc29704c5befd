//! Word-metric distances from normal forms.
use dihedral_artin::dual::{artin_to_dual, dual_distance};
use dihedral_artin::garside::{artin_distance, distance_between};
use dihedral_artin::words::{ArtinWord, GroupParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in 3..=6 {
        let params = GroupParams::new(k)?;
        let w = ArtinWord::parse("abababAbAB")?;
        let dual = artin_to_dual(&w);
        println!(
            "k={k}: |w|_artin = {}, |w|_dual = {}",
            artin_distance(&w, params),
            dual_distance(&dual, params)
        );
    }
    let params = GroupParams::new(3)?;
    let x = ArtinWord::parse("aab")?;
    let y = ArtinWord::parse("BAb")?;
    println!("d(aab, BAb) = {}", distance_between(&x, &y, params));
    Ok(())
}
