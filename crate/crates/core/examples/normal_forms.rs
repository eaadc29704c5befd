//! Left normal forms in both presentations.
use dihedral_artin::dual::dual_normal_form;
use dihedral_artin::garside::normal_form;
use dihedral_artin::words::{ArtinWord, DualWord, GroupParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = GroupParams::new(4)?;
    for text in ["abab", "abAB", "bbaaBA", "ababa"] {
        let w = ArtinWord::parse(text)?;
        let nf = normal_form(&w, params);
        let factors: Vec<String> = nf.factors().iter().map(|f| f.to_word().to_string()).collect();
        println!("{text:>8}  Δ^{} · [{}]  π = {:?}", nf.delta_exponent(), factors.join(" "), nf.pi());
    }
    for text in ["s1 s2", "s2 s1 S4", "s3 s3 s1"] {
        let w = DualWord::parse(text, params)?;
        let nf = dual_normal_form(&w, params);
        println!("{text:>8}  δ^{} · {}  π = {:?}", nf.delta_exponent(), nf.to_word(), nf.pi());
    }
    Ok(())
}
