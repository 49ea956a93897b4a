//! Unseparated pairs in consistent homogeneous 3-ordering representations.

use std::collections::BTreeMap;

use sepdim::homogenize::{adversarial_instance, refute_homogeneous_rep, AdversarialConfig};

fn main() -> sepdim::Result<()> {
    let config = AdversarialConfig::default();
    let mut cases = BTreeMap::new();
    for s in 0..20 {
        let inst = adversarial_instance(s, &config)?;
        let found = refute_homogeneous_rep(&inst.graph, &inst.representation, &inst.certificate)?;
        println!("seed {s:>2}: {} unseparated pairs, found {}", inst.unseparated, found.witness);
        *cases.entry(format!("{:?}", found.case)).or_insert(0) += 1;
    }
    println!("{cases:?}");
    Ok(())
}
