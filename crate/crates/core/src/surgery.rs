//! Coatom and atom deletion.
//!
//! Deleting a coatom `c` keeps the order ideal generated by the other
//! coatoms and re-attaches the top. Atom deletion is the same construction
//! on the dual.

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::ElementSubset;

/// Elements kept by [`delete_coatom`]: the ideal generated by all coatoms
/// other than `c`, plus the top.
pub fn coatom_deletion_set(l: &Poset, c: usize) -> Result<ElementSubset> {
    l.check_id(c)?;
    let coatoms = l.coatoms();
    if l.rank() < 2 {
        return Err(Error::Precondition(format!(
            "coatom deletion needs rank >= 2, got {}",
            l.rank()
        )));
    }
    if !coatoms.contains(&c) {
        return Err(Error::Precondition(format!("element {c} is not a coatom")));
    }
    if coatoms.len() < 2 {
        return Err(Error::Precondition(
            "coatom deletion needs at least two coatoms".into(),
        ));
    }
    let mut keep = l.ideal_generated_by(coatoms.into_iter().filter(|&x| x != c));
    keep.insert(l.top());
    Ok(keep)
}

/// Elements kept by [`delete_atom`]: the bottom plus the dual ideal generated
/// by all atoms other than `a`.
pub fn atom_deletion_set(l: &Poset, a: usize) -> Result<ElementSubset> {
    l.check_id(a)?;
    let atoms = l.atoms();
    if l.rank() < 2 {
        return Err(Error::Precondition(format!(
            "atom deletion needs rank >= 2, got {}",
            l.rank()
        )));
    }
    if !atoms.contains(&a) {
        return Err(Error::Precondition(format!("element {a} is not an atom")));
    }
    if atoms.len() < 2 {
        return Err(Error::Precondition(
            "atom deletion needs at least two atoms".into(),
        ));
    }
    let mut keep = l.dual_ideal_generated_by(atoms.into_iter().filter(|&x| x != a));
    keep.insert(l.bottom());
    Ok(keep)
}

/// The lattice `J ∪ {1̂}` where `J` is generated by the coatoms other than
/// `c`. Ids are relabelled densely in ascending order of the original ids.
pub fn delete_coatom(l: &Poset, c: usize) -> Result<Poset> {
    let keep = coatom_deletion_set(l, c)?;
    l.induced(&keep, format!("{}-c{c}", l.name()))
}

/// `dual(delete_coatom(dual(l), a))`, built directly.
pub fn delete_atom(l: &Poset, a: usize) -> Result<Poset> {
    let keep = atom_deletion_set(l, a)?;
    l.induced(&keep, format!("{}-a{a}", l.name()))
}
