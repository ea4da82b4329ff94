//! Permutation groups, 3-transposition classes and Matsuo algebras.

mod catalog;
mod class;
mod perm;

pub use catalog::{catalog_load, catalog_names, load_group_json, GroupFile};
pub use class::{close_class, TranspositionClass, MAX_CLASS_SIZE};
pub use perm::Perm;

use crate::algebra::{Algebra, AxialAlgebra};
use crate::error::GroupError;
use crate::scalars::Field;

/// The Matsuo algebra of a 3-transposition class with parameter `eta`:
/// `a a = a`, `a b = 0` when `ab` has order 2, and
/// `a b = eta/2 (a + b - a^b)` when `ab` has order 3.
///
/// The basis follows the order of `class.class_d`; every basis vector is a
/// generating axis.
pub fn build_matsuo<F: Field>(
    class: &TranspositionClass,
    field: F,
    eta: F::Elem,
) -> Result<AxialAlgebra<F>, GroupError> {
    if field.characteristic() == 2 {
        return Err(GroupError::FieldCharTwo);
    }
    if field.is_zero(&eta) || field.is_one(&eta) {
        return Err(GroupError::InvalidEta(field.fmt_elem(&eta)));
    }
    let n = class.len();
    let half_eta = field.mul(&eta, &field.half());
    let mut table = vec![vec![vec![field.zero(); n]; n]; n];
    for i in 0..n {
        table[i][i][i] = field.one();
        for j in i + 1..n {
            let (a, b) = (&class.class_d[i], &class.class_d[j]);
            match a.then(b)?.order() {
                2 => {}
                3 => {
                    let c = a.conjugate_by(b)?;
                    let k = class
                        .index_of(&c)
                        .ok_or_else(|| GroupError::Format(format!("class not closed: {c}")))?;
                    let v = &mut table[i][j];
                    v[i] = half_eta.clone();
                    v[j] = half_eta.clone();
                    v[k] = field.neg(&half_eta);
                    table[j][i] = table[i][j].clone();
                }
                order => {
                    return Err(GroupError::OrderViolation {
                        d: a.images().to_vec(),
                        e: b.images().to_vec(),
                        order,
                    })
                }
            }
        }
    }
    let labels = class.class_d.iter().map(|p| p.to_string()).collect();
    let algebra = Algebra::new(field, table)
        .and_then(|a| a.with_labels(labels))
        .map_err(|e| GroupError::Format(e.to_string()))?;
    let axes = (0..n).map(|i| algebra.basis_vector(i)).collect();
    Ok(AxialAlgebra::new(algebra, axes, eta))
}
