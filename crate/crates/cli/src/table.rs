//! Constants `c` in `log T(τ(m)) = c·m·dim τ(m) + lower order` for the
//! weights `(1,…,1)` on `so(p,q)` and the two fundamental weights of `sl3`.

use torsionlab_core::exactalg::{int, Rational};
use torsionlab_core::rootsys::{dominant_weight, GroupSpec};
use torsionlab_core::torsion::{l2_torsion, leading_constant};

use crate::error::CliError;
use crate::serial::{Prefactor, Rat, TableRow};

/// Largest `p` listed for `so(p,q)`.
pub const MAX_P: u32 = 9;

fn row(group: GroupSpec, weight: Vec<i64>) -> Result<TableRow, CliError> {
    let coords: Vec<Rational> = weight.iter().map(|&k| int(k)).collect();
    let w = dominant_weight(group, &coords)?;
    let prefactor = l2_torsion(group, &w)?.prefactor;
    let lc = leading_constant(group, &w)?;
    Ok(TableRow {
        group: group.to_string(),
        weight,
        prefactor: Prefactor::from(&prefactor),
        asymptotic_constant: Prefactor::from(&prefactor.scale(&lc.constant)),
        leading_constant: Rat(lc.constant),
    })
}

pub fn corollary_constants() -> Result<Vec<TableRow>, CliError> {
    let mut rows = Vec::new();
    for p in (3..=MAX_P).step_by(2) {
        for q in (1..=p).step_by(2) {
            let g = GroupSpec::so(p, q)?;
            rows.push(row(g, vec![1; g.rank()])?);
        }
    }
    rows.push(row(GroupSpec::Sl3, vec![1, 0])?);
    rows.push(row(GroupSpec::Sl3, vec![0, 1])?);
    Ok(rows)
}
