//! The mapping cone sweep: starting from the resolution of the completion,
//! each corner contributes one generator shift `(u, v)`, two first-syzygy
//! shifts `(u+a, v)` and `(u, v+b)`, and one second-syzygy shift
//! `(u+a, v+b)`.

use alloc::vec::Vec;

use crate::completion::completion_resolution;
use crate::corners::{corner_ledger, CornerLedger, LedgerEntry};
use crate::resolution::{Bidegree, FreeResolution};
use crate::{Error, Partition, Result};

fn fold_step(res: &mut FreeResolution, e: &LedgerEntry) {
    res.s0.push(Bidegree::new(e.u, e.v));
    res.s1.push(Bidegree::new(e.u + e.a, e.v));
    res.s1.push(Bidegree::new(e.u, e.v + e.b));
    res.s2.push(Bidegree::new(e.u + e.a, e.v + e.b));
}

/// Shifts of the bigraded minimal free resolution of the ideal of double
/// points with support `lambda`, obtained from a precomputed ledger.
pub fn resolve_with_ledger(lambda: &Partition, ledger: &CornerLedger) -> FreeResolution {
    let mut res = completion_resolution(lambda);
    for e in ledger.entries() {
        fold_step(&mut res, e);
    }
    res
}

/// Shifts of the bigraded minimal free resolution of the ideal of double
/// points with support `lambda`.
pub fn resolve(lambda: &Partition) -> FreeResolution {
    resolve_with_ledger(lambda, &corner_ledger(lambda))
}

/// Resolutions of every intermediate ideal: element 0 resolves the
/// completion, element `l` the ideal after folding in the `l` largest
/// corners, and the last element equals [`resolve`].
pub fn resolve_steps(lambda: &Partition) -> Vec<FreeResolution> {
    let ledger = corner_ledger(lambda);
    let mut out = Vec::with_capacity(ledger.len() + 1);
    let mut res = completion_resolution(lambda);
    out.push(res.clone());
    for e in ledger.entries() {
        fold_step(&mut res, e);
        out.push(res.clone());
    }
    out
}

/// The complete intersection type of the colon ideal at step `l` (1-based):
/// `(I_{l-1} : F_l)` is the ideal of a `CI(a, b)` grid of reduced points.
pub fn colon_ci_type(lambda: &Partition, step: usize) -> Result<(usize, usize)> {
    let ledger = corner_ledger(lambda);
    if step == 0 || step > ledger.len() {
        return Err(Error::StepOutOfRange { step, corners: ledger.len() });
    }
    let e = &ledger.entries()[step - 1];
    Ok((e.a, e.b))
}
