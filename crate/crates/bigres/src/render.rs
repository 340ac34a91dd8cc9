//! Plain-text rendering for the CLI.

use std::fmt::Write as _;

use bigres_core::corners::{corners, outside_corners, Corner, CornerLedger, DegreeMatrix};
use bigres_core::romer::RomerReport;
use bigres_core::{FreeResolution, Partition, ShiftMultiset};

use crate::oracle::VerificationReport;

/// The degree matrix of `Y` with corners marked: `*` after an entry marks a
/// corner of `M_lambda`, `o` an outside corner.
pub fn degree_matrix(lambda: &Partition, m: &DegreeMatrix) -> String {
    let cs = corners(lambda);
    let oc = outside_corners(lambda);
    let mark = |i: usize, j: usize| {
        let c = Corner::new(i, j);
        if cs.contains(&c) {
            '*'
        } else if oc.contains(&c) {
            'o'
        } else {
            ' '
        }
    };
    let mut out = String::new();
    for i in 1..=m.rows() {
        for j in 1..=m.cols() {
            let _ = write!(out, "{}{} ", m.get(i, j), mark(i, j));
        }
        out.pop();
        out.push('\n');
    }
    out
}

pub fn ledger(ledger: &CornerLedger) -> String {
    let mut out = String::from("corner    u   v   a   b\n");
    for e in ledger.entries() {
        let _ = writeln!(
            out,
            "({},{})   {:3} {:3} {:3} {:3}",
            e.corner.i, e.corner.j, e.u, e.v, e.a, e.b
        );
    }
    out
}

fn shift_line(s: &ShiftMultiset) -> String {
    s.sorted().iter().map(|b| format!("({},{})", b.x, b.y)).collect::<Vec<_>>().join(" ")
}

/// The three shift lists plus a total-degree Betti table.
pub fn resolution(res: &FreeResolution) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "S0: {}", shift_line(&res.s0));
    let _ = writeln!(out, "S1: {}", shift_line(&res.s1));
    if res.s2.is_empty() {
        let _ = writeln!(out, "S2: (empty)");
    } else {
        let _ = writeln!(out, "S2: {}", shift_line(&res.s2));
    }
    let (b1, b2, b3) = res.betti();
    let _ = writeln!(out, "total Betti numbers: {b1} {b2} {b3}");

    // total-degree distribution per homological position
    let mut rows: Vec<(usize, [usize; 3])> = Vec::new();
    for (k, s) in [&res.s0, &res.s1, &res.s2].into_iter().enumerate() {
        for b in s.iter() {
            let t = b.total();
            match rows.iter_mut().find(|(tt, _)| *tt == t) {
                Some((_, counts)) => counts[k] += 1,
                None => {
                    let mut counts = [0; 3];
                    counts[k] = 1;
                    rows.push((t, counts));
                }
            }
        }
    }
    rows.sort_unstable();
    let _ = writeln!(out, "degree  b1  b2  b3");
    for (t, counts) in rows {
        let _ = writeln!(out, "{:6} {:3} {:3} {:3}", t, counts[0], counts[1], counts[2]);
    }
    out
}

pub fn verification(rep: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "lambda {:?}, p = {}, seed = {}, box ({}, {}), {}: {}",
        rep.lambda,
        rep.prime,
        rep.seed,
        rep.bbox.0,
        rep.bbox.1,
        if rep.deep { "deep" } else { "shallow" },
        if rep.pass { "PASS" } else { "FAIL" }
    );
    for m in &rep.mismatches {
        let _ = writeln!(
            out,
            "  {:?} at ({}, {}): oracle {} vs resolution {}",
            m.kind, m.bidegree.0, m.bidegree.1, m.oracle, m.resolution
        );
    }
    out
}

pub fn romer(rep: &RomerReport) -> String {
    let mut out = String::new();
    if rep.cohen_macaulay {
        let _ = writeln!(
            out,
            "d = 0 (Cohen-Macaulay): beta = {:?}, bound known to hold",
            rep.beta
        );
        return out;
    }
    let (m1, m2, m3) = (rep.max_shift.0, rep.max_shift.1, rep.max_shift.2.unwrap());
    let (r1, r2, r3) = rep.bounds.unwrap();
    let _ = writeln!(out, "d = {}, M = ({m1}, {m2}, {m3})", rep.d);
    let _ = writeln!(out, "beta_1 = {:3} <= M2*M3/2 = {r1}", rep.beta.0);
    let _ = writeln!(out, "beta_2 = {:3} <= M1*M3   = {r2}", rep.beta.1);
    let _ = writeln!(out, "beta_3 = {:3} <= M1*M2/2 = {r3}", rep.beta.2);
    let _ = writeln!(out, "{}", if rep.pass { "PASS" } else { "FAIL" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bigres_core::corners::{corner_ledger, degree_matrix_y};
    use bigres_core::engine::resolve;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn matrix_marks_corners() {
        let lam = pt(&[2, 1]);
        let text = degree_matrix(&lam, &degree_matrix_y(&lam));
        assert_eq!(text, "2  2  1o\n2  1* 1o\n1o 1o 1o\n");
    }

    #[test]
    fn ledger_lists_all_corners() {
        let text = ledger(&corner_ledger(&pt(&[6, 5, 3, 1, 1])));
        assert_eq!(text.lines().count(), 7);
        assert!(text.contains("(4,6)"));
    }

    #[test]
    fn resolution_text_has_betti_line() {
        let text = resolution(&resolve(&pt(&[2, 1])));
        assert!(text.contains("total Betti numbers: 6 6 1"));
        assert!(text.starts_with("S0: (0,4) (1,3) (2,2) (2,2) (3,1) (4,0)\n"));
    }
}
