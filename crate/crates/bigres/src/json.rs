//! JSON shapes for CLI output.  Shift lists are sorted lex ascending and
//! keep repeats, so round-tripping preserves the multisets.

use serde::{Deserialize, Serialize};

use bigres_core::corners::{Corner, CornerLedger};
use bigres_core::romer::RomerReport;
use bigres_core::{FatPointScheme, FreeResolution, Partition, ShiftMultiset};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeJson {
    pub rows: usize,
    pub cols: usize,
    pub mult: Vec<Vec<u8>>,
}

impl From<&FatPointScheme> for SchemeJson {
    fn from(z: &FatPointScheme) -> Self {
        SchemeJson { rows: z.rows(), cols: z.cols(), mult: z.grid().to_vec() }
    }
}

fn shift_list(s: &ShiftMultiset) -> Vec<[usize; 2]> {
    s.sorted().iter().map(|b| [b.x, b.y]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionJson {
    pub lambda: Vec<usize>,
    pub s0: Vec<[usize; 2]>,
    pub s1: Vec<[usize; 2]>,
    pub s2: Vec<[usize; 2]>,
}

impl ResolutionJson {
    pub fn new(lambda: &Partition, res: &FreeResolution) -> Self {
        ResolutionJson {
            lambda: lambda.parts().to_vec(),
            s0: shift_list(&res.s0),
            s1: shift_list(&res.s1),
            s2: shift_list(&res.s2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntryJson {
    pub corner: [usize; 2],
    pub u: usize,
    pub v: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerJson {
    pub lambda: Vec<usize>,
    pub entries: Vec<LedgerEntryJson>,
}

impl LedgerJson {
    pub fn new(lambda: &Partition, ledger: &CornerLedger) -> Self {
        LedgerJson {
            lambda: lambda.parts().to_vec(),
            entries: ledger
                .entries()
                .iter()
                .map(|e| LedgerEntryJson {
                    corner: [e.corner.i, e.corner.j],
                    u: e.u,
                    v: e.v,
                    a: e.a,
                    b: e.b,
                })
                .collect(),
        }
    }
}

fn corner_list(corners: &[Corner]) -> Vec<[usize; 2]> {
    corners.iter().map(|c| [c.i, c.j]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornersJson {
    pub lambda: Vec<usize>,
    pub base: Vec<[usize; 2]>,
    pub corners: Vec<[usize; 2]>,
    pub outside: Vec<[usize; 2]>,
}

impl CornersJson {
    pub fn new(lambda: &Partition) -> Self {
        CornersJson {
            lambda: lambda.parts().to_vec(),
            base: corner_list(&bigres_core::corners::base_corners(lambda)),
            corners: corner_list(&bigres_core::corners::corners(lambda)),
            outside: corner_list(&bigres_core::corners::outside_corners(lambda)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RomerJson {
    pub lambda: Vec<usize>,
    pub d: usize,
    pub beta: [usize; 3],
    pub max_shift: [Option<usize>; 3],
    pub bounds: Option<[f64; 3]>,
    pub cohen_macaulay: bool,
    pub pass: bool,
}

impl RomerJson {
    pub fn new(lambda: &Partition, rep: &RomerReport) -> Self {
        RomerJson {
            lambda: lambda.parts().to_vec(),
            d: rep.d,
            beta: [rep.beta.0, rep.beta.1, rep.beta.2],
            max_shift: [Some(rep.max_shift.0), Some(rep.max_shift.1), rep.max_shift.2],
            bounds: rep.bounds.map(|(a, b, c)| [a, b, c]),
            cohen_macaulay: rep.cohen_macaulay,
            pass: rep.pass,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bigres_core::corners::corner_ledger;
    use bigres_core::engine::resolve;
    use bigres_core::romer::romer_check;
    use bigres_core::scheme::double_points_of;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn resolution_round_trip() {
        let lam = pt(&[2, 1]);
        let j = ResolutionJson::new(&lam, &resolve(&lam));
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(serde_json::from_str::<ResolutionJson>(&text).unwrap(), j);
        // duplicates survive and order is lex ascending
        assert_eq!(j.s0, vec![[0, 4], [1, 3], [2, 2], [2, 2], [3, 1], [4, 0]]);
    }

    #[test]
    fn ledger_shape() {
        let lam = pt(&[6, 5, 3, 1, 1]);
        let j = LedgerJson::new(&lam, &corner_ledger(&lam));
        assert_eq!(j.entries.len(), 6);
        assert_eq!(j.entries[0].corner, [4, 6]);
        assert_eq!((j.entries[0].u, j.entries[0].v), (4, 6));
    }

    #[test]
    fn scheme_and_romer() {
        let lam = pt(&[2, 1]);
        let z = double_points_of(&lam);
        let s = SchemeJson::from(&z);
        assert_eq!(s.mult, vec![vec![2, 2], vec![2, 0]]);

        let r = RomerJson::new(&lam, &romer_check(&lam));
        assert!(r.pass);
        assert_eq!(r.bounds, Some([15.0, 24.0, 10.0]));
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"cohen_macaulay\":false"));
    }
}
