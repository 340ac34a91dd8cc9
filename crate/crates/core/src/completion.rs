//! The completion `Y` of a double point scheme: simple points fill the
//! Ferrers support out to the full `r x lambda_1` grid, which makes the
//! scheme ACM with a resolution read off directly from `lambda`.

use crate::resolution::{Bidegree, FreeResolution, ShiftMultiset};
use crate::scheme::FatPointScheme;
use crate::Partition;

/// The completion grid: `mult[i][j] = 2` on the Ferrers region, 1 outside.
pub fn completion_scheme(lambda: &Partition) -> FatPointScheme {
    let cols = lambda.width();
    let mult = lambda
        .parts()
        .iter()
        .map(|&p| (1..=cols).map(|j| if j <= p { 2 } else { 1 }).collect())
        .collect();
    FatPointScheme::new(mult).expect("a partition yields a valid completion")
}

/// `alpha_Y = (lambda_1 + lambda_1, ..., lambda_1 + lambda_r, lambda_1, ..., lambda_r)`
/// sorted non-increasing.
pub fn completion_alpha(lambda: &Partition) -> Partition {
    let w = lambda.width();
    let values = lambda
        .parts()
        .iter()
        .map(|&p| w + p)
        .chain(lambda.parts().iter().copied())
        .collect();
    Partition::from_sorted(values)
}

/// Resolution of the completion, directly from `lambda`:
///
/// `s0 = {(2r,0), (r,l1), (0,2*l1)} u {(i-1, l1+l_i), (i+r-1, l_i) | descent i}`
/// `s1 = {(2r,l_r), (r, l1+l_r)} u {(i-1, l1+l_{i-1}), (i+r-1, l_{i-1}) | descent i}`
pub fn completion_resolution(lambda: &Partition) -> FreeResolution {
    let r = lambda.num_parts();
    let w = lambda.width();
    let mut s0 = ShiftMultiset::new();
    let mut s1 = ShiftMultiset::new();
    s0.push(Bidegree::new(2 * r, 0));
    s0.push(Bidegree::new(r, w));
    s0.push(Bidegree::new(0, 2 * w));
    s1.push(Bidegree::new(2 * r, lambda.last()));
    s1.push(Bidegree::new(r, w + lambda.last()));
    for i in lambda.descents() {
        s0.push(Bidegree::new(i - 1, w + lambda.part(i)));
        s0.push(Bidegree::new(i + r - 1, lambda.part(i)));
        s1.push(Bidegree::new(i - 1, w + lambda.part(i - 1)));
        s1.push(Bidegree::new(i + r - 1, lambda.part(i - 1)));
    }
    FreeResolution { s0, s1, s2: ShiftMultiset::new() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{acm_resolution, alpha_beta_of};
    use proptest::prelude::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn shifts(pairs: &[(usize, usize)]) -> ShiftMultiset {
        pairs.iter().copied().collect()
    }

    #[test]
    fn completion_grid() {
        let y = completion_scheme(&pt(&[6, 5, 3, 1, 1]));
        assert_eq!((y.rows(), y.cols()), (5, 6));
        assert_eq!(y.multiplicity(2, 5), 2);
        assert_eq!(y.multiplicity(2, 6), 1);
        assert_eq!(y.multiplicity(5, 1), 2);
        assert_eq!(y.multiplicity(5, 2), 1);

        // constant partition: nothing is added
        let lam = pt(&[3, 3]);
        assert_eq!(completion_scheme(&lam), crate::scheme::double_points_of(&lam));
        let lam = pt(&[1]);
        assert_eq!(completion_scheme(&lam), crate::scheme::double_points_of(&lam));
    }

    #[test]
    fn completion_alpha_examples() {
        assert_eq!(
            completion_alpha(&pt(&[6, 5, 3, 1, 1])),
            pt(&[12, 11, 9, 7, 7, 6, 5, 3, 1, 1])
        );
        assert_eq!(completion_alpha(&pt(&[1])), pt(&[2, 1]));
        assert_eq!(completion_alpha(&pt(&[2, 2])), pt(&[4, 4, 2, 2]));
    }

    #[test]
    fn completion_resolution_examples() {
        let res = completion_resolution(&pt(&[6, 5, 3, 1, 1]));
        assert_eq!(
            res.s0,
            shifts(&[
                (10, 0),
                (8, 1),
                (7, 3),
                (6, 5),
                (5, 6),
                (3, 7),
                (2, 9),
                (1, 11),
                (0, 12)
            ])
        );
        assert_eq!(
            res.s1,
            shifts(&[(10, 1), (8, 3), (7, 5), (6, 6), (5, 7), (3, 9), (2, 11), (1, 12)])
        );

        let res = completion_resolution(&pt(&[2, 1]));
        assert_eq!(res.s0, shifts(&[(4, 0), (2, 2), (0, 4), (1, 3), (3, 1)]));
        assert_eq!(res.s1, shifts(&[(4, 1), (2, 3), (1, 4), (3, 2)]));

        let res = completion_resolution(&pt(&[4, 4, 4]));
        assert_eq!(res.s0, shifts(&[(6, 0), (3, 4), (0, 8)]));
        assert_eq!(res.s1, shifts(&[(6, 4), (3, 8)]));
    }

    fn arb_partition(max_rows: usize, max_width: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1..=max_width, 1..=max_rows).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        // Two independent routes to the same resolution must agree.
        #[test]
        fn agrees_with_acm_route(p in arb_partition(8, 8)) {
            prop_assert_eq!(
                completion_resolution(&p),
                acm_resolution(&completion_alpha(&p))
            );
        }

        #[test]
        fn beta_of_completion_from_conjugate(p in arb_partition(8, 8)) {
            let ab = alpha_beta_of(&completion_scheme(&p));
            prop_assert_eq!(ab.beta, completion_alpha(&p.conjugate()));
        }

        #[test]
        fn module_counts_track_descents(p in arb_partition(8, 8)) {
            let res = completion_resolution(&p);
            let d = p.descent_count();
            prop_assert_eq!(res.s0.len(), 2 * d + 3);
            prop_assert_eq!(res.s1.len(), 2 * d + 2);
        }
    }
}
