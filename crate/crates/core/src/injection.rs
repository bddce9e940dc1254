//! Cutting points and the injection `T_{k+1} x T_{k-1} -> T_k x T_k`.
//!
//! Indices follow the 1-based convention of the sequences involved: a cutting
//! point `l` lies in `1..=k`, `a_j` is `first.top()[j - 1]` and so on.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::arrays::{count_arrays_dp, enumerate_arrays, validate_array, Bounds, TwoRowedArray};
use crate::error::{Error, Result};
use crate::ladder::LadderRegion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutPair {
    pub l: usize,
    pub m: usize,
}

impl CutPair {
    pub fn new(l: usize, m: usize) -> Self {
        CutPair { l, m }
    }

    pub fn distance(&self) -> usize {
        self.l.abs_diff(self.m)
    }

    /// The index interval on which the inequality families are checked:
    /// `[l+1, m]` if `l < m`, `[m+1, l]` if `m < l`, empty otherwise.
    pub fn interval(&self) -> (usize, usize) {
        use std::cmp::Ordering::*;
        match self.l.cmp(&self.m) {
            Less => (self.l + 1, self.m),
            Greater => (self.m + 1, self.l),
            Equal => (1, 0),
        }
    }
}

impl fmt::Display for CutPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l, self.m)
    }
}

/// `(T_1, T_2)` with `|T_1| = k + 1` and `|T_2| = k - 1`, both bounded by the
/// same bounds and in the same region.
#[derive(Clone, Debug)]
pub struct ArrayPair<'r> {
    first: TwoRowedArray,
    second: TwoRowedArray,
    bounds: Bounds,
    region: &'r LadderRegion,
}

impl<'r> ArrayPair<'r> {
    pub fn new(
        first: TwoRowedArray,
        second: TwoRowedArray,
        bounds: Bounds,
        region: &'r LadderRegion,
    ) -> Result<Self> {
        if first.len() < 2 || first.len() != second.len() + 2 {
            return Err(Error::Contract(format!(
                "pair lengths must be k+1 and k-1 with k >= 1, got {} and {}",
                first.len(),
                second.len()
            )));
        }
        for (name, t) in [("first", &first), ("second", &second)] {
            if !validate_array(t, &bounds, region) {
                return Err(Error::Contract(format!(
                    "{name} array {t} is not bounded by the bounds or leaves the region"
                )));
            }
        }
        Ok(ArrayPair {
            first,
            second,
            bounds,
            region,
        })
    }

    pub fn k(&self) -> usize {
        self.first.len() - 1
    }

    pub fn first(&self) -> &TwoRowedArray {
        &self.first
    }

    pub fn second(&self) -> &TwoRowedArray {
        &self.second
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn region(&self) -> &LadderRegion {
        self.region
    }

    fn a(&self, j: usize) -> i64 {
        self.first.top()[j - 1]
    }

    fn b(&self, j: usize) -> i64 {
        self.first.bottom()[j - 1]
    }

    fn x(&self, j: usize) -> Option<i64> {
        (j >= 1 && j < self.k()).then(|| self.second.top()[j - 1])
    }

    fn y(&self, j: usize) -> Option<i64> {
        (j >= 1 && j < self.k()).then(|| self.second.bottom()[j - 1])
    }
}

/// All `l` in `1..=k` with `a_l < x_l` and `x_{l-1} < a_{l+1}`, where an
/// inequality only counts when both sides are defined.
///
/// Panics unless `x_seq.len() + 2 == a_seq.len()`.
pub fn sequence_cutting_points(a_seq: &[i64], x_seq: &[i64]) -> Vec<usize> {
    assert_eq!(
        x_seq.len() + 2,
        a_seq.len(),
        "second sequence must be two shorter than the first"
    );
    let k = a_seq.len() - 1;
    (1..=k)
        .filter(|&l| {
            let left = l > k - 1 || a_seq[l - 1] < x_seq[l - 1];
            let right = l < 2 || x_seq[l - 2] < a_seq[l];
            left && right
        })
        .collect()
}

/// `(a_1..a_l, x_l..x_{k-1})` and `(x_1..x_{l-1}, a_{l+1}..a_{k+1})`.
pub fn cut_sequences(a_seq: &[i64], x_seq: &[i64], l: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    if x_seq.len() + 2 != a_seq.len() || !sequence_cutting_points(a_seq, x_seq).contains(&l) {
        return Err(Error::Contract(format!(
            "{l} is not a cutting point of {a_seq:?} and {x_seq:?}"
        )));
    }
    let mut upper = a_seq[..l].to_vec();
    upper.extend_from_slice(&x_seq[l - 1..]);
    let mut lower = x_seq[..l - 1].to_vec();
    lower.extend_from_slice(&a_seq[l..]);
    Ok((upper, lower))
}

/// Top cutting points times bottom cutting points, in lexicographic order.
pub fn pair_cutting_points(t: &ArrayPair) -> Vec<CutPair> {
    let tops = sequence_cutting_points(t.first.top(), t.second.top());
    let bottoms = sequence_cutting_points(t.first.bottom(), t.second.bottom());
    tops.iter()
        .flat_map(|&l| bottoms.iter().map(move |&m| CutPair::new(l, m)))
        .collect()
}

/// Cuts the top rows at `l` and the bottom rows at `m`.
pub fn apply_cut(t: &ArrayPair, c: CutPair) -> Result<(TwoRowedArray, TwoRowedArray)> {
    let (top1, top2) = cut_sequences(t.first.top(), t.second.top(), c.l)?;
    let (bot1, bot2) = cut_sequences(t.first.bottom(), t.second.bottom(), c.m)?;
    let build = |top, bottom| TwoRowedArray::new(top, bottom).map_err(Error::Internal);
    Ok((build(top1, bot1)?, build(top2, bot2)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Inequality {
    /// `upper(a_j) >= y_{j-1}`
    TopUpper,
    /// `lower(a_j) <= y_{j-1}`
    TopLower,
    /// `upper(x_{j-1}) >= b_j`
    BottomUpper,
    /// `lower(x_{j-1}) <= b_j`
    BottomLower,
}

impl Inequality {
    pub const ALL: [Inequality; 4] = [
        Inequality::TopUpper,
        Inequality::TopLower,
        Inequality::BottomUpper,
        Inequality::BottomLower,
    ];
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Inequality::TopUpper => "top-upper",
            Inequality::TopLower => "top-lower",
            Inequality::BottomUpper => "bottom-upper",
            Inequality::BottomLower => "bottom-lower",
        })
    }
}

/// Whether `which` holds for every `j` in `[c, d]`. Terms with an undefined
/// side are skipped.
pub fn inequality_holds(t: &ArrayPair, (c, d): (usize, usize), which: Inequality) -> bool {
    let region = t.region;
    let k = t.k();
    (c.max(1)..=d.min(k + 1)).all(|j| match which {
        Inequality::TopUpper | Inequality::TopLower => {
            let Some(y) = t.y(j - 1) else { return true };
            let col = t.a(j);
            match which {
                Inequality::TopUpper => region.upper_at(col).is_some_and(|u| u >= y),
                _ => region.lower_at(col).is_some_and(|l| l <= y),
            }
        }
        Inequality::BottomUpper | Inequality::BottomLower => {
            let Some(x) = t.x(j - 1) else { return true };
            let b = t.b(j);
            match which {
                Inequality::BottomUpper => region.upper_at(x).is_some_and(|u| u >= b),
                _ => region.lower_at(x).is_some_and(|l| l <= b),
            }
        }
    })
}

/// Both images of the cut lie in the region (bounds are inherited).
pub fn is_allowed(t: &ArrayPair, c: CutPair) -> bool {
    match apply_cut(t, c) {
        Ok((u, v)) => validate_array(&u, &t.bounds, t.region) && validate_array(&v, &t.bounds, t.region),
        Err(_) => false,
    }
}

pub fn allowed_cutting_points(t: &ArrayPair) -> Vec<CutPair> {
    pair_cutting_points(t)
        .into_iter()
        .filter(|&c| is_allowed(t, c))
        .collect()
}

/// The allowed cutting point with `|l - m|` minimal, ties broken by `(l, m)`
/// in lexicographic order with `l` first.
pub fn optimal_cutting_point(t: &ArrayPair) -> Result<CutPair> {
    allowed_cutting_points(t)
        .into_iter()
        .min_by_key(|c| (c.distance(), c.l, c.m))
        .ok_or_else(|| Error::NoAllowedCut(format!("{} and {}", t.first, t.second)))
}

pub fn inject(t: &ArrayPair) -> Result<(TwoRowedArray, TwoRowedArray)> {
    let c = optimal_cutting_point(t)?;
    apply_cut(t, c)
}

/// Something that breaks the injection on a concrete input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoAllowedCut {
        first: TwoRowedArray,
        second: TwoRowedArray,
    },
    ImageOutside {
        first: TwoRowedArray,
        second: TwoRowedArray,
        image: (TwoRowedArray, TwoRowedArray),
    },
    Collision {
        first: TwoRowedArray,
        second: TwoRowedArray,
        other_first: TwoRowedArray,
        other_second: TwoRowedArray,
        image: (TwoRowedArray, TwoRowedArray),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoAllowedCut { first, second } => {
                write!(f, "no allowed cutting point for ({first}, {second})")
            }
            Violation::ImageOutside {
                first,
                second,
                image,
            } => write!(
                f,
                "image ({}, {}) of ({first}, {second}) is not in T_k x T_k",
                image.0, image.1
            ),
            Violation::Collision {
                first,
                second,
                other_first,
                other_second,
                image,
            } => write!(
                f,
                "({first}, {second}) and ({other_first}, {other_second}) both map to ({}, {})",
                image.0, image.1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelReport {
    pub k: usize,
    /// `|T_{k+1}|`, `|T_{k-1}|` and `|T_k|`.
    pub longer: usize,
    pub shorter: usize,
    pub middle: usize,
    pub distinct_images: usize,
}

impl LevelReport {
    /// `|T_{k+1}| |T_{k-1}| <= |T_k|^2`.
    pub fn inequality_holds(&self) -> bool {
        (self.longer as u128) * (self.shorter as u128) <= (self.middle as u128).pow(2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectivityReport {
    pub levels: Vec<LevelReport>,
    pub violation: Option<Violation>,
}

impl InjectivityReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }
}

pub const DEFAULT_DOMAIN_CAP: u128 = 10_000_000;

/// Applies [`inject`] to all of `T_{k+1} x T_{k-1}` for `k` in `1..=k_max`
/// and checks that every image lies in `T_k x T_k` and no two inputs share
/// an image. Stops at the first violation.
pub fn verify_injectivity(
    region: &LadderRegion,
    bounds: &Bounds,
    k_max: usize,
    cap: u128,
) -> Result<InjectivityReport> {
    let counts = count_arrays_dp::<u128>(region, bounds);
    let count = |k: usize| counts.get(k).copied().unwrap_or(0);
    for k in 1..=k_max {
        let domain = count(k + 1) * count(k - 1);
        if domain > cap {
            return Err(Error::TooLarge(format!(
                "|T_{}| * |T_{}| = {domain} exceeds the cap {cap}",
                k + 1,
                k - 1
            )));
        }
    }
    let mut levels = Vec::new();
    for k in 1..=k_max {
        let longer = enumerate_arrays(region, bounds, k + 1);
        let shorter = enumerate_arrays(region, bounds, k - 1);
        let middle = count(k) as usize;
        let domain: Vec<(&TwoRowedArray, &TwoRowedArray)> = longer
            .iter()
            .flat_map(|f| shorter.iter().map(move |s| (f, s)))
            .collect();
        let images: Vec<std::result::Result<(TwoRowedArray, TwoRowedArray), Box<Violation>>> = domain
            .par_iter()
            .map(|&(f, s)| map_one(f, s, bounds, region, k))
            .collect();
        let mut seen: HashMap<&(TwoRowedArray, TwoRowedArray), usize> = HashMap::new();
        let mut violation = None;
        for (idx, image) in images.iter().enumerate() {
            match image {
                Err(v) => {
                    violation = Some((**v).clone());
                    break;
                }
                Ok(img) => {
                    if let Some(&prev) = seen.get(img) {
                        violation = Some(Violation::Collision {
                            first: domain[prev].0.clone(),
                            second: domain[prev].1.clone(),
                            other_first: domain[idx].0.clone(),
                            other_second: domain[idx].1.clone(),
                            image: img.clone(),
                        });
                        break;
                    }
                    seen.insert(img, idx);
                }
            }
        }
        levels.push(LevelReport {
            k,
            longer: longer.len(),
            shorter: shorter.len(),
            middle,
            distinct_images: seen.len(),
        });
        if violation.is_some() {
            return Ok(InjectivityReport { levels, violation });
        }
    }
    Ok(InjectivityReport {
        levels,
        violation: None,
    })
}

fn map_one(
    first: &TwoRowedArray,
    second: &TwoRowedArray,
    bounds: &Bounds,
    region: &LadderRegion,
    k: usize,
) -> std::result::Result<(TwoRowedArray, TwoRowedArray), Box<Violation>> {
    let pair = ArrayPair::new(first.clone(), second.clone(), *bounds, region)
        .expect("domain members are valid by construction");
    let image = inject(&pair).map_err(|_| {
        Box::new(Violation::NoAllowedCut {
            first: first.clone(),
            second: second.clone(),
        })
    })?;
    let inside = |t: &TwoRowedArray| t.len() == k && validate_array(t, bounds, region);
    if !inside(&image.0) || !inside(&image.1) {
        return Err(Box::new(Violation::ImageOutside {
            first: first.clone(),
            second: second.clone(),
            image,
        }));
    }
    Ok(image)
}

/// A failed instance of one of the interval statements about cutting points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalViolation {
    pub statement: String,
    pub interval: (usize, usize),
}

/// Checks the interval statements relating consecutive cutting points to the
/// inequality families:
///
/// * for consecutive top cutting points `l < l'` and the interval
///   `[l+1, l']` (and likewise for bottom cutting points), each of
///   top-upper or bottom-upper, top-lower or bottom-lower, top-upper or
///   top-lower, bottom-upper or bottom-lower holds on the whole interval;
/// * top-upper and bottom-lower hold on `[2, max(l_min, m_min)]`;
/// * top-lower and bottom-upper hold on `[min(l_max, m_max) + right_offset, k]`.
///
/// `right_offset` is 0 for the statement as usually quoted.
pub fn interval_statement_violations(t: &ArrayPair, right_offset: usize) -> Vec<IntervalViolation> {
    use Inequality::*;
    let tops = sequence_cutting_points(t.first.top(), t.second.top());
    let bottoms = sequence_cutting_points(t.first.bottom(), t.second.bottom());
    let holds = |iv, w| inequality_holds(t, iv, w);
    let mut out = Vec::new();
    let disjunctions = [
        (TopUpper, BottomUpper),
        (TopLower, BottomLower),
        (TopUpper, TopLower),
        (BottomUpper, BottomLower),
    ];
    for (label, cuts) in [("top", &tops), ("bottom", &bottoms)] {
        for w in cuts.windows(2) {
            let iv = (w[0] + 1, w[1]);
            for (p, q) in disjunctions {
                if !holds(iv, p) && !holds(iv, q) {
                    out.push(IntervalViolation {
                        statement: format!("{p} or {q} between consecutive {label} cutting points"),
                        interval: iv,
                    });
                }
            }
        }
    }
    let (l_min, l_max) = (tops[0], *tops.last().unwrap());
    let (m_min, m_max) = (bottoms[0], *bottoms.last().unwrap());
    let left = (2, l_min.max(m_min));
    for w in [TopUpper, BottomLower] {
        if !holds(left, w) {
            out.push(IntervalViolation {
                statement: format!("{w} up to the larger minimal cutting point"),
                interval: left,
            });
        }
    }
    let right = (l_max.min(m_max) + right_offset, t.k());
    for w in [TopLower, BottomUpper] {
        if !holds(right, w) {
            out.push(IntervalViolation {
                statement: format!("{w} from the smaller maximal cutting point"),
                interval: right,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::Point;
    use proptest::prelude::*;

    fn arr(top: &[i64], bottom: &[i64]) -> TwoRowedArray {
        TwoRowedArray::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    fn square(n: i64) -> (LadderRegion, Bounds) {
        (
            LadderRegion::rectangle(n, n),
            Bounds::new(Point::new(0, 0), Point::new(n, n)),
        )
    }

    #[test]
    fn sequence_cut_examples() {
        assert_eq!(sequence_cutting_points(&[0, 1], &[]), vec![1]);
        assert_eq!(sequence_cutting_points(&[1, 3, 5], &[2]), vec![1, 2]);
        assert_eq!(sequence_cutting_points(&[2, 3, 4], &[1]), vec![2]);
    }

    #[test]
    fn cut_sequence_examples() {
        assert_eq!(cut_sequences(&[0, 1], &[], 1).unwrap(), (vec![0], vec![1]));
        assert_eq!(
            cut_sequences(&[1, 3, 5], &[2], 1).unwrap(),
            (vec![1, 2], vec![3, 5])
        );
        assert_eq!(
            cut_sequences(&[1, 3, 5], &[2], 2).unwrap(),
            (vec![1, 3], vec![2, 5])
        );
        assert!(matches!(
            cut_sequences(&[2, 3, 4], &[1], 1),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn pair_examples() {
        let (r2, b2) = square(2);
        let t = ArrayPair::new(arr(&[0, 1], &[1, 2]), TwoRowedArray::empty(), b2, &r2).unwrap();
        assert_eq!(pair_cutting_points(&t), vec![CutPair::new(1, 1)]);
        assert_eq!(optimal_cutting_point(&t).unwrap(), CutPair::new(1, 1));
        assert_eq!(
            apply_cut(&t, CutPair::new(1, 1)).unwrap(),
            (arr(&[0], &[1]), arr(&[1], &[2]))
        );
        assert_eq!(inject(&t).unwrap(), (arr(&[0], &[1]), arr(&[1], &[2])));

        let (r3, b3) = square(3);
        let t = ArrayPair::new(arr(&[0, 1, 2], &[1, 2, 3]), arr(&[1], &[3]), b3, &r3).unwrap();
        assert_eq!(
            pair_cutting_points(&t),
            vec![CutPair::new(1, 1), CutPair::new(2, 1)]
        );
        assert_eq!(
            apply_cut(&t, CutPair::new(2, 1)).unwrap(),
            (arr(&[0, 1], &[1, 3]), arr(&[1, 2], &[2, 3]))
        );
        assert_eq!(optimal_cutting_point(&t).unwrap(), CutPair::new(1, 1));
        assert!(apply_cut(&t, CutPair::new(1, 2)).is_err());
    }

    #[test]
    fn pair_rejects_bad_lengths() {
        let (r, b) = square(3);
        assert!(ArrayPair::new(arr(&[0], &[1]), TwoRowedArray::empty(), b, &r).is_err());
        assert!(ArrayPair::new(arr(&[0, 1], &[1, 2]), arr(&[0], &[1]), b, &r).is_err());
    }

    #[test]
    fn selection_rule_prefers_distance_then_l() {
        let pick = |cuts: &[CutPair]| {
            cuts.iter()
                .copied()
                .min_by_key(|c| (c.distance(), c.l, c.m))
                .unwrap()
        };
        assert_eq!(
            pick(&[CutPair::new(1, 1), CutPair::new(2, 1)]),
            CutPair::new(1, 1)
        );
        assert_eq!(
            pick(&[CutPair::new(2, 1), CutPair::new(1, 2)]),
            CutPair::new(1, 2)
        );
    }

    #[test]
    fn small_square_injectivity() {
        let (r, b) = square(2);
        let report = verify_injectivity(&r, &b, 1, DEFAULT_DOMAIN_CAP).unwrap();
        assert!(report.is_ok());
        assert_eq!(report.levels[0].longer * report.levels[0].shorter, 1);
        assert_eq!(report.levels[0].middle.pow(2), 16);
        assert!(report.levels[0].inequality_holds());
    }

    #[test]
    fn empty_domain_is_vacuous() {
        let (r, b) = square(1);
        let report = verify_injectivity(&r, &b, 3, DEFAULT_DOMAIN_CAP).unwrap();
        assert!(report.is_ok());
        assert!(report.levels.iter().all(|l| l.longer == 0));
    }

    #[test]
    fn cap_refuses_large_domains() {
        let (r, b) = square(6);
        assert!(matches!(
            verify_injectivity(&r, &b, 3, 10),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn rectangle_allows_every_cut() {
        let (r, b) = square(5);
        for k in 1..4 {
            for f in enumerate_arrays(&r, &b, k + 1) {
                for s in enumerate_arrays(&r, &b, k - 1) {
                    let t = ArrayPair::new(f.clone(), s, b, &r).unwrap();
                    for c in pair_cutting_points(&t) {
                        assert!(is_allowed(&t, c));
                        let iv = c.interval();
                        assert!(Inequality::ALL.iter().all(|&w| inequality_holds(&t, iv, w)));
                    }
                }
            }
        }
    }

    fn strictly_increasing(max: i64, len: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::sample::subsequence((0..=max).collect::<Vec<_>>(), len)
    }

    proptest! {
        #[test]
        fn some_cutting_point_exists(
            (a, x) in (1usize..6).prop_flat_map(|k| (strictly_increasing(12, k + 1), strictly_increasing(12, k - 1)))
        ) {
            let cuts = sequence_cutting_points(&a, &x);
            prop_assert!(!cuts.is_empty());
            for l in cuts {
                let (u, v) = cut_sequences(&a, &x, l).unwrap();
                prop_assert_eq!(u.len(), a.len() - 1);
                prop_assert_eq!(v.len(), a.len() - 1);
                prop_assert!(u.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(v.windows(2).all(|w| w[0] < w[1]));
            }
        }

        #[test]
        fn diagonal_cuts_conserve_points(
            (tops, bottoms) in (1usize..5).prop_flat_map(|k| (
                (strictly_increasing(9, k + 1), strictly_increasing(9, k - 1)),
                (strictly_increasing(9, k + 1), strictly_increasing(9, k - 1)),
            ))
        ) {
            let region = LadderRegion::rectangle(10, 10);
            let bounds = Bounds::new(Point::new(0, -1), Point::new(10, 10));
            let first = TwoRowedArray::new(tops.0, bottoms.0).unwrap();
            let second = TwoRowedArray::new(tops.1, bottoms.1).unwrap();
            let t = ArrayPair::new(first.clone(), second.clone(), bounds, &region).unwrap();
            for c in pair_cutting_points(&t).into_iter().filter(|c| c.l == c.m) {
                prop_assert!(is_allowed(&t, c));
                let (u, v) = apply_cut(&t, c).unwrap();
                let mut before: Vec<Point> = first.points().chain(second.points()).collect();
                let mut after: Vec<Point> = u.points().chain(v.points()).collect();
                before.sort();
                after.sort();
                prop_assert_eq!(before, after);
            }
        }
    }
}
