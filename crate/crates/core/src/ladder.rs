//! Ladder regions, cogenerators and the derived per-path data.
//!
//! Coordinates: `x` is the column (growing to the right, `0..=a`), `y` the
//! row (growing upwards, `0..=b`). Matrix cell `(i, j)` of a
//! `(b+1) x (a+1)` matrix corresponds to the lattice point `(j, b - i)`.
//!
//! A [`LadderRegion`] is stored as a contiguous column range together with
//! weakly increasing lower and upper boundary functions. Columns at either end
//! of the range are always non-empty. Columns strictly inside the range may be
//! empty; they are stored as inverted intervals (`lower > upper`) chosen so
//! that both boundary functions stay weakly increasing.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LadderRegion {
    a: i64,
    b: i64,
    x_lo: i64,
    lower: Vec<i64>,
    upper: Vec<i64>,
}

impl LadderRegion {
    /// Validates boundary lists covering every column `0..=a`.
    pub fn new(a: i64, b: i64, lower: Vec<i64>, upper: Vec<i64>) -> Result<Self> {
        if a < 0 || b < 0 {
            return Err(Error::InvalidRegion(format!(
                "dimensions must be non-negative, got a={a}, b={b}"
            )));
        }
        if lower.len() as i64 != a + 1 || upper.len() as i64 != a + 1 {
            return Err(Error::InvalidRegion(format!(
                "expected {} boundary values per side, got lower={} upper={}",
                a + 1,
                lower.len(),
                upper.len()
            )));
        }
        Self::with_columns(a, b, 0, lower, upper)
    }

    /// Validates boundary lists covering the columns `x_lo..x_lo+len`.
    /// Every listed column must be non-empty.
    pub fn with_columns(
        a: i64,
        b: i64,
        x_lo: i64,
        lower: Vec<i64>,
        upper: Vec<i64>,
    ) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::InvalidRegion(format!(
                "lower has {} entries but upper has {}",
                lower.len(),
                upper.len()
            )));
        }
        if !lower.is_empty() && (x_lo < 0 || x_lo + lower.len() as i64 - 1 > a) {
            return Err(Error::InvalidRegion(format!(
                "column range {}..={} leaves 0..={a}",
                x_lo,
                x_lo + lower.len() as i64 - 1
            )));
        }
        for (off, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            let x = x_lo + off as i64;
            if lo < 0 || lo > b {
                return Err(Error::InvalidRegion(format!(
                    "lower value {lo} out of range 0..={b} at column {x}"
                )));
            }
            if hi < 0 || hi > b {
                return Err(Error::InvalidRegion(format!(
                    "upper value {hi} out of range 0..={b} at column {x}"
                )));
            }
            if lo > hi {
                return Err(Error::InvalidRegion(format!(
                    "lower {lo} exceeds upper {hi} at column {x}"
                )));
            }
            if off > 0 {
                if lo < lower[off - 1] {
                    return Err(Error::InvalidRegion(format!(
                        "lower not weakly increasing at column {x}"
                    )));
                }
                if hi < upper[off - 1] {
                    return Err(Error::InvalidRegion(format!(
                        "upper not weakly increasing at column {x}"
                    )));
                }
            }
        }
        Ok(LadderRegion {
            a,
            b,
            x_lo,
            lower,
            upper,
        })
    }

    pub fn empty(a: i64, b: i64) -> Self {
        LadderRegion {
            a,
            b,
            x_lo: 0,
            lower: Vec::new(),
            upper: Vec::new(),
        }
    }

    /// The full rectangle `[0, a] x [0, b]`.
    pub fn rectangle(a: i64, b: i64) -> Self {
        let w = (a + 1) as usize;
        LadderRegion {
            a,
            b,
            x_lo: 0,
            lower: vec![0; w],
            upper: vec![b; w],
        }
    }

    /// Builds a region from raw boundary functions that may have empty
    /// columns anywhere. Empty end columns are dropped. The caller guarantees
    /// monotonicity; it is re-checked here.
    fn from_raw(a: i64, b: i64, x_lo: i64, mut lower: Vec<i64>, mut upper: Vec<i64>) -> Self {
        debug_assert_eq!(lower.len(), upper.len());
        let nonempty = |i: usize, lo: &[i64], hi: &[i64]| lo[i] <= hi[i];
        let first = (0..lower.len()).find(|&i| nonempty(i, &lower, &upper));
        let Some(first) = first else {
            return Self::empty(a, b);
        };
        let last = (0..lower.len())
            .rev()
            .find(|&i| nonempty(i, &lower, &upper))
            .unwrap();
        lower.truncate(last + 1);
        upper.truncate(last + 1);
        lower.drain(..first);
        upper.drain(..first);
        let region = LadderRegion {
            a,
            b,
            x_lo: x_lo + first as i64,
            lower,
            upper,
        };
        debug_assert!(region.boundaries_monotone());
        region
    }

    fn boundaries_monotone(&self) -> bool {
        self.lower.windows(2).all(|w| w[0] <= w[1]) && self.upper.windows(2).all(|w| w[0] <= w[1])
    }

    /// Builds the region with exactly the given points, checking the ladder
    /// condition: whenever `(i, j)` and `(i', j')` are in the set with
    /// `i <= i'` and `j >= j'`, the whole rectangle between them is too.
    pub fn from_points<I>(a: i64, b: i64, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = Point>,
    {
        let set: BTreeSet<Point> = points.into_iter().collect();
        for p in &set {
            if p.x < 0 || p.x > a || p.y < 0 || p.y > b {
                return Err(Error::InvalidRegion(format!(
                    "point {p} outside the box [0,{a}]x[0,{b}]"
                )));
            }
        }
        // Rectangle condition, pairwise. The sets in play are small.
        let pts: Vec<Point> = set.iter().copied().collect();
        for (idx, p) in pts.iter().enumerate() {
            for q in &pts[idx..] {
                if p.x <= q.x && p.y >= q.y {
                    for r in p.x..=q.x {
                        for s in q.y..=p.y {
                            let m = Point::new(r, s);
                            if !set.contains(&m) {
                                return Err(Error::NotALadder {
                                    first: *p,
                                    second: *q,
                                    missing: m,
                                });
                            }
                        }
                    }
                }
            }
        }
        if set.is_empty() {
            return Ok(Self::empty(a, b));
        }
        let x_lo = pts.first().unwrap().x;
        let x_hi = pts.last().unwrap().x;
        let width = (x_hi - x_lo + 1) as usize;
        let mut col: Vec<Option<(i64, i64)>> = vec![None; width];
        for p in &pts {
            let slot = &mut col[(p.x - x_lo) as usize];
            *slot = Some(match *slot {
                None => (p.y, p.y),
                Some((lo, hi)) => (lo.min(p.y), hi.max(p.y)),
            });
        }
        // Empty interior columns: lower from the next non-empty column, upper
        // from the previous one. The ladder condition forces these to be
        // inverted.
        let mut lower = vec![0; width];
        let mut upper = vec![0; width];
        let mut next_lower = None;
        for i in (0..width).rev() {
            if let Some((lo, _)) = col[i] {
                next_lower = Some(lo);
            }
            lower[i] = col[i].map(|c| c.0).or(next_lower).unwrap();
        }
        let mut prev_upper = None;
        for i in 0..width {
            if let Some((_, hi)) = col[i] {
                prev_upper = Some(hi);
            }
            upper[i] = col[i].map(|c| c.1).or(prev_upper).unwrap();
        }
        let region = LadderRegion {
            a,
            b,
            x_lo,
            lower,
            upper,
        };
        if !region.boundaries_monotone() {
            return Err(Error::Internal(
                "ladder point set produced non-monotone boundaries".into(),
            ));
        }
        if region.len() != set.len() || !set.iter().all(|p| region.contains(*p)) {
            return Err(Error::Internal(
                "boundary description does not reproduce the point set".into(),
            ));
        }
        Ok(region)
    }

    /// `mask[i][j]` is true when matrix entry `(i, j)` is non-zero. The mask
    /// has `b+1` rows of `a+1` entries.
    pub fn from_matrix_mask(mask: &[Vec<bool>]) -> Result<Self> {
        if mask.is_empty() || mask[0].is_empty() {
            return Err(Error::InvalidRegion("mask has no cells".into()));
        }
        let b = mask.len() as i64 - 1;
        let a = mask[0].len() as i64 - 1;
        if let Some(i) = mask.iter().position(|row| row.len() as i64 != a + 1) {
            return Err(Error::InvalidRegion(format!(
                "mask row {i} has {} entries, expected {}",
                mask[i].len(),
                a + 1
            )));
        }
        let points = mask.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &on)| on)
                .map(move |(j, _)| Point::new(j as i64, b - i as i64))
        });
        Self::from_points(a, b, points)
    }

    pub fn to_matrix_mask(&self) -> Vec<Vec<bool>> {
        (0..=self.b)
            .map(|i| {
                (0..=self.a)
                    .map(|j| self.contains(Point::new(j, self.b - i)))
                    .collect()
            })
            .collect()
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    /// Inclusive column range; `None` for the empty region.
    pub fn column_range(&self) -> Option<(i64, i64)> {
        if self.is_empty() {
            None
        } else {
            Some((self.x_lo, self.x_lo + self.lower.len() as i64 - 1))
        }
    }

    fn slot(&self, x: i64) -> Option<usize> {
        let off = x - self.x_lo;
        (off >= 0 && (off as usize) < self.lower.len()).then_some(off as usize)
    }

    /// Lower boundary value at `x`, defined for every column of the range
    /// (also for empty interior columns).
    pub fn lower_at(&self, x: i64) -> Option<i64> {
        self.slot(x).map(|i| self.lower[i])
    }

    pub fn upper_at(&self, x: i64) -> Option<i64> {
        self.slot(x).map(|i| self.upper[i])
    }

    /// The non-empty interval of column `x`, if any.
    pub fn column(&self, x: i64) -> Option<(i64, i64)> {
        let i = self.slot(x)?;
        (self.lower[i] <= self.upper[i]).then(|| (self.lower[i], self.upper[i]))
    }

    pub fn contains(&self, p: Point) -> bool {
        match self.column(p.x) {
            Some((lo, hi)) => lo <= p.y && p.y <= hi,
            None => false,
        }
    }

    /// Points in `(x, y)` lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.lower.len()).flat_map(move |i| {
            let x = self.x_lo + i as i64;
            (self.lower[i]..=self.upper[i]).map(move |y| Point::new(x, y))
        })
    }

    pub fn len(&self) -> usize {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(&lo, &hi)| (hi - lo + 1).max(0) as usize)
            .sum()
    }

    pub fn point_set(&self) -> BTreeSet<Point> {
        self.points().collect()
    }

    /// `{(x, y) : (x+1, y-1) in self}`.
    pub fn shifted_up_left(&self) -> Self {
        let lower = self.lower.iter().map(|v| v + 1).collect();
        let upper = self.upper.iter().map(|v| v + 1).collect();
        LadderRegion {
            a: self.a,
            b: self.b,
            x_lo: self.x_lo - 1,
            lower,
            upper,
        }
    }

    /// Pointwise intersection. Boundary functions combine by max/min, which
    /// keeps them weakly increasing.
    pub fn intersect(&self, other: &Self) -> Self {
        let (Some((l1, h1)), Some((l2, h2))) = (self.column_range(), other.column_range()) else {
            return Self::empty(self.a, self.b);
        };
        let lo = l1.max(l2);
        let hi = h1.min(h2);
        if lo > hi {
            return Self::empty(self.a, self.b);
        }
        let mut lower = Vec::with_capacity((hi - lo + 1) as usize);
        let mut upper = Vec::with_capacity((hi - lo + 1) as usize);
        for x in lo..=hi {
            lower.push(self.lower_at(x).unwrap().max(other.lower_at(x).unwrap()));
            upper.push(self.upper_at(x).unwrap().min(other.upper_at(x).unwrap()));
        }
        Self::from_raw(self.a, self.b, lo, lower, upper)
    }

    /// Restricts to `x <= x_max` and `y >= y_min`.
    pub fn clip(&self, x_max: i64, y_min: i64) -> Self {
        let Some((lo, hi)) = self.column_range() else {
            return self.clone();
        };
        let hi = hi.min(x_max);
        if lo > hi {
            return Self::empty(self.a, self.b);
        }
        let lower = (lo..=hi)
            .map(|x| self.lower_at(x).unwrap().max(y_min))
            .collect();
        let upper = (lo..=hi).map(|x| self.upper_at(x).unwrap()).collect();
        Self::from_raw(self.a, self.b, lo, lower, upper)
    }

    /// The points of `self` not on its lower-right boundary:
    /// `{(x, y) in self : (x+1, y-1) in self}`.
    pub fn interior(&self) -> Self {
        self.intersect(&self.shifted_up_left())
    }

    /// The lower-right boundary `{(x, y) in self : (x+1, y-1) not in self}`.
    pub fn lower_right_boundary(&self) -> BTreeSet<Point> {
        self.points()
            .filter(|p| !self.contains(Point::new(p.x + 1, p.y - 1)))
            .collect()
    }

    /// Re-expresses the region over `0..=a` with explicit lists, as used by
    /// the structured file format. Columns outside the range are reported as
    /// `None`.
    pub fn boundary_lists(&self) -> Vec<Option<(i64, i64)>> {
        (0..=self.a).map(|x| self.column(x)).collect()
    }
}

/// `M = [u_1 .. u_n | v_1 .. v_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cogenerator {
    u: Vec<i64>,
    v: Vec<i64>,
}

impl Cogenerator {
    /// Validates `1 <= u_1 < .. < u_n <= b+1` and `1 <= v_1 < .. < v_n <= a+1`.
    pub fn new(u: Vec<i64>, v: Vec<i64>, a: i64, b: i64) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::InvalidCogenerator("n must be at least 1".into()));
        }
        if u.len() != v.len() {
            return Err(Error::InvalidCogenerator(format!(
                "u has {} entries but v has {}",
                u.len(),
                v.len()
            )));
        }
        check_strict("u", &u, b + 1)?;
        check_strict("v", &v, a + 1)?;
        Ok(Cogenerator { u, v })
    }

    /// The 2x2-minor case `M = [1 | 1]`.
    pub fn two_by_two() -> Self {
        Cogenerator {
            u: vec![1],
            v: vec![1],
        }
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn u(&self) -> &[i64] {
        &self.u
    }

    pub fn v(&self) -> &[i64] {
        &self.v
    }
}

fn check_strict(name: &str, seq: &[i64], max: i64) -> Result<()> {
    for (i, &s) in seq.iter().enumerate() {
        if s < 1 || s > max {
            return Err(Error::InvalidCogenerator(format!(
                "{name}_{} = {s} outside 1..={max}",
                i + 1
            )));
        }
        if i > 0 && s <= seq[i - 1] {
            return Err(Error::InvalidCogenerator(format!(
                "{name} not strictly increasing at position {}",
                i + 1
            )));
        }
    }
    Ok(())
}

impl fmt::Display for Cogenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[i64]| {
            s.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{}|{}]", join(&self.u), join(&self.v))
    }
}

/// Start and end bounds, shrunken regions, boundaries and `d` for the
/// non-intersecting path families attached to `(L, M)`.
///
/// All per-path vectors are indexed from 0, so index `i` holds path `i+1`.
#[derive(Clone, Debug)]
pub struct PathSystemData {
    pub a: i64,
    pub b: i64,
    pub starts: Vec<Point>,
    pub ends: Vec<Point>,
    pub levels: Vec<LadderRegion>,
    pub boundaries: Vec<BTreeSet<Point>>,
    /// `levels[i]` minus `boundaries[i]`, as a ladder region.
    pub admissible: Vec<LadderRegion>,
    pub d: usize,
}

impl PathSystemData {
    pub fn n(&self) -> usize {
        self.starts.len()
    }

    pub fn bounds(&self, i: usize) -> crate::arrays::Bounds {
        crate::arrays::Bounds::new(self.starts[i], self.ends[i])
    }

    /// The lower-right boundary of `levels[i]` viewed as a lattice path from
    /// `starts[i]` to `ends[i]`. Its points inside the level are exactly
    /// `boundaries[i]`; the remaining points fill corners missing from the
    /// region.
    pub fn wall(&self, i: usize) -> Vec<Point> {
        let level = &self.levels[i];
        let start = self.starts[i];
        let end = self.ends[i];
        let height = |x: i64| -> i64 {
            if x <= start.x {
                return start.y;
            }
            match level.column_range() {
                Some((lo, hi)) if x >= lo && x <= hi => {
                    level.lower_at(x).unwrap().clamp(start.y, end.y)
                }
                Some((lo, _)) if x < lo => start.y,
                _ => end.y,
            }
        };
        let mut path = Vec::new();
        for x in start.x..=end.x {
            let from = height(x);
            let to = if x == end.x { end.y } else { height(x + 1) };
            for y in from..=to {
                path.push(Point::new(x, y));
            }
        }
        path
    }
}

/// Derives `A^(i)`, `E^(i)`, the shrunken regions, their boundaries and `d`.
///
/// The innermost level is the input region clipped to the box spanned by its
/// own start and end bound; this coincides with the input region whenever
/// `u_1 = v_1 = 1`.
pub fn derive_path_system(region: &LadderRegion, m: &Cogenerator) -> Result<PathSystemData> {
    let n = m.n();
    let (a, b) = (region.a(), region.b());
    if m.u().iter().any(|&u| u > b + 1) || m.v().iter().any(|&v| v > a + 1) {
        return Err(Error::InvalidCogenerator(format!(
            "{m} does not fit a region with a={a}, b={b}"
        )));
    }
    let mut starts = Vec::with_capacity(n);
    let mut ends = Vec::with_capacity(n);
    for i in 1..=n {
        let u = m.u()[n - i];
        let v = m.v()[n - i];
        starts.push(Point::new(0, u - 1));
        ends.push(Point::new(a - v + 1, b));
    }
    for i in 0..n {
        if !region.contains(starts[i]) {
            return Err(Error::HypothesisViolation {
                which: "start",
                index: i + 1,
                point: starts[i],
            });
        }
        if !region.contains(ends[i]) {
            return Err(Error::HypothesisViolation {
                which: "end",
                index: i + 1,
                point: ends[i],
            });
        }
    }

    let mut levels = vec![LadderRegion::empty(a, b); n];
    levels[n - 1] = region.clip(ends[n - 1].x, starts[n - 1].y);
    for i in (0..n - 1).rev() {
        let outer = &levels[i + 1];
        levels[i] = outer
            .intersect(&outer.shifted_up_left())
            .clip(ends[i].x, starts[i].y);
    }

    let boundaries: Vec<BTreeSet<Point>> =
        levels.iter().map(|l| l.lower_right_boundary()).collect();
    let union: BTreeSet<Point> = boundaries.iter().flatten().copied().collect();

    let admissible = levels
        .iter()
        .zip(&boundaries)
        .map(|(level, boundary)| region_difference_as_ladder(level, boundary))
        .collect::<Result<Vec<_>>>()?;

    Ok(PathSystemData {
        a,
        b,
        starts,
        ends,
        levels,
        boundaries,
        admissible,
        d: union.len(),
    })
}

/// `n(a + b + 3) - sum(u_i + v_i)`; equals the derived `d` for upper ladders.
pub fn d_closed_formula(region: &LadderRegion, m: &Cogenerator) -> i64 {
    let n = m.n() as i64;
    let sum: i64 = m.u().iter().chain(m.v()).sum();
    n * (region.a() + region.b() + 3) - sum
}

/// Realizes `region \ boundary` as a ladder region, where `boundary` is the
/// lower-right boundary of `region`. Fails if the two descriptions disagree.
pub fn region_difference_as_ladder(
    region: &LadderRegion,
    boundary: &BTreeSet<Point>,
) -> Result<LadderRegion> {
    let result = region.interior();
    let expected: BTreeSet<Point> = region.points().filter(|p| !boundary.contains(p)).collect();
    if result.point_set() != expected {
        return Err(Error::Internal(format!(
            "region minus boundary has {} points but the ladder description has {}",
            expected.len(),
            result.len()
        )));
    }
    Ok(result)
}
