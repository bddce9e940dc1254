//! Two-rowed arrays, bounds, the intersection condition and counting.
//!
//! A two-rowed array of length `k` is a pair of strictly increasing sequences
//! `a_1 < .. < a_k` (top) and `b_1 < .. < b_k` (bottom). Read column-wise it is
//! a chain of lattice points `(a_i, b_i)`, strictly increasing in both
//! coordinates: the north-east turns of a lattice path.

use std::collections::BTreeMap;
use std::fmt;

use crate::count::Count;
use crate::ladder::{LadderRegion, PathSystemData, Point};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoRowedArray {
    top: Vec<i64>,
    bottom: Vec<i64>,
}

impl TwoRowedArray {
    /// Fails unless both rows are strictly increasing and equally long.
    pub fn new(top: Vec<i64>, bottom: Vec<i64>) -> Result<Self, String> {
        if top.len() != bottom.len() {
            return Err(format!(
                "rows have different lengths ({} and {})",
                top.len(),
                bottom.len()
            ));
        }
        for (name, row) in [("top", &top), ("bottom", &bottom)] {
            if let Some(i) = row.windows(2).position(|w| w[0] >= w[1]) {
                return Err(format!(
                    "{name} row not strictly increasing at position {}",
                    i + 2
                ));
            }
        }
        Ok(TwoRowedArray { top, bottom })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds an array from its turn points, which must already form a chain.
    pub fn from_points(points: &[Point]) -> Result<Self, String> {
        Self::new(
            points.iter().map(|p| p.x).collect(),
            points.iter().map(|p| p.y).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn top(&self) -> &[i64] {
        &self.top
    }

    pub fn bottom(&self) -> &[i64] {
        &self.bottom
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.top
            .iter()
            .zip(&self.bottom)
            .map(|(&x, &y)| Point::new(x, y))
    }
}

impl fmt::Display for TwoRowedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[i64]| {
            s.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "(({}),({}))", join(&self.top), join(&self.bottom))
    }
}

/// Start point `A` and end point `E` of the lattice path carrying an array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bounds {
    pub start: Point,
    pub end: Point,
}

impl Bounds {
    pub fn new(start: Point, end: Point) -> Self {
        Bounds { start, end }
    }

    /// Admissible top values `A_1 ..= E_1 - 1`.
    pub fn top_range(&self) -> (i64, i64) {
        (self.start.x, self.end.x - 1)
    }

    /// Admissible bottom values `A_2 + 1 ..= E_2`.
    pub fn bottom_range(&self) -> (i64, i64) {
        (self.start.y + 1, self.end.y)
    }

    pub fn admits(&self, p: Point) -> bool {
        let (x0, x1) = self.top_range();
        let (y0, y1) = self.bottom_range();
        x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1
    }
}

/// Bounded by `bounds` and every turn point in `region`.
pub fn validate_array(t: &TwoRowedArray, bounds: &Bounds, region: &LadderRegion) -> bool {
    t.points().all(|p| bounds.admits(p) && region.contains(p))
}

/// Condition (×) with the sentinels `a_{k+1} = E_1` and `b_0 = A_2` taken from
/// the first array's bounds.
pub fn intersects(t1: &TwoRowedArray, bounds1: &Bounds, t2: &TwoRowedArray) -> bool {
    let k = t1.len();
    let a = |i: usize| if i == k + 1 { bounds1.end.x } else { t1.top[i - 1] };
    let b = |i: usize| if i == 0 { bounds1.start.y } else { t1.bottom[i - 1] };
    (1..=k + 1).any(|i| {
        t2.points()
            .any(|q| q.x <= a(i) && b(i - 1) <= q.y)
    })
}

/// All arrays of length `k` bounded by `bounds` and in `region`, in
/// lexicographic order of `(top, bottom)`.
pub fn enumerate_arrays(region: &LadderRegion, bounds: &Bounds, k: usize) -> Vec<TwoRowedArray> {
    let (x0, x1) = bounds.top_range();
    let (y0, y1) = bounds.bottom_range();
    let mut out = Vec::new();
    if k == 0 {
        out.push(TwoRowedArray::empty());
        return out;
    }
    let tops: Vec<i64> = (x0..=x1).collect();
    let mut top = Vec::with_capacity(k);
    for_each_subset(&tops, k, &mut top, &mut |top| {
        let mut bottom = Vec::with_capacity(k);
        fill_bottoms(region, top, y0, y1, &mut bottom, &mut out);
    });
    out
}

fn for_each_subset(pool: &[i64], k: usize, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    let need = k - cur.len();
    let start = match cur.last() {
        Some(&last) => pool.partition_point(|&v| v <= last),
        None => 0,
    };
    for i in start..pool.len() {
        if pool.len() - i < need {
            break;
        }
        cur.push(pool[i]);
        for_each_subset(pool, k, cur, f);
        cur.pop();
    }
}

fn fill_bottoms(
    region: &LadderRegion,
    top: &[i64],
    y0: i64,
    y1: i64,
    bottom: &mut Vec<i64>,
    out: &mut Vec<TwoRowedArray>,
) {
    let i = bottom.len();
    if i == top.len() {
        out.push(TwoRowedArray {
            top: top.to_vec(),
            bottom: bottom.clone(),
        });
        return;
    }
    let from = bottom.last().map_or(y0, |&v| v + 1);
    // Leave room for the remaining strictly larger entries.
    let to = y1 - (top.len() - i - 1) as i64;
    for y in from..=to {
        if region.contains(Point::new(top[i], y)) {
            bottom.push(y);
            fill_bottoms(region, top, y0, y1, bottom, out);
            bottom.pop();
        }
    }
}

/// `counts[k]` is the number of arrays of length `k`, for `k` up to the
/// longest chain. Chains are counted by length with a dynamic program over
/// the admissible grid, using cumulative sums for the strict south-west
/// quadrant of each point.
pub fn count_arrays_dp<C: Count>(region: &LadderRegion, bounds: &Bounds) -> Vec<C> {
    let (x0, x1) = bounds.top_range();
    let (y0, y1) = bounds.bottom_range();
    let mut counts = vec![C::one()];
    if x1 < x0 || y1 < y0 {
        return counts;
    }
    let w = (x1 - x0 + 1) as usize;
    let h = (y1 - y0 + 1) as usize;
    let inside: Vec<Vec<bool>> = (0..w)
        .map(|i| {
            (0..h)
                .map(|j| region.contains(Point::new(x0 + i as i64, y0 + j as i64)))
                .collect()
        })
        .collect();
    // cur[i][j]: chains of the current length ending at grid point (i, j).
    let mut cur: Vec<Vec<C>> = inside
        .iter()
        .map(|col| col.iter().map(|&on| if on { C::one() } else { C::zero() }).collect())
        .collect();
    loop {
        let total = cur
            .iter()
            .flatten()
            .fold(C::zero(), |acc, v| acc + v);
        if total.is_zero() {
            break;
        }
        counts.push(total);
        // quad[i][j] = sum of cur over i' <= i, j' <= j.
        let mut quad: Vec<Vec<C>> = vec![vec![C::zero(); h]; w];
        for i in 0..w {
            let mut column = C::zero();
            for j in 0..h {
                column = column + &cur[i][j];
                quad[i][j] = if i == 0 {
                    column.clone()
                } else {
                    quad[i - 1][j].clone() + &column
                };
            }
        }
        let mut next: Vec<Vec<C>> = vec![vec![C::zero(); h]; w];
        for i in 1..w {
            for j in 1..h {
                if inside[i][j] {
                    next[i][j] = quad[i - 1][j - 1].clone();
                }
            }
        }
        cur = next;
    }
    counts
}

/// One member of a family: the array, its bounds and the path index (from 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub array: TwoRowedArray,
    pub bounds: Bounds,
    pub level: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrayFamily {
    pub members: Vec<FamilyMember>,
}

impl ArrayFamily {
    pub fn total_length(&self) -> usize {
        self.members.iter().map(|m| m.array.len()).sum()
    }

    /// Every member valid for its level and no two members intersecting,
    /// with (×) applied to each pair `i < j` using the bounds of member `i`.
    pub fn is_admissible(&self, psd: &PathSystemData) -> bool {
        if self.members.len() != psd.n() {
            return false;
        }
        let valid = self.members.iter().enumerate().all(|(i, m)| {
            m.level == i + 1
                && m.bounds == psd.bounds(i)
                && validate_array(&m.array, &m.bounds, &psd.admissible[i])
        });
        valid && pairwise_disjoint(self.members.iter().map(|m| (&m.array, &m.bounds)))
    }
}

fn pairwise_disjoint<'a>(members: impl Iterator<Item = (&'a TwoRowedArray, &'a Bounds)>) -> bool {
    let members: Vec<_> = members.collect();
    (0..members.len()).all(|i| {
        (i + 1..members.len()).all(|j| !intersects(members[i].0, members[i].1, members[j].0))
    })
}

/// Every array admissible on level `i` (index from 0), by increasing length
/// and lexicographically within a length.
pub fn level_arrays(psd: &PathSystemData, i: usize) -> Vec<TwoRowedArray> {
    let bounds = psd.bounds(i);
    let region = &psd.admissible[i];
    let max_len = count_arrays_dp::<u64>(region, &bounds).len() - 1;
    (0..=max_len)
        .flat_map(|k| enumerate_arrays(region, &bounds, k))
        .collect()
}

/// Number of non-intersecting families by total length.
///
/// Works level by level: the state after level `i` is the array chosen there
/// together with a length polynomial, and only consecutive levels are checked
/// against each other. For lattice paths ordered from top-left to
/// bottom-right this agrees with checking all pairs, which
/// [`enumerate_families_exhaustive`] does literally.
pub fn enumerate_families<C: Count>(psd: &PathSystemData) -> BTreeMap<usize, C> {
    let n = psd.n();
    let mut prev_arrays = level_arrays(psd, 0);
    let mut prev_weights: Vec<Vec<C>> = prev_arrays
        .iter()
        .map(|t| monomial(t.len()))
        .collect();
    for i in 1..n {
        let arrays = level_arrays(psd, i);
        let bounds_prev = psd.bounds(i - 1);
        let weights: Vec<Vec<C>> = arrays
            .iter()
            .map(|t| {
                let mut acc: Vec<C> = Vec::new();
                for (s, w) in prev_arrays.iter().zip(&prev_weights) {
                    if !intersects(s, &bounds_prev, t) {
                        add_shifted(&mut acc, w, t.len());
                    }
                }
                acc
            })
            .collect();
        prev_arrays = arrays;
        prev_weights = weights;
    }
    let mut total: Vec<C> = Vec::new();
    for w in &prev_weights {
        add_shifted(&mut total, w, 0);
    }
    total
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn monomial<C: Count>(deg: usize) -> Vec<C> {
    let mut v = vec![C::zero(); deg + 1];
    v[deg] = C::one();
    v
}

fn add_shifted<C: Count>(acc: &mut Vec<C>, w: &[C], shift: usize) {
    if acc.len() < w.len() + shift {
        acc.resize(w.len() + shift, C::zero());
    }
    for (j, c) in w.iter().enumerate() {
        if !c.is_zero() {
            let slot = &mut acc[j + shift];
            *slot = std::mem::replace(slot, C::zero()) + c;
        }
    }
}

/// Lists every non-intersecting family, checking all pairs `i < j`.
pub fn list_families(psd: &PathSystemData) -> Vec<ArrayFamily> {
    let per_level: Vec<Vec<TwoRowedArray>> = (0..psd.n()).map(|i| level_arrays(psd, i)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    extend_family(psd, &per_level, &mut chosen, &mut out);
    out
}

fn extend_family(
    psd: &PathSystemData,
    per_level: &[Vec<TwoRowedArray>],
    chosen: &mut Vec<usize>,
    out: &mut Vec<ArrayFamily>,
) {
    let i = chosen.len();
    if i == per_level.len() {
        out.push(ArrayFamily {
            members: chosen
                .iter()
                .enumerate()
                .map(|(lvl, &idx)| FamilyMember {
                    array: per_level[lvl][idx].clone(),
                    bounds: psd.bounds(lvl),
                    level: lvl + 1,
                })
                .collect(),
        });
        return;
    }
    for (idx, t) in per_level[i].iter().enumerate() {
        let clear = chosen.iter().enumerate().all(|(lvl, &c)| {
            !intersects(&per_level[lvl][c], &psd.bounds(lvl), t)
        });
        if clear {
            chosen.push(idx);
            extend_family(psd, per_level, chosen, out);
            chosen.pop();
        }
    }
}

/// Family counts by total length from [`list_families`].
pub fn enumerate_families_exhaustive<C: Count>(psd: &PathSystemData) -> BTreeMap<usize, C> {
    let mut counts: BTreeMap<usize, C> = BTreeMap::new();
    for fam in list_families(psd) {
        let slot = counts.entry(fam.total_length()).or_insert_with(C::zero);
        *slot = std::mem::replace(slot, C::zero()) + C::one();
    }
    counts
}
