//! Brute-force ground truth: the antichain-avoiding simplicial complex, its
//! face numbers, the face-number formula for the Hilbert function, and the
//! light-and-shadow map from faces to families of lattice paths.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::arrays::{enumerate_families, intersects, validate_array, TwoRowedArray};
use crate::count::{binom, Count};
use crate::error::{Error, Result};
use crate::ladder::{derive_path_system, Cogenerator, LadderRegion, PathSystemData, Point};

pub const DEFAULT_CELL_CAP: usize = 20;

/// Length of the longest subsequence strictly increasing in `x` and strictly
/// decreasing in `y`.
pub fn longest_antichain(cells: &[Point]) -> usize {
    let mut pts = cells.to_vec();
    pts.sort();
    let mut best = vec![1usize; pts.len()];
    for i in 0..pts.len() {
        for j in 0..i {
            if pts[j].x < pts[i].x && pts[j].y > pts[i].y {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// `cells` has exactly `t` elements and they can be ordered with `x`
/// strictly increasing and `y` strictly decreasing (strictly increasing
/// matrix rows and columns).
pub fn is_t_antichain(cells: &[Point], t: usize) -> bool {
    cells.len() == t && longest_antichain(cells) == t
}

/// `D_t`: the last `u_t - 1` matrix rows and the last `v_t - 1` matrix
/// columns; `D_{n+1}` is everything.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RestrictedZone {
    pub t: usize,
    /// Rows `y <= max_row` and columns `x >= min_col`; `None` means all cells.
    limits: Option<(i64, i64)>,
}

impl RestrictedZone {
    pub fn new(a: i64, m: &Cogenerator, t: usize) -> Self {
        let limits = (t <= m.n()).then(|| (m.u()[t - 1] - 2, a - m.v()[t - 1] + 2));
        RestrictedZone { t, limits }
    }

    pub fn contains(&self, p: Point) -> bool {
        match self.limits {
            None => true,
            Some((max_row, min_col)) => p.y <= max_row || p.x >= min_col,
        }
    }
}

fn zones(region: &LadderRegion, m: &Cogenerator) -> Vec<RestrictedZone> {
    (1..=m.n() + 1)
        .map(|t| RestrictedZone::new(region.a(), m, t))
        .collect()
}

fn avoids(cells: &[Point], zones: &[RestrictedZone]) -> bool {
    zones.iter().all(|z| {
        let inside: Vec<Point> = cells.iter().copied().filter(|&p| z.contains(p)).collect();
        longest_antichain(&inside) < z.t
    })
}

/// All cells in the region, and no `t`-antichain inside `D_t` for any `t`.
pub fn is_face(cells: &[Point], region: &LadderRegion, m: &Cogenerator) -> bool {
    cells.iter().all(|&p| region.contains(p)) && avoids(cells, &zones(region, m))
}

/// Every face, including the empty one, each sorted by `(x, y)`.
pub fn list_faces(region: &LadderRegion, m: &Cogenerator, cap: usize) -> Result<Vec<Vec<Point>>> {
    let cells: Vec<Point> = region.points().collect();
    if cells.len() > cap {
        return Err(Error::TooLarge(format!(
            "region has {} cells, more than the face enumeration cap of {cap}",
            cells.len()
        )));
    }
    let zones = zones(region, m);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    grow_faces(&cells, 0, &zones, &mut cur, &mut out);
    Ok(out)
}

fn grow_faces(
    cells: &[Point],
    from: usize,
    zones: &[RestrictedZone],
    cur: &mut Vec<Point>,
    out: &mut Vec<Vec<Point>>,
) {
    out.push(cur.clone());
    for i in from..cells.len() {
        cur.push(cells[i]);
        // Faces are closed under subsets, so a non-face prunes its branch.
        if avoids(cur, zones) {
            grow_faces(cells, i + 1, zones, cur, out);
        }
        cur.pop();
    }
}

/// `f[k]` is the number of faces with `k + 1` cells.
pub fn face_counts<C: Count>(region: &LadderRegion, m: &Cogenerator, cap: usize) -> Result<Vec<C>> {
    let faces = list_faces(region, m, cap)?;
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut f = vec![C::zero(); top];
    for face in faces.iter().filter(|f| !f.is_empty()) {
        let slot = &mut f[face.len() - 1];
        *slot = std::mem::replace(slot, C::zero()) + C::one();
    }
    Ok(f)
}

/// `sum_k binom(l - 1, k) f_k`; zero at `l = 0`.
pub fn hilbert_via_faces<C: Count>(f: &[C], l: usize) -> C {
    f.iter().enumerate().fold(C::zero(), |acc, (k, fk)| {
        acc + binom::<C>(l as i64 - 1, k as i64) * fk.clone()
    })
}

/// Paths `P` (one point list per path, from start to end) and the reduced
/// turn sets `P'` read as two-rowed arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePathFamily {
    pub paths: Vec<Vec<Point>>,
    pub reduced: Vec<TwoRowedArray>,
}

impl LatticePathFamily {
    /// Points where a path arrives by a north step and leaves by an east step.
    pub fn turns(&self, i: usize) -> Vec<Point> {
        ne_turns(&self.paths[i])
    }

    pub fn reduced_size(&self) -> usize {
        self.reduced.iter().map(|t| t.len()).sum()
    }

    /// Distinct region points lying on some path.
    pub fn points_in(&self, region: &LadderRegion) -> usize {
        self.paths
            .iter()
            .flatten()
            .filter(|p| region.contains(**p))
            .collect::<BTreeSet<_>>()
            .len()
    }
}

fn ne_turns(path: &[Point]) -> Vec<Point> {
    (1..path.len().saturating_sub(1))
        .filter(|&i| {
            let (p, q, r) = (path[i - 1], path[i], path[i + 1]);
            p.x == q.x && p.y + 1 == q.y && r.x == q.x + 1 && r.y == q.y
        })
        .map(|i| path[i])
        .collect()
}

/// Light and shadow with the light source in the top-left corner.
///
/// For path `i` the wall (the lower-right boundary of level `i`, walked as a
/// path) and every face cell not yet used cast the shadow
/// `{(x, y) : x >= r, y <= s}`. The path runs from the start bound along the
/// upper border of the shadow, climbing each column before stepping east, and
/// ends with a vertical run in the last column. Face cells on it are used up.
/// The reduced turns of path `i` are its north-east turns at face cells that
/// are not on the boundary of level `i`.
pub fn light_and_shadow(face: &[Point], psd: &PathSystemData) -> Result<LatticePathFamily> {
    let mut remaining: BTreeSet<Point> = face.iter().copied().collect();
    let mut paths = Vec::with_capacity(psd.n());
    let mut reduced = Vec::with_capacity(psd.n());
    for i in 0..psd.n() {
        let start = psd.starts[i];
        let end = psd.ends[i];
        let wall = psd.wall(i);
        let width = (end.x + 1) as usize;
        let mut height = vec![start.y; width];
        for p in wall.iter().chain(remaining.iter()) {
            if p.x >= 0 && p.x <= end.x {
                let slot = &mut height[p.x as usize];
                *slot = (*slot).max(p.y);
            }
        }
        for x in 1..width {
            height[x] = height[x].max(height[x - 1]);
        }
        let mut path = Vec::new();
        for x in 0..width {
            let from = if x == 0 { start.y } else { height[x - 1] };
            let to = if x + 1 == width { end.y } else { height[x] };
            for y in from..=to {
                path.push(Point::new(x as i64, y));
            }
        }
        let used: BTreeSet<Point> = path.iter().copied().filter(|p| remaining.contains(p)).collect();
        let kept: Vec<Point> = ne_turns(&path)
            .into_iter()
            .filter(|p| used.contains(p) && !psd.boundaries[i].contains(p))
            .collect();
        reduced.push(TwoRowedArray::from_points(&kept).map_err(Error::Internal)?);
        remaining.retain(|p| !used.contains(p));
        paths.push(path);
    }
    if let Some(p) = remaining.first() {
        return Err(Error::Internal(format!(
            "face cell {p} lies on none of the shadow paths"
        )));
    }
    Ok(LatticePathFamily { paths, reduced })
}

/// Structural checks on the light-and-shadow image of one face. Returns a
/// description of each failed check.
pub fn shadow_invariant_failures(
    face: &[Point],
    psd: &PathSystemData,
    region: &LadderRegion,
) -> Result<Vec<String>> {
    let fam = light_and_shadow(face, psd)?;
    let mut out = Vec::new();
    let on_path = fam.points_in(region);
    if on_path != psd.d {
        out.push(format!("{on_path} region points on the paths, expected {}", psd.d));
    }
    for (i, path) in fam.paths.iter().enumerate() {
        if path.first() != Some(&psd.starts[i]) || path.last() != Some(&psd.ends[i]) {
            out.push(format!("path {} does not join its bounds", i + 1));
        }
        for j in i + 1..fam.paths.len() {
            let mine: BTreeSet<&Point> = path.iter().collect();
            if fam.paths[j].iter().any(|p| mine.contains(p)) {
                out.push(format!("paths {} and {} meet", i + 1, j + 1));
            }
        }
    }
    for (i, t) in fam.reduced.iter().enumerate() {
        if !validate_array(t, &psd.bounds(i), &psd.admissible[i]) {
            out.push(format!("reduced array {t} of path {} is not admissible", i + 1));
        }
        for j in i + 1..fam.reduced.len() {
            if intersects(t, &psd.bounds(i), &fam.reduced[j]) {
                out.push(format!("reduced arrays {} and {} intersect", i + 1, j + 1));
            }
        }
    }
    let turn_cells: Vec<Point> = fam.reduced.iter().flat_map(|t| t.points()).collect();
    let again = light_and_shadow(&turn_cells, psd)?;
    if again != fam {
        out.push("paths rebuilt from the reduced turns differ".into());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageReport<C> {
    pub d: usize,
    /// `f_k` from enumerating faces.
    pub face_numbers: Vec<C>,
    /// `sum_m binom(d - m, k + 1 - m) |T_m|`.
    pub predicted: Vec<C>,
    /// `|T_m|` by total length.
    pub family_counts: BTreeMap<usize, C>,
    /// Number of distinct reduced families met while grouping faces.
    pub groups: usize,
    pub failures: Vec<String>,
}

impl<C> PreimageReport<C> {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Groups all faces by their reduced family and checks that each group of
/// reduced size `m` holds `binom(d - m, j)` faces with `m + j` cells, that
/// the groups are exactly the counted families, and that
/// `f_k = sum_m binom(d - m, k + 1 - m) |T_m|`.
pub fn preimage_formula_check<C: Count>(
    region: &LadderRegion,
    m: &Cogenerator,
    cap: usize,
) -> Result<PreimageReport<C>> {
    let psd = derive_path_system(region, m)?;
    let faces = list_faces(region, m, cap)?;
    let d = psd.d;
    let mut failures = Vec::new();
    let mut groups: HashMap<Vec<TwoRowedArray>, Vec<usize>> = HashMap::new();
    for face in &faces {
        for msg in shadow_invariant_failures(face, &psd, region)? {
            failures.push(format!("face {face:?}: {msg}"));
        }
        let fam = light_and_shadow(face, &psd)?;
        let sizes = groups.entry(fam.reduced).or_default();
        if sizes.len() <= face.len() {
            sizes.resize(face.len() + 1, 0);
        }
        sizes[face.len()] += 1;
    }
    let mut groups_by_m: BTreeMap<usize, usize> = BTreeMap::new();
    for (key, sizes) in &groups {
        let mm: usize = key.iter().map(|t| t.len()).sum();
        *groups_by_m.entry(mm).or_default() += 1;
        for s in 0..=d.max(sizes.len()) {
            let seen = sizes.get(s).copied().unwrap_or(0) as u128;
            let want = binom::<u128>(d as i64 - mm as i64, s as i64 - mm as i64);
            if seen != want {
                failures.push(format!(
                    "reduced family {key:?}: {seen} faces with {s} cells, expected {want}"
                ));
            }
        }
    }
    let family_counts = enumerate_families::<C>(&psd);
    for (&mm, c) in &family_counts {
        let seen = groups_by_m.get(&mm).copied().unwrap_or(0);
        if C::from_usize(seen) != *c {
            failures.push(format!(
                "{seen} reduced families of size {mm} met, but {c} are counted"
            ));
        }
    }
    for (&mm, &seen) in &groups_by_m {
        if !family_counts.contains_key(&mm) {
            failures.push(format!("{seen} reduced families of size {mm} met, none counted"));
        }
    }
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut face_numbers = vec![C::zero(); top];
    for face in faces.iter().filter(|f| !f.is_empty()) {
        let slot = &mut face_numbers[face.len() - 1];
        *slot = std::mem::replace(slot, C::zero()) + C::one();
    }
    let predicted: Vec<C> = (0..top.max(d))
        .map(|k| {
            family_counts.iter().fold(C::zero(), |acc, (&mm, c)| {
                acc + binom::<C>(d as i64 - mm as i64, k as i64 + 1 - mm as i64) * c.clone()
            })
        })
        .collect();
    let trimmed: Vec<C> = {
        let mut p = predicted.clone();
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    };
    if trimmed != face_numbers {
        failures.push(format!(
            "face numbers {face_numbers:?} differ from the prediction {trimmed:?}"
        ));
    }
    Ok(PreimageReport {
        d,
        face_numbers,
        predicted: trimmed,
        family_counts,
        groups: groups.len(),
        failures,
    })
}
