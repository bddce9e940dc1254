//! Instance generators for exhaustive and seeded random test suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ladder::{derive_path_system, Cogenerator, LadderRegion, Point};

/// Every ladder region inside a box of `rows x cols` matrix cells that
/// contains its own corners `(0, 0)` and `(max x, max y)`. Each region gets
/// `a = max x` and `b = max y`, so the 2x2-minor bounds `(0, 0)` and
/// `(a, b)` lie in it.
pub fn box_regions(rows: usize, cols: usize) -> Vec<LadderRegion> {
    let cells: Vec<Point> = (0..cols as i64)
        .flat_map(|x| (0..rows as i64).map(move |y| Point::new(x, y)))
        .collect();
    assert!(cells.len() < 32, "box too large for exhaustive subsets");
    let mut out = Vec::new();
    for mask in 1u32..(1 << cells.len()) {
        let pts: Vec<Point> = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let a = pts.iter().map(|p| p.x).max().unwrap();
        let b = pts.iter().map(|p| p.y).max().unwrap();
        if !pts.contains(&Point::new(0, 0)) || !pts.contains(&Point::new(a, b)) {
            continue;
        }
        if let Ok(r) = LadderRegion::from_points(a, b, pts) {
            out.push(r);
        }
    }
    out
}

/// Full rectangles with `1..=max_rows` rows and `1..=max_cols` columns.
pub fn full_rectangles(max_rows: usize, max_cols: usize) -> Vec<LadderRegion> {
    (1..=max_rows as i64)
        .flat_map(|r| (1..=max_cols as i64).map(move |c| LadderRegion::rectangle(c - 1, r - 1)))
        .collect()
}

/// A random region on columns `0..=a`, rows `0..=b`, with `(0, 0)` and
/// `(a, b)` inside.
pub fn random_region<R: Rng>(rng: &mut R, a: i64, b: i64) -> LadderRegion {
    let w = (a + 1) as usize;
    let mut lower: Vec<i64> = (0..w).map(|_| rng.gen_range(0..=b)).collect();
    let mut upper: Vec<i64> = (0..w).map(|_| rng.gen_range(0..=b)).collect();
    lower.sort_unstable();
    upper.sort_unstable();
    lower[0] = 0;
    upper[w - 1] = b;
    for i in 0..w {
        upper[i] = upper[i].max(lower[i]);
    }
    LadderRegion::new(a, b, lower, upper).expect("sorted boundaries form a region")
}

pub fn random_regions(seed: u64, count: usize, a: i64, b: i64) -> Vec<LadderRegion> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_region(&mut rng, a, b)).collect()
}

fn random_strict<R: Rng>(rng: &mut R, n: usize, max: i64) -> Vec<i64> {
    let mut pool: Vec<i64> = (1..=max).collect();
    for i in 0..n {
        let j = rng.gen_range(i..pool.len());
        pool.swap(i, j);
    }
    let mut v = pool[..n].to_vec();
    v.sort_unstable();
    v
}

/// Seeded instances with `n` drawn from `n_range` (inclusive), rejecting
/// cogenerators whose bounds leave the region.
pub fn random_instances(
    seed: u64,
    count: usize,
    a: i64,
    b: i64,
    n_range: (usize, usize),
) -> Vec<(LadderRegion, Cogenerator)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let region = random_region(&mut rng, a, b);
        let n = rng.gen_range(n_range.0..=n_range.1);
        if n as i64 > a + 1 || n as i64 > b + 1 {
            continue;
        }
        for _ in 0..50 {
            let u = random_strict(&mut rng, n, b + 1);
            let v = random_strict(&mut rng, n, a + 1);
            let m = Cogenerator::new(u, v, a, b).expect("drawn in range");
            if derive_path_system(&region, &m).is_ok() {
                out.push((region, m));
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_regions_are_distinct_and_cornered() {
        let rs = box_regions(3, 4);
        assert!(!rs.is_empty());
        for r in &rs {
            assert!(r.contains(Point::new(0, 0)));
            assert!(r.contains(Point::new(r.a(), r.b())));
            assert!(r.a() <= 3 && r.b() <= 2);
        }
        let sets: std::collections::BTreeSet<_> = rs.iter().map(|r| r.point_set()).collect();
        assert_eq!(sets.len(), rs.len());
        // The two one-row or one-column shapes of every length are present.
        assert!(rs.contains(&LadderRegion::rectangle(3, 2)));
        assert!(rs.contains(&LadderRegion::rectangle(0, 0)));
    }

    #[test]
    fn small_box_count_matches_brute_force() {
        // 2x2 box: subsets containing (0,0) and their own top-right corner.
        let rs = box_regions(2, 2);
        let mut expected = 0;
        for mask in 1u32..16 {
            let pts: Vec<Point> = (0..4)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| Point::new(i / 2, i % 2))
                .collect();
            let a = pts.iter().map(|p| p.x).max().unwrap();
            let b = pts.iter().map(|p| p.y).max().unwrap();
            if !pts.contains(&Point::new(0, 0)) || !pts.contains(&Point::new(a, b)) {
                continue;
            }
            // Only the anti-diagonal pair (0,1),(1,0) forces more cells.
            let bad = pts.contains(&Point::new(0, 1))
                && pts.contains(&Point::new(1, 0))
                && pts.len() < 4;
            if !bad {
                expected += 1;
            }
        }
        assert_eq!(rs.len(), expected);
    }

    #[test]
    fn random_generation_is_reproducible() {
        assert_eq!(random_regions(7, 5, 5, 5), random_regions(7, 5, 5, 5));
        let inst = random_instances(3, 10, 5, 5, (2, 3));
        assert_eq!(inst.len(), 10);
        assert_eq!(inst, random_instances(3, 10, 5, 5, (2, 3)));
        for (r, m) in &inst {
            assert!((2..=3).contains(&m.n()));
            assert!(derive_path_system(r, m).is_ok());
        }
    }

    #[test]
    fn full_rectangle_list() {
        let rs = full_rectangles(4, 4);
        assert_eq!(rs.len(), 16);
        assert!(rs.iter().all(|r| r.len() <= 16));
    }
}
