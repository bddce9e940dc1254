//! Command implementations. Each writes its report to `out` and returns
//! `Err` for an input problem or a violated invariant.

use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use ladderdet::arrays::{count_arrays_dp, enumerate_arrays, intersects, validate_array};
use ladderdet::complex_oracle::{
    face_counts, hilbert_via_faces, light_and_shadow, preimage_formula_check,
};
use ladderdet::hilbert::{h_vector, hilbert_function, hilbert_series, is_log_concave};
use ladderdet::injection::{
    allowed_cutting_points, apply_cut, optimal_cutting_point, pair_cutting_points,
    sequence_cutting_points, verify_injectivity, ArrayPair, InjectivityReport, DEFAULT_DOMAIN_CAP,
};
use ladderdet::ladder::derive_path_system;
use ladderdet::suite::{box_regions, random_regions};
use ladderdet::{Bounds, Cogenerator, Error, LadderRegion, PathSystemData};

use crate::format::{load_face, load_pair, load_paths, load_problem, ProblemSpec};
use crate::svg;
use crate::CliError;

type Out<'a> = &'a mut dyn Write;

fn derive(spec: &ProblemSpec) -> Result<PathSystemData, CliError> {
    derive_path_system(&spec.region, &spec.minor).map_err(CliError::from)
}

/// Level index from a 1-based `--level`.
fn level_index(psd: &PathSystemData, level: usize) -> Result<usize, CliError> {
    if level == 0 || level > psd.n() {
        return Err(CliError::Input(format!(
            "--level must be in 1..={}, got {level}",
            psd.n()
        )));
    }
    Ok(level - 1)
}

pub fn hvec(file: &Path, out: Out) -> Result<(), CliError> {
    let spec = load_problem(file)?;
    let h = h_vector::<BigUint>(&spec.region, &spec.minor)?;
    let series = hilbert_series::<BigUint>(&spec.region, &spec.minor)?;
    let concave = is_log_concave(&h);
    writeln!(out, "minor: {}", spec.minor)?;
    writeln!(out, "h = {h}")?;
    writeln!(out, "d = {}", series.denom_exponent)?;
    writeln!(out, "series: {series}")?;
    match (concave, spec.minor.n()) {
        (true, _) => writeln!(out, "log-concave: yes")?,
        (false, 1) => {
            writeln!(out, "log-concave: no")?;
            return Err(CliError::Violation(format!("h-vector {h} is not log-concave")));
        }
        (false, _) => writeln!(out, "log-concave: no (conjecture counterexample candidate)")?,
    }
    Ok(())
}

pub fn enumerate(file: &Path, k: usize, level: usize, out: Out) -> Result<(), CliError> {
    let spec = load_problem(file)?;
    let psd = derive(&spec)?;
    let i = level_index(&psd, level)?;
    let bounds = psd.bounds(i);
    let region = &psd.admissible[i];
    let arrays = enumerate_arrays(region, &bounds, k);
    for t in &arrays {
        writeln!(out, "{t}")?;
    }
    writeln!(out, "count: {}", arrays.len())?;
    let dp = count_arrays_dp::<BigUint>(region, &bounds)
        .get(k)
        .cloned()
        .unwrap_or_default();
    if dp != BigUint::from(arrays.len()) {
        return Err(CliError::Violation(format!(
            "counting gives {dp} arrays of length {k}, listing gives {}",
            arrays.len()
        )));
    }
    Ok(())
}

pub fn hilbert(file: &Path, ell: usize, out: Out) -> Result<(), CliError> {
    let spec = load_problem(file)?;
    let series = hilbert_series::<BigUint>(&spec.region, &spec.minor)?;
    writeln!(out, "series: {series}")?;
    writeln!(out, "H({ell}) = {}", hilbert_function(&series, ell))?;
    Ok(())
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub fn inject(file: &Path, pair_file: &Path, level: usize, out: Out) -> Result<(), CliError> {
    let spec = load_problem(file)?;
    let psd = derive(&spec)?;
    let i = level_index(&psd, level)?;
    let (first, second) = load_pair(pair_file)?;
    let t = ArrayPair::new(first, second, psd.bounds(i), &psd.admissible[i])
        .map_err(|e| CliError::Input(format!("{}: {e}", pair_file.display())))?;
    writeln!(out, "k = {}", t.k())?;
    let tops = sequence_cutting_points(t.first().top(), t.second().top());
    let bottoms = sequence_cutting_points(t.first().bottom(), t.second().bottom());
    writeln!(out, "top cutting points: {}", join(&tops))?;
    writeln!(out, "bottom cutting points: {}", join(&bottoms))?;
    writeln!(out, "cutting points: {}", join(&pair_cutting_points(&t)))?;
    writeln!(out, "allowed: {}", join(&allowed_cutting_points(&t)))?;
    let c = optimal_cutting_point(&t)?;
    writeln!(out, "optimal: {c}")?;
    let (im1, im2) = apply_cut(&t, c)?;
    writeln!(out, "image: {im1} {im2}")?;
    let bounds = psd.bounds(i);
    for im in [&im1, &im2] {
        if im.len() != t.k() || !validate_array(im, &bounds, &psd.admissible[i]) {
            return Err(CliError::Violation(format!("image {im} is not in T_{}", t.k())));
        }
    }
    Ok(())
}

pub struct VerifyArgs {
    pub file: Option<PathBuf>,
    pub suite: Option<(usize, usize)>,
    pub kmax: usize,
    pub seed: u64,
    pub random: usize,
}

fn verify_one(
    label: &str,
    region: &LadderRegion,
    bounds: &Bounds,
    kmax: usize,
    out: Out,
) -> Result<usize, CliError> {
    let report: InjectivityReport = verify_injectivity(region, bounds, kmax, DEFAULT_DOMAIN_CAP)?;
    for lv in &report.levels {
        if !lv.inequality_holds() {
            return Err(CliError::Violation(format!(
                "{label}: |T_{}| |T_{}| = {} * {} exceeds |T_{}|^2 = {}^2",
                lv.k + 1,
                lv.k - 1,
                lv.longer,
                lv.shorter,
                lv.k,
                lv.middle
            )));
        }
    }
    if let Some(v) = report.violation {
        writeln!(out, "{label}: violation")?;
        return Err(CliError::Violation(format!("{label}: {v}")));
    }
    Ok(report.levels.iter().map(|l| l.longer * l.shorter).sum())
}

pub fn verify(args: &VerifyArgs, out: Out) -> Result<(), CliError> {
    if let Some(file) = &args.file {
        let spec = load_problem(file)?;
        let psd = derive(&spec)?;
        let mut pairs = 0;
        for i in 0..psd.n() {
            pairs += verify_one(
                &format!("level {}", i + 1),
                &psd.admissible[i],
                &psd.bounds(i),
                args.kmax,
                out,
            )?;
        }
        writeln!(out, "levels: {}", psd.n())?;
        writeln!(out, "pairs mapped: {pairs}")?;
        writeln!(out, "violations: 0")?;
        return Ok(());
    }
    let (rows, cols) = args
        .suite
        .ok_or_else(|| CliError::Input("give a problem file or --suite RxC".into()))?;
    let mut regions = box_regions(rows, cols);
    let exhaustive = regions.len();
    regions.extend(random_regions(args.seed, args.random, cols as i64 - 1, rows as i64 - 1));
    writeln!(out, "seed: {}", args.seed)?;
    let m = Cogenerator::two_by_two();
    let mut pairs = 0;
    for (idx, region) in regions.iter().enumerate() {
        let psd = derive_path_system(region, &m)?;
        pairs += verify_one(
            &format!("region {}", idx + 1),
            &psd.admissible[0],
            &psd.bounds(0),
            args.kmax,
            out,
        )?;
    }
    writeln!(out, "regions: {exhaustive} exhaustive, {} random", args.random)?;
    writeln!(out, "pairs mapped: {pairs}")?;
    writeln!(out, "violations: 0")?;
    Ok(())
}

pub fn oracle(
    file: &Path,
    max_ell: usize,
    cap: usize,
    face: Option<&Path>,
    out: Out,
) -> Result<(), CliError> {
    let spec = load_problem(file)?;
    if let Some(face_file) = face {
        let psd = derive(&spec)?;
        let cells = load_face(face_file)?;
        let fam = light_and_shadow(&cells, &psd)?;
        for (i, t) in fam.reduced.iter().enumerate() {
            writeln!(out, "path {}: turns {} reduced {t}", i + 1, join(&fam.turns(i)))?;
        }
        writeln!(out, "reduced size: {}", fam.reduced_size())?;
        return Ok(());
    }
    let f = face_counts::<BigUint>(&spec.region, &spec.minor, cap)?;
    let series = hilbert_series::<BigUint>(&spec.region, &spec.minor)?;
    writeln!(out, "f = {}", join(&f))?;
    writeln!(out, "d = {}", series.denom_exponent)?;
    if series.numerator.get(0) != BigUint::from(1u32) {
        return Err(CliError::Violation(format!("h_0 = {} is not 1", series.numerator.get(0))));
    }
    for ell in 1..=max_ell {
        let by_series = hilbert_function(&series, ell);
        let by_faces = hilbert_via_faces(&f, ell);
        writeln!(out, "H({ell}) = {by_series} faces {by_faces}")?;
        if by_series != by_faces {
            return Err(CliError::Violation(format!(
                "H({ell}) is {by_series} from the h-vector but {by_faces} from faces"
            )));
        }
    }
    let report = preimage_formula_check::<BigUint>(&spec.region, &spec.minor, cap)?;
    let fams: Vec<String> = report
        .family_counts
        .iter()
        .map(|(k, c)| format!("{k}:{c}"))
        .collect();
    writeln!(out, "families by length: {}", fams.join(" "))?;
    writeln!(out, "preimage groups: {}", report.groups)?;
    if !report.is_ok() {
        return Err(CliError::Violation(format!(
            "preimage formula: {}",
            report.failures.join("; ")
        )));
    }
    writeln!(out, "preimage formula: ok")?;
    Ok(())
}

pub fn render(
    file: &Path,
    paths_file: Option<&Path>,
    output: &Path,
    out: Out,
) -> Result<(), CliError> {
    let spec = load_problem(file)?;
    let psd = derive(&spec)?;
    let paths = match paths_file {
        None => Vec::new(),
        Some(p) => load_paths(p)?,
    };
    if !paths.is_empty() && paths.len() != psd.n() {
        return Err(CliError::Input(format!(
            "expected {} paths, got {}",
            psd.n(),
            paths.len()
        )));
    }
    let bounds: Vec<Bounds> = (0..paths.len()).map(|i| psd.bounds(i)).collect();
    for (i, t) in paths.iter().enumerate() {
        if !validate_array(t, &bounds[i], &spec.region) {
            return Err(CliError::Input(format!(
                "path {} {t} leaves the region or its bounds",
                i + 1
            )));
        }
    }
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            if intersects(&paths[i], &bounds[i], &paths[j]) {
                return Err(CliError::Input(format!("paths {} and {} intersect", i + 1, j + 1)));
            }
        }
    }
    let doc = svg::render(&spec.region, &psd, &paths);
    std::fs::write(output, doc)
        .map_err(|e| CliError::Input(format!("{}: {e}", output.display())))?;
    writeln!(out, "wrote {}", output.display())?;
    Ok(())
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::NoAllowedCut(_) => CliError::Violation(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}
