//! h-vectors, Hilbert series and Hilbert functions.

use std::fmt;

use num_bigint::BigUint;

use crate::arrays::enumerate_families;
use crate::count::{binom, Count};
use crate::error::Result;
use crate::ladder::{derive_path_system, Cogenerator, LadderRegion};

/// Numerator coefficients `h_0 .. h_s`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector<C = BigUint> {
    coeffs: Vec<C>,
}

impl<C: Count> HVector<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(C::zero());
        }
        HVector { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Top degree `s`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `h_i`, zero beyond the top degree.
    pub fn get(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }
}

impl<C: Count> fmt::Display for HVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `numerator / (1 - z)^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries<C = BigUint> {
    pub numerator: HVector<C>,
    pub denom_exponent: usize,
}

impl<C: Count> fmt::Display for HilbertSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.numerator.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let one = c.is_one();
            terms.push(match (i, one) {
                (0, _) => c.to_string(),
                (1, true) => "z".to_string(),
                (1, false) => format!("{c}z"),
                (_, true) => format!("z^{i}"),
                (_, false) => format!("{c}z^{i}"),
            });
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        let num = if terms.len() > 1 {
            format!("({})", terms.join(" + "))
        } else {
            terms.remove(0)
        };
        match self.denom_exponent {
            0 => write!(f, "{num}"),
            1 => write!(f, "{num}/(1 - z)"),
            d => write!(f, "{num}/(1 - z)^{d}"),
        }
    }
}

/// `h_l` is the number of non-intersecting array families of total length `l`.
pub fn h_vector<C: Count>(region: &LadderRegion, m: &Cogenerator) -> Result<HVector<C>> {
    let psd = derive_path_system(region, m)?;
    let families = enumerate_families::<C>(&psd);
    let top = families.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![C::zero(); top + 1];
    for (l, c) in families {
        coeffs[l] = c;
    }
    Ok(HVector::new(coeffs))
}

pub fn hilbert_series<C: Count>(region: &LadderRegion, m: &Cogenerator) -> Result<HilbertSeries<C>> {
    let psd = derive_path_system(region, m)?;
    let numerator = h_vector(region, m)?;
    Ok(HilbertSeries {
        numerator,
        denom_exponent: psd.d,
    })
}

/// `H(l) = sum_m h_m binom(d + l - m - 1, d - 1)`, the coefficient of `z^l`.
pub fn hilbert_function<C: Count>(series: &HilbertSeries<C>, l: usize) -> C {
    let d = series.denom_exponent as i64;
    if d == 0 {
        return series.numerator.get(l);
    }
    let l = l as i64;
    series
        .numerator
        .coeffs()
        .iter()
        .enumerate()
        .fold(C::zero(), |acc, (m, h)| {
            let w: C = binom(d + l - m as i64 - 1, d - 1);
            acc + h.clone() * w
        })
}

/// `h_{i-1} h_{i+1} <= h_i^2` for every interior index.
pub fn is_log_concave<C: Count>(h: &HVector<C>) -> bool {
    h.coeffs()
        .windows(3)
        .all(|w| w[0].clone() * w[2].clone() <= w[1].clone() * w[1].clone())
}

/// Checks `(sum_{l <= l_max} H(l) z^l) (1 - z)^d == sum_m h_m z^m` modulo
/// `z^{l_max + 1}`. Returns the first degree where the two sides differ.
pub fn truncated_series_mismatch<C: Count>(series: &HilbertSeries<C>, l_max: usize) -> Option<usize> {
    let d = series.denom_exponent as i64;
    let values: Vec<C> = (0..=l_max).map(|l| hilbert_function(series, l)).collect();
    for j in 0..=l_max {
        // Signed sum split into its positive and negative parts.
        let mut pos = C::zero();
        let mut neg = C::zero();
        for i in 0..=(j as i64).min(d) {
            let term = binom::<C>(d, i) * values[j - i as usize].clone();
            if i % 2 == 0 {
                pos = pos + term;
            } else {
                neg = neg + term;
            }
        }
        if pos != neg + series.numerator.get(j) {
            return Some(j);
        }
    }
    None
}
