//! Graded dimensions by each of the three methods.

use anyhow::{anyhow, bail, Result};
use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;

use pseudoroot::combinatorics::family_counts;
use pseudoroot::presentations::dual_basis_words;
use pseudoroot::series::{theorem1_series, theorem2_series};
use pseudoroot::{Family, Field, QuadraticPresentation, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum, Serialize)]
pub enum Algebra {
    #[value(name = "qn")]
    #[serde(rename = "qn")]
    Qn,
    #[value(name = "qn_dual")]
    #[serde(rename = "qn_dual")]
    QnDual,
    #[value(name = "xn")]
    #[serde(rename = "xn")]
    Xn,
    #[value(name = "gr_dual")]
    #[serde(rename = "gr_dual")]
    GrDual,
}

impl Algebra {
    pub fn id(self) -> &'static str {
        match self {
            Algebra::Qn => "qn",
            Algebra::QnDual => "qn_dual",
            Algebra::Xn => "xn",
            Algebra::GrDual => "gr_dual",
        }
    }

    pub fn is_dual(self) -> bool {
        matches!(self, Algebra::QnDual | Algebra::GrDual)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Engine,
    Strings,
    Series,
}

impl Method {
    pub fn id(self) -> &'static str {
        match self {
            Method::Engine => "engine",
            Method::Strings => "strings",
            Method::Series => "series",
        }
    }
}

pub fn presentation<S: Field>(algebra: Algebra, n: usize) -> Result<QuadraticPresentation<S>> {
    Ok(match algebra {
        Algebra::Qn => QuadraticPresentation::qn(n)?,
        Algebra::QnDual => QuadraticPresentation::qn(n)?.koszul_dual(),
        Algebra::Xn => QuadraticPresentation::xn(n)?,
        Algebra::GrDual => QuadraticPresentation::gr_dual(n)?,
    })
}

pub fn engine_dims<S: Field>(algebra: Algebra, n: usize, max_degree: usize) -> Result<Vec<u128>> {
    let p = presentation::<S>(algebra, n)?;
    Ok(p.dims(max_degree)?.into_iter().map(|d| d as u128).collect())
}

/// Sizes of the monomial bases: `Y` strings for `Q_n`, the words `S(A:B)` for the dual.
pub fn string_dims(algebra: Algebra, n: usize, max_degree: usize) -> Result<Vec<u128>> {
    if !algebra.is_dual() {
        return Ok(family_counts(n, &Family::Y, max_degree)?);
    }
    let mut out = vec![0u128; max_degree + 1];
    out[0] = 1;
    for w in dual_basis_words(n)? {
        if w.degree() <= max_degree {
            out[w.degree()] += 1;
        }
    }
    Ok(out)
}

pub fn series_dims(algebra: Algebra, n: usize, max_degree: usize) -> Result<Vec<u128>> {
    let s = if algebra.is_dual() {
        theorem2_series::<Rational>(n, max_degree)
    } else {
        theorem1_series::<Rational>(n, max_degree)
    };
    s.coeffs()
        .iter()
        .map(|c| to_u128(&c.to_integer()))
        .collect()
}

fn to_u128(x: &BigInt) -> Result<u128> {
    u128::try_from(x).map_err(|_| anyhow!("coefficient {x} does not fit in 128 bits"))
}

pub fn method_dims<S: Field>(
    algebra: Algebra,
    method: Method,
    n: usize,
    max_degree: usize,
) -> Result<Vec<u128>> {
    match method {
        Method::Engine => engine_dims::<S>(algebra, n, max_degree),
        Method::Strings => string_dims(algebra, n, max_degree),
        Method::Series => series_dims(algebra, n, max_degree),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimRow {
    pub algebra: Algebra,
    pub n: usize,
    pub degree: usize,
    pub dim: u128,
    pub method: Method,
}

pub fn rows(algebra: Algebra, method: Method, n: usize, dims: &[u128]) -> Vec<DimRow> {
    dims.iter()
        .enumerate()
        .map(|(degree, &dim)| DimRow {
            algebra,
            n,
            degree,
            dim,
            method,
        })
        .collect()
}

pub fn check_n(n: usize) -> Result<()> {
    if n > pseudoroot::SubsetMask::MAX_N {
        bail!(
            "n = {n} exceeds the maximum {}",
            pseudoroot::SubsetMask::MAX_N
        );
    }
    Ok(())
}
