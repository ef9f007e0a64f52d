//! Recomputes the fixture tables and compares against the printed values.

use rayon::prelude::*;
use rug::{Integer, Rational};
use serde::Serialize;

use crate::classical::{ahl_bounds, brt_optimize};
use crate::curve::FillPolicy;
use crate::error::Result;
use crate::explicit::optimize_n;
use crate::fixtures::{all_rows, FixtureRow, PrintedValue};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub printed: String,
    /// Integer refinement of the computed lower bound.
    pub computed: String,
    /// `(computed − printed)/printed`
    pub deviation: f64,
    pub tolerance: f64,
    pub matches: bool,
}

impl Comparison {
    pub fn new(printed: PrintedValue, computed: &Integer) -> Self {
        let p = printed.value();
        let deviation = ((Rational::from(computed) - &p) / &p).to_f64();
        let tolerance = printed.tolerance();
        Comparison {
            printed: printed.0.to_string(),
            computed: computed.to_string(),
            deviation,
            tolerance,
            matches: deviation.abs() <= tolerance,
        }
    }

    pub fn computed_integer(&self) -> Integer {
        self.computed.parse().expect("integer rendering")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowOutcome {
    pub label: String,
    pub citation: String,
    pub q: u64,
    pub genus: u32,
    pub h_lz: Comparison,
    pub n_printed: u32,
    pub n_computed: u32,
    pub h_brt: Option<Comparison>,
    /// Compared against AHL variant (3), the variant the printed column uses.
    pub h_ahl: Option<Comparison>,
    pub exact_h: Option<u64>,
}

impl RowOutcome {
    pub fn n_matches(&self) -> bool {
        self.n_printed == self.n_computed
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub h_lz_matches: usize,
    pub n_matches: usize,
    pub h_brt_rows: usize,
    pub h_brt_matches: usize,
    pub h_ahl_rows: usize,
    pub h_ahl_matches: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reproduction {
    pub nmax: u32,
    pub policy: FillPolicy,
    pub rows: Vec<RowOutcome>,
    pub summary: Summary,
}

pub fn reproduce_row(row: &FixtureRow, nmax: u32, policy: FillPolicy, prec: u32) -> Result<RowOutcome> {
    let profile = row.profile();
    let (lower, _) = optimize_n(&profile, nmax, policy, prec)?;
    let h_brt = match row.h_brt {
        Some(printed) => {
            let v = brt_optimize(&profile)?.value;
            Some(Comparison::new(printed, &v.ceil().into_numer_denom().0))
        }
        None => None,
    };
    let h_ahl = row.h_ahl.and_then(|printed| {
        let report = ahl_bounds(&profile, false);
        let v = report.variant(3)?.value.clone()?;
        Some(Comparison::new(printed, &v.ceil().into_numer_denom().0))
    });
    Ok(RowOutcome {
        label: row.label.to_string(),
        citation: row.citation.to_string(),
        q: row.q,
        genus: row.genus,
        h_lz: Comparison::new(row.h_lz, &lower.integer()),
        n_printed: row.n,
        n_computed: lower.truncation.expect("optimised bound carries N"),
        h_brt,
        h_ahl,
        exact_h: row.exact_h,
    })
}

/// Recomputes every fixture row in parallel; output keeps fixture order.
pub fn reproduce(nmax: u32, policy: FillPolicy, prec: u32) -> Result<Reproduction> {
    let rows: Vec<RowOutcome> = all_rows()
        .par_iter()
        .map(|r| reproduce_row(r, nmax, policy, prec))
        .collect::<Result<_>>()?;
    let count = |f: &dyn Fn(&RowOutcome) -> bool| rows.iter().filter(|r| f(r)).count();
    let summary = Summary {
        rows: rows.len(),
        h_lz_matches: count(&|r| r.h_lz.matches),
        n_matches: count(&|r| r.n_matches()),
        h_brt_rows: count(&|r| r.h_brt.is_some()),
        h_brt_matches: count(&|r| r.h_brt.as_ref().is_some_and(|c| c.matches)),
        h_ahl_rows: count(&|r| r.h_ahl.is_some()),
        h_ahl_matches: count(&|r| r.h_ahl.as_ref().is_some_and(|c| c.matches)),
    };
    Ok(Reproduction { nmax, policy, rows, summary })
}
