use clap::ValueEnum;
use jacobound::classical::{ahl_bounds, brt_optimize, h_lmd, weil_interval};
use jacobound::explicit::{optimize_mertens, optimize_n};
use jacobound::report::render_decimal;
use jacobound::zeta::numerator_from_counts;
use jacobound::{BoundReport, BoundSide, CurveProfile, Error, FillPolicy, Interval, Result, ZetaData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Lz,
    Mertens,
    Brt,
    Ahl,
    Lmd,
    Weil,
}

pub struct RunConfig {
    pub nmax: u32,
    pub bounds: Vec<BoundKind>,
    pub policy: FillPolicy,
    pub sig_digits: usize,
    pub experimental_ahl: bool,
}

/// One rendered output row; every format prints exactly these fields.
#[derive(Debug, Clone)]
pub struct BoundRow {
    pub name: String,
    pub side: BoundSide,
    pub value: String,
    pub integer: String,
    pub n: Option<u32>,
    pub policy: Option<FillPolicy>,
    pub assumptions: Vec<String>,
}

fn row(report: &BoundReport, sig: usize) -> Result<BoundRow> {
    Ok(BoundRow {
        name: report.name.clone(),
        side: report.side,
        value: render_decimal(&report.value, sig)?,
        integer: report.integer().to_string(),
        n: report.truncation,
        policy: report.policy,
        assumptions: report.assumptions.clone(),
    })
}

fn selection_note(map: &std::collections::BTreeMap<u32, u32>) -> String {
    let parts: Vec<String> = map.iter().map(|(r, x)| format!("{r}:{x}")).collect();
    format!("{{{}}}", parts.join(","))
}

/// Evaluates the requested bounds at working precision `prec`. Fails with
/// `PrecisionExhausted` when some value cannot be printed to `sig_digits`.
pub fn bound_rows(profile: &CurveProfile, config: &RunConfig, prec: u32) -> Result<Vec<BoundRow>> {
    let mut reports = Vec::new();
    let unknown_phi1 = profile.place_count(1).is_none();
    for kind in &config.bounds {
        match kind {
            BoundKind::Lz => {
                let (lo, hi) = optimize_n(profile, config.nmax, config.policy, prec)?;
                reports.push(lo);
                reports.push(hi);
            }
            BoundKind::Mertens => reports.push(optimize_mertens(profile, config.nmax, config.policy, prec)?),
            BoundKind::Brt => match brt_optimize(profile) {
                Ok(sel) => {
                    let mut r = BoundReport::new("h_brt", BoundSide::Lower, Interval::from_rational(&sel.value, prec))
                        .assume(format!("D1 ell={} D2 m={}", selection_note(&sel.ell), selection_note(&sel.m)));
                    if unknown_phi1 {
                        r = r.assume("unknown Phi_q taken as 0");
                    }
                    reports.push(r);
                }
                Err(e) => eprintln!("note: h_brt skipped: {e}"),
            },
            BoundKind::Ahl => {
                let a = ahl_bounds(profile, config.experimental_ahl);
                let best = a.variants.iter().filter(|v| v.value.is_some()).max_by(|x, y| x.value.cmp(&y.value));
                match best {
                    Some(v) => {
                        let value = v.value.as_ref().expect("filtered");
                        let mut r = BoundReport::new("h_ahl", BoundSide::Lower, Interval::from_rational(value, prec))
                            .assume(format!("best applicable variant ({})", v.index));
                        for skipped in a.variants.iter().filter(|v| v.value.is_none()) {
                            r = r.assume(format!(
                                "variant ({}) inapplicable: {}",
                                skipped.index,
                                skipped.inapplicable.as_deref().unwrap_or("")
                            ));
                        }
                        reports.push(r);
                    }
                    None => eprintln!("note: h_ahl skipped: no applicable variant"),
                }
                if let Some(x) = a.experimental {
                    eprintln!("note: experimental AHL variant (1), literal reading, not a bound: {x:e}");
                }
            }
            BoundKind::Lmd => reports.push(BoundReport::new(
                "h_lmd",
                BoundSide::Lower,
                Interval::from_rational(&h_lmd(profile.q, profile.genus), prec),
            )),
            BoundKind::Weil => {
                let (lo, hi) = weil_interval(profile.q, profile.genus, prec);
                reports.push(BoundReport::new("weil_lower", BoundSide::Lower, lo));
                reports.push(BoundReport::new("weil_upper", BoundSide::Upper, hi));
            }
        }
    }
    reports.iter().map(|r| row(r, config.sig_digits)).collect()
}

/// Zeta data from the point counts `N_1..N_g` (given or derived from places).
pub fn zeta_of(profile: &CurveProfile) -> Result<ZetaData> {
    let counts = (1..=profile.genus)
        .map(|n| {
            profile
                .point_count(n)
                .ok_or_else(|| Error::Profile(format!("point count N_{n} is missing")))
        })
        .collect::<Result<Vec<_>>>()?;
    numerator_from_counts(profile.q, profile.genus, &counts)
}
