//! Curve profile files.
//!
//! ```json
//! {"name": "H2", "q": 4, "g": 5, "places": {"1": 16}, "points": {"2": 17}}
//! ```
//!
//! `name` and `places` may be omitted; unknown keys are rejected.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curve::{validate_profile, CurveProfile};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileFile {
    #[serde(default)]
    pub name: String,
    pub q: u64,
    pub g: u32,
    #[serde(default)]
    pub places: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<BTreeMap<String, i64>>,
}

fn degrees(map: &BTreeMap<String, i64>, what: &str) -> Result<BTreeMap<u32, i64>> {
    map.iter()
        .map(|(k, &v)| {
            // decimal digits only: no sign, no whitespace
            if k.is_empty() || !k.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Profile(format!("{what} key {k:?} is not a decimal degree")));
            }
            let d: u32 = k
                .parse()
                .map_err(|_| Error::Profile(format!("{what} key {k:?} is out of range")))?;
            Ok((d, v))
        })
        .collect()
}

impl ProfileFile {
    pub fn into_profile(self) -> Result<CurveProfile> {
        let places = degrees(&self.places, "places")?;
        let points = match &self.points {
            Some(p) => degrees(p, "points")?,
            None => BTreeMap::new(),
        };
        validate_profile(CurveProfile::new(self.name, self.q, self.g).with_places(places).with_points(points))
    }
}

impl From<&CurveProfile> for ProfileFile {
    fn from(p: &CurveProfile) -> Self {
        let keyed = |m: &BTreeMap<u32, i64>| m.iter().map(|(k, &v)| (k.to_string(), v)).collect();
        ProfileFile {
            name: p.name.clone(),
            q: p.q,
            g: p.genus,
            places: keyed(&p.places),
            points: (!p.points.is_empty()).then(|| keyed(&p.points)),
        }
    }
}

/// Parses and validates a profile from JSON text.
pub fn parse_profile(text: &str) -> Result<CurveProfile> {
    let file: ProfileFile = serde_json::from_str(text).map_err(|e| Error::Profile(e.to_string()))?;
    file.into_profile()
}

pub fn read_profile(path: &Path) -> Result<CurveProfile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Profile(format!("{}: {e}", path.display())))?;
    parse_profile(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_and_full_profiles() {
        let p = parse_profile(r#"{"q": 4, "g": 5, "places": {"1": 16}}"#).unwrap();
        assert_eq!((p.q, p.genus, p.places[&1]), (4, 5, 16));
        assert_eq!(p.name, "");
        let p = parse_profile(r#"{"name": "E", "q": 2, "g": 1, "points": {"1": 3}}"#).unwrap();
        assert!(p.places.is_empty());
        assert_eq!(p.points[&1], 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_profile(r#"{"q": 4, "g": 5, "extra": 1}"#), Err(Error::Profile(_))));
        assert!(matches!(parse_profile(r#"{"q": 4, "g": 5, "places": {"x": 1}}"#), Err(Error::Profile(_))));
        assert!(matches!(parse_profile(r#"{"q": 4, "g": 5, "places": {"-1": 1}}"#), Err(Error::Profile(_))));
        assert!(matches!(parse_profile(r#"{"q": 4}"#), Err(Error::Profile(_))));
        assert_eq!(parse_profile(r#"{"q": 6, "g": 1}"#), Err(Error::NonPrimePower(6)));
        assert_eq!(
            parse_profile(r#"{"q": 2, "g": 1, "places": {"1": 6}}"#),
            Err(Error::WeilViolation { degree: 1 })
        );
        assert_eq!(parse_profile(r#"{"q": 2, "g": 1, "places": {"0": 1}}"#), Err(Error::InvalidDegree(0)));
    }

    #[test]
    fn round_trips_through_json() {
        let p = CurveProfile::new("F2", 2, 5).with_places([(1, 2), (2, 7)]);
        let text = serde_json::to_string(&ProfileFile::from(&p)).unwrap();
        assert_eq!(parse_profile(&text).unwrap(), p);
    }
}
