//! Text and JSON encodings of grossnumbers.
//!
//! The text form juxtaposes `digit@power` terms separated by spaces, from
//! the highest power down: `125@0 75@-1 15@-2 1@-3`. Zero is `0`. The
//! floor is not part of the text form.
//!
//! The JSON form keeps powers as strings so rational powers survive
//! exactly: `{"terms":[{"power":"-1","digit":75.0}],"floor":"-3"}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GrossNumber, GrossPower};
use crate::error::GrossError;
use crate::fmt::{format_human, format_machine};

/// How digits are rendered by [`GrossNumber::to_text`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DigitStyle {
    /// Round-trip exact.
    Machine,
    /// Six significant digits.
    Human,
}

impl GrossNumber {
    pub fn to_text(&self, style: DigitStyle) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let digit = match style {
            DigitStyle::Machine => format_machine,
            DigitStyle::Human => format_human,
        };
        self.terms()
            .iter()
            .map(|t| format!("{}@{}", digit(t.digit.value()), t.power))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for GrossNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(DigitStyle::Machine))
    }
}

impl FromStr for GrossNumber {
    type Err = GrossError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GrossError::InvalidText(s.to_string());
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(GrossNumber::zero());
        }
        let raw = s
            .split_whitespace()
            .map(|tok| {
                let (d, p) = tok.split_once('@').ok_or_else(bad)?;
                let digit: f64 = d.parse().map_err(|_| bad())?;
                let power: GrossPower = p.parse()?;
                Ok((power, digit))
            })
            .collect::<Result<Vec<_>, GrossError>>()?;
        GrossNumber::normalize(raw, None)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    power: String,
    digit: f64,
}

#[derive(Serialize, Deserialize)]
struct JsonNumber {
    terms: Vec<JsonTerm>,
    floor: Option<String>,
}

impl Serialize for GrossNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        JsonNumber {
            terms: self
                .terms()
                .iter()
                .map(|t| JsonTerm {
                    power: t.power.to_string(),
                    digit: t.digit.value(),
                })
                .collect(),
            floor: self.floor().map(|f| f.to_string()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GrossNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = JsonNumber::deserialize(deserializer)?;
        let floor = raw
            .floor
            .map(|f| f.parse::<GrossPower>())
            .transpose()
            .map_err(D::Error::custom)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| Ok((t.power.parse::<GrossPower>()?, t.digit)))
            .collect::<Result<Vec<_>, GrossError>>()
            .map_err(D::Error::custom)?;
        GrossNumber::normalize(terms, floor).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_canonical_text() {
        let x: GrossNumber = "125@0 75@-1 15@-2 1@-3".parse().unwrap();
        assert_eq!(x.to_string(), "125@0 75@-1 15@-2 1@-3");
        assert_eq!(GrossNumber::zero().to_string(), "0");
        let q: GrossNumber = "2.5@-47/10 -1@71/5".parse().unwrap();
        assert_eq!(q.to_string(), "-1@71/5 2.5@-47/10");
    }

    #[test]
    fn human_text_rounds_to_six_digits() {
        let x = GrossNumber::normalize(
            [
                (GrossPower::ZERO, 10.0 / 3.0),
                (GrossPower::integer(-3), -1.0 / 81.0),
            ],
            None,
        )
        .unwrap();
        assert_eq!(x.to_text(DigitStyle::Human), "3.33333@0 -0.0123457@-3");
    }

    #[test]
    fn machine_text_round_trips_exactly() {
        let x = GrossNumber::normalize(
            [
                (GrossPower::ZERO, 10.0 / 3.0),
                (GrossPower::integer(-1), 1e-200),
            ],
            None,
        )
        .unwrap();
        assert_eq!(x.to_string().parse::<GrossNumber>().unwrap(), x);
    }

    #[test]
    fn rejects_malformed_text() {
        for s in ["5", "a@0", "1@x", "1@1/0"] {
            assert!(s.parse::<GrossNumber>().is_err(), "{s}");
        }
    }

    #[test]
    fn json_encoding() {
        let x: GrossNumber = "125@0 75@-1".parse().unwrap();
        let x = x.truncate(GrossPower::integer(-3));
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"power":"0","digit":125.0},{"power":"-1","digit":75.0}],"floor":"-3"}"#
        );
        let back: GrossNumber = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        let none: GrossNumber = serde_json::from_str(r#"{"terms":[],"floor":null}"#).unwrap();
        assert_eq!(none, GrossNumber::zero());
        assert!(serde_json::from_str::<GrossNumber>(
            r#"{"terms":[{"power":"1/0","digit":1.0}],"floor":null}"#
        )
        .is_err());
    }
}
