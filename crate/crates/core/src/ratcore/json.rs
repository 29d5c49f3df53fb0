//! Canonical JSON form of [`RatFuncQ`]:
//! `{"num":["c0","c1",...],"den":["d0",...]}`, coefficients as decimal
//! strings in ascending degree. The zero numerator is the empty array.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::qpoly::QPoly;
use super::ratfunc::RatFuncQ;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    num: Vec<String>,
    den: Vec<String>,
}

fn to_strings(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn parse_coeffs(field: &str, raw: &[String]) -> Result<QPoly> {
    let coeffs = raw
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let ok = !s.is_empty()
                && s.strip_prefix('-')
                    .unwrap_or(s)
                    .bytes()
                    .all(|b| b.is_ascii_digit())
                && s != "-";
            if !ok {
                return Err(Error::Malformed {
                    location: format!("{field}[{i}]"),
                    message: format!("not a decimal integer: {s:?}"),
                });
            }
            Ok(s.parse::<BigInt>().expect("validated digits"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QPoly::new(coeffs))
}

impl TryFrom<Wire> for RatFuncQ {
    type Error = Error;
    fn try_from(w: Wire) -> Result<Self> {
        let num = parse_coeffs("num", &w.num)?;
        let den = parse_coeffs("den", &w.den)?;
        if den.is_zero() {
            return Err(Error::Malformed {
                location: "den".into(),
                message: "denominator is zero".into(),
            });
        }
        RatFuncQ::new(num, den)
    }
}

impl Serialize for RatFuncQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            num: to_strings(self.num()),
            den: to_strings(self.den()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFuncQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        RatFuncQ::try_from(w).map_err(D::Error::custom)
    }
}

pub fn serialize(f: &RatFuncQ) -> String {
    serde_json::to_string(f).expect("RatFuncQ serialization is infallible")
}

pub fn deserialize(text: &str) -> Result<RatFuncQ> {
    let wire: Wire = serde_json::from_str(text).map_err(|e| Error::Malformed {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    RatFuncQ::try_from(wire)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn spec_examples() {
        assert_eq!(serialize(&RatFuncQ::one()), r#"{"num":["1"],"den":["1"]}"#);
        let eps1 = RatFuncQ::new(QPoly::from_i64s(&[0, -1]), QPoly::from_i64s(&[1, 0, 1])).unwrap();
        assert_eq!(serialize(&eps1), r#"{"num":["0","-1"],"den":["1","0","1"]}"#);
        assert_eq!(serialize(&RatFuncQ::zero()), r#"{"num":[],"den":["1"]}"#);
    }

    #[test]
    fn malformed_inputs_report_position() {
        match deserialize(r#"{"num":["1","x2"],"den":["1"]}"#) {
            Err(Error::Malformed { location, .. }) => assert_eq!(location, "num[1]"),
            other => panic!("unexpected {other:?}"),
        }
        match deserialize("{\"num\":[\"1\"],\n \"den\": 3}") {
            Err(Error::Malformed { location, .. }) => assert!(location.starts_with("line 2")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            deserialize(r#"{"num":["1"],"den":["0"]}"#),
            Err(Error::Malformed { .. })
        ));
        assert!(matches!(
            deserialize(r#"{"num":["1"],"den":["-"]}"#),
            Err(Error::Malformed { .. })
        ));
    }

    #[test]
    fn non_canonical_input_is_normalized() {
        let f = deserialize(r#"{"num":["-2","2"],"den":["-2","0","2"]}"#).unwrap();
        assert_eq!(serialize(&f), r#"{"num":["1"],"den":["1","1"]}"#);
    }

    fn arb_ratfunc() -> impl Strategy<Value = RatFuncQ> {
        (
            prop::collection::vec(-20i64..=20, 0..6),
            prop::collection::vec(-20i64..=20, 1..6),
        )
            .prop_filter_map("nonzero denominator", |(n, d)| {
                RatFuncQ::new(QPoly::from_i64s(&n), QPoly::from_i64s(&d)).ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn round_trip(f in arb_ratfunc()) {
            let text = serialize(&f);
            let back = deserialize(&text).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(serialize(&back), text);
        }
    }
}
