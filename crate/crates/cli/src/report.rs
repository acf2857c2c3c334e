//! Report assembly and deterministic JSON / CSV encoding.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::{Map, Value};

pub const TOOL_VERSION: &str = concat!("landau-cli ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Exploratory,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Exploratory => "exploratory",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Fail => 1,
            Status::Ok | Status::Exploratory => 0,
        }
    }
}

/// `%.17g`-style text for a double. Seventeen significant digits always
/// round-trip; trailing zeros are trimmed so `1.0` prints as `1`.
pub fn format_f64(v: f64) -> String {
    if !v.is_finite() {
        return if v.is_nan() {
            "NaN".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if v == 0.0 {
        // keep the sign of negative zero through a JSON round trip
        return if v.is_sign_negative() {
            "-0.0".into()
        } else {
            "0".into()
        };
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        trim_fraction(&format!("{v:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim_fraction(mantissa))
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Compact JSON whose floats go through [`format_f64`].
struct RoundTripFormatter;

impl Formatter for RoundTripFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_f64(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

pub fn to_json_string(value: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, RoundTripFormatter);
    value
        .serialize(&mut ser)
        .expect("serializing a Value cannot fail");
    String::from_utf8(out).expect("JSON is UTF-8")
}

pub fn value_of<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format_f64(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => value_of(v),
            Cell::Int(v) => Value::from(*v),
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// A flat table backing both the CSV output and the JSON `rows` array.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Self {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .headers
                        .iter()
                        .cloned()
                        .zip(row.iter().map(Cell::json))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn write_csv<W: Write>(&self, w: W) -> csv::Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        wtr.write_record(&self.headers)?;
        for row in &self.rows {
            wtr.write_record(row.iter().map(Cell::csv))?;
        }
        wtr.flush()?;
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub inputs: BTreeMap<String, Value>,
    pub fields: BTreeMap<String, Value>,
    pub table: Table,
    pub status: Status,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            inputs: BTreeMap::new(),
            fields: BTreeMap::new(),
            table: Table::default(),
            status: Status::Ok,
        }
    }

    pub fn input(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.inputs.insert(key.to_string(), value_of(&v));
        self
    }

    pub fn field(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.fields.insert(key.to_string(), value_of(&v));
        self
    }

    pub fn to_value(&self) -> Value {
        let mut obj: BTreeMap<String, Value> = self.fields.clone();
        obj.insert("command".into(), Value::String(self.command.into()));
        obj.insert("inputs".into(), value_of(&self.inputs));
        obj.insert("rows".into(), self.table.json_rows());
        obj.insert("status".into(), Value::String(self.status.as_str().into()));
        obj.insert("tool_version".into(), Value::String(TOOL_VERSION.into()));
        value_of(&obj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digit_format() {
        assert_eq!(format_f64(1.0), "1");
        assert_eq!(format_f64(0.1), "0.10000000000000001");
        assert_eq!(format_f64(-2.5), "-2.5");
        assert_eq!(format_f64(1e-7), "9.9999999999999995e-8");
        assert_eq!(format_f64(1.5e20), "1.5e20");
        assert_eq!(format_f64(0.0), "0");
        assert_eq!(format_f64(-0.0), "-0.0");
    }

    #[test]
    fn formatted_values_parse_back_exactly() {
        for v in [
            std::f64::consts::PI,
            1.0 / 3.0,
            2.2976e-300,
            6.02e23,
            -1e-5,
            123456.789,
            f64::MAX,
            f64::MIN_POSITIVE,
        ] {
            let s = format_f64(v);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), v.to_bits(), "{s}");
        }
    }

    #[test]
    fn json_uses_round_trip_floats() {
        let v = serde_json::json!({"b": 0.1, "a": [1.0, 2]});
        assert_eq!(to_json_string(&v), r#"{"a":[1,2],"b":0.10000000000000001}"#);
    }
}
