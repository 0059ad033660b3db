//! Row values and the CSV / JSON renderers.

use serde_json::{json, Map, Number};

/// Significant digits kept in every printed number.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(u64),
    Bool(bool),
    Text(String),
    /// Not applicable for this row (empty in CSV, `null` in JSON).
    Missing,
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Num(v)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as u64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<Option<f64>> for Value {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Value::Missing, Value::Num)
    }
}

/// Fixed notation for exponents in `[-4, 12)`, scientific otherwise, with
/// trailing zeros removed.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

impl Value {
    fn to_csv(&self) -> String {
        match self {
            Value::Num(v) => format_number(*v),
            Value::Int(v) => v.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Text(s) => s.clone(),
            Value::Missing => String::new(),
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            // Same rounding as the CSV so both formats carry identical numbers.
            Value::Num(v) => format_number(*v)
                .parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(serde_json::Value::Null, serde_json::Value::Number),
            Value::Int(v) => json!(v),
            Value::Bool(b) => json!(b),
            Value::Text(s) => json!(s),
            Value::Missing => serde_json::Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub command: String,
    pub seed: u64,
    pub params: Vec<(String, Value)>,
    pub ranges: Vec<String>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    /// RFC 4180: CRLF line endings, quoting only where needed.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Value::to_csv)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }

    pub fn to_json(&self) -> String {
        let params: Map<String, serde_json::Value> =
            self.params.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), v.to_json()))
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "meta": {
                "command": self.command,
                "version": env!("CARGO_PKG_VERSION"),
                "seed": self.seed,
                "params": params,
                "ranges": self.ranges,
                "columns": self.columns,
            },
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("serialisable");
        s.push('\n');
        s
    }
}
