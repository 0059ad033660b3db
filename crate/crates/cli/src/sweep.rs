//! `--range key=start:stop:steps` parameter sweeps.

use std::str::FromStr;

#[derive(Debug, Clone, PartialEq)]
pub struct RangeSpec {
    pub key: String,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl RangeSpec {
    /// `steps` evenly spaced points including both ends.
    pub fn points(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        let h = (self.stop - self.start) / (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| if i + 1 == self.steps { self.stop } else { self.start + h * i as f64 })
            .collect()
    }
}

impl std::fmt::Display for RangeSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}={}:{}:{}", self.key, self.start, self.stop, self.steps)
    }
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (key, spec) = s
            .split_once('=')
            .ok_or_else(|| format!("expected key=start:stop:steps, got '{s}'"))?;
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, stop, steps] = parts[..] else {
            return Err(format!("expected start:stop:steps after '{key}=', got '{spec}'"));
        };
        let num = |t: &str| -> Result<f64, String> {
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("'{t}' is not a finite number"))
        };
        let steps: usize = steps
            .parse()
            .ok()
            .filter(|n| *n >= 1)
            .ok_or_else(|| format!("steps must be a positive integer, got '{steps}'"))?;
        if key.is_empty() {
            return Err("empty range key".into());
        }
        Ok(Self {
            key: key.to_string(),
            start: num(start)?,
            stop: num(stop)?,
            steps,
        })
    }
}

/// Cartesian product of the ranges, last range varying fastest.
pub fn grid(ranges: &[RangeSpec]) -> Vec<Vec<(String, f64)>> {
    let mut out = vec![Vec::new()];
    for r in ranges {
        let pts = r.points();
        out = out
            .into_iter()
            .flat_map(|prefix| {
                pts.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push((r.key.clone(), *v));
                    p
                })
            })
            .collect();
    }
    out
}
