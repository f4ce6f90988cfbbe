//! Side-by-side comparison of every transform on one mass function.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;

use crate::baseline::{
    pignistic, plausibility_transform, proportional_transform, relative_belief_transform,
};
use crate::entropy::{deng_entropy, shannon_entropy, EntropyValue};
use crate::entropy_match::EntropyMatch;
use crate::error::{Error, Result};
use crate::evidence::{IntervalConstraints, MassFunction, ProbabilityDistribution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Pignistic,
    Plausibility,
    RelativeBelief,
    Proportional,
    EntropyMatch,
}

impl Method {
    /// Report order.
    pub const ALL: [Method; 5] = [
        Method::Pignistic,
        Method::Plausibility,
        Method::RelativeBelief,
        Method::Proportional,
        Method::EntropyMatch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Pignistic => "pignistic",
            Method::Plausibility => "plausibility",
            Method::RelativeBelief => "relative-belief",
            Method::Proportional => "proportional",
            Method::EntropyMatch => "entropy-match",
        }
    }

    /// Runs the transform; `solver` only matters for [`Method::EntropyMatch`].
    pub fn apply(self, m: &MassFunction, solver: &EntropyMatch) -> Result<ProbabilityDistribution> {
        Ok(match self {
            Method::Pignistic => pignistic(m),
            Method::Plausibility => plausibility_transform(m),
            Method::RelativeBelief => relative_belief_transform(m)?,
            Method::Proportional => proportional_transform(m),
            Method::EntropyMatch => solver.run(m)?.distribution,
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Method::ALL.iter().map(|m| m.name()).collect();
                format!("unknown method `{s}`; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub distribution: ProbabilityDistribution,
    pub entropy: EntropyValue,
    /// `|Deng entropy of the input - entropy|`.
    pub gap: f64,
    pub argmax: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub name: Option<String>,
    pub deng_entropy: EntropyValue,
    pub bounds: IntervalConstraints,
    /// One entry per method, in [`Method::ALL`] order; `Err` holds the skip reason.
    pub rows: Vec<(Method, std::result::Result<ComparisonRow, String>)>,
}

/// Runs every transform on `m`. Failures become skip rows.
pub fn compare(m: &MassFunction, solver: &EntropyMatch) -> ComparisonReport {
    let target = deng_entropy(m, solver.base);
    let rows = Method::ALL
        .into_iter()
        .map(|method| {
            let row = method
                .apply(m, solver)
                .map(|p| {
                    let entropy = shannon_entropy(&p, solver.base);
                    ComparisonRow {
                        gap: (target.value - entropy.value).abs(),
                        argmax: p.frame().label(p.argmax()).to_string(),
                        distribution: p,
                        entropy,
                    }
                })
                .map_err(|e: Error| e.to_string());
            (method, row)
        })
        .collect();
    ComparisonReport {
        name: None,
        deng_entropy: target,
        bounds: m.singleton_bounds(),
        rows,
    }
}

/// [`compare`] over many inputs in parallel; output order follows input order.
pub fn compare_batch(inputs: &[MassFunction], solver: &EntropyMatch) -> Vec<ComparisonReport> {
    inputs.par_iter().map(|m| compare(m, solver)).collect()
}

fn fmt_probs(p: &[f64], precision: usize) -> String {
    let parts: Vec<String> = p.iter().map(|x| format!("{x:.precision$}")).collect();
    format!("({})", parts.join(", "))
}

impl ComparisonReport {
    /// Aligned plain-text table.
    pub fn to_table(&self, precision: usize) -> String {
        let frame = self.bounds.frame();
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "input: {name}");
        }
        let _ = writeln!(out, "log base: {}", self.deng_entropy.base);
        let _ = writeln!(out, "deng entropy: {:.precision$}", self.deng_entropy.value);
        let _ = writeln!(out, "frame: {}", frame.labels().join(" "));
        let _ = writeln!(out, "bel: {}", fmt_probs(self.bounds.lower(), precision));
        let _ = writeln!(out, "pl:  {}", fmt_probs(self.bounds.upper(), precision));

        let header = ["method", "distribution", "entropy", "gap", "argmax"];
        let mut cells: Vec<[String; 5]> = vec![header.map(String::from)];
        for (method, row) in &self.rows {
            cells.push(match row {
                Ok(r) => [
                    method.name().to_string(),
                    fmt_probs(r.distribution.probs(), precision),
                    format!("{:.precision$}", r.entropy.value),
                    format!("{:.precision$}", r.gap),
                    r.argmax.clone(),
                ],
                Err(reason) => [
                    method.name().to_string(),
                    format!("skipped: {reason}"),
                    String::new(),
                    String::new(),
                    String::new(),
                ],
            });
        }
        let widths: Vec<usize> = (0..5)
            .map(|c| {
                cells
                    .iter()
                    .map(|r| r[c].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        out
    }

    /// CSV rows appended to `writer`, one per method. Probabilities get one
    /// column per frame element.
    pub fn write_csv<W: std::io::Write>(
        &self,
        writer: &mut csv::Writer<W>,
        precision: usize,
    ) -> csv::Result<()> {
        let name = self.name.clone().unwrap_or_default();
        for (method, row) in &self.rows {
            let mut record = vec![
                name.clone(),
                method.name().to_string(),
                format!("{:.precision$}", self.deng_entropy.value),
            ];
            match row {
                Ok(r) => {
                    record.push(format!("{:.precision$}", r.entropy.value));
                    record.push(format!("{:.precision$}", r.gap));
                    record.push(r.argmax.clone());
                    record.push(String::new());
                    record.extend(
                        r.distribution
                            .probs()
                            .iter()
                            .map(|p| format!("{p:.precision$}")),
                    );
                }
                Err(reason) => {
                    record.extend([String::new(), String::new(), String::new(), reason.clone()]);
                }
            }
            writer.write_record(&record)?;
        }
        Ok(())
    }

    /// Header matching [`Self::write_csv`] for a frame of `n` elements.
    pub fn csv_header(labels: &[String]) -> Vec<String> {
        let mut h: Vec<String> = [
            "input",
            "method",
            "deng_entropy",
            "entropy",
            "gap",
            "argmax",
            "skipped",
        ]
        .map(String::from)
        .to_vec();
        h.extend(labels.iter().map(|l| format!("p({l})")));
        h
    }

    pub fn to_csv(&self, precision: usize) -> String {
        let mut w = csv::WriterBuilder::new()
            .flexible(true)
            .from_writer(Vec::new());
        w.write_record(Self::csv_header(self.bounds.frame().labels()))
            .and_then(|_| self.write_csv(&mut w, precision))
            .expect("writing to memory");
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8")
    }

    /// The method with the smallest gap among those that ran.
    pub fn best(&self) -> Option<Method> {
        self.rows
            .iter()
            .filter_map(|(m, r)| r.as_ref().ok().map(|r| (*m, r.gap)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .map(|(m, _)| m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evidence::Frame;

    fn example2() -> MassFunction {
        let frame = Frame::new(["w1", "w2", "w3"]).unwrap();
        MassFunction::new(
            frame,
            [
                (0b001, 0.4),
                (0b010, 0.05),
                (0b100, 0.1),
                (0b011, 0.1),
                (0b101, 0.2),
                (0b111, 0.15),
            ],
        )
        .unwrap()
    }

    #[test]
    fn example2_entropy_match_wins() {
        let r = compare(&example2(), &EntropyMatch::default());
        assert_eq!(r.rows.len(), 5);
        assert_eq!(r.best(), Some(Method::EntropyMatch));
        let (_, em) = r
            .rows
            .iter()
            .find(|(m, _)| *m == Method::EntropyMatch)
            .unwrap();
        let em = em.as_ref().unwrap();
        assert!((em.distribution.probs()[1] - 0.3).abs() < 1e-12);
        // 3.1807757083041763 - 1.5709505944546684
        assert!((em.gap - 1.6098251138495079).abs() < 1e-9);
        assert_eq!(em.argmax, "w1");
    }

    #[test]
    fn vacuous_skips_relative_belief() {
        let frame = Frame::new(["a", "b", "c", "d"]).unwrap();
        let m = MassFunction::new(frame, [(0b1111, 1.0)]).unwrap();
        let r = compare(&m, &EntropyMatch::default());
        for (method, row) in &r.rows {
            match method {
                Method::RelativeBelief => assert!(row.is_err()),
                _ => assert!(row
                    .as_ref()
                    .unwrap()
                    .distribution
                    .probs()
                    .iter()
                    .all(|&p| (p - 0.25).abs() < 1e-12)),
            }
        }
        let table = r.to_table(6);
        assert!(table.contains("skipped: transform undefined"));
        assert!(table.contains("log base: 2 (bits)"));
    }

    #[test]
    fn bayesian_rows_identical() {
        let frame = Frame::new(["a", "b"]).unwrap();
        let m = MassFunction::new(frame, [(1, 0.7), (2, 0.3)]).unwrap();
        let r = compare(&m, &EntropyMatch::default());
        for (_, row) in &r.rows {
            let row = row.as_ref().unwrap();
            assert!(row.gap < 1e-12);
            assert!((row.distribution.probs()[0] - 0.7).abs() < 1e-12);
        }
    }

    #[test]
    fn csv_has_one_line_per_method() {
        let csv = compare(&example2(), &EntropyMatch::default()).to_csv(4);
        assert_eq!(csv.lines().count(), 6);
        assert!(csv.starts_with("input,method,deng_entropy"));
    }

    #[test]
    fn method_names_roundtrip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>(), Ok(m));
        }
        assert!("bogus".parse::<Method>().is_err());
    }
}
