//! Report documents and their text, JSON and CSV renderings.

use std::io::{self, Write};

use num_bigint::BigInt;
use num_complex::Complex64;
use serde_json::{json, Number, Value};
use twobridge::riley::Verdict;
use twobridge::{Gf2Polynomial, IntPolynomial, KnotClass, TwoBridgeForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Rows for CSV output; every row has one cell per header.
#[derive(Debug, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Table { headers: headers.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

/// Output of one subcommand.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub text: String,
    pub table: Table,
    /// A requested certificate or numeric check failed.
    pub failed: bool,
}

impl Report {
    pub fn document(&self, timing_ms: u64) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "toolkit_version": twobridge::VERSION,
            "timing_ms": timing_ms,
        })
    }

    pub fn write(&self, format: Format, timing_ms: u64, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Text => out.write_all(self.text.as_bytes()),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.document(timing_ms))?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.table.headers)?;
                for row in &self.table.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
        }
    }
}

/// ANSI highlighting for verdict words, off unless stdout is a terminal and
/// `NO_COLOR` is unset.
#[derive(Debug, Clone, Copy)]
pub struct Style {
    pub color: bool,
}

impl Style {
    pub fn detect() -> Self {
        use std::io::IsTerminal;
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Style { color: !no_color && io::stdout().is_terminal() }
    }

    fn paint(&self, s: &str, code: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn good(&self, s: &str) -> String {
        self.paint(s, "32")
    }

    pub fn bad(&self, s: &str) -> String {
        self.paint(s, "31")
    }

    pub fn verdict(&self, v: Verdict) -> String {
        match v {
            Verdict::Certified => self.good(v.as_str()),
            Verdict::Failed => self.bad(v.as_str()),
        }
    }

    pub fn flag(&self, ok: bool) -> String {
        if ok {
            self.good("yes")
        } else {
            self.bad("no")
        }
    }
}

pub fn int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

/// Ascending coefficient list.
pub fn coeffs(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(int).collect())
}

pub fn gf2_bits(p: &Gf2Polynomial) -> Value {
    Value::Array(p.bits().into_iter().map(|b| json!(u8::from(b))).collect())
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn form(f: &TwoBridgeForm) -> Value {
    json!({ "p": f.p(), "q": f.q(), "mirror_flag": f.mirror_flag() })
}

pub fn class(c: &KnotClass) -> Value {
    match c {
        KnotClass::Torus { r, s } => json!({ "kind": "torus", "r": r, "s": s }),
        KnotClass::Hyperbolic => json!({ "kind": "hyperbolic" }),
    }
}

pub fn class_name(c: &KnotClass) -> String {
    match c {
        KnotClass::Torus { r, s } => format!("torus({r},{s})"),
        KnotClass::Hyperbolic => "hyperbolic".to_string(),
    }
}

/// Space-separated ascending coefficients for CSV cells.
pub fn coeff_cell(p: &IntPolynomial) -> String {
    let cells: Vec<String> = p.coeffs().iter().map(BigInt::to_string).collect();
    cells.join(" ")
}

pub fn key_cell(key: &[u32]) -> String {
    let cells: Vec<String> = key.iter().map(u32::to_string).collect();
    cells.join(" ")
}
