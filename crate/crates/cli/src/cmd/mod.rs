//! Command implementations. Each returns whether everything it checked held;
//! input problems surface as [`InputError`].

pub mod algebra;
pub mod double;
pub mod rep;
pub mod tube;

use serde::Serialize;

use crate::input::Result;
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_bool(passed: bool) -> Self {
        if passed {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

/// Settings shared by every command.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub json: bool,
    pub seed: u64,
}

impl Ctx {
    pub fn emit(&self, report: &VerificationReport) -> Result<Outcome> {
        if self.json {
            println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
        } else {
            println!("{report}");
            eprintln!("elapsed {:.3}s", report.wall_time.as_secs_f64());
        }
        Ok(Outcome::from_bool(report.passed))
    }

    /// Prints `key value` lines, or one JSON object with the same fields.
    pub fn summary<T: Serialize>(&self, value: &T) {
        let js = serde_json::to_value(value).expect("summary serializes");
        if self.json {
            println!("{}", serde_json::to_string_pretty(&js).expect("summary serializes"));
            return;
        }
        if let serde_json::Value::Object(map) = js {
            for (k, v) in map {
                match v {
                    serde_json::Value::String(s) => println!("{k} {s}"),
                    other => println!("{k} {other}"),
                }
            }
        }
    }
}
