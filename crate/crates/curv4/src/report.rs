//! Machine-readable report envelope shared by the CLI.
//!
//! The JSON layout is stable by construction: typed structs serialize in
//! declaration order, every numeric field is a finite double or the literal
//! string `"undefined"`, and nothing in the output depends on wall-clock time
//! or iteration order of hashed containers.

use serde::{Serialize, Serializer};
use std::fmt::Write as _;

/// A finite double or the `"undefined"` sentinel. NaN and infinities are
/// mapped to the sentinel rather than leaking into the output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(Option<f64>);

impl Num {
    pub fn of(v: f64) -> Self {
        if v.is_finite() {
            Num(Some(v))
        } else {
            Num(None)
        }
    }

    pub fn undefined() -> Self {
        Num(None)
    }

    pub fn from_option(v: Option<f64>) -> Self {
        v.map_or(Num(None), Num::of)
    }

    pub fn value(&self) -> Option<f64> {
        self.0
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Some(v) => s.serialize_f64(v),
            None => s.serialize_str("undefined"),
        }
    }
}

impl std::fmt::Display for Num {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.0 {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("undefined"),
        }
    }
}

/// One evaluated pinching condition.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionItem {
    pub id: String,
    pub lhs: Num,
    pub rhs: Num,
    pub margin: Num,
    pub holds: bool,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sub_margins: Option<[f64; 2]>,
}

/// Sharp-estimate certificate.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateItem {
    pub id: String,
    pub max_ratio: Num,
    pub argmax_lambda: [f64; 3],
    #[serde(rename = "argmax_A")]
    pub argmax_a: [f64; 3],
    pub attained_at_vertex: bool,
    pub violations: u64,
    pub samples: u64,
}

/// Violation totals of a sampling sweep.
#[derive(Debug, Clone, Serialize)]
pub struct CountsItem {
    pub id: String,
    pub samples: u64,
    pub violations: u64,
}

/// Block-structure report of a second-kind matrix.
#[derive(Debug, Clone, Serialize)]
pub struct StructureItem {
    pub id: String,
    pub k: Num,
    pub max_offdiag: f64,
    pub max_residual: f64,
    pub lambda: [f64; 3],
    pub mu: [f64; 3],
    pub diagonal: [f64; 9],
}

/// Spectrum-versus-reference comparison for a model operator.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumItem {
    pub id: String,
    pub model: String,
    pub scale: f64,
    pub signs_match: bool,
    pub multiplicities_match: bool,
    pub ratios_match: bool,
    pub spectrum: [f64; 9],
    pub reference: [f64; 9],
}

/// A named residual with its pass verdict.
#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub id: String,
    pub value: Num,
    pub pass: bool,
}

/// A named scalar (informational, no verdict).
#[derive(Debug, Clone, Serialize)]
pub struct ValueItem {
    pub id: String,
    pub value: Num,
}

/// A named label.
#[derive(Debug, Clone, Serialize)]
pub struct LabelItem {
    pub id: String,
    pub label: String,
}

/// Model catalog listing.
#[derive(Debug, Clone, Serialize)]
pub struct ListItem {
    pub id: String,
    pub models: Vec<String>,
}

/// Closed-form summary of one model point.
#[derive(Debug, Clone, Serialize)]
pub struct ModelItem {
    pub id: String,
    pub name: String,
    pub normalization: String,
    pub scalar: f64,
    pub ric0_norm: f64,
    pub wplus_spectrum: [f64; 3],
    pub wminus_spectrum: [f64; 3],
    pub det_wplus: f64,
    pub kahler_ratio: Num,
    pub soliton_residual: f64,
    pub f_value: f64,
    pub grad_f: [f64; 4],
    pub point: Vec<f64>,
    pub classification: String,
}

/// A failed computation, carried in-band so the envelope still serializes.
#[derive(Debug, Clone, Serialize)]
pub struct FailureItem {
    pub id: String,
    pub error: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum ResultItem {
    Condition(ConditionItem),
    Certificate(CertificateItem),
    Counts(CountsItem),
    Structure(StructureItem),
    Spectrum(SpectrumItem),
    Check(CheckItem),
    Value(ValueItem),
    Label(LabelItem),
    List(ListItem),
    Model(ModelItem),
    Failure(FailureItem),
    Section(Box<Envelope>),
}

/// Top-level report: `{"command", "seed", "model"?, "results", "pass"}`.
#[derive(Debug, Clone, Serialize)]
pub struct Envelope {
    pub command: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    pub results: Vec<ResultItem>,
    pub pass: bool,
}

impl Envelope {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Self {
            command: command.into(),
            seed,
            model: None,
            results: Vec::new(),
            pass: true,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        self.append_csv_rows(&mut out, &self.command, self.model.as_deref().unwrap_or(""));
        out
    }

    fn append_csv_rows(&self, out: &mut String, command: &str, model: &str) {
        for item in &self.results {
            match item {
                ResultItem::Section(env) => {
                    env.append_csv_rows(out, &env.command, env.model.as_deref().unwrap_or(""));
                }
                other => {
                    let r = CsvRow::from_item(other);
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{},{}",
                        command, model, r.id, r.lhs, r.rhs, r.margin, r.holds, r.samples,
                        r.violations, r.value
                    );
                }
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "command: {}   seed: {}   model: {}   pass: {}",
            self.command,
            self.seed,
            self.model.as_deref().unwrap_or("-"),
            self.pass
        );
        self.append_text_rows(&mut out, 0);
        out
    }

    fn append_text_rows(&self, out: &mut String, indent: usize) {
        let pad = "  ".repeat(indent);
        for item in &self.results {
            match item {
                ResultItem::Condition(c) => {
                    let _ = writeln!(
                        out,
                        "{pad}{:<16} lhs {:>16} rhs {:>16} margin {:>16} holds {}",
                        c.id,
                        sig9(&c.lhs),
                        sig9(&c.rhs),
                        sig9(&c.margin),
                        if c.applicable {
                            c.holds.to_string()
                        } else {
                            "n/a".to_string()
                        }
                    );
                }
                ResultItem::Certificate(c) => {
                    let _ = writeln!(
                        out,
                        "{pad}{:<16} max_ratio {} attained_at_vertex {} violations {} samples {}",
                        c.id,
                        sig9(&c.max_ratio),
                        c.attained_at_vertex,
                        c.violations,
                        c.samples
                    );
                    let _ = writeln!(
                        out,
                        "{pad}{:<16} argmax_lambda [{}, {}, {}]  argmax_A [{}, {}, {}]",
                        "",
                        sig9f(c.argmax_lambda[0]),
                        sig9f(c.argmax_lambda[1]),
                        sig9f(c.argmax_lambda[2]),
                        sig9f(c.argmax_a[0]),
                        sig9f(c.argmax_a[1]),
                        sig9f(c.argmax_a[2]),
                    );
                }
                ResultItem::Counts(c) => {
                    let _ = writeln!(
                        out,
                        "{pad}{:<16} samples {} violations {}",
                        c.id, c.samples, c.violations
                    );
                }
                ResultItem::Structure(s) => {
                    let _ = writeln!(
                        out,
                        "{pad}{:<16} k {} max_offdiag {} max_residual {}",
                        s.id,
                        sig9(&s.k),
                        sig9f(s.max_offdiag),
                        sig9f(s.max_residual)
                    );
                }
                ResultItem::Spectrum(s) => {
                    let _ = writeln!(
                        out,
                        "{pad}{:<16} model {} scale {} signs {} multiplicities {} ratios {}",
                        s.id,
                        s.model,
                        sig9f(s.scale),
                        s.signs_match,
                        s.multiplicities_match,
                        s.ratios_match
                    );
                }
                ResultItem::Check(c) => {
                    let _ = writeln!(
                        out,
                        "{pad}{:<24} {:>16} pass {}",
                        c.id,
                        sig9(&c.value),
                        c.pass
                    );
                }
                ResultItem::Value(v) => {
                    let _ = writeln!(out, "{pad}{:<24} {:>16}", v.id, sig9(&v.value));
                }
                ResultItem::Label(l) => {
                    let _ = writeln!(out, "{pad}{:<24} {}", l.id, l.label);
                }
                ResultItem::List(l) => {
                    let _ = writeln!(out, "{pad}{:<24} {}", l.id, l.models.join(" "));
                }
                ResultItem::Model(m) => {
                    let _ = writeln!(out, "{pad}model {} ({})", m.name, m.normalization);
                    let _ = writeln!(
                        out,
                        "{pad}  scalar {}  |ric0| {}  det W+ {}  kahler_ratio {}",
                        sig9f(m.scalar),
                        sig9f(m.ric0_norm),
                        sig9f(m.det_wplus),
                        sig9(&m.kahler_ratio)
                    );
                    let _ = writeln!(
                        out,
                        "{pad}  W+ spectrum [{}, {}, {}]  W- spectrum [{}, {}, {}]",
                        sig9f(m.wplus_spectrum[0]),
                        sig9f(m.wplus_spectrum[1]),
                        sig9f(m.wplus_spectrum[2]),
                        sig9f(m.wminus_spectrum[0]),
                        sig9f(m.wminus_spectrum[1]),
                        sig9f(m.wminus_spectrum[2]),
                    );
                    let _ = writeln!(
                        out,
                        "{pad}  soliton_residual {}  f {}  classification: {}",
                        sig9f(m.soliton_residual),
                        sig9f(m.f_value),
                        m.classification
                    );
                }
                ResultItem::Failure(f) => {
                    let _ = writeln!(out, "{pad}{:<16} FAILED: {}", f.id, f.error);
                }
                ResultItem::Section(env) => {
                    let _ = writeln!(
                        out,
                        "{pad}[{} {}] pass: {}",
                        env.command,
                        env.model.as_deref().unwrap_or("-"),
                        env.pass
                    );
                    env.append_text_rows(out, indent + 1);
                }
            }
        }
    }
}

const CSV_HEADER: &str = "command,model,id,lhs,rhs,margin,holds,samples,violations,value\n";

struct CsvRow {
    id: String,
    lhs: String,
    rhs: String,
    margin: String,
    holds: String,
    samples: String,
    violations: String,
    value: String,
}

impl CsvRow {
    fn empty(id: &str) -> Self {
        Self {
            id: id.to_string(),
            lhs: String::new(),
            rhs: String::new(),
            margin: String::new(),
            holds: String::new(),
            samples: String::new(),
            violations: String::new(),
            value: String::new(),
        }
    }

    fn from_item(item: &ResultItem) -> Self {
        match item {
            ResultItem::Condition(c) => {
                let mut r = Self::empty(&c.id);
                r.lhs = c.lhs.to_string();
                r.rhs = c.rhs.to_string();
                r.margin = c.margin.to_string();
                r.holds = if c.applicable {
                    c.holds.to_string()
                } else {
                    "n/a".to_string()
                };
                r
            }
            ResultItem::Certificate(c) => {
                let mut r = Self::empty(&c.id);
                r.samples = c.samples.to_string();
                r.violations = c.violations.to_string();
                r.value = c.max_ratio.to_string();
                r.holds = (c.violations == 0).to_string();
                r
            }
            ResultItem::Counts(c) => {
                let mut r = Self::empty(&c.id);
                r.samples = c.samples.to_string();
                r.violations = c.violations.to_string();
                r.holds = (c.violations == 0).to_string();
                r
            }
            ResultItem::Structure(s) => {
                let mut r = Self::empty(&s.id);
                r.value = s.k.to_string();
                r.margin = s.max_residual.to_string();
                r
            }
            ResultItem::Spectrum(s) => {
                let mut r = Self::empty(&format!("{}:{}", s.id, s.model));
                r.value = s.scale.to_string();
                r.holds = (s.signs_match && s.multiplicities_match && s.ratios_match).to_string();
                r
            }
            ResultItem::Check(c) => {
                let mut r = Self::empty(&c.id);
                r.value = c.value.to_string();
                r.holds = c.pass.to_string();
                r
            }
            ResultItem::Value(v) => {
                let mut r = Self::empty(&v.id);
                r.value = v.value.to_string();
                r
            }
            ResultItem::Label(l) => {
                let mut r = Self::empty(&l.id);
                r.value = l.label.clone();
                r
            }
            ResultItem::List(l) => {
                let mut r = Self::empty(&l.id);
                r.value = l.models.join(";");
                r
            }
            ResultItem::Model(m) => {
                let mut r = Self::empty(&format!("model:{}", m.name));
                r.value = m.soliton_residual.to_string();
                r
            }
            ResultItem::Failure(f) => {
                let mut r = Self::empty(&f.id);
                r.holds = "false".to_string();
                r.value = f.error.replace(',', ";");
                r
            }
            ResultItem::Section(_) => Self::empty("section"),
        }
    }
}

/// Nine significant digits.
fn sig9(n: &Num) -> String {
    match n.value() {
        Some(v) => sig9f(v),
        None => "undefined".to_string(),
    }
}

fn sig9f(v: f64) -> String {
    format!("{v:.8e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undefined_sentinel_and_nan_guard() {
        assert_eq!(serde_json::to_string(&Num::of(0.5)).unwrap(), "0.5");
        assert_eq!(
            serde_json::to_string(&Num::undefined()).unwrap(),
            "\"undefined\""
        );
        assert_eq!(
            serde_json::to_string(&Num::of(f64::NAN)).unwrap(),
            "\"undefined\""
        );
        assert_eq!(
            serde_json::to_string(&Num::of(f64::INFINITY)).unwrap(),
            "\"undefined\""
        );
    }

    #[test]
    fn envelope_has_the_stable_top_level_fields() {
        let mut env = Envelope::new("check pinch", 7);
        env.model = Some("s4".into());
        env.results.push(ResultItem::Value(ValueItem {
            id: "scalar_r".into(),
            value: Num::of(2.0),
        }));
        let v: serde_json::Value = serde_json::from_str(&env.to_json()).unwrap();
        assert_eq!(v["command"], "check pinch");
        assert_eq!(v["seed"], 7);
        assert_eq!(v["model"], "s4");
        assert_eq!(v["pass"], true);
        assert!(v["results"].is_array());
    }

    #[test]
    fn csv_rows_have_the_fixed_header() {
        let mut env = Envelope::new("verify kn", 1);
        env.results.push(ResultItem::Counts(CountsItem {
            id: "kn-duality".into(),
            samples: 10,
            violations: 0,
        }));
        let csv = env.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "command,model,id,lhs,rhs,margin,holds,samples,violations,value"
        );
        assert_eq!(lines.next().unwrap(), "verify kn,,kn-duality,,,,true,10,0,");
    }
}
