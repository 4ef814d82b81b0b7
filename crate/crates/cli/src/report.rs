//! Structured command results and their text/JSON renderings.
//!
//! Rationals are rendered canonically (`p/q`, `q > 0`, lowest terms; integers
//! without a denominator). JSON objects have sorted keys, and nothing in a
//! report depends on time or hashing unless timing was requested.

use std::collections::BTreeMap;

use logchern_core::{Cls, Evidence, GradedRing, Verdict, Q};
use serde::{Deserialize, Serialize};

/// Coefficients by real degree, then by basis monomial.
pub type Coefficients = BTreeMap<String, BTreeMap<String, String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub name: String,
    /// Nonzero components in ascending degree, as `(degree, text)`.
    pub components: Vec<(u32, String)>,
    pub coefficients: Coefficients,
}

impl ClassReport {
    pub fn new(name: impl Into<String>, c: &Cls) -> Self {
        let ring = c.ring();
        let mut coefficients = Coefficients::new();
        for d in c.nonzero_degrees() {
            let row = ring
                .basis(d)
                .iter()
                .zip(c.coords(d))
                .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
                .map(|(m, x)| (ring.render_monomial(m), x.to_string()))
                .collect();
            coefficients.insert(d.to_string(), row);
        }
        ClassReport { name: name.into(), components: c.render_components(), coefficients }
    }

    pub fn inline(&self) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (_, t) in &self.components {
            if out.is_empty() {
                out.push_str(t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OffenderReport {
    pub degree: u32,
    pub monomial: String,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub name: String,
    pub pass: bool,
    /// Failures of advisory checks do not change the exit code.
    #[serde(default)]
    pub advisory: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<ClassReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<ClassReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub difference: Option<ClassReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs_value: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs_value: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table: Vec<(String, Vec<i64>)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub non_integral: Vec<OffenderReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerdictReport {
    pub fn from_verdict(v: &Verdict) -> Self {
        let mut r = VerdictReport {
            name: v.name.clone(),
            pass: v.holds,
            advisory: false,
            lhs: None,
            rhs: None,
            difference: None,
            first_discrepancy: v.first_discrepancy(),
            lhs_value: None,
            rhs_value: None,
            table: Vec::new(),
            non_integral: Vec::new(),
            note: None,
        };
        match &v.evidence {
            Evidence::Classes { lhs, rhs, difference } => {
                r.lhs = Some(ClassReport::new("lhs", lhs));
                r.rhs = Some(ClassReport::new("rhs", rhs));
                if !v.holds {
                    r.difference = Some(ClassReport::new("difference", difference));
                }
            }
            Evidence::Scalars { lhs, rhs } => {
                r.lhs_value = Some(lhs.to_string());
                r.rhs_value = Some(rhs.to_string());
            }
            Evidence::Table { rows } => r.table = rows.clone(),
            Evidence::Integrality { report, .. } => {
                r.non_integral = report
                    .offending
                    .iter()
                    .map(|o| OffenderReport { degree: o.degree, monomial: o.monomial.clone(), coefficient: o.coefficient.to_string() })
                    .collect();
            }
            Evidence::Note(t) => r.note = Some(t.clone()),
        }
        r
    }

    pub fn advisory(mut self) -> Self {
        self.advisory = true;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorReport {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    pub generators: Vec<GeneratorReport>,
    pub relations: Vec<String>,
    pub betti: Vec<usize>,
}

impl RingReport {
    pub fn new(ring: &GradedRing) -> Self {
        RingReport {
            generators: ring.generators().iter().map(|g| GeneratorReport { name: g.name.clone(), degree: g.degree }).collect(),
            relations: ring.presentation().relations.iter().map(|p| ring.render_relation(p)).collect(),
            betti: ring.betti(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingReport>,
    #[serde(default)]
    pub classes: Vec<ClassReport>,
    /// Named exact numbers such as integrals.
    #[serde(default)]
    pub values: Vec<(String, String)>,
    #[serde(default)]
    pub verdicts: Vec<VerdictReport>,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            ring: None,
            classes: Vec::new(),
            values: Vec::new(),
            verdicts: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn class(&mut self, name: impl Into<String>, c: &Cls) -> &mut Self {
        self.classes.push(ClassReport::new(name, c));
        self
    }

    pub fn value(&mut self, name: impl Into<String>, q: &Q) -> &mut Self {
        self.values.push((name.into(), q.to_string()));
        self
    }

    pub fn verdict(&mut self, v: &Verdict) -> &mut Self {
        self.verdicts.push(VerdictReport::from_verdict(v));
        self
    }

    pub fn verdicts<'a>(&mut self, vs: impl IntoIterator<Item = &'a Verdict>) -> &mut Self {
        for v in vs {
            self.verdict(v);
        }
        self
    }

    pub fn advisory_verdict(&mut self, v: &Verdict) -> &mut Self {
        self.verdicts.push(VerdictReport::from_verdict(v).advisory());
        self
    }

    pub fn note(&mut self, n: impl Into<String>) -> &mut Self {
        self.notes.push(n.into());
        self
    }

    /// No non-advisory verdict failed.
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass || v.advisory)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TextOptions {
    /// Hide class components above this real degree.
    pub max_degree: Option<u32>,
}

fn write_class(out: &mut String, indent: &str, c: &ClassReport, opts: TextOptions) {
    let shown: Vec<&(u32, String)> =
        c.components.iter().filter(|(d, _)| opts.max_degree.map_or(true, |m| *d <= m)).collect();
    if shown.is_empty() {
        out.push_str(&format!("{indent}0\n"));
    }
    for (d, t) in shown {
        out.push_str(&format!("{indent}deg {d}: {t}\n"));
    }
    if shown_len(c, opts) < c.components.len() {
        out.push_str(&format!("{indent}(components above degree {} hidden)\n", opts.max_degree.unwrap_or(0)));
    }
}

fn shown_len(c: &ClassReport, opts: TextOptions) -> usize {
    c.components.iter().filter(|(d, _)| opts.max_degree.map_or(true, |m| *d <= m)).count()
}

pub fn emit_text(r: &Report, opts: TextOptions) -> String {
    let mut out = format!("command: {}\n", r.command);
    for (k, v) in &r.inputs {
        out.push_str(&format!("{k}: {v}\n"));
    }
    if let Some(ring) = &r.ring {
        let gens: Vec<String> = ring.generators.iter().map(|g| format!("{} (degree {})", g.name, g.degree)).collect();
        out.push_str(&format!("ring generators: {}\n", gens.join(", ")));
        out.push_str("ring relations:\n");
        for rel in &ring.relations {
            out.push_str(&format!("  {rel}\n"));
        }
        let betti: Vec<String> = ring.betti.iter().map(usize::to_string).collect();
        out.push_str(&format!("betti: ({})\n", betti.join(",")));
    }
    for c in &r.classes {
        out.push_str(&format!("{}:\n", c.name));
        write_class(&mut out, "  ", c, opts);
    }
    for (name, v) in &r.values {
        out.push_str(&format!("{name} = {v}\n"));
    }
    for v in &r.verdicts {
        let status = match (v.pass, v.advisory) {
            (true, _) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "WARN",
        };
        out.push_str(&format!("[{status}] {}\n", v.name));
        if let (Some(l), Some(rh)) = (&v.lhs, &v.rhs) {
            out.push_str(&format!("  lhs: {}\n  rhs: {}\n", l.inline(), rh.inline()));
        }
        if let Some(d) = &v.difference {
            if let Some(k) = v.first_discrepancy {
                out.push_str(&format!("  first discrepancy in degree {k}\n"));
            }
            out.push_str("  difference:\n");
            write_class(&mut out, "    ", d, TextOptions::default());
        }
        if let (Some(l), Some(rh)) = (&v.lhs_value, &v.rhs_value) {
            out.push_str(&format!("  lhs: {l}\n  rhs: {rh}\n"));
        }
        for (label, row) in &v.table {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&format!("  {label}: ({})\n", cells.join(",")));
        }
        for o in &v.non_integral {
            out.push_str(&format!("  non-integral: deg {} {} has coefficient {}\n", o.degree, o.monomial, o.coefficient));
        }
        if let Some(n) = &v.note {
            out.push_str(&format!("  {n}\n"));
        }
    }
    for n in &r.notes {
        out.push_str(&format!("{n}\n"));
    }
    if let Some(ms) = r.elapsed_ms {
        out.push_str(&format!("elapsed: {ms} ms\n"));
    }
    if !r.verdicts.is_empty() {
        out.push_str(if r.passed() { "result: PASS\n" } else { "result: FAIL\n" });
    }
    out
}

/// Pretty JSON with sorted keys.
pub fn emit_json(r: &Report) -> String {
    let value = serde_json::to_value(r).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Report, serde_json::Error> {
    serde_json::from_str(text)
}
