//! Table corpus records and their verification.
//!
//! A record fixes a field, the moduli `x^n - a^(i)(x)`, generators `g^(i)`,
//! a Gray matrix `M` and the expected parameters of `Psi(C)`. Polynomials are
//! ascending coefficient lists of integer element codes.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::PolycyclicCode;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::gray::{gray_image, is_quasi_cyclic, GraySpec};
use crate::lincode::{classify, Distance, SingletonClass};
use crate::poly::Poly;
use crate::quantum::{quantum_from_polycyclic, QuantumParams};

pub const TABLE1: &str = include_str!("../corpus/table1.json");
pub const TABLE2: &str = include_str!("../corpus/table2.json");
pub const TABLE3: &str = include_str!("../corpus/table3.json");
pub const TABLE4: &str = include_str!("../corpus/table4.json");

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Lcd,
    Mds,
    Amds,
    Quasicyclic,
    Dualcontaining,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    pub params: [usize; 3],
    #[serde(default)]
    pub flags: Vec<Flag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantum: Option<[usize; 3]>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub id: String,
    pub q: u64,
    pub p: u64,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    pub l: usize,
    pub n: usize,
    pub a: Vec<Vec<u32>>,
    pub g: Vec<Vec<u32>>,
    #[serde(rename = "M")]
    pub gray: Vec<Vec<u32>>,
    pub expect: Expect,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub long: bool,
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

impl Record {
    pub fn field(&self) -> Result<Field> {
        if (self.p as u128).checked_pow(self.m).map_or(true, |q| q != self.q as u128) {
            return Err(schema(format!("{}: q = {} is not p^m = {}^{}", self.id, self.q, self.p, self.m)));
        }
        let p = u32::try_from(self.p).map_err(|_| Error::UnsupportedSize(self.q))?;
        Field::new(p, self.m, self.modulus.as_deref())
    }

    /// Checks the shape invariants, including `params = [nl, nl - sum deg g, _]`.
    pub fn validate(&self) -> Result<()> {
        let id = &self.id;
        if self.a.len() != self.l || self.g.len() != self.l {
            return Err(schema(format!("{id}: expected {} components in a and g", self.l)));
        }
        if self.gray.len() != self.l || self.gray.iter().any(|r| r.len() != self.l) {
            return Err(schema(format!("{id}: M must be {0}x{0}", self.l)));
        }
        let field = self.field()?;
        let deg_sum: usize = self.polys(&field, &self.g)?.iter().map(Poly::deg).sum();
        let nl = self.n * self.l;
        if self.expect.params[0] != nl || deg_sum > nl || self.expect.params[1] != nl - deg_sum {
            return Err(schema(format!(
                "{id}: params {:?} inconsistent with n*l = {nl} and sum deg g = {deg_sum}",
                self.expect.params
            )));
        }
        Ok(())
    }

    fn polys(&self, field: &Field, lists: &[Vec<u32>]) -> Result<Vec<Poly>> {
        lists
            .iter()
            .map(|c| Poly::from_codes(field, &c.iter().map(|&x| x as u64).collect::<Vec<_>>()))
            .collect()
    }

    pub fn code(&self) -> Result<PolycyclicCode> {
        self.validate()?;
        let field = self.field()?;
        PolycyclicCode::new(&field, self.l, self.n, &self.polys(&field, &self.a)?, &self.polys(&field, &self.g)?)
    }

    pub fn gray_spec(&self) -> Result<GraySpec> {
        GraySpec::new(&self.field()?, self.gray.clone())
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<Record>> {
    let records: Vec<Record> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    for r in &records {
        r.validate()?;
    }
    Ok(records)
}

pub fn load_corpus(path: &Path) -> Result<Vec<Record>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_corpus(&text)
}

pub fn to_json(records: &[Record]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Computed {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_exact: bool,
    pub lcd: bool,
    pub class: Option<String>,
    pub quasicyclic: bool,
    pub dual_containing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantum: Option<[usize; 3]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub id: String,
    pub status: Status,
    pub expected: Expect,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<Computed>,
    pub notes: Vec<String>,
}

/// Recomputes the parameters, flags and quantum data of one record.
pub fn compute(rec: &Record, budget: u128) -> Result<Computed> {
    let code = rec.code()?;
    let gs = rec.gray_spec()?;
    let basis = code.ring().standard_basis();
    let image = gray_image(&code, &gs, &basis);
    // the zero code is reported as d = 0
    let d = match image.min_distance(budget) {
        Err(Error::ZeroCode) => Distance::Exact(0),
        d => d?,
    };
    let class = (d.value() > 0).then(|| classify(image.n(), image.k(), d).ok().map(|c| c.to_string())).flatten();
    let quantum = match rec.expect.quantum {
        Some(_) => Some(quantum_from_polycyclic(&code, &gs, budget)?),
        None => None,
    };
    Ok(Computed {
        n: image.n(),
        k: image.k(),
        d: d.value(),
        d_exact: d.is_exact(),
        lcd: image.is_lcd(),
        class,
        quasicyclic: is_quasi_cyclic(&image, &code.shift_spec(), &basis),
        dual_containing: code.is_ann_dual_containing(),
        quantum: quantum.map(|QuantumParams { n, k, d_lb, .. }| [n, k, d_lb]),
    })
}

fn flag_holds(flag: Flag, c: &Computed) -> bool {
    match flag {
        Flag::Lcd => c.lcd,
        Flag::Mds => c.class.as_deref() == Some(&SingletonClass::Mds.to_string()),
        Flag::Amds => c.class.as_deref() == Some(&SingletonClass::AlmostMds.to_string()),
        Flag::Quasicyclic => c.quasicyclic,
        Flag::Dualcontaining => c.dual_containing,
    }
}

pub fn verify_record(rec: &Record, budget: u128, all: bool) -> Outcome {
    let mut out = Outcome {
        id: rec.id.clone(),
        status: Status::Pass,
        expected: rec.expect.clone(),
        computed: None,
        notes: Vec::new(),
    };
    if rec.long && !all {
        out.status = Status::Skipped;
        out.notes.push("long-running, pass --all".into());
        return out;
    }
    let c = match compute(rec, budget) {
        Ok(c) => c,
        Err(e) => {
            out.status = Status::Error;
            out.notes.push(e.to_string());
            return out;
        }
    };
    let [n, k, d] = rec.expect.params;
    if (c.n, c.k) != (n, k) {
        out.notes.push(format!("[n,k] = [{},{}], expected [{n},{k}]", c.n, c.k));
    }
    if !c.d_exact {
        out.notes.push(format!("distance only bounded: d >= {} under budget {budget}", c.d));
    } else if c.d != d {
        out.notes.push(format!("d = {}, expected {d}", c.d));
    }
    for &flag in &rec.expect.flags {
        if !flag_holds(flag, &c) {
            out.notes.push(format!("flag {flag:?} does not hold").to_lowercase());
        }
    }
    if let (Some(want), Some(got)) = (rec.expect.quantum, c.quantum) {
        if want != got || !c.d_exact {
            out.notes.push(format!("quantum {got:?}, expected {want:?}"));
        }
    }
    if !out.notes.is_empty() {
        out.status = Status::Fail;
    }
    out.computed = Some(c);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub budget: String,
    pub outcomes: Vec<Outcome>,
}

impl Report {
    pub fn count(&self, s: Status) -> usize {
        self.outcomes.iter().filter(|o| o.status == s).count()
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| matches!(o.status, Status::Pass | Status::Skipped))
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for o in &self.outcomes {
            let [n, k, d] = o.expected.params;
            let got = o.computed.as_ref().map_or("-".to_string(), |c| {
                let rel = if c.d_exact { "" } else { ">=" };
                let mut t = format!("[{},{},{rel}{}]", c.n, c.k, c.d);
                if let Some(cl) = c.class.as_deref().filter(|&cl| cl != "-") {
                    let _ = write!(t, " {cl}");
                }
                if c.lcd {
                    t.push_str(" LCD");
                }
                if let Some([qn, qk, qd]) = c.quantum {
                    let _ = write!(t, " [[{qn},{qk},>={qd}]]");
                }
                t
            });
            let status = format!("{:?}", o.status).to_uppercase();
            let _ = write!(s, "{:<10} {:<7} expected [{n},{k},{d}]  computed {got}", o.id, status);
            if !o.notes.is_empty() {
                let _ = write!(s, "  ({})", o.notes.join("; "));
            }
            s.push('\n');
        }
        let _ = writeln!(
            s,
            "{} passed, {} failed, {} errors, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error),
            self.count(Status::Skipped)
        );
        s
    }
}

/// Verifies every record; the report keeps the corpus order.
pub fn verify(records: &[Record], budget: u128, all: bool) -> Report {
    let outcomes = records.par_iter().map(|r| verify_record(r, budget, all)).collect();
    Report { budget: budget.to_string(), outcomes }
}

