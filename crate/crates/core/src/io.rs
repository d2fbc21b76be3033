//! Serialization of inequality lists, polytopes and membership verdicts.
//!
//! Rationals are always written as `"p/q"` strings, integers included
//! (`"3/1"`). Simple-root indices and reduced words use 1-based Bourbaki
//! numbering.

use std::io::Write;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::horn::{HornSystem, Inequality, InequalityKind, Membership, PwReport};
use crate::polytope::{HRep, VRep};
use crate::{Error, Rational};

pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or an integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::MalformedPoint(s.to_string());
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Parses a comma-separated alcove point such as `1/2,0,1/3`.
pub fn parse_point(s: &str, rank: usize) -> Result<Vec<Rational>, Error> {
    let v: Vec<Rational> = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<_, _>>()?;
    if v.len() != rank {
        return Err(Error::MalformedPoint(format!(
            "`{s}` has {} coordinates, expected {rank}",
            v.len()
        )));
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityRecord {
    pub kind: String,
    pub beta: Option<usize>,
    pub d: Option<i64>,
    pub words: Option<Vec<Vec<usize>>>,
    pub lhs: Vec<Vec<String>>,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityList {
    pub group: String,
    pub mode: String,
    pub count: usize,
    pub inequalities: Vec<InequalityRecord>,
}

impl InequalityList {
    pub fn from_system(system: &HornSystem) -> Self {
        let inequalities = system
            .inequalities
            .iter()
            .map(|ineq| InequalityRecord {
                kind: ineq.kind.name().to_string(),
                beta: ineq.witness.as_ref().map(|w| w.beta + 1),
                d: ineq.witness.as_ref().map(|w| w.d),
                words: ineq.bourbaki_words().map(|w| w.to_vec()),
                lhs: ineq
                    .lhs
                    .iter()
                    .map(|a| a.iter().map(format_rational).collect())
                    .collect(),
                rhs: format_rational(&ineq.rhs),
            })
            .collect();
        InequalityList {
            group: system.cartan_type.to_string(),
            mode: system.mode.name().to_string(),
            count: system.len(),
            inequalities,
        }
    }

    /// Checks that every record parses back to exact data.
    pub fn validate(&self) -> Result<(), Error> {
        if self.count != self.inequalities.len() {
            return Err(Error::Internal("count does not match the list".into()));
        }
        for r in &self.inequalities {
            r.kind.parse::<InequalityKind>()?;
            parse_rational(&r.rhs)?;
            for a in &r.lhs {
                for c in a {
                    parse_rational(c)?;
                }
            }
        }
        Ok(())
    }
}

pub fn to_json(system: &HornSystem) -> String {
    serde_json::to_string_pretty(&InequalityList::from_system(system)).expect("serializable")
}

pub fn from_json(s: &str) -> Result<InequalityList, Error> {
    let list: InequalityList =
        serde_json::from_str(s).map_err(|e| Error::Internal(format!("bad JSON: {e}")))?;
    list.validate()?;
    Ok(list)
}

fn join_words(words: &Option<Vec<Vec<usize>>>, k: usize) -> String {
    match words {
        None => String::new(),
        Some(w) => w[k]
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join("."),
    }
}

/// One row per inequality: kind, β, d, three words (dot-separated), three
/// coefficient blocks (semicolon-separated) and the right-hand side.
pub fn write_csv<W: Write>(system: &HornSystem, out: W) -> Result<(), Error> {
    let io = |e: csv::Error| Error::Internal(format!("CSV output: {e}"));
    let list = InequalityList::from_system(system);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["kind", "beta", "d", "w1", "w2", "w3", "lhs1", "lhs2", "lhs3", "rhs"])
        .map_err(io)?;
    for r in &list.inequalities {
        let mut rec = vec![
            r.kind.clone(),
            r.beta.map_or(String::new(), |b| b.to_string()),
            r.d.map_or(String::new(), |d| d.to_string()),
        ];
        for k in 0..3 {
            rec.push(join_words(&r.words, k));
        }
        for a in &r.lhs {
            rec.push(a.join(";"));
        }
        rec.push(r.rhs.clone());
        w.write_record(&rec).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Internal(format!("CSV output: {e}")))?;
    Ok(())
}

fn word_text(w: &[usize]) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.iter().map(|i| format!("s{i}")).collect()
    }
}

fn term_text(c: &Rational, var: &str) -> String {
    if c == &Rational::from_integer(1.into()) {
        var.to_string()
    } else if c == &Rational::from_integer((-1).into()) {
        format!("-{var}")
    } else {
        format!("{c}*{var}")
    }
}

/// `I_β(w1, w2, w3; d)` for inequalities with a witness, the kind otherwise.
pub fn label(ineq: &Inequality) -> String {
    match (&ineq.witness, ineq.bourbaki_words()) {
        (Some(w), Some(words)) => format!(
            "I_{}({}, {}, {}; {})",
            w.beta + 1,
            word_text(&words[0]),
            word_text(&words[1]),
            word_text(&words[2]),
            w.d
        ),
        _ => ineq.kind.name().to_string(),
    }
}

/// Human-readable listing followed by a summary count line.
pub fn to_text(system: &HornSystem) -> String {
    use num_traits::Zero;
    let mut s = String::new();
    for (k, ineq) in system.inequalities.iter().enumerate() {
        let label = label(ineq);
        let mut terms = Vec::new();
        for (i, a) in ineq.lhs.iter().enumerate() {
            for (j, c) in a.iter().enumerate() {
                if !c.is_zero() {
                    terms.push(term_text(c, &format!("t{}_{}", i + 1, j + 1)));
                }
            }
        }
        s.push_str(&format!(
            "{:>5}  {:<28} {} <= {}\n",
            k + 1,
            label,
            terms.join(" + ").replace("+ -", "- "),
            ineq.rhs
        ));
    }
    s.push_str(&format!(
        "count: {} ({} {}, mode {})\n",
        system.len(),
        system.cartan_type,
        system.cartan_type.group_name(),
        system.mode
    ));
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeRecord {
    pub group: String,
    pub mode: String,
    pub inequalities: usize,
    pub facets: usize,
    pub vertices: Option<usize>,
    pub verified: Option<bool>,
    pub facet_rows: Vec<Vec<String>>,
    pub vertex_list: Option<Vec<Vec<String>>>,
}

impl PolytopeRecord {
    pub fn new(system: &HornSystem, facets: &HRep, vertices: Option<&VRep>, verified: Option<bool>) -> Self {
        PolytopeRecord {
            group: system.cartan_type.to_string(),
            mode: system.mode.name().to_string(),
            inequalities: system.len(),
            facets: facets.len(),
            vertices: vertices.map(|v| v.len()),
            verified,
            facet_rows: facets
                .rows()
                .iter()
                .map(|r| {
                    r.normal
                        .iter()
                        .chain(std::iter::once(&r.bound))
                        .map(format_rational)
                        .collect()
                })
                .collect(),
            vertex_list: vertices.map(|v| {
                v.sorted()
                    .iter()
                    .map(|p| p.iter().map(format_rational).collect())
                    .collect()
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipRecord {
    pub group: String,
    pub mode: String,
    pub verdict: String,
    pub in_alcove: [bool; 3],
    /// 1-based indices into the inequality list.
    pub tight: Vec<usize>,
    pub violated: Vec<usize>,
}

impl MembershipRecord {
    pub fn new(system: &HornSystem, m: &Membership) -> Self {
        MembershipRecord {
            group: system.cartan_type.to_string(),
            mode: system.mode.name().to_string(),
            verdict: m.verdict.name().to_string(),
            in_alcove: m.in_alcove,
            tight: m.tight.iter().map(|i| i + 1).collect(),
            violated: m.violated.iter().map(|i| i + 1).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PwScanRecord {
    pub beta: usize,
    pub d: i64,
    pub h_pw: Vec<i64>,
    pub min_pairing: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PwRecord {
    pub group: String,
    pub holds: bool,
    pub scanned: Vec<PwScanRecord>,
    /// `(β, d, root, pairing)` with β 1-based and the root in simple-root coordinates.
    pub violations: Vec<(usize, i64, Vec<i64>, i64)>,
}

impl PwRecord {
    pub fn new(r: &PwReport) -> Self {
        PwRecord {
            group: r.group.to_string(),
            holds: r.violations.is_empty(),
            scanned: r
                .scanned
                .iter()
                .map(|(beta, d, h, min)| PwScanRecord {
                    beta: beta + 1,
                    d: *d,
                    h_pw: h.clone(),
                    min_pairing: (*min != i64::MAX).then_some(*min),
                })
                .collect(),
            violations: r
                .violations
                .iter()
                .map(|v| (v.beta + 1, v.d, v.root.clone(), v.pairing))
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.scanned {
            s.push_str(&format!(
                "beta={} d={} h_pw={:?} min={}\n",
                r.beta,
                r.d,
                r.h_pw,
                r.min_pairing.map_or("-".to_string(), |m| m.to_string())
            ));
        }
        for (beta, d, root, pairing) in &self.violations {
            s.push_str(&format!("violation: beta={beta} d={d} root={root:?} pairing={pairing}\n"));
        }
        s.push_str(&format!(
            "{}: {} pairs scanned, {} violations, bound {}\n",
            self.group,
            self.scanned.len(),
            self.violations.len(),
            if self.holds { "holds" } else { "fails" }
        ));
        s
    }
}
