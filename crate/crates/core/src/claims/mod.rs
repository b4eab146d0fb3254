//! Claims ledger: line-oriented records of computations with expected results.
//!
//! Each non-comment line reads `id | tier | recipe | expected | provenance | citation`.
//! Tiers are `core`, `long` and `extended`; provenance is `paper`, `derived`
//! or `disputed`. Disputed claims carry the published value as `expected`
//! and never affect the exit code.

mod eval;
mod recipe;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::structlab::AutTier;

pub use eval::{Evaluator, Value};
pub use recipe::{parse_recipe, Term};

/// The ledger shipped with the crate.
pub const DEFAULT_LEDGER: &str = include_str!("ledger.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Core,
    Long,
    Extended,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paper,
    Derived,
    Disputed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    DisputedMatch,
    DisputedMismatch,
}

macro_rules! text_enum {
    ($t:ty { $($v:ident = $s:literal),* }) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $(Self::$v => $s),* })
            }
        }
        impl FromStr for $t {
            type Err = String;
            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s { $($s => Ok(Self::$v),)* _ => Err(format!("unknown {} {s:?}", stringify!($t).to_lowercase())) }
            }
        }
    };
}

text_enum!(Tier { Core = "core", Long = "long", Extended = "extended" });
text_enum!(Provenance { Paper = "paper", Derived = "derived", Disputed = "disputed" });
text_enum!(Status {
    Pass = "pass",
    Fail = "fail",
    Inconclusive = "inconclusive",
    DisputedMatch = "disputed-match",
    DisputedMismatch = "disputed-mismatch"
});

#[derive(Clone, Debug)]
pub struct Claim {
    pub id: String,
    pub tier: Tier,
    pub recipe: Term,
    pub expected: String,
    pub provenance: Provenance,
    pub citation: String,
    pub line: usize,
}

pub fn parse_ledger(text: &str) -> Result<Vec<Claim>> {
    let mut claims: Vec<Claim> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let perr = |msg: String| Error::Parse { line, msg };
        let fields: Vec<&str> = s.splitn(6, '|').map(str::trim).collect();
        if fields.len() != 6 {
            return Err(perr(format!(
                "expected 6 '|'-separated fields, found {}",
                fields.len()
            )));
        }
        let id = fields[0];
        if id.is_empty() || id.contains(char::is_whitespace) {
            return Err(perr(format!("bad claim id {id:?}")));
        }
        if claims.iter().any(|c| c.id == id) {
            return Err(perr(format!("duplicate claim id {id:?}")));
        }
        let tier = fields[1].parse().map_err(perr)?;
        let recipe = parse_recipe(fields[2]).map_err(|e| perr(e.to_string()))?;
        let provenance: Provenance = fields[4].parse().map_err(perr)?;
        if fields[3].is_empty() {
            return Err(perr("empty expected value".into()));
        }
        if provenance != Provenance::Derived && fields[5].is_empty() {
            return Err(perr("published claims need a citation".into()));
        }
        claims.push(Claim {
            id: id.to_string(),
            tier,
            recipe,
            expected: fields[3].to_string(),
            provenance,
            citation: fields[5].to_string(),
            line,
        });
    }
    Ok(claims)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub tier: Tier,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    pub provenance: Provenance,
    pub citation: String,
    #[serde(skip)]
    pub wall: Duration,
}

fn normalize(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Runs every claim whose tier is at most `suite`, in ledger order.
pub fn run_claims(claims: &[Claim], suite: Tier, limits: &Limits) -> Vec<ClaimReport> {
    let mut ev = Evaluator::new(limits.clone());
    claims
        .iter()
        .filter(|c| c.tier <= suite)
        .map(|c| {
            ev.set_tier(if c.tier == Tier::Core {
                AutTier::Required
            } else {
                AutTier::Extended
            });
            let start = Instant::now();
            let result = ev.eval(&c.recipe);
            let wall = start.elapsed();
            let disputed = c.provenance == Provenance::Disputed;
            let (status, computed) = match result {
                Ok(v) => {
                    let computed = v.to_string();
                    let same = normalize(&computed) == normalize(&c.expected);
                    let status = match (disputed, same) {
                        (false, true) => Status::Pass,
                        (false, false) => Status::Fail,
                        (true, true) => Status::DisputedMatch,
                        (true, false) => Status::DisputedMismatch,
                    };
                    (status, computed)
                }
                Err(e) if e.is_inconclusive() => (Status::Inconclusive, e.to_string()),
                Err(e) => (Status::Fail, format!("error: {e}")),
            };
            let status = if disputed && status == Status::Fail {
                Status::DisputedMismatch
            } else {
                status
            };
            ClaimReport {
                id: c.id.clone(),
                tier: c.tier,
                status,
                computed,
                expected: c.expected.clone(),
                provenance: c.provenance,
                citation: c.citation.clone(),
                wall,
            }
        })
        .collect()
}

/// Nonzero iff some claim that is not disputed failed.
pub fn exit_code(reports: &[ClaimReport]) -> i32 {
    i32::from(reports.iter().any(|r| r.status == Status::Fail))
}

/// JSON lines: a header holding everything run-dependent (time stamp and
/// wall times), then one deterministic line per claim.
pub fn report_jsonl(reports: &[ClaimReport], suite: Tier, unix_time: u64) -> String {
    let wall: serde_json::Map<String, serde_json::Value> = reports
        .iter()
        .map(|r| {
            (
                r.id.clone(),
                serde_json::Value::from(r.wall.as_millis() as u64),
            )
        })
        .collect();
    let header =
        serde_json::json!({ "suite": suite, "generated_unix": unix_time, "wall_ms": wall });
    let mut out = header.to_string();
    out.push('\n');
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("plain data serializes"));
        out.push('\n');
    }
    out
}

/// Fixed-width human-readable table.
pub fn report_table(reports: &[ClaimReport]) -> String {
    let w = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = format!(
        "{:<w$}  {:<17}  {:>9}  computed / expected\n",
        "id", "status", "ms"
    );
    for r in reports {
        let value = if normalize(&r.computed) == normalize(&r.expected) {
            r.computed.clone()
        } else {
            format!("{} / {}", r.computed, r.expected)
        };
        out.push_str(&format!(
            "{:<w$}  {:<17}  {:>9}  {value}\n",
            r.id,
            r.status.to_string(),
            r.wall.as_millis()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ledger_parsing_errors_carry_lines() {
        let bad = "# comment\n\nx | core | order(c1) | 192 | paper\n";
        assert!(matches!(
            parse_ledger(bad),
            Err(Error::Parse { line: 3, .. })
        ));
        let bad = "x | core | order(c1 | 192 | derived |\n";
        assert!(matches!(
            parse_ledger(bad),
            Err(Error::Parse { line: 1, .. })
        ));
        let bad = "x | sometimes | order(c1) | 192 | derived |\n";
        assert!(matches!(
            parse_ledger(bad),
            Err(Error::Parse { line: 1, .. })
        ));
        let bad = "x | core | order(c1) | 192 | paper |\n";
        assert!(parse_ledger(bad).is_err());
        let dup = "x | core | order(c1) | 192 | derived |\nx | core | order(p1) | 16 | derived |\n";
        assert!(matches!(
            parse_ledger(dup),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn default_ledger_parses() {
        let claims = parse_ledger(DEFAULT_LEDGER).unwrap();
        assert!(claims.iter().any(|c| c.provenance == Provenance::Disputed));
        assert!(claims.iter().filter(|c| c.tier == Tier::Core).count() > 20);
    }

    #[test]
    fn statuses_and_exit_code() {
        let text = "\
ok | core | order(p1) | 16 | derived |
wrong | core | order(p1) | 17 | derived |
dm | core | order(p1) | 16 | disputed | somewhere
dx | core | order(p1) | 99 | disputed | somewhere
cap | core | commutator_set_size(symmetric(5)) | 60 | derived |
later | long | order(p1) | 16 | derived |
";
        let claims = parse_ledger(text).unwrap();
        let limits = Limits {
            commutator_pairs: 10,
            commutator_classes: 100,
            ..Limits::default()
        };
        let r = run_claims(&claims, Tier::Core, &limits);
        let st: Vec<Status> = r.iter().map(|r| r.status).collect();
        assert_eq!(
            st,
            [
                Status::Pass,
                Status::Fail,
                Status::DisputedMatch,
                Status::DisputedMismatch,
                Status::Inconclusive
            ]
        );
        assert_eq!(r[1].computed, "16");
        assert_eq!(exit_code(&r), 1);
        assert_eq!(exit_code(&[r[0].clone(), r[2].clone(), r[3].clone()]), 0);
        let a = report_jsonl(&r, Tier::Core, 1);
        let b = report_jsonl(&run_claims(&claims, Tier::Core, &limits), Tier::Core, 2);
        assert_eq!(
            a.lines().skip(1).collect::<Vec<_>>(),
            b.lines().skip(1).collect::<Vec<_>>()
        );
        assert!(a.lines().nth(2).unwrap().contains("\"status\":\"fail\""));
        assert_eq!(run_claims(&claims, Tier::Long, &limits).len(), 6);
    }
}
