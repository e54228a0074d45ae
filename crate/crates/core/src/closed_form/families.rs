//! Published path/cycle specialisations of the closed formulas, and an audit
//! that checks each one against [`theorem_value`] on generated operands.
//!
//! Each polynomial is evaluated exactly as printed, including any errors in
//! it. `n` is the order of the first operand and `m` the order of the second,
//! so case (ii) of group 1 is F(P_n ∨̇_S C_m).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::theorem_value;
use crate::arith::Checked;
use crate::derived::DerivedKind;
use crate::error::{Error, Result};
use crate::graph::{Family, generate};
use crate::indices::invariants;
use crate::join::{JoinMode, OperationSpec};

/// Roman-numeral case within an example group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Roman {
    I,
    II,
    III,
    IV,
}

impl Roman {
    pub const ALL: [Roman; 4] = [Roman::I, Roman::II, Roman::III, Roman::IV];

    /// Case order is fixed: (i) P∘P, (ii) P∘C, (iii) C∘C, (iv) C∘P.
    pub fn operands(self) -> FamilyPair {
        use PathOrCycle::{Cycle, Path};
        match self {
            Roman::I => FamilyPair(Path, Path),
            Roman::II => FamilyPair(Path, Cycle),
            Roman::III => FamilyPair(Cycle, Cycle),
            Roman::IV => FamilyPair(Cycle, Path),
        }
    }
}

impl fmt::Display for Roman {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Roman::I => "i",
            Roman::II => "ii",
            Roman::III => "iii",
            Roman::IV => "iv",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathOrCycle {
    #[serde(rename = "P")]
    Path,
    #[serde(rename = "C")]
    Cycle,
}

impl PathOrCycle {
    pub fn family(self) -> Family {
        match self {
            PathOrCycle::Path => Family::Path,
            PathOrCycle::Cycle => Family::Cycle,
        }
    }

    /// Lower bound used when an example prints no constraint.
    fn default_min(self) -> i128 {
        match self {
            PathOrCycle::Path => 2,
            PathOrCycle::Cycle => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyPair(pub PathOrCycle, pub PathOrCycle);

/// Identifies one printed polynomial: example group 1..=8 (in order of
/// appearance: S, R, Q, T, each vertex then edge) and a roman-numeral case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyExampleId {
    pub group: u8,
    pub case: Roman,
}

/// Rendering of a [`FamilyExampleId`] such as `4(iii)`.
pub type CaseId = String;

impl FamilyExampleId {
    pub fn new(group: u8, case: Roman) -> Result<Self> {
        if !(1..=8).contains(&group) {
            return Err(Error::Domain(format!("example group must be 1..=8, got {group}")));
        }
        Ok(FamilyExampleId { group, case })
    }

    pub fn all() -> impl Iterator<Item = FamilyExampleId> {
        (1..=8).flat_map(|group| Roman::ALL.into_iter().map(move |case| FamilyExampleId { group, case }))
    }

    pub fn spec(self) -> OperationSpec {
        OperationSpec::ALL[usize::from(self.group) - 1]
    }

    pub fn operands(self) -> FamilyPair {
        self.case.operands()
    }

    fn def(self) -> &'static CaseDef {
        &CASES[usize::from(self.group - 1) * 4 + self.case as usize]
    }

    /// The polynomial as printed, in `n` (first operand) and `m` (second).
    pub fn printed(self) -> &'static str {
        self.def().printed
    }

    /// Smallest admissible `(n, m)`.
    pub fn min_point(self) -> (i128, i128) {
        let def = self.def();
        let FamilyPair(first, second) = self.operands();
        let floor = |printed: Option<i128>, family: PathOrCycle| match printed {
            Some(bound) => bound.max(family.family().min_n() as i128),
            None => family.default_min(),
        };
        (floor(def.min_n, first), floor(def.min_m, second))
    }
}

impl fmt::Display for FamilyExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.group, self.case)
    }
}

impl FromStr for FamilyExampleId {
    type Err = Error;
    /// Parses `3(iv)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("bad example id {s:?}, expected e.g. 3(iv)"));
        let (group, rest) = s.split_once('(').ok_or_else(bad)?;
        let numeral = rest.strip_suffix(')').ok_or_else(bad)?;
        let case = match numeral.to_ascii_lowercase().as_str() {
            "i" => Roman::I,
            "ii" => Roman::II,
            "iii" => Roman::III,
            "iv" => Roman::IV,
            _ => return Err(bad()),
        };
        FamilyExampleId::new(group.trim().parse().map_err(|_| bad())?, case)
    }
}

type Poly = fn(Checked<i128>, Checked<i128>) -> Checked<i128>;

struct CaseDef {
    min_n: Option<i128>,
    min_m: Option<i128>,
    printed: &'static str,
    poly: Poly,
}

const fn case(min_n: Option<i128>, min_m: Option<i128>, printed: &'static str, poly: Poly) -> CaseDef {
    CaseDef {
        min_n,
        min_m,
        printed,
        poly,
    }
}

fn k(x: i128) -> Checked<i128> {
    Checked::new(x)
}

const NONE: Option<i128> = None;

#[rustfmt::skip]
static CASES: [CaseDef; 32] = [
    // 1: vertex S-join
    case(NONE, NONE, "(mn-6)(m^2+n^2)+6mn(m+n)+24mn-10m-2n-36",
        |n, m| (m * n - k(6)) * (m.pow(2) + n.pow(2)) + k(6) * m * n * (m + n) + k(24) * m * n - k(10) * m - k(2) * n - k(36)),
    case(NONE, NONE, "mn{(m^2+n^2)+6(m+n)}-6m^2+24mn-10m+16n-22",
        |n, m| m * n * ((m.pow(2) + n.pow(2)) + k(6) * (m + n)) - k(6) * m.pow(2) + k(24) * m * n - k(10) * m + k(16) * n - k(22)),
    case(NONE, NONE, "mn{(m^2+n^2)+6(m+n)}-6m^2+24mn+8m+16n",
        |n, m| m * n * ((m.pow(2) + n.pow(2)) + k(6) * (m + n)) - k(6) * m.pow(2) + k(24) * m * n + k(8) * m + k(16) * n),
    case(NONE, NONE, "mn{(m^2+n^2)+6(m+n)}-6n^2+24mn+8m-2n-14",
        |n, m| m * n * ((m.pow(2) + n.pow(2)) + k(6) * (m + n)) - k(6) * n.pow(2) + k(24) * m * n + k(8) * m - k(2) * n - k(14)),
    // 2: edge S-join
    case(NONE, NONE, "(n-1){(m+2)^3+6(m-1)(n-1)+m(n-1)^2}+12mn-4m-10n-10",
        |n, m| (n - k(1)) * ((m + k(2)).pow(3) + k(6) * (m - k(1)) * (n - k(1)) + m * (n - k(1)).pow(2)) + k(12) * m * n - k(4) * m - k(10) * n - k(10)),
    case(NONE, NONE, "(n-1){(m+2)^3+6m(n-1)+m(n-1)^2}+12mn-4m+8n-14",
        |n, m| (n - k(1)) * ((m + k(2)).pow(3) + k(6) * m * (n - k(1)) + m * (n - k(1)).pow(2)) + k(12) * m * n - k(4) * m + k(8) * n - k(14)),
    case(NONE, NONE, "n{(m+2)^3+6mn+mn^2}+12mn+8m+8n",
        |n, m| n * ((m + k(2)).pow(3) + k(6) * m * n + m * n.pow(2)) + k(12) * m * n + k(8) * m + k(8) * n),
    case(NONE, NONE, "n{(m+2)^3+6n(m-1)+mn^2}+12mn+8m-10n-14",
        |n, m| n * ((m + k(2)).pow(3) + k(6) * n * (m - k(1)) + m * n.pow(2)) + k(12) * m * n + k(8) * m - k(10) * n - k(14)),
    // 3: vertex R-join
    case(Some(2), Some(2), "mn(m^2+n^2+6n)+72mn-6n^2-76m+54n-134",
        |n, m| m * n * (m.pow(2) + n.pow(2) + k(6) * n) + k(72) * m * n - k(6) * n.pow(2) - k(76) * m + k(54) * n - k(134)),
    case(Some(2), Some(3), "mn(m^2+n^2+6n)+m^4+72mn-84m+72n-120",
        |n, m| m * n * (m.pow(2) + n.pow(2) + k(6) * n) + m.pow(4) + k(72) * m * n - k(84) * m + k(72) * n - k(120)),
    case(Some(3), Some(3), "mn(m^2+n^2+6n)+m^4+8n^4+72mn+8n",
        |n, m| m * n * (m.pow(2) + n.pow(2) + k(6) * n) + m.pow(4) + k(8) * n.pow(4) + k(72) * m * n + k(8) * n),
    case(Some(2), Some(3), "mn(m^2+n^2)+6n^2(m-1)+72mn+16m+46n-22",
        |n, m| m * n * (m.pow(2) + n.pow(2)) + k(6) * n.pow(2) * (m - k(1)) + k(72) * m * n + k(16) * m + k(46) * n - k(22)),
    // 4: edge R-join
    case(Some(2), Some(2), "(n-1)(m+2)^3+m(n-1)^3+6(m-1)(n-1)^2+12mn-4m+46n-94",
        |n, m| (n - k(1)) * (m + k(2)).pow(3) + m * (n - k(1)).pow(3) + k(6) * (m - k(1)) * (n - k(1)).pow(2) + k(12) * m * n - k(4) * m + k(46) * n - k(94)),
    case(Some(2), Some(3), "(n-1)(m+2)^3+m(n-1)^2(n+5)+12mn-4m+64n-112",
        |n, m| (n - k(1)) * (m + k(2)).pow(3) + m * (n - k(1)).pow(2) * (n + k(5)) + k(12) * m * n - k(4) * m + k(64) * n - k(112)),
    case(Some(3), Some(3), "n(m+2)^3+mn^3+6mn^2+12mn+8m+64n",
        |n, m| n * (m + k(2)).pow(3) + m * n.pow(3) + k(6) * m * n.pow(2) + k(12) * m * n + k(8) * m + k(64) * n),
    case(Some(3), Some(2), "n(m+2)^3+mn^3+6(m-1)n^2+12mn+8m+46n-14",
        |n, m| n * (m + k(2)).pow(3) + m * n.pow(3) + k(6) * (m - k(1)) * n.pow(2) + k(12) * m * n + k(8) * m + k(46) * n - k(14)),
    // 5: vertex Q-join
    case(Some(3), Some(3), "mn(m^2+n^2)+6m^2(n-1)+6n^2(m-1)+24mn-10m+54n-166",
        |n, m| m * n * (m.pow(2) + n.pow(2)) + k(6) * m.pow(2) * (n - k(1)) + k(6) * n.pow(2) * (m - k(1)) + k(24) * m * n - k(10) * m + k(54) * n - k(166)),
    case(Some(3), Some(3), "mn(m^2+n^2)+6m^2(n-1)+6n^2m+24mn-10m+72n-152",
        |n, m| m * n * (m.pow(2) + n.pow(2)) + k(6) * m.pow(2) * (n - k(1)) + k(6) * n.pow(2) * m + k(24) * m * n - k(10) * m + k(72) * n - k(152)),
    case(Some(3), Some(3), "mn(m^2+n^2)+6mn(m+n)+24mn+8m+72n",
        |n, m| m * n * (m.pow(2) + n.pow(2)) + k(6) * m * n * (m + n) + k(24) * m * n + k(8) * m + k(72) * n),
    case(Some(3), Some(3), "mn(m^2+n^2)+6mn(m+n)-6n^2+24mn+8m+54n-14",
        |n, m| m * n * (m.pow(2) + n.pow(2)) + k(6) * m * n * (m + n) - k(6) * n.pow(2) + k(24) * m * n + k(8) * m + k(54) * n - k(14)),
    // 6: edge Q-join
    case(Some(4), Some(3), "m(n-1){(n-1)^2+m^2}+3m^2(4n-6)+6(m-1)(n-1)^2+60mn-94m+54n-148",
        |n, m| m * (n - k(1)) * ((n - k(1)).pow(2) + m.pow(2)) + k(3) * m.pow(2) * (k(4) * n - k(6)) + k(6) * (m - k(1)) * (n - k(1)).pow(2) + k(60) * m * n - k(94) * m + k(54) * n - k(148)),
    case(Some(4), Some(3), "m(n-1){(n-1)^2+m^2}+3m^2(4n-6)+6m(n-1)^2+60mn-94m+72n-152",
        |n, m| m * (n - k(1)) * ((n - k(1)).pow(2) + m.pow(2)) + k(3) * m.pow(2) * (k(4) * n - k(6)) + k(6) * m * (n - k(1)).pow(2) + k(60) * m * n - k(94) * m + k(72) * n - k(152)),
    case(Some(4), Some(3), "mn(m^2+n^2)+12m^2n+6mn^2+60mn+8m+72n",
        |n, m| m * n * (m.pow(2) + n.pow(2)) + k(12) * m.pow(2) * n + k(6) * m * n.pow(2) + k(60) * m * n + k(8) * m + k(72) * n),
    case(Some(4), Some(3), "mn(m^2+n^2)+12m^2n+6mn^2-6n^2+60mn+8m+6n-14",
        |n, m| m * n * (m.pow(2) + n.pow(2)) + k(12) * m.pow(2) * n + k(6) * m * n.pow(2) - k(6) * n.pow(2) + k(60) * m * n + k(8) * m + k(6) * n - k(14)),
    // 7: vertex T-join
    case(Some(3), Some(3), "mn(m^2+n^2)+6n^2(m-1)+12m^2(n-1)+60mn-64m+110n-264",
        |n, m| m * n * (m.pow(2) + n.pow(2)) + k(6) * n.pow(2) * (m - k(1)) + k(12) * m.pow(2) * (n - k(1)) + k(60) * m * n - k(64) * m + k(110) * n - k(264)),
    case(Some(3), Some(3), "mn(m^2+n^2)+6n^2m+12m^2(n-1)+60mn-64m+128n-250",
        |n, m| m * n * (m.pow(2) + n.pow(2)) + k(6) * n.pow(2) * m + k(12) * m.pow(2) * (n - k(1)) + k(60) * m * n - k(64) * m + k(128) * n - k(250)),
    case(Some(3), Some(3), "mn(m^2+n^2)+6n^2m+12m^2n+60mn+8m+128n",
        |n, m| m * n * (m.pow(2) + n.pow(2)) + k(6) * n.pow(2) * m + k(12) * m.pow(2) * n + k(60) * m * n + k(8) * m + k(128) * n),
    case(Some(3), Some(3), "mn(m^2+n^2)+6n^2(m-1)+12m^2n+60mn+8m+110n-14",
        |n, m| m * n * (m.pow(2) + n.pow(2)) + k(6) * n.pow(2) * (m - k(1)) + k(12) * m.pow(2) * n + k(60) * m * n + k(8) * m + k(110) * n - k(14)),
    // 8: edge T-join
    case(Some(3), Some(2), "m^3(n-1)+3m^2(4n-6)+m(n-1)^3+6(m-1)(n-1)^2+60mn-94m+110n-246",
        |n, m| m.pow(3) * (n - k(1)) + k(3) * m.pow(2) * (k(4) * n - k(6)) + m * (n - k(1)).pow(3) + k(6) * (m - k(1)) * (n - k(1)).pow(2) + k(60) * m * n - k(94) * m + k(110) * n - k(246)),
    case(Some(3), Some(3), "m^3(n-1)+3m^2(4n-6)+m(n-1)^3+6m(n-1)^2+60mn-94m+128n-250",
        |n, m| m.pow(3) * (n - k(1)) + k(3) * m.pow(2) * (k(4) * n - k(6)) + m * (n - k(1)).pow(3) + k(6) * m * (n - k(1)).pow(2) + k(60) * m * n - k(94) * m + k(128) * n - k(250)),
    case(Some(3), Some(3), "m^3n+12m^2n+mn^2(n+6)+60mn+8m+128n",
        |n, m| m.pow(3) * n + k(12) * m.pow(2) * n + m * n.pow(2) * (n + k(6)) + k(60) * m * n + k(8) * m + k(128) * n),
    case(Some(3), Some(3), "m^3n+12m^2n+mn^3+6n^2(m-1)+60mn+8m+110n-14",
        |n, m| m.pow(3) * n + k(12) * m.pow(2) * n + m * n.pow(3) + k(6) * n.pow(2) * (m - k(1)) + k(60) * m * n + k(8) * m + k(110) * n - k(14)),
];

/// Evaluates the printed polynomial for case `id` at `(n, m)`.
pub fn family_value(id: FamilyExampleId, n: i128, m: i128) -> Result<i128> {
    let (min_n, min_m) = id.min_point();
    if n < min_n || m < min_m {
        return Err(Error::Domain(format!(
            "example {id} is stated for n >= {min_n}, m >= {min_m}; got n = {n}, m = {m}"
        )));
    }
    (id.def().poly)(k(n), k(m)).get(&format!("example {id} polynomial"))
}

/// Inclusive bounds on `n` and `m` intersected with each case's validity range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditGrid {
    pub n: (i128, i128),
    pub m: (i128, i128),
}

impl Default for AuditGrid {
    fn default() -> Self {
        AuditGrid { n: (1, 8), m: (1, 8) }
    }
}

impl AuditGrid {
    pub fn up_to(max: i128) -> Self {
        AuditGrid { n: (1, max), m: (1, max) }
    }

    /// Parses `HI`, `LO..HI` or `NLO..NHI,MLO..MHI`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("bad grid {text:?}, expected HI, LO..HI or NLO..NHI,MLO..MHI"));
        let range = |s: &str| -> Result<(i128, i128)> {
            let s = s.trim();
            let (lo, hi) = match s.split_once("..") {
                Some((lo, hi)) => (lo.trim().parse().map_err(|_| bad())?, hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?),
                None => (1, s.parse().map_err(|_| bad())?),
            };
            if lo > hi {
                return Err(bad());
            }
            Ok((lo, hi))
        };
        match text.split_once(',') {
            Some((n, m)) => Ok(AuditGrid { n: range(n)?, m: range(m)? }),
            None => {
                let r = range(text)?;
                Ok(AuditGrid { n: r, m: r })
            }
        }
    }

    fn for_case(&self, id: FamilyExampleId) -> AuditGrid {
        let (min_n, min_m) = id.min_point();
        AuditGrid {
            n: (self.n.0.max(min_n), self.n.1),
            m: (self.m.0.max(min_m), self.m.1),
        }
    }

    fn points(&self) -> impl Iterator<Item = (i128, i128)> + '_ {
        (self.n.0..=self.n.1).flat_map(move |n| (self.m.0..=self.m.1).map(move |m| (n, m)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPoint {
    pub n: i128,
    pub m: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub n: i128,
    pub m: i128,
    pub family_value: i128,
    pub oracle_value: i128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Mismatch,
    /// The case's validity range does not meet the requested grid.
    Untested,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseAudit {
    pub id: CaseId,
    pub kind: DerivedKind,
    pub mode: JoinMode,
    pub operands: FamilyPair,
    pub printed: String,
    pub grid: AuditGrid,
    pub points_checked: usize,
    pub verdict: Verdict,
    pub verified_points: Vec<GridPoint>,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub cases: usize,
    pub verified: usize,
    pub mismatched: usize,
    pub untested: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub grid: AuditGrid,
    pub cases: Vec<CaseAudit>,
    pub summary: AuditSummary,
}

impl AuditReport {
    pub fn case(&self, id: FamilyExampleId) -> Option<&CaseAudit> {
        let key = id.to_string();
        self.cases.iter().find(|c| c.id == key)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("audit report serializes");
        out.push('\n');
        out
    }
}

fn oracle_value(spec: OperationSpec, pair: FamilyPair, n: i128, m: i128) -> Result<i128> {
    let to_usize = |x: i128| usize::try_from(x).map_err(|_| Error::Domain(format!("order {x} out of range")));
    let g1 = generate(pair.0.family(), to_usize(n)?)?;
    let g2 = generate(pair.1.family(), to_usize(m)?)?;
    let value = theorem_value(spec, &invariants(&g1)?, &invariants(&g2)?)?;
    i128::try_from(value).map_err(|_| Error::overflow("oracle value"))
}

fn audit_case(id: FamilyExampleId, grid: &AuditGrid) -> Result<CaseAudit> {
    let spec = id.spec();
    let case_grid = grid.for_case(id);
    let mut verified_points = Vec::new();
    let mut mismatches = Vec::new();
    for (n, m) in case_grid.points() {
        let family = family_value(id, n, m)?;
        let oracle = oracle_value(spec, id.operands(), n, m)?;
        if family == oracle {
            verified_points.push(GridPoint { n, m });
        } else {
            mismatches.push(Mismatch {
                n,
                m,
                family_value: family,
                oracle_value: oracle,
            });
        }
    }
    let points_checked = verified_points.len() + mismatches.len();
    let verdict = if points_checked == 0 {
        Verdict::Untested
    } else if mismatches.is_empty() {
        Verdict::Verified
    } else {
        Verdict::Mismatch
    };
    Ok(CaseAudit {
        id: id.to_string(),
        kind: spec.kind,
        mode: spec.mode,
        operands: id.operands(),
        printed: id.printed().to_string(),
        grid: case_grid,
        points_checked,
        verdict,
        verified_points,
        mismatches,
    })
}

/// Checks all 32 printed polynomials against the closed formulas over `grid`.
/// Mismatches are reported, not raised; errors only come from arithmetic.
pub fn audit_examples(grid: &AuditGrid) -> Result<AuditReport> {
    let ids: Vec<FamilyExampleId> = FamilyExampleId::all().collect();
    let cases = ids
        .par_iter()
        .map(|&id| audit_case(id, grid))
        .collect::<Result<Vec<_>>>()?;
    let count = |v: Verdict| cases.iter().filter(|c| c.verdict == v).count();
    let summary = AuditSummary {
        cases: cases.len(),
        verified: count(Verdict::Verified),
        mismatched: count(Verdict::Mismatch),
        untested: count(Verdict::Untested),
    };
    Ok(AuditReport {
        grid: *grid,
        cases,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> FamilyExampleId {
        s.parse().unwrap()
    }

    #[test]
    fn table_layout() {
        assert_eq!(FamilyExampleId::all().count(), 32);
        assert_eq!(id("1(i)").spec().to_string(), "S-vertex");
        assert_eq!(id("2(iv)").spec().to_string(), "S-edge");
        assert_eq!(id("6(iii)").spec().to_string(), "Q-edge");
        assert_eq!(id("8(ii)").spec().to_string(), "T-edge");
        assert_eq!(id("3(iv)").operands(), FamilyPair(PathOrCycle::Cycle, PathOrCycle::Path));
        assert!("9(i)".parse::<FamilyExampleId>().is_err());
        assert!("1(v)".parse::<FamilyExampleId>().is_err());
    }

    #[test]
    fn printed_values_at_p3_p4() {
        assert_eq!(family_value(id("1(i)"), 3, 4).unwrap(), 860);
        assert_eq!(family_value(id("2(i)"), 3, 4).unwrap(), 624);
    }

    #[test]
    fn validity_ranges() {
        assert_eq!(id("1(i)").min_point(), (2, 2));
        assert_eq!(id("1(iii)").min_point(), (3, 3));
        // Printed "m >= 3, n >= 2" on a cycle first operand still needs n >= 3.
        assert_eq!(id("3(iv)").min_point(), (3, 3));
        assert_eq!(id("6(i)").min_point(), (4, 3));
        assert_eq!(id("8(i)").min_point(), (3, 2));
        assert!(matches!(family_value(id("6(i)"), 3, 3), Err(Error::Domain(_))));
        assert!(matches!(family_value(id("1(iii)"), 3, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(AuditGrid::parse("8").unwrap(), AuditGrid::up_to(8));
        assert_eq!(AuditGrid::parse("3..6").unwrap(), AuditGrid { n: (3, 6), m: (3, 6) });
        assert_eq!(
            AuditGrid::parse("2..5,3..=9").unwrap(),
            AuditGrid { n: (2, 5), m: (3, 9) }
        );
        assert!(AuditGrid::parse("5..2").is_err());
        assert!(AuditGrid::parse("x").is_err());
    }

    #[test]
    fn single_point_report() {
        let grid = AuditGrid { n: (3, 3), m: (4, 4) };
        let report = audit_examples(&grid).unwrap();
        let case = report.case(id("1(i)")).unwrap();
        assert_eq!(case.verdict, Verdict::Verified);
        assert_eq!(case.verified_points, vec![GridPoint { n: 3, m: 4 }]);
        // 6(*) needs n >= 4 so the single point is outside its range.
        assert_eq!(report.case(id("6(i)")).unwrap().verdict, Verdict::Untested);
    }
}
