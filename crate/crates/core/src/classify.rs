//! Decision procedures for the classification of groups with `Λ³ℝⁿ ≅ ℝⁿ⊗𝔪`.
//!
//! Every elimination step is a named rule so that the full trace can be
//! printed and audited.

use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CardFamily {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
    Torus,
    Product,
}

/// Rank and dimension of a compact connected Lie group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupCard {
    pub family: CardFamily,
    pub label: String,
    pub rank: u64,
    pub dim: u64,
    pub contains_exceptional: bool,
}

impl GroupCard {
    /// Simple family with rank parameter `m` (ignored for exceptional families).
    pub fn simple(family: CardFamily, m: u64) -> Result<Self> {
        let (label, rank, dim) = match family {
            CardFamily::A if m >= 1 => (format!("A{m}"), m, m * m + 2 * m),
            CardFamily::B if m >= 1 => (format!("B{m}"), m, 2 * m * m + m),
            CardFamily::C if m >= 1 => (format!("C{m}"), m, 2 * m * m + m),
            CardFamily::D if m >= 3 => (format!("D{m}"), m, 2 * m * m - m),
            CardFamily::G2 => ("G2".into(), 2, 14),
            CardFamily::F4 => ("F4".into(), 4, 52),
            CardFamily::E6 => ("E6".into(), 6, 78),
            CardFamily::E7 => ("E7".into(), 7, 133),
            CardFamily::E8 => ("E8".into(), 8, 248),
            CardFamily::Torus => (format!("T{m}"), m, m),
            f => return Err(Error::UnsupportedFamily(format!("{f:?}{m}"))),
        };
        Ok(GroupCard {
            family,
            label,
            rank,
            dim,
            contains_exceptional: is_exceptional(family),
        })
    }

    pub fn torus(t: u64) -> Self {
        GroupCard::simple(CardFamily::Torus, t).expect("torus")
    }

    pub fn product(a: &GroupCard, b: &GroupCard) -> Self {
        GroupCard {
            family: CardFamily::Product,
            label: format!("{}x{}", a.label, b.label),
            rank: a.rank + b.rank,
            dim: a.dim + b.dim,
            contains_exceptional: a.contains_exceptional || b.contains_exceptional,
        }
    }
}

fn is_exceptional(f: CardFamily) -> bool {
    matches!(
        f,
        CardFamily::G2 | CardFamily::F4 | CardFamily::E6 | CardFamily::E7 | CardFamily::E8
    )
}

pub const EXCEPTIONAL: [CardFamily; 5] = [
    CardFamily::G2,
    CardFamily::F4,
    CardFamily::E6,
    CardFamily::E7,
    CardFamily::E8,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TorusBound {
    /// `dim ≤ 4·rank²`
    pub bound4: bool,
    /// `dim ≤ 3·rank²`, only meaningful without exceptional summands.
    pub bound3: Option<bool>,
}

pub fn torus_bound(card: &GroupCard) -> TorusBound {
    let t2 = card.rank * card.rank;
    TorusBound {
        bound4: card.dim <= 4 * t2,
        bound3: (!card.contains_exceptional).then_some(card.dim <= 3 * t2),
    }
}

fn exact_sqrt(x: u64) -> Option<u64> {
    let r = x.sqrt();
    (r * r == x).then_some(r)
}

/// `n = √(3g + 1)` when it is an integer.
pub fn character_constraint(g: u64) -> Option<u64> {
    exact_sqrt(3 * g + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionRoots {
    pub g: u64,
    pub z: u64,
    pub n: u64,
    /// Integral solutions `p = (n ± √(6z − 3g + 1))/2`, ascending.
    pub raw: Vec<u64>,
    /// Those that are even with `0 < p < n`.
    pub candidates: Vec<u64>,
    /// `z = g`: the involution is central (it acts as `−Id` in the irreducible case).
    pub central: bool,
}

/// Solutions `p` of `3(g − z) = 2p(n − p)` for an involution with centralizer dimension `z`.
pub fn involution_p(g: u64, z: u64, n: u64) -> InvolutionRoots {
    let mut raw = Vec::new();
    let disc = 6 * z as i64 - 3 * g as i64 + 1;
    if disc >= 0 {
        if let Some(s) = exact_sqrt(disc as u64) {
            for p in [n as i64 - s as i64, n as i64 + s as i64] {
                if p >= 0 && p % 2 == 0 && !raw.contains(&((p / 2) as u64)) {
                    raw.push((p / 2) as u64);
                }
            }
        }
    }
    raw.sort_unstable();
    let candidates = raw
        .iter()
        .copied()
        .filter(|&p| p % 2 == 0 && p > 0 && p < n)
        .collect();
    InvolutionRoots {
        g,
        z,
        n,
        raw,
        candidates,
        central: z == g,
    }
}

/// Centralizer dimensions of the involution classes of `Spin(7)`:
/// `𝔰𝔬(2r) ⊕ 𝔰𝔬(7 − 2r)` for `r = 0..3`.
pub fn spin7_centralizers() -> Vec<u64> {
    (0..=3u64)
        .map(|r| {
            let a = 2 * r;
            let b = 7 - 2 * r;
            a * a.saturating_sub(1) / 2 + b * b.saturating_sub(1) / 2
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupFamily {
    SU,
    SO,
    Sp,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl std::str::FromStr for GroupFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "SU" => GroupFamily::SU,
            "SO" => GroupFamily::SO,
            "Sp" => GroupFamily::Sp,
            "G2" => GroupFamily::G2,
            "F4" => GroupFamily::F4,
            "E6" => GroupFamily::E6,
            "E7" => GroupFamily::E7,
            "E8" => GroupFamily::E8,
            other => return Err(Error::UnsupportedFamily(other.to_string())),
        })
    }
}

impl GroupFamily {
    pub fn is_exceptional(self) -> bool {
        !matches!(self, GroupFamily::SU | GroupFamily::SO | GroupFamily::Sp)
    }

    pub fn dim(self, m: u64) -> u64 {
        match self {
            GroupFamily::SU => m * m - 1,
            GroupFamily::SO => m * (m - 1) / 2,
            GroupFamily::Sp => 2 * m * m + m,
            GroupFamily::G2 => 14,
            GroupFamily::F4 => 52,
            GroupFamily::E6 => 78,
            GroupFamily::E7 => 133,
            GroupFamily::E8 => 248,
        }
    }

    /// Smallest dimension of a faithful real representation.
    pub fn min_faithful_real_dim(self, m: u64) -> u64 {
        match self {
            GroupFamily::SU => 2 * m,
            GroupFamily::SO => m,
            GroupFamily::Sp => 4 * m,
            GroupFamily::G2 => 7,
            GroupFamily::F4 => 26,
            GroupFamily::E6 => 54,
            GroupFamily::E7 => 112,
            GroupFamily::E8 => 248,
        }
    }

    /// `(r, z)` for the involution classes with fixed-space parameter `r`.
    fn involution_classes(self, m: u64) -> Vec<(u64, u64)> {
        let c2 = |k: u64| k * k.saturating_sub(1) / 2;
        match self {
            // diag(1^r, (−1)^(m−r)) with determinant one
            GroupFamily::SU => (1..m)
                .filter(|r| (m - r).is_multiple_of(2))
                .map(|r| (r, r * r + (m - r) * (m - r) - 1))
                .collect(),
            GroupFamily::SO => (1..m)
                .filter(|r| (m - r).is_multiple_of(2))
                .map(|r| (r, c2(r) + c2(m - r)))
                .collect(),
            GroupFamily::Sp => (1..m)
                .map(|r| (r, r * (2 * r + 1) + (m - r) * (2 * (m - r) + 1)))
                .collect(),
            _ => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassTrace {
    pub r: u64,
    pub z: u64,
    pub roots: InvolutionRoots,
}

/// Solutions of `3m − p = 2n` with `0 < p < m` (orthogonal family only).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrassmannSolution {
    pub p: u64,
    pub m: u64,
    pub n: u64,
    pub p_even: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionVerdict {
    pub family: GroupFamily,
    pub m: u64,
    pub g: u64,
    pub n: Option<u64>,
    pub holds: bool,
    pub reason: String,
    pub classes: Vec<ClassTrace>,
    pub grassmann: Vec<GrassmannSolution>,
}

/// Decides the involution property for one group, with the witness trace.
pub fn involution_property(family: GroupFamily, m: u64) -> Result<InvolutionVerdict> {
    let min_m = match family {
        GroupFamily::SU => 2,
        GroupFamily::SO => 3,
        GroupFamily::Sp => 1,
        _ => 0,
    };
    if m < min_m {
        return Err(Error::UnsupportedFamily(format!("{family:?}({m})")));
    }
    let g = family.dim(m);
    let n = character_constraint(g);
    let mut v = InvolutionVerdict {
        family,
        m,
        g,
        n,
        holds: true,
        reason: String::new(),
        classes: Vec::new(),
        grassmann: Vec::new(),
    };
    let Some(n) = n else {
        v.reason = format!("3g+1 = {} is not a square", 3 * g + 1);
        return Ok(v);
    };
    let min_dim = family.min_faithful_real_dim(m);
    if family.is_exceptional() {
        v.reason = if min_dim > n {
            format!("3g+1 = {n}^2, but no faithful real representation below dimension {min_dim}")
        } else {
            format!("3g+1 = {n}^2 and no involution data is tabulated for this group")
        };
        v.holds = min_dim > n;
        return Ok(v);
    }
    v.classes = family
        .involution_classes(m)
        .into_iter()
        .map(|(r, z)| ClassTrace {
            r,
            z,
            roots: involution_p(g, z, n),
        })
        .collect();
    let any_candidate = v.classes.iter().any(|c| !c.roots.candidates.is_empty());
    if family == GroupFamily::SO {
        let three_m = 3 * m;
        if three_m > 2 * n {
            let p = three_m - 2 * n;
            if p > 0 && p < m {
                v.grassmann.push(GrassmannSolution {
                    p,
                    m,
                    n,
                    p_even: p.is_multiple_of(2),
                });
            }
        }
    }
    if min_dim > n {
        v.reason = format!("no faithful real representation of dimension {n} (minimum {min_dim})");
    } else if !any_candidate {
        v.reason = "no involution admits an even p with 0 < p < n".to_string();
    } else if family == GroupFamily::SO && v.grassmann.iter().all(|s| !s.p_even) {
        v.reason = "standard inclusion: no even p solves 3m - p = 2n with p < m".to_string();
    } else {
        v.holds = false;
        v.reason = "an involution with an admissible even p exists".to_string();
    }
    Ok(v)
}

/// `involution_property` for every `m` from the smallest valid value up to `max_m`.
pub fn scan_family(family: GroupFamily, max_m: u64) -> Result<Vec<InvolutionVerdict>> {
    if family.is_exceptional() {
        return Ok(vec![involution_property(family, 0)?]);
    }
    let start = match family {
        GroupFamily::SU => 2,
        GroupFamily::SO => 3,
        _ => 1,
    };
    (start..=max_m).map(|m| involution_property(family, m)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Survivor,
    Eliminated,
}

/// A rank/dimension split `𝔤 = (exceptional part) ⊕ 𝔤*` tested against the torus bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dissection {
    pub exceptional: Vec<String>,
    pub rest_dim: i64,
    pub rest_rank: i64,
    pub bound4: bool,
    pub bound3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseTrace {
    pub t: u64,
    pub k: u64,
    pub g: u64,
    pub n: u64,
    pub verdict: Verdict,
    pub rule: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub dissections: Vec<Dissection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankSummary {
    pub t: u64,
    pub bound: u64,
    pub visited_k: Vec<u64>,
    /// Smallest `k` giving an integral `g` above the bound.
    pub first_k_beyond: u64,
    pub first_g_beyond: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub max_rank: u64,
    pub cases: Vec<CaseTrace>,
    pub ranks: Vec<RankSummary>,
}

impl Enumeration {
    pub fn survivors(&self) -> Vec<&CaseTrace> {
        self.cases
            .iter()
            .filter(|c| c.verdict == Verdict::Survivor)
            .collect()
    }
}

fn group_dim(t: u64, k: u64) -> Option<u64> {
    let num = 4u64.pow(t as u32 - 1) * k * k - 1;
    num.is_multiple_of(3).then_some(num / 3)
}

/// Splits off every multiset of exceptional simple ideals fitting into rank `t`.
fn dissections(g: u64, t: u64) -> Vec<Dissection> {
    let cards: Vec<GroupCard> = EXCEPTIONAL
        .iter()
        .map(|&f| GroupCard::simple(f, 0).expect("exceptional"))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>, u64, u64)> = vec![(0, Vec::new(), 0, 0)];
    while let Some((start, chosen, rank, dim)) = stack.pop() {
        if !chosen.is_empty() {
            let rest_dim = g as i64 - dim as i64;
            let rest_rank = t as i64 - rank as i64;
            let r2 = rest_rank * rest_rank;
            out.push(Dissection {
                exceptional: chosen.iter().map(|&i| cards[i].label.clone()).collect(),
                rest_dim,
                rest_rank,
                bound4: rest_dim >= 0 && rest_dim <= 4 * r2,
                bound3: rest_dim >= 0 && rest_dim <= 3 * r2,
            });
        }
        for (i, c) in cards.iter().enumerate().skip(start) {
            if rank + c.rank <= t {
                let mut next = chosen.clone();
                next.push(i);
                stack.push((i, next, rank + c.rank, dim + c.dim));
            }
        }
    }
    out.sort_by(|a, b| a.exceptional.cmp(&b.exceptional));
    out
}

fn judge(t: u64, k: u64, g: u64, n: u64) -> CaseTrace {
    let mut trace = CaseTrace {
        t,
        k,
        g,
        n,
        verdict: Verdict::Eliminated,
        rule: String::new(),
        detail: String::new(),
        dissections: Vec::new(),
    };
    let mut set = |rule: &str, detail: String| {
        trace.rule = rule.to_string();
        trace.detail = detail;
    };
    if g < t {
        set("dimension-below-rank", format!("dim {g} < rank {t}"));
    } else if (g - t) % 2 == 1 {
        set("root-parity", format!("dim - rank = {} is odd, but roots come in pairs", g - t));
    } else if 2 * g == n * (n - 1) {
        set("full-rotation-group", format!("dim {g} = dim SO({n}), so m = 0"));
    } else if t > n / 2 {
        set("rank-exceeds-so(n)", format!("rank {t} > rank SO({n}) = {}", n / 2));
    } else if g > 3 * t * t {
        let ds = dissections(g, t);
        if ds.iter().any(|d| d.bound3) {
            trace.verdict = Verdict::Survivor;
            set("survivor", "an exceptional summand is compatible with the torus bound".into());
        } else {
            set(
                "exceptional-summand",
                format!("dim {g} > 3·{t}² forces an exceptional summand; every split violates the torus bound"),
            );
        }
        trace.dissections = ds;
    } else {
        trace.verdict = Verdict::Survivor;
        set("survivor", format!("dim {g}, rank {t}, n = {n} pass every rule"));
    }
    trace
}

/// Runs over all `(t, k)` with `3g + 1 = 4^(t−1) k²` integral in `g` and `g ≤ 4t²`.
pub fn enumerate_cases() -> Enumeration {
    let mut max_rank = 1;
    while 4 * (max_rank + 1) * (max_rank + 1) >= (4u64.pow(max_rank as u32) - 1) / 3 {
        max_rank += 1;
    }
    let mut cases = Vec::new();
    let mut ranks = Vec::new();
    for t in 1..=max_rank {
        let bound = 4 * t * t;
        let mut visited = Vec::new();
        let mut k = 1;
        let (first_k_beyond, first_g_beyond) = loop {
            if let Some(g) = group_dim(t, k) {
                if g > bound {
                    break (k, g);
                }
                let n = 2u64.pow(t as u32 - 1) * k;
                visited.push(k);
                cases.push(judge(t, k, g, n));
            }
            k += 1;
        };
        ranks.push(RankSummary {
            t,
            bound,
            visited_k: visited,
            first_k_beyond,
            first_g_beyond,
        });
    }
    Enumeration {
        max_rank,
        cases,
        ranks,
    }
}
