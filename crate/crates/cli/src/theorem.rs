//! The equivalence sweep: criteria a, b, e, f on every multiplicity-free
//! fundamental-type module up to a rank bound.

use serde::{Deserialize, Serialize};
use smflab::collisions::{adaptive_bound, find_collision_with, verify_certificate, Evidence};
use smflab::repdata::{
    height, in_smf_list, is_strongly_multiplicity_free, principal_sl2_decomposition,
    principal_sl2_irreducible, weight_system, weyl_dimension,
};
use smflab::{LieType, Result, RootSystem, Weight};

use crate::{Render, Q};

/// Largest `k` for the `k omega_1` / `k omega_l` entries of `A_l`.
pub const SYMMETRIC_POWER_MAX: i64 = 3;
/// Largest `k` for the `k omega_1` entries of `A_1`.
pub const A1_POWER_MAX: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criteria {
    /// `Pi(V_lambda)` is totally ordered.
    pub a: bool,
    /// No character collision on `nu + Pi(V_lambda)`.
    pub b: bool,
    /// `dim V_lambda = 2 ht(lambda) + 1`.
    pub e: bool,
    /// The principal `sl2` acts irreducibly.
    pub f: bool,
}

impl Criteria {
    pub fn agree(&self) -> bool {
        self.a == self.b && self.b == self.e && self.e == self.f
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub lie_type: LieType,
    pub rank: usize,
    pub lambda: Weight,
    pub dim: u128,
    pub height: Q,
    pub criteria: Criteria,
    pub in_smf_list: bool,
    pub evidence: Evidence,
    pub certificate_verified: Option<bool>,
    pub flags: Vec<String>,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub rank_max: usize,
    pub entries: Vec<ReportEntry>,
    /// Criteria that are not computed, with the computed criterion implying each.
    pub implied: Vec<(String, String)>,
    pub flagged: usize,
    pub consistent: bool,
}

impl Report {
    pub fn offending(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.consistent)
    }
}

fn push(out: &mut Vec<(LieType, Vec<i64>)>, t: LieType, node: usize, k: i64) {
    let mut a = vec![0; t.rank()];
    a[node - 1] = k;
    if !out.contains(&(t, a.clone())) {
        out.push((t, a));
    }
}

/// The multiplicity-free candidates of rank `<= rank_max`, in a fixed order.
pub fn theorem_entries(rank_max: usize) -> Vec<(LieType, Vec<i64>)> {
    let mut out = Vec::new();
    for l in 1..=rank_max {
        let t = LieType::a(l);
        if l == 1 {
            for k in 1..=A1_POWER_MAX {
                push(&mut out, t, 1, k);
            }
            continue;
        }
        for node in 1..=l {
            push(&mut out, t, node, 1);
        }
        for k in 2..=SYMMETRIC_POWER_MAX {
            push(&mut out, t, 1, k);
            push(&mut out, t, l, k);
        }
    }
    for l in 2..=rank_max {
        let t = LieType::b(l);
        push(&mut out, t, 1, 1);
        push(&mut out, t, l, 1);
    }
    for l in 3..=rank_max {
        let t = LieType::c(l);
        push(&mut out, t, 1, 1);
        if l == 3 {
            push(&mut out, t, 3, 1);
        }
    }
    for l in 4..=rank_max {
        let t = LieType::d(l);
        for node in [1, l - 1, l] {
            push(&mut out, t, node, 1);
        }
    }
    if rank_max >= 2 {
        push(&mut out, LieType::g2(), 1, 1);
    }
    if rank_max >= 6 {
        push(&mut out, LieType::e6(), 1, 1);
        push(&mut out, LieType::e6(), 6, 1);
    }
    if rank_max >= 7 {
        push(&mut out, LieType::e7(), 7, 1);
    }
    out
}

fn known_exception(t: LieType, lambda: &[i64]) -> Option<&'static str> {
    (t == LieType::b(2) && lambda == [0, 1]).then_some(
        "B_2 omega_2 is C_2 omega_1 under B_2 = C_2; SMF by every criterion but absent from the list as written",
    )
}

pub fn evaluate(t: LieType, lambda: &[i64]) -> Result<ReportEntry> {
    let rs = RootSystem::new(t);
    let w = Weight::from_ints(lambda);
    let ws = weight_system(&rs, &w, smflab::repdata::DEFAULT_CAP)?;
    let evidence = find_collision_with(&rs, &ws, adaptive_bound(t.rank()))?;
    let certificate_verified = match &evidence {
        Evidence::Collision(c) => Some(verify_certificate(c).ok),
        Evidence::Distinct(_) => None,
    };
    let components: u64 = principal_sl2_decomposition(&rs, &ws)?.values().sum();
    let criteria = Criteria {
        a: is_strongly_multiplicity_free(&ws),
        b: !evidence.is_collision(),
        e: principal_sl2_irreducible(&rs, &w)?,
        f: components == 1,
    };
    let listed = in_smf_list(t, lambda);
    let mut flags = Vec::new();
    let mut consistent = criteria.agree() && certificate_verified != Some(false);
    if !criteria.agree() {
        flags.push("criteria disagree".to_string());
    }
    if certificate_verified == Some(false) {
        flags.push("collision certificate failed verification".to_string());
    }
    if criteria.agree() && criteria.a != listed {
        match known_exception(t, lambda) {
            Some(why) => flags.push(why.to_string()),
            None => {
                flags.push("verdict differs from the SMF list".to_string());
                consistent = false;
            }
        }
    }
    Ok(ReportEntry {
        lie_type: t,
        rank: t.rank(),
        dim: weyl_dimension(&rs, &w)?,
        height: height(&rs, &w)?.into(),
        lambda: w,
        criteria,
        in_smf_list: listed,
        evidence,
        certificate_verified,
        flags,
        consistent,
    })
}

pub fn verify_theorem(rank_max: usize) -> Result<Report> {
    let entries = theorem_entries(rank_max)
        .into_iter()
        .map(|(t, a)| evaluate(t, &a))
        .collect::<Result<Vec<_>>>()?;
    let flagged = entries
        .iter()
        .filter(|e| e.consistent && !e.flags.is_empty())
        .count();
    Ok(Report {
        rank_max,
        consistent: entries.iter().all(|e| e.consistent),
        flagged,
        implied: vec![
            (
                "c".into(),
                "implied by b: distinct eigenvalues make the Vandermonde matrix invertible".into(),
            ),
            (
                "d".into(),
                "implied by e: the free-basis statement is equivalent to dim = 2 ht + 1".into(),
            ),
        ],
        entries,
    })
}

fn yes(b: bool) -> char {
    if b {
        'y'
    } else {
        'n'
    }
}

impl Render for Report {
    fn text(&self) -> String {
        let mut s = format!(
            "{:<6} {:<22} {:>6} {:>6}  a b e f  list  evidence\n",
            "type", "lambda", "dim", "ht"
        );
        for e in &self.entries {
            let c = &e.criteria;
            let ev = match &e.evidence {
                Evidence::Collision(x) => format!("collision at nu = {}", x.nu),
                Evidence::Distinct(x) => format!("distinct, coordinates <= {}", x.bound),
            };
            s += &format!(
                "{:<6} {:<22} {:>6} {:>6}  {} {} {} {}  {:<4}  {}{}\n",
                e.lie_type.to_string(),
                e.lambda.to_string(),
                e.dim,
                e.height.to_string(),
                yes(c.a),
                yes(c.b),
                yes(c.e),
                yes(c.f),
                yes(e.in_smf_list),
                ev,
                if e.consistent { "" } else { "  INCONSISTENT" }
            );
            for f in &e.flags {
                s += &format!("    flag: {f}\n");
            }
        }
        for (k, why) in &self.implied {
            s += &format!("criterion {k}: {why}\n");
        }
        s += &format!(
            "{} entries, {} flagged, {}\n",
            self.entries.len(),
            self.flagged,
            if self.consistent { "consistent" } else { "INCONSISTENT" }
        );
        s
    }
}
