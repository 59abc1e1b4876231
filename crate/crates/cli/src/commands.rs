//! One function per subcommand, each returning a serializable result.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use smflab::casimir::{casimir_char, popov_char};
use smflab::collisions::{
    find_collision, pte_bruteforce, pte_check, pte_parametric_deg2, verify_certificate, Evidence,
    PteClass, PteSolution, Verification,
};
use smflab::matrep::{
    build_irrep, check_projectors, min_poly_degree, mtype_matrix, projectors, spectrum_check,
    trace_form_casimir, ProjectorCheck, SpectrumReport,
};
use smflab::repdata::{
    dynkin_polynomial, height, in_mult_free_list, in_smf_list, incomparable_pair,
    is_multiplicity_free, is_strongly_multiplicity_free, principal_sl2_decomposition,
    principal_sl2_irreducible, weight_system, weyl_dimension,
};
use smflab::tensor::{
    decompose_c3_omega3, decompose_klimyk, decompose_minuscule, decompose_pieri_a, Decomposition,
};
use smflab::{Error, Family, LieType, Result, RootSystem, Weight};

use crate::{Render, Q};

/// Largest M-type matrix (rows) that `mspectrum` will form densely.
pub const DENSE_LIMIT: usize = 2000;

fn matrix_text(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>3}")).collect();
            format!("  [{}]\n", cells.join(""))
        })
        .collect()
}

// ---------------------------------------------------------------- info

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemData {
    pub lie_type: LieType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_root_count: usize,
    /// In simple-root coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Weight,
    pub delta: Weight,
    pub coroot_coeffs: Vec<i64>,
    pub weyl_group_order: u128,
    pub killing_scale: Q,
    pub trace_form_ratio: Option<Q>,
}

pub fn cmd_info(t: LieType) -> RootSystemData {
    let rs = RootSystem::new(t);
    RootSystemData {
        lie_type: t,
        rank: t.rank(),
        cartan: rs.cartan().to_vec(),
        positive_root_count: rs.positive_roots().len(),
        positive_roots: rs.positive_roots().to_vec(),
        highest_root: rs.highest_root(),
        delta: rs.delta(),
        coroot_coeffs: rs.coroot_coeffs().to_vec(),
        weyl_group_order: rs.weyl_group_order(),
        killing_scale: rs.killing_scale().clone().into(),
        trace_form_ratio: rs.trace_form_ratio().map(Q),
    }
}

impl Render for RootSystemData {
    fn text(&self) -> String {
        let mut s = format!("type {}\nCartan matrix\n", self.lie_type);
        s += &matrix_text(&self.cartan);
        s += &format!("positive roots: {}\n", self.positive_root_count);
        s += &format!("highest root: {}\n", self.highest_root);
        s += &format!("delta: {}\n", self.delta);
        s += &format!("coroot coefficients: {:?}\n", self.coroot_coeffs);
        s += &format!("Weyl group order: {}\n", self.weyl_group_order);
        s += &format!("Killing scale: {}\n", self.killing_scale);
        if let Some(r) = &self.trace_form_ratio {
            s += &format!("form / defining trace form: {r}\n");
        }
        s
    }
}

// ---------------------------------------------------------------- module

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleData {
    pub lie_type: LieType,
    pub highest: Weight,
    pub dim: u128,
    pub height: Q,
    pub weight_count: usize,
    pub multiplicity_free: bool,
    pub strongly_multiplicity_free: bool,
    pub incomparable_pair: Option<(Weight, Weight)>,
    pub in_mult_free_list: bool,
    pub in_smf_list: bool,
    pub principal_sl2_irreducible: bool,
    /// Highest weight of each principal `sl2` component and its count.
    pub sl2_decomposition: BTreeMap<i64, u64>,
    pub dynkin_polynomial: Vec<u64>,
}

pub fn cmd_module(t: LieType, lambda: &Weight, cap: u128) -> Result<ModuleData> {
    let rs = RootSystem::new(t);
    let dim = weyl_dimension(&rs, lambda)?;
    let ws = weight_system(&rs, lambda, cap)?;
    let a = lambda.require_dominant_integral()?;
    Ok(ModuleData {
        lie_type: t,
        highest: lambda.clone(),
        dim,
        height: height(&rs, lambda)?.into(),
        weight_count: ws.len(),
        multiplicity_free: is_multiplicity_free(&ws),
        strongly_multiplicity_free: is_strongly_multiplicity_free(&ws),
        incomparable_pair: incomparable_pair(&ws),
        in_mult_free_list: in_mult_free_list(t, &a),
        in_smf_list: in_smf_list(t, &a),
        principal_sl2_irreducible: principal_sl2_irreducible(&rs, lambda)?,
        sl2_decomposition: principal_sl2_decomposition(&rs, &ws)?,
        dynkin_polynomial: dynkin_polynomial(&rs, &ws)?.coefficients,
    })
}

impl Render for ModuleData {
    fn text(&self) -> String {
        let mut s = format!("V{} of {}\n", self.highest, self.lie_type);
        s += &format!("dim {}\nht {}\n", self.dim, self.height);
        s += &format!("distinct weights {}\n", self.weight_count);
        s += &format!("multiplicity free {}\n", self.multiplicity_free);
        s += &format!("SMF {}\n", self.strongly_multiplicity_free);
        if let Some((x, y)) = &self.incomparable_pair {
            s += &format!("incomparable weights {x} {y}\n");
        }
        s += &format!("principal sl2 irreducible {}\n", self.principal_sl2_irreducible);
        let parts: Vec<String> = self
            .sl2_decomposition
            .iter()
            .rev()
            .map(|(m, k)| if *k == 1 { m.to_string() } else { format!("{m}^{k}") })
            .collect();
        s += &format!("sl2 decomposition {{{}}}\n", parts.join(","));
        s += &format!("Dynkin polynomial {:?}\n", self.dynkin_polynomial);
        s
    }
}

// ---------------------------------------------------------------- casimir

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CasimirData {
    pub lie_type: LieType,
    pub weight: Weight,
    /// `(lambda, lambda + 2 delta)` in this crate's normalization.
    pub value: Q,
    /// The same value for the defining-representation trace form.
    pub trace_form: Option<Q>,
    pub popov: Option<Q>,
    pub agrees: Option<bool>,
}

pub fn cmd_casimir(t: LieType, lambda: &Weight, popov: bool) -> Result<CasimirData> {
    let rs = RootSystem::new(t);
    let value = casimir_char(&rs, lambda);
    let trace_form = match rs.trace_form_ratio() {
        Some(r) => Some(Q(&value / r)),
        None => None,
    };
    let popov = if popov {
        Some(popov_char(&rs, lambda)?)
    } else {
        None
    };
    Ok(CasimirData {
        lie_type: t,
        weight: lambda.clone(),
        agrees: popov.as_ref().map(|p| *p == value),
        popov: popov.map(Q),
        trace_form,
        value: Q(value),
    })
}

impl Render for CasimirData {
    fn text(&self) -> String {
        let mut s = format!("chi{} = {}\n", self.weight, self.value);
        if let Some(x) = &self.trace_form {
            s += &format!("trace form: {x}\n");
        }
        if let (Some(p), Some(ok)) = (&self.popov, self.agrees) {
            s += &format!("power sum: {p} ({})\n", if ok { "agrees" } else { "DIFFERS" });
        }
        s
    }
}

// ---------------------------------------------------------------- tensor

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    Minuscule,
    Pieri,
    C3omega3,
    Klimyk,
}

impl std::str::FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "minuscule" => Ok(Rule::Minuscule),
            "pieri" => Ok(Rule::Pieri),
            "c3omega3" => Ok(Rule::C3omega3),
            "klimyk" => Ok(Rule::Klimyk),
            _ => Err(Error::Parse(format!("unknown rule `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorData {
    pub lie_type: LieType,
    pub rule: Rule,
    pub decomposition: Decomposition,
    pub total_dim: u128,
    pub conserves_dimension: bool,
}

pub fn cmd_tensor(t: LieType, lambda: &Weight, nu: &Weight, rule: Rule, cap: u128) -> Result<TensorData> {
    let rs = RootSystem::new(t);
    let decomposition = match rule {
        Rule::Minuscule => decompose_minuscule(&rs, lambda, nu)?,
        Rule::Klimyk => decompose_klimyk(&rs, lambda, nu, cap)?,
        Rule::Pieri => {
            let a = lambda.require_dominant_integral()?;
            if t.family() != Family::A || a[1..].iter().any(|&x| x != 0) || a[0] < 1 {
                return Err(Error::Unsupported {
                    op: "the Pieri rule (needs k omega_1 in type A)",
                    lie_type: t.to_string(),
                });
            }
            decompose_pieri_a(&rs, a[0] as u32, nu)?
        }
        Rule::C3omega3 => {
            if t != LieType::c(3) || *lambda != Weight::from_ints(&[0, 0, 1]) {
                return Err(Error::Unsupported {
                    op: "the C3 omega_3 formula (needs C3 and lambda = 0,0,1)",
                    lie_type: t.to_string(),
                });
            }
            decompose_c3_omega3(&rs, nu)?
        }
    };
    Ok(TensorData {
        lie_type: t,
        rule,
        total_dim: weyl_dimension(&rs, lambda)? * weyl_dimension(&rs, nu)?,
        conserves_dimension: decomposition.conserves_dimension(&rs),
        decomposition,
    })
}

impl Render for TensorData {
    fn text(&self) -> String {
        let d = &self.decomposition;
        let mut s = format!("V{} (x) V{} =\n", d.left, d.right);
        for x in &d.summands {
            if x.mult == 1 {
                s += &format!("  V{}\n", x.weight);
            } else {
                s += &format!("  {} V{}\n", x.mult, x.weight);
            }
        }
        s += &format!(
            "dimension {} {}\n",
            self.total_dim,
            if self.conserves_dimension { "conserved" } else { "NOT conserved" }
        );
        s
    }
}

// ---------------------------------------------------------------- collide

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollideData {
    pub evidence: Evidence,
    pub verification: Option<Verification>,
}

pub fn cmd_collide(t: LieType, lambda: &Weight, bound: i64) -> Result<CollideData> {
    let rs = RootSystem::new(t);
    let evidence = find_collision(&rs, lambda, bound)?;
    let verification = match &evidence {
        Evidence::Collision(c) => Some(verify_certificate(c)),
        Evidence::Distinct(_) => None,
    };
    Ok(CollideData {
        evidence,
        verification,
    })
}

impl Render for CollideData {
    fn text(&self) -> String {
        match &self.evidence {
            Evidence::Collision(c) => {
                let mut s = format!("collision for V{} of {}\n", c.lambda, c.lie_type);
                s += &format!("  nu  = {}\n  mu1 = {}\n  mu2 = {}\n", c.nu, c.mu1, c.mu2);
                s += &format!("  chi = {}\n  via {}\n", c.char_value, c.construction);
                if let Some(v) = &self.verification {
                    s += &match &v.reason {
                        None => "  verified\n".to_string(),
                        Some(r) => format!("  verification FAILED: {r}\n"),
                    };
                }
                s
            }
            Evidence::Distinct(d) => format!(
                "no collision for V{} of {}: {} weights nu with coordinates <= {}\n",
                d.lambda, d.lie_type, d.weights_checked, d.bound
            ),
        }
    }
}

// ---------------------------------------------------------------- mspectrum

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MSpectrumData {
    pub lie_type: LieType,
    pub lambda: Weight,
    pub nu: Weight,
    pub size: usize,
    pub weight_count: usize,
    pub spectrum: SpectrumReport,
    pub min_poly_degree: usize,
    pub projectors: Option<ProjectorCheck>,
}

pub fn cmd_mspectrum(t: LieType, lambda: &Weight, nu: &Weight, seed: u64, cap: u128) -> Result<MSpectrumData> {
    let rs = RootSystem::new(t);
    let size = weyl_dimension(&rs, lambda)? * weyl_dimension(&rs, nu)?;
    let limit = cap.min(DENSE_LIMIT as u128);
    if size > limit {
        return Err(Error::CapExceeded { dim: size, cap: limit });
    }
    let rl = build_irrep(t, lambda, cap)?;
    let rn = build_irrep(t, nu, cap)?;
    let m = mtype_matrix(&rl, &rn)?;
    let spectrum = spectrum_check(&m);
    let projectors = if spectrum.distinct {
        Some(check_projectors(&projectors(&m)?))
    } else {
        None
    };
    // the scalar check on each factor guards the whole construction
    for r in [&rl, &rn] {
        let chi = smflab::matrep::rational_f64(&trace_form_casimir(&rs, &r.highest)?);
        if !smflab::matrep::is_scalar(&r.casimir_matrix(), chi, 1e-8) {
            return Err(Error::Internal(format!("Casimir of V{} is not scalar", r.highest)));
        }
    }
    Ok(MSpectrumData {
        lie_type: t,
        lambda: lambda.clone(),
        nu: nu.clone(),
        size: m.size(),
        weight_count: weight_system(&rs, lambda, cap)?.len(),
        min_poly_degree: min_poly_degree(&m, seed),
        spectrum,
        projectors,
    })
}

impl Render for MSpectrumData {
    fn text(&self) -> String {
        let sp = &self.spectrum;
        let mut s = format!(
            "M for V{} (x) V{} of {}, size {}\n",
            self.lambda, self.nu, self.lie_type, self.size
        );
        s += "predicted            observed\n";
        for (i, p) in sp.predicted.iter().enumerate() {
            let obs = sp
                .clusters
                .get(i)
                .map(|c| format!("{:.9} x{}", c.value, c.count))
                .unwrap_or_default();
            s += &format!("  {:<8} x{:<6}  {}\n", p.value.to_string(), p.multiplicity, obs);
        }
        s += &format!(
            "matches {}; distinct {}; collisions {}\n",
            sp.matches, sp.distinct, sp.collisions
        );
        s += &format!(
            "minimal polynomial degree {} (weights {})\n",
            self.min_poly_degree, self.weight_count
        );
        if let Some(p) = &self.projectors {
            s += &format!(
                "projectors: idempotency {:.1e}, orthogonality {:.1e}, completeness {:.1e}\n",
                p.idempotency, p.orthogonality, p.completeness
            );
        }
        s
    }
}

// ---------------------------------------------------------------- pte

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum PteData {
    Check {
        xs: Vec<i64>,
        ys: Vec<i64>,
        degree: u32,
        class: PteClass,
    },
    Family {
        s: i64,
        solution: PteSolution,
        class: PteClass,
    },
    Search {
        size: usize,
        degree: u32,
        bound: i64,
        solutions: Vec<PteSolution>,
    },
}

pub fn cmd_pte_check(xs: &[i64], ys: &[i64], degree: u32) -> Result<PteData> {
    Ok(PteData::Check {
        class: pte_check(xs, ys, degree)?,
        xs: xs.to_vec(),
        ys: ys.to_vec(),
        degree,
    })
}

pub fn cmd_pte_family(s: i64) -> Result<PteData> {
    let solution = pte_parametric_deg2(s);
    Ok(PteData::Family {
        s,
        class: pte_check(&solution.xs, &solution.ys, solution.degree)?,
        solution,
    })
}

pub fn cmd_pte_search(size: usize, degree: u32, bound: i64) -> Result<PteData> {
    Ok(PteData::Search {
        solutions: pte_bruteforce(size, degree, bound)?,
        size,
        degree,
        bound,
    })
}

fn sol_text(p: &PteSolution) -> String {
    format!("{:?} / {:?}", p.xs, p.ys)
}

impl Render for PteData {
    fn text(&self) -> String {
        match self {
            PteData::Check { xs, ys, degree, class } => {
                format!("{xs:?} / {ys:?} up to degree {degree}: {class:?}\n")
            }
            PteData::Family { s, solution, class } => {
                format!("s = {s}: {} ({class:?})\n", sol_text(solution))
            }
            PteData::Search { size, degree, bound, solutions } => {
                let mut out = format!(
                    "size {size}, degree {degree}, |values| <= {bound}: {} solutions\n",
                    solutions.len()
                );
                for p in solutions {
                    out += &format!("  {}\n", sol_text(p));
                }
                out
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use smflab::rational::q;

    fn roundtrip<T: Render + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug>(x: &T) {
        let back: T = serde_json::from_str(&x.json()).unwrap();
        assert_eq!(&back, x);
    }

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    #[test]
    fn info_examples() {
        assert_eq!(cmd_info(LieType::g2()).positive_root_count, 6);
        assert_eq!(cmd_info(LieType::a(1)).cartan, vec![vec![2]]);
        let c3 = cmd_info(LieType::c(3));
        roundtrip(&c3);
        assert_eq!(c3.coroot_coeffs.len(), 3);
        roundtrip(&cmd_info(LieType::e7()));
    }

    #[test]
    fn module_examples() {
        let g = cmd_module(LieType::g2(), &w(&[1, 0]), 10_000).unwrap();
        assert_eq!((g.dim, g.height.0.clone(), g.strongly_multiplicity_free), (7, q(3, 1), true));
        let e = cmd_module(LieType::e7(), &w(&[0, 0, 0, 0, 0, 0, 1]), 10_000).unwrap();
        assert_eq!((e.dim, e.height.0.clone(), e.strongly_multiplicity_free), (56, q(27, 2), false));
        let a = cmd_module(LieType::a(3), &w(&[0, 1, 0]), 10_000).unwrap();
        assert!(!a.strongly_multiplicity_free);
        assert_eq!(a.sl2_decomposition, BTreeMap::from([(0, 1), (4, 1)]));
        assert!(a.text().contains("sl2 decomposition {4,0}"));
        roundtrip(&a);
        assert!(matches!(
            cmd_module(LieType::a(3), &w(&[9, 9, 9]), 10_000),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn casimir_and_tensor() {
        let c = cmd_casimir(LieType::a(1), &w(&[1]), true).unwrap();
        assert_eq!(c.trace_form, Some(Q(q(3, 2))));
        assert_eq!(c.agrees, Some(true));
        roundtrip(&c);
        for rule in [Rule::Klimyk, Rule::Minuscule] {
            let t = cmd_tensor(LieType::a(2), &w(&[1, 0]), &w(&[1, 1]), rule, 10_000).unwrap();
            assert!(t.conserves_dimension);
            assert_eq!(t.decomposition.summands.len(), 3);
            roundtrip(&t);
        }
        let t = cmd_tensor(LieType::c(3), &w(&[0, 0, 1]), &w(&[1, 2, 0]), Rule::C3omega3, 10_000).unwrap();
        assert!(t.conserves_dimension);
        assert!(cmd_tensor(LieType::b(3), &w(&[1, 0, 0]), &w(&[1, 0, 0]), Rule::Pieri, 10_000).is_err());
        assert_eq!("c3omega3".parse::<Rule>().unwrap(), Rule::C3omega3);
    }

    #[test]
    fn collide_and_spectrum() {
        let c = cmd_collide(LieType::d(4), &w(&[1, 0, 0, 0]), 2).unwrap();
        assert!(c.evidence.is_collision());
        assert_eq!(c.verification.as_ref().map(|v| v.ok), Some(true));
        roundtrip(&c);
        let m = cmd_mspectrum(LieType::a(2), &w(&[1, 0]), &w(&[1, 0]), 7, 10_000).unwrap();
        assert!(m.spectrum.matches && m.spectrum.distinct);
        assert!(m.projectors.as_ref().unwrap().passes(1e-8));
        roundtrip(&m);
        assert!(matches!(
            cmd_mspectrum(LieType::a(2), &w(&[4, 4]), &w(&[4, 4]), 7, 10_000),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn pte_modes() {
        let f = cmd_pte_family(5).unwrap();
        assert!(matches!(f, PteData::Family { class: PteClass::Nontrivial, .. }));
        roundtrip(&f);
        let s = cmd_pte_search(2, 2, 10).unwrap();
        assert!(matches!(&s, PteData::Search { solutions, .. } if solutions.is_empty()));
        roundtrip(&cmd_pte_check(&[6, 2, 1], &[5, 4, 0], 2).unwrap());
    }
}
