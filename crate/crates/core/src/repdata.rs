//! Weight systems, dimensions, heights, the principal `sl2` restriction and
//! the Dynkin polynomial.

use std::collections::{BTreeMap, HashMap};

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{qi, Rational};
use crate::rootsys::{Family, LieType, RootSystem};
use crate::weight::Weight;

pub const DEFAULT_CAP: u128 = 10_000;

/// Weyl dimension formula, exact.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    let a = check_dominant(rs, lambda)?;
    Ok(weyl_dimension_int(rs, &a))
}

pub(crate) fn weyl_dimension_int(rs: &RootSystem, a: &[i64]) -> u128 {
    let shifted: Vec<i64> = a.iter().map(|x| x + 1).collect();
    let delta = vec![1i64; rs.rank()];
    let mut num = num_bigint::BigInt::from(1);
    let mut den = num_bigint::BigInt::from(1);
    for alpha in rs.positive_roots_fund() {
        num *= rs.ip_int(&shifted, alpha);
        den *= rs.ip_int(&delta, alpha);
    }
    (num / den).to_u128().expect("dimension fits in u128")
}

fn check_dominant(rs: &RootSystem, lambda: &Weight) -> Result<Vec<i64>> {
    if lambda.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: lambda.len(),
        });
    }
    lambda.require_dominant_integral()
}

/// `ht(lambda)`: sum of the simple-root coordinates.
pub fn height(rs: &RootSystem, lambda: &Weight) -> Result<Rational> {
    rs.height(lambda)
}

/// True when `<lambda, alpha^vee>` is 0 or 1 for every positive root.
pub fn is_minuscule(rs: &RootSystem, lambda: &Weight) -> bool {
    let Some(a) = lambda.to_ints() else {
        return false;
    };
    if a.len() != rs.rank() || a.iter().any(|&x| x < 0) {
        return false;
    }
    rs.positive_roots_fund().iter().all(|alpha| {
        let p = 2 * rs.ip_int(&a, alpha);
        let n = rs.ip_int(alpha, alpha);
        p == 0 || p == n
    })
}

/// One weight of a module together with its multiplicity and its depth
/// `lambda - mu` in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEntry {
    pub coords: Vec<i64>,
    pub mult: u64,
    pub depth: Vec<i64>,
}

impl WeightEntry {
    pub fn weight(&self) -> Weight {
        Weight::from_ints(&self.coords)
    }

    pub fn level(&self) -> i64 {
        self.depth.iter().sum()
    }
}

/// The weight multiset of an irreducible module.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WeightSystem {
    pub lie_type: LieType,
    pub highest: Vec<i64>,
    #[serde(skip)]
    entries: Vec<WeightEntry>,
    #[serde(skip)]
    index: HashMap<Vec<i64>, usize>,
}

impl WeightSystem {
    /// Entries sorted by level (depth below the highest weight), then
    /// lexicographically descending.
    pub fn entries(&self) -> &[WeightEntry] {
        &self.entries
    }

    pub fn highest_weight(&self) -> Weight {
        Weight::from_ints(&self.highest)
    }

    pub fn multiplicity(&self, mu: &[i64]) -> u64 {
        self.index.get(mu).map_or(0, |&i| self.entries[i].mult)
    }

    pub fn contains(&self, mu: &[i64]) -> bool {
        self.index.contains_key(mu)
    }

    pub fn dim(&self) -> u128 {
        self.entries.iter().map(|e| e.mult as u128).sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Weights in a deterministic order with multiplicities.
    pub fn table(&self) -> BTreeMap<Weight, u64> {
        self.entries.iter().map(|e| (e.weight(), e.mult)).collect()
    }

    fn from_entries(lie_type: LieType, highest: Vec<i64>, mut entries: Vec<WeightEntry>) -> Self {
        entries.sort_by(|x, y| x.level().cmp(&y.level()).then_with(|| y.coords.cmp(&x.coords)));
        let index = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.coords.clone(), i))
            .collect();
        Self {
            lie_type,
            highest,
            entries,
            index,
        }
    }
}

/// Computes `Pi(V_lambda)` with multiplicities. Minuscule weights use the
/// Weyl orbit; everything else goes through Freudenthal's recursion on
/// dominant weights followed by orbit expansion.
pub fn weight_system(rs: &RootSystem, lambda: &Weight, cap: u128) -> Result<WeightSystem> {
    let a = check_dominant(rs, lambda)?;
    let dim = weyl_dimension_int(rs, &a);
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap });
    }
    let ws = if is_minuscule(rs, lambda) {
        minuscule_system(rs, &a)
    } else {
        freudenthal_system(rs, &a)
    };
    if ws.dim() != dim {
        return Err(Error::Internal(format!(
            "weight system of {lambda} has total multiplicity {} but Weyl dimension {dim}",
            ws.dim()
        )));
    }
    Ok(ws)
}

fn depth_of(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> Vec<i64> {
    let diff: Vec<i64> = lambda.iter().zip(mu).map(|(x, y)| x - y).collect();
    rs.root_coords_int(&diff)
        .expect("weights of an irreducible module differ by roots")
}

fn minuscule_system(rs: &RootSystem, lambda: &[i64]) -> WeightSystem {
    let entries = rs
        .weyl_orbit_int(lambda)
        .into_iter()
        .map(|mu| WeightEntry {
            depth: depth_of(rs, lambda, &mu),
            coords: mu,
            mult: 1,
        })
        .collect();
    WeightSystem::from_entries(rs.lie_type(), lambda.to_vec(), entries)
}

/// Dominant weights `mu <= lambda`, reached by subtracting positive roots
/// while staying dominant.
pub fn dominant_weights(rs: &RootSystem, lambda: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut out = vec![lambda.to_vec()];
    seen.insert(lambda.to_vec(), ());
    let mut i = 0;
    while i < out.len() {
        let mu = out[i].clone();
        i += 1;
        for alpha in rs.positive_roots_fund() {
            let nu: Vec<i64> = mu.iter().zip(alpha).map(|(x, y)| x - y).collect();
            if nu.iter().all(|&x| x >= 0) && !seen.contains_key(&nu) {
                seen.insert(nu.clone(), ());
                out.push(nu);
            }
        }
    }
    out
}

fn freudenthal_system(rs: &RootSystem, lambda: &[i64]) -> WeightSystem {
    let mut dom = dominant_weights(rs, lambda);
    dom.sort_by_key(|mu| depth_of(rs, lambda, mu).iter().sum::<i64>());

    let shifted = |w: &[i64]| -> Vec<i64> { w.iter().map(|x| x + 1).collect() };
    let lam_d = shifted(lambda);
    let norm_top = rs.ip_int(&lam_d, &lam_d);

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(lambda.to_vec(), 1);
    let lookup = |mult: &HashMap<Vec<i64>, u64>, w: &[i64]| -> u64 {
        let mut d = w.to_vec();
        rs.to_dominant_int(&mut d);
        mult.get(&d).copied().unwrap_or(0)
    };

    for mu in dom.iter().skip(1) {
        let mu_d = shifted(mu);
        let denom = norm_top - rs.ip_int(&mu_d, &mu_d);
        let mut num: i64 = 0;
        for alpha in rs.positive_roots_fund() {
            let mut w = mu.clone();
            loop {
                for (x, y) in w.iter_mut().zip(alpha) {
                    *x += y;
                }
                let m = lookup(&mult, &w);
                if m == 0 {
                    // weights along an alpha-string form an unbroken interval
                    break;
                }
                num += m as i64 * rs.ip_int(&w, alpha);
            }
        }
        let m = 2 * num / denom;
        debug_assert_eq!(2 * num % denom, 0, "Freudenthal quotient is integral");
        if m > 0 {
            mult.insert(mu.clone(), m as u64);
        }
    }

    let mut entries = Vec::new();
    for (mu, m) in &mult {
        for w in rs.weyl_orbit_int(mu) {
            entries.push(WeightEntry {
                depth: depth_of(rs, lambda, &w),
                coords: w,
                mult: *m,
            });
        }
    }
    WeightSystem::from_entries(rs.lie_type(), lambda.to_vec(), entries)
}

pub fn is_multiplicity_free(ws: &WeightSystem) -> bool {
    ws.entries().iter().all(|e| e.mult == 1)
}

/// Multiplicity free and totally ordered by dominance. Entries are sorted by
/// level, so a total order exists iff consecutive entries are comparable.
pub fn is_strongly_multiplicity_free(ws: &WeightSystem) -> bool {
    is_multiplicity_free(ws)
        && ws.entries().windows(2).all(|p| {
            p[0].depth
                .iter()
                .zip(&p[1].depth)
                .all(|(x, y)| x <= y)
        })
}

/// A pair of incomparable weights, if any.
pub fn incomparable_pair(ws: &WeightSystem) -> Option<(Weight, Weight)> {
    let es = ws.entries();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let le = es[i].depth.iter().zip(&es[j].depth).all(|(x, y)| x <= y);
            let ge = es[i].depth.iter().zip(&es[j].depth).all(|(x, y)| x >= y);
            if !le && !ge {
                return Some((es[i].weight(), es[j].weight()));
            }
        }
    }
    None
}

/// `dim V_lambda == 2 ht(lambda) + 1`.
pub fn principal_sl2_irreducible(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    let dim = weyl_dimension(rs, lambda)?;
    let ht = height(rs, lambda)?;
    Ok(qi(2) * ht + qi(1) == Rational::from_integer((dim as i128).into()))
}

/// Restriction to the principal `sl2`: highest weight `m` of each component
/// mapped to its number of occurrences.
pub fn principal_sl2_decomposition(
    rs: &RootSystem,
    ws: &WeightSystem,
) -> Result<BTreeMap<i64, u64>> {
    let c = rs.coroot_coeffs();
    let mut hist: BTreeMap<i64, i64> = BTreeMap::new();
    for e in ws.entries() {
        let m: i64 = e.coords.iter().zip(c).map(|(a, c)| a * c).sum();
        *hist.entry(m).or_default() += e.mult as i64;
    }
    let mut out = BTreeMap::new();
    for (&m, &n) in hist.range(0..) {
        let above = hist.get(&(m + 2)).copied().unwrap_or(0);
        let count = n - above;
        if count < 0 {
            return Err(Error::Internal(format!(
                "negative sl2 component count at h0-eigenvalue {m}"
            )));
        }
        if count > 0 {
            out.insert(m, count as u64);
        }
    }
    let total: u128 = out.iter().map(|(&m, &k)| (m as u128 + 1) * k as u128).sum();
    if total != ws.dim() {
        return Err(Error::Internal(format!(
            "sl2 components account for {total} of {} dimensions",
            ws.dim()
        )));
    }
    Ok(out)
}

/// Coefficients of the Dynkin polynomial, indexed by floor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinPolynomial {
    pub coefficients: Vec<u64>,
}

impl DynkinPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn value_at_one(&self) -> u128 {
        self.coefficients.iter().map(|&c| c as u128).sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let c = &self.coefficients;
        c.iter().eq(c.iter().rev())
    }
}

/// `-w_0(lambda)`, via the anti-dominant element of the orbit.
pub fn dual_weight(rs: &RootSystem, lambda: &[i64]) -> Vec<i64> {
    let mut w = lambda.to_vec();
    rs.to_antidominant_int(&mut w);
    w.iter().map(|x| -x).collect()
}

/// `D_lambda(q) = sum_mu m(mu) q^{floor(mu)}` with `floor(mu) = ht(lambda^* + mu)`.
pub fn dynkin_polynomial(rs: &RootSystem, ws: &WeightSystem) -> Result<DynkinPolynomial> {
    let star = dual_weight(rs, &ws.highest);
    let mut coeffs: Vec<u64> = Vec::new();
    for e in ws.entries() {
        let s: Vec<i64> = star.iter().zip(&e.coords).map(|(x, y)| x + y).collect();
        let c = rs
            .root_coords_int(&s)
            .ok_or_else(|| Error::Internal("lambda* + mu outside the root lattice".into()))?;
        let floor: i64 = c.iter().sum();
        if floor < 0 {
            return Err(Error::Internal(format!("negative floor {floor}")));
        }
        let f = floor as usize;
        if coeffs.len() <= f {
            coeffs.resize(f + 1, 0);
        }
        coeffs[f] += e.mult;
    }
    Ok(DynkinPolynomial {
        coefficients: coeffs,
    })
}

/// Mechanical membership in the list of multiplicity-free modules.
pub fn in_mult_free_list(t: LieType, lambda: &[i64]) -> bool {
    let l = t.rank();
    let support: Vec<usize> = (0..l).filter(|&i| lambda[i] != 0).collect();
    if support.len() != 1 {
        return false;
    }
    let i = support[0] + 1;
    let k = lambda[support[0]];
    match t.family() {
        Family::A => k == 1 || i == 1 || i == l,
        Family::B => k == 1 && (i == 1 || i == l),
        Family::C => k == 1 && (i == 1 || (l == 3 && i == 3)),
        Family::D => k == 1 && (i == 1 || i == l - 1 || i == l),
        Family::E6 => k == 1 && (i == 1 || i == 6),
        Family::E7 => k == 1 && i == 7,
        Family::G2 => k == 1 && i == 1,
    }
}

/// Membership in the list of strongly multiplicity-free modules, read
/// literally (no accidental isomorphisms applied).
pub fn in_smf_list(t: LieType, lambda: &[i64]) -> bool {
    let l = t.rank();
    let support: Vec<usize> = (0..l).filter(|&i| lambda[i] != 0).collect();
    if support.len() != 1 {
        return false;
    }
    let i = support[0] + 1;
    let k = lambda[support[0]];
    match t.family() {
        Family::A if l == 1 => true,
        Family::A => k == 1 && (i == 1 || i == l),
        Family::B | Family::C | Family::G2 => k == 1 && i == 1,
        _ => false,
    }
}
