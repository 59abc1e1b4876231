//! Tensor-product decompositions: the minuscule rule, the Pieri rule for
//! `A_l`, the coefficient formulas for `C_3` `omega_3`, and the signed
//! reflection (Klimyk) rule used as a general oracle.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{q, qi, to_i64, Rational};
use crate::repdata::{is_minuscule, weight_system, weyl_dimension_int, WeightSystem};
use crate::rootsys::{Family, RootSystem};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub weight: Weight,
    pub mult: u64,
}

/// `V_left (x) V_right` as a multiset of irreducibles, ordered
/// lexicographically on fundamental coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub left: Weight,
    pub right: Weight,
    pub summands: Vec<Summand>,
}

impl Decomposition {
    fn from_map(left: &[i64], right: &[i64], map: BTreeMap<Vec<i64>, i64>) -> Result<Self> {
        let mut summands = Vec::new();
        for (w, m) in map {
            if m < 0 {
                return Err(Error::Internal(format!(
                    "negative multiplicity {m} for {}",
                    Weight::from_ints(&w)
                )));
            }
            if m > 0 {
                summands.push(Summand {
                    weight: Weight::from_ints(&w),
                    mult: m as u64,
                });
            }
        }
        Ok(Self {
            left: Weight::from_ints(left),
            right: Weight::from_ints(right),
            summands,
        })
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.summands
            .iter()
            .find(|s| &s.weight == w)
            .map_or(0, |s| s.mult)
    }

    pub fn as_map(&self) -> BTreeMap<Weight, u64> {
        self.summands
            .iter()
            .map(|s| (s.weight.clone(), s.mult))
            .collect()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.summands.iter().map(|s| s.mult).sum()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.summands.iter().all(|s| s.mult == 1)
    }

    /// `sum mult * dim V_mu == dim V_left * dim V_right`.
    pub fn conserves_dimension(&self, rs: &RootSystem) -> bool {
        let dim = |w: &Weight| -> Option<u128> {
            let v = w.to_ints()?;
            v.iter().all(|&x| x >= 0).then(|| weyl_dimension_int(rs, &v))
        };
        let (Some(l), Some(r)) = (dim(&self.left), dim(&self.right)) else {
            return false;
        };
        let mut total = 0u128;
        for s in &self.summands {
            match dim(&s.weight) {
                Some(d) => total += d * s.mult as u128,
                None => return false,
            }
        }
        total == l * r
    }
}

fn dominant_ints(rs: &RootSystem, w: &Weight) -> Result<Vec<i64>> {
    if w.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: w.len(),
        });
    }
    w.require_dominant_integral()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `V_lambda (x) V_nu = sum V_{nu + lambda_i}` over dominant shifts, for minuscule `lambda`.
pub fn decompose_minuscule(rs: &RootSystem, lambda: &Weight, nu: &Weight) -> Result<Decomposition> {
    let lam = dominant_ints(rs, lambda)?;
    let n = dominant_ints(rs, nu)?;
    if !is_minuscule(rs, lambda) {
        return Err(Error::NotMinuscule(lambda.to_string()));
    }
    let mut map = BTreeMap::new();
    for mu in rs.weyl_orbit_int(&lam) {
        let s = add(&n, &mu);
        if s.iter().all(|&x| x >= 0) {
            map.insert(s, 1);
        }
    }
    Decomposition::from_map(&lam, &n, map)
}

/// Pieri rule for `V_{k omega_1} (x) V_nu` in type `A_l`.
pub fn decompose_pieri_a(rs: &RootSystem, k: u32, nu: &Weight) -> Result<Decomposition> {
    if rs.lie_type().family() != Family::A {
        return Err(Error::Unsupported {
            op: "Pieri rule",
            lie_type: rs.lie_type().to_string(),
        });
    }
    let a = dominant_ints(rs, nu)?;
    let l = rs.rank();
    let mut map = BTreeMap::new();
    let mut c = vec![0i64; l + 1];

    fn rec(
        i: usize,
        left: i64,
        a: &[i64],
        c: &mut Vec<i64>,
        map: &mut BTreeMap<Vec<i64>, i64>,
    ) {
        let l = a.len();
        if i == l {
            c[l] = left;
            if left <= a[l - 1] {
                let b: Vec<i64> = (0..l).map(|j| a[j] + c[j] - c[j + 1]).collect();
                *map.entry(b).or_default() += 1;
            }
            return;
        }
        let cap = if i == 0 { left } else { left.min(a[i - 1]) };
        for v in 0..=cap {
            c[i] = v;
            rec(i + 1, left - v, a, c, map);
        }
    }
    rec(0, k as i64, &a, &mut c, &mut map);
    let mut lam = vec![0; l];
    lam[0] = k as i64;
    Decomposition::from_map(&lam, &a, map)
}

/// Signed-reflection rule: `sum_mu m(mu) sgn(w) V_{w(nu + mu + delta) - delta}`.
/// The cap applies to `dim V_lambda`.
pub fn decompose_klimyk(
    rs: &RootSystem,
    lambda: &Weight,
    nu: &Weight,
    cap: u128,
) -> Result<Decomposition> {
    let ws = weight_system(rs, lambda, cap)?;
    let n = dominant_ints(rs, nu)?;
    klimyk_with(rs, &ws, &n)
}

pub fn klimyk_with(rs: &RootSystem, ws: &WeightSystem, nu: &[i64]) -> Result<Decomposition> {
    let mut map: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for e in ws.entries() {
        let mut g: Vec<i64> = nu.iter().zip(&e.coords).map(|(x, y)| x + y + 1).collect();
        let odd = rs.to_dominant_int(&mut g);
        if g.contains(&0) {
            continue;
        }
        let target: Vec<i64> = g.iter().map(|x| x - 1).collect();
        let sign = if odd { -1 } else { 1 };
        *map.entry(target).or_default() += sign * e.mult as i64;
    }
    Decomposition::from_map(&ws.highest, nu, map)
}

/// Pochhammer symbol `(z)_k`.
fn poch(z: &Rational, k: u32) -> Rational {
    (0..k).fold(qi(1), |acc, i| acc * (z + qi(i as i64)))
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn fact(n: u32) -> Rational {
    (1..=n as i64).fold(qi(1), |acc, i| acc * qi(i))
}

/// `T_{2k+1}`.
pub fn t_coeff(k: u32) -> i64 {
    let n = 2 * k as i64 + 1;
    let mut total = 0i64;
    for s in 1..=n {
        let inner: i64 = (1..=s)
            .map(|t| (-1i64).pow((s - t) as u32) * binom(s, t) * t.pow(n as u32))
            .sum();
        let sgn = (-1i64).pow((k as i64 + s + 1) as u32);
        total += sgn * 2i64.pow((n - s) as u32) * inner;
    }
    total
}

/// `K^{(3)}_{r,l}` for odd `l` with `1 <= l <= r`.
pub fn k_coeff(r: i64, l: i64) -> i64 {
    assert!(l % 2 == 1 && 1 <= l && l <= r, "K^(3)_(r,l) needs odd 1 <= l <= r");
    let sgn = (-1i64).pow(((l - 1) / 2) as u32);
    sgn * 2i64.pow(l as u32) * binom(3 - r + l, l) * t_coeff(((l - 1) / 2) as u32)
}

/// The term `4^k (1)_k (3/2)_k / (k! (3)_k)`.
fn c_term(k: u32) -> Rational {
    let four = Rational::from_integer(4.into());
    let num = num_traits::pow(four, k as usize) * poch(&qi(1), k) * poch(&q(3, 2), k);
    num / (fact(k) * poch(&qi(3), k))
}

/// `C^{(3)}_{3,s}`.
pub fn c_coeff(s: i64) -> i64 {
    let m = (3 - s) as u32;
    let mut v = c_term(m);
    for k in (1..=2 - s).filter(|k| k % 2 == 1) {
        v -= c_term(k as u32) * qi(k_coeff(3 - k, 3 - s - k));
    }
    to_i64(&v).expect("C coefficients are integers")
}

/// How to read the exclusion condition `exists i, i+1 in I, a_i = 0, -eps_i = eps_{i+1} = 1`
/// in the `N` coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExclusionReading {
    /// Both `i` and `i + 1` belong to `I`.
    WithinI,
    /// `i` belongs to `I`; `i + 1` may lie anywhere in `{1, 2, 3}`, taking
    /// its sign from `J` when it lies there.
    Ambient,
}

/// `N_{1^s, e_{eps J}}(rho + nu)`.
fn n_coeff(
    s: usize,
    j: &[usize],
    eps_j: &[i64],
    a: &[i64],
    reading: ExclusionReading,
) -> i64 {
    let free: Vec<usize> = (1..=3).filter(|x| !j.contains(x)).collect();
    let size = s - j.len();
    let base = 2i64.pow(size as u32) * binom(free.len() as i64, size as i64);
    let mut bad = 0;
    for mask in 0u32..(1 << free.len()) {
        if mask.count_ones() as usize != size {
            continue;
        }
        let i_set: Vec<usize> = free
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .map(|(_, &x)| x)
            .collect();
        for signs in 0u32..(1 << size) {
            let eps_of = |x: usize| -> Option<i64> {
                if let Some(p) = i_set.iter().position(|&y| y == x) {
                    Some(if signs & (1 << p) != 0 { 1 } else { -1 })
                } else if reading == ExclusionReading::Ambient {
                    j.iter().position(|&y| y == x).map(|p| eps_j[p])
                } else {
                    None
                }
            };
            let hit = i_set.iter().any(|&i| {
                i < 3
                    && a[i - 1] == 0
                    && eps_of(i) == Some(-1)
                    && eps_of(i + 1) == Some(1)
            });
            if hit {
                bad += 1;
            }
        }
    }
    base - bad
}

/// Coefficient formulas for `V_{omega_3} (x) V_nu` in type `C_3`, with the
/// exclusion reading that matches the Klimyk oracle.
pub fn decompose_c3_omega3(rs: &RootSystem, nu: &Weight) -> Result<Decomposition> {
    decompose_c3_omega3_with(rs, nu, ExclusionReading::WithinI)
}

pub fn decompose_c3_omega3_with(
    rs: &RootSystem,
    nu: &Weight,
    reading: ExclusionReading,
) -> Result<Decomposition> {
    if rs.lie_type() != crate::rootsys::LieType::c(3) {
        return Err(Error::Unsupported {
            op: "C3 omega3 coefficient formula",
            lie_type: rs.lie_type().to_string(),
        });
    }
    let a = dominant_ints(rs, nu)?;
    let mut map = BTreeMap::new();
    for j in [vec![1], vec![2], vec![3], vec![1, 2, 3]] {
        for signs in 0u32..(1 << j.len()) {
            let eps_j: Vec<i64> = (0..j.len())
                .map(|p| if signs & (1 << p) != 0 { 1 } else { -1 })
                .collect();
            let mut e = vec![qi(0); 3];
            for (p, &x) in j.iter().enumerate() {
                e[x - 1] = qi(eps_j[p]);
            }
            let shift = rs.from_epsilon(&e)?.to_ints().expect("integral");
            let target = add(&a, &shift);
            if target.iter().any(|&x| x < 0) {
                continue;
            }
            let mut n = 0i64;
            for s in (j.len()..=3).filter(|s| (3 - s) % 2 == 0) {
                n += c_coeff(s as i64) * n_coeff(s, &j, &eps_j, &a, reading);
            }
            if n != 0 {
                map.insert(target, n);
            }
        }
    }
    Decomposition::from_map(&[0, 0, 1], &a, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repdata::DEFAULT_CAP;
    use crate::rootsys::LieType;

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    #[test]
    fn minuscule_examples() {
        let a2 = RootSystem::new(LieType::a(2));
        let d = decompose_minuscule(&a2, &w(&[1, 0]), &w(&[1, 0])).unwrap();
        assert_eq!(d.as_map(), BTreeMap::from([(w(&[2, 0]), 1), (w(&[0, 1]), 1)]));
        assert!(d.conserves_dimension(&a2));
        let d = decompose_minuscule(&a2, &w(&[1, 0]), &w(&[0, 0])).unwrap();
        assert_eq!(d.summands.len(), 1);
        let e6 = RootSystem::new(LieType::e6());
        let d = decompose_minuscule(&e6, &w(&[1, 0, 0, 0, 0, 0]), &w(&[3; 6])).unwrap();
        assert_eq!(d.summands.len(), 27);
        assert!(decompose_minuscule(&a2, &w(&[1, 1]), &w(&[0, 0])).is_err());
    }

    #[test]
    fn pieri_examples() {
        let a2 = RootSystem::new(LieType::a(2));
        let d = decompose_pieri_a(&a2, 1, &w(&[1, 0])).unwrap();
        assert_eq!(d.as_map(), BTreeMap::from([(w(&[2, 0]), 1), (w(&[0, 1]), 1)]));
        let d = decompose_pieri_a(&a2, 2, &w(&[0, 0])).unwrap();
        assert_eq!(d.as_map(), BTreeMap::from([(w(&[2, 0]), 1)]));
        let a3 = RootSystem::new(LieType::a(3));
        let d = decompose_pieri_a(&a3, 3, &w(&[0, 1, 0])).unwrap();
        assert!(d.conserves_dimension(&a3));
        let k = decompose_klimyk(&a3, &w(&[3, 0, 0]), &w(&[0, 1, 0]), DEFAULT_CAP).unwrap();
        assert_eq!(d.summands, k.summands);
    }

    #[test]
    fn klimyk_examples() {
        let e7 = RootSystem::new(LieType::e7());
        let om7 = w(&[0, 0, 0, 0, 0, 0, 1]);
        let k = decompose_klimyk(&e7, &om7, &om7, DEFAULT_CAP).unwrap();
        let m = decompose_minuscule(&e7, &om7, &om7).unwrap();
        assert_eq!(k.summands, m.summands);
        assert!(k.conserves_dimension(&e7));
        let b3 = RootSystem::new(LieType::b(3));
        let k = decompose_klimyk(&b3, &w(&[0, 0, 0]), &w(&[1, 2, 1]), DEFAULT_CAP).unwrap();
        assert_eq!(k.as_map(), BTreeMap::from([(w(&[1, 2, 1]), 1)]));
        let a2 = RootSystem::new(LieType::a(2));
        let k = decompose_klimyk(&a2, &w(&[1, 1]), &w(&[1, 1]), DEFAULT_CAP).unwrap();
        assert_eq!(k.multiplicity(&w(&[1, 1])), 2);
        assert!(k.conserves_dimension(&a2));
    }

    #[test]
    fn c3_coefficients() {
        assert_eq!(t_coeff(0), 1);
        assert_eq!(k_coeff(2, 1), 4);
        assert_eq!(c_coeff(3), 1);
        assert_eq!(c_coeff(1), -3);
    }

    #[test]
    fn c3_deep_chamber_values() {
        let c3 = RootSystem::new(LieType::c(3));
        let nu = w(&[3, 3, 3]);
        let d = decompose_c3_omega3(&c3, &nu).unwrap();
        let mu2 = c3.from_epsilon(&[qi(0), qi(1), qi(0)]).unwrap();
        let mixed = c3.from_epsilon(&[qi(1), qi(-1), qi(1)]).unwrap();
        assert_eq!(d.multiplicity(&(&nu + &mu2)), 1);
        assert_eq!(d.multiplicity(&(&nu + &mixed)), 1);
        assert_eq!(d.summands.len(), 14);
    }

    #[test]
    fn c3_matches_klimyk_on_rho() {
        let c3 = RootSystem::new(LieType::c(3));
        let nu = w(&[1, 1, 1]);
        let d = decompose_c3_omega3(&c3, &nu).unwrap();
        assert!(d.conserves_dimension(&c3));
        let k = decompose_klimyk(&c3, &w(&[0, 0, 1]), &nu, DEFAULT_CAP).unwrap();
        assert_eq!(d.summands, k.summands);
    }

    #[test]
    fn c3_readings_against_klimyk() {
        let c3 = RootSystem::new(LieType::c(3));
        let ws = weight_system(&c3, &w(&[0, 0, 1]), DEFAULT_CAP).unwrap();
        for a1 in 0..=3 {
            for a2 in 0..=3 {
                for a3 in 0..=3 {
                    let nu = w(&[a1, a2, a3]);
                    let k = klimyk_with(&c3, &ws, &[a1, a2, a3]).unwrap();
                    let within = decompose_c3_omega3_with(&c3, &nu, ExclusionReading::WithinI).unwrap();
                    assert_eq!(within.summands, k.summands, "{nu}");
                    let amb = decompose_c3_omega3_with(&c3, &nu, ExclusionReading::Ambient).unwrap();
                    assert_eq!(amb.summands, k.summands, "{nu}");
                }
            }
        }
    }
}
