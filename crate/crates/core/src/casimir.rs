//! Quadratic Casimir characters, Popov's power-sum formulas and the
//! eigenvalue functions `f_{C,i}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{q, qi, Rational};
use crate::repdata::WeightSystem;
use crate::rootsys::{Family, LieType, RootSystem};
use crate::weight::Weight;

/// `chi_lambda(C) = (lambda, lambda + 2 delta)`.
pub fn casimir_char(rs: &RootSystem, lambda: &Weight) -> Rational {
    rs.casimir_value(lambda)
}

/// Orthogonal coordinates attached to a Young tableau, together with the
/// constant `alpha` and the signed index set used by the power sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YoungCoords {
    pub lie_type: LieType,
    /// `zeta_i` for the positive indices (all of `1..=l+1` for type A).
    #[serde(with = "crate::rational::pair_vec")]
    pub zeta: Vec<Rational>,
    #[serde(with = "crate::rational::pair")]
    pub alpha: Rational,
    pub index_set: Vec<i64>,
}

impl YoungCoords {
    /// `zeta_i` for any index in the index set, using `zeta_{-i} = -zeta_i`.
    pub fn get(&self, i: i64) -> Rational {
        match i {
            0 => qi(0),
            i if i > 0 => self.zeta[(i - 1) as usize].clone(),
            i => -self.zeta[(-i - 1) as usize].clone(),
        }
    }
}

fn unsupported(t: LieType) -> Error {
    Error::Unsupported {
        op: "power-sum Casimir formula",
        lie_type: t.to_string(),
    }
}

pub fn young_coords(rs: &RootSystem, lambda: &Weight) -> Result<YoungCoords> {
    let t = rs.lie_type();
    let l = t.rank();
    if lambda.len() != l {
        return Err(Error::DimensionMismatch {
            expected: l,
            got: lambda.len(),
        });
    }
    let a = lambda.coords();
    let tail = |i: usize, end: usize| -> Rational { a[i..end].iter().sum() };
    let half = q(1, 2);
    let li = l as i64;
    let (zeta, alpha, index_set): (Vec<Rational>, Rational, Vec<i64>) = match t.family() {
        Family::A => {
            let f: Vec<Rational> = (0..=l)
                .map(|i| if i < l { tail(i, l) } else { qi(0) })
                .collect();
            let mean = f.iter().sum::<Rational>() / qi(li + 1);
            (
                f.into_iter().map(|x| x - &mean).collect(),
                q(li, 2),
                (1..=li + 1).collect(),
            )
        }
        Family::B => {
            let mut z: Vec<Rational> = (0..l - 1)
                .map(|i| tail(i, l - 1) + &a[l - 1] * &half)
                .collect();
            z.push(&a[l - 1] * &half);
            (z, qi(li) - &half, (-li..=li).collect())
        }
        Family::C => (
            (0..l).map(|i| tail(i, l)).collect(),
            qi(li),
            (-li..=li).filter(|&i| i != 0).collect(),
        ),
        Family::D => {
            let s = (&a[l - 2] + &a[l - 1]) * &half;
            let mut z: Vec<Rational> = (0..l - 2).map(|i| tail(i, l - 2) + &s).collect();
            z.push(s);
            if l % 2 == 0 {
                z.push((&a[l - 1] - &a[l - 2]) * &half);
            } else {
                z.push((&a[l - 2] - &a[l - 1]) * &half);
            }
            (z, qi(li - 1), (-li..=li).filter(|&i| i != 0).collect())
        }
        _ => return Err(unsupported(t)),
    };
    Ok(YoungCoords {
        lie_type: t,
        zeta,
        alpha,
        index_set,
    })
}

fn sign(i: i64) -> i64 {
    i.signum()
}

/// `r_i = (alpha + 1) eps_i - i`.
fn r(alpha: &Rational, i: i64) -> Rational {
    (alpha + qi(1)) * qi(sign(i)) - qi(i)
}

/// Power sum `S(zeta) = sum_{i in I} (zeta_i + r_i + alpha)^2 - (r_i + alpha)^2`.
pub fn power_sum(y: &YoungCoords) -> Rational {
    let mut s = qi(0);
    for &i in &y.index_set {
        let base = r(&y.alpha, i) + &y.alpha;
        let shifted = y.get(i) + &base;
        s += &shifted * &shifted - &base * &base;
    }
    s
}

/// Casimir character through Popov's power sum.
pub fn popov_char(rs: &RootSystem, lambda: &Weight) -> Result<Rational> {
    lambda.require_dominant_integral()?;
    Ok(power_sum(&young_coords(rs, lambda)?))
}

/// The per-type expanded forms of the power sum, kept separate from
/// [`power_sum`] so the two transcriptions check each other.
pub fn popov_char_expanded(rs: &RootSystem, lambda: &Weight) -> Result<Rational> {
    let y = young_coords(rs, lambda)?;
    let l = rs.rank() as i64;
    let z = |i: i64| y.get(i);
    let sq = |x: Rational| &x * &x;
    let alpha = y.alpha.clone();
    let pair_const = |i: i64| sq(r(&alpha, i) + &alpha) + sq(r(&alpha, -i) + &alpha);
    let v = match rs.lie_type().family() {
        Family::A => (1..=l + 1)
            .map(|i| sq(z(i) - qi(i) + qi(l + 1)) - sq(qi(l + 1 - i)))
            .sum(),
        Family::C => {
            let main: Rational = (1..=l)
                .map(|i| sq(z(i) - qi(i) + qi(2 * l + 1)) + sq(z(i) - qi(i) + qi(1)))
                .sum();
            main - (1..=l).map(pair_const).sum::<Rational>()
        }
        Family::B => {
            let main: Rational = (1..=l)
                .map(|i| sq(z(i) - qi(i) + qi(2 * l)) + sq(z(i) - qi(i) + qi(1)))
                .sum();
            let consts: Rational = (-l..=l).map(|i| sq(r(&alpha, i) + &alpha)).sum();
            sq(alpha.clone()) + main - consts
        }
        Family::D => {
            let main: Rational = (1..=l)
                .map(|i| sq(z(i) - qi(i) + qi(2 * l - 1)) + sq(z(i) - qi(i) + qi(1)))
                .sum();
            main - (1..=l).map(pair_const).sum::<Rational>()
        }
        _ => return Err(unsupported(rs.lie_type())),
    };
    Ok(v)
}

/// The eigenvalue function `f_{C,i}(nu) = (nu, lambda_i) + (chi(lambda_i) - chi(lambda)) / 2`,
/// stored as an affine form in the fundamental coordinates of `nu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigFn {
    pub lambda: Weight,
    pub lambda_i: Weight,
    #[serde(with = "crate::rational::pair_vec")]
    pub linear: Vec<Rational>,
    #[serde(with = "crate::rational::pair")]
    pub constant: Rational,
}

impl EigFn {
    pub fn eval(&self, nu: &Weight) -> Rational {
        assert_eq!(nu.len(), self.linear.len(), "weight length mismatch");
        nu.coords()
            .iter()
            .zip(&self.linear)
            .fold(self.constant.clone(), |acc, (a, c)| acc + a * c)
    }
}

fn eig_fn_unchecked(rs: &RootSystem, lambda: &Weight, lambda_i: &Weight) -> EigFn {
    let l = rs.rank();
    let linear = (0..l)
        .map(|j| {
            rs.inner_product(&Weight::fundamental(l, j + 1), lambda_i)
                .expect("lengths match")
        })
        .collect();
    let constant = (casimir_char(rs, lambda_i) - casimir_char(rs, lambda)) / qi(2);
    EigFn {
        lambda: lambda.clone(),
        lambda_i: lambda_i.clone(),
        linear,
        constant,
    }
}

/// `f_{C,i}` for a weight `lambda_i` of `V_lambda`.
pub fn eig_fn(rs: &RootSystem, ws: &WeightSystem, lambda_i: &Weight) -> Result<EigFn> {
    let lambda = ws.highest_weight();
    let member = lambda_i
        .to_ints()
        .map(|v| v.len() == rs.rank() && ws.contains(&v))
        .unwrap_or(false);
    if !member {
        return Err(Error::NotAWeight {
            weight: lambda_i.to_string(),
            highest: lambda.to_string(),
        });
    }
    Ok(eig_fn_unchecked(rs, &lambda, lambda_i))
}

/// Every `f_{C,i}`, in the order of `ws.entries()`.
pub fn eig_fns(rs: &RootSystem, ws: &WeightSystem) -> Vec<EigFn> {
    let lambda = ws.highest_weight();
    ws.entries()
        .iter()
        .map(|e| eig_fn_unchecked(rs, &lambda, &e.weight()))
        .collect()
}

/// `sigma(nu + delta) - delta`, with `sigma` a word in simple reflections
/// (0-based indices, rightmost acts first).
pub fn translated_weyl_action(rs: &RootSystem, word: &[usize], nu: &Weight) -> Weight {
    let delta = rs.delta();
    let moved = rs.apply_word(word, &(nu + &delta));
    &moved - &delta
}

/// First pair of distinct weights `lambda_i, lambda_j` with `nu + lambda_i`,
/// `nu + lambda_j` dominant and equal Casimir characters.
pub fn char_collision(rs: &RootSystem, ws: &WeightSystem, nu: &[i64]) -> Option<(Weight, Weight)> {
    let shifted: Vec<(Vec<i64>, Rational)> = ws
        .entries()
        .iter()
        .filter_map(|e| {
            let s: Vec<i64> = nu.iter().zip(&e.coords).map(|(a, b)| a + b).collect();
            if s.iter().all(|&x| x >= 0) {
                let c = casimir_char(rs, &Weight::from_ints(&s));
                Some((e.coords.clone(), c))
            } else {
                None
            }
        })
        .collect();
    for i in 0..shifted.len() {
        for j in i + 1..shifted.len() {
            if shifted[i].1 == shifted[j].1 {
                return Some((
                    Weight::from_ints(&shifted[i].0),
                    Weight::from_ints(&shifted[j].0),
                ));
            }
        }
    }
    None
}

/// True when the Casimir characters of the dominant shifts `nu + lambda_i`
/// are pairwise distinct.
pub fn char_distinctness_smf(rs: &RootSystem, ws: &WeightSystem, nu: &Weight) -> Result<bool> {
    let nu = nu.require_dominant_integral()?;
    if nu.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: nu.len(),
        });
    }
    Ok(char_collision(rs, ws, &nu).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repdata::{weight_system, DEFAULT_CAP};

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    #[test]
    fn casimir_examples() {
        let a1 = RootSystem::new(LieType::a(1));
        assert_eq!(casimir_char(&a1, &w(&[0])), qi(0));
        assert_eq!(casimir_char(&a1, &w(&[1])), q(3, 2));
        let b3 = RootSystem::new(LieType::b(3));
        let minus_two_delta = w(&[-2, -2, -2]);
        assert_eq!(casimir_char(&b3, &minus_two_delta), qi(0));
    }

    #[test]
    fn young_examples() {
        let a2 = RootSystem::new(LieType::a(2));
        assert_eq!(young_coords(&a2, &w(&[1, 0])).unwrap().zeta, vec![q(2, 3), q(-1, 3), q(-1, 3)]);
        let b2 = RootSystem::new(LieType::b(2));
        assert_eq!(young_coords(&b2, &w(&[0, 1])).unwrap().zeta, vec![q(1, 2), q(1, 2)]);
        let d4 = RootSystem::new(LieType::d(4));
        assert_eq!(young_coords(&d4, &w(&[0, 0, 0, 1])).unwrap().zeta, vec![q(1, 2); 4]);
        let g2 = RootSystem::new(LieType::g2());
        assert!(young_coords(&g2, &w(&[1, 0])).is_err());
    }

    #[test]
    fn popov_agrees_on_small_weights() {
        for t in [LieType::a(1), LieType::a(3), LieType::b(2), LieType::b(3), LieType::c(3), LieType::d(4), LieType::d(5)] {
            let rs = RootSystem::new(t);
            for k in 0..t.rank() {
                for m in 0..3 {
                    let mut v = vec![1; t.rank()];
                    v[k] = m;
                    let lam = w(&v);
                    let p = popov_char(&rs, &lam).unwrap();
                    assert_eq!(p, casimir_char(&rs, &lam), "{t} {lam}");
                    assert_eq!(popov_char_expanded(&rs, &lam).unwrap(), p, "{t} {lam}");
                }
            }
        }
    }

    #[test]
    fn a1_eigenvalue_function() {
        let a1 = RootSystem::new(LieType::a(1));
        let ws = weight_system(&a1, &w(&[1]), DEFAULT_CAP).unwrap();
        let f = eig_fn(&a1, &ws, &w(&[1])).unwrap();
        for k in 0..6 {
            assert_eq!(f.eval(&w(&[k])), q(k, 2));
        }
        assert!(eig_fn(&a1, &ws, &w(&[3])).is_err());
    }

    #[test]
    fn eig_fn_matches_definition() {
        let rs = RootSystem::new(LieType::g2());
        let ws = weight_system(&rs, &w(&[1, 0]), DEFAULT_CAP).unwrap();
        let lam = w(&[1, 0]);
        for f in eig_fns(&rs, &ws) {
            for nu in [w(&[0, 0]), w(&[3, -2]), Weight::new(vec![q(1, 3), q(-5, 2)])] {
                let expected = (casimir_char(&rs, &(&nu + &f.lambda_i))
                    - casimir_char(&rs, &lam)
                    - casimir_char(&rs, &nu))
                    / qi(2);
                assert_eq!(f.eval(&nu), expected);
            }
        }
    }

    #[test]
    fn translated_action_examples() {
        let a1 = RootSystem::new(LieType::a(1));
        assert_eq!(translated_weyl_action(&a1, &[], &w(&[4])), w(&[4]));
        assert_eq!(translated_weyl_action(&a1, &[0], &w(&[0])), w(&[-2]));
        let b3 = RootSystem::new(LieType::b(3));
        let md = w(&[-1, -1, -1]);
        assert_eq!(translated_weyl_action(&b3, &[0, 2, 1, 2], &md), md);
    }

    #[test]
    fn distinctness_examples() {
        let c3 = RootSystem::new(LieType::c(3));
        let ws = weight_system(&c3, &w(&[1, 0, 0]), DEFAULT_CAP).unwrap();
        assert!(char_distinctness_smf(&c3, &ws, &w(&[0, 1, 0])).unwrap());
        let g2 = RootSystem::new(LieType::g2());
        let ws = weight_system(&g2, &w(&[1, 0]), DEFAULT_CAP).unwrap();
        assert!(char_distinctness_smf(&g2, &ws, &w(&[5, 3])).unwrap());
        let a1 = RootSystem::new(LieType::a(1));
        let ws = weight_system(&a1, &w(&[1]), DEFAULT_CAP).unwrap();
        for k in 0..5 {
            assert!(char_distinctness_smf(&a1, &ws, &w(&[k])).unwrap());
        }
    }

    #[test]
    fn e6_and_e7_difference_forms() {
        // F(mu) = chi(nu + mu) - chi(nu) = 2 f(nu) + chi(lambda)
        let e6 = RootSystem::new(LieType::e6());
        let lam = w(&[1, 0, 0, 0, 0, 0]);
        let big_f = |mu: &Weight, nu: &Weight| {
            let f = eig_fn_unchecked(&e6, &lam, mu);
            qi(2) * f.eval(nu) + casimir_char(&e6, &lam)
        };
        let l1 = w(&[-1, 0, 0, 0, 0, 1]);
        let l2 = w(&[0, 0, 1, 0, -1, 0]);
        for nu in [w(&[0; 6]), w(&[1, 0, 0, 0, 0, 0]), w(&[0, 0, 1, 0, 0, 0]), w(&[0, 0, 0, 0, 1, 0]), w(&[0, 0, 0, 0, 0, 1]), w(&[0, 1, 0, 1, 0, 0])] {
            let a = nu.to_ints().unwrap();
            let p1 = q(2, 3) * qi(-2 * a[0] - a[2] + a[4] + 2 * a[5]) + q(4, 3);
            let p2 = q(2, 3) * qi(a[0] + 2 * a[2] - 2 * a[4] - a[5]) + q(4, 3);
            assert_eq!(big_f(&l1, &nu), p1);
            assert_eq!(big_f(&l2, &nu), p2);
        }

        let e7 = RootSystem::new(LieType::e7());
        let lam = w(&[0, 0, 0, 0, 0, 0, 1]);
        let big_f = |mu: &Weight, nu: &Weight| {
            let f = eig_fn_unchecked(&e7, &lam, mu);
            qi(2) * f.eval(nu) + casimir_char(&e7, &lam)
        };
        let l1 = w(&[1, 0, 0, 0, 0, 0, -1]);
        let l2 = w(&[0, -1, 0, 0, 0, 1, 0]);
        let mut probes = vec![w(&[0; 7])];
        for i in 0..7 {
            let mut v = vec![0; 7];
            v[i] = i as i64 + 1;
            probes.push(w(&v));
        }
        for nu in probes {
            let a = nu.to_ints().unwrap();
            let p1 = qi(2 * a[0] + a[1] + 2 * a[2] + 2 * a[3] + a[4] - a[6]) + q(17, 2);
            let p2 = qi(-a[1] + a[4] + 2 * a[5] + a[6]) + q(9, 2);
            assert_eq!(big_f(&l1, &nu), p1, "{nu}");
            assert_eq!(big_f(&l2, &nu), p2, "{nu}");
        }
    }
}
