//! Root systems and exact weight-lattice arithmetic.
//!
//! Weights are stored in the fundamental-weight basis. Simple roots follow
//! Bourbaki numbering, and the Cartan matrix uses the convention
//! `A[i][j] = <alpha_i, alpha_j^vee>`, so row `i` of `A` holds the
//! fundamental coordinates of `alpha_i`.
//!
//! Normalization of the invariant form (fixed per family):
//!
//! | family | form on the epsilon coordinates | relation to `tr` of the defining rep |
//! |--------|---------------------------------|--------------------------------------|
//! | A      | `(e_i, e_j) = delta_ij`         | equal                                |
//! | B, C, D| `(e_i, e_j) = 2 delta_ij`       | 4 x trace form                       |
//! | G2     | trace form of the 7-dim rep     | equal                                |
//! | E6, E7 | `(alpha, alpha) = 2`            | none (no defining matrices)          |
//!
//! With this choice the classical power-sum formulas for the quadratic
//! Casimir agree with `(lambda, lambda + 2 delta)` on the nose. The Killing
//! form is recovered from [`RootSystem::killing_scale`].

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{common_denominator, q, qi, to_i64, Rational};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    E6,
    E7,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G",
            Family::E6 | Family::E7 => "E",
        };
        f.write_str(s)
    }
}

/// A simple Lie algebra type: family plus rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::G2 => rank == 2,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.to_string(),
                rank,
            })
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("A_l needs l >= 1")
    }
    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank).expect("B_l needs l >= 2")
    }
    pub fn c(rank: usize) -> Self {
        Self::new(Family::C, rank).expect("C_l needs l >= 3")
    }
    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).expect("D_l needs l >= 4")
    }
    pub fn g2() -> Self {
        Self { family: Family::G2, rank: 2 }
    }
    pub fn e6() -> Self {
        Self { family: Family::E6, rank: 6 }
    }
    pub fn e7() -> Self {
        Self { family: Family::E7, rank: 7 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Builds a type from a family letter and an explicit rank (`"A"`, 3).
    pub fn from_parts(letter: &str, rank: usize) -> Result<Self> {
        let family = match letter.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "G" => Family::G2,
            "E" => match rank {
                6 => Family::E6,
                7 => Family::E7,
                _ => {
                    return Err(Error::InvalidRank {
                        family: "E".into(),
                        rank,
                    })
                }
            },
            other => return Err(Error::UnknownType(other.to_string())),
        };
        Self::new(family, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Accepts `A3`, `a3`, `B_2`, `G2`, `E6`, `E7`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let split = t
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let (letter, digits) = t.split_at(split);
        let letter = letter.trim_end_matches('_');
        if letter.len() != 1 || !letter.chars().all(|c| c.is_ascii_alphabetic()) {
            return Err(Error::UnknownType(s.to_string()));
        }
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        Self::from_parts(letter, rank)
    }
}

fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let l = t.rank();
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t.family() {
        Family::A => {
            for i in 0..l - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..l - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_l short
            link(l - 2, l - 1, -2, -1);
        }
        Family::C => {
            for i in 0..l - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_l long
            link(l - 2, l - 1, -1, -2);
        }
        Family::D => {
            for i in 0..l - 2 {
                link(i, i + 1, -1, -1);
            }
            link(l - 3, l - 1, -1, -1);
        }
        Family::G2 => {
            // alpha_1 short
            link(0, 1, -1, -3);
        }
        Family::E6 | Family::E7 => {
            // 1-3-4-5-6(-7), 2 attached to 4
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            link(2, 3, -1, -1);
            for i in 3..l - 1 {
                link(i, i + 1, -1, -1);
            }
        }
    }
    a
}

/// Squared lengths `(alpha_i, alpha_i)` under the fixed normalization.
fn simple_root_lengths(t: LieType) -> Vec<Rational> {
    let l = t.rank();
    match t.family() {
        Family::A | Family::E6 | Family::E7 => vec![qi(2); l],
        Family::B => {
            let mut v = vec![qi(4); l];
            v[l - 1] = qi(2);
            v
        }
        Family::C => {
            let mut v = vec![qi(4); l];
            v[l - 1] = qi(8);
            v
        }
        Family::D => vec![qi(4); l],
        Family::G2 => vec![q(1, 3), qi(1)],
    }
}

/// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { qi(1) } else { qi(0) }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..2 * n {
                    let v = &aug[col][c] * &f;
                    aug[r][c] -= v;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Static data of a root system with exact arithmetic.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    #[serde(skip)]
    cartan_inv: Vec<Vec<Rational>>,
    /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
    positive_roots: Vec<Vec<i64>>,
    #[serde(skip)]
    positive_roots_fund: Vec<Vec<i64>>,
    #[serde(with = "crate::rational::pair_vec")]
    root_lengths: Vec<Rational>,
    #[serde(skip)]
    gram: Vec<Vec<Rational>>,
    #[serde(skip)]
    gram_int: Vec<Vec<i64>>,
    #[serde(skip)]
    gram_den: i64,
    coroot_coeffs: Vec<i64>,
    #[serde(skip)]
    killing_scale: Rational,
}

impl RootSystem {
    pub fn new(t: LieType) -> Self {
        let l = t.rank();
        let cartan = cartan_matrix(t);
        let cartan_q: Vec<Vec<Rational>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| qi(x)).collect())
            .collect();
        let cartan_inv = invert(&cartan_q).expect("Cartan matrices are invertible");
        let root_lengths = simple_root_lengths(t);

        let gram: Vec<Vec<Rational>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|k| &cartan_inv[i][k] * &root_lengths[k] / qi(2))
                    .collect()
            })
            .collect();
        let den = common_denominator(gram.iter().flatten());
        let gram_den = to_i64(&Rational::from_integer(den.clone())).expect("small denominator");
        let gram_int = gram
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| to_i64(&(x * Rational::from_integer(den.clone()))).unwrap())
                    .collect()
            })
            .collect();

        let positive_roots = generate_positive_roots(&cartan);
        let positive_roots_fund = positive_roots
            .iter()
            .map(|c| root_to_fund(&cartan, c))
            .collect();

        // h^0 = sum of positive coroots, in the basis of simple coroots.
        let mut coroot = vec![qi(0); l];
        for beta in &positive_roots {
            let len = (0..l)
                .flat_map(|i| (0..l).map(move |j| (i, j)))
                .fold(qi(0), |acc, (i, j)| {
                    acc + qi(beta[i] * beta[j]) * &gram_root(&cartan, &root_lengths, i, j)
                });
            for j in 0..l {
                coroot[j] += qi(beta[j]) * &root_lengths[j] / &len;
            }
        }
        let coroot_coeffs = coroot
            .iter()
            .map(|c| to_i64(c).expect("coroot coefficients of h^0 are integers"))
            .collect();

        let mut rs = Self {
            lie_type: t,
            cartan,
            cartan_inv,
            positive_roots,
            positive_roots_fund,
            root_lengths,
            gram,
            gram_int,
            gram_den,
            coroot_coeffs,
            killing_scale: qi(1),
        };
        // Casimir of the adjoint module equals 1 for the Killing form.
        let theta = rs.highest_root();
        rs.killing_scale = rs.casimir_value(&theta);
        rs
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inv(&self) -> &[Vec<Rational>] {
        &self.cartan_inv
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in fundamental coordinates.
    pub fn positive_roots_fund(&self) -> &[Vec<i64>] {
        &self.positive_roots_fund
    }

    pub fn simple_root_lengths(&self) -> &[Rational] {
        &self.root_lengths
    }

    /// Gram matrix `(omega_i, omega_j)`.
    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// `gram() * gram_den()` as integers.
    pub fn gram_int(&self) -> &[Vec<i64>] {
        &self.gram_int
    }

    pub fn gram_den(&self) -> i64 {
        self.gram_den
    }

    /// Coefficients `c_i` with `h^0 = sum c_i h_i`.
    pub fn coroot_coeffs(&self) -> &[i64] {
        &self.coroot_coeffs
    }

    pub fn delta(&self) -> Weight {
        Weight::from_ints(&vec![1; self.rank()])
    }

    /// `(theta, theta + 2 delta)` for the highest root `theta`. The Killing
    /// form on weights is `(x, y) / killing_scale`.
    pub fn killing_scale(&self) -> &Rational {
        &self.killing_scale
    }

    /// Ratio of this crate's form to the one induced by `tr` in the defining
    /// representation, where that representation is implemented.
    pub fn trace_form_ratio(&self) -> Option<Rational> {
        match self.lie_type.family() {
            Family::A | Family::G2 => Some(qi(1)),
            Family::B | Family::C | Family::D => Some(qi(4)),
            Family::E6 | Family::E7 => None,
        }
    }

    /// Highest root in fundamental coordinates.
    pub fn highest_root(&self) -> Weight {
        let top = self
            .positive_roots_fund
            .last()
            .expect("at least one positive root");
        Weight::from_ints(top)
    }

    fn check_len(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.len(),
            });
        }
        Ok(())
    }

    /// Exact invariant inner product.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Result<Rational> {
        self.check_len(a)?;
        self.check_len(b)?;
        let mut acc = qi(0);
        for (i, ai) in a.coords().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coords().iter().enumerate() {
                if !bj.is_zero() {
                    acc += ai * bj * &self.gram[i][j];
                }
            }
        }
        Ok(acc)
    }

    /// Integer inner product scaled by `gram_den`.
    pub fn ip_int(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0i64;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.gram_int[i];
            for (j, &bj) in b.iter().enumerate() {
                acc += ai * bj * row[j];
            }
        }
        acc
    }

    /// `(lambda, lambda + 2 delta)` for any rational weight.
    pub fn casimir_value(&self, w: &Weight) -> Rational {
        let two_delta = Weight::from_ints(&vec![2; self.rank()]);
        let shifted = w + &two_delta;
        self.inner_product(w, &shifted).expect("lengths match")
    }

    /// Simple-root coordinates of a weight.
    pub fn to_root_coords(&self, w: &Weight) -> Result<Vec<Rational>> {
        self.check_len(w)?;
        // c = (A^T)^{-1} a, i.e. c_j = sum_i a_i (A^{-1})_{ij}
        let l = self.rank();
        Ok((0..l)
            .map(|j| {
                w.coords()
                    .iter()
                    .enumerate()
                    .fold(qi(0), |acc, (i, a)| acc + a * &self.cartan_inv[i][j])
            })
            .collect())
    }

    /// Fundamental coordinates of `sum c_i alpha_i`.
    pub fn from_root_coords(&self, c: &[Rational]) -> Weight {
        let l = self.rank();
        Weight::new(
            (0..l)
                .map(|j| {
                    c.iter()
                        .enumerate()
                        .fold(qi(0), |acc, (i, ci)| acc + ci * qi(self.cartan[i][j]))
                })
                .collect(),
        )
    }

    /// Partial order `a <= b`: `b - a` is a non-negative integer combination
    /// of simple roots. Total: returns `false` on length mismatch.
    pub fn dominance_leq(&self, a: &Weight, b: &Weight) -> bool {
        if a.len() != self.rank() || b.len() != self.rank() {
            return false;
        }
        let diff = b - a;
        match self.to_root_coords(&diff) {
            Ok(c) => c.iter().all(|x| x.is_integer() && !x.is_negative()),
            Err(_) => false,
        }
    }

    /// Simple reflection `s_i` (0-based index).
    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let ai = w.coords()[i].clone();
        if ai.is_zero() {
            return w.clone();
        }
        Weight::new(
            w.coords()
                .iter()
                .zip(&self.cartan[i])
                .map(|(x, &aij)| x - &ai * qi(aij))
                .collect(),
        )
    }

    pub fn reflect_int(&self, i: usize, w: &mut [i64]) {
        let ai = w[i];
        if ai != 0 {
            for (x, &aij) in w.iter_mut().zip(&self.cartan[i]) {
                *x -= ai * aij;
            }
        }
    }

    /// Weyl orbit of `w` as a sorted set.
    pub fn weyl_orbit(&self, w: &Weight) -> Result<BTreeSet<Weight>> {
        self.check_len(w)?;
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank() {
                let y = self.reflect(i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(seen)
    }

    /// Integer orbit, used by the weight-system engine.
    pub fn weyl_orbit_int(&self, w: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut out = vec![w.to_vec()];
        seen.insert(w.to_vec());
        let mut idx = 0;
        while idx < out.len() {
            let x = out[idx].clone();
            idx += 1;
            for i in 0..self.rank() {
                if x[i] == 0 {
                    continue;
                }
                let mut y = x.clone();
                self.reflect_int(i, &mut y);
                if seen.insert(y.clone()) {
                    out.push(y);
                }
            }
        }
        out
    }

    /// Dominant element of the orbit of an integral weight, plus the parity
    /// of the number of reflections used.
    pub fn to_dominant_int(&self, w: &mut [i64]) -> bool {
        let mut odd = false;
        while let Some(i) = w.iter().position(|&x| x < 0) {
            self.reflect_int(i, w);
            odd = !odd;
        }
        odd
    }

    /// Anti-dominant element of the orbit (all coordinates non-positive).
    pub fn to_antidominant_int(&self, w: &mut [i64]) {
        while let Some(i) = w.iter().position(|&x| x > 0) {
            self.reflect_int(i, w);
        }
    }

    /// Applies a Weyl word `s_{i_1} s_{i_2} ... s_{i_k}` (0-based indices);
    /// the rightmost reflection acts first.
    pub fn apply_word(&self, word: &[usize], w: &Weight) -> Weight {
        word.iter().rev().fold(w.clone(), |acc, &i| self.reflect(i, &acc))
    }

    /// Height: sum of simple-root coordinates.
    pub fn height(&self, w: &Weight) -> Result<Rational> {
        Ok(self.to_root_coords(w)?.into_iter().sum())
    }

    /// `lambda(h^0)` evaluated through the coroot coefficients.
    pub fn eval_h0(&self, w: &Weight) -> Rational {
        w.coords()
            .iter()
            .zip(&self.coroot_coeffs)
            .map(|(a, &c)| a * qi(c))
            .sum()
    }

    /// Integer root coordinates scaled by `det`-free denominators: returns
    /// `None` unless the weight lies in the root lattice.
    pub fn root_coords_int(&self, w: &[i64]) -> Option<Vec<i64>> {
        let c = self.to_root_coords(&Weight::from_ints(w)).ok()?;
        c.iter().map(to_i64).collect()
    }

    /// Integer root-coordinate map used for fast dominance checks between
    /// weights of one module; `root_coords_scaled(w) = det * (A^T)^{-1} w`.
    pub fn root_coords_scaled(&self, w: &[i64]) -> Vec<i64> {
        let den = self.cartan_inv_den();
        let l = self.rank();
        (0..l)
            .map(|j| {
                w.iter().enumerate().fold(0i64, |acc, (i, &a)| {
                    acc + a * to_i64(&(&self.cartan_inv[i][j] * qi(den))).unwrap()
                })
            })
            .collect()
    }

    pub fn cartan_inv_den(&self) -> i64 {
        to_i64(&Rational::from_integer(common_denominator(
            self.cartan_inv.iter().flatten(),
        )))
        .unwrap()
    }

    /// Order of the Weyl group.
    pub fn weyl_group_order(&self) -> u128 {
        let l = self.rank() as u128;
        let fact = |n: u128| (1..=n).product::<u128>();
        match self.lie_type.family() {
            Family::A => fact(l + 1),
            Family::B | Family::C => (1u128 << l) * fact(l),
            Family::D => (1u128 << (l - 1)) * fact(l),
            Family::G2 => 12,
            Family::E6 => 51_840,
            Family::E7 => 2_903_040,
        }
    }

    /// Epsilon coordinates of a weight for classical types (Bourbaki
    /// realization; type A coordinates are centered to sum zero).
    pub fn to_epsilon(&self, w: &Weight) -> Result<Vec<Rational>> {
        self.check_len(w)?;
        let l = self.rank();
        let a = w.coords();
        let tail = |i: usize, end: usize| -> Rational { a[i..end].iter().sum() };
        let half = q(1, 2);
        let v = match self.lie_type.family() {
            Family::A => {
                let f: Vec<Rational> = (0..=l)
                    .map(|i| if i < l { tail(i, l) } else { qi(0) })
                    .collect();
                let mean: Rational = f.iter().sum::<Rational>() / qi(l as i64 + 1);
                f.into_iter().map(|x| x - &mean).collect()
            }
            Family::B => (0..l)
                .map(|i| tail(i, l - 1) + &a[l - 1] * &half)
                .collect(),
            Family::C => (0..l).map(|i| tail(i, l)).collect(),
            Family::D => {
                let s = (&a[l - 2] + &a[l - 1]) * &half;
                let mut v: Vec<Rational> = (0..l - 2).map(|i| tail(i, l - 2) + &s).collect();
                v.push(s);
                v.push((&a[l - 1] - &a[l - 2]) * &half);
                v
            }
            _ => {
                return Err(Error::Unsupported {
                    op: "epsilon coordinates",
                    lie_type: self.lie_type.to_string(),
                })
            }
        };
        Ok(v)
    }

    /// Inverse of [`Self::to_epsilon`]. For type A the input has `l + 1`
    /// entries and only differences matter.
    pub fn from_epsilon(&self, e: &[Rational]) -> Result<Weight> {
        let l = self.rank();
        let expected = if self.lie_type.family() == Family::A { l + 1 } else { l };
        if e.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: e.len(),
            });
        }
        let mut a: Vec<Rational> = (0..l.saturating_sub(1)).map(|i| &e[i] - &e[i + 1]).collect();
        match self.lie_type.family() {
            Family::A => a.push(&e[l - 1] - &e[l]),
            Family::B => a.push(&e[l - 1] * qi(2)),
            Family::C => a.push(e[l - 1].clone()),
            Family::D => a.push(&e[l - 2] + &e[l - 1]),
            _ => {
                return Err(Error::Unsupported {
                    op: "epsilon coordinates",
                    lie_type: self.lie_type.to_string(),
                })
            }
        }
        Ok(Weight::new(a))
    }
}

fn gram_root(cartan: &[Vec<i64>], lengths: &[Rational], i: usize, j: usize) -> Rational {
    // (alpha_i, alpha_j) = A[i][j] (alpha_j, alpha_j) / 2
    qi(cartan[i][j]) * &lengths[j] / qi(2)
}

fn root_to_fund(cartan: &[Vec<i64>], c: &[i64]) -> Vec<i64> {
    let l = cartan.len();
    (0..l)
        .map(|j| (0..l).map(|i| c[i] * cartan[i][j]).sum())
        .collect()
}

/// Positive roots by the root-string algorithm.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let simple: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut all: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut roots = simple.clone();
    let mut level = simple;
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..l {
                // p = largest k with beta - k alpha_i a root
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if all.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..l).map(|j| beta[j] * cartan[j][i]).sum();
                let q_len = p - pairing;
                if q_len > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if all.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        level = next;
    }
    roots.sort_by(|x, y| {
        let hx: i64 = x.iter().sum();
        let hy: i64 = y.iter().sum();
        hx.cmp(&hy).then_with(|| x.cmp(y))
    });
    roots
}

/// Memoizing cache of root systems keyed by type.
#[derive(Default)]
pub struct RootSystemCache {
    map: HashMap<LieType, std::sync::Arc<RootSystem>>,
}

impl RootSystemCache {
    pub fn get(&mut self, t: LieType) -> std::sync::Arc<RootSystem> {
        self.map
            .entry(t)
            .or_insert_with(|| std::sync::Arc::new(RootSystem::new(t)))
            .clone()
    }
}

impl RootSystem {
    /// Fails with a rank-domain error for invalid ranks.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::new(LieType::new(family, rank)?))
    }

    /// True when `b - a` is a non-negative integral root combination,
    /// computed on integer weights.
    pub fn dominance_leq_int(&self, a: &[i64], b: &[i64]) -> bool {
        let d: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
        match self.root_coords_int(&d) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    pub fn is_one_scaled(&self) -> bool {
        self.killing_scale.is_one()
    }
}
