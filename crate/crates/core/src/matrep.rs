//! Explicit matrix realizations and numeric M-type matrices.
//!
//! Natural representations of `A_l`, `B_l`, `C_l`, `D_l` and `G2` in the
//! classical matrix bases, the Clifford spin module of `B_l`, and
//! irreducible modules cut out of tensor products as highest-weight cyclic
//! subspaces. All bilinear data is taken with respect to the trace form of
//! the natural module; eigenvalues are therefore compared against exact
//! values divided by [`RootSystem::trace_form_ratio`].

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use nalgebra::{Complex, DMatrix, DVector};
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::casimir::casimir_char;
use crate::error::{Error, Result};
use crate::rational::{qi, Rational};
use crate::repdata::{weyl_dimension, DEFAULT_CAP};
use crate::rootsys::{Family, LieType, RootSystem};
use crate::tensor::decompose_klimyk;
use crate::weight::Weight;

pub type C64 = Complex<f64>;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;
pub type LinComb = Vec<(usize, C64)>;

pub const CLUSTER_TOL: f64 = 1e-7;
pub const AMBIGUITY_TOL: f64 = 1e-6;

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn unit(n: usize, a: usize, b: usize) -> CMat {
    let mut m = CMat::zeros(n, n);
    m[(a, b)] = re(1.0);
    m
}

fn commutator(a: &CMat, b: &CMat) -> CMat {
    mul(a, b) - mul(b, a)
}

/// Complex product; large products go through four real products.
pub fn mul(a: &CMat, b: &CMat) -> CMat {
    if a.nrows() * a.ncols() * b.ncols() < 200_000 {
        return a * b;
    }
    let (ar, ai) = (a.map(|z| z.re), a.map(|z| z.im));
    let (br, bi) = (b.map(|z| z.re), b.map(|z| z.im));
    let r = &ar * &br - &ai * &bi;
    let i = &ar * &bi + &ai * &br;
    r.zip_map(&i, C64::new)
}

fn combine(mats: &[CMat], coeffs: &[(usize, C64)]) -> CMat {
    let n = mats[0].nrows();
    let mut out = CMat::zeros(n, n);
    for &(j, c) in coeffs {
        out += &mats[j] * c;
    }
    out
}

fn dense_to_comb(v: &[C64]) -> LinComb {
    v.iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > 1e-13)
        .map(|(i, &c)| (i, c))
        .collect()
}

/// Null space of `a` from the Hermitian matrix `a^* a`.
fn null_space(a: &CMat, tol: f64) -> Vec<CVec> {
    let h = a.adjoint() * a;
    let eig = h.symmetric_eigen();
    (0..eig.eigenvalues.len())
        .filter(|&k| eig.eigenvalues[k].abs() < tol)
        .map(|k| eig.eigenvectors.column(k).into_owned())
        .collect()
}

/// Coordinates of `target` in the span of `mats` (least squares) and the residual.
fn solve_in_span(mats: &[CMat], target: &CMat) -> (Vec<C64>, f64) {
    let n2 = target.len();
    let v = CMat::from_fn(n2, mats.len(), |r, c| mats[c][r]);
    let t = CVec::from_iterator(n2, target.iter().copied());
    let g = v.adjoint() * &v;
    let rhs = v.adjoint() * &t;
    let x = g.lu().solve(&rhs).expect("basis matrices are independent");
    let resid = (&v * &x - &t).norm();
    (x.iter().copied().collect(), resid)
}

/// A basis of a matrix Lie algebra together with its trace-form duals and
/// Chevalley generators expressed in that basis.
#[derive(Debug, Clone)]
pub struct LieBasis {
    pub lie_type: LieType,
    pub labels: Vec<String>,
    pub natural: Vec<CMat>,
    /// Dual elements as written in closed form for each family.
    pub closed_duals: Vec<LinComb>,
    /// Dual elements from the inverse Gram matrix of the trace form.
    pub duals: Vec<LinComb>,
    chevalley: Vec<[Vec<C64>; 3]>,
}

impl LieBasis {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Labels whose closed-form dual disagrees with the Gram-matrix dual.
    pub fn dual_discrepancies(&self) -> Vec<String> {
        (0..self.len())
            .filter(|&i| {
                let a = combine(&self.natural, &self.closed_duals[i]);
                let b = combine(&self.natural, &self.duals[i]);
                (a - b).norm() > 1e-10
            })
            .map(|i| self.labels[i].clone())
            .collect()
    }

    /// Largest deviation of `tr(x_i x_j^*)` from `delta_ij` for the given duals.
    pub fn duality_defect(&self, closed: bool) -> f64 {
        let duals = if closed { &self.closed_duals } else { &self.duals };
        let mut worst = 0.0f64;
        for i in 0..self.len() {
            for j in 0..self.len() {
                let d = combine(&self.natural, &duals[j]);
                let t = (&self.natural[i] * d).trace();
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((t - re(want)).norm());
            }
        }
        worst
    }

    /// Coefficients of `[x_i, x_j]` in the basis.
    pub fn bracket_coeffs(&self, i: usize, j: usize) -> Vec<C64> {
        let (c, resid) = solve_in_span(&self.natural, &commutator(&self.natural[i], &self.natural[j]));
        debug_assert!(resid < 1e-9, "basis not closed under the bracket");
        c
    }

    /// Residual of `[x_i, x_j]` outside the span of the basis.
    pub fn closure_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let (_, r) = solve_in_span(&self.natural, &commutator(&self.natural[i], &self.natural[j]));
                worst = worst.max(r);
            }
        }
        worst
    }

    pub fn chevalley_coeffs(&self, i: usize) -> &[Vec<C64>; 3] {
        &self.chevalley[i]
    }
}

fn gram_duals(natural: &[CMat]) -> Vec<LinComb> {
    let m = natural.len();
    let g = CMat::from_fn(m, m, |i, j| (&natural[i] * &natural[j]).trace());
    let inv = g.try_inverse().expect("trace form is nondegenerate");
    (0..m)
        .map(|i| {
            let col: Vec<C64> = (0..m).map(|k| inv[(k, i)]).collect();
            dense_to_comb(&col)
        })
        .collect()
}

fn chevalley_from(natural: &[CMat], pairs: Vec<(CMat, CMat)>) -> Vec<[Vec<C64>; 3]> {
    pairs
        .into_iter()
        .map(|(e, f)| {
            let h = commutator(&e, &f);
            let he = commutator(&h, &e);
            let scale = (e.adjoint() * &he).trace() / (e.adjoint() * &e).trace();
            let f = f * (re(2.0) / scale);
            let h = commutator(&e, &f);
            let solve = |m: &CMat| {
                let (c, r) = solve_in_span(natural, m);
                assert!(r < 1e-9, "Chevalley generator outside the algebra");
                c
            };
            [solve(&e), solve(&f), solve(&h)]
        })
        .collect()
}

fn basis_a(l: usize) -> (Vec<String>, Vec<CMat>, Vec<LinComb>, Vec<(CMat, CMat)>) {
    let n = l + 1;
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let mut pos = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                pos.insert((i, j), mats.len());
                labels.push(format!("X_{{{},{}}}", i + 1, j + 1));
                mats.push(unit(n, i, j));
            }
        }
    }
    let diag0 = mats.len();
    for k in 0..l {
        labels.push(format!("X_{{{},{}}}", k + 1, k + 1));
        mats.push(unit(n, k, k) - CMat::identity(n, n) * re(1.0 / n as f64));
    }
    let mut duals = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                duals.push(vec![(pos[&(j, i)], re(1.0))]);
            }
        }
    }
    // X_{k,k} - X_{l+1,l+1} = X_{k,k} + sum_k' X_{k',k'}
    for k in 0..l {
        duals.push(
            (0..l)
                .map(|kk| (diag0 + kk, re(if kk == k { 2.0 } else { 1.0 })))
                .collect(),
        );
    }
    let chev = (0..l).map(|i| (unit(n, i, i + 1), unit(n, i + 1, i))).collect();
    (labels, mats, duals, chev)
}

/// `so(n)` in the basis `E_{i,j} - E_{j,i}`, with Chevalley generators
/// obtained by conjugating the split form.
fn basis_so(l: usize, odd: bool) -> (Vec<String>, Vec<CMat>, Vec<LinComb>, Vec<(CMat, CMat)>) {
    let n = if odd { 2 * l + 1 } else { 2 * l };
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let mut duals = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            duals.push(vec![(mats.len(), re(-0.5))]);
            labels.push(format!("X_{{{},{}}}", i + 1, j + 1));
            mats.push(unit(n, i, j) - unit(n, j, i));
        }
    }
    // split positions: +k -> k-1, 0 -> l, -k -> n-k
    let p = |a: i64| -> usize {
        if a > 0 {
            a as usize - 1
        } else if a == 0 {
            l
        } else {
            n - (-a) as usize
        }
    };
    let s = |a: i64, b: i64| unit(n, p(a), p(b)) - unit(n, p(-b), p(-a));
    let mut std_e: Vec<CMat> = (1..l as i64).map(|i| s(i, i + 1)).collect();
    let li = l as i64;
    std_e.push(if odd { s(li, 0) } else { s(li - 1, -li) });
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut pm = CMat::zeros(n, n);
    for k in 1..=l {
        let (a, b) = (2 * k - 2, 2 * k - 1);
        pm[(a, p(k as i64))] = re(h);
        pm[(b, p(k as i64))] = C64::new(0.0, -h);
        pm[(a, p(-(k as i64)))] = re(h);
        pm[(b, p(-(k as i64)))] = C64::new(0.0, h);
    }
    if odd {
        pm[(2 * l, l)] = re(1.0);
    }
    let pinv = pm.clone().try_inverse().expect("invertible");
    let chev = std_e
        .into_iter()
        .map(|e| {
            let f = e.transpose();
            (&pm * e * &pinv, &pm * f * &pinv)
        })
        .collect();
    (labels, mats, duals, chev)
}

fn basis_c(l: usize) -> (Vec<String>, Vec<CMat>, Vec<LinComb>, Vec<(CMat, CMat)>) {
    let n = 2 * l;
    let li = l as i64;
    let idx = |i: i64| -> usize {
        if i > 0 {
            i as usize - 1
        } else {
            l + (-i) as usize - 1
        }
    };
    let sg = |i: i64| if i > 0 { 1.0 } else { -1.0 };
    let x = |i: i64, j: i64| unit(n, idx(i), idx(j)) - unit(n, idx(-j), idx(-i)) * re(sg(i) * sg(j));
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let mut pos: HashMap<(i64, i64), usize> = HashMap::new();
    let mut push = |i: i64, j: i64, labels: &mut Vec<String>, mats: &mut Vec<CMat>| {
        pos.insert((i, j), mats.len());
        labels.push(format!("X_{{{i},{j}}}"));
        mats.push(x(i, j));
    };
    for k in 1..=li {
        for m in 1..=li {
            push(k, m, &mut labels, &mut mats);
        }
    }
    for i in 1..=li {
        for j in i..=li {
            push(i, -j, &mut labels, &mut mats);
        }
    }
    for i in 1..=li {
        for j in i..=li {
            push(-i, j, &mut labels, &mut mats);
        }
    }
    let mut duals = vec![Vec::new(); mats.len()];
    for (&(i, j), &at) in &pos {
        let (target, c) = if i > 0 && j > 0 {
            ((j, i), 0.5)
        } else if i > 0 {
            // X_{i,-j}^* = X_{-i,j} / 2, or / 4 on the diagonal
            ((-i, -j), if i == -j { 0.25 } else { 0.5 })
        } else {
            ((-i, -j), if -i == j { 0.25 } else { 0.5 })
        };
        duals[at] = vec![(pos[&target], re(c))];
    }
    let mut chev: Vec<(CMat, CMat)> = (1..li).map(|i| (x(i, i + 1), x(i + 1, i))).collect();
    chev.push((x(li, -li) * re(0.5), x(-li, li) * re(0.5)));
    (labels, mats, duals, chev)
}

/// Weight of a `G2` matrix under `diag(0, x, -x)`, reduced modulo `(1,1,1)`.
fn g2_weight(m: &CMat) -> [f64; 3] {
    let d = |r: usize| -> [f64; 3] {
        let mut v = [0.0; 3];
        if (1..=3).contains(&r) {
            v[r - 1] = 1.0;
        } else if r >= 4 {
            v[r - 4] = -1.0;
        }
        v
    };
    for a in 0..7 {
        for b in 0..7 {
            if m[(a, b)].norm() > 1e-12 {
                let (da, db) = (d(a), d(b));
                let w = [da[0] - db[0], da[1] - db[1], da[2] - db[2]];
                let mean = (w[0] + w[1] + w[2]) / 3.0;
                return [w[0] - mean, w[1] - mean, w[2] - mean];
            }
        }
    }
    [0.0; 3]
}

/// `corrected` flips the sign of the `E_27 - E_45` term in `G_{l2}`; the
/// uncorrected table is not closed under the bracket.
fn basis_g2(corrected: bool) -> (Vec<String>, Vec<CMat>, Vec<LinComb>, Vec<(CMat, CMat)>) {
    let e = |a: usize, b: usize| unit(7, a - 1, b - 1);
    let r2 = std::f64::consts::SQRT_2;
    let sm6 = C64::new(0.0, 6f64.sqrt());
    let s2 = if corrected { -1.0 } else { 1.0 };
    let diag = |v: [f64; 7]| CMat::from_diagonal(&CVec::from_iterator(7, v.iter().map(|&x| re(x))));
    let mut labels: Vec<String> = vec!["h_1".into(), "h_2".into()];
    let mut mats = vec![
        diag([0.0, 0.0, 0.5, -0.5, 0.0, -0.5, 0.5]),
        diag([0.0, 0.5, 0.0, -0.5, -0.5, 0.0, 0.5]),
    ];
    let long = [
        ("l1-l2", "l2-l1", (e(2, 3) - e(6, 5)) / re(r2)),
        ("l1-l3", "l3-l1", (e(2, 4) - e(7, 5)) / re(r2)),
        ("l2-l3", "l3-l2", (e(3, 4) - e(7, 6)) / re(r2)),
    ];
    let short = [
        ("l1", "-l1", ((e(1, 2) - e(5, 1)) * re(r2) - (e(3, 7) - e(4, 6))) / sm6),
        ("l2", "-l2", ((e(1, 3) - e(6, 1)) * re(r2) - (e(2, 7) - e(4, 5)) * re(s2)) / sm6),
        ("l3", "-l3", ((e(1, 4) - e(7, 1)) * re(r2) - (e(2, 6) - e(3, 5))) / sm6),
    ];
    let mut duals = vec![vec![(0, re(1.0))], vec![(1, re(1.0))]];
    for (a, b, g) in long {
        let at = mats.len();
        labels.push(format!("G_{{{a}}}"));
        labels.push(format!("G_{{{b}}}"));
        mats.push(g.clone());
        mats.push(g.transpose());
        duals.push(vec![(at + 1, re(1.0))]);
        duals.push(vec![(at, re(1.0))]);
    }
    for (a, b, g) in short {
        let at = mats.len();
        labels.push(format!("G_{{{a}}}"));
        labels.push(format!("G_{{{b}}}"));
        mats.push(g.clone());
        mats.push(-g.transpose());
        duals.push(vec![(at + 1, re(1.0))]);
        duals.push(vec![(at, re(1.0))]);
    }
    // simple roots: alpha_1 = l2 (short), alpha_2 = l1 - l2 (long)
    let find = |w: [f64; 3]| {
        let mean = (w[0] + w[1] + w[2]) / 3.0;
        let w = [w[0] - mean, w[1] - mean, w[2] - mean];
        mats.iter()
            .skip(2)
            .find(|m| {
                let v = g2_weight(m);
                (0..3).all(|k| (v[k] - w[k]).abs() < 1e-9)
            })
            .expect("root vector present")
            .clone()
    };
    let chev = vec![
        (find([0.0, 1.0, 0.0]), find([0.0, -1.0, 0.0])),
        (find([1.0, -1.0, 0.0]), find([-1.0, 1.0, 0.0])),
    ];
    (labels, mats, duals, chev)
}

pub fn lie_basis(t: LieType) -> Result<LieBasis> {
    let l = t.rank();
    let (labels, natural, closed_duals, chev) = match t.family() {
        Family::A => basis_a(l),
        Family::B => basis_so(l, true),
        Family::C => basis_c(l),
        Family::D => basis_so(l, false),
        Family::G2 => basis_g2(true),
        Family::E6 | Family::E7 => {
            return Err(Error::Unsupported {
                op: "matrix realization",
                lie_type: t.to_string(),
            })
        }
    };
    let duals = gram_duals(&natural);
    let chevalley = chevalley_from(&natural, chev);
    Ok(LieBasis {
        lie_type: t,
        labels,
        natural,
        closed_duals,
        duals,
        chevalley,
    })
}

// ---------------------------------------------------------------- modules

#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub lie_type: LieType,
    pub highest: Weight,
    pub basis: Arc<LieBasis>,
    /// `pi(x_i)` for every basis element, in basis order.
    pub images: Vec<CMat>,
    pub highest_vector: CVec,
}

impl MatrixRep {
    pub fn dim(&self) -> usize {
        self.highest_vector.len()
    }

    pub fn image(&self, coeffs: &[C64]) -> CMat {
        combine(&self.images, &dense_to_comb(coeffs))
    }

    pub fn dual_image(&self, i: usize) -> CMat {
        combine(&self.images, &self.basis.duals[i])
    }

    pub fn dual_images(&self) -> Vec<CMat> {
        (0..self.images.len()).map(|i| self.dual_image(i)).collect()
    }

    /// `sum_i pi(x_i) pi(x_i^*)`.
    pub fn casimir_matrix(&self) -> CMat {
        let n = self.dim();
        let mut c = CMat::zeros(n, n);
        for (i, x) in self.images.iter().enumerate() {
            c += mul(x, &self.dual_image(i));
        }
        c
    }

    pub fn e(&self, i: usize) -> CMat {
        self.image(&self.basis.chevalley[i][0])
    }

    pub fn f(&self, i: usize) -> CMat {
        self.image(&self.basis.chevalley[i][1])
    }

    pub fn h(&self, i: usize) -> CMat {
        self.image(&self.basis.chevalley[i][2])
    }

    /// Largest `||pi([x_i, x_j]) - [pi(x_i), pi(x_j)]||` over the sampled pairs.
    pub fn bracket_defect(&self, pairs: &[(usize, usize)]) -> f64 {
        pairs
            .iter()
            .map(|&(i, j)| {
                let lhs = self.image(&self.basis.bracket_coeffs(i, j));
                (lhs - commutator(&self.images[i], &self.images[j])).norm()
            })
            .fold(0.0, f64::max)
    }

    /// Largest `||pi(e_i) v||` and `||pi(h_i) v - lambda_i v||` on the highest vector.
    pub fn highest_vector_defect(&self) -> f64 {
        let v = &self.highest_vector;
        let lam = self.highest.coords();
        let mut worst = 0.0f64;
        for i in 0..self.lie_type.rank() {
            worst = worst.max((self.e(i) * v).norm());
            let li = lam[i].to_f64().unwrap_or(f64::NAN);
            worst = worst.max((self.h(i) * v - v * re(li)).norm());
        }
        worst
    }
}

fn trivial_rep(basis: Arc<LieBasis>) -> MatrixRep {
    let l = basis.lie_type.rank();
    MatrixRep {
        lie_type: basis.lie_type,
        highest: Weight::zero(l),
        images: vec![CMat::zeros(1, 1); basis.len()],
        highest_vector: CVec::from_element(1, re(1.0)),
        basis,
    }
}

fn with_kernel_vector(
    basis: Arc<LieBasis>,
    highest: Weight,
    images: Vec<CMat>,
) -> Result<MatrixRep> {
    let l = basis.lie_type.rank();
    let n = images[0].nrows();
    let lam = highest.to_ints().expect("integral");
    let mut stack = CMat::zeros(2 * l * n, n);
    for i in 0..l {
        let e = combine(&images, &dense_to_comb(&basis.chevalley[i][0]));
        let h = combine(&images, &dense_to_comb(&basis.chevalley[i][2]))
            - CMat::identity(n, n) * re(lam[i] as f64);
        stack.view_mut((2 * i * n, 0), (n, n)).copy_from(&e);
        stack.view_mut(((2 * i + 1) * n, 0), (n, n)).copy_from(&h);
    }
    let ker = null_space(&stack, 1e-9);
    if ker.len() != 1 {
        return Err(Error::Internal(format!(
            "expected one highest weight vector of weight {highest}, found {}",
            ker.len()
        )));
    }
    Ok(MatrixRep {
        lie_type: basis.lie_type,
        highest,
        images,
        highest_vector: ker.into_iter().next().unwrap(),
        basis,
    })
}

fn natural_weight(t: LieType) -> Weight {
    Weight::fundamental(t.rank(), 1)
}

fn natural_from(basis: Arc<LieBasis>) -> Result<MatrixRep> {
    let images = basis.natural.clone();
    with_kernel_vector(basis.clone(), natural_weight(basis.lie_type), images)
}

/// The defining module with its matrix basis and trace-form duals.
pub fn natural_rep(t: LieType) -> Result<MatrixRep> {
    natural_from(Arc::new(lie_basis(t)?))
}

fn pauli() -> [CMat; 4] {
    let z = re(0.0);
    let o = re(1.0);
    let i = C64::new(0.0, 1.0);
    [
        CMat::identity(2, 2),
        CMat::from_row_slice(2, 2, &[z, o, o, z]),
        CMat::from_row_slice(2, 2, &[z, -i, i, z]),
        CMat::from_row_slice(2, 2, &[o, z, z, -o]),
    ]
}

/// Jordan-Wigner gamma matrices generating `Cl(2l+1)` with `gamma_a^2 = 1`.
fn gammas(l: usize) -> Vec<CMat> {
    let [id, px, py, pz] = pauli();
    let chain = |k: usize, mid: &CMat| {
        let mut m = CMat::identity(1, 1);
        for j in 0..l {
            let f = match j.cmp(&k) {
                std::cmp::Ordering::Less => &pz,
                std::cmp::Ordering::Equal => mid,
                std::cmp::Ordering::Greater => &id,
            };
            m = m.kronecker(f);
        }
        m
    };
    let mut g = Vec::with_capacity(2 * l + 1);
    for k in 0..l {
        g.push(chain(k, &px));
        g.push(chain(k, &py));
    }
    g.push(chain(l, &id));
    g
}

fn spin_from(basis: Arc<LieBasis>) -> Result<MatrixRep> {
    let t = basis.lie_type;
    let l = t.rank();
    let g = gammas(l);
    let n = 2 * l + 1;
    let mut images = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            images.push(&g[i] * &g[j] * re(0.5));
        }
    }
    with_kernel_vector(basis, Weight::fundamental(l, l), images)
}

/// The spin module `V_{omega_l}` of `B_l` through the Clifford algebra.
pub fn spin_rep(t: LieType) -> Result<MatrixRep> {
    if t.family() != Family::B {
        return Err(Error::Unsupported {
            op: "Clifford spin module",
            lie_type: t.to_string(),
        });
    }
    spin_from(Arc::new(lie_basis(t)?))
}

/// Row-major Kronecker index `a * db + b`; applies `A (x) 1 + 1 (x) B`.
fn kron_sum_apply(a: &CMat, b: &CMat, v: &CVec) -> CVec {
    let (da, db) = (a.nrows(), b.nrows());
    let m = CMat::from_row_slice(da, db, v.as_slice());
    let r = mul(a, &m) + mul(&m, &b.transpose());
    CVec::from_iterator(da * db, r.transpose().iter().copied())
}

fn tensor_images(a: &MatrixRep, b: &MatrixRep) -> Vec<CMat> {
    let (ia, ib) = (CMat::identity(a.dim(), a.dim()), CMat::identity(b.dim(), b.dim()));
    a.images
        .iter()
        .zip(&b.images)
        .map(|(x, y)| x.kronecker(&ib) + ia.kronecker(y))
        .collect()
}

/// Orthonormal basis of `U(n^-) v` inside `V_a (x) V_b`, generated by the
/// lowering operators in index order, and the restricted images.
fn cyclic_submodule(
    a: &MatrixRep,
    b: &MatrixRep,
    v: CVec,
    highest: Weight,
    dim: usize,
) -> Result<MatrixRep> {
    let rs = RootSystem::new(a.lie_type);
    let l = rs.rank();
    let fa: Vec<CMat> = (0..l).map(|i| a.f(i)).collect();
    let fb: Vec<CMat> = (0..l).map(|i| b.f(i)).collect();
    let lam = highest.to_ints().expect("integral");
    let mut vecs: Vec<CVec> = Vec::new();
    let mut by_weight: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    let v = v.normalize();
    by_weight.entry(lam.clone()).or_default().push(0);
    vecs.push(v);
    queue.push_back((0usize, lam));
    while let Some((k, wt)) = queue.pop_front() {
        if vecs.len() == dim {
            break;
        }
        for i in 0..l {
            let mut w = kron_sum_apply(&fa[i], &fb[i], &vecs[k]);
            let norm0 = w.norm();
            if norm0 < 1e-10 {
                continue;
            }
            let nw: Vec<i64> = wt.iter().zip(&rs.cartan()[i]).map(|(x, y)| x - y).collect();
            let bucket = by_weight.entry(nw.clone()).or_default();
            for _ in 0..2 {
                for &j in bucket.iter() {
                    let p = vecs[j].dotc(&w);
                    w -= &vecs[j] * p;
                }
            }
            if w.norm() > 1e-8 * norm0 {
                bucket.push(vecs.len());
                vecs.push(w.normalize());
                queue.push_back((vecs.len() - 1, nw));
            }
        }
    }
    if vecs.len() != dim {
        return Err(Error::Internal(format!(
            "cyclic subspace has dimension {}, expected {dim}",
            vecs.len()
        )));
    }
    let n = vecs[0].len();
    let bm = CMat::from_fn(n, dim, |r, c| vecs[c][r]);
    let bad = bm.adjoint();
    let (da, db) = (a.dim(), b.dim());
    let images = a
        .images
        .iter()
        .zip(&b.images)
        .map(|(x, y)| {
            let xt = y.transpose();
            let mut cols = CMat::zeros(n, dim);
            for c in 0..dim {
                let m = CMat::from_row_slice(da, db, bm.column(c).as_slice());
                let r = mul(x, &m) + mul(&m, &xt);
                for (k, z) in r.transpose().iter().enumerate() {
                    cols[(k, c)] = *z;
                }
            }
            mul(&bad, &cols)
        })
        .collect();
    let mut hv = CVec::zeros(dim);
    hv[0] = re(1.0);
    Ok(MatrixRep {
        lie_type: a.lie_type,
        highest,
        basis: a.basis.clone(),
        images,
        highest_vector: hv,
    })
}

/// Building blocks: weights realized directly, and how.
enum Atom {
    Natural,
    Spin,
    /// Highest weight vector of this weight inside `V_{omega_1} (x) V_{prev}`.
    Inside(Vec<i64>),
}

fn atoms(t: LieType) -> Vec<(Vec<i64>, Atom)> {
    let l = t.rank();
    let w = |i: usize| {
        let mut v = vec![0i64; l];
        v[i - 1] = 1;
        v
    };
    let mut out = vec![(w(1), Atom::Natural)];
    match t.family() {
        Family::A | Family::C => {
            for k in 2..=l {
                out.push((w(k), Atom::Inside(w(k - 1))));
            }
        }
        Family::B => {
            for k in 2..l {
                out.push((w(k), Atom::Inside(w(k - 1))));
            }
            out.push((w(l), Atom::Spin));
        }
        Family::D => {
            for k in 2..l - 1 {
                out.push((w(k), Atom::Inside(w(k - 1))));
            }
            let mut top = vec![0i64; l];
            top[l - 2] = 1;
            top[l - 1] = 1;
            out.push((top, Atom::Inside(w(l - 2))));
        }
        Family::G2 => out.push((w(2), Atom::Inside(w(1)))),
        Family::E6 | Family::E7 => {}
    }
    out
}

struct Builder {
    rs: RootSystem,
    basis: Arc<LieBasis>,
    memo: BTreeMap<Vec<i64>, MatrixRep>,
}

impl Builder {
    fn dim(&self, v: &[i64]) -> usize {
        weyl_dimension(&self.rs, &Weight::from_ints(v)).expect("dominant") as usize
    }

    fn build(&mut self, nu: &[i64]) -> Result<MatrixRep> {
        if let Some(r) = self.memo.get(nu) {
            return Ok(r.clone());
        }
        let t = self.rs.lie_type();
        let rep = if nu.iter().all(|&x| x == 0) {
            trivial_rep(self.basis.clone())
        } else if let Some((_, atom)) = atoms(t).into_iter().find(|(w, _)| w == nu) {
            match atom {
                Atom::Natural => natural_from(self.basis.clone())?,
                Atom::Spin => spin_from(self.basis.clone())?,
                Atom::Inside(prev) => {
                    let a = self.build(&atoms(t)[0].0)?;
                    let b = self.build(&prev)?;
                    let amb = with_kernel_vector(self.basis.clone(), Weight::from_ints(nu), tensor_images(&a, &b))?;
                    cyclic_submodule(&a, &b, amb.highest_vector, Weight::from_ints(nu), self.dim(nu))?
                }
            }
        } else {
            let mut best: Option<(usize, Vec<i64>, Vec<i64>)> = None;
            for (w, _) in atoms(t) {
                let rest: Vec<i64> = nu.iter().zip(&w).map(|(x, y)| x - y).collect();
                if rest.iter().any(|&x| x < 0) || !self.reachable(&rest) {
                    continue;
                }
                let cost = self.dim(&rest) * self.dim(&w);
                if best.as_ref().is_none_or(|b| cost < b.0) {
                    best = Some((cost, rest, w));
                }
            }
            let Some((_, rest, w)) = best else {
                return Err(Error::Unreachable(Weight::from_ints(nu).to_string()));
            };
            let a = self.build(&rest)?;
            let b = self.build(&w)?;
            let v = a.highest_vector.kronecker(&b.highest_vector);
            cyclic_submodule(&a, &b, v, Weight::from_ints(nu), self.dim(nu))?
        };
        self.memo.insert(nu.to_vec(), rep.clone());
        Ok(rep)
    }

    fn reachable(&self, nu: &[i64]) -> bool {
        match self.rs.lie_type().family() {
            Family::D => {
                let l = nu.len();
                nu[l - 2] == nu[l - 1]
            }
            Family::E6 | Family::E7 => nu.iter().all(|&x| x == 0),
            _ => true,
        }
    }
}

/// Irreducible module `V_nu` as a highest-weight cyclic subspace of a
/// tensor product of smaller modules.
pub fn build_irrep(t: LieType, nu: &Weight, cap: u128) -> Result<MatrixRep> {
    let rs = RootSystem::new(t);
    let a = nu.require_dominant_integral()?;
    if a.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: a.len(),
        });
    }
    let dim = weyl_dimension(&rs, nu)?;
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap });
    }
    let basis = Arc::new(lie_basis(t)?);
    let mut b = Builder {
        rs,
        basis,
        memo: BTreeMap::new(),
    };
    if !b.reachable(&a) {
        return Err(Error::Unreachable(nu.to_string()));
    }
    b.build(&a)
}

/// Exact Casimir scalar of `V_nu` in the trace-form normalization.
pub fn trace_form_casimir(rs: &RootSystem, nu: &Weight) -> Result<Rational> {
    let ratio = rs.trace_form_ratio().ok_or(Error::Unsupported {
        op: "trace form",
        lie_type: rs.lie_type().to_string(),
    })?;
    Ok(casimir_char(rs, nu) / ratio)
}

// ---------------------------------------------------------------- M-type matrices

/// Predicted eigenvalue of `M_{lambda,nu}(C)` on a group of summands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedEigenvalue {
    #[serde(with = "crate::rational::pair")]
    pub value: Rational,
    /// Total dimension of the summands carrying this eigenvalue.
    pub multiplicity: u128,
    pub summands: Vec<Weight>,
}

#[derive(Debug, Clone)]
pub struct MTypeMatrix {
    pub lie_type: LieType,
    pub lambda: Weight,
    pub nu: Weight,
    pub dims: (usize, usize),
    left: Vec<CMat>,
    right: Vec<CMat>,
    /// Sorted by value.
    pub predicted: Vec<PredictedEigenvalue>,
}

fn predict(rs: &RootSystem, lambda: &Weight, nu: &Weight) -> Result<Vec<PredictedEigenvalue>> {
    let dec = decompose_klimyk(rs, lambda, nu, DEFAULT_CAP)?;
    let base = casimir_char(rs, lambda) + casimir_char(rs, nu);
    let ratio = rs.trace_form_ratio().unwrap_or_else(|| qi(1));
    let mut groups: BTreeMap<Rational, PredictedEigenvalue> = BTreeMap::new();
    for s in &dec.summands {
        let value = (casimir_char(rs, &s.weight) - &base) / (qi(2) * &ratio);
        let d = weyl_dimension(rs, &s.weight)? * s.mult as u128;
        let g = groups.entry(value.clone()).or_insert(PredictedEigenvalue {
            value,
            multiplicity: 0,
            summands: Vec::new(),
        });
        g.multiplicity += d;
        for _ in 0..s.mult {
            g.summands.push(s.weight.clone());
        }
    }
    Ok(groups.into_values().collect())
}

/// `M_{lambda,nu}(C) = sum_i pi_lambda(x_i) (x) pi_nu(x_i^*)`.
pub fn mtype_matrix(rep_l: &MatrixRep, rep_n: &MatrixRep) -> Result<MTypeMatrix> {
    if rep_l.lie_type != rep_n.lie_type {
        return Err(Error::TypeMismatch(
            rep_l.lie_type.to_string(),
            rep_n.lie_type.to_string(),
        ));
    }
    let rs = RootSystem::new(rep_l.lie_type);
    Ok(MTypeMatrix {
        lie_type: rep_l.lie_type,
        lambda: rep_l.highest.clone(),
        nu: rep_n.highest.clone(),
        dims: (rep_l.dim(), rep_n.dim()),
        left: rep_l.images.clone(),
        right: rep_n.dual_images(),
        predicted: predict(&rs, &rep_l.highest, &rep_n.highest)?,
    })
}

impl MTypeMatrix {
    pub fn size(&self) -> usize {
        self.dims.0 * self.dims.1
    }

    pub fn dense(&self) -> CMat {
        let n = self.size();
        let mut m = CMat::zeros(n, n);
        for (a, b) in self.left.iter().zip(&self.right) {
            m += a.kronecker(b);
        }
        m
    }

    /// `M v` without forming the matrix.
    pub fn apply(&self, v: &CVec) -> CVec {
        let (da, db) = self.dims;
        let x = CMat::from_row_slice(da, db, v.as_slice());
        let mut acc = CMat::zeros(da, db);
        for (a, b) in self.left.iter().zip(&self.right) {
            acc += mul(&mul(a, &x), &b.transpose());
        }
        CVec::from_iterator(da * db, acc.transpose().iter().copied())
    }

    /// Number of summands of `V_lambda (x) V_nu`, with multiplicity.
    pub fn summand_count(&self) -> usize {
        self.predicted.iter().map(|p| p.summands.len()).sum()
    }

    pub fn predicted_distinct(&self) -> bool {
        self.predicted.iter().all(|p| p.summands.len() == 1)
    }
}

/// `||M - (Delta(C) - C_lambda (x) 1 - 1 (x) C_nu) / 2||` for small modules.
pub fn coproduct_defect(m: &MTypeMatrix, rep_l: &MatrixRep, rep_n: &MatrixRep) -> f64 {
    let (il, in_) = (
        CMat::identity(rep_l.dim(), rep_l.dim()),
        CMat::identity(rep_n.dim(), rep_n.dim()),
    );
    let delta = |x: &CMat, y: &CMat| x.kronecker(&in_) + il.kronecker(y);
    let n = m.size();
    let mut dc = CMat::zeros(n, n);
    for i in 0..rep_l.images.len() {
        let d = delta(&rep_l.images[i], &rep_n.images[i]);
        let ds = delta(&rep_l.dual_image(i), &rep_n.dual_image(i));
        dc += mul(&d, &ds);
    }
    let rhs = (dc - rep_l.casimir_matrix().kronecker(&in_) - il.kronecker(&rep_n.casimir_matrix())) * re(0.5);
    (m.dense() - rhs).norm()
}

/// Largest `||[M, pi_lambda(x) (x) 1 + 1 (x) pi_nu(x)]||` over the basis.
pub fn commutation_defect(m: &MTypeMatrix, rep_l: &MatrixRep, rep_n: &MatrixRep) -> f64 {
    let (il, in_) = (
        CMat::identity(rep_l.dim(), rep_l.dim()),
        CMat::identity(rep_n.dim(), rep_n.dim()),
    );
    let md = m.dense();
    rep_l
        .images
        .iter()
        .zip(&rep_n.images)
        .map(|(x, y)| commutator(&md, &(x.kronecker(&in_) + il.kronecker(y))).norm())
        .fold(0.0, f64::max)
}

/// Random well-conditioned real change of Lie-algebra basis.
pub fn random_basis_change(m: usize, seed: u64) -> DMatrix<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    DMatrix::from_fn(m, m, |i, j| {
        let r: f64 = rng.random_range(-0.5..0.5);
        if i == j {
            1.0 + r
        } else {
            r / m as f64
        }
    })
}

/// `M_{lambda,nu}(C)` recomputed in the basis `y_i = sum_j s_ij x_j`, with
/// duals from the inverted Gram matrix of the new basis.
pub fn mtype_matrix_in_basis(rep_l: &MatrixRep, rep_n: &MatrixRep, s: &DMatrix<f64>) -> CMat {
    let m = rep_l.images.len();
    let row = |i: usize| -> Vec<C64> { (0..m).map(|j| re(s[(i, j)])).collect() };
    let nat: Vec<CMat> = (0..m)
        .map(|i| combine(&rep_l.basis.natural, &dense_to_comb(&row(i))))
        .collect();
    let duals = gram_duals(&nat);
    let yl: Vec<CMat> = (0..m).map(|i| rep_l.image(&row(i))).collect();
    let yn: Vec<CMat> = (0..m).map(|i| rep_n.image(&row(i))).collect();
    let n = rep_l.dim() * rep_n.dim();
    let mut out = CMat::zeros(n, n);
    for i in 0..m {
        out += yl[i].kronecker(&combine(&yn, &duals[i]));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub value: f64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub clusters: Vec<Cluster>,
    pub predicted: Vec<PredictedEigenvalue>,
    /// Clusters and predictions agree value-for-value and in multiplicity.
    pub matches: bool,
    /// Every summand carries its own eigenvalue.
    pub distinct: bool,
    /// Predicted values shared by more than one summand.
    pub collisions: usize,
    /// Two distinct predicted values lie within the ambiguity tolerance; the
    /// exact verdict is authoritative.
    pub ambiguous: bool,
    pub max_imaginary: f64,
}

/// Eigenvalues through the Hermitian solver when `m` is Hermitian, and an
/// iteration-capped Schur form otherwise (`None` if it does not converge).
pub fn eigenvalues(m: &CMat) -> Option<Vec<C64>> {
    if hermitian_defect(m) < 1e-10 * m.norm().max(1.0) {
        let h = (m + m.adjoint()) * re(0.5);
        return Some(h.symmetric_eigenvalues().iter().map(|&x| re(x)).collect());
    }
    let schur = nalgebra::linalg::Schur::try_new(m.clone(), 1e-13, 10_000)?;
    let (_, t) = schur.unpack();
    Some((0..t.nrows()).map(|i| t[(i, i)]).collect())
}

pub fn hermitian_defect(m: &CMat) -> f64 {
    (m - m.adjoint()).norm()
}

/// Groups sorted reals whose consecutive gaps are at most `tol`.
pub fn cluster(values: &[f64], tol: f64) -> Vec<Cluster> {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.total_cmp(b));
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for x in v {
        match out.last_mut() {
            Some((sum, n, last)) if x - *last <= tol => {
                *sum += x;
                *n += 1;
                *last = x;
            }
            _ => out.push((x, 1, x)),
        }
    }
    out.into_iter()
        .map(|(s, n, _)| Cluster {
            value: s / n as f64,
            count: n,
        })
        .collect()
}

pub fn spectrum_check(m: &MTypeMatrix) -> SpectrumReport {
    let ev = eigenvalues(&m.dense()).unwrap_or_default();
    let max_imaginary = ev.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    let reals: Vec<f64> = ev.iter().map(|z| z.re).collect();
    let clusters = cluster(&reals, CLUSTER_TOL);
    let pv: Vec<f64> = m.predicted.iter().map(|p| p.value.to_f64().unwrap_or(f64::NAN)).collect();
    let ambiguous = pv.windows(2).any(|w| (w[1] - w[0]).abs() < AMBIGUITY_TOL);
    let matches = !ev.is_empty()
        && max_imaginary < CLUSTER_TOL
        && clusters.len() == m.predicted.len()
        && clusters.iter().zip(&m.predicted).zip(&pv).all(|((c, p), v)| {
            (c.value - v).abs() < CLUSTER_TOL && c.count as u128 == p.multiplicity
        });
    SpectrumReport {
        clusters,
        predicted: m.predicted.clone(),
        matches,
        distinct: m.predicted_distinct(),
        collisions: m.predicted.iter().filter(|p| p.summands.len() > 1).count(),
        ambiguous,
        max_imaginary,
    }
}

#[derive(Debug, Clone)]
pub struct Projector {
    pub value: Rational,
    pub expected_rank: u128,
    pub matrix: CMat,
}

/// `P_i = prod_{j != i} (M - f_j) / (f_i - f_j)`.
pub fn projectors(m: &MTypeMatrix) -> Result<Vec<Projector>> {
    if let Some(p) = m.predicted.iter().find(|p| p.summands.len() > 1) {
        return Err(Error::RepeatedEigenvalue(p.value.to_string()));
    }
    let md = m.dense();
    let n = md.nrows();
    let id = CMat::identity(n, n);
    let vals: Vec<f64> = m.predicted.iter().map(|p| p.value.to_f64().unwrap()).collect();
    Ok(m.predicted
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut acc = id.clone();
            for (j, fj) in vals.iter().enumerate() {
                if j != i {
                    acc = mul(&acc, &((&md - &id * re(*fj)) / re(vals[i] - fj)));
                }
            }
            Projector {
                value: p.value.clone(),
                expected_rank: p.multiplicity,
                matrix: acc,
            }
        })
        .collect())
}

pub fn numeric_rank(m: &CMat, tol: f64) -> usize {
    let svd = m.clone().svd(false, false);
    svd.singular_values.iter().filter(|&&s| s > tol).count()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectorCheck {
    pub idempotency: f64,
    pub orthogonality: f64,
    pub completeness: f64,
    pub ranks: Vec<(usize, u128)>,
}

impl ProjectorCheck {
    pub fn passes(&self, tol: f64) -> bool {
        self.idempotency < tol
            && self.orthogonality < tol
            && self.completeness < tol
            && self.ranks.iter().all(|&(a, b)| a as u128 == b)
    }
}

pub fn check_projectors(ps: &[Projector]) -> ProjectorCheck {
    let n = ps.first().map_or(0, |p| p.matrix.nrows());
    let mut sum = CMat::zeros(n, n);
    let mut idem = 0.0f64;
    let mut orth = 0.0f64;
    for (i, p) in ps.iter().enumerate() {
        sum += &p.matrix;
        idem = idem.max((mul(&p.matrix, &p.matrix) - &p.matrix).norm());
        for q in ps.iter().skip(i + 1) {
            orth = orth.max(mul(&p.matrix, &q.matrix).norm());
            orth = orth.max(mul(&q.matrix, &p.matrix).norm());
        }
    }
    ProjectorCheck {
        idempotency: idem,
        orthogonality: orth,
        completeness: (sum - CMat::identity(n, n)).norm(),
        ranks: ps
            .iter()
            .map(|p| (numeric_rank(&p.matrix, 1e-6), p.expected_rank))
            .collect(),
    }
}

/// Degree of the minimal polynomial of `M`, read off as the dimension of
/// the Krylov space of a random vector (tolerance `1e-7`).
pub fn min_poly_degree(m: &MTypeMatrix, seed: u64) -> usize {
    let n = m.size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = CVec::from_fn(n, |_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    let mut q: Vec<CVec> = vec![v.normalize()];
    loop {
        let mut w = m.apply(q.last().unwrap());
        let norm0 = w.norm();
        if norm0 < 1e-12 {
            return q.len();
        }
        for _ in 0..2 {
            for u in &q {
                let p = u.dotc(&w);
                w -= u * p;
            }
        }
        if w.norm() < CLUSTER_TOL * norm0.max(1.0) || q.len() == n {
            return q.len();
        }
        q.push(w.normalize());
    }
}

/// Exact value of `sum_j c_j pi(x_j)` applied to `v`, for diagnostics.
pub fn is_scalar(m: &CMat, value: f64, tol: f64) -> bool {
    let n = m.nrows();
    (m - CMat::identity(n, n) * re(value)).norm() < tol * (n as f64).sqrt().max(1.0)
}

impl Projector {
    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }
}

pub fn rational_f64(q: &Rational) -> f64 {
    if q.is_zero() {
        0.0
    } else {
        q.to_f64().unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    fn all_types() -> Vec<LieType> {
        vec![
            LieType::a(1),
            LieType::a(2),
            LieType::a(3),
            LieType::b(2),
            LieType::b(3),
            LieType::c(4),
            LieType::c(3),
            LieType::d(4),
            LieType::g2(),
        ]
    }

    #[test]
    fn bases_are_closed_and_dual() {
        for t in all_types() {
            let b = lie_basis(t).unwrap();
            let rs = RootSystem::new(t);
            let m = rs.positive_roots().len() * 2 + t.rank();
            assert_eq!(b.len(), m, "{t}");
            assert!(b.closure_defect() < 1e-9, "{t}");
            assert!(b.duality_defect(false) < 1e-12, "{t}");
        }
    }

    #[test]
    fn closed_form_duals() {
        for t in [LieType::a(2), LieType::a(3), LieType::b(2), LieType::b(3), LieType::c(3), LieType::d(4)] {
            let b = lie_basis(t).unwrap();
            assert!(b.dual_discrepancies().is_empty(), "{t}: {:?}", b.dual_discrepancies());
            assert!(b.duality_defect(true) < 1e-12);
        }
        let g = lie_basis(LieType::g2()).unwrap();
        assert_eq!(g.dual_discrepancies(), vec!["h_1".to_string(), "h_2".to_string()]);
    }

    #[test]
    fn g2_uncorrected_table_is_not_a_subalgebra() {
        let (_, mats, _, _) = basis_g2(false);
        let worst = (0..mats.len())
            .flat_map(|i| (0..mats.len()).map(move |j| (i, j)))
            .map(|(i, j)| solve_in_span(&mats, &commutator(&mats[i], &mats[j])).1)
            .fold(0.0, f64::max);
        assert!(worst > 0.1);
    }

    #[test]
    fn g2_cartan_matches_transcription() {
        let g = lie_basis(LieType::g2()).unwrap();
        let d: Vec<f64> = (0..7).map(|i| g.natural[0][(i, i)].re).collect();
        assert_eq!(d, vec![0.0, 0.0, 0.5, -0.5, 0.0, -0.5, 0.5]);
        assert_eq!(g.len(), 14);
    }

    #[test]
    fn chevalley_relations() {
        for t in all_types() {
            let rep = natural_rep(t).unwrap();
            let rs = RootSystem::new(t);
            let l = t.rank();
            for i in 0..l {
                for j in 0..l {
                    let hij = commutator(&rep.h(i), &rep.e(j));
                    let want = rep.e(j) * re(rs.cartan()[j][i] as f64);
                    assert!((hij - want).norm() < 1e-9, "{t} h{i} e{j}");
                }
            }
            assert!(rep.highest_vector_defect() < 1e-9, "{t}");
        }
    }

    #[test]
    fn casimir_scalars() {
        for t in all_types() {
            let rs = RootSystem::new(t);
            let rep = natural_rep(t).unwrap();
            let chi = rational_f64(&trace_form_casimir(&rs, &rep.highest).unwrap());
            assert!(is_scalar(&rep.casimir_matrix(), chi, 1e-9), "{t}");
        }
        let a1 = natural_rep(LieType::a(1)).unwrap();
        assert!(is_scalar(&a1.casimir_matrix(), 1.5, 1e-12));
    }

    #[test]
    fn spin_modules() {
        for l in 2..=4 {
            let t = LieType::b(l);
            let rep = spin_rep(t).unwrap();
            assert_eq!(rep.dim(), 1 << l);
            let rs = RootSystem::new(t);
            let chi = rational_f64(&trace_form_casimir(&rs, &rep.highest).unwrap());
            assert!(is_scalar(&rep.casimir_matrix(), chi, 1e-9));
            let pairs: Vec<(usize, usize)> = (0..rep.images.len()).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
            assert!(rep.bracket_defect(&pairs) < 1e-9);
            assert!(rep.highest_vector_defect() < 1e-9);
        }
    }

    #[test]
    fn built_irreps() {
        let cases: Vec<(LieType, Vec<i64>, usize)> = vec![
            (LieType::a(1), vec![3], 4),
            (LieType::a(2), vec![1, 1], 8),
            (LieType::a(2), vec![0, 1], 3),
            (LieType::b(2), vec![0, 1], 4),
            (LieType::b(2), vec![1, 1], 16),
            (LieType::c(3), vec![0, 0, 1], 14),
            (LieType::g2(), vec![0, 1], 14),
            (LieType::g2(), vec![1, 1], 64),
            (LieType::d(4), vec![0, 1, 0, 0], 28),
        ];
        for (t, nu, d) in cases {
            let rs = RootSystem::new(t);
            let rep = build_irrep(t, &w(&nu), DEFAULT_CAP).unwrap();
            assert_eq!(rep.dim(), d, "{t} {nu:?}");
            let chi = rational_f64(&trace_form_casimir(&rs, &w(&nu)).unwrap());
            let cm = rep.casimir_matrix();
            assert!(is_scalar(&cm, chi, 1e-9), "{t} {nu:?} chi {chi} diag {:?}", cm.diagonal().iter().take(4).collect::<Vec<_>>());
            assert!(rep.highest_vector_defect() < 1e-9, "{t} {nu:?}");
            let m = rep.images.len();
            let pairs: Vec<(usize, usize)> = (0..m).map(|i| (i, (i * 7 + 3) % m)).collect();
            assert!(rep.bracket_defect(&pairs) < 1e-9, "{t} {nu:?}");
        }
        assert!(matches!(
            build_irrep(LieType::d(4), &w(&[0, 0, 0, 1]), DEFAULT_CAP),
            Err(Error::Unreachable(_))
        ));
        assert!(matches!(
            build_irrep(LieType::a(2), &w(&[9, 9]), 100),
            Err(Error::CapExceeded { .. })
        ));
        assert!(lie_basis(LieType::e6()).is_err());
    }

    #[test]
    fn a1_spectrum() {
        let t = LieType::a(1);
        let v = natural_rep(t).unwrap();
        let m = mtype_matrix(&v, &v).unwrap();
        let r = spectrum_check(&m);
        assert!(r.matches, "{r:?}");
        let got: Vec<(f64, usize)> = r.clusters.iter().map(|c| (c.value, c.count)).collect();
        assert!((got[0].0 + 1.5).abs() < 1e-9 && got[0].1 == 1);
        assert!((got[1].0 - 0.5).abs() < 1e-9 && got[1].1 == 3);
        let ps = projectors(&m).unwrap();
        assert!(check_projectors(&ps).passes(1e-8));
        assert_eq!(min_poly_degree(&m, 1), 2);
        assert!(coproduct_defect(&m, &v, &v) < 1e-9);
        assert!(commutation_defect(&m, &v, &v) < 1e-9);
    }

    #[test]
    fn basis_independence() {
        for t in [LieType::a(2), LieType::b(2), LieType::g2()] {
            let v = natural_rep(t).unwrap();
            let m = mtype_matrix(&v, &v).unwrap();
            let s = random_basis_change(v.images.len(), 7);
            assert!((mtype_matrix_in_basis(&v, &v, &s) - m.dense()).norm() < 1e-8, "{t}");
        }
    }

    #[test]
    fn mtype_matrices_are_hermitian() {
        for t in [LieType::a(2), LieType::b(2), LieType::c(3), LieType::g2()] {
            let v = natural_rep(t).unwrap();
            let m = mtype_matrix(&v, &v).unwrap();
            assert!(hermitian_defect(&m.dense()) < 1e-12, "{t}");
        }
        let s = spin_rep(LieType::b(3)).unwrap();
        let m = mtype_matrix(&s, &natural_rep(LieType::b(3)).unwrap()).unwrap();
        assert!(hermitian_defect(&m.dense()) < 1e-12);
    }

    #[test]
    fn trivial_partner() {
        let t = LieType::b(2);
        let v = natural_rep(t).unwrap();
        let triv = build_irrep(t, &w(&[0, 0]), DEFAULT_CAP).unwrap();
        let m = mtype_matrix(&v, &triv).unwrap();
        assert!(m.dense().norm() < 1e-12);
        assert_eq!(min_poly_degree(&m, 3), 1);
        assert_eq!(spectrum_check(&m).clusters.len(), 1);
    }
}
