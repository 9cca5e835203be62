//! Dense complex polynomials and a simultaneous-iteration root finder.
//!
//! Coefficients are stored lowest degree first. Root finding uses the
//! Aberth–Ehrlich iteration followed by clustering of approximants into
//! multiple roots through inclusion disks.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

// libm-backed f64 math when std is absent.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{c, is_finite, Error, Result, C64};

/// Relative threshold below which leading coefficients are dropped.
pub const DEFAULT_TRIM: f64 = 1e-12;
/// Relative residual accepted for a root.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Approximants closer than this (relative to `max(1, |z|)`) count as one root.
pub const CLUSTER_TOL: f64 = 1e-6;
/// Iteration cap for [`Poly::roots`].
pub const MAX_ITERATIONS: usize = 500;

const EPS: f64 = f64::EPSILON;

/// Polynomial with complex coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Poly {
    coeffs: Vec<C64>,
}

/// Result of [`Poly::trim`].
#[derive(Clone, Debug, PartialEq)]
pub struct Trimmed {
    pub poly: Poly,
    /// Number of leading coefficients removed.
    pub dropped: usize,
}

/// Roots of a polynomial, one entry per root counted with multiplicity.
///
/// `multiplicities[i]` is the size of the cluster `roots[i]` belongs to, so a
/// double root shows up as two entries each carrying `2`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RootSet {
    pub roots: Vec<C64>,
    /// `|P(z)| / Σ|cₖ||z|ᵏ` at each root.
    pub residuals: Vec<f64>,
    pub multiplicities: Vec<usize>,
}

/// A group of approximants representing one (possibly multiple) root.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RootCluster {
    pub center: C64,
    pub multiplicity: usize,
}

impl Poly {
    pub fn new(coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("empty coefficient list"));
        }
        if !coeffs.iter().all(|&z| is_finite(z)) {
            return Err(Error::NonFinite);
        }
        Ok(Poly { coeffs })
    }

    /// Constructor for coefficient lists produced internally from finite data.
    pub(crate) fn from_vec(coeffs: Vec<C64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Poly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Poly::new(coeffs.iter().map(|&x| c(x, 0.0)).collect())
    }

    /// `lead · Π (z − rᵢ)`.
    pub fn from_roots(roots: &[C64], lead: C64) -> Self {
        let mut coeffs = vec![lead];
        for &r in roots {
            let mut next = vec![C64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, &ck) in coeffs.iter().enumerate() {
                next[k + 1] += ck;
                next[k] -= ck * r;
            }
            coeffs = next;
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C64> {
        self.coeffs
    }

    /// Length of the coefficient list minus one, before any trimming.
    pub fn raw_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Degree after trimming with [`DEFAULT_TRIM`]; `0` for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.trim(DEFAULT_TRIM).map_or(0, |t| t.poly.raw_degree())
    }

    pub fn leading(&self) -> C64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &ck| acc * z + ck)
    }

    /// Value and first derivative in one Horner pass.
    pub fn eval_with_derivative(&self, z: C64) -> (C64, C64) {
        let mut p = C64::new(0.0, 0.0);
        let mut dp = C64::new(0.0, 0.0);
        for &ck in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + ck;
        }
        (p, dp)
    }

    /// `Σ |cₖ| |z|ᵏ`, the natural scale for residuals at `z`.
    pub fn abs_eval(&self, z: C64) -> f64 {
        let r = z.norm();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, ck| acc * r + ck.norm())
    }

    /// `|P(z)|` relative to [`Poly::abs_eval`].
    pub fn relative_residual(&self, z: C64) -> f64 {
        let scale = self.abs_eval(z);
        if scale == 0.0 {
            0.0
        } else {
            self.eval(z).norm() / scale
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() == 1 {
            return Poly::from_vec(vec![C64::new(0.0, 0.0)]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &ck)| ck * k as f64)
            .collect();
        Poly::from_vec(coeffs)
    }

    /// Drops leading coefficients with magnitude `≤ eps · max|cₖ|`.
    pub fn trim(&self, eps: f64) -> Result<Trimmed> {
        if !(eps >= 0.0) {
            return Err(Error::InvalidArgument(
                "trim threshold must be non-negative",
            ));
        }
        let max = self.max_abs();
        if max == 0.0 {
            return Err(Error::ZeroPolynomial);
        }
        let cut = eps * max;
        let mut len = self.coeffs.len();
        while len > 1 && self.coeffs[len - 1].norm() <= cut {
            len -= 1;
        }
        Ok(Trimmed {
            poly: Poly::from_vec(self.coeffs[..len].to_vec()),
            dropped: self.coeffs.len() - len,
        })
    }

    pub fn scale(&self, k: C64) -> Poly {
        Poly::from_vec(self.coeffs.iter().map(|&z| z * k).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![C64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_vec(out)
    }

    /// Long division; the divisor is trimmed with [`DEFAULT_TRIM`] first.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let d = divisor.trim(DEFAULT_TRIM)?.poly;
        let dn = d.raw_degree();
        let lead = d.leading();
        if self.coeffs.len() <= dn {
            return Ok((Poly::from_vec(vec![C64::new(0.0, 0.0)]), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dn;
        let mut quot = vec![C64::new(0.0, 0.0); qlen];
        for k in (0..qlen).rev() {
            let factor = rem[k + dn] / lead;
            quot[k] = factor;
            for (j, &dj) in d.coeffs.iter().enumerate() {
                rem[k + j] -= factor * dj;
            }
        }
        rem.truncate(dn.max(1));
        Ok((Poly::from_vec(quot), Poly::from_vec(rem)))
    }

    /// `w ↦ P(α w + β)`.
    pub fn compose_affine(&self, alpha: C64, beta: C64) -> Poly {
        let lin = Poly::from_vec(vec![beta, alpha]);
        let mut acc = Poly::from_vec(vec![C64::new(0.0, 0.0)]);
        for &ck in self.coeffs.iter().rev() {
            acc = acc.mul(&lin);
            acc.coeffs[0] += ck;
        }
        acc.coeffs.truncate(self.coeffs.len());
        acc
    }

    /// All roots with relative residual at most [`DEFAULT_TOL`].
    pub fn roots(&self) -> Result<RootSet> {
        self.roots_with_tol(DEFAULT_TOL)
    }

    /// All roots of the trimmed polynomial, sorted by `(re, im)`.
    ///
    /// Fails with [`Error::NoConvergence`] when the iteration cap is reached
    /// or a root's relative residual exceeds `tol`.
    pub fn roots_with_tol(&self, tol: f64) -> Result<RootSet> {
        let p = self.trim(DEFAULT_TRIM)?.poly;
        let n = p.raw_degree();
        if n == 0 {
            return Err(Error::DegreeTooLow {
                required: 1,
                found: 0,
            });
        }

        // Exact zeros at the origin are split off before iterating.
        let zeros = p
            .coeffs
            .iter()
            .take_while(|z| **z == C64::new(0.0, 0.0))
            .count();
        let reduced = Poly::from_vec(p.coeffs[zeros..].to_vec());
        let mut roots = vec![C64::new(0.0, 0.0); zeros];
        let (found, converged, iterations) = solve(&reduced);
        roots.extend(found);

        let labels = cluster_labels(&p, &roots);
        refine_clusters(&p, &mut roots, &labels);
        let multiplicities: Vec<usize> = labels
            .iter()
            .map(|&l| labels.iter().filter(|&&k| k == l).count())
            .collect();
        let residuals: Vec<f64> = roots.iter().map(|&z| p.relative_residual(z)).collect();
        let mut set = RootSet {
            roots,
            residuals,
            multiplicities,
        };
        set.sort();
        if !converged || set.residuals.iter().any(|&r| !(r <= tol)) {
            return Err(Error::NoConvergence {
                iterations,
                partial: set,
            });
        }
        Ok(set)
    }
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.multiplicities.iter().copied().max().unwrap_or(0)
    }

    /// Distinct roots with their multiplicities.
    pub fn clusters(&self) -> Vec<RootCluster> {
        let mut out: Vec<RootCluster> = Vec::new();
        for (&z, &m) in self.roots.iter().zip(&self.multiplicities) {
            if m > 1 && out.iter().any(|k| k.center == z) {
                continue;
            }
            out.push(RootCluster {
                center: z,
                multiplicity: m,
            });
        }
        out
    }

    fn sort(&mut self) {
        let mut idx: Vec<usize> = (0..self.roots.len()).collect();
        idx.sort_by(|&a, &b| lex_cmp(self.roots[a], self.roots[b]));
        self.roots = idx.iter().map(|&i| self.roots[i]).collect();
        self.residuals = idx.iter().map(|&i| self.residuals[i]).collect();
        self.multiplicities = idx.iter().map(|&i| self.multiplicities[i]).collect();
    }
}

/// Lexicographic order on `(re, im)`.
pub fn lex_cmp(a: C64, b: C64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Aberth–Ehrlich iteration on a polynomial with nonzero constant and
/// leading coefficients. Returns `(roots, converged, iterations)`.
fn solve(p: &Poly) -> (Vec<C64>, bool, usize) {
    let n = p.raw_degree();
    match n {
        0 => return (Vec::new(), true, 0),
        1 => return (vec![-p.coeffs[0] / p.coeffs[1]], true, 0),
        _ => {}
    }
    let lead = p.leading();
    let monic = Poly::from_vec(p.coeffs.iter().map(|&z| z / lead).collect());

    let radius = (0..n)
        .map(|k| monic.coeffs[k].norm().powf(1.0 / (n - k) as f64))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let mut z: Vec<C64> = (0..n)
        .map(|j| {
            let theta = 2.0 * core::f64::consts::PI * j as f64 / n as f64 + 0.4;
            C64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; n];
    let bound_factor = 4.0 * (n as f64 + 1.0) * EPS;

    for iter in 1..=MAX_ITERATIONS {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (v, dv) = monic.eval_with_derivative(z[i]);
            if v.norm() <= bound_factor * monic.abs_eval(z[i]) {
                done[i] = true;
                continue;
            }
            let ratio = v / dv;
            let mut repulsion = C64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    repulsion += (z[i] - z[j]).inv();
                }
            }
            let mut step = ratio / (C64::new(1.0, 0.0) - ratio * repulsion);
            if !is_finite(step) {
                // Stationary point or collision: nudge off it.
                step = C64::from_polar(radius.max(1.0) * 1e-3, i as f64 + 0.7);
            }
            z[i] -= step;
            if step.norm() <= 2.0 * EPS * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return (z, true, iter);
        }
    }
    (z, false, MAX_ITERATIONS)
}

/// Cluster labels from overlapping inclusion disks, widened to [`CLUSTER_TOL`].
///
/// Disk `i` has radius `n (|P(zᵢ)| + δᵢ) / |cₙ Π_{j≠i}(zᵢ − zⱼ)|`, where `δᵢ`
/// bounds the Horner rounding error. Each connected component of the union
/// of `m` disks holds exactly `m` roots.
fn cluster_labels(p: &Poly, roots: &[C64]) -> Vec<usize> {
    let n = roots.len();
    let lead = p.leading().norm();
    let nf = n as f64;
    let radii: Vec<f64> = (0..n)
        .map(|i| {
            let zi = roots[i];
            let mut prod = lead;
            for (j, &zj) in roots.iter().enumerate() {
                let d = (zi - zj).norm();
                if j != i && d > 0.0 {
                    prod *= d;
                }
            }
            let err = p.eval(zi).norm() + 4.0 * (nf + 1.0) * EPS * p.abs_eval(zi);
            let cap = 1e-4 * zi.norm().max(1.0);
            (nf * err / prod).min(cap)
        })
        .collect();

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let d = (roots[i] - roots[j]).norm();
            let scale = roots[i].norm().max(roots[j].norm()).max(1.0);
            if d <= CLUSTER_TOL * scale || d <= radii[i] + radii[j] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..n).map(|i| find(&mut parent, i)).collect()
}

/// Replaces the members of each cluster of size `m ≥ 2` by the root of
/// `P⁽ᵐ⁻¹⁾` nearest their mean, which is simple when the root has exact
/// multiplicity `m`. Falls back to the mean when Newton wanders off.
fn refine_clusters(p: &Poly, roots: &mut [C64], labels: &[usize]) {
    let mut seen: Vec<usize> = Vec::new();
    for &label in labels {
        if seen.contains(&label) {
            continue;
        }
        seen.push(label);
        let members: Vec<usize> = (0..roots.len()).filter(|&i| labels[i] == label).collect();
        let m = members.len();
        if m < 2 {
            continue;
        }
        let mean = members.iter().map(|&i| roots[i]).sum::<C64>() / m as f64;
        let spread = members
            .iter()
            .map(|&i| (roots[i] - mean).norm())
            .fold(0.0, f64::max);
        let mut d = p.derivative();
        for _ in 2..m {
            d = d.derivative();
        }
        let mut z = mean;
        for _ in 0..50 {
            let (v, dv) = d.eval_with_derivative(z);
            let step = v / dv;
            if !is_finite(step) {
                break;
            }
            z -= step;
            if step.norm() <= 4.0 * EPS * z.norm().max(1.0) {
                break;
            }
        }
        let center = if is_finite(z) && (z - mean).norm() <= 10.0 * spread + 1e-12 {
            z
        } else {
            mean
        };
        for &i in &members {
            roots[i] = center;
        }
    }
}

/// Discriminant of a quartic `a z⁴ + b z³ + c z² + d z + e`.
pub fn quartic_discriminant(p: &Poly) -> Result<C64> {
    let t = p.trim(DEFAULT_TRIM)?.poly;
    if t.raw_degree() != 4 {
        return Err(Error::WrongDegree {
            expected: 4,
            found: t.raw_degree(),
        });
    }
    let k = &t.coeffs;
    let (e, d, cc, b, a) = (k[0], k[1], k[2], k[3], k[4]);
    let a2 = a * a;
    let b2 = b * b;
    let c2 = cc * cc;
    let d2 = d * d;
    let e2 = e * e;
    Ok(
        a2 * a * e2 * e * 256.0 - a2 * b * d * e2 * 192.0 - a2 * c2 * e2 * 128.0
            + a2 * cc * d2 * e * 144.0
            - a2 * d2 * d2 * 27.0
            + a * b2 * cc * e2 * 144.0
            - a * b2 * d2 * e * 6.0
            - a * b * c2 * d * e * 80.0
            + a * b * cc * d2 * d * 18.0
            + a * c2 * c2 * e * 16.0
            - a * c2 * cc * d2 * 4.0
            - b2 * b2 * e2 * 27.0
            + b2 * b * cc * d * e * 18.0
            - b2 * b * d2 * d * 4.0
            - b2 * c2 * cc * e * 4.0
            + b2 * c2 * d2,
    )
}

/// Substitutes `u = (1 + i t)/(1 − i t)` into a quartic and clears the
/// denominator, returning `Q(t) = P(u) (1 − i t)⁴ / (−2i)`.
///
/// For a reflection quartic `Q` has real coefficients; imaginary parts below
/// `1e-12` of the largest coefficient are zeroed.
pub fn cayley_substitute(p: &Poly) -> Result<Poly> {
    let t = p.trim(DEFAULT_TRIM)?.poly;
    if t.raw_degree() != 4 {
        return Err(Error::WrongDegree {
            expected: 4,
            found: t.raw_degree(),
        });
    }
    let plus = Poly::from_vec(vec![c(1.0, 0.0), c(0.0, 1.0)]);
    let minus = Poly::from_vec(vec![c(1.0, 0.0), c(0.0, -1.0)]);
    let one = Poly::from_vec(vec![c(1.0, 0.0)]);
    let mut out = Poly::from_vec(vec![C64::new(0.0, 0.0); 5]);
    for (k, &ck) in t.coeffs.iter().enumerate() {
        let mut term = one.clone();
        for _ in 0..k {
            term = term.mul(&plus);
        }
        for _ in k..4 {
            term = term.mul(&minus);
        }
        for (j, &tj) in term.coeffs.iter().enumerate() {
            out.coeffs[j] += ck * tj;
        }
    }
    let denom = c(0.0, -2.0);
    for z in out.coeffs.iter_mut() {
        *z /= denom;
    }
    let cut = 1e-12 * out.max_abs();
    for z in out.coeffs.iter_mut() {
        if z.im.abs() <= cut {
            z.im = 0.0;
        }
    }
    Ok(out)
}
