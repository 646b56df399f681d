//! Numeric certification of the constrained minimax problems behind the
//! `-n^2/25` and `-n^2/54` bounds.
//!
//! Every system is a function of at most two variables on a box. A
//! certificate comes from an exhaustive grid evaluation followed by nested
//! golden-section refinement around the best grid point.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extremal::{g_alpha, h_alpha};

/// Floor of the `(y, k)` system: `-1/25`.
pub const FLOOR_GENERAL: f64 = -1.0 / 25.0;
/// Floor of the restricted-class system: `-1/54`.
pub const FLOOR_RESTRICTED: f64 = -1.0 / 54.0;
pub const DEFAULT_GRID_STEP: f64 = 1e-3;
pub const REFINE_TOL: f64 = 1e-9;
/// Tolerance for systems whose minimum is claimed to equal the floor.
pub const EQUALITY_TOL: f64 = 1e-8;
/// Required gap above the floor for systems claimed to stay strictly above it.
pub const STRICT_MARGIN: f64 = 1e-4;
/// Distance allowed between the certified and the expected minimizer.
pub const ARGMIN_TOL: f64 = 1e-4;
pub const BALANCE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum System {
    AppendixA,
    AppendixBCase1,
    AppendixBCase2,
    AppendixCCase1,
    AppendixCCase2,
}

impl System {
    pub const ALL: [System; 5] = [
        System::AppendixA,
        System::AppendixBCase1,
        System::AppendixBCase2,
        System::AppendixCCase1,
        System::AppendixCCase2,
    ];

    pub fn floor(self) -> f64 {
        match self {
            System::AppendixA => FLOOR_GENERAL,
            _ => FLOOR_RESTRICTED,
        }
    }

    /// Point where the minimum is claimed to equal the floor, if any.
    pub fn expected_argmin(self) -> Option<[f64; 2]> {
        match self {
            System::AppendixA => Some([0.2, 0.4]),
            System::AppendixBCase2 => Some([1.0, 1.0 / 3.0]),
            _ => None,
        }
    }

    pub fn coordinate_names(self) -> [&'static str; 2] {
        match self {
            System::AppendixA => ["y", "k"],
            _ => ["alpha", "K"],
        }
    }

    /// Search box `((x_lo, x_hi), (y_lo, y_hi))`.
    pub fn region(self) -> [(f64, f64); 2] {
        match self {
            System::AppendixA => [(0.0, 1.0), (0.0, 1.0)],
            System::AppendixBCase1 => [(0.5, 1.0), (0.5, 1.0)],
            System::AppendixBCase2 => [(0.5, 1.0), (0.0, 0.5)],
            System::AppendixCCase1 => [(0.0, 0.5), (0.5, 1.0)],
            System::AppendixCCase2 => [(0.0, 0.5), (0.0, 0.5)],
        }
    }

    fn profile(self) -> Profile {
        match self {
            System::AppendixBCase1 | System::AppendixBCase2 => Profile::G,
            _ => Profile::H,
        }
    }

    pub fn objective(self, x: f64, y: f64) -> f64 {
        let w = self.profile();
        match self {
            System::AppendixA => appendix_a_objective(x, y),
            System::AppendixBCase1 | System::AppendixCCase1 => q_case1_unchecked(w, x, y),
            System::AppendixBCase2 | System::AppendixCCase2 => q_case2_unchecked(w, x, y),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            System::AppendixA => "a",
            System::AppendixBCase1 => "b1",
            System::AppendixBCase2 => "b2",
            System::AppendixCCase1 => "c1",
            System::AppendixCCase2 => "c2",
        }
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            System::AppendixA => "APPENDIX_A",
            System::AppendixBCase1 => "APPENDIX_B_CASE1",
            System::AppendixBCase2 => "APPENDIX_B_CASE2",
            System::AppendixCCase1 => "APPENDIX_C_CASE1",
            System::AppendixCCase2 => "APPENDIX_C_CASE2",
        };
        f.write_str(s)
    }
}

impl FromStr for System {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        System::ALL
            .into_iter()
            .find(|sys| {
                sys.label().eq_ignore_ascii_case(s) || sys.to_string().eq_ignore_ascii_case(s)
            })
            .ok_or_else(|| format!("unknown system `{s}` (expected a, b1, b2, c1, c2)"))
    }
}

/// Which degree-square profile bounds the positive part: `G` (quasi-complete,
/// `alpha >= 1/2`) or `H` (quasi-star, `alpha <= 1/2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    G,
    H,
}

impl Profile {
    pub fn value(self, alpha: f64) -> Result<f64> {
        match self {
            Profile::G => g_alpha(alpha),
            Profile::H => h_alpha(alpha),
        }
    }

    /// Range of `alpha` on which this profile is the larger one.
    pub fn alpha_range(self) -> (f64, f64) {
        match self {
            Profile::G => (0.5, 1.0),
            Profile::H => (0.0, 0.5),
        }
    }

    fn raw(self, alpha: f64) -> f64 {
        match self {
            Profile::G => alpha.powf(1.5),
            Profile::H => {
                let t = (1.0 - alpha).sqrt();
                (1.0 - t) * (t + alpha)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinimaxCertificate {
    pub system: System,
    pub grid_step: f64,
    pub refined_tolerance: f64,
    pub min_value: f64,
    pub argmin: Vec<f64>,
    pub floor: f64,
    pub passed: bool,
}

impl fmt::Display for MinimaxCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [xn, yn] = self.system.coordinate_names();
        write!(
            f,
            "system={} grid={:e} tol={:e} min={:.12} {}={:.9} {}={:.9} floor={:.12} passed={}",
            self.system,
            self.grid_step,
            self.refined_tolerance,
            self.min_value,
            xn,
            self.argmin[0],
            yn,
            self.argmin[1],
            self.floor,
            self.passed
        )
    }
}

fn unit(name: &str, v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::Domain(format!("{name}={v} outside [0, 1]")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// (y, k) system

/// `T(y) = y - y (y + sqrt(5y^2 + 4y)) / 2`, the inner objective along the
/// balance curve (up to a factor `-1/2`).
pub fn appendix_a_t(y: f64) -> Result<f64> {
    unit("y", y)?;
    let r = (5.0 * y * y + 4.0 * y).sqrt();
    Ok(y - y * (y + r) / 2.0)
}

/// `T'(y)` in factored form; undefined at `y = 0`.
pub fn appendix_a_t_prime(y: f64) -> Result<f64> {
    if !(y > 0.0 && y <= 1.0) {
        return Err(Error::Domain(format!("T'(y) needs y in (0, 1], got {y}")));
    }
    let r = (5.0 * y * y + 4.0 * y).sqrt();
    Ok(-(y + r) * (5.0 * y - 1.0) * (y + 1.0) / (r * (r + 1.0)))
}

/// `k_1(y) = (-y + sqrt(5y^2 + 4y)) / 2`, where both branches agree.
pub fn balance_k(y: f64) -> f64 {
    (-y + (5.0 * y * y + 4.0 * y).sqrt()) / 2.0
}

/// The two lower bounds `(y^2 - k^2/2, -y(1-k-y)/2)` on `s / n^2`.
pub fn appendix_a_branches(y: f64, k: f64) -> (f64, f64) {
    (y * y - k * k / 2.0, -y * (1.0 - k - y) / 2.0)
}

pub fn appendix_a_objective(y: f64, k: f64) -> f64 {
    let (a, b) = appendix_a_branches(y, k);
    a.max(b)
}

/// Largest `|branch1 - branch2|` along the balance curve on `samples`
/// equally spaced points of `[0.01, 0.99]`.
pub fn balance_residual_max(samples: usize) -> f64 {
    let samples = samples.max(2);
    (0..samples)
        .map(|i| {
            let y = 0.01 + 0.98 * i as f64 / (samples - 1) as f64;
            let (a, b) = appendix_a_branches(y, balance_k(y));
            (a - b).abs()
        })
        .fold(0.0, f64::max)
}

/// Certificate for `min max(y^2 - k^2/2, -y(1-k-y)/2)` over the unit square,
/// also requiring the balance-curve property.
pub fn appendix_a_minimax(grid_step: f64) -> MinimaxCertificate {
    let mut cert = certify_floor(System::AppendixA, grid_step);
    cert.passed &= balance_residual_max(10_000) <= BALANCE_TOL;
    cert
}

// ---------------------------------------------------------------------------
// restricted-class system, both cases

fn q_case1_unchecked(w: Profile, alpha: f64, k: f64) -> f64 {
    let sw = w.raw(alpha).sqrt();
    alpha / 2.0 * k * k - sw / 2.0 * (1.0 - k).max(0.0).sqrt() * k.powf(1.5)
}

fn q_case2_unchecked(w: Profile, alpha: f64, k: f64) -> f64 {
    let sw = w.raw(alpha).sqrt();
    alpha / 2.0 * k * k - sw * (1.0 - k) * k * k
}

/// Case `K > 1/2`: `alpha/2 K^2 - sqrt(W)/2 sqrt(1-K) K^(3/2)`, the objective
/// after substituting the largest feasible `b`.
pub fn q_case1(w: Profile, alpha: f64, k: f64) -> Result<f64> {
    unit("alpha", alpha)?;
    unit("K", k)?;
    Ok(q_case1_unchecked(w, alpha, k))
}

/// `d q_case1 / dK`; undefined at `K = 1`.
pub fn dq_case1_dk(w: Profile, alpha: f64, k: f64) -> Result<f64> {
    unit("alpha", alpha)?;
    if !(k > 0.0 && k < 1.0) {
        return Err(Error::Domain(format!("dq/dK needs K in (0, 1), got {k}")));
    }
    let sw = w.raw(alpha).sqrt();
    Ok(alpha * k - sw / 2.0 * (3.0 - 4.0 * k) / (2.0 * ((1.0 - k) / k).sqrt()))
}

fn case_range(w: Profile, alpha: f64) -> Result<()> {
    let (lo, hi) = w.alpha_range();
    if !(lo..=hi).contains(&alpha) {
        return Err(Error::Domain(format!(
            "alpha={alpha} outside [{lo}, {hi}] for profile {w:?}"
        )));
    }
    Ok(())
}

/// Case `K < 1/2` with `B = b = sqrt(W)(1-K)`:
/// `alpha/2 K^2 - sqrt(W) (1-K) K^2`.
pub fn q_case2(w: Profile, alpha: f64, k: f64) -> Result<f64> {
    case_range(w, alpha)?;
    unit("K", k)?;
    Ok(q_case2_unchecked(w, alpha, k))
}

pub fn dq_case2_dk(w: Profile, alpha: f64, k: f64) -> Result<f64> {
    case_range(w, alpha)?;
    unit("K", k)?;
    let sw = w.raw(alpha).sqrt();
    Ok(alpha * k - 2.0 * sw * k + 3.0 * sw * k * k)
}

/// Minimizer in `K` of [`q_case2`]: `(2 sqrt(W) - alpha) / (3 sqrt(W))`.
pub fn k0(w: Profile, alpha: f64) -> Result<f64> {
    case_range(w, alpha)?;
    let sw = w.value(alpha)?.sqrt();
    if sw == 0.0 {
        return Err(Error::Domain(format!(
            "K0 is singular at alpha={alpha}: W(alpha) = 0"
        )));
    }
    Ok((2.0 * sw - alpha) / (3.0 * sw))
}

/// Closed form of `q_case2(alpha, K0(alpha))`:
/// `sqrt(W)/54 * (alpha/sqrt(W) - 2)^3`.
pub fn q_case2_at_k0(w: Profile, alpha: f64) -> Result<f64> {
    case_range(w, alpha)?;
    let sw = w.value(alpha)?.sqrt();
    if sw == 0.0 {
        return Err(Error::Domain(format!(
            "closed form is singular at alpha={alpha}: W(alpha) = 0"
        )));
    }
    Ok(sw / 54.0 * (alpha / sw - 2.0).powi(3))
}

/// Roots `(K1, K2)` of `(a^2 + W) K^2 - (3W/2 + a^2) K + 9W/16 = 0`, the
/// squared stationarity condition of [`q_case1`].
///
/// `K1 > 3/4` always, so it cannot satisfy the unsquared equation; for the
/// `G` profile on `[1/2, 1]` also `K2 < 1/2`. Both facts are checked.
pub fn stationary_roots_case1(w: Profile, alpha: f64) -> Result<(f64, f64)> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Domain(format!(
            "roots need alpha in (0, 1], got {alpha}"
        )));
    }
    let wv = w.value(alpha)?;
    let a2 = alpha * alpha;
    let disc = (0.75 * wv * a2 + a2 * a2).sqrt();
    let mid = 1.5 * wv + a2;
    let den = 2.0 * (a2 + wv);
    let (k1, k2) = ((mid + disc) / den, (mid - disc) / den);
    if k1 <= 0.75 {
        return Err(Error::Contract(format!(
            "K1={k1} is not above 3/4 at alpha={alpha}"
        )));
    }
    if w == Profile::G && alpha >= 0.5 && k2 >= 0.5 {
        return Err(Error::Contract(format!(
            "K2={k2} is not below 1/2 at alpha={alpha}"
        )));
    }
    Ok((k1, k2))
}

// ---------------------------------------------------------------------------
// grid + refinement

fn axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let intervals = ((hi - lo) / step).ceil().max(1.0) as usize;
    (0..=intervals)
        .map(|i| lo + (hi - lo) * i as f64 / intervals as f64)
        .collect()
}

fn better(a: (f64, f64, f64), b: (f64, f64, f64)) -> (f64, f64, f64) {
    // ties go to the lexicographically smallest point
    let key = |p: (f64, f64, f64)| (p.0, p.1, p.2);
    if key(b).partial_cmp(&key(a)) == Some(std::cmp::Ordering::Less) {
        b
    } else {
        a
    }
}

/// Best grid point `(value, x, y)` over the box, evaluated in parallel.
pub fn grid_minimum<F>(f: &F, region: [(f64, f64); 2], step: f64) -> (f64, f64, f64)
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    let xs = axis(region[0].0, region[0].1, step);
    let ys = axis(region[1].0, region[1].1, step);
    xs.par_iter()
        .map(|&x| {
            ys.iter()
                .map(|&y| (f(x, y), x, y))
                .fold((f64::INFINITY, x, ys[0]), better)
        })
        .reduce(|| (f64::INFINITY, f64::INFINITY, f64::INFINITY), better)
}

/// Golden-section minimization on `[lo, hi]`; the endpoints are also
/// compared so boundary minima are returned exactly.
pub fn golden_section<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let mid = (a + b) / 2.0;
    [(lo, f(lo)), (hi, f(hi)), (mid, f(mid)), (c, fc), (d, fd)]
        .into_iter()
        .fold((mid, f64::INFINITY), |best, cand| {
            if cand.1 < best.1 {
                cand
            } else {
                best
            }
        })
}

/// Nested golden-section refinement of `f` in the box of half-width `radius`
/// around `(x0, y0)`, clipped to `region`.
pub fn refine<F: Fn(f64, f64) -> f64>(
    f: &F,
    region: [(f64, f64); 2],
    center: (f64, f64),
    radius: f64,
    tol: f64,
) -> (f64, f64, f64) {
    let xlo = (center.0 - radius).max(region[0].0);
    let xhi = (center.0 + radius).min(region[0].1);
    let ylo = (center.1 - radius).max(region[1].0);
    let yhi = (center.1 + radius).min(region[1].1);
    let inner = |x: f64| golden_section(|y| f(x, y), ylo, yhi, tol);
    let (x, _) = golden_section(|x| inner(x).1, xlo, xhi, tol);
    let (y, v) = inner(x);
    (v, x, y)
}

/// Grid-then-refine certificate for one system.
pub fn certify_floor(system: System, grid_step: f64) -> MinimaxCertificate {
    let f = |x: f64, y: f64| system.objective(x, y);
    let region = system.region();
    let coarse = grid_minimum(&f, region, grid_step);
    let fine = refine(&f, region, (coarse.1, coarse.2), grid_step, REFINE_TOL);
    let (min_value, x, y) = if fine.0 <= coarse.0 { fine } else { coarse };
    let floor = system.floor();

    let passed = match system.expected_argmin() {
        Some([ex, ey]) => {
            (min_value - floor).abs() <= EQUALITY_TOL
                && (x - ex).abs() <= ARGMIN_TOL
                && (y - ey).abs() <= ARGMIN_TOL
        }
        None => min_value > floor + STRICT_MARGIN,
    };
    MinimaxCertificate {
        system,
        grid_step,
        refined_tolerance: REFINE_TOL,
        min_value,
        argmin: vec![x, y],
        floor,
        passed,
    }
}

// ---------------------------------------------------------------------------
// sample curves

/// A sampled curve, written as CSV with a header row and six decimals.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub name: &'static str,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<f64>>,
}

impl Curve {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:.6}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.rows.iter().map(|r| *r.last().unwrap())
    }
}

/// Curves for one system, sampled with spacing `step`.
pub fn system_curves(system: System, step: f64) -> Result<Vec<Curve>> {
    let lift = |v: f64| v - FLOOR_RESTRICTED;
    let mut out = Vec::new();
    match system {
        System::AppendixA => {
            let rows = axis(0.0, 1.0, step)
                .into_iter()
                .map(|y| {
                    let k = balance_k(y);
                    vec![y, k, appendix_a_objective(y, k)]
                })
                .collect();
            out.push(Curve {
                name: "appendix_a_balance",
                columns: &["y", "k", "value"],
                rows,
            });
        }
        System::AppendixBCase1 => {
            let rows = axis(0.5, 1.0, step)
                .into_iter()
                .map(|a| Ok(vec![a, lift(q_case1(Profile::G, a, 0.5)?)]))
                .collect::<Result<_>>()?;
            out.push(Curve {
                name: "b_case1_k_half",
                columns: &["alpha", "value"],
                rows,
            });
            let rows = axis(0.5, 1.0, step)
                .into_iter()
                .map(|a| Ok(vec![a, lift(q_case1(Profile::G, a, 1.0)?)]))
                .collect::<Result<_>>()?;
            out.push(Curve {
                name: "b_case1_k_one",
                columns: &["alpha", "value"],
                rows,
            });
        }
        System::AppendixBCase2 => {
            out.push(k0_curve(Profile::G, "b_case2_k0", axis(0.5, 1.0, step))?);
        }
        System::AppendixCCase1 => {
            let alphas: Vec<f64> = axis(0.0, 0.5, step).into_iter().skip(1).collect();
            let mut k2_rows = Vec::new();
            let mut branch_rows = Vec::new();
            for &a in &alphas {
                let (_, k2) = stationary_roots_case1(Profile::H, a)?;
                k2_rows.push(vec![a, k2 - 0.5]);
                if k2 > 0.5 {
                    branch_rows.push(vec![a, lift(q_case1(Profile::H, a, k2)?)]);
                }
            }
            out.push(Curve {
                name: "c_case1_k2",
                columns: &["alpha", "value"],
                rows: branch_rows,
            });
            out.push(Curve {
                name: "c_case1_k2_minus_half",
                columns: &["alpha", "value"],
                rows: k2_rows,
            });
            let rows = axis(0.0, 0.5, step)
                .into_iter()
                .map(|a| Ok(vec![a, lift(q_case1(Profile::H, a, 0.5)?)]))
                .collect::<Result<_>>()?;
            out.push(Curve {
                name: "c_case1_k_half",
                columns: &["alpha", "value"],
                rows,
            });
            let rows = axis(0.0, 0.5, step)
                .into_iter()
                .map(|a| Ok(vec![a, lift(q_case1(Profile::H, a, 1.0)?)]))
                .collect::<Result<_>>()?;
            out.push(Curve {
                name: "c_case1_k_one",
                columns: &["alpha", "value"],
                rows,
            });
        }
        System::AppendixCCase2 => {
            let alphas = axis(0.0, 0.5, step).into_iter().skip(1).collect();
            out.push(k0_curve(Profile::H, "c_case2_k0", alphas)?);
        }
    }
    Ok(out)
}

fn k0_curve(w: Profile, name: &'static str, alphas: Vec<f64>) -> Result<Curve> {
    let rows = alphas
        .into_iter()
        .map(|a| Ok(vec![a, q_case2_at_k0(w, a)? - FLOOR_RESTRICTED]))
        .collect::<Result<_>>()?;
    Ok(Curve {
        name,
        columns: &["alpha", "value"],
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn central_diff<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
        (f(x + h) - f(x - h)) / (2.0 * h)
    }

    #[test]
    fn t_values() {
        assert!((appendix_a_t(0.2).unwrap() - 2.0 / 25.0).abs() < 1e-15);
        assert_eq!(appendix_a_t(0.0).unwrap(), 0.0);
        assert!(appendix_a_t_prime(0.2).unwrap().abs() < 1e-10);
        assert!(appendix_a_t(1.2).is_err());
        assert!(appendix_a_t_prime(0.0).is_err());
    }

    #[test]
    fn t_prime_matches_finite_differences() {
        for i in 1..1000 {
            let y = i as f64 / 1000.0;
            let fd = central_diff(|y| appendix_a_t(y).unwrap(), y, 1e-6);
            assert!((appendix_a_t_prime(y).unwrap() - fd).abs() < 1e-6, "y={y}");
        }
    }

    #[test]
    fn branches_balance_at_optimum() {
        let (a, b) = appendix_a_branches(0.2, 0.4);
        assert!((a + 1.0 / 25.0).abs() < 1e-15);
        assert!((b + 1.0 / 25.0).abs() < 1e-15);
        assert_eq!(appendix_a_objective(0.0, 0.0), 0.0);
        assert!((balance_k(0.2) - 0.4).abs() < 1e-15);
        assert!(balance_residual_max(1000) <= BALANCE_TOL);
    }

    #[test]
    fn q_case1_values() {
        assert!((q_case1(Profile::G, 1.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        let a: f64 = 0.75;
        let want = (a - a.powf(0.75)) / 8.0;
        assert!((q_case1(Profile::G, a, 0.5).unwrap() - want).abs() < 1e-15);
        let v = q_case1(Profile::G, 0.5, 0.5).unwrap();
        assert!((v + 0.01183).abs() < 1e-5);
        assert!(v > FLOOR_RESTRICTED);
    }

    #[test]
    fn roots_examples() {
        let (k1, k2) = stationary_roots_case1(Profile::G, 1.0).unwrap();
        assert!((k2 - (5.0 - 7f64.sqrt()) / 8.0).abs() < 1e-14);
        assert!((k1 - (5.0 + 7f64.sqrt()) / 8.0).abs() < 1e-14);
        assert!((k2 - 0.29428).abs() < 1e-5);

        let (_, k2) = stationary_roots_case1(Profile::H, 0.4).unwrap();
        assert!(k2 < 0.5);
        assert!(stationary_roots_case1(Profile::H, 0.0).is_err());
    }

    #[test]
    fn roots_solve_quadratic() {
        for (w, lo, hi) in [(Profile::G, 0.5, 1.0), (Profile::H, 0.001, 0.5)] {
            for i in 0..=200 {
                let a = lo + (hi - lo) * i as f64 / 200.0;
                let wv = w.value(a).unwrap();
                let (k1, k2) = stationary_roots_case1(w, a).unwrap();
                for k in [k1, k2] {
                    let r = (a * a + wv) * k * k - (1.5 * wv + a * a) * k + 9.0 * wv / 16.0;
                    assert!(r.abs() < 1e-10, "{w:?} alpha={a}: residual {r}");
                }
            }
        }
    }

    #[test]
    fn k0_examples() {
        assert!((k0(Profile::G, 1.0).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!((q_case2_at_k0(Profile::G, 1.0).unwrap() - FLOOR_RESTRICTED).abs() < 1e-15);
        let half = q_case2_at_k0(Profile::G, 0.5).unwrap();
        assert!((half + 0.017147).abs() < 1e-5);
        assert!(half > FLOOR_RESTRICTED);
        let c_half = q_case2_at_k0(Profile::H, 0.5).unwrap();
        assert!((c_half - half).abs() < 1e-12);
        assert!(k0(Profile::H, 0.0).is_err());
        assert!(k0(Profile::G, 0.3).is_err());
    }

    #[test]
    fn h_increasing_on_lower_half() {
        let mut prev = -1.0;
        for i in 0..=5000 {
            let h = h_alpha(0.5 * i as f64 / 5000.0).unwrap();
            assert!(h > prev);
            prev = h;
        }
    }

    #[test]
    fn golden_section_finds_interior_and_boundary() {
        let (x, v) = golden_section(|x| (x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-8 && v < 1e-16);
        let (x, _) = golden_section(|x| -x, 0.0, 1.0, 1e-10);
        assert_eq!(x, 1.0);
    }

    #[test]
    fn system_names_parse() {
        for s in System::ALL {
            assert_eq!(s.label().parse::<System>().unwrap(), s);
            assert_eq!(s.to_string().parse::<System>().unwrap(), s);
        }
        assert!("z".parse::<System>().is_err());
    }

    #[test]
    fn csv_format() {
        let c = Curve {
            name: "t",
            columns: &["alpha", "value"],
            rows: vec![vec![0.5, -0.0118254], vec![1.0, 0.5]],
        };
        assert_eq!(
            c.to_csv(),
            "alpha,value\n0.500000,-0.011825\n1.000000,0.500000\n"
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(100))]

            #[test]
            fn dq_case1_matches_finite_differences(a in 0.01f64..1.0, k in 0.05f64..0.95) {
                for w in [Profile::G, Profile::H] {
                    let fd = central_diff(|k| q_case1(w, a, k).unwrap(), k, 1e-6);
                    prop_assert!((dq_case1_dk(w, a, k).unwrap() - fd).abs() < 1e-5);
                }
            }

            #[test]
            fn dq_case2_matches_finite_differences(t in 0.0f64..1.0, k in 0.05f64..0.95) {
                for w in [Profile::G, Profile::H] {
                    let (lo, hi) = w.alpha_range();
                    let a = lo + (hi - lo) * t;
                    let fd = central_diff(|k| q_case2(w, a, k).unwrap(), k, 1e-6);
                    prop_assert!((dq_case2_dk(w, a, k).unwrap() - fd).abs() < 1e-5);
                }
            }

            #[test]
            fn k0_is_stationary_and_closed_form_matches(t in 0.001f64..1.0) {
                for w in [Profile::G, Profile::H] {
                    let (lo, hi) = w.alpha_range();
                    let a = lo + (hi - lo) * t;
                    let k = k0(w, a).unwrap();
                    prop_assert!(dq_case2_dk(w, a, k).unwrap().abs() < 1e-12);
                    let direct = q_case2(w, a, k).unwrap();
                    prop_assert!((direct - q_case2_at_k0(w, a).unwrap()).abs() < 1e-10);
                }
            }

            // Independent route: sample the unreduced four-variable system
            // directly and check the objective never undercuts -1/54.
            #[test]
            fn unreduced_system_respects_floor(a in 0.0f64..=1.0, k in 0.01f64..0.99, bb in 0.0f64..=1.0) {
                let w = g_alpha(a).unwrap().sqrt().max(h_alpha(a).unwrap().sqrt());
                let b_cap = (1.0 - k) / k;
                let big_b = bb * b_cap.min(w);
                let slack = w * big_b - big_b * big_b;
                prop_assume!(slack >= 0.0);
                let b = big_b.min(b_cap).min((slack * (1.0 - k) / k).sqrt());
                let objective = a / 2.0 * k * k - b * k * k;
                prop_assert!(objective >= FLOOR_RESTRICTED - 1e-12);
            }
        }
    }
}
