//! The two benchmark Hamiltonians: a high-dimensional two-level model with
//! a sech pulse envelope (complex Hermitian), and a Morse oscillator in a
//! cosine laser field discretized by periodic central differences (real
//! symmetric), with its analytic spectral bounds.

use crate::driver::SpectralBounds;
use crate::integrators::{HamiltonianOp, TimeDependentHamiltonian};
use crate::matcore::{ComplexMatrix, RealMatrix};
use num_complex::Complex64;

/// Parameters of the driven two-level ladder model (`d = 2k` levels).
#[derive(Clone, Copy, Debug)]
pub struct RosenZenerParams {
    /// Half-dimension; the Hamiltonian is `2k x 2k`.
    pub k: usize,
    /// Coupling amplitude.
    pub v0: f64,
    /// Drive frequency.
    pub omega: f64,
    /// Pulse width of the sech envelope.
    pub t_pulse: f64,
    pub t0: f64,
    pub tf: f64,
}

impl Default for RosenZenerParams {
    fn default() -> Self {
        RosenZenerParams {
            k: 10,
            v0: 2.0,
            omega: 5.0,
            t_pulse: 1.0,
            t0: -4.0,
            tf: 4.0,
        }
    }
}

/// `H(t) = f1(t) sigma_1 (x) I + f2(t) sigma_2 (x) R` with
/// `R = tridiag(1, 0, 1)`, `f1 = V0 cos(w t) sech(t/T0)`,
/// `f2 = -V0 sin(w t) sech(t/T0)`.
pub fn rosen_zener_h(p: &RosenZenerParams, t: f64) -> ComplexMatrix {
    let k = p.k;
    let envelope = 1.0 / (t / p.t_pulse).cosh();
    let f1 = p.v0 * (p.omega * t).cos() * envelope;
    let f2 = -p.v0 * (p.omega * t).sin() * envelope;
    ComplexMatrix::from_fn(2 * k, |i, j| {
        let (bi, ii) = (i / k, i % k);
        let (bj, jj) = (j / k, j % k);
        if bi == bj {
            return Complex64::new(0.0, 0.0);
        }
        let ident = if ii == jj { 1.0 } else { 0.0 };
        let r = if ii.abs_diff(jj) == 1 { 1.0 } else { 0.0 };
        // sigma_1 off-diagonal entries are 1; sigma_2 are -i (top) / i
        // (bottom)
        if bi == 0 {
            Complex64::new(f1 * ident, -f2 * r)
        } else {
            Complex64::new(f1 * ident, f2 * r)
        }
    })
}

impl TimeDependentHamiltonian for RosenZenerParams {
    fn dim(&self) -> usize {
        2 * self.k
    }

    fn op(&self, terms: &[(f64, f64)]) -> HamiltonianOp {
        let mut acc = ComplexMatrix::zeros(2 * self.k);
        for &(coeff, t) in terms {
            acc = acc.add(&rosen_zener_h(self, t).scale(Complex64::new(coeff, 0.0)));
        }
        HamiltonianOp::Hermitian {
            matrix: acc,
            bounds: None,
        }
    }
}

/// Parameters of the Morse-oscillator-in-laser-field model.
#[derive(Clone, Copy, Debug)]
pub struct WalkerPrestonParams {
    pub x0: f64,
    pub xn: f64,
    /// Number of grid intervals (and matrix dimension).
    pub n: usize,
    /// Reduced mass.
    pub mu: f64,
    /// Morse well depth.
    pub depth: f64,
    /// Morse width parameter.
    pub width: f64,
    /// Laser field amplitude.
    pub field_amplitude: f64,
    /// Laser frequency.
    pub field_frequency: f64,
}

impl Default for WalkerPrestonParams {
    fn default() -> Self {
        WalkerPrestonParams {
            x0: -0.8,
            xn: 4.32,
            n: 64,
            mu: 1745.0,
            depth: 0.2251,
            width: 1.1741,
            field_amplitude: 0.011025,
            field_frequency: 0.01787,
        }
    }
}

impl WalkerPrestonParams {
    pub fn dx(&self) -> f64 {
        (self.xn - self.x0) / self.n as f64
    }

    /// Grid points carrying the wave function samples (`x_0 .. x_{N-1}`;
    /// `x_N` is identified with `x_0` by periodicity).
    pub fn grid(&self) -> Vec<f64> {
        let dx = self.dx();
        (0..self.n).map(|i| self.x0 + i as f64 * dx).collect()
    }

    /// Kinetic prefactor `N^2 / (2 mu (x_N - x_0)^2)`.
    pub fn kinetic_prefactor(&self) -> f64 {
        let l = self.xn - self.x0;
        (self.n as f64) * (self.n as f64) / (2.0 * self.mu * l * l)
    }

    /// Morse potential `D (1 - exp(-a x))^2`.
    pub fn potential(&self, x: f64) -> f64 {
        let e = 1.0 - (-self.width * x).exp();
        self.depth * e * e
    }

    fn field(&self, t: f64) -> f64 {
        self.field_amplitude * (self.field_frequency * t).cos()
    }

    fn diagonal(&self, t: f64) -> Vec<f64> {
        let f = self.field(t);
        self.grid()
            .iter()
            .map(|&x| self.potential(x) + f * x)
            .collect()
    }

    /// Periodic second-difference kinetic matrix.
    pub fn kinetic_matrix(&self) -> RealMatrix {
        let n = self.n;
        let p = self.kinetic_prefactor();
        RealMatrix::from_fn(n, |i, j| {
            if i == j {
                2.0 * p
            } else if i.abs_diff(j) == 1 || i.abs_diff(j) == n - 1 {
                -p
            } else {
                0.0
            }
        })
    }
}

/// `H(t) = T + B(t)` and its analytic spectral bounds
/// `[min B_jj, 2N^2/(mu L^2) + max B_jj]`.
pub fn walker_preston_h(p: &WalkerPrestonParams, t: f64) -> (RealMatrix, SpectralBounds) {
    let diag = p.diagonal(t);
    let mut h = p.kinetic_matrix();
    for (j, &b) in diag.iter().enumerate() {
        h.set(j, j, h.get(j, j) + b);
    }
    let (dmin, dmax) = min_max(&diag);
    let bounds = SpectralBounds {
        emin: dmin,
        emax: 4.0 * p.kinetic_prefactor() + dmax,
    };
    (h, bounds)
}

/// Ground state of the Morse well sampled on the grid, normalized so the
/// squared entries sum to one.
pub fn morse_ground_state(p: &WalkerPrestonParams) -> Vec<Complex64> {
    let omega0 = p.width * (2.0 * p.depth / p.mu).sqrt();
    let gamma = 2.0 * p.depth / omega0;
    let mut u: Vec<f64> = p
        .grid()
        .iter()
        .map(|&x| (-(gamma - 0.5) * p.width * x).exp() * (-gamma * (-p.width * x).exp()).exp())
        .collect();
    let norm: f64 = u.iter().map(|v| v * v).sum::<f64>().sqrt();
    for v in &mut u {
        *v /= norm;
    }
    u.into_iter().map(|v| Complex64::new(v, 0.0)).collect()
}

fn min_max(v: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &x in v {
        lo = lo.min(x);
        hi = hi.max(x);
    }
    (lo, hi)
}

impl TimeDependentHamiltonian for WalkerPrestonParams {
    fn dim(&self) -> usize {
        self.n
    }

    /// Linear combinations `sum_i c_i H(t_i) = (sum c_i) T + diag`, with
    /// exact bounds: the periodic kinetic spectrum sits in `[0, 4p]`, the
    /// diagonal part is known entrywise.
    fn op(&self, terms: &[(f64, f64)]) -> HamiltonianOp {
        let n = self.n;
        let c_t: f64 = terms.iter().map(|&(c, _)| c).sum();
        let mut diag = vec![0.0; n];
        for &(c, t) in terms {
            for (slot, b) in diag.iter_mut().zip(self.diagonal(t)) {
                *slot += c * b;
            }
        }
        let mut h = self.kinetic_matrix().scale(c_t);
        for (j, &b) in diag.iter().enumerate() {
            h.set(j, j, h.get(j, j) + b);
        }
        let (dmin, dmax) = min_max(&diag);
        let kin_span = 4.0 * self.kinetic_prefactor() * c_t;
        let bounds = SpectralBounds {
            emin: kin_span.min(0.0) + dmin,
            emax: kin_span.max(0.0) + dmax,
        };
        HamiltonianOp::RealSymmetric {
            matrix: h,
            bounds: Some(bounds),
        }
    }
}
