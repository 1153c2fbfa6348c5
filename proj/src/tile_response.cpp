// SPDX-License-Identifier: Apache-2.0
#include "irs/tile_response.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace irs {

namespace {

void check_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::domain_error(std::string(name) + " must be positive and finite");
  }
}

void check_rho(double rho) {
  if (!std::isfinite(rho) || rho <= 0.0 || rho > 1.0) {
    throw std::domain_error("rho_eff must lie in (0, 1]");
  }
}

void check_normalized(double v, const char* name) {
  if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
    throw std::domain_error(std::string(name) + " must lie in [-1, 1]");
  }
}

// Index range of a q-cell axis: {-ceil(q/2)+1, ..., floor(q/2)}, which holds
// exactly q indices for any positive q and centers even counts on the origin.
int cell_index_lo(int q) { return 1 - (q + 1) / 2; }
int cell_index_hi(int q) { return q / 2; }

// Footprint match between a lattice and the tile it realizes.
void check_lattice_fits(const TileSpec& tile, const DiscreteLattice& lattice) {
  const double tol = 1e-9;
  if (std::abs(lattice.q_x * lattice.d_x - tile.len_x) > tol * std::max(1.0, tile.len_x) ||
      std::abs(lattice.q_y * lattice.d_y - tile.len_y) > tol * std::max(1.0, tile.len_y)) {
    throw std::domain_error("lattice does not tile the tile footprint: q_i * d_i must equal len_i");
  }
}

}  // namespace

TileSpec::TileSpec(double lx, double ly, double rho, int kx, int ky)
    : len_x(lx), len_y(ly), rho_eff(rho), k_x(kx), k_y(ky) {
  check_positive(lx, "len_x");
  check_positive(ly, "len_y");
  check_rho(rho);
}

DiscreteLattice::DiscreteLattice(int qx, int qy, double dx, double dy,
                                 double edge, std::optional<int> bits)
    : q_x(qx), q_y(qy), d_x(dx), d_y(dy), cell_edge(edge), phase_bits(bits) {
  if (qx <= 0 || qy <= 0) {
    throw std::domain_error("cell counts q_x, q_y must be positive");
  }
  check_positive(dx, "d_x");
  check_positive(dy, "d_y");
  check_positive(edge, "cell_edge");
  if (edge > std::min(dx, dy) * (1.0 + 1e-12)) {
    throw std::domain_error("cell_edge must not exceed the cell spacing");
  }
  if (bits && *bits < 1) {
    throw std::domain_error("phase_bits must be >= 1");
  }
}

TransmissionMode::TransmissionMode(double bx, double by, double b0)
    : beta_bar_x(bx), beta_bar_y(by), beta_bar_0(b0) {
  check_normalized(bx, "beta_bar_x");
  check_normalized(by, "beta_bar_y");
  check_normalized(b0, "beta_bar_0");
}

double sinc(double x) {
  if (std::abs(x) < 1e-6) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;  // series branch avoids 0/0 cancellation
  }
  return std::sin(x) / x;
}

double g_tilde(const AngleTriple& t, const AnglePair& r) {
  const double c = c_factor(t);
  const double cp = std::cos(t.phi_pol);
  const double sp = std::sin(t.phi_pol);
  const double ctr = std::cos(r.theta_r);
  const double cpr = std::cos(r.phi_r);
  const double spr = std::sin(r.phi_r);
  const double v1 = cp * ctr * spr - sp * ctr * cpr;
  const double v2 = sp * spr + cp * cpr;
  return c * std::hypot(v1, v2);
}

double peak_bound(const TileSpec& tile, const WaveSpec& wave) {
  return kSqrt4Pi * tile.rho_eff * tile.len_x * tile.len_y / wave.lambda;
}

TransmissionMode mode_from_directions(const AngleTriple& target_in,
                                      const AnglePair& target_out,
                                      double beta_0) {
  if (!std::isfinite(beta_0) || std::abs(beta_0) > kTwoPi) {
    throw std::domain_error("beta_0 must lie in [-2*pi, 2*pi]");
  }
  const TransverseSum s = direction_cosine_sum(target_in, target_out);
  return TransmissionMode(-0.5 * s.x, -0.5 * s.y, beta_0 / kTwoPi);
}

std::optional<AnglePair> mode_peak_direction(const TransmissionMode& mode,
                                             const AngleTriple& incident) {
  const Vec3 at = propagation_direction(incident);
  const double tx = -2.0 * mode.beta_bar_x - at.x;
  const double ty = -2.0 * mode.beta_bar_y - at.y;
  const double n = std::hypot(tx, ty);
  if (n > 1.0 + 1e-12) {
    return std::nullopt;  // evanescent: no propagating peak direction
  }
  const double theta = std::asin(std::min(n, 1.0));
  const double phi = (n == 0.0) ? 0.0 : wrap_two_pi(std::atan2(ty, tx));
  return AnglePair(theta, phi);
}

Complex continuous_tile_response(const AngleTriple& t, const AnglePair& r,
                                 const TransmissionMode& mode,
                                 const TileSpec& tile, const WaveSpec& wave) {
  const double k = wave.wavenumber();
  const TransverseSum s = direction_cosine_sum(t, r);
  // Peak offset in direction-cosine space: A_i* = -2 * beta_bar_i.
  const double ux = 0.5 * k * tile.len_x * (s.x + 2.0 * mode.beta_bar_x);
  const double uy = 0.5 * k * tile.len_y * (s.y + 2.0 * mode.beta_bar_y);
  const double magnitude = peak_bound(tile, wave) * g_tilde(t, r) * sinc(ux) * sinc(uy);
  const double phase = kPi / 2.0 + kTwoPi * mode.beta_bar_0;
  // A negative magnitude folds into the phase through the signed multiply.
  return magnitude * Complex(std::cos(phase), std::sin(phase));
}

Complex unit_cell_response(int n_x, int n_y, double cell_phase_x,
                           double cell_phase_y, const AngleTriple& t,
                           const AnglePair& r, const DiscreteLattice& lattice,
                           double rho_eff, const WaveSpec& wave) {
  check_rho(rho_eff);
  if (n_x < cell_index_lo(lattice.q_x) || n_x > cell_index_hi(lattice.q_x) ||
      n_y < cell_index_lo(lattice.q_y) || n_y > cell_index_hi(lattice.q_y)) {
    throw std::domain_error("unit-cell index outside the lattice");
  }
  const double k = wave.wavenumber();
  const TransverseSum s = direction_cosine_sum(t, r);
  const double amp =
      kSqrt4Pi * rho_eff * lattice.cell_edge * lattice.cell_edge / wave.lambda * g_tilde(t, r);
  const double phase = k * lattice.d_x * s.x * n_x + cell_phase_x +
                       k * lattice.d_y * s.y * n_y + cell_phase_y;
  return amp * Complex(-std::sin(phase), std::cos(phase));  // j * exp(j*phase)
}

Complex discrete_tile_response(const AngleTriple& t, const AnglePair& r,
                               const TransmissionMode& mode,
                               const TileSpec& tile,
                               const DiscreteLattice& lattice,
                               const WaveSpec& wave) {
  check_lattice_fits(tile, lattice);
  const double k = wave.wavenumber();
  const TransverseSum s = direction_cosine_sum(t, r);

  // The per-cell phase separates per axis, so the double sum factors into a
  // product of two one-dimensional sums.
  auto axis_sum = [&](int q, double d, double cosine_sum, double beta_bar) {
    Complex acc(0.0, 0.0);
    for (int n = cell_index_lo(q); n <= cell_index_hi(q); ++n) {
      double beta = 2.0 * k * beta_bar * (n * d) + kPi * mode.beta_bar_0;
      if (lattice.phase_bits) beta = quantize_phase(beta, *lattice.phase_bits);
      const double phase = k * d * cosine_sum * n + beta;
      acc += Complex(std::cos(phase), std::sin(phase));
    }
    return acc;
  };

  const Complex sum_x = axis_sum(lattice.q_x, lattice.d_x, s.x, mode.beta_bar_x);
  const Complex sum_y = axis_sum(lattice.q_y, lattice.d_y, s.y, mode.beta_bar_y);
  const double amp =
      kSqrt4Pi * tile.rho_eff * lattice.cell_edge * lattice.cell_edge / wave.lambda * g_tilde(t, r);
  return Complex(0.0, 1.0) * amp * sum_x * sum_y;
}

double quantize_phase(double beta, int bits) {
  if (bits < 1 || bits > 62) {
    throw std::domain_error("bits must lie in [1, 62]");
  }
  const double levels = std::exp2(static_cast<double>(bits));
  const double step = kTwoPi / levels;
  const double m = wrap_two_pi(beta) / step;
  double idx = std::ceil(m - 0.5);  // half-integer ties resolve to the lower level
  if (idx >= levels || idx < 0.0) idx = 0.0;
  return idx * step;
}

namespace {

// Midpoint-rule sum of the phase integrand over an n x n mesh. The linear
// phase profile separates per axis, so per-axis phasor tables turn the mesh
// sum into a product-accumulation without evaluating sin/cos per cell.
Complex midpoint_sum(const TileSpec& tile, const WaveSpec& wave,
                     const TransmissionMode& mode, const TransverseSum& s,
                     int n) {
  const double k = wave.wavenumber();
  const double hx = tile.len_x / n;
  const double hy = tile.len_y / n;
  std::vector<Complex> px(n), py(n);
  for (int i = 0; i < n; ++i) {
    const double x = -0.5 * tile.len_x + (i + 0.5) * hx;
    const double ph = k * s.x * x + 2.0 * k * mode.beta_bar_x * x + kPi * mode.beta_bar_0;
    px[i] = Complex(std::cos(ph), std::sin(ph));
  }
  for (int j = 0; j < n; ++j) {
    const double y = -0.5 * tile.len_y + (j + 0.5) * hy;
    const double ph = k * s.y * y + 2.0 * k * mode.beta_bar_y * y + kPi * mode.beta_bar_0;
    py[j] = Complex(std::cos(ph), std::sin(ph));
  }
  Complex row(0.0, 0.0);
  for (int j = 0; j < n; ++j) row += py[j];
  Complex total(0.0, 0.0);
  for (int i = 0; i < n; ++i) total += px[i] * row;
  return total * (hx * hy);
}

}  // namespace

Complex quadrature_oracle(const AngleTriple& t, const AnglePair& r,
                          const TransmissionMode& mode, const TileSpec& tile,
                          const WaveSpec& wave, int grid_n) {
  if (grid_n < 64) {
    throw std::domain_error("grid_n must be >= 64");
  }
  const TransverseSum s = direction_cosine_sum(t, r);
  const Complex coarse = midpoint_sum(tile, wave, mode, s, grid_n);
  const Complex fine = midpoint_sum(tile, wave, mode, s, 2 * grid_n);
  const Complex integral = (4.0 * fine - coarse) / 3.0;
  const double amp = kSqrt4Pi * tile.rho_eff * g_tilde(t, r) / wave.lambda;
  return Complex(0.0, 1.0) * amp * integral;
}

}  // namespace irs
