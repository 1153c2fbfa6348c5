// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include <doctest.h>

#include "irs/channel.hpp"

using namespace irs;

namespace {

// One-transmitter, one-receiver skeleton with no paths; tests add paths and
// arrays as needed.
ChannelScenario make_skeleton(std::vector<ArrayGeometry> tx, std::vector<ArrayGeometry> rx,
                              IrsLayout layout, Codebook cb) {
  const std::size_t nt = tx.size(), nr = rx.size();
  ChannelScenario s{std::move(tx),
                    std::move(rx),
                    std::move(layout),
                    std::move(cb),
                    std::vector<std::vector<std::vector<DirectPath>>>(
                        nr, std::vector<std::vector<DirectPath>>(nt)),
                    std::vector<std::vector<IncidentPath>>(nt),
                    std::vector<std::vector<OutgoingPath>>(nr),
                    0.0,
                    0u};
  return s;
}

ArrayGeometry single_antenna() { return ArrayGeometry({Vec3{0.0, 0.0, 0.0}}); }

double rel_err(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

TEST_CASE("ArrayGeometry requires finite, non-empty element sets") {
  CHECK_THROWS_AS(ArrayGeometry({}), std::domain_error);
  CHECK_THROWS_AS(ArrayGeometry({Vec3{std::nan(""), 0.0, 0.0}}), std::domain_error);
  CHECK(ArrayGeometry({Vec3{0.0, 0.0, 0.0}, Vec3{0.5, 0.0, 0.0}}).size() == 2);
}

TEST_CASE("steering_vector fixed points") {
  const ArrayGeometry one({Vec3{0.0, 0.0, 0.0}});
  const Eigen::VectorXcd v1 = steering_vector(one, Vec3{0.3, 0.4, 0.5});
  REQUIRE(v1.size() == 1);
  CHECK(v1(0) == Complex(1.0, 0.0));

  // Half-wavelength pair: broadside arrival keeps both at phase zero,
  // endfire arrival puts the second element half a cycle ahead.
  const ArrayGeometry pair({Vec3{0.0, 0.0, 0.0}, Vec3{0.5, 0.0, 0.0}});
  const Eigen::VectorXcd broadside = steering_vector(pair, Vec3{0.0, 0.0, 1.0});
  CHECK(rel_err(broadside(0), Complex(1.0, 0.0)) < 1e-15);
  CHECK(rel_err(broadside(1), Complex(1.0, 0.0)) < 1e-15);
  const Eigen::VectorXcd endfire = steering_vector(pair, Vec3{1.0, 0.0, 0.0});
  CHECK(rel_err(endfire(0), Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(endfire(1) - Complex(-1.0, 0.0)) < 1e-15);

  // Reversing the direction conjugates every element.
  const Vec3 d{0.42, -0.13, 0.7};
  const Eigen::VectorXcd fwd = steering_vector(pair, d);
  const Eigen::VectorXcd rev = steering_vector(pair, Vec3{-d.x, -d.y, -d.z});
  for (Eigen::Index l = 0; l < fwd.size(); ++l) {
    CHECK(std::abs(rev(l) - std::conj(fwd(l))) < 1e-15);
  }
}

TEST_CASE("ChannelScenario validates its shapes") {
  const WaveSpec wave(1.0);
  ChannelScenario s = make_skeleton({single_antenna(), single_antenna()}, {single_antenna()},
                                    IrsLayout({}, wave), Codebook({TransmissionMode(0.0, 0.0, 0.0)}));
  CHECK_NOTHROW(s.validate());
  auto bad_direct = s;
  bad_direct.direct.emplace_back();
  CHECK_THROWS_AS(bad_direct.validate(), ConfigError);
  auto ragged = s;
  ragged.direct[0].pop_back();
  CHECK_THROWS_AS(ragged.validate(), ConfigError);
  auto bad_incident = s;
  bad_incident.incident.pop_back();
  CHECK_THROWS_AS(bad_incident.validate(), ConfigError);
  auto bad_outgoing = s;
  bad_outgoing.outgoing.emplace_back();
  CHECK_THROWS_AS(bad_outgoing.validate(), ConfigError);
  auto bad_noise = s;
  bad_noise.noise_variance = -1.0;
  CHECK_THROWS_AS(bad_noise.validate(), ConfigError);
}

TEST_CASE("assemble_scatter_matrix single-tile entry is the tile response") {
  const WaveSpec wave(1.0);
  const Codebook cb({TransmissionMode(0.0, 0.0, 0.0), TransmissionMode(-0.2, 0.1, 0.0)});
  ChannelScenario s = make_skeleton({single_antenna()}, {single_antenna()},
                                    IrsLayout({TileSpec(4.0, 4.0, 0.5)}, wave), cb);
  const AngleTriple t_in(0.3, 1.0, 0.2);
  const AnglePair r_out(0.6, 4.0);
  s.incident[0].push_back({AnglePair(0.1, 0.0), t_in, Complex(1.0, 0.0)});
  s.outgoing[0].push_back({r_out, AnglePair(0.2, 0.0), Complex(1.0, 0.0)});

  for (std::size_t m = 0; m < cb.size(); ++m) {
    const ModeSelection sel{{m}};
    const Eigen::MatrixXcd G = assemble_scatter_matrix(0, 0, sel, s);
    REQUIRE(G.rows() == 1);
    REQUIRE(G.cols() == 1);
    const Complex expected = tile_translated_response(0, m, t_in, r_out, s.layout, cb);
    CHECK(rel_err(G(0, 0), expected) < 1e-14);
  }
}

TEST_CASE("assemble_scatter_matrix is additive over tiles") {
  const WaveSpec wave(1.0);
  const Codebook cb({TransmissionMode(0.0, 0.0, 0.0), TransmissionMode(0.15, -0.05, 0.25)});
  const AngleTriple t_in(0.4, 2.0, 1.0);
  const AnglePair r_out(0.5, 0.7);
  auto scenario_with = [&](std::vector<TileSpec> tiles) {
    ChannelScenario s = make_skeleton({single_antenna()}, {single_antenna()},
                                      IrsLayout(std::move(tiles), wave), cb);
    s.incident[0].push_back({AnglePair(0.1, 0.0), t_in, Complex(1.0, 0.0)});
    s.outgoing[0].push_back({r_out, AnglePair(0.2, 0.0), Complex(1.0, 0.0)});
    return s;
  };
  const TileSpec t0(3.0, 3.0, 0.5, 0, 0);
  const TileSpec t1(3.0, 3.0, 0.5, -2, 1);
  const Complex both =
      assemble_scatter_matrix(0, 0, ModeSelection{{0, 1}}, scenario_with({t0, t1}))(0, 0);
  const Complex alone0 = assemble_scatter_matrix(0, 0, ModeSelection{{0}}, scenario_with({t0}))(0, 0);
  const Complex alone1 = assemble_scatter_matrix(0, 0, ModeSelection{{1}}, scenario_with({t1}))(0, 0);
  CHECK(rel_err(both, alone0 + alone1) < 1e-14);
}

TEST_CASE("assemble_scatter_matrix matches a per-entry reassembly") {
  const WaveSpec wave(1.0);
  const Codebook cb({TransmissionMode(0.0, 0.0, 0.0), TransmissionMode(0.1, 0.2, -0.3),
                     TransmissionMode(-0.4, 0.0, 0.5)});
  std::vector<TileSpec> tiles{TileSpec(2.0, 2.0, 0.7, 0, 0), TileSpec(2.0, 2.0, 0.7, 1, 0),
                              TileSpec(2.0, 2.0, 0.7, 0, -3)};
  ChannelScenario s = make_skeleton({single_antenna()}, {single_antenna()},
                                    IrsLayout(tiles, wave), cb);
  s.incident[0].push_back({AnglePair(0.1, 0.0), AngleTriple(0.3, 1.0, 0.2), Complex(1.0, 0.0)});
  s.incident[0].push_back({AnglePair(0.2, 1.0), AngleTriple(0.8, 4.0, 2.0), Complex(1.0, 0.0)});
  s.incident[0].push_back({AnglePair(0.3, 2.0), AngleTriple(0.1, 5.5, 3.1), Complex(1.0, 0.0)});
  s.outgoing[0].push_back({AnglePair(0.6, 4.0), AnglePair(0.1, 0.0), Complex(1.0, 0.0)});
  s.outgoing[0].push_back({AnglePair(1.2, 2.2), AnglePair(0.2, 0.0), Complex(1.0, 0.0)});

  const ModeSelection sel{{2, 0, 1}};
  const Eigen::MatrixXcd G = assemble_scatter_matrix(0, 0, sel, s);
  REQUIRE(G.rows() == 2);
  REQUIRE(G.cols() == 3);
  for (Eigen::Index nr = 0; nr < 2; ++nr) {
    for (Eigen::Index nt = 0; nt < 3; ++nt) {
      Complex expected(0.0, 0.0);
      for (std::size_t n = 0; n < tiles.size(); ++n) {
        expected += tile_translated_response(n, sel.assignment[n],
                                             s.incident[0][static_cast<std::size_t>(nt)].arrival_irs,
                                             s.outgoing[0][static_cast<std::size_t>(nr)].departure_irs,
                                             s.layout, cb);
      }
      CHECK(rel_err(G(nr, nt), expected) < 1e-12);
    }
  }
}

TEST_CASE("assemble_scatter_matrix validates the selection") {
  const WaveSpec wave(1.0);
  const Codebook cb({TransmissionMode(0.0, 0.0, 0.0)});
  ChannelScenario s = make_skeleton({single_antenna()}, {single_antenna()},
                                    IrsLayout({TileSpec(1.0, 1.0, 1.0)}, wave), cb);
  CHECK_THROWS_AS(assemble_scatter_matrix(0, 0, ModeSelection{{}}, s), std::domain_error);
  CHECK_THROWS_AS(assemble_scatter_matrix(0, 0, ModeSelection{{1}}, s), std::domain_error);
  CHECK_THROWS_AS(assemble_scatter_matrix(1, 0, ModeSelection{{0}}, s), std::domain_error);
  CHECK_THROWS_AS(assemble_scatter_matrix(0, 1, ModeSelection{{0}}, s), std::domain_error);
}

TEST_CASE("end_to_end_matrix direct-only rank-one accumulation") {
  const WaveSpec wave(1.0);
  const Codebook cb({TransmissionMode(0.0, 0.0, 0.0)});
  const ArrayGeometry tx({Vec3{0.0, 0.0, 0.0}, Vec3{0.5, 0.0, 0.0}});
  const ArrayGeometry rx({Vec3{0.0, 0.0, 0.0}, Vec3{0.0, 0.5, 0.0}, Vec3{0.0, 1.0, 0.0}});
  ChannelScenario s = make_skeleton({tx}, {rx}, IrsLayout({}, wave), cb);
  const DirectPath p0{AnglePair(0.4, 0.3), AnglePair(0.9, 2.0), Complex(0.8, -0.1)};
  const DirectPath p1{AnglePair(1.1, 4.0), AnglePair(0.2, 5.0), Complex(-0.3, 0.6)};
  s.direct[0][0] = {p0, p1};

  const Eigen::MatrixXcd H = end_to_end_matrix(0, 0, ModeSelection{{}}, s);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 2);
  for (const DirectPath& p : {p0, p1}) {
    expected += p.gain * steering_vector(rx, propagation_direction(p.arrival)) *
                steering_vector(tx, propagation_direction(p.departure)).adjoint();
  }
  CHECK((H - expected).norm() < 1e-12 * expected.norm());
}

TEST_CASE("end_to_end_matrix single bounce with scalar terminals") {
  const WaveSpec wave(1.0);
  const Codebook cb({TransmissionMode(-0.1, 0.05, 0.0)});
  ChannelScenario s = make_skeleton({single_antenna()}, {single_antenna()},
                                    IrsLayout({TileSpec(4.0, 4.0, 0.5)}, wave), cb);
  const AngleTriple t_in(0.3, 1.0, 0.2);
  const AnglePair r_out(0.6, 4.0);
  const Complex g_in(0.7, 0.1), g_out(0.2, -0.9);
  s.incident[0].push_back({AnglePair(0.1, 0.0), t_in, g_in});
  s.outgoing[0].push_back({r_out, AnglePair(0.2, 0.0), g_out});

  const Eigen::MatrixXcd H = end_to_end_matrix(0, 0, ModeSelection{{0}}, s);
  REQUIRE(H.rows() == 1);
  REQUIRE(H.cols() == 1);
  // Scalar terminals have unit steering; only gains and the tile remain.
  const Complex expected = g_out * tile_translated_response(0, 0, t_in, r_out, s.layout, cb) * g_in;
  CHECK(rel_err(H(0, 0), expected) < 1e-13);
}

TEST_CASE("end_to_end_matrix matches an explicit dense assembly") {
  const WaveSpec wave(0.25);
  const Codebook cb({TransmissionMode(0.0, 0.0, 0.0), TransmissionMode(0.2, -0.1, 0.4)});
  const ArrayGeometry tx({Vec3{0.0, 0.0, 0.0}, Vec3{0.5, 0.0, 0.0}});
  const ArrayGeometry rx({Vec3{0.0, 0.0, 0.0}, Vec3{0.0, 0.5, 0.0}});
  ChannelScenario s = make_skeleton(
      {tx}, {rx}, IrsLayout({TileSpec(1.0, 1.0, 0.9, 0, 0), TileSpec(1.0, 1.0, 0.9, 2, -1)}, wave),
      cb);
  s.direct[0][0].push_back({AnglePair(0.4, 0.3), AnglePair(0.9, 2.0), Complex(0.5, 0.5)});
  s.incident[0].push_back({AnglePair(0.15, 0.4), AngleTriple(0.35, 1.1, 0.6), Complex(0.9, -0.2)});
  s.incident[0].push_back({AnglePair(0.25, 1.4), AngleTriple(0.85, 4.1, 2.6), Complex(-0.4, 0.3)});
  s.outgoing[0].push_back({AnglePair(0.55, 3.9), AnglePair(0.65, 0.2), Complex(0.1, 0.8)});
  const ModeSelection sel{{1, 0}};

  const Eigen::MatrixXcd H = end_to_end_matrix(0, 0, sel, s);

  Eigen::MatrixXcd expected =
      s.direct[0][0][0].gain *
      steering_vector(rx, propagation_direction(s.direct[0][0][0].arrival)) *
      steering_vector(tx, propagation_direction(s.direct[0][0][0].departure)).adjoint();
  for (std::size_t nr = 0; nr < s.outgoing[0].size(); ++nr) {
    for (std::size_t nt = 0; nt < s.incident[0].size(); ++nt) {
      Complex g(0.0, 0.0);
      for (std::size_t n = 0; n < s.layout.size(); ++n) {
        g += tile_translated_response(n, sel.assignment[n], s.incident[0][nt].arrival_irs,
                                      s.outgoing[0][nr].departure_irs, s.layout, cb);
      }
      expected += s.outgoing[0][nr].gain * g * s.incident[0][nt].gain *
                  steering_vector(rx, propagation_direction(s.outgoing[0][nr].arrival)) *
                  steering_vector(tx, propagation_direction(s.incident[0][nt].departure)).adjoint();
    }
  }
  CHECK((H - expected).norm() < 1e-12 * expected.norm());
}

TEST_CASE("a surface with no feeding paths contributes nothing") {
  const WaveSpec wave(1.0);
  const Codebook cb({TransmissionMode(0.0, 0.0, 0.0)});
  ChannelScenario s = make_skeleton({single_antenna()}, {single_antenna()},
                                    IrsLayout({TileSpec(2.0, 2.0, 0.5)}, wave), cb);
  s.direct[0][0].push_back({AnglePair(0.0, 0.0), AnglePair(0.0, 0.0), Complex(2.0, 1.0)});
  // Tiles exist but no incident paths reach them.
  const Eigen::MatrixXcd H = end_to_end_matrix(0, 0, ModeSelection{{0}}, s);
  CHECK(rel_err(H(0, 0), Complex(2.0, 1.0)) < 1e-15);
}

TEST_CASE("apply_channel at zero noise is the exact linear map") {
  const WaveSpec wave(1.0);
  const Codebook cb({TransmissionMode(0.0, 0.0, 0.0)});
  const ArrayGeometry tx({Vec3{0.0, 0.0, 0.0}, Vec3{0.5, 0.0, 0.0}});
  ChannelScenario s = make_skeleton({tx, tx}, {single_antenna()}, IrsLayout({}, wave), cb);
  s.direct[0][0].push_back({AnglePair(0.4, 0.3), AnglePair(0.9, 2.0), Complex(0.8, -0.1)});
  s.direct[0][1].push_back({AnglePair(1.0, 1.3), AnglePair(0.3, 1.0), Complex(0.2, 0.4)});

  std::vector<Eigen::VectorXcd> x(2);
  x[0] = Eigen::VectorXcd(2);
  x[0] << Complex(1.0, 0.0), Complex(0.0, -1.0);
  x[1] = Eigen::VectorXcd(2);
  x[1] << Complex(0.5, 0.5), Complex(-0.25, 0.0);

  const ModeSelection sel{{}};
  const auto y = apply_channel(sel, s, x);
  REQUIRE(y.size() == 1);
  const Eigen::VectorXcd expected = end_to_end_matrix(0, 0, sel, s) * x[0] +
                                    end_to_end_matrix(0, 1, sel, s) * x[1];
  CHECK((y[0] - expected).norm() < 1e-14 * expected.norm());

  // Scaling the excitation scales the output exactly (zero noise).
  std::vector<Eigen::VectorXcd> x2 = {2.0 * x[0], 2.0 * x[1]};
  const auto y2 = apply_channel(sel, s, x2);
  CHECK((y2[0] - 2.0 * y[0]).norm() < 1e-14 * y[0].norm());

  CHECK_THROWS_AS(apply_channel(sel, s, {x[0]}), std::domain_error);
  std::vector<Eigen::VectorXcd> wrong_len = {x[0], Eigen::VectorXcd::Zero(3)};
  CHECK_THROWS_AS(apply_channel(sel, s, wrong_len), std::domain_error);
}

TEST_CASE("apply_channel noise is keyed, not call-ordered") {
  const WaveSpec wave(1.0);
  const Codebook cb({TransmissionMode(0.0, 0.0, 0.0)});
  const ArrayGeometry rx({Vec3{0.0, 0.0, 0.0}, Vec3{0.5, 0.0, 0.0}});
  ChannelScenario s = make_skeleton({single_antenna()}, {rx, rx}, IrsLayout({}, wave), cb);
  s.noise_variance = 0.09;
  s.rng_seed = 42;

  std::vector<Eigen::VectorXcd> x = {Eigen::VectorXcd::Zero(1)};
  const ModeSelection sel{{}};
  const auto a = apply_channel(sel, s, x, 7);
  const auto b = apply_channel(sel, s, x, 7);
  REQUIRE(a.size() == 2);
  // Bit-identical across calls.
  CHECK((a[0] - b[0]).norm() == 0.0);
  CHECK((a[1] - b[1]).norm() == 0.0);
  // Receivers and realizations address distinct streams.
  CHECK((a[0] - a[1]).norm() > 1e-3);
  const auto c = apply_channel(sel, s, x, 8);
  CHECK((a[0] - c[0]).norm() > 1e-3);
  auto reseeded = s;
  reseeded.rng_seed = 43;
  const auto d = apply_channel(sel, reseeded, x, 7);
  CHECK((a[0] - d[0]).norm() > 1e-3);
}

TEST_CASE("apply_channel noise matches the configured variance") {
  const WaveSpec wave(1.0);
  const Codebook cb({TransmissionMode(0.0, 0.0, 0.0)});
  const ArrayGeometry rx({Vec3{0.0, 0.0, 0.0}, Vec3{0.5, 0.0, 0.0}});
  ChannelScenario s = make_skeleton({single_antenna()}, {rx}, IrsLayout({}, wave), cb);
  s.noise_variance = 0.09;
  s.rng_seed = 1234;

  std::vector<Eigen::VectorXcd> x = {Eigen::VectorXcd::Zero(1)};
  const ModeSelection sel{{}};
  double power = 0.0;
  Complex mean(0.0, 0.0);
  const int realizations = 50000;
  for (int rlz = 0; rlz < realizations; ++rlz) {
    const auto y = apply_channel(sel, s, x, static_cast<std::uint64_t>(rlz));
    power += y[0].squaredNorm();
    mean += y[0](0) + y[0](1);
  }
  const double samples = 2.0 * realizations;
  const double var_estimate = power / samples;
  CHECK(std::abs(var_estimate - 0.09) / 0.09 < 0.02);
  CHECK(std::abs(mean / samples) < 0.01);
}

TEST_CASE("link budget ratio, required area, and cell counts") {
  const WaveSpec wave = WaveSpec::from_frequency(5e9);
  const double area = required_irs_area(200.0, 100.0, 100.0, wave);
  CHECK(area == doctest::Approx(wave.lambda * 50.0).epsilon(1e-15));
  CHECK(link_budget_ratio(200.0, 100.0, 100.0, area, wave) == doctest::Approx(1.0).epsilon(1e-12));
  // Quadratic in the aperture area.
  CHECK(link_budget_ratio(200.0, 100.0, 100.0, 2.0 * area, wave) ==
        doctest::Approx(4.0).epsilon(1e-12));

  // Half-wavelength cells: the matched aperture needs 4 * area / lambda^2
  // cells, about 3.3e3 at 5 GHz for the 200/100/100 m geometry.
  const double cells = 4.0 * area / (wave.lambda * wave.lambda);
  CHECK(cells == doctest::Approx(3335.64095198152).epsilon(1e-10));

  // Doubling the carrier frequency doubles the matched cell count.
  const WaveSpec wave2 = WaveSpec::from_frequency(10e9);
  const double cells2 =
      4.0 * required_irs_area(200.0, 100.0, 100.0, wave2) / (wave2.lambda * wave2.lambda);
  CHECK(cells2 == doctest::Approx(2.0 * cells).epsilon(1e-12));

  CHECK(free_space_gain(10.0) == doctest::Approx(1.0 / (std::sqrt(4.0 * kPi) * 10.0)).epsilon(1e-15));
  CHECK_THROWS_AS(link_budget_ratio(0.0, 1.0, 1.0, 1.0, wave), std::domain_error);
  CHECK_THROWS_AS(required_irs_area(1.0, -1.0, 1.0, wave), std::domain_error);
  CHECK_THROWS_AS(free_space_gain(0.0), std::domain_error);
}
