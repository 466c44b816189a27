#include <doctest.h>

#include <random>

#include "qlin/spectra/gap.hpp"
#include "qlin/spectra/ping_pong.hpp"
#include "qlin/spectra/powers.hpp"
#include "qlin/spectra/projections.hpp"
#include "qlin/spectra/quaternion.hpp"
#include "qlin/spectra/translation.hpp"

using namespace qlin;
using namespace qlin::spectra;

namespace {

std::mt19937 rng(4242);

Eigen::MatrixXd random_unimodular(int d) {
  // Product of elementary shears: determinant exactly 1, moderate entries.
  std::uniform_int_distribution<int> entry(-2, 2);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
  for (int step = 0; step < 6; ++step) {
    int i = std::uniform_int_distribution<int>(0, d - 1)(rng);
    int j = std::uniform_int_distribution<int>(0, d - 1)(rng);
    if (i == j) continue;
    Eigen::MatrixXd e = Eigen::MatrixXd::Identity(d, d);
    e(i, j) = entry(rng);
    m = m * e;
  }
  return m;
}

Eigen::MatrixXd fixture_a() {
  Eigen::MatrixXd a(2, 2);
  a << 5, 3, 3, 2;
  return a;
}

Eigen::MatrixXd fixture_b() {
  Eigen::MatrixXd b(2, 2);
  b << 2, 3, 3, 5;
  return b;
}

constexpr double kTol = 1e-9;

}  // namespace

TEST_CASE("cartan projection") {
  const Eigen::VectorXd id = cartan_projection(Eigen::MatrixXd::Identity(3, 3));
  CHECK(id.cwiseAbs().maxCoeff() < 1e-12);

  Eigen::MatrixXd d(2, 2);
  d << 2, 0, 0, 0.5;
  const Eigen::VectorXd mu = cartan_projection(d);
  CHECK(mu[0] == doctest::Approx(std::log(2)).epsilon(1e-12));
  CHECK(mu[1] == doctest::Approx(-std::log(2)).epsilon(1e-12));

  // g(1) in SL(3) is symmetric: singular values are e, 1, e^{-1}.
  const Eigen::VectorXd g1 = cartan_projection(gt_matrix(1.0, 2));
  CHECK(g1[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(g1[1]) < 1e-12);
  CHECK(g1[2] == doctest::Approx(-1.0).epsilon(1e-12));

  Eigen::MatrixXd sing(2, 2);
  sing << 1, 1, 1, 1;
  CHECK_THROWS_AS(cartan_projection(sing), MathError);
}

TEST_CASE("jordan projection with power cross-check") {
  double consistency = 0.0;
  const Eigen::VectorXd id = jordan_projection(Eigen::MatrixXd::Identity(3, 3), kTol, &consistency);
  CHECK(id.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(consistency < 10 * kTol);

  // Eigenvalues (7 +- 3 sqrt 5)/2 of the fixture hyperbolic element.
  const double s1 = (7.0 + 3.0 * std::sqrt(5.0)) / 2.0;
  const Eigen::VectorXd lam = jordan_projection(fixture_a(), kTol, &consistency);
  CHECK(lam[0] == doctest::Approx(std::log(s1)).epsilon(1e-12));
  CHECK(lam[1] == doctest::Approx(-std::log(s1)).epsilon(1e-12));
  CHECK(consistency < 10 * kTol);

  // Homogeneity: jordan(g^2) = 2 jordan(g).
  const Eigen::VectorXd lam2 = jordan_projection(Eigen::MatrixXd(fixture_a() * fixture_a()));
  CHECK((lam2 - 2.0 * lam).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("spectral data invariants on random samples") {
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::MatrixXd g = random_unimodular(3);
    const SpectralData data = spectral_data(g, 1e-9);

    // mu(g^{-1}) is the negated reverse of mu(g).
    const Eigen::VectorXd inv = cartan_projection(Eigen::MatrixXd(g.inverse()));
    for (int i = 0; i < 3; ++i)
      CHECK(inv[i] == doctest::Approx(-data.sigma[2 - i]).epsilon(1e-7));

    // Dominance: partial sums of lambda below partial sums of sigma.
    double psl = 0, pss = 0;
    for (int i = 0; i < 3; ++i) {
      psl += data.lambda[i];
      pss += data.sigma[i];
      CHECK(psl <= pss + 1e-9);
    }
  }
}

TEST_CASE("anosov gap fit certifies geometric growth") {
  Eigen::MatrixXd d(2, 2);
  d << 2, 0, 0, 0.5;
  const GapFit fit = anosov_gap_fit({d}, 6, 1, kTol);
  // Exact geometric growth: gap(d^j) = 2|j| log 2, so the affine fit is
  // slope 2 log 2 with zero offset.
  CHECK(fit.c == doctest::Approx(2 * std::log(2)).epsilon(1e-9));
  CHECK(std::abs(fit.C) < 1e-9);
  REQUIRE(fit.table.size() == 7);
  CHECK(fit.table[3].min_gap == doctest::Approx(6 * std::log(2)).epsilon(1e-9));

  // The fixture pair is certified positive over the radius-8 ball.
  const GapFit schottky = anosov_gap_fit({fixture_a(), fixture_b()}, 8, 1, kTol);
  CHECK(schottky.c > 0);

  // A parabolic generator grows logarithmically; the fit reports failure.
  Eigen::MatrixXd par(2, 2);
  par << 1, 1, 0, 1;
  const GapFit parfit = anosov_gap_fit({par}, 8, 1, kTol);
  CHECK(parfit.c <= 0);

  CHECK_THROWS_AS(anosov_gap_fit({d}, 1, 1, kTol), ValidationError);
  CHECK_THROWS_AS(anosov_gap_fit({d}, 6, 2, kTol), ValidationError);
  CHECK_THROWS_AS(anosov_gap_fit({}, 6, 1, kTol), ValidationError);
}

TEST_CASE("ping pong certification") {
  Eigen::MatrixXd a(2, 2);
  a << 4, 0, 0, 0.25;
  Eigen::MatrixXd rot(2, 2);
  const double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
  rot << c, -s, s, c;
  const Eigen::MatrixXd b = rot * a * rot.transpose();

  const PingPongResult good = ping_pong_certify(a, b);
  CHECK(good.certified);
  // Returned intervals are pairwise disjoint.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double dist = std::min(
          std::abs(good.intervals[i].center - good.intervals[j].center),
          M_PI - std::abs(good.intervals[i].center - good.intervals[j].center));
      CHECK(dist > good.intervals[i].radius + good.intervals[j].radius);
    }

  CHECK(!ping_pong_certify(a, a).certified);  // shared fixed points

  Eigen::MatrixXd par(2, 2);
  par << 1, 1, 0, 1;
  CHECK(!ping_pong_certify(a, par).certified);  // not hyperbolic

  // The library fixture plays ping-pong; this is the freeness certificate
  // the linearization tests rely on.
  CHECK(ping_pong_certify(fixture_a(), fixture_b()).certified);
}

TEST_CASE("exterior and symmetric powers") {
  Eigen::MatrixXcd d3 = Eigen::MatrixXcd::Zero(3, 3);
  d3(0, 0) = 2.0;
  d3(1, 1) = 3.0;
  d3(2, 2) = 5.0;
  const Eigen::MatrixXcd l2 = exterior_power(d3, 2);
  CHECK(std::abs(l2(0, 0) - std::complex<double>(6)) < 1e-12);   // xy
  CHECK(std::abs(l2(1, 1) - std::complex<double>(10)) < 1e-12);  // xz
  CHECK(std::abs(l2(2, 2) - std::complex<double>(15)) < 1e-12);  // yz

  const Eigen::MatrixXcd lid = exterior_power(Eigen::MatrixXcd::Identity(4, 4), 2);
  CHECK((lid - Eigen::MatrixXcd::Identity(6, 6)).norm() < 1e-12);

  Eigen::MatrixXcd d2 = Eigen::MatrixXcd::Zero(2, 2);
  d2(0, 0) = 2.0;
  d2(1, 1) = 3.0;
  const Eigen::MatrixXcd s2 = symmetric_power(d2, 2);
  CHECK(std::abs(s2(0, 0) - std::complex<double>(4)) < 1e-12);
  CHECK(std::abs(s2(1, 1) - std::complex<double>(6)) < 1e-12);
  CHECK(std::abs(s2(2, 2) - std::complex<double>(9)) < 1e-12);

  CHECK_THROWS_AS(exterior_power(d3, 4), ValidationError);

  // Multiplicativity on random pairs in SL(3) and SL(4).
  for (int d : {3, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::MatrixXcd g = random_unimodular(d).cast<std::complex<double>>();
      const Eigen::MatrixXcd h = random_unimodular(d).cast<std::complex<double>>();
      const Eigen::MatrixXcd gh = g * h;
      for (int p : {2, 3}) {
        CHECK((exterior_power(gh, p) - exterior_power(g, p) * exterior_power(h, p)).norm() <
              1e-9);
        CHECK((symmetric_power(gh, p) - symmetric_power(g, p) * symmetric_power(h, p)).norm() <
              1e-9);
      }
    }
  }
}

TEST_CASE("gt matrix and translation lengths") {
  CHECK((gt_matrix(0.0, 3) - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-12);

  const Eigen::VectorXd lam = jordan_projection(gt_matrix(1.0, 2));
  CHECK(lam[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(lam[1]) < 1e-12);
  CHECK(lam[2] == doctest::Approx(-1.0).epsilon(1e-12));

  // The standard representation recovers the translation length itself.
  for (double t : {0.25, 0.5, 1.0, 2.0}) {
    const TranslationLength l =
        translation_length_via_rep(gt_matrix(t, 2).cast<std::complex<double>>(), kTol);
    CHECK(!l.elliptic);
    CHECK(l.value == doctest::Approx(t).epsilon(1e-9));
  }

  const TranslationLength lid =
      translation_length_via_rep(Eigen::MatrixXcd::Identity(3, 3), kTol);
  CHECK(lid.elliptic);
  CHECK(lid.value == 0.0);
}

TEST_CASE("translation length through exterior and symmetric powers") {
  // For k >= 2 every nontrivial irreducible factor computes the length.
  for (int k : {2, 3}) {
    const int n = k + 1;
    for (double t : {0.25, 0.5, 1.0, 2.0}) {
      const Eigen::MatrixXcd g = gt_matrix(t, k).cast<std::complex<double>>();
      for (int p : {2, 3}) {
        if (p >= n) continue;  // Lambda^n is the determinant: trivial
        const TranslationLength le = translation_length_via_rep(exterior_power(g, p), kTol);
        CHECK(std::abs(le.value - t) < 1e-9);
        const TranslationLength ls = translation_length_via_rep(symmetric_power(g, p), kTol);
        CHECK(std::abs(ls.value - t) < 1e-9);
      }
    }
  }

  // Spot checks named in the interface contract.
  CHECK(std::abs(translation_length_via_rep(
                     exterior_power(gt_matrix(1.0, 2).cast<std::complex<double>>(), 2), kTol)
                     .value -
                 1.0) < 1e-9);
  CHECK(std::abs(translation_length_via_rep(
                     symmetric_power(gt_matrix(0.5, 3).cast<std::complex<double>>(), 3), kTol)
                     .value -
                 0.5) < 1e-9);

  // k = 1 has no unit eigenvalue, so the top gap reads 2t instead of t;
  // recovering the length this way needs k >= 2.
  const Eigen::MatrixXcd g1 = gt_matrix(0.75, 1).cast<std::complex<double>>();
  const TranslationLength l1 = translation_length_via_rep(g1, kTol);
  CHECK(l1.value == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("quaternion embedding") {
  // Algebra homomorphism on random products.
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    QuatMatrix x(2, 2), y(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        x(i, j) = Quaternion(coef(rng), coef(rng), coef(rng), coef(rng));
        y(i, j) = Quaternion(coef(rng), coef(rng), coef(rng), coef(rng));
      }
    CHECK((quat_complex_embed(x * y) - quat_complex_embed(x) * quat_complex_embed(y)).norm() <
          1e-9);
    CHECK((quat_complex_embed(x.conj_transpose()) - quat_complex_embed(x).adjoint()).norm() <
          1e-12);
  }

  // Embedding a real matrix doubles each eigenvalue's multiplicity.
  const QuatMatrix areal = QuatMatrix::from_real(fixture_a());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(quat_complex_embed(areal));
  std::vector<double> mods;
  for (int i = 0; i < 4; ++i) mods.push_back(std::abs(es.eigenvalues()[i]));
  std::sort(mods.begin(), mods.end());
  CHECK(mods[0] == doctest::Approx(mods[1]).epsilon(1e-9));
  CHECK(mods[2] == doctest::Approx(mods[3]).epsilon(1e-9));

  // j * I embeds as a unitary matrix; translation length 0 (elliptic).
  QuatMatrix jscalar = QuatMatrix::identity(2);
  for (int i = 0; i < 2; ++i) jscalar(i, i) = Quaternion(0, 0, 1, 0);
  const Eigen::MatrixXcd je = quat_complex_embed(jscalar);
  CHECK((je * je.adjoint() - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("quaternionic translation lengths and the obstruction witness") {
  for (double t : {0.5, 1.0, 2.0}) {
    const QuatMatrix g = sp_translation(t, 2);
    CHECK(j_form_residual(g) < 1e-12);
    const TranslationLength l = translation_length_quat(g, kTol);
    CHECK(!l.elliptic);
    CHECK(l.value == doctest::Approx(t).epsilon(1e-9));
  }

  // Unit quaternion scalar: elliptic, length 0.
  QuatMatrix jscalar = QuatMatrix::identity(3);
  for (int i = 0; i < 3; ++i) jscalar(i, i) = Quaternion(0, 0, 1, 0);
  const TranslationLength lj = translation_length_quat(jscalar, kTol);
  CHECK(lj.elliptic);
  CHECK(lj.value == 0.0);

  // A matrix violating the form is rejected.
  QuatMatrix bad = QuatMatrix::identity(3);
  bad(0, 0) = Quaternion(2);
  CHECK_THROWS_AS(translation_length_quat(bad, kTol), MathError);

  const ObstructionReport rep =
      obstruction_witness(sp_translation(1.0, 2), sp_translation(2.0, 2), kTol);
  CHECK(rep.verdict == Obstruction::obstructed);
  CHECK(rep.length1 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.length2 == doctest::Approx(2.0).epsilon(1e-9));

  // Conjugation preserves translation length: inconclusive.
  Eigen::MatrixXd rot = Eigen::MatrixXd::Identity(3, 3);
  const double c = std::cos(0.7), s = std::sin(0.7);
  rot(0, 0) = c;
  rot(0, 1) = -s;
  rot(1, 0) = s;
  rot(1, 1) = c;
  const QuatMatrix h = QuatMatrix::from_real(rot);
  const QuatMatrix conj = h * sp_translation(1.0, 2) * QuatMatrix::from_real(rot.transpose());
  const ObstructionReport same = obstruction_witness(sp_translation(1.0, 2), conj, kTol);
  CHECK(same.verdict == Obstruction::inconclusive);

  // Difference inside tolerance: inconclusive.
  const ObstructionReport close =
      obstruction_witness(sp_translation(1.0, 2), sp_translation(1.0 + 1e-12, 2), kTol);
  CHECK(close.verdict == Obstruction::inconclusive);
}
