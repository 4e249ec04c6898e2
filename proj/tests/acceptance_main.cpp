// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "negcurv/catalog.hpp"
#include "negcurv/curvature.hpp"
#include "negcurv/errors.hpp"
#include "negcurv/heintze.hpp"
#include "negcurv/lie_algebra.hpp"
#include "negcurv/minkowski.hpp"
#include "negcurv/rng.hpp"
#include "negcurv/submersion.hpp"
#include "support.hpp"

using namespace negcurv;
using negcurv::testing::matrix_with_real_parts;
using negcurv::testing::random_randers;
using negcurv::testing::random_solvable;
using negcurv::testing::random_spd;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Eigen::VectorXd unit(int n, int i) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v[i] = 1.0;
  return v;
}

LeftInvariantMetric orthonormal(const std::string& name) {
  const StructureConstants& g = catalog_entry(name).algebra;
  return LeftInvariantMetric(
      g, MinkowskiNorm::riemannian(Eigen::MatrixXd::Identity(g.dim(), g.dim())));
}

std::vector<std::complex<double>> graded_union(const std::vector<Spectrum>& graded) {
  std::vector<std::complex<double>> all;
  for (const auto& s : graded) all.insert(all.end(), s.values.begin(), s.values.end());
  return all;
}

// ---- criterion 1: catalog verdicts under one second -----------------------

Outcome criterion_catalog() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool pass = true;
  for (const auto& entry : catalog()) {
    const HeintzeVerdict v = check_heintze(entry.algebra);
    const bool holds = v.verdict_item2 && v.verdict_item3;
    if (holds != entry.expected_heintze) {
      pass = false;
      detail << entry.name << " expected " << entry.expected_heintze << " got " << holds << "; ";
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 1.0) {
    pass = false;
    detail << "runtime " << seconds << "s exceeds 1s; ";
  }
  detail << "9 algebras in " << seconds << "s";
  return {pass, detail.str()};
}

// ---- criterion 2: item (2) == item (3) -------------------------------------

Outcome criterion_item_equivalence() {
  Rng rng(1001);
  int disagreements = 0, tested = 0;
  for (const auto& entry : catalog()) {
    const HeintzeVerdict v = check_heintze(entry.algebra);
    if (v.verdict_item2 != v.verdict_item3) ++disagreements;
    ++tested;
  }
  for (int i = 0; i < 50; ++i) {
    const StructureConstants g = random_solvable(rng, i);
    if (!validate(g).passed() || !is_solvable(g)) return {false, "random generator broke"};
    const HeintzeVerdict v = check_heintze(g);
    if (v.verdict_item2 != v.verdict_item3) ++disagreements;
    ++tested;
  }
  std::ostringstream detail;
  detail << tested << " algebras, " << disagreements << " disagreements";
  return {disagreements == 0, detail.str()};
}

// ---- criterion 3: graded spectra union the full spectrum -------------------

Outcome criterion_spectrum_union() {
  Rng rng(1002);
  int tested = 0, failures = 0;
  const auto check = [&](const StructureConstants& g) {
    const HeintzeVerdict v = check_heintze(g);
    if (!v.codim_ok) return;
    ++tested;
    if (!multisets_match(graded_union(v.spectra_graded), v.spectrum_full.values, 1e-6))
      ++failures;
  };
  for (const auto& entry : catalog()) check(entry.algebra);
  for (int i = 0; i < 50; ++i) check(random_solvable(rng, i));
  std::ostringstream detail;
  detail << tested << " codim-ok algebras, " << failures << " union mismatches";
  return {tested > 0 && failures == 0, detail.str()};
}

// ---- criterion 4: growth classification equals the sign test ---------------

Outcome criterion_growth() {
  Rng rng(1003);
  int agreements = 0;
  const int total = 100;
  for (int trial = 0; trial < total; ++trial) {
    const bool positive = trial % 2 == 0;
    std::vector<double> reals = {rng.uniform(0.5, 1.0), rng.uniform(0.1, 1.0),
                                 rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)};
    if (!positive)
      for (double& r : reals) r = -r;
    const Eigen::MatrixXd a = matrix_with_real_parts(rng, reals);
    const GrowthClassification c = classify_growth(LinearEndomorphism{a}, rng.sphere(4));
    const bool agrees =
        positive ? c.kind == GrowthKind::Unbounded : c.kind == GrowthKind::Bounded;
    if (agrees) ++agreements;
  }
  std::ostringstream detail;
  detail << agreements << "/" << total << " agree with the sign test";
  return {agreements == total, detail.str()};
}

// ---- criterion 5: formula vs oracle on riemannian flags --------------------

Outcome criterion_riemannian_agreement() {
  Rng rng(1004);
  int flags = 0;
  double worst = 0.0;

  const auto compare = [&](const LeftInvariantMetric& m, const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v) {
    const CurvatureReport r = flag_curvature(m, FlagSpec{u, v});
    const double oracle = riemannian_sectional(m, u, v);
    worst = std::max(worst, std::abs(r.value - oracle) / (1.0 + std::abs(r.value)));
    ++flags;
  };

  int pairs_done = 0;

  // abelian2: every independent pair qualifies
  const std::vector<Eigen::MatrixXd> abelian_metrics = {
      Eigen::MatrixXd::Identity(2, 2), Eigen::Vector2d(1.0, 2.0).asDiagonal().toDenseMatrix(),
      random_spd(rng, 2)};
  for (const auto& a : abelian_metrics) {
    const LeftInvariantMetric m(catalog_entry("abelian2").algebra, MinkowskiNorm::riemannian(a));
    int done = 0;
    while (done < 50) {
      const Eigen::VectorXd u = rng.sphere(2);
      Eigen::VectorXd v = rng.sphere(2);
      if (std::abs(u[0] * v[1] - u[1] * v[0]) < 1e-2) continue;
      compare(m, u, v);
      ++done;
    }
    ++pairs_done;
  }

  // rot3: plane flags for plane-isotropic metrics, axis poles otherwise
  const StructureConstants& rot3 = catalog_entry("rot3").algebra;
  const std::vector<Eigen::Vector3d> diags = {{1.0, 1.0, 1.0}, {1.0, 2.0, 2.0}, {1.0, 1.0, 2.0}};
  for (const auto& d : diags) {
    const LeftInvariantMetric m(rot3, MinkowskiNorm::riemannian(d.asDiagonal()));
    const bool isotropic = d[1] == d[2];
    int done = 0;
    while (done < 50) {
      Eigen::VectorXd u = Eigen::VectorXd::Zero(3), v = Eigen::VectorXd::Zero(3);
      if (isotropic) {
        u.tail(2) = rng.sphere(2);
      } else {
        u = unit(3, 1 + done % 2) * rng.uniform(0.5, 2.0);
      }
      v.tail(2) = rng.sphere(2);
      if (std::abs(u[1] * v[2] - u[2] * v[1]) < 1e-2) continue;
      compare(m, u, v);
      ++done;
    }
    ++pairs_done;
  }

  std::ostringstream detail;
  detail << pairs_done << " algebra-metric pairs, " << flags << " flags, worst relative gap "
         << worst;
  return {pairs_done == 6 && flags >= 300 && worst <= 1e-6, detail.str()};
}

// ---- criterion 6: constant-curvature targets --------------------------------

Outcome criterion_constant_curvature() {
  std::ostringstream detail;
  bool pass = true;

  const double axb = riemannian_sectional(orthonormal("axb"), unit(2, 0), unit(2, 1));
  if (std::abs(axb + 1.0) > 1e-8) {
    pass = false;
    detail << "axb K=" << axb << "; ";
  }

  Rng rng(1005);
  for (int n = 3; n <= 6; ++n) {
    const LeftInvariantMetric m = orthonormal("rh" + std::to_string(n));
    double worst = 0.0;
    int planes = 0;
    while (planes < 50) {
      const Eigen::VectorXd x = rng.sphere(n);
      Eigen::VectorXd y = rng.sphere(n);
      y -= x * x.dot(y);
      if (y.norm() < 1e-6) continue;
      worst = std::max(worst, std::abs(riemannian_sectional(m, x, y) + 1.0));
      ++planes;
    }
    if (worst > 1e-7) {
      pass = false;
      detail << "rh" << n << " worst |K+1|=" << worst << "; ";
    }
  }

  const ScanSummary heis4 = scan_flags(orthonormal("heintze_heis4"), 500, 2024);
  if (heis4.accepted != 500 || !(heis4.max_value < 0.0)) {
    pass = false;
    detail << "heintze_heis4 max K=" << heis4.max_value << "; ";
  }
  detail << "axb K=-1, rh3..rh6 constant, heis4 range [" << heis4.min_value << ", "
         << heis4.max_value << "]";
  return {pass, detail.str()};
}

// ---- criterion 7: formula non-negativity ------------------------------------

Outcome criterion_nonnegativity() {
  Rng rng(1006);
  int evaluated = 0;
  double min_seen = 0.0;

  const auto feed = [&](const LeftInvariantMetric& m, const FlagSpec& flag) {
    const CurvatureReport r = flag_curvature(m, flag);
    min_seen = std::min(min_seen, r.value);
    ++evaluated;
  };

  // abelian2 under three metrics: all pairs qualify
  const std::vector<Eigen::MatrixXd> abelian_metrics = {
      Eigen::MatrixXd::Identity(2, 2), Eigen::Vector2d(1.0, 3.0).asDiagonal().toDenseMatrix(),
      random_spd(rng, 2)};
  for (const auto& a : abelian_metrics) {
    const LeftInvariantMetric m(catalog_entry("abelian2").algebra, MinkowskiNorm::riemannian(a));
    int fed = 0;
    while (fed < 1334) {
      const Eigen::VectorXd u = rng.sphere(2), v = rng.sphere(2);
      if (std::abs(u[0] * v[1] - u[1] * v[0]) < 1e-2) continue;
      feed(m, FlagSpec{u, v});
      ++fed;
    }
  }

  // rot3 euclidean and plane-isotropic flags
  const StructureConstants& rot3 = catalog_entry("rot3").algebra;
  for (const Eigen::Vector3d d : {Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(1, 2, 2)}) {
    const LeftInvariantMetric m(rot3, MinkowskiNorm::riemannian(d.asDiagonal()));
    int fed = 0;
    while (fed < 1000) {
      Eigen::VectorXd u = Eigen::VectorXd::Zero(3), v = Eigen::VectorXd::Zero(3);
      u.tail(2) = rng.sphere(2);
      v.tail(2) = rng.sphere(2);
      if (std::abs(u[1] * v[2] - u[2] * v[1]) < 1e-2) continue;
      feed(m, FlagSpec{u, v});
      ++fed;
    }
  }

  // rot3 anisotropic axis poles
  {
    Eigen::MatrixXd q = Eigen::Vector3d(1.0, 1.0, 2.0).asDiagonal();
    const LeftInvariantMetric m(rot3, MinkowskiNorm::riemannian(q));
    int fed = 0;
    while (fed < 1000) {
      const Eigen::VectorXd u = unit(3, 1 + fed % 2) * rng.uniform(0.5, 2.0);
      Eigen::VectorXd v = Eigen::VectorXd::Zero(3);
      v.tail(2) = rng.sphere(2);
      if (std::abs(v[2 - fed % 2]) < 1e-2) continue;
      feed(m, FlagSpec{u, v});
      ++fed;
    }
  }

  // heisenberg3: plane poles against the center, euclidean and randers
  const StructureConstants& heis = catalog_entry("heisenberg3").algebra;
  Eigen::VectorXd b3(3);
  b3 << 0.3, 0.0, 0.0;
  const std::vector<MinkowskiNorm> heis_norms = {
      MinkowskiNorm::riemannian(Eigen::MatrixXd::Identity(3, 3)),
      MinkowskiNorm::randers(Eigen::MatrixXd::Identity(3, 3), b3)};
  for (const auto& f : heis_norms) {
    const LeftInvariantMetric m(heis, f);
    for (int t = 0; t < 1500; ++t) {
      Eigen::VectorXd u = Eigen::VectorXd::Zero(3);
      u.head(2) = rng.sphere(2);
      feed(m, FlagSpec{u, unit(3, 2)});
    }
  }

  std::ostringstream detail;
  detail << evaluated << " evaluations, min K " << min_seen;
  return {evaluated >= 10000 && min_seen >= -1e-12, detail.str()};
}

// ---- criterion 8: witness soundness -----------------------------------------

Outcome criterion_witness() {
  Rng rng(1007);
  std::ostringstream detail;
  bool pass = true;

  for (const auto* name : {"rot3", "abelian2", "heisenberg3"}) {
    const StructureConstants& g = catalog_entry(name).algebra;
    const int n = g.dim();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    b[0] = 0.25;
    const std::vector<MinkowskiNorm> metrics = {
        MinkowskiNorm::riemannian(Eigen::MatrixXd::Identity(n, n)),
        MinkowskiNorm::riemannian(random_spd(rng, n)),
        MinkowskiNorm::randers(Eigen::MatrixXd::Identity(n, n), b)};
    int metric_index = 0;
    for (const auto& f : metrics) {
      const LeftInvariantMetric m(g, f);
      const auto w = witness_nonnegative(m);
      if (!w || w->report.value < -1e-12) {
        pass = false;
        detail << name << " metric#" << metric_index << " missing witness; ";
      }
      ++metric_index;
    }
  }

  for (const auto* name : {"axb", "rh3", "rh4", "rh5", "rh6", "heintze_heis4"}) {
    const auto w = witness_nonnegative(orthonormal(name), 42, 300);
    if (w) {
      pass = false;
      detail << name << " unexpectedly produced K=" << w->report.value << "; ";
    }
  }

  detail << "9 witness-positive runs, 6 witness-free runs";
  return {pass, detail.str()};
}

// ---- criterion 9: submersion suite -------------------------------------------

Outcome criterion_submersion() {
  std::ostringstream detail;
  bool pass = true;

  Eigen::VectorXd b(2);
  b << 0.0, 0.6;
  const MinkowskiNorm rd = MinkowskiNorm::randers(Eigen::MatrixXd::Identity(2, 2), b);
  Eigen::MatrixXd proj(1, 2);
  proj << 1.0, 0.0;
  const LinearSubmersion l(proj);
  Eigen::VectorXd one(1);
  one << 1.0;

  const double induced = induced_norm(rd, l, one);
  if (std::abs(induced - 0.8) > 1e-7) {
    pass = false;
    detail << "induced norm " << induced << "; ";
  }

  Rng rng(1008);
  const HorizontalLift reference = horizontal_lift(rd, l, one);
  for (int restart = 0; restart < 10; ++restart) {
    const Eigen::VectorXd start = 10.0 * rng.gaussian(1);
    const HorizontalLift h = horizontal_lift(rd, l, one, {}, start);
    if ((h.lift - reference.lift).norm() > 1e-6) {
      pass = false;
      detail << "restart " << restart << " drifted; ";
    }
  }

  const IsometryReport iso = isometry_check(rd, l, one, 100);
  if (iso.max_discrepancy > 1e-5) {
    pass = false;
    detail << "isometry discrepancy " << iso.max_discrepancy << "; ";
  }

  detail << "induced " << induced << ", 10 restarts agree, isometry gap " << iso.max_discrepancy;
  return {pass, detail.str()};
}

// ---- criterion 10: minkowski axioms ------------------------------------------

Outcome criterion_minkowski() {
  Rng rng(1009);
  std::ostringstream detail;
  bool pass = true;

  const MinkowskiNorm riem = MinkowskiNorm::riemannian(random_spd(rng, 3));
  const MinkowskiNorm rand = random_randers(rng, 3);
  const MinkowskiNorm wrapped =
      MinkowskiNorm::custom(3, [rand](const Eigen::VectorXd& y) { return rand(y); });

  double worst_euler = 0.0;
  for (const MinkowskiNorm* f : {&riem, &rand, &wrapped}) {
    for (int t = 0; t < 100; ++t) {
      const Eigen::VectorXd y = rng.sphere(3) * rng.uniform(0.5, 2.0);
      const double fy = (*f)(y);
      const FundamentalTensor g = fundamental_tensor(*f, y);
      worst_euler = std::max(worst_euler, std::abs(y.dot(g.G * y) - fy * fy) / (fy * fy));
    }
  }
  if (worst_euler > 1e-7) {
    pass = false;
    detail << "Euler identity gap " << worst_euler << "; ";
  }

  double worst_fd = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Eigen::VectorXd y = rng.sphere(3) * rng.uniform(0.5, 2.0);
    const Eigen::MatrixXd closed = fundamental_tensor(rand, y).G;
    const Eigen::MatrixXd fd = fundamental_tensor(wrapped, y).G;
    worst_fd = std::max(worst_fd, (closed - fd).cwiseAbs().maxCoeff());
  }
  if (worst_fd > 1e-5) {
    pass = false;
    detail << "closed-vs-FD gap " << worst_fd << "; ";
  }

  detail << "Euler gap " << worst_euler << ", closed-vs-FD gap " << worst_fd;
  return {pass, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"criterion 1 (catalog verdicts)", criterion_catalog},
      {"criterion 2 (item 2 = item 3)", criterion_item_equivalence},
      {"criterion 3 (spectrum union)", criterion_spectrum_union},
      {"criterion 4 (growth equivalence)", criterion_growth},
      {"criterion 5 (riemannian cross-validation)", criterion_riemannian_agreement},
      {"criterion 6 (constant curvature)", criterion_constant_curvature},
      {"criterion 7 (formula non-negativity)", criterion_nonnegativity},
      {"criterion 8 (witness soundness)", criterion_witness},
      {"criterion 9 (submersion suite)", criterion_submersion},
      {"criterion 10 (minkowski axioms)", criterion_minkowski},
  };

  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, fn] : criteria) {
    Outcome outcome{false, "threw"};
    try {
      outcome = fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %s — %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), seconds);
  return failures == 0 ? 0 : 1;
}
