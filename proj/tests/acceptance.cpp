// One PASS/FAIL line per acceptance criterion, with wall-clock timings.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "veronese/parse.hpp"
#include "veronese/random_curve.hpp"
#include "veronese/resolution.hpp"
#include "veronese/verify.hpp"
#include "veronese/veronese_map.hpp"

using namespace veronese;
namespace fs = std::filesystem;

namespace {

constexpr std::uint32_t kPrime = 32003;
constexpr std::uint32_t kSecondPrime = 65521;
constexpr int kCurvesPerDegree = 5;
constexpr int kLiftSamples = 200;
constexpr int kMutationsPerDifferential = 10;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int m_of(int d) { return d % 2 == 0 ? d / 2 : (d + 1) / 2; }

std::int64_t hilbert_formula(int d, int n) {
  auto c2 = [](std::int64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; };
  return c2(2 * n + 2) - (2 * n < d ? 0 : c2(2 * n - d + 2));
}

// Betti table from the twist lists of the two curve families, merged by degree.
BettiTable expected_betti(int d) {
  const int m = m_of(d);
  BettiTable b;
  b.add(0, 0);
  b.add(1, 2, 6);
  b.add(2, 3, 8);
  b.add(3, 4, 3);
  if (d % 2 == 0) {
    b.add(1, m, 1);
    b.add(2, m + 2, 6);
    b.add(3, m + 3, 8);
    b.add(4, m + 4, 3);
  } else {
    b.add(1, m, 3);
    b.add(2, m + 1, 8);
    b.add(3, m + 2, 6);
    b.add(4, m + 4, 1);
  }
  return b;
}

void check_structure(const ResolutionComplex& c, Outcome& out, const std::string& tag) {
  if (auto r = check_complex(c); !r.pass) out.fail(tag + ": " + r.message);
  if (auto r = check_minimal(c); !r.pass) out.fail(tag + ": " + r.message);
  for (std::size_t i = 1; i <= c.length(); ++i) {
    try {
      c.d(i).validate();
    } catch (const std::exception& e) {
      out.fail(tag + ": " + e.what());
    }
  }
}

Outcome criterion_veronese() {
  Outcome out;
  ResolutionComplex c = veronese_complex();
  if (!(betti_table(c) == BettiTable{{{0, 0}, 1}, {{1, 2}, 6}, {{2, 3}, 8}, {{3, 4}, 3}}))
    out.fail("Betti table " + betti_table(c).to_string());
  check_structure(c, out, "veronese");
  ExactnessReport r = graded_exactness(c, 8, kPrime);
  if (!r.exact()) out.fail(*r.first_failure());
  out.detail = out.pass ? "betti 1,6,8,3; d1d2 = d2d3 = 0; minimal; exact for n <= 8 over F_32003" : out.detail;
  return out;
}

Outcome criterion_family(std::initializer_list<int> degrees) {
  Outcome out;
  int built = 0;
  for (int d : degrees) {
    const int m = m_of(d);
    for (int k = 0; k < kCurvesPerDegree; ++k) {
      const Polynomial f = random_curve(d, 100 * static_cast<std::uint64_t>(d) + k);
      const std::string tag = "d=" + std::to_string(d) + " seed " + std::to_string(100 * d + k);
      ResolutionComplex c = build_resolution(f);
      ++built;
      if (d % 2 == 0) {
        if (theta(lift_even(f).F) != f) out.fail(tag + ": theta(F) != f");
      } else {
        OddLift lift = lift_odd(f);
        for (std::size_t n = 0; n < 3; ++n)
          if (theta(lift.F[n]) != Polynomial::variable(Ring::Curve, f.field(), n) * f)
            out.fail(tag + ": theta(F_n) != x_n f");
      }
      if (!theta_vanishing_check(c).pass) out.fail(tag + ": theta vanishing");
      check_structure(c, out, tag);
      if (!(betti_table(c) == expected_betti(d))) out.fail(tag + ": Betti table " + betti_table(c).to_string());
      if (d == 3 && !(betti_table(c) == BettiTable{{{0, 0}, 1}, {{1, 2}, 9}, {{2, 3}, 16}, {{3, 4}, 9}, {{4, 6}, 1}}))
        out.fail(tag + ": merged cubic Betti table");
      for (int n = 0; n <= m + 6; ++n)
        if (hilbert_from_resolution(c, n) != hilbert_formula(d, n))
          out.fail(tag + ": Hilbert function differs at n = " + std::to_string(n));
      for (std::uint32_t p : {kPrime, kSecondPrime}) {
        ExactnessReport r = graded_exactness(c, m + 6, p);
        if (!r.exact()) out.fail(tag + " over F_" + std::to_string(p) + ": " + *r.first_failure());
      }
    }
  }
  if (out.pass)
    out.detail = std::to_string(built) + " curves: lifts, d d = 0, minimal, Betti, Hilbert, exact for n <= m + 6 "
                 "over F_32003 and F_65521";
  return out;
}

Outcome criterion_oracle() {
  Outcome out;
  int slices = 0;
  for (int d = 2; d <= 7; ++d) {
    ResolutionComplex c = build_resolution(random_curve(d, 900 + static_cast<std::uint64_t>(d)));
    for (int n = 0; n <= m_of(d) + 3; ++n) {
      SpanComparison s = compare_with_oracle(c, n, kPrime);
      ++slices;
      if (!s.pass())
        out.fail("d=" + std::to_string(d) + " n=" + std::to_string(n) + ": oracle " + std::to_string(s.oracle_dim) +
                 ", image " + std::to_string(s.image_dim) + ", stacked " + std::to_string(s.stacked_rank));
    }
  }
  if (out.pass) out.detail = std::to_string(slices) + " degree slices: span of d_2 equals the oracle syzygies";
  return out;
}

Outcome criterion_lifts() {
  Outcome out;
  for (int d = 2; d <= 8; ++d) {
    for (int k = 0; k < kLiftSamples; ++k) {
      const Polynomial f = random_curve(d, 5000 + 1000 * static_cast<std::uint64_t>(d) + k);
      if (d % 2 == 0) {
        if (theta(lift_even(f).F) != f) out.fail("even lift fails for " + render(f));
      } else {
        OddLift lift = lift_odd(f);
        for (std::size_t n = 0; n < 3; ++n)
          if (theta(lift.F[n]) != Polynomial::variable(Ring::Curve, f.field(), n) * f)
            out.fail("odd lift fails for " + render(f));
      }
    }
  }
  if (out.pass) out.detail = std::to_string(7 * kLiftSamples) + " curves, degrees 2..8, exact equality";
  return out;
}

Outcome criterion_mutations() {
  Outcome out;
  int flips = 0;
  for (const char* text : {"x0^3 + x1^3 + x2^3", "x0^4 + x1^4 + x2^4"}) {
    const Polynomial f = parse_poly(text, Ring::Curve, Field::rationals());
    const ResolutionComplex reference = build_resolution(f);
    const int n_max = m_of(curve_degree(f)) + 4;
    std::mt19937_64 rng(curve_degree(f));
    for (std::size_t i = 1; i <= reference.length(); ++i) {
      std::vector<std::pair<std::size_t, std::size_t>> nonzero;
      const auto& e = reference.d(i).entries;
      for (std::size_t r = 0; r < e.rows(); ++r)
        for (std::size_t col = 0; col < e.cols(); ++col)
          if (!e(r, col).is_zero()) nonzero.emplace_back(r, col);
      for (std::size_t k = 0; k + 1 < nonzero.size(); ++k)
        std::swap(nonzero[k], nonzero[k + rng() % (nonzero.size() - k)]);
      nonzero.resize(std::min<std::size_t>(nonzero.size(), kMutationsPerDifferential));
      for (auto [r, col] : nonzero) {
        ResolutionComplex mutated = reference;
        mutated.d(i).entries(r, col) = -mutated.d(i).entries(r, col);
        ++flips;
        if (!check_complex(mutated).pass) continue;
        if (!graded_exactness(mutated, n_max, kPrime).exact()) continue;
        out.fail(std::string(text) + ": sign flip of d_" + std::to_string(i) + "(" + std::to_string(r) + ", " +
                 std::to_string(col) + ") went unnoticed");
      }
    }
  }
  if (out.pass) out.detail = std::to_string(flips) + " single-entry sign flips, all detected";
  return out;
}

int run_cli(const std::string& args) {
  const std::string command = std::string(VERONESE_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion_cli() {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / ("veronese_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream(dir / name) << content;
    return (dir / name).string();
  };
  for (const char* f : {"x0^3 + x1^3 + x2^3", "x0^4 + x1^4 + x2^4"}) {
    const std::string curve = write("curve.txt", f);
    const std::string complex = (dir / "complex.json").string();
    if (int code = run_cli("resolve --input " + curve + " --out " + complex); code != 0)
      out.fail(std::string("resolve ") + f + " exited " + std::to_string(code));
    if (int code = run_cli("verify --input " + complex); code != 0)
      out.fail(std::string("verify ") + f + " exited " + std::to_string(code));
  }
  if (int code = run_cli("verify --input " + write("bad.json", "{\"format\": 1, \"field\": ")); code != 2)
    out.fail("malformed JSON exited " + std::to_string(code));
  if (int code = run_cli("resolve --input " + write("bad.txt", "x0^2 + * x1")); code != 2)
    out.fail("malformed curve exited " + std::to_string(code));
  if (int code = run_cli("resolve --input " + write("line.txt", "x0 + x1 + x2")); code != 3)
    out.fail("degree-1 curve exited " + std::to_string(code));
  fs::remove_all(dir);
  if (out.pass) out.detail = "resolve -> verify exit 0 on both Fermat curves; malformed input 2; d = 1 gives 3";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 when the criterion sets no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Veronese surface resolution", 5, criterion_veronese},
      {2, "even-degree family d = 2, 4, 6", 60, [] { return criterion_family({2, 4, 6}); }},
      {3, "odd-degree family d = 3, 5, 7", 90, [] { return criterion_family({3, 5, 7}); }},
      {4, "oracle cross-validation d = 2..7", 0, criterion_oracle},
      {5, "lift round trips d = 2..8", 0, criterion_lifts},
      {6, "mutation sensitivity d = 3, 4", 0, criterion_mutations},
      {7, "CLI end to end", 0, criterion_cli},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "took %.2f s, limit %.0f s", seconds, c.limit_seconds);
      o.fail(buf);
    }
    if (!o.pass) ++failures;
    std::printf("%s [%d] %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
