// Acceptance gate: one [PASS]/[FAIL] line per criterion with its runtime
// against a pinned limit. All comparisons are exact (integer or rational),
// so there is no numeric tolerance. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chirality/dga/minimal_model.hpp"
#include "chirality/groups/metacyclic.hpp"
#include "chirality/lens/lens.hpp"
#include "chirality/products/planner.hpp"
#include "chirality/torus/mapping_torus.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace chirality;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit_s) o.require(false, "runtime limit exceeded");
  failures += !o.ok;
  std::printf("[%s] %d %s (%.3f s, limit %.0f s, exact)%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), secs,
              limit_s, o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::uint64_t scan_progression(unsigned k) {
  for (std::uint64_t p = 5;; ++p) {
    if (!oracle::trial_division_prime(p)) continue;
    std::uint64_t q = p - 1;
    unsigned v = 0;
    while (q % 2 == 0) q /= 2, ++v;
    if (v == k) return p;
  }
}

// Certificate lines of one CLI invocation with timestamps removed.
std::vector<std::string> bodies(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  std::vector<std::string> result;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) {
    Json j = Json::parse(line);
    j.erase("timestamp");
    result.push_back(j.dump());
  }
  return result;
}

}  // namespace

int main() {
  // Torus: n = 2..8 each well under the limit; the per-n limit is checked inside.
  criterion(1, "mapping-torus family n = 2, 4, 6, 8", 20, [] {
    Outcome o;
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
      const auto start = std::chrono::steady_clock::now();
      const std::uint64_t bound = n == 2 ? 10 : n == 4 ? 3 : torus::default_brute_bound(n);
      const auto c = torus::certify_mapping_torus(n, bound);
      const std::string tag = "n=" + std::to_string(n) + ": ";
      o.require(c.verdict() == Verdict::Pass, tag + "verdict");
      o.require(c.det_f == 1, tag + "det F");
      o.require(c.condition_a.det_f_minus_identity == 1, tag + "det(F - I)");
      o.require(c.condition_b.real_root_count == std::optional<std::size_t>(0), tag + "real roots");
      o.require(c.condition_b.squarefree, tag + "squarefree");
      o.require(!c.condition_b.falsifier.counterexample && !c.condition_c.falsifier.counterexample,
                tag + "falsifier counterexample");
      if (n == 2) {
        o.require(c.condition_c.determinant_form && c.condition_c.determinant_form->negative_definite() &&
                      c.condition_c.determinant_form->reduced() == torus::BinaryQuadraticForm{-1, -1, -1},
                  tag + "determinant form");
      } else {
        o.require(!c.condition_c.palindromic, tag + "palindromic");
      }
      o.require(std::chrono::steady_clock::now() - start < std::chrono::seconds(5), tag + "runtime >= 5 s");
    }
    return o;
  });

  criterion(2, "lens arithmetic and exhaustive sweep t <= 2000, n <= 10", 10, [] {
    Outcome o;
    const auto l5 = lens::is_strongly_chiral(lens::LensSpace(5, {1, 1}));
    o.require(!l5.strongly_chiral && l5.witness == std::optional<std::uint64_t>(2), "L_5(1,1) witness");
    o.require(lens::is_strongly_chiral(lens::LensSpace(7, {1, 1})).strongly_chiral, "L_7(1,1)");
    for (std::uint64_t t = 3; t <= 2000 && o.ok; ++t)
      for (std::size_t n = 1; n <= 10; ++n) {
        const auto r = lens::is_strongly_chiral(lens::LensSpace(t, std::vector<std::uint64_t>(n, 1)));
        const std::uint64_t e = oracle::minus_one_power_witness(t, n);
        o.require(r.strongly_chiral == (e == t), "disagreement at t=" + std::to_string(t) + " n=" + std::to_string(n));
      }
    return o;
  });

  criterion(3, "minimal-order lens construction k = 1..6", 6, [] {
    Outcome o;
    const std::uint64_t p[] = {7, 5, 41, 17};
    const std::uint64_t c[] = {3, 2, 6, 3};
    for (unsigned k = 1; k <= 6; ++k) {
      const auto start = std::chrono::steady_clock::now();
      const auto m = lens::theoremc_construct(k).certificate;
      const std::string tag = "k=" + std::to_string(k) + ": ";
      if (k <= 4) o.require(m.p == p[k - 1] && m.c == c[k - 1], tag + "(p, c)");
      o.require(m.p == scan_progression(k), tag + "progression scan");
      o.require(oracle::naive_order(m.c, m.p) == m.p - 1, tag + "primitive root");
      o.require(oracle::naive_pow(m.c, m.n, m.p) == m.p - 1, tag + "c^n = -1");
      o.require(m.verdict() == Verdict::Pass, tag + "verdict");
      o.require(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), tag + "runtime >= 1 s");
    }
    return o;
  });

  criterion(4, "minimal model in degree 9, sweep entries <= 2", 30, [] {
    Outcome o;
    const auto r = dga::verify_dim9(dga::minimal_model(), 2);
    o.require(r.d_squared_zero, "d^2");
    o.require(r.fundamental.epsilon == 1 || r.fundamental.epsilon == -1, "sign");
    o.require(r.fundamental.degree8_with_abc.empty(), "degree-8 ABC term");
    o.require(!r.fundamental.exact, "class exact");
    o.require(r.sign_automorphisms.size() == 8, "sign automorphism count");
    for (const auto& s : r.sign_automorphisms) o.require(s.extended && s.fixed, "sign automorphism");
    o.require(r.signed_permutations == 48 && r.admissible_signed_permutations.size() == 8, "signed permutations");
    o.require(r.sweep && r.sweep->bound == 2 && r.sweep->non_diagonal_admissible.empty(), "unimodular sweep");
    o.require(dga::to_certificate(r, "built-in").verdict() == Verdict::Pass, "verdict");
    return o;
  });

  criterion(5, "degree 13 with stars in [-3, 3]", 120, [] {
    Outcome o;
    const auto r = dga::dim13_check(3);
    o.require(r.samples > 0 && r.fixed == r.samples, "coefficient +1 on every sample");
    o.require(r.reversed == 0, "coefficient -1 seen");
    o.require(r.passed(), "report");
    return o;
  });

  criterion(6, "planner totality on both tracks up to 64", 120, [] {
    Outcome o;
    for (bool sc : {false, true})
      for (std::size_t n = sc ? 1 : 3; n <= 64; ++n) {
        const auto r = products::plan_dimension(n, sc);
        const std::string tag = (sc ? "sc n=" : "n=") + std::to_string(n) + ": ";
        o.require(r.dimensions_consistent(), tag + "dimensions");
        for (const auto& c : r.sub_certificates) o.require(c.verdict() == Verdict::Pass, tag + "sub-certificate");
        o.require(products::to_certificate(r).verdict() == Verdict::Pass, tag + "verdict");
        if (sc && (n == 3 || n == 5 || n == 6)) o.require(r.chirality == products::Chirality::Amphicheiral, tag + "amphicheiral");
        else if (n >= 7 || !sc) o.require(r.chirality == products::Chirality::StronglyChiral, tag + "chirality");
      }
    return o;
  });

  criterion(7, "metacyclic predicate and search (10 tuples, primes <= 200)", 1, [] {
    Outcome o;
    using groups::MetacyclicTuple;
    o.require(groups::h4_condition(MetacyclicTuple({3, 7})).holds, "(3,7)");
    o.require(groups::h4_condition(MetacyclicTuple({5, 13})).holds, "(5,13)");
    o.require(!groups::h4_condition(MetacyclicTuple({3, 5})).holds, "(3,5)");
    for (std::uint64_t p : {3, 5, 7, 11, 13}) o.require(!groups::h4_condition(MetacyclicTuple({p})).holds, "singleton");
    const auto s = groups::search_tuples(10, 200);
    o.require(s.tuples.size() == 10 && !s.partial, "count");
    for (std::size_t i = 0; i < s.tuples.size(); ++i) {
      o.require(groups::h4_condition(s.tuples[i]).holds, "predicate");
      if (i) o.require(s.orders[i - 1] < s.orders[i], "distinct orders");
    }
    return o;
  });

  criterion(8, "repeated CLI runs give identical certificate bodies", 60, [] {
    Outcome o;
    const std::vector<std::vector<std::string>> commands{
        {"torus", "certify", "--n", "2"},
        {"torus", "certify", "--n", "4"},
        {"torus", "certify", "--n", "6"},
        {"torus", "certify", "--n", "8"},
        {"lens", "chirality", "--t", "5", "--q", "1,1"},
        {"lens", "chirality", "--t", "7", "--q", "1,1"},
        {"lens", "min-order", "--k", "1"},
        {"lens", "min-order", "--k", "3"},
        {"lens", "min-order", "--k", "6"},
        {"dga", "verify-dim9", "--sweep-bound", "2"},
        {"dga", "verify-dim13", "--star-bound", "3"},
        {"plan", "--dim", "3", "--max-dim", "64"},
        {"plan", "--dim", "1", "--max-dim", "64", "--simply-connected"},
        {"groups", "h4-search", "--count", "10", "--bound", "200"},
    };
    for (const auto& args : commands) {
      std::string joined;
      for (const auto& a : args) joined += a + ' ';
      int c1 = 0, c2 = 0;
      const auto a = bodies(args, c1);
      const auto b = bodies(args, c2);
      o.require(!a.empty(), joined + "produced no certificate");
      o.require(a == b && c1 == c2, joined + "differs between runs");
    }
    return o;
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
