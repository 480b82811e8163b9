#pragma once

// Invariant sweeps behind the `verify` command.  Each runner checks one
// family of identities over a whole symmetric group and reports witnesses
// for anything that fails.  Reports are rendered without timing data so a
// fixed invocation (same flags, same seed) is byte-stable on stdout.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "groth/hecke.hpp"
#include "groth/oracles.hpp"
#include "groth/perm.hpp"
#include "groth/rng.hpp"
#include "groth/specialize.hpp"

namespace groth {

struct VerifyFailure {
  std::string v;
  std::string w;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string suite;
  int n = 0;
  long long pairs_checked = 0;
  std::vector<VerifyFailure> failures;
  std::optional<std::uint64_t> seed;  // set only when sampling was involved
  double elapsed_sec = 0.0;           // stderr-only; never part of the report body

  bool passed() const { return failures.empty(); }
};

inline std::string report_text(const VerificationReport& r) {
  std::string out;
  for (const VerifyFailure& f : r.failures)
    out += "FAIL v=" + f.v + " w=" + f.w + " lhs=" + f.lhs + " rhs=" + f.rhs + "\n";
  out += "suite=" + r.suite + " n=" + std::to_string(r.n) +
         " pairs=" + std::to_string(r.pairs_checked) +
         " failures=" + std::to_string(r.failures.size()) +
         " seed=" + (r.seed ? std::to_string(*r.seed) : std::string("-")) +
         " result=" + (r.passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

namespace detail {

// Runs fn(0..count-1), possibly on several threads, and concatenates the
// results in index order so the output is independent of the thread count.
// An exception inside a work item becomes a failure witness rather than
// tearing down the whole sweep.
template <typename Fn>
std::vector<VerifyFailure> collect_indexed(std::size_t count, int jobs, Fn&& fn) {
  std::vector<std::vector<VerifyFailure>> slots(count);
  auto work = [&](std::size_t i) {
    try {
      slots[i] = fn(i);
    } catch (const std::exception& ex) {
      slots[i].push_back({"-", "-", "exception", ex.what()});
    }
  };
  const std::size_t workers =
      std::min(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
      });
    for (std::thread& t : pool) t.join();
  }
  std::vector<VerifyFailure> merged;
  for (std::vector<VerifyFailure>& s : slots)
    merged.insert(merged.end(), std::make_move_iterator(s.begin()),
                  std::make_move_iterator(s.end()));
  return merged;
}

inline void require_range(const char* suite, int n, int cap) {
  if (n < 1 || n > cap)
    throw std::invalid_argument(std::string("suite ") + suite + " supports 1 <= n <= " +
                                std::to_string(cap));
}

}  // namespace detail

// Specialization theorem: for every pair (v, w) the coefficient of w in
// G^(n) with a_j -> b_{v(j)} must match the crossing-diagram product of
// h-factors, and the signed sum over subsets of C(D_v).  Exhaustive up to
// n = 4; at n = 5 the subset enumeration (the only exponential route) runs
// on a seeded subsample of 200 pairs while the other two routes still cover
// all n!^2 pairs.  Passing a sample count switches every route to that many
// seeded pairs instead.
inline VerificationReport run_theorem(int n, std::optional<long long> sample,
                                      std::optional<std::uint64_t> seed, int jobs) {
  detail::require_range("theorem", n, 5);
  const std::vector<Permutation> perms = all_permutations(n);
  const long long fact = static_cast<long long>(perms.size());
  const long long total = fact * fact;
  VerificationReport report{"theorem", n, 0, {}, std::nullopt, 0.0};

  // pair code = v_index * fact + w_index, grouped by v for bulk evaluation
  std::map<std::size_t, std::vector<std::size_t>> sampled_by_v;
  if (sample || n == 5) {
    const std::uint64_t eff = seed.value_or(1);
    report.seed = eff;
    const long long want = sample ? std::min(*sample, total) : std::min<long long>(200, total);
    std::set<std::uint64_t> codes;
    if (want >= total) {
      for (long long c = 0; c < total; ++c) codes.insert(static_cast<std::uint64_t>(c));
    } else {
      Lcg64 rng(eff);
      while (static_cast<long long>(codes.size()) < want)
        codes.insert(rng.below(static_cast<std::uint64_t>(total)));
    }
    for (std::uint64_t c : codes)
      sampled_by_v[static_cast<std::size_t>(c / static_cast<std::uint64_t>(fact))].push_back(
          static_cast<std::size_t>(c % static_cast<std::uint64_t>(fact)));
  }

  if (sample) {
    report.pairs_checked = 0;
    for (const auto& [vi, ws] : sampled_by_v)
      report.pairs_checked += static_cast<long long>(ws.size());
    std::vector<std::size_t> vs;
    vs.reserve(sampled_by_v.size());
    for (const auto& [vi, ws] : sampled_by_v) vs.push_back(vi);
    report.failures = detail::collect_indexed(vs.size(), jobs, [&](std::size_t slot) {
      std::vector<VerifyFailure> out;
      const Permutation& v = perms[vs[slot]];
      const CrossingDiagram diag = crossing_diagram(v);
      const Alphabet alph = family_alphabet(Family::b, n);
      const HeckeElt lhs_elt = theorem_lhs_elt(v);
      const HeckeElt prod_elt = crossing_hecke_product(diag, alph);
      const auto sum_table = fk_sum_table(diag, alph);
      for (std::size_t wi : sampled_by_v.at(vs[slot])) {
        const Permutation& w = perms[wi];
        const LaurentPoly lhs = coefficient(lhs_elt, w);
        const LaurentPoly prod = coefficient(prod_elt, w);
        auto it = sum_table.find(w);
        const LaurentPoly enumd = it == sum_table.end() ? LaurentPoly() : it->second;
        if (lhs != prod)
          out.push_back({to_string(v), to_string(w), to_string(lhs), to_string(prod)});
        if (lhs != enumd)
          out.push_back({to_string(v), to_string(w), to_string(lhs), to_string(enumd)});
      }
      return out;
    });
    return report;
  }

  report.pairs_checked = total;
  report.failures = detail::collect_indexed(perms.size(), jobs, [&](std::size_t vi) {
    std::vector<VerifyFailure> out;
    const Permutation& v = perms[vi];
    const CrossingDiagram diag = crossing_diagram(v);
    const Alphabet alph = family_alphabet(Family::b, n);
    const HeckeElt lhs_elt = theorem_lhs_elt(v);
    const HeckeElt prod_elt = crossing_hecke_product(diag, alph);
    for (const Permutation& w : perms) {
      const LaurentPoly lhs = coefficient(lhs_elt, w);
      const LaurentPoly prod = coefficient(prod_elt, w);
      if (lhs != prod)
        out.push_back({to_string(v), to_string(w), to_string(lhs), to_string(prod)});
    }
    std::vector<std::size_t> enum_ws;
    if (n <= 4) {
      enum_ws.resize(perms.size());
      for (std::size_t i = 0; i < perms.size(); ++i) enum_ws[i] = i;
    } else if (auto it = sampled_by_v.find(vi); it != sampled_by_v.end()) {
      enum_ws = it->second;
    }
    if (!enum_ws.empty()) {
      const auto sum_table = fk_sum_table(diag, alph);
      for (std::size_t wi : enum_ws) {
        const Permutation& w = perms[wi];
        const LaurentPoly lhs = coefficient(lhs_elt, w);
        auto it = sum_table.find(w);
        const LaurentPoly enumd = it == sum_table.end() ? LaurentPoly() : it->second;
        if (lhs != enumd)
          out.push_back({to_string(v), to_string(w), to_string(lhs), to_string(enumd)});
      }
    }
    return out;
  });
  return report;
}

// Schubert counterpart: the reduced-subset sum over C(D_v) must equal the
// divided-difference table entry S_w(x;y) with x_j -> y_{v(j)}.
inline VerificationReport run_cor1(int n, int jobs) {
  detail::require_range("cor1", n, 5);
  const std::vector<Permutation> perms = all_permutations(n);
  const PolyTable oracle = schubert_table(n);
  VerificationReport report{"cor1", n,
                            static_cast<long long>(perms.size() * perms.size()),
                            {}, std::nullopt, 0.0};
  report.failures = detail::collect_indexed(perms.size(), jobs, [&](std::size_t vi) {
    std::vector<VerifyFailure> out;
    const Permutation& v = perms[vi];
    const auto table = reduced_sum_table(crossing_diagram(v));
    std::map<Var, LaurentPoly> images;
    for (int j = 1; j <= n; ++j)
      images.emplace(Var{Family::x, j}, LaurentPoly::variable(Var{Family::y, v(j)}));
    for (const Permutation& w : perms) {
      const LaurentPoly expected = oracle.entries.at(w).substitute(images);
      auto it = table.find(w);
      const LaurentPoly actual = it == table.end() ? LaurentPoly() : it->second;
      if (actual != expected)
        out.push_back({to_string(v), to_string(w), to_string(expected), to_string(actual)});
    }
    return out;
  });
  return report;
}

// Support criterion: w <= v in Bruhat order (sorted-prefix test, computed
// without any polynomial machinery) iff the Grothendieck specialization is
// nonzero iff the Schubert specialization is nonzero.
inline VerificationReport run_bruhat(int n, int jobs) {
  detail::require_range("bruhat", n, 5);
  const std::vector<Permutation> perms = all_permutations(n);
  VerificationReport report{"bruhat", n,
                            static_cast<long long>(perms.size() * perms.size()),
                            {}, std::nullopt, 0.0};
  report.failures = detail::collect_indexed(perms.size(), jobs, [&](std::size_t vi) {
    std::vector<VerifyFailure> out;
    const Permutation& v = perms[vi];
    const CrossingDiagram diag = crossing_diagram(v);
    const HeckeElt prod_elt = crossing_hecke_product(diag, family_alphabet(Family::b, n));
    const auto s_table = reduced_sum_table(diag);
    for (const Permutation& w : perms) {
      const bool below = bruhat_leq(w, v);
      const bool g_nonzero = !coefficient(prod_elt, w).is_zero();
      const bool s_nonzero = s_table.count(w) != 0;
      if (below != g_nonzero || below != s_nonzero)
        out.push_back({to_string(v), to_string(w),
                       std::string("bruhat=") + (below ? "true" : "false"),
                       std::string("G_nonzero=") + (g_nonzero ? "true" : "false") +
                           " S_nonzero=" + (s_nonzero ? "true" : "false")});
    }
    return out;
  });
  return report;
}

// Doubled-alphabet reduction: the theorem applied in S_{2n} to the shuffle
// (n+1,...,2n,1,...,n) must reproduce every plain coefficient of G^(n).
inline VerificationReport run_rcgraphs(int n, int jobs) {
  detail::require_range("rcgraphs", n, 3);
  const std::vector<Permutation> perms = all_permutations(n);
  VerificationReport report{"rcgraphs", n, static_cast<long long>(perms.size()),
                            {}, std::nullopt, 0.0};
  report.failures = detail::collect_indexed(perms.size(), jobs, [&](std::size_t wi) {
    std::vector<VerifyFailure> out;
    const Permutation& w = perms[wi];
    const DoubledAlphabetSides sides = doubled_alphabet_sides(w);
    if (sides.via_shuffle != sides.direct)
      out.push_back({"-", to_string(w), to_string(sides.via_shuffle), to_string(sides.direct)});
    return out;
  });
  return report;
}

// Stability under shifting: setting a_i = b_i = c_i for i <= m kills every
// coefficient whose permutation moves 1..m and turns the rest into the
// corresponding coefficient of G^(n-m) in shifted variables.
inline VerificationReport run_shift(int n, int jobs) {
  detail::require_range("shift", n, 5);
  const std::vector<Permutation> perms = all_permutations(n);
  VerificationReport report{"shift", n,
                            static_cast<long long>(perms.size()) * (n + 1),
                            {}, std::nullopt, 0.0};
  report.failures = detail::collect_indexed(static_cast<std::size_t>(n) + 1, jobs,
                                            [&](std::size_t mi) {
    std::vector<VerifyFailure> out;
    const int m = static_cast<int>(mi);
    std::map<int, LaurentPoly> a_images;
    for (int i = 1; i <= std::min(m, n - 1); ++i)
      a_images.emplace(i, LaurentPoly::variable(Var{Family::c, i}));
    std::map<Var, LaurentPoly> b_images;
    for (int i = 1; i <= m; ++i)
      b_images.emplace(Var{Family::b, i}, LaurentPoly::variable(Var{Family::c, i}));
    const HeckeElt base = big_G(n, a_images);
    const HeckeElt inner = m < n ? big_G(n - m) : HeckeElt::unit(1);
    std::map<Var, LaurentPoly> relabel;
    for (int i = 1; i <= n - m; ++i) {
      relabel.emplace(Var{Family::a, i}, LaurentPoly::variable(Var{Family::a, m + i}));
      relabel.emplace(Var{Family::b, i}, LaurentPoly::variable(Var{Family::b, m + i}));
    }
    for (const Permutation& w : perms) {
      const LaurentPoly specialized = coefficient(base, w).substitute(b_images);
      bool fixes_prefix = true;
      for (int i = 1; i <= m; ++i)
        if (w(i) != i) fixes_prefix = false;
      LaurentPoly expected;
      if (!fixes_prefix) {
        // stays zero
      } else if (m == n) {
        expected = 1;
      } else {
        std::vector<int> window;
        window.reserve(static_cast<std::size_t>(n - m));
        for (int j = m + 1; j <= n; ++j) window.push_back(w(j) - m);
        expected = coefficient(inner, Permutation{window}).substitute(relabel);
      }
      if (specialized != expected)
        out.push_back({to_string(w), "m=" + std::to_string(m), to_string(specialized),
                       to_string(expected)});
    }
    return out;
  });
  return report;
}

// Top coefficient: the w = v entry of the specialization collapses to the
// closed product over crossings of (1 - b_i / b_{v(j)}).
inline VerificationReport run_product(int n, int jobs) {
  detail::require_range("product", n, 5);
  const std::vector<Permutation> perms = all_permutations(n);
  VerificationReport report{"product", n, static_cast<long long>(perms.size()),
                            {}, std::nullopt, 0.0};
  report.failures = detail::collect_indexed(perms.size(), jobs, [&](std::size_t vi) {
    std::vector<VerifyFailure> out;
    const Permutation& v = perms[vi];
    const LaurentPoly lhs = theorem_lhs(v, v);
    const LaurentPoly rhs = product_formula(v);
    if (lhs != rhs)
      out.push_back({to_string(v), to_string(v), to_string(lhs), to_string(rhs)});
    return out;
  });
  return report;
}

namespace detail {

struct YbCase {
  std::string label;
  enum Kind { commute, multiply, braid, ladder, commutation, factorization } kind;
  int i = 0, j = 0, p = 0, q = 0, k = 0, nn = 0;
};

inline std::vector<YbCase> yb_cases(int n) {
  std::vector<YbCase> cases;
  auto num = [](int x) { return std::to_string(x); };
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      cases.push_back({"commute i=" + num(i) + " j=" + num(j), YbCase::commute, i, j});
  for (int i = 1; i <= n - 1; ++i)
    cases.push_back({"multiply i=" + num(i), YbCase::multiply, i});
  for (int i = 1; i <= n - 2; ++i)
    cases.push_back({"braid i=" + num(i), YbCase::braid, i});
  for (int q = 1; q <= n - 1; ++q)
    for (int p = q; p <= n - 1; ++p)
      for (int k = std::max(1, 3 - q); k <= n + 1 - p; ++k) {
        YbCase c{"ladder p=" + num(p) + " q=" + num(q) + " k=" + num(k), YbCase::ladder};
        c.p = p, c.q = q, c.k = k;
        cases.push_back(std::move(c));
      }
  for (int p = 1; p <= n - 2; ++p)
    for (int k = 2; k <= n - p; ++k) {
      YbCase c{"commutation p=" + num(p) + " k=" + num(k), YbCase::commutation};
      c.p = p, c.k = k;
      cases.push_back(std::move(c));
    }
  for (int nn = 2; nn <= n; ++nn)
    for (int p = 1; p <= nn; ++p) {
      YbCase c{"factorization n=" + num(nn) + " p=" + num(p), YbCase::factorization};
      c.nn = nn, c.p = p;
      cases.push_back(std::move(c));
    }
  return cases;
}

inline std::pair<HeckeElt, HeckeElt> yb_sides(const YbCase& c, int n) {
  const LaurentPoly c1 = LaurentPoly::variable(Var{Family::c, 1});
  const LaurentPoly c2 = LaurentPoly::variable(Var{Family::c, 2});
  const HeckeElt one = HeckeElt::unit(n);
  switch (c.kind) {
    case YbCase::commute:
      return {mul_h(mul_h(one, c.i, c1), c.j, c2), mul_h(mul_h(one, c.j, c2), c.i, c1)};
    case YbCase::multiply:
      return {mul_h(mul_h(one, c.i, c1), c.i, c2), mul_h(one, c.i, c1 * c2)};
    case YbCase::braid:
      return {mul_h(mul_h(mul_h(one, c.i, c1), c.i + 1, c1 * c2), c.i, c2),
              mul_h(mul_h(mul_h(one, c.i + 1, c2), c.i, c1 * c2), c.i + 1, c1)};
    case YbCase::ladder:
      return {mul_h(mul(ladder_A(c.p, c.q, c1, c.k - 1, n), ladder_A(c.p - 1, c.q, c2, c.k, n)),
                    c.q + c.k - 2, unit_ratio(c1, c2)),
              mul(ladder_A(c.p, c.q, c2, c.k - 1, n), ladder_A(c.p - 1, c.q, c1, c.k, n))};
    case YbCase::commutation: {
      const LaurentPoly bp = LaurentPoly::variable(Var{Family::b, c.p});
      const LaurentPoly ak = LaurentPoly::variable(Var{Family::a, c.k});
      return {mul(ladder_A(n - c.k + 1, c.p + 1, bp, c.k - 1, n),
                  ladder_A(n - c.k, 1, ak, c.k, n)),
              mul(mul(ladder_A(n - c.k + 1, c.p + 1, ak, c.k - 1, n),
                      ladder_A(c.p - 1, 1, ak, c.k, n)),
                  ladder_A(n - c.k, c.p + 1, bp, c.k, n))};
    }
    case YbCase::factorization: {
      std::map<int, LaurentPoly> first_slot;
      first_slot.emplace(1, LaurentPoly::variable(Var{Family::b, c.p}));
      const HeckeElt lhs = big_G(c.nn, first_slot);
      std::map<Var, LaurentPoly> relabel;
      for (int i = 1; i <= c.nn - 2; ++i) {
        relabel.emplace(Var{Family::a, i}, LaurentPoly::variable(Var{Family::a, i + 1}));
        if (i >= c.p)
          relabel.emplace(Var{Family::b, i}, LaurentPoly::variable(Var{Family::b, i + 1}));
      }
      const HeckeElt inner = shift(substitute(big_G(c.nn - 1), relabel));
      const HeckeElt rhs = mul(ladder_A(c.p - 1, 1, LaurentPoly::variable(Var{Family::b, c.p}),
                                        1, c.nn),
                               inner);
      return {lhs, rhs};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

// Exchange identities for the h-factors, ladder blocks, and the recursive
// factorization of G^(n), each checked as an equality of algebra elements
// with fully symbolic arguments.
inline VerificationReport run_yangbaxter(int n, int jobs) {
  detail::require_range("yangbaxter", n, 5);
  const std::vector<detail::YbCase> cases = detail::yb_cases(n);
  VerificationReport report{"yangbaxter", n, static_cast<long long>(cases.size()),
                            {}, std::nullopt, 0.0};
  report.failures = detail::collect_indexed(cases.size(), jobs, [&](std::size_t ci) {
    std::vector<VerifyFailure> out;
    const detail::YbCase& c = cases[ci];
    const int size = c.kind == detail::YbCase::factorization ? c.nn : n;
    auto [lhs, rhs] = detail::yb_sides(c, size);
    if (!(lhs == rhs)) out.push_back({c.label, "-", to_string(lhs), to_string(rhs)});
    return out;
  });
  return report;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem", "cor1",    "bruhat",    "rcgraphs",
                                              "shift",   "product", "yangbaxter"};
  return names;
}

inline int suite_cap(const std::string& suite) { return suite == "rcgraphs" ? 3 : 5; }

inline VerificationReport run_suite(const std::string& suite, int n,
                                    std::optional<long long> sample,
                                    std::optional<std::uint64_t> seed, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  if (suite == "theorem")
    report = run_theorem(n, sample, seed, jobs);
  else if (suite == "cor1")
    report = run_cor1(n, jobs);
  else if (suite == "bruhat")
    report = run_bruhat(n, jobs);
  else if (suite == "rcgraphs")
    report = run_rcgraphs(n, jobs);
  else if (suite == "shift")
    report = run_shift(n, jobs);
  else if (suite == "product")
    report = run_product(n, jobs);
  else if (suite == "yangbaxter")
    report = run_yangbaxter(n, jobs);
  else
    throw std::invalid_argument("unknown suite: " + suite);
  report.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace groth
