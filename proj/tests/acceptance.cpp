// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tverberg/tverberg.hpp"

using namespace tverberg;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

std::string show(const Partition& p) {
  std::ostringstream os;
  os << "{";
  for (std::size_t m = 0; m < p.r(); ++m) {
    os << (m ? ", " : "") << "{";
    for (std::size_t x = 0; x < p.cls(m).size(); ++x) os << (x ? "," : "") << p.cls(m)[x] + 1;
    os << "}";
  }
  return os.str() + "}";
}

// 1. Radon partitions of d+2 moment-curve points
void moment_curve_radon(Outcome& out) {
  for (std::size_t d = 1; d <= 4; ++d) {
    std::vector<std::vector<int>> inter(2);
    for (int i = 0; i < static_cast<int>(d + 2); ++i) inter[static_cast<std::size_t>(i % 2)].push_back(i);
    const auto found = enumerate_tverberg(gen_moment_curve(d, d + 2), DecisionMode::both);
    if (found != std::vector<Partition>{Partition(d + 2, inter)}) out.fail("d=" + std::to_string(d));
  }
  out.note << "d=1..4 unique interlacing partition";
}

// 2. Tverberg partitions of super-dominant points are the rainbow ones
void rainbow_universality(Outcome& out) {
  for (auto [d, r] : Pairs{{1, 2}, {1, 3}, {2, 2}, {3, 2}, {2, 3}}) {
    const auto in = fixture::super_dominant(d, r);
    if (!is_super_dominant(in.gen.sequence.materialize(), in.gen.witness.materialize(), in.q)) {
      out.fail("witness not dominant at (" + std::to_string(d) + "," + std::to_string(r) + ")");
      continue;
    }
    const auto tv = enumerate_tverberg(in.points);
    const auto rb = enumerate_rainbow(d, r);
    if (tv != rb) out.fail("mismatch at (" + std::to_string(d) + "," + std::to_string(r) + ")");
    out.note << "(" << d << "," << r << "):" << tv.size() << " ";
  }
}

// 3. rainbow counts
void rainbow_counts(Outcome& out) {
  const auto a = enumerate_rainbow(1, 2), b = enumerate_rainbow(1, 3);
  if (a.size() != 1 || b.size() != 2) out.fail("counts");
  for (const auto& p : a)
    if (!is_rainbow(p, 1, 2)) out.fail("not rainbow " + show(p));
  for (const auto& p : b)
    if (!is_rainbow(p, 1, 3)) out.fail("not rainbow " + show(p));
  out.note << "|R(1,2)|=" << a.size() << " |R(1,3)|=" << b.size();
}

// 4 and 5 share the brute-force reports
struct OracleTally {
  std::size_t cases = 0, argmax_bad = 0, margin_bad = 0, sign_bad = 0;
};

OracleTally oracle_tally() {
  OracleTally t;
  for (auto [d, r] : Pairs{{1, 2}, {1, 3}, {2, 2}}) {
    const auto in = fixture::super_dominant(d, r);
    for (const auto& p : enumerate_proper_partitions(d, r))
      for (int ell = 0; ell < static_cast<int>(p.n()); ++ell) {
        const auto rep = dominance_report(in.frame, p, ell, in.q);
        const auto g = find_dominant_filling(p, ell, in.profile);
        ++t.cases;
        if (g != rep.best.filling) ++t.argmax_bad;
        if (!(rep.best.magnitude() > in.q * rep.second_magnitude)) ++t.margin_bad;
        const auto sys = build_system(in.points, p);
        if (sgn(monomial_value(g, p, in.frame).term()) != det_sign(sys.replaced(static_cast<std::size_t>(ell))))
          ++t.sign_bad;
      }
  }
  return t;
}

void oracle_equivalence(Outcome& out, const OracleTally& t) {
  if (t.argmax_bad) out.fail(std::to_string(t.argmax_bad) + " argmax mismatches; ");
  if (t.margin_bad) out.fail(std::to_string(t.margin_bad) + " margins <= q; ");
  out.note << t.cases << " (partition, ell) cases";
}

void sign_agreement(Outcome& out, const OracleTally& t) {
  if (t.sign_bad) out.fail(std::to_string(t.sign_bad) + " sign mismatches; ");
  out.note << t.cases << " cases";
}

// 6. switch direction against actual magnitudes
void z_switch_direction(Outcome& out) {
  std::size_t cases = 0, bad = 0;
  for (auto [d, r] : Pairs{{2, 2}, {2, 3}, {3, 2}}) {
    const auto in = fixture::super_dominant(d, r);
    for (const auto& p : enumerate_proper_partitions(d, r))
      for (int ell = 0; ell < static_cast<int>(p.n()); ell += 2)
        for (const auto& g : enumerate_valid_fillings(p, ell, true))
          for (const auto& mv : available_switches(g)) {
            const auto h = z_switch(g, p, mv.s, mv.t, mv.alpha, mv.beta);
            const Scalar wg = monomial_value(g, p, in.frame).magnitude();
            const Scalar wh = monomial_value(h, p, in.frame).magnitude();
            const bool predicted = switch_dominates(g, in.profile, mv);
            const bool ok = predicted ? wh > in.q * wg : wg > in.q * wh;
            ++cases;
            if (!ok) ++bad;
          }
  }
  if (cases < 100) out.fail("only " + std::to_string(cases) + " cases; ");
  if (bad) out.fail(std::to_string(bad) + " wrong directions; ");
  out.note << cases << " cases";
}

// 7. product bound over a mixed 5-gap profile, n = 7
void crux_bound(Outcome& out) {
  const Scalar q = 5;
  const std::size_t n = 7;
  const std::vector<GapClass> classes{{{0, 3}, GapShape::accelerating}, {{1}, GapShape::linear}, {{2, 4}, GapShape::decelerating}};
  const auto seq = gen_profile_sequence(6, n, Scalar(2), q, classes);
  const ExponentRatios R(seq, q);
  if (!is_dominant(R)) {
    out.fail("sequence not dominant");
    return;
  }
  const auto prof = dominance_profile(R);
  const auto a = seq.materialize();
  const ExactRatios X(a, q);
  std::size_t exhaustive = 0, random_cases = 0, bad = 0, exact_checked = 0;
  auto check = [&](const CruxCase& c) {
    if (!crux_holds(R, prof, c)) ++bad;
    // the exact path on a sample
    if ((exhaustive + random_cases) % 97 == 0) {
      ++exact_checked;
      if (!crux_holds(X, prof, c)) ++bad;
    }
  };
  for (int mask = 1; mask < 32; ++mask) {
    std::vector<int> gaps;
    for (int u = 0; u < 5; ++u)
      if (mask >> u & 1) gaps.push_back(u);
    const std::size_t k = gaps.size();
    if (k > 3) continue;
    std::vector<int> idx(2 * k, 0);
    while (true) {
      CruxCase c{gaps, {idx.begin(), idx.begin() + static_cast<long>(k)}, {idx.begin() + static_cast<long>(k), idx.end()}};
      if (crux_admissible(c, prof)) {
        check(c);
        ++exhaustive;
      }
      std::size_t x = 0;
      while (x < idx.size() && ++idx[x] == static_cast<int>(n)) idx[x++] = 0;
      if (x == idx.size()) break;
    }
  }
  std::mt19937_64 rng(2024);
  while (random_cases < 1000) {
    const std::size_t k = 4 + rng() % 2;
    std::vector<int> gaps;
    for (int u = 0; u < 5; ++u) gaps.push_back(u);
    while (gaps.size() > k) gaps.erase(gaps.begin() + static_cast<long>(rng() % gaps.size()));
    auto walk = [&] {
      std::vector<int> v(k);
      for (auto& x : v) x = static_cast<int>(rng() % n);
      std::sort(v.begin(), v.end());
      return v;
    };
    CruxCase c{gaps, walk(), walk()};
    if (!crux_admissible(c, prof)) continue;
    check(c);
    ++random_cases;
  }
  if (bad) out.fail(std::to_string(bad) + " bound failures; ");
  out.note << exhaustive << " exhaustive (|S|<=3) + " << random_cases << " random, " << exact_checked << " cross-checked exactly";
}

// 8. planted prescribed-zero combinations
void p_lines(Outcome& out) {
  std::mt19937_64 rng(8);
  std::size_t planted = 0, checked = 0, bad = 0;
  while (planted < 50) {
    const std::size_t d = 2 + rng() % 3;
    const std::size_t n = 3 * d + 4 + rng() % 4;
    const std::int64_t c = 3 + static_cast<std::int64_t>(rng() % 2);
    const auto a = gen_power_sequence(d, n, Scalar(2), [c](std::size_t t, std::size_t i) {
                     return static_cast<std::int64_t>(c * static_cast<std::int64_t>((t + 1) * i));
                   }).materialize();
    const Scalar q = 4;
    if (!is_pseudo_geometric(a, q) || !is_ordered(a, q)) {
      out.fail("generated sequence not ordered pseudo-geometric; ");
      return;
    }
    // zeros with gaps > 2
    std::vector<int> zeros;
    int next = static_cast<int>(rng() % 3);
    for (std::size_t t = 0; t + 1 < d; ++t) {
      zeros.push_back(next);
      next += 3 + static_cast<int>(rng() % 2);
    }
    if (zeros.back() >= static_cast<int>(n)) continue;
    int norm = static_cast<int>(rng() % n);
    while (std::find(zeros.begin(), zeros.end(), norm) != zeros.end()) norm = static_cast<int>(rng() % n);
    const Scalar value(static_cast<long>(1 + rng() % 9) * (rng() % 2 ? 1 : -1), static_cast<long>(1 + rng() % 5));
    const auto alpha = solve_prescribed_zeros(a, zeros, {norm, value});
    const auto b = combine_rows(a, alpha);
    for (int j : zeros)
      if (b[static_cast<std::size_t>(j)] != 0) ++bad;
    const auto rep = check_p_lines_bounds(a, q, alpha, zeros, 1 + static_cast<long>(rng() % 2));
    if (!rep.ok()) ++bad;
    checked += rep.checked_indices;
    ++planted;
    if (planted == 50) {
      auto corrupted = alpha;
      corrupted[1] = -corrupted[1];
      if (check_p_lines_bounds(a, q, corrupted, zeros, 1).ok()) out.fail("corrupted control not reported; ");
    }
  }
  if (bad) out.fail(std::to_string(bad) + " planted cases with violations; ");
  out.note << planted << " planted, " << checked << " sandwich indices, corrupted control reported";
}

// 9. direct solve vs det signs on random small integer points
void cramer(Outcome& out) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coord(-9, 9);
  std::size_t instances = 0, bad = 0, skipped = 0;
  const Pairs shapes{{1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 2}};
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Partition>> parts;
  for (auto s : shapes) parts[s] = enumerate_proper_partitions(s.first, s.second);
  while (instances < 500) {
    const auto [d, r] = shapes[instances % shapes.size()];
    const std::size_t n = tverberg_number(r, d);
    std::vector<std::vector<Scalar>> rows(d, std::vector<Scalar>(n));
    for (auto& row : rows)
      for (auto& x : row) x = coord(rng);
    const PointSequence pts(rows);
    const auto& all = parts[{d, r}];
    const Partition& p = all[rng() % all.size()];
    if (det_sign(build_system(pts, p).M) == 0) {
      ++skipped;
      continue;
    }
    const auto v = decide_tverberg(pts, p);
    std::vector<std::vector<Scalar>> list;
    std::vector<int> color(n);
    for (std::size_t i = 0; i < n; ++i) {
      list.push_back(pts.point(i));
      color[i] = p.class_of(static_cast<int>(i));
    }
    if (!v.criteria_agree || v.is_tverberg != oracle::is_tverberg_direct(list, color, r)) ++bad;
    ++instances;
  }
  if (bad) out.fail(std::to_string(bad) + " disagreements; ");
  out.note << instances << " nonsingular instances (" << skipped << " singular draws redrawn)";
}

// 10. a sign flip for every non-rainbow proper partition
void sign_flip(Outcome& out) {
  std::size_t partitions = 0;
  for (auto [d, r] : Pairs{{1, 2}, {1, 3}, {2, 2}}) {
    const auto in = fixture::super_dominant(d, r);
    for (const auto& p : enumerate_proper_partitions(d, r)) {
      if (is_rainbow(p, d, r)) continue;
      ++partitions;
      const auto w = sign_flip_witness(p, in.profile);
      if (!w) {
        out.fail("no witness for " + show(p) + "; ");
        continue;
      }
      const int s1 = sgn(monomial_value(w->first, p, in.frame).term());
      const int s2 = sgn(monomial_value(w->second, p, in.frame).term());
      if (s1 == s2) out.fail("equal signs for " + show(p) + "; ");
      if (decide_tverberg(in.points, p).is_tverberg) out.fail(show(p) + " is Tverberg; ");
    }
  }
  out.note << partitions << " non-rainbow partitions";
}

// 11. f identities on random triples
void f_identities(Outcome& out) {
  std::mt19937_64 rng(11);
  const Scalar q = 7;
  std::vector<PointSequence> seqs{
      gen_chain_sequence(3, 8, Scalar(2), q).materialize(),
      gen_chain_sequence(4, 7, Scalar(3), q).materialize(),
      gen_profile_sequence(3, 8, Scalar(2), q, {{{0, 1}, GapShape::accelerating}}).materialize(),
      gen_profile_sequence(3, 8, Scalar(2), q, {{{0, 1}, GapShape::decelerating}}).materialize(),
      gen_uniform_sequence(4, 8, Scalar(2), 3).materialize(),
  };
  std::size_t triples = 0, bad = 0;
  for (const auto& a : seqs)
    if (!is_ordered_q_increasing(ExactRatios(a, q))) out.fail("a generated sequence is not ordered; ");
  while (triples < 1000) {
    const auto& a = seqs[triples % seqs.size()];
    const std::size_t n = a.size(), t = rng() % (a.dim() - 1);
    std::size_t v[3] = {rng() % n, rng() % n, rng() % n};
    std::sort(v, v + 3);
    if (v[0] == v[1] || v[1] == v[2]) continue;
    const std::size_t i = v[0], j = v[1], k = v[2];
    const Scalar fij = f_ratio(a, t, i, j);
    if (f_ratio(a, t, i, k) != fij * f_ratio(a, t, j, k)) ++bad;
    if (!(fij > q * f_ratio(a, t, i + 1, j))) ++bad;
    if (!(fij > q * f_ratio(a, t, i, j - 1))) ++bad;
    if (!(fij <= f_ratio(a, t, 0, n - 1))) ++bad;
    // the rebuilt ratio of ratios
    if (fij != a(t + 1, j) / a(t, j) / (a(t + 1, i) / a(t, i))) ++bad;
    ++triples;
  }
  if (bad) out.fail(std::to_string(bad) + " identity failures; ");
  out.note << triples << " triples over " << seqs.size() << " sequences";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  OracleTally tally;
  bool tallied = false;
  auto need_tally = [&] {
    if (!tallied) tally = oracle_tally();
    tallied = true;
  };
  const std::vector<Criterion> criteria{
      {"moment-curve Radon uniqueness", moment_curve_radon},
      {"Tverberg = rainbow on super-dominant points", rainbow_universality},
      {"rainbow counts", rainbow_counts},
      {"dominant filling = brute-force argmax, margin > q", [&](Outcome& o) { need_tally(); oracle_equivalence(o, tally); }},
      {"dominant sign = det sign", [&](Outcome& o) { need_tally(); sign_agreement(o, tally); }},
      {"z-switch direction", z_switch_direction},
      {"product bound", crux_bound},
      {"p-lines sandwich", p_lines},
      {"direct solve = Cramer signs", cramer},
      {"sign-flip witness", sign_flip},
      {"f identities", f_identities},
  };
  int failures = 0;
  for (std::size_t x = 0; x < criteria.size(); ++x) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[x].run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !out.pass;
    std::printf("%s %2zu  %s: %s [%.1fs]\n", out.pass ? "PASS" : "FAIL", x + 1, criteria[x].name, out.note.str().c_str(), secs);
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
