#pragma once

// Locating the dominant monomial of det(M_l) from the turnstile order alone,
// the rainbow construction, exhaustive dominance reports and the
// equal-z-position witness for non-rainbow partitions.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tverberg/core_arith.hpp"
#include "tverberg/dominance.hpp"
#include "tverberg/filling.hpp"
#include "tverberg/partition.hpp"
#include "tverberg/system.hpp"

namespace tverberg {

/// One level of the recursive splitting of grid rows lo..hi at gap tau:
/// X goes to rows lo..tau, Y to rows tau+1..hi.
struct SplitRecord {
  int lo = 0;
  int hi = 0;
  int tau = 0;
  std::vector<int> elements;             // sorted
  std::vector<int> initial_x;            // step 1: the smallest elements
  std::vector<int> excess_x, excess_y;   // e(X,m), e(Y,m) after step 1
  std::vector<int> exchanged_x;          // after step 2
  std::vector<int> pushed;               // step 3, in push order
  std::vector<int> final_x, final_y;

  int top_rows() const { return tau - lo + 1; }
  int bottom_rows() const { return hi - tau; }
};

struct SplitTrace {
  std::vector<SplitRecord> levels;
};

namespace detail {

inline std::vector<int> excess(const Partition& p, const std::vector<int>& part, int budget) {
  std::vector<int> count(p.r(), 0);
  for (int i : part) ++count[static_cast<std::size_t>(p.class_of(i))];
  for (auto& c : count) c = std::max(0, c - budget);
  return count;
}

class Splitter {
 public:
  Splitter(const Partition& p, const DominanceProfile& profile, SplitTrace* trace)
      : p_(p), profile_(profile), trace_(trace), rows_(profile.gaps() + 1) {}

  std::vector<std::vector<int>> run(const std::vector<int>& elements) {
    split(0, static_cast<int>(rows_.size()) - 1, elements);
    return rows_;
  }

 private:
  void split(int lo, int hi, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    const std::size_t r = p_.r();
    if (lo == hi) {
      if (elems.size() != r - 1) throw std::logic_error("splitting produced a row of the wrong size");
      rows_[static_cast<std::size_t>(lo)] = elems;
      return;
    }
    SplitRecord rec;
    rec.lo = lo;
    rec.hi = hi;
    rec.tau = profile_.maximal_in_range(lo, hi - 1);
    rec.elements = elems;
    const int top = rec.top_rows();
    const int bottom = rec.bottom_rows();
    const auto target = static_cast<std::size_t>(top) * (r - 1);

    std::vector<char> in_x(elems.size(), 0);
    for (std::size_t x = 0; x < target; ++x) in_x[x] = 1;
    auto collect = [&](bool want_x) {
      std::vector<int> out;
      for (std::size_t x = 0; x < elems.size(); ++x)
        if (static_cast<bool>(in_x[x]) == want_x) out.push_back(elems[x]);
      return out;
    };
    auto column_count = [&](std::size_t m, bool want_x) {
      int c = 0;
      for (std::size_t x = 0; x < elems.size(); ++x)
        if (static_cast<bool>(in_x[x]) == want_x && p_.class_of(elems[x]) == static_cast<int>(m)) ++c;
      return c;
    };
    rec.initial_x = collect(true);
    rec.excess_x = excess(p_, rec.initial_x, top);
    rec.excess_y = excess(p_, collect(false), bottom);

    // step 2: the smallest `top` of a column stay in X, the largest
    // `bottom` of a column stay in Y
    for (std::size_t m = 0; m < r; ++m) {
      std::vector<std::size_t> members;
      for (std::size_t x = 0; x < elems.size(); ++x)
        if (p_.class_of(elems[x]) == static_cast<int>(m)) members.push_back(x);
      if (column_count(m, true) > top)
        for (std::size_t k = 0; k < members.size(); ++k) in_x[members[k]] = k < static_cast<std::size_t>(top);
      if (column_count(m, false) > bottom)
        for (std::size_t k = 0; k < members.size(); ++k)
          in_x[members[k]] = k + static_cast<std::size_t>(bottom) < members.size();
    }
    rec.exchanged_x = collect(true);

    // step 3: push the largest pushable element down, or the smallest up,
    // re-evaluating pushability before every move
    auto size_x = [&] { return static_cast<std::size_t>(std::count(in_x.begin(), in_x.end(), 1)); };
    while (size_x() > target) {
      std::optional<std::size_t> pick;
      for (std::size_t x = elems.size(); x-- > 0;)
        if (in_x[x] && column_count(static_cast<std::size_t>(p_.class_of(elems[x])), false) < bottom) {
          pick = x;
          break;
        }
      if (!pick) throw std::logic_error("no pushable element in X");
      in_x[*pick] = 0;
      rec.pushed.push_back(elems[*pick]);
    }
    while (size_x() < target) {
      std::optional<std::size_t> pick;
      for (std::size_t x = 0; x < elems.size(); ++x)
        if (!in_x[x] && column_count(static_cast<std::size_t>(p_.class_of(elems[x])), true) < top) {
          pick = x;
          break;
        }
      if (!pick) throw std::logic_error("no pushable element in Y");
      in_x[*pick] = 1;
      rec.pushed.push_back(elems[*pick]);
    }
    rec.final_x = collect(true);
    rec.final_y = collect(false);
    const int tau = rec.tau;
    auto fx = rec.final_x;
    auto fy = rec.final_y;
    if (trace_) trace_->levels.push_back(std::move(rec));
    split(lo, tau, std::move(fx));
    split(tau + 1, hi, std::move(fy));
  }

  const Partition& p_;
  const DominanceProfile& profile_;
  SplitTrace* trace_;
  std::vector<std::vector<int>> rows_;
};

}  // namespace detail

/// Conditions (a)-(d) of one splitting level:
///  (a) in every column, X elements are smaller than Y elements;
///  (b) no column exceeds its row budget in either half;
///  (c) if column alpha has room in X and beta has room in Y, every X
///      element of beta is smaller than every Y element of alpha;
///  (d) |X| = (top rows)(r - 1).
inline std::vector<std::string> split_condition_failures(const SplitRecord& rec, const Partition& p) {
  std::vector<std::string> out;
  const std::size_t r = p.r();
  const int top = rec.top_rows();
  const int bottom = rec.bottom_rows();
  std::vector<std::vector<int>> cx(r), cy(r);
  for (int i : rec.final_x) cx[static_cast<std::size_t>(p.class_of(i))].push_back(i);
  for (int i : rec.final_y) cy[static_cast<std::size_t>(p.class_of(i))].push_back(i);
  for (std::size_t m = 0; m < r; ++m) {
    if (!cx[m].empty() && !cy[m].empty() && cx[m].back() > cy[m].front())
      out.push_back("(a) column " + std::to_string(m));
    if (static_cast<int>(cx[m].size()) > top || static_cast<int>(cy[m].size()) > bottom)
      out.push_back("(b) column " + std::to_string(m));
  }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      if (a == b || static_cast<int>(cx[a].size()) >= top || static_cast<int>(cy[b].size()) >= bottom) continue;
      if (!cx[b].empty() && !cy[a].empty() && cx[b].back() > cy[a].front())
        out.push_back("(c) columns " + std::to_string(a) + "," + std::to_string(b));
    }
  if (rec.final_x.size() != static_cast<std::size_t>(top) * (r - 1)) out.push_back("(d)");
  return out;
}

/// The dominant filling for excluded index ell, from the turnstile order
/// of the ordered lifted sequence (grid row k is the k-th slowest lifted
/// coordinate). Uses no numeric data.
inline GFilling find_dominant_filling(const Partition& p, int ell, const DominanceProfile& profile,
                                      SplitTrace* trace = nullptr) {
  const std::size_t d = dimension_for(p);
  if (!p.is_proper(d)) throw InputError("dominant filling needs a proper partition");
  if (profile.gaps() != d) throw DimensionError("profile must have d gaps");
  if (ell < 0 || static_cast<std::size_t>(ell) >= p.n()) throw InputError("excluded index out of range");
  std::vector<int> elems;
  for (int i = 0; i < static_cast<int>(p.n()); ++i)
    if (i != ell) elems.push_back(i);
  const auto rows = detail::Splitter(p, profile, trace).run(elems);
  GFilling g(d, p.r(), ell);
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<char> used(p.r(), 0);
    for (int i : rows[k]) {
      const auto m = static_cast<std::size_t>(p.class_of(i));
      if (used[m]) throw std::logic_error("splitting put two elements of a class in one row");
      used[m] = 1;
      g.at(k, m) = i;
    }
  }
  if (!is_valid_filling(g, p)) throw std::logic_error("splitting produced an invalid filling");
  return g;
}

/// Row s holds R_s, the s-th run of r-1 consecutive elements of [n] \ {l};
/// its z-entry sits in the column of the class missing from R_s.
inline GFilling rainbow_filling(const Partition& p, int ell) {
  const std::size_t d = dimension_for(p);
  if (!is_rainbow(p, d, p.r())) throw InputError("rainbow filling needs a rainbow partition");
  if (ell < 0 || static_cast<std::size_t>(ell) >= p.n()) throw InputError("excluded index out of range");
  std::vector<int> rest;
  for (int i = 0; i < static_cast<int>(p.n()); ++i)
    if (i != ell) rest.push_back(i);
  GFilling g(d, p.r(), ell);
  const std::size_t w = p.r() - 1;
  for (std::size_t s = 0; s <= d; ++s)
    for (std::size_t x = 0; x < w; ++x) {
      const int i = rest[s * w + x];
      g.at(s, static_cast<std::size_t>(p.class_of(i))) = i;
    }
  if (!is_valid_filling(g, p)) throw std::logic_error("rainbow construction produced an invalid filling");
  return g;
}

struct DominanceReport {
  int ell = 0;
  std::size_t monomials = 0;
  Monomial best;
  Scalar second_magnitude = 0;   // largest |value| among the others, 0 if none
  int det_sign = 0;              // sign det(M_l)
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// All monomials of det(M_l); checks that the largest exceeds every other
/// by a factor above q and carries the sign of det(M_l).
inline DominanceReport dominance_report(const LiftFrame& frame, const Partition& p, int ell, const Scalar& q) {
  DominanceReport rep;
  rep.ell = ell;
  const auto fillings = enumerate_valid_fillings(p, ell);
  rep.monomials = fillings.size();
  if (fillings.empty()) {
    rep.violations.push_back("no valid fillings");
    return rep;
  }
  std::vector<Monomial> all;
  all.reserve(fillings.size());
  for (const auto& g : fillings) all.push_back(monomial_value(g, p, frame));
  std::size_t best = 0;
  for (std::size_t x = 1; x < all.size(); ++x)
    if (all[x].magnitude() > all[best].magnitude()) best = x;
  rep.best = all[best];
  for (std::size_t x = 0; x < all.size(); ++x)
    if (x != best && all[x].magnitude() > rep.second_magnitude) rep.second_magnitude = all[x].magnitude();
  if (!(rep.best.magnitude() > q * rep.second_magnitude))
    rep.violations.push_back("largest monomial does not dominate the second by q");
  const auto sys = build_system(frame.points(), p);
  rep.det_sign = det_sign(sys.replaced(static_cast<std::size_t>(ell)));
  if (sgn(rep.best.term()) != rep.det_sign) rep.violations.push_back("dominant sign differs from det(M_l)");
  return rep;
}

/// Renders a filling as a text grid, z-entries as z0..zd.
inline std::string format_filling(const GFilling& g, bool one_based = true) {
  std::ostringstream os;
  for (std::size_t k = 0; k < g.rows(); ++k) {
    for (std::size_t m = 0; m < g.r(); ++m) {
      std::string cell = g.is_z(k, m) ? "z" + std::to_string(k) : std::to_string(g.at(k, m) + (one_based ? 1 : 0));
      os << (m ? " " : "") << std::string(cell.size() < 4 ? 4 - cell.size() : 0, ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

struct SignFlipWitness {
  int ell1;
  int ell2;
  GFilling first;
  GFilling second;
};

/// Over consecutive elements l1 < l2 of each class, the first pair whose
/// dominant fillings have all z-entries in the same cells.
inline std::optional<SignFlipWitness> sign_flip_witness(const Partition& p, const DominanceProfile& profile) {
  const std::size_t d = dimension_for(p);
  if (!p.is_proper(d)) throw InputError("sign-flip witness needs a proper partition");
  if (is_rainbow(p, d, p.r())) throw InputError("sign-flip witness needs a non-rainbow partition");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& c : p.classes())
    for (std::size_t x = 0; x + 1 < c.size(); ++x) pairs.emplace_back(c[x], c[x + 1]);
  std::sort(pairs.begin(), pairs.end());
  for (auto [a, b] : pairs) {
    auto g1 = find_dominant_filling(p, a, profile);
    auto g2 = find_dominant_filling(p, b, profile);
    if (g1.z_columns() == g2.z_columns()) return SignFlipWitness{a, b, std::move(g1), std::move(g2)};
  }
  return std::nullopt;
}

}  // namespace tverberg
