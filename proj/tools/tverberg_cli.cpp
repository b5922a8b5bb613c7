// tverberg: generate point sequences, decide and enumerate Tverberg
// partitions, locate dominant monomials.
//
// Exit codes: 0 success / PASS, 1 FAIL verdict, 2 input error.

#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tverberg/io.hpp"
#include "tverberg/tverberg.hpp"

namespace {

using namespace tverberg;
using io::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct RunConfig {
  std::size_t d = 0;
  std::size_t r = 0;
  std::size_t n = 0;
  std::string q;
  std::string base = "2";
  std::string schedule = "chain";
  std::string seq_path;
  std::string partition_path;
  std::string spec_path;
  std::string out_path;
  long ell = 0;  // 1-based; 0 means every index
  long step = 0;
  long range = 9;
  std::uint64_t seed = 1;
  bool oracle = false;
  bool json_out = false;
};

// A generated sequence, with its dominant witness when there is one.
struct Generated {
  PointSequence points;
  std::optional<PointSequence> witness;  // lifted
  Scalar q;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty())
    std::cout << text;
  else
    io::write_text(cfg.out_path, text);
}

void require_dims(const RunConfig& cfg) {
  if (cfg.d < 1) throw InputError("--d must be at least 1");
  if (cfg.r < 2) throw InputError("--r must be at least 2");
}

Scalar threshold_or_default(const RunConfig& cfg, std::size_t d, std::size_t r) {
  if (cfg.q.empty()) return default_threshold(d, r);
  Scalar q = parse_scalar(cfg.q);
  if (q <= 1) throw InputError("--q must exceed 1");
  return q;
}

Generated generate(RunConfig cfg) {
  if (!cfg.spec_path.empty()) {
    const json spec = io::read_json_file(cfg.spec_path);
    if (spec.contains("base")) cfg.base = spec.at("base").is_string() ? spec.at("base").get<std::string>()
                                                                       : std::to_string(spec.at("base").get<long>());
    if (spec.contains("schedule")) cfg.schedule = spec.at("schedule").get<std::string>();
    if (spec.contains("d")) cfg.d = spec.at("d").get<std::size_t>();
    if (spec.contains("r")) cfg.r = spec.at("r").get<std::size_t>();
    if (spec.contains("params")) {
      const auto& p = spec.at("params");
      if (p.contains("q")) cfg.q = p.at("q").is_string() ? p.at("q").get<std::string>() : std::to_string(p.at("q").get<long>());
      if (p.contains("step")) cfg.step = p.at("step").get<long>();
      if (p.contains("n")) cfg.n = p.at("n").get<std::size_t>();
      if (p.contains("seed")) cfg.seed = p.at("seed").get<std::uint64_t>();
      if (p.contains("range")) cfg.range = p.at("range").get<long>();
    }
  }
  require_dims(cfg);
  const std::size_t d = cfg.d;
  const std::size_t n = cfg.n ? cfg.n : tverberg_number(cfg.r, d);
  const Scalar q = threshold_or_default(cfg, d, cfg.r);
  const Scalar base = parse_scalar(cfg.base);
  if (base <= 1) throw InputError("--base must exceed 1");

  if (cfg.schedule == "chain") {
    auto inst = gen_super_dominant(d, n, base, q);
    return {inst.sequence.materialize().without_row(0), inst.witness.materialize(), q};
  }
  if (cfg.schedule == "uniform") {
    const long step = cfg.step ? cfg.step : static_cast<long>(exponent_threshold(base, q));
    return {gen_uniform_sequence(d + 1, n, base, step).materialize().without_row(0), std::nullopt, q};
  }
  if (cfg.schedule == "moment") return {gen_moment_curve(d, n), std::nullopt, q};
  if (cfg.schedule == "random") {
    if (cfg.range < 1) throw InputError("random range must be positive");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> coord(-cfg.range, cfg.range);
    // distinct points; give up if the box is too small to hold n of them
    std::set<std::vector<long>> seen;
    std::vector<std::vector<Scalar>> rows(d, std::vector<Scalar>(n));
    for (std::size_t i = 0, tries = 0; i < n; ++tries) {
      if (tries > 1000 * n) throw InputError("random range too small for distinct points");
      std::vector<long> p(d);
      for (auto& x : p) x = coord(rng);
      if (!seen.insert(p).second) continue;
      for (std::size_t t = 0; t < d; ++t) rows[t][i] = p[t];
      ++i;
    }
    return {PointSequence(std::move(rows)), std::nullopt, q};
  }
  throw InputError("unknown schedule '" + cfg.schedule + "' (chain, uniform, moment, random)");
}

PointSequence load_sequence(const RunConfig& cfg) {
  if (cfg.seq_path.empty()) throw InputError("--seq is required");
  return io::sequence_from_json(io::read_json_file(cfg.seq_path));
}

Partition load_partition(const RunConfig& cfg) {
  if (cfg.partition_path.empty()) throw InputError("--partition is required");
  return io::partition_from_json(io::read_json_file(cfg.partition_path));
}

// The sequence named by --seq, or else a generated one.
Generated resolve_sequence(const RunConfig& cfg) {
  if (!cfg.seq_path.empty()) {
    auto pts = load_sequence(cfg);
    const std::size_t r = classes_for(pts.size(), pts.dim());
    return {pts, std::nullopt, threshold_or_default(cfg, pts.dim(), r)};
  }
  return generate(cfg);
}

std::string list_partitions(const std::vector<Partition>& ps) {
  std::ostringstream os;
  for (const auto& p : ps) {
    os << "  {";
    for (std::size_t m = 0; m < p.r(); ++m) {
      os << (m ? ", " : "") << "{";
      for (std::size_t x = 0; x < p.cls(m).size(); ++x) os << (x ? "," : "") << p.cls(m)[x] + 1;
      os << "}";
    }
    os << "}\n";
  }
  return os.str();
}

json partitions_json(const std::vector<Partition>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(io::to_json(p));
  return a;
}

std::string joined(const std::vector<Scalar>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s;
}

int cmd_gen(const RunConfig& cfg) {
  const auto g = generate(cfg);
  json j = io::to_json(g.points);
  if (g.witness) j["witness_dominant"] = is_dominant(*g.witness, g.q);
  emit(cfg, j.dump(2) + "\n");
  return kOk;
}

int cmd_check(const RunConfig& cfg) {
  const auto pts = load_sequence(cfg);
  const auto p = load_partition(cfg);
  const auto v = decide_tverberg(pts, p, DecisionMode::both);
  if (cfg.json_out) {
    emit(cfg, io::to_json(v).dump(2) + "\n");
  } else {
    std::ostringstream os;
    if (!v.proper) {
      os << "NOT TVERBERG (non-proper)\n";
    } else {
      os << "alpha = (" << joined(v.alphas) << ")\n";
      os << "cramer signs =";
      for (int s : v.cramer_signs) os << ' ' << s;
      os << "  (det M sign " << v.det_sign_M << ")\n";
      if (!v.criteria_agree) os << "WARNING: direct and Cramer criteria disagree\n";
      if (v.is_tverberg)
        os << "TVERBERG, z = " << (v.z.size() == 1 ? to_string(v.z[0]) : "(" + joined(v.z) + ")") << "\n";
      else
        os << "NOT TVERBERG\n";
    }
    emit(cfg, os.str());
  }
  return v.is_tverberg ? kOk : kFail;
}

int cmd_enumerate(const RunConfig& cfg) {
  const auto g = resolve_sequence(cfg);
  const auto found = enumerate_tverberg(g.points);
  if (cfg.json_out)
    emit(cfg, json{{"tverberg", partitions_json(found)}}.dump(2) + "\n");
  else
    emit(cfg, std::to_string(found.size()) + " Tverberg partition(s)\n" + list_partitions(found));
  return kOk;
}

int cmd_rainbow(const RunConfig& cfg) {
  require_dims(cfg);
  const auto rb = enumerate_rainbow(cfg.d, cfg.r);
  if (cfg.json_out)
    emit(cfg, json{{"rainbow", partitions_json(rb)}}.dump(2) + "\n");
  else
    emit(cfg, std::to_string(rb.size()) + " rainbow partition(s)\n" + list_partitions(rb));
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto g = resolve_sequence(cfg);
  const std::size_t d = g.points.dim();
  const std::size_t r = classes_for(g.points.size(), d);
  const auto found = enumerate_tverberg(g.points);
  const auto rb = enumerate_rainbow(d, r);
  const bool pass = found == rb;
  std::optional<bool> dominant;
  if (g.witness) dominant = is_dominant(*g.witness, g.q);
  if (cfg.json_out) {
    json j{{"d", d}, {"r", r}, {"tverberg", partitions_json(found)}, {"rainbow", partitions_json(rb)},
           {"verdict", pass ? "PASS" : "FAIL"}};
    if (dominant) j["witness_dominant"] = *dominant;
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "d=" << d << " r=" << r << " n=" << g.points.size() << "\n";
    if (dominant) os << "witness dominant: " << (*dominant ? "yes" : "no") << "\n";
    os << found.size() << " Tverberg partition(s)\n" << list_partitions(found);
    os << rb.size() << " rainbow partition(s)\n" << list_partitions(rb);
    os << (pass ? "PASS" : "FAIL") << "\n";
    emit(cfg, os.str());
  }
  return pass ? kOk : kFail;
}

struct Prepared {
  PointSequence points;
  Partition partition;
  Scalar q;
  LiftFrame frame;
  DominanceProfile profile;
};

Prepared prepare_dominant(const RunConfig& cfg) {
  auto pts = load_sequence(cfg);
  auto p = load_partition(cfg);
  const std::size_t d = pts.dim();
  if (p.n() != pts.size()) throw DimensionError("partition and point sequence sizes differ");
  const Scalar q = threshold_or_default(cfg, d, p.r());
  auto frame = ordered_frame(pts, q);
  if (!is_ordered_q_increasing(ExactRatios(frame.ordered(), q))) throw InputError("sequence is not q-increasing");
  try {
    auto profile = dominance_profile(frame.ordered(), q);
    return {std::move(pts), std::move(p), q, std::move(frame), std::move(profile)};
  } catch (const NotDominantError& e) {
    throw InputError("sequence not dominant: pair (" + std::to_string(e.first + 1) + "," +
                     std::to_string(e.second + 1) + ") inconsistent");
  }
}

std::vector<int> selected_ells(const RunConfig& cfg, std::size_t n) {
  if (cfg.ell < 0 || cfg.ell > static_cast<long>(n)) throw InputError("--ell out of range");
  if (cfg.ell > 0) return {static_cast<int>(cfg.ell - 1)};
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  return all;
}

int cmd_dominant(const RunConfig& cfg) {
  const auto pr = prepare_dominant(cfg);
  if (!pr.partition.is_proper(pr.points.dim())) throw InputError("partition is not proper");
  bool agree = true;
  json out = json::array();
  std::ostringstream os;
  std::vector<DominanceReport> reports;
  for (int ell : selected_ells(cfg, pr.points.size())) {
    const auto g = find_dominant_filling(pr.partition, ell, pr.profile);
    const auto w = monomial_value(g, pr.partition, pr.frame);
    json j{{"filling", io::to_json(g)}, {"sign", sgn(w.term())}};
    os << "ell = " << ell + 1 << ", sign " << (sgn(w.term()) > 0 ? "+" : "-") << "\n" << format_filling(g);
    if (cfg.oracle) {
      const auto rep = dominance_report(pr.frame, pr.partition, ell, pr.q);
      const bool ok = rep.ok() && rep.best.filling == g;
      agree = agree && ok;
      j["oracle"] = io::to_json(rep);
      j["oracle_agree"] = ok;
      reports.push_back(rep);
      os << (ok ? "ORACLE AGREE" : "ORACLE DISAGREE") << "\n";
    }
    out.push_back(std::move(j));
  }
  if (cfg.oracle) os << io::format_reports(reports);
  emit(cfg, cfg.json_out ? out.dump(2) + "\n" : os.str());
  return agree ? kOk : kFail;
}

int cmd_witness(const RunConfig& cfg) {
  const auto pr = prepare_dominant(cfg);
  const auto w = sign_flip_witness(pr.partition, pr.profile);
  if (!w) {
    emit(cfg, cfg.json_out ? json{{"witness", nullptr}}.dump(2) + "\n" : std::string("no witness found\n"));
    return kFail;
  }
  const auto m1 = monomial_value(w->first, pr.partition, pr.frame);
  const auto m2 = monomial_value(w->second, pr.partition, pr.frame);
  if (cfg.json_out) {
    emit(cfg, json{{"witness", {w->ell1 + 1, w->ell2 + 1}},
                   {"first", io::to_json(w->first)},
                   {"second", io::to_json(w->second)},
                   {"signs", {sgn(m1.term()), sgn(m2.term())}}}
                      .dump(2) +
                  "\n");
  } else {
    std::ostringstream os;
    os << "witness (" << w->ell1 + 1 << ", " << w->ell2 + 1 << ")\n";
    os << "ell = " << w->ell1 + 1 << ", sign " << sgn(m1.term()) << "\n" << format_filling(w->first);
    os << "ell = " << w->ell2 + 1 << ", sign " << sgn(m2.term()) << "\n" << format_filling(w->second);
    emit(cfg, os.str());
  }
  return kOk;
}

int cmd_sgp(const RunConfig& cfg) {
  const auto pts = load_sequence(cfg);
  const std::size_t r = cfg.r ? cfg.r : classes_for(pts.size(), pts.dim());
  const bool ok = is_strong_general_position(pts, r);
  if (cfg.json_out)
    emit(cfg, json{{"strong_general_position", ok}, {"r", r}}.dump(2) + "\n");
  else
    emit(cfg, ok ? "STRONG GENERAL POSITION\n" : "NOT IN STRONG GENERAL POSITION\n");
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tverberg partitions of point sequences"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_dims = [&](CLI::App* c) {
    c->add_option("--d", cfg.d, "dimension");
    c->add_option("--r", cfg.r, "number of classes");
  };
  auto add_gen = [&](CLI::App* c) {
    add_dims(c);
    c->add_option("--n", cfg.n, "sequence length (default T(r,d))");
    c->add_option("--schedule", cfg.schedule, "chain | uniform | moment | random");
    c->add_option("--base", cfg.base, "base of the power schedules");
    c->add_option("--step", cfg.step, "exponent step of the uniform schedule");
    c->add_option("--seed", cfg.seed, "seed of the random schedule");
    c->add_option("--range", cfg.range, "coordinate range of the random schedule");
    c->add_option("--spec", cfg.spec_path, "generator spec JSON");
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--q", cfg.q, "threshold q (default (r(d+1))!+1)");
    c->add_option("--out", cfg.out_path, "write the report here");
    c->add_flag("--json", cfg.json_out, "JSON output");
  };

  auto* gen = app.add_subcommand("gen", "generate a point sequence");
  add_gen(gen);
  add_common(gen);

  auto* check = app.add_subcommand("check", "decide one partition");
  check->add_option("--seq", cfg.seq_path, "sequence JSON")->required();
  check->add_option("--partition", cfg.partition_path, "partition JSON")->required();
  add_common(check);

  auto* enumerate = app.add_subcommand("enumerate", "list all Tverberg partitions");
  enumerate->add_option("--seq", cfg.seq_path, "sequence JSON");
  add_gen(enumerate);
  add_common(enumerate);

  auto* rainbow = app.add_subcommand("rainbow", "list rainbow partitions");
  add_dims(rainbow);
  add_common(rainbow);

  auto* verify = app.add_subcommand("verify-universality", "compare Tverberg and rainbow partitions");
  verify->add_option("--seq", cfg.seq_path, "sequence JSON");
  add_gen(verify);
  add_common(verify);

  auto* dominant = app.add_subcommand("dominant", "dominant filling of det(M_l)");
  dominant->add_option("--seq", cfg.seq_path, "sequence JSON")->required();
  dominant->add_option("--partition", cfg.partition_path, "partition JSON")->required();
  dominant->add_option("--ell", cfg.ell, "excluded index, 1-based (default all)");
  dominant->add_flag("--oracle", cfg.oracle, "compare with exhaustive monomial enumeration");
  add_common(dominant);

  auto* witness = app.add_subcommand("witness", "equal-z-position pair of a non-rainbow partition");
  witness->add_option("--seq", cfg.seq_path, "sequence JSON")->required();
  witness->add_option("--partition", cfg.partition_path, "partition JSON")->required();
  add_common(witness);

  auto* sgp = app.add_subcommand("sgp", "strong general position check");
  sgp->add_option("--seq", cfg.seq_path, "sequence JSON")->required();
  sgp->add_option("--r", cfg.r, "largest collection size (default from n)");
  add_common(sgp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*check) return cmd_check(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*rainbow) return cmd_rainbow(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*dominant) return cmd_dominant(cfg);
    if (*witness) return cmd_witness(cfg);
    if (*sgp) return cmd_sgp(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DegenerateConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SingularSystemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON field: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
