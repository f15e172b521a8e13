#include "cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/io.hpp"
#include "cli/json_output.hpp"
#include "cli/semirings.hpp"
#include "semiring_dp/algorithms.hpp"
#include "semiring_dp/instrumented.hpp"
#include "semiring_dp/oracle.hpp"
#include "semiring_dp/path_set.hpp"
#include "semiring_dp/regression.hpp"

namespace sdp::cli {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kDefaultOracleBudget = 20'000;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t oracle_budget() {
  const char* env = std::getenv("SEMIRING_DP_ORACLE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultOracleBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError(std::string("SEMIRING_DP_ORACLE_BUDGET must be a positive integer, got '") + env + "'");
  return static_cast<std::size_t>(v);
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != text.size() || text.empty() || text.front() == '-') {
    throw UsageError(what + " expects a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> parse_size_list(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_size(item, what));
  if (out.empty()) throw UsageError(what + " expects a comma-separated list");
  return out;
}

void write_table(const std::string& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<Json>>& rows) {
  std::ofstream os(path);
  if (!os) throw DataError("cannot write " + path);
  for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << (row[c].is_string() ? row[c].get<std::string>() : row[c].dump());
    }
    os << '\n';
  }
}

Json oracle_skipped(const std::string& reason) { return Json{{"status", "skipped"}, {"reason", reason}}; }

// Generate every solution with the generator semiring, keep the admissible
// ones, evaluate them in the base semiring and compare with the DP result.
// For tupled semirings the witness is also re-evaluated.
template <class Label, class Choice, class Generate, class Filter, class Score>
Json run_oracle(const Choice& c, const value_t<typename Choice::semiring_type>& got, Generate generate,
                Filter filter, Score score) {
  const std::size_t budget = oracle_budget();
  try {
    const auto g = generator_semiring<Label>(Budget{std::numeric_limits<std::size_t>::max(), budget});
    const PathSet<Label> kept = filter(generate(g));
    const auto w = [&](const Label& l) { return c.base_lift(score(l), l); };
    const auto expected = hom_eval(c.base(), w, kept);
    bool ok = c.base().eq(expected, c.score(got));
    std::string reason = "dynamic program matches " + std::to_string(kept.size()) + " enumerated solutions";
    if (!ok) reason = "dynamic program disagrees with " + std::to_string(kept.size()) + " enumerated solutions";
    if constexpr (Choice::tupled) {
      if (ok && !kept.empty()) {
        auto witness_score = c.base().one();
        for (const auto& l : got.witness) witness_score = c.base().mul(witness_score, w(l));
        if (!kept.contains(got.witness) || !c.base().eq(witness_score, c.score(got))) {
          ok = false;
          reason = "witness is not an admissible solution with the reported score";
        }
      }
    }
    Json out{{"status", ok ? "pass" : "fail"}, {"reason", reason}, {"expected", number_json(expected)}};
    return out;
  } catch (const BudgetExceeded& e) {
    return oracle_skipped(std::string("instance exceeds oracle budget: ") + e.what());
  }
}

// Runs `run(semiring, weight)` under an instrumented semiring and records
// result, witness, operation counts and wall time into `doc`.
template <class Choice, class Run, class Weight>
auto timed_run(const Choice& c, const Run& run, const Weight& weight, Json& doc) {
  Instrumented<typename Choice::semiring_type> inst(c.semiring());
  const auto t0 = Clock::now();
  auto value = run(inst, weight);
  const double secs = seconds_since(t0);
  doc["result"] = number_json(c.score(value));
  if constexpr (Choice::tupled) doc["witness"] = c.witness_json(value);
  doc["op_counts"] = Json{{"add", inst.counts().add}, {"mul", inst.counts().mul}};
  doc["wall_time_s"] = number_json(secs);
  return value;
}

struct Common {
  std::string semiring;
  bool verify = false;
  std::string out_path;
  std::string table_path;
};

void add_common(CLI::App* cmd, Common& common, const std::string& default_semiring) {
  common.semiring = default_semiring;
  cmd->add_option("--semiring", common.semiring, "semiring name (count, bool, prob, minplus, maxplus, maxtimes, "
                                                  "softmax, bottleneck, viterbi:<minplus|maxplus|maxtimes|bottleneck>)")
      ->capture_default_str();
  cmd->add_flag("--verify", common.verify, "cross-check against exhaustive enumeration when small enough");
  cmd->add_option("--out", common.out_path, "write the JSON document here instead of stdout");
  cmd->add_option("--out-table", common.table_path, "write plot-ready CSV columns here");
}

Json base_doc(const std::string& command, Json config, const Common& common) {
  config["command"] = command;
  config["semiring"] = common.semiring;
  config["verify"] = common.verify;
  return Json{{"config", std::move(config)}, {"oracle", oracle_skipped("--verify not given")}};
}

// ---------------------------------------------------------------------------
// segment

struct SegmentArgs {
  Common common;
  std::string input;
  std::optional<std::size_t> count;
  std::string count_range;
  std::optional<std::size_t> min_length;
  bool exact_min_length = false;
  double lambda = 0.0;
  double p = 2.0;
  std::string model = "constant";
  bool header = false;
};

SegmentConstraint segment_constraint(const SegmentArgs& a) {
  const int given = (a.count ? 1 : 0) + (a.count_range.empty() ? 0 : 1) + (a.min_length ? 1 : 0);
  if (given > 1) throw UsageError("--count, --count-range and --min-length are mutually exclusive");
  if (a.exact_min_length && !a.min_length) throw UsageError("--exact-min-length needs --min-length");
  if (a.count) return SegmentConstraint::count(*a.count);
  if (!a.count_range.empty()) {
    const auto r = parse_size_list(a.count_range, "--count-range");
    if (r.size() != 2) throw UsageError("--count-range expects lo,hi");
    return SegmentConstraint::count_range(r[0], r[1]);
  }
  if (a.min_length) return SegmentConstraint::min_length(*a.min_length, a.exact_min_length);
  return SegmentConstraint::unconstrained();
}

Json cmd_segment(const SegmentArgs& a, int& exit_code) {
  const SegmentConstraint constraint = segment_constraint(a);
  SegmentCostModel model;
  if (a.model == "constant") model.model = SegmentModel::constant;
  else if (a.model == "linear") model.model = SegmentModel::linear;
  else throw UsageError("--model must be constant or linear");
  model.p = a.p;
  model.lambda = a.lambda;
  try {
    model.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const std::vector<double> y = read_numeric_column(a.input, a.header);
  if (y.empty()) throw DataError(a.input + ": no samples");
  const TimeSeries ts(y);
  const SegmentCosts costs(ts, model);
  const std::size_t n = ts.size();
  try {
    constraint.validate(n);
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("infeasible constraint: ") + e.what());
  }

  Json doc = base_doc("segment",
                      Json{{"input", a.input},
                           {"model", a.model},
                           {"p", number_json(a.p)},
                           {"lambda", number_json(a.lambda)},
                           {"constraint", constraint.describe()},
                           {"samples", n}},
                      a.common);
  const auto score = [&](const Segment& g) { return costs.cost(g.first, g.last) + model.lambda; };
  const auto run = [&](const auto& s, const auto& w) {
    switch (constraint.kind) {
      case SegmentConstraint::Kind::count_range:
        return segment_fixed_count(s, n, constraint.lo, std::min(constraint.hi, n), w);
      case SegmentConstraint::Kind::min_length: {
        const long lo = static_cast<long>(constraint.lo);
        return segment_min_length(s, n, constraint.exact ? Acceptance::exactly(lo) : Acceptance::at_least(lo), w);
      }
      case SegmentConstraint::Kind::none: break;
    }
    return segment_opt(s, n, w);
  };

  with_semiring<Segment>(a.common.semiring, [&](const auto& c) {
    const auto w = [&](const Segment& g) { return c.lift(score(g), g); };
    const auto value = timed_run(c, run, w, doc);

    using C = std::decay_t<decltype(c)>;
    if constexpr (C::tupled) {
      Json segments = Json::array();
      Json breakpoints = Json::array();
      std::vector<std::vector<Json>> rows;
      for (const Segment& g : value.witness) {
        const SegmentFit f = costs.fit(g.first, g.last);
        segments.push_back(Json{{"first", g.first},
                                {"last", g.last},
                                {"intercept", number_json(f.intercept)},
                                {"slope", number_json(f.slope)},
                                {"cost", number_json(costs.cost(g.first, g.last))}});
        if (g.first > 1) breakpoints.push_back(g.first);
        for (std::size_t t = g.first; t <= g.last; ++t) {
          rows.push_back({t, number_json(ts(t)), number_json(f.at(t)), segments.size()});
        }
      }
      doc["segments"] = segments;
      doc["breakpoints"] = breakpoints;
      if (!a.common.table_path.empty()) write_table(a.common.table_path, {"n", "y", "fit", "segment"}, rows);
    } else if (!a.common.table_path.empty()) {
      throw UsageError("--out-table needs a viterbi:<base> semiring to report the fitted segments");
    }

    if (a.common.verify) {
      const auto filter = [&](const PathSet<Segment>& paths) {
        switch (constraint.kind) {
          case SegmentConstraint::Kind::count_range: {
            const auto alg = subset_size_algebra(static_cast<long>(n), Acceptance::range(static_cast<long>(constraint.lo),
                                                                                         static_cast<long>(constraint.hi)));
            return filter_paths(alg, [](const Segment&) { return std::size_t{1}; }, paths);
          }
          case SegmentConstraint::Kind::min_length: {
            const long lo = static_cast<long>(constraint.lo);
            const auto alg = min_count_algebra(static_cast<long>(n),
                                               constraint.exact ? Acceptance::exactly(lo) : Acceptance::at_least(lo));
            return filter_paths(alg, [&](const Segment& g) { return *alg.index_of(static_cast<long>(g.length())); },
                                paths);
          }
          case SegmentConstraint::Kind::none: break;
        }
        return paths;
      };
      const auto generate = [&](const auto& g) { return segment_opt(g, n, SingletonPaths{}); };
      doc["oracle"] = run_oracle<Segment>(c, value, generate, filter, score);
    }
    return 0;
  });
  if (doc["oracle"]["status"] == "fail") exit_code = kOracleFailed;
  return doc;
}

// ---------------------------------------------------------------------------
// align

struct AlignArgs {
  Common common;
  std::string first, second;
  double match = 0.0, mismatch = 1.0, gap = 1.0;
  bool count_paths = false;
  std::optional<std::size_t> max_misalign, sum_misalign;
  bool sweep = false;
};

Json cmd_align(AlignArgs a, bool semiring_given, int& exit_code) {
  if (a.max_misalign && a.sum_misalign) throw UsageError("--max-misalign and --sum-misalign are mutually exclusive");
  if (a.count_paths) {
    if (semiring_given && a.common.semiring != "count") throw UsageError("--count-paths conflicts with --semiring");
    a.common.semiring = "count";
  }
  if (a.sweep && a.common.table_path.empty()) throw UsageError("--sweep needs --out-table for the timing table");
  const std::vector<std::string> x = read_symbols(a.first);
  const std::vector<std::string> yv = read_symbols(a.second);

  Json config{{"inputs", {a.first, a.second}},
              {"match", number_json(a.match)},
              {"mismatch", number_json(a.mismatch)},
              {"gap", number_json(a.gap)},
              {"lengths", {x.size(), yv.size()}}};
  if (a.max_misalign) config["max_misalign"] = *a.max_misalign;
  if (a.sum_misalign) config["sum_misalign"] = *a.sum_misalign;
  Json doc = base_doc("align", std::move(config), a.common);

  const auto score = [&](const Step& s) {
    if (s.kind != StepKind::match) return a.gap;
    return x[s.i - 1] == yv[s.j - 1] ? a.match : a.mismatch;
  };
  const auto run_sized = [&](std::size_t n, std::size_t m) {
    return [&, n, m](const auto& s, const auto& w) {
      if (a.sum_misalign) return nw_align_sum_constrained(s, n, m, *a.sum_misalign, w);
      if (a.max_misalign) return nw_align_max_constrained(s, n, m, std::min(*a.max_misalign, std::max(n, m)), w);
      return nw_align(s, n, m, w);
    };
  };
  const std::size_t n = x.size(), m = yv.size();

  with_semiring<Step>(a.common.semiring, [&](const auto& c) {
    const auto w = [&](const Step& s) { return c.lift(score(s), s); };
    const auto value = timed_run(c, run_sized(n, m), w, doc);

    using C = std::decay_t<decltype(c)>;
    if constexpr (C::tupled) {
      Json rows = Json::array();
      for (const Step& s : value.witness) {
        rows.push_back({s.kind == StepKind::insertion ? "-" : x[s.i - 1], s.kind == StepKind::deletion ? "-" : yv[s.j - 1]});
      }
      doc["alignment"] = rows;
    }

    if (a.sweep) {
      Json sweep = Json::array();
      std::vector<std::vector<Json>> rows;
      std::vector<std::size_t> sizes;
      for (std::size_t k = 1; k < std::max(n, m); k *= 2) sizes.push_back(k);
      sizes.push_back(std::max<std::size_t>(std::max(n, m), 1));
      for (std::size_t k : sizes) {
        const std::size_t kn = std::min(k, n), km = std::min(k, m);
        Json entry;
        timed_run(c, run_sized(kn, km), w, entry);
        rows.push_back({kn, km, entry["op_counts"]["add"].get<std::uint64_t>() + entry["op_counts"]["mul"].get<std::uint64_t>(),
                        entry["wall_time_s"]});
        sweep.push_back(Json{{"n", kn}, {"m", km}, {"ops", rows.back()[2]}, {"seconds", entry["wall_time_s"]}});
      }
      doc["sweep"] = sweep;
      write_table(a.common.table_path, {"n", "m", "ops", "seconds"}, rows);
    } else if (!a.common.table_path.empty()) {
      throw UsageError("--out-table for align is only produced with --sweep");
    }

    if (a.common.verify) {
      const auto misalign = [](const Step& s) { return s.misalignment(); };
      const auto filter = [&](const PathSet<Step>& paths) {
        const long big = static_cast<long>(std::max(n, m));
        if (a.sum_misalign) {
          const long cap = static_cast<long>(*a.sum_misalign) + big;
          return filter_paths(subset_size_algebra(cap, Acceptance::at_most(static_cast<long>(*a.sum_misalign))),
                              misalign, paths);
        }
        if (a.max_misalign) {
          return filter_paths(max_count_algebra(big, Acceptance::at_most(static_cast<long>(*a.max_misalign))), misalign,
                              paths);
        }
        return paths;
      };
      const auto generate = [&](const auto& g) { return nw_align(g, n, m, SingletonPaths{}); };
      doc["oracle"] = run_oracle<Step>(c, value, generate, filter, score);
    }
    return 0;
  });
  if (doc["oracle"]["status"] == "fail") exit_code = kOracleFailed;
  return doc;
}

// ---------------------------------------------------------------------------
// events

struct EventsArgs {
  Common common;
  std::string input;
  std::size_t m = 0;
  std::string mode = "prob";
};

Json cmd_events(EventsArgs a, bool semiring_given, int& exit_code) {
  if (a.mode == "viterbi") {
    if (semiring_given && a.common.semiring != "viterbi:maxtimes") throw UsageError("--mode viterbi conflicts with --semiring");
    a.common.semiring = "viterbi:maxtimes";
  } else if (a.mode != "prob") {
    throw UsageError("--mode must be prob or viterbi");
  }
  const std::vector<double> p = read_numeric_column(a.input, false);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < 0.0 || p[k] > 1.0) {
      throw DataError(a.input + ": probability of event " + std::to_string(k + 1) + " is " + std::to_string(p[k]) +
                      ", outside [0, 1]");
    }
  }
  const std::size_t n = p.size();
  Json doc = base_doc("events", Json{{"input", a.input}, {"m", a.m}, {"mode", a.mode}, {"events", n}}, a.common);
  const auto score = [&](const Event& e) { return e.occurs ? p[e.index - 1] : 1.0 - p[e.index - 1]; };
  const auto run = [&](const auto& s, const auto& w) { return events_m_of_n(s, n, a.m, w); };

  with_semiring<Event>(a.common.semiring, [&](const auto& c) {
    const auto w = [&](const Event& e) { return c.lift(score(e), e); };
    const auto value = timed_run(c, run, w, doc);
    using C = std::decay_t<decltype(c)>;
    if constexpr (C::tupled) {
      Json occurring = Json::array();
      for (const Event& e : value.witness) {
        if (e.occurs) occurring.push_back(e.index);
      }
      doc["occurring"] = occurring;
    }
    if (a.common.verify) {
      const auto filter = [&](const PathSet<Event>& paths) {
        return filter_paths(subset_size_algebra(static_cast<long>(n), Acceptance::exactly(static_cast<long>(a.m))),
                            [](const Event& e) { return std::size_t{e.occurs ? 1u : 0u}; }, paths);
      };
      const auto generate = [&](const auto& g) { return event_sequences(g, n, SingletonPaths{}); };
      doc["oracle"] = run_oracle<Event>(c, value, generate, filter, score);
    }
    return 0;
  });

  const auto dist = events_row(Real{}, n, n, score);
  Json distribution = Json::array();
  std::vector<std::vector<Json>> rows;
  for (std::size_t k = 0; k <= n; ++k) {
    distribution.push_back(number_json(dist[k]));
    rows.push_back({k, number_json(dist[k])});
  }
  doc["distribution"] = distribution;
  if (!a.common.table_path.empty()) write_table(a.common.table_path, {"m", "probability"}, rows);
  if (doc["oracle"]["status"] == "fail") exit_code = kOracleFailed;
  return doc;
}

// ---------------------------------------------------------------------------
// lis

struct LisArgs {
  Common common;
  std::string input;
  std::string relation = "lt";
  bool header = false;
};

Json cmd_lis(const LisArgs& a, int& exit_code) {
  ChainRelation rel = ChainRelation::less;
  if (a.relation == "le") rel = ChainRelation::less_equal;
  else if (a.relation == "subset-demo") rel = ChainRelation::subset;
  else if (a.relation != "lt") throw UsageError("--relation must be lt, le or subset-demo");
  const std::vector<double> u = read_numeric_column(a.input, a.header);
  if (rel == ChainRelation::subset) {
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (u[k] < 0 || u[k] != std::floor(u[k]) || u[k] > 9.0e15) {
        throw DataError(a.input + ": subset-demo needs non-negative integer bit masks; value " + std::to_string(k + 1) +
                        " is not one");
      }
    }
  }
  const auto relation = chain_relation(rel);
  const std::size_t n = u.size();
  Json doc = base_doc("lis", Json{{"input", a.input}, {"relation", a.relation}, {"length_of_input", n}}, a.common);
  const auto score = [](std::size_t) { return 1.0; };
  const auto run = [&](const auto& s, const auto& w) { return ordered_subsequences(s, u, relation, w); };

  with_semiring<std::size_t>(a.common.semiring, [&](const auto& c) {
    const auto w = [&](std::size_t k) { return c.lift(score(k), k); };
    const auto value = timed_run(c, run, w, doc);
    using C = std::decay_t<decltype(c)>;
    if constexpr (C::tupled) {
      Json chain = Json::array();
      for (std::size_t k : value.witness) chain.push_back(number_json(u[k - 1]));
      doc["length"] = value.witness.size();
      doc["subsequence"] = chain;
    }
    if (a.common.verify) {
      const auto filter = [&](const PathSet<std::size_t>& paths) {
        return filter_paths(ordering_algebra(u, relation), [](std::size_t k) { return k - 1; }, paths);
      };
      const auto generate = [&](const auto& g) { return nonempty_subsequences(g, n, SingletonPaths{}); };
      doc["oracle"] = run_oracle<std::size_t>(c, value, generate, filter, score);
    }
    return 0;
  });
  if (doc["oracle"]["status"] == "fail") exit_code = kOracleFailed;
  return doc;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  Common common;
  std::string algo = "nw";
  std::string sizes = "8,16,32,64";
  std::size_t m = 4;
  unsigned seed = 1;
};

Json cmd_bench(const BenchArgs& a) {
  const std::vector<std::size_t> sizes = parse_size_list(a.sizes, "--sizes");
  Json doc = base_doc("bench", Json{{"algo", a.algo}, {"sizes", sizes}, {"m", a.m}, {"seed", a.seed}}, a.common);
  Json table = Json::array();
  std::vector<std::vector<Json>> rows;

  // Uniform(0, 1) scores drawn once per size and looked up by label.
  const auto bench = [&]<class Label>(auto run_for_size) {
    with_semiring<Label>(a.common.semiring, [&](const auto& c) {
      for (std::size_t n : sizes) {
        std::mt19937 rng(a.seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::map<Label, double> scores;
        const auto w = [&](const Label& l) {
          auto it = scores.find(l);
          if (it == scores.end()) it = scores.emplace(l, unif(rng)).first;
          return c.lift(it->second, l);
        };
        Json entry;
        timed_run(c, run_for_size(n), w, entry);
        const std::uint64_t ops = entry["op_counts"]["add"].template get<std::uint64_t>() +
                                  entry["op_counts"]["mul"].template get<std::uint64_t>();
        table.push_back(Json{{"n", n}, {"ops", ops}, {"seconds", entry["wall_time_s"]}});
        rows.push_back({n, ops, entry["wall_time_s"]});
      }
      return 0;
    });
  };

  const std::size_t m = a.m;
  if (a.algo == "combinations") {
    bench.operator()<std::size_t>([m](std::size_t n) {
      return [n, m](const auto& s, const auto& w) { return combinations(s, n, m, w); };
    });
  } else if (a.algo == "lis") {
    bench.operator()<std::size_t>([](std::size_t n) {
      return [n](const auto& s, const auto& w) {
        std::vector<double> u(n);
        for (std::size_t k = 0; k < n; ++k) u[k] = static_cast<double>((k * 7919) % 101);
        return ordered_subsequences(s, u, std::less<double>{}, w);
      };
    });
  } else if (a.algo == "segment") {
    bench.operator()<Segment>([](std::size_t n) {
      return [n](const auto& s, const auto& w) { return segment_opt(s, n, w); };
    });
  } else if (a.algo == "segment-count") {
    bench.operator()<Segment>([m](std::size_t n) {
      return [n, m](const auto& s, const auto& w) { return segment_fixed_count(s, n, std::min(m, n), std::min(m, n), w); };
    });
  } else if (a.algo == "segment-minlen") {
    bench.operator()<Segment>([m](std::size_t n) {
      return [n, m](const auto& s, const auto& w) {
        return segment_min_length(s, n, Acceptance::at_least(static_cast<long>(m)), w);
      };
    });
  } else if (a.algo == "nw") {
    bench.operator()<Step>([](std::size_t n) {
      return [n](const auto& s, const auto& w) { return nw_align(s, n, n, w); };
    });
  } else if (a.algo == "nw-sum") {
    bench.operator()<Step>([](std::size_t n) {
      return [n](const auto& s, const auto& w) { return nw_align_sum_constrained(s, n, n, n, w); };
    });
  } else if (a.algo == "nw-max") {
    bench.operator()<Step>([](std::size_t n) {
      return [n](const auto& s, const auto& w) { return nw_align_max_constrained(s, n, n, n / 2, w); };
    });
  } else if (a.algo == "events") {
    bench.operator()<Event>([m](std::size_t n) {
      return [n, m](const auto& s, const auto& w) { return events_m_of_n(s, n, m, w); };
    });
  } else {
    throw UsageError("unknown --algo '" + a.algo +
                     "' (combinations, lis, segment, segment-count, segment-minlen, nw, nw-sum, nw-max, events)");
  }
  doc["result"] = table;
  doc["oracle"] = oracle_skipped("bench does not verify");
  if (!a.common.table_path.empty()) write_table(a.common.table_path, {"n", "ops", "seconds"}, rows);
  return doc;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semiring-polymorphic dynamic programming", "semiring-dp"};
  app.require_subcommand(1);

  SegmentArgs seg;
  auto* segment = app.add_subcommand("segment", "segmented regression of a single-column CSV series");
  add_common(segment, seg.common, "viterbi:minplus");
  segment->add_option("input", seg.input, "CSV file")->required();
  segment->add_option("--count", seg.count, "exact number of segments");
  segment->add_option("--count-range", seg.count_range, "segment count range lo,hi");
  segment->add_option("--min-length", seg.min_length, "shortest segment length (at least L)");
  segment->add_flag("--exact-min-length", seg.exact_min_length, "require the shortest segment to be exactly L");
  segment->add_option("--lambda", seg.lambda, "per-segment penalty")->capture_default_str();
  segment->add_option("--p", seg.p, "error exponent")->capture_default_str();
  segment->add_option("--model", seg.model, "constant or linear")->capture_default_str();
  segment->add_flag("--header", seg.header, "skip the first non-comment line");

  AlignArgs al;
  auto* align = app.add_subcommand("align", "Needleman-Wunsch alignment of two sequence files");
  add_common(align, al.common, "viterbi:minplus");
  align->add_option("first", al.first, "first sequence file")->required();
  align->add_option("second", al.second, "second sequence file")->required();
  align->add_option("--match", al.match, "cost of aligning equal symbols")->capture_default_str();
  align->add_option("--mismatch", al.mismatch, "cost of aligning different symbols")->capture_default_str();
  align->add_option("--gap", al.gap, "cost of an insertion or deletion")->capture_default_str();
  align->add_flag("--count-paths", al.count_paths, "count alignments (counting semiring)");
  align->add_option("--max-misalign", al.max_misalign, "bound on max |i - j| over the path");
  align->add_option("--sum-misalign", al.sum_misalign, "bound on the sum of |i - j| over the path");
  align->add_flag("--sweep", al.sweep, "time prefixes of doubling size");

  EventsArgs ev;
  auto* events = app.add_subcommand("events", "probability that exactly M of N independent events occur");
  add_common(events, ev.common, "prob");
  events->add_option("input", ev.input, "one probability per line")->required();
  events->add_option("--m", ev.m, "number of occurring events")->required();
  events->add_option("--mode", ev.mode, "prob or viterbi")->capture_default_str();

  LisArgs li;
  auto* lis_cmd = app.add_subcommand("lis", "longest chain sub-sequence");
  add_common(lis_cmd, li.common, "viterbi:maxplus");
  lis_cmd->add_option("input", li.input, "one number per line")->required();
  lis_cmd->add_option("--relation", li.relation, "lt, le or subset-demo")->capture_default_str();
  lis_cmd->add_flag("--header", li.header, "skip the first non-comment line");

  BenchArgs be;
  auto* bench = app.add_subcommand("bench", "operation counts and timings over instance sizes");
  add_common(bench, be.common, "minplus");
  bench->add_option("--algo", be.algo, "algorithm to time")->capture_default_str();
  bench->add_option("--sizes", be.sizes, "comma-separated sizes")->capture_default_str();
  bench->add_option("--m", be.m, "second size parameter (M or L)")->capture_default_str();
  bench->add_option("--seed", be.seed, "weight seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "semiring-dp: " << e.what() << "\n";
    return kUsage;
  }

  int exit_code = kOk;
  try {
    Json doc;
    std::string out_path;
    if (segment->parsed()) {
      doc = cmd_segment(seg, exit_code);
      out_path = seg.common.out_path;
    } else if (align->parsed()) {
      doc = cmd_align(al, align->count("--semiring") > 0, exit_code);
      out_path = al.common.out_path;
    } else if (events->parsed()) {
      doc = cmd_events(ev, events->count("--semiring") > 0, exit_code);
      out_path = ev.common.out_path;
    } else if (lis_cmd->parsed()) {
      doc = cmd_lis(li, exit_code);
      out_path = li.common.out_path;
    } else {
      doc = cmd_bench(be);
      out_path = be.common.out_path;
    }
    const std::string text = dump_canonical(doc);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream os(out_path);
      if (!os) throw DataError("cannot write " + out_path);
      os << text;
    }
    if (exit_code == kOracleFailed) err << "semiring-dp: oracle check failed: " << doc["oracle"]["reason"].get<std::string>() << "\n";
    return exit_code;
  } catch (const UsageError& e) {
    err << "semiring-dp: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << "semiring-dp: " << e.what() << "\n";
    return kData;
  } catch (const std::invalid_argument& e) {
    err << "semiring-dp: " << e.what() << "\n";
    return kData;
  } catch (const std::overflow_error& e) {
    err << "semiring-dp: " << e.what() << "\n";
    return kData;
  }
}

}  // namespace sdp::cli
