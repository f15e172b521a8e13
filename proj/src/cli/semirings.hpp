#pragma once

// Semiring selection by name. Each choice knows how to turn a raw numeric
// score on a decision label into a semiring value, which lets one generic
// recurrence call serve every semiring and the verification oracle.

#include <string>
#include <utility>
#include <vector>

#include "cli/io.hpp"
#include "cli/json_output.hpp"
#include "semiring_dp/labels.hpp"
#include "semiring_dp/semiring.hpp"
#include "semiring_dp/viterbi.hpp"

namespace sdp::cli {

inline Json label_json(std::size_t n) { return n; }
inline Json label_json(const Segment& s) { return Json::array({s.first, s.last}); }
inline Json label_json(const Step& s) {
  const char* op = s.kind == StepKind::match ? "M" : (s.kind == StepKind::deletion ? "D" : "I");
  return Json{{"op", op}, {"i", s.i}, {"j", s.j}};
}
inline Json label_json(const Event& e) { return Json{{"index", e.index}, {"occurs", e.occurs}}; }

/// Plain semiring: a score x maps to convert(x) regardless of the label.
template <Semiring S>
struct PlainChoice {
  using semiring_type = S;
  using base_type = S;
  static constexpr bool tupled = false;

  S s;
  value_t<S> (*convert)(double);

  const S& semiring() const { return s; }
  const S& base() const { return s; }
  template <class Label>
  value_t<S> lift(double x, const Label&) const { return convert(x); }
  template <class Label>
  value_t<S> base_lift(double x, const Label&) const { return convert(x); }
  const value_t<S>& score(const value_t<S>& v) const { return v; }
  Json witness_json(const value_t<S>&) const { return nullptr; }
};

/// viterbi:<base>: optimal score plus one witness label sequence.
template <SelectionSemiring B, class Label>
struct TupledChoice {
  using semiring_type = ViterbiSimpleSemiring<B, Label>;
  using base_type = B;
  static constexpr bool tupled = true;

  semiring_type s;

  const semiring_type& semiring() const { return s; }
  const B& base() const { return s.base(); }
  value_t<semiring_type> lift(double x, const Label& label) const { return s.lift(x, label); }
  value_t<B> base_lift(double x, const Label&) const { return x; }
  const value_t<B>& score(const value_t<semiring_type>& v) const { return v.score; }
  Json witness_json(const value_t<semiring_type>& v) const {
    Json out = Json::array();
    for (const auto& label : v.witness) out.push_back(label_json(label));
    return out;
  }
};

inline const std::vector<std::string>& semiring_names() {
  static const std::vector<std::string> names{
      "count",   "bool",       "prob",         "minplus",         "maxplus",         "maxtimes",
      "softmax", "bottleneck", "viterbi:minplus", "viterbi:maxplus", "viterbi:maxtimes", "viterbi:bottleneck"};
  return names;
}

/// Calls f(choice) with the semiring named `name`. Counting weighs every
/// label 1 and Boolean weighs every label true; the numeric semirings use
/// the score itself.
template <class Label, class F>
auto with_semiring(const std::string& name, F&& f) {
  constexpr auto identity = [](double x) { return x; };
  if (name == "count") return f(PlainChoice<Counting>{{}, [](double) { return Count{1}; }});
  if (name == "bool") return f(PlainChoice<Boolean>{{}, [](double) { return true; }});
  if (name == "prob") return f(PlainChoice<Real>{{}, identity});
  if (name == "minplus") return f(PlainChoice<MinPlus>{{}, identity});
  if (name == "maxplus") return f(PlainChoice<MaxPlus>{{}, identity});
  if (name == "maxtimes") return f(PlainChoice<MaxTimes>{{}, identity});
  if (name == "softmax") return f(PlainChoice<Softmax>{{}, identity});
  if (name == "bottleneck") return f(PlainChoice<Bottleneck>{{}, identity});
  if (name == "viterbi:minplus") return f(TupledChoice<MinPlus, Label>{});
  if (name == "viterbi:maxplus") return f(TupledChoice<MaxPlus, Label>{});
  if (name == "viterbi:maxtimes") return f(TupledChoice<MaxTimes, Label>{});
  if (name == "viterbi:bottleneck") return f(TupledChoice<Bottleneck, Label>{});
  std::string known;
  for (const auto& n : semiring_names()) known += (known.empty() ? "" : ", ") + n;
  throw UsageError("unknown semiring '" + name + "' (known: " + known + ")");
}

}  // namespace sdp::cli
