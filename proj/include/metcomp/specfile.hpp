#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metcomp/cauchy.hpp"
#include "metcomp/classify.hpp"

namespace metcomp {

// One requested computation from the query list of a spec file.
struct Query {
  enum class Kind { Classify, Leq, Meet, Join, Hom, Cone };
  Kind kind = Kind::Classify;
  std::vector<std::string> metric_args;  // named metrics, in order
  std::vector<Indecomposable> modules;   // hom: {X, Y}; cone: {X, Y}
  long long scalar = 0;                  // cone: the matrix entry
  long long line = 0;                    // source line, for reports
};

// Build instructions for a small-object chain.
struct CauchySpec {
  ThickDescriptor target;
  SplitObject start;
  long long steps = 4;
  std::string against;  // metric name; empty means constant(target)
};

// Parsed spec file: a ring, named thick subcategories, named metrics, an
// optional cauchy block, and the query list. Definition order is kept so
// commands can fall back to "the only metric" / "the first two metrics"
// when the query list is silent.
struct SpecFile {
  RingDescriptor ring;
  std::vector<std::pair<std::string, ThickDescriptor>> thicks;
  std::vector<std::pair<std::string, MetricNF>> metrics;
  std::vector<Query> queries;
  std::optional<CauchySpec> cauchy;

  const ThickDescriptor* thick(const std::string& name) const;
  const MetricNF* metric(const std::string& name) const;
};

// Line-oriented block grammar; README spells out every form. Errors raise
// ParseError with "line L, col C" and the violated rule.
SpecFile parse_specfile(const std::string& text);
SpecFile load_specfile(const std::string& path);

// Shared name grammars, also used for inline CLI arguments.
//   modules:  Z | Z/8 | P2 | Q0 | R((1:0),2) | [1,3]
//   points:   (0:1) | (1:0) | (1:2/3) over Q | (1:3) over F_q | labels
Indecomposable parse_module_name(const RingDescriptor& ring,
                                 const std::string& tok);
ProjPoint parse_point(const FieldDescriptor& f, const std::string& tok);

}  // namespace metcomp
