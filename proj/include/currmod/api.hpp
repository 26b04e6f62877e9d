#ifndef CURRMOD_API_HPP
#define CURRMOD_API_HPP

#include "currmod/classifier.hpp"
#include "currmod/induction.hpp"
#include "currmod/oracles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace currmod {

/// Structured results behind the CLI subcommands and the python bindings.
/// Everything is deterministically ordered.

struct RootsReport {
  std::string type;
  std::vector<RootCoords> roots; // canonical order
  std::vector<int> heights;
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<Rat>> gram;
};
RootsReport roots_report(const std::string& type);

struct ParabolicEntry {
  std::uint32_t members_mask;
  std::vector<int> members; // root indices
  std::vector<int> base;    // certificate Delta
  std::vector<int> t_set;   // subset of base (root indices)
  std::vector<int> levi, raise_set, lower_set;
};
struct ParabolicsReport {
  std::string type;
  std::size_t scan_count;        // brute-force subset scan
  std::size_t certificate_count; // via (Delta, T) certificates
  std::vector<ParabolicEntry> entries;
};
ParabolicsReport parabolics_report(const std::string& type);

struct InduceRow {
  OffsetVec gamma; // offset from the anchor weight of W
  long ht;
  long dim_m;
  long dim_l;
};
struct InduceReport {
  std::string type, algebra, parabolic, w_desc;
  int depth;
  bool exact; // false when W is windowed (values are lower bounds)
  std::vector<InduceRow> rows;
};
InduceReport induce_report(const std::string& type, const std::string& algebra,
                           const std::string& parabolic, const std::string& w_desc, int depth);

struct EvalmodRow {
  OffsetVec gamma;
  long mult;
};
struct EvalmodReport {
  std::string factors_desc;
  int window;
  bool windowed;
  std::string canonical_form;
  std::vector<EvalmodRow> rows;
};
EvalmodReport evalmod_report(const std::string& factors_desc, int window);

struct ClassifyReport {
  std::string factors_desc;
  std::vector<RootCoords> phi_f, phi_i;
  std::string case_name; // finite | dense | parabolic
  std::vector<int> p_members, p_base, p_t_set; // parabolic case only
};
ClassifyReport classify_report(const std::string& factors_desc, int window);

/// Factor-list parsing shared by evalmod/classify:
/// "hw:<coords>@<point>,dense:<lambda>,<tau>@<point>,...". The algebra S is
/// the points algebra over the evaluation points in order of first use.
TensorModule parse_tensor(const std::string& factors_desc, int window);

} // namespace currmod

#endif
