#include "currmod/api.hpp"

#include "currmod/error.hpp"

#include <algorithm>
#include <sstream>

namespace currmod {

namespace {

std::vector<int> mask_to_indices(RootMask m, std::size_t count) {
  std::vector<int> out;
  for (std::size_t i = 0; i < count; ++i)
    if (m & (RootMask(1) << i)) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

struct FactorSpec {
  bool dense = false;
  std::vector<long> hw;
  Rat dense_lambda, dense_tau;
  Rat point;
};

// Factors are comma separated, but hw/dense parameters also use commas;
// a factor ends at the first comma after its '@'.
std::vector<std::string> split_factors(const std::string& desc) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : desc) {
    if (ch == ',' && cur.find('@') != std::string::npos) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

FactorSpec parse_factor(const std::string& text) {
  auto at = text.rfind('@');
  if (at == std::string::npos)
    fail(ErrorCode::bad_descriptor, "factor '" + text + "' is missing '@point'");
  auto point = parse_rat(text.substr(at + 1));
  if (!point) fail(ErrorCode::bad_descriptor, "bad evaluation point in '" + text + "'");
  std::string head = text.substr(0, at);
  FactorSpec f;
  f.point = *point;
  if (head.rfind("hw:", 0) == 0) {
    for (const auto& c : split(head.substr(3), ',')) {
      auto v = parse_rat(c);
      if (!v || !is_integer(*v) || *v < 0)
        fail(ErrorCode::bad_descriptor, "bad highest-weight coordinate '" + c + "'");
      f.hw.push_back(to_long(*v));
    }
    if (f.hw.empty()) fail(ErrorCode::bad_descriptor, "empty highest weight in '" + text + "'");
  } else if (head.rfind("dense:", 0) == 0) {
    auto params = split(head.substr(6), ',');
    if (params.size() != 2)
      fail(ErrorCode::bad_descriptor, "dense factor needs 'dense:<lambda>,<tau>'");
    auto l = parse_rat(params[0]), t = parse_rat(params[1]);
    if (!l || !t) fail(ErrorCode::bad_descriptor, "bad dense parameters in '" + text + "'");
    f.dense = true;
    f.dense_lambda = *l;
    f.dense_tau = *t;
  } else {
    fail(ErrorCode::bad_descriptor, "unknown factor kind in '" + text + "'");
  }
  return f;
}

} // namespace

RootsReport roots_report(const std::string& type) {
  auto rs = build_root_system(type);
  RootsReport r;
  r.type = rs->type_name();
  for (std::size_t i = 0; i < rs->count(); ++i) {
    r.roots.push_back(rs->roots[i]);
    r.heights.push_back(rs->height(static_cast<int>(i)));
  }
  r.cartan = rs->cartan;
  for (int i = 0; i < rs->rank; ++i) {
    std::vector<Rat> row;
    for (int j = 0; j < rs->rank; ++j) row.push_back(rs->gram.at(i, j));
    r.gram.push_back(std::move(row));
  }
  return r;
}

ParabolicsReport parabolics_report(const std::string& type) {
  auto rs = build_root_system(type);
  ParabolicsReport out;
  out.type = rs->type_name();
  auto all = enumerate_parabolics(rs);
  out.scan_count = all.size();
  out.certificate_count = parabolic_masks_from_certificates(*rs).size();
  for (const auto& p : all) {
    ParabolicEntry e;
    e.members_mask = p.members;
    e.members = mask_to_indices(p.members, rs->count());
    e.base = p.base;
    for (std::size_t k = 0; k < p.base.size(); ++k)
      if (p.t_mask & (1u << k)) e.t_set.push_back(p.base[k]);
    e.levi = mask_to_indices(p.levi_mask(), rs->count());
    e.raise_set = mask_to_indices(p.raise_mask(), rs->count());
    e.lower_set = mask_to_indices(p.lower_mask(), rs->count());
    out.entries.push_back(std::move(e));
  }
  return out;
}

InduceReport induce_report(const std::string& type, const std::string& algebra,
                           const std::string& parabolic, const std::string& w_desc, int depth) {
  if (depth < 0) fail(ErrorCode::bad_descriptor, "depth must be non-negative");
  auto rs = build_root_system(type);
  auto chev = make_chevalley_basis(rs);
  auto s = parse_algebra(algebra);
  if (parabolic != "borel")
    fail(ErrorCode::unsupported_type, "only the borel parabolic is exposed on the CLI");
  ParabolicSet p = borel_parabolic(rs);

  if (w_desc.rfind("hw:", 0) != 0)
    fail(ErrorCode::bad_descriptor, "W descriptor must be 'hw:<coords per character>'");
  std::vector<long> coords;
  for (const auto& c : split(w_desc.substr(3), ',')) {
    auto v = parse_rat(c);
    if (!v || !is_integer(*v))
      fail(ErrorCode::bad_descriptor, "bad weight coordinate '" + c + "'");
    coords.push_back(to_long(*v));
  }
  auto chars = characters(s);
  if (coords.size() != chars.size() * static_cast<std::size_t>(rs->rank))
    fail(ErrorCode::bad_descriptor,
         "expected " + std::to_string(chars.size() * rs->rank) + " weight coordinates (rank " +
             std::to_string(rs->rank) + " x " + std::to_string(chars.size()) + " characters)");

  auto w = borel_weight_module(chev, p, s, coords);
  InducedModule im(chev, p, s, w);

  InduceReport rep;
  rep.type = rs->type_name();
  rep.algebra = s->descriptor;
  rep.parabolic = parabolic;
  rep.w_desc = w_desc;
  rep.depth = depth;
  rep.exact = im.exact();
  for (const auto& gamma : im.support_offsets(depth)) {
    InduceRow row;
    row.gamma = gamma;
    row.ht = im.height_of(gamma);
    row.dim_m = static_cast<long>(im.verma_weight_basis(gamma).size());
    row.dim_l = im.simple_quotient_mult(gamma);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

TensorModule parse_tensor(const std::string& factors_desc, int window) {
  auto parts = split_factors(factors_desc);
  if (parts.empty()) fail(ErrorCode::bad_descriptor, "empty factor list");
  std::vector<FactorSpec> specs;
  for (const auto& p : parts) specs.push_back(parse_factor(p));

  int rank = -1;
  for (const auto& f : specs) {
    int r = f.dense ? 1 : static_cast<int>(f.hw.size());
    if (rank == -1) rank = r;
    if (r != rank)
      fail(ErrorCode::bad_descriptor, "factors disagree on the ambient rank");
  }
  auto rs = build_root_system(Series::A, rank);
  auto chev = make_chevalley_basis(rs);

  std::vector<Rat> points;
  for (const auto& f : specs)
    if (std::find(points.begin(), points.end(), f.point) == points.end())
      points.push_back(f.point);
  auto s = make_points_algebra(points);
  auto chars = characters(s);

  std::vector<EvaluationFactor> factors;
  for (const auto& f : specs) {
    EvaluationFactor ef;
    ef.base = f.dense ? dense_sl2(chev, f.dense_lambda, f.dense_tau, window)
                      : highest_weight_module(chev, f.hw);
    std::size_t which = 0;
    while (points[which] != f.point) ++which;
    ef.point = chars[which];
    factors.push_back(std::move(ef));
  }
  return tensor_eval(std::move(factors));
}

EvalmodReport evalmod_report(const std::string& factors_desc, int window) {
  TensorModule t = parse_tensor(factors_desc, window);
  EvalmodReport rep;
  rep.factors_desc = factors_desc;
  rep.window = window;
  rep.windowed = !t.diagram().is_finite();
  rep.canonical_form = iso_canonical_form(t).rendered;
  std::vector<EvalmodRow> rows;
  for (const auto& [off, m] : t.diagram().mults) rows.push_back({off, m});
  std::sort(rows.begin(), rows.end(), [](const EvalmodRow& a, const EvalmodRow& b) {
    int ha = 0, hb = 0;
    for (int x : a.gamma) ha += x;
    for (int x : b.gamma) hb += x;
    if (ha != hb) return ha > hb;
    return a.gamma < b.gamma;
  });
  rep.rows = std::move(rows);
  return rep;
}

ClassifyReport classify_report(const std::string& factors_desc, int window) {
  TensorModule t = parse_tensor(factors_desc, window);
  auto c = classify_exact(t);
  ClassifyReport rep;
  rep.factors_desc = factors_desc;
  const auto& rs = *c.rs;
  for (std::size_t r = 0; r < rs.count(); ++r) {
    if (c.phi_f & (RootMask(1) << r)) rep.phi_f.push_back(rs.roots[r]);
    if (c.phi_i & (RootMask(1) << r)) rep.phi_i.push_back(rs.roots[r]);
  }
  Trichotomy tri = trichotomy(c);
  rep.case_name = trichotomy_name(tri);
  if (auto* p = std::get_if<ParabolicSet>(&tri)) {
    rep.p_members = mask_to_indices(p->members, rs.count());
    rep.p_base = p->base;
    for (std::size_t k = 0; k < p->base.size(); ++k)
      if (p->t_mask & (1u << k)) rep.p_t_set.push_back(p->base[k]);
  }
  return rep;
}

} // namespace currmod
