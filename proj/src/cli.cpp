// Copyright 2026 The squarecodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sqc/bounds.hpp"
#include "sqc/certify.hpp"
#include "sqc/error.hpp"
#include "sqc/evalcode.hpp"
#include "sqc/families.hpp"
#include "sqc/json_io.hpp"

namespace sqc {

namespace {

struct Selector {
  std::string family;
  std::uint32_t q = 0;
  std::size_t m = 2;
  std::optional<std::uint64_t> d;
  std::string s;
  std::string weights;
  std::string file;
};

struct Options {
  std::string format;  // empty: the verb's default
  std::string effort = "certify";
  std::optional<std::uint64_t> budget;
  unsigned threads = 0;
  std::string dump_matrix;
};

struct Built {
  MonomialSet set;
  std::string family;
  std::string d_design;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

MonomialSet load_set(const std::string& path) { return monomial_set_from_json(parse_json(read_file(path))); }

std::vector<Rational> parse_weights(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::uint64_t need_d(const Selector& sel) {
  require(sel.d.has_value(), ErrorKind::InvalidArgument, "--d is required for family " + sel.family);
  return *sel.d;
}

void need_q(const Selector& sel) {
  require(sel.q != 0, ErrorKind::InvalidArgument, "--q is required for family " + sel.family);
}

Built build(const Selector& sel) {
  const std::string& f = sel.family;
  if (f == "file") {
    require(!sel.file.empty(), ErrorKind::InvalidArgument, "--file is required for family file");
    return {load_set(sel.file), "file", ""};
  }
  need_q(sel);
  if (f == "rm") {
    require(!sel.s.empty(), ErrorKind::InvalidArgument, "--s is required for family rm");
    const Rational s = parse_rational(sel.s);
    require(s.denominator() == 1 && s >= 0, ErrorKind::RangeError, "rm degree s must be a non-negative integer");
    const auto deg = static_cast<std::uint64_t>(s.numerator());
    MonomialSet a = reed_muller_set(sel.q, sel.m, deg);
    const std::string dd = deg <= sel.m * (sel.q - 1ull) ? std::to_string(rm_min_distance(sel.q, sel.m, deg)) : "1";
    return {std::move(a), "rm", dd};
  }
  if (f == "wrm") {
    require(!sel.s.empty() && !sel.weights.empty(), ErrorKind::InvalidArgument, "--s and --weights are required for family wrm");
    return {weighted_rm_set(sel.q, sel.m, parse_rational(sel.s), parse_weights(sel.weights)), "wrm", ""};
  }
  if (f == "hyp") {
    const auto d = need_d(sel);
    return {hyperbolic_set(sel.q, sel.m, d), "hyp", std::to_string(d)};
  }
  if (f == "halfhyp") {
    const auto d = need_d(sel);
    return {half_hyperbolic_set(sel.q, sel.m, d), "halfhyp", std::to_string(d)};
  }
  if (f == "wrm-even-b1" || f == "wrm-even-b2") {
    require(sel.m == 2, ErrorKind::InvalidArgument, "the even-d WRM designs need m = 2");
    const auto d = need_d(sel);
    return {wrm_even_optimal_set(sel.q, d, f == "wrm-even-b1" ? WrmVariant::b1 : WrmVariant::b2), f, std::to_string(d)};
  }
  fail(ErrorKind::InvalidArgument, "unknown family '" + f + "'");
}

Effort parse_effort(const std::string& e) {
  if (e == "fb_only" || e == "fb-only") return Effort::fb_only;
  if (e == "certify") return Effort::certify;
  if (e == "exhaustive") return Effort::exhaustive;
  fail(ErrorKind::InvalidArgument, "unknown effort '" + e + "'");
}

Limits make_limits(const Options& o) {
  Limits l;
  if (const char* env = std::getenv("SQC_BUDGET")) {
    const Rational b = parse_rational(env);
    require(b.denominator() == 1 && b > 0, ErrorKind::InvalidArgument, "SQC_BUDGET must be a positive integer");
    l.max_classes = static_cast<std::uint64_t>(b.numerator());
  }
  if (o.budget) l.max_classes = *o.budget;
  l.threads = o.threads;
  return l;
}

void write_exponents(std::ostream& out, const MonomialSet& a, char sep) {
  for (const auto& v : a) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << sep;
      out << v[i];
    }
    out << '\n';
  }
}

void emit_set(std::ostream& out, const MonomialSet& a, const std::string& format) {
  if (format == "json") {
    out << to_json(a).dump() << '\n';
  } else if (format == "csv") {
    write_exponents(out, a, ',');
  } else {
    out << "q=" << a.q() << " m=" << a.m() << " size=" << a.size() << '\n';
    write_exponents(out, a, ' ');
  }
}

void maybe_dump(const Options& o, const MonomialSet& a, const Limits& limits) {
  if (o.dump_matrix.empty()) return;
  std::ofstream f(o.dump_matrix);
  require(static_cast<bool>(f), ErrorKind::InvalidArgument, "cannot write '" + o.dump_matrix + "'");
  write_matrix(f, generator_matrix(a, limits));
}

void add_selector(CLI::App* cmd, Selector& sel) {
  cmd->add_option("--family", sel.family, "rm|wrm|hyp|halfhyp|wrm-even-b1|wrm-even-b2|file");
  cmd->add_option("--q", sel.q, "field size");
  cmd->add_option("--m", sel.m, "number of variables")->capture_default_str();
  cmd->add_option("--d", sel.d, "designed distance");
  cmd->add_option("--s", sel.s, "degree bound, integer or p/q");
  cmd->add_option("--weights", sel.weights, "comma-separated weights, e.g. 5,3");
  cmd->add_option("--file", sel.file, "MonomialSet JSON file");
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--effort", o.effort, "fb_only|certify|exhaustive");
  cmd->add_option("--budget", o.budget, "exhaustive search budget (message classes / search nodes)");
  cmd->add_option("--threads", o.threads, "worker threads, 0 = hardware concurrency");
  cmd->add_option("--dump-matrix", o.dump_matrix, "write the generator matrix to this file");
}

void emit_report(std::ostream& out, const Built& b, const ParamsReport& r, const std::string& format) {
  if (format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else if (format == "csv") {
    out << params_csv_header() << '\n' << params_csv_row(b.family, b.d_design, r) << '\n';
  } else {
    out << "[" << r.n << ", " << r.k << ", " << (r.d_exact ? std::to_string(*r.d_exact) : ">=" + std::to_string(r.fb))
        << "]_" << r.q << "  fb=" << r.fb << " source=" << to_string(r.d_source) << '\n';
    if (r.square)
      out << "square: [" << r.square->n << ", " << r.square->k << ", "
          << (r.square->d_exact ? std::to_string(*r.square->d_exact) : ">=" + std::to_string(r.square->fb)) << "]\n";
  }
}

int cmd_verify(const Selector& sel, const std::string& a_file, const std::string& b_file, std::optional<std::uint64_t> hyp,
               const std::string& region_file, const Options& o, std::ostream& out) {
  std::optional<ConvexRegion> region;
  if (!region_file.empty()) region = region_from_json(parse_json(read_file(region_file)));

  std::optional<MonomialSet> b;
  if (!b_file.empty()) b = load_set(b_file);
  std::optional<MonomialSet> a;
  if (!a_file.empty()) a = load_set(a_file);
  else if (!sel.family.empty()) a = build(sel).set;

  if (hyp) {
    require(!b, ErrorKind::InvalidArgument, "give either --b or --hyp, not both");
    const std::uint32_t q = a ? a->q() : sel.q;
    const std::size_t m = a ? a->m() : (region ? region->m : sel.m);
    require(q != 0, ErrorKind::InvalidArgument, "--q is required with --hyp and no A");
    b = hyperbolic_set(q, m, *hyp);
  }
  require(b.has_value(), ErrorKind::InvalidArgument, "verify needs --b FILE or --hyp D");
  if (!a) {
    require(region.has_value(), ErrorKind::InvalidArgument, "verify needs A (--a, a family, or --region)");
    a = region_lattice_points(*region, b->q(), make_limits(o));
  }
  require(a->q() == b->q() && a->m() == b->m(), ErrorKind::MismatchedAmbient, "A and B live over different (q, m)");
  require(a->reduced() && b->reduced(), ErrorKind::NotReduced, "A and B must be reduced");

  const auto violation = first_square_violation(*a, *b);
  const MonomialSet sq = square_support(*a);
  const std::uint64_t sq_fb = sq.empty() ? 0 : footprint_bound(sq).value;
  std::optional<bool> alg1;
  if (region) alg1 = algorithm1_verify(*region, *b, make_limits(o));
  const bool pass = !violation.has_value();

  if (o.format == "json") {
    Json j{{"pass", pass}, {"k", a->size()}, {"square_k", sq.size()}, {"square_fb", sq_fb}};
    j["b_fb"] = b->empty() ? Json(nullptr) : Json(footprint_bound(*b).value);
    j["necessary_condition"] = necessary_condition_check(*a, *b);
    j["algorithm1"] = alg1 ? Json(*alg1) : Json(nullptr);
    if (violation) {
      auto vec = [](const ExpVec& v) { return std::vector<std::uint32_t>(v.begin(), v.end()); };
      j["violation"] = Json{{"left", vec(violation->left)}, {"right", vec(violation->right)},
                            {"reduced_sum", vec(violation->reduced_sum)}};
    } else {
      j["violation"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << (pass ? "pass" : "fail") << " k=" << a->size() << " square_k=" << sq.size() << " square_fb=" << sq_fb;
    if (alg1) out << " algorithm1=" << (*alg1 ? "true" : "false");
    out << '\n';
    if (violation)
      out << "violation: " << violation->left.to_string() << " + " << violation->right.to_string() << " -> "
          << violation->reduced_sum.to_string() << " not in B\n";
  }
  return pass ? kExitOk : kExitCheckFailed;
}

ConvexRegion design_region(std::uint32_t q, std::uint64_t d) {
  if (d == 1) return halfspace_region({{1, 1}, Rational(2 * (static_cast<std::int64_t>(q) - 1))});
  if (d % 2 == 1) return halfspace_region({{1, 1}, Rational(static_cast<std::int64_t>(q - (d + 1) / 2))});
  return halfspace_region(wrm_even_witness(q, d, WrmVariant::b1));
}

int cmd_compare(std::uint32_t q, std::uint64_t d, const Options& o, std::ostream& out) {
  require(q != 0, ErrorKind::InvalidArgument, "--q is required");
  require(d >= 1 && d < std::uint64_t{q} * q, ErrorKind::RangeError, "compare needs 1 <= d < q^2");
  const Limits limits = make_limits(o);
  const Effort effort = parse_effort(o.effort);
  const MonomialSet target = hyperbolic_set(q, 2, d);

  struct Row {
    std::string family;
    ParamsReport report;
    bool alg1;
  };
  std::vector<Row> rows;
  rows.push_back({"halfhyp", params_report(half_hyperbolic_set(q, 2, d), effort, limits),
                  algorithm1_verify(product_region(2, d), target, limits)});
  if (d < q)
    rows.push_back({"best-wrm", params_report(best_wrm_square_design(q, d), effort, limits),
                    algorithm1_verify(design_region(q, d), target, limits)});
  std::uint64_t best = 0;
  for (const auto& r : rows) best = std::max(best, r.report.k);

  out << params_csv_header() << ",alg1,winner\n";
  for (const auto& r : rows)
    out << params_csv_row(r.family, std::to_string(d), r.report) << ',' << (r.alg1 ? "pass" : "fail") << ','
        << (r.report.k == best ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Effort effort = parse_effort(o.effort);
  struct Instance {
    std::string family;
    std::string d_design;
    MonomialSet set;
  };
  std::vector<Instance> rows;
  rows.push_back({"rm", "55", reed_muller_set(11, 2, 6)});
  rows.push_back({"hyp", "6", hyperbolic_set(11, 2, 6)});
  rows.push_back({"hyp", "55", hyperbolic_set(11, 2, 55)});
  rows.push_back({"wrm", "", weighted_rm_set(11, 2, 15, {5, 3})});
  rows.push_back({"wrm", "", weighted_rm_set(7, 2, 5, {3, 2})});
  rows.push_back({"halfhyp", "6", half_hyperbolic_set(11, 2, 6)});
  rows.push_back({"halfhyp", "12", half_hyperbolic_set(11, 2, 12)});
  rows.push_back({"best-wrm", "7", best_wrm_square_design(11, 7)});
  rows.push_back({"wrm-even-b1", "6", wrm_even_optimal_set(11, 6, WrmVariant::b1)});
  rows.push_back({"wrm-even-b2", "6", wrm_even_optimal_set(11, 6, WrmVariant::b2)});
  out << params_csv_header() << '\n';
  for (const auto& r : rows) out << params_csv_row(r.family, r.d_design, params_report(r.set, effort, limits)) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monomial evaluation codes with designed square distance", "sqc"};
  app.require_subcommand(1);

  Selector sel;
  Options opt;

  auto* construct = app.add_subcommand("construct", "print a family's exponent set");
  add_selector(construct, sel);
  add_common(construct, opt);

  auto* params = app.add_subcommand("params", "length, dimension and distance of a code and its square");
  add_selector(params, sel);
  add_common(params, opt);

  auto* square = app.add_subcommand("square", "print (A+A)_q");
  add_selector(square, sel);
  add_common(square, opt);

  auto* certify = app.add_subcommand("certify", "distance certificate for C_A");
  add_selector(certify, sel);
  add_common(certify, opt);

  std::string a_file, b_file, region_file;
  std::optional<std::uint64_t> hyp;
  auto* verify = app.add_subcommand("verify", "check (A+A)_q inside B");
  add_selector(verify, sel);
  add_common(verify, opt);
  verify->add_option("--a", a_file, "A as MonomialSet JSON");
  verify->add_option("--b", b_file, "B as MonomialSet JSON");
  verify->add_option("--hyp", hyp, "use B = Hyp_q(d, m)");
  verify->add_option("--region", region_file, "region JSON; also runs the half-integer region check");

  std::uint32_t cq = 0;
  std::uint64_t cd = 0;
  auto* compare = app.add_subcommand("compare", "HalfHyp versus the best weighted RM design");
  compare->add_option("--q", cq, "field size")->required();
  compare->add_option("--d", cd, "designed square distance")->required();
  add_common(compare, opt);

  auto* table = app.add_subcommand("table", "parameter table of the reference instances");
  add_common(table, opt);

  std::vector<const char*> argv{"sqc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  if (opt.format.empty())
    opt.format = verify->parsed() ? "text" : (compare->parsed() || table->parsed()) ? "csv" : "json";

  try {
    const Limits limits = make_limits(opt);
    if (construct->parsed()) {
      const Built b = build(sel);
      emit_set(out, b.set, opt.format);
      maybe_dump(opt, b.set, limits);
      return kExitOk;
    }
    if (params->parsed()) {
      const Built b = build(sel);
      emit_report(out, b, params_report(b.set, parse_effort(opt.effort), limits), opt.format);
      maybe_dump(opt, b.set, limits);
      return kExitOk;
    }
    if (square->parsed()) {
      const MonomialSet sq = square_support(build(sel).set);
      emit_set(out, sq, opt.format);
      maybe_dump(opt, sq, limits);
      return kExitOk;
    }
    if (certify->parsed()) {
      const Built b = build(sel);
      const CertifiedDistance cd2 = certified_min_distance(b.set, limits);
      if (opt.format == "json") {
        Json j{{"d", cd2.d}, {"exact", cd2.exact}, {"fb", footprint_bound(b.set).value}};
        j["certificate"] = cd2.exact ? to_json(cd2.certificate) : Json(nullptr);
        out << j.dump(2) << '\n';
      } else {
        out << (cd2.exact ? "d = " : "d >= ") << cd2.d << " (" << to_string(cd2.certificate.kind) << ")\n";
      }
      return kExitOk;
    }
    if (verify->parsed()) return cmd_verify(sel, a_file, b_file, hyp, region_file, opt, out);
    if (compare->parsed()) return cmd_compare(cq, cd, opt, out);
    if (table->parsed()) return cmd_table(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace sqc
