#include "bessel_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "bessel/dual.hpp"
#include "bessel/error.hpp"
#include "bessel/hopf.hpp"
#include "bessel/io.hpp"
#include "bessel/operad.hpp"
#include "bessel/poset.hpp"
#include "bessel/verify.hpp"

namespace bessel::cli {

namespace {

using io::json;

constexpr std::size_t kMaxLabels = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  bool json = false;
  bool force = false;
};

void guard(const Settings& s, std::size_t n) {
  if (n > kMaxLabels && !s.force)
    throw UsageError("refusing " + std::to_string(n) + " labels (limit " +
                     std::to_string(kMaxLabels) + "); pass --force to override");
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

LabelSet labels_arg(const Settings& s, const std::string& text) {
  LabelSet l = parse_label_list(text);
  guard(s, l.size());
  return l;
}

Element element_arg(const Settings& s, const std::string& text) {
  Element x = io::parse_element(text);
  guard(s, x.labels().size());
  return x;
}

DualElement dual_arg(const Settings& s, const std::string& text) {
  DualElement x = io::parse_dual(text);
  guard(s, x.labels().size());
  return x;
}

std::string check_line(const verify::CheckResult& r) {
  std::string line = std::string(r.passed ? "PASS " : "FAIL ") + r.suite + ": " + r.name + " (" +
                     std::to_string(r.cases) + " cases)";
  if (!r.passed) line += "\n  counterexample: " + r.counterexample;
  return line;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings settings;
  CLI::App app{"Exact computations in the Bessel operad on forests of binary trees", "bessel"};
  app.require_subcommand(1);
  app.add_flag("--json", settings.json, "Structured JSON output");
  app.add_flag("--force", settings.force, "Allow more than 8 labels");

  std::function<int()> action;

  // enum
  auto* en = app.add_subcommand("enum", "List the forests on a label set");
  std::string en_labels;
  std::optional<std::size_t> en_degree;
  en->add_option("--labels", en_labels, "Comma-separated labels")->required();
  en->add_option("--degree", en_degree, "Number of inner vertices");
  en->callback([&] {
    action = [&] {
      const LabelSet l = labels_arg(settings, en_labels);
      if (en_degree && *en_degree >= l.size())
        throw UsageError("--degree must be below the number of labels");
      const auto all = enumerate_forests(l, en_degree);
      if (settings.json) {
        json fs = json::array();
        for (const auto& f : all) fs.push_back(f.text());
        print(out, {{"labels", io::to_json(l)},
                    {"degree", en_degree ? json(*en_degree) : json(nullptr)},
                    {"count", all.size()},
                    {"forests", fs}});
      } else {
        for (const auto& f : all) out << f.text() << '\n';
      }
      return kOk;
    };
  });

  // count
  auto* ct = app.add_subcommand("count", "Count forests on n labels");
  std::size_t ct_n = 0;
  bool ct_by_degree = false;
  ct->add_option("--n", ct_n, "Number of labels")->required()->check(CLI::PositiveNumber);
  ct->add_flag("--by-degree", ct_by_degree, "Split the count by number of inner vertices");
  ct->callback([&] {
    action = [&] {
      if (ct_n > 64 && !settings.force) throw UsageError("--n above 64 needs --force");
      const Integer total = count_forests(ct_n);
      const auto by = count_by_degree(ct_n);
      if (settings.json) {
        json j{{"n", ct_n}, {"count", total.get_str()}};
        if (ct_by_degree) {
          json b = json::array();
          for (const auto& c : by) b.push_back(c.get_str());
          j["by_degree"] = b;
        }
        print(out, j);
      } else if (ct_by_degree) {
        for (std::size_t k = 0; k < by.size(); ++k) out << k << ' ' << by[k].get_str() << '\n';
      } else {
        out << total.get_str() << '\n';
      }
      return kOk;
    };
  });

  // compose
  auto* cp = app.add_subcommand("compose", "Operadic composition x o_slot y");
  std::string cp_x, cp_y, cp_slot;
  cp->add_option("--x", cp_x, "Outer element")->required();
  cp->add_option("--slot", cp_slot, "Label of x to substitute")->required();
  cp->add_option("--y", cp_y, "Inner element")->required();
  cp->callback([&] {
    action = [&] {
      const Element x = element_arg(settings, cp_x), y = element_arg(settings, cp_y);
      guard(settings, x.labels().size() + y.labels().size() - 1);
      const Element r = operad::compose(x, Label(cp_slot), y);
      if (settings.json)
        print(out, io::to_json(r));
      else
        out << to_string(r) << '\n';
      return kOk;
    };
  });

  // coprod
  auto* co = app.add_subcommand("coprod", "Coproduct of an element");
  std::string co_x;
  co->add_option("--x", co_x, "Element")->required();
  co->callback([&] {
    action = [&] {
      const TensorElement d = hopf::coproduct(element_arg(settings, co_x));
      if (settings.json)
        print(out, io::to_json(d));
      else
        out << to_string(d) << '\n';
      return kOk;
    };
  });

  // dualprod
  auto* dp = app.add_subcommand("dualprod", "Product in the dual algebra");
  std::string dp_a, dp_b;
  dp->add_option("--a", dp_a, "Left dual element")->required();
  dp->add_option("--b", dp_b, "Right dual element")->required();
  dp->callback([&] {
    action = [&] {
      const DualElement p = dual::product(dual_arg(settings, dp_a), dual_arg(settings, dp_b));
      if (settings.json)
        print(out, io::to_json(p));
      else
        out << to_string(p) << '\n';
      return kOk;
    };
  });

  // poset
  auto* ps = app.add_subcommand("poset", "Forest poset: Hasse diagram or interval");
  ps->require_subcommand(1);
  std::string ps_labels, ps_lower, ps_upper;
  bool ps_dot = false;
  auto emit_poset = [&](const std::vector<Forest>& nodes, const std::vector<poset::Edge>& edges) {
    if (ps_dot) {
      out << poset::to_dot(nodes, edges);
    } else if (settings.json) {
      json n = json::array(), e = json::array();
      for (const auto& f : nodes) n.push_back(f.text());
      for (const auto& x : edges) e.push_back({x.lower.text(), x.upper.text()});
      print(out, {{"nodes", n}, {"edges", e}});
    } else {
      for (const auto& x : edges) out << x.lower.text() << " < " << x.upper.text() << '\n';
    }
  };
  auto* hs = ps->add_subcommand("hasse", "Cover relations of the poset on a label set");
  hs->add_option("--labels", ps_labels, "Comma-separated labels")->required();
  hs->add_flag("--dot", ps_dot, "Graphviz output");
  hs->callback([&] {
    action = [&] {
      const auto nodes = enumerate_forests(labels_arg(settings, ps_labels));
      emit_poset(nodes, poset::hasse(nodes));
      return kOk;
    };
  });
  auto* iv = ps->add_subcommand("interval", "Interval [lower, upper]; defaults to [minimum, comb]");
  iv->add_option("--labels", ps_labels, "Comma-separated labels")->required();
  iv->add_option("--lower", ps_lower, "Lower forest");
  iv->add_option("--upper", ps_upper, "Upper forest");
  iv->add_flag("--dot", ps_dot, "Graphviz output");
  iv->callback([&] {
    action = [&] {
      const LabelSet l = labels_arg(settings, ps_labels);
      const Forest lo = ps_lower.empty() ? Forest::minimum(l) : parse_forest(ps_lower);
      const Forest hi = ps_upper.empty() ? Forest({comb_tree(l)}) : parse_forest(ps_upper);
      if (lo.labels() != l || hi.labels() != l)
        throw UsageError("--lower and --upper must be forests on --labels");
      const auto nodes = poset::interval(lo, hi);
      emit_poset(nodes, poset::hasse(nodes));
      return kOk;
    };
  });

  // verify
  auto* vf = app.add_subcommand("verify", "Run invariant suites");
  std::string vf_suite = "all";
  verify::Options vopt;
  vf->add_option("suite", vf_suite, "Suite to run")
      ->check(CLI::IsMember({"counting", "orient", "operad", "relations", "hopf", "gamma", "dual",
                             "all"}));
  vf->add_option("--max-size", vopt.max_size, "Largest exhaustive label-set size")
      ->check(CLI::Range(1, 8));
  vf->add_option("--seed", vopt.seed, "Seed for randomized checks");
  vf->add_option("--samples", vopt.samples, "Randomized cases per check");
  vf->callback([&] {
    action = [&] {
      guard(settings, vopt.max_size + 2);
      const std::map<std::string, std::function<verify::Report(const verify::Options&)>> suites{
          {"counting", verify::counting}, {"orient", verify::orient},
          {"operad", verify::operad},     {"relations", verify::relations},
          {"hopf", verify::hopf},         {"gamma", verify::gamma},
          {"dual", verify::dual},         {"all", verify::all}};
      const auto report = suites.at(vf_suite)(vopt);
      if (settings.json) {
        json checks = json::array();
        for (const auto& r : report)
          checks.push_back({{"suite", r.suite},
                            {"check", r.name},
                            {"cases", r.cases},
                            {"passed", r.passed},
                            {"counterexample", r.passed ? json(nullptr) : json(r.counterexample)}});
        print(out, {{"passed", verify::passed(report)}, {"checks", checks}});
      } else {
        for (const auto& r : report) out << check_line(r) << '\n';
      }
      return verify::passed(report) ? kOk : kVerificationFailed;
    };
  });

  // experiment
  auto* ex = app.add_subcommand("experiment", "Numerical experiments");
  ex->require_subcommand(1);
  auto* gr = ex->add_subcommand("generation-rank", "Rank of the Y-monomial span in each degree");
  std::string gr_labels;
  std::optional<std::size_t> gr_degree;
  gr->add_option("--labels", gr_labels, "Comma-separated labels")->required();
  gr->add_option("--degree", gr_degree, "Degree (all degrees when omitted)");
  gr->callback([&] {
    action = [&] {
      const LabelSet l = labels_arg(settings, gr_labels);
      if (gr_degree && *gr_degree >= l.size())
        throw UsageError("--degree must be below the number of labels");
      std::vector<dual::RankReport> reports;
      if (gr_degree) {
        reports.push_back(dual::generation_rank(l, *gr_degree));
      } else {
        for (std::size_t k = 0; k < l.size(); ++k) reports.push_back(dual::generation_rank(l, k));
      }
      if (settings.json) {
        if (reports.size() == 1) {
          print(out, io::to_json(reports.front()));
        } else {
          json arr = json::array();
          for (const auto& r : reports) arr.push_back(io::to_json(r));
          print(out, arr);
        }
      } else {
        for (const auto& r : reports)
          out << "degree " << r.degree << ": rank " << r.rank << " of " << r.dim.get_str() << " ("
              << r.monomials.size() << " monomials)\n";
      }
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace bessel::cli
