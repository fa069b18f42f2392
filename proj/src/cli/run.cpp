#include "mvg/cli/run.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mvg/algebra/coset.hpp"
#include "mvg/algebra/json_io.hpp"
#include "mvg/classify/verdict.hpp"
#include "mvg/core/axioms.hpp"
#include "mvg/core/error.hpp"
#include "mvg/core/isomorphism.hpp"
#include "mvg/core/json_io.hpp"
#include "mvg/srg/families.hpp"
#include "mvg/srg/graph_io.hpp"

namespace mvg::cli {
namespace {

using nlohmann::json;

struct Io {
  std::istream& in;
  std::ostream& out;
  bool json_mode = false;
  Limits limits;
  std::string output = "-";
};

std::string read_all(Io& io, const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << io.in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

json read_json(Io& io, const std::string& path) {
  try {
    return json::parse(read_all(io, path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": not valid JSON: " + e.what());
  }
}

void write(Io& io, const std::string& text) {
  if (io.output == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(io.output);
  if (!f) throw InputError("cannot write " + io.output);
  f << text;
}

void write_json(Io& io, const json& doc) { write(io, doc.dump(2) + "\n"); }

// Edge lists are long; keep them on one line.
void write_compact(Io& io, const json& doc) { write(io, doc.dump() + "\n"); }

std::string join(const std::vector<Element>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

int cmd_verify(Io& io, const std::string& path) {
  auto g = mvg_from_json(read_json(io, path));
  auto r = full_report(g);
  if (io.json_mode) {
    json ce = json::array();
    for (const auto& c : r.counterexamples)
      ce.push_back({{"axiom", c.axiom}, {"condition", c.condition}, {"witness", c.witness}});
    write_json(io, {{"all_pass", r.all_pass()},
                    {"associative", r.associative},
                    {"identity", r.has_identity},
                    {"inverse", r.has_inverses},
                    {"involutive", r.involutive},
                    {"reciprocity", r.reciprocity_holds},
                    {"counterexamples", ce}});
  } else {
    std::ostringstream s;
    auto line = [&](const char* name, bool ok) { s << std::left << std::setw(13) << name << (ok ? "pass" : "FAIL") << '\n'; };
    s << "order " << g.order() << ", valency " << g.valency() << '\n';
    line("associative", r.associative);
    line("identity", r.has_identity);
    line("inverse", r.has_inverses);
    line("involutive", r.involutive);
    line("reciprocity", r.reciprocity_holds);
    for (const auto& c : r.counterexamples)
      s << "  " << c.axiom << ": " << c.condition << " at (" << join(c.witness) << ")\n";
    write(io, s.str());
  }
  return r.all_pass() ? kOk : kNegative;
}

int cmd_iso(Io& io, const std::string& a, const std::string& b) {
  auto g1 = mvg_from_json(read_json(io, a));
  auto g2 = mvg_from_json(read_json(io, b));
  auto f = are_isomorphic(g1, g2);
  if (io.json_mode) {
    json doc{{"isomorphic", f.has_value()}};
    if (f) doc["map"] = *f;
    write_json(io, doc);
  } else if (f) {
    std::ostringstream s;
    s << "isomorphic:";
    for (Element x = 0; x < f->size(); ++x) s << ' ' << g1.names()[x] << "->" << g2.names()[(*f)[x]];
    write(io, s.str() + "\n");
  } else {
    write(io, "not isomorphic\n");
  }
  return f ? kOk : kNegative;
}

int cmd_build_coset(Io& io, const std::string& group_path, const std::string& action_path) {
  auto g = algebra::group_from_json(read_json(io, group_path), io.limits);
  auto gens = algebra::generators_from_json(g, read_json(io, action_path));
  auto a = algebra::close_action(g, gens, io.limits);
  write_json(io, to_json(algebra::coset_group(g, a)));
  return kOk;
}

std::int64_t to_int(const std::string& s, const char* what) {
  try {
    std::size_t pos;
    auto v = std::stoll(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw InputError(std::string(what) + ": expected an integer, got '" + s + "'");
}

int cmd_build_graph(Io& io, const std::string& name, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n, const char* usage) {
    if (args.size() != n) throw InputError("usage: build graph " + name + " " + usage);
  };
  auto arg = [&](std::size_t i) { return to_int(args[i], name.c_str()); };
  const auto& lim = io.limits;
  if (name == "tournament") {
    need(1, "Q");
    write_compact(io, srg::to_json(srg::paley_tournament(arg(0), lim)));
    return kOk;
  }
  srg::Graph g;
  if (name == "paley") {
    need(1, "Q");
    g = srg::paley_graph(arg(0), lim);
  } else if (name == "cliques") {
    need(3, "P T S");
    g = srg::clique_union(arg(0), arg(1), arg(2), lim);
  } else if (name == "grid") {
    need(1, "Q");
    g = srg::grid_graph(arg(0), lim);
  } else if (name == "vls") {
    need(3, "P C T");
    g = srg::vanlint_schrijver(arg(0), arg(1), arg(2), lim);
  } else if (name == "polar") {
    need(3, "Q E +|-");
    if (args[2] != "+" && args[2] != "-") throw InputError("polar: epsilon must be + or -");
    g = srg::affine_polar(arg(0), arg(1), args[2] == "+" ? 1 : -1, lim);
  } else if (name == "polar-plus-comp") {
    need(1, "E");
    g = srg::affine_polar_plus_complement(arg(0), lim);
  } else if (name == "bilinear") {
    need(2, "Q E");
    g = srg::bilinear_forms_graph(arg(0), arg(1), lim);
  } else if (name == "alternating") {
    need(1, "Q");
    g = srg::alternating_forms_graph(arg(0), lim);
  } else if (name == "complement") {
    need(1, "FILE");
    auto text = read_all(io, args[0]);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      try {
        g = srg::graph_from_json(json::parse(text), lim);
      } catch (const json::parse_error& e) {
        throw InputError(args[0] + ": not valid JSON: " + e.what());
      }
    } else {
      std::istringstream s(text);
      g = srg::read_edge_list(s, lim);
    }
    g = srg::complement(g);
  } else {
    throw InputError("unknown graph family '" + name +
                     "' (paley, tournament, cliques, grid, vls, polar, polar-plus-comp, bilinear, "
                     "alternating, complement)");
  }
  write_compact(io, srg::to_json(g));
  return kOk;
}

int report_verdict(Io& io, const classify::Verdict& v) {
  if (io.json_mode) {
    write_json(io, classify::to_json(v));
  } else {
    std::ostringstream s;
    s << (v.coset ? "coset" : "not coset");
    if (v.kind == classify::Verdict::Kind::XK) s << ": X(" << v.xk << "), 4k+3 = " << 4 * v.xk + 3;
    if (v.kind == classify::Verdict::Kind::SRG) {
      s << ": " << v.matches.front().label() << " (" << v.matches.front().witness_str() << ")";
      for (std::size_t i = 1; i < v.matches.size(); ++i)
        s << ", also " << v.matches[i].label() << " (" << v.matches[i].witness_str() << ")";
    }
    if (v.kind == classify::Verdict::Kind::NONE) s << ": " << v.reason;
    s << '\n';
    if (v.derived) s << "derived " << v.derived->str() << '\n';
    write(io, s.str());
  }
  return v.coset ? kOk : kNegative;
}

int cmd_enumerate(Io& io, std::int64_t vmax, bool with_collisions, bool csv) {
  auto fams = classify::enumerate_families(vmax);
  auto cols = classify::collisions(fams);
  if (csv) {
    write(io, classify::catalogue_csv(fams));
    return kOk;
  }
  if (io.json_mode) {
    auto desc = [](const classify::FamilyDescriptor& f) {
      return json{{"params", {f.params.v, f.params.k, f.params.lambda, f.params.mu}},
                  {"family", f.label()},
                  {"witness", f.witness_str()}};
    };
    json doc{{"families", json::array()}};
    for (const auto& f : fams) doc["families"].push_back(desc(f));
    if (with_collisions) {
      doc["collisions"] = json::array();
      for (const auto& c : cols) {
        json entry{{"params", {c.params.v, c.params.k, c.params.lambda, c.params.mu}}, {"families", json::array()}};
        for (const auto& f : c.families) entry["families"].push_back(desc(f));
        doc["collisions"].push_back(entry);
      }
    }
    write_json(io, doc);
    return kOk;
  }
  std::ostringstream s;
  s << std::right << std::setw(7) << "v" << std::setw(7) << "k" << std::setw(7) << "lambda"
    << std::setw(7) << "mu" << "  " << std::left << std::setw(10) << "family" << "witness\n";
  for (const auto& f : fams)
    s << std::right << std::setw(7) << f.params.v << std::setw(7) << f.params.k << std::setw(7)
      << f.params.lambda << std::setw(7) << f.params.mu << "  " << std::left << std::setw(10)
      << f.label() << f.witness_str() << '\n';
  if (with_collisions) {
    s << "\ncollisions:\n";
    for (const auto& c : cols) {
      s << "  " << c.params.str() << ':';
      for (const auto& f : c.families) s << ' ' << f.label() << '(' << f.witness_str() << ')';
      s << '\n';
    }
  }
  write(io, s.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multivalued groups, coset groups and rank 3 graphs", "mvg"};
  app.require_subcommand(1);
  app.fallthrough();

  Io io{in, out, false, {}, "-"};
  std::size_t cap = 0;
  app.add_flag("--json", io.json_mode, "Machine-readable JSON output");
  app.add_option("--cap", cap, "Uniform size cap for groups, actions and graphs")->check(CLI::PositiveNumber);

  std::function<int()> action;

  auto* verify = app.add_subcommand("verify", "Check the axioms of an mvg-v1 group");
  std::string file_a, file_b;
  verify->add_option("file", file_a, "mvg-v1 file, - for stdin")->required();
  verify->callback([&] { action = [&] { return cmd_verify(io, file_a); }; });

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two mvg-v1 groups");
  iso->add_option("first", file_a)->required();
  iso->add_option("second", file_b)->required();
  iso->callback([&] { action = [&] { return cmd_iso(io, file_a, file_b); }; });

  auto* build = app.add_subcommand("build", "Construct a group or graph and write it as JSON");
  build->require_subcommand(1);
  build->add_option("-o,--output", io.output, "Output file, - for stdout");

  auto* coset = build->add_subcommand("coset", "Coset group of a grp-v1 group under an act-v1 action");
  coset->add_option("--group", file_a)->required();
  coset->add_option("--action", file_b)->required();
  coset->callback([&] { action = [&] { return cmd_build_coset(io, file_a, file_b); }; });

  std::vector<std::int64_t> nums;
  auto* xk = build->add_subcommand("xk", "X(k)");
  xk->add_option("k", nums)->required()->expected(1);
  xk->callback([&] { action = [&] { write_json(io, to_json(build_xk(nums[0]))); return kOk; }; });

  auto* t1 = build->add_subcommand("type1", "Order-3 group with self-inverse elements");
  t1->add_option("params", nums, "N M1 M2 A")->required()->expected(4);
  t1->callback([&] {
    action = [&] { write_json(io, to_json(build_type1(nums[0], nums[1], nums[2], nums[3]))); return kOk; };
  });

  auto* t2 = build->add_subcommand("type2", "Order-3 group with swapped inverses");
  t2->add_option("params", nums, "N A")->required()->expected(2);
  t2->callback([&] { action = [&] { write_json(io, to_json(build_type2(nums[0], nums[1]))); return kOk; }; });

  auto* srgcmd = build->add_subcommand("srg", "Group of a strongly regular parameter set");
  srgcmd->add_option("params", nums, "V K LAMBDA MU")->required()->expected(4);
  srgcmd->callback([&] {
    action = [&] {
      write_json(io, to_json(srg::mvgroup_from_params(srg::SrgParams::make(nums[0], nums[1], nums[2], nums[3]))));
      return kOk;
    };
  });

  std::string graph_name;
  std::vector<std::string> graph_args;
  auto* graph = build->add_subcommand("graph", "Family graph as graph-v1 JSON");
  graph->add_option("name", graph_name)->required();
  graph->add_option("args", graph_args);
  graph->callback([&] { action = [&] { return cmd_build_graph(io, graph_name, graph_args); }; });

  auto* cls = app.add_subcommand("classify", "Decide whether an order-3 group is a coset group");
  std::vector<std::int64_t> sym, swap;
  auto* o_sym = cls->add_option("--sym", sym, "type1 parameters N M1 M2 A")->expected(4);
  auto* o_swap = cls->add_option("--swap", swap, "type2 parameters N A")->expected(2);
  auto* o_file = cls->add_option("--file", file_a, "mvg-v1 file, - for stdin");
  o_sym->excludes(o_swap)->excludes(o_file);
  o_swap->excludes(o_file);
  cls->require_option(1);
  cls->callback([&] {
    action = [&] {
      MultivaluedGroup g = !sym.empty()    ? build_type1(sym[0], sym[1], sym[2], sym[3])
                           : !swap.empty() ? build_type2(swap[0], swap[1])
                                           : mvg_from_json(read_json(io, file_a));
      return report_verdict(io, classify::classify_order3(g));
    };
  });

  auto* en = app.add_subcommand("enumerate", "List attainable rank 3 parameter families");
  std::int64_t vmax = 0;
  bool with_collisions = false, csv = false;
  en->add_option("--vmax", vmax)->required();
  en->add_flag("--collisions", with_collisions, "Also report parameter sets shared by several families");
  en->add_flag("--csv", csv, "Write the catalogue as CSV");
  en->add_option("-o,--output", io.output, "Output file, - for stdout");
  en->callback([&] { action = [&] { return cmd_enumerate(io, vmax, with_collisions, csv); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (cap > 0) io.limits = Limits::uniform(cap);

  try {
    return action();
  } catch (const NotAGroupError& e) {
    err << e.what() << '\n';
    return kNegative;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace mvg::cli
