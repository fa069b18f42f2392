// Acceptance runner: one line per criterion, exact checks, pinned time limits.
// Exit status is 0 when every criterion passes, or fails only for the
// documented gap (criterion 6, Klein group under its full automorphism group,
// whose action has rank 2 so the Cayley graph is complete).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "mvg/algebra/coset.hpp"
#include "mvg/algebra/finite_field.hpp"
#include "mvg/algebra/number_theory.hpp"
#include "mvg/classify/verdict.hpp"
#include "mvg/cli/run.hpp"
#include "mvg/core/axioms.hpp"
#include "mvg/core/error.hpp"
#include "mvg/core/isomorphism.hpp"
#include "mvg/core/json_io.hpp"
#include "mvg/srg/families.hpp"

namespace {

using namespace mvg;
using algebra::ActionGroup;
using algebra::Automorphism;
using algebra::FiniteGroup;
using srg::SrgParams;

struct Outcome {
  bool pass = true;
  std::string detail;
  bool known_gap = false;  // failure is exactly the documented one
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> check;
};

std::string str(const SrgParams& p) { return p.str(); }

// Closed forms written out independently of the library's family tables.
SrgParams P(std::int64_t v, std::int64_t k, std::int64_t l, std::int64_t m) {
  return SrgParams::make(v, k, l, m);
}

// ---------------------------------------------------------------------------

Outcome petersen_golden() {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run({"build", "srg", "10", "3", "0", "1"}, in, out, err);
  if (code != 0) return {false, "build srg exited " + std::to_string(code) + ": " + err.str()};
  auto doc = nlohmann::json::parse(out.str());
  auto g = mvg_from_json(doc);
  const bool ok = g.valency() == 6 && product(g, 1, 1) == Multiset{{0, 2}, {2, 4}} &&
                  product(g, 2, 2) == Multiset{{0, 1}, {1, 2}, {2, 3}} &&
                  product(g, 1, 2) == Multiset{{1, 2}, {2, 4}} &&
                  product(g, 2, 1) == Multiset{{1, 2}, {2, 4}} && g == build_type1(6, 2, 1, 0);
  return {ok, ok ? "x1x1={e:2,x2:4} x2x2={e:1,x1:2,x2:3} x1x2={x1:2,x2:4}, n=6" : "table differs"};
}

Outcome coset_oracle() {
  auto z7 = algebra::make_cyclic(7);
  auto a = algebra::close_action(z7, {algebra::unit_multiplier(z7, 2)});
  std::set<FiniteGroup::Index> images;
  for (const auto& alpha : a.elements()) images.insert(alpha(1));
  if (images != std::set<FiniteGroup::Index>{1, 2, 4}) return {false, "action is not {x1,x2,x4}"};
  auto g = algebra::coset_group(z7, a);
  auto x1 = build_xk(1);
  bool same = g.order() == 3 && g.valency() == x1.valency() && g.identity() == x1.identity() &&
              g.star_map() == x1.star_map();
  for (Element x = 0; same && x < 3; ++x)
    for (Element y = 0; y < 3; ++y)
      for (Element z = 0; z < 3; ++z) same = same && g.m(x, y, z) == x1.m(x, y, z);
  if (!same) return {false, "coset table differs from X(1)"};
  auto v = classify::classify_order3(g);
  const bool ok = v.coset && v.kind == classify::Verdict::Kind::XK && v.xk == 1 && 4 * v.xk + 3 == 7;
  return {ok, ok ? "table-for-table equal to X(1); verdict XK(k=1), 4k+3=7" : "classification wrong"};
}

// Graphs of the parameter oracle, with their closed forms.
std::vector<std::tuple<std::string, std::function<srg::Graph()>, SrgParams>> family_instances() {
  std::vector<std::tuple<std::string, std::function<srg::Graph()>, SrgParams>> out;
  auto pw = [](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 31})
    for (std::int64_t t = 1; pw(p, t + 1) <= 1024; ++t)
      for (std::int64_t s = 1; pw(p, t + s) <= 1024; ++s)
        out.emplace_back("cliques(" + std::to_string(p) + "," + std::to_string(t) + "," + std::to_string(s) + ")",
                         [=] { return srg::clique_union(p, t, s); },
                         P(pw(p, t + s), pw(p, t) - 1, pw(p, t) - 2, 0));
  for (std::int64_t q = 2; q * q <= 1024; ++q)
    out.emplace_back("grid(" + std::to_string(q) + ")", [=] { return srg::grid_graph(q); },
                     P(q * q, 2 * (q - 1), q - 2, 2));
  for (std::int64_t q : {5, 9, 13, 17, 25}) {
    const auto t = (q - 1) / 4;
    out.emplace_back("paley(" + std::to_string(q) + ")", [=] { return srg::paley_graph(q); },
                     P(q, 2 * t, t - 1, t));
  }
  // VLS(2,3,4): v = 256, sqrt v = 16, t even.
  out.emplace_back("vls(2,3,4)", [] { return srg::vanlint_schrijver(2, 3, 4); },
                   P(256, 255 / 3, (256 - 9 + 1 - 1 * 1 * 2 * 16) / 9, (256 - 3 + 1 + 16) / 9));
  for (auto [q, e, eps] : std::vector<std::tuple<std::int64_t, std::int64_t, int>>{
           {2, 2, -1}, {3, 2, -1}, {3, 2, 1}, {2, 3, -1}}) {
    const auto qe = pw(q, e), qe1 = pw(q, e - 1), qe2 = pw(q, e - 2);
    out.emplace_back("polar(" + std::to_string(q) + "," + std::to_string(e) + "," + (eps > 0 ? "+" : "-") + ")",
                     [=] { return srg::affine_polar(q, e, eps); },
                     P(qe * qe, (qe - eps) * (qe1 + eps), q * (qe1 - eps) * (qe2 + eps) + q - 2,
                       qe1 * (qe1 + eps)));
  }
  for (std::int64_t e : {2, 3}) {
    const auto h = pw(2, e - 1);
    out.emplace_back("polar-plus-comp(" + std::to_string(e) + ")",
                     [=] { return srg::affine_polar_plus_complement(e); },
                     P(pw(2, 2 * e), h * (2 * h - 1), h * (h - 1), h * (h - 1)));
  }
  out.emplace_back("bilinear(2,3)", [] { return srg::bilinear_forms_graph(2, 3); },
                   P(64, 3 * 7, 8 + 0, 2 * 3));
  out.emplace_back("alternating(2)", [] { return srg::alternating_forms_graph(2); },
                   P(1024, 5 * 31, 32 + 16 - 4 - 2, 4 * 5));
  return out;
}

// Coset instances with |G| <= 64.
std::vector<std::pair<std::string, std::pair<FiniteGroup, ActionGroup>>> coset_instances() {
  std::vector<std::pair<std::string, std::pair<FiniteGroup, ActionGroup>>> out;
  for (std::size_t n = 2; n <= 64; ++n) {
    auto g = algebra::make_cyclic(n);
    std::set<std::vector<FiniteGroup::Index>> seen;
    for (std::int64_t c = 1; c < static_cast<std::int64_t>(n); ++c) {
      if (std::gcd<std::int64_t>(c, n) != 1) continue;
      auto a = algebra::close_action(g, {algebra::unit_multiplier(g, c)});
      std::vector<FiniteGroup::Index> key;
      for (const auto& alpha : a.elements()) key.push_back(alpha(1));
      if (seen.insert(key).second) out.push_back({"Z" + std::to_string(n) + " x" + std::to_string(c), {g, a}});
    }
  }
  for (auto [p, s] : std::vector<std::pair<std::int64_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    auto f = algebra::make_field(p, s);
    auto add = algebra::make_additive_group(f);
    const auto q1 = static_cast<std::int64_t>(f.order()) - 1;
    for (std::int64_t d = 1; d <= q1; ++d) {
      if (q1 % d != 0) continue;
      auto a = algebra::close_action(add, {algebra::field_multiplier(add, f, f.exp(d))});
      out.push_back({"F" + std::to_string(f.order()) + " index " + std::to_string(d), {add, a}});
    }
  }
  auto inner_all = [](const FiniteGroup& g) {
    std::vector<Automorphism> gens;
    for (FiniteGroup::Index a = 0; a < g.size(); ++a) gens.push_back(algebra::inner_automorphism(g, a));
    return algebra::close_action(g, gens);
  };
  for (std::size_t n = 3; 2 * n <= 64; ++n) {
    auto d = algebra::make_dihedral(n);
    out.push_back({"D" + std::to_string(2 * n) + " inner", {d, inner_all(d)}});
    out.push_back({"D" + std::to_string(2 * n) + " by reflection",
                   {d, algebra::close_action(d, {algebra::inner_automorphism(d, static_cast<FiniteGroup::Index>(n))})}});
  }
  for (unsigned k : {3u, 4u}) {
    auto s = algebra::make_symmetric(k);
    out.push_back({"S" + std::to_string(k) + " inner", {s, inner_all(s)}});
  }
  return out;
}

Outcome axiom_suite() {
  int groups = 0, failures = 0;
  std::string first;
  auto check = [&](const std::string& what, const MultivaluedGroup& g) {
    ++groups;
    if (!full_report(g).all_pass()) {
      if (failures++ == 0) first = what;
    }
  };
  for (const auto& [name, make, expected] : family_instances()) {
    auto p = srg::srg_check(make());
    if (!p) {
      if (failures++ == 0) first = name + " (not strongly regular)";
      continue;
    }
    check(name, srg::mvgroup_from_params(*p));
  }
  for (const auto& f : classify::enumerate_families(1024)) check(f.label() + " " + f.witness_str(), srg::mvgroup_from_params(f.params));
  for (const auto& [name, ga] : coset_instances()) check(name, algebra::coset_group(ga.first, ga.second));
  for (std::int64_t k = 0; k <= 20; ++k) check("X(" + std::to_string(k) + ")", build_xk(k));
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t a = 0; 2 * a < n; ++a) check("type2", build_type2(n, a));
    for (std::int64_t m1 = 1; m1 <= n; ++m1)
      for (std::int64_t m2 = 1; m2 <= n; ++m2)
        for (std::int64_t a = 0; a <= n; ++a) {
          try {
            check("type1", build_type1(n, m1, m2, a));
          } catch (const ParameterError&) {
          }
        }
  }
  return {failures == 0, std::to_string(groups) + " groups, " + std::to_string(failures) + " failures" +
                             (first.empty() ? "" : " (first: " + first + ")")};
}

Outcome representative_independence() {
  std::mt19937_64 rng(0x5eed2026);
  int done = 0, bad = 0;
  auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  while (done < 50) {
    FiniteGroup g = algebra::make_cyclic(1);
    std::vector<Automorphism> gens;
    switch (done % 4) {
      case 0: {
        g = algebra::make_cyclic(static_cast<std::size_t>(pick(3, 60)));
        for (int i = 0, m = static_cast<int>(pick(1, 2)); i < m; ++i) {
          std::int64_t c;
          do c = pick(1, static_cast<std::int64_t>(g.size()) - 1);
          while (std::gcd<std::int64_t>(c, g.size()) != 1);
          gens.push_back(algebra::unit_multiplier(g, c));
        }
        break;
      }
      case 1: {
        const std::vector<std::pair<std::int64_t, unsigned>> fields = {{2, 3}, {2, 4}, {3, 2}, {5, 2}, {2, 5}, {3, 3}, {7, 2}};
        auto [p, s] = fields[pick(0, static_cast<std::int64_t>(fields.size()) - 1)];
        auto f = algebra::make_field(p, s);
        g = algebra::make_additive_group(f);
        gens.push_back(algebra::field_multiplier(g, f, static_cast<algebra::FiniteField::Elem>(pick(1, f.order() - 1))));
        break;
      }
      case 2: {
        g = (pick(0, 1) == 0) ? algebra::make_dihedral(static_cast<std::size_t>(pick(3, 16))) : algebra::make_symmetric(4);
        for (int i = 0, m = static_cast<int>(pick(1, 2)); i < m; ++i)
          gens.push_back(algebra::inner_automorphism(g, static_cast<FiniteGroup::Index>(pick(0, g.size() - 1))));
        break;
      }
      default: {
        const std::int64_t p = pick(0, 1) ? 2 : 3;
        const unsigned d = p == 2 ? static_cast<unsigned>(pick(2, 4)) : 2u;
        g = algebra::make_elementary_abelian(p, d);
        while (gens.empty()) {
          std::vector<std::int64_t> m(d * d);
          for (auto& x : m) x = pick(0, p - 1);
          try {
            gens.push_back(algebra::linear_automorphism(g, p, d, m));
          } catch (const InputError&) {  // singular
          }
        }
      }
    }
    auto a = algebra::close_action(g, gens);
    auto part = algebra::orbits(g, a);
    auto table = algebra::coset_group(g, a);
    // Every representative pair, recounted here.
    bool ok = algebra::representatives_agree(g, a);
    for (std::size_t x = 0; ok && x < part.orbits.size(); ++x)
      for (std::size_t y = 0; ok && y < part.orbits.size(); ++y)
        for (auto g0 : part.orbits[x])
          for (auto h0 : part.orbits[y]) {
            std::vector<std::int64_t> counts(part.orbits.size(), 0);
            for (const auto& alpha : a.elements()) ++counts[part.orbit_of[g.op(g0, alpha(h0))]];
            for (std::size_t z = 0; z < counts.size(); ++z) ok = ok && counts[z] == table.m(x, y, z);
          }
    bad += !ok;
    ++done;
  }
  return {bad == 0, std::to_string(done) + " random instances, " + std::to_string(bad) + " disagreements"};
}

Outcome graph_parameters() {
  int n = 0;
  for (const auto& [name, make, expected] : family_instances()) {
    auto got = srg::srg_check(make());
    ++n;
    if (!got || *got != expected)
      return {false, name + ": srg_check " + (got ? str(*got) : "none") + " vs closed form " + str(expected)};
  }
  return {true, std::to_string(n) + " family graphs match their closed forms"};
}

Outcome cayley_equivalence() {
  struct Instance {
    std::string name;
    FiniteGroup g = algebra::make_cyclic(1);
    ActionGroup a;
  };
  std::vector<Instance> inst;
  auto z5 = algebra::make_cyclic(5);
  inst.push_back({"(Z5, +-1)", z5, algebra::close_action(z5, {algebra::unit_multiplier(z5, 4)})});
  for (auto [p, s] : std::vector<std::pair<std::int64_t, unsigned>>{{3, 2}, {13, 1}}) {
    auto f = algebra::make_field(p, s);
    auto add = algebra::make_additive_group(f);
    auto w = f.primitive_element();
    inst.push_back({"(F" + std::to_string(f.order()) + ", squares)", add,
                    algebra::close_action(add, {algebra::field_multiplier(add, f, f.mul(w, w))})});
  }
  auto klein = algebra::make_elementary_abelian(2, 2);
  inst.push_back({"(Klein, Aut)", klein,
                  algebra::close_action(klein, {algebra::linear_automorphism(klein, 2, 2, {0, 1, 1, 0}),
                                                algebra::linear_automorphism(klein, 2, 2, {1, 1, 0, 1})})});
  std::string detail;
  bool all = true, klein_rank2_only = true;
  for (const auto& in : inst) {
    auto part = algebra::orbits(in.g, in.a);
    auto coset = algebra::coset_group(in.g, in.a);
    bool ok = in.a.size() % 2 == 0;
    std::string why;
    for (std::size_t i = 1; i < part.orbits.size(); ++i) {
      auto p = srg::srg_check(srg::cayley_graph(in.g, part.orbits[i]));
      if (!p) {
        ok = false;
        why = "rank " + std::to_string(part.orbits.size()) + ", Cayley graph not strongly regular";
        continue;
      }
      ok = ok && are_isomorphic(srg::mvgroup_from_params(*p), coset).has_value();
    }
    all = all && ok;
    if (!ok && !(in.name == "(Klein, Aut)" && part.orbits.size() == 2)) klein_rank2_only = false;
    detail += (detail.empty() ? "" : "; ") + in.name + (ok ? " ok" : " FAIL: " + why);
  }
  return {all, detail, !all && klein_rank2_only};
}

Outcome classification_round_trip() {
  int n = 0;
  for (const auto& f : classify::enumerate_families(1024)) {
    ++n;
    auto v = classify::classify_order3(srg::mvgroup_from_params(f.params));
    bool matched = false;
    for (const auto& m : v.matches) matched = matched || (m.label() == f.label() && m.witness_str() == f.witness_str());
    if (!v.coset || !matched) return {false, f.label() + " " + f.witness_str() + " " + str(f.params) + " not recovered"};
  }
  return {true, std::to_string(n) + " descriptors classified coset with their own family"};
}

Outcome negative_controls() {
  auto a = classify::classify_order3(build_type1(6, 2, 1, 0));
  auto b = classify::classify_order3(build_type1(10, 1, 1, 4));
  auto c = classify::classify_order3(build_xk(3));
  const bool ok = !a.coset && a.derived && a.derived->v == 10 && !b.coset && b.derived && b.derived->v == 21 &&
                  !c.coset && c.kind == classify::Verdict::Kind::NONE && !algebra::is_prime_power(15);
  return {ok, "X6(2,1,0): " + a.reason + "; X10(1,1,4): " + b.reason + "; X7(3): " + c.reason};
}

Outcome complement_duality() {
  int n = 0;
  std::int64_t last = 0;
  for (std::int64_t v = 5; n < 20; ++v)
    for (std::int64_t k = 1; k < v - 1 && n < 20; ++k)
      for (std::int64_t l = 0; l < k && n < 20; ++l)
        for (std::int64_t m = 0; m <= k && n < 20; ++m) {
          if (k * (k - 1 - l) != (v - k - 1) * m) continue;
          SrgParams p;
          try {
            p = SrgParams::make(v, k, l, m);
          } catch (const ParameterError&) {
            continue;
          }
          ++n;
          last = v;
          if (!are_isomorphic(srg::mvgroup_from_params(p), srg::mvgroup_from_params(srg::complement_params(p))))
            return {false, str(p) + " not isomorphic to its complement's group"};
        }
  return {true, "20 parameter sets with v <= " + std::to_string(last) + ", each group isomorphic to its complement's"};
}

Outcome collision_audit() {
  std::set<std::pair<SrgParams, std::vector<std::string>>> got;
  for (const auto& c : classify::collisions(classify::enumerate_families(100))) {
    std::vector<std::string> labels;
    for (const auto& f : c.families) labels.push_back(f.label());
    got.insert({c.params, labels});
  }
  const std::set<std::pair<SrgParams, std::vector<std::string>>> frozen = {
      {P(9, 4, 1, 2), {"II", "III"}}, {P(16, 6, 2, 2), {"II", "VII"}}, {P(4, 1, 0, 0), {"I", "II"}}};
  std::string detail;
  for (const auto& [p, labels] : got) {
    detail += (detail.empty() ? "" : " ") + str(p) + ":";
    for (std::size_t i = 0; i < labels.size(); ++i) detail += (i ? "/" : "") + labels[i];
  }
  return {got == frozen, detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Petersen golden table", 1, petersen_golden},
      {2, "coset oracle Z7 / X(1)", 1, coset_oracle},
      {3, "axiom suite", 60, axiom_suite},
      {4, "representative independence", 30, representative_independence},
      {5, "graph-parameter oracle", 120, graph_parameters},
      {6, "Cayley / coset equivalence", 5, cayley_equivalence},
      {7, "classification round trip", 30, classification_round_trip},
      {8, "negative controls", 1, negative_controls},
      {9, "complement duality", 5, complement_duality},
      {10, "collision audit", 1, collision_audit},
  };
  int unexpected = 0, passed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = o.pass && in_time;
    passed += pass;
    if (!pass && !(o.known_gap && in_time)) ++unexpected;
    std::printf("%s %2d %-30s %7.3fs / %3.0fs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                o.detail.c_str(), !in_time ? " [time limit exceeded]" : (!pass && o.known_gap) ? " [known gap, see README]" : "");
  }
  std::printf("%d/%zu criteria pass, %d unexpected failures\n", passed, criteria.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
