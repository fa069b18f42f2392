#include "mvg/core/axioms.hpp"

#include <utility>

#include "mvg/core/error.hpp"

namespace mvg {
namespace {

using SparseRow = std::vector<std::pair<Element, std::int64_t>>;

// Multiplicities are bounded by n, so every convolution sum is at most n^2.
constexpr std::int64_t kMaxValency = 3'000'000'000LL;

std::vector<SparseRow> sparse_rows(const MultivaluedGroup& g) {
  const std::size_t k = g.order();
  std::vector<SparseRow> rows(k * k);
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y) {
      auto r = g.row(x, y);
      for (Element z = 0; z < k; ++z)
        if (r[z] != 0) rows[x * k + y].emplace_back(z, r[z]);
    }
  return rows;
}

void check_associativity(const MultivaluedGroup& g, AxiomReport& report) {
  if (g.valency() > kMaxValency) throw ResourceError("valency too large for exact convolution");
  const std::size_t k = g.order();
  const auto rows = sparse_rows(g);
  std::vector<std::int64_t> left(k), right(k);
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y)
      for (Element z = 0; z < k; ++z) {
        std::fill(left.begin(), left.end(), 0);
        std::fill(right.begin(), right.end(), 0);
        for (const auto& [w, c] : rows[x * k + y])
          for (const auto& [t, d] : rows[w * k + z]) left[t] += c * d;
        for (const auto& [w, c] : rows[y * k + z])
          for (const auto& [t, d] : rows[x * k + w]) right[t] += c * d;
        for (Element t = 0; t < k; ++t)
          if (left[t] != right[t])
            report.fail("associative", "(x*y)*z and x*(y*z) differ in multiplicity of t",
                        {x, y, z, t});
      }
}

void check_identity(const MultivaluedGroup& g, AxiomReport& report) {
  const Element e = g.identity();
  for (Element x = 0; x < g.order(); ++x)
    if (g.m(e, x, x) != g.valency() || g.m(x, e, x) != g.valency())
      report.fail("identity", "e*x = x*e = [x,...,x]", {x});
}

void check_inverses(const MultivaluedGroup& g, AxiomReport& report) {
  const Element e = g.identity();
  if (g.star(e) != e) report.fail("inverse", "e* = e", {e});
  for (Element x = 0; x < g.order(); ++x)
    if (g.m(x, g.star(x), e) <= 0 || g.m(g.star(x), x, e) <= 0)
      report.fail("inverse", "e occurs in x*x^star and x^star*x", {x});
}

std::vector<std::vector<Element>> reciprocity_violations(const MultivaluedGroup& g) {
  std::vector<std::vector<Element>> out;
  const std::size_t k = g.order();
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y)
      for (Element z = 0; z < k; ++z) {
        __int128 lhs = static_cast<__int128>(g.unit_multiplicity(x)) * g.m(y, z, g.star(x));
        __int128 rhs = static_cast<__int128>(g.unit_multiplicity(y)) * g.m(z, x, g.star(y));
        if (lhs != rhs) out.push_back({x, y, z});
      }
  return out;
}

}  // namespace

void AxiomReport::fail(std::string axiom, std::string condition, std::vector<Element> witness) {
  if (axiom == "associative") associative = false;
  else if (axiom == "identity") has_identity = false;
  else if (axiom == "inverse") has_inverses = false;
  else if (axiom == "involutive") involutive = false;
  else if (axiom == "reciprocity") reciprocity_holds = false;
  else throw InternalError("unknown axiom name " + axiom);
  counterexamples.push_back({std::move(axiom), std::move(condition), std::move(witness)});
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& c : other.counterexamples) fail(c.axiom, c.condition, c.witness);
}

AxiomReport verify_axioms(const MultivaluedGroup& g) {
  AxiomReport report;
  check_associativity(g, report);
  check_identity(g, report);
  check_inverses(g, report);
  return report;
}

AxiomReport verify_involutive(const MultivaluedGroup& g) {
  AxiomReport report;
  const std::size_t k = g.order();
  const Element e = g.identity();
  for (Element x = 0; x < k; ++x)
    if (g.star(g.star(x)) != x) report.fail("involutive", "star is an involution", {x});
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y)
      if ((g.m(x, y, e) > 0) != (y == g.star(x)))
        report.fail("involutive", "m[x][y][e] > 0 iff y = x^star", {x, y});
  for (Element x = 0; x < k; ++x)
    if (g.unit_multiplicity(x) != g.unit_multiplicity(g.star(x)))
      report.fail("involutive", "m(x) = m(x^star)", {x});
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y)
      for (Element z = 0; z < k; ++z)
        if (g.m(x, y, z) != g.m(g.star(y), g.star(x), g.star(z)))
          report.fail("involutive", "m[x][y][z] = m[y^star][x^star][z^star]", {x, y, z});
  return report;
}

bool check_reciprocity(const MultivaluedGroup& g) {
  if (!verify_involutive(g).involutive)
    throw InputError("reciprocity is only defined for involutive groups");
  return reciprocity_violations(g).empty();
}

AxiomReport full_report(const MultivaluedGroup& g) {
  AxiomReport report = verify_axioms(g);
  report.merge(verify_involutive(g));
  for (auto& w : reciprocity_violations(g))
    report.fail("reciprocity", "m(x) m[y][z][x^star] = m(y) m[z][x][y^star]", std::move(w));
  return report;
}

const MultivaluedGroup& require_involutive_group(const MultivaluedGroup& g) {
  AxiomReport report = verify_axioms(g);
  report.merge(verify_involutive(g));
  if (!report.counterexamples.empty()) {
    const auto& first = report.counterexamples.front();
    throw NotAGroupError(first.axiom, first.witness);
  }
  return g;
}

}  // namespace mvg
