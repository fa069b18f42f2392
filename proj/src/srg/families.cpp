#include "mvg/srg/families.hpp"

#include <set>

#include "mvg/algebra/finite_field.hpp"
#include "mvg/algebra/number_theory.hpp"
#include "mvg/core/checked.hpp"
#include "mvg/core/error.hpp"
#include "mvg/srg/family_params.hpp"

namespace mvg::srg {

using algebra::FiniteField;
using Elem = FiniteField::Elem;

namespace {

// GF(q)^dim with vectors encoded as base-q digit strings, digit 0 lowest.
class VectorSpace {
 public:
  VectorSpace(const FiniteField& f, std::int64_t dim, const Limits& limits) : f_(f), dim_(dim) {
    const auto v = pow_capped(static_cast<std::int64_t>(f.order()), static_cast<unsigned>(dim),
                              static_cast<std::int64_t>(limits.graph));
    if (v < 0)
      throw ResourceError("vector space GF(" + std::to_string(f.order()) + ")^" +
                          std::to_string(dim) + " exceeds the graph cap");
    size_ = static_cast<std::size_t>(v);
  }

  std::size_t size() const { return size_; }
  const FiniteField& field() const { return f_; }

  std::vector<Elem> coords(std::size_t x) const {
    std::vector<Elem> out(dim_);
    for (auto& c : out) {
      c = static_cast<Elem>(x % f_.order());
      x /= f_.order();
    }
    return out;
  }

  std::size_t encode(const std::vector<Elem>& c) const {
    std::size_t x = 0;
    for (std::size_t i = c.size(); i-- > 0;) x = x * f_.order() + c[i];
    return x;
  }

  std::size_t add(std::size_t x, std::size_t y) const {
    std::size_t out = 0, scale = 1;
    for (std::int64_t i = 0; i < dim_; ++i) {
      out += scale * f_.add(static_cast<Elem>(x % f_.order()), static_cast<Elem>(y % f_.order()));
      x /= f_.order();
      y /= f_.order();
      scale *= f_.order();
    }
    return out;
  }

  std::size_t neg(std::size_t x) const {
    auto c = coords(x);
    for (auto& e : c) e = f_.neg(e);
    return encode(c);
  }

 private:
  const FiniteField& f_;
  std::int64_t dim_;
  std::size_t size_;
};

// Additive Cayley graph; `in_set` decides membership of nonzero vectors.
template <class Pred>
Graph additive_cayley(const VectorSpace& space, Pred in_set, const Limits& limits) {
  std::vector<std::size_t> conn;
  for (std::size_t s = 1; s < space.size(); ++s)
    if (in_set(s)) conn.push_back(s);
  std::set<std::size_t> members(conn.begin(), conn.end());
  for (auto s : conn)
    if (!members.count(space.neg(s))) throw InternalError("connection set is not symmetric");
  Graph g(space.size(), limits);
  for (std::size_t x = 0; x < space.size(); ++x)
    for (auto s : conn) {
      const auto y = space.add(x, s);
      if (x < y) g.add_edge(x, y);
    }
  return g;
}

Graph checked(Graph g, const SrgParams& expected, const char* family) {
  auto got = srg_check(g);
  if (!got || *got != expected)
    throw InternalError(std::string(family) + ": counted parameters " +
                        (got ? got->str() : std::string("none")) + " differ from " +
                        expected.str());
  return g;
}

FiniteField field_of(std::int64_t q, const Limits& limits) {
  auto [p, s] = require_prime_power(q, "q");
  return FiniteField::make(p, s, limits);
}

// Rank of a rows x cols matrix over f (row-major), by elimination.
int rank(const FiniteField& f, std::vector<Elem> m, int rows, int cols) {
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = r;
    while (piv < rows && m[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    for (int j = 0; j < cols; ++j) std::swap(m[r * cols + j], m[piv * cols + j]);
    const Elem inv = f.inv(m[r * cols + col]);
    for (int i = r + 1; i < rows; ++i) {
      const Elem factor = f.mul(m[i * cols + col], inv);
      if (factor == 0) continue;
      for (int j = col; j < cols; ++j)
        m[i * cols + j] = f.sub(m[i * cols + j], f.mul(factor, m[r * cols + j]));
    }
    ++r;
  }
  return r;
}

}  // namespace

Graph cayley_graph(const algebra::FiniteGroup& g,
                   const std::vector<algebra::FiniteGroup::Index>& connection, const Limits& limits) {
  std::set<algebra::FiniteGroup::Index> s;
  for (auto x : connection) {
    if (x >= g.size()) throw InputError("connection element out of range");
    if (x == g.identity()) throw InputError("connection set contains the identity");
    s.insert(x);
  }
  for (auto x : s)
    if (!s.count(g.inverse(x))) throw InputError("connection set is not closed under inverses");
  Graph out(g.size(), limits);
  for (algebra::FiniteGroup::Index a = 0; a < g.size(); ++a)
    for (auto x : s) {
      const auto b = g.op(x, a);  // b a^-1 = x
      if (a < b) out.add_edge(a, b);
    }
  return out;
}

Graph paley_graph(std::int64_t q, const Limits& limits) {
  const auto expected = paley_params(q);
  auto f = field_of(q, limits);
  VectorSpace space(f, 1, limits);
  return checked(additive_cayley(space, [&](std::size_t s) { return f.is_nonzero_square(static_cast<Elem>(s)); }, limits),
                 expected, "Paley graph");
}

DirectedGraph paley_tournament(std::int64_t q, const Limits& limits) {
  require_prime_power(q, "q");
  if (q % 4 != 3) throw InputError("Paley tournament needs q = 3 mod 4");
  auto f = field_of(q, limits);
  DirectedGraph out(f.order(), limits);
  for (Elem x = 0; x < f.order(); ++x)
    for (Elem y = 0; y < f.order(); ++y)
      if (f.is_nonzero_square(f.sub(y, x))) out.add_arc(x, y);
  return out;
}

Graph clique_union(std::int64_t p, std::int64_t t, std::int64_t s, const Limits& limits) {
  if (!algebra::is_prime(p)) throw InputError("clique union: p must be prime");
  if (t < 1 || s < 1) throw InputError("clique union: need t, s >= 1");
  const auto v = pow_capped(p, static_cast<unsigned>(t + s), static_cast<std::int64_t>(limits.graph));
  if (v < 0) throw ResourceError("clique union exceeds the graph cap");
  const auto expected = clique_union_params(p, t, s);
  const auto size = static_cast<std::size_t>(checked_pow(p, static_cast<unsigned>(t)));
  Graph g(static_cast<std::size_t>(v), limits);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = x + 1; y < g.order(); ++y)
      if (x / size == y / size) g.add_edge(x, y);
  return checked(std::move(g), expected, "clique union");
}

Graph grid_graph(std::int64_t q, const Limits& limits) {
  if (q < 2) throw InputError("grid: need q >= 2");
  const auto v = pow_capped(q, 2, static_cast<std::int64_t>(limits.graph));
  if (v < 0) throw ResourceError("grid exceeds the graph cap");
  const auto expected = grid_params(q);
  const auto n = static_cast<std::size_t>(q);
  Graph g(static_cast<std::size_t>(v), limits);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = x + 1; y < g.order(); ++y)
      if (x / n == y / n || x % n == y % n) g.add_edge(x, y);
  return checked(std::move(g), expected, "grid");
}

Graph vanlint_schrijver(std::int64_t p, std::int64_t c, std::int64_t t, const Limits& limits) {
  const auto expected = vls_params(p, c, t);
  if (expected.v > static_cast<std::int64_t>(limits.graph))
    throw ResourceError("Van Lint-Schrijver graph exceeds the graph cap");
  auto f = FiniteField::make(p, static_cast<unsigned>((c - 1) * t), limits);
  if (!f.is_nonzero_power(f.neg(1), c))
    throw InternalError("-1 is not a c-th power; the graph would be directed");
  VectorSpace space(f, 1, limits);
  return checked(additive_cayley(space, [&](std::size_t s) { return f.is_nonzero_power(static_cast<Elem>(s), c); }, limits),
                 expected, "Van Lint-Schrijver");
}

Graph affine_polar(std::int64_t q, std::int64_t e, int eps, const Limits& limits) {
  const auto expected = polar_params(q, e, eps);
  if (expected.v > static_cast<std::int64_t>(limits.graph))
    throw ResourceError("affine polar graph exceeds the graph cap");
  auto f = field_of(q, limits);
  // Anisotropic plane: x^2 - alpha y^2 (odd q) or x^2 + xy + beta y^2 (even q),
  // alpha / beta the least element that makes it anisotropic.
  Elem coeff = 0;
  if (eps == -1) {
    auto anisotropic = [&](Elem b) {
      for (Elem x = 0; x < f.order(); ++x) {
        Elem val = f.characteristic() == 2 ? f.add(f.add(f.mul(x, x), x), b) : f.sub(f.mul(x, x), b);
        if (val == 0) return false;
      }
      return true;
    };
    for (coeff = 1; coeff < f.order() && !anisotropic(coeff); ++coeff) {}
    if (coeff == f.order()) throw InternalError("no anisotropic binary form found");
  }
  VectorSpace space(f, 2 * e, limits);
  auto form = [&](std::size_t s) {
    auto x = space.coords(s);
    Elem acc = 0;
    for (std::int64_t i = 0; i + 1 < e; ++i) acc = f.add(acc, f.mul(x[2 * i], x[2 * i + 1]));
    const Elem a = x[2 * e - 2], b = x[2 * e - 1];
    if (eps == 1) return f.add(acc, f.mul(a, b));
    if (f.characteristic() == 2)
      return f.add(acc, f.add(f.add(f.mul(a, a), f.mul(a, b)), f.mul(coeff, f.mul(b, b))));
    return f.add(acc, f.sub(f.mul(a, a), f.mul(coeff, f.mul(b, b))));
  };
  return checked(additive_cayley(space, [&](std::size_t s) { return form(s) == 0; }, limits), expected,
                 "affine polar");
}

Graph affine_polar_plus_complement(std::int64_t e, const Limits& limits) {
  const auto expected = polar_plus_complement_params(e);
  if (expected.v > static_cast<std::int64_t>(limits.graph))
    throw ResourceError("affine polar complement exceeds the graph cap");
  auto f = FiniteField::make(2, 1, limits);
  VectorSpace space(f, 2 * e, limits);
  auto hyperbolic = [&](std::size_t s) {
    auto x = space.coords(s);
    Elem acc = 0;
    for (std::int64_t i = 0; i < e; ++i) acc = f.add(acc, f.mul(x[2 * i], x[2 * i + 1]));
    return acc;
  };
  return checked(complement(additive_cayley(space, [&](std::size_t s) { return hyperbolic(s) == 0; }, limits)),
                 expected, "affine polar complement");
}

Graph bilinear_forms_graph(std::int64_t q, std::int64_t e, const Limits& limits) {
  const auto expected = bilinear_params(q, e);
  if (expected.v > static_cast<std::int64_t>(limits.graph))
    throw ResourceError("bilinear forms graph exceeds the graph cap");
  auto f = field_of(q, limits);
  VectorSpace space(f, 2 * e, limits);
  const int cols = static_cast<int>(e);
  return checked(additive_cayley(space, [&](std::size_t s) { return rank(f, space.coords(s), 2, cols) == 1; }, limits),
                 expected, "bilinear forms");
}

Graph alternating_forms_graph(std::int64_t q, const Limits& limits) {
  const auto expected = alternating_params(q);
  if (expected.v > static_cast<std::int64_t>(limits.graph))
    throw ResourceError("alternating forms graph exceeds the graph cap");
  auto f = field_of(q, limits);
  VectorSpace space(f, 10, limits);
  auto matrix = [&](std::size_t s) {
    auto x = space.coords(s);
    std::vector<Elem> m(25, 0);
    int k = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j, ++k) {
        m[i * 5 + j] = x[k];
        m[j * 5 + i] = f.neg(x[k]);
      }
    return m;
  };
  return checked(additive_cayley(space, [&](std::size_t s) { return rank(f, matrix(s), 5, 5) == 2; }, limits),
                 expected, "alternating forms");
}

}  // namespace mvg::srg
