#include "mvg/core/isomorphism.hpp"

#include "mvg/core/axioms.hpp"
#include "mvg/core/order3.hpp"

namespace mvg {
namespace {

bool same_ratio(const MultivaluedGroup& g1, const MultivaluedGroup& g2, Element x, Element y,
                Element z, Element fx, Element fy, Element fz) {
  return static_cast<__int128>(g1.m(x, y, z)) * g2.valency() ==
         static_cast<__int128>(g2.m(fx, fy, fz)) * g1.valency();
}

class Search {
 public:
  Search(const MultivaluedGroup& g1, const MultivaluedGroup& g2)
      : g1_(g1), g2_(g2), k_(g1.order()), image_(k_, k_), used_(k_, false) {
    order_.push_back(g1.identity());
    for (Element x = 0; x < k_; ++x)
      if (x != g1.identity()) order_.push_back(x);
  }

  std::optional<std::vector<Element>> run() {
    if (assign(0, g2_.identity()) && extend(1)) return image_;
    return std::nullopt;
  }

 private:
  // Tries f(order_[pos]) = target and checks every triple among assigned elements.
  bool assign(std::size_t pos, Element target) {
    const Element x = order_[pos];
    image_[x] = target;
    for (std::size_t i = 0; i <= pos; ++i)
      for (std::size_t j = 0; j <= pos; ++j)
        for (std::size_t l = 0; l <= pos; ++l) {
          if (i != pos && j != pos && l != pos) continue;
          const Element a = order_[i], b = order_[j], c = order_[l];
          if (!same_ratio(g1_, g2_, a, b, c, image_[a], image_[b], image_[c])) {
            image_[x] = k_;
            return false;
          }
        }
    used_[target] = true;
    return true;
  }

  bool extend(std::size_t pos) {
    if (pos == k_) return true;
    for (Element target = 0; target < k_; ++target) {
      if (used_[target]) continue;
      if (!assign(pos, target)) continue;
      if (extend(pos + 1)) return true;
      used_[target] = false;
      image_[order_[pos]] = k_;
    }
    return false;
  }

  const MultivaluedGroup& g1_;
  const MultivaluedGroup& g2_;
  std::size_t k_;
  std::vector<Element> order_;
  std::vector<Element> image_;
  std::vector<bool> used_;
};

bool is_order3_involutive_group(const MultivaluedGroup& g) {
  if (g.order() != 3) return false;
  AxiomReport r = verify_axioms(g);
  r.merge(verify_involutive(g));
  return r.all_pass();
}

}  // namespace

bool is_isomorphism(const MultivaluedGroup& g1, const MultivaluedGroup& g2,
                    const std::vector<Element>& f) {
  const std::size_t k = g1.order();
  if (g2.order() != k || f.size() != k) return false;
  std::vector<bool> seen(k, false);
  for (Element y : f) {
    if (y >= k || seen[y]) return false;
    seen[y] = true;
  }
  if (f[g1.identity()] != g2.identity()) return false;
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y)
      for (Element z = 0; z < k; ++z)
        if (!same_ratio(g1, g2, x, y, z, f[x], f[y], f[z])) return false;
  return true;
}

std::optional<std::vector<Element>> are_isomorphic(const MultivaluedGroup& g1,
                                                   const MultivaluedGroup& g2) {
  if (g1.order() != g2.order()) return std::nullopt;

  if (is_order3_involutive_group(g1) && is_order3_involutive_group(g2)) {
    if (signature(g1) != signature(g2)) return std::nullopt;
    const auto [u1, v1] = canonical_pair(g1);
    const auto [u2, v2] = canonical_pair(g2);
    std::vector<Element> f(3);
    f[g1.identity()] = g2.identity();
    f[u1] = u2;
    f[v1] = v2;
    if (is_isomorphism(g1, g2, f)) return f;
  }
  return Search(g1, g2).run();
}

}  // namespace mvg
