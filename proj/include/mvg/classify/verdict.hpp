#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "mvg/classify/families.hpp"
#include "mvg/core/order3.hpp"

namespace mvg::classify {

struct Verdict {
  enum class Kind { XK, SRG, NONE };

  bool coset = false;
  Kind kind = Kind::NONE;
  std::int64_t xk = 0;                     // XK: k
  std::vector<FamilyDescriptor> matches;   // SRG: all matches, first is the witness
  std::string reason;                      // NONE
  std::optional<SrgParams> derived;
};

// Symmetric-star ratios (1/k, 1/kbar, lambda/k) back to (v, k, lambda, mu);
// none when they do not describe a strongly regular graph. UnsupportedError
// for swap-star signatures.
std::optional<SrgParams> derive_params(const Signature& sig);

// Whether an order-3 involutive group is isomorphic to a coset group.
// InputError unless g has order 3 and satisfies all axioms.
Verdict classify_order3(const MultivaluedGroup& g);

nlohmann::json to_json(const Verdict& v);

}  // namespace mvg::classify
