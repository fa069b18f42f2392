#include "mvg/core/error.hpp"

namespace mvg {
namespace {

std::string describe(const std::string& axiom, const std::vector<std::size_t>& witness) {
  std::string msg = "not a multivalued group: " + axiom + " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) msg += ",";
    msg += std::to_string(witness[i]);
  }
  return msg + ")";
}

}  // namespace

NotAGroupError::NotAGroupError(std::string axiom, std::vector<std::size_t> witness)
    : Error(describe(axiom, witness)), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

}  // namespace mvg
