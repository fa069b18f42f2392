#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mvg/srg/params.hpp"

namespace mvg::classify {

using srg::SrgParams;

// Items I..IX of the affine rank 3 classification, then the sporadic table.
enum class FamilyId { I, II, III, IV, V, VI, VII, VIII, IX, Table };

struct FamilyDescriptor {
  FamilyId id = FamilyId::I;
  int table_row = 0;  // 1-based, Table only
  SrgParams params;   // lower-valency orientation
  // Defining integers in item order, e.g. {{"p",2},{"t",1},{"s",1}}.
  std::vector<std::pair<std::string, std::int64_t>> witness;

  std::string label() const;         // "III", "TABLE(3)"
  std::string witness_str() const;   // "p=2;t=1;s=1", eps rendered as + / -
  bool operator==(const FamilyDescriptor&) const = default;
};

// The sporadic rows, as (v, k, lambda, mu).
const std::vector<SrgParams>& table_rows();

// Complement if k > v-k-1; on a tie keep the orientation with larger lambda.
SrgParams canonical(const SrgParams& p);

// All descriptors on exactly v vertices, in item order then table order.
std::vector<FamilyDescriptor> families_with_v(std::int64_t v);

// Every descriptor with v <= v_max, sorted by (v, k, lambda, mu, family).
std::vector<FamilyDescriptor> enumerate_families(std::int64_t v_max);

struct Collision {
  SrgParams params;
  std::vector<FamilyDescriptor> families;
};

// Parameter sets emitted by more than one descriptor.
std::vector<Collision> collisions(const std::vector<FamilyDescriptor>& families);

// Canonicalizes, then returns every matching descriptor; empty when the
// parameters are not attainable. InputError if the parameter relation fails.
std::vector<FamilyDescriptor> match_params(std::int64_t v, std::int64_t k, std::int64_t lambda,
                                           std::int64_t mu);

// v,k,lambda,mu,family,witness
std::string catalogue_csv(const std::vector<FamilyDescriptor>& families);

}  // namespace mvg::classify
