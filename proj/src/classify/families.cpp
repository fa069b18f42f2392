#include "mvg/classify/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "mvg/algebra/number_theory.hpp"
#include "mvg/core/error.hpp"
#include "mvg/srg/family_params.hpp"

namespace mvg::classify {

using algebra::is_prime;

namespace {

const char* kItemNames[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};

std::int64_t ipow(std::int64_t p, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= p;
  return r;
}

auto sort_key(const FamilyDescriptor& f) {
  return std::make_tuple(f.params, static_cast<int>(f.id), f.table_row, f.witness);
}

}  // namespace

std::string FamilyDescriptor::label() const {
  if (id == FamilyId::Table) return "TABLE(" + std::to_string(table_row) + ")";
  return kItemNames[static_cast<int>(id)];
}

std::string FamilyDescriptor::witness_str() const {
  std::string out;
  for (const auto& [name, value] : witness) {
    if (!out.empty()) out += ';';
    out += name + '=';
    out += name == "eps" ? (value > 0 ? "+" : "-") : std::to_string(value);
  }
  return out;
}

const std::vector<SrgParams>& table_rows() {
  static const std::vector<SrgParams> rows = [] {
    const std::int64_t raw[][4] = {
        {64, 18, 2, 6},          {169, 72, 31, 30},       {243, 22, 1, 2},
        {243, 110, 37, 60},      {256, 45, 16, 6},        {256, 102, 38, 42},
        {361, 144, 59, 56},      {625, 144, 43, 30},      {625, 240, 95, 90},
        {841, 168, 47, 30},      {961, 240, 71, 56},      {961, 360, 139, 132},
        {1681, 480, 149, 132},   {2048, 276, 44, 36},     {2048, 759, 310, 264},
        {2401, 240, 59, 20},     {2401, 720, 229, 210},   {2401, 960, 389, 380},
        {4096, 1575, 614, 600},  {5041, 840, 179, 132},   {6241, 1560, 419, 380},
        {6561, 1440, 351, 306},  {15625, 7560, 3655, 3660}, {531441, 65520, 8559, 8010}};
    std::vector<SrgParams> out;
    for (const auto& r : raw) out.push_back(SrgParams::make(r[0], r[1], r[2], r[3]));
    return out;
  }();
  return rows;
}

SrgParams canonical(const SrgParams& p) {
  const auto q = srg::complement_params(p);
  if (p.k != q.k) return p.k < q.k ? p : q;
  return p.lambda >= q.lambda ? p : q;
}

std::vector<FamilyDescriptor> families_with_v(std::int64_t v) {
  std::vector<FamilyDescriptor> out;
  if (v < 4) return out;
  const auto pp = algebra::is_prime_power(v);
  if (!pp) return out;
  const std::int64_t p = pp->p;
  const std::int64_t d = pp->d;
  auto emit = [&](FamilyId id, const SrgParams& params,
                  std::vector<std::pair<std::string, std::int64_t>> witness, int row = 0) {
    out.push_back({id, row, canonical(params), std::move(witness)});
  };

  // (i) p^s cliques of size p^t
  for (std::int64_t t = 1; t < d; ++t)
    emit(FamilyId::I, srg::clique_union_params(p, t, d - t), {{"p", p}, {"t", t}, {"s", d - t}});
  // (ii) q x q grid
  if (d % 2 == 0) {
    const auto q = ipow(p, d / 2);
    emit(FamilyId::II, srg::grid_params(q), {{"q", q}});
  }
  // (iii) Paley, v = 4t+1
  if (v % 4 == 1) emit(FamilyId::III, srg::paley_params(v), {{"t", (v - 1) / 4}});
  // (iv) Van Lint-Schrijver, v = p^((c-1)t). Instances with mu = 0 are
  // disjoint cliques already listed under (i) and are skipped.
  for (std::int64_t c = 3; c - 1 <= d; c += 2) {
    if (!is_prime(c) || d % (c - 1) != 0 || p == c) continue;
    if (algebra::mult_order(p, c) != c - 1) continue;
    const std::int64_t t = d / (c - 1);
    const std::array<std::int64_t, 3> tuple{p, c, t};
    if (std::find(srg::kVlsExcluded.begin(), srg::kVlsExcluded.end(), tuple) != srg::kVlsExcluded.end())
      continue;
    const auto params = srg::vls_params(p, c, t);
    if (params.mu == 0) continue;
    emit(FamilyId::IV, params, {{"p", p}, {"c", c}, {"t", t}});
  }
  // q = p^j with v = q^(m e): (v) m = 2, e >= 3; (vi) m = 2, e >= 2.
  for (std::int64_t j = 1; j <= d; ++j) {
    if (d % j != 0) continue;
    const auto q = ipow(p, j);
    const auto exp = d / j;  // v = q^exp
    if (exp % 2 == 0 && exp / 2 >= 3)
      emit(FamilyId::V, srg::bilinear_params(q, exp / 2), {{"q", q}, {"e", exp / 2}});
    if (exp % 2 == 0 && exp / 2 >= 2)
      for (int eps : {1, -1}) {
        if (q == 2 && eps == 1) continue;
        emit(FamilyId::VI, srg::polar_params(q, exp / 2, eps), {{"q", q}, {"e", exp / 2}, {"eps", eps}});
      }
  }
  // (vii) complement of the + polar graph over GF(2)
  if (p == 2 && d % 2 == 0 && d / 2 >= 2)
    emit(FamilyId::VII, srg::polar_plus_complement_params(d / 2), {{"e", d / 2}});
  // (viii) q^10, (ix) q^16
  if (d % 10 == 0) {
    const auto q = ipow(p, d / 10);
    emit(FamilyId::VIII, srg::alternating_params(q), {{"q", q}});
  }
  if (d % 16 == 0) {
    const auto q = ipow(p, d / 16);
    emit(FamilyId::IX, srg::half_spin_params(q), {{"q", q}});
  }
  const auto& rows = table_rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].v == v)
      emit(FamilyId::Table, rows[i], {{"row", static_cast<std::int64_t>(i + 1)}},
           static_cast<int>(i + 1));
  return out;
}

std::vector<FamilyDescriptor> enumerate_families(std::int64_t v_max) {
  if (v_max < 4) throw InputError("enumerate: need v_max >= 4");
  std::vector<FamilyDescriptor> out;
  for (std::int64_t v = 4; v <= v_max; ++v) {
    auto here = families_with_v(v);
    out.insert(out.end(), here.begin(), here.end());
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });
  return out;
}

std::vector<Collision> collisions(const std::vector<FamilyDescriptor>& families) {
  std::map<SrgParams, std::vector<FamilyDescriptor>> by_params;
  for (const auto& f : families) by_params[f.params].push_back(f);
  std::vector<Collision> out;
  for (auto& [params, fs] : by_params)
    if (fs.size() > 1) out.push_back({params, std::move(fs)});
  return out;
}

std::vector<FamilyDescriptor> match_params(std::int64_t v, std::int64_t k, std::int64_t lambda,
                                           std::int64_t mu) {
  SrgParams p;
  try {
    p = SrgParams::make(v, k, lambda, mu);
  } catch (const ParameterError& e) {
    throw InputError(std::string("not a valid parameter set: ") + e.what());
  }
  const auto c = canonical(p);
  std::vector<FamilyDescriptor> out;
  for (auto& f : families_with_v(v))
    if (f.params == c) out.push_back(std::move(f));
  return out;
}

std::string catalogue_csv(const std::vector<FamilyDescriptor>& families) {
  std::ostringstream out;
  out << "v,k,lambda,mu,family,witness\n";
  for (const auto& f : families)
    out << f.params.v << ',' << f.params.k << ',' << f.params.lambda << ',' << f.params.mu << ','
        << f.label() << ',' << f.witness_str() << '\n';
  return out.str();
}

}  // namespace mvg::classify
