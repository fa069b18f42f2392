#include "mvg/classify/verdict.hpp"

#include <numeric>

#include "mvg/algebra/number_theory.hpp"
#include "mvg/core/axioms.hpp"
#include "mvg/core/error.hpp"

namespace mvg::classify {

std::optional<SrgParams> derive_params(const Signature& sig) {
  if (sig.kind != Signature::Kind::kSymmetricStar)
    throw UnsupportedError("parameters can only be derived from a symmetric-star signature");
  if (sig.ratios.size() != 3) throw InputError("symmetric-star signature needs three ratios");
  const Ratio& r1 = sig.ratios[0];
  const Ratio& r2 = sig.ratios[1];
  const Ratio& ra = sig.ratios[2];
  if (r1.numerator() != 1 || r2.numerator() != 1) return std::nullopt;
  const std::int64_t k = r1.denominator();
  const std::int64_t kbar = r2.denominator();
  const Ratio lam = ra * k;
  if (lam.denominator() != 1 || lam.numerator() < 0) return std::nullopt;
  const std::int64_t lambda = lam.numerator();
  if (lambda > k - 1) return std::nullopt;
  const std::int64_t num = k * (k - 1 - lambda);
  if (num % kbar != 0) return std::nullopt;
  try {
    return SrgParams::make(k + kbar + 1, k, lambda, num / kbar);
  } catch (const ParameterError&) {
    return std::nullopt;
  }
}

Verdict classify_order3(const MultivaluedGroup& g) {
  if (g.order() != 3) throw InputError("classification needs a group of order 3");
  const auto report = full_report(g);
  if (!report.all_pass()) {
    const auto& c = report.counterexamples.front();
    throw InputError("not an involutive multivalued group: " + c.axiom + " fails (" + c.condition + ")");
  }
  const auto sig = signature(g);
  Verdict out;
  if (sig.kind == Signature::Kind::kSwapStar) {
    const auto [u, v] = canonical_pair(g);
    (void)v;
    const std::int64_t n = g.valency();
    const std::int64_t a = g.m(u, u, u);
    const std::int64_t d = n - 2 * a;
    if (d <= 0 || d != std::gcd(a, n)) {
      out.reason = "a/n = " + std::to_string(a) + "/" + std::to_string(n) + " is not k/(2k+1)";
      return out;
    }
    const std::int64_t k = a / d;
    if (!algebra::is_prime_power(4 * k + 3)) {
      out.reason = "4k+3 = " + std::to_string(4 * k + 3) + " is not a prime power";
      return out;
    }
    out.coset = true;
    out.kind = Verdict::Kind::XK;
    out.xk = k;
    return out;
  }
  out.derived = derive_params(sig);
  if (!out.derived) {
    out.reason = "ratios do not come from a strongly regular graph";
    return out;
  }
  const auto& p = *out.derived;
  out.matches = match_params(p.v, p.k, p.lambda, p.mu);
  if (out.matches.empty()) {
    out.reason = algebra::is_prime_power(p.v)
                     ? "parameters " + p.str() + " are not attainable"
                     : "v = " + std::to_string(p.v) + " is not a prime power";
    return out;
  }
  out.coset = true;
  out.kind = Verdict::Kind::SRG;
  return out;
}

nlohmann::json to_json(const Verdict& v) {
  using nlohmann::json;
  json out{{"coset", v.coset}};
  auto witness_json = [](const FamilyDescriptor& f) {
    json w = json::object();
    for (const auto& [name, value] : f.witness) {
      if (name == "eps") w[name] = value > 0 ? "+" : "-";
      else w[name] = value;
    }
    return w;
  };
  switch (v.kind) {
    case Verdict::Kind::XK:
      out["kind"] = "XK";
      out["witness"] = {{"k", v.xk}, {"order", 4 * v.xk + 3}};
      break;
    case Verdict::Kind::SRG: {
      out["kind"] = "SRG";
      out["family"] = v.matches.front().label();
      out["witness"] = witness_json(v.matches.front());
      json all = json::array();
      for (const auto& f : v.matches) all.push_back({{"family", f.label()}, {"witness", witness_json(f)}});
      out["matches"] = std::move(all);
      break;
    }
    case Verdict::Kind::NONE:
      out["kind"] = "NONE";
      out["reason"] = v.reason;
      break;
  }
  if (v.derived) out["derived"] = {v.derived->v, v.derived->k, v.derived->lambda, v.derived->mu};
  return out;
}

}  // namespace mvg::classify
