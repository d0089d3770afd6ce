#include "mbe/verify.hpp"

#include <algorithm>
#include <functional>

#include "mbe/cones.hpp"
#include "mbe/ehrhart.hpp"
#include "mbe/error.hpp"
#include "mbe/oracle.hpp"
#include "mbe/transforms.hpp"

namespace mbe {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool q_integer_identity_check(long n) {
  const QInteger qn{Integer(n)};
  const LaurentPolynomial q = LaurentPolynomial::monomial(LatticeVector{1});
  const LaurentPolynomial one = LaurentPolynomial::one(1);
  const LaurentPolynomial qn_mono = LaurentPolynomial::monomial(LatticeVector{n});

  const LaurentPolynomial x = qn.polynomial(1, 0);
  const bool as_polynomial = one + q * x - x == qn_mono;

  const RationalFunction xr = qn.rational(1, 0);
  const RationalFunction lhs = RationalFunction(one) + xr * q - xr;
  const bool as_rational = lhs == RationalFunction(qn_mono);
  const bool forms_agree = xr == RationalFunction(x);
  return as_polynomial && as_rational && forms_agree;
}

std::vector<Integer> classical_counts_from_series(const Polytope& p, std::size_t bound) {
  const RationalFunction classical = specialize_classical(series(p));
  const LaurentPolynomial expansion =
      oracle::expand_truncated(classical, LatticeVector{1}, Integer(bound));
  std::vector<Integer> counts;
  for (std::size_t n = 1; n <= bound; ++n)
    counts.push_back(expansion.coefficient(LatticeVector{static_cast<long long>(n)}));
  return counts;
}

VerificationReport verify(const Polytope& p, std::size_t bound) {
  VerificationReport report;
  const std::size_t n = p.ambient_dim();
  auto run = [&](std::string name, std::string statement, const std::function<bool()>& check) {
    CheckResult r{std::move(name), std::move(statement), false, {}};
    try {
      r.passed = check();
      if (!r.passed) r.detail = "identity does not hold";
    } catch (const Error& e) {
      r.detail = std::string(to_string(e.code())) + ": " + e.what();
    }
    report.checks.push_back(std::move(r));
  };

  run("series_truncation", "Ehrhart series = 1 + sum_n sigma_{nP}(q) t^n", [&] {
    const EhrhartSeries s = series(p);
    LatticeVector grading = LatticeVector::unit(n + 1, n);
    const LaurentPolynomial e =
        oracle::expand_truncated(s.to_rational_function(), grading, Integer(bound));
    if (e.coefficient_of(n, 0) != LaurentPolynomial::one(n)) return false;
    for (std::size_t k = 1; k <= bound; ++k)
      if (e.coefficient_of(n, Integer(k)) != oracle::sigma_brute(p, k)) return false;
    return true;
  });
  run("series_numerator_degree", "rational form: numerator t-degree at most m-1", [&] {
    const EhrhartSeries s = series(p);
    return s.numerator().max_degree(n) <= Integer(p.vertex_count()) - 1;
  });
  run("delta_vector", "delta_0 = 1 and delta_1 = sigma_P(q) - sum_i q^{v_i}", [&] {
    const DeltaVector d = delta_vector(p);
    return d.entries.front().is_one();
  });
  run("brion", "Brion's theorem: sigma_P = sum of vertex-cone transforms",
      [&] { return brion_sum(p) == RationalFunction(sigma_polytope(p)); });
  run("vertex_cone_sum", "vertex-cone sum identity: sum_i sigma_{C_i}(q) = 1",
      [&] { return vertex_cone_sum_check(p); });
  run("stanley_cone_over", "Stanley reciprocity on the cone over P",
      [&] { return stanley_reciprocity_check(cone_over(p)); });
  run("stanley_vertex_cones", "Stanley reciprocity on every vertex cone", [&] {
    for (std::size_t i = 0; i < p.vertex_count(); ++i)
      if (!stanley_reciprocity_check(shifted_vertex_cone(p, i))) return false;
    return true;
  });
  run("translate_series", "series translation: Ehr_{P+w}(t) = Ehr_P(q^w t)", [&] {
    LatticeVector ramp(n);
    for (std::size_t k = 0; k < n; ++k) ramp[k] = (k % 2 ? -1 : 1) * static_cast<long>(k + 1);
    return translate_series_check(p, LatticeVector::unit(n, 0)) && translate_series_check(p, ramp);
  });
  run("classical_specialization", "q = 1 specialization gives the classical counts", [&] {
    const auto counts = classical_counts_from_series(p, bound);
    for (std::size_t k = 1; k <= bound; ++k)
      if (counts[k - 1] != Integer(oracle::enumerate_dilate(p, k).size())) return false;
    return true;
  });
  run("q_integer_identity", "q-integer identity (1 + q x - x)|_{x=[n]_q} = q^n", [&] {
    const long b = static_cast<long>(bound);
    for (long k = -b; k <= b; ++k)
      if (!q_integer_identity_check(k)) return false;
    return true;
  });

  if (!p.in_nonnegative_orthant()) {
    report.checks.push_back(CheckResult{
        "multibasic_polynomial", "multibasic Ehrhart polynomial identities", true,
        "skipped: polynomial requires the nonnegative orthant"});
    return report;
  }
  run("polynomial_oracle", "L_P([n]_q) = sigma_{nP}(q) for n >= 1", [&] {
    const EhrhartPolynomial l = ehrhart_polynomial(p);
    for (std::size_t k = 1; k <= bound; ++k)
      if (!(evaluate_at_q_integers(l, k) == RationalFunction(oracle::sigma_brute(p, k))))
        return false;
    return true;
  });
  run("polynomial_constant_and_degree",
      "constant part of L_P is 1 and deg L_P = max_i sum_k v_ik", [&] {
        const EhrhartPolynomial l = ehrhart_polynomial(p);
        Integer expected = 0;
        for (const auto& v : p.vertices()) expected = std::max(expected, v.total_degree());
        return l.constant_part() == RationalFunction(LaurentPolynomial::one(n)) &&
               l.total_degree() == expected;
      });
  run("reciprocity", "multibasic reciprocity: L_P([-n]_q) = (-1)^d sigma_{nP interior}(1/q)", [&] {
    for (std::size_t k = 1; k <= bound; ++k)
      if (!reciprocity_check(p, k)) return false;
    return true;
  });
  run("translate_polynomial",
      "polynomial translation: L_{P+w} = L_P prod_k (1 + q_k x_k - x_k)^{w_k}", [&] {
        LatticeVector ones(n);
        for (std::size_t k = 0; k < n; ++k) ones[k] = 1;
        return translate_polynomial_check(p, LatticeVector::unit(n, 0)) &&
               translate_polynomial_check(p, ones);
      });
  run("bilateral_cancellation", "bilateral series cancellation per vertex",
      [&] { return bilateral_cancellation_check(p, bound); });
  return report;
}

}  // namespace mbe
