// The necessary singular-value criteria for infinitesimal Markovian
// divisibility, evaluated in log domain, plus generator-level spectral
// conditions and machine-checkable certificates.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "markdiv/superop.hpp"

namespace markdiv {

enum class CriterionId {
    det_nonnegative,
    power_smallest_sv,
    power_smallest_sv_improved,
    product_smallest_sv,
    interpolated,
    classical_power,
};

const char* criterion_name(CriterionId id) noexcept;

struct CriterionReport {
    CriterionId id = CriterionId::det_nonnegative;
    std::size_t k = 1;        // number of singular-value factors
    double p = 1.0;           // exponent
    double c = 1.0;           // classical class parameter (classical_power only)
    double lhs_log = 0.0;     // ln|det T|
    double rhs_log = 0.0;     // p * sum_{i<=k} ln s_i^up
    double margin = 0.0;      // rhs_log - lhs_log
    int det_sign = 1;
    bool violated = false;
    bool boundary = false;    // |margin| within report tolerance
    bool degenerate = false;  // a singular value is 0: bound holds trivially

    bool satisfied() const noexcept { return !violated; }
};

struct Certificate {
    std::string channel_hash;
    std::vector<CriterionReport> failing_criteria;
    bool not_infinitesimal_divisible = false;  // conclusion

    const char* conclusion() const noexcept {
        return not_infinitesimal_divisible ? "NotInfinitesimalDivisible" : "Inconclusive";
    }
};

inline constexpr double kReportTol = 1e-9;

// Standard exponent d/2 and the improved constant 2/(2+sqrt(13/8)) ~ 0.610733.
double improved_power_constant() noexcept;

// Number of singular-value factors floor(2d - 2*sqrt(2d) + 1), clamped to [1, d^2].
std::size_t product_criterion_k(std::size_t d) noexcept;

CriterionReport det_nonneg_criterion(const QuantumChannel& t, double tol = kReportTol);
CriterionReport power_criterion(const QuantumChannel& t, bool improved = false,
                                double tol = kReportTol);
CriterionReport product_criterion(const QuantumChannel& t, double tol = kReportTol);
CriterionReport interpolated_criterion(const QuantumChannel& t, std::size_t k,
                                       double tol = kReportTol);

Certificate full_report(const QuantumChannel& t, const std::vector<std::size_t>& k_list = {},
                        double tol = kReportTol);

// Tr[G+G*] - p * sum_{i=1..k} lambda_i^up(G+G*); the condition holds iff <= tol.
double generator_spectral_condition(const ComplexMatrix& g, std::size_t k, double p);
double generator_spectral_condition(const Superoperator& g, std::size_t k, double p);

// Supremum of exponents p with det <= (s_1^up)^p; +infinity when s_1^up >= 1,
// throws DegenerateSpectrum when det <= 0.
double max_valid_exponent(const QuantumChannel& t);

// FNV-1a digest of the superoperator bytes, hex.
std::string channel_hash(const Superoperator& s);

// Report evaluation shared with the classical module.
CriterionReport evaluate_log_criterion(CriterionId id, const std::vector<double>& sv_ascending,
                                       int det_sign, std::size_t k, double p,
                                       bool requires_nonneg_det, double tol);

} // namespace markdiv
