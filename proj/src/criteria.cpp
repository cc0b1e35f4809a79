#include "markdiv/criteria.hpp"

#include <cmath>
#include <cstring>
#include <limits>

#include "markdiv/spectra.hpp"

namespace markdiv {

const char* criterion_name(CriterionId id) noexcept {
    switch (id) {
        case CriterionId::det_nonnegative: return "DetNonNegative";
        case CriterionId::power_smallest_sv: return "PowerSmallestSV";
        case CriterionId::power_smallest_sv_improved: return "PowerSmallestSVImproved";
        case CriterionId::product_smallest_sv: return "ProductSmallestSV";
        case CriterionId::interpolated: return "Interpolated";
        case CriterionId::classical_power: return "ClassicalPower";
    }
    return "Unknown";
}

double improved_power_constant() noexcept { return 2.0 / (2.0 + std::sqrt(13.0 / 8.0)); }

std::size_t product_criterion_k(std::size_t d) noexcept {
    const double dd = static_cast<double>(d);
    const double f = 2.0 * dd - 2.0 * std::sqrt(2.0 * dd) + 1.0;
    auto k = static_cast<long long>(std::floor(f));
    if (k < 1) k = 1;
    const long long cap = static_cast<long long>(d * d);
    if (k > cap) k = cap;
    return static_cast<std::size_t>(k);
}

CriterionReport evaluate_log_criterion(CriterionId id, const std::vector<double>& sv,
                                       int det_sign, std::size_t k, double p,
                                       bool requires_nonneg_det, double tol) {
    if (k < 1 || k > sv.size()) fail(errc::k_out_of_range, "criterion k=" + std::to_string(k));

    CriterionReport rep;
    rep.id = id;
    rep.k = k;
    rep.p = p;
    rep.det_sign = det_sign;

    const double s_max = sv.empty() ? 0.0 : sv.back();
    const double zero_tol = 1e-12 * s_max;
    rep.degenerate = s_max == 0.0 || sv.front() < zero_tol;

    if (rep.degenerate) {
        // det = 0: every bound 0 <= det <= (...)^p holds trivially.
        rep.lhs_log = -std::numeric_limits<double>::infinity();
        if (sv[k - 1] < zero_tol) {
            rep.rhs_log = -std::numeric_limits<double>::infinity();
        } else {
            double s = 0.0;
            for (std::size_t i = 0; i < k; ++i) s += std::log(sv[i]);
            rep.rhs_log = p * s;
        }
        rep.margin = std::numeric_limits<double>::infinity();
        rep.violated = false;
        return rep;
    }

    double lhs = 0.0;
    for (double v : sv) lhs += std::log(v);
    double rhs = 0.0;
    for (std::size_t i = 0; i < k; ++i) rhs += std::log(sv[i]);
    rhs *= p;

    rep.lhs_log = lhs;
    rep.rhs_log = rhs;
    rep.margin = rhs - lhs;

    if (requires_nonneg_det && det_sign < 0 && lhs > std::log(tol)) {
        rep.violated = true;
        return rep;
    }
    if (det_sign < 0) {
        // Signed det <= positive bound holds automatically.
        rep.violated = false;
        return rep;
    }
    rep.violated = rep.margin < -tol;
    rep.boundary = std::abs(rep.margin) <= tol;
    return rep;
}

namespace {

struct ChannelSpectralData {
    std::vector<double> sv;
    int det_sign = 1;
};

ChannelSpectralData channel_spectral_data(const QuantumChannel& t) {
    ChannelSpectralData data;
    data.sv = singular_values_ascending(t.superop.matrix).values;
    data.det_sign = channel_det_sign(t.superop);
    return data;
}

} // namespace

CriterionReport det_nonneg_criterion(const QuantumChannel& t, double tol) {
    const auto data = channel_spectral_data(t);
    // det >= 0 alone: k = d^2, p = 1 gives margin 0 by construction; the
    // verdict only tracks the sign.
    CriterionReport rep = evaluate_log_criterion(CriterionId::det_nonnegative, data.sv,
                                                 data.det_sign, data.sv.size(), 1.0, true, tol);
    if (!rep.degenerate) rep.violated = data.det_sign < 0 && rep.lhs_log > std::log(tol);
    return rep;
}

CriterionReport power_criterion(const QuantumChannel& t, bool improved, double tol) {
    const auto data = channel_spectral_data(t);
    const double d = static_cast<double>(t.dim());
    const double p = improved ? improved_power_constant() * d : 0.5 * d;
    return evaluate_log_criterion(
        improved ? CriterionId::power_smallest_sv_improved : CriterionId::power_smallest_sv,
        data.sv, data.det_sign, 1, p, true, tol);
}

CriterionReport product_criterion(const QuantumChannel& t, double tol) {
    const auto data = channel_spectral_data(t);
    return evaluate_log_criterion(CriterionId::product_smallest_sv, data.sv, data.det_sign,
                                  product_criterion_k(t.dim()), 1.0, true, tol);
}

CriterionReport interpolated_criterion(const QuantumChannel& t, std::size_t k, double tol) {
    const std::size_t d = t.dim();
    if (k < 1 || k > d * d) fail(errc::k_out_of_range, "interpolated k=" + std::to_string(k));
    const auto data = channel_spectral_data(t);
    const double kk = static_cast<double>(k);
    const double p = 2.0 * static_cast<double>(d) / (kk + 2.0 * std::sqrt(kk) + 1.0);
    return evaluate_log_criterion(CriterionId::interpolated, data.sv, data.det_sign, k, p, true,
                                  tol);
}

std::string channel_hash(const Superoperator& s) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* bytes, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(bytes);
        for (std::size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    };
    const std::uint64_t dim = s.dim;
    mix(&dim, sizeof dim);
    mix(s.matrix.data(), s.matrix.size() * sizeof(cx));

    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

Certificate full_report(const QuantumChannel& t, const std::vector<std::size_t>& k_list,
                        double tol) {
    const auto data = channel_spectral_data(t);
    const double d = static_cast<double>(t.dim());

    std::vector<CriterionReport> reports;
    {
        CriterionReport rep = evaluate_log_criterion(CriterionId::det_nonnegative, data.sv,
                                                     data.det_sign, data.sv.size(), 1.0, true, tol);
        if (!rep.degenerate) rep.violated = data.det_sign < 0 && rep.lhs_log > std::log(tol);
        reports.push_back(rep);
    }
    reports.push_back(evaluate_log_criterion(CriterionId::power_smallest_sv, data.sv,
                                             data.det_sign, 1, 0.5 * d, true, tol));
    reports.push_back(evaluate_log_criterion(CriterionId::power_smallest_sv_improved, data.sv,
                                             data.det_sign, 1, improved_power_constant() * d, true,
                                             tol));
    reports.push_back(evaluate_log_criterion(CriterionId::product_smallest_sv, data.sv,
                                             data.det_sign, product_criterion_k(t.dim()), 1.0,
                                             true, tol));
    for (std::size_t k : k_list) {
        if (k < 1 || k > data.sv.size())
            fail(errc::k_out_of_range, "full_report k=" + std::to_string(k));
        const double kk = static_cast<double>(k);
        reports.push_back(evaluate_log_criterion(CriterionId::interpolated, data.sv, data.det_sign,
                                                 k, 2.0 * d / (kk + 2.0 * std::sqrt(kk) + 1.0),
                                                 true, tol));
    }

    Certificate cert;
    cert.channel_hash = channel_hash(t.superop);
    for (const auto& rep : reports)
        if (rep.violated) cert.failing_criteria.push_back(rep);
    cert.not_infinitesimal_divisible = !cert.failing_criteria.empty();
    return cert;
}

double generator_spectral_condition(const ComplexMatrix& g, std::size_t k, double p) {
    g.require_square("generator_spectral_condition");
    const std::size_t n = g.rows();
    if (k < 1 || k > n) fail(errc::k_out_of_range, "spectral condition k=" + std::to_string(k));

    const ComplexMatrix sym = g + g.adjoint();
    const auto spectrum = hermitian_eigenvalues_ascending(sym, 1e-8);
    double partial = 0.0;
    for (std::size_t i = 0; i < k; ++i) partial += spectrum.values[i];
    return sym.trace().real() - p * partial;
}

double generator_spectral_condition(const Superoperator& g, std::size_t k, double p) {
    return generator_spectral_condition(g.matrix, k, p);
}

double max_valid_exponent(const QuantumChannel& t) {
    const auto data = channel_spectral_data(t);
    const double s_min = data.sv.front();
    const double s_max = data.sv.back();
    if (s_min >= 1.0) return std::numeric_limits<double>::infinity();
    if (data.det_sign <= 0 || s_max == 0.0 || s_min < 1e-12 * s_max)
        fail(errc::degenerate_spectrum, "max_valid_exponent needs det > 0");

    double lndet = 0.0;
    for (double v : data.sv) lndet += std::log(v);
    return lndet / std::log(s_min);
}

} // namespace markdiv
