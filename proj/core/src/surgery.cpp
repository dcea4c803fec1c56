#include "condkit/surgery.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

namespace condkit::surgery {

SurgeryPlan build_plan(int cut, std::vector<double> weights) {
    if (cut < 2) throw Error(ErrorCode::InvalidPlan, "cut index must be >= 2, got " + std::to_string(cut));
    if (weights.size() < 2) {
        throw Error(ErrorCode::InvalidPlan, "need weights for positions cut-1 .. n (at least two)");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w)) throw Error(ErrorCode::InvalidPlan, "weights must be finite");
        if (w < 0.0) throw Error(ErrorCode::InvalidPlan, "weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw Error(ErrorCode::InvalidPlan, "weights must sum to 1, got " + std::to_string(sum));
    }
    if (sum != 1.0)
        for (auto& w : weights) w /= sum;
    return SurgeryPlan(cut, std::move(weights));
}

double replaced_value(std::span<const double> sigma, const SurgeryPlan& plan) {
    if (sigma.size() != plan.order()) {
        throw Error(ErrorCode::InvalidPlan, "plan is for order " + std::to_string(plan.order()) + ", spectrum has " +
                                                std::to_string(sigma.size()) + " values");
    }
    const std::size_t first = static_cast<std::size_t>(plan.cut()) - 2;  // 0-based index of sigma_{cut-1}
    double value = 0.0;
    for (std::size_t k = 0; k < plan.weights().size(); ++k) value += plan.weights()[k] * sigma[first + k];
    return std::clamp(value, sigma.back(), sigma[first]);
}

SurgeryResult apply_surgery(const linalg::Matrix& a, const SurgeryPlan& plan) {
    if (a.empty() || !a.all_finite()) throw Error(ErrorCode::InvalidInput, "surgery needs a finite matrix");
    if (!a.is_square() || a.rows() < 2) throw Error(ErrorCode::InvalidInput, "surgery needs a square matrix of order >= 2");

    linalg::SvdFactors f = linalg::svd(a);
    const double sigma_tilde = replaced_value(f.sigma, plan);

    SurgeryReport report;
    report.replaced_value = sigma_tilde;
    report.norm_before = f.sigma.front();
    if (!linalg::is_numerically_singular(f.sigma)) {
        report.inverse_norm_before = 1.0 / f.sigma.back();
        report.kappa_before = f.sigma.front() / f.sigma.back();
    }

    for (std::size_t k = static_cast<std::size_t>(plan.cut()) - 1; k < f.sigma.size(); ++k) f.sigma[k] = sigma_tilde;
    report.norm_after = f.sigma.front();
    if (!linalg::is_numerically_singular(f.sigma)) {
        report.inverse_norm_after = 1.0 / sigma_tilde;
        report.kappa_after = f.sigma.front() / sigma_tilde;
    }
    return {linalg::reconstruct(f), report};
}

std::string_view preset_name(Preset p) noexcept {
    switch (p) {
        case Preset::TailToSigma2: return "TAIL_TO_SIGMA2";
        case Preset::ThirdOne: return "THIRD_ONE";
        case Preset::HalfHalf: return "HALF_HALF";
        case Preset::FullOrtho: return "FULL_ORTHO";
    }
    return "";
}

std::optional<Preset> parse_preset(std::string_view name) noexcept {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (Preset p : kAllPresets)
        if (preset_name(p) == upper) return p;
    return std::nullopt;
}

SurgeryPlan preset_plan(Preset p, std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidPlan, "presets need order >= 2");
    // Cut 2: weights over sigma_1 .. sigma_n.
    std::vector<double> over_all(n, 0.0);
    switch (p) {
        case Preset::TailToSigma2: {
            if (n == 2) return build_plan(2, {0.0, 1.0});
            std::vector<double> w(n - 1, 0.0);  // cut 3: weights over sigma_2 .. sigma_n
            w[0] = 1.0;
            return build_plan(3, std::move(w));
        }
        case Preset::ThirdOne:
            over_all[0] = 1.0 / 3.0;
            over_all[1] = 2.0 / 3.0;
            break;
        case Preset::HalfHalf:
            over_all[0] = 0.5;
            over_all[1] = 0.5;
            break;
        case Preset::FullOrtho:
            over_all[0] = 1.0;
            break;
    }
    return build_plan(2, std::move(over_all));
}

std::vector<std::pair<Preset, SurgeryPlan>> preset_plans(std::size_t n) {
    std::vector<std::pair<Preset, SurgeryPlan>> out;
    for (Preset p : kAllPresets) out.emplace_back(p, preset_plan(p, n));
    return out;
}

namespace {

double parse_weight(std::string_view text) {
    double v = 0.0;
    // Allow simple fractions such as 1/3 for presets written by hand.
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return parse_weight(text.substr(0, slash)) / parse_weight(text.substr(slash + 1));
    }
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw Error(ErrorCode::InvalidPlan, "bad weight '" + std::string(text) + "'");
    return v;
}

}  // namespace

SurgeryPlan parse_plan(std::string_view spec, std::size_t n) {
    if (auto preset = parse_preset(spec)) return preset_plan(*preset, n);

    // j=<cut>:w=<w1>,<w2>,...
    const auto colon = spec.find(':');
    if (!spec.starts_with("j=") || colon == std::string_view::npos || spec.substr(colon + 1).substr(0, 2) != "w=") {
        throw Error(ErrorCode::InvalidPlan, "plan must be a preset name or j=<cut>:w=<w1>,<w2>,...; got '" +
                                                std::string(spec) + "'");
    }
    const std::string_view cut_text = spec.substr(2, colon - 2);
    int cut = 0;
    auto [ptr, ec] = std::from_chars(cut_text.data(), cut_text.data() + cut_text.size(), cut);
    if (ec != std::errc{} || ptr != cut_text.data() + cut_text.size()) {
        throw Error(ErrorCode::InvalidPlan, "bad cut index '" + std::string(cut_text) + "'");
    }
    std::vector<double> weights;
    std::string_view rest = spec.substr(colon + 3);
    while (true) {
        const auto comma = rest.find(',');
        weights.push_back(parse_weight(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return build_plan(cut, std::move(weights));
}

}  // namespace condkit::surgery
