#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "condkit/linalg.hpp"

namespace condkit::surgery {

/// Tail replacement plan for an n x n matrix.
///
/// Positions are 1-based along the diagonal. The replacement value is the
/// convex combination of the original singular values at positions
/// cut - 1 ... n, and it overwrites every position cut ... n. The plan's size
/// n is implied by the weight count: n = cut + weights.size() - 2.
class SurgeryPlan {
public:
    [[nodiscard]] int cut() const noexcept { return cut_; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }
    /// Matrix order this plan applies to.
    [[nodiscard]] std::size_t order() const noexcept { return static_cast<std::size_t>(cut_) + weights_.size() - 2; }

    friend bool operator==(const SurgeryPlan&, const SurgeryPlan&) = default;

private:
    friend SurgeryPlan build_plan(int cut, std::vector<double> weights);
    SurgeryPlan(int cut, std::vector<double> weights) : cut_(cut), weights_(std::move(weights)) {}

    int cut_ = 2;
    std::vector<double> weights_;
};

/// Validates and normalizes a plan. Weights must be finite and non-negative
/// and sum to 1 within 1e-9; they are then rescaled to sum to 1. Requires
/// cut >= 2 and at least two weights (which is cut <= n). Throws InvalidPlan.
SurgeryPlan build_plan(int cut, std::vector<double> weights);

/// Convex combination of `sigma` under `plan`, clamped into
/// [sigma_n, sigma_{cut-1}] against rounding. InvalidPlan if sigma.size()
/// differs from the plan order.
double replaced_value(std::span<const double> sigma, const SurgeryPlan& plan);

/// Before/after spectral quantities of one surgery. The after values follow
/// analytically from the modified spectrum (sigma_1 is never touched).
/// Inverse-based fields are empty when the corresponding matrix is
/// numerically singular.
struct SurgeryReport {
    double norm_before = 0.0;
    double norm_after = 0.0;
    std::optional<double> inverse_norm_before;
    std::optional<double> inverse_norm_after;
    std::optional<double> kappa_before;
    std::optional<double> kappa_after;
    double replaced_value = 0.0;
};

struct SurgeryResult {
    linalg::Matrix matrix;
    SurgeryReport report;
};

/// Decompose, replace the tail singular values and reconstruct. Never inverts
/// the input. InvalidInput for a non-square, non-finite or order < 2 input;
/// InvalidPlan when the plan order differs from the matrix order.
SurgeryResult apply_surgery(const linalg::Matrix& a, const SurgeryPlan& plan);

enum class Preset {
    TailToSigma2,  ///< positions 3..n take sigma_2
    ThirdOne,      ///< positions 2..n take sigma_1 / 3 + 2 sigma_2 / 3
    HalfHalf,      ///< positions 2..n take (sigma_1 + sigma_2) / 2
    FullOrtho,     ///< every position takes sigma_1
};

inline constexpr Preset kAllPresets[] = {Preset::TailToSigma2, Preset::ThirdOne, Preset::HalfHalf,
                                         Preset::FullOrtho};

std::string_view preset_name(Preset p) noexcept;
std::optional<Preset> parse_preset(std::string_view name) noexcept;

/// Plan for one preset at matrix order n (n >= 2, InvalidPlan otherwise).
/// For n == 2 TAIL_TO_SIGMA2 degenerates to the identity surgery (sigma_2 kept).
SurgeryPlan preset_plan(Preset p, std::size_t n);

/// Every preset at order n, in declaration order.
std::vector<std::pair<Preset, SurgeryPlan>> preset_plans(std::size_t n);

/// Parses either a preset name (case-insensitive) or the `j=<cut>:w=<w1>,<w2>,...`
/// form. Preset names need the matrix order, hence the argument.
SurgeryPlan parse_plan(std::string_view spec, std::size_t n);

}  // namespace condkit::surgery
