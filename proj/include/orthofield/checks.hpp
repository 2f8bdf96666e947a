#pragma once

#include "orthofield/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace orthofield {

// Floating-mode acceptance of an identity residual: |r| <= max(absolute,
// relative * scale). Exact mode ignores it and demands a literal zero.
struct Tolerance {
    double relative = 1e-10;
    double absolute = 1e-12;

    bool accepts(double residual, double scale) const {
        return residual <= std::max(absolute, relative * scale);
    }
};

/// Outcome of one verification pass over a family of identities.
///
/// `worst` holds the indices of the largest residual seen; its meaning is
/// check-specific ((k,l) for table identities, (k,l,k',l') for matrix
/// entries).
struct CheckResult {
    std::string name;
    Arithmetic arithmetic = Arithmetic::floating;
    double max_residual = 0.0;
    std::string max_residual_text = "0";
    std::vector<int> worst;
    std::size_t evaluated = 0;
    std::size_t failures = 0;

    bool passed() const { return failures == 0; }

    // Records a failure that is not a residual (a sign or structure check).
    void record_failure(double size, std::string text, std::vector<int> where) {
        ++evaluated;
        ++failures;
        if (failures == 1 || size > max_residual) {
            max_residual = size;
            max_residual_text = std::move(text);
            worst = std::move(where);
        }
    }

    void record_pass() { ++evaluated; }

    template <Scalar S>
    void observe(const S& residual, double scale, const Tolerance& tolerance,
                 std::vector<int> where) {
        ++evaluated;
        double size = magnitude(residual);
        bool ok = false;
        if constexpr (is_exact_v<S>) {
            ok = is_zero(residual);
        } else {
            ok = tolerance.accepts(size, scale);
        }
        if (!ok) ++failures;
        if (size > max_residual || (!ok && failures == 1 && worst.empty())) {
            max_residual = size;
            worst = std::move(where);
            if constexpr (is_exact_v<S>) {
                max_residual_text = (residual.sign() < 0 ? -residual : residual).str();
            } else {
                max_residual_text = format_double(size);
            }
        }
    }
};

}  // namespace orthofield
