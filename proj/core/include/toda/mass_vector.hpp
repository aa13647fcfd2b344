#pragma once

/**
 * @file mass_vector.hpp
 * @brief Algebra descriptors and local-mass vectors σ = (σ_1, …, σ_{n+1}).
 */

#include "toda/linform.hpp"

#include <string>
#include <vector>

namespace toda {

enum class Family { AffineA, AffineCt };

/// JSON / CLI names: "affine_a" and "affine_ct".
std::string family_name(Family f);
/// Accepts "affine_a", "a", "affine_ct", "ct"; throws FormatError otherwise.
Family parse_family(const std::string& name);

/// The affine system of type A_n^(1) or C_n^(1),t on the index set {1..n+1}.
struct AlgebraSpec {
    Family family = Family::AffineA;
    int n = 2;

    int size() const { return n + 1; }
    bool operator==(const AlgebraSpec&) const = default;
};

/// Throws RankError unless n ≥ 2.
void validate(const AlgebraSpec& spec);

/// Weight vector: entry i-1 holds the form standing in for μ_i.
using Weights = std::vector<LinForm>;

/// The plain weights (μ_1, …, μ_{n+1}).
Weights default_weights(const AlgebraSpec& spec);

struct MassVector {
    AlgebraSpec spec;
    std::vector<LinForm> entries;  ///< entries[i-1] is σ_i

    /// 1-based access.
    const LinForm& at(int i) const { return entries.at(static_cast<std::size_t>(i - 1)); }
    LinForm& at(int i) { return entries.at(static_cast<std::size_t>(i - 1)); }

    bool is_zero() const;
    bool has_s() const;

    /// Deterministic key: entries in index order, terms in basis order.
    std::string canonical_key() const;
    std::string pretty() const;

    friend bool operator==(const MassVector& a, const MassVector& b) {
        return a.spec == b.spec && a.entries == b.entries;
    }
};

MassVector make_zero(const AlgebraSpec& spec);
/// Entry i is the bare symbol s_i.
MassVector make_generic(const AlgebraSpec& spec);

/// Exact substitution of every entry; see LinForm::evaluate.
std::vector<Rational> evaluate(const MassVector& v, const std::vector<Rational>& mu_values,
                               const std::vector<Rational>* s_values = nullptr);

/// JSON text in the documented schema.
std::string to_json(const MassVector& v);
/// Parse JSON text; throws FormatError with a line/column message on failure.
MassVector from_json(const std::string& text);

}  // namespace toda
