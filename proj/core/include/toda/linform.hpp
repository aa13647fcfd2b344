#pragma once

/**
 * @file linform.hpp
 * @brief Degree-one forms over the weights and generic mass indeterminates.
 *
 * A LinForm is c + Σ a_i μ_i + Σ b_i s_i with exact rational coefficients.
 * The μ_i are the weights of the system and the s_i are free symbols that
 * stand for an arbitrary mass vector, which lets identities be checked for
 * every σ at once instead of on samples.
 *
 * Storage is a sorted sparse list of (basis, coefficient) pairs with no zero
 * coefficients, so two forms are equal exactly when their term lists are.
 */

#include "toda/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toda {

/// Which family of basis element a coefficient belongs to.
enum class Var : unsigned char { Const = 0, Mu = 1, S = 2 };

/// A basis element: the constant 1, a weight μ_i, or a generic symbol s_i.
struct Basis {
    Var var = Var::Const;
    int index = 0;  ///< 1-based for Mu and S, 0 for Const
    auto operator<=>(const Basis&) const = default;
};

class LinForm {
public:
    using Term = std::pair<Basis, Rational>;

    LinForm() = default;

    static LinForm constant(const Rational& c);
    static LinForm mu(int i, const Rational& c = 1);
    static LinForm s(int i, const Rational& c = 1);

    Rational coeff(Basis b) const;
    Rational constant_term() const { return coeff({Var::Const, 0}); }
    Rational mu_coeff(int i) const { return coeff({Var::Mu, i}); }
    Rational s_coeff(int i) const { return coeff({Var::S, i}); }

    /// Set a single coefficient (zero removes the term).
    void set(Basis b, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool has_constant() const;
    bool has_mu() const;
    bool has_s() const;
    /// Largest μ or s index referenced (0 if none).
    int max_index() const;

    const std::vector<Term>& terms() const { return terms_; }

    LinForm& operator+=(const LinForm& other);
    LinForm& operator-=(const LinForm& other);
    LinForm& operator*=(const Rational& r);

    friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
    friend LinForm operator*(const Rational& r, LinForm a) { return a *= r; }
    friend LinForm operator*(LinForm a, const Rational& r) { return a *= r; }
    LinForm operator-() const;

    friend bool operator==(const LinForm& a, const LinForm& b) { return a.terms_ == b.terms_; }

    /// Exact substitution.  s_values may be omitted only if no s-term exists;
    /// otherwise EvaluationError.  Missing μ values also raise EvaluationError.
    Rational evaluate(const std::vector<Rational>& mu_values,
                      const std::vector<Rational>* s_values = nullptr) const;

    /// Replace every μ_i by the form subst[i-1] (s and constants untouched).
    LinForm substitute_mu(const std::vector<LinForm>& subst) const;

    /// Canonical serialization, e.g. "c:2/1;m1:1/2;s3:-1/1" ("0" for zero).
    std::string key() const;

    /// Human-readable form, e.g. "2μ1 + 2μ2 - s3".
    std::string pretty() const;

private:
    // Sorted by Basis, coefficients nonzero.
    std::vector<Term> terms_;
};

}  // namespace toda
