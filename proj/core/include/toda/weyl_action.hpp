#pragma once

/**
 * @file weyl_action.hpp
 * @brief The generator action ℜ_i on mass vectors, words, relations, and
 *        Pohozaev residual polynomials.
 *
 * (ℜ_i σ)_i = 2μ_i − Σ_t k_it σ_t + σ_i, all other entries unchanged.
 * Words are stored as written and applied right to left: [a, b, c] is
 * ℜ_a ℜ_b ℜ_c, so c acts first.
 */

#include "toda/cartan.hpp"
#include "toda/mass_vector.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace toda {

using Word = std::vector<int>;

std::string word_to_string(const Word& w);  ///< "1,2,1" ("e" if empty)
Word parse_word(const std::string& text);   ///< inverse of word_to_string; FormatError

/// Product u·v (u written first, so v acts first).
Word concat(const Word& u, const Word& v);
/// Word repeated k times.
Word power(const Word& w, int k);

/**
 * Precomputed action of one affine system.  Weights default to μ; any other
 * degree-one forms may be supplied (rotated or folded weights).
 */
class Action {
public:
    explicit Action(const AlgebraSpec& spec);
    Action(const AlgebraSpec& spec, Weights weights);

    const AlgebraSpec& spec() const { return spec_; }
    const CartanMatrix& matrix() const { return k_; }
    const Weights& weights() const { return weights_; }

    /// ℜ_i v; DomainError if i ∉ I or v belongs to another algebra.
    MassVector apply(int i, const MassVector& v) const;
    void apply_in_place(int i, MassVector& v) const;
    /// Right-to-left application of a word.
    MassVector apply(const Word& w, const MassVector& v) const;

private:
    AlgebraSpec spec_;
    CartanMatrix k_;
    Weights weights_;
    // Nonzero off-diagonal entries per row: (column, k_ij).
    std::vector<std::vector<std::pair<int, Rational>>> row_;
};

MassVector apply_generator(int i, const MassVector& v, const Weights* weights = nullptr);
MassVector apply_word(const Word& w, const MassVector& v, const Weights* weights = nullptr);

/// A defining relation lhs = rhs (rhs empty means lhs = e).
struct Relation {
    std::string label;
    Word lhs;
    Word rhs;
};

/// The full presentation of the affine Weyl group of the spec.
std::vector<Relation> presentation_relations(const AlgebraSpec& spec);

/// True iff w acts as the identity on the generic vector (s_1, …, s_{n+1}).
bool verify_relation(const Word& w, const AlgebraSpec& spec);
/// True iff both sides act identically on the generic vector.
bool verify_relation(const Relation& r, const AlgebraSpec& spec);

/**
 * Polynomial of degree ≤ 2 in the weights μ.  Monomials are keyed by
 * (a, b) with a ≤ b, where index 0 stands for the constant 1: (0,0) = 1,
 * (0,i) = μ_i, (i,j) = μ_i μ_j.
 */
class QuadPoly {
public:
    using Monomial = std::pair<int, int>;

    static QuadPoly product(const LinForm& a, const LinForm& b);  ///< EvaluationError on s-terms

    QuadPoly& operator+=(const QuadPoly& o);
    QuadPoly& operator-=(const QuadPoly& o);
    QuadPoly& operator*=(const Rational& r);
    friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }
    friend QuadPoly operator-(QuadPoly a, const QuadPoly& b) { return a -= b; }
    friend QuadPoly operator*(const Rational& r, QuadPoly a) { return a *= r; }
    friend bool operator==(const QuadPoly& a, const QuadPoly& b) { return a.terms_ == b.terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(Monomial m) const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational evaluate(const std::vector<Rational>& mu_values) const;
    std::string pretty() const;

private:
    void add(Monomial m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

/**
 * Pohozaev residual of v (zero polynomial ⇔ identity holds for all μ).
 *   A : Σ σ_i² − Σ σ_i σ_{i+1} (cyclic) − 2 Σ μ_i σ_i
 *   Cᵗ: Σ_{i≤n} (σ_i − σ_{i+1})² − 2(μ_1σ_1 + 2Σ_{2≤i≤n} μ_iσ_i + μ_{n+1}σ_{n+1})
 * EvaluationError if v carries generic s-terms.
 */
QuadPoly pohozaev_residual(const MassVector& v, const Weights* weights = nullptr);

/// Type-A residual in squared-difference normalization:
/// Σ_cyclic (σ_i − σ_{i+1})² − 4 Σ μ_i σ_i, i.e. exactly twice the form above.
QuadPoly pohozaev_residual_a_sqdiff(const MassVector& v, const Weights* weights = nullptr);

}  // namespace toda
