#pragma once

/**
 * @file cartan.hpp
 * @brief Generalized and finite Cartan matrices, index blocks, exact inverses.
 *
 * Matrices are indexed from 1 to match the index set I = {1, …, n+1}.
 */

#include "toda/mass_vector.hpp"
#include "toda/rational.hpp"

#include <string>
#include <vector>

namespace toda {

enum class MatrixFamily { AffineA, AffineCt, FiniteA, FiniteB, FiniteC, Derived };

struct CartanMatrix {
    MatrixFamily family = MatrixFamily::Derived;
    int size = 0;
    std::vector<Rational> data;  ///< row-major, size*size

    const Rational& at(int i, int j) const {
        return data[static_cast<std::size_t>((i - 1) * size + (j - 1))];
    }
    Rational& at(int i, int j) { return data[static_cast<std::size_t>((i - 1) * size + (j - 1))]; }

    /// JSON array of rows of "p/q" strings (debug dump).
    std::string to_json() const;

    friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
        return a.size == b.size && a.data == b.data;
    }
};

/// Build the named matrix.  Affine families need size ≥ 3, FiniteB/C size ≥ 2,
/// FiniteA size ≥ 1; RankError otherwise.
CartanMatrix build(MatrixFamily family, int size);

/// The generalized Cartan matrix of an affine spec (size n+1).
CartanMatrix ambient_matrix(const AlgebraSpec& spec);

/// Identity of the given size.
CartanMatrix identity_matrix(int size);

CartanMatrix multiply(const CartanMatrix& a, const CartanMatrix& b);

/// Exact Gauss–Jordan inverse over the rationals; SingularError if singular.
CartanMatrix inverse(const CartanMatrix& m);

/// Closed-form inverse of FiniteA(l): a^{ij} = min(i,j)(l+1-max(i,j))/(l+1).
CartanMatrix inverse_finite_a(int l);

/**
 * A block of indices J ⊊ I.
 *
 * Non-wrap blocks are {j, j+1, …, j+l}.  Wrap blocks (type A only) are the
 * cyclic runs {r₂, …, n+1, 1, …, r₁} with 1 ≤ r₁ < r₂−1 ≤ n; they are stored
 * with start = r₂ and listed in that cyclic order.
 */
struct ConsecutiveSet {
    int start = 1;
    int length_param = 0;  ///< l, so |J| = l + 1
    bool wrap = false;

    static ConsecutiveSet consecutive(int j, int l) { return {j, l, false}; }
    /// The wrap block {r2..n+1, 1..r1}.
    static ConsecutiveSet wrap_set(int r2, int r1, int n);

    int size() const { return length_param + 1; }
    /// Elements in listing order (for wrap sets: r₂, …, n+1, 1, …, r₁).
    std::vector<int> elements(int n) const;
    /// Last listed element.
    int last(int n) const;
    bool contains(int i, int n) const;

    std::string describe(int n) const;
    bool operator==(const ConsecutiveSet&) const = default;
};

/// Throws DomainError if J is not a valid proper block of {1..n+1}.
void validate(const ConsecutiveSet& J, int n);

/// Restriction of an ambient (size n+1) matrix to J, rows/columns in listing order.
CartanMatrix principal_submatrix(const CartanMatrix& m, const ConsecutiveSet& J);

/// Inverse of principal_submatrix; SingularError if it is singular.
CartanMatrix inverse_submatrix(const CartanMatrix& m, const ConsecutiveSet& J);

}  // namespace toda
