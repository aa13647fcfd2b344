#pragma once

/**
 * @file permutations.hpp
 * @brief Cyclic rotations of the type-A index cycle, finite permutation mass
 *        formulas, the palindromic permutation group 𝕊_C, and the folding of
 *        type Cᵗ into type A.
 */

#include "toda/cartan.hpp"
#include "toda/weyl_action.hpp"

#include <vector>

namespace toda {

/// The r⁺-rotation f(i) = ((r + i − 2) mod (n+1)) + 1; r = 1 is the identity.
struct CyclicRotation {
    int r = 1;
    int apply(int i, int n) const { return (r + i - 2) % (n + 1) + 1; }
    int apply_inverse(int k, int n) const { return ((k - r) % (n + 1) + (n + 1)) % (n + 1) + 1; }
    /// The rotation undoing this one.
    CyclicRotation inverse(int n) const { return {apply_inverse(1, n)}; }
};

/// Entry i of the result is entry f(i) of v.  DomainError for type Cᵗ.
MassVector rotate_vector(const MassVector& v, const CyclicRotation& rot);

/// Weights μ∘f, i.e. entry i is μ_{f(i)}.
Weights rotated_weights(const AlgebraSpec& spec, const CyclicRotation& rot);

/// Letter-wise relabeling a ↦ f⁻¹(a).  Applying the result under
/// rotated_weights to 0 yields rotate_vector(apply_word(w, 0), rot).
Word rotation_covariance(const Word& w, const CyclicRotation& rot, int n);

/// A bijection of {0, …, m}.
struct FinitePermutation {
    std::vector<int> values;  ///< values[j] = f(j)
    int m() const { return static_cast<int>(values.size()) - 1; }
};

/// Throws DomainError unless f is a bijection of {0..m}.
void validate(const FinitePermutation& f);

/// σ_i = 2 Σ_{ℓ=0}^{i−1} (Σ_{j=1}^{f(ℓ)} w_j − Σ_{j=1}^{ℓ} w_j), i = 1..m.
std::vector<LinForm> finite_a_mass(const FinitePermutation& f, const std::vector<LinForm>& weights);

/// A permutation of {0..2l+1} with f(j) + f(2l+1−j) = 2l+1.
struct SPermC {
    int l = 0;
    std::vector<int> values;
};

SPermC sc_identity(int l);
/// The simple involution f_i, 0 ≤ i ≤ l (DomainError otherwise).
SPermC sc_simple(int i, int l);
/// (f ∘ g)(j) = f(g(j)).
SPermC compose(const SPermC& f, const SPermC& g);
/// Bijective and palindromic.
bool satisfies_constraint(const SPermC& f);
/// Every element of 𝕊_C for the given l, generated from the simple involutions
/// in breadth-first order.
std::vector<SPermC> sc_group(int l);

/**
 * σ_f for a type-Cᵗ head block {1..l₀+1} or tail block {i₀..n+1}.  With
 * μ̄_i = μ_i − ½ Σ_t k_it σ_t and the mirrored extension μ̂ of μ̄ to
 * 1..2l₀+1, the entries of the block are
 *   head: σ_i + 2 Σ_{j=0}^{l₀+1−i} (Σ_{r=1}^{f(j)} μ̂_r − Σ_{r=1}^{j} μ̂_r)
 *   tail: σ_i + 2 Σ_{j=0}^{i−i₀}    (Σ_{r=1}^{f(j)} μ̂_r − Σ_{r=1}^{j} μ̂_r)
 * and all other entries are unchanged.  DomainError for interior blocks.
 */
MassVector sigma_f_ct(const MassVector& v, const SPermC& f, const ConsecutiveSet& J,
                      const Weights* weights = nullptr);

struct FoldResult {
    MassVector vector;  ///< type A, rank 2n−1 (2n entries)
    Weights weights;    ///< folded weights, expressed in the original μ
};

/// w_i = v_i for i ≤ n+1 and w_i = v_{2n+2−i} beyond; weights likewise.
FoldResult fold_ct_to_a(const MassVector& v, const Weights* weights = nullptr);

/// Inverse of the fold; SymmetryError unless w_i = w_{2n+2−i}.
MassVector unfold_a_to_ct(const MassVector& w);

}  // namespace toda
