#pragma once

/**
 * @file chains.hpp
 * @brief J-chain words, closed-form block updates, and full blow-up steps.
 *
 * A J-chain is a specific word ℜ_J whose action on σ replaces the entries in
 * the block J by the masses produced when the subsystem indexed by J blows
 * up, leaving every other entry unchanged.  For each chain there is a
 * closed-form expression for the result; the library provides both so they
 * can be checked against each other.
 */

#include "toda/cartan.hpp"
#include "toda/weyl_action.hpp"

#include <string>
#include <vector>

namespace toda {

struct ChainPlan {
    ConsecutiveSet target_set;
    std::vector<int> elements;  ///< listing order of the block
    Word word;
    Family family = Family::AffineA;
};

/// The standard type-A chain on {j, …, j+l}; length (l+1)(l+2)/2.
Word standard_chain(int j, int l);

/// Type-A chain.  Wrap blocks are handled by relabeling the standard chain on
/// {1..|J|} through the listing order of J.
ChainPlan chain_word_a(const ConsecutiveSet& J, const AlgebraSpec& spec);

/// Type-Cᵗ chain: head blocks (start 1) use (ℜ_{j+l}⋯ℜ_j)^{l+1}, tail blocks
/// (ending at n+1) use (ℜ_j⋯ℜ_{j+l})^{l+1}, interior blocks the type-A chain.
ChainPlan chain_word_ct(const ConsecutiveSet& J, const AlgebraSpec& spec);

/// Dispatch on the spec family.
ChainPlan chain_word(const ConsecutiveSet& J, const AlgebraSpec& spec);

/// μ*_s = μ_s − ½ Σ_t k_st σ_t for every s ∈ I (entry s-1).
std::vector<LinForm> mu_star(const MassVector& v, const Weights* weights = nullptr);

/**
 * Closed-form update σ*_s = σ_s + 2 Σ_{t∈J} k^{st} (μ*_t + μ*_{t*}) for s ∈ J,
 * where k^{st} inverts the restriction of the ambient matrix to J and t* is
 * the mirror of t within the listing of J.  Valid for type A (any block,
 * including wrap blocks) and for blocks of type Cᵗ whose restriction is of
 * type A (interior blocks and singletons).
 */
MassVector closed_form_a(const MassVector& v, const ConsecutiveSet& J, const Weights* weights = nullptr);

/// Closed form for a type-Cᵗ head block {1..l+1} or tail block {i..n+1};
/// DomainError for interior blocks.
MassVector closed_form_ct(const MassVector& v, const ConsecutiveSet& J, const Weights* weights = nullptr);

/// Dispatch: Cᵗ head/tail blocks use closed_form_ct, everything else closed_form_a.
MassVector closed_form(const MassVector& v, const ConsecutiveSet& J, const Weights* weights = nullptr);

enum class CaseTag { A_I, A_II, Ct_I, Ct_II, Ct_III, Ct_IV };

std::string case_name(CaseTag t);          ///< "A-I", …, "Ct-IV"
CaseTag parse_case(const std::string& s);  ///< FormatError on unknown names

/// A splitting I = J₀ ∪ … ∪ J_ϑ ∪ N into maximal blocks separated by N.
struct Decomposition {
    AlgebraSpec spec;
    CaseTag case_tag = CaseTag::A_I;
    std::vector<ConsecutiveSet> blocks;  ///< J₀ first where the case has one
    std::vector<int> null_set;           ///< N, ascending
};

/// Fill in N from the blocks and validate; DecompositionError otherwise.
Decomposition make_decomposition(const AlgebraSpec& spec, CaseTag tag, std::vector<ConsecutiveSet> blocks);

/// Throws DecompositionError naming the first violated clause.
void validate(const Decomposition& d);

struct BlowupResult {
    MassVector vector;
    Word word;  ///< ℜ_{J₀} ℜ_{J₁} ⋯ as one concatenated word
};

/// Validate d, then apply every block's closed form and concatenate the chains.
BlowupResult blowup_step(const MassVector& v, const Decomposition& d, const Weights* weights = nullptr);

}  // namespace toda
