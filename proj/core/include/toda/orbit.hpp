#pragma once

/**
 * @file orbit.hpp
 * @brief Breadth-first enumeration of the orbit of 0, the Γ_N test, and
 *        membership certification by descent to zero.
 */

#include "toda/weyl_action.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toda {

struct OrbitNode {
    MassVector vector;
    Word witness;  ///< apply_word(witness, 0) == vector
    int level = 0; ///< length of the shortest witness found
    std::string key;
};

struct EnumerateOptions {
    int workers = 1;           ///< threads used to expand each frontier
    bool prune_repeat = true;  ///< skip ℜ_i when i is the witness's first letter
    const Weights* weights = nullptr;
};

/**
 * All distinct vectors reachable from 0 by words of length ≤ depth, in BFS
 * order (by level, then parent order, then generator index).  The result is
 * identical for every worker count.
 */
std::vector<OrbitNode> enumerate(const AlgebraSpec& spec, int depth, const EnumerateOptions& opts = {});

/// n_ij with σ_i = 2 Σ_j n_ij μ_j.
struct CoefficientMatrix {
    int size = 0;
    std::vector<Rational> entries;  ///< row-major
    const Rational& at(int i, int j) const {
        return entries[static_cast<std::size_t>((i - 1) * size + (j - 1))];
    }
    bool nonnegative_integral() const;
};

/// NotMassForm if any entry has a constant or generic s-term.
CoefficientMatrix coefficient_matrix(const MassVector& v);

enum class Verdict { Member, NotInGammaN, DescentStalled, Unchecked };

struct MembershipReport {
    Verdict verdict = Verdict::Unchecked;
    Word word;           ///< for Member: apply_word(word, v) == 0
    std::string reason;  ///< for NotInGammaN
    int steps = 0;       ///< descent steps taken
    bool pohozaev_ok = false;
    bool coeffs_ok = false;
};

std::string verdict_name(Verdict v);

/// Coefficient and Pohozaev checks only (verdict stays Unchecked).
MembershipReport gamma_n_test(const MassVector& v, const Weights* weights = nullptr);

/**
 * Greedy descent: repeatedly apply the smallest generator that strictly lowers
 * Φ(v) = Σ_i σ_i evaluated at μ = (1, …, 1), until v = 0 (Member) or no
 * generator lowers Φ / max_steps is reached (DescentStalled).
 */
MembershipReport descend_to_zero(const MassVector& v, int max_steps = 256, const Weights* weights = nullptr);

enum class ExportFormat { Dot, Json, Csv };
ExportFormat parse_format(const std::string& name);  ///< FormatError on unknown names

/**
 * Serialize an enumerated node set.  DOT lists every edge u → ℜ_i u that
 * climbs one level; JSON lists nodes with witnesses and vectors; CSV lists
 * masses evaluated at mu_values (default all ones) with header node,index,mass.
 */
std::string export_graph(const std::vector<OrbitNode>& nodes, ExportFormat format,
                         const std::vector<Rational>* mu_values = nullptr, const Weights* weights = nullptr);

}  // namespace toda
