#include "toda/permutations.hpp"

#include "toda/errors.hpp"

#include <algorithm>
#include <map>

namespace toda {

MassVector rotate_vector(const MassVector& v, const CyclicRotation& rot) {
    if (v.spec.family != Family::AffineA) throw DomainError("rotations are a symmetry of type A only");
    const int n = v.spec.n;
    if (rot.r < 1 || rot.r > n + 1) throw DomainError("rotation parameter r must lie in 1..n+1");
    MassVector out = v;
    for (int i = 1; i <= n + 1; ++i) out.at(i) = v.at(rot.apply(i, n));
    return out;
}

Weights rotated_weights(const AlgebraSpec& spec, const CyclicRotation& rot) {
    Weights w;
    for (int i = 1; i <= spec.size(); ++i) w.push_back(LinForm::mu(rot.apply(i, spec.n)));
    return w;
}

Word rotation_covariance(const Word& w, const CyclicRotation& rot, int n) {
    Word out;
    out.reserve(w.size());
    for (int a : w) {
        if (a < 1 || a > n + 1) throw DomainError("word letter outside 1..n+1");
        out.push_back(rot.apply_inverse(a, n));
    }
    return out;
}

void validate(const FinitePermutation& f) {
    std::vector<int> sorted = f.values;
    std::sort(sorted.begin(), sorted.end());
    for (int j = 0; j <= f.m(); ++j)
        if (sorted[static_cast<std::size_t>(j)] != j) throw DomainError("not a permutation of {0..m}");
}

std::vector<LinForm> finite_a_mass(const FinitePermutation& f, const std::vector<LinForm>& weights) {
    validate(f);
    const int m = f.m();
    if (static_cast<int>(weights.size()) != m) throw DomainError("finite_a_mass needs m weights");
    std::vector<LinForm> prefix(static_cast<std::size_t>(m + 1));  // prefix[k] = Σ_{j≤k} w_j
    for (int k = 1; k <= m; ++k) prefix[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(k - 1)] + weights[static_cast<std::size_t>(k - 1)];
    std::vector<LinForm> sigma;
    LinForm acc;
    for (int i = 1; i <= m; ++i) {
        const int ell = i - 1;
        acc += Rational(2) * (prefix[static_cast<std::size_t>(f.values[static_cast<std::size_t>(ell)])] - prefix[static_cast<std::size_t>(ell)]);
        sigma.push_back(acc);
    }
    return sigma;
}

// ---------------------------------------------------------------- 𝕊_C

SPermC sc_identity(int l) {
    SPermC f{l, {}};
    for (int j = 0; j <= 2 * l + 1; ++j) f.values.push_back(j);
    return f;
}

SPermC sc_simple(int i, int l) {
    if (l < 0 || i < 0 || i > l) throw DomainError("simple permutation index must satisfy 0 ≤ i ≤ l");
    SPermC f = sc_identity(l);
    for (int j = 0; j <= 2 * l + 1; ++j) {
        if (j == i || j == 2 * l - i) f.values[static_cast<std::size_t>(j)] = j + 1;
        else if (j == i + 1 || j == 2 * l + 1 - i) f.values[static_cast<std::size_t>(j)] = j - 1;
    }
    return f;
}

SPermC compose(const SPermC& f, const SPermC& g) {
    if (f.l != g.l) throw DomainError("cannot compose permutations of different sizes");
    SPermC h{f.l, {}};
    for (int x : g.values) h.values.push_back(f.values[static_cast<std::size_t>(x)]);
    return h;
}

bool satisfies_constraint(const SPermC& f) {
    const int top = 2 * f.l + 1;
    if (static_cast<int>(f.values.size()) != top + 1) return false;
    std::vector<int> sorted = f.values;
    std::sort(sorted.begin(), sorted.end());
    for (int j = 0; j <= top; ++j)
        if (sorted[static_cast<std::size_t>(j)] != j) return false;
    for (int j = 0; j <= top; ++j)
        if (f.values[static_cast<std::size_t>(j)] + f.values[static_cast<std::size_t>(top - j)] != top) return false;
    return true;
}

std::vector<SPermC> sc_group(int l) {
    std::vector<SPermC> out{sc_identity(l)};
    std::map<std::vector<int>, bool> seen{{out.front().values, true}};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (int i = 0; i <= l; ++i) {
            SPermC h = compose(out[k], sc_simple(i, l));
            if (seen.emplace(h.values, true).second) out.push_back(std::move(h));
        }
    return out;
}

MassVector sigma_f_ct(const MassVector& v, const SPermC& f, const ConsecutiveSet& J, const Weights* weights) {
    if (v.spec.family != Family::AffineCt) throw DomainError("sigma_f_ct needs a type-Ct vector");
    validate(J, v.spec.n);
    if (J.wrap) throw DomainError("wrap blocks exist only in type A");
    const int n = v.spec.n;
    const int l0 = J.length_param;
    const int i0 = J.start;
    const bool head = i0 == 1;
    const bool tail = i0 + l0 == n + 1;
    if (!head && !tail) throw DomainError("sigma_f_ct needs a head or tail block, got " + J.describe(n));
    if (f.l != l0 || !satisfies_constraint(f)) throw DomainError("f must be an element of 𝕊_C with l = l₀");

    const Weights mu = weights ? *weights : default_weights(v.spec);
    const CartanMatrix k = ambient_matrix(v.spec);
    auto mu_bar = [&](int i) {
        LinForm b = mu[static_cast<std::size_t>(i - 1)];
        for (int t = 1; t <= n + 1; ++t)
            if (k.at(i, t) != 0) b -= Rational(k.at(i, t) / 2) * v.at(t);
        return b;
    };
    // hat[r] for r = 1..2l₀+1, prefix sums P[r] = Σ_{q≤r} hat[q].
    std::vector<LinForm> prefix(static_cast<std::size_t>(2 * l0 + 2));
    for (int r = 1; r <= 2 * l0 + 1; ++r) {
        int idx;
        if (head) idx = r <= l0 + 1 ? l0 + 2 - r : r - l0;
        else idx = r <= l0 + 1 ? r + i0 - 1 : 2 * l0 + 1 + i0 - r;
        prefix[static_cast<std::size_t>(r)] = prefix[static_cast<std::size_t>(r - 1)] + mu_bar(idx);
    }
    auto P = [&](int r) -> const LinForm& {
        if (r > 2 * l0 + 1) throw DomainError("permutation value outside the extended range");
        return prefix[static_cast<std::size_t>(r)];
    };

    MassVector out = v;
    for (int i = i0; i <= i0 + l0; ++i) {
        const int upper = head ? l0 + 1 - i : i - i0;
        LinForm acc;
        for (int j = 0; j <= upper; ++j) acc += P(f.values[static_cast<std::size_t>(j)]) - P(j);
        out.at(i) += Rational(2) * acc;
    }
    return out;
}

// ---------------------------------------------------------------- folding

FoldResult fold_ct_to_a(const MassVector& v, const Weights* weights) {
    if (v.spec.family != Family::AffineCt) throw DomainError("fold_ct_to_a needs a type-Ct vector");
    const int n = v.spec.n;
    const Weights mu = weights ? *weights : default_weights(v.spec);
    FoldResult r{MassVector{AlgebraSpec{Family::AffineA, 2 * n - 1}, {}}, {}};
    for (int i = 1; i <= 2 * n; ++i) {
        const int src = i <= n + 1 ? i : 2 * n + 2 - i;
        r.vector.entries.push_back(v.at(src));
        r.weights.push_back(mu[static_cast<std::size_t>(src - 1)]);
    }
    return r;
}

MassVector unfold_a_to_ct(const MassVector& w) {
    if (w.spec.family != Family::AffineA) throw DomainError("unfold_a_to_ct needs a type-A vector");
    const int size = w.spec.size();
    if (size % 2 != 0 || size < 4) throw SymmetryError("a folded vector has an even number (≥ 4) of entries");
    const int n = size / 2;
    for (int i = n + 2; i <= 2 * n; ++i)
        if (!(w.at(i) == w.at(2 * n + 2 - i)))
            throw SymmetryError("entries " + std::to_string(i) + " and " + std::to_string(2 * n + 2 - i) +
                                " differ; the vector is not fold-symmetric");
    MassVector v{AlgebraSpec{Family::AffineCt, n}, {}};
    for (int i = 1; i <= n + 1; ++i) v.entries.push_back(w.at(i));
    return v;
}

}  // namespace toda
