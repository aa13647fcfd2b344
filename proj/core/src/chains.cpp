#include "toda/chains.hpp"

#include "toda/errors.hpp"

#include <algorithm>
#include <set>

namespace toda {

Word standard_chain(int j, int l) {
    if (l < 0) return {};
    if (l == 0) return {j};
    if (l == 1) return {j, j + 1, j};
    // ℜ_{J*} (ℜ_{j+1} ⋯ ℜ_{j+l} ℜ_{j+l-2} ⋯ ℜ_{j+1} ℜ_j)²  with J* = {j+2, …, j+l-2}
    Word block;
    for (int t = j + 1; t <= j + l; ++t) block.push_back(t);
    for (int t = j + l - 2; t >= j; --t) block.push_back(t);
    return concat(standard_chain(j + 2, l - 4), power(block, 2));
}

ChainPlan chain_word_a(const ConsecutiveSet& J, const AlgebraSpec& spec) {
    validate(spec);
    validate(J, spec.n);
    if (spec.family != Family::AffineA) throw DomainError("chain_word_a needs a type-A spec");
    ChainPlan plan{J, J.elements(spec.n), {}, Family::AffineA};
    if (!J.wrap) {
        plan.word = standard_chain(J.start, J.length_param);
    } else {
        for (int t : standard_chain(1, J.length_param))
            plan.word.push_back(plan.elements[static_cast<std::size_t>(t - 1)]);
    }
    return plan;
}

ChainPlan chain_word_ct(const ConsecutiveSet& J, const AlgebraSpec& spec) {
    validate(spec);
    validate(J, spec.n);
    if (spec.family != Family::AffineCt) throw DomainError("chain_word_ct needs a type-Ct spec");
    if (J.wrap) throw DomainError("wrap blocks exist only in type A");
    const int j = J.start, l = J.length_param;
    ChainPlan plan{J, J.elements(spec.n), {}, Family::AffineCt};
    if (l == 0) {
        plan.word = {j};
    } else if (j == 1) {
        Word w;
        for (int t = j + l; t >= j; --t) w.push_back(t);
        plan.word = power(w, l + 1);
    } else if (j + l == spec.n + 1) {
        Word w;
        for (int t = j; t <= j + l; ++t) w.push_back(t);
        plan.word = power(w, l + 1);
    } else {
        plan.word = standard_chain(j, l);
    }
    return plan;
}

ChainPlan chain_word(const ConsecutiveSet& J, const AlgebraSpec& spec) {
    return spec.family == Family::AffineA ? chain_word_a(J, spec) : chain_word_ct(J, spec);
}

namespace {

const Weights& resolve(const MassVector& v, const Weights* weights, Weights& storage) {
    if (weights) {
        if (weights->size() != v.entries.size()) throw DomainError("weights must have n+1 entries");
        return *weights;
    }
    storage = default_weights(v.spec);
    return storage;
}

const LinForm& w_at(const Weights& w, int i) { return w[static_cast<std::size_t>(i - 1)]; }

}  // namespace

std::vector<LinForm> mu_star(const MassVector& v, const Weights* weights) {
    Weights storage;
    const Weights& mu = resolve(v, weights, storage);
    const CartanMatrix k = ambient_matrix(v.spec);
    std::vector<LinForm> out;
    for (int s = 1; s <= v.spec.size(); ++s) {
        LinForm f = w_at(mu, s);
        for (int t = 1; t <= v.spec.size(); ++t)
            if (k.at(s, t) != 0) f -= Rational(k.at(s, t) / 2) * v.at(t);
        out.push_back(std::move(f));
    }
    return out;
}

MassVector closed_form_a(const MassVector& v, const ConsecutiveSet& J, const Weights* weights) {
    validate(J, v.spec.n);
    if (J.wrap && v.spec.family != Family::AffineA) throw DomainError("wrap blocks exist only in type A");
    const CartanMatrix k = ambient_matrix(v.spec);
    const CartanMatrix kinv = inverse_submatrix(k, J);
    const auto el = J.elements(v.spec.n);
    const auto ms = mu_star(v, weights);
    const int m = J.size();
    MassVector out = v;
    for (int p = 1; p <= m; ++p) {
        LinForm acc;
        for (int q = 1; q <= m; ++q) {
            const Rational& c = kinv.at(p, q);
            if (c == 0) continue;
            const int t = el[static_cast<std::size_t>(q - 1)];
            const int t_star = el[static_cast<std::size_t>(m - q)];
            acc += c * (ms[static_cast<std::size_t>(t - 1)] + ms[static_cast<std::size_t>(t_star - 1)]);
        }
        out.at(el[static_cast<std::size_t>(p - 1)]) += Rational(2) * acc;
    }
    return out;
}

MassVector closed_form_ct(const MassVector& v, const ConsecutiveSet& J, const Weights* weights) {
    if (v.spec.family != Family::AffineCt) throw DomainError("closed_form_ct needs a type-Ct vector");
    validate(J, v.spec.n);
    if (J.wrap) throw DomainError("wrap blocks exist only in type A");
    Weights storage;
    const Weights& mu = resolve(v, weights, storage);
    const int n = v.spec.n;
    const int l = J.length_param;
    const int i = J.start;
    const bool head = i == 1;
    const bool tail = i + l == n + 1;
    if (!head && !tail) throw DomainError("closed_form_ct needs a head or tail block, got " + J.describe(n));

    LinForm all;  // Σ_{t∈J} μ_t
    for (int t = i; t <= i + l; ++t) all += w_at(mu, t);

    MassVector out = v;
    for (int s = i; s <= i + l; ++s) {
        LinForm f;
        if (head) {
            // 2(l+2-s) Σ_J μ + 2 Σ_{q=0}^{l+1-s} Σ_{t=l+2}^{2l+1-q} μ_{t-l}
            //   − 2 Σ_{q=0}^{l+1-s} Σ_{t=1}^{q} μ_{l+2-t} − σ_s + 2σ_{l+2}
            const int reps = l + 2 - s;
            f += Rational(2 * reps) * all;
            for (int q = 0; q < reps; ++q) {
                for (int t = l + 2; t <= 2 * l + 1 - q; ++t) f += Rational(2) * w_at(mu, t - l);
                for (int t = 1; t <= q; ++t) f -= Rational(2) * w_at(mu, l + 2 - t);
            }
            f -= v.at(s);
            f += Rational(2) * v.at(l + 2);
        } else {
            // 2 Σ_{q=0}^{s-i} Σ_{t=1}^{l+1} μ_{t+i-1} + 2 Σ_{q=0}^{s-i} Σ_{t=l+2}^{2l+1-q} μ_{2l+i+1-t}
            //   − 2 Σ_{q=0}^{s-i} Σ_{t=1}^{q} μ_{t+i-1} − σ_s + 2σ_{i-1}
            const int reps = s - i + 1;
            f += Rational(2 * reps) * all;
            for (int q = 0; q < reps; ++q) {
                for (int t = l + 2; t <= 2 * l + 1 - q; ++t) f += Rational(2) * w_at(mu, 2 * l + i + 1 - t);
                for (int t = 1; t <= q; ++t) f -= Rational(2) * w_at(mu, t + i - 1);
            }
            f -= v.at(s);
            f += Rational(2) * v.at(i - 1);
        }
        out.at(s) = std::move(f);
    }
    return out;
}

MassVector closed_form(const MassVector& v, const ConsecutiveSet& J, const Weights* weights) {
    if (v.spec.family == Family::AffineCt && J.size() >= 2 &&
        (J.start == 1 || J.start + J.length_param == v.spec.n + 1))
        return closed_form_ct(v, J, weights);
    return closed_form_a(v, J, weights);
}

// ---------------------------------------------------------------- decompositions

std::string case_name(CaseTag t) {
    switch (t) {
    case CaseTag::A_I: return "A-I";
    case CaseTag::A_II: return "A-II";
    case CaseTag::Ct_I: return "Ct-I";
    case CaseTag::Ct_II: return "Ct-II";
    case CaseTag::Ct_III: return "Ct-III";
    case CaseTag::Ct_IV: return "Ct-IV";
    }
    return "?";
}

CaseTag parse_case(const std::string& s) {
    for (CaseTag t : {CaseTag::A_I, CaseTag::A_II, CaseTag::Ct_I, CaseTag::Ct_II, CaseTag::Ct_III, CaseTag::Ct_IV})
        if (case_name(t) == s) return t;
    throw FormatError("unknown case tag '" + s + "' (expected A-I, A-II, Ct-I, Ct-II, Ct-III or Ct-IV)");
}

Decomposition make_decomposition(const AlgebraSpec& spec, CaseTag tag, std::vector<ConsecutiveSet> blocks) {
    validate(spec);
    Decomposition d{spec, tag, std::move(blocks), {}};
    std::vector<bool> covered(static_cast<std::size_t>(spec.size() + 1), false);
    for (const auto& J : d.blocks) {
        try {
            validate(J, spec.n);
        } catch (const DomainError& e) {
            throw DecompositionError(std::string("block clause: ") + e.what());
        }
        for (int e : J.elements(spec.n)) covered[static_cast<std::size_t>(e)] = true;
    }
    for (int i = 1; i <= spec.size(); ++i)
        if (!covered[static_cast<std::size_t>(i)]) d.null_set.push_back(i);
    validate(d);
    return d;
}

void validate(const Decomposition& d) {
    const AlgebraSpec& spec = d.spec;
    validate(spec);
    const int n = spec.n;
    const int m = spec.size();
    auto fail = [&](const std::string& clause) {
        throw DecompositionError(case_name(d.case_tag) + " violates clause: " + clause);
    };
    const bool type_a = d.case_tag == CaseTag::A_I || d.case_tag == CaseTag::A_II;
    if (type_a != (spec.family == Family::AffineA)) fail("case tag does not match the algebra family");
    if (d.blocks.empty()) fail("at least one block J is required");

    // Blocks valid, pairwise disjoint, disjoint from N, union with N is I.
    std::vector<int> owner(static_cast<std::size_t>(m + 1), -1);
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        const auto& J = d.blocks[b];
        try {
            validate(J, n);
        } catch (const DomainError& e) {
            fail(std::string("block ") + std::to_string(b) + " invalid: " + e.what());
        }
        if (J.wrap && !(d.case_tag == CaseTag::A_II && b == 0)) fail("only J₀ of case A-II may be a wrap block");
        for (int e : J.elements(n)) {
            if (owner[static_cast<std::size_t>(e)] != -1) fail("blocks must be pairwise disjoint (index " + std::to_string(e) + ")");
            owner[static_cast<std::size_t>(e)] = static_cast<int>(b);
        }
    }
    std::set<int> in_n(d.null_set.begin(), d.null_set.end());
    for (int i = 1; i <= m; ++i) {
        const bool in_block = owner[static_cast<std::size_t>(i)] != -1;
        if (in_block == (in_n.count(i) > 0)) fail("blocks and N must partition I (index " + std::to_string(i) + ")");
    }
    for (int x : d.null_set)
        if (x < 1 || x > m) fail("N contains an index outside I");
    if (in_n.empty()) fail("N must be nonempty");

    // Maximality: the one-step extension of every block meets N.
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        const auto& J = d.blocks[b];
        const int first = J.start;
        const int last = J.last(n);
        const bool cyclic = spec.family == Family::AffineA;
        const int left = first == 1 ? (cyclic ? m : 0) : first - 1;
        const int right = last == m ? (cyclic ? 1 : 0) : last + 1;
        for (int nb : {left, right})
            if (nb != 0 && !in_n.count(nb))
                fail("maximality: block " + J.describe(n) + " is adjacent to index " + std::to_string(nb) +
                     " which is not in N");
    }

    auto meets = [&](std::initializer_list<int> xs) {
        return std::any_of(xs.begin(), xs.end(), [&](int x) { return in_n.count(x) > 0; });
    };
    const ConsecutiveSet& j0 = d.blocks.front();
    const bool j0_head = !j0.wrap && j0.start == 1;
    const bool j0_tail = !j0.wrap && j0.last(n) == m;

    switch (d.case_tag) {
    case CaseTag::A_I:
        if (!meets({1, m})) fail("{1, n+1} ∩ N ≠ ∅");
        break;
    case CaseTag::A_II:
        if (meets({1, m})) fail("{1, n+1} ∩ N = ∅");
        if (!j0.wrap) fail("J₀ must be the wrap block {r₂..n+1, 1..r₁}");
        break;
    case CaseTag::Ct_I:
        if (meets({1, 2})) fail("{1, 2} ∩ N = ∅");
        if (!meets({n, m})) fail("{n, n+1} ∩ N ≠ ∅");
        if (!j0_head) fail("J₀ must start at i₀ = 1");
        break;
    case CaseTag::Ct_II:
        if (!meets({1, 2})) fail("{1, 2} ∩ N ≠ ∅");
        if (meets({n, m})) fail("{n, n+1} ∩ N = ∅");
        if (!j0_tail) fail("J₀ must end at i₀ + l₀ = n+1");
        break;
    case CaseTag::Ct_III:
        if (n < 4) fail("n ≥ 4");
        if (meets({1, 2})) fail("{1, 2} ∩ N = ∅");
        if (meets({n, m})) fail("{n, n+1} ∩ N = ∅");
        if (d.blocks.size() < 2) fail("a head block and a tail block are both required");
        if (!j0_head) fail("J₀ must start at 1");
        if (d.blocks.back().wrap || d.blocks.back().last(n) != m) fail("the last block must end at n+1");
        break;
    case CaseTag::Ct_IV:
        if (!meets({1, 2})) fail("{1, 2} ∩ N ≠ ∅");
        if (!meets({n, m})) fail("{n, n+1} ∩ N ≠ ∅");
        break;
    }
}

BlowupResult blowup_step(const MassVector& v, const Decomposition& d, const Weights* weights) {
    validate(d);
    if (!(v.spec == d.spec)) throw DecompositionError("vector and decomposition belong to different algebras");
    BlowupResult r{v, {}};
    // Blocks are separated by N, so each closed form only reads entries of its
    // own block and of N; updating them one after another is order independent.
    for (const auto& J : d.blocks) {
        const MassVector updated = closed_form(v, J, weights);
        for (int e : J.elements(d.spec.n)) r.vector.at(e) = updated.at(e);
        r.word = concat(r.word, chain_word(J, d.spec).word);
    }
    return r;
}

}  // namespace toda
