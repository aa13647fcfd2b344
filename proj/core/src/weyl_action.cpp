#include "toda/weyl_action.hpp"

#include "toda/errors.hpp"

#include <sstream>

namespace toda {

std::string word_to_string(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + std::to_string(w[k]);
    return out;
}

Word parse_word(const std::string& text) {
    Word w;
    if (text.empty() || text == "e") return w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw FormatError("");
            w.push_back(v);
        } catch (const std::exception&) {
            throw FormatError("bad word letter '" + item + "'");
        }
    }
    return w;
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

Word power(const Word& w, int k) {
    Word out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

// ---------------------------------------------------------------- Action

Action::Action(const AlgebraSpec& spec) : Action(spec, default_weights(spec)) {}

Action::Action(const AlgebraSpec& spec, Weights weights)
    : spec_(spec), k_(ambient_matrix(spec)), weights_(std::move(weights)) {
    if (weights_.size() != static_cast<std::size_t>(spec_.size()))
        throw DomainError("weights must have n+1 entries");
    row_.resize(static_cast<std::size_t>(spec_.size() + 1));
    for (int i = 1; i <= spec_.size(); ++i)
        for (int t = 1; t <= spec_.size(); ++t)
            if (t != i && k_.at(i, t) != 0) row_[static_cast<std::size_t>(i)].emplace_back(t, k_.at(i, t));
}

void Action::apply_in_place(int i, MassVector& v) const {
    if (i < 1 || i > spec_.size())
        throw DomainError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(spec_.size()));
    if (!(v.spec == spec_)) throw DomainError("vector belongs to a different algebra");
    // 2μ_i − Σ_t k_it σ_t + σ_i  with k_ii = 2  ⇒  2μ_i − σ_i − Σ_{t≠i} k_it σ_t
    LinForm out = Rational(2) * weights_[static_cast<std::size_t>(i - 1)];
    out -= v.at(i);
    for (const auto& [t, k] : row_[static_cast<std::size_t>(i)]) out -= k * v.at(t);
    v.at(i) = std::move(out);
}

MassVector Action::apply(int i, const MassVector& v) const {
    MassVector out = v;
    apply_in_place(i, out);
    return out;
}

MassVector Action::apply(const Word& w, const MassVector& v) const {
    MassVector out = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) apply_in_place(*it, out);
    return out;
}

MassVector apply_generator(int i, const MassVector& v, const Weights* weights) {
    const Action act = weights ? Action(v.spec, *weights) : Action(v.spec);
    return act.apply(i, v);
}

MassVector apply_word(const Word& w, const MassVector& v, const Weights* weights) {
    const Action act = weights ? Action(v.spec, *weights) : Action(v.spec);
    return act.apply(w, v);
}

// ---------------------------------------------------------------- relations

std::vector<Relation> presentation_relations(const AlgebraSpec& spec) {
    validate(spec);
    const int n = spec.n;
    const int m = spec.size();
    std::vector<Relation> rels;
    auto label = [](const std::string& what, int i, int j) {
        return what + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    for (int i = 1; i <= m; ++i) rels.push_back({"involution(" + std::to_string(i) + ")", {i, i}, {}});

    if (spec.family == Family::AffineA) {
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const int d = j - i;
                if (d == 1 || d == n) {
                    rels.push_back({label("order3", i, j), power({i, j}, 3), {}});
                    rels.push_back({label("braid", i, j), {i, j, i}, {j, i, j}});
                } else {
                    rels.push_back({label("commute", i, j), power({i, j}, 2), {}});
                }
            }
        return rels;
    }

    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const int d = j - i;
            if (d > 1) rels.push_back({label("commute", i, j), power({i, j}, 2), {}});
            else if (i >= 2 && j <= n) rels.push_back({label("braid", i, j), {i, j, i}, {j, i, j}});
        }
    rels.push_back({label("order4", 2, 1), power({2, 1}, 4), {}});
    rels.push_back({label("order4", n, n + 1), power({n, n + 1}, 4), {}});
    return rels;
}

bool verify_relation(const Word& w, const AlgebraSpec& spec) {
    const Action act(spec);
    const MassVector g = make_generic(spec);
    return act.apply(w, g) == g;
}

bool verify_relation(const Relation& r, const AlgebraSpec& spec) {
    const Action act(spec);
    const MassVector g = make_generic(spec);
    return act.apply(r.lhs, g) == act.apply(r.rhs, g);
}

// ---------------------------------------------------------------- QuadPoly

void QuadPoly::add(Monomial m, const Rational& c) {
    if (m.first > m.second) std::swap(m.first, m.second);
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else if (c == 0) {
        terms_.erase(it);
    }
}

QuadPoly QuadPoly::product(const LinForm& a, const LinForm& b) {
    if (a.has_s() || b.has_s())
        throw EvaluationError("Pohozaev residual needs vectors free of generic s-terms; evaluate first");
    QuadPoly p;
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) p.add({ba.index, bb.index}, ca * cb);
    return p;
}

QuadPoly& QuadPoly::operator+=(const QuadPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

QuadPoly& QuadPoly::operator-=(const QuadPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

QuadPoly& QuadPoly::operator*=(const Rational& r) {
    if (r == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= r;
    return *this;
}

Rational QuadPoly::coeff(Monomial m) const {
    if (m.first > m.second) std::swap(m.first, m.second);
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational QuadPoly::evaluate(const std::vector<Rational>& mu) const {
    auto val = [&](int i) -> Rational {
        if (i == 0) return 1;
        if (static_cast<std::size_t>(i) > mu.size()) throw EvaluationError("missing μ" + std::to_string(i));
        return mu[static_cast<std::size_t>(i - 1)];
    };
    Rational s = 0;
    for (const auto& [m, c] : terms_) s += c * val(m.first) * val(m.second);
    return s;
}

std::string QuadPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest degree first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const Rational mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        const bool is_const = m.first == 0 && m.second == 0;
        if (mag != 1 || is_const) os << to_display(mag);
        if (m.first != 0 && m.first == m.second) {
            os << "μ" << m.first << "²";
        } else {
            if (m.first != 0) os << "μ" << m.first;
            if (m.second != 0) os << "μ" << m.second;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- Pohozaev

static const Weights& pick_weights(const MassVector& v, const Weights* weights, Weights& storage) {
    if (weights) {
        if (weights->size() != v.entries.size()) throw DomainError("weights must have n+1 entries");
        return *weights;
    }
    storage = default_weights(v.spec);
    return storage;
}

QuadPoly pohozaev_residual(const MassVector& v, const Weights* weights) {
    if (v.has_s()) throw EvaluationError("Pohozaev residual needs vectors free of generic s-terms; evaluate first");
    Weights storage;
    const Weights& mu = pick_weights(v, weights, storage);
    const int m = v.spec.size();
    const int n = v.spec.n;
    QuadPoly r;
    if (v.spec.family == Family::AffineA) {
        for (int i = 1; i <= m; ++i) {
            const int next = i % m + 1;
            r += QuadPoly::product(v.at(i), v.at(i));
            r -= QuadPoly::product(v.at(i), v.at(next));
            r -= Rational(2) * QuadPoly::product(mu[static_cast<std::size_t>(i - 1)], v.at(i));
        }
        return r;
    }
    for (int i = 1; i <= n; ++i) {
        const LinForm d = v.at(i) - v.at(i + 1);
        r += QuadPoly::product(d, d);
    }
    for (int i = 1; i <= m; ++i) {
        const Rational w = (i == 1 || i == m) ? 2 : 4;
        r -= w * QuadPoly::product(mu[static_cast<std::size_t>(i - 1)], v.at(i));
    }
    return r;
}

QuadPoly pohozaev_residual_a_sqdiff(const MassVector& v, const Weights* weights) {
    if (v.spec.family != Family::AffineA) throw DomainError("squared-difference form is defined for type A");
    if (v.has_s()) throw EvaluationError("Pohozaev residual needs vectors free of generic s-terms; evaluate first");
    Weights storage;
    const Weights& mu = pick_weights(v, weights, storage);
    const int m = v.spec.size();
    QuadPoly r;
    for (int i = 1; i <= m; ++i) {
        const LinForm d = v.at(i) - v.at(i % m + 1);
        r += QuadPoly::product(d, d);
        r -= Rational(4) * QuadPoly::product(mu[static_cast<std::size_t>(i - 1)], v.at(i));
    }
    return r;
}

}  // namespace toda
