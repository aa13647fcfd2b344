#include "toda/linform.hpp"

#include "toda/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace toda {

// ---------------------------------------------------------------- rationals

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display(const Rational& q) {
    return is_integer(q) ? q.get_num().get_str() : to_string(q);
}

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(),
                                         [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                            : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw FormatError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
    Rational q(zn, zd);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- LinForm

LinForm LinForm::constant(const Rational& c) {
    LinForm f;
    f.set({Var::Const, 0}, c);
    return f;
}

LinForm LinForm::mu(int i, const Rational& c) {
    LinForm f;
    f.set({Var::Mu, i}, c);
    return f;
}

LinForm LinForm::s(int i, const Rational& c) {
    LinForm f;
    f.set({Var::S, i}, c);
    return f;
}

Rational LinForm::coeff(Basis b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, const Basis& key) { return t.first < key; });
    if (it != terms_.end() && it->first == b) return it->second;
    return 0;
}

void LinForm::set(Basis b, const Rational& c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const Term& t, const Basis& key) { return t.first < key; });
    const bool present = it != terms_.end() && it->first == b;
    if (c == 0) {
        if (present) terms_.erase(it);
    } else if (present) {
        it->second = c;
    } else {
        terms_.insert(it, Term{b, c});
    }
}

bool LinForm::has_constant() const {
    return !terms_.empty() && terms_.front().first.var == Var::Const;
}

bool LinForm::has_mu() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.first.var == Var::Mu; });
}

bool LinForm::has_s() const {
    return !terms_.empty() && terms_.back().first.var == Var::S;
}

int LinForm::max_index() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.first.index);
    return m;
}

// Merge two sorted term lists, scaling the second by sign.
static std::vector<LinForm::Term> merge(const std::vector<LinForm::Term>& a,
                                        const std::vector<LinForm::Term>& b, bool subtract) {
    std::vector<LinForm::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].second - b[j].second)
                                  : Rational(a[i].second + b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

LinForm& LinForm::operator+=(const LinForm& other) {
    if (other.terms_.empty()) return *this;
    terms_ = merge(terms_, other.terms_, false);
    return *this;
}

LinForm& LinForm::operator-=(const LinForm& other) {
    if (other.terms_.empty()) return *this;
    terms_ = merge(terms_, other.terms_, true);
    return *this;
}

LinForm& LinForm::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.second *= r;
    }
    return *this;
}

LinForm LinForm::operator-() const {
    LinForm f = *this;
    for (auto& t : f.terms_) t.second = -t.second;
    return f;
}

Rational LinForm::evaluate(const std::vector<Rational>& mu_values,
                           const std::vector<Rational>* s_values) const {
    Rational sum = 0;
    for (const auto& [b, c] : terms_) {
        switch (b.var) {
        case Var::Const:
            sum += c;
            break;
        case Var::Mu:
            if (b.index < 1 || static_cast<std::size_t>(b.index) > mu_values.size())
                throw EvaluationError("no value supplied for μ" + std::to_string(b.index));
            sum += c * mu_values[static_cast<std::size_t>(b.index - 1)];
            break;
        case Var::S:
            if (s_values == nullptr)
                throw EvaluationError("form has generic terms but no s values were supplied");
            if (b.index < 1 || static_cast<std::size_t>(b.index) > s_values->size())
                throw EvaluationError("no value supplied for s" + std::to_string(b.index));
            sum += c * (*s_values)[static_cast<std::size_t>(b.index - 1)];
            break;
        }
    }
    return sum;
}

LinForm LinForm::substitute_mu(const std::vector<LinForm>& subst) const {
    LinForm out;
    for (const auto& [b, c] : terms_) {
        if (b.var == Var::Mu) {
            if (b.index < 1 || static_cast<std::size_t>(b.index) > subst.size())
                throw DomainError("no substitution for μ" + std::to_string(b.index));
            out += c * subst[static_cast<std::size_t>(b.index - 1)];
        } else {
            LinForm t;
            t.terms_.emplace_back(b, c);
            out += t;
        }
    }
    return out;
}

std::string LinForm::key() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : terms_) {
        if (!out.empty()) out += ';';
        switch (b.var) {
        case Var::Const: out += "c"; break;
        case Var::Mu: out += "m" + std::to_string(b.index); break;
        case Var::S: out += "s" + std::to_string(b.index); break;
        }
        out += ':';
        out += to_string(c);
    }
    return out;
}

std::string LinForm::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (b.var == Var::Const) {
            os << to_display(mag);
            continue;
        }
        if (mag != 1) os << to_display(mag);
        os << (b.var == Var::Mu ? "μ" : "s") << b.index;
    }
    return os.str();
}

}  // namespace toda
