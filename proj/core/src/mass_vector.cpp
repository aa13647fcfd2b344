#include "toda/mass_vector.hpp"

#include "toda/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace toda {

using nlohmann::json;

std::string family_name(Family f) {
    return f == Family::AffineA ? "affine_a" : "affine_ct";
}

Family parse_family(const std::string& name) {
    if (name == "affine_a" || name == "a" || name == "A") return Family::AffineA;
    if (name == "affine_ct" || name == "ct" || name == "Ct") return Family::AffineCt;
    throw FormatError("unknown family '" + name + "' (expected affine_a or affine_ct)");
}

void validate(const AlgebraSpec& spec) {
    if (spec.n < 2) throw RankError("rank parameter n must be at least 2, got " + std::to_string(spec.n));
}

Weights default_weights(const AlgebraSpec& spec) {
    Weights w;
    w.reserve(static_cast<std::size_t>(spec.size()));
    for (int i = 1; i <= spec.size(); ++i) w.push_back(LinForm::mu(i));
    return w;
}

bool MassVector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const LinForm& f) { return f.is_zero(); });
}

bool MassVector::has_s() const {
    return std::any_of(entries.begin(), entries.end(), [](const LinForm& f) { return f.has_s(); });
}

std::string MassVector::canonical_key() const {
    std::string k = family_name(spec.family) + "/" + std::to_string(spec.n);
    for (const auto& e : entries) {
        k += '|';
        k += e.key();
    }
    return k;
}

std::string MassVector::pretty() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ", ";
        out += entries[i].pretty();
    }
    return out + ")";
}

MassVector make_zero(const AlgebraSpec& spec) {
    validate(spec);
    return MassVector{spec, std::vector<LinForm>(static_cast<std::size_t>(spec.size()))};
}

MassVector make_generic(const AlgebraSpec& spec) {
    MassVector v = make_zero(spec);
    for (int i = 1; i <= spec.size(); ++i) v.at(i) = LinForm::s(i);
    return v;
}

std::vector<Rational> evaluate(const MassVector& v, const std::vector<Rational>& mu_values,
                               const std::vector<Rational>* s_values) {
    if (mu_values.size() != static_cast<std::size_t>(v.spec.size()))
        throw EvaluationError("expected " + std::to_string(v.spec.size()) + " μ values, got " +
                              std::to_string(mu_values.size()));
    std::vector<Rational> out;
    out.reserve(v.entries.size());
    for (const auto& e : v.entries) out.push_back(e.evaluate(mu_values, s_values));
    return out;
}

std::string to_json(const MassVector& v) {
    json entries = json::array();
    for (const auto& e : v.entries) {
        json mu = json::object(), s = json::object();
        for (const auto& [b, c] : e.terms()) {
            if (b.var == Var::Mu) mu[std::to_string(b.index)] = to_string(c);
            if (b.var == Var::S) s[std::to_string(b.index)] = to_string(c);
        }
        entries.push_back(json{{"const", to_string(e.constant_term())}, {"mu", mu}, {"s", s}});
    }
    json doc{{"family", family_name(v.spec.family)}, {"n", v.spec.n}, {"entries", entries}};
    return doc.dump();
}

namespace {

LinForm parse_entry(const json& e, int n, std::size_t pos) {
    const std::string where = "entry " + std::to_string(pos + 1);
    if (!e.is_object()) throw FormatError(where + ": expected an object");
    LinForm f;
    if (e.contains("const")) {
        if (!e["const"].is_string()) throw FormatError(where + ": 'const' must be a \"p/q\" string");
        f.set({Var::Const, 0}, parse_rational(e["const"].get<std::string>()));
    }
    for (const auto& [field, var] : {std::pair{"mu", Var::Mu}, std::pair{"s", Var::S}}) {
        if (!e.contains(field)) continue;
        const json& m = e[field];
        if (!m.is_object()) throw FormatError(where + ": '" + field + "' must be an object");
        for (const auto& [k, val] : m.items()) {
            int idx = 0;
            try {
                std::size_t used = 0;
                idx = std::stoi(k, &used);
                if (used != k.size()) throw FormatError("");
            } catch (const std::exception&) {
                throw FormatError(where + ": bad index key '" + k + "'");
            }
            if (idx < 1 || idx > n + 1)
                throw FormatError(where + ": index " + k + " outside 1.." + std::to_string(n + 1));
            if (!val.is_string()) throw FormatError(where + ": coefficients must be \"p/q\" strings");
            f.set({var, idx}, parse_rational(val.get<std::string>()));
        }
    }
    return f;
}

}  // namespace

MassVector from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("family") || !doc.contains("n") || !doc.contains("entries"))
        throw FormatError("mass vector JSON needs 'family', 'n' and 'entries'");
    if (!doc["family"].is_string() || !doc["n"].is_number_integer() || !doc["entries"].is_array())
        throw FormatError("mass vector JSON fields have the wrong types");
    AlgebraSpec spec{parse_family(doc["family"].get<std::string>()), doc["n"].get<int>()};
    validate(spec);
    const json& arr = doc["entries"];
    if (arr.size() != static_cast<std::size_t>(spec.size()))
        throw FormatError("expected " + std::to_string(spec.size()) + " entries, got " +
                          std::to_string(arr.size()));
    MassVector v{spec, {}};
    for (std::size_t i = 0; i < arr.size(); ++i) v.entries.push_back(parse_entry(arr[i], spec.n, i));
    return v;
}

}  // namespace toda
