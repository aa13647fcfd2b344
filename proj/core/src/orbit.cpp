#include "toda/orbit.hpp"

#include "toda/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace toda {

namespace {

struct Child {
    MassVector vector;
    std::string key;
    int generator;
};

// Children of one node, in generator order.
std::vector<Child> expand(const Action& act, const OrbitNode& node, bool prune) {
    std::vector<Child> out;
    for (int g = 1; g <= act.spec().size(); ++g) {
        if (prune && !node.witness.empty() && node.witness.front() == g) continue;
        MassVector w = act.apply(g, node.vector);
        std::string key = w.canonical_key();
        out.push_back({std::move(w), std::move(key), g});
    }
    return out;
}

}  // namespace

std::vector<OrbitNode> enumerate(const AlgebraSpec& spec, int depth, const EnumerateOptions& opts) {
    if (depth < 0) throw DomainError("depth must be ≥ 0");
    const Action act = opts.weights ? Action(spec, *opts.weights) : Action(spec);
    std::vector<OrbitNode> nodes;
    std::unordered_map<std::string, std::size_t> seen;
    MassVector zero = make_zero(spec);
    std::string zkey = zero.canonical_key();
    seen.emplace(zkey, 0);
    nodes.push_back({std::move(zero), {}, 0, std::move(zkey)});

    std::size_t frontier_begin = 0;
    const int workers = std::max(1, opts.workers);
    for (int level = 1; level <= depth; ++level) {
        const std::size_t frontier_end = nodes.size();
        const std::size_t count = frontier_end - frontier_begin;
        if (count == 0) break;
        std::vector<std::vector<Child>> batches(count);

        // Expansion is embarrassingly parallel; each worker fills its own slots.
        auto work = [&](std::size_t w) {
            for (std::size_t k = w; k < count; k += static_cast<std::size_t>(workers))
                batches[k] = expand(act, nodes[frontier_begin + k], opts.prune_repeat);
        };
        if (workers == 1 || count == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(work, static_cast<std::size_t>(w));
            for (auto& t : pool) t.join();
        }

        // Sequential merge in parent order keeps the result worker-independent.
        for (std::size_t k = 0; k < count; ++k) {
            const std::size_t parent = frontier_begin + k;
            for (auto& c : batches[k]) {
                if (seen.count(c.key)) continue;
                Word witness{c.generator};
                witness.insert(witness.end(), nodes[parent].witness.begin(), nodes[parent].witness.end());
                seen.emplace(c.key, nodes.size());
                nodes.push_back({std::move(c.vector), std::move(witness), level, std::move(c.key)});
            }
        }
        frontier_begin = frontier_end;
    }
    return nodes;
}

bool CoefficientMatrix::nonnegative_integral() const {
    return std::all_of(entries.begin(), entries.end(), [](const Rational& q) { return q >= 0 && is_integer(q); });
}

CoefficientMatrix coefficient_matrix(const MassVector& v) {
    const int m = v.spec.size();
    CoefficientMatrix c{m, std::vector<Rational>(static_cast<std::size_t>(m * m))};
    for (int i = 1; i <= m; ++i) {
        const LinForm& e = v.at(i);
        if (e.has_constant()) throw NotMassForm("entry " + std::to_string(i) + " has a constant term");
        if (e.has_s()) throw NotMassForm("entry " + std::to_string(i) + " has generic s-terms");
        for (const auto& [b, q] : e.terms()) {
            if (b.index < 1 || b.index > m) throw NotMassForm("entry " + std::to_string(i) + " references μ outside I");
            c.entries[static_cast<std::size_t>((i - 1) * m + (b.index - 1))] = q / 2;
        }
    }
    return c;
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Member: return "Member";
    case Verdict::NotInGammaN: return "NotInGammaN";
    case Verdict::DescentStalled: return "DescentStalled";
    case Verdict::Unchecked: return "Unchecked";
    }
    return "?";
}

MembershipReport gamma_n_test(const MassVector& v, const Weights* weights) {
    MembershipReport r;
    r.coeffs_ok = coefficient_matrix(v).nonnegative_integral();
    r.pohozaev_ok = pohozaev_residual(v, weights).is_zero();
    return r;
}

MembershipReport descend_to_zero(const MassVector& v, int max_steps, const Weights* weights) {
    MembershipReport r;
    try {
        r = gamma_n_test(v, weights);
    } catch (const NotMassForm& e) {
        r.verdict = Verdict::NotInGammaN;
        r.reason = e.what();
        return r;
    }
    if (!r.coeffs_ok || !r.pohozaev_ok) {
        r.verdict = Verdict::NotInGammaN;
        r.reason = !r.coeffs_ok ? "coefficient matrix is not a nonnegative integer matrix"
                                : "Pohozaev residual is not identically zero";
        return r;
    }
    const Action act = weights ? Action(v.spec, *weights) : Action(v.spec);
    const std::vector<Rational> ones(static_cast<std::size_t>(v.spec.size()), Rational(1));
    auto phi = [&](const MassVector& x) {
        Rational s = 0;
        for (const auto& e : x.entries) s += e.evaluate(ones);
        return s;
    };

    MassVector cur = v;
    Rational cur_phi = phi(cur);
    Word applied;  // in application order
    while (!cur.is_zero()) {
        if (r.steps >= max_steps) {
            r.verdict = Verdict::DescentStalled;
            return r;
        }
        bool moved = false;
        for (int g = 1; g <= v.spec.size(); ++g) {
            MassVector next = act.apply(g, cur);
            Rational p = phi(next);
            if (p < cur_phi) {
                cur = std::move(next);
                cur_phi = std::move(p);
                applied.push_back(g);
                moved = true;
                break;
            }
        }
        if (!moved) {
            r.verdict = Verdict::DescentStalled;
            return r;
        }
        ++r.steps;
    }
    r.verdict = Verdict::Member;
    r.word.assign(applied.rbegin(), applied.rend());
    return r;
}

ExportFormat parse_format(const std::string& name) {
    if (name == "dot") return ExportFormat::Dot;
    if (name == "json") return ExportFormat::Json;
    if (name == "csv") return ExportFormat::Csv;
    throw FormatError("unknown export format '" + name + "' (expected dot, json or csv)");
}

std::string export_graph(const std::vector<OrbitNode>& nodes, ExportFormat format,
                         const std::vector<Rational>* mu_values, const Weights* weights) {
    std::ostringstream os;
    if (format == ExportFormat::Dot) {
        os << "digraph orbit {\n";
        for (std::size_t k = 0; k < nodes.size(); ++k)
            os << "  n" << k << " [label=\"" << nodes[k].vector.pretty() << "\"];\n";
        if (!nodes.empty()) {
            const Action act = weights ? Action(nodes.front().vector.spec, *weights) : Action(nodes.front().vector.spec);
            std::unordered_map<std::string, std::size_t> index;
            for (std::size_t k = 0; k < nodes.size(); ++k) index.emplace(nodes[k].key, k);
            for (std::size_t k = 0; k < nodes.size(); ++k)
                for (int g = 1; g <= act.spec().size(); ++g) {
                    auto it = index.find(act.apply(g, nodes[k].vector).canonical_key());
                    if (it != index.end() && nodes[it->second].level == nodes[k].level + 1)
                        os << "  n" << k << " -> n" << it->second << " [label=" << g << "];\n";
                }
        }
        os << "}\n";
        return os.str();
    }
    if (format == ExportFormat::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t k = 0; k < nodes.size(); ++k)
            arr.push_back({{"id", k},
                           {"level", nodes[k].level},
                           {"witness", nodes[k].witness},
                           {"vector", nlohmann::json::parse(to_json(nodes[k].vector))}});
        nlohmann::json doc{{"nodes", arr}};
        if (!nodes.empty()) {
            doc["family"] = family_name(nodes.front().vector.spec.family);
            doc["n"] = nodes.front().vector.spec.n;
        }
        return doc.dump(2) + "\n";
    }
    os << "node,index,mass\n";
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const auto& v = nodes[k].vector;
        const std::vector<Rational> ones(static_cast<std::size_t>(v.spec.size()), Rational(1));
        const auto vals = evaluate(v, mu_values ? *mu_values : ones);
        for (std::size_t i = 0; i < vals.size(); ++i) os << k << "," << (i + 1) << "," << to_display(vals[i]) << "\n";
    }
    return os.str();
}

}  // namespace toda
