#include "cli.hpp"

#include "toda/chains.hpp"
#include "toda/errors.hpp"
#include "toda/orbit.hpp"
#include "toda/permutations.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace toda::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolated = 2;
constexpr int kStalled = 3;

std::string read_input(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw FormatError("cannot open input file '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

std::vector<Rational> parse_mu(const std::string& text, int size) {
    std::vector<Rational> out;
    if (text.empty() || text == "ones") return std::vector<Rational>(static_cast<std::size_t>(size), Rational(1));
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (static_cast<int>(out.size()) != size)
        throw FormatError("--mu needs " + std::to_string(size) + " values, got " + std::to_string(out.size()));
    return out;
}

ConsecutiveSet parse_set(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw FormatError("block must be written j:l, got '" + text + "'");
    try {
        return ConsecutiveSet::consecutive(std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1)));
    } catch (const std::logic_error&) {
        throw FormatError("block must be written j:l, got '" + text + "'");
    }
}

ConsecutiveSet parse_wrap(const std::string& text, int n) {
    const Word rs = parse_word(text);
    if (rs.size() != 2) throw FormatError("--wrap needs r2,r1");
    return ConsecutiveSet::wrap_set(rs[0], rs[1], n);
}

void print_vector(std::ostream& out, const MassVector& v, const std::string& format, const std::string& mu) {
    if (format == "json") {
        out << to_json(v) << "\n";
    } else if (format == "csv") {
        const auto vals = evaluate(v, parse_mu(mu, v.spec.size()));
        out << "index,mass\n";
        for (std::size_t i = 0; i < vals.size(); ++i) out << (i + 1) << "," << to_display(vals[i]) << "\n";
    } else if (format == "text") {
        out << v.pretty() << "\n";
    } else {
        throw FormatError("unknown output format '" + format + "' (expected text, json or csv)");
    }
}

struct Common {
    std::string family = "a";
    int rank = 2;
    AlgebraSpec spec() const {
        AlgebraSpec s{parse_family(family), rank};
        validate(s);
        return s;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact affine Weyl group calculus for local masses of affine Toda systems", "toda-weyl"};
    app.require_subcommand(1);

    // orbit
    Common orbit_opts;
    int depth = 3, workers = 1;
    std::string orbit_out = "json", orbit_mu;
    auto* orbit = app.add_subcommand("orbit", "Enumerate the orbit of 0 to a given depth");
    orbit->add_option("--family", orbit_opts.family, "a | ct")->required();
    orbit->add_option("--rank", orbit_opts.rank, "rank parameter n ≥ 2")->required();
    orbit->add_option("--depth", depth, "maximal word length")->required();
    orbit->add_option("--out", orbit_out, "dot | json | csv");
    orbit->add_option("--mu", orbit_mu, "numeric weights for csv (comma separated, default ones)");
    orbit->add_option("--workers", workers, "threads for frontier expansion");

    // member
    std::string member_input;
    int max_steps = 256;
    auto* member = app.add_subcommand("member", "Certify orbit membership by descent to zero");
    member->add_option("--input", member_input, "mass vector JSON file ('-' for stdin)")->required();
    member->add_option("--max-steps", max_steps, "descent step limit");

    // chain
    Common chain_opts;
    std::string chain_set, chain_wrap;
    bool chain_verify = false;
    auto* chain = app.add_subcommand("chain", "Print the J-chain of a block and its closed-form target");
    chain->add_option("--family", chain_opts.family, "a | ct")->required();
    chain->add_option("--rank", chain_opts.rank, "rank parameter n ≥ 2")->required();
    chain->add_option("--set", chain_set, "consecutive block j:l = {j..j+l}");
    chain->add_option("--wrap", chain_wrap, "wrap block r2,r1 = {r2..n+1,1..r1} (type A)");
    chain->add_flag("--verify", chain_verify, "compare the word with the closed form on generic σ");

    // relations
    Common rel_opts;
    auto* relations = app.add_subcommand("relations", "Verify the defining relations on the generic vector");
    relations->add_option("--family", rel_opts.family, "a | ct")->required();
    relations->add_option("--rank", rel_opts.rank, "rank parameter n ≥ 2")->required();

    // pohozaev
    std::string poh_input;
    auto* pohozaev = app.add_subcommand("pohozaev", "Print the Pohozaev residual polynomial of a vector");
    pohozaev->add_option("--input", poh_input, "mass vector JSON file ('-' for stdin)")->required();

    // fold
    std::string fold_input, fold_out = "json", fold_mu;
    auto* fold = app.add_subcommand("fold", "Fold a type-Ct vector into type A");
    fold->add_option("--input", fold_input, "type-Ct mass vector JSON")->required();
    fold->add_option("--out", fold_out, "text | json | csv");
    fold->add_option("--mu", fold_mu, "numeric weights for csv");

    // rotate
    std::string rot_input, rot_out = "json", rot_mu;
    int rot_r = 1;
    auto* rotate = app.add_subcommand("rotate", "Apply an r+ rotation to a type-A vector");
    rotate->add_option("--input", rot_input, "type-A mass vector JSON")->required();
    rotate->add_option("--r", rot_r, "rotation parameter r")->required();
    rotate->add_option("--out", rot_out, "text | json | csv");
    rotate->add_option("--mu", rot_mu, "numeric weights for csv");

    // sperm
    int sperm_l = 1;
    std::string sperm_word;
    bool sperm_check = false;
    auto* sperm = app.add_subcommand("sperm", "Compose simple palindromic permutations f_i0 ∘ f_i1 ∘ …");
    sperm->add_option("--l", sperm_l, "size parameter l (permutations of 0..2l+1)")->required();
    sperm->add_option("--word", sperm_word, "indices i0,i1,… of simple generators")->required();
    sperm->add_flag("--check", sperm_check, "verify f(j) + f(2l+1-j) = 2l+1");

    // blowup-step
    Common blow_opts;
    std::string blow_case, blow_wrap, blow_input, blow_out = "json", blow_mu;
    std::vector<std::string> blow_blocks;
    auto* blowup = app.add_subcommand("blowup-step", "Apply one blow-up step for a block decomposition");
    blowup->add_option("--family", blow_opts.family, "a | ct")->required();
    blowup->add_option("--rank", blow_opts.rank, "rank parameter n ≥ 2")->required();
    blowup->add_option("--case", blow_case, "A-I | A-II | Ct-I | Ct-II | Ct-III | Ct-IV")->required();
    blowup->add_option("--block", blow_blocks, "block j:l (repeatable, in order)");
    blowup->add_option("--wrap", blow_wrap, "wrap block J0 as r2,r1 (case A-II, placed first)");
    blowup->add_option("--input", blow_input, "starting vector JSON (default 0)");
    blowup->add_option("--out", blow_out, "text | json | csv");
    blowup->add_option("--mu", blow_mu, "numeric weights for csv");

    std::vector<std::string> argv_store{"toda-weyl"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (orbit->parsed()) {
            const AlgebraSpec spec = orbit_opts.spec();
            EnumerateOptions opts;
            opts.workers = workers;
            const auto nodes = enumerate(spec, depth, opts);
            const auto fmt = parse_format(orbit_out);
            const auto mu = parse_mu(orbit_mu, spec.size());
            out << export_graph(nodes, fmt, &mu);
            return kOk;
        }
        if (member->parsed()) {
            const MassVector v = from_json(read_input(member_input));
            const auto rep = descend_to_zero(v, max_steps);
            out << "verdict: " << verdict_name(rep.verdict) << "\n";
            out << "pohozaev_ok: " << (rep.pohozaev_ok ? "true" : "false") << "\n";
            out << "coeffs_ok: " << (rep.coeffs_ok ? "true" : "false") << "\n";
            if (rep.verdict == Verdict::Member) out << "word: " << word_to_string(rep.word) << "\n";
            if (rep.verdict == Verdict::NotInGammaN) out << "reason: " << rep.reason << "\n";
            if (rep.verdict == Verdict::DescentStalled) out << "steps: " << rep.steps << "\n";
            return rep.verdict == Verdict::Member ? kOk : rep.verdict == Verdict::NotInGammaN ? kViolated : kStalled;
        }
        if (chain->parsed()) {
            const AlgebraSpec spec = chain_opts.spec();
            if (chain_set.empty() == chain_wrap.empty()) throw FormatError("give exactly one of --set or --wrap");
            const ConsecutiveSet J = chain_wrap.empty() ? parse_set(chain_set) : parse_wrap(chain_wrap, spec.n);
            const auto plan = chain_word(J, spec);
            out << "set: " << J.describe(spec.n) << "\n";
            out << "word: " << word_to_string(plan.word) << "\n";
            out << "length: " << plan.word.size() << "\n";
            const auto g = make_generic(spec);
            const auto target = closed_form(g, J);
            out << "closed_form: " << target.pretty() << "\n";
            if (chain_verify) {
                const bool equal = apply_word(plan.word, g) == target;
                out << (equal ? "EQUAL" : "DIFFERENT") << "\n";
                return equal ? kOk : kViolated;
            }
            return kOk;
        }
        if (relations->parsed()) {
            const AlgebraSpec spec = rel_opts.spec();
            bool all = true;
            for (const auto& r : presentation_relations(spec)) {
                const bool ok = verify_relation(r, spec);
                all = all && ok;
                out << (ok ? "PASS " : "FAIL ") << r.label << ": " << word_to_string(r.lhs) << " = "
                    << word_to_string(r.rhs) << "\n";
            }
            return all ? kOk : kViolated;
        }
        if (pohozaev->parsed()) {
            const MassVector v = from_json(read_input(poh_input));
            const auto r = pohozaev_residual(v);
            out << "residual: " << r.pretty() << "\n";
            out << (r.is_zero() ? "SATISFIED" : "VIOLATED") << "\n";
            return r.is_zero() ? kOk : kViolated;
        }
        if (fold->parsed()) {
            const MassVector v = from_json(read_input(fold_input));
            const auto f = fold_ct_to_a(v);
            print_vector(out, f.vector, fold_out, fold_mu);
            return kOk;
        }
        if (rotate->parsed()) {
            const MassVector v = from_json(read_input(rot_input));
            print_vector(out, rotate_vector(v, CyclicRotation{rot_r}), rot_out, rot_mu);
            return kOk;
        }
        if (sperm->parsed()) {
            SPermC f = sc_identity(sperm_l);
            for (int i : parse_word(sperm_word)) f = compose(f, sc_simple(i, sperm_l));
            out << "f:";
            for (int x : f.values) out << " " << x;
            out << "\n";
            if (sperm_check) {
                const bool ok = satisfies_constraint(f);
                out << (ok ? "CONSTRAINT OK" : "CONSTRAINT VIOLATED") << "\n";
                return ok ? kOk : kViolated;
            }
            return kOk;
        }
        if (blowup->parsed()) {
            const AlgebraSpec spec = blow_opts.spec();
            std::vector<ConsecutiveSet> blocks;
            if (!blow_wrap.empty()) blocks.push_back(parse_wrap(blow_wrap, spec.n));
            for (const auto& b : blow_blocks) blocks.push_back(parse_set(b));
            const MassVector v = blow_input.empty() ? make_zero(spec) : from_json(read_input(blow_input));
            Decomposition d;
            try {
                d = make_decomposition(spec, parse_case(blow_case), blocks);
            } catch (const DecompositionError& e) {
                err << "error: " << e.what() << "\n";
                return kViolated;
            }
            const auto r = blowup_step(v, d);
            if (blow_out == "text") out << "word: " << word_to_string(r.word) << "\n";
            else err << "word: " << word_to_string(r.word) << "\n";
            print_vector(out, r.vector, blow_out, blow_mu);
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace toda::cli
