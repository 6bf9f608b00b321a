// Command-line front-end: classify diagonal gates, print level-group
// structure, list generating gates per level, and canonicalize phase tables.
// All machine output (--json) is byte-deterministic for identical input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qudiag/gates.hpp"
#include "qudiag/hierarchy.hpp"
#include "qudiag/pauli_ops.hpp"

using nlohmann::ordered_json;
using namespace qudiag;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

constexpr std::size_t kMatrixOracleLimit = 125;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "3/8", "0", "12" -> phase in turns.
PhaseFraction parse_turns(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return PhaseFraction(BigInt(text), BigInt(1));
        }
        return PhaseFraction(BigInt(text.substr(0, slash)),
                             BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw UsageError("cannot parse rational '" + text +
                         "' (expected num/den or an integer)");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, sep)) {
        parts.push_back(part);
    }
    if (!text.empty() && text.back() == sep) {
        parts.push_back("");
    }
    return parts;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const std::uint64_t value = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    }
}

// The gate source a command works on; exactly one of the alternatives.
struct SourceFlags {
    std::string gate;        // letter name
    std::string phases;      // comma-separated turns
    std::string uma;         // m:a1,a2,...
    std::string phase_gate;  // k:m
    std::string spec_file;   // JSON file
    std::string terms;       // coeff:den_exp:e1.e2,...  (also via --spec)
};

struct ParsedSource {
    FunctionTable table;
    std::optional<unsigned> implied_qudits;
};

FunctionTable table_from_phase_list(PrimeModulus p, std::optional<unsigned> n_flag,
                                    const std::vector<PhaseFraction>& values) {
    std::size_t size = values.size();
    unsigned n = 0;
    std::size_t power = 1;
    while (power < size) {
        power *= p.value();
        ++n;
    }
    if (power != size || size == 0) {
        throw UsageError("phase list length " + std::to_string(size) +
                         " is not a positive power of p");
    }
    if (n_flag && *n_flag != n) {
        throw UsageError("--n " + std::to_string(*n_flag) +
                         " disagrees with a phase list of length " +
                         std::to_string(size));
    }
    return FunctionTable(p, n, values);
}

GateName parse_uma(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) {
        throw UsageError("--uma expects m:a1,a2,... (got '" + text + "')");
    }
    MonomialGate gate;
    gate.m = static_cast<unsigned>(parse_u64(parts[0], "precision m"));
    for (const auto& piece : split(parts[1], ',')) {
        gate.a.push_back(
            static_cast<std::uint32_t>(parse_u64(piece, "exponent")));
    }
    if (gate.a.empty()) {
        throw UsageError("--uma needs at least one exponent");
    }
    return gate;
}

GateName parse_phase_gate(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) {
        throw UsageError("--phase-gate expects k:m (got '" + text + "')");
    }
    return PhaseGate{static_cast<unsigned>(parse_u64(parts[0], "state index k")),
                     static_cast<unsigned>(parse_u64(parts[1], "precision m"))};
}

FunctionTable table_from_terms(PrimeModulus p, unsigned n,
                               const ordered_json& terms,
                               const PhaseFraction& global) {
    unsigned max_den = 0;
    for (const auto& term : terms) {
        max_den = std::max(max_den, term.at("den_exp").get<unsigned>());
    }
    std::vector<std::pair<Monomial, std::uint64_t>> converted;
    for (const auto& term : terms) {
        const auto exps = term.at("exps").get<std::vector<std::uint32_t>>();
        if (exps.size() != n) {
            throw UsageError("term exponent vector length disagrees with n");
        }
        const unsigned den = term.at("den_exp").get<unsigned>();
        const std::uint64_t scale = prime_power(p.value(), max_den - den);
        converted.emplace_back(
            Monomial(exps),
            detail::mulmod_u64(term.at("coeff").get<std::uint64_t>() %
                                   prime_power(p.value(), max_den),
                               scale, prime_power(p.value(), max_den)));
    }
    return PhasePolynomial::from_terms(p, n, max_den, converted, global)
        .to_function_table();
}

ParsedSource table_from_spec_file(const std::string& path,
                                  std::optional<std::uint64_t>& p_flag,
                                  std::optional<unsigned> n_flag) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open spec file '" + path + "'");
    }
    ordered_json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw UsageError("cannot parse spec file: " + std::string(e.what()));
    }
    if (!doc.contains("p")) {
        throw UsageError("spec file needs a \"p\" field");
    }
    const std::uint64_t p_value = doc.at("p").get<std::uint64_t>();
    if (p_flag && *p_flag != p_value) {
        throw UsageError("--p disagrees with the spec file");
    }
    p_flag = p_value;
    const PrimeModulus p(p_value);

    std::optional<unsigned> n;
    if (doc.contains("n")) n = doc.at("n").get<unsigned>();
    if (n_flag && n && *n_flag != *n) {
        throw UsageError("--n disagrees with the spec file");
    }
    if (!n) n = n_flag;

    const int sources = doc.contains("gate") + doc.contains("uma") +
                        doc.contains("phase_gate") + doc.contains("phases") +
                        doc.contains("terms");
    if (sources != 1) {
        throw UsageError(
            "spec file needs exactly one of gate/uma/phase_gate/phases/terms");
    }

    if (doc.contains("gate")) {
        const GateName gate = NamedGate{doc.at("gate").get<std::string>()};
        return {gate_table(gate, p), gate_qudits(gate)};
    }
    if (doc.contains("uma")) {
        MonomialGate gate;
        gate.m = doc.at("uma").at("m").get<unsigned>();
        gate.a = doc.at("uma").at("a").get<std::vector<std::uint32_t>>();
        return {gate_table(gate, p), static_cast<unsigned>(gate.a.size())};
    }
    if (doc.contains("phase_gate")) {
        PhaseGate gate{doc.at("phase_gate").at("k").get<unsigned>(),
                       doc.at("phase_gate").at("m").get<unsigned>()};
        return {gate_table(gate, p), 1u};
    }
    if (doc.contains("phases")) {
        std::vector<PhaseFraction> values;
        for (const auto& entry : doc.at("phases")) {
            values.push_back(parse_turns(entry.get<std::string>()));
        }
        return {table_from_phase_list(p, n, values), std::nullopt};
    }
    if (!n) {
        throw UsageError("a terms spec needs an \"n\" field");
    }
    PhaseFraction global;
    if (doc.contains("global_phase")) {
        global = parse_turns(doc.at("global_phase").get<std::string>());
    }
    return {table_from_terms(p, *n, doc.at("terms"), global), *n};
}

// Builds the phase table from whichever source flag is set; p may come from
// --p or from the spec file.
FunctionTable resolve_table(const SourceFlags& source,
                            std::optional<std::uint64_t>& p_flag,
                            std::optional<unsigned> n_flag) {
    const int count = !source.gate.empty() + !source.phases.empty() +
                      !source.uma.empty() + !source.phase_gate.empty() +
                      !source.spec_file.empty();
    if (count != 1) {
        throw UsageError(
            "need exactly one gate source: --gate, --phases, --uma, "
            "--phase-gate, or --spec");
    }
    if (!source.spec_file.empty()) {
        ParsedSource parsed = table_from_spec_file(source.spec_file, p_flag, n_flag);
        if (n_flag && parsed.implied_qudits && *n_flag != *parsed.implied_qudits) {
            throw UsageError("--n disagrees with the gate in the spec file");
        }
        return std::move(parsed.table);
    }
    if (!p_flag) {
        throw UsageError("--p is required");
    }
    const PrimeModulus p(*p_flag);
    if (!source.gate.empty()) {
        const GateName gate = NamedGate{source.gate};
        if (n_flag && *n_flag != gate_qudits(gate)) {
            throw UsageError("--n disagrees with gate " + source.gate);
        }
        return gate_table(gate, p);
    }
    if (!source.uma.empty()) {
        const GateName gate = parse_uma(source.uma);
        if (n_flag && *n_flag != gate_qudits(gate)) {
            throw UsageError("--n disagrees with the --uma exponent count");
        }
        return gate_table(gate, p);
    }
    if (!source.phase_gate.empty()) {
        const GateName gate = parse_phase_gate(source.phase_gate);
        if (n_flag && *n_flag != 1) {
            throw UsageError("phase gates act on one qudit");
        }
        return gate_table(gate, p);
    }
    std::vector<PhaseFraction> values;
    for (const auto& piece : split(source.phases, ',')) {
        values.push_back(parse_turns(piece));
    }
    return table_from_phase_list(p, n_flag, values);
}

ordered_json terms_json(const PhasePolynomial& poly) {
    ordered_json terms = ordered_json::array();
    for (const auto& term : decompose(poly).terms) {
        terms.push_back(ordered_json{{"coeff", term.power},
                                     {"den_exp", term.precision},
                                     {"exps", term.exponents.exponents()}});
    }
    return terms;
}

std::string decomposition_str(const PhasePolynomial& poly) {
    const Decomposition decomposition = decompose(poly);
    std::ostringstream out;
    bool first = true;
    for (const auto& term : decomposition.terms) {
        if (!first) out << " * ";
        out << "U[m=" << term.precision << ", a=" << term.exponents.str() << "]";
        if (term.power != 1) out << "^" << term.power;
        first = false;
    }
    if (!decomposition.global_phase.is_zero() || decomposition.terms.empty()) {
        if (!first) out << " * ";
        out << "phase " << decomposition.global_phase.str();
    }
    return out.str();
}

void emit(const ordered_json& doc, bool json, const std::string& text) {
    if (json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

int run_classify(const SourceFlags& source, std::optional<std::uint64_t> p_flag,
                 std::optional<unsigned> n_flag, bool verify, bool json) {
    const FunctionTable table = resolve_table(source, p_flag, n_flag);
    const PrimeModulus p = table.prime();

    ordered_json doc;
    doc["p"] = p.value();
    doc["n"] = table.qudits();

    std::optional<PhasePolynomial> poly;
    try {
        poly = PhasePolynomial::from_function_table(table);
    } catch (const NotInHierarchyError&) {
    }

    if (!poly) {
        doc["level"] = "not_in_hierarchy";
        std::ostringstream text;
        text << "level: not_in_hierarchy\n";
        if (verify) {
            const bool oracle_agrees =
                !level_recursive_oracle(table).in_hierarchy();
            bool matrix_agrees = true;
            if (table.size() <= kMatrixOracleLimit) {
                matrix_agrees = !level_matrix(table).in_hierarchy();
            }
            const bool agree = oracle_agrees && matrix_agrees;
            doc["verify"] = ordered_json{{"agree", agree}};
            text << "verify: " << (agree ? "agree" : "DISAGREE") << "\n";
            if (!agree) {
                emit(doc, json, text.str());
                return kExitDisagreement;
            }
        }
        emit(doc, json, text.str());
        return kExitOk;
    }

    const HierarchyLevel closed = level_closed_form(*poly);
    doc["level"] = closed.value();
    doc["global_phase"] = poly->global_phase().str();
    doc["terms"] = terms_json(*poly);

    std::ostringstream text;
    text << "level: " << closed.str() << "\n";
    text << "canonical polynomial: " << poly->str() << "\n";
    text << "decomposition: " << decomposition_str(*poly) << "\n";

    bool agree = true;
    if (verify) {
        ordered_json report;
        report["closed_form"] = closed.str();
        const HierarchyLevel oracle = level_recursive_oracle(table);
        report["recursive"] = oracle.str();
        agree = oracle == closed;
        text << "recursive oracle: " << oracle.str() << "\n";
        if (table.size() <= kMatrixOracleLimit) {
            const HierarchyLevel matrix = level_matrix(table);
            report["matrix"] = matrix.str();
            agree = agree && matrix == closed;
            text << "matrix oracle: " << matrix.str() << "\n";
        } else {
            report["matrix"] = nullptr;
            text << "matrix oracle: skipped (dimension > "
                 << kMatrixOracleLimit << ")\n";
        }
        report["agree"] = agree;
        doc["verify"] = report;
        text << "verify: " << (agree ? "agree" : "DISAGREE") << "\n";
    }

    emit(doc, json, text.str());
    return agree ? kExitOk : kExitDisagreement;
}

int run_canon(const SourceFlags& source, std::optional<std::uint64_t> p_flag,
              std::optional<unsigned> n_flag, bool json) {
    const FunctionTable table = resolve_table(source, p_flag, n_flag);
    const PhasePolynomial poly = PhasePolynomial::from_function_table(table);

    ordered_json doc;
    doc["p"] = table.prime().value();
    doc["n"] = table.qudits();
    doc["global_phase"] = poly.global_phase().str();
    doc["terms"] = terms_json(poly);

    std::ostringstream text;
    text << "canonical polynomial: " << poly.str() << "\n";
    text << "global phase: " << poly.global_phase().str() << "\n";
    emit(doc, json, text.str());
    return kExitOk;
}

int run_group(std::uint64_t p_value, unsigned n, unsigned w, bool enumerate,
              bool json) {
    const LevelSpec spec{PrimeModulus(p_value), n, w};
    const CyclicFactorization factorization = group_structure(spec);

    ordered_json doc;
    doc["p"] = p_value;
    doc["n"] = n;
    doc["w"] = w;
    ordered_json factors = ordered_json::array();
    for (const auto& factor : factorization.factors) {
        factors.push_back(ordered_json{{"exps", factor.exponents.exponents()},
                                       {"order", factor.order}});
    }
    doc["factors"] = factors;

    std::ostringstream text;
    text << "U(1)";
    for (const auto& factor : factorization.factors) {
        text << " x Z" << factor.order;
    }
    text << "\n";

    if (enumerate) {
        EnumerateOptions options;
        options.oracle_sample = 32;
        const EnumerationResult result = enumerate_level(spec, options);
        doc["count"] = result.count.str();
        doc["predicted"] = result.predicted.str();
        doc["matches"] = result.matches && result.oracle_agrees;
        text << "count: " << result.count.str() << " predicted: "
             << result.predicted.str() << " check "
             << (result.matches && result.oracle_agrees ? "OK" : "FAILED")
             << "\n";
        if (!result.matches || !result.oracle_agrees) {
            emit(doc, json, text.str());
            return kExitDisagreement;
        }
    }
    emit(doc, json, text.str());
    return kExitOk;
}

int run_table(std::uint64_t p_value, unsigned n, unsigned w_max, bool json) {
    const PrimeModulus p(p_value);
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    text << "w,generators,factors\n";
    for (unsigned w = 1; w <= w_max; ++w) {
        const LevelSpec spec{p, n, w};
        const auto generators = level_generators(spec);
        const auto factorization = group_structure(spec);

        ordered_json row;
        row["w"] = w;
        ordered_json gens = ordered_json::array();
        std::ostringstream gen_text;
        bool first = true;
        for (const auto& g : generators) {
            gens.push_back(ordered_json{{"exps", g.exponents.exponents()},
                                        {"den_exp", g.precision}});
            if (!first) gen_text << " ";
            gen_text << g.exponents.str() << "/"
                     << prime_power(p_value, g.precision);
            first = false;
        }
        row["generators"] = gens;
        ordered_json factors = ordered_json::array();
        std::ostringstream factor_text;
        first = true;
        for (const auto& factor : factorization.factors) {
            factors.push_back(
                ordered_json{{"exps", factor.exponents.exponents()},
                             {"order", factor.order}});
            if (!first) factor_text << " ";
            factor_text << "Z" << factor.order;
            first = false;
        }
        row["factors"] = factors;
        rows.push_back(row);
        text << w << "," << gen_text.str() << "," << factor_text.str() << "\n";
    }
    ordered_json doc;
    doc["p"] = p_value;
    doc["n"] = n;
    doc["rows"] = rows;
    emit(doc, json, text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact classifier for diagonal qudit gates: hierarchy levels, "
        "canonical phase polynomials, and level-group structure"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    // classify / canon share the gate-source flags
    SourceFlags classify_source, canon_source;
    std::optional<std::uint64_t> classify_p, canon_p;
    std::optional<unsigned> classify_n, canon_n;
    bool verify = false;

    auto add_source_flags = [](CLI::App* cmd, SourceFlags& flags,
                               std::optional<std::uint64_t>& p,
                               std::optional<unsigned>& n) {
        cmd->add_option("--p", p, "prime qudit dimension");
        cmd->add_option("--n", n, "number of qudits (checked against the gate)");
        cmd->add_option("--gate", flags.gate, "named gate: Z, S, T, CZ, CS, CCZ");
        cmd->add_option("--phases", flags.phases,
                        "comma-separated phase table in turns, e.g. 0,1/8");
        cmd->add_option("--uma", flags.uma,
                        "monomial gate m:a1,a2,... applying j^a / p^m");
        cmd->add_option("--phase-gate", flags.phase_gate,
                        "single-state phase gate k:m");
        cmd->add_option("--spec", flags.spec_file, "gate description JSON file");
    };

    CLI::App* classify =
        app.add_subcommand("classify", "compute the hierarchy level of a gate");
    classify->fallthrough();
    add_source_flags(classify, classify_source, classify_p, classify_n);
    classify->add_flag("--verify", verify,
                       "cross-check with the recursive and matrix oracles");

    CLI::App* canon = app.add_subcommand(
        "canon", "print the canonical phase polynomial of a gate");
    canon->fallthrough();
    add_source_flags(canon, canon_source, canon_p, canon_n);

    std::uint64_t group_p = 0;
    unsigned group_n = 1, group_w = 1;
    bool enumerate = false;
    CLI::App* group = app.add_subcommand(
        "group", "cyclic factorization of the diagonal gates of level <= w");
    group->fallthrough();
    group->add_option("--p", group_p, "prime qudit dimension")->required();
    group->add_option("--n", group_n, "number of qudits");
    group->add_option("--w", group_w, "hierarchy level")->required();
    group->add_flag("--enumerate", enumerate,
                    "exhaustively count the gates and cross-check");

    std::uint64_t table_p = 0;
    unsigned table_n = 1, table_w = 1;
    CLI::App* table = app.add_subcommand(
        "table", "per-level generating monomials and factor orders");
    table->fallthrough();
    table->add_option("--p", table_p, "prime qudit dimension")->required();
    table->add_option("--n", table_n, "number of qudits");
    table->add_option("--w", table_w, "largest level to list")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify->parsed()) {
            return run_classify(classify_source, classify_p, classify_n, verify,
                                json);
        }
        if (canon->parsed()) {
            return run_canon(canon_source, canon_p, canon_n, json);
        }
        if (group->parsed()) {
            return run_group(group_p, group_n, group_w, enumerate, json);
        }
        return run_table(table_p, table_n, table_w, json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
