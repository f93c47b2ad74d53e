// Command-line surface over the exact inclusion-exclusion library: sequence
// transforms, difference tables, urn probabilities, seeded simulation, and
// identity verification, all with machine-readable envelopes on stdout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sie/combinatorics.hpp"
#include "sie/difference_table.hpp"
#include "sie/hypergeometric.hpp"
#include "sie/json_io.hpp"
#include "sie/simulate.hpp"

using json = nlohmann::json;
using namespace sie;

namespace {

// Exit codes: 0 for ok/identity_holds, 1 for identity_fails, 2 for errors.
struct Outcome {
    json envelope;
    std::string plain;
    int exit_code = 0;
};

std::string compact(const Rational& r) {
    if (r.is_integer()) return r.numerator().get_str();
    return r.str();
}

std::string compact_list(const Sequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += compact(s[i]);
    }
    return out;
}

json envelope_of(const std::string& command, json inputs, json result, const std::string& status) {
    return {{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)},
            {"status", status}};
}

// Numeric flags accept rational literals; integer-valued flags must reduce
// to integers ("6/2" is fine, "1/3" is not).
long parse_integer_flag(const std::string& text, const char* flag) {
    const Rational r = Rational::parse(text);
    if (!r.is_integer()) throw std::invalid_argument(std::string(flag) + " must be an integer");
    const Integer num = r.numerator();
    if (!num.fits_slong_p()) throw std::invalid_argument(std::string(flag) + " is out of range");
    return num.get_si();
}

std::uint64_t parse_seed_flag(const std::string& text) {
    const Rational r = Rational::parse(text);
    if (!r.is_integer() || r.is_negative())
        throw std::invalid_argument("--seed must be a nonnegative integer");
    const Integer num = r.numerator();
    if (!num.fits_ulong_p()) throw std::invalid_argument("--seed is out of range");
    return num.get_ui();
}

Sequence sequence_from_flags(const std::string& inline_text, const std::string& file) {
    if (!inline_text.empty() && !file.empty())
        throw std::invalid_argument("give the sequence inline or via --file, not both");
    if (!inline_text.empty()) return parse_sequence(inline_text);
    if (file.empty()) throw std::invalid_argument("a sequence is required (inline or --file)");
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open file: " + file);
    json j;
    in >> j;
    return sequence_from_json(j);
}

json interval_json(const std::optional<std::pair<Rational, Rational>>& interval) {
    if (!interval) return {{"empty", true}};
    return {{"empty", false}, {"lo", interval->first.str()}, {"hi", interval->second.str()}};
}

struct Flags {
    std::string format = "json";
    std::string kind, input, file, top, emit, quantity, identity;
    std::string urns, r, b, n, trials, seed, order, m_max;
    std::string workers = "1";
    std::vector<std::string> extend;
};

Outcome run_transform(const Flags& f) {
    const Sequence in = sequence_from_flags(f.input, f.file);
    Sequence out;
    if (f.kind == "binomial")
        out = binomial_transform(in);
    else if (f.kind == "inv-binomial")
        out = inverse_binomial_transform(in);
    else
        out = sie_transform(in);
    Outcome o;
    o.envelope = envelope_of("transform", {{"kind", f.kind}, {"sequence", to_json(in)}},
                             {{"sequence", to_json(out)}}, "ok");
    o.plain = compact_list(out);
    return o;
}

Outcome run_table(const Flags& f) {
    const Sequence top = sequence_from_flags(f.top, f.file);
    DifferenceTriangle t = difference_triangle(top);
    json inputs{{"top", to_json(top)}, {"emit", f.emit}};
    if (f.emit == "rotated") t = rotate_triangle(t);
    std::vector<Rational> extends;
    for (const std::string& e : f.extend) extends.push_back(Rational::parse(e));
    if (!extends.empty()) {
        if (f.emit != "rotated")
            throw std::invalid_argument("--extend requires --emit rotated");
        json echo = json::array();
        for (const Rational& e : extends) {
            append_rotated_row(t, e);
            echo.push_back(e.str());
        }
        inputs["extend"] = echo;
    }
    json result{{"triangle", to_json(t)}};
    std::string plain;
    for (const Sequence& row : t.rows) plain += compact_list(row) + "\n";
    if (!extends.empty()) {
        const auto interval = nonneg_extension_interval(bottom_row(t));
        result["extension_interval"] = interval_json(interval);
        plain += interval ? "extension interval: [" + compact(interval->first) + ", " +
                                compact(interval->second) + "]\n"
                          : "extension interval: empty\n";
    }
    Outcome o;
    o.envelope = envelope_of("table", std::move(inputs), std::move(result), "ok");
    o.plain = plain;
    return o;
}

UrnSpec urns_from_flags(const Flags& f) {
    if (!f.urns.empty()) {
        if (!f.r.empty() || !f.b.empty())
            throw std::invalid_argument("give --urns or --r/--b, not both");
        return parse_urns(f.urns);
    }
    if (f.r.empty() || f.b.empty())
        throw std::invalid_argument("urn parameters are required (--urns or --r and --b)");
    return UrnSpec{{{Rational::parse(f.r), Rational::parse(f.b)}}};
}

Outcome simulation_outcome(const std::string& command, json inputs, const Experiment& e,
                           const Flags& f) {
    if (f.seed.empty()) throw std::invalid_argument("--seed is required in simulate mode");
    const long trials = parse_integer_flag(f.trials, "--trials");
    const std::uint64_t seed = parse_seed_flag(f.seed);
    const int workers = static_cast<int>(parse_integer_flag(f.workers, "--workers"));
    const SimulationReport report = simulate(e, trials, seed, workers);
    inputs["trials"] = trials;
    inputs["seed"] = seed;
    inputs["workers"] = workers;
    std::ostringstream plain;
    plain << "trials: " << report.trials << "\nsuccesses: " << report.successes
          << "\nestimate: " << report.estimate << "\nexact: " << compact(report.exact)
          << "\nz_score: " << report.z_score << "\nseed: " << report.seed
          << "\nworkers: " << report.workers << "\n";
    Outcome o;
    o.envelope = envelope_of(command, std::move(inputs), to_json(report), "ok");
    o.plain = plain.str();
    return o;
}

Outcome run_urn(const Flags& f) {
    const UrnSpec spec = urns_from_flags(f);
    const long n = parse_integer_flag(f.n, "--n");
    json inputs{{"urns", to_json(spec)}, {"n", n}, {"quantity", f.quantity}};
    if (!f.trials.empty()) {
        Experiment e;
        if (f.quantity == "abar") {
            if (spec.size() != 1)
                throw std::invalid_argument("abar simulation takes a single urn");
            e = SingleUrnAllRed{n, spec.urns[0].red, spec.urns[0].black};
        } else {
            e = MultiUrnBlackEachStep{n, spec};
        }
        return simulation_outcome("urn", std::move(inputs), e, f);
    }
    const Rational value = f.quantity == "abar" ? multi_urn_abar(n, spec) : multi_urn_bbar(n, spec);
    Outcome o;
    o.envelope = envelope_of("urn", std::move(inputs), {{"value", value.str()}}, "ok");
    o.plain = compact(value) + "\n";
    return o;
}

Outcome run_ascent(const Flags& f) {
    const FiniteIndexSet set = parse_index_set(f.input);
    json members = json::array();
    for (long m : set.members) members.push_back(m);
    json inputs{{"set", members}};
    if (!f.trials.empty()) return simulation_outcome("ascent", std::move(inputs), AscentEvent{set}, f);
    const Rational value = ascent_prob(set);
    Outcome o;
    o.envelope = envelope_of("ascent", std::move(inputs), {{"value", value.str()}}, "ok");
    o.plain = compact(value) + "\n";
    return o;
}

Rational require_rational(const std::string& text, const char* flag) {
    if (text.empty()) throw std::invalid_argument(std::string(flag) + " is required");
    return Rational::parse(text);
}

Outcome identity_outcome(const std::string& identity, json inputs, bool holds, json lhs, json rhs) {
    Outcome o;
    o.envelope = envelope_of("verify", std::move(inputs),
                             {{"holds", holds}, {"lhs", lhs}, {"rhs", rhs}},
                             holds ? "identity_holds" : "identity_fails");
    o.plain = identity + (holds ? ": holds\n" : ": FAILS\n") + "lhs: " + lhs.dump() +
              "\nrhs: " + rhs.dump() + "\n";
    o.exit_code = holds ? 0 : 1;
    return o;
}

Outcome run_verify(const Flags& f) {
    if (f.identity == "chu-vandermonde") {
        const Rational r = require_rational(f.r, "--r"), b = require_rational(f.b, "--b");
        const long n = parse_integer_flag(f.n, "--n");
        const Rational lhs = rising_factorial(b, n) / rising_factorial(r + b, n);
        const Rational rhs = chu_vandermonde_sum(n, r, b);
        return identity_outcome(f.identity,
                                {{"identity", f.identity}, {"r", r.str()}, {"b", b.str()}, {"n", n}},
                                lhs == rhs, lhs.str(), rhs.str());
    }
    if (f.identity == "f11") {
        const Rational b = require_rational(f.b, "--b"), r = require_rational(f.r, "--r");
        const int order = static_cast<int>(parse_integer_flag(f.order, "--order"));
        const auto [lhs, rhs] = f11_transform_sides(b, r, order);
        return identity_outcome(
            f.identity,
            {{"identity", f.identity}, {"b", b.str()}, {"r", r.str()}, {"order", order}},
            lhs == rhs, to_json(lhs), to_json(rhs));
    }
    if (f.identity == "f32-trinomial" || f.identity == "f32-single" || f.identity == "f32-gasper") {
        if (f.urns.empty()) throw std::invalid_argument("--urns \"r1:b1,r2:b2\" is required");
        const UrnSpec spec = parse_urns(f.urns);
        if (spec.size() != 2) throw std::invalid_argument("this identity takes exactly two urns");
        spec.validate();
        const long n = parse_integer_flag(f.n, "--n");
        const Rational r1 = spec.urns[0].red, b1 = spec.urns[0].black;
        const Rational r2 = spec.urns[1].red, b2 = spec.urns[1].black;
        json inputs{{"identity", f.identity}, {"urns", to_json(spec)}, {"n", n}};
        if (f.identity == "f32-gasper") {
            const auto [lhs, rhs] = f32_gasper_sides(n, r1, b1, r2, b2);
            return identity_outcome(f.identity, std::move(inputs), lhs == rhs, lhs.str(), rhs.str());
        }
        const Rational lhs = eval_terminating_pFq({{Rational(-n), r1, r2},
                                                   {r1 + b1, r2 + b2},
                                                   Rational(1)});
        const Rational rhs = f.identity == "f32-trinomial" ? f32_trinomial_rhs(n, r1, b1, r2, b2)
                                                           : f32_single_sum(n, r1, b1, r2, b2);
        return identity_outcome(f.identity, std::move(inputs), lhs == rhs, lhs.str(), rhs.str());
    }
    if (f.identity == "u-gf") {
        const Rational r = require_rational(f.r, "--r");
        const long n = parse_integer_flag(f.n, "--n");
        const int order = static_cast<int>(parse_integer_flag(f.order, "--order"));
        const auto [lhs, rhs] = u_gf_sides(n, r, order);
        return identity_outcome(
            f.identity,
            {{"identity", f.identity}, {"r", r.str()}, {"n", n}, {"order", order}},
            lhs == rhs, to_json(lhs), to_json(rhs));
    }
    if (f.identity == "egf-pair") {
        const auto semi = f.input.find(';');
        if (f.input.empty() || semi == std::string::npos)
            throw std::invalid_argument("--input \"a0,a1,...;b0,b1,...\" is required");
        const Sequence a = parse_sequence(f.input.substr(0, semi));
        const Sequence b = parse_sequence(f.input.substr(semi + 1));
        const bool symmetric = f.kind.empty() || f.kind == "symmetric";
        if (!symmetric && f.kind != "asymmetric")
            throw std::invalid_argument("--kind must be symmetric or asymmetric");
        const int order = static_cast<int>(parse_integer_flag(f.order, "--order"));
        const bool holds = egf_pair_check(a, b, symmetric, order);
        const PowerSeries fa = egf_of(a, order);
        const PowerSeries fb = egf_of(b, order);
        const PowerSeries ex = PowerSeries::exp(order);
        const PowerSeries rhs = symmetric ? ex * fb.negate_argument() : ex * fb;
        json inputs{{"identity", f.identity},
                    {"a", to_json(a)},
                    {"b", to_json(b)},
                    {"symmetric", symmetric},
                    {"order", order}};
        return identity_outcome(f.identity, std::move(inputs), holds, to_json(fa), to_json(rhs));
    }
    throw std::invalid_argument("unknown identity: " + f.identity);
}

Outcome run_u_numbers(const Flags& f) {
    const Rational r = require_rational(f.r, "--r");
    const long n = parse_integer_flag(f.n, "--n");
    const long m_max = parse_integer_flag(f.m_max, "--m-max");
    if (m_max < 0) throw std::invalid_argument("--m-max must be nonnegative");
    Sequence values;
    for (long m = 0; m <= m_max; ++m) values.push_back(u_number(m, n, r));
    Outcome o;
    o.envelope = envelope_of("u-numbers",
                             {{"r", r.str()}, {"n", n}, {"m_max", m_max}},
                             {{"values", to_json(values)}}, "ok");
    o.plain = compact_list(values) + "\n";
    return o;
}

void print_outcome(const Outcome& o, const std::string& format) {
    if (format == "json") {
        std::cout << o.envelope.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "key,value\n";
        const json flat = o.envelope.flatten();
        for (const auto& [path, value] : flat.items())
            std::cout << path << ","
                      << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    } else {
        std::cout << o.plain;
        if (!o.plain.empty() && o.plain.back() != '\n') std::cout << "\n";
    }
}

const char* const kCommands[] = {"transform", "table", "urn", "ascent", "verify", "u-numbers"};

std::string guess_command(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        for (const char* c : kCommands)
            if (std::string(argv[i]) == c) return c;
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetric inclusion-exclusion toolkit"};
    app.require_subcommand(1);
    Flags f;
    Outcome outcome;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", f.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
    };

    CLI::App* transform = app.add_subcommand("transform", "apply a sequence transform");
    transform->add_option("--kind", f.kind, "binomial, inv-binomial, or sie")
        ->required()
        ->check(CLI::IsMember({"binomial", "inv-binomial", "sie"}));
    transform->add_option("--input", f.input, "comma-separated rationals");
    transform->add_option("--file", f.file, "JSON file with a sequence");
    add_format(transform);
    transform->callback([&] { outcome = run_transform(f); });

    CLI::App* table = app.add_subcommand("table", "difference table of a top row");
    table->add_option("--top", f.top, "comma-separated top row");
    table->add_option("--file", f.file, "JSON file with the top row");
    table->add_option("--emit", f.emit, "difference or rotated")
        ->required()
        ->check(CLI::IsMember({"difference", "rotated"}));
    table->add_option("--extend", f.extend,
                      "append a rotated row with this leftmost entry (repeatable)");
    add_format(table);
    table->callback([&] { outcome = run_table(f); });

    CLI::App* urn = app.add_subcommand("urn", "urn probabilities, exact or simulated");
    urn->add_option("--urns", f.urns, "urn list \"r1:b1,r2:b2\"");
    urn->add_option("--r", f.r, "red count of a single urn");
    urn->add_option("--b", f.b, "black count of a single urn");
    urn->add_option("--n", f.n, "number of steps")->required();
    urn->add_option("--quantity", f.quantity, "abar (all red) or bbar (a black each step)")
        ->required()
        ->check(CLI::IsMember({"abar", "bbar"}));
    urn->add_option("--trials", f.trials, "simulate with this many trials");
    urn->add_option("--seed", f.seed, "simulation seed (required with --trials)");
    urn->add_option("--workers", f.workers, "deterministic simulation shards");
    add_format(urn);
    urn->callback([&] { outcome = run_urn(f); });

    CLI::App* ascent = app.add_subcommand("ascent", "ascent-set probability");
    ascent->add_option("--input", f.input, "index set, e.g. \"1,2,5\"")->required();
    ascent->add_option("--trials", f.trials, "simulate with this many trials");
    ascent->add_option("--seed", f.seed, "simulation seed (required with --trials)");
    ascent->add_option("--workers", f.workers, "deterministic simulation shards");
    add_format(ascent);
    ascent->callback([&] { outcome = run_ascent(f); });

    CLI::App* verify = app.add_subcommand("verify", "verify an identity exactly");
    verify->add_option("--identity", f.identity, "which identity")
        ->required()
        ->check(CLI::IsMember({"chu-vandermonde", "f11", "f32-trinomial", "f32-single",
                               "f32-gasper", "u-gf", "egf-pair"}));
    verify->add_option("--r", f.r, "parameter r (or r1 via --urns)");
    verify->add_option("--b", f.b, "parameter b");
    verify->add_option("--n", f.n, "terminating index");
    verify->add_option("--order", f.order, "series truncation order");
    verify->add_option("--urns", f.urns, "two urns \"r1:b1,r2:b2\" for the 3F2 identities");
    verify->add_option("--input", f.input, "egf-pair sequences \"a0,a1,...;b0,b1,...\"");
    verify->add_option("--kind", f.kind, "egf-pair relation: symmetric or asymmetric");
    add_format(verify);
    verify->callback([&] { outcome = run_verify(f); });

    CLI::App* u_numbers = app.add_subcommand("u-numbers", "table of U_{m,n}(r)");
    u_numbers->add_option("--r", f.r, "parameter r")->required();
    u_numbers->add_option("--n", f.n, "alternating-sum order")->required();
    u_numbers->add_option("--m-max", f.m_max, "largest exponent m")->required();
    add_format(u_numbers);
    u_numbers->callback([&] { outcome = run_u_numbers(f); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json envelope{{"command", guess_command(argc, argv)}, {"error", e.what()},
                      {"status", "error"}};
        std::cout << envelope.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json envelope{{"command", guess_command(argc, argv)}, {"error", e.what()},
                      {"status", "error"}};
        std::cout << envelope.dump() << "\n";
        return 2;
    }

    print_outcome(outcome, f.format);
    return outcome.exit_code;
}
