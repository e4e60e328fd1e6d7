#include "cantor/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cantor/bijection.hpp"
#include "cantor/diagonal.hpp"
#include "cantor/hotel.hpp"
#include "cantor/json_io.hpp"
#include "cantor/pairing.hpp"
#include "cantor/rational_enum.hpp"

namespace cantor {

namespace cli {

namespace {

using nlohmann::json;

// Malformed arguments detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (text.back() == sep) out.emplace_back();
    return out;
}

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return "";
    auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

template <class T, class Parse>
T parse_arg(const std::string& text, const char* what, Parse parse) {
    try {
        return parse(text);
    } catch (const Error&) {
        throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    }
}

Natural parse_natural_arg(const std::string& text, const char* what) {
    return parse_arg<Natural>(text, what, [](const std::string& s) { return Natural::parse(s); });
}

std::size_t parse_count_arg(const std::string& text, const char* what) {
    return static_cast<std::size_t>(parse_natural_arg(text, what).to_u64());
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    if (in.bad()) throw Error("error reading '" + path + "'");
    return lines;
}

std::string join(const std::vector<std::string>& items, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

// --- enumerate -------------------------------------------------------------

void do_enumerate(const std::string& set, const std::string& count_text, bool as_json, std::ostream& out) {
    SetTag tag = parse_set_tag(set);
    std::size_t count = parse_count_arg(count_text, "count");
    std::vector<std::string> values;
    for (const auto& v : enumerate(tag, count)) values.push_back(v.str());
    if (as_json) {
        out << json{{"set", set}, {"count", count}, {"values", values}}.dump() << '\n';
    } else {
        out << join(values) << '\n';
    }
}

// --- map -------------------------------------------------------------------

void do_map(const std::string& name, const std::vector<std::string>& inputs, bool inverse, bool as_json,
            std::ostream& out) {
    Bijection f = parse_arg<Bijection>(name, "bijection", [](const std::string& s) { return bijection_by_name(s); });
    std::vector<std::string> results;
    json pairs = json::array();
    for (const auto& text : inputs) {
        Integer x = parse_arg<Integer>(text, "integer", [](const std::string& s) { return Integer::parse(s); });
        Integer y = inverse ? f.inverse(x) : f.forward(x);
        results.push_back(y.str());
        pairs.push_back({{"input", x.str()}, {"output", y.str()}});
    }
    if (as_json) {
        out << json{{"bijection", f.name()},
                    {"direction", inverse ? "inverse" : "forward"},
                    {"domain", f.domain().name()},
                    {"codomain", f.codomain().name()},
                    {"pairs", pairs}}
                   .dump()
            << '\n';
    } else {
        out << join(results) << '\n';
    }
}

// --- rationals -------------------------------------------------------------

void do_rationals_list(const std::string& count_text, bool is_signed, bool as_json, std::ostream& out) {
    std::size_t count = parse_count_arg(count_text, "count");
    std::vector<std::string> values;
    if (is_signed) {
        for (std::size_t n = 1; n <= count; ++n) values.push_back(nat_to_rational(Natural(n)).str());
    } else {
        for (const auto& r : list_positive_rationals(count)) values.push_back(r.str());
    }
    if (as_json) {
        out << json{{"signed", is_signed}, {"count", count}, {"values", values}}.dump() << '\n';
    } else {
        out << join(values) << '\n';
    }
}

void do_rationals_index(const std::string& text, bool is_signed, bool as_json, std::ostream& out) {
    Rational r = parse_arg<Rational>(text, "rational", [](const std::string& s) { return Rational::parse(s); });
    if (!is_signed && r.sign() != Sign::positive) {
        throw UsageError("'" + text + "' is not positive; use --signed to index all of Q");
    }
    Natural index = is_signed ? rational_to_nat(r) : positive_rational_to_nat(r);
    if (as_json) {
        out << json{{"signed", is_signed}, {"rational", r.str()}, {"index", index.str()}}.dump() << '\n';
    } else {
        out << index << '\n';
    }
}

void do_rationals_at(const std::string& text, bool is_signed, bool as_json, std::ostream& out) {
    Natural n = parse_natural_arg(text, "index");
    if (n.is_zero()) throw UsageError("indices start at 1");
    Rational r = is_signed ? nat_to_rational(n) : nat_to_positive_rational(n);
    if (as_json) {
        out << json{{"signed", is_signed}, {"index", n.str()}, {"rational", r.str()}}.dump() << '\n';
    } else {
        out << r << '\n';
    }
}

// --- diagonalize -----------------------------------------------------------

void do_diagonalize(const std::string& path, const std::string& rule_name, std::optional<std::size_t> digits,
                    bool verify, bool as_json, std::ostream& out) {
    DiagonalRule rule =
        parse_arg<DiagonalRule>(rule_name, "rule", [](const std::string& s) { return rule_by_name(s); });
    std::vector<DecimalStream> entries;
    std::size_t line_no = 0;
    for (const auto& raw : read_lines(path)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        try {
            entries.push_back(DecimalStream::parse(line));
        } catch (const ParseError& e) {
            throw Error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (entries.empty()) throw Error(path + ": no decimal expansions found");

    std::size_t shown = digits.value_or(entries.size());
    EnumerationOfReals list(std::move(entries));
    DecimalStream witness = diagonal_witness(list, rule);

    std::optional<WitnessReport> report;
    if (verify) report = verify_witness(list, witness, std::max<std::size_t>(shown, 1));

    if (as_json) {
        json j{{"rule", rule.name()}, {"entries", *list.size()}, {"witness", decimal_to_json(witness, shown)}};
        if (report) {
            json checks = json::array();
            for (const auto& c : report->checks) {
                checks.push_back({{"entry", c.index},
                                  {"position", c.index},
                                  {"entry_digit", c.entry_digit},
                                  {"witness_digit", c.witness_digit},
                                  {"differs", c.differs}});
            }
            j["verify"] = {{"upto", report->requested},
                           {"checked", report->checks.size()},
                           {"truncated", report->truncated},
                           {"verdict", report->all_differ ? "all-differ" : "fails"},
                           {"first_failure", report->first_failure ? json(*report->first_failure) : json(nullptr)},
                           {"checks", checks}};
        }
        out << j.dump() << '\n';
        return;
    }

    out << witness.to_string(shown) << '\n';
    if (!report) return;
    for (const auto& c : report->checks) {
        out << "entry " << c.index << ": digit " << c.index << " is " << int(c.entry_digit) << ", witness has "
            << int(c.witness_digit) << (c.differs ? " (differs)" : " (SAME)") << '\n';
    }
    if (report->truncated) {
        out << "note: the list has " << report->checks.size() << " entries; checked " << report->checks.size()
            << " of " << report->requested << '\n';
    }
    if (report->all_differ) {
        out << "verdict: all-differ\n";
    } else {
        out << "verdict: fails at entry " << *report->first_failure << '\n';
    }
}

// --- hotel -----------------------------------------------------------------

hotel::Guest parse_guest(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("guest must be written <cohort>:<guest>", 0);
    Natural cohort = Natural::parse(text.substr(0, colon));
    Natural index;
    try {
        index = Natural::parse(text.substr(colon + 1));
    } catch (const ParseError& e) {
        throw ParseError("malformed guest index", colon + 1 + e.position());
    }
    return {static_cast<std::size_t>(cohort.to_u64()), index};
}

std::string occupancy_text(const hotel::AuditReport& r) {
    std::vector<std::string> parts;
    for (std::size_t c = 0; c < r.occupancy.size(); ++c) {
        if (r.occupancy[c] > 0) parts.push_back(std::to_string(c) + ":" + std::to_string(r.occupancy[c]));
    }
    return join(parts, ",");
}

void do_hotel_run(const std::string& path, bool as_json, std::ostream& out) {
    using namespace hotel;
    HotelState state = HotelState::new_full_hotel();
    json events = json::array();
    std::size_t line_no = 0;

    for (const auto& raw : read_lines(path)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::istringstream words(line);
        std::string verb, arg, extra;
        words >> verb >> arg;
        if (arg.empty() || (words >> extra)) {
            throw Error(path + ":" + std::to_string(line_no) + ": expected '<command> <argument>', got '" + line + "'");
        }
        json event{{"line", line_no}, {"command", line}};
        std::string text;
        try {
            if (verb == "arrive") {
                if (arg == "inf") {
                    state = state.check_in_countably_many();
                    text = "cohort " + std::to_string(state.newest_cohort()) +
                           " takes the odd rooms 2i-1; everyone else moves r -> 2r";
                    event["plan"] = "double";
                } else {
                    Natural k = Natural::parse(arg);
                    state = k == Natural(1) ? state.check_in_one() : state.check_in_finite(k);
                    text = "cohort " + std::to_string(state.newest_cohort()) +
                           (k == Natural(1) ? " takes room 1" : " takes rooms 1.." + k.str()) +
                           "; everyone else moves r -> r+" + k.str();
                    event["plan"] = "shift " + k.str();
                }
                event["cohort"] = state.newest_cohort();
            } else if (verb == "where") {
                Guest g = parse_guest(arg);
                Natural room = state.room_of(g);
                text = "room " + room.str();
                event["guest"] = g.str();
                event["room"] = room.str();
            } else if (verb == "who") {
                Natural room = Natural::parse(arg);
                auto g = state.guest_in(room);
                text = g ? "guest " + g->str() : "vacant";
                event["room"] = room.str();
                event["guest"] = g ? json(g->str()) : json(nullptr);
            } else if (verb == "audit") {
                std::uint64_t sample = Natural::parse(arg).to_u64();
                AuditReport r = audit(state, sample);
                text = std::string(r.ok() ? "ok" : "FAILED") + " injective=" + (r.injective ? "yes" : "no") +
                       " total=" + (r.total ? "yes" : "no") + " round-trip=" + (r.round_trip ? "yes" : "no");
                if (r.doubling_placement) text += std::string(" doubling=") + (*r.doubling_placement ? "yes" : "no");
                text += " occupancy=" + occupancy_text(r);
                json occupancy = json::object();
                for (std::size_t c = 0; c < r.occupancy.size(); ++c) occupancy[std::to_string(c)] = r.occupancy[c];
                event["sample"] = sample;
                event["ok"] = r.ok();
                event["injective"] = r.injective;
                event["total"] = r.total;
                event["round_trip"] = r.round_trip;
                event["doubling_placement"] =
                    r.doubling_placement ? json(*r.doubling_placement) : json(nullptr);
                event["occupancy"] = occupancy;
            } else {
                throw ParseError("unknown command '" + verb + "' (expected arrive, where, who or audit)", 0);
            }
        } catch (const Error& e) {
            throw Error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        event["result"] = text;
        if (as_json) {
            events.push_back(event);
        } else {
            out << line << " -> " << text << '\n';
        }
    }
    if (as_json) out << json{{"events", events}}.dump() << '\n';
}

// --- check / compare -------------------------------------------------------

void do_check(const std::string& rule_text, const std::string& codomain, std::uint64_t bound, bool as_json,
              std::ostream& out) {
    RuleExpr rule = parse_rule(rule_text);
    CheckReport r = check_pairing(rule, parse_set_tag(codomain), bound);

    if (as_json) {
        json ooc = json::array();
        for (const auto& c : r.out_of_codomain) {
            ooc.push_back({{"input", c.input.str()},
                           {"output", c.output ? json(c.output->str()) : json(nullptr)},
                           {"reason", c.reason}});
        }
        json collisions = json::array();
        for (const auto& c : r.collisions) {
            collisions.push_back({{"first", c.first.str()}, {"second", c.second.str()}, {"value", c.value.str()}});
        }
        std::vector<std::string> missed;
        for (const auto& m : r.missed) missed.push_back(m.str());
        out << json{{"rule", to_string(rule)},
                    {"codomain", codomain},
                    {"bound", r.bound},
                    {"window", r.window},
                    {"verdict", to_string(r.verdict)},
                    {"out_of_codomain", ooc},
                    {"out_of_codomain_count", r.out_of_codomain_count},
                    {"collisions", collisions},
                    {"collision_count", r.collision_count},
                    {"missed", missed},
                    {"missed_count", r.missed_count}}
                   .dump()
            << '\n';
        return;
    }

    out << "rule: " << to_string(rule) << '\n'
        << "codomain: " << codomain << ", n = 1.." << r.bound << ", surjectivity window " << r.window << '\n'
        << "verdict: " << to_string(r.verdict) << '\n';
    for (const auto& c : r.out_of_codomain) {
        out << "out of codomain: n=" << c.input << ": " << c.reason << '\n';
    }
    if (!r.collisions.empty()) {
        const auto& c = r.collisions.front();
        out << "collision: n=" << c.first << " and n=" << c.second << " both give " << c.value << " ("
            << r.collision_count << " repeated outputs)\n";
    }
    if (!r.missed.empty()) {
        std::vector<std::string> m;
        for (const auto& x : r.missed) m.push_back(x.str());
        out << "missed: " << join(m) << (r.missed_count > r.missed.size() ? " ..." : "") << " (" << r.missed_count
            << " total)\n";
    }
}

std::string pairing_text(const FinitePairing& p) {
    std::vector<std::string> parts;
    for (const auto& [x, y] : p.pairs) parts.push_back(x + "<->" + y);
    std::string text = join(parts);
    if (!p.leftover_a.empty()) text += "; unpaired in A: " + join(p.leftover_a, ",");
    if (!p.leftover_b.empty()) text += "; unpaired in B: " + join(p.leftover_b, ",");
    return text;
}

void do_compare(const std::string& a_text, const std::string& b_text, bool as_json, std::ostream& out) {
    auto a = split(a_text, ',');
    auto b = split(b_text, ',');
    for (auto* list : {&a, &b}) {
        for (auto& x : *list) {
            x = trim(x);
            if (x.empty()) throw UsageError("empty element in set list");
        }
    }
    FiniteComparison c = compare_finite(a, b);
    std::string leftover = c.leftover_side ? (*c.leftover_side == Side::a ? "A" : "B") : "none";

    if (as_json) {
        json example_pairs = json::array();
        for (const auto& [x, y] : c.example.pairs) example_pairs.push_back({x, y});
        out << json{{"size_a", c.size_a},
                    {"size_b", c.size_b},
                    {"pairings", c.pairings},
                    {"any_without_remainder", c.any_without_remainder},
                    {"min_leftover", c.min_leftover},
                    {"max_leftover", c.max_leftover},
                    {"leftover_side", c.leftover_side ? json(leftover) : json(nullptr)},
                    {"verdict", to_string(c.verdict)},
                    {"example", {{"pairs", example_pairs},
                                 {"leftover_a", c.example.leftover_a},
                                 {"leftover_b", c.example.leftover_b}}}}
                   .dump()
            << '\n';
        return;
    }
    out << "pairings: " << c.pairings << '\n'
        << "without remainder: " << (c.any_without_remainder ? "yes" : "no") << '\n';
    if (c.leftover_side) {
        out << "leftover: every pairing leaves " << c.min_leftover
            << (c.min_leftover == c.max_leftover ? "" : ".." + std::to_string(c.max_leftover))
            << " element(s) of " << leftover << " unpaired\n";
    }
    out << "example: " << pairing_text(c.example) << '\n'
        << "verdict: |A| " << to_string(c.verdict) << " |B|\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Executable countability arguments: pairings, Cantor's diagonal arguments and Hilbert's hotel",
                 "cantor"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable JSON output");

    std::string set, count_text, name, rule_text, codomain, a_text, b_text, path, rule_name = "paper";
    std::vector<std::string> values;
    bool inverse = false, is_signed = false, verify = false;
    std::optional<std::size_t> digits;
    std::uint64_t bound = 0;

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the first members of a set in its canonical order");
    enumerate_cmd->add_option("set", set, "nat, nat0, even, odd or int")
        ->required()
        ->check(CLI::IsMember({"nat", "nat0", "even", "odd", "int"}));
    enumerate_cmd->add_option("count", count_text, "How many members")->required();

    auto* map_cmd = app.add_subcommand("map", "Apply a built-in pairing to integers");
    map_cmd->add_option("bijection", name, "double, pred, shift:<k>, zigzag or to-odd")->required();
    map_cmd->add_option("values", values, "Inputs")->required();
    map_cmd->add_flag("--inverse", inverse, "Apply the inverse map");

    auto* rationals_cmd = app.add_subcommand("rationals", "Cantor's zigzag enumeration of the rationals");
    rationals_cmd->require_subcommand(1);
    rationals_cmd->footer(
        "With --signed the pairing covers all of Q: index 1 is 0, even 2m is the m-th positive rational, odd "
        "2m+1 its negative.");
    auto* list_cmd = rationals_cmd->add_subcommand("list", "The first <count> rationals");
    list_cmd->add_option("count", count_text)->required();
    auto* index_cmd = rationals_cmd->add_subcommand("index", "Position of p/q in the enumeration");
    index_cmd->add_option("rational", rule_text, "p/q")->required();
    auto* at_cmd = rationals_cmd->add_subcommand("at", "The n-th rational");
    at_cmd->add_option("n", count_text)->required();
    for (auto* sub : {list_cmd, index_cmd, at_cmd}) {
        sub->add_flag("--signed", is_signed, "Enumerate all of Q (1 -> 0, even -> +, odd -> -)");
    }

    auto* diag_cmd = app.add_subcommand("diagonalize", "Build a real number missing from a list of decimals");
    diag_cmd->add_option("file", path, "One decimal expansion per line")->required();
    diag_cmd->add_option("--rule", rule_name, "Digit rule: paper (d+1, 9->0) or safe (5, or 4 for a 5)")
        ->check(CLI::IsMember({"paper", "safe"}))
        ->capture_default_str();
    diag_cmd->add_option("--digits", digits, "Fractional digits to print (default: number of entries)");
    diag_cmd->add_flag("--verify", verify, "Check the witness against every entry");

    auto* hotel_cmd = app.add_subcommand("hotel", "Hilbert's hotel");
    hotel_cmd->require_subcommand(1);
    auto* hotel_run = hotel_cmd->add_subcommand("run", "Run a script of arrive/where/who/audit lines");
    hotel_run->add_option("script", path)->required();

    auto* check_cmd = app.add_subcommand("check", "Test a pairing rule on n = 1..bound");
    check_cmd->add_option("--rule", rule_text, "Rule in n, e.g. \"if even then n/2 else -(n-1)/2\"")->required();
    check_cmd->add_option("--codomain", codomain, "nat, nat0, even, odd or int")
        ->required()
        ->check(CLI::IsMember({"nat", "nat0", "even", "odd", "int"}));
    check_cmd->add_option("--bound", bound, "Largest n to evaluate")->required()->check(CLI::PositiveNumber);

    auto* compare_cmd = app.add_subcommand("compare", "Compare two finite sets by trying every pairing");
    compare_cmd->add_option("--a", a_text, "Comma-separated elements of A")->required();
    compare_cmd->add_option("--b", b_text, "Comma-separated elements of B")->required();

    for (auto* sub : {enumerate_cmd, map_cmd, rationals_cmd, list_cmd, index_cmd, at_cmd, diag_cmd, hotel_cmd,
                      hotel_run, check_cmd, compare_cmd}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    try {
        if (*enumerate_cmd) {
            do_enumerate(set, count_text, as_json, out);
        } else if (*map_cmd) {
            do_map(name, values, inverse, as_json, out);
        } else if (*list_cmd) {
            do_rationals_list(count_text, is_signed, as_json, out);
        } else if (*index_cmd) {
            do_rationals_index(rule_text, is_signed, as_json, out);
        } else if (*at_cmd) {
            do_rationals_at(count_text, is_signed, as_json, out);
        } else if (*diag_cmd) {
            do_diagonalize(path, rule_name, digits, verify, as_json, out);
        } else if (*hotel_run) {
            do_hotel_run(path, as_json, out);
        } else if (*check_cmd) {
            do_check(rule_text, codomain, bound, as_json, out);
        } else if (*compare_cmd) {
            do_compare(a_text, b_text, as_json, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return data_error;
    }
    return ok;
}

}  // namespace cli
}  // namespace cantor
