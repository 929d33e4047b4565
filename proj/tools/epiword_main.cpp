#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <string>

#include "epiword/classify.hpp"
#include "epiword/directive.hpp"
#include "epiword/factors.hpp"
#include "epiword/json_io.hpp"
#include "epiword/verifier.hpp"

namespace {

using namespace epiword;
using nlohmann::json;

constexpr int kExitUsage = 64;
constexpr int kExitResource = 65;

struct GlobalOptions {
    std::string format = "text";
    std::size_t prefix_bound = 10'000;
    std::size_t word_cap = kDefaultWordCap;

    bool json_output() const { return format == "json"; }
    ClassifyOptions classify_options() const { return {prefix_bound, word_cap}; }
};

void emit(const GlobalOptions& opts, const std::string& command, json payload,
          const std::string& text) {
    if (opts.json_output()) {
        json envelope = {{"tool", "epiword"},
                         {"schema_version", kSchemaVersion},
                         {"command", command}};
        envelope.update(payload);
        std::cout << envelope.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

// Factor source for complexity/special: exact for periodic or finite words,
// a bounded prefix otherwise.
struct FactorSource {
    std::optional<EventuallyPeriodicWord> periodic;
    Word prefix;
    bool exact = true;
    std::string label;

    std::set<Word> factors(std::size_t n) const {
        return periodic ? factor_set(*periodic, n) : factor_set(prefix, n);
    }
};

FactorSource resolve_source(const DirectiveSpec& spec, const GlobalOptions& opts) {
    FactorSource src;
    if (spec.single_letter_tail()) {
        src.periodic = to_periodic(spec, opts.word_cap);
        src.exact = true;
        src.label = "exact (periodic word " + src.periodic->str() + ")";
    } else if (spec.is_finite()) {
        src.prefix = pal(spec.head(), opts.word_cap);
        src.exact = true;
        src.label = "exact (finite word of length " + std::to_string(src.prefix.size()) + ")";
    } else {
        src.prefix = generate_prefix(spec, opts.prefix_bound, opts.word_cap);
        src.exact = false;
        src.label = "prefix approximation (first " + std::to_string(src.prefix.size()) +
                    " letters)";
    }
    return src;
}

int family_exit_code(const FamilyClass& fc) {
    switch (fc.kind) {
        case FamilyClass::Kind::FamilyA:
        case FamilyClass::Kind::FamilyB:
        case FamilyClass::Kind::FamilyC: return 0;
        case FamilyClass::Kind::NotBalanced: return 1;
        case FamilyClass::Kind::Unknown: return 2;
    }
    return 2;
}

std::string frequency_table(const std::map<Letter, Rational>& freqs) {
    std::string out;
    for (const auto& [letter, value] : freqs) {
        if (!out.empty()) out += "\n";
        out += std::to_string(letter) + ": " + value.str();
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"episturmian words: palindromic closures, balance, family classification"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--prefix-bound", opts.prefix_bound,
                   "prefix length bound for witness searches and approximations")
        ->capture_default_str();
    app.add_option("--word-cap", opts.word_cap, "hard cap on materialized word length")
        ->capture_default_str();

    int exit_code = 0;

    // pal
    std::string pal_input;
    auto* cmd_pal = app.add_subcommand("pal", "iterated palindromic closure of a word");
    cmd_pal->add_option("word", pal_input, "directive word, e.g. 123")
        ->required()
        ->expected(1);
    cmd_pal->callback([&] {
        Word result = pal(Word::parse(pal_input), opts.word_cap);
        emit(opts, "pal", {{"input", pal_input}, {"result", result.str()}},
             result.str());
    });

    // generate
    std::string gen_spec;
    std::size_t gen_length = 0;
    bool gen_exact = false;
    auto* cmd_gen = app.add_subcommand("generate", "prefix of the directed word");
    cmd_gen->add_option("spec", gen_spec, "directive, e.g. \"(123)\" or \"123(1)\"")
        ->required();
    cmd_gen->add_option("--length", gen_length, "minimum prefix length")->required();
    cmd_gen->add_flag("--exact", gen_exact, "truncate to exactly the requested length");
    cmd_gen->callback([&] {
        DirectiveSpec spec = DirectiveSpec::parse(gen_spec);
        Word prefix = generate_prefix(spec, gen_length, opts.word_cap);
        if (gen_exact) prefix = prefix.subword(0, gen_length);
        emit(opts, "generate",
             {{"input", gen_spec}, {"length", prefix.size()}, {"result", prefix.str()}},
             prefix.str());
    });

    // classify
    std::string classify_spec;
    auto* cmd_classify =
        app.add_subcommand("classify", "balanced-family classification of a directive");
    cmd_classify->add_option("spec", classify_spec, "infinite directive, e.g. \"112(3)\"")
        ->required();
    cmd_classify->callback([&] {
        FamilyClass fc =
            classify(DirectiveSpec::parse(classify_spec), opts.classify_options());
        json j = to_json(fc);
        j["input"] = classify_spec;
        emit(opts, "classify", j, fc.str());
        exit_code = family_exit_code(fc);
    });

    // balance
    std::string balance_input;
    std::optional<std::size_t> balance_max_len;
    auto* cmd_balance = app.add_subcommand(
        "balance", "balance check of a finite word or a periodic word \"pre(period)\"");
    cmd_balance->add_option("word", balance_input)->required();
    cmd_balance->add_option("--max-len", balance_max_len,
                            "largest factor length to check (finite words)");
    cmd_balance->callback([&] {
        BalanceReport report;
        if (balance_input.find('(') != std::string::npos) {
            report = balance_check_periodic(EventuallyPeriodicWord::parse(balance_input));
        } else {
            Word w = Word::parse(balance_input);
            report = balance_check_finite(w, balance_max_len.value_or(w.size()));
        }
        json j = to_json(report);
        j["input"] = balance_input;
        emit(opts, "balance", j, report.str());
        exit_code = report.verdict == BalanceVerdict::Balanced      ? 0
                    : report.verdict == BalanceVerdict::Unbalanced ? 1
                                                                   : 2;
    });

    // freq
    std::string freq_input;
    auto* cmd_freq = app.add_subcommand(
        "freq", "exact letter frequencies of a periodic directive, or the closed "
                "form for alphabet size k");
    cmd_freq->add_option("spec-or-k", freq_input)->required();
    cmd_freq->callback([&] {
        std::map<Letter, Rational> freqs;
        unsigned long k = 0;
        auto [p, ec] = std::from_chars(freq_input.data(),
                                       freq_input.data() + freq_input.size(), k);
        if (ec == std::errc{} && p == freq_input.data() + freq_input.size() && k <= 62) {
            freqs = frequencies_closed_form(static_cast<unsigned>(k));
        } else {
            DirectiveSpec spec = DirectiveSpec::parse(freq_input);
            freqs = frequencies(to_periodic(spec, opts.word_cap));
        }
        emit(opts, "freq", {{"input", freq_input}, {"frequencies", to_json(freqs)}},
             frequency_table(freqs));
    });

    // fraenkel
    unsigned fraenkel_k = 0;
    auto* cmd_fraenkel = app.add_subcommand("fraenkel", "the k-letter Fraenkel word");
    cmd_fraenkel->add_option("k", fraenkel_k)->required();
    cmd_fraenkel->callback([&] {
        Word w = fraenkel_word(fraenkel_k, opts.word_cap);
        emit(opts, "fraenkel", {{"k", fraenkel_k}, {"result", w.str()}}, w.str());
    });

    // verify
    std::string verify_claim_id = "all";
    EnumerationConfig verify_cfg;
    unsigned verify_k_min = 3, verify_k_max = 5;
    auto* cmd_verify =
        app.add_subcommand("verify", "exhaustive desk-scale verification runs");
    cmd_verify->add_option("claim", verify_claim_id,
                           "claim id (see --list) or \"all\"");
    bool verify_list = false;
    cmd_verify->add_flag("--list", verify_list, "list claim ids and exit");
    cmd_verify->add_option("--max-alphabet", verify_cfg.max_alphabet)
        ->capture_default_str();
    cmd_verify->add_option("--max-head", verify_cfg.max_head_len)->capture_default_str();
    cmd_verify->add_option("--max-tail", verify_cfg.max_tail_len)->capture_default_str();
    cmd_verify->add_option("--k-min", verify_k_min, "fraenkel claim: smallest k")
        ->capture_default_str();
    cmd_verify->add_option("--k-max", verify_k_max, "fraenkel claim: largest k")
        ->capture_default_str();
    cmd_verify->callback([&] {
        if (verify_list) {
            for (const auto& id : claim_ids()) std::cout << id << "\n";
            return;
        }
        verify_cfg.prefix_bound = opts.prefix_bound;
        verify_cfg.word_cap = opts.word_cap;
        std::vector<VerificationReport> reports;
        if (verify_claim_id == "all") {
            for (const auto& id : claim_ids())
                reports.push_back(id == "fraenkel"
                                      ? verify_fraenkel_episturmian(verify_k_min,
                                                                    verify_k_max,
                                                                    verify_cfg)
                                      : verify_claim(id, verify_cfg));
        } else if (verify_claim_id == "fraenkel") {
            reports.push_back(
                verify_fraenkel_episturmian(verify_k_min, verify_k_max, verify_cfg));
        } else {
            reports.push_back(verify_claim(verify_claim_id, verify_cfg));
        }
        bool all_passed = true;
        if (opts.json_output()) {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            emit(opts, "verify", {{"reports", arr}}, "");
        } else {
            for (const auto& r : reports) std::cout << r.str() << "\n";
        }
        for (const auto& r : reports) all_passed = all_passed && r.passed();
        exit_code = all_passed ? 0 : 1;
    });

    // complexity
    std::string cx_spec;
    std::size_t cx_max_n = 10;
    auto* cmd_cx = app.add_subcommand("complexity", "factor complexity p(n) of the "
                                                    "directed word");
    cmd_cx->add_option("spec", cx_spec)->required();
    cmd_cx->add_option("--max-n", cx_max_n)->capture_default_str();
    cmd_cx->callback([&] {
        FactorSource src = resolve_source(DirectiveSpec::parse(cx_spec), opts);
        ComplexityProfile profile;
        profile.exact = src.exact;
        for (std::size_t n = 1; n <= cx_max_n; ++n)
            profile.values.emplace_back(n, src.factors(n).size());
        std::string text = "source: " + src.label;
        for (const auto& [n, p] : profile.values)
            text += "\np(" + std::to_string(n) + ") = " + std::to_string(p);
        json j = to_json(profile);
        j["input"] = cx_spec;
        j["source"] = src.label;
        emit(opts, "complexity", j, text);
    });

    // special
    std::string sp_spec;
    std::size_t sp_max_n = 10;
    bool sp_left = false;
    auto* cmd_sp = app.add_subcommand("special", "right (or left) special factors per "
                                                 "length");
    cmd_sp->add_option("spec", sp_spec)->required();
    cmd_sp->add_option("--max-n", sp_max_n)->capture_default_str();
    cmd_sp->add_flag("--left", sp_left, "left special factors instead of right");
    cmd_sp->callback([&] {
        FactorSource src = resolve_source(DirectiveSpec::parse(sp_spec), opts);
        std::string text = "source: " + src.label;
        json rows = json::array();
        auto current = src.factors(0);
        for (std::size_t n = 0; n <= sp_max_n; ++n) {
            auto next = src.factors(n + 1);
            auto special = sp_left ? left_special_factors(current, next)
                                   : right_special_factors(current, next);
            json names = json::array();
            std::string line;
            for (const Word& f : special) {
                names.push_back(f.str());
                line += line.empty() ? f.str() : " " + f.str();
            }
            rows.push_back({{"n", n}, {"factors", names}});
            text += "\nn=" + std::to_string(n) + ": " + (line.empty() ? "-" : line);
            current = std::move(next);
        }
        emit(opts, "special",
             {{"input", sp_spec}, {"side", sp_left ? "left" : "right"}, {"rows", rows},
              {"source", src.label}},
             text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return exit_code;
}
