#include <CLI11.hpp>
#include <json.hpp>

#include "e2lab/verify.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace e2lab;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct BudgetFlags {
    std::string state_cap = "400";
    std::string gen_cap = "16";
    std::uint64_t max_states = 50000;
    std::uint64_t max_depth = 30;
    bool state_cap_given = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--state-cap", state_cap, "max norm_sq of either pair entry")
            ->check(CLI::PositiveNumber)
            ->each([this](const std::string&) { state_cap_given = true; });
        cmd->add_option("--gen-cap", gen_cap, "max norm_sq of a move parameter")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-states", max_states, "max visited states")->check(CLI::PositiveNumber);
        cmd->add_option("--max-depth", max_depth, "max search depth")->check(CLI::PositiveNumber);
    }

    SearchParams params() const {
        SearchParams p;
        p.state_norm_cap = Int(state_cap);
        p.gen_norm_cap = Int(gen_cap);
        p.max_states = max_states;
        p.max_depth = max_depth;
        return p;
    }
};

void print_ring_header(const Ring& ring) {
    std::cout << "# ring " << to_string(ring) << ", w = " << omega_description(ring) << "\n";
}

// n argument: "lo..hi" (multiples of d inside the range), a comma list, or
// a single value.
std::vector<Int> parse_n_values(const Int& d, const std::string& text) {
    std::vector<Int> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        Int lo(text.substr(0, dots));
        Int hi(text.substr(dots + 2));
        if (lo < 1 || hi < lo) throw std::invalid_argument("bad --n range: " + text);
        Int first = ((lo + d - 1) / d) * d;
        for (Int n = first; n <= hi; n += d) out.push_back(n);
        if (out.empty()) throw std::invalid_argument("no multiples of d in --n range: " + text);
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        if (comma > start) out.emplace_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty --n list");
    return out;
}

int report_certificate(const Certificate& cert, bool json) {
    if (json) {
        std::cout << certificate_json(cert) << "\n";
    } else {
        print_ring_header(cert.ring);
        for (const auto& c : cert.checks) {
            std::cout << "[" << to_string(c.status) << "] " << c.name << "\n";
            if (c.status != CheckStatus::Pass)
                std::cout << "    claim:   " << c.claim << "\n    witness: " << c.witness << "\n";
        }
        std::cout << "overall: " << to_string(cert.overall()) << " (" << cert.checks.size()
                  << " checks)\n";
    }
    switch (cert.overall()) {
        case CheckStatus::Pass: return kExitPass;
        case CheckStatus::Fail: return kExitFail;
        case CheckStatus::Inconclusive: return kExitInconclusive;
    }
    return kExitFail;
}

int run_verify(const std::string& ring_text, const std::string& d_text, const std::string& n_spec,
               bool lemma1, bool lemma2, std::uint32_t samples, std::uint64_t seed,
               const std::string& cap_text, BudgetFlags& budgets, bool json) {
    int modes = (!d_text.empty() ? 1 : 0) + (lemma1 ? 1 : 0) + (lemma2 ? 1 : 0);
    if (modes != 1) {
        std::cerr << "verify: choose exactly one of --d/--n, --lemma1, --lemma2\n";
        return kExitUsage;
    }

    if (!d_text.empty()) {
        Int d(d_text);
        if (d < 2) {
            std::cerr << "verify: the family suite needs --d >= 2\n";
            return kExitUsage;
        }
        if (!ring_text.empty() && parse_ring(ring_text) != gaussian_order(d)) {
            std::cerr << "verify: --ring contradicts --d (expected " << to_string(gaussian_order(d))
                      << ")\n";
            return kExitUsage;
        }
        if (n_spec.empty()) {
            std::cerr << "verify: the family suite needs --n\n";
            return kExitUsage;
        }
        return report_certificate(family_certificate(d, parse_n_values(d, n_spec)), json);
    }

    if (ring_text.empty()) {
        std::cerr << "verify: --lemma1/--lemma2 need --ring\n";
        return kExitUsage;
    }
    Ring ring = parse_ring(ring_text);
    if (lemma1) return report_certificate(bijection_certificate(ring, samples, seed), json);

    Int cap(cap_text);
    // Default window: 3*cap admits every S-word route between variants, since
    // |a+b|^2 + |a-b|^2 = 4*norm and both sides exceed norm for special pairs.
    if (!budgets.state_cap_given) budgets.state_cap = Int(3 * cap).str();
    return report_certificate(rigidity_certificate(ring, cap, budgets.params()), json);
}

int run_orbit(const Ring& ring, const std::string& start_text, const SearchParams& params,
              bool json) {
    UniPair start = parse_pair(ring, start_text);
    OrbitReport rep = orbit_bfs(start, params);
    if (json) {
        ordered_json j;
        ordered_json visited = ordered_json::array();
        ordered_json witnesses = ordered_json::object();
        for (std::size_t i = 0; i < rep.visited.size(); ++i) {
            std::string p = to_string(rep.visited[i]);
            visited.push_back(p);
            witnesses[p] = to_string(rep.witness(i));
        }
        j["visited"] = std::move(visited);
        j["witnesses"] = std::move(witnesses);
        j["exhausted"] = rep.frontier_exhausted;
        std::cout << j.dump(2) << "\n";
    } else {
        print_ring_header(ring);
        std::cout << "# visited " << rep.visited.size() << " states, exhausted "
                  << (rep.frontier_exhausted ? "true" : "false") << "\n";
        for (std::size_t i = 0; i < rep.visited.size(); ++i)
            std::cout << to_string(rep.visited[i]) << "\t" << to_string(rep.witness(i)) << "\n";
    }
    return kExitPass;
}

int run_equiv(const Ring& ring, const std::string& p_text, const std::string& q_text,
              const SearchParams& params, bool json) {
    UniPair p = parse_pair(ring, p_text);
    UniPair q = parse_pair(ring, q_text);
    auto word = pairs_equivalent(p, q, params);
    if (json) {
        ordered_json j;
        j["found"] = word.has_value();
        if (word) j["word"] = to_string(*word);
        else j["word"] = nullptr;
        std::cout << j.dump(2) << "\n";
    } else if (word) {
        std::cout << to_string(*word) << "\n";
    } else {
        std::cout << "inconclusive: no word found within budgets\n";
    }
    return word ? kExitPass : kExitInconclusive;
}

int run_member(const Ring& ring, const std::string& mat_text, const SearchParams& params,
               bool json) {
    Mat2 m = parse_mat2(ring, mat_text);
    auto word = matrix_in_E2(m, params);
    if (json) {
        ordered_json j;
        j["found"] = word.has_value();
        if (word) j["word"] = to_string(*word);
        else j["word"] = nullptr;
        std::cout << j.dump(2) << "\n";
    } else if (word) {
        std::cout << to_string(*word) << "\n";
    } else {
        std::cout << "inconclusive: no word found within budgets\n";
    }
    return word ? kExitPass : kExitInconclusive;
}

int run_reduce(const Ring& ring, const std::string& pair_text, bool json) {
    UniPair start = parse_pair(ring, pair_text);
    ReductionResult res = reduce_pair(start);
    const char* outcome = res.outcome == ReduceOutcome::Reduced ? "REDUCED" : "STALLED";
    if (json) {
        ordered_json j;
        j["outcome"] = outcome;
        j["final"] = to_string(res.final);
        j["word"] = to_string(res.word);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << outcome << " " << to_string(res.final) << " via " << to_string(res.word)
                  << "\n";
    }
    return kExitPass;
}

int run_special(const Ring& ring, const std::string& cap_text, bool json) {
    Int cap(cap_text);
    std::vector<UniPair> specials = enumerate_special(ring, cap);
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& p : specials) arr.push_back(to_string(p));
        std::cout << arr.dump(2) << "\n";
    } else {
        print_ring_header(ring);
        for (const auto& p : specials) std::cout << to_string(p) << "\n";
    }
    return kExitPass;
}

int run_pell(const std::string& d_text, bool json) {
    Int D(d_text);
    auto sol = pell_fundamental(D);
    if (json) {
        ordered_json j;
        j["D"] = D.str();
        if (sol) {
            j["x"] = sol->x.str();
            j["y"] = sol->y.str();
        } else {
            j["x"] = nullptr;
            j["y"] = nullptr;
        }
        std::cout << j.dump(2) << "\n";
    } else if (sol) {
        std::cout << sol->x.str() << " " << sol->y.str() << "\n";
    } else {
        std::cout << "none (" << D.str() << " is a perfect square)\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic, unimodular pairs, and bounded E2-orbit search over imaginary "
                 "quadratic orders"};
    app.require_subcommand(1);

    std::string ring_text, d_text, n_spec, cap_text = "200";
    std::string start_text, p_text, q_text, mat_text, pell_d;
    bool json = false, lemma1 = false, lemma2 = false;
    std::uint32_t samples = 500;
    std::uint64_t seed = 1;
    BudgetFlags budgets;

    auto* verify = app.add_subcommand("verify", "run a certificate suite");
    verify->add_option("--ring", ring_text, "ring, sqrt:D or half:D");
    verify->add_option("--d", d_text, "family suite: the d of Z[di]");
    verify->add_option("--n", n_spec, "family suite: n values, lo..hi or comma list");
    verify->add_flag("--lemma1", lemma1, "randomized coset-correspondence suite");
    verify->add_flag("--lemma2", lemma2, "bounded special-pair rigidity scan");
    verify->add_option("--samples", samples, "samples for --lemma1");
    verify->add_option("--seed", seed, "seed for --lemma1");
    verify->add_option("--cap", cap_text, "norm cap for --lemma2");
    budgets.attach(verify);
    verify->add_flag("--json", json, "emit the certificate as JSON");

    auto* orbit = app.add_subcommand("orbit", "bounded BFS orbit of a unimodular pair");
    orbit->add_option("--ring", ring_text, "ring")->required();
    orbit->add_option("start", start_text, "start pair, e.g. \"(3+2*w, 3-2*w)\"")->required();
    BudgetFlags orbit_budgets;
    orbit_budgets.attach(orbit);
    orbit->add_flag("--json", json, "emit JSON report");

    auto* equiv = app.add_subcommand("equiv", "search for a word connecting two pairs");
    equiv->add_option("--ring", ring_text, "ring")->required();
    equiv->add_option("p", p_text, "first pair")->required();
    equiv->add_option("q", q_text, "second pair")->required();
    BudgetFlags equiv_budgets;
    equiv_budgets.attach(equiv);
    equiv->add_flag("--json", json, "emit JSON");

    auto* member = app.add_subcommand("member", "budgeted E2 membership for a det-1 matrix");
    member->add_option("--ring", ring_text, "ring")->required();
    member->add_option("matrix", mat_text, "matrix, e.g. \"[[0,1],[-1,0]]\"")->required();
    BudgetFlags member_budgets;
    member_budgets.attach(member);
    member->add_flag("--json", json, "emit JSON");

    auto* reduce = app.add_subcommand("reduce", "exact greedy reduction of a pair");
    reduce->add_option("--ring", ring_text, "ring")->required();
    reduce->add_option("pair", p_text, "pair to reduce")->required();
    reduce->add_flag("--json", json, "emit JSON");

    auto* special = app.add_subcommand("special", "enumerate special pairs up to a norm cap");
    special->add_option("--ring", ring_text, "ring")->required();
    special->add_option("--cap", cap_text, "norm_sq cap")->required();
    special->add_flag("--json", json, "emit JSON array");

    auto* pell = app.add_subcommand("pell", "fundamental solution of x^2 - D y^2 = 1");
    pell->add_option("D", pell_d, "positive integer")->required()->check(CLI::PositiveNumber);
    pell->add_flag("--json", json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return run_verify(ring_text, d_text, n_spec, lemma1, lemma2, samples, seed, cap_text,
                              budgets, json);
        if (orbit->parsed())
            return run_orbit(parse_ring(ring_text), start_text, orbit_budgets.params(), json);
        if (equiv->parsed())
            return run_equiv(parse_ring(ring_text), p_text, q_text, equiv_budgets.params(), json);
        if (member->parsed())
            return run_member(parse_ring(ring_text), mat_text, member_budgets.params(), json);
        if (reduce->parsed()) return run_reduce(parse_ring(ring_text), p_text, json);
        if (special->parsed()) return run_special(parse_ring(ring_text), cap_text, json);
        if (pell->parsed()) return run_pell(pell_d, json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
