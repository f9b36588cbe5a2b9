#include "gcp/construct.hpp"
#include "gcp/pair_io.hpp"
#include "gcp/search.hpp"
#include "gcp/seeds.hpp"
#include "gcp/sequence.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

// Exit code contract: 0 success/true, 1 verified-false, 2 usage/format,
// 3 I/O failure.
constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        if (std::cin.bad()) {
            throw std::ios_base::failure("failed reading standard input");
        }
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::ios_base::failure("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw std::ios_base::failure("failed reading '" + path + "'");
    }
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!std::cout) {
            throw std::ios_base::failure("failed writing to standard output");
        }
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::ios_base::failure("cannot open '" + path + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::ios_base::failure("failed writing '" + path + "'");
    }
}

std::string approx_complex(const gcp::CycloElem& x) {
    const std::complex<double> z = gcp::to_complex(x);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", z.real(), z.imag());
    return buf;
}

std::string coeff_vector(const gcp::CycloElem& x) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (std::int64_t c : x.coeffs()) {
        if (!first) {
            os << ",";
        }
        os << c;
        first = false;
    }
    os << "]";
    return os.str();
}

int run_verify(const std::string& input) {
    const gcp::PairDocument doc = gcp::parse_document(slurp(input));
    if (doc.pairs.empty()) {
        std::cerr << "error: document contains no pairs\n";
        return kExitUsage;
    }
    bool all_ok = true;
    for (const gcp::PairEntry& entry : doc.pairs) {
        const gcp::SeqPair pair = gcp::entry_to_pair(doc, entry);
        const auto failing = gcp::first_failing_shift(pair);
        if (!failing) {
            std::cout << "pair '" << entry.name << "': GCP: yes, shifts checked: " << (doc.length - 1)
                      << "\n";
        } else {
            all_ok = false;
            const gcp::CycloElem residual = gcp::correlation_sum(pair, *failing);
            std::cout << "pair '" << entry.name << "': GCP: no, first failing shift: " << *failing
                      << ", residual coeffs: " << coeff_vector(residual) << " = "
                      << gcp::to_string(residual) << " ~= " << approx_complex(residual) << "\n";
        }
    }
    return all_ok ? kExitOk : kExitFalse;
}

struct ConstructOptions {
    std::string seed;
    std::string seed_dir;
    std::int64_t m = 0;
    std::int64_t h = 0;
    std::vector<std::int64_t> perm;
    std::vector<std::int64_t> coeffs;
    std::int64_t theta = 0;
    std::int64_t theta_prime = 0;
    bool theta_set = false;
    bool theta_prime_set = false;
    bool json = false;
    std::string output = "-";
};

gcp::SeedPair resolve_seed(const std::string& ref, const std::string& dir, std::string& name_out) {
    namespace fs = std::filesystem;
    if (fs::exists(ref) && fs::is_regular_file(ref)) {
        const gcp::PairDocument doc = gcp::parse_document(slurp(ref));
        if (doc.q != 4) {
            throw gcp::ParseError("seed file '" + ref + "' must be quaternary (q = 4), got q = " +
                                  std::to_string(doc.q));
        }
        if (doc.pairs.empty()) {
            throw gcp::ParseError("seed file '" + ref + "' contains no pairs");
        }
        const gcp::PairEntry& entry = doc.pairs.front();
        name_out = entry.name;
        return gcp::SeedPair(gcp::QarySeq(4, entry.a), gcp::QarySeq(4, entry.b));
    }
    const auto record = gcp::find_seed_by_name(ref, dir);
    if (!record) {
        std::ostringstream os;
        os << "unknown seed '" << ref << "'; builtin seeds:";
        for (const auto& r : gcp::builtin_seeds()) {
            os << " " << r.name;
        }
        throw gcp::ParseError(os.str());
    }
    name_out = record->name;
    return record->seed;
}

int run_construct(const ConstructOptions& opt) {
    std::string seed_name;
    const gcp::SeedPair seed = resolve_seed(opt.seed, opt.seed_dir, seed_name);

    gcp::ExpansionParams defaults = gcp::ExpansionParams::defaults(opt.m, opt.h);
    const std::vector<std::int64_t> perm =
        opt.perm.empty() ? std::vector<std::int64_t>(defaults.perm().begin(), defaults.perm().end())
                         : opt.perm;
    const std::vector<std::int64_t> coeffs =
        opt.coeffs.empty() ? std::vector<std::int64_t>(defaults.coeffs().begin(), defaults.coeffs().end())
                           : opt.coeffs;
    const std::int64_t theta = opt.theta_set ? opt.theta : defaults.theta();
    const std::int64_t theta_prime = opt.theta_prime_set ? opt.theta_prime : defaults.theta_prime();
    const gcp::ExpansionParams params(opt.m, opt.h, perm, coeffs, theta, theta_prime);

    const gcp::SeqPair pair = gcp::construct_pair(seed, params);

    std::ostringstream desc;
    desc << "expansion of seed '" << seed_name << "' (M=" << seed.length() << "): m=" << params.m()
         << " h=" << params.h() << " perm=";
    for (std::size_t i = 0; i < perm.size(); ++i) {
        desc << (i ? "," : "") << perm[i];
    }
    desc << " coeffs=";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        desc << (i ? "," : "") << coeffs[i];
    }
    desc << " theta=" << params.theta() << " theta'=" << params.theta_prime();

    gcp::PairEntry entry;
    entry.name = seed_name + ".m" + std::to_string(params.m()) + ".h" + std::to_string(params.h());
    entry.a.assign(pair.a().exps().begin(), pair.a().exps().end());
    entry.b.assign(pair.b().exps().begin(), pair.b().exps().end());
    entry.provenance = desc.str();
    const gcp::PairDocument doc = gcp::document_from_pairs(pair.q(), pair.length(), {entry});

    spill(opt.output, opt.json ? gcp::emit_json_document(doc) : gcp::emit_text_document(doc, {desc.str()}));
    return kExitOk;
}

struct SearchOptions {
    std::int64_t length = 0;
    std::int64_t alphabet = 0;
    bool normalize = true;
    bool count_only = false;
    bool json = false;
    std::uint64_t node_budget = 1'000'000'000;
    std::int64_t max_results = -1;
    std::string output = "-";
};

int run_search(const SearchOptions& opt) {
    gcp::SearchSpec spec;
    spec.length = opt.length;
    spec.alphabet = opt.alphabet;
    spec.normalize = opt.normalize;
    spec.node_budget = opt.node_budget;
    if (opt.max_results >= 0) {
        spec.max_results = static_cast<std::size_t>(opt.max_results);
    }
    const gcp::SearchResult result = gcp::exhaustive_gcp_search(spec);
    if (opt.count_only) {
        std::cout << result.pairs.size() << (result.truncated ? " (truncated)" : "") << "\n";
        return kExitOk;
    }
    std::vector<gcp::PairEntry> entries;
    entries.reserve(result.pairs.size());
    char name[32];
    for (std::size_t i = 0; i < result.pairs.size(); ++i) {
        std::snprintf(name, sizeof(name), "g%04zu", i);
        gcp::PairEntry e;
        e.name = name;
        e.a.assign(result.pairs[i].a().exps().begin(), result.pairs[i].a().exps().end());
        e.b.assign(result.pairs[i].b().exps().begin(), result.pairs[i].b().exps().end());
        entries.push_back(std::move(e));
    }
    std::ostringstream desc;
    desc << "exhaustive search: length=" << opt.length << " alphabet=" << opt.alphabet
         << (opt.normalize ? " normalized" : " all-phases") << ", " << result.pairs.size() << " pair(s)"
         << (result.truncated ? " (truncated)" : "");
    const gcp::PairDocument doc = gcp::document_from_pairs(opt.alphabet, opt.length, entries);
    spill(opt.output, opt.json ? gcp::emit_json_document(doc) : gcp::emit_text_document(doc, {desc.str()}));
    return kExitOk;
}

int run_admissible(std::int64_t length) {
    const auto witness = gcp::is_admissible_length(length);
    if (!witness) {
        std::cout << length
                  << ": not covered by the existence criterion (no decomposition 2^(a+u) 3^b 5^c 11^d "
                     "13^e with b+c+d+e <= a+2u+1, u <= c+e); this does not assert non-existence\n";
        return kExitFalse;
    }
    std::cout << length << ": admissible, witness (a=" << witness->a << ",b=" << witness->b
              << ",c=" << witness->c << ",d=" << witness->d << ",e=" << witness->e << ",u=" << witness->u
              << ")\n";
    return kExitOk;
}

int run_reachable(std::int64_t limit) {
    for (std::int64_t v : gcp::reachable_lengths(limit)) {
        std::cout << v << "\n";
    }
    return kExitOk;
}

int run_seeds_list(const std::string& dir) {
    for (const gcp::SeedRecord& r : gcp::all_seeds(dir)) {
        std::cout << r.name << ": M=" << r.seed.length() << " q=4 verified="
                  << (r.verified ? "yes" : "no") << " provenance=\"" << r.provenance << "\"\n";
    }
    return kExitOk;
}

int run_seeds_show(const std::string& name, const std::string& dir, bool json) {
    const auto record = gcp::find_seed_by_name(name, dir);
    if (!record) {
        std::ostringstream os;
        os << "unknown seed '" << name << "'; builtin seeds:";
        for (const auto& r : gcp::builtin_seeds()) {
            os << " " << r.name;
        }
        throw gcp::ParseError(os.str());
    }
    gcp::PairEntry entry;
    entry.name = record->name;
    entry.provenance = record->provenance;
    entry.a.assign(record->seed.phi1().exps().begin(), record->seed.phi1().exps().end());
    entry.b.assign(record->seed.phi2().exps().begin(), record->seed.phi2().exps().end());
    const gcp::PairDocument doc = gcp::document_from_pairs(4, record->seed.length(), {entry});
    std::cout << (json ? gcp::emit_json_document(doc) : gcp::emit_text_document(doc));
    return kExitOk;
}

struct IdentityOptions {
    std::int64_t trials = 200;
    std::int64_t min_len = 2;
    std::int64_t max_len = 8;
    std::uint64_t rng_seed = 20250810;
    bool inject_fault = false;
};

int run_identity_check(const IdentityOptions& opt) {
    if (opt.trials < 0) {
        throw std::invalid_argument("identity-check: trials must be >= 0");
    }
    if (opt.trials == 0) {
        std::cout << "identity-check: warning: 0 trials requested, vacuously passing\n";
        return kExitOk;
    }
    if (opt.min_len < 1 || opt.max_len < opt.min_len) {
        throw std::invalid_argument("identity-check: need 1 <= min-len <= max-len");
    }
    std::mt19937_64 rng(opt.rng_seed);
    const auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (std::int64_t trial = 0; trial < opt.trials; ++trial) {
        const std::int64_t len = uniform(opt.min_len, opt.max_len);
        const std::int64_t m = uniform(1, 3);
        const std::int64_t h = uniform(1, 4);
        std::vector<std::int64_t> phi1(static_cast<std::size_t>(len));
        std::vector<std::int64_t> phi2(static_cast<std::size_t>(len));
        for (auto& v : phi1) {
            v = uniform(0, 3);
        }
        for (auto& v : phi2) {
            v = uniform(0, 3);
        }
        std::vector<std::int64_t> perm(static_cast<std::size_t>(m));
        for (std::int64_t k = 0; k < m; ++k) {
            perm[static_cast<std::size_t>(k)] = k + 1;
        }
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(m));
        for (auto& c : coeffs) {
            c = uniform(0, 4 * h - 1);
        }
        const gcp::SeedPair seed(gcp::QarySeq(4, std::move(phi1)), gcp::QarySeq(4, std::move(phi2)));
        const gcp::ExpansionParams params(m, h, perm, coeffs, uniform(0, 4 * h - 1),
                                          uniform(0, 4 * h - 1));

        gcp::SeqPair candidate = gcp::construct_pair(seed, params);
        if (opt.inject_fault) {
            // Flip one exponent of the constructed pair; the checker must
            // notice, otherwise it is vacuous.
            std::vector<std::int64_t> ea(candidate.a().exps().begin(), candidate.a().exps().end());
            ea[0] = (ea[0] + 1) % (4 * h);
            candidate = gcp::SeqPair(gcp::QarySeq(4 * h, std::move(ea)), candidate.b());
        }
        std::int64_t bad_shift = 0;
        if (!gcp::expansion_identity_holds_for(seed, params, candidate, &bad_shift)) {
            std::cout << "identity-check: FAILED at trial " << trial << " (M=" << len << " m=" << m
                      << " h=" << h << "), first bad shift " << bad_shift << "\n";
            return kExitFalse;
        }
    }
    std::cout << "identity-check: " << opt.trials << "/" << opt.trials
              << " trials passed (rng-seed " << opt.rng_seed << ")\n";
    return kExitOk;
}

int run_app(int argc, char** argv) {
    CLI::App app{"gcptool: construction and exact certification of Golay complementary pairs"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    int jobs = 0;
    app.add_option("--jobs", jobs, "number of worker threads (default: OpenMP runtime)")
        ->check(CLI::PositiveNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "certify pairs from a document (path or '-')");
    std::string verify_input = "-";
    verify->add_option("input", verify_input, "pair document (text or JSON); '-' reads stdin");

    // construct
    auto* construct = app.add_subcommand("construct", "expand a quaternary seed pair");
    ConstructOptions copt;
    construct->add_option("--seed", copt.seed, "builtin seed name or pair document path")->required();
    construct->add_option("-m", copt.m, "number of binary variables (length factor 2^m)")->required();
    construct->add_option("-h", copt.h, "alphabet scale (output alphabet 4h)")->required();
    construct->add_option("--perm", copt.perm, "permutation of 1..m (comma separated)")->delimiter(',');
    construct->add_option("--coeffs", copt.coeffs, "linear coefficients c_1..c_m (comma separated)")
        ->delimiter(',');
    construct->add_option("--theta", copt.theta, "offset for the first sequence");
    construct->add_option("--theta-prime", copt.theta_prime, "offset for the second sequence");
    construct->add_flag("--json", copt.json, "emit JSON instead of text");
    construct->add_option("-o,--output", copt.output, "output path (default stdout)");
    construct->add_option("--seed-dir", copt.seed_dir, "extra seed directory")->envname("GCP_SEED_DIR");

    // search
    auto* search = app.add_subcommand("search", "exhaustively enumerate pairs at a given size");
    SearchOptions sopt;
    search->add_option("-M,--length", sopt.length, "sequence length")->required();
    search->add_option("-q,--alphabet", sopt.alphabet, "alphabet size")->required();
    search->add_flag("--normalize,!--full", sopt.normalize,
                     "fix first exponents to 0 (default); --full enumerates all phases");
    search->add_flag("--count-only", sopt.count_only, "print only the number of pairs found");
    search->add_flag("--json", sopt.json, "emit JSON instead of text");
    search->add_option("--node-budget", sopt.node_budget, "abort after this many visited nodes");
    search->add_option("--max-results", sopt.max_results, "truncate output to this many pairs");
    search->add_option("-o,--output", sopt.output, "output path (default stdout)");

    // admissible
    auto* admissible = app.add_subcommand("admissible", "existence-criterion witness for a length");
    std::int64_t admissible_length = 0;
    admissible->add_option("length", admissible_length, "seed length M >= 2")->required();

    // reachable
    auto* reachable = app.add_subcommand("reachable", "constructible lengths M*2^m up to a limit");
    std::int64_t reachable_limit = 0;
    reachable->add_option("limit", reachable_limit, "inclusive upper bound")->required();

    // seeds
    auto* seeds = app.add_subcommand("seeds", "inspect the seed database");
    seeds->require_subcommand(1);
    auto* seeds_list = seeds->add_subcommand("list", "list all seeds");
    std::string seeds_dir;
    seeds_list->add_option("--seed-dir", seeds_dir, "extra seed directory")->envname("GCP_SEED_DIR");
    auto* seeds_show = seeds->add_subcommand("show", "print one seed as a pair document");
    std::string seeds_show_name;
    bool seeds_show_json = false;
    std::string seeds_show_dir;
    seeds_show->add_option("name", seeds_show_name, "seed name")->required();
    seeds_show->add_flag("--json", seeds_show_json, "emit JSON instead of text");
    seeds_show->add_option("--seed-dir", seeds_show_dir, "extra seed directory")->envname("GCP_SEED_DIR");

    // identity-check
    auto* identity = app.add_subcommand("identity-check",
                                        "exact expansion-identity self-test on random seeds");
    IdentityOptions iopt;
    identity->add_option("--trials", iopt.trials, "number of random draws (default 200)");
    identity->add_option("--min-len", iopt.min_len, "minimum seed length (default 2)");
    identity->add_option("--max-len", iopt.max_len, "maximum seed length (default 8)");
    identity->add_option("--rng-seed", iopt.rng_seed, "seed for the reproducible generator");
    identity->add_flag("--inject-fault", iopt.inject_fault,
                       "flip one constructed exponent first (checker sanity; expects failure)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (jobs > 0) {
        omp_set_num_threads(jobs);
    }

    try {
        if (*verify) {
            return run_verify(verify_input);
        }
        if (*construct) {
            copt.theta_set = construct->count("--theta") > 0;
            copt.theta_prime_set = construct->count("--theta-prime") > 0;
            return run_construct(copt);
        }
        if (*search) {
            return run_search(sopt);
        }
        if (*admissible) {
            return run_admissible(admissible_length);
        }
        if (*reachable) {
            return run_reachable(reachable_limit);
        }
        if (*seeds) {
            if (*seeds_list) {
                return run_seeds_list(seeds_dir);
            }
            return run_seeds_show(seeds_show_name, seeds_show_dir, seeds_show_json);
        }
        if (*identity) {
            return run_identity_check(iopt);
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const gcp::SearchBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
