#include "gcp/seeds.hpp"

#include "gcp/pair_io.hpp"
#include "gcp/sequence.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace gcp {

namespace {

SeedRecord make_record(std::string name, std::vector<std::int64_t> phi1, std::vector<std::int64_t> phi2,
                       std::string provenance) {
    SeedRecord rec{std::move(name),
                   SeedPair(QarySeq(4, std::move(phi1)), QarySeq(4, std::move(phi2))),
                   std::move(provenance), false};
    rec.verified = is_gcp(rec.seed.as_pair());
    if (!rec.verified) {
        throw SeedIntegrityError("seed '" + rec.name + "' failed the complementarity check at load");
    }
    return rec;
}

std::vector<SeedRecord> build_builtin() {
    std::vector<SeedRecord> out;
    out.push_back(make_record("len2", {0, 0}, {0, 2},
                              "binary Golay pair (0,0)/(0,1) embedded in the quaternary alphabet"));
    out.push_back(make_record("len3", {0, 0, 2}, {0, 1, 0},
                              "found by the bundled exhaustive search (first normalized pair)"));
    out.push_back(make_record("len5", {0, 0, 0, 1, 3}, {0, 1, 3, 2, 1},
                              "found by the bundled exhaustive search (first normalized pair)"));
    out.push_back(make_record("len10",
                              {0, 0, 0, 0, 0, 2, 0, 2, 2, 0},
                              {0, 0, 2, 2, 0, 0, 0, 2, 0, 2},
                              "found by the bundled exhaustive search (first normalized pair)"));
    out.push_back(make_record("len11", {0, 1, 2, 0, 2, 1, 3, 2, 1, 1, 0}, {0, 0, 3, 3, 3, 0, 0, 1, 2, 0, 2},
                              "Craigen, Holzmann & Kharaghani, Discrete Math. 252 (2002)"));
    out.push_back(make_record("len13",
                              {0, 0, 0, 1, 2, 0, 0, 3, 0, 2, 0, 3, 1},
                              {0, 1, 2, 2, 2, 1, 2, 0, 0, 3, 2, 0, 3},
                              "found by the bundled exhaustive search (first normalized pair)"));
    out.push_back(make_record("len18",
                              {0, 0, 2, 0, 0, 2, 2, 2, 0, 0, 3, 0, 1, 0, 1, 0, 3, 0},
                              {0, 1, 0, 0, 1, 0, 2, 3, 2, 0, 2, 2, 1, 3, 3, 0, 2, 2},
                              "published (18,4) quaternary Golay pair"));
    return out;
}

} // namespace

const std::vector<SeedRecord>& builtin_seeds() {
    static const std::vector<SeedRecord> records = build_builtin();
    return records;
}

std::vector<SeedRecord> load_seed_directory(const std::string& dir) {
    std::vector<SeedRecord> out;
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& path : files) {
        std::ifstream in(path);
        if (!in) {
            throw std::ios_base::failure("cannot open seed file " + path.string());
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        PairDocument doc = parse_json_document(buf.str());
        if (doc.q != 4) {
            throw SeedIntegrityError("seed file " + path.string() + ": seeds must be quaternary (q = 4)");
        }
        std::size_t index = 0;
        for (const PairEntry& e : doc.pairs) {
            std::string name = e.name.empty() ? path.stem().string() + "#" + std::to_string(index) : e.name;
            std::string provenance = e.provenance.empty() ? "user seed file " + path.filename().string()
                                                          : e.provenance;
            out.push_back(make_record(std::move(name), e.a, e.b, std::move(provenance)));
            ++index;
        }
    }
    return out;
}

std::vector<SeedRecord> all_seeds(const std::string& dir) {
    std::vector<SeedRecord> out = builtin_seeds();
    if (!dir.empty()) {
        std::set<std::string> names;
        for (const auto& r : out) {
            names.insert(r.name);
        }
        for (SeedRecord& r : load_seed_directory(dir)) {
            if (names.insert(r.name).second) {
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::optional<SeedRecord> find_seed_by_name(const std::string& name, const std::string& dir) {
    for (const SeedRecord& r : all_seeds(dir)) {
        if (r.name == name) {
            return r;
        }
    }
    return std::nullopt;
}

std::optional<LengthWitness> is_admissible_length(std::int64_t length) {
    if (length < 2) {
        throw std::invalid_argument("is_admissible_length: length must be >= 2");
    }
    std::int64_t rest = length;
    std::int64_t s = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++s;
    }
    LengthWitness w;
    for (auto [prime, slot] : {std::pair<std::int64_t, std::int64_t*>{3, &w.b},
                               {5, &w.c},
                               {11, &w.d},
                               {13, &w.e}}) {
        while (rest % prime == 0) {
            rest /= prime;
            ++*slot;
        }
    }
    if (rest != 1) {
        return std::nullopt; // a prime outside {2,3,5,11,13} divides length
    }
    const std::int64_t u_cap = std::min(s, w.c + w.e);
    for (std::int64_t u = 0; u <= u_cap; ++u) {
        const std::int64_t a = s - u;
        if (w.b + w.c + w.d + w.e <= a + 2 * u + 1) {
            w.a = a;
            w.u = u;
            return w;
        }
    }
    return std::nullopt;
}

std::vector<std::int64_t> reachable_lengths(std::int64_t limit) {
    if (limit < 2) {
        throw std::invalid_argument("reachable_lengths: limit must be >= 2");
    }
    std::set<std::int64_t> lengths;
    for (std::int64_t seed_len = 2; seed_len * 2 <= limit; ++seed_len) {
        if (!is_admissible_length(seed_len)) {
            continue;
        }
        for (std::int64_t value = seed_len * 2; value <= limit; value *= 2) {
            lengths.insert(value);
        }
    }
    return {lengths.begin(), lengths.end()};
}

std::pair<std::int64_t, std::int64_t> attempt44_chi(std::int64_t y) {
    if (y < 0 || y > 10) {
        throw std::out_of_range("attempt44_chi: y out of [0, 10]");
    }
    // Exact integer ceilings; nothing is reduced before the final sum.
    const auto ceil_div = [](std::int64_t num, std::int64_t den) { return (num + den - 1) / den; };
    const std::int64_t chi1 =
        y + (y - 2) * ceil_div(y, 3) + ceil_div(y, 5) + 2 * ceil_div(y, 9) + 2 * ceil_div(y, 10);
    const std::int64_t chi2 = 3 * ceil_div(y, 2) + (y - 3) * ceil_div(y, 4) + ceil_div(y, 10);
    const auto mod4 = [](std::int64_t v) { return ((v % 4) + 4) % 4; };
    return {mod4(chi1), mod4(chi2)};
}

SeqPair attempt44_pair() {
    std::vector<std::int64_t> ea(44, 0);
    std::vector<std::int64_t> eb(44, 0);
    const auto mod4 = [](std::int64_t v) { return ((v % 4) + 4) % 4; };
    for (std::int64_t x1 = 0; x1 <= 1; ++x1) {
        for (std::int64_t x2 = 0; x2 <= 1; ++x2) {
            for (std::int64_t y = 0; y <= 10; ++y) {
                const auto [chi1, chi2] = attempt44_chi(y);
                // f = 2 x1 x2 + x1 + x2 + x1 (chi2 - chi1) + chi1, with the
                // difference-term multiplier x1 exactly as printed there.
                const std::int64_t f = mod4(2 * x1 * x2 + x1 + x2 + x1 * mod4(chi2 - chi1) + chi1);
                const std::int64_t index = 11 * (x2 + 2 * x1) + y;
                ea[static_cast<std::size_t>(index)] = mod4(f + 1);
                eb[static_cast<std::size_t>(index)] = mod4(f + 2 * x1 + 1);
            }
        }
    }
    return SeqPair(QarySeq(4, std::move(ea)), QarySeq(4, std::move(eb)));
}

} // namespace gcp
