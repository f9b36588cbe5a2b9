#include "gcp/pair_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace gcp {

namespace {

using nlohmann::json;

void validate_document(const PairDocument& doc) {
    if (doc.format_version != 1) {
        throw ParseError("unsupported format_version " + std::to_string(doc.format_version));
    }
    if (doc.q < 2) {
        throw ParseError("document alphabet q must be >= 2");
    }
    if (doc.length < 1) {
        throw ParseError("document length must be >= 1");
    }
    for (const PairEntry& e : doc.pairs) {
        if (e.name.empty()) {
            throw ParseError("pair entries need a name");
        }
        if (e.name.find_first_of("\r\n") != std::string::npos ||
            e.provenance.find_first_of("\r\n") != std::string::npos) {
            throw ParseError("pair '" + e.name + "': name and provenance must be single-line");
        }
        if (e.a.size() != static_cast<std::size_t>(doc.length) ||
            e.b.size() != static_cast<std::size_t>(doc.length)) {
            throw ParseError("pair '" + e.name + "': sequence length does not match document length");
        }
        for (const auto& seq : {e.a, e.b}) {
            for (std::int64_t v : seq) {
                if (v < 0 || v >= doc.q) {
                    throw ParseError("pair '" + e.name + "': exponent " + std::to_string(v) +
                                     " out of [0, q-1]");
                }
            }
        }
    }
}

std::vector<std::int64_t> parse_exponent_list(const json& arr, const char* which) {
    if (!arr.is_array()) {
        throw ParseError(std::string("pair field '") + which + "' must be an array");
    }
    std::vector<std::int64_t> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer()) {
            throw ParseError(std::string("pair field '") + which + "' must contain integers");
        }
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

} // namespace

PairDocument parse_json_document(const std::string& content) {
    json root;
    try {
        root = json::parse(content);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ParseError("top-level JSON value must be an object");
    }
    PairDocument doc;
    try {
        doc.format_version = root.value("format_version", 1);
        doc.q = root.at("q").get<std::int64_t>();
        doc.length = root.at("length").get<std::int64_t>();
        const auto& pairs = root.at("pairs");
        if (!pairs.is_array()) {
            throw ParseError("'pairs' must be an array");
        }
        std::size_t index = 0;
        for (const auto& p : pairs) {
            PairEntry entry;
            entry.name = p.value("name", "pair" + std::to_string(index));
            entry.a = parse_exponent_list(p.at("a"), "a");
            entry.b = parse_exponent_list(p.at("b"), "b");
            entry.provenance = p.value("provenance", "");
            doc.pairs.push_back(std::move(entry));
            ++index;
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid pair document: ") + e.what());
    }
    validate_document(doc);
    return doc;
}

PairDocument parse_text_document(const std::string& content) {
    PairDocument doc;
    bool have_header = false;
    std::string pending_name;
    std::string pending_provenance;
    std::vector<std::int64_t> pending_a;
    bool have_a = false;
    std::size_t pair_index = 0;

    const auto parse_values = [](std::istringstream& in, const std::string& line) {
        std::vector<std::int64_t> vals;
        std::int64_t v = 0;
        while (in >> v) {
            vals.push_back(v);
        }
        if (!in.eof()) {
            throw ParseError("malformed exponent list: " + line);
        }
        return vals;
    };

    std::istringstream stream(content);
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) {
            continue;
        }
        std::string trimmed = line.substr(start);
        if (trimmed[0] == '#') {
            // Metadata comments attach to the next pair; anything before the
            // header line is free-form commentary.
            if (!have_header) {
                continue;
            }
            std::string body = trimmed.substr(1);
            std::size_t b = body.find_first_not_of(" \t");
            body = (b == std::string::npos) ? std::string() : body.substr(b);
            if (body.rfind("name:", 0) == 0) {
                pending_name = body.substr(5);
                pending_name.erase(0, pending_name.find_first_not_of(" \t"));
            } else if (body.rfind("provenance:", 0) == 0) {
                pending_provenance = body.substr(11);
                pending_provenance.erase(0, pending_provenance.find_first_not_of(" \t"));
            }
            continue;
        }
        if (!have_header) {
            long long q = 0;
            long long n = 0;
            if (std::sscanf(trimmed.c_str(), "q=%lld n=%lld", &q, &n) != 2) {
                throw ParseError("expected header 'q=<int> n=<int>', got: " + trimmed);
            }
            doc.q = q;
            doc.length = n;
            have_header = true;
            continue;
        }
        if (trimmed.rfind("A:", 0) == 0) {
            if (have_a) {
                throw ParseError("'A:' line without matching 'B:' line");
            }
            std::istringstream in(trimmed.substr(2));
            pending_a = parse_values(in, trimmed);
            have_a = true;
        } else if (trimmed.rfind("B:", 0) == 0) {
            if (!have_a) {
                throw ParseError("'B:' line without preceding 'A:' line");
            }
            std::istringstream in(trimmed.substr(2));
            PairEntry entry;
            entry.a = std::move(pending_a);
            pending_a.clear();
            entry.b = parse_values(in, trimmed);
            entry.name = pending_name.empty() ? "pair" + std::to_string(pair_index) : pending_name;
            entry.provenance = pending_provenance;
            doc.pairs.push_back(std::move(entry));
            pending_name.clear();
            pending_provenance.clear();
            have_a = false;
            ++pair_index;
        } else {
            throw ParseError("unrecognized line: " + trimmed);
        }
    }
    if (!have_header) {
        throw ParseError("missing 'q=<int> n=<int>' header");
    }
    if (have_a) {
        throw ParseError("dangling 'A:' line at end of document");
    }
    validate_document(doc);
    return doc;
}

PairDocument parse_document(const std::string& content) {
    const std::size_t start = content.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) {
        throw ParseError("empty document");
    }
    if (content[start] == '{') {
        return parse_json_document(content);
    }
    return parse_text_document(content);
}

std::string emit_json_document(const PairDocument& doc) {
    validate_document(doc);
    json root;
    root["format_version"] = doc.format_version;
    root["q"] = doc.q;
    root["length"] = doc.length;
    json pairs = json::array();
    for (const PairEntry& e : doc.pairs) {
        json p;
        p["name"] = e.name;
        p["a"] = e.a;
        p["b"] = e.b;
        if (!e.provenance.empty()) {
            p["provenance"] = e.provenance;
        }
        pairs.push_back(std::move(p));
    }
    root["pairs"] = std::move(pairs);
    return root.dump(2) + "\n";
}

std::string emit_text_document(const PairDocument& doc, const std::vector<std::string>& header_comments) {
    validate_document(doc);
    std::ostringstream os;
    for (const std::string& c : header_comments) {
        os << "# " << c << "\n";
    }
    os << "q=" << doc.q << " n=" << doc.length << "\n";
    for (const PairEntry& e : doc.pairs) {
        if (!e.name.empty()) {
            os << "# name: " << e.name << "\n";
        }
        if (!e.provenance.empty()) {
            os << "# provenance: " << e.provenance << "\n";
        }
        os << "A:";
        for (std::int64_t v : e.a) {
            os << ' ' << v;
        }
        os << "\nB:";
        for (std::int64_t v : e.b) {
            os << ' ' << v;
        }
        os << "\n";
    }
    return os.str();
}

SeqPair entry_to_pair(const PairDocument& doc, const PairEntry& entry) {
    return SeqPair(QarySeq(doc.q, entry.a), QarySeq(doc.q, entry.b));
}

PairDocument document_from_pairs(std::int64_t q, std::int64_t length,
                                 const std::vector<PairEntry>& entries) {
    PairDocument doc;
    doc.q = q;
    doc.length = length;
    doc.pairs = entries;
    validate_document(doc);
    return doc;
}

} // namespace gcp
