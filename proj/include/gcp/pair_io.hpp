#pragma once

#include "gcp/sequence.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcp {

// Raised on malformed documents (bad syntax, out-of-range exponents, length
// mismatches). Distinct from I/O failures, which surface as std::ios errors.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct PairEntry {
    std::string name;
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
    std::string provenance; // optional, empty when absent

    friend bool operator==(const PairEntry&, const PairEntry&) = default;
};

/**
 * On-disk pair collection. Two interchangeable encodings:
 *  - JSON (canonical, versioned):
 *      {"format_version":1,"q":4,"length":18,"pairs":[{"name":...,"a":[...],
 *       "b":[...],"provenance":...}]}
 *  - text: '#' comment lines; header "q=<int> n=<int>"; then per pair
 *      "A: e0 e1 ..." / "B: e0 e1 ..." with optional "# name:" and
 *      "# provenance:" comment lines attached to the following pair.
 */
struct PairDocument {
    int format_version = 1;
    std::int64_t q = 0;
    std::int64_t length = 0;
    std::vector<PairEntry> pairs;

    friend bool operator==(const PairDocument&, const PairDocument&) = default;
};

PairDocument parse_json_document(const std::string& content);
PairDocument parse_text_document(const std::string& content);
// Sniffs JSON vs text by the first non-whitespace character.
PairDocument parse_document(const std::string& content);

std::string emit_json_document(const PairDocument& doc);
// header_comments are emitted as leading '#' lines (one per element).
std::string emit_text_document(const PairDocument& doc,
                               const std::vector<std::string>& header_comments = {});

SeqPair entry_to_pair(const PairDocument& doc, const PairEntry& entry);
PairDocument document_from_pairs(std::int64_t q, std::int64_t length,
                                 const std::vector<PairEntry>& entries);

} // namespace gcp
