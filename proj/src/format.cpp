#include "mincodes/format.hpp"

#include <charconv>
#include <sstream>
#include <string_view>

#include "mincodes/error.hpp"

namespace mincodes {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool parse_uint(std::string_view s, std::uint64_t& v) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool skippable(std::string_view line) {
    const auto t = tokens(line);
    return t.empty() || t.front().front() == '#';
}

}  // namespace

void write_defining_set(std::ostream& out, const DefiningSet& d, const Manifest& manifest) {
    for (const auto& [key, value] : manifest) out << "# " << key << ": " << value << '\n';
    out << d.field().name() << ' ' << d.k() << ' ' << d.n() << '\n';
    for (const Vector& c : d.columns()) out << c.to_string() << '\n';
}

std::string to_text(const DefiningSet& d, const Manifest& manifest) {
    std::ostringstream os;
    write_defining_set(os, d, manifest);
    return os.str();
}

DefiningSet parse_defining_set(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!skippable(line)) {
            have_header = true;
            break;
        }
    }
    if (!have_header) throw Error(Errc::malformed_header, "MalformedHeader(line 1): missing 'q k n' header");

    const auto head = tokens(line);
    const std::string where = "MalformedHeader(line " + std::to_string(lineno) + "): ";
    if (head.size() != 3) throw Error(Errc::malformed_header, where + "expected 'q k n'");
    FieldPtr field;
    try {
        field = parse_field(head[0]);
    } catch (const Error& e) {
        throw Error(Errc::malformed_header, where + e.what());
    }
    std::uint64_t k = 0, n = 0;
    if (!parse_uint(head[1], k) || !parse_uint(head[2], n) || k == 0)
        throw Error(Errc::malformed_header, where + "k and n must be integers with k >= 1");

    std::vector<Vector> columns;
    columns.reserve(n);
    while (columns.size() < n) {
        if (!std::getline(in, line))
            throw Error(Errc::length_mismatch, "LengthMismatch(line " + std::to_string(lineno + 1) + "): expected " +
                                                   std::to_string(n) + " columns, found " +
                                                   std::to_string(columns.size()));
        ++lineno;
        if (skippable(line)) continue;
        const auto toks = tokens(line);
        if (toks.size() != k)
            throw Error(Errc::length_mismatch, "LengthMismatch(line " + std::to_string(lineno) + "): expected " +
                                                   std::to_string(k) + " entries, found " +
                                                   std::to_string(toks.size()));
        std::vector<Element> coords(k);
        for (std::size_t j = 0; j < k; ++j) {
            std::uint64_t v = 0;
            if (!parse_uint(toks[j], v) || v >= field->q())
                throw Error(Errc::bad_element_encoding,
                            "BadElementEncoding(line " + std::to_string(lineno) + ", column " + std::to_string(j + 1) +
                                "): '" + std::string(toks[j]) + "' is not in 0.." + std::to_string(field->q() - 1));
            coords[j] = static_cast<Element>(v);
        }
        columns.emplace_back(field, std::move(coords));
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!skippable(line))
            throw Error(Errc::length_mismatch, "LengthMismatch(line " + std::to_string(lineno) +
                                                   "): more columns than the header's n = " + std::to_string(n));
    }
    return DefiningSet(field, static_cast<std::size_t>(k), std::move(columns));
}

DefiningSet parse_defining_set(const std::string& text) {
    std::istringstream is(text);
    return parse_defining_set(is);
}

}  // namespace mincodes
