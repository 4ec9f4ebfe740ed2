#include "saw/census.hpp"

#include "saw/errors.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace saw {

namespace {

using nlohmann::json;

void append_array(std::string& out, const std::vector<BigInt>& values) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i].str();
    }
    out += ']';
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("sha256 digest failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

json to_json(const std::vector<BigInt>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

BigInt parse_count(const json& node) {
    if (!node.is_string()) throw MalformedFileError("counts must be decimal strings");
    const auto& s = node.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw MalformedFileError("not a nonnegative decimal count: '" + s + "'");
    }
    return BigInt(s);
}

std::vector<BigInt> parse_counts(const json& node, std::size_t expected, const char* what) {
    if (!node.is_array() || node.size() != expected) {
        throw MalformedFileError(std::string("field '") + what + "' has the wrong shape");
    }
    std::vector<BigInt> out;
    out.reserve(expected);
    for (const auto& v : node) out.push_back(parse_count(v));
    return out;
}

template <class T>
T required(const json& doc, const char* key) {
    if (!doc.contains(key)) throw MalformedFileError(std::string("missing field '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw MalformedFileError(std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace

std::string canonical_counts(const Census& census) {
    std::string out = "c=";
    append_array(out, census.c);
    out += ";b=";
    append_array(out, census.b);
    out += ";bridge_by_height=[";
    for (std::size_t n = 0; n < census.bridge_by_height.size(); ++n) {
        if (n) out += ',';
        append_array(out, census.bridge_by_height[n]);
    }
    out += ']';
    return out;
}

std::string counts_checksum(const Census& census) { return sha256_hex(canonical_counts(census)); }

std::string serialize_census(const Census& census) {
    json doc;
    doc["format_version"] = kCensusFormatVersion;
    doc["dimension"] = census.dimension;
    doc["max_length"] = census.max_length;
    doc["c"] = to_json(census.c);
    doc["b"] = to_json(census.b);
    json rows = json::array();
    for (const auto& row : census.bridge_by_height) rows.push_back(to_json(row));
    doc["bridge_by_height"] = std::move(rows);
    doc["checksum"] = counts_checksum(census);
    return doc.dump(1) + "\n";
}

Census parse_census(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedFileError(std::string("census file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw MalformedFileError("census file must be a JSON object");

    const int version = required<int>(doc, "format_version");
    if (version != kCensusFormatVersion) {
        throw VersionMismatchError("unsupported census format_version " + std::to_string(version) + " (expected " +
                                   std::to_string(kCensusFormatVersion) + ")");
    }

    Census census;
    census.dimension = required<int>(doc, "dimension");
    census.max_length = required<int>(doc, "max_length");
    if (census.dimension < 2 || census.max_length < 0) throw MalformedFileError("bad dimension or max_length");
    const auto size = static_cast<std::size_t>(census.max_length) + 1;

    census.c = parse_counts(doc.contains("c") ? doc["c"] : json(), size, "c");
    census.b = parse_counts(doc.contains("b") ? doc["b"] : json(), size, "b");
    const json rows = doc.contains("bridge_by_height") ? doc["bridge_by_height"] : json();
    if (!rows.is_array() || rows.size() != size) throw MalformedFileError("field 'bridge_by_height' has the wrong shape");
    for (std::size_t n = 0; n < size; ++n) census.bridge_by_height.push_back(parse_counts(rows[n], n + 1, "bridge_by_height"));

    const auto stored = required<std::string>(doc, "checksum");
    const auto actual = counts_checksum(census);
    if (stored != actual) throw ChecksumMismatchError("census checksum mismatch: file says " + stored + ", counts give " + actual);
    return census;
}

void save_census(const Census& census, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << serialize_census(census);
    if (!out) throw Error("failed writing " + path.string());
}

Census load_census(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_census(buf.str());
}

Census persist_roundtrip(const Census& census, const std::filesystem::path& path) {
    save_census(census, path);
    return load_census(path);
}

}  // namespace saw
