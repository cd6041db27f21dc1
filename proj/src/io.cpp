#include "oporbits/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace oporbits {

namespace {

using nlohmann::json;

Cardinal cardinal_field(const json& j, const std::string& field) {
    if (!j.contains(field)) throw InputError("missing field \"" + field + "\"");
    if (!j[field].is_string())
        throw InputError("field \"" + field + "\" must be a cardinal string");
    try {
        return parse_cardinal(j[field].get<std::string>());
    } catch (const InputError& e) {
        throw InputError("field \"" + field + "\": " + e.what());
    }
}

RangeProfile profile_from_json(const json& j) {
    RangeProfile p;
    if (j.contains("blocks")) {
        if (!j["blocks"].is_array()) throw InputError("profile.blocks must be an array");
        const auto& blocks = j["blocks"];
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const json& blk = blocks[i];
            const Cardinal value = cardinal_field(blk, "value");
            bool omega_count = false;
            std::uint64_t count = 1;
            if (blk.contains("count")) {
                if (blk["count"].is_string()) {
                    if (blk["count"].get<std::string>() != "inf")
                        throw InputError("profile.blocks[" + std::to_string(i) +
                                         "].count: expected a natural number or \"inf\"");
                    omega_count = true;
                } else if (blk["count"].is_number_unsigned()) {
                    count = blk["count"].get<std::uint64_t>();
                } else {
                    throw InputError("profile.blocks[" + std::to_string(i) +
                                     "].count: expected a natural number or \"inf\"");
                }
            }
            if (omega_count) {
                // An omega-repeated summand is the tail of the sequence: it must
                // close the block list and the declared tail must be trivial.
                if (i + 1 != blocks.size())
                    throw InputError("profile.blocks[" + std::to_string(i) +
                                     "]: an \"inf\" count is only valid on the last block");
                if (j.contains("tail") && j["tail"].contains("kind") &&
                    j["tail"]["kind"].get<std::string>() != "zero")
                    throw InputError("profile.tail: conflicts with an \"inf\"-count block");
                p.tail = RangeProfile::Tail::Repeat;
                p.tail_value = value;
                return p;
            }
            p.blocks.push_back({value, count});
        }
    }
    if (j.contains("tail")) {
        const json& tail = j["tail"];
        if (!tail.contains("kind") || !tail["kind"].is_string())
            throw InputError("profile.tail.kind: expected \"zero\", \"repeat\" or \"cofinal\"");
        const std::string kind = tail["kind"].get<std::string>();
        if (kind == "zero") {
            p.tail = RangeProfile::Tail::Zero;
        } else if (kind == "repeat") {
            p.tail = RangeProfile::Tail::Repeat;
            p.tail_value = cardinal_field(tail, "value");
        } else if (kind == "cofinal") {
            p.tail = RangeProfile::Tail::Cofinal;
            p.tail_value = cardinal_field(tail, "value");
        } else {
            throw InputError("profile.tail.kind: unknown kind \"" + kind + "\"");
        }
    }
    return p;
}

json profile_to_json(const RangeProfile& p) {
    json j;
    j["blocks"] = json::array();
    for (const auto& blk : p.blocks)
        j["blocks"].push_back({{"value", format_cardinal(blk.value)}, {"count", blk.count}});
    switch (p.tail) {
        case RangeProfile::Tail::Zero:
            j["tail"] = {{"kind", "zero"}};
            break;
        case RangeProfile::Tail::Repeat:
            j["tail"] = {{"kind", "repeat"}, {"value", format_cardinal(p.tail_value)}};
            break;
        case RangeProfile::Tail::Cofinal:
            j["tail"] = {{"kind", "cofinal"}, {"value", format_cardinal(p.tail_value)}};
            break;
    }
    return j;
}

}  // namespace

OperatorDescriptor parse_descriptor(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("descriptor JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("descriptor JSON: expected an object");
    const Cardinal nullity = cardinal_field(j, "nullity");
    const Cardinal codefect = cardinal_field(j, "codefect");
    RangeProfile profile;
    if (j.contains("profile")) {
        if (!j["profile"].is_object()) throw InputError("profile must be an object");
        profile = profile_from_json(j["profile"]);
    }
    OperatorDescriptor d = make_descriptor(nullity, codefect, std::move(profile));
    if (j.contains("dim_H")) {
        const Cardinal declared = cardinal_field(j, "dim_H");
        const Cardinal derived = dim_domain(d);
        if (declared != derived)
            throw InputError("dim_H mismatch: declared " + format_cardinal(declared) +
                             ", derived " + format_cardinal(derived) + " (= nullity " +
                             format_cardinal(d.nullity) + " + iota_r " +
                             format_cardinal(profile_total(d.profile)) + ")");
    }
    if (j.contains("dim_K")) {
        const Cardinal declared = cardinal_field(j, "dim_K");
        const Cardinal derived = dim_codomain(d);
        if (declared != derived)
            throw InputError("dim_K mismatch: declared " + format_cardinal(declared) +
                             ", derived " + format_cardinal(derived) + " (= codefect " +
                             format_cardinal(d.codefect) + " + iota_r " +
                             format_cardinal(profile_total(d.profile)) + ")");
    }
    return d;
}

std::string serialize_descriptor(const OperatorDescriptor& a) {
    json j;
    j["nullity"] = format_cardinal(a.nullity);
    j["codefect"] = format_cardinal(a.codefect);
    j["profile"] = profile_to_json(a.profile);
    return j.dump(2) + "\n";
}

namespace {

std::complex<double> parse_complex_token(const std::string& token) {
    const auto parse_double = [&](const std::string& s) -> double {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        std::size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &consumed);
        } catch (const std::exception&) {
            throw InputError("matrix text: bad number \"" + s + "\" in entry \"" + token + "\"");
        }
        if (consumed != s.size())
            throw InputError("matrix text: trailing characters in entry \"" + token + "\"");
        return v;
    };

    if (token.empty()) throw InputError("matrix text: empty entry");
    std::string body = token;
    bool has_imag_suffix = false;
    if (body.back() == 'i' || body.back() == 'I') {
        has_imag_suffix = true;
        body.pop_back();
    }
    // Split at the sign that separates real and imaginary parts (not an
    // exponent sign).
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E')
            split = i;
    }
    if (!has_imag_suffix) {
        if (split != std::string::npos)
            throw InputError("matrix text: real entry with two parts \"" + token + "\"");
        return {parse_double(body), 0.0};
    }
    if (split == std::string::npos) return {0.0, parse_double(body)};
    return {parse_double(body.substr(0, split)), parse_double(body.substr(split))};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw InputError("matrix JSON: expected fields rows, cols, data");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw InputError("matrix JSON: rows and cols must be naturals");
    const auto rows = j["rows"].get<std::int64_t>();
    const auto cols = j["cols"].get<std::int64_t>();
    if (rows <= 0 || cols <= 0) throw InputError("matrix JSON: rows and cols must be >= 1");
    const json& data = j["data"];
    if (!data.is_array() || data.size() != static_cast<std::size_t>(rows * cols))
        throw InputError("matrix JSON: data must hold rows*cols = " +
                         std::to_string(rows * cols) + " entries, got " +
                         std::to_string(data.size()));
    ComplexMatrix m(rows, cols);
    for (std::int64_t idx = 0; idx < rows * cols; ++idx) {
        const json& e = data[static_cast<std::size_t>(idx)];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw InputError("matrix JSON: data[" + std::to_string(idx) +
                             "] must be a [re, im] pair");
        m(idx / cols, idx % cols) = {e[0].get<double>(), e[1].get<double>()};
    }
    if (!m.allFinite()) throw InputError("matrix JSON: entries must be finite");
    return m;
}

ComplexMatrix matrix_from_text(const std::string& text) {
    std::vector<std::vector<std::complex<double>>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream tokens(line);
        std::vector<std::complex<double>> row;
        std::string token;
        while (tokens >> token) row.push_back(parse_complex_token(token));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError("matrix text: no entries");
    const std::size_t cols = rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != cols)
            throw InputError("matrix text: row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(cols));
    ComplexMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
    if (!m.allFinite()) throw InputError("matrix text: entries must be finite");
    return m;
}

}  // namespace

ComplexMatrix parse_matrix(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') {
            json j;
            try {
                j = json::parse(text);
            } catch (const json::exception& e) {
                throw InputError(std::string("matrix JSON: ") + e.what());
            }
            return matrix_from_json(j);
        }
        break;
    }
    return matrix_from_text(text);
}

std::string serialize_matrix(const ComplexMatrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json data = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            data.push_back({m(i, k).real(), m(i, k).imag()});
    j["data"] = std::move(data);
    return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OperatorDescriptor load_descriptor_file(const std::string& path) {
    try {
        return parse_descriptor(read_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

ComplexMatrix load_matrix_file(const std::string& path) {
    try {
        return parse_matrix(read_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace oporbits
