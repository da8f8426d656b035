#include "zcs/family_io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zcs {

namespace {

char digit_char(int value) {
    return value < 10 ? static_cast<char>('0' + value)
                      : static_cast<char>('a' + value - 10);
}

int digit_value(char c, int q) {
    int v;
    if (c >= '0' && c <= '9')
        v = c - '0';
    else if (c >= 'a' && c <= 'z')
        v = c - 'a' + 10;
    else
        throw std::runtime_error(std::string("invalid digit character '") + c + "'");
    if (v >= q)
        throw std::runtime_error(std::string("digit '") + c + "' out of range for q");
    return v;
}

std::string next_line(std::istringstream& in, const char* what) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return line;
    }
    throw std::runtime_error(std::string("unexpected end of input, expected ") + what);
}

long long parse_field(const std::string& token, const std::string& key) {
    if (token.size() <= key.size() || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=')
        throw std::runtime_error("header field '" + key + "' missing or malformed");
    return std::stoll(token.substr(key.size() + 1));
}

}  // namespace

std::string render_family(const ZcsFamily& family) {
    if (family.q() > 36)
        throw std::runtime_error("zcs-v1 supports q <= 36");
    std::ostringstream out;
    out << "zcs-v1 q=" << family.q() << " M=" << family.m() << " N=" << family.n()
        << " L=" << family.length();
    if (family.claimed_z())
        out << " Z=" << *family.claimed_z();
    out << '\n';
    for (int p = 0; p < family.m(); ++p) {
        out << "set " << p << '\n';
        for (const QarySequence& seq : family[p].sequences()) {
            for (int i = 0; i < seq.length(); ++i)
                out << digit_char(seq[i]);
            out << '\n';
        }
    }
    return out.str();
}

ZcsFamily parse_family(const std::string& text) {
    std::istringstream in(text);
    std::istringstream header(next_line(in, "header"));
    std::string tag;
    header >> tag;
    if (tag != "zcs-v1")
        throw std::runtime_error("not a zcs-v1 file (bad format tag)");

    std::string tok_q, tok_m, tok_n, tok_l, tok_z;
    header >> tok_q >> tok_m >> tok_n >> tok_l;
    const long long q = parse_field(tok_q, "q");
    const long long m = parse_field(tok_m, "M");
    const long long n = parse_field(tok_n, "N");
    const long long l = parse_field(tok_l, "L");
    std::optional<int> claimed;
    if (header >> tok_z)
        claimed = static_cast<int>(parse_field(tok_z, "Z"));
    if (q < 2 || q > 36)
        throw std::runtime_error("header q out of range [2, 36]");
    if (m < 1 || n < 1 || l < 1)
        throw std::runtime_error("header M, N, L must be positive");

    std::vector<Flock> flocks;
    for (long long p = 0; p < m; ++p) {
        std::istringstream marker(next_line(in, "set marker"));
        std::string word;
        long long index = -1;
        marker >> word >> index;
        if (word != "set" || index != p)
            throw std::runtime_error("expected 'set " + std::to_string(p) + "'");
        std::vector<QarySequence> members;
        for (long long row = 0; row < n; ++row) {
            const std::string line = next_line(in, "sequence row");
            if (static_cast<long long>(line.size()) != l)
                throw std::runtime_error("sequence row has wrong length");
            std::vector<int> exps;
            exps.reserve(line.size());
            for (char c : line)
                exps.push_back(digit_value(c, static_cast<int>(q)));
            members.emplace_back(static_cast<int>(q), std::move(exps));
        }
        flocks.emplace_back(std::move(members));
    }
    std::string trailing;
    while (std::getline(in, trailing))
        if (trailing.find_first_not_of(" \t\r") != std::string::npos)
            throw std::runtime_error("unexpected trailing content");
    return ZcsFamily(std::move(flocks), claimed);
}

std::string family_to_json(const ZcsFamily& family) {
    nlohmann::json doc;
    doc["format"] = "zcs-v1";
    doc["q"] = family.q();
    doc["M"] = family.m();
    doc["N"] = family.n();
    doc["L"] = family.length();
    if (family.claimed_z())
        doc["Z"] = *family.claimed_z();
    else
        doc["Z"] = nullptr;
    nlohmann::json sets = nlohmann::json::array();
    for (const Flock& flock : family.flocks()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const QarySequence& seq : flock.sequences())
            rows.push_back(seq.exponents());
        sets.push_back(std::move(rows));
    }
    doc["sets"] = std::move(sets);
    return doc.dump(2) + "\n";
}

ZcsFamily family_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("q") || !doc.contains("sets"))
        throw std::runtime_error("JSON document missing q or sets");
    const int q = doc.at("q").get<int>();
    std::optional<int> claimed;
    if (doc.contains("Z") && !doc.at("Z").is_null())
        claimed = doc.at("Z").get<int>();
    std::vector<Flock> flocks;
    for (const auto& rows : doc.at("sets")) {
        std::vector<QarySequence> members;
        for (const auto& row : rows)
            members.emplace_back(q, row.get<std::vector<int>>());
        flocks.emplace_back(std::move(members));
    }
    return ZcsFamily(std::move(flocks), claimed);
}

}  // namespace zcs
