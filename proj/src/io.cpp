#include "ncs/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "ncs/f_vector.hpp"

namespace ncs {

namespace {

struct Line {
    std::string text;
    int number;  // 1-based in the source
};

std::vector<Line> data_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string line(text.substr(pos, end - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] != '#')
            out.push_back({line, number});
        pos = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

[[noreturn]] void fail_line(int number, const std::string& reason) {
    throw Error("line " + std::to_string(number) + ": " + reason);
}

bool is_single_token(const std::string& line, std::string& token) {
    std::istringstream is(line);
    std::string first, second;
    if (!(is >> first)) return false;
    if (is >> second) return false;
    token = first;
    return true;
}

std::uint64_t parse_vertex_list(const Line& line, int index_base, int& max_vertex) {
    std::uint64_t mask = 0;
    std::string token;
    if (is_single_token(line.text, token) &&
        std::all_of(token.begin(), token.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        // digit-per-character form, as in facet tables
        for (char c : token) {
            int v = (c - '0') - index_base;
            if (v < 0) fail_line(line.number, "vertex below index base");
            mask |= std::uint64_t{1} << v;
            max_vertex = std::max(max_vertex, v);
        }
        return mask;
    }
    std::istringstream is(line.text);
    std::string word;
    while (is >> word) {
        int v;
        try {
            v = std::stoi(word) - index_base;
        } catch (...) {
            fail_line(line.number, "expected a vertex number, got '" + word + "'");
        }
        if (v < 0) fail_line(line.number, "vertex below index base");
        if (v >= 64) fail_line(line.number, "vertex exceeds 63");
        mask |= std::uint64_t{1} << v;
        max_vertex = std::max(max_vertex, v);
    }
    if (mask == 0) fail_line(line.number, "empty face");
    return mask;
}

enum class LineKind { VertexList, Complement, AmbiguousDigits };

LineKind classify_line(const std::string& line) {
    std::string token;
    if (!is_single_token(line, token)) return LineKind::VertexList;
    bool binary = true, digits = true;
    for (char c : token) {
        if (c != '0' && c != '1') binary = false;
        if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    }
    if (binary) return LineKind::Complement;
    if (digits) return LineKind::AmbiguousDigits;
    return LineKind::VertexList;  // will fail with a proper message later
}

}  // namespace

SimplicialComplex parse_simplicial(std::string_view text, ParseOptions options) {
    auto lines = data_lines(text);
    if (lines.empty()) throw Error("parse_simplicial: no data lines");

    Encoding encoding = options.encoding;
    if (encoding == Encoding::Auto) {
        LineKind kind = classify_line(lines.front().text);
        if (kind == LineKind::AmbiguousDigits)
            fail_line(lines.front().number,
                      "digit string is ambiguous; pass an explicit encoding "
                      "(vertices or complement)");
        encoding = (kind == LineKind::Complement) ? Encoding::Complement
                                                  : Encoding::Vertices;
    }
    if (encoding == Encoding::Sign)
        throw Error("parse_simplicial: sign encoding is for cubical complexes");

    std::vector<std::uint64_t> faces;
    int max_vertex = -1;
    int word_len = 0;
    for (const auto& line : lines) {
        if (encoding == Encoding::Complement) {
            std::string token;
            if (!is_single_token(line.text, token))
                fail_line(line.number, "expected a single 0/1 word");
            VertexSet vs = [&] {
                try {
                    return complement_decode(token);
                } catch (const Error& e) {
                    fail_line(line.number, e.what());
                }
            }();
            if (word_len == 0) word_len = vs.ambient;
            else if (word_len != vs.ambient)
                fail_line(line.number, "0/1 words of differing length");
            faces.push_back(vs.members);
        } else {
            faces.push_back(parse_vertex_list(line, options.index_base, max_vertex));
        }
    }
    int n = options.n_vertices;
    if (n == 0) n = (encoding == Encoding::Complement) ? word_len : max_vertex + 1;
    if (n <= 0) throw Error("parse_simplicial: cannot infer vertex count");
    return SimplicialComplex(n, std::move(faces));
}

CubicalComplex parse_cubical(std::string_view text) {
    auto lines = data_lines(text);
    if (lines.empty()) throw Error("parse_cubical: no data lines");
    std::vector<SignVector> facets;
    int n = 0;
    for (const auto& line : lines) {
        std::string token;
        if (!is_single_token(line.text, token))
            fail_line(line.number, "expected a single sign vector");
        try {
            facets.push_back(SignVector::parse(token));
        } catch (const Error& e) {
            fail_line(line.number, e.what());
        }
        if (n == 0) n = facets.back().ambient_dim();
        else if (n != facets.back().ambient_dim())
            fail_line(line.number, "sign vectors of differing length");
    }
    return CubicalComplex(n, std::move(facets));
}

std::vector<SimplicialComplex> parse_bbc_balls(std::string_view text, int d,
                                               ParseOptions options) {
    // split into blank-line-separated blocks of data lines
    std::vector<std::string> blocks{""};
    int number = 0;
    std::size_t pos = 0;
    bool block_has_data = false;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string line(text.substr(pos, end - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) {
            if (block_has_data) {
                blocks.emplace_back();
                block_has_data = false;
            }
        } else if (line[first] != '#') {
            blocks.back() += line + "\n";
            block_has_data = true;
        }
        pos = end + 1;
        if (end == text.size()) break;
    }
    if (!block_has_data && !blocks.empty() && blocks.back().empty()) blocks.pop_back();
    if (blocks.empty()) throw Error("parse_bbc_balls: no data");

    std::vector<SimplicialComplex> balls;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        ParseOptions per = options;
        per.n_vertices = d + static_cast<int>(j);
        balls.push_back(parse_simplicial(blocks[j], per));
    }
    return balls;
}

std::string serialize_simplicial(const SimplicialComplex& complex, Encoding encoding,
                                 int index_base) {
    std::ostringstream os;
    for (auto f : complex.facets()) {
        if (encoding == Encoding::Complement) {
            os << complement_encode(VertexSet(complex.n_vertices(), f)) << '\n';
        } else {
            bool space = false;
            for (std::uint64_t m = f; m != 0; m &= m - 1) {
                if (space) os << ' ';
                os << std::countr_zero(m) + index_base;
                space = true;
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string serialize_cubical(const CubicalComplex& complex) {
    std::ostringstream os;
    for (const auto& f : complex.facets()) os << f.to_string() << '\n';
    return os.str();
}

std::string cubical_to_json(const CubicalComplex& complex) {
    nlohmann::json j;
    j["ambient_dim"] = complex.ambient_dim();
    j["facets"] = nlohmann::json::array();
    for (const auto& f : complex.facets()) j["facets"].push_back(f.to_string());
    j["f_vector"] = f_vector_cubical(complex).counts();
    return j.dump(2);
}

bool looks_like_sign_vectors(std::string_view text) {
    auto lines = data_lines(text);
    if (lines.empty()) return false;
    return lines.front().text.find_first_of("+-") != std::string::npos;
}

}  // namespace ncs
