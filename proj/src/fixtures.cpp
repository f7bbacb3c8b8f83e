#include "ncs/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "ncs/io.hpp"

namespace ncs {

namespace {

// Pentagon chain, complement-encoded facets (zeros are the members).
constexpr const char* kPentagonPayload = R"(# T_3
000

# T_4
0010
1000

# T_5
00110
10010
11000
)";

// Neighborly chain of 4-balls, vertex-list facets with 0-based labels.
// One block per ball A_5 .. A_10.
constexpr const char* kAltshulerPayload = R"(# A_5
01234

# A_6
01235
01245
12345

# A_7
01236
01356
01456
12346
13456
23456

# A_8
01237
01267
01357
01457
02367
03567
04567
12347
13457
23457

# A_9
01238
01268
01358
01458
01678
02368
03568
04568
04678
13458
23458
23578
23678
35678
45678

# A_10
01239
01269
01359
01459
01489
01679
02369
03569
04569
04679
13459
13489
23459
23489
23579
23679
24589
25789
26789
35679
45679
)";

// Boundary spheres of the A_i and the bold subsets B_i joined to the next
// apex; same 0-based digit-list format.
struct RawRow {
    int i;
    const char* boundary;
    const char* bold;
};

constexpr RawRow kAltshulerBoundaries[] = {
    {5,
     "0123 0124 0134 0234 1234",
     "0123 0124 1234"},
    {6,
     "0123 0124 0135 0145 0235 0245 1234 1345 2345",
     "0123 0135 0145 1234 1345 2345"},
    {7,
     "0123 0126 0135 0145 0146 0236 0356 0456 1234 1246 1345 2345 2356 2456",
     "0123 0126 0135 0145 0236 0356 0456 1234 1345 2345"},
    {8,
     "0123 0126 0135 0145 0147 0167 0236 0356 0456 0467 1234 1247 1267 1345 "
     "2345 2357 2367 2457 3567 4567",
     "0123 0126 0135 0145 0167 0236 0356 0456 0467 1345 2345 2357 2367 3567 4567"},
    {9,
     "0123 0126 0135 0145 0148 0167 0178 0236 0356 0456 0467 0478 1238 1268 "
     "1345 1348 1678 2345 2348 2357 2367 2458 2578 2678 3567 4567 4578",
     "0123 0126 0135 0145 0148 0167 0236 0356 0456 0467 1345 1348 2345 2348 "
     "2357 2367 2458 2578 2678 3567 4567"},
    {10,
     "0123 0126 0135 0145 0148 0167 0179 0189 0236 0356 0456 0467 0479 0489 "
     "1239 1269 1345 1348 1389 1679 2345 2348 2357 2367 2389 2458 2578 2678 "
     "2689 3567 4567 4579 4589 5789 6789",
     ""},
};

// Facet patterns of the pentagon 3-sphere on the 6-cube, by type.
const std::vector<std::string> kPentagonSpherePatterns = {
    "000*--",            // type 3
    "00*0+-", "0*00--", "*000+-",            // type 2
    "00**0+", "*00*0+", "**000+", "0**00-",  // type 1
    "00***0", "*00**0", "**00*0", "***000", "0***00",  // type 0
};

std::vector<std::uint64_t> parse_digit_faces(const std::string& text) {
    std::vector<std::uint64_t> faces;
    std::istringstream is(text);
    std::string word;
    while (is >> word) {
        std::uint64_t mask = 0;
        for (char c : word) {
            if (c < '0' || c > '9') throw Error("fixture: bad vertex digit");
            mask |= std::uint64_t{1} << (c - '0');
        }
        faces.push_back(mask);
    }
    return faces;
}

BBCSequence load_sequence(const char* payload, int d, int n, int index_base) {
    ParseOptions options;
    options.index_base = index_base;
    std::vector<SimplicialComplex> balls = parse_bbc_balls(payload, d, options);
    return BBCSequence::validate(std::move(balls), d, n);
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> fixtures = {
        {"pentagon", "bbc_sequence", kPentagonPayload, 1},
        {"altshuler", "bbc_sequence", kAltshulerPayload, 0},
        {"pentagon-sphere", "cubical_facets",
         [] {
             std::string payload;
             for (const auto& p : kPentagonSpherePatterns) payload += p + "\n";
             return payload;
         }(),
         0},
    };
    return fixtures;
}

const Fixture& fixture_by_name(const std::string& name) {
    for (const auto& f : builtin_fixtures())
        if (f.name == name) return f;
    throw Error("unknown fixture: " + name);
}

const BBCSequence& pentagon_sequence() {
    static const BBCSequence seq = load_sequence(kPentagonPayload, 3, 6, 1);
    return seq;
}

const BBCSequence& altshuler_sequence() {
    static const BBCSequence seq = [] {
        BBCSequence s = load_sequence(kAltshulerPayload, 5, 11, 0);
        // Table rows join vertex i-1 to the bold subset of the previous
        // boundary; the loader asserts this apex convention.
        for (int i = 6; i <= 10; ++i) {
            std::uint64_t apex = std::uint64_t{1} << (i - 1);
            for (auto f : s.ball(i).facets())
                if (!(f & apex))
                    throw std::logic_error("altshuler fixture: apex convention violated");
        }
        return s;
    }();
    return seq;
}

const std::vector<AltshulerRow>& altshuler_table() {
    static const std::vector<AltshulerRow> rows = [] {
        std::vector<AltshulerRow> out;
        const BBCSequence& seq = altshuler_sequence();
        for (const auto& raw : kAltshulerBoundaries) {
            AltshulerRow row;
            row.i = raw.i;
            row.ball = seq.ball(raw.i).facets();
            row.boundary = parse_digit_faces(raw.boundary);
            row.bold = parse_digit_faces(raw.bold);
            std::sort(row.boundary.begin(), row.boundary.end());
            std::sort(row.bold.begin(), row.bold.end());
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows;
}

const std::vector<std::string>& pentagon_sphere_patterns() {
    return kPentagonSpherePatterns;
}

std::vector<SignVector> expand_pattern(const std::string& pattern) {
    std::vector<int> stars;
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (pattern[i] == '*') stars.push_back(static_cast<int>(i));
    std::vector<SignVector> out;
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << stars.size());
         ++assign) {
        std::string s = pattern;
        for (std::size_t j = 0; j < stars.size(); ++j)
            s[static_cast<std::size_t>(stars[j])] =
                (assign & (std::uint64_t{1} << j)) ? '+' : '-';
        out.push_back(SignVector::parse(s));
    }
    return out;
}

CubicalComplex pentagon_sphere_fixture() {
    std::vector<SignVector> facets;
    for (const auto& pattern : kPentagonSpherePatterns)
        for (const auto& f : expand_pattern(pattern)) facets.push_back(f);
    return CubicalComplex(6, std::move(facets));
}

}  // namespace ncs
