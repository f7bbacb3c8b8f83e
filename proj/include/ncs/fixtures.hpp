#ifndef NCS_FIXTURES_HPP
#define NCS_FIXTURES_HPP

#include <string>
#include <vector>

#include "ncs/bbc.hpp"
#include "ncs/cubical_complex.hpp"
#include "ncs/simplicial_complex.hpp"

namespace ncs {

/// A read-only embedded data set; payload is stored verbatim and parsed
/// on load under the declared kind and index base.
struct Fixture {
    std::string name;
    std::string kind;  // bbc_sequence | cubical_facets | simplicial_facets
    std::string payload;
    int index_base;
};

const std::vector<Fixture>& builtin_fixtures();
const Fixture& fixture_by_name(const std::string& name);

// The pentagon chain: the triangle and the pulling triangulations of the
// 4- and 5-gon (d = 3, n = 6).
const BBCSequence& pentagon_sequence();

// The neighborly chain of simplicial 4-balls on 5..10 vertices whose
// final boundary sphere is non-polytopal (d = 5, n = 11, 0-based labels).
const BBCSequence& altshuler_sequence();

// One table row per ball of the altshuler chain: the ball facets, the
// boundary-sphere facets and the bold subset joined to the next apex.
struct AltshulerRow {
    int i;  // ball index: A_i on vertices 0..i-1
    std::vector<std::uint64_t> ball;
    std::vector<std::uint64_t> boundary;
    std::vector<std::uint64_t> bold;
};
const std::vector<AltshulerRow>& altshuler_table();

// The thirteen facet patterns of the pentagon 3-sphere on the 6-cube,
// '*' standing for both signs; expands to the 64 facets.
const std::vector<std::string>& pentagon_sphere_patterns();
std::vector<SignVector> expand_pattern(const std::string& pattern);
CubicalComplex pentagon_sphere_fixture();

}  // namespace ncs

#endif  // NCS_FIXTURES_HPP
