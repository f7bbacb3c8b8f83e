#ifndef NCS_IO_HPP
#define NCS_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ncs/cubical_complex.hpp"
#include "ncs/simplicial_complex.hpp"

namespace ncs {

enum class Encoding { Auto, Vertices, Complement, Sign };

struct ParseOptions {
    Encoding encoding = Encoding::Auto;
    int index_base = 0;  // for vertex lists
    int n_vertices = 0;  // 0: infer from the data
};

// One facet per line; blank lines and '#' comments are skipped.  Lines
// are vertex lists ("1 2 5"), complement-encoded 0/1 words ("00110") or,
// under an explicit Vertices encoding, digit strings ("0134").  A
// digit string containing 2..9 is rejected under Auto: it could be read
// both ways.  Errors carry the 1-based line number.
SimplicialComplex parse_simplicial(std::string_view text, ParseOptions options = {});

// One sign vector per line ('+', '-', '0').
CubicalComplex parse_cubical(std::string_view text);

// Blank-line-separated blocks, one per ball T_d, T_{d+1}, ...; the j-th
// block is parsed on d+j vertices.
std::vector<SimplicialComplex> parse_bbc_balls(std::string_view text, int d,
                                               ParseOptions options = {});

// Canonical text forms: facets in sorted order, one per line.
std::string serialize_simplicial(const SimplicialComplex& complex,
                                 Encoding encoding = Encoding::Complement,
                                 int index_base = 0);
std::string serialize_cubical(const CubicalComplex& complex);

// {"ambient_dim": n, "facets": [...], "f_vector": [...]}
std::string cubical_to_json(const CubicalComplex& complex);

// True iff the first data line looks like a sign vector.
bool looks_like_sign_vectors(std::string_view text);

}  // namespace ncs

#endif  // NCS_IO_HPP
