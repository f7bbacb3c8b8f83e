#include "ncs/sign_vector.hpp"

#include <algorithm>

namespace ncs {

SignVector::SignVector(int ambient_dim, std::uint64_t support, std::uint64_t signs)
    : n_(ambient_dim), support_(support), signs_(signs & support) {
    if (n_ < 1 || n_ > 64)
        throw Error("SignVector: ambient dimension must be in [1,64], got " +
                    std::to_string(n_));
    if (support_ & ~low_mask(n_))
        throw Error("SignVector: support mask exceeds ambient dimension");
}

SignVector SignVector::top_face(int ambient_dim) {
    return SignVector(ambient_dim, 0, 0);
}

SignVector SignVector::parse(std::string_view text) {
    if (text.empty() || text.size() > 64)
        throw Error("SignVector: text length must be in [1,64]");
    std::uint64_t support = 0, signs = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        std::uint64_t bit = std::uint64_t{1} << i;
        switch (text[i]) {
            case '+': support |= bit; signs |= bit; break;
            case '-': support |= bit; break;
            case '0': break;
            default:
                throw Error(std::string("SignVector: invalid character '") +
                            text[i] + "' (expected '+', '-', '0')");
        }
    }
    return SignVector(static_cast<int>(text.size()), support, signs);
}

std::string SignVector::to_string() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i) {
        int e = entry(i);
        if (e > 0) out[static_cast<std::size_t>(i)] = '+';
        else if (e < 0) out[static_cast<std::size_t>(i)] = '-';
    }
    return out;
}

SignVector SignVector::append(int sign) const {
    if (n_ >= 64) throw Error("SignVector: cannot append beyond 64 coordinates");
    std::uint64_t bit = std::uint64_t{1} << n_;
    std::uint64_t support = support_, signs = signs_;
    if (sign > 0) { support |= bit; signs |= bit; }
    else if (sign < 0) { support |= bit; }
    return SignVector(n_ + 1, support, signs);
}

SignVector SignVector::prefix(int m) const {
    if (m < 1 || m > n_) throw Error("SignVector: prefix length out of range");
    std::uint64_t mask = low_mask(m);
    return SignVector(m, support_ & mask, signs_ & mask);
}

int dim_of(const SignVector& f) { return f.dim(); }

bool is_subface(const SignVector& g, const SignVector& f) {
    if (g.ambient_dim() != f.ambient_dim())
        throw Error("is_subface: ambient dimension mismatch");
    if (f.support() & ~g.support()) return false;
    return ((g.signs() ^ f.signs()) & f.support()) == 0;
}

std::vector<SignVector> subfaces(const SignVector& f, int k) {
    int d = f.dim();
    if (k < 0 || k > d)
        throw Error("subfaces: k out of range [0," + std::to_string(d) + "]");
    std::vector<SignVector> out;
    out.reserve(binomial(d, k) << (d - k));
    std::uint64_t zeros = f.zero_set();
    // Specialize exactly dim(f)-k of the zero entries to +/-1.
    for_each_submask_of_size(zeros, d - k, [&](std::uint64_t chosen) {
        int bits[64];
        int m = 0;
        for (std::uint64_t c = chosen; c != 0; c &= c - 1)
            bits[m++] = std::countr_zero(c);
        for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << m); ++assign) {
            std::uint64_t extra_signs = 0;
            for (int j = 0; j < m; ++j)
                if (assign & (std::uint64_t{1} << j))
                    extra_signs |= std::uint64_t{1} << bits[j];
            out.emplace_back(f.ambient_dim(), f.support() | chosen,
                             f.signs() | extra_signs);
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

SignVector sign_flip(const SignVector& f, const SignVector& eps) {
    if (f.ambient_dim() != eps.ambient_dim())
        throw Error("sign_flip: length mismatch");
    if (!eps.is_vertex())
        throw Error("sign_flip: eps must be a full +/-1 vector");
    std::uint64_t neg = eps.support() & ~eps.signs();
    return SignVector(f.ambient_dim(), f.support(), (f.signs() ^ neg) & f.support());
}

VertexSet::VertexSet(int ambient_dim, std::uint64_t member_mask)
    : ambient(ambient_dim), members(member_mask) {
    if (ambient < 1 || ambient > 64)
        throw Error("VertexSet: ambient must be in [1,64]");
    if (members & ~low_mask(ambient))
        throw Error("VertexSet: members exceed ambient range");
}

std::string complement_encode(const VertexSet& s) {
    std::string out(static_cast<std::size_t>(s.ambient), '1');
    for (int i = 0; i < s.ambient; ++i)
        if (s.members & (std::uint64_t{1} << i)) out[static_cast<std::size_t>(i)] = '0';
    return out;
}

VertexSet complement_decode(std::string_view text) {
    if (text.empty() || text.size() > 64)
        throw Error("complement_decode: length must be in [1,64]");
    std::uint64_t members = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '0') members |= std::uint64_t{1} << i;
        else if (text[i] != '1')
            throw Error(std::string("complement_decode: invalid character '") +
                        text[i] + "'");
    }
    return VertexSet(static_cast<int>(text.size()), members);
}

}  // namespace ncs
