#include "poly_mul.hpp"

#include <cstdint>
#include <cstring>
#include <stdexcept>

namespace momentpoly::detail {

IntPoly poly_mul_school(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (mpz_sgn(a[i].get_mpz_t()) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

namespace {

size_t max_bits(const IntPoly& p) {
    size_t m = 1;
    for (const auto& c : p) {
        if (mpz_sgn(c.get_mpz_t()) < 0)
            throw std::invalid_argument("kronecker packing requires nonnegative coefficients");
        if (mpz_sgn(c.get_mpz_t()) != 0) {
            size_t b = mpz_sizeinbase(c.get_mpz_t(), 2);
            if (b > m) m = b;
        }
    }
    return m;
}

size_t ceil_log2(size_t n) {
    size_t b = 0;
    while ((size_t{1} << b) < n) ++b;
    return b;
}

constexpr size_t kWordBits = 64;

void pack(const IntPoly& p, size_t words_per_slot, std::vector<uint64_t>& buf) {
    buf.assign(p.size() * words_per_slot, 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (mpz_sgn(p[i].get_mpz_t()) == 0) continue;
        size_t count = 0;
        mpz_export(buf.data() + i * words_per_slot, &count, -1, sizeof(uint64_t), 0, 0,
                   p[i].get_mpz_t());
    }
}

}  // namespace

IntPoly poly_mul_kronecker(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    const size_t slot_bits =
        max_bits(a) + max_bits(b) + ceil_log2(std::min(a.size(), b.size())) + 1;
    const size_t words_per_slot = (slot_bits + kWordBits - 1) / kWordBits;

    std::vector<uint64_t> buf;
    BigInt pa, pb;
    pack(a, words_per_slot, buf);
    mpz_import(pa.get_mpz_t(), buf.size(), -1, sizeof(uint64_t), 0, 0, buf.data());
    pack(b, words_per_slot, buf);
    mpz_import(pb.get_mpz_t(), buf.size(), -1, sizeof(uint64_t), 0, 0, buf.data());

    BigInt prod = pa * pb;

    const size_t out_len = a.size() + b.size() - 1;
    buf.assign(out_len * words_per_slot + 1, 0);
    size_t count = 0;
    mpz_export(buf.data(), &count, -1, sizeof(uint64_t), 0, 0, prod.get_mpz_t());

    IntPoly out(out_len);
    for (size_t i = 0; i < out_len; ++i) {
        size_t w = words_per_slot;
        const uint64_t* slot = buf.data() + i * words_per_slot;
        while (w > 0 && slot[w - 1] == 0) --w;
        if (w > 0) mpz_import(out[i].get_mpz_t(), w, -1, sizeof(uint64_t), 0, 0, slot);
    }
    return out;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    // Schoolbook wins while the quadratic term is small; the crossover is
    // rough but the tree only hits poly_mul with balanced operands.
    const size_t n = std::min(a.size(), b.size());
    if (n >= 48 && a.size() * b.size() >= 4096) return poly_mul_kronecker(a, b);
    return poly_mul_school(a, b);
}

}  // namespace momentpoly::detail
