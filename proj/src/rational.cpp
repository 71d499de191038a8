#include "canonical24/rational.hpp"

#include <limits>

namespace canonical24 {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    if (lo > hi)
        throw DomainError("uniform_int: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)  // full 64-bit range
        return static_cast<std::int64_t>(rng());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

double uniform_unit(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Rng derive_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw FormatError("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw FormatError("invalid rational literal '" + s + "'");
    if (q.get_den() == 0)
        throw FormatError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace canonical24
