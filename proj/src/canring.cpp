#include "canonical24/canring.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace canonical24 {

const char* slot_name(unsigned mask)
{
    switch (mask) {
    case kOne: return "1";
    case kY1: return "y1";
    case kY2: return "y2";
    case kY3: return "y3";
    case kW1: return "w1";
    case kW2: return "w2";
    case kW3: return "w3";
    case kZ: return "z";
    default: throw DomainError("slot_name: mask out of range");
    }
}

std::array<unsigned, 4> slots_of_degree(int m)
{
    if (m % 2 == 0)
        return {kOne, kW1, kW2, kW3};
    return {kY1, kY2, kY3, kZ};
}

BiDegree slot_bidegree(int m, unsigned mask)
{
    if (m < 0 || mask > 7)
        throw DomainError("slot_bidegree: bad degree or slot");
    if (std::popcount(mask) % 2 != m % 2)
        throw DomainError("slot_bidegree: slot parity does not match the degree");
    BiDegree twice = m * kN;
    if (mask & kY1)
        twice = twice - kD12;
    if (mask & kY2)
        twice = twice - kD12;
    if (mask & kY3)
        twice = twice - kD3;
    return {twice.a / 2, twice.b / 2};
}

long dim_R(int m)
{
    if (m < 0)
        throw DomainError("dim_R: negative degree");
    if (m == 0)
        return 1;
    if (m == 1)
        return 6;
    return 7 + 12L * m * (m - 1);
}

long slot_dim_sum(int m)
{
    long sum = 0;
    for (unsigned s : slots_of_degree(m))
        sum += static_cast<long>(dim_v(slot_bidegree(m, s)));
    return sum;
}

long binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// ---------------------------------------------------------------------------

BiPoly RingElement::component(unsigned mask) const
{
    auto it = components.find(mask);
    if (it != components.end())
        return it->second;
    return BiPoly(slot_bidegree(degree, mask));
}

bool RingElement::is_zero() const
{
    return std::all_of(components.begin(), components.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

std::vector<Rational> RingElement::to_vector() const
{
    std::vector<Rational> out;
    for (unsigned s : slots_of_degree(degree)) {
        auto v = component(s).to_vector();
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

bool operator==(const RingElement& x, const RingElement& y)
{
    return x.degree == y.degree && x.to_vector() == y.to_vector();
}

std::vector<SlotRange> slot_ranges(int m)
{
    std::vector<SlotRange> out;
    std::size_t offset = 0;
    for (unsigned s : slots_of_degree(m)) {
        const std::size_t len = dim_v(slot_bidegree(m, s));
        out.push_back({s, offset, len});
        offset += len;
    }
    return out;
}

// ---------------------------------------------------------------------------

RingContext::RingContext(BranchConfig config) : config_(std::move(config))
{
    config_.validate();
    r1_ = {make(1, kY1, BiPoly::u0()), make(1, kY1, BiPoly::u1()), make(1, kY2, BiPoly::u0()),
           make(1, kY2, BiPoly::u1()), make(1, kY3, BiPoly::v0()), make(1, kY3, BiPoly::v1())};
}

RingElement RingContext::make(int degree, unsigned mask, BiPoly coeff) const
{
    if (coeff.bidegree() != slot_bidegree(degree, mask))
        throw DomainError(std::string("RingContext::make: wrong bidegree for slot ") + slot_name(mask));
    RingElement e;
    e.degree = degree;
    if (!coeff.is_zero())
        e.components.emplace(mask, std::move(coeff));
    return e;
}

RingElement RingContext::add(const RingElement& x, const RingElement& y) const
{
    if (x.degree != y.degree)
        throw DomainError("RingContext::add: degree mismatch");
    RingElement r = x;
    for (const auto& [mask, p] : y.components) {
        auto it = r.components.find(mask);
        if (it == r.components.end())
            r.components.emplace(mask, p);
        else
            it->second += p;
    }
    std::erase_if(r.components, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

RingElement RingContext::scale(const Rational& s, const RingElement& x) const
{
    RingElement r;
    r.degree = x.degree;
    if (s == 0)
        return r;
    for (const auto& [mask, p] : x.components)
        r.components.emplace(mask, s * p);
    return r;
}

RingElement RingContext::mul(const RingElement& x, const RingElement& y) const
{
    RingElement r;
    r.degree = x.degree + y.degree;
    for (const auto& [sx, px] : x.components) {
        for (const auto& [sy, py] : y.components) {
            const unsigned mask = sx ^ sy;
            const unsigned shared = sx & sy;
            BiPoly term = px * py;
            for (int i = 1; i <= 3; ++i)
                if (shared & (1u << (i - 1)))
                    term = term * config_.delta(i);
            if (term.bidegree() != slot_bidegree(r.degree, mask))
                throw InternalError("ring_mul: product bidegree does not match the slot table");
            auto it = r.components.find(mask);
            if (it == r.components.end())
                r.components.emplace(mask, std::move(term));
            else
                it->second += term;
        }
    }
    std::erase_if(r.components, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

RingElement ring_mul(const RingContext& ctx, const RingElement& x, const RingElement& y)
{
    return ctx.mul(x, y);
}

std::vector<std::vector<int>> RingContext::sym_monomials(int m) const
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < 6; ++i) {
            cur.push_back(i);
            rec(i);
            cur.pop_back();
        }
    };
    if (m >= 0)
        rec(0);
    return out;
}

std::vector<RingElement> RingContext::sym_products(int m) const
{
    std::vector<RingElement> out;
    if (m < 0)
        return out;
    RingElement one = make(0, kOne, BiPoly::constant(1));
    std::vector<RingElement> stack{one};
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(stack.back());
            return;
        }
        for (int i = start; i < 6; ++i) {
            cur.push_back(i);
            stack.push_back(mul(stack.back(), r1_[static_cast<std::size_t>(i)]));
            rec(i);
            stack.pop_back();
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

GradedMap columns_to_map(const std::vector<RingElement>& cols, int m)
{
    GradedMap g;
    g.source_dim = cols.size();
    g.target_dim = static_cast<std::size_t>(slot_dim_sum(m));
    g.matrix.assign(g.target_dim, std::vector<Rational>(g.source_dim));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto v = cols[c].to_vector();
        for (std::size_t r = 0; r < v.size(); ++r)
            g.matrix[r][c] = v[r];
    }
    return g;
}

/// Sole nonzero slot of an element, or -1 when the element is zero.
int single_slot(const RingElement& e)
{
    if (e.components.empty())
        return -1;
    if (e.components.size() != 1)
        throw InternalError("expected an element supported in one character slot");
    return static_cast<int>(e.components.begin()->first);
}

/// Echelon forms for each character slot of R_m, fed with single-slot elements.
class BlockEchelon {
public:
    explicit BlockEchelon(int m)
    {
        for (unsigned s : slots_of_degree(m))
            blocks_.emplace(s, IncrementalEchelon(dim_v(slot_bidegree(m, s))));
    }

    bool add(const RingElement& e)
    {
        const int s = single_slot(e);
        if (s < 0)
            return false;
        auto& block = blocks_.at(static_cast<unsigned>(s));
        if (block.full())
            return false;
        return block.add(e.components.begin()->second.to_vector());
    }

    bool slot_full(unsigned s) const { return blocks_.at(s).full(); }
    bool full() const
    {
        return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& kv) { return kv.second.full(); });
    }
    std::size_t rank() const
    {
        std::size_t r = 0;
        for (const auto& [s, b] : blocks_)
            r += b.rank();
        return r;
    }
    std::size_t slot_rank(unsigned s) const { return blocks_.at(s).rank(); }

private:
    std::map<unsigned, IncrementalEchelon> blocks_;
};

}  // namespace

GradedMap build_m2(const RingContext& ctx)
{
    return columns_to_map(ctx.sym_products(2), 2);
}

M2Report analyze_m2(const RingContext& ctx)
{
    M2Report rep;
    rep.map = build_m2(ctx);
    rep.rank = bareiss_rank(rep.map.matrix);
    const auto kernel = nullspace(rep.map.matrix, rep.map.source_dim);
    rep.kernel_dim = kernel.size();
    if (kernel.size() == 1) {
        rep.kernel_vector = kernel[0];
        // Columns follow sym_monomials(2): (0,3) is x1 x4, (1,2) is x2 x3.
        const auto monos = ctx.sym_monomials(2);
        std::vector<Rational> expected(monos.size());
        for (std::size_t k = 0; k < monos.size(); ++k) {
            if (monos[k] == std::vector<int>{0, 3})
                expected[k] = 1;
            if (monos[k] == std::vector<int>{1, 2})
                expected[k] = -1;
        }
        std::size_t pivot = 0;
        while (pivot < expected.size() && expected[pivot] == 0)
            ++pivot;
        const Rational ratio = rep.kernel_vector[pivot] / expected[pivot];
        bool prop = ratio != 0;
        for (std::size_t k = 0; k < expected.size() && prop; ++k)
            prop = rep.kernel_vector[k] == ratio * expected[k];
        rep.kernel_is_quadric = prop;
    }
    for (const auto& range : slot_ranges(2)) {
        RationalMatrix block;
        for (std::size_t r = 0; r < range.length; ++r)
            block.push_back(rep.map.matrix[range.offset + r]);
        rep.cokernel_by_slot[slot_name(range.mask)] = range.length - bareiss_rank(block);
    }
    return rep;
}

WLemmaReport check_W_lemma(const RingContext& ctx)
{
    const auto& cfg = ctx.config();
    std::vector<BiPoly> cols;
    for (const auto& delta : {cfg.delta1, cfg.delta2})
        for (auto [i, j] : monomial_basis({2, 0}))
            cols.push_back(BiPoly::monomial({2, 0}, i, j) * delta);
    for (auto [i, j] : monomial_basis({0, 2}))
        cols.push_back(BiPoly::monomial({0, 2}, i, j) * cfg.delta3);
    WLemmaReport rep;
    rep.rows = dim_v(kN);
    rep.cols = cols.size();
    RationalMatrix m(rep.rows, std::vector<Rational>(rep.cols));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto v = cols[c].to_vector();
        for (std::size_t r = 0; r < v.size(); ++r)
            m[r][c] = v[r];
    }
    rep.rank = bareiss_rank(m);
    rep.rank_transposed = bareiss_rank_transposed(m);
    rep.pass = rep.rank == 9 && rep.rank_transposed == 9;
    return rep;
}

std::vector<RingElement> choose_generators(const RingContext& ctx)
{
    IncrementalEchelon span(static_cast<std::size_t>(slot_dim_sum(2)));
    for (const auto& e : ctx.sym_products(2))
        span.add(e.to_vector());
    std::vector<RingElement> gens;
    for (auto [i, j] : monomial_basis(kN)) {
        if (gens.size() == 11)
            break;
        RingElement e = ctx.make(2, kOne, BiPoly::monomial(kN, i, j));
        if (span.add(e.to_vector()))
            gens.push_back(std::move(e));
    }
    if (gens.size() != 11 || !span.full())
        throw InternalError("choose_generators: found " + std::to_string(gens.size()) +
                            " generators, expected 11");
    return gens;
}

RelationReport relation_count_deg3(const RingContext& ctx, const std::vector<RingElement>& generators)
{
    std::vector<RingElement> cols = ctx.sym_products(3);
    RelationReport rep;
    rep.dim_A3 = cols.size();
    for (const auto& x : ctx.r1_basis())
        for (const auto& z : generators)
            cols.push_back(ctx.mul(x, z));
    const GradedMap g = columns_to_map(cols, 3);
    rep.source_dim = g.source_dim;
    rep.target_dim = g.target_dim;
    rep.rank = bareiss_rank(g.matrix);
    rep.kernel_dim = rep.source_dim - rep.rank;
    if (rep.rank != rep.target_dim)
        throw InternalError("relation_count_deg3: degree-3 map is not surjective (rank " +
                            std::to_string(rep.rank) + ")");
    return rep;
}

std::vector<GenerationEntry> generation_check(const RingContext& ctx, const std::vector<RingElement>& generators,
                                              int max_degree)
{
    std::vector<GenerationEntry> out;
    {
        BlockEchelon span(2);
        for (const auto& e : ctx.sym_products(2))
            span.add(e);
        const std::size_t image = span.rank();
        std::size_t added = 0;
        for (const auto& z : generators)
            added += span.add(z) ? 1 : 0;
        out.push_back({2, dim_R(2), span.rank(),
                       added == generators.size() && generators.size() == 11 && span.rank() == image + 11 &&
                           static_cast<long>(span.rank()) == dim_R(2)});
    }
    for (int m = 3; m <= max_degree; ++m) {
        BlockEchelon span(m);
        // Generators of each source family in a fixed order; stop once every block is full.
        for (const auto& e : ctx.sym_products(m)) {
            span.add(e);
            if (span.full())
                break;
        }
        if (!span.full()) {
            const auto lower = ctx.sym_products(m - 2);
            for (const auto& z : generators) {
                for (const auto& a : lower) {
                    span.add(ctx.mul(a, z));
                    if (span.full())
                        break;
                }
                if (span.full())
                    break;
            }
        }
        out.push_back({m, dim_R(m), span.rank(), static_cast<long>(span.rank()) == dim_R(m)});
    }
    return out;
}

std::vector<HRBound> hartshorne_rao_bounds(int max_degree, const RingContext* ctx)
{
    std::vector<HRBound> out;
    for (int m = 1; m <= max_degree; ++m) {
        HRBound b;
        b.m = m;
        b.dim_A = binomial(m + 5, 5);
        b.image_bound = b.dim_A - (m >= 2 ? binomial(m + 3, 5) : 0);
        b.dim_R = dim_R(m);
        b.h1_lower = b.dim_R - b.image_bound;
        b.forced = b.h1_lower > 0;
        if (ctx) {
            BlockEchelon span(m);
            for (const auto& e : ctx->sym_products(m)) {
                span.add(e);
                if (span.full())
                    break;
            }
            b.image_rank = static_cast<long>(span.rank());
            b.h1_exact = b.dim_R - b.image_rank;
        }
        out.push_back(b);
    }
    return out;
}

Numerology numerology()
{
    Numerology n;
    n.pg = static_cast<int>(dim_R(1));
    n.q = 0;
    n.chi = 1 - n.q + n.pg;
    n.K2 = 2 * kN.a * kN.b;
    n.castelnuovo_lower = 3 * n.pg - 7;
    n.bmy_upper = 9 * n.chi;
    n.expected_moduli_dim = 10 * n.chi - 2 * n.K2;
    n.family_parts = {static_cast<int>(dim_v(kD12)) - 1, static_cast<int>(dim_v(kD12)) - 1,
                      static_cast<int>(dim_v(kD3)) - 1};
    n.family_dim = n.family_parts[0] + n.family_parts[1] + n.family_parts[2];
    n.aut_Q_dim = 6;
    n.moduli_dim = n.family_dim - n.aut_Q_dim;
    return n;
}

std::vector<SeveriSolution> severi_solutions()
{
    std::vector<SeveriSolution> out;
    for (int d = 8; d <= 16; ++d) {
        const int rhs = (17 - d) * d;
        if (rhs % 12 != 0 || rhs / 12 < 1)
            continue;
        out.push_back({d, rhs / 12, d == 12});
    }
    return out;
}

}  // namespace canonical24
