#pragma once

// The canonical ring of the cover as a module over the forms on Q, with basis
// {1, y1, y2, y3, w1, w2, w3, z}. A slot is the bitmask of the y's in its product:
// w1 = y2 y3, w2 = y1 y3, w3 = y1 y2, z = y1 y2 y3.

#include "canonical24/bipoly.hpp"
#include "canonical24/branch.hpp"
#include "canonical24/linalg.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace canonical24 {

enum Slot : unsigned {
    kOne = 0,
    kY1 = 1,
    kY2 = 2,
    kY3 = 4,
    kW3 = 3,
    kW2 = 5,
    kW1 = 6,
    kZ = 7,
};

const char* slot_name(unsigned mask);

/// Slots carried by R_m in basis order: {1, w1, w2, w3} for even m, {y1, y2, y3, z} for odd m.
std::array<unsigned, 4> slots_of_degree(int m);

/// Bidegree of the coefficient form in slot `mask` of R_m: (m N - sum of D_i, i in mask) / 2.
/// Throws DomainError when the slot parity does not match m.
BiDegree slot_bidegree(int m, unsigned mask);

/// dim R_m from the closed formula: 1, 6, then 7 + 12 m (m - 1).
long dim_R(int m);

/// Sum of the slot dimensions of R_m.
long slot_dim_sum(int m);

struct RingElement {
    int degree = 0;
    std::map<unsigned, BiPoly> components;  // absent slot = zero

    /// Component in a slot (the zero form of the right bidegree when absent).
    BiPoly component(unsigned mask) const;
    bool is_zero() const;
    /// Coefficients in slot order, each slot in monomial basis order.
    std::vector<Rational> to_vector() const;
    friend bool operator==(const RingElement& x, const RingElement& y);
};

struct GradedMap {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    RationalMatrix matrix;  // target_dim rows
};

/// Immutable ring context bound to one branch configuration.
class RingContext {
public:
    explicit RingContext(BranchConfig config);

    const BranchConfig& config() const { return config_; }

    /// Element with a single slot; checks the bidegree against the slot table.
    RingElement make(int degree, unsigned mask, BiPoly coeff) const;
    RingElement add(const RingElement& x, const RingElement& y) const;
    RingElement scale(const Rational& s, const RingElement& x) const;
    RingElement mul(const RingElement& x, const RingElement& y) const;

    /// x1..x6 = y1 u0, y1 u1, y2 u0, y2 u1, y3 v0, y3 v1.
    const std::vector<RingElement>& r1_basis() const { return r1_; }

    /// Monomials of degree m in x1..x6, exponent vectors in lexicographic order of
    /// nondecreasing index lists, and the matching products in R_m.
    std::vector<std::vector<int>> sym_monomials(int m) const;
    std::vector<RingElement> sym_products(int m) const;

private:
    BranchConfig config_;
    std::vector<RingElement> r1_;
};

/// Product of two ring elements; see RingContext::mul.
RingElement ring_mul(const RingContext& ctx, const RingElement& x, const RingElement& y);

/// Character block of a slot of R_m within to_vector(): offset and length.
struct SlotRange {
    unsigned mask;
    std::size_t offset;
    std::size_t length;
};
std::vector<SlotRange> slot_ranges(int m);

struct M2Report {
    GradedMap map;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    std::vector<Rational> kernel_vector;       // in the basis x_i x_j, i <= j
    bool kernel_is_quadric = false;            // proportional to x1 x4 - x2 x3
    std::map<std::string, std::size_t> cokernel_by_slot;
};

GradedMap build_m2(const RingContext& ctx);
M2Report analyze_m2(const RingContext& ctx);

struct WLemmaReport {
    std::size_t rows = 0, cols = 0;
    std::size_t rank = 0;
    std::size_t rank_transposed = 0;
    bool pass = false;
};

/// (P1, P2, P3) -> P1 delta1 + P2 delta2 + P3 delta3 from V(2,0)^2 + V(0,2) into V(4,3).
WLemmaReport check_W_lemma(const RingContext& ctx);

/// Greedy scan of the V(4,3) monomials in the trivial slot; exactly 11 elements.
std::vector<RingElement> choose_generators(const RingContext& ctx);

struct RelationReport {
    std::size_t dim_A3 = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
};

/// A_3 + A_1 (x) span(z_j) -> R_3; throws InternalError unless surjective.
RelationReport relation_count_deg3(const RingContext& ctx, const std::vector<RingElement>& generators);

struct GenerationEntry {
    int m = 0;
    long dim_R = 0;
    std::size_t rank = 0;
    bool pass = false;
};

/// m = 2: the generator classes are independent modulo Im(m2) and fill R_2.
/// 3 <= m <= max_degree: A_m + sum_j A_{m-2} z_j spans R_m.
std::vector<GenerationEntry> generation_check(const RingContext& ctx, const std::vector<RingElement>& generators,
                                              int max_degree);

struct HRBound {
    int m = 0;
    long dim_A = 0;
    long image_bound = 0;
    long dim_R = 0;
    long h1_lower = 0;
    bool forced = false;
    long image_rank = -1;  // exact rank of A_m -> R_m when computed, else -1
    long h1_exact = -1;    // dim R_m - image_rank when computed, else -1
};

/// Degrees 1..max_degree. When ctx is given, also the exact image rank of A_m.
std::vector<HRBound> hartshorne_rao_bounds(int max_degree, const RingContext* ctx = nullptr);

struct Numerology {
    int pg = 6;
    int q = 0;
    int chi = 0;
    int K2 = 0;
    int castelnuovo_lower = 0;
    int bmy_upper = 0;
    int expected_moduli_dim = 0;
    std::array<int, 3> family_parts{};
    int family_dim = 0;
    int aut_Q_dim = 0;
    int moduli_dim = 0;
};

Numerology numerology();

struct SeveriSolution {
    int d = 0;
    int chi = 0;
    bool excluded = false;
};

/// Integer solutions of 12 chi = (17 - d) d with 8 <= d <= 16 and chi >= 1.
std::vector<SeveriSolution> severi_solutions();

/// C(n, k) for small arguments; zero when k < 0 or k > n.
long binomial(long n, long k);

}  // namespace canonical24
