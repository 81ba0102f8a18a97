// Core representation of self-similar, octant-based space-filling curves:
// signed-permutation algebra, the numeric bracket notation, traversal-order
// generation, exact rational gates, continuity, and class canonicalization.
//
// Coordinates: the unit cube is centered at the origin with side 6 in integer
// units, so vertices sit at (+-3,+-3,+-3) and all gate positions of interest
// (vertices, edge/facet midpoints, 1/3-points) have integer coordinates.

#ifndef SFC_CORE_HPP
#define SFC_CORE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfc {

constexpr int kMaxDim = 4;

// ---------------------------------------------------------------------------
// Signed permutations (the hyperoctahedral group B_d)

// map[j] is the signed 1-based image axis of axis j+1: y[|map[j]|-1] =
// sign(map[j]) * x[j].
struct SignedPerm {
    int d = 3;
    std::array<int8_t, kMaxDim> map{1, 2, 3, 4};

    static SignedPerm identity(int d);
    bool is_identity() const;
    SignedPerm inverse() const;
    int det() const;  // +1 or -1

    bool operator==(const SignedPerm&) const = default;
    bool operator<(const SignedPerm& o) const;
};

// compose(a, b) applies b first, then a.
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);

// All 2^d * d! signed permutations, in a fixed deterministic order.
std::vector<SignedPerm> all_signed_perms(int d);

using Vec = std::array<int, kMaxDim>;   // integer point, side-6 units
using Oct = std::array<int8_t, kMaxDim>;  // octant as +-1 sign vector

Vec apply(const SignedPerm& p, const Vec& x);
Oct apply(const SignedPerm& p, const Oct& o);

// An element of the 2^d d! x 2 group acting on curves: point symmetry plus
// optional traversal reversal.
struct CubeIsometry {
    SignedPerm perm;
    bool reversed = false;

    static CubeIsometry identity(int d) { return {SignedPerm::identity(d), false}; }
    bool operator==(const CubeIsometry&) const = default;
};

CubeIsometry compose(const CubeIsometry& a, const CubeIsometry& b);
CubeIsometry invert(const CubeIsometry& a);

// ---------------------------------------------------------------------------
// Curve descriptions (the numeric notation)

struct OctantTransform {
    SignedPerm perm;        // gamma_i
    bool reversed = false;  // chi_i; printed {...] when true
    bool operator==(const OctantTransform&) const = default;
};

// A move: nonempty set of signed axes, at most one of {j,-j}. An empty set is
// representable for notation compatibility but rejected by cube semantics.
struct Move {
    std::vector<int8_t> axes;  // sorted by |axis|
    bool operator==(const Move&) const = default;
};

struct CurveDescription {
    int d = 3;
    std::vector<OctantTransform> transforms;  // 2^d
    std::vector<Move> moves;                  // 2^d - 1
    bool operator==(const CurveDescription&) const = default;
};

class NotationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

CurveDescription parse_description(const std::string& text);
std::string format_description(const CurveDescription& desc);

// Ordered level-1 cells implied by the moves, as octant sign vectors.
// Throws NotationError if a move is empty, leaves the cube, or revisits.
std::vector<Oct> base_cells(const CurveDescription& desc);

// ---------------------------------------------------------------------------
// Traversal orders

// Cells at level k are identified by d coordinates in [0, 2^k), packed one
// byte per axis into a uint32_t (k <= 7).
using PackedCell = uint32_t;

inline PackedCell pack_cell(const Vec& c, int d) {
    PackedCell p = 0;
    for (int j = 0; j < d; ++j) p |= static_cast<PackedCell>(c[j] & 0xff) << (8 * j);
    return p;
}
inline Vec unpack_cell(PackedCell p, int d) {
    Vec c{0, 0, 0, 0};
    for (int j = 0; j < d; ++j) c[j] = (p >> (8 * j)) & 0xff;
    return c;
}

struct TraversalOrder {
    int d = 3;
    int k = 0;
    std::vector<PackedCell> cells;  // rank order
    bool operator==(const TraversalOrder&) const = default;
};

TraversalOrder traversal_order(const CurveDescription& desc, int k);
// Independent naive recursive-descent implementation, kept as a test oracle
// and as the serial reference for the block-parallel generator.
TraversalOrder traversal_order_reference(const CurveDescription& desc, int k);

TraversalOrder transform_order(const TraversalOrder& order, const CubeIsometry& iso);

// Cell centers in rank order, in side-6 units scaled by 2^k (so all
// coordinates are odd integers in [-(3*2^k), 3*2^k]).
std::vector<Vec> approximating_curve(const CurveDescription& desc, int k);

// Order-file I/O ("sfc-order d=<d> k=<k>" header).
std::string write_order(const TraversalOrder& order);
TraversalOrder read_order(const std::string& text);

// ---------------------------------------------------------------------------
// Exact rational points and gates

struct Rational {
    long long num = 0;
    long long den = 1;  // > 0

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);
    bool operator==(const Rational&) const = default;
};

Rational operator+(const Rational&, const Rational&);
Rational operator-(const Rational&, const Rational&);
Rational operator*(const Rational&, const Rational&);
Rational operator/(const Rational&, const Rational&);

using RatPoint = std::array<Rational, kMaxDim>;

struct CurveGates {
    RatPoint entrance;               // g_0
    RatPoint exit;                   // g_{2^d}
    std::vector<RatPoint> octant_in;   // entrance of octant i
    std::vector<RatPoint> octant_out;  // exit of octant i
};

// Entrance/exit gates as exact fixed points of the first/last octant chain,
// plus per-octant gates; side-6 coordinates.
CurveGates curve_gates(const CurveDescription& desc);

bool is_continuous(const CurveDescription& desc);

// ---------------------------------------------------------------------------
// Group action and canonicalization

CurveDescription apply(const CubeIsometry& iso, const CurveDescription& desc);

// The rotary reflection sigma with tau(t) = sigma(tau(1-t)), if the curve is
// symmetric. Unique when it exists.
std::optional<SignedPerm> symmetry_witness(const CurveDescription& desc);

// Representation normal form: for symmetric curves the per-octant
// (perm, direction) pairs are rewritten so the first half is forward and the
// second half reversed; asymmetric curves are returned unchanged (their
// description is unique).
CurveDescription normalize_representation(const CurveDescription& desc);

// Minimum over all 96 isometries of the serialized normalized description.
std::pair<CubeIsometry, CurveDescription> canonicalize_class(const CurveDescription& desc);

// Serialization key used by canonicalize_class (exposed for tests).
std::string description_key(const CurveDescription& desc);

}  // namespace sfc

#endif
