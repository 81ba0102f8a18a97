#include "sfc/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace sfc {

// ---------------------------------------------------------------------------
// Signed permutations

SignedPerm SignedPerm::identity(int d) {
    SignedPerm p;
    p.d = d;
    for (int j = 0; j < kMaxDim; ++j) p.map[j] = static_cast<int8_t>(j + 1);
    return p;
}

bool SignedPerm::is_identity() const {
    for (int j = 0; j < d; ++j)
        if (map[j] != j + 1) return false;
    return true;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r;
    r.d = d;
    for (int j = 0; j < d; ++j) {
        int img = map[j];
        int row = std::abs(img) - 1;
        r.map[row] = static_cast<int8_t>(img > 0 ? j + 1 : -(j + 1));
    }
    return r;
}

int SignedPerm::det() const {
    // Sign of the underlying permutation times the product of entry signs.
    int sgn = 1;
    std::array<bool, kMaxDim> seen{};
    for (int j = 0; j < d; ++j) {
        if (map[j] < 0) sgn = -sgn;
        if (seen[j]) continue;
        int len = 0, cur = j;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = std::abs(map[cur]) - 1;
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

bool SignedPerm::operator<(const SignedPerm& o) const {
    for (int j = 0; j < d; ++j)
        if (map[j] != o.map[j]) return map[j] < o.map[j];
    return false;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    if (a.d != b.d) throw NotationError("dimension mismatch in compose");
    SignedPerm r;
    r.d = a.d;
    for (int j = 0; j < a.d; ++j) {
        int t = b.map[j];
        int u = a.map[std::abs(t) - 1];
        r.map[j] = static_cast<int8_t>(t > 0 ? u : -u);
    }
    return r;
}

std::vector<SignedPerm> all_signed_perms(int d) {
    std::vector<int> axes(d);
    std::iota(axes.begin(), axes.end(), 1);
    std::vector<SignedPerm> out;
    do {
        for (int signs = 0; signs < (1 << d); ++signs) {
            SignedPerm p;
            p.d = d;
            for (int j = 0; j < d; ++j)
                p.map[j] = static_cast<int8_t>((signs >> j) & 1 ? -axes[j] : axes[j]);
            out.push_back(p);
        }
    } while (std::next_permutation(axes.begin(), axes.end()));
    return out;
}

Vec apply(const SignedPerm& p, const Vec& x) {
    Vec y{0, 0, 0, 0};
    for (int j = 0; j < p.d; ++j) {
        int img = p.map[j];
        y[std::abs(img) - 1] = img > 0 ? x[j] : -x[j];
    }
    return y;
}

Oct apply(const SignedPerm& p, const Oct& o) {
    Oct y{0, 0, 0, 0};
    for (int j = 0; j < p.d; ++j) {
        int img = p.map[j];
        y[std::abs(img) - 1] = static_cast<int8_t>(img > 0 ? o[j] : -o[j]);
    }
    return y;
}

CubeIsometry compose(const CubeIsometry& a, const CubeIsometry& b) {
    return {compose(a.perm, b.perm), a.reversed != b.reversed};
}

CubeIsometry invert(const CubeIsometry& a) { return {a.perm.inverse(), a.reversed}; }

// ---------------------------------------------------------------------------
// Notation

namespace {

int infer_dim(size_t n_entries) {
    for (int d = 1; d <= kMaxDim; ++d)
        if (static_cast<size_t>(d) == n_entries) return d;
    throw NotationError("transform has more than " + std::to_string(kMaxDim) + " entries");
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find(',', i);
        std::string tok = s.substr(i, j == std::string::npos ? j : j - i);
        // trim spaces
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw NotationError(std::string("empty entry in ") + what);
        tok = tok.substr(b, e - b + 1);
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw NotationError(std::string("bad integer in ") + what + ": '" + tok + "'");
        }
        if (pos != tok.size()) throw NotationError(std::string("bad integer in ") + what + ": '" + tok + "'");
        out.push_back(v);
        if (j == std::string::npos) break;
        i = j + 1;
    }
    return out;
}

}  // namespace

CurveDescription parse_description(const std::string& text) {
    CurveDescription desc;
    std::vector<OctantTransform> transforms;
    std::vector<Move> moves;
    bool last_was_move = true;  // a move is only legal after a transform
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        char c = text[i];
        if (c == '[' || c == '{') {
            char wrong = c == '[' ? ']' : '}';
            size_t j = text.find_first_of("]}", i + 1);
            if (j == std::string::npos || text[j] == wrong)
                throw NotationError("malformed brackets in transform");
            std::vector<int> entries = parse_int_list(text.substr(i + 1, j - i - 1), "transform");
            if (!last_was_move && !transforms.empty()) {
                // two transforms with no move between them: an empty move
                moves.push_back(Move{});
            }
            OctantTransform t;
            t.reversed = (c == '{');
            int d = infer_dim(entries.size());
            if (!transforms.empty() && d != desc.d)
                throw NotationError("transforms of inconsistent dimension");
            desc.d = d;
            t.perm.d = d;
            std::array<bool, kMaxDim> seen{};
            for (int j2 = 0; j2 < d; ++j2) {
                int v = entries[j2];
                if (v == 0 || std::abs(v) > d)
                    throw NotationError("transform entry out of range: " + std::to_string(v));
                if (seen[std::abs(v) - 1])
                    throw NotationError("duplicate axis magnitude in transform");
                seen[std::abs(v) - 1] = true;
                t.perm.map[j2] = static_cast<int8_t>(v);
            }
            transforms.push_back(t);
            last_was_move = false;
            i = j + 1;
        } else if (c == '.' && (i + 1 == text.size() ||
                                std::isspace(static_cast<unsigned char>(text[i + 1])))) {
            if (last_was_move || transforms.empty())
                throw NotationError("move with no preceding transform");
            moves.push_back(Move{});  // explicit empty move
            last_was_move = true;
            ++i;
        } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
                   text[j] != '[' && text[j] != '{')
                ++j;
            if (last_was_move || transforms.empty())
                throw NotationError("move with no preceding transform");
            std::vector<int> axes = parse_int_list(text.substr(i, j - i), "move");
            Move mv;
            std::array<bool, kMaxDim> seen{};
            for (int v : axes) {
                if (v == 0 || std::abs(v) > desc.d)
                    throw NotationError("move axis out of range: " + std::to_string(v));
                if (seen[std::abs(v) - 1])
                    throw NotationError("move contains an axis twice");
                seen[std::abs(v) - 1] = true;
                mv.axes.push_back(static_cast<int8_t>(v));
            }
            std::sort(mv.axes.begin(), mv.axes.end(),
                      [](int8_t a, int8_t b) { return std::abs(a) < std::abs(b); });
            moves.push_back(mv);
            last_was_move = true;
            i = j;
        } else {
            throw NotationError(std::string("unexpected character '") + c + "'");
        }
        skip_ws();
    }
    size_t n = size_t{1} << desc.d;
    if (transforms.size() != n)
        throw NotationError("expected " + std::to_string(n) + " transforms, got " +
                            std::to_string(transforms.size()));
    if (moves.size() != n - 1)
        throw NotationError("expected " + std::to_string(n - 1) + " moves, got " +
                            std::to_string(moves.size()));
    desc.transforms = std::move(transforms);
    desc.moves = std::move(moves);
    return desc;
}

std::string format_description(const CurveDescription& desc) {
    std::ostringstream out;
    size_t n = desc.transforms.size();
    for (size_t i = 0; i < n; ++i) {
        if (i) {
            const Move& mv = desc.moves[i - 1];
            out << ' ';
            if (mv.axes.empty()) {
                out << '.';
            } else {
                for (size_t a = 0; a < mv.axes.size(); ++a) {
                    if (a) out << ',';
                    out << static_cast<int>(mv.axes[a]);
                }
            }
            out << ' ';
        }
        const OctantTransform& t = desc.transforms[i];
        out << (t.reversed ? '{' : '[');
        for (int j = 0; j < desc.d; ++j) {
            if (j) out << ',';
            out << static_cast<int>(t.perm.map[j]);
        }
        out << (t.reversed ? ']' : '}');
    }
    return out.str();
}

std::vector<Oct> base_cells(const CurveDescription& desc) {
    int d = desc.d;
    size_t n = size_t{1} << d;
    // C_1 is low on coordinate j iff j appears in some move before -j does.
    Oct cur{0, 0, 0, 0};
    for (int j = 1; j <= d; ++j) {
        int sign = 0;
        for (const Move& mv : desc.moves) {
            for (int8_t a : mv.axes) {
                if (std::abs(a) == j) {
                    sign = a > 0 ? -1 : +1;  // first +j => start low
                    break;
                }
            }
            if (sign) break;
        }
        if (!sign) throw NotationError("axis " + std::to_string(j) + " never moves");
        cur[j - 1] = static_cast<int8_t>(sign);
    }
    std::vector<Oct> cells;
    cells.reserve(n);
    cells.push_back(cur);
    std::vector<bool> visited(n, false);
    auto idx = [d](const Oct& o) {
        int v = 0;
        for (int j = 0; j < d; ++j)
            if (o[j] > 0) v |= 1 << j;
        return v;
    };
    visited[idx(cur)] = true;
    for (const Move& mv : desc.moves) {
        if (mv.axes.empty()) throw NotationError("empty move is not a cube traversal");
        for (int8_t a : mv.axes) {
            int j = std::abs(a) - 1;
            int dir = a > 0 ? +1 : -1;
            if (cur[j] == dir) throw NotationError("move leaves the unit cube");
            cur[j] = static_cast<int8_t>(dir);
        }
        if (visited[idx(cur)]) throw NotationError("moves revisit an octant");
        visited[idx(cur)] = true;
        cells.push_back(cur);
    }
    return cells;
}

// ---------------------------------------------------------------------------
// Traversal orders

namespace {

// Apply a signed permutation to grid coordinates in [0, 2^m)^d.
inline PackedCell apply_grid(const SignedPerm& p, PackedCell cell, int m, int d) {
    int hi = (1 << m) - 1;
    PackedCell out = 0;
    for (int j = 0; j < d; ++j) {
        int v = (cell >> (8 * j)) & 0xff;
        int img = p.map[j];
        int w = img > 0 ? v : hi - v;
        out |= static_cast<PackedCell>(w) << (8 * (std::abs(img) - 1));
    }
    return out;
}

}  // namespace

TraversalOrder traversal_order(const CurveDescription& desc, int k) {
    int d = desc.d;
    std::vector<Oct> cells = base_cells(desc);
    size_t n = cells.size();
    TraversalOrder ord;
    ord.d = d;
    ord.k = 0;
    ord.cells = {0};
    for (int level = 1; level <= k; ++level) {
        TraversalOrder next;
        next.d = d;
        next.k = level;
        next.cells.resize(ord.cells.size() * n);
        int half = 1 << (level - 1);
        for (size_t b = 0; b < n; ++b) {
            PackedCell offset = 0;
            for (int j = 0; j < d; ++j)
                if (cells[b][j] > 0) offset |= static_cast<PackedCell>(half) << (8 * j);
            const OctantTransform& t = desc.transforms[b];
            size_t base = b * ord.cells.size();
            size_t m = ord.cells.size();
            for (size_t i = 0; i < m; ++i) {
                PackedCell src = ord.cells[t.reversed ? m - 1 - i : i];
                next.cells[base + i] = apply_grid(t.perm, src, level - 1, d) + offset;
            }
        }
        ord = std::move(next);
    }
    return ord;
}

namespace {

// c(i,k) computed top-down, one rank at a time.
PackedCell cell_of_rank(const CurveDescription& desc, const std::vector<Oct>& cells,
                        int k, uint64_t i /*0-based*/) {
    if (k == 0) return 0;
    int d = desc.d;
    uint64_t z = uint64_t{1} << (d * (k - 1));
    size_t b = static_cast<size_t>(i / z);
    uint64_t j = i % z;
    const OctantTransform& t = desc.transforms[b];
    if (t.reversed) j = z - 1 - j;
    PackedCell sub = cell_of_rank(desc, cells, k - 1, j);
    PackedCell res = apply_grid(t.perm, sub, k - 1, d);
    int half = 1 << (k - 1);
    for (int jj = 0; jj < d; ++jj)
        if (cells[b][jj] > 0) res += static_cast<PackedCell>(half) << (8 * jj);
    return res;
}

}  // namespace

TraversalOrder traversal_order_reference(const CurveDescription& desc, int k) {
    std::vector<Oct> cells = base_cells(desc);
    TraversalOrder ord;
    ord.d = desc.d;
    ord.k = k;
    uint64_t total = uint64_t{1} << (desc.d * k);
    ord.cells.resize(total);
    for (uint64_t i = 0; i < total; ++i)
        ord.cells[i] = cell_of_rank(desc, cells, k, i);
    return ord;
}

TraversalOrder transform_order(const TraversalOrder& order, const CubeIsometry& iso) {
    TraversalOrder out;
    out.d = order.d;
    out.k = order.k;
    size_t n = order.cells.size();
    out.cells.resize(n);
    for (size_t i = 0; i < n; ++i) {
        PackedCell c = apply_grid(iso.perm, order.cells[i], order.k, order.d);
        out.cells[iso.reversed ? n - 1 - i : i] = c;
    }
    return out;
}

std::vector<Vec> approximating_curve(const CurveDescription& desc, int k) {
    TraversalOrder ord = traversal_order(desc, k);
    std::vector<Vec> pts;
    pts.reserve(ord.cells.size());
    int scale = 1 << k;
    for (PackedCell c : ord.cells) {
        Vec v = unpack_cell(c, desc.d);
        Vec p{0, 0, 0, 0};
        for (int j = 0; j < desc.d; ++j) p[j] = 6 * v[j] + 3 - 3 * scale;
        pts.push_back(p);
    }
    return pts;
}

std::string write_order(const TraversalOrder& order) {
    std::ostringstream out;
    out << "sfc-order d=" << order.d << " k=" << order.k << "\n";
    for (PackedCell c : order.cells) {
        Vec v = unpack_cell(c, order.d);
        for (int j = 0; j < order.d; ++j) out << (j ? " " : "") << v[j];
        out << "\n";
    }
    return out.str();
}

TraversalOrder read_order(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    int d = 0, k = -1;
    if (std::sscanf(header.c_str(), "sfc-order d=%d k=%d", &d, &k) != 2 || d < 1 ||
        d > kMaxDim || k < 0)
        throw NotationError("bad order-file header: " + header);
    TraversalOrder ord;
    ord.d = d;
    ord.k = k;
    uint64_t total = uint64_t{1} << (d * k);
    int lim = 1 << k;
    for (uint64_t i = 0; i < total; ++i) {
        Vec v{0, 0, 0, 0};
        for (int j = 0; j < d; ++j) {
            if (!(in >> v[j]) || v[j] < 0 || v[j] >= lim)
                throw NotationError("bad cell coordinates in order file");
        }
        ord.cells.push_back(pack_cell(v, d));
    }
    // bijectivity
    std::vector<PackedCell> sorted = ord.cells;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) throw NotationError("duplicate cell in order file");
    return ord;
}

// ---------------------------------------------------------------------------
// Rationals and gates

namespace {

long long checked_mul(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN)
        throw std::overflow_error("rational overflow");
    return static_cast<long long>(r);
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(std::abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                    checked_mul(a.den, b.den));
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)),
                    checked_mul(a.den, b.den));
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("division by zero");
    return Rational(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

namespace {

RatPoint apply_rat(const SignedPerm& p, const RatPoint& x) {
    RatPoint y{};
    for (int j = 0; j < p.d; ++j) {
        int img = p.map[j];
        y[std::abs(img) - 1] = img > 0 ? x[j] : Rational(0) - x[j];
    }
    return y;
}

// rho_i scaled similarity: x -> x/2 + 3*s_i/2 (side-6 cube).
RatPoint apply_rho(const Oct& s, const RatPoint& x, int d) {
    RatPoint y{};
    for (int j = 0; j < d; ++j) y[j] = x[j] / Rational(2) + Rational(3 * s[j], 2);
    return y;
}

}  // namespace

CurveGates curve_gates(const CurveDescription& desc) {
    int d = desc.d;
    std::vector<Oct> cells = base_cells(desc);
    size_t n = cells.size();
    // Variables v = (e, z) in Q^{2d}. Octant 1: e = (gamma_1 w + 3 s_1)/2
    // with w = e (forward) or z (reversed); octant n symmetrically for z.
    int m = 2 * d;
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(m + 1, Rational(0)));
    auto add_block = [&](int out_base, const OctantTransform& t, const Oct& s, int in_base) {
        // out = (M w + 3 s)/2  =>  out - M w / 2 = 3 s / 2
        for (int r = 0; r < d; ++r) A[out_base + r][out_base + r] = A[out_base + r][out_base + r] + Rational(1);
        for (int j = 0; j < d; ++j) {
            int img = t.perm.map[j];
            int row = out_base + std::abs(img) - 1;
            A[row][in_base + j] = A[row][in_base + j] - Rational(img > 0 ? 1 : -1, 2);
        }
        for (int r = 0; r < d; ++r) A[out_base + r][m] = A[out_base + r][m] + Rational(3 * s[r], 2);
    };
    const OctantTransform& first = desc.transforms[0];
    const OctantTransform& last = desc.transforms[n - 1];
    add_block(0, first, cells[0], first.reversed ? d : 0);
    add_block(d, last, cells[n - 1], last.reversed ? 0 : d);
    // Gaussian elimination; the system is non-singular (contraction fixed point).
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = col; r < m; ++r)
            if (A[r][col].num != 0) { piv = r; break; }
        if (piv < 0) throw std::runtime_error("singular gate system");
        std::swap(A[col], A[piv]);
        Rational p = A[col][col];
        for (int c = col; c <= m; ++c) A[col][c] = A[col][c] / p;
        for (int r = 0; r < m; ++r) {
            if (r == col || A[r][col].num == 0) continue;
            Rational f = A[r][col];
            for (int c = col; c <= m; ++c) A[r][c] = A[r][c] - f * A[col][c];
        }
    }
    CurveGates g;
    for (int j = 0; j < d; ++j) {
        g.entrance[j] = A[j][m];
        g.exit[j] = A[d + j][m];
    }
    g.octant_in.resize(n);
    g.octant_out.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const OctantTransform& t = desc.transforms[i];
        RatPoint in = apply_rho(cells[i], apply_rat(t.perm, t.reversed ? g.exit : g.entrance), d);
        RatPoint out = apply_rho(cells[i], apply_rat(t.perm, t.reversed ? g.entrance : g.exit), d);
        g.octant_in[i] = in;
        g.octant_out[i] = out;
    }
    return g;
}

bool is_continuous(const CurveDescription& desc) {
    try {
        CurveGates g = curve_gates(desc);
        for (size_t i = 0; i + 1 < g.octant_in.size(); ++i)
            if (!(g.octant_out[i] == g.octant_in[i + 1])) return false;
        return true;
    } catch (const NotationError&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Group action and canonicalization

CurveDescription apply(const CubeIsometry& iso, const CurveDescription& desc) {
    CurveDescription cur = desc;
    if (iso.reversed) {
        CurveDescription rev;
        rev.d = desc.d;
        size_t n = desc.transforms.size();
        // The sub-curves of the reversed curve are expressed in terms of the
        // reversed curve itself, so the direction flags are unchanged.
        for (size_t i = 0; i < n; ++i)
            rev.transforms.push_back(desc.transforms[n - 1 - i]);
        for (size_t i = 0; i + 1 < n; ++i) {
            Move mv = desc.moves[n - 2 - i];
            for (int8_t& a : mv.axes) a = static_cast<int8_t>(-a);
            rev.moves.push_back(mv);
        }
        cur = std::move(rev);
    }
    const SignedPerm& g = iso.perm;
    SignedPerm ginv = g.inverse();
    CurveDescription out;
    out.d = cur.d;
    for (const OctantTransform& t : cur.transforms)
        out.transforms.push_back({compose(g, compose(t.perm, ginv)), t.reversed});
    for (const Move& mv : cur.moves) {
        Move nm;
        for (int8_t a : mv.axes) {
            int img = g.map[std::abs(a) - 1];
            nm.axes.push_back(static_cast<int8_t>(a > 0 ? img : -img));
        }
        std::sort(nm.axes.begin(), nm.axes.end(),
                  [](int8_t x, int8_t y) { return std::abs(x) < std::abs(y); });
        out.moves.push_back(nm);
    }
    return out;
}

std::optional<SignedPerm> symmetry_witness(const CurveDescription& desc) {
    std::vector<Oct> cells;
    try {
        cells = base_cells(desc);
    } catch (const NotationError&) {
        return std::nullopt;
    }
    size_t n = cells.size();
    for (const SignedPerm& sigma : all_signed_perms(desc.d)) {
        SignedPerm sigma_inv = sigma.inverse();
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            const OctantTransform& ti = desc.transforms[i];
            const OctantTransform& tj = desc.transforms[n - 1 - i];
            // psi = gamma_i^{-1} sigma gamma_{n-i}; translation vanishes iff
            // sigma maps cell n-i onto cell i.
            if (!(sfc::apply(sigma, cells[n - 1 - i]) == cells[i])) { ok = false; break; }
            SignedPerm psi = compose(ti.perm.inverse(), compose(sigma, tj.perm));
            if (ti.reversed == tj.reversed) {
                const SignedPerm& target = ti.reversed ? sigma_inv : sigma;
                if (!(psi == target)) ok = false;
            } else {
                if (!psi.is_identity()) ok = false;
            }
        }
        if (ok) return sigma;
    }
    return std::nullopt;
}

CurveDescription normalize_representation(const CurveDescription& desc) {
    std::optional<SignedPerm> w = symmetry_witness(desc);
    if (!w) return desc;
    // (gamma, rev) == (gamma sigma^{-1}, fwd) and (gamma, fwd) == (gamma sigma, rev).
    CurveDescription out = desc;
    size_t n = desc.transforms.size();
    SignedPerm sigma = *w;
    SignedPerm sigma_inv = sigma.inverse();
    for (size_t i = 0; i < n; ++i) {
        OctantTransform& t = out.transforms[i];
        bool want_rev = i >= n / 2;
        if (t.reversed == want_rev) continue;
        t.perm = compose(t.perm, t.reversed ? sigma_inv : sigma);
        t.reversed = want_rev;
    }
    return out;
}

std::string description_key(const CurveDescription& desc) {
    std::string key;
    key.reserve(desc.transforms.size() * (kMaxDim + 1) + desc.moves.size() * kMaxDim);
    for (const OctantTransform& t : desc.transforms) {
        key.push_back(t.reversed ? 1 : 0);
        for (int j = 0; j < desc.d; ++j) key.push_back(static_cast<char>(t.perm.map[j] + 8));
    }
    for (const Move& mv : desc.moves) {
        key.push_back(static_cast<char>(mv.axes.size()));
        for (int8_t a : mv.axes) key.push_back(static_cast<char>(a + 8));
    }
    return key;
}

std::pair<CubeIsometry, CurveDescription> canonicalize_class(const CurveDescription& desc) {
    std::optional<CubeIsometry> best_iso;
    CurveDescription best;
    std::string best_key;
    for (const SignedPerm& p : all_signed_perms(desc.d)) {
        for (int rev = 0; rev < 2; ++rev) {
            CubeIsometry iso{p, rev != 0};
            CurveDescription cand = normalize_representation(apply(iso, desc));
            std::string key = description_key(cand);
            if (!best_iso || key < best_key) {
                best_iso = iso;
                best = cand;
                best_key = key;
            }
        }
    }
    return {*best_iso, best};
}

}  // namespace sfc
